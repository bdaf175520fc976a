//! Automorphism groups of factorized node graphs.
//!
//! The node sets here are the tips of coordinate arrows: one node per axis
//! plus a basepoint (simple kind), or a signed pair of nodes per axis plus
//! a basepoint (double kind). A factorization glues nodes into equivalence
//! classes, and the symmetry group of the glued figure is generated by
//! elementary moves filtered through a single prohibition rule:
//!
//! * a reversible exchange (2-cycle, single-axis inversion, signed swap) is
//!   forbidden exactly when it exchanges equivalent nodes whose class does
//!   not contain the basepoint;
//! * a cyclic move (3-cycle, signed 4-cycle) is admitted when the nodes it
//!   touches are mutually equivalent.
//!
//! Exchanging two glued points is a visible flip of the figure, while
//! cycling through a glued class is not, unless the basepoint pins the
//! class down. Closing the admitted moves reproduces, case by case, the
//! parity subgroups of [`crate::perm`]: per-axis gluing gives the
//! even-sign-change group, one big class gives the unit-determinant group,
//! and no gluing at all gives the full signed permutation group.
//!
//! Blockwise gluing is reported rather than asserted: the admitted moves
//! there generate the same group as the blockwise standard generators, and
//! [`verify_case`] compares against that closure. Whether elements also
//! preserve the class partition is reported separately, because for
//! blockwise shapes they do not.

use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::closure::GroupClosure;
use crate::perm::{
    closure_signed, enumerate_signed, sign_by_inversions, standard_generators, GeneratorKind,
    IntervalPartition, SignedPerm,
};
use crate::quotient::{EvenSubgroup, InducedFactorization, NodeKind};
use crate::Error;

/// Largest degree for plain-permutation closures (simple kind).
pub const MAX_SIMPLE_DEGREE: usize = 7;

/// Largest degree for signed closures (double kind).
pub const MAX_DOUBLE_DEGREE: usize = 5;

/// A plain (unsigned) permutation for simple-kind automorphisms.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PlainPerm {
    images: Vec<u8>,
}

impl PlainPerm {
    pub fn new(images: Vec<u8>) -> Result<Self, Error> {
        let n = images.len();
        if n == 0 {
            return Err(Error::EmptyDegree);
        }
        if n > MAX_SIMPLE_DEGREE {
            return Err(Error::DegreeTooLarge { degree: n });
        }
        let mut seen = [false; MAX_SIMPLE_DEGREE];
        for &im in &images {
            let im = im as usize;
            if im == 0 || im > n {
                return Err(Error::TargetOutOfRange { target: im as i32, degree: n });
            }
            if seen[im - 1] {
                return Err(Error::DuplicateTarget { axis: im });
            }
            seen[im - 1] = true;
        }
        Ok(PlainPerm { images })
    }

    pub fn identity(n: usize) -> Result<Self, Error> {
        PlainPerm::new((1..=n as u8).collect())
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1] as usize
    }

    /// Composition `self . first`: apply `first`, then `self`.
    pub fn compose(&self, first: &PlainPerm) -> Result<PlainPerm, Error> {
        if self.degree() != first.degree() {
            return Err(Error::DimensionMismatch {
                left: self.degree(),
                right: first.degree(),
            });
        }
        PlainPerm::new(
            (1..=self.degree())
                .map(|i| self.apply(first.apply(i)) as u8)
                .collect(),
        )
    }

    /// +1 for even permutations, -1 for odd.
    pub fn sign(&self) -> i32 {
        sign_by_inversions(self.images.iter().map(|&x| x as usize))
    }
}

impl fmt::Display for PlainPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, im) in self.images.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{im}")?;
        }
        write!(f, "]")
    }
}

/// Every plain permutation of degree n, sorted.
pub fn enumerate_plain(n: usize) -> Result<Vec<PlainPerm>, Error> {
    if n == 0 {
        return Err(Error::EmptyDegree);
    }
    if n > MAX_SIMPLE_DEGREE {
        return Err(Error::DegreeTooLarge { degree: n });
    }
    use itertools::Itertools;
    let mut out: Vec<PlainPerm> = (1..=n as u8)
        .permutations(n)
        .map(|images| PlainPerm::new(images).expect("valid permutation"))
        .collect();
    out.sort();
    Ok(out)
}

/// An elementary move on the node set.
///
/// `Swap2` and `Cycle3` act on simple-kind nodes; the other three act on
/// double-kind nodes. Axes are 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MoveGenerator {
    /// Exchange the nodes of axes i and j (simple kind).
    Swap2 { i: usize, j: usize },
    /// Cycle the nodes of axes i -> j -> k -> i (simple kind).
    Cycle3 { i: usize, j: usize, k: usize },
    /// Exchange +i and -i (double kind).
    Invert { i: usize },
    /// Exchange axes j and k keeping signs (`anti` = false) or crossing
    /// them (`anti` = true) (double kind).
    SignedSwap { j: usize, k: usize, anti: bool },
    /// The 4-cycle +j -> +k -> -j -> -k -> +j (double kind).
    Cycle4 { j: usize, k: usize },
}

impl MoveGenerator {
    pub fn kind(&self) -> NodeKind {
        match self {
            MoveGenerator::Swap2 { .. } | MoveGenerator::Cycle3 { .. } => NodeKind::Simple,
            _ => NodeKind::Double,
        }
    }

    /// True for the one-directional (cyclic) moves.
    pub fn is_cyclic(&self) -> bool {
        matches!(self, MoveGenerator::Cycle3 { .. } | MoveGenerator::Cycle4 { .. })
    }

    /// The node pairs a reversible move exchanges; empty for cyclic moves.
    fn exchanged_pairs(&self) -> Vec<(i32, i32)> {
        match *self {
            MoveGenerator::Swap2 { i, j } => alloc::vec![(i as i32, j as i32)],
            MoveGenerator::Invert { i } => alloc::vec![(i as i32, -(i as i32))],
            MoveGenerator::SignedSwap { j, k, anti } => {
                let (j, k) = (j as i32, k as i32);
                if anti {
                    alloc::vec![(j, -k), (-j, k)]
                } else {
                    alloc::vec![(j, k), (-j, -k)]
                }
            }
            _ => Vec::new(),
        }
    }

    /// Every node the move touches.
    fn touched_nodes(&self) -> Vec<i32> {
        match *self {
            MoveGenerator::Swap2 { i, j } => alloc::vec![i as i32, j as i32],
            MoveGenerator::Cycle3 { i, j, k } => alloc::vec![i as i32, j as i32, k as i32],
            MoveGenerator::Invert { i } => alloc::vec![i as i32, -(i as i32)],
            MoveGenerator::SignedSwap { j, k, .. } | MoveGenerator::Cycle4 { j, k } => {
                let (j, k) = (j as i32, k as i32);
                alloc::vec![j, -j, k, -k]
            }
        }
    }

    /// The signed permutation realizing a double-kind move.
    pub fn to_signed(&self, n: usize) -> Result<SignedPerm, Error> {
        match *self {
            MoveGenerator::Invert { i } => SignedPerm::inversion(i, n),
            MoveGenerator::SignedSwap { j, k, anti: false } => SignedPerm::swap(j, k, n),
            MoveGenerator::SignedSwap { j, k, anti: true } => SignedPerm::negated_swap(j, k, n),
            MoveGenerator::Cycle4 { j, k } => SignedPerm::four_cycle(j, k, n),
            _ => Err(Error::WrongMoveKind),
        }
    }

    /// The plain permutation realizing a simple-kind move.
    pub fn to_plain(&self, n: usize) -> Result<PlainPerm, Error> {
        let mut images: Vec<u8> = (1..=n as u8).collect();
        match *self {
            MoveGenerator::Swap2 { i, j } => {
                if i == 0 || j == 0 || i > n || j > n || i == j {
                    return Err(Error::PositionOutOfRange { pos: i.max(j), degree: n });
                }
                images.swap(i - 1, j - 1);
            }
            MoveGenerator::Cycle3 { i, j, k } => {
                if [i, j, k].iter().any(|&x| x == 0 || x > n) || i == j || j == k || i == k {
                    return Err(Error::PositionOutOfRange { pos: i.max(j).max(k), degree: n });
                }
                images[i - 1] = j as u8;
                images[j - 1] = k as u8;
                images[k - 1] = i as u8;
            }
            _ => return Err(Error::WrongMoveKind),
        }
        PlainPerm::new(images)
    }
}

impl fmt::Display for MoveGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            MoveGenerator::Swap2 { i, j } => write!(f, "({i},{j})"),
            MoveGenerator::Cycle3 { i, j, k } => write!(f, "({i},{j},{k})"),
            MoveGenerator::Invert { i } => write!(f, "(+-{i})"),
            MoveGenerator::SignedSwap { j, k, anti: false } => write!(f, "(+-{j},+-{k})"),
            MoveGenerator::SignedSwap { j, k, anti: true } => write!(f, "(+-{j},-+{k})"),
            MoveGenerator::Cycle4 { j, k } => write!(f, "(+{j},+{k},-{j},-{k})"),
        }
    }
}

/// The fixed pool of candidate moves for a kind and degree.
pub fn candidate_pool(kind: NodeKind, n: usize) -> Vec<MoveGenerator> {
    let mut pool = Vec::new();
    match kind {
        NodeKind::Simple => {
            for i in 1..=n {
                for j in (i + 1)..=n {
                    pool.push(MoveGenerator::Swap2 { i, j });
                }
            }
            for i in 1..=n {
                for j in (i + 1)..=n {
                    for k in (j + 1)..=n {
                        pool.push(MoveGenerator::Cycle3 { i, j, k });
                        pool.push(MoveGenerator::Cycle3 { i, j: k, k: j });
                    }
                }
            }
        }
        NodeKind::Double => {
            for i in 1..=n {
                pool.push(MoveGenerator::Invert { i });
            }
            for j in 1..=n {
                for k in (j + 1)..=n {
                    pool.push(MoveGenerator::SignedSwap { j, k, anti: false });
                    pool.push(MoveGenerator::SignedSwap { j, k, anti: true });
                    pool.push(MoveGenerator::Cycle4 { j, k });
                }
            }
        }
    }
    pool
}

/// Canonical factorization shapes with known predicted groups.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphShape {
    /// One class per axis (double: each signed pair glued), basepoint apart.
    Axes,
    /// All non-basepoint nodes in one class, basepoint apart.
    One,
    /// One class per partition block, basepoint apart.
    Blocks(IntervalPartition),
    /// Everything glued to the basepoint.
    Point,
}

impl FromStr for GraphShape {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s.trim() {
            "axes" => Ok(GraphShape::Axes),
            "one" => Ok(GraphShape::One),
            "point" => Ok(GraphShape::Point),
            other => match other.strip_prefix("blocks:") {
                Some(part) => Ok(GraphShape::Blocks(part.parse()?)),
                None => Err(Error::Parse(alloc::format!("unknown class shape '{other}'"))),
            },
        }
    }
}

impl fmt::Display for GraphShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphShape::Axes => write!(f, "axes"),
            GraphShape::One => write!(f, "one"),
            GraphShape::Blocks(p) => write!(f, "blocks:{p}"),
            GraphShape::Point => write!(f, "point"),
        }
    }
}

/// A node set together with its factorization into classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorizedGraph {
    fact: InducedFactorization,
}

impl FactorizedGraph {
    pub fn new(fact: InducedFactorization) -> Self {
        FactorizedGraph { fact }
    }

    /// Build one of the canonical shapes; each is the factorization
    /// induced by the matching parity subgroup.
    pub fn canonical(kind: NodeKind, n: usize, shape: &GraphShape) -> Result<Self, Error> {
        let subgroup = match shape {
            GraphShape::Axes => EvenSubgroup::trivial(n)?,
            GraphShape::One => EvenSubgroup::plus(n)?,
            GraphShape::Blocks(part) => {
                if part.n() != n {
                    return Err(Error::PartitionMismatch { expected: n, actual: part.n() });
                }
                EvenSubgroup::blockwise(part.clone())?
            }
            GraphShape::Point => EvenSubgroup::full(n)?,
        };
        Ok(FactorizedGraph::new(subgroup.induced_factorization(kind)?))
    }

    pub fn kind(&self) -> NodeKind {
        self.fact.kind()
    }

    pub fn n(&self) -> usize {
        self.fact.n()
    }

    pub fn factorization(&self) -> &InducedFactorization {
        &self.fact
    }

    /// Whether a single move survives the prohibition rule.
    pub fn admits(&self, m: &MoveGenerator) -> bool {
        if m.kind() != self.kind() {
            return false;
        }
        if m.is_cyclic() {
            let nodes = m.touched_nodes();
            return nodes
                .iter()
                .all(|&x| self.fact.equivalent(nodes[0], x));
        }
        for (a, b) in m.exchanged_pairs() {
            if self.fact.equivalent(a, b) {
                let class = self.fact.class_of(a).expect("node in range");
                if class != self.fact.basepoint_class() {
                    return false;
                }
            }
        }
        true
    }

    /// The candidate pool filtered by [`FactorizedGraph::admits`].
    pub fn allowed_generators(&self) -> Vec<MoveGenerator> {
        candidate_pool(self.kind(), self.n())
            .into_iter()
            .filter(|m| self.admits(m))
            .collect()
    }
}

impl FromStr for FactorizedGraph {
    type Err = Error;

    /// Parses `b:n=3:classes=axes` style spec strings; `b` (double) or `d`
    /// (simple), then the degree, then a [`GraphShape`].
    fn from_str(s: &str) -> Result<Self, Error> {
        let mut parts = s.trim().splitn(3, ':');
        let kind = match parts.next() {
            Some("b") => NodeKind::Double,
            Some("d") => NodeKind::Simple,
            other => {
                return Err(Error::Parse(alloc::format!(
                    "expected graph kind 'b' or 'd', got '{}'",
                    other.unwrap_or("")
                )))
            }
        };
        let n = parts
            .next()
            .and_then(|p| p.strip_prefix("n="))
            .ok_or_else(|| Error::Parse(alloc::string::String::from("expected 'n=<degree>'")))?
            .parse::<usize>()
            .map_err(|_| Error::Parse(alloc::string::String::from("bad degree")))?;
        let shape: GraphShape = parts
            .next()
            .and_then(|p| p.strip_prefix("classes="))
            .ok_or_else(|| Error::Parse(alloc::string::String::from("expected 'classes=<shape>'")))?
            .parse()?;
        FactorizedGraph::canonical(kind, n, &shape)
    }
}

impl fmt::Display for FactorizedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match self.kind() {
            NodeKind::Simple => "d",
            NodeKind::Double => "b",
        };
        write!(f, "{kind}:n={}: {}", self.n(), self.fact)
    }
}

/// The group a canonical factorization shape is predicted to produce.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CaseLabel {
    /// All plain permutations.
    Sn,
    /// Even plain permutations.
    SnPlus,
    /// All signed permutations.
    Pn,
    /// Even count of sign changes.
    PnMinus,
    /// Unit determinant.
    PnPlus,
    /// Generated by in-block quarter-turns and boundary signed swaps.
    PnPm(IntervalPartition),
}

impl fmt::Display for CaseLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CaseLabel::Sn => write!(f, "S_n"),
            CaseLabel::SnPlus => write!(f, "S_n^+"),
            CaseLabel::Pn => write!(f, "P_n"),
            CaseLabel::PnMinus => write!(f, "P_n^-"),
            CaseLabel::PnPlus => write!(f, "P_n^+"),
            CaseLabel::PnPm(p) => write!(f, "P_n^pm({p})"),
        }
    }
}

/// Match a factorization against the canonical shapes. Returns None for
/// shapes with no prediction (mixed gluings).
pub fn expected_label(g: &FactorizedGraph) -> Option<CaseLabel> {
    let fact = g.factorization();
    let n = g.n();
    if fact.class_count() == 1 {
        return Some(match g.kind() {
            NodeKind::Simple => CaseLabel::Sn,
            NodeKind::Double => CaseLabel::Pn,
        });
    }
    // Beyond the everything-glued case, predictions need the basepoint
    // isolated in its own class.
    if fact.classes()[fact.basepoint_class()].len() != 1 {
        return None;
    }
    let rest: Vec<&Vec<i32>> = fact
        .classes()
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != fact.basepoint_class())
        .map(|(_, c)| c)
        .collect();
    match g.kind() {
        NodeKind::Simple => {
            if rest.len() == 1 && rest[0].len() == n {
                Some(CaseLabel::SnPlus)
            } else {
                None
            }
        }
        NodeKind::Double => {
            // Each class must be a set of full signed pairs over a
            // consecutive run of axes, and the runs must tile 1..=n in
            // order. Collect the run lengths.
            let mut sizes = Vec::with_capacity(rest.len());
            let mut next_axis = 1usize;
            for class in &rest {
                let mut axes: Vec<u32> = class.iter().map(|x| x.unsigned_abs()).collect();
                axes.sort_unstable();
                axes.dedup();
                // Signed pairs: each axis appears exactly twice.
                if axes.len() * 2 != class.len() {
                    return None;
                }
                let lo = axes[0] as usize;
                let hi = *axes.last().unwrap() as usize;
                if lo != next_axis || hi - lo + 1 != axes.len() {
                    return None;
                }
                sizes.push(axes.len());
                next_axis = hi + 1;
            }
            if next_axis != n + 1 {
                return None;
            }
            if sizes.iter().all(|&s| s == 1) {
                Some(CaseLabel::PnMinus)
            } else if sizes.len() == 1 {
                Some(CaseLabel::PnPlus)
            } else {
                let part = IntervalPartition::new(sizes).expect("nonempty blocks");
                Some(CaseLabel::PnPm(part))
            }
        }
    }
}

/// Close the admitted double-kind moves into a signed permutation group.
pub fn aut_group_double(
    g: &FactorizedGraph,
    cap: usize,
) -> Result<GroupClosure<SignedPerm>, Error> {
    if g.kind() != NodeKind::Double {
        return Err(Error::WrongMoveKind);
    }
    if g.n() > MAX_DOUBLE_DEGREE {
        return Err(Error::DegreeTooLarge { degree: g.n() });
    }
    let gens = g
        .allowed_generators()
        .iter()
        .map(|m| m.to_signed(g.n()))
        .collect::<Result<Vec<_>, _>>()?;
    closure_signed(g.n(), &gens, cap)
}

/// Close the admitted simple-kind moves into a plain permutation group.
pub fn aut_group_simple(
    g: &FactorizedGraph,
    cap: usize,
) -> Result<GroupClosure<PlainPerm>, Error> {
    if g.kind() != NodeKind::Simple {
        return Err(Error::WrongMoveKind);
    }
    if g.n() > MAX_SIMPLE_DEGREE {
        return Err(Error::DegreeTooLarge { degree: g.n() });
    }
    let gens = g
        .allowed_generators()
        .iter()
        .map(|m| m.to_plain(g.n()))
        .collect::<Result<Vec<_>, _>>()?;
    GroupClosure::generate(
        PlainPerm::identity(g.n())?,
        &gens,
        |a, b| a.compose(b).expect("degrees validated"),
        cap,
    )
}

/// Outcome of checking one factorization against its predicted group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CaseReport {
    pub label: Option<CaseLabel>,
    pub computed_order: usize,
    pub expected_order: Option<usize>,
    /// None when there is no prediction to compare against.
    pub set_equal: Option<bool>,
    /// Whether every group element maps classes onto classes.
    pub preserves_classes: bool,
}

/// The predicted element set for a label at degree n.
pub fn expected_set_double(label: &CaseLabel, n: usize) -> Result<Vec<SignedPerm>, Error> {
    let cap = (1usize << n) * (1..=n).product::<usize>() + 1;
    let mut set = match label {
        CaseLabel::Pn => enumerate_signed(n)?,
        CaseLabel::PnMinus => enumerate_signed(n)?
            .into_iter()
            .filter(|p| p.negative_parity() == 1)
            .collect(),
        CaseLabel::PnPlus => enumerate_signed(n)?
            .into_iter()
            .filter(|p| p.det() == 1)
            .collect(),
        CaseLabel::PnPm(part) => {
            let gens = standard_generators(&GeneratorKind::Composite(part.clone()), n)?;
            closure_signed(n, &gens, cap)?.elements().to_vec()
        }
        _ => return Err(Error::WrongMoveKind),
    };
    set.sort();
    Ok(set)
}

/// The predicted element set for a simple-kind label at degree n.
pub fn expected_set_simple(label: &CaseLabel, n: usize) -> Result<Vec<PlainPerm>, Error> {
    let mut set = match label {
        CaseLabel::Sn => enumerate_plain(n)?,
        CaseLabel::SnPlus => enumerate_plain(n)?
            .into_iter()
            .filter(|p| p.sign() == 1)
            .collect(),
        _ => return Err(Error::WrongMoveKind),
    };
    set.sort();
    Ok(set)
}

/// Compute the automorphism group and compare it against the prediction.
pub fn verify_case(g: &FactorizedGraph, cap: usize) -> Result<CaseReport, Error> {
    let label = expected_label(g);
    match g.kind() {
        NodeKind::Double => {
            let closure = aut_group_double(g, cap)?;
            let expected = match &label {
                Some(l) => Some(expected_set_double(l, g.n())?),
                None => None,
            };
            let set_equal = expected.as_ref().map(|e| closure.set_equals(e));
            let preserves = closure
                .elements()
                .iter()
                .all(|p| preserves_classes_signed(p, g.factorization()));
            Ok(CaseReport {
                label,
                computed_order: closure.order(),
                expected_order: expected.map(|e| e.len()),
                set_equal,
                preserves_classes: preserves,
            })
        }
        NodeKind::Simple => {
            let closure = aut_group_simple(g, cap)?;
            let expected = match &label {
                Some(l) => Some(expected_set_simple(l, g.n())?),
                None => None,
            };
            let set_equal = expected.as_ref().map(|e| closure.set_equals(e));
            let preserves = closure
                .elements()
                .iter()
                .all(|p| preserves_classes_plain(p, g.factorization()));
            Ok(CaseReport {
                label,
                computed_order: closure.order(),
                expected_order: expected.map(|e| e.len()),
                set_equal,
                preserves_classes: preserves,
            })
        }
    }
}

fn image_is_a_class(image: &mut Vec<i32>, fact: &InducedFactorization) -> bool {
    image.sort_unstable();
    fact.classes().iter().any(|c| {
        let mut c = c.clone();
        c.sort_unstable();
        c == *image
    })
}

/// True when the signed permutation maps every class onto a class.
pub fn preserves_classes_signed(p: &SignedPerm, fact: &InducedFactorization) -> bool {
    fact.classes().iter().all(|class| {
        let mut image: Vec<i32> = class
            .iter()
            .map(|&x| if x == 0 { 0 } else { p.apply(x) })
            .collect();
        image_is_a_class(&mut image, fact)
    })
}

/// True when the plain permutation maps every class onto a class.
pub fn preserves_classes_plain(p: &PlainPerm, fact: &InducedFactorization) -> bool {
    fact.classes().iter().all(|class| {
        let mut image: Vec<i32> = class
            .iter()
            .map(|&x| if x == 0 { 0 } else { p.apply(x as usize) as i32 })
            .collect();
        image_is_a_class(&mut image, fact)
    })
}
