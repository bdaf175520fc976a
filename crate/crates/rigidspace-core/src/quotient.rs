//! Even-weight subgroups of the sign-flip group and their quotients.
//!
//! The sign-flip group on n axes is GF(2)^n under XOR. Four subgroup
//! families matter here: the trivial subgroup, the even-total-weight
//! subgroup, its blockwise refinement over an interval partition, and the
//! whole group. Each quotient is realized by a syndrome map collecting
//! per-block weight parities, so cosets are labeled by short bit strings
//! instead of being stored as element sets.
//!
//! Reducing an integer vector componentwise mod 2 first extends the
//! syndrome to integer lattices, and restricting that extension to the
//! node sets {0, e_i} and {0, +-e_i} induces the equivalence classes the
//! automorphism machinery in [`crate::topo`] consumes.

use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::discrete::{mod2_unsigned, Bit, BitVector};
use crate::perm::IntervalPartition;
use crate::Error;

/// Practical cap for exhaustive enumeration of subgroup members.
pub const ENUMERATION_CAP: usize = 20;

/// Which parity constraint cuts the subgroup out of GF(2)^n.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SubgroupVariant {
    /// Only the zero vector.
    Trivial,
    /// Even total weight.
    Plus,
    /// Even weight inside every block of the partition.
    Blockwise(IntervalPartition),
    /// No constraint at all.
    Full,
}

/// A parity-defined subgroup of the sign-flip group on n axes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EvenSubgroup {
    n: usize,
    variant: SubgroupVariant,
}

impl EvenSubgroup {
    pub fn trivial(n: usize) -> Result<Self, Error> {
        Self::with_variant(n, SubgroupVariant::Trivial)
    }

    pub fn plus(n: usize) -> Result<Self, Error> {
        Self::with_variant(n, SubgroupVariant::Plus)
    }

    pub fn blockwise(part: IntervalPartition) -> Result<Self, Error> {
        let n = part.n();
        Self::with_variant(n, SubgroupVariant::Blockwise(part))
    }

    pub fn full(n: usize) -> Result<Self, Error> {
        Self::with_variant(n, SubgroupVariant::Full)
    }

    fn with_variant(n: usize, variant: SubgroupVariant) -> Result<Self, Error> {
        if n == 0 {
            return Err(Error::EmptyDegree);
        }
        Ok(EvenSubgroup { n, variant })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn variant(&self) -> &SubgroupVariant {
        &self.variant
    }

    /// The blocks whose weight parities make up the syndrome. Trivial acts
    /// as n singleton blocks, plus as one whole block, full as no blocks.
    fn syndrome_blocks(&self) -> Vec<(usize, usize)> {
        match &self.variant {
            SubgroupVariant::Trivial => (1..=self.n).map(|i| (i, i)).collect(),
            SubgroupVariant::Plus => alloc::vec![(1, self.n)],
            SubgroupVariant::Blockwise(part) => part.blocks(),
            SubgroupVariant::Full => Vec::new(),
        }
    }

    /// Number of bits in the syndrome, i.e. log2 of the coset count.
    pub fn syndrome_len(&self) -> usize {
        self.syndrome_blocks().len()
    }

    /// Number of cosets, 2^syndrome_len.
    pub fn coset_count(&self) -> usize {
        1usize << self.syndrome_len()
    }

    /// Number of members, 2^(n - syndrome_len).
    pub fn order(&self) -> usize {
        1usize << (self.n - self.syndrome_len())
    }

    pub fn contains(&self, v: &BitVector) -> Result<bool, Error> {
        Ok(self.syndrome(v)?.is_zero())
    }

    /// Per-block weight parities of v. The kernel is exactly this subgroup
    /// and two vectors share a coset iff their syndromes agree.
    pub fn syndrome(&self, v: &BitVector) -> Result<Syndrome, Error> {
        if v.len() != self.n {
            return Err(Error::DimensionMismatch { left: self.n, right: v.len() });
        }
        let bits = self
            .syndrome_blocks()
            .iter()
            .map(|&(a, b)| {
                let ones = v.bits()[a - 1..b].iter().filter(|&&x| x == 1).count();
                (ones % 2) as Bit
            })
            .collect();
        Ok(Syndrome { bits })
    }

    /// Syndrome of an integer vector, reduced componentwise mod 2. This is
    /// the finite shadow of the lattice quotient: adding any even integer
    /// to any coordinate leaves the result unchanged.
    pub fn z_syndrome(&self, z: &[i64]) -> Result<Syndrome, Error> {
        if z.len() != self.n {
            return Err(Error::DimensionMismatch { left: self.n, right: z.len() });
        }
        let reduced = BitVector::new(z.iter().map(|&c| mod2_unsigned(c)).collect())?;
        self.syndrome(&reduced)
    }

    /// All members in lexicographic bit order.
    pub fn enumerate(&self) -> Result<Vec<BitVector>, Error> {
        if self.n > ENUMERATION_CAP {
            return Err(Error::DegreeTooLarge { degree: self.n });
        }
        let mut out = Vec::with_capacity(self.order());
        for mask in 0..(1u32 << self.n) {
            let bits: Vec<Bit> = (0..self.n)
                .map(|i| ((mask >> (self.n - 1 - i)) & 1) as Bit)
                .collect();
            let v = BitVector::new(bits)?;
            if self.contains(&v)? {
                out.push(v);
            }
        }
        Ok(out)
    }

    /// Restrict the lattice syndrome to a node set and group nodes by
    /// coset. Nodes are encoded as 0 (basepoint) and +-i (signed axes);
    /// simple kind uses only the positive axes.
    pub fn induced_factorization(&self, kind: NodeKind) -> Result<InducedFactorization, Error> {
        let nodes: Vec<i32> = match kind {
            NodeKind::Simple => (0..=self.n as i32).collect(),
            NodeKind::Double => {
                let mut v = alloc::vec![0i32];
                for i in 1..=self.n as i32 {
                    v.push(i);
                    v.push(-i);
                }
                v
            }
        };
        let mut labeled: Vec<(Syndrome, i32)> = Vec::with_capacity(nodes.len());
        for &node in &nodes {
            let mut z = alloc::vec![0i64; self.n];
            if node != 0 {
                z[(node.unsigned_abs() - 1) as usize] = if node < 0 { -1 } else { 1 };
            }
            labeled.push((self.z_syndrome(&z)?, node));
        }
        let mut classes: Vec<Vec<i32>> = Vec::new();
        let mut reps: Vec<Syndrome> = Vec::new();
        for (syn, node) in labeled {
            match reps.iter().position(|r| *r == syn) {
                Some(i) => classes[i].push(node),
                None => {
                    reps.push(syn);
                    classes.push(alloc::vec![node]);
                }
            }
        }
        InducedFactorization::new(kind, self.n, classes)
    }
}

impl fmt::Display for EvenSubgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.variant {
            SubgroupVariant::Trivial => write!(f, "H-:{}", self.n),
            SubgroupVariant::Plus => write!(f, "H+:{}", self.n),
            SubgroupVariant::Blockwise(p) => write!(f, "Hpm:{p}"),
            SubgroupVariant::Full => write!(f, "full:{}", self.n),
        }
    }
}

impl FromStr for EvenSubgroup {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let (head, tail) = s
            .split_once(':')
            .ok_or_else(|| Error::Parse(alloc::format!("expected 'kind:arg' in '{s}'")))?;
        let parse_n = |t: &str| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| Error::Parse(alloc::format!("bad dimension '{t}'")))
        };
        match head.trim() {
            "H+" => EvenSubgroup::plus(parse_n(tail)?),
            "H-" => EvenSubgroup::trivial(parse_n(tail)?),
            "Hpm" => EvenSubgroup::blockwise(tail.parse()?),
            "full" => EvenSubgroup::full(parse_n(tail)?),
            other => Err(Error::Parse(alloc::format!("unknown subgroup kind '{other}'"))),
        }
    }
}

/// Coset label: one weight parity per block. May be empty (full group,
/// single coset).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Syndrome {
    bits: Vec<Bit>,
}

impl Syndrome {
    pub fn bits(&self) -> &[Bit] {
        &self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.bits.iter().all(|&b| b == 0)
    }

    /// Componentwise XOR.
    pub fn add(&self, other: &Syndrome) -> Result<Syndrome, Error> {
        if self.len() != other.len() {
            return Err(Error::DimensionMismatch { left: self.len(), right: other.len() });
        }
        Ok(Syndrome {
            bits: self
                .bits
                .iter()
                .zip(&other.bits)
                .map(|(&a, &b)| a ^ b)
                .collect(),
        })
    }
}

impl fmt::Display for Syndrome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.bits {
            write!(f, "{b}")?;
        }
        Ok(())
    }
}

/// Whether a node set carries one node per axis or a signed pair per axis.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NodeKind {
    Simple,
    Double,
}

/// Sort key putting the basepoint first, then +1, -1, +2, -2, ...
fn node_key(x: i32) -> (u32, bool) {
    (x.unsigned_abs(), x < 0)
}

/// A partition of a node set into equivalence classes, basepoint included.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InducedFactorization {
    kind: NodeKind,
    n: usize,
    classes: Vec<Vec<i32>>,
    basepoint_class: usize,
}

impl InducedFactorization {
    /// Build from explicit classes; they must exactly cover the node set
    /// of the kind and contain the basepoint 0 once. Classes are stored in
    /// a canonical order (basepoint first, then by smallest axis).
    pub fn new(kind: NodeKind, n: usize, mut classes: Vec<Vec<i32>>) -> Result<Self, Error> {
        if n == 0 {
            return Err(Error::EmptyDegree);
        }
        for class in &mut classes {
            class.sort_by_key(|&x| node_key(x));
        }
        classes.retain(|c| !c.is_empty());
        classes.sort_by_key(|c| node_key(c[0]));
        let mut all: Vec<i32> = classes.iter().flatten().copied().collect();
        all.sort_unstable();
        let mut expected: Vec<i32> = match kind {
            NodeKind::Simple => (0..=n as i32).collect(),
            NodeKind::Double => (-(n as i32)..=n as i32).collect(),
        };
        expected.sort_unstable();
        if all != expected {
            return Err(Error::Parse(alloc::format!(
                "classes do not partition the {} node set of dimension {n}",
                match kind {
                    NodeKind::Simple => "simple",
                    NodeKind::Double => "double",
                }
            )));
        }
        let basepoint_class = classes
            .iter()
            .position(|c| c.contains(&0))
            .expect("0 is in the covered node set");
        Ok(InducedFactorization { kind, n, classes, basepoint_class })
    }

    pub fn kind(&self) -> NodeKind {
        self.kind
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn classes(&self) -> &[Vec<i32>] {
        &self.classes
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    /// Index into classes() of the class holding the basepoint.
    pub fn basepoint_class(&self) -> usize {
        self.basepoint_class
    }

    /// Index of the class holding the given node.
    pub fn class_of(&self, node: i32) -> Option<usize> {
        self.classes.iter().position(|c| c.contains(&node))
    }

    /// True when both nodes belong to the same class.
    pub fn equivalent(&self, a: i32, b: i32) -> bool {
        match (self.class_of(a), self.class_of(b)) {
            (Some(x), Some(y)) => x == y,
            _ => false,
        }
    }
}

impl fmt::Display for InducedFactorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, class) in self.classes.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{{")?;
            for (j, node) in class.iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                if *node == 0 {
                    write!(f, "0")?;
                } else {
                    write!(f, "{node:+}")?;
                }
            }
            write!(f, "}}")?;
        }
        Ok(())
    }
}
