//! Signed permutations of coordinate axes and their parity subgroups.
//!
//! A signed permutation on n axes sends axis i to a signed axis p(i), with
//! the magnitudes forming an ordinary permutation. Composition follows the
//! sign: (q . p)(i) = sign(p(i)) * q(|p(i)|). The group of all of them has
//! order 2^n * n! and is isomorphic to the group of transition matrices,
//! square matrices with exactly one +-1 entry in every row and column.
//!
//! Three parities cut out the subgroups this crate cares about:
//!
//! * determinant (unit-determinant kernel),
//! * negative-entry count (even-sign-change kernel),
//! * blockwise composite parity over an interval partition (the product of
//!   row-block determinants, see [`TransitionMatrix::subset_det`]).
//!
//! The composite parity is pinned down by the rank-order reading: the sign
//! of a row block is the sign of the bijection from the rank order of its
//! rows to the rank order of the columns its entries occupy, times the
//! product of the entries. This reading reduces to the determinant when the
//! partition has a single block and to the negative-entry parity when every
//! block is a singleton. Unlike those two extremes it is *not* a group
//! homomorphism in general, which has consequences the verification suite
//! reports rather than hides; see the crate's integration tests.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use itertools::Itertools;

use crate::closure::GroupClosure;
use crate::{Error, MAX_DEGREE};

/// A signed permutation on axes 1..=n, stored as the signed targets of the
/// positive axes. Displays as `[+2,-1]` style literals.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignedPerm {
    targets: Vec<i32>,
}

impl SignedPerm {
    /// Build from signed targets; `targets[i-1]` is p(i).
    pub fn new(targets: Vec<i32>) -> Result<Self, Error> {
        let n = targets.len();
        if n == 0 {
            return Err(Error::EmptyDegree);
        }
        if n > MAX_DEGREE {
            return Err(Error::DegreeTooLarge { degree: n });
        }
        let mut seen = [false; MAX_DEGREE];
        for &t in &targets {
            let mag = t.unsigned_abs() as usize;
            if t == 0 || mag > n {
                return Err(Error::TargetOutOfRange { target: t, degree: n });
            }
            if seen[mag - 1] {
                return Err(Error::DuplicateTarget { axis: mag });
            }
            seen[mag - 1] = true;
        }
        Ok(SignedPerm { targets })
    }

    pub fn identity(n: usize) -> Result<Self, Error> {
        SignedPerm::new((1..=n as i32).collect())
    }

    pub fn degree(&self) -> usize {
        self.targets.len()
    }

    pub fn targets(&self) -> &[i32] {
        &self.targets
    }

    /// Apply to a signed axis; the map is odd, p(-i) = -p(i).
    pub fn apply(&self, i: i32) -> i32 {
        let mag = i.unsigned_abs() as usize;
        debug_assert!(mag >= 1 && mag <= self.degree());
        let out = self.targets[mag - 1];
        if i < 0 {
            -out
        } else {
            out
        }
    }

    /// Composition `self . first`: apply `first`, then `self`.
    pub fn compose(&self, first: &SignedPerm) -> Result<SignedPerm, Error> {
        if self.degree() != first.degree() {
            return Err(Error::DimensionMismatch {
                left: self.degree(),
                right: first.degree(),
            });
        }
        let targets = (1..=self.degree() as i32)
            .map(|i| self.apply(first.apply(i)))
            .collect();
        SignedPerm::new(targets)
    }

    pub fn inverse(&self) -> SignedPerm {
        let n = self.degree();
        let mut targets = alloc::vec![0; n];
        for i in 1..=n as i32 {
            let t = self.apply(i);
            // p(i) = t means p^-1(|t|) = sign(t) * i.
            targets[(t.unsigned_abs() - 1) as usize] = if t < 0 { -i } else { i };
        }
        SignedPerm { targets }
    }

    /// True when no axis is sent to a negated axis.
    pub fn is_positive(&self) -> bool {
        self.targets.iter().all(|&t| t > 0)
    }

    pub fn negative_count(&self) -> usize {
        self.targets.iter().filter(|&&t| t < 0).count()
    }

    /// +1 for an even number of negated axes, -1 for odd.
    pub fn negative_parity(&self) -> i32 {
        if self.negative_count() % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Sign of the underlying unsigned permutation of magnitudes.
    pub fn unsigned_sign(&self) -> i32 {
        sign_by_inversions(self.targets.iter().map(|t| t.unsigned_abs() as usize))
    }

    /// Determinant of the transition matrix: unsigned sign times the
    /// product of the entry signs.
    pub fn det(&self) -> i32 {
        self.unsigned_sign() * self.negative_parity()
    }

    /// The transition matrix acting on column vectors: column i holds
    /// sign(p(i)) in row |p(i)|, so that matrix multiplication matches
    /// [`SignedPerm::compose`].
    pub fn to_matrix(&self) -> TransitionMatrix {
        let n = self.degree();
        let mut entries = alloc::vec![0i8; n * n];
        for (col, &t) in self.targets.iter().enumerate() {
            let row = (t.unsigned_abs() - 1) as usize;
            entries[row * n + col] = if t < 0 { -1 } else { 1 };
        }
        TransitionMatrix { n, entries }
    }

    /// The quarter-turn block at axes (k, k+1): k -> -(k+1), k+1 -> +k.
    /// Its matrix is the 2x2 rotation [[0, 1], [-1, 0]] in that block.
    pub fn rotation(k: usize, n: usize) -> Result<Self, Error> {
        if k == 0 || k + 1 > n {
            return Err(Error::PositionOutOfRange { pos: k, degree: n });
        }
        let mut targets: Vec<i32> = (1..=n as i32).collect();
        targets[k - 1] = -((k + 1) as i32);
        targets[k] = k as i32;
        SignedPerm::new(targets)
    }

    /// Plain positive swap of axes j and k.
    pub fn swap(j: usize, k: usize, n: usize) -> Result<Self, Error> {
        if j == 0 || k == 0 || j > n || k > n || j == k {
            return Err(Error::PositionOutOfRange { pos: j.max(k), degree: n });
        }
        let mut targets: Vec<i32> = (1..=n as i32).collect();
        targets[j - 1] = k as i32;
        targets[k - 1] = j as i32;
        SignedPerm::new(targets)
    }

    /// Swap of axes j and k through the negatives: j -> -k, k -> -j.
    pub fn negated_swap(j: usize, k: usize, n: usize) -> Result<Self, Error> {
        let mut p = SignedPerm::swap(j, k, n)?;
        p.targets[j - 1] = -p.targets[j - 1];
        p.targets[k - 1] = -p.targets[k - 1];
        Ok(p)
    }

    /// Sign flip of a single axis: i -> -i.
    pub fn inversion(i: usize, n: usize) -> Result<Self, Error> {
        if i == 0 || i > n {
            return Err(Error::PositionOutOfRange { pos: i, degree: n });
        }
        let mut targets: Vec<i32> = (1..=n as i32).collect();
        targets[i - 1] = -(i as i32);
        SignedPerm::new(targets)
    }

    /// The signed 4-cycle (+j, +k, -j, -k): j -> +k, k -> -j.
    pub fn four_cycle(j: usize, k: usize, n: usize) -> Result<Self, Error> {
        if j == 0 || k == 0 || j > n || k > n || j == k {
            return Err(Error::PositionOutOfRange { pos: j.max(k), degree: n });
        }
        let mut targets: Vec<i32> = (1..=n as i32).collect();
        targets[j - 1] = k as i32;
        targets[k - 1] = -(j as i32);
        SignedPerm::new(targets)
    }

    /// The plain 3-cycle i -> j -> k -> i on positive axes.
    pub fn three_cycle(i: usize, j: usize, k: usize, n: usize) -> Result<Self, Error> {
        if i == 0 || j == 0 || k == 0 || i > n || j > n || k > n {
            return Err(Error::PositionOutOfRange { pos: i.max(j).max(k), degree: n });
        }
        if i == j || j == k || i == k {
            return Err(Error::PositionOutOfRange { pos: k, degree: n });
        }
        let mut targets: Vec<i32> = (1..=n as i32).collect();
        targets[i - 1] = j as i32;
        targets[j - 1] = k as i32;
        targets[k - 1] = i as i32;
        SignedPerm::new(targets)
    }
}

impl fmt::Display for SignedPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, t) in self.targets.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{t:+}")?;
        }
        write!(f, "]")
    }
}

impl FromStr for SignedPerm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(String::from("expected [..] literal")))?;
        let targets = inner
            .split(',')
            .map(|part| {
                part.trim()
                    .parse::<i32>()
                    .map_err(|_| Error::Parse(alloc::format!("bad target '{}'", part.trim())))
            })
            .collect::<Result<Vec<_>, _>>()?;
        SignedPerm::new(targets)
    }
}

/// Sign of a permutation given as a sequence of magnitudes, by counting
/// inversions. Quadratic, which is fine at these degrees.
pub(crate) fn sign_by_inversions(seq: impl Iterator<Item = usize>) -> i32 {
    let vals: Vec<usize> = seq.collect();
    let mut inversions = 0usize;
    for a in 0..vals.len() {
        for b in (a + 1)..vals.len() {
            if vals[a] > vals[b] {
                inversions += 1;
            }
        }
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// A square matrix with exactly one +-1 entry in every row and column.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TransitionMatrix {
    n: usize,
    entries: Vec<i8>,
}

impl TransitionMatrix {
    /// Validate and wrap row-major entries.
    pub fn new(n: usize, entries: Vec<i8>) -> Result<Self, Error> {
        if n == 0 {
            return Err(Error::EmptyDegree);
        }
        if entries.len() != n * n {
            return Err(Error::NotTransition(alloc::format!(
                "expected {} entries, got {}",
                n * n,
                entries.len()
            )));
        }
        let m = TransitionMatrix { n, entries };
        m.check_pattern()?;
        Ok(m)
    }

    fn check_pattern(&self) -> Result<(), Error> {
        let n = self.n;
        for r in 0..n {
            let mut count = 0;
            for c in 0..n {
                match self.entries[r * n + c] {
                    0 => {}
                    1 | -1 => count += 1,
                    v => {
                        return Err(Error::NotTransition(alloc::format!(
                            "entry ({r},{c}) = {v}"
                        )))
                    }
                }
            }
            if count != 1 {
                return Err(Error::NotTransition(alloc::format!(
                    "row {r} has {count} nonzero entries"
                )));
            }
        }
        for c in 0..n {
            let count = (0..n).filter(|&r| self.entries[r * n + c] != 0).count();
            if count != 1 {
                return Err(Error::NotTransition(alloc::format!(
                    "column {c} has {count} nonzero entries"
                )));
            }
        }
        Ok(())
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    /// Entry at 0-based (row, col).
    pub fn get(&self, row: usize, col: usize) -> i8 {
        self.entries[row * self.n + col]
    }

    /// Recover the signed permutation whose [`SignedPerm::to_matrix`] this is.
    pub fn to_perm(&self) -> Result<SignedPerm, Error> {
        let n = self.n;
        let mut targets = Vec::with_capacity(n);
        for c in 0..n {
            let r = (0..n)
                .find(|&r| self.entries[r * n + c] != 0)
                .expect("validated pattern");
            let sign = self.entries[r * n + c] as i32;
            targets.push(sign * (r as i32 + 1));
        }
        SignedPerm::new(targets)
    }

    /// Integer matrix product; the product of transition matrices is again
    /// a transition matrix.
    pub fn multiply(&self, other: &TransitionMatrix) -> Result<TransitionMatrix, Error> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch { left: self.n, right: other.n });
        }
        let n = self.n;
        let mut entries = alloc::vec![0i8; n * n];
        for r in 0..n {
            for c in 0..n {
                let mut acc = 0i32;
                for k in 0..n {
                    acc += self.entries[r * n + k] as i32 * other.entries[k * n + c] as i32;
                }
                entries[r * n + c] = acc as i8;
            }
        }
        TransitionMatrix::new(n, entries)
    }

    /// Determinant: sign of the column pattern times the product of the
    /// entries. Always +1 or -1.
    pub fn det(&self) -> i32 {
        let n = self.n;
        let mut rows = Vec::with_capacity(n);
        let mut product = 1i32;
        for c in 0..n {
            let r = (0..n).find(|&r| self.entries[r * n + c] != 0).expect("pattern");
            rows.push(r + 1);
            product *= self.entries[r * n + c] as i32;
        }
        sign_by_inversions(rows.into_iter()) * product
    }

    /// Determinant of a subset of rows (1-based axis labels).
    ///
    /// Each selected row carries one nonzero entry; let sigma be the
    /// bijection from the rank order of the selected rows to the rank order
    /// of the occupied columns. The result is sign(sigma) times the product
    /// of the entries.
    pub fn subset_det(&self, rows: &[usize]) -> Result<i32, Error> {
        if rows.is_empty() {
            return Err(Error::EmptyBlock);
        }
        let n = self.n;
        let mut last = 0usize;
        let mut cols = Vec::with_capacity(rows.len());
        let mut product = 1i32;
        for &row in rows {
            if row == 0 || row > n {
                return Err(Error::TargetOutOfRange { target: row as i32, degree: n });
            }
            if row <= last {
                return Err(Error::Parse(String::from(
                    "row subset must be strictly increasing",
                )));
            }
            last = row;
            let r = row - 1;
            let c = (0..n).find(|&c| self.entries[r * n + c] != 0).expect("pattern");
            cols.push(c + 1);
            product *= self.entries[r * n + c] as i32;
        }
        // Rows were given in ascending order, so the rank-order bijection's
        // sign is the inversion parity of the column sequence.
        Ok(sign_by_inversions(cols.into_iter()) * product)
    }
}

impl fmt::Display for TransitionMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.n {
            if r > 0 {
                writeln!(f)?;
            }
            for c in 0..self.n {
                if c > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{:>2}", self.entries[r * self.n + c])?;
            }
        }
        Ok(())
    }
}

/// An ordered partition of axes 1..=n into consecutive intervals.
/// Displays as `2+1` style sums.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IntervalPartition {
    sizes: Vec<usize>,
}

impl IntervalPartition {
    pub fn new(sizes: Vec<usize>) -> Result<Self, Error> {
        if sizes.is_empty() {
            return Err(Error::EmptyBlock);
        }
        if sizes.iter().any(|&s| s == 0) {
            return Err(Error::EmptyBlock);
        }
        Ok(IntervalPartition { sizes })
    }

    /// The single-block partition of n axes.
    pub fn whole(n: usize) -> Result<Self, Error> {
        if n == 0 {
            return Err(Error::EmptyDegree);
        }
        IntervalPartition::new(alloc::vec![n])
    }

    /// The all-singletons partition of n axes.
    pub fn singletons(n: usize) -> Result<Self, Error> {
        if n == 0 {
            return Err(Error::EmptyDegree);
        }
        IntervalPartition::new(alloc::vec![1; n])
    }

    /// Total number of axes covered.
    pub fn n(&self) -> usize {
        self.sizes.iter().sum()
    }

    /// Number of blocks.
    pub fn block_count(&self) -> usize {
        self.sizes.len()
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    /// Blocks as inclusive 1-based (start, end) intervals.
    pub fn blocks(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.sizes.len());
        let mut start = 1;
        for &s in &self.sizes {
            out.push((start, start + s - 1));
            start += s;
        }
        out
    }

    /// Index of the block containing the given 1-based axis.
    pub fn block_of(&self, axis: usize) -> Option<usize> {
        self.blocks()
            .iter()
            .position(|&(a, b)| axis >= a && axis <= b)
    }
}

impl fmt::Display for IntervalPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, s) in self.sizes.iter().enumerate() {
            if i > 0 {
                write!(f, "+")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

impl FromStr for IntervalPartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let sizes = s
            .split('+')
            .map(|part| {
                part.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(alloc::format!("bad block size '{}'", part.trim())))
            })
            .collect::<Result<Vec<_>, _>>()?;
        IntervalPartition::new(sizes)
    }
}

/// Product of row-block determinants over an interval partition.
///
/// Reduces to [`SignedPerm::det`] for the single-block partition and to
/// [`SignedPerm::negative_parity`] for the all-singletons partition.
pub fn composite_parity(p: &SignedPerm, part: &IntervalPartition) -> Result<i32, Error> {
    if part.n() != p.degree() {
        return Err(Error::PartitionMismatch { expected: p.degree(), actual: part.n() });
    }
    let m = p.to_matrix();
    let mut parity = 1;
    for (a, b) in part.blocks() {
        let rows: Vec<usize> = (a..=b).collect();
        parity *= m.subset_det(&rows)?;
    }
    Ok(parity)
}

/// The three parities of one element, each +1 or -1.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Parities {
    /// Transition-matrix determinant.
    pub det: i32,
    /// Parity of the count of negated axes.
    pub negative: i32,
    /// Blockwise composite parity for the partition supplied to `classify`.
    pub composite: i32,
}

/// Evaluate all three parities of `p` against `part`.
pub fn classify(p: &SignedPerm, part: &IntervalPartition) -> Result<Parities, Error> {
    Ok(Parities {
        det: p.det(),
        negative: p.negative_parity(),
        composite: composite_parity(p, part)?,
    })
}

/// Which standard generator family to build.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GeneratorKind {
    /// Adjacent quarter-turns; generates the unit-determinant subgroup.
    Even,
    /// Adjacent swaps and negated swaps; generates the even-sign-change
    /// subgroup.
    EvenInverse,
    /// Quarter-turns inside blocks plus (negated) swaps across adjacent
    /// block boundaries.
    Composite(IntervalPartition),
    /// Single-axis inversions plus adjacent swaps; generates the whole
    /// signed permutation group.
    Full,
}

/// The standard generator list for a family at degree n.
pub fn standard_generators(kind: &GeneratorKind, n: usize) -> Result<Vec<SignedPerm>, Error> {
    if n == 0 {
        return Err(Error::EmptyDegree);
    }
    if n > MAX_DEGREE {
        return Err(Error::DegreeTooLarge { degree: n });
    }
    let mut gens = Vec::new();
    match kind {
        GeneratorKind::Even => {
            for k in 1..n {
                gens.push(SignedPerm::rotation(k, n)?);
            }
        }
        GeneratorKind::EvenInverse => {
            for k in 1..n {
                gens.push(SignedPerm::swap(k, k + 1, n)?);
                gens.push(SignedPerm::negated_swap(k, k + 1, n)?);
            }
        }
        GeneratorKind::Composite(part) => {
            if part.n() != n {
                return Err(Error::PartitionMismatch { expected: n, actual: part.n() });
            }
            for (a, b) in part.blocks() {
                for k in a..b {
                    gens.push(SignedPerm::rotation(k, n)?);
                }
            }
            // Boundary swaps between the last axis of one block and the
            // first of the next.
            let blocks = part.blocks();
            for w in blocks.windows(2) {
                let s = w[0].1;
                gens.push(SignedPerm::swap(s, s + 1, n)?);
                gens.push(SignedPerm::negated_swap(s, s + 1, n)?);
            }
        }
        GeneratorKind::Full => {
            for i in 1..=n {
                gens.push(SignedPerm::inversion(i, n)?);
            }
            for k in 1..n {
                gens.push(SignedPerm::swap(k, k + 1, n)?);
            }
        }
    }
    Ok(gens)
}

/// Close a generator list inside the signed permutation group of degree n.
pub fn closure_signed(
    n: usize,
    gens: &[SignedPerm],
    cap: usize,
) -> Result<GroupClosure<SignedPerm>, Error> {
    for g in gens {
        if g.degree() != n {
            return Err(Error::DimensionMismatch { left: n, right: g.degree() });
        }
    }
    GroupClosure::generate(
        SignedPerm::identity(n)?,
        gens,
        |a, b| a.compose(b).expect("degrees validated"),
        cap,
    )
}

/// Every positive (unsigned) permutation of degree n, sorted.
pub fn enumerate_positive(n: usize) -> Result<Vec<SignedPerm>, Error> {
    if n == 0 {
        return Err(Error::EmptyDegree);
    }
    if n > MAX_DEGREE {
        return Err(Error::DegreeTooLarge { degree: n });
    }
    let mut out: Vec<SignedPerm> = (1..=n as i32)
        .permutations(n)
        .map(|targets| SignedPerm::new(targets).expect("valid permutation"))
        .collect();
    out.sort();
    Ok(out)
}

/// Every signed permutation of degree n (2^n * n! of them), sorted.
pub fn enumerate_signed(n: usize) -> Result<Vec<SignedPerm>, Error> {
    let positive = enumerate_positive(n)?;
    let mut out = Vec::with_capacity(positive.len() << n);
    for p in &positive {
        for mask in 0..(1u32 << n) {
            let targets = p
                .targets()
                .iter()
                .enumerate()
                .map(|(i, &t)| if mask & (1 << i) != 0 { -t } else { t })
                .collect();
            out.push(SignedPerm::new(targets).expect("valid permutation"));
        }
    }
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn perm(s: &str) -> SignedPerm {
        s.parse().unwrap()
    }

    #[test]
    fn construction_rejects_bad_targets() {
        assert!(SignedPerm::new(alloc::vec![]).is_err());
        assert!(SignedPerm::new(alloc::vec![0, 1]).is_err());
        assert!(SignedPerm::new(alloc::vec![1, 3]).is_err());
        assert!(SignedPerm::new(alloc::vec![1, -1]).is_err());
        assert!(SignedPerm::new(alloc::vec![1, 2, 3, 4, 5, 6, 7]).is_err());
        assert!(SignedPerm::new(alloc::vec![2, -1]).is_ok());
    }

    #[test]
    fn compose_follows_the_sign_of_the_first_map() {
        let p = perm("[+2,-1]");
        // p . p sends 1 -> -1 and 2 -> -2.
        assert_eq!(p.compose(&p).unwrap(), perm("[-1,-2]"));
        // Worked through apply: p(p(1)) = p(2) = -1; p(p(2)) = p(-1) = -2.
        assert_eq!(p.apply(p.apply(1)), -1);
        assert_eq!(p.apply(p.apply(2)), -2);
    }

    #[test]
    fn inverse_pinned_and_roundtrip() {
        let p = perm("[+2,-1]");
        assert_eq!(p.inverse(), perm("[-2,+1]"));
        let id = SignedPerm::identity(2).unwrap();
        assert_eq!(p.compose(&p.inverse()).unwrap(), id);
        assert_eq!(p.inverse().compose(&p).unwrap(), id);
    }

    #[test]
    fn rotation_matrix_is_the_quarter_turn_block() {
        // The rotation generator at (1,2) must map to [[0, 1], [-1, 0]].
        let l = SignedPerm::rotation(1, 2).unwrap();
        let m = l.to_matrix();
        assert_eq!(
            (m.get(0, 0), m.get(0, 1), m.get(1, 0), m.get(1, 1)),
            (0, 1, -1, 0)
        );
        // And the matrix converts back to the same permutation.
        assert_eq!(m.to_perm().unwrap(), l);
        // Its square is -I.
        let sq = l.compose(&l).unwrap();
        assert_eq!(sq, perm("[-1,-2]"));
    }

    #[test]
    fn to_matrix_is_a_homomorphism_exhaustively_n2() {
        let all = enumerate_signed(2).unwrap();
        assert_eq!(all.len(), 8);
        for a in &all {
            for b in &all {
                let lhs = a.compose(b).unwrap().to_matrix();
                let rhs = a.to_matrix().multiply(&b.to_matrix()).unwrap();
                assert_eq!(lhs, rhs, "a = {a}, b = {b}");
            }
        }
    }

    #[test]
    fn to_matrix_is_injective_n3() {
        let all = enumerate_signed(3).unwrap();
        let mut mats: Vec<TransitionMatrix> = all.iter().map(|p| p.to_matrix()).collect();
        mats.sort();
        mats.dedup();
        assert_eq!(mats.len(), all.len());
    }

    #[test]
    fn from_matrix_rejects_non_transition_input() {
        assert!(TransitionMatrix::new(2, alloc::vec![1, 0, 0, 0]).is_err());
        assert!(TransitionMatrix::new(2, alloc::vec![1, 1, 0, 1]).is_err());
        assert!(TransitionMatrix::new(2, alloc::vec![2, 0, 0, 1]).is_err());
        assert!(TransitionMatrix::new(2, alloc::vec![1, 0, 0]).is_err());
        assert!(TransitionMatrix::new(2, alloc::vec![0, 1, 1, 0]).is_ok());
    }

    #[test]
    fn determinant_pinned_values() {
        assert_eq!(SignedPerm::identity(3).unwrap().det(), 1);
        assert_eq!(perm("[+2,+1]").det(), -1); // swap
        assert_eq!(perm("[-2,+1]").det(), 1); // quarter turn
        assert_eq!(perm("[-1,-2]").det(), 1); // -I
        assert_eq!(perm("[-1,+2]").det(), -1); // single inversion
        // Matrix route agrees.
        for s in ["[+2,+1]", "[-2,+1]", "[-1,-2]", "[+1,+2]"] {
            let p = perm(s);
            assert_eq!(p.det(), p.to_matrix().det(), "{s}");
        }
    }

    #[test]
    fn negative_parity_pinned_values() {
        assert_eq!(perm("[+2,-1]").negative_parity(), -1);
        assert_eq!(perm("[-1,-2]").negative_parity(), 1);
        assert_eq!(perm("[+1,+2]").negative_parity(), 1);
    }

    #[test]
    fn det_and_negative_parity_are_homomorphisms_n3() {
        let all = enumerate_signed(3).unwrap();
        assert_eq!(all.len(), 48);
        for a in &all {
            for b in &all {
                let c = a.compose(b).unwrap();
                assert_eq!(c.det(), a.det() * b.det());
                assert_eq!(
                    c.negative_parity(),
                    a.negative_parity() * b.negative_parity()
                );
            }
        }
    }

    #[test]
    fn subset_det_pinned_values() {
        let t = perm("[+2,+1]").to_matrix();
        assert_eq!(t.subset_det(&[1, 2]).unwrap(), -1);
        assert_eq!(t.subset_det(&[1]).unwrap(), 1);
        assert_eq!(t.subset_det(&[2]).unwrap(), 1);
        let id = SignedPerm::identity(3).unwrap().to_matrix();
        assert_eq!(id.subset_det(&[1, 2, 3]).unwrap(), 1);
        assert_eq!(id.subset_det(&[2]).unwrap(), 1);
        // Quarter turn: row 1 holds +1, row 2 holds -1.
        let l = SignedPerm::rotation(1, 2).unwrap().to_matrix();
        assert_eq!(l.subset_det(&[1]).unwrap(), 1);
        assert_eq!(l.subset_det(&[2]).unwrap(), -1);
        assert_eq!(l.subset_det(&[1, 2]).unwrap(), 1);
        // Errors.
        assert!(l.subset_det(&[]).is_err());
        assert!(l.subset_det(&[2, 1]).is_err());
        assert!(l.subset_det(&[3]).is_err());
    }

    #[test]
    fn composite_parity_pinned_values() {
        let axes2 = IntervalPartition::singletons(2).unwrap();
        assert_eq!(composite_parity(&perm("[+2,+1]"), &axes2).unwrap(), 1);
        assert_eq!(composite_parity(&perm("[-2,+1]"), &axes2).unwrap(), -1);
        assert_eq!(composite_parity(&perm("[-1,-2]"), &axes2).unwrap(), 1);
        // Partition size must match.
        let p3: IntervalPartition = "2+1".parse().unwrap();
        assert!(composite_parity(&perm("[+2,+1]"), &p3).is_err());
    }

    #[test]
    fn composite_parity_degenerates_to_det_and_negative_parity() {
        for n in 1..=4usize {
            let whole = IntervalPartition::whole(n).unwrap();
            let axes = IntervalPartition::singletons(n).unwrap();
            for p in enumerate_signed(n).unwrap() {
                assert_eq!(composite_parity(&p, &whole).unwrap(), p.det(), "{p}");
                assert_eq!(
                    composite_parity(&p, &axes).unwrap(),
                    p.negative_parity(),
                    "{p}"
                );
            }
        }
    }

    #[test]
    fn partition_parse_and_blocks() {
        let p: IntervalPartition = "2+1".parse().unwrap();
        assert_eq!(p.n(), 3);
        assert_eq!(p.block_count(), 2);
        assert_eq!(p.blocks(), alloc::vec![(1, 2), (3, 3)]);
        assert_eq!(p.block_of(2), Some(0));
        assert_eq!(p.block_of(3), Some(1));
        assert_eq!(p.to_string(), "2+1");
        assert!("2+0".parse::<IntervalPartition>().is_err());
        assert!("".parse::<IntervalPartition>().is_err());
        assert!("x".parse::<IntervalPartition>().is_err());
    }

    #[test]
    fn standard_generator_lists_pinned() {
        let even = standard_generators(&GeneratorKind::Even, 2).unwrap();
        assert_eq!(even, alloc::vec![perm("[-2,+1]")]);
        let inv = standard_generators(&GeneratorKind::EvenInverse, 2).unwrap();
        assert_eq!(inv, alloc::vec![perm("[+2,+1]"), perm("[-2,-1]")]);
        let comp = standard_generators(
            &GeneratorKind::Composite("2+1".parse().unwrap()),
            3,
        )
        .unwrap();
        assert_eq!(
            comp,
            alloc::vec![perm("[-2,+1,+3]"), perm("[+1,+3,+2]"), perm("[+1,-3,-2]")]
        );
        let full = standard_generators(&GeneratorKind::Full, 2).unwrap();
        assert_eq!(full.len(), 3);
        // Every composite generator individually has composite parity +1.
        let part: IntervalPartition = "2+1".parse().unwrap();
        for g in &comp {
            assert_eq!(composite_parity(g, &part).unwrap(), 1, "{g}");
        }
    }

    #[test]
    fn closure_of_quarter_turn_is_the_four_element_cycle() {
        let gens = standard_generators(&GeneratorKind::Even, 2).unwrap();
        let c = closure_signed(2, &gens, 100).unwrap();
        assert_eq!(c.order(), 4);
        let expect: Vec<SignedPerm> = ["[-2,+1]", "[-1,-2]", "[+1,+2]", "[+2,-1]"]
            .iter()
            .map(|s| perm(s))
            .collect();
        assert_eq!(c.elements(), &expect[..]);
    }

    #[test]
    fn closure_of_signed_swaps_matches_pinned_set() {
        let gens = standard_generators(&GeneratorKind::EvenInverse, 2).unwrap();
        let c = closure_signed(2, &gens, 100).unwrap();
        let expect: Vec<SignedPerm> = ["[-2,-1]", "[-1,-2]", "[+1,+2]", "[+2,+1]"]
            .iter()
            .map(|s| perm(s))
            .collect();
        assert_eq!(c.elements(), &expect[..]);
    }

    #[test]
    fn closure_cap_and_empty_generators() {
        assert!(closure_signed(2, &standard_generators(&GeneratorKind::Full, 2).unwrap(), 7)
            .is_err());
        let trivial = closure_signed(3, &[], 10).unwrap();
        assert_eq!(trivial.order(), 1);
    }

    #[test]
    fn full_group_orders() {
        for (n, want) in [(1, 2usize), (2, 8), (3, 48)] {
            let gens = standard_generators(&GeneratorKind::Full, n).unwrap();
            let c = closure_signed(n, &gens, 50_000).unwrap();
            assert_eq!(c.order(), want, "n = {n}");
            assert!(c.set_equals(&enumerate_signed(n).unwrap()));
        }
    }

    #[test]
    fn unit_det_closure_equals_det_kernel_n3() {
        let gens = standard_generators(&GeneratorKind::Even, 3).unwrap();
        let c = closure_signed(3, &gens, 50_000).unwrap();
        let kernel: Vec<SignedPerm> = enumerate_signed(3)
            .unwrap()
            .into_iter()
            .filter(|p| p.det() == 1)
            .collect();
        assert_eq!(c.order(), 24);
        assert!(c.set_equals(&kernel));
    }

    #[test]
    fn even_inverse_closure_equals_negative_parity_kernel_n3() {
        let gens = standard_generators(&GeneratorKind::EvenInverse, 3).unwrap();
        let c = closure_signed(3, &gens, 50_000).unwrap();
        let kernel: Vec<SignedPerm> = enumerate_signed(3)
            .unwrap()
            .into_iter()
            .filter(|p| p.negative_parity() == 1)
            .collect();
        assert_eq!(c.order(), 24);
        assert!(c.set_equals(&kernel));
    }

    #[test]
    fn display_parse_roundtrip_pinned() {
        let p = perm("[+2,-1]");
        assert_eq!(p.to_string(), "[+2,-1]");
        assert_eq!(perm(" [ +2 , -1 ] "), p);
        assert!("[+2,-1".parse::<SignedPerm>().is_err());
        assert!("[+2,0]".parse::<SignedPerm>().is_err());
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_positive(3).unwrap().len(), 6);
        assert_eq!(enumerate_signed(4).unwrap().len(), 384);
        assert!(enumerate_signed(7).is_err());
    }

    fn arb_signed_perm(n: usize) -> impl Strategy<Value = SignedPerm> {
        (
            proptest::sample::select(enumerate_positive(n).unwrap()),
            0u32..(1 << n),
        )
            .prop_map(move |(p, mask)| {
                let targets = p
                    .targets()
                    .iter()
                    .enumerate()
                    .map(|(i, &t)| if mask & (1 << i) != 0 { -t } else { t })
                    .collect();
                SignedPerm::new(targets).unwrap()
            })
    }

    proptest! {
        #[test]
        fn composition_is_associative_n4(
            a in arb_signed_perm(4),
            b in arb_signed_perm(4),
            c in arb_signed_perm(4),
        ) {
            let left = a.compose(&b).unwrap().compose(&c).unwrap();
            let right = a.compose(&b.compose(&c).unwrap()).unwrap();
            prop_assert_eq!(left, right);
        }

        #[test]
        fn matrix_homomorphism_n4(a in arb_signed_perm(4), b in arb_signed_perm(4)) {
            let lhs = a.compose(&b).unwrap().to_matrix();
            let rhs = a.to_matrix().multiply(&b.to_matrix()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn inverse_roundtrips_n4(a in arb_signed_perm(4)) {
            prop_assert_eq!(
                a.compose(&a.inverse()).unwrap(),
                SignedPerm::identity(4).unwrap()
            );
            prop_assert_eq!(a.inverse().inverse(), a);
        }

        #[test]
        fn display_roundtrips_n4(a in arb_signed_perm(4)) {
            let s = a.to_string();
            prop_assert_eq!(s.parse::<SignedPerm>().unwrap(), a);
        }

        #[test]
        fn matrix_roundtrips_n4(a in arb_signed_perm(4)) {
            prop_assert_eq!(a.to_matrix().to_perm().unwrap(), a);
        }
    }
}
