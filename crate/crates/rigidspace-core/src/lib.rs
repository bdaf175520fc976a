//! Finite "rigid" symmetry structures on Euclidean coordinate systems.
//!
//! The crate builds, from scratch, the discrete algebra that survives when a
//! real coordinate space is stripped down to its axes and orientations:
//!
//! * [`discrete`] - the two-element parity field, its signed three-element
//!   relative, and the mod-2 circle field that restricts onto both;
//! * [`perm`] - signed permutations of coordinate axes, their transition
//!   matrices, and the determinant / sign-count / blockwise parities that
//!   carve out subgroups;
//! * [`closure`] - deterministic breadth-first closure of finitely generated
//!   groups with a hard cap;
//! * [`quotient`] - even-weight subgroups of bit-vector spaces, syndrome
//!   maps, and the node factorizations they induce;
//! * [`topo`] - automorphism groups of factorized node graphs driven by a
//!   prohibition rule on reversible moves;
//! * [`mat`], [`families`], [`ortho`], [`unitary`] - the continuous side:
//!   2x2 matrix families closed under multiplication, plane-generator
//!   products preserving a block signature metric, Givens decomposition of
//!   rotations, and the complex-to-real expansion embedding unitary groups
//!   into orthogonal ones.
//!
//! Everything discrete is exact integer arithmetic; everything continuous is
//! f64 with explicit tolerances. The crate is `no_std` (with `alloc`), all
//! I/O lives in the companion CLI crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod closure;
pub mod discrete;
pub mod families;
pub mod mat;
pub mod ortho;
pub mod perm;
pub mod quotient;
pub mod topo;
pub mod unitary;

use alloc::string::String;
use core::fmt;

/// Largest degree any exhaustive group routine accepts.
///
/// The full signed permutation group has order `2^n * n!`; at n = 6 that is
/// 46080 elements, which is still fine to enumerate, and beyond it nothing
/// in this crate needs to.
pub const MAX_DEGREE: usize = 6;

/// Crate-wide error type.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Two vectors (or a matrix/vector pair) disagree in dimension.
    DimensionMismatch { left: usize, right: usize },
    /// A signed permutation target is 0 or out of `1..=n` in magnitude.
    TargetOutOfRange { target: i32, degree: usize },
    /// Two targets share the same magnitude, so the map is not a bijection.
    DuplicateTarget { axis: usize },
    /// Degree exceeds [`MAX_DEGREE`].
    DegreeTooLarge { degree: usize },
    /// Degree or dimension of zero where at least one axis is required.
    EmptyDegree,
    /// A partition block of size zero, or no blocks at all.
    EmptyBlock,
    /// Partition blocks do not sum to the ambient dimension.
    PartitionMismatch { expected: usize, actual: usize },
    /// A matrix is not a signed permutation (transition) matrix.
    NotTransition(String),
    /// Group closure exceeded the requested element cap.
    ClosureOverflow { cap: usize },
    /// A float input was NaN or infinite.
    NonFinite,
    /// A matrix in a multiplicative family has no inverse (norm zero).
    NonInvertible,
    /// A matrix failed the special-orthogonality test.
    NotSpecialOrthogonal(String),
    /// A generator position does not fit the degree (needs `1 <= k < n`).
    PositionOutOfRange { pos: usize, degree: usize },
    /// A complex entry was expected to be one of 0, +-1, +-i.
    NotUnitEntry { row: usize, col: usize },
    /// A node move of one kind was applied to a graph of the other kind.
    WrongMoveKind,
    /// A unitary plane generator was asked for a real square form.
    NoRealForm,
    /// A literal (permutation, vector, partition, spec string) failed to parse.
    Parse(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DimensionMismatch { left, right } => {
                write!(f, "dimension mismatch: {left} vs {right}")
            }
            Error::TargetOutOfRange { target, degree } => {
                write!(f, "target {target} out of range for degree {degree}")
            }
            Error::DuplicateTarget { axis } => {
                write!(f, "axis {axis} appears as target magnitude more than once")
            }
            Error::DegreeTooLarge { degree } => {
                write!(f, "degree {degree} exceeds supported maximum {MAX_DEGREE}")
            }
            Error::EmptyDegree => write!(f, "degree must be at least 1"),
            Error::EmptyBlock => write!(f, "partition blocks must be nonempty"),
            Error::PartitionMismatch { expected, actual } => {
                write!(f, "partition covers {actual} axes, expected {expected}")
            }
            Error::NotTransition(why) => write!(f, "not a transition matrix: {why}"),
            Error::ClosureOverflow { cap } => {
                write!(f, "group closure exceeded cap of {cap} elements")
            }
            Error::NonFinite => write!(f, "non-finite float input"),
            Error::NonInvertible => write!(f, "matrix is not invertible"),
            Error::NotSpecialOrthogonal(why) => write!(f, "not special orthogonal: {why}"),
            Error::PositionOutOfRange { pos, degree } => {
                write!(f, "plane position {pos} out of range for degree {degree}")
            }
            Error::NotUnitEntry { row, col } => {
                write!(f, "entry ({row},{col}) is not one of 0, +1, -1, +i, -i")
            }
            Error::WrongMoveKind => {
                write!(f, "move kind does not match the graph's node kind")
            }
            Error::NoRealForm => {
                write!(f, "unitary plane generator is complex; expand it instead")
            }
            Error::Parse(why) => write!(f, "parse error: {why}"),
        }
    }
}

#[cfg(any(test, feature = "std"))]
extern crate std;

#[cfg(any(test, feature = "std"))]
impl std::error::Error for Error {}

pub use closure::GroupClosure;
pub use discrete::{b_add, d_add, k_reduce, Bit, BitVector, CircleResidue, Trit, TritVector};
pub use families::{Quat2, Rot2, Split2};
pub use mat::{ComplexMatrix, RealMatrix, C64};
pub use ortho::{
    check_pseudo_orthogonal, givens_decompose, random_metric_word, random_so, random_su,
    signature_metric, word_matrix, PlaneGenerator, SignatureMetric,
};
pub use perm::{GeneratorKind, IntervalPartition, SignedPerm, TransitionMatrix};
pub use quotient::{EvenSubgroup, InducedFactorization, NodeKind, Syndrome};
pub use topo::{CaseLabel, CaseReport, FactorizedGraph, GraphShape, MoveGenerator, PlainPerm};
pub use unitary::{check_su_embedding, expand_to_real, quat_group_closure, realify, GaussMat2};
