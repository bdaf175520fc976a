//! Complex-to-real expansion and the exact quaternion unit group.
//!
//! Expanding each complex entry x+iy into the 2x2 block [[x, y], [-y, x]]
//! is a ring homomorphism from n x n complex matrices to 2n x 2n real
//! ones, and it sends conjugate transposition to plain transposition. So a
//! special unitary matrix expands to a special orthogonal one; that is the
//! whole embedding argument, and [`check_su_embedding`] tests both sides
//! of it numerically.
//!
//! The discrete shadow of the same story is exact: the four quaternion
//! basis matrices over the Gaussian integers close into a group of eight,
//! and expanding them yields 4 x 4 signed permutation matrices of unit
//! determinant.

use core::fmt;

use crate::closure::GroupClosure;
use crate::mat::{ComplexMatrix, RealMatrix};
use crate::ortho::{check_pseudo_orthogonal, SignatureMetric};
use crate::perm::TransitionMatrix;
use crate::Error;

/// A Gaussian integer as (real, imaginary).
pub type GaussInt = (i64, i64);

fn gmul(a: GaussInt, b: GaussInt) -> GaussInt {
    (a.0 * b.0 - a.1 * b.1, a.0 * b.1 + a.1 * b.0)
}

fn gadd(a: GaussInt, b: GaussInt) -> GaussInt {
    (a.0 + b.0, a.1 + b.1)
}

fn fmt_gauss(f: &mut fmt::Formatter<'_>, z: GaussInt) -> fmt::Result {
    match z {
        (0, 0) => write!(f, "0"),
        (re, 0) => write!(f, "{re}"),
        (0, 1) => write!(f, "i"),
        (0, -1) => write!(f, "-i"),
        (0, im) => write!(f, "{im}i"),
        (re, im) => write!(f, "{re}{im:+}i"),
    }
}

/// An exact 2x2 matrix over the Gaussian integers, row-major.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GaussMat2 {
    entries: [GaussInt; 4],
}

impl GaussMat2 {
    pub fn new(entries: [GaussInt; 4]) -> Self {
        GaussMat2 { entries }
    }

    pub fn entries(&self) -> &[GaussInt; 4] {
        &self.entries
    }

    pub fn identity() -> Self {
        GaussMat2::new([(1, 0), (0, 0), (0, 0), (1, 0)])
    }

    /// The four quaternion basis matrices: identity, [[0,i],[i,0]],
    /// [[0,1],[-1,0]], [[i,0],[0,-i]].
    pub fn quat_basis() -> [GaussMat2; 4] {
        [
            GaussMat2::identity(),
            GaussMat2::new([(0, 0), (0, 1), (0, 1), (0, 0)]),
            GaussMat2::new([(0, 0), (1, 0), (-1, 0), (0, 0)]),
            GaussMat2::new([(0, 1), (0, 0), (0, 0), (0, -1)]),
        ]
    }

    pub fn mul(&self, other: &GaussMat2) -> GaussMat2 {
        let a = &self.entries;
        let b = &other.entries;
        GaussMat2::new([
            gadd(gmul(a[0], b[0]), gmul(a[1], b[2])),
            gadd(gmul(a[0], b[1]), gmul(a[1], b[3])),
            gadd(gmul(a[2], b[0]), gmul(a[3], b[2])),
            gadd(gmul(a[2], b[1]), gmul(a[3], b[3])),
        ])
    }

    pub fn neg(&self) -> GaussMat2 {
        let e = &self.entries;
        GaussMat2::new([
            (-e[0].0, -e[0].1),
            (-e[1].0, -e[1].1),
            (-e[2].0, -e[2].1),
            (-e[3].0, -e[3].1),
        ])
    }
}

impl fmt::Display for GaussMat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[")?;
        fmt_gauss(f, self.entries[0])?;
        write!(f, ",")?;
        fmt_gauss(f, self.entries[1])?;
        write!(f, "],[")?;
        fmt_gauss(f, self.entries[2])?;
        write!(f, ",")?;
        fmt_gauss(f, self.entries[3])?;
        write!(f, "]]")
    }
}

/// Close the quaternion basis under multiplication: eight elements, the
/// basis matrices and their negatives.
pub fn quat_group_closure() -> Result<GroupClosure<GaussMat2>, Error> {
    let basis = GaussMat2::quat_basis();
    GroupClosure::generate(GaussMat2::identity(), &basis, |a, b| a.mul(b), 16)
}

/// Expand each complex entry x+iy into the block [[x, y], [-y, x]].
pub fn realify(a: &ComplexMatrix) -> RealMatrix {
    let n = a.n();
    let mut out = RealMatrix::new(2 * n, alloc::vec![0.0; 4 * n * n]).expect("nonzero size");
    for r in 0..n {
        for c in 0..n {
            let z = a.get(r, c);
            out.set(2 * r, 2 * c, z.re);
            out.set(2 * r, 2 * c + 1, z.im);
            out.set(2 * r + 1, 2 * c, -z.im);
            out.set(2 * r + 1, 2 * c + 1, z.re);
        }
    }
    out
}

/// True iff u is special unitary within tol and its expansion is special
/// orthogonal within tol.
pub fn check_su_embedding(u: &ComplexMatrix, tol: f64) -> Result<bool, Error> {
    let n = u.n();
    let gram = u.adjoint().mul(u)?;
    let unitary = gram.max_abs_diff(&ComplexMatrix::identity(n)?)? <= tol;
    let special = (u.det() - crate::mat::C64::new(1.0, 0.0)).norm() <= tol;
    let expanded = realify(u);
    let orthogonal =
        check_pseudo_orthogonal(&expanded, &SignatureMetric::identity(2 * n)?, tol)?;
    Ok(unitary && special && orthogonal)
}

/// Expand an exact matrix with entries in {0, +-1, +-i} into a signed
/// permutation matrix, verifying the shape and unit determinant.
pub fn expand_to_real(m: &GaussMat2) -> Result<TransitionMatrix, Error> {
    let mut entries = alloc::vec![0i8; 16];
    for r in 0..2 {
        for c in 0..2 {
            let block: [i8; 4] = match m.entries[r * 2 + c] {
                (0, 0) => [0, 0, 0, 0],
                (1, 0) => [1, 0, 0, 1],
                (-1, 0) => [-1, 0, 0, -1],
                (0, 1) => [0, 1, -1, 0],
                (0, -1) => [0, -1, 1, 0],
                _ => return Err(Error::NotUnitEntry { row: r, col: c }),
            };
            for br in 0..2 {
                for bc in 0..2 {
                    entries[(2 * r + br) * 4 + (2 * c + bc)] = block[br * 2 + bc];
                }
            }
        }
    }
    let t = TransitionMatrix::new(4, entries)?;
    if t.det() != 1 {
        return Err(Error::NotSpecialOrthogonal(alloc::format!(
            "expansion has determinant {}",
            t.det()
        )));
    }
    Ok(t)
}
