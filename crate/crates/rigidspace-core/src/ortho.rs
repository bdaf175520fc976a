//! Plane generators, signature metrics, and Givens decomposition.
//!
//! An n x n plane generator is the identity except for a 2x2 block at
//! adjacent rows/columns (k, k+1): a rotation block, a hyperbolic boost
//! block, or a unit quaternion block on the complex side. Products of
//! rotation and boost generators placed by an interval partition preserve
//! the alternating block signature metric; that is the one-directional
//! membership check for the indefinite groups.
//!
//! For the definite case the reverse direction is also constructive:
//! [`givens_decompose`] peels any special orthogonal matrix into adjacent
//! rotation generators by bottom-up column elimination. Indefinite
//! elimination is deliberately not offered, since hyperbolic pivots can be
//! arbitrarily ill-conditioned; the indefinite claim stays one-directional.

use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::families::Quat2;
use crate::mat::{ComplexMatrix, RealMatrix, C64};
use crate::perm::IntervalPartition;
use crate::Error;

/// Identity except a 2x2 block at rows/columns (k-1, k) in 0-based terms;
/// k is 1-based and ranges over 1..n.
#[derive(Debug, Clone, PartialEq)]
pub enum PlaneGenerator {
    /// Rotation block [[cos a, sin a], [-sin a, cos a]].
    Rotation { k: usize, angle: f64 },
    /// Boost block [[cosh p, sinh p], [sinh p, cosh p]].
    Boost { k: usize, rapidity: f64 },
    /// A unit quaternion block on the complex side.
    Unitary { k: usize, block: Quat2 },
}

impl PlaneGenerator {
    pub fn position(&self) -> usize {
        match *self {
            PlaneGenerator::Rotation { k, .. }
            | PlaneGenerator::Boost { k, .. }
            | PlaneGenerator::Unitary { k, .. } => k,
        }
    }

    fn check_position(&self, n: usize) -> Result<(), Error> {
        let k = self.position();
        if k == 0 || k + 1 > n {
            return Err(Error::PositionOutOfRange { pos: k, degree: n });
        }
        Ok(())
    }

    /// The real n x n form; unitary blocks have none.
    pub fn real_matrix(&self, n: usize) -> Result<RealMatrix, Error> {
        self.check_position(n)?;
        let mut m = RealMatrix::identity(n)?;
        let i = self.position() - 1;
        match *self {
            PlaneGenerator::Rotation { angle, .. } => {
                let (s, c) = libm::sincos(angle);
                m.set(i, i, c);
                m.set(i, i + 1, s);
                m.set(i + 1, i, -s);
                m.set(i + 1, i + 1, c);
            }
            PlaneGenerator::Boost { rapidity, .. } => {
                let ch = libm::cosh(rapidity);
                let sh = libm::sinh(rapidity);
                m.set(i, i, ch);
                m.set(i, i + 1, sh);
                m.set(i + 1, i, sh);
                m.set(i + 1, i + 1, ch);
            }
            PlaneGenerator::Unitary { .. } => return Err(Error::NoRealForm),
        }
        Ok(m)
    }

    /// The complex n x n form; defined for every kind.
    pub fn complex_matrix(&self, n: usize) -> Result<ComplexMatrix, Error> {
        if let PlaneGenerator::Unitary { block, .. } = self {
            self.check_position(n)?;
            let mut m = ComplexMatrix::identity(n)?;
            let i = self.position() - 1;
            let b = block.to_matrix();
            for r in 0..2 {
                for c in 0..2 {
                    m.set(i + r, i + c, b.get(r, c));
                }
            }
            Ok(m)
        } else {
            let real = self.real_matrix(n)?;
            let data = real.data().iter().map(|&x| C64::new(x, 0.0)).collect();
            ComplexMatrix::new(n, data)
        }
    }
}

/// Rotation generator matrix at 1-based position k.
pub fn plane_rotation(n: usize, k: usize, angle: f64) -> Result<RealMatrix, Error> {
    PlaneGenerator::Rotation { k, angle }.real_matrix(n)
}

/// Boost generator matrix at 1-based position k.
pub fn plane_boost(n: usize, k: usize, rapidity: f64) -> Result<RealMatrix, Error> {
    PlaneGenerator::Boost { k, rapidity }.real_matrix(n)
}

/// Diagonal signature constant on partition blocks, alternating +1, -1,
/// +1, ... from the first block.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignatureMetric {
    signs: Vec<i8>,
}

impl SignatureMetric {
    pub fn identity(n: usize) -> Result<Self, Error> {
        if n == 0 {
            return Err(Error::EmptyDegree);
        }
        Ok(SignatureMetric { signs: alloc::vec![1; n] })
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    pub fn n(&self) -> usize {
        self.signs.len()
    }

    pub fn to_matrix(&self) -> RealMatrix {
        let entries: Vec<f64> = self.signs.iter().map(|&s| s as f64).collect();
        RealMatrix::diagonal(&entries).expect("nonempty diagonal")
    }
}

/// The alternating block metric of a partition: block j carries sign
/// (-1)^(j+1).
pub fn signature_metric(part: &IntervalPartition) -> SignatureMetric {
    let mut signs = Vec::with_capacity(part.n());
    for (j, &size) in part.sizes().iter().enumerate() {
        let sign = if j % 2 == 0 { 1 } else { -1 };
        for _ in 0..size {
            signs.push(sign);
        }
    }
    SignatureMetric { signs }
}

/// True iff transpose(M) eta M = eta and det M = 1, both within tol.
pub fn check_pseudo_orthogonal(
    m: &RealMatrix,
    metric: &SignatureMetric,
    tol: f64,
) -> Result<bool, Error> {
    if m.n() != metric.n() {
        return Err(Error::DimensionMismatch { left: m.n(), right: metric.n() });
    }
    let eta = metric.to_matrix();
    let gram = m.transpose().mul(&eta.mul(m)?)?;
    let form_err = gram.max_abs_diff(&eta)?;
    let det_err = libm::fabs(m.det() - 1.0);
    Ok(form_err <= tol && det_err <= tol)
}

/// Generator positions legal for a partition: rotations inside blocks,
/// boosts across adjacent block boundaries.
pub fn position_is_boundary(part: &IntervalPartition, k: usize) -> Result<bool, Error> {
    let n = part.n();
    if k == 0 || k + 1 > n {
        return Err(Error::PositionOutOfRange { pos: k, degree: n });
    }
    let a = part.block_of(k).expect("position within partition");
    let b = part.block_of(k + 1).expect("position within partition");
    Ok(a != b)
}

/// A seeded random word of rotation/boost generators placed by the
/// partition rule. Every such word preserves `signature_metric(part)`.
pub fn random_metric_word(
    part: &IntervalPartition,
    len: usize,
    seed: u64,
) -> Result<Vec<PlaneGenerator>, Error> {
    let n = part.n();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut word = Vec::with_capacity(len);
    if n < 2 {
        return Ok(word);
    }
    for _ in 0..len {
        let k = rng.gen_range(1..n);
        if position_is_boundary(part, k)? {
            let rapidity = rng.gen_range(-1.0..=1.0);
            word.push(PlaneGenerator::Boost { k, rapidity });
        } else {
            let angle = sample_angle(&mut rng);
            word.push(PlaneGenerator::Rotation { k, angle });
        }
    }
    Ok(word)
}

/// Ordered product of a generator word.
pub fn word_matrix(word: &[PlaneGenerator], n: usize) -> Result<RealMatrix, Error> {
    let mut acc = RealMatrix::identity(n)?;
    for g in word {
        acc = acc.mul(&g.real_matrix(n)?)?;
    }
    Ok(acc)
}

/// Angle uniform on (-pi, pi].
fn sample_angle(rng: &mut ChaCha8Rng) -> f64 {
    let u: f64 = rng.gen();
    core::f64::consts::PI * (1.0 - 2.0 * u)
}

/// A seeded special orthogonal matrix: the product of 3n random adjacent
/// rotations. SO(1) is the 1x1 identity.
pub fn random_so(n: usize, seed: u64) -> Result<RealMatrix, Error> {
    if n == 0 {
        return Err(Error::EmptyDegree);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut acc = RealMatrix::identity(n)?;
    if n == 1 {
        return Ok(acc);
    }
    for _ in 0..3 * n {
        let k = rng.gen_range(1..n);
        let angle = sample_angle(&mut rng);
        acc = acc.mul(&plane_rotation(n, k, angle)?)?;
    }
    Ok(acc)
}

/// A seeded special unitary matrix: the product of 3n random unit
/// quaternion plane generators. SU(1) is the 1x1 identity.
pub fn random_su(n: usize, seed: u64) -> Result<ComplexMatrix, Error> {
    if n == 0 {
        return Err(Error::EmptyDegree);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut acc = ComplexMatrix::identity(n)?;
    if n == 1 {
        return Ok(acc);
    }
    for _ in 0..3 * n {
        let k = rng.gen_range(1..n);
        let block = random_unit_quat(&mut rng);
        let g = PlaneGenerator::Unitary { k, block };
        acc = acc.mul(&g.complex_matrix(n)?)?;
    }
    Ok(acc)
}

fn random_unit_quat(rng: &mut ChaCha8Rng) -> Quat2 {
    loop {
        let q = Quat2::new(
            rng.gen_range(-1.0..=1.0),
            rng.gen_range(-1.0..=1.0),
            rng.gen_range(-1.0..=1.0),
            rng.gen_range(-1.0..=1.0),
        );
        if q.norm_sq() >= 1e-4 {
            return q.normalize().expect("norm bounded away from zero");
        }
    }
}

/// Peel a special orthogonal matrix into adjacent rotation generators
/// whose ordered product reconstructs it.
///
/// Each column is swept bottom-up: the rotation on rows (i-1, i) with
/// angle atan2(A[i][j], A[i-1][j]) zeroes A[i][j] and leaves a nonnegative
/// value above. Exactly-zero entries emit nothing, so the identity
/// decomposes into the empty word - except at the diagonal step, where a
/// zero below a negative pivot still needs the half-turn that makes the
/// pivot positive (inputs with exact zero blocks, like products of
/// rotations that never touch some position, hit this case; a negative
/// pivot higher up the column self-heals, because it becomes the next
/// step's nonzero low entry).
pub fn givens_decompose(m: &RealMatrix, tol: f64) -> Result<Vec<PlaneGenerator>, Error> {
    let n = m.n();
    let metric = SignatureMetric::identity(n)?;
    if !check_pseudo_orthogonal(m, &metric, tol)? {
        let det = m.det();
        return Err(Error::NotSpecialOrthogonal(alloc::format!(
            "det = {det:.6}, or transpose(M) M deviates from identity beyond {tol:e}"
        )));
    }
    let mut a = m.clone();
    let mut word: Vec<PlaneGenerator> = Vec::new();
    for col in 0..n.saturating_sub(1) {
        for row in ((col + 1)..n).rev() {
            let low = a.get(row, col);
            let high = a.get(row - 1, col);
            if low == 0.0 && (row > col + 1 || high >= 0.0) {
                continue;
            }
            let theta = libm::atan2(low, high);
            let (s, c) = libm::sincos(theta);
            for ccol in 0..n {
                let top = a.get(row - 1, ccol);
                let bot = a.get(row, ccol);
                a.set(row - 1, ccol, c * top + s * bot);
                a.set(row, ccol, -s * top + c * bot);
            }
            a.set(row, col, 0.0);
            word.push(PlaneGenerator::Rotation { k: row, angle: -theta });
        }
    }
    Ok(word)
}
