//! Parity scalars and the mod-2 circle.
//!
//! Three structures share one addition law, "reduce the sum mod 2":
//!
//! * `D` - carrier {0, 1}, addition [`d_add`] (plain XOR). A field.
//! * `B` - carrier {-1, 0, 1}, addition [`b_add`] keeping the sign of the
//!   sum alongside its parity. Deliberately *not* associative; the failure
//!   witnesses are part of the public behaviour and are pinned in tests.
//! * `K` - carrier the half-open interval (-2, 2] of residues
//!   [`CircleResidue`], reduction [`k_reduce`]. Residues name points of a
//!   signed unit circle through phi -> e^(i*pi*phi), so x and its residue
//!   always land on the same circle point.
//!
//! Restricting K to integer residues recovers B, and further to {0, 1}
//! recovers D. The restriction map is [`CircleResidue::to_signed_unit`]:
//! the boundary residue 2 names the same circle point as 0, so it restricts
//! to integer 0.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::Error;

/// A parity bit, 0 or 1.
pub type Bit = u8;

/// A signed parity, -1, 0 or +1.
pub type Trit = i8;

/// |z| mod 2, forgetting sign.
pub fn mod2_unsigned(z: i64) -> Bit {
    (z.unsigned_abs() % 2) as Bit
}

/// |z| mod 2, keeping the sign of z. Even magnitudes give 0 regardless of
/// sign.
pub fn mod2_signed(z: i64) -> Trit {
    let parity = (z.unsigned_abs() % 2) as i8;
    if z < 0 {
        -parity
    } else {
        parity
    }
}

/// Addition in D: XOR on {0, 1}.
pub fn d_add(x: Bit, y: Bit) -> Bit {
    debug_assert!(x <= 1 && y <= 1);
    x ^ y
}

/// Multiplication in D: AND on {0, 1}.
pub fn d_mul(x: Bit, y: Bit) -> Bit {
    debug_assert!(x <= 1 && y <= 1);
    x & y
}

/// Addition in B: the signed parity of the integer sum.
///
/// Not associative. For example `b_add(b_add(1, 1), -1) = -1` but
/// `b_add(1, b_add(1, -1)) = 1`.
pub fn b_add(x: Trit, y: Trit) -> Trit {
    debug_assert!((-1..=1).contains(&x) && (-1..=1).contains(&y));
    mod2_signed((x + y) as i64)
}

/// Multiplication in B: ordinary integer product on {-1, 0, 1}.
pub fn b_mul(x: Trit, y: Trit) -> Trit {
    debug_assert!((-1..=1).contains(&x) && (-1..=1).contains(&y));
    x * y
}

/// All triples (x, y, z) over {-1, 0, 1} on which [`b_add`] fails to
/// associate, in lexicographic order.
pub fn b_associativity_failures() -> Vec<(Trit, Trit, Trit)> {
    let mut out = Vec::new();
    for x in -1..=1i8 {
        for y in -1..=1i8 {
            for z in -1..=1i8 {
                if b_add(b_add(x, y), z) != b_add(x, b_add(y, z)) {
                    out.push((x, y, z));
                }
            }
        }
    }
    out
}

/// A residue in the half-open interval (-2, 2].
///
/// The residue phi names the circle point e^(i*pi*phi) together with the
/// sign of the real number it was reduced from. The interval has length 4,
/// twice the period of the exponential, which is what lets a residue carry
/// a sign: phi and phi - 2 are the same circle point with opposite marks.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CircleResidue(f64);

/// Reduce a real number into (-2, 2], preserving its sign when the residue
/// can carry it.
///
/// Rules, writing r for x mod 2 in [0, 2):
/// * x >= 0: the residue is r, except that positive exact multiples of 2
///   reduce to 2 (keeping the positive mark; e^(2*pi*i) = e^0 either way).
/// * x < 0 with r = 0: the residue is 0 (no negative representative of the
///   identity point exists in the interval).
/// * x < 0 with r != 0: the residue is r - 2, which lies in (-2, 0).
pub fn k_reduce(x: f64) -> Result<CircleResidue, Error> {
    if !x.is_finite() {
        return Err(Error::NonFinite);
    }
    let r = x - 2.0 * libm::floor(x * 0.5);
    let phi = if r == 0.0 {
        if x > 0.0 {
            2.0
        } else {
            0.0
        }
    } else if x >= 0.0 {
        r
    } else {
        r - 2.0
    };
    Ok(CircleResidue(phi))
}

impl CircleResidue {
    /// The residue value in (-2, 2].
    pub fn value(self) -> f64 {
        self.0
    }

    /// Zero, the additive identity.
    pub const ZERO: CircleResidue = CircleResidue(0.0);

    /// One, the multiplicative identity.
    pub const ONE: CircleResidue = CircleResidue(1.0);

    /// Circle addition: reduce the sum of the residues.
    pub fn k_add(self, other: CircleResidue) -> CircleResidue {
        // Sums of two residues stay finite, so reduction cannot fail.
        k_reduce(self.0 + other.0).expect("finite sum")
    }

    /// Circle multiplication: reduce the product of the residues.
    pub fn k_mul(self, other: CircleResidue) -> CircleResidue {
        k_reduce(self.0 * other.0).expect("finite product")
    }

    /// Whether two residues name the same circle point, i.e. agree mod 2,
    /// within `tol`.
    pub fn same_circle_point(self, other: CircleResidue, tol: f64) -> bool {
        let d = self.0 - other.0;
        let r = libm::fabs(d - 2.0 * libm::floor(d * 0.5 + 0.5));
        r <= tol || libm::fabs(r - 2.0) <= tol
    }

    /// Restrict an integer-valued residue to the signed units {-1, 0, 1}.
    ///
    /// The boundary residue 2 is the circle point e^(2*pi*i) = 1, the same
    /// point 0 names, so it restricts to 0. Non-integer residues have no
    /// restriction.
    pub fn to_signed_unit(self) -> Option<Trit> {
        if self.0 == 0.0 || self.0 == 2.0 {
            Some(0)
        } else if self.0 == 1.0 {
            Some(1)
        } else if self.0 == -1.0 {
            Some(-1)
        } else {
            None
        }
    }

    /// Embed a signed unit from B as a residue.
    pub fn from_signed_unit(t: Trit) -> CircleResidue {
        CircleResidue(t as f64)
    }
}

impl fmt::Display for CircleResidue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A fixed-length vector of parity bits. Displays as a string of `0`/`1`
/// characters, e.g. `110`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BitVector(Vec<Bit>);

impl BitVector {
    pub fn new(bits: Vec<Bit>) -> Result<Self, Error> {
        if bits.is_empty() {
            return Err(Error::EmptyDegree);
        }
        if bits.iter().any(|&b| b > 1) {
            return Err(Error::Parse(String::from("bits must be 0 or 1")));
        }
        Ok(BitVector(bits))
    }

    /// The all-zero vector of dimension n.
    pub fn zero(n: usize) -> Result<Self, Error> {
        if n == 0 {
            return Err(Error::EmptyDegree);
        }
        Ok(BitVector(alloc::vec![0; n]))
    }

    /// The standard basis vector with a single 1 at `axis` (1-based).
    pub fn basis(axis: usize, n: usize) -> Result<Self, Error> {
        if axis == 0 || axis > n {
            return Err(Error::DimensionMismatch { left: axis, right: n });
        }
        let mut bits = alloc::vec![0; n];
        bits[axis - 1] = 1;
        BitVector::new(bits)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn bits(&self) -> &[Bit] {
        &self.0
    }

    /// Number of 1 entries.
    pub fn weight(&self) -> usize {
        self.0.iter().filter(|&&b| b == 1).count()
    }

    /// Componentwise D addition.
    pub fn add(&self, other: &BitVector) -> Result<BitVector, Error> {
        if self.len() != other.len() {
            return Err(Error::DimensionMismatch { left: self.len(), right: other.len() });
        }
        Ok(BitVector(
            self.0.iter().zip(&other.0).map(|(&a, &b)| d_add(a, b)).collect(),
        ))
    }
}

impl fmt::Display for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.0 {
            write!(f, "{b}")?;
        }
        Ok(())
    }
}

impl FromStr for BitVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let bits = s
            .chars()
            .map(|c| match c {
                '0' => Ok(0),
                '1' => Ok(1),
                other => Err(Error::Parse(alloc::format!("invalid bit character '{other}'"))),
            })
            .collect::<Result<Vec<_>, _>>()?;
        BitVector::new(bits)
    }
}

/// A fixed-length vector of signed parities. Displays with one character
/// per entry: `+`, `0` or `-`, e.g. `+0-`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TritVector(Vec<Trit>);

impl TritVector {
    pub fn new(trits: Vec<Trit>) -> Result<Self, Error> {
        if trits.is_empty() {
            return Err(Error::EmptyDegree);
        }
        if trits.iter().any(|t| !(-1..=1).contains(t)) {
            return Err(Error::Parse(String::from("trits must be -1, 0 or 1")));
        }
        Ok(TritVector(trits))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn trits(&self) -> &[Trit] {
        &self.0
    }

    /// Componentwise B addition.
    pub fn add(&self, other: &TritVector) -> Result<TritVector, Error> {
        if self.len() != other.len() {
            return Err(Error::DimensionMismatch { left: self.len(), right: other.len() });
        }
        Ok(TritVector(
            self.0.iter().zip(&other.0).map(|(&a, &b)| b_add(a, b)).collect(),
        ))
    }

    /// Forget signs componentwise, landing in a bit vector.
    pub fn magnitudes(&self) -> BitVector {
        BitVector(self.0.iter().map(|&t| t.unsigned_abs()).collect())
    }
}

impl fmt::Display for TritVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &t in &self.0 {
            let c = match t {
                1 => '+',
                0 => '0',
                _ => '-',
            };
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl FromStr for TritVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let trits = s
            .chars()
            .map(|c| match c {
                '+' => Ok(1),
                '0' => Ok(0),
                '-' | '\u{2212}' => Ok(-1),
                other => Err(Error::Parse(alloc::format!("invalid trit character '{other}'"))),
            })
            .collect::<Result<Vec<_>, _>>()?;
        TritVector::new(trits)
    }
}
