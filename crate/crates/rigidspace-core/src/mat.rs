//! Small dense square matrices over f64 and Complex<f64>.
//!
//! Just enough linear algebra for the group-theoretic checks in this
//! crate: multiplication, transposition, LU determinants, and max-norm
//! comparison. Sizes stay in the single digits, so everything is the
//! straightforward cubic algorithm.

use alloc::vec::Vec;
use core::fmt;

use num_complex::Complex;

use crate::Error;

pub type C64 = Complex<f64>;

/// Dense square real matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct RealMatrix {
    n: usize,
    data: Vec<f64>,
}

impl RealMatrix {
    pub fn new(n: usize, data: Vec<f64>) -> Result<Self, Error> {
        if n == 0 {
            return Err(Error::EmptyDegree);
        }
        if data.len() != n * n {
            return Err(Error::DimensionMismatch { left: n * n, right: data.len() });
        }
        if data.iter().any(|x| !x.is_finite()) {
            return Err(Error::NonFinite);
        }
        Ok(RealMatrix { n, data })
    }

    pub fn identity(n: usize) -> Result<Self, Error> {
        let mut m = RealMatrix::new(n, alloc::vec![0.0; n * n])?;
        for i in 0..n {
            m.data[i * n + i] = 1.0;
        }
        Ok(m)
    }

    /// Diagonal matrix from the given entries.
    pub fn diagonal(entries: &[f64]) -> Result<Self, Error> {
        let n = entries.len();
        let mut m = RealMatrix::new(n, alloc::vec![0.0; n * n])?;
        for (i, &e) in entries.iter().enumerate() {
            m.data[i * n + i] = e;
        }
        Ok(m)
    }

    /// Exact float image of a signed permutation matrix.
    pub fn from_transition(t: &crate::perm::TransitionMatrix) -> Self {
        let n = t.degree();
        let data = (0..n * n)
            .map(|idx| t.get(idx / n, idx % n) as f64)
            .collect();
        RealMatrix { n, data }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn data(&self) -> &[f64] {
        &self.data
    }

    pub fn get(&self, row: usize, col: usize) -> f64 {
        self.data[row * self.n + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: f64) {
        self.data[row * self.n + col] = value;
    }

    pub fn mul(&self, other: &RealMatrix) -> Result<RealMatrix, Error> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch { left: self.n, right: other.n });
        }
        let n = self.n;
        let mut data = alloc::vec![0.0; n * n];
        for r in 0..n {
            for k in 0..n {
                let a = self.data[r * n + k];
                if a == 0.0 {
                    continue;
                }
                for c in 0..n {
                    data[r * n + c] += a * other.data[k * n + c];
                }
            }
        }
        Ok(RealMatrix { n, data })
    }

    pub fn transpose(&self) -> RealMatrix {
        let n = self.n;
        let mut data = alloc::vec![0.0; n * n];
        for r in 0..n {
            for c in 0..n {
                data[c * n + r] = self.data[r * n + c];
            }
        }
        RealMatrix { n, data }
    }

    /// Determinant by LU decomposition with partial pivoting.
    pub fn det(&self) -> f64 {
        let n = self.n;
        let mut a = self.data.clone();
        let mut det = 1.0;
        for col in 0..n {
            let mut pivot = col;
            for row in (col + 1)..n {
                if libm::fabs(a[row * n + col]) > libm::fabs(a[pivot * n + col]) {
                    pivot = row;
                }
            }
            if a[pivot * n + col] == 0.0 {
                return 0.0;
            }
            if pivot != col {
                for c in 0..n {
                    a.swap(col * n + c, pivot * n + c);
                }
                det = -det;
            }
            let p = a[col * n + col];
            det *= p;
            for row in (col + 1)..n {
                let factor = a[row * n + col] / p;
                if factor == 0.0 {
                    continue;
                }
                for c in col..n {
                    a[row * n + c] -= factor * a[col * n + c];
                }
            }
        }
        det
    }

    /// Largest absolute entry difference.
    pub fn max_abs_diff(&self, other: &RealMatrix) -> Result<f64, Error> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch { left: self.n, right: other.n });
        }
        Ok(self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| libm::fabs(a - b))
            .fold(0.0, f64::max))
    }

    /// Largest absolute entry.
    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|x| libm::fabs(*x)).fold(0.0, f64::max)
    }
}

impl fmt::Display for RealMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.n {
            if r > 0 {
                writeln!(f)?;
            }
            for c in 0..self.n {
                if c > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{:>12.6}", self.get(r, c))?;
            }
        }
        Ok(())
    }
}

/// Dense square complex matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMatrix {
    n: usize,
    data: Vec<C64>,
}

impl ComplexMatrix {
    pub fn new(n: usize, data: Vec<C64>) -> Result<Self, Error> {
        if n == 0 {
            return Err(Error::EmptyDegree);
        }
        if data.len() != n * n {
            return Err(Error::DimensionMismatch { left: n * n, right: data.len() });
        }
        if data.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::NonFinite);
        }
        Ok(ComplexMatrix { n, data })
    }

    pub fn identity(n: usize) -> Result<Self, Error> {
        let mut m = ComplexMatrix::new(n, alloc::vec![C64::new(0.0, 0.0); n * n])?;
        for i in 0..n {
            m.data[i * n + i] = C64::new(1.0, 0.0);
        }
        Ok(m)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn data(&self) -> &[C64] {
        &self.data
    }

    pub fn get(&self, row: usize, col: usize) -> C64 {
        self.data[row * self.n + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: C64) {
        self.data[row * self.n + col] = value;
    }

    pub fn mul(&self, other: &ComplexMatrix) -> Result<ComplexMatrix, Error> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch { left: self.n, right: other.n });
        }
        let n = self.n;
        let zero = C64::new(0.0, 0.0);
        let mut data = alloc::vec![zero; n * n];
        for r in 0..n {
            for k in 0..n {
                let a = self.data[r * n + k];
                if a == zero {
                    continue;
                }
                for c in 0..n {
                    data[r * n + c] += a * other.data[k * n + c];
                }
            }
        }
        Ok(ComplexMatrix { n, data })
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> ComplexMatrix {
        let n = self.n;
        let mut data = alloc::vec![C64::new(0.0, 0.0); n * n];
        for r in 0..n {
            for c in 0..n {
                data[c * n + r] = self.data[r * n + c].conj();
            }
        }
        ComplexMatrix { n, data }
    }

    /// Determinant by LU decomposition, pivoting on the largest norm.
    pub fn det(&self) -> C64 {
        let n = self.n;
        let mut a = self.data.clone();
        let mut det = C64::new(1.0, 0.0);
        for col in 0..n {
            let mut pivot = col;
            for row in (col + 1)..n {
                if a[row * n + col].norm_sqr() > a[pivot * n + col].norm_sqr() {
                    pivot = row;
                }
            }
            if a[pivot * n + col].norm_sqr() == 0.0 {
                return C64::new(0.0, 0.0);
            }
            if pivot != col {
                for c in 0..n {
                    a.swap(col * n + c, pivot * n + c);
                }
                det = -det;
            }
            let p = a[col * n + col];
            det *= p;
            for row in (col + 1)..n {
                let factor = a[row * n + col] / p;
                for c in col..n {
                    let sub = factor * a[col * n + c];
                    a[row * n + c] -= sub;
                }
            }
        }
        det
    }

    /// Largest entry norm of the difference.
    pub fn max_abs_diff(&self, other: &ComplexMatrix) -> Result<f64, Error> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch { left: self.n, right: other.n });
        }
        Ok(self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max))
    }
}
