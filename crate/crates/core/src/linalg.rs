//! Dense complex matrix kernels.
//!
//! Everything else in the crate is built on [`ComplexMatrix`]: a row-major
//! dense matrix of `Complex64` entries with a small set of exact, allocation
//! -per-call operations (product, adjoint, Kronecker product) and entrywise
//! structure checks. All stored entries are finite; constructors that accept
//! external data enforce this.

use std::ops::Index;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Default tolerance for structure checks, scaled by `max(1, max|entry|)`.
pub const DEFAULT_TOL: f64 = 1e-10;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// Scale a relative tolerance by the magnitude of the matrix it applies to.
pub fn scaled_tol(tol: f64, max_abs: f64) -> f64 {
    tol * max_abs.max(1.0)
}

/// Outcome of a structure check: the raw defect and whether it clears the
/// tolerance the check was run with.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StructureVerdict {
    pub ok: bool,
    /// Max entrywise deviation before thresholding.
    pub defect: f64,
}

/// Dense row-major complex matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Complex64>,
}

impl ComplexMatrix {
    /// Builds a matrix from row-major data, validating shape and finiteness.
    pub fn new(rows: usize, cols: usize, data: Vec<Complex64>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::ZeroDimension { rows, cols });
        }
        if data.len() != rows * cols {
            return Err(Error::DataLength {
                rows,
                cols,
                len: data.len(),
            });
        }
        if let Some(index) = data.iter().position(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::NonFinite { index });
        }
        Ok(Self { rows, cols, data })
    }

    /// Builds a matrix by evaluating `f(row, col)` at every position.
    ///
    /// Intended for internal arithmetic; the closure is trusted to produce
    /// finite values.
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Complex64) -> Self {
        assert!(rows > 0 && cols > 0, "dimensions must be positive");
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Self { rows, cols, data }
    }

    /// All-zero matrix.
    pub fn zeros(rows: usize, cols: usize) -> Self {
        assert!(rows > 0 && cols > 0, "dimensions must be positive");
        Self {
            rows,
            cols,
            data: vec![ZERO; rows * cols],
        }
    }

    /// The n-by-n identity.
    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |r, c| if r == c { ONE } else { ZERO })
    }

    /// The n-by-n exchange matrix: ones on the anti-diagonal, zero elsewhere.
    pub fn exchange(n: usize) -> Self {
        Self::from_fn(n, n, |r, c| if r + c == n - 1 { ONE } else { ZERO })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Row-major entry slice.
    pub fn data(&self) -> &[Complex64] {
        &self.data
    }

    /// Overwrites one entry. The value must be finite.
    pub fn set(&mut self, row: usize, col: usize, value: Complex64) {
        assert!(
            value.re.is_finite() && value.im.is_finite(),
            "entries must be finite"
        );
        self.data[row * self.cols + col] = value;
    }

    /// Standard matrix product.
    pub fn matmul(&self, rhs: &ComplexMatrix) -> Result<ComplexMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::MatmulShape {
                lhs_rows: self.rows,
                lhs_cols: self.cols,
                rhs_rows: rhs.rows,
                rhs_cols: rhs.cols,
            });
        }
        let mut data = vec![ZERO; self.rows * rhs.cols];
        for i in 0..self.rows {
            let out = &mut data[i * rhs.cols..(i + 1) * rhs.cols];
            for k in 0..self.cols {
                let a = self.data[i * self.cols + k];
                let row_k = &rhs.data[k * rhs.cols..(k + 1) * rhs.cols];
                for (o, b) in out.iter_mut().zip(row_k) {
                    *o += a * b;
                }
            }
        }
        Ok(ComplexMatrix {
            rows: self.rows,
            cols: rhs.cols,
            data,
        })
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> ComplexMatrix {
        Self::from_fn(self.cols, self.rows, |r, c| self[(c, r)].conj())
    }

    /// Plain transpose, no conjugation.
    pub fn transpose(&self) -> ComplexMatrix {
        Self::from_fn(self.cols, self.rows, |r, c| self[(c, r)])
    }

    /// Kronecker product: block (p, q) of the result is `self[(p, q)] * rhs`.
    pub fn kron(&self, rhs: &ComplexMatrix) -> ComplexMatrix {
        let rows = self.rows * rhs.rows;
        let cols = self.cols * rhs.cols;
        let mut data = vec![ZERO; rows * cols];
        for p in 0..self.rows {
            for q in 0..self.cols {
                let a = self.data[p * self.cols + q];
                for r in 0..rhs.rows {
                    let dst = (p * rhs.rows + r) * cols + q * rhs.cols;
                    let src = r * rhs.cols;
                    for s in 0..rhs.cols {
                        data[dst + s] = a * rhs.data[src + s];
                    }
                }
            }
        }
        ComplexMatrix { rows, cols, data }
    }

    /// Entrywise scaling.
    pub fn scale(&self, factor: Complex64) -> ComplexMatrix {
        ComplexMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|z| z * factor).collect(),
        }
    }

    /// Entrywise sum. Panics on shape mismatch.
    pub fn add(&self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        ComplexMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    /// Largest entry modulus.
    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// Largest modulus of the entrywise difference. Panics on shape mismatch.
    pub fn max_abs_diff(&self, rhs: &ComplexMatrix) -> f64 {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        self.data
            .iter()
            .zip(&rhs.data)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    /// Frobenius norm.
    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Sum of diagonal entries. Requires a square matrix.
    pub fn trace(&self) -> Result<Complex64> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        Ok((0..self.rows).map(|i| self[(i, i)]).sum())
    }

    /// Checks complex symmetry (plain transpose, no conjugation).
    ///
    /// Passes iff `max |a[p][q] - a[q][p]| <= tol * max(1, max|entry|)`; the
    /// reported defect is that max before thresholding.
    pub fn is_symmetric(&self, tol: f64) -> Result<StructureVerdict> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let mut defect = 0.0f64;
        for p in 0..self.rows {
            for q in (p + 1)..self.cols {
                defect = defect.max((self[(p, q)] - self[(q, p)]).norm());
            }
        }
        Ok(StructureVerdict {
            ok: defect <= scaled_tol(tol, self.max_abs()),
            defect,
        })
    }

    /// Checks unitarity: max entry of `adjoint(a)*a - I` must be at most `tol`.
    ///
    /// The defect is already relative to the identity, so no scaling applies.
    pub fn is_unitary(&self, tol: f64) -> Result<StructureVerdict> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let gram = self.adjoint().matmul(self).expect("square product");
        let mut defect = 0.0f64;
        for r in 0..gram.rows {
            for c in 0..gram.cols {
                let expected = if r == c { ONE } else { ZERO };
                defect = defect.max((gram[(r, c)] - expected).norm());
            }
        }
        Ok(StructureVerdict {
            ok: defect <= tol,
            defect,
        })
    }
}

impl Index<(usize, usize)> for ComplexMatrix {
    type Output = Complex64;

    fn index(&self, (row, col): (usize, usize)) -> &Complex64 {
        debug_assert!(row < self.rows && col < self.cols);
        &self.data[row * self.cols + col]
    }
}
