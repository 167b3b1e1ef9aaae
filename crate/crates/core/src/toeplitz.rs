//! Compact representation of multilevel (block) Toeplitz matrices.
//!
//! A p-level Toeplitz matrix is a Toeplitz arrangement of blocks that are
//! themselves (p-1)-level Toeplitz; the base level holds scalars. With level
//! dimensions (n1, ..., np) the dense form has side `s_p = n1*...*np` but only
//! `prod(2*n_i - 1)` distinct coefficients, one per signed per-level offset
//! vector. This module stores exactly those coefficients and converts between
//! the compact and dense forms.
//!
//! Conventions:
//! - Level dimensions are listed innermost first: `dims[0]` is n1.
//! - Offset vectors are listed outermost first: `(k_p, ..., k_1)` with
//!   `k_i` in `-(n_i-1)..=n_i-1`. Block (i, j) at level `l` carries offset
//!   `k_l = i - j`, so positive offsets sit below the diagonal.
//! - Coefficients are stored lexicographically over `(k_p, ..., k_1)`.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::linalg::{scaled_tol, ComplexMatrix, StructureVerdict};

/// Level dimensions (n1, ..., np), innermost level first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelDims {
    dims: Vec<usize>,
}

impl LevelDims {
    /// Validates that at least one level is present and every dimension is
    /// positive. Dimension-1 levels are allowed and act as no-ops.
    pub fn new(dims: Vec<usize>) -> Result<Self> {
        if dims.is_empty() || dims.contains(&0) {
            return Err(Error::EmptyOrZeroLevelDims);
        }
        Ok(Self { dims })
    }

    /// Number of levels p.
    pub fn levels(&self) -> usize {
        self.dims.len()
    }

    /// Dimensions (n1, ..., np).
    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    /// Dimension of the given 1-based level.
    pub fn dim(&self, level: usize) -> usize {
        self.dims[level - 1]
    }

    /// Partial product `s_k = n1*...*nk`, with `s_0 = 1`.
    pub fn partial_side(&self, k: usize) -> usize {
        self.dims[..k].iter().product()
    }

    /// Dense side length `s_p`.
    pub fn side(&self) -> usize {
        self.partial_side(self.levels())
    }

    /// Number of stored coefficients, `prod(2*n_i - 1)`.
    pub fn coeff_count(&self) -> usize {
        self.dims.iter().map(|n| 2 * n - 1).product()
    }

    /// Storage index of an outermost-first offset vector.
    ///
    /// Panics if the vector has the wrong length or an offset is out of
    /// range; use [`LevelDims::offset_in_range`] to validate external input.
    pub fn offset_index(&self, offsets: &[i64]) -> usize {
        let p = self.levels();
        assert_eq!(offsets.len(), p, "offset vector must have one entry per level");
        let mut index = 0;
        for (j, &k) in offsets.iter().enumerate() {
            let n = self.dims[p - 1 - j] as i64;
            assert!(k.abs() < n, "offset {k} out of range for level size {n}");
            index = index * (2 * n - 1) as usize + (k + n - 1) as usize;
        }
        index
    }

    /// Outermost-first offset vector for a storage index.
    pub fn offset_at(&self, mut index: usize) -> Vec<i64> {
        let p = self.levels();
        let mut offsets = vec![0i64; p];
        for level in 1..=p {
            let n = self.dims[level - 1] as i64;
            let radix = (2 * n - 1) as usize;
            offsets[p - level] = (index % radix) as i64 - (n - 1);
            index /= radix;
        }
        offsets
    }

    /// Whether an outermost-first offset vector indexes a valid coefficient.
    pub fn offset_in_range(&self, offsets: &[i64]) -> bool {
        offsets.len() == self.levels()
            && offsets
                .iter()
                .zip(self.dims.iter().rev())
                .all(|(&k, &n)| (k.unsigned_abs() as usize) < n)
    }

    /// Offset vector (outermost first) realized by dense position `(row, col)`.
    fn offset_of_position(&self, row: usize, col: usize) -> Vec<i64> {
        let p = self.levels();
        let mut offsets = vec![0i64; p];
        for level in 1..=p {
            let stride = self.partial_side(level - 1);
            let n = self.dims[level - 1];
            let r = (row / stride) % n;
            let c = (col / stride) % n;
            offsets[p - level] = r as i64 - c as i64;
        }
        offsets
    }
}

/// A p-level Toeplitz matrix in compact coefficient form.
#[derive(Debug, Clone, PartialEq)]
pub struct MultilevelToeplitz {
    shape: LevelDims,
    coeffs: Vec<Complex64>,
}

impl MultilevelToeplitz {
    /// Builds from a full coefficient tensor in storage order.
    pub fn new(shape: LevelDims, coeffs: Vec<Complex64>) -> Result<Self> {
        let expected = shape.coeff_count();
        if coeffs.len() != expected {
            return Err(Error::CoeffLength {
                expected,
                len: coeffs.len(),
            });
        }
        if let Some(index) = coeffs
            .iter()
            .position(|z| !z.re.is_finite() || !z.im.is_finite())
        {
            return Err(Error::NonFinite { index });
        }
        Ok(Self { shape, coeffs })
    }

    /// The all-zero matrix of the given shape.
    pub fn zero(shape: LevelDims) -> Self {
        let coeffs = vec![Complex64::new(0.0, 0.0); shape.coeff_count()];
        Self { shape, coeffs }
    }

    /// Deterministic pseudo-random coefficients with re and im uniform in
    /// [-1, 1]. The same (shape, seed) pair always produces the same matrix.
    pub fn random(shape: LevelDims, seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let coeffs = (0..shape.coeff_count())
            .map(|_| {
                let re = rng.random_range(-1.0..=1.0);
                let im = rng.random_range(-1.0..=1.0);
                Complex64::new(re, im)
            })
            .collect();
        Self { shape, coeffs }
    }

    pub fn shape(&self) -> &LevelDims {
        &self.shape
    }

    /// Coefficients in storage order (lexicographic over `(k_p, ..., k_1)`).
    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    /// Coefficient at an outermost-first offset vector.
    pub fn coeff(&self, offsets: &[i64]) -> Complex64 {
        self.coeffs[self.shape.offset_index(offsets)]
    }

    /// Offset vectors in storage order, paired with their coefficients.
    pub fn iter(&self) -> impl Iterator<Item = (Vec<i64>, Complex64)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(i, &v)| (self.shape.offset_at(i), v))
    }

    /// The (p-1)-level matrix obtained by fixing the outermost offset.
    ///
    /// Storage is lexicographic with the outermost level first, so this is a
    /// contiguous slice of the coefficient tensor.
    pub fn fix_outermost(&self, k: i64) -> MultilevelToeplitz {
        let p = self.shape.levels();
        assert!(p >= 2, "fixing the outermost level needs p >= 2");
        let n = self.shape.dim(p) as i64;
        assert!(k.abs() < n);
        let inner = LevelDims::new(self.shape.dims()[..p - 1].to_vec()).expect("non-empty");
        let count = inner.coeff_count();
        let start = (k + n - 1) as usize * count;
        MultilevelToeplitz {
            shape: inner,
            coeffs: self.coeffs[start..start + count].to_vec(),
        }
    }

    /// Expands to the dense `s_p x s_p` matrix.
    pub fn to_dense(&self) -> ComplexMatrix {
        let side = self.shape.side();
        let p = self.shape.levels();
        // stride[l-1] = s_{l-1}, radix over offsets at level l is 2*n_l - 1
        let strides: Vec<usize> = (0..p).map(|l| self.shape.partial_side(l)).collect();
        ComplexMatrix::from_fn(side, side, |row, col| {
            let mut index = 0;
            for level in (1..=p).rev() {
                let n = self.shape.dims[level - 1];
                let stride = strides[level - 1];
                let r = (row / stride) % n;
                let c = (col / stride) % n;
                let k = r as i64 - c as i64;
                index = index * (2 * n - 1) + (k + n as i64 - 1) as usize;
            }
            self.coeffs[index]
        })
    }

    /// Extracts the compact form from a dense matrix.
    ///
    /// Each coefficient is read from the first row-major position realizing
    /// its offset vector; every other position realizing the same offset must
    /// agree within `tol` (scaled by `max(1, max|entry|)`), otherwise the
    /// worst-offending offset is reported. No averaging is performed.
    pub fn from_dense(a: &ComplexMatrix, shape: &LevelDims, tol: f64) -> Result<Self> {
        let scan = OffsetScan::run(a, shape)?;
        if scan.defect > scaled_tol(tol, a.max_abs()) {
            return Err(Error::NotToeplitz {
                offset: shape.offset_at(scan.worst_index),
                defect: scan.defect,
            });
        }
        Ok(Self {
            shape: shape.clone(),
            coeffs: scan.representatives,
        })
    }
}

struct OffsetScan {
    representatives: Vec<Complex64>,
    defect: f64,
    worst_index: usize,
}

impl OffsetScan {
    fn run(a: &ComplexMatrix, shape: &LevelDims) -> Result<Self> {
        if !a.is_square() {
            return Err(Error::NotSquare {
                rows: a.rows(),
                cols: a.cols(),
            });
        }
        let side = shape.side();
        if a.rows() != side {
            return Err(Error::SideMismatch {
                side: a.rows(),
                expected: side,
            });
        }
        let count = shape.coeff_count();
        let mut representatives = vec![Complex64::new(0.0, 0.0); count];
        let mut seen = vec![false; count];
        let mut defect = 0.0f64;
        let mut worst_index = 0;
        for row in 0..side {
            for col in 0..side {
                let index = shape.offset_index(&shape.offset_of_position(row, col));
                let value = a[(row, col)];
                if seen[index] {
                    let deviation = (value - representatives[index]).norm();
                    if deviation > defect {
                        defect = deviation;
                        worst_index = index;
                    }
                } else {
                    representatives[index] = value;
                    seen[index] = true;
                }
            }
        }
        debug_assert!(seen.iter().all(|&s| s), "every offset occurs in the dense form");
        Ok(Self {
            representatives,
            defect,
            worst_index,
        })
    }
}

/// Predicate form of [`MultilevelToeplitz::from_dense`]: reports the max
/// deviation across all offsets instead of failing.
pub fn is_multilevel_toeplitz(
    a: &ComplexMatrix,
    shape: &LevelDims,
    tol: f64,
) -> Result<StructureVerdict> {
    let scan = OffsetScan::run(a, shape)?;
    Ok(StructureVerdict {
        ok: scan.defect <= scaled_tol(tol, a.max_abs()),
        defect: scan.defect,
    })
}
