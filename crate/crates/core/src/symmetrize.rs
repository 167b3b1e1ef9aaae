//! Unitary transforms that turn multilevel Toeplitz matrices into complex
//! symmetric ones.
//!
//! Two families of n x n building blocks exist: the parity-dependent `U(n)`
//! (different patterns for even and odd n) and the exchange-based
//! `V(n) = (1/sqrt(2))(I + iJ)`. For a p-level shape, the level-i factor is
//! the Kronecker product `I ⊗ … ⊗ B(n_i) ⊗ … ⊗ I` with the block in slot i
//! counted from the right, and the full transition is the product of all p
//! factors. Conjugating a p-level Toeplitz matrix by the transition yields a
//! symmetric matrix.
//!
//! The factors act on disjoint Kronecker slots, so they commute and their
//! product equals `B(n_p) ⊗ … ⊗ B(n_1)`. That structure allows matrix-free
//! application: each factor is a batch of small n_i x n_i multiplications
//! over a tensor reshape, costing O(s_p * n_i) per level per column instead
//! of O(s_p^2) for a dense multiply.

use num_complex::Complex64;
use std::f64::consts::FRAC_1_SQRT_2;

use crate::error::{Error, Result};
use crate::linalg::ComplexMatrix;
use crate::toeplitz::{LevelDims, MultilevelToeplitz};

/// Which family of per-level blocks the transition is built from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TransitionKind {
    /// The parity-dependent blocks: one pattern for even n, one for odd n.
    ParityU,
    /// The exchange-based blocks `(1/sqrt(2))(I_n + iJ_n)`, parity-free.
    ExchangeV,
}

/// Which side of the operand a transform is applied to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// The parity-dependent n x n unitary block.
///
/// With m = floor(n/2), row r (1-based) is `(e_r + i*e_{n+1-r})/sqrt(2)` for
/// r <= m and `(e_{n+1-r} - i*e_r)/sqrt(2)` for the mirrored bottom rows; odd
/// n has the exact central row `e_{m+1}`. For n = 1 this degenerates to
/// `[[1]]`.
pub fn build_u(n: usize) -> ComplexMatrix {
    assert!(n >= 1, "block size must be positive");
    let m = n / 2;
    let h = FRAC_1_SQRT_2;
    let mut u = ComplexMatrix::zeros(n, n);
    for r in 1..=m {
        u.set(r - 1, r - 1, Complex64::new(h, 0.0));
        u.set(r - 1, n - r, Complex64::new(0.0, h));
    }
    if n % 2 == 1 {
        // sqrt(2)/sqrt(2): stored exactly so the central row is a unit vector
        u.set(m, m, Complex64::new(1.0, 0.0));
    }
    for r in (m + n % 2 + 1)..=n {
        u.set(r - 1, n - r, Complex64::new(h, 0.0));
        u.set(r - 1, r - 1, Complex64::new(0.0, -h));
    }
    u
}

/// The exchange-based n x n unitary block `(1/sqrt(2))(I_n + iJ_n)`.
///
/// For odd n the centre of the exchange matrix meets the diagonal, giving
/// the entry `(1+i)/sqrt(2)`.
pub fn build_v(n: usize) -> ComplexMatrix {
    assert!(n >= 1, "block size must be positive");
    let h = FRAC_1_SQRT_2;
    let mut v = ComplexMatrix::zeros(n, n);
    for r in 0..n {
        if r == n - 1 - r {
            v.set(r, r, Complex64::new(h, h));
        } else {
            v.set(r, r, Complex64::new(h, 0.0));
            v.set(r, n - 1 - r, Complex64::new(0.0, h));
        }
    }
    v
}

fn build_block(n: usize, kind: TransitionKind) -> ComplexMatrix {
    match kind {
        TransitionKind::ParityU => build_u(n),
        TransitionKind::ExchangeV => build_v(n),
    }
}

/// The s_p x s_p factor for one level:
/// `I_{n_p} ⊗ … ⊗ I_{n_{i+1}} ⊗ B(n_i) ⊗ I_{n_{i-1}} ⊗ … ⊗ I_{n_1}`.
pub fn build_level_factor(
    shape: &LevelDims,
    level: usize,
    kind: TransitionKind,
) -> Result<ComplexMatrix> {
    let p = shape.levels();
    if level == 0 || level > p {
        return Err(Error::LevelOutOfRange { level, levels: p });
    }
    let mut factor = ComplexMatrix::identity(1);
    for l in (1..=p).rev() {
        let slot = if l == level {
            build_block(shape.dim(l), kind)
        } else {
            ComplexMatrix::identity(shape.dim(l))
        };
        factor = factor.kron(&slot);
    }
    Ok(factor)
}

/// A transition held as its per-level blocks rather than a dense matrix.
///
/// `factors[i-1]` is the n_i x n_i block for level i; the transition it
/// represents is the product of all [`build_level_factor`] outputs, equal to
/// `B(n_p) ⊗ … ⊗ B(n_1)`.
#[derive(Debug, Clone)]
pub struct TransitionPlan {
    shape: LevelDims,
    kind: TransitionKind,
    factors: Vec<ComplexMatrix>,
}

/// Builds the transition plan for a shape: one unitary block per level.
pub fn build_transition(shape: LevelDims, kind: TransitionKind) -> TransitionPlan {
    let factors = (1..=shape.levels())
        .map(|i| build_block(shape.dim(i), kind))
        .collect();
    TransitionPlan { shape, kind, factors }
}

impl TransitionPlan {
    pub fn shape(&self) -> &LevelDims {
        &self.shape
    }

    pub fn kind(&self) -> TransitionKind {
        self.kind
    }

    /// The n_i x n_i block for 1-based level i.
    pub fn factor(&self, level: usize) -> &ComplexMatrix {
        &self.factors[level - 1]
    }

    /// Materializes the full transition `B(n_p) ⊗ … ⊗ B(n_1)`.
    pub fn dense(&self) -> ComplexMatrix {
        let p = self.shape.levels();
        let mut acc = self.factors[p - 1].clone();
        for level in (1..p).rev() {
            acc = acc.kron(&self.factors[level - 1]);
        }
        acc
    }

    /// Multiplies `x` by the transition (or its adjoint) without forming any
    /// s_p x s_p factor. `Side::Left` computes `U x` (or `U* x`), `Side::Right`
    /// computes `x U` (or `x U*`).
    pub fn apply(&self, x: &ComplexMatrix, side: Side, conjugate: bool) -> Result<ComplexMatrix> {
        self.apply_prefix(self.shape.levels(), x, side, conjugate)
            .map(|(result, _)| result)
    }

    /// [`TransitionPlan::apply`] plus the number of complex scalar
    /// multiplications performed, for cost assertions.
    pub fn apply_counting(
        &self,
        x: &ComplexMatrix,
        side: Side,
        conjugate: bool,
    ) -> Result<(ComplexMatrix, u64)> {
        self.apply_prefix(self.shape.levels(), x, side, conjugate)
    }

    /// Applies only the factors of levels `1..=levels` (innermost first).
    fn apply_prefix(
        &self,
        levels: usize,
        x: &ComplexMatrix,
        side: Side,
        conjugate: bool,
    ) -> Result<(ComplexMatrix, u64)> {
        let transform_side = self.shape.side();
        let conforms = match side {
            Side::Left => x.rows() == transform_side,
            Side::Right => x.cols() == transform_side,
        };
        if !conforms {
            return Err(Error::ApplyShape {
                rows: x.rows(),
                cols: x.cols(),
                side: transform_side,
            });
        }
        let mut multiplies = 0u64;
        let mut result = x.clone();
        for level in 1..=levels {
            let block = if conjugate {
                self.factors[level - 1].adjoint()
            } else {
                self.factors[level - 1].clone()
            };
            let inner = self.shape.partial_side(level - 1);
            result = apply_block(&block, inner, &result, side, &mut multiplies);
        }
        Ok((result, multiplies))
    }
}

/// One batched level multiplication: `block` acts on the length-n axis with
/// stride `inner` inside the tensor reshape of the s_p-sized dimension of x.
fn apply_block(
    block: &ComplexMatrix,
    inner: usize,
    x: &ComplexMatrix,
    side: Side,
    multiplies: &mut u64,
) -> ComplexMatrix {
    let n = block.rows();
    let span = n * inner;
    // index = base + a*inner where base combines the outer group and the
    // position inside the inner stride
    let split = |index: usize| (index / span * span + index % inner, index % span / inner);
    match side {
        Side::Left => ComplexMatrix::from_fn(x.rows(), x.cols(), |r, c| {
            let (base, a) = split(r);
            let mut sum = Complex64::new(0.0, 0.0);
            for j in 0..n {
                sum += block[(a, j)] * x[(base + j * inner, c)];
            }
            *multiplies += n as u64;
            sum
        }),
        Side::Right => ComplexMatrix::from_fn(x.rows(), x.cols(), |r, c| {
            let (base, a) = split(c);
            let mut sum = Complex64::new(0.0, 0.0);
            for j in 0..n {
                sum += x[(r, base + j * inner)] * block[(j, a)];
            }
            *multiplies += n as u64;
            sum
        }),
    }
}

/// Conjugates the dense expansion by the full transition: `U* T U`.
///
/// The result is complex symmetric (checked by callers where it matters;
/// see [`crate::linalg::ComplexMatrix::is_symmetric`]).
pub fn symmetrize(t: &MultilevelToeplitz, kind: TransitionKind) -> ComplexMatrix {
    let plan = build_transition(t.shape().clone(), kind);
    let dense = t.to_dense();
    let left = plan
        .apply(&dense, Side::Left, true)
        .expect("expansion side matches the plan shape");
    plan.apply(&left, Side::Right, false)
        .expect("expansion side matches the plan shape")
}

/// Conjugates by the factors of levels `1..=up_to_level` only.
///
/// Level count 0 returns the dense expansion unchanged; the full level count
/// reduces to [`symmetrize`]. At k levels every s_k x s_k block of the result
/// is symmetric even though the whole matrix need not be.
pub fn symmetrize_intermediate(
    t: &MultilevelToeplitz,
    kind: TransitionKind,
    up_to_level: usize,
) -> Result<ComplexMatrix> {
    let p = t.shape().levels();
    if up_to_level > p {
        return Err(Error::LevelOutOfRange {
            level: up_to_level,
            levels: p,
        });
    }
    let plan = build_transition(t.shape().clone(), kind);
    let dense = t.to_dense();
    let (left, _) = plan.apply_prefix(up_to_level, &dense, Side::Left, true)?;
    let (full, _) = plan.apply_prefix(up_to_level, &left, Side::Right, false)?;
    Ok(full)
}

/// Closed-form symmetrization of a 1-level Toeplitz matrix, equivalent to
/// conjugating by `V(n)`:
/// `b_ij = (t_{i-j} + t_{j-i})/2 + (i/2)(t_{i+j-n-1} - t_{n+1-i-j})`.
///
/// All four subscripts stay within `-(n-1)..=n-1` for 1-based i, j <= n.
pub fn symmetrize_1level_direct(t: &MultilevelToeplitz) -> Result<ComplexMatrix> {
    let p = t.shape().levels();
    if p != 1 {
        return Err(Error::OneLevelOnly { levels: p });
    }
    let n = t.shape().dim(1) as i64;
    let half_i = Complex64::new(0.0, 0.5);
    Ok(ComplexMatrix::from_fn(n as usize, n as usize, |r, c| {
        let i = r as i64 + 1;
        let j = c as i64 + 1;
        let symmetric_part = 0.5 * (t.coeff(&[i - j]) + t.coeff(&[j - i]));
        let anti_part = half_i * (t.coeff(&[i + j - n - 1]) - t.coeff(&[n + 1 - i - j]));
        symmetric_part + anti_part
    }))
}
