//! Recovery of a p-level Toeplitz matrix from a qualifying symmetric one.
//!
//! For shapes with every level dimension equal to 2, the symmetrizing
//! transition maps the 2^p x 2^p Toeplitz matrices onto exactly the matrices
//! whose q-level blocks (the uniform partition into 2^q x 2^q sub-blocks)
//! are all complex symmetric, for every q = 1..=p — q = p being symmetry of
//! the whole matrix. Two consequences of that description are cheap to check
//! and give precise diagnostics: global symmetry, and a constant main
//! anti-diagonal within every q-level block. `desymmetrize` screens those
//! first; because they stop being sufficient once p >= 3 (a 4x4 or larger
//! off-diagonal block can be asymmetric without disturbing any
//! anti-diagonal), the recovery then validates its own output, so a matrix
//! outside the exact set is always rejected.

use crate::error::{Error, Result};
use crate::linalg::{scaled_tol, ComplexMatrix, StructureVerdict};
use crate::symmetrize::{build_transition, Side, TransitionKind, TransitionPlan};
use crate::toeplitz::{LevelDims, MultilevelToeplitz};

/// Aggregated structure check for a would-be desymmetrization input.
#[derive(Debug, Clone)]
pub struct AntiDiagReport {
    /// p, where the matrix is 2^p x 2^p.
    pub levels: usize,
    /// Max anti-diagonal spread among all q-level blocks, indexed by q-1.
    pub per_level_defect: Vec<f64>,
    /// Max `|s[p][q] - s[q][p]|` over the upper triangle.
    pub symmetry_defect: f64,
    /// Whether the symmetry defect passed the scaled tolerance.
    pub symmetric: bool,
    /// The raw tolerance the report was built with.
    pub tol: f64,
    /// The entry-scaled threshold the defects were compared against.
    pub threshold: f64,
}

impl AntiDiagReport {
    /// Whether all screened conditions hold: symmetric and constant
    /// anti-diagonals at every level.
    pub fn passes(&self) -> bool {
        self.symmetric && self.per_level_defect.iter().all(|&d| d <= self.threshold)
    }

    /// The failing level with the largest defect (ties go to the outermost
    /// level), if any level fails.
    pub fn worst_failing_level(&self) -> Option<(usize, f64)> {
        let mut worst: Option<(usize, f64)> = None;
        for (index, &defect) in self.per_level_defect.iter().enumerate() {
            if defect > self.threshold && worst.is_none_or(|(_, w)| defect >= w) {
                worst = Some((index + 1, defect));
            }
        }
        worst
    }
}

/// Validates that `s` is square with side 2^p, p >= 1, and returns p.
fn power_of_two_levels(s: &ComplexMatrix) -> Result<usize> {
    if !s.is_square() {
        return Err(Error::NotSquare {
            rows: s.rows(),
            cols: s.cols(),
        });
    }
    let side = s.rows();
    if side < 2 || !side.is_power_of_two() {
        return Err(Error::NotPowerOfTwo { side });
    }
    Ok(side.trailing_zeros() as usize)
}

/// Max anti-diagonal spread over all 2^q x 2^q blocks of `s`.
fn q_level_defect(s: &ComplexMatrix, q: usize) -> f64 {
    let side = s.rows();
    let block = 1usize << q;
    let mut worst = 0.0f64;
    for block_row in (0..side).step_by(block) {
        for block_col in (0..side).step_by(block) {
            for a in 0..block {
                let za = s[(block_row + a, block_col + block - 1 - a)];
                for b in (a + 1)..block {
                    let zb = s[(block_row + b, block_col + block - 1 - b)];
                    worst = worst.max((za - zb).norm());
                }
            }
        }
    }
    worst
}

/// Checks anti-diagonal constancy of the q-level blocks only.
///
/// The tolerance is scaled by max(1, max|entry|) as in symmetry checks.
pub fn has_q_level_constant_antidiagonals(
    s: &ComplexMatrix,
    q: usize,
    tol: f64,
) -> Result<StructureVerdict> {
    let levels = power_of_two_levels(s)?;
    if q == 0 || q > levels {
        return Err(Error::LevelOutOfRange { level: q, levels });
    }
    let defect = q_level_defect(s, q);
    Ok(StructureVerdict {
        ok: defect <= scaled_tol(tol, s.max_abs()),
        defect,
    })
}

/// Runs the q-level check for every q = 1..=p plus the symmetry check.
pub fn has_constant_antidiagonals_all_levels(s: &ComplexMatrix, tol: f64) -> Result<AntiDiagReport> {
    let levels = power_of_two_levels(s)?;
    let symmetry = s.is_symmetric(tol)?;
    Ok(AntiDiagReport {
        levels,
        per_level_defect: (1..=levels).map(|q| q_level_defect(s, q)).collect(),
        symmetry_defect: symmetry.defect,
        symmetric: symmetry.ok,
        tol,
        threshold: scaled_tol(tol, s.max_abs()),
    })
}

/// The transition for the all-levels-2 shape of p levels: the fixed unitary
/// every 2^p x 2^p recovery conjugates by.
pub fn build_u_p(p: usize) -> TransitionPlan {
    assert!(p >= 1, "at least one level is required");
    let shape = LevelDims::new(vec![2; p]).expect("positive dims");
    build_transition(shape, TransitionKind::ParityU)
}

/// Recovers the p-level Toeplitz matrix T with `s = U* T U` where U is
/// [`build_u_p`]'s transition.
///
/// Symmetry and per-level anti-diagonal constancy are screened first (scaled
/// tolerance) with dedicated errors. Those conditions are necessary but not
/// sufficient for p >= 3, so the conjugated result is validated as a
/// multilevel Toeplitz matrix before the compact form is returned; inputs in
/// the gap fail with [`Error::NotToeplitz`]. The conjugation itself is
/// matrix-free.
pub fn desymmetrize(s: &ComplexMatrix, tol: f64) -> Result<MultilevelToeplitz> {
    let report = has_constant_antidiagonals_all_levels(s, tol)?;
    if !report.symmetric {
        return Err(Error::NotSymmetric {
            defect: report.symmetry_defect,
        });
    }
    if let Some((level, defect)) = report.worst_failing_level() {
        return Err(Error::NotConstantAntidiagonal { level, defect });
    }
    let plan = build_u_p(report.levels);
    let left = plan
        .apply(s, Side::Left, false)
        .expect("validated side matches the plan shape");
    let toeplitz_dense = plan
        .apply(&left, Side::Right, true)
        .expect("validated side matches the plan shape");
    let shape = LevelDims::new(vec![2; report.levels]).expect("positive dims");
    MultilevelToeplitz::from_dense(&toeplitz_dense, &shape, tol)
}
