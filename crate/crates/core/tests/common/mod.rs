//! Helpers shared by the integration suites.
#![allow(dead_code)]

use mltoeplitz::{ComplexMatrix, LevelDims, MultilevelToeplitz};
use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

pub fn dims(d: &[usize]) -> LevelDims {
    LevelDims::new(d.to_vec()).unwrap()
}

/// Builds a dense matrix from rows of (re, im) pairs.
pub fn cm(rows: &[&[(f64, f64)]]) -> ComplexMatrix {
    let cols = rows[0].len();
    assert!(rows.iter().all(|r| r.len() == cols));
    ComplexMatrix::from_fn(rows.len(), cols, |r, col| {
        let (re, im) = rows[r][col];
        Complex64::new(re, im)
    })
}

/// The 6x6 two-level worked example with dims (3, 2): inner blocks
/// T0 = [[i,1,0],[2,i,1],[3,2,i]], T-1 = [[4,i,1],[i,4,i],[1,i,4]],
/// T1 = [[5,2,i],[0,5,2],[1,0,5]].
pub fn two_level_fixture() -> MultilevelToeplitz {
    let shape = dims(&[3, 2]);
    let mut coeffs = vec![c(0.0, 0.0); shape.coeff_count()];
    let table: &[(i64, i64, f64, f64)] = &[
        (0, 0, 0., 1.),
        (0, -1, 1., 0.),
        (0, -2, 0., 0.),
        (0, 1, 2., 0.),
        (0, 2, 3., 0.),
        (-1, 0, 4., 0.),
        (-1, -1, 0., 1.),
        (-1, -2, 1., 0.),
        (-1, 1, 0., 1.),
        (-1, 2, 1., 0.),
        (1, 0, 5., 0.),
        (1, -1, 2., 0.),
        (1, -2, 0., 1.),
        (1, 1, 0., 0.),
        (1, 2, 1., 0.),
    ];
    for &(k2, k1, re, im) in table {
        coeffs[shape.offset_index(&[k2, k1])] = c(re, im);
    }
    MultilevelToeplitz::new(shape, coeffs).unwrap()
}

/// The 8x8 three-level worked example with dims (2, 2, 2); the table lists
/// (k3, k2, t0, t-1, t1) for the innermost level.
pub fn three_level_fixture() -> MultilevelToeplitz {
    let shape = dims(&[2, 2, 2]);
    let mut coeffs = vec![c(0.0, 0.0); shape.coeff_count()];
    let i = c(0., 1.);
    let re = |x: f64| c(x, 0.);
    let table: &[(i64, i64, Complex64, Complex64, Complex64)] = &[
        (0, 0, re(2.), re(3.), re(3.)),
        (0, -1, re(4.), re(5.), re(6.)),
        (0, 1, re(6.), re(7.), re(8.)),
        (-1, 0, re(1.), re(0.), re(2.)),
        (-1, -1, i, re(3.), re(3.)),
        (-1, 1, re(7.), re(5.), re(5.)),
        (1, 0, re(3.), i, i),
        (1, -1, re(4.), re(1.), re(1.)),
        (1, 1, re(6.), i, i),
    ];
    for &(k3, k2, t0, tm1, tp1) in table {
        coeffs[shape.offset_index(&[k3, k2, 0])] = t0;
        coeffs[shape.offset_index(&[k3, k2, -1])] = tm1;
        coeffs[shape.offset_index(&[k3, k2, 1])] = tp1;
    }
    MultilevelToeplitz::new(shape, coeffs).unwrap()
}

/// Every shape with 1 <= p <= 3 levels and n_i in {1, 2, 3, 4}.
pub fn small_shapes() -> Vec<Vec<usize>> {
    let mut shapes = Vec::new();
    for n1 in 1..=4usize {
        shapes.push(vec![n1]);
        for n2 in 1..=4usize {
            shapes.push(vec![n1, n2]);
            for n3 in 1..=4usize {
                shapes.push(vec![n1, n2, n3]);
            }
        }
    }
    shapes
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, i: usize) -> usize {
        if self.parent[i] != i {
            let root = self.find(self.parent[i]);
            self.parent[i] = root;
        }
        self.parent[i]
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra] = rb;
        }
    }
}

/// Samples a random matrix from the exact recoverable set: every q-level
/// block is complex symmetric, for q = 1..=p (q = p being the whole matrix).
///
/// All entry-equality constraints are joined into orbits with a union-find;
/// each orbit then receives one random value. Global symmetry and constant
/// anti-diagonals at every level follow from the block conditions, so the
/// output also passes the screening checks.
pub fn qualifying_symmetric(levels: usize, seed: u64) -> ComplexMatrix {
    assert!(levels >= 1);
    let side = 1usize << levels;
    let id = |r: usize, col: usize| r * side + col;
    let mut uf = UnionFind::new(side * side);
    for q in 1..=levels {
        let block = 1usize << q;
        for block_row in (0..side).step_by(block) {
            for block_col in (0..side).step_by(block) {
                for a in 0..block {
                    for b in (a + 1)..block {
                        uf.union(id(block_row + a, block_col + b), id(block_row + b, block_col + a));
                    }
                }
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut orbit_value: Vec<Option<Complex64>> = vec![None; side * side];
    ComplexMatrix::from_fn(side, side, |r, col| {
        let root = uf.find(id(r, col));
        *orbit_value[root].get_or_insert_with(|| {
            c(rng.random_range(-1.0..=1.0), rng.random_range(-1.0..=1.0))
        })
    })
}

/// Eigenvalues via an external Schur decomposition (test oracle only).
pub fn eigenvalues(m: &ComplexMatrix) -> Vec<Complex64> {
    let n = m.rows();
    let dm = DMatrix::from_fn(n, n, |r, col| m[(r, col)]);
    let (_, t) = dm.schur().unpack();
    (0..n).map(|k| t[(k, k)]).collect()
}

/// Max distance under greedy nearest-neighbour matching of two spectra.
pub fn spectrum_distance(a: &[Complex64], b: &[Complex64]) -> f64 {
    assert_eq!(a.len(), b.len());
    let mut used = vec![false; b.len()];
    let mut worst = 0.0f64;
    for &x in a {
        let mut best: Option<(usize, f64)> = None;
        for (j, &y) in b.iter().enumerate() {
            if !used[j] {
                let d = (x - y).norm();
                if best.is_none_or(|(_, bd)| d < bd) {
                    best = Some((j, d));
                }
            }
        }
        let (j, d) = best.expect("same length spectra");
        used[j] = true;
        worst = worst.max(d);
    }
    worst
}
