//! Dense versus tensor-factorized application of the Fourier matrix of `Z₂(θ)^⊗k`.

use std::time::Instant;

use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::constructions::{direct_product, z2_theta};
use crate::duality::{character_table, fourier_matrix};
use crate::error::Result;

/// Kronecker product, first factor most significant (matching `direct_product` indexing).
pub fn kron(a: &DMatrix<Complex64>, b: &DMatrix<Complex64>) -> DMatrix<Complex64> {
    let (ra, ca) = a.shape();
    let (rb, cb) = b.shape();
    DMatrix::from_fn(ra * rb, ca * cb, |r, c| a[(r / rb, c / cb)] * b[(r % rb, c % cb)])
}

/// `(F₁ ⊗ … ⊗ F_k) v` by one mode product per factor.
pub fn factorized_apply(factors: &[DMatrix<Complex64>], v: &[Complex64]) -> Vec<Complex64> {
    let mut cur = v.to_vec();
    let mut next = vec![Complex64::new(0.0, 0.0); v.len()];
    let mut inner = v.len();
    for f in factors {
        let d = f.nrows();
        inner /= d;
        let outer = v.len() / (inner * d);
        for o in 0..outer {
            let base = o * d * inner;
            for i in 0..inner {
                for r in 0..d {
                    let mut acc = Complex64::new(0.0, 0.0);
                    for c in 0..d {
                        acc += f[(r, c)] * cur[base + c * inner + i];
                    }
                    next[base + r * inner + i] = acc;
                }
            }
        }
        std::mem::swap(&mut cur, &mut next);
    }
    cur
}

pub fn dense_apply(m: &DMatrix<Complex64>, v: &[Complex64]) -> Vec<Complex64> {
    let n = m.nrows();
    (0..n).map(|r| (0..n).map(|c| m[(r, c)] * v[c]).sum()).collect()
}

#[derive(Debug, Clone, serde::Serialize)]
pub struct BenchRow {
    pub k: usize,
    pub dim: usize,
    pub dense_ns: f64,
    pub factorized_ns: f64,
    /// `max |dense − factorized|`
    pub max_diff: f64,
}

#[derive(Debug, Clone, serde::Serialize)]
pub struct BenchReport {
    pub theta: f64,
    pub rows: Vec<BenchRow>,
    /// Smallest `k` from which the factorized transform is faster at every larger size.
    pub crossover: Option<usize>,
    /// Largest `k` at which the Kronecker matrix was matched against the product
    /// hypergroup's own Fourier matrix, up to row order.
    pub cross_checked_up_to: usize,
    pub cross_check_residual: f64,
}

/// Per-call time in nanoseconds, best of three rounds of `reps` calls.
fn time_ns(reps: usize, mut f: impl FnMut()) -> f64 {
    (0..3)
        .map(|_| {
            let start = Instant::now();
            for _ in 0..reps {
                f();
            }
            start.elapsed().as_nanos() as f64 / reps as f64
        })
        .fold(f64::INFINITY, f64::min)
}

/// Largest row-matched entrywise difference between `a` and `b`.
fn rows_match_up_to_order(a: &DMatrix<Complex64>, b: &DMatrix<Complex64>) -> f64 {
    let n = a.nrows();
    let mut used = vec![false; n];
    let mut worst = 0.0f64;
    for r in 0..n {
        let best = (0..n)
            .filter(|&s| !used[s])
            .map(|s| {
                let d = (0..n).map(|c| (a[(r, c)] - b[(s, c)]).norm()).fold(0.0, f64::max);
                (s, d)
            })
            .min_by(|x, y| x.1.total_cmp(&y.1));
        match best {
            Some((s, d)) => {
                used[s] = true;
                worst = worst.max(d);
            }
            None => return f64::INFINITY,
        }
    }
    worst
}

pub fn run_bench(theta: f64, max_k: usize, seed: u64) -> Result<BenchReport> {
    let base = z2_theta(theta)?;
    let f1 = fourier_matrix(&base, &character_table(&base)?)?.matrix().clone();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rows = Vec::new();
    let mut dense = f1.clone();
    let mut product = base.clone();
    let mut cross_checked_up_to = 0;
    let mut cross_check_residual = 0.0f64;
    for k in 1..=max_k {
        if k > 1 {
            dense = kron(&dense, &f1);
            if k <= 4 {
                product = direct_product(&product, &base)?;
            }
        }
        if k <= 4 {
            let own = fourier_matrix(&product, &character_table(&product)?)?;
            cross_check_residual = cross_check_residual.max(rows_match_up_to_order(&dense, own.matrix()));
            cross_checked_up_to = k;
        }
        let dim = 1usize << k;
        let v: Vec<Complex64> = (0..dim)
            .map(|_| Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)))
            .collect();
        let factors = vec![f1.clone(); k];
        let d_out = dense_apply(&dense, &v);
        let f_out = factorized_apply(&factors, &v);
        let max_diff = d_out.iter().zip(&f_out).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max);
        let reps = (1 << 16) / dim.max(1) + 1;
        let dense_ns = time_ns(reps, || {
            std::hint::black_box(dense_apply(&dense, std::hint::black_box(&v)));
        });
        let factorized_ns = time_ns(reps, || {
            std::hint::black_box(factorized_apply(&factors, std::hint::black_box(&v)));
        });
        rows.push(BenchRow { k, dim, dense_ns, factorized_ns, max_diff });
    }
    let crossover = (0..rows.len())
        .find(|&i| rows[i..].iter().all(|r| r.factorized_ns < r.dense_ns))
        .map(|i| rows[i].k);
    Ok(BenchReport { theta, rows, crossover, cross_checked_up_to, cross_check_residual })
}

impl BenchReport {
    pub fn to_csv(&self) -> String {
        let mut out = String::from("k,dim,dense_ns,factorized_ns,max_diff\n");
        for r in &self.rows {
            out.push_str(&format!(
                "{},{},{:.1},{:.1},{:e}\n",
                r.k, r.dim, r.dense_ns, r.factorized_ns, r.max_diff
            ));
        }
        out
    }
}
