//! Characters, Plancherel measure and the unitary Fourier transform of a finite commutative
//! hypergroup, plus the dual convolution used to test strongness.
//!
//! Characters are recovered as joint eigenvectors of the translation operators. A single
//! seeded random combination of the operators splits every joint eigenspace; each
//! eigenvector is normalized to `ρ(e) = 1` and its values read off as Rayleigh quotients.
//!
//! Conventions: the Fourier matrix is `F[ρ, x] = √(ω{x} π{ρ}) ρ(x)` in the primed bases
//! `|x⟩′ = ω{x}^{1/2}|x⟩`, `|ρ⟩′ = π{ρ}^{1/2}|ρ⟩`. The forward transform of a function is
//! `f̂(ρ) = Σ_x f(x) ρ(x) ω{x}` and the inverse is its adjoint
//! `ǩ(x) = Σ_ρ k(ρ) conj(ρ(x)) π{ρ}`.

use std::cmp::Ordering;

use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::hypergroup::{validate, FiniteHypergroup, Measure, StructureTensor, TOL};

/// Seed of the random operator combination used to split joint eigenspaces.
const CHARACTER_SEED: u64 = 0x6b61_7261_6374_6572;
const MAX_RETRIES: usize = 8;
/// Two characters closer than this (max-norm) are treated as the same character.
const DEDUP_TOL: f64 = 1e-6;
/// Residual bound for multiplicativity of emitted characters.
pub const MULTIPLICATIVITY_TOL: f64 = 1e-8;
pub const UNITARITY_TOL: f64 = 1e-10;

/// Values `ρ(x)` of a character over the element indices.
#[derive(Debug, Clone, PartialEq)]
pub struct Character(pub Vec<Complex64>);

impl Character {
    pub fn values(&self) -> &[Complex64] {
        &self.0
    }

    #[inline]
    pub fn at(&self, x: usize) -> Complex64 {
        self.0[x]
    }

    pub fn conj(&self) -> Character {
        Character(self.0.iter().map(|v| v.conj()).collect())
    }

    pub fn max_distance(&self, other: &Character) -> f64 {
        self.0.iter().zip(&other.0).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max)
    }

    /// `max_{x,y} |ρ(x*y) − ρ(x)ρ(y)|`.
    pub fn multiplicativity_residual(&self, k: &FiniteHypergroup) -> f64 {
        let n = k.order();
        let mut r = 0.0f64;
        for x in 0..n {
            for y in 0..n {
                r = r.max((k.eval_translated(&self.0, x, y) - self.0[x] * self.0[y]).norm());
            }
        }
        r
    }

    /// `max_x |ρ(x̄) − conj ρ(x)|`.
    pub fn involution_residual(&self, k: &FiniteHypergroup) -> f64 {
        (0..k.order()).map(|x| (self.0[k.inv(x)] - self.0[x].conj()).norm()).fold(0.0, f64::max)
    }
}

/// The characters of a commutative hypergroup in canonical order, with Plancherel weights.
#[derive(Debug, Clone)]
pub struct CharacterTable {
    characters: Vec<Character>,
    plancherel: Vec<f64>,
}

impl CharacterTable {
    pub fn characters(&self) -> &[Character] {
        &self.characters
    }

    pub fn character(&self, rho: usize) -> &Character {
        &self.characters[rho]
    }

    #[inline]
    pub fn value(&self, rho: usize, x: usize) -> Complex64 {
        self.characters[rho].0[x]
    }

    pub fn plancherel(&self) -> &[f64] {
        &self.plancherel
    }

    pub fn len(&self) -> usize {
        self.characters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.characters.is_empty()
    }

    /// Index of the conjugate character `ρ̄`.
    pub fn conjugate_index(&self, rho: usize) -> usize {
        let target = self.characters[rho].conj();
        (0..self.len())
            .min_by(|&a, &b| {
                target
                    .max_distance(&self.characters[a])
                    .total_cmp(&target.max_distance(&self.characters[b]))
            })
            .expect("non-empty table")
    }

    /// Index of the character closest to the given values, if within `tol`.
    pub fn find(&self, values: &[Complex64], tol: f64) -> Option<usize> {
        let c = Character(values.to_vec());
        self.characters.iter().position(|r| r.max_distance(&c) <= tol)
    }
}

/// The linearized translations `(L_i)[k][j] = n[i][j][k]`, i.e. `L_i μ = δ_i * μ`.
pub fn translation_operators(k: &FiniteHypergroup) -> Result<Vec<DMatrix<f64>>> {
    let n = k.order();
    let ops: Vec<DMatrix<f64>> = (0..n)
        .map(|i| DMatrix::from_fn(n, n, |row, col| k.tensor().get(i, col, row)))
        .collect();
    let mut residual = 0.0f64;
    for a in 0..n {
        for b in (a + 1)..n {
            let c = &ops[a] * &ops[b] - &ops[b] * &ops[a];
            residual = residual.max(c.amax());
        }
    }
    if residual > TOL {
        return Err(Error::NotCommutative { residual });
    }
    Ok(ops)
}

/// Computes the full character table of a commutative hypergroup.
pub fn character_table(k: &FiniteHypergroup) -> Result<CharacterTable> {
    let residual = k.commutativity_residual();
    if residual > TOL {
        return Err(Error::NotCommutative { residual });
    }
    let n = k.order();
    // Characters are eigenvectors of the transposed translations: Σ_k n[i][j][k] ρ(k) = ρ(i) ρ(j).
    let ops: Vec<DMatrix<Complex64>> = (0..n)
        .map(|i| DMatrix::from_fn(n, n, |j, kk| Complex64::new(k.tensor().get(i, j, kk), 0.0)))
        .collect();

    let mut rng = ChaCha8Rng::seed_from_u64(CHARACTER_SEED);
    let mut found = 0;
    for _ in 0..=MAX_RETRIES {
        let weights: Vec<f64> = (0..n).map(|_| rng.random_range(0.5..1.5)).collect();
        match split_characters(k, &ops, &weights) {
            Ok(chars) => {
                let chars = canonical_order(chars);
                let plancherel = plancherel(k, &chars)?;
                return Ok(CharacterTable { characters: chars, plancherel });
            }
            Err(count) => found = count,
        }
    }
    Err(Error::CharacterDefect { found, expected: n })
}

/// One attempt at extracting all characters from a weighted operator combination.
/// Returns the number of usable characters on failure.
fn split_characters(
    k: &FiniteHypergroup,
    ops: &[DMatrix<Complex64>],
    weights: &[f64],
) -> std::result::Result<Vec<Character>, usize> {
    let n = k.order();
    let mut combo = DMatrix::<f64>::zeros(n, n);
    for (op, &w) in ops.iter().zip(weights) {
        combo += op.map(|c| c.re) * w;
    }
    let eigenvalues = combo.complex_eigenvalues();
    let scale = 1.0 + eigenvalues.iter().map(|l| l.norm()).fold(0.0, f64::max);
    for a in 0..n {
        for b in (a + 1)..n {
            if (eigenvalues[a] - eigenvalues[b]).norm() < 1e-6 * scale {
                return Err(0);
            }
        }
    }

    let combo_c = combo.map(|v| Complex64::new(v, 0.0));
    let mut chars: Vec<Character> = Vec::with_capacity(n);
    for &lambda in eigenvalues.iter() {
        let shifted = &combo_c - DMatrix::<Complex64>::identity(n, n) * lambda;
        let svd = shifted.svd(false, true);
        let v_t = svd.v_t.expect("requested V^H");
        let (idx, _) = svd
            .singular_values
            .iter()
            .enumerate()
            .min_by(|a, b| a.1.total_cmp(b.1))
            .expect("non-empty");
        let v: Vec<Complex64> = v_t.row(idx).iter().map(|c| c.conj()).collect();
        let norm2: f64 = v.iter().map(|c| c.norm_sqr()).sum();
        if v[0].norm() < 1e-8 * norm2.sqrt() {
            return Err(chars.len());
        }
        let vv = nalgebra::DVector::from_vec(v);
        // Rayleigh quotient against each operator, then ρ ← ρ/ρ(e).
        let mut values: Vec<Complex64> =
            ops.iter().map(|op| vv.dotc(&(op * &vv)) / norm2).collect();
        let e = values[0];
        values.iter_mut().for_each(|c| *c /= e);
        // Enforce ρ(x̄) = conj ρ(x) exactly.
        let sym: Vec<Complex64> =
            (0..n).map(|x| (values[x] + values[k.inv(x)].conj()) * 0.5).collect();
        let rho = Character(sym);
        if rho.multiplicativity_residual(k) > MULTIPLICATIVITY_TOL {
            return Err(chars.len());
        }
        if chars.iter().any(|c| c.max_distance(&rho) <= DEDUP_TOL) {
            return Err(chars.len());
        }
        chars.push(rho);
    }
    Ok(chars)
}

fn lex_cmp(a: &Character, b: &Character) -> Ordering {
    const EPS: f64 = 1e-9;
    for (x, y) in a.0.iter().zip(&b.0) {
        for (p, q) in [(x.re, y.re), (x.im, y.im)] {
            if (p - q).abs() > EPS {
                return p.total_cmp(&q);
            }
        }
    }
    Ordering::Equal
}

/// Trivial character first, the rest lexicographically descending on `(Re, Im)` of values.
fn canonical_order(mut chars: Vec<Character>) -> Vec<Character> {
    let trivial = chars
        .iter()
        .enumerate()
        .min_by(|a, b| {
            let da = a.1 .0.iter().map(|v| (v - 1.0).norm()).fold(0.0, f64::max);
            let db = b.1 .0.iter().map(|v| (v - 1.0).norm()).fold(0.0, f64::max);
            da.total_cmp(&db)
        })
        .map(|(i, _)| i)
        .unwrap();
    let first = chars.remove(trivial);
    chars.sort_by(|a, b| lex_cmp(b, a));
    chars.insert(0, first);
    chars
}

/// `π{ρ} = (Σ_x ω{x} |ρ(x)|²)^{-1}`, after checking that the characters are orthogonal in
/// `ℓ²(K, ω)`.
pub fn plancherel(k: &FiniteHypergroup, chars: &[Character]) -> Result<Vec<f64>> {
    let w = k.haar();
    let gram = |a: &Character, b: &Character| -> Complex64 {
        a.0.iter().zip(&b.0).zip(w).map(|((x, y), &m)| x * y.conj() * m).sum()
    };
    let diag: Vec<f64> = chars.iter().map(|c| gram(c, c).re).collect();
    let mut residual = 0.0f64;
    for a in 0..chars.len() {
        for b in (a + 1)..chars.len() {
            let g = gram(&chars[a], &chars[b]).norm() / (diag[a] * diag[b]).sqrt();
            residual = residual.max(g);
        }
    }
    if residual > TOL {
        return Err(Error::NonOrthogonal { residual });
    }
    Ok(diag.into_iter().map(|d| 1.0 / d).collect())
}

/// The unitary Fourier matrix in the primed bases; rows are characters in table order,
/// columns are elements.
#[derive(Debug, Clone)]
pub struct FourierMatrix {
    matrix: DMatrix<Complex64>,
}

impl FourierMatrix {
    pub fn from_matrix(matrix: DMatrix<Complex64>) -> Self {
        FourierMatrix { matrix }
    }

    pub fn matrix(&self) -> &DMatrix<Complex64> {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.nrows()
    }

    #[inline]
    pub fn entry(&self, rho: usize, x: usize) -> Complex64 {
        self.matrix[(rho, x)]
    }

    /// `max |F F† − I|`.
    pub fn unitarity_residual(&self) -> f64 {
        let n = self.dim();
        let prod = &self.matrix * self.matrix.adjoint();
        (prod - DMatrix::<Complex64>::identity(n, n)).iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    /// Applies `F` to a state written in the element basis.
    pub fn apply(&self, psi: &[Complex64]) -> Vec<Complex64> {
        let n = self.dim();
        (0..n)
            .map(|r| (0..n).map(|c| self.matrix[(r, c)] * psi[c]).sum())
            .collect()
    }

    /// Applies `F†` to a state written in the character basis.
    pub fn apply_adjoint(&self, phi: &[Complex64]) -> Vec<Complex64> {
        let n = self.dim();
        (0..n)
            .map(|c| (0..n).map(|r| self.matrix[(r, c)].conj() * phi[r]).sum())
            .collect()
    }
}

pub fn fourier_matrix(k: &FiniteHypergroup, table: &CharacterTable) -> Result<FourierMatrix> {
    let w = k.haar();
    let p = table.plancherel();
    let n = k.order();
    let matrix = DMatrix::from_fn(n, n, |rho, x| table.value(rho, x) * (w[x] * p[rho]).sqrt());
    let f = FourierMatrix { matrix };
    let residual = f.unitarity_residual();
    if residual > UNITARITY_TOL {
        return Err(Error::NotUnitary { residual });
    }
    Ok(f)
}

/// `τ(x) = (Σ_ρ |ρ(x)|² π{ρ}²)^{1/2}`.
pub fn tau(table: &CharacterTable, x: usize) -> f64 {
    table
        .plancherel()
        .iter()
        .enumerate()
        .map(|(rho, p)| table.value(rho, x).norm_sqr() * p * p)
        .sum::<f64>()
        .sqrt()
}

/// Column `x` of the unnormalized transform `|x⟩ ↦ τ(x)^{-1} Σ_ρ ρ(x) π{ρ} |ρ⟩`.
pub fn unprimed_column(table: &CharacterTable, x: usize) -> Vec<Complex64> {
    let t = tau(table, x);
    table.plancherel().iter().enumerate().map(|(rho, p)| table.value(rho, x) * (p / t)).collect()
}

/// `μ̂(ρ) = Σ_x ρ(x) μ{x}`.
pub fn fourier_of_measure(table: &CharacterTable, mu: &Measure) -> Vec<Complex64> {
    (0..table.len())
        .map(|rho| mu.weights().iter().enumerate().map(|(x, &m)| table.value(rho, x) * m).sum())
        .collect()
}

/// `f̂(ρ) = Σ_x f(x) ρ(x) ω{x}`.
pub fn fourier_of_function(
    k: &FiniteHypergroup,
    table: &CharacterTable,
    f: &[Complex64],
) -> Vec<Complex64> {
    let w = k.haar();
    (0..table.len())
        .map(|rho| f.iter().enumerate().map(|(x, &v)| v * table.value(rho, x) * w[x]).sum())
        .collect()
}

/// `ǩ(x) = Σ_ρ k(ρ) conj(ρ(x)) π{ρ}`, the inverse of [`fourier_of_function`].
pub fn inverse_fourier(table: &CharacterTable, kv: &[Complex64]) -> Vec<Complex64> {
    let n = table.character(0).0.len();
    let p = table.plancherel();
    (0..n)
        .map(|x| kv.iter().enumerate().map(|(rho, &v)| v * table.value(rho, x).conj() * p[rho]).sum())
        .collect()
}

/// Dual structure constants `c[ρ][σ][τ] = π{τ} Σ_x ω{x} ρ(x) σ(x) conj(τ(x))` (real parts),
/// together with the largest imaginary part encountered.
pub fn dual_structure_constants(k: &FiniteHypergroup, table: &CharacterTable) -> (StructureTensor, f64) {
    let n = table.len();
    let w = k.haar();
    let p = table.plancherel();
    let mut max_im = 0.0f64;
    let mut t = StructureTensor::zeros(n);
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let s: Complex64 = (0..k.order())
                    .map(|x| table.value(a, x) * table.value(b, x) * table.value(c, x).conj() * w[x])
                    .sum::<Complex64>()
                    * p[c];
                max_im = max_im.max(s.im.abs());
                t.set(a, b, c, s.re);
            }
        }
    }
    (t, max_im)
}

/// The dual hypergroup on `K̂` (elements indexed in table order, involution `ρ ↦ ρ̄`), or
/// [`Error::NotStrong`] with the most offending coefficient.
pub fn dual_hypergroup(k: &FiniteHypergroup, table: &CharacterTable) -> Result<FiniteHypergroup> {
    let (t, max_im) = dual_structure_constants(k, table);
    let n = t.order();
    let mut worst = (0.0f64, [0usize; 3]);
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let v = t.get(a, b, c);
                if v < worst.0 {
                    worst = (v, [a, b, c]);
                }
            }
        }
    }
    if worst.0 < -TOL || max_im > TOL {
        let coefficient = if worst.0 < -TOL { worst.0 } else { -max_im };
        return Err(Error::NotStrong { coefficient, indices: worst.1 });
    }
    let involution = (0..n).map(|r| table.conjugate_index(r)).collect();
    let dual = validate(format!("dual({})", k.name()), t, involution)?;
    Ok(dual)
}

pub fn is_strong(k: &FiniteHypergroup) -> Result<bool> {
    let table = character_table(k)?;
    match dual_hypergroup(k, &table) {
        Ok(_) => Ok(true),
        Err(Error::NotStrong { .. } | Error::AxiomViolation(_)) => Ok(false),
        Err(e) => Err(e),
    }
}

/// Checks `(K̂)^ ≅ K` via evaluation `x ↦ (ρ ↦ ρ(x))`.
pub fn double_dual_check(k: &FiniteHypergroup) -> Result<bool> {
    let table = character_table(k)?;
    let dual = dual_hypergroup(k, &table)?;
    let dual_table = character_table(&dual)?;
    let n = k.order();
    let mut map = Vec::with_capacity(n);
    for x in 0..n {
        let eval: Vec<Complex64> = (0..table.len()).map(|rho| table.value(rho, x)).collect();
        match dual_table.find(&eval, 1e-8) {
            Some(i) if !map.contains(&i) => map.push(i),
            _ => return Ok(false),
        }
    }
    let bidual = dual_hypergroup(&dual, &dual_table)?;
    let relabelled = k.tensor().permuted(&map);
    Ok(relabelled.max_abs_diff(bidual.tensor()) <= 1e-8)
}

/// For a strong `K` and subhypergroup `H`: `ρ ∈ σ * H⊥` iff `Res_H ρ = Res_H σ`, checked for
/// every pair of characters. `annihilator` lists the indices of `H⊥` in the table.
pub fn restriction_matches_dual_cosets(
    k: &FiniteHypergroup,
    table: &CharacterTable,
    members: &[usize],
    annihilator: &[usize],
) -> Result<bool> {
    let dual = dual_hypergroup(k, table)?;
    let perp: crate::hypergroup::ElementSet = annihilator.iter().copied().collect();
    for sigma in 0..table.len() {
        let coset = dual.support_product(&[sigma].into(), &perp);
        for rho in 0..table.len() {
            let same = members
                .iter()
                .all(|&x| (table.value(rho, x) - table.value(sigma, x)).norm() <= 1e-8);
            if same != coset.contains(&rho) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{bose_mesner_square, cyclic_group, group_hypergroup, z2_theta};

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn translation_operators_of_z2_theta() {
        let k = z2_theta(0.3).unwrap();
        let ops = translation_operators(&k).unwrap();
        assert_eq!(ops[0], DMatrix::identity(2, 2));
        let expected = DMatrix::from_row_slice(2, 2, &[0.0, 0.3, 1.0, 0.7]);
        assert!((&ops[1] - expected).amax() < 1e-15);
    }

    #[test]
    fn noncommutative_input_is_rejected() {
        let s3 = group_hypergroup(&crate::constructions::symmetric_group_s3()).unwrap();
        assert!(matches!(character_table(&s3), Err(Error::NotCommutative { .. })));
        assert!(matches!(translation_operators(&s3), Err(Error::NotCommutative { .. })));
    }

    #[test]
    fn tau_of_z2_half() {
        let k = z2_theta(0.5).unwrap();
        let t = character_table(&k).unwrap();
        assert!((tau(&t, 0) - 5f64.sqrt() / 3.0).abs() < 1e-12);
        let g = z2_theta(1.0).unwrap();
        let tg = character_table(&g).unwrap();
        assert!((tau(&tg, 0) - tau(&tg, 1)).abs() < 1e-12);
        for x in 0..2 {
            let col = unprimed_column(&t, x);
            let norm: f64 = col.iter().map(|v| v.norm_sqr()).sum();
            assert!((norm - 1.0).abs() < 1e-10);
        }
    }

    #[test]
    fn cyclic_fourier_is_the_dft() {
        let n = 5;
        let k = group_hypergroup(&cyclic_group(n)).unwrap();
        let t = character_table(&k).unwrap();
        let f = fourier_matrix(&k, &t).unwrap();
        // Each row is some DFT row e^{2πi jx/n}/√n.
        for rho in 0..n {
            let ok = (0..n).any(|j| {
                (0..n).all(|x| {
                    let ang = 2.0 * std::f64::consts::PI * (j * x) as f64 / n as f64;
                    (f.entry(rho, x) - c(ang.cos(), ang.sin()) / (n as f64).sqrt()).norm() < 1e-12
                })
            });
            assert!(ok, "row {rho} is not a DFT row");
        }
    }

    #[test]
    fn transforms_of_point_masses_and_haar() {
        let k = bose_mesner_square().unwrap();
        let t = character_table(&k).unwrap();
        let e = fourier_of_measure(&t, &Measure::point_mass(3, 0));
        assert!(e.iter().all(|v| (v - 1.0).norm() < 1e-15));
        let w = fourier_of_measure(&t, &k.haar_measure());
        assert!((w[0] - k.total_mass()).norm() < 1e-12);
        assert!(w[1..].iter().all(|v| v.norm() < 1e-12));
        let zero = inverse_fourier(&t, &[c(0.0, 0.0); 3]);
        assert!(zero.iter().all(|v| v.norm() == 0.0));
        let triv = inverse_fourier(&t, &[c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)]);
        assert!(triv.iter().all(|v| (v - 1.0 / k.total_mass()).norm() < 1e-12));
    }

    #[test]
    fn measure_transform_inverts_to_density() {
        let k = crate::constructions::order3_nonhermitian(0.5).unwrap();
        let t = character_table(&k).unwrap();
        let mu = Measure(vec![0.2, -0.7, 1.3]);
        let back = inverse_fourier(&t, &fourier_of_measure(&t, &mu));
        for x in 0..3 {
            assert!((back[x] - mu.0[x] / k.haar()[x]).norm() < 1e-12);
        }
    }

    #[test]
    fn strongness_of_z2_theta_dual() {
        let k = z2_theta(0.25).unwrap();
        let t = character_table(&k).unwrap();
        let d = dual_hypergroup(&k, &t).unwrap();
        assert!(crate::hypergroup::find_isomorphism(&k, &d, 1e-8).is_some());
        for s in 0..2 {
            for tt in 0..2 {
                let expect = if s == tt { 1.0 } else { 0.0 };
                assert!((d.tensor().get(0, s, tt) - expect).abs() < 1e-12);
            }
        }
        assert!(double_dual_check(&k).unwrap());
    }

    #[test]
    fn group_duals_are_point_masses() {
        let k = group_hypergroup(&cyclic_group(6)).unwrap();
        let t = character_table(&k).unwrap();
        let d = dual_hypergroup(&k, &t).unwrap();
        assert!(d.is_group());
        assert!(double_dual_check(&k).unwrap());
    }
}
