//! Executable acceptance checks, shared by the `acceptance` test target and `hyperg --selftest`.

use std::time::{Duration, Instant};

use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::constructions::{
    class_hypergroup, cyclic_group, dihedral_group, direct_product, double_coset,
    group_hypergroup, nonhermitian_closed_form, order3_hermitian, order3_nonhermitian, presets,
    s3_transposition_subgroup, symmetric_group_s3, z2_theta, HermitianOrder3,
};
use crate::duality::{
    character_table, double_dual_check, dual_hypergroup, fourier_matrix, is_strong,
    FourierMatrix,
};
use crate::error::Result;
use crate::hshp::{
    exact_distribution, make_coset_oracle, reconstruct, solve_hshp, HshpInstance, Policy, Sampler,
};
use crate::hypergroup::{find_isomorphism, FiniteHypergroup};
use crate::subobjects::{
    annihilator, enumerate_subhypergroups, lemma23_conditions, normalized_haar_transform, Subhypergroup,
};

#[derive(Debug, Clone, serde::Serialize)]
pub struct CriterionResult {
    pub id: u8,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl std::fmt::Display for CriterionResult {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "criterion {} [{}] {}: {} ({:.2}s)",
            self.id,
            if self.passed { "PASS" } else { "FAIL" },
            self.name,
            self.detail,
            self.elapsed.as_secs_f64()
        )
    }
}

pub const CRITERIA: [(u8, &str); 9] = [
    (1, "Z2(θ) values"),
    (2, "Bose-Mesner square table and F"),
    (3, "non-hermitian α=1/2 values and printed-matrix erratum"),
    (4, "unitarity sweep"),
    (5, "annihilator equivalence"),
    (6, "algorithm distribution"),
    (7, "end-to-end HSHP"),
    (8, "cyclic group reduction"),
    (9, "duality and strongness"),
];

/// Runs criterion `id` (1–9).
pub fn run(id: u8) -> CriterionResult {
    let start = Instant::now();
    let outcome = match id {
        1 => criterion1(),
        2 => criterion2(),
        3 => criterion3(),
        4 => criterion4(),
        5 => criterion5(),
        6 => criterion6(),
        7 => criterion7(),
        8 => criterion8(),
        9 => criterion9(),
        _ => Err(format!("no criterion {id}")),
    };
    let elapsed = start.elapsed();
    let limit = match id {
        1 => Some(Duration::from_secs(1)),
        4 => Some(Duration::from_secs(30)),
        7 => Some(Duration::from_secs(120)),
        _ => None,
    };
    let name = CRITERIA.iter().find(|c| c.0 == id).map_or("unknown", |c| c.1);
    let (mut passed, mut detail) = match outcome {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    };
    if let Some(limit) = limit {
        if elapsed > limit {
            passed = false;
            detail = format!("{detail}; exceeded {}s budget", limit.as_secs());
        }
    }
    CriterionResult { id, name, passed, detail, elapsed }
}

pub fn run_all() -> Vec<CriterionResult> {
    (1..=9).map(run).collect()
}

type Outcome = std::result::Result<String, String>;

/// Tracks the worst error against a tolerance.
struct Worst {
    tol: f64,
    value: f64,
    at: String,
}

impl Worst {
    fn new(tol: f64) -> Self {
        Worst { tol, value: 0.0, at: String::new() }
    }

    fn see(&mut self, err: f64, at: impl FnOnce() -> String) {
        if err > self.value || err.is_nan() {
            self.value = err;
            self.at = at();
        }
    }

    fn ok(&self) -> bool {
        self.value <= self.tol
    }

    fn finish(self, label: &str) -> Outcome {
        let msg = format!("{label}: max error {:.2e} (tol {:.0e})", self.value, self.tol);
        if self.ok() {
            Ok(msg)
        } else {
            Err(format!("{msg} at {}", self.at))
        }
    }
}

fn err_str(e: crate::Error) -> String {
    e.to_string()
}

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn max_diff_c(a: &[Complex64], b: &[Complex64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max)
}

fn max_diff(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
}

fn criterion1() -> Outcome {
    let mut w = Worst::new(1e-12);
    for theta in [1.0, 0.5, 0.25] {
        let k = z2_theta(theta).map_err(err_str)?;
        let t = character_table(&k).map_err(err_str)?;
        w.see(max_diff(k.haar(), &[1.0, 1.0 / theta]), || format!("ω, θ={theta}"));
        let expected = [[c(1.0, 0.0), c(1.0, 0.0)], [c(1.0, 0.0), c(-theta, 0.0)]];
        if t.len() != 2 {
            return Err(format!("θ={theta}: {} characters", t.len()));
        }
        for (rho, e) in expected.iter().enumerate() {
            w.see(max_diff_c(t.character(rho).values(), e), || format!("χ{rho}, θ={theta}"));
        }
        let pi = [theta / (1.0 + theta), 1.0 / (1.0 + theta)];
        w.see(max_diff(t.plancherel(), &pi), || format!("π, θ={theta}"));
    }
    w.finish("θ ∈ {1, 1/2, 1/4}")
}

fn criterion2() -> Outcome {
    let k = crate::constructions::bose_mesner_square().map_err(err_str)?;
    let t = character_table(&k).map_err(err_str)?;
    let mut w = Worst::new(1e-12);
    let cf = HermitianOrder3::new(0.0, 1.0, 2.0).map_err(err_str)?.closed_form();
    w.see(max_diff(&[cf.d, cf.x, cf.y, cf.z, cf.v], &[2.0, 1.0, -1.0, -1.0, 0.0]), || {
        "closed form (D, x, y, z, v)".into()
    });
    let rows = [[1.0, 1.0, 1.0], [1.0, 1.0, -1.0], [1.0, -1.0, 0.0]];
    for (rho, row) in rows.iter().enumerate() {
        let e: Vec<Complex64> = row.iter().map(|&v| c(v, 0.0)).collect();
        w.see(max_diff_c(t.character(rho).values(), &e), || format!("χ{rho}"));
    }
    w.see(max_diff(t.plancherel(), &[0.25, 0.25, 0.5]), || "π".into());
    let f = fourier_matrix(&k, &t).map_err(err_str)?;
    let s = std::f64::consts::SQRT_2;
    let printed = [[1.0, 1.0, s], [1.0, 1.0, -s], [s, -s, 0.0]];
    for (r, row) in printed.iter().enumerate() {
        for (x, v) in row.iter().enumerate() {
            w.see((f.entry(r, x) - c(v / 2.0, 0.0)).norm(), || format!("F[{r},{x}]"));
        }
    }
    w.finish("characters, π, F")
}

/// The non-hermitian α = 1/2 Fourier matrix exactly as printed.
pub fn printed_nonhermitian_fourier() -> DMatrix<Complex64> {
    let s = std::f64::consts::SQRT_2;
    let z = c(-1.0, 5f64.sqrt()) / 4.0;
    let one = c(1.0, 0.0);
    let r2 = c(s, 0.0);
    DMatrix::from_row_slice(3, 3, &[one, r2, r2, r2, z, z.conj(), r2, z.conj(), z])
        / c(5f64.sqrt(), 0.0)
}

fn criterion3() -> Outcome {
    let k = order3_nonhermitian(0.5).map_err(err_str)?;
    let t = character_table(&k).map_err(err_str)?;
    let mut w = Worst::new(1e-10);
    w.see(max_diff(k.haar(), &[1.0, 2.0, 2.0]), || "ω".into());
    let z = c(-1.0, 5f64.sqrt()) / 4.0;
    let (z_closed, pi_closed) = nonhermitian_closed_form(0.5);
    w.see((z_closed - z).norm(), || "closed-form z".into());
    w.see(max_diff_c(t.character(1).values(), &[c(1.0, 0.0), z, z.conj()]), || "χ1".into());
    w.see(max_diff_c(t.character(2).values(), &[c(1.0, 0.0), z.conj(), z]), || "χ2".into());
    let pi = [0.2, 0.4, 0.4];
    w.see(max_diff(&pi_closed, &pi), || "π via s/t".into());
    w.see(max_diff(t.plancherel(), &pi), || "π via orthogonality".into());
    let f = fourier_matrix(&k, &t).map_err(err_str)?;
    w.see(f.unitarity_residual(), || "formula F unitarity".into());
    let values = w.finish("ω, z, π, formula-F unitarity")?;

    let printed = printed_nonhermitian_fourier();
    let row_norms: Vec<f64> =
        (0..3).map(|r| printed.row(r).iter().map(|v| v.norm_sqr()).sum()).collect();
    if (row_norms[1] - 0.55).abs() > 1e-12 {
        return Err(format!("printed F row norms² {row_norms:?}, expected 0.55 in row 1"));
    }
    let printed_residual = FourierMatrix::from_matrix(printed).unitarity_residual();
    Ok(format!(
        "{values}; printed matrix row norms² {:.2}/{:.2}/{:.2}, unitarity residual {printed_residual:.2}",
        row_norms[0], row_norms[1], row_norms[2]
    ))
}

/// One seeded valid draw from each parametric family.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Z2Theta,
    Hermitian3,
    NonHermitian3,
    Cyclic,
    ClassDihedral,
}

pub const FAMILIES: [Family; 5] = [
    Family::Z2Theta,
    Family::Hermitian3,
    Family::NonHermitian3,
    Family::Cyclic,
    Family::ClassDihedral,
];

pub fn draw(family: Family, rng: &mut ChaCha8Rng) -> Result<FiniteHypergroup> {
    match family {
        Family::Z2Theta => z2_theta(rng.random_range(0.01..=1.0)),
        Family::Hermitian3 => loop {
            let (g, w1, w2) =
                (rng.random_range(0.0..=1.0), rng.random_range(1.0..8.0), rng.random_range(1.0..8.0));
            if HermitianOrder3::new(g, w1, w2).is_ok() {
                return order3_hermitian(g, w1, w2);
            }
        },
        Family::NonHermitian3 => order3_nonhermitian(rng.random_range(0.01..=1.0)),
        Family::Cyclic => group_hypergroup(&cyclic_group(rng.random_range(1..=12))),
        Family::ClassDihedral => class_hypergroup(&dihedral_group(rng.random_range(3..=10))),
    }
}

/// A direct product of two random small factors with order at most 16.
pub fn draw_product(rng: &mut ChaCha8Rng) -> Result<FiniteHypergroup> {
    let pick = |rng: &mut ChaCha8Rng, max: usize| -> Result<FiniteHypergroup> {
        loop {
            let family = [Family::Z2Theta, Family::Hermitian3, Family::NonHermitian3, Family::Cyclic]
                [rng.random_range(0..4)];
            let k = if family == Family::Cyclic {
                group_hypergroup(&cyclic_group(rng.random_range(1..=max)))?
            } else {
                draw(family, rng)?
            };
            if k.order() <= max {
                return Ok(k);
            }
        }
    };
    let a = pick(rng, 8)?;
    let b = pick(rng, 16 / a.order())?;
    direct_product(&a, &b)
}

fn criterion4() -> Outcome {
    let mut w = Worst::new(1e-10);
    let mut count = 0usize;
    let mut skipped = Vec::new();
    let mut check = |k: &FiniteHypergroup, label: String| -> std::result::Result<(), String> {
        let t = character_table(k).map_err(|e| format!("{label}: {e}"))?;
        let f = fourier_matrix(k, &t).map_err(|e| format!("{label}: {e}"))?;
        w.see(f.unitarity_residual(), || label);
        count += 1;
        Ok(())
    };
    for p in presets() {
        if !p.hypergroup.is_commutative() {
            skipped.push(p.name);
            continue;
        }
        check(&p.hypergroup, p.name.to_string())?;
    }
    for (fi, family) in FAMILIES.iter().enumerate() {
        let mut rng = ChaCha8Rng::seed_from_u64(4000 + fi as u64);
        for i in 0..100 {
            let k = draw(*family, &mut rng).map_err(err_str)?;
            check(&k, format!("{family:?} draw {i} ({})", k.name()))?;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(4100);
    for i in 0..50 {
        let k = draw_product(&mut rng).map_err(err_str)?;
        check(&k, format!("product draw {i} ({})", k.name()))?;
    }
    w.finish(&format!("{count} instances; non-commutative presets skipped: {}", skipped.join(", ")))
}

/// Tallies for the annihilator-equivalence check.
#[derive(Default)]
struct LemmaTally {
    pairs: usize,
    triples: usize,
    /// (i) vs (iii) disagreements
    some_coset: Vec<String>,
    /// (i) vs (ii) disagreements
    every_coset: Vec<String>,
}

fn lemma_instance(
    k: &FiniteHypergroup,
    label: &str,
    w: &mut Worst,
    tally: &mut LemmaTally,
) -> std::result::Result<(), String> {
    let t = character_table(k).map_err(|e| format!("{label}: {e}"))?;
    let subs = enumerate_subhypergroups(k).map_err(|e| format!("{label}: {e}"))?;
    for h in &subs {
        let at = || format!("{label} H={:?}", h.members());
        let r = lemma23_conditions(k, &t, h).map_err(|e| format!("{}: {e}", at()))?;
        for rho in 0..t.len() {
            if r.in_annihilator[rho] != r.nonzero_some_coset[rho] {
                tally.some_coset.push(format!("{} ρ={rho}", at()));
            }
            if r.in_annihilator[rho] != r.nonzero_every_coset[rho] {
                tally.every_coset.push(format!("{} ρ={rho}", at()));
            }
        }
        let perp = annihilator(&t, h);
        let transform = normalized_haar_transform(k, &t, h);
        let indicator: Vec<Complex64> = (0..t.len())
            .map(|rho| c(if perp.contains(rho) { 1.0 } else { 0.0 }, 0.0))
            .collect();
        w.see(max_diff_c(&transform, &indicator), at);
        tally.pairs += 1;
        tally.triples += t.len();
    }
    Ok(())
}

fn criterion5() -> Outcome {
    let mut w = Worst::new(1e-9);
    let mut tally = LemmaTally::default();
    for p in presets().iter().filter(|p| p.hypergroup.is_commutative()) {
        lemma_instance(&p.hypergroup, p.name, &mut w, &mut tally)?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(5000);
    for i in 0..50 {
        let family = FAMILIES[i % FAMILIES.len()];
        let k = draw(family, &mut rng).map_err(err_str)?;
        lemma_instance(&k, &format!("{family:?} draw {i}"), &mut w, &mut tally)?;
    }
    let transform_ok = w.ok();
    let transform = w.finish("ω̂_H vs indicator of H⊥").unwrap_or_else(|e| e);
    let msg = format!(
        "{} (K, H) pairs, {} (K, H, ρ) triples; (i)≠(iii) on {}; (i)≠(ii) on {}{}; {transform}",
        tally.pairs,
        tally.triples,
        tally.some_coset.len(),
        tally.every_coset.len(),
        tally.every_coset.first().map(|e| format!(" (first: {e})")).unwrap_or_default(),
    );
    if transform_ok && tally.some_coset.is_empty() && tally.every_coset.is_empty() {
        Ok(msg)
    } else {
        Err(msg)
    }
}

pub const DISTRIBUTION_SHOTS: u64 = 100_000;

fn criterion6() -> Outcome {
    let mut support = Worst::new(1e-10);
    let mut simulator = Worst::new(1e-10);
    let mut tv_failures: Vec<(String, f64, bool)> = Vec::new();
    let mut worst_sigma = 0.0f64;
    let mut worst_sigma_at = String::new();
    let mut pairs = 0u64;
    for p in presets().iter().filter(|p| p.hypergroup.is_commutative()) {
        let k = &p.hypergroup;
        let inst = HshpInstance::new(k).map_err(err_str)?;
        for h in enumerate_subhypergroups(k).map_err(err_str)? {
            let at = || format!("{} H={:?}", p.name, h.members());
            let d = exact_distribution(k, &inst.table, &h).map_err(err_str)?;
            let perp = annihilator(&inst.table, &h);
            for dist in d.per_coset.iter().chain(std::iter::once(&d.marginal)) {
                let outside: f64 =
                    dist.iter().enumerate().filter(|(r, _)| !perp.contains(*r)).map(|(_, p)| p).sum();
                support.see(outside, at);
            }
            let tv = d.max_coset_tv();
            if tv > 1e-10 {
                tv_failures.push((at(), tv, k.is_group()));
            }

            let oracle = make_coset_oracle(k, &h).map_err(err_str)?;
            let sampler = Sampler::new(&inst.fourier, &oracle).map_err(err_str)?;
            simulator.see(max_diff(sampler.label_probabilities(), &d.coset_probability), at);
            for (label, exact) in d.per_coset.iter().enumerate() {
                simulator.see(max_diff(sampler.branch(label), exact), at);
            }

            let n = DISTRIBUTION_SHOTS as f64;
            let mut counts = vec![0u64; inst.table.len()];
            for s in sampler.shots(pairs, 0, DISTRIBUTION_SHOTS) {
                counts[s.character] += 1;
            }
            for (rho, (&count, &prob)) in counts.iter().zip(&d.marginal).enumerate() {
                let prob = prob.clamp(0.0, 1.0);
                let dev = (count as f64 - n * prob).abs();
                // Outcomes with probability within 1e-12 of 0 or 1 must be never/always seen.
                let z = if prob.min(1.0 - prob) > 1e-12 {
                    dev / (n * prob * (1.0 - prob)).sqrt()
                } else if dev < 0.5 {
                    0.0
                } else {
                    f64::INFINITY
                };
                if z > worst_sigma {
                    worst_sigma = z;
                    worst_sigma_at = format!("{} ρ={rho}", at());
                }
            }
            pairs += 1;
        }
    }
    let ok = support.ok() && simulator.ok() && tv_failures.is_empty() && worst_sigma <= 4.0;
    let support = support.finish("mass outside H⊥").unwrap_or_else(|e| e);
    let simulator = simulator.finish("state-vector vs analytic").unwrap_or_else(|e| e);
    let tv = if tv_failures.is_empty() {
        "per-coset TV ≤ 1e-10 on every pair".to_string()
    } else {
        let worst = tv_failures.iter().max_by(|a, b| a.1.total_cmp(&b.1)).unwrap();
        let on_groups = tv_failures.iter().filter(|f| f.2).count();
        format!(
            "per-coset TV > 1e-10 on {} pairs ({on_groups} of them group presets), worst {:.3} at {}",
            tv_failures.len(),
            worst.1,
            worst.0
        )
    };
    let msg = format!(
        "{pairs} (K, H) pairs; {support}; {simulator}; {tv}; {DISTRIBUTION_SHOTS} shots each, worst deviation {worst_sigma:.2}σ ({worst_sigma_at})"
    );
    if ok {
        Ok(msg)
    } else {
        Err(msg)
    }
}

pub const TRIALS: u64 = 200;

fn criterion7() -> Outcome {
    let mut pairs = 0;
    let mut worst = (TRIALS, String::new());
    for p in presets().iter().filter(|p| p.hypergroup.is_commutative() && p.hypergroup.order() <= 16) {
        let k = &p.hypergroup;
        let inst = HshpInstance::new(k).map_err(err_str)?;
        let policy = Policy::for_order(k.order());
        for h in enumerate_subhypergroups(k).map_err(err_str)? {
            let oracle = make_coset_oracle(k, &h).map_err(err_str)?;
            let sampler = Sampler::new(&inst.fourier, &oracle).map_err(err_str)?;
            let ok = (0..TRIALS)
                .filter(|&seed| {
                    matches!(inst.solve_with(&sampler, seed, policy),
                        Ok(run) if run.verified && run.reconstructed == h)
                })
                .count() as u64;
            if ok < worst.0 {
                worst = (ok, format!("{} H={:?}", p.name, h.members()));
            }
            pairs += 1;
        }
    }
    let bm = crate::constructions::bose_mesner_square().map_err(err_str)?;
    let t = character_table(&bm).map_err(err_str)?;
    let h = Subhypergroup::certify(&bm, [0, 1]).map_err(err_str)?;
    let d = exact_distribution(&bm, &t, &h).map_err(err_str)?;
    let mut w = Worst::new(1e-12);
    for (i, dist) in d.per_coset.iter().enumerate() {
        w.see(max_diff(dist, &[0.5, 0.5, 0.0]), || format!("coset {i}"));
    }
    w.see(max_diff(&d.marginal, &[0.5, 0.5, 0.0]), || "marginal".into());
    let bm_msg = w.finish("Bose-Mesner {0,1} distribution (1/2, 1/2, 0)")?;
    let msg = format!(
        "{pairs} (K, H) pairs, fewest successes {}/{TRIALS}{}; {bm_msg}",
        worst.0,
        if worst.1.is_empty() { String::new() } else { format!(" ({})", worst.1) }
    );
    if worst.0 >= TRIALS - 1 {
        Ok(msg)
    } else {
        Err(msg)
    }
}

/// Textbook abelian HSP law on `ℤ_n` for `H = dℤ_n`: uniform on `{j : jd ≡ 0 (mod n)}`,
/// indexed by the DFT frequency `j`.
pub fn cyclic_hsp_distribution(n: usize, d: usize) -> Vec<f64> {
    let support: Vec<bool> = (0..n).map(|j| (j * d).is_multiple_of(n)).collect();
    let size = support.iter().filter(|&&s| s).count() as f64;
    support.into_iter().map(|s| if s { 1.0 / size } else { 0.0 }).collect()
}

fn criterion8() -> Outcome {
    let mut w = Worst::new(1e-10);
    let mut pairs = 0;
    for n in 1..=12usize {
        let k = group_hypergroup(&cyclic_group(n)).map_err(err_str)?;
        let t = character_table(&k).map_err(err_str)?;
        // Frequency j of each table row: ρ(x) = exp(2πi jx/n).
        let mut freq = Vec::with_capacity(n);
        for rho in 0..n {
            let j = (0..n).find(|&j| {
                (0..n).all(|x| {
                    let phase = 2.0 * std::f64::consts::PI * (j * x) as f64 / n as f64;
                    (t.value(rho, x) - Complex64::from_polar(1.0, phase)).norm() < 1e-9
                })
            });
            freq.push(j.ok_or_else(|| format!("ℤ_{n}: row {rho} is not a DFT row"))?);
        }
        let subs = enumerate_subhypergroups(&k).map_err(err_str)?;
        let divisors: Vec<usize> = (1..=n).filter(|d| n % d == 0).collect();
        if subs.len() != divisors.len() {
            return Err(format!("ℤ_{n}: {} subgroups, expected {}", subs.len(), divisors.len()));
        }
        for d in divisors {
            let members: Vec<usize> = (0..n).step_by(d).collect();
            let h = Subhypergroup::certify(&k, members.iter().copied()).map_err(err_str)?;
            let textbook = cyclic_hsp_distribution(n, d);
            let expected: Vec<f64> = freq.iter().map(|&j| textbook[j]).collect();
            let dist = exact_distribution(&k, &t, &h).map_err(err_str)?;
            for p in dist.per_coset.iter().chain(std::iter::once(&dist.marginal)) {
                w.see(max_diff(p, &expected), || format!("ℤ_{n}, H = {d}ℤ_{n}"));
            }
            let support: Vec<usize> = (0..n).filter(|&r| dist.support[r]).collect();
            let from_support = reconstruct(&k, &t, &support).map_err(err_str)?;
            let oracle = make_coset_oracle(&k, &h).map_err(err_str)?;
            let run = solve_hshp(&k, &oracle, n as u64, Policy::for_order(n)).map_err(err_str)?;
            if from_support.members() != members || run.reconstructed.members() != members {
                return Err(format!(
                    "ℤ_{n}, H = {d}ℤ_{n}: reconstructed {:?} / {:?}",
                    from_support.members(),
                    run.reconstructed.members()
                ));
            }
            pairs += 1;
        }
    }
    w.finish(&format!("{pairs} (ℤ_n, H) pairs, reconstruction exact"))
}

fn self_dual(k: &FiniteHypergroup) -> std::result::Result<bool, String> {
    let t = character_table(k).map_err(err_str)?;
    let dual = dual_hypergroup(k, &t).map_err(err_str)?;
    Ok(find_isomorphism(&dual, k, 1e-8).is_some())
}

fn criterion9() -> Outcome {
    let mut notes = Vec::new();
    for theta in [1.0, 0.5, 0.25, 0.3] {
        if !self_dual(&z2_theta(theta).map_err(err_str)?)? {
            return Err(format!("dual of Z2({theta}) is not Z2({theta})"));
        }
    }
    notes.push("Z2(θ) self-dual for θ ∈ {1, 1/2, 1/4, 0.3}".to_string());
    for alpha in [0.5, 0.25, 0.8, 1.0] {
        if !self_dual(&order3_nonhermitian(alpha).map_err(err_str)?)? {
            return Err(format!("dual of the non-hermitian α={alpha} hypergroup differs"));
        }
    }
    notes.push("non-hermitian order 3 self-dual for α ∈ {1/2, 1/4, 0.8, 1}".into());
    let s3 = symmetric_group_s3();
    let classes = class_hypergroup(&s3).map_err(err_str)?;
    if !is_strong(&classes).map_err(err_str)? || !double_dual_check(&classes).map_err(err_str)? {
        return Err("class hypergroup of S3 fails strongness or double-dual check".into());
    }
    notes.push("class_hypergroup(S3) strong, double dual ≅ K".into());
    let dc = double_coset(&s3, &s3_transposition_subgroup()).map_err(err_str)?;
    let target = z2_theta(0.5).map_err(err_str)?;
    if find_isomorphism(&dc, &target, 1e-8).is_none() || (dc.haar()[1] - 2.0).abs() > 1e-12 {
        return Err(format!("S3//⟨(12)⟩ has constants {:?}, ω {:?}", dc.tensor().as_slice(), dc.haar()));
    }
    notes.push("S3//⟨(12)⟩ ≅ Z2(1/2) with ω{1} = 2".into());
    Ok(notes.join("; "))
}
