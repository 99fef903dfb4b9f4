//! State-vector simulation of the hidden sub-hypergroup algorithm and reconstruction of the
//! hidden subhypergroup from sampled characters.
//!
//! One iteration works on two registers: an element/character register of dimension `|K|`
//! and a label register with one basis state per oracle label.
//!
//! 1. prepare `|χ₀⟩′|0⟩`
//! 2. apply `F†` to the first register, giving `Σ_x (ω{x}/ω(K))^{1/2} |x⟩′|0⟩`
//! 3. apply the oracle `|x⟩|s⟩ ↦ |x⟩|s + f(x)⟩` and measure the label register
//! 4. apply `F` to the first register
//! 5. measure the first register, yielding a character
//!
//! After step 3 the state is `ω(c*H)^{-1/2} Σ_{m∈c*H} ω{m}^{1/2} |m⟩′` for the observed coset,
//! so step 5 returns `ρ` with probability `π{ρ} |Σ_{m∈c*H} ω{m} ρ(m)|² / ω(c*H)`.

use std::sync::OnceLock;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::duality::{character_table, fourier_matrix, CharacterTable, FourierMatrix};
use crate::error::{Error, Result};
use crate::hypergroup::FiniteHypergroup;
use crate::subobjects::{cosets, Subhypergroup};

const NORM_TOL: f64 = 1e-8;
/// `|ρ(x) − 1|` bound for membership in the reconstructed subhypergroup.
pub const RECONSTRUCTION_TOL: f64 = 1e-6;

/// A black box constant on the cosets of a hidden subhypergroup, with distinct labels on
/// distinct cosets.
#[derive(Debug, Clone)]
pub struct CosetOracle {
    labels: Vec<usize>,
    num_labels: usize,
    hidden: Option<Subhypergroup>,
}

impl CosetOracle {
    /// Oracle from an explicit label per element; labels are renumbered by first appearance.
    pub fn from_labels(raw: &[usize]) -> Self {
        let mut seen: Vec<usize> = Vec::new();
        let labels = raw
            .iter()
            .map(|l| match seen.iter().position(|s| s == l) {
                Some(p) => p,
                None => {
                    seen.push(*l);
                    seen.len() - 1
                }
            })
            .collect();
        CosetOracle { labels, num_labels: seen.len(), hidden: None }
    }

    #[inline]
    pub fn evaluate(&self, x: usize) -> usize {
        self.labels[x]
    }

    pub fn num_labels(&self) -> usize {
        self.num_labels
    }

    pub fn domain_size(&self) -> usize {
        self.labels.len()
    }

    /// The subhypergroup used to build the oracle, when known. Only for after-the-fact checks.
    pub fn hidden(&self) -> Option<&Subhypergroup> {
        self.hidden.as_ref()
    }
}

/// Oracle labelling each element by the index of its coset block.
pub fn make_coset_oracle(k: &FiniteHypergroup, h: &Subhypergroup) -> Result<CosetOracle> {
    let part = cosets(k, h)?;
    Ok(CosetOracle {
        labels: part.block_of.clone(),
        num_labels: part.len(),
        hidden: Some(h.clone()),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Basis {
    /// primed element basis `|x⟩′`
    Element,
    /// primed character basis `|ρ⟩′`
    Character,
}

/// Amplitudes over `(first-register index, label)`, stored label-minor.
#[derive(Debug, Clone)]
pub struct TwoRegisterState {
    dim: usize,
    labels: usize,
    amplitudes: Vec<Complex64>,
    basis: Basis,
}

impl TwoRegisterState {
    /// `|χ₀⟩′|0⟩`.
    pub fn prepare(dim: usize, labels: usize) -> Self {
        let mut amplitudes = vec![Complex64::new(0.0, 0.0); dim * labels];
        amplitudes[0] = Complex64::new(1.0, 0.0);
        TwoRegisterState { dim, labels, amplitudes, basis: Basis::Character }
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    #[inline]
    pub fn amplitude(&self, index: usize, label: usize) -> Complex64 {
        self.amplitudes[index * self.labels + label]
    }

    pub fn norm(&self) -> f64 {
        self.amplitudes.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt()
    }

    fn check_norm(&self, stage: &'static str) -> Result<()> {
        let norm = self.norm();
        if (norm - 1.0).abs() > NORM_TOL {
            return Err(Error::NormDrift { stage, norm });
        }
        Ok(())
    }

    fn slice(&self, label: usize) -> Vec<Complex64> {
        (0..self.dim).map(|i| self.amplitude(i, label)).collect()
    }

    fn apply_to_first(&mut self, f: impl Fn(&[Complex64]) -> Vec<Complex64>) {
        for s in 0..self.labels {
            let v = self.slice(s);
            if v.iter().all(|a| *a == Complex64::new(0.0, 0.0)) {
                continue;
            }
            for (i, a) in f(&v).into_iter().enumerate() {
                self.amplitudes[i * self.labels + s] = a;
            }
        }
    }

    /// `F†` on the first register (character basis → element basis).
    pub fn apply_inverse_fourier(&mut self, f: &FourierMatrix) -> Result<()> {
        debug_assert_eq!(self.basis, Basis::Character);
        self.apply_to_first(|v| f.apply_adjoint(v));
        self.basis = Basis::Element;
        self.check_norm("inverse Fourier")
    }

    /// `F` on the first register (element basis → character basis).
    pub fn apply_fourier(&mut self, f: &FourierMatrix) -> Result<()> {
        debug_assert_eq!(self.basis, Basis::Element);
        self.apply_to_first(|v| f.apply(v));
        self.basis = Basis::Character;
        self.check_norm("Fourier")
    }

    /// `|x⟩|s⟩ ↦ |x⟩|(s + f(x)) mod L⟩`.
    pub fn apply_oracle(&mut self, oracle: &CosetOracle) -> Result<()> {
        debug_assert_eq!(self.basis, Basis::Element);
        let l = self.labels;
        let mut next = vec![Complex64::new(0.0, 0.0); self.amplitudes.len()];
        for x in 0..self.dim {
            let shift = oracle.evaluate(x);
            for s in 0..l {
                next[x * l + (s + shift) % l] = self.amplitudes[x * l + s];
            }
        }
        self.amplitudes = next;
        self.check_norm("oracle")
    }

    /// Outcome probabilities of measuring the label register.
    pub fn label_probabilities(&self) -> Vec<f64> {
        (0..self.labels)
            .map(|s| (0..self.dim).map(|i| self.amplitude(i, s).norm_sqr()).sum())
            .collect()
    }

    /// Outcome probabilities of measuring the first register.
    pub fn first_probabilities(&self) -> Vec<f64> {
        (0..self.dim)
            .map(|i| (0..self.labels).map(|s| self.amplitude(i, s).norm_sqr()).sum())
            .collect()
    }

    /// Projects onto label `s` and renormalizes.
    pub fn collapse_label(&mut self, label: usize) -> Result<()> {
        let p: f64 = (0..self.dim).map(|i| self.amplitude(i, label).norm_sqr()).sum();
        if p <= 0.0 {
            return Err(Error::NormDrift { stage: "label collapse", norm: p });
        }
        let scale = 1.0 / p.sqrt();
        for (idx, a) in self.amplitudes.iter_mut().enumerate() {
            if idx % self.labels == label {
                *a *= scale;
            } else {
                *a = Complex64::new(0.0, 0.0);
            }
        }
        self.check_norm("label collapse")
    }
}

/// Index drawn from `probs` by inverse CDF at `u ∈ [0, 1)`.
fn sample_index(probs: &[f64], u: f64) -> usize {
    let total: f64 = probs.iter().sum();
    let target = u * total;
    let mut acc = 0.0;
    let mut last = 0;
    for (i, &p) in probs.iter().enumerate() {
        if p <= 0.0 {
            continue;
        }
        acc += p;
        last = i;
        if target < acc {
            return i;
        }
    }
    last
}

/// State after steps 1–3 (before measuring the label register).
fn entangled_state(f: &FourierMatrix, oracle: &CosetOracle) -> Result<TwoRegisterState> {
    let mut state = TwoRegisterState::prepare(f.dim(), oracle.num_labels());
    state.apply_inverse_fourier(f)?;
    state.apply_oracle(oracle)?;
    Ok(state)
}

/// Character distribution after observing `label`, by evolving the collapsed state.
fn branch_distribution(state: &TwoRegisterState, f: &FourierMatrix, label: usize) -> Result<Vec<f64>> {
    let mut s = state.clone();
    s.collapse_label(label)?;
    s.apply_fourier(f)?;
    Ok(s.first_probabilities())
}

/// One full run of the algorithm with fresh state; returns `(label, character)`.
pub fn run_iteration<R: Rng + ?Sized>(
    f: &FourierMatrix,
    oracle: &CosetOracle,
    rng: &mut R,
) -> Result<(usize, usize)> {
    let state = entangled_state(f, oracle)?;
    let label = sample_index(&state.label_probabilities(), rng.random::<f64>());
    let probs = branch_distribution(&state, f, label)?;
    let character = sample_index(&probs, rng.random::<f64>());
    Ok((label, character))
}

/// RNG stream for shot number `shot` of a run seeded with `seed`.
pub fn shot_rng(seed: u64, shot: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(shot);
    rng
}

/// Repeated-shot sampler. The pre-measurement state and each post-measurement branch evolve
/// deterministically, so they are computed once with the same state-vector code as
/// [`run_iteration`] and reused across shots.
pub struct Sampler<'a> {
    fourier: &'a FourierMatrix,
    oracle: &'a CosetOracle,
    state: TwoRegisterState,
    label_probs: Vec<f64>,
    branches: Vec<OnceLock<Vec<f64>>>,
}

impl<'a> Sampler<'a> {
    pub fn new(fourier: &'a FourierMatrix, oracle: &'a CosetOracle) -> Result<Self> {
        let state = entangled_state(fourier, oracle)?;
        let label_probs = state.label_probabilities();
        let branches = (0..oracle.num_labels()).map(|_| OnceLock::new()).collect();
        // Surface norm problems up front rather than inside the parallel loop.
        for (label, &p) in label_probs.iter().enumerate() {
            if p > 0.0 {
                branch_distribution(&state, fourier, label)?;
            }
        }
        Ok(Sampler { fourier, oracle, state, label_probs, branches })
    }

    pub fn label_probabilities(&self) -> &[f64] {
        &self.label_probs
    }

    pub fn branch(&self, label: usize) -> &[f64] {
        self.branches[label].get_or_init(|| {
            branch_distribution(&self.state, self.fourier, label)
                .expect("branch checked at construction")
        })
    }

    pub fn shot<R: Rng + ?Sized>(&self, rng: &mut R) -> (usize, usize) {
        let label = sample_index(&self.label_probs, rng.random::<f64>());
        let character = sample_index(self.branch(label), rng.random::<f64>());
        (label, character)
    }

    /// Shots `first..first + count` of the run seeded with `seed`, in shot order.
    pub fn shots(&self, seed: u64, first: u64, count: u64) -> Vec<Shot> {
        (first..first + count)
            .into_par_iter()
            .map(|i| {
                let (label, character) = self.shot(&mut shot_rng(seed, i));
                Shot { label, character }
            })
            .collect()
    }

    pub fn oracle(&self) -> &CosetOracle {
        self.oracle
    }
}

/// Analytic step-5 probabilities.
#[derive(Debug, Clone, serde::Serialize)]
pub struct ExactDistribution {
    /// probability of observing each coset label, `ω(c*H)/ω(K)`
    pub coset_probability: Vec<f64>,
    /// `Pr[ρ | c]` per coset block
    pub per_coset: Vec<Vec<f64>>,
    /// label-marginalized distribution over characters
    pub marginal: Vec<f64>,
    pub support: Vec<bool>,
}

impl ExactDistribution {
    /// Largest total-variation distance between per-coset distributions.
    pub fn max_coset_tv(&self) -> f64 {
        let mut worst = 0.0f64;
        for a in &self.per_coset {
            for b in &self.per_coset {
                let tv = 0.5 * a.iter().zip(b).map(|(p, q)| (p - q).abs()).sum::<f64>();
                worst = worst.max(tv);
            }
        }
        worst
    }
}

pub fn exact_distribution(
    k: &FiniteHypergroup,
    table: &CharacterTable,
    h: &Subhypergroup,
) -> Result<ExactDistribution> {
    let part = cosets(k, h)?;
    let w = k.haar();
    let pi = table.plancherel();
    let total = k.total_mass();
    let per_coset: Vec<Vec<f64>> = part
        .blocks
        .iter()
        .zip(&part.block_mass)
        .map(|(block, &mass)| {
            (0..table.len())
                .map(|rho| {
                    let s: Complex64 = block.iter().map(|&m| table.value(rho, m) * w[m]).sum();
                    pi[rho] * s.norm_sqr() / mass
                })
                .collect()
        })
        .collect();
    let coset_probability: Vec<f64> = part.block_mass.iter().map(|m| m / total).collect();
    let marginal: Vec<f64> = (0..table.len())
        .map(|rho| per_coset.iter().zip(&coset_probability).map(|(d, p)| d[rho] * p).sum())
        .collect();
    let support = marginal.iter().map(|&p| p > 1e-12).collect();
    Ok(ExactDistribution { coset_probability, per_coset, marginal, support })
}

/// `{x : |ρ(x) − 1| ≤ 1e-6 for every sampled ρ}`, certified as a subhypergroup.
pub fn reconstruct(
    k: &FiniteHypergroup,
    table: &CharacterTable,
    samples: &[usize],
) -> Result<Subhypergroup> {
    let members = (0..k.order()).filter(|&x| {
        samples.iter().all(|&rho| (table.value(rho, x) - 1.0).norm() <= RECONSTRUCTION_TOL)
    });
    Subhypergroup::certify(k, members)
}

/// Whether the oracle is constant on every coset of `candidate` and distinct across cosets.
/// Uses only the oracle's public evaluation.
pub fn verify_against_oracle(
    k: &FiniteHypergroup,
    candidate: &Subhypergroup,
    oracle: &CosetOracle,
) -> bool {
    let Ok(part) = cosets(k, candidate) else {
        return false;
    };
    let mut block_labels = Vec::with_capacity(part.len());
    for block in &part.blocks {
        let l = oracle.evaluate(block[0]);
        if block.iter().any(|&x| oracle.evaluate(x) != l) {
            return false;
        }
        if block_labels.contains(&l) {
            return false;
        }
        block_labels.push(l);
    }
    true
}

/// Batch-and-verify stopping policy.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct Policy {
    pub batch_size: usize,
    pub max_batches: usize,
}

impl Policy {
    /// `4⌈log₂|K|⌉ + 8` shots per batch, at most 16 batches.
    pub fn for_order(order: usize) -> Self {
        let log = (usize::BITS - order.saturating_sub(1).leading_zeros()) as usize;
        Policy { batch_size: 4 * log + 8, max_batches: 16 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct Shot {
    pub label: usize,
    pub character: usize,
}

/// Record of one HSHP solve.
#[derive(Debug, Clone, serde::Serialize)]
pub struct HshpRun {
    pub seed: u64,
    pub policy: Policy,
    pub shots: usize,
    pub batches: usize,
    pub observed: Vec<usize>,
    pub reconstructed: Subhypergroup,
    pub verified: bool,
    pub trace: Vec<Shot>,
}

/// A commutative hypergroup with its character table and Fourier matrix, ready for repeated
/// HSHP runs.
pub struct HshpInstance<'a> {
    pub hypergroup: &'a FiniteHypergroup,
    pub table: CharacterTable,
    pub fourier: FourierMatrix,
}

impl<'a> HshpInstance<'a> {
    pub fn new(k: &'a FiniteHypergroup) -> Result<Self> {
        let table = character_table(k)?;
        let fourier = fourier_matrix(k, &table)?;
        Ok(HshpInstance { hypergroup: k, table, fourier })
    }

    pub fn solve(&self, oracle: &CosetOracle, seed: u64, policy: Policy) -> Result<HshpRun> {
        let sampler = Sampler::new(&self.fourier, oracle)?;
        self.solve_with(&sampler, seed, policy)
    }

    /// Solves using an existing sampler for the same oracle.
    pub fn solve_with(&self, sampler: &Sampler<'_>, seed: u64, policy: Policy) -> Result<HshpRun> {
        let k = self.hypergroup;
        let oracle = sampler.oracle();
        let mut trace: Vec<Shot> = Vec::new();
        let mut last_candidate = Vec::new();
        let mut reason = String::from("no batches run");
        for batch in 0..policy.max_batches {
            let first = (batch * policy.batch_size) as u64;
            trace.extend(sampler.shots(seed, first, policy.batch_size as u64));
            let observed: Vec<usize> = trace.iter().map(|s| s.character).collect();
            match reconstruct(k, &self.table, &observed) {
                Ok(candidate) => {
                    if verify_against_oracle(k, &candidate, oracle) {
                        return Ok(HshpRun {
                            seed,
                            policy,
                            shots: trace.len(),
                            batches: batch + 1,
                            observed,
                            reconstructed: candidate,
                            verified: true,
                            trace,
                        });
                    }
                    reason = "oracle is not constant-and-distinct on the candidate's cosets".into();
                    last_candidate = candidate.members().to_vec();
                }
                Err(Error::NotClosed { members }) => {
                    reason = "candidate is not closed".into();
                    last_candidate = members;
                }
                Err(e) => return Err(e),
            }
        }
        Err(Error::Unresolved { batches: policy.max_batches, candidate: last_candidate, reason })
    }
}

/// Solves the hidden sub-hypergroup problem for `k` with the given oracle.
pub fn solve_hshp(
    k: &FiniteHypergroup,
    oracle: &CosetOracle,
    seed: u64,
    policy: Policy,
) -> Result<HshpRun> {
    HshpInstance::new(k)?.solve(oracle, seed, policy)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{bose_mesner_square, cyclic_group, group_hypergroup};

    fn bm_setup() -> (FiniteHypergroup, Subhypergroup) {
        let bm = bose_mesner_square().unwrap();
        let h = Subhypergroup::certify(&bm, [0, 1]).unwrap();
        (bm, h)
    }

    #[test]
    fn oracle_labels() {
        let (bm, h) = bm_setup();
        let o = make_coset_oracle(&bm, &h).unwrap();
        assert_eq!((0..3).map(|x| o.evaluate(x)).collect::<Vec<_>>(), vec![0, 0, 1]);
        let whole = make_coset_oracle(&bm, &Subhypergroup::whole(&bm)).unwrap();
        assert_eq!(whole.num_labels(), 1);
        let z5 = group_hypergroup(&cyclic_group(5)).unwrap();
        let inj = make_coset_oracle(&z5, &Subhypergroup::trivial()).unwrap();
        assert_eq!(inj.num_labels(), 5);
        assert_eq!(CosetOracle::from_labels(&[7, 7, 3]).evaluate(2), 1);
    }

    #[test]
    fn policy_default() {
        assert_eq!(Policy::for_order(3).batch_size, 16);
        assert_eq!(Policy::for_order(16).batch_size, 24);
        assert_eq!(Policy::for_order(1).batch_size, 8);
        assert_eq!(Policy::for_order(2).batch_size, 12);
    }

    #[test]
    fn bose_mesner_exact_distribution() {
        let (bm, h) = bm_setup();
        let inst = HshpInstance::new(&bm).unwrap();
        let d = exact_distribution(&bm, &inst.table, &h).unwrap();
        for dist in &d.per_coset {
            for (p, e) in dist.iter().zip([0.5, 0.5, 0.0]) {
                assert!((p - e).abs() < 1e-12, "{dist:?}");
            }
        }
        assert!(d.max_coset_tv() < 1e-12);
    }

    #[test]
    fn state_vector_matches_analytic_branch() {
        let (bm, h) = bm_setup();
        let inst = HshpInstance::new(&bm).unwrap();
        let o = make_coset_oracle(&bm, &h).unwrap();
        let s = Sampler::new(&inst.fourier, &o).unwrap();
        let d = exact_distribution(&bm, &inst.table, &h).unwrap();
        for (a, b) in s.label_probabilities().iter().zip(&d.coset_probability) {
            assert!((a - b).abs() < 1e-12);
        }
        for c in 0..2 {
            for (a, b) in s.branch(c).iter().zip(&d.per_coset[c]) {
                assert!((a - b).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn sampler_reproduces_run_iteration() {
        let (bm, h) = bm_setup();
        let inst = HshpInstance::new(&bm).unwrap();
        let o = make_coset_oracle(&bm, &h).unwrap();
        let s = Sampler::new(&inst.fourier, &o).unwrap();
        for i in 0..200 {
            let direct = run_iteration(&inst.fourier, &o, &mut shot_rng(9, i)).unwrap();
            let cached = s.shot(&mut shot_rng(9, i));
            assert_eq!(direct, cached);
        }
    }

    #[test]
    fn whole_group_always_yields_trivial_character() {
        let (bm, _) = bm_setup();
        let inst = HshpInstance::new(&bm).unwrap();
        let o = make_coset_oracle(&bm, &Subhypergroup::whole(&bm)).unwrap();
        let mut rng = shot_rng(1, 0);
        for _ in 0..50 {
            assert_eq!(run_iteration(&inst.fourier, &o, &mut rng).unwrap().1, 0);
        }
        let run = inst.solve(&o, 3, Policy::for_order(3)).unwrap();
        assert_eq!(run.batches, 1);
        assert_eq!(run.reconstructed.members(), &[0, 1, 2]);
    }

    #[test]
    fn reconstruct_examples() {
        let (bm, _) = bm_setup();
        let t = character_table(&bm).unwrap();
        assert_eq!(reconstruct(&bm, &t, &[0]).unwrap().members(), &[0, 1, 2]);
        assert_eq!(reconstruct(&bm, &t, &[0, 1]).unwrap().members(), &[0, 1]);
        let z6 = group_hypergroup(&cyclic_group(6)).unwrap();
        let t6 = character_table(&z6).unwrap();
        let all: Vec<usize> = (0..6).collect();
        assert_eq!(reconstruct(&z6, &t6, &all).unwrap().members(), &[0]);
    }

    #[test]
    fn verification_predicate() {
        let z8 = group_hypergroup(&cyclic_group(8)).unwrap();
        let h = Subhypergroup::certify(&z8, [0, 2, 4, 6]).unwrap();
        let o = make_coset_oracle(&z8, &h).unwrap();
        assert!(verify_against_oracle(&z8, &h, &o));
        let smaller = Subhypergroup::certify(&z8, [0, 4]).unwrap();
        assert!(!verify_against_oracle(&z8, &smaller, &o));
        assert!(!verify_against_oracle(&z8, &Subhypergroup::whole(&z8), &o));
    }

    #[test]
    fn solves_bose_mesner_and_z8() {
        let (bm, h) = bm_setup();
        let o = make_coset_oracle(&bm, &h).unwrap();
        let run = solve_hshp(&bm, &o, 42, Policy::for_order(3)).unwrap();
        assert!(run.verified);
        assert_eq!(run.reconstructed, h);
        assert!(run.observed.iter().all(|&r| r != 2));

        let z8 = group_hypergroup(&cyclic_group(8)).unwrap();
        let h8 = Subhypergroup::certify(&z8, [0, 4]).unwrap();
        let o8 = make_coset_oracle(&z8, &h8).unwrap();
        let run = solve_hshp(&z8, &o8, 42, Policy::for_order(8)).unwrap();
        assert_eq!(run.reconstructed, h8);
    }

    #[test]
    fn unresolvable_oracle_reports_candidate() {
        // Labels that are not constant on the cosets of any subhypergroup.
        let z4 = group_hypergroup(&cyclic_group(4)).unwrap();
        let o = CosetOracle::from_labels(&[0, 0, 1, 2]);
        let err = solve_hshp(&z4, &o, 0, Policy { batch_size: 4, max_batches: 2 }).unwrap_err();
        assert!(matches!(err, Error::Unresolved { batches: 2, .. }));
    }

    #[test]
    fn trace_is_independent_of_thread_count() {
        let z8 = group_hypergroup(&cyclic_group(8)).unwrap();
        let inst = HshpInstance::new(&z8).unwrap();
        let o = make_coset_oracle(&z8, &Subhypergroup::certify(&z8, [0, 4]).unwrap()).unwrap();
        let run_with = |threads| {
            rayon::ThreadPoolBuilder::new()
                .num_threads(threads)
                .build()
                .unwrap()
                .install(|| Sampler::new(&inst.fourier, &o).unwrap().shots(5, 0, 500))
        };
        assert_eq!(run_with(1), run_with(4));
    }
}
