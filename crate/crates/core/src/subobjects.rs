//! Subhypergroups, coset partitions, quotients, annihilators and restriction of characters.

use std::collections::BTreeSet;

use num_complex::Complex64;

use crate::duality::{Character, CharacterTable, MULTIPLICATIVITY_TOL};
use crate::error::{Error, Result};
use crate::hypergroup::{validate, ElementSet, FiniteHypergroup, StructureTensor, TOL};

/// Default largest order for exhaustive subhypergroup enumeration.
pub const DEFAULT_CAP: usize = 20;

/// A closed subset `H` of a hypergroup: `e ∈ H`, `H̄ = H` and `H * H ⊆ H`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize)]
#[serde(transparent)]
pub struct Subhypergroup {
    members: Vec<usize>,
}

impl Subhypergroup {
    /// Certifies `members` as a subhypergroup of `k`.
    pub fn certify(k: &FiniteHypergroup, members: impl IntoIterator<Item = usize>) -> Result<Self> {
        let set: ElementSet = members.into_iter().collect();
        if set.iter().any(|&x| x >= k.order()) || !is_closed(k, &set) {
            return Err(Error::NotClosed { members: set.into_iter().collect() });
        }
        Ok(Subhypergroup { members: set.into_iter().collect() })
    }

    pub fn whole(k: &FiniteHypergroup) -> Self {
        Subhypergroup { members: (0..k.order()).collect() }
    }

    pub fn trivial() -> Self {
        Subhypergroup { members: vec![0] }
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    pub fn as_set(&self) -> ElementSet {
        self.members.iter().copied().collect()
    }
}

pub fn is_closed(k: &FiniteHypergroup, set: &ElementSet) -> bool {
    set.contains(&0)
        && set.iter().all(|&x| set.contains(&k.inv(x)))
        && k.support_product(set, set).is_subset(set)
}

/// Smallest closed subset containing `seed`.
pub fn closure(k: &FiniteHypergroup, seed: &ElementSet) -> ElementSet {
    let mut set = seed.clone();
    set.insert(0);
    loop {
        let mut next = set.clone();
        next.extend(set.iter().map(|&x| k.inv(x)));
        next.extend(k.support_product(&set, &set));
        if next.len() == set.len() {
            return set;
        }
        set = next;
    }
}

pub fn enumerate_subhypergroups(k: &FiniteHypergroup) -> Result<Vec<Subhypergroup>> {
    enumerate_subhypergroups_with_cap(k, DEFAULT_CAP)
}

/// Every subhypergroup of `k`, sorted by size then members. Each closed set is reached by
/// adjoining single elements to already-found closed sets, so the search is memoized by
/// closure result.
pub fn enumerate_subhypergroups_with_cap(
    k: &FiniteHypergroup,
    cap: usize,
) -> Result<Vec<Subhypergroup>> {
    if k.order() > cap {
        return Err(Error::CapExceeded { cap });
    }
    let mut found: BTreeSet<ElementSet> = BTreeSet::new();
    let mut frontier = vec![closure(k, &ElementSet::new())];
    found.insert(frontier[0].clone());
    while let Some(h) = frontier.pop() {
        for x in 0..k.order() {
            if h.contains(&x) {
                continue;
            }
            let mut seed = h.clone();
            seed.insert(x);
            let c = closure(k, &seed);
            if found.insert(c.clone()) {
                frontier.push(c);
            }
        }
    }
    let mut out: Vec<Subhypergroup> = found
        .into_iter()
        .map(|s| Subhypergroup { members: s.into_iter().collect() })
        .collect();
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.members.cmp(&b.members)));
    Ok(out)
}

/// The partition of `K` into cosets `c * H`; block 0 is `H` itself.
#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct CosetPartition {
    pub blocks: Vec<Vec<usize>>,
    pub representatives: Vec<usize>,
    pub block_mass: Vec<f64>,
    #[serde(skip)]
    pub block_of: Vec<usize>,
}

impl CosetPartition {
    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }
}

pub fn cosets(k: &FiniteHypergroup, h: &Subhypergroup) -> Result<CosetPartition> {
    let hs = h.as_set();
    let mut distinct: Vec<ElementSet> = Vec::new();
    for c in 0..k.order() {
        let block = k.support_product(&[c].into(), &hs);
        if !block.contains(&c) {
            return Err(Error::NotAPartition(format!("{c} ∉ {c}*H")));
        }
        if !distinct.contains(&block) {
            distinct.push(block);
        }
    }
    let mut block_of = vec![usize::MAX; k.order()];
    for (i, b) in distinct.iter().enumerate() {
        for &x in b {
            if block_of[x] != usize::MAX {
                return Err(Error::NotAPartition(format!("cosets overlap at element {x}")));
            }
            block_of[x] = i;
        }
    }
    if distinct[0] != hs {
        return Err(Error::NotAPartition("e*H ≠ H".into()));
    }
    // distinct is already ordered by smallest member, with H (containing e) first.
    let blocks: Vec<Vec<usize>> = distinct.into_iter().map(|b| b.into_iter().collect()).collect();
    let representatives = blocks.iter().map(|b| b[0]).collect();
    let block_mass = blocks.iter().map(|b| k.mass_of(b)).collect();
    Ok(CosetPartition { blocks, representatives, block_mass, block_of })
}

/// Indices (in table order) of the characters in `H⊥ = {ρ : ρ(x) = 1 for x ∈ H}`.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
#[serde(transparent)]
pub struct Annihilator {
    pub characters: Vec<usize>,
}

impl Annihilator {
    pub fn contains(&self, rho: usize) -> bool {
        self.characters.contains(&rho)
    }

    pub fn len(&self) -> usize {
        self.characters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.characters.is_empty()
    }
}

pub fn annihilator(table: &CharacterTable, h: &Subhypergroup) -> Annihilator {
    let characters = (0..table.len())
        .filter(|&rho| h.members().iter().all(|&x| (table.value(rho, x) - 1.0).norm() <= TOL))
        .collect();
    Annihilator { characters }
}

/// `Σ_{x∈H} ω{x} ρ(x) / ω(H)` for every character: the transform of the normalized Haar
/// measure of `H`, which is the indicator of `H⊥`.
pub fn normalized_haar_transform(
    k: &FiniteHypergroup,
    table: &CharacterTable,
    h: &Subhypergroup,
) -> Vec<Complex64> {
    let mass = k.mass_of(h.members());
    (0..table.len())
        .map(|rho| {
            h.members().iter().map(|&x| table.value(rho, x) * k.haar()[x]).sum::<Complex64>() / mass
        })
        .collect()
}

/// The coset hypergroup `K/H`: blocks convolve through their normalized Haar indicators.
pub fn quotient(k: &FiniteHypergroup, h: &Subhypergroup) -> Result<FiniteHypergroup> {
    let residual = k.commutativity_residual();
    if residual > TOL {
        return Err(Error::NotCommutative { residual });
    }
    let part = cosets(k, h)?;
    let m = part.len();
    let w = k.haar();
    let mut t = StructureTensor::zeros(m);
    for (a, ba) in part.blocks.iter().enumerate() {
        for (b, bb) in part.blocks.iter().enumerate() {
            let norm = part.block_mass[a] * part.block_mass[b];
            for &x in ba {
                for &y in bb {
                    let p = w[x] * w[y] / norm;
                    for (z, &v) in k.product(x, y).iter().enumerate() {
                        if v != 0.0 {
                            t.add(a, b, part.block_of[z], p * v);
                        }
                    }
                }
            }
        }
    }
    let involution = part.representatives.iter().map(|&r| part.block_of[k.inv(r)]).collect();
    validate(format!("{}/{:?}", k.name(), h.members()), t, involution)
}

/// Boolean vectors of the three equivalent conditions, per character in table order.
#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct Lemma23Report {
    /// `ρ ∈ H⊥`
    pub in_annihilator: Vec<bool>,
    /// `Σ_{m∈c*H} ω{m} ρ(m̄) ≠ 0` for every `c`
    pub nonzero_every_coset: Vec<bool>,
    /// `Σ_{m∈c*H} ω{m} ρ(m) ≠ 0` for some `c`
    pub nonzero_some_coset: Vec<bool>,
}

impl Lemma23Report {
    /// Characters on which the three conditions do not all agree.
    pub fn disagreements(&self) -> Vec<usize> {
        (0..self.in_annihilator.len())
            .filter(|&r| {
                self.in_annihilator[r] != self.nonzero_every_coset[r]
                    || self.in_annihilator[r] != self.nonzero_some_coset[r]
            })
            .collect()
    }
}

/// Evaluates the three conditions characterising `H⊥` without asserting that they agree.
/// "Nonzero" means magnitude above `TOL · ω(c*H)`. Also returns, per character, the first
/// coset on which the deciding sum vanishes (for members of `H⊥`) or does not vanish
/// (for non-members).
fn lemma23_evaluate(
    k: &FiniteHypergroup,
    table: &CharacterTable,
    h: &Subhypergroup,
) -> Result<(Lemma23Report, Vec<usize>)> {
    let part = cosets(k, h)?;
    let perp = annihilator(table, h);
    let w = k.haar();
    let mut report = Lemma23Report {
        in_annihilator: Vec::new(),
        nonzero_every_coset: Vec::new(),
        nonzero_some_coset: Vec::new(),
    };
    let mut witness = Vec::new();
    for rho in 0..table.len() {
        let mut every = true;
        let mut some = false;
        let mut first_zero = None;
        let mut first_nonzero = None;
        for (c, block) in part.blocks.iter().enumerate() {
            let threshold = TOL * part.block_mass[c];
            let conj_sum: Complex64 =
                block.iter().map(|&m| table.value(rho, k.inv(m)) * w[m]).sum();
            let sum: Complex64 = block.iter().map(|&m| table.value(rho, m) * w[m]).sum();
            if conj_sum.norm() <= threshold {
                every = false;
                first_zero.get_or_insert(c);
            }
            if sum.norm() > threshold {
                some = true;
                first_nonzero.get_or_insert(c);
            }
        }
        let inside = perp.contains(rho);
        witness.push(if inside { first_zero } else { first_nonzero }.unwrap_or(0));
        report.in_annihilator.push(inside);
        report.nonzero_every_coset.push(every);
        report.nonzero_some_coset.push(some);
    }
    Ok((report, witness))
}

/// The three boolean vectors, without asserting equivalence.
pub fn lemma23_conditions(
    k: &FiniteHypergroup,
    table: &CharacterTable,
    h: &Subhypergroup,
) -> Result<Lemma23Report> {
    Ok(lemma23_evaluate(k, table, h)?.0)
}

/// Evaluates the three conditions characterising `H⊥` and checks they agree.
///
/// Condition (ii) fails for members of `H⊥` whenever a character vanishes on an entire
/// coset (e.g. `χ₂(2) = 0` on the Bose-Mesner square with `H = {e}`), so this reports
/// [`Error::EquivalenceFailure`] on such inputs. Conditions (i) and (iii) always agree.
pub fn lemma23_check(
    k: &FiniteHypergroup,
    table: &CharacterTable,
    h: &Subhypergroup,
) -> Result<Lemma23Report> {
    let (report, witness) = lemma23_evaluate(k, table, h)?;
    if let Some(&rho) = report.disagreements().first() {
        return Err(Error::EquivalenceFailure { character: rho, coset: witness[rho] });
    }
    Ok(report)
}

/// `H` with the structure constants of `K` restricted to it; element `i` of the result is
/// `h.members()[i]`.
pub fn restricted_hypergroup(k: &FiniteHypergroup, h: &Subhypergroup) -> Result<FiniteHypergroup> {
    let mem = h.members();
    let m = mem.len();
    let t = StructureTensor::from_fn(m, |i, j, l| k.tensor().get(mem[i], mem[j], mem[l]));
    for i in 0..m {
        for j in 0..m {
            if (t.row(i, j).iter().sum::<f64>() - 1.0).abs() > TOL {
                return Err(Error::NotClosed { members: mem.to_vec() });
            }
        }
    }
    let involution = mem.iter().map(|&x| mem.binary_search(&k.inv(x)).unwrap_or(0)).collect();
    validate(format!("{}|{:?}", k.name(), mem), t, involution)
}

/// `Res_H ρ`, checked to be a character of the restricted hypergroup.
pub fn restrict(
    k: &FiniteHypergroup,
    table: &CharacterTable,
    rho: usize,
    h: &Subhypergroup,
) -> Result<Character> {
    let sub = restricted_hypergroup(k, h)?;
    let values = Character(h.members().iter().map(|&x| table.value(rho, x)).collect());
    if values.multiplicativity_residual(&sub) > MULTIPLICATIVITY_TOL {
        return Err(Error::NotClosed { members: h.members().to_vec() });
    }
    Ok(values)
}
