//! Concrete hypergroups: the order-2 and order-3 parametric families, hypergroups derived from
//! finite groups (the group itself, its conjugacy classes, double cosets), direct products,
//! and a registry of named presets.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::sync::OnceLock;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::hypergroup::{validate, FiniteHypergroup, StructureTensor, TOL};

/// Largest group accepted by the group-derived constructions.
pub const MAX_GROUP_ORDER: usize = 48;

/// Multiplication table of a finite group with the identity at index 0.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct GroupTable {
    cayley: Vec<Vec<usize>>,
    inverse: Vec<usize>,
}

impl GroupTable {
    /// Builds and fully validates a group table (Latin square, identity at 0, associativity).
    pub fn new(cayley: Vec<Vec<usize>>) -> Result<Self> {
        let n = cayley.len();
        if n == 0 || n > MAX_GROUP_ORDER {
            return Err(Error::InvalidGroup(format!(
                "order {n} outside 1..={MAX_GROUP_ORDER}"
            )));
        }
        if cayley.iter().any(|row| row.len() != n || row.iter().any(|&v| v >= n)) {
            return Err(Error::InvalidGroup("table is not square over 0..n".into()));
        }
        for i in 0..n {
            if cayley[0][i] != i || cayley[i][0] != i {
                return Err(Error::InvalidGroup(format!("index 0 is not an identity at {i}")));
            }
            let row: BTreeSet<_> = cayley[i].iter().collect();
            let col: BTreeSet<_> = (0..n).map(|j| cayley[j][i]).collect();
            if row.len() != n || col.len() != n {
                return Err(Error::InvalidGroup(format!("not a Latin square at {i}")));
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if cayley[cayley[a][b]][c] != cayley[a][cayley[b][c]] {
                        return Err(Error::InvalidGroup(format!("not associative at {a},{b},{c}")));
                    }
                }
            }
        }
        let inverse = (0..n).map(|a| (0..n).find(|&b| cayley[a][b] == 0).unwrap()).collect();
        Ok(GroupTable { cayley, inverse })
    }

    pub fn order(&self) -> usize {
        self.cayley.len()
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.cayley[a][b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn cayley(&self) -> &[Vec<usize>] {
        &self.cayley
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (0..n).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Whether `h` is a subgroup (contains the identity and is closed under products).
    pub fn is_subgroup(&self, h: &BTreeSet<usize>) -> bool {
        h.contains(&0)
            && h.iter().all(|&a| a < self.order())
            && h.iter().all(|&a| h.iter().all(|&b| h.contains(&self.mul(a, b))))
    }
}

pub fn cyclic_group(n: usize) -> GroupTable {
    GroupTable::new((0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect())
        .expect("cyclic group table is valid")
}

/// Permutation group generated by `gens`, with elements listed in breadth-first order from the
/// identity. Products compose right to left: `(gh)(p) = g(h(p))`.
pub fn permutation_group(gens: &[Vec<usize>]) -> Result<(GroupTable, Vec<Vec<usize>>)> {
    let degree = gens.first().map_or(0, |g| g.len());
    let compose = |g: &[usize], h: &[usize]| -> Vec<usize> { h.iter().map(|&p| g[p]).collect() };
    let mut elements: Vec<Vec<usize>> = vec![(0..degree).collect()];
    let mut index: HashMap<Vec<usize>, usize> = HashMap::from([(elements[0].clone(), 0)]);
    let mut cursor = 0;
    while cursor < elements.len() {
        for g in gens {
            let next = compose(g, &elements[cursor]);
            if !index.contains_key(&next) {
                if elements.len() >= MAX_GROUP_ORDER {
                    return Err(Error::InvalidGroup("generated group too large".into()));
                }
                index.insert(next.clone(), elements.len());
                elements.push(next);
            }
        }
        cursor += 1;
    }
    let cayley = elements
        .iter()
        .map(|a| elements.iter().map(|b| index[&compose(a, b)]).collect())
        .collect();
    Ok((GroupTable::new(cayley)?, elements))
}

/// `S₃` acting on `{0,1,2}`.
pub fn symmetric_group_s3() -> GroupTable {
    permutation_group(&[vec![1, 0, 2], vec![1, 2, 0]]).unwrap().0
}

/// The subgroup of `S₃` generated by the transposition swapping 0 and 1.
pub fn s3_transposition_subgroup() -> BTreeSet<usize> {
    let (_, elements) = permutation_group(&[vec![1, 0, 2], vec![1, 2, 0]]).unwrap();
    let t = elements.iter().position(|p| p == &[1, 0, 2]).unwrap();
    [0, t].into()
}

/// Dihedral group of order `2n`, symmetries of the regular `n`-gon.
pub fn dihedral_group(n: usize) -> GroupTable {
    let rotation: Vec<usize> = (0..n).map(|p| (p + 1) % n).collect();
    let reflection: Vec<usize> = (0..n).map(|p| (n - p) % n).collect();
    permutation_group(&[rotation, reflection]).unwrap().0
}

/// A reflection subgroup `{e, s}` of `D_n` (not normal for `n ≥ 3`).
pub fn dihedral_reflection_subgroup(n: usize) -> BTreeSet<usize> {
    let rotation: Vec<usize> = (0..n).map(|p| (p + 1) % n).collect();
    let reflection: Vec<usize> = (0..n).map(|p| (n - p) % n).collect();
    let (_, elements) = permutation_group(&[rotation, reflection.clone()]).unwrap();
    [0, elements.iter().position(|p| p == &reflection).unwrap()].into()
}

/// Quaternion group `Q₈ = {±1, ±i, ±j, ±k}`; index `u + 4s` is `(-1)^s` times unit `u`.
pub fn quaternion_group() -> GroupTable {
    // unit products as (sign, unit) for units 1, i, j, k
    const UNIT: [[(usize, usize); 4]; 4] = [
        [(0, 0), (0, 1), (0, 2), (0, 3)],
        [(0, 1), (1, 0), (0, 3), (1, 2)],
        [(0, 2), (1, 3), (1, 0), (0, 1)],
        [(0, 3), (0, 2), (1, 1), (1, 0)],
    ];
    let cayley = (0..8)
        .map(|a| {
            (0..8)
                .map(|b| {
                    let (s, u) = UNIT[a % 4][b % 4];
                    u + 4 * ((s + a / 4 + b / 4) % 2)
                })
                .collect()
        })
        .collect();
    GroupTable::new(cayley).expect("Q8 table is valid")
}

/// Direct product of groups, element `(a, b)` at index `a·|H| + b`.
pub fn group_product(g: &GroupTable, h: &GroupTable) -> Result<GroupTable> {
    let m = h.order();
    let n = g.order() * m;
    let cayley = (0..n)
        .map(|x| (0..n).map(|y| g.mul(x / m, y / m) * m + h.mul(x % m, y % m)).collect())
        .collect();
    GroupTable::new(cayley)
}

fn out_of_range(family: &'static str, constraint: impl Into<String>) -> Error {
    Error::ParamOutOfRange { family, constraint: constraint.into() }
}

/// `ℤ₂(θ)`: `δ₁ * δ₁ = θ δ₀ + (1 − θ) δ₁`, `0 < θ ≤ 1`.
pub fn z2_theta(theta: f64) -> Result<FiniteHypergroup> {
    if !(theta > 0.0 && theta <= 1.0) {
        return Err(out_of_range("z2_theta", format!("0 < θ ≤ 1 (θ = {theta})")));
    }
    let mut t = StructureTensor::zeros(2);
    t.set(0, 0, 0, 1.0);
    t.set(0, 1, 1, 1.0);
    t.set(1, 0, 1, 1.0);
    t.set(1, 1, 0, theta);
    t.set(1, 1, 1, 1.0 - theta);
    validate(format!("Z2({theta})"), t, vec![0, 1])
}

/// Derived constants of the hermitian order-3 family.
#[derive(Debug, Clone, Copy)]
pub struct HermitianOrder3 {
    pub gamma1: f64,
    pub gamma2: f64,
    pub omega1: f64,
    pub omega2: f64,
    pub alpha1: f64,
    pub alpha2: f64,
    pub beta1: f64,
    pub beta2: f64,
}

impl HermitianOrder3 {
    pub fn new(gamma1: f64, omega1: f64, omega2: f64) -> Result<Self> {
        const F: &str = "order3_hermitian";
        if !(0.0..=1.0).contains(&gamma1) {
            return Err(out_of_range(F, "0 ≤ γ₁ ≤ 1"));
        }
        if omega1 < 1.0 {
            return Err(out_of_range(F, "ω₁ ≥ 1"));
        }
        if omega2 < 1.0 {
            return Err(out_of_range(F, "ω₂ ≥ 1"));
        }
        if 1.0 + gamma1 * omega2 > omega1 + TOL {
            return Err(out_of_range(F, "1 + γ₁ω₂ ≤ ω₁"));
        }
        if 1.0 + (1.0 - gamma1) * omega1 > omega2 + TOL {
            return Err(out_of_range(F, "1 + (1 − γ₁)ω₁ ≤ ω₂"));
        }
        let gamma2 = 1.0 - gamma1;
        Ok(HermitianOrder3 {
            gamma1,
            gamma2,
            omega1,
            omega2,
            alpha1: 1.0 - (1.0 + gamma1 * omega2) / omega1,
            alpha2: 1.0 - (1.0 + gamma2 * omega1) / omega2,
            beta1: gamma1 * omega2 / omega1,
            beta2: gamma2 * omega1 / omega2,
        })
    }

    /// Closed-form character values: `χ₁ = (1, x, z)`, `χ₂ = (1, y, v)`.
    ///
    /// `x, y` use the denominator `2ω₁` and `z, v` use `2ω₂`; with `2ω₂` throughout the
    /// values are not characters (e.g. `x = 1/2` instead of `1` on the square).
    pub fn closed_form(&self) -> HermitianClosedForm {
        let d = ((1.0 + self.gamma1 * self.omega2 - self.gamma2 * self.omega1).powi(2)
            + 4.0 * self.gamma2 * self.omega1)
            .sqrt();
        let a = (self.alpha1 - self.gamma1) / 2.0;
        let b = (self.alpha2 - self.gamma2) / 2.0;
        HermitianClosedForm {
            d,
            x: a + d / (2.0 * self.omega1),
            y: a - d / (2.0 * self.omega1),
            z: b - d / (2.0 * self.omega2),
            v: b + d / (2.0 * self.omega2),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HermitianClosedForm {
    pub d: f64,
    pub x: f64,
    pub y: f64,
    pub z: f64,
    pub v: f64,
}

/// Hermitian hypergroup of order 3 with parameters `γ₁, ω₁, ω₂`.
pub fn order3_hermitian(gamma1: f64, omega1: f64, omega2: f64) -> Result<FiniteHypergroup> {
    let p = HermitianOrder3::new(gamma1, omega1, omega2)?;
    let mut t = StructureTensor::zeros(3);
    for i in 0..3 {
        t.set(0, i, i, 1.0);
        t.set(i, 0, i, 1.0);
    }
    for (k, v) in [1.0 / p.omega1, p.alpha1, p.beta1].into_iter().enumerate() {
        t.set(1, 1, k, v);
    }
    for (k, v) in [0.0, p.gamma1, p.gamma2].into_iter().enumerate() {
        t.set(1, 2, k, v);
        t.set(2, 1, k, v);
    }
    for (k, v) in [1.0 / p.omega2, p.beta2, p.alpha2].into_iter().enumerate() {
        t.set(2, 2, k, v);
    }
    validate(format!("H3({gamma1},{omega1},{omega2})"), t, vec![0, 1, 2])
}

/// The normalized Bose-Mesner algebra of the square: `γ₁ = 0, ω₁ = 1, ω₂ = 2`.
pub fn bose_mesner_square() -> Result<FiniteHypergroup> {
    Ok(order3_hermitian(0.0, 1.0, 2.0)?.with_name("bose_mesner_square"))
}

/// Non-hermitian order-3 hypergroup, `0 < α ≤ 1`, `γ = (1 − α)/2`, involution swapping 1 and 2.
pub fn order3_nonhermitian(alpha: f64) -> Result<FiniteHypergroup> {
    if !(alpha > 0.0 && alpha <= 1.0) {
        return Err(out_of_range("order3_nonhermitian", format!("0 < α ≤ 1 (α = {alpha})")));
    }
    let g = (1.0 - alpha) / 2.0;
    let mut t = StructureTensor::zeros(3);
    for i in 0..3 {
        t.set(0, i, i, 1.0);
        t.set(i, 0, i, 1.0);
    }
    for (k, v) in [0.0, g, 1.0 - g].into_iter().enumerate() {
        t.set(1, 1, k, v);
    }
    for (k, v) in [alpha, g, g].into_iter().enumerate() {
        t.set(1, 2, k, v);
        t.set(2, 1, k, v);
    }
    for (k, v) in [0.0, 1.0 - g, g].into_iter().enumerate() {
        t.set(2, 2, k, v);
    }
    validate(format!("N3({alpha})"), t, vec![0, 2, 1])
}

/// Closed forms of the non-hermitian family: `z = (−α + i√(α² + 2α))/2` and
/// `π = (s₁/t, s₂/t, s₂/t)` with `s₁ = 2 − ω₁(α² + α)`, `s₂ = ω₁ − 1`, `t = ω₁(2 − α² − α)`,
/// `ω₁ = 1/α`. The Plancherel forms degenerate to `0/0` at `α = 1`.
pub fn nonhermitian_closed_form(alpha: f64) -> (Complex64, [f64; 3]) {
    let z = Complex64::new(-alpha, (alpha * alpha + 2.0 * alpha).sqrt()) / 2.0;
    let w1 = 1.0 / alpha;
    let s1 = 2.0 - w1 * (alpha * alpha + alpha);
    let s2 = w1 - 1.0;
    let t = w1 * (2.0 - alpha * alpha - alpha);
    (z, [s1 / t, s2 / t, s2 / t])
}

/// The group itself as a hypergroup (point-mass convolution, counting Haar measure).
pub fn group_hypergroup(g: &GroupTable) -> Result<FiniteHypergroup> {
    let n = g.order();
    let mut t = StructureTensor::zeros(n);
    for a in 0..n {
        for b in 0..n {
            t.set(a, b, g.mul(a, b), 1.0);
        }
    }
    validate(format!("group({n})"), t, (0..n).map(|a| g.inv(a)).collect())
}

/// Orders blocks by `(size, smallest member)`.
fn sort_blocks(mut blocks: Vec<BTreeSet<usize>>) -> Vec<BTreeSet<usize>> {
    blocks.sort_by_key(|b| (b.len(), *b.iter().next().unwrap()));
    blocks.dedup();
    blocks
}

/// Pushes the product of uniform measures on blocks forward to the block partition.
fn block_hypergroup(
    g: &GroupTable,
    blocks: &[BTreeSet<usize>],
    name: String,
) -> Result<FiniteHypergroup> {
    let mut block_of = vec![0; g.order()];
    for (i, b) in blocks.iter().enumerate() {
        for &x in b {
            block_of[x] = i;
        }
    }
    let m = blocks.len();
    let mut t = StructureTensor::zeros(m);
    for (i, a) in blocks.iter().enumerate() {
        for (j, b) in blocks.iter().enumerate() {
            let w = 1.0 / (a.len() * b.len()) as f64;
            for &x in a {
                for &y in b {
                    t.add(i, j, block_of[g.mul(x, y)], w);
                }
            }
        }
    }
    let involution = blocks.iter().map(|b| block_of[g.inv(*b.iter().next().unwrap())]).collect();
    validate(name, t, involution)
}

pub fn conjugacy_classes(g: &GroupTable) -> Vec<BTreeSet<usize>> {
    let n = g.order();
    let classes = (0..n)
        .map(|x| (0..n).map(|h| g.mul(g.mul(h, x), g.inv(h))).collect())
        .collect();
    sort_blocks(classes)
}

/// The class hypergroup `G^G` on conjugacy classes (always commutative).
pub fn class_hypergroup(g: &GroupTable) -> Result<FiniteHypergroup> {
    block_hypergroup(g, &conjugacy_classes(g), format!("class({})", g.order()))
}

/// The double coset hypergroup `G//H`.
pub fn double_coset(g: &GroupTable, h: &BTreeSet<usize>) -> Result<FiniteHypergroup> {
    if !g.is_subgroup(h) {
        return Err(Error::NotASubgroup(h.iter().copied().collect()));
    }
    let blocks = (0..g.order())
        .map(|x| {
            h.iter()
                .flat_map(|&a| h.iter().map(move |&b| (a, b)))
                .map(|(a, b)| g.mul(g.mul(a, x), b))
                .collect()
        })
        .collect();
    block_hypergroup(g, &sort_blocks(blocks), format!("double_coset({},{})", g.order(), h.len()))
}

/// `K₁ × K₂`, element `(a, b)` at index `a·|K₂| + b`.
pub fn direct_product(k1: &FiniteHypergroup, k2: &FiniteHypergroup) -> Result<FiniteHypergroup> {
    let m = k2.order();
    let n = k1.order() * m;
    let t = StructureTensor::from_fn(n, |x, y, z| {
        k1.tensor().get(x / m, y / m, z / m) * k2.tensor().get(x % m, y % m, z % m)
    });
    let involution = (0..n).map(|x| k1.inv(x / m) * m + k2.inv(x % m)).collect();
    validate(format!("{}x{}", k1.name(), k2.name()), t, involution)
}

/// A named instance in the preset registry.
#[derive(Debug, Clone)]
pub struct Preset {
    pub name: &'static str,
    pub hypergroup: FiniteHypergroup,
}

fn build_presets() -> Result<Vec<Preset>> {
    let mut out: Vec<(&'static str, FiniteHypergroup)> = vec![
        ("z2_theta_1", z2_theta(1.0)?),
        ("z2_theta_1_2", z2_theta(0.5)?),
        ("z2_theta_1_3", z2_theta(1.0 / 3.0)?),
        ("z2_theta_1_4", z2_theta(0.25)?),
        ("bose_mesner_square", bose_mesner_square()?),
        ("order3_hermitian_half_3_3", order3_hermitian(0.5, 3.0, 3.0)?),
        ("nonhermitian_1_2", order3_nonhermitian(0.5)?),
        ("nonhermitian_1_4", order3_nonhermitian(0.25)?),
    ];
    const CYCLIC: [&str; 7] = ["z2", "z3", "z4", "z5", "z6", "z7", "z8"];
    for (i, name) in CYCLIC.iter().enumerate() {
        out.push((name, group_hypergroup(&cyclic_group(i + 2))?));
    }
    let s3 = symmetric_group_s3();
    let d4 = dihedral_group(4);
    let q8 = quaternion_group();
    out.push(("s3", group_hypergroup(&s3)?));
    out.push(("d4", group_hypergroup(&d4)?));
    out.push(("q8", group_hypergroup(&q8)?));
    out.push(("class_s3", class_hypergroup(&s3)?));
    out.push(("class_d4", class_hypergroup(&d4)?));
    out.push(("class_q8", class_hypergroup(&q8)?));
    out.push(("double_coset_s3", double_coset(&s3, &s3_transposition_subgroup())?));
    out.push(("double_coset_d4", double_coset(&d4, &dihedral_reflection_subgroup(4))?));
    let z2 = group_hypergroup(&cyclic_group(2))?;
    let z3 = group_hypergroup(&cyclic_group(3))?;
    let z4 = group_hypergroup(&cyclic_group(4))?;
    let half = z2_theta(0.5)?;
    out.push(("z2xz2", direct_product(&z2, &z2)?));
    out.push(("z2_1_2xz2_1_3", direct_product(&half, &z2_theta(1.0 / 3.0)?)?));
    out.push(("bose_mesner_x_z2", direct_product(&bose_mesner_square()?, &z2)?));
    out.push(("nonhermitian_1_2xz3", direct_product(&order3_nonhermitian(0.5)?, &z3)?));
    out.push(("z4xz4", direct_product(&z4, &z4)?));
    let sq = direct_product(&half, &half)?;
    out.push(("z2_1_2_pow4", direct_product(&sq, &sq)?));
    Ok(out
        .into_iter()
        .map(|(name, k)| Preset { name, hypergroup: k.with_name(name) })
        .collect())
}

/// All named instances, built once.
pub fn presets() -> &'static [Preset] {
    static REGISTRY: OnceLock<Vec<Preset>> = OnceLock::new();
    REGISTRY.get_or_init(|| build_presets().expect("preset constructions are valid"))
}

pub fn preset(name: &str) -> Option<&'static FiniteHypergroup> {
    presets().iter().find(|p| p.name == name).map(|p| &p.hypergroup)
}

/// Summary of how the class sizes distribute, keyed by size.
pub fn class_size_profile(g: &GroupTable) -> BTreeMap<usize, usize> {
    let mut m = BTreeMap::new();
    for c in conjugacy_classes(g) {
        *m.entry(c.len()).or_insert(0) += 1;
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::duality::{character_table, is_strong};
    use crate::hypergroup::find_isomorphism;

    #[test]
    fn group_tables_validate() {
        assert_eq!(symmetric_group_s3().order(), 6);
        assert!(!symmetric_group_s3().is_abelian());
        assert_eq!(dihedral_group(4).order(), 8);
        let q8 = quaternion_group();
        assert_eq!(q8.order(), 8);
        assert!(!q8.is_abelian());
        assert!(GroupTable::new(vec![vec![0, 1], vec![1, 1]]).is_err());
        assert!(GroupTable::new(vec![vec![1, 0], vec![0, 1]]).is_err());
    }

    #[test]
    fn theta_one_is_z2() {
        let a = z2_theta(1.0).unwrap();
        let b = group_hypergroup(&cyclic_group(2)).unwrap();
        assert_eq!(a.tensor(), b.tensor());
        assert_eq!(a.involution(), b.involution());
    }

    #[test]
    fn alpha_one_is_z3() {
        let a = order3_nonhermitian(1.0).unwrap();
        let b = group_hypergroup(&cyclic_group(3)).unwrap();
        assert_eq!(a.tensor(), b.tensor());
        assert_eq!(a.involution(), b.involution());
    }

    #[test]
    fn parameter_ranges() {
        assert!(matches!(z2_theta(0.0), Err(Error::ParamOutOfRange { .. })));
        assert!(matches!(z2_theta(1.5), Err(Error::ParamOutOfRange { .. })));
        assert!(matches!(order3_nonhermitian(0.0), Err(Error::ParamOutOfRange { .. })));
        let err = order3_hermitian(0.5, 1.0, 3.0).unwrap_err();
        assert!(err.to_string().contains("1 + γ₁ω₂ ≤ ω₁"), "{err}");
        let k = order3_hermitian(0.5, 3.0, 3.0).unwrap();
        assert!(k.haar().iter().zip([1.0, 3.0, 3.0]).all(|(a, b)| (a - b).abs() < 1e-10));
    }

    #[test]
    fn nonhermitian_haar_and_closed_forms() {
        let k = order3_nonhermitian(0.5).unwrap();
        assert_eq!(k.haar(), &[1.0, 2.0, 2.0]);
        let (z, pi) = nonhermitian_closed_form(0.5);
        assert!((z - Complex64::new(-1.0, 5f64.sqrt()) / 4.0).norm() < 1e-15);
        assert!((pi[0] - 0.2).abs() < 1e-15 && (pi[1] - 0.4).abs() < 1e-15);
    }

    #[test]
    fn class_hypergroup_of_s3() {
        let s3 = symmetric_group_s3();
        let sizes: Vec<usize> = conjugacy_classes(&s3).iter().map(|c| c.len()).collect();
        assert_eq!(sizes, vec![1, 2, 3]);
        let k = class_hypergroup(&s3).unwrap();
        assert!(k.is_commutative() && k.is_hermitian());
        assert!(is_strong(&k).unwrap());
        // The 3-cycle class squares to e/2 + (3-cycles)/2.
        let row = k.product(1, 1);
        assert!((row[0] - 0.5).abs() < 1e-15 && (row[1] - 0.5).abs() < 1e-15);
    }

    #[test]
    fn abelian_class_hypergroup_is_the_group() {
        let g = cyclic_group(4);
        let a = class_hypergroup(&g).unwrap();
        let b = group_hypergroup(&g).unwrap();
        assert!(find_isomorphism(&a, &b, 1e-12).is_some());
    }

    #[test]
    fn double_coset_corners() {
        let s3 = symmetric_group_s3();
        let trivial = double_coset(&s3, &[0].into()).unwrap();
        assert_eq!(trivial.tensor(), group_hypergroup(&s3).unwrap().tensor());
        let all: BTreeSet<usize> = (0..6).collect();
        assert_eq!(double_coset(&s3, &all).unwrap().order(), 1);
        let three_cycle = (0..6).find(|&x| s3.mul(x, x) != 0).unwrap();
        assert!(matches!(
            double_coset(&s3, &[0, three_cycle].into()),
            Err(Error::NotASubgroup(_))
        ));
        let k = double_coset(&s3, &s3_transposition_subgroup()).unwrap();
        assert_eq!(k.order(), 2);
        assert!(find_isomorphism(&k, &z2_theta(0.5).unwrap(), 1e-12).is_some());
        assert!((k.haar()[1] - 2.0).abs() < 1e-12);
    }

    #[test]
    fn product_characters_factorize() {
        let a = z2_theta(0.5).unwrap();
        let b = z2_theta(1.0 / 3.0).unwrap();
        let p = direct_product(&a, &b).unwrap();
        let (ta, tb, tp) =
            (character_table(&a).unwrap(), character_table(&b).unwrap(), character_table(&p).unwrap());
        let mut expected: Vec<f64> = ta
            .plancherel()
            .iter()
            .flat_map(|x| tb.plancherel().iter().map(move |y| x * y))
            .collect();
        let mut got = tp.plancherel().to_vec();
        expected.sort_by(f64::total_cmp);
        got.sort_by(f64::total_cmp);
        for (e, g) in expected.iter().zip(&got) {
            assert!((e - g).abs() < 1e-12);
        }
        // Every pairwise product of factor characters is a character of the product.
        for r in ta.characters() {
            for s in tb.characters() {
                let vals: Vec<Complex64> =
                    (0..4).map(|x| r.at(x / 2) * s.at(x % 2)).collect();
                assert!(tp.find(&vals, 1e-10).is_some());
            }
        }
        let triv = direct_product(&a, &group_hypergroup(&cyclic_group(1)).unwrap()).unwrap();
        assert!(find_isomorphism(&triv, &a, 1e-15).is_some());
    }

    #[test]
    fn presets_are_valid_and_named() {
        let ps = presets();
        assert!(ps.len() >= 25);
        assert!(preset("bose_mesner_square").is_some());
        assert!(ps.iter().all(|p| p.hypergroup.order() <= 16));
        assert_eq!(class_size_profile(&quaternion_group()), BTreeMap::from([(1, 2), (2, 3)]));
    }
}
