//! Finite hypergroups as dense structure-constant tensors.
//!
//! A hypergroup of order `n` is stored as the tensor `n[i][j][k] = (δ_i * δ_j){k}`.
//! Element `0` is always the identity. [`validate`] checks every axiom (including
//! associativity, which file-supplied tensors can silently break) and caches the
//! Haar weights `ω{x} = 1 / (δ_x̄ * δ_x){e}`.

use std::collections::BTreeSet;

use num_complex::Complex64;

use crate::error::{AxiomKind, AxiomViolation, AxiomViolationReport, Error, Result};

/// Tolerance used when validating structure constants.
pub const TOL: f64 = 1e-9;

/// A set of element indices.
pub type ElementSet = BTreeSet<usize>;

/// Dense `order × order × order` array of structure constants.
#[derive(Debug, Clone, PartialEq)]
pub struct StructureTensor {
    order: usize,
    data: Vec<f64>,
}

impl StructureTensor {
    pub fn new(order: usize, data: Vec<f64>) -> Result<Self> {
        if order == 0 {
            return Err(Error::DimensionMismatch("order must be positive".into()));
        }
        if data.len() != order * order * order {
            return Err(Error::DimensionMismatch(format!(
                "expected {} structure constants for order {order}, got {}",
                order * order * order,
                data.len()
            )));
        }
        Ok(StructureTensor { order, data })
    }

    pub fn zeros(order: usize) -> Self {
        StructureTensor { order, data: vec![0.0; order * order * order] }
    }

    pub fn from_fn(order: usize, mut f: impl FnMut(usize, usize, usize) -> f64) -> Self {
        let mut t = Self::zeros(order);
        for i in 0..order {
            for j in 0..order {
                for k in 0..order {
                    t.data[(i * order + j) * order + k] = f(i, j, k);
                }
            }
        }
        t
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize, k: usize) -> f64 {
        self.data[(i * self.order + j) * self.order + k]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, k: usize, value: f64) {
        self.data[(i * self.order + j) * self.order + k] = value;
    }

    #[inline]
    pub fn add(&mut self, i: usize, j: usize, k: usize, value: f64) {
        self.data[(i * self.order + j) * self.order + k] += value;
    }

    /// The distribution `δ_i * δ_j` as a slice over `k`.
    #[inline]
    pub fn row(&self, i: usize, j: usize) -> &[f64] {
        let start = (i * self.order + j) * self.order;
        &self.data[start..start + self.order]
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.data
    }

    /// Largest entrywise difference to another tensor of the same order.
    pub fn max_abs_diff(&self, other: &StructureTensor) -> f64 {
        assert_eq!(self.order, other.order);
        self.data.iter().zip(&other.data).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max)
    }

    /// Relabels elements: entry `(p[i], p[j], p[k])` of the result is entry `(i, j, k)` of `self`.
    pub fn permuted(&self, p: &[usize]) -> StructureTensor {
        let n = self.order;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    out.set(p[i], p[j], p[k], self.get(i, j, k));
                }
            }
        }
        out
    }
}

/// A finitely additive measure on the element indices.
#[derive(Debug, Clone, PartialEq)]
pub struct Measure(pub Vec<f64>);

impl Measure {
    pub fn point_mass(order: usize, x: usize) -> Self {
        let mut w = vec![0.0; order];
        w[x] = 1.0;
        Measure(w)
    }

    pub fn weights(&self) -> &[f64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total(&self) -> f64 {
        self.0.iter().sum()
    }

    pub fn is_probability(&self, tol: f64) -> bool {
        self.0.iter().all(|&w| w >= -tol) && (self.total() - 1.0).abs() <= tol
    }

    pub fn support(&self, tol: f64) -> ElementSet {
        self.0.iter().enumerate().filter(|(_, &w)| w > tol).map(|(i, _)| i).collect()
    }
}

/// A validated finite hypergroup.
#[derive(Debug, Clone)]
pub struct FiniteHypergroup {
    name: String,
    tensor: StructureTensor,
    involution: Vec<usize>,
    haar: Vec<f64>,
}

/// Checks the hypergroup axioms and associativity, returning the hypergroup with its Haar
/// weights, or a report listing every violation.
pub fn validate(
    name: impl Into<String>,
    mut tensor: StructureTensor,
    involution: Vec<usize>,
) -> Result<FiniteHypergroup> {
    let n = tensor.order();
    if involution.len() != n {
        return Err(Error::DimensionMismatch(format!(
            "involution has length {}, order is {n}",
            involution.len()
        )));
    }
    let mut seen = vec![false; n];
    for &x in &involution {
        if x >= n || std::mem::replace(&mut seen[x], true) {
            return Err(Error::DimensionMismatch(format!(
                "involution {involution:?} is not a permutation of 0..{n}"
            )));
        }
    }

    let mut violations = Vec::new();
    let mut push = |kind, location: Vec<usize>, residual: f64| {
        violations.push(AxiomViolation { kind, location, residual })
    };

    for x in 0..n {
        if involution[involution[x]] != x {
            push(AxiomKind::NotAnInvolution, vec![x], 1.0);
        }
    }

    for v in tensor.data.iter_mut() {
        if *v < 0.0 && *v > -TOL {
            *v = 0.0;
        }
    }
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let v = tensor.get(i, j, k);
                if v < 0.0 {
                    push(AxiomKind::Negativity, vec![i, j, k], -v);
                }
            }
            let sum: f64 = tensor.row(i, j).iter().sum();
            if (sum - 1.0).abs() > TOL {
                push(AxiomKind::RowSum, vec![i, j], sum - 1.0);
            }
        }
    }

    for i in 0..n {
        for k in 0..n {
            let target = if i == k { 1.0 } else { 0.0 };
            let left = tensor.get(0, i, k) - target;
            let right = tensor.get(i, 0, k) - target;
            let r = if left.abs() >= right.abs() { left } else { right };
            if r.abs() > TOL {
                push(AxiomKind::Identity, vec![i, k], r);
            }
        }
    }

    for i in 0..n {
        for j in 0..n {
            let mass = tensor.get(i, j, 0);
            if (mass > TOL) != (involution[i] == j) {
                push(AxiomKind::InvolutionSupport, vec![i, j], mass);
            }
        }
    }

    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let d = tensor.get(i, j, k)
                    - tensor.get(involution[j], involution[i], involution[k]);
                if d.abs() > TOL {
                    push(AxiomKind::InvolutionAntihomomorphism, vec![i, j, k], d);
                }
            }
        }
    }

    for (location, residual) in associativity_defects(&tensor) {
        push(AxiomKind::Associativity, location, residual);
    }

    if !violations.is_empty() {
        return Err(Error::AxiomViolation(AxiomViolationReport { violations }));
    }

    let mut haar = Vec::with_capacity(n);
    for x in 0..n {
        let mass = tensor.get(involution[x], x, 0);
        if mass <= TOL {
            return Err(Error::DegenerateHaar { element: x, mass });
        }
        haar.push(1.0 / mass);
    }

    Ok(FiniteHypergroup { name: name.into(), tensor, involution, haar })
}

/// Triples `(i, j, k)` with `(δ_i*δ_j)*δ_k ≠ δ_i*(δ_j*δ_k)` beyond [`TOL`].
fn associativity_defects(t: &StructureTensor) -> Vec<(Vec<usize>, f64)> {
    let n = t.order();
    let mut out = Vec::new();
    let mut lhs = vec![0.0; n];
    let mut rhs = vec![0.0; n];
    for i in 0..n {
        for j in 0..n {
            let ij = t.row(i, j);
            for k in 0..n {
                lhs.iter_mut().for_each(|v| *v = 0.0);
                rhs.iter_mut().for_each(|v| *v = 0.0);
                for (m, &w) in ij.iter().enumerate() {
                    if w != 0.0 {
                        for (acc, &v) in lhs.iter_mut().zip(t.row(m, k)) {
                            *acc += w * v;
                        }
                    }
                }
                for (m, &w) in t.row(j, k).iter().enumerate() {
                    if w != 0.0 {
                        for (acc, &v) in rhs.iter_mut().zip(t.row(i, m)) {
                            *acc += w * v;
                        }
                    }
                }
                let r = lhs.iter().zip(&rhs).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max);
                if r > TOL {
                    out.push((vec![i, j, k], r));
                }
            }
        }
    }
    out
}

impl FiniteHypergroup {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.tensor.order()
    }

    pub fn tensor(&self) -> &StructureTensor {
        &self.tensor
    }

    pub fn involution(&self) -> &[usize] {
        &self.involution
    }

    #[inline]
    pub fn inv(&self, x: usize) -> usize {
        self.involution[x]
    }

    /// Haar weights `ω{x}`, with `ω{e} = 1`.
    pub fn haar(&self) -> &[f64] {
        &self.haar
    }

    pub fn haar_measure(&self) -> Measure {
        Measure(self.haar.clone())
    }

    /// Total Haar mass `ω(K)`.
    pub fn total_mass(&self) -> f64 {
        self.haar.iter().sum()
    }

    pub fn mass_of<'a>(&self, set: impl IntoIterator<Item = &'a usize>) -> f64 {
        set.into_iter().map(|&x| self.haar[x]).sum()
    }

    /// `δ_x * δ_y` as a distribution over elements.
    #[inline]
    pub fn product(&self, x: usize, y: usize) -> &[f64] {
        self.tensor.row(x, y)
    }

    pub fn convolve(&self, mu: &Measure, nu: &Measure) -> Result<Measure> {
        let n = self.order();
        if mu.len() != n || nu.len() != n {
            return Err(Error::DimensionMismatch(format!(
                "measures of length {} and {} on a hypergroup of order {n}",
                mu.len(),
                nu.len()
            )));
        }
        let mut out = vec![0.0; n];
        for (i, &a) in mu.weights().iter().enumerate() {
            if a == 0.0 {
                continue;
            }
            for (j, &b) in nu.weights().iter().enumerate() {
                if b == 0.0 {
                    continue;
                }
                for (acc, &c) in out.iter_mut().zip(self.product(i, j)) {
                    *acc += a * b * c;
                }
            }
        }
        Ok(Measure(out))
    }

    /// `A * B`: the union of the supports of `δ_x * δ_y` for `x ∈ A`, `y ∈ B`.
    pub fn support_product(&self, a: &ElementSet, b: &ElementSet) -> ElementSet {
        let mut out = ElementSet::new();
        for &x in a {
            for &y in b {
                out.extend(
                    self.product(x, y).iter().enumerate().filter(|(_, &w)| w > TOL).map(|(k, _)| k),
                );
            }
        }
        out
    }

    /// Largest `|n[i][j][k] − n[j][i][k]|`.
    pub fn commutativity_residual(&self) -> f64 {
        let n = self.order();
        let mut r = 0.0f64;
        for i in 0..n {
            for j in (i + 1)..n {
                for (a, b) in self.product(i, j).iter().zip(self.product(j, i)) {
                    r = r.max((a - b).abs());
                }
            }
        }
        r
    }

    pub fn is_commutative(&self) -> bool {
        self.commutativity_residual() <= TOL
    }

    pub fn is_hermitian(&self) -> bool {
        self.involution.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// `f(x * y) = Σ_z f(z) (δ_x * δ_y){z}`.
    pub fn eval_translated(&self, f: &[Complex64], x: usize, y: usize) -> Complex64 {
        self.product(x, y).iter().zip(f).map(|(&w, &v)| v * w).sum()
    }

    /// Whether this hypergroup is a group: every product is a point mass.
    pub fn is_group(&self) -> bool {
        let n = self.order();
        (0..n).all(|i| {
            (0..n).all(|j| self.product(i, j).iter().all(|&w| w <= TOL || (w - 1.0).abs() <= TOL))
        })
    }
}

/// Finds a relabelling `p` with `p[0] = 0` under which `a` and `b` have the same structure
/// constants (`a.n[i][j][k] ≈ b.n[p[i]][p[j]][p[k]]`) and compatible involutions.
pub fn find_isomorphism(a: &FiniteHypergroup, b: &FiniteHypergroup, tol: f64) -> Option<Vec<usize>> {
    let n = a.order();
    if b.order() != n {
        return None;
    }
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    map[0] = 0;
    used[0] = true;
    let mut assigned = vec![0usize];
    if iso_extend(a, b, tol, &mut map, &mut used, &mut assigned) {
        Some(map)
    } else {
        None
    }
}

fn iso_extend(
    a: &FiniteHypergroup,
    b: &FiniteHypergroup,
    tol: f64,
    map: &mut Vec<usize>,
    used: &mut Vec<bool>,
    assigned: &mut Vec<usize>,
) -> bool {
    let n = a.order();
    let Some(x) = (0..n).find(|&x| map[x] == usize::MAX) else {
        return true;
    };
    for y in 0..n {
        if used[y] || (a.haar()[x] - b.haar()[y]).abs() > tol {
            continue;
        }
        map[x] = y;
        used[y] = true;
        assigned.push(x);
        let consistent = assigned.iter().all(|&u| {
            let ui = a.inv(u);
            map[ui] == usize::MAX || map[ui] == b.inv(map[u])
        }) && assigned.iter().all(|&i| {
            assigned.iter().all(|&j| {
                assigned.iter().all(|&k| {
                    (a.tensor().get(i, j, k) - b.tensor().get(map[i], map[j], map[k])).abs() <= tol
                })
            })
        });
        if consistent && iso_extend(a, b, tol, map, used, assigned) {
            return true;
        }
        assigned.pop();
        used[y] = false;
        map[x] = usize::MAX;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z2_theta(theta: f64) -> StructureTensor {
        StructureTensor::from_fn(2, |i, j, k| match (i, j, k) {
            (1, 1, 0) => theta,
            (1, 1, 1) => 1.0 - theta,
            (i, j, k) if (i + j) % 2 == k && (i == 0 || j == 0) => 1.0,
            _ => 0.0,
        })
    }

    fn cyclic(n: usize) -> StructureTensor {
        StructureTensor::from_fn(n, |i, j, k| if (i + j) % n == k { 1.0 } else { 0.0 })
    }

    #[test]
    fn cyclic_group_has_counting_haar() {
        let inv: Vec<usize> = (0..5).map(|i| (5 - i) % 5).collect();
        let k = validate("Z5", cyclic(5), inv).unwrap();
        assert!(k.haar().iter().all(|&w| (w - 1.0).abs() < 1e-15));
        assert!(k.is_commutative());
        assert!(!k.is_hermitian());
    }

    #[test]
    fn z2_theta_haar_and_square() {
        let k = validate("Z2(1/2)", z2_theta(0.5), vec![0, 1]).unwrap();
        assert_eq!(k.haar(), &[1.0, 2.0]);
        let sq = k.convolve(&Measure::point_mass(2, 1), &Measure::point_mass(2, 1)).unwrap();
        assert_eq!(sq.weights(), &[0.5, 0.5]);
        assert!(k.is_hermitian() && k.is_commutative());
    }

    #[test]
    fn missing_involution_support_is_reported() {
        let t = z2_theta(0.0);
        let err = validate("bad", t, vec![0, 1]).unwrap_err();
        match err {
            Error::AxiomViolation(r) => {
                assert!(r.has(AxiomKind::InvolutionSupport));
                assert!(r.violations.iter().any(|v| v.location == vec![1, 1]));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn row_sum_and_negativity_are_reported() {
        let mut t = z2_theta(0.5);
        t.set(1, 1, 1, 0.4);
        t.set(1, 0, 0, -0.5);
        let Error::AxiomViolation(r) = validate("bad", t, vec![0, 1]).unwrap_err() else {
            panic!()
        };
        assert!(r.has(AxiomKind::RowSum));
        assert!(r.has(AxiomKind::Negativity));
        assert!(r.violations.iter().any(|v| v.kind == AxiomKind::RowSum && v.location == vec![1, 1]));
    }

    #[test]
    fn tiny_negative_entries_are_clamped() {
        let mut t = z2_theta(0.5);
        t.set(0, 1, 0, -1e-12);
        let k = validate("ok", t, vec![0, 1]).unwrap();
        assert_eq!(k.tensor().get(0, 1, 0), 0.0);
    }

    #[test]
    fn non_associative_tensor_is_rejected() {
        // Row-stochastic, identity and involution axioms hold, but the products do not associate.
        let t = StructureTensor::from_fn(3, |i, j, k| match (i, j) {
            (0, j) => (j == k) as u8 as f64,
            (i, 0) => (i == k) as u8 as f64,
            (1, 1) => [0.5, 0.5, 0.0][k],
            (2, 2) => [0.5, 0.0, 0.5][k],
            _ => [0.0, 0.5, 0.5][k],
        });
        let Error::AxiomViolation(r) = validate("nonassoc", t, vec![0, 1, 2]).unwrap_err() else {
            panic!()
        };
        assert!(r.has(AxiomKind::Associativity));
    }

    #[test]
    fn bad_involution_permutation() {
        assert!(matches!(
            validate("x", cyclic(3), vec![0, 0, 1]),
            Err(Error::DimensionMismatch(_))
        ));
        assert!(matches!(validate("x", cyclic(3), vec![0, 1]), Err(Error::DimensionMismatch(_))));
    }

    #[test]
    fn support_products_and_translation() {
        let k = validate("Z2(1/4)", z2_theta(0.25), vec![0, 1]).unwrap();
        let one: ElementSet = [1].into();
        let e: ElementSet = [0].into();
        assert_eq!(k.support_product(&one, &one), [0, 1].into());
        assert_eq!(k.support_product(&e, &one), one);
        let ones = vec![Complex64::new(1.0, 0.0); 2];
        assert!((k.eval_translated(&ones, 1, 1) - 1.0).norm() < 1e-15);
        let chi1 = vec![Complex64::new(1.0, 0.0), Complex64::new(-0.25, 0.0)];
        assert!((k.eval_translated(&chi1, 1, 1) - chi1[1] * chi1[1]).norm() < 1e-15);
    }

    #[test]
    fn left_translation_preserves_haar() {
        let k = validate("Z2(1/3)", z2_theta(1.0 / 3.0), vec![0, 1]).unwrap();
        let w = k.haar();
        for i in 0..2 {
            for kk in 0..2 {
                let s: f64 = (0..2).map(|j| w[j] * k.tensor().get(i, j, kk)).sum();
                assert!((s - w[kk]).abs() < 1e-9);
            }
        }
    }
}
