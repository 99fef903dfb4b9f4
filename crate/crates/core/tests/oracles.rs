//! Derived values checked against independently computed references.

use std::collections::BTreeSet;

use hypergroup::constructions::{
    bose_mesner_square, class_hypergroup, conjugacy_classes, cyclic_group, dihedral_group,
    double_coset, group_hypergroup, quaternion_group, symmetric_group_s3, z2_theta,
};
use hypergroup::duality::{character_table, dual_hypergroup, tau};
use hypergroup::hypergroup::find_isomorphism;
use hypergroup::subobjects::{enumerate_subhypergroups, quotient, Subhypergroup};
use num_complex::Complex64;

/// Normalized characters χ/χ(e) of S₃ evaluated on conjugacy classes.
#[test]
fn class_hypergroup_of_s3_matches_textbook_table() {
    let s3 = symmetric_group_s3();
    let classes = conjugacy_classes(&s3);
    let k = class_hypergroup(&s3).unwrap();
    let t = character_table(&k).unwrap();
    // Textbook S₃ table by class size: size 1 → e, size 2 → 3-cycles, size 3 → transpositions.
    let textbook = |dim: f64, on_3cycle: f64, on_transposition: f64| -> Vec<Complex64> {
        classes
            .iter()
            .map(|c| match c.len() {
                1 => 1.0,
                2 => on_3cycle / dim,
                _ => on_transposition / dim,
            })
            .map(|v| Complex64::new(v, 0.0))
            .collect()
    };
    for (dim, a, b) in [(1.0, 1.0, 1.0), (1.0, 1.0, -1.0), (2.0, -1.0, 0.0)] {
        let rho = t.find(&textbook(dim, a, b), 1e-12).expect("textbook character present");
        // π{χ/d} = d²/|G|
        assert!((t.plancherel()[rho] - dim * dim / 6.0).abs() < 1e-12);
    }
    for (x, c) in classes.iter().enumerate() {
        assert_eq!(k.haar()[x], c.len() as f64);
    }
}

#[test]
fn class_hypergroup_plancherel_is_dimension_squared_over_order() {
    for (g, dims) in [(dihedral_group(4), vec![1.0, 1.0, 1.0, 1.0, 2.0]), (quaternion_group(), vec![1.0, 1.0, 1.0, 1.0, 2.0])] {
        let k = class_hypergroup(&g).unwrap();
        let t = character_table(&k).unwrap();
        let mut got: Vec<f64> = t.plancherel().iter().map(|p| p * 8.0).collect();
        got.sort_by(f64::total_cmp);
        for (a, b) in got.iter().zip(dims.iter().map(|d| d * d)) {
            assert!((a - b).abs() < 1e-10);
        }
    }
}

#[test]
fn double_coset_of_s3_by_hand() {
    let s3 = symmetric_group_s3();
    let h: BTreeSet<usize> = hypergroup::constructions::s3_transposition_subgroup();
    let k = double_coset(&s3, &h).unwrap();
    // The non-trivial double coset holds the 4 elements outside H; half of δ₁*δ₁ lands in H.
    assert_eq!(k.order(), 2);
    assert!((k.tensor().get(1, 1, 0) - 0.5).abs() < 1e-12);
    assert!(find_isomorphism(&k, &z2_theta(0.5).unwrap(), 1e-12).is_some());
}

#[test]
fn tau_matches_direct_sum() {
    // τ(x)² = Σ_ρ |ρ(x)|² π{ρ}², computed for Z2(θ) by hand: θ²/(1+θ)² + θ²/(1+θ)² at x = 1.
    for theta in [0.5, 0.2, 1.0] {
        let k = z2_theta(theta).unwrap();
        let t = character_table(&k).unwrap();
        let p0 = theta / (1.0 + theta);
        let p1 = 1.0 / (1.0 + theta);
        assert!((tau(&t, 0) - (p0 * p0 + p1 * p1).sqrt()).abs() < 1e-12);
        assert!((tau(&t, 1) - (p0 * p0 + theta * theta * p1 * p1).sqrt()).abs() < 1e-12);
    }
    let t = character_table(&z2_theta(0.5).unwrap()).unwrap();
    assert!((tau(&t, 0) - 5f64.sqrt() / 3.0).abs() < 1e-12);
}

#[test]
fn bose_mesner_quotient_is_z2_theta() {
    let bm = bose_mesner_square().unwrap();
    let h = Subhypergroup::certify(&bm, [0, 1]).unwrap();
    let q = quotient(&bm, &h).unwrap();
    // Coset {2} convolved with itself: (δ₂*δ₂) = ½δ₀ + ½δ₁ lies entirely in H.
    assert!((q.tensor().get(1, 1, 0) - 1.0).abs() < 1e-12);
    assert!(find_isomorphism(&q, &z2_theta(1.0).unwrap(), 1e-12).is_some());
}

#[test]
fn cyclic_subgroups_are_divisor_subgroups() {
    for n in 1..=12usize {
        let k = group_hypergroup(&cyclic_group(n)).unwrap();
        let got: BTreeSet<Vec<usize>> =
            enumerate_subhypergroups(&k).unwrap().iter().map(|h| h.members().to_vec()).collect();
        let want: BTreeSet<Vec<usize>> =
            (1..=n).filter(|d| n % d == 0).map(|d| (0..n).step_by(d).collect()).collect();
        assert_eq!(got, want, "ℤ_{n}");
    }
}

#[test]
fn dual_of_cyclic_group_is_cyclic() {
    for n in 2..=8 {
        let k = group_hypergroup(&cyclic_group(n)).unwrap();
        let t = character_table(&k).unwrap();
        let dual = dual_hypergroup(&k, &t).unwrap();
        assert!(find_isomorphism(&dual, &k, 1e-9).is_some(), "ℤ_{n}");
        assert!(dual.haar().iter().all(|&w| (w - 1.0).abs() < 1e-9));
    }
}
