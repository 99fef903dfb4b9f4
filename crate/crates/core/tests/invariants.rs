//! Property tests over seeded draws from the parametric families.

use hypergroup::cli::document::{emit, HypergroupDocument};
use hypergroup::duality::{
    character_table, fourier_matrix, fourier_of_function, inverse_fourier,
};
use hypergroup::hshp::{exact_distribution, reconstruct};
use hypergroup::hypergroup::{FiniteHypergroup, Measure};
use hypergroup::selftest::{draw, draw_product, FAMILIES};
use hypergroup::subobjects::{annihilator, enumerate_subhypergroups, Subhypergroup};
use num_complex::Complex64;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn instance(seed: u64, family: usize) -> FiniteHypergroup {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    if family == FAMILIES.len() {
        draw_product(&mut rng).unwrap()
    } else {
        draw(FAMILIES[family], &mut rng).unwrap()
    }
}

fn arb_instance() -> impl Strategy<Value = FiniteHypergroup> {
    (any::<u64>(), 0..=FAMILIES.len()).prop_map(|(s, f)| instance(s, f))
}

fn arb_function(n: usize) -> impl Strategy<Value = Vec<Complex64>> {
    prop::collection::vec((-1.0..1.0f64, -1.0..1.0f64), n)
        .prop_map(|v| v.into_iter().map(|(a, b)| Complex64::new(a, b)).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn fourier_matrix_is_unitary(k in arb_instance()) {
        let t = character_table(&k).unwrap();
        prop_assert!(fourier_matrix(&k, &t).unwrap().unitarity_residual() <= 1e-10);
    }

    #[test]
    fn plancherel_is_conjugation_invariant(k in arb_instance()) {
        let t = character_table(&k).unwrap();
        for rho in 0..t.len() {
            let bar = t.conjugate_index(rho);
            prop_assert!((t.plancherel()[rho] - t.plancherel()[bar]).abs() < 1e-10);
        }
        // π{χ₀} = 1/ω(K), and Σ_ρ π{ρ} ρ(x) is the indicator of e.
        prop_assert!((t.plancherel()[0] * k.total_mass() - 1.0).abs() < 1e-10);
        for x in 0..k.order() {
            let s: Complex64 = (0..t.len()).map(|r| t.value(r, x) * t.plancherel()[r]).sum();
            let target = if x == 0 { 1.0 } else { 0.0 };
            prop_assert!((s - target).norm() < 1e-9);
        }
    }

    #[test]
    fn characters_are_multiplicative(k in arb_instance()) {
        let t = character_table(&k).unwrap();
        prop_assert_eq!(t.len(), k.order());
        for c in t.characters() {
            prop_assert!(c.multiplicativity_residual(&k) <= 1e-8);
            prop_assert!(c.involution_residual(&k) <= 1e-8);
        }
    }

    #[test]
    fn parseval_and_inversion((k, f) in arb_instance().prop_flat_map(|k| {
        let n = k.order();
        (Just(k), arb_function(n))
    })) {
        let t = character_table(&k).unwrap();
        let fh = fourier_of_function(&k, &t, &f);
        let lhs: f64 = f.iter().zip(k.haar()).map(|(v, w)| v.norm_sqr() * w).sum();
        let rhs: f64 = fh.iter().zip(t.plancherel()).map(|(v, p)| v.norm_sqr() * p).sum();
        prop_assert!((lhs - rhs).abs() <= 1e-9 * (1.0 + lhs));
        let back = inverse_fourier(&t, &fh);
        for (a, b) in back.iter().zip(&f) {
            prop_assert!((a - b).norm() <= 1e-9);
        }
    }

    #[test]
    fn haar_is_translation_invariant(k in arb_instance(), x in 0usize..16) {
        // Σ_y ω{y} (δ_x * δ_y){z} = ω{z} summed over left translates by x.
        let x = x % k.order();
        let delta = Measure::point_mass(k.order(), x);
        let conv = k.convolve(&delta, &k.haar_measure()).unwrap();
        for (a, b) in conv.weights().iter().zip(k.haar()) {
            prop_assert!((a - b).abs() <= 1e-9 * b);
        }
    }

    #[test]
    fn convolution_is_associative_on_point_masses(k in arb_instance(), a in 0usize..16, b in 0usize..16, c in 0usize..16) {
        let n = k.order();
        let (a, b, c) = (a % n, b % n, c % n);
        let d = |i| Measure::point_mass(n, i);
        let left = k.convolve(&k.convolve(&d(a), &d(b)).unwrap(), &d(c)).unwrap();
        let right = k.convolve(&d(a), &k.convolve(&d(b), &d(c)).unwrap()).unwrap();
        for (l, r) in left.weights().iter().zip(right.weights()) {
            prop_assert!((l - r).abs() <= 1e-12);
        }
        prop_assert!(left.is_probability(1e-12));
    }

    #[test]
    fn document_round_trip(k in arb_instance()) {
        let back = HypergroupDocument::from_json(&emit(&k)).unwrap().to_hypergroup().unwrap();
        prop_assert!(back.tensor().max_abs_diff(k.tensor()) <= 1e-15);
        prop_assert_eq!(back.involution(), k.involution());
    }

    #[test]
    fn step_five_law_is_supported_on_annihilator(k in arb_instance()) {
        let t = character_table(&k).unwrap();
        for h in enumerate_subhypergroups(&k).unwrap() {
            let d = exact_distribution(&k, &t, &h).unwrap();
            let perp = annihilator(&t, &h);
            for (rho, p) in d.marginal.iter().enumerate() {
                prop_assert!(perp.contains(rho) || *p <= 1e-10);
            }
            prop_assert!((d.marginal.iter().sum::<f64>() - 1.0).abs() <= 1e-10);
            // Sampling the whole support pins H down exactly.
            let support: Vec<usize> = (0..t.len()).filter(|&r| d.support[r]).collect();
            prop_assert_eq!(&reconstruct(&k, &t, &support).unwrap(), &h);
        }
    }

    #[test]
    fn subhypergroups_are_closed(k in arb_instance()) {
        for h in enumerate_subhypergroups(&k).unwrap() {
            prop_assert!(Subhypergroup::certify(&k, h.members().iter().copied()).is_ok());
            for &x in h.members() {
                prop_assert!(h.contains(k.inv(x)));
            }
        }
    }
}
