//! Solve the hidden sub-hypergroup problem on the Bose-Mesner square and on ℤ₄ × ℤ₄.

use hypergroup::constructions::{bose_mesner_square, preset};
use hypergroup::hshp::{exact_distribution, make_coset_oracle, HshpInstance, Policy};
use hypergroup::subobjects::Subhypergroup;

fn main() -> hypergroup::Result<()> {
    let bm = bose_mesner_square()?;
    let z4xz4 = preset("z4xz4").expect("registered preset").clone();
    for (k, hidden) in [(bm, vec![0, 1]), (z4xz4, vec![0, 5, 10, 15])] {
        let h = Subhypergroup::certify(&k, hidden)?;
        let oracle = make_coset_oracle(&k, &h)?;
        let inst = HshpInstance::new(&k)?;
        let run = inst.solve(&oracle, 7, Policy::for_order(k.order()))?;
        let exact = exact_distribution(&k, &inst.table, &h)?;
        println!("{}: hidden {:?}", k.name(), h.members());
        println!("  reconstructed {:?} after {} shots, verified: {}", run.reconstructed.members(), run.shots, run.verified);
        println!("  exact step-5 law {:?}", exact.marginal.iter().map(|p| format!("{p:.3}")).collect::<Vec<_>>());
    }
    Ok(())
}
