//! Subhypergroups, cosets, annihilators and quotients.

use hypergroup::constructions::preset;
use hypergroup::duality::character_table;
use hypergroup::subobjects::{annihilator, cosets, enumerate_subhypergroups, lemma23_conditions, quotient};

fn main() -> hypergroup::Result<()> {
    let k = preset("bose_mesner_x_z2").expect("registered preset");
    let t = character_table(k)?;
    for h in enumerate_subhypergroups(k)? {
        let part = cosets(k, &h)?;
        let perp = annihilator(&t, &h);
        let q = quotient(k, &h)?;
        let lemma = lemma23_conditions(k, &t, &h)?;
        println!(
            "H = {:?}: cosets {:?}, H⊥ = {:?}, |K/H| = {}, conditions disagree on {:?}",
            h.members(),
            part.blocks,
            perp.characters,
            q.order(),
            lemma.disagreements()
        );
    }
    Ok(())
}
