//! Characters and Plancherel weights of the order-3 examples.

use hypergroup::constructions::{bose_mesner_square, order3_nonhermitian};
use hypergroup::duality::character_table;

fn main() -> hypergroup::Result<()> {
    for k in [bose_mesner_square()?, order3_nonhermitian(0.5)?] {
        let t = character_table(&k)?;
        println!("{} (haar {:?})", k.name(), k.haar());
        for (rho, c) in t.characters().iter().enumerate() {
            let values: Vec<String> = c.values().iter().map(|z| format!("{:.4}{:+.4}i", z.re, z.im)).collect();
            println!("  χ{rho}  π = {:.4}  [{}]", t.plancherel()[rho], values.join(", "));
        }
    }
    Ok(())
}
