//! Dual hypergroups, strongness and the double dual.

use hypergroup::constructions::{class_hypergroup, order3_nonhermitian, preset, symmetric_group_s3, z2_theta};
use hypergroup::duality::{character_table, double_dual_check, dual_hypergroup, is_strong};
use hypergroup::hypergroup::find_isomorphism;

fn main() -> hypergroup::Result<()> {
    for k in [z2_theta(0.3)?, order3_nonhermitian(0.25)?] {
        let dual = dual_hypergroup(&k, &character_table(&k)?)?;
        println!("{}: dual ≅ K: {}", k.name(), find_isomorphism(&dual, &k, 1e-8).is_some());
    }
    let classes = class_hypergroup(&symmetric_group_s3())?;
    println!("class(S3): strong {}, double dual {}", is_strong(&classes)?, double_dual_check(&classes)?);
    let bm = preset("bose_mesner_square").expect("registered preset");
    println!("bose_mesner_square strong: {}", is_strong(bm)?);
    Ok(())
}
