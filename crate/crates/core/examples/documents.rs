//! Write a hypergroup as a JSON document, read it back, and print its digest.

use hypergroup::cli::canonical::digest;
use hypergroup::cli::document::{emit, HypergroupDocument};
use hypergroup::constructions::order3_nonhermitian;

fn main() -> hypergroup::Result<()> {
    let k = order3_nonhermitian(0.5)?;
    let text = emit(&k);
    print!("{text}");
    let back = HypergroupDocument::from_json(&text)?.to_hypergroup()?;
    println!("round trip max diff {:e}", back.tensor().max_abs_diff(k.tensor()));
    println!("digest {}", digest(&k));

    let exact = r#"{"name": "Z2(1/3)", "order": 2, "involution": [0, 1],
        "constants": [[[1, 0], [0, 1]], [[0, 1], ["1/3", "2/3"]]]}"#;
    let z = HypergroupDocument::from_json(exact)?.to_hypergroup()?;
    println!("{} haar {:?}", z.name(), z.haar());
    Ok(())
}
