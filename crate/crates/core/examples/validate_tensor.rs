//! Build a structure tensor by hand, validate it, and inspect a rejected one.

use hypergroup::hypergroup::{validate, StructureTensor};
use hypergroup::Error;

fn main() -> hypergroup::Result<()> {
    let theta = 0.25;
    // Z2(θ): δ₁ * δ₁ = θ δ₀ + (1 − θ) δ₁
    let data = vec![1.0, 0.0, 0.0, 1.0, 0.0, 1.0, theta, 1.0 - theta];
    let k = validate("Z2(1/4)", StructureTensor::new(2, data)?, vec![0, 1])?;
    println!("{}: haar = {:?}, total mass = {}", k.name(), k.haar(), k.total_mass());
    println!("hermitian: {}, group: {}", k.is_hermitian(), k.is_group());

    let bad = vec![1.0, 0.0, 0.0, 1.0, 0.0, 1.0, 0.5, 0.4];
    match validate("broken", StructureTensor::new(2, bad)?, vec![0, 1]) {
        Err(Error::AxiomViolation(report)) => println!("rejected: {report}"),
        other => println!("unexpected: {other:?}"),
    }
    Ok(())
}
