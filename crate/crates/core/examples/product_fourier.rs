//! Apply the Fourier matrix of Z2(½)^⊗k densely and factor by factor.

use hypergroup::cli::bench::run_bench;

fn main() -> hypergroup::Result<()> {
    let report = run_bench(0.5, 10, 0)?;
    println!("{:>3} {:>6} {:>14} {:>14}", "k", "dim", "dense ns", "factorized ns");
    for r in &report.rows {
        println!("{:>3} {:>6} {:>14.0} {:>14.0}", r.k, r.dim, r.dense_ns, r.factorized_ns);
    }
    println!("crossover: {:?}", report.crossover);
    Ok(())
}
