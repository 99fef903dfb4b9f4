//! The unitary Fourier matrix, and the forward/inverse transform of a function.

use hypergroup::constructions::order3_nonhermitian;
use hypergroup::duality::{character_table, fourier_matrix, fourier_of_function, inverse_fourier};
use num_complex::Complex64;

fn main() -> hypergroup::Result<()> {
    let k = order3_nonhermitian(0.5)?;
    let t = character_table(&k)?;
    let f = fourier_matrix(&k, &t)?;
    println!("F =\n{:.4}", f.matrix());
    println!("max |FF† − I| = {:.2e}", f.unitarity_residual());

    let g = vec![Complex64::new(1.0, 0.0), Complex64::new(0.0, 2.0), Complex64::new(-1.0, 0.5)];
    let gh = fourier_of_function(&k, &t, &g);
    let back = inverse_fourier(&t, &gh);
    let l2: f64 = g.iter().zip(k.haar()).map(|(v, w)| v.norm_sqr() * w).sum();
    let l2_hat: f64 = gh.iter().zip(t.plancherel()).map(|(v, p)| v.norm_sqr() * p).sum();
    println!("‖g‖² = {l2:.6}, ‖ĝ‖² = {l2_hat:.6}");
    println!("round trip error = {:.2e}", back.iter().zip(&g).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max));
    Ok(())
}
