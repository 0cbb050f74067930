//! Growth of d(G_0, G_k) along the orbit of a fully irreducible automorphism.

use outerspace::graphs::uniform_rose;
use outerspace::paths::orbit_path;
use outerspace::words::Automorphism;

fn main() -> outerspace::Result<()> {
    let phi = Automorphism::parse("b,c,ab")?;
    let path = orbit_path(&phi, &uniform_rose(3)?, 30)?;
    // Real root of x^3 = x + 1 by bisection.
    let (mut lo, mut hi) = (1.0f64, 2.0f64);
    for _ in 0..200 {
        let mid = (lo + hi) / 2.0;
        if mid * mid * mid - mid - 1.0 > 0.0 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    println!("log lambda = {:.6}", lo.ln());
    for k in [1, 5, 10, 20, 30] {
        let d = path.dist(0, k)?;
        println!("k = {k:>2}  d(G0,Gk) = {d:.6}  d/k = {:.6}", d / k as f64);
    }
    Ok(())
}
