//! A certified stretch geodesic with the exact witness length law.

use outerspace::graphs::{loop_length, rose};
use outerspace::num::{ln_rational, rat};
use outerspace::paths::{certify_geodesic, stretch_loop_path};
use outerspace::words::CyclicWord;

fn main() -> outerspace::Result<()> {
    let g = rose(vec![rat(1, 10), rat(9, 20), rat(9, 20)])?;
    let alpha = CyclicWord::parse("a")?;
    let path = stretch_loop_path(&g, &alpha, 2.0, 20)?;
    let l0 = loop_length(&alpha, path.graph(0))?;
    for i in (0..path.len()).step_by(4) {
        let l = loop_length(&alpha, path.graph(i))?;
        println!("t = {:.4}  l(a) = {l}  log(l/l0) - t = {:.1e}", path.time(i), ln_rational(&(&l / &l0)) - path.time(i));
    }
    let cert = certify_geodesic(&path, 1e-6)?;
    println!("certificate: pass {} max deviation {:.2e} over {} pairs", cert.pass, cert.max_deviation, cert.pairs_checked);
    Ok(())
}
