//! Lipschitz distances between two roses, both directions, and the witness class.

use outerspace::graphs::{rose, uniform_rose};
use outerspace::metric::{candidates, max_stretch, sym_distance};
use outerspace::num::{ln_rational, rat};

fn main() -> outerspace::Result<()> {
    let g = uniform_rose(3)?;
    let h = rose(vec![rat(1, 2), rat(1, 4), rat(1, 4)])?;
    for (name, a, b) in [("d(G,H)", &g, &h), ("d(H,G)", &h, &g)] {
        let (ratio, witness) = max_stretch(&candidates(a), b)?;
        println!("{name} = log({ratio}) = {:.6}  witness {witness}", ln_rational(&ratio));
    }
    println!("symmetric = {:.6}", sym_distance(&g, &h)?);
    Ok(())
}
