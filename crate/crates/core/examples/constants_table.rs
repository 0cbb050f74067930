//! The explicit constants for a given D and L, with an estimated symmetrization constant.

use outerspace::constants::{nondegeneracy_threshold, progress_constant, thickness_chain, transient_shortness_bound};
use outerspace::metric::estimate_sym_constant;

fn main() -> outerspace::Result<()> {
    let s = estimate_sym_constant(3, 0.1, 200, 1)?;
    println!("estimated s_eps at eps = 0.1: {:.4} (lower estimate from {} pairs)", s.estimate, s.samples);
    let (d, l) = (1.0, 260.0);
    let t = transient_shortness_bound(0.1, d, s.estimate, s.estimate)?;
    let rows = thickness_chain(d, l)?
        .rows()
        .into_iter()
        .chain(nondegeneracy_threshold(d, l, 0.1, s.estimate)?.rows())
        .chain(t.rows())
        .chain(progress_constant(d, t.value)?.rows());
    for r in rows {
        println!("{:<14} {:>14.6e}  {}", r.name, r.value, r.formula);
    }
    Ok(())
}
