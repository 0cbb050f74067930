//! Empirical contraction constant D along an axis and along a stretch geodesic.

use outerspace::graphs::{rose, uniform_rose};
use outerspace::metric::SamplerConfig;
use outerspace::num::rat;
use outerspace::paths::{contraction_test, contraction_trend, orbit_path, stretch_loop_path};
use outerspace::words::{Automorphism, CyclicWord};

fn main() -> outerspace::Result<()> {
    let sampler = SamplerConfig::new(3, 0.05);
    let axis = orbit_path(&Automorphism::parse("b,c,ab")?, &uniform_rose(3)?, 12)?;
    let report = contraction_test(&axis, &sampler, 200, 7)?;
    println!("axis: empirical D = {:.6} over {} pairs", report.empirical_d, report.pairs);
    for r in report.records.iter().take(5) {
        println!("  {:?} {} bound {:.3} <= d(H,path) {:.3}  diam {:.3}", r.construction, r.cycle, r.bound, r.d_h_path, r.diam);
    }
    let g = rose(vec![rat(1, 10), rat(9, 20), rat(9, 20)])?;
    let stretch = stretch_loop_path(&g, &CyclicWord::parse("a")?, 2.0, 20)?;
    for row in contraction_trend(&stretch, &sampler, &[0, 2, 4, 8], 50, 3)? {
        println!("stretch: twist <= {}  D = {:.6}", row.max_twist, row.empirical_d);
    }
    Ok(())
}
