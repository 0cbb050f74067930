//! Word length against Lipschitz and PL displacement for small group balls.

use outerspace::graphs::uniform_rose;
use outerspace::paths::orbit_qi_test;
use outerspace::plgraph::PLConfig;
use outerspace::words::Automorphism;

fn main() -> outerspace::Result<()> {
    let g = uniform_rose(3)?;
    for images in ["b,c,ab", "a,ab,ac"] {
        let report = orbit_qi_test(&[Automorphism::parse(images)?], 4, &g, 200, &PLConfig::default())?;
        println!("<{images}>: {} elements  K_X {:.3}  K_PL {:.3}", report.elements, report.k_x, report.k_pl);
        for r in &report.rows {
            println!("  {:<14} n={} d_X={:.4} d_PL={:?}", r.word, r.word_length, r.d_x, r.d_pl);
        }
    }
    Ok(())
}
