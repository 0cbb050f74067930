//! d_PL progress along an axis compared with a polynomially growing orbit.

use outerspace::graphs::uniform_rose;
use outerspace::paths::{orbit_path, progress_test, PairMode};
use outerspace::plgraph::PLConfig;
use outerspace::words::Automorphism;

fn main() -> outerspace::Result<()> {
    let cfg = PLConfig { radius_cap: 6, ..PLConfig::default() };
    let g = uniform_rose(3)?;
    for images in ["b,c,ab", "a,ab,ac"] {
        let path = orbit_path(&Automorphism::parse(images)?, &g, 10)?;
        let report = progress_test(&path, &cfg, PairMode::FromStart)?;
        let ds: Vec<String> = report.from_start().iter().map(|d| d.map_or("-".into(), |v| v.to_string())).collect();
        println!("{images:>8}: d_PL(G0,Gk) = [{}]  K = {:.3}", ds.join(" "), report.k_fit);
    }
    Ok(())
}
