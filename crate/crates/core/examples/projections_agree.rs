//! Short loops of far-away graphs project near the graphs themselves.

use outerspace::graphs::uniform_rose;
use outerspace::metric::SamplerConfig;
use outerspace::paths::{orbit_path, projections_agree_check};
use outerspace::words::Automorphism;

fn main() -> outerspace::Result<()> {
    let axis = orbit_path(&Automorphism::parse("b,c,ab")?, &uniform_rose(3)?, 12)?;
    let report = projections_agree_check(&axis, &SamplerConfig::new(3, 0.05), 100, 11)?;
    println!(
        "evaluated {} skipped {} missing alpha {}  max diam {:.4} mean {:.4}",
        report.evaluated, report.skipped, report.missing_alpha, report.max_diam, report.mean_diam
    );
    for r in report.records.iter().filter(|r| r.evaluated).take(5) {
        println!("  H{}: alpha {} length {}  rho {}  pi {}", r.sample, r.alpha, r.alpha_length, r.rho, r.pi);
    }
    Ok(())
}
