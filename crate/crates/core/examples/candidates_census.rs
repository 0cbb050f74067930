//! Candidate loops of the rank-3 rose and theta graph, by shape.

use std::collections::BTreeMap;

use outerspace::graphs::{theta, uniform_rose};
use outerspace::metric::candidates;
use outerspace::num::rat;

fn main() -> outerspace::Result<()> {
    let q = rat(1, 4);
    for g in [uniform_rose(3)?, theta(vec![q.clone(), q.clone(), q.clone(), q])?] {
        let set = candidates(&g);
        let mut by_shape: BTreeMap<String, usize> = BTreeMap::new();
        for c in set.iter() {
            *by_shape.entry(c.shape.to_string()).or_default() += 1;
        }
        println!("{}: {} candidates {:?}", g.label().unwrap_or("graph"), set.len(), by_shape);
        for c in set.iter() {
            println!("  {:<16} {:<8} {}", c.shape, c.class, c.length);
        }
    }
    Ok(())
}
