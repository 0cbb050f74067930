//! Export a ball of the primitive loop complex as an edge list.

use outerspace::plgraph::{PLBall, PLConfig};
use outerspace::words::CyclicWord;

fn main() -> outerspace::Result<()> {
    let ball = PLBall::build(&CyclicWord::parse("a")?, 3, 1, &PLConfig::default())?;
    let text = ball.to_edge_list();
    for line in text.lines().take(12) {
        println!("{line}");
    }
    println!("... {} edges total", ball.edges.len());
    Ok(())
}
