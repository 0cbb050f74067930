//! Primitivity, joint primitivity, and Whitehead minimization of conjugacy classes.

use outerspace::words::{is_primitive, joint_basis, minimize, primitive_frame, CyclicWord};

fn main() -> outerspace::Result<()> {
    for s in ["a", "ab", "aab", "abAB", "abcAb", "aaBcc"] {
        let w = CyclicWord::parse(s)?;
        println!("{s:>8}  primitive {:<5}  minimized {}", is_primitive(&w), minimize(&w));
    }
    let (a, b) = (CyclicWord::parse("ab")?, CyclicWord::parse("c")?);
    println!("ab, c jointly primitive: {}", joint_basis(&a, &b)?);
    let psi = primitive_frame(3, &CyclicWord::parse("abcAb")?)?;
    println!("frame for abcAb: {psi}");
    Ok(())
}
