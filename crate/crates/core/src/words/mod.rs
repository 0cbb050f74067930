//! Free-group combinatorics: reduced and cyclic words, automorphisms,
//! Whitehead moves, primitivity and basis tests.
//!
//! Words are written over `a..z` with capitals for inverses, so `"abA"` is
//! `a·b·a⁻¹`.

mod auto;
mod stallings;
mod whitehead;
mod word;

pub use auto::{apply_auto, Automorphism};
pub(crate) use auto::check_rank;
pub use stallings::is_basis;
pub use whitehead::{
    is_primitive, joint_basis, minimize, multiplier_moves, primitive_frame, reduce_tuple, whitehead_moves,
    Reduction, WhiteheadMove,
};
pub use word::{cyclic_reduce, free_reduce, CyclicWord, Letter, Word, MAX_RANK};
