//! Library results checked against the independent oracles in `common`.

mod common;

use std::collections::BTreeSet;

use common::*;
use outerspace::graphs::{barbell, loop_length, subdivided_rose, systole, theta, theta_plus_loop, uniform_rose, rose};
use outerspace::metric::{candidates, CandidateShape};
use outerspace::num::rat;
use outerspace::words::{is_primitive, whitehead_moves, CyclicWord, Word};

fn raw(w: &Word) -> RawWord {
    w.letters().iter().map(|l| if l.is_inverse() { -(l.gen() as i32 + 1) } else { l.gen() as i32 + 1 }).collect()
}

#[test]
fn whitehead_moves_match_enumeration() {
    for rank in [3, 4] {
        let lib: BTreeSet<Vec<RawWord>> =
            whitehead_moves(rank).unwrap().iter().map(|m| m.images().iter().map(raw).collect()).collect();
        let oracle = whitehead_images(rank);
        assert_eq!(lib.len(), whitehead_moves(rank).unwrap().len(), "duplicate moves in rank {rank}");
        assert_eq!(lib, oracle, "rank {rank}");
    }
    assert_eq!(whitehead_images(3).len(), 137);
}

#[test]
fn primitivity_matches_nielsen_closure_up_to_length_four() {
    let closure = primitive_closure(3, 4, 8);
    let mut primitive = 0;
    for w in all_classes(3, 4) {
        let expected = closure.contains(&w);
        primitive += expected as usize;
        assert_eq!(is_primitive(&to_class(&w)), expected, "{}", to_string(&w));
    }
    assert!(primitive > 3);
}

#[test]
fn class_canonicalization_matches_oracle() {
    for w in all_classes(3, 5) {
        let s = to_string(&w);
        let rotated: RawWord = w[1..].iter().chain(&w[..1]).copied().collect();
        assert_eq!(to_class(&rotated), CyclicWord::parse(&s).unwrap());
        assert_eq!(to_class(&invert(&w)), CyclicWord::parse(&s).unwrap());
    }
}

fn oracle_graphs() -> Vec<outerspace::graphs::MarkedMetricGraph> {
    let q = rat(1, 4);
    vec![
        uniform_rose(3).unwrap(),
        rose(vec![rat(1, 2), rat(3, 10), rat(1, 5)]).unwrap(),
        theta(vec![q.clone(), q.clone(), q.clone(), q]).unwrap(),
        theta(vec![rat(1, 10), rat(2, 10), rat(3, 10), rat(4, 10)]).unwrap(),
        subdivided_rose(vec![rat(1, 5), rat(1, 5), rat(1, 5), rat(2, 5)]).unwrap(),
        barbell(vec![rat(1, 5), rat(1, 5), rat(1, 5), rat(1, 5), rat(1, 5)]).unwrap(),
        theta_plus_loop(vec![rat(1, 5), rat(1, 5), rat(1, 5), rat(1, 5), rat(1, 5)]).unwrap(),
    ]
}

#[test]
fn candidates_match_brute_force() {
    for g in oracle_graphs() {
        let lib: BTreeSet<(OracleShape, CyclicWord, num_rational::BigRational)> = candidates(&g)
            .iter()
            .map(|c| {
                let s = match c.shape {
                    CandidateShape::EmbeddedCircle => OracleShape::Circle,
                    CandidateShape::FigureEight => OracleShape::FigureEight,
                    CandidateShape::Barbell => OracleShape::Barbell,
                };
                (s, c.class.clone(), c.length.clone())
            })
            .collect();
        assert_eq!(lib, brute_candidates(&g), "{:?}", g.label());
        assert_eq!(lib.len(), candidates(&g).len());
        assert!(lib.iter().all(|c| c.2 <= rat(2, 1)));
    }
}

#[test]
fn systole_matches_brute_force() {
    for g in oracle_graphs() {
        assert_eq!(systole(&g), brute_systole(&g), "{:?}", g.label());
    }
}

#[test]
fn loop_length_matches_naive_cancellation() {
    for g in oracle_graphs() {
        for w in all_classes(3, 4) {
            assert_eq!(loop_length(&to_class(&w), &g).unwrap(), naive_length(&g, &w), "{}", to_string(&w));
        }
    }
}
