use super::*;
use crate::num::rat;
use crate::words::{Automorphism, CyclicWord};

fn cw(s: &str) -> CyclicWord {
    CyclicWord::parse(s).unwrap()
}

fn rose_532() -> MarkedMetricGraph {
    rose(vec![rat(1, 2), rat(3, 10), rat(1, 5)]).unwrap()
}

#[test]
fn loop_lengths_on_rose() {
    let g = rose_532();
    assert_eq!(loop_length(&cw("ab"), &g).unwrap(), rat(4, 5));
    assert_eq!(loop_length(&cw("abA"), &g).unwrap(), rat(3, 10));
    assert_eq!(loop_length(&cw("aab"), &g).unwrap(), rat(13, 10));
}

#[test]
fn immerse_tightens() {
    let g = uniform_rose(3).unwrap();
    assert_eq!(immerse(&cw("a"), &g).unwrap().edges(), &[DirEdge::forward(0)]);
    assert_eq!(immerse(&cw("abA"), &g).unwrap().edges(), &[DirEdge::forward(1)]);
}

#[test]
fn systole_of_roses() {
    assert_eq!(systole(&uniform_rose(3).unwrap()), rat(1, 3));
    assert_eq!(systole(&rose_532()), rat(1, 5));
}

#[test]
fn validate_reports_bad_marking_and_core() {
    let g = uniform_rose(3).unwrap();
    assert!(g.validate().is_empty());
    let mut parts = g.to_parts();
    parts.marking[0] = vec![DirEdge::forward(0), DirEdge::forward(0)];
    let (violations, _) = parts.check();
    assert!(violations.iter().any(|v| v.kind == ViolationKind::Marking));

    let mut parts = g.to_parts();
    parts.vertices.push("v1".into());
    parts.edges.push(Edge { id: "e4".into(), from: 0, to: 1, length: rat(0, 1) });
    let (violations, _) = parts.check();
    assert!(violations.iter().any(|v| v.kind == ViolationKind::Core));
}

#[test]
fn action_length_law() {
    let g = rose_532();
    let phi = Automorphism::parse("ab,b,c").unwrap();
    let h = act(&phi, &g).unwrap();
    assert_eq!(loop_length(&cw("a"), &h).unwrap(), rat(4, 5));
    assert_eq!(systole(&h), systole(&g));
    assert!(h.validate().is_empty());
    let rebuilt = MarkedMetricGraph::new(h.to_parts()).unwrap();
    assert_eq!(rebuilt, h);
    assert_eq!(act(&Automorphism::identity(3), &g).unwrap(), g);
}

#[test]
fn pinch_examples() {
    let g = uniform_rose(3).unwrap();
    let h = pinch_loop(&g, &cw("a"), &rat(1, 2)).unwrap();
    assert_eq!(h.lengths(), vec![rat(1, 6), rat(5, 12), rat(5, 12)]);
    assert_eq!(pinch_loop(&g, &cw("a"), &rat(1, 1)).unwrap(), g);
    assert!(matches!(pinch_loop(&g, &cw("aab"), &rat(1, 2)), Err(crate::Error::NotEmbedded(_))));
}

#[test]
fn families_are_valid() {
    let l4 = vec![rat(1, 4); 4];
    for g in [
        theta(l4.clone()).unwrap(),
        theta_plus_loop(l4.clone()).unwrap(),
        subdivided_rose(l4.clone()).unwrap(),
        barbell(l4).unwrap(),
    ] {
        assert!(g.validate().is_empty(), "{:?}", g.label());
        assert_eq!(g.rank(), 3);
    }
    let r = two_petal_family(3, &rat(1, 2), &rat(1, 4)).unwrap();
    assert_eq!(loop_length(&cw("a"), &r).unwrap(), rat(1, 8));
    let r = one_petal_family(4, &rat(1, 4)).unwrap();
    assert_eq!(r.lengths()[1], rat(1, 4));
}

#[test]
fn rose_requires_unit_volume() {
    assert!(rose(vec![rat(1, 2); 3]).is_err());
}

#[test]
fn json_round_trip() {
    let g = theta(vec![rat(1, 10), rat(2, 10), rat(3, 10), rat(4, 10)]).unwrap();
    let text = graph_to_json(&g);
    let back = graph_from_json(&text).unwrap();
    assert_eq!(back, g);
    assert_eq!(graph_to_json(&back), text);
}

#[test]
fn json_errors_name_the_field() {
    let text = graph_to_json(&uniform_rose(3).unwrap()).replace("\"1/3\"", "\"x\"");
    match graph_from_json(&text) {
        Err(crate::Error::GraphFormat { field, .. }) => assert_eq!(field, "edges[0].length"),
        other => panic!("unexpected {other:?}"),
    }
}
