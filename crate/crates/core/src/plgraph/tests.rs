use super::*;
use crate::graphs::uniform_rose;

fn cw(s: &str) -> CyclicWord {
    CyclicWord::parse(s).unwrap()
}

#[test]
fn projection_of_uniform_rose() {
    let g = uniform_rose(3).unwrap();
    let p = pl_projection(&g, PLConfig::default().path_cap);
    assert!(!p.truncated);
    for s in ["a", "b", "c", "ab"] {
        assert!(p.classes.contains(&cw(s)), "{s}");
    }
    assert!(!p.classes.contains(&cw("aabb")));
}

#[test]
fn neighbors_of_a() {
    let n1 = pl_neighbors(&cw("a"), 3, 1).unwrap();
    assert_eq!(n1, vec![cw("b"), cw("c")]);
    let n2 = pl_neighbors(&cw("a"), 3, 2).unwrap();
    assert!(n2.contains(&cw("ab")) && n2.contains(&cw("bc")));
    assert!(!n2.contains(&cw("a")));
    assert!(matches!(pl_neighbors(&cw("aa"), 3, 2), Err(Error::NotPrimitive(_))));
}

#[test]
fn small_distances() {
    assert_eq!(pl_distance_ub(&cw("a"), &cw("a"), 3, 4, 2).unwrap(), PlDistance::Bound(0));
    assert_eq!(pl_distance_ub(&cw("a"), &cw("b"), 3, 4, 2).unwrap(), PlDistance::Bound(1));
    assert_eq!(pl_distance_ub(&cw("ab"), &cw("aB"), 3, 4, 2).unwrap(), PlDistance::Bound(2));
}

#[test]
fn uniform_rose_self_distance_is_two() {
    let g = uniform_rose(3).unwrap();
    let cfg = PLConfig::default();
    let ex = PlExplorer::new(3, cfg.word_cap);
    let d = d_pl(&g, &g, &cfg, &ex).unwrap();
    assert_eq!(d.value, Some(2));
}

#[test]
fn ball_edges_are_joint() {
    let cfg = PLConfig::default();
    let ball = PLBall::build(&cw("a"), 3, 1, &cfg).unwrap();
    assert!(ball.edges.iter().all(|(u, v)| joint_basis(u, v).unwrap()));
    assert!(ball.vertices.iter().all(|(v, d)| is_primitive(v) && *d <= 1));
    assert!(ball.to_edge_list().starts_with("# center a radius 1"));
}
