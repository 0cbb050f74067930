use super::*;
use crate::graphs::{loop_length, rose, uniform_rose};
use crate::num::rat;
use crate::plgraph::PLConfig;
use crate::words::{Automorphism, CyclicWord};
use crate::Error;

fn cw(s: &str) -> CyclicWord {
    CyclicWord::parse(s).unwrap()
}

fn stretch() -> SampledPath {
    let g = rose(vec![rat(1, 10), rat(1, 2), rat(2, 5)]).unwrap();
    stretch_loop_path(&g, &cw("a"), 2.0, 20).unwrap()
}

#[test]
fn stretch_path_is_certified_with_exact_law() {
    let p = stretch();
    let cert = certify_geodesic(&p, 1e-6).unwrap();
    assert!(cert.pass, "{cert:?}");
    let l0 = loop_length(&cw("a"), p.graph(0)).unwrap();
    for i in 0..p.len() {
        let l = loop_length(&cw("a"), p.graph(i)).unwrap();
        assert!((crate::num::ln_rational(&(l / &l0)) - p.time(i)).abs() < 1e-12);
        assert_eq!(p.graph(i).volume(), rat(1, 1));
    }
}

#[test]
fn stretch_domain_errors() {
    let g = uniform_rose(3).unwrap();
    assert!(matches!(stretch_loop_path(&g, &cw("a"), 2.0, 5), Err(Error::Domain(_))));
    assert!(matches!(stretch_loop_path(&g, &cw("aB"), 0.1, 5), Err(Error::NotEmbedded(_))));
}

#[test]
fn constant_and_single_point_paths() {
    let g = uniform_rose(3).unwrap();
    let constant = SampledPath::new("const", vec![(0.0, g.clone()), (1.0, g.clone())]).unwrap();
    let cert = certify_geodesic(&constant, 1e-6).unwrap();
    assert!(!cert.pass);
    assert!((cert.max_deviation - 1.0).abs() < 1e-12);
    let single = SampledPath::new("one", vec![(0.0, g.clone())]).unwrap();
    assert!(certify_geodesic(&single, 1e-6).unwrap().pass);
    assert!(SampledPath::new("bad", vec![(1.0, g.clone()), (1.0, g)]).is_err());
}

#[test]
fn identity_orbit_has_zero_step() {
    let g = uniform_rose(3).unwrap();
    assert!(matches!(orbit_path(&Automorphism::identity(3), &g, 3), Err(Error::ZeroStep)));
}

#[test]
fn projection_of_path_points_and_ties() {
    let p = stretch();
    for i in [0, 7, 19] {
        let r = cp_project(p.graph(i), &p).unwrap();
        assert_eq!(r.indices, vec![i]);
        assert_eq!(r.distance, 0.0);
    }
    let g = uniform_rose(3).unwrap();
    let constant = SampledPath::new("const", vec![(0.0, g.clone()), (1.0, g.clone())]).unwrap();
    assert_eq!(cp_project(&g, &constant).unwrap().indices, vec![0, 1]);
}

#[test]
fn witness_minimizer_is_start() {
    let p = stretch();
    let m = min_length_times(&cw("a"), &p).unwrap();
    assert_eq!(m.indices, vec![0]);
    assert_eq!(m.m_alpha_exact, "1/10");
}

#[test]
fn progress_needs_three_samples() {
    let p = stretch().slice(0, 2).unwrap();
    assert!(matches!(progress_test(&p, &PLConfig::default(), PairMode::FromStart), Err(Error::InsufficientSamples(_))));
}

#[test]
fn nondegeneracy_with_zero_d() {
    let p = stretch();
    let r = nondegeneracy_check(&p, 0.0, 260.0).unwrap();
    assert!(r.holds);
    let g = uniform_rose(3).unwrap();
    let constant = SampledPath::new("const", vec![(0.0, g.clone()), (1.0, g)]).unwrap();
    assert!(!nondegeneracy_check(&constant, 0.0, 260.0).unwrap().holds);
    assert!(!nondegeneracy_check(&p, 1.0, 260.0).unwrap().holds);
}

#[test]
fn right_minimization_vacuous_cases() {
    let p = stretch();
    let r = right_minimization_check(&p, 0.0, &[cw("a")]).unwrap();
    assert_eq!(r.hypotheses, 0);
    let r = right_minimization_check(&p, 1e6, &[cw("a"), cw("b"), cw("c")]).unwrap();
    assert_eq!(r.hypotheses, 0);
}

#[test]
fn orbit_ball_of_radius_zero() {
    let g = uniform_rose(3).unwrap();
    let phi = Automorphism::parse("b,c,ab").unwrap();
    let r = orbit_qi_test(&[phi], 0, &g, 100, &PLConfig::default()).unwrap();
    assert_eq!(r.elements, 1);
    assert_eq!(r.rows[0].d_x, 0.0);
}

#[test]
fn quasi_geodesic_fit() {
    assert_eq!(fit_quasi_geodesic(&[]), 1.0);
    assert_eq!(fit_quasi_geodesic(&[(1.0, 1.0), (2.0, 2.0)]), 1.0);
    let k = fit_quasi_geodesic(&[(100.0, 2.0)]);
    assert!((k * k + 2.0 * k - 100.0).abs() < 1e-9);
}
