//! Regression fixtures: values computed directly on first verified run and frozen.

use outerspace::graphs::{pinch_loop, rose, uniform_rose};
use outerspace::metric::{candidates, max_stretch, SamplerConfig};
use outerspace::num::rat;
use outerspace::paths::{
    contraction_test, cp_project, min_length_times, nondegeneracy_check, orbit_path, projections_agree_check,
    right_minimization_check, shrink_loop_path, stretch_loop_path, SampledPath,
};
use outerspace::words::{Automorphism, CyclicWord};

fn cw(s: &str) -> CyclicWord {
    CyclicWord::parse(s).unwrap()
}

fn axis(k_max: usize) -> SampledPath {
    orbit_path(&Automorphism::parse("b,c,ab").unwrap(), &uniform_rose(3).unwrap(), k_max).unwrap()
}

fn stretch() -> SampledPath {
    let g = rose(vec![rat(1, 10), rat(9, 20), rat(9, 20)]).unwrap();
    stretch_loop_path(&g, &cw("a"), 2.0, 20).unwrap()
}

#[test]
fn axis_displacement_ratios() {
    let path = axis(12);
    let c0 = candidates(path.graph(0));
    let ratios: Vec<String> = (1..=12).map(|k| max_stretch(&c0, path.graph(k)).unwrap().0.to_string()).collect();
    assert_eq!(ratios, ["2", "2", "3", "4", "5", "7", "9", "12", "16", "21", "28", "37"]);
}

#[test]
fn axis_minimizers() {
    let path = axis(12);
    let expected = [("a", "1/3", vec![0, 1, 2]), ("ab", "2/3", vec![0, 1]), ("abc", "1", vec![0]), ("aB", "2/3", vec![0, 1])];
    for (s, m, idx) in expected {
        let r = min_length_times(&cw(s), &path).unwrap();
        assert_eq!(r.m_alpha_exact, m, "{s}");
        assert_eq!(r.indices, idx, "{s}");
    }
}

#[test]
fn pinch_projections_on_stretch_path() {
    let path = stretch();
    let expected = [
        (5, "b", rat(9, 10), 6),
        (5, "b", rat(1, 2), 12),
        (10, "b", rat(9, 10), 11),
        (10, "b", rat(1, 2), 15),
        (14, "c", rat(9, 10), 15),
        (14, "c", rat(1, 2), 18),
    ];
    for (t, s, sigma, index) in expected {
        let h = pinch_loop(path.graph(t), &cw(s), &sigma).unwrap();
        assert_eq!(cp_project(&h, &path).unwrap().indices, vec![index], "t {t} {s} {sigma}");
    }
}

#[test]
fn axis_contraction_constant() {
    let report = contraction_test(&axis(12), &SamplerConfig::new(3, 0.05), 200, 7).unwrap();
    assert!((report.empirical_d - 4f64.ln()).abs() < 1e-12, "{}", report.empirical_d);
    assert!(report.records.iter().all(|r| r.bound <= r.d_h_path));
}

#[test]
fn axis_projections_agree() {
    let report = projections_agree_check(&axis(12), &SamplerConfig::new(3, 0.05), 100, 11).unwrap();
    assert_eq!((report.evaluated, report.missing_alpha), (70, 0));
    assert!((report.max_diam - 4f64.ln()).abs() < 1e-12);
}

#[test]
fn axis_is_nondegenerate_for_small_d() {
    let r = nondegeneracy_check(&axis(12), 0.001, 260.0).unwrap();
    assert!(r.holds);
    assert_eq!(r.witness.map(|w| (w.0, w.1)), Some((0, 12)));
    assert!((r.max_backward - 4.859812404361672).abs() < 1e-12);
    let short = stretch().slice(0, 2).unwrap();
    assert!(!nondegeneracy_check(&short, 1.0, 260.0).unwrap().holds);
}

#[test]
fn shrinking_loop_is_minimized_to_the_right() {
    let g = rose(vec![rat(1, 10), rat(9, 20), rat(9, 20)]).unwrap();
    let path = shrink_loop_path(&g, &cw("b"), 0.5, 10).unwrap();
    assert_eq!(min_length_times(&cw("b"), &path).unwrap().indices, vec![9]);
    let r = right_minimization_check(&path, 0.1, &path.point(0).candidates.classes()).unwrap();
    assert_eq!((r.hypotheses, r.violations), (120, 0));
}
