//! The asymmetric Lipschitz metric computed from candidate loops, its
//! symmetrizations, a random sampler for the thick part, and the empirical
//! symmetrization constant.

mod candidates;
mod distance;
mod sampler;

pub use candidates::{candidates, Candidate, CandidateSet, CandidateShape};
pub use distance::{diam_pair, lip_distance, lip_distance_from, max_stretch, sym_distance, Point};
pub use sampler::{
    cell_rng, dirichlet_lengths, estimate_sym_constant, random_shape, random_twist, sample_class, sample_graph,
    sample_graphs, SamplerConfig, SymConstantEstimate,
};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{rose, theta, uniform_rose};
    use crate::num::rat;
    use crate::words::{is_primitive, CyclicWord};

    #[test]
    fn rose_has_nine_candidates() {
        let g = uniform_rose(3).unwrap();
        let c = candidates(&g);
        assert_eq!(c.len(), 9);
        assert!(c.classes().contains(&CyclicWord::parse("aB").unwrap()));
        assert!(c.iter().all(|x| is_primitive(&x.class) && x.length <= rat(2, 1)));
    }

    #[test]
    fn rose_pair_distances() {
        let g = uniform_rose(3).unwrap();
        let h = rose(vec![rat(1, 2), rat(1, 4), rat(1, 4)]).unwrap();
        assert!((lip_distance(&g, &h).unwrap() - 1.5f64.ln()).abs() < 1e-12);
        assert!((lip_distance(&h, &g).unwrap() - (4.0f64 / 3.0).ln()).abs() < 1e-12);
        assert!((sym_distance(&g, &h).unwrap() - 2f64.ln()).abs() < 1e-12);
        assert_eq!(lip_distance(&g, &g).unwrap(), 0.0);
    }

    #[test]
    fn theta_candidates_are_primitive() {
        let g = theta(vec![rat(1, 4); 4]).unwrap();
        let c = candidates(&g);
        assert!(c.iter().all(|x| is_primitive(&x.class)));
    }

    #[test]
    fn sym_constant_needs_samples() {
        assert!(matches!(estimate_sym_constant(3, 0.05, 0, 1), Err(crate::Error::InsufficientSamples(_))));
        let est = estimate_sym_constant(3, 0.05, 10, 7).unwrap();
        assert!(est.estimate >= 1.0);
    }
}
