use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::Exp1;
use rayon::prelude::*;
use serde::Serialize;

use super::distance::{lip_distance, sym_distance};
use crate::error::{Error, Result};
use crate::graphs::{act, rose, subdivided_rose, systole, theta, MarkedMetricGraph};
use crate::num::approx_rational;
use crate::words::{check_rank, cyclic_reduce, whitehead_moves, Automorphism, CyclicWord, Letter, Word};

/// Deterministic generator for cell `index` of a run seeded by `seed`.
pub fn cell_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// Random points of Outer space: Dirichlet lengths on a uniformly chosen shape
/// (rose, theta, subdivided rose), marking twisted by up to `max_twist` random
/// Whitehead automorphisms, rejected until the systole is at least `eps`.
#[derive(Clone, Debug, Serialize)]
pub struct SamplerConfig {
    pub rank: usize,
    pub eps: f64,
    pub max_twist: usize,
    pub max_attempts: usize,
}

impl SamplerConfig {
    pub fn new(rank: usize, eps: f64) -> Self {
        SamplerConfig { rank, eps, max_twist: 8, max_attempts: 10_000 }
    }

    pub fn with_twist(mut self, max_twist: usize) -> Self {
        self.max_twist = max_twist;
        self
    }
}

/// Dirichlet(1, …, 1) weights quantized to exact rationals with denominator near 10⁴.
pub fn dirichlet_lengths<R: Rng>(n: usize, rng: &mut R) -> Vec<BigRational> {
    let weights: Vec<i64> = (0..n)
        .map(|_| {
            let x: f64 = rng.sample(Exp1);
            ((x * 2000.0).round() as i64).max(1)
        })
        .collect();
    let total: i64 = weights.iter().sum();
    weights.iter().map(|&w| BigRational::new(BigInt::from(w), BigInt::from(total))).collect()
}

/// A random product of at most `max_len` Whitehead automorphisms.
pub fn random_twist<R: Rng>(rank: usize, max_len: usize, rng: &mut R) -> Result<Automorphism> {
    let moves = whitehead_moves(rank)?;
    let k = rng.random_range(0..=max_len);
    let mut phi = Automorphism::identity(rank);
    for _ in 0..k {
        phi = phi.compose(&moves[rng.random_range(0..moves.len())]);
    }
    Ok(phi)
}

/// A random graph shape with Dirichlet lengths and the standard marking.
pub fn random_shape<R: Rng>(rank: usize, rng: &mut R) -> Result<MarkedMetricGraph> {
    match rng.random_range(0..3) {
        0 => rose(dirichlet_lengths(rank, rng)),
        1 => theta(dirichlet_lengths(rank + 1, rng)),
        _ => subdivided_rose(dirichlet_lengths(rank + 1, rng)),
    }
}

pub fn sample_graph<R: Rng>(cfg: &SamplerConfig, rng: &mut R) -> Result<MarkedMetricGraph> {
    check_rank(cfg.rank)?;
    let eps = approx_rational(cfg.eps, 9);
    for _ in 0..cfg.max_attempts {
        let shape = random_shape(cfg.rank, rng)?;
        if systole(&shape) < eps {
            continue;
        }
        let phi = random_twist(cfg.rank, cfg.max_twist, rng)?;
        return act(&phi, &shape);
    }
    Err(Error::Sampler(format!(
        "no graph with systole >= {} in {} attempts (rank {})",
        cfg.eps, cfg.max_attempts, cfg.rank
    )))
}

/// `n` sampled graphs; graph `i` depends only on `(seed, i)`.
pub fn sample_graphs(cfg: &SamplerConfig, n: usize, seed: u64) -> Result<Vec<MarkedMetricGraph>> {
    (0..n)
        .into_par_iter()
        .map(|i| sample_graph(cfg, &mut cell_rng(seed, i as u64)))
        .collect()
}

/// A random nontrivial class of cyclic length between 1 and `max_len`.
pub fn sample_class<R: Rng>(rank: usize, max_len: usize, rng: &mut R) -> CyclicWord {
    loop {
        let n = rng.random_range(1..=max_len);
        let letters: Vec<Letter> =
            (0..n).map(|_| Letter::new(rng.random_range(0..rank), rng.random_bool(0.5))).collect();
        if let Ok(c) = cyclic_reduce(&Word::from_letters(letters)) {
            return c;
        }
    }
}

/// Empirical lower estimate of the symmetrization constant on the thick part.
#[derive(Clone, Debug, Serialize)]
pub struct SymConstantEstimate {
    pub eps: f64,
    pub samples: usize,
    pub estimate: f64,
}

/// Max of `sym_distance / lip_distance` over `n` random pairs in `X_eps`.
pub fn estimate_sym_constant(rank: usize, eps: f64, n: usize, seed: u64) -> Result<SymConstantEstimate> {
    check_rank(rank)?;
    if n == 0 {
        return Err(Error::InsufficientSamples("no samples requested".into()));
    }
    if !(eps > 0.0 && eps <= 1.0 / rank as f64) {
        return Err(Error::Domain(format!("eps {eps} outside (0, 1/{rank}]")));
    }
    let cfg = SamplerConfig::new(rank, eps);
    let graphs = sample_graphs(&cfg, 2 * n, seed)?;
    let ratios: Vec<f64> = graphs
        .par_chunks(2)
        .map(|pair| -> Result<f64> {
            let d = lip_distance(&pair[0], &pair[1])?;
            if d <= 0.0 {
                return Ok(1.0);
            }
            Ok(sym_distance(&pair[0], &pair[1])? / d)
        })
        .collect::<Result<_>>()?;
    let estimate = ratios.into_iter().fold(1.0, f64::max);
    Ok(SymConstantEstimate { eps, samples: n, estimate })
}
