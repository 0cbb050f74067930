use std::sync::OnceLock;

use num_rational::BigRational;
use num_traits::One;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graphs::{act_with_inverse, immerse, rescale_loop, MarkedMetricGraph};
use crate::metric::Point;
use crate::num::{approx_rational, ln_rational};
use crate::words::{Automorphism, CyclicWord};

/// A compact directed path sampled at strictly increasing times.
#[derive(Clone, Debug)]
pub struct SampledPath {
    label: String,
    times: Vec<f64>,
    points: Vec<Point>,
    /// Set for orbit paths, where `d(γ_i, γ_j)` depends only on `j − i`.
    shift_invariant: bool,
    dists: OnceLock<Vec<Vec<f64>>>,
}

impl SampledPath {
    pub fn new(label: impl Into<String>, samples: Vec<(f64, MarkedMetricGraph)>) -> Result<Self> {
        if samples.is_empty() {
            return Err(Error::InvalidPath("no samples".into()));
        }
        let rank = samples[0].1.rank();
        for (i, (t, g)) in samples.iter().enumerate() {
            if !t.is_finite() {
                return Err(Error::InvalidPath(format!("time {i} is not finite")));
            }
            if i > 0 && *t <= samples[i - 1].0 {
                return Err(Error::InvalidPath(format!("times not strictly increasing at sample {i}")));
            }
            if g.rank() != rank {
                return Err(Error::RankMismatch(rank, g.rank()));
            }
        }
        let times = samples.iter().map(|s| s.0).collect();
        let points = samples.into_par_iter().map(|(_, g)| Point::new(g)).collect();
        Ok(SampledPath { label: label.into(), times, points, shift_invariant: false, dists: OnceLock::new() })
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn len(&self) -> usize {
        self.times.len()
    }

    pub fn is_empty(&self) -> bool {
        self.times.is_empty()
    }

    pub fn rank(&self) -> usize {
        self.points[0].graph.rank()
    }

    pub fn times(&self) -> &[f64] {
        &self.times
    }

    pub fn time(&self, i: usize) -> f64 {
        self.times[i]
    }

    pub fn graph(&self, i: usize) -> &MarkedMetricGraph {
        &self.points[i].graph
    }

    pub fn point(&self, i: usize) -> &Point {
        &self.points[i]
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    /// Largest time step: the resolution of sampled projections.
    pub fn resolution(&self) -> f64 {
        self.times.windows(2).map(|w| w[1] - w[0]).fold(0.0, f64::max)
    }

    /// The sub-path on samples `from..to`.
    pub fn slice(&self, from: usize, to: usize) -> Result<SampledPath> {
        let samples = (from..to).map(|i| (self.times[i], self.graph(i).clone())).collect();
        let mut p = SampledPath::new(format!("{}[{from}..{to}]", self.label), samples)?;
        p.shift_invariant = self.shift_invariant;
        Ok(p)
    }

    /// Matrix of `d(γ_i, γ_j)`.
    pub fn distances(&self) -> Result<&Vec<Vec<f64>>> {
        if let Some(d) = self.dists.get() {
            return Ok(d);
        }
        let n = self.len();
        let matrix = if self.shift_invariant {
            let forward: Vec<f64> =
                (0..n).into_par_iter().map(|k| self.points[0].dist_to(&self.points[k])).collect::<Result<_>>()?;
            let backward: Vec<f64> =
                (0..n).into_par_iter().map(|k| self.points[k].dist_to(&self.points[0])).collect::<Result<_>>()?;
            (0..n)
                .map(|i| (0..n).map(|j| if j >= i { forward[j - i] } else { backward[i - j] }).collect())
                .collect()
        } else {
            (0..n)
                .into_par_iter()
                .map(|i| (0..n).map(|j| if i == j { Ok(0.0) } else { self.points[i].dist_to(&self.points[j]) }).collect())
                .collect::<Result<Vec<Vec<f64>>>>()?
        };
        Ok(self.dists.get_or_init(|| matrix))
    }

    pub fn dist(&self, i: usize, j: usize) -> Result<f64> {
        Ok(self.distances()?[i][j])
    }

    /// `max` over pairs in `indices` of the symmetric diameter `max{d(γ_i,γ_j), d(γ_j,γ_i)}`.
    pub fn set_diameter(&self, indices: &[usize]) -> Result<f64> {
        let d = self.distances()?;
        let mut best = 0.0f64;
        for &i in indices {
            for &j in indices {
                best = best.max(d[i][j]);
            }
        }
        Ok(best)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct GeodesicCertificate {
    pub tolerance: f64,
    pub max_deviation: f64,
    pub worst_pair: Option<(usize, usize)>,
    pub pairs_checked: usize,
    pub pass: bool,
}

/// Check `d(γ(s), γ(t)) = t − s` on every sampled pair `s < t`.
pub fn certify_geodesic(path: &SampledPath, tol: f64) -> Result<GeodesicCertificate> {
    let n = path.len();
    let d = path.distances()?;
    let mut max_deviation = 0.0f64;
    let mut worst_pair = None;
    let mut pairs_checked = 0;
    for i in 0..n {
        for j in i + 1..n {
            pairs_checked += 1;
            let dev = (d[i][j] - (path.time(j) - path.time(i))).abs();
            if dev > max_deviation {
                max_deviation = dev;
                worst_pair = Some((i, j));
            }
        }
    }
    Ok(GeodesicCertificate { tolerance: tol, max_deviation, worst_pair, pairs_checked, pass: max_deviation <= tol })
}

fn sample_times(total: f64, n: usize) -> Vec<f64> {
    if n <= 1 {
        return vec![0.0];
    }
    (0..n).map(|k| total * k as f64 / (n - 1) as f64).collect()
}

/// Rational factors `≈ e^{t_k}`, exactly 1 at `t = 0`, strictly increasing.
fn factors(total: f64, n: usize) -> Result<Vec<BigRational>> {
    let fs: Vec<BigRational> = sample_times(total, n)
        .into_iter()
        .map(|t| if t == 0.0 { BigRational::one() } else { approx_rational(t.exp(), 6) })
        .collect();
    if fs.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::Domain("time step too small for the factor resolution".into()));
    }
    Ok(fs)
}

fn check_total(total: f64, n: usize) -> Result<()> {
    if !(total > 0.0) || !total.is_finite() {
        return Err(Error::Domain(format!("path length {total} must be positive")));
    }
    if n == 0 {
        return Err(Error::Domain("need at least one sample".into()));
    }
    Ok(())
}

/// Directed geodesic stretching the embedded loop `alpha`.
///
/// Sample `k` scales the edges of `alpha` by a rational `λ_k ≈ e^{kT/(n−1)}`
/// and the remaining edges by `(1 − λ_kℓ)/(1 − ℓ)`; its time is exactly
/// `log λ_k`, so `ℓ(α | γ(t)) = e^t ℓ(α | G)` holds with rational lengths.
pub fn stretch_loop_path(g: &MarkedMetricGraph, alpha: &CyclicWord, total: f64, n: usize) -> Result<SampledPath> {
    check_total(total, n)?;
    let lp = immerse(alpha, g)?;
    if !lp.is_embedded(g) {
        return Err(Error::NotEmbedded(alpha.to_string()));
    }
    let l = lp.length(g);
    if ln_rational(&l) + total >= 0.0 {
        return Err(Error::Domain(format!("stretching {alpha} by e^{total} would exhaust the volume")));
    }
    let samples = factors(total, n)?
        .into_iter()
        .map(|f| Ok((ln_rational(&f), rescale_loop(g, &lp, &f)?)))
        .collect::<Result<Vec<_>>>()?;
    SampledPath::new(format!("stretch {alpha}"), samples)
}

/// Directed geodesic along which the embedded loop `alpha` shrinks.
///
/// The edges off `alpha` grow by a rational `ν_k ≈ e^{t_k}` and the loop
/// absorbs the volume change; times are `log ν_k`. This is a geodesic when some
/// loop avoids every edge of `alpha`.
pub fn shrink_loop_path(g: &MarkedMetricGraph, alpha: &CyclicWord, total: f64, n: usize) -> Result<SampledPath> {
    check_total(total, n)?;
    let lp = immerse(alpha, g)?;
    if !lp.is_embedded(g) {
        return Err(Error::NotEmbedded(alpha.to_string()));
    }
    let l = lp.length(g);
    let one = BigRational::one();
    let rest = &one - &l;
    if ln_rational(&rest) + total >= 0.0 {
        return Err(Error::Domain(format!("shrinking {alpha} over time {total} would collapse it")));
    }
    let samples = factors(total, n)?
        .into_iter()
        .map(|nu| {
            let mu = (&one - &nu * &rest) / &l;
            Ok((ln_rational(&nu), rescale_loop(g, &lp, &mu)?))
        })
        .collect::<Result<Vec<_>>>()?;
    SampledPath::new(format!("shrink {alpha}"), samples)
}

/// The orbit `G_k = G·φ^k`, `k = 0..=k_max`, at times `k·d(G_0, G_1)`.
pub fn orbit_path(phi: &Automorphism, g: &MarkedMetricGraph, k_max: usize) -> Result<SampledPath> {
    let phi_inv = phi.inverse();
    let mut graphs = vec![g.clone()];
    for _ in 0..k_max.max(1) {
        let next = act_with_inverse(phi, &phi_inv, graphs.last().unwrap())?;
        graphs.push(next);
    }
    let p0 = Point::new(g.clone());
    let p1 = Point::new(graphs[1].clone());
    let step = p0.dist_to(&p1)?;
    if step <= 0.0 {
        return Err(Error::ZeroStep);
    }
    graphs.truncate(k_max + 1);
    let samples = graphs.into_iter().enumerate().map(|(k, gk)| (k as f64 * step, gk)).collect();
    let mut path = SampledPath::new(format!("orbit {phi}"), samples)?;
    path.shift_invariant = true;
    Ok(path)
}
