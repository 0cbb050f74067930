use std::collections::{BTreeMap, BTreeSet};

use num_rational::BigRational;
use num_traits::One;
use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::path::SampledPath;
use super::project::{lengths_along, project_point, ProjectionResult};
use crate::error::{Error, Result};
use crate::graphs::{act_with_inverse, embedded_cycles, rescale_loop, MarkedMetricGraph};
use crate::metric::{cell_rng, lip_distance_from, sample_graph, Point, SamplerConfig};
use crate::num::{approx_rational, ln_rational, rat, to_f64};
use crate::plgraph::{d_pl_classes, short_classes, PLConfig, PlExplorer};
use crate::words::{is_primitive, Automorphism, CyclicWord};

const ON_PATH_TOL: f64 = 1e-9;

fn join(indices: &[usize]) -> String {
    indices.iter().map(usize::to_string).collect::<Vec<_>>().join(";")
}

/// Rows as CSV with a header line.
pub fn to_csv<T: Serialize>(rows: &[T]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in rows {
        w.serialize(r).map_err(|e| Error::Io(e.to_string()))?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Io(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| Error::Io(e.to_string()))
}

/// Least `K ≥ 1` with `Δ/K − K ≤ d ≤ KΔ + K` on every `(Δ, d)` pair.
pub fn fit_quasi_geodesic(rows: &[(f64, f64)]) -> f64 {
    rows.iter().fold(1.0f64, |k, &(dt, d)| {
        let upper = d / (dt + 1.0);
        let lower = (-d + (d * d + 4.0 * dt).sqrt()) / 2.0;
        k.max(upper).max(lower)
    })
}

// ---------------------------------------------------------------- contraction

/// How `H′` was produced from `H`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Construction {
    Identity,
    Pinch,
    Stretch,
}

#[derive(Clone, Debug, Serialize)]
pub struct ContractionRecord {
    pub pair: usize,
    pub construction: Construction,
    pub cycle: String,
    /// Exact scale factor applied to the cycle.
    pub parameter: String,
    /// Certified upper bound on `d(H, H′)`.
    pub bound: f64,
    pub d_h_path: f64,
    pub proj_h: String,
    pub proj_h_prime: String,
    pub diam: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct ContractionReport {
    pub path: String,
    pub family: String,
    pub seed: u64,
    pub pairs: usize,
    /// Max over pairs of `diam(π(H) ∪ π(H′))`.
    pub empirical_d: f64,
    pub resolution: f64,
    #[serde(skip)]
    pub records: Vec<ContractionRecord>,
}

impl ContractionReport {
    pub fn to_csv(&self) -> Result<String> {
        to_csv(&self.records)
    }
}

/// `diam(π(H) ∪ π(H′))` with the two projections.
pub fn contraction_pair(
    path: &SampledPath,
    h: &MarkedMetricGraph,
    h_prime: &MarkedMetricGraph,
) -> Result<(ProjectionResult, ProjectionResult, f64)> {
    let p = project_point(&Point::new(h.clone()), path)?;
    let q = project_point(&Point::new(h_prime.clone()), path)?;
    let union: BTreeSet<usize> = p.indices.iter().chain(&q.indices).copied().collect();
    let diam = path.set_diameter(&union.into_iter().collect::<Vec<_>>())?;
    Ok((p, q, diam))
}

/// A graph `H′` with certified `d(H, H′) ≤ budget`: a pinch or a stretch of a
/// random embedded cycle of `H`.
fn perturb<R: Rng>(
    h: &MarkedMetricGraph,
    budget: f64,
    rng: &mut R,
) -> Result<(Construction, String, BigRational, f64, MarkedMetricGraph)> {
    let cycles = embedded_cycles(h);
    let lp = &cycles[rng.random_range(0..cycles.len())];
    let l = lp.length(h);
    let lf = to_f64(&l);
    let u: f64 = rng.random_range(0.0..1.0);
    let class = lp.class(h).to_string();
    if rng.random_bool(0.5) {
        let floor = ((1.0 - budget.exp() * (1.0 - lf)) / lf).max(0.0);
        let mut sigma = approx_rational(floor + u * (1.0 - floor), 6);
        if sigma > BigRational::one() || sigma <= rat(0, 1) {
            sigma = BigRational::one();
        }
        let mut bound = crate::graphs::pinch_distance_bound(&l, &sigma);
        if bound > budget {
            sigma = BigRational::one();
            bound = 0.0;
        }
        let hp = rescale_loop(h, lp, &sigma)?;
        Ok((Construction::Pinch, class, sigma, bound, hp))
    } else {
        let room = 0.9 * (-lf.ln());
        let mut lambda = approx_rational((u * budget.min(room)).exp(), 6);
        if lambda < BigRational::one() {
            lambda = BigRational::one();
        }
        let mut bound = ln_rational(&lambda);
        if bound > budget {
            lambda = BigRational::one();
            bound = 0.0;
        }
        let hp = rescale_loop(h, lp, &lambda)?;
        Ok((Construction::Stretch, class, lambda, bound, hp))
    }
}

/// Draw `pairs` pairs `(H, H′)` with `d(H, H′) ≤ d(H, γ)` guaranteed by
/// construction and record `diam(π_γ(H) ∪ π_γ(H′))`.
pub fn contraction_test(path: &SampledPath, sampler: &SamplerConfig, pairs: usize, seed: u64) -> Result<ContractionReport> {
    if sampler.rank != path.rank() {
        return Err(Error::RankMismatch(path.rank(), sampler.rank));
    }
    path.distances()?;
    let records: Vec<ContractionRecord> = (0..pairs)
        .into_par_iter()
        .map(|i| -> Result<ContractionRecord> {
            let mut rng = cell_rng(seed, i as u64);
            for _ in 0..100 {
                let h = sample_graph(sampler, &mut rng)?;
                let hp = Point::new(h.clone());
                let proj = project_point(&hp, path)?;
                if proj.distance <= ON_PATH_TOL {
                    continue;
                }
                let (construction, cycle, param, bound, h2) = perturb(&h, proj.distance, &mut rng)?;
                let q = project_point(&Point::new(h2), path)?;
                let union: BTreeSet<usize> = proj.indices.iter().chain(&q.indices).copied().collect();
                let diam = path.set_diameter(&union.into_iter().collect::<Vec<_>>())?;
                return Ok(ContractionRecord {
                    pair: i,
                    construction,
                    cycle,
                    parameter: param.to_string(),
                    bound,
                    d_h_path: proj.distance,
                    proj_h: join(&proj.indices),
                    proj_h_prime: join(&q.indices),
                    diam,
                });
            }
            Err(Error::Sampler(format!("pair {i}: could not place H off the path")))
        })
        .collect::<Result<_>>()?;
    let empirical_d = records.iter().map(|r| r.diam).fold(0.0, f64::max);
    Ok(ContractionReport {
        path: path.label().to_string(),
        family: format!("rank {} eps {} twist <= {}", sampler.rank, sampler.eps, sampler.max_twist),
        seed,
        pairs,
        empirical_d,
        resolution: path.resolution(),
        records,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct TrendRow {
    pub max_twist: usize,
    pub empirical_d: f64,
}

/// Empirical `D` as the sampler's twist radius grows.
pub fn contraction_trend(
    path: &SampledPath,
    sampler: &SamplerConfig,
    radii: &[usize],
    pairs: usize,
    seed: u64,
) -> Result<Vec<TrendRow>> {
    radii
        .iter()
        .map(|&r| {
            let cfg = sampler.clone().with_twist(r);
            Ok(TrendRow { max_twist: r, empirical_d: contraction_test(path, &cfg, pairs, seed)?.empirical_d })
        })
        .collect()
}

// ------------------------------------------------------------------- progress

/// Which pairs of samples the progress table covers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum PairMode {
    /// `(0, k)` for every `k > 0`.
    FromStart,
    /// Every `i < j`.
    All,
}

#[derive(Clone, Debug, Serialize)]
pub struct ProgressRow {
    pub i: usize,
    pub j: usize,
    pub dt: f64,
    pub d_pl: Option<usize>,
    pub unresolved_pairs: usize,
    pub upper_ok: Option<bool>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ProgressReport {
    pub path: String,
    pub mode: PairMode,
    pub word_cap: usize,
    pub radius_cap: usize,
    /// Least `K ≥ 1` with `Δ/K − K ≤ d_PL ≤ KΔ + K` on every resolved row.
    pub k_fit: f64,
    /// Least-squares line `d_PL ≈ slope·Δ + intercept` on resolved rows.
    pub ls_slope: f64,
    pub ls_intercept: f64,
    pub upper_slope: f64,
    pub upper_intercept: f64,
    pub upper_violations: usize,
    pub missing: usize,
    /// Whether `d_PL(γ_0, γ_k)` is nondecreasing in `k` over resolved rows.
    pub nondecreasing_from_start: bool,
    #[serde(skip)]
    pub rows: Vec<ProgressRow>,
}

impl ProgressReport {
    pub fn to_csv(&self) -> Result<String> {
        to_csv(&self.rows)
    }

    /// `d_PL(γ_0, γ_k)` for `k ≥ 1`, in order.
    pub fn from_start(&self) -> Vec<Option<usize>> {
        self.rows.iter().filter(|r| r.i == 0).map(|r| r.d_pl).collect()
    }
}

fn least_squares(rows: &[(f64, f64)]) -> (f64, f64) {
    let n = rows.len() as f64;
    if rows.len() < 2 {
        return (0.0, rows.first().map_or(0.0, |r| r.1));
    }
    let mx = rows.iter().map(|r| r.0).sum::<f64>() / n;
    let my = rows.iter().map(|r| r.1).sum::<f64>() / n;
    let sxx: f64 = rows.iter().map(|r| (r.0 - mx).powi(2)).sum();
    let sxy: f64 = rows.iter().map(|r| (r.0 - mx) * (r.1 - my)).sum();
    if sxx == 0.0 {
        return (0.0, my);
    }
    let slope = sxy / sxx;
    (slope, my - slope * mx)
}

/// `d_PL` estimates between sampled points, the fitted `K`, and the coarse
/// Lipschitz check `d_PL ≤ L·Δ + L` with `L` from the configuration.
pub fn progress_test(path: &SampledPath, cfg: &PLConfig, mode: PairMode) -> Result<ProgressReport> {
    cfg.validate()?;
    if path.len() < 3 {
        return Err(Error::InsufficientSamples(format!("progress fit needs 3 samples, got {}", path.len())));
    }
    let explorer = PlExplorer::new(path.rank(), cfg.word_cap);
    let reps: Vec<Vec<CyclicWord>> = path
        .points()
        .iter()
        .map(|p| p.candidates.classes().into_iter().collect::<BTreeSet<_>>().into_iter().collect())
        .collect();
    let n = path.len();
    let pairs: Vec<(usize, usize)> = match mode {
        PairMode::FromStart => (1..n).map(|j| (0, j)).collect(),
        PairMode::All => (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect(),
    };
    let (slope_l, icpt_l) = (cfg.lipschitz, cfg.lipschitz);
    let rows: Vec<ProgressRow> = pairs
        .par_iter()
        .map(|&(i, j)| -> Result<ProgressRow> {
            let est = d_pl_classes(&reps[i], &reps[j], cfg, &explorer)?;
            let dt = (path.time(j) - path.time(i)).abs();
            Ok(ProgressRow {
                i,
                j,
                dt,
                d_pl: est.value,
                unresolved_pairs: est.missing,
                upper_ok: est.value.map(|d| d as f64 <= slope_l * dt + icpt_l),
            })
        })
        .collect::<Result<_>>()?;
    let resolved: Vec<(f64, f64)> = rows.iter().filter_map(|r| r.d_pl.map(|d| (r.dt, d as f64))).collect();
    let (ls_slope, ls_intercept) = least_squares(&resolved);
    let starts: Vec<usize> = rows.iter().filter(|r| r.i == 0).filter_map(|r| r.d_pl).collect();
    Ok(ProgressReport {
        path: path.label().to_string(),
        mode,
        word_cap: cfg.word_cap,
        radius_cap: cfg.radius_cap,
        k_fit: fit_quasi_geodesic(&resolved),
        ls_slope,
        ls_intercept,
        upper_slope: slope_l,
        upper_intercept: icpt_l,
        upper_violations: rows.iter().filter(|r| r.upper_ok == Some(false)).count(),
        missing: rows.iter().filter(|r| r.d_pl.is_none()).count(),
        nondecreasing_from_start: starts.windows(2).all(|w| w[0] <= w[1]),
        rows,
    })
}

// --------------------------------------------------------- projections agree

#[derive(Clone, Debug, Serialize)]
pub struct AgreeRecord {
    pub sample: usize,
    pub d_h_path: f64,
    pub evaluated: bool,
    pub short_loops: usize,
    pub short_loops_primitive: bool,
    pub alpha: String,
    pub alpha_length: String,
    pub rho: String,
    pub pi: String,
    pub diam: Option<f64>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ProjectionsAgreeReport {
    pub path: String,
    pub seed: u64,
    pub samples: usize,
    pub evaluated: usize,
    pub skipped: usize,
    /// Evaluated graphs with no embedded primitive loop of length at most 2/3.
    pub missing_alpha: usize,
    pub max_diam: f64,
    pub mean_diam: f64,
    pub resolution: f64,
    #[serde(skip)]
    pub records: Vec<AgreeRecord>,
}

impl ProjectionsAgreeReport {
    pub fn to_csv(&self) -> Result<String> {
        to_csv(&self.records)
    }
}

/// For sampled `H` with `d(H, γ) ≥ log 3`, pick the shortest embedded loop `α`
/// of `H` (length at most 2/3, primitive) and record `diam(ρ_γ(α) ∪ π_γ(H))`.
pub fn projections_agree_check(
    path: &SampledPath,
    sampler: &SamplerConfig,
    samples: usize,
    seed: u64,
) -> Result<ProjectionsAgreeReport> {
    if sampler.rank != path.rank() {
        return Err(Error::RankMismatch(path.rank(), sampler.rank));
    }
    path.distances()?;
    let threshold = 3f64.ln();
    let cap = rat(2, 3);
    let records: Vec<AgreeRecord> = (0..samples)
        .into_par_iter()
        .map(|i| -> Result<AgreeRecord> {
            let h = sample_graph(sampler, &mut cell_rng(seed, i as u64))?;
            let proj = project_point(&Point::new(h.clone()), path)?;
            let mut rec = AgreeRecord {
                sample: i,
                d_h_path: proj.distance,
                evaluated: false,
                short_loops: 0,
                short_loops_primitive: true,
                alpha: String::new(),
                alpha_length: String::new(),
                rho: String::new(),
                pi: join(&proj.indices),
                diam: None,
            };
            if proj.distance < threshold {
                return Ok(rec);
            }
            rec.evaluated = true;
            let mut short: Vec<(BigRational, CyclicWord)> = embedded_cycles(&h)
                .into_iter()
                .map(|lp| (lp.length(&h), lp.class(&h)))
                .filter(|(l, _)| *l <= cap)
                .collect();
            short.sort();
            rec.short_loops = short.len();
            rec.short_loops_primitive = short.iter().all(|(_, c)| is_primitive(c));
            if let Some((l, alpha)) = short.into_iter().find(|(_, c)| is_primitive(c)) {
                let lengths = lengths_along(&alpha, path)?;
                let m = lengths.iter().min().unwrap();
                let rho: Vec<usize> = (0..lengths.len()).filter(|&k| &lengths[k] == m).collect();
                let union: BTreeSet<usize> = rho.iter().chain(&proj.indices).copied().collect();
                rec.diam = Some(path.set_diameter(&union.into_iter().collect::<Vec<_>>())?);
                rec.alpha = alpha.to_string();
                rec.alpha_length = l.to_string();
                rec.rho = join(&rho);
            }
            Ok(rec)
        })
        .collect::<Result<_>>()?;
    let evaluated = records.iter().filter(|r| r.evaluated).count();
    if evaluated == 0 {
        return Err(Error::InsufficientSamples(format!("no sampled H at distance >= log 3 among {samples}")));
    }
    let diams: Vec<f64> = records.iter().filter_map(|r| r.diam).collect();
    Ok(ProjectionsAgreeReport {
        path: path.label().to_string(),
        seed,
        samples,
        evaluated,
        skipped: samples - evaluated,
        missing_alpha: records.iter().filter(|r| r.evaluated && r.diam.is_none()).count(),
        max_diam: diams.iter().copied().fold(0.0, f64::max),
        mean_diam: if diams.is_empty() { 0.0 } else { diams.iter().sum::<f64>() / diams.len() as f64 },
        resolution: path.resolution(),
        records,
    })
}

// ------------------------------------------------------------ nondegeneracy

#[derive(Clone, Debug, Serialize)]
pub struct NondegeneracyReport {
    pub d: f64,
    pub lipschitz: f64,
    pub threshold: f64,
    pub holds: bool,
    /// `(s, t, d(γ(t), γ(s)))` with the largest backward distance among witnesses.
    pub witness: Option<(usize, usize, f64)>,
    pub max_backward: f64,
}

/// Whether some sampled `s < t` has `d(γ(t), γ(s)) ≥ 18DL` with `γ(s) ≠ γ(t)`.
pub fn nondegeneracy_check(path: &SampledPath, d: f64, lipschitz: f64) -> Result<NondegeneracyReport> {
    let threshold = 18.0 * d * lipschitz;
    let m = path.distances()?;
    let mut witness: Option<(usize, usize, f64)> = None;
    let mut max_backward = 0.0f64;
    for s in 0..path.len() {
        for t in s + 1..path.len() {
            let back = m[t][s];
            max_backward = max_backward.max(back);
            let distinct = back > 0.0 || m[s][t] > 0.0;
            if distinct && back >= threshold && witness.is_none_or(|w| back > w.2) {
                witness = Some((s, t, back));
            }
        }
    }
    Ok(NondegeneracyReport { d, lipschitz, threshold, holds: witness.is_some(), witness, max_backward })
}

// ------------------------------------------------------- right minimization

#[derive(Clone, Debug, Serialize)]
pub struct RightMinRecord {
    pub class: String,
    pub s: usize,
    pub t1: usize,
    /// `log(ℓ(α|γ(t₁)) / ℓ(α|γ(s)))`.
    pub log_ratio: f64,
    pub minimizers: String,
    pub ok: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct RightMinReport {
    pub d: f64,
    pub classes: usize,
    pub hypotheses: usize,
    pub violations: usize,
    #[serde(skip)]
    pub records: Vec<RightMinRecord>,
}

impl RightMinReport {
    pub fn to_csv(&self) -> Result<String> {
        to_csv(&self.records)
    }
}

/// For each class and sampled `s ≤ t₁` with `ℓ(α|γ(t₁)) < e^{−D} ℓ(α|γ(s))`,
/// check that every sampled minimizer of `α` lies after `s`.
pub fn right_minimization_check(path: &SampledPath, d: f64, classes: &[CyclicWord]) -> Result<RightMinReport> {
    let mut records = Vec::new();
    for alpha in classes {
        let lengths = lengths_along(alpha, path)?;
        let m = lengths.iter().min().unwrap();
        let mins: Vec<usize> = (0..lengths.len()).filter(|&k| &lengths[k] == m).collect();
        for s in 0..lengths.len() {
            for t1 in s..lengths.len() {
                let log_ratio = ln_rational(&(&lengths[t1] / &lengths[s]));
                if log_ratio < -d {
                    records.push(RightMinRecord {
                        class: alpha.to_string(),
                        s,
                        t1,
                        log_ratio,
                        minimizers: join(&mins),
                        ok: mins.iter().all(|&k| k > s),
                    });
                }
            }
        }
    }
    Ok(RightMinReport {
        d,
        classes: classes.len(),
        hypotheses: records.len(),
        violations: records.iter().filter(|r| !r.ok).count(),
        records,
    })
}

// ----------------------------------------------------------------- orbit QI

#[derive(Clone, Debug, Serialize)]
pub struct OrbitElement {
    pub word: String,
    pub word_length: usize,
    pub d_x: f64,
    pub d_pl: Option<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct OrbitQiReport {
    pub generators: Vec<String>,
    pub radius: usize,
    pub elements: usize,
    pub truncated: bool,
    /// Least `K` with `n/K − K ≤ d_X ≤ Kn + K` over word length `n`.
    pub k_x: f64,
    pub k_pl: f64,
    pub missing: usize,
    #[serde(skip)]
    pub rows: Vec<OrbitElement>,
}

impl OrbitQiReport {
    pub fn to_csv(&self) -> Result<String> {
        to_csv(&self.rows)
    }
}

/// Enumerate the ball of `radius` in the group generated by `generators`,
/// identifying elements that act alike on all classes of length at most 3,
/// and tabulate `d(G, g·G)` and the `d_PL` estimate against word length.
pub fn orbit_qi_test(
    generators: &[Automorphism],
    radius: usize,
    g: &MarkedMetricGraph,
    max_elements: usize,
    cfg: &PLConfig,
) -> Result<OrbitQiReport> {
    cfg.validate()?;
    if generators.is_empty() {
        return Err(Error::Domain("empty generating set".into()));
    }
    let rank = g.rank();
    if let Some(bad) = generators.iter().find(|x| x.rank() != rank) {
        return Err(Error::RankMismatch(rank, bad.rank()));
    }
    let tests = short_classes(rank, 3);
    let key = |phi: &Automorphism| -> Vec<CyclicWord> { tests.iter().map(|c| phi.apply(c)).collect() };
    let mut letters: Vec<(String, Automorphism, Automorphism)> = Vec::new();
    for (k, x) in generators.iter().enumerate() {
        let xi = x.inverse();
        letters.push((format!("g{}", k + 1), x.clone(), xi.clone()));
        letters.push((format!("G{}", k + 1), xi, x.clone()));
    }
    let id = Automorphism::identity(rank);
    let mut seen: BTreeMap<Vec<CyclicWord>, ()> = BTreeMap::new();
    seen.insert(key(&id), ());
    let mut elements = vec![(Vec::<String>::new(), id.clone(), id)];
    let mut frontier = vec![0usize];
    let mut truncated = false;
    'outer: for _ in 0..radius {
        let mut next = Vec::new();
        for &e in &frontier {
            for (name, x, xi) in &letters {
                let (word, phi, phi_inv) = &elements[e];
                let nphi = phi.compose(x);
                let k = key(&nphi);
                if seen.contains_key(&k) {
                    continue;
                }
                if elements.len() >= max_elements {
                    truncated = true;
                    break 'outer;
                }
                seen.insert(k, ());
                let mut w = word.clone();
                w.push(name.clone());
                let ninv = xi.compose(phi_inv);
                elements.push((w, nphi, ninv));
                next.push(elements.len() - 1);
            }
        }
        frontier = next;
    }
    let base = Point::new(g.clone());
    let explorer = PlExplorer::new(rank, cfg.word_cap);
    let base_reps: Vec<CyclicWord> = base.candidates.classes().into_iter().collect::<BTreeSet<_>>().into_iter().collect();
    let rows: Vec<OrbitElement> = elements
        .par_iter()
        .map(|(word, phi, phi_inv)| -> Result<OrbitElement> {
            let moved = Point::new(act_with_inverse(phi, phi_inv, g)?);
            let d_x = lip_distance_from(&base.candidates, &moved.graph)?;
            let reps: Vec<CyclicWord> =
                moved.candidates.classes().into_iter().collect::<BTreeSet<_>>().into_iter().collect();
            let est = d_pl_classes(&base_reps, &reps, cfg, &explorer)?;
            Ok(OrbitElement {
                word: if word.is_empty() { "1".into() } else { word.join(" ") },
                word_length: word.len(),
                d_x,
                d_pl: est.value,
            })
        })
        .collect::<Result<_>>()?;
    let xs: Vec<(f64, f64)> = rows.iter().map(|r| (r.word_length as f64, r.d_x)).collect();
    let ps: Vec<(f64, f64)> =
        rows.iter().filter_map(|r| r.d_pl.map(|d| (r.word_length as f64, d as f64))).collect();
    Ok(OrbitQiReport {
        generators: generators.iter().map(|x| x.to_string()).collect(),
        radius,
        elements: rows.len(),
        truncated,
        k_x: fit_quasi_geodesic(&xs),
        k_pl: fit_quasi_geodesic(&ps),
        missing: rows.iter().filter(|r| r.d_pl.is_none()).count(),
        rows,
    })
}
