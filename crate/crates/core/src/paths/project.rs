use num_rational::BigRational;
use rayon::prelude::*;
use serde::Serialize;

use super::path::SampledPath;
use crate::error::Result;
use crate::graphs::{loop_length, MarkedMetricGraph};
use crate::metric::{max_stretch, Point};
use crate::num::ln_rational;
use crate::words::CyclicWord;

/// Sampled closest-point projection `π_γ(H)`.
#[derive(Clone, Debug, Serialize)]
pub struct ProjectionResult {
    pub indices: Vec<usize>,
    pub times: Vec<f64>,
    /// `d(H, γ(t_i))` at the minimizing indices.
    pub distance: f64,
    pub diameter: f64,
    /// Largest time step of the path.
    pub resolution: f64,
}

/// Indices minimizing `d(H, γ(t_i))`; ties are detected on the exact ratios.
pub fn cp_project(h: &MarkedMetricGraph, path: &SampledPath) -> Result<ProjectionResult> {
    project_point(&Point::new(h.clone()), path)
}

pub fn project_point(h: &Point, path: &SampledPath) -> Result<ProjectionResult> {
    let ratios: Vec<BigRational> = path
        .points()
        .par_iter()
        .map(|p| max_stretch(&h.candidates, &p.graph).map(|(r, _)| r))
        .collect::<Result<_>>()?;
    let best = ratios.iter().min().expect("paths are nonempty").clone();
    let indices: Vec<usize> = (0..ratios.len()).filter(|&i| ratios[i] == best).collect();
    Ok(ProjectionResult {
        times: indices.iter().map(|&i| path.time(i)).collect(),
        diameter: path.set_diameter(&indices)?,
        distance: ln_rational(&best),
        resolution: path.resolution(),
        indices,
    })
}

/// Sampled minimizers `ρ_γ(α)` and the minimal length `m_α`.
#[derive(Clone, Debug, Serialize)]
pub struct MinimizerReport {
    pub class: CyclicWord,
    pub m_alpha: f64,
    /// `m_α` as an exact fraction.
    pub m_alpha_exact: String,
    pub indices: Vec<usize>,
    pub times: Vec<f64>,
    pub resolution: f64,
}

/// Exact lengths `ℓ(α | γ(t_i))` along the path.
pub fn lengths_along(alpha: &CyclicWord, path: &SampledPath) -> Result<Vec<BigRational>> {
    path.points().par_iter().map(|p| loop_length(alpha, &p.graph)).collect()
}

pub fn min_length_times(alpha: &CyclicWord, path: &SampledPath) -> Result<MinimizerReport> {
    let lengths = lengths_along(alpha, path)?;
    let m = lengths.iter().min().expect("paths are nonempty").clone();
    let indices: Vec<usize> = (0..lengths.len()).filter(|&i| lengths[i] == m).collect();
    Ok(MinimizerReport {
        class: alpha.clone(),
        m_alpha: crate::num::to_f64(&m),
        m_alpha_exact: m.to_string(),
        times: indices.iter().map(|&i| path.time(i)).collect(),
        resolution: path.resolution(),
        indices,
    })
}
