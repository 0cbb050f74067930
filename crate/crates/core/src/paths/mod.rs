//! Sampled directed paths in Outer space: certified stretch geodesics, orbits
//! of automorphisms, closest-point and length-minimizer projections, and the
//! contraction, progress, and nondegeneracy experiments run on them.
//!
//! Every path is compact and finitely sampled. Projection and minimizer sets
//! are reported at sample resolution, with the largest time step attached.

mod experiments;
mod path;
mod project;

pub use experiments::{
    contraction_pair, contraction_test, contraction_trend, fit_quasi_geodesic, nondegeneracy_check, orbit_qi_test,
    progress_test, projections_agree_check, right_minimization_check, to_csv, AgreeRecord, Construction,
    ContractionRecord, ContractionReport, NondegeneracyReport, OrbitElement, OrbitQiReport, PairMode,
    ProgressReport, ProgressRow, ProjectionsAgreeReport, RightMinRecord, RightMinReport, TrendRow,
};
pub use path::{certify_geodesic, orbit_path, shrink_loop_path, stretch_loop_path, GeodesicCertificate, SampledPath};
pub use project::{cp_project, lengths_along, min_length_times, project_point, MinimizerReport, ProjectionResult};

#[cfg(test)]
mod tests;
