//! Calculators for the explicit constants of the contraction argument: the
//! thickness chain, the transient-shortness bound, the progress constant, and
//! the nondegeneracy and sandwich thresholds.
//!
//! The symmetrization constants `s_ε` are always inputs. Use
//! [`crate::metric::estimate_sym_constant`] for an empirical lower estimate.

use serde::Serialize;

use crate::error::{Error, Result};

/// Slope and intercept of the coarse Lipschitz bound on progress in the factor complex.
pub const PROGRESS_SLOPE: f64 = 80.0;

fn check_d(d: f64) -> Result<()> {
    if !(d >= 0.0) || !d.is_finite() {
        return Err(Error::Domain(format!("D = {d} must be finite and nonnegative")));
    }
    Ok(())
}

fn check_l(l: f64) -> Result<()> {
    if !(l >= 1.0) || !l.is_finite() {
        return Err(Error::Domain(format!("L = {l} must be finite and at least 1")));
    }
    Ok(())
}

fn check_eps(eps: f64) -> Result<()> {
    if !(eps > 0.0 && eps < 1.0) {
        return Err(Error::Domain(format!("eps = {eps} outside (0, 1)")));
    }
    Ok(())
}

fn check_s(name: &str, s: f64) -> Result<()> {
    if !(s >= 1.0) || !s.is_finite() {
        return Err(Error::Domain(format!("{name} = {s} must be finite and at least 1")));
    }
    Ok(())
}

/// The transient-shortness bound and the auxiliary thickness `ε′`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TransientBound {
    pub eps: f64,
    pub eps_prime: f64,
    pub d: f64,
    pub s_eps: f64,
    pub s_eps_prime: f64,
    pub value: f64,
}

/// `ε′ = ε / (1 + 2/ε)`.
pub fn eps_prime(eps: f64) -> f64 {
    eps / (1.0 + 2.0 / eps)
}

/// `2 s_ε (1 + s_ε′) log(1 + 2/ε) + 2D`.
pub fn transient_shortness_bound(eps: f64, d: f64, s_eps: f64, s_eps_prime: f64) -> Result<TransientBound> {
    check_eps(eps)?;
    check_d(d)?;
    check_s("s_eps", s_eps)?;
    check_s("s_eps'", s_eps_prime)?;
    let value = 2.0 * s_eps * (1.0 + s_eps_prime) * (1.0 + 2.0 / eps).ln() + 2.0 * d;
    Ok(TransientBound { eps, eps_prime: eps_prime(eps), d, s_eps, s_eps_prime, value })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ThicknessConstants {
    pub d: f64,
    pub l: f64,
    /// `E = D(L + 8DL²) + D`.
    pub e: f64,
    /// `ε₁ = e^{−E}`.
    pub eps1: f64,
    /// `ε₀ = e^{−2E}`.
    pub eps0: f64,
    /// `ε = (ε₀/2) e^{−4DL}`.
    pub eps: f64,
    /// Logarithms of the three levels, finite where the levels underflow.
    pub ln_eps1: f64,
    pub ln_eps0: f64,
    pub ln_eps: f64,
}

pub fn thickness_chain(d: f64, l: f64) -> Result<ThicknessConstants> {
    check_d(d)?;
    check_l(l)?;
    let e = d * (l + 8.0 * d * l * l) + d;
    let eps1 = (-e).exp();
    let eps0 = (-2.0 * e).exp();
    let eps = eps0 / 2.0 * (-4.0 * d * l).exp();
    let ln_eps = -2.0 * e - std::f64::consts::LN_2 - 4.0 * d * l;
    Ok(ThicknessConstants { d, l, e, eps1, eps0, eps, ln_eps1: -e, ln_eps0: -2.0 * e, ln_eps })
}

/// An affine bound `y ≤ slope·x + intercept`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct AffineMap {
    pub slope: f64,
    pub intercept: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ProgressConstants {
    pub d: f64,
    pub d_eps: f64,
    /// `|s − t| ≤ 2D·d_F + (2D_ε + D)`.
    pub lower: AffineMap,
    /// `d_F ≤ 80|s − t| + 80`.
    pub upper: AffineMap,
    /// `max(80 + 80, 2D, 2D_ε + D, 1)`.
    pub k: f64,
}

pub fn progress_constant(d: f64, d_eps: f64) -> Result<ProgressConstants> {
    check_d(d)?;
    if !(d_eps >= 0.0) || !d_eps.is_finite() {
        return Err(Error::Domain(format!("D_eps = {d_eps} must be finite and nonnegative")));
    }
    let lower = AffineMap { slope: 2.0 * d, intercept: 2.0 * d_eps + d };
    let upper = AffineMap { slope: PROGRESS_SLOPE, intercept: PROGRESS_SLOPE };
    let k = [upper.slope + upper.intercept, lower.slope, lower.intercept, 1.0].into_iter().fold(f64::MIN, f64::max);
    Ok(ProgressConstants { d, d_eps, lower, upper, k })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ThresholdConstants {
    pub d: f64,
    pub l: f64,
    pub eps: f64,
    pub s_eps_prime: f64,
    /// `18DL`.
    pub nondegeneracy: f64,
    /// `ε′ = ε e^{−18DL}`.
    pub eps_prime: f64,
    pub ln_eps_prime: f64,
    /// `A = s_ε′ · 18DL`.
    pub a: f64,
    /// `8DL`.
    pub trigger: f64,
    /// `[4DL, D(L + 8DL² + 1)]`.
    pub sandwich_outer: (f64, f64),
    /// `[3L, L + 8DL²]`.
    pub sandwich_inner: (f64, f64),
}

pub fn nondegeneracy_threshold(d: f64, l: f64, eps: f64, s_eps_prime: f64) -> Result<ThresholdConstants> {
    check_d(d)?;
    check_l(l)?;
    check_eps(eps)?;
    check_s("s_eps'", s_eps_prime)?;
    let nd = 18.0 * d * l;
    Ok(ThresholdConstants {
        d,
        l,
        eps,
        s_eps_prime,
        nondegeneracy: nd,
        eps_prime: eps * (-nd).exp(),
        ln_eps_prime: eps.ln() - nd,
        a: s_eps_prime * nd,
        trigger: 8.0 * d * l,
        sandwich_outer: (4.0 * d * l, d * (l + 8.0 * d * l * l + 1.0)),
        sandwich_inner: (3.0 * l, l + 8.0 * d * l * l),
    })
}

/// One labeled line of a constants table.
#[derive(Clone, Debug, Serialize)]
pub struct ConstantRow {
    pub name: String,
    pub value: f64,
    pub formula: String,
    pub role: String,
}

fn row(name: &str, value: f64, formula: &str, role: &str) -> ConstantRow {
    ConstantRow { name: name.into(), value, formula: formula.into(), role: role.into() }
}

impl ThicknessConstants {
    pub fn rows(&self) -> Vec<ConstantRow> {
        vec![
            row("E", self.e, "D(L+8DL^2)+D", "back-up length for leaving the thick part"),
            row("eps1", self.eps1, "exp(-E)", "first thickness level of the back-up argument"),
            row("eps0", self.eps0, "exp(-2E)", "second thickness level of the back-up argument"),
            row("eps", self.eps, "(eps0/2)exp(-4DL)", "thickness guaranteed along contracting geodesics"),
            row("ln eps1", self.ln_eps1, "-E", "log of eps1"),
            row("ln eps0", self.ln_eps0, "-2E", "log of eps0"),
            row("ln eps", self.ln_eps, "-2E-ln2-4DL", "log of eps"),
        ]
    }
}

impl ThresholdConstants {
    pub fn rows(&self) -> Vec<ConstantRow> {
        vec![
            row("18DL", self.nondegeneracy, "18DL", "nondegeneracy threshold on backward distance"),
            row("eps'", self.eps_prime, "eps*exp(-18DL)", "thickness after a nondegenerate stretch"),
            row("ln eps'", self.ln_eps_prime, "ln(eps)-18DL", "log of eps'"),
            row("A", self.a, "s_eps'*18DL", "requires the thick-part symmetrization constant s_eps'"),
            row("8DL", self.trigger, "8DL", "projection diameter that triggers the back-up argument"),
            row("4DL", self.sandwich_outer.0, "4DL", "lower end of the two-petal rose diameter sandwich"),
            row("D(L+8DL^2+1)", self.sandwich_outer.1, "D(L+8DL^2+1)", "upper end of the two-petal rose diameter sandwich"),
            row("3L", self.sandwich_inner.0, "3L", "lower end of the inner sandwich"),
            row("L+8DL^2", self.sandwich_inner.1, "L+8DL^2", "upper end of the inner sandwich"),
        ]
    }
}

impl ProgressConstants {
    pub fn rows(&self) -> Vec<ConstantRow> {
        vec![
            row("lower.slope", self.lower.slope, "2D", "time elapsed per unit of factor-complex progress"),
            row("lower.intercept", self.lower.intercept, "2D_eps+D", "additive slack of the lower progress bound"),
            row("upper.slope", self.upper.slope, "80", "coarse Lipschitz slope of the factor-complex projection"),
            row("upper.intercept", self.upper.intercept, "80", "coarse Lipschitz intercept"),
            row("K", self.k, "max(80+80, 2D, 2D_eps+D, 1)", "quasigeodesic constant of the projected geodesic"),
        ]
    }
}

impl TransientBound {
    pub fn rows(&self) -> Vec<ConstantRow> {
        vec![
            row("eps'", self.eps_prime, "eps/(1+2/eps)", "auxiliary thickness for transient shortness"),
            row(
                "D_eps",
                self.value,
                "2 s_eps (1+s_eps') log(1+2/eps) + 2D",
                "requires the thick-part symmetrization constants s_eps and s_eps'",
            ),
        ]
    }
}
