//! Bipolar-coordinate two-qubit states, the sech-profile concurrence,
//! and a finite-difference check that the complex concurrence
//! e^{−iσ}/cosh τ solves i𝒞_σ = 𝒞_ττ + 2|𝒞|²𝒞.
//!
//! The check is a residual verification, not a PDE solver: the field is
//! claimed to be a stationary one-soliton solution and the residual of
//! the printed equation is O(h²) for the true field, while an amplitude
//! perturbation breaks the cubic term and leaves an O(1) residual.

use num_complex::Complex64;

use crate::complex_plane::BipolarCoords;
use crate::multi_qubit::{bipolar_n_state, bipolar_symmetric_n_state, TwoQubitState};
use crate::{Error, Result};

/// A complex field 𝒞(τ, σ) on the bipolar chart.
pub struct ConcurrenceField {
    f: Box<dyn Fn(f64, f64) -> Complex64 + Send + Sync>,
}

impl ConcurrenceField {
    pub fn new(f: impl Fn(f64, f64) -> Complex64 + Send + Sync + 'static) -> Self {
        Self { f: Box::new(f) }
    }

    /// The default field e^{−iσ}/cosh τ, the stationary one-soliton
    /// profile.
    pub fn soliton() -> Self {
        Self::new(|tau, sigma| Complex64::from_polar(1.0 / tau.cosh(), -sigma))
    }

    /// Amplitude-scaled soliton A·e^{−iσ}/cosh τ; for A ≠ 1 the cubic
    /// nonlinearity no longer balances and the residual is O(|A − A³|).
    pub fn scaled_soliton(amplitude: f64) -> Self {
        Self::new(move |tau, sigma| amplitude * Complex64::from_polar(1.0 / tau.cosh(), -sigma))
    }

    pub fn eval(&self, tau: f64, sigma: f64) -> Complex64 {
        (self.f)(tau, sigma)
    }
}

/// Two-qubit bipolar state |τ, σ⟩ = (e^{iσ}|00⟩ + e^τ|11⟩)/√(1 + e^{2τ}).
pub fn bipolar_two_qubit(c: BipolarCoords) -> TwoQubitState {
    bipolar_n_state(c, 2)
        .expect("n = 2 is valid")
        .as_two_qubit()
        .expect("n = 2 has a dense two-qubit view")
}

/// Concurrence of the bipolar state, C = sech τ, independent of σ.
pub fn concurrence_sech(tau: f64) -> f64 {
    1.0 / tau.cosh()
}

/// Complex concurrence 𝒞 = ⟨A_s|A⟩ = e^{−iσ}/cosh τ, computed as the
/// literal inner product of the bipolar symmetric pair.
pub fn complex_concurrence(c: BipolarCoords) -> Complex64 {
    let a = bipolar_n_state(c, 2).expect("n = 2 is valid");
    let s = bipolar_symmetric_n_state(c, 2).expect("n = 2 is valid");
    s.inner(&a)
}

/// Central-difference residual i𝒞_σ − 𝒞_ττ − 2|𝒞|²𝒞 of a field at a
/// point, with step h in both variables.
pub fn nls_residual(
    field: &ConcurrenceField,
    tau: f64,
    sigma: f64,
    h: f64,
) -> Result<Complex64> {
    if h <= 0.0 || !h.is_finite() {
        return Err(Error::NonPositiveStep(h));
    }
    let center = field.eval(tau, sigma);
    let d_sigma = (field.eval(tau, sigma + h) - field.eval(tau, sigma - h)) / (2.0 * h);
    let d_tau_tau =
        (field.eval(tau + h, sigma) - 2.0 * center + field.eval(tau - h, sigma)) / (h * h);
    let cubic = 2.0 * center.norm_sqr() * center;
    Ok(Complex64::new(0.0, 1.0) * d_sigma - d_tau_tau - cubic)
}
