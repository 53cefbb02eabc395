//! One-qubit state constructors (Bloch, coherent, Apollonius, bipolar),
//! the H and Y-then-H gate circuits, and the entropy/fidelity/distance
//! metrics that are constant along Apollonius circles.

use num_complex::Complex64;
use std::f64::consts::FRAC_1_SQRT_2;

use crate::complex_plane::{ratio, BipolarCoords, ExtendedComplex};
use crate::{Error, Result};

const LN_2: f64 = std::f64::consts::LN_2;

/// Normalized one-qubit state |ψ⟩ = amp0|0⟩ + amp1|1⟩.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OneQubitState {
    amp0: Complex64,
    amp1: Complex64,
}

impl OneQubitState {
    /// Build from amplitudes that must already be normalized to 1e-9.
    pub fn new(amp0: Complex64, amp1: Complex64) -> Result<Self> {
        let state = Self { amp0, amp1 };
        let deviation = (state.norm() - 1.0).abs();
        if deviation > 1e-9 {
            return Err(Error::NotNormalized(deviation));
        }
        Ok(state)
    }

    /// Normalize arbitrary amplitudes; the zero vector is an error.
    pub fn from_unnormalized(amp0: Complex64, amp1: Complex64) -> Result<Self> {
        let norm = (amp0.norm_sqr() + amp1.norm_sqr()).sqrt();
        if norm == 0.0 {
            return Err(Error::ZeroVector);
        }
        Ok(Self {
            amp0: amp0 / norm,
            amp1: amp1 / norm,
        })
    }

    pub fn zero() -> Self {
        Self {
            amp0: Complex64::new(1.0, 0.0),
            amp1: Complex64::new(0.0, 0.0),
        }
    }

    pub fn one() -> Self {
        Self {
            amp0: Complex64::new(0.0, 0.0),
            amp1: Complex64::new(1.0, 0.0),
        }
    }

    pub fn amp0(&self) -> Complex64 {
        self.amp0
    }

    pub fn amp1(&self) -> Complex64 {
        self.amp1
    }

    pub fn norm(&self) -> f64 {
        (self.amp0.norm_sqr() + self.amp1.norm_sqr()).sqrt()
    }

    /// Inner product ⟨self|other⟩.
    pub fn inner(&self, other: &Self) -> Complex64 {
        self.amp0.conj() * other.amp0 + self.amp1.conj() * other.amp1
    }

    /// States are equal up to a global phase iff |⟨u|v⟩| = 1.
    pub fn equals_up_to_phase(&self, other: &Self, tol: f64) -> bool {
        (self.inner(other).norm() - 1.0).abs() < tol
    }

    /// Canonical-phase normal form: first nonzero amplitude real positive.
    pub fn canonical(&self) -> Self {
        let pivot = if self.amp0.norm() > 1e-14 {
            self.amp0
        } else {
            self.amp1
        };
        let phase = pivot / pivot.norm();
        Self {
            amp0: self.amp0 / phase,
            amp1: self.amp1 / phase,
        }
    }
}

/// A 2×2 unitary gate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Gate2 {
    m: [[Complex64; 2]; 2],
}

impl Gate2 {
    pub fn new(m: [[Complex64; 2]; 2]) -> Result<Self> {
        let gate = Self { m };
        if !gate.is_unitary(1e-12) {
            return Err(Error::NonUnitaryGate);
        }
        Ok(gate)
    }

    pub fn hadamard() -> Self {
        let h = Complex64::new(FRAC_1_SQRT_2, 0.0);
        Self {
            m: [[h, h], [h, -h]],
        }
    }

    pub fn pauli_y() -> Self {
        let zero = Complex64::new(0.0, 0.0);
        Self {
            m: [
                [zero, Complex64::new(0.0, -1.0)],
                [Complex64::new(0.0, 1.0), zero],
            ],
        }
    }

    pub fn is_unitary(&self, tol: f64) -> bool {
        let m = &self.m;
        let c00 = m[0][0].conj() * m[0][0] + m[1][0].conj() * m[1][0];
        let c01 = m[0][0].conj() * m[0][1] + m[1][0].conj() * m[1][1];
        let c11 = m[0][1].conj() * m[0][1] + m[1][1].conj() * m[1][1];
        (c00 - 1.0).norm() < tol && c01.norm() < tol && (c11 - 1.0).norm() < tol
    }

    pub fn entry(&self, row: usize, col: usize) -> Complex64 {
        self.m[row][col]
    }
}

/// |θ, φ⟩ = cos(θ/2)|0⟩ + sin(θ/2) e^{iφ}|1⟩.
pub fn from_bloch(theta: f64, phi: f64) -> OneQubitState {
    let half = theta / 2.0;
    OneQubitState {
        amp0: Complex64::new(half.cos(), 0.0),
        amp1: half.sin() * Complex64::from_polar(1.0, phi),
    }
}

/// Stereographic projection z = tan(θ/2) e^{iφ}; θ = π is ∞.
pub fn coherent_parameter(theta: f64, phi: f64) -> ExtendedComplex {
    let half = theta / 2.0;
    // cos(π/2) rounds to ~6e-17 in f64, so treat the pole by tolerance
    if half.cos().abs() < 1e-15 {
        return ExtendedComplex::INFINITY;
    }
    ExtendedComplex::from_complex(half.tan() * Complex64::from_polar(1.0, phi))
}

/// Coherent state |z⟩ = (|0⟩ + z|1⟩)/√(1+|z|²); z = ∞ is |1⟩.
pub fn coherent_state(z: ExtendedComplex) -> OneQubitState {
    let Some(z) = z.complex() else {
        return OneQubitState::one();
    };
    let norm = (1.0 + z.norm_sqr()).sqrt();
    OneQubitState {
        amp0: Complex64::new(1.0 / norm, 0.0),
        amp1: z / norm,
    }
}

/// Apply a unitary gate; the gate is validated before use.
pub fn apply_gate(gate: &Gate2, state: &OneQubitState) -> Result<OneQubitState> {
    if !gate.is_unitary(1e-12) {
        return Err(Error::NonUnitaryGate);
    }
    Ok(OneQubitState {
        amp0: gate.m[0][0] * state.amp0 + gate.m[0][1] * state.amp1,
        amp1: gate.m[1][0] * state.amp0 + gate.m[1][1] * state.amp1,
    })
}

/// The Y-then-H circuit output
/// |c⟩ = ((z−1)|0⟩ + (z+1)|1⟩)/(√2 √(1+|z|²)).
pub fn symmetric_circuit_state(z: ExtendedComplex) -> OneQubitState {
    let Some(z) = z.complex() else {
        // limit of ((z−1), (z+1))/(√2|z|·…) along the real axis
        return OneQubitState {
            amp0: Complex64::new(FRAC_1_SQRT_2, 0.0),
            amp1: Complex64::new(FRAC_1_SQRT_2, 0.0),
        };
    };
    let norm = (2.0 * (1.0 + z.norm_sqr())).sqrt();
    OneQubitState {
        amp0: (z - 1.0) / norm,
        amp1: (z + 1.0) / norm,
    }
}

/// Apollonius state |a⟩ = ((z−1)|0⟩ + z|1⟩)/√(|z−1|² + |z|²).
///
/// The foci give the basis states (up to phase); z = ∞ is the limit
/// (|0⟩+|1⟩)/√2.
pub fn apollonius_state(z: ExtendedComplex) -> OneQubitState {
    let Some(z) = z.complex() else {
        return OneQubitState {
            amp0: Complex64::new(FRAC_1_SQRT_2, 0.0),
            amp1: Complex64::new(FRAC_1_SQRT_2, 0.0),
        };
    };
    let norm = ((z - 1.0).norm_sqr() + z.norm_sqr()).sqrt();
    OneQubitState {
        amp0: (z - 1.0) / norm,
        amp1: z / norm,
    }
}

/// Measurement probabilities (p₀, p₁) of the Apollonius state, with
/// p₀ = |z−1|²/(|z−1|² + |z|²) and p₁ = 1 − p₀ exactly.
pub fn probabilities(z: ExtendedComplex) -> (f64, f64) {
    let Some(z) = z.complex() else {
        return (0.5, 0.5);
    };
    let d0 = (z - 1.0).norm_sqr();
    let d1 = z.norm_sqr();
    let p0 = d0 / (d0 + d1);
    (p0, 1.0 - p0)
}

/// Shannon entropy in bits of the outcome distribution on the circle of
/// ratio r: H = −p₀log₂p₀ − p₁log₂p₁ with p₀ = 1/(1+r²).
///
/// Extended by continuity (0·log 0 := 0) so H(0) = H(∞) = 0.
pub fn shannon_entropy(r: f64) -> Result<f64> {
    if r < 0.0 || r.is_nan() {
        return Err(Error::NegativeRatio(r));
    }
    if r == 0.0 || r.is_infinite() {
        return Ok(0.0);
    }
    let r2 = r * r;
    let p0 = if r2.is_infinite() { 0.0 } else { 1.0 / (1.0 + r2) };
    Ok(binary_entropy(p0))
}

/// Binary entropy h(p) = −p log₂ p − (1−p) log₂ (1−p).
pub fn binary_entropy(p: f64) -> f64 {
    let xlog2 = |x: f64| if x == 0.0 { 0.0 } else { x * x.log2() };
    -xlog2(p) - xlog2(1.0 - p)
}

/// Closed-form first and second derivatives of H with respect to r².
///
/// dH/dr² = −log₂(r²)/(1+r²)²; the second derivative is
/// −2 log₂(r²)/(1+r²)³ − 1/((1+r²)² r² ln 2). At r² = 1 the entropy is
/// stationary with H'' = −1/(4 ln 2).
pub fn entropy_derivatives(r2: f64) -> Result<(f64, f64)> {
    if r2 <= 0.0 || r2.is_nan() {
        return Err(Error::NonPositiveRatioSquared(r2));
    }
    let s = 1.0 + r2;
    let d1 = -r2.log2() / (s * s);
    let d2 = 2.0 * r2.log2() / (s * s * s) - 1.0 / (s * s * r2 * LN_2);
    Ok((d1, d2))
}

/// Mirror state |a_s⟩ = (−z̄|0⟩ + (1−z̄)|1⟩)/√(|z−1|²+|z|²), the
/// Apollonius state of the reflected point 1 − z̄ in the paper's phase.
pub fn symmetric_state(z: ExtendedComplex) -> OneQubitState {
    let Some(z) = z.complex() else {
        return OneQubitState {
            amp0: Complex64::new(-FRAC_1_SQRT_2, 0.0),
            amp1: Complex64::new(-FRAC_1_SQRT_2, 0.0),
        };
    };
    let zc = z.conj();
    let norm = ((z - 1.0).norm_sqr() + z.norm_sqr()).sqrt();
    OneQubitState {
        amp0: -zc / norm,
        amp1: (1.0 - zc) / norm,
    }
}

/// Fidelity with the mirror state, F = 2r/(1+r²) = 2|z||z−1|/(|z−1|²+|z|²).
pub fn fidelity_symmetric(z: ExtendedComplex) -> f64 {
    two_r_over_one_plus_r2(ratio(z))
}

pub(crate) fn two_r_over_one_plus_r2(r: f64) -> f64 {
    if r == 0.0 || r.is_infinite() {
        return 0.0;
    }
    // written as 2/(1/r + r) to stay finite for huge r
    2.0 / (1.0 / r + r)
}

/// True Euclidean norm ‖|a⟩ − |a_s⟩‖ of the amplitude difference;
/// vanishes iff Re z = 1/2 and is √2 for the orthogonal foci states.
pub fn euclidean_distance_symmetric(z: ExtendedComplex) -> f64 {
    let a = apollonius_state(z);
    let s = symmetric_state(z);
    ((a.amp0 - s.amp0).norm_sqr() + (a.amp1 - s.amp1).norm_sqr()).sqrt()
}

/// The paper's normalization of the symmetric distance,
/// 2|Re z − 1/2|/√(|z−1|²+|z|²); equals the true norm divided by √2.
pub fn euclidean_distance_symmetric_paper(z: ExtendedComplex) -> f64 {
    euclidean_distance_symmetric(z) / std::f64::consts::SQRT_2
}

/// Fidelity-based distance d = √(1 − F²) = |1−r²|/(1+r²), invariant
/// under r → 1/r.
pub fn fidelity_distance(z: ExtendedComplex) -> f64 {
    let r = ratio(z);
    if r.is_infinite() {
        return 1.0;
    }
    let r2 = r * r;
    if r2.is_infinite() {
        return 1.0;
    }
    (1.0 - r2).abs() / (1.0 + r2)
}

/// Bipolar form |τ, σ⟩ = (e^{iσ}|0⟩ + e^τ|1⟩)/√(1 + e^{2τ}); equals the
/// Apollonius state of the chart point up to global phase.
pub fn bipolar_one_qubit(c: BipolarCoords) -> OneQubitState {
    let (a0, a1) = bipolar_amp_pair(c.tau(), c.sigma());
    OneQubitState { amp0: a0, amp1: a1 }
}

/// Amplitude pair (e^{iσ}, e^τ)/√(1+e^{2τ}) evaluated stably for any τ.
pub(crate) fn bipolar_amp_pair(tau: f64, sigma: f64) -> (Complex64, Complex64) {
    let phase = Complex64::from_polar(1.0, sigma);
    if tau <= 0.0 {
        let norm = (1.0 + (2.0 * tau).exp()).sqrt();
        (phase / norm, Complex64::new(tau.exp() / norm, 0.0))
    } else {
        let norm = (1.0 + (-2.0 * tau).exp()).sqrt();
        (
            phase * (-tau).exp() / norm,
            Complex64::new(1.0 / norm, 0.0),
        )
    }
}
