//! Two-qubit and n-qubit Apollonius states built by CNOT circuits, and
//! concurrence computed by four independent routes: the determinant
//! formula (the master oracle), the closed form 2r/(1+r²), the
//! symmetric-state fidelity, and the circle-intersection distance.

use num_complex::Complex64;
use std::f64::consts::FRAC_1_SQRT_2;

use crate::complex_plane::{circle_from_ratio, reflect_vertical, BipolarCoords, CircleKind, ExtendedComplex};
use crate::single_qubit::{bipolar_amp_pair, two_r_over_one_plus_r2, OneQubitState};
use crate::{Error, Result};

/// Normalized two-qubit state in lexicographic basis order
/// (|00⟩, |01⟩, |10⟩, |11⟩).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TwoQubitState {
    amps: [Complex64; 4],
}

impl TwoQubitState {
    /// Build from amplitudes that must already be normalized to 1e-9.
    pub fn new(amps: [Complex64; 4]) -> Result<Self> {
        let state = Self { amps };
        let deviation = (state.norm() - 1.0).abs();
        if deviation > 1e-9 {
            return Err(Error::NotNormalized(deviation));
        }
        Ok(state)
    }

    /// Normalize arbitrary amplitudes; the zero vector is an error.
    pub fn from_unnormalized(amps: [Complex64; 4]) -> Result<Self> {
        let norm = amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
        if norm == 0.0 {
            return Err(Error::ZeroVector);
        }
        Ok(Self {
            amps: amps.map(|a| a / norm),
        })
    }

    pub(crate) fn from_amps(amps: [Complex64; 4]) -> Self {
        Self { amps }
    }

    /// Tensor product |left⟩ ⊗ |right⟩ with qubit 0 as the left factor.
    pub fn product(left: &OneQubitState, right: &OneQubitState) -> Self {
        Self {
            amps: [
                left.amp0() * right.amp0(),
                left.amp0() * right.amp1(),
                left.amp1() * right.amp0(),
                left.amp1() * right.amp1(),
            ],
        }
    }

    pub fn amps(&self) -> [Complex64; 4] {
        self.amps
    }

    pub fn c00(&self) -> Complex64 {
        self.amps[0]
    }

    pub fn c01(&self) -> Complex64 {
        self.amps[1]
    }

    pub fn c10(&self) -> Complex64 {
        self.amps[2]
    }

    pub fn c11(&self) -> Complex64 {
        self.amps[3]
    }

    pub fn norm(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Inner product ⟨self|other⟩.
    pub fn inner(&self, other: &Self) -> Complex64 {
        self.amps
            .iter()
            .zip(other.amps.iter())
            .map(|(a, b)| a.conj() * b)
            .sum()
    }

    pub fn equals_up_to_phase(&self, other: &Self, tol: f64) -> bool {
        (self.inner(other).norm() - 1.0).abs() < tol
    }

    /// Canonical-phase normal form: first nonzero amplitude real positive.
    pub fn canonical(&self) -> Self {
        let pivot = self
            .amps
            .iter()
            .find(|a| a.norm() > 1e-14)
            .copied()
            .unwrap_or(Complex64::new(1.0, 0.0));
        let phase = pivot / pivot.norm();
        Self {
            amps: self.amps.map(|a| a / phase),
        }
    }
}

/// CNOT with qubit 0 as control: swaps the |10⟩ and |11⟩ amplitudes.
pub fn cnot(s: &TwoQubitState) -> TwoQubitState {
    let [c00, c01, c10, c11] = s.amps;
    TwoQubitState {
        amps: [c00, c01, c11, c10],
    }
}

/// n-qubit Apollonius state ((z−1)|0…0⟩ + z|1…1⟩)/√(|z−1|²+|z|²),
/// stored sparsely as its two nonzero amplitudes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NQubitApolloniusState {
    n: usize,
    z: ExtendedComplex,
    amp_zeros: Complex64,
    amp_ones: Complex64,
}

impl NQubitApolloniusState {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn z(&self) -> ExtendedComplex {
        self.z
    }

    /// Amplitude of |0…0⟩.
    pub fn amp_zeros(&self) -> Complex64 {
        self.amp_zeros
    }

    /// Amplitude of |1…1⟩.
    pub fn amp_ones(&self) -> Complex64 {
        self.amp_ones
    }

    /// Inner product ⟨self|other⟩ between states of the same qubit count.
    pub fn inner(&self, other: &Self) -> Complex64 {
        assert_eq!(self.n, other.n, "qubit counts must match");
        self.amp_zeros.conj() * other.amp_zeros + self.amp_ones.conj() * other.amp_ones
    }

    /// Dense amplitude vector of length 2^n; capped at n = 20.
    pub fn dense(&self) -> Result<Vec<Complex64>> {
        if self.n > 20 {
            return Err(Error::TooManyQubits(self.n));
        }
        let len = 1usize << self.n;
        let mut amps = vec![Complex64::new(0.0, 0.0); len];
        amps[0] = self.amp_zeros;
        amps[len - 1] = self.amp_ones;
        Ok(amps)
    }

    /// The dense two-qubit view for n = 2.
    pub fn as_two_qubit(&self) -> Option<TwoQubitState> {
        (self.n == 2).then(|| TwoQubitState {
            amps: [
                self.amp_zeros,
                Complex64::new(0.0, 0.0),
                Complex64::new(0.0, 0.0),
                self.amp_ones,
            ],
        })
    }
}

fn sparse_pair(z: ExtendedComplex) -> (Complex64, Complex64) {
    match z.complex() {
        None => (
            Complex64::new(FRAC_1_SQRT_2, 0.0),
            Complex64::new(FRAC_1_SQRT_2, 0.0),
        ),
        Some(z) => {
            let norm = ((z - 1.0).norm_sqr() + z.norm_sqr()).sqrt();
            ((z - 1.0) / norm, z / norm)
        }
    }
}

/// The CNOT-chain circuit result ((z−1)|0…0⟩ + z|1…1⟩)/N for n ≥ 1.
pub fn apollonius_n_state(z: ExtendedComplex, n: usize) -> Result<NQubitApolloniusState> {
    if n == 0 {
        return Err(Error::ZeroQubits);
    }
    let (amp_zeros, amp_ones) = sparse_pair(z);
    Ok(NQubitApolloniusState {
        n,
        z,
        amp_zeros,
        amp_ones,
    })
}

/// Reflected n-qubit state (−z̄|0…0⟩ + (1−z̄)|1…1⟩)/N in the paper's
/// phase; equals `apollonius_n_state(reflect_vertical(z), n)` up to a
/// global phase.
pub fn symmetric_n_state(z: ExtendedComplex, n: usize) -> Result<NQubitApolloniusState> {
    if n == 0 {
        return Err(Error::ZeroQubits);
    }
    match z.complex() {
        None => Ok(NQubitApolloniusState {
            n,
            z,
            amp_zeros: Complex64::new(-FRAC_1_SQRT_2, 0.0),
            amp_ones: Complex64::new(-FRAC_1_SQRT_2, 0.0),
        }),
        Some(zv) => {
            let zc = zv.conj();
            let norm = ((zv - 1.0).norm_sqr() + zv.norm_sqr()).sqrt();
            Ok(NQubitApolloniusState {
                n,
                z: reflect_vertical(z),
                amp_zeros: -zc / norm,
                amp_ones: (1.0 - zc) / norm,
            })
        }
    }
}

/// Pure-state concurrence C = 2|c₀₀c₁₁ − c₀₁c₁₀|, the master oracle for
/// every closed form in the crate.
pub fn concurrence_determinant(s: &TwoQubitState) -> Result<f64> {
    let deviation = (s.norm() - 1.0).abs();
    if deviation > 1e-6 {
        return Err(Error::NotNormalized(deviation));
    }
    Ok(2.0 * (s.c00() * s.c11() - s.c01() * s.c10()).norm())
}

/// Closed form C = 2r/(1+r²); 0 at the foci, 1 on the line r = 1.
pub fn concurrence_closed_form(r: f64) -> Result<f64> {
    if r < 0.0 || r.is_nan() {
        return Err(Error::NegativeRatio(r));
    }
    Ok(two_r_over_one_plus_r2(r))
}

/// Fidelity |⟨A_s|A⟩| between the n-qubit Apollonius state and its
/// reflection; independent of n and equal to 2r/(1+r²).
pub fn fidelity_symmetric_n(z: ExtendedComplex, n: usize) -> Result<f64> {
    let a = apollonius_n_state(z, n)?;
    let s = symmetric_n_state(z, n)?;
    Ok(s.inner(&a).norm())
}

/// Concurrence as the distance between the two points where the
/// Apollonius circle of ratio r meets the circle |z − 1/2| = 1/2 through
/// the foci. Solved on the radical line in closed form.
pub fn geometric_concurrence(r: f64) -> Result<f64> {
    let circle = circle_from_ratio(r)?;
    match circle.kind() {
        CircleKind::Point => Ok(0.0),
        // the line Re z = 1/2 meets the through-circle at 1/2 ± i/2
        CircleKind::Line => Ok(1.0),
        CircleKind::Circle => {
            // Subtracting the circle equations
            //   (1 − r²)(x² + y²) + 2r²x − r² = 0   (Apollonius)
            //   x² + y² − x = 0                     (through the foci)
            // gives the radical line x = r²/(1 + r²); substituting back
            // into the through-circle yields y² = x(1 − x). This form
            // stays stable where the circle center and radius diverge.
            let x = 1.0 / (1.0 + (1.0 / r) * (1.0 / r));
            let one_minus_x = 1.0 / (1.0 + r * r);
            let y_sq = (x * one_minus_x).max(0.0);
            Ok(2.0 * y_sq.sqrt())
        }
    }
}

/// Bipolar n-qubit Apollonius state
/// (e^{iσ}|0…0⟩ + e^τ|1…1⟩)/√(1 + e^{2τ}).
pub fn bipolar_n_state(c: BipolarCoords, n: usize) -> Result<NQubitApolloniusState> {
    if n == 0 {
        return Err(Error::ZeroQubits);
    }
    let (amp_zeros, amp_ones) = bipolar_amp_pair(c.tau(), c.sigma());
    Ok(NQubitApolloniusState {
        n,
        z: crate::complex_plane::from_bipolar(c),
        amp_zeros,
        amp_ones,
    })
}

/// Reflected bipolar state: the bipolar form at (−τ, σ) carrying the
/// global phase e^{iσ}, pinned so that ⟨A_s|A⟩ = e^{−iσ}/cosh τ exactly.
pub fn bipolar_symmetric_n_state(c: BipolarCoords, n: usize) -> Result<NQubitApolloniusState> {
    if n == 0 {
        return Err(Error::ZeroQubits);
    }
    let reflected = BipolarCoords::new(-c.tau(), c.sigma());
    let (a0, a1) = bipolar_amp_pair(reflected.tau(), reflected.sigma());
    let phase = Complex64::from_polar(1.0, c.sigma());
    Ok(NQubitApolloniusState {
        n,
        z: crate::complex_plane::from_bipolar(reflected),
        amp_zeros: phase * a0,
        amp_ones: phase * a1,
    })
}

/// Complex fidelity ℱ = ⟨A_s|A⟩ of the bipolar symmetric pair, computed
/// as the literal sparse inner product; equals e^{−iσ}/cosh τ with
/// modulus sech τ, independent of n.
pub fn complex_fidelity_bipolar(c: BipolarCoords, n: usize) -> Result<Complex64> {
    let a = bipolar_n_state(c, n)?;
    let s = bipolar_symmetric_n_state(c, n)?;
    Ok(s.inner(&a))
}
