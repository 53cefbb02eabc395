//! Apollonius representation of a generic two-qubit state by three
//! complex parameters (η, ζ, ξ): the {|00⟩,|11⟩} sector carries η, the
//! {|01⟩,|10⟩} sector carries ζ, and ξ mixes the two orthonormal sector
//! states. Includes the three-step reflection principle (two mirror
//! reflections plus a circle inversion), the concurrence in parametric
//! form, and the law of cosines for the complex concurrence.
//!
//! All closed forms here use the squared sector normalizations
//! N² = |x−1|² + |x|². The source material writes √N in some of them,
//! which is inconsistent with direct amplitude expansion; the N² forms
//! are the ones that agree with the determinant oracle (see tests).

use num_complex::Complex64;
use std::f64::consts::FRAC_1_SQRT_2;

use crate::complex_plane::ExtendedComplex;
use crate::multi_qubit::TwoQubitState;
use crate::Result;

/// Exact-degeneracy threshold for equal or vanishing sector amplitudes.
const DEGENERATE_EPS: f64 = 1e-14;

/// The (η, ζ, ξ, global phase) parameterization of a two-qubit state:
/// |ψ⟩ = e^{iφ}((ξ−1)|η⟩ + ξ|ζ⟩)/√(|ξ−1|² + |ξ|²).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ApolloniusDecomposition {
    pub eta: ExtendedComplex,
    pub zeta: ExtendedComplex,
    pub xi: ExtendedComplex,
    pub global_phase: f64,
}

impl ApolloniusDecomposition {
    pub fn new(eta: ExtendedComplex, zeta: ExtendedComplex, xi: ExtendedComplex) -> Self {
        Self {
            eta,
            zeta,
            xi,
            global_phase: 0.0,
        }
    }
}

/// The complex concurrence 𝒞 = μ𝒞_η + ν𝒞_ζ; its modulus is the ordinary
/// concurrence.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplexConcurrence {
    pub value: Complex64,
}

impl ComplexConcurrence {
    pub fn modulus(&self) -> f64 {
        self.value.norm()
    }
}

/// Coefficient pair ((x−1)/N_x, x/N_x); ∞ is the real-axis limit
/// (1/√2, 1/√2).
fn sector_pair(x: ExtendedComplex) -> (Complex64, Complex64) {
    match x.complex() {
        None => (
            Complex64::new(FRAC_1_SQRT_2, 0.0),
            Complex64::new(FRAC_1_SQRT_2, 0.0),
        ),
        Some(x) => {
            let norm = ((x - 1.0).norm_sqr() + x.norm_sqr()).sqrt();
            ((x - 1.0) / norm, x / norm)
        }
    }
}

/// x(x−1)/N_x², the half partial concurrence; ∞ is the real-axis limit 1/2.
fn half_partial(x: ExtendedComplex) -> Complex64 {
    match x.complex() {
        None => Complex64::new(0.5, 0.0),
        Some(x) => {
            let n_sq = (x - 1.0).norm_sqr() + x.norm_sqr();
            x * (x - 1.0) / n_sq
        }
    }
}

/// Sector state |η⟩ = ((η−1)|00⟩ + η|11⟩)/N_η.
pub fn sector_state_eta(eta: ExtendedComplex) -> TwoQubitState {
    let (a, b) = sector_pair(eta);
    TwoQubitState::from_amps([a, Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0), b])
}

/// Sector state |ζ⟩ = ((ζ−1)|01⟩ + ζ|10⟩)/N_ζ.
pub fn sector_state_zeta(zeta: ExtendedComplex) -> TwoQubitState {
    let (a, b) = sector_pair(zeta);
    TwoQubitState::from_amps([Complex64::new(0.0, 0.0), a, b, Complex64::new(0.0, 0.0)])
}

fn add(a: &TwoQubitState, ca: Complex64, b: &TwoQubitState, cb: Complex64) -> TwoQubitState {
    let (aa, ba) = (a.amps(), b.amps());
    TwoQubitState::from_amps([
        ca * aa[0] + cb * ba[0],
        ca * aa[1] + cb * ba[1],
        ca * aa[2] + cb * ba[2],
        ca * aa[3] + cb * ba[3],
    ])
}

fn reconstruct_unit(d: &ApolloniusDecomposition) -> TwoQubitState {
    let (mix0, mix1) = sector_pair(d.xi);
    add(
        &sector_state_eta(d.eta),
        mix0,
        &sector_state_zeta(d.zeta),
        mix1,
    )
}

/// |ψ⟩ = e^{iφ}((ξ−1)|η⟩ + ξ|ζ⟩)/N_ξ; orthonormality of the sector
/// states makes the output normalized for any parameters.
pub fn reconstruct(d: &ApolloniusDecomposition) -> TwoQubitState {
    let base = reconstruct_unit(d);
    let phase = Complex64::from_polar(1.0, d.global_phase);
    let amps = base.amps().map(|a| phase * a);
    TwoQubitState::from_amps(amps)
}

/// Invert a sector: parameter x with (c_lo, c_hi) = ((x−1)a, xa), and the
/// projection of the sector onto its normalized state.
fn sector_parameter(c_lo: Complex64, c_hi: Complex64) -> (ExtendedComplex, bool) {
    if c_lo.norm() <= DEGENERATE_EPS && c_hi.norm() <= DEGENERATE_EPS {
        // empty sector: parameter unconstrained, canonically 0
        return (ExtendedComplex::new(0.0, 0.0), true);
    }
    if (c_hi - c_lo).norm() <= DEGENERATE_EPS {
        return (ExtendedComplex::INFINITY, false);
    }
    (ExtendedComplex::from_complex(c_hi / (c_hi - c_lo)), false)
}

/// Recover (η, ζ, ξ, global phase) from a normalized state. Total:
/// equal-amplitude sectors map to the parameter ∞, empty sectors get the
/// canonical parameter 0 with all weight folded into ξ ∈ {0, 1}, and the
/// recorded phase makes `reconstruct` exact rather than up-to-phase.
pub fn decompose(s: &TwoQubitState) -> ApolloniusDecomposition {
    let (eta, eta_empty) = sector_parameter(s.c00(), s.c11());
    let (zeta, zeta_empty) = sector_parameter(s.c01(), s.c10());

    // projections of |ψ⟩ onto the normalized sector states
    let alpha = if eta_empty {
        Complex64::new(0.0, 0.0)
    } else {
        sector_state_eta(eta).inner(s)
    };
    let beta = if zeta_empty {
        Complex64::new(0.0, 0.0)
    } else {
        sector_state_zeta(zeta).inner(s)
    };

    let xi = if (beta - alpha).norm() <= DEGENERATE_EPS {
        ExtendedComplex::INFINITY
    } else {
        ExtendedComplex::from_complex(beta / (beta - alpha))
    };

    let mut d = ApolloniusDecomposition::new(eta, zeta, xi);
    let unit = reconstruct_unit(&d);
    d.global_phase = unit.inner(s).arg();
    d
}

/// Superposition coefficients μ = (ξ−1)²/N_ξ², ν = −ξ²/N_ξ², satisfying
/// |μ| + |ν| = 1; ξ = ∞ takes the real-axis limit (1/2, −1/2).
pub fn superposition_coefficients(xi: ExtendedComplex) -> (Complex64, Complex64) {
    let (a, b) = sector_pair(xi);
    (a * a, -b * b)
}

/// Partial complex concurrences 𝒞_η = 2η(η−1)/N_η², 𝒞_ζ = 2ζ(ζ−1)/N_ζ².
pub fn partial_concurrences(d: &ApolloniusDecomposition) -> (Complex64, Complex64) {
    (2.0 * half_partial(d.eta), 2.0 * half_partial(d.zeta))
}

/// The total complex concurrence 𝒞 = μ𝒞_η + ν𝒞_ζ; equals the literal
/// transition amplitude ⟨ψ_s|ψ⟩ of the reflected pair.
pub fn complex_concurrence(d: &ApolloniusDecomposition) -> ComplexConcurrence {
    let (mu, nu) = superposition_coefficients(d.xi);
    let (c_eta, c_zeta) = partial_concurrences(d);
    ComplexConcurrence {
        value: mu * c_eta + nu * c_zeta,
    }
}

/// Concurrence in parametric form,
/// C = 2|(ξ−1)² η(η−1)/N_η² − ξ² ζ(ζ−1)/N_ζ²| / N_ξ².
pub fn concurrence_parametric(d: &ApolloniusDecomposition) -> f64 {
    complex_concurrence(d).modulus()
}

/// Three-step reflected state: η and ζ mirrored in Re = 1/2, ξ inverted
/// in the circle through the foci,
/// |ψ_s⟩ = ((1−ξ̄)|η*⟩ + ξ̄|ζ*⟩)/N_ξ with
/// |η*⟩ = −(η̄|00⟩ + (η̄−1)|11⟩)/N_η and the analogous |ζ*⟩.
///
/// The overall sign is pinned so that ⟨ψ_s|ψ⟩ = μ𝒞_η + ν𝒞_ζ holds as an
/// identity (the inversion ξ* enters through the ξ̄ coefficients of the
/// phase-fixed form).
pub fn reflected_state(d: &ApolloniusDecomposition) -> TwoQubitState {
    // |η*⟩ = −(η̄|00⟩ + (η̄−1)|11⟩)/N_η is amplitude for amplitude the
    // sector state of the mirrored parameter 1 − η̄ (the conjugated,
    // swapped, negated sector pair); likewise |ζ*⟩. Building the pair
    // directly keeps the η = ∞ limit on the same sign branch.
    let (e0, e1) = sector_pair(d.eta);
    let eta_star = TwoQubitState::from_amps([
        -e1.conj(),
        Complex64::new(0.0, 0.0),
        Complex64::new(0.0, 0.0),
        -e0.conj(),
    ]);
    let (z0, z1) = sector_pair(d.zeta);
    let zeta_star = TwoQubitState::from_amps([
        Complex64::new(0.0, 0.0),
        -z1.conj(),
        -z0.conj(),
        Complex64::new(0.0, 0.0),
    ]);

    // coefficients (1−ξ̄)/N_ξ and ξ̄/N_ξ are the ((ξ*−1), ξ*)/N_{ξ*} pair
    // of the inverted parameter ξ* = invert_in_circle(ξ), up to phase
    let (mix0, mix1) = sector_pair(d.xi);
    add(&eta_star, -mix0.conj(), &zeta_star, mix1.conj())
}

/// Phase-flip reflection: conjugate all amplitudes, then apply Y⊗Y.
/// Equals the three-step geometric construction up to a global phase.
pub fn phase_flip_reflection(s: &TwoQubitState) -> Result<TwoQubitState> {
    let deviation = (s.norm() - 1.0).abs();
    if deviation > 1e-6 {
        return Err(crate::Error::NotNormalized(deviation));
    }
    let [c00, c01, c10, c11] = s.amps();
    Ok(TwoQubitState::from_amps([
        -c11.conj(),
        c10.conj(),
        c01.conj(),
        -c00.conj(),
    ]))
}

/// Residual of C² = (|μ|C_η)² + (|ν|C_ζ)² − 2(|μ|C_η)(|ν|C_ζ) cos Φ with
/// Φ = π − (arg(μ𝒞_η) − arg(ν𝒞_ζ)). When either summand vanishes Φ is
/// undefined and the cosine term is dropped.
pub fn law_of_cosines_residual(d: &ApolloniusDecomposition) -> f64 {
    let (mu, nu) = superposition_coefficients(d.xi);
    let (c_eta, c_zeta) = partial_concurrences(d);
    let t_eta = mu * c_eta;
    let t_zeta = nu * c_zeta;
    let total_sq = (t_eta + t_zeta).norm_sqr();
    let rhs = if t_eta.norm() < DEGENERATE_EPS || t_zeta.norm() < DEGENERATE_EPS {
        t_eta.norm_sqr() + t_zeta.norm_sqr()
    } else {
        let phi = std::f64::consts::PI - (t_eta.arg() - t_zeta.arg());
        t_eta.norm_sqr() + t_zeta.norm_sqr() - 2.0 * t_eta.norm() * t_zeta.norm() * phi.cos()
    };
    (total_sq - rhs).abs()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multi_qubit::concurrence_determinant;
    use crate::{EXACT_TOL, GEOM_TOL};

    fn x(re: f64, im: f64) -> ExtendedComplex {
        ExtendedComplex::new(re, im)
    }

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn worked_decomposition() -> ApolloniusDecomposition {
        ApolloniusDecomposition::new(x(2.0, 0.0), x(0.5, 0.0), x(0.5, 0.0))
    }

    fn worked_state() -> TwoQubitState {
        let s = 10.0f64.sqrt();
        TwoQubitState::from_amps([c(-1.0 / s, 0.0), c(-0.5, 0.0), c(0.5, 0.0), c(-2.0 / s, 0.0)])
    }

    #[test]
    fn sector_state_examples() {
        let s = sector_state_eta(x(0.0, 0.0));
        assert!((s.c00() + 1.0).norm() < 1e-15);
        let s = sector_state_eta(ExtendedComplex::INFINITY);
        assert!((s.c00().re - FRAC_1_SQRT_2).abs() < 1e-15);
        assert!((s.c11().re - FRAC_1_SQRT_2).abs() < 1e-15);
        let s = sector_state_eta(x(2.0, 0.0));
        let sqrt5 = 5.0f64.sqrt();
        assert!((s.c00().re - 1.0 / sqrt5).abs() < 1e-15);
        assert!((s.c11().re - 2.0 / sqrt5).abs() < 1e-15);

        let s = sector_state_zeta(x(1.0, 0.0));
        assert!((s.c10() - 1.0).norm() < 1e-15);
        assert!(s.c01().norm() < 1e-15);
        let s = sector_state_zeta(x(0.5, 0.0));
        assert!((s.c01().re + FRAC_1_SQRT_2).abs() < 1e-15);
        assert!((s.c10().re - FRAC_1_SQRT_2).abs() < 1e-15);
        let s = sector_state_zeta(ExtendedComplex::INFINITY);
        assert!((s.c01().re - FRAC_1_SQRT_2).abs() < 1e-15);
    }

    #[test]
    fn sectors_are_orthonormal() {
        for (eta, zeta) in [
            (x(0.3, 0.9), x(-1.2, 0.4)),
            (x(2.0, 0.0), x(0.5, 0.0)),
            (ExtendedComplex::INFINITY, x(0.1, -0.1)),
        ] {
            let e = sector_state_eta(eta);
            let z = sector_state_zeta(zeta);
            assert!((e.inner(&e) - 1.0).norm() < EXACT_TOL);
            assert!((z.inner(&z) - 1.0).norm() < EXACT_TOL);
            assert!(e.inner(&z).norm() < EXACT_TOL);
        }
    }

    #[test]
    fn reconstruct_examples() {
        // ξ = 0 gives −|η⟩
        let d = ApolloniusDecomposition::new(x(0.7, 0.2), x(0.1, 0.0), x(0.0, 0.0));
        let s = reconstruct(&d);
        assert!(s.equals_up_to_phase(&sector_state_eta(x(0.7, 0.2)), EXACT_TOL));

        // ξ = 1 gives |ζ⟩
        let d = ApolloniusDecomposition::new(x(0.7, 0.2), x(0.1, 0.0), x(1.0, 0.0));
        let s = reconstruct(&d);
        assert!(s.equals_up_to_phase(&sector_state_zeta(x(0.1, 0.0)), EXACT_TOL));

        // worked point (η, ζ, ξ) = (2, 1/2, 1/2)
        let s = reconstruct(&worked_decomposition());
        let expected = worked_state();
        let diff: f64 = s
            .amps()
            .iter()
            .zip(expected.amps().iter())
            .map(|(a, b)| (a - b).norm())
            .sum();
        assert!(diff < EXACT_TOL);
    }

    #[test]
    fn decompose_examples() {
        let sqrt5 = 5.0f64.sqrt();
        let s = TwoQubitState::from_amps([c(1.0 / sqrt5, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(2.0 / sqrt5, 0.0)]);
        let d = decompose(&s);
        assert!((d.eta.unwrap_complex() - 2.0).norm() < EXACT_TOL);
        assert_eq!(d.zeta, x(0.0, 0.0));
        assert!((d.xi.unwrap_complex()).norm() < EXACT_TOL);

        let bell = TwoQubitState::from_amps([
            c(FRAC_1_SQRT_2, 0.0),
            c(0.0, 0.0),
            c(0.0, 0.0),
            c(FRAC_1_SQRT_2, 0.0),
        ]);
        let d = decompose(&bell);
        assert!(d.eta.is_infinite());
        assert!((d.xi.unwrap_complex()).norm() < EXACT_TOL);

        let d = decompose(&worked_state());
        assert!((d.eta.unwrap_complex() - 2.0).norm() < EXACT_TOL);
        assert!((d.zeta.unwrap_complex() - 0.5).norm() < EXACT_TOL);
        assert!((d.xi.unwrap_complex() - 0.5).norm() < EXACT_TOL);
    }

    #[test]
    fn round_trip_is_exact() {
        let states = [
            worked_state(),
            TwoQubitState::from_unnormalized([c(0.3, 0.1), c(-0.2, 0.5), c(0.0, 0.7), c(0.4, -0.3)]).unwrap(),
            TwoQubitState::from_unnormalized([c(1.0, 0.0), c(1.0, 0.0), c(1.0, 0.0), c(1.0, 0.0)]).unwrap(),
            TwoQubitState::from_unnormalized([c(0.0, 0.0), c(0.3, -0.4), c(0.5, 0.0), c(0.0, 0.0)]).unwrap(),
            TwoQubitState::from_unnormalized([c(0.0, 1.0), c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)]).unwrap(),
        ];
        for s in states {
            let rebuilt = reconstruct(&decompose(&s));
            let diff: f64 = rebuilt
                .amps()
                .iter()
                .zip(s.amps().iter())
                .map(|(a, b)| (a - b).norm())
                .sum();
            assert!(diff < GEOM_TOL, "round trip failed: diff={diff}");
        }
    }

    #[test]
    fn parametric_concurrence_examples() {
        let d = ApolloniusDecomposition::new(x(2.0, 0.0), x(0.0, 0.0), x(0.0, 0.0));
        assert!((concurrence_parametric(&d) - 0.8).abs() < EXACT_TOL);

        let d = worked_decomposition();
        assert!((concurrence_parametric(&d) - 0.9).abs() < EXACT_TOL);
        assert!((concurrence_determinant(&reconstruct(&d)).unwrap() - 0.9).abs() < EXACT_TOL);

        let d = ApolloniusDecomposition::new(x(0.3, 0.0), x(0.5, 0.0), x(1.0, 0.0));
        assert!((concurrence_parametric(&d) - 1.0).abs() < EXACT_TOL);
    }

    #[test]
    fn parametric_matches_determinant() {
        let params = [
            (x(0.4, 1.1), x(-0.3, 0.2), x(0.8, -0.6)),
            (x(2.0, 0.0), x(0.5, 0.0), x(0.5, 0.0)),
            (ExtendedComplex::INFINITY, x(0.2, 0.2), x(0.3, 0.0)),
            (x(1.5, -0.5), ExtendedComplex::INFINITY, x(0.5, 0.5)),
            (x(0.1, 0.0), x(0.9, 0.0), ExtendedComplex::INFINITY),
        ];
        for (eta, zeta, xi) in params {
            let d = ApolloniusDecomposition::new(eta, zeta, xi);
            let det = concurrence_determinant(&reconstruct(&d)).unwrap();
            assert!(
                (concurrence_parametric(&d) - det).abs() < GEOM_TOL,
                "mismatch for {eta:?}, {zeta:?}, {xi:?}"
            );
        }
    }

    #[test]
    fn reflected_state_examples() {
        // η = 2, ξ = 0: |ψ_s⟩ is ±(2|00⟩ + |11⟩)/√5
        let d = ApolloniusDecomposition::new(x(2.0, 0.0), x(0.0, 0.0), x(0.0, 0.0));
        let s = reflected_state(&d);
        let sqrt5 = 5.0f64.sqrt();
        let target = TwoQubitState::from_amps([c(-2.0 / sqrt5, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(-1.0 / sqrt5, 0.0)]);
        assert!(s.equals_up_to_phase(&target, EXACT_TOL));

        // on the max line the reflection fidelity is 1
        let d = ApolloniusDecomposition::new(x(0.5, 0.0), x(0.3, 0.0), x(0.0, 0.0));
        let f = reflected_state(&d).inner(&reconstruct(&d)).norm();
        assert!((f - 1.0).abs() < EXACT_TOL);

        // worked point: |⟨ψ_s|ψ⟩| = 0.9
        let d = worked_decomposition();
        let f = reflected_state(&d).inner(&reconstruct(&d)).norm();
        assert!((f - 0.9).abs() < EXACT_TOL);
    }

    #[test]
    fn reflection_fidelity_equals_concurrence() {
        let params = [
            (x(0.4, 1.1), x(-0.3, 0.2), x(0.8, -0.6)),
            (x(-2.0, 0.3), x(0.6, 0.6), x(0.2, 1.4)),
            (ExtendedComplex::INFINITY, x(0.2, 0.2), x(0.3, 0.0)),
        ];
        for (eta, zeta, xi) in params {
            let d = ApolloniusDecomposition::new(eta, zeta, xi);
            let psi = reconstruct(&d);
            let f = reflected_state(&d).inner(&psi).norm();
            let det = concurrence_determinant(&psi).unwrap();
            assert!((f - det).abs() < GEOM_TOL);
        }
    }

    #[test]
    fn superposition_reproduces_the_transition_amplitude() {
        let params = [
            (x(0.4, 1.1), x(-0.3, 0.2), x(0.8, -0.6)),
            (x(2.0, 0.0), x(0.5, 0.0), x(0.5, 0.0)),
            (x(-1.0, 2.0), x(1.4, 0.1), x(0.45, -0.2)),
        ];
        for (eta, zeta, xi) in params {
            let d = ApolloniusDecomposition::new(eta, zeta, xi);
            let literal = reflected_state(&d).inner(&reconstruct_unit(&d));
            let superposed = complex_concurrence(&d).value;
            assert!(
                (literal - superposed).norm() < EXACT_TOL,
                "literal {literal} vs superposition {superposed}"
            );
        }
    }

    #[test]
    fn phase_flip_examples() {
        let bell = TwoQubitState::from_amps([
            c(FRAC_1_SQRT_2, 0.0),
            c(0.0, 0.0),
            c(0.0, 0.0),
            c(FRAC_1_SQRT_2, 0.0),
        ]);
        let flipped = phase_flip_reflection(&bell).unwrap();
        assert!(flipped.equals_up_to_phase(&bell, EXACT_TOL));

        let zero = TwoQubitState::from_amps([c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)]);
        let flipped = phase_flip_reflection(&zero).unwrap();
        assert!((flipped.c11() + 1.0).norm() < 1e-15);

        let s = worked_state();
        let flipped = phase_flip_reflection(&s).unwrap();
        let geometric = reflected_state(&decompose(&s));
        assert!(flipped.equals_up_to_phase(&geometric, EXACT_TOL));
    }

    #[test]
    fn partial_concurrence_examples() {
        let d = ApolloniusDecomposition::new(x(0.5, 0.0), x(0.0, 0.0), x(0.0, 0.0));
        let (c_eta, c_zeta) = partial_concurrences(&d);
        assert!((c_eta + 1.0).norm() < EXACT_TOL);
        assert!(c_zeta.norm() < EXACT_TOL);

        let d = ApolloniusDecomposition::new(x(2.0, 0.0), x(0.0, 0.0), x(0.0, 0.0));
        let (c_eta, _) = partial_concurrences(&d);
        assert!((c_eta - 0.8).norm() < EXACT_TOL);
    }

    #[test]
    fn superposition_coefficient_examples() {
        let (mu, nu) = superposition_coefficients(x(0.0, 0.0));
        assert!((mu - 1.0).norm() < EXACT_TOL && nu.norm() < EXACT_TOL);
        let (mu, nu) = superposition_coefficients(x(1.0, 0.0));
        assert!(mu.norm() < EXACT_TOL && (nu + 1.0).norm() < EXACT_TOL);
        let (mu, nu) = superposition_coefficients(x(0.5, 0.0));
        assert!((mu - 0.5).norm() < EXACT_TOL && (nu + 0.5).norm() < EXACT_TOL);
        let (mu, nu) = superposition_coefficients(ExtendedComplex::INFINITY);
        assert!((mu - 0.5).norm() < EXACT_TOL && (nu + 0.5).norm() < EXACT_TOL);
        // |μ| + |ν| = 1
        for (re, im) in [(0.3, 0.9), (-1.0, 0.5), (2.4, -0.7)] {
            let (mu, nu) = superposition_coefficients(x(re, im));
            assert!((mu.norm() + nu.norm() - 1.0).abs() < EXACT_TOL);
        }
    }

    #[test]
    fn law_of_cosines_worked_point() {
        let d = worked_decomposition();
        let (mu, nu) = superposition_coefficients(d.xi);
        let (c_eta, c_zeta) = partial_concurrences(&d);
        assert!((mu * c_eta - c(0.4, 0.0)).norm() < EXACT_TOL);
        assert!((nu * c_zeta - c(0.5, 0.0)).norm() < EXACT_TOL);
        assert!((complex_concurrence(&d).modulus() - 0.9).abs() < EXACT_TOL);
        assert!(law_of_cosines_residual(&d) < GEOM_TOL);
    }

    #[test]
    fn law_of_cosines_degenerate_term() {
        let d = ApolloniusDecomposition::new(x(0.7, 0.3), x(0.2, 0.0), x(0.0, 0.0));
        assert!(law_of_cosines_residual(&d) < GEOM_TOL);
    }
}
