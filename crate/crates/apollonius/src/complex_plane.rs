//! Extended-complex arithmetic, Apollonius circle geometry, the two
//! reflection maps, and the bipolar coordinate chart with foci 0 and 1.

use num_complex::Complex64;
use std::f64::consts::PI;

use crate::{Error, Result};

/// A point of the extended complex plane C ∪ {∞}.
///
/// Infinity is a dedicated flag rather than IEEE infinities in the
/// components, so `abs`/`arg` of finite values stay well-defined.
#[derive(Debug, Clone, Copy)]
pub struct ExtendedComplex {
    value: Complex64,
    at_infinity: bool,
}

impl ExtendedComplex {
    /// The point at infinity.
    pub const INFINITY: Self = Self {
        value: Complex64::new(0.0, 0.0),
        at_infinity: true,
    };

    pub fn new(re: f64, im: f64) -> Self {
        Self {
            value: Complex64::new(re, im),
            at_infinity: false,
        }
    }

    pub fn from_complex(value: Complex64) -> Self {
        Self {
            value,
            at_infinity: false,
        }
    }

    pub fn is_infinite(&self) -> bool {
        self.at_infinity
    }

    /// The finite value, if any.
    pub fn complex(&self) -> Option<Complex64> {
        if self.at_infinity {
            None
        } else {
            Some(self.value)
        }
    }

    /// The finite value; panics on the point at infinity.
    pub fn unwrap_complex(&self) -> Complex64 {
        self.complex().expect("point at infinity has no finite value")
    }

    pub fn conj(&self) -> Self {
        if self.at_infinity {
            *self
        } else {
            Self::from_complex(self.value.conj())
        }
    }

    /// Möbius reciprocal: 1/0 = ∞, 1/∞ = 0.
    pub fn recip(&self) -> Self {
        if self.at_infinity {
            return Self::new(0.0, 0.0);
        }
        if self.value.norm() == 0.0 {
            return Self::INFINITY;
        }
        Self::from_complex(self.value.inv())
    }
}

impl PartialEq for ExtendedComplex {
    fn eq(&self, other: &Self) -> bool {
        match (self.at_infinity, other.at_infinity) {
            (true, true) => true,
            (false, false) => self.value == other.value,
            _ => false,
        }
    }
}

impl From<Complex64> for ExtendedComplex {
    fn from(value: Complex64) -> Self {
        Self::from_complex(value)
    }
}

impl From<f64> for ExtendedComplex {
    fn from(re: f64) -> Self {
        Self::new(re, 0.0)
    }
}

impl std::fmt::Display for ExtendedComplex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.at_infinity {
            write!(f, "inf")
        } else {
            write!(f, "{}", self.value)
        }
    }
}

/// Kind of the locus |z|/|z−1| = r.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CircleKind {
    Circle,
    /// The vertical line Re z = 1/2 (r = 1).
    Line,
    /// A focus (r = 0 or r = ∞).
    Point,
}

impl CircleKind {
    fn name(&self) -> &'static str {
        match self {
            CircleKind::Circle => "circle",
            CircleKind::Line => "line",
            CircleKind::Point => "point",
        }
    }
}

/// Apollonius circle with foci 0 and 1, parameterized by the distance
/// ratio r = |z|/|z−1|.
///
/// For a proper circle the center is x₀ = r²/(r²−1) on the real axis and
/// the radius is r₀ = r/|r²−1|.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ApolloniusCircle {
    ratio: f64,
    kind: CircleKind,
    center: Complex64,
    radius: f64,
}

impl ApolloniusCircle {
    pub fn ratio(&self) -> f64 {
        self.ratio
    }

    pub fn kind(&self) -> CircleKind {
        self.kind
    }

    /// Center of a proper circle; degenerate kinds are a domain error.
    pub fn center(&self) -> Result<Complex64> {
        match self.kind {
            CircleKind::Circle => Ok(self.center),
            kind => Err(Error::DegenerateCircle {
                kind: kind.name(),
                ratio: self.ratio,
            }),
        }
    }

    /// Radius of a proper circle; degenerate kinds are a domain error.
    pub fn radius(&self) -> Result<f64> {
        match self.kind {
            CircleKind::Circle => Ok(self.radius),
            kind => Err(Error::DegenerateCircle {
                kind: kind.name(),
                ratio: self.ratio,
            }),
        }
    }

    /// The degenerate focus for `kind == Point`.
    pub fn point(&self) -> Option<Complex64> {
        (self.kind == CircleKind::Point).then_some(self.center)
    }

    /// Point of a proper circle at the given angle from the center.
    pub fn point_at(&self, angle: f64) -> Result<Complex64> {
        let center = self.center()?;
        let radius = self.radius()?;
        Ok(center + radius * Complex64::from_polar(1.0, angle))
    }

    /// `n` points of a proper circle at equally spaced angles.
    pub fn sample_points(&self, n: usize) -> Result<Vec<Complex64>> {
        (0..n)
            .map(|k| self.point_at(2.0 * PI * k as f64 / n as f64))
            .collect()
    }
}

/// Bipolar coordinates (τ, σ) with foci 0 and 1.
///
/// τ = ln r indexes the Apollonius circles; σ indexes the orthogonal
/// circle family through both foci and is always reduced into (−π, π].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BipolarCoords {
    tau: f64,
    sigma: f64,
}

impl BipolarCoords {
    pub fn new(tau: f64, sigma: f64) -> Self {
        Self {
            tau,
            sigma: reduce_angle(sigma),
        }
    }

    pub fn tau(&self) -> f64 {
        self.tau
    }

    pub fn sigma(&self) -> f64 {
        self.sigma
    }
}

/// Wrap an angle into (−π, π], choosing +π at the branch cut.
pub fn reduce_angle(angle: f64) -> f64 {
    let mut a = angle.rem_euclid(2.0 * PI);
    if a > PI {
        a -= 2.0 * PI;
    }
    // rem_euclid can land exactly on 2π for tiny negative inputs
    if a <= -PI {
        a += 2.0 * PI;
    }
    a
}

/// Distance ratio r = |z|/|z−1| to the foci; ∞ for z = 1, 1 for z = ∞.
pub fn ratio(z: ExtendedComplex) -> f64 {
    let Some(z) = z.complex() else { return 1.0 };
    let denom = (z - 1.0).norm();
    if denom == 0.0 {
        f64::INFINITY
    } else {
        z.norm() / denom
    }
}

/// Apollonius circle with the given ratio r.
///
/// r = 1 is the vertical line Re z = 1/2; r = 0 and r = ∞ degenerate to
/// the foci 0 and 1.
pub fn circle_from_ratio(r: f64) -> Result<ApolloniusCircle> {
    if r < 0.0 || r.is_nan() {
        return Err(Error::NegativeRatio(r));
    }
    if r == 0.0 {
        return Ok(ApolloniusCircle {
            ratio: r,
            kind: CircleKind::Point,
            center: Complex64::new(0.0, 0.0),
            radius: 0.0,
        });
    }
    if r.is_infinite() {
        return Ok(ApolloniusCircle {
            ratio: r,
            kind: CircleKind::Point,
            center: Complex64::new(1.0, 0.0),
            radius: 0.0,
        });
    }
    if r == 1.0 {
        return Ok(ApolloniusCircle {
            ratio: r,
            kind: CircleKind::Line,
            center: Complex64::new(0.5, 0.0),
            radius: f64::INFINITY,
        });
    }
    let r2 = r * r;
    Ok(ApolloniusCircle {
        ratio: r,
        kind: CircleKind::Circle,
        center: Complex64::new(r2 / (r2 - 1.0), 0.0),
        radius: r / (r2 - 1.0).abs(),
    })
}

/// Reflection in the vertical line Re z = 1/2: z ↦ 1 − z̄. Swaps the foci
/// and maps the circle of ratio r onto the circle of ratio 1/r.
pub fn reflect_vertical(z: ExtendedComplex) -> ExtendedComplex {
    match z.complex() {
        None => ExtendedComplex::INFINITY,
        Some(z) => ExtendedComplex::from_complex(1.0 - z.conj()),
    }
}

/// Inversion in the circle through the foci, |ξ − 1/2| = 1/2:
/// ξ ↦ 1/2 + (1/4)/(ξ̄ − 1/2). An involution fixing the circle pointwise;
/// the center 1/2 maps to ∞ and back.
pub fn invert_in_circle(xi: ExtendedComplex) -> ExtendedComplex {
    let Some(xi) = xi.complex() else {
        return ExtendedComplex::new(0.5, 0.0);
    };
    let shifted = xi.conj() - 0.5;
    if shifted.norm() == 0.0 {
        return ExtendedComplex::INFINITY;
    }
    ExtendedComplex::from_complex(0.5 + 0.25 / shifted)
}

/// Bipolar coordinates of z: with w = z/(z−1), τ = ln|w| and σ = −arg w.
/// The foci have no chart; z = ∞ maps to (0, 0).
pub fn to_bipolar(z: ExtendedComplex) -> Result<BipolarCoords> {
    let Some(zv) = z.complex() else {
        return Ok(BipolarCoords::new(0.0, 0.0));
    };
    if zv.norm() == 0.0 || (zv - 1.0).norm() == 0.0 {
        return Err(Error::FocusHasNoBipolarChart(zv));
    }
    let w = zv / (zv - 1.0);
    Ok(BipolarCoords::new(w.norm().ln(), -w.arg()))
}

/// Inverse chart: z = e^τ/(e^τ − e^{iσ}); the pole (0, 0) is ∞.
pub fn from_bipolar(c: BipolarCoords) -> ExtendedComplex {
    if c.tau == 0.0 && c.sigma == 0.0 {
        return ExtendedComplex::INFINITY;
    }
    let phase = Complex64::from_polar(1.0, c.sigma);
    if c.tau <= 0.0 {
        let et = c.tau.exp();
        ExtendedComplex::from_complex(et / (et - phase))
    } else {
        // multiply through by e^{-τ} so large τ stays finite
        let emt = (-c.tau).exp();
        ExtendedComplex::from_complex(1.0 / (1.0 - emt * phase))
    }
}

/// Cartesian form of the inverse chart,
/// z = 1/2 + (1/2)(sinh τ + i sin σ)/(cosh τ − cos σ).
pub fn from_bipolar_cartesian(c: BipolarCoords) -> ExtendedComplex {
    let denom = c.tau.cosh() - c.sigma.cos();
    if denom == 0.0 {
        return ExtendedComplex::INFINITY;
    }
    ExtendedComplex::new(
        0.5 + 0.5 * c.tau.sinh() / denom,
        0.5 * c.sigma.sin() / denom,
    )
}
