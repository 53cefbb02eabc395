//! Qubit states on Apollonius circles.
//!
//! One-qubit states map to points of the extended complex plane with the
//! computational basis states sitting at the foci 0 and 1. The Apollonius
//! circle through a point (the locus of fixed distance ratio `r` to the
//! foci) carries all the information-theoretic content of the state:
//! Shannon entropy, symmetric-state fidelity and, for the entangled
//! two-qubit states built from it, the concurrence `2r/(1+r²)`.
//!
//! The crate provides:
//!
//! - [`complex_plane`]: extended-complex arithmetic, Apollonius circle
//!   geometry, the two reflection maps and the bipolar coordinate chart.
//! - [`single_qubit`]: state constructors, gate circuits and the
//!   entropy/fidelity/distance metrics constant on Apollonius circles.
//! - [`multi_qubit`]: CNOT-built two- and n-qubit Apollonius states and
//!   concurrence via determinant, closed-form, fidelity and geometric
//!   routes.
//! - [`generic_two_qubit`]: the (η, ζ, ξ) decomposition of an arbitrary
//!   two-qubit state, its reflection principle and the law of cosines
//!   for complex concurrence.
//! - [`bipolar_nls`]: the sech-profile concurrence in bipolar coordinates
//!   and a finite-difference check that the complex concurrence solves
//!   the printed nonlinear Schrödinger equation.
//! - [`verify`]: seeded cross-oracle verification suites used by the
//!   `aq verify` command.

pub mod bipolar_nls;
pub mod complex_plane;
pub mod generic_two_qubit;
pub mod multi_qubit;
pub mod single_qubit;
pub mod verify;

mod error;

pub use error::{Error, Result};

pub use complex_plane::{ApolloniusCircle, BipolarCoords, CircleKind, ExtendedComplex};
pub use generic_two_qubit::{ApolloniusDecomposition, ComplexConcurrence};
pub use multi_qubit::{NQubitApolloniusState, TwoQubitState};
pub use single_qubit::{Gate2, OneQubitState};

/// Default absolute comparison tolerance for geometric identities.
pub const GEOM_TOL: f64 = 1e-10;

/// Tolerance for identities that hold to machine precision.
pub const EXACT_TOL: f64 = 1e-12;
