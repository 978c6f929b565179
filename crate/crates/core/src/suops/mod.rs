//! Square roots, absolute values, suprema and infima, inverses and polynomial calculus.

pub mod calculus;
pub mod capabilities;
pub mod chebyshev;
pub mod inverse;
pub mod lattice;
pub mod sqrt;

/// Nesting limit for constructions that call each other on unbounded inputs.
pub const MAX_DEPTH: u32 = 3;

pub use calculus::{polynomial_calculus, positivity_companion, CalculusCheck, RealPolynomial};
pub use capabilities::{run_capabilities, sample_instance, su_probe, Capability, CapabilityInstance, CapabilityTally};
pub use chebyshev::{sqrt_series, ChebyshevSeries, SqrtApproximant};
pub use inverse::{
    inverse_by_truncation, inverse_coercive, inverse_neumann, invert_shifted, invert_shifted_report,
    InverseReport, ShiftedInverses,
};
pub use lattice::{abs, abs_report, bicommutant_defect, lattice_defects, neg_part, pos_part, vee, wedge, LatticeDefects};
pub use sqrt::{general_cauchy_tolerance, sqrt_bounded, sqrt_bounded_with, sqrt_general, ApproximantStage, SqrtConfig, SqrtReport};
