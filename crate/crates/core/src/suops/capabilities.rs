//! The six equivalent capabilities of a complete symmetric algebra, probed on instances.

#[allow(unused_imports)]
use num_traits::Float;

use alloc::vec::Vec;

use super::inverse::{inverse_coercive, invert_shifted_report};
use super::lattice::{abs, lattice_defects, vee, wedge};
use super::sqrt::sqrt_general;
use crate::backends::Sampling;
use crate::error::{Error, Result};
use crate::ordered::{scale, seminorm, OrderedStarAlgebra};
use crate::random::SeededRng;

/// Relative defect above which a capability counts as failed.
pub const CAPABILITY_TOLERANCE: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Capability {
    ShiftedInverse,
    CoerciveInverse,
    SquareRoot,
    AbsoluteValue,
    Lattice,
    WedgeWithUnit,
}

impl Capability {
    pub const ALL: [Capability; 6] = [
        Capability::ShiftedInverse,
        Capability::CoerciveInverse,
        Capability::SquareRoot,
        Capability::AbsoluteValue,
        Capability::Lattice,
        Capability::WedgeWithUnit,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Capability::ShiftedInverse => "shifted-inverse",
            Capability::CoerciveInverse => "coercive-inverse",
            Capability::SquareRoot => "square-root",
            Capability::AbsoluteValue => "absolute-value",
            Capability::Lattice => "commuting-vee-wedge",
            Capability::WedgeWithUnit => "wedge-with-unit",
        }
    }
}

/// Inputs for one round of the probe.
#[derive(Debug, Clone, PartialEq)]
pub struct CapabilityInstance<E> {
    pub hermitian: E,
    pub positive: E,
    pub coercive: E,
    pub pair: (E, E),
}

pub fn sample_instance<A: Sampling>(alg: &A, rng: &mut SeededRng) -> CapabilityInstance<A::Element> {
    let eps = rng.uniform_in(0.1, 1.0);
    CapabilityInstance {
        hermitian: alg.random_hermitian(rng),
        positive: alg.random_positive(rng),
        coercive: alg.random_coercive(rng, eps),
        pair: alg.commuting_pair(rng),
    }
}

/// Relative defect of one capability on one instance.
pub fn probe_capability<A: OrderedStarAlgebra>(
    alg: &A,
    cap: Capability,
    inst: &CapabilityInstance<A::Element>,
) -> Result<f64> {
    let norm = |x: &A::Element| seminorm(alg, x).as_f64();
    let defect = match cap {
        Capability::ShiftedInverse => {
            let r = invert_shifted_report(alg, &inst.hermitian)?;
            r.defect_plus.max(r.defect_minus) / scale(alg, &inst.hermitian)
        }
        Capability::CoerciveInverse => {
            let r = inverse_coercive(alg, &inst.coercive)?;
            r.defect / scale(alg, &inst.coercive)
        }
        Capability::SquareRoot => {
            let r = sqrt_general(alg, &inst.positive)?;
            r.residual / scale(alg, &inst.positive)
        }
        Capability::AbsoluteValue => {
            let a = &inst.hermitian;
            let m = abs(alg, a)?;
            if !alg.is_positive(&m) {
                return Err(Error::DefectExceeded {
                    check: "absolute value is positive",
                    defect: f64::NAN,
                });
            }
            norm(&alg.sub(&alg.mul(&m, &m), &alg.mul(a, a))) / scale(alg, a).powi(2)
        }
        Capability::Lattice => {
            let (a, b) = &inst.pair;
            let v = vee(alg, a, b)?;
            let w = wedge(alg, a, b)?;
            let dv = lattice_defects(alg, a, b, &v, true);
            let dw = lattice_defects(alg, a, b, &w, false);
            let s = scale(alg, a).max(scale(alg, b));
            dv.equation_defect.max(dw.equation_defect) / (s * s)
        }
        Capability::WedgeWithUnit => {
            let a = &inst.coercive;
            let one = alg.unit();
            let w = wedge(alg, a, &one)?;
            lattice_defects(alg, a, &one, &w, false).equation_defect / scale(alg, a).powi(2)
        }
    };
    Ok(defect)
}

#[derive(Debug, Clone, PartialEq)]
pub struct CapabilityTally {
    pub capability: Capability,
    pub trials: usize,
    pub failures: usize,
    pub worst_defect: f64,
    pub first_error: Option<Error>,
}

impl CapabilityTally {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

/// Runs all six capabilities over the given instances.
pub fn run_capabilities<A: OrderedStarAlgebra>(
    alg: &A,
    instances: &[CapabilityInstance<A::Element>],
) -> Vec<CapabilityTally> {
    Capability::ALL
        .iter()
        .map(|&cap| {
            let mut t = CapabilityTally {
                capability: cap,
                trials: instances.len(),
                failures: 0,
                worst_defect: 0.0,
                first_error: None,
            };
            for inst in instances {
                match probe_capability(alg, cap, inst) {
                    Ok(d) => {
                        t.worst_defect = t.worst_defect.max(d);
                        if !(d <= CAPABILITY_TOLERANCE) {
                            t.failures += 1;
                        }
                    }
                    Err(e) => {
                        t.failures += 1;
                        t.first_error.get_or_insert(e);
                    }
                }
            }
            t
        })
        .collect()
}

/// Samples `trials` instances and runs the probe.
pub fn su_probe<A: Sampling>(alg: &A, rng: &mut SeededRng, trials: usize) -> Vec<CapabilityTally> {
    let instances: Vec<_> = (0..trials).map(|_| sample_instance(alg, rng)).collect();
    run_capabilities(alg, &instances)
}
