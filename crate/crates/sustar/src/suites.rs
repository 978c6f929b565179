//! Seeded verification suites.

use std::time::Instant;

use sustar_core::backends::{
    make_polynomial_algebra, verify_genpos_certificate, DiagonalEmbedding, FunctionAlgebra, GenPosCertificate,
    MatrixAlgebra, Restriction, Sampling, StarMorphism, TwistedCircle, UnitaryConjugation, UpperTriangular,
};
use sustar_core::dominated::{
    dominant_product_bound, downarrow_subalgebra_probe, graph_seminorm, in_downarrow, sample_member,
    susconstruct_probe, validate_dominant_set, witness_holds, DominantSetSpec, HamiltonianSpec, TruncationTower,
};
use sustar_core::linalg::{inner, vec_norm};
use sustar_core::ordered::{commutes, is_uniformly_bounded, re_part, scale, seminorm, uniform_seminorm};
use sustar_core::random::SeededRng;
use sustar_core::suops::{
    abs, bicommutant_defect, inverse_by_truncation, inverse_coercive, lattice_defects, neg_part, pos_part,
    positivity_companion, sqrt_bounded, su_probe, vee, wedge, RealPolynomial,
};
use sustar_core::{Matrix, OrderedStarAlgebra, Scalar, StarAlgebra, TolerancePolicy};

use crate::report::{CheckReport, SuiteReport, SuiteSection, Summary, Tally, Timing};

/// Every suite, in report order.
pub const SUITES: &[&str] = &[
    "admissible-cone",
    "approximate-sqrt",
    "archimedean",
    "csersatz",
    "cstar-laws",
    "dominant",
    "downarrow",
    "inverse-ordering",
    "morphisms",
    "ordersquare",
    "pathologies",
    "polynomial-calculus",
    "posnegpart",
    "radical-square",
    "su-equivalence",
    "supinf",
    "susconstruct",
    "unique-order",
    "veewedge-rules",
    "weak-order-unit",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Backend {
    Matrix,
    Function,
    Ptlg,
}

impl Backend {
    pub fn name(self) -> &'static str {
        match self {
            Backend::Matrix => "matrix",
            Backend::Function => "function",
            Backend::Ptlg => "ptlg",
        }
    }
}

impl std::str::FromStr for Backend {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "matrix" => Ok(Backend::Matrix),
            "function" => Ok(Backend::Function),
            "ptlg" | "upper-triangular" => Ok(Backend::Ptlg),
            _ => Err(format!("unknown backend '{s}' (matrix, function, ptlg)")),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SuiteConfig {
    pub backend: Backend,
    pub dim: usize,
    pub trials: usize,
    pub seed: u64,
    pub tol_eq: Option<f64>,
    /// Suite names; empty or `all` selects every suite.
    pub suites: Vec<String>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            backend: Backend::Matrix,
            dim: 4,
            trials: 50,
            seed: 0,
            tol_eq: None,
            suites: Vec::new(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum ConfigError {
    #[error("unknown suite '{0}'")]
    UnknownSuite(String),
    #[error("{0}")]
    Invalid(String),
}

impl SuiteConfig {
    pub fn tolerance(&self) -> TolerancePolicy {
        match self.tol_eq {
            Some(t) => TolerancePolicy::default().with_tol_eq(t),
            None => TolerancePolicy::default(),
        }
    }

    /// Selected suites in report order.
    pub fn selected(&self) -> Result<Vec<&'static str>, ConfigError> {
        if self.trials == 0 {
            return Err(ConfigError::Invalid("trials must be at least 1".into()));
        }
        if self.dim == 0 {
            return Err(ConfigError::Invalid("dim must be at least 1".into()));
        }
        if self.tolerance().validate().is_err() {
            return Err(ConfigError::Invalid("tolerance must be positive and finite".into()));
        }
        let mut out = Vec::new();
        if self.suites.is_empty() || self.suites.iter().any(|s| s == "all") {
            out.extend_from_slice(SUITES);
        }
        for s in &self.suites {
            if s == "all" {
                continue;
            }
            match SUITES.iter().find(|n| **n == s.as_str()) {
                Some(n) => out.push(n),
                None => return Err(ConfigError::UnknownSuite(s.clone())),
            }
        }
        out.sort();
        out.dedup();
        Ok(out)
    }
}

fn suite_seed(seed: u64, name: &str) -> u64 {
    name.bytes()
        .fold(0xcbf2_9ce4_8422_2325u64, |h, b| (h ^ b as u64).wrapping_mul(0x0100_0000_01b3))
        ^ seed
}

/// Runs the selected suites.
pub fn run(cfg: &SuiteConfig) -> Result<SuiteReport, ConfigError> {
    let names = cfg.selected()?;
    let start = Instant::now();
    let mut timing = Timing::default();
    let mut sections = Vec::new();
    for name in names {
        let t0 = Instant::now();
        let mut rng = SeededRng::new(suite_seed(cfg.seed, name));
        for (backend, mut checks) in run_suite(name, cfg, &mut rng)? {
            checks.sort_by(|a, b| a.name.cmp(&b.name));
            sections.push(SuiteSection {
                name: name.to_string(),
                backend,
                checks,
            });
        }
        timing.suites.insert(name.to_string(), t0.elapsed().as_secs_f64() * 1e3);
    }
    timing.total_ms = start.elapsed().as_secs_f64() * 1e3;
    let mut summary = Summary::default();
    for c in sections.iter().flat_map(|s| &s.checks) {
        summary.checks += 1;
        match c.status {
            crate::report::Status::Pass => summary.passed += 1,
            crate::report::Status::Xfail => summary.xfail += 1,
            _ => summary.failed += 1,
        }
    }
    Ok(SuiteReport {
        seed: cfg.seed,
        backend: cfg.backend.name().to_string(),
        dim: cfg.dim,
        trials: cfg.trials,
        tol_eq: cfg.tolerance().tol_eq,
        suites: sections,
        summary,
        timing,
    })
}

fn matrix_alg(cfg: &SuiteConfig) -> MatrixAlgebra {
    MatrixAlgebra::new(cfg.dim, cfg.tolerance()).expect("dim checked")
}

fn function_alg(cfg: &SuiteConfig) -> FunctionAlgebra {
    let points = (0..cfg.dim).map(|i| i as f64).collect();
    FunctionAlgebra::new(points, cfg.tolerance()).expect("dim checked")
}

type Sections = Vec<(String, Vec<CheckReport>)>;

fn generic<F>(cfg: &SuiteConfig, rng: &mut SeededRng, f: F) -> Sections
where
    F: Fn(&dyn GenericRunner, &mut SeededRng, usize) -> Vec<CheckReport>,
{
    match cfg.backend {
        Backend::Function => {
            let alg = function_alg(cfg);
            vec![("function".into(), f(&alg, rng, cfg.trials))]
        }
        // The nilpotent fixture has no square roots, so generic suites use matrices.
        Backend::Matrix | Backend::Ptlg => {
            let alg = matrix_alg(cfg);
            vec![("matrix".into(), f(&alg, rng, cfg.trials))]
        }
    }
}

/// Object-safe entry points for the generic suites.
pub trait GenericRunner {
    fn ordersquare(&self, rng: &mut SeededRng, trials: usize) -> Vec<CheckReport>;
    fn cstar_laws(&self, rng: &mut SeededRng, trials: usize) -> Vec<CheckReport>;
    fn csersatz(&self, rng: &mut SeededRng, trials: usize) -> Vec<CheckReport>;
    fn admissible_cone(&self, rng: &mut SeededRng, trials: usize) -> Vec<CheckReport>;
    fn radical_square(&self, rng: &mut SeededRng, trials: usize) -> Vec<CheckReport>;
    fn supinf(&self, rng: &mut SeededRng, trials: usize) -> Vec<CheckReport>;
    fn veewedge_rules(&self, rng: &mut SeededRng, trials: usize) -> Vec<CheckReport>;
    fn posnegpart(&self, rng: &mut SeededRng, trials: usize) -> Vec<CheckReport>;
    fn weak_order_unit(&self, rng: &mut SeededRng, trials: usize) -> Vec<CheckReport>;
    fn inverse_ordering(&self, rng: &mut SeededRng, trials: usize) -> Vec<CheckReport>;
    fn approximate_sqrt(&self, rng: &mut SeededRng, trials: usize) -> Vec<CheckReport>;
    fn polynomial_calculus(&self, rng: &mut SeededRng, trials: usize) -> Vec<CheckReport>;
    fn su_equivalence(&self, rng: &mut SeededRng, trials: usize) -> Vec<CheckReport>;
    fn archimedean_sampled(&self, rng: &mut SeededRng, trials: usize) -> Vec<CheckReport>;
    fn pointwise_max(&self, _rng: &mut SeededRng, _trials: usize) -> Option<CheckReport> {
        None
    }
}

macro_rules! generic_runner {
    ($t:ty { $($extra:tt)* }) => {
        impl GenericRunner for $t {
            fn ordersquare(&self, rng: &mut SeededRng, trials: usize) -> Vec<CheckReport> {
                ordersquare(self, rng, trials)
            }
            fn cstar_laws(&self, rng: &mut SeededRng, trials: usize) -> Vec<CheckReport> {
                cstar_laws(self, rng, trials)
            }
            fn csersatz(&self, rng: &mut SeededRng, trials: usize) -> Vec<CheckReport> {
                csersatz(self, rng, trials)
            }
            fn admissible_cone(&self, rng: &mut SeededRng, trials: usize) -> Vec<CheckReport> {
                admissible_cone(self, rng, trials)
            }
            fn radical_square(&self, rng: &mut SeededRng, trials: usize) -> Vec<CheckReport> {
                radical_square(self, rng, trials)
            }
            fn supinf(&self, rng: &mut SeededRng, trials: usize) -> Vec<CheckReport> {
                supinf(self, rng, trials)
            }
            fn veewedge_rules(&self, rng: &mut SeededRng, trials: usize) -> Vec<CheckReport> {
                let mut out = veewedge_rules(self, rng, trials);
                out.extend(self.pointwise_max(rng, trials));
                out
            }
            fn posnegpart(&self, rng: &mut SeededRng, trials: usize) -> Vec<CheckReport> {
                posnegpart(self, rng, trials)
            }
            fn weak_order_unit(&self, rng: &mut SeededRng, trials: usize) -> Vec<CheckReport> {
                weak_order_unit(self, rng, trials)
            }
            fn inverse_ordering(&self, rng: &mut SeededRng, trials: usize) -> Vec<CheckReport> {
                inverse_ordering(self, rng, trials)
            }
            fn approximate_sqrt(&self, rng: &mut SeededRng, trials: usize) -> Vec<CheckReport> {
                approximate_sqrt(self, rng, trials)
            }
            fn polynomial_calculus(&self, rng: &mut SeededRng, trials: usize) -> Vec<CheckReport> {
                polynomial_calculus_suite(self, rng, trials)
            }
            fn su_equivalence(&self, rng: &mut SeededRng, trials: usize) -> Vec<CheckReport> {
                su_equivalence(self, rng, trials)
            }
            fn archimedean_sampled(&self, rng: &mut SeededRng, trials: usize) -> Vec<CheckReport> {
                archimedean_sampled(self, rng, trials)
            }
            $($extra)*
        }
    };
}

generic_runner!(MatrixAlgebra {});
generic_runner!(FunctionAlgebra {
    fn pointwise_max(&self, rng: &mut SeededRng, trials: usize) -> Option<CheckReport> {
        Some(pointwise_max(self, rng, trials))
    }
});

fn run_suite(name: &str, cfg: &SuiteConfig, rng: &mut SeededRng) -> Result<Sections, ConfigError> {
    let sections = match name {
        "admissible-cone" => generic(cfg, rng, |r, g, t| r.admissible_cone(g, t)),
        "approximate-sqrt" => generic(cfg, rng, |r, g, t| r.approximate_sqrt(g, t)),
        "archimedean" => archimedean(cfg, rng),
        "csersatz" => generic(cfg, rng, |r, g, t| r.csersatz(g, t)),
        "cstar-laws" => generic(cfg, rng, |r, g, t| r.cstar_laws(g, t)),
        "dominant" => vec![("matrix".into(), dominant(cfg, rng))],
        "downarrow" => vec![("matrix".into(), downarrow(cfg, rng))],
        "inverse-ordering" => generic(cfg, rng, |r, g, t| r.inverse_ordering(g, t)),
        "morphisms" => morphisms(cfg, rng),
        "ordersquare" => generic(cfg, rng, |r, g, t| r.ordersquare(g, t)),
        "pathologies" => pathologies(cfg, rng),
        "polynomial-calculus" => generic(cfg, rng, |r, g, t| r.polynomial_calculus(g, t)),
        "posnegpart" => generic(cfg, rng, |r, g, t| r.posnegpart(g, t)),
        "radical-square" => generic(cfg, rng, |r, g, t| r.radical_square(g, t)),
        "su-equivalence" => generic(cfg, rng, |r, g, t| r.su_equivalence(g, t)),
        "supinf" => generic(cfg, rng, |r, g, t| r.supinf(g, t)),
        "susconstruct" => vec![("matrix".into(), susconstruct(cfg, rng))],
        "unique-order" => vec![("matrix".into(), unique_order(&matrix_alg(cfg), rng, cfg.trials))],
        "veewedge-rules" => generic(cfg, rng, |r, g, t| r.veewedge_rules(g, t)),
        "weak-order-unit" => generic(cfg, rng, |r, g, t| r.weak_order_unit(g, t)),
        other => return Err(ConfigError::UnknownSuite(other.to_string())),
    };
    Ok(sections)
}

fn norm<A: OrderedStarAlgebra>(alg: &A, a: &A::Element) -> f64 {
    seminorm(alg, a).as_f64()
}

fn leq<A: OrderedStarAlgebra>(alg: &A, a: &A::Element, b: &A::Element) -> bool {
    alg.is_positive(&alg.sub(b, a))
}

fn unit_times<A: StarAlgebra>(alg: &A, x: f64) -> A::Element {
    alg.scalar(Scalar::new(x, 0.0))
}

/// The verdict of `f` if it agrees at `−δ` and `+δ`, otherwise `None`.
fn banded(f: impl Fn(f64) -> bool, delta: f64) -> Option<bool> {
    let lo = f(-delta);
    if lo == f(delta) {
        Some(lo)
    } else {
        None
    }
}

const BAND: f64 = 1e-8;

// ---------------------------------------------------------------- order

pub fn ordersquare<A: Sampling>(alg: &A, rng: &mut SeededRng, trials: usize) -> Vec<CheckReport> {
    let mut eq = Tally::new("order-square-equivalence", "a² ≤ λ²𝟙 ⇔ −λ𝟙 ≤ a ≤ λ𝟙");
    let mut attained = Tally::new("infimum-attained", "a*a ≤ ‖a‖∞²𝟙 and ±h ≤ ‖h‖∞𝟙");
    for _ in 0..trials {
        let a = alg.random_hermitian(rng);
        let n = norm(alg, &a);
        let s = scale(alg, &a);
        let sq = re_part(alg, &alg.mul(&a, &a));
        for factor in [0.5, 0.9, 1.0, 1.1, 2.0] {
            let lambda = factor * n;
            let lhs = banded(|t| leq(alg, &sq, &unit_times(alg, (lambda + t).powi(2))), BAND * s);
            let rhs = banded(
                |t| {
                    let l = unit_times(alg, lambda + t);
                    leq(alg, &alg.scale_real(-1.0, &l), &a) && leq(alg, &a, &l)
                },
                BAND * s,
            );
            match (lhs, rhs) {
                (Some(x), Some(y)) => eq.flag(x == y),
                _ => eq.skip(),
            }
        }
        let b = alg.random_element(rng);
        let nb = norm(alg, &b);
        let bsb = re_part(alg, &alg.mul(&alg.star(&b), &b));
        attained.flag(leq(alg, &bsb, &unit_times(alg, nb * nb)));
        let top = unit_times(alg, n);
        attained.flag(leq(alg, &a, &top) && leq(alg, &alg.scale_real(-1.0, &a), &top));
    }
    vec![eq.finish(), attained.finish()]
}

pub fn cstar_laws<A: Sampling>(alg: &A, rng: &mut SeededRng, trials: usize) -> Vec<CheckReport> {
    let tol = alg.tolerance().tol_eq;
    let mut tri = Tally::new("triangle", "‖a+b‖∞ ≤ ‖a‖∞ + ‖b‖∞");
    let mut sub = Tally::new("submultiplicative", "‖ab‖∞ ≤ ‖a‖∞‖b‖∞");
    let mut cstar = Tally::new("cstar-identity", "‖a*a‖∞ = ‖a‖∞²");
    let mut star = Tally::new("star-isometry", "‖a*‖∞ = ‖a‖∞");
    let mut fast = Tally::new("generic-matches-fast-path", "bisection on a*a ≤ λ²𝟙 equals the backend norm");
    for _ in 0..trials {
        let a = alg.random_element(rng);
        let b = alg.random_element(rng);
        let (na, nb) = (norm(alg, &a), norm(alg, &b));
        let s = na.max(nb).max(1.0);
        tri.bound((norm(alg, &alg.add(&a, &b)) - na - nb).max(0.0) / s, 10.0 * tol);
        sub.bound((norm(alg, &alg.mul(&a, &b)) - na * nb).max(0.0) / (s * s), 10.0 * tol);
        let asa = alg.mul(&alg.star(&a), &a);
        cstar.bound((norm(alg, &asa) - na * na).abs() / (na * na).max(1.0), 1e-6);
        star.bound((norm(alg, &alg.star(&a)) - na).abs() / na.max(1.0), 10.0 * tol);
        let generic = uniform_seminorm(alg, &a).as_f64();
        fast.bound((generic - na).abs() / na.max(1.0), 10.0 * tol);
    }
    vec![tri.finish(), sub.finish(), cstar.finish(), star.finish(), fast.finish()]
}

pub fn csersatz<A: Sampling>(alg: &A, rng: &mut SeededRng, trials: usize) -> Vec<CheckReport> {
    let mut first = Tally::new("weighted-cauchy-schwarz", "a*b + b*a ≤ χ⁻²a*a + χ²b*b");
    let mut second = Tally::new("sandwiched-cauchy-schwarz", "a*cb + b*ca ≤ a*da + b*db for −d ≤ c ≤ d");
    for _ in 0..trials {
        let a = alg.random_element(rng);
        let b = alg.random_element(rng);
        let (sa, sb) = (alg.star(&a), alg.star(&b));
        let cross = re_part(alg, &alg.add(&alg.mul(&sa, &b), &alg.mul(&sb, &a)));
        let asa = alg.mul(&sa, &a);
        let bsb = alg.mul(&sb, &b);
        for chi in [0.5f64, 1.0, 2.0] {
            let rhs = re_part(alg, &alg.add(&alg.scale_real(chi.powi(-2), &asa), &alg.scale_real(chi * chi, &bsb)));
            first.flag(leq(alg, &cross, &rhs));
        }
        let c = alg.random_hermitian(rng);
        let r = alg.random_element(rng);
        let d = match abs(alg, &c) {
            Ok(m) => re_part(alg, &alg.add(&m, &alg.mul(&alg.star(&r), &r))),
            Err(e) => {
                second.fail_with(e);
                continue;
            }
        };
        let lhs = re_part(alg, &alg.add(&alg.mul(&alg.mul(&sa, &c), &b), &alg.mul(&alg.mul(&sb, &c), &a)));
        let rhs = re_part(alg, &alg.add(&alg.mul(&alg.mul(&sa, &d), &a), &alg.mul(&alg.mul(&sb, &d), &b)));
        second.flag(leq(alg, &lhs, &rhs));
    }
    vec![first.finish(), second.finish()]
}

pub fn admissible_cone<A: Sampling>(alg: &A, rng: &mut SeededRng, trials: usize) -> Vec<CheckReport> {
    let mut cone = Tally::new("convex-cone", "λa + μb ≥ 0 for a, b ≥ 0 and λ, μ ≥ 0");
    let mut conj = Tally::new("conjugation", "d*ad ≥ 0 for a ≥ 0");
    let mut unit = Tally::new("unit-positive", "0 ≤ 𝟙");
    let mut squares = Tally::new("hermitian-squares", "d*d ≥ 0 and dd* ≥ 0");
    for _ in 0..trials {
        let a = alg.random_positive(rng);
        let b = alg.random_positive(rng);
        let (l, m) = (rng.uniform_in(0.0, 3.0), rng.uniform_in(0.0, 3.0));
        cone.flag(alg.is_positive(&alg.add(&alg.scale_real(l, &a), &alg.scale_real(m, &b))));
        let d = alg.random_element(rng);
        conj.flag(alg.is_positive(&re_part(alg, &alg.mul(&alg.mul(&alg.star(&d), &a), &d))));
        unit.flag(alg.is_positive(&alg.unit()));
        squares.flag(
            alg.is_positive(&re_part(alg, &alg.mul(&alg.star(&d), &d)))
                && alg.is_positive(&re_part(alg, &alg.mul(&d, &alg.star(&d)))),
        );
    }
    vec![cone.finish(), conj.finish(), unit.finish(), squares.finish()]
}

pub fn radical_square<A: Sampling>(alg: &A, rng: &mut SeededRng, trials: usize) -> Vec<CheckReport> {
    let mut eq = Tally::new("order-square-radical", "b² ≤ a² ⇔ −a ≤ b ≤ a for commuting b and a ≥ 0");
    let mut prod = Tally::new("commuting-products", "ab ≥ 0 for commuting a, b ≥ 0");
    for _ in 0..trials {
        let (x, y) = alg.commuting_pair(rng);
        let a = alg.add_scalar(&re_part(alg, &alg.mul(&x, &x)), Scalar::new(0.05, 0.0));
        let theta = rng.uniform_in(0.0, 1.5) * norm(alg, &a) / norm(alg, &y).max(1e-12);
        let b = alg.scale_real(theta, &y);
        let s = scale(alg, &a).max(scale(alg, &b));
        let b2 = re_part(alg, &alg.mul(&b, &b));
        let lhs = banded(
            |t| {
                let at = alg.add_scalar(&a, Scalar::new(t, 0.0));
                leq(alg, &b2, &re_part(alg, &alg.mul(&at, &at)))
            },
            BAND * s,
        );
        let rhs = banded(
            |t| {
                let at = alg.add_scalar(&a, Scalar::new(t, 0.0));
                leq(alg, &alg.scale_real(-1.0, &at), &b) && leq(alg, &b, &at)
            },
            BAND * s,
        );
        match (lhs, rhs) {
            (Some(l), Some(r)) => eq.flag(l == r),
            _ => eq.skip(),
        }
        let p = re_part(alg, &alg.mul(&y, &y));
        prod.flag(alg.is_positive(&re_part(alg, &alg.mul(&a, &p))));
    }
    vec![eq.finish(), prod.finish()]
}

// ---------------------------------------------------------------- lattice

/// Smallest `μ` on a bisection grid with `a ≤ z + μ𝟙`.
fn lift<A: OrderedStarAlgebra>(alg: &A, z: &A::Element, a: &A::Element) -> f64 {
    let d = alg.sub(a, z);
    let mut hi = norm(alg, &d).max(1e-12);
    let mut lo = -hi;
    for _ in 0..50 {
        let mid = 0.5 * (lo + hi);
        if alg.is_positive(&alg.add_scalar(&alg.scale_real(-1.0, &d), Scalar::new(mid, 0.0))) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    hi
}

pub fn supinf<A: Sampling>(alg: &A, rng: &mut SeededRng, trials: usize) -> Vec<CheckReport> {
    let mut upper = Tally::new("upper-bound", "a ≤ a∨b and b ≤ a∨b");
    let mut least = Tally::new("least-upper-bound", "y ∈ {a,b}′, y ≥ a, y ≥ b ⇒ y ≥ a∨b");
    let mut bicomm = Tally::new("bicommutant", "a∨b ∈ {a,b}″");
    for k in 0..trials {
        let (a, b) = alg.commuting_pair(rng);
        let x = match vee(alg, &a, &b) {
            Ok(x) => x,
            Err(e) => {
                upper.fail_with(e);
                continue;
            }
        };
        upper.flag(leq(alg, &a, &x) && leq(alg, &b, &x));
        let s = scale(alg, &a).max(scale(alg, &b));
        let gens = [a.clone(), b.clone()];
        let count = if k == 0 { 50 } else { 5 };
        for _ in 0..count {
            let z = alg.commutant_sample(&gens, rng);
            let mu = lift(alg, &z, &a).max(lift(alg, &z, &b)) + 1e-9 * s;
            let y = alg.add_scalar(&z, Scalar::new(mu, 0.0));
            least.flag(leq(alg, &x, &y));
        }
        let d = bicommutant_defect(alg, &a, &b, &x, rng, 20);
        bicomm.bound(d, 1e-8);
    }
    vec![upper.finish(), least.finish(), bicomm.finish()]
}

pub fn veewedge_rules<A: Sampling>(alg: &A, rng: &mut SeededRng, trials: usize) -> Vec<CheckReport> {
    let mut defining = Tally::new("defining-equations", "2x ≥ a+b and x² + ab = x(a+b)");
    let mut sum = Tally::new("sum-rule", "(a∨b) + (a∧b) = a + b");
    let mut product = Tally::new("product-rule", "(a∨b)(a∧b) = ab");
    let mut negation = Tally::new("negation-rule", "(−a)∧(−b) = −(a∨b)");
    let mut scaling = Tally::new("scaling-rule", "(λa)∨(λb) = λ(a∨b) for λ ≥ 0");
    let mut translation = Tally::new("translation-rule", "(a+c)∨(b+c) = (a∨b) + c for c ∈ {a,b}′");
    let mut absolute = Tally::new("abs-formula", "|a| = a∨(−a) and a∨b = (a+b+|a−b|)/2");
    let mut symmetry = Tally::new("symmetry-rule", "b∨a = a∨b and b∧a = a∧b");
    for _ in 0..trials {
        let (a, b) = alg.commuting_pair(rng);
        let s = scale(alg, &a).max(scale(alg, &b));
        let tol = 1e-8;
        let run = || -> sustar_core::Result<[f64; 8]> {
            let v = vee(alg, &a, &b)?;
            let w = wedge(alg, &a, &b)?;
            let dv = lattice_defects(alg, &a, &b, &v, true);
            let dw = lattice_defects(alg, &a, &b, &w, false);
            let def = if dv.ok() && dw.ok() {
                dv.equation_defect.max(dw.equation_defect) / (s * s)
            } else {
                f64::INFINITY
            };
            let d_sum = norm(alg, &alg.sub(&alg.add(&v, &w), &alg.add(&a, &b))) / s;
            let d_prod = norm(alg, &alg.sub(&alg.mul(&v, &w), &alg.mul(&a, &b))) / (s * s);
            let nw = wedge(alg, &alg.scale_real(-1.0, &a), &alg.scale_real(-1.0, &b))?;
            let d_neg = norm(alg, &alg.add(&nw, &v)) / s;
            let lambda = rng_lambda(&a, &b);
            let sv = vee(alg, &alg.scale_real(lambda, &a), &alg.scale_real(lambda, &b))?;
            let d_scale = norm(alg, &alg.sub(&sv, &alg.scale_real(lambda, &v))) / (s * lambda.max(1.0));
            let m = abs(alg, &a)?;
            let va = vee(alg, &a, &alg.scale_real(-1.0, &a))?;
            let d_abs = norm(alg, &alg.sub(&m, &va)) / s;
            let mab = abs(alg, &alg.sub(&a, &b))?;
            let formula = alg.scale_real(0.5, &alg.add(&alg.add(&a, &b), &mab));
            let d_formula = norm(alg, &alg.sub(&formula, &v)) / s;
            let d_sym = norm(alg, &alg.sub(&vee(alg, &b, &a)?, &v)).max(norm(alg, &alg.sub(&wedge(alg, &b, &a)?, &w))) / s;
            Ok([def, d_sum, d_prod, d_neg, d_scale, d_abs, d_formula, d_sym])
        };
        match run() {
            Ok(d) => {
                defining.bound(d[0], 100.0 * alg.tolerance().tol_eq);
                sum.bound(d[1], tol);
                product.bound(d[2], tol);
                negation.bound(d[3], tol);
                scaling.bound(d[4], tol);
                absolute.bound(d[5].max(d[6]), tol);
                symmetry.bound(d[7], tol);
            }
            Err(e) => {
                defining.fail_with(e);
                continue;
            }
        }
        let c = alg.commutant_sample(&[a.clone(), b.clone()], rng);
        let shifted = vee(alg, &alg.add(&a, &c), &alg.add(&b, &c)).and_then(|l| {
            let r = alg.add(&vee(alg, &a, &b)?, &c);
            Ok(norm(alg, &alg.sub(&l, &r)) / s.max(scale(alg, &c)))
        });
        match shifted {
            Ok(d) => translation.bound(d, tol),
            Err(e) => translation.fail_with(e),
        }
    }
    vec![
        defining.finish(),
        sum.finish(),
        product.finish(),
        negation.finish(),
        scaling.finish(),
        translation.finish(),
        absolute.finish(),
        symmetry.finish(),
    ]
}

/// Deterministic scaling factor in `[0, 3)` derived from the pair.
fn rng_lambda<E: std::fmt::Debug>(a: &E, b: &E) -> f64 {
    let h = format!("{a:?}{b:?}")
        .bytes()
        .fold(0u64, |h, x| h.wrapping_mul(31).wrapping_add(x as u64));
    (h % 3000) as f64 / 1000.0
}

fn pointwise_max(alg: &FunctionAlgebra, rng: &mut SeededRng, trials: usize) -> CheckReport {
    let mut t = Tally::new("pointwise-max", "on functions a∨b is the pointwise maximum");
    for _ in 0..trials {
        let (f, g) = alg.commuting_pair(rng);
        match vee(alg, &f, &g) {
            Ok(v) => {
                let d = v
                    .iter()
                    .zip(f.iter().zip(&g))
                    .map(|(x, (p, q))| (x - Scalar::new(p.re.max(q.re), 0.0)).norm())
                    .fold(0.0, f64::max);
                t.bound(d, 1e-12);
            }
            Err(e) => t.fail_with(e),
        }
    }
    t.finish()
}

pub fn posnegpart<A: Sampling>(alg: &A, rng: &mut SeededRng, trials: usize) -> Vec<CheckReport> {
    let mut positive = Tally::new("parts-positive", "a₊ ≥ 0 and a₋ ≥ 0");
    let mut difference = Tally::new("parts-difference", "a₊ − a₋ = a");
    let mut orth = Tally::new("parts-orthogonal", "a₊a₋ = a₋a₊ = 0");
    let mut fixed = Tally::new("positive-fixed", "a ≥ 0 ⇒ a₊ = a, a₋ = 0");
    for _ in 0..trials {
        let a = alg.random_hermitian(rng);
        let s = scale(alg, &a);
        match pos_part(alg, &a).and_then(|p| Ok((p, neg_part(alg, &a)?))) {
            Ok((p, n)) => {
                positive.flag(alg.is_positive(&p) && alg.is_positive(&n));
                difference.bound(norm(alg, &alg.sub(&alg.sub(&p, &n), &a)) / s, 1e-8);
                let d = norm(alg, &alg.mul(&p, &n)).max(norm(alg, &alg.mul(&n, &p)));
                orth.bound(d / s, 1e-8);
            }
            Err(e) => positive.fail_with(e),
        }
        let q = alg.random_positive(rng);
        let sq = scale(alg, &q);
        match pos_part(alg, &q).and_then(|p| Ok((p, neg_part(alg, &q)?))) {
            // Near-singular inputs take the shifted root, accurate to about √tol_pos.
            Ok((p, n)) => fixed.bound(
                norm(alg, &alg.sub(&p, &q)).max(norm(alg, &n)) / sq,
                4.0 * alg.tolerance().tol_pos.sqrt(),
            ),
            Err(e) => fixed.fail_with(e),
        }
    }
    vec![positive.finish(), difference.finish(), orth.finish(), fixed.finish()]
}

pub fn weak_order_unit<A: Sampling>(alg: &A, rng: &mut SeededRng, trials: usize) -> Vec<CheckReport> {
    let mut t = Tally::new("weak-order-unit", "a ≤ (a∧λ𝟙) + a²/(4λ)");
    for _ in 0..trials {
        let a = alg.scale_real(rng.uniform_in(0.5, 12.0), &alg.random_hermitian(rng));
        let sq = re_part(alg, &alg.mul(&a, &a));
        for lambda in [1.0, 2.0, 10.0] {
            match wedge(alg, &a, &unit_times(alg, lambda)) {
                Ok(w) => {
                    let rhs = alg.add(&w, &alg.scale_real(0.25 / lambda, &sq));
                    t.flag(leq(alg, &a, &rhs));
                }
                Err(e) => t.fail_with(e),
            }
        }
    }
    vec![t.finish()]
}

// ---------------------------------------------------------------- inverses and roots

pub fn inverse_ordering<A: Sampling>(alg: &A, rng: &mut SeededRng, trials: usize) -> Vec<CheckReport> {
    let mut defect = Tally::new("inverse-defect", "a·a⁻¹ = 𝟙");
    let mut bound = Tally::new("inverse-norm-bound", "a ≥ ε𝟙 ⇒ ‖a⁻¹‖∞ ≤ 1/ε");
    let mut antitone = Tally::new("inverse-antitone", "0 ≤ a ≤ b commuting and invertible ⇒ b⁻¹ ≤ a⁻¹");
    let mut limit = Tally::new("truncation-limit", "a⁻¹ = lim (a∧n𝟙)⁻¹");
    for _ in 0..trials {
        let eps = rng.uniform_in(0.05, 1.0);
        let a = alg.random_coercive(rng, eps);
        match inverse_coercive(alg, &a) {
            Ok(r) => {
                defect.bound(r.defect, 1e-8);
                bound.bound((r.result_norm - 1.0 / r.witness).max(0.0), 1e-6);
                match inverse_by_truncation(alg, &a) {
                    Ok(t) => limit.bound(norm(alg, &alg.sub(&t.result, &r.result)) / r.result_norm.max(1.0), 1e-8),
                    Err(e) => limit.fail_with(e),
                }
            }
            Err(e) => defect.fail_with(e),
        }
        let (x, y) = alg.commuting_pair(rng);
        let p = alg.add_scalar(&re_part(alg, &alg.mul(&x, &x)), Scalar::new(0.1, 0.0));
        let q = alg.add(&p, &re_part(alg, &alg.mul(&y, &y)));
        match inverse_coercive(alg, &p).and_then(|ip| Ok((ip.result, inverse_coercive(alg, &q)?.result))) {
            Ok((ip, iq)) => antitone.flag(leq(alg, &re_part(alg, &iq), &re_part(alg, &ip))),
            Err(e) => antitone.fail_with(e),
        }
    }
    vec![defect.finish(), bound.finish(), antitone.finish(), limit.finish()]
}

pub fn approximate_sqrt<A: Sampling>(alg: &A, rng: &mut SeededRng, trials: usize) -> Vec<CheckReport> {
    let mut stages = Tally::new("approximant-bounds", "0 ≤ qₙ(a) ≤ 𝟙/n with a + qₙ(a) = pₙ(a)²");
    let mut residual = Tally::new("root-residual", "(√a)² = a");
    let mut positive = Tally::new("root-positive", "√a ≥ 0");
    let mut commuting = Tally::new("root-commutes", "√a ∈ {a}″");
    for _ in 0..trials {
        let a = alg.random_positive(rng);
        let s = scale(alg, &a);
        match sqrt_bounded(alg, &a) {
            Ok(r) => {
                for st in &r.stages {
                    let band = unit_times(alg, 1.0 / st.n as f64 + BAND);
                    let ok = alg.is_positive(&st.q) && leq(alg, &st.q, &band);
                    stages.record(ok, st.residual);
                }
                residual.bound(r.residual / s, 1e-8);
                positive.flag(alg.is_positive(&r.result));
                commuting.bound(r.commutant_defect / (s * s), 1e-8);
            }
            Err(e) => residual.fail_with(e),
        }
    }
    vec![stages.finish(), residual.finish(), positive.finish(), commuting.finish()]
}

pub fn polynomial_calculus_suite<A: Sampling>(alg: &A, rng: &mut SeededRng, trials: usize) -> Vec<CheckReport> {
    let mut t = Tally::new("positivity-transfer", "q ≥ 0 on {pₘ ≥ 0} and pₘ(a) ≥ 0 ⇒ q(a) ≥ 0");
    let mut sq = Tally::new("squares-positive", "q = x² gives q(a) ≥ 0");
    let q = RealPolynomial::from_terms(2, [(vec![1, 2], 1.0)]).expect("two variables");
    let p1 = RealPolynomial::variable(2, 0);
    let samples: Vec<Vec<f64>> = (0..21)
        .flat_map(|i| (0..21).map(move |j| vec![i as f64 * 0.25 - 2.5, j as f64 * 0.25 - 2.5]))
        .collect();
    let square = RealPolynomial::univariate(&[0.0, 0.0, 1.0]);
    for _ in 0..trials {
        let (x, y) = alg.commuting_pair(rng);
        let a1 = re_part(alg, &alg.mul(&x, &x));
        match positivity_companion(alg, &q, std::slice::from_ref(&p1), &[a1, y.clone()], &samples) {
            Ok(c) => t.flag(c.holds() && c.value_positive),
            Err(e) => t.fail_with(e),
        }
        match sustar_core::suops::polynomial_calculus(alg, &square, &[y]) {
            Ok(v) => sq.flag(alg.is_positive(&v)),
            Err(e) => sq.fail_with(e),
        }
    }
    vec![t.finish(), sq.finish()]
}

pub fn su_equivalence<A: Sampling>(alg: &A, rng: &mut SeededRng, trials: usize) -> Vec<CheckReport> {
    su_probe(alg, rng, trials)
        .into_iter()
        .map(|tally| capability_report(&tally, ""))
        .collect()
}

fn capability_report(tally: &sustar_core::suops::CapabilityTally, prefix: &str) -> CheckReport {
    let anchor = match tally.capability {
        sustar_core::suops::Capability::ShiftedInverse => "a ± i𝟙 invertible for Hermitian a",
        sustar_core::suops::Capability::CoerciveInverse => "coercive Hermitian elements are invertible",
        sustar_core::suops::Capability::SquareRoot => "positive elements have square roots",
        sustar_core::suops::Capability::AbsoluteValue => "Hermitian elements have absolute values",
        sustar_core::suops::Capability::Lattice => "commuting Hermitian pairs have a∨b and a∧b",
        sustar_core::suops::Capability::WedgeWithUnit => "a∧𝟙 exists for coercive a",
    };
    let mut t = Tally::new(&format!("{prefix}{}", tally.capability.name()), anchor);
    t.trials = tally.trials;
    t.failures = tally.failures;
    t.worst_defect = tally.worst_defect;
    t.note = tally.first_error.as_ref().map(|e| format!("{e:?}"));
    t.finish()
}

// ---------------------------------------------------------------- structure

fn archimedean_sampled<A: Sampling>(alg: &A, rng: &mut SeededRng, trials: usize) -> Vec<CheckReport> {
    let grid = [1.0, 1e-3, 1e-6, 1e-9];
    let mut t = Tally::new("sampled-archimedean", "v ≤ εw for all sampled ε ⇒ v ≤ 0");
    for k in 0..trials {
        let w = alg.random_positive(rng);
        let p = alg.random_positive(rng);
        let v = if k % 2 == 0 {
            alg.scale_real(-1.0, &p)
        } else {
            alg.sub(&alg.scale_real(0.5, &w), &p)
        };
        let premise = grid.iter().all(|e| leq(alg, &v, &alg.scale_real(*e, &w)));
        let conclusion = alg.is_positive(&alg.scale_real(-1.0, &v));
        t.flag(!premise || conclusion);
    }
    vec![t.finish()]
}

fn archimedean(cfg: &SuiteConfig, rng: &mut SeededRng) -> Sections {
    let ptlg = UpperTriangular::new(cfg.tolerance(), 0.0);
    let grid = [1.0, 1e-3, 1e-6, 1e-9];
    let (per, zero) = ptlg.archimedean_probe(&grid);
    let mut t = Tally::new(
        "nilpotent-archimedean",
        "M(0,1) ≤ εM(1,0) for every ε yet M(0,1) ≰ 0",
    )
    .expect_failure();
    for ok in &per {
        // The property fails on this ε when the premise holds and the conclusion does not.
        t.flag(!(*ok && !zero));
    }
    let mut out = vec![("ptlg".to_string(), vec![t.finish()])];
    match cfg.backend {
        Backend::Matrix => out.push(("matrix".into(), archimedean_sampled(&matrix_alg(cfg), rng, cfg.trials))),
        Backend::Function => out.push(("function".into(), archimedean_sampled(&function_alg(cfg), rng, cfg.trials))),
        Backend::Ptlg => {}
    }
    out
}

fn pathologies(cfg: &SuiteConfig, rng: &mut SeededRng) -> Sections {
    let mut twisted = Tally::new("twisted-circle-certificate", "−𝟙 = id*·id");
    match TwistedCircle::new(cfg.dim.max(2)) {
        Ok(alg) => {
            let id = alg.identity_function();
            let cert = GenPosCertificate::new(vec![(alg.unit(), id)]);
            match verify_genpos_certificate(&alg, &alg.scale_real(-1.0, &alg.unit()), &cert) {
                Ok(ok) => twisted.flag(ok),
                Err(e) => twisted.fail_with(e),
            }
        }
        Err(e) => twisted.fail_with(e),
    }
    let ptlg = UpperTriangular::new(cfg.tolerance(), 0.0);
    let n = ptlg.nilpotent();
    let mut square = Tally::new("nilpotent-square", "M(0,1)² = 0");
    square.flag(ptlg.mul(&n, &n) == ptlg.zero());
    let mut null = Tally::new("nilpotent-seminorm", "‖M(0,1)‖∞ = 0 with M(0,1) ≠ 0");
    let nn = norm(&ptlg, &n);
    null.record(nn == 0.0 && n != ptlg.zero(), nn);
    let mut generic_null = Tally::new("nilpotent-generic-seminorm", "bisection finds ‖M(0,1)‖∞ = 0");
    let g = uniform_seminorm(&ptlg, &n).as_f64();
    generic_null.bound(g, 1e-9);

    let mut poly = Tally::new("polynomial-boundedness", "x is unbounded on a wide grid; the constant 5 has norm 5");
    let samples: Vec<Vec<f64>> = (0..=64).map(|k| vec![-(2f64.powi(40)) + k as f64 * 2f64.powi(35)]).collect();
    match make_polynomial_algebra(1, &samples) {
        Ok(alg) => {
            let x = alg.variable(0);
            let five = alg.scalar(Scalar::new(5.0, 0.0));
            poly.flag(!is_uniformly_bounded(&alg, &alg.mul(&x, &x)) || !is_uniformly_bounded(&alg, &x));
            poly.bound((norm(&alg, &five) - 5.0).abs(), 1e-9);
        }
        Err(e) => poly.fail_with(e),
    }

    let alg = matrix_alg(cfg);
    let mut nilherm = Tally::new("hermitian-nilpotent-vanishes", "Hermitian aᵏ ≈ 0 forces a ≈ 0");
    for _ in 0..cfg.trials {
        let tiny = rng.uniform_in(1e-6, 1e-3);
        let a = alg.scale_real(tiny, &alg.random_hermitian(rng));
        let s = scale(&alg, &a);
        let mut p = a.clone();
        for k in 2..=cfg.dim.max(2) {
            p = alg.mul(&p, &a);
            let pk = norm(&alg, &p);
            if pk <= 1e-10 {
                let bound = (1e-10f64).powf(1.0 / k as f64) * s;
                nilherm.bound(norm(&alg, &a) / bound, 1.0 + 1e-6);
                break;
            }
        }
    }
    if nilherm.trials == 0 {
        nilherm.flag(true);
    }
    vec![
        ("twisted-circle".into(), vec![twisted.finish()]),
        ("ptlg".into(), vec![square.finish(), null.finish(), generic_null.finish()]),
        ("polynomial".into(), vec![poly.finish()]),
        ("matrix".into(), vec![nilherm.finish()]),
    ]
}

fn unique_order(alg: &MatrixAlgebra, rng: &mut SeededRng, trials: usize) -> Vec<CheckReport> {
    let mut roots = Tally::new("root-certificate", "a ≥ 0 ⇒ a = √a*·𝟙·√a");
    let mut sums = Tally::new("certificate-sums-positive", "Σ aₙ* gₙ aₙ ≥ 0 for gₙ ≥ 0");
    for _ in 0..trials {
        let a = alg.random_positive(rng);
        match sqrt_bounded(alg, &a) {
            Ok(r) => {
                let cert = GenPosCertificate::new(vec![(alg.unit(), r.result)]);
                match verify_genpos_certificate(alg, &a, &cert) {
                    Ok(ok) => roots.flag(ok),
                    Err(e) => roots.fail_with(e),
                }
            }
            Err(e) => roots.fail_with(e),
        }
        let terms: Vec<(Matrix, Matrix)> = (0..3)
            .map(|k| {
                let g = if k == 0 { alg.unit() } else { alg.random_positive(rng) };
                (g, alg.random_element(rng))
            })
            .collect();
        let total = terms.iter().fold(alg.zero(), |acc, (g, x)| acc.add(&x.adjoint().mul(g).mul(x)));
        let total = total.hermitian_part();
        match verify_genpos_certificate(alg, &total, &GenPosCertificate::new(terms)) {
            Ok(ok) => sums.flag(ok && alg.is_positive(&total)),
            Err(e) => sums.fail_with(e),
        }
    }
    vec![roots.finish(), sums.finish()]
}

// ---------------------------------------------------------------- morphisms

struct MorphismTallies {
    abs: Tally,
    sqrt: Tally,
    vee: Tally,
    embedding: Tally,
}

impl MorphismTallies {
    fn new(label: &str) -> Self {
        MorphismTallies {
            abs: Tally::new(&format!("{label}-abs"), "Ψ(|a|) = |Ψ(a)|"),
            sqrt: Tally::new(&format!("{label}-sqrt"), "Ψ(√a) = √Ψ(a)"),
            vee: Tally::new(&format!("{label}-vee"), "Ψ(a∨b) = Ψ(a)∨Ψ(b)"),
            embedding: Tally::new(&format!("{label}-order-embedding"), "Ψ(a) ≥ 0 ⇒ a ≥ 0 for injective Ψ"),
        }
    }

    fn finish(self, injective: bool) -> Vec<CheckReport> {
        let mut out = vec![self.abs.finish(), self.sqrt.finish(), self.vee.finish()];
        if injective {
            out.push(self.embedding.finish());
        }
        out
    }
}

fn check_morphism<M>(m: &M, rng: &mut SeededRng, t: &mut MorphismTallies)
where
    M: StarMorphism,
    M::Source: Sampling,
    M::Target: OrderedStarAlgebra,
{
    let (src, dst) = (m.source(), m.target());
    let a = src.random_hermitian(rng);
    let s = scale(src, &a);
    match abs(src, &a).and_then(|x| Ok((m.apply(&x), abs(dst, &m.apply(&a))?))) {
        Ok((l, r)) => t.abs.bound(norm(dst, &dst.sub(&l, &r)) / s, 1e-6),
        Err(e) => t.abs.fail_with(e),
    }
    let p = src.random_positive(rng);
    let sp = scale(src, &p);
    match sqrt_bounded(src, &p).and_then(|x| Ok((m.apply(&x.result), sqrt_bounded(dst, &m.apply(&p))?.result))) {
        Ok((l, r)) => t.sqrt.bound(norm(dst, &dst.sub(&l, &r)) / sp.sqrt().max(1.0), 1e-6),
        Err(e) => t.sqrt.fail_with(e),
    }
    let (x, y) = src.commuting_pair(rng);
    let sx = scale(src, &x).max(scale(src, &y));
    match vee(src, &x, &y).and_then(|v| Ok((m.apply(&v), vee(dst, &m.apply(&x), &m.apply(&y))?))) {
        Ok((l, r)) => t.vee.bound(norm(dst, &dst.sub(&l, &r)) / sx, 1e-6),
        Err(e) => t.vee.fail_with(e),
    }
    if m.is_injective() {
        let shift = rng.uniform_in(-0.2, 0.2);
        let c = src.add_scalar(&src.random_positive(rng), Scalar::new(shift, 0.0));
        let image = dst.is_positive(&m.apply(&c));
        t.embedding.flag(!image || src.is_positive(&c));
    }
}

fn morphisms(cfg: &SuiteConfig, rng: &mut SeededRng) -> Sections {
    let alg = matrix_alg(cfg);
    let u = rng.unitary(cfg.dim);
    let conj = UnitaryConjugation::new(alg, u).expect("unitary from the sampler");
    let mut tc = MorphismTallies::new("unitary-conjugation");
    let fun = function_alg(cfg);
    let keep: Vec<usize> = (0..cfg.dim).filter(|i| i % 2 == 0).collect();
    let restr = Restriction::new(fun.clone(), keep).expect("indices in range");
    let mut tr = MorphismTallies::new("restriction");
    let emb = DiagonalEmbedding::new(fun).expect("non-empty");
    let mut te = MorphismTallies::new("diagonal-embedding");
    for _ in 0..cfg.trials {
        check_morphism(&conj, rng, &mut tc);
        check_morphism(&restr, rng, &mut tr);
        check_morphism(&emb, rng, &mut te);
    }
    vec![
        ("matrix".into(), tc.finish(conj.is_injective())),
        ("function".into(), tr.finish(restr.is_injective())),
        ("function-to-matrix".into(), te.finish(emb.is_injective())),
    ]
}

// ---------------------------------------------------------------- dominated

/// Block-diagonal element whose k-th 2 × 2 block has norm at most the k-th eigenvalue pair.
pub fn block_member(h: &HamiltonianSpec, rng: &mut SeededRng) -> Matrix {
    let d = h.max_dim();
    let mut a = Matrix::zeros(d);
    for k in 0..d / 2 {
        let b = rng.gaussian_matrix(2);
        let b = b.scale_real(h.eigenvalues[2 * k] * rng.uniform_in(0.2, 1.0) / b.spectral_norm());
        for i in 0..2 {
            for j in 0..2 {
                a[(2 * k + i, 2 * k + j)] = b[(i, j)];
            }
        }
    }
    a
}

fn refined_sup(a: &Matrix, rng: &mut SeededRng, count: usize) -> f64 {
    let asa = a.adjoint().mul(a);
    let mut best: f64 = 0.0;
    for _ in 0..count {
        let mut v = rng.unit_vector(a.dim());
        for _ in 0..60 {
            let w = asa.mul_vec(&v);
            let n = vec_norm(&w);
            if n == 0.0 {
                break;
            }
            v = w.iter().map(|x| x / n).collect();
        }
        best = best.max(vec_norm(&a.mul_vec(&v)));
    }
    best
}

fn dominant(cfg: &SuiteConfig, rng: &mut SeededRng) -> Vec<CheckReport> {
    let dim = cfg.dim;
    let alg = matrix_alg(cfg);
    let mut product = Tally::new("dominant-product-bound", "q*q + r*r ≤ λ²q*r*rq with λ = √(2/ε)");
    let mut vectors = Tally::new("seminorm-vs-vectors", "‖a‖∞ = sup over unit ξ of ‖aξ‖");
    let mut oracle = Tally::new("seminorm-vs-singular-values", "‖a‖∞ equals the largest singular value");
    for _ in 0..cfg.trials {
        let u = rng.unitary(dim);
        let diag = |rng: &mut SeededRng| -> Vec<Scalar> {
            (0..dim)
                .map(|_| Scalar::from_polar(rng.uniform_in(0.2, 3.0), rng.uniform_in(0.0, std::f64::consts::TAU)))
                .collect()
        };
        let q = u.mul(&Matrix::from_diagonal(&diag(rng))).mul(&u.adjoint());
        let r = u.mul(&Matrix::from_diagonal(&diag(rng))).mul(&u.adjoint());
        match dominant_product_bound(&q, &r) {
            Ok(b) => product.record(b.holds, (-b.margin).max(0.0)),
            Err(e) => product.fail_with(e),
        }
        let a = alg.random_element(rng);
        let generic = uniform_seminorm(&alg, &a).as_f64();
        let sampled = refined_sup(&a, rng, 200);
        vectors.bound((generic - sampled).abs(), 1e-4);
        let svd = a.spectral_norm();
        oracle.bound((generic - svd).abs() / svd.max(1.0), 10.0 * alg.tolerance().tol_eq);
    }
    vec![product.finish(), vectors.finish(), oracle.finish()]
}

fn demo_setup() -> (HamiltonianSpec, TruncationTower, DominantSetSpec) {
    let h = HamiltonianSpec::demo();
    let tower = TruncationTower::new(&h).expect("demo tower");
    let q = DominantSetSpec::new(h.matrix(h.max_dim()));
    (h, tower, q)
}

fn downarrow(cfg: &SuiteConfig, rng: &mut SeededRng) -> Vec<CheckReport> {
    let (h, tower, q) = demo_setup();
    let mut unit = Tally::new("unit-member", "𝟙 ∈ Q↓ with witness (0, 1)");
    let one = tower.realize(&Matrix::identity(h.max_dim())).expect("sized");
    unit.flag(in_downarrow(&one, &q, &tower).witness == Some((0, 1.0)));

    let mut blocks = Tally::new("block-member", "block-diagonal a with ‖a_k‖ ≤ k has witness (1, 1)");
    let mut symmetric = Tally::new("star-symmetry", "a ∈ Q↓ ⇔ a* ∈ Q↓");
    let mut monotone = Tally::new("witness-monotone", "(n, λ) witnesses ⇒ (n′, λ′) witnesses for n′ ≥ n, λ′ ≥ λ");
    for _ in 0..cfg.trials {
        let a = block_member(&h, rng);
        let parts = tower.realize(&a).expect("sized");
        let m = in_downarrow(&parts, &q, &tower);
        blocks.flag(m.witness == Some((1, 1.0)));
        let s = in_downarrow(&tower.realize(&a.adjoint()).expect("sized"), &q, &tower);
        symmetric.flag(s.member == m.member && s.witness == m.witness);
        if let Some((n, lambda)) = m.witness {
            monotone.flag(
                witness_holds(&parts, &q, &tower, n + 1, lambda) && witness_holds(&parts, &q, &tower, n, 2.0 * lambda),
            );
        }
    }

    let mut shift = Tally::new("shift-rejected", "off-diagonal shift is outside {h}′ for distinct eigenvalues");
    let distinct = HamiltonianSpec::new((1..=16).map(|k| k as f64).collect(), vec![4, 8, 16]).expect("valid");
    let dtower = TruncationTower::new(&distinct).expect("valid");
    let dq = DominantSetSpec::new(distinct.matrix(16));
    let mut sh = Matrix::zeros(16);
    for i in 0..15 {
        sh[(i + 1, i)] = Scalar::new(1.0, 0.0);
    }
    shift.flag(!in_downarrow(&dtower.realize(&sh).expect("sized"), &dq, &dtower).member);

    let mut closure = Tally::new("subalgebra-closure", "Q↓ is a unital *-subalgebra");
    match downarrow_subalgebra_probe(&q, &tower, rng, cfg.trials.min(20)) {
        Ok(checks) => {
            for c in checks {
                closure.record(c.failures == 0, c.max_power as f64);
            }
        }
        Err(e) => closure.fail_with(e),
    }

    let mut validation = Tally::new("generator-validation", "q normal with q*q coercive");
    validation.flag(validate_dominant_set(&DominantSetSpec::new(Matrix::identity(4)), 4).is_ok());
    validation.flag(validate_dominant_set(&DominantSetSpec::new(Matrix::from_real_diagonal(&[1.0, 2.0, 3.0, 4.0])), 4).is_ok());
    let nil = Matrix::from_real_rows(&[&[0.0, 1.0], &[0.0, 0.0]]).expect("square");
    validation.flag(validate_dominant_set(&DominantSetSpec::new(nil), 2).is_err());
    validation.flag(
        validate_dominant_set(&DominantSetSpec::new(Matrix::from_real_diagonal(&[0.0, 1.0])), 2)
            == Err(sustar_core::Error::NotCoercive),
    );

    let mut graph = Tally::new("graph-seminorm", "‖ξ‖_a = ⟨ξ, aξ⟩^½");
    let alg = MatrixAlgebra::new(8, cfg.tolerance()).expect("dim 8");
    for _ in 0..cfg.trials {
        let a = alg.random_positive(rng);
        let xi = rng.gaussian_vector(8);
        match graph_seminorm(&xi, &a) {
            Ok(v) => {
                let direct = inner(&xi, &a.mul_vec(&xi)).re.max(0.0).sqrt();
                graph.bound((v - direct).abs(), 1e-10);
            }
            Err(e) => graph.fail_with(e),
        }
    }
    vec![
        unit.finish(),
        blocks.finish(),
        symmetric.finish(),
        monotone.finish(),
        shift.finish(),
        closure.finish(),
        validation.finish(),
        graph.finish(),
    ]
}

fn susconstruct(cfg: &SuiteConfig, rng: &mut SeededRng) -> Vec<CheckReport> {
    let (_, tower, q) = demo_setup();
    let mut out = Vec::new();
    match susconstruct_probe(&q, &tower, rng, cfg.trials) {
        Ok(r) => {
            out.extend(r.capabilities.iter().map(|t| capability_report(t, "member-")));
            let mut cof = Tally::new("cofinality", "each ‖·‖_b is dominated by some ‖·‖ of a power of q*q");
            cof.trials = r.cofinality.trials;
            cof.failures = r.cofinality.failures;
            cof.worst_defect = r.cofinality.max_power as f64;
            out.push(cof.finish());
        }
        Err(e) => {
            let mut t = Tally::new("member-capabilities", "Q↓ is complete and symmetric when Q is invertible");
            t.fail_with(e);
            out.push(t.finish());
        }
    }
    let mut refuse = Tally::new("singular-generator-refused", "the probe needs an invertible generator");
    let mut sing = Matrix::identity(tower.max_dim());
    sing[(0, 0)] = Scalar::new(0.0, 0.0);
    refuse.flag(matches!(
        susconstruct_probe(&DominantSetSpec::new(sing), &tower, rng, 1),
        Err(sustar_core::Error::GeneratorNotInvertible { .. })
    ));
    out.push(refuse.finish());
    let mut unit = Tally::new("unit-generator", "Q = {λ𝟙} gives the full matrix algebra");
    let one = DominantSetSpec::new(Matrix::identity(tower.max_dim()));
    let member = sample_member(&one, &tower, rng, 0);
    unit.flag(commutes(tower.largest(), &member, &Matrix::identity(tower.max_dim())));
    match susconstruct_probe(&one, &tower, rng, cfg.trials.min(5)) {
        Ok(r) => unit.flag(r.passed()),
        Err(e) => unit.fail_with(e),
    }
    out.push(unit.finish());
    out
}
