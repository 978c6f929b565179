//! Acceptance criteria, one line per criterion.
//!
//! Reference values come from nalgebra's Hermitian eigensolver and SVD.

use std::process::ExitCode;
use std::time::Instant;

use nalgebra::{Complex, DMatrix, SymmetricEigen};
use sustar::{run, Status, SuiteConfig};
use sustar_core::backends::{
    verify_genpos_certificate, DiagonalEmbedding, FunctionAlgebra, GenPosCertificate, MatrixAlgebra, Restriction,
    Sampling, StarMorphism, TwistedCircle, UnitaryConjugation, UpperTriangular,
};
use sustar_core::dominated::{
    in_downarrow, susconstruct_probe, validate_dominant_set, DominantSetSpec, HamiltonianSpec, TruncationTower,
};
use sustar_core::ordered::{scale, uniform_seminorm};
use sustar_core::random::SeededRng;
use sustar_core::suops::{
    abs, inverse_coercive, lattice_defects, neg_part, pos_part, sqrt_bounded, su_probe, vee, wedge,
};
use sustar_core::{Error, Matrix, OrderedStarAlgebra, Scalar, StarAlgebra, TolerancePolicy};

type Na = DMatrix<Complex<f64>>;

fn na(m: &Matrix) -> Na {
    let n = m.dim();
    DMatrix::from_fn(n, n, |i, j| Complex::new(m[(i, j)].re, m[(i, j)].im))
}

fn op_norm(m: &Na) -> f64 {
    if m.is_empty() {
        return 0.0;
    }
    m.clone().svd(false, false).singular_values.max()
}

fn hermitian(m: &Na) -> Na {
    (m + m.adjoint()) * Complex::new(0.5, 0.0)
}

fn eig(m: &Na) -> SymmetricEigen<Complex<f64>, nalgebra::Dyn> {
    SymmetricEigen::new(hermitian(m))
}

fn min_eig(m: &Na) -> f64 {
    eig(m).eigenvalues.min()
}

fn max_eig(m: &Na) -> f64 {
    eig(m).eigenvalues.max()
}

/// `V·diag(f(λ))·V*` for the Hermitian part of `m`.
fn spectral(m: &Na, f: impl Fn(f64) -> f64) -> Na {
    let e = eig(m);
    let d = DMatrix::from_diagonal(&e.eigenvalues.map(|x| Complex::new(f(x), 0.0)));
    &e.eigenvectors * d * e.eigenvectors.adjoint()
}

fn psd_ok(m: &Na, tol_pos: f64) -> bool {
    min_eig(m) >= -tol_pos * (1.0 + op_norm(m))
}

fn identity(n: usize) -> Na {
    DMatrix::identity(n, n)
}

/// PSD sample; every third one has a kernel.
fn psd_sample(rng: &mut SeededRng, i: usize) -> Matrix {
    let dim = 1 + i % 8;
    if i % 3 == 0 {
        let d: Vec<f64> = (0..dim)
            .map(|k| if k % 2 == 0 { 0.0 } else { rng.uniform_in(0.0, 5.0) })
            .collect();
        rng.conjugated_pair(&d, &d).0
    } else {
        rng.psd(dim).scale_real(rng.uniform_in(0.1, 10.0))
    }
}

struct Outcome {
    ok: bool,
    detail: String,
}

impl Outcome {
    fn new(ok: bool, detail: impl Into<String>) -> Self {
        Outcome {
            ok,
            detail: detail.into(),
        }
    }
}

#[derive(Default)]
struct Worst {
    value: f64,
    failures: usize,
    trials: usize,
}

impl Worst {
    fn check(&mut self, defect: f64, bound: f64) {
        self.trials += 1;
        if !(defect <= bound) {
            self.failures += 1;
        }
        if defect.is_finite() {
            self.value = self.value.max(defect);
        }
    }

    fn flag(&mut self, ok: bool) {
        self.check(if ok { 0.0 } else { f64::INFINITY }, 0.0);
    }

    fn ok(&self) -> bool {
        self.failures == 0 && self.trials > 0
    }

    fn show(&self, label: &str) -> String {
        format!("{label} {}/{} worst {:.2e}", self.trials - self.failures, self.trials, self.value)
    }
}

fn alg(dim: usize) -> MatrixAlgebra {
    MatrixAlgebra::new(dim, TolerancePolicy::default()).expect("dim ≥ 1")
}

fn square_root_correctness() -> Outcome {
    let start = Instant::now();
    let mut rng = SeededRng::new(101);
    let mut residual = Worst::default();
    let mut error = Worst::default();
    for i in 0..500 {
        let a = psd_sample(&mut rng, i);
        let m = alg(a.dim());
        match sqrt_bounded(&m, &a) {
            Ok(r) => {
                let (an, rn) = (na(&a), na(&r.result));
                residual.check(op_norm(&(&rn * &rn - &an)), 1e-8 * op_norm(&an).max(1.0));
                error.check(op_norm(&(&rn - spectral(&an, |x| x.max(0.0).sqrt()))), 1e-6);
            }
            Err(_) => {
                residual.flag(false);
                error.flag(false);
            }
        }
    }
    let secs = start.elapsed().as_secs_f64();
    Outcome::new(
        residual.ok() && error.ok() && secs < 10.0,
        format!("{}, {}, {secs:.2}s", residual.show("residual"), error.show("vs eigensolver")),
    )
}

fn approximant_bounds() -> Outcome {
    let mut rng = SeededRng::new(102);
    let tol = TolerancePolicy::default();
    let mut lower = Worst::default();
    let mut upper = Worst::default();
    let mut indices = std::collections::BTreeSet::new();
    for i in 0..100 {
        let a = psd_sample(&mut rng, i);
        match sqrt_bounded(&alg(a.dim()), &a) {
            Ok(r) => {
                for st in &r.stages {
                    indices.insert(st.n);
                    let q = na(&st.q);
                    lower.flag(psd_ok(&q, tol.tol_pos));
                    upper.check(max_eig(&q) - 1.0 / st.n as f64, 1e-8);
                }
            }
            Err(_) => lower.flag(false),
        }
    }
    let expected: Vec<u32> = (0..7).map(|k| 1 << k).collect();
    let all_indices = indices.iter().copied().collect::<Vec<_>>() == expected;
    Outcome::new(
        lower.ok() && upper.ok() && all_indices,
        format!(
            "{}, {}, indices {:?}",
            lower.show("0 ≤ qₙ"),
            upper.show("qₙ ≤ 𝟙/n + 1e-8 (excess)"),
            indices
        ),
    )
}

fn inverse_correctness() -> Outcome {
    let mut rng = SeededRng::new(103);
    let mut defect = Worst::default();
    let mut bound = Worst::default();
    let mut witness = Worst::default();
    for i in 0..500 {
        let dim = 1 + i % 8;
        let eps = rng.uniform_in(0.05, 1.0);
        let a = rng.coercive(dim, eps).scale_real(rng.uniform_in(0.5, 4.0));
        match inverse_coercive(&alg(dim), &a) {
            Ok(r) => {
                let (an, rn) = (na(&a), na(&r.result));
                defect.check(op_norm(&(&an * &rn - identity(dim))), 1e-8);
                bound.check(op_norm(&rn) - 1.0 / r.witness, 1e-6);
                witness.check(r.witness - min_eig(&an), 1e-9 * op_norm(&an).max(1.0));
            }
            Err(_) => defect.flag(false),
        }
    }
    Outcome::new(
        defect.ok() && bound.ok() && witness.ok(),
        format!(
            "{}, {}, {}",
            defect.show("‖aa⁻¹ − 𝟙‖"),
            bound.show("‖a⁻¹‖ − 1/ε"),
            witness.show("ε − λmin")
        ),
    )
}

fn cstar_laws() -> Outcome {
    let mut rng = SeededRng::new(104);
    let mut identity = Worst::default();
    let mut oracle = Worst::default();
    for i in 0..500 {
        let dim = 1 + i % 8;
        let m = alg(dim);
        let a = rng.gaussian_matrix(dim).scale_real(rng.uniform_in(0.1, 3.0));
        let n = uniform_seminorm(&m, &a).as_f64();
        let n2 = uniform_seminorm(&m, &m.mul(&m.star(&a), &a)).as_f64();
        identity.check((n2 - n * n).abs(), 1e-6 * scale(&m, &a));
        oracle.check((n - op_norm(&na(&a))).abs(), 1e-4);
    }
    for i in 0..500 {
        let len = 1 + i % 9;
        let f = FunctionAlgebra::new((0..len).map(|k| k as f64).collect(), TolerancePolicy::default()).unwrap();
        let a = f.random_element(&mut rng);
        let n = uniform_seminorm(&f, &a).as_f64();
        let n2 = uniform_seminorm(&f, &f.mul(&f.star(&a), &a)).as_f64();
        identity.check((n2 - n * n).abs(), 1e-6 * scale(&f, &a));
        let sup = a.iter().map(|z| z.norm()).fold(0.0, f64::max);
        oracle.check((n - sup).abs(), 1e-4);
    }
    Outcome::new(
        identity.ok() && oracle.ok(),
        format!("{}, {}", identity.show("|‖a*a‖ − ‖a‖²|"), oracle.show("bisection vs oracle")),
    )
}

fn leq<A: OrderedStarAlgebra>(alg: &A, a: &A::Element, b: &A::Element) -> bool {
    alg.is_positive(&alg.sub(b, a))
}

fn order_square_equivalences() -> Outcome {
    let mut rng = SeededRng::new(105);
    let mut square = Worst::default();
    let mut radical = Worst::default();
    let mut skipped = 0;
    for i in 0..500 {
        let dim = 1 + i % 6;
        let m = alg(dim);
        let r1 = rng.reals(dim, 0.0, 2.0);
        let sign: Vec<f64> = (0..dim).map(|_| if rng.uniform() < 0.5 { -1.0 } else { 1.0 }).collect();
        let delta = [-0.3, -1e-6, 1e-6, 0.3][i % 4];
        let t = 1.0 + [-0.2, -1e-6, 1e-6, 0.2][(i / 4) % 4];
        // β = ±t·α on one coordinate, smaller elsewhere.
        let r2: Vec<f64> = (0..dim)
            .map(|k| sign[k] * r1[k] * if k == 0 { t } else { rng.uniform_in(0.0, 1.0) })
            .collect();
        let (a, b) = rng.conjugated_pair(&r1, &r2);
        let s = scale(&m, &a).max(scale(&m, &b));

        let h = rng.conjugated_pair(&r2, &r2).0;
        let top = r2.iter().fold(0.0f64, |x, y| x.max(y.abs()));
        let lambda = top * (1.0 + delta);
        if (top - lambda).abs() <= 1e-8 * s {
            skipped += 1;
        } else {
            let truth = top <= lambda;
            let l = m.scalar(Scalar::new(lambda, 0.0));
            let lhs = leq(&m, &m.mul(&h, &h), &m.scale_real(lambda, &l));
            let rhs = leq(&m, &m.scale_real(-1.0, &l), &h) && leq(&m, &h, &l);
            square.flag(lhs == truth && rhs == truth);
        }

        let margin = r1.iter().zip(&r2).map(|(x, y)| x - y.abs()).fold(f64::INFINITY, f64::min);
        if margin.abs() <= 1e-8 * s {
            skipped += 1;
            continue;
        }
        let truth = margin >= 0.0;
        let lhs = leq(&m, &m.mul(&b, &b), &m.mul(&a, &a));
        let rhs = leq(&m, &m.scale_real(-1.0, &a), &b) && leq(&m, &b, &a);
        radical.flag(lhs == truth && rhs == truth);
    }
    Outcome::new(
        square.ok() && radical.ok(),
        format!(
            "{}, {}, {skipped} in band",
            square.show("a² ≤ λ² ⇔ |a| ≤ λ"),
            radical.show("b² ≤ a² ⇔ −a ≤ b ≤ a")
        ),
    )
}

fn lattice_identities() -> Outcome {
    let mut rng = SeededRng::new(106);
    let mut defining = Worst::default();
    let mut relations = Worst::default();
    let mut items = Worst::default();
    let mut formula = Worst::default();
    let mut parts = Worst::default();
    let mut pointwise = Worst::default();
    for i in 0..500 {
        let dim = 1 + i % 6;
        let m = alg(dim);
        let r1 = rng.reals(dim, -2.0, 2.0);
        let r2 = rng.reals(dim, -2.0, 2.0);
        let r3 = rng.reals(dim, -2.0, 2.0);
        let u = rng.unitary(dim);
        let conj = |d: &[f64]| u.mul(&Matrix::from_real_diagonal(d)).mul(&u.adjoint()).hermitian_part();
        let (a, b, c) = (conj(&r1), conj(&r2), conj(&r3));
        let s = scale(&m, &a).max(scale(&m, &b)).max(scale(&m, &c));
        let dist = |x: &Matrix, y: &Matrix| op_norm(&(na(x) - na(y)));
        let mut run = || -> Result<(), Error> {
            let v = vee(&m, &a, &b)?;
            let w = wedge(&m, &a, &b)?;
            let (dv, dw) = (lattice_defects(&m, &a, &b, &v, true), lattice_defects(&m, &a, &b, &w, false));
            defining.flag(dv.order_ok && dw.order_ok);
            let eq = |x: &Matrix| {
                let (x, a, b) = (na(x), na(&a), na(&b));
                op_norm(&(&x * &x + &a * &b - &x * (&a + &b)))
            };
            defining.check(eq(&v).max(eq(&w)), 1e-8 * s * s);
            defining.flag(psd_ok(&(na(&v) * Complex::new(2.0, 0.0) - na(&a) - na(&b)), 1e-12));

            relations.check(dist(&v.add(&w), &a.add(&b)), 1e-8 * s);
            relations.check(op_norm(&(na(&v) * na(&w) - na(&a) * na(&b))), 1e-8 * s * s);

            items.check(dist(&vee(&m, &b, &a)?, &v).max(dist(&wedge(&m, &b, &a)?, &w)), 1e-8 * s);
            let lambda = rng.uniform_in(0.0, 3.0);
            let (la, lb) = (a.scale_real(lambda), b.scale_real(lambda));
            let d = dist(&vee(&m, &la, &lb)?, &v.scale_real(lambda))
                .max(dist(&wedge(&m, &la, &lb)?, &w.scale_real(lambda)));
            items.check(d, 1e-8 * s * lambda.max(1.0));
            let (na_, nb) = (a.scale_real(-1.0), b.scale_real(-1.0));
            let d = dist(&wedge(&m, &na_, &nb)?, &v.scale_real(-1.0)).max(dist(&vee(&m, &na_, &nb)?, &w.scale_real(-1.0)));
            items.check(d, 1e-8 * s);
            let (ac, bc) = (a.add(&c), b.add(&c));
            let d = dist(&vee(&m, &ac, &bc)?, &v.add(&c)).max(dist(&wedge(&m, &ac, &bc)?, &w.add(&c)));
            items.check(d, 1e-8 * s);

            let mab = abs(&m, &a.sub(&b))?;
            let f = a.add(&b).add(&mab).scale_real(0.5);
            let exact = conj(&r1.iter().zip(&r2).map(|(x, y)| x.max(*y)).collect::<Vec<_>>());
            formula.check(dist(&f, &v).max(dist(&v, &exact)), 1e-8 * s);

            let (p, n) = (pos_part(&m, &a)?, neg_part(&m, &a)?);
            let (pn, nn) = (na(&p), na(&n));
            parts.check(op_norm(&(&pn * &nn)).max(op_norm(&(&nn * &pn))), 1e-8 * scale(&m, &a));
            parts.check(dist(&p.sub(&n), &a), 1e-8 * scale(&m, &a));
            parts.flag(psd_ok(&pn, 1e-12) && psd_ok(&nn, 1e-12));
            Ok(())
        };
        if run().is_err() {
            defining.flag(false);
        }

        let len = 1 + i % 9;
        let fa = FunctionAlgebra::new((0..len).map(|k| k as f64).collect(), TolerancePolicy::default()).unwrap();
        let (f, g) = fa.commuting_pair(&mut rng);
        match vee(&fa, &f, &g) {
            Ok(x) => {
                let d = x
                    .iter()
                    .zip(f.iter().zip(&g))
                    .map(|(x, (p, q))| (x - Scalar::new(p.re.max(q.re), 0.0)).norm())
                    .fold(0.0, f64::max);
                pointwise.check(d, 1e-12);
            }
            Err(_) => pointwise.flag(false),
        }
    }
    let ok = [&defining, &relations, &items, &formula, &parts, &pointwise].iter().all(|w| w.ok());
    Outcome::new(
        ok,
        format!(
            "{}, {}, {}, {}, {}, {}",
            defining.show("defining"),
            relations.show("∨+∧, ∨·∧"),
            items.show("items 1-4"),
            formula.show("abs formula"),
            parts.show("a₊a₋"),
            pointwise.show("pointwise max")
        ),
    )
}

fn su_six_way() -> Outcome {
    let start = Instant::now();
    let mut rng = SeededRng::new(107);
    let tallies = su_probe(&alg(6), &mut rng, 200);
    let secs = start.elapsed().as_secs_f64();
    let ok = tallies.len() == 6 && tallies.iter().all(|t| t.passed() && t.trials == 200) && secs < 60.0;
    let detail = tallies
        .iter()
        .map(|t| format!("{} {}/{}", t.capability.name(), t.trials - t.failures, t.trials))
        .collect::<Vec<_>>()
        .join(", ");
    Outcome::new(ok, format!("{detail}, {secs:.2}s"))
}

fn pathology_fixtures() -> Outcome {
    let circle = TwistedCircle::new(8).expect("even grid");
    let cert = GenPosCertificate::new(vec![(circle.unit(), circle.identity_function())]);
    let minus_one = circle.scale_real(-1.0, &circle.unit());
    let twisted = verify_genpos_certificate(&circle, &minus_one, &cert) == Ok(true);

    let ptlg = UpperTriangular::new(TolerancePolicy::default(), 0.0);
    let (per, below_zero) = ptlg.archimedean_probe(&[1.0, 1e-3, 1e-6, 1e-9]);
    let probe_fails = per.iter().all(|x| *x) && !below_zero;
    let n = ptlg.nilpotent();
    let square_zero = ptlg.mul(&n, &n) == ptlg.zero();

    let cfg = SuiteConfig {
        backend: "ptlg".parse().unwrap(),
        suites: vec!["archimedean".into()],
        ..SuiteConfig::default()
    };
    let report = run(&cfg).expect("known suite");
    let marked = report
        .suites
        .iter()
        .flat_map(|s| &s.checks)
        .any(|c| c.name == "nilpotent-archimedean" && c.status == Status::Xfail);
    Outcome::new(
        twisted && probe_fails && square_zero && marked,
        format!(
            "−𝟙 = id*·id {twisted}, Archimedean probe fails at every ε {probe_fails} (xfail {marked}), M(0,1)² = 0 {square_zero}"
        ),
    )
}

fn dominated_module() -> Outcome {
    let h = HamiltonianSpec::demo();
    let tower = TruncationTower::new(&h).expect("demo");
    let q = DominantSetSpec::new(h.matrix(h.max_dim()));
    let mut rng = SeededRng::new(109);
    let mut block = Worst::default();
    for _ in 0..20 {
        let d = h.max_dim();
        let mut a = Matrix::zeros(d);
        for k in 0..d / 2 {
            let g = rng.gaussian_matrix(2);
            let g = g.scale_real(h.eigenvalues[2 * k] * rng.uniform_in(0.2, 1.0) / op_norm(&na(&g)));
            for i in 0..2 {
                for j in 0..2 {
                    a[(2 * k + i, 2 * k + j)] = g[(i, j)];
                }
            }
        }
        let m = in_downarrow(&tower.realize(&a).unwrap(), &q, &tower);
        block.flag(m.member && m.witness == Some((1, 1.0)));
    }
    let dims_ok = tower.dims() == [4, 8, 16];
    let probe = susconstruct_probe(&q, &tower, &mut rng, 50);
    let (probe_ok, probe_detail) = match &probe {
        Ok(r) => (
            r.passed() && r.members == 50 && r.capabilities.len() == 6,
            format!("{} members, cofinality {}/{}", r.members, r.cofinality.trials - r.cofinality.failures, r.cofinality.trials),
        ),
        Err(e) => (false, format!("{e}")),
    };
    let nil = Matrix::from_real_rows(&[&[0.0, 1.0], &[0.0, 0.0]]).unwrap();
    let not_normal = validate_dominant_set(&DominantSetSpec::new(nil), 2) == Err(Error::NotNormal);
    let singular = Matrix::from_real_diagonal(&[0.0, 1.0, 2.0]);
    let not_coercive = validate_dominant_set(&DominantSetSpec::new(singular), 3) == Err(Error::NotCoercive);
    Outcome::new(
        block.ok() && dims_ok && probe_ok && not_normal && not_coercive,
        format!(
            "{} over dims {:?}, {probe_detail}, non-normal rejected {not_normal}, non-coercive rejected {not_coercive}",
            block.show("witness (1,1)"),
            tower.dims()
        ),
    )
}

fn check_morphism<M>(m: &M, rng: &mut SeededRng, abs_w: &mut Worst, sqrt_w: &mut Worst, to_na: impl Fn(&<M::Target as StarAlgebra>::Element) -> Na)
where
    M: StarMorphism,
    M::Source: Sampling,
    M::Target: OrderedStarAlgebra,
{
    let (src, dst) = (m.source(), m.target());
    let a = src.random_hermitian(rng);
    match (abs(src, &a), abs(dst, &m.apply(&a))) {
        (Ok(x), Ok(y)) => abs_w.check(op_norm(&(to_na(&m.apply(&x)) - to_na(&y))), 1e-6),
        _ => abs_w.flag(false),
    }
    let p = src.random_positive(rng);
    match (sqrt_bounded(src, &p), sqrt_bounded(dst, &m.apply(&p))) {
        (Ok(x), Ok(y)) => sqrt_w.check(op_norm(&(to_na(&m.apply(&x.result)) - to_na(&y.result))), 1e-6),
        _ => sqrt_w.flag(false),
    }
}

fn function_na(v: &Vec<Scalar>) -> Na {
    DMatrix::from_diagonal(&nalgebra::DVector::from_iterator(v.len(), v.iter().map(|z| Complex::new(z.re, z.im))))
}

fn homomorphism_compatibility() -> Outcome {
    let mut rng = SeededRng::new(110);
    let dim = 5;
    let conj = UnitaryConjugation::new(alg(dim), rng.unitary(dim)).unwrap();
    let fun = FunctionAlgebra::new(vec![-2.0, -0.5, 0.0, 1.0, 3.5, 7.0], TolerancePolicy::default()).unwrap();
    let restr = Restriction::new(fun.clone(), vec![0, 2, 5]).unwrap();
    let emb = DiagonalEmbedding::new(fun).unwrap();
    let mut w: Vec<Worst> = (0..6).map(|_| Worst::default()).collect();
    for _ in 0..200 {
        let (a, rest) = w.split_at_mut(1);
        let (b, rest) = rest.split_at_mut(1);
        check_morphism(&conj, &mut rng, &mut a[0], &mut b[0], na);
        let (c, rest) = rest.split_at_mut(1);
        let (d, rest) = rest.split_at_mut(1);
        check_morphism(&restr, &mut rng, &mut c[0], &mut d[0], function_na);
        let (e, f) = rest.split_at_mut(1);
        check_morphism(&emb, &mut rng, &mut e[0], &mut f[0], na);
    }
    let labels = ["conj |·|", "conj √", "restriction |·|", "restriction √", "embedding |·|", "embedding √"];
    Outcome::new(
        w.iter().all(|x| x.ok()),
        labels.iter().zip(&w).map(|(l, x)| x.show(l)).collect::<Vec<_>>().join(", "),
    )
}

fn determinism() -> Outcome {
    let cfg = SuiteConfig {
        seed: 42,
        suites: vec!["all".into()],
        ..SuiteConfig::default()
    };
    let first = run(&cfg).expect("valid").deterministic_json();
    let second = run(&cfg).expect("valid").deterministic_json();
    let other = run(&SuiteConfig { seed: 43, ..cfg }).expect("valid").deterministic_json();
    Outcome::new(
        first == second && first != other,
        format!("{} bytes identical {}, seed 43 differs {}", first.len(), first == second, first != other),
    )
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 11] = [
        ("square-root correctness", square_root_correctness),
        ("approximant bounds", approximant_bounds),
        ("inverse correctness and norm bound", inverse_correctness),
        ("C*-seminorm laws", cstar_laws),
        ("order-square equivalences", order_square_equivalences),
        ("lattice identities", lattice_identities),
        ("six-way Su probe", su_six_way),
        ("pathology fixtures", pathology_fixtures),
        ("dominated algebra", dominated_module),
        ("homomorphism compatibility", homomorphism_compatibility),
        ("determinism", determinism),
    ];
    let mut failed = 0;
    for (k, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let o = f();
        let verdict = if o.ok { "PASS" } else { "FAIL" };
        if !o.ok {
            failed += 1;
        }
        println!(
            "{verdict} [{:>2}] {name} ({:.2}s): {}",
            k + 1,
            start.elapsed().as_secs_f64(),
            o.detail
        );
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
