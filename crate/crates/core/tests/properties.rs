use proptest::prelude::*;
use sustar_core::backends::{FunctionAlgebra, MatrixAlgebra, Restriction, Sampling, StarMorphism};
use sustar_core::ordered::{commutator, scale, seminorm, uniform_metric};
use sustar_core::random::SeededRng;
use sustar_core::suops::{abs, inverse_coercive, neg_part, pos_part, sqrt_bounded, vee, wedge};
use sustar_core::{OrderedStarAlgebra, Scalar, StarAlgebra, TolerancePolicy};

fn matrix(dim: usize) -> MatrixAlgebra {
    MatrixAlgebra::new(dim, TolerancePolicy::default()).unwrap()
}

fn functions(len: usize) -> FunctionAlgebra {
    FunctionAlgebra::new((0..len).map(|k| k as f64 * 0.5 - 1.0).collect(), TolerancePolicy::default()).unwrap()
}

fn norm<A: OrderedStarAlgebra>(alg: &A, a: &A::Element) -> f64 {
    seminorm(alg, a).as_f64()
}

fn close<A: OrderedStarAlgebra>(alg: &A, a: &A::Element, b: &A::Element, tol: f64) -> bool {
    norm(alg, &alg.sub(a, b)) <= tol
}

fn leq<A: OrderedStarAlgebra>(alg: &A, a: &A::Element, b: &A::Element) -> bool {
    alg.is_positive(&alg.sub(b, a))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn star_is_an_antimultiplicative_involution(seed in any::<u64>(), dim in 1usize..7) {
        let alg = matrix(dim);
        let mut rng = SeededRng::new(seed);
        let (a, b) = (alg.random_element(&mut rng), alg.random_element(&mut rng));
        prop_assert!(close(&alg, &alg.star(&alg.star(&a)), &a, 0.0));
        let lhs = alg.star(&alg.mul(&a, &b));
        let rhs = alg.mul(&alg.star(&b), &alg.star(&a));
        prop_assert!(close(&alg, &lhs, &rhs, 1e-12 * scale(&alg, &a) * scale(&alg, &b)));
    }

    #[test]
    fn seminorm_is_a_cstar_seminorm(seed in any::<u64>(), dim in 1usize..7, lambda in -4.0f64..4.0) {
        let alg = matrix(dim);
        let mut rng = SeededRng::new(seed);
        let (a, b) = (alg.random_element(&mut rng), alg.random_element(&mut rng));
        let (na, nb) = (norm(&alg, &a), norm(&alg, &b));
        let s = scale(&alg, &a).max(scale(&alg, &b));
        prop_assert!((norm(&alg, &alg.mul(&alg.star(&a), &a)) - na * na).abs() <= 1e-6 * s * s);
        prop_assert!(norm(&alg, &alg.add(&a, &b)) <= na + nb + 1e-6 * s);
        prop_assert!(norm(&alg, &alg.mul(&a, &b)) <= na * nb + 1e-6 * s * s);
        prop_assert!((norm(&alg, &alg.scale_real(lambda, &a)) - lambda.abs() * na).abs() <= 1e-6 * s * lambda.abs().max(1.0));
        prop_assert!((norm(&alg, &alg.star(&a)) - na).abs() <= 1e-6 * s);
    }

    #[test]
    fn metric_is_symmetric_and_capped(seed in any::<u64>(), dim in 1usize..7) {
        let alg = matrix(dim);
        let mut rng = SeededRng::new(seed);
        let (a, b) = (alg.random_element(&mut rng), alg.random_element(&mut rng));
        let d = uniform_metric(&alg, &a, &b);
        prop_assert!((0.0..=1.0).contains(&d));
        prop_assert_eq!(d, uniform_metric(&alg, &b, &a));
        prop_assert_eq!(uniform_metric(&alg, &a, &a), 0.0);
    }

    #[test]
    fn positive_cone_is_closed_under_sums_and_conjugation(seed in any::<u64>(), dim in 1usize..7) {
        let alg = matrix(dim);
        let mut rng = SeededRng::new(seed);
        let (p, q) = (alg.random_positive(&mut rng), alg.random_positive(&mut rng));
        let g = alg.random_element(&mut rng);
        prop_assert!(alg.is_positive(&alg.add(&p, &q)));
        prop_assert!(alg.is_positive(&alg.mul(&alg.star(&g), &alg.mul(&p, &g))));
        prop_assert!(alg.is_positive(&alg.mul(&alg.star(&g), &g)));
    }

    #[test]
    fn sqrt_is_a_positive_commuting_root(seed in any::<u64>(), dim in 1usize..7) {
        let alg = matrix(dim);
        let mut rng = SeededRng::new(seed);
        let a = alg.random_positive(&mut rng);
        let r = sqrt_bounded(&alg, &a).unwrap();
        let s = scale(&alg, &a);
        prop_assert!(alg.is_positive(&r.result));
        prop_assert!(close(&alg, &alg.mul(&r.result, &r.result), &a, 1e-8 * s));
        prop_assert!(norm(&alg, &commutator(&alg, &r.result, &a)) <= 1e-8 * s);
    }

    #[test]
    fn abs_dominates_both_signs(seed in any::<u64>(), dim in 1usize..7) {
        let alg = matrix(dim);
        let mut rng = SeededRng::new(seed);
        let a = alg.random_hermitian(&mut rng);
        let m = abs(&alg, &a).unwrap();
        let s = scale(&alg, &a);
        prop_assert!(close(&alg, &alg.mul(&m, &m), &alg.mul(&a, &a), 1e-8 * s * s));
        prop_assert!(leq(&alg, &a, &m));
        prop_assert!(leq(&alg, &alg.scale_real(-1.0, &a), &m));
        prop_assert!(close(&alg, &abs(&alg, &alg.scale_real(-1.0, &a)).unwrap(), &m, 1e-8 * s));
    }

    #[test]
    fn parts_split_a_hermitian(seed in any::<u64>(), dim in 1usize..7) {
        let alg = matrix(dim);
        let mut rng = SeededRng::new(seed);
        let a = alg.random_hermitian(&mut rng);
        let (p, n) = (pos_part(&alg, &a).unwrap(), neg_part(&alg, &a).unwrap());
        let s = scale(&alg, &a);
        prop_assert!(close(&alg, &alg.sub(&p, &n), &a, 1e-8 * s));
        prop_assert!(norm(&alg, &alg.mul(&p, &n)) <= 1e-8 * s * s);
        prop_assert!(alg.is_positive(&p) && alg.is_positive(&n));
    }

    #[test]
    fn vee_and_wedge_bracket_a_commuting_pair(seed in any::<u64>(), dim in 1usize..7) {
        let alg = matrix(dim);
        let mut rng = SeededRng::new(seed);
        let (a, b) = alg.commuting_pair(&mut rng);
        let (v, w) = (vee(&alg, &a, &b).unwrap(), wedge(&alg, &a, &b).unwrap());
        let s = scale(&alg, &a).max(scale(&alg, &b));
        prop_assert!(leq(&alg, &a, &v) && leq(&alg, &b, &v));
        prop_assert!(leq(&alg, &w, &a) && leq(&alg, &w, &b));
        prop_assert!(close(&alg, &alg.add(&v, &w), &alg.add(&a, &b), 1e-8 * s));
        prop_assert!(close(&alg, &vee(&alg, &b, &a).unwrap(), &v, 1e-8 * s));
        prop_assert!(close(&alg, &vee(&alg, &a, &a).unwrap(), &a, 1e-8 * s));
    }

    #[test]
    fn function_vee_is_pointwise_max(seed in any::<u64>(), len in 1usize..10) {
        let alg = functions(len);
        let mut rng = SeededRng::new(seed);
        let (a, b) = alg.commuting_pair(&mut rng);
        let v = vee(&alg, &a, &b).unwrap();
        for ((x, p), q) in v.iter().zip(&a).zip(&b) {
            prop_assert!((*x - Scalar::new(p.re.max(q.re), 0.0)).norm() <= 1e-12);
        }
    }

    #[test]
    fn coercive_inverse_is_a_two_sided_inverse(seed in any::<u64>(), dim in 1usize..7, eps in 0.05f64..1.0) {
        let alg = matrix(dim);
        let mut rng = SeededRng::new(seed);
        let a = alg.random_coercive(&mut rng, eps);
        let r = inverse_coercive(&alg, &a).unwrap();
        let one = alg.unit();
        prop_assert!(close(&alg, &alg.mul(&a, &r.result), &one, 1e-8));
        prop_assert!(close(&alg, &alg.mul(&r.result, &a), &one, 1e-8));
        prop_assert!(norm(&alg, &r.result) <= 1.0 / r.witness + 1e-6);
    }

    #[test]
    fn restriction_commutes_with_abs_and_sqrt(seed in any::<u64>(), len in 2usize..10) {
        let alg = functions(len);
        let keep: Vec<usize> = (0..len).step_by(2).collect();
        let psi = Restriction::new(alg.clone(), keep).unwrap();
        let mut rng = SeededRng::new(seed);
        let a = alg.random_hermitian(&mut rng);
        let lhs = psi.apply(&abs(&alg, &a).unwrap());
        let rhs = abs(psi.target(), &psi.apply(&a)).unwrap();
        prop_assert!(close(psi.target(), &lhs, &rhs, 1e-12));
        let p = alg.random_positive(&mut rng);
        let lhs = psi.apply(&sqrt_bounded(&alg, &p).unwrap().result);
        let rhs = sqrt_bounded(psi.target(), &psi.apply(&p)).unwrap().result;
        prop_assert!(close(psi.target(), &lhs, &rhs, 1e-12));
    }
}
