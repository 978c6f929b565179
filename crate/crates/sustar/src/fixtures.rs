//! Pathological and demo fixtures.

use serde_json::{json, Value};
use sustar_core::backends::{verify_genpos_certificate, GenPosCertificate, TwistedCircle, UpperTriangular};
use sustar_core::dominated::HamiltonianSpec;
use sustar_core::ordered::seminorm;
use sustar_core::{StarAlgebra, TolerancePolicy};

use crate::json::{to_json, HamiltonianJson};

pub const FIXTURES: &[&str] = &["hamiltonian-demo", "twisted-circle", "upper-triangular"];

/// Grid size of the emitted twisted circle.
pub const TWISTED_POINTS: usize = 8;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
#[error("unknown fixture '{0}' (hamiltonian-demo, twisted-circle, upper-triangular)")]
pub struct UnknownFixture(pub String);

fn line(label: &str, ok: bool) -> String {
    format!("{label} : {}", if ok { "pass" } else { "fail" })
}

pub fn fixture(name: &str) -> Result<Value, UnknownFixture> {
    match name {
        "twisted-circle" => Ok(twisted_circle()),
        "upper-triangular" => Ok(upper_triangular()),
        "hamiltonian-demo" => Ok(json!({
            "fixture": name,
            "hamiltonian": HamiltonianJson::from_spec(&HamiltonianSpec::demo()),
        })),
        other => Err(UnknownFixture(other.to_string())),
    }
}

fn twisted_circle() -> Value {
    let alg = TwistedCircle::new(TWISTED_POINTS).expect("even grid");
    let id = alg.identity_function();
    let minus_one = alg.scale_real(-1.0, &alg.unit());
    let cert = GenPosCertificate::new(vec![(alg.unit(), id.clone())]);
    let ok = verify_genpos_certificate(&alg, &minus_one, &cert).unwrap_or(false);
    json!({
        "fixture": "twisted-circle",
        "grid": alg.grid().iter().map(|z| to_json(*z)).collect::<Vec<_>>(),
        "identity": id.iter().map(|z| to_json(*z)).collect::<Vec<_>>(),
        "certificate": {"target": "-1", "terms": [{"g": "1", "a": "id"}]},
        "checks": [line("−𝟙 = id*·id", ok)],
        "passed": ok,
    })
}

fn upper_triangular() -> Value {
    let alg = UpperTriangular::new(TolerancePolicy::default(), 0.0);
    let n = alg.nilpotent();
    let square_zero = alg.mul(&n, &n) == alg.zero();
    let norm = seminorm(&alg, &n).as_f64();
    let grid = [1.0, 1e-3, 1e-6, 1e-9];
    let (per, below_zero) = alg.archimedean_probe(&grid);
    let probe: Vec<Value> = grid
        .iter()
        .zip(&per)
        .map(|(e, ok)| json!({"epsilon": e, "nilpotent_below_eps_unit": ok}))
        .collect();
    let archimedean_fails = per.iter().all(|x| *x) && !below_zero;
    json!({
        "fixture": "upper-triangular",
        "nilpotent": {"a": to_json(n.a), "b": to_json(n.b)},
        "checks": [
            line("M(0,1)² = 0", square_zero),
            line("‖M(0,1)‖∞ = 0", norm == 0.0),
            line("M(0,1) ≤ εM(1,0) for all ε, M(0,1) ≰ 0 (not Archimedean)", archimedean_fails),
        ],
        "archimedean_probe": probe,
        "nilpotent_below_zero": below_zero,
        "passed": square_zero && norm == 0.0 && archimedean_fails,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn headline_checks_pass() {
        for name in FIXTURES {
            let v = fixture(name).unwrap();
            if let Some(p) = v.get("passed") {
                assert_eq!(p, &Value::Bool(true), "{name}");
            }
        }
        let t = fixture("twisted-circle").unwrap();
        assert!(t["checks"][0].as_str().unwrap().contains("−𝟙 = id*·id : pass"));
        let u = fixture("upper-triangular").unwrap();
        assert_eq!(u["checks"][0], "M(0,1)² = 0 : pass");
        assert!(fixture("moebius").is_err());
    }
}
