//! Single operations on JSON elements.

use serde_json::{json, Value};
use sustar_core::backends::{FunctionAlgebra, MatrixAlgebra, PolynomialAlgebra};
use sustar_core::dominated::{in_downarrow, DominantSetSpec, HamiltonianSpec, MembershipFailure, TruncationTower};
use sustar_core::ordered::{seminorm, uniform_metric};
use sustar_core::suops::{
    abs_report, inverse_coercive, lattice_defects, pos_part, positivity_companion, sqrt_bounded, vee, wedge,
};
use sustar_core::{Error, ExtendedNorm, OrderedStarAlgebra, TolerancePolicy};

use crate::json::{CalculusJson, Element, ElementJson, HamiltonianJson};

pub const OPS: &[&str] = &[
    "abs", "downarrow", "inverse", "metric", "polycalc", "pospart", "seminorm", "sqrt", "vee", "wedge",
];

#[derive(Debug, thiserror::Error)]
pub enum ComputeError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("{0}")]
    Algebra(#[from] Error),
}

impl ComputeError {
    /// 1 for unreadable input, 2 for violated preconditions, 3 for numerical failure.
    pub fn exit_code(&self) -> i32 {
        match self {
            ComputeError::Parse(_) => 1,
            ComputeError::Algebra(e) if e.is_precondition() => 2,
            ComputeError::Algebra(_) => 3,
        }
    }
}

fn parse<T: serde::de::DeserializeOwned>(text: &str, what: &str) -> Result<T, ComputeError> {
    serde_json::from_str(text).map_err(|e| ComputeError::Parse(format!("{what}: {e}")))
}

fn element(text: &str, what: &str, tol: &TolerancePolicy) -> Result<Element, ComputeError> {
    let e: ElementJson = parse(text, what)?;
    Ok(retolerance(e.to_element()?, tol)?)
}

fn retolerance(e: Element, tol: &TolerancePolicy) -> Result<Element, Error> {
    Ok(match e {
        Element::Matrix(alg, m) => Element::Matrix(alg.with_tolerance(*tol), m),
        Element::Function(alg, v) => Element::Function(alg.with_tolerance(*tol), v),
        Element::Polynomial(alg, p) => {
            Element::Polynomial(PolynomialAlgebra::new(alg.nvars(), alg.samples().to_vec(), *tol)?, p)
        }
    })
}

fn norm_json(n: ExtendedNorm) -> Value {
    match n.value() {
        Some(v) => json!({"value": v, "infinite": false}),
        None => json!({"value": Value::Null, "infinite": true}),
    }
}

/// Wraps backend-specific elements back into JSON.
trait Emit: OrderedStarAlgebra {
    fn emit(&self, e: &Self::Element) -> ElementJson;
}

impl Emit for MatrixAlgebra {
    fn emit(&self, e: &Self::Element) -> ElementJson {
        ElementJson::from_matrix(e)
    }
}

impl Emit for FunctionAlgebra {
    fn emit(&self, e: &Self::Element) -> ElementJson {
        ElementJson::from_function(self.points(), e)
    }
}

impl Emit for PolynomialAlgebra {
    fn emit(&self, e: &Self::Element) -> ElementJson {
        ElementJson::from_polynomial(e, self.samples())
    }
}

fn unary<A: Emit>(alg: &A, op: &str, a: &A::Element) -> Result<Value, ComputeError> {
    Ok(match op {
        "sqrt" => {
            let r = sqrt_bounded(alg, a)?;
            json!({
                "result": alg.emit(&r.result),
                "residual": r.residual,
                "commutant_defect": r.commutant_defect,
                "iterations": r.iterations,
                "shift": r.shift,
                "stages": r.stages.iter().map(|s| json!({
                    "n": s.n, "degree": s.degree, "lower_ok": s.lower_ok, "upper_ok": s.upper_ok, "residual": s.residual,
                })).collect::<Vec<_>>(),
            })
        }
        "abs" => {
            let r = abs_report(alg, a)?;
            json!({"result": alg.emit(&r.result), "residual": r.residual})
        }
        "pospart" => json!({"result": alg.emit(&pos_part(alg, a)?)}),
        "inverse" => {
            let r = inverse_coercive(alg, a)?;
            json!({
                "result": alg.emit(&r.result),
                "defect": r.defect,
                "iterations": r.iterations,
                "coercivity_witness": r.witness,
                "result_norm": r.result_norm,
            })
        }
        "seminorm" => norm_json(seminorm(alg, a)),
        _ => unreachable!("checked by caller"),
    })
}

fn binary<A: Emit>(alg: &A, op: &str, a: &A::Element, b: &A::Element) -> Result<Value, ComputeError> {
    Ok(match op {
        "vee" | "wedge" => {
            let upper = op == "vee";
            let x = if upper { vee(alg, a, b)? } else { wedge(alg, a, b)? };
            let d = lattice_defects(alg, a, b, &x, upper);
            json!({
                "result": alg.emit(&x),
                "order_ok": d.order_ok,
                "equation_defect": d.equation_defect,
            })
        }
        "metric" => json!({"value": uniform_metric(alg, a, b)}),
        _ => unreachable!("checked by caller"),
    })
}

fn pair(a: Element, b: Element, op: &str) -> Result<Value, ComputeError> {
    match (a, b) {
        (Element::Matrix(alg, x), Element::Matrix(alg2, y)) if alg.dim() == alg2.dim() => binary(&alg, op, &x, &y),
        (Element::Function(alg, x), Element::Function(alg2, y)) if alg.points() == alg2.points() => {
            binary(&alg, op, &x, &y)
        }
        (Element::Polynomial(alg, x), Element::Polynomial(alg2, y))
            if alg.nvars() == alg2.nvars() && alg.samples() == alg2.samples() =>
        {
            binary(&alg, op, &x, &y)
        }
        _ => Err(Error::BackendMismatch.into()),
    }
}

fn polycalc(text: &str, tol: &TolerancePolicy) -> Result<Value, ComputeError> {
    let c: CalculusJson = parse(text, "--in")?;
    let q = c.polynomial.to_polynomial()?;
    let constraints = c
        .constraints
        .iter()
        .map(|p| p.to_polynomial())
        .collect::<Result<Vec<_>, _>>()?;
    let tuple = c
        .tuple
        .iter()
        .map(|e| e.to_element().and_then(|e| retolerance(e, tol)))
        .collect::<Result<Vec<_>, _>>()?;
    macro_rules! run {
        ($variant:ident) => {{
            let mut alg = None;
            let mut xs = Vec::new();
            for e in tuple {
                match e {
                    Element::$variant(a, x) => {
                        alg.get_or_insert(a);
                        xs.push(x);
                    }
                    _ => return Err(Error::BackendMismatch.into()),
                }
            }
            let alg = alg.ok_or_else(|| Error::InvalidInput("empty tuple".into()))?;
            let check = positivity_companion(&alg, &q, &constraints, &xs, &c.samples)?;
            json!({
                "result": alg.emit(&check.value),
                "points_in_set": check.points_in_set,
                "min_on_set": check.min_on_set,
                "constraints_positive": check.constraints_positive,
                "value_positive": check.value_positive,
                "transfer_holds": check.holds(),
            })
        }};
    }
    let v = match tuple.first() {
        None => return Err(Error::InvalidInput("empty tuple".into()).into()),
        Some(Element::Matrix(..)) => run!(Matrix),
        Some(Element::Function(..)) => run!(Function),
        Some(Element::Polynomial(..)) => run!(Polynomial),
    };
    Ok(v)
}

fn downarrow(text: &str, rhs: Option<&str>) -> Result<Value, ComputeError> {
    let e: ElementJson = parse(text, "--in")?;
    let m = match e.to_element()? {
        Element::Matrix(_, m) => m,
        _ => return Err(Error::InvalidInput("downarrow needs a matrix element".into()).into()),
    };
    let h = match rhs {
        Some(t) => parse::<HamiltonianJson>(t, "--rhs")?.to_spec()?,
        None => HamiltonianSpec::demo(),
    };
    if m.dim() != h.max_dim() {
        return Err(Error::InvalidInput(format!("element must be {0} x {0}", h.max_dim())).into());
    }
    let tower = TruncationTower::new(&h)?;
    let spec = DominantSetSpec::new(h.matrix(h.max_dim()));
    let parts = tower.realize(&m)?;
    let r = in_downarrow(&parts, &spec, &tower);
    let failure = r.failure.map(|f| match f {
        MembershipFailure::NotInCommutant { dim, defect } => json!({"kind": "not-in-commutant", "dim": dim, "defect": defect}),
        MembershipFailure::NoWitness { n_max, lambda_max } => {
            json!({"kind": "no-witness", "n_max": n_max, "lambda_max": lambda_max})
        }
        MembershipFailure::Shape => json!({"kind": "shape"}),
    });
    Ok(json!({
        "member": r.member,
        "witness": r.witness.map(|(n, l)| json!({"n": n, "lambda": l})),
        "failure": failure,
        "dims": h.dims,
    }))
}

/// Runs `op` on the JSON text of `--in` and, for binary operations, `--rhs`.
pub fn compute(op: &str, input: &str, rhs: Option<&str>, tol_eq: Option<f64>) -> Result<Value, ComputeError> {
    let tol = match tol_eq {
        Some(t) => TolerancePolicy::default().with_tol_eq(t),
        None => TolerancePolicy::default(),
    };
    tol.validate().map_err(|e| ComputeError::Parse(e.to_string()))?;
    let body = match op {
        "sqrt" | "abs" | "pospart" | "inverse" | "seminorm" => match element(input, "--in", &tol)? {
            Element::Matrix(alg, x) => unary(&alg, op, &x)?,
            Element::Function(alg, x) => unary(&alg, op, &x)?,
            Element::Polynomial(alg, x) => unary(&alg, op, &x)?,
        },
        "vee" | "wedge" | "metric" => {
            let rhs = rhs.ok_or_else(|| ComputeError::Parse(format!("{op} needs --rhs")))?;
            pair(element(input, "--in", &tol)?, element(rhs, "--rhs", &tol)?, op)?
        }
        "polycalc" => polycalc(input, &tol)?,
        "downarrow" => downarrow(input, rhs)?,
        other => return Err(ComputeError::Parse(format!("unknown op '{other}' ({})", OPS.join(", ")))),
    };
    let mut out = json!({"op": op});
    if let (Some(o), Value::Object(b)) = (out.as_object_mut(), body) {
        o.extend(b);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diag(d: &[f64]) -> String {
        let n = d.len();
        let data: Vec<Vec<[f64; 2]>> = (0..n)
            .map(|i| (0..n).map(|j| [if i == j { d[i] } else { 0.0 }, 0.0]).collect())
            .collect();
        json!({"backend": "matrix", "dim": n, "data": data}).to_string()
    }

    fn diagonal_of(v: &Value) -> Vec<f64> {
        let data = v["result"]["data"].as_array().unwrap();
        (0..data.len()).map(|i| data[i][i][0].as_f64().unwrap()).collect()
    }

    #[test]
    fn seminorm_of_unit() {
        let v = compute("seminorm", &diag(&[1.0, 1.0, 1.0]), None, None).unwrap();
        assert_eq!(v["value"], 1.0);
    }

    #[test]
    fn sqrt_and_vee_of_diagonals() {
        let r = diagonal_of(&compute("sqrt", &diag(&[4.0, 9.0]), None, None).unwrap());
        assert!((r[0] - 2.0).abs() < 1e-8 && (r[1] - 3.0).abs() < 1e-8);
        let v = diagonal_of(&compute("vee", &diag(&[1.0, 5.0]), Some(&diag(&[3.0, 2.0])), None).unwrap());
        assert!((v[0] - 3.0).abs() < 1e-8 && (v[1] - 5.0).abs() < 1e-8);
    }

    #[test]
    fn exit_codes() {
        assert_eq!(compute("sqrt", "{", None, None).unwrap_err().exit_code(), 1);
        assert_eq!(compute("sqrt", &diag(&[-1.0, 1.0]), None, None).unwrap_err().exit_code(), 2);
        assert_eq!(compute("frobnicate", &diag(&[1.0]), None, None).unwrap_err().exit_code(), 1);
        assert_eq!(compute("vee", &diag(&[1.0]), Some(&diag(&[1.0, 2.0])), None).unwrap_err().exit_code(), 2);
    }

    #[test]
    fn unbounded_polynomial_seminorm_is_flagged() {
        let p = json!({
            "backend": "polynomial", "vars": 1,
            "terms": [{"exps": [1], "coeff": [1.0, 0.0]}],
            "samples": [[-1e20], [0.0], [1e20]],
        })
        .to_string();
        let v = compute("seminorm", &p, None, None).unwrap();
        assert_eq!(v["infinite"], true);
        assert!(v["value"].is_null());
    }
}
