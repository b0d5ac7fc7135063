use serde_json::{json, Map, Value};
use skewpoly::algebra::DivisionRing;
use skewpoly::evaluation::{check_product_rule, conjugate, divide, evaluate, fundamental, point_to_json};
use skewpoly::frame::Frame;
use skewpoly::geometry::{
    closure_members, find_p_basis, is_p_independent_from, is_two_sided, matroid_check, rank_of,
    vandermonde,
};
use skewpoly::interpolation::{
    dual_p_basis, lagrange_interpolate, lagrange_via_vandermonde, reduce_mod_ideal, representative,
    RowChoice,
};
use skewpoly::skewring::{mul, Monomial, Poly};
use skewpoly::{Error, Result};

use crate::job;
use crate::{Method, Verb};

/// A result with both renderings: the JSON object, and `key: value` lines
/// with polynomials in the term syntax.
#[derive(Default)]
pub struct Output {
    pub json: Map<String, Value>,
    pub text: Vec<String>,
}

impl Output {
    pub fn value(mut self, key: &str, v: Value) -> Self {
        let line = match &v {
            Value::String(s) => s.clone(),
            v => v.to_string(),
        };
        self.text.push(format!("{key}: {line}"));
        self.json.insert(key.into(), v);
        self
    }

    pub fn poly<R: DivisionRing>(mut self, key: &str, ring: &R, p: &Poly<R>) -> Self {
        self.text.push(format!("{key}: {}", p.to_text(ring)));
        self.json.insert(key.into(), p.to_json(ring));
        self
    }

    pub fn polys<R: DivisionRing>(mut self, key: &str, ring: &R, ps: &[Poly<R>]) -> Self {
        for (i, p) in ps.iter().enumerate() {
            self.text.push(format!("{key}[{}]: {}", i + 1, p.to_text(ring)));
        }
        self.json
            .insert(key.into(), Value::Array(ps.iter().map(|p| p.to_json(ring)).collect()));
        self
    }

    /// Copies every field of a JSON object.
    pub fn merge(self, v: Value) -> Self {
        match v {
            Value::Object(m) => m.into_iter().fold(self, |out, (k, v)| out.value(&k, v)),
            v => self.value("result", v),
        }
    }
}

/// An error plus optional structured detail for the error object.
pub struct Failure {
    pub error: Error,
    pub details: Option<Value>,
}

impl From<Error> for Failure {
    fn from(error: Error) -> Self {
        Failure {
            error,
            details: None,
        }
    }
}

pub struct Options {
    pub seed: u64,
    pub method: Option<Method>,
}

pub fn run<R: DivisionRing>(verb: Verb, ring: R, j: &Value, opts: &Options) -> std::result::Result<Output, Failure> {
    let frame = job::frame(ring, j)?;
    if verb == Verb::ValidateFrame {
        let report = frame.validate_with_seed(opts.seed);
        let details = report.to_json();
        return match report.into_result() {
            Ok(()) => Ok(Output::default().value("valid", json!(true)).merge(details)),
            Err(error) => Err(Failure {
                error,
                details: Some(details),
            }),
        };
    }
    let frame = frame.validated()?;
    Ok(run_on_frame(verb, &frame, j, opts)?)
}

fn run_on_frame<R: DivisionRing>(verb: Verb, frame: &Frame<R>, j: &Value, opts: &Options) -> Result<Output> {
    let ring = frame.ring();
    let out = Output::default();
    Ok(match verb {
        Verb::ValidateFrame | Verb::Selftest => unreachable!("handled by the caller"),
        Verb::Mul => {
            let f = job::poly(frame, j, "f")?;
            let g = job::poly(frame, j, "g")?;
            out.poly("product", ring, &mul(frame, &f, &g))
        }
        Verb::Divide => {
            let f = job::poly(frame, j, "f")?;
            let a = job::point(frame, j, "point")?;
            let d = divide(frame, &f, &a)?;
            out.polys("quotients", ring, &d.quotients)
                .value("remainder", ring.elem_to_json(&d.remainder))
        }
        Verb::Eval => {
            let f = job::poly(frame, j, "f")?;
            let a = job::point(frame, j, "point")?;
            out.value("value", ring.elem_to_json(&evaluate(frame, &f, &a)?))
        }
        Verb::Norm => {
            let a = job::point(frame, j, "point")?;
            let words = match job::usize_field(j, "degree")? {
                Some(d) => Monomial::all_below(frame.n(), d + 1),
                None => job::monomials(j, "monomials", frame.n())?,
            };
            let values = words
                .iter()
                .map(|m| {
                    Ok(json!({
                        "monomial": m.to_string(),
                        "value": ring.elem_to_json(&fundamental(frame, m, &a)?),
                    }))
                })
                .collect::<Result<Vec<_>>>()?;
            out.value("values", Value::Array(values))
        }
        Verb::Conjugate => {
            let a = job::point(frame, j, "point")?;
            let c = job::element(ring, j, "c")?;
            let out = out.value("conjugate", point_to_json(ring, &conjugate(frame, &a, &c)?));
            match (j.get("f"), j.get("g")) {
                (Some(_), Some(_)) => {
                    let f = job::poly(frame, j, "f")?;
                    let g = job::poly(frame, j, "g")?;
                    out.value("product_rule", check_product_rule(frame, &f, &g, &a)?.to_json(ring))
                }
                _ => out,
            }
        }
        Verb::Vandermonde => {
            let set = job::points(frame, j)?;
            let d = job::usize_field(j, "degree")?.unwrap_or(set.len());
            out.value("matrix", vandermonde(frame, &set, d)?.to_json(ring))
        }
        Verb::Rank => out.value("rank", json!(rank_of(frame, &job::points(frame, j)?)?)),
        Verb::Pbasis => out.merge(find_p_basis(frame, &job::points(frame, j)?)?.to_json(ring)),
        Verb::Closure => {
            let set = job::points(frame, j)?;
            let mut out = out.value("rank", json!(rank_of(frame, &set)?));
            if j.get("query").is_some() {
                let b = job::point(frame, j, "query")?;
                out = out.value("member", json!(!is_p_independent_from(frame, &b, &set)?));
            }
            if ring.is_finite() {
                out = out.value("closure", closure_members(frame, &set)?.to_json(ring));
            }
            out
        }
        Verb::TwoSided => out.value("two_sided", json!(is_two_sided(frame, &job::points(frame, j)?)?)),
        Verb::MatroidCheck => out.merge(matroid_check(frame, &job::points(frame, j)?)?.to_json()),
        Verb::Interpolate => {
            let set = job::points(frame, j)?;
            let values = job::elements(ring, j, "values")?;
            let method = match (opts.method, j.get("method").and_then(Value::as_str)) {
                (Some(m), _) => m,
                (None, None | Some("newton")) => Method::Newton,
                (None, Some("vandermonde")) => Method::Vandermonde,
                (None, Some(m)) => return Err(Error::Parse(format!("unknown method {m:?}"))),
            };
            let f = match method {
                Method::Newton => lagrange_interpolate(frame, &set, &values)?,
                Method::Vandermonde => lagrange_via_vandermonde(frame, &set, &values)?,
            };
            out.poly("polynomial", ring, &f)
        }
        Verb::DualBasis => {
            let set = job::points(frame, j)?;
            let dual = dual_p_basis(frame, &set, row_choice(j)?)?;
            out.value("basis", dual.basis.to_json(ring))
                .value(
                    "monomials",
                    json!(dual.monomials.iter().map(ToString::to_string).collect::<Vec<_>>()),
                )
                .polys("duals", ring, &dual.duals)
        }
        Verb::Reduce => {
            // modulo I(Ω) for Ω the closure of the given points
            let set = job::points(frame, j)?;
            let basis = find_p_basis(frame, &set)?.basis;
            let dual = dual_p_basis(frame, &basis, row_choice(j)?)?;
            let f = job::poly(frame, j, "f")?;
            let coords = reduce_mod_ideal(frame, &f, &dual)?;
            out.value("basis", basis.to_json(ring))
                .value("coordinates", point_to_json(ring, &coords))
                .poly("representative", ring, &representative(ring, &coords, &dual)?)
        }
    })
}

fn row_choice(j: &Value) -> Result<RowChoice> {
    match j.get("order").and_then(Value::as_str) {
        None | Some("ascending") => Ok(RowChoice::Ascending),
        Some("descending") => Ok(RowChoice::Descending),
        Some(o) => Err(Error::Parse(format!("unknown order {o:?}"))),
    }
}
