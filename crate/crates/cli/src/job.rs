//! Reading the fields of a job object.

use serde_json::Value;
use skewpoly::algebra::{DivisionRing, RingSpec};
use skewpoly::evaluation::{point_from_json, Point};
use skewpoly::frame::Frame;
use skewpoly::geometry::{ambient_space, PointSet};
use skewpoly::skewring::{Monomial, Poly};
use skewpoly::{Error, Result};

pub fn field<'a>(job: &'a Value, key: &str) -> Result<&'a Value> {
    job.get(key)
        .ok_or_else(|| Error::Parse(format!("job needs \"{key}\"")))
}

pub fn ring_spec(job: &Value) -> Result<RingSpec> {
    serde_json::from_value(field(job, "ring")?.clone())
        .map_err(|e| Error::Parse(format!("bad ring: {e}")))
}

/// The job's frame, unvalidated. `beta` in place of `delta` asks for the
/// inner derivation `δ(a) = σ(a)β − βa`.
pub fn frame<R: DivisionRing>(ring: R, job: &Value) -> Result<Frame<R>> {
    let v = field(job, "frame")?;
    let Some(beta) = v.get("beta") else {
        return Frame::from_json(ring, v);
    };
    if v.get("delta").is_some() {
        return Err(Error::Parse("frame takes \"delta\" or \"beta\", not both".into()));
    }
    let n = v.get("n").and_then(Value::as_u64).unwrap_or(0) as usize;
    let beta = point_from_json(&ring, beta, n)?;
    let bare = Frame::from_json(ring.clone(), v)?;
    let sigma = (0..n)
        .map(|i| (0..n).map(|j| bare.sigma_map(i, j).clone()).collect())
        .collect();
    Frame::inner(ring, sigma, &beta)
}

pub fn poly<R: DivisionRing>(frame: &Frame<R>, job: &Value, key: &str) -> Result<Poly<R>> {
    Poly::<R>::from_json(frame.ring(), field(job, key)?, frame.n())
}

pub fn point<R: DivisionRing>(frame: &Frame<R>, job: &Value, key: &str) -> Result<Point<R>> {
    point_from_json(frame.ring(), field(job, key)?, frame.n())
}

pub fn element<R: DivisionRing>(ring: &R, job: &Value, key: &str) -> Result<R::Elem> {
    ring.elem_from_json(field(job, key)?)
}

/// `"points"` as an array of points, or the string `"all"` for `F^n`.
pub fn points<R: DivisionRing>(frame: &Frame<R>, job: &Value) -> Result<PointSet<R::Elem>> {
    match field(job, "points")? {
        Value::String(s) if s == "all" => ambient_space(frame),
        v => PointSet::from_json(frame, v),
    }
}

pub fn elements<R: DivisionRing>(ring: &R, job: &Value, key: &str) -> Result<Vec<R::Elem>> {
    field(job, key)?
        .as_array()
        .ok_or_else(|| Error::Parse(format!("\"{key}\" must be an array")))?
        .iter()
        .map(|v| ring.elem_from_json(v))
        .collect()
}

pub fn monomials(job: &Value, key: &str, n: usize) -> Result<Vec<Monomial>> {
    field(job, key)?
        .as_array()
        .ok_or_else(|| Error::Parse(format!("\"{key}\" must be an array")))?
        .iter()
        .map(|v| match v {
            Value::String(s) => Monomial::parse(s, n),
            v => Monomial::from_json(v, n),
        })
        .collect()
}

pub fn usize_field(job: &Value, key: &str) -> Result<Option<usize>> {
    match job.get(key) {
        None => Ok(None),
        Some(v) => v
            .as_u64()
            .map(|d| Some(d as usize))
            .ok_or_else(|| Error::Parse(format!("\"{key}\" must be a non-negative integer"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;
    use skewpoly::algebra::FiniteField;

    #[test]
    fn beta_builds_the_inner_derivation() {
        let r = FiniteField::new(2, 2).unwrap();
        let job = json!({"frame": {"n": 1, "sigma": [[{"op": "frobenius"}]], "beta": [[0, 1]]}});
        let f = frame(r.clone(), &job).unwrap();
        let w = r.generator_t();
        let want = Frame::inner(r.clone(), vec![vec![r.frobenius_map(1)]], &[w]).unwrap();
        assert_eq!(f.delta_map(0), want.delta_map(0));
        // δ(w) = σ(w)w − w·w = w^3 − w^2
        assert_eq!(f.delta_entry(0, &w), r.sub(&r.mul(&r.mul(&w, &w), &w), &r.mul(&w, &w)));
        let both = json!({"frame": {"n": 1, "beta": [[0, 1]], "delta": [{"op": "zero"}]}});
        assert!(matches!(frame(r, &both), Err(Error::Parse(_))));
    }

    #[test]
    fn points_accepts_all() {
        let f = Frame::conventional(FiniteField::prime(3).unwrap(), 2);
        assert_eq!(points(&f, &json!({"points": "all"})).unwrap().len(), 9);
        assert_eq!(points(&f, &json!({"points": [[0, 1]]})).unwrap().len(), 1);
        assert!(points(&f, &json!({"points": [[0, 1, 2]]})).is_err());
        assert!(matches!(points(&f, &json!({})), Err(Error::Parse(_))));
    }

    #[test]
    fn monomials_in_either_syntax() {
        let m = monomials(&json!({"m": ["x1.x2", [2, 1], "1"]}), "m", 2).unwrap();
        assert_eq!(m[0].to_string(), "x1.x2");
        assert_eq!(m[1].to_string(), "x2.x1");
        assert!(m[2].is_one());
        assert!(monomials(&json!({"m": ["x3"]}), "m", 2).is_err());
    }
}
