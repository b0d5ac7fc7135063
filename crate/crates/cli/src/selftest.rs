//! Worked examples run through the same job pipeline as the verbs, plus a
//! few seeded randomized identities.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};
use skewpoly::algebra::{AnyRing, DivisionRing, FiniteField, Gf};
use skewpoly::evaluation::{check_product_rule, divide, evaluate};
use skewpoly::frame::Frame;
use skewpoly::geometry::{ambient_space, PointSet};
use skewpoly::interpolation::{lagrange_interpolate, lagrange_via_vandermonde};
use skewpoly::skewring::{Monomial, Poly};

use crate::verbs::{self, Options};
use crate::{job, Verb};

enum Expect {
    Field(&'static str, Value),
    Error(&'static str),
}

fn gf(p: u32) -> Value {
    json!({"kind": "prime-field", "p": p})
}

fn gf4() -> Value {
    json!({"kind": "extension-field", "p": 2, "k": 2})
}

fn quaternions() -> Value {
    json!({"kind": "rational-quaternion"})
}

fn frobenius4() -> Value {
    json!({"n": 1, "sigma": [[{"op": "frobenius", "power": 1}]]})
}

fn worked_examples() -> Vec<(&'static str, Verb, Value, Expect)> {
    let (one, w, w2) = (json!([1, 0]), json!([0, 1]), json!([1, 1]));
    let q = |w: i64, x: i64, y: i64, z: i64| json!([w, x, y, z]);
    vec![
        (
            "x1.x2 at (2, 3) over GF(5) is a2*a1",
            Verb::Eval,
            json!({"ring": gf(5), "frame": {"n": 2}, "f": "x1.x2", "point": [2, 3]}),
            Expect::Field("value", json!(1)),
        ),
        (
            "division of x1.x2 by (x1 - 2, x2 - 3) leaves 1",
            Verb::Divide,
            json!({"ring": gf(5), "frame": {"n": 2}, "f": "x1.x2", "point": [2, 3]}),
            Expect::Field("remainder", json!(1)),
        ),
        (
            "GF(2)^2 has rank 4",
            Verb::Rank,
            json!({"ring": gf(2), "frame": {"n": 2}, "points": "all"}),
            Expect::Field("rank", json!(4)),
        ),
        (
            "GF(3)^2 has rank 9",
            Verb::Rank,
            json!({"ring": gf(3), "frame": {"n": 2}, "points": "all"}),
            Expect::Field("rank", json!(9)),
        ),
        (
            "sigma(1) = 0 is rejected",
            Verb::ValidateFrame,
            json!({"ring": gf(5), "frame": {"n": 1, "sigma": [[{"op": "zero"}]]}}),
            Expect::Error("InvalidFrame"),
        ),
        (
            "a -> a^2 + a on GF(4) is not multiplicative",
            Verb::ValidateFrame,
            json!({"ring": gf4(), "frame": {"n": 1, "sigma": [[{"op": "sum", "terms": [
                {"op": "frobenius", "power": 1}, {"op": "identity"}]}]]}}),
            Expect::Error("InvalidFrame"),
        ),
        (
            "Frobenius on GF(4) with an inner derivation is valid",
            Verb::ValidateFrame,
            json!({"ring": gf4(), "frame": {"n": 1, "sigma": [[{"op": "frobenius"}]], "beta": [w]}}),
            Expect::Field("valid", json!(true)),
        ),
        (
            "{1, w, w^2} under Frobenius on GF(4) has rank 2",
            Verb::Rank,
            json!({"ring": gf4(), "frame": frobenius4(), "points": [[one], [w], [w2]]}),
            Expect::Field("rank", json!(2)),
        ),
        (
            "I({1}) under Frobenius on GF(4) is not two-sided",
            Verb::TwoSided,
            json!({"ring": gf4(), "frame": frobenius4(), "points": [[one]]}),
            Expect::Field("two_sided", json!(false)),
        ),
        (
            "I({1, w}) under Frobenius on GF(4) is two-sided",
            Verb::TwoSided,
            json!({"ring": gf4(), "frame": frobenius4(), "points": [[one], [w]]}),
            Expect::Field("two_sided", json!(true)),
        ),
        (
            "x^2 + 1 vanishes at k",
            Verb::Eval,
            json!({"ring": quaternions(), "frame": {"n": 1}, "point": [q(0, 0, 0, 1)], "f": [
                {"monomial": [1, 1], "coeff": q(1, 0, 0, 0)}, {"monomial": [], "coeff": q(1, 0, 0, 0)}]}),
            Expect::Field("value", json!(["0/1", "0/1", "0/1", "0/1"])),
        ),
        (
            "k lies in the closure of {i, j}",
            Verb::Closure,
            json!({"ring": quaternions(), "frame": {"n": 1},
                   "points": [[q(0, 1, 0, 0)], [q(0, 0, 1, 0)]], "query": [q(0, 0, 0, 1)]}),
            Expect::Field("member", json!(true)),
        ),
        (
            "interpolating 1, 2, 0 at 0, 1, 2 over GF(5) gives x^2 + 1",
            Verb::Interpolate,
            json!({"ring": gf(5), "frame": {"n": 1}, "points": [[0], [1], [2]], "values": [1, 2, 0]}),
            Expect::Field("polynomial", json!([{"monomial": [], "coeff": 1}, {"monomial": [1, 1], "coeff": 1}])),
        ),
        (
            "a repeated interpolation node is rejected",
            Verb::Interpolate,
            json!({"ring": gf(5), "frame": {"n": 1}, "points": [[0], [0]], "values": [1, 2]}),
            Expect::Error("DuplicatePoint"),
        ),
        (
            "the quaternions are not enumerable",
            Verb::TwoSided,
            json!({"ring": quaternions(), "frame": {"n": 1}, "points": [[q(0, 1, 0, 0)]]}),
            Expect::Error("NotFinite"),
        ),
        (
            "P-independent sets under Frobenius on GF(4) form a matroid",
            Verb::MatroidCheck,
            json!({"ring": gf4(), "frame": frobenius4(), "points": "all"}),
            Expect::Field("matroid", json!(true)),
        ),
    ]
}

fn run_example(verb: Verb, job: &Value, expect: &Expect, seed: u64) -> Result<(), String> {
    let opts = Options { seed, method: None };
    let ring = job::ring_spec(job)
        .and_then(|s| AnyRing::from_spec(&s))
        .map_err(|e| e.to_string())?;
    let result = match ring {
        AnyRing::Finite(f) => verbs::run(verb, f, job, &opts),
        AnyRing::Quaternion(q) => verbs::run(verb, q, job, &opts),
    };
    match (result, expect) {
        (Ok(out), Expect::Field(key, want)) => match out.json.get(*key) {
            Some(got) if got == want => Ok(()),
            got => Err(format!("{key} = {got:?}, expected {want}")),
        },
        (Err(f), Expect::Error(name)) if f.error.name() == *name => Ok(()),
        (Err(f), _) => Err(format!("unexpected error {}: {}", f.error.name(), f.error)),
        (Ok(_), Expect::Error(name)) => Err(format!("expected error {name}")),
    }
}

fn random_poly(frame: &Frame<FiniteField>, rng: &mut ChaCha8Rng) -> Poly<FiniteField> {
    let r = frame.ring();
    let words = Monomial::all_below(frame.n(), 3);
    let terms = (0..rng.gen_range(1..=4)).map(|_| {
        let m = words[rng.gen_range(0..words.len())].clone();
        (m, r.random(rng))
    });
    Poly::<FiniteField>::from_terms(r, terms)
}

fn interpolates(frame: &Frame<FiniteField>, f: &Poly<FiniteField>, set: &PointSet<Gf>, values: &[Gf]) -> bool {
    set.points()
        .iter()
        .zip(values)
        .all(|(b, a)| evaluate(frame, f, b).is_ok_and(|v| v == *a))
}

/// Seeded checks of identities that hold for every input.
fn randomized(seed: u64) -> Vec<(&'static str, Result<(), String>)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let gf9 = FiniteField::new(3, 2).expect("GF(9)");
    let fr = gf9.frobenius_map(1);
    let sigma = vec![vec![fr.clone(), gf9.map_zero()], vec![gf9.map_zero(), fr]];
    let inner = Frame::inner(gf9.clone(), sigma, &[gf9.generator_t(), gf9.from_int(2)]).expect("valid frame");
    let points = ambient_space(&inner).expect("finite");
    let pick = |rng: &mut ChaCha8Rng| points.get(rng.gen_range(0..points.len())).to_vec();

    let mut division = Ok(());
    let mut product = Ok(());
    for k in 0..200 {
        let (f, g, a) = (random_poly(&inner, &mut rng), random_poly(&inner, &mut rng), pick(&mut rng));
        let d = divide(&inner, &f, &a).map_err(|e| e.to_string());
        if !d.is_ok_and(|d| d.reconstruct(&inner, &a) == f) {
            division = Err(format!("reconstruction failed on case {k}"));
        }
        if !check_product_rule(&inner, &f, &g, &a).is_ok_and(|r| r.holds) {
            product = Err(format!("product rule failed on case {k}"));
        }
    }

    let mut interpolation = Ok(());
    for k in 0..50 {
        let size = rng.gen_range(1..=4);
        let mut pts: Vec<Vec<_>> = Vec::new();
        while pts.len() < size {
            let p = pick(&mut rng);
            if !pts.contains(&p) {
                pts.push(p);
            }
        }
        let set = PointSet::new(&inner, pts).expect("distinct points");
        let values: Vec<_> = (0..size).map(|_| gf9.random(&mut rng)).collect();
        match (
            lagrange_interpolate(&inner, &set, &values),
            lagrange_via_vandermonde(&inner, &set, &values),
        ) {
            (Ok(f), Ok(g)) if [&f, &g].iter().all(|h| interpolates(&inner, h, &set, &values)) => {}
            (Err(e), Err(e2)) if e == e2 => {}
            _ => interpolation = Err(format!("Newton and Vandermonde disagree on case {k}")),
        }
    }
    vec![
        ("division reconstructs F over GF(9) with an inner derivation", division),
        ("product rule over GF(9) with an inner derivation", product),
        ("Newton and Vandermonde interpolation agree", interpolation),
    ]
}

pub fn run(seed: u64) -> verbs::Output {
    let mut cases = Vec::new();
    for (name, verb, job, expect) in worked_examples() {
        cases.push((name, run_example(verb, &job, &expect, seed)));
    }
    cases.extend(randomized(seed));
    let passed = cases.iter().filter(|(_, r)| r.is_ok()).count();
    let list: Vec<Value> = cases
        .iter()
        .map(|(name, r)| match r {
            Ok(()) => json!({"name": name, "passed": true}),
            Err(why) => json!({"name": name, "passed": false, "detail": why}),
        })
        .collect();
    verbs::Output::default()
        .value("seed", json!(seed))
        .value("passed", json!(passed))
        .value("failed", json!(cases.len() - passed))
        .value("cases", Value::Array(list))
}
