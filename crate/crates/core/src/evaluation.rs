//! Right division by `x_i − a_i`, standard evaluation, fundamental functions,
//! conjugacy and the product rule.

use std::collections::HashMap;

use serde_json::{json, Value};

use crate::algebra::DivisionRing;
use crate::error::{Error, Result};
use crate::frame::Frame;
use crate::skewring::{mul, Monomial, MonomialConstantCache, Poly};

/// A point of `F^n`.
pub type Point<R> = Vec<<R as DivisionRing>::Elem>;

pub fn check_point<R: DivisionRing>(frame: &Frame<R>, a: &[R::Elem]) -> Result<()> {
    if a.len() != frame.n() {
        return Err(Error::InvalidInput(format!(
            "point has {} coordinates, the frame has {} variables",
            a.len(),
            frame.n()
        )));
    }
    Ok(())
}

pub fn point_to_json<R: DivisionRing>(ring: &R, a: &[R::Elem]) -> Value {
    Value::Array(a.iter().map(|c| ring.elem_to_json(c)).collect())
}

pub fn point_from_json<R: DivisionRing>(ring: &R, v: &Value, n: usize) -> Result<Point<R>> {
    let arr = v
        .as_array()
        .ok_or_else(|| Error::Parse("a point is an array of ring elements".into()))?;
    if arr.len() != n {
        return Err(Error::Parse(format!("a point needs {n} coordinates, got {}", arr.len())));
    }
    arr.iter().map(|c| ring.elem_from_json(c)).collect()
}

/// `F = Σ G_i (x_i − a_i) + b`
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivisionResult<E> {
    pub quotients: Vec<crate::skewring::SkewPolynomial<E>>,
    pub remainder: E,
}

impl<E: Clone + PartialEq + Eq + std::hash::Hash> DivisionResult<E> {
    /// Rebuilds `Σ G_i (x_i − a_i) + b`.
    pub fn reconstruct<R: DivisionRing<Elem = E>>(&self, frame: &Frame<R>, a: &[E]) -> Poly<R> {
        let ring = frame.ring();
        let mut out = Poly::<R>::constant(ring, self.remainder.clone());
        for (i, g) in self.quotients.iter().enumerate() {
            out = out.add(ring, &mul(frame, g, &Poly::<R>::linear(ring, i, &a[i])));
        }
        out
    }

    pub fn to_json<R: DivisionRing<Elem = E>>(&self, ring: &R) -> Value {
        json!({
            "quotients": self.quotients.iter().map(|g| g.to_json(ring)).collect::<Vec<_>>(),
            "remainder": ring.elem_to_json(&self.remainder),
        })
    }
}

/// Right division of `f` by `x_1 − a_1, …, x_n − a_n`.
///
/// The current leading monomial `m' x_i` with coefficient `c` is removed by
/// subtracting `c m' (x_i − a_i)`; what comes back is `c (m' a_i)`, of
/// smaller degree, so the leading monomial strictly decreases.
pub fn divide<R: DivisionRing>(
    frame: &Frame<R>,
    f: &Poly<R>,
    a: &[R::Elem],
) -> Result<DivisionResult<R::Elem>> {
    check_point(frame, a)?;
    f.check(frame.ring(), frame.n())?;
    let ring = frame.ring();
    let mut cache = MonomialConstantCache::new(frame);
    let mut quotients = vec![Poly::<R>::zero(); frame.n()];
    let mut rest = f.clone();
    loop {
        let Ok((lm, c)) = rest.leading_term() else { break };
        let Some((prefix, i)) = lm.split_last() else { break };
        let (lm, c) = (lm.clone(), c.clone());
        quotients[i].add_term(ring, prefix.clone(), c.clone());
        rest.add_term(ring, lm, ring.neg(&c));
        for (m, e) in cache.get(&prefix, &a[i]).terms() {
            rest.add_term(ring, m.clone(), ring.mul(&c, e));
        }
    }
    let remainder = rest
        .coeff(&Monomial::one())
        .cloned()
        .unwrap_or_else(|| ring.zero());
    Ok(DivisionResult {
        quotients,
        remainder,
    })
}

/// `F(a)` as the remainder of [`divide`].
pub fn evaluate_by_division<R: DivisionRing>(
    frame: &Frame<R>,
    f: &Poly<R>,
    a: &[R::Elem],
) -> Result<R::Elem> {
    Ok(divide(frame, f, a)?.remainder)
}

/// Fundamental functions `N_m(a)` at one point, memoized on word suffixes.
pub struct Fundamentals<'f, R: DivisionRing> {
    frame: &'f Frame<R>,
    point: Vec<R::Elem>,
    memo: HashMap<Monomial, R::Elem>,
}

impl<'f, R: DivisionRing> Fundamentals<'f, R> {
    pub fn new(frame: &'f Frame<R>, a: &[R::Elem]) -> Result<Self> {
        check_point(frame, a)?;
        Ok(Fundamentals {
            frame,
            point: a.to_vec(),
            memo: HashMap::new(),
        })
    }

    /// Row `i` of `σ(N) a + δ(N)`.
    fn step(&self, i: usize, prev: &R::Elem) -> R::Elem {
        let ring = self.frame.ring();
        (0..self.frame.n()).fold(self.frame.delta_entry(i, prev), |acc, j| {
            let s = self.frame.sigma_entry(i, j, prev);
            ring.add(&acc, &ring.mul(&s, &self.point[j]))
        })
    }

    /// `N_1 = 1` and `N_{x_i m} = (σ(N_m) a + δ(N_m))_i`, walking the word
    /// from its right end.
    pub fn get(&mut self, m: &Monomial) -> R::Elem {
        let d = m.degree();
        let mut start = d;
        let mut value = self.frame.ring().one();
        while start > 0 {
            if let Some(v) = self.memo.get(&m.suffix(start - 1)) {
                value = v.clone();
                start -= 1;
            } else {
                break;
            }
        }
        // `value` is N of suffix(start); extend leftwards.
        let letters: Vec<usize> = m.indices().collect();
        while start > 0 {
            start -= 1;
            value = self.step(letters[start], &value);
            self.memo.insert(m.suffix(start), value.clone());
        }
        value
    }

    /// `Σ F_m N_m(a)`
    pub fn evaluate(&mut self, f: &Poly<R>) -> R::Elem {
        let ring = self.frame.ring().clone();
        f.terms().fold(ring.zero(), |acc, (m, c)| {
            let n = self.get(m);
            ring.add(&acc, &ring.mul(c, &n))
        })
    }
}

pub fn fundamental<R: DivisionRing>(
    frame: &Frame<R>,
    m: &Monomial,
    a: &[R::Elem],
) -> Result<R::Elem> {
    Ok(Fundamentals::new(frame, a)?.get(m))
}

/// `F(a)` through fundamental functions.
pub fn evaluate<R: DivisionRing>(frame: &Frame<R>, f: &Poly<R>, a: &[R::Elem]) -> Result<R::Elem> {
    f.check(frame.ring(), frame.n())?;
    Ok(Fundamentals::new(frame, a)?.evaluate(f))
}

/// `N_m(a)` for every monomial of degree `< d`, in ascending monomial order.
///
/// Built level by level: one application of `σ(N) a + δ(N)` to a word of
/// degree `e` yields the values of all `n` words of degree `e + 1` that
/// extend it on the left.
pub fn fundamental_table<R: DivisionRing>(
    frame: &Frame<R>,
    a: &[R::Elem],
    d: usize,
) -> Result<Vec<R::Elem>> {
    let f = Fundamentals::new(frame, a)?;
    let n = frame.n();
    let mut values: HashMap<Monomial, R::Elem> = HashMap::new();
    let mut level = vec![(Monomial::one(), frame.ring().one())];
    for e in 0..d {
        let mut next = Vec::new();
        for (m, v) in &level {
            values.insert(m.clone(), v.clone());
            if e + 1 < d {
                for i in 0..n {
                    next.push((Monomial::var(i).concat(m), f.step(i, v)));
                }
            }
        }
        level = next;
    }
    Ok(Monomial::all_below(n, d)
        .iter()
        .map(|m| values.remove(m).expect("every word below d is tabulated"))
        .collect())
}

/// `a^c = σ(c) a c⁻¹ + δ(c) c⁻¹`
pub fn conjugate<R: DivisionRing>(
    frame: &Frame<R>,
    a: &[R::Elem],
    c: &R::Elem,
) -> Result<Point<R>> {
    check_point(frame, a)?;
    let ring = frame.ring();
    let ci = ring.inv(c)?;
    Ok((0..frame.n())
        .map(|i| {
            let twisted = (0..frame.n()).fold(frame.delta_entry(i, c), |acc, j| {
                ring.add(&acc, &ring.mul(&frame.sigma_entry(i, j, c), &a[j]))
            });
            ring.mul(&twisted, &ci)
        })
        .collect())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductRuleReport<E> {
    /// `c = G(a)`
    pub g_at_a: E,
    /// `(FG)(a)`
    pub fg_at_a: E,
    /// `a^c`, absent when `c = 0`.
    pub conjugate: Option<Vec<E>>,
    /// `F(a^c)`, absent when `c = 0`.
    pub f_at_conjugate: Option<E>,
    /// The predicted value of `(FG)(a)`.
    pub expected: E,
    pub holds: bool,
}

impl<E> ProductRuleReport<E> {
    pub fn to_json<R: DivisionRing<Elem = E>>(&self, ring: &R) -> Value {
        json!({
            "g_at_a": ring.elem_to_json(&self.g_at_a),
            "fg_at_a": ring.elem_to_json(&self.fg_at_a),
            "conjugate": self.conjugate.as_ref().map(|p| point_to_json(ring, p)),
            "f_at_conjugate": self.f_at_conjugate.as_ref().map(|v| ring.elem_to_json(v)),
            "expected": ring.elem_to_json(&self.expected),
            "holds": self.holds,
        })
    }
}

/// Checks `(FG)(a) = F(a^c) G(a)` with `c = G(a)`, or `(FG)(a) = 0` if `c = 0`.
pub fn check_product_rule<R: DivisionRing>(
    frame: &Frame<R>,
    f: &Poly<R>,
    g: &Poly<R>,
    a: &[R::Elem],
) -> Result<ProductRuleReport<R::Elem>> {
    let ring = frame.ring();
    let c = evaluate(frame, g, a)?;
    let fg_at_a = evaluate(frame, &mul(frame, f, g), a)?;
    let (conj, f_at_conj, expected) = if ring.is_zero(&c) {
        (None, None, ring.zero())
    } else {
        let ac = conjugate(frame, a, &c)?;
        let fac = evaluate(frame, f, &ac)?;
        let e = ring.mul(&fac, &c);
        (Some(ac), Some(fac), e)
    };
    Ok(ProductRuleReport {
        holds: fg_at_a == expected,
        g_at_a: c,
        fg_at_a,
        conjugate: conj,
        f_at_conjugate: f_at_conj,
        expected,
    })
}
