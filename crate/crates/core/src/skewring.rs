//! The free skew polynomial ring `F[x; σ, δ]`.
//!
//! Polynomials are finite left combinations `Σ F_m m` of words in the
//! variables. Words multiply by concatenation; constants move left across a
//! variable through `x_i a = Σ_j σ_{i,j}(a) x_j + δ_i(a)`.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::Add;

use serde_json::{json, Value};

use crate::algebra::DivisionRing;
use crate::error::{Error, Result};
use crate::frame::Frame;

/// A word in `x_1, …, x_n`, stored with 0-based indices.
///
/// Ordered by degree, then lexicographically reading from the right end
/// with `x_1 ≺ x_2 ≺ …`. Multiplying on the right by a variable is
/// monotone for this order, which division relies on.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial(Vec<u16>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    /// The single variable `x_{i+1}`.
    pub fn var(i: usize) -> Self {
        Monomial(vec![i as u16])
    }

    /// From 0-based variable indices.
    pub fn from_indices(word: &[usize]) -> Self {
        Monomial(word.iter().map(|&i| i as u16).collect())
    }

    pub fn indices(&self) -> impl DoubleEndedIterator<Item = usize> + ExactSizeIterator + '_ {
        self.0.iter().map(|&i| i as usize)
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn max_var(&self) -> Option<usize> {
        self.indices().max()
    }

    pub fn concat(&self, other: &Monomial) -> Monomial {
        let mut w = Vec::with_capacity(self.0.len() + other.0.len());
        w.extend_from_slice(&self.0);
        w.extend_from_slice(&other.0);
        Monomial(w)
    }

    /// `m = m' x_i` as `(m', i)`.
    pub fn split_last(&self) -> Option<(Monomial, usize)> {
        self.0
            .split_last()
            .map(|(&i, rest)| (Monomial(rest.to_vec()), i as usize))
    }

    /// `m = x_i m'` as `(i, m')`.
    pub fn split_first(&self) -> Option<(usize, Monomial)> {
        self.0
            .split_first()
            .map(|(&i, rest)| (i as usize, Monomial(rest.to_vec())))
    }

    pub fn prefix(&self, len: usize) -> Monomial {
        Monomial(self.0[..len].to_vec())
    }

    pub fn suffix(&self, start: usize) -> Monomial {
        Monomial(self.0[start..].to_vec())
    }

    /// Every word of degree `< d` in `n` variables, ascending.
    pub fn all_below(n: usize, d: usize) -> Vec<Monomial> {
        let mut out = Vec::new();
        let mut level = vec![Monomial::one()];
        for _ in 0..d {
            out.extend(level.iter().cloned());
            let mut next = Vec::with_capacity(level.len() * n);
            // Prepending keeps each level sorted: the rightmost characters
            // are inherited from the previous (sorted) level.
            for i in 0..n {
                for m in &level {
                    let mut w = Vec::with_capacity(m.0.len() + 1);
                    w.push(i as u16);
                    w.extend_from_slice(&m.0);
                    next.push(Monomial(w));
                }
            }
            next.sort();
            level = next;
        }
        out
    }

    /// Number of words of degree `< d` in `n` variables.
    pub fn count_below(n: usize, d: usize) -> usize {
        (0..d).map(|e| n.pow(e as u32)).sum()
    }

    /// 1-based indices for the wire format.
    pub fn to_json(&self) -> Value {
        Value::from(self.indices().map(|i| i + 1).collect::<Vec<_>>())
    }

    pub fn from_json(v: &Value, n: usize) -> Result<Monomial> {
        let arr = v
            .as_array()
            .ok_or_else(|| Error::Parse("monomial must be an array of variable indices".into()))?;
        let word = arr
            .iter()
            .map(|x| match x.as_u64() {
                Some(i) if i >= 1 && (i as usize) <= n => Ok(i as usize - 1),
                _ => Err(Error::Parse(format!("variable index must be in 1..={n}, got {x}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Monomial::from_indices(&word))
    }

    pub fn parse(s: &str, n: usize) -> Result<Monomial> {
        let s = s.trim();
        if s == "1" {
            return Ok(Monomial::one());
        }
        let word = s
            .split('.')
            .map(|v| {
                let i: usize = v
                    .trim()
                    .strip_prefix('x')
                    .and_then(|d| d.parse().ok())
                    .ok_or_else(|| Error::Parse(format!("bad variable {v:?}")))?;
                if i == 0 || i > n {
                    return Err(Error::Parse(format!("variable x{i} outside 1..={n}")));
                }
                Ok(i - 1)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Monomial::from_indices(&word))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.iter().rev().cmp(other.0.iter().rev()))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (k, i) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(".")?;
            }
            write!(f, "x{}", i + 1)?;
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Degree of a polynomial. The zero polynomial has degree `Bottom`, which
/// absorbs under addition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    Bottom,
    Finite(usize),
}

impl Degree {
    pub fn finite(self) -> Option<usize> {
        match self {
            Degree::Bottom => None,
            Degree::Finite(d) => Some(d),
        }
    }
}

impl Add for Degree {
    type Output = Degree;
    fn add(self, rhs: Degree) -> Degree {
        match (self, rhs) {
            (Degree::Finite(a), Degree::Finite(b)) => Degree::Finite(a + b),
            _ => Degree::Bottom,
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::Bottom => f.write_str("bottom"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

/// A skew polynomial `Σ F_m m` with coefficients on the left. Zero
/// coefficients are never stored, so structural equality is ring equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SkewPolynomial<E> {
    terms: BTreeMap<Monomial, E>,
}

impl<E> Default for SkewPolynomial<E> {
    fn default() -> Self {
        SkewPolynomial {
            terms: BTreeMap::new(),
        }
    }
}

impl<E: fmt::Debug> fmt::Debug for SkewPolynomial<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{c:?}*{m}")?;
        }
        Ok(())
    }
}

/// Shorthand for the polynomial type over a ring.
pub type Poly<R> = SkewPolynomial<<R as DivisionRing>::Elem>;

impl<E: Clone + PartialEq> SkewPolynomial<E> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &E)> + ExactSizeIterator {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Option<&E> {
        self.terms.get(m)
    }

    pub fn degree(&self) -> Degree {
        match self.terms.keys().next_back() {
            None => Degree::Bottom,
            // The order is graded, so the last key has maximal degree.
            Some(m) => Degree::Finite(m.degree()),
        }
    }

    pub fn leading_monomial(&self) -> Result<&Monomial> {
        self.terms.keys().next_back().ok_or(Error::ZeroPolynomial)
    }

    pub fn leading_term(&self) -> Result<(&Monomial, &E)> {
        self.terms.iter().next_back().ok_or(Error::ZeroPolynomial)
    }

    /// Largest variable index used, 0-based.
    pub fn max_var(&self) -> Option<usize> {
        self.terms.keys().filter_map(Monomial::max_var).max()
    }
}

impl<E: Clone + PartialEq + Eq + std::hash::Hash> SkewPolynomial<E> {
    pub fn constant<R: DivisionRing<Elem = E>>(ring: &R, c: E) -> Self {
        Self::monomial(ring, c, Monomial::one())
    }

    pub fn monomial<R: DivisionRing<Elem = E>>(ring: &R, c: E, m: Monomial) -> Self {
        let mut p = Self::zero();
        p.add_term(ring, m, c);
        p
    }

    pub fn from_terms<R: DivisionRing<Elem = E>>(
        ring: &R,
        terms: impl IntoIterator<Item = (Monomial, E)>,
    ) -> Self {
        let mut p = Self::zero();
        for (m, c) in terms {
            p.add_term(ring, m, c);
        }
        p
    }

    /// `x_{i+1} − a`
    pub fn linear<R: DivisionRing<Elem = E>>(ring: &R, i: usize, a: &E) -> Self {
        Self::from_terms(ring, [(Monomial::var(i), ring.one()), (Monomial::one(), ring.neg(a))])
    }

    /// Adds `c·m` in place.
    pub fn add_term<R: DivisionRing<Elem = E>>(&mut self, ring: &R, m: Monomial, c: E) {
        if ring.is_zero(&c) {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = ring.add(o.get(), &c);
                if ring.is_zero(&s) {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add<R: DivisionRing<Elem = E>>(&self, ring: &R, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(ring, m.clone(), c.clone());
        }
        out
    }

    pub fn neg<R: DivisionRing<Elem = E>>(&self, ring: &R) -> Self {
        SkewPolynomial {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), ring.neg(c))).collect(),
        }
    }

    pub fn sub<R: DivisionRing<Elem = E>>(&self, ring: &R, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(ring, m.clone(), ring.neg(c));
        }
        out
    }

    /// `c·F`
    pub fn scale_left<R: DivisionRing<Elem = E>>(&self, ring: &R, c: &E) -> Self {
        if ring.is_zero(c) {
            return Self::zero();
        }
        SkewPolynomial {
            terms: self.terms.iter().map(|(m, f)| (m.clone(), ring.mul(c, f))).collect(),
        }
    }

    /// `F·n` for a monomial `n`; exact because the product of words is
    /// concatenation.
    pub fn append_monomial(&self, n: &Monomial) -> Self {
        SkewPolynomial {
            terms: self.terms.iter().map(|(m, c)| (m.concat(n), c.clone())).collect(),
        }
    }

    /// Checks that coefficients are nonzero and every variable is `< n`.
    pub fn check<R: DivisionRing<Elem = E>>(&self, ring: &R, n: usize) -> Result<()> {
        if self.terms.values().any(|c| ring.is_zero(c)) {
            return Err(Error::InvalidInput("stored zero coefficient".into()));
        }
        match self.max_var() {
            Some(v) if v >= n => Err(Error::InvalidInput(format!(
                "polynomial uses x{} but the frame has {n} variables",
                v + 1
            ))),
            _ => Ok(()),
        }
    }

    /// Terms `coeff*x1.x2` joined by `" + "`, highest monomial first; `"0"`
    /// for the zero polynomial.
    pub fn to_text<R: DivisionRing<Elem = E>>(&self, ring: &R) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        self.terms
            .iter()
            .rev()
            .map(|(m, c)| format!("{}*{}", ring.format_elem(c), m))
            .collect::<Vec<_>>()
            .join(" + ")
    }

    /// Inverse of [`to_text`](Self::to_text). A term without `*` is read as a
    /// monomial with coefficient 1 if it looks like one, else as a constant.
    pub fn parse_text<R: DivisionRing<Elem = E>>(ring: &R, s: &str, n: usize) -> Result<Self> {
        let s = s.trim();
        if s == "0" {
            return Ok(Self::zero());
        }
        let mut p = Self::zero();
        for term in s.split(" + ") {
            let term = term.trim();
            if term.is_empty() {
                return Err(Error::Parse("empty term".into()));
            }
            let (c, m) = match term.rsplit_once('*') {
                Some((c, m)) => (ring.parse_elem(c)?, Monomial::parse(m, n)?),
                None if term.starts_with('x') => (ring.one(), Monomial::parse(term, n)?),
                None => (ring.parse_elem(term)?, Monomial::one()),
            };
            p.add_term(ring, m, c);
        }
        Ok(p)
    }

    /// `[{"monomial": [1-based indices], "coeff": element}]`, ascending.
    pub fn to_json<R: DivisionRing<Elem = E>>(&self, ring: &R) -> Value {
        Value::Array(
            self.terms
                .iter()
                .map(|(m, c)| json!({"monomial": m.to_json(), "coeff": ring.elem_to_json(c)}))
                .collect(),
        )
    }

    /// Accepts the JSON term list or a string in the text format.
    pub fn from_json<R: DivisionRing<Elem = E>>(ring: &R, v: &Value, n: usize) -> Result<Self> {
        if let Some(s) = v.as_str() {
            return Self::parse_text(ring, s, n);
        }
        let arr = v
            .as_array()
            .ok_or_else(|| Error::Parse("polynomial must be a term array or a string".into()))?;
        let mut p = Self::zero();
        for t in arr {
            let m = Monomial::from_json(
                t.get("monomial")
                    .ok_or_else(|| Error::Parse("term needs \"monomial\"".into()))?,
                n,
            )?;
            let c = ring.elem_from_json(
                t.get("coeff")
                    .ok_or_else(|| Error::Parse("term needs \"coeff\"".into()))?,
            )?;
            p.add_term(ring, m, c);
        }
        Ok(p)
    }
}

/// Expands `m·a` for monomials `m` and constants `a`, remembering results.
///
/// `m' x_i · a = Σ_j (m'·σ_{i,j}(a)) x_j + m'·δ_i(a)`, recursing on the
/// prefix `m'`. Results are keyed on `(m, a)`, so one cache serves every
/// product taken under the same frame.
pub struct MonomialConstantCache<'f, R: DivisionRing> {
    frame: &'f Frame<R>,
    memo: HashMap<(Monomial, R::Elem), Poly<R>>,
}

impl<'f, R: DivisionRing> MonomialConstantCache<'f, R> {
    pub fn new(frame: &'f Frame<R>) -> Self {
        MonomialConstantCache {
            frame,
            memo: HashMap::new(),
        }
    }

    pub fn get(&mut self, m: &Monomial, a: &R::Elem) -> Poly<R> {
        let ring = self.frame.ring();
        if ring.is_zero(a) {
            return Poly::<R>::zero();
        }
        let Some((prefix, i)) = m.split_last() else {
            return Poly::<R>::constant(ring, a.clone());
        };
        let key = (m.clone(), a.clone());
        if let Some(p) = self.memo.get(&key) {
            return p.clone();
        }
        let n = self.frame.n();
        let mut out = Poly::<R>::zero();
        for j in 0..n {
            let s = self.frame.sigma_entry(i, j, a);
            if ring.is_zero(&s) {
                continue;
            }
            let xj = Monomial::var(j);
            for (mm, c) in self.get(&prefix, &s).terms {
                out.add_term(ring, mm.concat(&xj), c);
            }
        }
        let d = self.frame.delta_entry(i, a);
        for (mm, c) in self.get(&prefix, &d).terms {
            out.add_term(ring, mm, c);
        }
        self.memo.insert(key, out.clone());
        out
    }
}

/// `m·a` as a polynomial of degree at most `deg(m)`.
pub fn mul_monomial_constant<R: DivisionRing>(
    frame: &Frame<R>,
    m: &Monomial,
    a: &R::Elem,
) -> Poly<R> {
    MonomialConstantCache::new(frame).get(m, a)
}

/// The product `FG = Σ_m Σ_n F_m (m·G_n) n`.
pub fn mul<R: DivisionRing>(frame: &Frame<R>, f: &Poly<R>, g: &Poly<R>) -> Poly<R> {
    let mut cache = MonomialConstantCache::new(frame);
    mul_with_cache(&mut cache, f, g)
}

/// [`mul`] sharing a cache across several products under one frame.
pub fn mul_with_cache<R: DivisionRing>(
    cache: &mut MonomialConstantCache<'_, R>,
    f: &Poly<R>,
    g: &Poly<R>,
) -> Poly<R> {
    let ring = cache.frame.ring().clone();
    let mut out = Poly::<R>::zero();
    for (n, gn) in g.terms() {
        for (m, fm) in f.terms() {
            for (mm, c) in cache.get(m, gn).terms {
                out.add_term(&ring, mm.concat(n), ring.mul(fm, &c));
            }
        }
    }
    out
}
