use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use super::{DivisionRing, RingKind, RingSpec};
use crate::error::{Error, Result};

/// Random frame-validation pairs drawn in addition to the generator pairs.
const VALIDATION_SAMPLES: usize = 256;

/// `w + x·i + y·j + z·k` with exact rational components.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Quaternion {
    pub w: BigRational,
    pub x: BigRational,
    pub y: BigRational,
    pub z: BigRational,
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn format_rational(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || Error::Parse(format!("not a rational number: {s:?}"));
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(n, d))
}

impl Quaternion {
    pub fn new(w: BigRational, x: BigRational, y: BigRational, z: BigRational) -> Self {
        Quaternion { w, x, y, z }
    }

    /// Integer components.
    pub fn from_ints(w: i64, x: i64, y: i64, z: i64) -> Self {
        Quaternion::new(rat(w, 1), rat(x, 1), rat(y, 1), rat(z, 1))
    }

    /// Components given as `(numerator, denominator)` pairs.
    pub fn from_ratios(c: [(i64, i64); 4]) -> Self {
        Quaternion::new(
            rat(c[0].0, c[0].1),
            rat(c[1].0, c[1].1),
            rat(c[2].0, c[2].1),
            rat(c[3].0, c[3].1),
        )
    }

    pub fn zero() -> Self {
        Quaternion::from_ints(0, 0, 0, 0)
    }

    pub fn one() -> Self {
        Quaternion::from_ints(1, 0, 0, 0)
    }

    pub fn i() -> Self {
        Quaternion::from_ints(0, 1, 0, 0)
    }

    pub fn j() -> Self {
        Quaternion::from_ints(0, 0, 1, 0)
    }

    pub fn k() -> Self {
        Quaternion::from_ints(0, 0, 0, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.w.is_zero() && self.x.is_zero() && self.y.is_zero() && self.z.is_zero()
    }

    pub fn conj(&self) -> Self {
        Quaternion::new(self.w.clone(), -&self.x, -&self.y, -&self.z)
    }

    /// `w² + x² + y² + z²`
    pub fn norm(&self) -> BigRational {
        &self.w * &self.w + &self.x * &self.x + &self.y * &self.y + &self.z * &self.z
    }

    pub fn add(&self, o: &Self) -> Self {
        Quaternion::new(&self.w + &o.w, &self.x + &o.x, &self.y + &o.y, &self.z + &o.z)
    }

    pub fn sub(&self, o: &Self) -> Self {
        Quaternion::new(&self.w - &o.w, &self.x - &o.x, &self.y - &o.y, &self.z - &o.z)
    }

    pub fn neg(&self) -> Self {
        Quaternion::new(-&self.w, -&self.x, -&self.y, -&self.z)
    }

    /// Hamilton product `self · o`.
    pub fn mul(&self, o: &Self) -> Self {
        // integer arithmetic over a common denominator, reducing once per component
        let (d1, [a1, b1, c1, e1]) = self.scaled();
        let (d2, [a2, b2, c2, e2]) = o.scaled();
        let d = d1 * d2;
        let r = |n: BigInt| BigRational::new(n, d.clone());
        Quaternion::new(
            r(&a1 * &a2 - &b1 * &b2 - &c1 * &c2 - &e1 * &e2),
            r(&a1 * &b2 + &b1 * &a2 + &c1 * &e2 - &e1 * &c2),
            r(&a1 * &c2 - &b1 * &e2 + &c1 * &a2 + &e1 * &b2),
            r(&a1 * &e2 + &b1 * &c2 - &c1 * &b2 + &e1 * &a2),
        )
    }

    /// `(D, [D·w, D·x, D·y, D·z])` with `D` the least common denominator.
    fn scaled(&self) -> (BigInt, [BigInt; 4]) {
        let parts = [&self.w, &self.x, &self.y, &self.z];
        let d = parts.iter().fold(BigInt::one(), |acc, r| {
            if r.denom().is_one() || *r.denom() == acc {
                acc
            } else {
                acc.lcm(r.denom())
            }
        });
        let nums = parts.map(|r| {
            if *r.denom() == d {
                r.numer().clone()
            } else {
                r.numer() * (&d / r.denom())
            }
        });
        (d, nums)
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        Quaternion::new(&self.w * r, &self.x * r, &self.y * r, &self.z * r)
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.conj().scale(&self.norm().recip()))
    }

    /// Largest absolute numerator or denominator among the components.
    pub fn height(&self) -> BigInt {
        [&self.w, &self.x, &self.y, &self.z]
            .iter()
            .flat_map(|r| [r.numer().abs(), r.denom().clone()])
            .max()
            .unwrap_or_else(BigInt::one)
    }
}

impl fmt::Debug for Quaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({},{},{},{})",
            format_rational(&self.w),
            format_rational(&self.x),
            format_rational(&self.y),
            format_rational(&self.z)
        )
    }
}

impl fmt::Display for Quaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// An additive self-map of the rational quaternions, built from a fixed
/// catalog so that every expression is additive by construction.
#[derive(Clone, PartialEq, Debug)]
pub enum QuatMap {
    /// `a ↦ c·a`
    LeftMul(Quaternion),
    /// `a ↦ a·c`
    RightMul(Quaternion),
    /// `a ↦ ā`
    Conj,
    /// Pointwise sum; the empty sum is the zero map.
    Sum(Vec<QuatMap>),
    /// `maps[0] ∘ maps[1] ∘ …`; the empty composition is the identity.
    Compose(Vec<QuatMap>),
}

impl QuatMap {
    pub fn apply(&self, a: &Quaternion) -> Quaternion {
        match self {
            QuatMap::LeftMul(c) => c.mul(a),
            QuatMap::RightMul(c) => a.mul(c),
            QuatMap::Conj => a.conj(),
            QuatMap::Sum(terms) => terms
                .iter()
                .fold(Quaternion::zero(), |acc, t| acc.add(&t.apply(a))),
            QuatMap::Compose(maps) => maps.iter().rev().fold(a.clone(), |acc, m| m.apply(&acc)),
        }
    }

    /// The inner automorphism `a ↦ u·a·u⁻¹`.
    pub fn inner_automorphism(u: &Quaternion) -> Result<Self> {
        Ok(QuatMap::Compose(vec![
            QuatMap::LeftMul(u.clone()),
            QuatMap::RightMul(u.inv()?),
        ]))
    }
}

/// The division ring of Hamilton quaternions over `Q`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Quaternions;

impl Quaternions {
    pub fn conj_map(&self) -> QuatMap {
        QuatMap::Conj
    }

    fn random_with_height(rng: &mut dyn RngCore, num: i64, den: i64) -> Quaternion {
        let mut c = || rat(rng.gen_range(-num..=num), rng.gen_range(1..=den));
        Quaternion::new(c(), c(), c(), c())
    }
}

fn quat_to_json(a: &Quaternion) -> Value {
    json!([
        format_rational(&a.w),
        format_rational(&a.x),
        format_rational(&a.y),
        format_rational(&a.z)
    ])
}

fn quat_from_json(v: &Value) -> Result<Quaternion> {
    let bad = || Error::Parse(format!("quaternion must be four \"num/den\" strings: {v}"));
    let arr = v.as_array().filter(|a| a.len() == 4).ok_or_else(bad)?;
    let mut parts = Vec::with_capacity(4);
    for c in arr {
        let r = match c {
            Value::String(s) => parse_rational(s)?,
            Value::Number(n) => BigRational::from_integer(BigInt::from(n.as_i64().ok_or_else(bad)?)),
            _ => return Err(bad()),
        };
        parts.push(r);
    }
    let z = parts.pop().unwrap();
    let y = parts.pop().unwrap();
    let x = parts.pop().unwrap();
    let w = parts.pop().unwrap();
    Ok(Quaternion::new(w, x, y, z))
}

impl DivisionRing for Quaternions {
    type Elem = Quaternion;
    type Map = QuatMap;

    fn zero(&self) -> Quaternion {
        Quaternion::zero()
    }

    fn one(&self) -> Quaternion {
        Quaternion::one()
    }

    fn from_int(&self, v: i64) -> Quaternion {
        Quaternion::from_ints(v, 0, 0, 0)
    }

    fn add(&self, a: &Quaternion, b: &Quaternion) -> Quaternion {
        a.add(b)
    }

    fn neg(&self, a: &Quaternion) -> Quaternion {
        a.neg()
    }

    fn sub(&self, a: &Quaternion, b: &Quaternion) -> Quaternion {
        a.sub(b)
    }

    fn mul(&self, a: &Quaternion, b: &Quaternion) -> Quaternion {
        a.mul(b)
    }

    fn inv(&self, a: &Quaternion) -> Result<Quaternion> {
        a.inv()
    }

    fn is_zero(&self, a: &Quaternion) -> bool {
        a.is_zero()
    }

    fn elements(&self) -> Option<Vec<Quaternion>> {
        None
    }

    fn is_finite(&self) -> bool {
        false
    }

    fn spec(&self) -> RingSpec {
        RingSpec {
            kind: RingKind::RationalQuaternion,
            p: None,
            k: None,
            modulus: None,
        }
    }

    fn random(&self, rng: &mut dyn RngCore) -> Quaternion {
        Self::random_with_height(rng, 3, 2)
    }

    fn elem_to_json(&self, a: &Quaternion) -> Value {
        quat_to_json(a)
    }

    fn elem_from_json(&self, v: &Value) -> Result<Quaternion> {
        quat_from_json(v)
    }

    fn format_elem(&self, a: &Quaternion) -> String {
        a.to_string()
    }

    fn parse_elem(&self, s: &str) -> Result<Quaternion> {
        let inner = s
            .trim()
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| Error::Parse(format!("quaternion must look like (w,x,y,z): {s:?}")))?;
        let parts = inner.split(',').map(parse_rational).collect::<Result<Vec<_>>>()?;
        match <[BigRational; 4]>::try_from(parts) {
            Ok([w, x, y, z]) => Ok(Quaternion::new(w, x, y, z)),
            Err(_) => Err(Error::Parse(format!("quaternion needs four components: {s:?}"))),
        }
    }

    fn map_identity(&self) -> QuatMap {
        QuatMap::Compose(Vec::new())
    }

    fn map_zero(&self) -> QuatMap {
        QuatMap::Sum(Vec::new())
    }

    fn map_left_mul(&self, c: &Quaternion) -> QuatMap {
        QuatMap::LeftMul(c.clone())
    }

    fn map_right_mul(&self, c: &Quaternion) -> QuatMap {
        QuatMap::RightMul(c.clone())
    }

    fn map_sum(&self, f: &QuatMap, g: &QuatMap) -> QuatMap {
        let mut terms = Vec::new();
        for m in [f, g] {
            match m {
                QuatMap::Sum(ts) => terms.extend(ts.iter().cloned()),
                other => terms.push(other.clone()),
            }
        }
        QuatMap::Sum(terms)
    }

    fn map_compose(&self, outer: &QuatMap, inner: &QuatMap) -> QuatMap {
        let mut maps = Vec::new();
        for m in [outer, inner] {
            match m {
                QuatMap::Compose(ms) => maps.extend(ms.iter().cloned()),
                other => maps.push(other.clone()),
            }
        }
        QuatMap::Compose(maps)
    }

    fn apply(&self, f: &QuatMap, a: &Quaternion) -> Quaternion {
        f.apply(a)
    }

    fn map_to_json(&self, f: &QuatMap) -> Value {
        match f {
            QuatMap::LeftMul(c) => json!({"op": "lmul", "c": quat_to_json(c)}),
            QuatMap::RightMul(c) => json!({"op": "rmul", "c": quat_to_json(c)}),
            QuatMap::Conj => json!({"op": "conj"}),
            QuatMap::Sum(ts) => {
                json!({"op": "sum", "terms": ts.iter().map(|t| self.map_to_json(t)).collect::<Vec<_>>()})
            }
            QuatMap::Compose(ms) => {
                json!({"op": "compose", "maps": ms.iter().map(|t| self.map_to_json(t)).collect::<Vec<_>>()})
            }
        }
    }

    fn map_from_json(&self, v: &Value) -> Result<QuatMap> {
        let bad = |msg: &str| Error::Parse(format!("{msg}: {v}"));
        let op = v
            .get("op")
            .and_then(Value::as_str)
            .ok_or_else(|| bad("quaternion additive map needs \"op\""))?;
        let list = |key: &str| -> Result<Vec<QuatMap>> {
            v.get(key)
                .and_then(Value::as_array)
                .ok_or_else(|| bad(&format!("{op} needs \"{key}\"")))?
                .iter()
                .map(|t| self.map_from_json(t))
                .collect()
        };
        match op {
            "lmul" => Ok(QuatMap::LeftMul(quat_from_json(
                v.get("c").ok_or_else(|| bad("lmul needs \"c\""))?,
            )?)),
            "rmul" => Ok(QuatMap::RightMul(quat_from_json(
                v.get("c").ok_or_else(|| bad("rmul needs \"c\""))?,
            )?)),
            "conj" => Ok(QuatMap::Conj),
            "sum" => Ok(QuatMap::Sum(list("terms")?)),
            "compose" => Ok(QuatMap::Compose(list("maps")?)),
            "identity" => Ok(self.map_identity()),
            "zero" => Ok(self.map_zero()),
            _ => Err(bad("unknown quaternion map op")),
        }
    }

    fn validation_pairs(&self, seed: u64) -> (Vec<(Quaternion, Quaternion)>, bool) {
        let gens = [
            Quaternion::one(),
            Quaternion::i(),
            Quaternion::j(),
            Quaternion::k(),
            Quaternion::from_ratios([(1, 2), (0, 1), (0, 1), (0, 1)]),
            Quaternion::from_ints(1, 1, 0, 0),
        ];
        let mut pairs: Vec<(Quaternion, Quaternion)> = gens
            .iter()
            .flat_map(|a| gens.iter().map(move |b| (a.clone(), b.clone())))
            .collect();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..VALIDATION_SAMPLES {
            let a = Self::random_with_height(&mut rng, 5, 4);
            let b = Self::random_with_height(&mut rng, 5, 4);
            pairs.push((a, b));
        }
        (pairs, false)
    }
}
