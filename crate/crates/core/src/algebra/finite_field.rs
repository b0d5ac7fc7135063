use std::fmt;
use std::sync::Arc;

use rand::RngCore;
use serde_json::{json, Value};

use super::{DivisionRing, RingKind, RingSpec};
use crate::error::{Error, Result};

/// Largest supported field order `p^k`.
pub const MAX_FIELD_ORDER: u32 = 1 << 16;

/// Maps over fields up to this size carry a full lookup table.
const MAP_TABLE_LIMIT: u32 = 4096;

/// Fields up to this size are validated on every pair of elements rather
/// than on pairs of basis elements.
const EXHAUSTIVE_PAIR_LIMIT: u32 = 256;

/// Conway polynomials, constant term first.
const CONWAY: &[(u32, usize, &[u32])] = &[
    (2, 2, &[1, 1, 1]),
    (2, 3, &[1, 1, 0, 1]),
    (2, 4, &[1, 1, 0, 0, 1]),
    (2, 5, &[1, 0, 1, 0, 0, 1]),
    (2, 6, &[1, 1, 0, 1, 1, 0, 1]),
    (2, 7, &[1, 1, 0, 0, 0, 0, 0, 1]),
    (2, 8, &[1, 0, 1, 1, 1, 0, 0, 0, 1]),
    (3, 2, &[2, 2, 1]),
    (3, 3, &[1, 2, 0, 1]),
    (3, 4, &[2, 0, 0, 2, 1]),
    (5, 2, &[2, 4, 1]),
    (5, 3, &[3, 3, 0, 1]),
    (7, 2, &[3, 6, 1]),
];

/// An element of a finite field, encoded as the integer `Σ c_i p^i` of its
/// power-basis coefficient vector. Only meaningful together with its field.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Gf(pub(crate) u32);

impl Gf {
    pub fn index(self) -> u32 {
        self.0
    }
}

struct Tables {
    p: u32,
    k: usize,
    q: u32,
    /// Monic, constant term first, length `k + 1`.
    modulus: Vec<u32>,
    /// `exp[i] = g^i` for a fixed primitive element `g`.
    exp: Vec<u32>,
    log: Vec<u32>,
}

/// The field `GF(p^k) = GF(p)[t] / (modulus)`.
#[derive(Clone)]
pub struct FiniteField {
    t: Arc<Tables>,
}

impl fmt::Debug for FiniteField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.t.k == 1 {
            write!(f, "GF({})", self.t.p)
        } else {
            write!(f, "GF({}^{}) mod {:?}", self.t.p, self.t.k, self.t.modulus)
        }
    }
}

impl PartialEq for FiniteField {
    fn eq(&self, other: &Self) -> bool {
        self.t.p == other.t.p && self.t.modulus == other.t.modulus
    }
}

impl Eq for FiniteField {}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn field_order(p: u32, k: usize) -> Option<u32> {
    let mut q: u64 = 1;
    for _ in 0..k {
        q *= p as u64;
        if q > MAX_FIELD_ORDER as u64 {
            return None;
        }
    }
    Some(q as u32)
}

fn inv_mod_p(a: u32, p: u32) -> u32 {
    let mut acc = 1u64;
    let mut base = a as u64 % p as u64;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p as u64;
        }
        base = base * base % p as u64;
        e >>= 1;
    }
    acc as u32
}

/// Remainder of `a` modulo `m` over GF(p); `m` must have a nonzero leading coefficient.
fn poly_rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    let mut r: Vec<u64> = a.iter().map(|&c| c as u64).collect();
    let dm = m.len() - 1;
    let lead_inv = inv_mod_p(m[dm], p) as u64;
    let p64 = p as u64;
    while r.len() > dm {
        let top = r.len() - 1;
        let c = r[top] % p64 * lead_inv % p64;
        if c != 0 {
            for (i, &mi) in m.iter().enumerate() {
                let idx = top - dm + i;
                r[idx] = (r[idx] + p64 - c * mi as u64 % p64) % p64;
            }
        }
        r.pop();
    }
    r.into_iter().map(|c| (c % p64) as u32).collect()
}

/// Product of two reduced coefficient vectors modulo a monic modulus.
fn poly_mulmod(a: &[u32], b: &[u32], modulus: &[u32], p: u32) -> Vec<u32> {
    let mut prod = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p as u64;
        }
    }
    let prod: Vec<u32> = prod.into_iter().map(|c| c as u32).collect();
    let k = modulus.len() - 1;
    let mut r = poly_rem(&prod, modulus, p);
    r.resize(k, 0);
    r
}

fn coeffs_of(mut idx: u32, p: u32, k: usize) -> Vec<u32> {
    let mut out = Vec::with_capacity(k);
    for _ in 0..k {
        out.push(idx % p);
        idx /= p;
    }
    out
}

fn index_of(coeffs: &[u32], p: u32) -> u32 {
    coeffs.iter().rev().fold(0u32, |acc, &c| acc * p + c)
}

/// Exhaustive check that a monic polynomial of degree `k` has no monic
/// factor of degree `1..=k/2`.
fn is_irreducible(modulus: &[u32], p: u32) -> bool {
    let k = modulus.len() - 1;
    for d in 1..=k / 2 {
        let count = p.pow(d as u32);
        for low in 0..count {
            let mut cand = coeffs_of(low, p, d);
            cand.push(1);
            if poly_rem(modulus, &cand, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

/// Multiplicative order of the element with the given coefficients, or
/// `None` if it is zero.
fn multiplicative_order(g: &[u32], modulus: &[u32], p: u32, q: u32) -> Option<u32> {
    if g.iter().all(|&c| c == 0) {
        return None;
    }
    let k = modulus.len() - 1;
    let mut one = vec![0u32; k];
    one[0] = 1;
    let mut cur = g.to_vec();
    let mut order = 1;
    while cur != one {
        cur = poly_mulmod(&cur, g, modulus, p);
        order += 1;
        if order > q {
            return None;
        }
    }
    Some(order)
}

fn default_modulus(p: u32, k: usize, q: u32) -> Vec<u32> {
    if k == 1 {
        return vec![0, 1];
    }
    if let Some((_, _, m)) = CONWAY.iter().find(|(cp, ck, _)| *cp == p && *ck == k) {
        return m.to_vec();
    }
    // Smallest monic primitive polynomial in the order of its lower coefficients.
    let mut t = vec![0u32; k];
    t[1] = 1;
    for low in 0..q {
        let mut cand = coeffs_of(low, p, k);
        cand.push(1);
        if cand[0] == 0 || !is_irreducible(&cand, p) {
            continue;
        }
        if multiplicative_order(&t, &cand, p, q) == Some(q - 1) {
            return cand;
        }
    }
    unreachable!("every finite field has a primitive polynomial")
}

impl FiniteField {
    /// `GF(p)`.
    pub fn prime(p: u32) -> Result<Self> {
        Self::new(p, 1)
    }

    /// `GF(p^k)` with the library's default modulus (a Conway polynomial where
    /// tabulated, otherwise the least primitive polynomial).
    pub fn new(p: u32, k: usize) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::InvalidRing(format!("{p} is not prime")));
        }
        if k == 0 {
            return Err(Error::InvalidRing("extension degree must be at least 1".into()));
        }
        let q = field_order(p, k)
            .ok_or_else(|| Error::InvalidRing(format!("{p}^{k} exceeds {MAX_FIELD_ORDER}")))?;
        Self::build(p, default_modulus(p, k, q))
    }

    /// `GF(p)[t] / (modulus)` for a user-supplied monic irreducible modulus,
    /// constant term first.
    pub fn with_modulus(p: u32, modulus: Vec<u32>) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::InvalidRing(format!("{p} is not prime")));
        }
        if modulus.len() < 2 {
            return Err(Error::InvalidRing("modulus must have degree at least 1".into()));
        }
        let k = modulus.len() - 1;
        if field_order(p, k).is_none() {
            return Err(Error::InvalidRing(format!("{p}^{k} exceeds {MAX_FIELD_ORDER}")));
        }
        if modulus.iter().any(|&c| c >= p) {
            return Err(Error::InvalidRing("modulus coefficients must lie in [0, p)".into()));
        }
        if modulus[k] != 1 {
            return Err(Error::InvalidRing("modulus must be monic".into()));
        }
        if !is_irreducible(&modulus, p) {
            return Err(Error::InvalidRing(format!("modulus {modulus:?} is reducible over GF({p})")));
        }
        Self::build(p, modulus)
    }

    fn build(p: u32, modulus: Vec<u32>) -> Result<Self> {
        let k = modulus.len() - 1;
        let q = field_order(p, k).expect("checked by caller");
        let generator = (1..q)
            .map(|g| coeffs_of(g, p, k))
            .find(|g| multiplicative_order(g, &modulus, p, q) == Some(q - 1))
            .expect("the multiplicative group of a finite field is cyclic");
        let mut exp = Vec::with_capacity(q as usize - 1);
        let mut log = vec![0u32; q as usize];
        let mut cur = coeffs_of(1, p, k);
        for i in 0..q - 1 {
            let idx = index_of(&cur, p);
            exp.push(idx);
            log[idx as usize] = i;
            cur = poly_mulmod(&cur, &generator, &modulus, p);
        }
        Ok(FiniteField {
            t: Arc::new(Tables {
                p,
                k,
                q,
                modulus,
                exp,
                log,
            }),
        })
    }

    pub fn characteristic(&self) -> u32 {
        self.t.p
    }

    pub fn degree(&self) -> usize {
        self.t.k
    }

    pub fn order(&self) -> u32 {
        self.t.q
    }

    pub fn modulus(&self) -> &[u32] {
        &self.t.modulus
    }

    /// The element with the given integer encoding.
    pub fn elem(&self, index: u32) -> Result<Gf> {
        if index < self.t.q {
            Ok(Gf(index))
        } else {
            Err(Error::InvalidInput(format!(
                "{index} is not an element index of a field of order {}",
                self.t.q
            )))
        }
    }

    pub fn from_coeffs(&self, coeffs: &[u32]) -> Result<Gf> {
        if coeffs.len() != self.t.k || coeffs.iter().any(|&c| c >= self.t.p) {
            return Err(Error::InvalidInput(format!(
                "expected {} coefficients in [0, {})",
                self.t.k, self.t.p
            )));
        }
        Ok(Gf(index_of(coeffs, self.t.p)))
    }

    pub fn coeffs(&self, a: Gf) -> Vec<u32> {
        coeffs_of(a.0, self.t.p, self.t.k)
    }

    /// The power-basis element `t^i`, `i < k`.
    pub fn basis_elem(&self, i: usize) -> Gf {
        Gf(self.t.p.pow(i as u32))
    }

    /// The root `t` of the modulus (equal to the prime-field element `0` when `k = 1`).
    pub fn generator_t(&self) -> Gf {
        if self.t.k == 1 {
            Gf(0)
        } else {
            Gf(self.t.p)
        }
    }

    /// `a ↦ a^(p^power)`.
    pub fn frobenius_map(&self, power: u32) -> FieldMap {
        let k = self.t.k;
        let mut e: u64 = 1;
        for _ in 0..power % k as u32 {
            e *= self.t.p as u64;
        }
        let columns: Vec<Gf> = (0..k)
            .map(|l| super::pow(self, &self.basis_elem(l), e))
            .collect();
        self.map_from_columns(&columns)
    }

    /// Map given by a `k × k` matrix over GF(p) acting on coefficient columns.
    pub fn map_from_matrix(&self, matrix: Vec<Vec<u32>>) -> Result<FieldMap> {
        let k = self.t.k;
        if matrix.len() != k || matrix.iter().any(|r| r.len() != k) {
            return Err(Error::InvalidInput(format!("additive map must be a {k}x{k} matrix")));
        }
        if matrix.iter().flatten().any(|&c| c >= self.t.p) {
            return Err(Error::InvalidInput(format!(
                "map entries must lie in [0, {})",
                self.t.p
            )));
        }
        Ok(self.finish_map(matrix))
    }

    /// Map sending the basis element `t^l` to `columns[l]`.
    fn map_from_columns(&self, columns: &[Gf]) -> FieldMap {
        let k = self.t.k;
        let mut matrix = vec![vec![0u32; k]; k];
        for (l, c) in columns.iter().enumerate() {
            for (r, v) in self.coeffs(*c).into_iter().enumerate() {
                matrix[r][l] = v;
            }
        }
        self.finish_map(matrix)
    }

    fn finish_map(&self, matrix: Vec<Vec<u32>>) -> FieldMap {
        let mut map = FieldMap {
            matrix,
            table: None,
        };
        if self.t.q <= MAP_TABLE_LIMIT {
            let table = (0..self.t.q).map(|a| self.apply_matrix(&map, Gf(a)).0).collect();
            map.table = Some(Arc::new(table));
        }
        map
    }

    fn apply_matrix(&self, f: &FieldMap, a: Gf) -> Gf {
        let p = self.t.p as u64;
        let c = self.coeffs(a);
        let out: Vec<u32> = f
            .matrix
            .iter()
            .map(|row| {
                (row.iter().zip(&c).map(|(&m, &x)| m as u64 * x as u64).sum::<u64>() % p) as u32
            })
            .collect();
        Gf(index_of(&out, self.t.p))
    }

    fn digitwise(&self, a: u32, b: u32, op: impl Fn(u32, u32) -> u32) -> u32 {
        let p = self.t.p;
        let (mut a, mut b) = (a, b);
        let mut out = 0u32;
        let mut place = 1u32;
        for _ in 0..self.t.k {
            out += op(a % p, b % p) * place;
            a /= p;
            b /= p;
            place = place.wrapping_mul(p);
        }
        out
    }
}

/// A GF(p)-linear (equivalently, additive) self-map of `GF(p^k)`, stored as
/// a `k × k` matrix acting on power-basis coefficient columns.
#[derive(Clone)]
pub struct FieldMap {
    matrix: Vec<Vec<u32>>,
    table: Option<Arc<Vec<u32>>>,
}

impl FieldMap {
    pub fn matrix(&self) -> &[Vec<u32>] {
        &self.matrix
    }
}

impl PartialEq for FieldMap {
    fn eq(&self, other: &Self) -> bool {
        self.matrix == other.matrix
    }
}

impl fmt::Debug for FieldMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_tuple("FieldMap").field(&self.matrix).finish()
    }
}

impl DivisionRing for FiniteField {
    type Elem = Gf;
    type Map = FieldMap;

    fn zero(&self) -> Gf {
        Gf(0)
    }

    fn one(&self) -> Gf {
        Gf(1)
    }

    fn from_int(&self, v: i64) -> Gf {
        Gf(v.rem_euclid(self.t.p as i64) as u32)
    }

    fn add(&self, a: &Gf, b: &Gf) -> Gf {
        let p = self.t.p;
        if self.t.k == 1 {
            Gf((a.0 + b.0) % p)
        } else if p == 2 {
            Gf(a.0 ^ b.0)
        } else {
            Gf(self.digitwise(a.0, b.0, |x, y| (x + y) % p))
        }
    }

    fn neg(&self, a: &Gf) -> Gf {
        let p = self.t.p;
        if p == 2 {
            *a
        } else if self.t.k == 1 {
            Gf((p - a.0) % p)
        } else {
            Gf(self.digitwise(a.0, 0, |x, _| (p - x) % p))
        }
    }

    fn sub(&self, a: &Gf, b: &Gf) -> Gf {
        let p = self.t.p;
        if self.t.k == 1 {
            Gf((a.0 + p - b.0) % p)
        } else if p == 2 {
            Gf(a.0 ^ b.0)
        } else {
            Gf(self.digitwise(a.0, b.0, |x, y| (x + p - y) % p))
        }
    }

    fn mul(&self, a: &Gf, b: &Gf) -> Gf {
        if a.0 == 0 || b.0 == 0 {
            return Gf(0);
        }
        let n = self.t.q - 1;
        let e = (self.t.log[a.0 as usize] + self.t.log[b.0 as usize]) % n;
        Gf(self.t.exp[e as usize])
    }

    fn inv(&self, a: &Gf) -> Result<Gf> {
        if a.0 == 0 {
            return Err(Error::DivisionByZero);
        }
        let n = self.t.q - 1;
        let e = (n - self.t.log[a.0 as usize]) % n;
        Ok(Gf(self.t.exp[e as usize]))
    }

    fn is_zero(&self, a: &Gf) -> bool {
        a.0 == 0
    }

    fn elements(&self) -> Option<Vec<Gf>> {
        Some((0..self.t.q).map(Gf).collect())
    }

    fn is_finite(&self) -> bool {
        true
    }

    fn spec(&self) -> RingSpec {
        if self.t.k == 1 {
            RingSpec {
                kind: RingKind::PrimeField,
                p: Some(self.t.p),
                k: None,
                modulus: None,
            }
        } else {
            RingSpec {
                kind: RingKind::ExtensionField,
                p: Some(self.t.p),
                k: Some(self.t.k),
                modulus: Some(self.t.modulus.clone()),
            }
        }
    }

    fn random(&self, rng: &mut dyn RngCore) -> Gf {
        Gf(rng.next_u32() % self.t.q)
    }

    fn elem_to_json(&self, a: &Gf) -> Value {
        if self.t.k == 1 {
            json!(a.0)
        } else {
            json!(self.coeffs(*a))
        }
    }

    fn elem_from_json(&self, v: &Value) -> Result<Gf> {
        let bad = || Error::Parse(format!("not an element of {self:?}: {v}"));
        if self.t.k == 1 {
            let x = v.as_i64().ok_or_else(bad)?;
            if x < 0 || x >= self.t.p as i64 {
                return Err(bad());
            }
            Ok(Gf(x as u32))
        } else {
            let arr = v.as_array().ok_or_else(bad)?;
            let coeffs = arr
                .iter()
                .map(|c| c.as_u64().filter(|&c| c < self.t.p as u64).map(|c| c as u32))
                .collect::<Option<Vec<u32>>>()
                .ok_or_else(bad)?;
            self.from_coeffs(&coeffs).map_err(|_| bad())
        }
    }

    fn format_elem(&self, a: &Gf) -> String {
        self.elem_to_json(a).to_string()
    }

    fn parse_elem(&self, s: &str) -> Result<Gf> {
        let v: Value = serde_json::from_str(s.trim()).map_err(|e| Error::Parse(e.to_string()))?;
        self.elem_from_json(&v)
    }

    fn map_identity(&self) -> FieldMap {
        let k = self.t.k;
        let matrix = (0..k)
            .map(|r| (0..k).map(|c| u32::from(r == c)).collect())
            .collect();
        self.finish_map(matrix)
    }

    fn map_zero(&self) -> FieldMap {
        self.finish_map(vec![vec![0; self.t.k]; self.t.k])
    }

    fn map_left_mul(&self, c: &Gf) -> FieldMap {
        let columns: Vec<Gf> = (0..self.t.k)
            .map(|l| self.mul(c, &self.basis_elem(l)))
            .collect();
        self.map_from_columns(&columns)
    }

    fn map_right_mul(&self, c: &Gf) -> FieldMap {
        self.map_left_mul(c)
    }

    fn map_sum(&self, f: &FieldMap, g: &FieldMap) -> FieldMap {
        let p = self.t.p;
        let matrix = f
            .matrix
            .iter()
            .zip(&g.matrix)
            .map(|(r, s)| r.iter().zip(s).map(|(a, b)| (a + b) % p).collect())
            .collect();
        self.finish_map(matrix)
    }

    fn map_compose(&self, outer: &FieldMap, inner: &FieldMap) -> FieldMap {
        let k = self.t.k;
        let p = self.t.p as u64;
        let mut matrix = vec![vec![0u32; k]; k];
        for (r, row) in matrix.iter_mut().enumerate() {
            for (c, out) in row.iter_mut().enumerate() {
                let s: u64 = (0..k)
                    .map(|l| outer.matrix[r][l] as u64 * inner.matrix[l][c] as u64)
                    .sum();
                *out = (s % p) as u32;
            }
        }
        self.finish_map(matrix)
    }

    fn apply(&self, f: &FieldMap, a: &Gf) -> Gf {
        match &f.table {
            Some(t) => Gf(t[a.0 as usize]),
            None => self.apply_matrix(f, *a),
        }
    }

    fn map_to_json(&self, f: &FieldMap) -> Value {
        json!({ "matrix": f.matrix })
    }

    fn map_from_json(&self, v: &Value) -> Result<FieldMap> {
        let bad = |msg: &str| Error::Parse(format!("{msg}: {v}"));
        if let Some(m) = v.get("matrix") {
            let matrix: Vec<Vec<u32>> = serde_json::from_value(m.clone())
                .map_err(|_| bad("matrix must be an array of arrays of integers"))?;
            return self.map_from_matrix(matrix).map_err(|e| Error::Parse(e.to_string()));
        }
        let op = v
            .get("op")
            .and_then(Value::as_str)
            .ok_or_else(|| bad("additive map needs \"matrix\" or \"op\""))?;
        match op {
            "identity" => Ok(self.map_identity()),
            "zero" => Ok(self.map_zero()),
            "frobenius" => {
                let power = v.get("power").and_then(Value::as_u64).unwrap_or(1);
                Ok(self.frobenius_map(power as u32))
            }
            "lmul" | "rmul" => {
                let c = self.elem_from_json(v.get("c").ok_or_else(|| bad("missing \"c\""))?)?;
                Ok(self.map_left_mul(&c))
            }
            "sum" => {
                let terms = v
                    .get("terms")
                    .and_then(Value::as_array)
                    .ok_or_else(|| bad("sum needs \"terms\""))?;
                terms.iter().try_fold(self.map_zero(), |acc, t| {
                    Ok(self.map_sum(&acc, &self.map_from_json(t)?))
                })
            }
            "compose" => {
                let maps = v
                    .get("maps")
                    .and_then(Value::as_array)
                    .ok_or_else(|| bad("compose needs \"maps\""))?;
                maps.iter().try_fold(self.map_identity(), |acc, t| {
                    Ok(self.map_compose(&acc, &self.map_from_json(t)?))
                })
            }
            _ => Err(bad("unknown additive map op")),
        }
    }

    fn validation_pairs(&self, _seed: u64) -> (Vec<(Gf, Gf)>, bool) {
        // Every identity checked is GF(p)-bilinear, so basis pairs already decide it.
        let pool: Vec<Gf> = if self.t.q <= EXHAUSTIVE_PAIR_LIMIT {
            (0..self.t.q).map(Gf).collect()
        } else {
            (0..self.t.k).map(|l| self.basis_elem(l)).collect()
        };
        let pairs = pool
            .iter()
            .flat_map(|a| pool.iter().map(move |b| (*a, *b)))
            .collect();
        (pairs, true)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf4() -> FiniteField {
        FiniteField::new(2, 2).unwrap()
    }

    #[test]
    fn gf4_omega_cubed_is_one() {
        let f = gf4();
        let w = f.generator_t();
        let w2 = f.mul(&w, &w);
        assert_eq!(f.mul(&w, &w2), f.one());
        assert_eq!(f.inv(&w).unwrap(), w2);
    }

    #[test]
    fn gf5_examples() {
        let f = FiniteField::prime(5).unwrap();
        assert_eq!(f.add(&Gf(2), &Gf(4)), Gf(1));
        assert_eq!(f.inv(&Gf(3)).unwrap(), Gf(2));
        assert_eq!(f.inv(&Gf(0)), Err(Error::DivisionByZero));
    }

    #[test]
    fn enumeration_order_is_lexicographic_on_coefficients() {
        let f = gf4();
        let elems = f.elements().unwrap();
        let coeffs: Vec<Vec<u32>> = elems.iter().map(|&e| f.coeffs(e)).collect();
        // 0, 1, ω, ω + 1
        assert_eq!(coeffs, vec![vec![0, 0], vec![1, 0], vec![0, 1], vec![1, 1]]);
        assert_eq!(FiniteField::prime(3).unwrap().elements().unwrap().len(), 3);
    }

    #[test]
    fn tabulated_moduli_are_primitive() {
        for &(p, k, m) in CONWAY {
            assert!(is_irreducible(m, p), "{p}^{k}");
            let q = field_order(p, k).unwrap();
            let mut t = vec![0u32; k];
            t[1] = 1;
            assert_eq!(multiplicative_order(&t, m, p, q), Some(q - 1), "{p}^{k}");
        }
    }

    #[test]
    fn fallback_modulus_is_irreducible() {
        let f = FiniteField::new(11, 2).unwrap();
        assert!(is_irreducible(f.modulus(), 11));
        assert_eq!(f.order(), 121);
    }

    #[test]
    fn rejects_bad_specs() {
        assert!(FiniteField::prime(6).is_err());
        assert!(FiniteField::new(2, 17).is_err());
        // t^2 + 1 = (t + 1)^2 over GF(2)
        assert!(FiniteField::with_modulus(2, vec![1, 0, 1]).is_err());
        assert!(FiniteField::with_modulus(2, vec![1, 1, 1]).is_ok());
        assert!(FiniteField::with_modulus(3, vec![1, 0, 2]).is_err());
    }

    #[test]
    fn field_axioms_exhaustive_small_fields() {
        for (p, k) in [(2, 1), (3, 1), (5, 1), (2, 2), (2, 3), (3, 2), (2, 4), (7, 1)] {
            let f = FiniteField::new(p, k).unwrap();
            let all = f.elements().unwrap();
            for a in &all {
                assert_eq!(f.add(a, &f.neg(a)), f.zero());
                if !f.is_zero(a) {
                    assert_eq!(f.mul(a, &f.inv(a).unwrap()), f.one());
                }
                for b in &all {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    assert_eq!(f.sub(a, b), f.add(a, &f.neg(b)));
                    for c in &all {
                        assert_eq!(f.mul(&f.mul(a, b), c), f.mul(a, &f.mul(b, c)));
                        assert_eq!(f.mul(a, &f.add(b, c)), f.add(&f.mul(a, b), &f.mul(a, c)));
                        assert_eq!(f.add(&f.add(a, b), c), f.add(a, &f.add(b, c)));
                    }
                }
            }
        }
    }

    #[test]
    fn multiplication_matches_polynomial_arithmetic() {
        let f = FiniteField::new(3, 3).unwrap();
        for a in 0..27 {
            for b in 0..27 {
                let direct = poly_mulmod(&f.coeffs(Gf(a)), &f.coeffs(Gf(b)), f.modulus(), 3);
                assert_eq!(f.coeffs(f.mul(&Gf(a), &Gf(b))), direct);
            }
        }
    }

    #[test]
    fn frobenius_is_a_field_automorphism() {
        let f = FiniteField::new(3, 2).unwrap();
        let fr = f.frobenius_map(1);
        for a in f.elements().unwrap() {
            assert_eq!(f.apply(&fr, &a), super::super::pow(&f, &a, 3));
            for b in f.elements().unwrap() {
                assert_eq!(
                    f.apply(&fr, &f.mul(&a, &b)),
                    f.mul(&f.apply(&fr, &a), &f.apply(&fr, &b))
                );
            }
        }
        let id = f.frobenius_map(2);
        assert_eq!(id, f.map_identity());
    }

    #[test]
    fn maps_compose_and_sum_like_functions() {
        let f = FiniteField::new(2, 3).unwrap();
        let fr = f.frobenius_map(1);
        let lm = f.map_left_mul(&Gf(5));
        let comp = f.map_compose(&fr, &lm);
        let sum = f.map_sum(&fr, &lm);
        for a in f.elements().unwrap() {
            assert_eq!(f.apply(&comp, &a), f.apply(&fr, &f.apply(&lm, &a)));
            assert_eq!(f.apply(&sum, &a), f.add(&f.apply(&fr, &a), &f.apply(&lm, &a)));
        }
    }

    #[test]
    fn json_round_trip() {
        let f = FiniteField::new(3, 2).unwrap();
        for a in f.elements().unwrap() {
            assert_eq!(f.elem_from_json(&f.elem_to_json(&a)).unwrap(), a);
            assert_eq!(f.parse_elem(&f.format_elem(&a)).unwrap(), a);
        }
        let m = f.frobenius_map(1);
        assert_eq!(f.map_from_json(&f.map_to_json(&m)).unwrap(), m);
        assert!(f.elem_from_json(&json!([3, 0])).is_err());
        assert!(f.elem_from_json(&json!(1)).is_err());
    }
}
