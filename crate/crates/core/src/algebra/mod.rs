//! Exact arithmetic over the supported division rings.
//!
//! Algorithms elsewhere in the crate are generic over [`DivisionRing`]. The two
//! concrete rings are [`FiniteField`] (prime and extension fields up to 2^16
//! elements) and [`Quaternions`] (Hamilton quaternions with rational
//! components). [`AnyRing`] and [`RingElement`] provide a dynamically typed
//! view for callers that only learn the ring at run time.

mod dynamic;
mod finite_field;
mod quaternion;

pub use dynamic::{AnyRing, RingElement, RingKind, RingSpec};
pub use finite_field::{FieldMap, FiniteField, Gf, MAX_FIELD_ORDER};
pub use quaternion::{QuatMap, Quaternion, Quaternions};

use std::fmt::Debug;
use std::hash::Hash;

use rand::RngCore;
use serde_json::Value;

use crate::error::Result;

/// A division ring with exact arithmetic, plus a catalog of additive
/// self-maps used to build matrix morphisms and vector derivations.
///
/// Multiplication may be noncommutative: `mul(a, b)` is `a·b` in that order.
pub trait DivisionRing: Clone + Debug + Send + Sync {
    type Elem: Clone + PartialEq + Eq + Hash + Debug + Send + Sync;
    /// An additive map `F -> F`.
    type Map: Clone + PartialEq + Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    /// Image of an integer under the unique ring morphism `Z -> F`.
    fn from_int(&self, v: i64) -> Self::Elem;

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Result<Self::Elem>;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        *a == self.zero()
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    /// All elements in a fixed order, or `None` for an infinite ring.
    fn elements(&self) -> Option<Vec<Self::Elem>>;

    fn is_finite(&self) -> bool;

    fn spec(&self) -> RingSpec;

    /// A pseudo-random element. Infinite rings draw from a small-height ball.
    fn random(&self, rng: &mut dyn RngCore) -> Self::Elem;

    fn elem_to_json(&self, a: &Self::Elem) -> Value;
    fn elem_from_json(&self, v: &Value) -> Result<Self::Elem>;
    fn format_elem(&self, a: &Self::Elem) -> String;
    fn parse_elem(&self, s: &str) -> Result<Self::Elem>;

    fn map_identity(&self) -> Self::Map;
    fn map_zero(&self) -> Self::Map;
    /// `a ↦ c·a`
    fn map_left_mul(&self, c: &Self::Elem) -> Self::Map;
    /// `a ↦ a·c`
    fn map_right_mul(&self, c: &Self::Elem) -> Self::Map;
    fn map_sum(&self, f: &Self::Map, g: &Self::Map) -> Self::Map;
    /// `outer ∘ inner`
    fn map_compose(&self, outer: &Self::Map, inner: &Self::Map) -> Self::Map;
    fn apply(&self, f: &Self::Map, a: &Self::Elem) -> Self::Elem;
    fn map_to_json(&self, f: &Self::Map) -> Value;
    fn map_from_json(&self, v: &Value) -> Result<Self::Map>;

    /// Pairs `(a, b)` on which bi-additive identities such as `σ(ab) = σ(a)σ(b)`
    /// are checked when validating a frame. The flag reports whether passing on
    /// these pairs proves the identity for all of `F`.
    fn validation_pairs(&self, seed: u64) -> (Vec<(Self::Elem, Self::Elem)>, bool);
}

/// `Σ a_i · b_i`
pub fn dot<R: DivisionRing>(ring: &R, a: &[R::Elem], b: &[R::Elem]) -> R::Elem {
    a.iter()
        .zip(b)
        .fold(ring.zero(), |acc, (x, y)| ring.add(&acc, &ring.mul(x, y)))
}

/// `a^e` by repeated squaring, `e ≥ 0`.
pub fn pow<R: DivisionRing>(ring: &R, a: &R::Elem, mut e: u64) -> R::Elem {
    let mut base = a.clone();
    let mut acc = ring.one();
    while e > 0 {
        if e & 1 == 1 {
            acc = ring.mul(&acc, &base);
        }
        base = ring.mul(&base, &base);
        e >>= 1;
    }
    acc
}
