use serde::{Deserialize, Serialize};
use serde_json::Value;

use super::{DivisionRing, FiniteField, Gf, Quaternion, Quaternions};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RingKind {
    PrimeField,
    ExtensionField,
    RationalQuaternion,
}

/// Wire description of a coefficient ring: `{"kind", "p", "k", "modulus"}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingSpec {
    pub kind: RingKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    /// Constant term first.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub modulus: Option<Vec<u32>>,
}

impl RingSpec {
    pub fn prime_field(p: u32) -> Self {
        RingSpec {
            kind: RingKind::PrimeField,
            p: Some(p),
            k: None,
            modulus: None,
        }
    }

    pub fn extension_field(p: u32, k: usize) -> Self {
        RingSpec {
            kind: RingKind::ExtensionField,
            p: Some(p),
            k: Some(k),
            modulus: None,
        }
    }

    pub fn quaternions() -> Self {
        RingSpec {
            kind: RingKind::RationalQuaternion,
            p: None,
            k: None,
            modulus: None,
        }
    }
}

/// A ring chosen at run time.
#[derive(Clone, Debug, PartialEq)]
pub enum AnyRing {
    Finite(FiniteField),
    Quaternion(Quaternions),
}

/// An element of an [`AnyRing`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum RingElement {
    Finite(Gf),
    Quaternion(Quaternion),
}

impl AnyRing {
    pub fn from_spec(spec: &RingSpec) -> Result<Self> {
        let need_p = || spec.p.ok_or_else(|| Error::InvalidRing("missing \"p\"".into()));
        match spec.kind {
            RingKind::PrimeField => {
                if spec.k.is_some_and(|k| k != 1) {
                    return Err(Error::InvalidRing("a prime field has k = 1".into()));
                }
                Ok(AnyRing::Finite(FiniteField::prime(need_p()?)?))
            }
            RingKind::ExtensionField => {
                let p = need_p()?;
                let field = match &spec.modulus {
                    Some(m) => {
                        if spec.k.is_some_and(|k| k + 1 != m.len()) {
                            return Err(Error::InvalidRing(
                                "modulus degree differs from k".into(),
                            ));
                        }
                        FiniteField::with_modulus(p, m.clone())?
                    }
                    None => {
                        let k = spec
                            .k
                            .ok_or_else(|| Error::InvalidRing("missing \"k\"".into()))?;
                        FiniteField::new(p, k)?
                    }
                };
                Ok(AnyRing::Finite(field))
            }
            RingKind::RationalQuaternion => Ok(AnyRing::Quaternion(Quaternions)),
        }
    }

    pub fn spec(&self) -> RingSpec {
        match self {
            AnyRing::Finite(f) => f.spec(),
            AnyRing::Quaternion(q) => q.spec(),
        }
    }

    fn finite_pair<'a>(&self, a: &'a RingElement, b: &'a RingElement) -> Result<Option<(Gf, Gf)>> {
        match (self, a, b) {
            (AnyRing::Finite(f), RingElement::Finite(x), RingElement::Finite(y)) => {
                f.elem(x.index())?;
                f.elem(y.index())?;
                Ok(Some((*x, *y)))
            }
            (AnyRing::Quaternion(_), RingElement::Quaternion(_), RingElement::Quaternion(_)) => {
                Ok(None)
            }
            _ => Err(Error::RingMismatch),
        }
    }

    fn binary(
        &self,
        a: &RingElement,
        b: &RingElement,
        fop: impl Fn(&FiniteField, &Gf, &Gf) -> Gf,
        qop: impl Fn(&Quaternion, &Quaternion) -> Quaternion,
    ) -> Result<RingElement> {
        match (self.finite_pair(a, b)?, self, a, b) {
            (Some((x, y)), AnyRing::Finite(f), _, _) => Ok(RingElement::Finite(fop(f, &x, &y))),
            (None, _, RingElement::Quaternion(x), RingElement::Quaternion(y)) => {
                Ok(RingElement::Quaternion(qop(x, y)))
            }
            _ => Err(Error::RingMismatch),
        }
    }

    pub fn add(&self, a: &RingElement, b: &RingElement) -> Result<RingElement> {
        self.binary(a, b, |f, x, y| f.add(x, y), |x, y| x.add(y))
    }

    pub fn sub(&self, a: &RingElement, b: &RingElement) -> Result<RingElement> {
        self.binary(a, b, |f, x, y| f.sub(x, y), |x, y| x.sub(y))
    }

    pub fn mul(&self, a: &RingElement, b: &RingElement) -> Result<RingElement> {
        self.binary(a, b, |f, x, y| f.mul(x, y), |x, y| x.mul(y))
    }

    pub fn neg(&self, a: &RingElement) -> Result<RingElement> {
        self.binary(a, a, |f, x, _| f.neg(x), |x, _| x.neg())
    }

    pub fn inv(&self, a: &RingElement) -> Result<RingElement> {
        match (self, a) {
            (AnyRing::Finite(f), RingElement::Finite(x)) => {
                f.elem(x.index())?;
                Ok(RingElement::Finite(f.inv(x)?))
            }
            (AnyRing::Quaternion(_), RingElement::Quaternion(x)) => {
                Ok(RingElement::Quaternion(x.inv()?))
            }
            _ => Err(Error::RingMismatch),
        }
    }

    /// All `p^k` elements in lexicographic order of their coefficient vectors.
    pub fn enumerate(&self) -> Result<Vec<RingElement>> {
        match self {
            AnyRing::Finite(f) => Ok(f
                .elements()
                .expect("finite")
                .into_iter()
                .map(RingElement::Finite)
                .collect()),
            AnyRing::Quaternion(_) => Err(Error::NotFinite),
        }
    }

    pub fn element_to_json(&self, a: &RingElement) -> Result<Value> {
        match (self, a) {
            (AnyRing::Finite(f), RingElement::Finite(x)) => Ok(f.elem_to_json(x)),
            (AnyRing::Quaternion(q), RingElement::Quaternion(x)) => Ok(q.elem_to_json(x)),
            _ => Err(Error::RingMismatch),
        }
    }

    pub fn element_from_json(&self, v: &Value) -> Result<RingElement> {
        match self {
            AnyRing::Finite(f) => f.elem_from_json(v).map(RingElement::Finite),
            AnyRing::Quaternion(q) => q.elem_from_json(v).map(RingElement::Quaternion),
        }
    }
}
