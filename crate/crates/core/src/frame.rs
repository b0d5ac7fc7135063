//! Matrix morphisms `σ : F -> F^{n×n}` and σ-vector derivations `δ : F -> F^n`.
//!
//! A [`Frame`] fixes the commutation rule `x_i a = Σ_j σ_{i,j}(a) x_j + δ_i(a)`
//! of the free skew polynomial ring. Entries of `σ` and `δ` are additive maps
//! from the ring's catalog, so additivity holds by construction; the
//! multiplicative identities are checked by [`Frame::validate`].

use serde_json::{json, Value};

use crate::algebra::DivisionRing;
use crate::error::{Error, Result};

/// Seed for the randomized part of quaternion frame validation.
pub const DEFAULT_SEED: u64 = 0x5EED;

/// At most this many violations are listed in a report; the count is exact.
const MAX_LISTED_VIOLATIONS: usize = 64;

#[derive(Clone, Debug, PartialEq)]
pub struct Frame<R: DivisionRing> {
    ring: R,
    n: usize,
    sigma: Vec<Vec<R::Map>>,
    delta: Vec<R::Map>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Identity {
    /// `σ(1) = I`
    UnitPreserved,
    /// `σ(ab) = σ(a)σ(b)`
    SigmaMultiplicative,
    /// `δ(ab) = σ(a)δ(b) + δ(a)b`
    TwistedLeibniz,
}

impl Identity {
    pub fn reason(self) -> &'static str {
        match self {
            Identity::UnitPreserved => "unit not preserved",
            Identity::SigmaMultiplicative => "sigma is not multiplicative",
            Identity::TwistedLeibniz => "delta violates the twisted Leibniz rule",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub identity: Identity,
    pub a: String,
    pub b: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationReport {
    /// True when the checked pairs decide the identities for all of `F`.
    pub exhaustive: bool,
    pub pairs_checked: usize,
    pub violation_count: usize,
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violation_count == 0
    }

    pub fn to_json(&self) -> Value {
        json!({
            "valid": self.is_valid(),
            "exhaustive": self.exhaustive,
            "pairs_checked": self.pairs_checked,
            "violation_count": self.violation_count,
            "violations": self.violations.iter().map(|v| json!({
                "identity": v.identity.reason(),
                "a": v.a,
                "b": v.b,
            })).collect::<Vec<_>>(),
        })
    }

    /// `Ok` when no identity failed, else the first violation as [`Error::InvalidFrame`].
    pub fn into_result(self) -> Result<()> {
        match self.violations.into_iter().next() {
            None => Ok(()),
            Some(v) => Err(Error::InvalidFrame {
                reason: v.identity.reason().to_string(),
                a: v.a,
                b: v.b,
            }),
        }
    }
}

impl<R: DivisionRing> Frame<R> {
    /// Assemble a frame without checking the morphism identities.
    pub fn new(ring: R, sigma: Vec<Vec<R::Map>>, delta: Vec<R::Map>) -> Result<Self> {
        let n = sigma.len();
        if n == 0 {
            return Err(Error::InvalidInput("a frame needs at least one variable".into()));
        }
        if sigma.iter().any(|row| row.len() != n) || delta.len() != n {
            return Err(Error::InvalidInput(format!(
                "sigma must be {n}x{n} and delta must have length {n}"
            )));
        }
        Ok(Frame {
            ring,
            n,
            sigma,
            delta,
        })
    }

    /// `σ = Id`, `δ = 0`: constants commute with the variables.
    pub fn conventional(ring: R, n: usize) -> Self {
        let sigma = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| if i == j { ring.map_identity() } else { ring.map_zero() })
                    .collect()
            })
            .collect();
        let delta = vec![ring.map_zero(); n];
        Frame {
            ring,
            n,
            sigma,
            delta,
        }
    }

    /// Diagonal `σ = diag(σ_1, …, σ_n)` with `δ_i` a `σ_i`-derivation.
    pub fn diagonal(ring: R, endos: Vec<R::Map>, ders: Vec<R::Map>) -> Result<Self> {
        let n = endos.len();
        if ders.len() != n {
            return Err(Error::InvalidInput(
                "need one derivation per endomorphism".into(),
            ));
        }
        let sigma = endos
            .into_iter()
            .enumerate()
            .map(|(i, e)| {
                (0..n)
                    .map(|j| if i == j { e.clone() } else { ring.map_zero() })
                    .collect()
            })
            .collect();
        let frame = Frame::new(ring, sigma, ders)?;
        frame.validate().into_result()?;
        Ok(frame)
    }

    /// The inner vector derivation `δ(a) = σ(a)β − βa` attached to a matrix
    /// morphism. Only `σ` is validated; `δ` is a derivation for every `β`.
    pub fn inner(ring: R, sigma: Vec<Vec<R::Map>>, beta: &[R::Elem]) -> Result<Self> {
        let n = sigma.len();
        if beta.len() != n {
            return Err(Error::InvalidInput(format!("beta must have length {n}")));
        }
        let bare = Frame::new(ring.clone(), sigma, vec![ring.map_zero(); n])?;
        bare.validate().into_result()?;
        let delta = (0..n)
            .map(|i| {
                let twisted = (0..n).fold(ring.map_zero(), |acc, j| {
                    let term = ring.map_compose(&ring.map_right_mul(&beta[j]), &bare.sigma[i][j]);
                    ring.map_sum(&acc, &term)
                });
                ring.map_sum(&twisted, &ring.map_left_mul(&ring.neg(&beta[i])))
            })
            .collect();
        Ok(Frame {
            delta,
            ..bare
        })
    }

    /// The frame `(diag(τ, ν), (δ_τ, δ_ν))` on `self.n + other.n` variables.
    pub fn block_diagonal(&self, other: &Frame<R>) -> Frame<R> {
        let n = self.n + other.n;
        let zero = self.ring.map_zero();
        let mut sigma = vec![vec![zero; n]; n];
        for i in 0..self.n {
            for j in 0..self.n {
                sigma[i][j] = self.sigma[i][j].clone();
            }
        }
        for i in 0..other.n {
            for j in 0..other.n {
                sigma[self.n + i][self.n + j] = other.sigma[i][j].clone();
            }
        }
        let delta = self.delta.iter().chain(&other.delta).cloned().collect();
        Frame {
            ring: self.ring.clone(),
            n,
            sigma,
            delta,
        }
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn sigma_map(&self, i: usize, j: usize) -> &R::Map {
        &self.sigma[i][j]
    }

    pub fn delta_map(&self, i: usize) -> &R::Map {
        &self.delta[i]
    }

    #[inline]
    pub fn sigma_entry(&self, i: usize, j: usize, a: &R::Elem) -> R::Elem {
        self.ring.apply(&self.sigma[i][j], a)
    }

    #[inline]
    pub fn delta_entry(&self, i: usize, a: &R::Elem) -> R::Elem {
        self.ring.apply(&self.delta[i], a)
    }

    pub fn apply_sigma(&self, a: &R::Elem) -> Vec<Vec<R::Elem>> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.sigma_entry(i, j, a)).collect())
            .collect()
    }

    pub fn apply_delta(&self, a: &R::Elem) -> Vec<R::Elem> {
        (0..self.n).map(|i| self.delta_entry(i, a)).collect()
    }

    pub fn validate(&self) -> ValidationReport {
        self.validate_with_seed(DEFAULT_SEED)
    }

    pub fn validate_with_seed(&self, seed: u64) -> ValidationReport {
        let r = &self.ring;
        let n = self.n;
        let mut report = ValidationReport {
            exhaustive: false,
            pairs_checked: 0,
            violation_count: 0,
            violations: Vec::new(),
        };
        let record = |report: &mut ValidationReport, identity, a: &R::Elem, b: &R::Elem| {
            report.violation_count += 1;
            if report.violations.len() < MAX_LISTED_VIOLATIONS {
                report.violations.push(Violation {
                    identity,
                    a: r.format_elem(a),
                    b: r.format_elem(b),
                });
            }
        };

        let one = r.one();
        let s1 = self.apply_sigma(&one);
        let unit_ok = (0..n).all(|i| {
            (0..n).all(|j| s1[i][j] == if i == j { r.one() } else { r.zero() })
        });
        if !unit_ok {
            record(&mut report, Identity::UnitPreserved, &one, &one);
        }

        let (pairs, exhaustive) = r.validation_pairs(seed);
        report.exhaustive = exhaustive;
        report.pairs_checked = pairs.len();
        for (a, b) in &pairs {
            let ab = r.mul(a, b);
            let sa = self.apply_sigma(a);
            let sb = self.apply_sigma(b);
            let sab = self.apply_sigma(&ab);
            let multiplicative = (0..n).all(|i| {
                (0..n).all(|j| {
                    let prod = (0..n).fold(r.zero(), |acc, l| {
                        r.add(&acc, &r.mul(&sa[i][l], &sb[l][j]))
                    });
                    prod == sab[i][j]
                })
            });
            if !multiplicative {
                record(&mut report, Identity::SigmaMultiplicative, a, b);
            }
            let da = self.apply_delta(a);
            let db = self.apply_delta(b);
            let dab = self.apply_delta(&ab);
            let leibniz = (0..n).all(|i| {
                let rhs = (0..n).fold(r.mul(&da[i], b), |acc, j| {
                    r.add(&acc, &r.mul(&sa[i][j], &db[j]))
                });
                rhs == dab[i]
            });
            if !leibniz {
                record(&mut report, Identity::TwistedLeibniz, a, b);
            }
        }
        report
    }

    /// `self`, or [`Error::InvalidFrame`] carrying the first violated identity.
    pub fn validated(self) -> Result<Self> {
        self.validate().into_result()?;
        Ok(self)
    }

    /// `{"n", "sigma": [[map]], "delta": [map]}`
    pub fn to_json(&self) -> Value {
        let r = &self.ring;
        json!({
            "n": self.n,
            "sigma": self.sigma.iter()
                .map(|row| row.iter().map(|m| r.map_to_json(m)).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
            "delta": self.delta.iter().map(|m| r.map_to_json(m)).collect::<Vec<_>>(),
        })
    }

    /// Parse the wire format. A missing `sigma` means the identity and a
    /// missing `delta` means zero, so `{"n": 2}` is the conventional frame.
    pub fn from_json(ring: R, v: &Value) -> Result<Self> {
        let n = v
            .get("n")
            .and_then(Value::as_u64)
            .ok_or_else(|| Error::Parse("frame needs a positive integer \"n\"".into()))?
            as usize;
        if n == 0 {
            return Err(Error::Parse("frame needs n >= 1".into()));
        }
        let conventional = Frame::conventional(ring.clone(), n);
        let sigma = match v.get("sigma") {
            None => conventional.sigma.clone(),
            Some(s) => {
                let rows = s
                    .as_array()
                    .ok_or_else(|| Error::Parse("sigma must be an array of arrays".into()))?;
                rows.iter()
                    .map(|row| {
                        row.as_array()
                            .ok_or_else(|| Error::Parse("sigma must be an array of arrays".into()))?
                            .iter()
                            .map(|m| ring.map_from_json(m))
                            .collect::<Result<Vec<_>>>()
                    })
                    .collect::<Result<Vec<_>>>()?
            }
        };
        let delta = match v.get("delta") {
            None => conventional.delta.clone(),
            Some(d) => d
                .as_array()
                .ok_or_else(|| Error::Parse("delta must be an array".into()))?
                .iter()
                .map(|m| ring.map_from_json(m))
                .collect::<Result<Vec<_>>>()?,
        };
        if sigma.len() != n || sigma.iter().any(|r| r.len() != n) || delta.len() != n {
            return Err(Error::Parse(format!(
                "sigma must be {n}x{n} and delta must have length {n}"
            )));
        }
        Frame::new(ring, sigma, delta)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{FiniteField, QuatMap, Quaternion, Quaternions};

    fn gf4() -> FiniteField {
        FiniteField::new(2, 2).unwrap()
    }

    #[test]
    fn conventional_frame_is_valid() {
        let f = Frame::conventional(FiniteField::prime(5).unwrap(), 2);
        let report = f.validate();
        assert!(report.is_valid());
        assert!(report.exhaustive);
        let r = f.ring().clone();
        let a = r.from_int(3);
        assert_eq!(
            f.apply_sigma(&a),
            vec![vec![a, r.zero()], vec![r.zero(), a]]
        );
    }

    #[test]
    fn diagonal_frobenius_gf4() {
        let r = gf4();
        let fr = r.frobenius_map(1);
        let f = Frame::diagonal(r.clone(), vec![fr.clone(), fr], vec![r.map_zero(), r.map_zero()])
            .unwrap();
        let w = r.generator_t();
        let w2 = r.mul(&w, &w);
        assert_eq!(f.apply_sigma(&w), vec![vec![w2, r.zero()], vec![r.zero(), w2]]);
        // exhaustive over all 16 pairs
        assert_eq!(f.validate().pairs_checked, 16);
    }

    #[test]
    fn diagonal_frobenius_gf9_is_valid() {
        let r = FiniteField::new(3, 2).unwrap();
        let fr = r.frobenius_map(1);
        let f = Frame::diagonal(r.clone(), vec![fr.clone(), fr], vec![r.map_zero(); 2]).unwrap();
        let report = f.validate();
        assert!(report.is_valid());
        assert_eq!(report.pairs_checked, 81);
    }

    #[test]
    fn non_multiplicative_sigma_is_rejected() {
        let r = gf4();
        // a ↦ a² + a is additive but not a ring morphism.
        let bad = r.map_sum(&r.frobenius_map(1), &r.map_identity());
        let err = Frame::diagonal(r.clone(), vec![bad], vec![r.map_zero()]).unwrap_err();
        assert_eq!(err.name(), "InvalidFrame");
    }

    #[test]
    fn unit_not_preserved() {
        let r = FiniteField::prime(5).unwrap();
        let twice = r.map_left_mul(&r.from_int(2));
        let f = Frame::new(r.clone(), vec![vec![twice]], vec![r.map_zero()]).unwrap();
        let report = f.validate();
        assert!(!report.is_valid());
        assert_eq!(report.violations[0].identity.reason(), "unit not preserved");
        match f.validated() {
            Err(Error::InvalidFrame { reason, .. }) => assert_eq!(reason, "unit not preserved"),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn non_derivation_is_rejected() {
        let r = gf4();
        let f = Frame::new(r.clone(), vec![vec![r.map_identity()]], vec![r.map_identity()]).unwrap();
        let report = f.validate();
        assert!(report
            .violations
            .iter()
            .any(|v| v.identity == Identity::TwistedLeibniz));
    }

    #[test]
    fn inner_frame_examples() {
        // β = 0 gives δ = 0
        let r = FiniteField::prime(5).unwrap();
        let id = Frame::conventional(r.clone(), 2);
        let sigma = vec![
            vec![id.sigma_map(0, 0).clone(), id.sigma_map(0, 1).clone()],
            vec![id.sigma_map(1, 0).clone(), id.sigma_map(1, 1).clone()],
        ];
        let f = Frame::inner(r.clone(), sigma.clone(), &[r.zero(), r.zero()]).unwrap();
        for a in r.elements().unwrap() {
            assert_eq!(f.apply_delta(&a), vec![r.zero(), r.zero()]);
        }
        // commutative F with σ = Id: δ(3) = (3,6) − (3,6) = 0
        let f = Frame::inner(r.clone(), sigma, &[r.from_int(1), r.from_int(2)]).unwrap();
        assert_eq!(f.apply_delta(&r.from_int(3)), vec![r.zero(), r.zero()]);

        // quaternions: δ(j) = ji − ij = −2k
        let h = Quaternions;
        let f = Frame::inner(h, vec![vec![h.map_identity()]], &[Quaternion::i()]).unwrap();
        assert_eq!(f.apply_delta(&Quaternion::j()), vec![Quaternion::from_ints(0, 0, 0, -2)]);
        assert!(f.validate().is_valid());
    }

    #[test]
    fn delta_kills_zero_and_one() {
        let r = FiniteField::new(3, 2).unwrap();
        let fr = r.frobenius_map(1);
        let t = r.generator_t();
        let f = Frame::inner(r.clone(), vec![vec![fr]], &[t]).unwrap();
        assert!(f.validate().is_valid());
        assert_eq!(f.apply_delta(&r.zero()), vec![r.zero()]);
        assert_eq!(f.apply_delta(&r.one()), vec![r.zero()]);
        assert_ne!(f.apply_delta(&t), vec![r.zero()]);
    }

    #[test]
    fn quaternion_conjugation_is_not_a_morphism() {
        let h = Quaternions;
        let f = Frame::new(h, vec![vec![QuatMap::Conj]], vec![h.map_zero()]).unwrap();
        let report = f.validate();
        assert!(!report.exhaustive);
        assert!(!report.is_valid());
        // a ↦ u a u⁻¹ is
        let u = Quaternion::from_ints(1, 2, 0, -1);
        let inner = QuatMap::inner_automorphism(&u).unwrap();
        let f = Frame::new(h, vec![vec![inner]], vec![h.map_zero()]).unwrap();
        assert!(f.validate().is_valid());
    }

    #[test]
    fn non_diagonal_quaternion_morphism() {
        // σ(a) = P (a I) P⁻¹ with P = [[1, i], [0, 1]], P⁻¹ = [[1, −i], [0, 1]]
        let h = Quaternions;
        let i = Quaternion::i();
        let neg_i = i.neg();
        let sigma = vec![
            vec![
                h.map_identity(),
                h.map_sum(&QuatMap::RightMul(neg_i.clone()), &QuatMap::LeftMul(i.clone())),
            ],
            vec![h.map_zero(), h.map_identity()],
        ];
        let f = Frame::inner(h, sigma, &[Quaternion::j(), Quaternion::one()]).unwrap();
        assert!(f.validate().is_valid());
    }

    #[test]
    fn block_diagonal_preserves_validity() {
        let r = gf4();
        let a = Frame::diagonal(r.clone(), vec![r.frobenius_map(1)], vec![r.map_zero()]).unwrap();
        let b = Frame::inner(r.clone(), vec![vec![r.map_identity()]], &[r.generator_t()]).unwrap();
        let ab = a.block_diagonal(&b);
        assert_eq!(ab.n(), 2);
        assert!(ab.validate().is_valid());
    }

    #[test]
    fn json_round_trip_and_defaults() {
        let r = FiniteField::new(3, 2).unwrap();
        let f = Frame::inner(r.clone(), vec![vec![r.frobenius_map(1)]], &[r.generator_t()]).unwrap();
        let back = Frame::from_json(r.clone(), &f.to_json()).unwrap();
        assert_eq!(back, f);
        let conv = Frame::from_json(r.clone(), &json!({"n": 2})).unwrap();
        assert_eq!(conv, Frame::conventional(r.clone(), 2));
        assert!(Frame::from_json(r, &json!({"n": 2, "delta": [{"op": "zero"}]})).is_err());
    }
}
