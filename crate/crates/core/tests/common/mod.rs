//! Frames and random generators shared by the integration tests.
#![allow(dead_code)]

use rand::{Rng, RngCore};
use skewpoly::algebra::{DivisionRing, FiniteField, QuatMap, Quaternion, Quaternions};
use skewpoly::frame::Frame;
use skewpoly::skewring::{Monomial, Poly};

pub const SEED: u64 = 20240611;

pub fn conventional_gf5() -> Frame<FiniteField> {
    Frame::conventional(FiniteField::prime(5).unwrap(), 2)
}

pub fn frobenius_gf4() -> Frame<FiniteField> {
    let r = FiniteField::new(2, 2).unwrap();
    Frame::diagonal(r.clone(), vec![r.frobenius_map(1); 2], vec![r.map_zero(); 2]).unwrap()
}

pub fn frobenius_gf4_univariate() -> Frame<FiniteField> {
    let r = FiniteField::new(2, 2).unwrap();
    Frame::diagonal(r.clone(), vec![r.frobenius_map(1)], vec![r.map_zero()]).unwrap()
}

pub fn frobenius_gf9() -> Frame<FiniteField> {
    let r = FiniteField::new(3, 2).unwrap();
    Frame::diagonal(r.clone(), vec![r.frobenius_map(1); 2], vec![r.map_zero(); 2]).unwrap()
}

/// Diagonal Frobenius over GF(9) with the inner derivation of β = (t, 2).
pub fn frobenius_gf9_inner() -> Frame<FiniteField> {
    let r = FiniteField::new(3, 2).unwrap();
    let fr = r.frobenius_map(1);
    let sigma = vec![vec![fr.clone(), r.map_zero()], vec![r.map_zero(), fr]];
    Frame::inner(r.clone(), sigma, &[r.generator_t(), r.from_int(2)]).unwrap()
}

/// σ(a) = P diag(a, u a u⁻¹) P⁻¹ with P = [[1, i], [0, 1]], u = 1 + j, and
/// the inner derivation of β = (k, 1 + i).
pub fn quaternion_inner() -> Frame<Quaternions> {
    let h = Quaternions;
    let inner = QuatMap::inner_automorphism(&Quaternion::from_ints(1, 0, 1, 0)).unwrap();
    let corner = h.map_sum(
        &QuatMap::RightMul(Quaternion::i().neg()),
        &h.map_compose(&QuatMap::LeftMul(Quaternion::i()), &inner),
    );
    let sigma = vec![vec![h.map_identity(), corner], vec![h.map_zero(), inner]];
    Frame::inner(h, sigma, &[Quaternion::k(), Quaternion::from_ints(1, 1, 0, 0)]).unwrap()
}

pub fn nonzero<R: DivisionRing>(ring: &R, rng: &mut dyn RngCore) -> R::Elem {
    loop {
        let c = ring.random(rng);
        if !ring.is_zero(&c) {
            return c;
        }
    }
}

/// A nonzero polynomial with 1 to `max_terms` terms of degree `≤ max_deg`.
pub fn random_poly<R: DivisionRing>(
    frame: &Frame<R>,
    rng: &mut impl Rng,
    max_terms: usize,
    max_deg: usize,
) -> Poly<R> {
    let ring = frame.ring();
    loop {
        let terms = rng.gen_range(1..=max_terms);
        let mut p = Poly::<R>::zero();
        for _ in 0..terms {
            let d = rng.gen_range(0..=max_deg);
            let w: Vec<usize> = (0..d).map(|_| rng.gen_range(0..frame.n())).collect();
            p.add_term(ring, Monomial::from_indices(&w), nonzero(ring, rng));
        }
        if !p.is_zero() {
            return p;
        }
    }
}

pub fn random_point<R: DivisionRing>(frame: &Frame<R>, rng: &mut dyn RngCore) -> Vec<R::Elem> {
    (0..frame.n()).map(|_| frame.ring().random(rng)).collect()
}
