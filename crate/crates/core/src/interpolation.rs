//! Separators, Lagrange interpolation, dual P-bases and the quotient of the
//! free ring by the ideal of a P-closed set.

use serde_json::{json, Value};

use crate::algebra::DivisionRing;
use crate::error::{Error, Result};
use crate::evaluation::{check_point, evaluate, fundamental_table, Fundamentals};
use crate::exact_linalg::{independent_rows, left_null_space, row_reduce_left, solve_left, solve_with, DRMatrix};
use crate::frame::Frame;
use crate::geometry::{is_two_sided, vandermonde, PointSet};
use crate::skewring::{mul, Monomial, Poly, SkewPolynomial};

fn from_coefficients<R: DivisionRing>(ring: &R, words: &[Monomial], lambda: &[R::Elem]) -> Poly<R> {
    Poly::<R>::from_terms(ring, words.iter().cloned().zip(lambda.iter().cloned()))
}

/// A polynomial of degree `≤ #B` vanishing on `B` with value 1 at `b`.
///
/// It is a left null vector of `V_{#B+1}(B)` that does not annihilate the
/// column of `b`, rescaled on the left.
pub fn separator<R: DivisionRing>(
    frame: &Frame<R>,
    set: &PointSet<R::Elem>,
    b: &[R::Elem],
) -> Result<Poly<R>> {
    check_point(frame, b)?;
    let ring = frame.ring();
    if set.contains(b) {
        return Err(Error::NotSeparable);
    }
    let d = set.len() + 1;
    let v = vandermonde(frame, set, d)?;
    let col = fundamental_table(frame, b, d)?;
    let words = Monomial::all_below(frame.n(), d);
    for lambda in left_null_space(ring, &v) {
        let at_b = crate::algebra::dot(ring, &lambda, &col);
        if !ring.is_zero(&at_b) {
            let s = ring.inv(&at_b)?;
            let scaled: Vec<R::Elem> = lambda.iter().map(|x| ring.mul(&s, x)).collect();
            return Ok(from_coefficients(ring, &words, &scaled));
        }
    }
    Err(Error::NotSeparable)
}

fn check_values<R: DivisionRing>(set: &PointSet<R::Elem>, values: &[R::Elem]) -> Result<()> {
    if values.len() != set.len() {
        return Err(Error::InvalidInput(format!(
            "{} values for {} points",
            values.len(),
            set.len()
        )));
    }
    Ok(())
}

/// Newton-style interpolation: `F_1 = a_1`, then
/// `F_{i+1} = F_i + (a_{i+1} − F_i(b_{i+1})) G(b_{i+1})⁻¹ G` with `G` a
/// separator of `b_1, …, b_i` from `b_{i+1}`.
pub fn lagrange_interpolate<R: DivisionRing>(
    frame: &Frame<R>,
    set: &PointSet<R::Elem>,
    values: &[R::Elem],
) -> Result<Poly<R>> {
    check_values::<R>(set, values)?;
    let ring = frame.ring();
    let mut f = Poly::<R>::zero();
    let mut done = PointSet::empty();
    for (b, a) in set.points().iter().zip(values) {
        let g = separator(frame, &done, b).map_err(|e| match e {
            Error::NotSeparable => Error::NotPIndependent,
            e => e,
        })?;
        let gb = evaluate(frame, &g, b)?;
        let fb = evaluate(frame, &f, b)?;
        let c = ring.mul(&ring.sub(a, &fb), &ring.inv(&gb)?);
        f = f.add(ring, &g.scale_left(ring, &c));
        done = done.with_point(b)?;
    }
    Ok(f)
}

/// Solves `(F_m)_m V_M(B) = (a_1, …, a_M)` for the coefficients of `F`.
pub fn lagrange_via_vandermonde<R: DivisionRing>(
    frame: &Frame<R>,
    set: &PointSet<R::Elem>,
    values: &[R::Elem],
) -> Result<Poly<R>> {
    check_values::<R>(set, values)?;
    let ring = frame.ring();
    let v = vandermonde(frame, set, set.len())?;
    let lambda = solve_left(ring, &v, values).map_err(|e| match e {
        Error::NoSolution => Error::NotPIndependent,
        e => e,
    })?;
    Ok(from_coefficients(ring, &Monomial::all_below(frame.n(), set.len()), &lambda))
}

/// Which end of the monomial order the row selection starts from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum RowChoice {
    /// Smallest monomials first.
    #[default]
    Ascending,
    /// Largest monomials first.
    Descending,
}

/// Polynomials `F_i` of degree `< M` with `F_i(b_j) = δ_{i,j}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualPBasis<E> {
    pub basis: PointSet<E>,
    pub duals: Vec<SkewPolynomial<E>>,
    /// The monomials whose Vandermonde rows were inverted.
    pub monomials: Vec<Monomial>,
}

impl<E: Clone + PartialEq + Eq + std::hash::Hash> DualPBasis<E> {
    pub fn len(&self) -> usize {
        self.duals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.duals.is_empty()
    }

    pub fn to_json<R: DivisionRing<Elem = E>>(&self, ring: &R) -> Value {
        json!({
            "basis": self.basis.to_json(ring),
            "duals": self.duals.iter().map(|f| f.to_json(ring)).collect::<Vec<_>>(),
            "monomials": self.monomials.iter().map(Monomial::to_json).collect::<Vec<_>>(),
        })
    }
}

/// Picks `M` left-independent rows of `V_M(B)` and solves `λA = e_i`.
pub fn dual_p_basis<R: DivisionRing>(
    frame: &Frame<R>,
    set: &PointSet<R::Elem>,
    choice: RowChoice,
) -> Result<DualPBasis<R::Elem>> {
    let ring = frame.ring();
    let m = set.len();
    let v = vandermonde(frame, set, m)?;
    let mut order: Vec<usize> = (0..v.nrows()).collect();
    if choice == RowChoice::Descending {
        order.reverse();
    }
    let mut rows = independent_rows(ring, &v, &order);
    if rows.len() < m {
        return Err(Error::NotPIndependent);
    }
    rows.sort_unstable();
    let words = Monomial::all_below(frame.n(), m);
    let chosen: Vec<Monomial> = rows.iter().map(|&r| words[r].clone()).collect();
    let square = v.select_rows(&rows);
    let red = row_reduce_left(ring, &square);
    let duals = (0..m)
        .map(|i| {
            let mut e = vec![ring.zero(); m];
            e[i] = ring.one();
            let lambda = solve_with(ring, &red, &e)?;
            Ok(from_coefficients(ring, &chosen, &lambda))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(DualPBasis {
        basis: set.clone(),
        duals,
        monomials: chosen,
    })
}

/// Coordinates `(F(b_1), …, F(b_M))` of the class of `F` modulo `I(B)`.
pub fn reduce_mod_ideal<R: DivisionRing>(
    frame: &Frame<R>,
    f: &Poly<R>,
    dual: &DualPBasis<R::Elem>,
) -> Result<Vec<R::Elem>> {
    f.check(frame.ring(), frame.n())?;
    dual.basis
        .points()
        .iter()
        .map(|b| Ok(Fundamentals::new(frame, b)?.evaluate(f)))
        .collect()
}

/// `Σ c_i F_i`, the canonical representative of a class.
pub fn representative<R: DivisionRing>(
    ring: &R,
    coords: &[R::Elem],
    dual: &DualPBasis<R::Elem>,
) -> Result<Poly<R>> {
    if coords.len() != dual.len() {
        return Err(Error::InvalidInput(format!(
            "{} coordinates for a quotient of dimension {}",
            coords.len(),
            dual.len()
        )));
    }
    Ok(coords
        .iter()
        .zip(&dual.duals)
        .fold(Poly::<R>::zero(), |acc, (c, f)| acc.add(ring, &f.scale_left(ring, c))))
}

/// `F[x; σ, δ] / I(Ω)` for a P-closed `Ω` whose ideal is two-sided.
#[derive(Clone, Debug)]
pub struct QuotientRing<'f, R: DivisionRing> {
    frame: &'f Frame<R>,
    dual: DualPBasis<R::Elem>,
}

impl<'f, R: DivisionRing> QuotientRing<'f, R> {
    /// Refuses with [`Error::NotARing`] unless `I(closure(B))` is two-sided.
    pub fn new(frame: &'f Frame<R>, dual: DualPBasis<R::Elem>) -> Result<Self> {
        if !is_two_sided(frame, &dual.basis)? {
            return Err(Error::NotARing);
        }
        Ok(QuotientRing { frame, dual })
    }

    pub fn dual(&self) -> &DualPBasis<R::Elem> {
        &self.dual
    }

    pub fn reduce(&self, f: &Poly<R>) -> Result<Vec<R::Elem>> {
        reduce_mod_ideal(self.frame, f, &self.dual)
    }

    pub fn one(&self) -> Result<Vec<R::Elem>> {
        let ring = self.frame.ring();
        self.reduce(&Poly::<R>::constant(ring, ring.one()))
    }

    pub fn mul(&self, u: &[R::Elem], v: &[R::Elem]) -> Result<Vec<R::Elem>> {
        let ring = self.frame.ring();
        let p = representative(ring, u, &self.dual)?;
        let q = representative(ring, v, &self.dual)?;
        self.reduce(&mul(self.frame, &p, &q))
    }
}

/// One-shot product in the quotient by `I(B)`; see [`QuotientRing`].
pub fn quotient_mul<R: DivisionRing>(
    frame: &Frame<R>,
    u: &[R::Elem],
    v: &[R::Elem],
    dual: &DualPBasis<R::Elem>,
) -> Result<Vec<R::Elem>> {
    QuotientRing::new(frame, dual.clone())?.mul(u, v)
}

/// `E_Ω(F)` for each polynomial, as rows of a matrix whose columns are the
/// points of `Ω`.
pub fn evaluation_matrix<R: DivisionRing>(
    frame: &Frame<R>,
    polys: &[Poly<R>],
    omega: &PointSet<R::Elem>,
) -> Result<DRMatrix<R::Elem>> {
    let rows = polys
        .iter()
        .map(|f| omega.points().iter().map(|b| evaluate(frame, f, b)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    DRMatrix::with_shape(rows, omega.len())
}
