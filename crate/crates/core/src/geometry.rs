//! Zero sets and their P-closures, P-independence, P-bases and the skew
//! Vandermonde matrices that certify them.
//!
//! The workhorse is the rank test: `b` lies outside the P-closure of a
//! finite `T` exactly when some polynomial of degree `≤ #T` vanishes on `T`
//! but not at `b`, i.e. when adding `b` as a column raises the rank of
//! `V_{#T+1}(T)`. A P-basis `B ⊆ T` of the closure has a separator of
//! degree `≤ #B ≤ #T`, so the bound holds whether or not `T` is independent.

use std::collections::{HashMap, HashSet};

use serde_json::{json, Value};

use crate::algebra::DivisionRing;
use crate::error::{Error, Result};
use crate::evaluation::{check_point, conjugate, fundamental_table, point_from_json, point_to_json, Point};
use crate::exact_linalg::{left_null_space, rank, DRMatrix};
use crate::frame::Frame;
use crate::skewring::Monomial;

/// Ordered, duplicate-free points of `F^n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointSet<E> {
    points: Vec<Vec<E>>,
}

impl<E: Clone + PartialEq + Eq + std::hash::Hash> PointSet<E> {
    pub fn empty() -> Self {
        PointSet { points: Vec::new() }
    }

    pub fn new<R: DivisionRing<Elem = E>>(frame: &Frame<R>, points: Vec<Vec<E>>) -> Result<Self> {
        let mut seen = HashSet::new();
        for p in &points {
            check_point(frame, p)?;
            if !seen.insert(p) {
                return Err(Error::DuplicatePoint);
            }
        }
        Ok(PointSet { points })
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Vec<E>] {
        &self.points
    }

    pub fn contains(&self, p: &[E]) -> bool {
        self.points.iter().any(|q| q == p)
    }

    pub fn get(&self, i: usize) -> &[E] {
        &self.points[i]
    }

    /// The subset picked out by `mask` (bit `i` selects point `i`; points past
    /// the 32nd are never selected).
    pub fn subset(&self, mask: u32) -> Self {
        PointSet {
            points: self
                .points
                .iter()
                .enumerate()
                .filter(|&(i, _)| mask.checked_shr(i as u32).unwrap_or(0) & 1 == 1)
                .map(|(_, p)| p.clone())
                .collect(),
        }
    }

    /// `self ∪ {b}`, with `b` last.
    pub fn with_point(&self, b: &[E]) -> Result<Self> {
        if self.contains(b) {
            return Err(Error::DuplicatePoint);
        }
        let mut points = self.points.clone();
        points.push(b.to_vec());
        Ok(PointSet { points })
    }

    pub fn to_json<R: DivisionRing<Elem = E>>(&self, ring: &R) -> Value {
        Value::Array(self.points.iter().map(|p| point_to_json(ring, p)).collect())
    }

    pub fn from_json<R: DivisionRing<Elem = E>>(frame: &Frame<R>, v: &Value) -> Result<Self> {
        let arr = v
            .as_array()
            .ok_or_else(|| Error::Parse("a point set is an array of points".into()))?;
        let points = arr
            .iter()
            .map(|p| point_from_json(frame.ring(), p, frame.n()))
            .collect::<Result<Vec<_>>>()?;
        PointSet::new(frame, points)
    }
}

pub fn format_point<R: DivisionRing>(ring: &R, p: &[R::Elem]) -> String {
    point_to_json(ring, p).to_string()
}

/// `V_d(B)`: one row per monomial of degree `< d` in ascending order, one
/// column per point, entries `N_m(b_j)`.
pub fn vandermonde<R: DivisionRing>(
    frame: &Frame<R>,
    points: &PointSet<R::Elem>,
    d: usize,
) -> Result<DRMatrix<R::Elem>> {
    let columns = points
        .points()
        .iter()
        .map(|b| fundamental_table(frame, b, d))
        .collect::<Result<Vec<_>>>()?;
    let words = Monomial::all_below(frame.n(), d);
    let data = (0..words.len())
        .map(|r| columns.iter().map(|c| c[r].clone()).collect())
        .collect();
    let m = DRMatrix::with_shape(data, points.len())?;
    Ok(m.with_labels(
        Some(words.iter().map(ToString::to_string).collect()),
        Some(points.points().iter().map(|p| format_point(frame.ring(), p)).collect()),
    ))
}

/// True when `b` lies outside the P-closure of `set`.
///
/// A point of `set` is never independent from it. The test is
/// `rank V_{#T+1}(T ∪ {b}) = rank V_{#T+1}(T) + 1`.
pub fn is_p_independent_from<R: DivisionRing>(
    frame: &Frame<R>,
    b: &[R::Elem],
    set: &PointSet<R::Elem>,
) -> Result<bool> {
    check_point(frame, b)?;
    if set.contains(b) {
        return Ok(false);
    }
    let d = set.len() + 1;
    let ring = frame.ring();
    let with_b = vandermonde(frame, &set.with_point(b)?, d)?;
    let without = with_b.select_cols(&(0..set.len()).collect::<Vec<_>>());
    Ok(rank(ring, &with_b) == rank(ring, &without) + 1)
}

/// Decides membership in the P-closure of a fixed set through the left null
/// space of its Vandermonde matrix, which is computed once.
pub struct ClosureOracle<'f, R: DivisionRing> {
    frame: &'f Frame<R>,
    degree: usize,
    null: Vec<Vec<R::Elem>>,
}

impl<'f, R: DivisionRing> ClosureOracle<'f, R> {
    pub fn new(frame: &'f Frame<R>, set: &PointSet<R::Elem>) -> Result<Self> {
        let degree = set.len() + 1;
        let v = vandermonde(frame, set, degree)?;
        Ok(ClosureOracle {
            frame,
            degree,
            null: left_null_space(frame.ring(), &v),
        })
    }

    /// `b` is in the closure iff every polynomial of degree `≤ #T` vanishing
    /// on `T` vanishes at `b`.
    pub fn contains(&self, b: &[R::Elem]) -> Result<bool> {
        let ring = self.frame.ring();
        let col = fundamental_table(self.frame, b, self.degree)?;
        Ok(self
            .null
            .iter()
            .all(|lambda| ring.is_zero(&crate::algebra::dot(ring, lambda, &col))))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PBasisResult<E> {
    pub basis: PointSet<E>,
    pub rank: usize,
    /// `V_{#basis}(basis)`, of rank `#basis`.
    pub vandermonde: DRMatrix<E>,
    pub discarded: PointSet<E>,
}

impl<E: Clone + PartialEq + Eq + std::hash::Hash> PBasisResult<E> {
    pub fn to_json<R: DivisionRing<Elem = E>>(&self, ring: &R) -> Value {
        json!({
            "basis": self.basis.to_json(ring),
            "rank": self.rank,
            "vandermonde": self.vandermonde.to_json(ring),
            "discarded": self.discarded.to_json(ring),
        })
    }
}

/// Scans `set` in order and keeps each point independent from those kept.
pub fn find_p_basis<R: DivisionRing>(
    frame: &Frame<R>,
    set: &PointSet<R::Elem>,
) -> Result<PBasisResult<R::Elem>> {
    let (basis, discarded) = extend_greedily(frame, PointSet::empty(), set)?;
    let vandermonde = vandermonde(frame, &basis, basis.len())?;
    Ok(PBasisResult {
        rank: basis.len(),
        basis,
        vandermonde,
        discarded,
    })
}

fn extend_greedily<R: DivisionRing>(
    frame: &Frame<R>,
    start: PointSet<R::Elem>,
    candidates: &PointSet<R::Elem>,
) -> Result<(PointSet<R::Elem>, PointSet<R::Elem>)> {
    let mut kept = start;
    let mut dropped = PointSet::empty();
    for b in candidates.points() {
        if is_p_independent_from(frame, b, &kept)? {
            kept = kept.with_point(b)?;
        } else if !dropped.contains(b) {
            dropped.points.push(b.clone());
        }
    }
    Ok((kept, dropped))
}

/// `rank V_{#G}(G)`, the rank of the P-closure of `G`.
pub fn rank_of<R: DivisionRing>(frame: &Frame<R>, set: &PointSet<R::Elem>) -> Result<usize> {
    Ok(rank(frame.ring(), &vandermonde(frame, set, set.len())?))
}

fn all_points<R: DivisionRing>(frame: &Frame<R>) -> Result<Vec<Point<R>>> {
    let els = frame.ring().elements().ok_or(Error::NotFinite)?;
    let mut out: Vec<Point<R>> = vec![Vec::new()];
    for _ in 0..frame.n() {
        out = out
            .into_iter()
            .flat_map(|p| {
                els.iter().map(move |e| {
                    let mut q = p.clone();
                    q.push(e.clone());
                    q
                })
            })
            .collect();
    }
    Ok(out)
}

/// Every point of `F^n` (lexicographic in the coordinates). Finite rings only.
pub fn ambient_space<R: DivisionRing>(frame: &Frame<R>) -> Result<PointSet<R::Elem>> {
    Ok(PointSet {
        points: all_points(frame)?,
    })
}

/// The P-closure of `set`, listed in the order of [`ambient_space`].
pub fn closure_members<R: DivisionRing>(
    frame: &Frame<R>,
    set: &PointSet<R::Elem>,
) -> Result<PointSet<R::Elem>> {
    let all = all_points(frame)?;
    let basis = find_p_basis(frame, set)?.basis;
    let oracle = ClosureOracle::new(frame, &basis)?;
    let mut points = Vec::new();
    for b in all {
        if oracle.contains(&b)? {
            points.push(b);
        }
    }
    Ok(PointSet { points })
}

/// Whether `I(G)` is two-sided: every conjugate `a^c`, `a ∈ G`, `c ≠ 0`,
/// must lie in the closure of `G`.
pub fn is_two_sided<R: DivisionRing>(frame: &Frame<R>, set: &PointSet<R::Elem>) -> Result<bool> {
    let ring = frame.ring();
    let els = ring.elements().ok_or(Error::NotFinite)?;
    let closure: HashSet<Vec<R::Elem>> = closure_members(frame, set)?.points.into_iter().collect();
    for a in set.points() {
        for c in els.iter().filter(|c| !ring.is_zero(c)) {
            if !closure.contains(&conjugate(frame, a, c)?) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

pub const MATROID_CHECK_LIMIT: usize = 10;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MatroidReport {
    pub points: usize,
    pub subsets_checked: usize,
    pub independent_sets: usize,
    /// Sizes of the maximal independent subsets, deduplicated and sorted.
    pub basis_sizes: Vec<usize>,
    pub rank: usize,
    pub violations: Vec<String>,
}

impl MatroidReport {
    pub fn is_matroid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "matroid": self.is_matroid(),
            "points": self.points,
            "subsets_checked": self.subsets_checked,
            "independent_sets": self.independent_sets,
            "basis_sizes": self.basis_sizes,
            "rank": self.rank,
            "violations": self.violations,
        })
    }
}

/// Independence of every subset of a small point set, memoizing
/// Vandermonde ranks per (subset, degree).
pub struct SubsetIndependence<'f, R: DivisionRing> {
    frame: &'f Frame<R>,
    set: PointSet<R::Elem>,
    tables: Vec<Vec<R::Elem>>,
    ranks: HashMap<(u32, usize), usize>,
}

impl<'f, R: DivisionRing> SubsetIndependence<'f, R> {
    pub fn new(frame: &'f Frame<R>, set: &PointSet<R::Elem>) -> Result<Self> {
        if set.len() > MATROID_CHECK_LIMIT {
            return Err(Error::InvalidInput(format!(
                "exhaustive subset checks need at most {MATROID_CHECK_LIMIT} points"
            )));
        }
        let d = set.len().max(1);
        let tables = set
            .points()
            .iter()
            .map(|b| fundamental_table(frame, b, d))
            .collect::<Result<Vec<_>>>()?;
        Ok(SubsetIndependence {
            frame,
            set: set.clone(),
            tables,
            ranks: HashMap::new(),
        })
    }

    /// `rank V_d(S)` for the subset `mask`.
    pub fn rank(&mut self, mask: u32, d: usize) -> usize {
        if let Some(&r) = self.ranks.get(&(mask, d)) {
            return r;
        }
        let rows = Monomial::count_below(self.frame.n(), d);
        let cols: Vec<usize> = (0..self.set.len()).filter(|i| mask >> i & 1 == 1).collect();
        let data = (0..rows)
            .map(|r| cols.iter().map(|&c| self.tables[c][r].clone()).collect())
            .collect();
        let m = DRMatrix::with_shape(data, cols.len()).expect("rectangular");
        let r = rank(self.frame.ring(), &m);
        self.ranks.insert((mask, d), r);
        r
    }

    /// Each point of `S` independent from the others.
    pub fn is_independent(&mut self, mask: u32) -> bool {
        let size = mask.count_ones() as usize;
        (0..self.set.len())
            .filter(|i| mask >> i & 1 == 1)
            .all(|i| self.rank(mask, size) == self.rank(mask & !(1 << i), size) + 1)
    }
}

/// Exhaustive check over all subsets of `set` that P-independent sets form
/// a matroid whose bases all have the size `rank_of(set)`.
pub fn matroid_check<R: DivisionRing>(
    frame: &Frame<R>,
    set: &PointSet<R::Elem>,
) -> Result<MatroidReport> {
    let mut oracle = SubsetIndependence::new(frame, set)?;
    let m = set.len();
    let full: u32 = if m == 0 { 0 } else { (1u32 << m) - 1 };
    let indep: Vec<bool> = (0..=full).map(|s| oracle.is_independent(s)).collect();
    let mut report = MatroidReport {
        points: m,
        subsets_checked: indep.len(),
        independent_sets: indep.iter().filter(|&&b| b).count(),
        ..Default::default()
    };
    let name = |s: u32| format!("{{{}}}", (0..m).filter(|i| s >> i & 1 == 1).map(|i| (i + 1).to_string()).collect::<Vec<_>>().join(","));

    if !indep[0] {
        report.violations.push("the empty set is dependent".into());
    }
    let mut sizes = Vec::new();
    for s in 0..=full {
        let size = s.count_ones() as usize;
        // Prop: a set is independent iff its square Vandermonde has full rank.
        if indep[s as usize] != (oracle.rank(s, size) == size) {
            report.violations.push(format!("incremental and rank tests disagree on {}", name(s)));
        }
        if !indep[s as usize] {
            continue;
        }
        for i in 0..m {
            let t = s & !(1 << i);
            if t != s && !indep[t as usize] {
                report.violations.push(format!("hereditary: {} independent, {} not", name(s), name(t)));
            }
        }
        let maximal = (0..m).all(|i| s >> i & 1 == 1 || !indep[(s | 1 << i) as usize]);
        if maximal {
            sizes.push(size);
        }
        for t in 0..=full {
            if indep[t as usize] && t.count_ones() as usize > size {
                let ok = (0..m).any(|i| t >> i & 1 == 1 && s >> i & 1 == 0 && indep[(s | 1 << i) as usize]);
                if !ok {
                    report.violations.push(format!("exchange fails for {} and {}", name(s), name(t)));
                }
            }
        }
    }
    sizes.sort_unstable();
    sizes.dedup();
    if sizes.len() > 1 {
        report.violations.push(format!("maximal independent sets of sizes {sizes:?}"));
    }
    report.rank = rank_of(frame, set)?;
    if sizes.first().is_some_and(|&s| s != report.rank) {
        report.violations.push(format!("bases have size {} but the rank is {}", sizes[0], report.rank));
    }
    report.basis_sizes = sizes;
    Ok(report)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Complement<E> {
    pub complement: PointSet<E>,
    pub rank_ambient: usize,
    pub rank_given: usize,
    pub rank_complement: usize,
}

impl<E: Clone + PartialEq + Eq + std::hash::Hash> Complement<E> {
    pub fn to_json<R: DivisionRing<Elem = E>>(&self, ring: &R) -> Value {
        json!({
            "complement": self.complement.to_json(ring),
            "rank_ambient": self.rank_ambient,
            "rank_given": self.rank_given,
            "rank_complement": self.rank_complement,
        })
    }
}

/// Extends the P-independent `given` through `ambient` to a P-basis of the
/// closure of `ambient`, returning the added points.
pub fn complementary_p_basis<R: DivisionRing>(
    frame: &Frame<R>,
    given: &PointSet<R::Elem>,
    ambient: &PointSet<R::Elem>,
) -> Result<Complement<R::Elem>> {
    if rank_of(frame, given)? != given.len() {
        return Err(Error::InvalidInput("the given set is not P-independent".into()));
    }
    let ambient_basis = find_p_basis(frame, ambient)?;
    for b in given.points() {
        if is_p_independent_from(frame, b, &ambient_basis.basis)? {
            return Err(Error::InvalidInput(format!(
                "{} lies outside the closure of the ambient set",
                format_point(frame.ring(), b)
            )));
        }
    }
    let (all, _) = extend_greedily(frame, given.clone(), ambient)?;
    let complement = PointSet {
        points: all.points[given.len()..].to_vec(),
    };
    Ok(Complement {
        rank_ambient: ambient_basis.rank,
        rank_given: given.len(),
        rank_complement: complement.len(),
        complement,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{FiniteField, Gf};
    use proptest::prelude::*;

    fn conv(p: u32, n: usize) -> Frame<FiniteField> {
        Frame::conventional(FiniteField::prime(p).unwrap(), n)
    }

    fn frob4(n: usize) -> Frame<FiniteField> {
        let r = FiniteField::new(2, 2).unwrap();
        Frame::diagonal(r.clone(), vec![r.frobenius_map(1); n], vec![r.map_zero(); n]).unwrap()
    }

    fn pts(f: &Frame<FiniteField>, raw: &[&[u32]]) -> PointSet<Gf> {
        PointSet::new(
            f,
            raw.iter()
                .map(|p| p.iter().map(|&x| f.ring().elem(x).unwrap()).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn duplicate_points_rejected() {
        let f = conv(2, 2);
        let r = f.ring();
        let p = vec![r.one(), r.zero()];
        assert_eq!(PointSet::new(&f, vec![p.clone(), p]), Err(Error::DuplicatePoint));
        assert!(PointSet::new(&f, vec![vec![r.one()]]).is_err());
    }

    #[test]
    fn vandermonde_shapes() {
        let f = conv(2, 2);
        let all = ambient_space(&f).unwrap();
        let v1 = vandermonde(&f, &all, 1).unwrap();
        assert_eq!(v1.nrows(), 1);
        assert!(v1.row(0).iter().all(|x| f.ring().is_one(x)));
        let v4 = vandermonde(&f, &all, 4).unwrap();
        assert_eq!((v4.nrows(), v4.ncols()), (15, 4));
        assert_eq!(rank(f.ring(), &v4), 4);

        // n = 1, σ = Id: rows 1, a, a², …
        let g = conv(7, 1);
        let r = g.ring().clone();
        let set = pts(&g, &[&[2], &[3], &[5]]);
        let v = vandermonde(&g, &set, 4).unwrap();
        for (e, row) in v.rows().iter().enumerate() {
            for (j, b) in set.points().iter().enumerate() {
                assert_eq!(row[j], crate::algebra::pow(&r, &b[0], e as u64));
            }
        }
    }

    #[test]
    fn independence_examples() {
        let f = conv(3, 1);
        let r = f.ring();
        let empty = PointSet::empty();
        for a in r.elements().unwrap() {
            assert!(is_p_independent_from(&f, &[a], &empty).unwrap());
        }
        let b = pts(&f, &[&[1]]);
        assert!(!is_p_independent_from(&f, &[r.one()], &b).unwrap());
        assert!(is_p_independent_from(&f, &[r.from_int(2)], &b).unwrap());
    }

    #[test]
    fn conventional_ranks_are_full() {
        for (p, n) in [(2, 2), (3, 2), (5, 1)] {
            let f = conv(p, n);
            let all = ambient_space(&f).unwrap();
            assert_eq!(rank_of(&f, &all).unwrap(), (p as usize).pow(n as u32));
            let res = find_p_basis(&f, &all).unwrap();
            assert_eq!(res.basis, all);
            assert!(res.discarded.is_empty());
            assert_eq!(rank(f.ring(), &res.vandermonde), res.rank);
        }
    }

    #[test]
    fn frobenius_conjugacy_class_has_rank_two() {
        // n = 1 over GF(4) with σ = Frobenius: a^c = σ(c) a c⁻¹ = c a, so
        // {1, ω, ω²} is one conjugacy class, of rank 2.
        let f = frob4(1);
        let set = pts(&f, &[&[1], &[2], &[3]]);
        let res = find_p_basis(&f, &set).unwrap();
        assert_eq!(res.rank, 2);
        assert_eq!(res.discarded.len(), 1);
        assert_eq!(rank_of(&f, &set).unwrap(), 2);
        let closure = closure_members(&f, &pts(&f, &[&[1], &[2]])).unwrap();
        assert_eq!(closure, set);
    }

    #[test]
    fn closure_examples() {
        let f = conv(3, 2);
        assert!(closure_members(&f, &PointSet::empty()).unwrap().is_empty());
        let g = pts(&f, &[&[0, 1], &[2, 2]]);
        assert_eq!(closure_members(&f, &g).unwrap().len(), 2);
        let all = ambient_space(&f).unwrap();
        assert_eq!(closure_members(&f, &all).unwrap(), all);
        let h = crate::frame::Frame::conventional(crate::algebra::Quaternions, 1);
        assert_eq!(closure_members(&h, &PointSet::empty()), Err(Error::NotFinite));
    }

    #[test]
    fn two_sided_examples() {
        let f = frob4(1);
        assert!(!is_two_sided(&f, &pts(&f, &[&[1]])).unwrap());
        assert!(is_two_sided(&f, &pts(&f, &[&[1], &[2]])).unwrap());
        assert!(is_two_sided(&f, &ambient_space(&f).unwrap()).unwrap());
        let c = conv(3, 2);
        assert!(is_two_sided(&c, &pts(&c, &[&[1, 2]])).unwrap());
    }

    #[test]
    fn matroid_examples() {
        let f = conv(2, 2);
        let all = ambient_space(&f).unwrap();
        let rep = matroid_check(&f, &all).unwrap();
        assert!(rep.is_matroid(), "{:?}", rep.violations);
        assert_eq!(rep.independent_sets, 16);
        assert_eq!(rep.basis_sizes, vec![4]);
        let one = pts(&f, &[&[1, 0]]);
        assert!(matroid_check(&f, &one).unwrap().is_matroid());
        let g = frob4(1);
        let rep = matroid_check(&g, &ambient_space(&g).unwrap()).unwrap();
        assert!(rep.is_matroid(), "{:?}", rep.violations);
        assert_eq!(rep.basis_sizes, vec![rep.rank]);
    }

    #[test]
    fn complement_examples() {
        let f = conv(2, 2);
        let all = ambient_space(&f).unwrap();
        let b = pts(&f, &[&[0, 0]]);
        let c = complementary_p_basis(&f, &b, &all).unwrap();
        assert_eq!(c.complement.len(), 3);
        assert_eq!(c.rank_ambient, c.rank_given + c.rank_complement);
        let c = complementary_p_basis(&f, &all, &all).unwrap();
        assert!(c.complement.is_empty());
        let c = complementary_p_basis(&f, &PointSet::empty(), &all).unwrap();
        assert_eq!(c.complement, all);
        let outside = complementary_p_basis(&f, &pts(&f, &[&[1, 1]]), &pts(&f, &[&[0, 0]]));
        assert!(matches!(outside, Err(Error::InvalidInput(_))));
    }

    #[test]
    fn oracle_and_rank_test_agree() {
        let f = frob4(2);
        let set = pts(&f, &[&[1, 2], &[3, 3], &[0, 1]]);
        let basis = find_p_basis(&f, &set).unwrap().basis;
        let oracle = ClosureOracle::new(&f, &basis).unwrap();
        for b in ambient_space(&f).unwrap().points() {
            assert_eq!(
                oracle.contains(b).unwrap(),
                !is_p_independent_from(&f, b, &basis).unwrap()
            );
        }
    }

    fn subset_of(f: &Frame<FiniteField>, idx: Vec<usize>) -> PointSet<Gf> {
        let all = ambient_space(f).unwrap();
        let mut seen = HashSet::new();
        let points = idx
            .into_iter()
            .filter(|i| seen.insert(*i))
            .map(|i| all.get(i % all.len()).to_vec())
            .collect();
        PointSet::new(f, points).unwrap()
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn closure_is_idempotent_and_monotone(a in prop::collection::vec(0..16usize, 0..4), b in prop::collection::vec(0..16usize, 0..3)) {
            let f = frob4(2);
            let g = subset_of(&f, a.clone());
            let h = subset_of(&f, a.into_iter().chain(b).collect());
            let cg = closure_members(&f, &g).unwrap();
            prop_assert_eq!(closure_members(&f, &cg).unwrap(), cg.clone());
            let ch = closure_members(&f, &h).unwrap();
            for p in cg.points() {
                prop_assert!(ch.contains(p));
            }
            for p in g.points() {
                prop_assert!(cg.contains(p));
            }
        }

        #[test]
        fn rank_is_order_insensitive(a in prop::collection::vec(0..16usize, 1..5), seed in any::<u64>()) {
            let f = frob4(2);
            let g = subset_of(&f, a);
            let mut shuffled = g.points().to_vec();
            let k = shuffled.len();
            shuffled.rotate_left((seed as usize) % k);
            shuffled.swap(0, (seed as usize / 7) % k);
            let h = PointSet::new(&f, shuffled).unwrap();
            let r = rank_of(&f, &g).unwrap();
            prop_assert_eq!(r, rank_of(&f, &h).unwrap());
            prop_assert_eq!(find_p_basis(&f, &g).unwrap().rank, r);
            prop_assert_eq!(find_p_basis(&f, &h).unwrap().rank, r);
            prop_assert!(r <= g.len());
        }
    }
}
