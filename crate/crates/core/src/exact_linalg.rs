//! Dense matrices over a division ring, with every scalar acting on the left.
//!
//! Row vectors `λ` multiply matrices as `λA`, which is how coefficient
//! vectors of skew polynomials meet Vandermonde matrices. Row operations are
//! `row_i ← row_i − c·row_j`, `row ← c·row` and swaps, all left actions, so
//! `T·A = R` holds exactly with `T` invertible.

use serde_json::{json, Value};

use crate::algebra::DivisionRing;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DRMatrix<E> {
    rows: usize,
    cols: usize,
    data: Vec<Vec<E>>,
    pub row_labels: Option<Vec<String>>,
    pub col_labels: Option<Vec<String>>,
}

/// `T·A = R` with `R` in reduced row echelon form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RowReduction<E> {
    pub reduced: DRMatrix<E>,
    pub transform: DRMatrix<E>,
    /// Pivot column of each nonzero row of `reduced`, in row order.
    pub pivots: Vec<usize>,
}

impl<E: Clone + PartialEq> DRMatrix<E> {
    pub fn from_rows(rows: Vec<Vec<E>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::InvalidInput("ragged matrix".into()));
        }
        Ok(Self::from_rows_unchecked(rows, cols))
    }

    fn from_rows_unchecked(data: Vec<Vec<E>>, cols: usize) -> Self {
        DRMatrix {
            rows: data.len(),
            cols,
            data,
            row_labels: None,
            col_labels: None,
        }
    }

    /// An `r × c` matrix; `c` is kept even when `r = 0`.
    pub fn with_shape(data: Vec<Vec<E>>, cols: usize) -> Result<Self> {
        if data.iter().any(|r| r.len() != cols) {
            return Err(Error::InvalidInput("ragged matrix".into()));
        }
        Ok(Self::from_rows_unchecked(data, cols))
    }

    pub fn zeros<R: DivisionRing<Elem = E>>(ring: &R, rows: usize, cols: usize) -> Self {
        Self::from_rows_unchecked(vec![vec![ring.zero(); cols]; rows], cols)
    }

    pub fn identity<R: DivisionRing<Elem = E>>(ring: &R, n: usize) -> Self {
        let mut m = Self::zeros(ring, n, n);
        for i in 0..n {
            m.data[i][i] = ring.one();
        }
        m
    }

    pub fn with_labels(mut self, rows: Option<Vec<String>>, cols: Option<Vec<String>>) -> Self {
        self.row_labels = rows;
        self.col_labels = cols;
        self
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &E {
        &self.data[r][c]
    }

    pub fn row(&self, r: usize) -> &[E] {
        &self.data[r]
    }

    pub fn rows(&self) -> &[Vec<E>] {
        &self.data
    }

    pub fn column(&self, c: usize) -> Vec<E> {
        self.data.iter().map(|r| r[c].clone()).collect()
    }

    /// The submatrix on the given rows, in the given order.
    pub fn select_rows(&self, idx: &[usize]) -> Self {
        let mut m =
            Self::from_rows_unchecked(idx.iter().map(|&i| self.data[i].clone()).collect(), self.cols);
        m.row_labels = self
            .row_labels
            .as_ref()
            .map(|l| idx.iter().map(|&i| l[i].clone()).collect());
        m.col_labels = self.col_labels.clone();
        m
    }

    /// The submatrix on the given columns, in the given order.
    pub fn select_cols(&self, idx: &[usize]) -> Self {
        let data = self
            .data
            .iter()
            .map(|r| idx.iter().map(|&c| r[c].clone()).collect())
            .collect();
        let mut m = Self::from_rows_unchecked(data, idx.len());
        m.row_labels = self.row_labels.clone();
        m.col_labels = self
            .col_labels
            .as_ref()
            .map(|l| idx.iter().map(|&c| l[c].clone()).collect());
        m
    }

    pub fn transpose(&self) -> Self {
        let data = (0..self.cols).map(|c| self.column(c)).collect();
        let mut m = Self::from_rows_unchecked(data, self.rows);
        m.row_labels = self.col_labels.clone();
        m.col_labels = self.row_labels.clone();
        m
    }

    /// `λA`
    pub fn left_mul_vec<R: DivisionRing<Elem = E>>(&self, ring: &R, lambda: &[E]) -> Result<Vec<E>> {
        if lambda.len() != self.rows {
            return Err(Error::InvalidInput(format!(
                "row vector of length {} against {} rows",
                lambda.len(),
                self.rows
            )));
        }
        let mut out = vec![ring.zero(); self.cols];
        for (l, row) in lambda.iter().zip(&self.data) {
            if ring.is_zero(l) {
                continue;
            }
            for (o, a) in out.iter_mut().zip(row) {
                *o = ring.add(o, &ring.mul(l, a));
            }
        }
        Ok(out)
    }

    /// `A·v` for a column vector `v`.
    pub fn mul_col_vec<R: DivisionRing<Elem = E>>(&self, ring: &R, v: &[E]) -> Result<Vec<E>> {
        if v.len() != self.cols {
            return Err(Error::InvalidInput("column vector length mismatch".into()));
        }
        Ok(self
            .data
            .iter()
            .map(|row| crate::algebra::dot(ring, row, v))
            .collect())
    }

    /// `A·B`
    pub fn mul<R: DivisionRing<Elem = E>>(&self, ring: &R, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::InvalidInput("inner dimensions differ".into()));
        }
        let data = self
            .data
            .iter()
            .map(|row| other.left_mul_vec(ring, row))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_rows_unchecked(data, other.cols))
    }

    pub fn is_zero<R: DivisionRing<Elem = E>>(&self, ring: &R) -> bool {
        self.data.iter().flatten().all(|a| ring.is_zero(a))
    }

    pub fn to_json<R: DivisionRing<Elem = E>>(&self, ring: &R) -> Value {
        let entries: Vec<Value> = self
            .data
            .iter()
            .map(|r| Value::Array(r.iter().map(|a| ring.elem_to_json(a)).collect()))
            .collect();
        let mut v = json!({ "rows": self.rows, "cols": self.cols, "entries": entries });
        if let Some(l) = &self.row_labels {
            v["row_labels"] = json!(l);
        }
        if let Some(l) = &self.col_labels {
            v["col_labels"] = json!(l);
        }
        v
    }

    /// Accepts either a bare array of rows or the object form written by
    /// [`to_json`](Self::to_json).
    pub fn from_json<R: DivisionRing<Elem = E>>(ring: &R, v: &Value) -> Result<Self> {
        let (rows, cols_hint) = match v {
            Value::Array(_) => (v, None),
            Value::Object(o) => (
                o.get("entries")
                    .ok_or_else(|| Error::Parse("matrix needs \"entries\"".into()))?,
                o.get("cols").and_then(Value::as_u64).map(|c| c as usize),
            ),
            _ => return Err(Error::Parse("matrix must be an array of rows".into())),
        };
        let rows = rows
            .as_array()
            .ok_or_else(|| Error::Parse("matrix entries must be an array of rows".into()))?
            .iter()
            .map(|r| {
                r.as_array()
                    .ok_or_else(|| Error::Parse("matrix row must be an array".into()))?
                    .iter()
                    .map(|a| ring.elem_from_json(a))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let cols = cols_hint.unwrap_or_else(|| rows.first().map_or(0, Vec::len));
        let mut m = Self::with_shape(rows, cols).map_err(|e| Error::Parse(e.to_string()))?;
        let labels = |k: &str| -> Result<Option<Vec<String>>> {
            match v.get(k) {
                None => Ok(None),
                Some(l) => serde_json::from_value(l.clone())
                    .map(Some)
                    .map_err(|e| Error::Parse(e.to_string())),
            }
        };
        m.row_labels = labels("row_labels")?;
        m.col_labels = labels("col_labels")?;
        Ok(m)
    }
}

/// Gauss–Jordan elimination by left row operations. The pivot in each
/// column is the first nonzero entry at or below the current row.
pub fn row_reduce_left<R: DivisionRing>(ring: &R, a: &DRMatrix<R::Elem>) -> RowReduction<R::Elem> {
    let mut r = a.clone();
    let mut t = DRMatrix::identity(ring, a.rows);
    let mut pivots = Vec::new();
    let mut top = 0;
    for c in 0..a.cols {
        if top == a.rows {
            break;
        }
        let Some(p) = (top..a.rows).find(|&i| !ring.is_zero(&r.data[i][c])) else {
            continue;
        };
        r.data.swap(top, p);
        t.data.swap(top, p);
        let s = ring.inv(&r.data[top][c]).expect("pivot is nonzero");
        for x in r.data[top].iter_mut().chain(t.data[top].iter_mut()) {
            *x = ring.mul(&s, x);
        }
        let (pr, pt) = (r.data[top].clone(), t.data[top].clone());
        for i in 0..a.rows {
            if i == top || ring.is_zero(&r.data[i][c]) {
                continue;
            }
            let f = r.data[i][c].clone();
            for (x, y) in r.data[i].iter_mut().zip(&pr) {
                *x = ring.sub(x, &ring.mul(&f, y));
            }
            for (x, y) in t.data[i].iter_mut().zip(&pt) {
                *x = ring.sub(x, &ring.mul(&f, y));
            }
        }
        pivots.push(c);
        top += 1;
    }
    RowReduction {
        reduced: r,
        transform: t,
        pivots,
    }
}

pub fn rank<R: DivisionRing>(ring: &R, a: &DRMatrix<R::Elem>) -> usize {
    row_reduce_left(ring, a).pivots.len()
}

/// A basis of `{λ : λA = 0}`: the rows of `T` opposite the zero rows of `R`.
pub fn left_null_space<R: DivisionRing>(ring: &R, a: &DRMatrix<R::Elem>) -> Vec<Vec<R::Elem>> {
    let red = row_reduce_left(ring, a);
    red.transform.data[red.pivots.len()..].to_vec()
}

/// Some `λ` with `λA = b`. Free coordinates are zero: `λ = μT` where `μ`
/// reads `b` off the pivot columns of `R`.
pub fn solve_left<R: DivisionRing>(
    ring: &R,
    a: &DRMatrix<R::Elem>,
    b: &[R::Elem],
) -> Result<Vec<R::Elem>> {
    if b.len() != a.cols {
        return Err(Error::InvalidInput(format!(
            "right-hand side of length {} against {} columns",
            b.len(),
            a.cols
        )));
    }
    let red = row_reduce_left(ring, a);
    solve_with(ring, &red, b)
}

/// [`solve_left`] against an existing reduction, for many right-hand sides.
pub fn solve_with<R: DivisionRing>(
    ring: &R,
    red: &RowReduction<R::Elem>,
    b: &[R::Elem],
) -> Result<Vec<R::Elem>> {
    let mut mu = vec![ring.zero(); red.reduced.rows];
    for (k, &c) in red.pivots.iter().enumerate() {
        mu[k] = b[c].clone();
    }
    if red.reduced.left_mul_vec(ring, &mu)? != b {
        return Err(Error::NoSolution);
    }
    red.transform.left_mul_vec(ring, &mu)
}

/// Greedy choice of left-independent rows, visited in `order`: a row is
/// kept when it is not a left combination of the rows kept before it.
pub fn independent_rows<R: DivisionRing>(
    ring: &R,
    a: &DRMatrix<R::Elem>,
    order: &[usize],
) -> Vec<usize> {
    // Echelon basis of the kept rows, each normalized to 1 at its pivot.
    let mut basis: Vec<(usize, Vec<R::Elem>)> = Vec::new();
    let mut kept = Vec::new();
    for &i in order {
        let mut v = a.data[i].clone();
        for (p, b) in &basis {
            if ring.is_zero(&v[*p]) {
                continue;
            }
            let f = v[*p].clone();
            for (x, y) in v.iter_mut().zip(b) {
                *x = ring.sub(x, &ring.mul(&f, y));
            }
        }
        if let Some(p) = v.iter().position(|x| !ring.is_zero(x)) {
            let s = ring.inv(&v[p]).expect("nonzero");
            let v = v.iter().map(|x| ring.mul(&s, x)).collect();
            basis.push((p, v));
            kept.push(i);
        }
    }
    kept
}
