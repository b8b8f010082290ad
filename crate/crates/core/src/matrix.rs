//! Sparse square-or-rectangular matrices over Q(ζ_ℓ) and exact elimination.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::cyclo::{CycNumber, Rational};
use crate::error::{Error, Result};

/// Row-major sparse matrix; zero entries are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    ell: u32,
    rows: usize,
    cols: usize,
    data: Vec<BTreeMap<usize, CycNumber>>,
}

impl Matrix {
    pub fn zeros(ell: u32, rows: usize, cols: usize) -> Matrix {
        Matrix {
            ell,
            rows,
            cols,
            data: vec![BTreeMap::new(); rows],
        }
    }

    pub fn identity(ell: u32, n: usize) -> Matrix {
        Self::scalar(ell, n, &CycNumber::one(ell))
    }

    pub fn scalar(ell: u32, n: usize, c: &CycNumber) -> Matrix {
        Self::diagonal(ell, vec![c.clone(); n])
    }

    pub fn diagonal(ell: u32, diag: Vec<CycNumber>) -> Matrix {
        let n = diag.len();
        let mut m = Self::zeros(ell, n, n);
        for (i, v) in diag.into_iter().enumerate() {
            m.set(i, i, v);
        }
        m
    }

    pub fn ell(&self) -> u32 {
        self.ell
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> CycNumber {
        self.data[i]
            .get(&j)
            .cloned()
            .unwrap_or_else(|| CycNumber::zero(self.ell))
    }

    pub fn set(&mut self, i: usize, j: usize, v: CycNumber) {
        assert!(i < self.rows && j < self.cols, "matrix index out of bounds");
        if v.is_zero() {
            self.data[i].remove(&j);
        } else {
            self.data[i].insert(j, v);
        }
    }

    pub fn add_to(&mut self, i: usize, j: usize, v: &CycNumber) {
        let cur = self.get(i, j);
        self.set(i, j, &cur + v);
    }

    pub fn row(&self, i: usize) -> &BTreeMap<usize, CycNumber> {
        &self.data[i]
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(BTreeMap::len).sum()
    }

    /// Nonzero entries as `(row, col, value)` in row-major order.
    pub fn triplets(&self) -> impl Iterator<Item = (usize, usize, &CycNumber)> {
        self.data
            .iter()
            .enumerate()
            .flat_map(|(i, r)| r.iter().map(move |(j, v)| (i, *j, v)))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(BTreeMap::is_empty)
    }

    /// First nonzero entry in row-major order.
    pub fn first_nonzero(&self) -> Option<(usize, usize, CycNumber)> {
        self.triplets().next().map(|(i, j, v)| (i, j, v.clone()))
    }

    pub fn is_diagonal(&self) -> bool {
        self.triplets().all(|(i, j, _)| i == j)
    }

    pub fn diagonal_entries(&self) -> Vec<CycNumber> {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i)).collect()
    }

    /// The scalar `c` when `self = c·I`.
    pub fn as_scalar(&self) -> Option<CycNumber> {
        if self.rows != self.cols || !self.is_diagonal() {
            return None;
        }
        let c = self.get(0, 0);
        (1..self.rows).all(|i| self.get(i, i) == c).then_some(c)
    }

    pub fn checked_mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows || self.ell != other.ell {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} (ell {}) times {}x{} (ell {})",
                self.rows, self.cols, self.ell, other.rows, other.cols, other.ell
            )));
        }
        let mut out = Matrix::zeros(self.ell, self.rows, other.cols);
        for (i, row) in self.data.iter().enumerate() {
            let mut acc: BTreeMap<usize, CycNumber> = BTreeMap::new();
            for (k, a) in row {
                for (j, b) in &other.data[*k] {
                    let p = a * b;
                    match acc.get_mut(j) {
                        Some(e) => *e += &p,
                        None => {
                            acc.insert(*j, p);
                        }
                    }
                }
            }
            acc.retain(|_, v| !v.is_zero());
            out.data[i] = acc;
        }
        Ok(out)
    }

    fn zip_with(&self, other: &Matrix, negate: bool) -> Result<Matrix> {
        if self.rows != other.rows || self.cols != other.cols || self.ell != other.ell {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = self.clone();
        for (i, row) in other.data.iter().enumerate() {
            for (j, v) in row {
                let cur = out.get(i, *j);
                let next = if negate { &cur - v } else { &cur + v };
                out.set(i, *j, next);
            }
        }
        Ok(out)
    }

    pub fn checked_add(&self, other: &Matrix) -> Result<Matrix> {
        self.zip_with(other, false)
    }

    pub fn checked_sub(&self, other: &Matrix) -> Result<Matrix> {
        self.zip_with(other, true)
    }

    pub fn scale(&self, c: &CycNumber) -> Matrix {
        let mut out = Matrix::zeros(self.ell, self.rows, self.cols);
        for (i, j, v) in self.triplets() {
            out.set(i, j, v * c);
        }
        out
    }

    pub fn scale_rational(&self, r: &Rational) -> Matrix {
        self.scale(&CycNumber::from_rational(self.ell, r.clone()))
    }

    pub fn pow(&self, k: u32) -> Matrix {
        let mut acc = Matrix::identity(self.ell, self.rows);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Block-diagonal sum `self ⊕ other`.
    pub fn direct_sum(&self, other: &Matrix) -> Matrix {
        let mut out = Matrix::zeros(self.ell, self.rows + other.rows, self.cols + other.cols);
        for (i, j, v) in self.triplets() {
            out.set(i, j, v.clone());
        }
        for (i, j, v) in other.triplets() {
            out.set(self.rows + i, self.cols + j, v.clone());
        }
        out
    }

    pub fn to_dense(&self) -> Vec<Vec<CycNumber>> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j)).collect())
            .collect()
    }

    pub fn from_dense(ell: u32, dense: &[Vec<CycNumber>]) -> Result<Matrix> {
        let rows = dense.len();
        let cols = dense.first().map_or(0, Vec::len);
        let mut m = Matrix::zeros(ell, rows, cols);
        for (i, r) in dense.iter().enumerate() {
            if r.len() != cols {
                return Err(Error::DimensionMismatch("ragged dense matrix".into()));
            }
            for (j, v) in r.iter().enumerate() {
                if v.ell() != ell {
                    return Err(Error::MismatchedField(ell, v.ell()));
                }
                m.set(i, j, v.clone());
            }
        }
        Ok(m)
    }

    pub fn to_sparse_json(&self) -> SparseMatrixJson {
        SparseMatrixJson {
            rows: self.rows,
            cols: self.cols,
            entries: self.triplets().map(|(i, j, v)| (i, j, v.clone())).collect(),
        }
    }

    pub fn from_sparse_json(ell: u32, json: &SparseMatrixJson) -> Result<Matrix> {
        let mut m = Matrix::zeros(ell, json.rows, json.cols);
        for (i, j, v) in &json.entries {
            if *i >= json.rows || *j >= json.cols {
                return Err(Error::Malformed(format!("matrix entry ({i}, {j}) out of range")));
            }
            if v.ell() != ell {
                return Err(Error::MismatchedField(ell, v.ell()));
            }
            m.set(*i, *j, v.clone());
        }
        Ok(m)
    }
}

/// Sparse triplet form `{"rows": R, "cols": C, "entries": [[i, j, CycNumber], …]}`.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct SparseMatrixJson {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<(usize, usize, CycNumber)>,
}

impl Mul<&Matrix> for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        self.checked_mul(rhs).expect("matrix product dimensions")
    }
}

impl Add<&Matrix> for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        self.checked_add(rhs).expect("matrix sum dimensions")
    }
}

impl Sub<&Matrix> for &Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        self.checked_sub(rhs).expect("matrix difference dimensions")
    }
}

impl Neg for &Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        self.scale(&CycNumber::from_int(self.ell, -1))
    }
}

/// Incremental row-echelon reduction over Q(ζ_ℓ).
///
/// Rows are sparse maps `column -> coefficient`; each stored pivot row is
/// normalized so that its smallest column has coefficient one.
#[derive(Debug)]
pub struct Echelon {
    pivots: BTreeMap<usize, BTreeMap<usize, CycNumber>>,
}

impl Default for Echelon {
    fn default() -> Self {
        Self::new()
    }
}

impl Echelon {
    pub fn new() -> Echelon {
        Echelon {
            pivots: BTreeMap::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Adds a row; returns whether it increased the rank.
    pub fn push(&mut self, mut row: BTreeMap<usize, CycNumber>) -> bool {
        row.retain(|_, v| !v.is_zero());
        loop {
            let Some((&lead, _)) = row.iter().next() else {
                return false;
            };
            match self.pivots.get(&lead) {
                Some(p) => {
                    let f = row[&lead].clone();
                    for (c, v) in p {
                        let t = &f * v;
                        let next = match row.get(c) {
                            Some(cur) => cur - &t,
                            None => -t,
                        };
                        if next.is_zero() {
                            row.remove(c);
                        } else {
                            row.insert(*c, next);
                        }
                    }
                }
                None => {
                    let inv = row[&lead].inv().expect("nonzero leading coefficient");
                    for v in row.values_mut() {
                        *v = &*v * &inv;
                    }
                    self.pivots.insert(lead, row);
                    return true;
                }
            }
        }
    }
}
