//! Explicit modules `S^D` in a seminormal basis of standard tableaux, the
//! intertwiners, relation checks, the commutant and automorphism twists.

mod report;

use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::classify::reconstruct;
use crate::cyclo::{int, CycNumber, Rational};
use crate::error::{Error, Result};
use crate::grpalg::{evaluate, jm_element, GroupAlgebraElement};
use crate::matrix::{Echelon, Matrix};
use crate::shapes::{enumerate_syt, ShapeJson, SkewShape, Tableau, TableauJson, Weight};

pub use report::{Check, VerificationReport, Witness};

/// Matrices of `s_1..s_{n-1}`, `ζ_1..ζ_n` and `u_1..u_n`, all `dim × dim`.
#[derive(Clone, Debug, PartialEq)]
pub struct ModuleRep {
    ell: u32,
    n: usize,
    /// The indexing shape and basis, present for modules built from a shape.
    shape: Option<SkewShape>,
    basis: Vec<Tableau>,
    s: Vec<Matrix>,
    zeta: Vec<Matrix>,
    u: Vec<Matrix>,
}

/// A named generator (or derived operator) with a 1-based index.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Generator {
    U(usize),
    Zeta(usize),
    S(usize),
    Tau(usize),
    Pi(usize),
}

/// Automorphisms of the algebra that act on modules by relabelling generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Automorphism {
    /// `u_i ↦ u_i + κ`.
    Shift(Rational),
    /// `u_i ↦ -u_{n-i+1}`, `ζ_i ↦ ζ_{n-i+1}`, `s_i ↦ s_{n-i}`.
    Rho,
}

/// Builds `S^D` on the standard tableaux of `shape`.
pub fn build_module(shape: &SkewShape) -> Result<ModuleRep> {
    let ell = shape.ell();
    let n = shape.n();
    let basis = enumerate_syt(shape);
    let dim = basis.len();
    let index: HashMap<&[usize], usize> =
        basis.iter().enumerate().map(|(k, t)| (t.labels(), k)).collect();
    let ell_q = int(ell as i64);

    let mut u = Vec::with_capacity(n);
    let mut zeta = Vec::with_capacity(n);
    for i in 1..=n {
        u.push(Matrix::diagonal(
            ell,
            basis
                .iter()
                .map(|t| CycNumber::from_rational(ell, &ell_q * t.content_of(i)))
                .collect(),
        ));
        zeta.push(Matrix::diagonal(
            ell,
            basis
                .iter()
                .map(|t| CycNumber::root_of_unity(ell, t.beta_of(i) as i64))
                .collect(),
        ));
    }

    let mut s = Vec::with_capacity(n.saturating_sub(1));
    for i in 1..n {
        let mut m = Matrix::zeros(ell, dim, dim);
        for (col, t) in basis.iter().enumerate() {
            let (b, b2) = (t.box_of(i), t.box_of(i + 1));
            if t.beta_of(i) != t.beta_of(i + 1) {
                let st = t.apply_transposition(i)?;
                m.set(index[st.labels()], col, CycNumber::one(ell));
                continue;
            }
            if shape.right_of(b) == Some(b2) {
                m.set(col, col, CycNumber::one(ell));
                continue;
            }
            if shape.below(b) == Some(b2) {
                m.set(col, col, CycNumber::from_int(ell, -1));
                continue;
            }
            let d = t.content_of(i + 1) - t.content_of(i);
            if d.is_zero() || d == Rational::one() || d == -Rational::one() {
                return Err(Error::DegenerateShape(format!(
                    "content difference {d} between labels {i} and {}",
                    i + 1
                )));
            }
            let st = t.apply_transposition(i)?;
            let other = index[st.labels()];
            // T₊ has i in the reading-earlier box
            let off = if b < b2 {
                Rational::one()
            } else {
                Rational::one() - (&d * &d).recip()
            };
            m.set(col, col, CycNumber::from_rational(ell, d.recip()));
            m.set(other, col, CycNumber::from_rational(ell, off));
        }
        s.push(m);
    }

    Ok(ModuleRep {
        ell,
        n,
        shape: Some(shape.clone()),
        basis,
        s,
        zeta,
        u,
    })
}

impl ModuleRep {
    /// Assembles a module from explicit matrices, checking dimensions.
    pub fn from_matrices(ell: u32, s: Vec<Matrix>, zeta: Vec<Matrix>, u: Vec<Matrix>) -> Result<ModuleRep> {
        let n = zeta.len();
        if n == 0 || u.len() != n || s.len() != n - 1 {
            return Err(Error::DimensionMismatch(format!(
                "{} s, {} ζ and {} u matrices",
                s.len(),
                zeta.len(),
                u.len()
            )));
        }
        let dim = zeta[0].rows();
        for m in s.iter().chain(&zeta).chain(&u) {
            if m.rows() != dim || m.cols() != dim {
                return Err(Error::DimensionMismatch(format!(
                    "{}x{} matrix in a module of dimension {dim}",
                    m.rows(),
                    m.cols()
                )));
            }
            if m.ell() != ell {
                return Err(Error::MismatchedField(ell, m.ell()));
            }
        }
        Ok(ModuleRep {
            ell,
            n,
            shape: None,
            basis: Vec::new(),
            s,
            zeta,
            u,
        })
    }

    pub fn ell(&self) -> u32 {
        self.ell
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.zeta[0].rows()
    }

    pub fn shape(&self) -> Option<&SkewShape> {
        self.shape.as_ref()
    }

    /// Tableaux indexing the basis; empty for modules not built from a shape.
    pub fn basis(&self) -> &[Tableau] {
        &self.basis
    }

    pub fn s(&self) -> &[Matrix] {
        &self.s
    }

    pub fn zeta(&self) -> &[Matrix] {
        &self.zeta
    }

    pub fn u(&self) -> &[Matrix] {
        &self.u
    }

    /// Replaces one `s_i` matrix; used to build negative controls.
    pub fn with_s(mut self, i: usize, m: Matrix) -> ModuleRep {
        self.s[i - 1] = m;
        self
    }

    fn check_index(&self, i: usize, max: usize) -> Result<()> {
        if i == 0 || i > max {
            return Err(Error::IndexOutOfRange { index: i, max });
        }
        Ok(())
    }

    pub fn generator_matrix(&self, which: Generator) -> Result<Matrix> {
        match which {
            Generator::U(i) => {
                self.check_index(i, self.n)?;
                Ok(self.u[i - 1].clone())
            }
            Generator::Zeta(i) => {
                self.check_index(i, self.n)?;
                Ok(self.zeta[i - 1].clone())
            }
            Generator::S(i) => {
                self.check_index(i, self.n - 1)?;
                Ok(self.s[i - 1].clone())
            }
            Generator::Pi(i) => {
                self.check_index(i, self.n - 1)?;
                self.pi(i)
            }
            Generator::Tau(i) => {
                self.check_index(i, self.n - 1)?;
                self.tau(i)
            }
        }
    }

    /// `π_i = Σ_k ζ_i^k ζ_{i+1}^{-k}` as a matrix product.
    fn pi(&self, i: usize) -> Result<Matrix> {
        let ell = self.ell;
        let (zi, zj) = (&self.zeta[i - 1], &self.zeta[i]);
        let zj_inv = zj.pow(ell - 1);
        let mut out = Matrix::zeros(ell, self.dim(), self.dim());
        for k in 0..ell {
            out = out.checked_add(&zi.pow(k).checked_mul(&zj_inv.pow(k))?)?;
        }
        Ok(out)
    }

    /// `τ_i = s_i + π_i (u_i - u_{i+1})⁻¹`, the inverse taken on the image of
    /// `π_i`. Needs diagonal `u` and `π_i`.
    fn tau(&self, i: usize) -> Result<Matrix> {
        let pi = self.pi(i)?;
        let delta = self.u[i - 1].checked_sub(&self.u[i])?;
        if !pi.is_diagonal() || !delta.is_diagonal() {
            return Err(Error::NotDiagonal(format!("π_{i} or u_{i} - u_{}", i + 1)));
        }
        let mut corr = Matrix::zeros(self.ell, self.dim(), self.dim());
        for k in 0..self.dim() {
            let p = pi.get(k, k);
            if p.is_zero() {
                continue;
            }
            let d = delta.get(k, k);
            if d.is_zero() {
                return Err(Error::DegenerateShape(format!(
                    "u_{i} - u_{} vanishes on basis vector {k} in the image of π_{i}",
                    i + 1
                )));
            }
            corr.set(k, k, p.checked_div(&d)?);
        }
        self.s[i - 1].checked_add(&corr)
    }

    /// Matrix of a group algebra element.
    pub fn evaluate(&self, x: &GroupAlgebraElement) -> Result<Matrix> {
        evaluate(x, &self.s, &self.zeta)
    }

    /// Block-diagonal direct sum with another module.
    pub fn direct_sum(&self, other: &ModuleRep) -> Result<ModuleRep> {
        if (self.ell, self.n) != (other.ell, other.n) {
            return Err(Error::DimensionMismatch("modules over different algebras".into()));
        }
        let sum = |a: &[Matrix], b: &[Matrix]| -> Vec<Matrix> {
            a.iter().zip(b).map(|(x, y)| x.direct_sum(y)).collect()
        };
        ModuleRep::from_matrices(
            self.ell,
            sum(&self.s, &other.s),
            sum(&self.zeta, &other.zeta),
            sum(&self.u, &other.u),
        )
    }

    /// The weight of basis vector `k`, read off the diagonal `u` and `ζ` matrices.
    pub fn basis_weight(&self, k: usize) -> Result<Weight> {
        let mut a = Vec::with_capacity(self.n);
        let mut b = Vec::with_capacity(self.n);
        for i in 0..self.n {
            if !self.u[i].is_diagonal() || !self.zeta[i].is_diagonal() {
                return Err(Error::NotDiagonal(format!("u_{0} or ζ_{0}", i + 1)));
            }
            a.push(self.u[i].get(k, k).as_rational().ok_or_else(|| {
                Error::NotDiagonal(format!("u_{} eigenvalue is not rational", i + 1))
            })?);
            b.push(self.zeta[i].get(k, k).root_exponent().ok_or_else(|| {
                Error::NotDiagonal(format!("ζ_{} eigenvalue is not a root of unity", i + 1))
            })? as i64);
        }
        Weight::new(self.ell, a, b)
    }

    pub fn twist(&self, auto: &Automorphism) -> ModuleRep {
        let n = self.n;
        let (s, zeta, u) = match auto {
            Automorphism::Shift(kappa) => {
                let shift = Matrix::scalar(self.ell, self.dim(), &CycNumber::from_rational(self.ell, kappa.clone()));
                (
                    self.s.clone(),
                    self.zeta.clone(),
                    self.u.iter().map(|m| m + &shift).collect(),
                )
            }
            Automorphism::Rho => (
                (1..n).map(|i| self.s[n - i - 1].clone()).collect(),
                (1..=n).map(|i| self.zeta[n - i].clone()).collect(),
                (1..=n).map(|i| -&self.u[n - i]).collect(),
            ),
        };
        ModuleRep {
            ell: self.ell,
            n,
            shape: None,
            basis: Vec::new(),
            s,
            zeta,
            u,
        }
    }

    /// Reconstructs the shape from the weights of all basis vectors and checks
    /// that they agree. Returns the shape and the tableau of each basis vector.
    pub fn classify(&self) -> Result<(SkewShape, Vec<Tableau>)> {
        let mut shape: Option<SkewShape> = None;
        let mut tableaux = Vec::with_capacity(self.dim());
        for k in 0..self.dim() {
            let w = self.basis_weight(k)?;
            let (d, t) = reconstruct(&w, self.ell)?;
            match &shape {
                None => shape = Some(d),
                Some(prev) if *prev != d => {
                    return Err(Error::DegenerateShape(format!(
                        "basis vectors 0 and {k} reconstruct to different shapes"
                    )))
                }
                Some(_) => {}
            }
            tableaux.push(t);
        }
        Ok((shape.expect("modules are nonzero"), tableaux))
    }

    /// Exact checks of the defining relations.
    pub fn verify_relations(&self) -> Result<VerificationReport> {
        let (n, ell) = (self.n, self.ell);
        let id = Matrix::identity(ell, self.dim());
        let (s, z, u) = (&self.s, &self.zeta, &self.u);
        let mut r = VerificationReport::new();
        for i in 1..n {
            r.equal(format!("s{i}^2=1"), &(&s[i - 1] * &s[i - 1]), &id);
        }
        for i in 1..n.saturating_sub(1) {
            let (a, b) = (&s[i - 1], &s[i]);
            r.equal(format!("s{i}s{}s{i}=s{}s{i}s{}", i + 1, i + 1, i + 1), &(&(a * b) * a), &(&(b * a) * b));
        }
        for i in 1..n {
            for j in i + 2..n {
                r.equal(format!("s{i}s{j}=s{j}s{i}"), &(&s[i - 1] * &s[j - 1]), &(&s[j - 1] * &s[i - 1]));
            }
        }
        for i in 1..=n {
            r.equal(format!("z{i}^ell=1"), &z[i - 1].pow(ell), &id);
            for j in i + 1..=n {
                r.equal(format!("z{i}z{j}=z{j}z{i}"), &(&z[i - 1] * &z[j - 1]), &(&z[j - 1] * &z[i - 1]));
                r.equal(format!("u{i}u{j}=u{j}u{i}"), &(&u[i - 1] * &u[j - 1]), &(&u[j - 1] * &u[i - 1]));
            }
            for j in 1..=n {
                r.equal(format!("z{i}u{j}=u{j}z{i}"), &(&z[i - 1] * &u[j - 1]), &(&u[j - 1] * &z[i - 1]));
            }
        }
        for i in 1..n {
            let si = &s[i - 1];
            r.equal(format!("s{i}z{i}=z{}s{i}", i + 1), &(si * &z[i - 1]), &(&z[i] * si));
            for j in (1..=n).filter(|&j| j != i && j != i + 1) {
                r.equal(format!("s{i}z{j}=z{j}s{i}"), &(si * &z[j - 1]), &(&z[j - 1] * si));
                r.equal(format!("s{i}u{j}=u{j}s{i}"), &(si * &u[j - 1]), &(&u[j - 1] * si));
            }
            let pi = self.pi(i)?;
            r.equal(format!("s{i}u{i}=u{}s{i}-pi{i}", i + 1), &(si * &u[i - 1]), &(&(&u[i] * si) - &pi));
        }
        Ok(r)
    }

    /// Exact checks of the intertwiner identities: weight permutation, the
    /// square `τ_i² = (δ - π_i)(δ + π_i)/δ²` with `δ = u_i - u_{i+1}`, and the
    /// braid relations.
    pub fn verify_intertwiners(&self) -> Result<VerificationReport> {
        let n = self.n;
        let mut r = VerificationReport::new();
        let tau: Vec<Matrix> = (1..n).map(|i| self.tau(i)).collect::<Result<_>>()?;
        let swap = |i: usize, j: usize| if j == i { i + 1 } else if j == i + 1 { i } else { j };
        for i in 1..n {
            let t = &tau[i - 1];
            for j in 1..=n {
                let k = swap(i, j);
                r.equal(format!("u{j}tau{i}=tau{i}u{k}"), &(&self.u[j - 1] * t), &(t * &self.u[k - 1]));
                r.equal(format!("z{j}tau{i}=tau{i}z{k}"), &(&self.zeta[j - 1] * t), &(t * &self.zeta[k - 1]));
            }
            let pi = self.pi(i)?;
            let delta = &self.u[i - 1] - &self.u[i];
            let mut expect = Matrix::zeros(self.ell, self.dim(), self.dim());
            for k in 0..self.dim() {
                let (p, d) = (pi.get(k, k), delta.get(k, k));
                let v = if p.is_zero() {
                    CycNumber::one(self.ell)
                } else {
                    (&(&d - &p) * &(&d + &p)).checked_div(&(&d * &d))?
                };
                expect.set(k, k, v);
            }
            r.equal(format!("tau{i}^2"), &(t * t), &expect);
        }
        for i in 1..n.saturating_sub(1) {
            let (a, b) = (&tau[i - 1], &tau[i]);
            r.equal(
                format!("tau{i}tau{}tau{i}=tau{}tau{i}tau{}", i + 1, i + 1, i + 1),
                &(&(a * b) * a),
                &(&(b * a) * b),
            );
        }
        for i in 1..n {
            for j in i + 2..n {
                r.equal(format!("tau{i}tau{j}=tau{j}tau{i}"), &(&tau[i - 1] * &tau[j - 1]), &(&tau[j - 1] * &tau[i - 1]));
            }
        }
        Ok(r)
    }

    /// Checks that each Jucys–Murphy element acts as the matching `u_i`.
    pub fn jm_consistency(&self) -> Result<VerificationReport> {
        let mut r = VerificationReport::new();
        for i in 1..=self.n {
            let phi = self.evaluate(&jm_element(i, self.ell, self.n))?;
            r.equal(format!("phi{i}=u{i}"), &phi, &self.u[i - 1]);
        }
        Ok(r)
    }

    /// Dimension of the space of matrices commuting with every generator.
    pub fn commutant_dimension(&self) -> usize {
        let dim = self.dim();
        // unknowns X[p][q] that survive the diagonal generators
        let diagonal: Vec<&Matrix> = self
            .u
            .iter()
            .chain(&self.zeta)
            .filter(|m| m.is_diagonal())
            .collect();
        let mut others: Vec<&Matrix> = self.s.iter().collect();
        others.extend(self.u.iter().chain(&self.zeta).filter(|m| !m.is_diagonal()));

        let diag_vals: Vec<Vec<CycNumber>> = diagonal.iter().map(|m| m.diagonal_entries()).collect();
        let mut unknown: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        for p in 0..dim {
            for q in 0..dim {
                if diag_vals.iter().all(|v| v[p] == v[q]) {
                    let k = unknown.len();
                    unknown.insert((p, q), k);
                }
            }
        }
        // column views for X·g
        let cols: Vec<Vec<BTreeMap<usize, CycNumber>>> = others
            .iter()
            .map(|g| {
                let mut c = vec![BTreeMap::new(); dim];
                for (i, j, v) in g.triplets() {
                    c[j].insert(i, v.clone());
                }
                c
            })
            .collect();
        let mut ech = Echelon::new();
        for (g, gcols) in others.iter().zip(&cols) {
            for p in 0..dim {
                for q in 0..dim {
                    // (X g - g X)[p][q] = Σ_k X[p][k] g[k][q] - Σ_k g[p][k] X[k][q]
                    let mut row: BTreeMap<usize, CycNumber> = BTreeMap::new();
                    for (k, v) in &gcols[q] {
                        if let Some(&x) = unknown.get(&(p, *k)) {
                            let e = row.entry(x).or_insert_with(|| CycNumber::zero(self.ell));
                            *e = &*e + v;
                        }
                    }
                    for (k, v) in g.row(p) {
                        if let Some(&x) = unknown.get(&(*k, q)) {
                            let e = row.entry(x).or_insert_with(|| CycNumber::zero(self.ell));
                            *e = &*e - v;
                        }
                    }
                    if !row.is_empty() {
                        ech.push(row);
                    }
                }
            }
        }
        unknown.len() - ech.rank()
    }

    /// `e_k(u_1..u_n)` and `e_k(ζ_1..ζ_n)` for `k = 1..n`, each required to be scalar.
    pub fn central_character(&self) -> Result<(Vec<CycNumber>, Vec<CycNumber>)> {
        let eu = elementary_symmetric(&self.u, "u")?;
        let ez = elementary_symmetric(&self.zeta, "zeta")?;
        Ok((eu, ez))
    }

    /// JSON dump: shape, basis and matrices (sparse triplets unless `dense`).
    pub fn to_json(&self, dense: bool) -> Value {
        let mats = |ms: &[Matrix]| -> Value {
            ms.iter()
                .map(|m| {
                    if dense {
                        serde_json::to_value(m.to_dense()).expect("serializable")
                    } else {
                        serde_json::to_value(m.to_sparse_json()).expect("serializable")
                    }
                })
                .collect()
        };
        json!({
            "ell": self.ell,
            "n": self.n,
            "dim": self.dim(),
            "shape": self.shape.as_ref().map(ShapeJson::from),
            "basis": self.basis.iter().map(TableauJson::from).collect::<Vec<_>>(),
            "s": mats(&self.s),
            "zeta": mats(&self.zeta),
            "u": mats(&self.u),
        })
    }
}

fn elementary_symmetric(ms: &[Matrix], name: &str) -> Result<Vec<CycNumber>> {
    let ell = ms[0].ell();
    let dim = ms[0].rows();
    let n = ms.len();
    let mut e: Vec<Matrix> = vec![Matrix::identity(ell, dim)];
    e.extend((0..n).map(|_| Matrix::zeros(ell, dim, dim)));
    for (i, m) in ms.iter().enumerate() {
        for k in (1..=i + 1).rev() {
            e[k] = e[k].checked_add(&e[k - 1].checked_mul(m)?)?;
        }
    }
    (1..=n)
        .map(|k| {
            e[k].as_scalar()
                .ok_or_else(|| Error::NotScalar(format!("e_{k}({name})")))
        })
        .collect()
}

/// Distinct weights of the basis of `m`, used as a quick multiplicity-freeness check.
pub fn distinct_weights(m: &ModuleRep) -> Result<usize> {
    let mut set = BTreeSet::new();
    for k in 0..m.dim() {
        let w = m.basis_weight(k)?;
        set.insert((w.a, w.b));
    }
    Ok(set.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclo::rat;
    use crate::shapes::RawComponent;

    fn q(r: Rational) -> CycNumber {
        CycNumber::from_rational(1, r)
    }

    fn lambda21() -> ModuleRep {
        build_module(&SkewShape::from_multipartition(&[vec![2, 1]]).unwrap()).unwrap()
    }

    #[test]
    fn two_one_seminormal_matrices() {
        let m = lambda21();
        assert_eq!(m.dim(), 2);
        // row reading first
        assert_eq!(m.basis()[0].labels(), &[1, 2, 3]);
        let diag = |i: usize| m.u[i - 1].diagonal_entries();
        assert_eq!(diag(2), vec![q(int(1)), q(int(-1))]);
        assert_eq!(diag(3), vec![q(int(-1)), q(int(1))]);
        let s2 = &m.s[1];
        assert_eq!(s2.get(0, 0), q(rat(-1, 2)));
        assert_eq!(s2.get(1, 0), q(int(1)));
        assert_eq!(s2.get(0, 1), q(rat(3, 4)));
        assert_eq!(s2.get(1, 1), q(rat(1, 2)));
        assert_eq!(&(s2 * s2), &Matrix::identity(1, 2));
        let tau = m.generator_matrix(Generator::Tau(2)).unwrap();
        assert_eq!(tau.get(1, 0), q(int(1)));
        assert_eq!(tau.get(0, 1), q(rat(3, 4)));
        assert_eq!(tau.get(0, 0), q(int(0)));
        assert_eq!(tau.get(1, 1), q(int(0)));
        assert_eq!(&(&tau * &tau), &Matrix::scalar(1, 2, &q(rat(3, 4))));
    }

    #[test]
    fn row_acts_trivially() {
        let m = build_module(&SkewShape::from_multipartition(&[vec![4]]).unwrap()).unwrap();
        assert_eq!(m.dim(), 1);
        for i in 1..4 {
            assert_eq!(m.s[i - 1], Matrix::identity(1, 1));
            assert_eq!(m.u[i].get(0, 0), q(int(i as i64)));
        }
        assert!(m.verify_relations().unwrap().passed());
        assert_eq!(m.commutant_dimension(), 1);
    }

    #[test]
    fn relations_and_intertwiners_small() {
        let shapes = [
            SkewShape::from_multipartition(&[vec![2, 1]]).unwrap(),
            SkewShape::from_multipartition(&[vec![1], vec![1], vec![1]]).unwrap(),
            SkewShape::from_multipartition(&[vec![2], vec![1]]).unwrap(),
            SkewShape::new(
                1,
                &[
                    RawComponent::new(0, Rational::zero(), vec![(1, 0), (1, 1)]),
                    RawComponent::new(0, rat(1, 2), vec![(1, 0)]),
                ],
            )
            .unwrap(),
        ];
        for d in &shapes {
            let m = build_module(d).unwrap();
            let r = m.verify_relations().unwrap();
            assert!(r.passed(), "{d}: {:?}", r.failures().collect::<Vec<_>>());
            let r = m.verify_intertwiners().unwrap();
            assert!(r.passed(), "{d}: {:?}", r.failures().collect::<Vec<_>>());
            assert_eq!(m.commutant_dimension(), 1);
            assert_eq!(m.direct_sum(&m).unwrap().commutant_dimension(), 4);
        }
        // ((1),(1),(1)): 6-dimensional, s_i permute the basis
        let m = build_module(&shapes[1]).unwrap();
        assert_eq!(m.dim(), 6);
    }

    #[test]
    fn corrupted_s_is_caught() {
        let m = lambda21();
        let mut bad = m.s[1].clone();
        bad.add_to(0, 0, &q(int(1)));
        let r = m.clone().with_s(2, bad).verify_relations().unwrap();
        let fail: Vec<_> = r.failures().map(|c| c.relation.as_str()).collect();
        assert!(fail.contains(&"s2^2=1"));
        assert!(!fail.contains(&"s1^2=1"));
        let w = r.failures().find(|c| c.relation == "s2^2=1").unwrap().witness.clone().unwrap();
        assert!(!w.value.is_zero());
    }

    #[test]
    fn central_character_of_two_one() {
        let (eu, ez) = lambda21().central_character().unwrap();
        assert_eq!(eu, vec![q(int(0)), q(int(-1)), q(int(0))]);
        assert_eq!(ez, vec![q(int(3)), q(int(3)), q(int(1))]);
        // e_n(ζ) = ζ^{Σ β}
        let d = SkewShape::from_multipartition(&[vec![1], vec![2], vec![1]]).unwrap();
        let (_, ez) = build_module(&d).unwrap().central_character().unwrap();
        assert_eq!(ez[3], CycNumber::root_of_unity(3, 1 + 1 + 2));
    }

    #[test]
    fn jm_on_partitions() {
        let m = build_module(&SkewShape::from_multipartition(&[vec![2]]).unwrap()).unwrap();
        let r = m.jm_consistency().unwrap();
        assert!(r.passed());
        let m = build_module(&SkewShape::from_multipartition(&[vec![2, 1], vec![1]]).unwrap()).unwrap();
        assert!(m.jm_consistency().unwrap().passed());
    }

    #[test]
    fn twists() {
        let m = lambda21();
        assert_eq!(m.twist(&Automorphism::Shift(Rational::zero())).u, m.u);
        let rr = m.twist(&Automorphism::Rho).twist(&Automorphism::Rho);
        assert_eq!((rr.s, rr.zeta, rr.u), (m.s.clone(), m.zeta.clone(), m.u.clone()));
        for auto in [Automorphism::Rho, Automorphism::Shift(rat(1, 2))] {
            assert!(m.twist(&auto).verify_relations().unwrap().passed());
        }
    }

    #[test]
    fn index_errors() {
        let m = lambda21();
        assert!(matches!(m.generator_matrix(Generator::S(3)), Err(Error::IndexOutOfRange { .. })));
        assert!(matches!(m.generator_matrix(Generator::U(0)), Err(Error::IndexOutOfRange { .. })));
        let pi = m.generator_matrix(Generator::Pi(1)).unwrap();
        assert_eq!(pi, Matrix::identity(1, 2));
    }
}
