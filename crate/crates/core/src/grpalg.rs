//! The group G(ℓ,1,n) in normal form `ζ^a w`, its group algebra over Q(ζ_ℓ),
//! Jucys–Murphy elements and their evaluation inside a module.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use serde::Serialize;

use crate::cyclo::CycNumber;
use crate::error::{Error, Result};
use crate::matrix::Matrix;

/// `ζ^a w`: `colors[i-1] = a_i` in `0..ℓ`, `perm[i-1] = w(i)` (1-based values).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct GroupElement {
    #[serde(skip)]
    ell: u32,
    colors: Vec<u32>,
    perm: Vec<usize>,
}

impl GroupElement {
    pub fn new(ell: u32, colors: Vec<u32>, perm: Vec<usize>) -> Result<GroupElement> {
        let n = perm.len();
        if ell == 0 || colors.len() != n {
            return Err(Error::Malformed(format!(
                "group element needs ell >= 1 and {n} colors, got {}",
                colors.len()
            )));
        }
        let mut seen = vec![false; n];
        for &p in &perm {
            if p == 0 || p > n || std::mem::replace(&mut seen[p - 1], true) {
                return Err(Error::Malformed(format!("{perm:?} is not a permutation")));
            }
        }
        let colors = colors.into_iter().map(|c| c % ell).collect();
        Ok(GroupElement { ell, colors, perm })
    }

    pub fn identity(ell: u32, n: usize) -> GroupElement {
        GroupElement {
            ell,
            colors: vec![0; n],
            perm: (1..=n).collect(),
        }
    }

    /// The simple transposition `s_i = (i, i+1)`.
    pub fn s(ell: u32, n: usize, i: usize) -> GroupElement {
        Self::s_ij(ell, n, i, i + 1)
    }

    /// The transposition `(i, j)`.
    pub fn s_ij(ell: u32, n: usize, i: usize, j: usize) -> GroupElement {
        let mut g = Self::identity(ell, n);
        g.perm.swap(i - 1, j - 1);
        g
    }

    /// `ζ_i^k`.
    pub fn zeta(ell: u32, n: usize, i: usize, k: i64) -> GroupElement {
        let mut g = Self::identity(ell, n);
        g.colors[i - 1] = k.rem_euclid(ell as i64) as u32;
        g
    }

    pub fn ell(&self) -> u32 {
        self.ell
    }

    pub fn n(&self) -> usize {
        self.perm.len()
    }

    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn is_identity(&self) -> bool {
        self.colors.iter().all(|&c| c == 0) && self.perm.iter().enumerate().all(|(i, &p)| p == i + 1)
    }

    /// `ζ^a w · ζ^b v = ζ^{a + w(b)} (wv)` with `w(b)_i = b_{w⁻¹(i)}`.
    pub fn multiply(&self, other: &GroupElement) -> GroupElement {
        assert_eq!((self.ell, self.n()), (other.ell, other.n()), "group mismatch");
        let n = self.n();
        let mut colors = self.colors.clone();
        for j in 0..n {
            let wj = self.perm[j] - 1;
            colors[wj] = (colors[wj] + other.colors[j]) % self.ell;
        }
        let perm = (0..n).map(|j| self.perm[other.perm[j] - 1]).collect();
        GroupElement {
            ell: self.ell,
            colors,
            perm,
        }
    }

    pub fn inverse(&self) -> GroupElement {
        // (ζ^a w)⁻¹ = w⁻¹ ζ^{-a} = ζ^{-w⁻¹(a)} w⁻¹
        let n = self.n();
        let mut inv = vec![0; n];
        for (j, &p) in self.perm.iter().enumerate() {
            inv[p - 1] = j + 1;
        }
        let mut colors = vec![0; n];
        for (j, &p) in self.perm.iter().enumerate() {
            colors[j] = (self.ell - self.colors[p - 1]) % self.ell;
        }
        GroupElement {
            ell: self.ell,
            colors,
            perm: inv,
        }
    }

    /// A reduced word `i_1..i_k` with `w = s_{i_1} ⋯ s_{i_k}`, from bubble sort.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut w = self.perm.clone();
        let mut word = Vec::new();
        while let Some(i) = (0..w.len().saturating_sub(1)).find(|&i| w[i] > w[i + 1]) {
            // w ← w ∘ s_{i+1}
            w.swap(i, i + 1);
            word.push(i + 1);
        }
        word.reverse();
        word
    }
}

impl fmt::Debug for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ζ^{:?}·{:?}", self.colors, self.perm)
    }
}

/// A finite `Q(ζ_ℓ)`-linear combination of group elements; zero terms are dropped.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GroupAlgebraElement {
    ell: u32,
    n: usize,
    terms: BTreeMap<GroupElement, CycNumber>,
}

#[derive(Serialize)]
struct TermJson {
    element: GroupElement,
    coeff: CycNumber,
}

impl GroupAlgebraElement {
    pub fn zero(ell: u32, n: usize) -> Self {
        GroupAlgebraElement {
            ell,
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_element(g: GroupElement) -> Self {
        let mut x = Self::zero(g.ell, g.n());
        x.add_term(g, &CycNumber::one(x.ell));
        x
    }

    pub fn ell(&self) -> u32 {
        self.ell
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<GroupElement, CycNumber> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, g: GroupElement, c: &CycNumber) {
        let sum = match self.terms.get(&g) {
            Some(cur) => cur + c,
            None => c.clone(),
        };
        if sum.is_zero() {
            self.terms.remove(&g);
        } else {
            self.terms.insert(g, sum);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (g, c) in &other.terms {
            out.add_term(g.clone(), c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&CycNumber::from_int(self.ell, -1)))
    }

    pub fn scale(&self, c: &CycNumber) -> Self {
        let mut out = Self::zero(self.ell, self.n);
        for (g, v) in &self.terms {
            out.add_term(g.clone(), &(v * c));
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.ell, self.n);
        for (g, a) in &self.terms {
            for (h, b) in &other.terms {
                out.add_term(g.multiply(h), &(a * b));
            }
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<TermJson> = self
            .terms
            .iter()
            .map(|(g, c)| TermJson {
                element: g.clone(),
                coeff: c.clone(),
            })
            .collect();
        serde_json::to_value(terms).expect("serializable")
    }
}

/// `φ_i = Σ_{j<i} Σ_k ζ_i^k s_{ij} ζ_i^{-k}`.
pub fn jm_element(i: usize, ell: u32, n: usize) -> GroupAlgebraElement {
    let mut x = GroupAlgebraElement::zero(ell, n);
    let one = CycNumber::one(ell);
    for j in 1..i {
        for k in 0..ell as i64 {
            let g = GroupElement::zeta(ell, n, i, k)
                .multiply(&GroupElement::s_ij(ell, n, i, j))
                .multiply(&GroupElement::zeta(ell, n, i, -k));
            x.add_term(g, &one);
        }
    }
    x
}

/// `π_i = Σ_k ζ_i^k ζ_{i+1}^{-k}`.
pub fn pi_element(i: usize, ell: u32, n: usize) -> GroupAlgebraElement {
    let mut x = GroupAlgebraElement::zero(ell, n);
    let one = CycNumber::one(ell);
    for k in 0..ell as i64 {
        let g = GroupElement::zeta(ell, n, i, k).multiply(&GroupElement::zeta(ell, n, i + 1, -k));
        x.add_term(g, &one);
    }
    x
}

/// All elements generated by `s_1..s_{n-1}` and `ζ_1`.
pub fn generated_group(ell: u32, n: usize) -> BTreeSet<GroupElement> {
    let mut gens: Vec<GroupElement> = (1..n).map(|i| GroupElement::s(ell, n, i)).collect();
    gens.push(GroupElement::zeta(ell, n, 1, 1));
    let id = GroupElement::identity(ell, n);
    let mut seen = BTreeSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(g) = queue.pop_front() {
        for s in &gens {
            let h = g.multiply(s);
            if seen.insert(h.clone()) {
                queue.push_back(h);
            }
        }
    }
    seen
}

/// Matrix of `x` given the matrices of `s_1..s_{n-1}` and `ζ_1..ζ_n`.
///
/// Each `ζ^a w` becomes `ζ_1^{a_1}⋯ζ_n^{a_n}` times the product of the `s`
/// matrices along the bubble-sort reduced word of `w`.
pub fn evaluate(x: &GroupAlgebraElement, s: &[Matrix], zeta: &[Matrix]) -> Result<Matrix> {
    let n = x.n();
    if zeta.len() != n || s.len() != n.saturating_sub(1) {
        return Err(Error::DimensionMismatch(format!(
            "element has n = {n} but module supplies {} ζ and {} s matrices",
            zeta.len(),
            s.len()
        )));
    }
    let dim = zeta[0].rows();
    let ell = zeta[0].ell();
    if x.ell() != ell {
        return Err(Error::MismatchedField(x.ell(), ell));
    }
    let mut words: BTreeMap<&[usize], Matrix> = BTreeMap::new();
    let mut out = Matrix::zeros(ell, dim, dim);
    for (g, c) in x.terms() {
        if !words.contains_key(g.perm()) {
            let mut m = Matrix::identity(ell, dim);
            for &i in &g.reduced_word() {
                m = m.checked_mul(&s[i - 1])?;
            }
            words.insert(g.perm(), m);
        }
        let mut m = words[g.perm()].clone();
        for (i, &a) in g.colors().iter().enumerate().rev() {
            if a > 0 {
                m = zeta[i].pow(a).checked_mul(&m)?;
            }
        }
        out = out.checked_add(&m.scale(c))?;
    }
    Ok(out)
}
