//! The verification corpus and the exhaustive checks run over it.
//!
//! Every check returns a [`CriterionResult`]; work over shapes fans out with
//! rayon and failures are reported in corpus order.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::classify::{check_weight_condition, classify_roundtrip, reconstruct};
use crate::cyclo::{int, rat};
use crate::error::Result;
use crate::grpalg::{jm_element, pi_element, GroupAlgebraElement, GroupElement};
use crate::modules::{build_module, Automorphism, ModuleRep};
use crate::shapes::{enumerate_shapes, enumerate_syt, hook_dimension, RawComponent, SkewShape, Tableau, Weight};

#[derive(Clone, Debug, Serialize)]
pub struct CriterionResult {
    pub id: u32,
    pub name: String,
    pub pass: bool,
    /// Number of individual items checked.
    pub checked: usize,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub failures: Vec<String>,
}

impl CriterionResult {
    fn new(id: u32, name: &str, checked: usize, failures: Vec<String>) -> Self {
        CriterionResult {
            id,
            name: name.to_string(),
            pass: failures.is_empty() && checked > 0,
            checked,
            failures,
        }
    }
}

impl fmt::Display for CriterionResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}] {:>2} {:<28} checked {:>7}",
            if self.pass { "PASS" } else { "FAIL" },
            self.id,
            self.name,
            self.checked
        )?;
        if let Some(first) = self.failures.first() {
            write!(f, "  ({} failures; first: {first})", self.failures.len())?;
        }
        Ok(())
    }
}

/// Canonical integral shapes with `1..=max_n` boxes, window equal to the size.
pub fn integral_corpus(ell: u32, max_n: usize) -> Vec<SkewShape> {
    (1..=max_n)
        .flat_map(|n| enumerate_shapes(ell, n, n as i64))
        .collect()
}

/// Shapes with a component at content offset 1/2: each integral shape gets
/// its last component (its only one, if connected) moved to offset 1/2.
pub fn half_offset_corpus(ell: u32, max_n: usize) -> Vec<SkewShape> {
    let mut out = BTreeSet::new();
    for d in integral_corpus(ell, max_n) {
        let comps = d.components();
        let mut raws: Vec<RawComponent> = comps
            .iter()
            .map(|c| RawComponent::new(c.beta(), c.offset().clone(), c.cells().to_vec()))
            .collect();
        if raws.len() >= 2 {
            raws.last_mut().expect("nonempty").offset = rat(1, 2);
        } else {
            raws[0].offset = rat(1, 2);
        }
        out.insert(SkewShape::new(ell, &raws).expect("offsets 1/2 separate components"));
    }
    out.into_iter().collect()
}

/// Integral corpus followed by the half-offset shapes.
pub fn corpus(ell: u32, max_n: usize) -> Vec<SkewShape> {
    let mut v = integral_corpus(ell, max_n);
    v.extend(half_offset_corpus(ell, max_n));
    v
}

/// All ℓ-partitions of `n`.
pub fn multipartitions(ell: u32, n: usize) -> Vec<Vec<Vec<usize>>> {
    fn partitions(n: usize, max: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for first in (1..=n.min(max)).rev() {
            for mut rest in partitions(n - first, first) {
                rest.insert(0, first);
                out.push(rest);
            }
        }
        out
    }
    fn rec(ell: usize, n: usize, acc: &mut Vec<Vec<usize>>, out: &mut Vec<Vec<Vec<usize>>>) {
        if acc.len() + 1 == ell {
            // the last part takes all remaining boxes
            for p in partitions(n, n) {
                acc.push(p);
                out.push(acc.clone());
                acc.pop();
            }
            return;
        }
        for k in 0..=n {
            for p in partitions(k, k) {
                acc.push(p);
                rec(ell, n - k, acc, out);
                acc.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(ell as usize, n, &mut Vec::new(), &mut out);
    out
}

fn collect_failures<T: Sync>(items: &[T], f: impl Fn(&T) -> Vec<String> + Sync + Send) -> Vec<String> {
    items.par_iter().map(f).collect::<Vec<_>>().concat()
}

fn report_failures(d: &SkewShape, r: Result<crate::modules::VerificationReport>) -> Vec<String> {
    match r {
        Ok(r) => r
            .failures()
            .map(|c| format!("{d}: {} {:?}", c.relation, c.witness))
            .collect(),
        Err(e) => vec![format!("{d}: {e}")],
    }
}

fn with_module(d: &SkewShape, f: impl FnOnce(&ModuleRep) -> Vec<String>) -> Vec<String> {
    match build_module(d) {
        Ok(m) => f(&m),
        Err(e) => vec![format!("{d}: build failed: {e}")],
    }
}

/// Defining relations, exactly, on every corpus module.
pub fn relations(ell: u32, max_n: usize) -> CriterionResult {
    let shapes = corpus(ell, max_n);
    let fails = collect_failures(&shapes, |d| with_module(d, |m| report_failures(d, m.verify_relations())));
    CriterionResult::new(1, "relations", shapes.len(), fails)
}

/// Intertwiner identities on every corpus module.
pub fn intertwiners(ell: u32, max_n: usize) -> CriterionResult {
    let shapes = corpus(ell, max_n);
    let fails = collect_failures(&shapes, |d| with_module(d, |m| report_failures(d, m.verify_intertwiners())));
    CriterionResult::new(2, "intertwiners", shapes.len(), fails)
}

/// Symbolic Jucys–Murphy relations in the group algebra.
pub fn jm_symbolic(ell: u32, n: usize) -> Vec<String> {
    let mut fails = Vec::new();
    let el = GroupAlgebraElement::from_element;
    let phi: Vec<_> = (1..=n).map(|i| jm_element(i, ell, n)).collect();
    for i in 1..=n {
        let z = el(GroupElement::zeta(ell, n, i, 1));
        for j in 1..=n {
            if z.mul(&phi[j - 1]) != phi[j - 1].mul(&z) {
                fails.push(format!("ell={ell} n={n}: z{i} phi{j}"));
            }
            if phi[i - 1].mul(&phi[j - 1]) != phi[j - 1].mul(&phi[i - 1]) {
                fails.push(format!("ell={ell} n={n}: phi{i} phi{j}"));
            }
        }
    }
    for i in 1..n {
        let s = el(GroupElement::s(ell, n, i));
        for j in (1..=n).filter(|&j| j != i && j != i + 1) {
            if s.mul(&phi[j - 1]) != phi[j - 1].mul(&s) {
                fails.push(format!("ell={ell} n={n}: s{i} phi{j}"));
            }
        }
        if s.mul(&phi[i - 1]) != phi[i].mul(&s).sub(&pi_element(i, ell, n)) {
            fails.push(format!("ell={ell} n={n}: s{i} phi{i}"));
        }
    }
    fails
}

/// Jucys–Murphy elements act as `u_i` on partition modules; relations hold symbolically.
pub fn jucys_murphy(ell: u32, max_n: usize) -> CriterionResult {
    let shapes: Vec<SkewShape> = (1..=max_n)
        .flat_map(|n| multipartitions(ell, n))
        .map(|l| SkewShape::from_multipartition(&l).expect("valid l-partition"))
        .collect();
    let mut fails = collect_failures(&shapes, |d| with_module(d, |m| report_failures(d, m.jm_consistency())));
    for n in 1..=max_n {
        fails.extend(jm_symbolic(ell, n));
    }
    CriterionResult::new(3, "jucys-murphy", shapes.len() + max_n, fails)
}

/// Hook length formula against the tableau count.
pub fn hook_formula(ell: u32, max_n: usize) -> CriterionResult {
    let lambdas: Vec<Vec<Vec<usize>>> = (1..=max_n).flat_map(|n| multipartitions(ell, n)).collect();
    let fails = collect_failures(&lambdas, |l| {
        let d = SkewShape::from_multipartition(l).expect("valid l-partition");
        let count = enumerate_syt(&d).len();
        match hook_dimension(l) {
            Ok(h) if h == count.into() => vec![],
            Ok(h) => vec![format!("{l:?}: hook {h} vs {count} tableaux")],
            Err(e) => vec![format!("{l:?}: {e}")],
        }
    });
    CriterionResult::new(4, "hook-formula", lambdas.len(), fails)
}

/// Commutant dimension 1 on every module, 4 on its double.
pub fn irreducibility(ell: u32, max_n: usize) -> CriterionResult {
    let shapes = corpus(ell, max_n);
    let fails = collect_failures(&shapes, |d| {
        with_module(d, |m| {
            let mut f = Vec::new();
            let c = m.commutant_dimension();
            if c != 1 {
                f.push(format!("{d}: commutant dimension {c}"));
            }
            match m.direct_sum(m) {
                Ok(mm) if mm.commutant_dimension() == 4 => {}
                Ok(mm) => f.push(format!("{d}: double has commutant {}", mm.commutant_dimension())),
                Err(e) => f.push(format!("{d}: {e}")),
            }
            f
        })
    });
    CriterionResult::new(5, "irreducibility", shapes.len(), fails)
}

/// Every tableau of every corpus shape reconstructs from its weight.
pub fn roundtrip(ell: u32, max_n: usize) -> CriterionResult {
    let shapes = corpus(ell, max_n);
    let fails = collect_failures(&shapes, |d| {
        classify_roundtrip(d)
            .failures()
            .map(|c| format!("{d}: {} {}", c.relation, c.detail.clone().unwrap_or_default()))
            .collect()
    });
    CriterionResult::new(6, "classification-roundtrip", shapes.len(), fails)
}

/// Weights made non-calibrated by copying `(a_i, b_i)` into position `i+1`
/// are rejected, and every reported witness reproduces.
pub fn rejection(ell: u32, max_n: usize) -> CriterionResult {
    let shapes = integral_corpus(ell, max_n);
    let mut fails = collect_failures(&shapes, |d| {
        let mut f = Vec::new();
        for t in enumerate_syt(d) {
            let w = t.weight();
            for i in 1..w.n() {
                let mut bad = w.clone();
                bad.a[i] = bad.a[i - 1].clone();
                bad.b[i] = bad.b[i - 1];
                match check_weight_condition(&bad, ell) {
                    Ok(()) => f.push(format!("{d}: copy at {i} accepted")),
                    Err(v) if !v.recheck(&bad, ell) => f.push(format!("{d}: witness {v} does not reproduce")),
                    Err(_) => {}
                }
                if reconstruct(&bad, ell).is_ok() {
                    f.push(format!("{d}: copy at {i} reconstructed"));
                }
                // shifting one entry by ±ℓ either still passes or yields a reproducible witness
                for delta in [int(ell as i64), int(-(ell as i64))] {
                    let mut moved = w.clone();
                    moved.a[i] = &moved.a[i] + &delta;
                    if let Err(v) = check_weight_condition(&moved, ell) {
                        if !v.recheck(&moved, ell) {
                            f.push(format!("{d}: witness {v} does not reproduce"));
                        }
                    }
                }
            }
        }
        f
    });
    let zero = Weight::new(1, vec![int(0), int(0)], vec![0, 0]).expect("well-formed");
    match check_weight_condition(&zero, 1) {
        Err(v) if v.kind == crate::classify::ViolationKind::AdjacentEqual && (v.i, v.j) == (1, 2) => {}
        other => fails.push(format!("weight (0,0): {other:?}")),
    }
    CriterionResult::new(7, "rejection", shapes.len() + 1, fails)
}

/// One representative per distinct sequence of component cell sets.
///
/// Standardness, the legal transpositions and the `(component, row)` order
/// behind inversion sets only see the cells of each component and the order
/// of the components; β, offsets and contents play no role. Shapes sharing
/// that data (up to translating each component) have the same tableaux, so checking one suffices.
fn combinatorial_representatives(shapes: Vec<SkewShape>) -> Vec<SkewShape> {
    let mut seen = BTreeSet::new();
    shapes
        .into_iter()
        .filter(|d| {
            let key: Vec<Vec<(i64, i64)>> = d
                .components()
                .iter()
                .map(|c| {
                    let lo = c.content_range().0;
                    c.cells().iter().map(|&(r, k)| (r, k - lo)).collect()
                })
                .collect();
            seen.insert(key)
        })
        .collect()
}

/// Inversion-set identities and all-pairs paths on shapes with at most
/// `lemma_n` boxes; tableau-graph connectivity and paths to and from fixed
/// tableaux up to `graph_n` boxes.
pub fn tableau_lemmas(ell: u32, lemma_n: usize, graph_n: usize) -> CriterionResult {
    let small = combinatorial_representatives(integral_corpus(ell, lemma_n));
    let mut fails = collect_failures(&small, |d| {
        let mut f = Vec::new();
        let syt = enumerate_syt(d);
        let rr = Tableau::row_reading(d);
        if !graph_connected(&syt) {
            f.push(format!("{d}: tableau graph disconnected"));
        }
        for t in &syt {
            let inv = t.inversion_set();
            if inv.is_empty() != (*t == rr) {
                f.push(format!("{d}: empty inversion set iff row reading fails for {:?}", t.labels()));
            }
            for i in 1..t.n() {
                if !inv.contains(&(i, i + 1)) {
                    continue;
                }
                let Ok(st) = t.apply_transposition(i) else { continue };
                let swap = |k: usize| if k == i { i + 1 } else if k == i + 1 { i } else { k };
                let expect: BTreeSet<(usize, usize)> = inv
                    .iter()
                    .filter(|&&p| p != (i, i + 1))
                    .map(|&(a, b)| {
                        let (a, b) = (swap(a), swap(b));
                        (a.min(b), a.max(b))
                    })
                    .collect();
                if st.inversion_set() != expect {
                    f.push(format!("{d}: inversion identity fails at {:?}, i={i}", t.labels()));
                }
            }
            for u in &syt {
                f.extend(replay(d, t, u));
            }
        }
        f
    });
    let big = combinatorial_representatives(
        (lemma_n + 1..=graph_n)
            .flat_map(|n| enumerate_shapes(ell, n, n as i64))
            .collect(),
    );
    fails.extend(collect_failures(&big, |d| {
        let syt = enumerate_syt(d);
        let mut f = Vec::new();
        if !graph_connected(&syt) {
            f.push(format!("{d}: tableau graph disconnected"));
        }
        let rr = Tableau::row_reading(d);
        let last = syt.last().expect("nonempty");
        for t in &syt {
            f.extend(replay(d, t, &rr));
            f.extend(replay(d, last, t));
        }
        f
    }));
    CriterionResult::new(8, "tableau-lemmas", small.len() + big.len(), fails)
}

fn replay(d: &SkewShape, t: &Tableau, u: &Tableau) -> Vec<String> {
    let path = match t.path_to(u) {
        Ok(p) => p,
        Err(e) => return vec![format!("{d}: {e}")],
    };
    if path.is_empty() != (t == u) {
        return vec![format!("{d}: path emptiness wrong for {:?} -> {:?}", t.labels(), u.labels())];
    }
    let mut cur = t.clone();
    for &i in &path {
        match cur.apply_transposition(i) {
            Ok(next) => cur = next,
            Err(e) => return vec![format!("{d}: illegal step {i}: {e}")],
        }
    }
    if &cur != u {
        return vec![format!("{d}: path from {:?} misses {:?}", t.labels(), u.labels())];
    }
    vec![]
}

fn graph_connected(syt: &[Tableau]) -> bool {
    let index: std::collections::HashMap<&[usize], usize> =
        syt.iter().enumerate().map(|(k, t)| (t.labels(), k)).collect();
    let mut seen = vec![false; syt.len()];
    seen[0] = true;
    let mut queue = VecDeque::from([0]);
    while let Some(k) = queue.pop_front() {
        for i in 1..syt[k].n() {
            if let Ok(st) = syt[k].apply_transposition(i) {
                let j = index[st.labels()];
                if !seen[j] {
                    seen[j] = true;
                    queue.push_back(j);
                }
            }
        }
    }
    seen.into_iter().all(|s| s)
}

/// Shift twists classify to shifted shapes; the ρ twist satisfies the
/// relations, classifies to the rotated shape, and twisting back recovers `D`.
pub fn twists(ell: u32, max_n: usize) -> CriterionResult {
    let shapes = corpus(ell, max_n);
    let ell_q = int(ell as i64);
    let fails = collect_failures(&shapes, |d| {
        with_module(d, |m| {
            let mut f = Vec::new();
            for kappa in [int(1), rat(1, 2)] {
                let expect = d.shift_contents(&(&kappa / &ell_q));
                match m.twist(&Automorphism::Shift(kappa.clone())).classify() {
                    Ok((d2, _)) if d2 == expect => {}
                    Ok((d2, _)) => f.push(format!("{d}: t_{kappa} classified as {d2}")),
                    Err(e) => f.push(format!("{d}: t_{kappa}: {e}")),
                }
            }
            let tw = m.twist(&Automorphism::Rho);
            f.extend(report_failures(d, tw.verify_relations()));
            match tw.classify() {
                Ok((d2, _)) => {
                    if d2 != d.rotate() {
                        f.push(format!("{d}: rho classified as {d2}"));
                    }
                    match build_module(&d2).map(|m2| m2.twist(&Automorphism::Rho).classify()) {
                        Ok(Ok((d3, _))) if &d3 == d => {}
                        Ok(Ok((d3, _))) => f.push(format!("{d}: rho twice gives {d3}")),
                        Ok(Err(e)) | Err(e) => f.push(format!("{d}: rho twice: {e}")),
                    }
                }
                Err(e) => f.push(format!("{d}: rho: {e}")),
            }
            f
        })
    });
    CriterionResult::new(9, "twists", shapes.len(), fails)
}

/// Elementary symmetric polynomials in `u` and in `ζ` act by scalars.
pub fn central_character(ell: u32, max_n: usize) -> CriterionResult {
    let shapes = corpus(ell, max_n);
    let fails = collect_failures(&shapes, |d| {
        with_module(d, |m| match m.central_character() {
            Ok(_) => vec![],
            Err(e) => vec![format!("{d}: {e}")],
        })
    });
    CriterionResult::new(10, "central-character", shapes.len(), fails)
}

/// All checks for one ℓ with every size bound set to `max_n`.
pub fn run_all(ell: u32, max_n: usize) -> Vec<CriterionResult> {
    vec![
        relations(ell, max_n),
        intertwiners(ell, max_n),
        jucys_murphy(ell, max_n),
        hook_formula(ell, max_n),
        irreducibility(ell, max_n),
        roundtrip(ell, max_n),
        rejection(ell, max_n),
        tableau_lemmas(ell, max_n, max_n),
        twists(ell, max_n),
        central_character(ell, max_n),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    #[test]
    fn multipartition_counts() {
        // ℓ = 1: p(n); ℓ = 2: 2, 5, 10, 20
        let p: Vec<usize> = (1..=6).map(|n| multipartitions(1, n).len()).collect();
        assert_eq!(p, vec![1, 2, 3, 5, 7, 11]);
        let p2: Vec<usize> = (1..=4).map(|n| multipartitions(2, n).len()).collect();
        assert_eq!(p2, vec![2, 5, 10, 20]);
        assert_eq!(multipartitions(3, 1).len(), 3);
    }

    #[test]
    fn half_offsets_present() {
        let h = half_offset_corpus(1, 3);
        assert!(h.len() >= 5);
        assert!(h.iter().all(|d| d.components().iter().any(|c| !c.offset().is_zero())));
    }

    #[test]
    fn small_run_passes() {
        for r in run_all(2, 3) {
            assert!(r.pass, "{r}");
        }
    }
}
