//! Deciding whether a weight comes from a calibrated module, and rebuilding
//! its shape and tableau.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::Serialize;

use crate::cyclo::{frac, int, rational_str, to_i64, Rational};
use crate::error::{Error, Result};
use crate::modules::VerificationReport;
use crate::shapes::{enumerate_syt, ComponentJson, SkewShape, Tableau, TableauJson, Weight};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ViolationKind {
    /// `(a_i, b_i) = (a_j, b_j)` with nothing in between, i.e. `j = i + 1`.
    AdjacentEqual,
    /// No `k` strictly between with `b_k = b_i` and `a_k = a_i + ℓ`.
    MissingUpStep,
    /// No `m` strictly between with `b_m = b_i` and `a_m = a_i - ℓ`.
    MissingDownStep,
}

/// A pair `i < j` (1-based) with equal weight entries lacking the required
/// intermediate entries.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConditionViolation {
    pub kind: ViolationKind,
    pub i: usize,
    pub j: usize,
    /// The missing value of `a` for the step kinds.
    #[serde(
        with = "opt_rational",
        skip_serializing_if = "Option::is_none",
        default
    )]
    pub required: Option<Rational>,
}

mod opt_rational {
    use super::*;
    use serde::Serializer;

    pub fn serialize<S: Serializer>(r: &Option<Rational>, s: S) -> std::result::Result<S::Ok, S::Error> {
        match r {
            Some(r) => rational_str::serialize(r, s),
            None => s.serialize_none(),
        }
    }
}

impl fmt::Display for ConditionViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (&self.kind, &self.required) {
            (ViolationKind::AdjacentEqual, _) => {
                write!(f, "positions {} and {} carry the same weight", self.i, self.j)
            }
            (kind, Some(r)) => write!(
                f,
                "positions {} and {} carry the same weight but no position between has a = {r} ({kind:?})",
                self.i, self.j
            ),
            (kind, None) => write!(f, "{kind:?} at ({}, {})", self.i, self.j),
        }
    }
}

impl ConditionViolation {
    /// Re-evaluates the witness against `w`; true when the failure is reproduced.
    pub fn recheck(&self, w: &Weight, ell: u32) -> bool {
        let (i, j) = (self.i, self.j);
        if i == 0 || j > w.n() || i >= j || w.a[i - 1] != w.a[j - 1] || w.b[i - 1] != w.b[j - 1] {
            return false;
        }
        let between = |target: &Rational| {
            (i + 1..j).any(|k| w.b[k - 1] == w.b[i - 1] && &w.a[k - 1] == target)
        };
        let ell = int(ell as i64);
        match self.kind {
            ViolationKind::AdjacentEqual => j == i + 1,
            ViolationKind::MissingUpStep => {
                let t = &w.a[i - 1] + &ell;
                self.required.as_ref() == Some(&t) && !between(&t)
            }
            ViolationKind::MissingDownStep => {
                let t = &w.a[i - 1] - &ell;
                self.required.as_ref() == Some(&t) && !between(&t)
            }
        }
    }
}

/// For every `i < j` with `(a_i, b_i) = (a_j, b_j)`, requires positions
/// strictly between carrying `(a_i + ℓ, b_i)` and `(a_i - ℓ, b_i)`. Returns
/// the first failing pair in lexicographic order.
pub fn check_weight_condition(w: &Weight, ell: u32) -> std::result::Result<(), ConditionViolation> {
    let n = w.n();
    let step = int(ell as i64);
    for i in 1..=n {
        for j in i + 1..=n {
            if w.a[i - 1] != w.a[j - 1] || w.b[i - 1] != w.b[j - 1] {
                continue;
            }
            if j == i + 1 {
                return Err(ConditionViolation {
                    kind: ViolationKind::AdjacentEqual,
                    i,
                    j,
                    required: None,
                });
            }
            let between = |target: &Rational| {
                (i + 1..j).any(|k| w.b[k - 1] == w.b[i - 1] && &w.a[k - 1] == target)
            };
            for (kind, target) in [
                (ViolationKind::MissingUpStep, &w.a[i - 1] + &step),
                (ViolationKind::MissingDownStep, &w.a[i - 1] - &step),
            ] {
                if !between(&target) {
                    return Err(ConditionViolation {
                        kind,
                        i,
                        j,
                        required: Some(target),
                    });
                }
            }
        }
    }
    Ok(())
}

/// A component under construction, in `(x, y)` points with content `x - y`.
#[derive(Clone, Debug, Default)]
struct Piece {
    boxes: Vec<(i64, i64, usize)>,
}

impl Piece {
    fn contents(&self) -> (i64, i64) {
        let c = self.boxes.iter().map(|&(x, y, _)| x - y);
        (c.clone().min().unwrap(), c.max().unwrap())
    }

    fn on_diagonal(&self, c: i64) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.boxes
            .iter()
            .filter(move |&&(x, y, _)| x - y == c)
            .map(|&(x, y, _)| (x, y))
    }

    fn first_on(&self, c: i64) -> Option<(i64, i64)> {
        self.on_diagonal(c).min()
    }

    fn last_on(&self, c: i64) -> Option<(i64, i64)> {
        self.on_diagonal(c).max()
    }

    /// Skew closure and connectivity, via the shape checks on `(row, content)` cells.
    fn is_valid(&self) -> bool {
        let cells: Vec<(i64, i64)> = self.boxes.iter().map(|&(x, y, _)| (y, x - y)).collect();
        crate::shapes::check_skew(&cells).is_ok() && crate::shapes::is_connected(&cells)
    }
}

/// Places label `i` with relative content `c` into one class (fixed β and
/// fractional content). The position is forced:
///
/// * diagonal `c` occupied: one step down-right of its last box;
/// * only `c - 1` occupied: right of the first box on `c - 1`;
/// * only `c + 1` occupied: below the first box on `c + 1`;
/// * both, in different pieces: the `c + 1` piece is slid so that both
///   neighbours meet the new box, and the pieces merge;
/// * neither: a fresh piece.
fn place(pieces: &mut Vec<Piece>, c: i64, label: usize) -> bool {
    let find = |pieces: &[Piece], c: i64| pieces.iter().position(|p| p.on_diagonal(c).next().is_some());
    let at = find(pieces, c);
    let lo = find(pieces, c - 1);
    let hi = find(pieces, c + 1);
    let target = match (at, lo, hi) {
        (Some(k), _, _) => {
            let (x, y) = pieces[k].last_on(c).expect("diagonal occupied");
            pieces[k].boxes.push((x + 1, y + 1, label));
            k
        }
        (None, Some(l), Some(h)) if l != h => {
            let (xl, yl) = pieces[l].first_on(c - 1).expect("diagonal occupied");
            let (xh, _) = pieces[h].first_on(c + 1).expect("diagonal occupied");
            let t = xl + 1 - xh;
            let moved = pieces.remove(h);
            let l = if h < l { l - 1 } else { l };
            pieces[l]
                .boxes
                .extend(moved.boxes.into_iter().map(|(x, y, lab)| (x + t, y + t, lab)));
            pieces[l].boxes.push((xl + 1, yl, label));
            l
        }
        (None, Some(l), _) => {
            let (x, y) = pieces[l].first_on(c - 1).expect("diagonal occupied");
            pieces[l].boxes.push((x + 1, y, label));
            l
        }
        (None, None, Some(h)) => {
            let (x, y) = pieces[h].first_on(c + 1).expect("diagonal occupied");
            pieces[h].boxes.push((x, y + 1, label));
            h
        }
        (None, None, None) => {
            pieces.push(Piece {
                boxes: vec![(c, 0, label)],
            });
            return true;
        }
    };
    let piece = &pieces[target];
    let (nx, ny, _) = *piece.boxes.last().expect("just pushed");
    // no repeated point, and nothing weakly south-east of the newest (largest) label
    let clash = piece.boxes[..piece.boxes.len() - 1]
        .iter()
        .any(|&(x, y, _)| x >= nx && y >= ny);
    if clash || !piece.is_valid() {
        return false;
    }
    // pieces of one class stay at content distance ≥ 2
    let (tlo, thi) = piece.contents();
    pieces.iter().enumerate().all(|(k, p)| {
        k == target || {
            let (plo, phi) = p.contents();
            plo > thi + 1 || phi < tlo - 1
        }
    })
}

/// Rebuilds `(D, T)` with `weight_of(T) = w`, unique up to diagonal slides.
///
/// Labels are split into classes by `(b_i, frac(a_i / ℓ))`; boxes of different
/// classes never interact, and within a class each label has a forced
/// position (see [`place`]).
pub fn reconstruct(w: &Weight, ell: u32) -> Result<(SkewShape, Tableau)> {
    if ell == 0 {
        return Err(Error::Malformed("ell must be positive".into()));
    }
    if w.b.iter().any(|&b| b >= ell) {
        return Err(Error::Malformed(format!("weight exponents must lie in 0..{ell}")));
    }
    check_weight_condition(w, ell).map_err(Error::ConditionFailed)?;
    let ell_q = int(ell as i64);
    let mut classes: BTreeMap<(u32, Rational), Vec<Piece>> = BTreeMap::new();
    for (idx, (a, &b)) in w.a.iter().zip(&w.b).enumerate() {
        let content = a / &ell_q;
        let f = frac(&content);
        let c = to_i64(&(&content - &f))
            .ok_or_else(|| Error::Malformed(format!("weight entry {a} too large")))?;
        let pieces = classes.entry((b, f)).or_default();
        if !place(pieces, c, idx + 1) {
            return Err(Error::NoAddablePosition { step: idx + 1 });
        }
    }

    let mut components = Vec::new();
    let mut entries = Vec::new();
    for ((beta, offset), pieces) in classes {
        for piece in pieces {
            let ci = components.len() as i64;
            components.push(ComponentJson {
                beta,
                offset: offset.clone(),
                cells: piece.boxes.iter().map(|&(x, y, _)| [y, x - y]).collect(),
            });
            entries.extend(piece.boxes.iter().map(|&(x, y, l)| [y, x - y, ci, l as i64]));
        }
    }
    let t = TableauJson {
        ell,
        components,
        entries,
    }
    .to_tableau()
    .map_err(|e| match e.class() {
        crate::error::ErrorClass::Rejected => Error::NoAddablePosition { step: w.n() },
        _ => e,
    })?;
    debug_assert_eq!(&t.weight(), w);
    Ok((t.shape().clone(), t))
}

/// Isomorphism of `S^{D1}` and `S^{D2}`: equality of canonical forms.
pub fn is_isomorphic(d1: &SkewShape, d2: &SkewShape) -> bool {
    d1 == d2
}

/// For every tableau on `d`: its weight passes the condition and reconstructs
/// to exactly `(d, T)`.
pub fn classify_roundtrip(d: &SkewShape) -> VerificationReport {
    let mut report = VerificationReport::new();
    let mut seen: HashMap<(Vec<Rational>, Vec<u32>), usize> = HashMap::new();
    for (k, t) in enumerate_syt(d).into_iter().enumerate() {
        let w = t.weight();
        let name = format!("tableau {:?}", t.labels());
        if let Err(v) = check_weight_condition(&w, d.ell()) {
            report.flag(name, false, Some(v.to_string()));
            continue;
        }
        match reconstruct(&w, d.ell()) {
            Ok((d2, t2)) if &d2 == d && t2 == t => {}
            Ok((d2, _)) => report.flag(name, false, Some(format!("reconstructed {d2}"))),
            Err(e) => report.flag(name, false, Some(e.to_string())),
        }
        // distinct tableaux must have distinct weights
        if let Some(prev) = seen.insert((w.a, w.b), k) {
            report.flag(format!("tableaux {prev} and {k}"), false, Some("equal weights".into()));
        }
    }
    if report.is_empty() {
        report.flag(format!("{} tableaux", enumerate_syt(d).len()), true, None);
    }
    report
}
