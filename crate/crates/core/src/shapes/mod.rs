//! ℓ-skew shapes, standard Young tableaux and their statistics.
//!
//! A shape is stored as a list of connected components. Each component
//! carries its coordinate β, a content offset in `[0, 1)` and a set of cells
//! `(row, content)` with integer relative content. The box at `(row, c)` sits
//! at the point `(x, y) = (c + row, row)`; its content is `offset + c`.
//! Diagonal slides `(x, y) ↦ (x + t, y + t)` preserve contents, so each
//! component is anchored with minimum row 1.

mod enumerate;
mod json;
mod partition;
mod tableau;

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use num_traits::{Signed, Zero};

use crate::cyclo::{frac, int, Rational};
use crate::error::{Error, Result};

pub use enumerate::{connected_skew_shapes, enumerate_shapes};
pub use json::{ComponentJson, ShapeJson, TableauJson, WeightJson};
pub use partition::hook_dimension;
pub use tableau::{enumerate_syt, Tableau, Weight};

/// A component as supplied by a caller, before canonicalization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RawComponent {
    pub beta: u32,
    pub offset: Rational,
    /// `(row, relative content)` pairs.
    pub cells: Vec<(i64, i64)>,
}

impl RawComponent {
    pub fn new(beta: u32, offset: Rational, cells: Vec<(i64, i64)>) -> RawComponent {
        RawComponent {
            beta,
            offset,
            cells,
        }
    }

    /// Builds a component from `(x, y)` points (column, row).
    pub fn from_xy(beta: u32, offset: Rational, points: &[(i64, i64)]) -> RawComponent {
        let cells = points.iter().map(|&(x, y)| (y, x - y)).collect();
        RawComponent {
            beta,
            offset,
            cells,
        }
    }
}

/// A canonical connected component: min row 1, offset in `[0, 1)`, cells sorted.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Component {
    beta: u32,
    offset: Rational,
    cells: Vec<(i64, i64)>,
}

impl Component {
    pub fn beta(&self) -> u32 {
        self.beta
    }

    pub fn offset(&self) -> &Rational {
        &self.offset
    }

    /// Sorted `(row, relative content)` cells.
    pub fn cells(&self) -> &[(i64, i64)] {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// Inclusive range of relative contents.
    pub fn content_range(&self) -> (i64, i64) {
        let lo = self.cells.iter().map(|c| c.1).min().unwrap_or(0);
        let hi = self.cells.iter().map(|c| c.1).max().unwrap_or(0);
        (lo, hi)
    }

    fn canonicalize(raw: &RawComponent, index: usize) -> Result<Component> {
        if raw.cells.is_empty() {
            return Err(Error::Malformed(format!("component {index} has no cells")));
        }
        let base = frac(&raw.offset);
        let shift = (&raw.offset - &base).to_integer();
        let shift = i64::try_from(shift)
            .map_err(|_| Error::Malformed(format!("offset of component {index} too large")))?;
        let min_row = raw.cells.iter().map(|c| c.0).min().unwrap_or(1);
        let mut cells: Vec<(i64, i64)> = raw
            .cells
            .iter()
            .map(|&(r, c)| (r - min_row + 1, c + shift))
            .collect();
        cells.sort_unstable();
        if cells.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Malformed(format!("component {index} repeats a cell")));
        }
        check_skew(&cells).map_err(|detail| Error::NotSkew {
            component: index,
            detail,
        })?;
        if !is_connected(&cells) {
            return Err(Error::NotConnected { component: index });
        }
        Ok(Component {
            beta: raw.beta,
            offset: base,
            cells,
        })
    }
}

fn xy(cell: (i64, i64)) -> (i64, i64) {
    (cell.1 + cell.0, cell.0)
}

/// Skew closure of a finite point set of Z²: whenever `p ≤ q` componentwise,
/// the whole rectangle between them is present.
pub(crate) fn check_skew(cells: &[(i64, i64)]) -> std::result::Result<(), String> {
    let pts: HashSet<(i64, i64)> = cells.iter().map(|&c| xy(c)).collect();
    for &p in &pts {
        for &q in &pts {
            let (dx, dy) = (q.0 - p.0, q.1 - p.1);
            if dx < 0 || dy < 0 || (dx == 0 && dy == 0) {
                continue;
            }
            for x in p.0..=q.0 {
                for y in p.1..=q.1 {
                    if !pts.contains(&(x, y)) {
                        return Err(format!(
                            "points {p:?} and {q:?} present but {:?} missing",
                            (x, y)
                        ));
                    }
                }
            }
        }
    }
    Ok(())
}

pub(crate) fn is_connected(cells: &[(i64, i64)]) -> bool {
    let pts: HashSet<(i64, i64)> = cells.iter().map(|&c| xy(c)).collect();
    let Some(&start) = pts.iter().next() else {
        return true;
    };
    let mut seen = HashSet::from([start]);
    let mut queue = VecDeque::from([start]);
    while let Some((x, y)) = queue.pop_front() {
        for nb in [(x + 1, y), (x - 1, y), (x, y + 1), (x, y - 1)] {
            if pts.contains(&nb) && seen.insert(nb) {
                queue.push_back(nb);
            }
        }
    }
    seen.len() == pts.len()
}

/// One box of a shape, in reading order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShapeBox {
    pub component: usize,
    pub row: i64,
    /// Integer content relative to the component offset.
    pub rel_content: i64,
    /// Full content `offset + rel_content`.
    pub content: Rational,
    pub beta: u32,
}

#[derive(Debug)]
struct ShapeData {
    ell: u32,
    components: Vec<Component>,
    boxes: Vec<ShapeBox>,
    lookup: HashMap<(usize, i64, i64), usize>,
}

/// A canonical, validated ℓ-skew shape. Cheap to clone.
#[derive(Clone)]
pub struct SkewShape(Arc<ShapeData>);

impl SkewShape {
    /// Canonicalizes and validates a list of raw components.
    pub fn new(ell: u32, raw: &[RawComponent]) -> Result<SkewShape> {
        if ell == 0 {
            return Err(Error::Malformed("ell must be positive".into()));
        }
        if raw.is_empty() || raw.iter().all(|c| c.cells.is_empty()) {
            return Err(Error::EmptyShape);
        }
        let mut comps = Vec::with_capacity(raw.len());
        for (i, rc) in raw.iter().enumerate() {
            if rc.beta >= ell {
                return Err(Error::Malformed(format!(
                    "component {i} has beta {} outside 0..{ell}",
                    rc.beta
                )));
            }
            comps.push(Component::canonicalize(rc, i)?);
        }
        comps.sort();
        for (i, a) in comps.iter().enumerate() {
            for b in &comps[i + 1..] {
                if a.beta != b.beta || a.offset != b.offset {
                    continue;
                }
                let (alo, ahi) = a.content_range();
                let (blo, bhi) = b.content_range();
                let gap = if ahi < blo { blo - ahi } else if bhi < alo { alo - bhi } else { 0 };
                if gap < 2 {
                    return Err(Error::DegenerateShape(format!(
                        "components with beta {} and offset {} have contents {alo}..={ahi} and \
                         {blo}..={bhi}, closer than 2 apart",
                        a.beta, a.offset
                    )));
                }
            }
        }
        Ok(Self::from_canonical(ell, comps))
    }

    fn from_canonical(ell: u32, components: Vec<Component>) -> SkewShape {
        let mut boxes = Vec::new();
        let mut lookup = HashMap::new();
        for (ci, comp) in components.iter().enumerate() {
            for &(row, c) in &comp.cells {
                lookup.insert((ci, row, c), boxes.len());
                boxes.push(ShapeBox {
                    component: ci,
                    row,
                    rel_content: c,
                    content: &comp.offset + int(c),
                    beta: comp.beta,
                });
            }
        }
        SkewShape(Arc::new(ShapeData {
            ell,
            components,
            boxes,
            lookup,
        }))
    }

    /// Parses a single-β integral shape given as (x, y) points, splitting it into
    /// connected components.
    pub fn from_points(ell: u32, beta: u32, points: &[(i64, i64)]) -> Result<SkewShape> {
        let cells: Vec<(i64, i64)> = points.iter().map(|&(x, y)| (y, x - y)).collect();
        if let Err(detail) = check_skew(&cells) {
            return Err(Error::NotSkew {
                component: 0,
                detail,
            });
        }
        let raws = split_components(&cells)
            .into_iter()
            .map(|cs| RawComponent::new(beta, Rational::zero(), cs))
            .collect::<Vec<_>>();
        Self::new(ell, &raws)
    }

    pub fn ell(&self) -> u32 {
        self.0.ell
    }

    /// Total number of boxes.
    pub fn n(&self) -> usize {
        self.0.boxes.len()
    }

    pub fn components(&self) -> &[Component] {
        &self.0.components
    }

    /// All boxes in reading order: by component, then row, then left to right.
    pub fn boxes(&self) -> &[ShapeBox] {
        &self.0.boxes
    }

    pub fn box_at(&self, component: usize, row: i64, rel_content: i64) -> Option<usize> {
        self.0.lookup.get(&(component, row, rel_content)).copied()
    }

    /// Box immediately to the right in the same row.
    pub fn right_of(&self, b: usize) -> Option<usize> {
        let bx = &self.0.boxes[b];
        self.box_at(bx.component, bx.row, bx.rel_content + 1)
    }

    /// Box immediately below in the same column.
    pub fn below(&self, b: usize) -> Option<usize> {
        let bx = &self.0.boxes[b];
        self.box_at(bx.component, bx.row + 1, bx.rel_content - 1)
    }

    pub fn left_of(&self, b: usize) -> Option<usize> {
        let bx = &self.0.boxes[b];
        self.box_at(bx.component, bx.row, bx.rel_content - 1)
    }

    pub fn above(&self, b: usize) -> Option<usize> {
        let bx = &self.0.boxes[b];
        self.box_at(bx.component, bx.row - 1, bx.rel_content + 1)
    }

    /// The same shape with every content shifted by `delta`.
    pub fn shift_contents(&self, delta: &Rational) -> SkewShape {
        let raws: Vec<RawComponent> = self
            .components()
            .iter()
            .map(|c| RawComponent::new(c.beta, &c.offset + delta, c.cells.clone()))
            .collect();
        Self::new(self.ell(), &raws).expect("content shift preserves validity")
    }

    /// The shape rotated by 180°: contents negate, rows reverse.
    pub fn rotate(&self) -> SkewShape {
        let raws: Vec<RawComponent> = self
            .components()
            .iter()
            .map(|c| {
                RawComponent::new(
                    c.beta,
                    -c.offset.clone(),
                    c.cells.iter().map(|&(r, k)| (-r, -k)).collect(),
                )
            })
            .collect();
        Self::new(self.ell(), &raws).expect("rotation preserves validity")
    }

    /// Whether every offset is zero and each β holds at most one straight
    /// (left-justified, top-left content 0) partition diagram.
    pub fn as_multipartition(&self) -> Option<Vec<Vec<usize>>> {
        let mut parts = vec![Vec::new(); self.ell() as usize];
        for comp in self.components() {
            if !comp.offset.is_zero() || !parts[comp.beta as usize].is_empty() {
                return None;
            }
            let rows = comp.cells.iter().map(|c| c.0).max().unwrap_or(0);
            let mut lambda = Vec::new();
            for r in 1..=rows {
                let row: Vec<i64> = comp.cells.iter().filter(|c| c.0 == r).map(|c| c.1).collect();
                // row r must be contents 1-r, 2-r, …
                let len = row.len() as i64;
                if len == 0 || row.iter().min() != Some(&(1 - r)) || row.iter().max() != Some(&(len - r)) {
                    return None;
                }
                lambda.push(len as usize);
            }
            if lambda.windows(2).any(|w| w[0] < w[1]) {
                return None;
            }
            parts[comp.beta as usize] = lambda;
        }
        Some(parts)
    }

    /// Builds the shape of an ℓ-partition.
    pub fn from_multipartition(lambda: &[Vec<usize>]) -> Result<SkewShape> {
        partition::check_multipartition(lambda)?;
        let ell = lambda.len() as u32;
        let raws: Vec<RawComponent> = lambda
            .iter()
            .enumerate()
            .filter(|(_, p)| p.iter().any(|&r| r > 0))
            .map(|(beta, p)| {
                let mut cells = Vec::new();
                for (i, &len) in p.iter().enumerate() {
                    let r = i as i64 + 1;
                    for x in 1..=len as i64 {
                        cells.push((r, x - r));
                    }
                }
                RawComponent::new(beta as u32, Rational::zero(), cells)
            })
            .collect();
        Self::new(ell, &raws)
    }

    /// Whether two boxes of the same β have contents at integral distance
    /// with absolute value below 2 while lying in distinct components.
    /// Never true for a validated shape.
    pub fn has_close_cross_components(&self) -> bool {
        let bx = self.boxes();
        bx.iter().enumerate().any(|(i, a)| {
            bx[i + 1..].iter().any(|b| {
                a.component != b.component && a.beta == b.beta && {
                    let d = &a.content - &b.content;
                    d.is_integer() && d.abs() < int(2)
                }
            })
        })
    }
}

/// Splits a set of `(row, content)` cells into 4-connected pieces.
pub(crate) fn split_components(cells: &[(i64, i64)]) -> Vec<Vec<(i64, i64)>> {
    let set: BTreeSet<(i64, i64)> = cells.iter().copied().collect();
    let mut seen: HashSet<(i64, i64)> = HashSet::new();
    let mut out = Vec::new();
    for &start in &set {
        if !seen.insert(start) {
            continue;
        }
        let mut piece = vec![start];
        let mut queue = VecDeque::from([start]);
        while let Some((r, c)) = queue.pop_front() {
            for nb in [(r, c + 1), (r, c - 1), (r + 1, c - 1), (r - 1, c + 1)] {
                if set.contains(&nb) && seen.insert(nb) {
                    piece.push(nb);
                    queue.push_back(nb);
                }
            }
        }
        piece.sort_unstable();
        out.push(piece);
    }
    out
}

impl PartialEq for SkewShape {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.ell == other.0.ell && self.0.components == other.0.components)
    }
}

impl Eq for SkewShape {}

impl Hash for SkewShape {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.0.ell.hash(state);
        self.0.components.hash(state);
    }
}

impl PartialOrd for SkewShape {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for SkewShape {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.0.ell, &self.0.components).cmp(&(other.0.ell, &other.0.components))
    }
}

impl fmt::Debug for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SkewShape(ell={}", self.ell())?;
        for c in self.components() {
            write!(f, "; β{} +{} {:?}", c.beta, c.offset, c.cells)?;
        }
        write!(f, ")")
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Two shapes index isomorphic modules exactly when their canonical forms agree.
pub fn same_up_to_slides(a: &SkewShape, b: &SkewShape) -> bool {
    a == b
}
