//! Plain JSON forms of shapes, tableaux and weights.

use serde::{Deserialize, Serialize};

use crate::cyclo::{rational_str, rational_vec_str, to_i64, Rational};
use crate::error::{Error, Result};

use super::{RawComponent, SkewShape, Tableau, Weight};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentJson {
    pub beta: u32,
    #[serde(with = "rational_str")]
    pub offset: Rational,
    /// `[row, relative content]` pairs.
    pub cells: Vec<[i64; 2]>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShapeJson {
    pub ell: u32,
    pub components: Vec<ComponentJson>,
}

/// A shape plus `[row, relative content, component index, label]` entries.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableauJson {
    pub ell: u32,
    pub components: Vec<ComponentJson>,
    pub entries: Vec<[i64; 4]>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ell: Option<u32>,
    #[serde(with = "rational_vec_str")]
    pub a: Vec<Rational>,
    pub b: Vec<i64>,
}

impl From<&SkewShape> for ShapeJson {
    fn from(d: &SkewShape) -> ShapeJson {
        ShapeJson {
            ell: d.ell(),
            components: d
                .components()
                .iter()
                .map(|c| ComponentJson {
                    beta: c.beta(),
                    offset: c.offset().clone(),
                    cells: c.cells().iter().map(|&(r, k)| [r, k]).collect(),
                })
                .collect(),
        }
    }
}

impl ShapeJson {
    pub fn to_shape(&self) -> Result<SkewShape> {
        SkewShape::new(self.ell, &raw_components(&self.components))
    }
}

fn raw_components(comps: &[ComponentJson]) -> Vec<RawComponent> {
    comps
        .iter()
        .map(|c| {
            RawComponent::new(
                c.beta,
                c.offset.clone(),
                c.cells.iter().map(|&[r, k]| (r, k)).collect(),
            )
        })
        .collect()
}

impl From<&Tableau> for TableauJson {
    fn from(t: &Tableau) -> TableauJson {
        let shape = ShapeJson::from(t.shape());
        let entries = t
            .shape()
            .boxes()
            .iter()
            .enumerate()
            .map(|(b, bx)| [bx.row, bx.rel_content, bx.component as i64, t.label_of(b) as i64])
            .collect();
        TableauJson {
            ell: shape.ell,
            components: shape.components,
            entries,
        }
    }
}

impl TableauJson {
    /// Rebuilds the tableau. Entries refer to cells of the listed components
    /// exactly as written; the result is re-canonicalized.
    pub fn to_tableau(&self) -> Result<Tableau> {
        let raws = raw_components(&self.components);
        let shape = SkewShape::new(self.ell, &raws)?;
        if self.entries.len() != shape.n() {
            return Err(Error::Malformed(format!(
                "{} entries for a shape with {} boxes",
                self.entries.len(),
                shape.n()
            )));
        }
        // locate each written cell in the canonical shape: same component data,
        // after the same min-row and offset normalization
        let single: Vec<SkewShape> = raws
            .iter()
            .map(|r| SkewShape::new(self.ell, std::slice::from_ref(r)))
            .collect::<Result<_>>()?;
        let mut labels = vec![0usize; shape.n()];
        for &[r, k, ci, label] in &self.entries {
            let ci = usize::try_from(ci)
                .ok()
                .filter(|&ci| ci < raws.len())
                .ok_or_else(|| Error::Malformed(format!("component index {ci} out of range")))?;
            let raw = &raws[ci];
            if !raw.cells.contains(&(r, k)) {
                return Err(Error::Malformed(format!(
                    "entry ({r}, {k}) is not a cell of component {ci}"
                )));
            }
            let min_row = raw.cells.iter().map(|c| c.0).min().unwrap_or(1);
            let canon = &single[ci].components()[0];
            let shift = to_i64(&(&raw.offset - canon.offset()))
                .ok_or_else(|| Error::Malformed("offset too large".into()))?;
            let cell = (r - min_row + 1, k + shift);
            let comp = shape
                .components()
                .iter()
                .position(|c| c == canon)
                .expect("component survives canonicalization");
            let b = shape
                .box_at(comp, cell.0, cell.1)
                .expect("cell survives canonicalization");
            let label = usize::try_from(label)
                .map_err(|_| Error::Malformed(format!("bad label {label}")))?;
            if labels[b] != 0 {
                return Err(Error::Malformed(format!("cell ({r}, {k}) labelled twice")));
            }
            labels[b] = label;
        }
        Tableau::from_labels(&shape, labels)
    }
}

impl From<&Weight> for WeightJson {
    fn from(w: &Weight) -> WeightJson {
        WeightJson {
            ell: None,
            a: w.a.clone(),
            b: w.b.iter().map(|&x| x as i64).collect(),
        }
    }
}

impl WeightJson {
    /// Resolves ℓ from the file and an optional external value; they must agree.
    pub fn to_weight(&self, ell: Option<u32>) -> Result<(u32, Weight)> {
        let ell = match (self.ell, ell) {
            (Some(a), Some(b)) if a != b => {
                return Err(Error::Malformed(format!("weight file says ell = {a}, caller says {b}")))
            }
            (Some(a), _) | (None, Some(a)) => a,
            (None, None) => return Err(Error::Malformed("ell not given".into())),
        };
        Ok((ell, Weight::new(ell, self.a.clone(), self.b.clone())?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclo::rat;
    use crate::shapes::enumerate_syt;

    #[test]
    fn shape_roundtrip() {
        let d = SkewShape::from_multipartition(&[vec![2, 1], vec![1]]).unwrap();
        let j = ShapeJson::from(&d);
        let text = serde_json::to_string(&j).unwrap();
        let back: ShapeJson = serde_json::from_str(&text).unwrap();
        assert_eq!(back.to_shape().unwrap(), d);
        assert_eq!(serde_json::to_string(&ShapeJson::from(&back.to_shape().unwrap())).unwrap(), text);
    }

    #[test]
    fn tableau_roundtrip() {
        let d = SkewShape::from_multipartition(&[vec![2, 1], vec![1]]).unwrap();
        for t in enumerate_syt(&d) {
            let j = TableauJson::from(&t);
            let text = serde_json::to_string(&j).unwrap();
            let back: TableauJson = serde_json::from_str(&text).unwrap();
            assert_eq!(back.to_tableau().unwrap(), t);
        }
    }

    #[test]
    fn tableau_from_slid_cells() {
        // (2,1) written with rows 3..4 and an integer offset of 1
        let j: TableauJson = serde_json::from_str(
            r#"{"ell":1,"components":[{"beta":0,"offset":"1","cells":[[3,-1],[3,0],[4,-2]]}],
                "entries":[[3,-1,0,1],[3,0,0,3],[4,-2,0,2]]}"#,
        )
        .unwrap();
        let t = j.to_tableau().unwrap();
        assert_eq!(t.labels(), &[1, 3, 2]);
    }

    #[test]
    fn weight_parsing() {
        let j: WeightJson = serde_json::from_str(r#"{"a":["0","1/2","-1"],"b":[0,3,-1]}"#).unwrap();
        let (ell, w) = j.to_weight(Some(2)).unwrap();
        assert_eq!(ell, 2);
        assert_eq!(w.a[1], rat(1, 2));
        assert_eq!(w.b, vec![0, 1, 1]);
        assert!(j.to_weight(None).is_err());
        let j: WeightJson = serde_json::from_str(r#"{"ell":3,"a":["0"],"b":[0]}"#).unwrap();
        assert!(matches!(j.to_weight(Some(2)), Err(Error::Malformed(_))));
        assert!(serde_json::from_str::<WeightJson>(r#"{"a":["x"],"b":[0]}"#).is_err());
    }
}
