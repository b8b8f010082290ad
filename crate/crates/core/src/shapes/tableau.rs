use std::collections::BTreeSet;
use std::fmt;

use crate::cyclo::{int, Rational};
use crate::error::{Error, Result};

use super::SkewShape;

/// Joint eigenvalues `(a_1..a_n, b_1..b_n)`: `u_i` acts by `a_i`, `ζ_i` by `ζ^{b_i}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Weight {
    pub a: Vec<Rational>,
    pub b: Vec<u32>,
}

impl Weight {
    /// Builds a weight, reducing each `b_i` modulo ℓ.
    pub fn new(ell: u32, a: Vec<Rational>, b: Vec<i64>) -> Result<Weight> {
        if ell == 0 {
            return Err(Error::Malformed("ell must be positive".into()));
        }
        if a.len() != b.len() {
            return Err(Error::Malformed(format!(
                "weight has {} eigenvalues a but {} exponents b",
                a.len(),
                b.len()
            )));
        }
        if a.is_empty() {
            return Err(Error::EmptyShape);
        }
        let b = b.into_iter().map(|x| x.rem_euclid(ell as i64) as u32).collect();
        Ok(Weight { a, b })
    }

    pub fn n(&self) -> usize {
        self.a.len()
    }

    /// The weight with positions `i` and `i+1` exchanged (1-based `i`).
    pub fn swapped(&self, i: usize) -> Weight {
        let mut w = self.clone();
        w.a.swap(i - 1, i);
        w.b.swap(i - 1, i);
        w
    }
}

/// A standard Young tableau: a bijection from the boxes of a shape to `1..=n`.
#[derive(Clone)]
pub struct Tableau {
    shape: SkewShape,
    /// `label_of_box[b]` is the label (1-based) in box `b`.
    label_of_box: Vec<usize>,
    /// `box_of_label[i - 1]` is the box holding label `i`.
    box_of_label: Vec<usize>,
}

impl Tableau {
    /// Builds a tableau from labels listed in reading order of the boxes.
    pub fn from_labels(shape: &SkewShape, label_of_box: Vec<usize>) -> Result<Tableau> {
        let n = shape.n();
        if label_of_box.len() != n {
            return Err(Error::Malformed(format!(
                "{} labels for a shape with {n} boxes",
                label_of_box.len()
            )));
        }
        let mut box_of_label = vec![usize::MAX; n];
        for (b, &l) in label_of_box.iter().enumerate() {
            if l == 0 || l > n || box_of_label[l - 1] != usize::MAX {
                return Err(Error::Malformed(format!("labels are not a permutation of 1..={n}")));
            }
            box_of_label[l - 1] = b;
        }
        let t = Tableau {
            shape: shape.clone(),
            label_of_box,
            box_of_label,
        };
        t.check_standard()?;
        Ok(t)
    }

    fn check_standard(&self) -> Result<()> {
        let sh = &self.shape;
        for b in 0..sh.n() {
            let l = self.label_of_box[b];
            for (next, dir) in [(sh.right_of(b), "row"), (sh.below(b), "column")] {
                if let Some(nb) = next {
                    if self.label_of_box[nb] < l {
                        return Err(Error::NotStandard(format!(
                            "label {} follows {} along a {dir}",
                            self.label_of_box[nb], l
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// The tableau numbering the boxes in reading order.
    pub fn row_reading(shape: &SkewShape) -> Tableau {
        let n = shape.n();
        Tableau {
            shape: shape.clone(),
            label_of_box: (1..=n).collect(),
            box_of_label: (0..n).collect(),
        }
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn n(&self) -> usize {
        self.label_of_box.len()
    }

    /// Labels listed by box in reading order.
    pub fn labels(&self) -> &[usize] {
        &self.label_of_box
    }

    pub fn label_of(&self, b: usize) -> usize {
        self.label_of_box[b]
    }

    /// Box holding label `i` (1-based).
    pub fn box_of(&self, i: usize) -> usize {
        self.box_of_label[i - 1]
    }

    /// Content of the box holding label `i`, offset included.
    pub fn content_of(&self, i: usize) -> &Rational {
        &self.shape.boxes()[self.box_of(i)].content
    }

    pub fn beta_of(&self, i: usize) -> u32 {
        self.shape.boxes()[self.box_of(i)].beta
    }

    /// `a_i = ℓ·ct(T⁻¹(i))`, `b_i = β(T⁻¹(i))`.
    pub fn weight(&self) -> Weight {
        let ell = int(self.shape.ell() as i64);
        let n = self.n();
        Weight {
            a: (1..=n).map(|i| &ell * self.content_of(i)).collect(),
            b: (1..=n).map(|i| self.beta_of(i)).collect(),
        }
    }

    fn row_key(&self, i: usize) -> (usize, i64) {
        let bx = &self.shape.boxes()[self.box_of(i)];
        (bx.component, bx.row)
    }

    /// Pairs `i < j` whose box of `j` lies strictly earlier than that of `i`
    /// in the (component, row) order.
    pub fn inversion_set(&self) -> BTreeSet<(usize, usize)> {
        let n = self.n();
        let mut out = BTreeSet::new();
        for i in 1..=n {
            for j in i + 1..=n {
                if self.row_key(i) > self.row_key(j) {
                    out.insert((i, j));
                }
            }
        }
        out
    }

    /// Whether `i` and `i+1` sit side by side in a row or column.
    pub fn adjacent_in_line(&self, i: usize) -> bool {
        let (b, c) = (self.box_of(i), self.box_of(i + 1));
        self.shape.right_of(b) == Some(c) || self.shape.below(b) == Some(c)
    }

    /// `s_i T`: labels `i` and `i+1` exchanged, provided the result is standard.
    pub fn apply_transposition(&self, i: usize) -> Result<Tableau> {
        let n = self.n();
        if i == 0 || i >= n {
            return Err(Error::IndexOutOfRange {
                index: i,
                max: n.saturating_sub(1),
            });
        }
        if self.adjacent_in_line(i) {
            return Err(Error::NotStandard(format!(
                "{i} and {} are adjacent in a row or column",
                i + 1
            )));
        }
        let mut t = self.clone();
        let (b, c) = (self.box_of(i), self.box_of(i + 1));
        t.label_of_box[b] = i + 1;
        t.label_of_box[c] = i;
        t.box_of_label.swap(i - 1, i);
        Ok(t)
    }

    /// Descent steps leading to the row reading tableau; each step removes one inversion.
    fn path_to_row_reading(&self) -> Vec<usize> {
        let mut t = self.clone();
        let mut path = Vec::new();
        loop {
            let n = t.n();
            let Some(i) = (1..n).find(|&i| t.row_key(i) > t.row_key(i + 1)) else {
                break;
            };
            t = t
                .apply_transposition(i)
                .expect("descent across rows is always a legal swap");
            path.push(i);
        }
        path
    }

    /// Indices `i_1..i_p` with `s_{i_p}⋯s_{i_1} T = U`, every prefix standard.
    pub fn path_to(&self, other: &Tableau) -> Result<Vec<usize>> {
        if self.shape != other.shape {
            return Err(Error::Malformed("tableaux on different shapes".into()));
        }
        if self == other {
            return Ok(Vec::new());
        }
        let mut path = self.path_to_row_reading();
        let mut back = other.path_to_row_reading();
        back.reverse();
        path.extend(back);
        Ok(path)
    }
}

impl PartialEq for Tableau {
    fn eq(&self, other: &Self) -> bool {
        self.shape == other.shape && self.label_of_box == other.label_of_box
    }
}

impl Eq for Tableau {}

impl std::hash::Hash for Tableau {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.shape.hash(state);
        self.label_of_box.hash(state);
    }
}

impl fmt::Debug for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tableau({:?} labels {:?})", self.shape, self.label_of_box)
    }
}

/// All standard Young tableaux on `shape`, in lexicographic order of the
/// sequence of boxes chosen for labels `1, 2, …`.
pub fn enumerate_syt(shape: &SkewShape) -> Vec<Tableau> {
    let n = shape.n();
    let preds: Vec<Vec<usize>> = (0..n)
        .map(|b| shape.left_of(b).into_iter().chain(shape.above(b)).collect())
        .collect();
    let mut out = Vec::new();
    let mut labels = vec![0usize; n];
    fn rec(
        shape: &SkewShape,
        preds: &[Vec<usize>],
        labels: &mut [usize],
        next: usize,
        out: &mut Vec<Tableau>,
    ) {
        let n = labels.len();
        if next > n {
            let mut box_of_label = vec![0; n];
            for (b, &l) in labels.iter().enumerate() {
                box_of_label[l - 1] = b;
            }
            out.push(Tableau {
                shape: shape.clone(),
                label_of_box: labels.to_vec(),
                box_of_label,
            });
            return;
        }
        for b in 0..n {
            if labels[b] == 0 && preds[b].iter().all(|&p| labels[p] != 0) {
                labels[b] = next;
                rec(shape, preds, labels, next + 1, out);
                labels[b] = 0;
            }
        }
    }
    rec(shape, &preds, &mut labels, 1, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclo::rat;
    use crate::shapes::RawComponent;
    use num_traits::Zero;

    fn lambda21() -> SkewShape {
        SkewShape::from_multipartition(&[vec![2, 1]]).unwrap()
    }

    /// Standardness by brute force over all n! fillings, independent of `enumerate_syt`.
    fn brute_force_count(shape: &SkewShape) -> usize {
        let n = shape.n();
        let mut count = 0;
        let mut perm: Vec<usize> = (1..=n).collect();
        heap_permutations(&mut perm, n, &mut |p| {
            if Tableau::from_labels(shape, p.to_vec()).is_ok() {
                count += 1;
            }
        });
        count
    }

    fn heap_permutations(v: &mut Vec<usize>, k: usize, f: &mut dyn FnMut(&[usize])) {
        if k <= 1 {
            f(v);
            return;
        }
        for i in 0..k {
            heap_permutations(v, k - 1, f);
            if k % 2 == 0 {
                v.swap(i, k - 1);
            } else {
                v.swap(0, k - 1);
            }
        }
    }

    #[test]
    fn syt_counts_match_brute_force() {
        assert_eq!(enumerate_syt(&lambda21()).len(), 2);
        assert_eq!(brute_force_count(&lambda21()), 2);
        let two_one = SkewShape::from_multipartition(&[vec![2], vec![1]]).unwrap();
        assert_eq!(enumerate_syt(&two_one).len(), 3);
        assert_eq!(brute_force_count(&two_one), 3);
        for n in 1..=5 {
            let row = SkewShape::from_multipartition(&[vec![n]]).unwrap();
            assert_eq!(enumerate_syt(&row).len(), 1);
        }
        let skew = SkewShape::from_points(1, 0, &[(2, 1), (3, 1), (1, 2), (2, 2)]).unwrap();
        assert_eq!(enumerate_syt(&skew).len(), brute_force_count(&skew));
    }

    #[test]
    fn row_reading_examples() {
        let d = lambda21();
        let t = Tableau::row_reading(&d);
        assert_eq!(t.labels(), &[1, 2, 3]);
        assert!(t.inversion_set().is_empty());
        assert_eq!(t.weight().a, vec![rat(0, 1), rat(1, 1), rat(-1, 1)]);
        assert_eq!(t.weight().b, vec![0, 0, 0]);

        let two = SkewShape::from_multipartition(&[vec![1], vec![1]]).unwrap();
        let t = Tableau::row_reading(&two);
        assert_eq!(t.beta_of(1), 0);
        assert_eq!(t.beta_of(2), 1);
        assert_eq!(t.weight().a, vec![Rational::zero(), Rational::zero()]);
        assert_eq!(t.weight().b, vec![0, 1]);
    }

    #[test]
    fn inversion_set_example() {
        // 1 3 / 2
        let t = Tableau::from_labels(&lambda21(), vec![1, 3, 2]).unwrap();
        assert_eq!(t.inversion_set(), BTreeSet::from([(2, 3)]));
    }

    #[test]
    fn transposition_examples() {
        let d = lambda21();
        let t = Tableau::row_reading(&d);
        let u = t.apply_transposition(2).unwrap();
        assert_eq!(u.labels(), &[1, 3, 2]);
        assert!(matches!(t.apply_transposition(1), Err(Error::NotStandard(_))));
        assert_eq!(u.apply_transposition(2).unwrap(), t);
        assert!(matches!(t.apply_transposition(3), Err(Error::IndexOutOfRange { .. })));
        assert_eq!(t.path_to(&u).unwrap(), vec![2]);
        assert_eq!(t.path_to(&t).unwrap(), Vec::<usize>::new());
    }

    #[test]
    fn from_labels_rejects_nonstandard() {
        assert!(matches!(
            Tableau::from_labels(&lambda21(), vec![2, 1, 3]),
            Err(Error::NotStandard(_))
        ));
        assert!(matches!(
            Tableau::from_labels(&lambda21(), vec![1, 1, 3]),
            Err(Error::Malformed(_))
        ));
    }

    #[test]
    fn offset_contents_enter_weight() {
        let a = RawComponent::new(0, Rational::zero(), vec![(1, 0)]);
        let b = RawComponent::new(0, rat(1, 2), vec![(1, 0)]);
        let d = SkewShape::new(2, &[a, b]).unwrap();
        let t = Tableau::row_reading(&d);
        assert_eq!(t.weight().a, vec![Rational::zero(), rat(1, 1)]);
    }
}
