//! Partitions, skew shapes, tuples of skew shapes and their triples.
//!
//! Rows are numbered from 1 at the bottom (French convention), columns from 1
//! at the left. Partitions keep their trailing zeros: `(2,0)` and `(2)` are
//! different objects because the number of parts shifts the lattice boundary.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of nonnegative integers of fixed length.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotAPartition(parts));
        }
        Ok(Partition(parts))
    }

    /// All-zero partition with `len` parts.
    pub fn zeros(len: usize) -> Self {
        Partition(vec![0; len])
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Number of parts, zeros included.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Part `m` (1-based); zero past the end.
    pub fn part(&self, m: usize) -> u32 {
        self.0.get(m.wrapping_sub(1)).copied().unwrap_or(0)
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn contains(&self, other: &Partition) -> bool {
        self.len() == other.len() && self.0.iter().zip(&other.0).all(|(a, b)| a >= b)
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;
    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Vec<u32> {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

#[derive(Deserialize)]
struct SkewRepr {
    outer: Partition,
    #[serde(default)]
    inner: Option<Partition>,
}

/// A skew shape `outer / inner` with `inner ⊆ outer` and equal part counts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "SkewRepr")]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl TryFrom<SkewRepr> for SkewShape {
    type Error = Error;
    fn try_from(r: SkewRepr) -> Result<Self> {
        let inner = r.inner.unwrap_or_else(|| Partition::zeros(r.outer.len()));
        SkewShape::new(r.outer, inner)
    }
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::NotContained { outer: outer.0, inner: inner.0 });
        }
        Ok(SkewShape { outer, inner })
    }

    /// Convenience constructor from raw part slices.
    pub fn from_parts(outer: &[u32], inner: &[u32]) -> Result<Self> {
        SkewShape::new(Partition::new(outer.to_vec())?, Partition::new(inner.to_vec())?)
    }

    /// A straight shape `outer / 0`.
    pub fn straight(outer: &[u32]) -> Result<Self> {
        let outer = Partition::new(outer.to_vec())?;
        let inner = Partition::zeros(outer.len());
        Ok(SkewShape { outer, inner })
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn rows(&self) -> usize {
        self.outer.len()
    }

    /// Number of cells.
    pub fn size(&self) -> u32 {
        self.outer.size() - self.inner.size()
    }

    /// True iff (row, col) is a cell of the skew shape (1-based, may be out of range).
    pub fn has_cell(&self, row: usize, col: i64) -> bool {
        row >= 1 && row <= self.rows() && col > self.inner.part(row) as i64 && col <= self.outer.part(row) as i64
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inner.0.iter().all(|&p| p == 0) {
            write!(f, "{}", self.outer)
        } else {
            write!(f, "{}/{}", self.outer, self.inner)
        }
    }
}

/// An ordered tuple of skew shapes, `k >= 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "TupleRepr", into = "TupleRepr")]
pub struct ShapeTuple {
    shapes: Vec<SkewShape>,
}

#[derive(Serialize, Deserialize)]
struct TupleRepr {
    shapes: Vec<SkewShape>,
}

impl TryFrom<TupleRepr> for ShapeTuple {
    type Error = Error;
    fn try_from(r: TupleRepr) -> Result<Self> {
        ShapeTuple::new(r.shapes)
    }
}

impl From<ShapeTuple> for TupleRepr {
    fn from(t: ShapeTuple) -> TupleRepr {
        TupleRepr { shapes: t.shapes }
    }
}

/// A cell of shape `shape` (1-based) at `(row, col)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Cell {
    pub shape: usize,
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn content(&self) -> i64 {
        self.col as i64 - self.row as i64
    }
}

/// One end (`u` or `w`) of a triple. Columns may be 0 for `u`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Slot {
    pub shape: usize,
    pub row: usize,
    pub col: i64,
    /// Outside the skew shape: `u` at the end of an inner row, or `w` just
    /// right of an outer row.
    pub is_virtual: bool,
}

/// `v` below-left of `w` on one content line, `u` immediately left of `w`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Triple {
    pub u: Slot,
    pub v: Cell,
    pub w: Slot,
}

impl ShapeTuple {
    pub fn new(shapes: Vec<SkewShape>) -> Result<Self> {
        if shapes.is_empty() {
            return Err(Error::EmptyTuple);
        }
        Ok(ShapeTuple { shapes })
    }

    /// Tuple of straight shapes.
    pub fn straight(parts: &[&[u32]]) -> Result<Self> {
        ShapeTuple::new(parts.iter().map(|p| SkewShape::straight(p)).collect::<Result<_>>()?)
    }

    pub fn shapes(&self) -> &[SkewShape] {
        &self.shapes
    }

    pub fn k(&self) -> usize {
        self.shapes.len()
    }

    pub fn shape(&self, index: usize) -> &SkewShape {
        &self.shapes[index - 1]
    }

    pub fn outers(&self) -> Vec<&Partition> {
        self.shapes.iter().map(|s| &s.outer).collect()
    }

    pub fn inners(&self) -> Vec<&Partition> {
        self.shapes.iter().map(|s| &s.inner).collect()
    }

    /// All cells in (shape, row, column) order.
    pub fn cells(&self) -> Vec<Cell> {
        let mut out = Vec::new();
        for (si, s) in self.shapes.iter().enumerate() {
            for row in 1..=s.rows() {
                for col in s.inner.part(row) + 1..=s.outer.part(row) {
                    out.push(Cell { shape: si + 1, row, col: col as usize });
                }
            }
        }
        out
    }

    /// Every triple, ordered by `v` then by the shape and row of `w`.
    pub fn triples(&self) -> Vec<Triple> {
        let mut out = Vec::new();
        for v in self.cells() {
            let c = v.content();
            for (sj, s) in self.shapes.iter().enumerate().skip(v.shape) {
                for row in 1..=s.rows() {
                    let (lo, hi) = (s.inner.part(row) as i64, s.outer.part(row) as i64);
                    let u_col = c + row as i64 - 1;
                    if u_col < lo || u_col > hi {
                        continue;
                    }
                    let shape = sj + 1;
                    out.push(Triple {
                        u: Slot { shape, row, col: u_col, is_virtual: u_col == lo },
                        v,
                        w: Slot { shape, row, col: u_col + 1, is_virtual: u_col + 1 == hi + 1 },
                    });
                }
            }
        }
        out
    }

    pub fn count_triples(&self) -> usize {
        self.triples().len()
    }

    /// Exchanges shapes `i` and `i+1` (1-based).
    pub fn swap_adjacent(&self, i: usize) -> Result<ShapeTuple> {
        if i == 0 || i >= self.k() {
            return Err(Error::IndexOutOfRange { index: i, bound: self.k() });
        }
        let mut shapes = self.shapes.clone();
        shapes.swap(i - 1, i);
        Ok(ShapeTuple { shapes })
    }

    /// Requires `k == 2`.
    pub fn ensure_pair(&self) -> Result<()> {
        if self.k() != 2 {
            return Err(Error::NotTwoShapes(self.k()));
        }
        Ok(())
    }
}

impl fmt::Display for ShapeTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, s) in self.shapes.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{s}")?;
        }
        write!(f, ")")
    }
}

/// Parses the compact notation `((8,7,6),(4,3,2)/(2,0,0))`.
impl FromStr for ShapeTuple {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Precondition(format!("cannot parse shape tuple {s:?}"));
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let body = compact.strip_prefix('(').and_then(|b| b.strip_suffix(')')).ok_or_else(bad)?;
        let mut shapes = Vec::new();
        let mut rest = body;
        while !rest.is_empty() {
            let (outer, after) = take_group(rest).ok_or_else(bad)?;
            rest = after;
            let inner = if let Some(after_slash) = rest.strip_prefix('/') {
                let (inner, after) = take_group(after_slash).ok_or_else(bad)?;
                rest = after;
                Some(inner)
            } else {
                None
            };
            let shape = match inner {
                Some(inner) => SkewShape::from_parts(&outer, &inner)?,
                None => SkewShape::straight(&outer)?,
            };
            shapes.push(shape);
            rest = rest.strip_prefix(',').unwrap_or(rest);
        }
        ShapeTuple::new(shapes)
    }
}

fn take_group(s: &str) -> Option<(Vec<u32>, &str)> {
    let s = s.strip_prefix('(')?;
    let end = s.find(')')?;
    let inside = &s[..end];
    let parts = if inside.is_empty() {
        Vec::new()
    } else {
        inside.split(',').map(|p| p.parse().ok()).collect::<Option<Vec<u32>>>()?
    };
    Some((parts, &s[end + 1..]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn tup(s: &str) -> ShapeTuple {
        s.parse().unwrap()
    }

    #[test]
    fn partition_validation() {
        assert!(Partition::new(vec![3, 1, 1, 0]).is_ok());
        assert!(matches!(Partition::new(vec![1, 2]), Err(Error::NotAPartition(_))));
        assert!(SkewShape::from_parts(&[2, 1], &[2, 2]).is_err());
        assert!(SkewShape::from_parts(&[2, 1], &[1]).is_err());
        assert!(matches!(ShapeTuple::new(vec![]), Err(Error::EmptyTuple)));
    }

    #[test]
    fn parse_and_display_round_trip() {
        let t = tup("((8,7,6),(4,3,2)/(2,0,0))");
        assert_eq!(t.k(), 2);
        assert_eq!(t.shape(2).inner().parts(), &[2, 0, 0]);
        assert_eq!(t.to_string(), "((8,7,6),(4,3,2)/(2,0,0))");
        assert_eq!(tup(&t.to_string()), t);
        assert!("((1,2))".parse::<ShapeTuple>().is_err());
        assert!("(1)".parse::<ShapeTuple>().is_err());
    }

    #[test]
    fn json_inner_defaults_to_zeros() {
        let t: ShapeTuple = serde_json::from_str(r#"{"shapes":[{"outer":[2,1]},{"outer":[1],"inner":[1]}]}"#).unwrap();
        assert_eq!(t, tup("((2,1),(1)/(1))"));
        assert_eq!(t.shape(1).inner().parts(), &[0, 0]);
        let back: ShapeTuple = serde_json::from_str(&serde_json::to_string(&t).unwrap()).unwrap();
        assert_eq!(back, t);
        assert!(serde_json::from_str::<ShapeTuple>(r#"{"shapes":[{"outer":[1,2]}]}"#).is_err());
        assert!(serde_json::from_str::<ShapeTuple>(r#"{"shapes":[]}"#).is_err());
    }

    #[test]
    fn cells_examples() {
        assert_eq!(tup("((1))").cells(), vec![Cell { shape: 1, row: 1, col: 1 }]);
        let c = tup("((2,2)/(1,0))").cells();
        let rc: Vec<_> = c.iter().map(|c| (c.row, c.col)).collect();
        assert_eq!(rc, vec![(1, 2), (2, 1), (2, 2)]);
        assert!(tup("((2,2)/(2,2))").cells().is_empty());
    }

    #[test]
    fn triples_single_box_pair() {
        assert!(tup("((1))").triples().is_empty());
        let t = tup("((1),(1))").triples();
        assert_eq!(t.len(), 1);
        let tr = t[0];
        assert_eq!(tr.v, Cell { shape: 1, row: 1, col: 1 });
        assert_eq!((tr.w.shape, tr.w.row, tr.w.col, tr.w.is_virtual), (2, 1, 1, false));
        assert!(tr.u.is_virtual);
        assert_eq!(tr.u.col, 0);
    }

    #[test]
    fn triples_of_the_small_skew_example() {
        let t = tup("((2,2)/(1,0),(1))").triples();
        // v = (1,2) with u the box of the second shape and w virtual is the
        // highlighted one; v = (2,2) pairs a virtual u with the real w.
        assert_eq!(t.len(), 2);
        let highlighted = t.iter().find(|tr| tr.v == Cell { shape: 1, row: 1, col: 2 }).unwrap();
        assert!(!highlighted.u.is_virtual && highlighted.w.is_virtual);
        assert_eq!((highlighted.u.shape, highlighted.u.row, highlighted.u.col), (2, 1, 1));
        let other = t.iter().find(|tr| tr.v == Cell { shape: 1, row: 2, col: 2 }).unwrap();
        assert!(other.u.is_virtual && !other.w.is_virtual);
    }

    #[test]
    fn swap_adjacent_examples() {
        let t = tup("((8,7,6),(4,3,2)/(2,0,0))");
        assert_eq!(t.swap_adjacent(1).unwrap(), tup("((4,3,2)/(2,0,0),(8,7,6))"));
        assert_eq!(t.swap_adjacent(1).unwrap().swap_adjacent(1).unwrap(), t);
        assert!(matches!(t.swap_adjacent(2), Err(Error::IndexOutOfRange { .. })));
        assert!(t.swap_adjacent(0).is_err());
    }

    /// Scans a window of positions for (u, v, w) and applies the geometric
    /// predicate directly.
    fn scan_triples(t: &ShapeTuple) -> Vec<Triple> {
        let max_col = t.shapes().iter().map(|s| s.outer().part(1) as i64).max().unwrap_or(0) + 2;
        let mut out = Vec::new();
        for v in t.cells() {
            for j in v.shape + 1..=t.k() {
                let s = t.shape(j);
                for row in 1..=s.rows() {
                    for wc in 0..=max_col {
                        let uc = wc - 1;
                        let w_content = wc - row as i64;
                        if w_content != v.content() {
                            continue;
                        }
                        let lo = s.inner().part(row) as i64;
                        let hi = s.outer().part(row) as i64;
                        if uc < lo || wc > hi + 1 {
                            continue;
                        }
                        let u_in = s.has_cell(row, uc);
                        let w_in = s.has_cell(row, wc);
                        // outside cells must sit at the row ends
                        if (!u_in && uc != lo) || (!w_in && wc != hi + 1) {
                            continue;
                        }
                        out.push(Triple {
                            u: Slot { shape: j, row, col: uc, is_virtual: !u_in },
                            v,
                            w: Slot { shape: j, row, col: wc, is_virtual: !w_in },
                        });
                    }
                }
            }
        }
        out.sort();
        out
    }

    fn small_skew() -> impl Strategy<Value = SkewShape> {
        (1usize..=3)
            .prop_flat_map(|len| (prop::collection::vec(0u32..=4, len), prop::collection::vec(0u32..=4, len)))
            .prop_map(|(mut a, mut b)| {
                a.sort_unstable_by(|x, y| y.cmp(x));
                b.sort_unstable_by(|x, y| y.cmp(x));
                let inner: Vec<u32> = a.iter().zip(&b).map(|(x, y)| (*x).min(*y)).collect();
                SkewShape::from_parts(&a, &inner).unwrap()
            })
    }

    proptest! {
        #[test]
        fn triples_agree_with_exhaustive_scan(shapes in prop::collection::vec(small_skew(), 1..=3)) {
            let t = ShapeTuple::new(shapes).unwrap();
            let mut got = t.triples();
            got.sort();
            prop_assert_eq!(got, scan_triples(&t));
        }

        #[test]
        fn every_triple_satisfies_the_predicate(shapes in prop::collection::vec(small_skew(), 2..=3)) {
            let t = ShapeTuple::new(shapes).unwrap();
            for tr in t.triples() {
                prop_assert!(tr.w.shape > tr.v.shape);
                prop_assert_eq!(tr.w.col - tr.w.row as i64, tr.v.content());
                prop_assert_eq!(tr.u.row, tr.w.row);
                prop_assert_eq!(tr.u.col + 1, tr.w.col);
                let s = t.shape(tr.w.shape);
                prop_assert_eq!(!tr.u.is_virtual, s.has_cell(tr.u.row, tr.u.col));
                prop_assert_eq!(!tr.w.is_virtual, s.has_cell(tr.w.row, tr.w.col));
            }
        }
    }
}
