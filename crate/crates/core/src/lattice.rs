//! The colored vertex model: boundary data, face weights, configurations and
//! the partition function.
//!
//! Grid conventions: columns are indexed `0..cols` left to right and carry the
//! labels `r..=s`; face rows are indexed `0..n` bottom to top, face row `h`
//! carrying the variable `x_{h+1}`. Vertical edges live on levels `0..=n`
//! (level 0 is the bottom boundary), horizontal edges on positions
//! `0..=cols` of each row (position `c` is the left edge of column `c`).

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use serde::ser::SerializeSeq;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{invariant, Error, Result};
use crate::poly::{Monomial, Polynomial};
use crate::shapes::{Partition, ShapeTuple};
use crate::tableaux::Filling;

/// Largest color count an edge bitmask can hold.
pub const MAX_COLORS: usize = 8;

/// The set of colors crossing one edge; bit `i` is color `i + 1`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeState(pub u8);

impl EdgeState {
    pub const EMPTY: EdgeState = EdgeState(0);

    pub fn single(color: usize) -> Self {
        EdgeState(1 << (color - 1))
    }

    pub fn has(self, color: usize) -> bool {
        self.0 & (1 << (color - 1)) != 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> u32 {
        self.0.count_ones()
    }

    /// Colors present, ascending, 1-based.
    pub fn colors(self) -> impl Iterator<Item = usize> {
        (0..8).filter(move |b| self.0 & (1 << b) != 0).map(|b| b + 1)
    }

    fn union(self, o: EdgeState) -> EdgeState {
        EdgeState(self.0 | o.0)
    }
}

impl fmt::Display for EdgeState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, c) in self.colors().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "}}")
    }
}

impl Serialize for EdgeState {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.len() as usize))?;
        for c in self.colors() {
            seq.serialize_element(&c)?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for EdgeState {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let colors = Vec::<usize>::deserialize(deserializer)?;
        let mut bits = 0u8;
        for c in colors {
            if c == 0 || c > MAX_COLORS {
                return Err(serde::de::Error::custom(format!("color {c} out of range")));
            }
            bits |= 1 << (c - 1);
        }
        Ok(EdgeState(bits))
    }
}

/// Bottom `i`, left `j`, top `k`, right `l`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FaceState {
    #[serde(rename = "I")]
    pub i: EdgeState,
    #[serde(rename = "J")]
    pub j: EdgeState,
    #[serde(rename = "K")]
    pub k: EdgeState,
    #[serde(rename = "L")]
    pub l: EdgeState,
}

impl FaceState {
    pub fn new(i: EdgeState, j: EdgeState, k: EdgeState, l: EdgeState) -> Self {
        FaceState { i, j, k, l }
    }

    pub fn is_valid(&self) -> bool {
        self.i.0 & self.j.0 == 0 && self.k.0 & self.l.0 == 0 && (self.i.0 | self.j.0) == (self.k.0 | self.l.0)
    }

    /// Colors present in the face.
    pub fn present(&self) -> EdgeState {
        self.i.union(self.j)
    }

    /// `t`-exponent: for each color leaving right, the number of larger colors present.
    pub fn t_exp(&self) -> i64 {
        let present = self.present().0 as u32;
        self.l.colors().map(|c| (present >> c).count_ones() as i64).sum()
    }
}

/// `x^{|L|} t^{...}` for a face in row variable `x` (1-based) over `n` letters.
pub fn face_weight(face: &FaceState, x: usize, n: usize) -> Result<Polynomial> {
    if !face.is_valid() {
        return Err(Error::InvalidFace(format!("I={} J={} K={} L={}", face.i, face.j, face.k, face.l)));
    }
    if x == 0 || x > n {
        return Err(Error::IndexOutOfRange { index: x, bound: n });
    }
    let mut e = vec![0; n];
    e[x - 1] = face.l.len();
    Ok(Polynomial::monomial(n, face.t_exp(), e, 1))
}

/// `μ(i)`: color `j` is present iff `i = μ^{(j)}_m - m + 1` for some `m`.
pub fn boundary_vector(partitions: &[&Partition], i: i64) -> EdgeState {
    let mut bits = 0u8;
    for (j, p) in partitions.iter().enumerate() {
        if (1..=p.len()).any(|m| p.part(m) as i64 - m as i64 + 1 == i) {
            bits |= 1 << j;
        }
    }
    EdgeState(bits)
}

fn positions(p: &Partition) -> impl Iterator<Item = i64> + '_ {
    (1..=p.len()).map(|m| p.part(m) as i64 - m as i64 + 1)
}

/// `(r, s)`: leftmost nonempty bottom column and rightmost nonempty top column.
pub fn column_range(tuple: &ShapeTuple) -> Result<(i64, i64)> {
    let r = tuple.inners().into_iter().flat_map(positions).min().ok_or(Error::EmptyBoundary)?;
    let s = tuple.outers().into_iter().flat_map(positions).max().ok_or(Error::EmptyBoundary)?;
    Ok((r, s))
}

/// Boundary rows of the lattice for a tuple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Boundary {
    pub k: usize,
    /// Label of column 0.
    pub r: i64,
    pub top: Vec<EdgeState>,
    pub bottom: Vec<EdgeState>,
}

impl Boundary {
    pub fn of(tuple: &ShapeTuple) -> Result<Self> {
        if tuple.k() > MAX_COLORS {
            return Err(Error::Precondition(format!("at most {MAX_COLORS} shapes supported")));
        }
        let (r, s) = column_range(tuple)?;
        let outers = tuple.outers();
        let inners = tuple.inners();
        Ok(Boundary {
            k: tuple.k(),
            r,
            top: (r..=s).map(|i| boundary_vector(&outers, i)).collect(),
            bottom: (r..=s).map(|i| boundary_vector(&inners, i)).collect(),
        })
    }

    pub fn cols(&self) -> usize {
        self.top.len()
    }
}

/// A complete path configuration.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LatticeConfig {
    pub k: usize,
    pub rows: usize,
    pub cols: usize,
    /// Label of column 0.
    pub r: i64,
    /// `vertical[level][col]`, levels `0..=rows`.
    pub vertical: Vec<Vec<EdgeState>>,
    /// `horizontal[row][pos]`, positions `0..=cols`.
    pub horizontal: Vec<Vec<EdgeState>>,
}

impl LatticeConfig {
    pub fn face(&self, row: usize, col: usize) -> FaceState {
        FaceState {
            i: self.vertical[row][col],
            j: self.horizontal[row][col],
            k: self.vertical[row + 1][col],
            l: self.horizontal[row][col + 1],
        }
    }

    pub fn faces(&self) -> Vec<Vec<FaceState>> {
        (0..self.rows).map(|h| (0..self.cols).map(|c| self.face(h, c)).collect()).collect()
    }

    pub fn top(&self) -> &[EdgeState] {
        &self.vertical[self.rows]
    }

    pub fn bottom(&self) -> &[EdgeState] {
        &self.vertical[0]
    }

    /// `(t-exponent, x-exponents)` of the configuration's weight.
    pub fn weight_exps(&self) -> (i64, Vec<u32>) {
        let mut t = 0;
        let mut x = vec![0; self.rows];
        for (h, xh) in x.iter_mut().enumerate() {
            for c in 0..self.cols {
                let f = self.face(h, c);
                t += f.t_exp();
                *xh += f.l.len();
            }
        }
        (t, x)
    }

    pub fn weight(&self) -> Polynomial {
        let (t, x) = self.weight_exps();
        Polynomial::monomial(self.rows, t, x, 1)
    }

    /// Re-checks every structural invariant against `boundary`.
    pub fn validate(&self, boundary: &Boundary) -> Result<()> {
        if self.vertical.len() != self.rows + 1 || self.horizontal.len() != self.rows {
            return Err(invariant("grid dimensions"));
        }
        if self.top() != boundary.top.as_slice() || self.bottom() != boundary.bottom.as_slice() {
            return Err(invariant("boundary edges differ from the prescribed boundary"));
        }
        for h in 0..self.rows {
            if !self.horizontal[h][0].is_empty() || !self.horizontal[h][self.cols].is_empty() {
                return Err(invariant(format!("row {h} has a path crossing the side boundary")));
            }
            for c in 0..self.cols {
                if !self.face(h, c).is_valid() {
                    return Err(invariant(format!("face ({h},{c}) violates conservation or crosses a color")));
                }
            }
        }
        Ok(())
    }
}

/// Config built from one semistandard filling per shape: row `m` of shape `j`
/// becomes a path of color `j` whose horizontal steps sit at the row's entries.
pub fn config_from_fillings(tuple: &ShapeTuple, n: usize, fillings: &[Filling]) -> Result<LatticeConfig> {
    let b = Boundary::of(tuple)?;
    let cols = b.cols();
    let mut vertical = vec![vec![EdgeState::EMPTY; cols]; n + 1];
    let mut horizontal = vec![vec![EdgeState::EMPTY; cols + 1]; n];
    let put = |e: &mut EdgeState, color: usize| -> Result<()> {
        if e.has(color) {
            return Err(Error::Precondition("two paths of one color share an edge".into()));
        }
        *e = EdgeState(e.0 | EdgeState::single(color).0);
        Ok(())
    };
    for (j, (s, f)) in tuple.shapes().iter().zip(fillings).enumerate() {
        let color = j + 1;
        for m in 1..=s.rows() {
            let mut col = (s.inner().part(m) as i64 - m as i64 + 1 - b.r) as usize;
            let mut level = 0usize;
            for &e in &f[m - 1] {
                let e = e as usize;
                if e == 0 || e > n {
                    return Err(Error::Precondition(format!("entry {e} outside 1..={n}")));
                }
                while level < e {
                    put(&mut vertical[level][col], color)?;
                    level += 1;
                }
                put(&mut horizontal[e - 1][col + 1], color)?;
                col += 1;
            }
            while level <= n {
                put(&mut vertical[level][col], color)?;
                level += 1;
            }
        }
    }
    let cfg = LatticeConfig { k: tuple.k(), rows: n, cols, r: b.r, vertical, horizontal };
    cfg.validate(&b)?;
    Ok(cfg)
}

/// Per-color suffix counts `#paths at columns >= c`.
fn suffix_counts(row: &[EdgeState], k: usize) -> Vec<Vec<u32>> {
    let mut out = vec![vec![0u32; row.len() + 1]; k];
    for c in (0..row.len()).rev() {
        for color in 1..=k {
            out[color - 1][c] = out[color - 1][c + 1] + row[c].has(color) as u32;
        }
    }
    out
}

fn reachable(next: &[EdgeState], top_suffix: &[Vec<u32>], k: usize) -> bool {
    let s = suffix_counts(next, k);
    (0..k).all(|col| s[col].iter().zip(&top_suffix[col]).all(|(a, b)| a <= b))
}

/// Calls `f(next, horizontals, t_exp, x_count)` for every valid filling of one
/// row of faces above `cur`.
type RowVisit<'a> = dyn FnMut(&[EdgeState], &[EdgeState], i64, u32) + 'a;

fn row_transitions(cur: &[EdgeState], mut f: impl FnMut(&[EdgeState], &[EdgeState], i64, u32)) {
    let cols = cur.len();
    let mut next = vec![EdgeState::EMPTY; cols];
    let mut horiz = vec![EdgeState::EMPTY; cols + 1];
    fn go(
        c: usize,
        cur: &[EdgeState],
        next: &mut [EdgeState],
        horiz: &mut [EdgeState],
        t: i64,
        x: u32,
        f: &mut RowVisit<'_>,
    ) {
        if c == cur.len() {
            if horiz[c].is_empty() {
                f(next, horiz, t, x);
            }
            return;
        }
        let (i, j) = (cur[c], horiz[c]);
        if i.0 & j.0 != 0 {
            return;
        }
        let incoming = i.0 | j.0;
        // iterate subsets L of incoming
        let mut l = incoming;
        loop {
            let face = FaceState { i, j, k: EdgeState(incoming ^ l), l: EdgeState(l) };
            next[c] = face.k;
            horiz[c + 1] = face.l;
            go(c + 1, cur, next, horiz, t + face.t_exp(), x + face.l.len(), f);
            if l == 0 {
                break;
            }
            l = (l - 1) & incoming;
        }
        horiz[c + 1] = EdgeState::EMPTY;
    }
    go(0, cur, &mut next, &mut horiz, 0, 0, &mut f);
}

/// Visits every configuration in deterministic order (rows bottom to top,
/// faces left to right, larger right-exit sets first).
pub fn for_each_config(tuple: &ShapeTuple, n: usize, mut f: impl FnMut(&LatticeConfig)) -> Result<()> {
    if n == 0 {
        return Err(Error::ZeroAlphabet);
    }
    let b = Boundary::of(tuple)?;
    let top_suffix = suffix_counts(&b.top, b.k);
    let mut cfg = LatticeConfig {
        k: b.k,
        rows: n,
        cols: b.cols(),
        r: b.r,
        vertical: vec![b.bottom.clone()],
        horizontal: Vec::new(),
    };
    fn rec(
        h: usize,
        n: usize,
        b: &Boundary,
        top_suffix: &[Vec<u32>],
        cfg: &mut LatticeConfig,
        f: &mut dyn FnMut(&LatticeConfig),
    ) {
        if h == n {
            if cfg.vertical[n] == b.top {
                f(cfg);
            }
            return;
        }
        let cur = cfg.vertical[h].clone();
        let mut steps = Vec::new();
        row_transitions(&cur, |next, horiz, _, _| {
            let ok = if h + 1 == n { next == b.top.as_slice() } else { reachable(next, top_suffix, b.k) };
            if ok {
                steps.push((next.to_vec(), horiz.to_vec()));
            }
        });
        for (next, horiz) in steps {
            cfg.vertical.push(next);
            cfg.horizontal.push(horiz);
            rec(h + 1, n, b, top_suffix, cfg, f);
            cfg.vertical.pop();
            cfg.horizontal.pop();
        }
    }
    rec(0, n, &b, &top_suffix, &mut cfg, &mut f);
    Ok(())
}

pub fn enumerate_configs(tuple: &ShapeTuple, n: usize) -> Result<Vec<LatticeConfig>> {
    let mut out = Vec::new();
    for_each_config(tuple, n, |c| out.push(c.clone()))?;
    Ok(out)
}

/// Partition function by row-to-row transfer over boundary states.
pub fn partition_function(tuple: &ShapeTuple, n: usize) -> Result<Polynomial> {
    if n == 0 {
        return Err(Error::ZeroAlphabet);
    }
    let b = Boundary::of(tuple)?;
    let top_suffix = suffix_counts(&b.top, b.k);
    let mut states: HashMap<Vec<EdgeState>, Polynomial> = HashMap::new();
    states.insert(b.bottom.clone(), Polynomial::one(n));
    for h in 0..n {
        let mut next_states: HashMap<Vec<EdgeState>, Polynomial> = HashMap::new();
        for (cur, p) in &states {
            row_transitions(cur, |next, _, t, x| {
                let ok = if h + 1 == n { next == b.top.as_slice() } else { reachable(next, &top_suffix, b.k) };
                if !ok {
                    return;
                }
                let mut e = vec![0; n];
                e[h] = x;
                let w = Polynomial::monomial(n, t, e, 1);
                let entry = next_states.entry(next.to_vec()).or_insert_with(|| Polynomial::zero(n));
                *entry = &*entry + &(p * &w);
            });
        }
        states = next_states;
    }
    Ok(states.remove(&b.top).unwrap_or_else(|| Polynomial::zero(n)))
}

/// Partition function as a plain sum over enumerated configurations.
pub fn partition_function_by_configs(tuple: &ShapeTuple, n: usize) -> Result<Polynomial> {
    let mut acc = Polynomial::zero(n);
    for_each_config(tuple, n, |c| {
        let (t, x) = c.weight_exps();
        acc.add_term(Monomial::new(t, x), BigInt::from(1));
    })?;
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableaux::{coinv, enumerate_ssyt, llt_poly};

    fn tup(s: &str) -> ShapeTuple {
        s.parse().unwrap()
    }

    fn e(colors: &[usize]) -> EdgeState {
        EdgeState(colors.iter().fold(0, |a, c| a | (1 << (c - 1))))
    }

    #[test]
    fn boundary_vector_examples() {
        let one = Partition::new(vec![1]).unwrap();
        assert_eq!(boundary_vector(&[&one], 1), e(&[1]));
        let a = Partition::new(vec![8, 7, 6]).unwrap();
        let b = Partition::new(vec![4, 3, 2]).unwrap();
        assert_eq!(boundary_vector(&[&a, &b], 8), e(&[1]));
        // 6 - 3 + 1 = 4 as well: both colors sit on column 4
        assert_eq!(boundary_vector(&[&a, &b], 4), e(&[1, 2]));
        assert_eq!(boundary_vector(&[&a, &b], 0), e(&[2]));
        assert_eq!(boundary_vector(&[&a, &b], 5), e(&[]));
        let sq = Partition::new(vec![2, 2]).unwrap();
        assert_eq!(boundary_vector(&[&sq], 1), e(&[1]));
        assert_eq!(boundary_vector(&[&sq], 2), e(&[1]));
    }

    #[test]
    fn column_range_examples() {
        assert_eq!(column_range(&tup("((1))")).unwrap(), (0, 1));
        assert_eq!(column_range(&tup("((2,2)/(1,0),(1))")).unwrap(), (-1, 2));
        let (r, s) = column_range(&tup("((8,7,6),(4,3,2)/(2,0,0))")).unwrap();
        assert_eq!(s - r + 1, 11);
        assert_eq!(column_range(&tup("(())")).unwrap_err(), Error::EmptyBoundary);
    }

    #[test]
    fn running_example_boundary() {
        let b = Boundary::of(&tup("((8,7,6),(4,3,2)/(2,0,0))")).unwrap();
        assert_eq!(b.r, -2);
        let cols_with = |row: &[EdgeState], color| -> Vec<i64> {
            (0..row.len()).filter(|&c| row[c].has(color)).map(|c| c as i64 + b.r).collect()
        };
        assert_eq!(cols_with(&b.top, 1), vec![4, 6, 8]);
        assert_eq!(cols_with(&b.top, 2), vec![0, 2, 4]);
        assert_eq!(cols_with(&b.bottom, 1), vec![-2, -1, 0]);
        assert_eq!(cols_with(&b.bottom, 2), vec![-2, -1, 2]);
    }

    #[test]
    fn face_weight_examples() {
        let z = EdgeState::EMPTY;
        assert_eq!(face_weight(&FaceState::new(z, z, z, z), 1, 2).unwrap(), Polynomial::one(2));
        assert_eq!(face_weight(&FaceState::new(e(&[1]), z, e(&[1]), z), 1, 2).unwrap(), Polynomial::one(2));
        let green = FaceState::new(e(&[2]), e(&[1]), e(&[2]), e(&[1]));
        assert_eq!(face_weight(&green, 1, 2).unwrap(), Polynomial::monomial(2, 1, vec![1, 0], 1));
        // red leaving right never sees a larger color
        let red_right = FaceState::new(e(&[1]), e(&[2]), e(&[1]), e(&[2]));
        assert_eq!(face_weight(&red_right, 2, 2).unwrap(), Polynomial::monomial(2, 0, vec![0, 1], 1));
        assert!(face_weight(&FaceState::new(e(&[1]), e(&[1]), e(&[1]), e(&[1])), 1, 2).is_err());
        assert!(face_weight(&FaceState::new(e(&[1]), z, z, z), 1, 2).is_err());
    }

    #[test]
    fn trivial_boundary_has_one_vertical_config() {
        let t = tup("((2,1)/(2,1))");
        let cfgs = enumerate_configs(&t, 1).unwrap();
        assert_eq!(cfgs.len(), 1);
        assert!(cfgs[0].horizontal.iter().flatten().all(|h| h.is_empty()));
        assert_eq!(partition_function(&t, 1).unwrap(), Polynomial::one(1));
    }

    #[test]
    fn drawn_small_example_is_enumerated() {
        let t = tup("((2,2)/(1,0),(1))");
        let drawn = config_from_fillings(&t, 2, &[vec![vec![1], vec![1, 2]], vec![vec![1]]]).unwrap();
        // the highlighted face: column label 1, bottom row
        assert_eq!(drawn.face(0, 2), FaceState::new(e(&[1]), e(&[2]), e(&[2]), e(&[1])));
        let all = enumerate_configs(&t, 2).unwrap();
        assert!(all.contains(&drawn));
    }

    #[test]
    fn single_pair_partition_function() {
        let t = tup("((1),(1))");
        let z = partition_function(&t, 2).unwrap();
        assert_eq!(z, llt_poly(&t, 2).unwrap());
        assert_eq!(z.to_string(), "t*x1^2 + x1*x2 + t*x1*x2 + t*x2^2");
    }

    #[test]
    fn small_example_partition_function_matches_tableaux() {
        let t = tup("((2,2)/(1,0),(1))");
        for n in 1..=3 {
            assert_eq!(partition_function(&t, n).unwrap(), llt_poly(&t, n).unwrap());
            assert_eq!(partition_function_by_configs(&t, n).unwrap(), llt_poly(&t, n).unwrap());
        }
    }

    #[test]
    fn fillings_map_to_configs_with_the_same_weight() {
        for s in ["((2,2)/(1,0),(1))", "((2,1),(1,1))", "((3,1)/(1,0),(2,2)/(1,0))", "((1),(2),(1))"] {
            let t = tup(s);
            let n = 3;
            let mut images = Vec::new();
            for tt in enumerate_ssyt(&t, n as u32).unwrap() {
                let cfg = config_from_fillings(&t, n, tt.fillings()).unwrap();
                let (texp, x) = cfg.weight_exps();
                assert_eq!(texp, coinv(&tt) as i64, "{s}");
                assert_eq!(x, tt.x_exps(n));
                images.push(cfg);
            }
            let mut all = enumerate_configs(&t, n).unwrap();
            assert_eq!(all.len(), images.len());
            all.sort_by(|a, b| format!("{a:?}").cmp(&format!("{b:?}")));
            images.sort_by(|a, b| format!("{a:?}").cmp(&format!("{b:?}")));
            assert_eq!(all, images);
        }
    }

    #[test]
    fn enumerated_configs_validate() {
        let t = tup("((2,1),(2)/(1))");
        let b = Boundary::of(&t).unwrap();
        for c in enumerate_configs(&t, 3).unwrap() {
            c.validate(&b).unwrap();
        }
    }

    #[test]
    fn config_json_round_trip() {
        let t = tup("((1),(1))");
        let c = &enumerate_configs(&t, 2).unwrap()[0];
        let s = serde_json::to_string(c).unwrap();
        let back: LatticeConfig = serde_json::from_str(&s).unwrap();
        assert_eq!(&back, c);
        let face = serde_json::to_string(&c.face(0, 0)).unwrap();
        assert!(face.contains("\"I\":"));
    }
}
