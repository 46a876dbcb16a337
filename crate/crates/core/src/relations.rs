//! Matching-indexed decompositions of LLT polynomials.
//!
//! Configurations of a two-shape tuple are grouped by the matching their
//! walks induce. Within a family sharing one bead geometry, each group is a
//! `t`-power multiple of a basis polynomial `g_j`, which yields a monomial
//! transfer matrix and linear relations between the family's LLTs.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{invariant, Error, Result};
use crate::lattice::for_each_config;
use crate::poly::{Monomial, Polynomial};
use crate::shapes::{Partition, ShapeTuple, SkewShape};
use crate::swap::{bead_sequence, induced_matching, swap_check, BeadSequence, BoundaryBead, Color, Matching};
use crate::tableaux::llt_poly;

/// Uncolored matching: pairs of indices into the cyclic bead order, each pair
/// increasing, pairs sorted.
pub type ArcShape = Vec<(usize, usize)>;

pub fn arc_shape(m: &Matching, beads: &BeadSequence) -> Result<ArcShape> {
    let cyc = beads.cyclic();
    let pos = |b: &BoundaryBead| {
        cyc.iter()
            .position(|x| x.side == b.side && x.column == b.column)
            .ok_or_else(|| invariant(format!("bead {b} not on the boundary")))
    };
    let mut out = m
        .arcs
        .iter()
        .map(|a| {
            let (i, j) = (pos(&a.0)?, pos(&a.1)?);
            Ok((i.min(j), i.max(j)))
        })
        .collect::<Result<ArcShape>>()?;
    out.sort_unstable();
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatchingClass {
    /// Colored instance as induced in this tuple.
    pub matching: Matching,
    pub shape: ArcShape,
    pub g: Polynomial,
}

/// Splits the configurations of `tuple` by induced matching.
pub fn group_by_matching(tuple: &ShapeTuple, n: usize) -> Result<Vec<MatchingClass>> {
    let beads = bead_sequence(tuple)?;
    let mut classes: BTreeMap<ArcShape, (Matching, Polynomial)> = BTreeMap::new();
    let mut failure = None;
    for_each_config(tuple, n, |cfg| {
        if failure.is_some() {
            return;
        }
        let mut step = || -> Result<()> {
            let m = induced_matching(cfg)?;
            let shape = arc_shape(&m, &beads)?;
            let (t, x) = cfg.weight_exps();
            let entry = classes.entry(shape).or_insert_with(|| (m, Polynomial::zero(n)));
            entry.1.add_term(Monomial::new(t, x), 1.into());
            Ok(())
        };
        if let Err(e) = step() {
            failure = Some(e);
        }
    })?;
    if let Some(e) = failure {
        return Err(e);
    }
    Ok(classes.into_iter().map(|(shape, (matching, g))| MatchingClass { matching, shape, g }).collect())
}

fn catalan_number(k: usize) -> usize {
    (0..k).fold(1usize, |c, i| c * 2 * (2 * i + 1) / (i + 2))
}

fn canonical_rec(k: usize, memo: &mut Vec<Option<Vec<ArcShape>>>) -> Vec<ArcShape> {
    if let Some(v) = &memo[k] {
        return v.clone();
    }
    let mut out = Vec::new();
    if k == 0 {
        out.push(Vec::new());
    }
    for a in 0..k {
        // a arcs to the left of the rightmost arc, k - a - 1 inside it
        let left = canonical_rec(a, memo);
        let inner = canonical_rec(k - a - 1, memo);
        let p = 2 * a;
        let last = 2 * k - 1;
        for b in &left {
            for c in &inner {
                let mut m: ArcShape = b.clone();
                m.push((p, last));
                m.extend(c.iter().map(|&(i, j)| (i + p + 1, j + p + 1)));
                m.sort_unstable();
                out.push(m);
            }
        }
    }
    memo[k] = Some(out.clone());
    out
}

/// Non-crossing matchings of beads `0..num_beads` on one row, in the
/// recursive (left block, inner block) order.
pub fn canonical_matchings(num_beads: usize) -> Result<Vec<ArcShape>> {
    if num_beads % 2 == 1 {
        return Err(Error::Precondition(format!("odd bead count {num_beads}")));
    }
    let k = num_beads / 2;
    let mut memo = vec![None; k + 1];
    Ok(canonical_rec(k, &mut memo))
}

/// Rightmost bead blue, its partner red, recursing on the left block and
/// the inside of that arc.
pub fn canonical_coloring(matching: &[(usize, usize)]) -> Result<Vec<Color>> {
    let len = matching.len() * 2;
    let mut partner = vec![usize::MAX; len];
    for &(i, j) in matching {
        if i >= len || j >= len || partner[i] != usize::MAX || partner[j] != usize::MAX {
            return Err(Error::Precondition("not a perfect matching of consecutive beads".into()));
        }
        partner[i] = j;
        partner[j] = i;
    }
    let mut colors = vec![Color::Blue; len];
    fn go(lo: usize, hi: usize, partner: &[usize], colors: &mut [Color]) -> Result<()> {
        if lo >= hi {
            return Ok(());
        }
        let last = hi - 1;
        let p = partner[last];
        if p < lo || p >= last {
            return Err(Error::Precondition("matching is crossing".into()));
        }
        colors[last] = Color::Blue;
        colors[p] = Color::Red;
        go(lo, p, partner, colors)?;
        go(p + 1, last, partner, colors)
    }
    go(0, len, &partner, &mut colors)?;
    Ok(colors)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TransferMatrix {
    pub order: Vec<ArcShape>,
    /// `rows[i][j]`: exponent `w` with class `j` of member `i` equal to `t^w g_j`.
    pub rows: Vec<Vec<Option<i64>>>,
    /// Family member supplying each `g_j`.
    pub basis: Vec<usize>,
    pub g: Vec<Polynomial>,
}

impl TransferMatrix {
    /// `sum_j t^{w_ij} g_j` for row `i`.
    pub fn reconstruct(&self, i: usize) -> Result<Polynomial> {
        let n = self.g.first().map(Polynomial::n).unwrap_or(0);
        let mut acc = Polynomial::zero(n);
        for (j, w) in self.rows[i].iter().enumerate() {
            if let Some(w) = w {
                acc = acc.try_add(&self.g[j].scale_t(*w))?;
            }
        }
        Ok(acc)
    }

    /// Square block of basis rows.
    pub fn square(&self) -> Vec<Vec<Option<i64>>> {
        self.basis.iter().map(|&i| self.rows[i].clone()).collect()
    }

    pub fn is_unit_lower_triangular(&self) -> bool {
        let sq = self.square();
        sq.iter().enumerate().all(|(i, row)| {
            row.iter().enumerate().all(|(j, w)| match j.cmp(&i) {
                std::cmp::Ordering::Equal => *w == Some(0),
                std::cmp::Ordering::Greater => w.is_none(),
                std::cmp::Ordering::Less => true,
            })
        })
    }

    /// Inverse of the square block as Laurent polynomials in `t`.
    pub fn inverse(&self) -> Result<Vec<Vec<Polynomial>>> {
        let sq = self.square();
        let c = sq.len();
        if !self.is_unit_lower_triangular() {
            let row = (0..c).find(|&i| sq[i][i] != Some(0)).unwrap_or(0);
            return Err(Error::Singular(row));
        }
        let entry = |w: Option<i64>| w.map_or_else(|| Polynomial::zero(0), |w| Polynomial::t_power(0, w));
        let mut inv = vec![vec![Polynomial::zero(0); c]; c];
        #[allow(clippy::needless_range_loop)]
        for col in 0..c {
            for i in 0..c {
                let mut v = if i == col { Polynomial::one(0) } else { Polynomial::zero(0) };
                for k in 0..i {
                    v = v.try_sub(&entry(sq[i][k]).try_mul(&inv[k][col])?)?;
                }
                inv[i][col] = v;
            }
        }
        Ok(inv)
    }
}

fn same_geometry_all(beads: &[BeadSequence]) -> Result<()> {
    if let Some(first) = beads.first() {
        for (i, b) in beads.iter().enumerate().skip(1) {
            if !first.same_geometry(b) {
                return Err(Error::GeometryMismatch(format!("member {} has beads {b}, member 0 has {first}", i + 1)));
            }
        }
    }
    Ok(())
}

fn single_row(b: &BeadSequence) -> bool {
    b.bottom.is_empty()
}

/// Transfer matrix of a family sharing one bead geometry.
///
/// On a single row the columns follow the canonical order and `g_j` comes
/// from the member carrying the canonical coloring of `M_j`. Otherwise the
/// columns are the realized matchings in sorted order, each `g_j` taken from
/// the first member realizing it.
pub fn transfer_matrix(family: &[ShapeTuple], n: usize) -> Result<TransferMatrix> {
    let beads = family.iter().map(bead_sequence).collect::<Result<Vec<_>>>()?;
    same_geometry_all(&beads)?;
    let classes: Vec<BTreeMap<ArcShape, Polynomial>> = family
        .par_iter()
        .map(|t| Ok(group_by_matching(t, n)?.into_iter().map(|c| (c.shape, c.g)).collect()))
        .collect::<Result<_>>()?;
    let (order, basis): (Vec<ArcShape>, Vec<usize>) = match beads.first() {
        Some(b0) if single_row(b0) => {
            let order = canonical_matchings(b0.top.len())?;
            let mut basis = Vec::with_capacity(order.len());
            for m in &order {
                let colors = canonical_coloring(m)?;
                let found = beads
                    .iter()
                    .position(|b| b.top_colors() == colors)
                    .or_else(|| classes.iter().position(|c| c.contains_key(m)));
                basis.push(found);
            }
            let keep: Vec<usize> = (0..order.len()).filter(|&j| basis[j].is_some()).collect();
            (
                keep.iter().map(|&j| order[j].clone()).collect::<Vec<_>>(),
                keep.iter().map(|&j| basis[j].unwrap()).collect(),
            )
        }
        _ => {
            let mut order: Vec<ArcShape> = classes.iter().flat_map(|c| c.keys().cloned()).collect();
            order.sort();
            order.dedup();
            let basis = order.iter().map(|m| classes.iter().position(|c| c.contains_key(m)).unwrap()).collect();
            (order, basis)
        }
    };
    let g: Vec<Polynomial> = order
        .iter()
        .zip(&basis)
        .map(|(m, &i)| classes[i].get(m).cloned().unwrap_or_else(|| Polynomial::zero(n)))
        .collect();
    let mut rows = Vec::with_capacity(family.len());
    for (i, cls) in classes.iter().enumerate() {
        if let Some(extra) = cls.keys().find(|m| !order.contains(m)) {
            return Err(invariant(format!("member {} realizes matching {extra:?} outside the basis", i + 1)));
        }
        let mut row = Vec::with_capacity(order.len());
        for (j, m) in order.iter().enumerate() {
            row.push(match cls.get(m) {
                None => None,
                Some(p) => Some(p.equivalence_shift(&g[j])?.ok_or_else(|| {
                    invariant(format!("class {} of member {} is not a t-power multiple of g{}", j + 1, i + 1, j + 1))
                })?),
            });
        }
        rows.push(row);
    }
    Ok(TransferMatrix { order, rows, basis, g })
}

/// Recovers the `g`'s from the basis members' LLTs by forward substitution.
pub fn solve_g(matrix: &TransferMatrix, llts: &[Polynomial]) -> Result<Vec<Polynomial>> {
    if llts.len() != matrix.rows.len() {
        return Err(Error::Precondition(format!("{} polynomials for {} rows", llts.len(), matrix.rows.len())));
    }
    let inv = matrix.inverse()?;
    let n = llts.first().map(Polynomial::n).unwrap_or(0);
    let mut out = Vec::with_capacity(inv.len());
    for row in &inv {
        let mut acc = Polynomial::zero(n);
        for (k, c) in row.iter().enumerate() {
            for (m, coeff) in c.terms() {
                acc = acc.try_add(&llts[matrix.basis[k]].scale_t(m.t_exp()).scale(coeff.clone()))?;
            }
        }
        out.push(acc);
    }
    Ok(out)
}

fn single_part(outer: u32, inner: u32) -> Result<SkewShape> {
    SkewShape::from_parts(&[outer], &[inner])
}

/// `L(b1/g1, b2/g2) == L(b2/g2, b1/g1) + (t^-1 - 1) L(b2/g1, b1/g2)` for one-row shapes.
pub fn one_row_swap_check(b1: u32, g1: u32, b2: u32, g2: u32, n: usize) -> Result<bool> {
    if !(0 < g1 && g1 < g2 && g2 <= b1 && b1 < b2) {
        return Err(Error::Precondition(format!("need 0 < g1 < g2 <= b1 < b2, got g1={g1} g2={g2} b1={b1} b2={b2}")));
    }
    let lhs = llt_poly(&ShapeTuple::new(vec![single_part(b1, g1)?, single_part(b2, g2)?])?, n)?;
    let swapped = llt_poly(&ShapeTuple::new(vec![single_part(b2, g2)?, single_part(b1, g1)?])?, n)?;
    let crossed = llt_poly(&ShapeTuple::new(vec![single_part(b2, g1)?, single_part(b1, g2)?])?, n)?;
    let factor = Polynomial::t_power(n, -1).try_sub(&Polynomial::one(n))?;
    Ok(lhs == swapped.try_add(&factor.try_mul(&crossed)?)?)
}

fn straight(parts: &[&[u32]]) -> ShapeTuple {
    ShapeTuple::straight(parts).expect("fixed shapes are valid")
}

/// `L((3,2),(2)) == t^-1 L((3,3),(1)) + t L((2,2),(3))`.
pub fn small_relation_check(n: usize) -> Result<bool> {
    if n < 2 {
        return Err(Error::Precondition("needs n >= 2".into()));
    }
    let l1 = llt_poly(&straight(&[&[3, 3], &[1]]), n)?;
    let l2 = llt_poly(&straight(&[&[2, 2], &[3]]), n)?;
    let l3 = llt_poly(&straight(&[&[3, 2], &[2]]), n)?;
    Ok(l3 == l1.scale_t(-1).try_add(&l2.scale_t(1))?)
}

/// `L((3,3),(1)) == t^2 L((1),(3,3))`.
pub fn small_relation_side_check(n: usize) -> Result<bool> {
    let l1 = llt_poly(&straight(&[&[3, 3], &[1]]), n)?;
    let sw = llt_poly(&straight(&[&[1], &[3, 3]]), n)?;
    Ok(l1 == sw.scale_t(2))
}

fn combinations(len: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, len: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..len {
            if len - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, len, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, len, k, &mut Vec::new(), &mut out);
    out
}

/// All `C(2n, n)` tuples: the chosen values (in decreasing order) shifted by
/// `-n + m` in position `m` form the first partition, the rest the second.
pub fn catalan_family(values: &[u32]) -> Result<Vec<ShapeTuple>> {
    if values.is_empty() || values.len() % 2 == 1 {
        return Err(Error::Precondition(format!("need an even, positive number of values, got {}", values.len())));
    }
    if values.windows(2).any(|w| w[0] <= w[1]) {
        return Err(Error::Precondition(format!("values {values:?} are not strictly decreasing")));
    }
    let n = values.len() / 2;
    let part = |idx: &[usize]| -> Result<Vec<u32>> {
        idx.iter()
            .enumerate()
            .map(|(m, &i)| {
                let v = values[i] as i64 - n as i64 + m as i64 + 1;
                u32::try_from(v).map_err(|_| Error::Precondition(format!("value {} gives a negative part", values[i])))
            })
            .collect()
    };
    combinations(2 * n, n)
        .into_iter()
        .map(|blue| {
            let red: Vec<usize> = (0..2 * n).filter(|i| !blue.contains(i)).collect();
            let (b, r) = (part(&blue)?, part(&red)?);
            ShapeTuple::new(vec![
                SkewShape::new(Partition::new(b)?, Partition::zeros(n))?,
                SkewShape::new(Partition::new(r)?, Partition::zeros(n))?,
            ])
        })
        .collect()
}

/// Family members reordered so the first `C_n` follow the canonical
/// matchings with their canonical colorings.
pub fn canonical_family_order(family: &[ShapeTuple]) -> Result<Vec<ShapeTuple>> {
    let beads = family.iter().map(bead_sequence).collect::<Result<Vec<_>>>()?;
    same_geometry_all(&beads)?;
    let Some(b0) = beads.first() else { return Ok(Vec::new()) };
    if !single_row(b0) {
        return Ok(family.to_vec());
    }
    let mut picked = Vec::new();
    for m in canonical_matchings(b0.top.len())? {
        let colors = canonical_coloring(&m)?;
        if let Some(i) = beads.iter().position(|b| b.top_colors() == colors) {
            picked.push(i);
        }
    }
    let rest = (0..family.len()).filter(|i| !picked.contains(i));
    Ok(picked.iter().copied().chain(rest).map(|i| family[i].clone()).collect())
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CatalanReport {
    pub family: Vec<ShapeTuple>,
    pub matrix: TransferMatrix,
    pub classes: usize,
    pub symmetric_g: bool,
    pub unit_lower_triangular: bool,
    pub reconstructs: bool,
}

impl CatalanReport {
    pub fn passed(&self) -> bool {
        self.classes == catalan_number(self.family.first().map_or(0, |t| t.shape(1).rows()))
            && self.symmetric_g
            && self.unit_lower_triangular
            && self.reconstructs
    }
}

/// Decomposes a whole Catalan family over its canonical `g`'s.
pub fn catalan_check(values: &[u32], n: usize) -> Result<CatalanReport> {
    let family = canonical_family_order(&catalan_family(values)?)?;
    let matrix = transfer_matrix(&family, n)?;
    let llts: Vec<Polynomial> = family.par_iter().map(|t| llt_poly(t, n)).collect::<Result<_>>()?;
    let mut reconstructs = true;
    for (i, l) in llts.iter().enumerate() {
        reconstructs &= matrix.reconstruct(i)? == *l;
    }
    let solved = solve_g(&matrix, &llts)?;
    reconstructs &= solved == matrix.g;
    Ok(CatalanReport {
        classes: matrix.order.len(),
        symmetric_g: matrix.g.iter().all(Polynomial::is_symmetric),
        unit_lower_triangular: matrix.is_unit_lower_triangular(),
        reconstructs,
        family,
        matrix,
    })
}

/// Merges `beta1 + delta` (blue) and `beta2 + delta` (red) with equal values
/// cancelled, read left to right (increasing value).
pub fn sorted_bead_row(beta1: &Partition, beta2: &Partition) -> Result<Vec<(Color, i64)>> {
    if beta1.len() != beta2.len() {
        return Err(Error::Precondition(format!("part counts {} and {} differ", beta1.len(), beta2.len())));
    }
    let n = beta1.len();
    let shifted = |p: &Partition| -> Vec<i64> { (1..=n).map(|m| p.part(m) as i64 + (n - m) as i64).collect() };
    let (b, r) = (shifted(beta1), shifted(beta2));
    let mut out: Vec<(Color, i64)> = b
        .iter()
        .filter(|v| !r.contains(v))
        .map(|&v| (Color::Blue, v))
        .chain(r.iter().filter(|v| !b.contains(v)).map(|&v| (Color::Red, v)))
        .collect();
    out.sort_by_key(|&(_, v)| v);
    Ok(out)
}

/// Swap exponent for a pair of nested rectangles `rows x cols`, padded to
/// equal part counts.
pub fn nested_rectangles_check(a: (usize, u32), b: (usize, u32), n: usize) -> Result<i64> {
    let fits = |p: (usize, u32), q: (usize, u32)| p.0 <= q.0 && p.1 <= q.1;
    if !(fits(a, b) || fits(b, a)) {
        return Err(Error::Precondition(format!("rectangles {a:?} and {b:?} are not nested")));
    }
    let len = a.0.max(b.0);
    let rect = |(rows, cols): (usize, u32)| {
        let mut parts = vec![cols; rows];
        parts.resize(len, 0);
        SkewShape::new(Partition::new(parts)?, Partition::zeros(len))
    };
    let tuple = ShapeTuple::new(vec![rect(a)?, rect(b)?])?;
    swap_check(&tuple, n)?.ok_or_else(|| invariant(format!("nested rectangles {tuple} have no unique matching")))
}
