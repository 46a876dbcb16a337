//! Semistandard fillings of shape tuples and the coinversion generating function.

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::poly::{Monomial, Polynomial};
use crate::shapes::{Cell, ShapeTuple, SkewShape, Slot, Triple};

/// Rows of one skew filling; `rows[r-1]` lists the entries of row `r` left to right.
pub type Filling = Vec<Vec<u32>>;

/// A semistandard filling of every shape of a tuple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TupleSSYT<'a> {
    tuple: &'a ShapeTuple,
    entries: Vec<Filling>,
}

/// Entry seen through a triple end: below every value, a value, or above every value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Entry {
    Low,
    Value(u32),
    High,
}

impl<'a> TupleSSYT<'a> {
    /// Validates a filling against the tuple and the alphabet `1..=n`.
    pub fn new(tuple: &'a ShapeTuple, entries: Vec<Filling>, n: u32) -> Result<Self> {
        if entries.len() != tuple.k() {
            return Err(Error::Precondition("one filling per shape required".into()));
        }
        for (s, f) in tuple.shapes().iter().zip(&entries) {
            if !is_semistandard(s, f, n) {
                return Err(Error::Precondition(format!("{f:?} is not a semistandard filling of {s}")));
            }
        }
        Ok(TupleSSYT { tuple, entries })
    }

    pub fn tuple(&self) -> &ShapeTuple {
        self.tuple
    }

    pub fn fillings(&self) -> &[Filling] {
        &self.entries
    }

    /// Entry of a real cell (1-based shape, row, column).
    pub fn get(&self, shape: usize, row: usize, col: usize) -> Option<u32> {
        let s = self.tuple.shape(shape);
        let start = s.inner().part(row) as usize;
        self.entries[shape - 1].get(row - 1)?.get(col.checked_sub(start + 1)?).copied()
    }

    fn slot(&self, slot: &Slot, virtual_as: Entry) -> Entry {
        if slot.is_virtual {
            return virtual_as;
        }
        Entry::Value(self.get(slot.shape, slot.row, slot.col as usize).expect("real slot has an entry"))
    }

    fn is_coinversion(&self, tr: &Triple) -> bool {
        let a = self.slot(&tr.u, Entry::Low);
        let b = Entry::Value(self.get(tr.v.shape, tr.v.row, tr.v.col).expect("v is a cell"));
        let c = self.slot(&tr.w, Entry::High);
        a <= b && b <= c
    }

    /// Exponent vector of `x^T` over `n` letters.
    pub fn x_exps(&self, n: usize) -> Vec<u32> {
        let mut x = vec![0; n];
        for f in &self.entries {
            for row in f {
                for &e in row {
                    x[e as usize - 1] += 1;
                }
            }
        }
        x
    }
}

fn is_semistandard(s: &SkewShape, f: &Filling, n: u32) -> bool {
    if f.len() != s.rows() {
        return false;
    }
    for r in 1..=s.rows() {
        let row = &f[r - 1];
        let start = s.inner().part(r) as usize;
        if row.len() != s.outer().part(r) as usize - start {
            return false;
        }
        for (i, &e) in row.iter().enumerate() {
            if e < 1 || e > n || (i > 0 && row[i - 1] > e) {
                return false;
            }
            let col = start + i + 1;
            if r > 1 && col > s.inner().part(r - 1) as usize {
                let below = f[r - 2][col - s.inner().part(r - 1) as usize - 1];
                if below >= e {
                    return false;
                }
            }
        }
    }
    true
}

/// All semistandard fillings of one skew shape with entries in `1..=n`,
/// lexicographic in (row, column) with entries ascending.
pub fn shape_fillings(s: &SkewShape, n: u32) -> Vec<Filling> {
    let mut rows: Filling =
        (1..=s.rows()).map(|r| Vec::with_capacity((s.outer().part(r) - s.inner().part(r)) as usize)).collect();
    let mut out = Vec::new();
    fill(s, n, 1, &mut rows, &mut out);
    out
}

fn fill(s: &SkewShape, n: u32, r: usize, rows: &mut Filling, out: &mut Vec<Filling>) {
    if r > s.rows() {
        out.push(rows.clone());
        return;
    }
    let start = s.inner().part(r) as usize;
    let len = s.outer().part(r) as usize - start;
    if rows[r - 1].len() == len {
        fill(s, n, r + 1, rows, out);
        return;
    }
    let i = rows[r - 1].len();
    let col = start + i + 1;
    let mut lo = if i > 0 { rows[r - 1][i - 1] } else { 1 };
    if r > 1 && col > s.inner().part(r - 1) as usize {
        lo = lo.max(rows[r - 2][col - s.inner().part(r - 1) as usize - 1] + 1);
    }
    for e in lo..=n {
        rows[r - 1].push(e);
        fill(s, n, r, rows, out);
        rows[r - 1].pop();
    }
}

/// Iterator over the Cartesian product of per-shape fillings.
pub struct SsytIter<'a> {
    tuple: &'a ShapeTuple,
    per_shape: Vec<Vec<Filling>>,
    idx: Vec<usize>,
    done: bool,
}

impl<'a> Iterator for SsytIter<'a> {
    type Item = TupleSSYT<'a>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.done {
            return None;
        }
        let entries = self.per_shape.iter().zip(&self.idx).map(|(fs, &i)| fs[i].clone()).collect();
        // odometer with the last shape varying fastest
        self.done = true;
        for pos in (0..self.idx.len()).rev() {
            self.idx[pos] += 1;
            if self.idx[pos] < self.per_shape[pos].len() {
                self.done = false;
                break;
            }
            self.idx[pos] = 0;
        }
        Some(TupleSSYT { tuple: self.tuple, entries })
    }
}

/// Every tuple of semistandard fillings with entries in `1..=n`.
pub fn enumerate_ssyt(tuple: &ShapeTuple, n: u32) -> Result<SsytIter<'_>> {
    if n == 0 {
        return Err(Error::ZeroAlphabet);
    }
    let per_shape: Vec<_> = tuple.shapes().iter().map(|s| shape_fillings(s, n)).collect();
    let done = per_shape.iter().any(Vec::is_empty);
    Ok(SsytIter { tuple, idx: vec![0; per_shape.len()], per_shape, done })
}

/// Number of coinversion triples of `t`.
pub fn coinv(t: &TupleSSYT<'_>) -> usize {
    coinv_with(t, &t.tuple.triples())
}

fn coinv_with(t: &TupleSSYT<'_>, triples: &[Triple]) -> usize {
    triples.iter().filter(|tr| t.is_coinversion(tr)).count()
}

/// The coinversion LLT polynomial `Σ_T t^coinv(T) x^T` over `n` letters.
pub fn llt_poly(tuple: &ShapeTuple, n: usize) -> Result<Polynomial> {
    if n == 0 {
        return Err(Error::ZeroAlphabet);
    }
    let triples = tuple.triples();
    let per_shape: Vec<_> = tuple.shapes().iter().map(|s| shape_fillings(s, n as u32)).collect();
    if per_shape.iter().any(Vec::is_empty) {
        return Ok(Polynomial::zero(n));
    }
    // split on the first shape's fillings; the rest is a sequential odometer
    let total = per_shape[0]
        .par_iter()
        .map(|first| {
            let mut acc = Polynomial::zero(n);
            let tail = &per_shape[1..];
            let mut idx = vec![0usize; tail.len()];
            loop {
                let mut entries = Vec::with_capacity(tuple.k());
                entries.push(first.clone());
                entries.extend(tail.iter().zip(&idx).map(|(fs, &i)| fs[i].clone()));
                let t = TupleSSYT { tuple, entries };
                acc.add_term(Monomial::new(coinv_with(&t, &triples) as i64, t.x_exps(n)), BigInt::from(1));
                let mut advanced = false;
                for pos in (0..idx.len()).rev() {
                    idx[pos] += 1;
                    if idx[pos] < tail[pos].len() {
                        advanced = true;
                        break;
                    }
                    idx[pos] = 0;
                }
                if !advanced {
                    break;
                }
            }
            acc
        })
        .reduce(|| Polynomial::zero(n), |a, b| &a + &b);
    Ok(total)
}

/// Attacking inversions: pairs `u, v` with equal content and `u` in an
/// earlier shape, or `v` one diagonal right of `u` and `u` in a later shape,
/// such that `T(u) > T(v)`.
pub fn inv(t: &TupleSSYT<'_>) -> usize {
    inv_with(t, &t.tuple.cells())
}

fn inv_with(t: &TupleSSYT<'_>, cells: &[Cell]) -> usize {
    let val = |c: &Cell| t.get(c.shape, c.row, c.col).expect("cell of the tuple");
    let mut count = 0;
    for u in cells {
        for v in cells {
            let attacking = (u.content() == v.content() && u.shape < v.shape)
                || (v.content() == u.content() + 1 && u.shape > v.shape);
            if attacking && val(u) > val(v) {
                count += 1;
            }
        }
    }
    count
}

/// The inversion LLT polynomial `G = Σ_T t^inv(T) x^T`, enumerated directly.
pub fn inversion_llt(tuple: &ShapeTuple, n: usize) -> Result<Polynomial> {
    if n == 0 {
        return Err(Error::ZeroAlphabet);
    }
    let cells = tuple.cells();
    let mut acc = Polynomial::zero(n);
    for t in enumerate_ssyt(tuple, n as u32)? {
        acc.add_term(Monomial::new(inv_with(&t, &cells) as i64, t.x_exps(n)), BigInt::from(1));
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn tup(s: &str) -> ShapeTuple {
        s.parse().unwrap()
    }

    fn single_pair_llt() -> Polynomial {
        // t(x1^2 + x2^2) + (1 + t) x1 x2, from the four fillings by hand
        let mut p = Polynomial::zero(2);
        p.add_term(Monomial::new(1, vec![2, 0]), 1.into());
        p.add_term(Monomial::new(1, vec![0, 2]), 1.into());
        p.add_term(Monomial::new(0, vec![1, 1]), 1.into());
        p.add_term(Monomial::new(1, vec![1, 1]), 1.into());
        p
    }

    #[test]
    fn filling_counts() {
        assert_eq!(enumerate_ssyt(&tup("((1))"), 2).unwrap().count(), 2);
        assert_eq!(enumerate_ssyt(&tup("((1),(1))"), 2).unwrap().count(), 4);
        let rows: Vec<_> = enumerate_ssyt(&tup("((2))"), 2).unwrap().map(|t| t.fillings()[0][0].clone()).collect();
        assert_eq!(rows, vec![vec![1, 1], vec![1, 2], vec![2, 2]]);
        assert_eq!(enumerate_ssyt(&tup("((1,1,1))"), 2).unwrap().count(), 0);
        assert!(enumerate_ssyt(&tup("((1))"), 0).is_err());
    }

    #[test]
    fn coinv_examples() {
        let t = tup("((1),(1))");
        let f = |b, c| TupleSSYT::new(&t, vec![vec![vec![b]], vec![vec![c]]], 2).unwrap();
        assert_eq!(coinv(&f(1, 2)), 1);
        assert_eq!(coinv(&f(2, 1)), 0);
        let single = tup("((2,1))");
        for tt in enumerate_ssyt(&single, 3).unwrap() {
            assert_eq!(coinv(&tt), 0);
        }
    }

    #[test]
    fn invalid_fillings_are_rejected() {
        let t = tup("((2,2)/(1,0))");
        assert!(TupleSSYT::new(&t, vec![vec![vec![1], vec![1, 2]]], 2).is_ok());
        assert!(TupleSSYT::new(&t, vec![vec![vec![2], vec![1, 2]]], 2).is_err());
        assert!(TupleSSYT::new(&t, vec![vec![vec![1], vec![2, 1]]], 2).is_err());
        assert!(TupleSSYT::new(&t, vec![vec![vec![1], vec![1, 3]]], 2).is_err());
    }

    #[test]
    fn llt_examples() {
        assert_eq!(llt_poly(&tup("((1))"), 2).unwrap(), &Polynomial::var(2, 1) + &Polynomial::var(2, 2));
        let l = llt_poly(&tup("((1),(1))"), 2).unwrap();
        assert_eq!(l, single_pair_llt());
        assert_eq!(l.to_string(), "t*x1^2 + x1*x2 + t*x1*x2 + t*x2^2");
    }

    #[test]
    fn inversion_examples() {
        let single = tup("((2,1))");
        assert_eq!(inversion_llt(&single, 3).unwrap(), llt_poly(&single, 3).unwrap());
        let g = inversion_llt(&tup("((1),(1))"), 2).unwrap();
        let mut want = Polynomial::zero(2);
        want.add_term(Monomial::new(0, vec![2, 0]), 1.into());
        want.add_term(Monomial::new(0, vec![0, 2]), 1.into());
        want.add_term(Monomial::new(0, vec![1, 1]), 1.into());
        want.add_term(Monomial::new(1, vec![1, 1]), 1.into());
        assert_eq!(g, want);
        // applying the conversion to G gives back L
        assert_eq!(g.substitute_t_inverse().scale_t(1), single_pair_llt());
    }

    fn small_tuple(k: usize) -> impl Strategy<Value = ShapeTuple> {
        let shape = (1usize..=2)
            .prop_flat_map(|len| (prop::collection::vec(0u32..=3, len), prop::collection::vec(0u32..=3, len)))
            .prop_map(|(mut a, mut b)| {
                a.sort_unstable_by(|x, y| y.cmp(x));
                b.sort_unstable_by(|x, y| y.cmp(x));
                let inner: Vec<u32> = a.iter().zip(&b).map(|(x, y)| (*x).min(*y)).collect();
                SkewShape::from_parts(&a, &inner).unwrap()
            });
        prop::collection::vec(shape, k).prop_map(|s| ShapeTuple::new(s).unwrap())
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn llt_is_symmetric(t in small_tuple(2), n in 1usize..=3) {
            prop_assert!(llt_poly(&t, n).unwrap().is_symmetric());
        }

        #[test]
        fn coinv_bounded_by_triples(t in small_tuple(2), n in 1u32..=3) {
            let m = t.count_triples();
            for f in enumerate_ssyt(&t, n).unwrap() {
                prop_assert!(coinv(&f) <= m);
            }
        }

        #[test]
        fn t_equal_one_gives_product_of_skew_schur(t in small_tuple(2), n in 1usize..=3) {
            let a = llt_poly(&ShapeTuple::new(vec![t.shape(1).clone()]).unwrap(), n).unwrap();
            let b = llt_poly(&ShapeTuple::new(vec![t.shape(2).clone()]).unwrap(), n).unwrap();
            prop_assert_eq!(llt_poly(&t, n).unwrap().t_specialize_one(), &a * &b);
        }

        #[test]
        fn inversion_round_trip(t in small_tuple(2), n in 1usize..=3) {
            let m = t.count_triples() as i64;
            let g = inversion_llt(&t, n).unwrap();
            prop_assert_eq!(g.substitute_t_inverse().scale_t(m), llt_poly(&t, n).unwrap());
        }
    }
}
