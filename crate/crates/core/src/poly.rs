//! Exact polynomials in `x_1..x_n` with an integer Laurent exponent in `t`.
//!
//! Every LLT and partition-function computation in this crate produces a
//! [`Polynomial`]. Coefficients are arbitrary-precision integers and the term
//! list is kept in canonical order, so structural equality is polynomial
//! equality.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::{self, Deserializer};
use serde::ser::Serializer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A monomial `t^t_exp * x_1^e_1 ... x_n^e_n`.
///
/// Ordering: total x-degree ascending, then the exponent vectors with a
/// larger leading exponent first, then `t_exp` ascending.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    t_exp: i64,
    x_exps: Vec<u32>,
}

impl Monomial {
    pub fn new(t_exp: i64, x_exps: Vec<u32>) -> Self {
        Monomial { t_exp, x_exps }
    }

    /// The monomial `1` over an alphabet of size `n`.
    pub fn one(n: usize) -> Self {
        Monomial { t_exp: 0, x_exps: vec![0; n] }
    }

    pub fn t_exp(&self) -> i64 {
        self.t_exp
    }

    pub fn x_exps(&self) -> &[u32] {
        &self.x_exps
    }

    pub fn n(&self) -> usize {
        self.x_exps.len()
    }

    pub fn x_degree(&self) -> u32 {
        self.x_exps.iter().sum()
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            t_exp: self.t_exp + other.t_exp,
            x_exps: self.x_exps.iter().zip(&other.x_exps).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.x_degree()
            .cmp(&other.x_degree())
            .then_with(|| other.x_exps.cmp(&self.x_exps))
            .then_with(|| self.t_exp.cmp(&other.t_exp))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// An exact polynomial over the alphabet `{x_1, ..., x_n}` with Laurent `t`.
///
/// The zero polynomial is an empty term map; `n` survives it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    n: usize,
    terms: BTreeMap<Monomial, BigInt>,
}

impl Polynomial {
    pub fn zero(n: usize) -> Self {
        Polynomial { n, terms: BTreeMap::new() }
    }

    pub fn one(n: usize) -> Self {
        Self::monomial(n, 0, vec![0; n], 1)
    }

    /// `coeff * t^t_exp * x^x_exps`.
    ///
    /// # Panics
    /// If `x_exps.len() != n`.
    pub fn monomial(n: usize, t_exp: i64, x_exps: Vec<u32>, coeff: impl Into<BigInt>) -> Self {
        assert_eq!(x_exps.len(), n, "exponent vector length must equal alphabet size");
        let mut p = Self::zero(n);
        p.add_term(Monomial::new(t_exp, x_exps), coeff.into());
        p
    }

    /// `t^k` as a polynomial over `n` variables.
    pub fn t_power(n: usize, k: i64) -> Self {
        Self::monomial(n, k, vec![0; n], 1)
    }

    /// The variable `x_i` (1-based).
    pub fn var(n: usize, i: usize) -> Self {
        assert!(i >= 1 && i <= n, "variable index out of range");
        let mut x = vec![0; n];
        x[i - 1] = 1;
        Self::monomial(n, 0, x, 1)
    }

    /// Builds a polynomial from arbitrary (possibly repeated, possibly zero)
    /// terms, canonicalizing on the way.
    pub fn from_terms<I>(n: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Monomial, BigInt)>,
    {
        let mut p = Self::zero(n);
        for (m, c) in terms {
            if m.n() != n {
                return Err(Error::AlphabetMismatch { left: n, right: m.n() });
            }
            p.add_term(m, c);
        }
        Ok(p)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// Adds `coeff * m` in place. Used by the enumerators as an accumulator.
    pub fn add_term(&mut self, m: Monomial, coeff: BigInt) {
        debug_assert_eq!(m.n(), self.n);
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn check_alphabet(&self, other: &Polynomial) -> Result<()> {
        if self.n != other.n {
            return Err(Error::AlphabetMismatch { left: self.n, right: other.n });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_alphabet(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.try_add(&-other)
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_alphabet(other)?;
        let mut out = Polynomial::zero(self.n);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, k: impl Into<BigInt>) -> Polynomial {
        let k = k.into();
        if k.is_zero() {
            return Polynomial::zero(self.n);
        }
        Polynomial { n: self.n, terms: self.terms.iter().map(|(m, c)| (m.clone(), c * &k)).collect() }
    }

    /// Multiplies by `t^k`.
    pub fn scale_t(&self, k: i64) -> Polynomial {
        Polynomial {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (Monomial { t_exp: m.t_exp + k, x_exps: m.x_exps.clone() }, c.clone()))
                .collect(),
        }
    }

    /// `t -> t^{-1}`.
    pub fn substitute_t_inverse(&self) -> Polynomial {
        Polynomial {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (Monomial { t_exp: -m.t_exp, x_exps: m.x_exps.clone() }, c.clone()))
                .collect(),
        }
    }

    /// Returns `k` with `self == t^k * other`, if one exists.
    ///
    /// Two zero polynomials are related by `k = 0`.
    pub fn equivalence_shift(&self, other: &Polynomial) -> Result<Option<i64>> {
        self.check_alphabet(other)?;
        if self.len() != other.len() {
            return Ok(None);
        }
        let (Some((ma, _)), Some((mb, _))) = (self.terms.iter().next(), other.terms.iter().next()) else {
            return Ok(Some(0));
        };
        // The first term in canonical order has the smallest t-exponent
        // among terms with the same x-part, so shifting preserves position.
        let k = ma.t_exp - mb.t_exp;
        Ok((other.scale_t(k) == *self).then_some(k))
    }

    /// True iff invariant under every adjacent transposition of variables.
    pub fn is_symmetric(&self) -> bool {
        (0..self.n.saturating_sub(1)).all(|i| self.swap_variables(i) == *self)
    }

    /// Exchanges `x_{i+1}` and `x_{i+2}` (0-based adjacent pair `i, i+1`).
    fn swap_variables(&self, i: usize) -> Polynomial {
        Polynomial {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let mut x = m.x_exps.clone();
                    x.swap(i, i + 1);
                    (Monomial { t_exp: m.t_exp, x_exps: x }, c.clone())
                })
                .collect(),
        }
    }

    /// Sets every `x_i = 1`, leaving a Laurent polynomial in `t` (alphabet size 0).
    pub fn x_specialize_one(&self) -> Polynomial {
        let mut out = Polynomial::zero(0);
        for (m, c) in &self.terms {
            out.add_term(Monomial::new(m.t_exp, Vec::new()), c.clone());
        }
        out
    }

    /// Sets `t = 1`, keeping the x-part.
    pub fn t_specialize_one(&self) -> Polynomial {
        let mut out = Polynomial::zero(self.n);
        for (m, c) in &self.terms {
            out.add_term(Monomial::new(0, m.x_exps.clone()), c.clone());
        }
        out
    }

    /// Smallest and largest t-exponent, if nonzero.
    pub fn t_range(&self) -> Option<(i64, i64)> {
        let min = self.terms.keys().map(|m| m.t_exp).min()?;
        let max = self.terms.keys().map(|m| m.t_exp).max()?;
        Some((min, max))
    }

    /// Single term `c * t^k` with no x-part, returned as `(k, c)`.
    pub fn as_t_monomial(&self) -> Option<(i64, &BigInt)> {
        if self.terms.len() != 1 {
            return None;
        }
        let (m, c) = self.terms.iter().next()?;
        m.x_exps.iter().all(|&e| e == 0).then_some((m.t_exp, c))
    }

    /// True iff the polynomial is `±t^k` for some `k` (a unit in `Z[t, t^-1]`).
    pub fn is_t_unit(&self) -> bool {
        self.as_t_monomial().is_some_and(|(_, c)| c.abs().is_one())
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.try_add(rhs).expect("alphabet sizes differ")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.try_sub(rhs).expect("alphabet sizes differ")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.try_mul(rhs).expect("alphabet sizes differ")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial { n: self.n, terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $f(self, rhs: Polynomial) -> Polynomial {
                (&self).$f(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

impl std::iter::Sum for Polynomial {
    /// Panics on an empty iterator since the alphabet size is unknown; use
    /// `fold(Polynomial::zero(n), ..)` when the input may be empty.
    fn sum<I: Iterator<Item = Polynomial>>(mut iter: I) -> Polynomial {
        let first = iter.next().expect("sum of an empty polynomial iterator");
        iter.fold(first, |acc, p| &acc + &p)
    }
}

fn write_t(f: &mut fmt::Formatter<'_>, k: i64) -> fmt::Result {
    match k {
        1 => write!(f, "t"),
        _ => write!(f, "t^{k}"),
    }
}

impl fmt::Display for Polynomial {
    /// Renders terms in canonical order, e.g. `t^2*x1^2*x2 + x1*x2^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            let abs = c.abs();
            if idx == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if negative { '-' } else { '+' })?;
            }
            let mut factors = 0;
            if !abs.is_one() {
                write!(f, "{abs}")?;
                factors += 1;
            }
            if m.t_exp != 0 {
                if factors > 0 {
                    write!(f, "*")?;
                }
                write_t(f, m.t_exp)?;
                factors += 1;
            }
            for (i, &e) in m.x_exps.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if factors > 0 {
                    write!(f, "*")?;
                }
                if e == 1 {
                    write!(f, "x{}", i + 1)?;
                } else {
                    write!(f, "x{}^{}", i + 1, e)?;
                }
                factors += 1;
            }
            if factors == 0 {
                write!(f, "1")?;
            }
        }
        Ok(())
    }
}

// JSON: {"n": int, "terms": [{"t": int, "x": [int,...], "c": int}, ...]}.
// Coefficients that do not fit in i64 are written as decimal strings.

#[derive(Serialize, Deserialize)]
struct TermRepr {
    t: i64,
    x: Vec<u32>,
    c: CoeffRepr,
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum CoeffRepr {
    Small(i64),
    Big(String),
}

#[derive(Serialize, Deserialize)]
struct PolyRepr {
    n: usize,
    terms: Vec<TermRepr>,
}

impl Serialize for Polynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let repr = PolyRepr {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| TermRepr {
                    t: m.t_exp,
                    x: m.x_exps.clone(),
                    c: match c.to_i64() {
                        Some(v) => CoeffRepr::Small(v),
                        None => CoeffRepr::Big(c.to_string()),
                    },
                })
                .collect(),
        };
        repr.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Polynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = PolyRepr::deserialize(deserializer)?;
        let mut terms = Vec::with_capacity(repr.terms.len());
        for t in repr.terms {
            let c = match t.c {
                CoeffRepr::Small(v) => BigInt::from(v),
                CoeffRepr::Big(s) => s.parse().map_err(de::Error::custom)?,
            };
            terms.push((Monomial::new(t.t, t.x), c));
        }
        Polynomial::from_terms(repr.n, terms).map_err(de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(n: usize, i: usize) -> Polynomial {
        Polynomial::var(n, i)
    }

    fn t(n: usize, k: i64) -> Polynomial {
        Polynomial::t_power(n, k)
    }

    #[test]
    fn add_identity_inverse_and_merge() {
        let p = &(&t(2, 1) * &x(2, 1)) + &x(2, 2);
        assert_eq!(&Polynomial::zero(2) + &p, p);
        assert!((&p + &p.scale(-1)).is_zero());
        let tx1 = &t(2, 1) * &x(2, 1);
        assert_eq!(&tx1 + &tx1, Polynomial::monomial(2, 1, vec![1, 0], 2));
    }

    #[test]
    fn mul_identity_and_laurent_cancellation() {
        let p = &x(2, 1) + &t(2, -3);
        assert_eq!(&Polynomial::one(2) * &p, p);
        assert_eq!(&x(2, 1) * &x(2, 2), Polynomial::monomial(2, 0, vec![1, 1], 1));
        let a = &t(2, -1) * &x(2, 1);
        let b = &t(2, 1) * &x(2, 1);
        assert_eq!(&a * &b, Polynomial::monomial(2, 0, vec![2, 0], 1));
    }

    #[test]
    fn alphabet_mismatch_is_an_error() {
        let err = x(2, 1).try_add(&x(3, 1)).unwrap_err();
        assert!(matches!(err, Error::AlphabetMismatch { left: 2, right: 3 }));
        assert!(x(2, 1).try_mul(&x(3, 1)).is_err());
        assert!(x(2, 1).equivalence_shift(&x(3, 1)).is_err());
    }

    #[test]
    fn scale_t_cases() {
        let p = &x(2, 1) + &x(2, 2);
        assert_eq!(p.scale_t(0), p);
        assert_eq!(p.scale_t(2), &(&t(2, 2) * &x(2, 1)) + &(&t(2, 2) * &x(2, 2)));
        assert_eq!(p.scale_t(3).scale_t(-3), p);
    }

    #[test]
    fn equivalence_shift_cases() {
        let q = &(&t(2, 1) * &x(2, 1)) + &(&t(2, -2) * &x(2, 2));
        assert_eq!(q.scale_t(5).equivalence_shift(&q).unwrap(), Some(5));
        assert_eq!(q.equivalence_shift(&q).unwrap(), Some(0));
        assert_eq!(x(2, 1).equivalence_shift(&x(2, 2)).unwrap(), None);
        // same support, different t-profile
        let r = &x(2, 1) + &(&t(2, 1) * &x(2, 2));
        let s = &(&t(2, 1) * &x(2, 1)) + &x(2, 2);
        assert_eq!(r.equivalence_shift(&s).unwrap(), None);
    }

    #[test]
    fn symmetry_cases() {
        assert!((&x(2, 1) + &x(2, 2)).is_symmetric());
        assert!(!x(2, 1).is_symmetric());
        // t(x1^2 + x2^2) + (1 + t) x1 x2
        let sq = &(&x(2, 1) * &x(2, 1)) + &(&x(2, 2) * &x(2, 2));
        let mixed = &x(2, 1) * &x(2, 2);
        let p = &(&t(2, 1) * &sq) + &(&(&Polynomial::one(2) + &t(2, 1)) * &mixed);
        assert!(p.is_symmetric());
        assert!(Polynomial::zero(3).is_symmetric());
    }

    #[test]
    fn t_inverse_cases() {
        let p = &t(2, 1) * &x(2, 1);
        assert_eq!(p.substitute_t_inverse(), &t(2, -1) * &x(2, 1));
        assert_eq!(p.substitute_t_inverse().substitute_t_inverse(), p);
        assert_eq!(Polynomial::one(2).substitute_t_inverse(), Polynomial::one(2));
    }

    #[test]
    fn display_in_canonical_order() {
        let a = Polynomial::monomial(2, 2, vec![2, 1], 1);
        let b = Polynomial::monomial(2, 0, vec![1, 2], 1);
        assert_eq!((&b + &a).to_string(), "t^2*x1^2*x2 + x1*x2^2");
        let c = Polynomial::monomial(2, -1, vec![0, 0], -3);
        assert_eq!(c.to_string(), "-3*t^-1");
        assert_eq!(Polynomial::zero(1).to_string(), "0");
        assert_eq!((&Polynomial::one(1) - &t(1, 1)).to_string(), "1 - t");
    }

    #[test]
    fn json_round_trip_and_big_coefficients() {
        let big: BigInt = "123456789012345678901234567890".parse().unwrap();
        let p = &Polynomial::monomial(2, -1, vec![1, 0], big) + &Polynomial::monomial(2, 0, vec![0, 1], 7);
        let s = serde_json::to_string(&p).unwrap();
        assert!(s.starts_with("{\"n\":2,\"terms\":["));
        let back: Polynomial = serde_json::from_str(&s).unwrap();
        assert_eq!(back, p);
        let zero: Polynomial = serde_json::from_str(r#"{"n":3,"terms":[]}"#).unwrap();
        assert_eq!(zero, Polynomial::zero(3));
        // duplicate and zero terms are canonicalized on input
        let dup: Polynomial = serde_json::from_str(
            r#"{"n":1,"terms":[{"t":0,"x":[1],"c":2},{"t":0,"x":[1],"c":-2},{"t":1,"x":[0],"c":0}]}"#,
        )
        .unwrap();
        assert!(dup.is_zero());
        assert!(serde_json::from_str::<Polynomial>(r#"{"n":2,"terms":[{"t":0,"x":[1],"c":1}]}"#).is_err());
    }
}
