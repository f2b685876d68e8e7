//! Sparse multivariate polynomials with arbitrary-precision integer
//! coefficients.
//!
//! Terms live in a `BTreeMap` keyed by [`Monomial`], with zero coefficients
//! never stored, so structural equality is polynomial equality. There is no
//! rational arithmetic: division is [`exact_div`], which fails loudly with
//! the remainder when the divisor does not divide.

mod enumerator;
mod variable;

pub use enumerator::{enumerator, enumerator_unsigned, StatWeightSpec};
pub use variable::Variable;

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// A product of variables with positive exponents, sorted by variable.
///
/// Ordered lexicographically with earlier variables dominating (`t > q > …`
/// once exponents are compared), which is the monomial order used by
/// [`exact_div`].
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<(Variable, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(v: Variable) -> Self {
        Monomial(alloc::vec![(v, 1)])
    }

    /// Builds from arbitrary `(variable, exponent)` pairs, merging repeats and
    /// dropping zero exponents.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (Variable, u32)>) -> Self {
        let mut map: BTreeMap<Variable, u32> = BTreeMap::new();
        for (v, e) in pairs {
            *map.entry(v).or_default() += e;
        }
        Monomial(map.into_iter().filter(|&(_, e)| e > 0).collect())
    }

    pub fn factors(&self) -> &[(Variable, u32)] {
        &self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&(_, e)| e).sum()
    }

    pub fn exponent(&self, v: Variable) -> u32 {
        self.0
            .binary_search_by(|(w, _)| w.cmp(&v))
            .map(|i| self.0[i].1)
            .unwrap_or(0)
    }

    fn merge_with(&self, other: &Monomial, combine: impl Fn(u32, u32) -> Option<u32>) -> Option<Monomial> {
        let (a, b) = (&self.0, &other.0);
        let (mut i, mut j) = (0, 0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        while i < a.len() || j < b.len() {
            let (v, ea, eb) = match (a.get(i), b.get(j)) {
                (Some(&(va, ea)), Some(&(vb, eb))) => match va.cmp(&vb) {
                    Ordering::Equal => {
                        i += 1;
                        j += 1;
                        (va, ea, eb)
                    }
                    Ordering::Less => {
                        i += 1;
                        (va, ea, 0)
                    }
                    Ordering::Greater => {
                        j += 1;
                        (vb, 0, eb)
                    }
                },
                (Some(&(va, ea)), None) => {
                    i += 1;
                    (va, ea, 0)
                }
                (None, Some(&(vb, eb))) => {
                    j += 1;
                    (vb, 0, eb)
                }
                (None, None) => unreachable!(),
            };
            let e = combine(ea, eb)?;
            if e > 0 {
                out.push((v, e));
            }
        }
        Some(Monomial(out))
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        self.merge_with(other, |a, b| Some(a + b)).expect("addition never fails")
    }

    /// `self / other` when `other` divides `self`.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        self.merge_with(other, |a, b| a.checked_sub(b))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        let (a, b) = (&self.0, &other.0);
        for k in 0.. {
            match (a.get(k), b.get(k)) {
                (None, None) => return Ordering::Equal,
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (Some(&(va, ea)), Some(&(vb, eb))) => {
                    if va != vb {
                        // the side holding the earlier variable has the larger exponent there
                        return vb.cmp(&va);
                    }
                    if ea != eb {
                        return ea.cmp(&eb);
                    }
                }
            }
        }
        unreachable!()
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (i, (v, e)) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            write!(f, "{v}")?;
            if *e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Poly {
    terms: BTreeMap<Monomial, BigInt>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn one() -> Self {
        Poly::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        Poly::term(BigInt::from(c), Monomial::one())
    }

    pub fn var(v: Variable) -> Self {
        Poly::term(BigInt::one(), Monomial::var(v))
    }

    pub fn term(coeff: BigInt, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(m, coeff);
        }
        Poly { terms }
    }

    /// `coeff · ∏ v^e`.
    pub fn monomial(coeff: i64, pairs: impl IntoIterator<Item = (Variable, u32)>) -> Self {
        Poly::term(BigInt::from(coeff), Monomial::from_pairs(pairs))
    }

    pub fn from_terms(pairs: impl IntoIterator<Item = (Monomial, BigInt)>) -> Self {
        let mut p = Poly::zero();
        for (m, c) in pairs {
            p.add_term(m, c);
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            alloc::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    /// Terms in monomial order (ascending).
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// Terms in printing order: ascending total degree, then descending
    /// monomial order within a degree.
    pub fn terms_graded(&self) -> Vec<(&Monomial, &BigInt)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| a.0.degree().cmp(&b.0.degree()).then_with(|| b.0.cmp(a.0)));
        v
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &BigInt)> {
        self.terms.last_key_value()
    }

    pub fn variables(&self) -> Vec<Variable> {
        let mut v: Vec<Variable> = self
            .terms
            .keys()
            .flat_map(|m| m.0.iter().map(|&(x, _)| x))
            .collect();
        v.sort();
        v.dedup();
        v
    }

    pub fn pow(&self, k: u32) -> Poly {
        let mut acc = Poly::one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn scale(&self, c: i64) -> Poly {
        let c = BigInt::from(c);
        Poly::from_terms(self.terms.iter().map(|(m, a)| (m.clone(), a * &c)))
    }

    /// Image under the ring homomorphism sending each variable `v` to
    /// `image(v)`, or to itself when `image` returns `None`.
    pub fn substitute(&self, image: impl Fn(Variable) -> Option<Poly>) -> Poly {
        let mut cache: BTreeMap<Variable, Poly> = BTreeMap::new();
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let mut t = Poly::term(c.clone(), Monomial::one());
            let mut kept = Vec::new();
            for &(v, e) in &m.0 {
                let img = cache.entry(v).or_insert_with(|| image(v).unwrap_or_else(|| Poly::var(v)));
                if *img == Poly::var(v) {
                    kept.push((v, e));
                } else {
                    t = &t * &img.pow(e);
                }
            }
            if !kept.is_empty() {
                t = &t * &Poly::term(BigInt::one(), Monomial(kept));
            }
            out += t;
        }
        out
    }

    pub fn substitute_map(&self, bindings: &BTreeMap<Variable, Poly>) -> Poly {
        self.substitute(|v| bindings.get(&v).cloned())
    }

    /// Value at every variable equal to 1, i.e. the coefficient sum.
    pub fn eval_ones(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// The constant when the polynomial has no variables.
    pub fn as_constant(&self) -> Option<BigInt> {
        match self.terms.len() {
            0 => Some(BigInt::zero()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }
}

/// `1 + base + base^2 + … + base^(n-1)`; zero for `n = 0`.
pub fn q_bracket(n: u32, base: &Poly) -> Poly {
    let mut sum = Poly::zero();
    let mut power = Poly::one();
    for _ in 0..n {
        sum += power.clone();
        power = &power * base;
    }
    sum
}

/// Quotient of an exact division. Multivariate division with the monomial
/// order of [`Monomial`]; any leading term that cannot be cancelled goes to
/// the remainder, and a nonzero remainder is an error carrying it.
pub fn exact_div(p: &Poly, d: &Poly) -> Result<Poly> {
    let (lm_d, lc_d) = match d.leading_term() {
        Some((m, c)) => (m.clone(), c.clone()),
        None => return Err(Error::DivisionByZero),
    };
    let mut rest = p.clone();
    let mut quotient = Poly::zero();
    let mut remainder = Poly::zero();
    while let Some((m, c)) = rest.terms.pop_last() {
        let step = m
            .checked_div(&lm_d)
            .filter(|_| (&c % &lc_d).is_zero())
            .map(|qm| Poly::term(&c / &lc_d, qm));
        match step {
            Some(t) => {
                // the popped leading term cancels against lt(t·d)
                let mut td = &t * d;
                td.terms.pop_last();
                rest -= td;
                quotient += t;
            }
            None => remainder.add_term(m, c),
        }
    }
    if remainder.is_zero() {
        Ok(quotient)
    } else {
        Err(Error::InexactDivision { remainder })
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms_graded().into_iter().enumerate() {
            let negative = c.is_negative();
            let abs = c.abs();
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

impl From<Variable> for Poly {
    fn from(v: Variable) -> Self {
        Poly::var(v)
    }
}

impl From<i64> for Poly {
    fn from(c: i64) -> Self {
        Poly::constant(c)
    }
}

impl<'a> Add<&'a Poly> for &Poly {
    type Output = Poly;
    fn add(self, rhs: &'a Poly) -> Poly {
        let mut out = self.clone();
        out += rhs.clone();
        out
    }
}

impl<'a> Sub<&'a Poly> for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &'a Poly) -> Poly {
        let mut out = self.clone();
        out -= rhs.clone();
        out
    }
}

impl<'a> Mul<&'a Poly> for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &'a Poly) -> Poly {
        let mut out = Poly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(mut self) -> Poly {
        for c in self.terms.values_mut() {
            *c = -core::mem::take(c);
        }
        self
    }
}

impl AddAssign for Poly {
    fn add_assign(&mut self, rhs: Poly) {
        for (m, c) in rhs.terms {
            self.add_term(m, c);
        }
    }
}

impl SubAssign for Poly {
    fn sub_assign(&mut self, rhs: Poly) {
        for (m, c) in rhs.terms {
            self.add_term(m, -c);
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr<Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly { (&self).$method(&rhs) }
        }
        impl<'a> $tr<&'a Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: &'a Poly) -> Poly { (&self).$method(rhs) }
        }
        impl $tr<Poly> for &Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly { self.$method(&rhs) }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul);

impl core::iter::Sum for Poly {
    fn sum<I: Iterator<Item = Poly>>(iter: I) -> Poly {
        iter.fold(Poly::zero(), |mut acc, p| {
            acc += p;
            acc
        })
    }
}

impl core::iter::Product for Poly {
    fn product<I: Iterator<Item = Poly>>(iter: I) -> Poly {
        iter.fold(Poly::one(), |acc, p| &acc * &p)
    }
}
