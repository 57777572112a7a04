//! Sparse polynomials in the generators `Q1, Q2, Q3, ...` over the rationals.
//!
//! Elements of the ring `R = Λ*[Q1]` and of its extension by `Q2^{±1/2}`.
//! Every exponent is stored doubled so that half-integer powers of `Q2` stay
//! exact; the doubled exponent is odd only on `Q2`, and only `Q2` may carry a
//! negative power. Because of that rule the weight `Σ k·e_k` of every monomial
//! is an integer.

mod eval;
mod text;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub use eval::{beta, eval, eval_qk, eval_with, generator_values, ScaledGenerators};
pub use text::parse;

pub type Rational = BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// A product of generator powers. Pairs are `(k, 2·e_k)`, sorted by `k`,
/// with no zero exponents and no `k = 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial {
    powers: Vec<(u32, i64)>,
}

impl Monomial {
    pub fn one() -> Self {
        Self { powers: Vec::new() }
    }

    /// `Q_k`; `Q_0` is the unit.
    pub fn generator(k: u32) -> Self {
        Self::one().with_power(k, 2)
    }

    /// `Q2^{e/2}`.
    pub fn q2_half_power(doubled: i64) -> Self {
        Self::one().with_power(2, doubled)
    }

    /// Builds a monomial from `(k, 2·e_k)` pairs, multiplying repeated
    /// generators together.
    pub fn from_doubled(pairs: &[(u32, i64)]) -> Result<Self> {
        let mut m = Self::one();
        for &(k, d) in pairs {
            m = m.with_power(k, d);
        }
        m.check()?;
        Ok(m)
    }

    /// Builds `Π Q_{k_i}` from a list of indices, e.g. the parts of a partition.
    pub fn product_of(indices: impl IntoIterator<Item = u32>) -> Self {
        indices
            .into_iter()
            .fold(Self::one(), |m, k| m.with_power(k, 2))
    }

    fn check(&self) -> Result<()> {
        for &(k, d) in &self.powers {
            if k != 2 && d % 2 != 0 {
                return Err(Error::HalfExponent(k));
            }
            if k != 2 && d < 0 {
                return Err(Error::NegativeExponent(k));
            }
        }
        Ok(())
    }

    /// Multiplies in `Q_k^{doubled/2}` without validating the half-exponent rule.
    fn with_power(mut self, k: u32, doubled: i64) -> Self {
        if k == 0 || doubled == 0 {
            return self;
        }
        match self.powers.binary_search_by_key(&k, |&(i, _)| i) {
            Ok(pos) => {
                self.powers[pos].1 += doubled;
                if self.powers[pos].1 == 0 {
                    self.powers.remove(pos);
                }
            }
            Err(pos) => self.powers.insert(pos, (k, doubled)),
        }
        self
    }

    pub fn is_one(&self) -> bool {
        self.powers.is_empty()
    }

    /// `(k, 2·e_k)` pairs in increasing `k`.
    pub fn doubled_powers(&self) -> &[(u32, i64)] {
        &self.powers
    }

    pub fn doubled_exponent(&self, k: u32) -> i64 {
        self.powers
            .binary_search_by_key(&k, |&(i, _)| i)
            .map(|pos| self.powers[pos].1)
            .unwrap_or(0)
    }

    pub fn exponent(&self, k: u32) -> Rational {
        rat(self.doubled_exponent(k), 2)
    }

    pub fn contains(&self, k: u32) -> bool {
        self.doubled_exponent(k) != 0
    }

    pub fn weight(&self) -> i64 {
        self.powers.iter().map(|&(k, d)| k as i64 * d).sum::<i64>() / 2
    }

    /// True for monomials with non-negative integer exponents only.
    pub fn is_polynomial(&self) -> bool {
        self.powers.iter().all(|&(_, d)| d >= 0 && d % 2 == 0)
    }

    pub fn max_generator(&self) -> u32 {
        self.powers.last().map(|&(k, _)| k).unwrap_or(0)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Vec::with_capacity(self.powers.len() + other.powers.len());
        let (mut i, mut j) = (0, 0);
        while i < self.powers.len() && j < other.powers.len() {
            let (a, b) = (self.powers[i], other.powers[j]);
            match a.0.cmp(&b.0) {
                std::cmp::Ordering::Less => {
                    out.push(a);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(b);
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    if a.1 + b.1 != 0 {
                        out.push((a.0, a.1 + b.1));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.powers[i..]);
        out.extend_from_slice(&other.powers[j..]);
        Self { powers: out }
    }

    /// `∂^times/∂Q_k^times` of this monomial as `(coefficient, monomial)`, or
    /// `None` when the derivative vanishes.
    pub fn derivative(&self, k: u32, times: u32) -> Option<(Rational, Monomial)> {
        if times == 0 {
            return Some((Rational::one(), self.clone()));
        }
        let d = self.doubled_exponent(k);
        if d == 0 {
            return None;
        }
        if d > 0 && d % 2 == 0 && (d / 2) < times as i64 {
            return None;
        }
        let mut coeff = Rational::one();
        let mut e = rat(d, 2);
        for _ in 0..times {
            coeff *= &e;
            e -= Rational::one();
        }
        if coeff.is_zero() {
            return None;
        }
        Some((coeff, self.clone().with_power(k, -2 * times as i64)))
    }

    /// Drops `Q_k` entirely, returning the remaining factor and the doubled
    /// exponent that was removed.
    pub fn split_off(&self, k: u32) -> (Monomial, i64) {
        let d = self.doubled_exponent(k);
        (self.clone().with_power(k, -d), d)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&text::format_monomial(self))
    }
}

/// A finite `ℚ`-linear combination of monomials. Zero coefficients are never
/// stored, so structural equality is ring equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct SSPoly {
    terms: BTreeMap<Monomial, Rational>,
}

impl SSPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::term(c, Monomial::one())
    }

    pub fn generator(k: u32) -> Self {
        Self::term(Rational::one(), Monomial::generator(k))
    }

    pub fn monomial(m: Monomial) -> Self {
        Self::term(Rational::one(), m)
    }

    pub fn term(c: Rational, m: Monomial) -> Self {
        let mut p = Self::zero();
        p.add_term(m, c);
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut p = Self::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
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
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Monomial, Rational)> {
        self.terms.into_iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        Self {
            terms: self.terms.iter().map(|(n, a)| (n.mul(m), a.clone())).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Applies `f` to every term and sums the results.
    pub fn map_terms(&self, mut f: impl FnMut(&Monomial, &Rational, &mut SSPoly)) -> SSPoly {
        let mut out = SSPoly::zero();
        for (m, c) in &self.terms {
            f(m, c, &mut out);
        }
        out
    }

    pub fn filter(&self, mut keep: impl FnMut(&Monomial) -> bool) -> SSPoly {
        Self {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| keep(m))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Weight of a homogeneous element; `None` for zero or mixed weights.
    pub fn homogeneous_weight(&self) -> Option<i64> {
        let mut weights = self.terms.keys().map(Monomial::weight);
        let w = weights.next()?;
        weights.all(|v| v == w).then_some(w)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.homogeneous_weight().is_some()
    }

    /// Splits into weight-homogeneous components. Every monomial has an
    /// integral weight under the `Q2`-only half-exponent rule, so this never
    /// fails.
    pub fn weight_components(&self) -> BTreeMap<i64, SSPoly> {
        let mut out: BTreeMap<i64, SSPoly> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(m.weight()).or_default().add_term(m.clone(), c.clone());
        }
        out
    }

    /// Sets `Q1 = 0`.
    pub fn pr(&self) -> SSPoly {
        self.filter(|m| !m.contains(1))
    }

    pub fn contains_q1(&self) -> bool {
        self.terms.keys().any(|m| m.contains(1))
    }

    /// True when every exponent is a non-negative integer.
    pub fn is_polynomial(&self) -> bool {
        self.terms.keys().all(Monomial::is_polynomial)
    }

    /// True for elements of `Λ* = ℚ[Q2, Q3, ...]`.
    pub fn is_lambda_star(&self) -> bool {
        self.is_polynomial() && !self.contains_q1()
    }

    pub fn max_generator(&self) -> u32 {
        self.terms.keys().map(Monomial::max_generator).max().unwrap_or(0)
    }

    /// Exactly divisible by `Q2` inside the polynomial ring.
    pub fn divisible_by_q2(&self) -> bool {
        self.terms.keys().all(|m| m.doubled_exponent(2) >= 2)
    }

    pub fn require_lambda_star(&self) -> Result<()> {
        if !self.is_polynomial() {
            return Err(Error::NotPolynomial(self.to_string()));
        }
        if self.contains_q1() {
            return Err(Error::ContainsQ1(self.to_string()));
        }
        Ok(())
    }

    pub fn format(&self) -> String {
        text::format_poly(self)
    }
}

impl fmt::Display for SSPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&text::format_poly(self))
    }
}

impl std::str::FromStr for SSPoly {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse(s)
    }
}

impl From<Monomial> for SSPoly {
    fn from(m: Monomial) -> Self {
        Self::monomial(m)
    }
}

impl From<Rational> for SSPoly {
    fn from(c: Rational) -> Self {
        Self::constant(c)
    }
}

impl AddAssign<&SSPoly> for SSPoly {
    fn add_assign(&mut self, rhs: &SSPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl SubAssign<&SSPoly> for SSPoly {
    fn sub_assign(&mut self, rhs: &SSPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), -c);
        }
    }
}

impl Add<&SSPoly> for &SSPoly {
    type Output = SSPoly;
    fn add(self, rhs: &SSPoly) -> SSPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&SSPoly> for &SSPoly {
    type Output = SSPoly;
    fn sub(self, rhs: &SSPoly) -> SSPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul<&SSPoly> for &SSPoly {
    type Output = SSPoly;
    fn mul(self, rhs: &SSPoly) -> SSPoly {
        let mut out = SSPoly::zero();
        for (m, a) in &self.terms {
            for (n, b) in &rhs.terms {
                out.add_term(m.mul(n), a * b);
            }
        }
        out
    }
}

impl Neg for &SSPoly {
    type Output = SSPoly;
    fn neg(self) -> SSPoly {
        self.scale(&-Rational::one())
    }
}

macro_rules! forward_owned {
    ($($tr:ident $f:ident),*) => {$(
        impl $tr<SSPoly> for SSPoly {
            type Output = SSPoly;
            fn $f(self, rhs: SSPoly) -> SSPoly { (&self).$f(&rhs) }
        }
        impl $tr<&SSPoly> for SSPoly {
            type Output = SSPoly;
            fn $f(self, rhs: &SSPoly) -> SSPoly { (&self).$f(rhs) }
        }
        impl $tr<SSPoly> for &SSPoly {
            type Output = SSPoly;
            fn $f(self, rhs: SSPoly) -> SSPoly { self.$f(&rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for SSPoly {
    type Output = SSPoly;
    fn neg(self) -> SSPoly {
        -&self
    }
}

/// Formats a rational as `n` or `n/d`.
pub fn format_rational(c: &Rational) -> String {
    c.to_string()
}


#[cfg(test)]
mod tests {
    use super::*;

    fn q(k: u32) -> SSPoly {
        SSPoly::generator(k)
    }

    #[test]
    fn arithmetic_examples() {
        assert!((q(2) + q(2).scale(&int(-1))).is_zero());
        let half = SSPoly::monomial(Monomial::q2_half_power(1));
        assert_eq!(&half * &half, q(2));
        assert_eq!((q(2) + q(3)) * (q(2) - q(3)), q(2).pow(2) - q(3).pow(2));
    }

    #[test]
    fn monomial_rules() {
        assert_eq!(Monomial::from_doubled(&[(3, 1)]), Err(Error::HalfExponent(3)));
        assert_eq!(Monomial::from_doubled(&[(4, -2)]), Err(Error::NegativeExponent(4)));
        assert!(Monomial::from_doubled(&[(2, -3)]).is_ok());
        assert_eq!(Monomial::from_doubled(&[(0, 4)]).unwrap(), Monomial::one());
        assert_eq!(Monomial::q2_half_power(3).weight(), 3);
        assert_eq!(Monomial::product_of([4, 3, 3]).weight(), 10);
        let m = Monomial::product_of([2, 2]);
        assert_eq!(m.derivative(2, 2), Some((int(2), Monomial::one())));
        assert_eq!(m.derivative(2, 3), None);
        assert_eq!(
            Monomial::q2_half_power(3).derivative(2, 1),
            Some((rat(3, 2), Monomial::q2_half_power(1)))
        );
    }

    #[test]
    fn weights_and_projection() {
        let h4 = q(2).pow(2) + q(4).scale(&int(2));
        let comps = h4.weight_components();
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[&4], h4);

        let f = SSPoly::one() + q(3);
        let comps = f.weight_components();
        assert_eq!(comps[&0], SSPoly::one());
        assert_eq!(comps[&3], q(3));

        let k1 = SSPoly::monomial(Monomial::q2_half_power(3));
        assert_eq!(k1.weight_components()[&3], k1);

        assert_eq!((q(1) * q(3) + q(4)).pr(), q(4));
        assert_eq!(q(2).pow(2).pr(), q(2).pow(2));
        assert!(q(1).pow(2).pr().is_zero());
    }
}
