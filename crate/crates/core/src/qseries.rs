//! Truncated power series in `q` with exact rational coefficients, the
//! Eisenstein series and the q-bracket
//! `⟨f⟩_q = Σ_λ f(λ) q^{|λ|} / Σ_λ q^{|λ|}`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::partitions::{count_partitions, enumerate_partitions};
use crate::ssym::{Rational, SSPoly, ScaledGenerators};

pub const DEFAULT_ORDER: usize = 30;

/// `c_0 + c_1 q + ... + c_N q^N + O(q^{N+1})`.
///
/// Equality compares coefficients up to the smaller of the two orders.
#[derive(Debug, Clone, Eq)]
pub struct QSeries {
    coeffs: Vec<Rational>,
}

impl QSeries {
    /// Series known through `q^{coeffs.len() - 1}`; `coeffs` must be non-empty.
    pub fn new(coeffs: Vec<Rational>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least the constant term");
        Self { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self::new(vec![Rational::zero(); order + 1])
    }

    pub fn constant(c: Rational, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    pub fn one(order: usize) -> Self {
        Self::constant(Rational::one(), order)
    }

    /// `q^k` to the given order.
    pub fn monomial(k: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if k <= order {
            s.coeffs[k] = Rational::one();
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> &Rational {
        &self.coeffs[n]
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::new(self.coeffs[..=order.min(self.order())].to_vec())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Exact inverse by recursive division; the constant term must be nonzero.
    pub fn inverse(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(Error::Invalid("series with zero constant term is not invertible".into()));
        }
        let inv0 = c0.recip();
        let mut out: Vec<Rational> = Vec::with_capacity(self.coeffs.len());
        out.push(inv0.clone());
        for n in 1..self.coeffs.len() {
            let acc = (1..=n).fold(Rational::zero(), |acc, j| acc + &self.coeffs[j] * &out[n - j]);
            out.push(-acc * &inv0);
        }
        Ok(Self::new(out))
    }
}

impl PartialEq for QSeries {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs.iter().zip(&other.coeffs).all(|(a, b)| a == b)
    }
}

impl Add<&QSeries> for &QSeries {
    type Output = QSeries;
    fn add(self, rhs: &QSeries) -> QSeries {
        QSeries::new(self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect())
    }
}

impl Sub<&QSeries> for &QSeries {
    type Output = QSeries;
    fn sub(self, rhs: &QSeries) -> QSeries {
        QSeries::new(self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect())
    }
}

impl Mul<&QSeries> for &QSeries {
    type Output = QSeries;
    fn mul(self, rhs: &QSeries) -> QSeries {
        let order = self.order().min(rhs.order());
        let mut out = vec![Rational::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(order + 1 - i) {
                out[i + j] += a * b;
            }
        }
        QSeries::new(out)
    }
}

impl Neg for &QSeries {
    type Output = QSeries;
    fn neg(self) -> QSeries {
        QSeries::new(self.coeffs.iter().map(|a| -a).collect())
    }
}

impl Add for QSeries {
    type Output = QSeries;
    fn add(self, rhs: QSeries) -> QSeries {
        &self + &rhs
    }
}

impl Sub for QSeries {
    type Output = QSeries;
    fn sub(self, rhs: QSeries) -> QSeries {
        &self - &rhs
    }
}

impl Mul for QSeries {
    type Output = QSeries;
    fn mul(self, rhs: QSeries) -> QSeries {
        &self * &rhs
    }
}

impl fmt::Display for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (n, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            let a = c.abs();
            let body = match n {
                0 => a.to_string(),
                _ => {
                    let qpow = if n == 1 { "q".to_string() } else { format!("q^{n}") };
                    if a.is_one() {
                        qpow
                    } else {
                        format!("{a}*{qpow}")
                    }
                }
            };
            match (first, sign) {
                (true, "-") => write!(f, "-{body}")?,
                (true, _) => write!(f, "{body}")?,
                (false, s) => write!(f, " {s} {body}")?,
            }
            first = false;
        }
        if first {
            write!(f, "O(q^{})", self.order() + 1)
        } else {
            write!(f, " + O(q^{})", self.order() + 1)
        }
    }
}

impl FromStr for QSeries {
    type Err = Error;

    /// Parses the form produced by `Display`, e.g. `1 - 24*q - 72*q^2 + O(q^3)`.
    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let syntax = |msg: String| Error::Syntax { pos: 0, msg };
        let (body, big_o) = match compact.rfind("O(q^") {
            Some(i) => (&compact[..i], &compact[i..]),
            None => return Err(syntax("missing O(q^N) truncation term".into())),
        };
        let bound: usize = big_o
            .strip_prefix("O(q^")
            .and_then(|r| r.strip_suffix(')'))
            .and_then(|r| r.parse().ok())
            .filter(|&b: &usize| b >= 1)
            .ok_or_else(|| syntax(format!("bad truncation term {big_o:?}")))?;
        let mut series = Self::zero(bound - 1);
        let body = body.trim_end_matches('+');
        let mut terms = Vec::new();
        let mut start = 0;
        for (i, ch) in body.char_indices() {
            if (ch == '+' || ch == '-') && i > 0 {
                terms.push(&body[start..i]);
                start = i;
            }
        }
        if start < body.len() {
            terms.push(&body[start..]);
        }
        for t in terms {
            let (neg, t) = match t.as_bytes().first() {
                Some(b'-') => (true, &t[1..]),
                Some(b'+') => (false, &t[1..]),
                _ => (false, t),
            };
            let (coeff_text, power) = if let Some(idx) = t.find('q') {
                let power = match &t[idx + 1..] {
                    "" => 1,
                    rest => rest
                        .strip_prefix('^')
                        .and_then(|r| r.parse().ok())
                        .ok_or_else(|| syntax(format!("bad power in {t:?}")))?,
                };
                (t[..idx].trim_end_matches('*'), power)
            } else {
                (t, 0usize)
            };
            let c: Rational = if coeff_text.is_empty() {
                Rational::one()
            } else {
                parse_rational(coeff_text).ok_or_else(|| syntax(format!("bad coefficient {coeff_text:?}")))?
            };
            if power >= bound {
                return Err(syntax(format!("term q^{power} beyond O(q^{bound})")));
            }
            series.coeffs[power] += if neg { -c } else { c };
        }
        Ok(series)
    }
}

pub fn parse_rational(s: &str) -> Option<Rational> {
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.parse::<BigInt>().ok()?, d.parse::<BigInt>().ok()?),
        None => (s.parse::<BigInt>().ok()?, BigInt::one()),
    };
    (!d.is_zero()).then(|| Rational::new(n, d))
}

/// `Σ_{n ≤ N} p(n) q^n`.
pub fn partition_gf(order: usize) -> QSeries {
    QSeries::new(
        (0..=order)
            .map(|n| Rational::from_integer(BigInt::from(count_partitions(n as i64))))
            .collect(),
    )
}

/// `σ_k(n)` by trial division.
pub fn sigma(k: u32, n: u64) -> BigInt {
    let mut acc = BigInt::zero();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            acc += BigInt::from(d).pow(k);
            let e = n / d;
            if e != d {
                acc += BigInt::from(e).pow(k);
            }
        }
        d += 1;
    }
    acc
}

/// `P = E_2`, `Q = E_4`, `R = E_6` in Ramanujan's normalisation.
pub fn eisenstein(k: u32, order: usize) -> Result<QSeries> {
    let factor: i64 = match k {
        2 => -24,
        4 => 240,
        6 => -504,
        _ => return Err(Error::Invalid(format!("Eisenstein series of weight {k} not supported"))),
    };
    let mut coeffs = vec![Rational::one()];
    coeffs.extend((1..=order as u64).map(|n| Rational::from_integer(sigma(k - 1, n) * factor)));
    Ok(QSeries::new(coeffs))
}

/// `D = q d/dq`.
pub fn d_series(a: &QSeries) -> QSeries {
    QSeries::new(
        a.coeffs
            .iter()
            .enumerate()
            .map(|(n, c)| c * Rational::from_integer(BigInt::from(n)))
            .collect(),
    )
}

/// `Σ_{|λ| ≤ N} f(λ) q^{|λ|}` for `f` in the polynomial ring.
pub fn partition_sum(f: &SSPoly, order: usize) -> Result<QSeries> {
    if !f.is_polynomial() {
        return Err(Error::NotPolynomial(f.to_string()));
    }
    let f = f.pr();
    let gens = ScaledGenerators::new(f.max_generator());
    // each monomial as (generator, exponent) pairs and its coefficient over
    // the product of the generator scales
    let terms: Vec<(Vec<(usize, u32)>, Rational)> = f
        .terms()
        .map(|(m, c)| {
            let powers: Vec<(usize, u32)> = m
                .doubled_powers()
                .iter()
                .map(|&(k, d)| (k as usize, (d / 2) as u32))
                .collect();
            let scale = powers
                .iter()
                .fold(BigInt::one(), |acc, &(k, e)| acc * gens.scales()[k].pow(e));
            (powers, c / Rational::from_integer(scale))
        })
        .collect();
    let coeffs = (0..=order as u32)
        .into_par_iter()
        .map(|n| {
            let mut sums = vec![BigInt::zero(); terms.len()];
            for l in enumerate_partitions(n) {
                let values = gens.numerators(&l);
                for (sum, (powers, _)) in sums.iter_mut().zip(&terms) {
                    let v = powers
                        .iter()
                        .fold(BigInt::one(), |acc, &(k, e)| acc * values[k].pow(e));
                    *sum += v;
                }
            }
            terms
                .iter()
                .zip(sums)
                .fold(Rational::zero(), |acc, ((_, c), s)| acc + c * Rational::from_integer(s))
        })
        .collect();
    Ok(QSeries::new(coeffs))
}

/// The q-bracket `⟨f⟩_q` to order `N`.
pub fn q_bracket(f: &SSPoly, order: usize) -> Result<QSeries> {
    let numerator = partition_sum(f, order)?;
    Ok(&numerator * &partition_gf(order).inverse()?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ssym::{int, parse, rat};

    fn s(v: &[i64]) -> QSeries {
        QSeries::new(v.iter().map(|&x| int(x)).collect())
    }

    #[test]
    fn arithmetic() {
        assert!((&s(&[1, 1]) - &s(&[1, 1])).is_zero());
        let geometric = s(&[1; 11]);
        assert_eq!(&s(&[1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0]) * &geometric, QSeries::one(10));
        assert_eq!(s(&[2, 4]).scale(&rat(1, 2)), s(&[1, 2]));
        let prod = &s(&[1, 2, 3]) * &s(&[1, 1]);
        assert_eq!(prod.order(), 1);
        assert_eq!(prod, s(&[1, 3]));
    }

    #[test]
    fn equality_up_to_common_order() {
        assert_eq!(s(&[1, 2, 3]), s(&[1, 2]));
        assert_ne!(s(&[1, 2, 3]), s(&[1, 3]));
    }

    #[test]
    fn generating_function() {
        assert_eq!(partition_gf(3).coeffs(), s(&[1, 1, 2, 3]).coeffs());
        assert_eq!(partition_gf(0).coeffs(), s(&[1]).coeffs());
        assert_eq!(partition_gf(10).coeff(10), &int(42));
        let n = 25;
        let mut euler = QSeries::one(n);
        for k in 1..=n {
            let mut factor = QSeries::one(n);
            factor.coeffs[k] = int(-1);
            euler = &euler * &factor;
        }
        assert_eq!((&partition_gf(n) * &euler).coeffs(), QSeries::one(n).coeffs());
    }

    #[test]
    fn eisenstein_expansions() {
        assert_eq!(eisenstein(2, 3).unwrap().coeffs(), s(&[1, -24, -72, -96]).coeffs());
        assert_eq!(eisenstein(4, 2).unwrap().coeffs(), s(&[1, 240, 2160]).coeffs());
        assert_eq!(eisenstein(6, 2).unwrap().coeffs(), s(&[1, -504, -16632]).coeffs());
        assert!(eisenstein(8, 2).is_err());
        assert_eq!(sigma(1, 12), BigInt::from(28));
    }

    #[test]
    fn derivation() {
        assert!(d_series(&QSeries::one(5)).is_zero());
        assert_eq!(d_series(&QSeries::monomial(1, 5)), QSeries::monomial(1, 5));
        // log-derivative of Π(1-q^n)^{-1} is Σ σ_1(n) q^n = (1 - P)/24
        let n = 20;
        let gf = partition_gf(n);
        let lhs = &d_series(&gf) * &gf.inverse().unwrap();
        let rhs = (&QSeries::one(n) - &eisenstein(2, n).unwrap()).scale(&rat(1, 24));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn brackets() {
        let n = 12;
        assert_eq!(q_bracket(&SSPoly::one(), n).unwrap().coeffs(), QSeries::one(n).coeffs());
        let q2 = q_bracket(&SSPoly::generator(2), n).unwrap();
        assert_eq!(q2, eisenstein(2, n).unwrap().scale(&rat(-1, 24)));
        assert!(q_bracket(&parse("-9/4*Q3").unwrap(), n).unwrap().is_zero());
        assert!(q_bracket(&parse("Q1*Q4").unwrap(), n).unwrap().is_zero());
        assert!(q_bracket(&parse("Q2^(1/2)").unwrap(), n).is_err());
    }

    #[test]
    fn text_round_trip() {
        let e2 = eisenstein(2, 3).unwrap();
        assert_eq!(e2.to_string(), "1 - 24*q - 72*q^2 - 96*q^3 + O(q^4)");
        let back: QSeries = e2.to_string().parse().unwrap();
        assert_eq!(back.order(), 3);
        assert_eq!(back.coeffs(), e2.coeffs());
        assert_eq!(QSeries::zero(4).to_string(), "O(q^5)");
        let z: QSeries = "O(q^5)".parse().unwrap();
        assert_eq!(z.order(), 4);
        let t: QSeries = "-1/24 + q + 3/2*q^2 + O(q^3)".parse().unwrap();
        assert_eq!(t.coeffs(), &[rat(-1, 24), int(1), rat(3, 2)]);
        assert!("1 + q".parse::<QSeries>().is_err());
        assert!("1 + q^5 + O(q^3)".parse::<QSeries>().is_err());
    }
}
