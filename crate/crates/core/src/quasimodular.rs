//! Quasimodular forms as polynomials in the Eisenstein series `P, Q, R`.
//!
//! `P^a Q^b R^c` has weight `2a + 4b + 6c` and depth `a`. The derivation
//! `D = q d/dq` acts through
//! `D P = (P² - Q)/12`, `D Q = (PQ - R)/3`, `D R = (PR - Q²)/2`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Sub};
use std::str::FromStr;
use std::sync::RwLock;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::harmonic::{decompose_weight, Decomposition};
use crate::linalg::{solve_unique, Matrix};
use crate::qseries::{eisenstein, parse_rational, q_bracket, QSeries};
use crate::ssym::{rat, Rational, SSPoly};

/// Extra coefficients demanded beyond the number of unknowns in [`recognize`].
pub const RECOGNITION_MARGIN: usize = 10;

/// Exponents `(a, b, c)` of `P^a Q^b R^c`.
pub type Exps = (u32, u32, u32);

pub fn exps_weight(&(a, b, c): &Exps) -> i64 {
    2 * a as i64 + 4 * b as i64 + 6 * c as i64
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct QMForm {
    terms: BTreeMap<Exps, Rational>,
}

impl QMForm {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::term(Rational::one(), (0, 0, 0))
    }

    pub fn constant(c: i64) -> Self {
        Self::term(Rational::from_integer(c.into()), (0, 0, 0))
    }

    pub fn p() -> Self {
        Self::term(Rational::one(), (1, 0, 0))
    }

    pub fn q() -> Self {
        Self::term(Rational::one(), (0, 1, 0))
    }

    pub fn r() -> Self {
        Self::term(Rational::one(), (0, 0, 1))
    }

    pub fn term(c: Rational, e: Exps) -> Self {
        let mut f = Self::zero();
        f.add_term(e, c);
        f
    }

    pub fn add_term(&mut self, e: Exps, c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exps, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e: &Exps) -> Rational {
        self.terms.get(e).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero();
        for (e, a) in &self.terms {
            out.add_term(*e, a * c);
        }
        out
    }

    pub fn homogeneous_weight(&self) -> Option<i64> {
        let mut ws = self.terms.keys().map(exps_weight);
        let w = ws.next()?;
        ws.all(|v| v == w).then_some(w)
    }

    pub fn depth(&self) -> u32 {
        self.terms.keys().map(|&(a, _, _)| a).max().unwrap_or(0)
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::one(), |acc, _| &acc * self)
    }
}

impl Add<&QMForm> for &QMForm {
    type Output = QMForm;
    fn add(self, rhs: &QMForm) -> QMForm {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl Sub<&QMForm> for &QMForm {
    type Output = QMForm;
    fn sub(self, rhs: &QMForm) -> QMForm {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, -c);
        }
        out
    }
}

impl Mul<&QMForm> for &QMForm {
    type Output = QMForm;
    fn mul(self, rhs: &QMForm) -> QMForm {
        let mut out = QMForm::zero();
        for (&(a, b, c), x) in &self.terms {
            for (&(d, e, f), y) in &rhs.terms {
                out.add_term((a + d, b + e, c + f), x * y);
            }
        }
        out
    }
}

impl fmt::Display for QMForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (&(a, b, c), coeff)) in self.terms.iter().enumerate() {
            let mut factors = Vec::new();
            for (name, e) in [("P", a), ("Q", b), ("R", c)] {
                match e {
                    0 => {}
                    1 => factors.push(name.to_string()),
                    e => factors.push(format!("{name}^{e}")),
                }
            }
            let abs = coeff.abs();
            let body = if factors.is_empty() {
                abs.to_string()
            } else if abs.is_one() {
                factors.join("*")
            } else {
                format!("{abs}*{}", factors.join("*"))
            };
            match (i, coeff.is_negative()) {
                (0, false) => write!(f, "{body}")?,
                (0, true) => write!(f, "-{body}")?,
                (_, false) => write!(f, " + {body}")?,
                (_, true) => write!(f, " - {body}")?,
            }
        }
        Ok(())
    }
}

impl FromStr for QMForm {
    type Err = Error;

    /// Parses the `Display` form, e.g. `-1/12*Q + 1/12*P^2`.
    fn from_str(s: &str) -> Result<Self> {
        let syntax = |msg: String| Error::Syntax { pos: 0, msg };
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(syntax("empty form".into()));
        }
        let mut terms = Vec::new();
        let mut start = 0;
        for (i, ch) in compact.char_indices() {
            if (ch == '+' || ch == '-') && i > 0 {
                terms.push(&compact[start..i]);
                start = i;
            }
        }
        terms.push(&compact[start..]);
        let mut out = QMForm::zero();
        for t in terms {
            let (neg, t) = match t.as_bytes().first() {
                Some(b'-') => (true, &t[1..]),
                Some(b'+') => (false, &t[1..]),
                _ => (false, t),
            };
            let mut coeff = Rational::one();
            let mut e = (0, 0, 0);
            for factor in t.split('*') {
                let (base, pow) = match factor.split_once('^') {
                    Some((b, p)) => (b, p.parse::<u32>().map_err(|_| syntax(format!("bad exponent in {factor:?}")))?),
                    None => (factor, 1),
                };
                match base {
                    "P" => e.0 += pow,
                    "Q" => e.1 += pow,
                    "R" => e.2 += pow,
                    num if pow == 1 => {
                        coeff *= parse_rational(num).ok_or_else(|| syntax(format!("bad factor {factor:?}")))?
                    }
                    _ => return Err(syntax(format!("bad factor {factor:?}"))),
                }
            }
            out.add_term(e, if neg { -coeff } else { coeff });
        }
        Ok(out)
    }
}

/// All `(a, b, c)` with `2a + 4b + 6c = k`, by decreasing `a`, then decreasing `b`.
pub fn monomials_of_weight(k: i64) -> Vec<Exps> {
    let mut out = Vec::new();
    if k < 0 || k % 2 != 0 {
        return out;
    }
    let half = (k / 2) as u32;
    for a in (0..=half).rev() {
        let rest = half - a;
        for b in (0..=rest / 2).rev() {
            let r = rest - 2 * b;
            if r.is_multiple_of(3) {
                out.push((a, b, r / 3));
            }
        }
    }
    out
}

fn eisenstein_powers(which: u32, max_pow: u32, order: usize) -> Vec<QSeries> {
    static CACHE: RwLock<Vec<(u32, usize, Vec<QSeries>)>> = RwLock::new(Vec::new());
    {
        let cache = CACHE.read().expect("cache poisoned");
        if let Some((_, _, pows)) = cache
            .iter()
            .find(|(w, o, p)| *w == which && *o == order && p.len() > max_pow as usize)
        {
            return pows.clone();
        }
    }
    let base = eisenstein(which, order).expect("weight is 2, 4 or 6");
    let mut pows = vec![QSeries::one(order)];
    for _ in 0..max_pow {
        let next = pows.last().expect("nonempty") * &base;
        pows.push(next);
    }
    let mut cache = CACHE.write().expect("cache poisoned");
    cache.retain(|(w, o, _)| !(*w == which && *o == order));
    cache.push((which, order, pows.clone()));
    pows
}

/// The smallest order `N` at which forms of weight `k` can be recognized.
pub fn required_order(k: i64) -> usize {
    monomials_of_weight(k).len() + RECOGNITION_MARGIN - 1
}

/// The q-expansion to order `N`.
pub fn expand(m: &QMForm, order: usize) -> QSeries {
    let (ma, mb, mc) = m.terms.keys().fold((0, 0, 0), |(x, y, z), &(a, b, c)| {
        (x.max(a), y.max(b), z.max(c))
    });
    let ps = eisenstein_powers(2, ma, order);
    let qs = eisenstein_powers(4, mb, order);
    let rs = eisenstein_powers(6, mc, order);
    let mut acc = QSeries::zero(order);
    for (&(a, b, c), coeff) in &m.terms {
        let term = &(&ps[a as usize] * &qs[b as usize]) * &rs[c as usize];
        acc = &acc + &term.scale(coeff);
    }
    acc
}

/// Identifies `s` as a quasimodular form of weight `k` using the
/// coefficients of `q^0 .. q^N`.
///
/// Requires `N + 1 >= #monomials + RECOGNITION_MARGIN`; the surplus rows must
/// be consistent. Odd weights only accept the zero series.
pub fn recognize(s: &QSeries, k: i64, order: usize) -> Result<QMForm> {
    if s.order() < order {
        return Err(Error::InsufficientOrder {
            weight: k,
            order: s.order(),
            needed: order,
        });
    }
    let s = s.truncate(order);
    if k % 2 != 0 || k < 0 {
        return if s.is_zero() {
            Ok(QMForm::zero())
        } else if k % 2 != 0 {
            Err(Error::NonzeroOddWeight(k))
        } else {
            Err(Error::NotQuasimodular { weight: k, order })
        };
    }
    let needed = required_order(k);
    if order < needed {
        return Err(Error::InsufficientOrder { weight: k, order, needed });
    }
    let monos = monomials_of_weight(k);
    let columns: Vec<Vec<Rational>> = monos
        .iter()
        .map(|&e| expand(&QMForm::term(Rational::one(), e), order).coeffs().to_vec())
        .collect();
    let a = Matrix::from_columns(order + 1, &columns);
    let x = solve_unique(&a, s.coeffs()).map_err(|_| Error::NotQuasimodular { weight: k, order })?;
    let mut out = QMForm::zero();
    for (e, c) in monos.into_iter().zip(x) {
        out.add_term(e, c);
    }
    Ok(out)
}

/// `D = q d/dq` via the Ramanujan identities and the Leibniz rule.
pub fn ramanujan_d(m: &QMForm) -> QMForm {
    let dp = &(&QMForm::p() * &QMForm::p()) - &QMForm::q();
    let dp = dp.scale(&rat(1, 12));
    let dq = (&(&QMForm::p() * &QMForm::q()) - &QMForm::r()).scale(&rat(1, 3));
    let dr = (&(&QMForm::p() * &QMForm::r()) - &(&QMForm::q() * &QMForm::q())).scale(&rat(1, 2));
    let mut out = QMForm::zero();
    for (&(a, b, c), coeff) in &m.terms {
        let parts = [(a, (a.wrapping_sub(1), b, c), &dp), (b, (a, b.wrapping_sub(1), c), &dq), (c, (a, b, c.wrapping_sub(1)), &dr)];
        for (e, lowered, deriv) in parts {
            if e == 0 {
                continue;
            }
            let factor = QMForm::term(coeff * Rational::from_integer(e.into()), lowered);
            out = &out + &(&factor * deriv);
        }
    }
    out
}

/// `𝔡 = 12 ∂/∂P`.
pub fn frak_d(m: &QMForm) -> QMForm {
    let mut out = QMForm::zero();
    for (&(a, b, c), coeff) in &m.terms {
        if a > 0 {
            out.add_term((a - 1, b, c), coeff * Rational::from_integer((12 * a).into()));
        }
    }
    out
}

/// `D̂ = D - P/24`.
pub fn d_hat(m: &QMForm) -> QMForm {
    &ramanujan_d(m) - &(&QMForm::p() * m).scale(&rat(1, 24))
}

/// `Ŵ = W - 1/2` on a weight-homogeneous form.
pub fn w_hat(m: &QMForm) -> Result<QMForm> {
    if m.is_zero() {
        return Ok(QMForm::zero());
    }
    let k = m
        .homogeneous_weight()
        .ok_or_else(|| Error::NotHomogeneous(m.to_string()))?;
    Ok(m.scale(&(Rational::from_integer(k.into()) - rat(1, 2))))
}

/// Outcome of [`is_modular_bracket`].
#[derive(Debug, Clone, PartialEq)]
pub struct ModularityReport {
    pub modular: bool,
    pub form: QMForm,
    pub decomposition: Decomposition,
    pub bracket: QSeries,
}

/// Decides whether `⟨f⟩_q` is modular and cross-checks the answer against the
/// harmonic decomposition: the bracket is modular exactly when `⟨h_r⟩_q = 0`
/// for every `r ≥ 1`.
pub fn is_modular_bracket(f: &SSPoly, order: usize) -> Result<ModularityReport> {
    f.require_lambda_star()?;
    let k = match f.homogeneous_weight() {
        Some(k) => k,
        None if f.is_zero() => 0,
        None => return Err(Error::NotHomogeneous(f.to_string())),
    };
    let bracket = q_bracket(f, order)?;
    let form = recognize(&bracket, k, order)?;
    let modular = form.depth() == 0;
    let decomposition = decompose_weight(f, k)?;
    let mut higher_vanish = true;
    for h in decomposition.components.iter().skip(1) {
        if !q_bracket(h, order)?.is_zero() {
            higher_vanish = false;
            break;
        }
    }
    if higher_vanish != modular {
        return Err(Error::CrossCheck(format!(
            "{f}: recognized depth {} but higher components {} to order {order}",
            form.depth(),
            if higher_vanish { "all vanish" } else { "do not all vanish" }
        )));
    }
    Ok(ModularityReport {
        modular,
        form,
        decomposition,
        bracket,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ssym::{int, parse};

    fn form(s: &str) -> QMForm {
        s.parse().unwrap()
    }

    #[test]
    fn weight_monomials() {
        assert_eq!(monomials_of_weight(0), vec![(0, 0, 0)]);
        assert_eq!(monomials_of_weight(4), vec![(2, 0, 0), (0, 1, 0)]);
        assert_eq!(monomials_of_weight(12).len(), 7);
        assert!(monomials_of_weight(5).is_empty());
        for k in (0..30).step_by(2) {
            assert!(monomials_of_weight(k).iter().all(|e| exps_weight(e) == k));
        }
    }

    #[test]
    fn expansions() {
        let n = 10;
        assert_eq!(expand(&QMForm::one(), n), QSeries::one(n));
        assert_eq!(expand(&QMForm::p(), n), eisenstein(2, n).unwrap());
        let e = expand(&form("9/320*Q"), n);
        assert_eq!(e.coeff(0), &rat(9, 320));
        assert_eq!(e.coeff(1), &(rat(9, 320) * int(240)));
    }

    #[test]
    fn text_form() {
        assert_eq!(form("9/320*Q").to_string(), "9/320*Q");
        assert_eq!(ramanujan_d(&QMForm::p()).to_string(), "-1/12*Q + 1/12*P^2");
        assert_eq!(form("-1/12*Q + 1/12*P^2"), ramanujan_d(&QMForm::p()));
        assert_eq!(QMForm::zero().to_string(), "0");
        assert_eq!(form("3").to_string(), "3");
        assert_eq!(form("P^2*Q - R").to_string(), "-R + P^2*Q");
        assert!("P^x".parse::<QMForm>().is_err());
    }

    #[test]
    fn derivations() {
        assert!(ramanujan_d(&QMForm::one()).is_zero());
        let q = QMForm::q();
        let dq = (&(&QMForm::p() * &q) - &QMForm::r()).scale(&rat(1, 3));
        assert_eq!(ramanujan_d(&(&q * &q)), (&q * &dq).scale(&int(2)));
        assert_eq!(frak_d(&QMForm::p()), QMForm::constant(12));
        assert!(frak_d(&q).is_zero());
        assert_eq!(frak_d(&form("P^2*Q")), form("24*P*Q"));
        assert_eq!(d_hat(&QMForm::one()), form("-1/24*P"));
        assert_eq!(w_hat(&q).unwrap(), form("7/2*Q"));
        assert!(w_hat(&form("P + Q")).is_err());
        assert_eq!(d_hat(&QMForm::one()).depth(), 1);
        assert_eq!(d_hat(&d_hat(&QMForm::one())).depth(), 2);
        assert_eq!(form("P^2*Q").depth(), 2);
        assert_eq!(form("9/320*Q").depth(), 0);
    }

    #[test]
    fn ramanujan_matches_series() {
        let n = 15;
        for m in [QMForm::p(), QMForm::q(), QMForm::r(), form("P^2*Q - 3*R*P")] {
            assert_eq!(crate::qseries::d_series(&expand(&m, n)), expand(&ramanujan_d(&m), n));
        }
    }

    #[test]
    fn recognition() {
        let n = 30;
        let h4 = parse("27/4*Q2^2 + 27/2*Q4").unwrap();
        assert_eq!(recognize(&q_bracket(&h4, n).unwrap(), 4, n).unwrap(), form("9/320*Q"));
        let q2 = q_bracket(&SSPoly::generator(2), n).unwrap();
        assert_eq!(recognize(&q2, 2, n).unwrap(), form("-1/24*P"));
        assert!(matches!(recognize(&q2, 4, n), Err(Error::NotQuasimodular { .. })));
        assert!(matches!(recognize(&q2, 10, 5), Err(Error::InsufficientOrder { .. })));
        assert_eq!(recognize(&QSeries::zero(n), 3, n).unwrap(), QMForm::zero());
        assert!(matches!(recognize(&q2, 3, n), Err(Error::NonzeroOddWeight(3))));
    }

    #[test]
    fn modularity_reports() {
        let n = 30;
        let h4 = parse("27/4*Q2^2 + 27/2*Q4").unwrap();
        let r = is_modular_bracket(&h4, n).unwrap();
        assert!(r.modular);
        assert_eq!(r.form, form("9/320*Q"));
        assert_eq!(r.decomposition.components, vec![h4, SSPoly::zero(), SSPoly::zero()]);

        let r = is_modular_bracket(&SSPoly::generator(2), n).unwrap();
        assert!(!r.modular);
        assert_eq!(r.form, form("-1/24*P"));
        assert_eq!(r.decomposition.components, vec![SSPoly::zero(), SSPoly::one()]);

        let r = is_modular_bracket(&SSPoly::generator(3), n).unwrap();
        assert!(r.modular);
        assert!(r.form.is_zero());
        assert_eq!(r.decomposition.components, vec![SSPoly::generator(3), SSPoly::zero()]);
    }
}
