//! LaTeX rendering of shifted symmetric polynomials, quasimodular forms and
//! basis tables.
//!
//! Polynomials are shown as `content · (primitive part)`, where the primitive
//! part has coprime integer coefficients and a positive leading term. Terms
//! are ordered by the power of `Q2`, then by the remaining generators read as
//! an increasing list of indices.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::partitions::Partition;
use crate::quasimodular::QMForm;
use crate::ssym::{Monomial, Rational, SSPoly};

pub fn rational(c: &Rational) -> String {
    let sign = if c.is_negative() { "-" } else { "" };
    if c.is_integer() {
        format!("{sign}{}", c.numer().abs())
    } else {
        format!("{sign}\\frac{{{}}}{{{}}}", c.numer().abs(), c.denom())
    }
}

fn index(k: u32) -> String {
    if k < 10 {
        k.to_string()
    } else {
        format!("{{{k}}}")
    }
}

fn exponent(doubled: i64) -> String {
    match doubled {
        2 => String::new(),
        d if d % 2 == 0 && (0..20).contains(&d) => format!("^{}", d / 2),
        d if d % 2 == 0 => format!("^{{{}}}", d / 2),
        d => format!("^{{{d}/2}}"),
    }
}

pub fn monomial(m: &Monomial) -> String {
    if m.is_one() {
        return "1".into();
    }
    m.doubled_powers()
        .iter()
        .map(|&(k, d)| format!("Q_{}{}", index(k), exponent(d)))
        .collect::<Vec<_>>()
        .join(" ")
}

fn rest_key(m: &Monomial) -> Vec<u32> {
    let mut key = Vec::new();
    for &(k, d) in m.doubled_powers() {
        if k != 2 {
            key.extend(std::iter::repeat_n(k, (d / 2).max(0) as usize));
        }
    }
    key
}

/// Display order: by power of `Q2`, then by the other indices in increasing order.
pub fn display_cmp(a: &Monomial, b: &Monomial) -> Ordering {
    a.doubled_exponent(2)
        .cmp(&b.doubled_exponent(2))
        .then_with(|| rest_key(a).cmp(&rest_key(b)))
        .then_with(|| a.cmp(b))
}

fn sorted_terms(f: &SSPoly) -> Vec<(&Monomial, &Rational)> {
    let mut terms: Vec<_> = f.terms().collect();
    terms.sort_by(|x, y| display_cmp(x.0, y.0));
    terms
}

/// Splits `f` as `content * primitive`; the first displayed term of the
/// primitive part is positive. Zero splits as `(0, 0)`.
pub fn content_and_primitive(f: &SSPoly) -> (Rational, SSPoly) {
    let terms = sorted_terms(f);
    let Some((_, lead)) = terms.first() else {
        return (Rational::zero(), SSPoly::zero());
    };
    let mut num = BigInt::zero();
    let mut den = BigInt::one();
    for (_, c) in &terms {
        num = num.gcd(c.numer());
        den = den.lcm(c.denom());
    }
    let mut content = Rational::new(num, den);
    if lead.is_negative() {
        content = -content;
    }
    let inv = content.recip();
    (content, f.scale(&inv))
}

fn signed_terms(terms: impl IntoIterator<Item = (String, bool)>) -> String {
    let mut out = String::new();
    for (i, (body, neg)) in terms.into_iter().enumerate() {
        match (i, neg) {
            (0, false) => {}
            (0, true) => out.push('-'),
            (_, false) => out.push_str(" + "),
            (_, true) => out.push_str(" - "),
        }
        out.push_str(&body);
    }
    out
}

fn primitive_body(p: &SSPoly) -> String {
    signed_terms(sorted_terms(p).into_iter().map(|(m, c)| {
        let a = c.abs();
        let body = if m.is_one() {
            rational(&a)
        } else if a.is_one() {
            monomial(m)
        } else {
            format!("{} {}", rational(&a), monomial(m))
        };
        (body, c.is_negative())
    }))
}

/// Factored LaTeX form, e.g. `\frac{27}{4} \left(Q_2^2 + 2 Q_4\right)`.
pub fn poly(f: &SSPoly) -> String {
    if f.is_zero() {
        return "0".into();
    }
    let (content, prim) = content_and_primitive(f);
    let body = primitive_body(&prim);
    let single = prim.len() == 1;
    if single && prim.terms().next().is_some_and(|(m, _)| m.is_one()) {
        return rational(&content);
    }
    let prefix = if content.is_one() {
        String::new()
    } else if content == -Rational::one() {
        "-".into()
    } else {
        format!("{} ", rational(&content))
    };
    if single {
        format!("{prefix}{body}")
    } else if prefix.is_empty() {
        body
    } else {
        format!("{prefix}\\left({body}\\right)")
    }
}

/// e.g. `\frac{9}{320} Q` or `-\frac{2053485}{4096} QR`.
pub fn qmform(m: &QMForm) -> String {
    if m.is_zero() {
        return "0".into();
    }
    signed_terms(m.terms().map(|(&(a, b, c), coeff)| {
        let mut factors = String::new();
        for (name, e) in [("P", a), ("Q", b), ("R", c)] {
            match e {
                0 => {}
                1 => factors.push_str(name),
                e if e < 10 => factors.push_str(&format!("{name}^{e}")),
                e => factors.push_str(&format!("{name}^{{{e}}}")),
            }
        }
        let a = coeff.abs();
        let body = if factors.is_empty() {
            rational(&a)
        } else if a.is_one() {
            factors
        } else {
            format!("{} {factors}", rational(&a))
        };
        (body, coeff.is_negative())
    }))
}

/// One table row: `λ & h_λ [& ⟨h_λ⟩_q] \\`.
pub fn table_row(lambda: &Partition, h: &SSPoly, bracket: Option<&QMForm>) -> String {
    match bracket {
        Some(b) => format!("{lambda} & {} & {} \\\\", poly(h), qmform(b)),
        None => format!("{lambda} & {} \\\\", poly(h)),
    }
}

/// A full `array` environment; the bracket column is present iff every row has one.
pub fn table(rows: &[(Partition, SSPoly, Option<QMForm>)]) -> String {
    let with_bracket = !rows.is_empty() && rows.iter().all(|r| r.2.is_some());
    let mut out = String::new();
    if with_bracket {
        out.push_str("\\begin{array}{l l l}\n");
        out.push_str("\\lambda & h_{\\lambda} & \\langle h_{\\lambda}\\rangle_q \\\\ \\hline \\hline\n");
    } else {
        out.push_str("\\begin{array}{l l}\n");
        out.push_str("\\lambda & h_{\\lambda} \\\\ \\hline \\hline\n");
    }
    for (l, h, b) in rows {
        out.push_str(&table_row(l, h, if with_bracket { b.as_ref() } else { None }));
        out.push('\n');
    }
    out.push_str("\\hline\n\\end{array}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ssym::{parse, rat};

    #[test]
    fn rationals() {
        assert_eq!(rational(&rat(27, 4)), "\\frac{27}{4}");
        assert_eq!(rational(&rat(-9, 4)), "-\\frac{9}{4}");
        assert_eq!(rational(&rat(-3, 1)), "-3");
    }

    #[test]
    fn polys() {
        let h4 = parse("27/4*Q2^2 + 27/2*Q4").unwrap();
        assert_eq!(poly(&h4), "\\frac{27}{4} \\left(2 Q_4 + Q_2^2\\right)");
        assert_eq!(poly(&parse("-9/4*Q3").unwrap()), "-\\frac{9}{4} Q_3");
        assert_eq!(poly(&SSPoly::one()), "1");
        assert_eq!(poly(&parse("Q2^(3/2)*Q10").unwrap()), "Q_2^{3/2} Q_{10}");
        assert_eq!(poly(&parse("-Q3 + Q2*Q5").unwrap()), "-\\left(Q_3 - Q_2 Q_5\\right)");
        let (c, p) = content_and_primitive(&h4);
        assert_eq!(c, rat(27, 4));
        assert_eq!(p.scale(&c), h4);
    }

    #[test]
    fn forms() {
        assert_eq!(qmform(&"9/320*Q".parse().unwrap()), "\\frac{9}{320} Q");
        assert_eq!(qmform(&"-2053485/4096*Q*R".parse().unwrap()), "-\\frac{2053485}{4096} QR");
        assert_eq!(qmform(&"-1/12*Q + 1/12*P^2".parse().unwrap()), "-\\frac{1}{12} Q + \\frac{1}{12} P^2");
    }
}
