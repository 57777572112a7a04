//! Differential operators on polynomials in the `Q_k`.
//!
//! - `∂ = Σ_{m≥0} Q_m ∂/∂Q_{m+1}` ([`d_op`])
//! - `E`, multiplication by the weight ([`euler_op`])
//! - `𝒟_n = Σ_{i ∈ ℤ≥0^n} binom(|i|; i_1..i_n) Q_{|i|} ∂^n/∂Q_{i_1+1}..∂Q_{i_n+1}`
//!   ([`script_d_n`]), with `𝒟_1 = ∂`
//! - `Δ = (𝒟_2 - ∂²)/2` ([`laplacian`])
//! - `Δ_n = Σ_i (-1)^i binom(n,i) 𝒟_{n-i} ∂^i` and
//!   `Δ_λ = binom(|λ|; λ_1..λ_l) Π Δ_{λ_i}` ([`delta_n`], [`delta_lambda`])
//! - the Kelvin transform `K(f) = Q2^{3/2-n} f` on weight-`n` pieces ([`kelvin`])
//! - `f^∨`, replacing each `Q_i` in `f` by `Δ_i` ([`dualize_apply`])
//!
//! `Q_0` is the unit throughout. Powers of `Q2` may be half-integral or
//! negative; they are differentiated with the formal power rule.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::{binomial, factorial, multinomial};
use crate::error::{Error, Result};
use crate::partitions::Partition;
use crate::ssym::{rat, Monomial, Rational, SSPoly};

/// Multiplies by `Q_k`, treating `Q_0` as 1.
fn times_generator(m: &Monomial, k: u32) -> Monomial {
    if k == 0 {
        m.clone()
    } else {
        m.mul(&Monomial::generator(k))
    }
}

pub fn d_op(f: &SSPoly) -> SSPoly {
    f.map_terms(|m, c, out| {
        for &(k, _) in m.doubled_powers() {
            if let Some((a, dm)) = m.derivative(k, 1) {
                out.add_term(times_generator(&dm, k - 1), c * a);
            }
        }
    })
}

pub fn d_op_pow(f: &SSPoly, times: u32) -> SSPoly {
    (0..times).fold(f.clone(), |g, _| d_op(&g))
}

pub fn euler_op(f: &SSPoly) -> SSPoly {
    f.map_terms(|m, c, out| out.add_term(m.clone(), c * Rational::from_integer(m.weight().into())))
}

/// Applies `𝒟_n` to one monomial.
///
/// The ordered slots `(i_1..i_n)` are grouped by the multiset of generators
/// `Q_{i_j+1}` they differentiate: a multiset taking `Q_k` exactly `j_k`
/// times occurs `n! / Π j_k!` times, each with multinomial weight
/// `|i|! / Π ((k-1)!)^{j_k}`.
fn script_d_monomial(n: u32, m: &Monomial, c: &Rational, out: &mut SSPoly) {
    if n == 0 {
        out.add_term(m.clone(), c.clone());
        return;
    }
    let support: Vec<u32> = m.doubled_powers().iter().map(|&(k, _)| k).collect();
    let mut counts = vec![0u32; support.len()];
    choose_slots(n, 0, &support, &mut counts, m, c, out);
}

fn choose_slots(
    remaining: u32,
    idx: usize,
    support: &[u32],
    counts: &mut [u32],
    m: &Monomial,
    c: &Rational,
    out: &mut SSPoly,
) {
    if idx == support.len() {
        if remaining == 0 {
            emit_slots(support, counts, m, c, out);
        }
        return;
    }
    let k = support[idx];
    let d = m.doubled_exponent(k);
    // integer powers run out after e derivatives; others never do
    let cap = if d > 0 && d % 2 == 0 { (d / 2) as u32 } else { remaining };
    for j in 0..=cap.min(remaining) {
        counts[idx] = j;
        choose_slots(remaining - j, idx + 1, support, counts, m, c, out);
    }
    counts[idx] = 0;
}

fn emit_slots(support: &[u32], counts: &[u32], m: &Monomial, c: &Rational, out: &mut SSPoly) {
    let mut coeff = c.clone();
    let mut mono = m.clone();
    let mut total_i = 0u64;
    let mut n = 0u64;
    let mut denom = BigInt::one();
    for (&k, &j) in support.iter().zip(counts) {
        if j == 0 {
            continue;
        }
        match mono.derivative(k, j) {
            Some((a, dm)) => {
                coeff *= a;
                mono = dm;
            }
            None => return,
        }
        n += j as u64;
        total_i += (k as u64 - 1) * j as u64;
        denom *= factorial(j as u64) * factorial(k as u64 - 1).pow(j);
    }
    let numer = factorial(n) * factorial(total_i);
    coeff *= Rational::new(numer, denom);
    let target = u32::try_from(total_i).expect("generator index overflow");
    out.add_term(times_generator(&mono, target), coeff);
}

pub fn script_d_n(n: u32, f: &SSPoly) -> SSPoly {
    f.map_terms(|m, c, out| script_d_monomial(n, m, c, out))
}

pub fn laplacian(f: &SSPoly) -> SSPoly {
    (script_d_n(2, f) - d_op_pow(f, 2)).scale(&rat(1, 2))
}

pub fn delta_n(n: u32, f: &SSPoly) -> SSPoly {
    let mut out = SSPoly::zero();
    let mut di = f.clone();
    for i in 0..=n {
        if di.is_zero() {
            break;
        }
        let mut coeff = Rational::from_integer(binomial(n as u64, i as u64));
        if i % 2 == 1 {
            coeff = -coeff;
        }
        out += &script_d_n(n - i, &di).scale(&coeff);
        di = d_op(&di);
    }
    out
}

pub fn delta_lambda(lambda: &Partition, f: &SSPoly) -> SSPoly {
    let parts: Vec<u64> = lambda.parts().iter().map(|&p| p as u64).collect();
    let prefactor = Rational::from_integer(multinomial(&parts));
    let g = lambda
        .parts()
        .iter()
        .rev()
        .fold(f.clone(), |g, &p| delta_n(p, &g));
    g.scale(&prefactor)
}

/// `K(f) = Q2^{3/2-n} f` on each weight-`n` component.
pub fn kelvin(f: &SSPoly) -> Result<SSPoly> {
    if f.contains_q1() {
        return Err(Error::ContainsQ1(f.to_string()));
    }
    Ok(f.map_terms(|m, c, out| {
        let shift = Monomial::q2_half_power(3 - 2 * m.weight());
        out.add_term(m.mul(&shift), c.clone());
    }))
}

/// `f^∨ g`: every monomial `c Π Q_k^{e_k}` of `f` acts as `c Π Δ_k^{e_k}`.
pub fn dualize_apply(f: &SSPoly, g: &SSPoly) -> Result<SSPoly> {
    if !f.is_polynomial() {
        return Err(Error::NotPolynomial(f.to_string()));
    }
    let mut out = SSPoly::zero();
    for (m, c) in f.terms() {
        let mut acc = g.clone();
        for &(k, d) in m.doubled_powers() {
            for _ in 0..d / 2 {
                acc = delta_n(k, &acc);
            }
        }
        out += &acc.scale(c);
    }
    Ok(out)
}

/// Like [`dualize_apply`], but each monomial `Q_μ` acts as `Δ_μ`, i.e. with
/// the multinomial prefactor `binom(|μ|; μ_1, ..., μ_l)`.
pub fn dualize_apply_weighted(f: &SSPoly, g: &SSPoly) -> Result<SSPoly> {
    if !f.is_polynomial() {
        return Err(Error::NotPolynomial(f.to_string()));
    }
    let mut out = SSPoly::zero();
    for (m, c) in f.terms() {
        let parts = m
            .doubled_powers()
            .iter()
            .flat_map(|&(k, d)| std::iter::repeat_n(k, (d / 2) as usize));
        let mu = Partition::from_unsorted(parts.collect());
        out += &delta_lambda(&mu, g).scale(c);
    }
    Ok(out)
}

/// A linear operator built from the primitives above.
#[derive(Debug, Clone, PartialEq)]
pub enum OperatorExpr {
    Identity,
    /// Multiplication by a fixed element.
    Mul(SSPoly),
    D,
    Euler,
    ScriptD(u32),
    Laplacian,
    DeltaN(u32),
    DeltaLambda(Partition),
    Pr,
    Kelvin,
    /// `A_1 ∘ A_2 ∘ ... ∘ A_k`: the last operator is applied first.
    Compose(Vec<OperatorExpr>),
    Sum(Vec<(Rational, OperatorExpr)>),
}

impl OperatorExpr {
    pub fn mul_generator(k: u32) -> Self {
        Self::Mul(SSPoly::generator(k))
    }

    pub fn then(self, first: OperatorExpr) -> Self {
        Self::Compose(vec![self, first])
    }

    /// `Q̂2 = Q2 - Q1²/2` as a multiplication operator.
    pub fn q2_hat() -> Self {
        let q1 = SSPoly::generator(1);
        Self::Mul(SSPoly::generator(2) - (&q1 * &q1).scale(&rat(1, 2)))
    }

    /// `Ê = E - Q1 ∂ - 1/2`.
    pub fn e_hat() -> Self {
        Self::Sum(vec![
            (Rational::one(), Self::Euler),
            (-Rational::one(), Self::mul_generator(1).then(Self::D)),
            (rat(-1, 2), Self::Identity),
        ])
    }

    pub fn apply(&self, f: &SSPoly) -> Result<SSPoly> {
        Ok(match self {
            Self::Identity => f.clone(),
            Self::Mul(g) => g * f,
            Self::D => d_op(f),
            Self::Euler => euler_op(f),
            Self::ScriptD(n) => script_d_n(*n, f),
            Self::Laplacian => laplacian(f),
            Self::DeltaN(n) => delta_n(*n, f),
            Self::DeltaLambda(l) => delta_lambda(l, f),
            Self::Pr => f.pr(),
            Self::Kelvin => kelvin(f)?,
            Self::Compose(ops) => {
                let mut acc = f.clone();
                for op in ops.iter().rev() {
                    acc = op.apply(&acc)?;
                }
                acc
            }
            Self::Sum(parts) => {
                let mut acc = SSPoly::zero();
                for (c, op) in parts {
                    if !c.is_zero() {
                        acc += &op.apply(f)?.scale(c);
                    }
                }
                acc
            }
        })
    }
}

/// `[A, B] f = A(B f) - B(A f)`.
pub fn commutator(a: &OperatorExpr, b: &OperatorExpr, f: &SSPoly) -> Result<SSPoly> {
    Ok(a.apply(&b.apply(f)?)? - b.apply(&a.apply(f)?)?)
}
