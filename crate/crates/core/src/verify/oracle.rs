//! Reference implementations written straight from the defining formulas,
//! sharing nothing with the optimized code paths beyond plain monomial
//! differentiation.

use num_traits::{One, Zero};

use crate::arith::{binomial, factorial, multinomial};
use crate::partitions::Partition;
use crate::ssym::{rat, Monomial, Rational, SSPoly};

/// Bernoulli numbers `B_0 .. B_n` (with `B_1 = -1/2`).
pub fn bernoulli(n: usize) -> Vec<Rational> {
    let mut b = vec![Rational::one()];
    for m in 1..=n {
        let mut acc = Rational::zero();
        for (j, bj) in b.iter().enumerate() {
            acc += bj * Rational::from_integer(binomial(m as u64 + 1, j as u64));
        }
        b.push(-acc / Rational::from_integer((m as u64 + 1).into()));
    }
    b
}

/// `β_k` from `x / sinh x = Σ (2 - 2^{2n}) B_{2n} x^{2n} / (2n)!` at `x = z/2`.
pub fn beta(k: u32) -> Rational {
    if k % 2 == 1 {
        return Rational::zero();
    }
    let b = bernoulli(k as usize);
    let two_pow = Rational::from_integer(num_bigint::BigInt::from(2).pow(k));
    (Rational::from_integer(2.into()) - &two_pow) * &b[k as usize]
        / (two_pow * Rational::from_integer(factorial(k as u64)))
}

/// `Q_k(λ)` as the coefficient of `z^{k-1}` in
/// `1/(2 sinh(z/2)) + Σ_i (e^{z(λ_i - i + 1/2)} - e^{z(1/2 - i)})`.
pub fn eval_qk(k: u32, lambda: &Partition) -> Rational {
    if k == 0 {
        return beta(0);
    }
    let m = k - 1;
    let mut sum = Rational::zero();
    for (i, &part) in lambda.parts().iter().enumerate() {
        let i = i as i64 + 1;
        let a = rat(2 * (part as i64 - i) + 1, 2);
        let b = rat(1 - 2 * i, 2);
        sum += num_traits::pow(a, m as usize) - num_traits::pow(b, m as usize);
    }
    beta(k) + sum / Rational::from_integer(factorial(m as u64))
}

fn apply_partial(f: &SSPoly, k: u32) -> SSPoly {
    let mut out = SSPoly::zero();
    for (m, c) in f.terms() {
        if let Some((d, rest)) = m.derivative(k, 1) {
            out.add_term(rest, c * d);
        }
    }
    out
}

fn generator_or_one(k: u32) -> SSPoly {
    if k == 0 {
        SSPoly::one()
    } else {
        SSPoly::generator(k)
    }
}

fn max_index(f: &SSPoly) -> u32 {
    f.terms()
        .flat_map(|(m, _)| m.doubled_powers().iter().map(|&(k, _)| k))
        .max()
        .unwrap_or(0)
}

/// `2Δ = Σ_{k,l} (C(k+l,k) Q_{k+l} - Q_k Q_l) ∂²/∂Q_{k+1}∂Q_{l+1} - Σ_k Q_k ∂/∂Q_{k+2}`.
pub fn laplacian(f: &SSPoly) -> SSPoly {
    let top = max_index(f);
    let mut twice = SSPoly::zero();
    for k in 0..top {
        let dk = apply_partial(f, k + 1);
        if dk.is_zero() {
            continue;
        }
        for l in 0..top {
            let dkl = apply_partial(&dk, l + 1);
            if dkl.is_zero() {
                continue;
            }
            let coeff = generator_or_one(k + l).scale(&Rational::from_integer(binomial((k + l) as u64, k as u64)))
                - &generator_or_one(k) * &generator_or_one(l);
            twice += &(&coeff * &dkl);
        }
    }
    for k in 0..top.saturating_sub(1) {
        twice -= &(&generator_or_one(k) * &apply_partial(f, k + 2));
    }
    twice.scale(&rat(1, 2))
}

/// `𝒟_n = Σ_{i ∈ Z_{≥0}^n} multinomial(i) Q_{|i|} ∂_{i}` over ordered tuples.
pub fn script_d_n(n: u32, f: &SSPoly) -> SSPoly {
    if n == 0 {
        return f.clone();
    }
    let top = max_index(f);
    let mut out = SSPoly::zero();
    let mut tuple = vec![0u32; n as usize];
    loop {
        let mut g = f.clone();
        for &i in &tuple {
            g = apply_partial(&g, i + 1);
            if g.is_zero() {
                break;
            }
        }
        if !g.is_zero() {
            let parts: Vec<u64> = tuple.iter().map(|&i| i as u64).collect();
            let total: u32 = tuple.iter().sum();
            let c = Rational::from_integer(multinomial(&parts));
            out += &(&generator_or_one(total) * &g).scale(&c);
        }
        // next tuple in [0, top)^n
        let mut pos = 0;
        loop {
            if pos == tuple.len() {
                return out;
            }
            tuple[pos] += 1;
            if tuple[pos] < top {
                break;
            }
            tuple[pos] = 0;
            pos += 1;
        }
    }
}

/// `Δ(Q2^n) = n(n - 3/2) Q2^{n-1} - n(n-1)/2 Q1² Q2^{n-2}`.
pub fn laplacian_q2_power(n: i64) -> SSPoly {
    let mut out = SSPoly::zero();
    out.add_term(Monomial::q2_half_power(2 * (n - 1)), rat(n * (2 * n - 3), 2));
    let q1sq = Monomial::generator(1).mul(&Monomial::generator(1));
    out.add_term(q1sq.mul(&Monomial::q2_half_power(2 * (n - 2))), rat(-n * (n - 1), 2));
    out
}
