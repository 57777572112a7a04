//! Evaluation of the generators on partitions.
//!
//! `Q_k(λ) = β_k + 1/(k-1)! Σ_{c ∈ C_λ} sgn(c) c^{k-1}`, where the constants
//! `β_k` are the Laurent coefficients of `1/(2 sinh(z/2)) = Σ β_k z^{k-1}`.

use std::sync::RwLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{Rational, SSPoly};
use crate::arith::factorial;
use crate::error::{Error, Result};
use crate::partitions::{c_set, Partition};

static BETA: RwLock<Vec<Rational>> = RwLock::new(Vec::new());

/// Inverts `S(z) = 2 sinh(z/2) / z = Σ_j z^{2j} / (4^j (2j+1)!)` up to `z^n`.
fn beta_table(n: usize) -> Vec<Rational> {
    let s: Vec<Rational> = (0..=n)
        .map(|i| {
            if i % 2 == 1 {
                Rational::zero()
            } else {
                let j = (i / 2) as u32;
                Rational::new(
                    BigInt::one(),
                    BigInt::from(4u32).pow(j) * factorial(2 * j as u64 + 1),
                )
            }
        })
        .collect();
    let mut inv: Vec<Rational> = Vec::with_capacity(n + 1);
    inv.push(Rational::one());
    for i in 1..=n {
        let acc = (1..=i).fold(Rational::zero(), |acc, j| acc + &s[j] * &inv[i - j]);
        inv.push(-acc);
    }
    inv
}

/// The constant `β_k`, i.e. `Q_k(∅)`.
pub fn beta(k: u32) -> Rational {
    let k = k as usize;
    if let Some(b) = BETA.read().expect("beta table poisoned").get(k) {
        return b.clone();
    }
    let mut table = BETA.write().expect("beta table poisoned");
    if table.len() <= k {
        *table = beta_table((2 * k).max(32));
    }
    table[k].clone()
}

/// `Q_k(λ)`, with `Q_0 = 1`.
pub fn eval_qk(k: u32, lambda: &Partition) -> Rational {
    if k == 0 {
        return Rational::one();
    }
    let c = c_set(lambda);
    let e = k - 1;
    let mut sum = BigInt::zero();
    for &d in &c {
        let term = BigInt::from(d).pow(e);
        if d < 0 {
            sum -= term;
        } else {
            sum += term;
        }
    }
    // c = d/2, so c^{k-1} = d^{k-1} / 2^{k-1}
    let denom = factorial(e as u64) * BigInt::from(2u32).pow(e);
    beta(k) + Rational::new(sum, denom)
}

/// The generators `Q_0 .. Q_max` on fixed integer scales, so that
/// `Q_k(λ) = numerator_k(λ) / scale_k` with `scale_k` independent of `λ`.
/// Sums over many partitions then need integer arithmetic only.
#[derive(Debug, Clone)]
pub struct ScaledGenerators {
    scales: Vec<BigInt>,
    /// `β_k · scale_k`.
    offsets: Vec<BigInt>,
    /// `scale_k / (2^{k-1} (k-1)!)`.
    multipliers: Vec<BigInt>,
}

impl ScaledGenerators {
    pub fn new(max: u32) -> Self {
        let mut scales = vec![BigInt::one()];
        let mut offsets = vec![BigInt::one()];
        let mut multipliers = vec![BigInt::zero()];
        for k in 1..=max {
            let e = k - 1;
            let natural = factorial(e as u64) * BigInt::from(2u32).pow(e);
            let b = beta(k);
            let scale = natural.lcm(b.denom());
            offsets.push((b * Rational::from_integer(scale.clone())).to_integer());
            multipliers.push(&scale / &natural);
            scales.push(scale);
        }
        Self { scales, offsets, multipliers }
    }

    pub fn scales(&self) -> &[BigInt] {
        &self.scales
    }

    pub fn numerators(&self, lambda: &Partition) -> Vec<BigInt> {
        let c = c_set(lambda);
        let mut out = Vec::with_capacity(self.scales.len());
        out.push(BigInt::one());
        let mut powers: Vec<BigInt> = c.iter().map(|_| BigInt::one()).collect();
        for k in 1..self.scales.len() {
            let mut sum = BigInt::zero();
            for (p, &d) in powers.iter_mut().zip(&c) {
                if k > 1 {
                    *p *= d;
                }
                if d < 0 {
                    sum -= &*p;
                } else {
                    sum += &*p;
                }
            }
            out.push(&self.offsets[k] + sum * &self.multipliers[k]);
        }
        out
    }
}

/// `[Q_0(λ), Q_1(λ), ..., Q_max(λ)]`.
pub fn generator_values(lambda: &Partition, max: u32) -> Vec<Rational> {
    (0..=max).map(|k| eval_qk(k, lambda)).collect()
}

/// Evaluates a polynomial given precomputed generator values. Terms with
/// `Q1` vanish on partitions and are skipped.
pub fn eval_with(f: &SSPoly, values: &[Rational]) -> Result<Rational> {
    let mut total = Rational::zero();
    for (m, c) in f.terms() {
        if !m.is_polynomial() {
            return Err(Error::NotPolynomial(f.to_string()));
        }
        if m.contains(1) {
            continue;
        }
        let mut v = c.clone();
        for &(k, d) in m.doubled_powers() {
            let q = values.get(k as usize).ok_or_else(|| {
                Error::Invalid(format!("no value supplied for Q{k}"))
            })?;
            v *= num_traits::pow(q.clone(), (d / 2) as usize);
        }
        total += v;
    }
    Ok(total)
}

/// `f(λ)` for `f` in the polynomial ring; `pr` is implicit since `Q1(λ) = 0`.
pub fn eval(f: &SSPoly, lambda: &Partition) -> Result<Rational> {
    let values = generator_values(lambda, f.max_generator());
    eval_with(f, &values)
}
