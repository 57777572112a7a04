//! Slow reference implementations used to check the library. They work on a
//! plain map from exponent vectors to coefficients and share no code with
//! the library beyond the conversion in and out of `SSPoly`.
#![allow(dead_code)]

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use ssym_harmonic::ssym::Monomial;
use ssym_harmonic::{Partition, Rational, SSPoly};

/// Generator index -> doubled exponent.
pub type Mono = BTreeMap<u32, i64>;
pub type Raw = BTreeMap<Mono, Rational>;

pub fn r(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

pub fn ri(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

pub fn to_raw(f: &SSPoly) -> Raw {
    f.terms()
        .map(|(m, c)| (m.doubled_powers().iter().copied().collect(), c.clone()))
        .collect()
}

pub fn from_raw(f: &Raw) -> SSPoly {
    SSPoly::from_terms(f.iter().map(|(m, c)| {
        let pairs: Vec<(u32, i64)> = m.iter().map(|(&k, &d)| (k, d)).collect();
        (Monomial::from_doubled(&pairs).expect("valid monomial"), c.clone())
    }))
}

fn add_into(acc: &mut Raw, m: Mono, c: Rational) {
    if c.is_zero() {
        return;
    }
    match acc.entry(m) {
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

fn add(a: &Raw, b: &Raw, sign: i64) -> Raw {
    let mut out = a.clone();
    for (m, c) in b {
        add_into(&mut out, m.clone(), c * ri(sign));
    }
    out
}

fn mul(a: &Raw, b: &Raw) -> Raw {
    let mut out = Raw::new();
    for (ma, ca) in a {
        for (mb, cb) in b {
            let mut m = ma.clone();
            for (&k, &d) in mb {
                *m.entry(k).or_insert(0) += d;
            }
            m.retain(|_, d| *d != 0);
            add_into(&mut out, m, ca * cb);
        }
    }
    out
}

/// `Q_k`, with `Q_0 = 1`.
fn gen(k: u32) -> Raw {
    let mut m = Mono::new();
    if k > 0 {
        m.insert(k, 2);
    }
    Raw::from([(m, Rational::one())])
}

/// `∂/∂Q_k` on doubled exponents.
fn partial(f: &Raw, k: u32) -> Raw {
    let mut out = Raw::new();
    for (m, c) in f {
        if let Some(&d) = m.get(&k) {
            let mut m2 = m.clone();
            if d == 2 {
                m2.remove(&k);
            } else {
                m2.insert(k, d - 2);
            }
            add_into(&mut out, m2, c * r(d, 2));
        }
    }
    out
}

fn top(f: &Raw) -> u32 {
    f.keys().flat_map(|m| m.keys().copied()).max().unwrap_or(0)
}

fn binom(n: u64, k: u64) -> BigInt {
    (0..k).fold(BigInt::one(), |acc, i| acc * (n - i) / (i + 1))
}

fn fact(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

/// `Δ` from `2Δ = Σ_{k,l≥0} (C(k+l,k) Q_{k+l} - Q_k Q_l) ∂_{k+1} ∂_{l+1} - Σ_k Q_k ∂_{k+2}`.
pub fn laplacian(f: &SSPoly) -> SSPoly {
    let f = to_raw(f);
    let t = top(&f);
    let mut twice = Raw::new();
    for k in 0..t {
        for l in 0..t {
            let d = partial(&partial(&f, k + 1), l + 1);
            if d.is_empty() {
                continue;
            }
            let mut coeff = gen(k + l);
            for v in coeff.values_mut() {
                *v *= Rational::from_integer(binom((k + l) as u64, k as u64));
            }
            let coeff = add(&coeff, &mul(&gen(k), &gen(l)), -1);
            twice = add(&twice, &mul(&coeff, &d), 1);
        }
    }
    for k in 0..t.saturating_sub(1) {
        twice = add(&twice, &mul(&gen(k), &partial(&f, k + 2)), -1);
    }
    let half: Raw = twice.into_iter().map(|(m, c)| (m, c / ri(2))).collect();
    from_raw(&half)
}

/// `𝒟_n f = Σ_{i_1..i_n ≥ 0} (|i|! / Π i_j!) Q_{|i|} ∂_{i_1+1} ⋯ ∂_{i_n+1} f`.
pub fn script_d(n: u32, f: &SSPoly) -> SSPoly {
    fn go(f: &Raw, left: u32, t: u32, idx: &mut Vec<u64>, out: &mut Raw) {
        if f.is_empty() {
            return;
        }
        if left == 0 {
            let total: u64 = idx.iter().sum();
            let denom = idx.iter().fold(BigInt::one(), |acc, &i| acc * fact(i));
            let c = Rational::new(fact(total), denom);
            let mut term = mul(&gen(total as u32), f);
            for v in term.values_mut() {
                *v *= &c;
            }
            *out = add(out, &term, 1);
            return;
        }
        for i in 0..t {
            idx.push(i as u64);
            go(&partial(f, i + 1), left - 1, t, idx, out);
            idx.pop();
        }
    }
    let raw = to_raw(f);
    let mut out = Raw::new();
    go(&raw, n, top(&raw), &mut Vec::new(), &mut out);
    from_raw(&out)
}

/// Coefficients `T_0, T_1, ...` of `z / (2 sinh(z/2))`, so that `β_k = T_k`.
pub fn betas(n: usize) -> Vec<Rational> {
    // 2 sinh(z/2) / z = Σ z^{2j} / (4^j (2j+1)!)
    let s: Vec<Rational> = (0..=n)
        .map(|i| {
            if i % 2 == 1 {
                Rational::zero()
            } else {
                let j = (i / 2) as u32;
                Rational::new(BigInt::one(), BigInt::from(4).pow(j) * fact(i as u64 + 1))
            }
        })
        .collect();
    let mut t = vec![Rational::zero(); n + 1];
    for i in 0..=n {
        let mut acc = if i == 0 { Rational::one() } else { Rational::zero() };
        for j in 1..=i {
            acc -= &s[j] * &t[i - j];
        }
        t[i] = acc;
    }
    t
}

/// `Q_k(λ) = β_k + Σ_i ((λ_i - i + 1/2)^{k-1} - (1/2 - i)^{k-1}) / (k-1)!`.
pub fn eval_qk(k: u32, parts: &[u32], betas: &[Rational]) -> Rational {
    if k == 0 {
        return Rational::one();
    }
    let e = (k - 1) as usize;
    let mut s = Rational::zero();
    for (i, &p) in parts.iter().enumerate() {
        let i = i as i64 + 1;
        s += num_traits::pow(r(2 * (p as i64 - i) + 1, 2), e) - num_traits::pow(r(1 - 2 * i, 2), e);
    }
    &betas[k as usize] + s / Rational::from_integer(fact(e as u64))
}

/// `f(λ)` for `f` with non-negative integer exponents.
pub fn eval(f: &SSPoly, parts: &[u32]) -> Rational {
    let raw = to_raw(f);
    let b = betas(top(&raw) as usize + 1);
    let mut total = Rational::zero();
    for (m, c) in &raw {
        let mut v = c.clone();
        for (&k, &d) in m {
            assert!(d >= 0 && d % 2 == 0, "polynomial input expected");
            v *= num_traits::pow(eval_qk(k, parts, &b), (d / 2) as usize);
        }
        total += v;
    }
    total
}

/// All partitions of `n` as non-increasing part lists.
pub fn partitions(n: u32) -> Vec<Vec<u32>> {
    fn go(n: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if n == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (1..=max.min(n)).rev() {
            cur.push(p);
            go(n - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

pub fn series_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let n = a.len().min(b.len());
    let mut out = vec![Rational::zero(); n];
    for i in 0..n {
        for j in 0..n - i {
            out[i + j] += &a[i] * &b[j];
        }
    }
    out
}

/// `Π_{n≥1} (1 - q^n)` to order `n`.
pub fn euler_product(order: usize) -> Vec<Rational> {
    let mut acc = vec![Rational::zero(); order + 1];
    acc[0] = Rational::one();
    for k in 1..=order {
        let mut factor = vec![Rational::zero(); order + 1];
        factor[0] = Rational::one();
        factor[k] = -Rational::one();
        acc = series_mul(&acc, &factor);
    }
    acc
}

/// `⟨f⟩_q` by direct summation over partitions times `Π(1 - q^n)`.
pub fn q_bracket(f: &SSPoly, order: usize) -> Vec<Rational> {
    let sums: Vec<Rational> = (0..=order as u32)
        .map(|n| partitions(n).iter().map(|p| eval(f, p)).sum())
        .collect();
    series_mul(&sums, &euler_product(order))
}

fn sigma(k: u32, n: u64) -> BigInt {
    (1..=n).filter(|d| n.is_multiple_of(*d)).map(|d| BigInt::from(d).pow(k)).sum()
}

/// `E_k = 1 - (2k / B_k) Σ σ_{k-1}(n) q^n` for `k ∈ {2, 4, 6}`.
pub fn eisenstein(k: u32, order: usize) -> Vec<Rational> {
    let bk = match k {
        2 => r(1, 6),
        4 => r(-1, 30),
        6 => r(1, 42),
        _ => panic!("unsupported weight"),
    };
    let c = -ri(2 * k as i64) / bk;
    (0..=order)
        .map(|n| {
            if n == 0 {
                Rational::one()
            } else {
                &c * Rational::from_integer(sigma(k - 1, n as u64))
            }
        })
        .collect()
}

pub fn partition_of(parts: &[u32]) -> Partition {
    Partition::new(parts.to_vec()).expect("valid partition")
}
