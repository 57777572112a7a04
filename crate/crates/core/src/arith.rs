//! Small exact combinatorial helpers shared by the operator and basis code.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// `(a1 + ... + ak)! / (a1! ... ak!)`.
pub fn multinomial(parts: &[u64]) -> BigInt {
    let mut total = 0u64;
    let mut acc = BigInt::one();
    for &p in parts {
        total += p;
        acc *= binomial(total, p);
    }
    acc
}

/// The falling factorial `(x)_n = x (x - 1) ... (x - n + 1)`, with `(x)_0 = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FallingFactorial {
    pub base: BigRational,
    pub steps: u64,
}

impl FallingFactorial {
    pub fn new(base: BigRational, steps: u64) -> Self {
        Self { base, steps }
    }

    pub fn value(&self) -> BigRational {
        let mut acc = BigRational::one();
        let mut x = self.base.clone();
        for _ in 0..self.steps {
            acc *= &x;
            x -= BigRational::one();
        }
        acc
    }
}

pub fn falling(base: BigRational, steps: u64) -> BigRational {
    FallingFactorial::new(base, steps).value()
}

/// `n! (3/2)_n`, the normalisation constant of the harmonic basis.
pub fn basis_normalizer(n: u64) -> BigRational {
    let three_halves = BigRational::new(3.into(), 2.into());
    falling(three_halves, n) * BigRational::from_integer(factorial(n))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), 10.into());
        assert_eq!(binomial(2, 5), 0.into());
        assert_eq!(binomial(0, 0), 1.into());
    }

    #[test]
    fn multinomials() {
        assert_eq!(multinomial(&[]), 1.into());
        assert_eq!(multinomial(&[2, 1, 1]), 12.into());
        assert_eq!(multinomial(&[0, 3]), 1.into());
    }

    #[test]
    fn falling_factorials() {
        assert_eq!(falling(q(3, 2), 0), q(1, 1));
        assert_eq!(falling(q(3, 2), 3), q(-3, 8));
        assert_eq!(basis_normalizer(3), q(-9, 4));
        assert_eq!(basis_normalizer(4), q(27, 2));
        assert_eq!(basis_normalizer(0), q(1, 1));
    }
}
