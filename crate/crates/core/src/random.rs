//! Seeded generators of random test elements.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::harmonic::{harmonic_basis, lambda_star_basis};
use crate::partitions::enumerate_partitions;
use crate::quasimodular::{monomials_of_weight, QMForm};
use crate::ssym::{rat, Monomial, Rational, SSPoly};

pub const DEFAULT_SEED: u64 = 0x5eed_2019;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn small_rational<R: Rng>(rng: &mut R) -> Rational {
    let num = loop {
        let n: i64 = rng.gen_range(-9..=9);
        if n != 0 {
            break n;
        }
    };
    let den: i64 = *[1, 1, 1, 2, 3, 4].choose(rng).expect("nonempty");
    rat(num, den)
}

fn combine<R: Rng>(rng: &mut R, monos: &[Monomial], max_terms: usize) -> SSPoly {
    if monos.is_empty() {
        return SSPoly::zero();
    }
    let count = rng.gen_range(1..=max_terms.min(monos.len()));
    let mut f = SSPoly::zero();
    for m in monos.choose_multiple(rng, count) {
        f.add_term(m.clone(), small_rational(rng));
    }
    f
}

/// Homogeneous element of `R = Λ*[Q1]` of weight `w`.
pub fn r_homogeneous<R: Rng>(rng: &mut R, w: u32, max_terms: usize) -> SSPoly {
    let monos: Vec<Monomial> = enumerate_partitions(w)
        .iter()
        .map(|l| Monomial::product_of(l.parts().iter().copied()))
        .collect();
    combine(rng, &monos, max_terms)
}

/// Element of `R` with components of weight at most `max_weight`.
pub fn r_element<R: Rng>(rng: &mut R, max_weight: u32) -> SSPoly {
    let pieces = rng.gen_range(1..=2);
    let mut f = SSPoly::zero();
    for _ in 0..pieces {
        let w = rng.gen_range(0..=max_weight);
        f += &r_homogeneous(rng, w, 3);
    }
    f
}

/// Homogeneous element of `Λ*` of weight `w`.
pub fn lambda_star_homogeneous<R: Rng>(rng: &mut R, w: u32, max_terms: usize) -> SSPoly {
    combine(rng, &lambda_star_basis(w as i64), max_terms)
}

/// Nonzero homogeneous element of `Λ*` with weight in `2..=max_weight`.
pub fn lambda_star_nonzero<R: Rng>(rng: &mut R, max_weight: u32) -> SSPoly {
    loop {
        let w = rng.gen_range(2..=max_weight.max(2));
        let f = lambda_star_homogeneous(rng, w, 4);
        if !f.is_zero() {
            return f;
        }
    }
}

/// Homogeneous element of `Λ*[Q2^{±1/2}]`: a `Λ*` element times `Q2^{j/2}`.
pub fn lambda_tilde_homogeneous<R: Rng>(rng: &mut R, max_weight: u32) -> SSPoly {
    let w = rng.gen_range(0..=max_weight);
    let shift: i64 = rng.gen_range(-3..=3);
    lambda_star_homogeneous(rng, w, 3).mul_monomial(&Monomial::q2_half_power(shift))
}

/// Random combination of the harmonic basis of weight `w`.
pub fn harmonic_homogeneous<R: Rng>(rng: &mut R, w: u32) -> SSPoly {
    let basis = harmonic_basis(w).expect("basis construction");
    let mut f = SSPoly::zero();
    for (_, h) in &basis.elements {
        if rng.gen_bool(0.7) {
            f += &h.scale(&small_rational(rng));
        }
    }
    f
}

/// Homogeneous quasimodular form of weight `k` (even).
pub fn qmform_homogeneous<R: Rng>(rng: &mut R, k: i64) -> QMForm {
    let mut f = QMForm::zero();
    for e in monomials_of_weight(k) {
        if rng.gen_bool(0.6) {
            f.add_term(e, small_rational(rng));
        }
    }
    f
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic() {
        let a: Vec<SSPoly> = (0..5).map({
            let mut r = rng(7);
            move |_| r_element(&mut r, 8)
        }).collect();
        let b: Vec<SSPoly> = (0..5).map({
            let mut r = rng(7);
            move |_| r_element(&mut r, 8)
        }).collect();
        assert_eq!(a, b);
    }

    #[test]
    fn shapes() {
        let mut r = rng(1);
        for _ in 0..20 {
            let f = lambda_star_homogeneous(&mut r, 8, 4);
            assert!(f.is_lambda_star());
            assert!(f.is_zero() || f.homogeneous_weight() == Some(8));
            let g = lambda_tilde_homogeneous(&mut r, 8);
            assert!(!g.contains_q1());
            assert!(g.is_homogeneous());
            let q = qmform_homogeneous(&mut r, 10);
            assert!(q.is_zero() || q.homogeneous_weight() == Some(10));
        }
    }
}
