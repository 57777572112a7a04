//! Harmonic shifted symmetric polynomials.
//!
//! `f ∈ Λ*` is harmonic when `pr Δ f = 0`. Every homogeneous `f` of weight
//! `n` splits uniquely as `f = h_0 + Q2 h_1 + ... + Q2^{⌊n/2⌋} h_{⌊n/2⌋}` with
//! `h_i` harmonic of weight `n - 2i`, and the harmonic space of weight `n` has
//! the basis `h_λ = pr K Δ_λ K(1)` over partitions `λ ⊢ n` with all parts `≥ 3`.

use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use rayon::prelude::*;

use crate::arith::basis_normalizer;
use crate::error::{Error, Result};
use crate::linalg::{solve_unique, Matrix};
use crate::operators::{delta_lambda, dualize_apply_weighted, kelvin, laplacian};
use crate::partitions::{count_partitions, enumerate_min_part, Partition};
use crate::ssym::{Monomial, Rational, SSPoly};

pub fn is_harmonic(f: &SSPoly) -> Result<bool> {
    f.require_lambda_star()?;
    Ok(laplacian(f).pr().is_zero())
}

/// Monomials `Q_λ` for `λ ⊢ n` with all parts `≥ 2`, in the lexicographically
/// decreasing order of `λ`.
pub fn lambda_star_basis(n: i64) -> Vec<Monomial> {
    if n < 0 {
        return Vec::new();
    }
    enumerate_min_part(n as u32, 2)
        .iter()
        .map(|l| Monomial::product_of(l.parts().iter().copied()))
        .collect()
}

/// Coordinates of a homogeneous `f` in [`lambda_star_basis`]`(n)`.
pub fn coordinates(f: &SSPoly, n: i64) -> Result<Vec<Rational>> {
    let basis = lambda_star_basis(n);
    let index: HashMap<&Monomial, usize> = basis.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let mut out = vec![Rational::default(); basis.len()];
    for (m, c) in f.terms() {
        let &i = index
            .get(m)
            .ok_or_else(|| Error::NotInBasis(m.to_string(), n))?;
        out[i] = c.clone();
    }
    Ok(out)
}

/// `T(g) = pr Δ (Q2 g)` on weight `n`, as a matrix in monomial coordinates.
fn q2_laplacian_matrix(n: i64) -> Result<Arc<Matrix>> {
    static CACHE: RwLock<Option<HashMap<i64, Arc<Matrix>>>> = RwLock::new(None);
    if let Some(m) = CACHE.read().expect("cache poisoned").as_ref().and_then(|c| c.get(&n)) {
        return Ok(m.clone());
    }
    let basis = lambda_star_basis(n);
    let q2 = SSPoly::generator(2);
    let columns = basis
        .iter()
        .map(|m| coordinates(&laplacian(&(&q2 * &SSPoly::monomial(m.clone()))).pr(), n))
        .collect::<Result<Vec<_>>>()?;
    let matrix = Arc::new(Matrix::from_columns(basis.len(), &columns));
    CACHE
        .write()
        .expect("cache poisoned")
        .get_or_insert_with(HashMap::new)
        .insert(n, matrix.clone());
    Ok(matrix)
}

/// `f = Σ Q2^i h_i` with each `h_i` harmonic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub components: Vec<SSPoly>,
}

impl Decomposition {
    pub fn reconstruct(&self) -> SSPoly {
        let q2 = SSPoly::generator(2);
        let mut acc = SSPoly::zero();
        for h in self.components.iter().rev() {
            acc = &(&acc * &q2) + h;
        }
        acc
    }

    /// Largest `r` with `h_r ≠ 0`; zero for the zero element.
    pub fn depth(&self) -> usize {
        self.components.iter().rposition(|h| !h.is_zero()).unwrap_or(0)
    }
}

fn decompose_homogeneous(f: &SSPoly, n: i64) -> Result<Vec<SSPoly>> {
    if n < 2 {
        return Ok(vec![f.clone()]);
    }
    let rhs_poly = laplacian(f).pr();
    let basis = lambda_star_basis(n - 2);
    let g = if basis.is_empty() {
        if !rhs_poly.is_zero() {
            return Err(Error::Inconsistent(format!("pr Δ of {f} is nonzero in weight {}", n - 2)));
        }
        SSPoly::zero()
    } else {
        let t = q2_laplacian_matrix(n - 2)?;
        let rhs = coordinates(&rhs_poly, n - 2)?;
        let x = solve_unique(&t, &rhs)?;
        SSPoly::from_terms(basis.into_iter().zip(x))
    };
    let h0 = f - &(&SSPoly::generator(2) * &g);
    let mut out = vec![h0];
    out.extend(decompose_homogeneous(&g, n - 2)?);
    Ok(out)
}

/// Decomposes `f ∈ Λ*`. Non-homogeneous input is decomposed per weight and
/// the components are summed slot by slot.
pub fn decompose(f: &SSPoly) -> Result<Decomposition> {
    f.require_lambda_star()?;
    let mut components: Vec<SSPoly> = vec![SSPoly::zero()];
    for (n, part) in f.weight_components() {
        let pieces = decompose_homogeneous(&part, n)?;
        if pieces.len() > components.len() {
            components.resize(pieces.len(), SSPoly::zero());
        }
        for (slot, h) in components.iter_mut().zip(pieces) {
            *slot += &h;
        }
    }
    Ok(Decomposition { components })
}

/// Decomposes a homogeneous `f` of known weight `n`, always returning
/// `⌊n/2⌋ + 1` slots (also for `f = 0`).
pub fn decompose_weight(f: &SSPoly, n: i64) -> Result<Decomposition> {
    f.require_lambda_star()?;
    if let Some(w) = f.homogeneous_weight() {
        if w != n {
            return Err(Error::NotHomogeneous(format!("{f} has weight {w}, expected {n}")));
        }
    } else if !f.is_zero() {
        return Err(Error::NotHomogeneous(f.to_string()));
    }
    Ok(Decomposition {
        components: decompose_homogeneous(f, n)?,
    })
}

pub fn depth_ss(f: &SSPoly) -> Result<usize> {
    Ok(decompose(f)?.depth())
}

/// `dim H_n = p(n) - p(n-1) - p(n-2) + p(n-3)`.
pub fn dim_h(n: i64) -> u128 {
    if n < 0 {
        return 0;
    }
    (count_partitions(n) + count_partitions(n - 3)) - (count_partitions(n - 1) + count_partitions(n - 2))
}

/// `h_λ = pr K Δ_λ K(1)`. `K` only looks at weights, so it commutes with
/// `pr` and is applied to the projected element.
pub fn h_lambda(lambda: &Partition) -> Result<SSPoly> {
    let k1 = kelvin(&SSPoly::one())?;
    let h = kelvin(&delta_lambda(lambda, &k1).pr())?;
    if !h.is_polynomial() {
        return Err(Error::NotPolynomial(h.to_string()));
    }
    Ok(h)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HarmonicBasis {
    pub weight: u32,
    /// `(λ, h_λ)` in the lexicographically decreasing order of `λ`.
    pub elements: Vec<(Partition, SSPoly)>,
}

impl HarmonicBasis {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn get(&self, lambda: &Partition) -> Option<&SSPoly> {
        self.elements.iter().find(|(l, _)| l == lambda).map(|(_, h)| h)
    }

    /// Rank of the elements in monomial coordinates.
    pub fn rank(&self) -> Result<usize> {
        let n = self.weight as i64;
        let rows = lambda_star_basis(n).len();
        let columns = self
            .elements
            .iter()
            .map(|(_, h)| coordinates(h, n))
            .collect::<Result<Vec<_>>>()?;
        Ok(Matrix::from_columns(rows, &columns).rank())
    }
}

pub fn harmonic_basis(n: u32) -> Result<HarmonicBasis> {
    harmonic_basis_min_part(n, 3)
}

/// `pr K Δ_λ K(1)` over partitions with parts `≥ min_part`. Only
/// `min_part = 3` gives a basis.
pub fn harmonic_basis_min_part(n: u32, min_part: u32) -> Result<HarmonicBasis> {
    let elements = enumerate_min_part(n, min_part)
        .into_par_iter()
        .map(|l| h_lambda(&l).map(|h| (l, h)))
        .collect::<Result<Vec<_>>>()?;
    Ok(HarmonicBasis { weight: n, elements })
}

/// `h_λ - n!(3/2)_n Q_λ` is divisible by `Q2`.
pub fn leading_term_check(lambda: &Partition) -> Result<bool> {
    let h = h_lambda(lambda)?;
    let lead = SSPoly::term(
        basis_normalizer(lambda.size()),
        Monomial::product_of(lambda.parts().iter().copied()),
    );
    Ok((&h - &lead).divisible_by_q2())
}

/// `n! (3/2)_n h = pr K h^∨ K(1)` for harmonic `h` of weight `n`, where
/// `h^∨` sends each monomial `Q_μ` to `Δ_μ`.
pub fn unusual_identity_check(h: &SSPoly, n: u32) -> Result<bool> {
    if !is_harmonic(h)? {
        return Err(Error::NotHarmonic(h.to_string()));
    }
    if !h.is_zero() && h.homogeneous_weight() != Some(n as i64) {
        return Err(Error::NotHomogeneous(format!("{h} is not of weight {n}")));
    }
    let k1 = kelvin(&SSPoly::one())?;
    let rhs = kelvin(&dualize_apply_weighted(h, &k1)?.pr())?;
    Ok(h.scale(&basis_normalizer(n as u64)) == rhs)
}
