//! Seeded generators for random graded modules.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::poly::Polynomial;
use crate::presentation::Presentation;
use crate::ring::Ring;

/// The generator used everywhere a seed is accepted.
pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_forms<K: Field, R: Rng + ?Sized>(ring: &Ring<K>, degrees: &[u32], rng: &mut R) -> Vec<Polynomial<K>> {
    degrees
        .iter()
        .map(|&d| loop {
            let f = Polynomial::random_form(ring, d, rng);
            if !f.is_zero() {
                break f;
            }
        })
        .collect()
}

/// `R/(f_1, ..., f_c)` with random forms of the given degrees.
pub fn random_complete_intersection<K: Field, R: Rng + ?Sized>(
    ring: &Ring<K>,
    degrees: &[u32],
    rng: &mut R,
) -> Result<Presentation<K>> {
    if degrees.len() > ring.nvars() || degrees.contains(&0) {
        return Err(Error::DegreeMismatch(format!("complete intersection of type {degrees:?}")));
    }
    Presentation::quotient_by_polys(ring, &random_forms(ring, degrees, rng))
}

/// `R/I_2(A)` for a random `2 × (c+1)` matrix of linear forms: an ACM
/// scheme of codimension `c` and degree `c + 1` (the twisted cubic for
/// `c = 2` in four variables).
pub fn random_determinantal<K: Field, R: Rng + ?Sized>(
    ring: &Ring<K>,
    codim: usize,
    rng: &mut R,
) -> Result<Presentation<K>> {
    if codim == 0 || codim >= ring.nvars() {
        return Err(Error::DegreeMismatch(format!("determinantal codimension {codim}")));
    }
    let cols = codim + 1;
    let a: Vec<Vec<Polynomial<K>>> = (0..2).map(|_| random_forms(ring, &vec![1; cols], rng)).collect();
    let mut minors = Vec::new();
    for i in 0..cols {
        for j in i + 1..cols {
            let p = a[0][i].mul(ring, &a[1][j]).sub(ring, &a[0][j].mul(ring, &a[1][i]));
            minors.push(p);
        }
    }
    Presentation::quotient_by_polys(ring, &minors)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use crate::ring::PolyRing;

    #[test]
    fn determinantal_is_acm_of_expected_degree() {
        let r = PolyRing::with_vars(PrimeField::default(), "x", 4).unwrap();
        let m = random_determinantal(&r, 2, &mut seeded_rng(3)).unwrap();
        assert_eq!((m.dim(), m.degree()), (2, 3));
        assert!(crate::resolve::is_cohen_macaulay(&m).unwrap());
    }

    #[test]
    fn same_seed_same_module() {
        let r = PolyRing::with_vars(PrimeField::default(), "x", 4).unwrap();
        let a = random_complete_intersection(&r, &[2, 2], &mut seeded_rng(9)).unwrap();
        let b = random_complete_intersection(&r, &[2, 2], &mut seeded_rng(9)).unwrap();
        assert!(a.same_canonical(&b).unwrap());
        assert_eq!(a.degree(), 4);
    }
}
