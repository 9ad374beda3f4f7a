//! Hilbert series, Hilbert polynomials, dimension and degree.
//!
//! The series of `F/E` is read off the leading-term module of a Groebner
//! basis of `E` using a pivot recursion on monomial ideals. An independent
//! oracle computes graded pieces by row reduction of Macaulay matrices.

use std::collections::HashMap;
use std::ops::RangeInclusive;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::groebner::GroebnerBasis;
use crate::linalg::Echelon;
use crate::module::{FreeModule, ModuleElement};
use crate::monomial::Monomial;
use crate::presentation::Presentation;

/// Upper bound on Macaulay matrix columns in one oracle degree.
pub const ORACLE_MAX_COLUMNS: usize = 400_000;

/// `numerator(z) / (1 - z)^nvars` with a Laurent numerator.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HilbertSeries {
    pub nvars: usize,
    /// Exponent of `coeffs[0]`.
    pub low: i32,
    pub coeffs: Vec<i64>,
}

impl HilbertSeries {
    pub fn zero(nvars: usize) -> Self {
        Self {
            nvars,
            low: 0,
            coeffs: Vec::new(),
        }
    }

    fn normalize(mut self) -> Self {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
        let lead_zeros = self.coeffs.iter().take_while(|&&c| c == 0).count();
        if lead_zeros == self.coeffs.len() {
            return Self::zero(self.nvars);
        }
        self.coeffs.drain(..lead_zeros);
        self.low += lead_zeros as i32;
        self
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Add `z^shift * poly` (ordinary polynomial) to the numerator.
    fn add_shifted(&mut self, shift: i32, poly: &[i64]) {
        if poly.is_empty() {
            return;
        }
        if self.coeffs.is_empty() {
            self.low = shift;
        }
        let new_low = self.low.min(shift);
        let new_high = (self.low + self.coeffs.len() as i32).max(shift + poly.len() as i32);
        let mut out = vec![0i64; (new_high - new_low) as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[(self.low - new_low) as usize + i] += c;
        }
        for (i, c) in poly.iter().enumerate() {
            out[(shift - new_low) as usize + i] += c;
        }
        self.low = new_low;
        self.coeffs = out;
    }

    pub fn add(&self, other: &HilbertSeries) -> HilbertSeries {
        assert_eq!(self.nvars, other.nvars);
        let mut s = self.clone();
        s.add_shifted(other.low, &other.coeffs);
        s.normalize()
    }

    pub fn sub(&self, other: &HilbertSeries) -> HilbertSeries {
        let neg: Vec<i64> = other.coeffs.iter().map(|c| -c).collect();
        let mut s = self.clone();
        s.add_shifted(other.low, &neg);
        s.normalize()
    }

    /// Multiply by `z^d`.
    pub fn shift(&self, d: i32) -> HilbertSeries {
        let mut s = self.clone();
        if !s.coeffs.is_empty() {
            s.low += d;
        }
        s
    }

    /// Series of `M ⊗_K N` over the join ring.
    pub fn product(&self, other: &HilbertSeries) -> HilbertSeries {
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.nvars + other.nvars);
        }
        let mut out = vec![0i64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self {
            nvars: self.nvars + other.nvars,
            low: self.low + other.low,
            coeffs: out,
        }
        .normalize()
    }

    /// `dim_K M_t`.
    pub fn value(&self, t: i64) -> i128 {
        let n = self.nvars as i64;
        let mut acc: i128 = 0;
        for (i, c) in self.coeffs.iter().enumerate() {
            let k = self.low as i64 + i as i64;
            if t - k < 0 || *c == 0 {
                continue;
            }
            acc += *c as i128 * binom_int((t - k + n - 1) as i128, (n - 1).max(0) as u32);
        }
        if n == 0 {
            // K itself: numerator is the Hilbert function
            return self.coefficient(t) as i128;
        }
        acc
    }

    fn coefficient(&self, t: i64) -> i64 {
        let i = t - self.low as i64;
        if i < 0 || i as usize >= self.coeffs.len() {
            0
        } else {
            self.coeffs[i as usize]
        }
    }

    /// `(h(z), d)` with `numerator = h(z) (1-z)^(nvars-d)` and `h(1) != 0`.
    pub fn reduce(&self) -> (Vec<i64>, i32, i64) {
        if self.is_zero() {
            return (Vec::new(), 0, -1);
        }
        let mut h = self.coeffs.clone();
        let mut d = self.nvars as i64;
        while d > 0 && h.iter().sum::<i64>() == 0 {
            // synthetic division by (1 - z)
            let mut q = Vec::with_capacity(h.len() - 1);
            let mut acc = 0i64;
            for c in &h[..h.len() - 1] {
                acc += c;
                q.push(acc);
            }
            h = q;
            d -= 1;
        }
        (h, self.low, d)
    }
}

/// Generalized binomial coefficient `x choose r` for integer `x`.
pub fn binom_int(x: i128, r: u32) -> i128 {
    let mut c: i128 = 1;
    for i in 0..r as i128 {
        c = c * (x - i) / (i + 1);
    }
    c
}

/// Invariants derived from the Hilbert series.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HilbertData {
    pub series: HilbertSeries,
    /// Numerator after cancelling every factor `(1 - z)`, starting at `z^low`.
    pub reduced_numerator: Vec<i64>,
    pub reduced_low: i32,
    /// Coefficients of `t^0, t^1, ...` of the Hilbert polynomial, as `p/q`.
    pub hilbert_polynomial: Vec<String>,
    /// `p(j) = Σ h_i binom(j + e - 1 - i, e - 1 - i)`, `e = dim`.
    pub h_coeffs: Vec<i64>,
    /// Krull dimension; `-1` for the zero module.
    pub dim: i64,
    /// Multiplicity (`h_0` for positive dimension, the length otherwise).
    pub degree: i64,
}

impl HilbertData {
    pub fn from_series(series: HilbertSeries) -> Self {
        let (h, low, dim) = series.reduce();
        let degree = if dim < 0 { 0 } else { h.iter().sum() };
        let poly = hilbert_polynomial_coeffs(&h, low, dim);
        let h_coeffs = h_coefficients(&h, low, dim);
        HilbertData {
            series,
            reduced_numerator: h,
            reduced_low: low,
            hilbert_polynomial: poly.iter().map(|c| c.to_string()).collect(),
            h_coeffs,
            dim,
            degree,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.dim < 0
    }

    pub fn value(&self, t: i64) -> u64 {
        self.series.value(t) as u64
    }

    /// Hilbert polynomial evaluated at `t`.
    pub fn polynomial_value(&self, t: i64) -> i128 {
        poly_value(&self.reduced_numerator, self.reduced_low, self.dim, t)
    }

    /// First degree from which the Hilbert function agrees with the
    /// polynomial.
    pub fn polynomial_from(&self) -> i64 {
        if self.dim <= 0 {
            return self.reduced_low as i64 + self.reduced_numerator.len() as i64;
        }
        self.reduced_low as i64 + self.reduced_numerator.len() as i64 - self.dim
    }

    /// Lowest degree with a possibly nonzero graded piece.
    pub fn initial_degree(&self) -> Option<i64> {
        (!self.series.is_zero()).then_some(self.series.low as i64)
    }

    /// Highest nonzero degree of a finite-length module.
    pub fn top_degree(&self) -> Option<i64> {
        if self.dim != 0 {
            return None;
        }
        Some(self.reduced_low as i64 + self.reduced_numerator.len() as i64 - 1)
    }
}

fn poly_value(h: &[i64], low: i32, dim: i64, t: i64) -> i128 {
    if dim <= 0 {
        return 0;
    }
    h.iter()
        .enumerate()
        .map(|(i, c)| {
            let k = low as i64 + i as i64;
            *c as i128 * binom_int((t - k + dim - 1) as i128, (dim - 1) as u32)
        })
        .sum()
}

/// Coefficients of the Hilbert polynomial in the monomial basis.
fn hilbert_polynomial_coeffs(h: &[i64], low: i32, dim: i64) -> Vec<BigRational> {
    if dim <= 0 {
        return Vec::new();
    }
    // Interpolate through dim points: degree dim-1.
    let n = dim as usize;
    let xs: Vec<i64> = (0..n as i64).collect();
    let ys: Vec<BigRational> = xs
        .iter()
        .map(|&x| BigRational::from_integer(BigInt::from(poly_value(h, low, dim, x))))
        .collect();
    let mut coeffs = vec![BigRational::zero(); n];
    for (i, xi) in xs.iter().enumerate() {
        // Lagrange basis polynomial for node i
        let mut basis = vec![BigRational::one()];
        let mut denom = BigRational::one();
        for (j, xj) in xs.iter().enumerate() {
            if i == j {
                continue;
            }
            let mut next = vec![BigRational::zero(); basis.len() + 1];
            for (d, b) in basis.iter().enumerate() {
                next[d + 1] += b;
                next[d] -= b * BigRational::from_integer(BigInt::from(*xj));
            }
            basis = next;
            denom *= BigRational::from_integer(BigInt::from(xi - xj));
        }
        for (d, b) in basis.iter().enumerate() {
            coeffs[d] += &ys[i] * b / &denom;
        }
    }
    coeffs
}

fn h_coefficients(h: &[i64], low: i32, dim: i64) -> Vec<i64> {
    if dim <= 0 {
        return Vec::new();
    }
    let e = dim as usize;
    // backward differences at 0: D_m = Σ_i (-1)^i binom(m,i) p(-i)
    let p: Vec<i128> = (0..=e as i64).map(|j| poly_value(h, low, dim, -j)).collect();
    let diff = |m: usize| -> i128 {
        (0..=m)
            .map(|i| {
                let s = if i % 2 == 0 { 1 } else { -1 };
                s * binom_int(m as i128, i as u32) * p[i]
            })
            .sum()
    };
    let mut out = vec![0i64; e];
    for m in 0..e {
        out[e - 1 - m] = (diff(m) - diff(m + 1)) as i64;
    }
    out
}

/// Numerator of `R / J` for a monomial ideal `J` (ordinary polynomial).
pub fn monomial_ideal_numerator(gens: &[Monomial]) -> Vec<i64> {
    let mut g = gens.to_vec();
    minimize_monomials(&mut g);
    numerator_rec(g)
}

fn minimize_monomials(g: &mut Vec<Monomial>) {
    g.sort_by_key(|m| m.degree());
    g.dedup();
    let mut out: Vec<Monomial> = Vec::with_capacity(g.len());
    for m in g.iter() {
        if !out.iter().any(|o| o.divides(m)) {
            out.push(*m);
        }
    }
    *g = out;
}

fn poly_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0i64; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if *x == 0 {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn numerator_rec(gens: Vec<Monomial>) -> Vec<i64> {
    if gens.is_empty() {
        return vec![1];
    }
    // pairwise coprime: product of (1 - z^deg)
    let mut seen = 0u32;
    let mut coprime = true;
    let mut counts = [0usize; crate::monomial::MAX_VARS];
    for m in &gens {
        let mask = m.support_mask();
        if seen & mask != 0 {
            coprime = false;
        }
        seen |= mask;
        for (v, c) in counts.iter_mut().enumerate() {
            if mask & (1 << v) != 0 {
                *c += 1;
            }
        }
    }
    if coprime {
        let mut acc = vec![1i64];
        for m in &gens {
            let mut f = vec![0i64; m.degree() as usize + 1];
            f[0] = 1;
            f[m.degree() as usize] -= 1;
            acc = poly_mul(&acc, &f);
        }
        return acc;
    }
    let v = (0..counts.len()).max_by_key(|&v| (counts[v], usize::MAX - v)).unwrap();
    let mut exps: Vec<u32> = gens.iter().map(|m| m.exp(v)).filter(|&e| e > 0).collect();
    exps.sort_unstable();
    let e = exps[0];
    let mut pexp = [0u32; crate::monomial::MAX_VARS];
    pexp[v] = e;
    let pivot = Monomial::from_exponents(&pexp);

    let mut sum = gens.clone();
    sum.push(pivot);
    minimize_monomials(&mut sum);
    let mut colon: Vec<Monomial> = gens
        .iter()
        .map(|m| m.gcd(&pivot).quotient_of(m))
        .collect();
    minimize_monomials(&mut colon);

    let a = numerator_rec(sum);
    let b = numerator_rec(colon);
    let mut out = vec![0i64; a.len().max(b.len() + e as usize)];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i + e as usize] += c;
    }
    out
}

/// Series of `F / E` from a Groebner basis of `E`.
pub fn series_from_gb<K: Field>(ambient: &FreeModule<K>, gb: &GroebnerBasis<K>) -> HilbertSeries {
    let mut s = HilbertSeries::zero(ambient.ring().nvars());
    for (c, lms) in gb.leading_monomials().into_iter().enumerate() {
        let num = monomial_ideal_numerator(&lms);
        s.add_shifted(ambient.gen_degree(c), &num);
    }
    s.normalize()
}

/// Hilbert data of a presentation.
pub fn hilbert_data<K: Field>(m: &Presentation<K>) -> HilbertData {
    m.hilbert().clone()
}

/// `dim_K M_t`.
pub fn hilbert_function<K: Field>(m: &Presentation<K>, t: i64) -> u64 {
    m.hilbert().value(t)
}

/// Graded pieces by row reduction of the degree-`t` Macaulay matrix of the
/// presentation, independent of any Groebner basis.
pub fn oracle_hilbert<K: Field>(m: &Presentation<K>, window: RangeInclusive<i32>) -> Result<Vec<u64>> {
    oracle_hilbert_raw(m.generators(), m.relations(), window)
}

/// Oracle on a raw presentation `ambient / span(relations)`.
pub fn oracle_hilbert_raw<K: Field>(
    ambient: &FreeModule<K>,
    relations: &[ModuleElement<K>],
    window: RangeInclusive<i32>,
) -> Result<Vec<u64>> {
    let ring = ambient.ring();
    let n = ring.nvars();
    let k = ring.field();
    let mut out = Vec::new();
    let rel_degs: Vec<Option<i32>> = relations.iter().map(|r| r.degree(ambient)).collect();
    for t in window {
        // column index of x^a e_c in degree t
        let mut cols: HashMap<(Monomial, u32), usize> = HashMap::new();
        let mut ncols = 0usize;
        for c in 0..ambient.rank() {
            let d = t - ambient.gen_degree(c);
            if d < 0 {
                continue;
            }
            for mon in Monomial::all_of_degree(n, d as u32) {
                cols.insert((mon, c as u32), ncols);
                ncols += 1;
                if ncols > ORACLE_MAX_COLUMNS {
                    return Err(Error::WindowTooLarge(format!(
                        "more than {ORACLE_MAX_COLUMNS} columns in degree {t}"
                    )));
                }
            }
        }
        let mut ech = Echelon::new(k.clone());
        for (r, d) in relations.iter().zip(&rel_degs) {
            let Some(d) = d else { continue };
            let s = t - d;
            if s < 0 {
                continue;
            }
            for mult in Monomial::all_of_degree(n, s as u32) {
                let mut row: Vec<(usize, K::Elem)> = r
                    .terms()
                    .iter()
                    .map(|term| (cols[&(term.mon.mul(&mult), term.comp)], term.coeff.clone()))
                    .collect();
                row.sort_by_key(|(c, _)| *c);
                ech.insert(row);
                if ech.rank() == ncols {
                    break;
                }
            }
        }
        out.push((ncols - ech.rank()) as u64);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e)
    }

    #[test]
    fn numerator_of_simple_ideals() {
        assert_eq!(monomial_ideal_numerator(&[]), vec![1]);
        // (x0^2, x0 x1, x1^2): 1 - 3z^2 + 2z^3
        let n = monomial_ideal_numerator(&[m(&[2, 0]), m(&[1, 1]), m(&[0, 2])]);
        assert_eq!(n, vec![1, 0, -3, 2]);
    }

    #[test]
    fn series_values_of_polynomial_ring() {
        let s = HilbertSeries {
            nvars: 4,
            low: 0,
            coeffs: vec![1],
        };
        assert_eq!(s.value(2), 10);
        assert_eq!(s.value(-1), 0);
        let d = HilbertData::from_series(s);
        assert_eq!((d.dim, d.degree), (4, 1));
        assert_eq!(d.h_coeffs[0], 1);
    }

    #[test]
    fn skew_lines_polynomial() {
        // 1 - 4z^2 + 4z^3 - z^4 over 4 variables
        let s = HilbertSeries {
            nvars: 4,
            low: 0,
            coeffs: vec![1, 0, -4, 4, -1],
        };
        let d = HilbertData::from_series(s);
        assert_eq!(d.dim, 2);
        assert_eq!(d.degree, 2);
        assert_eq!(d.hilbert_polynomial, vec!["2", "2"]);
        assert_eq!(d.h_coeffs, vec![2, 0]);
    }

    #[test]
    fn finite_length_degree_is_length() {
        // 1 + 2z over 2 variables: (1-z)^2 (1 + 2z) numerator
        let s = HilbertSeries {
            nvars: 2,
            low: 0,
            coeffs: vec![1, 0, -3, 2],
        };
        let d = HilbertData::from_series(s);
        assert_eq!((d.dim, d.degree), (0, 3));
        assert_eq!(d.top_degree(), Some(1));
    }

    #[test]
    fn zero_module() {
        let d = HilbertData::from_series(HilbertSeries::zero(3));
        assert_eq!(d.dim, -1);
        assert_eq!(d.value(5), 0);
    }
}
