//! Dense exponent vectors and monomial orders.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

/// Upper bound on the number of variables of any ring, including join rings.
pub const MAX_VARS: usize = 16;

/// A monomial `x^a` stored as a dense exponent vector.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: [u16; MAX_VARS],
    deg: u32,
}

impl Default for Monomial {
    fn default() -> Self {
        Self::one()
    }
}

impl Monomial {
    pub const fn one() -> Self {
        Self {
            exps: [0; MAX_VARS],
            deg: 0,
        }
    }

    pub fn from_exponents(exps: &[u32]) -> Self {
        assert!(exps.len() <= MAX_VARS, "too many variables");
        let mut m = Self::one();
        for (i, &e) in exps.iter().enumerate() {
            m.exps[i] = u16::try_from(e).expect("exponent overflow");
            m.deg += e;
        }
        m
    }

    pub fn var(i: usize) -> Self {
        let mut m = Self::one();
        m.exps[i] = 1;
        m.deg = 1;
        m
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.deg
    }

    #[inline]
    pub fn exp(&self, i: usize) -> u32 {
        self.exps[i] as u32
    }

    pub fn exponents(&self, nvars: usize) -> Vec<u32> {
        self.exps[..nvars].iter().map(|&e| e as u32).collect()
    }

    pub fn is_one(&self) -> bool {
        self.deg == 0
    }

    /// Bit `i` set iff variable `i` occurs.
    #[inline]
    pub fn support_mask(&self) -> u32 {
        let mut mask = 0u32;
        for (i, &e) in self.exps.iter().enumerate() {
            if e != 0 {
                mask |= 1 << i;
            }
        }
        mask
    }

    #[inline]
    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut m = *self;
        for i in 0..MAX_VARS {
            m.exps[i] += other.exps[i];
        }
        m.deg += other.deg;
        m
    }

    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        if self.deg > other.deg {
            return false;
        }
        self.exps
            .iter()
            .zip(other.exps.iter())
            .all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming divisibility.
    #[inline]
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        let mut m = *other;
        for i in 0..MAX_VARS {
            m.exps[i] -= self.exps[i];
        }
        m.deg -= self.deg;
        m
    }

    pub fn checked_div(&self, divisor: &Monomial) -> Option<Monomial> {
        divisor.divides(self).then(|| divisor.quotient_of(self))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut m = Monomial::one();
        for i in 0..MAX_VARS {
            m.exps[i] = self.exps[i].max(other.exps[i]);
            m.deg += m.exps[i] as u32;
        }
        m
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let mut m = Monomial::one();
        for i in 0..MAX_VARS {
            m.exps[i] = self.exps[i].min(other.exps[i]);
            m.deg += m.exps[i] as u32;
        }
        m
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.support_mask() & other.support_mask() == 0
    }

    /// Re-embed into a ring where variable `i` is sent to variable `map[i]`.
    pub fn remap(&self, map: &[usize]) -> Monomial {
        let mut m = Monomial::one();
        for (i, &j) in map.iter().enumerate() {
            m.exps[j] += self.exps[i];
        }
        m.deg = self.deg;
        m
    }

    /// `x^a` for all `a` of total degree `d` in `nvars` variables, in
    /// decreasing lexicographic order.
    pub fn all_of_degree(nvars: usize, d: u32) -> Vec<Monomial> {
        let mut out = Vec::new();
        let mut cur = vec![0u32; nvars];
        fn rec(i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
            let n = cur.len();
            if n == 0 {
                if left == 0 {
                    out.push(Monomial::one());
                }
                return;
            }
            if i == n - 1 {
                cur[i] = left;
                out.push(Monomial::from_exponents(cur));
                cur[i] = 0;
                return;
            }
            for e in (0..=left).rev() {
                cur[i] = e;
                rec(i + 1, left - e, cur, out);
            }
            cur[i] = 0;
        }
        rec(0, d, &mut cur, &mut out);
        out
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let last = self
            .exps
            .iter()
            .rposition(|&e| e != 0)
            .map_or(0, |p| p + 1);
        write!(f, "{:?}", &self.exps[..last])
    }
}

/// Global monomial orders. All are well-orders; the graded ones refine degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MonomialOrder {
    #[default]
    GRevLex,
    DegLex,
    Lex,
}

impl MonomialOrder {
    #[inline]
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::GRevLex => match a.deg.cmp(&b.deg) {
                Ordering::Equal => {
                    for i in (0..MAX_VARS).rev() {
                        if a.exps[i] != b.exps[i] {
                            // a smaller exponent in the last differing variable wins
                            return b.exps[i].cmp(&a.exps[i]);
                        }
                    }
                    Ordering::Equal
                }
                o => o,
            },
            MonomialOrder::DegLex => match a.deg.cmp(&b.deg) {
                Ordering::Equal => a.exps.cmp(&b.exps),
                o => o,
            },
            MonomialOrder::Lex => a.exps.cmp(&b.exps),
        }
    }

    pub fn is_degree_compatible(&self) -> bool {
        !matches!(self, MonomialOrder::Lex)
    }

    pub fn name(&self) -> &'static str {
        match self {
            MonomialOrder::GRevLex => "grevlex",
            MonomialOrder::DegLex => "deglex",
            MonomialOrder::Lex => "lex",
        }
    }
}

/// Compare two monomials under `order`.
pub fn monomial_compare(a: &Monomial, b: &Monomial, order: MonomialOrder) -> Ordering {
    order.compare(a, b)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e)
    }

    #[test]
    fn grevlex_examples() {
        let o = MonomialOrder::GRevLex;
        assert_eq!(o.compare(&m(&[1, 1, 0]), &m(&[0, 0, 2])), Ordering::Greater);
        assert_eq!(o.compare(&m(&[1, 1, 0]), &m(&[1, 1, 0])), Ordering::Equal);
        assert_eq!(o.compare(&m(&[0, 0, 1]), &m(&[1, 1, 0])), Ordering::Less);
        // x0 x2 < x1^2 in grevlex
        assert_eq!(o.compare(&m(&[1, 0, 1]), &m(&[0, 2, 0])), Ordering::Less);
    }

    #[test]
    fn lower_degree_is_smaller_in_graded_orders() {
        for o in [MonomialOrder::GRevLex, MonomialOrder::DegLex] {
            assert_eq!(o.compare(&m(&[0, 0, 5]), &m(&[0, 0, 6])), Ordering::Less);
            assert_eq!(o.compare(&m(&[3]), &m(&[0, 0, 0, 4])), Ordering::Less);
        }
    }

    #[test]
    fn monomials_of_degree_count() {
        assert_eq!(Monomial::all_of_degree(4, 2).len(), 10);
        assert_eq!(Monomial::all_of_degree(3, 0).len(), 1);
        assert_eq!(Monomial::all_of_degree(0, 1).len(), 0);
    }

    #[test]
    fn divisibility() {
        assert!(m(&[1, 0, 1]).divides(&m(&[1, 1, 1])));
        assert!(!m(&[2]).divides(&m(&[1, 1])));
        assert_eq!(m(&[1, 2]).lcm(&m(&[2, 1])), m(&[2, 2]));
        assert_eq!(m(&[2, 2]).checked_div(&m(&[1, 2])), Some(m(&[1])));
    }
}
