//! Sparse polynomials in canonical form.
//!
//! A [`Polynomial`] does not hold a reference to its ring; every operation
//! that depends on the field or the monomial order takes the ring explicitly.

use std::collections::HashMap;

use rand::Rng;

use crate::field::Field;
use crate::monomial::Monomial;
use crate::ring::PolyRing;

/// Terms sorted by the ring order, leading term first, no zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial<K: Field> {
    terms: Vec<(Monomial, K::Elem)>,
}

impl<K: Field> Polynomial<K> {
    pub fn zero() -> Self {
        Self { terms: Vec::new() }
    }

    pub fn constant(ring: &PolyRing<K>, c: K::Elem) -> Self {
        Self::from_terms(ring, vec![(Monomial::one(), c)])
    }

    pub fn one(ring: &PolyRing<K>) -> Self {
        Self::constant(ring, ring.field().one())
    }

    pub fn monomial(ring: &PolyRing<K>, m: Monomial, c: K::Elem) -> Self {
        Self::from_terms(ring, vec![(m, c)])
    }

    /// Build from arbitrary terms: merges duplicates, drops zeros, sorts.
    pub fn from_terms(ring: &PolyRing<K>, terms: Vec<(Monomial, K::Elem)>) -> Self {
        let k = ring.field();
        let mut acc: HashMap<Monomial, K::Elem> = HashMap::with_capacity(terms.len());
        for (m, c) in terms {
            match acc.get_mut(&m) {
                Some(v) => *v = k.add(v, &c),
                None => {
                    acc.insert(m, c);
                }
            }
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !k.is_zero(c)).collect();
        let ord = ring.order();
        terms.sort_by(|a, b| ord.compare(&b.0, &a.0));
        Self { terms }
    }

    /// Terms must already be sorted and nonzero.
    pub(crate) fn from_sorted_terms(terms: Vec<(Monomial, K::Elem)>) -> Self {
        Self { terms }
    }

    pub fn terms(&self) -> &[(Monomial, K::Elem)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, K::Elem)> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading_term(&self) -> Option<&(Monomial, K::Elem)> {
        self.terms.first()
    }

    /// Total degree of the leading term (all terms when homogeneous).
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m0, _)) => self.terms.iter().all(|(m, _)| m.degree() == m0.degree()),
        }
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn add(&self, ring: &PolyRing<K>, other: &Self) -> Self {
        self.combine(ring, other, false)
    }

    pub fn sub(&self, ring: &PolyRing<K>, other: &Self) -> Self {
        self.combine(ring, other, true)
    }

    fn combine(&self, ring: &PolyRing<K>, other: &Self, negate: bool) -> Self {
        let k = ring.field();
        let ord = ring.order();
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() || j < other.terms.len() {
            let pick = if i == self.terms.len() {
                std::cmp::Ordering::Less
            } else if j == other.terms.len() {
                std::cmp::Ordering::Greater
            } else {
                ord.compare(&self.terms[i].0, &other.terms[j].0)
            };
            match pick {
                std::cmp::Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    let (m, c) = &other.terms[j];
                    out.push((*m, if negate { k.neg(c) } else { c.clone() }));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = if negate {
                        k.sub(&self.terms[i].1, &other.terms[j].1)
                    } else {
                        k.add(&self.terms[i].1, &other.terms[j].1)
                    };
                    if !k.is_zero(&c) {
                        out.push((self.terms[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        Self { terms: out }
    }

    pub fn neg(&self, ring: &PolyRing<K>) -> Self {
        let k = ring.field();
        Self {
            terms: self.terms.iter().map(|(m, c)| (*m, k.neg(c))).collect(),
        }
    }

    pub fn scale(&self, ring: &PolyRing<K>, c: &K::Elem) -> Self {
        let k = ring.field();
        if k.is_zero(c) {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(m, a)| (*m, k.mul(a, c))).collect(),
        }
    }

    /// Multiply by `c * x^m`; order is preserved by monomial orders.
    pub fn mul_term(&self, ring: &PolyRing<K>, m: &Monomial, c: &K::Elem) -> Self {
        let k = ring.field();
        if k.is_zero(c) {
            return Self::zero();
        }
        Self {
            terms: self
                .terms
                .iter()
                .map(|(t, a)| (t.mul(m), k.mul(a, c)))
                .collect(),
        }
    }

    pub fn mul(&self, ring: &PolyRing<K>, other: &Self) -> Self {
        let k = ring.field();
        let mut acc: HashMap<Monomial, K::Elem> = HashMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let m = m1.mul(m2);
                let c = k.mul(c1, c2);
                match acc.get_mut(&m) {
                    Some(v) => *v = k.add(v, &c),
                    None => {
                        acc.insert(m, c);
                    }
                }
            }
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !k.is_zero(c)).collect();
        let ord = ring.order();
        terms.sort_by(|a, b| ord.compare(&b.0, &a.0));
        Self { terms }
    }

    pub fn pow(&self, ring: &PolyRing<K>, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(ring);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(ring, &base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(ring, &base);
            }
        }
        acc
    }

    /// Substitute `images[i]` for variable `i`; images live in `target`.
    pub fn substitute(
        &self,
        ring: &PolyRing<K>,
        target: &PolyRing<K>,
        images: &[Polynomial<K>],
    ) -> Polynomial<K> {
        assert_eq!(images.len(), ring.nvars());
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(target, c.clone());
            for (i, img) in images.iter().enumerate() {
                let e = m.exp(i);
                if e > 0 {
                    t = t.mul(target, &img.pow(target, e));
                }
            }
            out = out.add(target, &t);
        }
        out
    }

    /// Rename variables into `target` (variable `i` becomes `map[i]`).
    pub fn remap(&self, target: &PolyRing<K>, map: &[usize]) -> Polynomial<K> {
        Polynomial::from_terms(
            target,
            self.terms.iter().map(|(m, c)| (m.remap(map), c.clone())).collect(),
        )
    }

    /// Monic copy (leading coefficient 1).
    pub fn monic(&self, ring: &PolyRing<K>) -> Self {
        match self.terms.first() {
            None => Self::zero(),
            Some((_, c)) => {
                let inv = ring.field().inv(c).expect("nonzero leading coefficient");
                self.scale(ring, &inv)
            }
        }
    }

    /// Random homogeneous form of degree `d` with all monomials present
    /// (up to random zero coefficients).
    pub fn random_form<R: Rng + ?Sized>(ring: &PolyRing<K>, d: u32, rng: &mut R) -> Self {
        let k = ring.field();
        let terms = Monomial::all_of_degree(ring.nvars(), d)
            .into_iter()
            .map(|m| (m, k.random(rng)))
            .collect();
        Self::from_terms(ring, terms)
    }

    /// Canonical text form; `parse_poly` reads it back to an equal value.
    pub fn display(&self, ring: &PolyRing<K>) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let k = ring.field();
        let mut s = String::new();
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            let neg = k.is_negative(c);
            let abs = if neg { k.neg(c) } else { c.clone() };
            if idx == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let cs = k.format(&abs);
            if m.is_one() {
                s.push_str(&cs);
            } else if k.is_one(&abs) {
                s.push_str(&ring.format_monomial(m));
            } else {
                s.push_str(&cs);
                s.push('*');
                s.push_str(&ring.format_monomial(m));
            }
        }
        s
    }
}
