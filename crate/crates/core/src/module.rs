//! Twisted graded free modules, their elements, and graded matrices.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::Polynomial;
use crate::ring::{PolyRing, Ring};

/// `⊕ R(a_i)`; the `i`-th basis vector lives in degree `-a_i`.
#[derive(Clone)]
pub struct FreeModule<K: Field> {
    ring: Ring<K>,
    twists: Vec<i32>,
}

impl<K: Field> FreeModule<K> {
    pub fn new(ring: &Ring<K>, twists: Vec<i32>) -> Self {
        Self {
            ring: Arc::clone(ring),
            twists,
        }
    }

    /// The module `R^r` with all generators in degree `d`.
    pub fn generated_in(ring: &Ring<K>, r: usize, d: i32) -> Self {
        Self::new(ring, vec![-d; r])
    }

    pub fn from_degrees(ring: &Ring<K>, degrees: &[i32]) -> Self {
        Self::new(ring, degrees.iter().map(|d| -d).collect())
    }

    pub fn ring(&self) -> &Ring<K> {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.twists.len()
    }

    pub fn twists(&self) -> &[i32] {
        &self.twists
    }

    pub fn gen_degree(&self, i: usize) -> i32 {
        -self.twists[i]
    }

    pub fn gen_degrees(&self) -> Vec<i32> {
        self.twists.iter().map(|a| -a).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.twists.is_empty()
    }

    pub fn term_order(&self) -> TermOrder {
        TermOrder::new(self.ring.order(), self.gen_degrees())
    }

    pub fn basis(&self, i: usize) -> ModuleElement<K> {
        ModuleElement::from_terms(vec![Term {
            mon: Monomial::one(),
            comp: i as u32,
            coeff: self.ring.field().one(),
        }])
    }

    /// `F ⊕ G`.
    pub fn direct_sum(&self, other: &FreeModule<K>) -> FreeModule<K> {
        let mut t = self.twists.clone();
        t.extend_from_slice(&other.twists);
        FreeModule::new(&self.ring, t)
    }

    /// `F(d)`.
    pub fn shift(&self, d: i32) -> FreeModule<K> {
        FreeModule::new(&self.ring, self.twists.iter().map(|a| a + d).collect())
    }

    /// `Hom(F, R)`: generator degrees negate.
    pub fn dual(&self) -> FreeModule<K> {
        FreeModule::new(&self.ring, self.twists.iter().map(|a| -a).collect())
    }

    pub fn same_as(&self, other: &FreeModule<K>) -> bool {
        self.ring.same_ring(&other.ring) && self.twists == other.twists
    }
}

impl<K: Field> std::fmt::Debug for FreeModule<K> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "FreeModule{:?}", self.twists)
    }
}

/// `free_module(ring, twists)`.
pub fn free_module<K: Field>(ring: &Ring<K>, twists: &[i32]) -> FreeModule<K> {
    FreeModule::new(ring, twists.to_vec())
}

/// A term `c * x^a * e_comp`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Term<E> {
    pub mon: Monomial,
    pub comp: u32,
    pub coeff: E,
}

/// Module term order: block (lower block dominates), then total degree, then
/// the monomial order, then position (lower index dominates).
#[derive(Clone, Debug)]
pub struct TermOrder {
    order: MonomialOrder,
    comp_deg: Vec<i32>,
    comp_block: Vec<u8>,
}

impl TermOrder {
    pub fn new(order: MonomialOrder, comp_deg: Vec<i32>) -> Self {
        let n = comp_deg.len();
        Self {
            order,
            comp_deg,
            comp_block: vec![0; n],
        }
    }

    /// Elimination order: components `< split` dominate all others.
    pub fn with_split(order: MonomialOrder, comp_deg: Vec<i32>, split: usize) -> Self {
        let comp_block = (0..comp_deg.len()).map(|c| u8::from(c >= split)).collect();
        Self {
            order,
            comp_deg,
            comp_block,
        }
    }

    #[inline]
    pub fn comp_degree(&self, c: u32) -> i32 {
        self.comp_deg[c as usize]
    }

    #[inline]
    pub fn block(&self, c: u32) -> u8 {
        self.comp_block[c as usize]
    }

    #[inline]
    pub fn degree_of(&self, m: &Monomial, c: u32) -> i32 {
        m.degree() as i32 + self.comp_deg[c as usize]
    }

    #[inline]
    pub fn cmp(&self, am: &Monomial, ac: u32, bm: &Monomial, bc: u32) -> Ordering {
        let (ba, bb) = (self.comp_block[ac as usize], self.comp_block[bc as usize]);
        if ba != bb {
            return bb.cmp(&ba);
        }
        let (da, db) = (self.degree_of(am, ac), self.degree_of(bm, bc));
        if da != db {
            return da.cmp(&db);
        }
        match self.order.compare(am, bm) {
            Ordering::Equal => bc.cmp(&ac),
            o => o,
        }
    }

    pub fn rank(&self) -> usize {
        self.comp_deg.len()
    }
}

/// An element of a free module: terms sorted descending by the ambient's
/// term order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ModuleElement<K: Field> {
    terms: Vec<Term<K::Elem>>,
}

impl<K: Field> ModuleElement<K> {
    pub fn zero() -> Self {
        Self { terms: Vec::new() }
    }

    /// Terms must be sorted and nonzero.
    pub(crate) fn from_terms(terms: Vec<Term<K::Elem>>) -> Self {
        Self { terms }
    }

    /// Build from component polynomials.
    pub fn from_components(ambient: &FreeModule<K>, comps: &[Polynomial<K>]) -> Result<Self> {
        if comps.len() != ambient.rank() {
            return Err(Error::AmbientMismatch);
        }
        let mut terms = Vec::new();
        for (i, p) in comps.iter().enumerate() {
            for (m, c) in p.terms() {
                terms.push(Term {
                    mon: *m,
                    comp: i as u32,
                    coeff: c.clone(),
                });
            }
        }
        let ord = ambient.term_order();
        terms.sort_by(|a, b| ord.cmp(&b.mon, b.comp, &a.mon, a.comp));
        Ok(Self { terms })
    }

    /// A polynomial as an element of the rank-one module `R(-d)`.
    pub fn from_poly(p: &Polynomial<K>) -> Self {
        Self {
            terms: p
                .terms()
                .iter()
                .map(|(m, c)| Term {
                    mon: *m,
                    comp: 0,
                    coeff: c.clone(),
                })
                .collect(),
        }
    }

    pub fn terms(&self) -> &[Term<K::Elem>] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading_term(&self) -> Option<&Term<K::Elem>> {
        self.terms.first()
    }

    pub fn component(&self, ring: &PolyRing<K>, i: usize) -> Polynomial<K> {
        let mut terms: Vec<_> = self
            .terms
            .iter()
            .filter(|t| t.comp as usize == i)
            .map(|t| (t.mon, t.coeff.clone()))
            .collect();
        let ord = ring.order();
        terms.sort_by(|a, b| ord.compare(&b.0, &a.0));
        Polynomial::from_sorted_terms(terms)
    }

    pub fn components(&self, ambient: &FreeModule<K>) -> Vec<Polynomial<K>> {
        (0..ambient.rank())
            .map(|i| self.component(ambient.ring(), i))
            .collect()
    }

    /// Internal degree, `None` for zero or inhomogeneous elements.
    pub fn degree(&self, ambient: &FreeModule<K>) -> Option<i32> {
        let first = self.terms.first()?;
        let d = first.mon.degree() as i32 + ambient.gen_degree(first.comp as usize);
        self.terms
            .iter()
            .all(|t| t.mon.degree() as i32 + ambient.gen_degree(t.comp as usize) == d)
            .then_some(d)
    }

    pub fn is_homogeneous(&self, ambient: &FreeModule<K>) -> bool {
        self.is_zero() || self.degree(ambient).is_some()
    }

    pub fn scale(&self, ring: &PolyRing<K>, c: &K::Elem) -> Self {
        let k = ring.field();
        if k.is_zero(c) {
            return Self::zero();
        }
        Self {
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    mon: t.mon,
                    comp: t.comp,
                    coeff: k.mul(&t.coeff, c),
                })
                .collect(),
        }
    }

    pub fn add(&self, ambient: &FreeModule<K>, other: &Self) -> Self {
        let ord = ambient.term_order();
        let k = ambient.ring().field();
        Self {
            terms: vec_axpy(k, &ord, &self.terms, &k.one(), &Monomial::one(), &other.terms),
        }
    }

    pub fn sub(&self, ambient: &FreeModule<K>, other: &Self) -> Self {
        let ord = ambient.term_order();
        let k = ambient.ring().field();
        Self {
            terms: vec_axpy(
                k,
                &ord,
                &self.terms,
                &k.neg(&k.one()),
                &Monomial::one(),
                &other.terms,
            ),
        }
    }

    pub fn mul_poly(&self, ambient: &FreeModule<K>, p: &Polynomial<K>) -> Self {
        let k = ambient.ring().field();
        let mut acc: HashMap<(Monomial, u32), K::Elem> = HashMap::new();
        for t in &self.terms {
            for (m, c) in p.terms() {
                let key = (t.mon.mul(m), t.comp);
                let v = k.mul(&t.coeff, c);
                match acc.get_mut(&key) {
                    Some(x) => *x = k.add(x, &v),
                    None => {
                        acc.insert(key, v);
                    }
                }
            }
        }
        let ord = ambient.term_order();
        Self {
            terms: collect_sorted(k, &ord, acc),
        }
    }

    /// Rewrite components through `map[i] = new index` (into `target`).
    pub fn reindex(&self, target: &FreeModule<K>, map: &[Option<usize>]) -> Self {
        let mut terms: Vec<_> = self
            .terms
            .iter()
            .filter_map(|t| {
                map[t.comp as usize].map(|c| Term {
                    mon: t.mon,
                    comp: c as u32,
                    coeff: t.coeff.clone(),
                })
            })
            .collect();
        let ord = target.term_order();
        terms.sort_by(|a, b| ord.cmp(&b.mon, b.comp, &a.mon, a.comp));
        Self { terms }
    }

    /// Remap ring variables (for embedding into join rings).
    pub fn remap_vars(&self, target: &FreeModule<K>, var_map: &[usize], comp_offset: u32) -> Self {
        let mut terms: Vec<_> = self
            .terms
            .iter()
            .map(|t| Term {
                mon: t.mon.remap(var_map),
                comp: t.comp + comp_offset,
                coeff: t.coeff.clone(),
            })
            .collect();
        let ord = target.term_order();
        terms.sort_by(|a, b| ord.cmp(&b.mon, b.comp, &a.mon, a.comp));
        Self { terms }
    }

    pub fn display(&self, ambient: &FreeModule<K>) -> String {
        let ring = ambient.ring();
        let parts: Vec<String> = self
            .components(ambient)
            .iter()
            .map(|p| p.display(ring))
            .collect();
        format!("[{}]", parts.join(", "))
    }
}

/// `a + c * m * b` over sorted term vectors.
pub(crate) fn vec_axpy<K: Field>(
    k: &K,
    ord: &TermOrder,
    a: &[Term<K::Elem>],
    c: &K::Elem,
    m: &Monomial,
    b: &[Term<K::Elem>],
) -> Vec<Term<K::Elem>> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    let mut bj: Option<(Monomial, u32)> = b.first().map(|t| (t.mon.mul(m), t.comp));
    while i < a.len() || j < b.len() {
        let o = match (a.get(i), &bj) {
            (None, _) => Ordering::Less,
            (_, None) => Ordering::Greater,
            (Some(x), Some((bm, bc))) => ord.cmp(&x.mon, x.comp, bm, *bc),
        };
        match o {
            Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Less => {
                let (bm, bc) = bj.expect("b term");
                out.push(Term {
                    mon: bm,
                    comp: bc,
                    coeff: k.mul(c, &b[j].coeff),
                });
                j += 1;
                bj = b.get(j).map(|t| (t.mon.mul(m), t.comp));
            }
            Ordering::Equal => {
                let v = k.add(&a[i].coeff, &k.mul(c, &b[j].coeff));
                if !k.is_zero(&v) {
                    out.push(Term {
                        mon: a[i].mon,
                        comp: a[i].comp,
                        coeff: v,
                    });
                }
                i += 1;
                j += 1;
                bj = b.get(j).map(|t| (t.mon.mul(m), t.comp));
            }
        }
    }
    out
}

pub(crate) fn collect_sorted<K: Field>(
    k: &K,
    ord: &TermOrder,
    acc: HashMap<(Monomial, u32), K::Elem>,
) -> Vec<Term<K::Elem>> {
    let mut terms: Vec<_> = acc
        .into_iter()
        .filter(|(_, c)| !k.is_zero(c))
        .map(|((mon, comp), coeff)| Term { mon, comp, coeff })
        .collect();
    terms.sort_by(|a, b| ord.cmp(&b.mon, b.comp, &a.mon, a.comp));
    terms
}

/// A graded map `source -> target`; column `j` is the image of the `j`-th
/// basis vector of `source`.
#[derive(Clone, Debug)]
pub struct Matrix<K: Field> {
    pub source: FreeModule<K>,
    pub target: FreeModule<K>,
    pub columns: Vec<ModuleElement<K>>,
}

impl<K: Field> Matrix<K> {
    pub fn new(
        source: FreeModule<K>,
        target: FreeModule<K>,
        columns: Vec<ModuleElement<K>>,
    ) -> Result<Self> {
        if columns.len() != source.rank() {
            return Err(Error::DegreeMismatch(format!(
                "{} columns for a source of rank {}",
                columns.len(),
                source.rank()
            )));
        }
        for (j, c) in columns.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            match c.degree(&target) {
                Some(d) if d == source.gen_degree(j) => {}
                Some(d) => {
                    return Err(Error::DegreeMismatch(format!(
                        "column {j} has degree {d}, source generator has degree {}",
                        source.gen_degree(j)
                    )))
                }
                None => return Err(Error::NotHomogeneous(format!("column {j}"))),
            }
        }
        Ok(Self {
            source,
            target,
            columns,
        })
    }

    /// Build from entries `rows[i][j]` (target index `i`, source index `j`)
    /// with the source degrees inferred from the columns.
    pub fn from_entries(
        target: &FreeModule<K>,
        entries: &[Vec<Polynomial<K>>],
    ) -> Result<Self> {
        let nrows = target.rank();
        if entries.len() != nrows {
            return Err(Error::AmbientMismatch);
        }
        let ncols = entries.first().map_or(0, |r| r.len());
        let mut cols = Vec::with_capacity(ncols);
        let mut degs = Vec::with_capacity(ncols);
        for j in 0..ncols {
            let comps: Vec<_> = entries.iter().map(|row| row[j].clone()).collect();
            let col = ModuleElement::from_components(target, &comps)?;
            let d = match col.degree(target) {
                Some(d) => d,
                None if col.is_zero() => 0,
                None => return Err(Error::DegreeMismatch(format!("column {j}"))),
            };
            degs.push(d);
            cols.push(col);
        }
        Self::new(FreeModule::from_degrees(target.ring(), &degs), target.clone(), cols)
    }

    pub fn entry(&self, i: usize, j: usize) -> Polynomial<K> {
        self.columns[j].component(self.target.ring(), i)
    }

    /// Transpose as a map `target^* -> source^*`.
    pub fn transpose(&self) -> Matrix<K> {
        let ring = self.target.ring();
        let k = ring.field();
        let new_target = self.source.dual();
        let new_source = self.target.dual();
        let mut rows: Vec<Vec<Term<K::Elem>>> = vec![Vec::new(); self.target.rank()];
        for (j, col) in self.columns.iter().enumerate() {
            for t in col.terms() {
                rows[t.comp as usize].push(Term {
                    mon: t.mon,
                    comp: j as u32,
                    coeff: t.coeff.clone(),
                });
            }
        }
        let ord = new_target.term_order();
        let columns = rows
            .into_iter()
            .map(|mut ts| {
                ts.retain(|t| !k.is_zero(&t.coeff));
                ts.sort_by(|a, b| ord.cmp(&b.mon, b.comp, &a.mon, a.comp));
                ModuleElement::from_terms(ts)
            })
            .collect();
        Matrix {
            source: new_source,
            target: new_target,
            columns,
        }
    }

    /// Image of a source element.
    pub fn apply(&self, v: &ModuleElement<K>) -> ModuleElement<K> {
        let k = self.target.ring().field();
        let ord = self.target.term_order();
        let mut acc: Vec<Term<K::Elem>> = Vec::new();
        for t in v.terms() {
            acc = vec_axpy(
                k,
                &ord,
                &acc,
                &t.coeff,
                &t.mon,
                self.columns[t.comp as usize].terms(),
            );
        }
        ModuleElement::from_terms(acc)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Matrix<K>) -> Matrix<K> {
        Matrix {
            source: other.source.clone(),
            target: self.target.clone(),
            columns: other.columns.iter().map(|c| self.apply(c)).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(|c| c.is_zero())
    }

    /// Whether any entry is a nonzero constant.
    pub fn has_unit_entry(&self) -> bool {
        self.columns
            .iter()
            .any(|c| c.terms().iter().any(|t| t.mon.is_one()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use crate::parse::parse_poly;

    #[test]
    fn free_module_examples() {
        let r = PolyRing::with_vars(PrimeField::default(), "x", 4).unwrap();
        let z = free_module(&r, &[]);
        assert_eq!(z.rank(), 0);
        let f = free_module(&r, &[0]);
        assert_eq!(f.gen_degree(0), 0);
        let q = free_module(&r, &[-2, -2, -2, -2]);
        assert_eq!(q.rank(), 4);
        assert!(q.gen_degrees().iter().all(|&d| d == 2));
    }

    #[test]
    fn homogeneity_uses_twists() {
        let r = PolyRing::with_vars(PrimeField::default(), "x", 3).unwrap();
        let f = free_module(&r, &[0, -1]);
        let a = parse_poly("x0^2", &r).unwrap();
        let b = parse_poly("x1", &r).unwrap();
        let v = ModuleElement::from_components(&f, &[a.clone(), b]).unwrap();
        assert_eq!(v.degree(&f), Some(2));
        let w = ModuleElement::from_components(&f, &[a.clone(), a]).unwrap();
        assert!(!w.is_homogeneous(&f));
    }

    #[test]
    fn transpose_twice_is_identity() {
        let r = PolyRing::with_vars(PrimeField::default(), "x", 3).unwrap();
        let target = free_module(&r, &[0]);
        let entries = vec![vec![r.var(0), r.var(1), r.var(2)]];
        let m = Matrix::from_entries(&target, &entries).unwrap();
        let tt = m.transpose().transpose();
        assert_eq!(tt.columns, m.columns);
        assert_eq!(tt.source.twists(), m.source.twists());
    }
}
