//! Buchberger's algorithm for homogeneous submodules of graded free modules.
//!
//! The engine processes S-pairs degree by degree (normal strategy) and prunes
//! pairs with the Gebauer-Moeller criteria. The same engine computes
//!
//! * reduced Groebner bases,
//! * minimal generating subsets (a degree-truncated run records which inputs
//!   survive reduction),
//! * kernels of maps into quotient modules, through an elimination order on
//!   `target ⊕ source` in which the `target` block dominates.


use crate::error::{Error, Result};
use crate::field::Field;
use crate::module::{vec_axpy, FreeModule, Matrix, ModuleElement, Term, TermOrder};
use crate::monomial::Monomial;

/// A homogeneous submodule given by generators.
#[derive(Clone, Debug)]
pub struct Submodule<K: Field> {
    ambient: FreeModule<K>,
    gens: Vec<ModuleElement<K>>,
}

impl<K: Field> Submodule<K> {
    /// Zero generators are dropped; every other generator must be homogeneous.
    pub fn new(ambient: &FreeModule<K>, gens: Vec<ModuleElement<K>>) -> Result<Self> {
        let mut out = Vec::with_capacity(gens.len());
        for (i, g) in gens.into_iter().enumerate() {
            if g.is_zero() {
                continue;
            }
            if g.terms().iter().any(|t| t.comp as usize >= ambient.rank()) {
                return Err(Error::AmbientMismatch);
            }
            if !g.is_homogeneous(ambient) {
                return Err(Error::NotHomogeneous(format!("generator {i}")));
            }
            out.push(g);
        }
        Ok(Self {
            ambient: ambient.clone(),
            gens: out,
        })
    }

    /// An ideal as a submodule of `R`.
    pub fn ideal(ring: &crate::ring::Ring<K>, gens: &[crate::poly::Polynomial<K>]) -> Result<Self> {
        let ambient = FreeModule::new(ring, vec![0]);
        Self::new(
            &ambient,
            gens.iter().map(ModuleElement::from_poly).collect(),
        )
    }

    pub fn ambient(&self) -> &FreeModule<K> {
        &self.ambient
    }

    pub fn gens(&self) -> &[ModuleElement<K>] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn gen_degrees(&self) -> Vec<i32> {
        self.gens
            .iter()
            .map(|g| g.degree(&self.ambient).expect("homogeneous generator"))
            .collect()
    }

    /// Generators as polynomials (rank-one ambient only).
    pub fn polys(&self) -> Vec<crate::poly::Polynomial<K>> {
        self.gens
            .iter()
            .map(|g| g.component(self.ambient.ring(), 0))
            .collect()
    }
}

/// A Groebner basis under the ambient's term order.
#[derive(Clone, Debug)]
pub struct GroebnerBasis<K: Field> {
    ambient: FreeModule<K>,
    elements: Vec<ModuleElement<K>>,
    is_reduced: bool,
}

impl<K: Field> GroebnerBasis<K> {
    pub fn ambient(&self) -> &FreeModule<K> {
        &self.ambient
    }

    pub fn elements(&self) -> &[ModuleElement<K>] {
        &self.elements
    }

    pub fn is_reduced(&self) -> bool {
        self.is_reduced
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Leading monomials grouped by component.
    pub fn leading_monomials(&self) -> Vec<Vec<Monomial>> {
        let mut out = vec![Vec::new(); self.ambient.rank()];
        for e in &self.elements {
            let t = e.leading_term().expect("nonzero basis element");
            out[t.comp as usize].push(t.mon);
        }
        out
    }

    /// Remainder of `v` modulo the basis; zero iff `v` is a member.
    pub fn normal_form(&self, v: &ModuleElement<K>) -> Result<ModuleElement<K>> {
        if v.terms().iter().any(|t| t.comp as usize >= self.ambient.rank()) {
            return Err(Error::AmbientMismatch);
        }
        let ord = self.ambient.term_order();
        let k = self.ambient.ring().field();
        let reducers: Vec<Reducer<'_, K>> = self
            .elements
            .iter()
            .map(|e| Reducer::new(e.terms()))
            .collect();
        Ok(ModuleElement::from_terms(full_reduce(
            k,
            &ord,
            v.terms().to_vec(),
            &reducers,
            None,
        )))
    }

    pub fn contains(&self, v: &ModuleElement<K>) -> Result<bool> {
        Ok(self.normal_form(v)?.is_zero())
    }

    /// Sum of basis element sizes, a rough cost indicator.
    pub fn total_terms(&self) -> usize {
        self.elements.iter().map(|e| e.terms().len()).sum()
    }
}

impl<K: Field> PartialEq for GroebnerBasis<K> {
    fn eq(&self, other: &Self) -> bool {
        self.ambient.same_as(&other.ambient) && self.elements == other.elements
    }
}

/// Reduced Groebner basis of `s`, sorted by increasing leading term.
pub fn buchberger<K: Field>(s: &Submodule<K>) -> Result<GroebnerBasis<K>> {
    let ambient = s.ambient();
    let ord = ambient.term_order();
    let k = ambient.ring().field().clone();
    let mut eng = Engine::new(k, ord.clone(), ambient.ring().degree_cap(), None);
    eng.product_criterion = ambient.rank() == 1;
    eng.full_reduce = true;
    for g in s.gens() {
        eng.push_input(g.terms().to_vec());
    }
    eng.run(None)?;
    let mut elements: Vec<ModuleElement<K>> = eng
        .reduced_basis()
        .into_iter()
        .map(ModuleElement::from_terms)
        .collect();
    elements.sort_by(|a, b| {
        let (ta, tb) = (a.leading_term().unwrap(), b.leading_term().unwrap());
        ord.cmp(&ta.mon, ta.comp, &tb.mon, tb.comp)
    });
    Ok(GroebnerBasis {
        ambient: ambient.clone(),
        elements,
        is_reduced: true,
    })
}

/// `normal_form(v, G)`.
pub fn normal_form<K: Field>(v: &ModuleElement<K>, g: &GroebnerBasis<K>) -> Result<ModuleElement<K>> {
    g.normal_form(v)
}

/// A minimal homogeneous generating subset, in order of increasing degree.
pub fn minimal_generators<K: Field>(
    ambient: &FreeModule<K>,
    gens: &[ModuleElement<K>],
) -> Result<Vec<ModuleElement<K>>> {
    let ord = ambient.term_order();
    let k = ambient.ring().field().clone();
    let mut eng = Engine::new(k, ord, ambient.ring().degree_cap(), None);
    eng.product_criterion = ambient.rank() == 1;
    let mut maxd = i32::MIN;
    for g in gens {
        if g.is_zero() {
            eng.push_input(Vec::new());
            continue;
        }
        let d = g
            .degree(ambient)
            .ok_or_else(|| Error::NotHomogeneous("generator".into()))?;
        maxd = maxd.max(d);
        eng.push_input(g.terms().to_vec());
    }
    if maxd == i32::MIN {
        return Ok(Vec::new());
    }
    eng.run(Some(maxd))?;
    let mut kept = eng.kept.clone();
    kept.sort_by_key(|&i| (gens[i].degree(ambient), i));
    Ok(kept.into_iter().map(|i| gens[i].clone()).collect())
}

/// Minimal generators together with the reduced Groebner basis of their span.
pub fn minimal_generators_with_basis<K: Field>(
    ambient: &FreeModule<K>,
    gens: &[ModuleElement<K>],
) -> Result<(Vec<ModuleElement<K>>, GroebnerBasis<K>)> {
    let ord = ambient.term_order();
    let k = ambient.ring().field().clone();
    let mut eng = Engine::new(k, ord.clone(), ambient.ring().degree_cap(), None);
    eng.product_criterion = ambient.rank() == 1;
    eng.full_reduce = true;
    let mut maxd = i32::MIN;
    for g in gens {
        if g.is_zero() {
            eng.push_input(Vec::new());
            continue;
        }
        let d = g
            .degree(ambient)
            .ok_or_else(|| Error::NotHomogeneous("generator".into()))?;
        maxd = maxd.max(d);
        eng.push_input(g.terms().to_vec());
    }
    if maxd > i32::MIN {
        eng.run(Some(maxd))?;
    }
    let mut kept = eng.kept.clone();
    kept.sort_by_key(|&i| (gens[i].degree(ambient), i));
    eng.run(None)?;
    let mut elements: Vec<ModuleElement<K>> = eng
        .reduced_basis()
        .into_iter()
        .map(ModuleElement::from_terms)
        .collect();
    elements.sort_by(|a, b| {
        let (ta, tb) = (a.leading_term().unwrap(), b.leading_term().unwrap());
        ord.cmp(&ta.mon, ta.comp, &tb.mon, tb.comp)
    });
    Ok((
        kept.into_iter().map(|i| gens[i].clone()).collect(),
        GroebnerBasis {
            ambient: ambient.clone(),
            elements,
            is_reduced: true,
        },
    ))
}

/// `{ c in source : sum_j c_j images_j ∈ span(modulo) }`, as generators.
///
/// The generating set is not minimal; pass it through
/// [`minimal_generators`] when minimality matters.
pub fn kernel_mod<K: Field>(
    source: &FreeModule<K>,
    target: &FreeModule<K>,
    images: &[ModuleElement<K>],
    modulo: &[ModuleElement<K>],
) -> Result<Vec<ModuleElement<K>>> {
    if images.len() != source.rank() {
        return Err(Error::AmbientMismatch);
    }
    for (j, img) in images.iter().enumerate() {
        if img.is_zero() {
            continue;
        }
        match img.degree(target) {
            Some(d) if d == source.gen_degree(j) => {}
            Some(d) => {
                return Err(Error::DegreeMismatch(format!(
                    "image {j} has degree {d} but source generator has degree {}",
                    source.gen_degree(j)
                )))
            }
            None => return Err(Error::NotHomogeneous(format!("image {j}"))),
        }
    }
    let split = target.rank();
    let mut degs = target.gen_degrees();
    degs.extend(source.gen_degrees());
    let ord = TermOrder::with_split(target.ring().order(), degs, split);
    let k = target.ring().field().clone();
    let mut eng = Engine::new(k.clone(), ord.clone(), target.ring().degree_cap(), Some(split));
    for m in modulo {
        if !m.is_zero() && !m.is_homogeneous(target) {
            return Err(Error::NotHomogeneous("relation of the target".into()));
        }
        eng.push_input(m.terms().to_vec());
    }
    for (j, img) in images.iter().enumerate() {
        let mut terms = img.terms().to_vec();
        terms.push(Term {
            mon: Monomial::one(),
            comp: (split + j) as u32,
            coeff: k.one(),
        });
        terms.sort_by(|a, b| ord.cmp(&b.mon, b.comp, &a.mon, a.comp));
        eng.push_input(terms);
    }
    eng.run(None)?;
    let sord = source.term_order();
    Ok(eng
        .kernel
        .into_iter()
        .map(|v| {
            let mut terms: Vec<_> = v
                .into_iter()
                .map(|t| Term {
                    mon: t.mon,
                    comp: t.comp - split as u32,
                    coeff: t.coeff,
                })
                .collect();
            terms.sort_by(|a, b| sord.cmp(&b.mon, b.comp, &a.mon, a.comp));
            ModuleElement::from_terms(terms)
        })
        .collect())
}

/// Minimal generators of the syzygies of `s.gens()`, living in
/// `⊕ R(-deg g_i)`.
pub fn syzygies<K: Field>(s: &Submodule<K>) -> Result<Submodule<K>> {
    let source = FreeModule::from_degrees(s.ambient().ring(), &s.gen_degrees());
    let ker = kernel_mod(&source, s.ambient(), s.gens(), &[])?;
    let min = minimal_generators(&source, &ker)?;
    Submodule::new(&source, min)
}

/// Kernel of `a`, optionally viewed as a map into `target / span(relations)`.
pub fn kernel_of_map<K: Field>(
    a: &Matrix<K>,
    target_relations: &[ModuleElement<K>],
) -> Result<Submodule<K>> {
    let ker = kernel_mod(&a.source, &a.target, &a.columns, target_relations)?;
    let min = minimal_generators(&a.source, &ker)?;
    Submodule::new(&a.source, min)
}

// ---------------------------------------------------------------------------
// engine

struct BElem<E> {
    terms: Vec<Term<E>>,
    lm: Monomial,
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    comp: u32,
    deg: i32,
}

struct Reducer<'a, K: Field> {
    terms: &'a [Term<K::Elem>],
    lm: Monomial,
    comp: u32,
    mask: u32,
}

impl<'a, K: Field> Reducer<'a, K> {
    fn new(terms: &'a [Term<K::Elem>]) -> Self {
        let lt = &terms[0];
        Self {
            terms,
            lm: lt.mon,
            comp: lt.comp,
            mask: lt.mon.support_mask(),
        }
    }
}

/// Fully reduce `v` by monic reducers. When `stop_block` is set, reduction
/// stops as soon as the leading term enters that block.
fn full_reduce<K: Field>(
    k: &K,
    ord: &TermOrder,
    mut v: Vec<Term<K::Elem>>,
    reducers: &[Reducer<'_, K>],
    stop_block: Option<u8>,
) -> Vec<Term<K::Elem>> {
    let mut pos = 0;
    while pos < v.len() {
        let t = &v[pos];
        if let Some(b) = stop_block {
            if ord.block(t.comp) == b {
                break;
            }
        }
        let mask = t.mon.support_mask();
        let found = reducers
            .iter()
            .find(|r| r.comp == t.comp && r.mask & !mask == 0 && r.lm.divides(&t.mon));
        match found {
            Some(r) => {
                let q = r.lm.quotient_of(&t.mon);
                let c = k.neg(&t.coeff);
                let tail = vec_axpy(k, ord, &v[pos..], &c, &q, r.terms);
                v.truncate(pos);
                v.extend(tail);
            }
            None => pos += 1,
        }
    }
    v
}

pub(crate) struct Engine<K: Field> {
    k: K,
    ord: TermOrder,
    cap: u32,
    split: Option<usize>,
    pub(crate) product_criterion: bool,
    pub(crate) full_reduce: bool,
    basis: Vec<BElem<K::Elem>>,
    masks: Vec<u32>,
    by_comp: Vec<Vec<usize>>,
    pairs: Vec<Pair>,
    inputs: Vec<(i32, usize, Vec<Term<K::Elem>>)>,
    n_inputs: usize,
    pub(crate) kept: Vec<usize>,
    pub(crate) kernel: Vec<Vec<Term<K::Elem>>>,
}

impl<K: Field> Engine<K> {
    pub(crate) fn new(k: K, ord: TermOrder, cap: u32, split: Option<usize>) -> Self {
        let rank = ord.rank();
        Self {
            k,
            ord,
            cap,
            split,
            product_criterion: false,
            full_reduce: false,
            basis: Vec::new(),
            masks: Vec::new(),
            by_comp: vec![Vec::new(); rank],
            pairs: Vec::new(),
            inputs: Vec::new(),
            n_inputs: 0,
            kept: Vec::new(),
            kernel: Vec::new(),
        }
    }

    pub(crate) fn push_input(&mut self, terms: Vec<Term<K::Elem>>) {
        let idx = self.n_inputs;
        self.n_inputs += 1;
        if terms.is_empty() {
            return;
        }
        let d = self.ord.degree_of(&terms[0].mon, terms[0].comp);
        self.inputs.push((d, idx, terms));
    }

    fn tracking_block(&self, comp: u32) -> bool {
        self.split.is_some() && self.ord.block(comp) == 1
    }

    pub(crate) fn run(&mut self, max_degree: Option<i32>) -> Result<()> {
        // inputs in decreasing (degree, index) so the next one pops off the end
        self.inputs.sort_by(|a, b| (b.0, b.1).cmp(&(a.0, a.1)));
        loop {
            let dp = self.pairs.iter().map(|p| p.deg).min();
            let di = self.inputs.last().map(|x| x.0);
            let d = match (dp, di) {
                (None, None) => break,
                (Some(a), None) | (None, Some(a)) => a,
                (Some(a), Some(b)) => a.min(b),
            };
            if max_degree.is_some_and(|m| d > m) {
                break;
            }
            let mut cur = Vec::new();
            let mut rest = Vec::with_capacity(self.pairs.len());
            for p in self.pairs.drain(..) {
                if p.deg == d {
                    cur.push(p);
                } else {
                    rest.push(p);
                }
            }
            self.pairs = rest;
            let ord = &self.ord;
            cur.sort_by(|a, b| {
                ord.cmp(&a.lcm, a.comp, &b.lcm, b.comp)
                    .then((a.i, a.j).cmp(&(b.i, b.j)))
            });
            for p in cur {
                if p.lcm.degree() > self.cap {
                    return Err(Error::DegreeCapExceeded {
                        cap: self.cap,
                        needed: p.lcm.degree(),
                    });
                }
                let s = self.spoly(&p);
                let r = self.reduce(s);
                if !r.is_empty() {
                    self.insert(r);
                }
            }
            while self.inputs.last().is_some_and(|x| x.0 == d) {
                let (_, idx, v) = self.inputs.pop().expect("input");
                let md = v.iter().map(|t| t.mon.degree()).max().unwrap_or(0);
                if md > self.cap {
                    return Err(Error::DegreeCapExceeded {
                        cap: self.cap,
                        needed: md,
                    });
                }
                let r = self.reduce(v);
                if r.is_empty() {
                    continue;
                }
                if !self.tracking_block(r[0].comp) {
                    self.kept.push(idx);
                }
                self.insert(r);
            }
        }
        Ok(())
    }

    fn spoly(&self, p: &Pair) -> Vec<Term<K::Elem>> {
        let (gi, gj) = (&self.basis[p.i], &self.basis[p.j]);
        let qi = gi.lm.quotient_of(&p.lcm);
        let qj = gj.lm.quotient_of(&p.lcm);
        let a: Vec<Term<K::Elem>> = gi
            .terms
            .iter()
            .map(|t| Term {
                mon: t.mon.mul(&qi),
                comp: t.comp,
                coeff: t.coeff.clone(),
            })
            .collect();
        let minus_one = self.k.neg(&self.k.one());
        vec_axpy(&self.k, &self.ord, &a, &minus_one, &qj, &gj.terms)
    }

    fn find_reducer(&self, t: &Term<K::Elem>) -> Option<usize> {
        let mask = t.mon.support_mask();
        self.by_comp[t.comp as usize]
            .iter()
            .copied()
            .find(|&i| self.masks[i] & !mask == 0 && self.basis[i].lm.divides(&t.mon))
    }

    fn reduce(&self, mut v: Vec<Term<K::Elem>>) -> Vec<Term<K::Elem>> {
        let mut pos = 0;
        while pos < v.len() {
            let t = &v[pos];
            if self.tracking_block(t.comp) {
                break;
            }
            match self.find_reducer(t) {
                Some(i) => {
                    let g = &self.basis[i];
                    let q = g.lm.quotient_of(&t.mon);
                    let c = self.k.neg(&t.coeff);
                    let tail = vec_axpy(&self.k, &self.ord, &v[pos..], &c, &q, &g.terms);
                    v.truncate(pos);
                    v.extend(tail);
                }
                None => {
                    if self.full_reduce {
                        pos += 1;
                    } else {
                        break;
                    }
                }
            }
        }
        v
    }

    fn insert(&mut self, mut v: Vec<Term<K::Elem>>) {
        let lc = v[0].coeff.clone();
        if !self.k.is_one(&lc) {
            let inv = self.k.inv(&lc).expect("nonzero leading coefficient");
            for t in v.iter_mut() {
                t.coeff = self.k.mul(&t.coeff, &inv);
            }
        }
        if self.tracking_block(v[0].comp) {
            self.kernel.push(v);
            return;
        }
        let h = self.basis.len();
        let lm = v[0].mon;
        let comp = v[0].comp;
        let cdeg = self.ord.comp_degree(comp);
        let coprime_ok = self.product_criterion;

        // new pairs (h, g), Gebauer-Moeller criteria M and F
        let mut cands: Vec<(usize, Monomial, bool)> = self.by_comp[comp as usize]
            .iter()
            .map(|&g| {
                let l = lm.lcm(&self.basis[g].lm);
                let coprime = coprime_ok && lm.is_coprime(&self.basis[g].lm);
                (g, l, coprime)
            })
            .collect();
        let mut kept: Vec<(usize, Monomial, bool)> = Vec::new();
        while let Some((g, l, coprime)) = cands.pop() {
            let dominated = !coprime
                && (cands.iter().any(|(_, l2, _)| l2.divides(&l))
                    || kept.iter().any(|(_, l2, _)| l2.divides(&l)));
            if !dominated {
                kept.push((g, l, coprime));
            }
        }

        // criterion B on existing pairs
        let basis = &self.basis;
        self.pairs.retain(|p| {
            if p.comp != comp || !lm.divides(&p.lcm) {
                return true;
            }
            let li = basis[p.i].lm.lcm(&lm);
            let lj = basis[p.j].lm.lcm(&lm);
            li == p.lcm || lj == p.lcm
        });

        for (g, l, coprime) in kept {
            if coprime {
                continue;
            }
            self.pairs.push(Pair {
                i: g,
                j: h,
                lcm: l,
                comp,
                deg: l.degree() as i32 + cdeg,
            });
        }

        self.masks.push(lm.support_mask());
        self.basis.push(BElem { terms: v, lm });
        self.by_comp[comp as usize].push(h);
    }

    /// Tail-reduce every element against the others.
    pub(crate) fn reduced_basis(&self) -> Vec<Vec<Term<K::Elem>>> {
        let reducers: Vec<Reducer<'_, K>> =
            self.basis.iter().map(|b| Reducer::new(&b.terms)).collect();
        self.basis
            .iter()
            .map(|b| {
                let mut out = vec![b.terms[0].clone()];
                out.extend(full_reduce(
                    &self.k,
                    &self.ord,
                    b.terms[1..].to_vec(),
                    &reducers,
                    None,
                ));
                out
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use crate::parse::parse_poly;
    use crate::ring::{PolyRing, Ring};

    fn ring(n: usize) -> Ring<PrimeField> {
        PolyRing::with_vars(PrimeField::default(), "x", n).unwrap()
    }

    fn ideal(r: &Ring<PrimeField>, gens: &[&str]) -> Submodule<PrimeField> {
        let polys: Vec<_> = gens.iter().map(|s| parse_poly(s, r).unwrap()).collect();
        Submodule::ideal(r, &polys).unwrap()
    }

    fn gb_strings(r: &Ring<PrimeField>, g: &GroebnerBasis<PrimeField>) -> Vec<String> {
        g.elements()
            .iter()
            .map(|e| e.component(r, 0).display(r))
            .collect()
    }

    #[test]
    fn linear_ideal() {
        let r = ring(4);
        let g = buchberger(&ideal(&r, &["x0", "x1"])).unwrap();
        let mut s = gb_strings(&r, &g);
        s.sort();
        assert_eq!(s, vec!["x0", "x1"]);
    }

    #[test]
    fn skew_lines() {
        let r = ring(4);
        let g = buchberger(&ideal(&r, &["x0*x2", "x0*x3", "x1*x2", "x1*x3"])).unwrap();
        let mut s = gb_strings(&r, &g);
        s.sort();
        assert_eq!(s, vec!["x0*x2", "x0*x3", "x1*x2", "x1*x3"]);
    }

    #[test]
    fn twisted_cubic_has_three_elements() {
        let r = ring(4);
        let g = buchberger(&ideal(&r, &["x0*x2-x1^2", "x0*x3-x1*x2", "x1*x3-x2^2"])).unwrap();
        assert_eq!(g.len(), 3);
        assert!(g.is_reduced());
    }

    #[test]
    fn normal_form_examples() {
        let r = ring(4);
        let g = buchberger(&ideal(&r, &["x1", "x2", "x3"])).unwrap();
        let v = ModuleElement::from_poly(&parse_poly("x0^2", &r).unwrap());
        assert_eq!(normal_form(&v, &g).unwrap(), v);
        let skew = buchberger(&ideal(&r, &["x0*x2", "x0*x3", "x1*x2", "x1*x3"])).unwrap();
        let w = ModuleElement::from_poly(&parse_poly("x0*x1*x2", &r).unwrap());
        assert!(normal_form(&w, &skew).unwrap().is_zero());
    }

    #[test]
    fn koszul_syzygy() {
        let r = ring(2);
        let s = syzygies(&ideal(&r, &["x0", "x1"])).unwrap();
        assert_eq!(s.gens().len(), 1);
        let comps = s.gens()[0].components(s.ambient());
        let a = comps[0].display(&r);
        let b = comps[1].display(&r);
        assert!((a == "x1" && b == "-x0") || (a == "-x1" && b == "x0"), "{a} {b}");
    }

    #[test]
    fn skew_lines_syzygies_are_linear() {
        let r = ring(4);
        let s = syzygies(&ideal(&r, &["x0*x2", "x0*x3", "x1*x2", "x1*x3"])).unwrap();
        assert_eq!(s.gens().len(), 4);
        assert!(s.gen_degrees().iter().all(|&d| d == 3));
    }

    #[test]
    fn nonzerodivisor_has_no_syzygies() {
        let r = ring(3);
        let s = syzygies(&ideal(&r, &["x0^2+x1*x2"])).unwrap();
        assert!(s.is_zero());
    }

    #[test]
    fn identity_kernel_is_zero() {
        let r = ring(2);
        let f = FreeModule::new(&r, vec![0]);
        let a = Matrix::new(f.clone(), f.clone(), vec![f.basis(0)]).unwrap();
        assert!(kernel_of_map(&a, &[]).unwrap().is_zero());
    }

    #[test]
    fn multiplication_kernel_on_quotient() {
        // x0 on R/(x0 x1): kernel generated by x1
        let r = ring(3);
        let f = FreeModule::new(&r, vec![0]);
        let src = FreeModule::new(&r, vec![-1]);
        let x0 = ModuleElement::from_poly(&r.var(0));
        let a = Matrix::new(src, f, vec![x0]).unwrap();
        let rel = ModuleElement::from_poly(&parse_poly("x0*x1", &r).unwrap());
        let k = kernel_of_map(&a, &[rel]).unwrap();
        assert_eq!(k.gens().len(), 1);
        assert_eq!(k.gens()[0].component(&r, 0).display(&r), "x1");
    }

    #[test]
    fn degree_cap_is_an_error() {
        let r = ring(3).with_degree_cap(3);
        let res = buchberger(&ideal(&r, &["x0^2*x1 - x2^3", "x0*x1^2 - x2^3"]));
        assert!(matches!(res, Err(Error::DegreeCapExceeded { .. })));
    }
}
