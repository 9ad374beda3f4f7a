//! Finite presentations `F/E` of graded modules.

use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::groebner::{minimal_generators_with_basis, GroebnerBasis, Submodule};
use crate::hilbert::{series_from_gb, HilbertData};
use crate::module::{FreeModule, ModuleElement, Term};
use crate::poly::Polynomial;
use crate::resolve::{minimal_resolution_of, Resolution};
use crate::ring::Ring;

/// A graded module `F/E` with `E` given by minimal generators and a reduced
/// Groebner basis. Hilbert data and the minimal resolution are cached on
/// first use.
#[derive(Clone)]
pub struct Presentation<K: Field> {
    gens: FreeModule<K>,
    relations: Vec<ModuleElement<K>>,
    gb: GroebnerBasis<K>,
    hilbert: OnceLock<HilbertData>,
    resolution: OnceLock<Result<Arc<Resolution<K>>>>,
    ext: OnceLock<Result<Arc<Vec<Presentation<K>>>>>,
}

impl<K: Field> std::fmt::Debug for Presentation<K> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Presentation")
            .field("gens", &self.gens)
            .field("relations", &self.relations.len())
            .finish()
    }
}

impl<K: Field> Presentation<K> {
    pub fn new(gens: FreeModule<K>, relations: Vec<ModuleElement<K>>) -> Result<Self> {
        let sub = Submodule::new(&gens, relations)?;
        let (relations, gb) = minimal_generators_with_basis(&gens, sub.gens())?;
        Ok(Self {
            gens,
            relations,
            gb,
            hilbert: OnceLock::new(),
            resolution: OnceLock::new(),
            ext: OnceLock::new(),
        })
    }

    /// The free module `F` itself.
    pub fn free(gens: FreeModule<K>) -> Self {
        let gb = minimal_generators_with_basis(&gens, &[])
            .expect("empty input cannot fail")
            .1;
        Self {
            gens,
            relations: Vec::new(),
            gb,
            hilbert: OnceLock::new(),
            resolution: OnceLock::new(),
            ext: OnceLock::new(),
        }
    }

    /// `R/I`.
    pub fn quotient(ideal: &Submodule<K>) -> Result<Self> {
        if ideal.ambient().rank() != 1 || ideal.ambient().gen_degree(0) != 0 {
            return Err(Error::AmbientMismatch);
        }
        Self::new(ideal.ambient().clone(), ideal.gens().to_vec())
    }

    /// `R/(polys)`.
    pub fn quotient_by_polys(ring: &Ring<K>, polys: &[Polynomial<K>]) -> Result<Self> {
        Self::quotient(&Submodule::ideal(ring, polys)?)
    }

    /// The zero module over `ring`.
    pub fn zero(ring: &Ring<K>) -> Self {
        Self::free(FreeModule::new(ring, Vec::new()))
    }

    pub fn ring(&self) -> &Ring<K> {
        self.gens.ring()
    }

    pub fn generators(&self) -> &FreeModule<K> {
        &self.gens
    }

    /// Minimal generators of `E`, by increasing degree.
    pub fn relations(&self) -> &[ModuleElement<K>] {
        &self.relations
    }

    pub fn relation_module(&self) -> Submodule<K> {
        Submodule::new(&self.gens, self.relations.clone()).expect("validated relations")
    }

    pub fn gb(&self) -> &GroebnerBasis<K> {
        &self.gb
    }

    pub fn hilbert(&self) -> &HilbertData {
        self.hilbert
            .get_or_init(|| HilbertData::from_series(series_from_gb(&self.gens, &self.gb)))
    }

    pub fn dim(&self) -> i64 {
        self.hilbert().dim
    }

    pub fn degree(&self) -> i64 {
        self.hilbert().degree
    }

    pub fn is_zero(&self) -> bool {
        self.hilbert().is_zero()
    }

    /// Number of variables of the ambient ring, `dim R`.
    pub fn ring_dim(&self) -> i64 {
        self.ring().nvars() as i64
    }

    /// Cached minimal free resolution.
    pub fn resolution(&self) -> Result<Arc<Resolution<K>>> {
        self.resolution
            .get_or_init(|| minimal_resolution_of(self).map(Arc::new))
            .clone()
    }

    /// Cached `Ext^i_R(M, R)` for `0 <= i <= dim R`.
    pub fn ext_all(&self) -> Result<Arc<Vec<Presentation<K>>>> {
        self.ext
            .get_or_init(|| {
                (0..=self.ring_dim())
                    .map(|i| crate::modalg::ext_module(self, i))
                    .collect::<Result<Vec<_>>>()
                    .map(Arc::new)
            })
            .clone()
    }

    /// `M(d)`.
    pub fn shift(&self, d: i32) -> Self {
        Self::new(self.gens.shift(d), self.relations.clone()).expect("shift preserves validity")
    }

    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        if !self.ring().same_ring(other.ring()) {
            return Err(Error::RingMismatch("direct sum".into()));
        }
        let gens = self.gens.direct_sum(&other.gens);
        let off = self.gens.rank();
        let left: Vec<Option<usize>> = (0..off).map(Some).collect();
        let right: Vec<Option<usize>> = (0..other.gens.rank()).map(|i| Some(i + off)).collect();
        let mut rels: Vec<_> = self.relations.iter().map(|r| r.reindex(&gens, &left)).collect();
        rels.extend(other.relations.iter().map(|r| r.reindex(&gens, &right)));
        Self::new(gens, rels)
    }

    /// `M / f M`.
    pub fn mod_element(&self, f: &Polynomial<K>) -> Result<Self> {
        if f.is_zero() {
            return Ok(self.clone());
        }
        if !f.is_homogeneous() {
            return Err(Error::NotHomogeneous("ring element".into()));
        }
        let mut rels = self.relations.clone();
        for i in 0..self.gens.rank() {
            rels.push(self.gens.basis(i).mul_poly(&self.gens, f));
        }
        Self::new(self.gens.clone(), rels)
    }

    /// Minimal presentation: generators with a unit entry in some relation are
    /// eliminated, generators are sorted by degree, and the relations are
    /// re-derived from the reduced Groebner basis. Equal submodules of equal
    /// free modules give identical results.
    pub fn canonical(&self) -> Result<Self> {
        let ring = self.ring().clone();
        let k = ring.field().clone();
        let mut gens = self.gens.clone();
        let mut rels: Vec<ModuleElement<K>> = self.gb.elements().to_vec();
        loop {
            // pivot: lowest degree relation, then lowest position with a unit
            let mut pivot: Option<(i32, usize, usize)> = None;
            for (ri, r) in rels.iter().enumerate() {
                let d = match r.degree(&gens) {
                    Some(d) => d,
                    None => continue,
                };
                if let Some(t) = r.terms().iter().filter(|t| t.mon.is_one()).min_by_key(|t| t.comp) {
                    let cand = (d, t.comp as usize, ri);
                    if pivot.map_or(true, |p| (cand.0, cand.1) < (p.0, p.1)) {
                        pivot = Some(cand);
                    }
                }
            }
            let Some((_, j, ri)) = pivot else { break };
            let r = rels[ri].clone();
            let c = r
                .terms()
                .iter()
                .find(|t| t.mon.is_one() && t.comp as usize == j)
                .map(|t| t.coeff.clone())
                .expect("pivot term");
            let r = r.scale(&ring, &k.inv(&c).expect("unit"));
            let keep: Vec<usize> = (0..gens.rank()).filter(|&i| i != j).collect();
            let new_gens = FreeModule::new(
                &ring,
                keep.iter().map(|&i| gens.twists()[i]).collect(),
            );
            let mut map = vec![None; gens.rank()];
            for (n, &i) in keep.iter().enumerate() {
                map[i] = Some(n);
            }
            let mut next = Vec::with_capacity(rels.len());
            for (si, s) in rels.iter().enumerate() {
                if si == ri {
                    continue;
                }
                let sj = s.component(&ring, j);
                let s2 = if sj.is_zero() {
                    s.clone()
                } else {
                    s.sub(&gens, &r.mul_poly(&gens, &sj))
                };
                let s3 = s2.reindex(&new_gens, &map);
                if !s3.is_zero() {
                    next.push(s3);
                }
            }
            gens = new_gens;
            rels = next;
        }
        // stable sort of generators by degree
        let mut order: Vec<usize> = (0..gens.rank()).collect();
        order.sort_by_key(|&i| (gens.gen_degree(i), i));
        let sorted = FreeModule::new(&ring, order.iter().map(|&i| gens.twists()[i]).collect());
        let mut map = vec![None; gens.rank()];
        for (n, &i) in order.iter().enumerate() {
            map[i] = Some(n);
        }
        let rels: Vec<_> = rels.iter().map(|r| r.reindex(&sorted, &map)).collect();
        Self::new(sorted, rels)
    }

    /// Equal generator degrees and equal reduced Groebner bases after
    /// canonicalization.
    pub fn same_canonical(&self, other: &Self) -> Result<bool> {
        let (a, b) = (self.canonical()?, other.canonical()?);
        Ok(a.gens.same_as(&b.gens) && a.gb == b.gb)
    }

    /// Relations as columns of a matrix `F1 -> F0`.
    pub fn relation_degrees(&self) -> Vec<i32> {
        self.relations
            .iter()
            .map(|r| r.degree(&self.gens).expect("homogeneous relation"))
            .collect()
    }

    /// Whether `v` is zero in the module.
    pub fn is_zero_element(&self, v: &ModuleElement<K>) -> Result<bool> {
        self.gb.contains(v)
    }

    /// Human-readable relation list.
    pub fn display(&self) -> String {
        let rels: Vec<String> = self.relations.iter().map(|r| r.display(&self.gens)).collect();
        format!(
            "coker on generators of degrees {:?} with relations [{}]",
            self.gens.gen_degrees(),
            rels.join(", ")
        )
    }
}

/// Rebuild a term list from loose terms, sorted for `ambient`.
pub(crate) fn element_from_loose<K: Field>(
    ambient: &FreeModule<K>,
    terms: Vec<Term<K::Elem>>,
) -> ModuleElement<K> {
    let k = ambient.ring().field();
    let mut acc = std::collections::HashMap::new();
    for t in terms {
        let key = (t.mon, t.comp);
        match acc.get_mut(&key) {
            Some(x) => *x = k.add(x, &t.coeff),
            None => {
                acc.insert(key, t.coeff);
            }
        }
    }
    ModuleElement::from_terms(crate::module::collect_sorted(k, &ambient.term_order(), acc))
}
