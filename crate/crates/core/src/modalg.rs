//! Module algebra on presentations: syzygy modules, tensor products over `R`
//! and over `K`, Hom, Ext, colon, annihilator, saturation and `H^0`.

use rand::Rng;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::groebner::{kernel_mod, minimal_generators, Submodule};
use crate::hilbert::HilbertSeries;
use crate::module::{FreeModule, ModuleElement, Term};
use crate::monomial::{Monomial, MAX_VARS};
use crate::poly::Polynomial;
use crate::presentation::{element_from_loose, Presentation};
use crate::ring::{PolyRing, Ring};

/// Default bound on `Hom(m^[t], M)` stages tried by [`sections_h0`].
pub const DEFAULT_SECTIONS_CAP: usize = 8;

/// `R/I`.
pub fn quotient_module<K: Field>(ideal: &Submodule<K>) -> Result<Presentation<K>> {
    Presentation::quotient(ideal)
}

/// `(span(gens) + span(modulo)) / span(modulo)` inside `ambient`.
pub fn subquotient<K: Field>(
    ambient: &FreeModule<K>,
    gens: &[ModuleElement<K>],
    modulo: &[ModuleElement<K>],
) -> Result<Presentation<K>> {
    let ring = ambient.ring();
    let gens = minimal_generators(ambient, gens)?;
    let degs: Vec<i32> = gens
        .iter()
        .map(|g| g.degree(ambient).ok_or_else(|| Error::NotHomogeneous("generator".into())))
        .collect::<Result<_>>()?;
    let source = FreeModule::from_degrees(ring, &degs);
    let rels = kernel_mod(&source, ambient, &gens, modulo)?;
    Presentation::new(source, rels)?.canonical()
}

/// The ideal `I` as a module, `I ≅ R^r / syz(I)`.
pub fn ideal_module<K: Field>(ideal: &Submodule<K>) -> Result<Presentation<K>> {
    subquotient(ideal.ambient(), ideal.gens(), &[])
}

/// `I_1 ∩ ... ∩ I_r` as the kernel of `R -> ⊕ R/I_j`.
pub fn intersect_ideals<K: Field>(ring: &Ring<K>, ideals: &[Submodule<K>]) -> Result<Submodule<K>> {
    let source = FreeModule::new(ring, vec![0]);
    let Some(first) = ideals.first() else {
        return Submodule::new(&source, vec![source.basis(0)]);
    };
    let mut acc = first.clone();
    for next in &ideals[1..] {
        if !acc.ambient().same_as(&source) || !next.ambient().same_as(&source) {
            return Err(Error::AmbientMismatch);
        }
        let target = FreeModule::new(ring, vec![0, 0]);
        let one: Vec<Polynomial<K>> = vec![Polynomial::one(ring), Polynomial::one(ring)];
        let image = ModuleElement::from_components(&target, &one)?;
        let left = [Some(0)];
        let right = [Some(1)];
        let mut modulo: Vec<_> = acc.gens().iter().map(|g| g.reindex(&target, &left)).collect();
        modulo.extend(next.gens().iter().map(|g| g.reindex(&target, &right)));
        let ker = kernel_mod(&source, &target, &[image], &modulo)?;
        acc = Submodule::new(&source, minimal_generators(&source, &ker)?)?;
    }
    if !acc.ambient().same_as(&source) {
        return Err(Error::AmbientMismatch);
    }
    Ok(acc)
}

/// The `k`-th syzygy module of `R/I`: the image of the `(k+1)`-st map of a
/// minimal resolution, so `k = 1` gives the syzygies of the generators of `I`.
pub fn syzygy_module<K: Field>(ideal: &Submodule<K>, k: usize) -> Result<Presentation<K>> {
    let m = quotient_module(ideal)?;
    let res = m.resolution()?;
    let pd = res.length().max(0) as usize;
    if k == 0 || k >= pd {
        return Err(Error::SyzygyIndexTooLarge { k, pd });
    }
    let gens = res.modules[k + 1].clone();
    let rels = match res.maps.get(k + 1) {
        Some(d) => d.columns.clone(),
        None => Vec::new(),
    };
    Presentation::new(gens, rels)
}

/// `k`-th syzygy module of an arbitrary presentation (`k = 0` is `M`).
pub fn syzygy_of_module<K: Field>(m: &Presentation<K>, k: usize) -> Result<Presentation<K>> {
    if k == 0 {
        return Ok(m.clone());
    }
    let res = m.resolution()?;
    let pd = res.length().max(0) as usize;
    if k > pd {
        return Err(Error::SyzygyIndexTooLarge { k, pd });
    }
    let gens = res.modules[k].clone();
    let rels = match res.maps.get(k) {
        Some(d) => d.columns.clone(),
        None => Vec::new(),
    };
    Presentation::new(gens, rels)
}

fn check_same_ring<K: Field>(a: &Presentation<K>, b: &Presentation<K>, what: &str) -> Result<()> {
    if a.ring().same_ring(b.ring()) {
        Ok(())
    } else {
        Err(Error::RingMismatch(what.into()))
    }
}

/// Build an element of `target` from terms with remapped variables and
/// components.
fn embed<K: Field>(
    target: &FreeModule<K>,
    v: &ModuleElement<K>,
    var_map: Option<&[usize]>,
    comp_map: impl Fn(u32) -> u32,
) -> ModuleElement<K> {
    let terms = v
        .terms()
        .iter()
        .map(|t| Term {
            mon: var_map.map_or(t.mon, |m| t.mon.remap(m)),
            comp: comp_map(t.comp),
            coeff: t.coeff.clone(),
        })
        .collect();
    element_from_loose(target, terms)
}

/// Generator grid and relations `E⊗G`, `F⊗D` of a tensor product, with
/// optional variable remapping for joins.
fn tensor_grid<K: Field>(
    ring: &Ring<K>,
    m: &Presentation<K>,
    n: &Presentation<K>,
    map_m: Option<&[usize]>,
    map_n: Option<&[usize]>,
) -> Result<Presentation<K>> {
    let (fm, fn_) = (m.generators(), n.generators());
    let nb = fn_.rank() as u32;
    let mut degs = Vec::with_capacity(fm.rank() * fn_.rank());
    for a in 0..fm.rank() {
        for b in 0..fn_.rank() {
            degs.push(fm.gen_degree(a) + fn_.gen_degree(b));
        }
    }
    let grid = FreeModule::from_degrees(ring, &degs);
    let mut rels = Vec::new();
    for e in m.relations() {
        for b in 0..nb {
            rels.push(embed(&grid, e, map_m, |a| a * nb + b));
        }
    }
    for d in n.relations() {
        for a in 0..fm.rank() as u32 {
            rels.push(embed(&grid, d, map_n, |b| a * nb + b));
        }
    }
    Presentation::new(grid, rels)
}

/// `M ⊗_R N`. For cyclic modules this is `R/(I + J)` up to shift.
pub fn tensor_over_ring<K: Field>(m: &Presentation<K>, n: &Presentation<K>) -> Result<Presentation<K>> {
    check_same_ring(m, n, "tensor product")?;
    tensor_grid(m.ring(), m, n, None, None)
}

/// Variable names for a join ring: the left names, then the right names with
/// collisions renamed.
fn join_names(left: &[String], right: &[String]) -> Vec<String> {
    let mut out: Vec<String> = left.to_vec();
    for r in right {
        let mut name = r.clone();
        if out.contains(&name) {
            if let Some(rest) = r.strip_prefix('x') {
                name = format!("y{rest}");
            }
        }
        while out.contains(&name) {
            name.push_str("_2");
        }
        out.push(name);
    }
    out
}

/// The polynomial ring `K[x, y]` of a join.
pub fn join_ring<K: Field>(a: &PolyRing<K>, b: &PolyRing<K>) -> Result<Ring<K>> {
    let needed = a.nvars() + b.nvars();
    if needed > MAX_VARS {
        return Err(Error::VariableCapExceeded {
            cap: MAX_VARS,
            needed,
        });
    }
    if a.field() != b.field() {
        return Err(Error::RingMismatch("coefficient fields differ".into()));
    }
    let ring = PolyRing::new(
        a.field().clone(),
        join_names(a.var_names(), b.var_names()),
        a.order(),
    )?;
    Ok(ring.with_degree_cap(a.degree_cap().max(b.degree_cap())))
}

/// `M ⊗_K N` over the join ring; `M` lives on the first block of variables.
pub fn join_over_field<K: Field>(m: &Presentation<K>, n: &Presentation<K>) -> Result<Presentation<K>> {
    let ring = join_ring(m.ring(), n.ring())?;
    join_in(&ring, m, n)
}

fn join_in<K: Field>(ring: &Ring<K>, m: &Presentation<K>, n: &Presentation<K>) -> Result<Presentation<K>> {
    let n1 = m.ring().nvars();
    let map_m: Vec<usize> = (0..n1).collect();
    let map_n: Vec<usize> = (0..n.ring().nvars()).map(|j| n1 + j).collect();
    tensor_grid(ring, m, n, Some(&map_m), Some(&map_n))
}

/// The diagonal `Δ = (x_i - y_i)` in `R ⊗_K R`.
#[derive(Clone, Debug)]
pub struct DiagonalContext<K: Field> {
    pub source_ring: Ring<K>,
    pub join_ring: Ring<K>,
    pub diagonal_gens: Vec<Polynomial<K>>,
}

impl<K: Field> DiagonalContext<K> {
    pub fn new(source: &Ring<K>) -> Result<Self> {
        let join = join_ring(source, source)?;
        let n = source.nvars();
        let diagonal_gens = (0..n).map(|i| join.var(i).sub(&join, &join.var(n + i))).collect();
        Ok(Self {
            source_ring: source.clone(),
            join_ring: join,
            diagonal_gens,
        })
    }

    /// `M ⊗_K N` for `M`, `N` over the source ring.
    pub fn join(&self, m: &Presentation<K>, n: &Presentation<K>) -> Result<Presentation<K>> {
        if !m.ring().same_ring(&self.source_ring) || !n.ring().same_ring(&self.source_ring) {
            return Err(Error::RingMismatch("diagonal context".into()));
        }
        join_in(&self.join_ring, m, n)
    }

    /// `P / Δ P`.
    pub fn reduce(&self, p: &Presentation<K>) -> Result<Presentation<K>> {
        let f = p.generators();
        let mut rels = p.relations().to_vec();
        for c in 0..f.rank() {
            for l in &self.diagonal_gens {
                rels.push(f.basis(c).mul_poly(f, l));
            }
        }
        Presentation::new(f.clone(), rels)
    }
}

/// `Hom_R(M, N)` as the subquotient `{φ: F0 -> G0 | φ(E) ⊆ D} / Hom(F0, D)`.
pub fn hom_modules<K: Field>(m: &Presentation<K>, n: &Presentation<K>) -> Result<Presentation<K>> {
    check_same_ring(m, n, "Hom")?;
    let ring = m.ring().clone();
    let m = m.canonical()?;
    let n = n.canonical()?;
    let (f0, g0) = (m.generators(), n.generators());
    let (na, nb) = (f0.rank(), g0.rank());
    if na == 0 || nb == 0 {
        return Ok(Presentation::zero(&ring));
    }
    let mut pdeg = Vec::with_capacity(na * nb);
    for a in 0..na {
        for b in 0..nb {
            pdeg.push(g0.gen_degree(b) - f0.gen_degree(a));
        }
    }
    let p = FreeModule::from_degrees(&ring, &pdeg);
    let rel_deg = m.relation_degrees();
    let mut qdeg = Vec::with_capacity(rel_deg.len() * nb);
    for d in &rel_deg {
        for b in 0..nb {
            qdeg.push(g0.gen_degree(b) - d);
        }
    }
    let q = FreeModule::from_degrees(&ring, &qdeg);
    // α(φ_{a,b}) = Σ_c A_{a,c} e_{c,b}
    let mut alpha: Vec<Vec<Term<K::Elem>>> = vec![Vec::new(); na * nb];
    for (c, rel) in m.relations().iter().enumerate() {
        for t in rel.terms() {
            for b in 0..nb {
                alpha[t.comp as usize * nb + b].push(Term {
                    mon: t.mon,
                    comp: (c * nb + b) as u32,
                    coeff: t.coeff.clone(),
                });
            }
        }
    }
    let alpha: Vec<_> = alpha.into_iter().map(|ts| element_from_loose(&q, ts)).collect();
    let nb32 = nb as u32;
    let mut beta = Vec::new();
    for c in 0..rel_deg.len() as u32 {
        for d in n.relations() {
            beta.push(embed(&q, d, None, |b| c * nb32 + b));
        }
    }
    let mut gamma = Vec::new();
    for a in 0..na as u32 {
        for d in n.relations() {
            gamma.push(embed(&p, d, None, |b| a * nb32 + b));
        }
    }
    let ker = kernel_mod(&p, &q, &alpha, &beta)?;
    subquotient(&p, &ker, &gamma)
}

/// `M^* = Hom_R(M, R)`.
pub fn dual<K: Field>(m: &Presentation<K>) -> Result<Presentation<K>> {
    let r = Presentation::free(FreeModule::new(m.ring(), vec![0]));
    hom_modules(m, &r)
}

/// `Ext^i_R(M, R)` from the dual of the minimal resolution.
pub fn ext_module<K: Field>(m: &Presentation<K>, i: i64) -> Result<Presentation<K>> {
    let ring = m.ring();
    let res = m.resolution()?;
    if i < 0 || i > res.length() {
        return Ok(Presentation::zero(ring));
    }
    let i = i as usize;
    let fi_dual = res.modules[i].dual();
    let kernel_gens = match res.maps.get(i) {
        Some(d) => {
            let dt = d.transpose();
            kernel_mod(&fi_dual, &dt.target, &dt.columns, &[])?
        }
        None => (0..fi_dual.rank()).map(|c| fi_dual.basis(c)).collect(),
    };
    let image = if i == 0 {
        Vec::new()
    } else {
        res.maps[i - 1].transpose().columns
    };
    subquotient(&fi_dual, &kernel_gens, &image)
}

/// All `Ext^i_R(M, R)` for `0 <= i <= dim R`.
pub fn ext_modules<K: Field>(m: &Presentation<K>) -> Result<std::sync::Arc<Vec<Presentation<K>>>> {
    m.ext_all()
}

/// Krull dimensions of `Ext^i_R(M, R)`, `-1` marking zero modules.
pub fn ext_dims<K: Field>(m: &Presentation<K>) -> Result<Vec<i64>> {
    Ok(ext_modules(m)?.iter().map(|e| e.dim()).collect())
}

/// `0 :_M f`, the kernel of multiplication by `f`, as a submodule of `M`.
pub fn colon<K: Field>(m: &Presentation<K>, f: &Polynomial<K>) -> Result<Presentation<K>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !f.is_homogeneous() {
        return Err(Error::NotHomogeneous("colon element".into()));
    }
    let k = f.degree().expect("nonzero") as i32;
    let gens = m.generators();
    let source = gens.shift(-k);
    let images: Vec<_> = (0..gens.rank()).map(|c| gens.basis(c).mul_poly(gens, f)).collect();
    let ker = kernel_mod(&source, gens, &images, m.relations())?;
    // the kernel lives in F(-k); as elements of F the terms are unchanged
    subquotient(gens, &ker, m.relations())
}

/// Whether `f` is a nonzerodivisor on `M`.
pub fn is_regular<K: Field>(m: &Presentation<K>, f: &Polynomial<K>) -> Result<bool> {
    Ok(colon(m, f)?.is_zero())
}

/// `Ann_R(M)`.
pub fn annihilator<K: Field>(m: &Presentation<K>) -> Result<Submodule<K>> {
    let ring = m.ring();
    let r1 = FreeModule::new(ring, vec![0]);
    let f = m.generators();
    let r = f.rank();
    if r == 0 || m.is_zero() {
        return Submodule::ideal(ring, &[Polynomial::one(ring)]);
    }
    // copy i of F shifted so that e_i sits in degree 0
    let mut twists = Vec::with_capacity(r * r);
    for i in 0..r {
        for c in 0..r {
            twists.push(f.twists()[c] - f.twists()[i]);
        }
    }
    let target = FreeModule::new(ring, twists);
    let r32 = r as u32;
    let image = {
        let k = ring.field();
        let terms = (0..r32)
            .map(|i| Term {
                mon: Monomial::one(),
                comp: i * r32 + i,
                coeff: k.one(),
            })
            .collect();
        element_from_loose(&target, terms)
    };
    let mut modulo = Vec::new();
    for i in 0..r32 {
        for g in m.relations() {
            modulo.push(embed(&target, g, None, |c| i * r32 + c));
        }
    }
    let ker = kernel_mod(&r1, &target, &[image], &modulo)?;
    let ker = minimal_generators(&r1, &ker)?;
    Submodule::new(&r1, ker)
}

/// One step `E : m`, returned as generators in `F`.
fn colon_max_ideal<K: Field>(m: &Presentation<K>) -> Result<Vec<ModuleElement<K>>> {
    let ring = m.ring();
    let f = m.generators();
    let n = ring.nvars();
    let r = f.rank() as u32;
    let source = f.shift(-1);
    let mut twists = Vec::with_capacity(n * f.rank());
    for _ in 0..n {
        twists.extend_from_slice(f.twists());
    }
    let target = FreeModule::new(ring, twists);
    let k = ring.field();
    let images: Vec<_> = (0..r)
        .map(|c| {
            let terms = (0..n)
                .map(|i| Term {
                    mon: Monomial::var(i),
                    comp: i as u32 * r + c,
                    coeff: k.one(),
                })
                .collect();
            element_from_loose(&target, terms)
        })
        .collect();
    let mut modulo = Vec::new();
    for i in 0..n as u32 {
        for g in m.relations() {
            modulo.push(embed(&target, g, None, |c| i * r + c));
        }
    }
    let ker = kernel_mod(&source, &target, &images, &modulo)?;
    Ok(ker.iter().map(|v| embed(f, v, None, |c| c)).collect())
}

/// `M^sm = F / E^sat`, iterating `E <- E : m` until the Groebner basis is
/// stable. Generators of `F` are kept.
pub fn saturate<K: Field>(m: &Presentation<K>) -> Result<Presentation<K>> {
    let mut cur = m.clone();
    loop {
        if cur.generators().rank() == 0 {
            return Ok(cur);
        }
        let mut rels = cur.relations().to_vec();
        rels.extend(colon_max_ideal(&cur)?);
        let next = Presentation::new(cur.generators().clone(), rels)?;
        if next.gb() == cur.gb() {
            return Ok(cur);
        }
        cur = next;
    }
}

/// Whether `E : m = E`.
pub fn is_saturated<K: Field>(m: &Presentation<K>) -> Result<bool> {
    let mut rels = m.relations().to_vec();
    rels.extend(colon_max_ideal(m)?);
    let next = Presentation::new(m.generators().clone(), rels)?;
    Ok(next.gb() == m.gb())
}

/// `m^[t] = (x_0^t, ..., x_n^t)` presented by its Koszul relations.
pub fn frobenius_power_of_maximal_ideal<K: Field>(ring: &Ring<K>, t: u32) -> Result<Presentation<K>> {
    let n = ring.nvars();
    let f = FreeModule::from_degrees(ring, &vec![t as i32; n]);
    let k = ring.field();
    let pw = |i: usize| {
        let mut e = [0u32; MAX_VARS];
        e[i] = t;
        Monomial::from_exponents(&e[..n.max(1)])
    };
    let mut rels = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let terms = vec![
                Term {
                    mon: pw(j),
                    comp: i as u32,
                    coeff: k.one(),
                },
                Term {
                    mon: pw(i),
                    comp: j as u32,
                    coeff: k.neg(&k.one()),
                },
            ];
            rels.push(element_from_loose(&f, terms));
        }
    }
    Presentation::new(f, rels)
}

/// Dimensions of `[H^i_m(M)]_d` for `d` in `window`, from
/// `[Ext^{N-i}(M, R)]_{-d-N}` with `N = dim R`.
pub fn local_cohomology_dims<K: Field>(
    ext: &[Presentation<K>],
    nvars: i64,
    i: i64,
    window: std::ops::RangeInclusive<i64>,
) -> Vec<u64> {
    let j = nvars - i;
    window
        .map(|d| {
            if j < 0 || j as usize >= ext.len() {
                0
            } else {
                ext[j as usize].hilbert().value(-d - nvars)
            }
        })
        .collect()
}

/// Series of a finite-length module with graded dimensions `dims` starting
/// at degree `low`, over `nvars` variables.
fn finite_series(nvars: usize, low: i32, dims: &[i64]) -> HilbertSeries {
    let mut num = dims.to_vec();
    for _ in 0..nvars {
        let mut next = vec![0i64; num.len() + 1];
        for (i, c) in num.iter().enumerate() {
            next[i] += c;
            next[i + 1] -= c;
        }
        num = next;
    }
    let s = HilbertSeries {
        nvars,
        low,
        coeffs: num,
    };
    HilbertSeries::zero(nvars).add(&s)
}

/// `H^0(M) = lim Hom(m^t, M)` using the cofinal system `m^[t]`.
///
/// Requires `H^1_m(M)` of finite length. The limit is reached once the
/// Hilbert series of the current stage equals `HS(M^sm) + HS(H^1_m(M))`.
pub fn sections_h0<K: Field>(m: &Presentation<K>, cap: usize) -> Result<Presentation<K>> {
    let ring = m.ring().clone();
    let nv = ring.nvars() as i64;
    let sat = saturate(m)?;
    if sat.is_zero() {
        return Ok(Presentation::zero(&ring));
    }
    let e = ext_module(&sat, nv - 1)?;
    if e.is_zero() {
        return sat.canonical();
    }
    if e.dim() > 0 {
        return Err(Error::SectionsNotStable {
            cap,
            reason: format!("H^1_m has dimension {}", e.dim()),
        });
    }
    let eh = e.hilbert();
    let lo = eh.initial_degree().expect("nonzero");
    let hi = eh.top_degree().expect("finite length");
    // [H^1_m]_d = [Ext]_{-d-N}: degrees from -hi-N to -lo-N
    let h1_low = -hi - nv;
    let dims: Vec<i64> = (h1_low..=-lo - nv)
        .map(|d| eh.value(-d - nv) as i64)
        .collect();
    let target = sat
        .hilbert()
        .series
        .add(&finite_series(ring.nvars(), h1_low as i32, &dims));
    for t in 1..=cap {
        let mt = frobenius_power_of_maximal_ideal(&ring, t as u32)?;
        let h = hom_modules(&mt, &sat)?;
        if h.hilbert().series == target {
            return h.canonical();
        }
    }
    Err(Error::SectionsNotStable {
        cap,
        reason: "Hilbert series did not reach the expected limit".into(),
    })
}

/// A random form `f` of degree `deg` with `dim M/fM = dim M - 1` for `m` and
/// every nonzero constraint.
pub fn find_parameter<K: Field, R: Rng + ?Sized>(
    m: &Presentation<K>,
    deg: u32,
    constraints: &[Presentation<K>],
    trials: usize,
    rng: &mut R,
) -> Result<Polynomial<K>> {
    if deg == 0 {
        return Err(Error::DegreeMismatch("parameter degree must be positive".into()));
    }
    let mut targets = vec![m];
    targets.extend(constraints.iter().filter(|c| !c.is_zero()));
    if targets.iter().any(|x| x.dim() <= 0) {
        return Err(Error::NoParameterFound { trials: 0 });
    }
    let ring = m.ring();
    for _ in 0..trials {
        let f = Polynomial::random_form(ring, deg, rng);
        if f.is_zero() {
            continue;
        }
        let mut ok = true;
        for x in &targets {
            if x.mod_element(&f)?.dim() != x.dim() - 1 {
                ok = false;
                break;
            }
        }
        if ok {
            return Ok(f);
        }
    }
    Err(Error::NoParameterFound { trials })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use crate::parse::parse_poly;

    fn ring(n: usize) -> Ring<PrimeField> {
        PolyRing::with_vars(PrimeField::default(), "x", n).unwrap()
    }

    fn ideal(r: &Ring<PrimeField>, gens: &[&str]) -> Submodule<PrimeField> {
        let polys: Vec<_> = gens.iter().map(|g| parse_poly(g, r).unwrap()).collect();
        Submodule::ideal(r, &polys).unwrap()
    }

    fn quotient(r: &Ring<PrimeField>, gens: &[&str]) -> Presentation<PrimeField> {
        quotient_module(&ideal(r, gens)).unwrap()
    }

    #[test]
    fn intersection_of_coordinate_lines() {
        let r = ring(4);
        let a = Submodule::ideal(&r, &[r.var(0), r.var(1)]).unwrap();
        let b = Submodule::ideal(&r, &[r.var(2), r.var(3)]).unwrap();
        let c = intersect_ideals(&r, &[a, b]).unwrap();
        assert_eq!(c.gens().len(), 4);
        assert_eq!(c.gen_degrees(), vec![2, 2, 2, 2]);
    }

    #[test]
    fn example_4_6_intersection() {
        let r = ring(4);
        let m = quotient(&r, &["x0*x2", "x0*x3", "x1*x2", "x1*x3"]);
        let n = quotient(&r, &["x1+x2", "x0+x3"]);
        let t = tensor_over_ring(&m, &n).unwrap();
        assert_eq!((t.dim(), t.degree()), (0, 3));
        assert_eq!(m.degree() * n.degree(), 2);
    }

    #[test]
    fn koszul_syzygy_module() {
        let r = ring(2);
        let e = syzygy_module(&ideal(&r, &["x0", "x1"]), 1).unwrap();
        assert_eq!(e.generators().gen_degrees(), vec![2]);
        assert!(e.relations().is_empty());
    }

    #[test]
    fn twisted_cubic_syzygies() {
        let r = ring(4);
        let e = syzygy_module(
            &ideal(&r, &["x0*x2 - x1^2", "x0*x3 - x1*x2", "x1*x3 - x2^2"]),
            1,
        )
        .unwrap();
        assert_eq!(e.generators().gen_degrees(), vec![3, 3]);
    }

    #[test]
    fn syzygy_index_bound() {
        let r = ring(2);
        assert!(matches!(
            syzygy_module(&ideal(&r, &["x0", "x1"]), 2),
            Err(Error::SyzygyIndexTooLarge { .. })
        ));
    }

    #[test]
    fn hom_of_free_and_torsion() {
        let r = ring(3);
        let free = Presentation::free(FreeModule::new(&r, vec![1]));
        let d = dual(&free).unwrap();
        assert_eq!(d.generators().gen_degrees(), vec![1]);
        assert!(d.relations().is_empty());
        let tors = quotient(&r, &["x0"]);
        assert!(dual(&tors).unwrap().is_zero());
    }

    #[test]
    fn skew_lines_ext() {
        let r = ring(4);
        let m = quotient(&r, &["x0*x2", "x0*x3", "x1*x2", "x1*x3"]);
        let dims = ext_dims(&m).unwrap();
        assert_eq!(dims, vec![-1, -1, 2, 0, -1]);
    }

    #[test]
    fn colon_detects_zero_divisors() {
        let r = ring(2);
        let m = quotient(&r, &["x0*x1"]);
        let x0 = r.var(0);
        let c = colon(&m, &x0).unwrap();
        assert!(!c.is_zero());
        assert_eq!(c.dim(), 1);
        let free = quotient(&r, &[]);
        assert!(is_regular(&free, &x0).unwrap());
    }

    #[test]
    fn annihilator_of_cyclic_module() {
        let r = ring(3);
        let m = quotient(&r, &["x0^2", "x0*x1"]);
        let ann = annihilator(&m).unwrap();
        let back = quotient_module(&ann).unwrap();
        assert_eq!(back.gb(), m.gb());
        let z = Presentation::zero(&r);
        assert_eq!(annihilator(&z).unwrap().gens().len(), 1);
    }

    #[test]
    fn saturation_removes_irrelevant_component() {
        let r = ring(3);
        // (x0) ∩ (x0, x1, x2)^2
        let m = quotient(&r, &["x0^2", "x0*x1", "x0*x2"]);
        let s = saturate(&m).unwrap();
        assert_eq!(s.gb(), quotient(&r, &["x0"]).gb());
        assert!(!is_saturated(&m).unwrap());
        assert!(is_saturated(&s).unwrap());
    }

    #[test]
    fn diagonal_reduction_matches_tensor() {
        let r = ring(3);
        let m = quotient(&r, &["x0*x1"]);
        let n = quotient(&r, &["x2^2", "x0 + x1"]);
        let ctx = DiagonalContext::new(&r).unwrap();
        let j = ctx.reduce(&ctx.join(&m, &n).unwrap()).unwrap();
        let t = tensor_over_ring(&m, &n).unwrap();
        for d in 0..6 {
            assert_eq!(j.hilbert().value(d), t.hilbert().value(d));
        }
    }

    #[test]
    fn sections_of_depth_two_module() {
        let r = ring(3);
        let m = quotient(&r, &["x0"]);
        let h = sections_h0(&m, 4).unwrap();
        assert!(h.same_canonical(&m).unwrap());
    }

    #[test]
    fn sections_of_point_ideal_product() {
        // two points in P^2: H^0(I1 I2) = I1 ∩ I2
        let r = ring(3);
        let prod = ideal_module(&ideal(&r, &["x0*x1", "x1^2", "x0*x2", "x1*x2"])).unwrap();
        let inter = ideal_module(&ideal(&r, &["x1", "x0*x2"])).unwrap();
        let h = sections_h0(&prod, 4).unwrap();
        assert_eq!(h.hilbert().series, inter.hilbert().series);
    }
}
