//! Executable checks for intersection, Cohen-Macaulay and splitting
//! statements about graded modules.
//!
//! Every check returns a [`CheckReport`] listing the hypotheses it evaluated,
//! the numeric evidence it gathered, and one of three conclusions. A check
//! whose hypotheses hold but whose conclusion fails signals a bug, never a
//! mathematical discovery.

use std::collections::BTreeMap;
use std::ops::RangeInclusive;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::modalg::{
    dual, is_regular, is_saturated, join_over_field, local_cohomology_dims, saturate,
    tensor_over_ring,
};
use crate::poly::Polynomial;
use crate::presentation::Presentation;
use crate::resolve::homological_data;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Conclusion {
    Pass,
    Fail,
    HypothesesNotMet,
}

impl Conclusion {
    pub fn as_str(&self) -> &'static str {
        match self {
            Conclusion::Pass => "pass",
            Conclusion::Fail => "fail",
            Conclusion::HypothesesNotMet => "hypotheses_not_met",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Hypothesis {
    pub name: String,
    pub holds: bool,
    pub evidence: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub check: String,
    pub inputs: Vec<String>,
    pub hypotheses: Vec<Hypothesis>,
    pub conclusion: Conclusion,
    pub evidence: BTreeMap<String, i64>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    pub seed: Option<u64>,
}

impl CheckReport {
    pub fn new(check: &str) -> Self {
        Self {
            check: check.to_string(),
            inputs: Vec::new(),
            hypotheses: Vec::new(),
            conclusion: Conclusion::HypothesesNotMet,
            evidence: BTreeMap::new(),
            notes: Vec::new(),
            seed: None,
        }
    }

    pub fn with_inputs(mut self, inputs: &[&str]) -> Self {
        self.inputs = inputs.iter().map(|s| s.to_string()).collect();
        self
    }

    pub fn with_seed(mut self, seed: Option<u64>) -> Self {
        self.seed = seed;
        self
    }

    fn hyp(&mut self, name: &str, holds: bool, evidence: impl Into<String>) -> bool {
        self.hypotheses.push(Hypothesis {
            name: name.to_string(),
            holds,
            evidence: evidence.into(),
        });
        holds
    }

    fn ev(&mut self, key: impl Into<String>, v: i64) {
        self.evidence.insert(key.into(), v);
    }

    fn all_hypotheses_hold(&self) -> bool {
        self.hypotheses.iter().all(|h| h.holds)
    }

    /// Conclusion from the asserted identity, respecting hypotheses.
    fn conclude(mut self, identity_holds: bool) -> Self {
        self.conclusion = if !self.all_hypotheses_hold() {
            Conclusion::HypothesesNotMet
        } else if identity_holds {
            Conclusion::Pass
        } else {
            Conclusion::Fail
        };
        self
    }

    pub fn passed(&self) -> bool {
        self.conclusion == Conclusion::Pass
    }
}

/// `dim` bound that zero modules (dimension `-1`) always satisfy.
fn within(dim: i64, bound: i64) -> bool {
    dim < 0 || dim <= bound
}

fn ext_dims_of<K: Field>(m: &Presentation<K>) -> Result<Vec<i64>> {
    Ok(m.ext_all()?.iter().map(|e| e.dim()).collect())
}

/// Unmixedness from Ext dimensions: `dim Ext^i <= N - 1 - i` for
/// `N - dim M < i <= N`.
pub fn unmixed_from_ext(ext: &[i64], dim: i64, nvars: i64) -> bool {
    ((nvars - dim + 1).max(0)..=nvars).all(|i| within(ext[i as usize], nvars - 1 - i))
}

pub fn module_is_unmixed<K: Field>(m: &Presentation<K>) -> Result<bool> {
    if m.is_zero() {
        return Ok(true);
    }
    Ok(unmixed_from_ext(&ext_dims_of(m)?, m.dim(), m.ring_dim()))
}

pub fn is_unmixed<K: Field>(m: &Presentation<K>) -> Result<CheckReport> {
    if m.is_zero() {
        return Err(Error::ZeroModule("unmixedness".into()));
    }
    let n = m.ring_dim();
    let ext = ext_dims_of(m)?;
    let mut r = CheckReport::new("unmixed");
    r.ev("dim", m.dim());
    for (i, d) in ext.iter().enumerate() {
        r.ev(format!("ext_dim[{i}]"), *d);
    }
    let ok = unmixed_from_ext(&ext, m.dim(), n);
    Ok(r.conclude(ok))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct MaximalFlags {
    pub is_maximal: bool,
    pub is_torsion_free: bool,
    pub is_reflexive: bool,
}

pub fn maximal_module_flags<K: Field>(m: &Presentation<K>) -> Result<MaximalFlags> {
    let n = m.ring_dim();
    let is_maximal = m.dim() == n;
    if !is_maximal {
        return Ok(MaximalFlags {
            is_maximal,
            is_torsion_free: false,
            is_reflexive: false,
        });
    }
    let ext = ext_dims_of(m)?;
    let is_torsion_free = unmixed_from_ext(&ext, m.dim(), n);
    let is_reflexive = (1..n).all(|i| within(ext[(n - i) as usize], i - 2));
    Ok(MaximalFlags {
        is_maximal,
        is_torsion_free,
        is_reflexive,
    })
}

fn flag_report<K: Field>(m: &Presentation<K>, name: &str, pick: fn(&MaximalFlags) -> bool) -> Result<CheckReport> {
    let f = maximal_module_flags(m)?;
    let mut r = CheckReport::new(name);
    r.ev("dim", m.dim());
    if f.is_maximal {
        for (i, d) in ext_dims_of(m)?.iter().enumerate() {
            r.ev(format!("ext_dim[{i}]"), *d);
        }
    }
    Ok(r.conclude(pick(&f)))
}

pub fn maximal_check<K: Field>(m: &Presentation<K>) -> Result<CheckReport> {
    flag_report(m, "maximal", |f| f.is_maximal)
}

pub fn torsion_free_check<K: Field>(m: &Presentation<K>) -> Result<CheckReport> {
    flag_report(m, "torsion_free", |f| f.is_torsion_free)
}

pub fn reflexive_check<K: Field>(m: &Presentation<K>) -> Result<CheckReport> {
    flag_report(m, "reflexive", |f| f.is_reflexive)
}

fn same_ring<K: Field>(m: &Presentation<K>, n: &Presentation<K>) -> Result<()> {
    if m.ring().same_ring(n.ring()) {
        Ok(())
    } else {
        Err(Error::RingMismatch("modules over different rings".into()))
    }
}

pub fn intersects_properly<K: Field>(m: &Presentation<K>, n: &Presentation<K>) -> Result<CheckReport> {
    same_ring(m, n)?;
    let t = tensor_over_ring(m, n)?;
    let mut r = CheckReport::new("proper");
    let expected = m.dim() + n.dim() - m.ring_dim();
    r.ev("dim_m", m.dim());
    r.ev("dim_n", n.dim());
    r.ev("dim_tensor", t.dim());
    r.ev("expected_dim", expected);
    Ok(r.conclude(t.dim() == expected))
}

/// Very proper intersection: `dim M + dim N >= N` and for all `(i, j)` with
/// both Ext modules nonzero, `dim Ext^i ⊗ Ext^j = max{0, dim Ext^i +
/// dim Ext^j - N}`; a zero tensor passes iff the sum is at most `N`.
pub fn intersects_very_properly<K: Field>(m: &Presentation<K>, n: &Presentation<K>) -> Result<CheckReport> {
    same_ring(m, n)?;
    let nv = m.ring_dim();
    let mut r = CheckReport::new("very_proper");
    r.ev("dim_m", m.dim());
    r.ev("dim_n", n.dim());
    let mut ok = m.dim() + n.dim() >= nv;
    let (em, en) = (m.ext_all()?, n.ext_all()?);
    for (i, a) in em.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        r.ev(format!("ext_m_dim[{i}]"), a.dim());
        for (j, b) in en.iter().enumerate() {
            if b.is_zero() {
                continue;
            }
            r.ev(format!("ext_n_dim[{j}]"), b.dim());
            let t = tensor_over_ring(a, b)?;
            r.ev(format!("tensor_dim[{i},{j}]"), t.dim());
            let pair_ok = if t.is_zero() {
                a.dim() + b.dim() <= nv
            } else {
                t.dim() == (a.dim() + b.dim() - nv).max(0)
            };
            if !pair_ok {
                r.notes.push(format!(
                    "pair ({i},{j}): dim {} but {} required",
                    t.dim(),
                    (a.dim() + b.dim() - nv).max(0)
                ));
                ok = false;
            }
        }
    }
    Ok(r.conclude(ok))
}

pub fn very_proper<K: Field>(m: &Presentation<K>, n: &Presentation<K>) -> Result<bool> {
    Ok(intersects_very_properly(m, n)?.passed())
}

fn depth_or_none<K: Field>(m: &Presentation<K>) -> Result<Option<i64>> {
    if m.is_zero() {
        Ok(None)
    } else {
        Ok(Some(homological_data(m)?.depth))
    }
}

/// Degree multiplicativity and unmixedness of the slight modification.
pub fn bezout_check<K: Field>(m: &Presentation<K>, n: &Presentation<K>) -> Result<CheckReport> {
    same_ring(m, n)?;
    let nv = m.ring_dim();
    let mut r = CheckReport::new("bezout");
    let um = module_is_unmixed(m)?;
    let un = module_is_unmixed(n)?;
    r.hyp("m_unmixed", um, "");
    r.hyp("n_unmixed", un, "");
    let vp = very_proper(m, n)?;
    r.hyp("very_proper", vp, "");
    let t = tensor_over_ring(m, n)?;
    let (dm, dn) = (depth_or_none(m)?.unwrap_or(-1), depth_or_none(n)?.unwrap_or(-1));
    let dimpos = t.dim() > 0 || dm + dn >= nv;
    r.hyp(
        "positive_dimension_or_depth",
        dimpos,
        format!("dim tensor {}, depth sum {}", t.dim(), dm + dn),
    );
    r.ev("dim_tensor", t.dim());
    r.ev("deg_tensor", t.degree());
    r.ev("deg_m", m.degree());
    r.ev("deg_n", n.degree());
    r.ev("deg_product", m.degree() * n.degree());
    r.ev("depth_m", dm);
    r.ev("depth_n", dn);
    let sat = saturate(&t)?;
    let sat_unmixed = module_is_unmixed(&sat)?;
    r.ev("sat_unmixed", sat_unmixed as i64);
    let deg_ok = t.degree() == m.degree() * n.degree();
    Ok(r.conclude(sat_unmixed && deg_ok))
}

/// Degree of `M/fM` for a parameter `f`.
pub fn degree_hypersurface_check<K: Field>(m: &Presentation<K>, f: &Polynomial<K>) -> Result<CheckReport> {
    let mut r = CheckReport::new("degree_hypersurface");
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let k = f.degree().expect("nonzero") as i64;
    let q = m.mod_element(f)?;
    let param = m.dim() >= 1 && q.dim() == m.dim() - 1;
    r.hyp("parameter", param, format!("dim M {}, dim M/fM {}", m.dim(), q.dim()));
    let c = crate::modalg::colon(m, f)?;
    r.ev("deg_f", k);
    r.ev("deg_m", m.degree());
    r.ev("deg_quotient", q.degree());
    r.ev("dim_colon", c.dim());
    r.ev("deg_colon", c.degree());
    let expected = if c.dim() == m.dim() - 1 {
        k * m.degree() + c.degree()
    } else {
        k * m.degree()
    };
    r.ev("expected", expected);
    Ok(r.conclude(q.degree() == expected))
}

/// `depth M ⊗ N = max{0, depth M + depth N - N}`.
pub fn depth_formula_check<K: Field>(m: &Presentation<K>, n: &Presentation<K>) -> Result<CheckReport> {
    same_ring(m, n)?;
    let nv = m.ring_dim();
    let mut r = CheckReport::new("depth_formula");
    r.hyp("m_unmixed", module_is_unmixed(m)?, "");
    r.hyp("n_unmixed", module_is_unmixed(n)?, "");
    r.hyp("very_proper", very_proper(m, n)?, "");
    let t = tensor_over_ring(m, n)?;
    let dm = depth_or_none(m)?.unwrap_or(-1);
    let dn = depth_or_none(n)?.unwrap_or(-1);
    let dt = depth_or_none(&t)?.unwrap_or(-1);
    let expected = (dm + dn - nv).max(0);
    r.ev("depth_m", dm);
    r.ev("depth_n", dn);
    r.ev("depth_tensor", dt);
    r.ev("expected", expected);
    Ok(r.conclude(dt == expected))
}

/// Cohen-Macaulay lifting from a very proper intersection.
pub fn cm_lifting_check<K: Field>(m: &Presentation<K>, n: &Presentation<K>) -> Result<CheckReport> {
    same_ring(m, n)?;
    let mut r = CheckReport::new("cm_lifting");
    r.hyp("m_unmixed", module_is_unmixed(m)?, "");
    r.hyp("n_unmixed", module_is_unmixed(n)?, "");
    r.hyp("very_proper", very_proper(m, n)?, "");
    let t = tensor_over_ring(m, n)?;
    let sat = saturate(&t)?;
    let cond_i = !sat.is_zero() && sat.dim() >= 2 && homological_data(&sat)?.is_cm;
    let cond_ii = t.dim() == 0 && t.degree() == m.degree() * n.degree();
    r.hyp(
        "cm_intersection_or_degree_identity",
        cond_i || cond_ii,
        format!("sat CM of dim >= 2: {cond_i}; dim 0 with degree identity: {cond_ii}"),
    );
    let cm_m = homological_data(m)?.is_cm;
    let cm_n = homological_data(n)?.is_cm;
    r.ev("m_cm", cm_m as i64);
    r.ev("n_cm", cm_n as i64);
    r.ev("dim_tensor", t.dim());
    r.ev("deg_tensor", t.degree());
    let out = r.conclude(cm_m && cm_n);
    Ok(out)
}

/// `type(M ⊗ N) = type(M) · type(N)` for Cohen-Macaulay data.
pub fn type_product_check<K: Field>(m: &Presentation<K>, n: &Presentation<K>) -> Result<CheckReport> {
    same_ring(m, n)?;
    let mut r = CheckReport::new("type_product");
    let hm = homological_data(m)?;
    let hn = homological_data(n)?;
    r.hyp("m_cm", hm.is_cm, "");
    r.hyp("n_cm", hn.is_cm, "");
    r.hyp("very_proper", very_proper(m, n)?, "");
    let t = tensor_over_ring(m, n)?;
    let ht = homological_data(&t)?;
    r.hyp("tensor_cm", ht.is_cm, "");
    r.ev("type_m", hm.cm_type as i64);
    r.ev("type_n", hn.cm_type as i64);
    r.ev("type_tensor", ht.cm_type as i64);
    Ok(r.conclude(ht.cm_type == hm.cm_type * hn.cm_type))
}

/// Last degree with a possibly nonzero `[H^i_m(M)]_d`.
fn lc_end<K: Field>(ext: &[Presentation<K>], nvars: i64, i: i64) -> Option<i64> {
    let j = nvars - i;
    if j < 0 || j as usize >= ext.len() {
        return None;
    }
    ext[j as usize].hilbert().initial_degree().map(|init| -init - nvars)
}

/// Graded local cohomology of a join against the convolution of the
/// factors, plus depth additivity.
pub fn kunneth_check<K: Field>(
    m1: &Presentation<K>,
    m2: &Presentation<K>,
    window: RangeInclusive<i64>,
) -> Result<CheckReport> {
    let mut r = CheckReport::new("kunneth");
    let j = join_over_field(m1, m2)?;
    let (n1, n2, nj) = (m1.ring_dim(), m2.ring_dim(), j.ring_dim());
    let (e1, e2, ej) = (m1.ext_all()?, m2.ext_all()?, j.ext_all()?);
    let mut ok = true;
    let mut mismatches = 0;
    for k in 0..=nj {
        let lhs = local_cohomology_dims(&ej, nj, k, window.clone());
        for (idx, d) in window.clone().enumerate() {
            let mut rhs: u64 = 0;
            for i in 0..=k.min(n1) {
                let jj = k - i;
                if jj > n2 {
                    continue;
                }
                let (Some(end1), Some(end2)) = (lc_end(&e1, n1, i), lc_end(&e2, n2, jj)) else {
                    continue;
                };
                for a in (d - end2)..=end1 {
                    let x = local_cohomology_dims(&e1, n1, i, a..=a)[0];
                    if x == 0 {
                        continue;
                    }
                    let y = local_cohomology_dims(&e2, n2, jj, (d - a)..=(d - a))[0];
                    rhs += x * y;
                }
            }
            if lhs[idx] != rhs {
                ok = false;
                mismatches += 1;
                r.notes.push(format!("H^{k} in degree {d}: join {} vs convolution {rhs}", lhs[idx]));
            }
            if lhs[idx] != 0 {
                r.ev(format!("h{k}[{d}]"), lhs[idx] as i64);
            }
        }
    }
    r.ev("mismatches", mismatches);
    let dj = depth_or_none(&j)?.unwrap_or(-1);
    let d1 = depth_or_none(m1)?.unwrap_or(-1);
    let d2 = depth_or_none(m2)?.unwrap_or(-1);
    r.ev("depth_join", dj);
    r.ev("depth_sum", d1 + d2);
    Ok(r.conclude(ok && dj == d1 + d2))
}

/// Graded Betti numbers of a join are the convolution of the factors'.
pub fn betti_join_check<K: Field>(m1: &Presentation<K>, m2: &Presentation<K>) -> Result<CheckReport> {
    let mut r = CheckReport::new("betti_join");
    let j = join_over_field(m1, m2)?;
    let b1 = homological_data(m1)?.betti;
    let b2 = homological_data(m2)?.betti;
    let hj = homological_data(&j)?;
    for (i, t) in hj.betti.totals().iter().enumerate() {
        r.ev(format!("total[{i}]"), *t as i64);
    }
    let expected = b1.convolve(&b2);
    Ok(r.conclude(hj.betti == expected))
}

/// Depth lifting from a hyperplane section.
pub fn hyperplane_lift_check<K: Field>(m: &Presentation<K>, f: &Polynomial<K>) -> Result<CheckReport> {
    let mut r = CheckReport::new("hyperplane_lift");
    r.hyp("unmixed", module_is_unmixed(m)?, "");
    if !is_regular(m, f)? {
        return Err(Error::Hypotheses("element is not regular on the module".into()));
    }
    let q = m.mod_element(f)?;
    let sat = saturate(&q)?;
    let t = depth_or_none(&sat)?.unwrap_or(-1);
    r.hyp("section_depth_at_least_two", t >= 2, format!("depth {t}"));
    let dm = depth_or_none(m)?.unwrap_or(-1);
    r.ev("depth_m", dm);
    r.ev("depth_section", t);
    let saturated = is_saturated(&q)?;
    r.ev("section_saturated", saturated as i64);
    Ok(r.conclude(dm == t + 1 && saturated))
}

/// Splitting criteria for reflexive modules.
#[derive(Clone, Debug)]
pub enum SplitMode<K: Field> {
    /// `H^1_*(E ⊗ E^*) = 0` forces `E` free.
    EndVanishing,
    /// `E ⊗ F` free with a very proper intersection forces both free.
    TensorSplit(Presentation<K>),
}

pub fn splitting_check<K: Field>(e: &Presentation<K>, mode: &SplitMode<K>) -> Result<CheckReport> {
    let nv = e.ring_dim();
    let flags = maximal_module_flags(e)?;
    let pd_e = homological_data(e)?.pd;
    match mode {
        SplitMode::EndVanishing => {
            let mut r = CheckReport::new("splitting_end_vanishing");
            r.hyp("maximal", flags.is_maximal, "");
            r.hyp("reflexive", flags.is_reflexive, "");
            let ext = ext_dims_of(e)?;
            let lf = (1..ext.len()).all(|i| ext[i] <= 0);
            r.hyp("locally_free_certificate", lf, "Ext^i(E,R) of finite length for i > 0");
            r.notes
                .push("local freeness is certified by finite-length Ext modules".into());
            let t = tensor_over_ring(e, &dual(e)?)?;
            // H^1_* of the sheaf is H^2_m, dual to Ext^{N-2}
            let h = &t.ext_all()?[(nv - 2).max(0) as usize];
            let vanishes = h.is_zero();
            r.ev("h1_end_vanishes", vanishes as i64);
            r.ev("ext_dim", h.dim());
            r.ev("pd", pd_e);
            r.ev("is_free", (pd_e == 0) as i64);
            if r.all_hypotheses_hold() && vanishes && pd_e != 0 {
                r.notes.push("vanishing holds but E is not free".into());
            }
            Ok(r.conclude(vanishes && pd_e == 0))
        }
        SplitMode::TensorSplit(f) => {
            same_ring(e, f)?;
            let mut r = CheckReport::new("splitting_tensor");
            let ff = maximal_module_flags(f)?;
            r.hyp("maximal", flags.is_maximal && ff.is_maximal, "");
            r.hyp("reflexive", flags.is_reflexive && ff.is_reflexive, "");
            r.hyp("very_proper", very_proper(e, f)?, "");
            let t = tensor_over_ring(e, f)?;
            let pd_t = homological_data(&t)?.pd;
            r.hyp("tensor_free", pd_t == 0, format!("pd {pd_t}"));
            let pd_f = homological_data(f)?.pd;
            r.ev("pd_e", pd_e);
            r.ev("pd_f", pd_f);
            r.ev("is_free", (pd_e == 0 && pd_f == 0) as i64);
            Ok(r.conclude(pd_e == 0 && pd_f == 0))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use crate::groebner::Submodule;
    use crate::modalg::quotient_module;
    use crate::module::FreeModule;
    use crate::parse::parse_poly;
    use crate::ring::{PolyRing, Ring};

    fn ring(n: usize) -> Ring<PrimeField> {
        PolyRing::with_vars(PrimeField::default(), "x", n).unwrap()
    }

    fn quotient(r: &Ring<PrimeField>, gens: &[&str]) -> Presentation<PrimeField> {
        let polys: Vec<_> = gens.iter().map(|g| parse_poly(g, r).unwrap()).collect();
        quotient_module(&Submodule::ideal(r, &polys).unwrap()).unwrap()
    }

    #[test]
    fn mixed_module_is_not_unmixed() {
        let r = ring(4);
        let m = quotient(&r, &["x0"]).direct_sum(&quotient(&r, &["x0", "x1", "x2"])).unwrap();
        assert_eq!(is_unmixed(&m).unwrap().conclusion, Conclusion::Fail);
        let skew = quotient(&r, &["x0*x2", "x0*x3", "x1*x2", "x1*x3"]);
        assert!(is_unmixed(&skew).unwrap().passed());
    }

    #[test]
    fn free_module_flags() {
        let r = ring(4);
        let f = Presentation::free(FreeModule::new(&r, vec![0, 1]));
        let fl = maximal_module_flags(&f).unwrap();
        assert!(fl.is_maximal && fl.is_torsion_free && fl.is_reflexive);
    }

    #[test]
    fn hyperplane_self_intersection_is_not_proper() {
        let r = ring(4);
        let h = quotient(&r, &["x0"]);
        assert_eq!(intersects_properly(&h, &h).unwrap().conclusion, Conclusion::Fail);
    }

    #[test]
    fn skew_lines_against_line() {
        let r = ring(4);
        let m = quotient(&r, &["x0*x2", "x0*x3", "x1*x2", "x1*x3"]);
        let n = quotient(&r, &["x1 + x2", "x0 + x3"]);
        assert!(intersects_very_properly(&m, &n).unwrap().passed());
        let b = bezout_check(&m, &n).unwrap();
        assert_eq!(b.conclusion, Conclusion::HypothesesNotMet);
        assert_eq!(b.evidence["deg_tensor"], 3);
        assert_eq!(b.evidence["deg_product"], 2);
        assert!(depth_formula_check(&m, &n).unwrap().passed());
    }

    #[test]
    fn quadric_and_hyperplane() {
        let r = ring(4);
        let q = quotient(&r, &["x0*x3 - x1*x2"]);
        let h = quotient(&r, &["x0 + x1 + x2 + x3"]);
        assert!(bezout_check(&q, &h).unwrap().passed());
        assert!(cm_lifting_check(&q, &h).unwrap().passed());
        assert!(type_product_check(&q, &h).unwrap().passed());
    }

    #[test]
    fn degree_of_quadric_section() {
        let r = ring(4);
        let m = quotient(&r, &[]);
        let f = parse_poly("x0^2 + x1*x2", &r).unwrap();
        let rep = degree_hypersurface_check(&m, &f).unwrap();
        assert!(rep.passed());
        assert_eq!(rep.evidence["deg_quotient"], 2);
    }

    #[test]
    fn hypersurface_lift() {
        let r = ring(5);
        let m = quotient(&r, &["x0*x1 - x2*x3"]);
        let rep = hyperplane_lift_check(&m, &r.var(4)).unwrap();
        assert!(rep.passed());
        assert_eq!(rep.evidence["depth_m"], 4);
    }

    #[test]
    fn points_kunneth_and_betti() {
        let a = PolyRing::with_vars(PrimeField::default(), "x", 2).unwrap();
        let b = PolyRing::with_vars(PrimeField::default(), "y", 2).unwrap();
        let m1 = quotient(&a, &["x0"]);
        let p2: Vec<_> = ["y0^2", "y0*y1"].iter().map(|g| parse_poly(g, &b).unwrap()).collect();
        let m2 = quotient_module(&Submodule::ideal(&b, &p2).unwrap()).unwrap();
        assert!(kunneth_check(&m1, &m2, -5..=5).unwrap().passed());
        assert!(betti_join_check(&m1, &m2).unwrap().passed());
    }

    #[test]
    fn splitting_of_free_and_cotangent_type_modules() {
        let r = ring(3);
        let free = Presentation::free(FreeModule::new(&r, vec![-1, 2]));
        assert!(splitting_check(&free, &SplitMode::EndVanishing).unwrap().passed());
        let polys: Vec<_> = ["x0", "x1", "x2"].iter().map(|g| parse_poly(g, &r).unwrap()).collect();
        let e = crate::modalg::syzygy_module(&Submodule::ideal(&r, &polys).unwrap(), 1).unwrap();
        let rep = splitting_check(&e, &SplitMode::EndVanishing).unwrap();
        assert_eq!(rep.conclusion, Conclusion::Fail);
        assert_eq!(rep.evidence["is_free"], 0);
    }
}
