//! Minimal graded free resolutions and the invariants read from them.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::groebner::{kernel_mod, minimal_generators};
use crate::module::{FreeModule, Matrix};
use crate::presentation::Presentation;

/// `0 <- F_0 <- F_1 <- ... <- F_l <- 0`; `maps[i]` is `F_{i+1} -> F_i`.
#[derive(Clone, Debug)]
pub struct Resolution<K: Field> {
    pub modules: Vec<FreeModule<K>>,
    pub maps: Vec<Matrix<K>>,
    pub minimal: bool,
}

impl<K: Field> Resolution<K> {
    /// Projective dimension (`-1` only for the zero module).
    pub fn length(&self) -> i64 {
        self.modules.iter().rposition(|f| f.rank() > 0).map_or(-1, |i| i as i64)
    }

    pub fn betti(&self) -> BettiTable {
        let mut entries = BTreeMap::new();
        for (i, f) in self.modules.iter().enumerate() {
            for d in f.gen_degrees() {
                *entries.entry((i, d)).or_insert(0) += 1;
            }
        }
        BettiTable { entries }
    }

    /// `d_i ∘ d_{i+1} = 0` for every consecutive pair.
    pub fn is_complex(&self) -> bool {
        self.maps
            .windows(2)
            .all(|w| w[0].compose(&w[1]).is_zero())
    }

    /// Whether no map has a unit entry.
    pub fn is_minimal(&self) -> bool {
        self.maps.iter().all(|m| !m.has_unit_entry())
    }
}

/// Graded Betti numbers `β_{i,j}`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BettiTable {
    pub entries: BTreeMap<(usize, i32), usize>,
}

impl Serialize for BettiTable {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(Some(self.entries.len()))?;
        for ((i, j), b) in &self.entries {
            m.serialize_entry(&format!("{i},{j}"), b)?;
        }
        m.end()
    }
}

impl BettiTable {
    pub fn get(&self, i: usize, j: i32) -> usize {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// Total Betti numbers `β_0, β_1, ...`.
    pub fn totals(&self) -> Vec<usize> {
        let len = self.entries.keys().map(|(i, _)| i + 1).max().unwrap_or(0);
        let mut out = vec![0; len];
        for ((i, _), b) in &self.entries {
            out[*i] += b;
        }
        out
    }

    /// Graded convolution `β_{k,d} = Σ β_{i,a} β'_{j,d-a}` over `i + j = k`.
    pub fn convolve(&self, other: &BettiTable) -> BettiTable {
        let mut entries = BTreeMap::new();
        for ((i, a), x) in &self.entries {
            for ((j, b), y) in &other.entries {
                *entries.entry((i + j, a + b)).or_insert(0) += x * y;
            }
        }
        BettiTable { entries }
    }

    /// Text grid: rows are `j - i`, columns are `i`.
    pub fn to_grid(&self) -> String {
        if self.entries.is_empty() {
            return "zero module\n".into();
        }
        let ncols = self.totals().len();
        let rows: Vec<i32> = {
            let mut r: Vec<i32> = self.entries.keys().map(|(i, j)| j - *i as i32).collect();
            r.sort_unstable();
            r.dedup();
            (r[0]..=*r.last().unwrap()).collect()
        };
        let width = self
            .entries
            .values()
            .map(|b| b.to_string().len())
            .chain(self.totals().iter().map(|b| b.to_string().len()))
            .max()
            .unwrap_or(1)
            .max(ncols.to_string().len());
        let label = rows
            .iter()
            .map(|r| r.to_string().len())
            .max()
            .unwrap_or(1)
            .max(6);
        let mut out = String::new();
        let _ = write!(out, "{:>label$}", "");
        for i in 0..ncols {
            let _ = write!(out, " {i:>width$}");
        }
        out.push('\n');
        let _ = write!(out, "{:>label$}", "total:");
        for b in self.totals() {
            let _ = write!(out, " {b:>width$}");
        }
        out.push('\n');
        for r in rows {
            let _ = write!(out, "{:>label$}", format!("{r}:"));
            for i in 0..ncols {
                let b = self.get(i, r + i as i32);
                if b == 0 {
                    let _ = write!(out, " {:>width$}", ".");
                } else {
                    let _ = write!(out, " {b:>width$}");
                }
            }
            out.push('\n');
        }
        out
    }
}

/// Minimal graded free resolution of `M`.
pub fn minimal_resolution<K: Field>(m: &Presentation<K>) -> Result<std::sync::Arc<Resolution<K>>> {
    m.resolution()
}

pub(crate) fn minimal_resolution_of<K: Field>(m: &Presentation<K>) -> Result<Resolution<K>> {
    let c = m.canonical()?;
    let ring = c.ring().clone();
    let n = ring.nvars();
    let f0 = c.generators().clone();
    let rels = c.relations().to_vec();
    let mut modules = vec![f0.clone()];
    let mut maps = Vec::new();
    if f0.rank() == 0 {
        return Ok(Resolution {
            modules,
            maps,
            minimal: true,
        });
    }
    let mut source = FreeModule::from_degrees(&ring, &c.relation_degrees());
    let mut cols = rels;
    let mut target = f0;
    while !cols.is_empty() {
        let d = Matrix::new(source.clone(), target.clone(), cols.clone())?;
        modules.push(source.clone());
        maps.push(d);
        if modules.len() > n + 2 {
            return Err(Error::Hypotheses(
                "resolution longer than the number of variables".into(),
            ));
        }
        let ker = kernel_mod(&source, &target, &cols, &[])?;
        let min = minimal_generators(&source, &ker)?;
        let degs: Vec<i32> = min
            .iter()
            .map(|v| v.degree(&source).expect("homogeneous syzygy"))
            .collect();
        target = source;
        source = FreeModule::from_degrees(&ring, &degs);
        cols = min;
    }
    Ok(Resolution {
        modules,
        maps,
        minimal: true,
    })
}

/// Invariants read from the minimal resolution.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomologicalData {
    pub betti: BettiTable,
    pub pd: i64,
    pub depth: i64,
    pub dim: i64,
    pub is_cm: bool,
    /// Last total Betti number; the Cohen-Macaulay type when `is_cm`.
    pub cm_type: usize,
}

pub fn homological_data<K: Field>(m: &Presentation<K>) -> Result<HomologicalData> {
    if m.is_zero() {
        return Err(Error::ZeroModule("depth of the zero module".into()));
    }
    let res = m.resolution()?;
    let pd = res.length();
    let depth = m.ring_dim() - pd;
    let dim = m.dim();
    Ok(HomologicalData {
        betti: res.betti(),
        pd,
        depth,
        dim,
        is_cm: depth == dim,
        cm_type: res.modules[pd as usize].rank(),
    })
}

/// `depth M = dim R - pd M`.
pub fn depth<K: Field>(m: &Presentation<K>) -> Result<i64> {
    Ok(homological_data(m)?.depth)
}

pub fn is_cohen_macaulay<K: Field>(m: &Presentation<K>) -> Result<bool> {
    Ok(homological_data(m)?.is_cm)
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

    fn quotient(r: &Ring<PrimeField>, gens: &[&str]) -> Presentation<PrimeField> {
        let polys: Vec<_> = gens.iter().map(|g| parse_poly(g, r).unwrap()).collect();
        Presentation::quotient_by_polys(r, &polys).unwrap()
    }

    #[test]
    fn koszul_betti_numbers() {
        let r = ring(4);
        let m = quotient(&r, &["x0", "x1", "x2", "x3"]);
        let res = m.resolution().unwrap();
        assert_eq!(res.betti().totals(), vec![1, 4, 6, 4, 1]);
        assert!(res.is_complex());
        assert!(res.is_minimal());
    }

    #[test]
    fn skew_lines_resolution() {
        let r = ring(4);
        let m = quotient(&r, &["x0*x2", "x0*x3", "x1*x2", "x1*x3"]);
        let h = homological_data(&m).unwrap();
        assert_eq!(h.betti.totals(), vec![1, 4, 4, 1]);
        assert_eq!((h.pd, h.depth, h.dim, h.is_cm), (3, 1, 2, false));
    }

    #[test]
    fn twisted_cubic_resolution() {
        let r = ring(4);
        let m = quotient(&r, &["x0*x2 - x1^2", "x0*x3 - x1*x2", "x1*x3 - x2^2"]);
        let h = homological_data(&m).unwrap();
        assert_eq!(h.betti.totals(), vec![1, 3, 2]);
        assert_eq!(h.betti.get(2, 3), 2);
        assert!(h.is_cm);
        assert_eq!(h.cm_type, 2);
    }

    #[test]
    fn quadric_hypersurface() {
        let r = ring(4);
        let m = quotient(&r, &["x0*x3 - x1*x2"]);
        let h = homological_data(&m).unwrap();
        assert_eq!((h.pd, h.depth, h.dim, h.is_cm, h.cm_type), (1, 3, 3, true, 1));
    }

    #[test]
    fn betti_grid_layout() {
        let r = ring(2);
        let m = quotient(&r, &["x0", "x1"]);
        let grid = m.resolution().unwrap().betti().to_grid();
        assert!(grid.contains("total:"));
        assert_eq!(grid.lines().count(), 3);
    }
}
