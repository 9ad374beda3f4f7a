//! Sparse row reduction over an exact field.
//!
//! Used by the graded-piece oracle; it shares no code with the Groebner
//! engine.

use std::collections::HashMap;

use crate::field::Field;

/// A sparse row: `(column, value)` with strictly increasing columns.
pub type SparseRow<E> = Vec<(usize, E)>;

/// Incremental echelon form keyed by pivot column.
pub struct Echelon<K: Field> {
    k: K,
    pivots: HashMap<usize, SparseRow<K::Elem>>,
}

impl<K: Field> Echelon<K> {
    pub fn new(k: K) -> Self {
        Self {
            k,
            pivots: HashMap::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Reduce `row` against the pivots; store it if it is independent.
    /// Returns whether the rank grew.
    pub fn insert(&mut self, mut row: SparseRow<K::Elem>) -> bool {
        let k = &self.k;
        row.retain(|(_, c)| !k.is_zero(c));
        while let Some(&(lead, ref c)) = row.first() {
            match self.pivots.get(&lead) {
                Some(p) => {
                    // p is monic at `lead`
                    let f = k.neg(c);
                    row = axpy(k, &row, &f, p);
                }
                None => {
                    let inv = k.inv(c).expect("nonzero pivot");
                    for (_, v) in row.iter_mut() {
                        *v = k.mul(v, &inv);
                    }
                    self.pivots.insert(lead, row);
                    return true;
                }
            }
        }
        false
    }
}

fn axpy<K: Field>(k: &K, a: &SparseRow<K::Elem>, f: &K::Elem, b: &SparseRow<K::Elem>) -> SparseRow<K::Elem> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i].clone());
            i += 1;
        } else if i == a.len() || b[j].0 < a[i].0 {
            out.push((b[j].0, k.mul(f, &b[j].1)));
            j += 1;
        } else {
            let v = k.add(&a[i].1, &k.mul(f, &b[j].1));
            if !k.is_zero(&v) {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Rank of a list of sparse rows.
pub fn rank<K: Field>(k: &K, rows: impl IntoIterator<Item = SparseRow<K::Elem>>) -> usize {
    let mut e = Echelon::new(k.clone());
    for r in rows {
        e.insert(r);
    }
    e.rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;

    #[test]
    fn rank_of_dependent_rows() {
        let k = PrimeField::new(7).unwrap();
        let rows = vec![
            vec![(0, 1), (2, 3)],
            vec![(1, 2)],
            vec![(0, 2), (1, 4), (2, 6)],
        ];
        assert_eq!(rank(&k, rows), 2);
        assert_eq!(rank(&k, Vec::<SparseRow<u32>>::new()), 0);
    }
}
