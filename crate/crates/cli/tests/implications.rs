//! Implications between the intersection predicates, over every pair of
//! modules bound in the same corpus script.

use gint_cli::interp::module_bindings;
use gint_cli::{corpus, parse_script, RunOptions};
use gint_core::criteria;
use gint_core::modalg::{ext_dims, tensor_over_ring};
use gint_core::resolve::is_cohen_macaulay;
use gint_core::{Presentation, PrimeField};

type P = Presentation<PrimeField>;

/// Every pair of nonzero modules sharing a script, with a label.
fn corpus_pairs() -> Vec<(String, P, P)> {
    let mut out = Vec::new();
    for (name, text) in corpus::CORPUS {
        let script = parse_script(text).unwrap();
        let mods: Vec<_> = module_bindings(&script, &RunOptions::default())
            .unwrap()
            .into_iter()
            .filter(|(_, m)| !m.is_zero())
            .collect();
        for (i, (a, m)) in mods.iter().enumerate() {
            for (b, n) in &mods[i..] {
                out.push((format!("{name}:{a},{b}"), m.clone(), n.clone()));
            }
        }
    }
    out
}

/// Unmixed and locally CM: every Ext off the codimension has finite length.
fn unmixed_locally_cm(m: &P) -> bool {
    let codim = m.ring_dim() - m.dim();
    ext_dims(m)
        .unwrap()
        .iter()
        .enumerate()
        .all(|(i, &d)| i as i64 == codim || d <= 0)
}

#[test]
fn very_proper_implies_proper() {
    let mut bad = Vec::new();
    for (label, m, n) in corpus_pairs() {
        if criteria::very_proper(&m, &n).unwrap() && !criteria::intersects_properly(&m, &n).unwrap().passed() {
            bad.push(label);
        }
    }
    assert!(bad.is_empty(), "{bad:?}");
}

#[test]
fn proper_locally_cm_pairs_are_very_proper() {
    let mut bad = Vec::new();
    let mut tested = 0;
    for (label, m, n) in corpus_pairs() {
        if !(unmixed_locally_cm(&m) && unmixed_locally_cm(&n)) {
            continue;
        }
        if !criteria::intersects_properly(&m, &n).unwrap().passed() {
            continue;
        }
        tested += 1;
        if !criteria::very_proper(&m, &n).unwrap() {
            bad.push(label);
        }
    }
    println!("{tested} proper pairs of unmixed locally CM modules");
    assert!(bad.is_empty(), "{bad:?}");
}

/// Proper with a CM tensor product of positive dimension should force both
/// factors to be CM. The two-threefold pair in six variables (and the same
/// pair in the cone script) is a counterexample: the intersection is CM of
/// dimension 2 while the union of the two linear spaces has depth 3.
#[test]
fn cm_tensor_lifting_under_proper_intersection() {
    let mut bad = Vec::new();
    for (label, m, n) in corpus_pairs() {
        if !criteria::intersects_properly(&m, &n).unwrap().passed() {
            continue;
        }
        let t = tensor_over_ring(&m, &n).unwrap();
        if t.dim() < 1 || !is_cohen_macaulay(&t).unwrap() {
            continue;
        }
        if !(is_cohen_macaulay(&m).unwrap() && is_cohen_macaulay(&n).unwrap()) {
            bad.push(label);
        }
    }
    println!("proper pairs with CM tensor but non-CM factor: {bad:?}");
    for label in &bad {
        assert!(
            label.starts_with("example_1_3:") || label.starts_with("remark_5_6:"),
            "unexpected counterexample {label}"
        );
    }
    assert!(!bad.is_empty());
}
