//! Fixtures shared by the benchmarks.

use gint_core::modalg::{intersect_ideals, quotient_module};
use gint_core::{parse_poly, PolyRing, Presentation, PrimeField, Ring, Submodule};

pub fn ring(n: usize) -> Ring<PrimeField> {
    PolyRing::with_vars(PrimeField::default(), "x", n).unwrap()
}

pub fn ideal(r: &Ring<PrimeField>, gens: &[&str]) -> Submodule<PrimeField> {
    let polys: Vec<_> = gens.iter().map(|g| parse_poly(g, r).unwrap()).collect();
    Submodule::ideal(r, &polys).unwrap()
}

/// Two skew lines and a third line meeting both, in `n` variables.
pub fn skew_lines_and_line(n: usize) -> (Presentation<PrimeField>, Presentation<PrimeField>) {
    let r = ring(n);
    let i = intersect_ideals(&r, &[ideal(&r, &["x0", "x1"]), ideal(&r, &["x2", "x3"])]).unwrap();
    (
        quotient_module(&i).unwrap(),
        quotient_module(&ideal(&r, &["x1 + x2", "x0 + x3"])).unwrap(),
    )
}

/// Ideal of the twisted cubic.
pub fn twisted_cubic() -> Submodule<PrimeField> {
    let r = ring(4);
    ideal(&r, &["x0*x2 - x1^2", "x1*x3 - x2^2", "x0*x3 - x1*x2"])
}

/// Generic-looking cubics in four variables.
pub fn cyclic_cubics() -> Submodule<PrimeField> {
    let r = ring(4);
    ideal(
        &r,
        &[
            "x0 + x1 + x2 + x3",
            "x0*x1 + x1*x2 + x2*x3 + x3*x0",
            "x0*x1*x2 + x1*x2*x3 + x2*x3*x0 + x3*x0*x1",
        ],
    )
}
