use gint_core::modalg::{ext_dims, is_saturated, saturate};
use gint_core::*;
use proptest::prelude::*;

fn ring(n: usize) -> Ring<PrimeField> {
    PolyRing::with_vars(PrimeField::default(), "x", n).unwrap()
}

/// Sparse homogeneous form: picks of (monomial index, coefficient).
fn form_in(r: &Ring<PrimeField>, d: u32, picks: &[(usize, u32)]) -> Polynomial<PrimeField> {
    let mons = Monomial::all_of_degree(r.nvars(), d);
    let k = r.field();
    let terms = picks
        .iter()
        .map(|&(i, c)| (mons[i % mons.len()].clone(), k.from_i64(c as i64 - 5)))
        .collect();
    Polynomial::from_terms(r, terms)
}

fn picks() -> impl Strategy<Value = Vec<(usize, u32)>> {
    prop::collection::vec((0usize..64, 0u32..11), 1..4)
}

fn forms() -> impl Strategy<Value = Vec<(u32, Vec<(usize, u32)>)>> {
    prop::collection::vec((1u32..=3, picks()), 1..4)
}

fn build(r: &Ring<PrimeField>, spec: &[(u32, Vec<(usize, u32)>)]) -> Vec<Polynomial<PrimeField>> {
    spec.iter()
        .map(|(d, p)| form_in(r, *d, p))
        .filter(|f| !f.is_zero())
        .collect()
}

fn any_poly() -> impl Strategy<Value = Vec<(Vec<u32>, i64)>> {
    prop::collection::vec((prop::collection::vec(0u32..4, 3), -20i64..20), 0..6)
}

fn poly_of(r: &Ring<PrimeField>, t: &[(Vec<u32>, i64)]) -> Polynomial<PrimeField> {
    let k = r.field();
    Polynomial::from_terms(
        r,
        t.iter()
            .map(|(e, c)| (Monomial::from_exponents(e), k.from_i64(*c)))
            .collect(),
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn display_parses_back(t in any_poly()) {
        let r = ring(3);
        let f = poly_of(&r, &t);
        prop_assert_eq!(parse_poly(&f.display(&r), &r).unwrap(), f);
    }

    #[test]
    fn ring_laws(a in any_poly(), b in any_poly(), c in any_poly()) {
        let r = ring(3);
        let (f, g, h) = (poly_of(&r, &a), poly_of(&r, &b), poly_of(&r, &c));
        prop_assert_eq!(f.add(&r, &g).add(&r, &h), f.add(&r, &g.add(&r, &h)));
        prop_assert_eq!(f.mul(&r, &g), g.mul(&r, &f));
        prop_assert_eq!(f.mul(&r, &g.add(&r, &h)), f.mul(&r, &g).add(&r, &f.mul(&r, &h)));
        prop_assert_eq!(f.mul(&r, &g).mul(&r, &h), f.mul(&r, &g.mul(&r, &h)));
        prop_assert!(f.sub(&r, &f).is_zero());
    }

    #[test]
    fn groebner_basis_ignores_generator_order(spec in forms(), rot in 0usize..4) {
        let r = ring(3);
        let gens = build(&r, &spec);
        prop_assume!(!gens.is_empty());
        let mut shuffled = gens.clone();
        shuffled.reverse();
        let n = shuffled.len();
        shuffled.rotate_left(rot % n);
        let a = buchberger(&Submodule::ideal(&r, &gens).unwrap()).unwrap();
        let b = buchberger(&Submodule::ideal(&r, &shuffled).unwrap()).unwrap();
        prop_assert!(a == b);
    }

    #[test]
    fn syzygies_vanish_on_generators(spec in forms()) {
        let r = ring(3);
        let gens = build(&r, &spec);
        prop_assume!(!gens.is_empty());
        let s = Submodule::ideal(&r, &gens).unwrap();
        let syz = syzygies(&s).unwrap();
        let map = Matrix::new(syz.ambient().clone(), s.ambient().clone(), s.gens().to_vec()).unwrap();
        for v in syz.gens() {
            prop_assert!(map.apply(v).is_zero());
        }
    }

    #[test]
    fn ideal_combinations_are_members(spec in forms(), mult in any_poly()) {
        let r = ring(3);
        let gens = build(&r, &spec);
        prop_assume!(!gens.is_empty());
        let s = Submodule::ideal(&r, &gens).unwrap();
        let gb = buchberger(&s).unwrap();
        let m = poly_of(&r, &mult);
        let combo = gens.iter().fold(Polynomial::zero(), |acc, g| acc.add(&r, &g.mul(&r, &m)));
        prop_assert!(gb.contains(&ModuleElement::from_poly(&combo)).unwrap());
        for g in &gens {
            prop_assert!(normal_form(&ModuleElement::from_poly(g), &gb).unwrap().is_zero());
        }
    }

    #[test]
    fn saturation_is_idempotent(spec in forms()) {
        let r = ring(3);
        let m = Presentation::quotient_by_polys(&r, &build(&r, &spec)).unwrap();
        let s = saturate(&m).unwrap();
        prop_assert!(is_saturated(&s).unwrap());
        prop_assert!(saturate(&s).unwrap().same_canonical(&s).unwrap());
    }

    #[test]
    fn hilbert_function_matches_linear_algebra(spec in forms()) {
        let r = ring(3);
        let m = Presentation::quotient_by_polys(&r, &build(&r, &spec)).unwrap();
        let oracle = hilbert::oracle_hilbert(&m, 0..=7).unwrap();
        let gb: Vec<u64> = (0..=7).map(|t| hilbert::hilbert_function(&m, t)).collect();
        prop_assert_eq!(gb, oracle);
    }

    #[test]
    fn resolution_is_minimal_complex_with_consistent_depth(spec in forms()) {
        let r = ring(3);
        let m = Presentation::quotient_by_polys(&r, &build(&r, &spec)).unwrap();
        prop_assume!(!m.is_zero());
        let res = m.resolution().unwrap();
        prop_assert!(res.is_complex());
        prop_assert!(res.is_minimal());
        let ext = ext_dims(&m).unwrap();
        let top = ext.iter().rposition(|&d| d >= 0).unwrap() as i64;
        prop_assert_eq!(resolve::depth(&m).unwrap(), m.ring_dim() - top);
    }
}
