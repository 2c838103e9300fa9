use dseq_core::comonad::CdFixtures;
use dseq_core::{
    check_cd_axioms, check_coalgebra, check_comonad_laws, check_ds_primed, comult, counit, omega,
    parse_map, Base, EqualityConfig, FixtureGen, Mor, Morphism, Rational, Seq,
};
use proptest::prelude::*;

fn poly(dom: usize, comps: &[&str]) -> Mor {
    parse_map(Base::Poly, dom, comps).unwrap()
}

fn cfg() -> EqualityConfig {
    EqualityConfig::default()
}

#[test]
fn omega_terms_are_iterated_differentials() {
    let f = poly(1, &["x0^2"]);
    let w = omega(&f, 2);
    assert_eq!(w.terms()[1], f.differential());
    assert_eq!(w.terms()[2].to_string(), "[2*x1*x2 + 2*x0*x3]");
    assert_eq!(counit(&w), f);
}

#[test]
fn delta_table() {
    let w = omega(&poly(1, &["x0^3"]), 3);
    let d = comult(&w);
    for n in 0..=3 {
        for m in 0..=3 - n {
            assert_eq!(d.entry(n, m), Some(&w.terms()[n + m]));
        }
    }
    assert_eq!(d.entry(2, 2), None);
    assert_eq!(d.row(1).unwrap(), w.differential().unwrap());
}

#[test]
fn elementary_smoke() {
    let s: Mor = parse_map(Base::Elementary, 1, &["sin(x0)"]).unwrap();
    let w = omega(&s, 2);
    let want = Seq::new(
        1,
        1,
        vec![
            s.clone(),
            parse_map(Base::Elementary, 2, &["cos(x0)*x1"]).unwrap(),
            parse_map(Base::Elementary, 4, &["(-1)*sin(x0)*x1*x2 + cos(x0)*x3"]).unwrap(),
        ],
    )
    .unwrap();
    assert!(w
        .equals(&want, &EqualityConfig::with_tolerance(1e-9))
        .unwrap());
    assert!(check_ds_primed(&w, &cfg()).unwrap().passed());
    assert!(check_comonad_laws(&w, &cfg()).unwrap().passed());
}

#[test]
fn cd_on_small_fixtures() {
    let f = omega(&poly(1, &["x0^2"]), 3);
    let g = omega(&poly(1, &["x0^3 + x0"]), 3);
    let fx = CdFixtures {
        singles: vec![f.clone(), g.clone()],
        sums: vec![(f.clone(), g.clone())],
        pairs: vec![(f.clone(), g.clone())],
        composites: vec![(f.clone(), g.clone())],
    };
    let r = check_cd_axioms(&fx, &cfg()).unwrap();
    assert!(r.passed(), "{:?}", r.failed_axioms());
    for ax in ["CD.1", "CD.2", "CD.3", "CD.4", "CD.5", "CD.6", "CD.7"] {
        assert!(r.count(ax) > 0, "{ax}");
    }
    assert!(r
        .entries
        .iter()
        .any(|e| e.axiom.starts_with("CD.4") && e.axiom != "CD.4"));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(25))]

    #[test]
    fn comonad_laws_on_arbitrary_sequences(seed in any::<u64>()) {
        let mut gen = FixtureGen::new(seed);
        let (a, b) = (gen.dim(), gen.dim());
        let f: Seq = gen.pre_seq(a, b, 3);
        let r = check_comonad_laws(&f, &cfg()).unwrap();
        prop_assert!(r.passed(), "{:?}", r.failed_axioms());
    }

    #[test]
    fn coalgebra_laws(seed in any::<u64>()) {
        let mut gen = FixtureGen::new(seed);
        let f: Mor = gen.any_mor();
        prop_assert!(check_coalgebra(&f, 3, &cfg()).unwrap().passed());
    }

    #[test]
    fn omega_is_a_strict_functor(seed in any::<u64>()) {
        let mut gen = FixtureGen::new(seed);
        gen.max_degree = 2;
        let (a, b, c) = (gen.dim(), gen.dim(), gen.dim());
        let f: Mor = gen.mor(a, b);
        let g: Mor = gen.mor(b, c);
        let lhs = omega(&f, 3).compose(&omega(&g, 3)).unwrap();
        prop_assert_eq!(lhs, omega(&f.compose(&g).unwrap(), 3));
        prop_assert_eq!(omega(&Mor::identity(Base::Poly, a), 3), Seq::identity(Base::Poly, a, 3));
        let f2: Mor = gen.mor(a, b);
        prop_assert_eq!(omega(&f.add(&f2).unwrap(), 3), omega(&f, 3).add(&omega(&f2, 3)).unwrap());
        prop_assert_eq!(omega(&f.differential(), 2), omega(&f, 3).differential().unwrap());
    }

    #[test]
    fn delta_rows_are_d_sequences(seed in any::<u64>()) {
        let mut gen = FixtureGen::new(seed);
        let w = omega(&gen.any_mor::<Rational>(), 3);
        let d = comult(&w);
        for n in 0..=3 {
            let row = d.row(n).unwrap();
            prop_assert_eq!(row.order(), 3 - n);
            prop_assert!(check_ds_primed(&row, &cfg()).unwrap().passed());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(4))]

    #[test]
    fn cd_axioms_on_closure(seed in any::<u64>()) {
        let mut gen = FixtureGen::new(seed);
        let fx = gen.cd_fixtures::<Rational>(1, 3);
        let r = check_cd_axioms(&fx, &cfg()).unwrap();
        prop_assert!(r.passed(), "{:?}", r.failed_axioms());
    }
}
