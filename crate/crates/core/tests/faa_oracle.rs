use dseq_core::faa::{bell_coefficient, directional_pattern};
use dseq_core::{
    chain_equivalence_check, directional_eval, directional_oracle, faa_oracle_check,
    faa_univariate, nth_symbolic_derivative, omega, parse_map, partitions, Base, EqualityConfig,
    FixtureGen, Mor, Morphism, Rational,
};
use num_bigint::BigInt;
use proptest::prelude::*;

fn poly(dom: usize, comps: &[&str]) -> Mor {
    parse_map(Base::Poly, dom, comps).unwrap()
}

fn q(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

#[test]
fn partition_table() {
    let counts: Vec<usize> = (0..=10).map(|n| partitions(n).len()).collect();
    assert_eq!(counts, [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
    let bell: Vec<BigInt> = (0..=10)
        .map(|n| partitions(n).iter().map(|m| bell_coefficient(m)).sum())
        .collect();
    let want: Vec<BigInt> = [1u32, 1, 2, 5, 15, 52, 203, 877, 4140, 21147, 115975]
        .into_iter()
        .map(BigInt::from)
        .collect();
    assert_eq!(bell, want);
}

#[test]
fn square_into_cube() {
    let (f, g) = (poly(1, &["x0^2"]), poly(1, &["x0^3"]));
    let two = faa_univariate(f.as_poly().unwrap(), g.as_poly().unwrap(), 2).unwrap();
    assert_eq!(two.to_string(), "[30*x0^4]");
    let fg = f.compose(&g).unwrap();
    let w = omega(&fg, 2);
    for x in [-2, -1, 0, 1, 3] {
        let want = two.eval(&[q(x)]).unwrap();
        assert_eq!(directional_eval(&w, 2, &[q(x)], &[q(1)]).unwrap(), want);
        assert_eq!(directional_oracle(&fg, 2, &[q(x)], &[q(1)]).unwrap(), want);
    }
}

#[test]
fn directional_values() {
    let cube = poly(1, &["x0^3"]);
    assert_eq!(
        directional_eval(&omega(&cube, 2), 2, &[q(2)], &[q(1)]).unwrap(),
        [q(12)]
    );
    assert_eq!(
        directional_eval(&omega(&cube, 2), 0, &[q(2)], &[q(1)]).unwrap(),
        [q(8)]
    );
    let sq = poly(1, &["x0^2"]);
    assert_eq!(
        directional_eval(&omega(&sq, 1), 1, &[q(3)], &[q(5)]).unwrap(),
        [q(30)]
    );
    assert_eq!(
        directional_oracle(&cube, 1, &[q(2)], &[q(0)]).unwrap(),
        [q(0)]
    );
    assert_eq!(
        directional_pattern(2, &[q(7)], &[q(1)]).unwrap(),
        [q(7), q(1), q(1), q(0)]
    );
}

#[test]
fn multivariate_directional() {
    let f = poly(2, &["x0^2*x1 + x1^3", "x0*x1"]);
    let (x, v) = ([q(1), q(-2)], [q(3), Rational::new(1.into(), 2.into())]);
    for n in 0..=3 {
        let want = directional_oracle(&f, n, &x, &v).unwrap();
        assert_eq!(
            directional_eval(&omega(&f, 3), n, &x, &v).unwrap(),
            want,
            "n = {n}"
        );
    }
}

#[test]
fn iterated_derivative_of_cube() {
    let d2 = nth_symbolic_derivative(&poly(1, &["x0^3"]), 2);
    assert_eq!(d2, omega(&poly(1, &["x0^3"]), 2).terms()[2]);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(25))]

    #[test]
    fn chain_rule_on_random_pairs(seed in any::<u64>()) {
        let mut gen = FixtureGen::new(seed);
        let (a, b, c) = (gen.dim(), gen.dim(), gen.dim());
        let f: Mor = gen.mor(a, b);
        let g: Mor = gen.mor(b, c);
        let r = chain_equivalence_check(&f, &g, 3, 3, &EqualityConfig::default()).unwrap();
        prop_assert!(r.passed(), "{:?}", r.failed_axioms());
    }

    #[test]
    fn partitions_sum_to_n(n in 0usize..12) {
        let ps = partitions(n);
        let mut sorted = ps.clone();
        sorted.sort();
        sorted.dedup();
        prop_assert_eq!(sorted.len(), ps.len());
        for m in ps {
            prop_assert_eq!(m.iter().enumerate().map(|(j, c)| (j + 1) * c).sum::<usize>(), n);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10))]

    #[test]
    fn three_way_faa(seed in any::<u64>()) {
        let mut gen = FixtureGen::new(seed);
        let f: Mor = gen.univariate(4);
        let g: Mor = gen.univariate(4);
        let r = faa_oracle_check(&f, &g, 5).unwrap();
        prop_assert!(r.passed(), "{:?}", r.failed_axioms());
    }
}
