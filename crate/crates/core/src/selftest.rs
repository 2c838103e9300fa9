//! Seeded end-to-end batteries, one suite per property family.
//!
//! Every suite draws from its own generator stream so suites can be run
//! alone and still reproduce the full run.

use crate::comonad::{check_cd_axioms, check_coalgebra, check_comonad_laws, omega};
use crate::dseq::{check_ds_primed, check_ds_unprimed, is_linear};
use crate::error::Result;
use crate::faa::{chain_equivalence_check, faa_oracle_check};
use crate::fixtures::known_negatives;
use crate::laws::{base_battery, predseq_battery};
use crate::morphism::EqualityConfig;
use crate::random::FixtureGen;
use crate::report::{LawReport, SuiteBundle};
use crate::Mor;

pub const ORDER: usize = 3;

/// Suites in run order.
pub const SUITES: [&str; 12] = [
    "ds-primed",
    "ds-unprimed",
    "ds-agreement",
    "chain-rule",
    "pre-d-sequence",
    "comonad",
    "coalgebra",
    "cd",
    "faa",
    "linear",
    "known-negative",
    "base",
];

fn stream(seed: u64, salt: u64) -> FixtureGen {
    if salt == 0 {
        FixtureGen::new(seed)
    } else {
        FixtureGen::new(seed ^ salt.wrapping_mul(0x9E37_79B9_7F4A_7C15))
    }
}

/// One entry per axiom of `sub`, indexed by `trial`: passes iff every instance does.
fn condense(into: &mut LawReport, sub: &LawReport, trial: usize) {
    let mut axioms: Vec<&str> = sub.entries.iter().map(|e| e.axiom.as_str()).collect();
    axioms.sort_unstable();
    axioms.dedup();
    for axiom in axioms {
        let mine = sub.entries.iter().filter(|e| e.axiom == axiom);
        let depth = mine.clone().map(|e| e.compared_depth).max().unwrap_or(0);
        let witness = mine.clone().find_map(|e| e.witness.clone());
        let ok = mine.clone().all(|e| e.pass);
        into.entries.push(crate::report::Entry {
            axiom: axiom.to_string(),
            n: trial,
            k: 0,
            pass: ok,
            compared_depth: depth,
            witness: if ok { None } else { witness },
        });
    }
}

/// `ω(f, 3)` through both checkers, plus their per-instance agreement.
pub fn ds_suites(seed: u64, trials: usize, cfg: &EqualityConfig) -> Result<Vec<LawReport>> {
    let mut gen = stream(seed, 0);
    let mut primed = LawReport::new("ds-primed");
    let mut unprimed = LawReport::new("ds-unprimed");
    let mut agree = LawReport::new("ds-agreement");
    for t in 0..trials {
        let f: Mor = gen.any_mor();
        let w = omega(&f, ORDER);
        let p = check_ds_primed(&w, cfg)?;
        let u = check_ds_unprimed(&w, cfg)?;
        condense(&mut primed, &p, t);
        condense(&mut unprimed, &u, t);
        let witness = p
            .failures()
            .chain(u.failures())
            .find_map(|e| e.witness.clone());
        let same = p.passed() == u.passed();
        agree.push("verdict", t, 0, ORDER, if same { None } else { witness });
    }
    Ok(vec![primed, unprimed, agree])
}

pub fn chain_suite(seed: u64, trials: usize, cfg: &EqualityConfig) -> Result<LawReport> {
    let mut gen = stream(seed, 1);
    let mut r = LawReport::new("chain-rule");
    for t in 0..trials {
        let (a, b, c) = (gen.dim(), gen.dim(), gen.dim());
        let f: Mor = gen.mor(a, b);
        let g: Mor = gen.mor(b, c);
        condense(
            &mut r,
            &chain_equivalence_check(&f, &g, ORDER, ORDER, cfg)?,
            t,
        );
    }
    Ok(r)
}

pub fn predseq_suite(seed: u64, trials: usize, cfg: &EqualityConfig) -> Result<LawReport> {
    let mut gen = stream(seed, 2);
    predseq_battery::<crate::Rational>(&mut gen, trials, ORDER, cfg)
}

/// Comonad laws on arbitrary (non-D) sequences.
pub fn comonad_suite(seed: u64, trials: usize, cfg: &EqualityConfig) -> Result<LawReport> {
    let mut gen = stream(seed, 3);
    let mut r = LawReport::new("comonad");
    for t in 0..trials {
        let (a, b) = (gen.dim(), gen.dim());
        let f = gen.pre_seq::<crate::Rational>(a, b, ORDER);
        condense(&mut r, &check_comonad_laws(&f, cfg)?, t);
    }
    Ok(r)
}

pub fn coalgebra_suite(seed: u64, trials: usize, cfg: &EqualityConfig) -> Result<LawReport> {
    let mut gen = stream(seed, 4);
    let mut r = LawReport::new("coalgebra");
    for t in 0..trials {
        let f: Mor = gen.any_mor();
        condense(&mut r, &check_coalgebra(&f, ORDER, cfg)?, t);
    }
    Ok(r)
}

/// CD.1–CD.7 on `ω` images closed under sum, pairing and composition.
pub fn cd_suite(seed: u64, count: usize, cfg: &EqualityConfig) -> Result<LawReport> {
    let mut gen = stream(seed, 5);
    let fx = gen.cd_fixtures::<crate::Rational>(count, ORDER);
    check_cd_axioms(&fx, cfg)
}

/// Univariate pairs of degree ≤ 4, all `n ≤ 5`.
pub fn faa_suite(seed: u64, trials: usize) -> Result<LawReport> {
    let mut gen = stream(seed, 6);
    let mut r = LawReport::new("faa");
    for t in 0..trials {
        let f: Mor = gen.univariate(4);
        let g: Mor = gen.univariate(4);
        condense(&mut r, &faa_oracle_check(&f, &g, 5)?, t);
    }
    Ok(r)
}

/// `is_linear(ω(f))` against the degree of `f`.
pub fn linear_suite(seed: u64, trials: usize, cfg: &EqualityConfig) -> Result<LawReport> {
    let mut gen = stream(seed, 7);
    let mut r = LawReport::new("linear");
    for t in 0..trials {
        let (a, b) = (gen.dim(), gen.dim());
        let l: Mor = gen.linear(a, b);
        let got = is_linear(&omega(&l, ORDER), cfg)?;
        let w =
            (!got).then(|| crate::morphism::Witness::Difference(crate::io::MapDoc::from_mor(&l)));
        r.push("linear", t, 0, ORDER, w);
        let n: Mor = gen.nonlinear(a, b);
        let got = is_linear(&omega(&n, ORDER), cfg)?;
        let w = got.then(|| crate::morphism::Witness::Difference(crate::io::MapDoc::from_mor(&n)));
        r.push("nonlinear", t, 0, ORDER, w);
    }
    Ok(r)
}

/// Each corrupted fixture fails exactly its axiom set, with witnesses.
pub fn negative_suite(cfg: &EqualityConfig) -> Result<LawReport> {
    let mut r = LawReport::new("known-negative");
    for (i, kn) in known_negatives::<crate::Rational>()?
        .into_iter()
        .enumerate()
    {
        let rep = check_ds_primed(&kn.seq, cfg)?;
        let failed = rep.failed_axioms();
        let exact = failed == kn.fails && rep.failures().all(|e| e.witness.is_some());
        let w = (!exact).then(|| {
            crate::morphism::Witness::Difference(crate::io::MapDoc::from_mor(&kn.seq.terms()[0]))
        });
        r.push(kn.name, i, 0, kn.seq.order(), w);
    }
    r.sort();
    Ok(r)
}

pub fn base_suite(seed: u64, trials: usize, cfg: &EqualityConfig) -> Result<LawReport> {
    let mut gen = stream(seed, 8);
    base_battery::<crate::Rational>(&mut gen, trials, cfg)
}

/// A single suite by name.
pub fn run_suite(name: &str, seed: u64, trials: usize) -> Result<Vec<LawReport>> {
    let cfg = EqualityConfig::default();
    let few = trials.min(10);
    Ok(match name {
        "ds-primed" => vec![ds_suites(seed, trials, &cfg)?.swap_remove(0)],
        "ds-unprimed" => vec![ds_suites(seed, trials, &cfg)?.swap_remove(1)],
        "ds-agreement" => vec![ds_suites(seed, trials, &cfg)?.swap_remove(2)],
        "ds" => ds_suites(seed, trials, &cfg)?,
        "chain-rule" => vec![chain_suite(seed, trials, &cfg)?],
        "pre-d-sequence" => vec![predseq_suite(seed, few, &cfg)?],
        "comonad" => vec![comonad_suite(seed, trials, &cfg)?],
        "coalgebra" => vec![coalgebra_suite(seed, few, &cfg)?],
        "cd" => vec![cd_suite(seed, few.div_ceil(4), &cfg)?],
        "faa" => vec![faa_suite(seed, few)?],
        "linear" => vec![linear_suite(seed, few.min(5), &cfg)?],
        "known-negative" => vec![negative_suite(&cfg)?],
        "base" => vec![base_suite(seed, trials, &cfg)?],
        other => {
            return Err(crate::Error::Format(format!("unknown suite {other:?}")));
        }
    })
}

/// Every suite. `trials` drives the random batteries; the identity battery,
/// coalgebra and Faà di Bruno checks cap at 10 and linearity at 5 per side.
pub fn selftest(seed: u64, trials: usize) -> Result<SuiteBundle> {
    let mut suites = ds_suites(seed, trials, &EqualityConfig::default())?;
    for name in &SUITES[3..] {
        suites.extend(run_suite(name, seed, trials)?);
    }
    Ok(SuiteBundle::new(suites))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_run_passes() {
        let b = selftest(1, 2).unwrap();
        let names: Vec<&str> = b.suites.iter().map(|s| s.suite.as_str()).collect();
        assert_eq!(names, SUITES);
        for s in &b.suites {
            assert!(s.passed(), "{} {:?}", s.suite, s.failed_axioms());
            assert!(!s.entries.is_empty(), "{}", s.suite);
        }
    }

    #[test]
    fn unknown_suite() {
        assert!(run_suite("nope", 0, 1).is_err());
    }
}
