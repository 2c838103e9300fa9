//! Truncated pre-D-sequences and D-sequences over exact polynomial maps and
//! elementary expression maps.
//!
//! A pre-D-sequence `f_0, f_1, …` has `f_n : P^n(A) → B`, where `P(A) = A × A`.
//! Sequences compose by `(f ∗ g)_n = T^n(f)_0 g_n`, with `T` the tangent
//! construction on sequences. For a map `f`, `ω(f) = (f, D[f], D²[f], …)`
//! and `ω(f) ∗ ω(g) = ω(f; g)` is the higher-order chain rule.
//!
//! ```
//! use dseq_core::{check_ds_primed, omega, parse_map, Base, EqualityConfig, Mor};
//!
//! let f: Mor = parse_map(Base::Poly, 1, &["x0^2"]).unwrap();
//! let g: Mor = parse_map(Base::Poly, 1, &["x0^3"]).unwrap();
//! let fg = omega(&f, 2).compose(&omega(&g, 2)).unwrap();
//! assert_eq!(fg.terms()[1].to_string(), "[6*x0^5*x1]");
//!
//! let report = check_ds_primed(&fg, &EqualityConfig::default()).unwrap();
//! assert!(report.passed());
//! ```
//!
//! The core is generic over the coefficient type ([`Scalar`]); exact laws are
//! checked with [`Rational`].

pub mod comonad;
pub mod dseq;
pub mod elem;
pub mod error;
pub mod faa;
pub mod fixtures;
pub mod io;
pub mod laws;
pub mod morphism;
pub mod parse;
pub mod poly;
pub mod random;
pub mod report;
pub mod scalar;
pub mod selftest;
pub mod seq;

pub use comonad::{
    check_cd_axioms, check_coalgebra, check_comonad_laws, comult, counit, omega, CdFixtures,
    DeltaTable,
};
pub use dseq::{
    check_ds_primed, check_ds_unprimed, check_tangent_naturality, is_linear, tangent2, DSeq,
};
pub use elem::{ElemMap, Expr};
pub use error::{Error, Result};
pub use faa::{
    chain_equivalence_check, directional_eval, directional_oracle, faa_oracle_check,
    faa_univariate, nth_symbolic_derivative, partitions, pattern_restrict,
};
pub use io::{AnyDoc, MapDoc, SeqDoc};
pub use laws::check_input_laws;
pub use morphism::{Base, BaseMor, Canonical, EqualityConfig, Morphism, Witness};
pub use parse::parse_map;
pub use poly::{Monomial, PolyMap, Polynomial};
pub use random::FixtureGen;
pub use report::{Entry, LawReport, SuiteBundle};
pub use scalar::Scalar;
pub use selftest::{run_suite, selftest};
pub use seq::PreDSeq;

/// Exact coefficients.
pub type Rational = num_rational::BigRational;
pub type Poly = PolyMap<Rational>;
pub type Elem = ElemMap<Rational>;
pub type Mor = BaseMor<Rational>;
pub type Seq = PreDSeq<Mor>;

/// Double-precision coefficients.
pub type Mor64 = BaseMor<f64>;
pub type Seq64 = PreDSeq<Mor64>;
/// Single-precision coefficients.
pub type Mor32 = BaseMor<f32>;
pub type Seq32 = PreDSeq<Mor32>;
