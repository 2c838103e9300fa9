//! Hand-broken sequences with the exact set of primed axioms each one violates.

use crate::dseq::{DS1P, DS2P, DS3P, DS4P};
use crate::error::Result;
use crate::morphism::Base;
use crate::parse::parse_map;
use crate::scalar::Scalar;
use crate::seq::PreDSeq;
use crate::BaseMor;

/// A corrupted sequence and the axioms it must fail.
#[derive(Clone, Debug)]
pub struct KnownNegative<S> {
    pub name: &'static str,
    pub seq: PreDSeq<BaseMor<S>>,
    pub fails: &'static [&'static str],
}

fn seq<S: Scalar>(dom: usize, terms: &[&str]) -> Result<PreDSeq<BaseMor<S>>> {
    let maps = terms
        .iter()
        .enumerate()
        .map(|(n, t)| parse_map(Base::Poly, dom << n, &[t]))
        .collect::<Result<Vec<_>>>()?;
    PreDSeq::new(dom, 1, maps)
}

/// `ω(x0^2)` with the second derivative doubled.
pub fn broken_ds3<S: Scalar>() -> Result<PreDSeq<BaseMor<S>>> {
    seq(1, &["x0^2", "2*x0*x1", "4*x1*x2 + 4*x0*x3"])
}

pub fn known_negatives<S: Scalar>() -> Result<Vec<KnownNegative<S>>> {
    Ok(vec![
        KnownNegative {
            name: "second-term-not-additive",
            seq: seq(1, &["x0^2", "x1^2", "x3^2 + 2*x1*x2"])?,
            fails: &[DS2P],
        },
        KnownNegative {
            name: "third-term-doubled",
            seq: broken_ds3()?,
            fails: &[DS3P],
        },
        KnownNegative {
            name: "third-term-antisymmetric",
            seq: seq(
                2,
                &[
                    "x0*x1",
                    "x1*x2 + x0*x3",
                    "x3*x4 + x2*x5 + x1*x6 + x0*x7 + x2*x5 - x3*x4",
                ],
            )?,
            fails: &[DS4P],
        },
        KnownNegative {
            name: "nonzero-at-zero-vector",
            seq: seq(1, &["x0^2", "2*x0*x1 + x0", "2*x1*x2 + 2*x0*x3 + x0"])?,
            fails: &[DS1P, DS2P],
        },
    ])
}
