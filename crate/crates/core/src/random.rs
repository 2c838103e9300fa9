//! Seeded random fixtures: small exact polynomial maps and sequences.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::comonad::{omega, CdFixtures};
use crate::morphism::BaseMor;
use crate::poly::{PolyMap, Polynomial};
use crate::scalar::Scalar;
use crate::seq::PreDSeq;

/// Deterministic generator of test inputs.
pub struct FixtureGen {
    rng: ChaCha8Rng,
    pub max_dim: usize,
    pub max_degree: u32,
}

impl FixtureGen {
    pub fn new(seed: u64) -> Self {
        FixtureGen {
            rng: ChaCha8Rng::seed_from_u64(seed),
            max_dim: 2,
            max_degree: 3,
        }
    }

    pub fn dim(&mut self) -> usize {
        self.rng.gen_range(1..=self.max_dim)
    }

    /// A nonzero coefficient from `{−3..3}/{1,2}`.
    pub fn coefficient<S: Scalar>(&mut self) -> S {
        let mut n = 0;
        while n == 0 {
            n = self.rng.gen_range(-3i64..=3);
        }
        let d = self.rng.gen_range(1i64..=2);
        S::from_ratio(BigInt::from(n), BigInt::from(d))
    }

    fn monomial(&mut self, nvars: usize, degree: u32) -> Vec<u32> {
        let mut e = vec![0u32; nvars];
        for _ in 0..degree {
            e[self.rng.gen_range(0..nvars)] += 1;
        }
        e
    }

    /// A polynomial in `nvars` variables with degrees in `min_deg..=max_deg`.
    pub fn polynomial<S: Scalar>(
        &mut self,
        nvars: usize,
        min_deg: u32,
        max_deg: u32,
    ) -> Polynomial<S> {
        let count = self.rng.gen_range(1..=4);
        let mut terms = BTreeMap::new();
        for _ in 0..count {
            let d = self.rng.gen_range(min_deg..=max_deg);
            let m = self.monomial(nvars, d);
            let c: S = self.coefficient();
            terms.entry(m).or_insert(c);
        }
        Polynomial::from_terms(nvars, terms)
    }

    /// Polynomial map with every component of degree at most `max_degree`.
    pub fn poly_map<S: Scalar>(&mut self, dom: usize, cod: usize) -> PolyMap<S> {
        let md = self.max_degree;
        let comps = (0..cod).map(|_| self.polynomial(dom, 0, md)).collect();
        PolyMap::new(dom, comps).expect("shapes agree")
    }

    pub fn mor<S: Scalar>(&mut self, dom: usize, cod: usize) -> BaseMor<S> {
        BaseMor::Poly(self.poly_map(dom, cod))
    }

    /// A random map between random dimensions.
    pub fn any_mor<S: Scalar>(&mut self) -> BaseMor<S> {
        let (a, b) = (self.dim(), self.dim());
        self.mor(a, b)
    }

    /// Linear (additive) map: homogeneous of degree 1.
    pub fn linear<S: Scalar>(&mut self, dom: usize, cod: usize) -> BaseMor<S> {
        let comps = (0..cod).map(|_| self.polynomial(dom, 1, 1)).collect();
        BaseMor::Poly(PolyMap::new(dom, comps).expect("shapes agree"))
    }

    /// A map with at least one term of degree ≥ 2.
    pub fn nonlinear<S: Scalar>(&mut self, dom: usize, cod: usize) -> BaseMor<S> {
        loop {
            let m: PolyMap<S> = self.poly_map(dom, cod);
            let md = self.max_degree.max(2);
            let j = self.rng.gen_range(0..cod);
            let extra = self.polynomial(dom, 2, md);
            let mut comps = m.components().to_vec();
            comps[j] = comps[j].add(&extra);
            let p = PolyMap::new(dom, comps).expect("shapes agree");
            if p.degree() >= 2 {
                return BaseMor::Poly(p);
            }
        }
    }

    pub fn univariate<S: Scalar>(&mut self, max_deg: u32) -> BaseMor<S> {
        let p = self.polynomial(1, 0, max_deg);
        BaseMor::Poly(PolyMap::new(1, vec![p]).expect("shapes agree"))
    }

    /// A pre-D-sequence with unrelated random terms, of degree at most 2.
    pub fn pre_seq<S: Scalar>(
        &mut self,
        dom: usize,
        cod: usize,
        order: usize,
    ) -> PreDSeq<BaseMor<S>> {
        let terms = (0..=order)
            .map(|n| {
                let comps = (0..cod).map(|_| self.polynomial(dom << n, 0, 2)).collect();
                BaseMor::Poly(PolyMap::new(dom << n, comps).expect("shapes agree"))
            })
            .collect();
        PreDSeq::new(dom, cod, terms).expect("shapes agree")
    }

    /// Either an arbitrary pre-D-sequence or an `ω` image.
    pub fn mixed_seq<S: Scalar>(
        &mut self,
        dom: usize,
        cod: usize,
        order: usize,
    ) -> PreDSeq<BaseMor<S>> {
        if self.rng.gen_bool(0.5) {
            self.pre_seq(dom, cod, order)
        } else {
            omega(&self.mor(dom, cod), order)
        }
    }

    pub fn choose<'a, T>(&mut self, items: &'a [T]) -> &'a T {
        items.choose(&mut self.rng).expect("nonempty")
    }

    pub fn gen_bool(&mut self, p: f64) -> bool {
        self.rng.gen_bool(p)
    }

    /// `ω` images closed once under sum, pairing and composition.
    pub fn cd_fixtures<S: Scalar>(&mut self, count: usize, order: usize) -> CdFixtures<BaseMor<S>> {
        let mut fx = CdFixtures::default();
        for _ in 0..count {
            let (a, b, c) = (self.dim(), self.dim(), self.dim());
            let f = omega(&self.mor(a, b), order);
            let f2 = omega(&self.mor(a, b), order);
            let g = omega(&self.mor(a, c), order);
            let h = omega(&self.mor(b, c), order);
            let sum = f.add(&f2).expect("same shape");
            let pair = f.pair(&g).expect("same domain");
            let comp = f.compose(&h).expect("composable");
            fx.singles
                .extend([f.clone(), sum.clone(), pair.clone(), comp.clone()]);
            fx.sums.push((f.clone(), f2.clone()));
            fx.sums.push((sum.clone(), f.clone()));
            fx.pairs.push((f.clone(), g.clone()));
            fx.pairs.push((sum, comp.clone()));
            fx.composites.push((f.clone(), h.clone()));
            fx.composites
                .push((pair, omega(&self.mor(b + c, a), order)));
        }
        fx
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    type Q = BigRational;

    #[test]
    fn deterministic() {
        let mut a = FixtureGen::new(7);
        let mut b = FixtureGen::new(7);
        for _ in 0..5 {
            assert_eq!(a.any_mor::<Q>(), b.any_mor::<Q>());
        }
    }

    #[test]
    fn bounds() {
        let mut g = FixtureGen::new(1);
        for _ in 0..50 {
            let m: BaseMor<Q> = g.any_mor();
            let p = m.as_poly().unwrap();
            assert!(p.dom() <= 2 && p.cod() <= 2 && p.degree() <= 3);
            for c in p.components() {
                for (_, coef) in c.terms() {
                    let twice = coef.clone() * Q::from_integer(2.into());
                    assert!(twice.is_integer() && twice.numer().magnitude() <= &6u32.into());
                }
            }
        }
        let l: BaseMor<Q> = g.linear(2, 2);
        assert_eq!(l.as_poly().unwrap().degree(), 1);
        let n: BaseMor<Q> = g.nonlinear(1, 1);
        assert!(n.as_poly().unwrap().degree() >= 2);
    }
}
