//! The D-sequence axioms, in termwise (primed) and sequence (unprimed) form,
//! plus linearity, the stamped `DSeq` wrapper and the tangent naturality
//! identities.

use crate::error::{Error, Result};
use crate::morphism::{projection, top_block, Base, Canonical, EqualityConfig, Morphism};
use crate::report::LawReport;
use crate::seq::PreDSeq;

pub const DS1P: &str = "DS.1'";
pub const DS2P: &str = "DS.2'";
pub const DS3P: &str = "DS.3'";
pub const DS4P: &str = "DS.4'";

/// `P^k(h)` at `X = P^{n-k}(A)`, applied to `term`.
fn pk<M: Morphism>(
    kind: Canonical,
    base: Base,
    a: usize,
    n: usize,
    k: usize,
    term: &M,
) -> Result<M> {
    let x = a << (n - k);
    Canonical::map::<M>(kind, base, x)
        .power(k as u32)
        .compose(term)
}

/// DS.1′–DS.4′ for every `n` the truncation supports and every `k ≤ n`.
pub fn check_ds_primed<M: Morphism>(f: &PreDSeq<M>, cfg: &EqualityConfig) -> Result<LawReport> {
    let mut r = LawReport::new("ds-primed");
    let base = f.base();
    let a = f.dom();
    let order = f.order();
    let t = f.terms();

    for n in 0..order {
        let f1 = &t[n + 1];
        for k in 0..=n {
            let lhs = pk(Canonical::ZeroPair, base, a, n, k, f1)?;
            let zero = M::zero(base, lhs.dom(), f.cod());
            r.check_mor(DS1P, n, k, &lhs, &zero, cfg)?;

            let lhs = pk(Canonical::SumVectors, base, a, n, k, f1)?;
            let rhs = pk(Canonical::SumProj0, base, a, n, k, f1)?.add(&pk(
                Canonical::SumProj1,
                base,
                a,
                n,
                k,
                f1,
            )?)?;
            r.check_mor(DS2P, n, k, &lhs, &rhs, cfg)?;

            if n + 2 <= order {
                let f2 = &t[n + 2];
                let lhs = pk(Canonical::Lift, base, a, n, k, f2)?;
                r.check_mor(DS3P, n, k, &lhs, f1, cfg)?;
                let lhs = pk(Canonical::Flip, base, a, n, k, f2)?;
                r.check_mor(DS4P, n, k, &lhs, f2, cfg)?;
            }
        }
    }
    for e in &mut r.entries {
        e.compared_depth = order;
    }
    r.sort();
    Ok(r)
}

/// DS.1–DS.4 as equalities of sequences built from iterated shifts.
pub fn check_ds_unprimed<M: Morphism>(f: &PreDSeq<M>, cfg: &EqualityConfig) -> Result<LawReport> {
    let mut r = LawReport::new("ds-unprimed");
    let base = f.base();
    let a = f.dom();
    let order = f.order();

    for n in 0..order {
        let x = a << n;
        let d1 = f.shift(n + 1)?;
        let lhs = PreDSeq::lscalar(&Canonical::ZeroPair.map::<M>(base, x), &d1)?;
        let zero = PreDSeq::zero(base, x, f.cod(), lhs.order());
        r.check_seq("DS.1", n, 0, &lhs, &zero, cfg)?;

        let lhs = PreDSeq::lscalar(&Canonical::SumVectors.map::<M>(base, x), &d1)?;
        let rhs = PreDSeq::lscalar(&Canonical::SumProj0.map::<M>(base, x), &d1)?.add(
            &PreDSeq::lscalar(&Canonical::SumProj1.map::<M>(base, x), &d1)?,
        )?;
        r.check_seq("DS.2", n, 0, &lhs, &rhs, cfg)?;

        if n + 2 <= order {
            let d2 = f.shift(n + 2)?;
            let lhs = PreDSeq::lscalar(&Canonical::Lift.map::<M>(base, x), &d2)?;
            r.check_seq("DS.3", n, 0, &lhs, &d1, cfg)?;
            let lhs = PreDSeq::lscalar(&Canonical::Flip.map::<M>(base, x), &d2)?;
            r.check_seq("DS.4", n, 0, &lhs, &d2, cfg)?;
        }
    }
    r.sort();
    Ok(r)
}

/// `f_n = i_n f_0` for every available `n`.
pub fn is_linear<M: Morphism>(f: &PreDSeq<M>, cfg: &EqualityConfig) -> Result<bool> {
    let f0 = &f.terms()[0];
    for (n, t) in f.terms().iter().enumerate() {
        let rhs = top_block::<M>(f.base(), f.dom(), n as u32).compose(f0)?;
        if !t.equals(&rhs, cfg)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A pre-D-sequence that passed the primed axioms at its full order.
#[derive(Clone, Debug)]
pub struct DSeq<M> {
    seq: PreDSeq<M>,
    report: LawReport,
}

impl<M: Morphism> DSeq<M> {
    /// Runs the primed checker; fails on the first violated instance.
    pub fn stamp(seq: PreDSeq<M>, cfg: &EqualityConfig) -> Result<Self> {
        let report = check_ds_primed(&seq, cfg)?;
        if let Some(e) = report.failures().next() {
            return Err(Error::AxiomFailure {
                axiom: e.axiom.clone(),
                n: e.n,
                k: e.k,
            });
        }
        Ok(DSeq { seq, report })
    }

    pub fn seq(&self) -> &PreDSeq<M> {
        &self.seq
    }

    pub fn into_seq(self) -> PreDSeq<M> {
        self.seq
    }

    /// Order at which the axioms were verified.
    pub fn depth(&self) -> usize {
        self.seq.order()
    }

    pub fn report(&self) -> &LawReport {
        &self.report
    }
}

/// `T₂(f) = ⟨π0·f, ⟨(1×π0)·D[f], (1×π1)·D[f]⟩⟩ : A³ → B³`.
pub fn tangent2<M: Morphism>(f: &PreDSeq<M>) -> Result<PreDSeq<M>> {
    let base = f.base();
    let a = f.dom();
    let df = f.differential()?;
    let head = PreDSeq::lscalar(
        &projection::<M>(base, a, 2 * a, 0),
        &f.truncate(df.order())?,
    )?;
    let s0 = PreDSeq::lscalar(&Canonical::SumProj0.map::<M>(base, a), &df)?;
    let s1 = PreDSeq::lscalar(&Canonical::SumProj1.map::<M>(base, a), &df)?;
    head.pair(&s0.pair(&s1)?)
}

/// Items (iii)–(vii) of the tangent naturality identities for D-sequences.
pub fn check_tangent_naturality<M: Morphism>(
    f: &PreDSeq<M>,
    cfg: &EqualityConfig,
) -> Result<LawReport> {
    let mut r = LawReport::new("tangent-naturality");
    let base = f.base();
    let (a, b) = (f.dom(), f.cod());
    let tf = f.tangent()?;
    let t2 = tangent2(f)?;

    let lhs = PreDSeq::lscalar(&Canonical::ZeroPair.map::<M>(base, a), &tf)?;
    let rhs = f.rscalar(&Canonical::ZeroPair.map::<M>(base, b))?;
    r.check_seq("iii", 0, 0, &lhs, &rhs, cfg)?;

    for (i, kind) in [Canonical::SumProj0, Canonical::SumProj1]
        .into_iter()
        .enumerate()
    {
        let lhs = PreDSeq::lscalar(&kind.map::<M>(base, a), &tf)?;
        let rhs = t2.rscalar(&kind.map::<M>(base, b))?;
        r.check_seq("iv", 0, i, &lhs, &rhs, cfg)?;
    }

    let lhs = PreDSeq::lscalar(&Canonical::SumVectors.map::<M>(base, a), &tf)?;
    let rhs = t2.rscalar(&Canonical::SumVectors.map::<M>(base, b))?;
    r.check_seq("v", 0, 0, &lhs, &rhs, cfg)?;

    if f.order() >= 2 {
        let ttf = tf.tangent()?;
        let lhs = PreDSeq::lscalar(&Canonical::Lift.map::<M>(base, a), &ttf)?;
        let rhs = tf.rscalar(&Canonical::Lift.map::<M>(base, b))?;
        r.check_seq("vi", 0, 0, &lhs, &rhs, cfg)?;

        let lhs = PreDSeq::lscalar(&Canonical::Flip.map::<M>(base, a), &ttf)?;
        let rhs = ttf.rscalar(&Canonical::Flip.map::<M>(base, b))?;
        r.check_seq("vii", 0, 0, &lhs, &rhs, cfg)?;
    }
    Ok(r)
}

/// Both checkers, with the aggregate verdicts compared.
pub fn check_ds_both<M: Morphism>(
    f: &PreDSeq<M>,
    cfg: &EqualityConfig,
) -> Result<(LawReport, LawReport)> {
    Ok((check_ds_primed(f, cfg)?, check_ds_unprimed(f, cfg)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::comonad::omega;
    use crate::morphism::BaseMor;
    use crate::parse::parse_map;
    use num_rational::BigRational;

    type Mor = BaseMor<BigRational>;
    type Seq = PreDSeq<Mor>;

    fn poly(dom: usize, comps: &[&str]) -> Mor {
        parse_map(Base::Poly, dom, comps).unwrap()
    }

    fn cfg() -> EqualityConfig {
        EqualityConfig::default()
    }

    #[test]
    fn omega_square_passes() {
        let w = omega(&poly(1, &["x0^2"]), 2);
        let r = check_ds_primed(&w, &cfg()).unwrap();
        assert!(r.passed());
        // n ∈ {0,1}, k ≤ n for DS.1'/DS.2'; n = 0 only for DS.3'/DS.4'.
        assert_eq!(r.count(DS1P), 3);
        assert_eq!(r.count(DS3P), 1);
        let lhs = pk(Canonical::Lift, Base::Poly, 1, 0, 0, &w.terms()[2]).unwrap();
        assert_eq!(lhs.to_string(), "[2*x0*x1]");
        let z = pk(Canonical::ZeroPair, Base::Poly, 1, 0, 0, &w.terms()[1]).unwrap();
        assert_eq!(z.to_string(), "[0]");
    }

    #[test]
    fn corrupted_third_term() {
        let s = Seq::new(
            1,
            1,
            vec![
                poly(1, &["x0^2"]),
                poly(2, &["2*x0*x1"]),
                poly(4, &["x0*x1*x2*x3"]),
            ],
        )
        .unwrap();
        let r = check_ds_primed(&s, &cfg()).unwrap();
        assert!(r.failed_axioms().contains(&DS3P.to_string()));
        let e = r.failures().find(|e| e.axiom == DS3P).unwrap();
        assert!(e.witness.is_some());
    }

    #[test]
    fn unprimed_agrees() {
        let w = omega(&poly(1, &["x0^3"]), 3);
        let (p, u) = check_ds_both(&w, &cfg()).unwrap();
        assert!(p.passed() && u.passed());
        assert_eq!(u.count("DS.1"), 3);
        assert_eq!(u.count("DS.3"), 2);
        let z = Seq::zero(Base::Poly, 2, 1, 3);
        assert!(check_ds_unprimed(&z, &cfg()).unwrap().passed());
    }

    #[test]
    fn linearity() {
        let c = cfg();
        assert!(is_linear(&omega(&poly(1, &["3*x0"]), 2), &c).unwrap());
        assert!(!is_linear(&omega(&poly(1, &["x0^2"]), 2), &c).unwrap());
        assert!(is_linear(&Seq::identity(Base::Poly, 2, 3), &c).unwrap());
    }

    #[test]
    fn stamping() {
        let w = omega(&poly(1, &["x0^2"]), 2);
        let d = DSeq::stamp(w, &cfg()).unwrap();
        assert_eq!(d.depth(), 2);
        let bad = Seq::new(1, 1, vec![poly(1, &["x0^2"]), poly(2, &["2*x0*x1 + 1"])]).unwrap();
        assert!(matches!(
            DSeq::stamp(bad, &cfg()),
            Err(Error::AxiomFailure { .. })
        ));
    }

    #[test]
    fn naturality_on_omega() {
        let w = omega(&poly(2, &["x0^2*x1", "x1"]), 3);
        let r = check_tangent_naturality(&w, &cfg()).unwrap();
        assert!(r.passed(), "{:?}", r.failed_axioms());
        assert_eq!(r.entries.len(), 6);
    }
}
