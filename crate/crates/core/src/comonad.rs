//! Counit, comultiplication and the coalgebra `ω`, with their law suites and
//! the differential-combinator axioms for the shift on sequences.

use crate::error::{Error, Result};
use crate::morphism::{Base, Canonical, EqualityConfig, Morphism};
use crate::report::LawReport;
use crate::seq::PreDSeq;

/// `ω(f)_n = D^n[f]`, truncated at `order`.
pub fn omega<M: Morphism>(f: &M, order: usize) -> PreDSeq<M> {
    let mut terms = Vec::with_capacity(order + 1);
    terms.push(f.clone());
    for n in 1..=order {
        let next = terms[n - 1].differential();
        terms.push(next);
    }
    PreDSeq::new(f.dom(), f.cod(), terms).expect("iterated differentials have the right shape")
}

/// `ε(f) = f_0`.
pub fn counit<M: Morphism>(f: &PreDSeq<M>) -> M {
    f.terms()[0].clone()
}

/// `δ(f)`: entry `(n, m)` is `f_{n+m}`. Entries are views into the source.
#[derive(Clone, Debug)]
pub struct DeltaTable<M> {
    source: PreDSeq<M>,
}

pub fn comult<M: Morphism>(f: &PreDSeq<M>) -> DeltaTable<M> {
    DeltaTable { source: f.clone() }
}

impl<M: Morphism> DeltaTable<M> {
    pub fn source(&self) -> &PreDSeq<M> {
        &self.source
    }

    pub fn order(&self) -> usize {
        self.source.order()
    }

    pub fn entry(&self, n: usize, m: usize) -> Option<&M> {
        self.source.terms().get(n + m)
    }

    /// Row `n` as a sequence, i.e. `D^n[f]`.
    pub fn row(&self, n: usize) -> Result<PreDSeq<M>> {
        self.source.shift(n)
    }
}

/// Counit and coassociativity laws of the comonad, termwise.
pub fn check_comonad_laws<M: Morphism>(f: &PreDSeq<M>, cfg: &EqualityConfig) -> Result<LawReport> {
    let mut r = LawReport::new("comonad");
    let table = comult(f);
    let order = f.order();

    r.check_seq("counit-left", 0, 0, &table.row(0)?, f, cfg)?;

    for n in 0..=order {
        let row = table.row(n)?;
        r.check_mor("counit-right", n, 0, &counit(&row), &f.terms()[n], cfg)?;
    }

    for n in 0..=order {
        let row = table.row(n)?;
        let inner = comult(&row);
        for m in 0..=order - n {
            r.check_seq("coassoc", n, m, &inner.row(m)?, &table.row(n + m)?, cfg)?;
        }
    }
    r.sort();
    Ok(r)
}

/// `ε(ω(f)) = f` and `ω(ω(f)_n)_m = ω(f)_{n+m}`.
pub fn check_coalgebra<M: Morphism>(
    f: &M,
    order: usize,
    cfg: &EqualityConfig,
) -> Result<LawReport> {
    let mut r = LawReport::new("coalgebra");
    let w = omega(f, order);
    r.check_mor("counit", 0, 0, &counit(&w), f, cfg)?;
    for n in 0..=order {
        let inner = omega(&w.terms()[n], order - n);
        for m in 0..=order - n {
            r.check_mor("coassoc", n, m, &inner.terms()[m], &w.terms()[n + m], cfg)?;
        }
    }
    r.sort();
    Ok(r)
}

/// Sequences on which the shift is checked to be a differential combinator.
#[derive(Clone, Debug)]
pub struct CdFixtures<M> {
    pub singles: Vec<PreDSeq<M>>,
    /// Same domain and codomain.
    pub sums: Vec<(PreDSeq<M>, PreDSeq<M>)>,
    /// Same domain.
    pub pairs: Vec<(PreDSeq<M>, PreDSeq<M>)>,
    /// Composable.
    pub composites: Vec<(PreDSeq<M>, PreDSeq<M>)>,
}

impl<M> Default for CdFixtures<M> {
    fn default() -> Self {
        CdFixtures {
            singles: Vec::new(),
            sums: Vec::new(),
            pairs: Vec::new(),
            composites: Vec::new(),
        }
    }
}

fn lin<M: Morphism>(base: Base, h: &M, order: usize) -> Result<PreDSeq<M>> {
    PreDSeq::identity(base, h.dom(), order).rscalar(h)
}

/// CD.6 and CD.7 apply the shift twice.
pub const CD_MIN_ORDER: usize = 2;

/// CD.1–CD.7 for `D = shift`, with canonical maps lifted as `i•·h`.
///
/// Sub-equations of one axiom are told apart by `k`; `n` indexes the fixture.
pub fn check_cd_axioms<M: Morphism>(fx: &CdFixtures<M>, cfg: &EqualityConfig) -> Result<LawReport> {
    let mut r = LawReport::new("cd");
    let all = fx.singles.iter().chain(
        fx.sums
            .iter()
            .chain(&fx.pairs)
            .chain(&fx.composites)
            .flat_map(|(f, g)| [f, g]),
    );
    if let Some(low) = all.map(PreDSeq::order).min().filter(|&o| o < CD_MIN_ORDER) {
        return Err(Error::InsufficientOrder {
            required: CD_MIN_ORDER,
            available: low,
        });
    }

    for (n, (f, g)) in fx.sums.iter().enumerate() {
        let base = f.base();
        let lhs = f.add(g)?.differential()?;
        let rhs = f.differential()?.add(&g.differential()?)?;
        r.check_seq("CD.1", n, 0, &lhs, &rhs, cfg)?;
        let z = PreDSeq::<M>::zero(base, f.dom(), f.cod(), f.order());
        let zd = PreDSeq::<M>::zero(base, 2 * f.dom(), f.cod(), f.order() - 1);
        r.check_seq("CD.1", n, 1, &z.differential()?, &zd, cfg)?;
    }

    for (n, f) in fx.singles.iter().enumerate() {
        let base = f.base();
        let a = f.dom();
        let order = f.order();
        let df = f.differential()?;
        let ddf = df.differential()?;

        let zp = lin(base, &Canonical::ZeroPair.map::<M>(base, a), order)?;
        let lhs = zp.compose(&df)?;
        let zero = PreDSeq::zero(base, a, f.cod(), lhs.order());
        r.check_seq("CD.2", n, 0, &lhs, &zero, cfg)?;

        let sum = lin(base, &Canonical::SumVectors.map::<M>(base, a), order)?.compose(&df)?;
        let p0 = lin(base, &Canonical::SumProj0.map::<M>(base, a), order)?.compose(&df)?;
        let p1 = lin(base, &Canonical::SumProj1.map::<M>(base, a), order)?.compose(&df)?;
        r.check_seq("CD.2", n, 1, &sum, &p0.add(&p1)?, cfg)?;

        // D[1] = π1, D[π_j] = π1 π_j on A × A.
        let ident = PreDSeq::<M>::identity(base, a, order);
        let pi1 = PreDSeq::<M>::proj(base, a, a, 1, order);
        r.check_seq("CD.3", n, 0, &ident.differential()?, &pi1, cfg)?;
        for j in 0..2 {
            let pj = PreDSeq::<M>::proj(base, a, a, j, order);
            let lhs = pj.differential()?;
            let pi1_big = PreDSeq::<M>::proj(base, 2 * a, 2 * a, 1, order);
            let rhs = pi1_big.compose(&pj)?;
            r.check_seq("CD.3", n, j + 1, &lhs, &rhs, cfg)?;
        }

        let lift = lin(base, &Canonical::Lift.map::<M>(base, a), order)?;
        r.check_seq("CD.6", n, 0, &lift.compose(&ddf)?, &df, cfg)?;

        let flip = lin(base, &Canonical::Flip.map::<M>(base, a), order)?;
        r.check_seq("CD.7", n, 0, &flip.compose(&ddf)?, &ddf, cfg)?;
    }

    for (n, (f, g)) in fx.pairs.iter().enumerate() {
        let base = f.base();
        let fg = f.pair(g)?;
        let lhs = fg.differential()?;
        let rhs = f.differential()?.pair(&g.differential()?)?;
        r.check_seq("CD.4", n, 0, &lhs, &rhs, cfg)?;
        let t = PreDSeq::<M>::terminal(base, f.dom(), f.order());
        let t2 = PreDSeq::<M>::terminal(base, 2 * f.dom(), f.order() - 1);
        r.check_seq("CD.4", n, 1, &t.differential()?, &t2, cfg)?;

        // D[⟨f,g⟩ π_j] = T(⟨f,g⟩) D[π_j] by CD.5, and ⟨f,g⟩ π_j = f or g by CD.3.
        let tfg = fg.tangent()?;
        let (b, c) = (f.cod(), g.cod());
        let d0 = PreDSeq::<M>::proj(base, b, c, 0, fg.order()).differential()?;
        let d1 = PreDSeq::<M>::proj(base, b, c, 1, fg.order()).differential()?;
        let derived = tfg.compose(&d0)?.pair(&tfg.compose(&d1)?)?;
        r.check_seq("CD.4-derived", n, 0, &derived, &rhs, cfg)?;
        r.check_seq("CD.4-derived", n, 1, &derived, &lhs, cfg)?;
    }

    for (n, (f, g)) in fx.composites.iter().enumerate() {
        let base = f.base();
        let lhs = f.compose(g)?.differential()?;
        let df = f.differential()?;
        let first = PreDSeq::<M>::proj(base, f.dom(), f.dom(), 0, f.order())
            .compose(f)?
            .truncate(df.order())?;
        let rhs = first.pair(&df)?.compose(&g.differential()?)?;
        r.check_seq("CD.5", n, 0, &lhs, &rhs, cfg)?;
        let via_t = f.tangent()?.compose(&g.differential()?)?;
        r.check_seq("CD.5", n, 1, &lhs, &via_t, cfg)?;
    }

    r.sort();
    Ok(r)
}
