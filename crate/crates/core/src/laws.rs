//! Seeded batteries of algebraic identities for base maps and pre-D-sequences.
//!
//! Every identity is recorded with `n` = trial index and `k` = sub-equation.

use crate::error::Result;
use crate::morphism::{projection, Base, BaseMor, Canonical, EqualityConfig, Morphism};
use crate::random::FixtureGen;
use crate::report::LawReport;
use crate::scalar::Scalar;
use crate::seq::PreDSeq;

type Mor<S> = BaseMor<S>;
type Seq<S> = PreDSeq<BaseMor<S>>;

const P: Base = Base::Poly;

fn pi<S: Scalar>(a: usize, b: usize, j: usize) -> Mor<S> {
    projection(P, a, b, j)
}

fn canon<S: Scalar>(kind: Canonical, x: usize) -> Mor<S> {
    kind.map(P, x)
}

/// `f × g = ⟨(i·π0) ∗ f, (i·π1) ∗ g⟩`.
pub fn seq_product<M: Morphism>(f: &PreDSeq<M>, g: &PreDSeq<M>) -> Result<PreDSeq<M>> {
    let base = f.base();
    let (a, c) = (f.dom(), g.dom());
    let order = f.order().min(g.order());
    let left = PreDSeq::<M>::proj(base, a, c, 0, order).compose(f)?;
    let right = PreDSeq::<M>::proj(base, a, c, 1, order).compose(g)?;
    left.pair(&right)
}

fn tr<S: Scalar>(f: &Seq<S>, n: usize) -> Result<Seq<S>> {
    f.truncate(n.min(f.order()))
}

/// The identity list for pre-D-sequences at the given order.
pub fn predseq_battery<S: Scalar>(
    gen: &mut FixtureGen,
    trials: usize,
    order: usize,
    cfg: &EqualityConfig,
) -> Result<LawReport> {
    let mut r = LawReport::new("pre-d-sequence");
    for t in 0..trials {
        let (a, b, c, d) = (gen.dim(), gen.dim(), gen.dim(), gen.dim());
        let f: Seq<S> = gen.mixed_seq(a, b, order);
        let f2: Seq<S> = gen.mixed_seq(a, b, order);
        let g: Seq<S> = gen.mixed_seq(b, c, order);
        let gb: Seq<S> = gen.mixed_seq(a, b, order);
        let gb2: Seq<S> = gen.mixed_seq(a, b, order);
        let hseq: Seq<S> = gen.pre_seq(c, d, order);
        let x = gen.dim();
        let h: Mor<S> = gen.mor(x, a);
        let y = gen.dim();
        let h1: Mor<S> = gen.mor(y, x);
        let k: Mor<S> = gen.mor(b, c);
        let k2: Mor<S> = gen.mor(c, d);
        let kd: Mor<S> = gen.mor(b, d);
        let kb: Mor<S> = gen.mor(b, c);
        let lin: Mor<S> = gen.linear(b, c);
        let id_a = Seq::<S>::identity(P, a, order);
        let id_b = Seq::<S>::identity(P, b, order);

        // Scalar actions.
        r.check_seq(
            "scalar.i",
            t,
            0,
            &Seq::lscalar(&h1, &Seq::lscalar(&h, &f)?)?,
            &Seq::lscalar(&h1.compose(&h)?, &f)?,
            cfg,
        )?;
        r.check_seq(
            "scalar.ii",
            t,
            0,
            &Seq::lscalar(&Mor::identity(P, a), &f)?,
            &f,
            cfg,
        )?;
        r.check_seq(
            "scalar.ii",
            t,
            1,
            &f.rscalar(&Mor::identity(P, b))?,
            &f,
            cfg,
        )?;
        r.check_seq(
            "scalar.iii",
            t,
            0,
            &f.rscalar(&k)?.rscalar(&k2)?,
            &f.rscalar(&k.compose(&k2)?)?,
            cfg,
        )?;
        r.check_seq(
            "scalar.iv",
            t,
            0,
            &Seq::lscalar(&h, &f.rscalar(&k)?)?,
            &Seq::lscalar(&h, &f)?.rscalar(&k)?,
            cfg,
        )?;

        // Tangent and differential against scalar actions.
        let tf = f.tangent()?;
        let df = f.differential()?;
        r.check_seq(
            "tangent.i",
            t,
            0,
            &Seq::lscalar(&h, &f)?.tangent()?,
            &Seq::lscalar(&h.power(1), &tf)?,
            cfg,
        )?;
        r.check_seq(
            "tangent.ii",
            t,
            0,
            &f.rscalar(&k)?.tangent()?,
            &tf.rscalar(&k.power(1))?,
            cfg,
        )?;
        r.check_seq(
            "tangent.iii",
            t,
            0,
            &Seq::lscalar(&pi(a, a, 0), &f)?,
            &tf.rscalar(&pi(b, b, 0))?,
            cfg,
        )?;
        r.check_seq("tangent.iv", t, 0, &tf.rscalar(&pi(b, b, 1))?, &df, cfg)?;
        r.check_seq(
            "tangent.v",
            t,
            0,
            &Seq::lscalar(&h, &f)?.differential()?,
            &Seq::lscalar(&h.power(1), &df)?,
            cfg,
        )?;
        r.check_seq(
            "tangent.vi",
            t,
            0,
            &f.rscalar(&k)?.differential()?,
            &df.rscalar(&k)?,
            cfg,
        )?;

        // T is a functor.
        r.check_seq(
            "functor.i",
            t,
            0,
            &id_a.tangent()?,
            &Seq::identity(P, 2 * a, order),
            cfg,
        )?;
        r.check_seq(
            "functor.ii",
            t,
            0,
            &f.compose(&g)?.tangent()?,
            &tf.compose(&g.tangent()?)?,
            cfg,
        )?;

        // Category laws.
        let fa: Seq<S> = gen.pre_seq(a, b, order);
        r.check_seq(
            "category.assoc",
            t,
            0,
            &fa.compose(&g.compose(&hseq)?)?,
            &fa.compose(&g)?.compose(&hseq)?,
            cfg,
        )?;
        r.check_seq("category.unit", t, 0, &id_a.compose(&f)?, &f, cfg)?;
        r.check_seq("category.unit", t, 1, &f.compose(&id_b)?, &f, cfg)?;

        // Composition against scalar actions.
        let id_x = Seq::<S>::identity(P, x, order);
        r.check_seq(
            "compose.i",
            t,
            0,
            &Seq::lscalar(&h, &id_a)?,
            &id_x.rscalar(&h)?,
            cfg,
        )?;
        r.check_seq(
            "compose.ii",
            t,
            0,
            &Seq::lscalar(&h, &f)?.compose(&g)?,
            &Seq::lscalar(&h, &f.compose(&g)?)?,
            cfg,
        )?;
        r.check_seq(
            "compose.iii",
            t,
            0,
            &f.compose(&g.rscalar(&k2)?)?,
            &f.compose(&g)?.rscalar(&k2)?,
            cfg,
        )?;
        let gc: Seq<S> = gen.mixed_seq(c, d, order);
        r.check_seq(
            "compose.iv",
            t,
            0,
            &f.rscalar(&k)?.compose(&gc)?,
            &f.compose(&Seq::lscalar(&k, &gc)?)?,
            cfg,
        )?;
        r.check_seq(
            "compose.v",
            t,
            0,
            &Seq::lscalar(&h, &id_a)?.compose(&f)?,
            &Seq::lscalar(&h, &f)?,
            cfg,
        )?;
        r.check_seq(
            "compose.vi",
            t,
            0,
            &f.compose(&id_b.rscalar(&k)?)?,
            &f.rscalar(&k)?,
            cfg,
        )?;

        // Products.
        let fg = f.pair(&gb)?;
        r.check_seq(
            "product.i",
            t,
            0,
            &Seq::lscalar(&h, &fg)?,
            &Seq::lscalar(&h, &f)?.pair(&Seq::lscalar(&h, &gb)?)?,
            cfg,
        )?;
        r.check_seq(
            "product.ii",
            t,
            0,
            &f.rscalar(&k.pair(&kd)?)?,
            &f.rscalar(&k)?.pair(&f.rscalar(&kd)?)?,
            cfg,
        )?;
        r.check_seq(
            "product.iii",
            t,
            0,
            &f.rscalar(&k)?.pair(&gb.rscalar(&kd)?)?,
            &fg.rscalar(&k.product(&kd)?)?,
            cfg,
        )?;
        r.check_seq("product.iv", t, 0, &fg.rscalar(&pi(b, b, 0))?, &f, cfg)?;
        r.check_seq("product.iv", t, 1, &fg.rscalar(&pi(b, b, 1))?, &gb, cfg)?;
        let fxg = seq_product(&f, &g)?;
        let pair_form = Seq::lscalar(&pi(a, b, 0), &f)?.pair(&Seq::lscalar(&pi(a, b, 1), &g)?)?;
        r.check_seq("product.v", t, 0, &fxg, &pair_form, cfg)?;
        r.check_seq(
            "product.vi",
            t,
            0,
            &fxg.rscalar(&pi(b, c, 0))?,
            &Seq::lscalar(&pi(a, b, 0), &f)?,
            cfg,
        )?;
        r.check_seq(
            "product.vi",
            t,
            1,
            &fxg.rscalar(&pi(b, c, 1))?,
            &Seq::lscalar(&pi(a, b, 1), &g)?,
            cfg,
        )?;
        let kc: Mor<S> = gen.mor(c, d);
        r.check_seq(
            "product.vii",
            t,
            0,
            &fxg.rscalar(&kb.product(&kc)?)?,
            &seq_product(&f.rscalar(&kb)?, &g.rscalar(&kc)?)?,
            cfg,
        )?;
        let lhs = f
            .pair(&f2)?
            .pair(&gb.pair(&gb2)?)?
            .rscalar(&canon(Canonical::Flip, b))?;
        let rhs = f.pair(&gb)?.pair(&f2.pair(&gb2)?)?;
        r.check_seq("product.viii", t, 0, &lhs, &rhs, cfg)?;
        for j in 0..2 {
            let pj = Seq::<S>::proj(P, b, b, j, order);
            r.check_seq(
                "product.proj",
                t,
                j,
                &fg.compose(&pj)?,
                if j == 0 { &f } else { &gb },
                cfg,
            )?;
        }

        // Differential against tangent.
        let lhs = Seq::lscalar(&pi(a, a, 0), &tr(&f, df.order())?)?.pair(&df)?;
        r.check_seq("dt.i", t, 0, &tf, &lhs, cfg)?;
        r.check_seq(
            "dt.ii",
            t,
            0,
            &id_a.differential()?,
            &Seq::proj(P, a, a, 1, order),
            cfg,
        )?;
        for j in 0..2 {
            let lhs = Seq::<S>::proj(P, a, b, j, order).differential()?;
            let pi1 = pi::<S>(a + b, a + b, 1);
            let rhs = Seq::identity(P, 2 * (a + b), order).rscalar(&pi1.compose(&pi(a, b, j))?)?;
            r.check_seq("dt.iii", t, j, &lhs, &rhs, cfg)?;
        }
        r.check_seq(
            "dt.iv",
            t,
            0,
            &f.compose(&g)?.differential()?,
            &tf.compose(&g.differential()?)?,
            cfg,
        )?;
        r.check_seq(
            "dt.v",
            t,
            0,
            &fg.differential()?,
            &df.pair(&gb.differential()?)?,
            cfg,
        )?;

        // Additive structure.
        let z_ab = Seq::<S>::zero(P, a, b, order);
        let z_xb = Seq::<S>::zero(P, x, b, order);
        let z_ac = Seq::<S>::zero(P, a, c, order);
        r.check_seq("additive.i", t, 0, &Seq::lscalar(&h, &z_ab)?, &z_xb, cfg)?;
        r.check_seq(
            "additive.ii",
            t,
            0,
            &f.rscalar(&Mor::zero(P, b, c))?,
            &z_ac,
            cfg,
        )?;
        r.check_seq(
            "additive.iii",
            t,
            0,
            &f.rscalar(&k.add(&kb)?)?,
            &f.rscalar(&k)?.add(&f.rscalar(&kb)?)?,
            cfg,
        )?;
        r.check_seq(
            "additive.iv",
            t,
            0,
            &Seq::lscalar(&h, &f.add(&f2)?)?,
            &Seq::lscalar(&h, &f)?.add(&Seq::lscalar(&h, &f2)?)?,
            cfg,
        )?;
        r.check_seq("additive.v", t, 0, &z_ab.rscalar(&lin)?, &z_ac, cfg)?;
        r.check_seq(
            "additive.vi",
            t,
            0,
            &f.add(&f2)?.rscalar(&lin)?,
            &f.rscalar(&lin)?.add(&f2.rscalar(&lin)?)?,
            cfg,
        )?;
        r.check_seq(
            "additive.vii",
            t,
            0,
            &f.rscalar(&canon(Canonical::ZeroPair, b))?,
            &f.pair(&z_ab)?,
            cfg,
        )?;
        let lhs = f
            .pair(&gb.pair(&gb2)?)?
            .rscalar(&canon(Canonical::SumVectors, b))?;
        r.check_seq("additive.viii", t, 0, &lhs, &f.pair(&gb.add(&gb2)?)?, cfg)?;
        let lhs = f.pair(&gb)?.rscalar(&canon(Canonical::Lift, b))?;
        let rhs = f.pair(&z_ab)?.pair(&z_ab.pair(&gb)?)?;
        r.check_seq("additive.ix", t, 0, &lhs, &rhs, cfg)?;

        let z2 = Seq::<S>::zero(P, 2 * a, b, order - 1);
        r.check_seq("additive-dt.i", t, 0, &z_ab.differential()?, &z2, cfg)?;
        r.check_seq(
            "additive-dt.ii",
            t,
            0,
            &f.add(&f2)?.differential()?,
            &df.add(&f2.differential()?)?,
            cfg,
        )?;
        r.check_seq(
            "additive-dt.iii",
            t,
            0,
            &z_ab.tangent()?,
            &Seq::zero(P, 2 * a, 2 * b, order - 1),
            cfg,
        )?;
        r.check_seq(
            "additive-dt.iv",
            t,
            0,
            &f.add(&f2)?.tangent()?,
            &tf.add(&f2.tangent()?)?,
            cfg,
        )?;

        // Pairings of i and 0 against i·(canonical map).
        let xa = a;
        let id = Seq::<S>::identity(P, xa, order);
        let z = Seq::<S>::zero(P, xa, xa, order);
        r.check_seq(
            "predelta.i",
            t,
            0,
            &id.pair(&z)?,
            &id.rscalar(&canon(Canonical::ZeroPair, xa))?,
            cfg,
        )?;
        let sum01 = Seq::<S>::proj(P, xa, xa, 0, order).add(&Seq::proj(P, xa, xa, 1, order))?;
        let lhs = seq_product(&id, &sum01)?;
        let rhs = Seq::identity(P, 3 * xa, order).rscalar(&canon(Canonical::SumVectors, xa))?;
        r.check_seq("predelta.ii", t, 0, &lhs, &rhs, cfg)?;
        let lhs = seq_product(&id.pair(&z)?, &z.pair(&id)?)?;
        let rhs = Seq::identity(P, 2 * xa, order).rscalar(&canon(Canonical::Lift, xa))?;
        r.check_seq("predelta.iii", t, 0, &lhs, &rhs, cfg)?;
        let swap = Seq::<S>::proj(P, xa, xa, 1, order).pair(&Seq::proj(P, xa, xa, 0, order))?;
        let lhs = seq_product(&seq_product(&id, &swap)?, &id)?;
        let rhs = Seq::identity(P, 4 * xa, order).rscalar(&canon(Canonical::Flip, xa))?;
        r.check_seq("predelta.iv", t, 0, &lhs, &rhs, cfg)?;
    }
    r.sort();
    Ok(r)
}

/// The identities that need no further fixtures, instantiated on `f`
/// together with identities, zeros, projections, `f + f` and `⟨f, f⟩`.
/// Identities involving `T` or `D` are skipped at order 0.
pub fn check_input_laws<M: Morphism>(f: &PreDSeq<M>, cfg: &EqualityConfig) -> Result<LawReport> {
    let mut r = LawReport::new("laws");
    let base = f.base();
    let (a, b, order) = (f.dom(), f.cod(), f.order());
    let id_a = PreDSeq::<M>::identity(base, a, order);
    let id_b = PreDSeq::<M>::identity(base, b, order);
    let z_ab = PreDSeq::<M>::zero(base, a, b, order);
    let pj = |x, y, j| projection::<M>(base, x, y, j);
    let ff = f.pair(f)?;
    let f2 = f.add(f)?;

    r.check_seq(
        "scalar.ii",
        0,
        0,
        &PreDSeq::lscalar(&M::identity(base, a), f)?,
        f,
        cfg,
    )?;
    r.check_seq(
        "scalar.ii",
        0,
        1,
        &f.rscalar(&M::identity(base, b))?,
        f,
        cfg,
    )?;
    r.check_seq("category.unit", 0, 0, &id_a.compose(f)?, f, cfg)?;
    r.check_seq("category.unit", 0, 1, &f.compose(&id_b)?, f, cfg)?;
    for j in 0..2 {
        r.check_seq("product.iv", 0, j, &ff.rscalar(&pj(b, b, j))?, f, cfg)?;
        let p = PreDSeq::<M>::proj(base, b, b, j, order);
        r.check_seq("product.proj", 0, j, &ff.compose(&p)?, f, cfg)?;
    }
    r.check_seq(
        "additive.ii",
        0,
        0,
        &f.rscalar(&M::zero(base, b, b))?,
        &PreDSeq::zero(base, a, b, order),
        cfg,
    )?;
    r.check_seq(
        "additive.vii",
        0,
        0,
        &f.rscalar(&Canonical::ZeroPair.map::<M>(base, b))?,
        &f.pair(&z_ab)?,
        cfg,
    )?;
    r.check_seq("additive.x", 0, 0, &f.add(&z_ab)?, f, cfg)?;

    if order >= 1 {
        let tf = f.tangent()?;
        let df = f.differential()?;
        let short = f.truncate(order - 1)?;
        r.check_seq(
            "tangent.iii",
            0,
            0,
            &PreDSeq::lscalar(&pj(a, a, 0), f)?,
            &tf.rscalar(&pj(b, b, 0))?,
            cfg,
        )?;
        r.check_seq("tangent.iv", 0, 0, &tf.rscalar(&pj(b, b, 1))?, &df, cfg)?;
        r.check_seq(
            "functor.i",
            0,
            0,
            &id_a.tangent()?,
            &PreDSeq::identity(base, 2 * a, order - 1),
            cfg,
        )?;
        r.check_seq(
            "functor.ii",
            0,
            0,
            &id_a.compose(f)?.tangent()?,
            &id_a.tangent()?.compose(&tf)?,
            cfg,
        )?;
        let lhs = PreDSeq::lscalar(&pj(a, a, 0), &short)?.pair(&df)?;
        r.check_seq("dt.i", 0, 0, &tf, &lhs, cfg)?;
        r.check_seq("dt.v", 0, 0, &ff.differential()?, &df.pair(&df)?, cfg)?;
        r.check_seq(
            "additive-dt.ii",
            0,
            0,
            &f2.differential()?,
            &df.add(&df)?,
            cfg,
        )?;
        r.check_seq("additive-dt.iv", 0, 0, &f2.tangent()?, &tf.add(&tf)?, cfg)?;
    }
    r.sort();
    Ok(r)
}

/// Morphism-level laws: category, left additivity, products, CD.1–CD.7,
/// the tangent of a linear map and iterated `P`.
pub fn base_battery<S: Scalar>(
    gen: &mut FixtureGen,
    trials: usize,
    cfg: &EqualityConfig,
) -> Result<LawReport> {
    let mut r = LawReport::new("base");
    for t in 0..trials {
        let (a, b, c, d) = (gen.dim(), gen.dim(), gen.dim(), gen.dim());
        let f: Mor<S> = gen.mor(a, b);
        let f2: Mor<S> = gen.mor(a, b);
        let g: Mor<S> = gen.mor(b, c);
        let g2: Mor<S> = gen.mor(b, c);
        let h: Mor<S> = gen.mor(c, d);
        let fc: Mor<S> = gen.mor(a, c);
        let l1: Mor<S> = gen.linear(b, d);
        let l2: Mor<S> = gen.linear(c, d);
        check_base_laws(&mut r, t, (&f, &f2, &g, &g2, &h, &fc), (&l1, &l2), cfg)?;
    }
    r.sort();
    Ok(r)
}

type Six<'a, M> = (&'a M, &'a M, &'a M, &'a M, &'a M, &'a M);

/// The base laws for one set of inputs. `l1 : B → _` and `l2 : C → _` are linear.
pub fn check_base_laws<M: Morphism>(
    r: &mut LawReport,
    t: usize,
    (f, f2, g, g2, h, fc): Six<'_, M>,
    (l1, l2): (&M, &M),
    cfg: &EqualityConfig,
) -> Result<()> {
    let base = f.base();
    let (a, b, c) = (f.dom(), f.cod(), g.cod());
    let id = |n| M::identity(base, n);
    let pj = |x, y, j| projection::<M>(base, x, y, j);
    let cm = |kind: Canonical, x| kind.map::<M>(base, x);

    r.check_mor(
        "category.assoc",
        t,
        0,
        &f.compose(&g.compose(h)?)?,
        &f.compose(g)?.compose(h)?,
        cfg,
    )?;
    r.check_mor("category.unit", t, 0, &id(a).compose(f)?, f, cfg)?;
    r.check_mor("category.unit", t, 1, &f.compose(&id(b))?, f, cfg)?;

    r.check_mor(
        "left-additive",
        t,
        0,
        &f.compose(&g.add(g2)?)?,
        &f.compose(g)?.add(&f.compose(g2)?)?,
        cfg,
    )?;
    r.check_mor(
        "left-additive",
        t,
        1,
        &f.compose(&M::zero(base, b, c))?,
        &M::zero(base, a, c),
        cfg,
    )?;
    for j in 0..2 {
        let p = pj(b, c, j);
        let (u, v) = (f.pair(fc)?, f2.pair(fc)?);
        r.check_mor(
            "proj-additive",
            t,
            j,
            &u.add(&v)?.compose(&p)?,
            &u.compose(&p)?.add(&v.compose(&p)?)?,
            cfg,
        )?;
    }
    let lhs = f.pair(fc)?.add(&f2.pair(fc)?)?;
    r.check_mor(
        "pair-additive",
        t,
        0,
        &lhs,
        &f.add(f2)?.pair(&fc.add(fc)?)?,
        cfg,
    )?;
    let diag = id(b).pair(&id(b))?;
    r.check_mor(
        "diag-additive",
        t,
        0,
        &f.add(f2)?.compose(&diag)?,
        &f.compose(&diag)?.add(&f2.compose(&diag)?)?,
        cfg,
    )?;
    let prod = l1.product(l2)?;
    let (u, v) = (f.pair(fc)?, f2.pair(fc)?);
    r.check_mor(
        "product-additive",
        t,
        0,
        &u.add(&v)?.compose(&prod)?,
        &u.compose(&prod)?.add(&v.compose(&prod)?)?,
        cfg,
    )?;

    let df = f.differential();
    let ddf = df.differential();
    r.check_mor(
        "CD.1",
        t,
        0,
        &f.add(f2)?.differential(),
        &df.add(&f2.differential())?,
        cfg,
    )?;
    r.check_mor(
        "CD.1",
        t,
        1,
        &M::zero(base, a, b).differential(),
        &M::zero(base, 2 * a, b),
        cfg,
    )?;
    r.check_mor(
        "CD.2",
        t,
        0,
        &cm(Canonical::ZeroPair, a).compose(&df)?,
        &M::zero(base, a, b),
        cfg,
    )?;
    let lhs = cm(Canonical::SumVectors, a).compose(&df)?;
    let rhs = cm(Canonical::SumProj0, a)
        .compose(&df)?
        .add(&cm(Canonical::SumProj1, a).compose(&df)?)?;
    r.check_mor("CD.2", t, 1, &lhs, &rhs, cfg)?;
    r.check_mor("CD.3", t, 0, &id(a).differential(), &pj(a, a, 1), cfg)?;
    for j in 0..2 {
        let p = pj(a, b, j);
        let rhs = pj(a + b, a + b, 1).compose(&p)?;
        r.check_mor("CD.3", t, j + 1, &p.differential(), &rhs, cfg)?;
    }
    r.check_mor(
        "CD.4",
        t,
        0,
        &f.pair(fc)?.differential(),
        &df.pair(&fc.differential())?,
        cfg,
    )?;
    let tf = pj(a, a, 0).compose(f)?.pair(&df)?;
    r.check_mor(
        "CD.5",
        t,
        0,
        &f.compose(g)?.differential(),
        &tf.compose(&g.differential())?,
        cfg,
    )?;
    r.check_mor(
        "CD.6",
        t,
        0,
        &cm(Canonical::Lift, a).compose(&ddf)?,
        &df,
        cfg,
    )?;
    r.check_mor(
        "CD.7",
        t,
        0,
        &cm(Canonical::Flip, a).compose(&ddf)?,
        &ddf,
        cfg,
    )?;

    let la = l1.dom();
    let tl = pj(la, la, 0).compose(l1)?.pair(&l1.differential())?;
    r.check_mor("tangent-linear", t, 0, &tl, &l1.product(l1)?, cfg)?;
    r.check_mor(
        "linear",
        t,
        0,
        &l1.differential(),
        &pj(la, la, 1).compose(l1)?,
        cfg,
    )?;
    r.check_mor("power", t, 0, &f.power(3), &f.power(1).power(2), cfg)?;
    r.check_mor("power", t, 1, &f.power(0), f, cfg)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    #[test]
    fn base_laws_small() {
        let mut gen = FixtureGen::new(3);
        let r = base_battery::<BigRational>(&mut gen, 3, &EqualityConfig::default()).unwrap();
        assert!(r.passed(), "{:?}", r.failed_axioms());
    }

    #[test]
    fn input_laws() {
        let f: Seq<BigRational> = crate::comonad::omega(
            &crate::parse::parse_map(P, 2, &["x0*x1", "x0^3"]).unwrap(),
            2,
        );
        let r = check_input_laws(&f, &EqualityConfig::default()).unwrap();
        assert!(r.passed(), "{:?}", r.failed_axioms());
        assert_eq!(r.count("tangent.iv"), 1);
        let g: Seq<BigRational> = Seq::identity(P, 1, 0);
        let r = check_input_laws(&g, &EqualityConfig::default()).unwrap();
        assert!(r.passed() && r.count("dt.i") == 0);
    }

    #[test]
    fn predseq_identities_small() {
        let mut gen = FixtureGen::new(5);
        gen.max_degree = 2;
        let r = predseq_battery::<BigRational>(&mut gen, 1, 2, &EqualityConfig::default()).unwrap();
        assert!(r.passed(), "{:?}", r.failed_axioms());
        assert!(r.count("predelta.iv") == 1);
    }
}
