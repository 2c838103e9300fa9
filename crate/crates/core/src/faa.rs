//! Independent derivative oracles: iterated symbolic derivatives, the
//! univariate Faà di Bruno formula over integer partitions, and evaluation of
//! sequence terms at a directional block pattern.

use num_bigint::BigInt;
use num_traits::One;

use crate::comonad::omega;
use crate::error::{check_dim, Error, Result};
use crate::morphism::{BaseMor, EqualityConfig, Morphism, Witness};
use crate::poly::{PolyMap, Polynomial};
use crate::report::LawReport;
use crate::scalar::Scalar;
use crate::seq::PreDSeq;

/// `D^n[f]`.
pub fn nth_symbolic_derivative<M: Morphism>(f: &M, n: usize) -> M {
    (0..n).fold(f.clone(), |g, _| g.differential())
}

/// Integer partitions of `n` as multiplicity vectors `m_1..m_n`,
/// with `Σ j·m_j = n`. Each partition appears once.
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(rem: usize, max_part: usize, m: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rem == 0 {
            out.push(m.clone());
            return;
        }
        for part in (1..=max_part.min(rem)).rev() {
            m[part - 1] += 1;
            go(rem - part, part, m, out);
            m[part - 1] -= 1;
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut vec![0; n], &mut out);
    out
}

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// `n! / Π m_j! (j!)^{m_j}`.
pub fn bell_coefficient(m: &[usize]) -> BigInt {
    let n: usize = m.iter().enumerate().map(|(j, &c)| (j + 1) * c).sum();
    let mut denom = BigInt::one();
    for (j, &c) in m.iter().enumerate() {
        denom *= factorial(c);
        for _ in 0..c {
            denom *= factorial(j + 1);
        }
    }
    factorial(n) / denom
}

fn univariate<S: Scalar>(f: &PolyMap<S>, role: &'static str) -> Result<Polynomial<S>> {
    check_dim(role, 1, f.dom())?;
    check_dim(role, 1, f.cod())?;
    Ok(f.components()[0].clone())
}

/// The `n`-th classical derivative of `x ↦ outer(inner(x))`.
pub fn faa_univariate<S: Scalar>(
    inner: &PolyMap<S>,
    outer: &PolyMap<S>,
    n: usize,
) -> Result<PolyMap<S>> {
    let f = univariate(inner, "inner map must be univariate")?;
    let g = univariate(outer, "outer map must be univariate")?;
    if n == 0 {
        return inner.compose(outer);
    }
    let mut df = vec![f.clone()];
    for j in 1..=n {
        df.push(df[j - 1].partial(0));
    }
    let mut dg = vec![g];
    for k in 1..=n {
        dg.push(dg[k - 1].partial(0));
    }
    let mut total = Polynomial::zero(1);
    for m in partitions(n) {
        let k: usize = m.iter().sum();
        let mut term = dg[k].substitute(std::slice::from_ref(&f), 1);
        for (j, &c) in m.iter().enumerate() {
            if c > 0 {
                term = term.mul(&df[j + 1].pow(c as u32));
            }
        }
        let coef = S::from_ratio(bell_coefficient(&m), BigInt::one());
        total = total.add(&term.scale(&coef));
    }
    PolyMap::new(1, vec![total])
}

/// Block assignment for `P^n(A)`: block 0 is `x`, single-bit blocks are `v`,
/// everything else is zero.
pub fn directional_pattern<S: Scalar>(n: usize, x: &[S], v: &[S]) -> Result<Vec<S>> {
    check_dim("direction", x.len(), v.len())?;
    let mut point = Vec::with_capacity(x.len() << n);
    for b in 0usize..(1 << n) {
        match b.count_ones() {
            0 => point.extend_from_slice(x),
            1 => point.extend_from_slice(v),
            _ => point.extend(std::iter::repeat_n(S::zero(), x.len())),
        }
    }
    Ok(point)
}

/// `f_n` at the directional pattern `(x, v)`.
pub fn directional_eval<S: Scalar>(
    f: &PreDSeq<BaseMor<S>>,
    n: usize,
    x: &[S],
    v: &[S],
) -> Result<Vec<S>> {
    check_dim("basepoint", f.dom(), x.len())?;
    let term = f.term(n)?;
    term.eval_exact(&directional_pattern(n, x, v)?)
}

/// `n!` times the `t^n` coefficient of `f(x + t·v)`.
pub fn directional_oracle<S: Scalar>(f: &BaseMor<S>, n: usize, x: &[S], v: &[S]) -> Result<Vec<S>> {
    let p = f.as_poly()?;
    check_dim("basepoint", p.dom(), x.len())?;
    check_dim("direction", p.dom(), v.len())?;
    // The line t ↦ x + t·v as a map from one fresh coordinate.
    let line = PolyMap::new(
        1,
        x.iter()
            .zip(v)
            .map(|(xi, vi)| {
                Polynomial::constant(1, xi.clone()).add(&Polynomial::var(1, 0).scale(vi))
            })
            .collect(),
    )?;
    let along = line.compose(p)?;
    let nf = S::from_ratio(factorial(n), BigInt::one());
    let tn = crate::poly::Monomial::from_exponents(vec![n as u32]);
    Ok(along
        .components()
        .iter()
        .map(|c| c.coefficient(&tn) * nf.clone())
        .collect())
}

/// A univariate `f_n` restricted to the pattern `(x0, 1)`: the result is a
/// polynomial in `x0` alone.
pub fn pattern_restrict<S: Scalar>(term: &PolyMap<S>, n: usize) -> Result<PolyMap<S>> {
    check_dim("term arity", 1 << n, term.dom())?;
    let comps = (0usize..(1 << n))
        .map(|b| match b.count_ones() {
            0 => Polynomial::var(1, 0),
            1 => Polynomial::constant(1, S::one()),
            _ => Polynomial::zero(1),
        })
        .collect();
    PolyMap::new(1, comps)?.compose(term)
}

/// Rational sample points for the univariate cross-check.
pub fn sample_points<S: Scalar>() -> Vec<S> {
    [(-3, 2), (-1, 1), (0, 1), (1, 3), (2, 1)]
        .iter()
        .map(|&(a, b)| S::from_ratio(BigInt::from(a), BigInt::from(b)))
        .collect()
}

/// `(ω(f) ∗ ω(g))_n = D^n[f;g]` for `n ≤ max_n`, and for univariate maps the
/// pattern evaluation of the composite against the Faà di Bruno formula.
pub fn chain_equivalence_check<S: Scalar>(
    f: &BaseMor<S>,
    g: &BaseMor<S>,
    max_n: usize,
    order: usize,
    cfg: &EqualityConfig,
) -> Result<LawReport> {
    if max_n > order {
        return Err(Error::InsufficientOrder {
            required: max_n,
            available: order,
        });
    }
    let mut r = LawReport::new("chain-rule");
    let composite = omega(f, order).compose(&omega(g, order))?;
    let fg = f.compose(g)?;
    for n in 0..=max_n {
        let direct = nth_symbolic_derivative(&fg, n);
        r.check_mor("chain-rule", n, 0, &composite.terms()[n], &direct, cfg)?;
    }
    let (fp, gp) = (f.as_poly()?, g.as_poly()?);
    if fp.dom() == 1 && fp.cod() == 1 && gp.cod() == 1 {
        let one = [S::one()];
        for n in 0..=max_n {
            let faa = faa_univariate(fp, gp, n)?;
            for (i, x) in sample_points::<S>().into_iter().enumerate() {
                let got = directional_eval(&composite, n, std::slice::from_ref(&x), &one)?;
                let want = faa.eval(std::slice::from_ref(&x))?;
                let witness = (got != want).then(|| Witness::Point(vec![x.to_f64()]));
                r.push("faa", n, i, n, witness);
            }
        }
    }
    r.sort();
    Ok(r)
}

/// Three-way check for univariate `inner`, `outer` and every `n ≤ max_n`:
/// Faà di Bruno, the pattern value of `D^n[inner; outer]`, and the line oracle.
///
/// Directions `v = 1` and `v = −1/2` are used; the formula side is scaled by `v^n`.
pub fn faa_oracle_check<S: Scalar>(
    inner: &BaseMor<S>,
    outer: &BaseMor<S>,
    max_n: usize,
) -> Result<LawReport> {
    let mut r = LawReport::new("faa");
    let (ip, op) = (inner.as_poly()?, outer.as_poly()?);
    let fg = inner.compose(outer)?;
    let w = omega(&fg, max_n);
    let dirs = [S::one(), S::from_ratio(BigInt::from(-1), BigInt::from(2))];
    for n in 0..=max_n {
        let faa = faa_univariate(ip, op, n)?;
        for (i, x) in sample_points::<S>().into_iter().enumerate() {
            let xs = [x.clone()];
            let classical = faa.eval(&xs)?;
            for (j, v) in dirs.iter().enumerate() {
                let vs = [v.clone()];
                let mut scale = S::one();
                for _ in 0..n {
                    scale = scale * v.clone();
                }
                let want: Vec<S> = classical
                    .iter()
                    .map(|c| c.clone() * scale.clone())
                    .collect();
                let pattern = directional_eval(&w, n, &xs, &vs)?;
                let line = directional_oracle(&fg, n, &xs, &vs)?;
                let ok = pattern == want && line == want;
                let witness = (!ok).then(|| Witness::Point(vec![x.to_f64(), v.to_f64()]));
                r.push("faa", n, 2 * i + j, n, witness);
            }
        }
    }
    r.sort();
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::morphism::Base;
    use crate::parse::parse_map;
    use num_rational::BigRational;

    type Q = BigRational;
    type Mor = BaseMor<Q>;

    fn poly(dom: usize, comps: &[&str]) -> Mor {
        parse_map(Base::Poly, dom, comps).unwrap()
    }

    fn q(n: i64) -> Q {
        Q::from_integer(n.into())
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..=10).map(|n| partitions(n).len()).collect();
        assert_eq!(counts, [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
        let bell: Vec<BigInt> = (0..=10)
            .map(|n| partitions(n).iter().map(|m| bell_coefficient(m)).sum())
            .collect();
        let expect = [1u64, 1, 2, 5, 15, 52, 203, 877, 4140, 21147, 115975];
        assert_eq!(
            bell,
            expect.iter().map(|&b| BigInt::from(b)).collect::<Vec<_>>()
        );
        for n in 0..=8 {
            for m in partitions(n) {
                assert_eq!(
                    m.iter()
                        .enumerate()
                        .map(|(j, c)| (j + 1) * c)
                        .sum::<usize>(),
                    n
                );
            }
        }
    }

    #[test]
    fn iterated_derivatives() {
        let f = poly(1, &["x0^2"]);
        assert_eq!(
            nth_symbolic_derivative(&f, 2).to_string(),
            "[2*x1*x2 + 2*x0*x3]"
        );
        assert_eq!(nth_symbolic_derivative(&f, 0), f);
        assert_eq!(
            nth_symbolic_derivative(&poly(1, &["3*x0"]), 2).to_string(),
            "[3*x3]"
        );
    }

    #[test]
    fn faa_examples() {
        let inner = poly(1, &["x0^2"]);
        let outer = poly(1, &["x0^3"]);
        let (i, o) = (inner.as_poly().unwrap(), outer.as_poly().unwrap());
        assert_eq!(faa_univariate(i, o, 2).unwrap().to_string(), "[30*x0^4]");
        assert_eq!(faa_univariate(i, o, 1).unwrap().to_string(), "[6*x0^5]");
        assert_eq!(faa_univariate(i, o, 0).unwrap().to_string(), "[x0^6]");
        let bad = poly(2, &["x0"]);
        assert!(faa_univariate(bad.as_poly().unwrap(), o, 1).is_err());
        let fg = inner.compose(&outer).unwrap();
        let d2 = nth_symbolic_derivative(&fg, 2);
        let restricted = pattern_restrict(d2.as_poly().unwrap(), 2).unwrap();
        assert_eq!(restricted.to_string(), "[30*x0^4]");
    }

    #[test]
    fn directional_examples() {
        let w = omega(&poly(1, &["x0^3"]), 2);
        assert_eq!(
            directional_eval(&w, 2, &[q(2)], &[q(1)]).unwrap(),
            vec![q(12)]
        );
        assert_eq!(
            directional_eval(&w, 0, &[q(2)], &[q(1)]).unwrap(),
            vec![q(8)]
        );
        let w = omega(&poly(1, &["x0^2"]), 1);
        assert_eq!(
            directional_eval(&w, 1, &[q(3)], &[q(5)]).unwrap(),
            vec![q(30)]
        );
        assert!(matches!(
            directional_eval(&w, 2, &[q(3)], &[q(5)]),
            Err(Error::InsufficientOrder { .. })
        ));
        let f = poly(1, &["x0^3"]);
        assert_eq!(
            directional_oracle(&f, 2, &[q(2)], &[q(1)]).unwrap(),
            vec![q(12)]
        );
        assert_eq!(
            directional_oracle(&f, 0, &[q(2)], &[q(1)]).unwrap(),
            vec![q(8)]
        );
        assert_eq!(
            directional_oracle(&f, 1, &[q(2)], &[q(0)]).unwrap(),
            vec![q(0)]
        );
        assert_eq!(
            directional_pattern(2, &[q(7)], &[q(1)]).unwrap(),
            vec![q(7), q(1), q(1), q(0)]
        );
    }

    #[test]
    fn chain_examples() {
        let cfg = EqualityConfig::default();
        let f = poly(1, &["x0^2"]);
        let g = poly(1, &["x0^3"]);
        let r = chain_equivalence_check(&f, &g, 2, 2, &cfg).unwrap();
        assert!(r.passed());
        assert_eq!(r.count("chain-rule"), 3);
        assert_eq!(r.count("faa"), 15);
        let w = omega(&f, 2).compose(&omega(&g, 2)).unwrap();
        assert_eq!(w.terms()[1].to_string(), "[6*x0^5*x1]");
        assert_eq!(
            directional_eval(&w, 2, &[q(1)], &[q(1)]).unwrap(),
            vec![q(30)]
        );
    }

    #[test]
    fn three_way() {
        let r = faa_oracle_check(&poly(1, &["x0^2"]), &poly(1, &["x0^3"]), 5).unwrap();
        assert!(r.passed());
        assert_eq!(r.entries.len(), 6 * 5 * 2);
        let r = faa_oracle_check(&poly(1, &["x0^2 + x0"]), &poly(1, &["x0^4 - 2*x0"]), 4).unwrap();
        assert!(r.passed());
    }
}
