//! Truncated pre-D-sequences `f_0, …, f_N` with `f_n : P^n(A) → B`.

use std::fmt;

use crate::error::{check_dim, Error, Result};
use crate::morphism::{projection, terminal, top_block, Base, EqualityConfig, Morphism, Witness};

#[derive(Clone, Debug, PartialEq)]
pub struct PreDSeq<M> {
    dom: usize,
    cod: usize,
    terms: Vec<M>,
}

/// Outcome of comparing two sequences termwise up to their common order.
#[derive(Clone, Debug, PartialEq)]
pub struct SeqComparison {
    /// Highest term index that was compared.
    pub depth: usize,
    /// First failing term and its witness.
    pub failure: Option<(usize, Witness)>,
}

impl SeqComparison {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

impl<M: Morphism> PreDSeq<M> {
    /// Checks `dom(f_n) = 2^n·dom`, `cod(f_n) = cod` and a common base.
    pub fn new(dom: usize, cod: usize, terms: Vec<M>) -> Result<Self> {
        let Some(first) = terms.first() else {
            return Err(Error::Format("a sequence needs at least one term".into()));
        };
        let base = first.base();
        for (n, t) in terms.iter().enumerate() {
            if t.base() != base {
                return Err(Error::TagMismatch {
                    left: base,
                    right: t.base(),
                });
            }
            check_dim("term domain", dom << n, t.dom())?;
            check_dim("term codomain", cod, t.cod())?;
        }
        Ok(PreDSeq { dom, cod, terms })
    }

    // Callers guarantee the shape invariants.
    fn raw(dom: usize, cod: usize, terms: Vec<M>) -> Self {
        debug_assert!(terms
            .iter()
            .enumerate()
            .all(|(n, t)| t.dom() == dom << n && t.cod() == cod));
        PreDSeq { dom, cod, terms }
    }

    pub fn dom(&self) -> usize {
        self.dom
    }

    pub fn cod(&self) -> usize {
        self.cod
    }

    pub fn order(&self) -> usize {
        self.terms.len() - 1
    }

    pub fn base(&self) -> Base {
        self.terms[0].base()
    }

    pub fn terms(&self) -> &[M] {
        &self.terms
    }

    pub fn term(&self, n: usize) -> Result<&M> {
        self.terms.get(n).ok_or(Error::InsufficientOrder {
            required: n,
            available: self.order(),
        })
    }

    pub fn into_terms(self) -> Vec<M> {
        self.terms
    }

    /// Keeps `f_0..f_n`.
    pub fn truncate(&self, n: usize) -> Result<Self> {
        if n > self.order() {
            return Err(Error::InsufficientOrder {
                required: n,
                available: self.order(),
            });
        }
        Ok(Self::raw(self.dom, self.cod, self.terms[..=n].to_vec()))
    }

    /// `i_0 = 1`, `i_n` selects the last block of `P^n(A)`.
    pub fn identity(base: Base, a: usize, order: usize) -> Self {
        let terms = (0..=order).map(|n| top_block(base, a, n as u32)).collect();
        Self::raw(a, a, terms)
    }

    pub fn zero(base: Base, a: usize, b: usize, order: usize) -> Self {
        let terms = (0..=order).map(|n| M::zero(base, a << n, b)).collect();
        Self::raw(a, b, terms)
    }

    /// `i•·π_j` for `A × B`.
    pub fn proj(base: Base, a: usize, b: usize, j: usize, order: usize) -> Self {
        Self::identity(base, a + b, order)
            .rscalar(&projection(base, a, b, j))
            .expect("projection codomain matches")
    }

    /// `i•·t` into the terminal object.
    pub fn terminal(base: Base, a: usize, order: usize) -> Self {
        Self::identity(base, a, order)
            .rscalar(&terminal(base, a))
            .expect("terminal map matches")
    }

    /// `(h·f)_n = P^n(h) f_n`.
    pub fn lscalar(h: &M, f: &Self) -> Result<Self> {
        check_dim("left scalar codomain", f.dom, h.cod())?;
        let terms = f
            .terms
            .iter()
            .enumerate()
            .map(|(n, t)| h.power(n as u32).compose(t))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::raw(h.dom(), f.cod, terms))
    }

    /// `(f·k)_n = f_n k`.
    pub fn rscalar(&self, k: &M) -> Result<Self> {
        check_dim("right scalar domain", self.cod, k.dom())?;
        let terms = self
            .terms
            .iter()
            .map(|t| t.compose(k))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::raw(self.dom, k.cod(), terms))
    }

    fn need_order(&self, required: usize) -> Result<()> {
        if self.order() < required {
            Err(Error::InsufficientOrder {
                required,
                available: self.order(),
            })
        } else {
            Ok(())
        }
    }

    /// `D[f]_n = f_{n+1}`.
    pub fn differential(&self) -> Result<Self> {
        self.need_order(1)?;
        Ok(Self::raw(2 * self.dom, self.cod, self.terms[1..].to_vec()))
    }

    /// `D^k[f]`.
    pub fn shift(&self, k: usize) -> Result<Self> {
        self.need_order(k)?;
        Ok(Self::raw(self.dom << k, self.cod, self.terms[k..].to_vec()))
    }

    /// `T(f)_n = ⟨P^n(π0) f_n, f_{n+1}⟩`.
    pub fn tangent(&self) -> Result<Self> {
        self.need_order(1)?;
        let base = self.base();
        let pi0: M = projection(base, self.dom, self.dom, 0);
        let terms = (0..self.order())
            .map(|n| {
                pi0.power(n as u32)
                    .compose(&self.terms[n])?
                    .pair(&self.terms[n + 1])
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::raw(2 * self.dom, 2 * self.cod, terms))
    }

    /// `T^k(f)`.
    pub fn tangent_iter(&self, k: usize) -> Result<Self> {
        let mut s = self.clone();
        for _ in 0..k {
            s = s.tangent()?;
        }
        Ok(s)
    }

    /// `(f∗g)_n = T^n(f)_0 g_n`, truncated to the smaller order.
    pub fn compose(&self, g: &Self) -> Result<Self> {
        check_dim("composed sequences", self.cod, g.dom)?;
        if self.base() != g.base() {
            return Err(Error::TagMismatch {
                left: self.base(),
                right: g.base(),
            });
        }
        let order = self.order().min(g.order());
        let mut s = self.truncate(order)?;
        let mut terms = Vec::with_capacity(order + 1);
        for n in 0..=order {
            terms.push(s.terms[0].compose(&g.terms[n])?);
            if n < order {
                s = s.tangent()?;
            }
        }
        Ok(Self::raw(self.dom, g.cod, terms))
    }

    fn same_shape(&self, other: &Self, context: &'static str) -> Result<()> {
        check_dim(context, self.dom, other.dom)?;
        if self.order() != other.order() {
            return Err(Error::OrderMismatch {
                left: self.order(),
                right: other.order(),
            });
        }
        Ok(())
    }

    /// `⟨f, g⟩_n = ⟨f_n, g_n⟩`.
    pub fn pair(&self, other: &Self) -> Result<Self> {
        self.same_shape(other, "paired sequences")?;
        let terms = self
            .terms
            .iter()
            .zip(&other.terms)
            .map(|(a, b)| a.pair(b))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::raw(self.dom, self.cod + other.cod, terms))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_shape(other, "summed sequences")?;
        check_dim("summed sequences", self.cod, other.cod)?;
        let terms = self
            .terms
            .iter()
            .zip(&other.terms)
            .map(|(a, b)| a.add(b))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::raw(self.dom, self.cod, terms))
    }

    /// Termwise comparison up to the smaller order.
    pub fn compare_upto(&self, other: &Self, cfg: &EqualityConfig) -> Result<SeqComparison> {
        check_dim("compared sequence domains", self.dom, other.dom)?;
        check_dim("compared sequence codomains", self.cod, other.cod)?;
        let depth = self.order().min(other.order());
        for n in 0..=depth {
            if let Some(w) = self.terms[n].compare(&other.terms[n], cfg)? {
                return Ok(SeqComparison {
                    depth,
                    failure: Some((n, w)),
                });
            }
        }
        Ok(SeqComparison {
            depth,
            failure: None,
        })
    }

    /// Equal orders and termwise equal.
    pub fn equals(&self, other: &Self, cfg: &EqualityConfig) -> Result<bool> {
        if self.order() != other.order() {
            check_dim("compared sequence domains", self.dom, other.dom)?;
            return Ok(false);
        }
        Ok(self.compare_upto(other, cfg)?.passed())
    }
}

impl<M: Morphism> fmt::Display for PreDSeq<M> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (n, t) in self.terms.iter().enumerate() {
            if n > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
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

    fn strings(s: &Seq) -> Vec<String> {
        s.terms().iter().map(|t| t.to_string()).collect()
    }

    #[test]
    fn identity_terms() {
        let i = Seq::identity(Base::Poly, 1, 2);
        assert_eq!(strings(&i), ["[x0]", "[x1]", "[x3]"]);
        let i = Seq::identity(Base::Poly, 2, 1);
        assert_eq!(strings(&i), ["[x0, x1]", "[x2, x3]"]);
        for n in 0..3 {
            let i = Seq::identity(Base::Poly, 1, n + 1);
            assert_eq!(
                i.terms()[n + 1],
                projection::<Mor>(Base::Poly, 1 << n, 1 << n, 1)
                    .compose(&i.terms()[n])
                    .unwrap()
            );
        }
    }

    #[test]
    fn scalar_actions() {
        let h = poly(1, &["2*x0"]);
        let f = Seq::identity(Base::Poly, 1, 1);
        assert_eq!(
            strings(&Seq::lscalar(&h, &f).unwrap()),
            ["[2*x0]", "[2*x1]"]
        );
        assert_eq!(strings(&f.rscalar(&h).unwrap()), ["[2*x0]", "[2*x1]"]);
        let bad = poly(2, &["x0"]);
        assert!(matches!(
            Seq::lscalar(&poly(1, &["x0", "x0", "x0"]), &f),
            Err(Error::DimensionMismatch { .. })
        ));
        assert!(f.rscalar(&bad).is_err());
    }

    #[test]
    fn tangent_and_differential() {
        let f = omega(&poly(1, &["x0^2"]), 1);
        let t = f.tangent().unwrap();
        assert_eq!(t.order(), 0);
        assert_eq!(strings(&t), ["[x0^2, 2*x0*x1]"]);
        let i = Seq::identity(Base::Poly, 1, 2);
        assert_eq!(strings(&i.differential().unwrap()), ["[x1]", "[x3]"]);
        let z = Seq::zero(Base::Poly, 1, 1, 0);
        assert_eq!(
            z.tangent(),
            Err(Error::InsufficientOrder {
                required: 1,
                available: 0
            })
        );
        assert!(z.differential().is_err());
    }

    #[test]
    fn composition_example() {
        let f = omega(&poly(1, &["x0^2"]), 1);
        let g = omega(&poly(1, &["x0^3"]), 1);
        let fg = f.compose(&g).unwrap();
        assert_eq!(strings(&fg), ["[x0^6]", "[6*x0^5*x1]"]);
        let g2 = omega(&poly(1, &["x0^3"]), 3);
        assert_eq!(f.compose(&g2).unwrap().order(), 1);
    }

    #[test]
    fn products() {
        let p = Seq::proj(Base::Poly, 1, 1, 1, 1);
        assert_eq!(strings(&p), ["[x1]", "[x3]"]);
        let t = Seq::terminal(Base::Poly, 2, 2);
        assert!(t.terms().iter().all(|m| m.cod() == 0));
        let f = omega(&poly(1, &["x0^2"]), 2);
        let g = omega(&poly(1, &["x0^3"]), 2);
        let fg = f.pair(&g).unwrap();
        let back = fg.compose(&Seq::proj(Base::Poly, 1, 1, 0, 2)).unwrap();
        assert_eq!(back, f);
        assert!(matches!(
            f.pair(&omega(&poly(1, &["x0"]), 1)),
            Err(Error::OrderMismatch { left: 2, right: 1 })
        ));
    }

    #[test]
    fn sums_and_equality() {
        let cfg = EqualityConfig::default();
        let f = omega(&poly(1, &["x0^2"]), 2);
        let g = omega(&poly(1, &["x0^3"]), 2);
        let fg = omega(&poly(1, &["x0^2 + x0^3"]), 2);
        assert!(f.add(&g).unwrap().equals(&fg, &cfg).unwrap());
        let z = Seq::zero(Base::Poly, 1, 1, 2);
        assert_eq!(f.add(&z).unwrap(), f);
        let i2 = Seq::identity(Base::Poly, 1, 2);
        let i1 = Seq::identity(Base::Poly, 1, 1);
        assert!(!i2.equals(&i1, &cfg).unwrap());
        let cmp = i2.compare_upto(&i1, &cfg).unwrap();
        assert_eq!((cmp.depth, cmp.passed()), (1, true));
        let hand = Seq::new(
            1,
            1,
            vec![
                poly(1, &["x0^2"]),
                poly(2, &["2*x0*x1"]),
                poly(4, &["2*(x1*x2 + x0*x3)"]),
            ],
        )
        .unwrap();
        assert!(f.equals(&hand, &cfg).unwrap());
    }

    #[test]
    fn constructor_checks_shape() {
        assert!(Seq::new(1, 1, vec![poly(1, &["x0"]), poly(1, &["x0"])]).is_err());
        assert!(Seq::new(1, 1, vec![]).is_err());
        let e: Mor = Mor::identity(Base::Elementary, 2);
        assert!(matches!(
            Seq::new(
                1,
                1,
                vec![
                    poly(1, &["x0"]),
                    e.compose(&Mor::zero(Base::Elementary, 2, 1)).unwrap()
                ]
            ),
            Err(Error::TagMismatch { .. })
        ));
    }
}
