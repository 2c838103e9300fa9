//! Expression-tree maps over `{+, *, ^n, sin, cos, exp}` with rational constants.

use std::fmt;
use std::sync::Arc;

use num_traits::Float;

use crate::error::{check_dim, Result};
use crate::poly::PolyMap;
use crate::scalar::Scalar;

pub type Node<S> = Arc<Expr<S>>;

#[derive(Clone, Debug, PartialEq)]
pub enum Expr<S> {
    Const(S),
    Var(usize),
    Add(Node<S>, Node<S>),
    Mul(Node<S>, Node<S>),
    Pow(Node<S>, u32),
    Sin(Node<S>),
    Cos(Node<S>),
    Exp(Node<S>),
}

#[allow(clippy::should_implement_trait)]
impl<S: Scalar> Expr<S> {
    pub fn constant(c: S) -> Node<S> {
        Arc::new(Expr::Const(c))
    }

    pub fn var(i: usize) -> Node<S> {
        Arc::new(Expr::Var(i))
    }

    fn as_const(&self) -> Option<&S> {
        match self {
            Expr::Const(c) => Some(c),
            _ => None,
        }
    }

    // The constructors below fold constant operands and nothing else.

    pub fn add(a: Node<S>, b: Node<S>) -> Node<S> {
        match (a.as_const(), b.as_const()) {
            (Some(x), Some(y)) => Self::constant(x.clone() + y.clone()),
            (Some(x), None) if x.is_zero() => b,
            (None, Some(y)) if y.is_zero() => a,
            _ => Arc::new(Expr::Add(a, b)),
        }
    }

    pub fn mul(a: Node<S>, b: Node<S>) -> Node<S> {
        match (a.as_const(), b.as_const()) {
            (Some(x), Some(y)) => Self::constant(x.clone() * y.clone()),
            (Some(x), _) if x.is_zero() => a,
            (_, Some(y)) if y.is_zero() => b,
            (Some(x), None) if x.is_one() => b,
            (None, Some(y)) if y.is_one() => a,
            _ => Arc::new(Expr::Mul(a, b)),
        }
    }

    pub fn neg(a: Node<S>) -> Node<S> {
        Self::mul(Self::constant(-S::one()), a)
    }

    pub fn pow(a: Node<S>, e: u32) -> Node<S> {
        if e == 0 {
            return Self::constant(S::one());
        }
        if e == 1 {
            return a;
        }
        if let Some(c) = a.as_const() {
            let mut r = S::one();
            for _ in 0..e {
                r = r * c.clone();
            }
            return Self::constant(r);
        }
        Arc::new(Expr::Pow(a, e))
    }

    pub fn sin(a: Node<S>) -> Node<S> {
        match a.as_const() {
            Some(c) if c.is_zero() => Self::constant(S::zero()),
            _ => Arc::new(Expr::Sin(a)),
        }
    }

    pub fn cos(a: Node<S>) -> Node<S> {
        match a.as_const() {
            Some(c) if c.is_zero() => Self::constant(S::one()),
            _ => Arc::new(Expr::Cos(a)),
        }
    }

    pub fn exp(a: Node<S>) -> Node<S> {
        match a.as_const() {
            Some(c) if c.is_zero() => Self::constant(S::one()),
            _ => Arc::new(Expr::Exp(a)),
        }
    }

    /// Largest variable index used, if any.
    pub fn max_var(&self) -> Option<usize> {
        match self {
            Expr::Const(_) => None,
            Expr::Var(i) => Some(*i),
            Expr::Add(a, b) | Expr::Mul(a, b) => a.max_var().max(b.max_var()),
            Expr::Pow(a, _) | Expr::Sin(a) | Expr::Cos(a) | Expr::Exp(a) => a.max_var(),
        }
    }

    pub fn uses_functions(&self) -> bool {
        match self {
            Expr::Const(_) | Expr::Var(_) => false,
            Expr::Add(a, b) | Expr::Mul(a, b) => a.uses_functions() || b.uses_functions(),
            Expr::Pow(a, _) => a.uses_functions(),
            Expr::Sin(_) | Expr::Cos(_) | Expr::Exp(_) => true,
        }
    }

    /// Partial derivative with respect to variable `index`.
    pub fn partial(node: &Node<S>, index: usize) -> Node<S> {
        match node.as_ref() {
            Expr::Const(_) => Self::constant(S::zero()),
            Expr::Var(j) => Self::constant(if *j == index { S::one() } else { S::zero() }),
            Expr::Add(a, b) => Self::add(Self::partial(a, index), Self::partial(b, index)),
            Expr::Mul(a, b) => Self::add(
                Self::mul(Self::partial(a, index), b.clone()),
                Self::mul(a.clone(), Self::partial(b, index)),
            ),
            Expr::Pow(a, e) => Self::mul(
                Self::mul(
                    Self::constant(S::from_i64(i64::from(*e))),
                    Self::pow(a.clone(), e - 1),
                ),
                Self::partial(a, index),
            ),
            Expr::Sin(a) => Self::mul(Self::cos(a.clone()), Self::partial(a, index)),
            Expr::Cos(a) => Self::mul(Self::neg(Self::sin(a.clone())), Self::partial(a, index)),
            Expr::Exp(a) => Self::mul(Self::exp(a.clone()), Self::partial(a, index)),
        }
    }

    /// Replaces every `Var(i)` by `images[i]`.
    pub fn substitute(node: &Node<S>, images: &[Node<S>]) -> Node<S> {
        match node.as_ref() {
            Expr::Const(_) => node.clone(),
            Expr::Var(i) => images[*i].clone(),
            Expr::Add(a, b) => Self::add(Self::substitute(a, images), Self::substitute(b, images)),
            Expr::Mul(a, b) => Self::mul(Self::substitute(a, images), Self::substitute(b, images)),
            Expr::Pow(a, e) => Self::pow(Self::substitute(a, images), *e),
            Expr::Sin(a) => Self::sin(Self::substitute(a, images)),
            Expr::Cos(a) => Self::cos(Self::substitute(a, images)),
            Expr::Exp(a) => Self::exp(Self::substitute(a, images)),
        }
    }

    pub fn eval<F: Float>(&self, point: &[F]) -> F {
        match self {
            Expr::Const(c) => F::from(c.to_f64()).unwrap_or_else(F::nan),
            Expr::Var(i) => point[*i],
            Expr::Add(a, b) => a.eval(point) + b.eval(point),
            Expr::Mul(a, b) => a.eval(point) * b.eval(point),
            Expr::Pow(a, e) => a.eval(point).powi(*e as i32),
            Expr::Sin(a) => a.eval(point).sin(),
            Expr::Cos(a) => a.eval(point).cos(),
            Expr::Exp(a) => a.eval(point).exp(),
        }
    }

    fn precedence(&self) -> u8 {
        match self {
            Expr::Add(..) => 1,
            Expr::Mul(..) => 2,
            Expr::Pow(..) => 3,
            Expr::Const(c) if *c < S::zero() => 0,
            _ => 4,
        }
    }

    fn fmt_child(&self, f: &mut fmt::Formatter<'_>, min: u8) -> fmt::Result {
        if self.precedence() < min {
            write!(f, "({self})")
        } else {
            write!(f, "{self}")
        }
    }
}

impl<S: Scalar> fmt::Display for Expr<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Const(c) => write!(f, "{c}"),
            Expr::Var(i) => write!(f, "x{i}"),
            Expr::Add(a, b) => {
                a.fmt_child(f, 1)?;
                f.write_str(" + ")?;
                b.fmt_child(f, 1)
            }
            Expr::Mul(a, b) => {
                a.fmt_child(f, 2)?;
                f.write_str("*")?;
                b.fmt_child(f, 2)
            }
            Expr::Pow(a, e) => {
                a.fmt_child(f, 4)?;
                write!(f, "^{e}")
            }
            Expr::Sin(a) => write!(f, "sin({a})"),
            Expr::Cos(a) => write!(f, "cos({a})"),
            Expr::Exp(a) => write!(f, "exp({a})"),
        }
    }
}

/// A map `R^dom → R^cod` given by one expression tree per output.
#[derive(Clone, Debug, PartialEq)]
pub struct ElemMap<S> {
    dom: usize,
    components: Vec<Node<S>>,
}

impl<S: Scalar> ElemMap<S> {
    pub fn new(dom: usize, components: Vec<Node<S>>) -> Result<Self> {
        for c in &components {
            if let Some(i) = c.max_var() {
                if i >= dom {
                    return Err(crate::Error::UnknownVariable { index: i, dom });
                }
            }
        }
        Ok(ElemMap { dom, components })
    }

    pub fn dom(&self) -> usize {
        self.dom
    }

    pub fn cod(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[Node<S>] {
        &self.components
    }

    pub fn from_poly(p: &PolyMap<S>) -> Self {
        let components = p
            .components()
            .iter()
            .map(|poly| {
                let mut acc = Expr::constant(S::zero());
                for (m, c) in poly.terms().rev() {
                    let mut t = Expr::constant(c.clone());
                    for (i, &e) in m.exponents().iter().enumerate() {
                        if e > 0 {
                            t = Expr::mul(t, Expr::pow(Expr::var(i), e));
                        }
                    }
                    acc = Expr::add(acc, t);
                }
                acc
            })
            .collect();
        ElemMap {
            dom: p.dom(),
            components,
        }
    }

    pub fn selection(dom: usize, rows: &[Vec<usize>]) -> Self {
        let components = rows
            .iter()
            .map(|r| {
                r.iter().fold(Expr::constant(S::zero()), |acc, &i| {
                    Expr::add(acc, Expr::var(i))
                })
            })
            .collect();
        ElemMap { dom, components }
    }

    pub fn compose(&self, next: &ElemMap<S>) -> Result<Self> {
        check_dim("composite codomain/domain", next.dom, self.cod())?;
        Ok(ElemMap {
            dom: self.dom,
            components: next
                .components
                .iter()
                .map(|c| Expr::substitute(c, &self.components))
                .collect(),
        })
    }

    pub fn pair(&self, other: &ElemMap<S>) -> Result<Self> {
        check_dim("pairing domains", self.dom, other.dom)?;
        let mut components = self.components.clone();
        components.extend(other.components.iter().cloned());
        Ok(ElemMap {
            dom: self.dom,
            components,
        })
    }

    pub fn add(&self, other: &ElemMap<S>) -> Result<Self> {
        check_dim("sum domains", self.dom, other.dom)?;
        check_dim("sum codomains", self.cod(), other.cod())?;
        Ok(ElemMap {
            dom: self.dom,
            components: self
                .components
                .iter()
                .zip(&other.components)
                .map(|(a, b)| Expr::add(a.clone(), b.clone()))
                .collect(),
        })
    }

    fn shifted(&self, offset: usize) -> Vec<Node<S>> {
        let images: Vec<_> = (0..self.dom).map(|i| Expr::var(offset + i)).collect();
        self.components
            .iter()
            .map(|c| Expr::substitute(c, &images))
            .collect()
    }

    pub fn product(&self, other: &ElemMap<S>) -> Self {
        let dom = self.dom + other.dom;
        let mut components = self.shifted(0);
        components.extend(other.shifted(self.dom));
        ElemMap { dom, components }
    }

    pub fn power(&self, k: u32) -> Self {
        let copies = 1usize << k;
        let dom = self.dom * copies;
        let mut components = Vec::with_capacity(self.cod() * copies);
        for b in 0..copies {
            components.extend(self.shifted(b * self.dom));
        }
        ElemMap { dom, components }
    }

    pub fn differential(&self) -> Self {
        let a = self.dom;
        let components = self
            .components
            .iter()
            .map(|c| {
                (0..a).fold(Expr::constant(S::zero()), |acc, j| {
                    Expr::add(acc, Expr::mul(Expr::partial(c, j), Expr::var(a + j)))
                })
            })
            .collect();
        ElemMap {
            dom: 2 * a,
            components,
        }
    }

    pub fn eval_float<F: Float>(&self, point: &[F]) -> Result<Vec<F>> {
        check_dim("evaluation point", self.dom, point.len())?;
        Ok(self.components.iter().map(|c| c.eval(point)).collect())
    }

    pub fn component_strings(&self) -> Vec<String> {
        self.components.iter().map(ToString::to_string).collect()
    }
}

impl<S: Scalar> fmt::Display for ElemMap<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, c) in self.components.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str("]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    type E = Expr<BigRational>;

    #[test]
    fn derivative_of_sine_prints_cleanly() {
        let f = ElemMap::new(1, vec![E::sin(E::var(0))]).unwrap();
        assert_eq!(f.differential().to_string(), "[cos(x0)*x1]");
    }

    #[test]
    fn constant_folding_only_touches_constants() {
        let two = E::constant(BigRational::from_integer(2.into()));
        let three = E::constant(BigRational::from_integer(3.into()));
        assert_eq!(E::mul(two.clone(), three).to_string(), "6");
        let s = E::add(E::var(0), E::var(0));
        assert_eq!(s.to_string(), "x0 + x0");
        assert_eq!(E::pow(two, 3).to_string(), "8");
    }

    #[test]
    fn evaluation_in_f32_and_f64() {
        let f = ElemMap::new(1, vec![E::mul(E::sin(E::var(0)), E::exp(E::var(0)))]).unwrap();
        let v64 = f.eval_float(&[0.5f64]).unwrap()[0];
        let v32 = f.eval_float(&[0.5f32]).unwrap()[0];
        assert!((v64 - 0.5f64.sin() * 0.5f64.exp()).abs() < 1e-15);
        assert!((f64::from(v32) - v64).abs() < 1e-6);
    }

    #[test]
    fn rejects_out_of_range_variables() {
        assert!(ElemMap::new(1, vec![E::var(1)]).is_err());
    }

    #[test]
    fn negative_constants_are_parenthesized() {
        let e = E::neg(E::sin(E::var(0)));
        assert_eq!(e.to_string(), "(-1)*sin(x0)");
    }
}
