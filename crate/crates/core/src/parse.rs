//! Recursive-descent parser for map components.
//!
//! ```text
//! expr   := "-"? term (("+" | "-") term)*
//! term   := factor ("*" factor)*
//! factor := atom ("^" nat)?
//! atom   := rational | "x" nat | fn "(" expr ")" | "(" expr ")"
//! rational := int ("/" posint)?
//! fn     := "sin" | "cos" | "exp"
//! ```

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::elem::{ElemMap, Expr, Node};
use crate::error::{Error, Result};
use crate::morphism::{Base, BaseMor};
use crate::poly::{PolyMap, Polynomial};
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Func {
    Sin,
    Cos,
    Exp,
}

impl Func {
    fn name(self) -> &'static str {
        match self {
            Func::Sin => "sin",
            Func::Cos => "cos",
            Func::Exp => "exp",
        }
    }
}

#[derive(Clone, Debug)]
enum Ast {
    Num(BigInt, BigInt),
    Var(usize),
    Add(Box<Ast>, Box<Ast>),
    Sub(Box<Ast>, Box<Ast>),
    Neg(Box<Ast>),
    Mul(Box<Ast>, Box<Ast>),
    Pow(Box<Ast>, u32),
    Call(Func, Box<Ast>),
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    dom: usize,
    allow_fns: bool,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn fail<T>(&self, expected: &str) -> Result<T> {
        Err(Error::Syntax {
            position: self.pos,
            expected: expected.to_string(),
        })
    }

    fn digits(&mut self) -> Option<&'a str> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            None
        } else {
            std::str::from_utf8(&self.src[start..self.pos]).ok()
        }
    }

    fn expr(&mut self) -> Result<Ast> {
        let mut acc = if self.eat(b'-') {
            Ast::Neg(Box::new(self.term()?))
        } else {
            self.term()?
        };
        loop {
            if self.eat(b'+') {
                acc = Ast::Add(Box::new(acc), Box::new(self.term()?));
            } else if self.eat(b'-') {
                acc = Ast::Sub(Box::new(acc), Box::new(self.term()?));
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Ast> {
        let mut acc = self.factor()?;
        while self.eat(b'*') {
            acc = Ast::Mul(Box::new(acc), Box::new(self.factor()?));
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Ast> {
        let base = self.atom()?;
        if self.eat(b'^') {
            let Some(d) = self.digits() else {
                return self.fail("natural exponent");
            };
            match d.parse::<u32>() {
                Ok(e) => Ok(Ast::Pow(Box::new(base), e)),
                Err(_) => self.fail("exponent below 2^32"),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Ast> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(b')') {
                    return self.fail("')'");
                }
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let numer: BigInt = self.digits().unwrap().parse().unwrap();
                if self.eat(b'/') {
                    let Some(d) = self.digits() else {
                        return self.fail("positive denominator");
                    };
                    let denom: BigInt = d.parse().unwrap();
                    if denom.is_zero() {
                        return self.fail("positive denominator");
                    }
                    Ok(Ast::Num(numer, denom))
                } else {
                    Ok(Ast::Num(numer, BigInt::one()))
                }
            }
            Some(b'x') => {
                self.pos += 1;
                if !self.src.get(self.pos).is_some_and(|c| c.is_ascii_digit()) {
                    return self.fail("variable index");
                }
                let digits = self.digits().unwrap();
                let index = digits.parse::<usize>().unwrap_or(usize::MAX);
                if index >= self.dom {
                    return Err(Error::UnknownVariable {
                        index,
                        dom: self.dom,
                    });
                }
                Ok(Ast::Var(index))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_alphanumeric() {
                    self.pos += 1;
                }
                let word = std::str::from_utf8(&self.src[start..self.pos]).unwrap_or("");
                let func = match word {
                    "sin" => Func::Sin,
                    "cos" => Func::Cos,
                    "exp" => Func::Exp,
                    _ => {
                        self.pos = start;
                        return self.fail("number, variable, function or '('");
                    }
                };
                if !self.allow_fns {
                    return Err(Error::FunctionNotAllowed {
                        name: func.name().to_string(),
                    });
                }
                if !self.eat(b'(') {
                    return self.fail("'('");
                }
                let arg = self.expr()?;
                if !self.eat(b')') {
                    return self.fail("')'");
                }
                Ok(Ast::Call(func, Box::new(arg)))
            }
            _ => self.fail("number, variable, function or '('"),
        }
    }
}

fn parse_ast(text: &str, dom: usize, allow_fns: bool) -> Result<Ast> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
        dom,
        allow_fns,
    };
    let ast = p.expr()?;
    if p.peek().is_some() {
        return p.fail("operator or end of input");
    }
    Ok(ast)
}

fn lower_poly<S: Scalar>(ast: &Ast, dom: usize) -> Polynomial<S> {
    match ast {
        Ast::Num(n, d) => Polynomial::constant(dom, S::from_ratio(n.clone(), d.clone())),
        Ast::Var(i) => Polynomial::var(dom, *i),
        Ast::Add(a, b) => lower_poly::<S>(a, dom).add(&lower_poly(b, dom)),
        Ast::Sub(a, b) => lower_poly::<S>(a, dom).sub(&lower_poly(b, dom)),
        Ast::Neg(a) => lower_poly::<S>(a, dom).neg(),
        Ast::Mul(a, b) => lower_poly::<S>(a, dom).mul(&lower_poly(b, dom)),
        Ast::Pow(a, e) => lower_poly::<S>(a, dom).pow(*e),
        Ast::Call(..) => unreachable!("functions are rejected while parsing"),
    }
}

fn lower_elem<S: Scalar>(ast: &Ast) -> Node<S> {
    match ast {
        Ast::Num(n, d) => Expr::constant(S::from_ratio(n.clone(), d.clone())),
        Ast::Var(i) => Expr::var(*i),
        Ast::Add(a, b) => Expr::add(lower_elem(a), lower_elem(b)),
        Ast::Sub(a, b) => Expr::add(lower_elem(a), Expr::neg(lower_elem(b))),
        Ast::Neg(a) => Expr::neg(lower_elem(a)),
        Ast::Mul(a, b) => Expr::mul(lower_elem(a), lower_elem(b)),
        Ast::Pow(a, e) => Expr::pow(lower_elem(a), *e),
        Ast::Call(Func::Sin, a) => Expr::sin(lower_elem(a)),
        Ast::Call(Func::Cos, a) => Expr::cos(lower_elem(a)),
        Ast::Call(Func::Exp, a) => Expr::exp(lower_elem(a)),
    }
}

/// Parses one component as a canonical polynomial in `dom` variables.
pub fn parse_polynomial<S: Scalar>(text: &str, dom: usize) -> Result<Polynomial<S>> {
    Ok(lower_poly(&parse_ast(text, dom, false)?, dom))
}

/// Parses one component as an expression tree over `dom` variables.
pub fn parse_expr<S: Scalar>(text: &str, dom: usize) -> Result<Node<S>> {
    Ok(lower_elem(&parse_ast(text, dom, true)?))
}

/// Parses a whole map from its component strings.
pub fn parse_map<S: Scalar, T: AsRef<str>>(
    base: Base,
    dom: usize,
    components: &[T],
) -> Result<BaseMor<S>> {
    match base {
        Base::Poly => {
            let comps = components
                .iter()
                .map(|c| parse_polynomial(c.as_ref(), dom))
                .collect::<Result<Vec<_>>>()?;
            Ok(BaseMor::Poly(PolyMap::new(dom, comps)?))
        }
        Base::Elementary => {
            let comps = components
                .iter()
                .map(|c| parse_expr(c.as_ref(), dom))
                .collect::<Result<Vec<_>>>()?;
            Ok(BaseMor::Elem(ElemMap::new(dom, comps)?))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    type Q = BigRational;

    fn q(n: i64, d: i64) -> Q {
        Q::new(n.into(), d.into())
    }

    #[test]
    fn reads_polynomials() {
        let p = parse_polynomial::<Q>("x0^2 + 3/2*x0*x1", 2).unwrap();
        assert_eq!(p.len(), 2);
        assert_eq!(p.to_string(), "x0^2 + 3/2*x0*x1");
        let m = crate::poly::Monomial::from_exponents(vec![1, 1]);
        assert_eq!(p.coefficient(&m), q(3, 2));
    }

    #[test]
    fn precedence_and_associativity() {
        let p = parse_polynomial::<Q>("2 - 3 - 4", 0).unwrap();
        assert_eq!(p.to_string(), "-5");
        let p = parse_polynomial::<Q>("2*x0^2", 1).unwrap();
        assert_eq!(p.to_string(), "2*x0^2");
        let p = parse_polynomial::<Q>("(x0 + 1)^2", 1).unwrap();
        assert_eq!(p.to_string(), "x0^2 + 2*x0 + 1");
        let p = parse_polynomial::<Q>("-x0 + x0", 1).unwrap();
        assert!(p.is_zero());
        let p = parse_polynomial::<Q>("x0*(-2)", 1).unwrap();
        assert_eq!(p.to_string(), "-2*x0");
        let p = parse_polynomial::<Q>(" 4/6 ", 0).unwrap();
        assert_eq!(p.to_string(), "2/3");
    }

    #[test]
    fn errors() {
        assert_eq!(
            parse_polynomial::<Q>("x2", 2),
            Err(Error::UnknownVariable { index: 2, dom: 2 })
        );
        assert_eq!(
            parse_polynomial::<Q>("sin(x0)", 1),
            Err(Error::FunctionNotAllowed { name: "sin".into() })
        );
        assert!(matches!(
            parse_polynomial::<Q>("x0 +", 1),
            Err(Error::Syntax { position: 4, .. })
        ));
        assert!(matches!(
            parse_polynomial::<Q>("x0 x0", 1),
            Err(Error::Syntax { position: 3, .. })
        ));
        assert!(matches!(
            parse_polynomial::<Q>("1/0", 0),
            Err(Error::Syntax { .. })
        ));
        assert!(matches!(
            parse_polynomial::<Q>("x", 1),
            Err(Error::Syntax { .. })
        ));
        assert!(matches!(
            parse_expr::<Q>("tan(x0)", 1),
            Err(Error::Syntax { .. })
        ));
        assert!(matches!(
            parse_polynomial::<Q>("(x0", 1),
            Err(Error::Syntax { .. })
        ));
        assert!(matches!(
            parse_polynomial::<Q>("", 1),
            Err(Error::Syntax { .. })
        ));
    }

    #[test]
    fn reads_expressions() {
        let e = parse_expr::<Q>("sin(x0)*exp(x0)", 1).unwrap();
        assert!(matches!(&*e, Expr::Mul(a, b)
            if matches!(**a, Expr::Sin(_)) && matches!(**b, Expr::Exp(_))));
        assert_eq!(e.to_string(), "sin(x0)*exp(x0)");
        let e = parse_expr::<Q>("(-1)*sin(x0)", 1).unwrap();
        assert_eq!(e.to_string(), "(-1)*sin(x0)");
    }

    #[test]
    fn map_level() {
        let m = parse_map::<Q, _>(Base::Poly, 2, &["x0*x1", "x1"]).unwrap();
        assert_eq!(m.to_string(), "[x0*x1, x1]");
        let e = parse_map::<Q, _>(Base::Elementary, 1, &["cos(x0)^2"]).unwrap();
        assert_eq!(e.to_string(), "[cos(x0)^2]");
    }
}
