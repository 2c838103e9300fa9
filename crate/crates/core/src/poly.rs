//! Sparse multivariate polynomials and polynomial maps between flat spaces.
//!
//! Terms live in a `BTreeMap` keyed by [`Monomial`], whose ordering is graded
//! reverse lexicographic. Zero coefficients are never stored, so two
//! polynomials are mathematically equal iff they are structurally equal.

use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_traits::Float;

use crate::error::{check_dim, Error, Result};
use crate::scalar::Scalar;

/// Exponent vector of a monomial; its length is the number of variables.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, index: usize) -> Self {
        let mut e = vec![0; nvars];
        e[index] = 1;
        Monomial(e)
    }

    pub fn from_exponents(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        // grevlex: total degree first, then the smaller exponent in the last
        // differing variable wins.
        self.degree().cmp(&other.degree()).then_with(|| {
            for (a, b) in self.0.iter().zip(&other.0).rev() {
                if a != b {
                    return b.cmp(a);
                }
            }
            self.0.len().cmp(&other.0.len())
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{i}")?;
            } else {
                write!(f, "x{i}^{e}")?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

#[derive(Clone, PartialEq, Debug)]
pub struct Polynomial<S> {
    nvars: usize,
    terms: BTreeMap<Monomial, S>,
}

impl<S: Scalar> Polynomial<S> {
    pub fn zero(nvars: usize) -> Self {
        Polynomial {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: S) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(Monomial::one(nvars), c);
        p
    }

    pub fn var(nvars: usize, index: usize) -> Self {
        assert!(
            index < nvars,
            "variable x{index} out of range for {nvars} variables"
        );
        let mut p = Self::zero(nvars);
        p.add_term(Monomial::var(nvars, index), S::one());
        p
    }

    /// Sum of the listed variables (empty list gives zero).
    pub fn var_sum(nvars: usize, indices: &[usize]) -> Self {
        let mut p = Self::zero(nvars);
        for &i in indices {
            p.add_term(Monomial::var(nvars, i), S::one());
        }
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (Vec<u32>, S)>>(nvars: usize, terms: I) -> Self {
        let mut p = Self::zero(nvars);
        for (e, c) in terms {
            assert_eq!(e.len(), nvars, "exponent vector length");
            p.add_term(Monomial(e), c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &S)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> S {
        self.terms.get(m).cloned().unwrap_or_else(S::zero)
    }

    pub fn add_term(&mut self, m: Monomial, c: S) {
        debug_assert_eq!(m.0.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let sum = o.get().clone() + c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.nvars, other.nvars);
        let (mut acc, rest) = if self.len() >= other.len() {
            (self.clone(), other)
        } else {
            (other.clone(), self)
        };
        for (m, c) in &rest.terms {
            acc.add_term(m.clone(), c.clone());
        }
        acc
    }

    pub fn neg(&self) -> Self {
        self.scale(&-S::one())
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &S) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.clone(), a.clone() * c.clone()))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.nvars, other.nvars);
        let mut out = Self::zero(self.nvars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca.clone() * cb.clone());
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut result = Self::constant(self.nvars, S::one());
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    /// Partial derivative with respect to variable `index`.
    pub fn partial(&self, index: usize) -> Self {
        let mut out = Self::zero(self.nvars);
        for (m, c) in &self.terms {
            let e = m.0[index];
            if e == 0 {
                continue;
            }
            let mut d = m.clone();
            d.0[index] = e - 1;
            out.add_term(d, c.clone() * S::from_i64(i64::from(e)));
        }
        out
    }

    /// Jacobian-vector product `Σ_j ∂p/∂x_j · y_j` over `2·nvars` variables,
    /// with `y_j` stored at index `nvars + j`.
    pub fn directional(&self) -> Self {
        let n = self.nvars;
        let mut out = Self::zero(2 * n);
        for (m, c) in &self.terms {
            for j in 0..n {
                let e = m.0[j];
                if e == 0 {
                    continue;
                }
                let mut exps = Vec::with_capacity(2 * n);
                exps.extend_from_slice(&m.0);
                exps.resize(2 * n, 0);
                exps[j] = e - 1;
                exps[n + j] = 1;
                out.add_term(Monomial(exps), c.clone() * S::from_i64(i64::from(e)));
            }
        }
        out
    }

    /// Renames variables: variable `i` becomes variable `map[i]` of a space
    /// with `nvars` variables, or zero when `map[i]` is `None`.
    pub fn rename(&self, nvars: usize, map: &[Option<usize>]) -> Self {
        debug_assert_eq!(map.len(), self.nvars);
        let mut out = Self::zero(nvars);
        'terms: for (m, c) in &self.terms {
            let mut e = vec![0u32; nvars];
            for (i, &k) in m.0.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                match map[i] {
                    Some(j) => e[j] += k,
                    None => continue 'terms,
                }
            }
            out.add_term(Monomial(e), c.clone());
        }
        out
    }

    /// Substitutes `images[i]` for variable `i`. All images share one
    /// variable count, which becomes the variable count of the result.
    pub fn substitute(&self, images: &[Polynomial<S>], nvars: usize) -> Self {
        debug_assert_eq!(images.len(), self.nvars);
        if let Some(map) = selection_map(images) {
            return self.rename(nvars, &map);
        }
        let mut powers: HashMap<(usize, u32), Polynomial<S>> = HashMap::new();
        let mut out = Self::zero(nvars);
        for (m, c) in &self.terms {
            let mut term = Self::constant(nvars, c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let p = powers
                    .entry((i, e))
                    .or_insert_with(|| images[i].pow(e))
                    .clone();
                term = term.mul(&p);
                if term.is_zero() {
                    break;
                }
            }
            for (tm, tc) in term.terms {
                out.add_term(tm, tc);
            }
        }
        out
    }

    pub fn eval(&self, point: &[S]) -> S {
        debug_assert_eq!(point.len(), self.nvars);
        let mut acc = S::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(&m.0) {
                for _ in 0..e {
                    t = t * x.clone();
                }
            }
            acc = acc + t;
        }
        acc
    }

    pub fn eval_float<F: Float>(&self, point: &[F]) -> F {
        debug_assert_eq!(point.len(), self.nvars);
        let mut acc = F::zero();
        for (m, c) in &self.terms {
            let mut t = F::from(c.to_f64()).unwrap_or_else(F::nan);
            for (x, &e) in point.iter().zip(&m.0) {
                if e > 0 {
                    t = t * x.powi(e as i32);
                }
            }
            acc = acc + t;
        }
        acc
    }
}

/// Detects images that are each a single variable with coefficient one, or
/// zero, so that substitution reduces to renaming.
fn selection_map<S: Scalar>(images: &[Polynomial<S>]) -> Option<Vec<Option<usize>>> {
    images
        .iter()
        .map(|p| {
            if p.is_zero() {
                return Some(None);
            }
            if p.terms.len() != 1 {
                return None;
            }
            let (m, c) = p.terms.iter().next()?;
            if !c.is_one() || m.degree() != 1 {
                return None;
            }
            m.0.iter().position(|&e| e == 1).map(Some)
        })
        .collect()
}

impl<S: Scalar> fmt::Display for Polynomial<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, (m, c)) in self.terms.iter().rev().enumerate() {
            let negative = *c < S::zero();
            let mag = if negative { -c.clone() } else { c.clone() };
            match (idx, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if m.is_one() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{mag}*{m}")?;
            }
        }
        Ok(())
    }
}

/// A polynomial map `R^dom → R^cod`, one polynomial per output coordinate.
#[derive(Clone, PartialEq, Debug)]
pub struct PolyMap<S> {
    dom: usize,
    components: Vec<Polynomial<S>>,
}

impl<S: Scalar> PolyMap<S> {
    pub fn new(dom: usize, components: Vec<Polynomial<S>>) -> Result<Self> {
        for p in &components {
            check_dim("component variable count", dom, p.nvars())?;
        }
        Ok(PolyMap { dom, components })
    }

    pub fn dom(&self) -> usize {
        self.dom
    }

    pub fn cod(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[Polynomial<S>] {
        &self.components
    }

    pub fn identity(dim: usize) -> Self {
        PolyMap {
            dom: dim,
            components: (0..dim).map(|i| Polynomial::var(dim, i)).collect(),
        }
    }

    pub fn zero(dom: usize, cod: usize) -> Self {
        PolyMap {
            dom,
            components: vec![Polynomial::zero(dom); cod],
        }
    }

    /// Output `j` is the sum of the input coordinates listed in `rows[j]`.
    pub fn selection(dom: usize, rows: &[Vec<usize>]) -> Self {
        PolyMap {
            dom,
            components: rows.iter().map(|r| Polynomial::var_sum(dom, r)).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(Polynomial::is_zero)
    }

    pub fn degree(&self) -> u32 {
        self.components
            .iter()
            .map(Polynomial::degree)
            .max()
            .unwrap_or(0)
    }

    /// Diagrammatic composite: first `self`, then `next`.
    pub fn compose(&self, next: &PolyMap<S>) -> Result<Self> {
        check_dim("composite codomain/domain", next.dom, self.cod())?;
        Ok(PolyMap {
            dom: self.dom,
            components: next
                .components
                .iter()
                .map(|p| p.substitute(&self.components, self.dom))
                .collect(),
        })
    }

    pub fn pair(&self, other: &PolyMap<S>) -> Result<Self> {
        check_dim("pairing domains", self.dom, other.dom)?;
        let mut components = self.components.clone();
        components.extend(other.components.iter().cloned());
        Ok(PolyMap {
            dom: self.dom,
            components,
        })
    }

    pub fn add(&self, other: &PolyMap<S>) -> Result<Self> {
        check_dim("sum domains", self.dom, other.dom)?;
        check_dim("sum codomains", self.cod(), other.cod())?;
        Ok(PolyMap {
            dom: self.dom,
            components: self
                .components
                .iter()
                .zip(&other.components)
                .map(|(a, b)| a.add(b))
                .collect(),
        })
    }

    pub fn sub(&self, other: &PolyMap<S>) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        PolyMap {
            dom: self.dom,
            components: self.components.iter().map(Polynomial::neg).collect(),
        }
    }

    /// `self × other`, acting on the concatenated domain.
    pub fn product(&self, other: &PolyMap<S>) -> Self {
        let dom = self.dom + other.dom;
        let left: Vec<_> = (0..self.dom).map(Some).collect();
        let right: Vec<_> = (self.dom..dom).map(Some).collect();
        let mut components: Vec<_> = self
            .components
            .iter()
            .map(|p| p.rename(dom, &left))
            .collect();
        components.extend(other.components.iter().map(|p| p.rename(dom, &right)));
        PolyMap { dom, components }
    }

    /// `P^k(self)`: `2^k` block-diagonal copies.
    pub fn power(&self, k: u32) -> Self {
        let copies = 1usize << k;
        let dom = self.dom * copies;
        let mut components = Vec::with_capacity(self.cod() * copies);
        for b in 0..copies {
            let map: Vec<_> = (0..self.dom).map(|i| Some(b * self.dom + i)).collect();
            components.extend(self.components.iter().map(|p| p.rename(dom, &map)));
        }
        PolyMap { dom, components }
    }

    /// `D[f](x, y) = Σ_j ∂f/∂x_j(x) y_j`, with `x` first and the direction `y` second.
    pub fn differential(&self) -> Self {
        PolyMap {
            dom: 2 * self.dom,
            components: self
                .components
                .iter()
                .map(Polynomial::directional)
                .collect(),
        }
    }

    pub fn eval(&self, point: &[S]) -> Result<Vec<S>> {
        check_dim("evaluation point", self.dom, point.len())?;
        Ok(self.components.iter().map(|p| p.eval(point)).collect())
    }

    pub fn eval_float<F: Float>(&self, point: &[F]) -> Result<Vec<F>> {
        check_dim("evaluation point", self.dom, point.len())?;
        Ok(self
            .components
            .iter()
            .map(|p| p.eval_float(point))
            .collect())
    }

    /// Component strings in canonical form.
    pub fn component_strings(&self) -> Vec<String> {
        self.components.iter().map(ToString::to_string).collect()
    }

    /// Single component as a `1`-dimensional map.
    pub fn component(&self, j: usize) -> Result<Self> {
        let p = self.components.get(j).ok_or(Error::DimensionMismatch {
            context: "component index",
            expected: self.cod(),
            found: j,
        })?;
        Ok(PolyMap {
            dom: self.dom,
            components: vec![p.clone()],
        })
    }
}

impl<S: Scalar> fmt::Display for PolyMap<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, p) in self.components.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("]")
    }
}
