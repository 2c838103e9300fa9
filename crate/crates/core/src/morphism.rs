//! The base category: a morphism abstraction over the two concrete map kinds,
//! and the equality procedure used by every law checker.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::elem::ElemMap;
use crate::error::{check_dim, Error, Result};
use crate::io::MapDoc;
use crate::poly::PolyMap;
use crate::scalar::Scalar;

/// Which concrete base category a map lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Base {
    Poly,
    #[serde(rename = "elementary")]
    Elementary,
}

impl fmt::Display for Base {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Base::Poly => "poly",
            Base::Elementary => "elementary",
        })
    }
}

/// Sampling parameters for equality of elementary maps.
#[derive(Clone, Debug, PartialEq)]
pub struct EqualityConfig {
    pub samples: usize,
    pub seed: u64,
    pub tolerance: f64,
}

/// Seed for the sample points used by sampled equality.
pub const ELEM_SAMPLE_SEED: u64 = 0xD5E0;

impl Default for EqualityConfig {
    fn default() -> Self {
        EqualityConfig {
            samples: 20,
            seed: ELEM_SAMPLE_SEED,
            tolerance: 1e-9,
        }
    }
}

impl EqualityConfig {
    pub fn with_tolerance(tolerance: f64) -> Self {
        EqualityConfig {
            tolerance,
            ..Self::default()
        }
    }

    /// Deterministic sample points in `[-1, 1]^dim`.
    pub fn sample_points(&self, dim: usize) -> Vec<Vec<f64>> {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed ^ (dim as u64).rotate_left(32));
        (0..self.samples)
            .map(|_| (0..dim).map(|_| rng.gen_range(-1.0..=1.0)).collect())
            .collect()
    }
}

/// Evidence that two maps differ.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Witness {
    /// `left - right` for exact maps.
    Difference(MapDoc),
    /// A sample point where the two sides disagree beyond tolerance.
    Point(Vec<f64>),
}

/// Morphisms of a Cartesian left additive category whose objects are flat
/// dimensions. Composition is diagrammatic: `f.compose(g)` runs `f` first.
pub trait Morphism: Clone + fmt::Debug + fmt::Display + Send + Sync + Sized {
    fn base(&self) -> Base;
    fn dom(&self) -> usize;
    fn cod(&self) -> usize;

    /// Output `j` is the sum of the inputs listed in `rows[j]`. Every
    /// canonical structure map (identities, projections, zero, ⟨1,0⟩, ℓ, c, …)
    /// is of this form.
    fn selection(base: Base, dom: usize, rows: &[Vec<usize>]) -> Self;

    fn compose(&self, next: &Self) -> Result<Self>;
    fn pair(&self, other: &Self) -> Result<Self>;
    fn add(&self, other: &Self) -> Result<Self>;
    /// `self × other`.
    fn product(&self, other: &Self) -> Result<Self>;
    /// `P^k(self)`.
    fn power(&self, k: u32) -> Self;
    /// The base differential combinator.
    fn differential(&self) -> Self;
    /// `None` when equal; otherwise a witness of the difference.
    fn compare(&self, other: &Self, cfg: &EqualityConfig) -> Result<Option<Witness>>;

    fn identity(base: Base, dim: usize) -> Self {
        Self::selection(base, dim, &(0..dim).map(|i| vec![i]).collect::<Vec<_>>())
    }

    fn zero(base: Base, dom: usize, cod: usize) -> Self {
        Self::selection(base, dom, &vec![Vec::new(); cod])
    }

    fn equals(&self, other: &Self, cfg: &EqualityConfig) -> Result<bool> {
        Ok(self.compare(other, cfg)?.is_none())
    }
}

/// A map of either base category.
#[derive(Clone, Debug, PartialEq)]
pub enum BaseMor<S> {
    Poly(PolyMap<S>),
    Elem(ElemMap<S>),
}

impl<S: Scalar> From<PolyMap<S>> for BaseMor<S> {
    fn from(p: PolyMap<S>) -> Self {
        BaseMor::Poly(p)
    }
}

impl<S: Scalar> From<ElemMap<S>> for BaseMor<S> {
    fn from(e: ElemMap<S>) -> Self {
        BaseMor::Elem(e)
    }
}

impl<S: Scalar> BaseMor<S> {
    pub fn as_poly(&self) -> Result<&PolyMap<S>> {
        match self {
            BaseMor::Poly(p) => Ok(p),
            BaseMor::Elem(_) => Err(Error::WrongBase {
                expected: Base::Poly,
                found: Base::Elementary,
            }),
        }
    }

    /// Re-expresses the map in the given base. Polynomial maps embed into
    /// the elementary base; the reverse direction is refused.
    pub fn into_base(self, base: Base) -> Result<Self> {
        match (self, base) {
            (BaseMor::Poly(p), Base::Elementary) => Ok(BaseMor::Elem(ElemMap::from_poly(&p))),
            (BaseMor::Elem(_), Base::Poly) => Err(Error::WrongBase {
                expected: Base::Poly,
                found: Base::Elementary,
            }),
            (m, _) => Ok(m),
        }
    }

    /// Exact evaluation at a rational point; polynomial maps only.
    pub fn eval_exact(&self, point: &[S]) -> Result<Vec<S>> {
        self.as_poly()?.eval(point)
    }

    pub fn eval_f64(&self, point: &[f64]) -> Result<Vec<f64>> {
        match self {
            BaseMor::Poly(p) => p.eval_float(point),
            BaseMor::Elem(e) => e.eval_float(point),
        }
    }

    pub fn component_strings(&self) -> Vec<String> {
        match self {
            BaseMor::Poly(p) => p.component_strings(),
            BaseMor::Elem(e) => e.component_strings(),
        }
    }

    fn tags(&self, other: &Self) -> Result<()> {
        if self.base() == other.base() {
            Ok(())
        } else {
            Err(Error::TagMismatch {
                left: self.base(),
                right: other.base(),
            })
        }
    }
}

impl<S: Scalar> fmt::Display for BaseMor<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BaseMor::Poly(p) => write!(f, "{p}"),
            BaseMor::Elem(e) => write!(f, "{e}"),
        }
    }
}

/// Relative error, or absolute error when the reference is small.
fn close(reference: f64, value: f64, tolerance: f64) -> bool {
    let err = (reference - value).abs();
    if reference.abs() < 1.0 {
        err <= tolerance
    } else {
        err <= tolerance * reference.abs()
    }
}

fn sampled_compare<S: Scalar>(
    a: &BaseMor<S>,
    b: &BaseMor<S>,
    cfg: &EqualityConfig,
) -> Result<Option<Witness>> {
    for point in cfg.sample_points(a.dom()) {
        let va = a.eval_f64(&point)?;
        let vb = b.eval_f64(&point)?;
        if va
            .iter()
            .zip(&vb)
            .any(|(&x, &y)| !close(x, y, cfg.tolerance) || x.is_nan() || y.is_nan())
        {
            return Ok(Some(Witness::Point(point)));
        }
    }
    Ok(None)
}

impl<S: Scalar> Morphism for BaseMor<S> {
    fn base(&self) -> Base {
        match self {
            BaseMor::Poly(_) => Base::Poly,
            BaseMor::Elem(_) => Base::Elementary,
        }
    }

    fn dom(&self) -> usize {
        match self {
            BaseMor::Poly(p) => p.dom(),
            BaseMor::Elem(e) => e.dom(),
        }
    }

    fn cod(&self) -> usize {
        match self {
            BaseMor::Poly(p) => p.cod(),
            BaseMor::Elem(e) => e.cod(),
        }
    }

    fn selection(base: Base, dom: usize, rows: &[Vec<usize>]) -> Self {
        match base {
            Base::Poly => BaseMor::Poly(PolyMap::selection(dom, rows)),
            Base::Elementary => BaseMor::Elem(ElemMap::selection(dom, rows)),
        }
    }

    fn compose(&self, next: &Self) -> Result<Self> {
        self.tags(next)?;
        match (self, next) {
            (BaseMor::Poly(a), BaseMor::Poly(b)) => a.compose(b).map(BaseMor::Poly),
            (BaseMor::Elem(a), BaseMor::Elem(b)) => a.compose(b).map(BaseMor::Elem),
            _ => unreachable!(),
        }
    }

    fn pair(&self, other: &Self) -> Result<Self> {
        self.tags(other)?;
        match (self, other) {
            (BaseMor::Poly(a), BaseMor::Poly(b)) => a.pair(b).map(BaseMor::Poly),
            (BaseMor::Elem(a), BaseMor::Elem(b)) => a.pair(b).map(BaseMor::Elem),
            _ => unreachable!(),
        }
    }

    fn add(&self, other: &Self) -> Result<Self> {
        self.tags(other)?;
        match (self, other) {
            (BaseMor::Poly(a), BaseMor::Poly(b)) => a.add(b).map(BaseMor::Poly),
            (BaseMor::Elem(a), BaseMor::Elem(b)) => a.add(b).map(BaseMor::Elem),
            _ => unreachable!(),
        }
    }

    fn product(&self, other: &Self) -> Result<Self> {
        self.tags(other)?;
        match (self, other) {
            (BaseMor::Poly(a), BaseMor::Poly(b)) => Ok(BaseMor::Poly(a.product(b))),
            (BaseMor::Elem(a), BaseMor::Elem(b)) => Ok(BaseMor::Elem(a.product(b))),
            _ => unreachable!(),
        }
    }

    fn power(&self, k: u32) -> Self {
        match self {
            BaseMor::Poly(p) => BaseMor::Poly(p.power(k)),
            BaseMor::Elem(e) => BaseMor::Elem(e.power(k)),
        }
    }

    fn differential(&self) -> Self {
        match self {
            BaseMor::Poly(p) => BaseMor::Poly(p.differential()),
            BaseMor::Elem(e) => BaseMor::Elem(e.differential()),
        }
    }

    fn compare(&self, other: &Self, cfg: &EqualityConfig) -> Result<Option<Witness>> {
        self.tags(other)?;
        check_dim("compared domains", self.dom(), other.dom())?;
        check_dim("compared codomains", self.cod(), other.cod())?;
        match (self, other) {
            (BaseMor::Poly(a), BaseMor::Poly(b)) => {
                if a == b {
                    Ok(None)
                } else {
                    Ok(Some(Witness::Difference(MapDoc::from_poly(&a.sub(b)?))))
                }
            }
            _ => sampled_compare(self, other, cfg),
        }
    }
}

/// Canonical structure maps, named after their role in the tangent structure.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Canonical {
    /// `⟨1, 0⟩ : X → X²`, the zero vector field.
    ZeroPair,
    /// `1 × (π0 + π1) : X³ → X²`, sum of tangent vectors.
    SumVectors,
    /// `1 × π0 : X³ → X²`.
    SumProj0,
    /// `1 × π1 : X³ → X²`.
    SumProj1,
    /// `ℓ = ⟨1,0⟩ × ⟨0,1⟩ : X² → X⁴`, the vertical lift.
    Lift,
    /// `c = 1 × ⟨π1, π0⟩ × 1 : X⁴ → X⁴`, the canonical flip.
    Flip,
}

impl Canonical {
    pub const ALL: [Canonical; 6] = [
        Canonical::ZeroPair,
        Canonical::SumVectors,
        Canonical::SumProj0,
        Canonical::SumProj1,
        Canonical::Lift,
        Canonical::Flip,
    ];

    /// `(domain blocks, block pattern)`; pattern entry `j` lists the input
    /// blocks summed into output block `j`.
    fn blocks(self) -> (usize, Vec<Vec<usize>>) {
        match self {
            Canonical::ZeroPair => (1, vec![vec![0], vec![]]),
            Canonical::SumVectors => (3, vec![vec![0], vec![1, 2]]),
            Canonical::SumProj0 => (3, vec![vec![0], vec![1]]),
            Canonical::SumProj1 => (3, vec![vec![0], vec![2]]),
            Canonical::Lift => (2, vec![vec![0], vec![], vec![], vec![1]]),
            Canonical::Flip => (4, vec![vec![0], vec![2], vec![1], vec![3]]),
        }
    }

    pub fn map<M: Morphism>(self, base: Base, x: usize) -> M {
        let (dom_blocks, pattern) = self.blocks();
        M::selection(base, dom_blocks * x, &block_rows(&pattern, x))
    }
}

/// Expands a block pattern into coordinate rows for blocks of size `x`.
fn block_rows(pattern: &[Vec<usize>], x: usize) -> Vec<Vec<usize>> {
    let mut rows = Vec::with_capacity(pattern.len() * x);
    for sources in pattern {
        for i in 0..x {
            rows.push(sources.iter().map(|b| b * x + i).collect());
        }
    }
    rows
}

/// `π_j : A × B → A` or `B`.
pub fn projection<M: Morphism>(base: Base, a: usize, b: usize, j: usize) -> M {
    let rows: Vec<Vec<usize>> = match j {
        0 => (0..a).map(|i| vec![i]).collect(),
        _ => (a..a + b).map(|i| vec![i]).collect(),
    };
    M::selection(base, a + b, &rows)
}

/// `i_n = π1 ⋯ π1 : P^n(A) → A`, selecting the block whose index has every bit set.
pub fn top_block<M: Morphism>(base: Base, a: usize, n: u32) -> M {
    let last = (1usize << n) - 1;
    M::selection(
        base,
        a << n,
        &(0..a).map(|i| vec![last * a + i]).collect::<Vec<_>>(),
    )
}

/// The terminal map `A → 1`.
pub fn terminal<M: Morphism>(base: Base, a: usize) -> M {
    M::zero(base, a, 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::elem::Expr;
    use crate::poly::Polynomial;
    use num_rational::BigRational;

    type Q = BigRational;
    type Mor = BaseMor<Q>;

    fn poly(dom: usize, comps: Vec<Polynomial<Q>>) -> Mor {
        BaseMor::Poly(PolyMap::new(dom, comps).unwrap())
    }

    #[test]
    fn canonical_maps() {
        let lift: Mor = Canonical::Lift.map(Base::Poly, 1);
        assert_eq!(lift.to_string(), "[x0, 0, 0, x1]");
        let flip: Mor = Canonical::Flip.map(Base::Poly, 1);
        assert_eq!(flip.to_string(), "[x0, x2, x1, x3]");
        let zp: Mor = Canonical::ZeroPair.map(Base::Poly, 2);
        assert_eq!(zp.to_string(), "[x0, x1, 0, 0]");
        let sv: Mor = Canonical::SumVectors.map(Base::Poly, 1);
        assert_eq!(sv.to_string(), "[x0, x1 + x2]");
        let s1: Mor = Canonical::SumProj1.map(Base::Poly, 1);
        assert_eq!(s1.to_string(), "[x0, x2]");
    }

    #[test]
    fn projections_and_identity() {
        let p: Mor = projection(Base::Poly, 1, 1, 0);
        assert_eq!((p.to_string(), p.dom()), ("[x0]".into(), 2));
        let p: Mor = projection(Base::Poly, 1, 1, 1);
        assert_eq!(p.to_string(), "[x1]");
        let p: Mor = projection(Base::Poly, 2, 1, 0);
        assert_eq!((p.to_string(), p.dom()), ("[x0, x1]".into(), 3));
        assert_eq!(Mor::identity(Base::Poly, 0).cod(), 0);
        assert_eq!(Mor::identity(Base::Poly, 3).to_string(), "[x0, x1, x2]");
        let p0: Mor = projection(Base::Poly, 1, 1, 0);
        let p1: Mor = projection(Base::Poly, 1, 1, 1);
        assert_eq!(p0.pair(&p1).unwrap(), Mor::identity(Base::Poly, 2));
        let pi0: Mor = projection(Base::Poly, 1, 1, 0);
        assert_eq!(pi0.power(1).to_string(), "[x0, x2]");
    }

    #[test]
    fn top_block_selects_last() {
        let i2: Mor = top_block(Base::Poly, 1, 2);
        assert_eq!(i2.to_string(), "[x3]");
        let i1: Mor = top_block(Base::Poly, 2, 1);
        assert_eq!(i1.to_string(), "[x2, x3]");
        let i0: Mor = top_block(Base::Poly, 2, 0);
        assert_eq!(i0, Mor::identity(Base::Poly, 2));
    }

    #[test]
    fn poly_witness_is_difference() {
        let x = Polynomial::<Q>::var(1, 0);
        let f = poly(1, vec![x.clone()]);
        let g = poly(1, vec![x.pow(2)]);
        let cfg = EqualityConfig::default();
        match f.compare(&g, &cfg).unwrap() {
            Some(Witness::Difference(doc)) => assert_eq!(doc.components, vec!["-x0^2 + x0"]),
            other => panic!("unexpected {other:?}"),
        }
        let h = poly(1, vec![x.add(&x.pow(2))]);
        let h2 = poly(1, vec![x.pow(2).add(&x)]);
        assert!(h.equals(&h2, &cfg).unwrap());
    }

    #[test]
    fn double_angle_by_sampling() {
        type E = Expr<Q>;
        let two = E::constant(Q::from_integer(2.into()));
        let lhs = ElemMap::new(1, vec![E::sin(E::add(E::var(0), E::var(0)))]).unwrap();
        let rhs = ElemMap::new(
            1,
            vec![E::mul(E::mul(two, E::sin(E::var(0))), E::cos(E::var(0)))],
        )
        .unwrap();
        let cfg = EqualityConfig::with_tolerance(1e-9);
        assert!(Mor::Elem(lhs.clone())
            .equals(&Mor::Elem(rhs), &cfg)
            .unwrap());
        let other = ElemMap::new(1, vec![E::cos(E::var(0))]).unwrap();
        assert!(matches!(
            Mor::Elem(lhs).compare(&Mor::Elem(other), &cfg).unwrap(),
            Some(Witness::Point(_))
        ));
    }

    #[test]
    fn tag_mismatch() {
        let p: Mor = Mor::identity(Base::Poly, 1);
        let e: Mor = Mor::identity(Base::Elementary, 1);
        assert!(matches!(p.compose(&e), Err(Error::TagMismatch { .. })));
        assert!(matches!(p.add(&e), Err(Error::TagMismatch { .. })));
    }

    #[test]
    fn sample_points_are_deterministic_and_bounded() {
        let cfg = EqualityConfig::default();
        let a = cfg.sample_points(3);
        assert_eq!(a, cfg.sample_points(3));
        assert_eq!(a.len(), 20);
        assert!(a.iter().flatten().all(|v| (-1.0..=1.0).contains(v)));
    }
}
