//! Exact connected-spanning-subgraph polynomials, the reliability transform
//! and the series/parallel reduction rules.

mod enumerate;
mod reduce;

pub use enumerate::{connected_sum_per_edge, reliability_per_edge, ENUMERATION_MAX_EDGES};
pub use reduce::{
    evaluate_by_reduction, parallel_reduce, series_reduce, series_reduce_potts, SeriesReductionResult,
};

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::multigraph::{ClassLabel, Multigraph};
use crate::poly::{BiPoly, Poly};
use crate::scalar::{ComplexExt, Real};

/// `C_G` as an exact polynomial: univariate when the graph has one class,
/// bivariate in `(a, b)` when it has two (smaller label is `a`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConnectedPoly {
    Univariate(Poly<BigInt>),
    Bivariate(BiPoly<BigInt>),
}

impl ConnectedPoly {
    /// Every class mapped to the same variable.
    pub fn to_univariate(&self) -> Poly<BigInt> {
        match self {
            ConnectedPoly::Univariate(p) => p.clone(),
            ConnectedPoly::Bivariate(p) => p.diagonal(),
        }
    }

    pub fn to_json(&self) -> String {
        match self {
            ConnectedPoly::Univariate(p) => p.to_json("v"),
            ConnectedPoly::Bivariate(p) => p.to_json(),
        }
    }
}

/// Generating polynomial of connected spanning subgraphs by subset enumeration.
pub fn connected_subgraph_poly(g: &Multigraph) -> Result<ConnectedPoly> {
    let classes = g.classes();
    match classes.len() {
        0 | 1 => connected_subgraph_univariate(g).map(ConnectedPoly::Univariate),
        2 => two_class_poly(g, classes[0]).map(ConnectedPoly::Bivariate),
        k => Err(Error::CapabilityExceeded(format!("at most two weight classes are supported, got {k}"))),
    }
}

/// `C_G(v)` with every edge weighted `v`, ignoring class labels.
pub fn connected_subgraph_univariate(g: &Multigraph) -> Result<Poly<BigInt>> {
    let hist = enumerate::histogram_to_bigint(enumerate::class_histogram(g, 0)?);
    Ok(Poly::new(hist.into_iter().next().unwrap_or_default()))
}

/// `C_G(a, b)` with class `a_class` weighted `a` and every other class weighted `b`.
pub fn two_class_poly(g: &Multigraph, a_class: ClassLabel) -> Result<BiPoly<BigInt>> {
    let mask_a = g
        .edges()
        .iter()
        .enumerate()
        .filter(|(_, e)| e.class == a_class)
        .fold(0u32, |m, (i, _)| m | 1 << i);
    let hist = enumerate::histogram_to_bigint(enumerate::class_histogram(g, mask_a)?);
    let mut p = BiPoly::zero();
    for (i, row) in hist.into_iter().enumerate() {
        for (j, c) in row.into_iter().enumerate() {
            p.add_term((i as u32, j as u32), c);
        }
    }
    Ok(p)
}

/// `C` of the graph whose class-`a` edges are each replaced by `p1` parallel
/// copies and class-`b` edges by `p2` copies.
pub fn two_class_specialize(p: &BiPoly<BigInt>, p1: u32, p2: u32) -> Result<Poly<BigInt>> {
    if p1 == 0 || p2 == 0 {
        return Err(Error::InvalidArgument("multiplicities must be positive".into()));
    }
    Ok(p.specialize(p1, p2))
}

/// A polynomial times an exact rational scalar.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScaledPoly {
    pub scalar: BigRational,
    pub poly: Poly<BigInt>,
}

impl ScaledPoly {
    pub fn to_rational(&self) -> Poly<BigRational> {
        self.poly.to_rational().scale(&self.scalar)
    }

    /// The integer polynomial when the scalar is one.
    pub fn as_integer(&self) -> Option<&Poly<BigInt>> {
        self.scalar.is_one().then_some(&self.poly)
    }
}

/// `C` of the graph with every edge subdivided into `s` edges, from `p = C_G`
/// of a graph with `num_edges` edges: `s^m v^{(s-1)m} p(v/s)`.
pub fn subdivided_univariate(p: &Poly<BigInt>, num_edges: u32, s: u32) -> Result<ScaledPoly> {
    if s == 0 {
        return Err(Error::InvalidArgument("subdivision count must be positive".into()));
    }
    let m = num_edges as usize;
    let deg = p.degree().unwrap_or(0);
    // pull out s^{deg-m} when the degree exceeds the edge count
    let extra = deg.saturating_sub(m);
    let s_big = BigInt::from(s);
    let coeffs: Vec<BigInt> = p
        .coeffs()
        .iter()
        .enumerate()
        .map(|(k, c)| c * num_traits::pow(s_big.clone(), m + extra - k))
        .collect();
    let poly = Poly::new(coeffs).shift((s as usize - 1) * m);
    let scalar = BigRational::new(BigInt::one(), num_traits::pow(s_big, extra));
    Ok(ScaledPoly { scalar, poly })
}

/// Numeric weight per class label.
#[derive(Debug, Clone, PartialEq)]
pub struct ClassWeights<R> {
    map: BTreeMap<ClassLabel, Complex<R>>,
}

impl<R: Real> ClassWeights<R> {
    pub fn new(map: BTreeMap<ClassLabel, Complex<R>>) -> Self {
        ClassWeights { map }
    }

    pub fn uniform(g: &Multigraph, w: Complex<R>) -> Self {
        ClassWeights { map: g.classes().into_iter().map(|c| (c, w.clone())).collect() }
    }

    pub fn insert(&mut self, class: ClassLabel, w: Complex<R>) {
        self.map.insert(class, w);
    }

    pub fn get(&self, class: ClassLabel) -> Result<&Complex<R>> {
        self.map
            .get(&class)
            .ok_or_else(|| Error::InvalidArgument(format!("no weight given for class {class}")))
    }

    /// One weight per edge, in edge order.
    pub fn per_edge(&self, g: &Multigraph) -> Result<Vec<Complex<R>>> {
        g.edges().iter().map(|e| self.get(e.class).cloned()).collect()
    }
}

fn unit<R: Real>(bits: u32) -> Complex<R> {
    Complex::new(R::from_f64_prec(1.0, bits), R::from_f64_prec(0.0, bits))
}

fn is_exactly<R: Real>(z: &Complex<R>, re: f64) -> bool {
    z.re == R::from_f64_prec(re, z.precision()) && z.im.is_zero()
}

/// `R_G(p) = prod(1 - p_e) C_G(p / (1 - p))`.
pub fn reliability_from_connected<R: Real>(g: &Multigraph, probs: &ClassWeights<R>) -> Result<Complex<R>> {
    let ps = probs.per_edge(g)?;
    let mut prefactor: Option<Complex<R>> = None;
    let mut vs = Vec::with_capacity(ps.len());
    for p in &ps {
        if is_exactly(p, 1.0) {
            return Err(Error::Pole("edge probability equal to 1".into()));
        }
        let q = unit::<R>(p.precision()) - p.clone();
        vs.push(p.clone() / q.clone());
        prefactor = Some(match prefactor {
            None => q,
            Some(f) => f * q,
        });
    }
    let c = connected_sum_per_edge(g, &vs)?;
    Ok(match prefactor {
        None => c,
        Some(f) => f * c,
    })
}

/// `C_G(v) = prod(1 + v_e) R_G(v / (1 + v))`, with `R_G` summed directly.
pub fn connected_from_reliability<R: Real>(g: &Multigraph, weights: &ClassWeights<R>) -> Result<Complex<R>> {
    let vs = weights.per_edge(g)?;
    let mut prefactor: Option<Complex<R>> = None;
    let mut ps = Vec::with_capacity(vs.len());
    for v in &vs {
        if is_exactly(v, -1.0) {
            return Err(Error::Pole("edge weight equal to -1".into()));
        }
        let q = unit::<R>(v.precision()) + v.clone();
        ps.push(v.clone() / q.clone());
        prefactor = Some(match prefactor {
            None => q,
            Some(f) => f * q,
        });
    }
    let r = reliability_per_edge(g, &ps)?;
    Ok(match prefactor {
        None => r,
        Some(f) => f * r,
    })
}

/// `sum c_k p^k (1-p)^(m-k)`: the reliability polynomial from `C_G` of an
/// `m`-edge graph with all edges alike.
pub fn reliability_poly(c: &Poly<BigInt>, num_edges: u32) -> Result<Poly<BigInt>> {
    change_basis(c, num_edges, -1)
}

/// Inverse of [`reliability_poly`]: `sum r_k v^k (1+v)^(m-k)`.
pub fn connected_from_reliability_poly(r: &Poly<BigInt>, num_edges: u32) -> Result<Poly<BigInt>> {
    change_basis(r, num_edges, 1)
}

fn change_basis(p: &Poly<BigInt>, num_edges: u32, sign: i64) -> Result<Poly<BigInt>> {
    let m = num_edges as usize;
    if p.degree().is_some_and(|d| d > m) {
        return Err(Error::InvalidArgument(format!("degree exceeds edge count {m}")));
    }
    let base = Poly::new(vec![BigInt::one(), BigInt::from(sign)]);
    let mut out = Poly::zero();
    for (k, c) in p.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let term = base.pow((m - k) as u32).shift(k).scale(c);
        out = &out + &term;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multigraph::*;
    use crate::poly::int_poly;
    use crate::scalar::MpReal;

    fn c(re: f64, im: f64) -> Complex<f64> {
        Complex::new(re, im)
    }

    #[test]
    fn k4_univariate() {
        let p = connected_subgraph_univariate(&complete_graph(4).unwrap()).unwrap();
        assert_eq!(p, int_poly(&[0, 0, 0, 16, 15, 6, 1]));
    }

    #[test]
    fn triangle() {
        let p = connected_subgraph_univariate(&cycle_graph(3).unwrap()).unwrap();
        assert_eq!(p, int_poly(&[0, 0, 3, 1]));
    }

    #[test]
    fn k4_case_b_bivariate() {
        let p = match connected_subgraph_poly(&k4_two_class(K4Case::B)).unwrap() {
            ConnectedPoly::Bivariate(p) => p,
            other => panic!("{other:?}"),
        };
        let t = |i, j, c: i64| ((i, j), BigInt::from(c));
        let expect = BiPoly::from_terms([
            t(0, 3, 4),
            t(0, 4, 1),
            t(1, 2, 8),
            t(1, 3, 8),
            t(1, 4, 2),
            t(2, 1, 4),
            t(2, 2, 6),
            t(2, 3, 4),
            t(2, 4, 1),
        ]);
        assert_eq!(p, expect);
        assert_eq!(two_class_specialize(&p, 1, 1).unwrap(), int_poly(&[0, 0, 0, 16, 15, 6, 1]));
    }

    #[test]
    fn single_vertex_and_loops() {
        assert_eq!(connected_subgraph_univariate(&Multigraph::empty(1)).unwrap(), int_poly(&[1]));
        // a loop is freely included or not
        assert_eq!(connected_subgraph_univariate(&cycle_graph(1).unwrap()).unwrap(), int_poly(&[1, 1]));
        assert_eq!(connected_subgraph_univariate(&parallel_bundle_graph(3).unwrap()).unwrap(), int_poly(&[0, 3, 3, 1]));
    }

    #[test]
    fn rejections() {
        assert_eq!(connected_subgraph_poly(&Multigraph::empty(2)), Err(Error::Disconnected));
        let big = parallel_bundle_graph(25).unwrap();
        assert!(matches!(connected_subgraph_poly(&big), Err(Error::CapabilityExceeded(_))));
        let three = Multigraph::new(2, vec![Edge::new(0, 1, 0), Edge::new(0, 1, 1), Edge::new(0, 1, 2)]).unwrap();
        assert!(matches!(connected_subgraph_poly(&three), Err(Error::CapabilityExceeded(_))));
        assert!(two_class_specialize(&BiPoly::zero(), 0, 1).is_err());
    }

    #[test]
    fn specialization_matches_expanded_enumeration() {
        let b = k4_two_class(K4Case::B);
        let bi = two_class_poly(&b, 0).unwrap();
        let expanded = parallel_expand(&b, &MultiplicityVector::two_class(&b, 6, 1).unwrap()).unwrap();
        let direct = connected_subgraph_univariate(&expanded).unwrap();
        assert_eq!(direct.degree(), Some(16));
        assert_eq!(two_class_specialize(&bi, 6, 1).unwrap(), direct);
    }

    #[test]
    fn subdivision_of_doubled_edge_is_four_cycle() {
        let c2 = int_poly(&[0, 2, 1]);
        let out = subdivided_univariate(&c2, 2, 2).unwrap();
        assert_eq!(out.as_integer(), Some(&int_poly(&[0, 0, 0, 4, 1])));
        assert_eq!(subdivided_univariate(&c2, 2, 1).unwrap().as_integer(), Some(&c2));
        let c4 = connected_subgraph_univariate(&cycle_graph(4).unwrap()).unwrap();
        assert_eq!(out.poly, c4);
    }

    #[test]
    fn oversized_degree_carries_scalar() {
        let p = int_poly(&[0, 1, 1, 1]);
        let out = subdivided_univariate(&p, 1, 2).unwrap();
        assert_eq!(out.scalar, BigRational::new(1.into(), 4.into()));
        // 2 v p(v/2) = v^2 + v^3/2 + v^4/4
        let expect = Poly::new(vec![0, 0, 4, 2, 1].into_iter().map(|x| BigRational::new(x.into(), 4.into())).collect());
        assert_eq!(out.to_rational(), expect);
    }

    #[test]
    fn reliability_examples() {
        let edge = Multigraph::new(2, vec![Edge::new(0, 1, 0)]).unwrap();
        let p = ClassWeights::uniform(&edge, c(0.3, 0.0));
        assert!((reliability_from_connected(&edge, &p).unwrap() - c(0.3, 0.0)).norm() < 1e-15);

        let tri = cycle_graph(3).unwrap();
        let half = ClassWeights::uniform(&tri, c(0.5, 0.0));
        assert!((reliability_from_connected(&tri, &half).unwrap() - c(0.5, 0.0)).norm() < 1e-15);

        let k4 = complete_graph(4).unwrap();
        let zero = ClassWeights::uniform(&k4, c(0.0, 0.0));
        assert_eq!(reliability_from_connected(&k4, &zero).unwrap(), c(0.0, 0.0));

        let one = ClassWeights::uniform(&k4, c(1.0, 0.0));
        assert!(matches!(reliability_from_connected(&k4, &one), Err(Error::Pole(_))));
        let minus = ClassWeights::uniform(&k4, c(-1.0, 0.0));
        assert!(matches!(connected_from_reliability(&k4, &minus), Err(Error::Pole(_))));
    }

    #[test]
    fn reliability_round_trip_multiprecision() {
        let g = k4_two_class(K4Case::D);
        let mut w = ClassWeights::new(BTreeMap::new());
        w.insert(0, Complex::<MpReal>::from_f64_prec(0.3, -1.2, 128));
        w.insert(1, Complex::<MpReal>::from_f64_prec(-0.7, 0.4, 128));
        let direct = connected_sum_per_edge(&g, &w.per_edge(&g).unwrap()).unwrap();
        let via = connected_from_reliability(&g, &w).unwrap();
        let diff = Complex::new(direct.re.clone() - via.re, direct.im.clone() - via.im).modulus();
        assert!((diff / direct.modulus()).to_f64() < 1e-30);
    }

    #[test]
    fn reliability_polynomial_basis_change() {
        let c = int_poly(&[0, 0, 3, 1]);
        let r = reliability_poly(&c, 3).unwrap();
        // 3p^2(1-p) + p^3 = 3p^2 - 2p^3
        assert_eq!(r, int_poly(&[0, 0, 3, -2]));
        assert_eq!(connected_from_reliability_poly(&r, 3).unwrap(), c);
        assert!(reliability_poly(&c, 2).is_err());
    }
}
