//! Named graph families and their polynomials.
//!
//! Spec strings:
//!
//! ```text
//! k4:<case>:<p1>:<p2>[:sub=<s>]   K4 two-class graph, class a edges ×p1, class b ×p2, then s-fold subdivision
//! k6:<p1>:<p2>                    K6 with two disjoint triangles ×p1, the other nine edges ×p2
//! cycle:<n>                       n-cycle
//! bundle:<n>                      n parallel edges between two vertices
//! ```
//!
//! Polynomials of expanded families are obtained by substituting
//! `a = (1+v)^{p1} - 1`, `b = (1+v)^{p2} - 1` into the base two-class
//! polynomial and applying the subdivision identity, never by enumerating
//! the expanded graph.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::error::{Error, Result};
use crate::multigraph::{
    cycle_graph, k4_two_class, k6_disjoint_triangles, parallel_bundle_graph, parallel_expand, subdivide, K4Case,
    Multigraph, MultiplicityVector, SubdivisionVector,
};
use crate::poly::{BiPoly, Poly};
use crate::reliability::{subdivided_univariate, two_class_poly, two_class_specialize, ScaledPoly};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    K4 { case: K4Case, p1: u32, p2: u32, sub: u32 },
    K6 { p1: u32, p2: u32 },
    Cycle(u32),
    Bundle(u32),
}

fn bad(s: &str, why: &str) -> Error {
    Error::InvalidArgument(format!("family spec '{s}': {why}"))
}

fn positive(s: &str, field: &str, name: &str) -> Result<u32> {
    match field.parse::<u32>() {
        Ok(0) => Err(bad(s, &format!("{name} must be positive"))),
        Ok(n) => Ok(n),
        Err(_) => Err(bad(s, &format!("{name} '{field}' is not a positive integer"))),
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.trim().split(':').collect();
        match parts.as_slice() {
            ["k4", case, p1, p2, rest @ ..] => {
                let case: K4Case = case.parse().map_err(|_| bad(s, "case must be one of a, b, c, d, e"))?;
                let p1 = positive(s, p1, "p1")?;
                let p2 = positive(s, p2, "p2")?;
                let sub = match rest {
                    [] => 1,
                    [opt] => match opt.strip_prefix("sub=") {
                        Some(v) => positive(s, v, "sub")?,
                        None => return Err(bad(s, "expected 'sub=<s>'")),
                    },
                    _ => return Err(bad(s, "too many fields")),
                };
                Ok(FamilySpec::K4 { case, p1, p2, sub })
            }
            ["k6", p1, p2] => Ok(FamilySpec::K6 { p1: positive(s, p1, "p1")?, p2: positive(s, p2, "p2")? }),
            ["cycle", n] => Ok(FamilySpec::Cycle(positive(s, n, "n")?)),
            ["bundle", n] => Ok(FamilySpec::Bundle(positive(s, n, "n")?)),
            _ => Err(bad(s, "expected k4:<case>:<p1>:<p2>[:sub=<s>], k6:<p1>:<p2>, cycle:<n> or bundle:<n>")),
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilySpec::K4 { case, p1, p2, sub: 1 } => write!(f, "k4:{}:{p1}:{p2}", case.letter()),
            FamilySpec::K4 { case, p1, p2, sub } => write!(f, "k4:{}:{p1}:{p2}:sub={sub}", case.letter()),
            FamilySpec::K6 { p1, p2 } => write!(f, "k6:{p1}:{p2}"),
            FamilySpec::Cycle(n) => write!(f, "cycle:{n}"),
            FamilySpec::Bundle(n) => write!(f, "bundle:{n}"),
        }
    }
}

impl FamilySpec {
    pub fn k4(case: K4Case, p1: u32, p2: u32) -> Self {
        FamilySpec::K4 { case, p1, p2, sub: 1 }
    }

    /// The unexpanded two-class graph, or the graph itself for cycles and bundles.
    pub fn base_graph(&self) -> Result<Multigraph> {
        match *self {
            FamilySpec::K4 { case, .. } => Ok(k4_two_class(case)),
            FamilySpec::K6 { .. } => Ok(k6_disjoint_triangles()),
            FamilySpec::Cycle(n) => cycle_graph(n as usize),
            FamilySpec::Bundle(n) => parallel_bundle_graph(n as usize),
        }
    }

    /// Two-class polynomial of the base graph (class 0 is `a`).
    pub fn base_poly(&self) -> Result<Option<BiPoly<BigInt>>> {
        match self {
            FamilySpec::K4 { .. } | FamilySpec::K6 { .. } => Ok(Some(two_class_poly(&self.base_graph()?, 0)?)),
            _ => Ok(None),
        }
    }

    fn multiplicities(&self) -> (u32, u32) {
        match *self {
            FamilySpec::K4 { p1, p2, .. } | FamilySpec::K6 { p1, p2 } => (p1, p2),
            _ => (1, 1),
        }
    }

    fn subdivision(&self) -> u32 {
        match *self {
            FamilySpec::K4 { sub, .. } => sub,
            _ => 1,
        }
    }

    /// Edge count of the fully expanded graph.
    pub fn num_edges(&self) -> u64 {
        match *self {
            FamilySpec::Cycle(n) | FamilySpec::Bundle(n) => n as u64,
            _ => {
                let g = self.base_graph().expect("fixed base graphs are valid");
                let (p1, p2) = self.multiplicities();
                let na = g.class_count(0) as u64;
                let nb = g.num_edges() as u64 - na;
                (na * p1 as u64 + nb * p2 as u64) * self.subdivision() as u64
            }
        }
    }

    /// Vertex count of the fully expanded graph.
    pub fn num_vertices(&self) -> u64 {
        match *self {
            FamilySpec::Cycle(n) => n as u64,
            FamilySpec::Bundle(_) => 2,
            _ => {
                let base = self.base_graph().expect("fixed base graphs are valid").num_vertices() as u64;
                let s = self.subdivision() as u64;
                base + (s - 1) * (self.num_edges() / s)
            }
        }
    }

    /// The fully expanded graph.
    pub fn graph(&self) -> Result<Multigraph> {
        let base = self.base_graph()?;
        match self {
            FamilySpec::Cycle(_) | FamilySpec::Bundle(_) => Ok(base),
            _ => {
                let (p1, p2) = self.multiplicities();
                let g = parallel_expand(&base, &MultiplicityVector::two_class(&base, p1, p2)?)?;
                match self.subdivision() {
                    1 => Ok(g),
                    s => subdivide(&g, &SubdivisionVector::uniform(g.num_edges(), s)?),
                }
            }
        }
    }

    /// `C_G(v)` of the expanded graph, exactly.
    pub fn polynomial(&self) -> Result<ScaledPoly> {
        let unit = || ScaledPoly { scalar: BigRational::one(), poly: Poly::zero() };
        match *self {
            FamilySpec::Cycle(n) => {
                let one_loop = Poly::new(vec![BigInt::one(), BigInt::one()]);
                subdivided_univariate(&one_loop, 1, n)
            }
            FamilySpec::Bundle(n) => Ok(ScaledPoly { poly: Poly::shifted_power(n), ..unit() }),
            _ => {
                let (p1, p2) = self.multiplicities();
                let base = self.base_poly()?.expect("two-class family");
                let specialized = two_class_specialize(&base, p1, p2)?;
                match self.subdivision() {
                    1 => Ok(ScaledPoly { poly: specialized, ..unit() }),
                    s => {
                        let m = u32::try_from(self.num_edges() / s as u64)
                            .map_err(|_| Error::CapabilityExceeded("edge count exceeds u32".into()))?;
                        subdivided_univariate(&specialized, m, s)
                    }
                }
            }
        }
    }

    /// The integer polynomial, dropping any rational scalar (it does not
    /// affect the zeros).
    pub fn integer_polynomial(&self) -> Result<Poly<BigInt>> {
        Ok(self.polynomial()?.poly)
    }
}
