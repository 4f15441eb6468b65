//! Reliability and connected-spanning-subgraph polynomials of multigraphs,
//! their complex zeros, and the tools to study where those zeros sit relative
//! to the disc `|1 + v| < 1`.
//!
//! The crate is organised bottom-up:
//!
//! * [`multigraph`]: class-labelled multigraphs, parallel expansion,
//!   subdivision, series-parallel recognition.
//! * [`poly`]: exact univariate and bivariate polynomials.
//! * [`reliability`]: exact enumeration of `C_G`, conversion to and from the
//!   reliability polynomial, series and parallel reductions.
//! * [`roots`]: multiprecision root isolation, disc tests, root loci and the
//!   construction of graphs with zeros inside the disc.
//! * [`family`] and [`reproduce`]: named graph families and reference tables.

pub mod error;
pub mod family;
pub mod multigraph;
pub mod poly;
pub mod reliability;
pub mod reproduce;
pub mod roots;
pub mod scalar;

pub use error::{Error, Result};
pub use family::FamilySpec;
pub use multigraph::Multigraph;
pub use poly::{BiPoly, Poly};
pub use scalar::{ComplexExt, MpReal, Real};

pub use num_bigint::BigInt;
pub use num_complex::Complex;
pub use num_rational::BigRational;

/// Univariate polynomial with exact integer coefficients.
pub type ExactUniPoly = Poly<BigInt>;
/// Bivariate polynomial in `a`, `b` with exact integer coefficients.
pub type ExactBiPoly = BiPoly<BigInt>;
/// Univariate polynomial with exact rational coefficients.
pub type RationalPoly = Poly<BigRational>;
/// Complex number at a runtime-chosen binary precision.
pub type ComplexPoint = Complex<MpReal>;
pub type Complex64 = Complex<f64>;
