//! Zeros of `C_G` and the analysis built on them.
//!
//! * [`find_roots`]: Aberth–Ehrlich root isolation with exact deflation of
//!   the root at zero and automatic precision escalation.
//! * [`disc`]: distances to the disc `|λ + v| < λ`, the decision
//!   procedure for the univariate property and `λ★`.
//! * [`locus`]: root loci of two-class polynomials as one variable sweeps
//!   a circle, and endpoints of the violation regions.
//! * [`branch`]: small-`b` expansions of root branches `a(b)`.
//! * [`construction`]: the `k`-th root construction and the multivariate
//!   decision procedure.

mod aberth;
pub mod branch;
pub mod construction;
pub mod disc;
pub mod locus;

pub use aberth::MAX_SWEEPS;
pub use branch::{estimate_branch_coefficients, BranchExpansion, BranchKind};
pub use construction::{find_minimal_k, kth_root_branch, multivariate_bc_property, DEFAULT_K_MAX};
pub use disc::{
    bc_lambda_holds_univariate, classify_disc, lambda_star_univariate, min_disc_distance, DiscReport,
};
pub use locus::{locus_roots_at, region_endpoint_angle, trace_locus, LocusCurve, Plane, RegionEndpoint, Sweep};

use num_bigint::BigInt;
use num_complex::Complex;
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::{Poly, ToReal};
use crate::scalar::{ComplexExt, MpReal, Real, MIN_PRECISION};

/// Precision used when a low request meets a hard polynomial.
pub const ESCALATED_PRECISION: u32 = 256;

/// Degree above which low-precision requests are escalated.
const ESCALATE_DEGREE: usize = 50;

/// Coefficient magnitude above which low-precision requests are escalated.
const ESCALATE_COEFF: f64 = 1e15;

/// Roots of a polynomial: the multiplicity of `v = 0` (removed exactly) and
/// approximations to every other root with a-posteriori error radii.
#[derive(Debug, Clone, PartialEq)]
pub struct RootSet<R = MpReal> {
    pub zero_multiplicity: usize,
    pub roots: Vec<Complex<R>>,
    pub error_radii: Vec<R>,
    /// Binary precision of the final iteration.
    pub precision: u32,
}

impl<R: Real> RootSet<R> {
    pub fn degree(&self) -> usize {
        self.zero_multiplicity + self.roots.len()
    }

    pub fn roots_c64(&self) -> Vec<Complex<f64>> {
        self.roots.iter().map(ComplexExt::to_c64).collect()
    }

    /// Sum of all roots, the zero root contributing nothing.
    pub fn root_sum(&self) -> Complex<R> {
        let zero = Complex::new(R::from_f64_prec(0.0, self.precision), R::from_f64_prec(0.0, self.precision));
        self.roots.iter().fold(zero, |acc, z| acc + z.clone())
    }

    /// Index of the root nearest `target`.
    pub fn nearest(&self, target: Complex<f64>) -> Option<usize> {
        self.roots_c64()
            .iter()
            .enumerate()
            .min_by(|a, b| (a.1 - target).norm().total_cmp(&(b.1 - target).norm()))
            .map(|(i, _)| i)
    }

    /// True when each root's conjugate lies within the two roots' combined error radii of some root.
    pub fn is_conjugate_closed(&self) -> bool {
        self.roots.iter().zip(&self.error_radii).all(|(z, r)| {
            let conj = z.conj();
            self.roots.iter().zip(&self.error_radii).any(|(w, s)| {
                let d = Complex::new(w.re.clone() - conj.re.clone(), w.im.clone() - conj.im.clone()).modulus();
                d <= r.clone() + s.clone() || d.to_f64() <= 1e-25 * (1.0 + z.modulus().to_f64())
            })
        })
    }

    /// `{"zero_multiplicity":n,"roots":[{"re":"..","im":"..","err":".."},...]}`.
    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct RootJson {
            re: String,
            im: String,
            err: String,
        }
        #[derive(Serialize)]
        struct SetJson {
            zero_multiplicity: usize,
            roots: Vec<RootJson>,
        }
        let roots = self
            .roots
            .iter()
            .zip(&self.error_radii)
            .map(|(z, e)| RootJson {
                re: z.re.to_decimal(),
                im: z.im.to_decimal(),
                err: if e.is_finite() { format!("{:e}", e.to_f64()) } else { "inf".into() },
            })
            .collect();
        serde_json::to_string(&SetJson { zero_multiplicity: self.zero_multiplicity, roots }).expect("serializable")
    }
}

/// Working precision after applying the escalation rule.
pub fn effective_precision(p: &Poly<BigInt>, bits: u32) -> u32 {
    let bits = bits.max(MIN_PRECISION);
    let big = p.max_abs_coeff().to_f64().unwrap_or(f64::INFINITY) > ESCALATE_COEFF;
    if bits <= 53 && (p.degree().unwrap_or(0) > ESCALATE_DEGREE || big) {
        ESCALATED_PRECISION
    } else {
        bits
    }
}

/// Limit on how far `find_roots` raises its working precision, as a
/// multiple of the requested precision.
const POLISH_FACTOR: u32 = 4;

/// Whether every error radius is within `2^{-(bits-10)} (1 + |z|)`.
fn meets_target(rs: &RootSet<MpReal>, bits: u32) -> bool {
    let tol = MpReal::unit_roundoff(bits.saturating_sub(10));
    let one = MpReal::from_f64_prec(1.0, rs.precision);
    rs.roots.iter().zip(&rs.error_radii).all(|(z, r)| r.clone() <= tol.clone() * (one.clone() + z.modulus()))
}

/// Ill-conditioned polynomials (huge coefficients, roots near each other)
/// lose accuracy in the rounding floor; polish with exact coefficients at
/// doubled working precision until the requested accuracy is met.
/// Multiple roots never meet it; a refinement that fails to converge
/// leaves the last result in place.
fn polish(p: &Poly<BigInt>, mut rs: RootSet<MpReal>, bits: u32) -> Result<RootSet<MpReal>> {
    let mut work = rs.precision;
    while !meets_target(&rs, bits) && work < POLISH_FACTOR * bits {
        work *= 2;
        match find_roots_with::<MpReal, BigInt>(p, work, Some(&rs.roots)) {
            Ok(next) => rs = next,
            Err(Error::NoConvergence { .. }) => break,
            Err(e) => return Err(e),
        }
    }
    Ok(rs)
}

/// All roots of an integer polynomial to roughly `bits` of accuracy
/// (escalated for high degree or large coefficients). The returned
/// `precision` is the working precision actually used.
pub fn find_roots(p: &Poly<BigInt>, bits: u32) -> Result<RootSet<MpReal>> {
    let bits = effective_precision(p, bits);
    let rs = find_roots_with::<MpReal, BigInt>(p, bits, None)?;
    polish(p, rs, bits)
}

/// Refines a previous root set of the same polynomial at higher precision.
pub fn refine_roots(p: &Poly<BigInt>, previous: &RootSet<MpReal>, bits: u32) -> Result<RootSet<MpReal>> {
    let rs = find_roots_with::<MpReal, BigInt>(p, bits, Some(&previous.roots))?;
    polish(p, rs, bits)
}

/// All roots with coefficients of any exactly convertible type.
pub fn find_roots_with<R: Real, C: Clone + num_traits::Num + ToReal>(
    p: &Poly<C>,
    bits: u32,
    init: Option<&[Complex<R>]>,
) -> Result<RootSet<R>> {
    find_roots_complex(&p.to_complex::<R>(bits.max(MIN_PRECISION)), bits, init)
}

/// All roots of a complex-coefficient polynomial. Exactly zero low-order
/// coefficients are stripped and counted as the zero root.
pub fn find_roots_complex<R: Real>(
    p: &Poly<Complex<R>>,
    bits: u32,
    init: Option<&[Complex<R>]>,
) -> Result<RootSet<R>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let (zero_multiplicity, rest) = p.deflate_zero_roots();
    let bits = bits.max(MIN_PRECISION);
    if rest.degree() == Some(0) {
        return Ok(RootSet { zero_multiplicity, roots: Vec::new(), error_radii: Vec::new(), precision: bits });
    }
    let out = aberth::aberth(rest.coeffs(), bits, init);
    if !out.converged {
        return Err(Error::NoConvergence {
            sweeps: out.sweeps,
            partial: out.roots.iter().map(|z| (z.re.to_f64(), z.im.to_f64())).collect(),
        });
    }
    Ok(RootSet { zero_multiplicity, roots: out.roots, error_radii: out.radii, precision: bits })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::int_poly;

    #[test]
    fn plus_minus_i() {
        let rs = find_roots(&int_poly(&[1, 0, 1]), 128).unwrap();
        assert_eq!(rs.zero_multiplicity, 0);
        let mut r = rs.roots_c64();
        r.sort_by(|a, b| a.im.total_cmp(&b.im));
        assert!((r[0] - Complex::new(0.0, -1.0)).norm() < 1e-30);
        assert!((r[1] - Complex::new(0.0, 1.0)).norm() < 1e-30);
    }

    #[test]
    fn k4_roots_lie_outside_unit_disc_around_minus_one() {
        let rs = find_roots(&int_poly(&[0, 0, 0, 16, 15, 6, 1]), 256).unwrap();
        assert_eq!(rs.zero_multiplicity, 3);
        assert_eq!(rs.roots.len(), 3);
        for z in rs.roots_c64() {
            assert!((z + 1.0).norm() > 1.0);
        }
        assert!(rs.is_conjugate_closed());
    }

    #[test]
    fn zero_polynomial_rejected() {
        assert_eq!(find_roots(&Poly::zero(), 64), Err(Error::ZeroPolynomial));
        let c = find_roots(&int_poly(&[0, 0, 5]), 64).unwrap();
        assert_eq!((c.zero_multiplicity, c.roots.len()), (2, 0));
    }

    #[test]
    fn escalation_rule() {
        let small = int_poly(&[1, 2, 3]);
        assert_eq!(effective_precision(&small, 53), 53);
        let big = Poly::new(vec![BigInt::from(10).pow(16), BigInt::from(1)]);
        assert_eq!(effective_precision(&big, 53), ESCALATED_PRECISION);
        let long = Poly::new(vec![BigInt::from(1); 60]);
        assert_eq!(effective_precision(&long, 53), ESCALATED_PRECISION);
        assert_eq!(effective_precision(&long, 128), 128);
    }

    #[test]
    fn refinement_keeps_roots() {
        let p = int_poly(&[3, -1, 4, 1, -5, 9]);
        let lo = find_roots(&p, 128).unwrap();
        let hi = refine_roots(&p, &lo, 512).unwrap();
        assert_eq!(hi.precision, 512);
        for z in lo.roots_c64() {
            let j = hi.nearest(z).unwrap();
            assert!((hi.roots_c64()[j] - z).norm() < 1e-30);
        }
    }

    #[test]
    fn ill_conditioned_roots_are_polished() {
        // (3v - 1)(3A v - A - 3), A = 10^20: simple roots 10^-20 apart
        let a = BigInt::from(10).pow(20);
        let second: Poly<BigInt> = Poly::new(vec![-(&a + BigInt::from(3)), &a * BigInt::from(3)]);
        let p = &int_poly(&[-1, 3]) * &second;
        let rs = find_roots(&p, 128).unwrap();
        assert!(rs.precision > 128);
        assert!(meets_target(&rs, 128));
        let at256 = find_roots(&p, 256).unwrap();
        for z in rs.roots_c64() {
            assert!((at256.roots_c64()[at256.nearest(z).unwrap()] - z).norm() < 1e-30);
        }
    }

    #[test]
    fn json_shape() {
        let rs = find_roots(&int_poly(&[0, 0, 0, 16, 15, 6, 1]), 128).unwrap();
        let v: serde_json::Value = serde_json::from_str(&rs.to_json()).unwrap();
        assert_eq!(v["zero_multiplicity"], 3);
        assert_eq!(v["roots"].as_array().unwrap().len(), 3);
        assert!(v["roots"][0]["re"].is_string());
    }
}
