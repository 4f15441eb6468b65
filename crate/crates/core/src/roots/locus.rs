//! Root loci of two-class polynomials.
//!
//! One variable is swept around the circle `|λ + x| = λ`, i.e.
//! `x = λ(-1 + e^{iθ})`, and the roots of the other variable are followed.
//! Roots landing strictly inside the corresponding disc are flagged.

use std::fmt;
use std::io::Write;

use num_bigint::BigInt;
use num_complex::Complex;
use rayon::prelude::*;

use super::{find_roots_complex, RootSet};
use crate::error::{Error, Result};
use crate::poly::{BiPoly, Poly};
use crate::scalar::{ComplexExt, MpReal};

/// The variable that is swept around its circle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sweep {
    A,
    B,
}

impl Sweep {
    pub fn name(self) -> &'static str {
        match self {
            Sweep::A => "a",
            Sweep::B => "b",
        }
    }
}

impl std::str::FromStr for Sweep {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "a" | "A" => Ok(Sweep::A),
            "b" | "B" => Ok(Sweep::B),
            _ => Err(Error::InvalidArgument(format!("sweep must be 'a' or 'b', got '{s}'"))),
        }
    }
}

/// Plane in which a violation region lives.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Plane {
    A,
    B,
}

impl fmt::Display for Plane {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Plane::A => "a-plane",
            Plane::B => "b-plane",
        })
    }
}

/// Roots of the free variable along a uniform open grid of angles.
#[derive(Debug, Clone)]
pub struct LocusCurve {
    pub lambda: f64,
    pub sweep: Sweep,
    /// `θ_k = 2πk/(n+1)`, `k = 1..n`.
    pub theta_samples: Vec<f64>,
    /// Roots at each sample; empty at gaps.
    pub points: Vec<Vec<Complex<f64>>>,
    /// `|λ + root| < λ` for each point.
    pub violation_flags: Vec<Vec<bool>>,
    /// Samples where the collapsed polynomial vanished or dropped degree.
    pub gaps: Vec<usize>,
}

impl LocusCurve {
    pub fn violation_count(&self) -> usize {
        self.violation_flags.iter().flatten().filter(|&&f| f).count()
    }

    pub fn point_count(&self) -> usize {
        self.points.iter().map(Vec::len).sum()
    }

    /// Flagged points as `(θ, root)`.
    pub fn violations(&self) -> Vec<(f64, Complex<f64>)> {
        let mut out = Vec::new();
        for (i, (pts, flags)) in self.points.iter().zip(&self.violation_flags).enumerate() {
            for (z, &f) in pts.iter().zip(flags) {
                if f {
                    out.push((self.theta_samples[i], *z));
                }
            }
        }
        out
    }

    /// CSV with header `theta,re,im,violation`; one row per root.
    pub fn write_csv<W: Write>(&self, mut w: W) -> std::io::Result<()> {
        writeln!(w, "theta,re,im,violation")?;
        for (i, (pts, flags)) in self.points.iter().zip(&self.violation_flags).enumerate() {
            let theta = format!("{:.11e}", self.theta_samples[i]);
            for (z, &f) in pts.iter().zip(flags) {
                writeln!(w, "{theta},{:e},{:e},{}", z.re, z.im, f as u8)?;
            }
        }
        Ok(())
    }

    pub fn to_csv(&self) -> String {
        let mut buf = Vec::new();
        self.write_csv(&mut buf).expect("write to memory");
        String::from_utf8(buf).expect("ascii")
    }
}

fn collapse(p: &BiPoly<BigInt>, sweep: Sweep, x: &Complex<f64>) -> Poly<Complex<f64>> {
    match sweep {
        Sweep::B => p.collapse_in_a(x),
        Sweep::A => p.collapse_in_b(x),
    }
}

fn free_degree(p: &BiPoly<BigInt>, sweep: Sweep) -> u32 {
    match sweep {
        Sweep::B => p.degree_a().unwrap_or(0),
        Sweep::A => p.degree_b().unwrap_or(0),
    }
}

/// Roots of the free variable with the swept variable fixed at `x`, or
/// `None` if the collapsed polynomial is zero or loses its leading term.
pub fn locus_roots_at(p: &BiPoly<BigInt>, sweep: Sweep, x: Complex<f64>) -> Option<RootSet<f64>> {
    let q = collapse(p, sweep, &x);
    let expected = free_degree(p, sweep) as usize;
    if q.degree() != Some(expected) {
        return None;
    }
    let scale = q.coeffs().iter().map(|c| c.norm()).fold(0.0, f64::max);
    if q.leading().is_none_or(|c| c.norm() <= 1e-13 * scale) {
        return None;
    }
    match find_roots_complex(&q, 53, None) {
        Ok(rs) => Some(rs),
        Err(_) => {
            // fall back to a slower, more patient iteration
            let qm: Poly<Complex<MpReal>> = q.map(|c| Complex::<MpReal>::from_f64_prec(c.re, c.im, 128));
            let rs = find_roots_complex(&qm, 128, None).ok()?;
            Some(RootSet {
                zero_multiplicity: rs.zero_multiplicity,
                roots: rs.roots_c64(),
                error_radii: rs.error_radii.iter().map(crate::scalar::Real::to_f64).collect(),
                precision: 53,
            })
        }
    }
}

fn all_roots(rs: &RootSet<f64>) -> Vec<Complex<f64>> {
    let mut v = vec![Complex::new(0.0, 0.0); rs.zero_multiplicity];
    v.extend(rs.roots.iter().copied());
    v
}

/// Sweeps `x = λ(-1 + e^{iθ})` over `n_samples` angles in `(0, 2π)` and
/// flags free-variable roots with `|λ + root| < λ`.
pub fn trace_locus(p: &BiPoly<BigInt>, sweep: Sweep, lambda: f64, n_samples: usize) -> Result<LocusCurve> {
    if n_samples < 16 {
        return Err(Error::InvalidArgument(format!("need at least 16 samples, got {n_samples}")));
    }
    if !(lambda.is_finite() && lambda > 0.0) {
        return Err(Error::InvalidArgument(format!("lambda must be positive and finite, got {lambda}")));
    }
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let step = 2.0 * std::f64::consts::PI / (n_samples as f64 + 1.0);
    let theta_samples: Vec<f64> = (1..=n_samples).map(|k| k as f64 * step).collect();
    let samples: Vec<Option<Vec<Complex<f64>>>> = theta_samples
        .par_iter()
        .map(|&t| {
            let x = Complex::new(lambda * (t.cos() - 1.0), lambda * t.sin());
            locus_roots_at(p, sweep, x).map(|rs| all_roots(&rs))
        })
        .collect();
    let mut points = Vec::with_capacity(n_samples);
    let mut violation_flags = Vec::with_capacity(n_samples);
    let mut gaps = Vec::new();
    for (i, s) in samples.into_iter().enumerate() {
        match s {
            Some(pts) => {
                violation_flags.push(pts.iter().map(|z| (z + lambda).norm() < lambda).collect());
                points.push(pts);
            }
            None => {
                gaps.push(i);
                points.push(Vec::new());
                violation_flags.push(Vec::new());
            }
        }
    }
    Ok(LocusCurve { lambda, sweep, theta_samples, points, violation_flags, gaps })
}

/// Endpoint `-1 + e^{±2πi·angle_fraction}` of a violation region on the unit circle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RegionEndpoint {
    pub plane: Plane,
    pub angle_fraction: f64,
}

/// Number of grid points in the coarse scan of `(0, π)`.
pub const ENDPOINT_SCAN_SAMPLES: usize = 1024;

/// Bisection stops once the bracket is below this fraction of a full turn.
const ENDPOINT_TOLERANCE: f64 = 1e-9;

/// `min |1 + y| - 1` over the nonzero roots `y` of the other variable when
/// the variable of `plane` sits at `-1 + e^{iθ}`.
fn endpoint_indicator(p: &BiPoly<BigInt>, plane: Plane, theta: f64) -> Option<f64> {
    let sweep = match plane {
        Plane::A => Sweep::A,
        Plane::B => Sweep::B,
    };
    let x = Complex::new(theta.cos() - 1.0, theta.sin());
    let rs = locus_roots_at(p, sweep, x)?;
    rs.roots.iter().map(|y| (y + 1.0).norm() - 1.0).min_by(f64::total_cmp)
}

/// Locates the endpoint of the region of `plane` where the other variable
/// has a root inside its unit disc: the first angle in `(0, π)` where the
/// indicator turns from negative to nonnegative, refined by bisection.
pub fn region_endpoint_angle(p: &BiPoly<BigInt>, plane: Plane) -> Result<RegionEndpoint> {
    let n = ENDPOINT_SCAN_SAMPLES;
    let step = std::f64::consts::PI / (n as f64 + 1.0);
    let values: Vec<(f64, Option<f64>)> = (1..=n)
        .into_par_iter()
        .map(|k| {
            let t = k as f64 * step;
            (t, endpoint_indicator(p, plane, t))
        })
        .collect();
    let mut prev: Option<(f64, f64)> = None;
    let mut bracket = None;
    for (t, v) in values {
        let Some(v) = v else { continue };
        if let Some((pt, pv)) = prev {
            if pv < 0.0 && v >= 0.0 {
                bracket = Some((pt, t));
                break;
            }
        }
        prev = Some((t, v));
    }
    let (mut lo, mut hi) = bracket.ok_or(Error::NoViolationRegion)?;
    let two_pi = 2.0 * std::f64::consts::PI;
    while (hi - lo) / two_pi > ENDPOINT_TOLERANCE {
        let mid = 0.5 * (lo + hi);
        match endpoint_indicator(p, plane, mid) {
            Some(v) if v < 0.0 => lo = mid,
            Some(_) => hi = mid,
            None => break,
        }
    }
    Ok(RegionEndpoint { plane, angle_fraction: 0.5 * (lo + hi) / two_pi })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multigraph::{k4_two_class, K4Case};
    use crate::reliability::two_class_poly;

    fn case(c: K4Case) -> BiPoly<BigInt> {
        two_class_poly(&k4_two_class(c), 0).unwrap()
    }

    #[test]
    fn grid_is_open_and_increasing() {
        let l = trace_locus(&case(K4Case::A), Sweep::B, 1.0, 16).unwrap();
        assert_eq!(l.theta_samples.len(), 16);
        assert!(l.theta_samples[0] > 0.0 && *l.theta_samples.last().unwrap() < 2.0 * std::f64::consts::PI);
        assert!(l.theta_samples.windows(2).all(|w| w[0] < w[1]));
        assert!(trace_locus(&case(K4Case::A), Sweep::B, 1.0, 8).is_err());
    }

    #[test]
    fn case_b_enters_the_disc_and_case_a_does_not() {
        let b = trace_locus(&case(K4Case::B), Sweep::B, 1.0, 2000).unwrap();
        assert!(b.violation_count() > 0);
        let a = trace_locus(&case(K4Case::A), Sweep::B, 1.0, 2000).unwrap();
        assert_eq!(a.violation_count(), 0);
    }

    #[test]
    fn csv_layout() {
        let l = trace_locus(&case(K4Case::B), Sweep::B, 1.0, 16).unwrap();
        let csv = l.to_csv();
        let mut lines = csv.lines();
        assert_eq!(lines.next(), Some("theta,re,im,violation"));
        let row: Vec<&str> = lines.next().unwrap().split(',').collect();
        assert_eq!(row.len(), 4);
        assert_eq!(row[0], "3.69599135716e-1");
        assert_eq!(csv.lines().count(), 1 + l.point_count());
    }

    #[test]
    fn degenerate_sample_is_a_gap() {
        // the a^2 coefficient (1+b)^4 - 1 vanishes at b = -1 + i
        let r = locus_roots_at(&case(K4Case::B), Sweep::B, Complex::new(-1.0, 1.0));
        assert!(r.is_none());
    }

    #[test]
    fn endpoints_for_case_b() {
        let alpha = region_endpoint_angle(&case(K4Case::B), Plane::A).unwrap();
        assert!((alpha.angle_fraction - 0.120692).abs() < 1e-5, "{alpha:?}");
        assert!(matches!(region_endpoint_angle(&case(K4Case::A), Plane::A), Err(Error::NoViolationRegion)));
    }
}
