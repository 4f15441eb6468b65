//! Aberth–Ehrlich simultaneous iteration.

use num_complex::Complex;
use num_traits::Zero;

use crate::scalar::{ComplexExt, Real};

pub const MAX_SWEEPS: usize = 500;

/// Angular offset of the starting points, in radians before division by `n`.
const START_OFFSET: f64 = 0.7;

pub(crate) struct AberthOutcome<R> {
    pub roots: Vec<Complex<R>>,
    pub radii: Vec<R>,
    pub converged: bool,
    pub sweeps: usize,
}

/// Precomputed coefficient data at working precision.
pub(crate) struct Prepared<R> {
    pub coeffs: Vec<Complex<R>>,
    abs: Vec<R>,
    pub bits: u32,
}

impl<R: Real> Prepared<R> {
    pub fn new(coeffs: &[Complex<R>], bits: u32) -> Self {
        let coeffs: Vec<_> = coeffs.iter().map(|c| c.to_precision(bits)).collect();
        let abs = coeffs.iter().map(ComplexExt::modulus).collect();
        Prepared { coeffs, abs, bits }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    fn zero(&self) -> Complex<R> {
        Complex::new(R::from_f64_prec(0.0, self.bits), R::from_f64_prec(0.0, self.bits))
    }

    /// `p(z)`, `p'(z)` and `sum |c_k| |z|^k`.
    pub fn eval(&self, z: &Complex<R>) -> (Complex<R>, Complex<R>, R) {
        let n = self.coeffs.len();
        let mut p = self.coeffs[n - 1].clone();
        let mut dp = self.zero();
        let az = z.modulus();
        let mut s = self.abs[n - 1].clone();
        for k in (0..n - 1).rev() {
            dp = dp * z.clone() + p.clone();
            p = p * z.clone() + self.coeffs[k].clone();
            s = s * az.clone() + self.abs[k].clone();
        }
        (p, dp, s)
    }

    /// Magnitude below which `|p(z)|` is indistinguishable from rounding noise.
    pub fn rounding_floor(&self, abs_sum: R) -> R {
        let n = self.degree().max(1) as f64;
        abs_sum * R::unit_roundoff(self.bits) * R::from_f64_prec(4.0 * n, self.bits)
    }

    /// A-posteriori inclusion radius `n max(|p|, floor) / |p'|`; infinite when `p' = 0`.
    pub fn error_radius(&self, z: &Complex<R>) -> R {
        let (p, dp, s) = self.eval(z);
        let dpm = dp.modulus();
        if dpm.is_zero() {
            return R::from_f64_prec(f64::INFINITY, self.bits);
        }
        let num = R::max_of(p.modulus(), self.rounding_floor(s));
        R::from_f64_prec(self.degree() as f64, self.bits) * num / dpm
    }
}

fn initial_points<R: Real>(prep: &Prepared<R>) -> Vec<Complex<R>> {
    let n = prep.degree();
    let bits = prep.bits;
    let c0 = prep.coeffs[0].modulus();
    let cn = prep.coeffs[n].modulus();
    let radius = ((c0 / cn).ln() / R::from_f64_prec(n as f64, bits)).exp();
    let two_pi = R::pi(bits) * R::from_f64_prec(2.0, bits);
    (0..n)
        .map(|k| {
            let angle = (two_pi.clone() * R::from_f64_prec(k as f64, bits) + R::from_f64_prec(START_OFFSET, bits))
                / R::from_f64_prec(n as f64, bits);
            <Complex<R> as ComplexExt<R>>::from_polar(&radius, &angle)
        })
        .collect()
}

/// Runs the iteration on `coeffs` (lowest degree first, nonzero constant
/// term, degree at least one). `init` supplies warm-start approximations.
pub(crate) fn aberth<R: Real>(coeffs: &[Complex<R>], bits: u32, init: Option<&[Complex<R>]>) -> AberthOutcome<R> {
    let prep = Prepared::new(coeffs, bits);
    let n = prep.degree();
    let mut z: Vec<Complex<R>> = match init {
        Some(pts) if pts.len() == n => pts.iter().map(|p| p.to_precision(bits)).collect(),
        _ => initial_points(&prep),
    };
    let one = Complex::new(R::from_f64_prec(1.0, bits), R::from_f64_prec(0.0, bits));
    let tol = R::unit_roundoff(bits.saturating_sub(10));
    let mut done = vec![false; n];
    let mut sweeps = 0;
    let mut converged = false;

    while sweeps < MAX_SWEEPS {
        sweeps += 1;
        for i in 0..n {
            if done[i] {
                continue;
            }
            let (p, dp, s) = prep.eval(&z[i]);
            if p.modulus() <= prep.rounding_floor(s) {
                done[i] = true;
                continue;
            }
            if dp.is_zero() {
                // nudge off a critical point
                let eps = R::from_f64_prec(1e-3, bits) * (R::from_f64_prec(1.0, bits) + z[i].modulus());
                z[i] = z[i].clone() + Complex::new(eps.clone(), eps);
                continue;
            }
            let newton = p / dp;
            let mut repulsion = Complex::new(R::from_f64_prec(0.0, bits), R::from_f64_prec(0.0, bits));
            for (j, zj) in z.iter().enumerate() {
                if j != i {
                    let d = z[i].clone() - zj.clone();
                    if !d.is_zero() {
                        repulsion = repulsion + one.clone() / d;
                    }
                }
            }
            let denom = one.clone() - newton.clone() * repulsion;
            let delta = if denom.is_zero() { newton } else { newton / denom };
            let step = delta.modulus();
            z[i] = z[i].clone() - delta;
            if step <= tol.clone() * (R::from_f64_prec(1.0, bits) + z[i].modulus()) {
                done[i] = true;
            }
        }
        if done.iter().all(|&d| d) {
            converged = true;
            break;
        }
    }
    let radii = z.iter().map(|zi| prep.error_radius(zi)).collect();
    AberthOutcome { roots: z, radii, converged, sweeps }
}
