//! Expansions of the root branches `a(b)` that pass through `a = 0` as
//! `b → 0`.
//!
//! Each branch is either analytic, `a = γ₁b + γ₂b² + …`, or comes in a pair
//! `a = δ₁b ± δ₂b^{3/2} + …`. The kind is read off from how fast `a/b`
//! settles over `b ∈ {10⁻³, 10⁻⁴, 10⁻⁵}`.

use num_bigint::BigInt;
use num_complex::Complex;

use super::find_roots_complex;
use crate::error::{Error, Result};
use crate::poly::BiPoly;
use crate::scalar::{ComplexExt, MpReal};

const SAMPLE_B: [f64; 3] = [1e-3, 1e-4, 1e-5];
const WORK_BITS: u32 = 256;

/// Exponents closer than this to the midpoint of 1.5 and 2 are rejected.
const EXPONENT_MARGIN: f64 = 0.1;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BranchKind {
    /// `a = γ₁b + γ₂b² + …`
    Analytic,
    /// `a = δ₁b + δ₂b^{3/2} + …`
    HalfPower,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BranchExpansion {
    pub kind: BranchKind,
    /// `γ₁` or `δ₁`.
    pub leading: Complex<f64>,
    /// `γ₂` or `δ₂`.
    pub subleading: Complex<f64>,
    /// Estimated power of `b` in the first correction to `a/b`, plus one.
    pub exponent: f64,
}

impl BranchExpansion {
    /// `γ₁² - γ₁ - 2γ₂`. For a real `γ₁` the branch keeps `a` outside the
    /// unit disc around `-1` for small `b` on the unit circle around `-1`
    /// exactly when the real part is positive.
    pub fn criterion(&self) -> Complex<f64> {
        let g1 = self.leading;
        g1 * g1 - g1 - 2.0 * self.subleading
    }
}

/// Nonzero `a`-roots with `|a| < √b` at real `b`, as ratios `a/b`.
fn small_ratios(p: &BiPoly<BigInt>, b: f64) -> Result<Vec<Complex<f64>>> {
    let bb = Complex::<MpReal>::from_f64_prec(b, 0.0, WORK_BITS);
    let q = p.collapse_in_a(&bb);
    if q.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let rs = find_roots_complex(&q, WORK_BITS, None)?;
    Ok(rs.roots_c64().into_iter().filter(|a| a.norm() < b.sqrt()).map(|a| a / b).collect())
}

fn nearest(points: &[Complex<f64>], target: Complex<f64>) -> usize {
    (0..points.len())
        .min_by(|&i, &j| (points[i] - target).norm().total_cmp(&(points[j] - target).norm()))
        .expect("nonempty")
}

/// Leading coefficients of every small-`a` branch of `p(a, b)`.
pub fn estimate_branch_coefficients(p: &BiPoly<BigInt>) -> Result<Vec<BranchExpansion>> {
    let ratios: Vec<Vec<Complex<f64>>> = SAMPLE_B.iter().map(|&b| small_ratios(p, b)).collect::<Result<_>>()?;
    let n = ratios[2].len();
    if ratios.iter().any(|r| r.len() != n) {
        let counts: Vec<usize> = ratios.iter().map(Vec::len).collect();
        return Err(Error::BranchLost(format!("small-root counts {counts:?} differ across samples")));
    }
    let [b1, b2, b3] = SAMPLE_B;
    // follow each branch from the smallest b outwards
    let tracks: Vec<[Complex<f64>; 3]> = ratios[2]
        .iter()
        .map(|&r3| {
            let r2 = ratios[1][nearest(&ratios[1], r3)];
            let r1 = ratios[0][nearest(&ratios[0], r2)];
            [r1, r2, r3]
        })
        .collect();

    let mut out = Vec::with_capacity(n);
    for (idx, &[r1, r2, r3]) in tracks.iter().enumerate() {
        let exponent = 1.0 + ((r1 - r2).norm() / (r2 - r3).norm()).log10();
        if !exponent.is_finite() || (exponent - 1.75).abs() < EXPONENT_MARGIN {
            return Err(Error::AmbiguousExponent(format!("estimated exponent {exponent:.3}")));
        }
        if exponent > 1.75 {
            // r(b) = γ₁ + γ₂b + γ₃b² through the three samples
            let d12 = (r1 - r2) / (b1 - b2);
            let d23 = (r2 - r3) / (b2 - b3);
            let g3 = (d12 - d23) / (b1 - b3);
            let g2 = d23 - g3 * (b2 + b3);
            let g1 = r3 - g2 * b3 - g3 * b3 * b3;
            out.push(BranchExpansion { kind: BranchKind::Analytic, leading: g1, subleading: g2, exponent });
        } else {
            let partner = |level: usize, own: Complex<f64>| -> Option<Complex<f64>> {
                ratios[level]
                    .iter()
                    .copied()
                    .filter(|&r| r != own)
                    .min_by(|x, y| (x - own).norm().total_cmp(&(y - own).norm()))
            };
            let own3 = r3;
            let Some(p3) = partner(2, own3) else { return Err(Error::BranchLost("half-power branch without partner".into())) };
            let d1 = (own3 + p3) / 2.0;
            let d2 = (own3 - p3) / (2.0 * b3.sqrt());
            // the middle sample must tell the same story
            let own2 = tracks[idx][1];
            let Some(p2) = partner(1, own2) else { return Err(Error::BranchLost("half-power branch without partner".into())) };
            let d1m = (own2 + p2) / 2.0;
            let d2m = (own2 - p2) / (2.0 * b2.sqrt());
            let scale = 1.0 + d1.norm() + d2.norm();
            if (d1 - d1m).norm() > 1e-2 * scale || (d2 - d2m).norm() > 1e-2 * scale {
                return Err(Error::BranchLost(format!("expansion of branch near {own3} unstable across samples")));
            }
            out.push(BranchExpansion { kind: BranchKind::HalfPower, leading: d1, subleading: d2, exponent });
        }
    }
    out.sort_by(|x, y| {
        (x.leading.re, x.leading.im, x.subleading.im).partial_cmp(&(y.leading.re, y.leading.im, y.subleading.im)).unwrap()
    });
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multigraph::{k4_two_class, K4Case};
    use crate::reliability::two_class_poly;

    fn branches(c: K4Case) -> Vec<BranchExpansion> {
        estimate_branch_coefficients(&two_class_poly(&k4_two_class(c), 0).unwrap()).unwrap()
    }

    #[test]
    fn synthetic_analytic_branch() {
        // a - 2b - 3b^2 = 0
        let p = BiPoly::from_terms([((1, 0), BigInt::from(1)), ((0, 1), BigInt::from(-2)), ((0, 2), BigInt::from(-3))]);
        let e = estimate_branch_coefficients(&p).unwrap();
        assert_eq!(e.len(), 1);
        assert_eq!(e[0].kind, BranchKind::Analytic);
        assert!((e[0].leading - Complex::new(2.0, 0.0)).norm() < 1e-9);
        assert!((e[0].subleading - Complex::new(3.0, 0.0)).norm() < 1e-6);
    }

    #[test]
    fn synthetic_half_power_pair() {
        // (a - b)^2 - 4b^3 = 0  =>  a = b ± 2 b^{3/2}
        let p = BiPoly::from_terms([
            ((2, 0), BigInt::from(1)),
            ((1, 1), BigInt::from(-2)),
            ((0, 2), BigInt::from(1)),
            ((0, 3), BigInt::from(-4)),
        ]);
        let e = estimate_branch_coefficients(&p).unwrap();
        assert_eq!(e.len(), 2);
        for x in &e {
            assert_eq!(x.kind, BranchKind::HalfPower);
            assert!((x.leading - Complex::new(1.0, 0.0)).norm() < 1e-4);
            assert!((x.subleading.norm() - 2.0).abs() < 1e-3);
        }
    }

    #[test]
    fn k4_cases_have_small_branches() {
        for c in [K4Case::B, K4Case::D] {
            let e = branches(c);
            assert!(!e.is_empty());
            assert!(e.iter().any(|x| x.kind == BranchKind::HalfPower), "{c:?}: {e:?}");
        }
        for c in [K4Case::A, K4Case::C, K4Case::E] {
            for x in branches(c) {
                if x.kind == BranchKind::Analytic && x.leading.im.abs() < 1e-6 {
                    assert!(x.criterion().re > -1e-6, "{c:?}: {x:?}");
                }
            }
        }
    }
}
