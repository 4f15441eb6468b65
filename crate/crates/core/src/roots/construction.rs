//! From a zero outside the disc to a simple planar counterexample.
//!
//! Replacing every edge of `G` by `k` parallel edges sends a zero `v₁` of
//! `C_G` to the zeros `v_k = -1 + (1 + v₁)^{1/k}` of the expanded graph;
//! those points spiral into `v = 0`, so some `v_k` eventually lands in the
//! disc `|1/s + v| < 1/s`, after which subdividing every edge into `s`
//! pieces yields a zero with `|1 + v| < 1`.

use num_complex::Complex;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::multigraph::{is_series_parallel, Multigraph};
use crate::scalar::{ComplexExt, MpReal, Real};

pub const DEFAULT_K_MAX: u32 = 10_000;

/// `-1 + (1 + v₁)^{1/k}` on the principal branch, `arg(1 + v₁) ∈ (-π, π]`.
pub fn kth_root_branch(v1: &Complex<MpReal>, k: u32) -> Result<Complex<MpReal>> {
    if k == 0 {
        return Err(Error::InvalidArgument("k must be positive".into()));
    }
    let bits = v1.precision();
    let one = MpReal::from_f64_prec(1.0, bits);
    let w = Complex::new(v1.re.clone() + one.clone(), v1.im.clone());
    if w.re.is_zero() && w.im.is_zero() {
        return Err(Error::InvalidArgument("v1 = -1 has no k-th root branch".into()));
    }
    if k == 1 {
        return Ok(v1.clone());
    }
    let kk = MpReal::from_f64_prec(k as f64, bits);
    let r = (w.modulus().ln() / kk.clone()).exp();
    let phi = w.arg() / kk;
    let root = <Complex<MpReal> as ComplexExt<MpReal>>::from_polar(&r, &phi);
    Ok(Complex::new(root.re - one, root.im))
}

/// Smallest `k ≤ k_max` with `|1/s + v_k| < 1/s`.
pub fn find_minimal_k(v1: &Complex<MpReal>, s: u32, k_max: u32) -> Result<u32> {
    if s == 0 {
        return Err(Error::InvalidArgument("s must be positive".into()));
    }
    let bits = v1.precision();
    let inv_s = MpReal::from_f64_prec(1.0, bits) / MpReal::from_f64_prec(s as f64, bits);
    for k in 1..=k_max {
        let vk = kth_root_branch(v1, k)?;
        let d = Complex::new(vk.re + inv_s.clone(), vk.im).modulus();
        if d < inv_s {
            return Ok(k);
        }
    }
    Err(Error::NoSuitableK { k_max })
}

/// Whether `G` has the multivariate disc property for `λ = 1`; by the
/// series-parallel characterisation this is exactly series-parallelness of
/// `G` with its loops removed.
pub fn multivariate_bc_property(g: &Multigraph) -> Result<bool> {
    let g = g.without_loops();
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(is_series_parallel(&g))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multigraph::*;

    fn point(re: f64, im: f64) -> Complex<MpReal> {
        Complex::<MpReal>::from_f64_prec(re, im, 256)
    }

    #[test]
    fn identity_for_k_one() {
        let v = point(-0.3, 0.4);
        assert_eq!(kth_root_branch(&v, 1).unwrap(), v);
        assert!(kth_root_branch(&point(-1.0, 0.0), 3).is_err());
    }

    #[test]
    fn roots_recover_power() {
        let v = point(-0.14, 0.5);
        let v7 = kth_root_branch(&v, 7).unwrap().to_c64();
        let back = (v7 + 1.0).powu(7) - 1.0;
        assert!((back - v.to_c64()).norm() < 1e-13);
        // principal branch: small argument
        assert!((v7 + 1.0).arg().abs() <= std::f64::consts::PI / 7.0);
    }

    #[test]
    fn already_inside_needs_k_one() {
        let v = point(-0.3, 0.1);
        assert_eq!(find_minimal_k(&v, 2, 10).unwrap(), 1);
    }

    #[test]
    fn none_found_reports_bound() {
        let v = point(1.0, 0.0);
        assert_eq!(find_minimal_k(&v, 2, 5), Err(Error::NoSuitableK { k_max: 5 }));
    }

    #[test]
    fn multivariate_property_examples() {
        assert!(!multivariate_bc_property(&complete_graph(4).unwrap()).unwrap());
        let tree = Multigraph::new(4, vec![Edge::new(0, 1, 0), Edge::new(1, 2, 0), Edge::new(1, 3, 0)]).unwrap();
        assert!(multivariate_bc_property(&tree).unwrap());
        let k4 = complete_graph(4).unwrap();
        let sub = subdivide(&k4, &SubdivisionVector::uniform(6, 3).unwrap()).unwrap();
        assert!(!multivariate_bc_property(&sub).unwrap());
        assert!(multivariate_bc_property(&Multigraph::empty(2)).is_err());
        let looped = Multigraph::new(1, vec![Edge::new(0, 0, 0)]).unwrap();
        assert!(multivariate_bc_property(&looped).unwrap());
    }
}
