//! Position of zeros relative to the disc `|λ + v| < λ`.
//!
//! Numeric root approximations decide most roots outright. Roots whose
//! distance to the boundary circle is below their error radius are handled
//! by mapping the circle to `|w| = 1` with `v = λ(w - 1)` and splitting the
//! resulting integer polynomial exactly: `gcd(Q, Q*)` (with `Q*` the
//! reversed polynomial) collects every root on the circle, so the cofactor
//! has none and can be decided by raising precision.

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{find_roots, refine_roots, RootSet};
use crate::error::{Error, Result};
use crate::poly::{gcd, Poly};
use crate::scalar::{ComplexExt, MpReal, Real};

/// Highest precision tried before a boundary decision is declared undecidable.
pub const MAX_DECISION_PRECISION: u32 = 1024;

/// Starting precision of the disc decision.
pub const DECISION_PRECISION: u32 = 256;

/// Minimum of `|λ + v|` over all roots, the zero root contributing `λ`.
/// Returns `+∞` for a root set without roots.
pub fn min_disc_distance<R: Real>(rs: &RootSet<R>, lambda: f64) -> f64 {
    let bits = rs.precision;
    let l = R::from_f64_prec(lambda, bits);
    let mut best = if rs.zero_multiplicity > 0 { lambda } else { f64::INFINITY };
    for z in &rs.roots {
        let d = Complex::new(z.re.clone() + l.clone(), z.im.clone()).modulus().to_f64();
        if d < best {
            best = d;
        }
    }
    best
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Side {
    Inside,
    Outside,
    Ambiguous,
}

/// Side of the circle `|z - center| = radius` for each root, given its error radius.
fn sides(rs: &RootSet<MpReal>, center: f64, radius: &MpReal) -> Vec<Side> {
    let bits = rs.precision;
    let c = MpReal::from_f64_prec(center, bits);
    rs.roots
        .iter()
        .zip(&rs.error_radii)
        .map(|(z, err)| {
            if !err.is_finite() {
                return Side::Ambiguous;
            }
            let d = Complex::new(z.re.clone() - c.clone(), z.im.clone()).modulus() - radius.clone();
            if d < -err.clone() {
                Side::Inside
            } else if d > *err {
                Side::Outside
            } else {
                Side::Ambiguous
            }
        })
        .collect()
}

/// Outcome of the disc decision for one polynomial.
#[derive(Debug, Clone)]
pub struct DiscReport {
    pub lambda: f64,
    /// [`min_disc_distance`] of the final root set.
    pub min_distance: f64,
    /// A root was shown to lie strictly inside `|λ + v| < λ`.
    pub violation: bool,
    /// Distinct roots proven to lie exactly on the boundary circle.
    pub certified_boundary: usize,
    /// Highest precision used.
    pub precision: u32,
    pub roots: RootSet<MpReal>,
}

/// Decides whether any root of `p` lies strictly inside `|λ + v| < λ`,
/// starting at `bits` and doubling up to [`MAX_DECISION_PRECISION`].
pub fn classify_disc(p: &Poly<BigInt>, lambda: f64, bits: u32) -> Result<DiscReport> {
    if !(lambda.is_finite() && lambda > 0.0) {
        return Err(Error::InvalidArgument(format!("lambda must be positive and finite, got {lambda}")));
    }
    let mut rs = find_roots(p, bits)?;
    let mut precision = rs.precision;
    let report = |rs: RootSet<MpReal>, violation, certified_boundary, precision| DiscReport {
        lambda,
        min_distance: min_disc_distance(&rs, lambda),
        violation,
        certified_boundary,
        precision,
        roots: rs,
    };

    let lam = MpReal::from_f64_prec(lambda, precision);
    let s = sides(&rs, -lambda, &lam);
    if s.contains(&Side::Inside) {
        return Ok(report(rs, true, 0, precision));
    }
    if !s.contains(&Side::Ambiguous) {
        return Ok(report(rs, false, 0, precision));
    }

    let split = BoundarySplit::new(p, lambda);
    if split.on_circle.degree().unwrap_or(0) == 0 {
        // nothing can sit exactly on the circle: more precision must settle it
        while precision < MAX_DECISION_PRECISION {
            precision = (precision * 2).min(MAX_DECISION_PRECISION);
            rs = refine_roots(p, &rs, precision)?;
            let lam = MpReal::from_f64_prec(lambda, precision);
            let s = sides(&rs, -lambda, &lam);
            if s.contains(&Side::Inside) {
                return Ok(report(rs, true, 0, precision));
            }
            if !s.contains(&Side::Ambiguous) {
                return Ok(report(rs, false, 0, precision));
            }
        }
        return Err(Error::Undecidable { bits: precision });
    }

    let (inside, on_circle, used) = split.decide(precision)?;
    Ok(report(rs, inside, on_circle, precision.max(used)))
}

/// `true` iff no root of `p` lies strictly inside `|λ + v| < λ`.
pub fn bc_lambda_holds_univariate(p: &Poly<BigInt>, lambda: f64) -> Result<bool> {
    classify_disc(p, lambda, DECISION_PRECISION).map(|r| !r.violation)
}

/// Exact factorisation of `p(λ(w - 1))` (zero roots of `p` removed) into the
/// part whose roots are closed under reflection in `|w| = 1` and the rest.
struct BoundarySplit {
    /// Square-free part of `gcd(Q, Q*)`: every root of `Q` on the circle
    /// appears here exactly once.
    on_circle: Poly<BigInt>,
    /// `Q / gcd(Q, Q*)`: no roots on the circle.
    off_circle: Poly<BigInt>,
}

impl BoundarySplit {
    fn new(p: &Poly<BigInt>, lambda: f64) -> Self {
        let q = circle_map(&p.deflate_zero_roots().1, lambda);
        let g = gcd::gcd(&q, &q.reversed());
        let off_circle = div_exact(&q, &g).expect("gcd divides");
        let on_circle = square_free(&g);
        BoundarySplit { on_circle, off_circle }
    }

    /// Returns (some root strictly inside, roots certified on the circle, precision used).
    fn decide(&self, start: u32) -> Result<(bool, usize, u32)> {
        let mut used = start;
        if self.off_circle.degree().unwrap_or(0) > 0 {
            let (inside, bits) = decide_off_circle(&self.off_circle, start)?;
            used = used.max(bits);
            if inside {
                return Ok((true, 0, used));
            }
        }
        let (inside, on, bits) = decide_reflective(&self.on_circle, start)?;
        Ok((inside, on, used.max(bits)))
    }
}

/// `d^D p(λ(w - 1))` for `λ = n/d` in lowest terms and `D = deg p`.
fn circle_map(p: &Poly<BigInt>, lambda: f64) -> Poly<BigInt> {
    let lam = BigRational::from_float(lambda).expect("finite lambda");
    let (n, d) = (lam.numer().clone(), lam.denom().clone());
    let deg = p.degree().unwrap_or(0);
    let scaled: Vec<BigInt> = p
        .coeffs()
        .iter()
        .enumerate()
        .map(|(k, c)| c * num_traits::pow(n.clone(), k) * num_traits::pow(d.clone(), deg - k))
        .collect();
    Poly::new(scaled).compose(&Poly::new(vec![-BigInt::one(), BigInt::one()]))
}

/// Exact quotient `a / b` of integer polynomials, if it exists.
pub(crate) fn div_exact(a: &Poly<BigInt>, b: &Poly<BigInt>) -> Option<Poly<BigInt>> {
    let db = b.degree()?;
    if a.is_zero() {
        return Some(Poly::zero());
    }
    let da = a.degree()?;
    if da < db {
        return None;
    }
    let lb = b.leading()?.clone();
    let mut r: Vec<BigInt> = a.coeffs().to_vec();
    let mut q = vec![BigInt::zero(); da - db + 1];
    for k in (0..=da - db).rev() {
        let top = &r[k + db];
        if top.is_zero() {
            continue;
        }
        if !(top % &lb).is_zero() {
            return None;
        }
        let f = top / &lb;
        for (i, bc) in b.coeffs().iter().enumerate() {
            r[k + i] -= &f * bc;
        }
        q[k] = f;
    }
    if r.iter().all(Zero::is_zero) {
        Some(Poly::new(q))
    } else {
        None
    }
}

fn square_free(g: &Poly<BigInt>) -> Poly<BigInt> {
    if g.degree().unwrap_or(0) == 0 {
        return g.clone();
    }
    let h = gcd::gcd(g, &g.derivative());
    let pp = gcd::primitive_part(g);
    div_exact(&pp, &h).expect("gcd divides")
}

fn unit_sides(rs: &RootSet<MpReal>) -> Vec<Side> {
    sides(rs, 0.0, &MpReal::from_f64_prec(1.0, rs.precision))
}

/// Roots of `f` are never on `|w| = 1`; is any inside?
fn decide_off_circle(f: &Poly<BigInt>, start: u32) -> Result<(bool, u32)> {
    let mut bits = start;
    let mut rs = find_roots(f, bits)?;
    loop {
        if rs.zero_multiplicity > 0 {
            return Ok((true, bits));
        }
        let s = unit_sides(&rs);
        if s.contains(&Side::Inside) {
            return Ok((true, bits));
        }
        if !s.contains(&Side::Ambiguous) {
            return Ok((false, bits));
        }
        if bits >= MAX_DECISION_PRECISION {
            return Err(Error::Undecidable { bits });
        }
        bits = (bits * 2).min(MAX_DECISION_PRECISION);
        rs = refine_roots(f, &rs, bits)?;
    }
}

/// Roots of the square-free reflective factor `g` come in pairs `w, 1/conj(w)`
/// or lie on the circle. A root within its error radius of the circle and
/// far from every other root cannot have a distinct reflected partner, so it
/// lies on the circle.
fn decide_reflective(g: &Poly<BigInt>, start: u32) -> Result<(bool, usize, u32)> {
    if g.degree().unwrap_or(0) == 0 {
        return Ok((false, 0, start));
    }
    let mut bits = start;
    let mut rs = find_roots(g, bits)?;
    loop {
        if rs.zero_multiplicity > 0 {
            return Ok((true, 0, bits));
        }
        let s = unit_sides(&rs);
        if s.contains(&Side::Inside) {
            return Ok((true, 0, bits));
        }
        let mut on = 0;
        let mut unresolved = false;
        for (i, side) in s.iter().enumerate() {
            if *side != Side::Ambiguous {
                continue;
            }
            if isolated(&rs, i) {
                on += 1;
            } else {
                unresolved = true;
            }
        }
        if !unresolved {
            return Ok((false, on, bits));
        }
        if bits >= MAX_DECISION_PRECISION {
            return Err(Error::Undecidable { bits });
        }
        bits = (bits * 2).min(MAX_DECISION_PRECISION);
        rs = refine_roots(g, &rs, bits)?;
    }
}

/// Root `i` is separated from every other root by more than four times the
/// larger of the two error radii.
fn isolated(rs: &RootSet<MpReal>, i: usize) -> bool {
    let zi = &rs.roots[i];
    let ri = &rs.error_radii[i];
    if !ri.is_finite() {
        return false;
    }
    rs.roots.iter().zip(&rs.error_radii).enumerate().all(|(j, (zj, rj))| {
        if i == j {
            return true;
        }
        let d = Complex::new(zi.re.clone() - zj.re.clone(), zi.im.clone() - zj.im.clone()).modulus();
        let r = MpReal::max_of(ri.clone(), rj.clone());
        r.is_finite() && d > r * MpReal::from_f64_prec(4.0, rs.precision)
    })
}

/// Largest `λ` with no root strictly inside `|λ + v| < λ`: a nonzero root
/// `v` is inside iff `Re(1/v) < -1/(2λ)`, so `λ★` is the minimum of
/// `-1 / (2 Re(1/v))` over roots with `Re(1/v) < 0`, or `+∞` if there are none.
pub fn lambda_star_univariate(p: &Poly<BigInt>) -> Result<f64> {
    let rs = find_roots(p, DECISION_PRECISION)?;
    let bits = rs.precision;
    let mut best = f64::INFINITY;
    for (z, err) in rs.roots.iter().zip(&rs.error_radii) {
        let m2 = z.norm_sqr();
        let re_inv = z.re.clone() / m2.clone();
        // uncertainty of Re(1/v) is about err / |v|^2
        let slack = if err.is_finite() { err.clone() / m2.clone() } else { MpReal::from_f64_prec(f64::INFINITY, bits) };
        if re_inv < -slack {
            let cand = (-(m2 / (z.re.clone() * MpReal::from_f64_prec(2.0, bits)))).to_f64();
            if cand < best {
                best = cand;
            }
        }
    }
    Ok(best)
}
