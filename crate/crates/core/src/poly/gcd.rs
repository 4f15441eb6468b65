//! Integer polynomial GCD by the primitive pseudo-remainder sequence.
//!
//! Used internally to detect roots shared between a polynomial and its
//! reflection through a circle; not part of the public surface.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::Poly;

pub(crate) fn content(p: &Poly<BigInt>) -> BigInt {
    let mut g = BigInt::zero();
    for c in p.coeffs() {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    g
}

/// `p / content(p)` with a positive leading coefficient.
pub(crate) fn primitive_part(p: &Poly<BigInt>) -> Poly<BigInt> {
    if p.is_zero() {
        return p.clone();
    }
    let mut g = content(p);
    if p.leading().is_some_and(Signed::is_negative) {
        g = -g;
    }
    p.map(|c| c / &g)
}

/// Pseudo-remainder of `a` by `b`: `lc(b)^(deg a - deg b + 1) a mod b`.
fn pseudo_rem(a: &Poly<BigInt>, b: &Poly<BigInt>) -> Poly<BigInt> {
    let db = b.degree().expect("nonzero divisor");
    let lb = b.leading().unwrap().clone();
    let mut r: Vec<BigInt> = a.coeffs().to_vec();
    while r.len() > db && !r.is_empty() {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        for c in r.iter_mut() {
            *c *= &lb;
        }
        let shift = dr - db;
        for (k, bc) in b.coeffs().iter().enumerate() {
            r[k + shift] -= &lr * bc;
        }
        while r.last().is_some_and(Zero::is_zero) {
            r.pop();
        }
    }
    Poly::new(r)
}

/// Primitive GCD with positive leading coefficient; `gcd(0, 0) = 0`.
pub(crate) fn gcd(a: &Poly<BigInt>, b: &Poly<BigInt>) -> Poly<BigInt> {
    let (mut x, mut y) = (primitive_part(a), primitive_part(b));
    if x.degree() < y.degree() {
        std::mem::swap(&mut x, &mut y);
    }
    while !y.is_zero() {
        let r = pseudo_rem(&x, &y);
        x = y;
        y = primitive_part(&r);
    }
    x
}
