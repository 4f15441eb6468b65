//! Real scalar abstraction shared by every numeric routine in the crate.
//!
//! All floating-point code is written against [`Real`], which is implemented
//! for `f64` and for the multiprecision [`MpReal`]. Complex values are
//! `num_complex::Complex<R>`; the helpers in [`ComplexExt`] supply the
//! operations `num_complex` only offers for `num_traits::Float` types.

use std::cell::RefCell;
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Rem, Sub};

use astro_float::{BigFloat, Consts, Radix, RoundingMode};
use num_bigint::{BigInt, Sign};
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{Num, One, Zero};

/// Smallest working precision handed out by [`MpReal`]; matches an `f64` mantissa.
pub const MIN_PRECISION: u32 = 53;

const RM: RoundingMode = RoundingMode::ToEven;

thread_local! {
    static CONSTS: RefCell<Consts> = RefCell::new(Consts::new().expect("astro-float constant cache"));
}

fn with_consts<T>(f: impl FnOnce(&mut Consts) -> T) -> T {
    CONSTS.with(|c| f(&mut c.borrow_mut()))
}

/// A real number type with a (possibly runtime-chosen) working precision.
pub trait Real:
    Clone + fmt::Debug + PartialOrd + Num + Neg<Output = Self> + Send + Sync + 'static
{
    /// Converts an `f64` exactly, carrying at least `bits` of precision.
    fn from_f64_prec(x: f64, bits: u32) -> Self;

    /// Converts an integer, rounding once to `bits` bits.
    fn from_bigint(n: &BigInt, bits: u32) -> Self;

    fn from_ratio(r: &BigRational, bits: u32) -> Self {
        Self::from_bigint(r.numer(), bits) / Self::from_bigint(r.denom(), bits)
    }

    /// Working precision in bits.
    fn precision(&self) -> u32;

    /// Same value re-rounded to `bits` (a no-op for fixed-precision types).
    fn to_precision(&self, bits: u32) -> Self;

    fn to_f64(&self) -> f64;

    fn abs(&self) -> Self;
    fn sqrt(&self) -> Self;
    fn exp(&self) -> Self;
    fn ln(&self) -> Self;
    fn sin(&self) -> Self;
    fn cos(&self) -> Self;
    fn atan2(&self, x: &Self) -> Self;
    fn pi(bits: u32) -> Self;
    fn is_finite(&self) -> bool;

    /// Decimal rendering carrying every significant bit.
    fn to_decimal(&self) -> String;

    /// `2^-bits` at precision `bits`.
    fn unit_roundoff(bits: u32) -> Self {
        Self::from_f64_prec(2f64.powi(-(bits as i32)), bits)
    }

    fn max_of(a: Self, b: Self) -> Self {
        if b > a {
            b
        } else {
            a
        }
    }

    fn min_of(a: Self, b: Self) -> Self {
        if b < a {
            b
        } else {
            a
        }
    }
}

impl Real for f64 {
    fn from_f64_prec(x: f64, _bits: u32) -> Self {
        x
    }

    fn from_bigint(n: &BigInt, _bits: u32) -> Self {
        num_traits::ToPrimitive::to_f64(n).unwrap_or(f64::NAN)
    }

    fn from_ratio(r: &BigRational, _bits: u32) -> Self {
        num_traits::ToPrimitive::to_f64(r).unwrap_or(f64::NAN)
    }

    fn precision(&self) -> u32 {
        53
    }

    fn to_precision(&self, _bits: u32) -> Self {
        *self
    }

    fn to_f64(&self) -> f64 {
        *self
    }

    fn abs(&self) -> Self {
        f64::abs(*self)
    }

    fn sqrt(&self) -> Self {
        f64::sqrt(*self)
    }

    fn exp(&self) -> Self {
        f64::exp(*self)
    }

    fn ln(&self) -> Self {
        f64::ln(*self)
    }

    fn sin(&self) -> Self {
        f64::sin(*self)
    }

    fn cos(&self) -> Self {
        f64::cos(*self)
    }

    fn atan2(&self, x: &Self) -> Self {
        f64::atan2(*self, *x)
    }

    fn pi(_bits: u32) -> Self {
        std::f64::consts::PI
    }

    fn is_finite(&self) -> bool {
        f64::is_finite(*self)
    }

    fn to_decimal(&self) -> String {
        format!("{:e}", self)
    }
}

/// Multiprecision binary float. Each value carries its own precision and
/// binary operations round to the larger precision of their operands.
#[derive(Clone)]
pub struct MpReal {
    x: BigFloat,
    bits: usize,
}

impl MpReal {
    /// astro-float works in whole 64-bit words.
    fn prec_bits(bits: u32) -> usize {
        (bits.max(MIN_PRECISION) as usize).div_ceil(64) * 64
    }

    fn wrap(x: BigFloat, bits: usize) -> MpReal {
        MpReal { x, bits }
    }

    pub fn with_precision(&self, bits: u32) -> MpReal {
        let p = Self::prec_bits(bits);
        let mut v = self.x.clone();
        if !v.is_zero() {
            v.set_precision(p, RM).expect("precision within astro-float limits");
        }
        Self::wrap(v, p)
    }

    pub fn from_u64(x: u64, bits: u32) -> MpReal {
        let p = Self::prec_bits(bits);
        Self::wrap(BigFloat::from_u64(x, p), p)
    }

    pub fn parse_decimal(s: &str, bits: u32) -> Option<MpReal> {
        let p = Self::prec_bits(bits);
        let v = with_consts(|cc| BigFloat::parse(s.trim(), Radix::Dec, p, RM, cc));
        if v.is_nan() {
            None
        } else {
            Some(Self::wrap(v, p))
        }
    }

    fn p(&self) -> usize {
        self.bits
    }

    fn binary_prec(&self, other: &MpReal) -> usize {
        self.p().max(other.p())
    }

    pub fn inner(&self) -> &BigFloat {
        &self.x
    }
}

impl fmt::Debug for MpReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_f64())
    }
}

impl fmt::Display for MpReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_decimal())
    }
}

impl PartialEq for MpReal {
    fn eq(&self, other: &Self) -> bool {
        self.x == other.x
    }
}

impl PartialOrd for MpReal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.x.partial_cmp(&other.x)
    }
}

macro_rules! mp_binop {
    ($tr:ident, $method:ident, $op:ident) => {
        impl $tr for MpReal {
            type Output = MpReal;
            fn $method(self, rhs: MpReal) -> MpReal {
                let p = self.binary_prec(&rhs);
                MpReal::wrap(self.x.$op(&rhs.x, p, RM), p)
            }
        }

        impl<'a> $tr<&'a MpReal> for &'a MpReal {
            type Output = MpReal;
            fn $method(self, rhs: &'a MpReal) -> MpReal {
                let p = self.binary_prec(rhs);
                MpReal::wrap(self.x.$op(&rhs.x, p, RM), p)
            }
        }
    };
}

mp_binop!(Add, add, add);
mp_binop!(Sub, sub, sub);
mp_binop!(Mul, mul, mul);
mp_binop!(Div, div, div);

impl Rem for MpReal {
    type Output = MpReal;
    fn rem(self, rhs: MpReal) -> MpReal {
        let p = self.binary_prec(&rhs);
        MpReal::wrap(self.x.rem(&rhs.x), p)
    }
}

impl Neg for MpReal {
    type Output = MpReal;
    fn neg(self) -> MpReal {
        MpReal::wrap(self.x.neg(), self.bits)
    }
}

impl Zero for MpReal {
    fn zero() -> Self {
        MpReal::from_u64(0, MIN_PRECISION)
    }

    fn is_zero(&self) -> bool {
        self.x.is_zero()
    }
}

impl One for MpReal {
    fn one() -> Self {
        MpReal::from_u64(1, MIN_PRECISION)
    }
}

impl Num for MpReal {
    type FromStrRadixErr = &'static str;

    fn from_str_radix(s: &str, radix: u32) -> Result<Self, Self::FromStrRadixErr> {
        if radix != 10 {
            return Err("only radix 10 is supported");
        }
        MpReal::parse_decimal(s, MIN_PRECISION).ok_or("malformed decimal")
    }
}

impl Real for MpReal {
    fn from_f64_prec(x: f64, bits: u32) -> Self {
        let p = Self::prec_bits(bits);
        MpReal::wrap(BigFloat::from_f64(x, p), p)
    }

    fn from_bigint(n: &BigInt, bits: u32) -> Self {
        let (sign, digits) = n.to_u64_digits();
        let p = Self::prec_bits(bits);
        // exact accumulation, rounded once at the end
        let exact_p = (digits.len() * 64 + 64).max(p);
        let base = BigFloat::from_u64(1, exact_p).mul(&BigFloat::from_u64(1 << 32, exact_p), exact_p, RM);
        let base = base.mul(&BigFloat::from_u64(1 << 32, exact_p), exact_p, RM);
        let mut acc = BigFloat::from_u64(0, exact_p);
        for d in digits.iter().rev() {
            acc = acc.mul(&base, exact_p, RM).add(&BigFloat::from_u64(*d, exact_p), exact_p, RM);
        }
        if sign == Sign::Minus {
            acc = acc.neg();
        }
        if !acc.is_zero() {
            acc.set_precision(p, RM).expect("valid precision");
        }
        MpReal::wrap(acc, p)
    }

    fn precision(&self) -> u32 {
        self.p() as u32
    }

    fn to_precision(&self, bits: u32) -> Self {
        self.with_precision(bits)
    }

    fn to_f64(&self) -> f64 {
        let v = &self.x;
        if v.is_nan() {
            return f64::NAN;
        }
        if v.is_inf_pos() {
            return f64::INFINITY;
        }
        if v.is_inf_neg() {
            return f64::NEG_INFINITY;
        }
        if v.is_zero() {
            return 0.0;
        }
        let (words, _, sign, exponent, _) = v.as_raw_parts().expect("finite value");
        // mantissa is a fraction in [1/2, 1) stored little-endian
        let top = words.len() - 1;
        let mut frac = words[top] as f64 / 2f64.powi(64);
        if top > 0 {
            frac += words[top - 1] as f64 / 2f64.powi(128);
        }
        let mut e = exponent;
        let mut out = frac;
        while e > 1000 {
            out *= 2f64.powi(1000);
            e -= 1000;
        }
        while e < -1000 {
            out *= 2f64.powi(-1000);
            e += 1000;
        }
        out *= 2f64.powi(e);
        if sign == astro_float::Sign::Neg {
            -out
        } else {
            out
        }
    }

    fn abs(&self) -> Self {
        MpReal::wrap(self.x.abs(), self.bits)
    }

    fn sqrt(&self) -> Self {
        MpReal::wrap(self.x.sqrt(self.p(), RM), self.bits)
    }

    fn exp(&self) -> Self {
        let p = self.p();
        MpReal::wrap(with_consts(|cc| self.x.exp(p, RM, cc)), p)
    }

    fn ln(&self) -> Self {
        let p = self.p();
        MpReal::wrap(with_consts(|cc| self.x.ln(p, RM, cc)), p)
    }

    fn sin(&self) -> Self {
        let p = self.p();
        MpReal::wrap(with_consts(|cc| self.x.sin(p, RM, cc)), p)
    }

    fn cos(&self) -> Self {
        let p = self.p();
        MpReal::wrap(with_consts(|cc| self.x.cos(p, RM, cc)), p)
    }

    fn atan2(&self, x: &Self) -> Self {
        let p = self.binary_prec(x);
        let bits = p as u32;
        let y = self;
        if x.is_zero() {
            if y.is_zero() {
                return MpReal::zero().with_precision(bits);
            }
            let half_pi = Self::pi(bits) / Self::from_f64_prec(2.0, bits);
            return if y.x.is_negative() { -half_pi } else { half_pi };
        }
        let base = MpReal::wrap(with_consts(|cc| (y / x).x.atan(p, RM, cc)), p);
        if x.x.is_positive() {
            base
        } else if y.x.is_negative() {
            base - Self::pi(bits)
        } else {
            base + Self::pi(bits)
        }
    }

    fn pi(bits: u32) -> Self {
        let p = Self::prec_bits(bits);
        MpReal::wrap(with_consts(|cc| cc.pi(p, RM)), p)
    }

    fn is_finite(&self) -> bool {
        !(self.x.is_nan() || self.x.is_inf())
    }

    fn to_decimal(&self) -> String {
        with_consts(|cc| self.x.format(Radix::Dec, RM, cc)).unwrap_or_else(|_| "NaN".to_string())
    }
}

/// Complex helpers for any [`Real`] component type.
pub trait ComplexExt<R: Real> {
    fn from_f64_prec(re: f64, im: f64, bits: u32) -> Complex<R>;
    fn modulus(&self) -> R;
    fn arg(&self) -> R;
    fn from_polar(r: &R, theta: &R) -> Complex<R>;
    fn precision(&self) -> u32;
    fn to_c64(&self) -> Complex<f64>;
    /// `exp(i theta)` at the precision of `theta`.
    fn cis(theta: &R) -> Complex<R>;
    fn to_precision(&self, bits: u32) -> Complex<R>;
}

impl<R: Real> ComplexExt<R> for Complex<R> {
    fn from_f64_prec(re: f64, im: f64, bits: u32) -> Complex<R> {
        Complex::new(R::from_f64_prec(re, bits), R::from_f64_prec(im, bits))
    }

    fn modulus(&self) -> R {
        (self.re.clone() * self.re.clone() + self.im.clone() * self.im.clone()).sqrt()
    }

    fn arg(&self) -> R {
        self.im.atan2(&self.re)
    }

    fn from_polar(r: &R, theta: &R) -> Complex<R> {
        Complex::new(r.clone() * theta.cos(), r.clone() * theta.sin())
    }

    fn precision(&self) -> u32 {
        self.re.precision().max(self.im.precision())
    }

    fn to_c64(&self) -> Complex<f64> {
        Complex::new(self.re.to_f64(), self.im.to_f64())
    }

    fn cis(theta: &R) -> Complex<R> {
        Complex::new(theta.cos(), theta.sin())
    }

    fn to_precision(&self, bits: u32) -> Complex<R> {
        Complex::new(self.re.to_precision(bits), self.im.to_precision(bits))
    }
}

/// Promotes a complex number to at least `bits` bits of precision.
pub fn promote(z: &Complex<MpReal>, bits: u32) -> Complex<MpReal> {
    z.to_precision(bits.max(z.precision()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mp_to_f64_matches_input() {
        for x in [1.0, -2.5, 3.0e-20, 7.25e30, std::f64::consts::PI, -1e-300] {
            assert_eq!(MpReal::from_f64_prec(x, 256).to_f64(), x);
        }
    }

    #[test]
    fn bigint_conversion_is_exact_at_enough_bits() {
        let n: BigInt = "812850570172517586988075560".parse().unwrap();
        let x = MpReal::from_bigint(&n, 256);
        let s = x.to_decimal();
        assert!(s.starts_with("8.1285057017251758698807556"), "{s}");
        let neg = MpReal::from_bigint(&-n, 128);
        assert!(neg.to_f64() < -8.1e26);
    }

    #[test]
    fn binary_ops_promote_precision() {
        let lo = MpReal::from_f64_prec(1.0, 64);
        let hi = MpReal::from_f64_prec(3.0, 512);
        let q = lo / hi;
        assert!(q.precision() >= 512);
        let third = (MpReal::one().with_precision(512) / MpReal::from_f64_prec(3.0, 512)).to_decimal();
        assert!(third.starts_with("3.33333333333333333333333333333333333333"), "{third}");
    }

    #[test]
    fn atan2_quadrants() {
        let bits = 128;
        for (y, x) in [(1.0, 1.0), (1.0, -1.0), (-1.0, -1.0), (-1.0, 1.0), (1.0, 0.0), (-2.0, 0.0)] {
            let got = MpReal::from_f64_prec(y, bits).atan2(&MpReal::from_f64_prec(x, bits)).to_f64();
            assert!((got - f64::atan2(y, x)).abs() < 1e-15, "{y} {x} {got}");
        }
    }

    #[test]
    fn transcendental_sanity() {
        let bits = 200;
        let two = MpReal::from_f64_prec(2.0, bits);
        let r = two.sqrt();
        let back = r.clone() * r;
        assert!((back - two.clone()).abs() < MpReal::unit_roundoff(190));
        let e = two.ln().exp();
        assert!((e - two).abs() < MpReal::unit_roundoff(190));
        let pi = MpReal::pi(bits);
        assert!(pi.sin().abs() < MpReal::unit_roundoff(190));
        assert!((pi.cos().to_f64() + 1.0).abs() < 1e-15);
    }

    #[test]
    fn complex_division_through_num_complex() {
        let bits = 128;
        let a = Complex::<MpReal>::from_f64_prec(1.0, 2.0, bits);
        let b = Complex::<MpReal>::from_f64_prec(3.0, -1.0, bits);
        let q = (a / b).to_c64();
        let expect = Complex::new(1.0, 2.0) / Complex::new(3.0, -1.0);
        assert!((q - expect).norm() < 1e-15);
    }
}
