//! Dense univariate and sparse bivariate polynomials.
//!
//! Coefficients are generic: exact work uses `BigInt` (or `BigRational` when a
//! scalar factor cannot be cleared), numeric work uses `Complex<R>` for a
//! [`Real`] type `R`.

mod bivariate;
pub(crate) mod gcd;

pub use bivariate::BiPoly;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{Num, One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{ComplexExt, Real};

/// Coefficient types that can be rounded into a [`Real`] at a given precision.
pub trait ToReal {
    fn to_real<R: Real>(&self, bits: u32) -> R;
}

impl ToReal for BigInt {
    fn to_real<R: Real>(&self, bits: u32) -> R {
        R::from_bigint(self, bits)
    }
}

impl ToReal for BigRational {
    fn to_real<R: Real>(&self, bits: u32) -> R {
        R::from_ratio(self, bits)
    }
}

impl ToReal for f64 {
    fn to_real<R: Real>(&self, bits: u32) -> R {
        R::from_f64_prec(*self, bits)
    }
}

impl ToReal for i64 {
    fn to_real<R: Real>(&self, bits: u32) -> R {
        R::from_bigint(&BigInt::from(*self), bits)
    }
}

/// Dense polynomial `c_0 + c_1 v + ... + c_n v^n`; no trailing zero coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly<C> {
    coeffs: Vec<C>,
}

impl<C: Clone + Num> Poly<C> {
    pub fn new(mut coeffs: Vec<C>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly { coeffs: vec![C::one()] }
    }

    pub fn constant(c: C) -> Self {
        Self::new(vec![c])
    }

    /// The variable itself.
    pub fn x() -> Self {
        Self::monomial(C::one(), 1)
    }

    pub fn monomial(c: C, k: usize) -> Self {
        let mut coeffs = vec![C::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<C> {
        self.coeffs
    }

    pub fn coeff(&self, k: usize) -> C {
        self.coeffs.get(k).cloned().unwrap_or_else(C::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&C> {
        self.coeffs.last()
    }

    /// Multiplicity of the root at zero; `None` for the zero polynomial.
    pub fn low_degree(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Divides out the largest power of the variable.
    pub fn deflate_zero_roots(&self) -> (usize, Poly<C>) {
        match self.low_degree() {
            None => (0, self.clone()),
            Some(k) => (k, Poly { coeffs: self.coeffs[k..].to_vec() }),
        }
    }

    pub fn scale(&self, c: &C) -> Poly<C> {
        Poly::new(self.coeffs.iter().map(|x| x.clone() * c.clone()).collect())
    }

    /// Multiplies by `v^k`.
    pub fn shift(&self, k: usize) -> Poly<C> {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![C::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    pub fn pow(&self, mut n: u32) -> Poly<C> {
        let mut base = self.clone();
        let mut acc = Poly::one();
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `p(q(v))` by Horner's scheme.
    pub fn compose(&self, q: &Poly<C>) -> Poly<C> {
        let mut acc = Poly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * q) + &Poly::constant(c.clone());
        }
        acc
    }

    /// Horner evaluation in the coefficient ring.
    pub fn eval(&self, x: &C) -> C {
        let mut acc = C::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }

    pub fn derivative(&self) -> Poly<C> {
        let mut coeffs = Vec::with_capacity(self.coeffs.len().saturating_sub(1));
        let mut k = C::zero();
        for c in self.coeffs.iter() {
            if !k.is_zero() {
                coeffs.push(c.clone() * k.clone());
            }
            k = k + C::one();
        }
        Poly::new(coeffs)
    }

    /// `v^n p(1/v)` where `n` is the degree.
    pub fn reversed(&self) -> Poly<C> {
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        Poly::new(coeffs)
    }

    pub fn map<D: Clone + Num>(&self, f: impl Fn(&C) -> D) -> Poly<D> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }
}

impl<C: Clone + Num + ToReal> Poly<C> {
    /// Rounds every coefficient to a complex number with `bits` of precision.
    pub fn to_complex<R: Real>(&self, bits: u32) -> Poly<Complex<R>> {
        Poly::new(self.coeffs.iter().map(|c| Complex::new(c.to_real(bits), R::zero())).collect())
    }

    /// Horner evaluation at `z`, with coefficients converted at the precision of `z`.
    pub fn eval_complex<R: Real>(&self, z: &Complex<R>) -> Complex<R> {
        let bits = z.precision();
        let mut acc = Complex::new(R::from_f64_prec(0.0, bits), R::from_f64_prec(0.0, bits));
        for c in self.coeffs.iter().rev() {
            acc = acc * z.clone();
            acc.re = acc.re + c.to_real::<R>(bits);
        }
        acc
    }
}

impl Poly<BigInt> {
    /// `(1+v)^p - 1`.
    pub fn shifted_power(p: u32) -> Poly<BigInt> {
        let mut coeffs = Vec::with_capacity(p as usize + 1);
        let mut binom = BigInt::one();
        coeffs.push(BigInt::zero());
        for k in 1..=p {
            binom = binom * BigInt::from(p - k + 1) / BigInt::from(k);
            coeffs.push(binom.clone());
        }
        Poly::new(coeffs)
    }

    /// Largest coefficient magnitude.
    pub fn max_abs_coeff(&self) -> BigInt {
        self.coeffs.iter().map(Signed::abs).max().unwrap_or_default()
    }

    pub fn to_rational(&self) -> Poly<BigRational> {
        self.map(|c| BigRational::from_integer(c.clone()))
    }
}

impl<C: Clone + Num> Add for &Poly<C> {
    type Output = Poly<C>;
    fn add(self, rhs: &Poly<C>) -> Poly<C> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl<C: Clone + Num> Sub for &Poly<C> {
    type Output = Poly<C>;
    fn sub(self, rhs: &Poly<C>) -> Poly<C> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl<C: Clone + Num> Mul for &Poly<C> {
    type Output = Poly<C>;
    fn mul(self, rhs: &Poly<C>) -> Poly<C> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![C::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = std::mem::replace(&mut out[i + j], C::zero()) + a.clone() * b.clone();
            }
        }
        Poly::new(out)
    }
}

impl<C: Clone + Num + Neg<Output = C>> Neg for &Poly<C> {
    type Output = Poly<C>;
    fn neg(self) -> Poly<C> {
        Poly { coeffs: self.coeffs.iter().cloned().map(Neg::neg).collect() }
    }
}

macro_rules! owned_binop {
    ($tr:ident, $method:ident) => {
        impl<C: Clone + Num> $tr for Poly<C> {
            type Output = Poly<C>;
            fn $method(self, rhs: Poly<C>) -> Poly<C> {
                (&self).$method(&rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl<C: Clone + Num + Neg<Output = C>> Neg for Poly<C> {
    type Output = Poly<C>;
    fn neg(self) -> Poly<C> {
        -&self
    }
}

impl<C: fmt::Debug> fmt::Debug for Poly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly{:?}", self.coeffs)
    }
}

impl<C: Clone + Num + fmt::Display> fmt::Display for Poly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})v")?,
                _ => write!(f, "({c})v^{k}")?,
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct UniJson {
    var: String,
    coeffs: Vec<String>,
}

impl<C: Clone + Num + fmt::Display + FromStr> Poly<C> {
    /// `{"var":"v","coeffs":["0","1",...]}`; the zero polynomial is `["0"]`.
    pub fn to_json(&self, var: &str) -> String {
        let coeffs = if self.is_zero() {
            vec!["0".to_string()]
        } else {
            self.coeffs.iter().map(|c| c.to_string()).collect()
        };
        serde_json::to_string(&UniJson { var: var.to_string(), coeffs }).expect("serializable")
    }

    /// Parses the JSON form, returning the polynomial and its variable name.
    pub fn from_json(s: &str) -> Result<(String, Poly<C>)> {
        let raw: UniJson = serde_json::from_str(s).map_err(|e| Error::InvalidArgument(format!("polynomial JSON: {e}")))?;
        let coeffs = raw
            .coeffs
            .iter()
            .map(|c| c.parse::<C>().map_err(|_| Error::InvalidArgument(format!("bad coefficient '{c}'"))))
            .collect::<Result<Vec<_>>>()?;
        Ok((raw.var, Poly::new(coeffs)))
    }
}

/// Integer polynomial from small coefficients, lowest degree first.
pub fn int_poly(coeffs: &[i64]) -> Poly<BigInt> {
    Poly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::MpReal;
    use proptest::prelude::*;

    #[test]
    fn square_of_variable() {
        let v = Poly::<BigInt>::x();
        assert_eq!(&v * &v, int_poly(&[0, 0, 1]));
    }

    #[test]
    fn binomial_cube() {
        let p = int_poly(&[1, 1]).pow(3);
        assert_eq!(p, int_poly(&[1, 3, 3, 1]));
    }

    #[test]
    fn additive_identity() {
        let p = int_poly(&[0, 0, 0, 16, 15, 6, 1]);
        assert_eq!(&p + &Poly::zero(), p);
    }

    #[test]
    fn shifted_powers() {
        assert_eq!(Poly::shifted_power(1), int_poly(&[0, 1]));
        assert_eq!(Poly::shifted_power(2), int_poly(&[0, 2, 1]));
        assert!(Poly::shifted_power(0).is_zero());
        assert_eq!(Poly::shifted_power(5), &int_poly(&[1, 1]).pow(5) - &Poly::one());
    }

    #[test]
    fn normalization_and_degree() {
        let p = int_poly(&[1, 2, 0, 0]);
        assert_eq!(p.degree(), Some(1));
        assert_eq!(Poly::<BigInt>::zero().degree(), None);
        assert_eq!(int_poly(&[0, 0, 3, 1]).deflate_zero_roots(), (2, int_poly(&[3, 1])));
        assert_eq!(int_poly(&[1, 2, 3]).reversed(), int_poly(&[3, 2, 1]));
        assert_eq!(int_poly(&[0, 1, 2]).reversed(), int_poly(&[2, 1]));
        assert_eq!(int_poly(&[5, 3, 2]).derivative(), int_poly(&[3, 4]));
    }

    #[test]
    fn k4_polynomial_values() {
        let k4 = int_poly(&[0, 0, 0, 16, 15, 6, 1]);
        let z0 = Complex::<MpReal>::from_f64_prec(0.0, 0.0, 128);
        assert!(k4.eval_complex(&z0).to_c64().norm() == 0.0);
        let one = Complex::<MpReal>::from_f64_prec(1.0, 0.0, 128);
        assert_eq!(k4.eval_complex(&one).to_c64(), Complex::new(38.0, 0.0));
        assert_eq!(k4.eval(&BigInt::from(1)), BigInt::from(38));
    }

    #[test]
    fn complex_evaluation_in_f64() {
        let p = int_poly(&[1, 0, 1]);
        let i = Complex::new(0.0f64, 1.0);
        assert!(p.eval_complex(&i).norm() < 1e-15);
    }

    #[test]
    fn composition() {
        let p = int_poly(&[1, 0, 1]);
        let q = int_poly(&[1, 1]);
        assert_eq!(p.compose(&q), int_poly(&[2, 2, 1]));
    }

    #[test]
    fn json_round_trip() {
        let p = int_poly(&[0, 0, 0, 16, 15, 6, 1]);
        let s = p.to_json("v");
        assert_eq!(s, r#"{"var":"v","coeffs":["0","0","0","16","15","6","1"]}"#);
        let (var, back) = Poly::<BigInt>::from_json(&s).unwrap();
        assert_eq!((var.as_str(), back), ("v", p));
        assert_eq!(Poly::<BigInt>::zero().to_json("v"), r#"{"var":"v","coeffs":["0"]}"#);
        assert!(Poly::<BigInt>::from_json(r#"{"var":"v","coeffs":["x"]}"#).is_err());
        let big: BigInt = "812850570172517586988075560".parse().unwrap();
        let p = Poly::new(vec![big.clone(), -big]);
        assert_eq!(Poly::<BigInt>::from_json(&p.to_json("v")).unwrap().1, p);
    }

    #[test]
    fn rational_json() {
        let p = Poly::new(vec![BigRational::new(1.into(), 3.into()), BigRational::from_integer(2.into())]);
        let (_, back) = Poly::<BigRational>::from_json(&p.to_json("v")).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn precision_agreement_on_large_coefficients() {
        let big: BigInt = BigInt::from(10).pow(27) + BigInt::from(12345);
        let p = Poly::new((0..94).map(|k| &big + BigInt::from(k)).collect());
        let z256 = Complex::<MpReal>::from_f64_prec(-0.3, 0.7, 256);
        let z512 = Complex::<MpReal>::from_f64_prec(-0.3, 0.7, 512);
        let a = p.eval_complex(&z256);
        let b = p.eval_complex(&z512);
        let diff = Complex::new(a.re.clone() - b.re.clone(), a.im.clone() - b.im.clone()).modulus();
        let rel = (diff / b.modulus()).to_f64();
        assert!(rel < 2f64.powi(-200), "{rel}");
    }

    fn arb_poly() -> impl Strategy<Value = Poly<BigInt>> {
        proptest::collection::vec((any::<i64>(), any::<i64>(), 0u32..2), 0..8).prop_map(|v| {
            // magnitudes up to roughly 10^30
            Poly::new(
                v.into_iter()
                    .map(|(a, b, s)| BigInt::from(a) * BigInt::from(b) * if s == 0 { 1 } else { 100 })
                    .collect(),
            )
        })
    }

    proptest! {
        #[test]
        fn ring_axioms(p in arb_poly(), q in arb_poly(), r in arb_poly()) {
            prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
            prop_assert_eq!(&(&p + &q) + &r, &p + &(&q + &r));
            prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
            prop_assert_eq!(&p * &q, &q * &p);
            prop_assert_eq!(&(&p - &q) + &q, p.clone());
            if !p.is_zero() && !q.is_zero() {
                prop_assert_eq!((&p * &q).degree(), Some(p.degree().unwrap() + q.degree().unwrap()));
            }
        }

        #[test]
        fn shifted_power_parallel_composition(a in 0u32..20, b in 0u32..20) {
            // (1+u)(1+w) - 1 with u, w the shifted powers
            let u = Poly::shifted_power(a);
            let w = Poly::shifted_power(b);
            let combined = &(&(&u + &Poly::one()) * &(&w + &Poly::one())) - &Poly::one();
            prop_assert_eq!(combined, Poly::shifted_power(a + b));
        }
    }
}
