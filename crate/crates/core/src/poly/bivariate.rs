use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_complex::Complex;
use num_traits::Num;
use serde::{Deserialize, Serialize};

use super::{Poly, ToReal};
use crate::error::{Error, Result};
use crate::scalar::Real;

/// Sparse polynomial in `a` and `b`, keyed by `(deg_a, deg_b)`; zero
/// coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BiPoly<C> {
    terms: BTreeMap<(u32, u32), C>,
}

impl<C: Clone + Num> Default for BiPoly<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Clone + Num> BiPoly<C> {
    pub fn zero() -> Self {
        BiPoly { terms: BTreeMap::new() }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = ((u32, u32), C)>) -> Self {
        let mut p = Self::zero();
        for (k, c) in terms {
            p.add_term(k, c);
        }
        p
    }

    pub fn monomial(c: C, da: u32, db: u32) -> Self {
        Self::from_terms([((da, db), c)])
    }

    pub fn add_term(&mut self, key: (u32, u32), c: C) {
        if c.is_zero() {
            return;
        }
        let sum = match self.terms.remove(&key) {
            Some(old) => old + c,
            None => c,
        };
        if !sum.is_zero() {
            self.terms.insert(key, sum);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &C)> {
        self.terms.iter()
    }

    pub fn coeff(&self, da: u32, db: u32) -> C {
        self.terms.get(&(da, db)).cloned().unwrap_or_else(C::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn degree_a(&self) -> Option<u32> {
        self.terms.keys().map(|k| k.0).max()
    }

    pub fn degree_b(&self) -> Option<u32> {
        self.terms.keys().map(|k| k.1).max()
    }

    /// Total degree of the highest monomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|k| k.0 + k.1).max()
    }

    /// Coefficient of `a^k` as a polynomial in `b`.
    pub fn coeff_of_a(&self, k: u32) -> Poly<C> {
        let n = self.degree_b().unwrap_or(0) as usize;
        let mut c = vec![C::zero(); n + 1];
        for (&(da, db), v) in &self.terms {
            if da == k {
                c[db as usize] = v.clone();
            }
        }
        Poly::new(c)
    }

    /// Coefficient of `b^k` as a polynomial in `a`.
    pub fn coeff_of_b(&self, k: u32) -> Poly<C> {
        self.swapped().coeff_of_a(k)
    }

    /// Exchanges the roles of `a` and `b`.
    pub fn swapped(&self) -> BiPoly<C> {
        BiPoly { terms: self.terms.iter().map(|(&(i, j), c)| ((j, i), c.clone())).collect() }
    }

    /// `p(A(v), B(v))` for univariate `A`, `B`.
    pub fn substitute(&self, a: &Poly<C>, b: &Poly<C>) -> Poly<C> {
        let da = self.degree_a().unwrap_or(0) as usize;
        let db = self.degree_b().unwrap_or(0) as usize;
        let mut a_pow = vec![Poly::one()];
        for _ in 0..da {
            a_pow.push(a_pow.last().unwrap() * a);
        }
        let mut b_pow = vec![Poly::one()];
        for _ in 0..db {
            b_pow.push(b_pow.last().unwrap() * b);
        }
        let mut acc = Poly::zero();
        for (&(i, j), c) in &self.terms {
            let term = (&a_pow[i as usize] * &b_pow[j as usize]).scale(c);
            acc = &acc + &term;
        }
        acc
    }

    /// `p(v, v)`.
    pub fn diagonal(&self) -> Poly<C> {
        self.substitute(&Poly::x(), &Poly::x())
    }

    /// Exact evaluation in the coefficient ring.
    pub fn eval(&self, a: &C, b: &C) -> C {
        let mut acc = C::zero();
        for k in (0..=self.degree_a().unwrap_or(0)).rev() {
            acc = acc * a.clone() + self.coeff_of_a(k).eval(b);
        }
        acc
    }
}

impl BiPoly<BigInt> {
    /// Substitutes `a = (1+v)^p1 - 1`, `b = (1+v)^p2 - 1`.
    pub fn specialize(&self, p1: u32, p2: u32) -> Poly<BigInt> {
        self.substitute(&Poly::shifted_power(p1), &Poly::shifted_power(p2))
    }
}

impl<C: Clone + Num + ToReal> BiPoly<C> {
    pub fn eval_complex<R: Real>(&self, a: &Complex<R>, b: &Complex<R>) -> Complex<R> {
        self.collapse_in_a(b).eval(a)
    }

    /// Evaluates the `b` variable at `b0`, leaving a polynomial in `a` with
    /// complex coefficients `c_k(b0)`.
    pub fn collapse_in_a<R: Real>(&self, b0: &Complex<R>) -> Poly<Complex<R>> {
        let n = self.degree_a().map_or(0, |d| d + 1);
        Poly::new((0..n).map(|k| self.coeff_of_a(k).eval_complex(b0)).collect())
    }

    /// Evaluates the `a` variable at `a0`, leaving a polynomial in `b`.
    pub fn collapse_in_b<R: Real>(&self, a0: &Complex<R>) -> Poly<Complex<R>> {
        self.swapped().collapse_in_a(a0)
    }
}

impl<C: Clone + Num> Add for &BiPoly<C> {
    type Output = BiPoly<C>;
    fn add(self, rhs: &BiPoly<C>) -> BiPoly<C> {
        let mut out = self.clone();
        for (&k, c) in &rhs.terms {
            out.add_term(k, c.clone());
        }
        out
    }
}

impl<C: Clone + Num> Sub for &BiPoly<C> {
    type Output = BiPoly<C>;
    fn sub(self, rhs: &BiPoly<C>) -> BiPoly<C> {
        let mut out = self.clone();
        for (&k, c) in &rhs.terms {
            out.add_term(k, C::zero() - c.clone());
        }
        out
    }
}

impl<C: Clone + Num> Mul for &BiPoly<C> {
    type Output = BiPoly<C>;
    fn mul(self, rhs: &BiPoly<C>) -> BiPoly<C> {
        let mut out = BiPoly::zero();
        for (&(i1, j1), c1) in &self.terms {
            for (&(i2, j2), c2) in &rhs.terms {
                out.add_term((i1 + i2, j1 + j2), c1.clone() * c2.clone());
            }
        }
        out
    }
}

impl<C: Clone + Num + fmt::Display> fmt::Display for BiPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(&(i, j), c)| {
                let mut s = format!("({c})");
                if i > 0 {
                    s.push_str(&if i == 1 { "a".to_string() } else { format!("a^{i}") });
                }
                if j > 0 {
                    s.push_str(&if j == 1 { "b".to_string() } else { format!("b^{j}") });
                }
                s
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[derive(Serialize, Deserialize)]
struct BiJson {
    vars: [String; 2],
    terms: Vec<(u32, u32, String)>,
}

impl<C: Clone + Num + fmt::Display + FromStr> BiPoly<C> {
    /// `{"vars":["a","b"],"terms":[[da,db,"c"],...]}` in increasing `(da, db)` order.
    pub fn to_json(&self) -> String {
        let terms = self.terms.iter().map(|(&(i, j), c)| (i, j, c.to_string())).collect();
        serde_json::to_string(&BiJson { vars: ["a".into(), "b".into()], terms }).expect("serializable")
    }

    pub fn from_json(s: &str) -> Result<BiPoly<C>> {
        let raw: BiJson = serde_json::from_str(s).map_err(|e| Error::InvalidArgument(format!("polynomial JSON: {e}")))?;
        let mut p = BiPoly::zero();
        for (i, j, c) in raw.terms {
            let c = c.parse::<C>().map_err(|_| Error::InvalidArgument(format!("bad coefficient '{c}'")))?;
            p.add_term((i, j), c);
        }
        Ok(p)
    }
}
