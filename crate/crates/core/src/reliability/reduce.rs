//! Series and parallel reductions on numeric edge weights.

use std::collections::BTreeMap;

use num_complex::Complex;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::multigraph::Multigraph;
use crate::scalar::{ComplexExt, Real};

fn one_like<R: Real>(z: &Complex<R>) -> Complex<R> {
    let bits = z.precision();
    Complex::new(R::from_f64_prec(1.0, bits), R::from_f64_prec(0.0, bits))
}

fn max_precision<R: Real>(ws: &[Complex<R>]) -> u32 {
    ws.iter().map(ComplexExt::precision).max().unwrap_or(53)
}

/// True when `s` is zero up to a few ulps of `scale`.
fn negligible<R: Real>(s: &Complex<R>, scale: &R, bits: u32) -> bool {
    if s.is_zero() {
        return true;
    }
    let tol = scale.clone() * R::unit_roundoff(bits.saturating_sub(4));
    s.modulus() <= tol
}

/// Weight of a single edge replacing parallel edges: `prod(1 + v_i) - 1`.
pub fn parallel_reduce<R: Real>(ws: &[Complex<R>]) -> Result<Complex<R>> {
    let first = ws.first().ok_or_else(|| Error::InvalidArgument("empty weight list".into()))?;
    let one = one_like(first);
    let mut acc = one.clone();
    for w in ws {
        acc = acc * (one.clone() + w.clone());
    }
    Ok(acc - one)
}

/// Series reduction: `C_G = prefactor * C_G'` with the path replaced by one
/// edge of weight `effective_weight`.
#[derive(Debug, Clone, PartialEq)]
pub struct SeriesReductionResult<R> {
    /// `1 / sum(1 / v_i)`.
    pub effective_weight: Complex<R>,
    /// `sum_j prod_{i != j} v_i`.
    pub prefactor: Complex<R>,
}

pub fn series_reduce<R: Real>(ws: &[Complex<R>]) -> Result<SeriesReductionResult<R>> {
    if ws.is_empty() {
        return Err(Error::InvalidArgument("empty weight list".into()));
    }
    if ws.iter().any(Zero::is_zero) {
        return Err(Error::ZeroWeight);
    }
    let bits = max_precision(ws);
    let one = one_like(&ws[0]);
    let mut recip_sum = Complex::new(R::from_f64_prec(0.0, bits), R::from_f64_prec(0.0, bits));
    let mut scale = R::from_f64_prec(0.0, bits);
    for w in ws {
        let r = one.clone() / w.clone();
        scale = scale + r.modulus();
        recip_sum = recip_sum + r;
    }
    if negligible(&recip_sum, &scale, bits) {
        return Err(Error::VanishingReciprocalSum);
    }
    // prod v_i * sum 1/v_i
    let mut product = one.clone();
    for w in ws {
        product = product * w.clone();
    }
    Ok(SeriesReductionResult { effective_weight: one / recip_sum.clone(), prefactor: product * recip_sum })
}

/// Series weight in the Potts setting: `q / (prod(1 + q / v_i) - 1)`.
pub fn series_reduce_potts<R: Real>(q: &Complex<R>, ws: &[Complex<R>]) -> Result<Complex<R>> {
    if ws.is_empty() {
        return Err(Error::InvalidArgument("empty weight list".into()));
    }
    if q.is_zero() {
        return Err(Error::Pole("q = 0".into()));
    }
    if ws.iter().any(Zero::is_zero) {
        return Err(Error::ZeroWeight);
    }
    let bits = max_precision(ws).max(q.precision());
    let one = one_like(q);
    let mut prod = one.clone();
    let mut scale = R::from_f64_prec(1.0, bits);
    for w in ws {
        let f = one.clone() + q.clone() / w.clone();
        scale = scale * f.modulus();
        prod = prod * f;
    }
    let denom = prod - one;
    if negligible(&denom, &scale, bits) {
        return Err(Error::Pole("vanishing denominator".into()));
    }
    Ok(q.clone() / denom)
}

/// `C_G` at per-edge weights for a connected series-parallel multigraph, by
/// repeatedly removing loops, merging parallel edges, stripping pendant edges
/// and contracting degree-two vertices.
pub fn evaluate_by_reduction<R: Real>(g: &Multigraph, weights: &[Complex<R>]) -> Result<Complex<R>> {
    if weights.len() != g.num_edges() {
        return Err(Error::LengthMismatch { expected: g.num_edges(), got: weights.len() });
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let bits = max_precision(weights);
    let one = Complex::new(R::from_f64_prec(1.0, bits), R::from_f64_prec(0.0, bits));
    let n = g.num_vertices();
    let mut factor = one.clone();
    let mut adj: Vec<BTreeMap<usize, Complex<R>>> = vec![BTreeMap::new(); n];

    fn add_edge<R: Real>(adj: &mut [BTreeMap<usize, Complex<R>>], u: usize, v: usize, w: Complex<R>, one: &Complex<R>) {
        let merged = match adj[u].get(&v) {
            Some(old) => (one.clone() + old.clone()) * (one.clone() + w) - one.clone(),
            None => w,
        };
        adj[u].insert(v, merged.clone());
        adj[v].insert(u, merged);
    }

    for (e, w) in g.edges().iter().zip(weights) {
        if e.is_loop() {
            factor = factor * (one.clone() + w.clone());
        } else {
            add_edge(&mut adj, e.u, e.v, w.clone(), &one);
        }
    }

    let mut alive = n;
    let mut stack: Vec<usize> = (0..n).collect();
    while let Some(x) = stack.pop() {
        if alive <= 1 {
            break;
        }
        match adj[x].len() {
            1 => {
                let (y, w) = adj[x].pop_first().expect("one neighbour");
                adj[y].remove(&x);
                factor = factor * w;
                alive -= 1;
                stack.push(y);
            }
            2 => {
                let (y, wy) = adj[x].pop_first().expect("two neighbours");
                let (z, wz) = adj[x].pop_first().expect("two neighbours");
                adj[y].remove(&x);
                adj[z].remove(&x);
                let sum = wy.clone() + wz.clone();
                if sum.is_zero() {
                    return Err(Error::VanishingReciprocalSum);
                }
                let eff = wy * wz / sum.clone();
                factor = factor * sum;
                add_edge(&mut adj, y, z, eff, &one);
                alive -= 1;
                stack.push(y);
                stack.push(z);
            }
            _ => {}
        }
    }
    if alive > 1 {
        return Err(Error::NotSeriesParallel);
    }
    Ok(factor)
}
