//! Subset enumeration of connected spanning subgraphs.

use num_bigint::BigInt;
use num_complex::Complex;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::multigraph::Multigraph;
use crate::scalar::Real;

/// Largest edge count accepted by the enumerators (`2^24` subsets).
pub const ENUMERATION_MAX_EDGES: usize = 24;

const CHUNK_BITS: usize = 12;

pub(crate) fn check_enumerable(g: &Multigraph) -> Result<()> {
    if g.num_edges() > ENUMERATION_MAX_EDGES {
        return Err(Error::CapabilityExceeded(format!(
            "enumeration handles at most {ENUMERATION_MAX_EDGES} edges, got {}",
            g.num_edges()
        )));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(())
}

/// Compact edge list for the inner loop; loops are kept as `u == v`.
struct Frame {
    n: usize,
    ends: Vec<(u8, u8)>,
}

impl Frame {
    fn new(g: &Multigraph) -> Self {
        Frame { n: g.num_vertices(), ends: g.edges().iter().map(|e| (e.u as u8, e.v as u8)).collect() }
    }

    fn spans_connected(&self, subset: u32) -> bool {
        if self.n <= 1 {
            return true;
        }
        if (subset.count_ones() as usize) < self.n - 1 {
            return false;
        }
        let mut parent = [0u8; 32];
        for (i, p) in parent.iter_mut().enumerate().take(self.n) {
            *p = i as u8;
        }
        fn find(parent: &mut [u8; 32], mut x: u8) -> u8 {
            while parent[x as usize] != x {
                parent[x as usize] = parent[parent[x as usize] as usize];
                x = parent[x as usize];
            }
            x
        }
        let mut components = self.n;
        let mut rest = subset;
        while rest != 0 {
            let i = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let (u, v) = self.ends[i];
            let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
            if ru != rv {
                parent[ru as usize] = rv;
                components -= 1;
                if components == 1 {
                    return true;
                }
            }
        }
        components == 1
    }
}

/// `counts[i][j]` = number of connected spanning subgraphs using `i` edges
/// from `mask_a` and `j` edges outside it.
pub(crate) fn class_histogram(g: &Multigraph, mask_a: u32) -> Result<Vec<Vec<u64>>> {
    check_enumerable(g)?;
    let m = g.num_edges();
    let frame = Frame::new(g);
    let na = mask_a.count_ones() as usize;
    let nb = m - na;
    let empty = vec![vec![0u64; nb + 1]; na + 1];
    let low_bits = m.min(CHUNK_BITS);
    let chunks: u32 = 1 << (m - low_bits);
    let hist = (0..chunks)
        .into_par_iter()
        .fold(
            || empty.clone(),
            |mut acc, hi| {
                let base = hi << low_bits;
                for lo in 0..(1u32 << low_bits) {
                    let s = base | lo;
                    if frame.spans_connected(s) {
                        let i = (s & mask_a).count_ones() as usize;
                        let j = (s & !mask_a).count_ones() as usize;
                        acc[i][j] += 1;
                    }
                }
                acc
            },
        )
        .reduce(
            || empty.clone(),
            |mut a, b| {
                for (ra, rb) in a.iter_mut().zip(b) {
                    for (x, y) in ra.iter_mut().zip(rb) {
                        *x += y;
                    }
                }
                a
            },
        );
    Ok(hist)
}

pub(crate) fn histogram_to_bigint(h: Vec<Vec<u64>>) -> Vec<Vec<BigInt>> {
    h.into_iter().map(|row| row.into_iter().map(BigInt::from).collect()).collect()
}

/// `C_G` at per-edge weights by direct summation over connected spanning subgraphs.
pub fn connected_sum_per_edge<R: Real>(g: &Multigraph, weights: &[Complex<R>]) -> Result<Complex<R>> {
    check_enumerable(g)?;
    if weights.len() != g.num_edges() {
        return Err(Error::LengthMismatch { expected: g.num_edges(), got: weights.len() });
    }
    let frame = Frame::new(g);
    let bits = weights.iter().map(|w| w.re.precision().max(w.im.precision())).max().unwrap_or(53);
    let zero = Complex::new(R::from_f64_prec(0.0, bits), R::from_f64_prec(0.0, bits));
    let one = Complex::new(R::from_f64_prec(1.0, bits), R::from_f64_prec(0.0, bits));
    let mut total = zero;
    for s in 0..(1u64 << g.num_edges()) {
        let s = s as u32;
        if frame.spans_connected(s) {
            let mut term = one.clone();
            let mut rest = s;
            while rest != 0 {
                let i = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                term = term * weights[i].clone();
            }
            total = total + term;
        }
    }
    Ok(total)
}

/// All-terminal reliability at per-edge operating probabilities, summed
/// directly over the operational edge sets.
pub fn reliability_per_edge<R: Real>(g: &Multigraph, probs: &[Complex<R>]) -> Result<Complex<R>> {
    check_enumerable(g)?;
    if probs.len() != g.num_edges() {
        return Err(Error::LengthMismatch { expected: g.num_edges(), got: probs.len() });
    }
    let frame = Frame::new(g);
    let bits = probs.iter().map(|w| w.re.precision().max(w.im.precision())).max().unwrap_or(53);
    let one = Complex::new(R::from_f64_prec(1.0, bits), R::from_f64_prec(0.0, bits));
    let mut total = Complex::new(R::from_f64_prec(0.0, bits), R::from_f64_prec(0.0, bits));
    for s in 0..(1u64 << g.num_edges()) {
        let s = s as u32;
        if frame.spans_connected(s) {
            let mut term = one.clone();
            for (i, p) in probs.iter().enumerate() {
                term = if s >> i & 1 == 1 { term * p.clone() } else { term * (one.clone() - p.clone()) };
            }
            total = total + term;
        }
    }
    Ok(total)
}
