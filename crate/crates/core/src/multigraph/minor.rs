//! Brute-force search for a subdivision of `K4` inside a small graph.
//!
//! This is a correctness oracle for [`super::is_series_parallel`] and shares
//! no code with it.

use crate::error::{Error, Result};

use super::Multigraph;

pub const MINOR_ORACLE_MAX_VERTICES: usize = 10;

const PAIRS: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

/// True iff some subgraph of `g` is a subdivision of `K4`: four branch
/// vertices joined pairwise by six internally vertex-disjoint paths.
pub fn has_k4_topological_minor(g: &Multigraph) -> Result<bool> {
    let n = g.num_vertices();
    if n > MINOR_ORACLE_MAX_VERTICES {
        return Err(Error::CapabilityExceeded(format!(
            "K4 minor oracle handles at most {MINOR_ORACLE_MAX_VERTICES} vertices, got {n}"
        )));
    }
    let mut adj = vec![0u32; n];
    for e in g.edges() {
        if !e.is_loop() {
            adj[e.u] |= 1 << e.v;
            adj[e.v] |= 1 << e.u;
        }
    }
    let candidates: Vec<usize> = (0..n).filter(|&x| adj[x].count_ones() >= 3).collect();
    let k = candidates.len();
    for i in 0..k {
        for j in i + 1..k {
            for l in j + 1..k {
                for m in l + 1..k {
                    let branch = [candidates[i], candidates[j], candidates[l], candidates[m]];
                    let mut used = branch.iter().fold(0u32, |acc, &b| acc | 1 << b);
                    if route(&adj, &branch, 0, &mut used) {
                        return Ok(true);
                    }
                }
            }
        }
    }
    Ok(false)
}

fn route(adj: &[u32], branch: &[usize; 4], pair: usize, used: &mut u32) -> bool {
    if pair == PAIRS.len() {
        return true;
    }
    let (s, t) = (branch[PAIRS[pair].0], branch[PAIRS[pair].1]);
    let mut path_mask = 0u32;
    extend_path(adj, branch, pair, s, t, used, &mut path_mask)
}

/// Depth-first enumeration of simple paths from `at` to `target` whose
/// interior avoids `used`; each complete path recurses into the next pair.
fn extend_path(
    adj: &[u32],
    branch: &[usize; 4],
    pair: usize,
    at: usize,
    target: usize,
    used: &mut u32,
    interior: &mut u32,
) -> bool {
    if adj[at] & (1 << target) != 0 {
        // direct edge closes the path; the interior is already reserved
        if route(adj, branch, pair + 1, used) {
            return true;
        }
    }
    let mut next = adj[at] & !*used;
    while next != 0 {
        let x = next.trailing_zeros() as usize;
        next &= next - 1;
        *used |= 1 << x;
        *interior |= 1 << x;
        if extend_path(adj, branch, pair, x, target, used, interior) {
            return true;
        }
        *used &= !(1 << x);
        *interior &= !(1 << x);
    }
    false
}
