#![allow(dead_code)]

use rand::Rng;
use relpoly::multigraph::{Edge, Multigraph};
use relpoly::{Complex, ComplexExt, MpReal};

/// Grows a connected series-parallel multigraph with exactly `num_edges`
/// edges from a single edge by random series, parallel and pendant steps.
pub fn random_sp_graph<R: Rng>(rng: &mut R, num_edges: usize) -> Multigraph {
    let mut n = 2;
    let mut edges = vec![(0usize, 1usize)];
    while edges.len() < num_edges {
        let i = rng.gen_range(0..edges.len());
        match rng.gen_range(0..3) {
            0 => {
                let (u, v) = edges[i];
                edges[i] = (u, n);
                edges.push((n, v));
                n += 1;
            }
            1 => edges.push(edges[i]),
            _ => {
                let u = rng.gen_range(0..n);
                edges.push((u, n));
                n += 1;
            }
        }
    }
    Multigraph::new(n, edges.into_iter().map(|(u, v)| Edge::new(u, v, 0)).collect()).unwrap()
}

/// Random connected loopless multigraph: a random spanning tree plus extra edges.
pub fn random_connected_graph<R: Rng>(rng: &mut R, n: usize, extra: usize) -> Multigraph {
    let mut edges = Vec::new();
    for v in 1..n {
        edges.push(Edge::new(rng.gen_range(0..v), v, 0));
    }
    for _ in 0..extra {
        let u = rng.gen_range(0..n);
        let mut v = rng.gen_range(0..n);
        while v == u {
            v = rng.gen_range(0..n);
        }
        edges.push(Edge::new(u, v, 0));
    }
    Multigraph::new(n, edges).unwrap()
}

pub fn random_weight<R: Rng>(rng: &mut R, bits: u32) -> Complex<MpReal> {
    Complex::<MpReal>::from_f64_prec(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0), bits)
}
