//! Multigraphs with class-labelled edges.
//!
//! Loops and parallel edges are allowed. Every edge carries a small integer
//! class label naming the symbolic weight it receives; labels survive parallel
//! expansion and subdivision so two-class polynomials can be computed on the
//! transformed graphs.

mod minor;
mod series_parallel;
mod text;

pub use minor::{has_k4_topological_minor, MINOR_ORACLE_MAX_VERTICES};
pub use series_parallel::is_series_parallel;
pub use text::{parse_graph, write_graph};

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

pub type ClassLabel = u32;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub class: ClassLabel,
}

impl Edge {
    pub fn new(u: usize, v: usize, class: ClassLabel) -> Self {
        Edge { u, v, class }
    }

    pub fn is_loop(&self) -> bool {
        self.u == self.v
    }
}

/// Vertex count plus an ordered edge list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Multigraph {
    num_vertices: usize,
    edges: Vec<Edge>,
}

impl Multigraph {
    pub fn new(num_vertices: usize, edges: Vec<Edge>) -> Result<Self> {
        for (i, e) in edges.iter().enumerate() {
            for x in [e.u, e.v] {
                if x >= num_vertices {
                    return Err(Error::VertexOutOfRange { edge: i, vertex: x, num_vertices });
                }
            }
        }
        Ok(Multigraph { num_vertices, edges })
    }

    pub fn empty(num_vertices: usize) -> Self {
        Multigraph { num_vertices, edges: Vec::new() }
    }

    pub fn num_vertices(&self) -> usize {
        self.num_vertices
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Distinct class labels in increasing order.
    pub fn classes(&self) -> Vec<ClassLabel> {
        self.edges.iter().map(|e| e.class).collect::<BTreeSet<_>>().into_iter().collect()
    }

    pub fn class_count(&self, class: ClassLabel) -> usize {
        self.edges.iter().filter(|e| e.class == class).count()
    }

    /// Degree counting a loop twice.
    pub fn degree(&self, x: usize) -> usize {
        self.edges.iter().map(|e| (e.u == x) as usize + (e.v == x) as usize).sum()
    }

    pub fn has_loops(&self) -> bool {
        self.edges.iter().any(Edge::is_loop)
    }

    pub fn without_loops(&self) -> Multigraph {
        Multigraph {
            num_vertices: self.num_vertices,
            edges: self.edges.iter().copied().filter(|e| !e.is_loop()).collect(),
        }
    }

    /// Same graph with every edge relabelled to `class`.
    pub fn with_uniform_class(&self, class: ClassLabel) -> Multigraph {
        Multigraph {
            num_vertices: self.num_vertices,
            edges: self.edges.iter().map(|e| Edge { class, ..*e }).collect(),
        }
    }

    /// Subgraph spanned by the edges of one class (all vertices kept).
    pub fn class_subgraph(&self, class: ClassLabel) -> Multigraph {
        Multigraph {
            num_vertices: self.num_vertices,
            edges: self.edges.iter().copied().filter(|e| e.class == class).collect(),
        }
    }

    /// Number of connected components, isolated vertices included.
    pub fn num_components(&self) -> usize {
        let mut uf = UnionFind::new(self.num_vertices);
        for e in &self.edges {
            uf.union(e.u, e.v);
        }
        uf.components()
    }

    pub fn is_connected(&self) -> bool {
        self.num_vertices == 0 || self.num_components() == 1
    }
}

impl fmt::Display for Multigraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&write_graph(self))
    }
}

/// Per-edge subdivision counts `s_e >= 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubdivisionVector(Vec<u32>);

impl SubdivisionVector {
    pub fn new(counts: Vec<u32>) -> Result<Self> {
        if let Some(i) = counts.iter().position(|&s| s == 0) {
            return Err(Error::InvalidArgument(format!("subdivision count of edge {i} is zero")));
        }
        Ok(SubdivisionVector(counts))
    }

    pub fn uniform(num_edges: usize, s: u32) -> Result<Self> {
        Self::new(vec![s; num_edges])
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }
}

/// Per-edge parallel multiplicities `m_e >= 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiplicityVector(Vec<u32>);

impl MultiplicityVector {
    pub fn new(counts: Vec<u32>) -> Result<Self> {
        if let Some(i) = counts.iter().position(|&m| m == 0) {
            return Err(Error::InvalidArgument(format!("multiplicity of edge {i} is zero")));
        }
        Ok(MultiplicityVector(counts))
    }

    pub fn uniform(num_edges: usize, m: u32) -> Result<Self> {
        Self::new(vec![m; num_edges])
    }

    /// Multiplicity chosen per class label: `p1` for class 0, `p2` for every other class.
    pub fn two_class(g: &Multigraph, p1: u32, p2: u32) -> Result<Self> {
        Self::new(g.edges().iter().map(|e| if e.class == 0 { p1 } else { p2 }).collect())
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }
}

pub fn complete_graph(n: usize) -> Result<Multigraph> {
    if n == 0 {
        return Err(Error::InvalidArgument("complete graph needs at least one vertex".into()));
    }
    let mut edges = Vec::with_capacity(n * (n - 1) / 2);
    for u in 0..n {
        for v in u + 1..n {
            edges.push(Edge::new(u, v, 0));
        }
    }
    Multigraph::new(n, edges)
}

/// `C_n`; `n = 1` is a single loop and `n = 2` a doubled edge.
pub fn cycle_graph(n: usize) -> Result<Multigraph> {
    if n == 0 {
        return Err(Error::InvalidArgument("cycle needs at least one vertex".into()));
    }
    let edges = (0..n).map(|i| Edge::new(i, (i + 1) % n, 0)).collect();
    Multigraph::new(n, edges)
}

/// Two vertices joined by `n` parallel edges.
pub fn parallel_bundle_graph(n: usize) -> Result<Multigraph> {
    if n == 0 {
        return Err(Error::InvalidArgument("bundle needs at least one edge".into()));
    }
    Multigraph::new(2, vec![Edge::new(0, 1, 0); n])
}

/// The five ways of splitting the edges of `K4` into two weight classes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum K4Case {
    /// One edge in class 0.
    A,
    /// Two vertex-disjoint edges in class 0.
    B,
    /// Two edges sharing a vertex in class 0.
    C,
    /// A 3-star in class 0; the complementary triangle in class 1.
    D,
    /// A three-edge path in class 0; the complementary path in class 1.
    E,
}

impl K4Case {
    pub const ALL: [K4Case; 5] = [K4Case::A, K4Case::B, K4Case::C, K4Case::D, K4Case::E];

    fn class_zero_edges(self) -> &'static [(usize, usize)] {
        match self {
            K4Case::A => &[(0, 1)],
            K4Case::B => &[(0, 1), (2, 3)],
            K4Case::C => &[(0, 1), (0, 2)],
            K4Case::D => &[(0, 1), (0, 2), (0, 3)],
            K4Case::E => &[(0, 1), (1, 2), (2, 3)],
        }
    }

    pub fn letter(self) -> char {
        match self {
            K4Case::A => 'a',
            K4Case::B => 'b',
            K4Case::C => 'c',
            K4Case::D => 'd',
            K4Case::E => 'e',
        }
    }
}

impl FromStr for K4Case {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "a" => Ok(K4Case::A),
            "b" => Ok(K4Case::B),
            "c" => Ok(K4Case::C),
            "d" => Ok(K4Case::D),
            "e" => Ok(K4Case::E),
            other => Err(Error::InvalidArgument(format!("unknown K4 case '{other}'"))),
        }
    }
}

impl fmt::Display for K4Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// `K4` with class-0 (weight `a`) and class-1 (weight `b`) edges per `case`.
pub fn k4_two_class(case: K4Case) -> Multigraph {
    let marked = case.class_zero_edges();
    let edges = complete_graph(4)
        .expect("K4")
        .edges
        .into_iter()
        .map(|e| Edge { class: if marked.contains(&(e.u, e.v)) { 0 } else { 1 }, ..e })
        .collect();
    Multigraph { num_vertices: 4, edges }
}

/// `K6` with two vertex-disjoint triangles in class 0 and the other nine edges in class 1.
pub fn k6_disjoint_triangles() -> Multigraph {
    let side = |x: usize| x / 3;
    let edges = complete_graph(6)
        .expect("K6")
        .edges
        .into_iter()
        .map(|e| Edge { class: if side(e.u) == side(e.v) { 0 } else { 1 }, ..e })
        .collect();
    Multigraph { num_vertices: 6, edges }
}

/// Replaces edge `e` by `m_e` parallel copies, keeping edge order.
pub fn parallel_expand(g: &Multigraph, m: &MultiplicityVector) -> Result<Multigraph> {
    if m.as_slice().len() != g.num_edges() {
        return Err(Error::LengthMismatch { expected: g.num_edges(), got: m.as_slice().len() });
    }
    let mut edges = Vec::with_capacity(m.as_slice().iter().map(|&x| x as usize).sum());
    for (e, &k) in g.edges.iter().zip(m.as_slice()) {
        edges.extend(std::iter::repeat_n(*e, k as usize));
    }
    Ok(Multigraph { num_vertices: g.num_vertices, edges })
}

/// Replaces each edge `e` by a path of `s_e` edges through fresh vertices,
/// which are numbered after the existing ones in edge order.
pub fn subdivide(g: &Multigraph, s: &SubdivisionVector) -> Result<Multigraph> {
    if s.as_slice().len() != g.num_edges() {
        return Err(Error::LengthMismatch { expected: g.num_edges(), got: s.as_slice().len() });
    }
    let mut next = g.num_vertices;
    let mut edges = Vec::with_capacity(s.as_slice().iter().map(|&x| x as usize).sum());
    for (e, &k) in g.edges.iter().zip(s.as_slice()) {
        let mut prev = e.u;
        for _ in 1..k {
            edges.push(Edge::new(prev, next, e.class));
            prev = next;
            next += 1;
        }
        edges.push(Edge::new(prev, e.v, e.class));
    }
    Ok(Multigraph { num_vertices: next, edges })
}

/// Disjoint-set forest with path halving and union by size.
#[derive(Debug, Clone)]
pub struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
    components: usize,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect(), size: vec![1; n], components: n }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns true if `a` and `b` were in different sets.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
        self.components -= 1;
        true
    }

    pub fn components(&self) -> usize {
        self.components
    }
}
