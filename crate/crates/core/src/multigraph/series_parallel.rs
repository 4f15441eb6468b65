use std::collections::{BTreeSet, VecDeque};

use super::Multigraph;

/// Decides whether the underlying loopless graph of `g` is series-parallel,
/// i.e. obtainable from a forest by series and parallel edge extensions.
///
/// Loops are dropped and parallel edges merged as the adjacency sets are
/// built. Vertices of degree at most one are deleted and degree-two vertices
/// are suppressed until no rule applies; the graph is series-parallel iff no
/// edge survives. Disconnected graphs are handled componentwise by the same
/// rules.
pub fn is_series_parallel(g: &Multigraph) -> bool {
    let n = g.num_vertices();
    let mut adj: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n];
    for e in g.edges() {
        if !e.is_loop() {
            adj[e.u].insert(e.v);
            adj[e.v].insert(e.u);
        }
    }
    let mut alive = vec![true; n];
    let mut queue: VecDeque<usize> = (0..n).filter(|&x| adj[x].len() <= 2).collect();
    let mut queued: Vec<bool> = (0..n).map(|x| adj[x].len() <= 2).collect();

    while let Some(w) = queue.pop_front() {
        queued[w] = false;
        if !alive[w] {
            continue;
        }
        match adj[w].len() {
            0 | 1 => {
                alive[w] = false;
                let nbrs: Vec<_> = std::mem::take(&mut adj[w]).into_iter().collect();
                for x in nbrs {
                    adj[x].remove(&w);
                    if adj[x].len() <= 2 && !queued[x] {
                        queued[x] = true;
                        queue.push_back(x);
                    }
                }
            }
            2 => {
                let mut it = adj[w].iter().copied();
                let (x, y) = (it.next().unwrap(), it.next().unwrap());
                alive[w] = false;
                adj[w].clear();
                adj[x].remove(&w);
                adj[y].remove(&w);
                // a new x-y edge that duplicates an existing one is merged
                adj[x].insert(y);
                adj[y].insert(x);
                for z in [x, y] {
                    if adj[z].len() <= 2 && !queued[z] {
                        queued[z] = true;
                        queue.push_back(z);
                    }
                }
            }
            _ => {}
        }
    }
    adj.iter().all(BTreeSet::is_empty)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multigraph::*;

    #[test]
    fn k4_is_not_series_parallel() {
        assert!(!is_series_parallel(&complete_graph(4).unwrap()));
    }

    #[test]
    fn cycles_are_series_parallel() {
        for n in 1..12 {
            assert!(is_series_parallel(&cycle_graph(n).unwrap()), "C_{n}");
        }
    }

    #[test]
    fn forests_are_series_parallel() {
        let path = Multigraph::new(5, (0..4).map(|i| Edge::new(i, i + 1, 0)).collect()).unwrap();
        assert!(is_series_parallel(&path));
        let star = Multigraph::new(6, (1..6).map(|i| Edge::new(0, i, 0)).collect()).unwrap();
        assert!(is_series_parallel(&star));
        let forest = Multigraph::new(7, vec![Edge::new(0, 1, 0), Edge::new(2, 3, 0), Edge::new(3, 4, 0)]).unwrap();
        assert!(is_series_parallel(&forest));
        assert!(is_series_parallel(&Multigraph::empty(3)));
    }

    #[test]
    fn complete_graphs() {
        for n in 1..=7 {
            assert_eq!(is_series_parallel(&complete_graph(n).unwrap()), n <= 3, "K_{n}");
        }
    }

    #[test]
    fn k4_subdivisions_and_expansions_stay_non_sp() {
        let k4 = complete_graph(4).unwrap();
        let sub = subdivide(&k4, &SubdivisionVector::new(vec![1, 3, 1, 2, 1, 1]).unwrap()).unwrap();
        assert!(!is_series_parallel(&sub));
        let par = parallel_expand(&k4, &MultiplicityVector::new(vec![2, 1, 3, 1, 1, 4]).unwrap()).unwrap();
        assert!(!is_series_parallel(&par));
    }

    #[test]
    fn disconnected_with_k4_component_is_not_sp() {
        let mut edges = complete_graph(4).unwrap().edges().to_vec();
        edges.push(Edge::new(4, 5, 0));
        edges.push(Edge::new(5, 5, 0));
        assert!(!is_series_parallel(&Multigraph::new(6, edges).unwrap()));
    }

    #[test]
    fn loops_and_multi_edges_ignored() {
        let mut edges = vec![Edge::new(0, 0, 0), Edge::new(0, 1, 0), Edge::new(0, 1, 1), Edge::new(1, 1, 0)];
        edges.push(Edge::new(1, 2, 0));
        edges.push(Edge::new(2, 0, 0));
        assert!(is_series_parallel(&Multigraph::new(3, edges).unwrap()));
    }
}
