//! Seeded graph families for the suites.

use crate::graph::{Builder, Graph};
use crate::rng::SplitMix64;

/// `g` with vertices permuted uniformly at random.
pub fn relabel_randomly(g: &Graph, rng: &mut SplitMix64) -> Graph {
    let n = g.n();
    let mut perm: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        let j = rng.below(i + 1);
        perm.swap(i, j);
    }
    let edges: Vec<(usize, usize)> = g.edges().into_iter().map(|(u, v)| (perm[u], perm[v])).collect();
    Graph::new(n, &edges).expect("permutation keeps edges valid")
}

/// Disjoint paths with random lengths, `n` vertices in total.
pub fn path_forest(n: usize, rng: &mut SplitMix64) -> Graph {
    let mut b = Builder::new(0);
    let mut left = n;
    while left > 0 {
        let len = rng.range(1, left);
        b.append(&Graph::path(len));
        left -= len;
    }
    relabel_randomly(&b.build(), rng)
}

/// Disjoint paths and cycles, `n` vertices in total.
pub fn path_cycle_forest(n: usize, rng: &mut SplitMix64) -> Graph {
    let mut b = Builder::new(0);
    let mut left = n;
    while left > 0 {
        let len = rng.range(1, left);
        if len >= 3 && rng.below(2) == 0 {
            b.append(&Graph::cycle(len));
        } else {
            b.append(&Graph::path(len));
        }
        left -= len;
    }
    relabel_randomly(&b.build(), rng)
}

/// Random tree on `n` vertices in which no vertex exceeds degree `max_degree`
/// (at least 2). Each new vertex attaches to a uniform vertex with spare
/// degree.
pub fn bounded_degree_tree(n: usize, max_degree: usize, rng: &mut SplitMix64) -> Graph {
    assert!(max_degree >= 2);
    let mut degree = vec![0usize; n];
    let mut edges = Vec::with_capacity(n.saturating_sub(1));
    for v in 1..n {
        let open: Vec<usize> = (0..v).filter(|&u| degree[u] < max_degree).collect();
        let u = open[rng.below(open.len())];
        degree[u] += 1;
        degree[v] += 1;
        edges.push((u, v));
    }
    Graph::new(n, &edges).expect("tree edges are valid")
}

/// `t` triangles sharing vertex `0`; `t = 2` is the bowtie.
pub fn friendship(t: usize) -> Graph {
    let mut edges = Vec::with_capacity(3 * t);
    for i in 0..t {
        let (a, b) = (2 * i + 1, 2 * i + 2);
        edges.extend([(0, a), (0, b), (a, b)]);
    }
    Graph::new(2 * t + 1, &edges).expect("friendship edges are valid")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shapes() {
        let mut rng = SplitMix64::new(7);
        let f = path_forest(12, &mut rng);
        assert_eq!(f.n(), 12);
        assert!(f.max_degree() <= 2);
        assert_eq!(f.edge_count() + f.connected_components().len(), 12);
        let t = bounded_degree_tree(30, 3, &mut rng);
        assert!(t.is_connected() && t.edge_count() == 29 && t.max_degree() <= 3);
        let bowtie = friendship(2);
        assert_eq!((bowtie.n(), bowtie.edge_count()), (5, 6));
        assert_eq!(bowtie.cut_vertices(), vec![0]);
    }
}
