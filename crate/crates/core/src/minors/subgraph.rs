//! Subgraph monomorphism and isomorphism by degree-pruned backtracking.

use super::Search;
use crate::graph::Graph;
use crate::limits::{Limits, Meter};

/// An injective map from `V(h)` to `V(g)` carrying edges to edges.
pub fn has_subgraph(g: &Graph, h: &Graph, limits: &Limits) -> Search<Vec<usize>> {
    embed(g, h, false, limits)
}

/// `Some(true)` if isomorphic, `Some(false)` if not, `None` if the search
/// ran out of budget.
pub fn isomorphic(a: &Graph, b: &Graph, limits: &Limits) -> Option<bool> {
    if a.n() != b.n() || a.edge_count() != b.edge_count() {
        return Some(false);
    }
    let mut da: Vec<usize> = (0..a.n()).map(|v| a.degree(v)).collect();
    let mut db: Vec<usize> = (0..b.n()).map(|v| b.degree(v)).collect();
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return Some(false);
    }
    match embed(a, b, true, limits) {
        Search::Found(_) => Some(true),
        Search::Absent => Some(false),
        Search::Indeterminate => None,
    }
}

fn embed(g: &Graph, h: &Graph, exact_degree: bool, limits: &Limits) -> Search<Vec<usize>> {
    if h.n() > g.n() || h.edge_count() > g.edge_count() {
        return Search::Absent;
    }
    let order = order_by_connectivity(h);
    let mut st = Embed {
        g,
        h,
        exact_degree,
        order,
        image: vec![usize::MAX; h.n()],
        used: vec![false; g.n()],
        meter: limits.search_meter(),
    };
    if st.extend(0) {
        Search::Found(st.image)
    } else if st.meter.exhausted() {
        Search::Indeterminate
    } else {
        Search::Absent
    }
}

fn order_by_connectivity(h: &Graph) -> Vec<usize> {
    let n = h.n();
    let mut placed = vec![false; n];
    let mut weight = vec![0usize; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let best = (0..n)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| (weight[v], h.degree(v), std::cmp::Reverse(v)))
            .expect("an unplaced vertex remains");
        placed[best] = true;
        order.push(best);
        for &w in h.neighbours(best) {
            weight[w] += 1;
        }
    }
    order
}

struct Embed<'a> {
    g: &'a Graph,
    h: &'a Graph,
    exact_degree: bool,
    order: Vec<usize>,
    image: Vec<usize>,
    used: Vec<bool>,
    meter: Meter,
}

impl Embed<'_> {
    fn extend(&mut self, idx: usize) -> bool {
        if !self.meter.tick() {
            return false;
        }
        if idx == self.order.len() {
            return true;
        }
        let x = self.order[idx];
        let mapped: Vec<usize> = self
            .h
            .neighbours(x)
            .iter()
            .filter(|&&y| self.image[y] != usize::MAX)
            .map(|&y| self.image[y])
            .collect();
        let candidates: Vec<usize> = match mapped.first() {
            Some(&anchor) => self.g.neighbours(anchor).to_vec(),
            None => (0..self.g.n()).collect(),
        };
        for v in candidates {
            if self.used[v] {
                continue;
            }
            let dv = self.g.degree(v);
            let dx = self.h.degree(x);
            if dv < dx || (self.exact_degree && dv != dx) {
                continue;
            }
            if !mapped.iter().all(|&u| self.g.has_edge(u, v)) {
                continue;
            }
            self.image[x] = v;
            self.used[v] = true;
            if self.extend(idx + 1) {
                return true;
            }
            self.used[v] = false;
            self.image[x] = usize::MAX;
            if self.meter.exhausted() {
                return false;
            }
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::x_plus;

    fn lim() -> Limits {
        Limits::default()
    }

    #[test]
    fn containment() {
        let g = x_plus(&Graph::complete(2), 2, 2).unwrap().graph;
        let map = has_subgraph(&g, &Graph::complete_bipartite(2, 3), &lim()).into_found().unwrap();
        for (a, b) in Graph::complete_bipartite(2, 3).edges() {
            assert!(g.has_edge(map[a], map[b]));
        }
        assert!(has_subgraph(&Graph::complete(4), &Graph::star(3), &lim()).is_found());
        assert!(has_subgraph(&Graph::cycle(4), &Graph::complete(3), &lim()).is_absent());
    }

    #[test]
    fn isomorphism() {
        let c6 = Graph::cycle(6);
        let relabelled = Graph::new(6, &[(0, 3), (3, 1), (1, 4), (4, 2), (2, 5), (5, 0)]).unwrap();
        assert_eq!(isomorphic(&c6, &relabelled, &lim()), Some(true));
        let two_triangles = Graph::complete(3).copies(2);
        assert_eq!(isomorphic(&c6, &two_triangles, &lim()), Some(false));
    }
}
