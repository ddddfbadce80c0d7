use std::collections::VecDeque;

use super::Graph;
use crate::error::{input, Error, Result};

/// Partition of a connected graph by distance from a root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BfsLayering {
    pub root: usize,
    /// Distance from the root, in edges.
    pub layer: Vec<usize>,
    /// `layers[i]` holds the vertices at distance `i`, ascending.
    pub layers: Vec<Vec<usize>>,
    /// BFS-tree parent, the least-index neighbour one layer closer.
    pub parent: Vec<Option<usize>>,
}

pub fn bfs_layering(g: &Graph, root: usize) -> Result<BfsLayering> {
    if root >= g.n() {
        return input(format!("root {root} out of range"));
    }
    let mut layer = vec![usize::MAX; g.n()];
    let mut parent = vec![None; g.n()];
    layer[root] = 0;
    let mut queue = VecDeque::from([root]);
    while let Some(u) = queue.pop_front() {
        for &w in g.neighbours(u) {
            if layer[w] == usize::MAX {
                layer[w] = layer[u] + 1;
                queue.push_back(w);
            }
        }
    }
    if let Some(unreached) = layer.iter().position(|&d| d == usize::MAX) {
        return Err(Error::Disconnected { root, unreached });
    }
    let depth = layer.iter().copied().max().unwrap_or(0);
    let mut layers = vec![Vec::new(); depth + 1];
    for (v, &d) in layer.iter().enumerate() {
        layers[d].push(v);
        if d > 0 {
            parent[v] = g.neighbours(v).iter().copied().find(|&w| layer[w] + 1 == d);
        }
    }
    Ok(BfsLayering { root, layer, layers, parent })
}

impl BfsLayering {
    /// Path from `v` back to the root following BFS parents, `v` first.
    pub fn path_to_root(&self, v: usize) -> Vec<usize> {
        let mut out = vec![v];
        let mut x = v;
        while let Some(p) = self.parent[x] {
            out.push(p);
            x = p;
        }
        out
    }

    /// All vertices in layers `0..i`.
    pub fn prefix(&self, i: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self.layers[..i.min(self.layers.len())].concat();
        out.sort_unstable();
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_layers() {
        let l = bfs_layering(&Graph::path(4), 0).unwrap();
        assert_eq!(l.layers, vec![vec![0], vec![1], vec![2], vec![3]]);
    }

    #[test]
    fn clique_layers() {
        let l = bfs_layering(&Graph::complete(4), 0).unwrap();
        assert_eq!(l.layers, vec![vec![0], vec![1, 2, 3]]);
    }

    #[test]
    fn six_cycle_layers() {
        let l = bfs_layering(&Graph::cycle(6), 0).unwrap();
        assert_eq!(l.layers, vec![vec![0], vec![1, 5], vec![2, 4], vec![3]]);
        assert_eq!(l.path_to_root(3), vec![3, 2, 1, 0]);
    }

    #[test]
    fn disconnected_names_unreached_vertex() {
        let g = Graph::new(3, &[(0, 1)]).unwrap();
        match bfs_layering(&g, 0) {
            Err(Error::Disconnected { unreached, .. }) => assert_eq!(unreached, 2),
            other => panic!("unexpected {other:?}"),
        }
    }
}
