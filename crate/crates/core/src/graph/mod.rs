//! Simple undirected graphs on dense vertex indices, plus the traversal and
//! decomposition routines the colouring algorithms are built from.

mod blocks;
mod io;
mod layering;
mod tree;
mod width;

pub use blocks::{block_decomposition, BlockForest};
pub use layering::{bfs_layering, BfsLayering};
pub use tree::RootedTree;
pub use width::{connected_tree_depth, tree_depth, treewidth_exact};

use std::collections::VecDeque;

use crate::error::{input, Result};

/// A simple undirected graph with vertices `0..n`.
///
/// Adjacency lists are kept sorted and symmetric; there are no loops or
/// parallel edges.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

/// Mutable edge accumulator used by the generators. Duplicates are collapsed
/// when the graph is finalised.
#[derive(Clone, Debug, Default)]
pub(crate) struct Builder {
    adj: Vec<Vec<usize>>,
}

impl Builder {
    pub(crate) fn new(n: usize) -> Self {
        Self { adj: vec![Vec::new(); n] }
    }

    pub(crate) fn add_vertex(&mut self) -> usize {
        self.adj.push(Vec::new());
        self.adj.len() - 1
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.adj.len() && v < self.adj.len());
        self.adj[u].push(v);
        self.adj[v].push(u);
    }

    /// Copies `g` in with its vertices shifted to the end; returns the offset.
    pub(crate) fn append(&mut self, g: &Graph) -> usize {
        let offset = self.adj.len();
        self.adj.extend((0..g.n()).map(|_| Vec::new()));
        for (u, v) in g.edges() {
            self.add_edge(u + offset, v + offset);
        }
        offset
    }

    pub(crate) fn build(mut self) -> Graph {
        for list in &mut self.adj {
            list.sort_unstable();
            list.dedup();
        }
        Graph { adj: self.adj }
    }
}

impl Graph {
    /// Builds a graph from an edge list, collapsing duplicate pairs.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut b = Builder::new(n);
        for &(u, v) in edges {
            if u >= n || v >= n {
                return input(format!("edge ({u}, {v}) has an endpoint outside 0..{n}"));
            }
            if u == v {
                return input(format!("self-loop at vertex {u}"));
            }
            b.add_edge(u, v);
        }
        Ok(b.build())
    }

    pub fn edgeless(n: usize) -> Self {
        Builder::new(n).build()
    }

    /// Path on `n` vertices `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Self {
        let mut b = Builder::new(n);
        for i in 1..n {
            b.add_edge(i - 1, i);
        }
        b.build()
    }

    /// Cycle on `n >= 3` vertices in index order.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least three vertices");
        let mut b = Builder::new(n);
        for i in 0..n {
            b.add_edge(i, (i + 1) % n);
        }
        b.build()
    }

    pub fn complete(n: usize) -> Self {
        let mut b = Builder::new(n);
        for u in 0..n {
            for v in u + 1..n {
                b.add_edge(u, v);
            }
        }
        b.build()
    }

    /// The star `K_{1,n}` with centre 0.
    pub fn star(n: usize) -> Self {
        let mut b = Builder::new(n + 1);
        for v in 1..=n {
            b.add_edge(0, v);
        }
        b.build()
    }

    /// `K_{a,b}` with sides `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let mut g = Builder::new(a + b);
        for u in 0..a {
            for v in a..a + b {
                g.add_edge(u, v);
            }
        }
        g.build()
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbours(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (u, list) in self.adj.iter().enumerate() {
            out.extend(list.iter().filter(|&&v| v > u).map(|&v| (u, v)));
        }
        out
    }

    /// Subgraph induced by `vertices`, relabelled `0..len` in the given
    /// order. Returns the graph and the new-to-old vertex map.
    pub fn induced(&self, vertices: &[usize]) -> (Graph, Vec<usize>) {
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let mut b = Builder::new(vertices.len());
        for (i, &v) in vertices.iter().enumerate() {
            for &w in &self.adj[v] {
                let j = index[w];
                if j != usize::MAX && i < j {
                    b.add_edge(i, j);
                }
            }
        }
        (b.build(), vertices.to_vec())
    }

    /// Deletes `removed` and relabels the survivors in increasing order.
    pub fn remove_vertices(&self, removed: &[usize]) -> (Graph, Vec<usize>) {
        let mut gone = vec![false; self.n()];
        for &v in removed {
            gone[v] = true;
        }
        let keep: Vec<usize> = (0..self.n()).filter(|&v| !gone[v]).collect();
        self.induced(&keep)
    }

    /// Disjoint union with `other` appended after this graph's vertices.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let mut b = Builder::new(0);
        b.append(self);
        b.append(other);
        b.build()
    }

    /// `p` disjoint copies of this graph.
    pub fn copies(&self, p: usize) -> Graph {
        let mut b = Builder::new(0);
        for _ in 0..p {
            b.append(self);
        }
        b.build()
    }

    /// Connected components, each sorted, ordered by least vertex.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n()];
        let mut comps = Vec::new();
        for s in 0..self.n() {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    /// True for the empty graph as well.
    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    /// Whether `vertices` induce a connected subgraph (false when empty).
    pub fn is_connected_set(&self, vertices: &[usize]) -> bool {
        if vertices.is_empty() {
            return false;
        }
        let (sub, _) = self.induced(vertices);
        sub.is_connected()
    }

    pub fn is_clique(&self, vertices: &[usize]) -> bool {
        vertices
            .iter()
            .enumerate()
            .all(|(i, &u)| vertices[i + 1..].iter().all(|&v| u != v && self.has_edge(u, v)))
    }

    /// Every `k`-vertex clique, each sorted ascending, in lexicographic order.
    pub fn k_cliques(&self, k: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        if k == 0 {
            out.push(Vec::new());
            return out;
        }
        let mut current = Vec::with_capacity(k);
        for v in 0..self.n() {
            current.push(v);
            let cands: Vec<usize> = self.adj[v].iter().copied().filter(|&w| w > v).collect();
            self.extend_cliques(k, &mut current, &cands, &mut out);
            current.pop();
        }
        out
    }

    fn extend_cliques(
        &self,
        k: usize,
        current: &mut Vec<usize>,
        cands: &[usize],
        out: &mut Vec<Vec<usize>>,
    ) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        if current.len() + cands.len() < k {
            return;
        }
        for (i, &v) in cands.iter().enumerate() {
            current.push(v);
            let next: Vec<usize> =
                cands[i + 1..].iter().copied().filter(|&w| self.has_edge(v, w)).collect();
            self.extend_cliques(k, current, &next, out);
            current.pop();
        }
    }

    /// Maximal cliques (Bron–Kerbosch with pivoting), each sorted, in
    /// lexicographic order.
    pub fn maximal_cliques(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let p: Vec<usize> = (0..self.n()).collect();
        self.bron_kerbosch(&mut Vec::new(), p, Vec::new(), &mut out);
        for c in &mut out {
            c.sort_unstable();
        }
        out.sort();
        out
    }

    fn bron_kerbosch(
        &self,
        r: &mut Vec<usize>,
        p: Vec<usize>,
        x: Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if p.is_empty() && x.is_empty() {
            if !r.is_empty() {
                out.push(r.clone());
            }
            return;
        }
        let pivot = p
            .iter()
            .chain(&x)
            .copied()
            .max_by_key(|&u| p.iter().filter(|&&v| self.has_edge(u, v)).count())
            .expect("p or x is nonempty");
        let branch: Vec<usize> = p.iter().copied().filter(|&v| !self.has_edge(pivot, v)).collect();
        let mut p = p;
        let mut x = x;
        for v in branch {
            r.push(v);
            let np = p.iter().copied().filter(|&w| self.has_edge(v, w)).collect();
            let nx = x.iter().copied().filter(|&w| self.has_edge(v, w)).collect();
            self.bron_kerbosch(r, np, nx, out);
            r.pop();
            p.retain(|&w| w != v);
            x.push(v);
        }
    }

    /// Adjacency as bitmasks; only for graphs with at most 64 vertices.
    pub(crate) fn masks(&self) -> Option<Vec<u64>> {
        if self.n() > 64 {
            return None;
        }
        Some(
            self.adj
                .iter()
                .map(|list| list.iter().fold(0u64, |m, &w| m | (1u64 << w)))
                .collect(),
        )
    }

    /// Vertices in BFS order from `root`, neighbours visited in index order,
    /// restricted to the component of `root`.
    pub(crate) fn bfs_order(&self, root: usize) -> Vec<usize> {
        let mut seen = vec![false; self.n()];
        seen[root] = true;
        let mut order = vec![root];
        let mut i = 0;
        while i < order.len() {
            let u = order[i];
            i += 1;
            for &w in &self.adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    order.push(w);
                }
            }
        }
        order
    }

    /// Cut vertices (articulation points), ascending.
    pub fn cut_vertices(&self) -> Vec<usize> {
        let mut cuts = Vec::new();
        for comp in self.connected_components() {
            if comp.len() < 3 {
                continue;
            }
            let forest = block_decomposition(&self.induced(&comp).0, 0)
                .expect("component is connected");
            cuts.extend(forest.cut_vertices.iter().map(|&v| comp[v]));
        }
        cuts.sort_unstable();
        cuts
    }

    /// Connected with no cut vertex. A single edge and a single vertex count;
    /// they are the bridge and isolated-vertex blocks.
    pub fn is_biconnected(&self) -> bool {
        self.n() >= 1 && self.is_connected() && self.cut_vertices().is_empty()
    }
}
