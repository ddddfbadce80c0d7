//! Deterministic constructors for the named graph families.
//!
//! Every generator documents its vertex numbering so that tests and minor
//! models can refer to specific vertices.

use crate::error::{input, Error, Result};
use crate::graph::{Builder, Graph, RootedTree};
use crate::limits::Limits;
use crate::minors::isomorphic;
use crate::rng::SplitMix64;

/// The `n`-fan: path `0..n` plus the dominant vertex `n`.
pub fn fan(n: usize) -> Result<Graph> {
    if n == 0 {
        return input("fan needs n >= 1");
    }
    let mut b = Builder::new(n + 1);
    for i in 0..n {
        if i + 1 < n {
            b.add_edge(i, i + 1);
        }
        b.add_edge(i, n);
    }
    Ok(b.build())
}

/// The `n`-fat star: centre `0`, leaves `1..=n`, and for leaf `i` the `n`
/// degree-2 vertices `n + 1 + (i-1) n + j` (`j < n`) adjacent to `0` and `i`.
pub fn fat_star(n: usize) -> Result<Graph> {
    if n == 0 {
        return input("fat star needs n >= 1");
    }
    let mut b = Builder::new(1 + n + n * n);
    for i in 1..=n {
        b.add_edge(0, i);
        for j in 0..n {
            let w = n + 1 + (i - 1) * n + j;
            b.add_edge(0, w);
            b.add_edge(i, w);
        }
    }
    Ok(b.build())
}

/// The `n`-fat path: path `0..n`, and for the edge `(i, i+1)` the `n`
/// degree-2 vertices `n + i n + j` (`j < n`) adjacent to both ends.
pub fn fat_path(n: usize) -> Result<Graph> {
    if n == 0 {
        return input("fat path needs n >= 1");
    }
    let mut b = Builder::new(n * n);
    for i in 0..n - 1 {
        b.add_edge(i, i + 1);
        for j in 0..n {
            let w = n + i * n + j;
            b.add_edge(i, w);
            b.add_edge(i + 1, w);
        }
    }
    Ok(b.build())
}

/// Complete `k`-ary tree of depth `h` (vertices on a root-to-leaf path),
/// numbered breadth-first: root `0`, children of `i` are `k i + 1 ..= k i + k`.
pub fn complete_kary_tree(h: usize, k: usize) -> Result<RootedTree> {
    if h == 0 || k == 0 {
        return input("complete tree needs depth >= 1 and arity >= 1");
    }
    let mut parent = vec![0usize];
    let mut level = vec![0usize];
    for _ in 1..h {
        let mut next = Vec::with_capacity(level.len() * k);
        for &p in &level {
            for _ in 0..k {
                next.push(parent.len());
                parent.push(p);
            }
        }
        level = next;
    }
    RootedTree::new(parent, 0)
}

pub(crate) fn kary_tree_size(h: usize, k: usize) -> usize {
    let mut total: usize = 0;
    let mut level: usize = 1;
    for _ in 0..h {
        total = total.saturating_add(level);
        level = level.saturating_mul(k);
    }
    total
}

/// Ancestor-descendant closure of a rooted tree.
pub fn closure(t: &RootedTree) -> Graph {
    let mut b = Builder::new(t.n());
    for v in 0..t.n() {
        for a in t.ancestors(v) {
            b.add_edge(a, v);
        }
    }
    b.build()
}

/// Leaf-ancestor closure: each leaf joined to all its strict ancestors.
pub fn weak_closure(t: &RootedTree) -> Graph {
    let mut b = Builder::new(t.n());
    for v in t.leaves() {
        for a in t.ancestors(v) {
            b.add_edge(a, v);
        }
    }
    b.build()
}

/// Closure of the complete `k`-ary tree of depth `h`.
pub fn closure_tree(h: usize, k: usize) -> Result<Graph> {
    Ok(closure(&complete_kary_tree(h, k)?))
}

/// Weak closure of the complete `k`-ary tree of depth `h`.
pub fn weak_closure_tree(h: usize, k: usize) -> Result<Graph> {
    Ok(weak_closure(&complete_kary_tree(h, k)?))
}

/// `c` disjoint copies of `g` (copy `j` occupies `j|V| .. (j+1)|V|`) plus a
/// dominant vertex `c|V|`.
pub fn x_prime(g: &Graph, c: usize) -> Result<Graph> {
    if c == 0 || g.is_empty() {
        return input("x_prime needs c >= 1 and a nonempty graph");
    }
    let mut b = Builder::new(0);
    for _ in 0..c {
        b.append(g);
    }
    let apex = b.add_vertex();
    for v in 0..apex {
        b.add_edge(v, apex);
    }
    Ok(b.build())
}

/// Result of joining new material onto every clique of a given size.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliqueJoin {
    pub graph: Graph,
    /// Number of cliques that received new vertices; zero means the input
    /// had no clique of the requested size and was returned unchanged.
    pub cliques: usize,
}

impl CliqueJoin {
    pub fn unchanged(&self) -> bool {
        self.cliques == 0
    }
}

/// For every `k`-vertex clique (lexicographic order) append a stable set of
/// `k(c-1)+1` new vertices complete to it.
pub fn x_plus(g: &Graph, k: usize, c: usize) -> Result<CliqueJoin> {
    if k < 2 || c == 0 {
        return input("x_plus needs k >= 2 and c >= 1");
    }
    let per = k * (c - 1) + 1;
    let cliques = g.k_cliques(k);
    let mut b = Builder::new(0);
    b.append(g);
    for d in &cliques {
        for _ in 0..per {
            let w = b.add_vertex();
            for &u in d {
                b.add_edge(u, w);
            }
        }
    }
    Ok(CliqueJoin { graph: b.build(), cliques: cliques.len() })
}

/// For every `(k-1)`-vertex clique append a path of `(c^2-1)(k-1)+(c+1)`
/// new vertices, each complete to the clique.
pub fn x_plusplus(g: &Graph, k: usize, c: usize) -> Result<CliqueJoin> {
    if k < 3 || c == 0 {
        return input("x_plusplus needs k >= 3 and c >= 1");
    }
    let len = (c * c - 1) * (k - 1) + (c + 1);
    let cliques = g.k_cliques(k - 1);
    let mut b = Builder::new(0);
    b.append(g);
    for d in &cliques {
        let mut prev = None;
        for _ in 0..len {
            let w = b.add_vertex();
            if let Some(p) = prev {
                b.add_edge(p, w);
            }
            for &u in d {
                b.add_edge(u, w);
            }
            prev = Some(w);
        }
    }
    Ok(CliqueJoin { graph: b.build(), cliques: cliques.len() })
}

/// Members of the recursive extremal family at level `k`, clustering `c`.
///
/// Level 1 is `{P_{c+1}, K_{1,c}}`. Level `j` applies the dominant-vertex and
/// stable-set operations to level `j-1` members and, for `j >= 3`, the path
/// operation to level `j-2` members. Each level is deduplicated (up to
/// isomorphism below `limits.dedup_vertices`, syntactically above) and cut
/// at `budget` members. Candidates larger than `limits.generator_vertices`
/// are skipped.
pub fn x_family(k: usize, c: usize, budget: usize, limits: &Limits) -> Result<Vec<Graph>> {
    if k == 0 || c == 0 {
        return input("x_family needs k >= 1 and c >= 1");
    }
    if budget == 0 {
        return Ok(Vec::new());
    }
    let mut levels: Vec<Vec<Graph>> = Vec::with_capacity(k);
    let mut base = Vec::new();
    push_unique(&mut base, Graph::path(c + 1), limits)?;
    push_unique(&mut base, Graph::star(c), limits)?;
    base.truncate(budget);
    levels.push(base);
    for j in 2..=k {
        let mut next = Vec::new();
        for g in &levels[j - 2] {
            if next.len() >= budget {
                break;
            }
            if g.n() * c < limits.generator_vertices {
                push_unique(&mut next, x_prime(g, c)?, limits)?;
            }
            let cliques = g.k_cliques(j).len();
            if cliques > 0 && g.n() + cliques * (j * (c - 1) + 1) <= limits.generator_vertices {
                push_unique(&mut next, x_plus(g, j, c)?.graph, limits)?;
            }
        }
        if j >= 3 {
            let len = (c * c - 1) * (j - 1) + (c + 1);
            for g in &levels[j - 3] {
                if next.len() >= budget {
                    break;
                }
                let cliques = g.k_cliques(j - 1).len();
                if cliques > 0 && g.n() + cliques * len <= limits.generator_vertices {
                    push_unique(&mut next, x_plusplus(g, j, c)?.graph, limits)?;
                }
            }
        }
        next.truncate(budget);
        levels.push(next);
    }
    Ok(levels.pop().unwrap_or_default())
}

fn push_unique(list: &mut Vec<Graph>, g: Graph, limits: &Limits) -> Result<()> {
    for other in list.iter() {
        if other.n() != g.n() || other.edge_count() != g.edge_count() {
            continue;
        }
        if g.n() <= limits.dedup_vertices {
            if isomorphic(other, &g, limits).unwrap_or(false) {
                return Ok(());
            }
        } else if *other == g {
            return Ok(());
        }
    }
    list.push(g);
    Ok(())
}

/// The recursive graphs that resist `(2k-3)`-colouring with clustering `c`
/// while excluding the closure of the complete ternary tree of depth `k`.
///
/// `G_2` is the path on `c+1` vertices. `G_k` has spine `0..=c`; for spine
/// edge `i` (in order) it appends `2c-1` disjoint copies of `G_{k-1}`, each
/// complete to spine vertices `i` and `i+1`.
pub fn ternary_lower_bound(k: usize, c: usize, limits: &Limits) -> Result<Graph> {
    if k < 2 || c == 0 {
        return input("ternary lower bound needs k >= 2 and c >= 1");
    }
    let mut size = c + 1;
    for _ in 3..=k {
        size = (c + 1).saturating_add(c.saturating_mul(2 * c - 1).saturating_mul(size));
    }
    if size > limits.generator_vertices {
        return Err(Error::Budget(format!(
            "G_{k} at c={c} would have {size} vertices (limit {})",
            limits.generator_vertices
        )));
    }
    let mut g = Graph::path(c + 1);
    for _ in 3..=k {
        let mut b = Builder::new(0);
        b.append(&Graph::path(c + 1));
        for i in 0..c {
            for _ in 0..2 * c - 1 {
                let offset = b.append(&g);
                for v in offset..offset + g.n() {
                    b.add_edge(i, v);
                    b.add_edge(i + 1, v);
                }
            }
        }
        g = b.build();
    }
    Ok(g)
}

/// Disjoint union of `g` and `h` (with `h` shifted by `|V(g)|`) plus every
/// edge between the clique `s` of `g` and `V(h)`.
pub fn decorate(g: &Graph, h: &Graph, s: &[usize]) -> Result<Graph> {
    if s.iter().any(|&v| v >= g.n()) {
        return input("join set has a vertex outside the graph");
    }
    let mut sorted = s.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != s.len() || !g.is_clique(s) {
        return input("join set is not a clique");
    }
    let mut b = Builder::new(0);
    b.append(g);
    let offset = b.append(h);
    for &u in s {
        for w in offset..offset + h.n() {
            b.add_edge(u, w);
        }
    }
    Ok(b.build())
}

/// `G(n, p)` driven by [`SplitMix64`]: pairs `u < v` are visited in
/// lexicographic order and each draws one float, keeping the edge when it is
/// below `p`.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return input(format!("edge probability {p} outside [0, 1]"));
    }
    let mut rng = SplitMix64::new(seed);
    let mut b = Builder::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.next_f64() < p {
                b.add_edge(u, v);
            }
        }
    }
    Ok(b.build())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lim() -> Limits {
        Limits::default()
    }

    #[test]
    fn fans() {
        assert_eq!(fan(1).unwrap(), Graph::complete(2));
        let f3 = fan(3).unwrap();
        assert_eq!((f3.n(), f3.edge_count()), (4, 5));
        assert!(!f3.k_cliques(3).is_empty());
        let f6 = fan(6).unwrap();
        assert_eq!((f6.n(), f6.edge_count()), (7, 11));
        assert!(fan(0).is_err());
    }

    #[test]
    fn fat_stars_and_paths() {
        assert_eq!(fat_star(1).unwrap(), Graph::complete(3));
        let s2 = fat_star(2).unwrap();
        assert_eq!((s2.n(), s2.edge_count()), (7, 10));
        assert_eq!(fat_path(1).unwrap(), Graph::edgeless(1));
        let p2 = fat_path(2).unwrap();
        assert_eq!((p2.n(), p2.edge_count()), (4, 5));
        let p3 = fat_path(3).unwrap();
        assert_eq!((p3.n(), p3.edge_count()), (9, 14));
        assert!(fat_star(0).is_err() && fat_path(0).is_err());
    }

    #[test]
    fn complete_trees() {
        assert_eq!(complete_kary_tree(1, 4).unwrap().n(), 1);
        let t = complete_kary_tree(3, 2).unwrap();
        assert_eq!((t.n(), t.depth()), (7, 3));
        let t = complete_kary_tree(2, 3).unwrap();
        assert_eq!(t.children(0), &[1, 2, 3]);
        assert_eq!(complete_kary_tree(4, 1).unwrap().n(), 4);
        assert!(complete_kary_tree(0, 2).is_err());
    }

    #[test]
    fn closures() {
        let chain = complete_kary_tree(4, 1).unwrap();
        assert_eq!(closure(&chain), Graph::complete(4));
        let c32 = closure_tree(3, 2).unwrap();
        assert_eq!((c32.n(), c32.edge_count()), (7, 10));
        assert_eq!(closure_tree(2, 5).unwrap(), Graph::star(5));
    }

    #[test]
    fn weak_closures() {
        for k in 1..=5 {
            assert_eq!(weak_closure_tree(2, k).unwrap(), closure_tree(2, k).unwrap());
        }
        let w32 = weak_closure_tree(3, 2).unwrap();
        assert_eq!((w32.n(), w32.edge_count()), (7, 8));
        let w33 = weak_closure_tree(3, 3).unwrap();
        assert_eq!((w33.n(), w33.edge_count()), (13, 18));
    }

    #[test]
    fn fat_star_is_closure_of_ternary_shape() {
        for n in 1..=3 {
            let a = fat_star(n).unwrap();
            let b = closure_tree(3, n).unwrap();
            assert_eq!(isomorphic(&a, &b, &lim()), Some(true), "n={n}");
        }
    }

    #[test]
    fn dominant_vertex_over_copies() {
        let g = x_prime(&Graph::path(3), 2).unwrap();
        assert_eq!((g.n(), g.edge_count()), (7, 10));
        assert_eq!(g.degree(6), 6);
        assert_eq!(isomorphic(&x_prime(&Graph::edgeless(1), 4).unwrap(), &Graph::star(4), &lim()), Some(true));
        let g = x_prime(&Graph::star(2), 2).unwrap();
        assert_eq!(isomorphic(&g, &fat_star(2).unwrap(), &lim()), Some(true));
    }

    #[test]
    fn stable_sets_over_cliques() {
        // c = 1: one new vertex per edge.
        let j = x_plus(&Graph::path(2), 2, 1).unwrap();
        assert_eq!(j.graph, Graph::complete(3));
        let j = x_plus(&Graph::path(4), 2, 1).unwrap();
        assert_eq!((j.cliques, j.graph.n()), (3, 7));
        // K_2 plus three vertices complete to it.
        let j = x_plus(&Graph::complete(2), 2, 2).unwrap();
        assert_eq!((j.graph.n(), j.graph.edge_count()), (5, 7));
        assert!(j.graph.has_edge(0, 1));
        let j = x_plus(&Graph::edgeless(1), 2, 3).unwrap();
        assert!(j.unchanged());
        assert_eq!(j.graph, Graph::edgeless(1));
    }

    #[test]
    fn paths_over_cliques() {
        let j = x_plusplus(&Graph::complete(2), 3, 1).unwrap();
        assert_eq!(j.graph, Graph::complete(4));
        let j = x_plusplus(&Graph::complete(2), 3, 2).unwrap();
        assert_eq!(j.graph.n(), 11);
        assert_eq!(j.graph.edge_count(), 1 + 8 + 18);
        let j = x_plusplus(&Graph::edgeless(3), 3, 2).unwrap();
        assert!(j.unchanged());
    }

    #[test]
    fn family_levels() {
        let f = x_family(1, 3, 10, &lim()).unwrap();
        assert_eq!(f, vec![Graph::path(4), Graph::star(3)]);
        let f = x_family(2, 1, 10, &lim()).unwrap();
        assert!(f.iter().any(|g| *g == Graph::complete(3)));
        let f = x_family(3, 1, 3, &lim()).unwrap();
        assert!(f.iter().any(|g| *g == Graph::complete(4)));
        assert!(x_family(2, 2, 0, &lim()).unwrap().is_empty());
    }

    #[test]
    fn ternary_graphs() {
        assert_eq!(ternary_lower_bound(2, 3, &lim()).unwrap(), Graph::path(4));
        assert_eq!(ternary_lower_bound(3, 1, &lim()).unwrap(), Graph::complete(4));
        assert_eq!(ternary_lower_bound(3, 2, &lim()).unwrap().n(), 21);
        assert!(matches!(ternary_lower_bound(5, 3, &lim()), Err(Error::Budget(_))));
    }

    #[test]
    fn decorations() {
        assert_eq!(decorate(&Graph::edgeless(1), &Graph::edgeless(1), &[0]).unwrap(), Graph::complete(2));
        let g = decorate(&Graph::complete(2), &Graph::edgeless(2), &[0, 1]).unwrap();
        assert_eq!((g.n(), g.edge_count()), (4, 5));
        let g = decorate(&Graph::path(3), &Graph::path(2), &[1]).unwrap();
        assert_eq!((g.n(), g.edge_count()), (5, 5));
        assert!(decorate(&Graph::path(3), &Graph::path(2), &[0, 2]).is_err());
    }

    #[test]
    fn random_graph_extremes() {
        assert_eq!(random_graph(5, 0.0, 9).unwrap(), Graph::edgeless(5));
        assert_eq!(random_graph(5, 1.0, 9).unwrap(), Graph::complete(5));
        assert!(random_graph(5, 1.5, 9).is_err());
    }
}
