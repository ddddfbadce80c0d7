//! Splitting a weak-closure model of `T(h, 6k)` into two weak-closure
//! models of `T(h, k)` that share at most one vertex.

use std::collections::VecDeque;

use serde::Serialize;

use super::MinorModel;
use crate::error::{input, internal, Error, Result};
use crate::generators::{complete_kary_tree, weak_closure, weak_closure_tree};
use crate::graph::{Graph, RootedTree};

/// Two weak-closure models and the host vertices they share.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WeakSplit {
    pub first: MinorModel,
    pub second: MinorModel,
    pub shared: Vec<usize>,
}

/// A node of the degree-3 expansion of the root branch set.
struct QNode {
    owner: usize,
    /// Index of the big-tree leaf attached here, for pendant nodes.
    leaf: Option<usize>,
}

/// Splits a model `m` of the weak closure of `T(h, 6k)` in `g`.
///
/// Each leaf branch set is attached to the root branch set through the
/// lexicographically least edge between them. The root branch set is
/// replaced by a BFS spanning tree from its least vertex, and every vertex of
/// degree `d > 3` in the expansion becomes a path of `d - 2` copies taking
/// its attachments in the order parent, children, then leaves.
pub fn split_weak_model(g: &Graph, m: &MinorModel, h: usize, k: usize) -> Result<WeakSplit> {
    if h < 2 || k == 0 {
        return input("splitting needs h >= 2 and k >= 1");
    }
    let big = complete_kary_tree(h, 6 * k)?;
    m.check(g, &weak_closure(&big)).map_err(|e| Error::Input(format!("invalid model: {e}")))?;
    let root_set = &m.branch_sets[0];
    let leaves = big.leaves();

    // Attachment vertex in J_r of every big-tree leaf.
    let mut in_root = vec![false; g.n()];
    for &v in root_set {
        in_root[v] = true;
    }
    let mut attach = Vec::with_capacity(leaves.len());
    for &x in &leaves {
        let a = m.branch_sets[x]
            .iter()
            .flat_map(|&u| g.neighbours(u).iter().filter(|&&w| in_root[w]).map(move |&w| (w, u)))
            .min()
            .map(|(w, _)| w)
            .ok_or_else(|| Error::Internal(format!("leaf {x} does not touch the root set")))?;
        attach.push(a);
    }

    // BFS spanning tree of J_r.
    let (jr, jmap) = g.induced(root_set);
    let order = jr.bfs_order(0);
    let mut tparent = vec![usize::MAX; jr.n()];
    let mut seen = vec![false; jr.n()];
    seen[0] = true;
    let mut tchildren = vec![Vec::new(); jr.n()];
    for &u in &order {
        for &w in jr.neighbours(u) {
            if !seen[w] {
                seen[w] = true;
                tparent[w] = u;
                tchildren[u].push(w);
            }
        }
    }
    for c in &mut tchildren {
        c.sort_unstable();
    }
    let local_of = |v: usize| jmap.iter().position(|&u| u == v).expect("attachment in root set");
    let mut leaf_at = vec![Vec::new(); jr.n()];
    for (li, &a) in attach.iter().enumerate() {
        leaf_at[local_of(a)].push(li);
    }

    // Build Q.
    enum Slot {
        Tree(usize),
        Leaf(usize),
    }
    let mut nodes: Vec<QNode> = Vec::new();
    let mut qedges: Vec<(usize, usize)> = Vec::new();
    // For each J_r vertex u and each tree neighbour c, the Q node carrying it.
    let mut carrier = vec![Vec::<(usize, usize)>::new(); jr.n()];
    for u in 0..jr.n() {
        let mut slots = Vec::new();
        if tparent[u] != usize::MAX {
            slots.push(Slot::Tree(tparent[u]));
        }
        slots.extend(tchildren[u].iter().map(|&c| Slot::Tree(c)));
        slots.extend(leaf_at[u].iter().map(|&l| Slot::Leaf(l)));
        let d = slots.len();
        let copies = if d > 3 { d - 2 } else { 1 };
        let first = nodes.len();
        for _ in 0..copies {
            nodes.push(QNode { owner: u, leaf: None });
        }
        for i in 1..copies {
            qedges.push((first + i - 1, first + i));
        }
        for (s, slot) in slots.into_iter().enumerate() {
            let copy = if copies == 1 {
                first
            } else if s < 2 {
                first
            } else if s >= d - 2 {
                first + copies - 1
            } else {
                first + s - 1
            };
            match slot {
                Slot::Tree(c) => carrier[u].push((c, copy)),
                Slot::Leaf(l) => {
                    let p = nodes.len();
                    nodes.push(QNode { owner: u, leaf: Some(l) });
                    qedges.push((copy, p));
                }
            }
        }
    }
    for u in 0..jr.n() {
        for &c in &tchildren[u] {
            let a = carrier[u].iter().find(|&&(x, _)| x == c).expect("child slot").1;
            let b = carrier[c].iter().find(|&&(x, _)| x == u).expect("parent slot").1;
            qedges.push((a, b));
        }
    }
    let mut qadj = vec![Vec::new(); nodes.len()];
    for (e, &(a, b)) in qedges.iter().enumerate() {
        qadj[a].push((b, e));
        qadj[b].push((a, e));
    }

    let threshold = 2 * k;
    for (e, &(a, _)) in qedges.iter().enumerate() {
        let side_a = q_side(&qadj, a, e);
        let side_b: Vec<bool> = side_a.iter().map(|&s| !s).collect();
        let alive_a = aliveness(&big, &leaves, &nodes, &side_a, threshold);
        let alive_b = aliveness(&big, &leaves, &nodes, &side_b, threshold);
        if !(alive_a[0] && alive_b[0]) {
            continue;
        }
        let top_a: Vec<usize> = big.children(0).iter().copied().filter(|&c| alive_a[c]).take(k).collect();
        let top_b: Vec<usize> = big
            .children(0)
            .iter()
            .copied()
            .filter(|&c| alive_b[c] && !top_a.contains(&c))
            .take(k)
            .collect();
        if top_b.len() < k {
            return internal("second side lost its alive children");
        }
        let root_of = |side: &[bool]| -> Vec<usize> {
            let mut s: Vec<usize> = (0..nodes.len()).filter(|&q| side[q]).map(|q| jmap[nodes[q].owner]).collect();
            s.sort_unstable();
            s.dedup();
            s
        };
        let r1 = root_of(&side_a);
        let r2 = root_of(&side_b);
        let first = carve(&big, m, &alive_a, top_a, r1.clone(), k);
        let second = carve(&big, m, &alive_b, top_b, r2.clone(), k);
        let pattern = weak_closure_tree(h, k)?;
        for (name, model) in [("first", &first), ("second", &second)] {
            model
                .check(g, &pattern)
                .map_err(|err| Error::Internal(format!("{name} split model: {err}")))?;
        }
        let shared: Vec<usize> = first.vertices().into_iter().filter(|v| second.vertices().binary_search(v).is_ok()).collect();
        if shared.len() > 1 {
            return internal(format!("split models share {} vertices", shared.len()));
        }
        return Ok(WeakSplit { first, second, shared });
    }
    internal("no edge of the expanded root tree is good on both sides")
}

/// Nodes on the side of `start` after deleting edge `cut`.
fn q_side(qadj: &[Vec<(usize, usize)>], start: usize, cut: usize) -> Vec<bool> {
    let mut side = vec![false; qadj.len()];
    side[start] = true;
    let mut queue = VecDeque::from([start]);
    while let Some(u) = queue.pop_front() {
        for &(w, e) in &qadj[u] {
            if e != cut && !side[w] {
                side[w] = true;
                queue.push_back(w);
            }
        }
    }
    side
}

/// Big-tree vertices alive with respect to the leaves whose pendant node lies
/// in `side`.
fn aliveness(big: &RootedTree, leaves: &[usize], nodes: &[QNode], side: &[bool], threshold: usize) -> Vec<bool> {
    let mut alive = vec![false; big.n()];
    for (q, node) in nodes.iter().enumerate() {
        if let (Some(l), true) = (node.leaf, side[q]) {
            alive[leaves[l]] = true;
        }
    }
    for y in (0..big.n()).rev() {
        if !big.is_leaf(y) {
            alive[y] = big.children(y).iter().filter(|&&c| alive[c]).count() >= threshold;
        }
    }
    alive
}

/// Model of the weak closure of `T(h, k)` in breadth-first numbering: the
/// root is `root_set`, the rest follows `k` alive children per chosen node.
fn carve(big: &RootedTree, m: &MinorModel, alive: &[bool], top: Vec<usize>, root_set: Vec<usize>, k: usize) -> MinorModel {
    let mut sets = vec![root_set];
    let mut queue: VecDeque<usize> = top.into_iter().collect();
    while let Some(z) = queue.pop_front() {
        sets.push(m.branch_sets[z].clone());
        if !big.is_leaf(z) {
            queue.extend(big.children(z).iter().copied().filter(|&c| alive[c]).take(k));
        }
    }
    MinorModel::new(sets)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn star_splits_into_two_edges() {
        let g = Graph::star(6);
        let m = MinorModel::new((0..7).map(|v| vec![v]).collect());
        let s = split_weak_model(&g, &m, 2, 1).unwrap();
        assert_eq!(s.first.branch_sets, vec![vec![0], vec![1]]);
        assert_eq!(s.second.branch_sets, vec![vec![0], vec![3]]);
        assert_eq!(s.shared, vec![0]);
    }

    #[test]
    fn path_root_splits_disjointly() {
        // Root branch set is a path 0..6, leaf i hangs off vertex i.
        let mut edges: Vec<(usize, usize)> = (0..5).map(|i| (i, i + 1)).collect();
        edges.extend((0..6).map(|i| (i, 6 + i)));
        let g = Graph::new(12, &edges).unwrap();
        let mut sets = vec![(0..6).collect::<Vec<_>>()];
        sets.extend((6..12).map(|v| vec![v]));
        let s = split_weak_model(&g, &MinorModel::new(sets), 2, 1).unwrap();
        assert!(s.shared.len() <= 1);
    }

    #[test]
    fn rejects_invalid_models() {
        let g = Graph::star(6);
        let m = MinorModel::new((0..6).map(|v| vec![v]).collect());
        assert!(split_weak_model(&g, &m, 2, 1).is_err());
    }
}
