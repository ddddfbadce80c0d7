//! Exact tree-depth and treewidth for desk-scale graphs.

use std::collections::HashMap;

use super::Graph;
use crate::error::{Error, Result};
use crate::limits::Limits;

/// Tree-depth: the least depth of a rooted forest whose closure contains `g`.
///
/// For a connected graph `td = 1 + min_v td(g - v)`; for a disconnected one
/// it is the maximum over components. Memoised on vertex subsets.
pub fn tree_depth(g: &Graph, limits: &Limits) -> Result<usize> {
    let masks = small_masks(g, limits.treedepth_vertices, "tree-depth")?;
    let mut memo = HashMap::new();
    Ok(td_subset(&masks, full_mask(g.n()), &mut memo))
}

/// Connected tree-depth: the least depth of a single rooted tree whose
/// closure contains `g`. Equal to the tree-depth unless two components both
/// attain it, in which case one more level is needed for a common root.
pub fn connected_tree_depth(g: &Graph, limits: &Limits) -> Result<usize> {
    let masks = small_masks(g, limits.treedepth_vertices, "tree-depth")?;
    let mut memo = HashMap::new();
    let per_component: Vec<usize> = components_of(&masks, full_mask(g.n()))
        .into_iter()
        .map(|c| td_subset(&masks, c, &mut memo))
        .collect();
    let td = per_component.iter().copied().max().unwrap_or(0);
    let attaining = per_component.iter().filter(|&&d| d == td).count();
    Ok(if attaining >= 2 { td + 1 } else { td })
}

fn small_masks(g: &Graph, limit: usize, what: &str) -> Result<Vec<u64>> {
    if g.n() > limit.min(64) {
        return Err(Error::Budget(format!(
            "{what} of a {}-vertex graph exceeds the {limit}-vertex budget",
            g.n()
        )));
    }
    Ok(g.masks().expect("checked size"))
}

fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

fn components_of(masks: &[u64], set: u64) -> Vec<u64> {
    let mut rest = set;
    let mut out = Vec::new();
    while rest != 0 {
        let mut comp = rest & rest.wrapping_neg();
        loop {
            let mut grown = comp;
            let mut bits = comp;
            while bits != 0 {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                grown |= masks[v] & set;
            }
            if grown == comp {
                break;
            }
            comp = grown;
        }
        out.push(comp);
        rest &= !comp;
    }
    out
}

fn td_subset(masks: &[u64], set: u64, memo: &mut HashMap<u64, usize>) -> usize {
    match set.count_ones() {
        0 => return 0,
        1 => return 1,
        _ => {}
    }
    if let Some(&d) = memo.get(&set) {
        return d;
    }
    let comps = components_of(masks, set);
    let result = if comps.len() > 1 {
        comps.into_iter().map(|c| td_subset(masks, c, memo)).max().unwrap_or(0)
    } else {
        let size = set.count_ones() as usize;
        // A clique on the whole set forces depth `size`; nothing beats 2.
        let mut best = size;
        let mut bits = set;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let d = 1 + td_subset(masks, set & !(1u64 << v), memo);
            best = best.min(d);
            if best == 2 {
                break;
            }
        }
        best
    };
    memo.insert(set, result);
    result
}

/// Exact treewidth by dynamic programming over vertex subsets.
///
/// `TW(S) = min_{v in S} max(TW(S - v), |Q(S - v, v)|)` where `Q(S, v)` is
/// the set of vertices outside `S ∪ {v}` reachable from `v` through `S`.
pub fn treewidth_exact(g: &Graph, limits: &Limits) -> Result<usize> {
    let n = g.n();
    let masks = small_masks(g, limits.treewidth_vertices, "treewidth")?;
    if n <= 1 {
        return Ok(0);
    }
    let full = full_mask(n) as usize;
    let mut tw = vec![i32::MAX; full + 1];
    tw[0] = -1;
    for set in 1..=full {
        let mut best = i32::MAX;
        let mut bits = set;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let rest = set & !(1usize << v);
            let prior = tw[rest];
            if prior >= best {
                continue;
            }
            let q = reach_count(&masks, rest as u64, v) as i32;
            best = best.min(prior.max(q));
        }
        tw[set] = best;
    }
    Ok(tw[full].max(0) as usize)
}

fn reach_count(masks: &[u64], inner: u64, v: usize) -> u32 {
    let mut seen = 1u64 << v;
    let mut frontier = 1u64 << v;
    let mut outside = 0u64;
    while frontier != 0 {
        let mut next = 0u64;
        let mut bits = frontier;
        while bits != 0 {
            let u = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            next |= masks[u];
        }
        next &= !seen;
        seen |= next;
        outside |= next & !inner;
        frontier = next & inner;
    }
    outside.count_ones()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lim() -> Limits {
        Limits::default()
    }

    #[test]
    fn clique_depths() {
        for n in 1..=6 {
            assert_eq!(tree_depth(&Graph::complete(n), &lim()).unwrap(), n);
        }
        assert_eq!(connected_tree_depth(&Graph::complete(4), &lim()).unwrap(), 4);
    }

    #[test]
    fn path_depth_closed_form() {
        for n in 1..=15usize {
            let expect = (usize::BITS - n.leading_zeros()) as usize; // ceil(log2(n+1))
            assert_eq!(tree_depth(&Graph::path(n), &lim()).unwrap(), expect, "P_{n}");
        }
    }

    #[test]
    fn two_triangles_need_a_common_root() {
        let g = Graph::complete(3).copies(2);
        assert_eq!(tree_depth(&g, &lim()).unwrap(), 3);
        assert_eq!(connected_tree_depth(&g, &lim()).unwrap(), 4);
    }

    #[test]
    fn empty_graph_depth_zero() {
        assert_eq!(tree_depth(&Graph::edgeless(0), &lim()).unwrap(), 0);
        assert_eq!(connected_tree_depth(&Graph::edgeless(0), &lim()).unwrap(), 0);
    }

    #[test]
    fn treewidths() {
        assert_eq!(treewidth_exact(&Graph::path(6), &lim()).unwrap(), 1);
        assert_eq!(treewidth_exact(&Graph::star(5), &lim()).unwrap(), 1);
        assert_eq!(treewidth_exact(&Graph::complete(5), &lim()).unwrap(), 4);
        assert_eq!(treewidth_exact(&Graph::cycle(6), &lim()).unwrap(), 2);
        assert_eq!(treewidth_exact(&Graph::edgeless(4), &lim()).unwrap(), 0);
        assert_eq!(treewidth_exact(&Graph::complete_bipartite(3, 3), &lim()).unwrap(), 3);
    }

    #[test]
    fn budgets_are_enforced() {
        let big = Graph::path(15);
        assert!(matches!(treewidth_exact(&big, &lim()), Err(Error::Budget(_))));
        let huge = Graph::path(21);
        assert!(matches!(tree_depth(&huge, &lim()), Err(Error::Budget(_))));
    }
}
