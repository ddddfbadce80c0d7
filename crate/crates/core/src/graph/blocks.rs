use super::{bfs_layering, Graph};
use crate::error::{input, Result};

/// Blocks (maximal 2-connected subgraphs, bridges, or an isolated vertex) of a
/// connected graph, rooted towards a chosen vertex `r`.
///
/// The block containing `r` is rooted at `r`; every other block is rooted at
/// its unique vertex separating it from `r`. Blocks are ordered by
/// non-decreasing distance from `r` to their root, so every parent block
/// precedes its children.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockForest {
    pub blocks: Vec<Vec<usize>>,
    pub cut_vertices: Vec<usize>,
    pub block_root: Vec<usize>,
    pub parent_block: Vec<Option<usize>>,
}

pub fn block_decomposition(g: &Graph, r: usize) -> Result<BlockForest> {
    if r >= g.n() {
        return input(format!("root {r} out of range"));
    }
    let dist = bfs_layering(g, r)?.layer;
    let n = g.n();
    if n == 1 {
        return Ok(BlockForest {
            blocks: vec![vec![r]],
            cut_vertices: Vec::new(),
            block_root: vec![r],
            parent_block: vec![None],
        });
    }

    const UNSEEN: usize = usize::MAX;
    let mut disc = vec![UNSEEN; n];
    let mut low = vec![0usize; n];
    let mut dfs_parent = vec![UNSEEN; n];
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();
    let mut raw: Vec<(Vec<usize>, usize)> = Vec::new();
    let mut owner = vec![UNSEEN; n];

    let mut time = 0;
    disc[r] = time;
    low[r] = time;
    let mut stack = vec![(r, 0usize)];
    while let Some(&mut (u, ref mut next)) = stack.last_mut() {
        if let Some(&w) = g.neighbours(u).get(*next) {
            *next += 1;
            if disc[w] == UNSEEN {
                time += 1;
                disc[w] = time;
                low[w] = time;
                dfs_parent[w] = u;
                edge_stack.push((u, w));
                stack.push((w, 0));
            } else if w != dfs_parent[u] && disc[w] < disc[u] {
                edge_stack.push((u, w));
                low[u] = low[u].min(disc[w]);
            }
            continue;
        }
        stack.pop();
        let Some(&(p, _)) = stack.last() else { break };
        low[p] = low[p].min(low[u]);
        if low[u] >= disc[p] {
            let mut verts = Vec::new();
            while let Some((a, b)) = edge_stack.pop() {
                verts.push(a);
                verts.push(b);
                if (a, b) == (p, u) {
                    break;
                }
            }
            verts.sort_unstable();
            verts.dedup();
            let id = raw.len();
            for &v in &verts {
                if v != p {
                    owner[v] = id;
                }
            }
            raw.push((verts, p));
        }
    }

    let mut order: Vec<usize> = (0..raw.len()).collect();
    order.sort_by_key(|&b| (dist[raw[b].1], raw[b].0[0], b));
    let mut new_index = vec![0; raw.len()];
    for (i, &b) in order.iter().enumerate() {
        new_index[b] = i;
    }

    let mut count = vec![0usize; n];
    let mut blocks = Vec::with_capacity(raw.len());
    let mut block_root = Vec::with_capacity(raw.len());
    let mut parent_block = Vec::with_capacity(raw.len());
    for &b in &order {
        let (verts, root) = &raw[b];
        for &v in verts {
            count[v] += 1;
        }
        blocks.push(verts.clone());
        block_root.push(*root);
        parent_block.push((*root != r).then(|| new_index[owner[*root]]));
    }
    let cut_vertices = (0..n).filter(|&v| count[v] > 1).collect();
    Ok(BlockForest { blocks, cut_vertices, block_root, parent_block })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn clique_is_one_block() {
        let f = block_decomposition(&Graph::complete(4), 0).unwrap();
        assert_eq!(f.blocks, vec![vec![0, 1, 2, 3]]);
        assert!(f.cut_vertices.is_empty());
        assert_eq!(f.block_root, vec![0]);
    }

    #[test]
    fn bowtie() {
        let g = Graph::new(5, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap();
        let f = block_decomposition(&g, 0).unwrap();
        assert_eq!(f.blocks, vec![vec![0, 1, 2], vec![2, 3, 4]]);
        assert_eq!(f.cut_vertices, vec![2]);
        assert_eq!(f.block_root, vec![0, 2]);
        assert_eq!(f.parent_block, vec![None, Some(0)]);
    }

    #[test]
    fn path_bridges() {
        let f = block_decomposition(&Graph::path(4), 0).unwrap();
        assert_eq!(f.blocks, vec![vec![0, 1], vec![1, 2], vec![2, 3]]);
        assert_eq!(f.block_root, vec![0, 1, 2]);
        assert_eq!(f.parent_block, vec![None, Some(0), Some(1)]);
        assert_eq!(f.cut_vertices, vec![1, 2]);
    }

    #[test]
    fn rooted_in_the_middle() {
        let f = block_decomposition(&Graph::path(3), 1).unwrap();
        assert_eq!(f.block_root, vec![1, 1]);
        assert_eq!(f.parent_block, vec![None, None]);
        assert_eq!(f.cut_vertices, vec![1]);
    }

    #[test]
    fn disconnected_rejected() {
        assert!(block_decomposition(&Graph::edgeless(2), 0).is_err());
    }
}
