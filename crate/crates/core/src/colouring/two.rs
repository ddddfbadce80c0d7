//! 2-colourings with bounded clustering for graphs excluding the `k`-fan,
//! the `k`-fat star and the `k`-fat path.

use super::{parity_colouring, Colouring};
use crate::bounds::{high_degree_threshold_usize, many_high_count};
use crate::error::{input, internal, Error, Result};
use crate::graph::{bfs_layering, block_decomposition, Graph};
use crate::minors::{one_high, two_connected_high, FatKind, FatMinor, MinorModel, OneHigh};

/// A 2-colouring, or a model of one of the three excluded patterns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TwoColourOutcome {
    Coloured(Colouring),
    Witness(FatMinor),
}

/// 2-colouring of a 2-connected graph from BFS layers rooted at `r`.
///
/// Without high-degree vertices this is the parity colouring, which colours
/// `r` properly. Otherwise high-degree vertices are black (colour 1), the
/// other vertices of their layers white (colour 0), and each maximal run of
/// layers `V_i .. V_{i+c}` free of high-degree vertices is coloured by offset
/// `j`: white when `j` is even, and also at `j = c` when `c` is odd.
pub fn two_colour_2connected(g: &Graph, k: usize, r: usize) -> Result<TwoColourOutcome> {
    if g.n() < 3 || !g.is_biconnected() {
        return input("graph must be 2-connected with at least 3 vertices");
    }
    colour_block(g, k, r)
}

fn colour_block(g: &Graph, k: usize, r: usize) -> Result<TwoColourOutcome> {
    if k == 0 {
        return input("k must be at least 1");
    }
    if r >= g.n() {
        return input(format!("root {r} out of range"));
    }
    let d = high_degree_threshold_usize(k);
    let high: Vec<bool> = (0..g.n()).map(|v| g.degree(v) >= d).collect();
    let h = high.iter().filter(|&&x| x).count();
    if h == 0 {
        return parity_colouring(g, r).map(TwoColourOutcome::Coloured);
    }
    if h >= many_high_count(k) {
        return match two_connected_high(g, k)? {
            Some(f) => Ok(TwoColourOutcome::Witness(f)),
            None => internal("high-degree count changed between checks"),
        };
    }
    let lay = bfs_layering(g, r)?;
    let layers = lay.layers.len();
    let marked: Vec<bool> = lay.layers.iter().map(|l| l.iter().any(|&v| high[v])).collect();
    let mut layer_colour = vec![0usize; layers];
    let mut i = 0;
    while i < layers {
        if marked[i] {
            i += 1;
            continue;
        }
        let mut end = i;
        while end + 1 < layers && !marked[end + 1] {
            end += 1;
        }
        let c = end - i;
        for j in 0..=c {
            let white = j % 2 == 0 || (c % 2 == 1 && j == c);
            layer_colour[i + j] = usize::from(!white);
        }
        i = end + 1;
    }
    let colour = (0..g.n())
        .map(|v| if high[v] { 1 } else { layer_colour[lay.layer[v]] })
        .collect();
    Ok(TwoColourOutcome::Coloured(Colouring::new(colour)))
}

/// 2-colouring of an arbitrary graph, block by block.
///
/// Each component is rooted at its least vertex. Blocks are coloured in
/// order of distance from the root and colour-swapped to agree with the
/// parent block at their root. A vertex lying in `k` high-degree pairs
/// (block, vertex) yields a `k`-fat star instead.
pub fn two_colour(g: &Graph, k: usize) -> Result<TwoColourOutcome> {
    if k == 0 {
        return input("k must be at least 1");
    }
    let d = high_degree_threshold_usize(k);
    let mut colour = vec![usize::MAX; g.n()];
    for comp in g.connected_components() {
        let (cg, cmap) = g.induced(&comp);
        let forest = block_decomposition(&cg, 0)?;
        let blocks: Vec<(Graph, Vec<usize>)> = forest.blocks.iter().map(|b| cg.induced(b)).collect();

        let mut pairs: Vec<Vec<usize>> = vec![Vec::new(); cg.n()];
        for (bi, (bg, bmap)) in blocks.iter().enumerate() {
            for v in 0..bg.n() {
                if bg.degree(v) >= d {
                    pairs[bmap[v]].push(bi);
                }
            }
        }
        if let Some(v) = (0..cg.n()).find(|&v| pairs[v].len() >= k) {
            let f = fat_star_at(&blocks, &pairs[v][..k], v, k)?;
            let f = f.relabel(&cmap);
            f.check(g).map_err(|e| Error::Internal(format!("block fat star: {e}")))?;
            return Ok(TwoColourOutcome::Witness(f));
        }

        let mut local = vec![usize::MAX; cg.n()];
        for (bi, (bg, bmap)) in blocks.iter().enumerate() {
            let root = forest.block_root[bi];
            let lr = bmap.iter().position(|&u| u == root).expect("root in block");
            match colour_block(bg, k, lr)? {
                TwoColourOutcome::Witness(f) => {
                    let f = f.relabel(bmap).relabel(&cmap);
                    return Ok(TwoColourOutcome::Witness(f));
                }
                TwoColourOutcome::Coloured(c) => {
                    let flip = local[root] != usize::MAX && local[root] != c.colour(lr);
                    for (i, &u) in bmap.iter().enumerate() {
                        let x = if flip { 1 - c.colour(i) } else { c.colour(i) };
                        if u != root || local[root] == usize::MAX {
                            local[u] = x;
                        }
                    }
                }
            }
        }
        for (i, &u) in cmap.iter().enumerate() {
            colour[u] = local[i];
        }
    }
    Ok(TwoColourOutcome::Coloured(Colouring::new(colour)))
}

/// Fat star centred at component vertex `v` from `k` blocks in which `v`
/// has high degree.
fn fat_star_at(blocks: &[(Graph, Vec<usize>)], chosen: &[usize], v: usize, k: usize) -> Result<FatMinor> {
    let mut sets = vec![Vec::new(); 1 + k + k * k];
    sets[0].push(v);
    for (i, &bi) in chosen.iter().enumerate() {
        let (bg, bmap) = &blocks[bi];
        let lv = bmap.iter().position(|&u| u == v).expect("v in block");
        match one_high(bg, lv, k, k + 1)? {
            OneHigh::Fan(f) => return Ok(f.relabel(bmap)),
            OneHigh::Spread { x, s } => {
                sets[0].push(bmap[s[0]]);
                sets[i + 1] = x.iter().map(|&u| bmap[u]).collect();
                for j in 0..k {
                    sets[k + 1 + i * k + j] = vec![bmap[s[1 + j]]];
                }
            }
        }
    }
    Ok(FatMinor { kind: FatKind::FatStar, k, model: MinorModel::new(sets) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colouring::verify_clustering;

    fn coloured(o: TwoColourOutcome) -> Colouring {
        match o {
            TwoColourOutcome::Coloured(c) => c,
            TwoColourOutcome::Witness(f) => panic!("unexpected witness {f:?}"),
        }
    }

    #[test]
    fn parity_cases() {
        let c = coloured(two_colour_2connected(&Graph::cycle(12), 3, 0).unwrap());
        assert!(verify_clustering(&Graph::cycle(12), &c).unwrap().max_component <= 2);
        let k29 = Graph::complete_bipartite(2, 9);
        let c = coloured(two_colour_2connected(&k29, 3, 0).unwrap());
        assert!(verify_clustering(&k29, &c).unwrap().max_component <= 9);
        let c = coloured(two_colour_2connected(&Graph::complete(3), 2, 0).unwrap());
        let r = verify_clustering(&Graph::complete(3), &c).unwrap();
        assert_eq!((r.num_colours, r.max_component), (2, 2));
        assert!(two_colour_2connected(&Graph::path(3), 2, 0).is_err());
    }

    #[test]
    fn high_degree_layers() {
        // Three vertices of degree >= 57 (k = 1) in a 2-connected graph.
        let g = Graph::complete_bipartite(3, 60);
        match two_colour_2connected(&g, 1, 0).unwrap() {
            TwoColourOutcome::Witness(f) => f.check(&g).unwrap(),
            TwoColourOutcome::Coloured(_) => panic!("k = 1 must find a witness"),
        }
        let g = Graph::complete_bipartite(2, 60);
        let c = coloured(two_colour_2connected(&g, 1, 0).unwrap());
        assert_eq!(c.colour(0), 1);
        assert_eq!(c.colour(1), 1);
    }

    #[test]
    fn bowtie_blocks_agree() {
        let g = Graph::new(5, &[(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)]).unwrap();
        let c = coloured(two_colour(&g, 2).unwrap());
        assert!(c.num_colours() <= 2);
        assert!(verify_clustering(&g, &c).unwrap().max_component <= 3);
    }

    #[test]
    fn trees_and_cycles() {
        let c = coloured(two_colour(&Graph::cycle(9), 3).unwrap());
        assert!(verify_clustering(&Graph::cycle(9), &c).unwrap().max_component <= 3);
        let t = Graph::star(7);
        let c = coloured(two_colour(&t, 3).unwrap());
        assert_eq!(c.num_colours(), 2);
    }
}
