//! Layered colourings: BFS layers alternate between two palettes, and each
//! layer is coloured recursively after removing a small set of vertices.

use super::{verify_clustering, write_back, Colouring};
use crate::bounds::{heart_colours, saturating_pow, weak_closure_colours};
use crate::error::{input, internal, Error, Result};
use crate::generators::{closure_tree, kary_tree_size, weak_closure_tree};
use crate::graph::{bfs_layering, treewidth_exact, Graph};
use crate::limits::Limits;
use crate::minors::{has_minor, split_weak_model, MinorModel, Search};

/// Least set `X` with `G - X` free of an `H` minor, by subset enumeration in
/// order of size.
///
/// Checks that `G` has treewidth at most `w` and no minor of `p` disjoint
/// copies of `H`. The answer must then have at most `p w c` vertices, `c`
/// being the number of components of `H`; exceeding it is an internal error.
pub fn erdos_posa_hitting_set(g: &Graph, h: &Graph, p: usize, w: usize, limits: &Limits) -> Result<Vec<usize>> {
    if h.is_empty() || p == 0 || w == 0 {
        return input("need a nonempty pattern and p, w >= 1");
    }
    let tw = treewidth_exact(g, limits)?;
    if tw > w {
        return input(format!("treewidth {tw} exceeds w = {w}"));
    }
    match has_minor(g, &h.copies(p), limits) {
        Search::Absent => {}
        Search::Found(m) => {
            return input(format!("graph contains {p} disjoint copies of the pattern: {:?}", m.branch_sets))
        }
        Search::Indeterminate => return Err(Error::Budget("packing check ran out of budget".into())),
    }
    hitting_set(g, h, p * w * h.connected_components().len(), limits)
}

/// Subset enumeration without the precondition checks; `bound` is asserted.
pub(crate) fn hitting_set(g: &Graph, h: &Graph, bound: usize, limits: &Limits) -> Result<Vec<usize>> {
    let n = g.n();
    if h.n() == 1 {
        if n > bound {
            return internal(format!("hitting set needs all {n} vertices, bound is {bound}"));
        }
        return Ok((0..n).collect());
    }
    for size in 0..=n.min(bound) {
        let mut subset: Vec<usize> = (0..size).collect();
        loop {
            let (rest, _) = g.remove_vertices(&subset);
            match has_minor(&rest, h, limits) {
                Search::Absent => return Ok(subset),
                Search::Found(_) => {}
                Search::Indeterminate => {
                    return Err(Error::Budget("hitting-set minor test ran out of budget".into()))
                }
            }
            if !next_combination(&mut subset, n) {
                break;
            }
        }
    }
    internal(format!("no hitting set of size at most {bound}"))
}

fn next_combination(c: &mut [usize], n: usize) -> bool {
    let k = c.len();
    for i in (0..k).rev() {
        if c[i] < n - k + i {
            c[i] += 1;
            for j in i + 1..k {
                c[j] = c[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// `(2^h - 2)`-colouring with clustering `k w` of a graph of treewidth at
/// most `w` without a minor of the closure of `T(h, k)`.
///
/// In every BFS layer a least hitting set for the closure of `T(h-1, k)`
/// takes one colour and the rest of the layer is coloured recursively. Even
/// layers use colours `0 .. 2^(h-1)-1`, odd layers the next block of the
/// same size; the hitting-set colour is the last of each block and the root
/// of every component takes the even one.
pub fn heart_colouring(g: &Graph, h: usize, k: usize, w: usize, limits: &Limits) -> Result<Colouring> {
    if h == 0 || k == 0 || w == 0 {
        return input("h, k and w must be at least 1");
    }
    let forest = g.edge_count() + g.connected_components().len() == g.n();
    if !forest {
        let tw = treewidth_exact(g, limits)?;
        if tw > w {
            return input(format!("treewidth {tw} exceeds w = {w}"));
        }
    }
    match has_minor(g, &closure_tree(h, k)?, limits) {
        Search::Absent => {}
        Search::Found(m) => return input(format!("graph contains the excluded closure: {:?}", m.branch_sets)),
        Search::Indeterminate => return Err(Error::Budget("exclusion check ran out of budget".into())),
    }
    let colour = heart_rec(g, h, k, w, limits)?;
    let col = Colouring::new(colour);
    let report = verify_clustering(g, &col)?;
    if report.num_colours > heart_colours(h) || report.max_component > k * w {
        return internal(format!(
            "colouring uses {} colours with clustering {}, bound is {} with {}",
            report.num_colours,
            report.max_component,
            heart_colours(h),
            k * w
        ));
    }
    Ok(col)
}

fn heart_rec(g: &Graph, h: usize, k: usize, w: usize, limits: &Limits) -> Result<Vec<usize>> {
    if h == 1 {
        if g.n() > 0 {
            return internal("a nonempty graph reached depth 1");
        }
        return Ok(Vec::new());
    }
    let inner = heart_colours(h - 1);
    let block = inner + 1;
    let pattern = closure_tree(h - 1, k)?;
    let mut colour = vec![0usize; g.n()];
    for comp in g.connected_components() {
        let (cg, cmap) = g.induced(&comp);
        let lay = bfs_layering(&cg, 0)?;
        colour[cmap[0]] = inner;
        for (i, layer) in lay.layers.iter().enumerate().skip(1) {
            let offset = if i % 2 == 0 { 0 } else { block };
            let (lg, lmap) = cg.induced(layer);
            let x = hitting_set(&lg, &pattern, k * w, limits)?;
            for &v in &x {
                colour[cmap[lmap[v]]] = offset + inner;
            }
            let (rest, rmap) = lg.remove_vertices(&x);
            let sub = heart_rec(&rest, h - 1, k, w, limits)?;
            let outer: Vec<usize> = rmap.iter().map(|&v| cmap[lmap[v]]).collect();
            write_back(&mut colour, &outer, &sub, offset);
        }
    }
    Ok(colour)
}

/// A colouring, or a model of the weak closure of `T(h, k)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WeakClosureOutcome {
    Coloured(Colouring),
    Witness(MinorModel),
}

/// `f(h) = (4^h - 4)/6` colours with bounded clustering, or a model of the
/// weak closure of `T(h, k)` in `g`.
///
/// Per BFS layer, `s` is the largest count of disjoint subgraphs carrying
/// the weak closure of `T(h-1, max(1, 6^(k-s)) k)`, searched from `s = k`
/// down. Each of the `s` models is split in two; the shared vertices take
/// one colour, and the two remainders are coloured recursively with palettes
/// `0 .. f(h-1)` and `f(h-1) .. 2 f(h-1)`. The shared colour is `2 f(h-1)`
/// and odd layers are shifted by `2 f(h-1) + 1`.
pub fn weak_closure_colouring(g: &Graph, h: usize, k: usize, limits: &Limits) -> Result<WeakClosureOutcome> {
    if h == 0 || k == 0 {
        return input("h and k must be at least 1");
    }
    let out = wc_rec(g, h, k, limits)?;
    match &out {
        WeakClosureOutcome::Coloured(col) => {
            let report = verify_clustering(g, col)?;
            if report.num_colours > weak_closure_colours(h) {
                return internal(format!("{} colours exceed f(h) = {}", report.num_colours, weak_closure_colours(h)));
            }
        }
        WeakClosureOutcome::Witness(m) => {
            m.check(g, &weak_closure_tree(h, k)?)
                .map_err(|e| Error::Internal(format!("weak-closure witness: {e}")))?;
        }
    }
    Ok(out)
}

fn wc_rec(g: &Graph, h: usize, k: usize, limits: &Limits) -> Result<WeakClosureOutcome> {
    if h == 1 {
        return Ok(if g.n() == 0 {
            WeakClosureOutcome::Coloured(Colouring::new(Vec::new()))
        } else {
            WeakClosureOutcome::Witness(MinorModel::new(vec![vec![0]]))
        });
    }
    let f = weak_closure_colours(h - 1);
    let block = 2 * f + 1;
    let mut colour = vec![0usize; g.n()];
    for comp in g.connected_components() {
        let (cg, cmap) = g.induced(&comp);
        let lay = bfs_layering(&cg, 0)?;
        colour[cmap[0]] = 2 * f;
        for (i, layer) in lay.layers.iter().enumerate().skip(1) {
            let offset = if i % 2 == 0 { 0 } else { block };
            let (lg, lmap) = cg.induced(layer);
            let outer: Vec<usize> = lmap.iter().map(|&v| cmap[v]).collect();
            let (s, models) = disjoint_family(&lg, h - 1, k, limits)?;
            if s >= k {
                let root: Vec<usize> = lay.prefix(i).iter().map(|&v| cmap[v]).collect();
                let m = apex_model(h, k, root, &models, &outer);
                return Ok(WeakClosureOutcome::Witness(m));
            }
            if s == 0 {
                let param = saturating_pow(6, k - 1).saturating_mul(k);
                let sub = expect_coloured(wc_rec(&lg, h - 1, param, limits)?)?;
                write_back(&mut colour, &outer, &sub, offset);
                continue;
            }
            let param = saturating_pow(6, k - s - 1).saturating_mul(k);
            let mut in_first = vec![false; lg.n()];
            let mut in_second = vec![false; lg.n()];
            let mut shared = vec![false; lg.n()];
            for m in &models {
                let (a, b, x) = if h - 1 == 1 {
                    let v = m.branch_sets[0][0];
                    (vec![v], vec![v], vec![v])
                } else {
                    let sp = split_weak_model(&lg, m, h - 1, param)?;
                    (sp.first.vertices(), sp.second.vertices(), sp.shared)
                };
                a.iter().for_each(|&v| in_first[v] = true);
                b.iter().for_each(|&v| in_second[v] = true);
                x.iter().for_each(|&v| shared[v] = true);
            }
            let a_side: Vec<usize> = (0..lg.n()).filter(|&v| !in_first[v] && !shared[v]).collect();
            let b_side: Vec<usize> =
                (0..lg.n()).filter(|&v| !in_second[v] && !shared[v] && in_first[v]).collect();
            for v in (0..lg.n()).filter(|&v| shared[v]) {
                colour[outer[v]] = offset + 2 * f;
            }
            for (side, base) in [(a_side, 0), (b_side, f)] {
                let (sg, smap) = lg.induced(&side);
                let sub = expect_coloured(wc_rec(&sg, h - 1, param, limits)?)?;
                let back: Vec<usize> = smap.iter().map(|&v| outer[v]).collect();
                write_back(&mut colour, &back, &sub, offset + base);
            }
        }
    }
    Ok(WeakClosureOutcome::Coloured(Colouring::new(colour)))
}

fn expect_coloured(o: WeakClosureOutcome) -> Result<Vec<usize>> {
    match o {
        WeakClosureOutcome::Coloured(c) => Ok(c.as_slice().to_vec()),
        WeakClosureOutcome::Witness(_) => internal("a maximal disjoint family missed a model"),
    }
}

/// Largest `s <= k` with `s` disjoint models of the weak closure of
/// `T(h, max(1, 6^(k-s)) k)` in `g`, and those models.
fn disjoint_family(g: &Graph, h: usize, k: usize, limits: &Limits) -> Result<(usize, Vec<MinorModel>)> {
    for s in (1..=k).rev() {
        let arity = saturating_pow(6, k - s).saturating_mul(k);
        let size = kary_tree_size(h, arity);
        if size.saturating_mul(s) > g.n() {
            continue;
        }
        let one = weak_closure_tree(h, arity)?;
        match has_minor(g, &one.copies(s), limits) {
            Search::Found(m) => {
                let models = (0..s)
                    .map(|j| MinorModel::new(m.branch_sets[j * size..(j + 1) * size].to_vec()))
                    .collect();
                return Ok((s, models));
            }
            Search::Absent => {}
            Search::Indeterminate => {
                return Err(Error::Budget(format!("disjoint-model search for s = {s} ran out of budget")))
            }
        }
    }
    Ok((0, Vec::new()))
}

/// Model of the weak closure of `T(h, k)` with root branch set `root` and
/// the `k` given models of `T(h-1, k)` under it.
fn apex_model(h: usize, k: usize, root: Vec<usize>, models: &[MinorModel], outer: &[usize]) -> MinorModel {
    let mut sets = vec![Vec::new(); kary_tree_size(h, k)];
    sets[0] = root;
    let small = kary_tree_size(h - 1, k);
    for (j, m) in models.iter().take(k).enumerate() {
        let mut stack = vec![(0usize, 1 + j)];
        while let Some((t, idx)) = stack.pop() {
            sets[idx] = m.branch_sets[t].iter().map(|&v| outer[v]).collect();
            for c in 0..k {
                if k * t + 1 + c < small {
                    stack.push((k * t + 1 + c, k * idx + 1 + c));
                }
            }
        }
    }
    MinorModel::new(sets)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lim() -> Limits {
        Limits::default()
    }

    #[test]
    fn hitting_sets() {
        let x = erdos_posa_hitting_set(&Graph::complete(3), &Graph::complete(3), 2, 2, &lim()).unwrap();
        assert_eq!(x.len(), 1);
        let x = erdos_posa_hitting_set(&Graph::path(5), &Graph::path(2), 3, 1, &lim()).unwrap();
        assert_eq!(x.len(), 2);
        let x = erdos_posa_hitting_set(&Graph::path(4), &Graph::complete(3), 1, 1, &lim()).unwrap();
        assert!(x.is_empty());
        assert!(erdos_posa_hitting_set(&Graph::complete(4), &Graph::complete(3), 1, 2, &lim()).is_err());
    }

    #[test]
    fn heart_small_cases() {
        let c = heart_colouring(&Graph::edgeless(0), 1, 1, 1, &lim()).unwrap();
        assert_eq!(c.len(), 0);
        assert!(heart_colouring(&Graph::path(2), 1, 1, 1, &lim()).is_err());
        let p10 = Graph::path(10);
        let c = heart_colouring(&p10, 2, 3, 1, &lim()).unwrap();
        let r = verify_clustering(&p10, &c).unwrap();
        assert!(r.num_colours <= 2 && r.max_component <= 3);
        let c8 = Graph::cycle(8);
        let c = heart_colouring(&c8, 3, 2, 2, &lim()).unwrap();
        let r = verify_clustering(&c8, &c).unwrap();
        assert!(r.num_colours <= 6 && r.max_component <= 4);
    }

    #[test]
    fn weak_closure_small_cases() {
        match weak_closure_colouring(&Graph::path(6), 2, 1, &lim()).unwrap() {
            WeakClosureOutcome::Witness(m) => m.check(&Graph::path(6), &Graph::complete(2)).unwrap(),
            WeakClosureOutcome::Coloured(_) => panic!("every edge is a K_2 model"),
        }
        match weak_closure_colouring(&Graph::edgeless(0), 1, 3, &lim()).unwrap() {
            WeakClosureOutcome::Coloured(c) => assert!(c.is_empty()),
            WeakClosureOutcome::Witness(_) => panic!("empty graph"),
        }
        assert!(matches!(
            weak_closure_colouring(&Graph::edgeless(1), 1, 3, &lim()).unwrap(),
            WeakClosureOutcome::Witness(_)
        ));
        // A star with 3 leaves has no W(2,4) = K_{1,4} minor.
        match weak_closure_colouring(&Graph::star(3), 2, 4, &lim()).unwrap() {
            WeakClosureOutcome::Coloured(c) => assert!(c.num_colours() <= 2),
            WeakClosureOutcome::Witness(_) => panic!("too small for K_1,4"),
        }
    }
}
