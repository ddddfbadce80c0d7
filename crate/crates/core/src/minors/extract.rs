//! Constructive extraction of fan, fat-star and fat-path models from dense
//! structure, following the 2-colouring argument step by step.

use std::collections::{HashMap, VecDeque};

use serde::Serialize;

use super::{MinorModel, StrongModel};
use crate::bounds::{high_degree_threshold_usize, many_high_count, saturating_pow};
use crate::error::{input, internal, Error, Result};
use crate::generators::{complete_kary_tree, fan, fat_path, fat_star, kary_tree_size};
use crate::graph::{BfsLayering, Graph};

/// The three patterns that block 2-colourings with bounded clustering.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FatKind {
    Fan,
    FatStar,
    FatPath,
}

impl FatKind {
    pub fn pattern(self, k: usize) -> Graph {
        match self {
            FatKind::Fan => fan(k),
            FatKind::FatStar => fat_star(k),
            FatKind::FatPath => fat_path(k),
        }
        .expect("k >= 1")
    }

    pub fn name(self) -> &'static str {
        match self {
            FatKind::Fan => "fan",
            FatKind::FatStar => "fat-star",
            FatKind::FatPath => "fat-path",
        }
    }
}

/// A model of the `k`-fan, `k`-fat star or `k`-fat path.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FatMinor {
    pub kind: FatKind,
    pub k: usize,
    pub model: MinorModel,
}

impl FatMinor {
    pub fn pattern(&self) -> Graph {
        self.kind.pattern(self.k)
    }

    pub fn check(&self, host: &Graph) -> std::result::Result<(), String> {
        self.model.check(host, &self.pattern())
    }

    pub fn relabel(&self, map: &[usize]) -> Self {
        Self { kind: self.kind, k: self.k, model: self.model.relabel(map) }
    }

    fn verified(self, host: &Graph, step: &str) -> Result<Self> {
        match self.check(host) {
            Ok(()) => Ok(self),
            Err(e) => internal(format!("{step} built an invalid {} model: {e}", self.kind.name())),
        }
    }
}

/// Fan model from a path: the first `k` path vertices satisfying `hit` start
/// the spine segments, `apex` is the dominant branch set.
fn fan_along_path(path: &[usize], hit: impl Fn(usize) -> bool, apex: Vec<usize>, k: usize) -> Option<FatMinor> {
    let starts: Vec<usize> = (0..path.len()).filter(|&i| hit(path[i])).take(k).collect();
    if starts.len() < k {
        return None;
    }
    let mut sets = Vec::with_capacity(k + 1);
    for j in 0..k {
        let end = if j + 1 < k { starts[j + 1] } else { starts[j] + 1 };
        sets.push(path[starts[j]..end].to_vec());
    }
    sets.push(apex);
    Some(FatMinor { kind: FatKind::Fan, k, model: MinorModel::new(sets) })
}

/// Minor model of the closure of `T(h, k-1)` inside the weak closure of
/// `T(h, k)`, both in breadth-first numbering.
///
/// The last child of every node is red; the others are blue. Blue nodes whose
/// ancestors are all blue form a copy of `T(h, k-1)`; each of its internal
/// nodes absorbs the subtree under its red child.
pub fn weak_to_closure_model(h: usize, k: usize) -> Result<MinorModel> {
    if h < 2 || k < 2 {
        return input("the weak-closure model needs h >= 2 and k >= 2");
    }
    let t = complete_kary_tree(h, k)?;
    let small = kary_tree_size(h, k - 1);
    let mut old_of = vec![0usize; small];
    for i in 0..small {
        for c in 0..k - 1 {
            let child = (k - 1) * i + 1 + c;
            if child < small {
                old_of[child] = k * old_of[i] + 1 + c;
            }
        }
    }
    let mut sets = Vec::with_capacity(small);
    for &o in &old_of {
        let mut set = vec![o];
        if !t.is_leaf(o) {
            let mut stack = vec![k * o + k];
            while let Some(u) = stack.pop() {
                set.push(u);
                stack.extend_from_slice(t.children(u));
            }
        }
        sets.push(set);
    }
    Ok(MinorModel::new(sets))
}

/// Merges the components of a strong model's pattern into one, consuming
/// two witnesses per edge for each merge.
///
/// The input must carry at least `k + 2c - 2` witnesses per edge, where `c`
/// is the number of pattern components after isolated vertices are dropped.
/// The result has a connected pattern with the same number of edges and at
/// least `k` witnesses per edge.
pub fn make_connected_model(g: &Graph, sm: &StrongModel, k: usize) -> Result<StrongModel> {
    sm.check(g, 0).map_err(Error::Input)?;
    if !g.is_connected() {
        return input("host graph must be connected");
    }
    let mut cur = drop_isolated(sm);
    let mut c = cur.pattern.connected_components().len();
    if c <= 1 {
        return Ok(cur);
    }
    let need = k + 2 * c - 2;
    if cur.min_witnesses() < need {
        return input(format!(
            "merging {c} components needs {need} witnesses per edge, found {}",
            cur.min_witnesses()
        ));
    }
    while c > 1 {
        let t = k + 2 * c - 2;
        for w in &mut cur.witnesses {
            w.truncate(t);
        }
        cur = merge_once(g, &cur)?;
        c -= 1;
    }
    cur.check(g, k).map_err(|e| Error::Internal(format!("component merge: {e}")))?;
    Ok(cur)
}

fn drop_isolated(sm: &StrongModel) -> StrongModel {
    let keep: Vec<usize> = (0..sm.pattern.n()).filter(|&v| sm.pattern.degree(v) > 0).collect();
    if keep.len() == sm.pattern.n() || sm.pattern.edge_count() == 0 {
        return sm.clone();
    }
    let (pattern, _) = sm.pattern.induced(&keep);
    StrongModel {
        pattern,
        branch_sets: keep.iter().map(|&v| sm.branch_sets[v].clone()).collect(),
        witnesses: sm.witnesses.clone(),
    }
}

fn merge_once(g: &Graph, sm: &StrongModel) -> Result<StrongModel> {
    let p = &sm.pattern;
    let edges = p.edges();
    let comps = p.connected_components();
    let mut comp_of = vec![0; p.n()];
    for (a, comp) in comps.iter().enumerate() {
        for &v in comp {
            comp_of[v] = a;
        }
    }
    let mut owner = vec![None; g.n()];
    for (x, set) in sm.branch_sets.iter().enumerate() {
        for &v in set {
            owner[v] = Some(x);
        }
    }
    // Region of each host vertex; a witness may serve two components.
    let mut region: Vec<Option<usize>> = vec![None; g.n()];
    let mut shared = None;
    for (x, set) in sm.branch_sets.iter().enumerate() {
        for &v in set {
            region[v] = Some(comp_of[x]);
        }
    }
    for (e, &(x, _)) in edges.iter().enumerate() {
        for &v in &sm.witnesses[e] {
            match region[v] {
                Some(a) if a != comp_of[x] => {
                    if shared.is_none() {
                        shared = Some(v);
                    }
                }
                _ => region[v] = Some(comp_of[x]),
            }
        }
    }
    let path = match shared {
        Some(v) => vec![v],
        None => connecting_path(g, &region).ok_or_else(|| {
            Error::Internal("no path joins two decorated components".into())
        })?,
    };
    let x = path[0];
    let y = *path.last().expect("nonempty path");
    let anchor = |v: usize, avoid: Option<usize>| -> Option<usize> {
        if let Some(i) = owner[v] {
            return Some(i);
        }
        edges.iter().enumerate().find_map(|(e, &(a, _))| {
            (sm.witnesses[e].contains(&v) && Some(comp_of[a]) != avoid).then_some(a)
        })
    };
    let i = anchor(x, None).ok_or_else(|| Error::Internal("path start is not decorated".into()))?;
    let j = anchor(y, Some(comp_of[i]))
        .ok_or_else(|| Error::Internal("path end is not decorated".into()))?;

    // Identify j with i.
    let new_index = |v: usize| -> usize {
        let v = if v == j { i } else { v };
        if v > j {
            v - 1
        } else {
            v
        }
    };
    let mut merged = sm.branch_sets[i].clone();
    merged.extend_from_slice(&sm.branch_sets[j]);
    merged.extend_from_slice(&path);
    merged.sort_unstable();
    merged.dedup();
    let mut branch_sets = vec![Vec::new(); p.n() - 1];
    for (v, set) in sm.branch_sets.iter().enumerate() {
        if v != i && v != j {
            branch_sets[new_index(v)] = set.clone();
        }
    }
    branch_sets[new_index(i)] = merged;
    let mut by_edge = HashMap::new();
    let mut new_edges = Vec::with_capacity(edges.len());
    for (e, &(a, b)) in edges.iter().enumerate() {
        let (u, w) = (new_index(a), new_index(b));
        let key = (u.min(w), u.max(w));
        let list: Vec<usize> = sm.witnesses[e].iter().copied().filter(|v| !path.contains(v)).collect();
        by_edge.insert(key, list);
        new_edges.push(key);
    }
    let pattern = Graph::new(p.n() - 1, &new_edges)?;
    let witnesses = pattern.edges().iter().map(|e| by_edge.remove(e).unwrap_or_default()).collect();
    Ok(StrongModel { pattern, branch_sets, witnesses })
}

/// Shortest path between two differently labelled regions whose interior
/// avoids every region.
fn connecting_path(g: &Graph, region: &[Option<usize>]) -> Option<Vec<usize>> {
    let n = g.n();
    let mut label = region.to_vec();
    let mut parent = vec![usize::MAX; n];
    let mut dist = vec![0usize; n];
    let mut queue: VecDeque<usize> = (0..n).filter(|&v| region[v].is_some()).collect();
    while let Some(u) = queue.pop_front() {
        for &w in g.neighbours(u) {
            if label[w].is_none() {
                label[w] = label[u];
                parent[w] = u;
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    let mut best: Option<(usize, usize, usize)> = None;
    for u in 0..n {
        for &w in g.neighbours(u) {
            if let (Some(a), Some(b)) = (label[u], label[w]) {
                if a != b && u < w {
                    let len = dist[u] + dist[w];
                    if best.map_or(true, |(l, _, _)| len < l) {
                        best = Some((len, u, w));
                    }
                }
            }
        }
    }
    let (_, u, w) = best?;
    let trace = |mut v: usize| {
        let mut out = vec![v];
        while parent[v] != usize::MAX {
            v = parent[v];
            out.push(v);
        }
        out
    };
    let mut path = trace(u);
    path.reverse();
    path.extend(trace(w));
    Some(path)
}

/// Turns a strong model with `k(k+1)` witnesses per edge into a `k`-fat
/// star or `k`-fat path model.
///
/// The pattern must contain a `k`-leaf star or a `k`-vertex path as a
/// subgraph; this is what a connected pattern with `k^k` edges guarantees.
pub fn fat_minor_from_strong_model(g: &Graph, sm: &StrongModel, k: usize) -> Result<FatMinor> {
    sm.check(g, 0).map_err(Error::Input)?;
    if k == 0 {
        return input("k must be at least 1");
    }
    let p = &sm.pattern;
    if p.n() == 0 {
        return input("pattern is empty");
    }
    if k == 1 {
        let model = MinorModel::new(vec![sm.branch_sets[0].clone()]);
        return FatMinor { kind: FatKind::FatPath, k, model }.verified(g, "strong-model contraction");
    }
    let index: HashMap<(usize, usize), usize> =
        p.edges().into_iter().enumerate().map(|(e, uv)| (uv, e)).collect();
    let (kind, spine, pairs): (FatKind, Vec<usize>, Vec<(usize, usize)>) =
        if let Some(c) = (0..p.n()).find(|&v| p.degree(v) >= k) {
            let leaves: Vec<usize> = p.neighbours(c)[..k].to_vec();
            let pairs = leaves.iter().map(|&l| (c, l)).collect();
            let mut spine = vec![c];
            spine.extend(leaves);
            (FatKind::FatStar, spine, pairs)
        } else if let Some(path) = simple_path(p, k) {
            let pairs = path.windows(2).map(|w| (w[0], w[1])).collect();
            (FatKind::FatPath, path, pairs)
        } else {
            return input(format!("pattern has neither a {k}-leaf star nor a {k}-vertex path"));
        };
    let mut used = vec![false; g.n()];
    let mut groups = Vec::with_capacity(pairs.len());
    for &(a, b) in &pairs {
        let e = index[&(a.min(b), a.max(b))];
        let avail: Vec<usize> = sm.witnesses[e].iter().copied().filter(|&v| !used[v]).take(k + 1).collect();
        if avail.len() < k + 1 {
            return input(format!("edge {a}-{b} lacks {} unused witnesses", k + 1));
        }
        for &v in &avail {
            used[v] = true;
        }
        groups.push(avail);
    }
    let pattern_order = kind.pattern(k).n();
    let mut sets = vec![Vec::new(); pattern_order];
    match kind {
        FatKind::FatStar => {
            sets[0] = sm.branch_sets[spine[0]].clone();
            for i in 1..=k {
                let n_i = &groups[i - 1];
                let mut leaf = sm.branch_sets[spine[i]].clone();
                leaf.push(n_i[0]);
                sets[i] = leaf;
                for j in 0..k {
                    sets[k + 1 + (i - 1) * k + j] = vec![n_i[1 + j]];
                }
            }
        }
        FatKind::FatPath => {
            for i in 0..k {
                let mut s = sm.branch_sets[spine[i]].clone();
                if i + 1 < k {
                    s.push(groups[i][0]);
                    for j in 0..k {
                        sets[k + i * k + j] = vec![groups[i][1 + j]];
                    }
                }
                sets[i] = s;
            }
        }
        FatKind::Fan => unreachable!("fans do not come from strong models"),
    }
    FatMinor { kind, k, model: MinorModel::new(sets) }.verified(g, "strong-model contraction")
}

/// Lexicographically first simple path on `k` vertices, if any.
fn simple_path(p: &Graph, k: usize) -> Option<Vec<usize>> {
    fn extend(p: &Graph, k: usize, path: &mut Vec<usize>, on: &mut [bool]) -> bool {
        if path.len() == k {
            return true;
        }
        let last = *path.last().expect("nonempty");
        for &w in p.neighbours(last) {
            if !on[w] {
                on[w] = true;
                path.push(w);
                if extend(p, k, path, on) {
                    return true;
                }
                path.pop();
                on[w] = false;
            }
        }
        false
    }
    for s in 0..p.n() {
        let mut on = vec![false; p.n()];
        on[s] = true;
        let mut path = vec![s];
        if extend(p, k, &mut path, &mut on) {
            return Some(path);
        }
    }
    None
}

/// Truncates a strong model to `k^k` edges, merges its components and
/// contracts it to a `k`-fat star or `k`-fat path.
pub fn disjoint_model_to_minor(g: &Graph, sm: &StrongModel, k: usize) -> Result<FatMinor> {
    if k == 0 {
        return input("k must be at least 1");
    }
    let kk = saturating_pow(k, k);
    let edges = sm.pattern.edges();
    if edges.len() < kk {
        return input(format!("pattern has {} edges, needs {kk}", edges.len()));
    }
    let pattern = Graph::new(sm.pattern.n(), &edges[..kk])?;
    let trimmed = StrongModel {
        pattern,
        branch_sets: sm.branch_sets.clone(),
        witnesses: sm.witnesses[..kk].to_vec(),
    };
    let trimmed = drop_isolated(&trimmed);
    let c = trimmed.pattern.connected_components().len();
    let need = k * k + k + 2 * c - 2;
    if trimmed.min_witnesses() < need {
        return input(format!("needs {need} witnesses per edge, found {}", trimmed.min_witnesses()));
    }
    let connected = make_connected_model(g, &trimmed, k * (k + 1))?;
    fat_minor_from_strong_model(g, &connected, k)
}

/// Result of the single-high-degree-vertex step.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OneHigh {
    Fan(FatMinor),
    /// A connected set `x` avoiding `v`, and `l` neighbours `s` of `v`
    /// outside `x`, each adjacent to `x`.
    Spread { x: Vec<usize>, s: Vec<usize> },
}

/// Either a `k`-fan model or a `K_{2,l}` structure around `v`.
///
/// Requires `G` connected, `v` not a cut vertex and `deg(v) >= 2lk`. Paths
/// to the root run along a BFS tree of `G - v` whose parent pointers take
/// the least-index neighbour one layer closer.
pub fn one_high(g: &Graph, v: usize, k: usize, l: usize) -> Result<OneHigh> {
    if v >= g.n() || k == 0 || l == 0 {
        return input("one_high needs a vertex in range and k, l >= 1");
    }
    if g.degree(v) < 2 * l * k {
        return input(format!("degree {} of vertex {v} is below 2lk = {}", g.degree(v), 2 * l * k));
    }
    if !g.is_connected() {
        return input("graph must be connected");
    }
    let (rest, map) = g.remove_vertices(&[v]);
    if !rest.is_connected() {
        return input(format!("vertex {v} is a cut vertex"));
    }
    let n = g.n();
    let mut is_nbr = vec![false; n];
    for &w in g.neighbours(v) {
        is_nbr[w] = true;
    }
    let root = (0..n)
        .find(|&u| u != v && !is_nbr[u])
        .or_else(|| (0..n).find(|&u| u != v))
        .expect("G - v is nonempty");
    let parent = tree_parents(&rest, map.iter().position(|&u| u == root).expect("root survives"));
    let path_of = |w: usize| -> Vec<usize> {
        let mut local = map.iter().position(|&u| u == w).expect("neighbour survives");
        let mut out = vec![w];
        while let Some(p) = parent[local] {
            local = p;
            out.push(map[local]);
        }
        out
    };
    let nbrs = g.neighbours(v).to_vec();
    let paths: Vec<Vec<usize>> = nbrs.iter().map(|&w| path_of(w)).collect();
    for path in &paths {
        if let Some(f) = fan_along_path(path, |u| is_nbr[u], vec![v], k) {
            return f.verified(g, "single high-degree vertex").map(OneHigh::Fan);
        }
    }
    // Underlying graph of the digraph w -> (P_w ∩ N(v)) on N(v).
    let m = nbrs.len();
    let pos: HashMap<usize, usize> = nbrs.iter().enumerate().map(|(i, &w)| (w, i)).collect();
    let mut adj = vec![Vec::new(); m];
    for (i, path) in paths.iter().enumerate() {
        for u in path.iter().skip(1) {
            if let Some(&j) = pos.get(u) {
                adj[i].push(j);
                adj[j].push(i);
            }
        }
    }
    for a in &mut adj {
        a.sort_unstable();
        a.dedup();
    }
    let mut alive: Vec<bool> = nbrs.iter().map(|&w| w != root).collect();
    let mut s = Vec::with_capacity(l);
    while s.len() < l {
        let pick = (0..m)
            .filter(|&i| alive[i])
            .min_by_key(|&i| (adj[i].iter().filter(|&&j| alive[j]).count(), nbrs[i]));
        let Some(i) = pick else { break };
        s.push(i);
        alive[i] = false;
        for &j in &adj[i] {
            alive[j] = false;
        }
    }
    if s.len() < l {
        return internal(format!("greedy stable set stopped at {} of {l}", s.len()));
    }
    let s_vertices: Vec<usize> = {
        let mut t: Vec<usize> = s.iter().map(|&i| nbrs[i]).collect();
        t.sort_unstable();
        t
    };
    let mut x: Vec<usize> = s.iter().flat_map(|&i| paths[i].iter().copied()).filter(|u| !s_vertices.contains(u)).collect();
    x.sort_unstable();
    x.dedup();
    let ok = g.is_connected_set(&x)
        && s_vertices.iter().all(|&w| g.neighbours(w).iter().any(|u| x.binary_search(u).is_ok()));
    if !ok {
        return internal("stable-set paths do not form the promised structure");
    }
    Ok(OneHigh::Spread { x, s: s_vertices })
}

/// BFS parents from `root` choosing the least-index neighbour one layer up.
fn tree_parents(g: &Graph, root: usize) -> Vec<Option<usize>> {
    let order = g.bfs_order(root);
    let mut dist = vec![usize::MAX; g.n()];
    dist[root] = 0;
    for &u in &order {
        for &w in g.neighbours(u) {
            if dist[w] == usize::MAX {
                dist[w] = dist[u] + 1;
            }
        }
    }
    (0..g.n())
        .map(|u| {
            if u == root || dist[u] == usize::MAX {
                None
            } else {
                g.neighbours(u).iter().copied().find(|&w| dist[w] + 1 == dist[u])
            }
        })
        .collect()
}

/// Leaf-growing construction around `k` high-degree vertices `vs`.
///
/// Requires `C = G - vs` connected with every `v_i` having at least `k^3`
/// neighbours in `C`. Each collected set `S_i` stops at exactly `k+1`
/// vertices. Among eligible vertices in the current layer the least index
/// wins, then the least eligible `i`.
pub fn many_high(g: &Graph, vs: &[usize], k: usize) -> Result<FatMinor> {
    if k == 0 || vs.len() != k {
        return input(format!("many_high needs exactly k = {k} >= 1 vertices"));
    }
    let n = g.n();
    let mut blocked = vec![false; n];
    for &v in vs {
        if v >= n || blocked[v] {
            return input("high-degree vertices must be distinct and in range");
        }
        blocked[v] = true;
    }
    let c_vertices: Vec<usize> = (0..n).filter(|&u| !blocked[u]).collect();
    let Some(&r) = c_vertices.first() else {
        return input("G - vs is empty");
    };
    let mut dist = vec![usize::MAX; n];
    dist[r] = 0;
    let mut queue = VecDeque::from([r]);
    while let Some(u) = queue.pop_front() {
        for &w in g.neighbours(u) {
            if !blocked[w] && dist[w] == usize::MAX {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    if c_vertices.iter().any(|&u| dist[u] == usize::MAX) {
        return input("G - vs is disconnected");
    }
    let need = saturating_pow(k, 3);
    let mut nbr_c = vec![vec![false; n]; k];
    for (i, &v) in vs.iter().enumerate() {
        let mut deg = 0;
        for &w in g.neighbours(v) {
            if !blocked[w] {
                nbr_c[i][w] = true;
                deg += 1;
            }
        }
        if deg < need {
            return input(format!("vertex {v} has {deg} neighbours in C, needs {need}"));
        }
    }
    let depth = c_vertices.iter().map(|&u| dist[u]).max().unwrap_or(0);
    let mut layers = vec![Vec::new(); depth + 1];
    for &u in &c_vertices {
        layers[dist[u]].push(u);
    }
    let mut in_x = vec![false; n];
    in_x[r] = true;
    let mut sets: Vec<Vec<usize>> = vec![Vec::new(); k];
    let mut t = depth;
    loop {
        let eligible: Vec<usize> = (0..k).filter(|&i| sets[i].len() <= k).collect();
        if eligible.is_empty() {
            break;
        }
        let pick = layers[t]
            .iter()
            .copied()
            .find(|&u| !in_x[u] && eligible.iter().any(|&i| nbr_c[i][u]));
        let Some(w) = pick else {
            if t == 0 {
                return internal("leaf growing ran out of layers");
            }
            t -= 1;
            continue;
        };
        let i = eligible.iter().copied().find(|&i| nbr_c[i][w]).expect("w is eligible");
        let mut path = vec![w];
        let mut cur = w;
        while !in_x[cur] {
            cur = g
                .neighbours(cur)
                .iter()
                .copied()
                .find(|&u| !blocked[u] && dist[u] + 1 == dist[cur])
                .ok_or_else(|| Error::Internal("BFS layering lost a parent".into()))?;
            path.push(cur);
        }
        for (j, &vj) in vs.iter().enumerate() {
            if let Some(f) = fan_along_path(&path, |u| nbr_c[j][u], vec![vj], k) {
                return f.verified(g, "leaf growing");
            }
        }
        sets[i].push(w);
        for &u in &path {
            in_x[u] = true;
        }
    }
    let mut in_s = vec![false; n];
    for s in &sets {
        for &u in s {
            in_s[u] = true;
        }
    }
    let centre: Vec<usize> = (0..n).filter(|&u| in_x[u] && !in_s[u]).collect();
    let mut branch = vec![Vec::new(); 1 + k + k * k];
    branch[0] = centre;
    for (i, s) in sets.iter().enumerate() {
        branch[i + 1] = vec![vs[i], s[0]];
        for j in 0..k {
            branch[k + 1 + i * k + j] = vec![s[1 + j]];
        }
    }
    FatMinor { kind: FatKind::FatStar, k, model: MinorModel::new(branch) }.verified(g, "leaf growing")
}

/// Strong model on the side `a_side` of a bipartite graph: two vertices of
/// `A` are joined when they have at least `k` common neighbours, which then
/// serve as witnesses. Branch sets are singletons, in the order of `a_side`
/// after sorting.
pub fn find_forest(b: &Graph, a_side: &[usize], k: usize, p: usize) -> Result<StrongModel> {
    let mut a: Vec<usize> = a_side.to_vec();
    a.sort_unstable();
    a.dedup();
    if a.iter().any(|&v| v >= b.n()) {
        return input("side vertex out of range");
    }
    let mut in_a = vec![false; b.n()];
    for &v in &a {
        in_a[v] = true;
    }
    if b.edges().iter().any(|&(u, v)| in_a[u] == in_a[v]) {
        return input("an edge lies inside one side of the bipartition");
    }
    if let Some(w) = (0..b.n()).find(|&w| !in_a[w] && b.degree(w) < 2) {
        return input(format!("vertex {w} on the far side has degree below 2"));
    }
    let heavy = a.iter().filter(|&&v| b.degree(v) >= k * a.len()).count();
    if heavy < p {
        return input(format!("{heavy} side vertices have degree >= k|A|, needs {p}"));
    }
    let mut edges = Vec::new();
    let mut witnesses = Vec::new();
    for i in 0..a.len() {
        for j in i + 1..a.len() {
            let common = sorted_intersection(b.neighbours(a[i]), b.neighbours(a[j]));
            if common.len() >= k {
                edges.push((i, j));
                witnesses.push(common);
            }
        }
    }
    if 2 * edges.len() < p {
        return internal(format!("{} pattern edges for p = {p}", edges.len()));
    }
    Ok(StrongModel {
        pattern: Graph::new(a.len(), &edges)?,
        branch_sets: a.iter().map(|&v| vec![v]).collect(),
        witnesses,
    })
}

fn sorted_intersection(x: &[usize], y: &[usize]) -> Vec<usize> {
    let (mut i, mut j, mut out) = (0, 0, Vec::new());
    while i < x.len() && j < y.len() {
        match x[i].cmp(&y[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(x[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

/// Fan model from a long path confined to layers `i..=i+c` of a BFS
/// layering: either `k` path vertices sit in layer `i` and the earlier layers
/// contract to the apex, or the longest run of the path below layer `i`
/// (at least `k^c` vertices) is handled one layer deeper.
pub fn fan_from_layered_path(
    g: &Graph,
    layering: &BfsLayering,
    path: &[usize],
    i: usize,
    c: usize,
    k: usize,
) -> Result<FatMinor> {
    if i == 0 || k == 0 {
        return input("need i >= 1 and k >= 1");
    }
    if path.iter().any(|&v| v >= g.n()) || layering.layer.len() != g.n() {
        return input("path or layering does not match the graph");
    }
    let mut seen = vec![false; g.n()];
    for &v in path {
        if std::mem::replace(&mut seen[v], true) {
            return input(format!("vertex {v} repeats on the path"));
        }
    }
    if path.windows(2).any(|w| !g.has_edge(w[0], w[1])) {
        return input("consecutive path vertices are not adjacent");
    }
    if path.iter().any(|&v| layering.layer[v] < i || layering.layer[v] > i + c) {
        return input(format!("path leaves layers {i}..={}", i + c));
    }
    let need = saturating_pow(k, c + 1);
    if path.len() < need {
        return input(format!("path has {} vertices, needs {need}", path.len()));
    }
    let (mut seg, mut i, mut c) = (path.to_vec(), i, c);
    loop {
        let layer = &layering.layer;
        if let Some(f) = fan_along_path(&seg, |v| layer[v] == i, layering.prefix(i), k) {
            return f.verified(g, "layered path");
        }
        if c == 0 {
            return internal("base layer holds fewer than k path vertices");
        }
        let mut best: &[usize] = &[];
        for run in seg.split(|&v| layer[v] == i) {
            if run.len() > best.len() {
                best = run;
            }
        }
        if best.len() < saturating_pow(k, c) {
            return internal("no sufficiently long run below the current layer");
        }
        seg = best.to_vec();
        i += 1;
        c -= 1;
    }
}

/// In a 2-connected graph with at least `(k+2)k^k` vertices of degree at
/// least `d(k)`, extracts a `k`-fan, `k`-fat star or `k`-fat path model.
/// Returns `None` when there are too few high-degree vertices.
pub fn two_connected_high(g: &Graph, k: usize) -> Result<Option<FatMinor>> {
    if k == 0 {
        return input("k must be at least 1");
    }
    if g.n() < 3 || !g.is_biconnected() {
        return input("graph must be 2-connected with at least 3 vertices");
    }
    let d = high_degree_threshold_usize(k);
    let count = many_high_count(k);
    let high: Vec<usize> = (0..g.n()).filter(|&v| g.degree(v) >= d).collect();
    if high.len() < count {
        return Ok(None);
    }
    let a: Vec<usize> = high[..count].to_vec();
    let (rest, map) = g.remove_vertices(&a);
    let comps: Vec<Vec<usize>> = rest
        .connected_components()
        .into_iter()
        .map(|c| c.into_iter().map(|u| map[u]).collect())
        .collect();
    let mut comp_of = vec![usize::MAX; g.n()];
    for (j, c) in comps.iter().enumerate() {
        for &u in c {
            comp_of[u] = j;
        }
    }
    let heavy_need = saturating_pow(k, k + 1).saturating_mul(6);
    let mut heavy_by_comp: Vec<Vec<usize>> = vec![Vec::new(); comps.len()];
    let mut in_heavy = vec![false; a.len()];
    for (ai, &v) in a.iter().enumerate() {
        let mut per = HashMap::new();
        for &w in g.neighbours(v) {
            if comp_of[w] != usize::MAX {
                *per.entry(comp_of[w]).or_insert(0usize) += 1;
            }
        }
        for (j, cnt) in per {
            if cnt >= heavy_need {
                heavy_by_comp[j].push(v);
                in_heavy[ai] = true;
            }
        }
    }
    for list in &mut heavy_by_comp {
        list.sort_unstable();
    }

    if let Some(j) = (0..comps.len()).find(|&j| heavy_by_comp[j].len() >= k) {
        let vs = &heavy_by_comp[j][..k];
        let mut verts = comps[j].clone();
        verts.extend_from_slice(vs);
        let (sub, smap) = g.induced(&verts);
        let local: Vec<usize> = (comps[j].len()..verts.len()).collect();
        let f = many_high(&sub, &local, k)?.relabel(&smap);
        return f.verified(g, "many high-degree vertices").map(Some);
    }

    let l = 3 * saturating_pow(k, k);
    let mut spreads = Vec::new();
    for (j, list) in heavy_by_comp.iter().enumerate() {
        let Some(&v) = list.first() else { continue };
        let mut verts = comps[j].clone();
        verts.push(v);
        let (sub, smap) = g.induced(&verts);
        match one_high(&sub, verts.len() - 1, k, l)? {
            OneHigh::Fan(f) => return f.relabel(&smap).verified(g, "single high-degree vertex").map(Some),
            OneHigh::Spread { x, s } => {
                let x: Vec<usize> = x.into_iter().map(|u| smap[u]).collect();
                let s: Vec<usize> = s.into_iter().map(|u| smap[u]).collect();
                spreads.push((v, x, s));
            }
        }
    }

    let kk = saturating_pow(k, k);
    if spreads.len() >= kk {
        let mut tops: Vec<usize> = spreads.iter().map(|(v, _, _)| *v).collect();
        tops.sort_unstable();
        tops.dedup();
        let mut branch_sets: Vec<Vec<usize>> = tops.iter().map(|&v| vec![v]).collect();
        let mut edges = Vec::new();
        let mut by_edge = HashMap::new();
        for (v, x, s) in &spreads {
            let top = tops.binary_search(v).expect("listed");
            let idx = branch_sets.len();
            branch_sets.push(x.clone());
            edges.push((top, idx));
            by_edge.insert((top, idx), s.clone());
        }
        let pattern = Graph::new(branch_sets.len(), &edges)?;
        let witnesses = pattern.edges().iter().map(|e| by_edge[e].clone()).collect();
        let sm = StrongModel { pattern, branch_sets, witnesses };
        return disjoint_model_to_minor(g, &sm, k).map(Some).map_err(as_internal);
    }

    // Contract every component of G - A to one vertex.
    let na = a.len();
    let mut bip_edges = Vec::new();
    for (ai, &v) in a.iter().enumerate() {
        let mut touched: Vec<usize> = g.neighbours(v).iter().filter(|&&w| comp_of[w] != usize::MAX).map(|&w| comp_of[w]).collect();
        touched.sort_unstable();
        touched.dedup();
        bip_edges.extend(touched.into_iter().map(|j| (ai, na + j)));
    }
    let bip = Graph::new(na + comps.len(), &bip_edges)?;
    let free = in_heavy.iter().filter(|&&h| !h).count();
    let side: Vec<usize> = (0..na).collect();
    let sm = find_forest(&bip, &side, l, free).map_err(as_internal)?;
    let f = disjoint_model_to_minor(&bip, &sm, k).map_err(as_internal)?;
    let lifted: Vec<Vec<usize>> = f
        .model
        .branch_sets
        .iter()
        .map(|set| {
            set.iter()
                .flat_map(|&u| if u < na { vec![a[u]] } else { comps[u - na].clone() })
                .collect()
        })
        .collect();
    FatMinor { kind: f.kind, k, model: MinorModel::new(lifted) }
        .verified(g, "contracted bipartite graph")
        .map(Some)
}

fn as_internal(e: Error) -> Error {
    match e {
        Error::Input(m) => Error::Internal(m),
        other => other,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{closure_tree, weak_closure_tree};
    use crate::graph::bfs_layering;

    #[test]
    fn weak_to_closure_models_validate() {
        for (h, k) in [(2, 2), (2, 3), (3, 2), (3, 3), (4, 2), (3, 4)] {
            let m = weak_to_closure_model(h, k).unwrap();
            let host = weak_closure_tree(h, k).unwrap();
            let pat = closure_tree(h, k - 1).unwrap();
            m.check(&host, &pat).unwrap();
        }
        assert!(weak_to_closure_model(1, 3).is_err());
    }

    #[test]
    fn one_high_on_complete_bipartite() {
        let (k, l) = (2, 3);
        let g = Graph::complete_bipartite(2, 2 * l * k);
        match one_high(&g, 0, k, l).unwrap() {
            OneHigh::Spread { x, s } => {
                assert_eq!(x, vec![1]);
                assert_eq!(s.len(), l);
            }
            OneHigh::Fan(_) => panic!("K_2,n has no 2-fan through one vertex"),
        }
    }

    #[test]
    fn one_high_on_fan() {
        let (k, l) = (3, 2);
        let g = fan(2 * l * k).unwrap();
        match one_high(&g, 2 * l * k, k, l).unwrap() {
            OneHigh::Fan(f) => {
                assert_eq!(f.kind, FatKind::Fan);
                f.check(&g).unwrap();
            }
            OneHigh::Spread { .. } => panic!("expected a fan"),
        }
        assert!(one_high(&Graph::star(3), 0, 2, 2).is_err());
    }

    #[test]
    fn many_high_k1_gives_an_edge() {
        let g = fan(4).unwrap();
        let f = many_high(&g, &[4], 1).unwrap();
        assert_eq!(f.kind, FatKind::Fan);
        f.check(&g).unwrap();
        assert!(many_high(&Graph::complete_bipartite(1, 4), &[0], 1).is_err());
    }

    #[test]
    fn find_forest_pairs() {
        let k = 3;
        let g = Graph::complete_bipartite(2, k);
        let sm = find_forest(&g, &[0, 1], k, 0).unwrap();
        assert_eq!(sm.pattern, Graph::complete(2));
        assert_eq!(sm.witnesses, vec![vec![2, 3, 4]]);
        sm.check(&g, k).unwrap();
        assert!(find_forest(&Graph::complete(3), &[0], 1, 0).is_err());
    }

    #[test]
    fn layered_path_fans() {
        let g = fan(5).unwrap();
        let lay = bfs_layering(&g, 5).unwrap();
        let f = fan_from_layered_path(&g, &lay, &[0, 1, 2], 1, 0, 3).unwrap();
        f.check(&g).unwrap();
        assert!(fan_from_layered_path(&g, &lay, &[0, 1], 1, 0, 3).is_err());
    }

    #[test]
    fn two_connected_high_small_and_dense() {
        assert_eq!(two_connected_high(&Graph::cycle(7), 1).unwrap(), None);
        let g = Graph::complete_bipartite(3, 60);
        let f = two_connected_high(&g, 1).unwrap().unwrap();
        f.check(&g).unwrap();
        assert!(two_connected_high(&Graph::path(4), 1).is_err());
    }
}
