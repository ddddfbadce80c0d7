//! Minor and subgraph containment, strong models, and the constructive
//! procedures that turn dense structure into explicit fat-minor models.

mod extract;
mod search;
mod split;
mod subgraph;

pub use extract::{
    disjoint_model_to_minor, fan_from_layered_path, fat_minor_from_strong_model, find_forest,
    make_connected_model, many_high, one_high, two_connected_high, weak_to_closure_model,
    FatKind, FatMinor, OneHigh,
};
pub use search::{find_strong_model, has_minor};
pub use split::{split_weak_model, WeakSplit};
pub use subgraph::{has_subgraph, isomorphic};

use serde::Serialize;

use crate::colouring::Colouring;
use crate::graph::Graph;

/// Outcome of a bounded exhaustive search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Search<T> {
    Found(T),
    /// The search space was exhausted without a hit.
    Absent,
    /// The node or time budget ran out first.
    Indeterminate,
}

impl<T> Search<T> {
    pub fn found(&self) -> Option<&T> {
        match self {
            Search::Found(t) => Some(t),
            _ => None,
        }
    }

    pub fn into_found(self) -> Option<T> {
        match self {
            Search::Found(t) => Some(t),
            _ => None,
        }
    }

    pub fn is_found(&self) -> bool {
        matches!(self, Search::Found(_))
    }

    pub fn is_absent(&self) -> bool {
        matches!(self, Search::Absent)
    }

    pub fn is_indeterminate(&self) -> bool {
        matches!(self, Search::Indeterminate)
    }

    pub fn map<U>(self, f: impl FnOnce(T) -> U) -> Search<U> {
        match self {
            Search::Found(t) => Search::Found(f(t)),
            Search::Absent => Search::Absent,
            Search::Indeterminate => Search::Indeterminate,
        }
    }

    /// `"yes"`, `"no"` or `"indeterminate"`.
    pub fn label(&self) -> &'static str {
        match self {
            Search::Found(_) => "yes",
            Search::Absent => "no",
            Search::Indeterminate => "indeterminate",
        }
    }
}

/// Branch sets of a minor model, indexed by pattern vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MinorModel {
    pub branch_sets: Vec<Vec<usize>>,
}

impl MinorModel {
    /// Sorts and deduplicates every branch set.
    pub fn new(mut branch_sets: Vec<Vec<usize>>) -> Self {
        for s in &mut branch_sets {
            s.sort_unstable();
            s.dedup();
        }
        Self { branch_sets }
    }

    /// Checks disjointness, connectivity and that every pattern edge is
    /// realised by a host edge.
    pub fn check(&self, host: &Graph, pattern: &Graph) -> std::result::Result<(), String> {
        if self.branch_sets.len() != pattern.n() {
            return Err(format!(
                "{} branch sets for a {}-vertex pattern",
                self.branch_sets.len(),
                pattern.n()
            ));
        }
        let owner = owners(host, &self.branch_sets)?;
        for (x, set) in self.branch_sets.iter().enumerate() {
            if !host.is_connected_set(set) {
                return Err(format!("branch set {x} is empty or disconnected"));
            }
        }
        for (x, y) in pattern.edges() {
            let touches = self.branch_sets[x]
                .iter()
                .any(|&u| host.neighbours(u).iter().any(|&w| owner[w] == Some(y)));
            if !touches {
                return Err(format!("pattern edge {x}-{y} is not realised"));
            }
        }
        Ok(())
    }

    pub fn is_valid(&self, host: &Graph, pattern: &Graph) -> bool {
        self.check(host, pattern).is_ok()
    }

    /// Union of all branch sets, sorted.
    pub fn vertices(&self) -> Vec<usize> {
        let mut all: Vec<usize> = self.branch_sets.concat();
        all.sort_unstable();
        all
    }

    /// Maps every host vertex through `map` (local index to outer index).
    pub fn relabel(&self, map: &[usize]) -> Self {
        Self::new(
            self.branch_sets
                .iter()
                .map(|s| s.iter().map(|&v| map[v]).collect())
                .collect(),
        )
    }
}

fn owners(host: &Graph, sets: &[Vec<usize>]) -> std::result::Result<Vec<Option<usize>>, String> {
    let mut owner = vec![None; host.n()];
    for (x, set) in sets.iter().enumerate() {
        for &v in set {
            if v >= host.n() {
                return Err(format!("branch set {x} names vertex {v} outside the host"));
            }
            if let Some(y) = owner[v] {
                return Err(format!("vertex {v} lies in branch sets {y} and {x}"));
            }
            owner[v] = Some(x);
        }
    }
    Ok(owner)
}

/// A model whose pattern edges each carry a set of outside common
/// neighbours. Branch sets need not be adjacent to each other.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrongModel {
    pub pattern: Graph,
    pub branch_sets: Vec<Vec<usize>>,
    /// One witness set per edge of `pattern`, aligned with `pattern.edges()`.
    pub witnesses: Vec<Vec<usize>>,
}

impl StrongModel {
    /// Smallest witness set size (`usize::MAX` for an edgeless pattern).
    pub fn min_witnesses(&self) -> usize {
        self.witnesses.iter().map(Vec::len).min().unwrap_or(usize::MAX)
    }

    /// Checks the model against `host` with at least `k` witnesses per edge.
    pub fn check(&self, host: &Graph, k: usize) -> std::result::Result<(), String> {
        if self.branch_sets.len() != self.pattern.n() {
            return Err("branch set count differs from pattern order".into());
        }
        let edges = self.pattern.edges();
        if self.witnesses.len() != edges.len() {
            return Err("witness list count differs from pattern size".into());
        }
        let owner = owners(host, &self.branch_sets)?;
        for (x, set) in self.branch_sets.iter().enumerate() {
            if !host.is_connected_set(set) {
                return Err(format!("branch set {x} is empty or disconnected"));
            }
        }
        for (e, &(x, y)) in edges.iter().enumerate() {
            let w = &self.witnesses[e];
            if w.len() < k {
                return Err(format!("edge {x}-{y} has {} witnesses, needs {k}", w.len()));
            }
            let mut sorted = w.clone();
            sorted.sort_unstable();
            sorted.dedup();
            if sorted.len() != w.len() {
                return Err(format!("edge {x}-{y} repeats a witness"));
            }
            for &v in w {
                if v >= host.n() || owner[v].is_some() {
                    return Err(format!("witness {v} of edge {x}-{y} is inside a branch set"));
                }
                let nb = host.neighbours(v);
                if !nb.iter().any(|&u| owner[u] == Some(x)) || !nb.iter().any(|&u| owner[u] == Some(y)) {
                    return Err(format!("witness {v} of edge {x}-{y} misses an end"));
                }
            }
        }
        Ok(())
    }

    pub fn relabel(&self, map: &[usize]) -> Self {
        let f = |s: &Vec<usize>| {
            let mut t: Vec<usize> = s.iter().map(|&v| map[v]).collect();
            t.sort_unstable();
            t
        };
        Self {
            pattern: self.pattern.clone(),
            branch_sets: self.branch_sets.iter().map(f).collect(),
            witnesses: self.witnesses.iter().map(f).collect(),
        }
    }
}

/// A clique of `size` vertices with pairwise distinct colours, the
/// lexicographically least one if any exists.
pub fn rainbow_clique(g: &Graph, col: &Colouring, size: usize) -> Option<Vec<usize>> {
    if col.len() != g.n() {
        return None;
    }
    if size == 0 {
        return Some(Vec::new());
    }
    let mut clique = Vec::with_capacity(size);
    let cand: Vec<usize> = (0..g.n()).collect();
    rainbow_extend(g, col, size, &cand, &mut clique).then_some(clique)
}

fn rainbow_extend(g: &Graph, col: &Colouring, size: usize, cand: &[usize], clique: &mut Vec<usize>) -> bool {
    if clique.len() == size {
        return true;
    }
    for (i, &v) in cand.iter().enumerate() {
        if cand.len() - i < size - clique.len() {
            break;
        }
        if clique.iter().any(|&u| col.colour(u) == col.colour(v)) {
            continue;
        }
        let next: Vec<usize> = cand[i + 1..].iter().copied().filter(|&w| g.has_edge(v, w)).collect();
        clique.push(v);
        if rainbow_extend(g, col, size, &next, clique) {
            return true;
        }
        clique.pop();
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn model_checker_rejects_overlap_and_gaps() {
        let host = Graph::path(4);
        let k2 = Graph::complete(2);
        assert!(MinorModel::new(vec![vec![0, 1], vec![2, 3]]).is_valid(&host, &k2));
        assert!(!MinorModel::new(vec![vec![0, 1], vec![1, 2]]).is_valid(&host, &k2));
        assert!(!MinorModel::new(vec![vec![0], vec![2, 3]]).is_valid(&host, &k2));
        assert!(!MinorModel::new(vec![vec![0, 2], vec![3]]).is_valid(&host, &k2));
        assert!(!MinorModel::new(vec![vec![0]]).is_valid(&host, &k2));
    }

    #[test]
    fn strong_model_checker() {
        let host = Graph::complete_bipartite(2, 3);
        let sm = StrongModel {
            pattern: Graph::complete(2),
            branch_sets: vec![vec![0], vec![1]],
            witnesses: vec![vec![2, 3, 4]],
        };
        assert!(sm.check(&host, 3).is_ok());
        assert!(sm.check(&host, 4).is_err());
        let bad = StrongModel { witnesses: vec![vec![0, 2, 3]], ..sm };
        assert!(bad.check(&host, 1).is_err());
    }

    #[test]
    fn rainbow_triangles() {
        let k3 = Graph::complete(3);
        assert_eq!(rainbow_clique(&k3, &Colouring::new(vec![0, 1, 2]), 3), Some(vec![0, 1, 2]));
        assert_eq!(rainbow_clique(&k3, &Colouring::new(vec![0, 0, 1]), 3), None);
        assert_eq!(rainbow_clique(&k3, &Colouring::new(vec![0, 0, 1]), 2), Some(vec![0, 2]));
    }
}
