//! Vertex colourings, their verifiers, and the layered colouring algorithms.

mod layered;
mod oracle;
mod two;

pub use layered::{erdos_posa_hitting_set, heart_colouring, weak_closure_colouring, WeakClosureOutcome};
pub use oracle::{defect_oracle, for_each_clustered_colouring, optimal_cluster_colouring, OracleOutcome};
pub use two::{two_colour, two_colour_2connected, TwoColourOutcome};

use serde::{Deserialize, Serialize};

use crate::error::{input, Error, Result};
use crate::graph::{bfs_layering, Graph};

/// A total map from vertices to colours `0, 1, ...`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Colouring {
    colour: Vec<usize>,
}

impl Colouring {
    pub fn new(colour: Vec<usize>) -> Self {
        Self { colour }
    }

    pub fn len(&self) -> usize {
        self.colour.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colour.is_empty()
    }

    pub fn colour(&self, v: usize) -> usize {
        self.colour[v]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.colour
    }

    /// Number of distinct colours used.
    pub fn num_colours(&self) -> usize {
        let mut c = self.colour.clone();
        c.sort_unstable();
        c.dedup();
        c.len()
    }

    /// Relabels colours `0, 1, ...` in order of first appearance.
    pub fn normalized(&self) -> Self {
        let mut map = std::collections::HashMap::new();
        let colour = self
            .colour
            .iter()
            .map(|&c| {
                let next = map.len();
                *map.entry(c).or_insert(next)
            })
            .collect();
        Self { colour }
    }

    /// Whitespace-separated colours, one per vertex.
    pub fn parse(text: &str) -> Result<Self> {
        let colour = text
            .split_ascii_whitespace()
            .enumerate()
            .map(|(i, t)| {
                t.parse().map_err(|_| Error::Parse { line: 1, message: format!("entry {i}: bad colour {t:?}") })
            })
            .collect::<Result<Vec<usize>>>()?;
        Ok(Self { colour })
    }

    pub fn to_text(&self) -> String {
        let words: Vec<String> = self.colour.iter().map(usize::to_string).collect();
        words.join(" ") + "\n"
    }
}

/// Monochromatic structure of a colouring.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClusterReport {
    pub num_colours: usize,
    /// Largest monochromatic component (the clustering).
    pub max_component: usize,
    /// Most same-coloured neighbours of any vertex.
    pub defect: usize,
    /// `(colour, vertices)` per monochromatic component, by least vertex.
    pub components: Vec<(usize, Vec<usize>)>,
}

/// Monochromatic components, computed by DFS and by union-find and
/// cross-checked.
pub fn verify_clustering(g: &Graph, col: &Colouring) -> Result<ClusterReport> {
    if col.len() != g.n() {
        return input(format!("colouring has {} entries for {} vertices", col.len(), g.n()));
    }
    let n = g.n();
    let mut seen = vec![false; n];
    let mut components = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let c = col.colour(s);
        let mut comp = vec![s];
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            for &w in g.neighbours(u) {
                if !seen[w] && col.colour(w) == c {
                    seen[w] = true;
                    comp.push(w);
                    stack.push(w);
                }
            }
        }
        comp.sort_unstable();
        components.push((c, comp));
    }
    let dfs_max = components.iter().map(|(_, c)| c.len()).max().unwrap_or(0);

    let mut uf: Vec<usize> = (0..n).collect();
    fn find(uf: &mut [usize], mut x: usize) -> usize {
        while uf[x] != x {
            uf[x] = uf[uf[x]];
            x = uf[x];
        }
        x
    }
    for (u, v) in g.edges() {
        if col.colour(u) == col.colour(v) {
            let (a, b) = (find(&mut uf, u), find(&mut uf, v));
            if a != b {
                uf[a] = b;
            }
        }
    }
    let mut size = vec![0usize; n];
    for v in 0..n {
        let r = find(&mut uf, v);
        size[r] += 1;
    }
    let uf_max = size.iter().copied().max().unwrap_or(0);
    let uf_count = size.iter().filter(|&&s| s > 0).count();
    if uf_max != dfs_max || uf_count != components.len() {
        return Err(Error::Internal(format!(
            "component engines disagree: dfs ({dfs_max}, {}) vs union-find ({uf_max}, {uf_count})",
            components.len()
        )));
    }
    let defect = (0..n)
        .map(|v| g.neighbours(v).iter().filter(|&&w| col.colour(w) == col.colour(v)).count())
        .max()
        .unwrap_or(0);
    if dfs_max > 0 && defect + 1 > dfs_max {
        return Err(Error::Internal("defect exceeds clustering minus one".into()));
    }
    Ok(ClusterReport { num_colours: col.num_colours(), max_component: dfs_max, defect, components })
}

/// Whether every vertex has at most `d` neighbours of its own colour.
pub fn verify_defect(g: &Graph, col: &Colouring, d: usize) -> bool {
    col.len() == g.n()
        && (0..g.n()).all(|v| g.neighbours(v).iter().filter(|&&w| col.colour(w) == col.colour(v)).count() <= d)
}

/// Colours each vertex by the parity of its distance from `r`.
pub fn parity_colouring(g: &Graph, r: usize) -> Result<Colouring> {
    let lay = bfs_layering(g, r)?;
    Ok(Colouring::new(lay.layer.iter().map(|d| d % 2).collect()))
}

/// Colour sets of induced subgraphs are written back through `map`.
pub(crate) fn write_back(target: &mut [usize], map: &[usize], local: &[usize], offset: usize) {
    for (i, &c) in local.iter().enumerate() {
        target[map[i]] = c + offset;
    }
}
