//! Branch-and-bound search for minor models and strong models.
//!
//! Pattern vertices are placed one at a time. Each receives a connected
//! branch set grown from an anchor vertex by an include/exclude walk over the
//! frontier, so every connected set containing the anchor is visited exactly
//! once. Hosts are limited to 64 vertices (bitmask representation).

use super::{MinorModel, Search, StrongModel};
use crate::graph::Graph;
use crate::limits::{Limits, Meter};

#[inline]
fn bits(mut m: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(v)
        }
    })
}

#[inline]
fn lowest(m: u64) -> u64 {
    m & m.wrapping_neg()
}

fn closed_nbr(gm: &[u64], set: u64) -> u64 {
    bits(set).fold(0, |acc, v| acc | gm[v])
}

fn open_nbr(gm: &[u64], set: u64) -> u64 {
    closed_nbr(gm, set) & !set
}

/// Vertices reachable from `seed` inside `within` (which should contain it).
fn flood(gm: &[u64], seed: u64, within: u64) -> u64 {
    let mut reach = seed;
    loop {
        let grown = (closed_nbr(gm, reach) & within) | reach;
        if grown == reach {
            return reach;
        }
        reach = grown;
    }
}

fn components(gm: &[u64], mut set: u64) -> Vec<u64> {
    let mut out = Vec::new();
    while set != 0 {
        let c = flood(gm, lowest(set), set);
        out.push(c);
        set &= !c;
    }
    out
}

fn to_sets(sets: &[u64]) -> Vec<Vec<usize>> {
    sets.iter().map(|&m| bits(m).collect()).collect()
}

/// Placement order: start from a maximum-degree vertex, then prefer the
/// vertex with most placed neighbours (ties: higher degree, lower index).
/// Isolated vertices go last.
fn pattern_order(h: &Graph) -> Vec<usize> {
    let n = h.n();
    let mut placed = vec![false; n];
    let mut weight = vec![0usize; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let best = (0..n)
            .filter(|&v| !placed[v])
            .max_by(|&a, &b| {
                let ka = (h.degree(a) > 0, weight[a], h.degree(a), std::cmp::Reverse(a));
                let kb = (h.degree(b) > 0, weight[b], h.degree(b), std::cmp::Reverse(b));
                ka.cmp(&kb)
            })
            .expect("an unplaced vertex remains");
        placed[best] = true;
        order.push(best);
        for &w in h.neighbours(best) {
            weight[w] += 1;
        }
    }
    order
}

/// Searches for a model of `h` in `g`.
///
/// Returns `Absent` only when the search space is exhausted, and
/// `Indeterminate` when the node budget runs out or the host has more than
/// 64 vertices.
pub fn has_minor(g: &Graph, h: &Graph, limits: &Limits) -> Search<MinorModel> {
    if h.n() == 0 {
        return Search::Found(MinorModel::new(Vec::new()));
    }
    if h.n() > g.n() || h.edge_count() > g.edge_count() {
        return Search::Absent;
    }
    let largest = |x: &Graph| x.connected_components().iter().map(Vec::len).max().unwrap_or(0);
    if largest(h) > largest(g) {
        return Search::Absent;
    }
    let Some(gm) = g.masks() else {
        return Search::Indeterminate;
    };
    let order = pattern_order(h);
    let mut pos = vec![0; h.n()];
    for (i, &x) in order.iter().enumerate() {
        pos[x] = i;
    }
    let full = if g.n() == 64 { u64::MAX } else { (1u64 << g.n()) - 1 };
    let mut s = MinorSearch {
        gm: &gm,
        h,
        order,
        pos,
        sets: vec![0; h.n()],
        free: full,
        meter: limits.search_meter(),
    };
    if s.place(0) {
        let model = MinorModel::new(to_sets(&s.sets));
        debug_assert!(model.is_valid(g, h));
        Search::Found(model)
    } else if s.meter.exhausted() {
        Search::Indeterminate
    } else {
        Search::Absent
    }
}

struct MinorSearch<'a> {
    gm: &'a [u64],
    h: &'a Graph,
    order: Vec<usize>,
    pos: Vec<usize>,
    sets: Vec<u64>,
    free: u64,
    meter: Meter,
}

struct Slot {
    idx: usize,
    x: usize,
    allowed: u64,
    cap: u32,
    required: Vec<u64>,
    /// All pattern neighbours already placed: stop growing once satisfied.
    closed: bool,
}

impl MinorSearch<'_> {
    fn place(&mut self, idx: usize) -> bool {
        if !self.meter.tick() {
            return false;
        }
        let hn = self.h.n();
        if idx == hn {
            return true;
        }
        let x = self.order[idx];
        if self.h.degree(x) == 0 {
            // Everything from here on is isolated; any free vertices do.
            if (self.free.count_ones() as usize) < hn - idx {
                return false;
            }
            for &y in &self.order[idx..] {
                let b = lowest(self.free);
                self.sets[y] = b;
                self.free &= !b;
            }
            return true;
        }
        let rem = (hn - idx - 1) as u32;
        let free_count = self.free.count_ones();
        if free_count < rem + 1 {
            return false;
        }
        let placed: Vec<usize> =
            self.h.neighbours(x).iter().copied().filter(|&y| self.pos[y] < idx).collect();
        let required: Vec<u64> =
            placed.iter().map(|&y| open_nbr(self.gm, self.sets[y]) & self.free).collect();
        if required.iter().any(|&r| r == 0) {
            return false;
        }
        let anchors = required
            .iter()
            .copied()
            .min_by_key(|r| r.count_ones())
            .unwrap_or(self.free);
        let closed = placed.len() == self.h.degree(x);
        let mut tried = 0u64;
        for a in bits(anchors) {
            let bit = 1u64 << a;
            let slot = Slot {
                idx,
                x,
                allowed: self.free & !tried,
                cap: free_count - rem,
                required: required.clone(),
                closed,
            };
            if self.grow(&slot, bit, 0) {
                return true;
            }
            if self.meter.exhausted() {
                return false;
            }
            tried |= bit;
        }
        false
    }

    fn grow(&mut self, slot: &Slot, set: u64, excluded: u64) -> bool {
        if !self.meter.tick() {
            return false;
        }
        let satisfied = slot.required.iter().all(|&r| r & set != 0);
        if satisfied && slot.closed {
            return self.commit(slot, set);
        }
        let frontier = open_nbr(self.gm, set) & slot.allowed & !excluded;
        if frontier == 0 || set.count_ones() >= slot.cap {
            return satisfied && self.commit(slot, set);
        }
        if !satisfied {
            let reach = flood(self.gm, set, (slot.allowed & !excluded) | set);
            if slot.required.iter().any(|&r| r & reach == 0) {
                return false;
            }
        }
        let u = lowest(frontier);
        self.grow(slot, set, excluded | u) || self.grow(slot, set | u, excluded)
    }

    fn commit(&mut self, slot: &Slot, set: u64) -> bool {
        self.sets[slot.x] = set;
        self.free &= !set;
        if self.feasible(slot.idx) && self.place(slot.idx + 1) {
            return true;
        }
        self.free |= set;
        self.sets[slot.x] = 0;
        false
    }

    /// Necessary conditions after placing `order[..=idx]`.
    fn feasible(&self, idx: usize) -> bool {
        let hn = self.h.n();
        if (self.free.count_ones() as usize) < hn - idx - 1 {
            return false;
        }
        for &z in &self.order[..=idx] {
            let open = self.h.neighbours(z).iter().filter(|&&w| self.pos[w] > idx).count();
            if open > 0 && ((open_nbr(self.gm, self.sets[z]) & self.free).count_ones() as usize) < open {
                return false;
            }
        }
        let comps = components(self.gm, self.free);
        for &w in &self.order[idx + 1..] {
            let needs: Vec<u64> = self
                .h
                .neighbours(w)
                .iter()
                .filter(|&&p| self.pos[p] <= idx)
                .map(|&p| open_nbr(self.gm, self.sets[p]))
                .collect();
            if needs.is_empty() {
                continue;
            }
            if !comps.iter().any(|&c| needs.iter().all(|&r| r & c != 0)) {
                return false;
            }
        }
        true
    }
}

/// Searches for a strong model of `h` in `g` with at least `k` witnesses
/// per pattern edge. Witnesses may be shared between edges and branch sets
/// need not be adjacent.
pub fn find_strong_model(g: &Graph, h: &Graph, k: usize, limits: &Limits) -> Search<StrongModel> {
    if h.n() == 0 || h.n() > g.n() {
        return if h.n() == 0 {
            Search::Found(StrongModel { pattern: h.clone(), branch_sets: Vec::new(), witnesses: Vec::new() })
        } else {
            Search::Absent
        };
    }
    if h.edge_count() > 0 && h.n() + k > g.n() {
        return Search::Absent;
    }
    let Some(gm) = g.masks() else {
        return Search::Indeterminate;
    };
    let order = pattern_order(h);
    let mut pos = vec![0; h.n()];
    for (i, &x) in order.iter().enumerate() {
        pos[x] = i;
    }
    let full = if g.n() == 64 { u64::MAX } else { (1u64 << g.n()) - 1 };
    let mut s = StrongSearch {
        gm: &gm,
        h,
        k: k as u32,
        order,
        pos,
        sets: vec![0; h.n()],
        free: full,
        meter: limits.search_meter(),
    };
    if s.place(0) {
        let witnesses = h
            .edges()
            .iter()
            .map(|&(x, y)| bits(s.common(x, y)).collect())
            .collect();
        let sm = StrongModel { pattern: h.clone(), branch_sets: to_sets(&s.sets), witnesses };
        debug_assert!(sm.check(g, k).is_ok());
        Search::Found(sm)
    } else if s.meter.exhausted() {
        Search::Indeterminate
    } else {
        Search::Absent
    }
}

struct StrongSearch<'a> {
    gm: &'a [u64],
    h: &'a Graph,
    k: u32,
    order: Vec<usize>,
    pos: Vec<usize>,
    sets: Vec<u64>,
    free: u64,
    meter: Meter,
}

impl StrongSearch<'_> {
    fn common(&self, x: usize, y: usize) -> u64 {
        open_nbr(self.gm, self.sets[x]) & open_nbr(self.gm, self.sets[y]) & self.free
    }

    fn place(&mut self, idx: usize) -> bool {
        if !self.meter.tick() {
            return false;
        }
        let hn = self.h.n();
        if idx == hn {
            return true;
        }
        let rem = (hn - idx - 1) as u32;
        let free_count = self.free.count_ones();
        if free_count < rem + 1 {
            return false;
        }
        let x = self.order[idx];
        let isolated = self.h.degree(x) == 0;
        let mut tried = 0u64;
        for a in bits(self.free) {
            let bit = 1u64 << a;
            let found = if isolated {
                self.commit(idx, x, bit)
            } else {
                self.grow(idx, x, bit, 0, self.free & !tried, free_count - rem)
            };
            if found {
                return true;
            }
            if self.meter.exhausted() {
                return false;
            }
            tried |= bit;
        }
        false
    }

    fn grow(&mut self, idx: usize, x: usize, set: u64, excluded: u64, allowed: u64, cap: u32) -> bool {
        if !self.meter.tick() {
            return false;
        }
        let frontier = open_nbr(self.gm, set) & allowed & !excluded;
        if frontier == 0 || set.count_ones() >= cap {
            return self.commit(idx, x, set);
        }
        let u = lowest(frontier);
        self.grow(idx, x, set, excluded | u, allowed, cap) || self.grow(idx, x, set | u, excluded, allowed, cap)
    }

    fn commit(&mut self, idx: usize, x: usize, set: u64) -> bool {
        self.sets[x] = set;
        self.free &= !set;
        if self.feasible(idx) && self.place(idx + 1) {
            return true;
        }
        self.free |= set;
        self.sets[x] = 0;
        false
    }

    fn feasible(&self, idx: usize) -> bool {
        for &z in &self.order[..=idx] {
            let reach = open_nbr(self.gm, self.sets[z]) & self.free;
            for &w in self.h.neighbours(z) {
                let have = if self.pos[w] <= idx { self.common(z, w) } else { reach };
                if have.count_ones() < self.k {
                    return false;
                }
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{closure_tree, fat_path, weak_closure_tree};

    fn lim() -> Limits {
        Limits::default()
    }

    fn found(g: &Graph, h: &Graph) -> bool {
        match has_minor(g, h, &lim()) {
            Search::Found(m) => {
                m.check(g, h).unwrap();
                true
            }
            Search::Absent => false,
            Search::Indeterminate => panic!("budget"),
        }
    }

    #[test]
    fn small_cases() {
        assert!(found(&Graph::cycle(5), &Graph::complete(3)));
        assert!(!found(&Graph::path(4), &Graph::star(3)));
        assert!(!found(&Graph::cycle(6), &Graph::complete(4)));
        assert!(found(&Graph::complete(5), &Graph::complete(4)));
        assert!(found(&Graph::complete_bipartite(3, 3), &Graph::complete(4)));
        assert!(!found(&Graph::complete_bipartite(2, 5), &Graph::complete(4)));
        assert!(found(&Graph::path(5), &Graph::edgeless(3)));
        assert!(found(&Graph::complete(3).copies(2), &Graph::complete(3).copies(2)));
        assert!(!found(&Graph::cycle(6), &Graph::complete(3).copies(2)));
    }

    #[test]
    fn petersen_has_k5_minor() {
        let g = Graph::new(
            10,
            &[
                (0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
                (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
                (5, 7), (7, 9), (9, 6), (6, 8), (8, 5),
            ],
        )
        .unwrap();
        assert!(found(&g, &Graph::complete(5)));
    }

    #[test]
    fn weak_closure_contains_smaller_closure() {
        let g = weak_closure_tree(3, 3).unwrap();
        let h = closure_tree(3, 2).unwrap();
        assert!(found(&g, &h));
    }

    #[test]
    fn budget_gives_indeterminate() {
        let tiny = Limits { search_nodes: 3, ..Limits::default() };
        let r = has_minor(&Graph::cycle(12), &Graph::complete(4), &tiny);
        assert!(r.is_indeterminate());
    }

    #[test]
    fn strong_models() {
        let sm = find_strong_model(&Graph::complete_bipartite(2, 5), &Graph::complete(2), 5, &lim())
            .into_found()
            .unwrap();
        assert_eq!(sm.branch_sets, vec![vec![0], vec![1]]);
        assert_eq!(sm.witnesses, vec![vec![2, 3, 4, 5, 6]]);

        let fp = fat_path(3).unwrap();
        let sm = find_strong_model(&fp, &Graph::path(3), 3, &lim()).into_found().unwrap();
        sm.check(&fp, 3).unwrap();

        // Branch sets need not touch: {0} and {2} share the witness 1.
        let sm = find_strong_model(&Graph::path(4), &Graph::complete(2), 1, &lim()).into_found().unwrap();
        assert_eq!(sm.branch_sets, vec![vec![0], vec![2]]);
        assert_eq!(sm.witnesses, vec![vec![1]]);
        assert!(find_strong_model(&Graph::path(4), &Graph::complete(2), 2, &lim()).is_absent());
    }
}
