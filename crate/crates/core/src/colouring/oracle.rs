//! Exact minimum colour counts under clustering or defect constraints.
//!
//! Vertices are coloured in BFS order. A new colour may only be one more
//! than the largest colour used so far, so every partition into colour
//! classes is visited once.

use serde::Serialize;

use super::Colouring;
use crate::error::{input, Error, Result};
use crate::graph::Graph;
use crate::limits::{Limits, Meter};

/// Proven bounds on the minimum number of colours, with a colouring that
/// attains `upper`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OracleOutcome {
    pub lower: usize,
    pub upper: usize,
    pub witness: Colouring,
}

impl OracleOutcome {
    /// The optimum, when the search finished.
    pub fn exact(&self) -> Option<usize> {
        (self.lower == self.upper).then_some(self.upper)
    }
}

#[derive(Clone, Copy)]
enum Rule {
    Cluster(usize),
    Defect(usize),
}

struct Engine<'a> {
    g: &'a Graph,
    rule: Rule,
    order: Vec<usize>,
    colour: Vec<usize>,
    same: Vec<usize>,
    meter: Meter,
}

const NONE: usize = usize::MAX;

impl<'a> Engine<'a> {
    fn new(g: &'a Graph, rule: Rule, meter: Meter) -> Self {
        let mut order = Vec::with_capacity(g.n());
        let mut seen = vec![false; g.n()];
        for s in 0..g.n() {
            if !seen[s] {
                for v in g.bfs_order(s) {
                    seen[v] = true;
                    order.push(v);
                }
            }
        }
        Self { g, rule, order, colour: vec![NONE; g.n()], same: vec![0; g.n()], meter }
    }

    /// Whether `v` may take colour `c` given the coloured vertices.
    fn allowed(&self, v: usize, c: usize) -> bool {
        match self.rule {
            Rule::Defect(d) => {
                let mut own = 0;
                for &w in self.g.neighbours(v) {
                    if self.colour[w] == c {
                        own += 1;
                        if own > d || self.same[w] + 1 > d {
                            return false;
                        }
                    }
                }
                true
            }
            Rule::Cluster(limit) => {
                let mut size = 1;
                let mut stack = vec![v];
                let mut seen = vec![v];
                while let Some(u) = stack.pop() {
                    for &w in self.g.neighbours(u) {
                        if self.colour[w] == c && !seen.contains(&w) {
                            size += 1;
                            if size > limit {
                                return false;
                            }
                            seen.push(w);
                            stack.push(w);
                        }
                    }
                }
                true
            }
        }
    }

    fn set(&mut self, v: usize, c: usize) {
        self.colour[v] = c;
        if let Rule::Defect(_) = self.rule {
            for &w in self.g.neighbours(v) {
                if self.colour[w] == c {
                    self.same[w] += 1;
                    self.same[v] += 1;
                }
            }
        }
    }

    fn unset(&mut self, v: usize) {
        let c = self.colour[v];
        if let Rule::Defect(_) = self.rule {
            for &w in self.g.neighbours(v) {
                if self.colour[w] == c && w != v {
                    self.same[w] -= 1;
                }
            }
            self.same[v] = 0;
        }
        self.colour[v] = NONE;
    }

    /// Depth-first over canonical colourings with at most `cap` colours.
    /// `visit` returns `false` to stop. Returns `false` if stopped by
    /// `visit` or by the budget.
    fn walk(&mut self, idx: usize, used: usize, cap: usize, visit: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        if !self.meter.tick() {
            return false;
        }
        if idx == self.order.len() {
            return visit(&self.colour);
        }
        let v = self.order[idx];
        for c in 0..(used + 1).min(cap) {
            if !self.allowed(v, c) {
                continue;
            }
            self.set(v, c);
            let go = self.walk(idx + 1, used.max(c + 1), cap, visit);
            self.unset(v);
            if !go {
                return false;
            }
        }
        true
    }

    fn greedy(&mut self) -> Vec<usize> {
        for i in 0..self.order.len() {
            let v = self.order[i];
            let c = (0..).find(|&c| self.allowed(v, c)).expect("a fresh colour is always allowed");
            self.set(v, c);
        }
        let out = self.colour.clone();
        for i in 0..self.order.len() {
            self.unset(self.order[i]);
        }
        out
    }
}

fn solve(g: &Graph, rule: Rule, limits: &Limits) -> Result<OracleOutcome> {
    if g.n() > limits.oracle_vertices {
        return Err(Error::Budget(format!(
            "{} vertices exceed the oracle limit {}",
            g.n(),
            limits.oracle_vertices
        )));
    }
    if g.n() == 0 {
        return Ok(OracleOutcome { lower: 0, upper: 0, witness: Colouring::new(Vec::new()) });
    }
    let mut engine = Engine::new(g, rule, limits.oracle_meter());
    let greedy = Colouring::new(engine.greedy()).normalized();
    let mut best = OracleOutcome { lower: 1, upper: greedy.num_colours(), witness: greedy };
    while best.lower < best.upper {
        let cap = best.lower;
        let mut hit = None;
        let finished = engine.walk(0, 0, cap, &mut |c| {
            hit = Some(c.to_vec());
            false
        });
        match hit {
            Some(c) => {
                let c = Colouring::new(c);
                best.upper = c.num_colours();
                best.witness = c;
            }
            None if finished => best.lower += 1,
            None => break,
        }
    }
    Ok(best)
}

/// Fewest colours admitting a colouring with every monochromatic component
/// of at most `c` vertices.
pub fn optimal_cluster_colouring(g: &Graph, c: usize, limits: &Limits) -> Result<OracleOutcome> {
    if c == 0 && g.n() > 0 {
        return input("clustering 0 admits only the empty graph");
    }
    solve(g, Rule::Cluster(c), limits)
}

/// Fewest colours admitting a colouring in which every vertex has at most
/// `d` neighbours of its own colour.
pub fn defect_oracle(g: &Graph, d: usize, limits: &Limits) -> Result<OracleOutcome> {
    solve(g, Rule::Defect(d), limits)
}

/// Visits every colouring with clustering at most `c`, once per partition
/// into colour classes. `visit` returns `false` to stop early. Returns the
/// number of colourings visited, or a budget error.
pub fn for_each_clustered_colouring(
    g: &Graph,
    c: usize,
    limits: &Limits,
    mut visit: impl FnMut(&Colouring) -> bool,
) -> Result<usize> {
    if c == 0 && g.n() > 0 {
        return input("clustering 0 admits only the empty graph");
    }
    let mut engine = Engine::new(g, Rule::Cluster(c), limits.oracle_meter());
    let mut count = 0;
    let mut stopped = false;
    let finished = engine.walk(0, 0, g.n().max(1), &mut |col| {
        count += 1;
        if visit(&Colouring::new(col.to_vec())) {
            true
        } else {
            stopped = true;
            false
        }
    });
    if !finished && !stopped {
        return Err(Error::Budget(format!("enumeration stopped after {count} colourings")));
    }
    Ok(count)
}
