use crate::error::{input, Result};

/// A rooted tree stored as a parent array; the root is its own parent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootedTree {
    parent: Vec<usize>,
    root: usize,
    children: Vec<Vec<usize>>,
    depth: Vec<usize>,
}

impl RootedTree {
    pub fn new(parent: Vec<usize>, root: usize) -> Result<Self> {
        let n = parent.len();
        if root >= n {
            return input(format!("root {root} out of range for {n} nodes"));
        }
        if parent[root] != root {
            return input("root must be its own parent");
        }
        let mut children = vec![Vec::new(); n];
        for (v, &p) in parent.iter().enumerate() {
            if p >= n {
                return input(format!("node {v} has parent {p} out of range"));
            }
            if v != root {
                if p == v {
                    return input(format!("node {v} is a second root"));
                }
                children[p].push(v);
            }
        }
        // Depth by walking down from the root also proves every node reaches it.
        let mut depth = vec![0usize; n];
        depth[root] = 1;
        let mut stack = vec![root];
        let mut reached = 1;
        while let Some(u) = stack.pop() {
            for &c in &children[u] {
                depth[c] = depth[u] + 1;
                reached += 1;
                stack.push(c);
            }
        }
        if reached != n {
            return input("parent pointers contain a cycle");
        }
        Ok(Self { parent, root, children, depth })
    }

    pub fn n(&self) -> usize {
        self.parent.len()
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn parent(&self, v: usize) -> Option<usize> {
        (v != self.root).then_some(self.parent[v])
    }

    pub fn children(&self, v: usize) -> &[usize] {
        &self.children[v]
    }

    pub fn is_leaf(&self, v: usize) -> bool {
        self.children[v].is_empty()
    }

    /// Number of vertices on the path from the root to `v`.
    pub fn depth_of(&self, v: usize) -> usize {
        self.depth[v]
    }

    /// Maximum number of vertices on a root-to-leaf path.
    pub fn depth(&self) -> usize {
        self.depth.iter().copied().max().unwrap_or(0)
    }

    /// Strict ancestors of `v`, nearest first.
    pub fn ancestors(&self, v: usize) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.depth[v].saturating_sub(1));
        let mut x = v;
        while x != self.root {
            x = self.parent[x];
            out.push(x);
        }
        out
    }

    pub fn leaves(&self) -> Vec<usize> {
        (0..self.n()).filter(|&v| self.is_leaf(v)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_cycles_and_second_roots() {
        assert!(RootedTree::new(vec![0, 2, 1], 0).is_err());
        assert!(RootedTree::new(vec![0, 1], 0).is_err());
        assert!(RootedTree::new(vec![0, 0], 5).is_err());
    }

    #[test]
    fn depth_and_ancestors() {
        let t = RootedTree::new(vec![0, 0, 1, 1], 0).unwrap();
        assert_eq!(t.depth(), 3);
        assert_eq!(t.ancestors(3), vec![1, 0]);
        assert_eq!(t.leaves(), vec![2, 3]);
        assert_eq!(t.parent(0), None);
    }
}
