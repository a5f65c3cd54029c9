//! 1-stars (stars on at least three vertices with every edge subdivided at
//! most once) and spanning forests made of them.

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};

/// A 1-star laid out around its center: `legs` are the subdivided edges as
/// `(middle, end)` pairs, `leaves` the unsubdivided neighbors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OneStarAnatomy {
    pub center: usize,
    pub legs: Vec<(usize, usize)>,
    pub leaves: Vec<usize>,
}

impl OneStarAnatomy {
    /// Number of vertices, `2 * legs + leaves + 1`.
    pub fn order(&self) -> usize {
        2 * self.legs.len() + self.leaves.len() + 1
    }

    /// Vertices in the order `v, u1, v1, ..., ul, vl, leaves...`.
    pub fn vertex_order(&self) -> Vec<usize> {
        let mut out = vec![self.center];
        for &(u, v) in &self.legs {
            out.push(u);
            out.push(v);
        }
        out.extend(&self.leaves);
        out
    }

    /// Edges in the order `v-u1, u1-v1, ..., v-ul, ul-vl, v-leaf...`, so that
    /// edge `j` ends at vertex `j + 1` of [`Self::vertex_order`].
    pub fn edge_order(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.order() - 1);
        for &(u, v) in &self.legs {
            out.push(Edge::new(self.center, u));
            out.push(Edge::new(u, v));
        }
        out.extend(self.leaves.iter().map(|&x| Edge::new(self.center, x)));
        out
    }
}

/// Degrees inside the subgraph induced by `vertices`, after checking it is
/// a tree.
struct InducedTree<'a> {
    g: &'a Graph,
    member: Vec<bool>,
}

impl<'a> InducedTree<'a> {
    fn new(g: &'a Graph, vertices: &[usize]) -> Result<Self> {
        if vertices.is_empty() || vertices.iter().any(|&v| v >= g.n()) {
            return Err(Error::NotATree);
        }
        let mut member = vec![false; g.n()];
        for &v in vertices {
            if member[v] {
                return Err(Error::NotATree);
            }
            member[v] = true;
        }
        let t = InducedTree { g, member };
        let edge_ends: usize = vertices.iter().map(|&v| t.degree(v)).sum();
        if edge_ends / 2 + 1 != vertices.len() {
            return Err(Error::NotATree);
        }
        let mut seen = vec![false; g.n()];
        let mut stack = vec![vertices[0]];
        seen[vertices[0]] = true;
        let mut reached = 1;
        while let Some(x) = stack.pop() {
            for y in t.neighbors(x) {
                if !seen[y] {
                    seen[y] = true;
                    reached += 1;
                    stack.push(y);
                }
            }
        }
        if reached != vertices.len() {
            return Err(Error::NotATree);
        }
        Ok(t)
    }

    fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&y| self.member[y])
    }

    fn degree(&self, v: usize) -> usize {
        self.neighbors(v).count()
    }

    fn anatomy_at(&self, c: usize) -> Option<OneStarAnatomy> {
        if self.degree(c) < 2 {
            return None;
        }
        let mut legs = Vec::new();
        let mut leaves = Vec::new();
        for u in self.neighbors(c) {
            match self.degree(u) {
                1 => leaves.push(u),
                2 => {
                    let w = self.neighbors(u).find(|&w| w != c)?;
                    if self.degree(w) != 1 {
                        return None;
                    }
                    legs.push((u, w));
                }
                _ => return None,
            }
        }
        Some(OneStarAnatomy {
            center: c,
            legs,
            leaves,
        })
    }
}

/// Whether the tree induced by `vertices` is a 1-star.
pub fn is_onestar(g: &Graph, vertices: &[usize]) -> Result<bool> {
    let t = InducedTree::new(g, vertices)?;
    Ok(vertices.iter().any(|&c| t.anatomy_at(c).is_some()))
}

/// Lays out the 1-star induced by `vertices`, centering it at the smallest
/// valid vertex. Legs and leaves come out sorted by id since adjacency lists
/// are sorted.
pub fn analyze_onestar(g: &Graph, vertices: &[usize]) -> Result<OneStarAnatomy> {
    let t = InducedTree::new(g, vertices)?;
    let mut sorted = vertices.to_vec();
    sorted.sort_unstable();
    sorted
        .into_iter()
        .find_map(|c| t.anatomy_at(c))
        .ok_or(Error::NotOneStar)
}

/// One tree of a spanning forest.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ForestTree {
    /// Ascending.
    pub vertices: Vec<usize>,
    /// Ascending.
    pub edges: Vec<Edge>,
}

/// Rooted view of a forest, kept to answer "what splits off if this edge
/// goes" in constant time.
struct SubtreeSizes {
    parent: Vec<usize>,
    size: Vec<usize>,
    tree_size: Vec<usize>,
}

impl SubtreeSizes {
    fn new(f: &Graph) -> Self {
        let n = f.n();
        let mut parent = vec![usize::MAX; n];
        let mut size = vec![1; n];
        let mut tree_size = vec![0; n];
        let mut seen = vec![false; n];
        for comp in f.components() {
            let root = comp[0];
            seen[root] = true;
            let mut order = vec![root];
            let mut i = 0;
            while i < order.len() {
                let x = order[i];
                i += 1;
                for &y in f.neighbors(x) {
                    if !seen[y] {
                        seen[y] = true;
                        parent[y] = x;
                        order.push(y);
                    }
                }
            }
            for &x in order.iter().rev() {
                if parent[x] != usize::MAX {
                    size[parent[x]] += size[x];
                }
            }
            for &x in &comp {
                tree_size[x] = comp.len();
            }
        }
        SubtreeSizes {
            parent,
            size,
            tree_size,
        }
    }

    /// Orders of the two trees left after deleting `e`.
    fn split(&self, e: Edge) -> (usize, usize) {
        let child = if self.parent[e.v] == e.u { e.v } else { e.u };
        (self.size[child], self.tree_size[child] - self.size[child])
    }
}

/// Initial spanning forest: depth-first, each component entered at its
/// smallest vertex, neighbors tried in ascending order.
fn dfs_forest(g: &Graph) -> Vec<Edge> {
    let mut seen = vec![false; g.n()];
    let mut edges = Vec::new();
    for s in 0..g.n() {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut stack = vec![(s, 0usize)];
        while let Some(top) = stack.last_mut() {
            let (x, i) = *top;
            match g.neighbors(x).get(i) {
                Some(&y) => {
                    top.1 += 1;
                    if !seen[y] {
                        seen[y] = true;
                        edges.push(Edge::new(x, y));
                        stack.push((y, 0));
                    }
                }
                None => {
                    stack.pop();
                }
            }
        }
    }
    edges
}

/// Spanning forest of `g` whose trees are all 1-stars.
///
/// Starts from a depth-first spanning forest and deletes, one at a time,
/// the lowest edge whose removal leaves two trees of order at least 3,
/// until no such edge remains. A forest with no deletable edge consists of
/// 1-stars; this is re-checked and reported as [`Error::Invariant`] if not.
pub fn spanning_onestar_forest(g: &Graph) -> Result<Vec<ForestTree>> {
    g.check_eligible()?;
    let mut kept = dfs_forest(g);
    kept.sort_unstable();
    loop {
        let f = g.spanning_subgraph(kept.iter().copied());
        let sizes = SubtreeSizes::new(&f);
        let deletable = kept.iter().position(|&e| {
            let (a, b) = sizes.split(e);
            a >= 3 && b >= 3
        });
        match deletable {
            Some(i) => {
                kept.remove(i);
            }
            None => break,
        }
    }
    let f = g.spanning_subgraph(kept.iter().copied());
    let mut trees = Vec::new();
    for vertices in f.components() {
        if vertices.len() < 3 || !is_onestar(&f, &vertices)? {
            return Err(Error::Invariant(format!(
                "minimal forest has a tree on {vertices:?} that is not a 1-star"
            )));
        }
        let edges = vertices
            .iter()
            .flat_map(|&x| {
                f.neighbors(x)
                    .iter()
                    .filter(move |&&y| x < y)
                    .map(move |&y| Edge::new(x, y))
            })
            .collect::<std::collections::BTreeSet<_>>()
            .into_iter()
            .collect();
        trees.push(ForestTree { vertices, edges });
    }
    Ok(trees)
}

/// The forest as a spanning subgraph of `g`.
pub fn forest_graph(g: &Graph, trees: &[ForestTree]) -> Graph {
    g.spanning_subgraph(trees.iter().flat_map(|t| t.edges.iter().copied()))
}
