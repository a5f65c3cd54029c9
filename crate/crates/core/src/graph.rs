//! Simple undirected graphs on dense vertex ids `0..n`, the edge-list text
//! format, and generators for the standard families.

use std::collections::BTreeSet;
use std::fmt;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

/// Unordered pair, stored with `u < v`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
}

impl Edge {
    pub fn new(a: usize, b: usize) -> Self {
        assert_ne!(a, b, "loop edge");
        Edge {
            u: a.min(b),
            v: a.max(b),
        }
    }

    pub fn other(self, x: usize) -> usize {
        if x == self.u {
            self.v
        } else {
            self.u
        }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.u, self.v)
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    /// Sorted; an edge's position here is its id.
    edges: Vec<Edge>,
    adj: Vec<Vec<usize>>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, {:?})", self.n, self.edges)
    }
}

impl Graph {
    /// Builds a graph, rejecting loops, duplicates and out-of-range ends.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut set = BTreeSet::new();
        for (i, (a, b)) in edges.into_iter().enumerate() {
            let line = i + 1;
            if a == b {
                return Err(Error::Loop { line, vertex: a });
            }
            if a >= n || b >= n {
                return Err(Error::InvalidParams(format!(
                    "edge {a} {b} out of range for {n} vertices"
                )));
            }
            if !set.insert(Edge::new(a, b)) {
                return Err(Error::DuplicateEdge { line, u: a, v: b });
            }
        }
        Ok(Graph::from_edge_set(n, set))
    }

    fn from_edge_set(n: usize, set: BTreeSet<Edge>) -> Graph {
        let edges: Vec<Edge> = set.into_iter().collect();
        let mut adj = vec![Vec::new(); n];
        for e in &edges {
            adj[e.u].push(e.v);
            adj[e.v].push(e.u);
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        Graph { n, edges, adj }
    }

    /// The spanning subgraph keeping only `edges`, all of which must be
    /// edges of `self`.
    pub fn spanning_subgraph(&self, edges: impl IntoIterator<Item = Edge>) -> Graph {
        let set: BTreeSet<Edge> = edges.into_iter().collect();
        debug_assert!(set.iter().all(|e| self.edge_id(*e).is_some()));
        Graph::from_edge_set(self.n, set)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a != b && a < self.n && self.adj[a].binary_search(&b).is_ok()
    }

    pub fn edge_id(&self, e: Edge) -> Option<usize> {
        self.edges.binary_search(&e).ok()
    }

    /// Connected components as ascending vertex lists, ordered by their
    /// smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut stack = vec![s];
            while let Some(x) = stack.pop() {
                for &y in &self.adj[x] {
                    if !seen[y] {
                        seen[y] = true;
                        comp.push(y);
                        stack.push(y);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Order of the smallest component; `None` for the empty graph.
    pub fn min_component_order(&self) -> Option<usize> {
        self.components().iter().map(Vec::len).min()
    }

    /// Nonempty and free of components of order at most two.
    pub fn check_eligible(&self) -> Result<()> {
        match self.min_component_order() {
            None => Err(Error::Ineligible("graph has no vertices".into())),
            Some(o) if o <= 2 => Err(Error::Ineligible(format!("has a component of order {o}"))),
            Some(_) => Ok(()),
        }
    }
}

/// Parses the edge-list format: `#` comments, optional `n <count>` header,
/// then one `u v` pair per line.
pub fn read_graph(text: &str) -> Result<Graph> {
    let mut declared = 0usize;
    let mut seen_edge = false;
    let mut set = BTreeSet::new();
    let mut max_id: Option<usize> = None;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let toks: Vec<&str> = content.split_whitespace().collect();
        if toks[0] == "n" {
            if seen_edge || declared > 0 || toks.len() != 2 {
                return Err(Error::Parse {
                    line,
                    msg: "`n <count>` must be a single header line before any edge".into(),
                });
            }
            declared = toks[1].parse().map_err(|_| Error::Parse {
                line,
                msg: format!("bad vertex count `{}`", toks[1]),
            })?;
            continue;
        }
        if toks.len() != 2 {
            return Err(Error::Parse {
                line,
                msg: format!("expected `u v`, found `{content}`"),
            });
        }
        let parse = |t: &str| {
            t.parse::<usize>().map_err(|_| Error::Parse {
                line,
                msg: format!("bad vertex id `{t}`"),
            })
        };
        let (a, b) = (parse(toks[0])?, parse(toks[1])?);
        if a == b {
            return Err(Error::Loop { line, vertex: a });
        }
        if !set.insert(Edge::new(a, b)) {
            return Err(Error::DuplicateEdge { line, u: a, v: b });
        }
        seen_edge = true;
        max_id = Some(max_id.map_or(a.max(b), |m| m.max(a).max(b)));
    }
    let n = declared.max(max_id.map_or(0, |m| m + 1));
    Ok(Graph::from_edge_set(n, set))
}

pub fn write_graph(g: &Graph) -> String {
    let mut s = format!("n {}\n", g.n);
    for e in &g.edges {
        s.push_str(&format!("{e}\n"));
    }
    s
}

/// Attempts per call of the random generator before giving up.
pub const RANDOM_RETRIES: usize = 1000;

#[derive(Clone, Debug, PartialEq)]
pub enum GraphKind {
    Path(usize),
    Cycle(usize),
    /// `K_{1,n-1}`: vertex 0 joined to all others.
    Star(usize),
    Complete(usize),
    /// `Q_d`, vertices are the `d`-bit words.
    Hypercube(u32),
    /// Heap-indexed binary tree on `n` vertices; `2^h - 1` gives the perfect one.
    CompleteBinaryTree(usize),
    /// `G(n, p)` resampled until no component has order at most two.
    Random {
        n: usize,
        p: f64,
        seed: u64,
    },
    /// Disjoint 1-stars of random shapes on exactly `n >= 3` vertices with
    /// shuffled ids.
    OneStarForest {
        n: usize,
        seed: u64,
    },
}

pub fn generate(kind: &GraphKind) -> Result<Graph> {
    let bad = |msg: &str| Err(Error::InvalidParams(msg.into()));
    match *kind {
        GraphKind::Path(n) => {
            if n == 0 {
                return bad("path needs at least one vertex");
            }
            Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
        }
        GraphKind::Cycle(n) => {
            if n < 3 {
                return bad("cycle length must be at least 3");
            }
            Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
        }
        GraphKind::Star(n) => {
            if n == 0 {
                return bad("star needs at least one vertex");
            }
            Graph::from_edges(n, (1..n).map(|i| (0, i)))
        }
        GraphKind::Complete(n) => {
            if n == 0 {
                return bad("complete graph needs at least one vertex");
            }
            Graph::from_edges(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))))
        }
        GraphKind::Hypercube(d) => {
            if d > 20 {
                return bad("hypercube dimension above 20");
            }
            let n = 1usize << d;
            Graph::from_edges(
                n,
                (0..n).flat_map(|x| {
                    (0..d)
                        .map(move |b| (x, x ^ (1 << b)))
                        .filter(|&(x, y)| x < y)
                }),
            )
        }
        GraphKind::CompleteBinaryTree(n) => {
            if n == 0 {
                return bad("binary tree needs at least one vertex");
            }
            Graph::from_edges(n, (1..n).map(|i| ((i - 1) / 2, i)))
        }
        GraphKind::Random { n, p, seed } => random_eligible(n, p, seed),
        GraphKind::OneStarForest { n, seed } => random_onestar_forest(n, seed),
    }
}

fn random_eligible(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParams("random graph needs n >= 3".into()));
    }
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidParams(format!(
            "edge probability {p} not in [0, 1]"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..RANDOM_RETRIES {
        let mut set = BTreeSet::new();
        for i in 0..n {
            for j in i + 1..n {
                if rng.gen_bool(p) {
                    set.insert(Edge::new(i, j));
                }
            }
        }
        let g = Graph::from_edge_set(n, set);
        if g.check_eligible().is_ok() {
            return Ok(g);
        }
    }
    Err(Error::RetryExhausted(RANDOM_RETRIES))
}

const MAX_RANDOM_STAR_ORDER: usize = 40;

fn random_onestar_forest(n: usize, seed: u64) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParams("a 1-star forest needs n >= 3".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut ids: Vec<usize> = (0..n).collect();
    ids.shuffle(&mut rng);
    let mut next = ids.into_iter();
    let mut edges = Vec::with_capacity(n);
    let mut remaining = n;
    while remaining > 0 {
        let mut m = rng.gen_range(3..=remaining.min(MAX_RANDOM_STAR_ORDER));
        if remaining - m < 3 {
            m = remaining;
        }
        remaining -= m;
        // legs + leaves >= 2 keeps the underlying star on >= 3 vertices
        let legs = rng.gen_range(0..=(m - 1) / 2).min(m - 3);
        let leaves = m - 1 - 2 * legs;
        let center = next.next().unwrap();
        for _ in 0..legs {
            let (u, v) = (next.next().unwrap(), next.next().unwrap());
            edges.push((center, u));
            edges.push((u, v));
        }
        for _ in 0..leaves {
            edges.push((center, next.next().unwrap()));
        }
    }
    Graph::from_edges(n, edges)
}
