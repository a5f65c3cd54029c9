//! Corpora and checks shared by the integration suites.
#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use union_coloring::onestar::ForestTree;
use union_coloring::{generate, is_onestar, Edge, Error, Graph, GraphKind};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A random composition of `total`, mixing in explicit zeros and ones.
pub fn random_composition(total: usize, rng: &mut ChaCha8Rng) -> Vec<usize> {
    let mut parts = Vec::new();
    let mut remaining = total;
    let spread = rng.gen_range(1..=total.clamp(1, 12));
    while remaining > 0 {
        let roll: f64 = rng.gen();
        if roll < 0.1 {
            parts.push(0);
        } else if roll < 0.3 {
            parts.push(1);
            remaining -= 1;
        } else {
            let hi = (total / spread).clamp(1, remaining);
            let x = rng.gen_range(1..=hi);
            parts.push(x);
            remaining -= x;
        }
    }
    if rng.gen_bool(0.5) {
        parts.push(0);
    }
    parts.shuffle(rng);
    parts
}

/// The `index`-th member of the seeded corpus of eligible random graphs
/// on 3 to `max_n` vertices.
pub fn random_eligible(index: u64, max_n: usize) -> Graph {
    let mut r = rng(0x5eed_0000 + index);
    let n = r.gen_range(3..=max_n);
    let ln = (n as f64).ln().max(1.0);
    let mut p = if r.gen_bool(0.1) {
        r.gen_range(0.15..0.6)
    } else {
        (r.gen_range(1.0..3.0) * ln / n as f64).min(1.0)
    };
    if n <= 8 {
        p = p.max(0.5);
    }
    let seed = r.gen();
    loop {
        match generate(&GraphKind::Random { n, p, seed }) {
            Ok(g) => return g,
            Err(Error::RetryExhausted(_)) => p = (p * 1.5).min(1.0),
            Err(e) => panic!("generator failed: {e}"),
        }
    }
}

pub fn eligible_corpus(count: u64, max_n: usize) -> Vec<Graph> {
    (0..count).map(|i| random_eligible(i, max_n)).collect()
}

/// Every 1-star shape `(legs, leaves)` with at most `max_edges` edges.
pub fn onestar_shapes(max_edges: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for legs in 0..=max_edges / 2 {
        for leaves in 0..=max_edges - 2 * legs {
            if legs + leaves >= 2 {
                out.push((legs, leaves));
            }
        }
    }
    out
}

/// All forests of 1-stars with at most `max_edges` edges, one per multiset
/// of shapes, laid out on consecutive vertex ids.
pub fn all_onestar_forests(max_edges: usize) -> Vec<Graph> {
    fn rec(
        shapes: &[(usize, usize)],
        start: usize,
        budget: usize,
        chosen: &mut Vec<(usize, usize)>,
        out: &mut Vec<Graph>,
    ) {
        if !chosen.is_empty() {
            out.push(forest_of(chosen));
        }
        for (i, &(l, f)) in shapes.iter().enumerate().skip(start) {
            let e = 2 * l + f;
            if e <= budget {
                chosen.push((l, f));
                rec(shapes, i, budget - e, chosen, out);
                chosen.pop();
            }
        }
    }
    let shapes = onestar_shapes(max_edges);
    let mut out = Vec::new();
    rec(&shapes, 0, max_edges, &mut Vec::new(), &mut out);
    out
}

pub fn forest_of(shapes: &[(usize, usize)]) -> Graph {
    let mut edges = Vec::new();
    let mut next = 0;
    for &(legs, leaves) in shapes {
        let c = next;
        next += 1;
        for _ in 0..legs {
            edges.push((c, next));
            edges.push((next, next + 1));
            next += 2;
        }
        for _ in 0..leaves {
            edges.push((c, next));
            next += 1;
        }
    }
    Graph::from_edges(next, edges).unwrap()
}

/// Everything a spanning forest of 1-stars must satisfy, as a list of
/// violations.
pub fn forest_violations(g: &Graph, trees: &[ForestTree]) -> Vec<String> {
    let mut bad = Vec::new();
    let mut covered = vec![0usize; g.n()];
    let mut forest_edges = Vec::new();
    for t in trees {
        for &v in &t.vertices {
            covered[v] += 1;
        }
        for &e in &t.edges {
            if !g.has_edge(e.u, e.v) {
                bad.push(format!("{e} is not an edge of G"));
            }
            if t.vertices.binary_search(&e.u).is_err() || t.vertices.binary_search(&e.v).is_err() {
                bad.push(format!("{e} leaves its tree"));
            }
            forest_edges.push(e);
        }
        if t.edges.len() + 1 != t.vertices.len() {
            bad.push(format!("tree {:?} has {} edges", t.vertices, t.edges.len()));
        }
        if t.vertices.len() <= 2 {
            bad.push(format!("tree {:?} has order <= 2", t.vertices));
        }
    }
    if covered.iter().any(|&c| c != 1) {
        bad.push("trees do not partition V(G)".into());
    }
    let f = g.spanning_subgraph(forest_edges.iter().copied());
    for t in trees {
        // connected + right edge count => tree
        match is_onestar(&f, &t.vertices) {
            Ok(true) => {}
            Ok(false) => bad.push(format!("tree {:?} is not a 1-star", t.vertices)),
            Err(e) => bad.push(format!("tree {:?}: {e}", t.vertices)),
        }
        let is_path = t.vertices.iter().all(|&v| f.degree(v) <= 2);
        if is_path && t.vertices.len() > 5 {
            bad.push(format!("path tree of order {}", t.vertices.len()));
        }
    }
    for &e in &forest_edges {
        let rest: Vec<Edge> = forest_edges.iter().copied().filter(|&x| x != e).collect();
        let h = g.spanning_subgraph(rest);
        let small = h
            .components()
            .iter()
            .filter(|c| c.contains(&e.u) || c.contains(&e.v))
            .any(|c| c.len() <= 2);
        if !small {
            bad.push(format!("forest edge {e} is deletable"));
        }
    }
    bad
}
