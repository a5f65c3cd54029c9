//! Exact union vertex-distinguishing chromatic index by exhaustive search.
//!
//! Edges are labelled in ascending id order, each trying the nonempty
//! subsets of `[k]` in ascending bit order. A vertex is finished once its
//! highest-id edge is labelled; a branch dies as soon as two finished
//! vertices have the same union. Both orders are fixed, so the first
//! coloring found (the witness) is deterministic.

use std::time::{Duration, Instant};

use crate::coloring::{lower_bound, EdgeColoring, LabelMode};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::label::Label;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchBudget {
    /// Largest number of colors [`exact_index`] will try.
    pub max_k: u32,
    /// Labels tried, summed over the whole search.
    pub node_limit: u64,
    pub time_limit: Duration,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            max_k: 6,
            node_limit: 200_000_000,
            time_limit: Duration::from_secs(120),
        }
    }
}

impl SearchBudget {
    pub fn validate(&self) -> Result<()> {
        if self.max_k == 0 || self.node_limit == 0 || self.time_limit.is_zero() {
            return Err(Error::InvalidParams(
                "search budget values must be positive".into(),
            ));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchOutcome {
    Found(EdgeColoring),
    /// The whole space was explored without success.
    Refuted,
    /// The budget ran out first.
    Unknown,
}

enum Flow {
    Found,
    Exhausted,
    Abort,
}

struct Search<'a> {
    g: &'a Graph,
    values: u64,
    /// Highest incident edge id per vertex.
    last_edge: Vec<usize>,
    labels: Vec<u64>,
    unions: Vec<u64>,
    /// Finished vertices per union value.
    taken: Vec<bool>,
    nodes: u64,
    node_limit: u64,
    deadline: Instant,
}

impl Search<'_> {
    fn finish(&mut self, x: usize) -> bool {
        let slot = &mut self.taken[self.unions[x] as usize];
        if *slot {
            false
        } else {
            *slot = true;
            true
        }
    }

    fn run(&mut self, id: usize) -> Flow {
        let edges = self.g.edges();
        if id == edges.len() {
            return Flow::Found;
        }
        let e = edges[id];
        let (su, sv) = (self.unions[e.u], self.unions[e.v]);
        let done_u = self.last_edge[e.u] == id;
        let done_v = self.last_edge[e.v] == id;
        for val in 1..=self.values {
            self.nodes += 1;
            if self.nodes > self.node_limit
                || (self.nodes.is_multiple_of(4096) && Instant::now() >= self.deadline)
            {
                return Flow::Abort;
            }
            self.labels[id] = val;
            self.unions[e.u] = su | val;
            self.unions[e.v] = sv | val;
            let ok_u = !done_u || self.finish(e.u);
            let ok_v = ok_u && (!done_v || self.finish(e.v));
            if ok_v {
                match self.run(id + 1) {
                    Flow::Exhausted => {}
                    other => return other,
                }
            }
            if done_v && ok_v {
                self.taken[self.unions[e.v] as usize] = false;
            }
            if done_u && ok_u {
                self.taken[self.unions[e.u] as usize] = false;
            }
        }
        self.unions[e.u] = su;
        self.unions[e.v] = sv;
        Flow::Exhausted
    }
}

/// Searches for a union vertex-distinguishing coloring over `[k]`.
pub fn search(g: &Graph, k: u32, budget: &SearchBudget) -> Result<SearchOutcome> {
    budget.validate()?;
    g.check_eligible()?;
    if k == 0 || k > 24 {
        return Err(Error::InvalidParams(format!("search over k = {k} colors")));
    }
    let mut last_edge = vec![0; g.n()];
    for (id, e) in g.edges().iter().enumerate() {
        last_edge[e.u] = id;
        last_edge[e.v] = id;
    }
    let mut s = Search {
        g,
        values: (1u64 << k) - 1,
        last_edge,
        labels: vec![0; g.edge_count()],
        unions: vec![0; g.n()],
        taken: vec![false; 1 << k],
        nodes: 0,
        node_limit: budget.node_limit,
        deadline: Instant::now() + budget.time_limit,
    };
    Ok(match s.run(0) {
        Flow::Found => {
            let mut c = EdgeColoring::new(k, LabelMode::Standard);
            for (e, &bits) in g.edges().iter().zip(&s.labels) {
                c.assignment.insert(*e, Label::from_bits(k, bits)?);
            }
            SearchOutcome::Found(c)
        }
        Flow::Exhausted => SearchOutcome::Refuted,
        Flow::Abort => SearchOutcome::Unknown,
    })
}

/// A coloring over `[k]` if one exists, `None` if none does, and
/// [`Error::BudgetExceeded`] if the search could not decide.
pub fn exists_coloring(g: &Graph, k: u32, budget: &SearchBudget) -> Result<Option<EdgeColoring>> {
    match search(g, k, budget)? {
        SearchOutcome::Found(c) => Ok(Some(c)),
        SearchOutcome::Refuted => Ok(None),
        SearchOutcome::Unknown => Err(Error::BudgetExceeded),
    }
}

/// The exact index together with the first coloring found at that size.
///
/// Only `lower_bound(n)` and `lower_bound(n) + 1` are tried; refuting both
/// is reported as [`Error::BoundViolated`].
pub fn solve_exact(g: &Graph, budget: &SearchBudget) -> Result<(u32, EdgeColoring)> {
    g.check_eligible()?;
    let lb = lower_bound(g.n());
    for k in [lb, lb + 1] {
        if k > budget.max_k {
            return Err(Error::BudgetExceeded);
        }
        if let Some(c) = exists_coloring(g, k, budget)? {
            return Ok((k, c));
        }
    }
    Err(Error::BoundViolated(lb + 1))
}

pub fn exact_index(g: &Graph, budget: &SearchBudget) -> Result<u32> {
    solve_exact(g, budget).map(|(k, _)| k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::verify;
    use crate::graph::{generate, GraphKind};

    fn gen(kind: GraphKind) -> Graph {
        generate(&kind).unwrap()
    }

    /// Plain enumeration of every labelling, no pruning.
    fn brute_force_exists(g: &Graph, k: u32) -> bool {
        let vals = (1u64 << k) - 1;
        let m = g.edge_count();
        let total = vals.pow(m as u32);
        (0..total).any(|mut code| {
            let mut unions = vec![0u64; g.n()];
            for e in g.edges() {
                let l = code % vals + 1;
                code /= vals;
                unions[e.u] |= l;
                unions[e.v] |= l;
            }
            let mut sorted = unions.clone();
            sorted.sort_unstable();
            sorted.windows(2).all(|w| w[0] != w[1])
        })
    }

    #[test]
    fn decision_examples() {
        let b = SearchBudget::default();
        let c3 = gen(GraphKind::Cycle(3));
        assert!(!brute_force_exists(&c3, 2));
        assert_eq!(exists_coloring(&c3, 2, &b).unwrap(), None);

        let p3 = gen(GraphKind::Path(3));
        assert!(brute_force_exists(&p3, 2));
        let c = exists_coloring(&p3, 2, &b).unwrap().unwrap();
        assert!(verify(&p3, &c, false).is_valid());

        let c7 = gen(GraphKind::Cycle(7));
        assert_eq!(exists_coloring(&c7, 3, &b).unwrap(), None);
    }

    #[test]
    fn agrees_with_brute_force() {
        let b = SearchBudget::default();
        let graphs = [
            gen(GraphKind::Path(4)),
            gen(GraphKind::Path(5)),
            gen(GraphKind::Cycle(4)),
            gen(GraphKind::Cycle(5)),
            gen(GraphKind::Star(4)),
            gen(GraphKind::Complete(4)),
            Graph::from_edges(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4)]).unwrap(),
        ];
        for g in &graphs {
            for k in 2..=3 {
                let fast = exists_coloring(g, k, &b).unwrap().is_some();
                assert_eq!(fast, brute_force_exists(g, k), "{g:?} k={k}");
            }
        }
    }

    #[test]
    fn index_examples() {
        let b = SearchBudget::default();
        assert_eq!(exact_index(&gen(GraphKind::Path(4)), &b).unwrap(), 3);
        assert_eq!(exact_index(&gen(GraphKind::Cycle(3)), &b).unwrap(), 3);
        assert_eq!(exact_index(&gen(GraphKind::Cycle(7)), &b).unwrap(), 4);
    }

    #[test]
    fn budget_exhaustion_is_distinct() {
        let tiny = SearchBudget {
            node_limit: 10,
            ..SearchBudget::default()
        };
        let c7 = gen(GraphKind::Cycle(7));
        assert!(matches!(
            exists_coloring(&c7, 3, &tiny),
            Err(Error::BudgetExceeded)
        ));
        assert!(matches!(
            search(&c7, 3, &tiny).unwrap(),
            SearchOutcome::Unknown
        ));
        let capped = SearchBudget {
            max_k: 2,
            ..SearchBudget::default()
        };
        assert!(matches!(
            exact_index(&c7, &capped),
            Err(Error::BudgetExceeded)
        ));
        let zero = SearchBudget {
            node_limit: 0,
            ..SearchBudget::default()
        };
        assert!(matches!(
            search(&c7, 3, &zero),
            Err(Error::InvalidParams(_))
        ));
    }

    #[test]
    fn witness_is_deterministic() {
        let b = SearchBudget::default();
        let g = gen(GraphKind::Cycle(6));
        assert_eq!(solve_exact(&g, &b).unwrap(), solve_exact(&g, &b).unwrap());
    }
}
