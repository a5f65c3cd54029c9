//! Union vertex-distinguishing edge colorings: construction through star
//! partitions, the induced vertex unions, verification, and the coloring
//! file format.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};
use crate::label::{Label, MAX_GROUND};
use crate::onestar::{analyze_onestar, forest_graph, spanning_onestar_forest, OneStarAnatomy};
use crate::partition::{partition, partition_with_empty, SizeComposition};
use crate::star::{is_m_star, StarSequence};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LabelMode {
    /// Edge labels are nonempty subsets of `[k]`.
    Standard,
    /// The empty set is allowed as an edge label.
    Empty,
}

impl LabelMode {
    pub fn allows_empty(self) -> bool {
        self == LabelMode::Empty
    }

    fn name(self) -> &'static str {
        match self {
            LabelMode::Standard => "standard",
            LabelMode::Empty => "empty",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeColoring {
    /// Size of the ground set the labels are drawn from.
    pub k: u32,
    pub mode: LabelMode,
    pub assignment: BTreeMap<Edge, Label>,
}

impl EdgeColoring {
    pub fn new(k: u32, mode: LabelMode) -> Self {
        EdgeColoring {
            k,
            mode,
            assignment: BTreeMap::new(),
        }
    }

    pub fn get(&self, e: Edge) -> Option<Label> {
        self.assignment.get(&e).copied()
    }

    /// Number of distinct colors appearing on any edge.
    pub fn colors_used(&self) -> u32 {
        self.assignment
            .values()
            .fold(0u64, |acc, l| acc | l.bits())
            .count_ones()
    }
}

/// `c∪`, indexed by vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnionColoring(pub Vec<Label>);

impl UnionColoring {
    pub fn at(&self, v: usize) -> Label {
        self.0[v]
    }
}

/// `⌈log2(n + 1)⌉`: fewest colors whose nonempty subsets number at least `n`.
pub fn lower_bound(n: usize) -> u32 {
    usize::BITS - n.leading_zeros()
}

/// `⌈log2 n⌉`, the analogue when the empty set is also available.
pub fn lower_bound_with_empty(n: usize) -> u32 {
    if n <= 1 {
        0
    } else {
        usize::BITS - (n - 1).leading_zeros()
    }
}

/// Labels the edges of a 1-star so that its vertices, taken in
/// [`OneStarAnatomy::vertex_order`], receive the unions `A1, ..., Am`.
///
/// Edge `j` of [`OneStarAnatomy::edge_order`] gets `A(j+2)`. The center then
/// collects `A1` and every other vertex its own set.
pub fn color_onestar(anatomy: &OneStarAnatomy, star: &StarSequence) -> Result<Vec<(Edge, Label)>> {
    let m = anatomy.order();
    if star.len() != m {
        return Err(Error::LengthMismatch {
            star: star.len(),
            order: m,
        });
    }
    if m < 3 || anatomy.legs.len() + anatomy.leaves.len() < 2 {
        return Err(Error::NotOneStar);
    }
    if !is_m_star(star)? {
        return Err(Error::NotAStar);
    }
    let labels: Vec<(Edge, Label)> = anatomy
        .edge_order()
        .into_iter()
        .zip(star.iter().skip(1).copied())
        .collect();

    let k = star[0].ground();
    let mut unions: HashMap<usize, Label> = HashMap::new();
    for &(e, l) in &labels {
        for x in [e.u, e.v] {
            let cur = unions.entry(x).or_insert(Label::empty(k));
            *cur = cur.union(l);
        }
    }
    for (v, want) in anatomy.vertex_order().into_iter().zip(star.iter()) {
        if unions.get(&v) != Some(want) {
            return Err(Error::Invariant(format!(
                "vertex {v} collects {:?}, expected {want:?}",
                unions.get(&v)
            )));
        }
    }
    Ok(labels)
}

/// Colors a forest of 1-stars over `[k]` with `k` minimal for `mode`.
///
/// Trees are matched to star blocks in order of (order, smallest vertex);
/// one extra block absorbs the unused subsets.
fn color_onestar_forest(f: &Graph, mode: LabelMode) -> Result<EdgeColoring> {
    let n = f.n();
    if n == 0 {
        return Err(Error::Ineligible("graph has no vertices".into()));
    }
    let mut anatomies = Vec::new();
    for comp in f.components() {
        if comp.len() < 3 {
            return Err(Error::NotOneStar);
        }
        anatomies.push((comp.len(), comp[0], analyze_onestar(f, &comp)?));
    }
    anatomies.sort_by_key(|&(order, first, _)| (order, first));

    let (k, total) = match mode {
        LabelMode::Standard => {
            let k = lower_bound(n);
            (k, (1usize << k) - 1)
        }
        LabelMode::Empty => {
            let k = lower_bound_with_empty(n);
            (k, 1usize << k)
        }
    };
    if k > MAX_GROUND {
        return Err(Error::InvalidParams(format!(
            "{n} vertices need too many colors"
        )));
    }
    let mut sizes: Vec<usize> = anatomies.iter().map(|a| a.0).collect();
    sizes.push(total - n);
    let comp = SizeComposition::new(sizes, k);
    let blocks = match mode {
        LabelMode::Standard => partition(&comp)?,
        LabelMode::Empty => partition_with_empty(&comp)?,
    };

    let mut coloring = EdgeColoring::new(k, mode);
    for ((_, _, anatomy), block) in anatomies.iter().zip(&blocks) {
        coloring.assignment.extend(color_onestar(anatomy, block)?);
    }
    Ok(coloring)
}

fn ensure_valid(g: &Graph, c: &EdgeColoring) -> Result<()> {
    let report = verify(g, c, c.mode.allows_empty());
    if report.is_valid() {
        Ok(())
    } else {
        Err(Error::Invariant(format!(
            "constructed coloring fails verification:\n{report}"
        )))
    }
}

/// Optimal coloring of a forest of 1-stars with `⌈log2(n + 1)⌉` colors.
pub fn color_forest(f: &Graph) -> Result<EdgeColoring> {
    let c = color_onestar_forest(f, LabelMode::Standard)?;
    ensure_valid(f, &c)?;
    Ok(c)
}

/// Colors any graph without components of order at most two.
///
/// A spanning forest of 1-stars is colored optimally and every remaining
/// edge gets the fresh singleton `{k + 1}`, or `∅` when `allow_empty` is
/// set (in which case the forest is colored over `[⌈log2 n⌉]` using the
/// empty set as one of the vertex unions).
pub fn color_graph(g: &Graph, allow_empty: bool) -> Result<EdgeColoring> {
    g.check_eligible()?;
    let trees = spanning_onestar_forest(g)?;
    let f = forest_graph(g, &trees);
    let mode = if allow_empty {
        LabelMode::Empty
    } else {
        LabelMode::Standard
    };
    let mut c = color_onestar_forest(&f, mode)?;
    let extra: Vec<Edge> = g
        .edges()
        .iter()
        .copied()
        .filter(|&e| f.edge_id(e).is_none())
        .collect();
    if !extra.is_empty() {
        let fill = match mode {
            LabelMode::Standard => {
                let k = c.k + 1;
                if k > MAX_GROUND {
                    return Err(Error::InvalidParams("graph needs too many colors".into()));
                }
                for l in c.assignment.values_mut() {
                    *l = l.lift(k);
                }
                c.k = k;
                Label::singleton(k, k)
            }
            LabelMode::Empty => Label::empty(c.k),
        };
        c.assignment.extend(extra.into_iter().map(|e| (e, fill)));
    }
    ensure_valid(g, &c)?;
    Ok(c)
}

/// `c∪(v)`, the union of the labels on edges at `v`. Isolated vertices get
/// the empty set.
pub fn union_vertex_coloring(g: &Graph, c: &EdgeColoring) -> Result<UnionColoring> {
    let mut unions = vec![Label::empty(c.k); g.n()];
    for &e in g.edges() {
        let l = c.get(e).ok_or(Error::MissingEdge(e.u, e.v))?;
        unions[e.u] = unions[e.u].union(l);
        unions[e.v] = unions[e.v].union(l);
    }
    Ok(UnionColoring(unions))
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VerifyReport {
    /// Edges labelled `∅` while the empty set is not allowed.
    pub empty_labels: Vec<Edge>,
    /// Vertex pairs `(a, b)`, `a < b`, with equal unions.
    pub collisions: Vec<(usize, usize)>,
    pub colors_used: u32,
    pub missing_edges: Vec<Edge>,
    /// Labelled pairs that are not edges of the graph.
    pub foreign_edges: Vec<Edge>,
    pub isolated: Vec<usize>,
}

impl VerifyReport {
    pub fn is_valid(&self) -> bool {
        self.empty_labels.is_empty()
            && self.collisions.is_empty()
            && self.missing_edges.is_empty()
            && self.foreign_edges.is_empty()
            && self.isolated.is_empty()
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "valid={} colors={}", self.is_valid(), self.colors_used)?;
        for e in &self.empty_labels {
            writeln!(f, "empty-label {e}")?;
        }
        for (a, b) in &self.collisions {
            writeln!(f, "collision {a} {b}")?;
        }
        for e in &self.missing_edges {
            writeln!(f, "missing {e}")?;
        }
        for e in &self.foreign_edges {
            writeln!(f, "foreign {e}")?;
        }
        for v in &self.isolated {
            writeln!(f, "isolated {v}")?;
        }
        Ok(())
    }
}

/// Checks that `c` labels exactly the edges of `g` and that the vertex
/// unions are pairwise distinct. Every problem found is listed.
pub fn verify(g: &Graph, c: &EdgeColoring, allow_empty: bool) -> VerifyReport {
    let mut report = VerifyReport::default();
    let mut unions = vec![0u64; g.n()];
    let mut used = 0u64;
    for &e in g.edges() {
        match c.get(e) {
            Some(l) => {
                if l.is_empty() && !allow_empty {
                    report.empty_labels.push(e);
                }
                unions[e.u] |= l.bits();
                unions[e.v] |= l.bits();
                used |= l.bits();
            }
            None => report.missing_edges.push(e),
        }
    }
    report.foreign_edges = c
        .assignment
        .keys()
        .copied()
        .filter(|&e| e.v >= g.n() || !g.has_edge(e.u, e.v))
        .collect();
    report.isolated = (0..g.n()).filter(|&v| g.degree(v) == 0).collect();
    report.colors_used = used.count_ones();

    let mut by_union: BTreeMap<u64, Vec<usize>> = BTreeMap::new();
    for (v, &u) in unions.iter().enumerate() {
        by_union.entry(u).or_default().push(v);
    }
    for group in by_union.values() {
        for (i, &a) in group.iter().enumerate() {
            for &b in &group[i + 1..] {
                report.collisions.push((a, b));
            }
        }
    }
    report.collisions.sort_unstable();
    report
}

/// Serializes as a `k <colors> mode <standard|empty>` header followed by
/// `u v : {labels}` lines sorted by edge.
pub fn write_coloring(c: &EdgeColoring) -> String {
    let mut s = format!("k {} mode {}\n", c.k, c.mode.name());
    for (e, l) in &c.assignment {
        s.push_str(&format!("{e} : {l}\n"));
    }
    s
}

pub fn read_coloring(text: &str) -> Result<EdgeColoring> {
    let mut out: Option<EdgeColoring> = None;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let perr = |msg: String| Error::Parse { line, msg };
        let Some(c) = out.as_mut() else {
            let toks: Vec<&str> = content.split_whitespace().collect();
            let [kw, k, mkw, mode] = toks[..] else {
                return Err(perr(format!(
                    "expected `k <colors> mode <m>`, found `{content}`"
                )));
            };
            if kw != "k" || mkw != "mode" {
                return Err(perr(format!(
                    "expected `k <colors> mode <m>`, found `{content}`"
                )));
            }
            let k: u32 = k
                .parse()
                .map_err(|_| perr(format!("bad color count `{k}`")))?;
            if k > MAX_GROUND {
                return Err(perr(format!("color count {k} exceeds {MAX_GROUND}")));
            }
            let mode = match mode {
                "standard" => LabelMode::Standard,
                "empty" => LabelMode::Empty,
                other => return Err(perr(format!("unknown mode `{other}`"))),
            };
            out = Some(EdgeColoring::new(k, mode));
            continue;
        };
        let (pair, label) = content
            .split_once(':')
            .ok_or_else(|| perr(format!("expected `u v : {{labels}}`, found `{content}`")))?;
        let ends: Vec<usize> = pair
            .split_whitespace()
            .map(|t| t.parse().map_err(|_| perr(format!("bad vertex id `{t}`"))))
            .collect::<Result<_>>()?;
        let [a, b] = ends[..] else {
            return Err(perr(format!("expected two endpoints in `{pair}`")));
        };
        if a == b {
            return Err(Error::Loop { line, vertex: a });
        }
        let label = Label::parse_with_ground(label, c.k).map_err(|e| perr(e.to_string()))?;
        if c.assignment.insert(Edge::new(a, b), label).is_some() {
            return Err(Error::DuplicateEdge { line, u: a, v: b });
        }
    }
    out.ok_or(Error::Parse {
        line: 0,
        msg: "missing `k <colors> mode <m>` header".into(),
    })
}
