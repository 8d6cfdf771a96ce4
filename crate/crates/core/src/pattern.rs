//! The small named graphs used as forbidden or heavy subgraphs, and
//! enumeration of their induced copies inside a host graph.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PatternError {
    #[error("invalid parameter for {kind}: {reason}")]
    InvalidParameter { kind: String, reason: String },
    #[error("unknown pattern name {0:?}")]
    UnknownName(String),
}

/// Catalog of parametric small graphs.
///
/// `Z(i)` is a triangle with a path of `i` further vertices hanging from one
/// corner, `Bij(i, j)` hangs paths from two corners and `Nijk(i, j, k)` from
/// all three. `Bull`, `Net` and `Wounded` are `B(1,1)`, `N(1,1,1)` and
/// `B(1,2)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum PatternKind {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    Claw,
    Z(usize),
    Bij(usize, usize),
    Nijk(usize, usize, usize),
    Bull,
    Net,
    Wounded,
    Hourglass,
    K112,
    Star(usize),
}

impl PatternKind {
    /// Resolves the named aliases to their parametric form.
    pub fn canonical(self) -> PatternKind {
        match self {
            PatternKind::Bull => PatternKind::Bij(1, 1),
            PatternKind::Net => PatternKind::Nijk(1, 1, 1),
            PatternKind::Wounded => PatternKind::Bij(1, 2),
            PatternKind::Claw => PatternKind::Star(3),
            other => other,
        }
    }

    pub fn order(self) -> usize {
        match self.canonical() {
            PatternKind::Path(i) | PatternKind::Cycle(i) | PatternKind::Complete(i) => i,
            PatternKind::Z(i) => i + 3,
            PatternKind::Bij(i, j) => i + j + 3,
            PatternKind::Nijk(i, j, k) => i + j + k + 3,
            PatternKind::Hourglass => 5,
            PatternKind::K112 => 4,
            PatternKind::Star(k) => k + 1,
            PatternKind::Bull | PatternKind::Net | PatternKind::Wounded | PatternKind::Claw => {
                unreachable!("canonicalised")
            }
        }
    }

    pub fn is_net(self) -> bool {
        self.canonical() == PatternKind::Nijk(1, 1, 1)
    }
}

impl fmt::Display for PatternKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            PatternKind::Path(i) => write!(f, "P{i}"),
            PatternKind::Cycle(i) => write!(f, "C{i}"),
            PatternKind::Complete(i) => write!(f, "K{i}"),
            PatternKind::Claw => write!(f, "claw"),
            PatternKind::Z(i) => write!(f, "Z{i}"),
            PatternKind::Bij(i, j) => write!(f, "B({i},{j})"),
            PatternKind::Nijk(i, j, k) => write!(f, "N({i},{j},{k})"),
            PatternKind::Bull => write!(f, "B"),
            PatternKind::Net => write!(f, "N"),
            PatternKind::Wounded => write!(f, "W"),
            PatternKind::Hourglass => write!(f, "H"),
            PatternKind::K112 => write!(f, "K112"),
            PatternKind::Star(k) => write!(f, "S{k}"),
        }
    }
}

fn parse_params(s: &str) -> Option<Vec<usize>> {
    let inner = s.strip_prefix('(').and_then(|r| r.strip_suffix(')'));
    match inner {
        Some(list) => list.split(',').map(|p| p.trim().parse().ok()).collect(),
        None if s.chars().all(|c| c.is_ascii_digit()) && !s.is_empty() => {
            s.chars().map(|c| c.to_digit(10).map(|d| d as usize)).collect()
        }
        None => None,
    }
}

impl FromStr for PatternKind {
    type Err = PatternError;

    /// Accepts `P4`, `C3`, `K5`, `Z2`, `B`, `B11`, `B(1,12)`, `N`, `N111`,
    /// `N(1,1,2)`, `W`, `H`, `K112`, `S3`, and the words `claw`, `bull`,
    /// `net`, `wounded`, `hourglass`, `diamond`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let unknown = || PatternError::UnknownName(s.to_string());
        let t = s.trim();
        match t.to_ascii_lowercase().as_str() {
            "claw" | "k13" | "k1,3" => return Ok(PatternKind::Claw),
            "bull" | "b" => return Ok(PatternKind::Bull),
            "net" | "n" => return Ok(PatternKind::Net),
            "wounded" | "w" => return Ok(PatternKind::Wounded),
            "hourglass" | "h" => return Ok(PatternKind::Hourglass),
            "k112" | "diamond" => return Ok(PatternKind::K112),
            _ => {}
        }
        let mut chars = t.chars();
        let head = chars.next().ok_or_else(unknown)?;
        let rest = chars.as_str().trim_start_matches('_');
        let single = || rest.parse::<usize>().map_err(|_| unknown());
        match head {
            'P' | 'p' => Ok(PatternKind::Path(single()?)),
            'C' | 'c' => Ok(PatternKind::Cycle(single()?)),
            'K' | 'k' => Ok(PatternKind::Complete(single()?)),
            'Z' | 'z' => Ok(PatternKind::Z(single()?)),
            'S' | 's' => Ok(PatternKind::Star(single()?)),
            'B' | 'b' => match parse_params(rest).as_deref() {
                Some(&[i, j]) => Ok(PatternKind::Bij(i, j)),
                _ => Err(unknown()),
            },
            'N' | 'n' => match parse_params(rest).as_deref() {
                Some(&[i, j, k]) => Ok(PatternKind::Nijk(i, j, k)),
                _ => Err(unknown()),
            },
            _ => Err(unknown()),
        }
    }
}

/// A catalog graph together with per-vertex role labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PatternSpec {
    pub kind: PatternKind,
    pub graph: Graph,
    pub roles: Vec<String>,
}

struct Builder {
    edges: Vec<(usize, usize)>,
    roles: Vec<String>,
}

impl Builder {
    fn new() -> Self {
        Builder { edges: Vec::new(), roles: Vec::new() }
    }

    fn vertex(&mut self, role: impl Into<String>) -> usize {
        self.roles.push(role.into());
        self.roles.len() - 1
    }

    fn edge(&mut self, u: usize, v: usize) {
        self.edges.push((u, v));
    }

    /// Hangs a path of `len` new vertices named `{prefix}1..` from `root`.
    fn tail(&mut self, root: usize, prefix: &str, len: usize) {
        let mut prev = root;
        for i in 1..=len {
            let v = self.vertex(format!("{prefix}{i}"));
            self.edge(prev, v);
            prev = v;
        }
    }

    fn finish(self, kind: PatternKind) -> PatternSpec {
        let graph = Graph::new(self.roles.len(), self.edges).expect("catalog graphs are simple");
        PatternSpec { kind, graph, roles: self.roles }
    }
}

fn invalid(kind: PatternKind, reason: &str) -> PatternError {
    PatternError::InvalidParameter { kind: kind.to_string(), reason: reason.to_string() }
}

/// Triangle `a b c` with paths of the given lengths hanging from each corner.
fn triangle_with_tails(kind: PatternKind, tails: [usize; 3]) -> PatternSpec {
    let mut b = Builder::new();
    let corners = [b.vertex("a"), b.vertex("b"), b.vertex("c")];
    b.edge(corners[0], corners[1]);
    b.edge(corners[1], corners[2]);
    b.edge(corners[0], corners[2]);
    for ((&root, prefix), len) in corners.iter().zip(["a", "b", "c"]).zip(tails) {
        b.tail(root, prefix, len);
    }
    b.finish(kind)
}

pub fn make_pattern(kind: PatternKind) -> Result<PatternSpec, PatternError> {
    let spec = match kind.canonical() {
        PatternKind::Path(i) => {
            if i < 1 {
                return Err(invalid(kind, "path order must be at least 1"));
            }
            let mut b = Builder::new();
            let first = b.vertex("a1");
            let mut prev = first;
            for j in 2..=i {
                let v = b.vertex(format!("a{j}"));
                b.edge(prev, v);
                prev = v;
            }
            b.finish(kind)
        }
        PatternKind::Cycle(i) => {
            if i < 3 {
                return Err(invalid(kind, "cycle order must be at least 3"));
            }
            let mut b = Builder::new();
            for j in 1..=i {
                b.vertex(format!("a{j}"));
            }
            for j in 0..i {
                b.edge(j, (j + 1) % i);
            }
            b.finish(kind)
        }
        PatternKind::Complete(i) => {
            if i < 1 {
                return Err(invalid(kind, "complete graph order must be at least 1"));
            }
            let mut b = Builder::new();
            for j in 1..=i {
                b.vertex(format!("a{j}"));
            }
            for u in 0..i {
                for v in u + 1..i {
                    b.edge(u, v);
                }
            }
            b.finish(kind)
        }
        PatternKind::Star(k) => {
            if k < 1 {
                return Err(invalid(kind, "star needs at least one leaf"));
            }
            let mut b = Builder::new();
            let c = b.vertex("c");
            for j in 1..=k {
                let l = b.vertex(format!("l{j}"));
                b.edge(c, l);
            }
            b.finish(kind)
        }
        PatternKind::Z(i) => {
            if i < 1 {
                return Err(invalid(kind, "Z_i needs i >= 1"));
            }
            triangle_with_tails(kind, [i, 0, 0])
        }
        PatternKind::Bij(i, j) => {
            if i < 1 || j < 1 {
                return Err(invalid(kind, "B_ij needs i, j >= 1"));
            }
            triangle_with_tails(kind, [i, j, 0])
        }
        PatternKind::Nijk(i, j, k) => {
            if i < 1 || j < 1 || k < 1 {
                return Err(invalid(kind, "N_ijk needs i, j, k >= 1"));
            }
            triangle_with_tails(kind, [i, j, k])
        }
        PatternKind::Hourglass => {
            let mut b = Builder::new();
            let c = b.vertex("c");
            let v: Vec<usize> = ["x1", "x2", "y1", "y2"].into_iter().map(|r| b.vertex(r)).collect();
            for &u in &v {
                b.edge(c, u);
            }
            b.edge(v[0], v[1]);
            b.edge(v[2], v[3]);
            b.finish(kind)
        }
        PatternKind::K112 => {
            let mut b = Builder::new();
            let (x, y, u, w) = (b.vertex("x"), b.vertex("y"), b.vertex("u"), b.vertex("w"));
            for (p, q) in [(x, y), (x, u), (x, w), (y, u), (y, w)] {
                b.edge(p, q);
            }
            b.finish(kind)
        }
        PatternKind::Bull | PatternKind::Net | PatternKind::Wounded | PatternKind::Claw => {
            unreachable!("canonicalised")
        }
    };
    Ok(spec)
}

impl PatternSpec {
    pub fn new(kind: PatternKind) -> Result<Self, PatternError> {
        make_pattern(kind)
    }

    /// Wraps an arbitrary graph as a pattern with numeric roles.
    pub fn from_graph(kind: PatternKind, graph: Graph) -> PatternSpec {
        let roles = (0..graph.order()).map(|v| v.to_string()).collect();
        PatternSpec { kind, graph, roles }
    }

    pub fn order(&self) -> usize {
        self.graph.order()
    }

    pub fn role_vertex(&self, role: &str) -> Option<usize> {
        self.roles.iter().position(|r| r == role)
    }
}

/// An induced copy of a pattern in a host: the host vertex set plus one
/// isomorphism, `embedding[p]` being the host image of pattern vertex `p`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InducedCopy {
    pub vertices: VertexSet,
    pub embedding: Vec<usize>,
}

/// Search plan: pattern vertices in placement order with the adjacency
/// constraints each one has towards earlier positions.
#[derive(Debug, Clone)]
struct Plan {
    order: Vec<usize>,
    earlier_adjacent: Vec<u64>,
    min_degree: Vec<usize>,
}

impl Plan {
    fn new(pattern: &Graph) -> Plan {
        let k = pattern.order();
        let mut order: Vec<usize> = Vec::with_capacity(k);
        let mut placed = VertexSet::EMPTY;
        while order.len() < k {
            let next = (pattern.vertices() - placed)
                .iter()
                .max_by_key(|&v| ((pattern.neighbors(v) & placed).len(), pattern.degree(v), std::cmp::Reverse(v)))
                .expect("unplaced vertex");
            order.push(next);
            placed.insert(next);
        }
        let earlier_adjacent = order
            .iter()
            .enumerate()
            .map(|(pos, &p)| (0..pos).filter(|&q| pattern.has_edge(p, order[q])).fold(0u64, |m, q| m | 1 << q))
            .collect();
        let min_degree = order.iter().map(|&p| pattern.degree(p)).collect();
        Plan { order, earlier_adjacent, min_degree }
    }
}

/// Lazy enumeration of all induced embeddings of a pattern into a host
/// (one per injective map, so automorphic images repeat vertex sets).
pub struct Embeddings<'a> {
    host: &'a Graph,
    plan: Plan,
    /// Vertices with enough degree for each position.
    eligible: Vec<VertexSet>,
    candidates: Vec<VertexSet>,
    image: Vec<usize>,
    used: VertexSet,
    depth: usize,
    done: bool,
}

impl<'a> Embeddings<'a> {
    pub fn new(host: &'a Graph, pattern: &Graph) -> Embeddings<'a> {
        let plan = Plan::new(pattern);
        let k = plan.order.len();
        let eligible = plan
            .min_degree
            .iter()
            .map(|&d| host.vertices().iter().filter(|&v| host.degree(v) >= d).collect())
            .collect();
        let mut e = Embeddings {
            host,
            plan,
            eligible,
            candidates: vec![VertexSet::EMPTY; k],
            image: vec![0; k],
            used: VertexSet::EMPTY,
            depth: 0,
            done: k == 0 || k > host.order(),
        };
        if !e.done {
            e.candidates[0] = e.eligible[0];
        }
        e
    }

    fn candidates_at(&self, pos: usize) -> VertexSet {
        let mut c = self.eligible[pos] - self.used;
        let adj = self.plan.earlier_adjacent[pos];
        for q in 0..pos {
            let nb = self.host.neighbors(self.image[q]);
            c = if adj >> q & 1 == 1 { c & nb } else { c - nb };
        }
        c
    }

    /// Advances to the next embedding and returns the images in placement
    /// order, without allocating.
    fn advance(&mut self) -> bool {
        let k = self.plan.order.len();
        loop {
            if self.done {
                return false;
            }
            let d = self.depth;
            match self.candidates[d].first() {
                None => {
                    if d == 0 {
                        self.done = true;
                        return false;
                    }
                    self.depth -= 1;
                    self.used.remove(self.image[self.depth]);
                }
                Some(v) => {
                    self.candidates[d].remove(v);
                    self.image[d] = v;
                    if d + 1 == k {
                        return true;
                    }
                    self.used.insert(v);
                    self.depth += 1;
                    self.candidates[d + 1] = self.candidates_at(d + 1);
                }
            }
        }
    }

    /// Embedding indexed by pattern vertex.
    fn current(&self) -> Vec<usize> {
        let mut out = vec![0; self.image.len()];
        for (pos, &p) in self.plan.order.iter().enumerate() {
            out[p] = self.image[pos];
        }
        out
    }

    fn current_set(&self) -> VertexSet {
        self.image.iter().copied().collect()
    }
}

impl Iterator for Embeddings<'_> {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        self.advance().then(|| self.current())
    }
}

/// Lazy enumeration of induced copies, one per vertex set, in the order of
/// first discovery.
pub struct InducedCopies<'a> {
    inner: Embeddings<'a>,
    seen: HashSet<VertexSet>,
}

impl Iterator for InducedCopies<'_> {
    type Item = InducedCopy;

    fn next(&mut self) -> Option<InducedCopy> {
        while self.inner.advance() {
            let set = self.inner.current_set();
            if self.seen.insert(set) {
                return Some(InducedCopy { vertices: set, embedding: self.inner.current() });
            }
        }
        None
    }
}

/// Every vertex subset of `host` inducing a graph isomorphic to `pattern`,
/// each exactly once.
pub fn induced_copies<'a>(host: &'a Graph, pattern: &PatternSpec) -> InducedCopies<'a> {
    InducedCopies { inner: Embeddings::new(host, &pattern.graph), seen: HashSet::new() }
}

/// Vertex sets of all induced copies, without embeddings.
pub fn induced_copy_sets(host: &Graph, pattern: &Graph) -> Vec<VertexSet> {
    let mut e = Embeddings::new(host, pattern);
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    while e.advance() {
        let s = e.current_set();
        if seen.insert(s) {
            out.push(s);
        }
    }
    out
}

pub fn is_free(host: &Graph, pattern: &PatternSpec) -> bool {
    Embeddings::new(host, &pattern.graph).next().is_none()
}

pub fn contains_induced(host: &Graph, pattern: &Graph) -> bool {
    Embeddings::new(host, pattern).next().is_some()
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    if a.order() != b.order() || a.edge_count() != b.edge_count() {
        return false;
    }
    let mut da = a.degrees();
    let mut db = b.degrees();
    da.sort_unstable();
    db.sort_unstable();
    da == db && contains_induced(a, b)
}

/// Claw-freeness without going through the generic matcher: no vertex has
/// three pairwise non-adjacent neighbours.
pub fn is_claw_free(g: &Graph) -> bool {
    (0..g.order()).all(|v| {
        let nv = g.neighbors(v);
        nv.iter().all(|x| {
            let rest = nv - g.neighbors(x) - VertexSet::singleton(x);
            // x plus two non-adjacent vertices from `rest` would be a claw
            rest.iter().all(|y| (rest - g.neighbors(y)).without(y).is_empty())
        })
    })
}

/// `K_{1,1,2}`-freeness: the common neighbourhood of every edge is a clique.
pub fn is_k112_free(g: &Graph) -> bool {
    g.edges().all(|(u, v)| g.is_clique(g.neighbors(u) & g.neighbors(v)))
}
