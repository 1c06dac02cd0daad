//! Instances, orderings and the validity predicate for a candidate ordering.

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

/// A page index in `1..=k`.
///
/// The first four pages have conventional colour names which the reductions
/// and the renderer use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PageId(u32);

impl PageId {
    pub const RED: PageId = PageId(1);
    pub const BLUE: PageId = PageId(2);
    pub const GREEN: PageId = PageId(3);
    pub const YELLOW: PageId = PageId(4);

    /// Returns `None` for page 0, which is never valid.
    pub fn new(page: u32) -> Option<PageId> {
        (page >= 1).then_some(PageId(page))
    }

    pub fn get(self) -> u32 {
        self.0
    }

    pub fn index(self) -> usize {
        self.0 as usize - 1
    }

    pub fn color_name(self) -> Option<&'static str> {
        match self.0 {
            1 => Some("Red"),
            2 => Some("Blue"),
            3 => Some("Green"),
            4 => Some("Yellow"),
            _ => None,
        }
    }
}

impl fmt::Display for PageId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// An edge of an unchecked instance, endpoints given by name.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawEdge {
    pub src: String,
    pub dst: String,
    pub page: u32,
}

/// An instance as written down, before any well-formedness check.
///
/// Call [`RawInstance::check`] (or [`check_instance`]) to obtain an [`Instance`].
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RawInstance {
    pub pages: u32,
    pub vertices: Vec<String>,
    pub edges: Vec<RawEdge>,
}

impl RawInstance {
    pub fn new(pages: u32) -> Self {
        RawInstance {
            pages,
            vertices: Vec::new(),
            edges: Vec::new(),
        }
    }

    pub fn add_vertex(&mut self, name: impl Into<String>) {
        self.vertices.push(name.into());
    }

    pub fn add_edge(&mut self, src: impl Into<String>, dst: impl Into<String>, page: u32) {
        self.edges.push(RawEdge {
            src: src.into(),
            dst: dst.into(),
            page,
        });
    }

    pub fn check(self) -> Result<Instance, InstanceError> {
        Instance::from_raw(self)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InstanceError {
    #[error("page count must be at least 1")]
    NoPages,
    #[error("duplicate vertex `{0}`")]
    DuplicateVertex(String),
    #[error("edge {edge} ({src} -> {dst}) names unknown vertex `{vertex}`")]
    UnknownVertex {
        edge: usize,
        src: String,
        dst: String,
        vertex: String,
    },
    #[error("edge {edge} is a self-loop on `{vertex}`")]
    SelfLoop { edge: usize, vertex: String },
    #[error("edges {first} and {second} both join `{u}` and `{v}`")]
    ParallelEdge {
        first: usize,
        second: usize,
        u: String,
        v: String,
    },
    #[error("edge {edge} ({src} -> {dst}) has page {page}, outside 1..={pages}")]
    PageOutOfRange {
        edge: usize,
        src: String,
        dst: String,
        page: u32,
        pages: u32,
    },
    #[error("graph has a directed cycle: {}", .cycle.join(" -> "))]
    NotADag { cycle: Vec<String> },
}

/// A checked edge. Endpoints are vertex indices into the owning [`Instance`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Edge {
    pub src: usize,
    pub dst: usize,
    pub page: PageId,
}

/// Compressed adjacency: for vertex `v`, `items[offsets[v]..offsets[v + 1]]`.
#[derive(Debug, Clone, PartialEq, Eq)]
struct Adjacency {
    offsets: Vec<usize>,
    items: Vec<usize>,
}

impl Adjacency {
    fn build(n: usize, keys: impl Iterator<Item = (usize, usize)> + Clone) -> Self {
        let mut offsets = vec![0usize; n + 1];
        for (v, _) in keys.clone() {
            offsets[v + 1] += 1;
        }
        for i in 0..n {
            offsets[i + 1] += offsets[i];
        }
        let mut fill = offsets.clone();
        let mut items = vec![0usize; offsets[n]];
        for (v, item) in keys {
            items[fill[v]] = item;
            fill[v] += 1;
        }
        Adjacency { offsets, items }
    }

    fn get(&self, v: usize) -> &[usize] {
        &self.items[self.offsets[v]..self.offsets[v + 1]]
    }
}

/// A well-formed instance: a simple DAG whose edges each carry a page in `1..=k`.
///
/// Vertices are addressed by their insertion index. All invariants are
/// established by construction, so every method can rely on them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    pages: u32,
    names: Vec<String>,
    index: HashMap<String, usize>,
    edges: Vec<Edge>,
    out_adj: Adjacency,
    in_adj: Adjacency,
}

impl Instance {
    pub fn from_raw(raw: RawInstance) -> Result<Instance, InstanceError> {
        if raw.pages == 0 {
            return Err(InstanceError::NoPages);
        }
        let mut index = HashMap::with_capacity(raw.vertices.len());
        for (i, name) in raw.vertices.iter().enumerate() {
            if index.insert(name.clone(), i).is_some() {
                return Err(InstanceError::DuplicateVertex(name.clone()));
            }
        }
        let mut edges = Vec::with_capacity(raw.edges.len());
        let mut pairs: HashMap<(usize, usize), usize> = HashMap::with_capacity(raw.edges.len());
        for (i, e) in raw.edges.iter().enumerate() {
            let lookup = |name: &String| {
                index.get(name).copied().ok_or_else(|| InstanceError::UnknownVertex {
                    edge: i,
                    src: e.src.clone(),
                    dst: e.dst.clone(),
                    vertex: name.clone(),
                })
            };
            let src = lookup(&e.src)?;
            let dst = lookup(&e.dst)?;
            if src == dst {
                return Err(InstanceError::SelfLoop {
                    edge: i,
                    vertex: e.src.clone(),
                });
            }
            if e.page == 0 || e.page > raw.pages {
                return Err(InstanceError::PageOutOfRange {
                    edge: i,
                    src: e.src.clone(),
                    dst: e.dst.clone(),
                    page: e.page,
                    pages: raw.pages,
                });
            }
            let key = (src.min(dst), src.max(dst));
            if let Some(&first) = pairs.get(&key) {
                let other: &Edge = &edges[first];
                if other.src == dst {
                    // Antiparallel pair: a directed 2-cycle.
                    return Err(InstanceError::NotADag {
                        cycle: vec![e.src.clone(), e.dst.clone(), e.src.clone()],
                    });
                }
                return Err(InstanceError::ParallelEdge {
                    first,
                    second: i,
                    u: raw.vertices[key.0].clone(),
                    v: raw.vertices[key.1].clone(),
                });
            }
            pairs.insert(key, i);
            edges.push(Edge {
                src,
                dst,
                page: PageId(e.page),
            });
        }
        let n = raw.vertices.len();
        let out_adj = Adjacency::build(n, edges.iter().enumerate().map(|(i, e)| (e.src, i)));
        let in_adj = Adjacency::build(n, edges.iter().enumerate().map(|(i, e)| (e.dst, i)));
        let inst = Instance {
            pages: raw.pages,
            names: raw.vertices,
            index,
            edges,
            out_adj,
            in_adj,
        };
        if let Some(cycle) = inst.find_cycle() {
            return Err(InstanceError::NotADag {
                cycle: cycle.into_iter().map(|v| inst.names[v].clone()).collect(),
            });
        }
        Ok(inst)
    }

    /// Kahn's algorithm; on failure, walks predecessors among the
    /// unremoved vertices until one repeats.
    fn find_cycle(&self) -> Option<Vec<usize>> {
        let n = self.names.len();
        let mut indeg: Vec<usize> = (0..n).map(|v| self.in_adj.get(v).len()).collect();
        let mut queue: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
        let mut removed = vec![false; n];
        while let Some(v) = queue.pop() {
            removed[v] = true;
            for &e in self.out_adj.get(v) {
                let w = self.edges[e].dst;
                indeg[w] -= 1;
                if indeg[w] == 0 {
                    queue.push(w);
                }
            }
        }
        let start = (0..n).find(|&v| !removed[v])?;
        let mut seen = vec![usize::MAX; n];
        let mut walk = Vec::new();
        let mut v = start;
        while seen[v] == usize::MAX {
            seen[v] = walk.len();
            walk.push(v);
            v = self
                .in_adj
                .get(v)
                .iter()
                .map(|&e| self.edges[e].src)
                .find(|&u| !removed[u])
                .expect("an unremoved vertex keeps an unremoved predecessor");
        }
        let mut cycle = walk[seen[v]..].to_vec();
        cycle.reverse();
        cycle.push(cycle[0]);
        Some(cycle)
    }

    pub fn pages(&self) -> u32 {
        self.pages
    }

    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, v: usize) -> &str {
        &self.names[v]
    }

    pub fn vertex(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, e: usize) -> Edge {
        self.edges[e]
    }

    /// Indices of the edges leaving `v`, in edge order.
    pub fn out_edges(&self, v: usize) -> &[usize] {
        self.out_adj.get(v)
    }

    /// Indices of the edges entering `v`, in edge order.
    pub fn in_edges(&self, v: usize) -> &[usize] {
        self.in_adj.get(v)
    }

    /// Edges touching `v` in either direction.
    pub fn incident_edges(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.in_edges(v).iter().chain(self.out_edges(v)).copied()
    }

    pub fn to_raw(&self) -> RawInstance {
        RawInstance {
            pages: self.pages,
            vertices: self.names.clone(),
            edges: self
                .edges
                .iter()
                .map(|e| RawEdge {
                    src: self.names[e.src].clone(),
                    dst: self.names[e.dst].clone(),
                    page: e.page.get(),
                })
                .collect(),
        }
    }
}

/// Checks every instance invariant, returning the first violation found.
pub fn check_instance(raw: &RawInstance) -> Result<(), InstanceError> {
    Instance::from_raw(raw.clone()).map(|_| ())
}

/// A vertex touched by two edges of the same page.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MatchingViolation {
    pub vertex: usize,
    pub page: PageId,
}

/// Scans edges in order and reports the first vertex that meets a second
/// edge on the same page.
pub fn matching_violation(inst: &Instance) -> Option<MatchingViolation> {
    let mut seen: HashMap<(usize, PageId), ()> = HashMap::new();
    for e in inst.edges() {
        for v in [e.src, e.dst] {
            if seen.insert((v, e.page), ()).is_some() {
                return Some(MatchingViolation {
                    vertex: v,
                    page: e.page,
                });
            }
        }
    }
    None
}

pub fn is_matching_partition(inst: &Instance) -> bool {
    matching_violation(inst).is_none()
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrderingError {
    #[error("ordering names unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("ordering lists vertex `{0}` more than once")]
    DuplicateVertex(String),
    #[error("ordering omits vertex `{0}`")]
    MissingVertex(String),
}

/// A linear order on vertex indices together with its inverse.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Ordering {
    seq: Vec<usize>,
    rank: Vec<usize>,
}

impl Ordering {
    /// `seq` must be a permutation of `0..seq.len()`.
    pub fn from_indices(seq: Vec<usize>) -> Result<Ordering, OrderingError> {
        let n = seq.len();
        let mut rank = vec![usize::MAX; n];
        for (r, &v) in seq.iter().enumerate() {
            if v >= n {
                return Err(OrderingError::UnknownVertex(v.to_string()));
            }
            if rank[v] != usize::MAX {
                return Err(OrderingError::DuplicateVertex(v.to_string()));
            }
            rank[v] = r;
        }
        Ok(Ordering { seq, rank })
    }

    pub fn from_names<S: AsRef<str>>(inst: &Instance, names: &[S]) -> Result<Ordering, OrderingError> {
        let n = inst.vertex_count();
        let mut rank = vec![usize::MAX; n];
        let mut seq = Vec::with_capacity(names.len());
        for (r, name) in names.iter().enumerate() {
            let name = name.as_ref();
            let v = inst
                .vertex(name)
                .ok_or_else(|| OrderingError::UnknownVertex(name.to_string()))?;
            if rank[v] != usize::MAX {
                return Err(OrderingError::DuplicateVertex(name.to_string()));
            }
            rank[v] = r;
            seq.push(v);
        }
        if let Some(v) = rank.iter().position(|&r| r == usize::MAX) {
            return Err(OrderingError::MissingVertex(inst.name(v).to_string()));
        }
        Ok(Ordering { seq, rank })
    }

    pub fn identity(n: usize) -> Ordering {
        Ordering {
            seq: (0..n).collect(),
            rank: (0..n).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.seq.len()
    }

    pub fn is_empty(&self) -> bool {
        self.seq.is_empty()
    }

    pub fn seq(&self) -> &[usize] {
        &self.seq
    }

    pub fn rank(&self, v: usize) -> usize {
        self.rank[v]
    }

    pub fn into_seq(self) -> Vec<usize> {
        self.seq
    }

    pub fn names<'a>(&self, inst: &'a Instance) -> Vec<&'a str> {
        self.seq.iter().map(|&v| inst.name(v)).collect()
    }
}

/// True iff the two arcs strictly interleave under `ord`. Arcs sharing an
/// endpoint never cross. Pages are not consulted.
pub fn edges_cross(ord: &Ordering, e1: &Edge, e2: &Edge) -> bool {
    let (a, b) = sorted(ord.rank(e1.src), ord.rank(e1.dst));
    let (c, d) = sorted(ord.rank(e2.src), ord.rank(e2.dst));
    (a < c && c < b && b < d) || (c < a && a < d && d < b)
}

fn sorted(x: usize, y: usize) -> (usize, usize) {
    if x <= y {
        (x, y)
    } else {
        (y, x)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// The edge points backwards.
    Topological {
        edge: usize,
    },
    /// Two same-page edges interleave.
    Crossing {
        first: usize,
        second: usize,
    },
    VertexSetMismatch(OrderingError),
}

impl Violation {
    pub fn describe(&self, inst: &Instance) -> String {
        let show = |e: usize| {
            let e = inst.edge(e);
            format!("({} -> {}, page {})", inst.name(e.src), inst.name(e.dst), e.page)
        };
        match self {
            Violation::Topological { edge } => format!("topological: edge {} points backwards", show(*edge)),
            Violation::Crossing { first, second } => {
                format!("crossing: {} crosses {}", show(*first), show(*second))
            }
            Violation::VertexSetMismatch(err) => format!("vertex-set-mismatch: {err}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks that `ord` is topological and that no two same-page arcs interleave.
///
/// Every backwards edge is reported. For crossings, each page is swept once
/// with a stack of open arcs, so at most one crossing is reported per arc;
/// the report is non-empty exactly when some crossing exists.
pub fn validate_ordering(inst: &Instance, ord: &Ordering) -> ValidationReport {
    let mut report = ValidationReport::default();
    if ord.len() != inst.vertex_count() {
        let err = if ord.len() < inst.vertex_count() {
            let v = (0..inst.vertex_count())
                .find(|&v| v >= ord.len() || !ord.seq.contains(&v))
                .unwrap_or(0);
            OrderingError::MissingVertex(inst.name(v).to_string())
        } else {
            OrderingError::UnknownVertex(ord.len().saturating_sub(1).to_string())
        };
        report.violations.push(Violation::VertexSetMismatch(err));
        return report;
    }
    for (i, e) in inst.edges().iter().enumerate() {
        if ord.rank(e.src) > ord.rank(e.dst) {
            report.violations.push(Violation::Topological { edge: i });
        }
    }

    let mut by_page: Vec<Vec<(usize, usize, usize)>> = vec![Vec::new(); inst.pages() as usize];
    for (i, e) in inst.edges().iter().enumerate() {
        let (a, b) = sorted(ord.rank(e.src), ord.rank(e.dst));
        by_page[e.page.index()].push((a, b, i));
    }
    for arcs in &mut by_page {
        // Left end ascending, right end descending: an arc is seen before
        // every arc it encloses.
        arcs.sort_unstable_by(|x, y| x.0.cmp(&y.0).then(y.1.cmp(&x.1)));
        let mut open: Vec<(usize, usize)> = Vec::new();
        for &(a, b, i) in arcs.iter() {
            while open.last().is_some_and(|&(end, _)| end <= a) {
                open.pop();
            }
            if let Some(&(end, j)) = open.last() {
                if end < b {
                    report.violations.push(Violation::Crossing { first: j, second: i });
                }
            }
            open.push((b, i));
        }
    }
    report
}

/// Like [`validate_ordering`], but starting from vertex names so that a
/// malformed ordering is reported rather than rejected.
pub fn validate_names<S: AsRef<str>>(inst: &Instance, names: &[S]) -> ValidationReport {
    match Ordering::from_names(inst, names) {
        Ok(ord) => validate_ordering(inst, &ord),
        Err(err) => ValidationReport {
            violations: vec![Violation::VertexSetMismatch(err)],
        },
    }
}
