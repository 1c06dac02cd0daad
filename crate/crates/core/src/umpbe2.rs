//! Linear-time solver for two-page instances in which each page is a matching.
//!
//! With two matchings every vertex has degree at most two, so the underlying
//! graph splits into paths and even cycles. Walking a component gives a
//! crease pattern: crease letters come from the page and from whether the
//! edge agrees with the walk. A flat folded state of the pattern, read bottom
//! to top, is a valid ordering of the component. Components occupy disjoint
//! stretches of the spine and are laid out one after another.

use thiserror::Error;

use crate::instance::{matching_violation, Instance, InstanceError, MatchingViolation, Ordering, PageId, RawInstance};
use crate::origami::{effective_below, fold, Crease, CreasePattern};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Umpbe2Error {
    #[error("expected exactly 2 pages, got {0}")]
    WrongPageCount(u32),
    #[error("page {page} is not a matching: vertex `{vertex}` has two edges on it")]
    NotMatching { vertex: String, page: PageId },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ComponentKind {
    Path,
    Cycle,
}

/// A connected component in traversal order.
///
/// `edges[t]` joins `faces[t]` and `faces[t + 1]`; in a cycle the last edge
/// joins the last face back to the first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    pub kind: ComponentKind,
    pub faces: Vec<usize>,
    pub edges: Vec<usize>,
}

fn require_two_matchings(inst: &Instance) -> Result<(), Umpbe2Error> {
    if inst.pages() != 2 {
        return Err(Umpbe2Error::WrongPageCount(inst.pages()));
    }
    if let Some(MatchingViolation { vertex, page }) = matching_violation(inst) {
        return Err(Umpbe2Error::NotMatching {
            vertex: inst.name(vertex).to_string(),
            page,
        });
    }
    Ok(())
}

fn other_end(inst: &Instance, e: usize, v: usize) -> usize {
    let edge = inst.edge(e);
    if edge.src == v {
        edge.dst
    } else {
        edge.src
    }
}

/// Splits the instance into paths and cycles.
///
/// Components come in order of their lowest vertex. A path is walked from
/// its lower-index endpoint; a cycle from its lowest vertex towards that
/// vertex's lower-index neighbour. Isolated vertices are one-face paths.
pub fn decompose(inst: &Instance) -> Result<Vec<Component>, Umpbe2Error> {
    require_two_matchings(inst)?;
    let n = inst.vertex_count();
    let mut seen = vec![false; n];
    let mut members = Vec::new();
    let mut out = Vec::new();
    for root in 0..n {
        if seen[root] {
            continue;
        }
        members.clear();
        seen[root] = true;
        members.push(root);
        let mut i = 0;
        let mut edge_count = 0;
        while i < members.len() {
            let v = members[i];
            i += 1;
            for e in inst.incident_edges(v) {
                edge_count += 1;
                let w = other_end(inst, e, v);
                if !seen[w] {
                    seen[w] = true;
                    members.push(w);
                }
            }
        }
        edge_count /= 2;
        let kind = if edge_count == members.len() {
            ComponentKind::Cycle
        } else {
            ComponentKind::Path
        };
        let start = match kind {
            ComponentKind::Path => members
                .iter()
                .copied()
                .filter(|&v| inst.incident_edges(v).count() <= 1)
                .min()
                .expect("a path has an endpoint"),
            ComponentKind::Cycle => members.iter().copied().min().expect("non-empty"),
        };
        let first_edge = match kind {
            ComponentKind::Path => inst.incident_edges(start).next(),
            ComponentKind::Cycle => inst.incident_edges(start).min_by_key(|&e| other_end(inst, e, start)),
        };
        let mut faces = Vec::with_capacity(members.len());
        let mut edges = Vec::with_capacity(edge_count);
        faces.push(start);
        let mut cur = start;
        let mut via = first_edge;
        while let Some(e) = via {
            edges.push(e);
            let w = other_end(inst, e, cur);
            if w == start {
                break;
            }
            faces.push(w);
            cur = w;
            via = inst.incident_edges(cur).find(|&f| f != e);
        }
        out.push(Component { kind, faces, edges });
    }
    Ok(out)
}

/// Mountain iff a page-1 edge follows the walk or a page-2 edge opposes it.
///
/// # Panics
///
/// If the component has no edges.
pub fn to_crease_pattern(inst: &Instance, comp: &Component) -> CreasePattern {
    let creases = comp
        .edges
        .iter()
        .enumerate()
        .map(|(t, &e)| {
            let edge = inst.edge(e);
            let aligned = edge.src == comp.faces[t];
            if (edge.page == PageId::RED) == aligned {
                Crease::Mountain
            } else {
                Crease::Valley
            }
        })
        .collect();
    match comp.kind {
        ComponentKind::Path => CreasePattern::linear(creases),
        ComponentKind::Cycle => CreasePattern::cyclic(creases),
    }
    .expect("components have at least one edge and cycles are even")
}

/// The two-page instance of a pattern: faces become vertices `f1`, `f2`, ...,
/// crease `i` (from 0) becomes an edge between faces `i` and `i + 1` on page 2
/// when `i` is even and page 1 when odd, pointing from the lower face to the
/// upper one.
///
/// A cyclic pattern can force its faces into a directed cycle (`MVMV` does),
/// in which case there is no instance and no flat folded state; the error
/// carries the cycle.
pub fn from_crease_pattern(pattern: &CreasePattern) -> Result<Instance, InstanceError> {
    let mut raw = RawInstance::new(2);
    raw.vertices = (1..=pattern.face_count()).map(|i| format!("f{i}")).collect();
    for i in 0..pattern.len() {
        let (a, b) = pattern.faces_of(i);
        let page = if i % 2 == 0 { 2 } else { 1 };
        let (lower, upper) = if effective_below(pattern, i) { (b, a) } else { (a, b) };
        raw.add_edge(raw.vertices[lower].clone(), raw.vertices[upper].clone(), page);
    }
    raw.check()
}

/// Solves the instance in linear time, returning `None` when no valid
/// ordering exists.
pub fn solve_umpbe2(inst: &Instance) -> Result<Option<Ordering>, Umpbe2Error> {
    let comps = decompose(inst)?;
    let mut seq = Vec::with_capacity(inst.vertex_count());
    for comp in &comps {
        if comp.edges.is_empty() {
            seq.extend(&comp.faces);
            continue;
        }
        let pattern = to_crease_pattern(inst, comp);
        let Some(layers) = fold(&pattern) else {
            return Ok(None);
        };
        // The pattern's own instance puts its first edge on page 2. If the
        // component starts on page 1 it is that instance with pages swapped
        // and every edge reversed, so the stack is read top to bottom.
        let bottom_up = inst.edge(comp.edges[0]).page != PageId::RED;
        let faces = layers.faces().iter().map(|&f| comp.faces[f]);
        if bottom_up {
            seq.extend(faces);
        } else {
            seq.extend(faces.rev());
        }
    }
    Ok(Some(
        Ordering::from_indices(seq).expect("components partition the vertices"),
    ))
}
