//! Betweenness and the two hardness reductions built on it.
//!
//! A Betweenness instance lists elements and ordered triples `<a, b, c>`; an
//! ordering of the elements satisfies a triple when `b` sits between `a` and
//! `c`. The reductions turn such an instance into an upward book embedding
//! instance on 3 pages ([`assemble_upbe3`]) or on 4 matching pages
//! ([`assemble_umpbe4`]), and translate orderings in both directions.
//!
//! Every generated vertex carries a [`Role`] and its name is derived from
//! that role, so names like `b''@5` or `path@3/c/4` can be read back.

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

use crate::instance::{Instance, InstanceError, Ordering, RawInstance};

mod fixtures;
mod umpbe4;
mod upbe3;

pub use fixtures::{chain_fixture, triple_fixture, umpbe4_triple_fixture, ChainFixture, TripleFixture};
pub use umpbe4::{assemble_umpbe4, witness_umpbe4};
pub use upbe3::{assemble_upbe3, build_order_gadget, build_triple_gadget, witness_upbe3};

pub const RED: u32 = 1;
pub const BLUE: u32 = 2;
pub const GREEN: u32 = 3;
pub const YELLOW: u32 = 4;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BetweennessError {
    #[error("element name `{0}` is reserved for a gadget vertex")]
    ReservedName(String),
    #[error("duplicate element `{0}`")]
    DuplicateElement(String),
    #[error("element name `{0}` must be non-empty and avoid whitespace and the characters @ / * ' #")]
    BadElementName(String),
    #[error("triple {index} names unknown element `{name}`")]
    UnknownElement { index: usize, name: String },
    #[error("triple {0} repeats an element")]
    RepeatedInTriple(usize),
    #[error("triples need at least 3 elements, got {0}")]
    TooFewElements(usize),
}

/// Elements and ordered triples. Triples refer to elements by index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BetweennessInstance {
    elements: Vec<String>,
    triples: Vec<[usize; 3]>,
}

/// Names of fixed gadget vertices, which share the `name@gadget` form with
/// element copies.
pub const RESERVED_NAMES: [&str; 7] = ["l", "alpha", "omega", "h", "g", "r", "s"];

fn valid_element_name(name: &str) -> bool {
    !name.is_empty() && !name.chars().any(|c| c.is_whitespace() || "@/*'#".contains(c))
}

impl BetweennessInstance {
    pub fn new<S: AsRef<str>>(elements: &[S], triples: &[[S; 3]]) -> Result<Self, BetweennessError> {
        let elements: Vec<String> = elements.iter().map(|e| e.as_ref().to_string()).collect();
        let mut index = HashMap::new();
        for (i, e) in elements.iter().enumerate() {
            if !valid_element_name(e) {
                return Err(BetweennessError::BadElementName(e.clone()));
            }
            if RESERVED_NAMES.contains(&e.as_str()) {
                return Err(BetweennessError::ReservedName(e.clone()));
            }
            if index.insert(e.as_str(), i).is_some() {
                return Err(BetweennessError::DuplicateElement(e.clone()));
            }
        }
        if !triples.is_empty() && elements.len() < 3 {
            return Err(BetweennessError::TooFewElements(elements.len()));
        }
        let mut resolved = Vec::with_capacity(triples.len());
        for (t, triple) in triples.iter().enumerate() {
            let mut ids = [0; 3];
            for (slot, name) in ids.iter_mut().zip(triple) {
                let name = name.as_ref();
                *slot = *index.get(name).ok_or_else(|| BetweennessError::UnknownElement {
                    index: t,
                    name: name.to_string(),
                })?;
            }
            if ids[0] == ids[1] || ids[1] == ids[2] || ids[0] == ids[2] {
                return Err(BetweennessError::RepeatedInTriple(t));
            }
            resolved.push(ids);
        }
        Ok(BetweennessInstance {
            elements,
            triples: resolved,
        })
    }

    pub fn elements(&self) -> &[String] {
        &self.elements
    }

    pub fn triples(&self) -> &[[usize; 3]] {
        &self.triples
    }

    pub fn element(&self, name: &str) -> Option<usize> {
        self.elements.iter().position(|e| e == name)
    }

    pub fn n(&self) -> usize {
        self.elements.len()
    }

    pub fn m(&self) -> usize {
        self.triples.len()
    }
}

/// A permutation of element indices, first element first.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ElementOrdering(Vec<usize>);

impl ElementOrdering {
    pub fn new(order: Vec<usize>) -> Option<Self> {
        let mut seen = vec![false; order.len()];
        for &e in &order {
            if e >= order.len() || std::mem::replace(&mut seen[e], true) {
                return None;
            }
        }
        Some(ElementOrdering(order))
    }

    pub fn from_names<S: AsRef<str>>(bw: &BetweennessInstance, names: &[S]) -> Option<Self> {
        let order = names
            .iter()
            .map(|n| bw.element(n.as_ref()))
            .collect::<Option<Vec<_>>>()?;
        if order.len() != bw.n() {
            return None;
        }
        Self::new(order)
    }

    pub fn order(&self) -> &[usize] {
        &self.0
    }

    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.0.len()];
        for (i, &e) in self.0.iter().enumerate() {
            pos[e] = i;
        }
        pos
    }

    pub fn reversed(&self) -> ElementOrdering {
        ElementOrdering(self.0.iter().rev().copied().collect())
    }

    pub fn names<'a>(&self, bw: &'a BetweennessInstance) -> Vec<&'a str> {
        self.0.iter().map(|&e| bw.elements[e].as_str()).collect()
    }
}

/// True iff every triple has its middle element strictly between the others.
pub fn eval_betweenness(bw: &BetweennessInstance, phi: &ElementOrdering) -> bool {
    first_violated(bw, phi).is_none()
}

fn first_violated(bw: &BetweennessInstance, phi: &ElementOrdering) -> Option<usize> {
    let pos = phi.positions();
    bw.triples.iter().position(|&[a, b, c]| {
        let (a, b, c) = (pos[a], pos[b], pos[c]);
        !((a < b && b < c) || (c < b && b < a))
    })
}

/// The lexicographically first satisfying ordering, by brute force.
pub fn solve_betweenness_bruteforce(bw: &BetweennessInstance) -> Option<ElementOrdering> {
    let n = bw.n();
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        let phi = ElementOrdering(perm.clone());
        if eval_betweenness(bw, &phi) {
            return Some(phi);
        }
        if !next_permutation(&mut perm) {
            return None;
        }
    }
}

fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let Some(i) = (0..v.len() - 1).rev().find(|&i| v[i] < v[i + 1]) else {
        return false;
    };
    let j = (i + 1..v.len()).rev().find(|&j| v[j] > v[i]).expect("v[i+1] qualifies");
    v.swap(i, j);
    v[i + 1..].reverse();
    true
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReductionError {
    #[error("the reduction needs at least one triple")]
    NoTriples,
    #[error("the element ordering does not satisfy triple {triple}")]
    WitnessPreconditionViolated { triple: usize },
    #[error("the element ordering is not a permutation of the {0} elements")]
    NotAPermutation(usize),
}

/// What a generated vertex stands for. Gadget indices run from 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Role {
    /// Copy of element `elem` in order gadget `gadget`.
    Copy {
        elem: usize,
        gadget: usize,
    },
    Prime {
        elem: usize,
        gadget: usize,
    },
    DoublePrime {
        elem: usize,
        gadget: usize,
    },
    /// Leaf of a 4-page order gadget's tree, where the path for `elem` starts.
    Leaf {
        elem: usize,
        gadget: usize,
    },
    L(usize),
    Alpha(usize),
    Omega(usize),
    H(usize),
    /// Second sink of a 4-page triple gadget.
    G(usize),
    /// Root of an order gadget.
    R(usize),
    S,
    /// Interior vertex `step` (from 1) of the path for `elem`.
    Path {
        gadget: usize,
        elem: usize,
        step: usize,
    },
    /// Internal tree node: depth from the root and index within the level.
    Tree {
        gadget: usize,
        depth: usize,
        index: usize,
    },
}

impl Role {
    pub fn name(&self, bw: &BetweennessInstance) -> String {
        let el = |e: usize| bw.elements[e].as_str();
        match *self {
            Role::Copy { elem, gadget } => format!("{}@{gadget}", el(elem)),
            Role::Prime { elem, gadget } => format!("{}'@{gadget}", el(elem)),
            Role::DoublePrime { elem, gadget } => format!("{}''@{gadget}", el(elem)),
            Role::Leaf { elem, gadget } => format!("{}*@{gadget}", el(elem)),
            Role::L(i) => format!("l@{i}"),
            Role::Alpha(i) => format!("alpha@{i}"),
            Role::Omega(i) => format!("omega@{i}"),
            Role::H(i) => format!("h@{i}"),
            Role::G(i) => format!("g@{i}"),
            Role::R(i) => format!("r@{i}"),
            Role::S => "s".to_string(),
            Role::Path { gadget, elem, step } => format!("path@{gadget}/{}/{step}", el(elem)),
            Role::Tree { gadget, depth, index } => format!("tree@{gadget}/{depth}.{index}"),
        }
    }
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Role::Copy { elem, gadget } => write!(f, "copy of element {elem} in gadget {gadget}"),
            Role::Prime { elem, gadget } => write!(f, "prime of element {elem} in gadget {gadget}"),
            Role::DoublePrime { elem, gadget } => write!(f, "double prime of element {elem} in gadget {gadget}"),
            Role::Leaf { elem, gadget } => write!(f, "tree leaf of element {elem} in gadget {gadget}"),
            Role::L(i) => write!(f, "triple gadget {i} source l"),
            Role::Alpha(i) => write!(f, "triple gadget {i} alpha"),
            Role::Omega(i) => write!(f, "triple gadget {i} omega"),
            Role::H(i) => write!(f, "triple gadget {i} sink h"),
            Role::G(i) => write!(f, "triple gadget {i} sink g"),
            Role::R(i) => write!(f, "order gadget {i} root r"),
            Role::S => write!(f, "connector s"),
            Role::Path { gadget, elem, step } => {
                write!(f, "step {step} of the path for element {elem} in gadget {gadget}")
            }
            Role::Tree { gadget, depth, index } => {
                write!(f, "tree node {index} at depth {depth} in gadget {gadget}")
            }
        }
    }
}

/// An instance with the role of every vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledInstance {
    pub instance: Instance,
    /// `roles[v]` is the role of vertex `v`.
    pub roles: Vec<Role>,
    index: HashMap<Role, usize>,
}

impl LabeledInstance {
    pub fn vertex(&self, role: Role) -> Option<usize> {
        self.index.get(&role).copied()
    }

    pub fn role(&self, v: usize) -> Role {
        self.roles[v]
    }
}

/// Accumulates vertices with roles and coloured edges between roles.
pub(crate) struct Builder<'a> {
    bw: &'a BetweennessInstance,
    raw: RawInstance,
    roles: Vec<Role>,
    index: HashMap<Role, usize>,
}

impl<'a> Builder<'a> {
    pub(crate) fn new(bw: &'a BetweennessInstance, pages: u32) -> Self {
        Builder {
            bw,
            raw: RawInstance::new(pages),
            roles: Vec::new(),
            index: HashMap::new(),
        }
    }

    pub(crate) fn vertex(&mut self, role: Role) {
        let fresh = self.index.insert(role, self.roles.len()).is_none();
        debug_assert!(fresh, "role added twice: {role:?}");
        self.raw.add_vertex(role.name(self.bw));
        self.roles.push(role);
    }

    pub(crate) fn edge(&mut self, src: Role, dst: Role, page: u32) {
        debug_assert!(self.index.contains_key(&src) && self.index.contains_key(&dst));
        self.raw.add_edge(src.name(self.bw), dst.name(self.bw), page);
    }

    pub(crate) fn finish(self) -> Result<LabeledInstance, InstanceError> {
        Ok(LabeledInstance {
            instance: self.raw.check()?,
            roles: self.roles,
            index: self.index,
        })
    }
}

/// Turns a sequence of roles into an ordering of `lab`'s vertices.
pub(crate) fn ordering_of(lab: &LabeledInstance, seq: &[Role]) -> Ordering {
    let idx = seq
        .iter()
        .map(|r| {
            lab.vertex(*r)
                .unwrap_or_else(|| panic!("layout names a missing role {r:?}"))
        })
        .collect();
    Ordering::from_indices(idx).expect("layout lists every vertex once")
}

pub(crate) fn check_witness_input(bw: &BetweennessInstance, phi: &ElementOrdering) -> Result<(), ReductionError> {
    if phi.0.len() != bw.n() {
        return Err(ReductionError::NotAPermutation(bw.n()));
    }
    if let Some(triple) = first_violated(bw, phi) {
        return Err(ReductionError::WitnessPreconditionViolated { triple });
    }
    Ok(())
}

/// Reads the element order off the element copies of one order gadget: the
/// first even one if there is one, otherwise gadget 1, whose copies come in
/// reverse.
pub fn extract_phi(lab: &LabeledInstance, ord: &Ordering, n: usize) -> ElementOrdering {
    if lab.vertex(Role::Copy { elem: 0, gadget: 2 }).is_some() {
        extract_copy_order(lab, ord, n, 2)
    } else {
        extract_copy_order(lab, ord, n, 1).reversed()
    }
}

/// The order in which `ord` places the copies of all elements in `gadget`.
pub fn extract_copy_order(lab: &LabeledInstance, ord: &Ordering, n: usize, gadget: usize) -> ElementOrdering {
    let mut elems: Vec<usize> = (0..n).collect();
    elems.sort_by_key(|&elem| {
        let v = lab
            .vertex(Role::Copy { elem, gadget })
            .expect("every element has a copy in each order gadget");
        ord.rank(v)
    });
    ElementOrdering(elems)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bw(elements: &[&str], triples: &[[&str; 3]]) -> BetweennessInstance {
        BetweennessInstance::new(elements, triples).unwrap()
    }

    #[test]
    fn eval_examples() {
        let b = bw(&["a", "b", "c"], &[["a", "b", "c"]]);
        let phi = |names: &[&str]| ElementOrdering::from_names(&b, names).unwrap();
        assert!(eval_betweenness(&b, &phi(&["a", "b", "c"])));
        assert!(eval_betweenness(&b, &phi(&["c", "b", "a"])));
        assert!(!eval_betweenness(&b, &phi(&["b", "a", "c"])));
    }

    #[test]
    fn brute_force_examples() {
        let b = bw(
            &["a", "b", "c", "d"],
            &[["a", "b", "c"], ["b", "c", "d"], ["d", "b", "a"]],
        );
        let phi = solve_betweenness_bruteforce(&b).unwrap();
        assert_eq!(phi.names(&b), ["a", "b", "c", "d"]);
        let b = bw(&["a", "b", "c"], &[["a", "b", "c"], ["b", "a", "c"]]);
        assert_eq!(solve_betweenness_bruteforce(&b), None);
        let b = bw(&["z", "y"], &[]);
        assert_eq!(solve_betweenness_bruteforce(&b).unwrap().order(), [0, 1]);
    }

    #[test]
    fn instance_validation() {
        assert!(matches!(
            BetweennessInstance::new(&["a", "a", "b"], &[]),
            Err(BetweennessError::DuplicateElement(_))
        ));
        assert!(matches!(
            BetweennessInstance::new(&["a", "b'"], &[]),
            Err(BetweennessError::BadElementName(_))
        ));
        assert!(matches!(
            BetweennessInstance::new(&["a", "g", "c"], &[]),
            Err(BetweennessError::ReservedName(_))
        ));
        assert!(matches!(
            BetweennessInstance::new(&["a", "b", "c"], &[["a", "b", "a"]]),
            Err(BetweennessError::RepeatedInTriple(0))
        ));
        assert!(matches!(
            BetweennessInstance::new(&["a", "b", "c"], &[["a", "b", "d"]]),
            Err(BetweennessError::UnknownElement { .. })
        ));
        assert!(matches!(
            BetweennessInstance::new(&["a", "b"], &[["a", "b", "a"]]),
            Err(BetweennessError::TooFewElements(2))
        ));
    }

    #[test]
    fn role_names() {
        let b = bw(&["a", "b", "c"], &[]);
        assert_eq!(Role::DoublePrime { elem: 1, gadget: 5 }.name(&b), "b''@5");
        assert_eq!(
            Role::Path {
                gadget: 5,
                elem: 2,
                step: 4
            }
            .name(&b),
            "path@5/c/4"
        );
        assert_eq!(Role::R(3).name(&b), "r@3");
    }
}
