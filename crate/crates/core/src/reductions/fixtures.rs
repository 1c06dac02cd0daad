//! Small instances that isolate one gadget so its behaviour can be checked
//! by enumerating every valid ordering.
//!
//! Edges that only enforce precedence go on pages of their own, where they
//! can never cross anything.

use super::{BLUE, GREEN, RED, YELLOW};
use crate::instance::{Instance, Ordering, RawInstance};

/// A triple gadget with one sink per element.
#[derive(Debug, Clone)]
pub struct TripleFixture {
    pub instance: Instance,
    /// Sinks of `a`, `b` and `c`.
    pub sinks: [usize; 3],
}

impl TripleFixture {
    /// The elements (0 for `a`, 1 for `b`, 2 for `c`) in the order `ord`
    /// places their sinks.
    pub fn sink_order(&self, ord: &Ordering) -> [usize; 3] {
        let mut out = [0, 1, 2];
        out.sort_by_key(|&e| ord.rank(self.sinks[e]));
        out
    }
}

/// Three consecutive order gadgets with nothing but their copies, the middle
/// one even.
#[derive(Debug, Clone)]
pub struct ChainFixture {
    pub instance: Instance,
    /// `copies[g][e]` is the copy of element `e` in the `g`-th gadget.
    pub copies: [Vec<usize>; 3],
}

impl ChainFixture {
    pub fn copy_order(&self, ord: &Ordering, gadget: usize) -> Vec<usize> {
        let mut out: Vec<usize> = (0..self.copies[gadget].len()).collect();
        out.sort_by_key(|&e| ord.rank(self.copies[gadget][e]));
        out
    }
}

const ELEMS: [&str; 3] = ["a", "b", "c"];

fn finish_triple(mut raw: RawInstance, source: &str, sinks: [String; 3]) -> TripleFixture {
    let base = raw.pages;
    raw.pages += 3;
    for (p, s) in sinks.iter().enumerate() {
        raw.add_edge(source, s.as_str(), base + 1 + p as u32);
    }
    let instance = raw.check().expect("fixture is a simple DAG");
    let sinks = sinks.map(|s| instance.vertex(&s).expect("sink exists"));
    TripleFixture { instance, sinks }
}

/// The three-page triple gadget with red edges from each prime to a sink,
/// and `h` before every sink.
pub fn triple_fixture() -> TripleFixture {
    let mut raw = RawInstance::new(3);
    for v in ["l", "alpha", "omega", "a'", "b'", "c'", "h", "a''", "b''", "c''"] {
        raw.add_vertex(v);
    }
    raw.add_edge("l", "alpha", RED);
    raw.add_edge("l", "omega", RED);
    raw.add_edge("alpha", "a'", BLUE);
    raw.add_edge("alpha", "b'", BLUE);
    raw.add_edge("omega", "b'", BLUE);
    raw.add_edge("omega", "c'", BLUE);
    for x in ELEMS {
        raw.add_edge(format!("{x}'"), "h", GREEN);
        raw.add_edge(format!("{x}'"), format!("{x}''"), RED);
    }
    finish_triple(raw, "h", ELEMS.map(|x| format!("{x}''")))
}

/// The four-page triple gadget with blue edges from each prime to a sink,
/// and `r` before every sink.
pub fn umpbe4_triple_fixture() -> TripleFixture {
    let mut raw = RawInstance::new(4);
    for v in ["l", "alpha", "omega", "a'", "b'", "c'", "h", "g", "r", "a", "b", "c"] {
        raw.add_vertex(v);
    }
    raw.add_edge("l", "alpha", BLUE);
    raw.add_edge("l", "omega", GREEN);
    raw.add_edge("alpha", "a'", GREEN);
    raw.add_edge("omega", "c'", RED);
    raw.add_edge("a'", "h", RED);
    raw.add_edge("b'", "h", YELLOW);
    raw.add_edge("b'", "g", RED);
    raw.add_edge("c'", "g", YELLOW);
    raw.add_edge("h", "r", BLUE);
    raw.add_edge("g", "r", GREEN);
    for x in ELEMS {
        raw.add_edge(format!("{x}'"), x, BLUE);
    }
    finish_triple(raw, "r", ELEMS.map(String::from))
}

/// Copies of `n` elements in three consecutive gadgets, the middle one even,
/// with the three-page edges between them. Each root precedes the copies of
/// the outer gadgets, and the middle root precedes the outer roots.
pub fn chain_fixture(n: usize) -> ChainFixture {
    let names: Vec<String> = (0..n).map(|e| format!("x{e}")).collect();
    let copy = |e: usize, g: usize| format!("{}@{g}", names[e]);
    let mut raw = RawInstance::new(3);
    for g in 0..3 {
        raw.add_vertex(format!("r@{g}"));
        for e in 0..n {
            raw.add_vertex(copy(e, g));
        }
    }
    for e in 0..n {
        raw.add_edge(copy(e, 1), "r@1", RED);
        raw.add_edge(copy(e, 1), copy(e, 0), BLUE);
        raw.add_edge(copy(e, 1), copy(e, 2), GREEN);
    }
    let mut page = raw.pages;
    let mut precede = |raw: &mut RawInstance, a: String, b: String| {
        page += 1;
        raw.pages = page;
        raw.add_edge(a, b, page);
    };
    for g in [0, 2] {
        precede(&mut raw, "r@1".into(), format!("r@{g}"));
        for e in 0..n {
            precede(&mut raw, format!("r@{g}"), copy(e, g));
        }
    }
    let instance = raw.check().expect("fixture is a simple DAG");
    let copies = [0, 1, 2].map(|g| (0..n).map(|e| instance.vertex(&copy(e, g)).unwrap()).collect());
    ChainFixture { instance, copies }
}
