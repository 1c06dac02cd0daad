//! The three-page reduction.
//!
//! Odd gadget `i` pairs a triple gadget for triple `(i + 1) / 2` with an
//! order gadget whose element copies can only appear in an order that
//! satisfies the triple. Even order gadgets sit between consecutive odd ones
//! and copy the element order across, reversed, so all odd gadgets agree.

use super::{
    check_witness_input, ordering_of, BetweennessInstance, Builder, ElementOrdering, LabeledInstance, ReductionError,
    Role, BLUE, GREEN, RED,
};
use crate::instance::{InstanceError, Ordering};

const PATH_EDGES: usize = 7;

fn add_triple_gadget(b: &mut Builder, i: usize, [a, bb, c]: [usize; 3]) {
    b.vertex(Role::L(i));
    b.vertex(Role::Alpha(i));
    b.vertex(Role::Omega(i));
    for elem in [a, bb, c] {
        b.vertex(Role::Prime { elem, gadget: i });
    }
    b.vertex(Role::H(i));
    let p = |elem| Role::Prime { elem, gadget: i };
    b.edge(Role::L(i), Role::Alpha(i), RED);
    b.edge(Role::L(i), Role::Omega(i), RED);
    b.edge(Role::Alpha(i), p(a), BLUE);
    b.edge(Role::Alpha(i), p(bb), BLUE);
    b.edge(Role::Omega(i), p(bb), BLUE);
    b.edge(Role::Omega(i), p(c), BLUE);
    for elem in [a, bb, c] {
        b.edge(p(elem), Role::H(i), GREEN);
    }
}

fn path_target(triple: Option<[usize; 3]>, elem: usize, gadget: usize) -> Role {
    if triple.is_some_and(|t| t.contains(&elem)) {
        Role::DoublePrime { elem, gadget }
    } else {
        Role::Copy { elem, gadget }
    }
}

fn add_order_gadget(b: &mut Builder, j: usize, n: usize, triple: Option<[usize; 3]>) {
    b.vertex(Role::R(j));
    for elem in 0..n {
        b.vertex(Role::Copy { elem, gadget: j });
    }
    let Some(t) = triple else {
        for elem in 0..n {
            b.edge(Role::Copy { elem, gadget: j }, Role::R(j), RED);
        }
        return;
    };
    for elem in t {
        b.vertex(Role::DoublePrime { elem, gadget: j });
        b.edge(
            Role::DoublePrime { elem, gadget: j },
            Role::Copy { elem, gadget: j },
            BLUE,
        );
    }
    for elem in 0..n {
        for step in 1..PATH_EDGES {
            b.vertex(Role::Path { gadget: j, elem, step });
        }
        let mut prev = Role::R(j);
        for step in 1..=PATH_EDGES {
            let next = if step < PATH_EDGES {
                Role::Path { gadget: j, elem, step }
            } else {
                path_target(triple, elem, j)
            };
            b.edge(prev, next, if step % 2 == 1 { RED } else { GREEN });
            prev = next;
        }
    }
}

fn triple_of(bw: &BetweennessInstance, i: usize) -> [usize; 3] {
    bw.triples()[i.div_ceil(2) - 1]
}

/// The triple gadget of odd gadget `i` on its own: 7 vertices, 9 edges.
pub fn build_triple_gadget(bw: &BetweennessInstance, i: usize) -> Result<LabeledInstance, InstanceError> {
    assert!(
        i % 2 == 1 && i.div_ceil(2) <= bw.m(),
        "triple gadgets have odd indices up to 2m-1"
    );
    let mut b = Builder::new(bw, 3);
    add_triple_gadget(&mut b, i, triple_of(bw, i));
    b.finish()
}

/// Order gadget `j` on its own. Odd gadgets carry triple `(j + 1) / 2`.
pub fn build_order_gadget(bw: &BetweennessInstance, j: usize) -> Result<LabeledInstance, InstanceError> {
    let triple = (j % 2 == 1).then(|| triple_of(bw, j));
    let mut b = Builder::new(bw, 3);
    add_order_gadget(&mut b, j, bw.n(), triple);
    b.finish()
}

/// The full three-page instance: `8mn + 12m - n` vertices.
pub fn assemble_upbe3(bw: &BetweennessInstance) -> Result<LabeledInstance, ReductionError> {
    let (n, m) = (bw.n(), bw.m());
    if m == 0 {
        return Err(ReductionError::NoTriples);
    }
    let top = 2 * m - 1;
    let mut b = Builder::new(bw, 3);
    for j in 1..=top {
        if j % 2 == 1 {
            add_triple_gadget(&mut b, j, triple_of(bw, j));
            add_order_gadget(&mut b, j, n, Some(triple_of(bw, j)));
        } else {
            add_order_gadget(&mut b, j, n, None);
        }
    }
    b.vertex(Role::S);

    let copy = |elem, gadget| Role::Copy { elem, gadget };
    for i in (1..=top).step_by(2) {
        for elem in triple_of(bw, i) {
            b.edge(
                Role::Prime { elem, gadget: i },
                Role::DoublePrime { elem, gadget: i },
                RED,
            );
        }
        b.edge(Role::H(i), Role::R(i), RED);
    }
    for j in (2..top).step_by(2) {
        b.edge(Role::R(j), Role::L(j - 1), RED);
        b.edge(Role::R(j), Role::L(j + 1), RED);
        for elem in 0..n {
            b.edge(copy(elem, j), copy(elem, j - 1), BLUE);
            b.edge(copy(elem, j), copy(elem, j + 1), GREEN);
        }
    }
    for elem in 0..n {
        b.edge(Role::S, copy(elem, top), BLUE);
    }
    if m >= 2 {
        b.edge(Role::R(top - 1), Role::S, BLUE);
    }
    b.edge(Role::S, Role::L(top), BLUE);
    Ok(b.finish().expect("the assembled graph is a simple DAG"))
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Gate {
    /// The double-primed vertex of a triple element.
    D(usize),
    /// An element copy.
    E(usize),
}

/// Lays out odd order gadget `i` so that its copies appear in `order`.
///
/// The copies, preceded by the double primes of triple elements, form a
/// row of gates. The three double primes split the row into seven
/// segments alternating between runs of copies and single double primes.
/// Each path then moves one vertex past each segment: vertex `t` waits in
/// the slot right after segment `t - 1` until the path reaches the segment
/// holding its target, where the rest of the path bunches up right before
/// the target. Red path edges then only ever jump over copies and green
/// ones only over double primes.
fn odd_order_layout(i: usize, n: usize, triple: [usize; 3], order: &[usize], out: &mut Vec<Role>) {
    let mut gates = Vec::with_capacity(n + 3);
    for &x in order {
        if triple.contains(&x) {
            gates.push(Gate::D(x));
        }
        gates.push(Gate::E(x));
    }
    let mut seg_of_gate = Vec::with_capacity(gates.len());
    let mut ds = 0;
    for g in &gates {
        match g {
            Gate::D(_) => {
                seg_of_gate.push(2 * ds + 1);
                ds += 1;
            }
            Gate::E(_) => seg_of_gate.push(2 * ds),
        }
    }
    let target_gate = |elem: usize| {
        let want = if triple.contains(&elem) {
            Gate::D(elem)
        } else {
            Gate::E(elem)
        };
        gates.iter().position(|&g| g == want).expect("every element has a gate")
    };
    let target: Vec<usize> = (0..n).map(target_gate).collect();
    let seg: Vec<usize> = (0..n).map(|x| seg_of_gate[target[x]]).collect();

    // Slots, built from the last one back.
    let segments = PATH_EDGES;
    let mut slots: Vec<Vec<usize>> = vec![Vec::new(); segments - 1];
    for s in (0..segments - 1).rev() {
        let mut slot: Vec<usize> = if s + 1 < segments - 1 {
            slots[s + 1].iter().rev().copied().collect()
        } else {
            Vec::new()
        };
        let mut ending: Vec<usize> = (0..n).filter(|&x| seg[x] == s + 1).collect();
        ending.sort_by_key(|&x| std::cmp::Reverse(target[x]));
        slot.extend(ending);
        slots[s] = slot;
    }

    out.push(Role::R(i));
    let mut gate = 0;
    for s in 0..segments {
        while gate < gates.len() && seg_of_gate[gate] == s {
            if let Some(x) = (0..n).find(|&x| target[x] == gate) {
                for step in s + 1..PATH_EDGES {
                    out.push(Role::Path {
                        gadget: i,
                        elem: x,
                        step,
                    });
                }
            }
            out.push(match gates[gate] {
                Gate::D(elem) => Role::DoublePrime { elem, gadget: i },
                Gate::E(elem) => Role::Copy { elem, gadget: i },
            });
            gate += 1;
        }
        if s < segments - 1 {
            for &x in slots.get(s).into_iter().flatten() {
                out.push(Role::Path {
                    gadget: i,
                    elem: x,
                    step: s + 1,
                });
            }
        }
    }
}

/// Builds a valid ordering of [`assemble_upbe3`]'s instance from a
/// satisfying element ordering.
///
/// Even gadgets come first, each as its copies in `phi` order followed by
/// its root; then `s`; then the odd gadgets from the last to the first, each
/// as its triple gadget followed by its order gadget with copies in reverse
/// `phi` order.
pub fn witness_upbe3(bw: &BetweennessInstance, phi: &ElementOrdering) -> Result<Ordering, ReductionError> {
    check_witness_input(bw, phi)?;
    let lab = assemble_upbe3(bw)?;
    let (n, m) = (bw.n(), bw.m());
    let top = 2 * m - 1;
    let forward = phi.order();
    let backward: Vec<usize> = forward.iter().rev().copied().collect();

    let mut seq = Vec::with_capacity(lab.instance.vertex_count());
    for j in (2..top).step_by(2) {
        seq.extend(forward.iter().map(|&elem| Role::Copy { elem, gadget: j }));
        seq.push(Role::R(j));
    }
    seq.push(Role::S);
    for i in (1..=top).rev().step_by(2) {
        let triple = triple_of(bw, i);
        let in_triple: Vec<usize> = backward.iter().copied().filter(|x| triple.contains(x)).collect();
        let [a, _, c] = triple;
        let a_first = in_triple.iter().position(|&x| x == a) < in_triple.iter().position(|&x| x == c);
        seq.push(Role::L(i));
        if a_first {
            seq.extend([Role::Alpha(i), Role::Omega(i)]);
        } else {
            seq.extend([Role::Omega(i), Role::Alpha(i)]);
        }
        seq.extend(in_triple.iter().rev().map(|&elem| Role::Prime { elem, gadget: i }));
        seq.push(Role::H(i));
        odd_order_layout(i, n, triple, &backward, &mut seq);
    }
    Ok(ordering_of(&lab, &seq))
}
