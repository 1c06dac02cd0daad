//! The four-page reduction in which every page is a matching.
//!
//! Colours come in two groups, green/blue and yellow/red, with blue and red
//! as the plain colours and green and yellow as the special ones. An order
//! gadget is a tree from its root down to one leaf per element, followed by
//! one path of `n` edges from each leaf to the element's copy. Consecutive
//! levels use alternating groups, so every vertex meets each colour at most
//! once. Within a level all edges are plain except one: the path for element
//! `t` uses the special colour on its `t`-th edge, which is what lets that
//! path change place while every other path is forced to nest.

use super::{
    check_witness_input, ordering_of, BetweennessInstance, Builder, ElementOrdering, LabeledInstance, ReductionError,
    Role, BLUE, GREEN, RED, YELLOW,
};
use crate::instance::Ordering;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Group {
    GreenBlue,
    YellowRed,
}

impl Group {
    fn plain(self) -> u32 {
        match self {
            Group::GreenBlue => BLUE,
            Group::YellowRed => RED,
        }
    }

    fn special(self) -> u32 {
        match self {
            Group::GreenBlue => GREEN,
            Group::YellowRed => YELLOW,
        }
    }
}

/// Group of path edge `e` (from 1 at the leaf); the last edge is always red.
fn path_group(n: usize, e: usize) -> Group {
    if (n - e).is_multiple_of(2) {
        Group::YellowRed
    } else {
        Group::GreenBlue
    }
}

fn path_color(n: usize, elem: usize, e: usize) -> u32 {
    let g = path_group(n, e);
    if e == elem + 1 && e < n {
        g.special()
    } else {
        g.plain()
    }
}

/// Shape of an order gadget's tree. Level `d` has `min(2^d, n)` nodes; the
/// first nodes of a level get two children and the rest one.
struct Tree {
    odd: bool,
    depth: usize,
    sizes: Vec<usize>,
}

impl Tree {
    fn new(n: usize, odd: bool) -> Tree {
        let mut depth = 1;
        while (1usize << depth) < n {
            depth += 1;
        }
        let mut t = Tree {
            odd,
            depth,
            sizes: Vec::new(),
        };
        // Leaf edges and first path edges must use different groups.
        if t.group(depth) == path_group(n, 1) {
            t.depth += 1;
        }
        t.sizes = (0..=t.depth).map(|d| (1usize << d.min(63)).min(n)).collect();
        t
    }

    /// Group of the edges between depth `d - 1` and depth `d`. The odd root
    /// takes blue and green from its triple gadget; the even root sends red
    /// and yellow to its neighbours.
    fn group(&self, d: usize) -> Group {
        match (self.odd, d % 2 == 1) {
            (true, true) | (false, false) => Group::YellowRed,
            _ => Group::GreenBlue,
        }
    }

    /// Children of node `k` at depth `d`, as indices at depth `d + 1`.
    fn children(&self, d: usize, k: usize) -> std::ops::Range<usize> {
        let binary = self.sizes[d + 1] - self.sizes[d];
        let start = k + k.min(binary);
        let count = if k < binary { 2 } else { 1 };
        start..start + count
    }

    fn role(&self, gadget: usize, d: usize, k: usize) -> Role {
        if d == 0 {
            Role::R(gadget)
        } else if d == self.depth {
            Role::Leaf { elem: k, gadget }
        } else {
            Role::Tree {
                gadget,
                depth: d,
                index: k,
            }
        }
    }

    /// Left-to-right placement of each level, root first, such that tree
    /// edges between two levels nest.
    fn layout(&self) -> Vec<Vec<usize>> {
        let mut levels = vec![vec![0]];
        for d in 0..self.depth {
            let next = levels[d].iter().rev().flat_map(|&k| self.children(d, k)).collect();
            levels.push(next);
        }
        levels
    }
}

fn add_triple_gadget(b: &mut Builder, i: usize, [a, bb, c]: [usize; 3]) {
    for role in [Role::L(i), Role::Alpha(i), Role::Omega(i)] {
        b.vertex(role);
    }
    let p = |elem| Role::Prime { elem, gadget: i };
    for elem in [a, bb, c] {
        b.vertex(p(elem));
    }
    b.vertex(Role::H(i));
    b.vertex(Role::G(i));
    b.edge(Role::L(i), Role::Alpha(i), BLUE);
    b.edge(Role::L(i), Role::Omega(i), GREEN);
    b.edge(Role::Alpha(i), p(a), GREEN);
    b.edge(Role::Omega(i), p(c), RED);
    b.edge(p(a), Role::H(i), RED);
    b.edge(p(bb), Role::H(i), YELLOW);
    b.edge(p(bb), Role::G(i), RED);
    b.edge(p(c), Role::G(i), YELLOW);
}

/// Root, tree, leaves, paths and copies of order gadget `j`. Odd gadgets
/// point from the root towards the copies, even ones the other way.
fn add_order_gadget(b: &mut Builder, j: usize, n: usize) {
    let odd = j % 2 == 1;
    let tree = Tree::new(n, odd);
    let edge = |b: &mut Builder, from: Role, to: Role, color: u32| {
        if odd {
            b.edge(from, to, color);
        } else {
            b.edge(to, from, color);
        }
    };
    for d in 0..=tree.depth {
        for k in 0..tree.sizes[d] {
            b.vertex(tree.role(j, d, k));
        }
    }
    for d in 0..tree.depth {
        let group = tree.group(d + 1);
        for k in 0..tree.sizes[d] {
            for (c, child) in tree.children(d, k).enumerate() {
                let color = if c == 0 { group.plain() } else { group.special() };
                edge(b, tree.role(j, d, k), tree.role(j, d + 1, child), color);
            }
        }
    }
    for elem in 0..n {
        for step in 1..n {
            b.vertex(Role::Path { gadget: j, elem, step });
        }
        b.vertex(Role::Copy { elem, gadget: j });
        let mut prev = Role::Leaf { elem, gadget: j };
        for e in 1..=n {
            let next = if e < n {
                Role::Path {
                    gadget: j,
                    elem,
                    step: e,
                }
            } else {
                Role::Copy { elem, gadget: j }
            };
            edge(b, prev, next, path_color(n, elem, e));
            prev = next;
        }
    }
}

fn triple_of(bw: &BetweennessInstance, i: usize) -> [usize; 3] {
    bw.triples()[i.div_ceil(2) - 1]
}

/// The four-page instance. Every page is a matching.
pub fn assemble_umpbe4(bw: &BetweennessInstance) -> Result<LabeledInstance, ReductionError> {
    let (n, m) = (bw.n(), bw.m());
    if m == 0 {
        return Err(ReductionError::NoTriples);
    }
    let top = 2 * m - 1;
    let mut b = Builder::new(bw, 4);
    for j in 1..=top {
        if j % 2 == 1 {
            add_triple_gadget(&mut b, j, triple_of(bw, j));
        }
        add_order_gadget(&mut b, j, n);
    }
    for i in (1..=top).step_by(2) {
        for elem in triple_of(bw, i) {
            b.edge(Role::Prime { elem, gadget: i }, Role::Copy { elem, gadget: i }, BLUE);
        }
        b.edge(Role::H(i), Role::R(i), BLUE);
        b.edge(Role::G(i), Role::R(i), GREEN);
    }
    for j in (2..top).step_by(2) {
        b.edge(Role::R(j), Role::L(j - 1), RED);
        b.edge(Role::R(j), Role::L(j + 1), YELLOW);
        for elem in 0..n {
            b.edge(
                Role::Copy { elem, gadget: j },
                Role::Copy { elem, gadget: j - 1 },
                GREEN,
            );
            b.edge(
                Role::Copy { elem, gadget: j },
                Role::Copy { elem, gadget: j + 1 },
                YELLOW,
            );
        }
    }
    Ok(b.finish().expect("the assembled graph is a simple DAG"))
}

/// Places an order gadget with its root first and its copies last, in
/// `target` order.
///
/// Each path layer is the previous one reversed, except that the path whose
/// special edge lies between the two layers may go anywhere. Seen without
/// the reversals, layer `t` moves path `t` into its place relative to the
/// paths already moved and the last path, which never moves: one step of an
/// insertion sort.
fn order_layout(gadget: usize, n: usize, odd: bool, target: &[usize], out: &mut Vec<Role>) {
    let tree = Tree::new(n, odd);
    let levels = tree.layout();
    for (d, level) in levels.iter().enumerate() {
        out.extend(level.iter().map(|&k| tree.role(gadget, d, k)));
    }

    let goal_pos = {
        let mut p = vec![0; n];
        for (i, &x) in target.iter().enumerate() {
            p[x] = i;
        }
        p
    };
    let mut normal: Vec<usize> = levels[tree.depth].clone();
    if n % 2 == 1 {
        normal.reverse();
    }
    let mut sorted = vec![false; n];
    sorted[n - 1] = true;
    for t in 1..n {
        let mover = t - 1;
        normal.retain(|&x| x != mover);
        let after = normal
            .iter()
            .rposition(|&x| sorted[x] && goal_pos[x] < goal_pos[mover])
            .map(|p| p + 1);
        let at = after.unwrap_or_else(|| normal.iter().position(|&x| sorted[x]).unwrap_or(0));
        normal.insert(at, mover);
        sorted[mover] = true;

        let layer: Vec<Role> = normal
            .iter()
            .map(|&elem| Role::Path { gadget, elem, step: t })
            .collect();
        if (n - t).is_multiple_of(2) {
            out.extend(layer);
        } else {
            out.extend(layer.into_iter().rev());
        }
    }
    debug_assert_eq!(normal, target);
    out.extend(target.iter().map(|&elem| Role::Copy { elem, gadget }));
}

/// Builds a valid ordering of [`assemble_umpbe4`]'s instance from a
/// satisfying element ordering.
///
/// Even gadgets come first in increasing order, each laid out mirrored so its
/// copies lead in `phi` order. The odd gadgets follow from the last to the
/// first, each as its triple gadget and then its order gadget ending in the
/// copies in reverse `phi` order.
pub fn witness_umpbe4(bw: &BetweennessInstance, phi: &ElementOrdering) -> Result<Ordering, ReductionError> {
    check_witness_input(bw, phi)?;
    let lab = assemble_umpbe4(bw)?;
    let (n, m) = (bw.n(), bw.m());
    let top = 2 * m - 1;
    let backward: Vec<usize> = phi.order().iter().rev().copied().collect();

    let mut seq = Vec::with_capacity(lab.instance.vertex_count());
    for j in (2..top).step_by(2) {
        let mut gadget = Vec::new();
        order_layout(j, n, false, &backward, &mut gadget);
        seq.extend(gadget.into_iter().rev());
    }
    for i in (1..=top).rev().step_by(2) {
        let [a, bb, c] = triple_of(bw, i);
        let c_first = backward.iter().position(|&x| x == c) < backward.iter().position(|&x| x == a);
        let p = |elem| Role::Prime { elem, gadget: i };
        if c_first {
            seq.extend([
                Role::L(i),
                Role::Alpha(i),
                p(a),
                p(bb),
                Role::Omega(i),
                p(c),
                Role::G(i),
                Role::H(i),
            ]);
        } else {
            seq.extend([
                Role::L(i),
                Role::Omega(i),
                Role::Alpha(i),
                p(c),
                p(bb),
                p(a),
                Role::H(i),
                Role::G(i),
            ]);
        }
        order_layout(i, n, true, &backward, &mut seq);
    }
    Ok(ordering_of(&lab, &seq))
}
