//! Exact solver by backtracking over topological prefixes.
//!
//! The search grows an ordering one vertex at a time. A vertex may be
//! appended once all of its in-neighbours are placed, and candidates are
//! tried in insertion order, so the first complete valid ordering found is
//! the lexicographically smallest one.
//!
//! When an edge `(u, v)` is closed by appending `v`, the branch dies if the
//! edge crosses an already closed edge of its page, or if some open edge of
//! the same page starts strictly between `u` and `v`: that edge must end
//! after `v` and would cross `(u, v)`.
//!
//! Open edges of one page behave like a stack: if `(a, x)` and `(c, y)` are
//! open with `a` placed before `c` and `x != y`, then `y` must come before
//! `x`. More generally, any two edges of a page that are not yet closed
//! must nest or be disjoint, so once the known precedences fix three of the
//! four relations an interleaving needs, the fourth is forced the other way.
//! These derived precedences are propagated to a fixpoint after every step,
//! and the branch dies if they turn cyclic. Large instances only get the
//! stack rule, which is linear per step.
//!
//! Whenever placing a vertex splits the unplaced vertices into more weakly
//! connected parts, each part is solved on its own together with the prefix.
//! Deleting vertices only deletes constraints, so a part with no completion
//! means the prefix has none either.
//!
//! With pruning on, the future of a prefix depends only on which vertices
//! are placed and, per page, on the open edges listed in the order of their
//! sources. Prefixes proved dead are remembered under that signature.

use std::collections::HashSet;
use std::num::NonZeroU64;
use std::time::{Duration, Instant};

use crate::instance::{validate_ordering, Instance, Ordering};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchConfig {
    pub node_budget: Option<NonZeroU64>,
    pub time_budget: Option<Duration>,
    /// Enumeration stops after this many orderings.
    pub collect_limit: Option<usize>,
    /// Incremental crossing checks. Off means complete orderings are only
    /// checked once fully built.
    pub prune: bool,
    /// Remember dead prefixes. Only used while pruning is on.
    pub memo: bool,
    /// Upper bound on remembered dead prefixes.
    pub memo_capacity: usize,
    /// Derive precedences forced by the page stacks at every step and prune
    /// when they turn cyclic. Only used while pruning is on.
    pub lookahead: bool,
    /// Solve newly separated parts of the unplaced vertices on their own.
    /// Only used while pruning is on.
    pub split: bool,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            node_budget: None,
            time_budget: None,
            collect_limit: None,
            prune: true,
            memo: true,
            memo_capacity: 1 << 22,
            lookahead: true,
            split: true,
        }
    }
}

impl SearchConfig {
    pub fn with_node_budget(mut self, nodes: u64) -> Self {
        self.node_budget = NonZeroU64::new(nodes);
        self
    }

    pub fn with_time_budget(mut self, budget: Duration) -> Self {
        self.time_budget = Some(budget);
        self
    }

    pub fn with_collect_limit(mut self, limit: usize) -> Self {
        self.collect_limit = Some(limit);
        self
    }

    pub fn with_prune(mut self, prune: bool) -> Self {
        self.prune = prune;
        self
    }

    pub fn with_memo(mut self, memo: bool) -> Self {
        self.memo = memo;
        self
    }

    pub fn with_lookahead(mut self, lookahead: bool) -> Self {
        self.lookahead = lookahead;
        self
    }

    pub fn with_split(mut self, split: bool) -> Self {
        self.split = split;
        self
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct SearchStats {
    pub nodes: u64,
    pub max_depth: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Feasible(Ordering),
    Infeasible,
    BudgetExhausted,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOutcome {
    pub verdict: Verdict,
    pub stats: SearchStats,
}

impl SearchOutcome {
    pub fn ordering(&self) -> Option<&Ordering> {
        match &self.verdict {
            Verdict::Feasible(ord) => Some(ord),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EnumerationStatus {
    /// Every valid ordering was returned.
    Complete,
    /// `collect_limit` orderings were returned; there may be more.
    LimitReached,
    /// A budget ran out. The orderings returned are valid but incomplete.
    BudgetExhausted,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Enumeration {
    pub orderings: Vec<Ordering>,
    pub status: EnumerationStatus,
    pub stats: SearchStats,
}

/// Finds the lexicographically smallest valid ordering, or proves none exists.
pub fn solve_exact(inst: &Instance, cfg: &SearchConfig) -> SearchOutcome {
    let mut search = Search::new(inst, cfg, Some(1));
    let flow = search.dfs(1);
    let verdict = match (flow, search.found.pop()) {
        (_, Some(ord)) => Verdict::Feasible(ord),
        (Flow::Abort, None) => Verdict::BudgetExhausted,
        _ => Verdict::Infeasible,
    };
    SearchOutcome {
        verdict,
        stats: search.stats,
    }
}

/// Lists valid orderings in lexicographic order of vertex indices.
pub fn enumerate_valid_orderings(inst: &Instance, cfg: &SearchConfig) -> Enumeration {
    let mut search = Search::new(inst, cfg, cfg.collect_limit);
    let flow = search.dfs(1);
    let status = match flow {
        Flow::Abort if search.limit_hit => EnumerationStatus::LimitReached,
        Flow::Abort => EnumerationStatus::BudgetExhausted,
        Flow::Continue(_) => EnumerationStatus::Complete,
    };
    Enumeration {
        orderings: search.found,
        status,
        stats: search.stats,
    }
}

/// Enumerates every topological order and filters by [`validate_ordering`].
///
/// No pruning at all. Exponential; meant as a reference for tiny instances.
pub fn naive_valid_orderings(inst: &Instance) -> Vec<Ordering> {
    let n = inst.vertex_count();
    let mut indeg: Vec<usize> = (0..n).map(|v| inst.in_edges(v).len()).collect();
    let mut prefix = Vec::with_capacity(n);
    let mut out = Vec::new();
    fn rec(inst: &Instance, indeg: &mut [usize], prefix: &mut Vec<usize>, out: &mut Vec<Ordering>) {
        let n = inst.vertex_count();
        if prefix.len() == n {
            let ord = Ordering::from_indices(prefix.clone()).expect("prefix is a permutation");
            if validate_ordering(inst, &ord).is_valid() {
                out.push(ord);
            }
            return;
        }
        for v in 0..n {
            if indeg[v] != 0 || prefix.contains(&v) {
                continue;
            }
            prefix.push(v);
            for &e in inst.out_edges(v) {
                indeg[inst.edge(e).dst] -= 1;
            }
            rec(inst, indeg, prefix, out);
            for &e in inst.out_edges(v) {
                indeg[inst.edge(e).dst] += 1;
            }
            prefix.pop();
        }
    }
    rec(inst, &mut indeg, &mut prefix, &mut out);
    out
}

enum Flow {
    /// Whether the subtree produced at least one ordering.
    Continue(bool),
    Abort,
}

const UNPLACED: usize = usize::MAX;

/// Above this many vertices the lookahead only uses the cheap stack check,
/// since the pairwise one is quadratic in the edges of a page.
const PAIRWISE_LIMIT: usize = 1024;

struct Search<'a> {
    inst: &'a Instance,
    cfg: &'a SearchConfig,
    want: Option<usize>,
    started: Instant,
    stats: SearchStats,
    found: Vec<Ordering>,
    limit_hit: bool,

    prefix: Vec<usize>,
    rank: Vec<usize>,
    missing_preds: Vec<usize>,
    /// `open[page][r]`: open edges of `page` whose source has rank `r`.
    open: Vec<Vec<u32>>,
    /// `closed[page]`: rank intervals of closed edges.
    closed: Vec<Vec<(usize, usize)>>,
    dead: HashSet<Vec<u32>>,

    // Scratch space for the stack constraints.
    blocked: Vec<usize>,
    after: Vec<Vec<usize>>,
    queue: Vec<usize>,
    groups: Vec<Vec<usize>>,
    // Scratch space for the pairwise lookahead.
    reach: Vec<u64>,
    live: Vec<Vec<(usize, usize)>>,
}

impl<'a> Search<'a> {
    fn new(inst: &'a Instance, cfg: &'a SearchConfig, want: Option<usize>) -> Self {
        let n = inst.vertex_count();
        let k = inst.pages() as usize;
        Search {
            inst,
            cfg,
            want,
            started: Instant::now(),
            stats: SearchStats::default(),
            found: Vec::new(),
            limit_hit: false,
            prefix: Vec::with_capacity(n),
            rank: vec![UNPLACED; n],
            missing_preds: (0..n).map(|v| inst.in_edges(v).len()).collect(),
            open: vec![vec![0; n]; k],
            closed: vec![Vec::new(); k],
            dead: HashSet::new(),
            blocked: vec![0; n],
            after: vec![Vec::new(); n],
            queue: Vec::with_capacity(n),
            groups: Vec::new(),
            reach: Vec::new(),
            live: vec![Vec::new(); k],
        }
    }

    fn out_of_budget(&self) -> bool {
        if let Some(b) = self.cfg.node_budget {
            if self.stats.nodes > b.get() {
                return true;
            }
        }
        if let Some(t) = self.cfg.time_budget {
            if self.stats.nodes.is_multiple_of(256) && self.started.elapsed() > t {
                return true;
            }
        }
        false
    }

    fn memo_active(&self) -> bool {
        self.cfg.prune && self.cfg.memo
    }

    /// Placed set plus, per page, open edges by source rank. Sources that
    /// share a rank are separated by group markers.
    fn signature(&self) -> Vec<u32> {
        let n = self.inst.vertex_count();
        let mut key = vec![0u32; n.div_ceil(32)];
        for &v in &self.prefix {
            key[v / 32] |= 1 << (v % 32);
        }
        for page in 0..self.open.len() {
            key.push(u32::MAX);
            for (r, &count) in self.open[page].iter().enumerate().take(self.prefix.len()) {
                if count == 0 {
                    continue;
                }
                key.push(u32::MAX - 1);
                let u = self.prefix[r];
                let mut dsts: Vec<u32> = self
                    .inst
                    .out_edges(u)
                    .iter()
                    .map(|&e| self.inst.edge(e))
                    .filter(|e| e.page.index() == page && self.rank[e.dst] == UNPLACED)
                    .map(|e| e.dst as u32)
                    .collect();
                dsts.sort_unstable();
                key.extend(dsts);
            }
        }
        key
    }

    fn dfs(&mut self, parts: usize) -> Flow {
        self.stats.nodes += 1;
        self.stats.max_depth = self.stats.max_depth.max(self.prefix.len());
        if self.out_of_budget() {
            return Flow::Abort;
        }
        let n = self.inst.vertex_count();
        if self.prefix.len() == n {
            let ord = Ordering::from_indices(self.prefix.clone()).expect("prefix is a permutation");
            if !self.cfg.prune && !validate_ordering(self.inst, &ord).is_valid() {
                return Flow::Continue(false);
            }
            self.found.push(ord);
            if self.want.is_some_and(|w| self.found.len() >= w) {
                self.limit_hit = true;
                return Flow::Abort;
            }
            return Flow::Continue(true);
        }

        let key = if self.memo_active() {
            let key = self.signature();
            if self.dead.contains(&key) {
                return Flow::Continue(false);
            }
            Some(key)
        } else {
            None
        };

        let lookahead = self.cfg.prune && self.cfg.lookahead;
        let consistent = !lookahead
            || if n <= PAIRWISE_LIMIT {
                self.pairwise_consistent()
            } else {
                self.constraints_acyclic()
            };
        if !consistent {
            if let Some(key) = key {
                self.remember_dead(key);
            }
            return Flow::Continue(false);
        }
        let mut parts = parts;
        if self.cfg.prune && self.cfg.split {
            let (label, count) = self.components();
            if count > parts {
                match self.some_part_infeasible(&label, count) {
                    None => return Flow::Abort,
                    Some(true) => {
                        if let Some(key) = key {
                            self.remember_dead(key);
                        }
                        return Flow::Continue(false);
                    }
                    Some(false) => {}
                }
            }
            parts = count;
        }
        // Candidates are fixed before recursing, which reuses the scratch space.
        let candidates: Vec<usize> = (0..n)
            .filter(|&v| self.rank[v] == UNPLACED && self.missing_preds[v] == 0)
            .filter(|&v| !lookahead || self.blocked[v] == 0)
            .collect();

        let mut any = false;
        for v in candidates {
            let ok = self.place(v);
            let flow = if ok { self.dfs(parts) } else { Flow::Continue(false) };
            self.unplace(v);
            match flow {
                Flow::Abort => return Flow::Abort,
                Flow::Continue(found) => any |= found,
            }
        }

        if let Some(key) = key {
            if !any {
                self.remember_dead(key);
            }
        }
        Flow::Continue(any)
    }

    fn remember_dead(&mut self, key: Vec<u32>) {
        if self.dead.len() < self.cfg.memo_capacity {
            self.dead.insert(key);
        }
    }

    /// Labels the weakly connected parts of the unplaced vertices; placed
    /// vertices get `UNPLACED`. Returns the labels and the number of parts.
    fn components(&self) -> (Vec<usize>, usize) {
        let inst = self.inst;
        let n = inst.vertex_count();
        let mut label = vec![UNPLACED; n];
        let mut count = 0;
        let mut stack = Vec::new();
        for root in 0..n {
            if self.rank[root] != UNPLACED || label[root] != UNPLACED {
                continue;
            }
            label[root] = count;
            stack.push(root);
            while let Some(v) = stack.pop() {
                for e in inst.out_edges(v).iter().chain(inst.in_edges(v)) {
                    let edge = inst.edge(*e);
                    let w = if edge.src == v { edge.dst } else { edge.src };
                    if self.rank[w] == UNPLACED && label[w] == UNPLACED {
                        label[w] = count;
                        stack.push(w);
                    }
                }
            }
            count += 1;
        }
        (label, count)
    }

    /// Searches each part together with the prefix. `Some(true)` if some
    /// part has no valid completion, `None` if a budget ran out.
    fn some_part_infeasible(&mut self, label: &[usize], parts: usize) -> Option<bool> {
        let inst = self.inst;
        let n = inst.vertex_count();
        for part in 0..parts {
            let keep: Vec<usize> = (0..n)
                .filter(|&v| self.rank[v] != UNPLACED || label[v] == part)
                .collect();
            let mut local = vec![UNPLACED; n];
            for (i, &v) in keep.iter().enumerate() {
                local[v] = i;
            }
            let mut raw = crate::instance::RawInstance::new(inst.pages());
            for &v in &keep {
                raw.add_vertex(inst.name(v));
            }
            for edge in inst.edges() {
                if local[edge.src] != UNPLACED && local[edge.dst] != UNPLACED {
                    raw.add_edge(inst.name(edge.src), inst.name(edge.dst), edge.page.get());
                }
            }
            let sub = raw.check().expect("an induced subgraph of a valid instance is valid");

            let mut cfg = self.cfg.clone();
            if let Some(b) = self.cfg.node_budget {
                cfg.node_budget = Some(NonZeroU64::new(b.get().saturating_sub(self.stats.nodes).max(1))?);
            }
            if let Some(t) = self.cfg.time_budget {
                cfg.time_budget = Some(t.checked_sub(self.started.elapsed())?);
            }
            let mut nested = Search::new(&sub, &cfg, Some(1));
            let mut ok = true;
            for &v in &self.prefix {
                ok &= nested.place(local[v]);
            }
            let flow = if ok { nested.dfs(1) } else { Flow::Continue(false) };
            self.stats.nodes += nested.stats.nodes;
            match flow {
                Flow::Abort if nested.found.is_empty() => return None,
                Flow::Continue(false) => return Some(true),
                _ => {}
            }
        }
        Some(false)
    }

    /// Builds the stack constraints between unplaced vertices and checks
    /// that, together with the remaining edges, they admit an order. Leaves
    /// in `blocked[v]` the number of constraints that keep `v` waiting.
    fn constraints_acyclic(&mut self) -> bool {
        let inst = self.inst;
        let n = inst.vertex_count();
        for v in 0..n {
            self.blocked[v] = 0;
            self.after[v].clear();
        }
        let mut any_constraint = false;
        for page in 0..self.open.len() {
            let mut used = 0;
            for r in 0..self.prefix.len() {
                if self.open[page][r] == 0 {
                    continue;
                }
                if self.groups.len() == used {
                    self.groups.push(Vec::new());
                }
                let group = &mut self.groups[used];
                group.clear();
                group.extend(
                    inst.out_edges(self.prefix[r])
                        .iter()
                        .map(|&e| inst.edge(e))
                        .filter(|e| e.page.index() == page && self.rank[e.dst] == UNPLACED)
                        .map(|e| e.dst),
                );
                used += 1;
            }
            for g in 1..used {
                let (lower, higher) = self.groups.split_at(g);
                for &x in &lower[g - 1] {
                    for &y in &higher[0] {
                        if x != y {
                            self.after[y].push(x);
                            self.blocked[x] += 1;
                            any_constraint = true;
                        }
                    }
                }
            }
        }
        if !any_constraint {
            return true;
        }

        // Kahn's algorithm over unplaced vertices; `blocked` is consumed on a
        // copy so the candidate filter can still read it.
        let mut waiting: Vec<usize> = (0..n).map(|v| self.missing_preds[v] + self.blocked[v]).collect();
        self.queue.clear();
        self.queue
            .extend((0..n).filter(|&v| self.rank[v] == UNPLACED && waiting[v] == 0));
        let mut done = 0;
        while let Some(v) = self.queue.pop() {
            done += 1;
            let succ = inst.out_edges(v).iter().map(|&e| inst.edge(e).dst);
            for w in succ.chain(self.after[v].iter().copied()) {
                waiting[w] -= 1;
                if waiting[w] == 0 {
                    self.queue.push(w);
                }
            }
        }
        done == n - self.prefix.len()
    }

    /// Whether `u` must come before `v` as far as is known: placed vertices
    /// precede unplaced ones, and between unplaced vertices `reach` holds
    /// the transitive closure of the known precedences.
    fn before(&self, u: usize, v: usize) -> bool {
        match (self.rank[u], self.rank[v]) {
            (UNPLACED, UNPLACED) => {
                let words = self.inst.vertex_count().div_ceil(64);
                self.reach[u * words + v / 64] >> (v % 64) & 1 == 1
            }
            (UNPLACED, _) => false,
            (_, UNPLACED) => true,
            (ru, rv) => ru < rv,
        }
    }

    /// Recomputes `reach` from the remaining edges and the derived
    /// precedences in `after`. False if they contain a cycle.
    fn close_precedences(&mut self) -> bool {
        let inst = self.inst;
        let n = inst.vertex_count();
        let words = n.div_ceil(64);
        let mut waiting: Vec<usize> = self.missing_preds.clone();
        for u in 0..n {
            if self.rank[u] == UNPLACED {
                for &w in &self.after[u] {
                    waiting[w] += 1;
                }
            }
        }
        self.queue.clear();
        self.queue
            .extend((0..n).filter(|&v| self.rank[v] == UNPLACED && waiting[v] == 0));
        let mut head = 0;
        while head < self.queue.len() {
            let v = self.queue[head];
            head += 1;
            let succ = inst.out_edges(v).iter().map(|&e| inst.edge(e).dst);
            for w in succ.chain(self.after[v].iter().copied()) {
                waiting[w] -= 1;
                if waiting[w] == 0 {
                    self.queue.push(w);
                }
            }
        }
        if self.queue.len() != n - self.prefix.len() {
            return false;
        }
        self.reach.clear();
        self.reach.resize(n * words, 0);
        for i in (0..self.queue.len()).rev() {
            let v = self.queue[i];
            let succ = inst.out_edges(v).iter().map(|&e| inst.edge(e).dst);
            for w in succ.chain(self.after[v].iter().copied()) {
                self.reach[v * words + w / 64] |= 1 << (w % 64);
                for j in 0..words {
                    self.reach[v * words + j] |= self.reach[w * words + j];
                }
            }
        }
        true
    }

    /// Records that `u` must precede `v`. `None` if that is impossible,
    /// otherwise whether it is new.
    fn require(&mut self, u: usize, v: usize) -> Option<bool> {
        if self.before(u, v) {
            return Some(false);
        }
        if self.rank[u] != UNPLACED || self.rank[v] != UNPLACED || self.before(v, u) {
            return None;
        }
        self.after[u].push(v);
        self.blocked[v] += 1;
        let words = self.inst.vertex_count().div_ceil(64);
        self.reach[u * words + v / 64] |= 1 << (v % 64);
        for j in 0..words {
            self.reach[u * words + j] |= self.reach[v * words + j];
        }
        Some(true)
    }

    /// Two edges of one page with distinct endpoints must nest or be
    /// disjoint. Whenever the known precedences already fix three of the
    /// four relations an interleaving needs, the fourth is forced the other
    /// way. Propagates this to a fixpoint over edges that are not yet
    /// closed. False if the precedences become cyclic. Leaves in
    /// `blocked[v]` the number of derived precedences that keep `v` waiting.
    fn pairwise_consistent(&mut self) -> bool {
        let inst = self.inst;
        for v in 0..inst.vertex_count() {
            self.blocked[v] = 0;
            self.after[v].clear();
        }
        for page in &mut self.live {
            page.clear();
        }
        for e in inst.edges() {
            if self.rank[e.dst] == UNPLACED {
                self.live[e.page.index()].push((e.src, e.dst));
            }
        }
        let live = std::mem::take(&mut self.live);
        let result = self.propagate_pairs(&live);
        self.live = live;
        result
    }

    fn propagate_pairs(&mut self, live: &[Vec<(usize, usize)>]) -> bool {
        loop {
            if !self.close_precedences() {
                return false;
            }
            let mut changed = false;
            for edges in live {
                for (i, &(p1, q1)) in edges.iter().enumerate() {
                    for &(p2, q2) in &edges[i + 1..] {
                        if p1 == p2 || p1 == q2 || q1 == p2 || q1 == q2 {
                            continue;
                        }
                        for ((a, b), (c, d)) in [((p1, q1), (p2, q2)), ((p2, q2), (p1, q1))] {
                            // An interleaving is a < c < b < d.
                            let ac = self.before(a, c);
                            let cb = self.before(c, b);
                            let bd = self.before(b, d);
                            let forced = match (ac, cb, bd) {
                                (true, true, _) => Some((d, b)),
                                (true, _, true) => Some((b, c)),
                                (_, true, true) => Some((c, a)),
                                _ => None,
                            };
                            if let Some((u, v)) = forced {
                                match self.require(u, v) {
                                    None => return false,
                                    Some(new) => changed |= new,
                                }
                            }
                        }
                    }
                }
            }
            if !changed {
                return true;
            }
        }
    }

    /// Appends `v`; returns false if the pruning rule kills the branch.
    /// The caller must call `unplace(v)` either way.
    fn place(&mut self, v: usize) -> bool {
        let inst = self.inst;
        let rv = self.prefix.len();
        self.rank[v] = rv;
        self.prefix.push(v);
        for &e in inst.out_edges(v) {
            self.missing_preds[inst.edge(e).dst] -= 1;
        }
        for &e in inst.in_edges(v) {
            let edge = inst.edge(e);
            self.open[edge.page.index()][self.rank[edge.src]] -= 1;
        }
        let mut ok = true;
        if self.cfg.prune {
            for &e in inst.in_edges(v) {
                let edge = inst.edge(e);
                let page = edge.page.index();
                let ru = self.rank[edge.src];
                if self.open[page][ru + 1..rv].iter().any(|&c| c > 0)
                    || self.closed[page].iter().any(|&(a, b)| a < ru && ru < b)
                {
                    ok = false;
                    break;
                }
            }
        }
        for &e in inst.in_edges(v) {
            let edge = inst.edge(e);
            self.closed[edge.page.index()].push((self.rank[edge.src], rv));
        }
        for &e in inst.out_edges(v) {
            self.open[inst.edge(e).page.index()][rv] += 1;
        }
        ok
    }

    fn unplace(&mut self, v: usize) {
        let inst = self.inst;
        let rv = self.rank[v];
        for &e in inst.out_edges(v) {
            let edge = inst.edge(e);
            self.open[edge.page.index()][rv] -= 1;
            self.missing_preds[edge.dst] += 1;
        }
        for &e in inst.in_edges(v).iter().rev() {
            let edge = inst.edge(e);
            self.closed[edge.page.index()].pop();
            self.open[edge.page.index()][self.rank[edge.src]] += 1;
        }
        self.prefix.pop();
        self.rank[v] = UNPLACED;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instance::RawInstance;

    fn build(names: &[&str], edges: &[(&str, &str, u32)], k: u32) -> Instance {
        let mut raw = RawInstance::new(k);
        for n in names {
            raw.add_vertex(*n);
        }
        for (s, d, p) in edges {
            raw.add_edge(*s, *d, *p);
        }
        raw.check().unwrap()
    }

    fn c4_infeasible() -> Instance {
        build(
            &["v1", "v2", "v3", "v4"],
            &[("v1", "v2", 1), ("v3", "v4", 1), ("v3", "v2", 2), ("v1", "v4", 2)],
            2,
        )
    }

    #[test]
    fn c4_examples() {
        let cfg = SearchConfig::default();
        assert_eq!(solve_exact(&c4_infeasible(), &cfg).verdict, Verdict::Infeasible);

        let i = build(
            &["v1", "v2", "v3", "v4"],
            &[("v1", "v2", 1), ("v3", "v4", 1), ("v3", "v2", 2), ("v4", "v1", 2)],
            2,
        );
        let out = solve_exact(&i, &cfg);
        assert_eq!(out.ordering().unwrap().names(&i), ["v3", "v4", "v1", "v2"]);
    }

    #[test]
    fn edgeless_gives_insertion_order() {
        let i = build(&["c", "a", "b"], &[], 1);
        let out = solve_exact(&i, &SearchConfig::default());
        assert_eq!(out.ordering().unwrap().seq(), [0, 1, 2]);
    }

    #[test]
    fn enumeration_examples() {
        let i = build(&["u", "v", "w"], &[("u", "v", 1)], 1);
        let all = enumerate_valid_orderings(&i, &SearchConfig::default());
        assert_eq!(all.status, EnumerationStatus::Complete);
        let seqs: Vec<_> = all.orderings.iter().map(|o| o.names(&i)).collect();
        assert_eq!(seqs, [["u", "v", "w"], ["u", "w", "v"], ["w", "u", "v"]]);

        let none = enumerate_valid_orderings(&c4_infeasible(), &SearchConfig::default());
        assert!(none.orderings.is_empty());
        assert_eq!(none.status, EnumerationStatus::Complete);

        let two = enumerate_valid_orderings(&i, &SearchConfig::default().with_collect_limit(2));
        assert_eq!(two.orderings.len(), 2);
        assert_eq!(two.status, EnumerationStatus::LimitReached);
    }

    #[test]
    fn budget_exhaustion_is_its_own_verdict() {
        let names: Vec<String> = (0..12).map(|i| format!("v{i}")).collect();
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        // Many topological orders, and an infeasible core at the end.
        let mut edges: Vec<(&str, &str, u32)> =
            vec![("v8", "v9", 1), ("v10", "v11", 1), ("v10", "v9", 2), ("v8", "v11", 2)];
        edges.push(("v0", "v8", 3));
        let i = build(&refs, &edges, 3);
        let cfg = SearchConfig::default().with_node_budget(5).with_memo(false);
        assert_eq!(solve_exact(&i, &cfg).verdict, Verdict::BudgetExhausted);
        let e = enumerate_valid_orderings(&i, &cfg);
        assert_eq!(e.status, EnumerationStatus::BudgetExhausted);
        assert_eq!(solve_exact(&i, &SearchConfig::default()).verdict, Verdict::Infeasible);
    }

    #[test]
    fn pruning_and_memo_do_not_change_answers() {
        let i = build(
            &["a", "b", "c", "d", "e"],
            &[
                ("a", "c", 1),
                ("b", "d", 1),
                ("a", "e", 2),
                ("c", "e", 1),
                ("b", "e", 2),
            ],
            2,
        );
        let naive = naive_valid_orderings(&i);
        for (prune, memo) in [(true, true), (true, false), (false, false)] {
            let cfg = SearchConfig::default().with_prune(prune).with_memo(memo);
            assert_eq!(enumerate_valid_orderings(&i, &cfg).orderings, naive);
        }
    }
}
