//! Seeded instance generators. The same seed always yields the same instance.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::instance::{Instance, RawInstance};

fn vertex_names(raw: &mut RawInstance, n: usize) {
    raw.vertices = (0..n).map(|i| format!("v{i}")).collect();
}

/// A path through all `n` vertices in a random order, each edge randomly
/// oriented. Edge `t` of the path goes on page `t mod k + 1`, so for
/// `k >= 2` every page is a matching.
pub fn random_path(n: usize, k: u32, seed: u64) -> Instance {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut raw = RawInstance::new(k);
    vertex_names(&mut raw, n);
    let mut walk: Vec<usize> = (0..n).collect();
    walk.shuffle(&mut rng);
    for (t, pair) in walk.windows(2).enumerate() {
        let (a, b) = if rng.gen_bool(0.5) {
            (pair[0], pair[1])
        } else {
            (pair[1], pair[0])
        };
        raw.add_edge(raw.vertices[a].clone(), raw.vertices[b].clone(), (t as u32 % k) + 1);
    }
    raw.check().expect("a path is a simple DAG")
}

/// A cycle through all `n >= 3` vertices in a random order, randomly
/// oriented but never as a directed cycle. Pages as in [`random_path`]; with
/// `k = 2` and even `n` every page is a matching.
pub fn random_cycle(n: usize, k: u32, seed: u64) -> Instance {
    assert!(n >= 3, "a simple cycle needs at least 3 vertices");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut raw = RawInstance::new(k);
    vertex_names(&mut raw, n);
    let mut walk: Vec<usize> = (0..n).collect();
    walk.shuffle(&mut rng);
    let mut forward: Vec<bool> = (0..n).map(|_| rng.gen_bool(0.5)).collect();
    if forward.iter().all(|&f| f == forward[0]) {
        let t = rng.gen_range(0..n);
        forward[t] = !forward[t];
    }
    for t in 0..n {
        let (a, b) = (walk[t], walk[(t + 1) % n]);
        let (a, b) = if forward[t] { (a, b) } else { (b, a) };
        raw.add_edge(raw.vertices[a].clone(), raw.vertices[b].clone(), (t as u32 % k) + 1);
    }
    raw.check().expect("a non-directed cycle is a simple DAG")
}

/// `m` distinct edges (capped at `n(n-1)/2`) oriented along a hidden random
/// order, each on a uniformly random page.
pub fn random_dag(n: usize, m: usize, k: u32, seed: u64) -> Instance {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut raw = RawInstance::new(k);
    vertex_names(&mut raw, n);
    let mut hidden: Vec<usize> = (0..n).collect();
    hidden.shuffle(&mut rng);
    let mut pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    pairs.shuffle(&mut rng);
    pairs.truncate(m);
    for (i, j) in pairs {
        let (a, b) = (hidden[i], hidden[j]);
        raw.add_edge(raw.vertices[a].clone(), raw.vertices[b].clone(), rng.gen_range(1..=k));
    }
    raw.check().expect("edges follow a hidden order")
}

/// Like [`random_dag`], with the page of each edge chosen so that every page
/// stays a matching where possible; edges that fit no page are dropped.
pub fn random_matching_dag(n: usize, m: usize, k: u32, seed: u64) -> Instance {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut raw = RawInstance::new(k);
    vertex_names(&mut raw, n);
    let mut hidden: Vec<usize> = (0..n).collect();
    hidden.shuffle(&mut rng);
    let mut pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    pairs.shuffle(&mut rng);
    let mut used = vec![vec![false; k as usize]; n];
    let mut added = 0;
    for (i, j) in pairs {
        if added == m {
            break;
        }
        let (a, b) = (hidden[i], hidden[j]);
        let free: Vec<usize> = (0..k as usize).filter(|&p| !used[a][p] && !used[b][p]).collect();
        let Some(&p) = free.choose(&mut rng) else { continue };
        used[a][p] = true;
        used[b][p] = true;
        raw.add_edge(raw.vertices[a].clone(), raw.vertices[b].clone(), p as u32 + 1);
        added += 1;
    }
    raw.check().expect("edges follow a hidden order")
}
