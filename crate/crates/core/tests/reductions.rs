use std::collections::BTreeSet;

use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use upbe::reductions::{chain_fixture, triple_fixture, umpbe4_triple_fixture, TripleFixture};
use upbe::{
    assemble_umpbe4, assemble_upbe3, enumerate_valid_orderings, extract_phi, is_matching_partition,
    solve_betweenness_bruteforce, solve_exact, validate_ordering, witness_umpbe4, witness_upbe3, BetweennessInstance,
    EnumerationStatus, SearchConfig, Verdict,
};

const NAMES: [&str; 8] = ["a", "b", "c", "d", "e", "f", "x", "y"];

fn every_triple(n: usize) -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if a != b && b != c && a != c {
                    out.push([a, b, c]);
                }
            }
        }
    }
    out
}

fn instance(n: usize, triples: &[[usize; 3]]) -> BetweennessInstance {
    let named: Vec<[&str; 3]> = triples.iter().map(|t| t.map(|e| NAMES[e])).collect();
    BetweennessInstance::new(&NAMES[..n], &named).unwrap()
}

/// Every instance over three elements with one or two triples.
fn all_small() -> Vec<BetweennessInstance> {
    let ts = every_triple(3);
    let mut out: Vec<_> = ts.iter().map(|t| instance(3, &[*t])).collect();
    for s in &ts {
        for t in &ts {
            out.push(instance(3, &[*s, *t]));
        }
    }
    out
}

fn random_instance(rng: &mut ChaCha8Rng, n: usize, m: usize) -> BetweennessInstance {
    let ts: Vec<[usize; 3]> = (0..m)
        .map(|_| {
            let mut e: Vec<usize> = (0..n).collect();
            e.shuffle(rng);
            [e[0], e[1], e[2]]
        })
        .collect();
    instance(n, &ts)
}

fn assert_dichotomy(fx: &TripleFixture) {
    let all = enumerate_valid_orderings(&fx.instance, &SearchConfig::default());
    assert_eq!(all.status, EnumerationStatus::Complete);
    assert!(!all.orderings.is_empty());
    let seen: BTreeSet<[usize; 3]> = all.orderings.iter().map(|o| fx.sink_order(o)).collect();
    assert_eq!(seen, BTreeSet::from([[0, 1, 2], [2, 1, 0]]));
}

#[test]
fn three_page_triple_gadget_forces_betweenness() {
    assert_dichotomy(&triple_fixture());
}

#[test]
fn four_page_triple_gadget_forces_betweenness() {
    assert_dichotomy(&umpbe4_triple_fixture());
}

#[test]
fn chain_reverses_the_middle_copy() {
    let fx = chain_fixture(3);
    let all = enumerate_valid_orderings(&fx.instance, &SearchConfig::default());
    assert_eq!(all.status, EnumerationStatus::Complete);
    assert!(!all.orderings.is_empty());
    let mut firsts = BTreeSet::new();
    for ord in &all.orderings {
        let left = fx.copy_order(ord, 0);
        let mut middle = fx.copy_order(ord, 1);
        middle.reverse();
        assert_eq!(left, fx.copy_order(ord, 2));
        assert_eq!(left, middle);
        firsts.insert(left);
    }
    // Every element order can be propagated.
    assert_eq!(firsts.len(), 6);
}

#[test]
fn three_page_witnesses_validate() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut cases = all_small();
    let mut random = 0;
    while random < 20 {
        let m = rng.gen_range(1..=2);
        let bw = random_instance(&mut rng, 4, m);
        if solve_betweenness_bruteforce(&bw).is_some() {
            cases.push(bw);
            random += 1;
        }
    }
    for bw in &cases {
        let lab = assemble_upbe3(bw).unwrap();
        assert_eq!(lab.instance.vertex_count(), 8 * bw.m() * bw.n() + 12 * bw.m() - bw.n());
        let Some(phi) = solve_betweenness_bruteforce(bw) else {
            continue;
        };
        for phi in [phi.clone(), phi.reversed()] {
            let ord = witness_upbe3(bw, &phi).unwrap();
            assert!(validate_ordering(&lab.instance, &ord).is_valid());
            assert_eq!(extract_phi(&lab, &ord, bw.n()), phi);
        }
    }
}

#[test]
fn four_page_witnesses_validate() {
    for bw in all_small() {
        let lab = assemble_umpbe4(&bw).unwrap();
        assert!(is_matching_partition(&lab.instance));
        let Some(phi) = solve_betweenness_bruteforce(&bw) else {
            continue;
        };
        for phi in [phi.clone(), phi.reversed()] {
            let ord = witness_umpbe4(&bw, &phi).unwrap();
            assert!(validate_ordering(&lab.instance, &ord).is_valid());
        }
    }
}

#[test]
fn assembly_is_deterministic() {
    let bw = instance(5, &[[0, 1, 2], [3, 1, 4], [4, 2, 0]]);
    assert_eq!(assemble_upbe3(&bw).unwrap(), assemble_upbe3(&bw).unwrap());
    assert_eq!(assemble_umpbe4(&bw).unwrap(), assemble_umpbe4(&bw).unwrap());
    let phi = solve_betweenness_bruteforce(&bw).unwrap();
    assert_eq!(witness_upbe3(&bw, &phi).unwrap(), witness_upbe3(&bw, &phi).unwrap());
    assert_eq!(witness_umpbe4(&bw, &phi).unwrap(), witness_umpbe4(&bw, &phi).unwrap());
}

fn any_instance(max_n: usize, max_m: usize) -> impl Strategy<Value = BetweennessInstance> {
    (3..=max_n, 1..=max_m, any::<u64>())
        .prop_map(|(n, m, seed)| random_instance(&mut ChaCha8Rng::seed_from_u64(seed), n, m))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    #[test]
    fn four_page_assembly_is_a_matching(bw in any_instance(6, 4)) {
        prop_assert!(is_matching_partition(&assemble_umpbe4(&bw).unwrap().instance));
    }

    #[test]
    fn witnesses_validate_on_larger_instances(bw in any_instance(7, 3)) {
        if let Some(phi) = solve_betweenness_bruteforce(&bw) {
            let lab = assemble_upbe3(&bw).unwrap();
            prop_assert!(validate_ordering(&lab.instance, &witness_upbe3(&bw, &phi).unwrap()).is_valid());
            let lab = assemble_umpbe4(&bw).unwrap();
            prop_assert!(validate_ordering(&lab.instance, &witness_umpbe4(&bw, &phi).unwrap()).is_valid());
        }
    }
}

#[test]
fn exact_search_decides_small_reductions() {
    for bw in all_small() {
        let satisfiable = solve_betweenness_bruteforce(&bw).is_some();
        for lab in [assemble_upbe3(&bw).unwrap(), assemble_umpbe4(&bw).unwrap()] {
            let out = solve_exact(&lab.instance, &SearchConfig::default());
            match out.verdict {
                Verdict::Feasible(ord) => {
                    assert!(satisfiable);
                    assert!(validate_ordering(&lab.instance, &ord).is_valid());
                    assert!(upbe::eval_betweenness(&bw, &extract_phi(&lab, &ord, bw.n())));
                }
                Verdict::Infeasible => assert!(!satisfiable),
                Verdict::BudgetExhausted => unreachable!("no budget was set"),
            }
        }
    }
}
