use proptest::prelude::*;
use upbe::gen::random_dag;
use upbe::{
    enumerate_valid_orderings, naive_valid_orderings, solve_exact, validate_ordering, Instance, Ordering, RawInstance,
    SearchConfig, Verdict,
};

fn small_instance() -> impl Strategy<Value = Instance> {
    (1usize..=8, 0usize..=16, 1u32..=3, any::<u64>()).prop_map(|(n, m, k, seed)| random_dag(n, m, k, seed))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn exact_agrees_with_naive(inst in small_instance()) {
        let naive = naive_valid_orderings(&inst);
        let out = solve_exact(&inst, &SearchConfig::default());
        match out.verdict {
            Verdict::Feasible(ord) => {
                prop_assert!(validate_ordering(&inst, &ord).is_valid());
                prop_assert_eq!(Some(&ord), naive.first());
            }
            Verdict::Infeasible => prop_assert!(naive.is_empty()),
            Verdict::BudgetExhausted => prop_assert!(false, "no budget was set"),
        }
    }

    #[test]
    fn enumeration_matches_naive_under_every_setting(
        inst in small_instance(),
        prune: bool,
        memo: bool,
        lookahead: bool,
        split: bool,
    ) {
        let cfg = SearchConfig::default()
            .with_prune(prune)
            .with_memo(memo)
            .with_lookahead(lookahead)
            .with_split(split);
        let listed = enumerate_valid_orderings(&inst, &cfg).orderings;
        prop_assert_eq!(listed, naive_valid_orderings(&inst));
    }

    #[test]
    fn verdict_survives_relabeling(inst in small_instance(), seed: u64) {
        // Reverse the vertex list, rotate page labels, and reverse the edge list.
        let raw = inst.to_raw();
        let k = raw.pages;
        let mut other = RawInstance::new(k);
        other.vertices = raw.vertices.iter().rev().map(|v| format!("w{v}")).collect();
        for e in raw.edges.iter().rev() {
            let page = (e.page + seed as u32 % k) % k + 1;
            other.add_edge(format!("w{}", e.src), format!("w{}", e.dst), page);
        }
        let other = other.check().unwrap();
        let a = matches!(solve_exact(&inst, &SearchConfig::default()).verdict, Verdict::Feasible(_));
        let b = matches!(solve_exact(&other, &SearchConfig::default()).verdict, Verdict::Feasible(_));
        prop_assert_eq!(a, b);
        if let Some(ord) = solve_exact(&inst, &SearchConfig::default()).ordering() {
            let names: Vec<String> = ord.names(&inst).iter().map(|v| format!("w{v}")).collect();
            let mapped = Ordering::from_names(&other, &names).unwrap();
            prop_assert!(validate_ordering(&other, &mapped).is_valid());
        }
    }

    #[test]
    fn one_edge_per_page_means_every_topological_order_is_valid(n in 2usize..7, seed: u64) {
        let m = n * (n - 1) / 2;
        let inst = random_dag(n, m.min(6), 6, seed);
        let distinct_pages = {
            let mut p: Vec<_> = inst.edges().iter().map(|e| e.page).collect();
            p.sort();
            p.dedup();
            p.len() == inst.edge_count()
        };
        prop_assume!(distinct_pages);
        let topo = topological_orders(&inst);
        prop_assert!(!topo.is_empty());
        for ord in &topo {
            prop_assert!(validate_ordering(&inst, ord).is_valid());
        }
        prop_assert_eq!(topo.len(), naive_valid_orderings(&inst).len());
    }
}

fn topological_orders(inst: &Instance) -> Vec<Ordering> {
    let n = inst.vertex_count();
    let mut out = Vec::new();
    let mut prefix = Vec::new();
    fn rec(inst: &Instance, n: usize, prefix: &mut Vec<usize>, out: &mut Vec<Ordering>) {
        if prefix.len() == n {
            out.push(Ordering::from_indices(prefix.clone()).unwrap());
            return;
        }
        for v in 0..n {
            let ready = !prefix.contains(&v) && inst.in_edges(v).iter().all(|&e| prefix.contains(&inst.edge(e).src));
            if ready {
                prefix.push(v);
                rec(inst, n, prefix, out);
                prefix.pop();
            }
        }
    }
    rec(inst, n, &mut prefix, &mut out);
    out
}
