use proptest::prelude::*;
use upbe::gen::random_dag;
use upbe::{edges_cross, validate_ordering, Ordering, RawInstance};

fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

proptest! {
    #[test]
    fn crossing_is_symmetric(n in 4usize..9, seed: u64, perm in permutation(8)) {
        let inst = random_dag(n, 12, 1, seed);
        let seq: Vec<usize> = perm.into_iter().filter(|&v| v < n).collect();
        let ord = Ordering::from_indices(seq).unwrap();
        for a in inst.edges() {
            for b in inst.edges() {
                prop_assert_eq!(edges_cross(&ord, a, b), edges_cross(&ord, b, a));
            }
        }
    }

    #[test]
    fn verdict_ignores_edge_order(n in 2usize..9, m in 0usize..14, k in 1u32..4, seed: u64, perm in permutation(8)) {
        let inst = random_dag(n, m, k, seed);
        let seq: Vec<usize> = perm.into_iter().filter(|&v| v < n).collect();
        let ord = Ordering::from_indices(seq).unwrap();
        let mut raw: RawInstance = inst.to_raw();
        raw.edges.reverse();
        let shuffled = raw.check().unwrap();
        prop_assert_eq!(
            validate_ordering(&inst, &ord).is_valid(),
            validate_ordering(&shuffled, &ord).is_valid()
        );
    }

    #[test]
    fn sweep_agrees_with_pairwise_check(n in 2usize..9, m in 0usize..16, k in 1u32..3, seed: u64, perm in permutation(8)) {
        let inst = random_dag(n, m, k, seed);
        let seq: Vec<usize> = perm.into_iter().filter(|&v| v < n).collect();
        let ord = Ordering::from_indices(seq).unwrap();
        let forward = inst.edges().iter().all(|e| ord.rank(e.src) < ord.rank(e.dst));
        let crossing = inst.edges().iter().any(|a| {
            inst.edges().iter().any(|b| a.page == b.page && edges_cross(&ord, a, b))
        });
        prop_assert_eq!(validate_ordering(&inst, &ord).is_valid(), forward && !crossing);
    }
}
