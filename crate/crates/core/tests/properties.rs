use proptest::prelude::*;
use proptest::sample::subsequence;

use hopfext::bicrossed::{verify_bialgebra, BicrossedHopf};
use hopfext::corpus;
use hopfext::groups::{group_iso_test, AbGroup, FinGroup};

fn small_groups() -> Vec<FinGroup> {
    let ab = |v: Vec<u32>| AbGroup::new(v).unwrap().to_fingroup();
    vec![
        FinGroup::cyclic(4),
        ab(vec![2, 2]),
        FinGroup::cyclic(6),
        FinGroup::s3(),
        FinGroup::cyclic(8),
        ab(vec![2, 4]),
        ab(vec![2, 2, 2]),
        FinGroup::from_permutations(&[vec![1, 2, 3, 0], vec![2, 1, 0, 3]]).unwrap(),
        FinGroup::a4(),
        ab(vec![4, 4]),
        ab(vec![2, 2, 4]),
        ab(vec![2, 8]),
        FinGroup::cyclic(16),
    ]
}

/// The same group with elements renamed by `perm`.
fn relabel(g: &FinGroup, perm: &[usize]) -> FinGroup {
    let n = g.order();
    let mut inv = vec![0; n];
    for (i, &p) in perm.iter().enumerate() {
        inv[p] = i;
    }
    let rows = (0..n)
        .map(|a| (0..n).map(|b| perm[g.mul(inv[a], inv[b])] as u32).collect())
        .collect();
    FinGroup::from_table(rows).unwrap()
}

fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn relabelled_groups_are_isomorphic((idx, perm) in (0usize..13).prop_flat_map(|i| (Just(i), permutation(small_groups()[i].order())))) {
        let g = &small_groups()[idx];
        let h = relabel(g, &perm);
        let map = group_iso_test(g, &h).unwrap().expect("isomorphic");
        for a in 0..g.order() {
            for b in 0..g.order() {
                prop_assert_eq!(map[g.mul(a, b)], h.mul(map[a], map[b]));
            }
        }
    }

    #[test]
    fn distinct_groups_are_not_isomorphic(i in 0usize..13, j in 0usize..13, perm in permutation(8)) {
        prop_assume!(i != j);
        let groups = small_groups();
        let (g, h) = (&groups[i], &groups[j]);
        let h = if h.order() == 8 { relabel(h, &perm) } else { h.clone() };
        prop_assert!(group_iso_test(g, &h).unwrap().is_none());
    }

    /// Negating one off-identity entry of `τ_u` on `E_KP8` breaks an axiom.
    #[test]
    fn single_entry_tau_changes_break_the_axioms(cells in subsequence((1..4usize).flat_map(|s| (1..4usize).map(move |t| (s, t))).collect::<Vec<_>>(), 1..=1)) {
        let mut data = corpus::e_kp8();
        let (s, t) = cells[0];
        let old = data.tau.exp(1, s, t);
        data.tau.set(1, s, t, (old + 2) % 4);
        let report = verify_bialgebra(&BicrossedHopf::build(data));
        let failure = report.first_failure();
        prop_assert!(failure.is_some());
        prop_assert!(failure.unwrap().witness.is_some());
    }
}
