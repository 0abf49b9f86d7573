use hopfext::classify::{construct_from_triple, enumerate_triples, EnumerationBudget};
use hopfext::groups::{enumerate_actions, group_iso_test, AbGroup, FinGroup};

fn rotating_actions(f: &FinGroup, gamma: &AbGroup) -> Vec<hopfext::groups::AutAction> {
    enumerate_actions(f, gamma)
        .into_iter()
        .filter(|act| (0..f.order()).any(|x| f.element_order(x) == 3 && (0..gamma.order()).any(|s| act.apply(x, s) != s)))
        .collect()
}

#[test]
fn dimension_24_with_a4_grouplikes() {
    let gamma = AbGroup::new(vec![2, 2]).unwrap();
    let a4 = FinGroup::a4();
    let budget = EnumerationBudget::default();
    let mut found = 0;
    for f in [FinGroup::cyclic(6), FinGroup::s3()] {
        let actions = rotating_actions(&f, &gamma);
        assert!(!actions.is_empty());
        for action in actions {
            let e = enumerate_triples(&gamma, &f, &action, &budget).unwrap();
            assert!(!e.truncated);
            assert_eq!(e.rejected, 0);
            for t in &e.triples {
                let c = construct_from_triple(t).unwrap();
                assert_eq!(c.hopf.dim(), 24);
                assert_eq!(c.coalgebra_type.to_string(), "(1, 12; 2, 3)");
                assert!(group_iso_test(&c.grouplikes.table, &a4).unwrap().is_some());
                found += 1;
            }
        }
    }
    assert!(found >= 1);
}
