use super::*;
use crate::cocycle::{canonical_cocycle, SigmaTable, TauTable};
use crate::corpus::{e16_triple, kp8_triple};
use crate::groups::{enumerate_actions, group_iso_test, AbGroup, AutAction, FinGroup};

fn failed(report: &TripleReport) -> Option<TripleCondition> {
    report.first_failure().map(|c| c.condition)
}

/// `Γ` with `F = Z_2` acting trivially and `τ_u = β_k`.
fn z2_triple(gamma: AbGroup, k: &[u32], n: u32) -> ClassTriple {
    let f = FinGroup::cyclic(2);
    let beta = canonical_cocycle(&gamma, k, n).unwrap();
    let na = gamma.order();
    ClassTriple {
        action: AutAction::trivial(f.clone(), gamma.clone()),
        sigma: SigmaTable::trivial(na, 2, n),
        tau: TauTable::from_fn(2, na, n, |x, s, t| if x == 1 { beta.exp(s, t) as i64 } else { 0 }),
        gamma,
        f,
        modulus: n,
    }
}

#[test]
fn corpus_triples_are_valid() {
    let r = validate_triple(&kp8_triple());
    assert!(r.valid, "{r:?}");
    assert_eq!(r.f0.as_deref(), Some(&[0][..]));
    let r = validate_triple(&e16_triple());
    assert!(r.valid, "{r:?}");
    assert_eq!(r.f0.as_ref().map(Vec::len), Some(2));
}

#[test]
fn mutations_name_the_failed_condition() {
    // trivial τ: F_0 = F
    let mut t = kp8_triple();
    t.tau = TauTable::trivial(2, 4, 4);
    assert_eq!(failed(&validate_triple(&t)), Some(TripleCondition::IndexTwo));

    // Z_2³ has no nondegenerate cocycle, but the rest is a Hopf algebra
    let t = z2_triple(AbGroup::new(vec![2, 2, 2]).unwrap(), &[1, 0, 0], 2);
    let r = validate_triple(&t);
    assert_eq!(failed(&r), Some(TripleCondition::TauNondegenerate), "{r:?}");
    assert!(r.first_failure().unwrap().detail.as_ref().unwrap().contains("degenerate"));

    // τ_b made trivial on E_16: the class map is no longer compatible
    let mut t = e16_triple();
    t.tau = TauTable::from_fn(4, 4, 4, |x, s, u| if x == 3 { crate::corpus::kp_exponent(s, u, 4) } else { 0 });
    let r = validate_triple(&t);
    assert!(!r.valid);
    assert_eq!(failed(&r), Some(TripleCondition::HopfAxioms));
    assert!(r.conditions.iter().any(|c| c.status == Status::Skipped));

    // matrices that do not form an action
    let mut t = kp8_triple();
    t.action.maps[1] = vec![vec![1, 1], vec![1, 0]];
    t.action.maps[0] = vec![vec![0, 1], vec![1, 0]];
    assert_eq!(failed(&validate_triple(&t)), Some(TripleCondition::ActionValid));
}

#[test]
fn construction_of_corpus_triples() {
    let c = construct_from_triple(&kp8_triple()).unwrap();
    assert_eq!(c.hopf.dim(), 8);
    assert_eq!(c.coalgebra_type.to_string(), "(1, 4; 2, 1)");
    let klein = AbGroup::new(vec![2, 2]).unwrap().to_fingroup();
    assert!(group_iso_test(&c.grouplikes.table, &klein).unwrap().is_some());

    let c = construct_from_triple(&e16_triple()).unwrap();
    assert_eq!(c.hopf.dim(), 16);
    assert_eq!(c.coalgebra_type.to_string(), "(1, 8; 2, 2)");
    let z2cubed = AbGroup::new(vec![2, 2, 2]).unwrap().to_fingroup();
    assert!(group_iso_test(&c.grouplikes.table, &z2cubed).unwrap().is_some());

    let mut bad = kp8_triple();
    bad.tau = TauTable::trivial(2, 4, 4);
    assert!(matches!(construct_from_triple(&bad), Err(crate::HopfError::Precondition(_))));
}

#[test]
fn enumeration_over_klein_and_z2() {
    let gamma = AbGroup::new(vec![2, 2]).unwrap();
    let f = FinGroup::cyclic(2);
    let action = AutAction::trivial(f.clone(), gamma.clone());
    let budget = EnumerationBudget::default();
    let e = enumerate_triples(&gamma, &f, &action, &budget).unwrap();
    assert!(!e.truncated);
    assert!(!e.triples.is_empty());
    assert_eq!(e.rejected, 0);
    for t in &e.triples {
        let c = construct_from_triple(t).unwrap();
        assert_eq!(c.coalgebra_type.to_string(), "(1, 4; 2, 1)");
    }
    assert_eq!(enumerate_triples(&gamma, &f, &action, &budget).unwrap(), e);
}

#[test]
fn cyclic_gamma_gives_nothing() {
    let budget = EnumerationBudget::default();
    for gamma in [AbGroup::cyclic(2), AbGroup::cyclic(4), AbGroup::cyclic(6)] {
        for f in [FinGroup::cyclic(2), FinGroup::cyclic(4), AbGroup::new(vec![2, 2]).unwrap().to_fingroup()] {
            for action in enumerate_actions(&f, &gamma) {
                let e = enumerate_triples(&gamma, &f, &action, &budget).unwrap();
                assert!(e.triples.is_empty());
                assert_eq!(e.admissible, 0);
            }
        }
    }
}

#[test]
fn enumeration_budget_is_enforced() {
    let gamma = AbGroup::new(vec![2, 2]).unwrap();
    let f = FinGroup::cyclic(2);
    let action = AutAction::trivial(f.clone(), gamma.clone());
    let tight = EnumerationBudget {
        max_order: 4,
        ..EnumerationBudget::default()
    };
    assert!(enumerate_triples(&gamma, &f, &action, &tight).is_err());
    let tight = EnumerationBudget {
        max_crossed_homs: 1,
        ..EnumerationBudget::default()
    };
    assert!(enumerate_triples(&gamma, &f, &action, &tight).unwrap().truncated);
}

#[test]
fn tambara_data_of_kp8() {
    let ty = ty_specialize(&kp8_triple()).unwrap();
    assert!(ty.valid, "{:?}", ty.checks);
    assert_eq!(ty.t, vec![vec![1, 0], vec![0, 1]]);
    assert!(ty.chi_form.is_symmetric());
    assert_eq!(ty.chi_form.radical().len(), 1);
}

#[test]
fn tambara_rejections() {
    // Z_4 carries no nondegenerate cocycle
    let gamma = AbGroup::cyclic(4);
    let f = FinGroup::cyclic(2);
    let t = ClassTriple {
        action: AutAction::new(f.clone(), gamma.clone(), vec![vec![vec![1]], vec![vec![3]]]).unwrap(),
        sigma: SigmaTable::trivial(4, 2, 4),
        tau: TauTable::trivial(2, 4, 4),
        gamma,
        f,
        modulus: 4,
    };
    assert_eq!(ty_specialize(&t).unwrap().first_failure(), Some("xi_nondegenerate"));

    // on Z_3² with T = 1, T*ξ·ξ = ξ² is not a coboundary
    let t = z2_triple(AbGroup::new(vec![3, 3]).unwrap(), &[1], 3);
    let ty = ty_specialize(&t).unwrap();
    assert!(!ty.valid);
    assert_eq!(ty.first_failure(), Some("t_star_xi_inverse"));

    let mut t = kp8_triple();
    t.sigma = SigmaTable::from_fn(4, 2, 4, |s, x, y| (s * x * y) as i64 * 2);
    assert!(matches!(ty_specialize(&t), Err(crate::HopfError::Precondition(_))));
    assert!(ty_specialize(&e16_triple()).is_err());
}
