use super::*;
use crate::bicrossed::VerifiedHopf;
use crate::corpus;
use crate::exactarith::{nullspace_cyclo, CycloNum, RootExp};

fn dense(m: &MonomialMatrix) -> Vec<Vec<CycloNum>> {
    let k = m.modulus;
    let mut out = vec![vec![CycloNum::zero(k); m.dim()]; m.dim()];
    for (c, e) in m.cols.iter().enumerate() {
        if let Some((r, e)) = *e {
            out[r as usize][c] = CycloNum::from_root(k, RootExp::new(k, e as i64)).unwrap();
        }
    }
    out
}

/// dim Hom_{H*}(V, W), by solving `ρ_W(f) X = X ρ_V(f)` for every `f`.
fn hom_dim(v: &SimpleComodule, w: &SimpleComodule) -> usize {
    let k = v.modulus;
    let (dv, dw) = (v.dim, w.dim);
    let unknown = |r: usize, q: usize| r * dv + q;
    let mut rows = Vec::new();
    for (mv, mw) in v.matrices.iter().zip(&w.matrices) {
        let (a, b) = (dense(mw), dense(mv));
        for p in 0..dw {
            for q in 0..dv {
                let mut row = vec![CycloNum::zero(k); dv * dw];
                for r in 0..dw {
                    row[unknown(r, q)] += &a[p][r];
                }
                for r in 0..dv {
                    row[unknown(p, r)] -= &b[r][q];
                }
                if row.iter().any(|x| !x.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    nullspace_cyclo(&rows, dv * dw, k).len()
}

fn hopf(name: &str) -> VerifiedHopf {
    let (_, data) = corpus::all().into_iter().find(|(n, _)| *n == name).unwrap();
    VerifiedHopf::from_data(data).unwrap()
}

#[test]
fn simples_are_pairwise_nonisomorphic_irreducible_comodules() {
    for (name, data) in corpus::all() {
        let h = VerifiedHopf::from_data(data).unwrap();
        let simples = clifford_simples(&h).unwrap();
        for s in &simples {
            assert!(check_comodule(&h, s).passed, "{name}: {:?}", check_comodule(&h, s));
            assert_eq!(hom_dim(s, s), 1, "{name}: simple {} is not irreducible", s.label);
        }
        for (i, s) in simples.iter().enumerate() {
            for t in &simples[i + 1..] {
                if s.dim == t.dim {
                    assert_eq!(hom_dim(s, t), 0, "{name}: isomorphic simples");
                }
            }
        }
    }
}

#[test]
fn coalgebra_types() {
    let expect = [
        ("E_triv", "(1, 4)"),
        ("E_KP8", "(1, 4; 2, 1)"),
        ("E_16", "(1, 8; 2, 2)"),
        ("S3_conjugation", "(1, 6)"),
        ("S3_dual", "(1, 2; 2, 1)"),
        ("sigma_twisted_8", "(1, 8)"),
    ];
    for (name, ty) in expect {
        let h = hopf(name);
        let simples = clifford_simples(&h).unwrap();
        assert_eq!(coalgebra_type(&simples).to_string(), ty, "{name}");
    }
}

#[test]
fn duals_are_an_involution_preserving_degree() {
    for (name, data) in corpus::all() {
        let h = VerifiedHopf::from_data(data).unwrap();
        let ring = CharacterRing::new(&h).unwrap();
        for i in 0..ring.len() {
            assert_eq!(ring.duals[ring.duals[i]], i, "{name}");
            assert_eq!(ring.degrees[ring.duals[i]], ring.degrees[i], "{name}");
        }
    }
}

#[test]
fn kp8_fusion() {
    let h = hopf("E_KP8");
    let ring = CharacterRing::new(&h).unwrap();
    let rules = ring.fusion_rules(&h).unwrap();
    let x = (0..ring.len()).find(|&i| ring.degrees[i] == 2).unwrap();
    let xx = rules.constituents(x, x);
    assert_eq!(xx.len(), 4);
    assert!(xx.iter().all(|&(k, m)| ring.degrees[k] == 1 && m == 1));
    for g in ring.grouplike_chars.iter() {
        assert_eq!(rules.constituents(*g, x), vec![(x, 1)]);
    }
    // degree is multiplicative on products
    for i in 0..ring.len() {
        for j in 0..ring.len() {
            let total: usize = rules.constituents(i, j).iter().map(|&(k, m)| ring.degrees[k] * m as usize).sum();
            assert_eq!(total, ring.degrees[i] * ring.degrees[j]);
        }
    }
}

#[test]
fn ty_rules_on_corpus() {
    for name in ["E_KP8", "E_16"] {
        let h = hopf(name);
        let ring = CharacterRing::new(&h).unwrap();
        let report = verify_ty_rules(&h, &ring).unwrap();
        assert!(report.passed, "{name}: {:?}", report.failures);
        assert_eq!(report.degree, Some(2));
        assert_eq!(report.stabilizer_invariants, Some(vec![2, 2]));
    }
    let h = hopf("E_triv");
    let ring = CharacterRing::new(&h).unwrap();
    assert!(verify_ty_rules(&h, &ring).is_err());
    let h = hopf("S3_dual");
    let ring = CharacterRing::new(&h).unwrap();
    assert!(matches!(verify_ty_rules(&h, &ring), Err(crate::HopfError::Precondition(_))));
}

#[test]
fn common_stabilizer_is_normal_by_characters() {
    for name in ["E_KP8", "E_16"] {
        let h = hopf(name);
        let ring = CharacterRing::new(&h).unwrap();
        let report = verify_ty_rules(&h, &ring).unwrap();
        let basis: Vec<_> = report
            .common_stabilizer
            .iter()
            .map(|&g| ring.characters[ring.grouplike_chars[g]].clone())
            .collect();
        let verdict = normality_chardual(&h, &ring, &basis, &report.noninvertible).unwrap();
        assert!(verdict.normal, "{name}: {:?}", verdict.witness);
        for &x in &report.noninvertible {
            assert!(normality_alternativo(&h, &ring, x).unwrap().normal);
        }
    }
}

#[test]
fn non_normal_subgroup_algebra_is_rejected() {
    let h = hopf("S3_conjugation");
    let ring = CharacterRing::new(&h).unwrap();
    let g = &ring.grouplikes;
    let t = (0..g.order()).find(|&i| g.table.element_order(i) == 2).unwrap();
    let basis = vec![
        ring.characters[ring.grouplike_chars[g.identity()]].clone(),
        ring.characters[ring.grouplike_chars[t]].clone(),
    ];
    let all: Vec<usize> = (0..ring.len()).collect();
    let verdict = normality_chardual(&h, &ring, &basis, &all).unwrap();
    assert!(!verdict.normal);
    assert!(verdict.witness.is_some());
    // generators that do not generate H are rejected
    assert!(normality_chardual(&h, &ring, &basis, &[ring.grouplike_chars[t]]).is_err());
}

#[test]
fn alternativo_fails_when_stabilizer_is_small() {
    let h = hopf("S3_dual");
    let ring = CharacterRing::new(&h).unwrap();
    let x = (0..ring.len()).find(|&i| ring.degrees[i] == 2).unwrap();
    let v = normality_alternativo(&h, &ring, x).unwrap();
    assert!(!v.normal);
    assert!(v.witness.unwrap().contains("|G["));
    for &g in &ring.grouplike_chars {
        assert!(normality_alternativo(&h, &ring, g).unwrap().normal);
    }
}

#[test]
fn linear_characters_are_grouplikes() {
    for (name, data) in corpus::all() {
        let h = VerifiedHopf::from_data(data).unwrap();
        let ring = CharacterRing::new(&h).unwrap();
        let f0 = crate::cocycle::compute_f0(&h.data.tau, &h.data.mp).unwrap();
        let linear = ring.degrees.iter().filter(|&&d| d == 1).count();
        assert_eq!(linear, f0.len() * h.a_order(), "{name}");
    }
}
