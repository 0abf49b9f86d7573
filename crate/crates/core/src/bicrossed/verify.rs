use serde::{Deserialize, Serialize};

use super::structure::{BicrossedHopf, RootSums};

/// One of the checked bialgebra axioms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Axiom {
    Associativity,
    Unit,
    Coassociativity,
    Counit,
    ComultMultiplicative,
    CounitMultiplicative,
    Antipode,
}

impl Axiom {
    pub fn name(self) -> &'static str {
        match self {
            Axiom::Associativity => "associativity",
            Axiom::Unit => "unit",
            Axiom::Coassociativity => "coassociativity",
            Axiom::Counit => "counit",
            Axiom::ComultMultiplicative => "comultiplication is multiplicative",
            Axiom::CounitMultiplicative => "counit is multiplicative",
            Axiom::Antipode => "antipode",
        }
    }
}

impl std::fmt::Display for Axiom {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// Failing basis elements and the coordinate where the two sides differ.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub basis: Vec<usize>,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomResult {
    pub axiom: Axiom,
    pub passed: bool,
    pub witness: Option<Witness>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BialgebraReport {
    pub results: Vec<AxiomResult>,
}

impl BialgebraReport {
    pub fn passed(&self) -> bool {
        self.results.iter().all(|r| r.passed)
    }

    pub fn first_failure(&self) -> Option<&AxiomResult> {
        self.results.iter().find(|r| !r.passed)
    }
}

fn result(axiom: Axiom, witness: Option<Witness>) -> AxiomResult {
    AxiomResult {
        axiom,
        passed: witness.is_none(),
        witness,
    }
}

fn witness(basis: Vec<usize>, detail: String) -> Option<Witness> {
    Some(Witness { basis, detail })
}

/// Check every bialgebra axiom exhaustively on basis elements.
pub fn verify_bialgebra(h: &BicrossedHopf) -> BialgebraReport {
    BialgebraReport {
        results: vec![
            result(Axiom::Associativity, check_associativity(h)),
            result(Axiom::Unit, check_unit(h)),
            result(Axiom::Coassociativity, check_coassociativity(h)),
            result(Axiom::Counit, check_counit(h)),
            result(Axiom::ComultMultiplicative, check_comult_multiplicative(h)),
            result(Axiom::CounitMultiplicative, check_counit_multiplicative(h)),
        ],
    }
}

fn check_associativity(h: &BicrossedHopf) -> Option<Witness> {
    let dim = h.dim();
    for i in 0..dim {
        for j in 0..dim {
            let ij = h.mult_basis(i, j);
            for k in 0..dim {
                let lhs = ij.and_then(|(m, c)| h.mult_basis(m, k).map(|(p, d)| (p, c + d)));
                let rhs = h
                    .mult_basis(j, k)
                    .and_then(|(m, c)| h.mult_basis(i, m).map(|(p, d)| (p, c + d)));
                let n = h.modulus();
                if lhs.map(|(p, c)| (p, c % n)) != rhs.map(|(p, c)| (p, c % n)) {
                    return witness(vec![i, j, k], format!("(e_i e_j) e_k = {lhs:?}, e_i (e_j e_k) = {rhs:?}"));
                }
            }
        }
    }
    None
}

fn check_unit(h: &BicrossedHopf) -> Option<Witness> {
    for i in 0..h.dim() {
        for left in [true, false] {
            let mut sums = RootSums::new(h.modulus());
            for &u in h.unit_terms() {
                let p = if left { h.mult_basis(u, i) } else { h.mult_basis(i, u) };
                if let Some((m, c)) = p {
                    sums.add(m, c, 1);
                }
            }
            sums.add(i, 0, -1);
            if let Some(m) = sums.first_nonzero() {
                let side = if left { "1·e_i" } else { "e_i·1" };
                return witness(vec![i], format!("{side} differs from e_i at coordinate {m}"));
            }
        }
    }
    None
}

fn check_coassociativity(h: &BicrossedHopf) -> Option<Witness> {
    for k in 0..h.dim() {
        let mut sums = RootSums::new(h.modulus());
        for (i, j, c) in h.comult_basis(k) {
            for (p, q, d) in h.comult_basis(i) {
                sums.add((p, q, j), c + d, 1);
            }
            for (p, q, d) in h.comult_basis(j) {
                sums.add((i, p, q), c + d, -1);
            }
        }
        if let Some(t) = sums.first_nonzero() {
            return witness(vec![k], format!("(Δ⊗id)Δ and (id⊗Δ)Δ differ at {t:?}"));
        }
    }
    None
}

fn check_counit(h: &BicrossedHopf) -> Option<Witness> {
    for k in 0..h.dim() {
        let mut left = RootSums::new(h.modulus());
        let mut right = RootSums::new(h.modulus());
        for (i, j, c) in h.comult_basis(k) {
            if h.counit_basis(i) {
                left.add(j, c, 1);
            }
            if h.counit_basis(j) {
                right.add(i, c, 1);
            }
        }
        left.add(k, 0, -1);
        right.add(k, 0, -1);
        if let Some(m) = left.first_nonzero() {
            return witness(vec![k], format!("(ε⊗id)Δ(e_k) differs from e_k at coordinate {m}"));
        }
        if let Some(m) = right.first_nonzero() {
            return witness(vec![k], format!("(id⊗ε)Δ(e_k) differs from e_k at coordinate {m}"));
        }
    }
    None
}

fn check_comult_multiplicative(h: &BicrossedHopf) -> Option<Witness> {
    let dim = h.dim();
    // Δ(1) = 1 ⊗ 1
    let mut sums = RootSums::new(h.modulus());
    for &u in h.unit_terms() {
        for (i, j, c) in h.comult_basis(u) {
            sums.add((i, j), c, 1);
        }
    }
    for &u in h.unit_terms() {
        for &v in h.unit_terms() {
            sums.add((u, v), 0, -1);
        }
    }
    if let Some(t) = sums.first_nonzero() {
        return witness(vec![], format!("Δ(1) differs from 1⊗1 at {t:?}"));
    }
    for i in 0..dim {
        for j in 0..dim {
            let mut sums = RootSums::new(h.modulus());
            if let Some((m, c)) = h.mult_basis(i, j) {
                for (p, q, d) in h.comult_basis(m) {
                    sums.add((p, q), c + d, 1);
                }
            }
            for (p1, q1, c1) in h.comult_basis(i) {
                for (p2, q2, c2) in h.comult_basis(j) {
                    if let (Some((p, a)), Some((q, b))) = (h.mult_basis(p1, p2), h.mult_basis(q1, q2)) {
                        sums.add((p, q), c1 + c2 + a + b, -1);
                    }
                }
            }
            if let Some(t) = sums.first_nonzero() {
                return witness(vec![i, j], format!("Δ(e_i e_j) and Δ(e_i)Δ(e_j) differ at {t:?}"));
            }
        }
    }
    None
}

fn check_counit_multiplicative(h: &BicrossedHopf) -> Option<Witness> {
    let unit_count = h.unit_terms().iter().filter(|&&u| h.counit_basis(u)).count();
    if unit_count != 1 {
        return witness(vec![], format!("ε(1) = {unit_count}"));
    }
    for i in 0..h.dim() {
        for j in 0..h.dim() {
            let lhs = h.mult_basis(i, j).filter(|&(m, _)| h.counit_basis(m));
            let rhs = h.counit_basis(i) && h.counit_basis(j);
            let ok = match lhs {
                Some((_, c)) => rhs && c % h.modulus() == 0,
                None => !rhs,
            };
            if !ok {
                return witness(vec![i, j], "ε(e_i e_j) ≠ ε(e_i)ε(e_j)".to_string());
            }
        }
    }
    None
}

/// Whether `π(h₁) ⊗ h₂ = π(h₂) ⊗ h₁` for every basis element, where
/// `π(e_s # x) = [s = 1]·x`. Returns the first failing basis index.
pub fn cocentral_witness(h: &BicrossedHopf) -> Option<usize> {
    let e = h.data.mp.gamma.identity();
    for k in 0..h.dim() {
        let mut sums = RootSums::new(h.modulus());
        for (i, j, c) in h.comult_basis(k) {
            let (si, xi) = h.pair(i);
            let (sj, xj) = h.pair(j);
            if si == e {
                sums.add((xi, j), c, 1);
            }
            if sj == e {
                sums.add((xj, i), c, -1);
            }
        }
        if sums.first_nonzero().is_some() {
            return Some(k);
        }
    }
    None
}

pub fn is_cocentral(h: &BicrossedHopf) -> bool {
    cocentral_witness(h).is_none()
}

/// Check `Δ(I_x) ⊆ H ⊗ I_x` and `I_x I_y ⊆ I_{xy}` for `I_x = k^A # x`.
pub fn check_fiber_structure(h: &BicrossedHopf) -> Option<Witness> {
    let f = &h.data.mp.f;
    for k in 0..h.dim() {
        let (_, x) = h.pair(k);
        if let Some((_, j, _)) = h.comult_basis(k).find(|&(_, j, _)| h.pair(j).1 != x) {
            return witness(vec![k, j], "Δ(I_x) not contained in H ⊗ I_x".into());
        }
    }
    for i in 0..h.dim() {
        for j in 0..h.dim() {
            if let Some((m, _)) = h.mult_basis(i, j) {
                if h.pair(m).1 != f.mul(h.pair(i).1, h.pair(j).1) {
                    return witness(vec![i, j], "I_x I_y not contained in I_xy".into());
                }
            }
        }
    }
    None
}
