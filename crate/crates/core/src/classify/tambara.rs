use serde::{Deserialize, Serialize};

use super::triple::ClassTriple;
use crate::cocycle::{alternating_form, coboundary_solve, is_nondegenerate, Bichar, Cocycle};
use crate::error::{HopfError, Result};
use crate::groups::{apply_matrix, transpose_matrix};

/// Tambara–Yamagami data extracted from a triple with `|F| = 2`.
///
/// `t` is the action matrix of the nontrivial element on `Γ`; `xi` is
/// `τ` at that element, a cocycle on the index group, on which the
/// element acts by the transposed matrix `T'`. `chi_form(a, b)` is
/// `α(a, T' b)` for the alternating form `α` of `ξ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TyInvariant {
    pub t: Vec<Vec<u32>>,
    pub xi: Cocycle,
    pub chi_form: Bichar,
    pub checks: Vec<TyCheck>,
    pub valid: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TyCheck {
    pub name: String,
    pub passed: bool,
}

impl TyInvariant {
    pub fn first_failure(&self) -> Option<&str> {
        self.checks.iter().find(|c| !c.passed).map(|c| c.name.as_str())
    }
}

/// Extract `(T, ξ, χ)` and check: `ξ` nondegenerate, `T² = 1`,
/// `T*ξ` cohomologous to `ξ⁻¹`, `χ` symmetric and nondegenerate.
///
/// Requires `|F| = 2` and `σ ≡ 1`.
pub fn ty_specialize(t: &ClassTriple) -> Result<TyInvariant> {
    if t.f.order() != 2 {
        return Err(HopfError::Precondition(format!("|F| = {}, expected 2", t.f.order())));
    }
    if !t.sigma.is_trivial() {
        return Err(HopfError::Precondition("σ is not trivial; normalize σ first".into()));
    }
    let a = &t.gamma;
    let ag = a.to_fingroup();
    let x = 1 - t.f.identity();
    let tmat = t.action.maps[x].clone();
    let tt = transpose_matrix(a, &tmat);
    let act = |s: usize| apply_matrix(a, &tt, s);
    let xi = t.tau.component(x, &ag);
    let k = t.modulus * a.exponent();

    let nondegenerate = is_nondegenerate(&xi);
    let involution = (0..a.order()).all(|s| act(act(s)) == s);
    let pulled = Cocycle::from_fn(ag.clone(), t.modulus, |g, h| xi.exp(act(g), act(h)) as i64);
    let product = pulled.mul(&xi)?.embed(k)?;
    let inverse_class = coboundary_solve(&product).is_some();

    let alpha = alternating_form(&xi)?;
    let n = a.order();
    let values: Vec<u32> = (0..n * n).map(|i| alpha.exp(i / n, act(i % n))).collect();
    let chi_form = Bichar {
        group: alpha.group.clone(),
        modulus: alpha.modulus,
        values,
    };
    let symmetric = chi_form.is_symmetric();
    let chi_nondegenerate = chi_form.radical().len() == 1;

    let checks: Vec<TyCheck> = [
        ("xi_nondegenerate", nondegenerate),
        ("t_involution", involution),
        ("t_star_xi_inverse", inverse_class),
        ("chi_symmetric", symmetric),
        ("chi_nondegenerate", chi_nondegenerate),
    ]
    .into_iter()
    .map(|(name, passed)| TyCheck {
        name: name.into(),
        passed,
    })
    .collect();
    let valid = checks.iter().all(|c| c.passed);
    Ok(TyInvariant {
        t: tmat,
        xi,
        chi_form,
        checks,
        valid,
    })
}
