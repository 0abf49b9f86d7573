//! JSON input documents describing an extension datum or a
//! classification triple.

use serde::{Deserialize, Serialize};

use hopfext::bicrossed::ExtensionData;
use hopfext::classify::ClassTriple;
use hopfext::cocycle::{SigmaTable, TauTable};
use hopfext::groups::{AbGroup, AutAction, FinGroup, MatchedPair};

use crate::CliError;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    #[default]
    Extension,
    Triple,
}

/// The group `F`, given by a Cayley table or by a shorthand.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum GroupSpec {
    /// `table[a][b] = a·b`.
    Table(Vec<Vec<u32>>),
    /// `Z_n` with elements `0..n` under addition.
    Cyclic(u32),
    /// Abelian group with these invariant factors, elements in
    /// mixed-radix order.
    Abelian(Vec<u32>),
}

impl GroupSpec {
    pub fn build(&self) -> Result<FinGroup, CliError> {
        match self {
            GroupSpec::Table(rows) => FinGroup::from_table(rows.clone()).map_err(|e| CliError::input("f.table", e)),
            GroupSpec::Cyclic(0) => Err(CliError::Input("f.cyclic: order must be positive".into())),
            GroupSpec::Cyclic(n) => Ok(FinGroup::cyclic(*n as usize)),
            GroupSpec::Abelian(orders) => abelian(orders, "f.abelian").map(|a| a.to_fingroup()),
        }
    }
}

/// An input document. Absent tables default to trivial ones; `modulus`
/// defaults to `|A|·|F|`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InputDocument {
    #[serde(default)]
    pub mode: Mode,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub description: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub modulus: Option<u32>,
    /// Invariant factors of `A` (extension) or `Γ` (triple).
    pub a: Vec<u32>,
    pub f: GroupSpec,
    /// `left[s][x] = s ◁ x`; extension mode only.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub left: Option<Vec<Vec<u32>>>,
    /// `right[s][x] = s ▷ x`; extension mode only.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub right: Option<Vec<Vec<u32>>>,
    /// One integer matrix per element of `F`; triple mode only.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub action: Option<Vec<Vec<Vec<u32>>>>,
    /// `sigma[s][x][y]`, exponents of `ζ_N`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sigma: Option<Vec<Vec<Vec<u32>>>>,
    /// `tau[x][s][t]`, exponents of `ζ_N`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tau: Option<Vec<Vec<Vec<u32>>>>,
}

/// A parsed and validated document.
#[derive(Clone, Debug)]
pub enum Datum {
    Extension(ExtensionData),
    Triple(ClassTriple),
}

fn abelian(orders: &[u32], path: &str) -> Result<AbGroup, CliError> {
    if orders.contains(&0) {
        return Err(CliError::Input(format!("{path}: orders must be positive")));
    }
    AbGroup::new(orders.to_vec()).map_err(|e| {
        let hint = AbGroup::from_factors(orders);
        CliError::Input(format!(
            "{path}: {e}; invariant-factor form of this group is {:?}",
            hint.invariants()
        ))
    })
}

fn check_table(rows: &[Vec<u32>], n_rows: usize, n_cols: usize, bound: usize, path: &str) -> Result<(), CliError> {
    if rows.len() != n_rows {
        return Err(CliError::Input(format!("{path}: {} rows, expected {n_rows}", rows.len())));
    }
    for (i, row) in rows.iter().enumerate() {
        if row.len() != n_cols {
            return Err(CliError::Input(format!("{path}[{i}]: {} entries, expected {n_cols}", row.len())));
        }
        if let Some((j, v)) = row.iter().enumerate().find(|(_, &v)| v as usize >= bound) {
            return Err(CliError::Input(format!("{path}[{i}][{j}] = {v} is out of range 0..{bound}")));
        }
    }
    Ok(())
}

fn check_exponents(t: &[Vec<Vec<u32>>], dims: [usize; 3], modulus: u32, path: &str) -> Result<(), CliError> {
    if t.len() != dims[0] {
        return Err(CliError::Input(format!("{path}: {} entries, expected {}", t.len(), dims[0])));
    }
    for (i, block) in t.iter().enumerate() {
        check_table(block, dims[1], dims[2], modulus as usize, &format!("{path}[{i}]"))?;
    }
    Ok(())
}

impl InputDocument {
    /// Parse a JSON document; syntax errors carry line and column.
    pub fn parse(text: &str) -> Result<InputDocument, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::Input(format!("malformed document: {e}")))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents serialize")
    }

    fn group_a(&self) -> Result<AbGroup, CliError> {
        abelian(&self.a, "a")
    }

    fn resolved_modulus(&self, a: &AbGroup, f: &FinGroup) -> Result<u32, CliError> {
        match self.modulus {
            Some(0) => Err(CliError::Input("modulus must be positive".into())),
            Some(n) => Ok(n),
            None => Ok((a.order() * f.order()) as u32),
        }
    }

    /// Validate shapes and ranges and build the datum.
    pub fn to_datum(&self) -> Result<Datum, CliError> {
        let a = self.group_a()?;
        let f = self.f.build()?;
        let n = self.resolved_modulus(&a, &f)?;
        let (na, nf) = (a.order(), f.order());
        if let Some(s) = &self.sigma {
            check_exponents(s, [na, nf, nf], n, "sigma")?;
        }
        if let Some(t) = &self.tau {
            check_exponents(t, [nf, na, na], n, "tau")?;
        }
        let sigma = match &self.sigma {
            Some(s) => SigmaTable::from_nested(s, na, nf, n).map_err(|e| CliError::input("sigma", e))?,
            None => SigmaTable::trivial(na, nf, n),
        };
        let tau = match &self.tau {
            Some(t) => TauTable::from_nested(t, nf, na, n).map_err(|e| CliError::input("tau", e))?,
            None => TauTable::trivial(nf, na, n),
        };
        match self.mode {
            Mode::Extension => {
                if self.action.is_some() {
                    return Err(CliError::Input("action: only allowed in triple mode".into()));
                }
                let mut mp = MatchedPair::trivial(a.to_fingroup(), f);
                if let Some(left) = &self.left {
                    check_table(left, na, nf, na, "left")?;
                    mp.left = left.clone();
                }
                if let Some(right) = &self.right {
                    check_table(right, na, nf, nf, "right")?;
                    mp.right = right.clone();
                }
                ExtensionData::new(a, mp, sigma, tau)
                    .map(Datum::Extension)
                    .map_err(|e| CliError::input("datum", e))
            }
            Mode::Triple => {
                if self.left.is_some() || self.right.is_some() {
                    return Err(CliError::Input("left/right: not allowed in triple mode; use action".into()));
                }
                let r = a.rank();
                let maps = match &self.action {
                    Some(maps) => {
                        if maps.len() != nf {
                            return Err(CliError::Input(format!(
                                "action: {} matrices, expected {nf}",
                                maps.len()
                            )));
                        }
                        for (x, m) in maps.iter().enumerate() {
                            check_table(m, r, r, u32::MAX as usize, &format!("action[{x}]"))?;
                        }
                        maps.clone()
                    }
                    None => AutAction::trivial(f.clone(), a.clone()).maps,
                };
                // Action validity is a checked condition of the triple, not a
                // parse error.
                let action = AutAction {
                    actor: f.clone(),
                    target: a.clone(),
                    maps,
                };
                Ok(Datum::Triple(ClassTriple {
                    gamma: a,
                    f,
                    action,
                    sigma,
                    tau,
                    modulus: n,
                }))
            }
        }
    }

    /// The document of a triple, with `F` given by its table.
    pub fn from_triple(t: &ClassTriple, description: Option<String>) -> InputDocument {
        InputDocument {
            mode: Mode::Triple,
            description,
            modulus: Some(t.modulus),
            a: t.gamma.invariants().to_vec(),
            f: GroupSpec::Table(t.f.rows()),
            left: None,
            right: None,
            action: Some(t.action.maps.clone()),
            sigma: (!t.sigma.is_trivial()).then(|| t.sigma.to_nested()),
            tau: (!t.tau.is_trivial()).then(|| t.tau.to_nested()),
        }
    }

    /// The document of an extension datum, with `F` given by its table.
    pub fn from_extension(d: &ExtensionData, description: Option<String>) -> InputDocument {
        InputDocument {
            mode: Mode::Extension,
            description,
            modulus: Some(d.modulus),
            a: d.a.invariants().to_vec(),
            f: GroupSpec::Table(d.mp.f.rows()),
            left: (!d.mp.left_is_trivial()).then(|| d.mp.left.clone()),
            right: (!d.mp.right_is_trivial()).then(|| d.mp.right.clone()),
            action: None,
            sigma: (!d.sigma.is_trivial()).then(|| d.sigma.to_nested()),
            tau: (!d.tau.is_trivial()).then(|| d.tau.to_nested()),
        }
    }
}
