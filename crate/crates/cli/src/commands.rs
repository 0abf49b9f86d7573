//! Dispatch of the subcommands onto the library.

use serde_json::json;

use hopfext::bicrossed::{
    grouplikes_oracle, grouplikes_structural, is_cocentral, solve_antipode, verify_bialgebra,
    BicrossedHopf, ExtensionData, GrouplikeSet, VerifiedHopf, Witness,
};
use hopfext::classify::{
    construct_from_triple_with_limit, enumerate_triples, ty_specialize, validate_triple, ClassTriple,
    EnumerationBudget, Status, EQUIVALENCE_NOTE,
};
use hopfext::cocycle::compute_f0;
use hopfext::comodrep::{clifford_simples_with_limit, coalgebra_type, verify_ty_rules, CharacterRing};
use hopfext::groups::{AutAction, FinGroup, ISO_ORDER_LIMIT};
use hopfext::HopfError;

use crate::document::{Datum, InputDocument};
use crate::report::{Check, Report};
use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Command {
    Verify,
    Grouplikes,
    Type,
    Fusion,
    Classify,
    Ty,
    Enumerate,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Verify => "verify",
            Command::Grouplikes => "grouplikes",
            Command::Type => "type",
            Command::Fusion => "fusion",
            Command::Classify => "classify",
            Command::Ty => "ty",
            Command::Enumerate => "enumerate",
        }
    }
}

/// Tunable limits and overrides.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Flags {
    /// Re-express all cocycle values in `μ_M` for this multiple `M` of
    /// the document modulus.
    pub modulus: Option<u32>,
    /// Largest dimension for the group-like oracle and for Clifford
    /// simples of non-singleton orbits.
    pub max_dim: usize,
    /// Order limit for the isomorphism test in `classify`.
    pub iso_limit: usize,
    pub budget: EnumerationBudget,
}

impl Default for Flags {
    fn default() -> Self {
        Flags {
            modulus: None,
            max_dim: 32,
            iso_limit: ISO_ORDER_LIMIT,
            budget: EnumerationBudget::default(),
        }
    }
}

fn embed_extension(d: ExtensionData, m: u32) -> Result<ExtensionData, CliError> {
    let sigma = d.sigma.embed(m).map_err(|e| CliError::input("--modulus", e))?;
    let tau = d.tau.embed(m).map_err(|e| CliError::input("--modulus", e))?;
    ExtensionData::new(d.a, d.mp, sigma, tau).map_err(|e| CliError::input("--modulus", e))
}

fn embed_triple(mut t: ClassTriple, m: u32) -> Result<ClassTriple, CliError> {
    t.sigma = t.sigma.embed(m).map_err(|e| CliError::input("--modulus", e))?;
    t.tau = t.tau.embed(m).map_err(|e| CliError::input("--modulus", e))?;
    t.modulus = m;
    Ok(t)
}

fn apply_flags(datum: Datum, flags: &Flags) -> Result<Datum, CliError> {
    Ok(match (datum, flags.modulus) {
        (d, None) => d,
        (Datum::Extension(d), Some(m)) => Datum::Extension(embed_extension(d, m)?),
        (Datum::Triple(t), Some(m)) => Datum::Triple(embed_triple(t, m)?),
    })
}

fn extension_of(datum: Datum) -> Result<ExtensionData, CliError> {
    match datum {
        Datum::Extension(d) => Ok(d),
        Datum::Triple(t) => t.extension_data().map_err(|e| CliError::input("triple", e)),
    }
}

fn triple_of(datum: Datum, cmd: Command) -> Result<ClassTriple, CliError> {
    match datum {
        Datum::Triple(t) => Ok(t),
        Datum::Extension(_) => Err(CliError::Input(format!(
            "{} needs a document with \"mode\": \"triple\"",
            cmd.name()
        ))),
    }
}

fn basis_name(h: &BicrossedHopf, i: usize) -> String {
    let (s, x) = h.pair(i);
    format!("e_{s}#{x}")
}

fn witness_text(h: &BicrossedHopf, w: &Witness) -> String {
    if w.basis.is_empty() {
        return w.detail.clone();
    }
    let names: Vec<String> = w.basis.iter().map(|&i| basis_name(h, i)).collect();
    format!("at ({}): {}", names.join(", "), w.detail)
}

/// Verify `H`, recording the axiom checks; `None` when some axiom fails.
fn verified(report: &mut Report, data: ExtensionData) -> Option<VerifiedHopf> {
    match VerifiedHopf::from_data(data.clone()) {
        Ok(h) => {
            report.check(Check::new("hopf_axioms", true, None));
            Some(h)
        }
        Err(f) => {
            let h = BicrossedHopf::build(data);
            let axiom = f.axiom();
            let detail = f
                .report
                .first_failure()
                .and_then(|r| r.witness.as_ref())
                .map(|w| witness_text(&h, w))
                .unwrap_or_default();
            report.check(Check::new("hopf_axioms", false, Some(format!("{axiom} fails {detail}"))));
            None
        }
    }
}

fn grouplike_artifact(g: &GrouplikeSet) -> serde_json::Value {
    let elements: Vec<_> = g
        .elements
        .iter()
        .map(|e| json!({ "x": e.x, "values": e.gamma }))
        .collect();
    json!({
        "modulus": g.modulus,
        "order": g.order(),
        "elements": elements,
        "table": g.table.rows(),
        "abelian_invariants": g.table.abelian_invariants(),
    })
}

fn group_name(g: &FinGroup) -> String {
    match g.abelian_invariants() {
        Some(inv) if inv.is_empty() => "trivial".into(),
        Some(inv) => inv.iter().map(|m| format!("Z{m}")).collect::<Vec<_>>().join(" x "),
        None => format!("non-abelian of order {}", g.order()),
    }
}

fn run_verify(r: &mut Report, data: ExtensionData) {
    let h = BicrossedHopf::build(data);
    let bialgebra = verify_bialgebra(&h);
    for a in &bialgebra.results {
        let w = a.witness.as_ref().map(|w| witness_text(&h, w));
        r.check(Check::new(a.axiom.name().replace(' ', "_"), a.passed, w));
    }
    r.artifact("dim", h.dim());
    r.artifact("modulus", h.modulus());
    r.artifact("cocentral", is_cocentral(&h));
    r.line(format!("dim H = {}, cocycles in μ_{}", h.dim(), h.modulus()));
    if !bialgebra.passed() {
        r.check(Check::skipped("antipode", "not a bialgebra"));
        return;
    }
    match solve_antipode(&h) {
        Some(s) => {
            r.check(Check::new("antipode", true, None));
            r.artifact("antipode_involutive", s.is_involutive());
            r.line(format!("antipode found; S² = id: {}", s.is_involutive()));
        }
        None => r.check(Check::new("antipode", false, Some("identity has no convolution inverse".into()))),
    }
}

fn run_grouplikes(r: &mut Report, data: ExtensionData, flags: &Flags) -> Result<(), CliError> {
    let Some(h) = verified(r, data) else { return Ok(()) };
    let g = grouplikes_structural(&h)?;
    let f0 = compute_f0(&h.data.tau, &h.data.mp)?;
    let expected = h.data.a.order() * f0.len();
    r.check(Check::new(
        "order_is_a_times_f0",
        g.order() == expected,
        Some(format!("|G(H)| = {}, |A|·|F_0| = {expected}", g.order())),
    ));
    if h.dim() <= flags.max_dim {
        let o = grouplikes_oracle(&h, flags.max_dim)?;
        r.check(Check::new(
            "oracle_agreement",
            o == g,
            Some(format!("oracle finds {} group-likes", o.order())),
        ));
    } else {
        r.check(Check::skipped("oracle_agreement", format!("dim {} > {}", h.dim(), flags.max_dim)));
    }
    r.artifact("f0", &f0);
    r.artifact("grouplikes", grouplike_artifact(&g));
    r.line(format!("G(H): order {}, {}", g.order(), group_name(&g.table)));
    r.line(format!("values are exponents of ζ_{} indexed by s in A", g.modulus));
    for (i, e) in g.elements.iter().enumerate() {
        let vals: Vec<String> = e.gamma.iter().map(u32::to_string).collect();
        r.line(format!("  g{i}: x = {}, values = ({})", e.x, vals.join(", ")));
    }
    r.line("multiplication table:");
    for row in g.table.rows() {
        let cells: Vec<String> = row.iter().map(|v| format!("{v:>2}")).collect();
        r.line(format!("  {}", cells.join(" ")));
    }
    Ok(())
}

fn run_type(r: &mut Report, data: ExtensionData, flags: &Flags) -> Result<(), CliError> {
    let Some(h) = verified(r, data) else { return Ok(()) };
    let simples = clifford_simples_with_limit(&h, flags.max_dim)?;
    let sum: usize = simples.iter().map(|s| s.dim * s.dim).sum();
    r.check(Check::new(
        "sum_of_squares",
        sum == h.dim(),
        Some(format!("Σ dim² = {sum}, dim H = {}", h.dim())),
    ));
    let ty = coalgebra_type(&simples);
    let list: Vec<_> = simples
        .iter()
        .map(|s| json!({ "orbit_rep": s.orbit_rep, "orbit": s.orbit, "label": s.label, "dim": s.dim }))
        .collect();
    r.artifact("coalgebra_type", ty.to_string());
    r.artifact("simples", list);
    r.line(format!("coalgebra type: {ty}"));
    Ok(())
}

fn run_fusion(r: &mut Report, data: ExtensionData, flags: &Flags) -> Result<(), CliError> {
    let Some(h) = verified(r, data) else { return Ok(()) };
    let ring = CharacterRing::with_limit(&h, flags.max_dim)?;
    let rules = match ring.fusion_rules(&h) {
        Ok(f) => {
            r.check(Check::new("fusion_rules", true, None));
            f
        }
        Err(e @ HopfError::Consistency(_)) => {
            r.check(Check::new("fusion_rules", false, Some(e.to_string())));
            return Ok(());
        }
        Err(e) => return Err(e.into()),
    };
    let n = ring.len();
    let mut products = Vec::new();
    for i in 0..n {
        for j in 0..n {
            products.push(json!({ "i": i, "j": j, "terms": rules.constituents(i, j) }));
        }
    }
    r.artifact("coalgebra_type", ring.coalgebra_type().to_string());
    r.artifact("degrees", &ring.degrees);
    r.artifact("duals", &ring.duals);
    r.artifact("grouplike_characters", &ring.grouplike_chars);
    r.artifact("products", products);
    r.line(format!("coalgebra type: {}", ring.coalgebra_type()));
    r.line(format!("degrees: {:?}", ring.degrees));
    for i in (0..n).filter(|&i| ring.degrees[i] > 1) {
        for j in (0..n).filter(|&j| ring.degrees[j] > 1) {
            let terms: Vec<String> = rules
                .constituents(i, j)
                .iter()
                .map(|(k, m)| if *m == 1 { format!("χ{k}") } else { format!("{m}·χ{k}") })
                .collect();
            r.line(format!("  χ{i} χ{j} = {}", terms.join(" + ")));
        }
    }
    if h.dim() == 2 * ring.grouplikes.order() {
        let ty = verify_ty_rules(&h, &ring)?;
        r.check(Check::new("ty_rules", ty.passed, Some(ty.failures.join("; "))));
        r.artifact("ty", &ty);
    } else {
        r.check(Check::skipped(
            "ty_rules",
            format!("dim H = {} is not 2|G(H)| = {}", h.dim(), 2 * ring.grouplikes.order()),
        ));
    }
    Ok(())
}

fn run_classify(r: &mut Report, t: ClassTriple, flags: &Flags) -> Result<(), CliError> {
    let report = validate_triple(&t);
    for c in &report.conditions {
        let check = match c.status {
            Status::Passed => Check::new(c.condition.name(), true, None),
            Status::Failed => Check::new(c.condition.name(), false, c.detail.clone()),
            Status::Skipped => Check::skipped(c.condition.name(), "earlier condition failed"),
        };
        r.check(check);
    }
    if let Some(f0) = &report.f0 {
        r.artifact("f0", f0);
    }
    if !report.valid {
        let f = report.first_failure().expect("invalid report names a condition");
        r.line(format!("invalid triple: {} fails", f.condition));
        return Ok(());
    }
    match construct_from_triple_with_limit(&t, flags.iso_limit) {
        Ok(c) => {
            r.check(Check::new("construction", true, None));
            r.artifact("dim", c.hopf.dim());
            r.artifact("degree", c.degree);
            r.artifact("coalgebra_type", c.coalgebra_type.to_string());
            r.artifact("grouplikes", grouplike_artifact(&c.grouplikes));
            r.line(format!(
                "dim H = {}, coalgebra type {}, G(H) of order {} ({})",
                c.hopf.dim(),
                c.coalgebra_type,
                c.grouplikes.order(),
                group_name(&c.grouplikes.table)
            ));
        }
        Err(e @ HopfError::LimitExceeded { .. }) => return Err(e.into()),
        Err(e) => r.check(Check::new("construction", false, Some(e.to_string()))),
    }
    Ok(())
}

fn run_ty(r: &mut Report, t: ClassTriple) -> Result<(), CliError> {
    let ty = ty_specialize(&t)?;
    for c in &ty.checks {
        r.check(Check::new(c.name.clone(), c.passed, Some("violated".into())));
    }
    let n = t.gamma.order();
    let xi: Vec<Vec<u32>> = (0..n).map(|s| (0..n).map(|u| ty.xi.exp(s, u)).collect()).collect();
    let chi: Vec<Vec<u32>> = (0..n).map(|s| (0..n).map(|u| ty.chi_form.exp(s, u)).collect()).collect();
    r.artifact("t", &ty.t);
    r.artifact("xi", json!({ "modulus": ty.xi.modulus, "values": xi }));
    r.artifact("chi_form", json!({ "modulus": ty.chi_form.modulus, "values": chi }));
    r.line(format!("T = {:?}", ty.t));
    Ok(())
}

fn run_enumerate(r: &mut Report, t: ClassTriple, flags: &Flags) -> Result<(), CliError> {
    let action = AutAction::new(t.f.clone(), t.gamma.clone(), t.action.maps.clone())
        .map_err(|e| CliError::input("action", e))?;
    let e = enumerate_triples(&t.gamma, &t.f, &action, &flags.budget)?;
    r.check(Check::new(
        "within_budget",
        !e.truncated,
        Some("search stopped by --budget or --max-results".into()),
    ));
    r.resource_limit = e.truncated;
    let docs: Vec<InputDocument> = e
        .triples
        .iter()
        .enumerate()
        .map(|(i, t)| InputDocument::from_triple(t, Some(format!("triple {i}"))))
        .collect();
    r.artifact("count", docs.len());
    r.artifact("crossed_homs", e.crossed_homs);
    r.artifact("admissible", e.admissible);
    r.artifact("obstructed", e.obstructed);
    r.artifact("rejected", e.rejected);
    r.artifact("note", EQUIVALENCE_NOTE);
    r.artifact("triples", docs);
    r.line(format!(
        "{} triples ({} crossed homomorphisms, {} admissible, {} obstructed)",
        e.triples.len(),
        e.crossed_homs,
        e.admissible,
        e.obstructed
    ));
    r.line(format!("note: {EQUIVALENCE_NOTE}"));
    Ok(())
}

/// Run one command on a parsed document.
pub fn run_command(cmd: Command, doc: &InputDocument, flags: &Flags) -> Result<Report, CliError> {
    let datum = apply_flags(doc.to_datum()?, flags)?;
    let mut r = Report::new(cmd.name());
    match cmd {
        Command::Verify => run_verify(&mut r, extension_of(datum)?),
        Command::Grouplikes => run_grouplikes(&mut r, extension_of(datum)?, flags)?,
        Command::Type => run_type(&mut r, extension_of(datum)?, flags)?,
        Command::Fusion => run_fusion(&mut r, extension_of(datum)?, flags)?,
        Command::Classify => run_classify(&mut r, triple_of(datum, cmd)?, flags)?,
        Command::Ty => run_ty(&mut r, triple_of(datum, cmd)?)?,
        Command::Enumerate => run_enumerate(&mut r, triple_of(datum, cmd)?, flags)?,
    }
    Ok(r)
}
