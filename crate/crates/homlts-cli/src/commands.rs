//! Command drivers: each turns a parsed document into a run report.

use homlts::coboundary::CochainComplex;
use homlts::deform::{
    check_deformation_with_limit, check_equivalence_with_limit, trivial_deformation_from_nijenhuis,
    LinearDeformation,
};
use homlts::extend::{are_cohomologous, build_extension, classify_extension, equivalence_from_xi};
use homlts::graded::{graded_bracket, twisted_mc_check};
use homlts::verify::{
    homomorphism_report, is_nijenhuis_compatible_with_limit,
    verify_compatible_representation_with_limit, verify_compatible_with_limit,
};
use homlts::{AxiomCheck, CompatibleHomLts, CompatibleRepresentation, Error, Side};
use serde_json::{json, Value};

use crate::document::{
    self, entries_of_bracket, parse_bracket, parse_matrix, parse_two_cochain, InputError,
    ProblemDocument,
};
use crate::report::RunReport;

pub struct Context {
    pub input_label: String,
    pub digest: String,
    pub witness_limit: usize,
    pub max_degree: usize,
}

impl Context {
    fn report(&self, command: &str) -> RunReport {
        RunReport::new(command, &self.input_label, &self.digest)
    }
}

fn algebra(doc: &ProblemDocument) -> Result<CompatibleHomLts, InputError> {
    document::algebra_of(doc)
}

fn representation(
    doc: &ProblemDocument,
    c: &CompatibleHomLts,
) -> Result<CompatibleRepresentation, InputError> {
    document::representation_of(doc, c)
}

fn operator(doc: &ProblemDocument, c: &CompatibleHomLts) -> Result<homlts::Matrix, InputError> {
    let rows = doc
        .n_operator
        .as_ref()
        .ok_or_else(|| InputError("missing required section \"N\"".into()))?;
    parse_matrix("N", rows, c.dim(), c.dim())
}

/// Full axiom verification of the pair and, when present, the representation
/// and a candidate endomorphism `phi`.
pub fn cmd_verify(doc: &ProblemDocument, ctx: &Context) -> Result<RunReport, InputError> {
    let c = algebra(doc)?;
    let mut report = ctx.report("verify");
    report.push_axiom_report(&verify_compatible_with_limit(&c, ctx.witness_limit));
    if doc.rep.is_some() {
        let rep = representation(doc, &c)?;
        let rep_report = verify_compatible_representation_with_limit(&c, &rep, ctx.witness_limit)
            .map_err(|e| InputError(e.to_string()))?;
        report.push_axiom_report(&rep_report.prefixed("rep:"));
    }
    if let Some(phi_rows) = &doc.phi {
        let phi = parse_matrix("phi", phi_rows, c.dim(), c.dim())?;
        let hom = homomorphism_report(&c, &c, &phi, ctx.witness_limit)
            .map_err(|e| InputError(e.to_string()))?;
        report.push_axiom_report(&hom.prefixed("phi:"));
    }
    report.data = json!({ "dim": c.dim() });
    report.finalize_status();
    Ok(report)
}

/// Verify first, then compute cohomology dimensions and representatives in
/// the requested degree.
pub fn cmd_cohomology(
    doc: &ProblemDocument,
    degree: usize,
    ctx: &Context,
) -> Result<RunReport, InputError> {
    if degree == 0 {
        return Err(InputError("degree must be at least 1".into()));
    }
    if degree > ctx.max_degree {
        return Err(InputError(format!(
            "degree {degree} exceeds the cap {}; raise it with --max-degree",
            ctx.max_degree
        )));
    }
    let c = algebra(doc)?;
    let mut report = ctx.report("cohomology");

    let verification = verify_compatible_with_limit(&c, ctx.witness_limit);
    let algebra_ok = verification.passed();
    report.push_flag("algebra-verifies", algebra_ok);
    let rep = representation(doc, &c)?;
    let rep_report = verify_compatible_representation_with_limit(&c, &rep, ctx.witness_limit)
        .map_err(|e| InputError(e.to_string()))?;
    let rep_ok = rep_report.passed();
    report.push_flag("representation-verifies", rep_ok);
    if !algebra_ok || !rep_ok {
        // do not compute over an unverified structure
        report.push_axiom_report(&verification);
        report.push_axiom_report(&rep_report.prefixed("rep:"));
        report.finalize_status();
        return Ok(report);
    }

    let complex = CochainComplex::new(c, rep)
        .map_err(|e| InputError(e.to_string()))?
        .with_degree_cap(ctx.max_degree);
    let h = complex
        .cohomology(degree)
        .map_err(|e| InputError(e.to_string()))?;
    let basis = complex
        .basis(degree)
        .map_err(|e| InputError(e.to_string()))?;

    let basis_vectors: Vec<Vec<(usize, String)>> = basis
        .vectors()
        .iter()
        .map(|v| {
            v.iter()
                .enumerate()
                .filter(|(_, x)| !num_traits::Zero::is_zero(*x))
                .map(|(i, x)| (i, x.to_string()))
                .collect()
        })
        .collect();
    let representatives: Vec<Vec<(usize, String)>> = h
        .representative_coordinates
        .iter()
        .map(|coords| {
            coords
                .iter()
                .enumerate()
                .filter(|(_, x)| !num_traits::Zero::is_zero(*x))
                .map(|(i, x)| (i, x.to_string()))
                .collect()
        })
        .collect();

    report.data = json!({
        "degree": degree,
        "dim_cochain_space": basis.dim(),
        "dim_chain_group": h.dim_cochains,
        "dim_cocycles": h.dim_cocycles,
        "dim_coboundaries": h.dim_coboundaries,
        "dim_cohomology": h.dim_cohomology,
        "representatives_in_basis_coordinates": representatives,
        "basis": {
            "ambient_dimension": basis.ambient_dim(),
            "convention": "ambient index = (input tuple, row-major) * dimV + output coordinate",
            "vectors": basis_vectors,
        },
    });
    report.finalize_status();
    Ok(report)
}

/// Maurer-Cartan checks: the three bracket identities of the pair, plus the
/// shifted check when increment sections are present.
pub fn cmd_mc(doc: &ProblemDocument, ctx: &Context) -> Result<RunReport, InputError> {
    let c = algebra(doc)?;
    let mut report = ctx.report("mc");
    let alpha = c.twist();
    let pi1 = c.bracket(Side::One).map();
    let pi2 = c.bracket(Side::Two).map();
    report.push_check(&AxiomCheck::vanishes(
        "self-bracket-1",
        &graded_bracket(pi1, pi1, alpha),
        ctx.witness_limit,
    ));
    report.push_check(&AxiomCheck::vanishes(
        "self-bracket-2",
        &graded_bracket(pi2, pi2, alpha),
        ctx.witness_limit,
    ));
    report.push_check(&AxiomCheck::vanishes(
        "mixed-bracket",
        &graded_bracket(pi1, pi2, alpha),
        ctx.witness_limit,
    ));

    if doc.mu1.is_some() || doc.mu2.is_some() {
        let t1 = parse_bracket("mu1", c.dim(), document::required("mu1", &doc.mu1)?)?;
        let t2 = parse_bracket("mu2", c.dim(), document::required("mu2", &doc.mu2)?)?;
        report.push_flag("shifted-pair", twisted_mc_check(&c, &t1, &t2));
    }
    report.finalize_status();
    Ok(report)
}

/// Nijenhuis check; on success the generated trivial deformation is emitted.
pub fn cmd_nijenhuis(doc: &ProblemDocument, ctx: &Context) -> Result<RunReport, InputError> {
    let c = algebra(doc)?;
    let n = operator(doc, &c)?;
    let mut report = ctx.report("nijenhuis");
    let check = is_nijenhuis_compatible_with_limit(&c, &n, ctx.witness_limit);
    let passed = check.passed();
    report.push_axiom_report(&check);
    if passed {
        let d = trivial_deformation_from_nijenhuis(&c, &n)
            .expect("checked operator generates a deformation");
        report.data = json!({
            "generated_deformation": {
                "mu1": entries_of_bracket(d.mu(Side::One)),
                "mu2": entries_of_bracket(d.mu(Side::Two)),
                "omega1": entries_of_bracket(d.omega(Side::One)),
                "omega2": entries_of_bracket(d.omega(Side::Two)),
            }
        });
    }
    report.finalize_status();
    Ok(report)
}

fn deformation_from(
    doc: &ProblemDocument,
    c: &CompatibleHomLts,
) -> Result<LinearDeformation, InputError> {
    let mu1 = parse_bracket("mu1", c.dim(), document::required("mu1", &doc.mu1)?)?;
    let mu2 = parse_bracket("mu2", c.dim(), document::required("mu2", &doc.mu2)?)?;
    let omega1 = parse_bracket(
        "omega1",
        c.dim(),
        document::required("omega1", &doc.omega1)?,
    )?;
    let omega2 = parse_bracket(
        "omega2",
        c.dim(),
        document::required("omega2", &doc.omega2)?,
    )?;
    LinearDeformation::new(c, (mu1, mu2), (omega1, omega2)).map_err(|e| InputError(e.to_string()))
}

/// Double-oracle deformation check; with an operator section the equivalence
/// identities are checked too (against the primed deformation when present,
/// otherwise as triviality).
pub fn cmd_deform(doc: &ProblemDocument, ctx: &Context) -> Result<RunReport, InputError> {
    let c = algebra(doc)?;
    let d = deformation_from(doc, &c)?;
    let mut report = ctx.report("deform");
    let result = check_deformation_with_limit(&c, &d, ctx.witness_limit);
    for eq in &result.equations {
        report.push_check(&eq.bracket_check);
        report.push_check(&eq.coefficient_check);
    }
    report.push_axiom_report(&result.structural);
    report.push_flag("double-oracle-agrees", result.routes_agree());

    if doc.n_operator.is_some() {
        let n = operator(doc, &c)?;
        let d_prime = match &doc.prime {
            Some(p) => LinearDeformation::new(
                &c,
                (
                    parse_bracket("prime.mu1", c.dim(), &p.mu1)?,
                    parse_bracket("prime.mu2", c.dim(), &p.mu2)?,
                ),
                (
                    parse_bracket("prime.omega1", c.dim(), &p.omega1)?,
                    parse_bracket("prime.omega2", c.dim(), &p.omega2)?,
                ),
            )
            .map_err(|e| InputError(e.to_string()))?,
            None => LinearDeformation::zero(c.dim()),
        };
        let label = if doc.prime.is_some() {
            "equivalence:"
        } else {
            "triviality:"
        };
        let eq_report = check_equivalence_with_limit(&c, &d, &d_prime, &n, ctx.witness_limit);
        report.push_axiom_report(&eq_report.prefixed(label));
    }
    report.finalize_status();
    Ok(report)
}

/// Build the extension of the base by the fiber along the cocycle pair,
/// verify it, and classify it in second cohomology.
pub fn cmd_extend(doc: &ProblemDocument, ctx: &Context) -> Result<RunReport, InputError> {
    let c = algebra(doc)?;
    let rep = representation(doc, &c)?;
    let dv = rep.v().dim();
    let mu1 = parse_two_cochain("mu1", c.dim(), dv, document::required("mu1", &doc.mu1)?)?;
    let mu2 = parse_two_cochain("mu2", c.dim(), dv, document::required("mu2", &doc.mu2)?)?;

    let mut report = ctx.report("extend");
    let base_ok = verify_compatible_with_limit(&c, ctx.witness_limit).passed();
    report.push_flag("base-verifies", base_ok);
    let rep_report = verify_compatible_representation_with_limit(&c, &rep, ctx.witness_limit)
        .map_err(|e| InputError(e.to_string()))?;
    report.push_flag("representation-verifies", rep_report.passed());
    if !base_ok || !rep_report.passed() {
        report.finalize_status();
        return Ok(report);
    }

    let e = build_extension(&c, &rep, (&mu1, &mu2)).map_err(|e| InputError(e.to_string()))?;
    let total = verify_compatible_with_limit(e.total(), ctx.witness_limit);
    let total_ok = total.passed();
    report.push_axiom_report(&total.prefixed("total:"));

    let mut data = json!({
        "total_dim": e.total().dim(),
        "total_bracket1": entries_of_bracket(e.total().bracket(Side::One)),
        "total_bracket2": entries_of_bracket(e.total().bracket(Side::Two)),
    });
    if total_ok {
        let class = classify_extension(&e).map_err(|err| InputError(err.to_string()))?;
        data["class_coordinates"] =
            Value::Array(class.iter().map(|x| Value::String(x.to_string())).collect());
        let complex = CochainComplex::new(c.clone(), rep.clone())
            .map_err(|err| InputError(err.to_string()))?;
        let h2 = complex
            .cohomology(2)
            .map_err(|err| InputError(err.to_string()))?;
        data["h2_dimension"] = Value::from(h2.dim_cohomology);
    }
    report.data = data;
    report.finalize_status();
    Ok(report)
}

/// Decide whether the two cocycle pairs are cohomologous; print the witness
/// 1-cochain and, on success, the induced extension equivalence.
pub fn cmd_cohomologous(doc: &ProblemDocument, ctx: &Context) -> Result<RunReport, InputError> {
    let c = algebra(doc)?;
    let rep = representation(doc, &c)?;
    let dv = rep.v().dim();
    let mu1 = parse_two_cochain("mu1", c.dim(), dv, document::required("mu1", &doc.mu1)?)?;
    let mu2 = parse_two_cochain("mu2", c.dim(), dv, document::required("mu2", &doc.mu2)?)?;
    let nu1 = parse_two_cochain("nu1", c.dim(), dv, document::required("nu1", &doc.nu1)?)?;
    let nu2 = parse_two_cochain("nu2", c.dim(), dv, document::required("nu2", &doc.nu2)?)?;

    let mut report = ctx.report("cohomologous");
    let witness = match are_cohomologous(&c, &rep, (&mu1, &mu2), (&nu1, &nu2)) {
        Ok(w) => w,
        Err(Error::Precondition(msg)) => return Err(InputError(msg)),
        Err(e) => return Err(InputError(e.to_string())),
    };
    match witness {
        Some(xi) => {
            report.push_flag("cohomologous", true);
            report.data = json!({ "xi": entries_of_map_arity1(&xi) });
            // materialize the extension equivalence when both totals verify
            let e_mu = build_extension(&c, &rep, (&mu1, &mu2));
            let e_nu = build_extension(&c, &rep, (&nu1, &nu2));
            if let (Ok(e_mu), Ok(e_nu)) = (e_mu, e_nu) {
                if verify_compatible(&e_mu).passed() && verify_compatible(&e_nu).passed() {
                    let eq = equivalence_from_xi(&e_mu, &e_nu, &xi)
                        .map_err(|e| InputError(e.to_string()))?;
                    report.push_axiom_report(&eq.report.prefixed("equivalence:"));
                    report.data["zeta"] =
                        serde_json::to_value(crate::document::matrix_to_strings(&eq.zeta))
                            .expect("matrix serializes");
                }
            }
        }
        None => {
            report.push_flag("cohomologous", false);
        }
    }
    report.finalize_status();
    Ok(report)
}

fn verify_compatible(e: &homlts::extend::AbelianExtension) -> homlts::AxiomReport {
    homlts::verify::verify_compatible(e.total())
}

fn entries_of_map_arity1(m: &homlts::MultiLinearMap) -> Vec<(usize, usize, String)> {
    let mut out = Vec::new();
    for i in 0..m.dim_in() {
        for l in 0..m.dim_out() {
            let v = m.get(&[i], l);
            if !num_traits::Zero::is_zero(v) {
                out.push((i, l, v.to_string()));
            }
        }
    }
    out
}
