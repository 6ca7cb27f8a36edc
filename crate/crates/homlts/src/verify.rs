//! Exhaustive basis-tuple verifiers for every axiom.
//!
//! All identities here are multilinear, so checking them on basis tuples is
//! sufficient. Each verifier evaluates its identity on every tuple (no early
//! exit), counts the failures and keeps up to a configurable number of
//! witnesses per axiom. A failing structure is a report, not an error; errors
//! are reserved for shape mismatches.

use crate::algebra::{CompatibleHomLts, HomLts, Side, TriBracket};
use crate::error::{Error, Result};
use crate::matrix::{rank, Matrix};
use crate::multilinear::MultiLinearMap;
use crate::rational::Rat;
use crate::report::{AxiomCheck, AxiomReport, Witness, DEFAULT_WITNESS_LIMIT};
use crate::representation::{CompatibleRepresentation, Representation, ThetaGrid};

/// Both sides of the polarized fundamental identity
/// `X(αa, αb, Y(x,y,z)) = Y(X(a,b,x), αy, αz) + Y(αx, X(a,b,y), αz) + Y(αx, αy, X(a,b,z))`
/// as arity-5 tensors in the argument order `(a, b, x, y, z)`. With
/// `X = Y = bracket` this is the twisted fundamental identity; summing the
/// two mixed orientations gives the compatibility identity of a pair.
pub(crate) fn fi_sides(
    outer: &TriBracket,
    inner: &TriBracket,
    alpha: &Matrix,
) -> (MultiLinearMap, MultiLinearMap) {
    fi_sides_maps(outer.map(), inner.map(), alpha)
}

pub(crate) fn fi_sides_maps(
    x: &MultiLinearMap,
    y: &MultiLinearMap,
    alpha: &Matrix,
) -> (MultiLinearMap, MultiLinearMap) {
    let lhs = x.apply_to_slots(&[0, 1], alpha).insert_at_slot(2, y);
    let t1 = y.apply_to_slots(&[1, 2], alpha).insert_at_slot(0, x);
    let t2 = y
        .apply_to_slots(&[0, 2], alpha)
        .insert_at_slot(1, x)
        .permute_args(&[2, 0, 1, 3, 4]);
    let t3 = y
        .apply_to_slots(&[0, 1], alpha)
        .insert_at_slot(2, x)
        .permute_args(&[2, 3, 0, 1, 4]);
    (lhs, t1.add(&t2).add(&t3))
}

/// `E(X, Y) = LHS − RHS` of the polarized fundamental identity.
pub(crate) fn fi_expr(x: &MultiLinearMap, y: &MultiLinearMap, alpha: &Matrix) -> MultiLinearMap {
    let (lhs, rhs) = fi_sides_maps(x, y, alpha);
    lhs.sub(&rhs)
}

fn bracket_axiom_checks(
    prefix: &str,
    b: &TriBracket,
    alpha: &Matrix,
    limit: usize,
) -> Vec<AxiomCheck> {
    let map = b.map();
    let mut checks = Vec::new();

    // [x,y,z] + [y,x,z] = 0, structural but re-checked for loaded data
    checks.push(AxiomCheck::compare(
        &format!("{prefix}pair-antisymmetry"),
        map,
        &map.swap_args(0, 1).neg(),
        limit,
    ));

    // [x,y,z] + [z,x,y] + [y,z,x] = 0
    let cyclic = map
        .add(&map.permute_args(&[2, 0, 1]))
        .add(&map.permute_args(&[1, 2, 0]));
    checks.push(AxiomCheck::vanishes(
        &format!("{prefix}ternary-cyclic-sum"),
        &cyclic,
        limit,
    ));

    // α[x,y,z] = [αx, αy, αz]
    checks.push(AxiomCheck::compare(
        &format!("{prefix}twist-multiplicativity"),
        &map.compose_output(alpha),
        &map.apply_to_slots(&[0, 1, 2], alpha),
        limit,
    ));

    // twisted fundamental identity on all basis 5-tuples
    let (lhs, rhs) = fi_sides(b, b, alpha);
    checks.push(AxiomCheck::compare(
        &format!("{prefix}fundamental-identity"),
        &lhs,
        &rhs,
        limit,
    ));

    checks
}

/// Check all Hom-Lie triple system axioms of `h` on every basis tuple
/// (triples for the pointwise identities, 5-tuples for the fundamental
/// identity).
pub fn verify_hom_lts(h: &HomLts) -> AxiomReport {
    verify_hom_lts_with_limit(h, DEFAULT_WITNESS_LIMIT)
}

pub fn verify_hom_lts_with_limit(h: &HomLts, limit: usize) -> AxiomReport {
    AxiomReport {
        checks: bracket_axiom_checks("", h.bracket(), h.twist(), limit),
    }
}

/// Check both brackets individually plus the compatibility identity on all
/// basis 5-tuples.
pub fn verify_compatible(c: &CompatibleHomLts) -> AxiomReport {
    verify_compatible_with_limit(c, DEFAULT_WITNESS_LIMIT)
}

pub fn verify_compatible_with_limit(c: &CompatibleHomLts, limit: usize) -> AxiomReport {
    let alpha = c.twist();
    let mut report = AxiomReport::default();
    report.checks.extend(bracket_axiom_checks(
        "bracket1:",
        c.bracket(Side::One),
        alpha,
        limit,
    ));
    report.checks.extend(bracket_axiom_checks(
        "bracket2:",
        c.bracket(Side::Two),
        alpha,
        limit,
    ));

    let (l12, r12) = fi_sides(c.bracket(Side::One), c.bracket(Side::Two), alpha);
    let (l21, r21) = fi_sides(c.bracket(Side::Two), c.bracket(Side::One), alpha);
    report.push(AxiomCheck::compare(
        "compatibility",
        &l12.add(&l21),
        &r12.add(&r21),
        limit,
    ));
    report
}

fn flatten(m: &Matrix) -> Vec<Rat> {
    let mut out = Vec::with_capacity(m.rows() * m.cols());
    for r in 0..m.rows() {
        out.extend(m.row(r).iter().cloned());
    }
    out
}

/// Exhaustive check of an operator identity over all `arity`-tuples of basis
/// indices; `sides` returns the two operator matrices to compare.
fn operator_check(
    axiom: &str,
    dim: usize,
    arity: usize,
    limit: usize,
    mut sides: impl FnMut(&[usize]) -> (Matrix, Matrix),
) -> AxiomCheck {
    let mut failure_count = 0;
    let mut witnesses = Vec::new();
    let mut tuple = vec![0usize; arity];
    let total = dim.pow(arity as u32);
    for t in 0..total {
        let mut idx = t;
        for slot in (0..arity).rev() {
            tuple[slot] = idx % dim;
            idx /= dim;
        }
        let (lhs, rhs) = sides(&tuple);
        if lhs != rhs {
            failure_count += 1;
            if witnesses.len() < limit {
                witnesses.push(Witness {
                    tuple: tuple.clone(),
                    lhs: flatten(&lhs),
                    rhs: flatten(&rhs),
                });
            }
        }
    }
    AxiomCheck {
        axiom: axiom.to_string(),
        failure_count,
        witnesses,
    }
}

fn representation_checks(
    prefix: &str,
    h: &HomLts,
    theta: &ThetaGrid,
    beta: &Matrix,
    limit: usize,
) -> Vec<AxiomCheck> {
    let alpha = h.twist();
    let d = h.dim();
    let b = h.bracket();
    let theta_a = theta.conjugated_args(alpha); // θ(α·, α·)
    let d_plain = theta.d_grid();
    let d_a = theta_a.d_grid(); // D(α·, α·)
    let alpha_cols: Vec<Vec<Rat>> = (0..d).map(|i| alpha.column(i)).collect();

    let mut checks = Vec::new();

    // θ(αx, αy) ∘ β = β ∘ θ(x, y)
    checks.push(operator_check(
        &format!("{prefix}twist-equivariance"),
        d,
        2,
        limit,
        |t| {
            let (x, y) = (t[0], t[1]);
            (theta_a.at(x, y).mul(beta), beta.mul(theta.at(x, y)))
        },
    ));

    // θ(αa,αb)θ(x,y) − θ(αy,αb)θ(x,a) − θ(αx, [y,a,b])∘β + D(αy,αa)θ(x,b) = 0
    checks.push(operator_check(
        &format!("{prefix}action-identity"),
        d,
        4,
        limit,
        |t| {
            let (x, y, a, bb) = (t[0], t[1], t[2], t[3]);
            let lhs = theta_a
                .at(a, bb)
                .mul(theta.at(x, y))
                .sub(&theta_a.at(y, bb).mul(theta.at(x, a)))
                .sub(&theta.eval(&alpha_cols[x], b.value(y, a, bb)).mul(beta))
                .add(&d_a.at(y, a).mul(theta.at(x, bb)));
            (lhs, Matrix::zero(theta.dim_v(), theta.dim_v()))
        },
    ));

    // θ(αa,αb)D(x,y) − D(αx,αy)θ(a,b) + θ([x,y,a], αb)∘β + θ(αa, [x,y,b])∘β = 0
    checks.push(operator_check(
        &format!("{prefix}derivation-identity"),
        d,
        4,
        limit,
        |t| {
            let (x, y, a, bb) = (t[0], t[1], t[2], t[3]);
            let lhs = theta_a
                .at(a, bb)
                .mul(d_plain.at(x, y))
                .sub(&d_a.at(x, y).mul(theta.at(a, bb)))
                .add(&theta.eval(b.value(x, y, a), &alpha_cols[bb]).mul(beta))
                .add(&theta.eval(&alpha_cols[a], b.value(x, y, bb)).mul(beta));
            (lhs, Matrix::zero(theta.dim_v(), theta.dim_v()))
        },
    ));

    checks
}

/// Check that `(V, β, θ)` is a representation of `h`: twist equivariance on
/// basis pairs, the two mixed identities on basis 4-tuples, all as exact
/// operator identities.
pub fn verify_representation(h: &HomLts, r: &Representation) -> Result<AxiomReport> {
    verify_representation_with_limit(h, r, DEFAULT_WITNESS_LIMIT)
}

pub fn verify_representation_with_limit(
    h: &HomLts,
    r: &Representation,
    limit: usize,
) -> Result<AxiomReport> {
    if r.g().dim() != h.dim() {
        return Err(Error::DimensionMismatch(format!(
            "representation is over a {}-dimensional algebra, got {}",
            r.g().dim(),
            h.dim()
        )));
    }
    Ok(AxiomReport {
        checks: representation_checks("", h, r.theta(), r.beta(), limit),
    })
}

/// Check that `(V, β, θ1, θ2)` represents the compatible pair: each `θ_i` is
/// a representation of its bracket, plus the two joint compatibility
/// identities on basis 4-tuples.
pub fn verify_compatible_representation(
    c: &CompatibleHomLts,
    r: &CompatibleRepresentation,
) -> Result<AxiomReport> {
    verify_compatible_representation_with_limit(c, r, DEFAULT_WITNESS_LIMIT)
}

pub fn verify_compatible_representation_with_limit(
    c: &CompatibleHomLts,
    r: &CompatibleRepresentation,
    limit: usize,
) -> Result<AxiomReport> {
    if r.g().dim() != c.dim() {
        return Err(Error::DimensionMismatch(format!(
            "representation is over a {}-dimensional algebra, got {}",
            r.g().dim(),
            c.dim()
        )));
    }
    let alpha = c.twist();
    let beta = r.beta();
    let d = c.dim();
    let dv = r.v().dim();
    let b1 = c.bracket(Side::One);
    let b2 = c.bracket(Side::Two);
    let th1 = r.theta(Side::One);
    let th2 = r.theta(Side::Two);

    let mut report = AxiomReport::default();
    report.checks.extend(representation_checks(
        "theta1:",
        &c.hom_lts(Side::One),
        th1,
        beta,
        limit,
    ));
    report.checks.extend(representation_checks(
        "theta2:",
        &c.hom_lts(Side::Two),
        th2,
        beta,
        limit,
    ));

    let th1_a = th1.conjugated_args(alpha);
    let th2_a = th2.conjugated_args(alpha);
    let d1 = th1.d_grid();
    let d2 = th2.d_grid();
    let d1_a = th1_a.d_grid();
    let d2_a = th2_a.d_grid();
    let alpha_cols: Vec<Vec<Rat>> = (0..d).map(|i| alpha.column(i)).collect();

    // joint action identity on (a1, a2, a3, a4)
    report.push(operator_check("compat-action-identity", d, 4, limit, |t| {
        let (a1, a2, a3, a4) = (t[0], t[1], t[2], t[3]);
        let lhs = th1
            .eval(&alpha_cols[a1], b2.value(a2, a3, a4))
            .mul(beta)
            .add(&th2.eval(&alpha_cols[a1], b1.value(a2, a3, a4)).mul(beta))
            .add(&th1_a.at(a2, a4).mul(th2.at(a1, a3)))
            .add(&th2_a.at(a2, a4).mul(th1.at(a1, a3)))
            .sub(&th1_a.at(a3, a4).mul(th2.at(a1, a2)))
            .sub(&th2_a.at(a3, a4).mul(th1.at(a1, a2)))
            .sub(&d1_a.at(a2, a3).mul(th2.at(a1, a4)))
            .sub(&d2_a.at(a2, a3).mul(th1.at(a1, a4)));
        (lhs, Matrix::zero(dv, dv))
    }));

    // joint derivation identity on (a1, a2, a3, a4)
    report.push(operator_check(
        "compat-derivation-identity",
        d,
        4,
        limit,
        |t| {
            let (a1, a2, a3, a4) = (t[0], t[1], t[2], t[3]);
            let lhs = th1
                .eval_d(&alpha_cols[a3], b2.value(a1, a2, a4))
                .mul(beta)
                .add(&th2.eval_d(&alpha_cols[a3], b1.value(a1, a2, a4)).mul(beta))
                .add(&th1.eval_d(b2.value(a1, a2, a3), &alpha_cols[a4]).mul(beta))
                .add(&th2.eval_d(b1.value(a1, a2, a3), &alpha_cols[a4]).mul(beta))
                .sub(&d1_a.at(a1, a2).mul(d2.at(a3, a4)))
                .add(&d2_a.at(a3, a4).mul(d1.at(a1, a2)))
                .add(&d1_a.at(a3, a4).mul(d2.at(a1, a2)))
                .sub(&d2_a.at(a1, a2).mul(d1.at(a3, a4)));
            (lhs, Matrix::zero(dv, dv))
        },
    ));

    Ok(report)
}

/// Matrix seen as a linear map tensor, for uniform witness reporting.
fn matrix_as_map(m: &Matrix) -> MultiLinearMap {
    MultiLinearMap::from_fn(1, m.cols(), m.rows(), |t, l| m.at(l, t[0]).clone())
}

fn nijenhuis_checks(
    prefix: &str,
    b: &TriBracket,
    alpha: &Matrix,
    n: &Matrix,
    limit: usize,
) -> Vec<AxiomCheck> {
    let map = b.map();
    let mut checks = Vec::new();
    checks.push(AxiomCheck::compare(
        &format!("{prefix}twist-commutation"),
        &matrix_as_map(&n.mul(alpha)),
        &matrix_as_map(&alpha.mul(n)),
        limit,
    ));
    // [Nx,Ny,Nz] = N([x,Ny,Nz]+[Nx,y,Nz]+[Nx,Ny,z])
    //              − N²([Nx,y,z]+[x,Ny,z]+[x,y,Nz]) + N³[x,y,z]
    let lhs = map.apply_to_slots(&[0, 1, 2], n);
    let one_missing = map
        .apply_to_slots(&[1, 2], n)
        .add(&map.apply_to_slots(&[0, 2], n))
        .add(&map.apply_to_slots(&[0, 1], n));
    let two_missing = map
        .apply_to_slot(0, n)
        .add(&map.apply_to_slot(1, n))
        .add(&map.apply_to_slot(2, n));
    let n2 = n.mul(n);
    let n3 = n2.mul(n);
    let rhs = one_missing
        .compose_output(n)
        .sub(&two_missing.compose_output(&n2))
        .add(&map.compose_output(&n3));
    checks.push(AxiomCheck::compare(
        &format!("{prefix}nijenhuis-identity"),
        &lhs,
        &rhs,
        limit,
    ));
    checks
}

/// Check that `n` is a Nijenhuis operator for a single system: it commutes
/// with the twist and satisfies the Nijenhuis identity on all basis triples.
pub fn is_nijenhuis(h: &HomLts, n: &Matrix) -> AxiomReport {
    is_nijenhuis_with_limit(h, n, DEFAULT_WITNESS_LIMIT)
}

pub fn is_nijenhuis_with_limit(h: &HomLts, n: &Matrix, limit: usize) -> AxiomReport {
    AxiomReport {
        checks: nijenhuis_checks("", h.bracket(), h.twist(), n, limit),
    }
}

/// Check that `n` is a Nijenhuis operator for both brackets of the pair.
pub fn is_nijenhuis_compatible(c: &CompatibleHomLts, n: &Matrix) -> AxiomReport {
    is_nijenhuis_compatible_with_limit(c, n, DEFAULT_WITNESS_LIMIT)
}

pub fn is_nijenhuis_compatible_with_limit(
    c: &CompatibleHomLts,
    n: &Matrix,
    limit: usize,
) -> AxiomReport {
    let mut checks = nijenhuis_checks("bracket1:", c.bracket(Side::One), c.twist(), n, limit);
    checks.extend(nijenhuis_checks(
        "bracket2:",
        c.bracket(Side::Two),
        c.twist(),
        n,
        limit,
    ));
    AxiomReport { checks }
}

/// Tensor of `(x, y, z) ↦ target(phi x, phi y, phi z)` over the source basis;
/// `phi` may be rectangular.
fn pullback(target: &TriBracket, phi: &Matrix) -> MultiLinearMap {
    let src = phi.cols();
    let cols: Vec<Vec<Rat>> = (0..src).map(|i| phi.column(i)).collect();
    MultiLinearMap::from_fn(3, src, target.dim(), |t, l| {
        target.eval(&cols[t[0]], &cols[t[1]], &cols[t[2]])[l].clone()
    })
}

/// Witness-level report for `phi` being a homomorphism of compatible pairs:
/// `phi ∘ α1 = α2 ∘ phi` and bracket preservation for both brackets on all
/// basis triples.
pub fn homomorphism_report(
    c1: &CompatibleHomLts,
    c2: &CompatibleHomLts,
    phi: &Matrix,
    limit: usize,
) -> Result<AxiomReport> {
    if phi.cols() != c1.dim() || phi.rows() != c2.dim() {
        return Err(Error::DimensionMismatch(format!(
            "phi is {}x{}, expected {}x{}",
            phi.rows(),
            phi.cols(),
            c2.dim(),
            c1.dim()
        )));
    }
    let mut report = AxiomReport::default();
    report.push(AxiomCheck::compare(
        "twist-intertwining",
        &matrix_as_map(&phi.mul(c1.twist())),
        &matrix_as_map(&c2.twist().mul(phi)),
        limit,
    ));
    for side in [Side::One, Side::Two] {
        report.push(AxiomCheck::compare(
            &format!("bracket{}-preservation", side.label()),
            &c1.bracket(side).map().compose_output(phi),
            &pullback(c2.bracket(side), phi),
            limit,
        ));
    }
    Ok(report)
}

/// True iff `phi` intertwines the twists and preserves both brackets.
pub fn is_homomorphism(c1: &CompatibleHomLts, c2: &CompatibleHomLts, phi: &Matrix) -> Result<bool> {
    Ok(homomorphism_report(c1, c2, phi, 1)?.passed())
}

/// A homomorphism with nondegenerate `phi` (square and full rank).
pub fn is_isomorphism(c1: &CompatibleHomLts, c2: &CompatibleHomLts, phi: &Matrix) -> Result<bool> {
    Ok(is_homomorphism(c1, c2, phi)? && c1.dim() == c2.dim() && rank(phi) == phi.rows())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::HomSpace;
    use crate::rational::{rat, rat_int};
    use crate::representation::{adjoint_of, adjoint_representation};

    fn diag(vals: &[i64]) -> Matrix {
        Matrix::diagonal(&vals.iter().map(|&v| rat_int(v)).collect::<Vec<_>>())
    }

    fn bracket1() -> HomLts {
        let space = HomSpace::new(2, diag(&[1, -1])).unwrap();
        let b = TriBracket::from_entries(2, &[(0, 1, 1, 0, rat_int(1))]).unwrap();
        HomLts::new(space, b).unwrap()
    }

    fn bracket2_as_printed() -> HomLts {
        let space = HomSpace::new(2, diag(&[1, -1])).unwrap();
        let b = TriBracket::from_entries(2, &[(0, 1, 1, 1, rat_int(1))]).unwrap();
        HomLts::new(space, b).unwrap()
    }

    #[test]
    fn zero_bracket_passes_for_any_twist() {
        for twist in [diag(&[1, 1, 1]), diag(&[2, 0, -1]), Matrix::zero(3, 3)] {
            let h = HomLts::new(HomSpace::new(3, twist).unwrap(), TriBracket::zero(3)).unwrap();
            assert!(verify_hom_lts(&h).passed());
        }
    }

    #[test]
    fn bracket1_is_a_hom_lts() {
        let report = verify_hom_lts(&bracket1());
        assert!(report.passed(), "failures: {:?}", report.failing_axioms());
    }

    #[test]
    fn bracket2_as_printed_fails_multiplicativity_with_witness() {
        let report = verify_hom_lts(&bracket2_as_printed());
        assert!(!report.passed());
        let mult = report.check("twist-multiplicativity").unwrap();
        assert!(!mult.passed());
        let w = &mult.witnesses[0];
        assert_eq!(w.tuple, vec![0, 1, 1]);
        // α([e0,e1,e1]) = α(e1) = -e1, but [αe0, αe1, αe1] = e1
        assert_eq!(w.lhs, vec![rat_int(0), rat_int(-1)]);
        assert_eq!(w.rhs, vec![rat_int(0), rat_int(1)]);
    }

    #[test]
    fn diagonal_pair_is_compatible() {
        let c = CompatibleHomLts::diagonal(&bracket1());
        let report = verify_compatible(&c);
        assert!(report.passed(), "failures: {:?}", report.failing_axioms());
    }

    #[test]
    fn zero_theta_is_a_representation() {
        let h = bracket1();
        let v = HomSpace::new(2, diag(&[3, 5])).unwrap();
        let r = Representation::trivial(h.space().clone(), v);
        assert!(verify_representation(&h, &r).unwrap().passed());
    }

    #[test]
    fn adjoint_is_a_representation() {
        let h = bracket1();
        let r = adjoint_of(&h);
        let report = verify_representation(&h, &r).unwrap();
        assert!(report.passed(), "failures: {:?}", report.failing_axioms());
    }

    #[test]
    fn adjoint_pair_is_a_compatible_representation() {
        let c = CompatibleHomLts::diagonal(&bracket1());
        let r = adjoint_representation(&c);
        let report = verify_compatible_representation(&c, &r).unwrap();
        assert!(report.passed(), "failures: {:?}", report.failing_axioms());
    }

    #[test]
    fn scalar_nijenhuis_passes() {
        let h = bracket1();
        for lambda in [rat_int(1), rat_int(-2), rat(3, 5)] {
            let n = Matrix::scalar(2, &lambda);
            assert!(is_nijenhuis(&h, &n).passed());
        }
    }

    #[test]
    fn any_operator_is_nijenhuis_on_zero_bracket() {
        let h = HomLts::new(HomSpace::untwisted(2), TriBracket::zero(2)).unwrap();
        let n = Matrix::from_rows(vec![
            vec![rat_int(1), rat_int(2)],
            vec![rat_int(3), rat_int(4)],
        ]);
        assert!(is_nijenhuis(&h, &n).passed());
    }

    #[test]
    fn nijenhuis_report_matches_pointwise_oracle() {
        // N = diag(1, 0) commutes with the twist; decide the identity by an
        // independent pointwise evaluation of both sides on all triples
        let h = bracket1();
        let n = Matrix::diagonal(&[rat_int(1), rat_int(0)]);
        let report = is_nijenhuis(&h, &n);
        assert!(report.check("twist-commutation").unwrap().passed());

        let b = h.bracket();
        let apply = |m: &Matrix, v: &[Rat]| m.apply(v);
        let unit = |i: usize| -> Vec<Rat> { (0..2).map(|k| rat_int((k == i) as i64)).collect() };
        let n2 = n.mul(&n);
        let n3 = n2.mul(&n);
        let mut oracle_failures = 0;
        for x in 0..2 {
            for y in 0..2 {
                for z in 0..2 {
                    let (ex, ey, ez) = (unit(x), unit(y), unit(z));
                    let (nx, ny, nz) = (apply(&n, &ex), apply(&n, &ey), apply(&n, &ez));
                    let lhs = b.eval(&nx, &ny, &nz);
                    let inner = add3(
                        &b.eval(&ex, &ny, &nz),
                        &b.eval(&nx, &ey, &nz),
                        &b.eval(&nx, &ny, &ez),
                    );
                    let outer = add3(
                        &b.eval(&nx, &ey, &ez),
                        &b.eval(&ex, &ny, &ez),
                        &b.eval(&ex, &ey, &nz),
                    );
                    let rhs: Vec<Rat> = apply(&n, &inner)
                        .iter()
                        .zip(apply(&n2, &outer))
                        .zip(apply(&n3, b.value(x, y, z)))
                        .map(|((a, bb), c)| a - &bb + &c)
                        .collect();
                    if lhs != rhs {
                        oracle_failures += 1;
                    }
                }
            }
        }
        let check = report.check("nijenhuis-identity").unwrap();
        assert_eq!(check.failure_count, oracle_failures);

        fn add3(a: &[Rat], b: &[Rat], c: &[Rat]) -> Vec<Rat> {
            a.iter()
                .zip(b)
                .zip(c)
                .map(|((x, y), z)| x + y + z)
                .collect()
        }
    }

    #[test]
    fn non_twist_commuting_operator_reported() {
        let h = bracket1();
        let n = Matrix::from_rows(vec![
            vec![rat_int(0), rat_int(1)],
            vec![rat_int(1), rat_int(0)],
        ]);
        let report = is_nijenhuis(&h, &n);
        assert!(!report.check("twist-commutation").unwrap().passed());
    }

    #[test]
    fn identity_is_homomorphism() {
        let c = CompatibleHomLts::diagonal(&bracket1());
        assert!(is_homomorphism(&c, &c, &Matrix::identity(2)).unwrap());
        assert!(is_isomorphism(&c, &c, &Matrix::identity(2)).unwrap());
    }

    #[test]
    fn zero_map_into_zero_target() {
        let c1 = CompatibleHomLts::diagonal(&bracket1());
        let z = HomLts::new(
            HomSpace::new(2, diag(&[1, -1])).unwrap(),
            TriBracket::zero(2),
        )
        .unwrap();
        let c2 = CompatibleHomLts::diagonal(&z);
        let phi = Matrix::zero(2, 2);
        assert!(is_homomorphism(&c1, &c2, &phi).unwrap());
        assert!(!is_isomorphism(&c1, &c2, &phi).unwrap());
    }

    #[test]
    fn basis_swap_is_not_a_homomorphism_here() {
        let c = CompatibleHomLts::diagonal(&bracket1());
        let swap = Matrix::from_rows(vec![
            vec![rat_int(0), rat_int(1)],
            vec![rat_int(1), rat_int(0)],
        ]);
        let report = homomorphism_report(&c, &c, &swap, 3).unwrap();
        assert!(!report.passed());
        assert!(report
            .checks
            .iter()
            .any(|c| !c.passed() && !c.witnesses.is_empty()));
    }
}
