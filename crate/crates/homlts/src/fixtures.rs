//! Built-in example structures used by the test suites and the CLI.

use crate::algebra::{CompatibleHomLts, HomLts, HomSpace, Side, TriBracket};
use crate::construct::semidirect_product;
use crate::matrix::Matrix;
use crate::rational::{rat, rat_int, Rat};
use crate::representation::adjoint_representation;

/// Names of all built-in fixtures, in listing order.
pub const FIXTURE_NAMES: &[&str] = &[
    "example-2d-as-printed",
    "example-2d-corrected",
    "abelian-d2",
    "abelian-d3",
    "nijenhuis-lambda-id",
    "semidirect-4d",
];

fn diag(vals: &[i64]) -> Matrix {
    Matrix::diagonal(&vals.iter().map(|&v| rat_int(v)).collect::<Vec<_>>())
}

/// The single valid bracket of the 2-dimensional running example:
/// `[e0, e1, e1] = e0` with twist `diag(1, −1)`.
pub fn two_dim_bracket_one() -> HomLts {
    let space = HomSpace::new(2, diag(&[1, -1])).unwrap();
    let b = TriBracket::from_entries(2, &[(0, 1, 1, 0, rat_int(1))]).unwrap();
    HomLts::new(space, b).unwrap()
}

/// The 2-dimensional pair exactly as published: `[e0,e1,e1]¹ = e0`,
/// `[e0,e1,e1]² = e1`, twist `diag(1, −1)`. The second bracket fails both
/// twist multiplicativity and the fundamental identity; the verifier
/// documents this rather than repairing it.
pub fn example_2d_as_printed() -> CompatibleHomLts {
    let space = HomSpace::new(2, diag(&[1, -1])).unwrap();
    let b1 = TriBracket::from_entries(2, &[(0, 1, 1, 0, rat_int(1))]).unwrap();
    let b2 = TriBracket::from_entries(2, &[(0, 1, 1, 1, rat_int(1))]).unwrap();
    CompatibleHomLts::new(space, b1, b2).unwrap()
}

/// Variant of the published pair with the twist replaced by the identity.
/// Multiplicativity then holds trivially, but the second bracket still fails
/// the fundamental identity; the fixture exists to document that fact.
pub fn example_2d_corrected() -> CompatibleHomLts {
    let space = HomSpace::untwisted(2);
    let b1 = TriBracket::from_entries(2, &[(0, 1, 1, 0, rat_int(1))]).unwrap();
    let b2 = TriBracket::from_entries(2, &[(0, 1, 1, 1, rat_int(1))]).unwrap();
    CompatibleHomLts::new(space, b1, b2).unwrap()
}

/// Zero brackets in the given dimension with identity twist.
pub fn abelian(dim: usize) -> CompatibleHomLts {
    CompatibleHomLts::new(
        HomSpace::untwisted(dim),
        TriBracket::zero(dim),
        TriBracket::zero(dim),
    )
    .unwrap()
}

/// The diagonal pair `(b, b)` on the valid 2-dimensional bracket: the
/// simplest nonabelian verified compatible fixture.
pub fn two_dim_diagonal_pair() -> CompatibleHomLts {
    CompatibleHomLts::diagonal(&two_dim_bracket_one())
}

/// Diagonal pair on a valid untwisted 3-dimensional bracket
/// `{[e0,e1,e0] = e1, [e0,e1,e1] = −e2}`. Unlike the 2-dimensional
/// fixtures, its degree-2 coboundary operators are nonzero, so it exercises
/// nontrivial cocycle/coboundary arithmetic.
pub fn three_dim_diagonal_pair() -> CompatibleHomLts {
    let b = TriBracket::from_entries(3, &[(0, 1, 0, 1, rat_int(1)), (0, 1, 1, 2, rat_int(-1))])
        .unwrap();
    let h = HomLts::new(HomSpace::untwisted(3), b).unwrap();
    CompatibleHomLts::diagonal(&h)
}

/// `(b, b_N)` for the scalar Nijenhuis operator `N = λ·id` with `λ = 3/5`
/// on the valid 2-dimensional bracket; the deformed bracket is `λ²·b`.
pub fn nijenhuis_lambda_id() -> (CompatibleHomLts, Matrix) {
    let h = two_dim_bracket_one();
    let lambda = rat(3, 5);
    let n = Matrix::scalar(2, &lambda);
    let deformed = crate::construct::nijenhuis_deformed_bracket(&h, &n).unwrap();
    let pair = CompatibleHomLts::new(h.space().clone(), h.bracket().clone(), deformed).unwrap();
    (pair, n)
}

/// Semidirect product of the diagonal pair with its adjoint representation:
/// a verified 4-dimensional compatible fixture with twist
/// `diag(1, −1, 1, −1)`.
pub fn semidirect_4d() -> CompatibleHomLts {
    let c = two_dim_diagonal_pair();
    let rep = adjoint_representation(&c);
    semidirect_product(&c, &rep).expect("adjoint representation verifies")
}

/// Two individually valid brackets on untwisted 3-space that fail the
/// compatibility identity; used by the Maurer-Cartan and deformation
/// counterexample tests. (In dimension 2 with identity twist no such pair
/// exists: validity there reduces to tracelessness of the adjoint-type
/// matrix, which is linear, so all valid pairs are compatible.)
pub fn incompatible_pair() -> CompatibleHomLts {
    let b1 = TriBracket::from_entries(3, &[(0, 1, 0, 1, rat_int(1)), (0, 1, 1, 2, rat_int(-1))])
        .unwrap();
    let b2 = TriBracket::from_entries(3, &[(1, 2, 2, 0, rat_int(-1))]).unwrap();
    CompatibleHomLts::new(HomSpace::untwisted(3), b1, b2).unwrap()
}

/// All *verified* compatible fixtures (each passes the full verifier),
/// paired with stable names.
pub fn verified_compatible_fixtures() -> Vec<(&'static str, CompatibleHomLts)> {
    vec![
        ("abelian-d2", abelian(2)),
        ("abelian-d3", abelian(3)),
        ("two-dim-diagonal", two_dim_diagonal_pair()),
        ("three-dim-diagonal", three_dim_diagonal_pair()),
        ("nijenhuis-lambda-id", nijenhuis_lambda_id().0),
        ("semidirect-4d", semidirect_4d()),
    ]
}

/// Scalar values used by the Nijenhuis acceptance sweep.
pub fn nijenhuis_lambdas() -> Vec<Rat> {
    vec![rat_int(1), rat_int(-2), rat(3, 5)]
}

/// Side helper for iterating both brackets.
pub const SIDES: [Side; 2] = [Side::One, Side::Two];

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::{verify_compatible, verify_hom_lts};

    #[test]
    fn verified_fixtures_pass() {
        for (name, c) in verified_compatible_fixtures() {
            let report = verify_compatible(&c);
            assert!(
                report.passed(),
                "{name} failed: {:?}",
                report.failing_axioms()
            );
        }
    }

    #[test]
    fn printed_example_documents_its_failures() {
        let c = example_2d_as_printed();
        assert!(verify_hom_lts(&c.hom_lts(Side::One)).passed());
        let second = verify_hom_lts(&c.hom_lts(Side::Two));
        assert!(!second.passed());
        assert!(!second.check("twist-multiplicativity").unwrap().passed());
        assert!(!second.check("fundamental-identity").unwrap().passed());
    }

    #[test]
    fn corrected_example_still_fails_fundamental_identity() {
        let c = example_2d_corrected();
        assert!(verify_hom_lts(&c.hom_lts(Side::One)).passed());
        let second = verify_hom_lts(&c.hom_lts(Side::Two));
        assert!(second.check("twist-multiplicativity").unwrap().passed());
        assert!(!second.check("fundamental-identity").unwrap().passed());
    }

    #[test]
    fn incompatible_pair_is_genuinely_incompatible() {
        let c = incompatible_pair();
        assert!(verify_hom_lts(&c.hom_lts(Side::One)).passed());
        assert!(verify_hom_lts(&c.hom_lts(Side::Two)).passed());
        let report = verify_compatible(&c);
        assert!(!report.check("compatibility").unwrap().passed());
    }
}
