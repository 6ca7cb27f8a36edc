//! Built-in example documents, generated from the library fixtures.

use crate::document::{
    entries_of_bracket, entries_of_map, matrix_to_strings, Meta, ProblemDocument, RepSection,
};
use homlts::construct::nijenhuis_deformed_bracket;
use homlts::representation::adjoint_representation;
use homlts::{fixtures, rat, CompatibleHomLts, Matrix, MultiLinearMap, Side};

pub fn fixture_names() -> Vec<&'static str> {
    vec![
        "example-2d-as-printed",
        "example-2d-corrected",
        "abelian-d2",
        "abelian-d3",
        "nijenhuis-lambda-id",
        "semidirect-4d",
    ]
}

fn base_document(name: &str, notes: &str, c: &CompatibleHomLts) -> ProblemDocument {
    ProblemDocument {
        meta: Meta {
            name: Some(name.to_string()),
            notes: Some(notes.to_string()),
        },
        dim: c.dim(),
        alpha: matrix_to_strings(c.twist()),
        bracket1: entries_of_bracket(c.bracket(Side::One)),
        bracket2: entries_of_bracket(c.bracket(Side::Two)),
        rep: None,
        mu1: None,
        mu2: None,
        nu1: None,
        nu2: None,
        omega1: None,
        omega2: None,
        prime: None,
        n_operator: None,
        xi: None,
        phi: None,
    }
}

/// A degree-2 cocycle of the abelian plane with adjoint (zero) action:
/// `f(e0, e1, e0) = e0`.
fn abelian_cocycle() -> MultiLinearMap {
    let mut m = MultiLinearMap::zero(3, 2, 2);
    m.set(&[0, 1, 0], 0, homlts::rat_int(1));
    m.set(&[1, 0, 0], 0, homlts::rat_int(-1));
    m
}

pub fn fixture_document(name: &str) -> Option<ProblemDocument> {
    match name {
        "example-2d-as-printed" => Some(base_document(
            name,
            "two-dimensional pair as published; the second bracket fails twist \
             multiplicativity and the fundamental identity",
            &fixtures::example_2d_as_printed(),
        )),
        "example-2d-corrected" => Some(base_document(
            name,
            "identity-twist variant; multiplicativity holds but the second \
             bracket still fails the fundamental identity",
            &fixtures::example_2d_corrected(),
        )),
        "abelian-d2" => {
            let c = fixtures::abelian(2);
            let rep = adjoint_representation(&c);
            let mut doc = base_document(
                name,
                "zero brackets on the plane; includes the adjoint (zero) \
                 representation and a sample cocycle pair for extension and \
                 cohomology-class commands",
                &c,
            );
            doc.rep = Some(RepSection {
                dim_v: 2,
                beta: matrix_to_strings(rep.beta()),
                theta1: Vec::new(),
                theta2: Vec::new(),
            });
            let cocycle = abelian_cocycle();
            doc.mu1 = Some(entries_of_map(&cocycle));
            doc.mu2 = Some(Vec::new());
            doc.nu1 = Some(entries_of_map(&cocycle));
            doc.nu2 = Some(Vec::new());
            Some(doc)
        }
        "abelian-d3" => {
            let c = fixtures::abelian(3);
            let mut doc = base_document(
                name,
                "zero brackets in dimension three with a one-dimensional \
                 trivial fiber",
                &c,
            );
            doc.rep = Some(RepSection {
                dim_v: 1,
                beta: vec![vec!["1".to_string()]],
                theta1: Vec::new(),
                theta2: Vec::new(),
            });
            Some(doc)
        }
        "nijenhuis-lambda-id" => {
            let h = fixtures::two_dim_bracket_one();
            let lambda = rat(3, 5);
            let n = Matrix::scalar(2, &lambda);
            let deformed = nijenhuis_deformed_bracket(&h, &n).expect("scalar operator commutes");
            let pair =
                CompatibleHomLts::new(h.space().clone(), h.bracket().clone(), deformed).unwrap();
            let mut doc = base_document(
                name,
                "valid two-dimensional bracket paired with its Nijenhuis \
                 deformation by (3/5)·id; N is included",
                &pair,
            );
            doc.n_operator = Some(matrix_to_strings(&n));
            // include the generated deformation so the deform command runs
            let d = homlts::deform::trivial_deformation_from_nijenhuis(&pair, &n)
                .expect("scalar operator is Nijenhuis");
            doc.mu1 = Some(entries_of_bracket(d.mu(Side::One)));
            doc.mu2 = Some(entries_of_bracket(d.mu(Side::Two)));
            doc.omega1 = Some(entries_of_bracket(d.omega(Side::One)));
            doc.omega2 = Some(entries_of_bracket(d.omega(Side::Two)));
            Some(doc)
        }
        "semidirect-4d" => Some(base_document(
            name,
            "semidirect product of the two-dimensional diagonal pair with its \
             adjoint representation",
            &fixtures::semidirect_4d(),
        )),
        _ => None,
    }
}

/// Canonical JSON bytes of a fixture document (stable across runs).
pub fn fixture_bytes(name: &str) -> Option<Vec<u8>> {
    let doc = fixture_document(name)?;
    let mut bytes = serde_json::to_vec_pretty(&doc).expect("fixture serializes");
    bytes.push(b'\n');
    Some(bytes)
}
