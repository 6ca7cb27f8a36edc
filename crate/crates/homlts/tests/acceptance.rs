//! Acceptance suite: one test per criterion, each printing a pass/fail line.
//!
//! Every check is exact (equality of rationals, never a tolerance) and the
//! stated runtime budgets are asserted with wall-clock measurements.

use std::panic::{catch_unwind, resume_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use homlts::coboundary::{delta_matrix_between, CochainComplex};
use homlts::cochain::cochain_space_basis;
use homlts::construct::{nijenhuis_deformed_bracket, sum_bracket};
use homlts::deform::{
    check_deformation, is_trivial_deformation, trivial_deformation_from_nijenhuis,
    LinearDeformation,
};
use homlts::extend::{
    are_cohomologous, build_extension, classify_extension, equivalence_from_xi, extract_cocycle,
    induced_representation, Section,
};
use homlts::fixtures;
use homlts::graded::{graded_bracket, mc_self_check};
use homlts::representation::{adjoint_representation, CompatibleRepresentation};
use homlts::verify::{is_isomorphism, is_nijenhuis_compatible, verify_compatible, verify_hom_lts};
use homlts::{rat, rat_int, CompatibleHomLts, HomLts, HomSpace, Matrix, Rat, Side, TriBracket};
use num_traits::Zero;
use rand::{rngs::StdRng, Rng, SeedableRng};

fn criterion(number: usize, name: &str, body: impl FnOnce()) {
    let result = catch_unwind(AssertUnwindSafe(body));
    let status = if result.is_ok() { "PASS" } else { "FAIL" };
    println!("[acceptance] criterion {number:02} ({name}): {status}");
    if let Err(panic) = result {
        resume_unwind(panic);
    }
}

fn random_rat(rng: &mut StdRng) -> Rat {
    rat(rng.gen_range(-6..=6), rng.gen_range(1..=4))
}

#[test]
fn acceptance_01_axiom_verifiers() {
    criterion(1, "axiom verifiers and documented failure witness", || {
        // zero brackets pass for arbitrary twists up to dimension 4
        let mut rng = StdRng::seed_from_u64(101);
        for d in 1..=4usize {
            for _ in 0..3 {
                let twist = Matrix::from_fn(d, d, |_, _| random_rat(&mut rng));
                let h = HomLts::new(HomSpace::new(d, twist).unwrap(), TriBracket::zero(d)).unwrap();
                assert!(verify_hom_lts(&h).passed(), "zero bracket at d={d}");
            }
        }

        // the published 2-dimensional bracket 1 passes everything
        let start = Instant::now();
        let b1 = fixtures::two_dim_bracket_one();
        let report = verify_hom_lts(&b1);
        assert!(report.passed(), "failing: {:?}", report.failing_axioms());

        // the as-printed pair fails multiplicativity on bracket 2 with the
        // documented witness
        let printed = fixtures::example_2d_as_printed();
        let second = verify_hom_lts(&printed.hom_lts(Side::Two));
        let mult = second.check("twist-multiplicativity").unwrap();
        assert!(!mult.passed());
        let w = &mult.witnesses[0];
        assert_eq!(w.tuple, vec![0, 1, 1]);
        assert_eq!(w.lhs, vec![rat_int(0), rat_int(-1)]);
        assert_eq!(w.rhs, vec![rat_int(0), rat_int(1)]);
        assert!(
            start.elapsed() < Duration::from_secs(1),
            "bracket fixtures budget"
        );

        // every named verified fixture passes inside the per-fixture budget
        for (name, c) in fixtures::verified_compatible_fixtures() {
            let start = Instant::now();
            assert!(verify_compatible(&c).passed(), "{name}");
            assert!(
                start.elapsed() < Duration::from_secs(1),
                "{name} exceeded one second"
            );
        }
    });
}

#[test]
fn acceptance_02_maurer_cartan_equivalence() {
    criterion(2, "bracket self-check agrees with the verifier", || {
        // 25 randomized antisymmetric (automatically cyclic) tensors at d=2
        let mut rng = StdRng::seed_from_u64(202);
        let mut disagreements = 0;
        let mut valid_seen = 0;
        let mut invalid_seen = 0;
        for _ in 0..25 {
            let raw =
                homlts::MultiLinearMap::from_fn(3, 2, 2, |_, _| rat_int(rng.gen_range(-2..=2)));
            let b = TriBracket::antisymmetrized(raw);
            let h = HomLts::new(HomSpace::untwisted(2), b).unwrap();
            let via_verify = verify_hom_lts(&h).passed();
            if via_verify != mc_self_check(&h) {
                disagreements += 1;
            }
            if via_verify {
                valid_seen += 1;
            } else {
                invalid_seen += 1;
            }
        }
        assert_eq!(disagreements, 0);
        assert!(invalid_seen > 0, "sweep should include non-examples");
        let _ = valid_seen;

        // all fixture brackets, valid and invalid alike
        let mut pool: Vec<HomLts> = Vec::new();
        for (_, c) in fixtures::verified_compatible_fixtures() {
            pool.push(c.hom_lts(Side::One));
            pool.push(c.hom_lts(Side::Two));
        }
        pool.push(fixtures::example_2d_as_printed().hom_lts(Side::Two));
        pool.push(fixtures::example_2d_corrected().hom_lts(Side::Two));
        for h in &pool {
            assert_eq!(verify_hom_lts(h).passed(), mc_self_check(h));
        }
    });
}

#[test]
fn acceptance_03_linear_combinations() {
    criterion(3, "linear combinations of compatible pairs verify", || {
        let mut rng = StdRng::seed_from_u64(303);
        for (name, c) in fixtures::verified_compatible_fixtures() {
            for _ in 0..5 {
                let k1 = random_rat(&mut rng);
                let k2 = random_rat(&mut rng);
                let summed = sum_bracket(&c, &k1, &k2);
                assert!(verify_hom_lts(&summed).passed(), "{name} at ({k1}, {k2})");
            }
        }
    });
}

#[test]
fn acceptance_04_coboundary_identities() {
    criterion(
        4,
        "coboundary square and anticommutation identities",
        || {
            let start = Instant::now();
            let mut fixtures_checked = 0;
            for (name, c) in fixtures::verified_compatible_fixtures() {
                if c.dim() > 3 {
                    continue; // the matrix identities are checked on d ≤ 3 here
                }
                fixtures_checked += 1;
                let rep = adjoint_representation(&c);
                let complex = CochainComplex::new(c.clone(), rep).unwrap();
                let top = if c.dim() == 2 { 3 } else { 2 };
                for n in 1..=top {
                    let d1_next = complex.delta_matrix(Side::One, n + 1).unwrap();
                    let d1 = complex.delta_matrix(Side::One, n).unwrap();
                    assert!(d1_next.mul(&d1).is_zero(), "{name}: first square at {n}");
                    let d2_next = complex.delta_matrix(Side::Two, n + 1).unwrap();
                    let d2 = complex.delta_matrix(Side::Two, n).unwrap();
                    assert!(d2_next.mul(&d2).is_zero(), "{name}: second square at {n}");
                    assert!(
                        d1_next.mul(&d2).add(&d2_next.mul(&d1)).is_zero(),
                        "{name}: anticommutation at {n}"
                    );
                    let dc_next = complex.delta_c_matrix(n + 1).unwrap();
                    let dc = complex.delta_c_matrix(n).unwrap();
                    assert!(
                        dc_next.mul(&dc).is_zero(),
                        "{name}: staircase square at {n}"
                    );
                }
            }
            assert!(
                fixtures_checked >= 3,
                "need at least three distinct fixtures"
            );
            assert!(
                start.elapsed() < Duration::from_secs(30),
                "coboundary identity budget"
            );
        },
    );
}

#[test]
fn acceptance_05_twist_power_lock() {
    criterion(5, "coboundary equals signed graded bracket", || {
        // matrix(δ_i f) = (−1)^{n−1} [π_i, f] for n = 1, 2 on the adjoint
        // representation of every verified fixture
        for (name, c) in fixtures::verified_compatible_fixtures() {
            let rep = adjoint_representation(&c);
            let complex = CochainComplex::new(c.clone(), rep).unwrap();
            for n in 1..=2usize {
                let basis_n = complex.basis(n).unwrap();
                let basis_n1 = complex.basis(n + 1).unwrap();
                for side in [Side::One, Side::Two] {
                    let delta = complex.delta_matrix(side, n).unwrap();
                    let pi = c.bracket(side).map();
                    for i in 0..basis_n.dim() {
                        let f = basis_n.basis_map(i);
                        let br = graded_bracket(pi, &f, c.twist());
                        let sign = if n % 2 == 1 { rat_int(1) } else { rat_int(-1) };
                        let coords = basis_n1
                            .coordinates(&br.scale(&sign))
                            .expect("bracket image stays in the cochain space");
                        assert_eq!(
                            delta.column(i),
                            coords,
                            "{name}: degree {n}, side {}, basis {i}",
                            side.label()
                        );
                    }
                }
            }
        }
    });
}

#[test]
fn acceptance_06_chain_map() {
    criterion(6, "summed-structure chain map commutes", || {
        for (name, c) in fixtures::verified_compatible_fixtures() {
            if c.dim() > 3 {
                continue;
            }
            let r = adjoint_representation(&c);
            let complex = CochainComplex::new(c.clone(), r.clone()).unwrap();
            let plus_bracket = sum_bracket(&c, &rat_int(1), &rat_int(1));
            let plus_rep = r.linear_combination(&rat_int(1), &rat_int(1));
            for n in 1..=2usize {
                let basis_n = complex.basis(n).unwrap();
                let basis_n1 = complex.basis(n + 1).unwrap();
                let dc = complex.delta_c_matrix(n).unwrap();
                let delta_plus =
                    delta_matrix_between(plus_bracket.bracket(), &plus_rep, &basis_n, &basis_n1)
                        .unwrap();
                let phi = |k: usize, dim: usize| {
                    Matrix::from_fn(dim, k * dim, |r_, c_| {
                        if c_ % dim == r_ {
                            rat_int(1)
                        } else {
                            rat_int(0)
                        }
                    })
                };
                let lhs = phi(n + 1, basis_n1.dim()).mul(&dc);
                let rhs = delta_plus.mul(&phi(n, basis_n.dim()));
                assert_eq!(lhs, rhs, "{name}: chain map at degree {n}");
            }
        }
    });
}

#[test]
fn acceptance_07_cohomology_numbers() {
    criterion(7, "cohomology dimensions on the abelian fixtures", || {
        let start = Instant::now();

        // 2-dimensional abelian with adjoint (= zero) coefficients
        let c = fixtures::abelian(2);
        let rep = adjoint_representation(&c);
        let complex = CochainComplex::new(c, rep).unwrap();
        assert_eq!(complex.basis(1).unwrap().dim(), 4, "degree-1 space");
        assert_eq!(
            2 * complex.basis(2).unwrap().dim(),
            8,
            "degree-2 chain group"
        );
        let h1 = complex.cohomology(1).unwrap();
        assert_eq!(h1.dim_cohomology, 4);
        assert_eq!(h1.dim_coboundaries, 0);
        let h2 = complex.cohomology(2).unwrap();
        assert_eq!(h2.dim_cohomology, 8);

        // 3-dimensional abelian with a one-dimensional fiber
        let c3 = fixtures::abelian(3);
        let v = HomSpace::untwisted(1);
        let basis = cochain_space_basis(c3.space(), &v, 2, true).unwrap();
        assert_eq!(basis.dim(), 8, "cyclic degree-2 space per copy");

        assert!(
            start.elapsed() < Duration::from_secs(10),
            "cohomology numbers budget"
        );
    });
}

#[test]
fn acceptance_08_nijenhuis_pipeline() {
    criterion(
        8,
        "scalar Nijenhuis operators generate trivial deformations",
        || {
            for (name, c) in fixtures::verified_compatible_fixtures() {
                for lambda in fixtures::nijenhuis_lambdas() {
                    let n = Matrix::scalar(c.dim(), &lambda);
                    assert!(
                        is_nijenhuis_compatible(&c, &n).passed(),
                        "{name}: λ = {lambda}"
                    );
                    // the deformed pair (b, b_N) is compatible
                    for side in [Side::One, Side::Two] {
                        let h = c.hom_lts(side);
                        let deformed = nijenhuis_deformed_bracket(&h, &n).unwrap();
                        let pair =
                            CompatibleHomLts::new(c.space().clone(), h.bracket().clone(), deformed)
                                .unwrap();
                        assert!(
                            verify_compatible(&pair).passed(),
                            "{name}: deformed pair at λ = {lambda}"
                        );
                    }
                    // generated deformation: closed forms, triviality, both routes
                    let d = trivial_deformation_from_nijenhuis(&c, &n).unwrap();
                    let two_lambda = &lambda + &lambda;
                    let lambda_sq = &lambda * &lambda;
                    for side in [Side::One, Side::Two] {
                        assert_eq!(d.mu(side), &c.bracket(side).scale(&two_lambda));
                        assert_eq!(d.omega(side), &c.bracket(side).scale(&lambda_sq));
                    }
                    let report = check_deformation(&c, &d);
                    assert!(report.passed(), "{name}: {:?}", report.failing_equations());
                    assert!(report.routes_agree());
                    assert!(is_trivial_deformation(&c, &d, &n), "{name}: λ = {lambda}");
                }
            }

            // arbitrary operators on zero brackets
            let mut rng = StdRng::seed_from_u64(808);
            for d in 2..=3usize {
                let c = fixtures::abelian(d);
                let n = Matrix::from_fn(d, d, |_, _| random_rat(&mut rng));
                assert!(is_nijenhuis_compatible(&c, &n).passed());
                let def = trivial_deformation_from_nijenhuis(&c, &n).unwrap();
                assert!(def.mu(Side::One).is_zero() && def.omega(Side::Two).is_zero());
            }
        },
    );
}

#[test]
fn acceptance_09_deformation_double_oracle() {
    criterion(9, "bracket route and coefficient route agree", || {
        // genuine deformations
        let c = fixtures::two_dim_diagonal_pair();
        for lambda in fixtures::nijenhuis_lambdas() {
            let n = Matrix::scalar(2, &lambda);
            let d = trivial_deformation_from_nijenhuis(&c, &n).unwrap();
            let report = check_deformation(&c, &d);
            assert!(report.passed());
            assert!(report.routes_agree());
        }

        // adversarial non-deformations on the incompatible base
        let c3 = fixtures::incompatible_pair();
        let cases = [
            LinearDeformation::new(
                &c3,
                (c3.bracket(Side::One).clone(), TriBracket::zero(3)),
                (TriBracket::zero(3), TriBracket::zero(3)),
            )
            .unwrap(),
            LinearDeformation::new(
                &c3,
                (c3.bracket(Side::Two).clone(), c3.bracket(Side::One).clone()),
                (c3.bracket(Side::One).clone(), TriBracket::zero(3)),
            )
            .unwrap(),
        ];
        for d in &cases {
            let report = check_deformation(&c3, d);
            assert!(!report.passed(), "adversarial input must fail");
            assert!(report.routes_agree(), "routes must agree on failures too");
        }

        // randomized members of the degree-2 space over a verified base
        let mut rng = StdRng::seed_from_u64(909);
        let base = fixtures::three_dim_diagonal_pair();
        let basis = cochain_space_basis(base.space(), base.space(), 2, true).unwrap();
        let random_member = |rng: &mut StdRng| {
            let coords: Vec<Rat> = (0..basis.dim())
                .map(|_| rat_int(rng.gen_range(-1..=1)))
                .collect();
            TriBracket::from_map(basis.combination(&coords).into_map()).unwrap()
        };
        let mut failures_seen = 0;
        for _ in 0..4 {
            let d = LinearDeformation::new(
                &base,
                (random_member(&mut rng), random_member(&mut rng)),
                (random_member(&mut rng), random_member(&mut rng)),
            )
            .unwrap();
            let report = check_deformation(&base, &d);
            if !report.passed() {
                failures_seen += 1;
            }
            assert!(report.routes_agree(), "double oracle must agree");
        }
        assert!(
            failures_seen > 0,
            "random sweep should include non-deformations"
        );
    });
}

#[test]
fn acceptance_10_extensions() {
    criterion(
        10,
        "extension roundtrips, witnesses and classification",
        || {
            let start = Instant::now();

            // base with nonzero degree-2 coboundaries and a line fiber
            let c = fixtures::three_dim_diagonal_pair();
            let r = CompatibleRepresentation::trivial(c.space().clone(), HomSpace::untwisted(1));
            let complex = CochainComplex::new(c.clone(), r.clone()).unwrap();
            let basis = complex.basis(2).unwrap();
            let zero = homlts::MultiLinearMap::zero(3, 3, 1);

            let mut cocycles = Vec::new();
            let mut non_cocycle = None;
            for i in 0..basis.dim() {
                let m = basis.basis_map(i);
                if complex.is_cocycle(&[&m, &zero]).unwrap() {
                    cocycles.push(m);
                } else if non_cocycle.is_none() {
                    non_cocycle = Some(m);
                }
            }

            // roundtrip on cocycles; non-cocycles break the total structure
            for m in &cocycles {
                let e = build_extension(&c, &r, (m, &zero)).unwrap();
                assert!(verify_compatible(e.total()).passed());
                let (back1, back2) = extract_cocycle(&e, &e.canonical_section()).unwrap();
                assert_eq!(&back1, m);
                assert!(back2.is_zero());
            }
            let bad = non_cocycle.expect("fixture provides a non-cocycle");
            let e_bad = build_extension(&c, &r, (&bad, &zero)).unwrap();
            assert!(!verify_compatible(e_bad.total()).passed());

            // section independence and the section-change coboundary identity
            let m = cocycles.first().expect("fixture provides cocycles");
            let e = build_extension(&c, &r, (m, &zero)).unwrap();
            let s1 = e.canonical_section();
            let sigma2 = Matrix::from_fn(4, 3, |r_, c_| {
                if r_ == c_ {
                    rat_int(1)
                } else if r_ == 3 {
                    rat_int([2, -1, 3][c_])
                } else {
                    rat_int(0)
                }
            });
            let s2 = Section::new(&e, sigma2).unwrap();
            let rep1 = induced_representation(&e, &s1).unwrap();
            let rep2 = induced_representation(&e, &s2).unwrap();
            assert_eq!(rep1, rep2, "induced representation is section independent");
            let (m1, m2) = extract_cocycle(&e, &s1).unwrap();
            let (n1, n2) = extract_cocycle(&e, &s2).unwrap();
            let xi_map = homlts::MultiLinearMap::from_fn(1, 3, 1, |t, l| {
                s1.matrix().at(3 + l, t[0]) - s2.matrix().at(3 + l, t[0])
            });
            let alpha = c.twist();
            let d1 = homlts::coboundary::coboundary_map(
                &xi_map,
                c.bracket(Side::One),
                r.theta(Side::One),
                alpha,
            );
            let d2 = homlts::coboundary::coboundary_map(
                &xi_map,
                c.bracket(Side::Two),
                r.theta(Side::Two),
                alpha,
            );
            assert_eq!(m1.sub(&n1), d1);
            assert_eq!(m2.sub(&n2), d2);

            // cohomologous pair produces a verified equivalence witness with the
            // commuting diagram, and classification is constant along it
            let basis1 = complex.basis(1).unwrap();
            let xi0 = basis1.basis_map(0);
            let b1 = homlts::coboundary::coboundary_map(
                &xi0,
                c.bracket(Side::One),
                r.theta(Side::One),
                alpha,
            );
            let b2 = homlts::coboundary::coboundary_map(
                &xi0,
                c.bracket(Side::Two),
                r.theta(Side::Two),
                alpha,
            );
            let shifted = (m.add(&b1), zero.add(&b2));
            let e2 = build_extension(&c, &r, (&shifted.0, &shifted.1)).unwrap();
            let xi = are_cohomologous(&c, &r, (&shifted.0, &shifted.1), (m, &zero))
                .unwrap()
                .expect("cohomologous by construction");
            let eq = equivalence_from_xi(&e2, &e, &xi).unwrap();
            assert!(
                eq.report.passed(),
                "failing: {:?}",
                eq.report.failing_axioms()
            );
            assert!(is_isomorphism(e2.total(), e.total(), &eq.zeta).unwrap());
            assert_eq!(
                classify_extension(&e2).unwrap(),
                classify_extension(&e).unwrap()
            );

            // the trivial class: semidirect products classify to zero
            let c2 = fixtures::two_dim_diagonal_pair();
            let r2 = adjoint_representation(&c2);
            let zero2 = homlts::MultiLinearMap::zero(3, 2, 2);
            let semi = build_extension(&c2, &r2, (&zero2, &zero2)).unwrap();
            assert!(classify_extension(&semi).unwrap().iter().all(Rat::is_zero));

            // abelian base: nonzero-class vs zero-class pair is not cohomologous
            let ca = fixtures::abelian(2);
            let ra = adjoint_representation(&ca);
            let basis_a = cochain_space_basis(ca.space(), ca.space(), 2, true).unwrap();
            let nonzero = basis_a.basis_map(0);
            let zero_a = homlts::MultiLinearMap::zero(3, 2, 2);
            let witness =
                are_cohomologous(&ca, &ra, (&nonzero, &zero_a), (&zero_a, &zero_a)).unwrap();
            assert!(witness.is_none(), "distinct classes admit no witness");

            assert!(
                start.elapsed() < Duration::from_secs(30),
                "extension suite budget"
            );
        },
    );
}
