//! Linear deformations `[-,-,-]^i_t = π_i + t μ_i + t² ω_i` of a compatible
//! pair, checked exactly.
//!
//! Two independent routes decide whether a candidate `((μ₁,μ₂),(ω₁,ω₂))`
//! generates a deformation:
//!
//! * the *bracket route* evaluates the twelve graded-bracket equations, the
//!   `t^k` coefficients (`k = 1..4`) of `[A₁(t),A₁(t)] = [A₁(t),A₂(t)] =
//!   [A₂(t),A₂(t)] = 0` expanded bilinearly; the diagonal `t²` equations
//!   carry the coefficient 2 that bilinear expansion produces
//!   (`2[πᵢ,ωᵢ] + [μᵢ,μᵢ] = 0`);
//! * the *coefficient route* expands every structural axiom of the deformed
//!   pair as a polynomial in `t` (via the polarized fundamental-identity
//!   expression, never the graded bracket) and requires each coefficient to
//!   vanish.
//!
//! The two routes agree equation by equation (pass/fail and witness tuples),
//! and the report records that agreement; a disagreement would be a defect.
//!
//! Equivalence of deformations is decided by `N_t = Id + tN`: five
//! coefficient identities on basis triples per bracket, plus the packaged
//! polynomial identity `N_t [a,b,c]_t = [N_t a, N_t b, N_t c]'_t` checked
//! degree by degree in `ℚ[t]`. A deformation is trivial when it is
//! equivalent to the undeformed pair, and every Nijenhuis operator produces
//! such a trivial deformation with explicit `μ`, `ω`.

use crate::algebra::{CompatibleHomLts, Side, TriBracket};
use crate::coboundary::{coboundary_map, CochainComplex};
use crate::cochain::{cyclic_last_triple, equivariant};
use crate::error::{Error, Result};
use crate::graded::graded_bracket;
use crate::matrix::Matrix;
use crate::multilinear::MultiLinearMap;
use crate::rational::Rat;
use crate::report::{AxiomCheck, AxiomReport, DEFAULT_WITNESS_LIMIT};
use crate::representation::{adjoint_representation, CompatibleRepresentation};
use crate::verify::{fi_expr, is_nijenhuis_compatible};
use num_traits::One;

/// A candidate linear deformation: first- and second-order coefficient
/// tensors for both brackets. Construction validates that all four tensors
/// are degree-2 cochains with adjoint coefficients (antisymmetric, ternary
/// cyclic, twist-equivariant).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearDeformation {
    mu: (TriBracket, TriBracket),
    omega: (TriBracket, TriBracket),
}

impl LinearDeformation {
    pub fn new(
        c: &CompatibleHomLts,
        mu: (TriBracket, TriBracket),
        omega: (TriBracket, TriBracket),
    ) -> Result<Self> {
        let alpha = c.twist();
        for (name, t) in [
            ("mu1", &mu.0),
            ("mu2", &mu.1),
            ("omega1", &omega.0),
            ("omega2", &omega.1),
        ] {
            if t.dim() != c.dim() {
                return Err(Error::DimensionMismatch(format!(
                    "{name} has dimension {}, algebra has {}",
                    t.dim(),
                    c.dim()
                )));
            }
            if !cyclic_last_triple(t.map()) {
                return Err(Error::NotACochain(format!(
                    "{name} violates the ternary cyclic condition"
                )));
            }
            if !equivariant(t.map(), alpha, alpha) {
                return Err(Error::NotACochain(format!(
                    "{name} is not twist-equivariant"
                )));
            }
        }
        Ok(LinearDeformation { mu, omega })
    }

    pub fn zero(dim: usize) -> Self {
        LinearDeformation {
            mu: (TriBracket::zero(dim), TriBracket::zero(dim)),
            omega: (TriBracket::zero(dim), TriBracket::zero(dim)),
        }
    }

    pub fn mu(&self, side: Side) -> &TriBracket {
        match side {
            Side::One => &self.mu.0,
            Side::Two => &self.mu.1,
        }
    }

    pub fn omega(&self, side: Side) -> &TriBracket {
        match side {
            Side::One => &self.omega.0,
            Side::Two => &self.omega.1,
        }
    }

    /// The deformed bracket of one side as a polynomial in `t`.
    pub fn bracket_polynomial(&self, c: &CompatibleHomLts, side: Side) -> TPolynomialBracket {
        TPolynomialBracket {
            coefficients: vec![
                c.bracket(side).clone(),
                self.mu(side).clone(),
                self.omega(side).clone(),
            ],
        }
    }
}

/// A bracket-valued polynomial in the deformation parameter; evaluating at
/// any rational `t` yields an honest bracket tensor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TPolynomialBracket {
    /// Coefficient tensors by ascending power of `t`.
    pub coefficients: Vec<TriBracket>,
}

impl TPolynomialBracket {
    pub fn evaluate(&self, t: &Rat) -> TriBracket {
        let dim = self.coefficients[0].dim();
        let mut acc = TriBracket::zero(dim);
        let mut power = Rat::one();
        for c in &self.coefficients {
            acc = acc.add(&c.scale(&power));
            power = &power * t;
        }
        acc
    }

    pub fn degree_bound(&self) -> usize {
        self.coefficients.len().saturating_sub(1)
    }
}

/// One of the twelve deformation equations, checked by both routes.
#[derive(Clone, Debug)]
pub struct DeformationEquation {
    /// Which bracket identity the equation comes from.
    pub family: &'static str,
    /// Power of `t` whose coefficient this equation is.
    pub power: usize,
    /// Human-readable graded-bracket form, e.g. `2[pi1,omega1]+[mu1,mu1]`.
    pub formula: String,
    /// Evaluated via graded brackets.
    pub bracket_check: AxiomCheck,
    /// Evaluated via the polynomial expansion of the structural axioms.
    pub coefficient_check: AxiomCheck,
}

impl DeformationEquation {
    pub fn holds(&self) -> bool {
        self.bracket_check.passed()
    }

    /// The two routes agree: same verdict, same failing tuples.
    pub fn routes_agree(&self) -> bool {
        self.bracket_check.failure_count == self.coefficient_check.failure_count
            && self
                .bracket_check
                .witnesses
                .iter()
                .map(|w| &w.tuple)
                .eq(self.coefficient_check.witnesses.iter().map(|w| &w.tuple))
    }
}

/// Full deformation check: the twelve equations (double-checked by the two
/// routes) plus the linear per-coefficient axioms and the undeformed base
/// coefficients.
#[derive(Clone, Debug)]
pub struct DeformationReport {
    pub equations: Vec<DeformationEquation>,
    /// Cyclicity/multiplicativity of each coefficient tensor and the `t^0`
    /// (base structure) coefficients of the three bracket identities.
    pub structural: AxiomReport,
}

impl DeformationReport {
    pub fn passed(&self) -> bool {
        self.structural.passed() && self.equations.iter().all(DeformationEquation::holds)
    }

    pub fn routes_agree(&self) -> bool {
        self.equations.iter().all(DeformationEquation::routes_agree)
    }

    pub fn failing_equations(&self) -> Vec<String> {
        let mut out: Vec<String> = self
            .equations
            .iter()
            .filter(|e| !e.holds())
            .map(|e| e.formula.clone())
            .collect();
        out.extend(
            self.structural
                .failing_axioms()
                .iter()
                .map(|s| s.to_string()),
        );
        out
    }
}

fn part_names(side: Side) -> [&'static str; 3] {
    match side {
        Side::One => ["pi1", "mu1", "omega1"],
        Side::Two => ["pi2", "mu2", "omega2"],
    }
}

/// Readable form of `Σ_{i+j=k} [a_i, b_j]`, merging symmetric duplicates
/// when both part lists are the same.
#[allow(clippy::needless_range_loop)] // coordinate indexing reads clearer here
fn coefficient_formula(
    names_a: [&str; 3],
    names_b: [&str; 3],
    k: usize,
    symmetric: bool,
) -> String {
    let mut terms: Vec<String> = Vec::new();
    for i in 0..=2usize {
        if k < i || k - i > 2 {
            continue;
        }
        let j = k - i;
        if symmetric && i > j {
            continue; // merged into the (j, i) term
        }
        let coeff = if symmetric && i != j { "2" } else { "" };
        terms.push(format!("{coeff}[{},{}]", names_a[i], names_b[j]));
    }
    terms.join("+")
}

/// `Σ_{i+j=k} [a_i, b_j]` evaluated with the graded bracket.
#[allow(clippy::needless_range_loop)] // coordinate indexing reads clearer here
fn bracket_coefficient(
    parts_a: &[&MultiLinearMap; 3],
    parts_b: &[&MultiLinearMap; 3],
    k: usize,
    alpha: &Matrix,
) -> MultiLinearMap {
    let d = parts_a[0].dim_in();
    let mut acc = MultiLinearMap::zero(5, d, d);
    for i in 0..=2usize {
        if k < i || k - i > 2 {
            continue;
        }
        let j = k - i;
        acc = acc.add(&graded_bracket(parts_a[i], parts_b[j], alpha));
    }
    acc
}

/// `Σ_{i+j=k} (E(a_i, b_j) + E(b_j, a_i))` via the polarized fundamental
/// identity; the independent coefficient route.
#[allow(clippy::needless_range_loop)] // coordinate indexing reads clearer here
fn fi_coefficient(
    parts_a: &[&MultiLinearMap; 3],
    parts_b: &[&MultiLinearMap; 3],
    k: usize,
    alpha: &Matrix,
) -> MultiLinearMap {
    let d = parts_a[0].dim_in();
    let mut acc = MultiLinearMap::zero(5, d, d);
    for i in 0..=2usize {
        if k < i || k - i > 2 {
            continue;
        }
        let j = k - i;
        acc = acc.add(&fi_expr(parts_a[i], parts_b[j], alpha));
        acc = acc.add(&fi_expr(parts_b[j], parts_a[i], alpha));
    }
    acc
}

/// Check a candidate deformation by both routes. See the module docs for
/// what the routes are; the report keeps every equation separately.
pub fn check_deformation(c: &CompatibleHomLts, d: &LinearDeformation) -> DeformationReport {
    check_deformation_with_limit(c, d, DEFAULT_WITNESS_LIMIT)
}

pub fn check_deformation_with_limit(
    c: &CompatibleHomLts,
    d: &LinearDeformation,
    limit: usize,
) -> DeformationReport {
    let alpha = c.twist();
    let p1 = [
        c.bracket(Side::One).map(),
        d.mu(Side::One).map(),
        d.omega(Side::One).map(),
    ];
    let p2 = [
        c.bracket(Side::Two).map(),
        d.mu(Side::Two).map(),
        d.omega(Side::Two).map(),
    ];
    let n1 = part_names(Side::One);
    let n2 = part_names(Side::Two);

    type Family<'a> = (
        &'static str,
        &'a [&'a MultiLinearMap; 3],
        &'a [&'a MultiLinearMap; 3],
        bool,
        [&'a str; 3],
        [&'a str; 3],
    );
    let families: [Family; 3] = [
        ("first-bracket", &p1, &p1, true, n1, n1),
        ("mixed", &p1, &p2, false, n1, n2),
        ("second-bracket", &p2, &p2, true, n2, n2),
    ];

    let mut equations = Vec::new();
    let mut structural = AxiomReport::default();

    for (family, a, b, symmetric, names_a, names_b) in families {
        // base (t^0) coefficient: the undeformed identity, reported with the
        // structural checks rather than the twelve equations
        structural.push(AxiomCheck::vanishes(
            &format!("base:{family}"),
            &fi_coefficient(a, b, 0, alpha),
            limit,
        ));
        for k in 1..=4usize {
            let formula = coefficient_formula(names_a, names_b, k, symmetric);
            let bracket_check = AxiomCheck::vanishes(
                &format!("bracket-route:{family}:t^{k}"),
                &bracket_coefficient(a, b, k, alpha),
                limit,
            );
            let coefficient_check = AxiomCheck::vanishes(
                &format!("coefficient-route:{family}:t^{k}"),
                &fi_coefficient(a, b, k, alpha),
                limit,
            );
            equations.push(DeformationEquation {
                family,
                power: k,
                formula,
                bracket_check,
                coefficient_check,
            });
        }
    }

    // linear axioms hold coefficient-wise: cyclicity and multiplicativity of
    // each coefficient tensor (antisymmetry is structural in TriBracket)
    for (side, parts) in [(Side::One, &p1), (Side::Two, &p2)] {
        let names = part_names(side);
        for (k, part) in parts.iter().enumerate() {
            let cyc = part
                .add(&part.permute_args(&[2, 0, 1]))
                .add(&part.permute_args(&[1, 2, 0]));
            structural.push(AxiomCheck::vanishes(
                &format!("{}:ternary-cyclic-sum", names[k]),
                &cyc,
                limit,
            ));
            structural.push(AxiomCheck::compare(
                &format!("{}:twist-multiplicativity", names[k]),
                &part.compose_output(alpha),
                &part.apply_to_slots(&[0, 1, 2], alpha),
                limit,
            ));
        }
    }

    DeformationReport {
        equations,
        structural,
    }
}

/// Whether `(μ₁, μ₂)` is a cocycle of the adjoint complex:
/// `(δ₁μ₁, δ₁μ₂ + δ₂μ₁, δ₂μ₂) = 0`, computed directly on tensors.
pub fn infinitesimal_is_cocycle(
    c: &CompatibleHomLts,
    r: &CompatibleRepresentation,
    mu: (&TriBracket, &TriBracket),
) -> bool {
    let alpha = c.twist();
    let d1 =
        |f: &MultiLinearMap| coboundary_map(f, c.bracket(Side::One), r.theta(Side::One), alpha);
    let d2 =
        |f: &MultiLinearMap| coboundary_map(f, c.bracket(Side::Two), r.theta(Side::Two), alpha);
    d1(mu.0.map()).is_zero()
        && d1(mu.1.map()).add(&d2(mu.0.map())).is_zero()
        && d2(mu.1.map()).is_zero()
}

/// `Σ f(N^{s₁}a, N^{s₂}b, N^{s₃}c)` over the slot patterns with exactly
/// `count` occurrences of `N`.
fn slot_sum(map: &MultiLinearMap, n: &Matrix, count: usize) -> MultiLinearMap {
    let d = map.dim_in();
    let mut acc = MultiLinearMap::zero(3, d, d);
    for mask in 0..8usize {
        if (mask as u32).count_ones() as usize != count {
            continue;
        }
        let slots: Vec<usize> = (0..3).filter(|s| mask & (1 << s) != 0).collect();
        acc = acc.add(&map.apply_to_slots(&slots, n));
    }
    acc
}

/// Equivalence of two deformations via `N_t = Id + tN`: the five coefficient
/// identities per bracket plus the packaged polynomial identity
/// `N_t [a,b,c]^i_t = [N_t a, N_t b, N_t c]'^i_t` in `ℚ[t]`.
pub fn check_equivalence(
    c: &CompatibleHomLts,
    d: &LinearDeformation,
    d_prime: &LinearDeformation,
    n: &Matrix,
) -> AxiomReport {
    check_equivalence_with_limit(c, d, d_prime, n, DEFAULT_WITNESS_LIMIT)
}

pub fn check_equivalence_with_limit(
    c: &CompatibleHomLts,
    d: &LinearDeformation,
    d_prime: &LinearDeformation,
    n: &Matrix,
    limit: usize,
) -> AxiomReport {
    let alpha = c.twist();
    let dim = c.dim();
    let mut report = AxiomReport::default();

    // α ∘ N = N ∘ α, reported in tensor form for uniform witnesses
    let as_map = |m: &Matrix| MultiLinearMap::from_fn(1, dim, dim, |t, l| m.at(l, t[0]).clone());
    report.push(AxiomCheck::compare(
        "twist-commutation",
        &as_map(&alpha.mul(n)),
        &as_map(&n.mul(alpha)),
        limit,
    ));

    for side in [Side::One, Side::Two] {
        let tag = side.label();
        let pi = c.bracket(side).map();
        let mu = d.mu(side).map();
        let om = d.omega(side).map();
        let mu_p = d_prime.mu(side).map();
        let om_p = d_prime.omega(side).map();

        // order 1: Nπ + μ = Σ π(N one slot) + μ'
        report.push(AxiomCheck::compare(
            &format!("bracket{tag}:order-1"),
            &pi.compose_output(n).add(mu),
            &slot_sum(pi, n, 1).add(mu_p),
            limit,
        ));
        // order 2: ω + Nμ = Σ π(N two slots) + Σ μ'(N one slot) + ω'
        report.push(AxiomCheck::compare(
            &format!("bracket{tag}:order-2"),
            &om.add(&mu.compose_output(n)),
            &slot_sum(pi, n, 2).add(&slot_sum(mu_p, n, 1)).add(om_p),
            limit,
        ));
        // order 3: Nω = π(N,N,N) + Σ μ'(N two slots) + Σ ω'(N one slot)
        report.push(AxiomCheck::compare(
            &format!("bracket{tag}:order-3"),
            &om.compose_output(n),
            &slot_sum(pi, n, 3)
                .add(&slot_sum(mu_p, n, 2))
                .add(&slot_sum(om_p, n, 1)),
            limit,
        ));
        // order 4: μ'(N,N,N) + Σ ω'(N two slots) = 0
        report.push(AxiomCheck::vanishes(
            &format!("bracket{tag}:order-4"),
            &slot_sum(mu_p, n, 3).add(&slot_sum(om_p, n, 2)),
            limit,
        ));
        // order 5: ω'(N,N,N) = 0
        report.push(AxiomCheck::vanishes(
            &format!("bracket{tag}:order-5"),
            &slot_sum(om_p, n, 3),
            limit,
        ));

        // packaged identity in ℚ[t]: coefficients of (Id + tN) ∘ A(t)
        // against those of A'(t) with (Id + tN) in every argument slot
        let a_parts = [pi, mu, om];
        let ap_parts = [mu_p, om_p];
        for k in 0..=5usize {
            let mut lhs = MultiLinearMap::zero(3, dim, dim);
            if k <= 2 {
                lhs = lhs.add(a_parts[k]);
            }
            if (1..=3).contains(&k) {
                lhs = lhs.add(&a_parts[k - 1].compose_output(n));
            }
            let mut rhs = MultiLinearMap::zero(3, dim, dim);
            for slots_n in 0..=3usize.min(k) {
                let j = k - slots_n; // power carried by the coefficient tensor
                let part = match j {
                    0 => Some(pi),
                    1 => Some(ap_parts[0]),
                    2 => Some(ap_parts[1]),
                    _ => None,
                };
                if let Some(p) = part {
                    rhs = rhs.add(&slot_sum(p, n, slots_n));
                }
            }
            report.push(AxiomCheck::compare(
                &format!("bracket{tag}:packaged:t^{k}"),
                &lhs,
                &rhs,
                limit,
            ));
        }
    }

    report
}

/// A deformation is trivial when it is equivalent to the undeformed pair.
pub fn is_trivial_deformation(c: &CompatibleHomLts, d: &LinearDeformation, n: &Matrix) -> bool {
    check_equivalence(c, d, &LinearDeformation::zero(c.dim()), n).passed()
}

/// The trivial deformation generated by a Nijenhuis operator:
/// `μ_i = [N·,·,·] + [·,N·,·] + [·,·,N·] − N[·,·,·]` and
/// `ω_i = [N·,N·,·] + [N·,·,N·] + [·,N·,N·] − N μ_i`.
pub fn trivial_deformation_from_nijenhuis(
    c: &CompatibleHomLts,
    n: &Matrix,
) -> Result<LinearDeformation> {
    let report = is_nijenhuis_compatible(c, n);
    if !report.passed() {
        return Err(Error::Precondition(format!(
            "operator is not Nijenhuis for the pair: {:?}",
            report.failing_axioms()
        )));
    }
    let mut mus = Vec::new();
    let mut omegas = Vec::new();
    for side in [Side::One, Side::Two] {
        let b = c.bracket(side).map();
        let mu = slot_sum(b, n, 1).sub(&b.compose_output(n));
        let omega = slot_sum(b, n, 2).sub(&mu.compose_output(n));
        mus.push(TriBracket::from_map(mu).expect("generated mu is antisymmetric"));
        omegas.push(TriBracket::from_map(omega).expect("generated omega is antisymmetric"));
    }
    let omega2 = omegas.pop().unwrap();
    let omega1 = omegas.pop().unwrap();
    let mu2 = mus.pop().unwrap();
    let mu1 = mus.pop().unwrap();
    LinearDeformation::new(c, (mu1, mu2), (omega1, omega2))
}

/// Class coordinates of the infinitesimal in the second cohomology of the
/// adjoint complex. Inputs whose difference is a coboundary share the same
/// coordinates.
pub fn deformation_class(c: &CompatibleHomLts, mu: (&TriBracket, &TriBracket)) -> Result<Vec<Rat>> {
    let complex = CochainComplex::new(c.clone(), adjoint_representation(c))?;
    complex.cohomology_class(&[mu.0.map(), mu.1.map()])
}
