//! Abelian extensions of compatible pairs and their classification by second
//! cohomology.
//!
//! An abelian extension presents a compatible pair on a bigger space `ĝ`
//! with an inclusion `i : V → ĝ` of an abelian ideal and a projection
//! `p : ĝ → g`, both compatible with the twists. Extensions are normalized
//! on ingestion into split coordinates `g ⊕ V` with the canonical inclusion
//! and projection, by solving for a deterministic complement of the ideal.
//!
//! A section `σ` (a right inverse of `p`) induces a representation of the
//! base on the fiber, `θ^i(a,b)u = [u, σa, σb]^i`, independent of the choice
//! of section, and a cocycle `μ_i(a,b,c) = [σa,σb,σc]^i − σ[a,b,c]^i` whose
//! class does not depend on the section either. Conversely a 2-cochain pair
//! `(μ₁, μ₂)` builds an extension whose total structure verifies exactly
//! when the pair is a cocycle, and cohomologous cocycles give equivalent
//! extensions with an explicit equivalence witness `ζ_ξ(a, u) = (a, ξa + u)`.

use crate::algebra::{CompatibleHomLts, Side, TriBracket};
use crate::coboundary::CochainComplex;
use crate::cochain::{cyclic_last_triple, equivariant, pair_antisymmetric};
use crate::construct::semidirect_product_unchecked;
use crate::error::{Error, Result};
use crate::matrix::{rank, solve, Matrix};
use crate::multilinear::MultiLinearMap;
use crate::rational::Rat;
use crate::report::{AxiomCheck, AxiomReport, DEFAULT_WITNESS_LIMIT};
use crate::representation::{CompatibleRepresentation, ThetaGrid};
use crate::verify::homomorphism_report;
use num_traits::Zero;

/// An abelian extension realized in split coordinates: the total structure
/// lives on `g ⊕ V`, the inclusion is `u ↦ (0, u)` and the projection is
/// `(a, u) ↦ a`.
#[derive(Clone, Debug)]
pub struct AbelianExtension {
    total: CompatibleHomLts,
    inclusion: Matrix,
    projection: Matrix,
    base: CompatibleHomLts,
    fiber: crate::algebra::HomSpace,
}

/// A linear right inverse of the projection.
#[derive(Clone, Debug)]
pub struct Section {
    sigma: Matrix,
}

impl Section {
    #[allow(clippy::needless_range_loop)] // coordinate indexing reads clearer here
    pub fn new(e: &AbelianExtension, sigma: Matrix) -> Result<Self> {
        if sigma.rows() != e.total.dim() || sigma.cols() != e.base.dim() {
            return Err(Error::DimensionMismatch(format!(
                "section is {}x{}, expected {}x{}",
                sigma.rows(),
                sigma.cols(),
                e.total.dim(),
                e.base.dim()
            )));
        }
        if e.projection.mul(&sigma) != Matrix::identity(e.base.dim()) {
            return Err(Error::InvalidSection);
        }
        Ok(Section { sigma })
    }

    pub fn matrix(&self) -> &Matrix {
        &self.sigma
    }
}

impl AbelianExtension {
    /// Ingest an arbitrary presentation: validate every structural invariant,
    /// then change basis into split coordinates via the deterministic section
    /// obtained by solving `p σ₀ = id` with free variables zeroed.
    pub fn new(
        total: CompatibleHomLts,
        inclusion: Matrix,
        projection: Matrix,
        base: CompatibleHomLts,
        fiber: crate::algebra::HomSpace,
    ) -> Result<Self> {
        let d = base.dim();
        let dv = fiber.dim();
        let big = total.dim();
        if big != d + dv
            || inclusion.rows() != big
            || inclusion.cols() != dv
            || projection.rows() != d
            || projection.cols() != big
        {
            return Err(Error::DimensionMismatch(
                "extension shapes do not fit a short exact sequence".into(),
            ));
        }
        validate_extension(&total, &inclusion, &projection, &base, &fiber)?;

        // deterministic complement: solve p σ₀ = id column by column
        let mut sigma0 = Matrix::zero(big, d);
        for c in 0..d {
            let mut target = vec![Rat::zero(); d];
            target[c] = crate::rational::one();
            let col = solve(&projection, &target)
                .ok_or(Error::Malformed("projection is not surjective".into()))?;
            for (r, val) in col.iter().enumerate() {
                sigma0.set(r, c, val.clone());
            }
        }
        // basis change S = [σ₀ | i] mapping split coordinates to the original space
        let mut s = Matrix::zero(big, big);
        for r in 0..big {
            for c in 0..d {
                s.set(r, c, sigma0.at(r, c).clone());
            }
            for c in 0..dv {
                s.set(r, d + c, inclusion.at(r, c).clone());
            }
        }
        let s_inv = invert(&s).ok_or(Error::Malformed(
            "section and inclusion do not span the total space".into(),
        ))?;

        let transport = |b: &TriBracket| -> TriBracket {
            TriBracket::from_map(
                b.map()
                    .apply_to_slots(&[0, 1, 2], &s)
                    .compose_output(&s_inv),
            )
            .expect("basis change preserves antisymmetry")
        };
        let twist = s_inv.mul(total.twist()).mul(&s);
        let space = crate::algebra::HomSpace::new(big, twist)?;
        let split_total = CompatibleHomLts::new(
            space,
            transport(total.bracket(Side::One)),
            transport(total.bracket(Side::Two)),
        )?;
        let split = AbelianExtension {
            total: split_total,
            inclusion: canonical_inclusion(d, dv),
            projection: canonical_projection(d, dv),
            base,
            fiber,
        };
        validate_extension(
            &split.total,
            &split.inclusion,
            &split.projection,
            &split.base,
            &split.fiber,
        )?;
        Ok(split)
    }

    fn from_split(
        total: CompatibleHomLts,
        base: CompatibleHomLts,
        fiber: crate::algebra::HomSpace,
    ) -> Result<Self> {
        let e = AbelianExtension {
            inclusion: canonical_inclusion(base.dim(), fiber.dim()),
            projection: canonical_projection(base.dim(), fiber.dim()),
            total,
            base,
            fiber,
        };
        validate_extension(&e.total, &e.inclusion, &e.projection, &e.base, &e.fiber)?;
        Ok(e)
    }

    pub fn total(&self) -> &CompatibleHomLts {
        &self.total
    }

    pub fn inclusion(&self) -> &Matrix {
        &self.inclusion
    }

    pub fn projection(&self) -> &Matrix {
        &self.projection
    }

    pub fn base(&self) -> &CompatibleHomLts {
        &self.base
    }

    pub fn fiber(&self) -> &crate::algebra::HomSpace {
        &self.fiber
    }

    /// `σ(a) = (a, 0)` in split coordinates.
    pub fn canonical_section(&self) -> Section {
        let d = self.base.dim();
        let big = self.total.dim();
        Section {
            sigma: Matrix::from_fn(big, d, |r, c| {
                if r == c {
                    crate::rational::one()
                } else {
                    Rat::zero()
                }
            }),
        }
    }
}

fn canonical_inclusion(d: usize, dv: usize) -> Matrix {
    Matrix::from_fn(d + dv, dv, |r, c| {
        if r == d + c {
            crate::rational::one()
        } else {
            Rat::zero()
        }
    })
}

fn canonical_projection(d: usize, dv: usize) -> Matrix {
    Matrix::from_fn(d, d + dv, |r, c| {
        if r == c {
            crate::rational::one()
        } else {
            Rat::zero()
        }
    })
}

#[allow(clippy::needless_range_loop)] // coordinate indexing reads clearer here
fn invert(m: &Matrix) -> Option<Matrix> {
    let n = m.rows();
    let mut out = Matrix::zero(n, n);
    for c in 0..n {
        let mut target = vec![Rat::zero(); n];
        target[c] = crate::rational::one();
        let col = solve(m, &target)?;
        for r in 0..n {
            out.set(r, c, col[r].clone());
        }
    }
    if m.mul(&out) == Matrix::identity(n) {
        Some(out)
    } else {
        None
    }
}

/// Structural invariants of an extension presentation.
fn validate_extension(
    total: &CompatibleHomLts,
    inclusion: &Matrix,
    projection: &Matrix,
    base: &CompatibleHomLts,
    fiber: &crate::algebra::HomSpace,
) -> Result<()> {
    let d = base.dim();
    let dv = fiber.dim();
    let fail = |what: &str| Err(Error::Precondition(format!("extension invariant: {what}")));

    if !projection.mul(inclusion).is_zero() {
        return fail("p ∘ i = 0");
    }
    if rank(inclusion) != dv {
        return fail("inclusion has full rank");
    }
    if rank(projection) != d {
        return fail("projection has full rank");
    }
    if total.twist().mul(inclusion) != inclusion.mul(fiber.twist()) {
        return fail("twist intertwines the inclusion");
    }
    if projection.mul(total.twist()) != base.twist().mul(projection) {
        return fail("twist intertwines the projection");
    }
    // V is an abelian ideal: [i(u), i(v), -] = 0 for both brackets
    let big = total.dim();
    let i_cols: Vec<Vec<Rat>> = (0..dv).map(|c| inclusion.column(c)).collect();
    let mut unit = vec![Rat::zero(); big];
    for side in [Side::One, Side::Two] {
        let b = total.bracket(side);
        for u in 0..dv {
            for v in 0..dv {
                for w in 0..big {
                    unit.iter_mut().for_each(|x| *x = Rat::zero());
                    unit[w] = crate::rational::one();
                    let val = b.eval(&i_cols[u], &i_cols[v], &unit);
                    if val.iter().any(|x| !x.is_zero()) {
                        return fail("fiber is an abelian ideal");
                    }
                }
            }
        }
        // p is a bracket homomorphism onto the base
        let projected = b.map().compose_output(projection);
        let p_cols: Vec<Vec<Rat>> = (0..big).map(|c| projection.column(c)).collect();
        let pulled = MultiLinearMap::from_fn(3, big, d, |t, l| {
            base.bracket(side)
                .eval(&p_cols[t[0]], &p_cols[t[1]], &p_cols[t[2]])[l]
                .clone()
        });
        if projected != pulled {
            return fail("projection is a bracket homomorphism");
        }
    }
    Ok(())
}

/// Validate that a tensor is a degree-2 cochain on `(g, V)`:
/// pair-antisymmetric, ternary cyclic, twist-equivariant.
fn validate_two_cochain(
    name: &str,
    m: &MultiLinearMap,
    alpha: &Matrix,
    beta: &Matrix,
    d: usize,
    dv: usize,
) -> Result<()> {
    if m.arity() != 3 || m.dim_in() != d || m.dim_out() != dv {
        return Err(Error::Malformed(format!(
            "{name} must be an arity-3 tensor {d} -> {dv}"
        )));
    }
    if !pair_antisymmetric(m) {
        return Err(Error::NotACochain(format!(
            "{name} is not pair-antisymmetric"
        )));
    }
    if !cyclic_last_triple(m) {
        return Err(Error::NotACochain(format!(
            "{name} violates the ternary cyclic condition"
        )));
    }
    if !equivariant(m, alpha, beta) {
        return Err(Error::NotACochain(format!(
            "{name} is not twist-equivariant"
        )));
    }
    Ok(())
}

/// Build the extension determined by a 2-cochain pair:
/// `[(a,u),(b,v),(c,w)]_i` given by `([a,b,c]^i, θ^i(b,c)u − θ^i(a,c)v +
/// D^i(a,b)w + μ_i(a,b,c))`. The total structure passes the compatibility
/// verifier exactly when `(μ₁, μ₂)` is a cocycle.
pub fn build_extension(
    c: &CompatibleHomLts,
    r: &CompatibleRepresentation,
    mu: (&MultiLinearMap, &MultiLinearMap),
) -> Result<AbelianExtension> {
    let d = c.dim();
    let dv = r.v().dim();
    validate_two_cochain("mu1", mu.0, c.twist(), r.beta(), d, dv)?;
    validate_two_cochain("mu2", mu.1, c.twist(), r.beta(), d, dv)?;

    let semi = semidirect_product_unchecked(c, r);
    let mut brackets = Vec::new();
    for (side, m) in [(Side::One, mu.0), (Side::Two, mu.1)] {
        let base_map = semi.bracket(side).map();
        let total = d + dv;
        let with_mu = MultiLinearMap::from_fn(3, total, total, |t, l| {
            let mut v = base_map.get(t, l).clone();
            if l >= d && t.iter().all(|&x| x < d) {
                v = &v + m.get(t, l - d);
            }
            v
        });
        brackets.push(TriBracket::from_map(with_mu).expect("cocycle term is antisymmetric"));
    }
    let b2 = brackets.pop().unwrap();
    let b1 = brackets.pop().unwrap();
    let total = CompatibleHomLts::new(semi.space().clone(), b1, b2)?;
    AbelianExtension::from_split(total, c.clone(), r.v().clone())
}

/// The representation of the base on the fiber induced by a section:
/// `θ^i(a,b) u = [u, σa, σb]^i`. Independent of the section.
pub fn induced_representation(
    e: &AbelianExtension,
    s: &Section,
) -> Result<CompatibleRepresentation> {
    let d = e.base.dim();
    let dv = e.fiber.dim();
    let sigma_cols: Vec<Vec<Rat>> = (0..d).map(|c| s.sigma.column(c)).collect();
    let i_cols: Vec<Vec<Rat>> = (0..dv).map(|c| e.inclusion.column(c)).collect();
    let mut grids = Vec::new();
    for side in [Side::One, Side::Two] {
        let b = e.total.bracket(side);
        let grid = ThetaGrid::from_fn(d, dv, |a, bb| {
            Matrix::from_fn(dv, dv, |row, u| {
                let val = b.eval(&i_cols[u], &sigma_cols[a], &sigma_cols[bb]);
                // the value lies in the fiber; read off its V-coordinates
                val[d + row].clone()
            })
        });
        grids.push(grid);
    }
    let g2 = grids.pop().unwrap();
    let g1 = grids.pop().unwrap();
    CompatibleRepresentation::new(e.base.space().clone(), e.fiber.clone(), g1, g2)
}

/// The cocycle pair determined by a section:
/// `μ_i(a,b,c) = [σa, σb, σc]^i − σ([a,b,c]^i)`, valued in the fiber.
pub fn extract_cocycle(
    e: &AbelianExtension,
    s: &Section,
) -> Result<(MultiLinearMap, MultiLinearMap)> {
    let d = e.base.dim();
    let dv = e.fiber.dim();
    let sigma_cols: Vec<Vec<Rat>> = (0..d).map(|c| s.sigma.column(c)).collect();
    let mut parts = Vec::new();
    for side in [Side::One, Side::Two] {
        let bt = e.total.bracket(side);
        let bg = e.base.bracket(side);
        let part = MultiLinearMap::from_fn(3, d, dv, |t, l| {
            let big = bt.eval(&sigma_cols[t[0]], &sigma_cols[t[1]], &sigma_cols[t[2]]);
            let down = s.sigma.apply(bg.value(t[0], t[1], t[2]));
            // exactness puts the difference inside the fiber summand
            &big[d + l] - &down[d + l]
        });
        // sanity: the g-components of the difference vanish
        debug_assert!({
            let mut ok = true;
            for i in 0..d {
                for j in 0..d {
                    for k in 0..d {
                        let big = bt.eval(&sigma_cols[i], &sigma_cols[j], &sigma_cols[k]);
                        let down = s.sigma.apply(bg.value(i, j, k));
                        for g_coord in 0..d {
                            ok &= (&big[g_coord] - &down[g_coord]).is_zero();
                        }
                    }
                }
            }
            ok
        });
        parts.push(part);
    }
    let p2 = parts.pop().unwrap();
    let p1 = parts.pop().unwrap();
    Ok((p1, p2))
}

/// Decide whether two cocycle pairs differ by a coboundary; on success
/// return a 1-cochain `ξ` with `δ_c ξ = (μ₁−ν₁, μ₂−ν₂)` (the deterministic
/// particular solution).
pub fn are_cohomologous(
    c: &CompatibleHomLts,
    r: &CompatibleRepresentation,
    mu: (&MultiLinearMap, &MultiLinearMap),
    nu: (&MultiLinearMap, &MultiLinearMap),
) -> Result<Option<MultiLinearMap>> {
    let complex = CochainComplex::new(c.clone(), r.clone())?;
    for (name, pair) in [("mu", &mu), ("nu", &nu)] {
        if !complex.is_cocycle(&[pair.0, pair.1])? {
            return Err(Error::Precondition(format!("{name} is not a cocycle")));
        }
    }
    let diff1 = mu.0.sub(nu.0);
    let diff2 = mu.1.sub(nu.1);
    let target = complex.tuple_coordinates(&[&diff1, &diff2])?;
    let dc1 = complex.delta_c_matrix(1)?;
    let Some(coords) = solve(&dc1, &target) else {
        return Ok(None);
    };
    let basis1 = complex.basis(1)?;
    Ok(Some(basis1.combination(&coords).into_map()))
}

/// The equivalence candidate `ζ_ξ(a, u) = (a, ξ(a) + u)` together with its
/// verification: isomorphism of the totals and commutation with the
/// canonical inclusions and projections.
pub struct ExtensionEquivalence {
    pub zeta: Matrix,
    pub report: AxiomReport,
}

pub fn equivalence_from_xi(
    e1: &AbelianExtension,
    e2: &AbelianExtension,
    xi: &MultiLinearMap,
) -> Result<ExtensionEquivalence> {
    let d = e1.base.dim();
    let dv = e1.fiber.dim();
    if e2.base.dim() != d || e2.fiber.dim() != dv {
        return Err(Error::DimensionMismatch(
            "extensions have different base or fiber".into(),
        ));
    }
    if xi.arity() != 1 || xi.dim_in() != d || xi.dim_out() != dv {
        return Err(Error::DimensionMismatch(
            "xi must be a linear map from the base to the fiber".into(),
        ));
    }
    let big = d + dv;
    let zeta = Matrix::from_fn(big, big, |r, c| {
        if r == c {
            crate::rational::one()
        } else if r >= d && c < d {
            xi.get(&[c], r - d).clone()
        } else {
            Rat::zero()
        }
    });

    let mut report = homomorphism_report(&e1.total, &e2.total, &zeta, DEFAULT_WITNESS_LIMIT)?;
    let as_map = |m: &Matrix| {
        MultiLinearMap::from_fn(1, m.cols().max(1), m.rows(), |t, l| m.at(l, t[0]).clone())
    };
    report.push(AxiomCheck::compare(
        "diagram:inclusion",
        &as_map(&zeta.mul(&e1.inclusion)),
        &as_map(&e2.inclusion),
        DEFAULT_WITNESS_LIMIT,
    ));
    report.push(AxiomCheck::compare(
        "diagram:projection",
        &as_map(&e2.projection.mul(&zeta)),
        &as_map(&e1.projection),
        DEFAULT_WITNESS_LIMIT,
    ));
    if rank(&zeta) != big {
        report.push(AxiomCheck {
            axiom: "nondegeneracy".into(),
            failure_count: 1,
            witnesses: Vec::new(),
        });
    }
    Ok(ExtensionEquivalence { zeta, report })
}

/// Class of the extension in the second cohomology of the base with
/// coefficients in the section-induced representation. Invariant under the
/// choice of section and under equivalence of extensions.
pub fn classify_extension(e: &AbelianExtension) -> Result<Vec<Rat>> {
    let section = e.canonical_section();
    let rep = induced_representation(e, &section)?;
    let (mu1, mu2) = extract_cocycle(e, &section)?;
    let complex = CochainComplex::new(e.base.clone(), rep)?;
    complex.cohomology_class(&[&mu1, &mu2])
}
