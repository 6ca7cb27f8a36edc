//! Constructors: linear combinations, semidirect products, brackets induced
//! from Hom-Lie algebras, and Nijenhuis-deformed brackets.

use crate::algebra::{CompatibleHomLts, HomLts, HomSpace, Side, TriBracket};
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::multilinear::MultiLinearMap;
use crate::rational::Rat;
use crate::representation::CompatibleRepresentation;
use crate::verify::verify_compatible_representation;
use num_traits::Zero;

/// The bracket `k1 [-,-,-]^1 + k2 [-,-,-]^2` on the same twisted space.
/// For a genuinely compatible pair the result is again a Hom-Lie triple
/// system for every choice of `k1`, `k2`.
pub fn sum_bracket(c: &CompatibleHomLts, k1: &Rat, k2: &Rat) -> HomLts {
    let b = c
        .bracket(Side::One)
        .scale(k1)
        .add(&c.bracket(Side::Two).scale(k2));
    HomLts::new(c.space().clone(), b).expect("dimensions agree by construction")
}

/// Semidirect-product brackets on `g ⊕ V`:
/// `[(a,u),(b,v),(c,w)]_i = ([a,b,c]^i, D_i(a,b)w + θ_i(b,c)u − θ_i(a,c)v)`
/// with twist `α ⊕ β`. Errors if `r` fails its compatibility verification.
pub fn semidirect_product(
    c: &CompatibleHomLts,
    r: &CompatibleRepresentation,
) -> Result<CompatibleHomLts> {
    let report = verify_compatible_representation(c, r)?;
    if !report.passed() {
        return Err(Error::Precondition(format!(
            "representation fails verification: {:?}",
            report.failing_axioms()
        )));
    }
    Ok(semidirect_product_unchecked(c, r))
}

pub(crate) fn semidirect_product_unchecked(
    c: &CompatibleHomLts,
    r: &CompatibleRepresentation,
) -> CompatibleHomLts {
    let d = c.dim();
    let dv = r.v().dim();
    let total = d + dv;
    let space = c.space().direct_sum(r.v());
    let mut brackets = Vec::new();
    for side in [Side::One, Side::Two] {
        let b = c.bracket(side);
        let theta = r.theta(side);
        let dgrid = theta.d_grid();
        let map = MultiLinearMap::from_fn(3, total, total, |t, l| {
            let (p, q, s) = (t[0], t[1], t[2]);
            let in_g = |i: usize| i < d;
            match (in_g(p), in_g(q), in_g(s)) {
                (true, true, true) => {
                    if l < d {
                        b.get(p, q, s, l).clone()
                    } else {
                        Rat::zero()
                    }
                }
                // θ(b,c)u for u in V
                (false, true, true) => {
                    if l >= d {
                        theta.at(q, s).at(l - d, p - d).clone()
                    } else {
                        Rat::zero()
                    }
                }
                // −θ(a,c)v
                (true, false, true) => {
                    if l >= d {
                        -theta.at(p, s).at(l - d, q - d).clone()
                    } else {
                        Rat::zero()
                    }
                }
                // D(a,b)w
                (true, true, false) => {
                    if l >= d {
                        dgrid.at(p, q).at(l - d, s - d).clone()
                    } else {
                        Rat::zero()
                    }
                }
                _ => Rat::zero(),
            }
        });
        brackets.push(TriBracket::from_map(map).expect("semidirect bracket is antisymmetric"));
    }
    let b2 = brackets.pop().unwrap();
    let b1 = brackets.pop().unwrap();
    CompatibleHomLts::new(space, b1, b2).expect("dimensions agree by construction")
}

/// Triple bracket induced by a Hom-Lie algebra:
/// `[x, y, z] := [[x, y], α z]`. The bilinear structure constants
/// (`bilinear[(i, j), l]`) must be antisymmetric.
pub fn from_hom_lie_algebra(bilinear: &MultiLinearMap, alpha: &Matrix) -> Result<HomLts> {
    check_bilinear(bilinear, alpha)?;
    let space = HomSpace::new(bilinear.dim_in(), alpha.clone())?;
    let triple = induced_triple(bilinear, bilinear, alpha);
    HomLts::new(space, triple)
}

/// Triple brackets induced by a pair of Hom-Lie brackets:
/// `[a, b, c]^i := [[a, b]^{j(i)}, α c]^i` where `inner[i]` selects `j(i)`.
/// The default pairing is `j(1) = 1, j(2) = 2`. The constructor does not
/// assert compatibility; run [`crate::verify::verify_compatible`] on the
/// result.
pub fn from_compatible_hom_lie(
    bil1: &MultiLinearMap,
    bil2: &MultiLinearMap,
    alpha: &Matrix,
    inner: [Side; 2],
) -> Result<CompatibleHomLts> {
    check_bilinear(bil1, alpha)?;
    check_bilinear(bil2, alpha)?;
    if bil1.dim_in() != bil2.dim_in() {
        return Err(Error::DimensionMismatch(
            "the two bilinear brackets have different dimensions".into(),
        ));
    }
    let space = HomSpace::new(bil1.dim_in(), alpha.clone())?;
    let pick = |s: Side| match s {
        Side::One => bil1,
        Side::Two => bil2,
    };
    let t1 = induced_triple(bil1, pick(inner[0]), alpha);
    let t2 = induced_triple(bil2, pick(inner[1]), alpha);
    CompatibleHomLts::new(space, t1, t2)
}

pub const DEFAULT_PAIRING: [Side; 2] = [Side::One, Side::Two];

fn check_bilinear(bilinear: &MultiLinearMap, alpha: &Matrix) -> Result<()> {
    assert_eq!(bilinear.arity(), 2, "bilinear bracket must have arity 2");
    assert_eq!(bilinear.dim_in(), bilinear.dim_out());
    if alpha.rows() != bilinear.dim_in() || alpha.cols() != bilinear.dim_in() {
        return Err(Error::DimensionMismatch(
            "twist shape does not match the bilinear bracket".into(),
        ));
    }
    if !bilinear.add(&bilinear.swap_args(0, 1)).is_zero() {
        return Err(Error::Malformed(
            "bilinear structure constants are not antisymmetric".into(),
        ));
    }
    Ok(())
}

/// `(x, y, z) ↦ outer(inner(x, y), α z)` as an arity-3 tensor.
fn induced_triple(outer: &MultiLinearMap, inner: &MultiLinearMap, alpha: &Matrix) -> TriBracket {
    let map = outer.apply_to_slot(1, alpha).insert_at_slot(0, inner);
    TriBracket::from_map(map).expect("induced bracket inherits antisymmetry")
}

/// The Nijenhuis-deformed bracket
/// `[x,y,z]_N = [x,Ny,Nz] + [Nx,y,Nz] + [Nx,Ny,z]
///            − N([Nx,y,z] + [x,Ny,z] + [x,y,Nz]) + N²[x,y,z]`.
/// Requires `N` to commute with the twist.
pub fn nijenhuis_deformed_bracket(h: &HomLts, n: &Matrix) -> Result<TriBracket> {
    if n.rows() != h.dim() || n.cols() != h.dim() {
        return Err(Error::DimensionMismatch(format!(
            "operator is {}x{}, algebra dimension is {}",
            n.rows(),
            n.cols(),
            h.dim()
        )));
    }
    if !n.commutes_with(h.twist()) {
        return Err(Error::TwistCommutation);
    }
    let map = h.bracket().map();
    let two_n = map
        .apply_to_slots(&[1, 2], n)
        .add(&map.apply_to_slots(&[0, 2], n))
        .add(&map.apply_to_slots(&[0, 1], n));
    let one_n = map
        .apply_to_slot(0, n)
        .add(&map.apply_to_slot(1, n))
        .add(&map.apply_to_slot(2, n));
    let deformed = two_n
        .sub(&one_n.compose_output(n))
        .add(&map.compose_output(&n.mul(n)));
    Ok(TriBracket::from_map(deformed).expect("deformed bracket inherits antisymmetry"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_int};
    use crate::representation::adjoint_representation;
    use crate::verify::{verify_compatible, verify_hom_lts};

    fn bracket1_pair() -> CompatibleHomLts {
        let space = HomSpace::new(2, Matrix::diagonal(&[rat_int(1), rat_int(-1)])).unwrap();
        let b = TriBracket::from_entries(2, &[(0, 1, 1, 0, rat_int(1))]).unwrap();
        CompatibleHomLts::new(space.clone(), b.clone(), b).unwrap()
    }

    #[test]
    fn sum_bracket_special_cases() {
        let c = bracket1_pair();
        let only_first = sum_bracket(&c, &rat_int(1), &rat_int(0));
        assert_eq!(only_first.bracket(), c.bracket(Side::One));
        let zero = sum_bracket(&c, &rat_int(0), &rat_int(0));
        assert!(zero.bracket().is_zero());
        let mix = sum_bracket(&c, &rat(2, 3), &rat_int(-5));
        assert!(verify_hom_lts(&mix).passed());
    }

    #[test]
    fn semidirect_with_trivial_rep_is_direct_sum() {
        let c = bracket1_pair();
        let v = HomSpace::untwisted(1);
        let r = CompatibleRepresentation::trivial(c.space().clone(), v);
        let s = semidirect_product(&c, &r).unwrap();
        assert_eq!(s.dim(), 3);
        // any index in V kills the bracket
        for side in [Side::One, Side::Two] {
            let b = s.bracket(side);
            for i in 0..3 {
                for j in 0..3 {
                    for k in 0..3 {
                        if i == 2 || j == 2 || k == 2 {
                            assert!(b.value(i, j, k).iter().all(num_traits::Zero::is_zero));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn semidirect_of_adjoint_is_compatible_and_restricts() {
        let c = bracket1_pair();
        let r = adjoint_representation(&c);
        let s = semidirect_product(&c, &r).unwrap();
        assert_eq!(s.dim(), 4);
        let report = verify_compatible(&s);
        assert!(report.passed(), "failures: {:?}", report.failing_axioms());
        // restriction to g-indices equals the input brackets
        for side in [Side::One, Side::Two] {
            for i in 0..2 {
                for j in 0..2 {
                    for k in 0..2 {
                        for l in 0..2 {
                            assert_eq!(
                                s.bracket(side).get(i, j, k, l),
                                c.bracket(side).get(i, j, k, l)
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn induced_bracket_from_two_dim_lie_algebra() {
        // [e0, e1] = e0, alpha = id: [e0,e1,e1] = [[e0,e1], e1] = e0
        let mut bil = MultiLinearMap::zero(2, 2, 2);
        bil.set(&[0, 1], 0, rat_int(1));
        bil.set(&[1, 0], 0, rat_int(-1));
        let h = from_hom_lie_algebra(&bil, &Matrix::identity(2)).unwrap();
        assert_eq!(*h.bracket().get(0, 1, 1, 0), rat_int(1));
        // [e0,e1,e0] = [[e0,e1], e0] = [e0, e0] = 0
        assert!(h
            .bracket()
            .value(0, 1, 0)
            .iter()
            .all(num_traits::Zero::is_zero));
        assert!(verify_hom_lts(&h).passed());
    }

    #[test]
    fn induced_abelian_is_zero() {
        let bil = MultiLinearMap::zero(2, 2, 2);
        let h = from_hom_lie_algebra(&bil, &Matrix::identity(2)).unwrap();
        assert!(h.bracket().is_zero());
    }

    #[test]
    fn compatible_induced_diagonal_case() {
        let mut bil = MultiLinearMap::zero(2, 2, 2);
        bil.set(&[0, 1], 0, rat_int(1));
        bil.set(&[1, 0], 0, rat_int(-1));
        let c = from_compatible_hom_lie(&bil, &bil, &Matrix::identity(2), DEFAULT_PAIRING).unwrap();
        let single = from_hom_lie_algebra(&bil, &Matrix::identity(2)).unwrap();
        assert_eq!(c.bracket(Side::One), single.bracket());
        assert_eq!(c.bracket(Side::Two), single.bracket());
        assert!(verify_compatible(&c).passed());
    }

    #[test]
    fn nijenhuis_deformation_scalar_cases() {
        let c = bracket1_pair();
        let h = c.hom_lts(Side::One);
        let zero = nijenhuis_deformed_bracket(&h, &Matrix::zero(2, 2)).unwrap();
        assert!(zero.is_zero());
        let id = nijenhuis_deformed_bracket(&h, &Matrix::identity(2)).unwrap();
        assert_eq!(&id, h.bracket());
        let lambda = rat(3, 5);
        let n = Matrix::scalar(2, &lambda);
        let scaled = nijenhuis_deformed_bracket(&h, &n).unwrap();
        assert_eq!(scaled, h.bracket().scale(&(&lambda * &lambda)));
    }

    #[test]
    fn nijenhuis_deformation_requires_twist_commutation() {
        let c = bracket1_pair();
        let h = c.hom_lts(Side::One);
        let n = Matrix::from_rows(vec![
            vec![rat_int(0), rat_int(1)],
            vec![rat_int(1), rat_int(0)],
        ]);
        assert!(matches!(
            nijenhuis_deformed_bracket(&h, &n),
            Err(Error::TwistCommutation)
        ));
    }
}
