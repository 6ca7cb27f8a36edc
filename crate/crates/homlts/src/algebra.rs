//! Structure-constant representations of (compatible) Hom-Lie triple systems.
//!
//! A Hom-Lie triple system is a vector space with a trilinear bracket
//! `[-,-,-]`, antisymmetric in its first two arguments, together with a
//! twisting endomorphism `α`. The bracket is stored as its degree-4
//! structure-constant tensor `c[i][j][k][l]`, meaning
//! `[e_i, e_j, e_k] = Σ_l c[i][j][k][l] e_l`. Antisymmetry in `(i, j)` is
//! enforced at construction; the remaining axioms (ternary cyclic sum,
//! twisted fundamental identity, multiplicativity of the twist) are checked
//! by the verifiers in [`crate::verify`], which report rather than fail.

use crate::error::{Error, Result};
use crate::matrix::{rank, Matrix};
use crate::multilinear::MultiLinearMap;
use crate::rational::Rat;
use num_traits::Zero;

/// Selects one of the two brackets of a compatible pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    One,
    Two,
}

impl Side {
    pub fn index(self) -> usize {
        match self {
            Side::One => 0,
            Side::Two => 1,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Side::One => "1",
            Side::Two => "2",
        }
    }
}

/// A vector space dimension together with its twisting endomorphism
/// (`α` on the algebra, `β` on a representation space). The twist is not
/// required to be invertible; [`HomSpace::is_regular`] reports whether it is.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomSpace {
    dim: usize,
    twist: Matrix,
}

impl HomSpace {
    pub fn new(dim: usize, twist: Matrix) -> Result<Self> {
        if twist.rows() != dim || twist.cols() != dim {
            return Err(Error::DimensionMismatch(format!(
                "twist is {}x{}, expected {dim}x{dim}",
                twist.rows(),
                twist.cols()
            )));
        }
        Ok(HomSpace { dim, twist })
    }

    /// Space with the identity twist (the untwisted, classical case).
    pub fn untwisted(dim: usize) -> Self {
        HomSpace {
            dim,
            twist: Matrix::identity(dim),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn twist(&self) -> &Matrix {
        &self.twist
    }

    /// The twist is nondegenerate.
    pub fn is_regular(&self) -> bool {
        rank(&self.twist) == self.dim
    }

    /// `(g ⊕ v, α ⊕ β)`.
    pub fn direct_sum(&self, other: &HomSpace) -> HomSpace {
        HomSpace {
            dim: self.dim + other.dim,
            twist: self.twist.direct_sum(&other.twist),
        }
    }
}

/// Trilinear bracket as a structure-constant tensor, antisymmetric in the
/// first two arguments by construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriBracket {
    map: MultiLinearMap,
}

impl TriBracket {
    pub fn zero(dim: usize) -> Self {
        TriBracket {
            map: MultiLinearMap::zero(3, dim, dim),
        }
    }

    /// Build from sparse entries `(i, j, k, l, value)`. Duplicate index
    /// tuples are rejected; if both `(i,j,k,l)` and `(j,i,k,l)` are given
    /// they must be exact negatives; a missing mirror entry is filled in by
    /// antisymmetry. Entries with `i == j` must be zero (and may simply be
    /// omitted).
    pub fn from_entries(dim: usize, entries: &[(usize, usize, usize, usize, Rat)]) -> Result<Self> {
        let mut map = MultiLinearMap::zero(3, dim, dim);
        let mut explicit = std::collections::HashSet::new();
        for (i, j, k, l, v) in entries {
            for &idx in &[i, j, k, l] {
                if *idx >= dim {
                    return Err(Error::IndexOutOfRange { index: *idx, dim });
                }
            }
            if !explicit.insert((*i, *j, *k, *l)) {
                return Err(Error::DuplicateEntry(vec![*i, *j, *k, *l]));
            }
            if i == j && !v.is_zero() {
                return Err(Error::NotAntisymmetric {
                    i: *i,
                    j: *j,
                    k: *k,
                    l: *l,
                    lhs: v.to_string(),
                    rhs: v.to_string(),
                });
            }
            map.set(&[*i, *j, *k], *l, v.clone());
        }
        // antisymmetric completion / conflict detection
        for (i, j, k, l, v) in entries {
            if i == j {
                continue;
            }
            let mirror = map.get(&[*j, *i, *k], *l);
            if explicit.contains(&(*j, *i, *k, *l)) {
                if !(mirror + v).is_zero() {
                    return Err(Error::NotAntisymmetric {
                        i: *i,
                        j: *j,
                        k: *k,
                        l: *l,
                        lhs: v.to_string(),
                        rhs: mirror.to_string(),
                    });
                }
            } else {
                map.set(&[*j, *i, *k], *l, -v.clone());
            }
        }
        Ok(TriBracket { map })
    }

    /// Wrap a raw arity-3 tensor, rejecting it unless it is antisymmetric in
    /// the first two slots; the witness names the offending entry.
    pub fn from_map(map: MultiLinearMap) -> Result<Self> {
        assert_eq!(map.arity(), 3, "triple bracket must have arity 3");
        assert_eq!(
            map.dim_in(),
            map.dim_out(),
            "bracket must map into its own space"
        );
        let violation = map.add(&map.swap_args(0, 1));
        if let Some((tuple, vals)) = violation.nonzero_tuples(1).1.into_iter().next() {
            let l = vals.iter().position(|v| !v.is_zero()).unwrap();
            return Err(Error::NotAntisymmetric {
                i: tuple[0],
                j: tuple[1],
                k: tuple[2],
                l,
                lhs: map.get(&tuple, l).to_string(),
                rhs: map.get(&[tuple[1], tuple[0], tuple[2]], l).to_string(),
            });
        }
        Ok(TriBracket { map })
    }

    /// Antisymmetrize a raw tensor in its first two slots: `(F - F∘swap)/2`.
    pub fn antisymmetrized(map: MultiLinearMap) -> Self {
        assert_eq!(map.arity(), 3);
        assert_eq!(map.dim_in(), map.dim_out());
        let anti = map
            .sub(&map.swap_args(0, 1))
            .scale(&crate::rational::rat(1, 2));
        TriBracket { map: anti }
    }

    pub fn dim(&self) -> usize {
        self.map.dim_in()
    }

    pub fn map(&self) -> &MultiLinearMap {
        &self.map
    }

    pub fn get(&self, i: usize, j: usize, k: usize, l: usize) -> &Rat {
        self.map.get(&[i, j, k], l)
    }

    /// `[e_i, e_j, e_k]` as a coordinate vector.
    pub fn value(&self, i: usize, j: usize, k: usize) -> &[Rat] {
        self.map.value_at(&[i, j, k])
    }

    /// Bracket of arbitrary coordinate vectors.
    pub fn eval(&self, x: &[Rat], y: &[Rat], z: &[Rat]) -> Vec<Rat> {
        self.map.eval(&[x, y, z])
    }

    pub fn is_zero(&self) -> bool {
        self.map.is_zero()
    }

    pub fn add(&self, other: &TriBracket) -> TriBracket {
        TriBracket {
            map: self.map.add(&other.map),
        }
    }

    pub fn sub(&self, other: &TriBracket) -> TriBracket {
        TriBracket {
            map: self.map.sub(&other.map),
        }
    }

    pub fn scale(&self, k: &Rat) -> TriBracket {
        TriBracket {
            map: self.map.scale(k),
        }
    }

    /// Nonzero structure constants `(i, j, k, l, value)` in lexicographic
    /// order.
    pub fn entries(&self) -> Vec<(usize, usize, usize, usize, Rat)> {
        let dim = self.dim();
        let mut out = Vec::new();
        for i in 0..dim {
            for j in 0..dim {
                for k in 0..dim {
                    for (l, v) in self.value(i, j, k).iter().enumerate() {
                        if !v.is_zero() {
                            out.push((i, j, k, l, v.clone()));
                        }
                    }
                }
            }
        }
        out
    }
}

/// A single Hom-Lie triple system: a twisted space plus a bracket tensor.
/// Construction enforces only shape and antisymmetry; run
/// [`crate::verify::verify_hom_lts`] to check the remaining axioms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomLts {
    space: HomSpace,
    bracket: TriBracket,
}

impl HomLts {
    pub fn new(space: HomSpace, bracket: TriBracket) -> Result<Self> {
        if bracket.dim() != space.dim() {
            return Err(Error::DimensionMismatch(format!(
                "bracket dimension {} vs space dimension {}",
                bracket.dim(),
                space.dim()
            )));
        }
        Ok(HomLts { space, bracket })
    }

    pub fn space(&self) -> &HomSpace {
        &self.space
    }

    pub fn bracket(&self) -> &TriBracket {
        &self.bracket
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn twist(&self) -> &Matrix {
        self.space.twist()
    }
}

/// Two bracket tensors sharing one twisted space. Whether the pair actually
/// satisfies the compatibility identity is decided by
/// [`crate::verify::verify_compatible`], not assumed at construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompatibleHomLts {
    space: HomSpace,
    b1: TriBracket,
    b2: TriBracket,
}

impl CompatibleHomLts {
    pub fn new(space: HomSpace, b1: TriBracket, b2: TriBracket) -> Result<Self> {
        if b1.dim() != space.dim() || b2.dim() != space.dim() {
            return Err(Error::DimensionMismatch(format!(
                "bracket dimensions {} and {} vs space dimension {}",
                b1.dim(),
                b2.dim(),
                space.dim()
            )));
        }
        Ok(CompatibleHomLts { space, b1, b2 })
    }

    /// The pair `(b, b)` sharing one bracket.
    pub fn diagonal(h: &HomLts) -> Self {
        CompatibleHomLts {
            space: h.space().clone(),
            b1: h.bracket().clone(),
            b2: h.bracket().clone(),
        }
    }

    pub fn space(&self) -> &HomSpace {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn twist(&self) -> &Matrix {
        self.space.twist()
    }

    pub fn bracket(&self, side: Side) -> &TriBracket {
        match side {
            Side::One => &self.b1,
            Side::Two => &self.b2,
        }
    }

    pub fn hom_lts(&self, side: Side) -> HomLts {
        HomLts {
            space: self.space.clone(),
            bracket: self.bracket(side).clone(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat_int, Rat};

    #[test]
    fn entries_autocomplete_mirror() {
        let b = TriBracket::from_entries(2, &[(0, 1, 1, 0, rat_int(1))]).unwrap();
        assert_eq!(*b.get(1, 0, 1, 0), rat_int(-1));
        assert_eq!(*b.get(0, 1, 1, 0), rat_int(1));
        assert_eq!(*b.get(0, 1, 0, 0), rat_int(0));
    }

    #[test]
    fn conflicting_mirror_rejected() {
        let err =
            TriBracket::from_entries(2, &[(0, 1, 1, 0, rat_int(1)), (1, 0, 1, 0, rat_int(1))])
                .unwrap_err();
        assert!(matches!(err, Error::NotAntisymmetric { .. }));
    }

    #[test]
    fn explicit_consistent_mirror_ok() {
        let b = TriBracket::from_entries(2, &[(0, 1, 1, 0, rat_int(2)), (1, 0, 1, 0, rat_int(-2))])
            .unwrap();
        assert_eq!(*b.get(0, 1, 1, 0), rat_int(2));
    }

    #[test]
    fn diagonal_entry_rejected() {
        assert!(TriBracket::from_entries(2, &[(1, 1, 0, 0, rat_int(1))]).is_err());
        assert!(TriBracket::from_entries(2, &[(1, 1, 0, 0, rat_int(0))]).is_ok());
    }

    #[test]
    fn duplicate_entry_rejected() {
        let err =
            TriBracket::from_entries(2, &[(0, 1, 1, 0, rat_int(1)), (0, 1, 1, 0, rat_int(1))])
                .unwrap_err();
        assert!(matches!(err, Error::DuplicateEntry(_)));
    }

    #[test]
    fn antisymmetrized_always_antisymmetric() {
        use rand::{rngs::StdRng, Rng, SeedableRng};
        let mut rng = StdRng::seed_from_u64(11);
        for _ in 0..10 {
            let raw = MultiLinearMap::from_fn(3, 3, 3, |_, _| {
                Rat::from_integer(rng.gen_range(-4i64..=4).into())
            });
            let b = TriBracket::antisymmetrized(raw);
            let anti = b.map().add(&b.map().swap_args(0, 1));
            assert!(anti.is_zero());
            // evaluate(x,y,z) + evaluate(y,x,z) = 0 on arbitrary vectors
            let x: Vec<Rat> = (0..3).map(|_| rat_int(rng.gen_range(-3..=3))).collect();
            let y: Vec<Rat> = (0..3).map(|_| rat_int(rng.gen_range(-3..=3))).collect();
            let z: Vec<Rat> = (0..3).map(|_| rat_int(rng.gen_range(-3..=3))).collect();
            let fwd = b.eval(&x, &y, &z);
            let bwd = b.eval(&y, &x, &z);
            for (a, bb) in fwd.iter().zip(&bwd) {
                assert!((a + bb).is_zero());
            }
        }
    }

    #[test]
    fn out_of_range_index_rejected() {
        assert!(matches!(
            TriBracket::from_entries(2, &[(0, 1, 2, 0, rat_int(1))]),
            Err(Error::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn regularity_predicate() {
        let s = HomSpace::untwisted(3);
        assert!(s.is_regular());
        let degenerate = HomSpace::new(2, Matrix::diagonal(&[rat_int(1), rat_int(0)])).unwrap();
        assert!(!degenerate.is_regular());
    }
}
