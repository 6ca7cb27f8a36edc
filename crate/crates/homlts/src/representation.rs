//! Representations: bilinear maps `θ : g × g → End(V)` on a twisted space.
//!
//! `θ` is stored as a full grid of `dim V × dim V` operator matrices, one per
//! basis pair. The derived operator `D(x, y) = θ(y, x) − θ(x, y)` is computed
//! on demand and never stored.

use crate::algebra::{CompatibleHomLts, HomLts, HomSpace, Side};
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::rational::Rat;
use num_traits::Zero;

/// Grid of operators `θ(e_i, e_j)` acting on `V`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThetaGrid {
    dim_g: usize,
    dim_v: usize,
    mats: Vec<Matrix>,
}

impl ThetaGrid {
    pub fn zero(dim_g: usize, dim_v: usize) -> Self {
        ThetaGrid {
            dim_g,
            dim_v,
            mats: vec![Matrix::zero(dim_v, dim_v); dim_g * dim_g],
        }
    }

    pub fn from_fn(dim_g: usize, dim_v: usize, mut f: impl FnMut(usize, usize) -> Matrix) -> Self {
        let mut g = ThetaGrid::zero(dim_g, dim_v);
        for i in 0..dim_g {
            for j in 0..dim_g {
                let m = f(i, j);
                assert_eq!((m.rows(), m.cols()), (dim_v, dim_v));
                g.mats[i * dim_g + j] = m;
            }
        }
        g
    }

    pub fn dim_g(&self) -> usize {
        self.dim_g
    }

    pub fn dim_v(&self) -> usize {
        self.dim_v
    }

    pub fn at(&self, i: usize, j: usize) -> &Matrix {
        &self.mats[i * self.dim_g + j]
    }

    pub fn set(&mut self, i: usize, j: usize, m: Matrix) {
        assert_eq!((m.rows(), m.cols()), (self.dim_v, self.dim_v));
        self.mats[i * self.dim_g + j] = m;
    }

    pub fn is_zero(&self) -> bool {
        self.mats.iter().all(Matrix::is_zero)
    }

    /// Bilinear evaluation `θ(w1, w2)` on coordinate vectors.
    #[allow(clippy::needless_range_loop)] // coordinate indexing reads clearer here
    pub fn eval(&self, w1: &[Rat], w2: &[Rat]) -> Matrix {
        assert_eq!(w1.len(), self.dim_g);
        assert_eq!(w2.len(), self.dim_g);
        let mut out = Matrix::zero(self.dim_v, self.dim_v);
        for i in 0..self.dim_g {
            if w1[i].is_zero() {
                continue;
            }
            for j in 0..self.dim_g {
                if w2[j].is_zero() {
                    continue;
                }
                let coeff = &w1[i] * &w2[j];
                out = out.add(&self.at(i, j).scale(&coeff));
            }
        }
        out
    }

    /// `D(w1, w2) = θ(w2, w1) − θ(w1, w2)`.
    pub fn eval_d(&self, w1: &[Rat], w2: &[Rat]) -> Matrix {
        self.eval(w2, w1).sub(&self.eval(w1, w2))
    }

    /// Grid of `θ(m e_i, m e_j)` for a fixed matrix `m`.
    pub fn conjugated_args(&self, m: &Matrix) -> ThetaGrid {
        assert_eq!((m.rows(), m.cols()), (self.dim_g, self.dim_g));
        ThetaGrid::from_fn(self.dim_g, self.dim_v, |i, j| {
            self.eval(&m.column(i), &m.column(j))
        })
    }

    /// Grid of `D(e_i, e_j) = θ(e_j, e_i) − θ(e_i, e_j)`.
    pub fn d_grid(&self) -> ThetaGrid {
        ThetaGrid::from_fn(self.dim_g, self.dim_v, |i, j| {
            self.at(j, i).sub(self.at(i, j))
        })
    }

    pub fn add(&self, other: &ThetaGrid) -> ThetaGrid {
        assert_eq!((self.dim_g, self.dim_v), (other.dim_g, other.dim_v));
        ThetaGrid::from_fn(self.dim_g, self.dim_v, |i, j| {
            self.at(i, j).add(other.at(i, j))
        })
    }

    pub fn scale(&self, k: &Rat) -> ThetaGrid {
        ThetaGrid::from_fn(self.dim_g, self.dim_v, |i, j| self.at(i, j).scale(k))
    }

    /// Nonzero entries `(i, j, row, col, value)` in lexicographic order.
    pub fn entries(&self) -> Vec<(usize, usize, usize, usize, Rat)> {
        let mut out = Vec::new();
        for i in 0..self.dim_g {
            for j in 0..self.dim_g {
                let m = self.at(i, j);
                for r in 0..self.dim_v {
                    for c in 0..self.dim_v {
                        if !m.at(r, c).is_zero() {
                            out.push((i, j, r, c, m.at(r, c).clone()));
                        }
                    }
                }
            }
        }
        out
    }
}

/// A representation of one Hom-Lie triple system on `(V, β)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    g: HomSpace,
    v: HomSpace,
    theta: ThetaGrid,
}

impl Representation {
    pub fn new(g: HomSpace, v: HomSpace, theta: ThetaGrid) -> Result<Self> {
        if theta.dim_g() != g.dim() || theta.dim_v() != v.dim() {
            return Err(Error::DimensionMismatch(format!(
                "theta grid is {}x{} operators on dim {}, expected {}/{}",
                theta.dim_g(),
                theta.dim_g(),
                theta.dim_v(),
                g.dim(),
                v.dim()
            )));
        }
        Ok(Representation { g, v, theta })
    }

    pub fn trivial(g: HomSpace, v: HomSpace) -> Self {
        let theta = ThetaGrid::zero(g.dim(), v.dim());
        Representation { g, v, theta }
    }

    pub fn g(&self) -> &HomSpace {
        &self.g
    }

    pub fn v(&self) -> &HomSpace {
        &self.v
    }

    pub fn beta(&self) -> &Matrix {
        self.v.twist()
    }

    pub fn theta(&self) -> &ThetaGrid {
        &self.theta
    }
}

/// A pair of representations of a compatible pair on one `(V, β)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompatibleRepresentation {
    g: HomSpace,
    v: HomSpace,
    theta1: ThetaGrid,
    theta2: ThetaGrid,
}

impl CompatibleRepresentation {
    pub fn new(g: HomSpace, v: HomSpace, theta1: ThetaGrid, theta2: ThetaGrid) -> Result<Self> {
        for t in [&theta1, &theta2] {
            if t.dim_g() != g.dim() || t.dim_v() != v.dim() {
                return Err(Error::DimensionMismatch(
                    "theta grid shape does not match (g, V)".into(),
                ));
            }
        }
        Ok(CompatibleRepresentation {
            g,
            v,
            theta1,
            theta2,
        })
    }

    pub fn trivial(g: HomSpace, v: HomSpace) -> Self {
        let z = ThetaGrid::zero(g.dim(), v.dim());
        CompatibleRepresentation {
            g,
            v,
            theta1: z.clone(),
            theta2: z,
        }
    }

    pub fn g(&self) -> &HomSpace {
        &self.g
    }

    pub fn v(&self) -> &HomSpace {
        &self.v
    }

    pub fn beta(&self) -> &Matrix {
        self.v.twist()
    }

    pub fn theta(&self, side: Side) -> &ThetaGrid {
        match side {
            Side::One => &self.theta1,
            Side::Two => &self.theta2,
        }
    }

    pub fn representation(&self, side: Side) -> Representation {
        Representation {
            g: self.g.clone(),
            v: self.v.clone(),
            theta: self.theta(side).clone(),
        }
    }

    /// `(V, k1 θ1 + k2 θ2, β)`, the representation matching the bracket
    /// `k1 [-,-,-]^1 + k2 [-,-,-]^2`.
    pub fn linear_combination(&self, k1: &Rat, k2: &Rat) -> Representation {
        Representation {
            g: self.g.clone(),
            v: self.v.clone(),
            theta: self.theta1.scale(k1).add(&self.theta2.scale(k2)),
        }
    }
}

/// Adjoint action grid of one bracket: `θ(e_j, e_k) : x ↦ [x, e_j, e_k]`.
pub fn adjoint_grid(h: &HomLts) -> ThetaGrid {
    let d = h.dim();
    ThetaGrid::from_fn(d, d, |j, k| {
        Matrix::from_fn(d, d, |l, i| h.bracket().get(i, j, k, l).clone())
    })
}

/// Adjoint representation of a single Hom-Lie triple system: `V = g`,
/// `β = α`, `θ(a, b)c = [c, a, b]`.
pub fn adjoint_of(h: &HomLts) -> Representation {
    Representation {
        g: h.space().clone(),
        v: h.space().clone(),
        theta: adjoint_grid(h),
    }
}

/// Adjoint representation of a compatible pair on itself.
pub fn adjoint_representation(c: &CompatibleHomLts) -> CompatibleRepresentation {
    CompatibleRepresentation {
        g: c.space().clone(),
        v: c.space().clone(),
        theta1: adjoint_grid(&c.hom_lts(Side::One)),
        theta2: adjoint_grid(&c.hom_lts(Side::Two)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::TriBracket;
    use crate::rational::rat_int;

    /// Bracket 1 of the 2-dimensional running example:
    /// `[e0, e1, e1] = e0`, twist `diag(1, -1)`.
    fn sample() -> HomLts {
        let space = HomSpace::new(2, Matrix::diagonal(&[rat_int(1), rat_int(-1)])).unwrap();
        let b = TriBracket::from_entries(2, &[(0, 1, 1, 0, rat_int(1))]).unwrap();
        HomLts::new(space, b).unwrap()
    }

    #[test]
    fn adjoint_matches_bracket_columns() {
        let h = sample();
        let rep = adjoint_of(&h);
        // θ(e1, e1) sends e0 -> e0 and e1 -> 0
        let m = rep.theta().at(1, 1);
        assert_eq!(*m.at(0, 0), rat_int(1));
        assert_eq!(*m.at(1, 0), rat_int(0));
        assert_eq!(*m.at(0, 1), rat_int(0));
        assert_eq!(*m.at(1, 1), rat_int(0));
    }

    #[test]
    fn d_grid_vanishes_on_diagonal() {
        let h = sample();
        let grid = adjoint_grid(&h);
        let d = grid.d_grid();
        for i in 0..2 {
            assert!(d.at(i, i).is_zero());
        }
    }

    #[test]
    fn eval_matches_grid_on_basis() {
        let h = sample();
        let grid = adjoint_grid(&h);
        let e0 = [rat_int(1), rat_int(0)];
        let e1 = [rat_int(0), rat_int(1)];
        assert_eq!(&grid.eval(&e0, &e1), grid.at(0, 1));
        assert_eq!(&grid.eval(&e1, &e1), grid.at(1, 1));
    }
}
