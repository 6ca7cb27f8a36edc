//! Coboundary operators, their exact matrices, and the cohomology of a
//! compatible pair with coefficients in a representation.
//!
//! For a single system/representation, the degree-raising operator sends a
//! degree-`n` cochain `f` to the degree-`(n+1)` cochain
//!
//! ```text
//! δf(A1,…,An,c) = (−1)^{n−1} [ θ(α^{n−1}b_n, α^{n−1}c) f(A1,…,A_{n−1}, a_n)
//!                            − θ(α^{n−1}a_n, α^{n−1}c) f(A1,…,A_{n−1}, b_n) ]
//!               + Σ_i (−1)^{i+1} D(α^{n−1}a_i, α^{n−1}b_i) f(A1,…,Âi,…,An, c)
//!               + Σ_{i<j} (−1)^{i} f(αA1,…,Âi,…, [a_i,b_i,a_j]∧α(b_j)
//!                           + α(a_j)∧[a_i,b_i,b_j],…, αAn, α(c))
//!               + Σ_i (−1)^{i} f(αA1,…,Âi,…, αAn, [a_i,b_i,c])
//! ```
//!
//! with `A_i = a_i ∧ b_i`. The degree-dependent sign on the two θ-terms is
//! the classical Yamaguti normalization; it is forced by the exact adjoint
//! consistency `δf = (−1)^{n−1}[π, f]`, which the test suites verify in every
//! degree up to 3 (without it the relation would hold with a constant `+1`
//! in all degrees, contradicting the alternating form of the bracket
//! characterization). At `n = 1` the operator reduces to the closed form
//! `δf(a,b,c) = θ(b,c)f(a) − θ(a,c)f(b) + D(a,b)f(c) − f([a,b,c])`.
//!
//! For a compatible pair the two operators `δ₁` (built from bracket 1 and
//! `θ₁`) and `δ₂` anticommute, and the staircase combination
//! `δ_c(f_1,…,f_n) = (δ₁f_1, δ₁f_2+δ₂f_1, …, δ₂f_n)` squares to zero; its
//! cohomology is what [`CochainComplex::cohomology`] computes.

use std::collections::BTreeMap;
use std::sync::{Arc, Mutex};

use num_traits::{One, Zero};

use crate::algebra::{CompatibleHomLts, Side, TriBracket};
use crate::cochain::{cochain_space_basis, Cochain, CochainBasis, CompatibleCochain};
use crate::error::{Error, Result};
use crate::matrix::{kernel_basis, Matrix, Rref};
use crate::multilinear::{decode, MultiLinearMap};
use crate::rational::Rat;
use crate::representation::{CompatibleRepresentation, Representation, ThetaGrid};

/// Degrees above this are rejected unless the cap is raised explicitly.
pub const DEFAULT_DEGREE_CAP: usize = 4;

/// Cocycle basis, coboundary-image reduction, and reduced representatives.
type HomologyData = (Vec<Vec<Rat>>, Rref, Vec<Vec<Rat>>);

/// Where the bracket lands inside the cochain's argument list when building
/// the insertion terms of the coboundary.
enum InsertSlot {
    Trailing,
    PairFirst(usize),
    PairSecond(usize),
}

/// One insertion term: `f` with the twist applied to every argument except
/// the inserted bracket value, arguments re-laid-out canonically. `kappa_i`
/// is the (0-based) output pair whose two components feed the bracket.
fn insertion_term(
    f: &MultiLinearMap,
    n: usize,
    bracket: &MultiLinearMap,
    alpha: &Matrix,
    kappa_i: usize,
    target: InsertSlot,
) -> MultiLinearMap {
    let f_arity = 2 * n - 1;
    debug_assert_eq!(f.arity(), f_arity);
    let canonical_pair = |r: usize| if r < kappa_i { r } else { r + 1 };
    let ins_slot = match target {
        InsertSlot::Trailing => f_arity - 1,
        InsertSlot::PairFirst(kj) | InsertSlot::PairSecond(kj) => {
            let r = if kj < kappa_i { kj } else { kj - 1 };
            match target {
                InsertSlot::PairFirst(_) => 2 * r,
                _ => 2 * r + 1,
            }
        }
    };
    let alpha_slots: Vec<usize> = (0..f_arity).filter(|&s| s != ins_slot).collect();
    let composed = f
        .apply_to_slots(&alpha_slots, alpha)
        .insert_at_slot(ins_slot, bracket);

    // canonical argument index read by each slot of the composed tensor
    let mut targets = Vec::with_capacity(2 * n + 1);
    for fs in 0..f_arity {
        if fs == ins_slot {
            targets.push(2 * kappa_i);
            targets.push(2 * kappa_i + 1);
            targets.push(match target {
                InsertSlot::Trailing => 2 * n,
                InsertSlot::PairFirst(kj) => 2 * kj,
                InsertSlot::PairSecond(kj) => 2 * kj + 1,
            });
        } else if fs == f_arity - 1 {
            targets.push(2 * n);
        } else {
            targets.push(2 * canonical_pair(fs / 2) + fs % 2);
        }
    }
    composed.permute_args(&targets)
}

fn parity_sign(exp: usize) -> Rat {
    if exp.is_multiple_of(2) {
        Rat::one()
    } else {
        -Rat::one()
    }
}

/// The coboundary of a degree-`n` cochain tensor with respect to one bracket
/// and one representation grid.
pub fn coboundary_map(
    f: &MultiLinearMap,
    bracket: &TriBracket,
    theta: &ThetaGrid,
    alpha: &Matrix,
) -> MultiLinearMap {
    let d = bracket.dim();
    let dv = theta.dim_v();
    assert_eq!(f.dim_in(), d);
    assert_eq!(f.dim_out(), dv);
    assert!(f.arity() % 2 == 1);
    let n = f.arity().div_ceil(2);
    let out_arity = 2 * n + 1;

    let a_pow = alpha.pow(n - 1);
    let theta_tw = theta.conjugated_args(&a_pow);
    let d_tw = theta_tw.d_grid();

    let mut out = MultiLinearMap::zero(out_arity, d, dv);

    // operator terms, assembled tuple by tuple
    let mut tuple = vec![0usize; out_arity];
    let mut f_args = vec![0usize; f.arity()];
    let total = d.pow(out_arity as u32);
    let theta_sign = parity_sign(n - 1);
    for t in 0..total {
        decode(t, d, &mut tuple);
        let c = tuple[out_arity - 1];
        let b_n = tuple[out_arity - 2];
        let a_n = tuple[out_arity - 3];

        // (−1)^{n−1} θ(α^{n−1}b_n, α^{n−1}c) f(A1,…,A_{n−1}, a_n)
        f_args.copy_from_slice(&tuple[..f.arity()]);
        apply_operator(
            &mut out,
            &tuple,
            theta_tw.at(b_n, c),
            f.value_at(&f_args),
            &theta_sign,
        );

        // −(−1)^{n−1} θ(α^{n−1}a_n, α^{n−1}c) f(A1,…,A_{n−1}, b_n)
        f_args[f.arity() - 1] = b_n;
        apply_operator(
            &mut out,
            &tuple,
            theta_tw.at(a_n, c),
            f.value_at(&f_args),
            &-theta_sign.clone(),
        );

        // Σ_i (−1)^{i+1} D(α^{n−1}a_i, α^{n−1}b_i) f(pairs without i, c)
        for kappa in 0..n {
            let mut pos = 0;
            for pair in 0..n {
                if pair == kappa {
                    continue;
                }
                f_args[pos] = tuple[2 * pair];
                f_args[pos + 1] = tuple[2 * pair + 1];
                pos += 2;
            }
            f_args[pos] = c;
            let sign = parity_sign(kappa); // (−1)^{i+1} with i = kappa+1
            apply_operator(
                &mut out,
                &tuple,
                d_tw.at(tuple[2 * kappa], tuple[2 * kappa + 1]),
                f.value_at(&f_args),
                &sign,
            );
        }
    }

    // insertion terms, sign (−1)^{i} with i = kappa_i + 1
    let bmap = bracket.map();
    for kappa_i in 0..n {
        let sign = parity_sign(kappa_i + 1);
        // bracket replaces the trailing argument
        out.add_scaled(
            &sign,
            &insertion_term(f, n, bmap, alpha, kappa_i, InsertSlot::Trailing),
        );
        // bracket lands inside a later pair
        for kappa_j in kappa_i + 1..n {
            out.add_scaled(
                &sign,
                &insertion_term(f, n, bmap, alpha, kappa_i, InsertSlot::PairFirst(kappa_j)),
            );
            out.add_scaled(
                &sign,
                &insertion_term(f, n, bmap, alpha, kappa_i, InsertSlot::PairSecond(kappa_j)),
            );
        }
    }

    out
}

fn apply_operator(out: &mut MultiLinearMap, tuple: &[usize], op: &Matrix, vec: &[Rat], sign: &Rat) {
    for l in 0..op.rows() {
        let mut acc = Rat::zero();
        for (m, v) in vec.iter().enumerate() {
            let o = op.at(l, m);
            if !o.is_zero() && !v.is_zero() {
                acc += o * v;
            }
        }
        if !acc.is_zero() {
            out.add_to(tuple, l, &(sign * &acc));
        }
    }
}

/// Matrix of the coboundary from the degree-`n` basis to the degree-`(n+1)`
/// basis, both provided by the caller.
pub fn delta_matrix_between(
    bracket: &TriBracket,
    rep: &Representation,
    basis_n: &CochainBasis,
    basis_n1: &CochainBasis,
) -> Result<Matrix> {
    let alpha = rep.g().twist();
    let mut cols = Vec::with_capacity(basis_n.dim());
    for i in 0..basis_n.dim() {
        let df = coboundary_map(&basis_n.basis_map(i), bracket, rep.theta(), alpha);
        cols.push(basis_n1.coordinates(&df)?);
    }
    let rows = basis_n1.dim();
    Ok(Matrix::from_fn(rows, cols.len(), |r, c| cols[c][r].clone()))
}

/// Dimensions and representatives of one cohomology group.
#[derive(Clone, Debug)]
pub struct CohomologyReport {
    pub degree: usize,
    /// Dimension of the degree-`n` chain group (`n` copies of the cochain
    /// space).
    pub dim_cochains: usize,
    pub dim_cocycles: usize,
    pub dim_coboundaries: usize,
    pub dim_cohomology: usize,
    /// Representative coordinates in the block basis (each block a copy of
    /// the computed cochain basis), reduced against the coboundary image.
    pub representative_coordinates: Vec<Vec<Rat>>,
    pub representatives: Vec<CompatibleCochain>,
}

/// The cochain complex of a compatible pair with coefficients in a
/// compatible representation. Bases are computed once per degree and cached;
/// all outputs are deterministic.
pub struct CochainComplex {
    system: CompatibleHomLts,
    rep: CompatibleRepresentation,
    cap: usize,
    bases: Mutex<BTreeMap<usize, Arc<CochainBasis>>>,
}

impl CochainComplex {
    /// The caller is responsible for having verified `system` and `rep`;
    /// only shapes are checked here.
    pub fn new(system: CompatibleHomLts, rep: CompatibleRepresentation) -> Result<Self> {
        if rep.g().dim() != system.dim() {
            return Err(Error::DimensionMismatch(
                "representation does not match the algebra dimension".into(),
            ));
        }
        Ok(CochainComplex {
            system,
            rep,
            cap: DEFAULT_DEGREE_CAP,
            bases: Mutex::new(BTreeMap::new()),
        })
    }

    pub fn with_degree_cap(mut self, cap: usize) -> Self {
        self.cap = cap;
        self
    }

    pub fn degree_cap(&self) -> usize {
        self.cap
    }

    pub fn system(&self) -> &CompatibleHomLts {
        &self.system
    }

    pub fn rep(&self) -> &CompatibleRepresentation {
        &self.rep
    }

    /// Basis of the cyclic cochain space in degree `n`. Degrees up to
    /// `cap + 1` are allowed so that the coboundary out of the cap degree
    /// can still be represented.
    pub fn basis(&self, n: usize) -> Result<Arc<CochainBasis>> {
        if n == 0 {
            return Err(Error::Malformed("cochain degree must be at least 1".into()));
        }
        if n > self.cap + 1 {
            return Err(Error::DegreeCapExceeded {
                requested: n,
                cap: self.cap,
            });
        }
        let mut cache = self.bases.lock().unwrap();
        if let Some(b) = cache.get(&n) {
            return Ok(Arc::clone(b));
        }
        let b = Arc::new(cochain_space_basis(
            self.system.space(),
            self.rep.v(),
            n,
            true,
        )?);
        cache.insert(n, Arc::clone(&b));
        Ok(b)
    }

    /// Matrix of `δ₁` or `δ₂` from degree `n` to degree `n+1`, in the cached
    /// bases.
    pub fn delta_matrix(&self, side: Side, n: usize) -> Result<Matrix> {
        if n > self.cap {
            return Err(Error::DegreeCapExceeded {
                requested: n,
                cap: self.cap,
            });
        }
        let basis_n = self.basis(n)?;
        let basis_n1 = self.basis(n + 1)?;
        delta_matrix_between(
            self.system.bracket(side),
            &self.rep.representation(side),
            &basis_n,
            &basis_n1,
        )
    }

    /// Block staircase matrix of `δ_c` from `n` copies of degree `n` to
    /// `n+1` copies of degree `n+1`: block `(r, c)` is `δ₁` when `r = c`,
    /// `δ₂` when `r = c + 1`, zero otherwise.
    pub fn delta_c_matrix(&self, n: usize) -> Result<Matrix> {
        let d1 = self.delta_matrix(Side::One, n)?;
        let d2 = self.delta_matrix(Side::Two, n)?;
        let (rows_b, cols_b) = (d1.rows(), d1.cols());
        let mut out = Matrix::zero((n + 1) * rows_b, n * cols_b);
        for c in 0..n {
            for r in 0..n + 1 {
                let block = if r == c {
                    Some(&d1)
                } else if r == c + 1 {
                    Some(&d2)
                } else {
                    None
                };
                if let Some(b) = block {
                    for i in 0..rows_b {
                        for j in 0..cols_b {
                            out.set(r * rows_b + i, c * cols_b + j, b.at(i, j).clone());
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    /// Cocycles, coboundaries and representatives in degree `n`. Degree-1
    /// coboundaries are zero by convention (there is no degree-0 space).
    pub fn cohomology(&self, n: usize) -> Result<CohomologyReport> {
        let (z_basis, mut image, residuals) = self.homology_data(n)?;
        let basis_n = self.basis(n)?;
        let dim_cocycles = z_basis.len();
        let dim_coboundaries = image.rank();
        let dim_cohomology = dim_cocycles - dim_coboundaries;
        debug_assert_eq!(residuals.len(), dim_cohomology);

        let block = basis_n.dim();
        let mut representatives = Vec::with_capacity(residuals.len());
        for coords in &residuals {
            let parts: Vec<Cochain> = (0..n)
                .map(|k| basis_n.combination(&coords[k * block..(k + 1) * block]))
                .collect();
            representatives.push(CompatibleCochain::new(parts)?);
        }
        let _ = &mut image;
        Ok(CohomologyReport {
            degree: n,
            dim_cochains: n * block,
            dim_cocycles,
            dim_coboundaries,
            dim_cohomology,
            representative_coordinates: residuals,
            representatives,
        })
    }

    /// Kernel basis of `δ_c` at degree `n`, the image row-reduction from
    /// degree `n−1`, and the deterministic list of reduced representatives.
    fn homology_data(&self, n: usize) -> Result<HomologyData> {
        if n == 0 {
            return Err(Error::Malformed(
                "cohomology degree must be at least 1".into(),
            ));
        }
        if n > self.cap {
            return Err(Error::DegreeCapExceeded {
                requested: n,
                cap: self.cap,
            });
        }
        let dc = self.delta_c_matrix(n)?;
        let z_basis = kernel_basis(&dc);
        let block_dim = dc.cols();
        let mut image = Rref::new(block_dim);
        if n >= 2 {
            let prev = self.delta_c_matrix(n - 1)?;
            for c in 0..prev.cols() {
                let col = prev.column(c);
                image.add_row(
                    col.iter()
                        .enumerate()
                        .filter(|(_, v)| !v.is_zero())
                        .map(|(i, v)| (i, v.clone()))
                        .collect(),
                );
            }
        }
        let mut residuals = Vec::new();
        for z in &z_basis {
            let red = image.reduce_vector(z);
            if red.iter().any(|v| !v.is_zero()) {
                residuals.push(red.clone());
                image.add_dense_row(&red);
            }
        }
        // rebuild the image reduction without the appended representatives
        let mut image_only = Rref::new(block_dim);
        if n >= 2 {
            let prev = self.delta_c_matrix(n - 1)?;
            for c in 0..prev.cols() {
                let col = prev.column(c);
                image_only.add_row(
                    col.iter()
                        .enumerate()
                        .filter(|(_, v)| !v.is_zero())
                        .map(|(i, v)| (i, v.clone()))
                        .collect(),
                );
            }
        }
        Ok((z_basis, image_only, residuals))
    }

    /// Block coordinates of an `n`-tuple of tensors in the degree-`n` chain
    /// group; errors if any part fails the space's constraints.
    pub fn tuple_coordinates(&self, parts: &[&MultiLinearMap]) -> Result<Vec<Rat>> {
        let n = parts.len();
        let basis = self.basis(n)?;
        let mut out = Vec::with_capacity(n * basis.dim());
        for p in parts {
            out.extend(basis.coordinates(p)?);
        }
        Ok(out)
    }

    /// Whether the tuple is a cocycle: `δ_c` applied to its coordinates
    /// vanishes.
    pub fn is_cocycle(&self, parts: &[&MultiLinearMap]) -> Result<bool> {
        let w = self.tuple_coordinates(parts)?;
        let dc = self.delta_c_matrix(parts.len())?;
        Ok(dc.apply(&w).iter().all(Rat::is_zero))
    }

    /// Coordinates of a cocycle's class in the computed cohomology basis of
    /// its degree. Cohomologous inputs get identical coordinates.
    pub fn cohomology_class(&self, parts: &[&MultiLinearMap]) -> Result<Vec<Rat>> {
        let n = parts.len();
        let w = self.tuple_coordinates(parts)?;
        let dc = self.delta_c_matrix(n)?;
        if !dc.apply(&w).iter().all(Rat::is_zero) {
            return Err(Error::NotACocycle);
        }
        let (_, mut image, residuals) = self.homology_data(n)?;
        let red = image.reduce_vector(&w);
        if residuals.is_empty() {
            if red.iter().all(Rat::is_zero) {
                return Ok(Vec::new());
            }
            return Err(Error::Malformed(
                "reduced cocycle escapes the representative span".into(),
            ));
        }
        let rows = red.len();
        let rep_matrix = Matrix::from_fn(rows, residuals.len(), |r, c| residuals[c][r].clone());
        crate::matrix::solve(&rep_matrix, &red).ok_or(Error::Malformed(
            "reduced cocycle escapes the representative span".into(),
        ))
    }
}

/// Lift a cochain on `(g, V)` to one on the semidirect sum `g ⊕ V`: the lift
/// ignores every `V`-component of its arguments and lands in the `V` summand.
/// `f = 0` iff the lift is zero.
pub fn lift_cochain(f: &Cochain, c: &CompatibleHomLts, r: &CompatibleRepresentation) -> Cochain {
    let d = c.dim();
    let dv = r.v().dim();
    let total = d + dv;
    let fm = f.map();
    assert_eq!(fm.dim_in(), d);
    assert_eq!(fm.dim_out(), dv);
    let map = MultiLinearMap::from_fn(fm.arity(), total, total, |tuple, l| {
        if l < d || tuple.iter().any(|&t| t >= d) {
            Rat::zero()
        } else {
            fm.get(tuple, l - d).clone()
        }
    });
    Cochain::new(f.degree(), false, map).expect("lift preserves arity")
}

/// Sum of the tuple's parts, reinterpreted as a cochain of the summed
/// structure: the degree-preserving chain map onto the single-system complex
/// of `(b₁+b₂, θ₁+θ₂)`.
pub fn phi_chain_map(fs: &CompatibleCochain) -> Cochain {
    fs.sum()
}
