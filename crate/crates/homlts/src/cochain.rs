//! Constrained cochain spaces and their computed bases.
//!
//! A degree-`n` cochain on `(g, α)` with coefficients in `(V, β)` is a
//! multilinear map of arity `2n−1` (`n−1` wedge pairs followed by a single
//! trailing argument) subject to linear constraints:
//!
//! * twist equivariance `β ∘ f = f ∘ (α ⊗ … ⊗ α)`;
//! * antisymmetry inside each wedge pair;
//! * for the cyclic variant and `n ≥ 2`, the cyclic sum over the last three
//!   arguments vanishes (the last-pair antisymmetry is already a pair
//!   constraint).
//!
//! The basis of the constrained subspace is the kernel of the assembled
//! constraint system, computed by the deterministic exact elimination in
//! [`crate::matrix`]. Basis vectors come out of the reduced echelon form
//! with a unit entry at "their" free column and zeros at the other free
//! columns, so the coordinates of a member tensor can be read off directly.

use crate::algebra::HomSpace;
use crate::error::{Error, Result};
use crate::matrix::{Matrix, Rref};
use crate::multilinear::MultiLinearMap;
use crate::rational::Rat;
use num_traits::{One, Zero};

/// A degree-`n` cochain: arity `2n−1` tensor from `g`-inputs to `V`-outputs.
/// `cyclic` marks membership in the variant with the cyclic last-triple
/// condition (the domain of the coboundary operators); the plain variant
/// (`cyclic = false`) only requires equivariance and pair antisymmetry and
/// carries the graded bracket.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cochain {
    degree: usize,
    cyclic: bool,
    map: MultiLinearMap,
}

impl Cochain {
    pub fn new(degree: usize, cyclic: bool, map: MultiLinearMap) -> Result<Self> {
        if degree == 0 || map.arity() != 2 * degree - 1 {
            return Err(Error::Malformed(format!(
                "degree-{degree} cochain needs arity {}, got {}",
                2 * degree.max(1) - 1,
                map.arity()
            )));
        }
        Ok(Cochain {
            degree,
            cyclic,
            map,
        })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn cyclic(&self) -> bool {
        self.cyclic
    }

    pub fn map(&self) -> &MultiLinearMap {
        &self.map
    }

    pub fn into_map(self) -> MultiLinearMap {
        self.map
    }

    pub fn is_zero(&self) -> bool {
        self.map.is_zero()
    }

    pub fn add(&self, other: &Cochain) -> Cochain {
        assert_eq!(self.degree, other.degree);
        Cochain {
            degree: self.degree,
            cyclic: self.cyclic && other.cyclic,
            map: self.map.add(&other.map),
        }
    }

    /// Verify the defining constraints directly on the tensor.
    pub fn validate(&self, alpha: &Matrix, beta: &Matrix) -> Result<()> {
        let map = &self.map;
        if !equivariant(map, alpha, beta) {
            return Err(Error::NotACochain("twist equivariance fails".into()));
        }
        if !pair_antisymmetric(map) {
            return Err(Error::NotACochain("pair antisymmetry fails".into()));
        }
        if self.cyclic && !cyclic_last_triple(map) {
            return Err(Error::NotACochain(
                "cyclic last-triple condition fails".into(),
            ));
        }
        Ok(())
    }
}

/// `β ∘ f = f ∘ (α ⊗ … ⊗ α)` as an exact tensor identity.
pub fn equivariant(map: &MultiLinearMap, alpha: &Matrix, beta: &Matrix) -> bool {
    let slots: Vec<usize> = (0..map.arity()).collect();
    map.compose_output(beta) == map.apply_to_slots(&slots, alpha)
}

/// Antisymmetry inside each of the leading wedge pairs.
pub fn pair_antisymmetric(map: &MultiLinearMap) -> bool {
    let pairs = (map.arity() - 1) / 2;
    (0..pairs).all(|k| map.add(&map.swap_args(2 * k, 2 * k + 1)).is_zero())
}

/// Cyclic sum over the last three arguments vanishes (vacuous for arity 1).
pub fn cyclic_last_triple(map: &MultiLinearMap) -> bool {
    let m = map.arity();
    if m < 3 {
        return true;
    }
    let mut rot1: Vec<usize> = (0..m).collect();
    // slot m−3 reads old argument m−1, m−2 reads m−3, m−1 reads m−2
    rot1[m - 3] = m - 1;
    rot1[m - 2] = m - 3;
    rot1[m - 1] = m - 2;
    let mut rot2: Vec<usize> = (0..m).collect();
    rot2[m - 3] = m - 2;
    rot2[m - 2] = m - 1;
    rot2[m - 1] = m - 3;
    map.add(&map.permute_args(&rot1))
        .add(&map.permute_args(&rot2))
        .is_zero()
}

/// An ordered tuple of `n` degree-`n` cochains over one `(g, V)`: an element
/// of the degree-`n` chain group of the compatible-pair complex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompatibleCochain {
    parts: Vec<Cochain>,
}

impl CompatibleCochain {
    pub fn new(parts: Vec<Cochain>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::Malformed("empty cochain tuple".into()));
        }
        let n = parts[0].degree();
        if parts.len() != n {
            return Err(Error::Malformed(format!(
                "a degree-{n} tuple needs exactly {n} parts, got {}",
                parts.len()
            )));
        }
        if parts.iter().any(|p| p.degree() != n) {
            return Err(Error::Malformed("mixed degrees in cochain tuple".into()));
        }
        Ok(CompatibleCochain { parts })
    }

    pub fn degree(&self) -> usize {
        self.parts[0].degree()
    }

    pub fn parts(&self) -> &[Cochain] {
        &self.parts
    }

    pub fn is_zero(&self) -> bool {
        self.parts.iter().all(Cochain::is_zero)
    }

    /// Plain sum of the parts, a single cochain of the same degree.
    pub fn sum(&self) -> Cochain {
        let mut acc = self.parts[0].clone();
        for p in &self.parts[1..] {
            acc = acc.add(p);
        }
        acc
    }
}

/// Computed basis of a constrained cochain space in ambient coordinates
/// (index = tuple-index × dimV + output coordinate).
#[derive(Clone, Debug)]
pub struct CochainBasis {
    degree: usize,
    cyclic: bool,
    dim_g: usize,
    dim_v: usize,
    ambient: usize,
    free_cols: Vec<usize>,
    vectors: Vec<Vec<Rat>>,
}

impl CochainBasis {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn cyclic(&self) -> bool {
        self.cyclic
    }

    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    pub fn arity(&self) -> usize {
        2 * self.degree - 1
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim_g(&self) -> usize {
        self.dim_g
    }

    pub fn dim_v(&self) -> usize {
        self.dim_v
    }

    pub fn vectors(&self) -> &[Vec<Rat>] {
        &self.vectors
    }

    fn map_from_ambient(&self, v: &[Rat]) -> MultiLinearMap {
        let dv = self.dim_v;
        MultiLinearMap::from_fn(self.arity(), self.dim_g, dv, |tuple, l| {
            let mut idx = 0usize;
            for &t in tuple {
                idx = idx * self.dim_g + t;
            }
            v[idx * dv + l].clone()
        })
    }

    fn ambient_of(&self, map: &MultiLinearMap) -> Vec<Rat> {
        map.coeffs().to_vec()
    }

    /// The `i`-th basis cochain as a tensor.
    pub fn basis_map(&self, i: usize) -> MultiLinearMap {
        self.map_from_ambient(&self.vectors[i])
    }

    pub fn basis_cochain(&self, i: usize) -> Cochain {
        Cochain {
            degree: self.degree,
            cyclic: self.cyclic,
            map: self.basis_map(i),
        }
    }

    /// Linear combination of basis vectors with the given coordinates.
    pub fn combination(&self, coords: &[Rat]) -> Cochain {
        assert_eq!(coords.len(), self.dim());
        let mut acc = vec![Rat::zero(); self.ambient];
        for (c, v) in coords.iter().zip(&self.vectors) {
            if c.is_zero() {
                continue;
            }
            for (a, b) in acc.iter_mut().zip(v) {
                if !b.is_zero() {
                    *a = &*a + &(c * b);
                }
            }
        }
        Cochain {
            degree: self.degree,
            cyclic: self.cyclic,
            map: self.map_from_ambient(&acc),
        }
    }

    /// Coordinates of a member tensor in this basis. Because every basis
    /// vector is 1 at its own free column and 0 at the others, coordinates
    /// are read off at the free columns; the reconstruction is then compared
    /// against the input, so a non-member is rejected exactly.
    pub fn coordinates(&self, map: &MultiLinearMap) -> Result<Vec<Rat>> {
        if map.arity() != self.arity() || map.dim_in() != self.dim_g || map.dim_out() != self.dim_v
        {
            return Err(Error::DimensionMismatch(
                "tensor shape does not match the cochain space".into(),
            ));
        }
        let ambient = self.ambient_of(map);
        let coords: Vec<Rat> = self.free_cols.iter().map(|&c| ambient[c].clone()).collect();
        // verify membership by exact reconstruction
        let mut recon = vec![Rat::zero(); self.ambient];
        for (c, v) in coords.iter().zip(&self.vectors) {
            if c.is_zero() {
                continue;
            }
            for (a, b) in recon.iter_mut().zip(v) {
                if !b.is_zero() {
                    *a = &*a + &(c * b);
                }
            }
        }
        if recon != ambient {
            return Err(Error::NotACochain(
                "tensor violates the space's constraints".into(),
            ));
        }
        Ok(coords)
    }
}

/// Compute a basis of the degree-`n` cochain space over `(g, v)` by solving
/// the constraint system exactly. `cyclic` selects the variant with the
/// cyclic last-triple condition.
pub fn cochain_space_basis(
    g: &HomSpace,
    v: &HomSpace,
    n: usize,
    cyclic: bool,
) -> Result<CochainBasis> {
    if n == 0 {
        return Err(Error::Malformed("cochain degree must be at least 1".into()));
    }
    let d = g.dim();
    let dv = v.dim();
    let arity = 2 * n - 1;
    let tuples = d.pow(arity as u32);
    let ambient = tuples * dv;
    let alpha = g.twist();
    let beta = v.twist();

    let mut rref = Rref::new(ambient);
    let mut tuple = vec![0usize; arity];

    // sparse α-columns for the equivariance rows
    let alpha_col_support: Vec<Vec<(usize, Rat)>> = (0..d)
        .map(|j| {
            (0..d)
                .filter(|&i| !alpha.at(i, j).is_zero())
                .map(|i| (i, alpha.at(i, j).clone()))
                .collect()
        })
        .collect();

    for t in 0..tuples {
        decode(t, d, &mut tuple);

        // equivariance: for each output l,
        //   Σ_m β[l][m] F[t, m] − Σ_u (Π_s α[u_s][t_s]) F[u, l] = 0
        // the α-product support is the cartesian product of column supports
        let mut expansions: Vec<(usize, Rat)> = vec![(0usize, Rat::one())];
        let mut degenerate = false;
        for &ts in tuple.iter() {
            let support = &alpha_col_support[ts];
            if support.is_empty() {
                degenerate = true;
                break;
            }
            let mut next = Vec::with_capacity(expansions.len() * support.len());
            for (prefix, coeff) in &expansions {
                for (i, a) in support {
                    next.push((prefix * d + i, coeff * a));
                }
            }
            expansions = next;
        }
        if degenerate {
            expansions.clear();
        }
        for l in 0..dv {
            let mut row = std::collections::BTreeMap::new();
            for m in 0..dv {
                let b = beta.at(l, m);
                if !b.is_zero() {
                    add_entry(&mut row, t * dv + m, b.clone());
                }
            }
            for (u, coeff) in &expansions {
                add_entry(&mut row, u * dv + l, -coeff.clone());
            }
            push_row(&mut rref, row);
        }

        // pair antisymmetry: emit once per unordered pair value
        for pair in 0..n.saturating_sub(1) {
            let (i, j) = (tuple[2 * pair], tuple[2 * pair + 1]);
            if i > j {
                continue;
            }
            let mut swapped = tuple.clone();
            swapped.swap(2 * pair, 2 * pair + 1);
            let s = encode(&swapped, d);
            for l in 0..dv {
                let mut row = std::collections::BTreeMap::new();
                add_entry(&mut row, t * dv + l, Rat::one());
                add_entry(&mut row, s * dv + l, Rat::one());
                push_row(&mut rref, row);
            }
        }

        // cyclic condition on the last three arguments
        if cyclic && n >= 2 {
            let m = arity;
            let mut r1 = tuple.clone();
            let (a, b, c) = (tuple[m - 3], tuple[m - 2], tuple[m - 1]);
            r1[m - 3] = c;
            r1[m - 2] = a;
            r1[m - 1] = b;
            let mut r2 = tuple.clone();
            r2[m - 3] = b;
            r2[m - 2] = c;
            r2[m - 1] = a;
            let (u1, u2) = (encode(&r1, d), encode(&r2, d));
            for l in 0..dv {
                let mut row = std::collections::BTreeMap::new();
                add_entry(&mut row, t * dv + l, Rat::one());
                add_entry(&mut row, u1 * dv + l, Rat::one());
                add_entry(&mut row, u2 * dv + l, Rat::one());
                push_row(&mut rref, row);
            }
        }
    }

    let free_cols = rref.free_cols();
    let vectors = rref.kernel_basis();
    Ok(CochainBasis {
        degree: n,
        cyclic,
        dim_g: d,
        dim_v: dv,
        ambient,
        free_cols,
        vectors,
    })
}

fn add_entry(row: &mut std::collections::BTreeMap<usize, Rat>, col: usize, v: Rat) {
    use std::collections::btree_map::Entry;
    match row.entry(col) {
        Entry::Vacant(e) => {
            e.insert(v);
        }
        Entry::Occupied(mut e) => {
            *e.get_mut() = e.get() + &v;
        }
    }
}

fn push_row(rref: &mut Rref, row: std::collections::BTreeMap<usize, Rat>) {
    let sparse: Vec<(usize, Rat)> = row.into_iter().filter(|(_, v)| !v.is_zero()).collect();
    if !sparse.is_empty() {
        rref.add_row(sparse);
    }
}

fn decode(mut idx: usize, d: usize, out: &mut [usize]) {
    for slot in (0..out.len()).rev() {
        out[slot] = idx % d;
        idx /= d;
    }
}

fn encode(tuple: &[usize], d: usize) -> usize {
    let mut idx = 0usize;
    for &t in tuple {
        idx = idx * d + t;
    }
    idx
}
