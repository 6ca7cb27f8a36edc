//! Dense rational matrices and deterministic exact linear algebra.
//!
//! Rank, kernel and solve all go through one reduced-row-echelon engine that
//! works on sparse rows. The RREF of a matrix is unique, so results do not
//! depend on insertion order; kernel vectors are emitted in ascending
//! free-column order and `solve` zeroes the free variables, which makes every
//! answer reproducible bit for bit.

use std::fmt;

use num_traits::{One, Zero};

use crate::rational::Rat;

/// Dense row-major matrix over the rationals.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rat>,
}

impl Matrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            entries: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zero(n, n);
        for i in 0..n {
            m.set(i, i, Rat::one());
        }
        m
    }

    /// Scalar matrix `lambda * I`.
    pub fn scalar(n: usize, lambda: &Rat) -> Self {
        let mut m = Matrix::zero(n, n);
        for i in 0..n {
            m.set(i, i, lambda.clone());
        }
        m
    }

    pub fn diagonal(diag: &[Rat]) -> Self {
        let mut m = Matrix::zero(diag.len(), diag.len());
        for (i, v) in diag.iter().enumerate() {
            m.set(i, i, v.clone());
        }
        m
    }

    /// Build from row vectors. Panics on ragged input.
    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut entries = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged matrix rows");
            entries.extend(row);
        }
        Matrix {
            rows: r,
            cols: c,
            entries,
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rat) -> Self {
        let mut m = Matrix::zero(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.set(i, j, f(i, j));
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &Rat {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rat) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Rat] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Rat> {
        (0..self.rows).map(|r| self.at(r, c).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Rat::is_zero)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.at(j, i).clone())
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn neg(&self) -> Matrix {
        self.scale(&-Rat::one())
    }

    pub fn scale(&self, k: &Rat) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|a| a * k).collect(),
        }
    }

    #[allow(clippy::needless_range_loop)] // coordinate indexing reads clearer here
    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        let mut out = Matrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.at(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let cur = out.at(i, j) + &(a * b);
                    out.set(i, j, cur);
                }
            }
        }
        out
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(v.len(), self.cols, "matrix apply shape mismatch");
        (0..self.rows)
            .map(|i| {
                let mut acc = Rat::zero();
                for (j, vj) in v.iter().enumerate() {
                    let a = self.at(i, j);
                    if !a.is_zero() && !vj.is_zero() {
                        acc += a * vj;
                    }
                }
                acc
            })
            .collect()
    }

    /// `self^k` for square matrices; `k = 0` gives the identity.
    pub fn pow(&self, k: usize) -> Matrix {
        assert!(self.is_square(), "matrix power needs a square matrix");
        let mut out = Matrix::identity(self.rows);
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    pub fn commutes_with(&self, other: &Matrix) -> bool {
        self.mul(other) == other.mul(self)
    }

    /// Block-diagonal sum `self ⊕ other`.
    pub fn direct_sum(&self, other: &Matrix) -> Matrix {
        let mut m = Matrix::zero(self.rows + other.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m.set(i, j, self.at(i, j).clone());
            }
        }
        for i in 0..other.rows {
            for j in 0..other.cols {
                m.set(self.rows + i, self.cols + j, other.at(i, j).clone());
            }
        }
        m
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Sparse row: strictly increasing column indices, no explicit zeros.
pub(crate) type SparseRow = Vec<(usize, Rat)>;

/// `target -= coeff * src`, both sorted sparse rows.
fn row_axpy(target: &SparseRow, coeff: &Rat, src: &SparseRow) -> SparseRow {
    let mut out = Vec::with_capacity(target.len() + src.len());
    let (mut i, mut j) = (0, 0);
    while i < target.len() || j < src.len() {
        match (target.get(i), src.get(j)) {
            (Some((ct, vt)), Some((cs, vs))) if ct == cs => {
                let v = vt - &(coeff * vs);
                if !v.is_zero() {
                    out.push((*ct, v));
                }
                i += 1;
                j += 1;
            }
            (Some((ct, vt)), Some((cs, _))) if ct < cs => {
                out.push((*ct, vt.clone()));
                i += 1;
            }
            (Some(_), Some((cs, vs))) => {
                let v = -(coeff * vs);
                if !v.is_zero() {
                    out.push((*cs, v));
                }
                j += 1;
            }
            (Some((ct, vt)), None) => {
                out.push((*ct, vt.clone()));
                i += 1;
            }
            (None, Some((cs, vs))) => {
                let v = -(coeff * vs);
                if !v.is_zero() {
                    out.push((*cs, v));
                }
                j += 1;
            }
            (None, None) => unreachable!(),
        }
    }
    out
}

/// Incremental reduced-row-echelon accumulator over sparse rows.
///
/// Rows go in one at a time; `finalize` back-substitutes so every stored row
/// has zeros at all other pivot columns. Pivot columns and extracted kernel
/// vectors come out in ascending column order.
pub(crate) struct Rref {
    cols: usize,
    /// pivot column -> row normalized to 1 at its pivot, sorted by pivot col
    pivots: std::collections::BTreeMap<usize, SparseRow>,
    reduced: bool,
}

impl Rref {
    pub fn new(cols: usize) -> Self {
        Rref {
            cols,
            pivots: std::collections::BTreeMap::new(),
            reduced: true,
        }
    }

    pub fn add_row(&mut self, mut row: SparseRow) {
        loop {
            let Some((lead_col, lead_val)) = row.first().cloned() else {
                return; // reduced to zero
            };
            match self.pivots.get(&lead_col) {
                Some(pivot_row) => {
                    row = row_axpy(&row, &lead_val, pivot_row);
                }
                None => {
                    if !lead_val.is_one() {
                        let inv = lead_val.recip();
                        for (_, v) in row.iter_mut() {
                            *v = &*v * &inv;
                        }
                    }
                    self.pivots.insert(lead_col, row);
                    self.reduced = false;
                    return;
                }
            }
        }
    }

    pub fn add_dense_row(&mut self, row: &[Rat]) {
        let sparse: SparseRow = row
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(c, v)| (c, v.clone()))
            .collect();
        self.add_row(sparse);
    }

    /// Back-substitute so each pivot column is zero in every other row.
    pub fn finalize(&mut self) {
        if self.reduced {
            return;
        }
        let cols_desc: Vec<usize> = self.pivots.keys().rev().copied().collect();
        for &p in &cols_desc {
            let row = self.pivots.remove(&p).unwrap();
            let mut row_out = row.clone();
            for (c, v) in &row {
                if *c == p {
                    continue;
                }
                if let Some(other) = self.pivots.get(c) {
                    row_out = row_axpy(&row_out, v, other);
                }
            }
            self.pivots.insert(p, row_out);
        }
        self.reduced = true;
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn free_cols(&self) -> Vec<usize> {
        (0..self.cols)
            .filter(|c| !self.pivots.contains_key(c))
            .collect()
    }

    /// Dense kernel basis, one vector per free column, ascending.
    pub fn kernel_basis(&mut self) -> Vec<Vec<Rat>> {
        self.finalize();
        let free = self.free_cols();
        let index_of: std::collections::HashMap<usize, usize> =
            free.iter().enumerate().map(|(i, c)| (*c, i)).collect();
        let mut vecs: Vec<Vec<Rat>> = free
            .iter()
            .map(|&f| {
                let mut v = vec![Rat::zero(); self.cols];
                v[f] = Rat::one();
                v
            })
            .collect();
        for (&p, row) in &self.pivots {
            for (c, v) in row {
                if let Some(&k) = index_of.get(c) {
                    vecs[k][p] = -v.clone();
                }
            }
        }
        vecs
    }

    /// Reduce `v` against the stored rows: the residual has zeros at every
    /// pivot column and is the canonical representative of `v` modulo the
    /// row space. Two vectors reduce to the same residual iff they differ by
    /// a row-space element.
    pub fn reduce_vector(&mut self, v: &[Rat]) -> Vec<Rat> {
        self.finalize();
        assert_eq!(v.len(), self.cols);
        let mut out = v.to_vec();
        for (&p, row) in &self.pivots {
            let c = out[p].clone();
            if c.is_zero() {
                continue;
            }
            for (col, val) in row {
                out[*col] = &out[*col] - &(&c * val);
            }
        }
        out
    }
}

/// Rank over the rationals.
pub fn rank(m: &Matrix) -> usize {
    let mut rref = Rref::new(m.cols());
    for r in 0..m.rows() {
        rref.add_dense_row(m.row(r));
    }
    rref.rank()
}

/// Basis of `{ v : m v = 0 }`, one vector per free column in ascending
/// free-column order. `len = cols - rank`.
pub fn kernel_basis(m: &Matrix) -> Vec<Vec<Rat>> {
    let mut rref = Rref::new(m.cols());
    for r in 0..m.rows() {
        rref.add_dense_row(m.row(r));
    }
    rref.kernel_basis()
}

/// One particular solution of `m x = b` (free variables set to zero), or
/// `None` when the system is inconsistent. `b.len()` must equal `m.rows()`.
#[allow(clippy::needless_range_loop)] // coordinate indexing reads clearer here
pub fn solve(m: &Matrix, b: &[Rat]) -> Option<Vec<Rat>> {
    assert_eq!(b.len(), m.rows(), "right-hand side length mismatch");
    let n = m.cols();
    let mut rref = Rref::new(n + 1);
    for r in 0..m.rows() {
        let mut row: SparseRow = m
            .row(r)
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(c, v)| (c, v.clone()))
            .collect();
        if !b[r].is_zero() {
            row.push((n, b[r].clone()));
        }
        rref.add_row(row);
    }
    if rref.pivots.contains_key(&n) {
        return None; // a row reduced to 0 = 1
    }
    rref.finalize();
    let mut x = vec![Rat::zero(); n];
    for (&p, row) in &rref.pivots {
        if let Some((_, v)) = row.iter().find(|(c, _)| *c == n) {
            x[p] = v.clone();
        }
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_int};

    fn m(rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| rat_int(x)).collect())
                .collect(),
        )
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank(&Matrix::identity(3)), 3);
        assert_eq!(rank(&Matrix::zero(2, 5)), 0);
        assert_eq!(rank(&m(&[&[1, 2], &[2, 4]])), 1);
    }

    #[test]
    fn kernel_examples() {
        assert!(kernel_basis(&Matrix::identity(2)).is_empty());
        assert_eq!(kernel_basis(&Matrix::zero(2, 3)).len(), 3);
        let k = kernel_basis(&m(&[&[1, 1]]));
        assert_eq!(k.len(), 1);
        // proportional to (1, -1)
        assert_eq!(&k[0][0] + &k[0][1], rat_int(0));
        assert!(!k[0][0].is_zero());
    }

    #[test]
    fn solve_examples() {
        let b = vec![rat_int(3), rat(1, 2)];
        assert_eq!(solve(&Matrix::identity(2), &b), Some(b.clone()));
        assert_eq!(solve(&Matrix::zero(2, 2), &b), None);
        // free variable zeroed
        assert_eq!(
            solve(&m(&[&[1, 1]]), &[rat_int(2)]),
            Some(vec![rat_int(2), rat_int(0)])
        );
    }

    #[test]
    fn rank_plus_nullity_and_solve_exactness() {
        use rand::{rngs::StdRng, Rng, SeedableRng};
        let mut rng = StdRng::seed_from_u64(7);
        for _ in 0..40 {
            let rows = rng.gen_range(1..5);
            let cols = rng.gen_range(1..5);
            let a = Matrix::from_fn(rows, cols, |_, _| rat(rng.gen_range(-3..=3), 1));
            assert_eq!(rank(&a) + kernel_basis(&a).len(), cols);
            for v in kernel_basis(&a) {
                assert!(a.apply(&v).iter().all(Rat::is_zero));
            }
            let x = Matrix::from_fn(cols, 1, |_, _| rat(rng.gen_range(-3..=3), 1));
            let b = a.apply(&x.column(0));
            let sol = solve(&a, &b).expect("constructed system must be consistent");
            assert_eq!(a.apply(&sol), b);
        }
    }

    #[test]
    fn repeated_calls_are_bit_identical() {
        let a = m(&[&[2, 4, 6], &[1, 3, 5], &[0, 2, 4]]);
        assert_eq!(kernel_basis(&a), kernel_basis(&a));
        assert_eq!(rank(&a), rank(&a));
    }

    #[test]
    fn direct_sum_and_pow() {
        let a = m(&[&[0, 1], &[1, 0]]);
        assert_eq!(a.pow(2), Matrix::identity(2));
        let s = a.direct_sum(&Matrix::identity(1));
        assert_eq!(s.rows(), 3);
        assert_eq!(*s.at(2, 2), rat_int(1));
        assert_eq!(*s.at(0, 2), rat_int(0));
    }
}
