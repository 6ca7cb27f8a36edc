//! Dense coefficient tensors of multilinear maps.
//!
//! A `MultiLinearMap` stores the structure constants of a multilinear map
//! `W^arity -> V` on chosen bases: `coeffs[(t, l)]` is the `l`-th output
//! coordinate of the map applied to the basis tuple `t`. Everything downstream
//! (brackets, coboundary operators, verifiers) is built from four exact tensor
//! operations: postcomposing with a matrix, precomposing one input slot with a
//! matrix, inserting another map into a slot, and permuting slots.

use crate::matrix::Matrix;
use crate::rational::Rat;
use num_traits::Zero;

/// A basis tuple together with the map's output vector there.
pub type NonzeroTuple = (Vec<usize>, Vec<Rat>);

#[derive(Clone, PartialEq, Eq)]
pub struct MultiLinearMap {
    arity: usize,
    dim_in: usize,
    dim_out: usize,
    /// Row-major over the input tuple, output coordinate fastest.
    coeffs: Vec<Rat>,
}

impl MultiLinearMap {
    pub fn zero(arity: usize, dim_in: usize, dim_out: usize) -> Self {
        let len = dim_in.pow(arity as u32) * dim_out;
        MultiLinearMap {
            arity,
            dim_in,
            dim_out,
            coeffs: vec![Rat::zero(); len],
        }
    }

    pub fn from_fn(
        arity: usize,
        dim_in: usize,
        dim_out: usize,
        mut f: impl FnMut(&[usize], usize) -> Rat,
    ) -> Self {
        let mut out = MultiLinearMap::zero(arity, dim_in, dim_out);
        let tuples = dim_in.pow(arity as u32);
        let mut tuple = vec![0usize; arity];
        for t in 0..tuples {
            decode(t, dim_in, &mut tuple);
            for l in 0..dim_out {
                out.coeffs[t * dim_out + l] = f(&tuple, l);
            }
        }
        out
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn dim_in(&self) -> usize {
        self.dim_in
    }

    pub fn dim_out(&self) -> usize {
        self.dim_out
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn tuple_count(&self) -> usize {
        self.dim_in.pow(self.arity as u32)
    }

    fn index_of(&self, tuple: &[usize]) -> usize {
        debug_assert_eq!(tuple.len(), self.arity);
        let mut idx = 0usize;
        for &t in tuple {
            debug_assert!(t < self.dim_in);
            idx = idx * self.dim_in + t;
        }
        idx
    }

    pub fn get(&self, tuple: &[usize], out: usize) -> &Rat {
        &self.coeffs[self.index_of(tuple) * self.dim_out + out]
    }

    pub fn set(&mut self, tuple: &[usize], out: usize, v: Rat) {
        let idx = self.index_of(tuple) * self.dim_out + out;
        self.coeffs[idx] = v;
    }

    pub fn add_to(&mut self, tuple: &[usize], out: usize, v: &Rat) {
        let idx = self.index_of(tuple) * self.dim_out + out;
        self.coeffs[idx] = &self.coeffs[idx] + v;
    }

    /// Output vector on a basis tuple, as a slice of length `dim_out`.
    pub fn value_at(&self, tuple: &[usize]) -> &[Rat] {
        let base = self.index_of(tuple) * self.dim_out;
        &self.coeffs[base..base + self.dim_out]
    }

    fn value_at_index(&self, tuple_index: usize) -> &[Rat] {
        let base = tuple_index * self.dim_out;
        &self.coeffs[base..base + self.dim_out]
    }

    /// Full multilinear evaluation on coordinate vectors.
    pub fn eval(&self, args: &[&[Rat]]) -> Vec<Rat> {
        assert_eq!(args.len(), self.arity);
        for a in args {
            assert_eq!(a.len(), self.dim_in);
        }
        let mut out = vec![Rat::zero(); self.dim_out];
        let mut tuple = vec![0usize; self.arity];
        for t in 0..self.tuple_count() {
            decode(t, self.dim_in, &mut tuple);
            let mut weight = Rat::from_integer(1.into());
            let mut vanished = false;
            for (s, &i) in tuple.iter().enumerate() {
                if args[s][i].is_zero() {
                    vanished = true;
                    break;
                }
                weight = &weight * &args[s][i];
            }
            if vanished {
                continue;
            }
            for (l, v) in self.value_at_index(t).iter().enumerate() {
                if !v.is_zero() {
                    out[l] = &out[l] + &(&weight * v);
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rat::is_zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        self.compatible(other);
        MultiLinearMap {
            arity: self.arity,
            dim_in: self.dim_in,
            dim_out: self.dim_out,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.compatible(other);
        MultiLinearMap {
            arity: self.arity,
            dim_in: self.dim_in,
            dim_out: self.dim_out,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn scale(&self, k: &Rat) -> Self {
        MultiLinearMap {
            arity: self.arity,
            dim_in: self.dim_in,
            dim_out: self.dim_out,
            coeffs: self.coeffs.iter().map(|a| a * k).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        self.scale(&-Rat::from_integer(1.into()))
    }

    /// `self += k * other`, in place.
    pub fn add_scaled(&mut self, k: &Rat, other: &Self) {
        self.compatible(other);
        if k.is_zero() {
            return;
        }
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            if !b.is_zero() {
                *a = &*a + &(k * b);
            }
        }
    }

    fn compatible(&self, other: &Self) {
        assert_eq!(self.arity, other.arity, "arity mismatch");
        assert_eq!(self.dim_in, other.dim_in, "input dimension mismatch");
        assert_eq!(self.dim_out, other.dim_out, "output dimension mismatch");
    }

    /// Postcompose with `m`: returns `m ∘ self`. `m` is `new_out × dim_out`.
    pub fn compose_output(&self, m: &Matrix) -> Self {
        assert_eq!(m.cols(), self.dim_out, "output composition shape");
        let new_out = m.rows();
        let mut out = MultiLinearMap::zero(self.arity, self.dim_in, new_out);
        for t in 0..self.tuple_count() {
            let vals = self.value_at_index(t);
            for l in 0..new_out {
                let mut acc = Rat::zero();
                for (k, v) in vals.iter().enumerate() {
                    let c = m.at(l, k);
                    if !c.is_zero() && !v.is_zero() {
                        acc += c * v;
                    }
                }
                out.coeffs[t * new_out + l] = acc;
            }
        }
        out
    }

    /// Precompose input slot `slot` with `m` (`dim_in × dim_in`):
    /// `(x_0, …) ↦ self(x_0, …, m x_slot, …)`.
    pub fn apply_to_slot(&self, slot: usize, m: &Matrix) -> Self {
        assert!(slot < self.arity);
        assert_eq!(m.rows(), self.dim_in);
        assert_eq!(m.cols(), self.dim_in);
        let d = self.dim_in;
        let mut out = MultiLinearMap::zero(self.arity, d, self.dim_out);
        let mut tuple = vec![0usize; self.arity];
        for t in 0..self.tuple_count() {
            decode(t, d, &mut tuple);
            let slot_val = tuple[slot];
            // NEW[t] = sum_u m[u][t_slot] * OLD[t with slot=u]
            let mut old_tuple = tuple.clone();
            for u in 0..d {
                let c = m.at(u, slot_val);
                if c.is_zero() {
                    continue;
                }
                old_tuple[slot] = u;
                let vals = self.value_at(&old_tuple);
                for (l, v) in vals.iter().enumerate() {
                    if !v.is_zero() {
                        out.coeffs[t * self.dim_out + l] =
                            &out.coeffs[t * self.dim_out + l] + &(c * v);
                    }
                }
            }
        }
        out
    }

    /// Precompose several slots with the same matrix.
    pub fn apply_to_slots(&self, slots: &[usize], m: &Matrix) -> Self {
        let mut out = self.clone();
        for &s in slots {
            out = out.apply_to_slot(s, m);
        }
        out
    }

    /// Insert `inner` into input slot `slot`:
    /// the result has arity `self.arity + inner.arity - 1` and its arguments
    /// are (outer args before `slot`, inner args, outer args after `slot`).
    pub fn insert_at_slot(&self, slot: usize, inner: &Self) -> Self {
        assert!(slot < self.arity);
        assert_eq!(inner.dim_out, self.dim_in, "inserted map output dimension");
        assert_eq!(inner.dim_in, self.dim_in, "inserted map input dimension");
        let d = self.dim_in;
        let m2 = self.arity + inner.arity - 1;
        let mut out = MultiLinearMap::zero(m2, d, self.dim_out);
        let mut tuple = vec![0usize; m2];
        let mut outer_tuple = vec![0usize; self.arity];
        for t in 0..out.tuple_count() {
            decode(t, d, &mut tuple);
            let inner_vals = inner.value_at(&tuple[slot..slot + inner.arity]);
            outer_tuple[..slot].copy_from_slice(&tuple[..slot]);
            outer_tuple[slot + 1..].copy_from_slice(&tuple[slot + inner.arity..]);
            for (v, c) in inner_vals.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                outer_tuple[slot] = v;
                let vals = self.value_at(&outer_tuple);
                for (l, w) in vals.iter().enumerate() {
                    if !w.is_zero() {
                        out.coeffs[t * self.dim_out + l] =
                            &out.coeffs[t * self.dim_out + l] + &(c * w);
                    }
                }
            }
        }
        out
    }

    /// Reorder arguments: `result(x_0, …) = self(x_{perm[0]}, …, x_{perm[arity-1]})`,
    /// i.e. slot `k` of `self` reads the result's argument `perm[k]`.
    pub fn permute_args(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.arity);
        {
            let mut seen = vec![false; self.arity];
            for &p in perm {
                assert!(p < self.arity && !seen[p], "not a permutation");
                seen[p] = true;
            }
        }
        let d = self.dim_in;
        let mut out = MultiLinearMap::zero(self.arity, d, self.dim_out);
        let mut tuple = vec![0usize; self.arity];
        let mut old_tuple = vec![0usize; self.arity];
        for t in 0..self.tuple_count() {
            decode(t, d, &mut tuple);
            for (k, &p) in perm.iter().enumerate() {
                old_tuple[k] = tuple[p];
            }
            let vals = self.value_at(&old_tuple);
            out.coeffs[t * self.dim_out..(t + 1) * self.dim_out].clone_from_slice(vals);
        }
        out
    }

    /// Swap two argument slots.
    pub fn swap_args(&self, i: usize, j: usize) -> Self {
        let mut perm: Vec<usize> = (0..self.arity).collect();
        perm.swap(i, j);
        self.permute_args(&perm)
    }

    /// Up to `limit` basis tuples with nonzero value, in lexicographic order,
    /// together with the total count of nonzero tuples.
    pub fn nonzero_tuples(&self, limit: usize) -> (usize, Vec<NonzeroTuple>) {
        let mut found = Vec::new();
        let mut count = 0usize;
        let mut tuple = vec![0usize; self.arity];
        for t in 0..self.tuple_count() {
            let vals = self.value_at_index(t);
            if vals.iter().any(|v| !v.is_zero()) {
                count += 1;
                if found.len() < limit {
                    decode(t, self.dim_in, &mut tuple);
                    found.push((tuple.clone(), vals.to_vec()));
                }
            }
        }
        (count, found)
    }
}

impl std::fmt::Debug for MultiLinearMap {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let (count, entries) = self.nonzero_tuples(16);
        writeln!(
            f,
            "MultiLinearMap(arity {}, {} -> {}, {} nonzero tuples)",
            self.arity, self.dim_in, self.dim_out, count
        )?;
        for (tuple, vals) in entries {
            let vals: Vec<String> = vals.iter().map(|v| v.to_string()).collect();
            writeln!(f, "  {:?} -> [{}]", tuple, vals.join(", "))?;
        }
        Ok(())
    }
}

/// Decode a linear tuple index into digits base `d`, most significant first.
pub(crate) fn decode(mut idx: usize, d: usize, out: &mut [usize]) {
    for slot in (0..out.len()).rev() {
        out[slot] = idx % d;
        idx /= d;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat_int, Rat};

    fn sample_bilinear() -> MultiLinearMap {
        // f(e_i, e_j) = (i + 2j) e_0 + (i * j) e_1 over d = 2
        MultiLinearMap::from_fn(2, 2, 2, |t, l| {
            if l == 0 {
                rat_int((t[0] + 2 * t[1]) as i64)
            } else {
                rat_int((t[0] * t[1]) as i64)
            }
        })
    }

    #[test]
    fn eval_agrees_with_basis_lookup() {
        let f = sample_bilinear();
        let e0 = [rat_int(1), rat_int(0)];
        let e1 = [rat_int(0), rat_int(1)];
        assert_eq!(f.eval(&[&e0, &e1]), f.value_at(&[0, 1]).to_vec());
        let mix = [rat_int(2), rat_int(3)];
        let by_linearity: Vec<Rat> = (0..2)
            .map(|l| f.get(&[0, 0], l) * &rat_int(2) + f.get(&[1, 0], l) * &rat_int(3))
            .collect();
        assert_eq!(f.eval(&[&mix, &e0]), by_linearity);
    }

    #[test]
    fn permute_roundtrip() {
        let f =
            MultiLinearMap::from_fn(3, 2, 1, |t, _| rat_int((t[0] + 2 * t[1] + 4 * t[2]) as i64));
        let perm = [2, 0, 1];
        let g = f.permute_args(&perm);
        // inverse permutation
        let mut inv = [0usize; 3];
        for (k, &p) in perm.iter().enumerate() {
            inv[p] = k;
        }
        assert_eq!(g.permute_args(&inv), f);
        // spot value: g(x0,x1,x2) = f(x2,x0,x1), so g(e1,e0,e0) = f(e0,e1,e0)
        assert_eq!(g.get(&[1, 0, 0], 0), f.get(&[0, 1, 0], 0));
    }

    #[test]
    fn slot_matrix_identity_and_composition() {
        let f = sample_bilinear();
        let id = Matrix::identity(2);
        assert_eq!(f.apply_to_slot(0, &id), f);
        // applying [[0,1],[1,0]] to slot 1 swaps the second argument's basis
        let swap = Matrix::from_rows(vec![
            vec![rat_int(0), rat_int(1)],
            vec![rat_int(1), rat_int(0)],
        ]);
        let g = f.apply_to_slot(1, &swap);
        assert_eq!(g.value_at(&[1, 0]), f.value_at(&[1, 1]));
    }

    #[test]
    fn insert_matches_hand_composition() {
        let f = sample_bilinear();
        // g(x) = x0 e_0 + 3 x1 e_1 as a 1-ary map? use a linear map with
        // nontrivial mixing: g(e_0) = e_1, g(e_1) = e_0 + e_1
        let g = MultiLinearMap::from_fn(1, 2, 2, |t, l| {
            rat_int(match (t[0], l) {
                (0, 1) => 1,
                (1, 0) => 1,
                (1, 1) => 1,
                _ => 0,
            })
        });
        let h = f.insert_at_slot(0, &g); // h(y, x1) = f(g(y), x1)
        assert_eq!(h.arity(), 2);
        // h(e_0, e_1) = f(g(e_0), e_1) = f(e_1, e_1)
        assert_eq!(h.value_at(&[0, 1]), f.value_at(&[1, 1]));
        // h(e_1, e_0) = f(e_0 + e_1, e_0) = f(e_0,e_0) + f(e_1,e_0)
        let expect: Vec<Rat> = (0..2)
            .map(|l| f.get(&[0, 0], l) + f.get(&[1, 0], l))
            .collect();
        assert_eq!(h.value_at(&[1, 0]).to_vec(), expect);
    }

    #[test]
    fn compose_output_shapes() {
        let f = sample_bilinear();
        let proj = Matrix::from_rows(vec![vec![rat_int(1), rat_int(0)]]);
        let g = f.compose_output(&proj);
        assert_eq!(g.dim_out(), 1);
        assert_eq!(g.get(&[1, 1], 0), f.get(&[1, 1], 0));
    }
}
