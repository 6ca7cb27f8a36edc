//! Signed unshuffle permutations.
//!
//! A `(p, q)`-unshuffle is a permutation of `p + q` letters that is
//! increasing on its first `p` and last `q` positions. They index the sums
//! in the graded bracket on cochains, each weighted by the permutation sign.

/// A permutation together with its parity sign.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedPermutation {
    /// `image[i]` is where output position `i` reads from; a bijection on
    /// `{0, …, n-1}`.
    pub image: Vec<usize>,
    /// `+1` or `-1`, the parity computed by inversion count.
    pub sign: i8,
}

impl SignedPermutation {
    pub fn identity(n: usize) -> Self {
        SignedPermutation {
            image: (0..n).collect(),
            sign: 1,
        }
    }

    pub fn len(&self) -> usize {
        self.image.len()
    }

    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }
}

fn parity(image: &[usize]) -> i8 {
    let mut inversions = 0usize;
    for i in 0..image.len() {
        for j in i + 1..image.len() {
            if image[i] > image[j] {
                inversions += 1;
            }
        }
    }
    if inversions.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// All `(p, q)`-unshuffles of `{0, …, p+q-1}` with their signs, ordered
/// lexicographically by the first block. Length is `binomial(p+q, p)`.
pub fn unshuffles(p: usize, q: usize) -> Vec<SignedPermutation> {
    let n = p + q;
    let mut out = Vec::new();
    // enumerate p-subsets of {0..n} in lexicographic order
    let mut first: Vec<usize> = (0..p).collect();
    loop {
        let in_first = |x: &usize| first.contains(x);
        let mut image = first.clone();
        image.extend((0..n).filter(|x| !in_first(x)));
        out.push(SignedPermutation {
            sign: parity(&image),
            image,
        });
        // next combination
        if p == 0 {
            break;
        }
        let mut i = p;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if first[i] != i + n - p {
                break;
            }
        }
        first[i] += 1;
        for j in i + 1..p {
            first[j] = first[j - 1] + 1;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Brute-force oracle: filter all n! permutations for block monotonicity.
    fn oracle(p: usize, q: usize) -> Vec<Vec<usize>> {
        fn perms(n: usize) -> Vec<Vec<usize>> {
            if n == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for rest in perms(n - 1) {
                for pos in 0..n {
                    let mut v = rest.clone();
                    v.insert(pos, n - 1);
                    out.push(v);
                }
            }
            out
        }
        let mut found: Vec<Vec<usize>> = perms(p + q)
            .into_iter()
            .filter(|im| {
                im[..p].windows(2).all(|w| w[0] < w[1]) && im[p..].windows(2).all(|w| w[0] < w[1])
            })
            .collect();
        found.sort();
        found
    }

    fn binomial(n: usize, k: usize) -> usize {
        if k > n {
            return 0;
        }
        let mut r = 1usize;
        for i in 0..k {
            r = r * (n - i) / (i + 1);
        }
        r
    }

    #[test]
    fn one_one_case() {
        let u = unshuffles(1, 1);
        assert_eq!(u.len(), 2);
        assert_eq!(
            u[0],
            SignedPermutation {
                image: vec![0, 1],
                sign: 1
            }
        );
        assert_eq!(
            u[1],
            SignedPermutation {
                image: vec![1, 0],
                sign: -1
            }
        );
    }

    #[test]
    fn zero_block_gives_identity() {
        for q in 0..4 {
            let u = unshuffles(0, q);
            assert_eq!(u.len(), 1);
            assert_eq!(u[0], SignedPermutation::identity(q));
            let u = unshuffles(q, 0);
            assert_eq!(u.len(), 1);
            assert_eq!(u[0], SignedPermutation::identity(q));
        }
    }

    #[test]
    fn two_one_signs_in_lex_order() {
        // expected: [0,1,2] +, [0,2,1] -, [1,2,0] +
        let u = unshuffles(2, 1);
        assert_eq!(u.len(), 3);
        assert_eq!(u[0].image, vec![0, 1, 2]);
        assert_eq!(u[1].image, vec![0, 2, 1]);
        assert_eq!(u[2].image, vec![1, 2, 0]);
        assert_eq!(u.iter().map(|s| s.sign).collect::<Vec<_>>(), vec![1, -1, 1]);
    }

    #[test]
    fn matches_brute_force_enumeration() {
        for p in 0..=4 {
            for q in 0..=4 {
                let got = unshuffles(p, q);
                assert_eq!(got.len(), binomial(p + q, p), "count at ({p},{q})");
                let images: Vec<Vec<usize>> = got.iter().map(|s| s.image.clone()).collect();
                assert_eq!(images, oracle(p, q), "images at ({p},{q})");
                for s in &got {
                    assert_eq!(s.sign, parity(&s.image));
                }
            }
        }
    }
}
