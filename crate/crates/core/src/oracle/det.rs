//! Exact determinants of symbolic matrices.
//!
//! Laplace expansion along the rows from the bottom up, memoized on the set
//! of columns still available. Layer `k` holds the minors on the last `k`
//! rows, keyed by column mask; each layer is computed in parallel, and every
//! minor sums its cofactors in a fixed order, so the result does not depend
//! on the schedule.

use std::collections::HashMap;

use rayon::prelude::*;

use super::laurent::LaurentPoly;
use super::matrix::SymMatrix;

/// Masks of `k` bits among the low `n`, increasing.
fn masks_with_popcount(n: usize, k: usize) -> Vec<u64> {
    (0u64..(1u64 << n)).filter(|m| m.count_ones() as usize == k).collect()
}

pub fn sym_det(mx: &SymMatrix) -> LaurentPoly {
    det_entries(&mx.entries, nvars_of(mx))
}

fn nvars_of(mx: &SymMatrix) -> usize {
    mx.entries.iter().flatten().next().map_or(mx.layout.nvars(), LaurentPoly::nvars)
}

pub(crate) fn det_entries(entries: &[Vec<LaurentPoly>], nvars: usize) -> LaurentPoly {
    let size = entries.len();
    assert!(entries.iter().all(|r| r.len() == size), "determinant of a non-square matrix");
    assert!(size < 64, "matrix too large for column masks");
    if size == 0 {
        return LaurentPoly::one(nvars);
    }
    let mut layer: HashMap<u64, LaurentPoly> = HashMap::from([(0u64, LaurentPoly::one(nvars))]);
    for k in 1..=size {
        let row = &entries[size - k];
        let next: Vec<(u64, LaurentPoly)> = masks_with_popcount(size, k)
            .into_par_iter()
            .filter_map(|mask| {
                let mut acc = LaurentPoly::zero(nvars);
                for c in (0..size).filter(|c| mask & (1 << c) != 0) {
                    let entry = &row[c];
                    if entry.is_zero() {
                        continue;
                    }
                    let Some(minor) = layer.get(&(mask & !(1 << c))) else {
                        continue;
                    };
                    let term = entry.mul(minor);
                    // position of c among the chosen columns
                    let below = (mask & ((1 << c) - 1)).count_ones();
                    acc = if below % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
                }
                (!acc.is_zero()).then_some((mask, acc))
            })
            .collect();
        layer = next.into_iter().collect();
    }
    layer.remove(&((1u64 << size) - 1)).unwrap_or_else(|| LaurentPoly::zero(nvars))
}

/// Sign of a permutation given as a vector of images.
pub(crate) fn permutation_sign(perm: &[usize]) -> i128 {
    let mut seen = vec![false; perm.len()];
    let mut sign = 1;
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            x = perm[x];
            len += 1;
        }
        if len % 2 == 0 {
            sign = -sign;
        }
    }
    sign
}

/// Heap's algorithm over all permutations of `0..n`.
pub(crate) fn for_each_permutation(n: usize, mut f: impl FnMut(&[usize])) {
    let mut perm: Vec<usize> = (0..n).collect();
    let mut c = vec![0usize; n];
    f(&perm);
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            f(&perm);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

/// `Σ_σ sgn(σ) ∏_i M[i][σ(i)]`.
pub fn leibniz_det(entries: &[Vec<LaurentPoly>], nvars: usize) -> LaurentPoly {
    let mut acc = LaurentPoly::zero(nvars);
    for_each_permutation(entries.len(), |perm| {
        let mut term = LaurentPoly::constant(nvars, permutation_sign(perm));
        for (i, &j) in perm.iter().enumerate() {
            term = term.mul(&entries[i][j]);
            if term.is_zero() {
                return;
            }
        }
        acc = acc.add(&term);
    });
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn x(slot: usize) -> LaurentPoly {
        LaurentPoly::var(4, slot, 1)
    }

    #[test]
    fn small_cases() {
        assert_eq!(det_entries(&[vec![x(0)]], 4), x(0));
        let m = vec![vec![x(0), x(1)], vec![x(2), x(3)]];
        assert_eq!(det_entries(&m, 4), x(0).mul(&x(3)).sub(&x(1).mul(&x(2))));
    }

    #[test]
    fn permutation_matrices() {
        let mut count = 0;
        for_each_permutation(4, |perm| {
            count += 1;
            let m: Vec<Vec<LaurentPoly>> = (0..4)
                .map(|i| (0..4).map(|j| LaurentPoly::constant(4, (perm[i] == j) as i128)).collect())
                .collect();
            assert_eq!(det_entries(&m, 4), LaurentPoly::constant(4, permutation_sign(perm)));
        });
        assert_eq!(count, 24);
    }

    #[test]
    fn agrees_with_leibniz_on_random_entries() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for size in 1..=4 {
            for _ in 0..25 {
                let m: Vec<Vec<LaurentPoly>> = (0..size)
                    .map(|_| {
                        (0..size)
                            .map(|_| {
                                (0..rng.gen_range(0..3)).fold(LaurentPoly::zero(4), |p, _| {
                                    let e = (0..4).map(|_| rng.gen_range(-2..=2)).collect();
                                    p.add(&LaurentPoly::monomial(4, rng.gen_range(-3..=3), e))
                                })
                            })
                            .collect()
                    })
                    .collect();
                assert_eq!(det_entries(&m, 4), leibniz_det(&m, 4));
            }
        }
    }
}
