//! Seeded random instances for the verification suites.
//!
//! Every trial draws from its own generator, seeded from the run seed and
//! the trial index, so results do not depend on how trials are scheduled.

use std::collections::BTreeMap;

use rand::seq::index;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::automorphic::{pair_is_critical, InfinityTypeData};
use crate::halfint::HalfInt;
use crate::hodge::{check_pair_hyp1, HodgeMultiset, RegularMotiveData};
use crate::lfactor::pair_critical_points;

pub type SampleRng = ChaCha8Rng;

/// SplitMix64 finalizer.
fn mix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Seed for trial `index` of stream `stream` under the run seed.
pub fn subseed(seed: u64, stream: u64, index: u64) -> u64 {
    mix(mix(seed ^ mix(stream)) ^ index)
}

pub fn trial_rng(seed: u64, stream: u64, index: u64) -> SampleRng {
    SampleRng::seed_from_u64(subseed(seed, stream, index))
}

/// `k` distinct integers from `[lo, hi]`, decreasing.
fn distinct_decreasing(rng: &mut impl Rng, k: usize, lo: i64, hi: i64) -> Vec<i64> {
    let span = (hi - lo + 1) as usize;
    let mut v: Vec<i64> = index::sample(rng, span, k).into_iter().map(|x| lo + x as i64).collect();
    v.sort_unstable_by(|a, b| b.cmp(a));
    v
}

/// Regular motive of the given rank with weight in `[-6, 6]` and Hodge
/// numbers in `[-8, 8]`.
pub fn random_motive(rng: &mut impl Rng, label: &str, rank: usize) -> RegularMotiveData {
    let weight = rng.gen_range(-6..=6);
    let p = distinct_decreasing(rng, rank, -8, 8);
    RegularMotiveData::new(label, weight, p).expect("sampled data is regular")
}

/// A pair `(M, M')` with `R(M ⊗ M')` free of `(p,p)` classes.
pub fn random_hyp1_pair(rng: &mut impl Rng, n: usize, np: usize) -> (RegularMotiveData, RegularMotiveData) {
    loop {
        let m = random_motive(rng, "M", n);
        let mp = random_motive(rng, "M'", np);
        if check_pair_hyp1(&m, &mp).is_ok() {
            return (m, mp);
        }
    }
}

/// Ranks uniform in `1..=max_rank`, then a Hyp.-1 pair of those ranks.
pub fn random_hyp1_pair_up_to(rng: &mut impl Rng, max_rank: usize) -> (RegularMotiveData, RegularMotiveData) {
    let n = rng.gen_range(1..=max_rank);
    let np = rng.gen_range(1..=max_rank);
    random_hyp1_pair(rng, n, np)
}

/// Swap-closed multiset without `(p,p)` classes: up to 4 types `(p, ω-p)`
/// with `2p > ω`, multiplicities `1..=3`, and their swaps.
pub fn random_swap_closed_multiset(rng: &mut impl Rng) -> HodgeMultiset {
    let weight: i64 = rng.gen_range(-8..=8);
    // smallest p with 2p > ω
    let base = weight.div_euclid(2) + 1;
    let k = rng.gen_range(1..=4);
    let mut counts = BTreeMap::new();
    for offset in index::sample(rng, 8, k) {
        let p = base + offset as i64;
        let h = rng.gen_range(1..=3);
        counts.insert(p, h);
        counts.insert(weight - p, h);
    }
    HodgeMultiset::from_counts(weight, counts).expect("sampled multiset is swap-closed")
}

/// Regular algebraic infinity type of rank `n` with `w ∈ [-3, 3]` and
/// exponents in `[-6, 6] ∩ (Z + (n-1)/2)`.
pub fn random_infinity_type(rng: &mut impl Rng, label: &str, n: usize) -> InfinityTypeData {
    let w = rng.gen_range(-3..=3);
    let parity = ((n - 1) % 2) as i64;
    // twice-values in [-12, 12] of the right parity
    let a = distinct_decreasing(rng, n, -6, 6 - parity)
        .into_iter()
        .map(|x| HalfInt::from_twice(2 * x + parity))
        .collect();
    InfinityTypeData::new(label, w, a).expect("sampled infinity type is regular and algebraic")
}

/// A critical pair `(Π, Π')` of ranks `≤ max_rank`.
pub fn random_critical_rep_pair(rng: &mut impl Rng, max_rank: usize) -> (InfinityTypeData, InfinityTypeData) {
    let n = rng.gen_range(1..=max_rank);
    let np = rng.gen_range(1..=max_rank);
    loop {
        let pi = random_infinity_type(rng, "Pi", n);
        let pip = random_infinity_type(rng, "Pi'", np);
        if pair_is_critical(&pi, &pip) {
            return (pi, pip);
        }
    }
}

/// A uniformly chosen critical point of a critical pair.
pub fn random_critical_point(rng: &mut impl Rng, pi: &InfinityTypeData, pip: &InfinityTypeData) -> HalfInt {
    let points = pair_critical_points(pi, pip).expect("pair is critical").points();
    points[rng.gen_range(0..points.len())]
}
