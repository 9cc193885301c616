//! The index sets `A`, `T` and the split indices of a motivic pair.
//!
//! With `ω = ω(M) + ω(M')`:
//!
//! * `A = {(a,b) : p_a + r_b > ω/2}`
//! * `T = {(t,u) : p^c_t + r^c_u > ω/2}`
//! * `sp(i, M; M')` is the length of the `i`-th part when the sequence
//!   `-r_{n'} > ... > -r_1` is cut by `p_1 - ω/2 > ... > p_n - ω/2`; part 0
//!   lies above the first cut.
//!
//! Every comparison against `ω/2` is done on doubled integers.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::hodge::{check_pair_hyp1, RegularMotiveData};

/// A set of 1-based index pairs `(a, b)` with `1 ≤ a ≤ n`, `1 ≤ b ≤ n'`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IndexPairSet {
    pub n: usize,
    pub np: usize,
    pub members: BTreeSet<(usize, usize)>,
}

impl IndexPairSet {
    pub fn contains(&self, a: usize, b: usize) -> bool {
        self.members.contains(&(a, b))
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// All pairs of `[1..n] × [1..n']` not in the set, lexicographically.
    pub fn complement(&self) -> Vec<(usize, usize)> {
        all_pairs(self.n, self.np).filter(|p| !self.members.contains(p)).collect()
    }

    /// Down-closed in both coordinates.
    pub fn is_tableau(&self) -> bool {
        self.members
            .iter()
            .all(|&(t, u)| (1..=t).all(|t2| (1..=u).all(|u2| self.members.contains(&(t2, u2)))))
    }

    /// `#{u : (t,u) ∈ set}`.
    pub fn row_count(&self, t: usize) -> usize {
        self.members.range((t, 0)..=(t, usize::MAX)).count()
    }
}

pub(crate) fn all_pairs(n: usize, np: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..=n).flat_map(move |a| (1..=np).map(move |b| (a, b)))
}

/// Part lengths of `-r` cut by `p_i - ω/2`, `sp(0..=n)`; they sum to `n'`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct SplitIndices(pub Vec<usize>);

impl SplitIndices {
    pub fn get(&self, i: usize) -> usize {
        self.0[i]
    }

    pub fn values(&self) -> &[usize] {
        &self.0
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    /// `Σ_{j ≥ t} sp(j)`.
    pub fn tail_sum(&self, t: usize) -> usize {
        self.0[t..].iter().sum()
    }
}

/// Split the values by strictly decreasing cuts. Part `0` is above
/// `cuts[0]`, part `k` sits between `cuts[k-1]` and `cuts[k]`, the last part
/// is below every cut. A value equal to a cut is reported as `Err(index)`.
pub(crate) fn split_by_cuts(values: &[i64], cuts: &[i64]) -> std::result::Result<Vec<usize>, (usize, usize)> {
    debug_assert!(cuts.windows(2).all(|w| w[0] > w[1]));
    let mut parts = vec![0usize; cuts.len() + 1];
    for (vi, v) in values.iter().enumerate() {
        if let Some(ci) = cuts.iter().position(|c| c == v) {
            return Err((vi, ci));
        }
        let above = cuts.iter().filter(|&&c| c > *v).count();
        parts[above] += 1;
    }
    Ok(parts)
}

pub fn set_a(m: &RegularMotiveData, mp: &RegularMotiveData) -> Result<IndexPairSet> {
    check_pair_hyp1(m, mp)?;
    Ok(exceeding_pairs(m, mp))
}

pub fn set_t(m: &RegularMotiveData, mp: &RegularMotiveData) -> Result<IndexPairSet> {
    check_pair_hyp1(m, mp)?;
    Ok(exceeding_pairs(&m.conjugate(), &mp.conjugate()))
}

fn exceeding_pairs(m: &RegularMotiveData, mp: &RegularMotiveData) -> IndexPairSet {
    let omega = m.weight() + mp.weight();
    let (p, r) = (m.hodge_p(), mp.hodge_p());
    let members = all_pairs(m.rank(), mp.rank()).filter(|&(a, b)| 2 * (p[a - 1] + r[b - 1]) > omega).collect();
    IndexPairSet { n: m.rank(), np: mp.rank(), members }
}

/// `sp(i, M; M')` for `0 ≤ i ≤ n`.
pub fn split_indices(m: &RegularMotiveData, mp: &RegularMotiveData) -> Result<SplitIndices> {
    let omega = m.weight() + mp.weight();
    // -2 r_b against 2 p_i - ω
    let values: Vec<i64> = mp.hodge_p().iter().map(|r| -2 * r).collect();
    let cuts: Vec<i64> = m.hodge_p().iter().map(|p| 2 * p - omega).collect();
    split_by_cuts(&values, &cuts).map(SplitIndices).map_err(|(b, a)| {
        Error::PpClass(format!(
            "-r_{} = p_{} - ω/2 for the pair ({},{}) of {} ⊗ {}",
            b + 1,
            a + 1,
            a + 1,
            b + 1,
            m.tag(),
            mp.tag()
        ))
    })
}

/// Checks `#{u : (t,u) ∈ A} = Σ_{j ≥ t} sp(j, M; M')` for every `t`.
/// A `false` here means `set_a` and `split_indices` disagree.
pub fn verify_cardinality_lemma(m: &RegularMotiveData, mp: &RegularMotiveData) -> bool {
    match (set_a(m, mp), split_indices(m, mp)) {
        (Ok(a), Ok(sp)) => cardinality_holds(&a, &sp),
        _ => false,
    }
}

pub(crate) fn cardinality_holds(a: &IndexPairSet, sp: &SplitIndices) -> bool {
    sp.0.len() == a.n + 1 && (1..=a.n).all(|t| a.row_count(t) == sp.tail_sum(t))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pair() -> (RegularMotiveData, RegularMotiveData) {
        (
            RegularMotiveData::new("M", 1, vec![1, 0]).unwrap(),
            RegularMotiveData::new("M'", 0, vec![1]).unwrap(),
        )
    }

    fn set(n: usize, np: usize, m: &[(usize, usize)]) -> IndexPairSet {
        IndexPairSet { n, np, members: m.iter().copied().collect() }
    }

    #[test]
    fn worked_pair_sets() {
        let (m, mp) = pair();
        assert_eq!(set_a(&m, &mp).unwrap(), set(2, 1, &[(1, 1), (2, 1)]));
        assert_eq!(set_t(&m, &mp).unwrap(), set(2, 1, &[]));
    }

    #[test]
    fn rank_one_sets() {
        let m = RegularMotiveData::new("M", 0, vec![1]).unwrap();
        let mp = RegularMotiveData::new("M'", 0, vec![0]).unwrap();
        assert_eq!(set_a(&m, &mp).unwrap(), set(1, 1, &[(1, 1)]));
        assert!(set_t(&m, &mp).unwrap().is_empty());
    }

    #[test]
    fn ties_are_hypothesis_violations() {
        let z = RegularMotiveData::new("Z", 0, vec![0]).unwrap();
        assert!(matches!(set_a(&z, &z), Err(Error::PpClass(_))));
        assert!(matches!(set_t(&z, &z), Err(Error::PpClass(_))));
        assert!(matches!(split_indices(&z, &z), Err(Error::PpClass(_))));
        assert!(!verify_cardinality_lemma(&z, &z));
    }

    #[test]
    fn worked_pair_split() {
        let (m, mp) = pair();
        assert_eq!(split_indices(&m, &mp).unwrap().values(), &[0, 0, 1]);
        assert_eq!(split_indices(&mp, &m).unwrap().values(), &[0, 2]);
        assert!(verify_cardinality_lemma(&m, &mp));
        let a = set_a(&m, &mp).unwrap();
        let sp = split_indices(&m, &mp).unwrap();
        assert_eq!(a.row_count(1), sp.get(1) + sp.get(2));
        assert_eq!(a.row_count(2), sp.get(2));
    }

    #[test]
    fn empty_value_list_splits_to_zeros() {
        assert_eq!(split_by_cuts(&[], &[3, 1, -1]).unwrap(), vec![0, 0, 0, 0]);
        let empty = set(3, 0, &[]);
        assert!(cardinality_holds(&empty, &SplitIndices(vec![0; 4])));
    }

    #[test]
    fn split_positions() {
        assert_eq!(split_by_cuts(&[5, 2, -4], &[3, 1]).unwrap(), vec![1, 1, 1]);
        assert_eq!(split_by_cuts(&[1], &[3, 1]), Err((0, 1)));
    }

    #[test]
    fn tableau_check() {
        assert!(set(2, 2, &[(1, 1), (1, 2), (2, 1)]).is_tableau());
        assert!(!set(2, 2, &[(1, 1), (2, 2)]).is_tableau());
        assert!(set(2, 2, &[]).is_tableau());
    }
}
