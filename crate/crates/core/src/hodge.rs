//! Hodge data of regular pure motives over a quadratic imaginary field and
//! the functors acting on it.
//!
//! A regular motive of rank `n` and weight `ω` is described by its Hodge
//! numbers `p_1 > p_2 > ... > p_n`; the partner indices are `q_i = ω - p_i`.
//! Non-regular Hodge types (the restriction of a tensor product to `Q`)
//! are carried by [`HodgeMultiset`].

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::tag::Tag;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RegularMotiveData {
    tag: Tag,
    weight: i64,
    hodge_p: Vec<i64>,
}

impl RegularMotiveData {
    /// Builds a motive labelled `label`. `hodge_p` must be non-empty and
    /// strictly decreasing.
    pub fn new(label: &str, weight: i64, hodge_p: Vec<i64>) -> Result<Self> {
        validate_label(label)?;
        let tag = Tag::new(label, hodge_p.len());
        Self::with_tag(tag, weight, hodge_p)
    }

    pub fn with_tag(tag: Tag, weight: i64, hodge_p: Vec<i64>) -> Result<Self> {
        if hodge_p.is_empty() {
            return Err(Error::InvalidMotive("rank must be positive".into()));
        }
        if let Some(w) = hodge_p.windows(2).find(|w| w[0] <= w[1]) {
            let why = if w[0] == w[1] {
                format!("repeated Hodge index {} (motive is not regular)", w[0])
            } else {
                format!("Hodge indices must be strictly decreasing, found {} before {}", w[0], w[1])
            };
            return Err(Error::InvalidMotive(why));
        }
        if tag.rank().is_some_and(|r| r != hodge_p.len()) {
            return Err(Error::InvalidMotive(format!(
                "tag {tag} has rank {:?} but {} Hodge indices were given",
                tag.rank(),
                hodge_p.len()
            )));
        }
        Ok(RegularMotiveData { tag, weight, hodge_p })
    }

    /// The unit motive `Z_K`: rank one, weight zero, Hodge type `(0,0)`.
    pub fn unit() -> Self {
        RegularMotiveData { tag: Tag::unit(), weight: 0, hodge_p: vec![0] }
    }

    /// The Tate motive `Z(k)_K`.
    pub fn tate(k: i64) -> Self {
        Self::unit().tate_twist(k)
    }

    pub fn conjugate_self_dual(mut self, flag: bool) -> Self {
        self.tag = self.tag.conjugate_self_dual(flag);
        self
    }

    pub fn label(&self) -> &str {
        self.tag.base()
    }

    pub fn tag(&self) -> &Tag {
        &self.tag
    }

    pub fn rank(&self) -> usize {
        self.hodge_p.len()
    }

    pub fn weight(&self) -> i64 {
        self.weight
    }

    pub fn hodge_p(&self) -> &[i64] {
        &self.hodge_p
    }

    pub fn hodge_q(&self) -> Vec<i64> {
        self.hodge_p.iter().map(|p| self.weight - p).collect()
    }

    /// Same rank, weight and Hodge numbers; tags are ignored.
    pub fn same_hodge_type(&self, other: &Self) -> bool {
        self.weight == other.weight && self.hodge_p == other.hodge_p
    }

    /// `M^c`: `p^c_i = ω - p_{n+1-i}`.
    pub fn conjugate(&self) -> Self {
        let hodge_p = self.hodge_p.iter().rev().map(|p| self.weight - p).collect();
        RegularMotiveData { tag: self.tag.conj_canonical(), weight: self.weight, hodge_p }
    }

    /// `M^v`: weight `-ω`, `p_i = -p_{n+1-i}`.
    pub fn dual(&self) -> Self {
        let hodge_p = self.hodge_p.iter().rev().map(|p| -p).collect();
        RegularMotiveData { tag: self.tag.dual_canonical(), weight: -self.weight, hodge_p }
    }

    /// `M(k)`: weight `ω - 2k`, every `p_i` shifted by `-k`.
    pub fn tate_twist(&self, k: i64) -> Self {
        RegularMotiveData {
            tag: self.tag.twist_canonical(k),
            weight: self.weight - 2 * k,
            hodge_p: self.hodge_p.iter().map(|p| p - k).collect(),
        }
    }

    /// `det(M)`: rank one, weight `n·ω`, Hodge number `Σ p_i`.
    pub fn determinant_motive(&self) -> Self {
        if self.rank() == 1 {
            return self.clone();
        }
        RegularMotiveData {
            tag: self.tag.det(),
            weight: self.rank() as i64 * self.weight,
            hodge_p: vec![self.hodge_p.iter().sum()],
        }
    }
}

pub(crate) fn validate_label(label: &str) -> Result<()> {
    let bad = label.is_empty()
        || label.chars().any(|c| c.is_whitespace() || matches!(c, ';' | '[' | ']' | '^' | '*' | '(' | ')'));
    if bad {
        return Err(Error::InvalidMotive(format!("label {label:?} is empty or contains reserved characters")));
    }
    Ok(())
}

/// Hodge type `T(M#)` with multiplicities `h_{p,q}`, pure of some weight.
///
/// Stored as `p -> h_{p, ω-p}`. Construction checks that the type is
/// closed under `(p,q) -> (q,p)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct HodgeMultiset {
    weight: i64,
    counts: BTreeMap<i64, u32>,
}

impl HodgeMultiset {
    /// From explicit `(p, q, multiplicity)` entries; repeated entries add up.
    pub fn from_pairs(weight: i64, pairs: impl IntoIterator<Item = (i64, i64, u32)>) -> Result<Self> {
        let mut counts = BTreeMap::new();
        for (p, q, h) in pairs {
            if p + q != weight {
                return Err(Error::InvalidHodgeMultiset(format!("({p},{q}) is not of weight {weight}")));
            }
            if h == 0 {
                return Err(Error::InvalidHodgeMultiset(format!("({p},{q}) has multiplicity zero")));
            }
            *counts.entry(p).or_insert(0) += h;
        }
        Self::from_counts(weight, counts)
    }

    pub fn from_counts(weight: i64, counts: BTreeMap<i64, u32>) -> Result<Self> {
        if counts.is_empty() {
            return Err(Error::InvalidHodgeMultiset("empty Hodge type".into()));
        }
        for (&p, &h) in &counts {
            if h == 0 {
                return Err(Error::InvalidHodgeMultiset(format!("p = {p} has multiplicity zero")));
            }
            let swapped = counts.get(&(weight - p)).copied().unwrap_or(0);
            if swapped != h {
                return Err(Error::InvalidHodgeMultiset(format!(
                    "not swap-closed: h({p},{}) = {h} but h({},{p}) = {swapped}",
                    weight - p,
                    weight - p
                )));
            }
        }
        Ok(HodgeMultiset { weight, counts })
    }

    pub fn weight(&self) -> i64 {
        self.weight
    }

    /// `(p, q, h_{p,q})` in increasing `p`.
    pub fn pairs(&self) -> impl Iterator<Item = (i64, i64, u32)> + '_ {
        self.counts.iter().map(|(&p, &h)| (p, self.weight - p, h))
    }

    pub fn multiplicity(&self, p: i64, q: i64) -> u32 {
        if p + q != self.weight {
            return 0;
        }
        self.counts.get(&p).copied().unwrap_or(0)
    }

    pub fn total_multiplicity(&self) -> u64 {
        self.counts.values().map(|&h| h as u64).sum()
    }

    /// Hodge type of the dual: pairs `(-p,-q)`, weight `-ω`.
    pub fn dual(&self) -> Self {
        HodgeMultiset {
            weight: -self.weight,
            counts: self.counts.iter().map(|(&p, &h)| (-p, h)).collect(),
        }
    }

    /// No `(p,p)` class.
    pub fn has_no_pp_class(&self) -> bool {
        self.weight % 2 != 0 || !self.counts.contains_key(&(self.weight / 2))
    }

    pub(crate) fn require_no_pp_class(&self) -> Result<()> {
        if self.has_no_pp_class() {
            Ok(())
        } else {
            let p = self.weight / 2;
            Err(Error::PpClass(format!("Hodge type contains ({p},{p}) with multiplicity {}", self.counts[&p])))
        }
    }
}

/// Hodge type of `R(M)`, the restriction of `M` from `K` to `Q`.
pub fn restriction(m: &RegularMotiveData) -> HodgeMultiset {
    let mut counts = BTreeMap::new();
    for p in m.hodge_p.iter().chain(m.conjugate().hodge_p.iter()) {
        *counts.entry(*p).or_insert(0) += 1;
    }
    HodgeMultiset { weight: m.weight, counts }
}

/// Hodge type of `R(M ⊗ M')`, whose Betti realization is
/// `M_B ⊗ M'_B ⊕ M^c_B ⊗ M'^c_B`.
pub fn restriction_tensor(m: &RegularMotiveData, mp: &RegularMotiveData) -> HodgeMultiset {
    let weight = m.weight + mp.weight;
    let (mc, mpc) = (m.conjugate(), mp.conjugate());
    let mut counts = BTreeMap::new();
    for (x, y) in [(m, mp), (&mc, &mpc)] {
        for p in &x.hodge_p {
            for r in &y.hodge_p {
                *counts.entry(p + r).or_insert(0u32) += 1;
            }
        }
    }
    HodgeMultiset { weight, counts }
}

pub fn has_no_pp_class(h: &HodgeMultiset) -> bool {
    h.has_no_pp_class()
}

/// Hypothesis 1 for `R(M ⊗ M')`: `p_a + r_b ≠ ω/2` for all `a, b`.
/// The error names the first offending `(a, b)` (1-based).
pub fn check_pair_hyp1(m: &RegularMotiveData, mp: &RegularMotiveData) -> Result<()> {
    let omega = m.weight + mp.weight;
    for (a, p) in m.hodge_p.iter().enumerate() {
        for (b, r) in mp.hodge_p.iter().enumerate() {
            if 2 * (p + r) == omega {
                return Err(Error::PpClass(format!(
                    "p_{} + r_{} = {} = ω/2 for the pair ({},{}) of {} ⊗ {}",
                    a + 1,
                    b + 1,
                    p + r,
                    a + 1,
                    b + 1,
                    m.tag,
                    mp.tag
                )));
            }
        }
    }
    Ok(())
}
