//! Archimedean Γ-factors and critical points.
//!
//! For `M#` without `(p,p)` class,
//! `L∞(s, M#) = ∏_{(p,q) ∈ T(M#), p < q} Γ_C(s - p)^{h_{p,q}}`.
//! An integer `m` is critical when neither `L∞(s, M#)` nor `L∞(1 - s, M#^v)`
//! has a pole at `s = m`. Two routes compute the critical set: the closed
//! form `p < m < q + 1`, and a direct scan over the poles of `Γ_C`.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::automorphic::{pair_is_critical, InfinityTypeData};
use crate::error::{Error, Result};
use crate::halfint::HalfInt;
use crate::hodge::HodgeMultiset;

/// `∏ Γ_C(s - p)^h`, stored as `p -> h`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct GammaFactor {
    shifts: BTreeMap<i64, u32>,
}

impl GammaFactor {
    pub fn shifts(&self) -> impl Iterator<Item = (i64, u32)> + '_ {
        self.shifts.iter().map(|(&p, &h)| (p, h))
    }

    /// `Γ_C(s - p)` has poles at `s - p ∈ {0, -1, -2, ...}`.
    pub fn has_pole_at(&self, s: i64) -> bool {
        self.shifts.keys().any(|&p| s - p <= 0)
    }
}

/// A closed interval of critical points (step 1).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CriticalInterval<T> {
    pub lo: T,
    pub hi: T,
}

impl<T: PartialOrd + Copy> CriticalInterval<T> {
    pub fn is_empty(&self) -> bool {
        self.lo > self.hi
    }

    pub fn contains(&self, x: T) -> bool {
        self.lo <= x && x <= self.hi
    }
}

impl CriticalInterval<i64> {
    pub fn points(&self) -> Vec<i64> {
        (self.lo..=self.hi).collect()
    }

    /// Shift every point by `-(twice_shift / 2)`.
    pub fn shifted_down(&self, twice_shift: i64) -> CriticalInterval<HalfInt> {
        let s = HalfInt::from_twice(twice_shift);
        CriticalInterval { lo: HalfInt::from_int(self.lo) - s, hi: HalfInt::from_int(self.hi) - s }
    }
}

impl CriticalInterval<HalfInt> {
    pub fn points(&self) -> Vec<HalfInt> {
        let mut out = Vec::new();
        let mut x = self.lo;
        while x <= self.hi {
            out.push(x);
            x = x + 1;
        }
        out
    }
}

impl<T: fmt::Display + PartialOrd + Copy> fmt::Display for CriticalInterval<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            f.write_str("∅")
        } else {
            write!(f, "[{}, {}]", self.lo, self.hi)
        }
    }
}

pub fn gamma_factor(h: &HodgeMultiset) -> Result<GammaFactor> {
    h.require_no_pp_class()?;
    let shifts = h.pairs().filter(|&(p, q, _)| p < q).map(|(p, _, mult)| (p, mult)).collect();
    Ok(GammaFactor { shifts })
}

/// Closed form: `m` is critical iff `p < m < q + 1` for every `(p,q)` with `p < q`.
pub fn critical_interval(h: &HodgeMultiset) -> Result<CriticalInterval<i64>> {
    h.require_no_pp_class()?;
    let below: Vec<(i64, i64)> = h.pairs().filter(|&(p, q, _)| p < q).map(|(p, q, _)| (p, q)).collect();
    let lo = 1 + below.iter().map(|&(p, _)| p).max().expect("swap-closed and (p,p)-free");
    let hi = below.iter().map(|&(_, q)| q).min().expect("swap-closed and (p,p)-free");
    Ok(CriticalInterval { lo, hi })
}

/// Every integer `m` in a window around the Hodge numbers at which neither
/// `L∞(s, M#)` nor `L∞(1 - s, M#^v)` has a pole.
pub fn critical_points_via_poles(h: &HodgeMultiset) -> Result<Vec<i64>> {
    let direct = gamma_factor(h)?;
    let dual = gamma_factor(&h.dual())?;
    let (lo, hi) = h
        .pairs()
        .fold((i64::MAX, i64::MIN), |(lo, hi), (p, q, _)| (lo.min(p).min(q), hi.max(p).max(q)));
    Ok((lo - 1..=hi + 1).filter(|&m| !direct.has_pole_at(m) && !dual.has_pole_at(1 - m)).collect())
}

pub fn critical_interval_via_poles(h: &HodgeMultiset) -> Result<CriticalInterval<i64>> {
    let pts = critical_points_via_poles(h)?;
    match (pts.first(), pts.last()) {
        (Some(&lo), Some(&hi)) => Ok(CriticalInterval { lo, hi }),
        _ => Ok(CriticalInterval { lo: 1, hi: 0 }),
    }
}

/// Critical points `m ∈ Z + (n+n')/2` of `Π × Π'`, straight from the
/// inequalities on `a_i + b_j`.
pub fn pair_critical_points(pi: &InfinityTypeData, pip: &InfinityTypeData) -> Result<CriticalInterval<HalfInt>> {
    if !pair_is_critical(pi, pip) {
        return Err(Error::NotCriticalPair(format!(
            "some a_i + b_j equals -(w + w')/2 for {} × {}",
            pi.label(),
            pip.label()
        )));
    }
    let total_w = pi.weight() + pip.weight();
    // doubled bounds, both exclusive
    let mut low = i64::MIN;
    let mut high = i64::MAX;
    for a in pi.a() {
        for b in pip.a() {
            let s2 = (*a + *b).twice();
            let (l, u) = if s2 > -total_w {
                (-s2, s2 + 2 * total_w + 2)
            } else {
                (s2 + 2 * total_w, -s2 + 2)
            };
            low = low.max(l);
            high = high.min(u);
        }
    }
    let parity = ((pi.n() + pip.n()) % 2) as i64;
    let first = if (low + 1 - parity).rem_euclid(2) == 0 { low + 1 } else { low + 2 };
    let last = if (high - 1 - parity).rem_euclid(2) == 0 { high - 1 } else { high - 2 };
    Ok(CriticalInterval { lo: HalfInt::from_twice(first), hi: HalfInt::from_twice(last) })
}
