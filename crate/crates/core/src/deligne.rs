//! The Deligne period `c^+(R(M ⊗ M'))` and the conjectured right-hand side
//! at a critical point, as period monomials.

use serde::Serialize;

use crate::combinatorics::{set_a, set_t, split_indices, IndexPairSet, SplitIndices};
use crate::error::{Error, Result};
use crate::halfint::HalfInt;
use crate::hodge::{restriction_tensor, RegularMotiveData};
use crate::lfactor::{critical_interval, CriticalInterval};
use crate::period::{PeriodMonomial, PeriodSymbol};

/// A motivic pair with its index sets and split indices.
#[derive(Clone, Debug, Serialize)]
pub struct PairContext {
    #[serde(skip)]
    m: RegularMotiveData,
    #[serde(skip)]
    mp: RegularMotiveData,
    pub a: IndexPairSet,
    pub t: IndexPairSet,
    /// `sp(j, M; M')`, `0 ≤ j ≤ n`.
    pub sp: SplitIndices,
    /// `sp(k, M'; M)`, `0 ≤ k ≤ n'`.
    pub sp_sym: SplitIndices,
}

impl PairContext {
    /// Fails with `PpClass` when `R(M ⊗ M')` has a `(p,p)` class.
    pub fn new(m: &RegularMotiveData, mp: &RegularMotiveData) -> Result<Self> {
        Ok(PairContext {
            a: set_a(m, mp)?,
            t: set_t(m, mp)?,
            sp: split_indices(m, mp)?,
            sp_sym: split_indices(mp, m)?,
            m: m.clone(),
            mp: mp.clone(),
        })
    }

    pub fn m(&self) -> &RegularMotiveData {
        &self.m
    }

    pub fn mp(&self) -> &RegularMotiveData {
        &self.mp
    }

    pub fn n(&self) -> usize {
        self.m.rank()
    }

    pub fn np(&self) -> usize {
        self.mp.rank()
    }

    /// Motivic critical points of `R(M ⊗ M')`.
    pub fn critical_interval(&self) -> CriticalInterval<i64> {
        critical_interval(&restriction_tensor(&self.m, &self.mp)).expect("context has no (p,p) class")
    }

    /// Legal `m` for the conjecture: the critical interval shifted down by
    /// `(n + n' - 2) / 2`.
    pub fn legal_m(&self) -> CriticalInterval<HalfInt> {
        self.critical_interval().shifted_down((self.n() + self.np()) as i64 - 2)
    }

    /// True when the cached sets and indices match a fresh computation.
    pub fn is_consistent(&self) -> bool {
        PairContext::new(&self.m, &self.mp).is_ok_and(|fresh| {
            fresh.a == self.a && fresh.t == self.t && fresh.sp == self.sp && fresh.sp_sym == self.sp_sym
        })
    }
}

fn q_sup_product(m: &RegularMotiveData, sp: &SplitIndices) -> PeriodMonomial {
    PeriodMonomial::from_factors(
        sp.values().iter().enumerate().map(|(j, &e)| (PeriodSymbol::q_sup(m.tag(), j), e as i64)),
    )
}

/// `∏_{(t,u) ∈ A} Q_t(M) Q_u(M') · δ(M)^{n'} δ(M')^{n}`.
pub fn deligne_period_raw(ctx: &PairContext) -> PeriodMonomial {
    let (m, mp) = (ctx.m.tag(), ctx.mp.tag());
    let mut out = PeriodMonomial::from_factors([
        (PeriodSymbol::delta(m), ctx.np() as i64),
        (PeriodSymbol::delta(mp), ctx.n() as i64),
    ]);
    for &(t, u) in &ctx.a.members {
        out.multiply_symbol(PeriodSymbol::q(m, t), 1);
        out.multiply_symbol(PeriodSymbol::q(mp, u), 1);
    }
    out.with_field("EE'")
}

/// `(2πi)^{-nn'(n+n'-2)/2} ∏_j Q^{(j)}(M)^{sp(j,M;M')} ∏_k Q^{(k)}(M')^{sp(k,M';M)}`.
pub fn deligne_period_simplified(ctx: &PairContext) -> PeriodMonomial {
    let (n, np) = (ctx.n() as i64, ctx.np() as i64);
    // n n' (n + n' - 2) is always even
    let e = -(n * np * (n + np - 2)) / 2;
    PeriodMonomial::two_pi_i(e)
        .times(&q_sup_product(&ctx.m, &ctx.sp))
        .times(&q_sup_product(&ctx.mp, &ctx.sp_sym))
        .with_field("EE'")
}

/// `(2πi)^{nn'm} ∏_j Q^{(j)}(M)^{sp(j,M;M')} ∏_k Q^{(k)}(M')^{sp(k,M';M)}`,
/// defined when `m + (n + n' - 2)/2` is critical for `R(M ⊗ M')`.
pub fn conjecture_rhs_motivic(ctx: &PairContext, m: HalfInt) -> Result<PeriodMonomial> {
    let legal = ctx.legal_m();
    let shift = (ctx.n() + ctx.np()) as i64 - 2;
    let shifted = m + HalfInt::from_twice(shift);
    let critical = shifted.to_integer().is_some_and(|s| ctx.critical_interval().contains(s));
    if !critical {
        return Err(Error::NotCritical { m: m.to_string(), legal: format!("{legal} (step 1)") });
    }
    let exponent = m.mul_int((ctx.n() * ctx.np()) as i64);
    let e = exponent
        .to_integer()
        .ok_or_else(|| Error::NonIntegerExponent(format!("n n' m = {exponent}")))?;
    Ok(PeriodMonomial::two_pi_i(e)
        .times(&q_sup_product(&ctx.m, &ctx.sp))
        .times(&q_sup_product(&ctx.mp, &ctx.sp_sym))
        .with_field("EE'"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::period::expand;

    fn worked() -> PairContext {
        let m = RegularMotiveData::new("M", 1, vec![1, 0]).unwrap();
        let mp = RegularMotiveData::new("M'", 0, vec![1]).unwrap();
        PairContext::new(&m, &mp).unwrap()
    }

    #[test]
    fn raw_examples() {
        assert_eq!(
            deligne_period_raw(&worked()).to_string(),
            "Q[1;M] * Q[2;M] * Q[1;M']^2 * d[M] * d[M']^2"
        );
        let m = RegularMotiveData::new("M", 0, vec![1]).unwrap();
        let mp = RegularMotiveData::new("M'", 0, vec![0]).unwrap();
        let ctx = PairContext::new(&m, &mp).unwrap();
        assert_eq!(deligne_period_raw(&ctx).to_string(), "Q[1;M] * Q[1;M'] * d[M] * d[M']");
    }

    #[test]
    fn empty_a_gives_pure_delta() {
        // 2(p_a + r_b) < ω everywhere
        let m = RegularMotiveData::new("M", 10, vec![1, 0]).unwrap();
        let mp = RegularMotiveData::new("M'", 4, vec![2, 1, 0]).unwrap();
        let ctx = PairContext::new(&m, &mp).unwrap();
        assert!(ctx.a.is_empty());
        assert_eq!(deligne_period_raw(&ctx).to_string(), "d[M]^3 * d[M']^2");
    }

    #[test]
    fn simplified_matches_raw() {
        let ctx = worked();
        let s = deligne_period_simplified(&ctx);
        assert_eq!(s.to_string(), "(2πi)^-1 * Qs[2;M] * Qs[1;M']^2");
        assert_eq!(expand(&s).unwrap(), expand(&deligne_period_raw(&ctx)).unwrap());
        assert_eq!(s.field_label(), "EE'");
    }

    #[test]
    fn conjecture_rhs_worked_pair() {
        let ctx = worked();
        let rhs = conjecture_rhs_motivic(&ctx, HalfInt::from_twice(1)).unwrap();
        assert_eq!(rhs.to_string(), "(2πi)^1 * Qs[2;M] * Qs[1;M']^2");
        let ratio = &rhs / &deligne_period_simplified(&ctx);
        // n n' m + n n'(n+n'-2)/2 = 1 + 1
        assert_eq!(ratio, PeriodMonomial::two_pi_i(2));
        for bad in [HalfInt::from_twice(3), HalfInt::from_int(0), HalfInt::from_twice(-1)] {
            let err = conjecture_rhs_motivic(&ctx, bad).unwrap_err();
            assert!(err.to_string().contains("[1/2, 1/2]"), "{err}");
        }
    }

    #[test]
    fn context_is_consistent() {
        assert!(worked().is_consistent());
        let z = RegularMotiveData::new("Z", 0, vec![0]).unwrap();
        assert!(PairContext::new(&z, &z).is_err());
    }
}
