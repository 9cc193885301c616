//! Exact symbolic check of the Deligne period of `R(M ⊗ M')` against the
//! coefficient matrix of the comparison map.
//!
//! With generic coefficient matrices `A = (A_{ia})`, `B = (B_{jb})` and the
//! relations `A^c_{it} = Q_{n+1-t}^{-1} A_{i,n+1-t}`, `B^c_{ju} = Q'_{n'+1-u}^{-1} B_{j,n'+1-u}`,
//! the oracle checks
//!
//! `det(Mat1) · ∏_{(t,u) ∉ T} Q_{n+1-t} Q'_{n'+1-u} = ± det(A)^{n'} det(B)^{n}`
//!
//! exactly in the Laurent ring. The right-hand side is computed separately by
//! permutation sums over `A` and `B`.

mod det;
mod laurent;
mod matrix;

use serde::Serialize;

use crate::deligne::{deligne_period_raw, PairContext};
use crate::error::{Error, Result};
use crate::period::{PeriodMonomial, PeriodSymbol};

pub use det::{leibniz_det, sym_det};
pub use laurent::{LaurentPoly, VarTable};
pub use matrix::{build_mat1, Column, SymMatrix, VarLayout};

pub const DEFAULT_MAX_SIZE: usize = 12;
pub const MAX_SIZE_ENV: &str = "PK_MAX_ORACLE_SIZE";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleConfig {
    /// Largest accepted `n n'`.
    pub max_size: usize,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig { max_size: DEFAULT_MAX_SIZE }
    }
}

impl OracleConfig {
    /// Reads `PK_MAX_ORACLE_SIZE`; unset or unparsable values keep the default.
    pub fn from_env() -> Self {
        std::env::var(MAX_SIZE_ENV)
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .map_or_else(Self::default, |max_size| OracleConfig { max_size })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub ok: bool,
    /// `+1` or `-1` when `ok`, else `0`.
    pub sign: i8,
    pub size: usize,
    #[serde(skip)]
    pub lhs: LaurentPoly,
    #[serde(skip)]
    pub rhs: LaurentPoly,
    pub lhs_terms: usize,
    pub rhs_terms: usize,
    /// `∏_{(t,u) ∉ T} Q_{n+1-t}(M) Q_{n'+1-u}(M')`.
    pub q_factor: PeriodMonomial,
    /// The `Q` part of the raw Deligne period equals `q_factor`.
    pub q_factor_matches_raw: bool,
}

pub fn verify_proposition(ctx: &PairContext) -> Result<VerificationReport> {
    verify_proposition_with(ctx, &OracleConfig::from_env())
}

pub fn verify_proposition_with(ctx: &PairContext, config: &OracleConfig) -> Result<VerificationReport> {
    let (n, np) = (ctx.n(), ctx.np());
    let size = n * np;
    if size > config.max_size {
        return Err(Error::SizeLimit { size, bound: config.max_size });
    }
    let mx = build_mat1(ctx);
    let layout = mx.layout;
    let nvars = layout.nvars();

    let mut q_poly = LaurentPoly::one(nvars);
    let mut q_factor = PeriodMonomial::one();
    for (t, u) in ctx.t.complement() {
        let (tt, uu) = (n + 1 - t, np + 1 - u);
        q_poly = q_poly.mul(&layout.var(layout.q(tt), 1)).mul(&layout.var(layout.qp(uu), 1));
        q_factor.multiply_symbol(PeriodSymbol::q(ctx.m().tag(), tt), 1);
        q_factor.multiply_symbol(PeriodSymbol::q(ctx.mp().tag(), uu), 1);
    }
    let lhs = sym_det(&mx).mul(&q_poly);

    let a: Vec<Vec<LaurentPoly>> =
        (1..=n).map(|i| (1..=n).map(|c| layout.var(layout.a(i, c), 1)).collect()).collect();
    let b: Vec<Vec<LaurentPoly>> =
        (1..=np).map(|j| (1..=np).map(|c| layout.var(layout.b(j, c), 1)).collect()).collect();
    let rhs = leibniz_det(&a, nvars).pow(np as u32).mul(&leibniz_det(&b, nvars).pow(n as u32));

    let sign = if lhs == rhs {
        1
    } else if lhs == rhs.neg() {
        -1
    } else {
        0
    };
    let raw_q = deligne_period_raw(ctx).filter(|s| matches!(s, PeriodSymbol::Q { .. }));
    Ok(VerificationReport {
        ok: sign != 0,
        sign,
        size,
        lhs_terms: lhs.num_terms(),
        rhs_terms: rhs.num_terms(),
        lhs,
        rhs,
        q_factor_matches_raw: raw_q == q_factor,
        q_factor,
    })
}
