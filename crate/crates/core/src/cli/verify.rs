//! Seeded property suites behind `pk verify`.

use rayon::prelude::*;
use serde::Serialize;

use crate::automorphic::{crosscheck_conjectures, dict_to_motive, pair_is_critical, split_indices_auto};
use crate::combinatorics::{cardinality_holds, split_indices};
use crate::deligne::{deligne_period_raw, deligne_period_simplified, PairContext};
use crate::hodge::{has_no_pp_class, restriction_tensor};
use crate::lfactor::{critical_interval, critical_interval_via_poles, pair_critical_points};
use crate::oracle::{verify_proposition_with, OracleConfig};
use crate::period::{
    apply_rule, derive_comparison_prop, derive_delta_conjugate_identity, expand, PeriodMonomial, PeriodSymbol, RuleId,
};
use crate::sample::{
    random_hyp1_pair, random_hyp1_pair_up_to, random_swap_closed_multiset, trial_rng,
};
use crate::tag::Tag;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    All,
    Combinatorics,
    Critical,
    Formulas,
    Dictionary,
    Oracle,
    Rewrite,
}

impl Suite {
    const PARTS: [Suite; 6] =
        [Suite::Combinatorics, Suite::Critical, Suite::Formulas, Suite::Dictionary, Suite::Oracle, Suite::Rewrite];

    fn name(self) -> &'static str {
        match self {
            Suite::All => "all",
            Suite::Combinatorics => "combinatorics",
            Suite::Critical => "critical",
            Suite::Formulas => "formulas",
            Suite::Dictionary => "dictionary",
            Suite::Oracle => "oracle",
            Suite::Rewrite => "rewrite",
        }
    }

    fn stream(self) -> u64 {
        Suite::PARTS.iter().position(|&s| s == self).map_or(0, |i| i as u64 + 1)
    }
}

#[derive(Clone, Copy, Debug)]
pub struct VerifyOptions {
    pub max_rank: usize,
    pub trials: usize,
    pub seed: u64,
    pub oracle: OracleConfig,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct PropertyResult {
    pub name: String,
    pub instances: usize,
    pub failures: usize,
    pub skipped: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_failure: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteResult {
    pub suite: String,
    pub properties: Vec<PropertyResult>,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifySummary {
    pub ok: bool,
    pub seed: u64,
    pub max_rank: usize,
    pub trials: usize,
    pub suites: Vec<SuiteResult>,
}

/// Outcome of one property on one instance.
enum Check {
    Pass,
    Fail(String),
    Skip,
}

fn check(cond: bool, detail: impl FnOnce() -> String) -> Check {
    if cond {
        Check::Pass
    } else {
        Check::Fail(detail())
    }
}

/// Folds per-trial outcomes into per-property counts, in trial order.
fn tally(names: &[&str], outcomes: Vec<Vec<Check>>) -> Vec<PropertyResult> {
    let mut out: Vec<PropertyResult> =
        names.iter().map(|n| PropertyResult { name: n.to_string(), ..Default::default() }).collect();
    for trial in outcomes {
        for (slot, c) in out.iter_mut().zip(trial) {
            match c {
                Check::Pass => slot.instances += 1,
                Check::Skip => slot.skipped += 1,
                Check::Fail(why) => {
                    slot.instances += 1;
                    slot.failures += 1;
                    slot.first_failure.get_or_insert(why);
                }
            }
        }
    }
    out
}

fn par_trials(count: usize, f: impl Fn(u64) -> Vec<Check> + Sync + Send) -> Vec<Vec<Check>> {
    (0..count as u64).into_par_iter().map(f).collect()
}

fn combinatorics(opts: &VerifyOptions) -> Vec<PropertyResult> {
    let names = ["split_total", "split_conjugation_symmetry", "cardinality_lemma", "a_is_tableau", "a_t_duality"];
    let stream = Suite::Combinatorics.stream();
    let outcomes = par_trials(opts.trials, |i| {
        let (m, mp) = random_hyp1_pair_up_to(&mut trial_rng(opts.seed, stream, i), opts.max_rank);
        let ctx = PairContext::new(&m, &mp).expect("sampled pair has no (p,p) class");
        let (n, np) = (ctx.n(), ctx.np());
        let desc = || format!("M = {m:?}, M' = {mp:?}");
        let conj = split_indices(&m.conjugate(), &mp.conjugate()).expect("conjugates keep the hypothesis");
        vec![
            check(ctx.sp.total() == np && ctx.sp_sym.total() == n, desc),
            check((0..=n).all(|i| ctx.sp.get(i) == conj.get(n - i)), desc),
            check(cardinality_holds(&ctx.a, &ctx.sp), desc),
            check(ctx.a.is_tableau(), desc),
            check(
                crate::combinatorics::all_pairs(n, np)
                    .all(|(t, u)| ctx.t.contains(t, u) != ctx.a.contains(n + 1 - t, np + 1 - u)),
                desc,
            ),
        ]
    });
    tally(&names, outcomes)
}

fn critical(opts: &VerifyOptions) -> Vec<PropertyResult> {
    let names = ["closed_form_equals_pole_scan", "lo_plus_hi_is_weight_plus_one"];
    let stream = Suite::Critical.stream();
    let outcomes = par_trials(opts.trials, |i| {
        let h = random_swap_closed_multiset(&mut trial_rng(opts.seed, stream, i));
        let closed = critical_interval(&h).expect("sampled multiset has no (p,p) class");
        let scan = critical_interval_via_poles(&h).expect("sampled multiset has no (p,p) class");
        vec![
            check(closed == scan, || format!("{h:?}: {closed} vs {scan}")),
            check(closed.lo + closed.hi == h.weight() + 1, || format!("{h:?}: {closed}")),
        ]
    });
    tally(&names, outcomes)
}

fn formulas(opts: &VerifyOptions) -> Vec<PropertyResult> {
    let names = ["simplified_expands_to_raw", "legal_m_matches_critical_interval"];
    let stream = Suite::Formulas.stream();
    let outcomes = par_trials(opts.trials, |i| {
        let (m, mp) = random_hyp1_pair_up_to(&mut trial_rng(opts.seed, stream, i), opts.max_rank);
        let ctx = PairContext::new(&m, &mp).expect("sampled pair has no (p,p) class");
        let raw = expand(&deligne_period_raw(&ctx)).expect("motive tags carry ranks");
        let simplified = expand(&deligne_period_simplified(&ctx)).expect("motive tags carry ranks");
        let legal = ctx.legal_m();
        let iv = ctx.critical_interval();
        vec![
            check(raw == simplified, || format!("{raw} vs {simplified}")),
            check(legal.points().len() == iv.points().len() && !iv.is_empty(), || format!("{iv} vs {legal}")),
        ]
    });
    tally(&names, outcomes)
}

fn dictionary(opts: &VerifyOptions) -> Vec<PropertyResult> {
    let names = [
        "criticality_matches_hodge_side",
        "split_auto_matches_motive",
        "critical_points_match_motive",
        "automorphic_rhs_substitutes",
    ];
    let stream = Suite::Dictionary.stream();
    let outcomes = par_trials(opts.trials, |i| {
        let mut rng = trial_rng(opts.seed, stream, i);
        let n = rand::Rng::gen_range(&mut rng, 1..=opts.max_rank);
        let np = rand::Rng::gen_range(&mut rng, 1..=opts.max_rank);
        let pi = crate::sample::random_infinity_type(&mut rng, "Pi", n);
        let pip = crate::sample::random_infinity_type(&mut rng, "Pi'", np);
        let (m, mp) = (dict_to_motive(&pi).expect("algebraic"), dict_to_motive(&pip).expect("algebraic"));
        let desc = || format!("Π = {pi:?}, Π' = {pip:?}");
        let hodge_ok = has_no_pp_class(&restriction_tensor(&m, &mp));
        let first = check(pair_is_critical(&pi, &pip) == hodge_ok, desc);
        if !hodge_ok {
            return vec![first, Check::Skip, Check::Skip, Check::Skip];
        }
        let ctx = PairContext::new(&m, &mp).expect("checked above");
        let legal = pair_critical_points(&pi, &pip).expect("checked above");
        let split_ok = split_indices_auto(&pi, &pip).is_ok_and(|s| s == ctx.sp)
            && split_indices_auto(&pip, &pi).is_ok_and(|s| s == ctx.sp_sym);
        let rhs_ok = legal.points().into_iter().all(|x| crosscheck_conjectures(&pi, &pip, x).unwrap_or(false));
        vec![
            first,
            check(split_ok, desc),
            check(legal == ctx.legal_m(), || format!("{legal} vs {}", ctx.legal_m())),
            check(rhs_ok, desc),
        ]
    });
    tally(&names, outcomes)
}

fn oracle(opts: &VerifyOptions) -> Vec<PropertyResult> {
    let names = ["proposition_holds", "q_factor_matches_raw"];
    let stream = Suite::Oracle.stream();
    let shapes: Vec<(usize, usize)> =
        (1..=opts.max_rank).flat_map(|n| (1..=opts.max_rank).map(move |np| (n, np))).collect();
    let outcomes = par_trials(shapes.len() * opts.trials, |i| {
        let (n, np) = shapes[i as usize / opts.trials];
        let (m, mp) = random_hyp1_pair(&mut trial_rng(opts.seed, stream, i), n, np);
        let ctx = PairContext::new(&m, &mp).expect("sampled pair has no (p,p) class");
        match verify_proposition_with(&ctx, &opts.oracle) {
            Ok(r) => vec![
                check(r.ok, || format!("M = {m:?}, M' = {mp:?}")),
                check(r.q_factor_matches_raw, || format!("{} vs raw", r.q_factor)),
            ],
            Err(_) => vec![Check::Skip, Check::Skip],
        }
    });
    tally(&names, outcomes)
}

const REWRITE_MAX_RANK: usize = 8;

fn property(name: &str, checks: impl IntoIterator<Item = Check>) -> PropertyResult {
    let mut out = tally(&[name], checks.into_iter().map(|c| vec![c]).collect());
    out.remove(0)
}

fn rewrite() -> Vec<PropertyResult> {
    let z1 = PeriodMonomial::symbol(PeriodSymbol::delta(&Tag::unit().twist(1)));
    let unit = apply_rule(&z1, RuleId::R3).map(|x| x.to_string());
    let ranks = 1..=REWRITE_MAX_RANK;
    vec![
        property("unit_twist_is_two_pi_i", [check(unit.as_deref() == Ok("(2πi)^1"), || format!("{unit:?}"))]),
        property(
            "twist_exponent_is_k_rank",
            ranks.clone().flat_map(|r| (-3i64..=3).map(move |k| (r, k))).map(|(r, k)| {
                let d = PeriodMonomial::symbol(PeriodSymbol::delta(&Tag::new("M", r).twist(k)));
                let got = apply_rule(&d, RuleId::R3).map(|x| x.two_pi_i_exponent());
                check(got == Ok(k * r as i64), || format!("rank {r}, k = {k}: {got:?}"))
            }),
        ),
        property(
            "delta_conjugate_identity",
            ranks.clone().map(|r| {
                check(derive_delta_conjugate_identity(r).is_ok_and(|d| d.ok), || format!("n = {r}"))
            }),
        ),
        property(
            "comparison_prop",
            ranks.flat_map(|r| (0..=r).map(move |s| (r, s))).map(|(r, s)| {
                check(derive_comparison_prop(r, s).is_ok_and(|d| d.ok), || format!("n = {r}, s = {s}"))
            }),
        ),
    ]
}

pub fn run_verify(suite: Suite, opts: &VerifyOptions) -> VerifySummary {
    let parts: Vec<Suite> = if suite == Suite::All { Suite::PARTS.to_vec() } else { vec![suite] };
    let suites: Vec<SuiteResult> = parts
        .into_iter()
        .map(|s| SuiteResult {
            suite: s.name().to_string(),
            properties: match s {
                Suite::Combinatorics => combinatorics(opts),
                Suite::Critical => critical(opts),
                Suite::Formulas => formulas(opts),
                Suite::Dictionary => dictionary(opts),
                Suite::Oracle => oracle(opts),
                Suite::Rewrite => rewrite(),
                Suite::All => unreachable!(),
            },
        })
        .collect();
    let ok = suites.iter().flat_map(|s| &s.properties).all(|p| p.failures == 0);
    VerifySummary { ok, seed: opts.seed, max_rank: opts.max_rank, trials: opts.trials, suites }
}
