//! Acceptance run: one PASS/FAIL line per criterion, non-zero exit on any
//! failure.

use std::path::Path;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use periodkit::automorphic::{crosscheck_conjectures, dict_to_motive, split_indices_auto};
use periodkit::cli::{MotiveFile, RepFile};
use periodkit::combinatorics::{split_indices, verify_cardinality_lemma};
use periodkit::deligne::{deligne_period_raw, deligne_period_simplified, PairContext};
use periodkit::lfactor::{critical_interval, critical_interval_via_poles, pair_critical_points};
use periodkit::oracle::{verify_proposition_with, OracleConfig};
use periodkit::period::{
    apply_rule, derive_comparison_prop, derive_delta_conjugate_identity, expand, PeriodMonomial, PeriodSymbol, RuleId,
};
use periodkit::sample::{
    random_critical_rep_pair, random_hyp1_pair, random_hyp1_pair_up_to, random_infinity_type,
    random_swap_closed_multiset, trial_rng,
};
use periodkit::{HalfInt, InfinityTypeData, Tag};

const SEED: u64 = 20_240_601;

type Criterion = (&'static str, fn() -> Outcome);

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(failures: &[String], detail: String) -> Outcome {
    match failures.first() {
        None => Outcome { pass: true, detail },
        Some(first) => Outcome { pass: false, detail: format!("{} failures; first: {first}", failures.len()) },
    }
}

fn oracle_equivalence() -> Outcome {
    let start = Instant::now();
    let config = OracleConfig::default();
    let mut failures = Vec::new();
    let mut count = 0;
    let mut negative = 0;
    for n in 1..=3 {
        for np in 1..=3 {
            for t in 0..100 {
                let (m, mp) = random_hyp1_pair(&mut trial_rng(SEED, 1, (n * 10 + np) as u64 * 1000 + t), n, np);
                let ctx = PairContext::new(&m, &mp).expect("sampled pair has no (p,p) class");
                match verify_proposition_with(&ctx, &config) {
                    Ok(r) if r.ok && r.q_factor_matches_raw => negative += (r.sign < 0) as usize,
                    Ok(r) => failures.push(format!("{m:?} {mp:?}: ok = {}, q = {}", r.ok, r.q_factor_matches_raw)),
                    Err(e) => failures.push(e.to_string()),
                }
                count += 1;
            }
        }
    }
    let elapsed = start.elapsed();
    if elapsed >= Duration::from_secs(60) {
        failures.push(format!("took {elapsed:.1?}"));
    }
    outcome(&failures, format!("{count} pairs over 9 shapes, {negative} with sign -1, {elapsed:.2?}"))
}

fn simplification_identity() -> Outcome {
    let mut failures = Vec::new();
    for t in 0..500 {
        let (m, mp) = random_hyp1_pair_up_to(&mut trial_rng(SEED, 2, t), 4);
        let ctx = PairContext::new(&m, &mp).expect("sampled pair has no (p,p) class");
        let raw = expand(&deligne_period_raw(&ctx)).expect("ranked tags");
        let simplified = expand(&deligne_period_simplified(&ctx)).expect("ranked tags");
        if raw != simplified {
            failures.push(format!("{m:?} {mp:?}: {raw} vs {simplified}"));
        }
    }
    outcome(&failures, "500 pairs, n, n' ≤ 4".into())
}

fn combinatorial_lemmas() -> Outcome {
    let mut failures = Vec::new();
    for t in 0..1000 {
        let (m, mp) = random_hyp1_pair_up_to(&mut trial_rng(SEED, 3, t), 4);
        let ctx = PairContext::new(&m, &mp).expect("sampled pair has no (p,p) class");
        let (n, np) = (ctx.n(), ctx.np());
        let conj = split_indices(&m.conjugate(), &mp.conjugate()).expect("conjugate pair has no (p,p) class");
        let checks = [
            ("Σ sp = n'", ctx.sp.total() == np),
            ("conjugation symmetry", (0..=n).all(|i| ctx.sp.get(i) == conj.get(n - i))),
            ("cardinality", verify_cardinality_lemma(&m, &mp)),
            ("tableau", ctx.a.is_tableau()),
            (
                "A/T duality",
                (1..=n).all(|a| (1..=np).all(|b| ctx.t.contains(a, b) != ctx.a.contains(n + 1 - a, np + 1 - b))),
            ),
        ];
        for (name, ok) in checks {
            if !ok {
                failures.push(format!("{name}: {m:?} {mp:?}"));
            }
        }
    }
    outcome(&failures, "1000 pairs × 5 identities".into())
}

fn critical_cross_oracle() -> Outcome {
    let mut failures = Vec::new();
    for t in 0..500 {
        let h = random_swap_closed_multiset(&mut trial_rng(SEED, 4, t));
        let closed = critical_interval(&h).expect("no (p,p) class");
        let scan = critical_interval_via_poles(&h).expect("no (p,p) class");
        if closed != scan || closed.lo + closed.hi != h.weight() + 1 {
            failures.push(format!("{h:?}: {closed} vs {scan}"));
        }
    }
    outcome(&failures, "500 multisets".into())
}

fn closed_forms() -> Outcome {
    let mut failures = Vec::new();
    let z1 = PeriodMonomial::symbol(PeriodSymbol::delta(&Tag::unit().twist(1)));
    match apply_rule(&z1, RuleId::R3) {
        Ok(x) if x.to_string() == "(2πi)^1" => {}
        other => failures.push(format!("δ[Z(1)] gave {other:?}")),
    }
    for r in 1..=8usize {
        for k in -4i64..=4 {
            let d = PeriodMonomial::symbol(PeriodSymbol::delta(&Tag::new("M", r).twist(k)));
            let got = apply_rule(&d, RuleId::R3).map(|x| x.two_pi_i_exponent());
            if got != Ok(k * r as i64) {
                failures.push(format!("δ[M({k})] with rank {r}: {got:?}"));
            }
        }
    }
    let mut derivations = 0;
    for n in 1..=8 {
        if !derive_delta_conjugate_identity(n).is_ok_and(|d| d.ok) {
            failures.push(format!("δ(M^c) identity, n = {n}"));
        }
        derivations += 1;
        for s in 0..=n {
            if !derive_comparison_prop(n, s).is_ok_and(|d| d.ok) {
                failures.push(format!("comparison, n = {n}, s = {s}"));
            }
            derivations += 1;
        }
    }
    outcome(&failures, format!("δ[Z(1)] = (2πi)^1, 72 twist exponents, {derivations} derivations"))
}

fn dictionary_check() -> Outcome {
    let mut failures = Vec::new();
    let pi = InfinityTypeData::new("Pi", 0, vec![HalfInt::from_twice(1), HalfInt::from_twice(-1)]).unwrap();
    let m = dict_to_motive(&pi).unwrap();
    if (m.rank(), m.weight(), m.hodge_p()) != (2, 1, &[1, 0][..]) {
        failures.push(format!("dictionary example gave {m:?}"));
    }
    let mut points = 0;
    for t in 0..300 {
        let (pi, pip) = random_critical_rep_pair(&mut trial_rng(SEED, 6, t), 4);
        let (m, mp) = (dict_to_motive(&pi).unwrap(), dict_to_motive(&pip).unwrap());
        let split_ok = match (split_indices_auto(&pi, &pip), split_indices(&m, &mp)) {
            (Ok(a), Ok(b)) => a == b,
            _ => false,
        };
        if !split_ok {
            failures.push(format!("split indices: {pi:?} {pip:?}"));
            continue;
        }
        for x in pair_critical_points(&pi, &pip).expect("critical pair").points() {
            points += 1;
            if !crosscheck_conjectures(&pi, &pip, x).unwrap_or(false) {
                failures.push(format!("P→Q at m = {x}: {pi:?} {pip:?}"));
            }
        }
    }
    outcome(&failures, format!("300 critical pairs, {points} critical points"))
}

fn pk(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_pk")).args(args).output().expect("pk runs")
}

fn cli_contract() -> Outcome {
    let mut failures = Vec::new();
    for t in 0..200 {
        let mut rng = trial_rng(SEED, 7, t);
        let (m, _) = random_hyp1_pair_up_to(&mut rng, 5);
        let f = MotiveFile::from_motive(&m);
        let back: MotiveFile = serde_json::from_str(&serde_json::to_string(&f).unwrap()).unwrap();
        if back != f || back.to_motive().as_ref() != Ok(&m) {
            failures.push(format!("motive round trip: {f:?}"));
        }
        let pi = random_infinity_type(&mut rng, "Pi", 1 + t as usize % 5).conjugate_self_dual(t % 2 == 0);
        let r = RepFile::from_rep(&pi);
        let back: RepFile = serde_json::from_str(&serde_json::to_string(&r).unwrap()).unwrap();
        if back != r || back.to_rep().as_ref() != Ok(&pi) {
            failures.push(format!("rep round trip: {r:?}"));
        }
    }

    let start = Instant::now();
    let verify = pk(&["verify", "--suite", "all", "--seed", "42"]);
    let elapsed = start.elapsed();
    if verify.status.code() != Some(0) || elapsed >= Duration::from_secs(300) {
        failures.push(format!("verify --suite all: {:?} in {elapsed:.1?}", verify.status.code()));
    }

    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{\"label\": ").unwrap();
    let data = Path::new(env!("CARGO_MANIFEST_DIR")).join("examples/data");
    let pp = data.join("pp_class_pair.json");
    let worked = data.join("worked_pair.json");
    let cases = [
        (pk(&["critical", bad.to_str().unwrap()]), 2),
        (pk(&["split", pp.to_str().unwrap()]), 3),
        (pk(&["conjecture", "--m", "5/2", worked.to_str().unwrap()]), 4),
    ];
    for (out, want) in cases {
        if out.status.code() != Some(want) {
            failures.push(format!("expected exit {want}, got {:?}", out.status.code()));
        }
    }
    outcome(&failures, format!("400 round trips, verify all in {elapsed:.2?}, exit codes 2/3/4"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 7] = [
        ("oracle equivalence", oracle_equivalence),
        ("simplification identity", simplification_identity),
        ("combinatorial lemmas", combinatorial_lemmas),
        ("critical-point cross-oracle", critical_cross_oracle),
        ("closed forms", closed_forms),
        ("dictionary check", dictionary_check),
        ("CLI contract", cli_contract),
    ];
    let mut all = true;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let o = run();
        all &= o.pass;
        println!("criterion {} {name}: {} ({})", i + 1, if o.pass { "PASS" } else { "FAIL" }, o.detail);
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
