use serde_json::{json, Value};

use crate::automorphic::{
    classify_known_case, conjecture_rhs_automorphic, dict_to_motive, split_indices_auto, InfinityTypeData,
};
use crate::combinatorics::{all_pairs, cardinality_holds};
use crate::deligne::{conjecture_rhs_motivic, deligne_period_raw, deligne_period_simplified, PairContext};
use crate::halfint::HalfInt;
use crate::hodge::{check_pair_hyp1, restriction, restriction_tensor, HodgeMultiset, RegularMotiveData};
use crate::lfactor::{critical_interval, critical_interval_via_poles, gamma_factor};
use crate::oracle::OracleConfig;
use crate::period::{automorphic_to_motivic, expand};

use super::files::{read_json_items, MotiveFile, ParseError, RepFile};
use super::verify::{run_verify, VerifyOptions};
use super::{Command, Failure, Form, Inputs};

type Out = Result<Value, Failure>;

fn load<T: for<'de> serde::Deserialize<'de>>(inputs: &Inputs) -> Result<Vec<T>, ParseError> {
    let mut items = Vec::new();
    for path in &inputs.files {
        items.extend(read_json_items::<T>(path)?);
    }
    if items.is_empty() || items.len() > 2 {
        return Err(ParseError(format!("expected one or two objects, found {}", items.len())));
    }
    Ok(items)
}

fn motives(inputs: &Inputs) -> Result<Vec<RegularMotiveData>, Failure> {
    load::<MotiveFile>(inputs)?
        .iter()
        .map(|f| f.to_motive().map_err(|e| Failure::Parse(e.to_string())))
        .collect()
}

fn motive_pair(inputs: &Inputs) -> Result<(RegularMotiveData, RegularMotiveData), Failure> {
    let mut ms = motives(inputs)?;
    if ms.len() != 2 {
        return Err(Failure::Parse("this command needs a pair of motives".into()));
    }
    let mp = ms.pop().expect("two items");
    Ok((ms.pop().expect("two items"), mp))
}

fn rep_pair(inputs: &Inputs) -> Result<(InfinityTypeData, InfinityTypeData), Failure> {
    let reps = load::<RepFile>(inputs)?
        .iter()
        .map(|f| f.to_rep().map_err(|e| Failure::Parse(e.to_string())))
        .collect::<Result<Vec<_>, _>>()?;
    match <[InfinityTypeData; 2]>::try_from(reps) {
        Ok([pi, pip]) => Ok((pi, pip)),
        Err(_) => Err(Failure::Parse("this command needs a pair of representations".into())),
    }
}

/// `R(M)` for one motive, `R(M ⊗ M')` for two.
fn hodge_of(inputs: &Inputs) -> Result<HodgeMultiset, Failure> {
    let ms = motives(inputs)?;
    Ok(match ms.as_slice() {
        [m] => restriction(m),
        [m, mp] => {
            check_pair_hyp1(m, mp)?;
            restriction_tensor(m, mp)
        }
        _ => unreachable!("load returns one or two items"),
    })
}

fn to_json<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("output types serialize")
}

pub(super) fn dispatch(cmd: &Command) -> Out {
    match cmd {
        Command::Critical(inputs) => critical(inputs),
        Command::Gamma(inputs) => gamma(inputs),
        Command::Sets(inputs) => sets(inputs),
        Command::Split(inputs) => split(inputs),
        Command::Period { inputs, form } => period(inputs, *form),
        Command::Conjecture { inputs, m, auto, classify } => {
            if *auto || *classify {
                conjecture_auto(inputs, *m, *classify)
            } else {
                conjecture(inputs, *m)
            }
        }
        Command::Classify { inputs, m } => {
            let (pi, pip) = rep_pair(inputs)?;
            Ok(to_json(&classify_known_case(&pi, &pip, *m)))
        }
        Command::Verify { suite, max_rank, trials, seed } => {
            if *max_rank == 0 {
                return Err(Failure::Parse("--max-rank must be positive".into()));
            }
            let opts = VerifyOptions { max_rank: *max_rank, trials: *trials, seed: *seed, oracle: OracleConfig::from_env() };
            let summary = run_verify(*suite, &opts);
            let v = to_json(&summary);
            if summary.ok {
                Ok(v)
            } else {
                Err(Failure::Property(v))
            }
        }
    }
}

fn critical(inputs: &Inputs) -> Out {
    let h = hodge_of(inputs)?;
    let closed = critical_interval(&h)?;
    let scan = critical_interval_via_poles(&h)?;
    let v = json!({
        "weight": h.weight(),
        "interval": closed,
        "via_poles": scan,
        "points": closed.points(),
        "agree": closed == scan,
    });
    if closed == scan {
        Ok(v)
    } else {
        Err(Failure::Property(v))
    }
}

fn gamma(inputs: &Inputs) -> Out {
    let h = hodge_of(inputs)?;
    let g = gamma_factor(&h)?;
    let shifts: Vec<Value> = g.shifts().map(|(p, m)| json!({"p": p, "multiplicity": m})).collect();
    let text = g
        .shifts()
        .map(|(p, m)| {
            let base = if p == 0 { "Γ_C(s)".to_string() } else if p > 0 { format!("Γ_C(s-{p})") } else { format!("Γ_C(s+{})", -p) };
            if m == 1 {
                base
            } else {
                format!("{base}^{m}")
            }
        })
        .collect::<Vec<_>>()
        .join(" * ");
    Ok(json!({"weight": h.weight(), "shifts": shifts, "text": text}))
}

fn sets(inputs: &Inputs) -> Out {
    let (m, mp) = motive_pair(inputs)?;
    let ctx = PairContext::new(&m, &mp)?;
    let (n, np) = (ctx.n(), ctx.np());
    let duality = all_pairs(n, np).all(|(t, u)| ctx.t.contains(t, u) != ctx.a.contains(n + 1 - t, np + 1 - u));
    Ok(json!({
        "A": ctx.a.members,
        "T": ctx.t.members,
        "A_is_tableau": ctx.a.is_tableau(),
        "duality": duality,
    }))
}

fn split(inputs: &Inputs) -> Out {
    let (m, mp) = motive_pair(inputs)?;
    let ctx = PairContext::new(&m, &mp)?;
    Ok(json!({
        "sp": ctx.sp,
        "sp_sym": ctx.sp_sym,
        "cardinality_lemma": cardinality_holds(&ctx.a, &ctx.sp),
    }))
}

fn period(inputs: &Inputs, form: Form) -> Out {
    let (m, mp) = motive_pair(inputs)?;
    let ctx = PairContext::new(&m, &mp)?;
    let mono = match form {
        Form::Raw => deligne_period_raw(&ctx),
        Form::Simplified => deligne_period_simplified(&ctx),
        Form::Expanded => expand(&deligne_period_simplified(&ctx))?,
    };
    Ok(to_json(&mono))
}

fn conjecture(inputs: &Inputs, m: HalfInt) -> Out {
    let (mm, mp) = motive_pair(inputs)?;
    let ctx = PairContext::new(&mm, &mp)?;
    let rhs = conjecture_rhs_motivic(&ctx, m)?;
    Ok(json!({"m": m, "legal_m": ctx.legal_m(), "rhs": to_json(&rhs)}))
}

fn conjecture_auto(inputs: &Inputs, m: HalfInt, classify: bool) -> Out {
    let (pi, pip) = rep_pair(inputs)?;
    let rhs = conjecture_rhs_automorphic(&pi, &pip, m)?;
    let ctx = PairContext::new(&dict_to_motive(&pi)?, &dict_to_motive(&pip)?)?;
    let motivic = conjecture_rhs_motivic(&ctx, m)?;
    let substituted = automorphic_to_motivic(&rhs);
    let agree = substituted == motivic;
    let mut v = json!({
        "m": m,
        "rhs": to_json(&rhs),
        "motivic_rhs": to_json(&motivic),
        "sp": split_indices_auto(&pi, &pip)?,
        "sp_sym": split_indices_auto(&pip, &pi)?,
        "crosscheck": if agree { "ok" } else { "failed" },
    });
    if classify {
        v["case_report"] = to_json(&classify_known_case(&pi, &pip, m));
    }
    if agree {
        Ok(v)
    } else {
        Err(Failure::Property(v))
    }
}
