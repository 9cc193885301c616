//! Infinity types of regular algebraic cuspidal representations, their
//! motivic Hodge types, and the automorphic form of the conjecture.
//!
//! `Π` has infinity type `(z^{a_i} z̄^{b_i})` with `a_1 > ... > a_n`,
//! `a_i ∈ Z + (n-1)/2` and `a_i + b_i = -w`. In a pair `Π × Π'` the
//! exponents `a'_j` of `Π'` play the role of `b_j` in the criticality and
//! split-index conditions.

use serde::Serialize;

use crate::combinatorics::{split_by_cuts, SplitIndices};
use crate::deligne::{conjecture_rhs_motivic, PairContext};
use crate::error::{Error, Result};
use crate::halfint::HalfInt;
use crate::hodge::{validate_label, RegularMotiveData};
use crate::lfactor::pair_critical_points;
use crate::period::{automorphic_to_motivic, PeriodMonomial, PeriodSymbol};
use crate::tag::Tag;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct InfinityTypeData {
    label: String,
    w: i64,
    a: Vec<HalfInt>,
    conjugate_self_dual: bool,
    discrete_series_split_place: bool,
}

impl InfinityTypeData {
    /// `a` must be strictly decreasing with entries in `Z + (n-1)/2`.
    pub fn new(label: &str, w: i64, a: Vec<HalfInt>) -> Result<Self> {
        validate_label(label).map_err(|e| Error::InvalidInfinityType(e.to_string()))?;
        if a.is_empty() {
            return Err(Error::InvalidInfinityType("n must be positive".into()));
        }
        if let Some(pair) = a.windows(2).find(|p| p[0] <= p[1]) {
            let why = if pair[0] == pair[1] {
                format!("a_i = a_j = {} (not regular)", pair[0])
            } else {
                format!("exponents must be strictly decreasing, found {} before {}", pair[0], pair[1])
            };
            return Err(Error::InvalidInfinityType(why));
        }
        let parity = (a.len() as i64 - 1).rem_euclid(2);
        if let Some(x) = a.iter().find(|x| !x.in_coset(parity)) {
            return Err(Error::Algebraicity(format!("a = {x} is not in Z + {}/2", a.len() - 1)));
        }
        Ok(InfinityTypeData {
            label: label.to_string(),
            w,
            a,
            conjugate_self_dual: false,
            discrete_series_split_place: false,
        })
    }

    pub fn conjugate_self_dual(mut self, flag: bool) -> Self {
        self.conjugate_self_dual = flag;
        self
    }

    /// Hypothesis on a discrete series component at a split finite place.
    pub fn discrete_series_split_place(mut self, flag: bool) -> Self {
        self.discrete_series_split_place = flag;
        self
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn n(&self) -> usize {
        self.a.len()
    }

    pub fn weight(&self) -> i64 {
        self.w
    }

    pub fn a(&self) -> &[HalfInt] {
        &self.a
    }

    /// `b_i = -w - a_i`.
    pub fn b(&self) -> Vec<HalfInt> {
        self.a.iter().map(|&x| -x - self.w).collect()
    }

    pub fn is_conjugate_self_dual(&self) -> bool {
        self.conjugate_self_dual
    }

    pub fn has_discrete_series_split_place(&self) -> bool {
        self.discrete_series_split_place
    }

    pub fn tag(&self) -> Tag {
        Tag::new(self.label.as_str(), self.n()).conjugate_self_dual(self.conjugate_self_dual)
    }

    /// `a_i - a_{i+1} ≥ 3` for all `i`.
    pub fn is_very_regular(&self) -> bool {
        self.a.windows(2).all(|p| (p[0] - p[1]).twice() >= 6)
    }
}

/// The motive attached to `Π`: rank `n`, weight `w + n - 1`, Hodge numbers
/// `-a_i + (n-1)/2` sorted decreasingly. The tag keeps `Π`'s label.
pub fn dict_to_motive(pi: &InfinityTypeData) -> Result<RegularMotiveData> {
    let n = pi.n() as i64;
    let hodge_p = pi
        .a
        .iter()
        .rev()
        .map(|x| {
            let twice = -x.twice() + (n - 1);
            if twice % 2 == 0 {
                Ok(twice / 2)
            } else {
                Err(Error::Algebraicity(format!("-a + (n-1)/2 = {}/2 is not an integer", twice)))
            }
        })
        .collect::<Result<Vec<_>>>()?;
    RegularMotiveData::with_tag(pi.tag(), pi.w + n - 1, hodge_p)
}

/// No `a_i + a'_j` equals `-(w + w')/2`.
pub fn pair_is_critical(pi: &InfinityTypeData, pip: &InfinityTypeData) -> bool {
    let total = pi.w + pip.w;
    pi.a.iter().all(|x| pip.a.iter().all(|y| (*x + *y).twice() != -total))
}

/// `sp(j, Π; Π')`: `b_1 > ... > b_{n'}` cut by
/// `-a_n - (w+w')/2 > ... > -a_1 - (w+w')/2`.
pub fn split_indices_auto(pi: &InfinityTypeData, pip: &InfinityTypeData) -> Result<SplitIndices> {
    let total = pi.w + pip.w;
    let values: Vec<i64> = pip.a.iter().map(|b| b.twice()).collect();
    let cuts: Vec<i64> = pi.a.iter().rev().map(|a| -a.twice() - total).collect();
    split_by_cuts(&values, &cuts).map(SplitIndices).map_err(|(j, i)| {
        Error::NotCriticalPair(format!(
            "b_{} = -a_{} - (w+w')/2 for {} × {}",
            j + 1,
            pi.n() - i,
            pi.label,
            pip.label
        ))
    })
}

fn p_product(pi: &InfinityTypeData, sp: &SplitIndices) -> PeriodMonomial {
    let tag = pi.tag();
    PeriodMonomial::from_factors(sp.values().iter().enumerate().map(|(j, &e)| (PeriodSymbol::p_auto(&tag, j), e as i64)))
}

/// `(2πi)^{nn'm} ∏_j P^{(j)}(Π)^{sp(j,Π;Π')} ∏_k P^{(k)}(Π')^{sp(k,Π';Π)}`.
pub fn conjecture_rhs_automorphic(pi: &InfinityTypeData, pip: &InfinityTypeData, m: HalfInt) -> Result<PeriodMonomial> {
    let legal = pair_critical_points(pi, pip)?;
    let parity = ((pi.n() + pip.n()) % 2) as i64;
    if !(m.in_coset(parity) && legal.contains(m)) {
        return Err(Error::NotCritical { m: m.to_string(), legal: format!("{legal} (step 1)") });
    }
    let exponent = m.mul_int((pi.n() * pip.n()) as i64);
    let e = exponent
        .to_integer()
        .ok_or_else(|| Error::NonIntegerExponent(format!("n n' m = {exponent}")))?;
    let sp = split_indices_auto(pi, pip)?;
    let sp_sym = split_indices_auto(pip, pi)?;
    Ok(PeriodMonomial::two_pi_i(e)
        .times(&p_product(pi, &sp))
        .times(&p_product(pip, &sp_sym))
        .with_field("E(Π)E(Π');K"))
}

/// Substitutes `P^{(j)} ↦ Q^{(j)}` in the automorphic right-hand side and
/// compares with the motivic one for the attached motives.
pub fn crosscheck_conjectures(pi: &InfinityTypeData, pip: &InfinityTypeData, m: HalfInt) -> Result<bool> {
    let auto = conjecture_rhs_automorphic(pi, pip, m)?;
    let ctx = PairContext::new(&dict_to_motive(pi)?, &dict_to_motive(pip)?)?;
    let motivic = conjecture_rhs_motivic(&ctx, m)?;
    Ok(automorphic_to_motivic(&auto) == motivic)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum KnownCase {
    Case1,
    Case2,
    Case3,
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CaseReport {
    pub very_regular_pi: bool,
    pub very_regular_pip: bool,
    pub case: KnownCase,
    /// Ranks were exchanged so that the first factor has the larger rank.
    pub swapped: bool,
    pub failed_conditions: Vec<String>,
}

/// Which case of the known results, if any, covers `L(m, Π × Π')`.
pub fn classify_known_case(pi: &InfinityTypeData, pip: &InfinityTypeData, m: HalfInt) -> CaseReport {
    let swapped = pi.n() < pip.n();
    let (big, small) = if swapped { (pip, pi) } else { (pi, pip) };
    let (n, np) = (big.n(), small.n());

    let mut global = Vec::new();
    for x in [big, small] {
        for (i, p) in x.a.windows(2).enumerate() {
            let gap = p[0] - p[1];
            if gap.twice() < 6 {
                global.push(format!("{}: a_{} - a_{} = {} < 3", x.label, i + 1, i + 2, gap));
            }
        }
    }
    match pair_critical_points(big, small) {
        Err(_) => global.push(format!("{} × {} is not critical", big.label, small.label)),
        Ok(legal) => {
            let parity = ((n + np) % 2) as i64;
            if !(m.in_coset(parity) && legal.contains(m)) {
                global.push(format!("m = {m} is not critical (legal: {legal})"));
            }
        }
    }

    let unitary = |x: &InfinityTypeData, need_csd: bool, out: &mut Vec<String>| {
        if need_csd && !x.conjugate_self_dual {
            out.push(format!("{} is not conjugate self-dual", x.label));
        }
        if x.n().is_multiple_of(2) && !x.discrete_series_split_place {
            out.push(format!("{} has even rank without the discrete-series hypothesis", x.label));
        }
    };

    let mut case1 = Vec::new();
    if np != 1 {
        case1.push(format!("n' = {np} ≠ 1"));
    }
    unitary(big, true, &mut case1);

    let mut case2 = Vec::new();
    if n <= np {
        case2.push(format!("n = {n} is not > n' = {np}"));
    }
    if n % 2 == np % 2 {
        case2.push("n and n' have the same parity".to_string());
    }
    match split_indices_auto(big, small) {
        Ok(sp) => {
            if let Some(j) = sp.values().iter().position(|&v| v > 1) {
                case2.push(format!("sp({j}) = {} > 1: two -b_j share a gap", sp.get(j)));
            }
        }
        Err(e) => case2.push(e.to_string()),
    }
    unitary(big, true, &mut case2);
    unitary(small, true, &mut case2);

    let mut case3 = Vec::new();
    if m != HalfInt::from_int(1) {
        case3.push(format!("m = {m} ≠ 1"));
    }
    if n % 2 != np % 2 {
        case3.push("n and n' have different parity".to_string());
    }
    unitary(big, true, &mut case3);
    unitary(small, true, &mut case3);

    let case = if !global.is_empty() {
        KnownCase::Unknown
    } else if case1.is_empty() {
        KnownCase::Case1
    } else if case2.is_empty() {
        KnownCase::Case2
    } else if case3.is_empty() {
        KnownCase::Case3
    } else {
        KnownCase::Unknown
    };

    let mut failed_conditions = global;
    if case == KnownCase::Unknown {
        for (name, list) in [("case 1", case1), ("case 2", case2), ("case 3", case3)] {
            failed_conditions.extend(list.into_iter().map(|c| format!("{name}: {c}")));
        }
    }

    CaseReport {
        very_regular_pi: pi.is_very_regular(),
        very_regular_pip: pip.is_very_regular(),
        case,
        swapped,
        failed_conditions,
    }
}
