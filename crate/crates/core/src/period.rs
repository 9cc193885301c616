//! Formal periods.
//!
//! A [`PeriodMonomial`] is an element of the free abelian group on
//! [`PeriodSymbol`]s. It stands for a class of `(E ⊗ C)^×` modulo `E^×`:
//! signs and rational scalars are dropped, and the field annotation (`E`,
//! `EE'`, `E;K`, ...) is carried along without affecting equality.
//!
//! The relations between periods are the fixed rules [`RuleId::R1`] to
//! [`RuleId::R8`]; [`derive_delta_conjugate_identity`] and [`derive_comparison_prop`] chain
//! them mechanically.
//!
//! Canonical text: factors in `(kind, tag, index)` order joined by `" * "`,
//! e.g. `(2πi)^-1 * Qs[2;M] * Qs[1;M']^2`. The `(2πi)` factor always
//! carries its exponent; every other factor omits `^1`. The identity is `1`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Div, Mul};

use serde::ser::{SerializeMap, SerializeStruct};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::tag::{Decoration, Tag};

/// Variant order is the canonical printing order of kinds.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PeriodSymbol {
    TwoPiI,
    /// Motivic period `Q_i(M)`.
    Q { tag: Tag, i: usize },
    /// Determinant period `δ(M)`.
    Delta { tag: Tag },
    /// `Δ(M) = (2πi)^{n(n-1)/2} δ(M)`.
    BigDelta { tag: Tag },
    /// `Q_{(j)}(M) = Q_1(M) ... Q_j(M)`.
    QParen { tag: Tag, j: usize },
    /// `Q^{(j)}(M) = Q_{(j)}(M) Δ(M)`.
    QSup { tag: Tag, j: usize },
    /// Automorphic period `P^{(j)}(Π)`.
    P { tag: Tag, j: usize },
    /// `Q_1(M(ξ))` for the Hecke character `ξ` attached to `M`.
    QXi { tag: Tag },
}

impl PeriodSymbol {
    pub fn q(tag: &Tag, i: usize) -> Self {
        PeriodSymbol::Q { tag: tag.clone(), i }
    }
    pub fn delta(tag: &Tag) -> Self {
        PeriodSymbol::Delta { tag: tag.clone() }
    }
    pub fn big_delta(tag: &Tag) -> Self {
        PeriodSymbol::BigDelta { tag: tag.clone() }
    }
    pub fn q_paren(tag: &Tag, j: usize) -> Self {
        PeriodSymbol::QParen { tag: tag.clone(), j }
    }
    pub fn q_sup(tag: &Tag, j: usize) -> Self {
        PeriodSymbol::QSup { tag: tag.clone(), j }
    }
    pub fn p_auto(tag: &Tag, j: usize) -> Self {
        PeriodSymbol::P { tag: tag.clone(), j }
    }
    pub fn q_xi(tag: &Tag) -> Self {
        PeriodSymbol::QXi { tag: tag.clone() }
    }

    pub fn tag(&self) -> Option<&Tag> {
        use PeriodSymbol::*;
        match self {
            TwoPiI => None,
            Q { tag, .. } | Delta { tag } | BigDelta { tag } | QParen { tag, .. } | QSup { tag, .. } | P { tag, .. } | QXi { tag } => {
                Some(tag)
            }
        }
    }

    /// Symbols expressed in terms of `Q_i`, `δ` and `2πi` only.
    pub fn is_base(&self) -> bool {
        matches!(self, PeriodSymbol::TwoPiI | PeriodSymbol::Q { .. } | PeriodSymbol::Delta { .. })
    }
}

impl fmt::Display for PeriodSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use PeriodSymbol::*;
        match self {
            TwoPiI => f.write_str("(2πi)"),
            Q { tag, i } => write!(f, "Q[{i};{tag}]"),
            Delta { tag } => write!(f, "d[{tag}]"),
            BigDelta { tag } => write!(f, "D[{tag}]"),
            QParen { tag, j } => write!(f, "Qp[{j};{tag}]"),
            QSup { tag, j } => write!(f, "Qs[{j};{tag}]"),
            P { tag, j } => write!(f, "P[{j};{tag}]"),
            QXi { tag } => write!(f, "Qxi[{tag}]"),
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct PeriodMonomial {
    factors: BTreeMap<PeriodSymbol, i64>,
    field_label: String,
}

impl PartialEq for PeriodMonomial {
    fn eq(&self, other: &Self) -> bool {
        self.factors == other.factors
    }
}

impl Eq for PeriodMonomial {}

impl PeriodMonomial {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn symbol(s: PeriodSymbol) -> Self {
        Self::power(s, 1)
    }

    pub fn power(s: PeriodSymbol, e: i64) -> Self {
        let mut m = Self::one();
        m.multiply_symbol(s, e);
        m
    }

    pub fn two_pi_i(e: i64) -> Self {
        Self::power(PeriodSymbol::TwoPiI, e)
    }

    pub fn from_factors(factors: impl IntoIterator<Item = (PeriodSymbol, i64)>) -> Self {
        let mut m = Self::one();
        for (s, e) in factors {
            m.multiply_symbol(s, e);
        }
        m
    }

    pub fn with_field(mut self, label: &str) -> Self {
        self.field_label = label.to_string();
        self
    }

    pub fn field_label(&self) -> &str {
        &self.field_label
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn exponent(&self, s: &PeriodSymbol) -> i64 {
        self.factors.get(s).copied().unwrap_or(0)
    }

    pub fn two_pi_i_exponent(&self) -> i64 {
        self.exponent(&PeriodSymbol::TwoPiI)
    }

    pub fn factors(&self) -> impl Iterator<Item = (&PeriodSymbol, i64)> {
        self.factors.iter().map(|(s, &e)| (s, e))
    }

    pub fn multiply_symbol(&mut self, s: PeriodSymbol, e: i64) {
        if e == 0 {
            return;
        }
        let slot = self.factors.entry(s.clone()).or_insert(0);
        *slot += e;
        if *slot == 0 {
            self.factors.remove(&s);
        }
    }

    pub fn times(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (s, e) in other.factors() {
            out.multiply_symbol(s.clone(), e);
        }
        out.field_label = join_fields(&self.field_label, &other.field_label);
        out
    }

    pub fn pow(&self, k: i64) -> Self {
        if k == 0 {
            return Self::one().with_field(&self.field_label);
        }
        PeriodMonomial {
            factors: self.factors.iter().map(|(s, e)| (s.clone(), e * k)).collect(),
            field_label: self.field_label.clone(),
        }
    }

    pub fn inv(&self) -> Self {
        self.pow(-1)
    }

    /// Drop every factor whose symbol fails `keep`.
    pub fn filter(&self, keep: impl Fn(&PeriodSymbol) -> bool) -> Self {
        PeriodMonomial {
            factors: self.factors.iter().filter(|(s, _)| keep(s)).map(|(s, e)| (s.clone(), *e)).collect(),
            field_label: self.field_label.clone(),
        }
    }

    /// Canonical text form.
    pub fn canonical_text(&self) -> String {
        self.to_string()
    }
}

pub fn mono_mul(x: &PeriodMonomial, y: &PeriodMonomial) -> PeriodMonomial {
    x.times(y)
}

pub fn mono_pow(x: &PeriodMonomial, k: i64) -> PeriodMonomial {
    x.pow(k)
}

/// Equality of classes; field labels are ignored.
pub fn mono_eq(x: &PeriodMonomial, y: &PeriodMonomial) -> bool {
    x == y
}

impl Mul for &PeriodMonomial {
    type Output = PeriodMonomial;
    fn mul(self, rhs: &PeriodMonomial) -> PeriodMonomial {
        PeriodMonomial::times(self, rhs)
    }
}

impl Mul for PeriodMonomial {
    type Output = PeriodMonomial;
    fn mul(self, rhs: PeriodMonomial) -> PeriodMonomial {
        PeriodMonomial::times(&self, &rhs)
    }
}

impl Div for &PeriodMonomial {
    type Output = PeriodMonomial;
    fn div(self, rhs: &PeriodMonomial) -> PeriodMonomial {
        PeriodMonomial::times(self, &rhs.inv())
    }
}

impl Div for PeriodMonomial {
    type Output = PeriodMonomial;
    fn div(self, rhs: PeriodMonomial) -> PeriodMonomial {
        &self / &rhs
    }
}

impl fmt::Display for PeriodMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("1");
        }
        let mut first = true;
        for (s, e) in &self.factors {
            if !first {
                f.write_str(" * ")?;
            }
            first = false;
            if *e == 1 && *s != PeriodSymbol::TwoPiI {
                write!(f, "{s}")?;
            } else {
                write!(f, "{s}^{e}")?;
            }
        }
        Ok(())
    }
}

impl Serialize for PeriodMonomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        struct Factors<'a>(&'a BTreeMap<PeriodSymbol, i64>);
        impl Serialize for Factors<'_> {
            fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
                let mut map = serializer.serialize_map(Some(self.0.len()))?;
                for (s, e) in self.0 {
                    map.serialize_entry(&s.to_string(), e)?;
                }
                map.end()
            }
        }
        let mut st = serializer.serialize_struct("PeriodMonomial", 3)?;
        st.serialize_field("text", &self.to_string())?;
        st.serialize_field("factors", &Factors(&self.factors))?;
        st.serialize_field("field", &self.field_label)?;
        st.end()
    }
}

/// Joins `;`-separated field annotations, keeping first occurrences.
fn join_fields(a: &str, b: &str) -> String {
    let mut parts: Vec<&str> = Vec::new();
    for p in a.split(';').chain(b.split(';')) {
        if !p.is_empty() && !parts.contains(&p) {
            parts.push(p);
        }
    }
    parts.join(";")
}

fn rank_of(tag: &Tag) -> Result<usize> {
    tag.rank().ok_or_else(|| Error::UnknownRank(tag.to_string()))
}

fn triangular(n: usize) -> i64 {
    (n * n.saturating_sub(1) / 2) as i64
}

fn q_product(tag: &Tag, range: std::ops::RangeInclusive<usize>) -> PeriodMonomial {
    PeriodMonomial::from_factors(range.map(|i| (PeriodSymbol::q(tag, i), 1)))
}

/// Rewrites `Δ`, `Q_{(j)}` and `Q^{(j)}` into `Q_i`, `δ` and `2πi`.
/// Other symbols pass through unchanged.
pub fn expand(x: &PeriodMonomial) -> Result<PeriodMonomial> {
    let mut out = PeriodMonomial::one();
    for (s, e) in x.factors() {
        let image = match s {
            PeriodSymbol::BigDelta { tag } => big_delta_expansion(tag)?,
            PeriodSymbol::QParen { tag, j } => q_product(tag, 1..=*j),
            PeriodSymbol::QSup { tag, j } => q_product(tag, 1..=*j).times(&big_delta_expansion(tag)?),
            other => PeriodMonomial::symbol(other.clone()),
        };
        out = out.times(&image.pow(e));
    }
    out.field_label = x.field_label.clone();
    Ok(out)
}

fn big_delta_expansion(tag: &Tag) -> Result<PeriodMonomial> {
    let n = rank_of(tag)?;
    Ok(PeriodMonomial::two_pi_i(triangular(n)).times(&PeriodMonomial::symbol(PeriodSymbol::delta(tag))))
}

/// Rewrite rules between periods.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RuleId {
    /// `Q_i(M^c) ~ Q_{n+1-i}(M)^{-1}`.
    R1,
    /// `δ(M^c) ~ (∏_i Q_i(M)) δ(M)`.
    R2,
    /// `δ(M(k)) ~ (2πi)^{k·rank} δ(M)`; `δ(Z_K) ~ 1`.
    R3,
    /// `δ(M^v) ~ δ(M)^{-1}`.
    R4,
    /// Conjugate self-dual: `δ(M^c) = δ(M^v(1-n))`.
    R5,
    /// Conjugate self-dual: `Q_i(M^v) ~ Q_{n+1-i}(M)^{-1}`.
    R6,
    /// Conjugate self-dual: `Q_1(M(ξ)) ~ (2πi)^{-n(n-1)/2} δ(M)^{-1}`.
    R7,
    /// `Q_1(det M) ~ ∏_i Q_i(M)` and `δ(det M) ~ δ(M)`.
    R8,
}

impl RuleId {
    pub const ALL: [RuleId; 8] =
        [RuleId::R1, RuleId::R2, RuleId::R3, RuleId::R4, RuleId::R5, RuleId::R6, RuleId::R7, RuleId::R8];

    pub fn field_label(self) -> &'static str {
        match self {
            RuleId::R3 => "E;K",
            RuleId::R7 => "E(Π);K",
            _ => "E",
        }
    }

    /// Image of a single symbol, or `None` if the rule does not match it.
    fn rewrite(self, s: &PeriodSymbol) -> Option<Result<PeriodMonomial>> {
        use PeriodSymbol as S;
        let peeled = |tag: &Tag| tag.peel();
        match (self, s) {
            (RuleId::R1, S::Q { tag, i }) => match peeled(tag)? {
                (Decoration::Conj, inner) => Some(rank_of(&inner).map(|n| reversed_q_inverse(&inner, n, *i))),
                _ => None,
            },
            (RuleId::R2, S::Delta { tag }) => match peeled(tag)? {
                (Decoration::Conj, inner) => Some(rank_of(&inner).map(|n| {
                    q_product(&inner, 1..=n).times(&PeriodMonomial::symbol(S::delta(&inner)))
                })),
                _ => None,
            },
            (RuleId::R3, S::Delta { tag }) => match peeled(tag)? {
                (Decoration::Twist(k), inner) => Some(rank_of(&inner).map(|r| {
                    let rest = if inner.is_unit() {
                        PeriodMonomial::one()
                    } else {
                        PeriodMonomial::symbol(S::delta(&inner))
                    };
                    PeriodMonomial::two_pi_i(k * r as i64).times(&rest)
                })),
                _ => None,
            },
            (RuleId::R4, S::Delta { tag }) => match peeled(tag)? {
                (Decoration::Dual, inner) => Some(Ok(PeriodMonomial::power(S::delta(&inner), -1))),
                _ => None,
            },
            (RuleId::R5, S::Delta { tag }) => match peeled(tag)? {
                (Decoration::Conj, inner) if inner.is_csd() => Some(rank_of(&inner).map(|n| {
                    PeriodMonomial::symbol(S::delta(&inner.dual().twist(1 - n as i64)))
                })),
                _ => None,
            },
            (RuleId::R6, S::Q { tag, i }) => match peeled(tag)? {
                (Decoration::Dual, inner) if inner.is_csd() => {
                    Some(rank_of(&inner).map(|n| reversed_q_inverse(&inner, n, *i)))
                }
                _ => None,
            },
            (RuleId::R7, S::QXi { tag }) if tag.is_csd() => Some(rank_of(tag).map(|n| {
                PeriodMonomial::two_pi_i(-triangular(n)).times(&PeriodMonomial::power(S::delta(tag), -1))
            })),
            (RuleId::R8, S::Q { tag, i: 1 }) => match peeled(tag)? {
                (Decoration::Det, inner) => Some(rank_of(&inner).map(|n| q_product(&inner, 1..=n))),
                _ => None,
            },
            (RuleId::R8, S::Delta { tag }) => match peeled(tag)? {
                (Decoration::Det, inner) => Some(Ok(PeriodMonomial::symbol(S::delta(&inner)))),
                _ => None,
            },
            _ => None,
        }
    }
}

impl fmt::Display for RuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

fn reversed_q_inverse(inner: &Tag, n: usize, i: usize) -> PeriodMonomial {
    debug_assert!((1..=n).contains(&i));
    PeriodMonomial::power(PeriodSymbol::q(inner, n + 1 - i), -1)
}

/// Replaces every symbol matched by `rule` with its image.
pub fn apply_rule(x: &PeriodMonomial, rule: RuleId) -> Result<PeriodMonomial> {
    let mut out = PeriodMonomial::one();
    let mut hit = false;
    for (s, e) in x.factors() {
        match rule.rewrite(s) {
            Some(image) => {
                hit = true;
                out = out.times(&image?.pow(e));
            }
            None => out.multiply_symbol(s.clone(), e),
        }
    }
    if !hit {
        return Err(Error::RuleNotApplicable { rule: rule.to_string(), monomial: x.to_string() });
    }
    out.field_label = join_fields(&x.field_label, rule.field_label());
    Ok(out)
}

/// Uses the relation `from ~ to` to trade `from^e` for `to^e`:
/// returns `x · from^{-e} · to^{e}`.
pub fn substitute_relation(x: &PeriodMonomial, from: &PeriodMonomial, to: &PeriodMonomial, e: i64) -> PeriodMonomial {
    x.times(&from.pow(-e)).times(&to.pow(e))
}

/// `P^{(j)}(Π) ↦ Q^{(j)}(M(Π))`, keeping the tag.
pub fn automorphic_to_motivic(x: &PeriodMonomial) -> PeriodMonomial {
    let mut out = PeriodMonomial::one().with_field(x.field_label());
    for (s, e) in x.factors() {
        let image = match s {
            PeriodSymbol::P { tag, j } => PeriodSymbol::q_sup(tag, *j),
            other => other.clone(),
        };
        out.multiply_symbol(image, e);
    }
    out
}

#[derive(Clone, Debug, Serialize)]
pub struct DerivationStep {
    pub description: String,
    pub value: PeriodMonomial,
}

/// Outcome of a scripted derivation: the two sides it produced and whether
/// they match the statement being derived.
#[derive(Clone, Debug, Serialize)]
pub struct Derivation {
    pub lhs: PeriodMonomial,
    pub rhs: PeriodMonomial,
    pub ok: bool,
    pub steps: Vec<DerivationStep>,
}

fn step(steps: &mut Vec<DerivationStep>, description: impl Into<String>, value: &PeriodMonomial) {
    steps.push(DerivationStep { description: description.into(), value: value.clone() });
}

/// A conjugate self-dual tag of rank `n` for the scripted derivations.
pub fn csd_tag(n: usize) -> Tag {
    Tag::new("M", n).conjugate_self_dual(true)
}

/// `δ(M)^{-2} (2πi)^{n(1-n)} ~ ∏ Q_i(M)` for conjugate self-dual `M`.
///
/// `δ(M^c)` is rewritten twice: by R2, and by R5, R3, R4. Dividing both by
/// `δ(M)` must give the two sides of the identity.
pub fn derive_delta_conjugate_identity(n: usize) -> Result<Derivation> {
    assert!(n >= 1, "rank must be positive");
    let m = csd_tag(n);
    let mut steps = Vec::new();
    let start = PeriodMonomial::symbol(PeriodSymbol::delta(&m.conj()));
    step(&mut steps, "start", &start);

    let via_r2 = apply_rule(&start, RuleId::R2)?;
    step(&mut steps, "R2", &via_r2);

    let mut via_dual = apply_rule(&start, RuleId::R5)?;
    step(&mut steps, "R5", &via_dual);
    for rule in [RuleId::R3, RuleId::R4] {
        via_dual = apply_rule(&via_dual, rule)?;
        step(&mut steps, rule.to_string(), &via_dual);
    }

    let delta = PeriodMonomial::symbol(PeriodSymbol::delta(&m));
    let lhs = &via_dual / &delta;
    let rhs = &via_r2 / &delta;
    step(&mut steps, "lhs = (R5,R3,R4) / δ(M)", &lhs);
    step(&mut steps, "rhs = R2 / δ(M)", &rhs);

    let stated_lhs = PeriodMonomial::power(PeriodSymbol::delta(&m), -2)
        .times(&PeriodMonomial::two_pi_i(n as i64 * (1 - n as i64)));
    let stated_rhs = q_product(&m, 1..=n);
    let ok = mono_eq(&lhs, &stated_lhs) && mono_eq(&rhs, &stated_rhs);
    Ok(Derivation { lhs, rhs, ok, steps })
}

/// `Q^{(s)}(M) ~ Q_1(M^v) ... Q_{n-s}(M^v) · Q_1(M(ξ))` for conjugate
/// self-dual `M`, by R6, the identity of [`derive_delta_conjugate_identity`], and R7.
pub fn derive_comparison_prop(n: usize, s: usize) -> Result<Derivation> {
    assert!(n >= 1 && s <= n, "need 1 ≤ n and 0 ≤ s ≤ n");
    let m = csd_tag(n);
    let mut steps = Vec::new();

    let lhs = expand(&PeriodMonomial::symbol(PeriodSymbol::q_sup(&m, s)))?;
    step(&mut steps, "lhs = expand(Q^(s))", &lhs);

    let dual_product = q_product(&m.dual(), 1..=n - s);
    let mut rhs = dual_product.times(&PeriodMonomial::symbol(PeriodSymbol::q_xi(&m)));
    step(&mut steps, "start", &rhs);

    if n > s {
        rhs = apply_rule(&rhs, RuleId::R6)?;
        step(&mut steps, "R6", &rhs);
    }

    let lemma = derive_delta_conjugate_identity(n)?;
    if !lemma.ok {
        return Ok(Derivation { lhs, rhs, ok: false, steps });
    }
    // trade (∏ Q_i)^{-1} for the lemma's left side
    rhs = substitute_relation(&rhs, &lemma.rhs, &lemma.lhs, -1);
    step(&mut steps, "δ(M^c) identity", &rhs);

    rhs = apply_rule(&rhs, RuleId::R7)?;
    step(&mut steps, "R7", &rhs);

    let ok = mono_eq(&lhs, &rhs);
    Ok(Derivation { lhs, rhs, ok, steps })
}
