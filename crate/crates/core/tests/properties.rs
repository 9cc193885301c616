use std::collections::BTreeMap;

use periodkit::automorphic::{
    crosscheck_conjectures, dict_to_motive, pair_is_critical, split_indices_auto, InfinityTypeData,
};
use periodkit::cli::{MotiveFile, RepFile};
use periodkit::combinatorics::{split_indices, verify_cardinality_lemma};
use periodkit::deligne::{conjecture_rhs_motivic, deligne_period_raw, deligne_period_simplified, PairContext};
use periodkit::hodge::{check_pair_hyp1, has_no_pp_class, restriction_tensor};
use periodkit::lfactor::{critical_interval, critical_interval_via_poles, pair_critical_points};
use periodkit::oracle::{leibniz_det, sym_det, LaurentPoly, SymMatrix, VarLayout};
use periodkit::period::{expand, PeriodMonomial, PeriodSymbol};
use periodkit::{HalfInt, HodgeMultiset, RegularMotiveData, Tag};
use proptest::prelude::*;

fn arb_motive(label: &'static str, max_rank: usize) -> impl Strategy<Value = RegularMotiveData> {
    (-6i64..=6, prop::collection::btree_set(-8i64..=8, 1..=max_rank)).prop_map(move |(w, set)| {
        RegularMotiveData::new(label, w, set.into_iter().rev().collect()).unwrap()
    })
}

fn arb_pair(max_rank: usize) -> impl Strategy<Value = (RegularMotiveData, RegularMotiveData)> {
    (arb_motive("M", max_rank), arb_motive("M'", max_rank))
        .prop_filter("(p,p) class", |(m, mp)| check_pair_hyp1(m, mp).is_ok())
}

fn arb_multiset() -> impl Strategy<Value = HodgeMultiset> {
    (-8i64..=8, prop::collection::btree_map(0i64..8, 1u32..=3, 1..=4)).prop_map(|(w, offsets)| {
        let base = w.div_euclid(2) + 1;
        let mut counts = BTreeMap::new();
        for (o, h) in offsets {
            counts.insert(base + o, h);
            counts.insert(w - base - o, h);
        }
        HodgeMultiset::from_counts(w, counts).unwrap()
    })
}

fn arb_rep(label: &'static str, max_rank: usize) -> impl Strategy<Value = InfinityTypeData> {
    (1..=max_rank)
        .prop_flat_map(|n| (Just(n), -3i64..=3, prop::collection::btree_set(-6i64..=5, n)))
        .prop_map(move |(n, w, set)| {
            let parity = ((n - 1) % 2) as i64;
            let a = set.into_iter().rev().map(|x| HalfInt::from_twice(2 * x + parity)).collect();
            InfinityTypeData::new(label, w, a).unwrap()
        })
}

fn arb_symbol() -> impl Strategy<Value = PeriodSymbol> {
    let tag = prop_oneof![Just(Tag::new("M", 2)), Just(Tag::new("N", 3).conj()), Just(Tag::new("M", 2).dual())];
    (0usize..5, tag, 1usize..=3).prop_map(|(kind, tag, i)| match kind {
        0 => PeriodSymbol::TwoPiI,
        1 => PeriodSymbol::q(&tag, i),
        2 => PeriodSymbol::delta(&tag),
        3 => PeriodSymbol::q_sup(&tag, i),
        _ => PeriodSymbol::p_auto(&tag, i),
    })
}

fn arb_monomial() -> impl Strategy<Value = PeriodMonomial> {
    prop::collection::vec((arb_symbol(), -4i64..=4), 0..6).prop_map(PeriodMonomial::from_factors)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn monomials_form_an_abelian_group(x in arb_monomial(), y in arb_monomial(), z in arb_monomial()) {
        prop_assert_eq!(x.times(&y), y.times(&x));
        prop_assert_eq!(x.times(&y).times(&z), x.times(&y.times(&z)));
        prop_assert!(x.times(&x.inv()).is_one());
        prop_assert_eq!(x.pow(2).times(&x.pow(3)), x.pow(5));
        prop_assert_eq!(&(&x * &y) / &y, x.clone());
    }

    #[test]
    fn canonical_text_is_order_independent(parts in prop::collection::vec((arb_symbol(), -3i64..=3), 0..6)) {
        let forward = PeriodMonomial::from_factors(parts.clone());
        let backward = PeriodMonomial::from_factors(parts.into_iter().rev());
        prop_assert_eq!(forward.to_string(), backward.to_string());
    }

    #[test]
    fn half_int_text_round_trip(twice in -1000i64..1000) {
        let x = HalfInt::from_twice(twice);
        prop_assert_eq!(x.to_string().parse::<HalfInt>().unwrap(), x);
        let j = serde_json::to_string(&x).unwrap();
        prop_assert_eq!(serde_json::from_str::<HalfInt>(&j).unwrap(), x);
    }

    #[test]
    fn critical_routes_agree(h in arb_multiset()) {
        let closed = critical_interval(&h).unwrap();
        prop_assert_eq!(closed, critical_interval_via_poles(&h).unwrap());
        prop_assert_eq!(closed.lo + closed.hi, h.weight() + 1);
        prop_assert!(!closed.is_empty());
    }

    #[test]
    fn split_index_lemmas((m, mp) in arb_pair(4)) {
        let ctx = PairContext::new(&m, &mp).unwrap();
        let (n, np) = (ctx.n(), ctx.np());
        prop_assert_eq!(ctx.sp.total(), np);
        prop_assert_eq!(ctx.sp_sym.total(), n);
        let conj = split_indices(&m.conjugate(), &mp.conjugate()).unwrap();
        for i in 0..=n {
            prop_assert_eq!(ctx.sp.get(i), conj.get(n - i));
        }
        prop_assert!(verify_cardinality_lemma(&m, &mp));
        prop_assert!(ctx.a.is_tableau());
        prop_assert!(ctx.t.is_tableau());
        for t in 1..=n {
            for u in 1..=np {
                prop_assert_eq!(ctx.t.contains(t, u), !ctx.a.contains(n + 1 - t, np + 1 - u));
            }
        }
    }

    #[test]
    fn simplified_period_expands_to_raw((m, mp) in arb_pair(4)) {
        let ctx = PairContext::new(&m, &mp).unwrap();
        prop_assert_eq!(expand(&deligne_period_simplified(&ctx)).unwrap(), expand(&deligne_period_raw(&ctx)).unwrap());
    }

    #[test]
    fn conjecture_differs_from_period_by_two_pi_i((m, mp) in arb_pair(3), pick in 0usize..64) {
        let ctx = PairContext::new(&m, &mp).unwrap();
        let points = ctx.legal_m().points();
        let x = points[pick % points.len()];
        let (n, np) = (ctx.n() as i64, ctx.np() as i64);
        match conjecture_rhs_motivic(&ctx, x) {
            Ok(rhs) => {
                let ratio = &rhs / &deligne_period_simplified(&ctx);
                let e = x.mul_int(n * np) + n * np * (n + np - 2) / 2;
                prop_assert_eq!(ratio, PeriodMonomial::two_pi_i(e.to_integer().unwrap()));
            }
            // n n' m can be a half-integer
            Err(e) => prop_assert!(x.mul_int(n * np).to_integer().is_none(), "{e}"),
        }
    }

    #[test]
    fn dictionary_commutes(pi in arb_rep("Pi", 3), pip in arb_rep("Pi'", 3)) {
        let m = dict_to_motive(&pi).unwrap();
        let mp = dict_to_motive(&pip).unwrap();
        prop_assert_eq!(m.weight(), pi.weight() + pi.n() as i64 - 1);
        let critical = has_no_pp_class(&restriction_tensor(&m, &mp));
        prop_assert_eq!(pair_is_critical(&pi, &pip), critical);
        if critical {
            prop_assert_eq!(split_indices_auto(&pi, &pip).unwrap(), split_indices(&m, &mp).unwrap());
            let legal = pair_critical_points(&pi, &pip).unwrap();
            prop_assert_eq!(legal, PairContext::new(&m, &mp).unwrap().legal_m());
            for x in legal.points() {
                match crosscheck_conjectures(&pi, &pip, x) {
                    Ok(ok) => prop_assert!(ok),
                    Err(e) => prop_assert!(matches!(e, periodkit::Error::NonIntegerExponent(_)), "{e}"),
                }
            }
        }
    }

    #[test]
    fn motive_file_round_trip(m in arb_motive("M", 5)) {
        let f = MotiveFile::from_motive(&m);
        let text = serde_json::to_string(&f).unwrap();
        let back: MotiveFile = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(&back, &f);
        prop_assert_eq!(back.to_motive().unwrap(), m);
    }

    #[test]
    fn rep_file_round_trip(pi in arb_rep("Pi", 5), csd: bool, ds: bool) {
        let pi = pi.conjugate_self_dual(csd).discrete_series_split_place(ds);
        let f = RepFile::from_rep(&pi);
        let text = serde_json::to_string_pretty(&f).unwrap();
        let back: RepFile = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(&back, &f);
        prop_assert_eq!(back.to_rep().unwrap(), pi);
    }

    #[test]
    fn determinant_routes_agree(
        size in 1usize..=4,
        cells in prop::collection::vec(prop::collection::vec((-3i128..=3, prop::collection::vec(-2i32..=2, 3)), 0..3), 16),
    ) {
        let entries: Vec<Vec<LaurentPoly>> = (0..size)
            .map(|i| {
                (0..size)
                    .map(|j| {
                        cells[i * 4 + j].iter().fold(LaurentPoly::zero(3), |p, (c, e)| {
                            p.add(&LaurentPoly::monomial(3, *c, e.clone()))
                        })
                    })
                    .collect()
            })
            .collect();
        let mx = SymMatrix { layout: VarLayout { n: 0, np: 0 }, rows: vec![], columns: vec![], entries: entries.clone() };
        prop_assert_eq!(sym_det(&mx), leibniz_det(&entries, 3));
    }
}
