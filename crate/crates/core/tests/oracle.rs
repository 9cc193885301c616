use periodkit::deligne::{deligne_period_raw, PairContext};
use periodkit::oracle::{build_mat1, sym_det, verify_proposition_with, Column, OracleConfig, VarLayout};
use periodkit::period::PeriodSymbol;
use periodkit::sample::{random_hyp1_pair, trial_rng};
use periodkit::{Error, RegularMotiveData};

fn ctx(w: i64, p: &[i64], wp: i64, r: &[i64]) -> PairContext {
    let m = RegularMotiveData::new("M", w, p.to_vec()).unwrap();
    let mp = RegularMotiveData::new("M'", wp, r.to_vec()).unwrap();
    PairContext::new(&m, &mp).unwrap()
}

#[test]
fn rank_one_matrix_and_report() {
    let c = ctx(0, &[1], 0, &[0]);
    let mx = build_mat1(&c);
    let vars = mx.layout.table();
    assert_eq!(mx.entries.len(), 1);
    assert_eq!(mx.entries[0][0].display(&vars).to_string(), "A[1,1]*B[1,1]*Q[1]^-1*Q'[1]^-1");
    let r = verify_proposition_with(&c, &OracleConfig::default()).unwrap();
    assert_eq!((r.ok, r.sign), (true, 1));
    assert_eq!(r.lhs.display(&vars).to_string(), "A[1,1]*B[1,1]");
    assert_eq!(r.lhs, r.rhs);
}

#[test]
fn worked_pair_is_two_by_two() {
    let c = ctx(1, &[1, 0], 0, &[1]);
    let mx = build_mat1(&c);
    assert_eq!(mx.columns, vec![Column::OutsideT(1, 1), Column::OutsideT(2, 1)]);
    let r = verify_proposition_with(&c, &OracleConfig::default()).unwrap();
    assert!(r.ok);
    let vars = VarLayout { n: 2, np: 1 }.table();
    assert_eq!(r.rhs.display(&vars).to_string(), "-A[1,2]*A[2,1]*B[1,1]^2 + A[1,1]*A[2,2]*B[1,1]^2");
}

#[test]
fn column_count_is_n_times_np() {
    for i in 0..60 {
        let mut rng = trial_rng(11, 0, i);
        let n = 1 + (i as usize % 3);
        let np = 1 + (i as usize / 3 % 3);
        let (m, mp) = random_hyp1_pair(&mut rng, n, np);
        let mx = build_mat1(&PairContext::new(&m, &mp).unwrap());
        assert_eq!(mx.columns.len(), n * np);
        assert!(mx.is_square());
    }
}

#[test]
fn q_factor_is_the_q_part_of_the_raw_period() {
    let c = ctx(3, &[4, 1, -2], 1, &[3, 0, -1]);
    let r = verify_proposition_with(&c, &OracleConfig::default()).unwrap();
    let raw = deligne_period_raw(&c).filter(|s| matches!(s, PeriodSymbol::Q { .. }));
    assert_eq!(r.q_factor, raw);
    assert!(r.ok && r.q_factor_matches_raw);
}

#[test]
fn determinant_is_schedule_independent() {
    let c = ctx(3, &[4, 1, -2], 1, &[3, 0, -1]);
    let mx = build_mat1(&c);
    let one = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap().install(|| sym_det(&mx));
    let four = rayon::ThreadPoolBuilder::new().num_threads(4).build().unwrap().install(|| sym_det(&mx));
    assert_eq!(one, four);
}

#[test]
fn size_bound_is_enforced() {
    let c = ctx(3, &[4, 1, -2], 1, &[3, 0, -1]);
    assert_eq!(
        verify_proposition_with(&c, &OracleConfig { max_size: 6 }).unwrap_err(),
        Error::SizeLimit { size: 9, bound: 6 }
    );
}

#[test]
fn larger_shapes_within_the_bound() {
    // 4 × 3 = 12, the default bound
    let mut rng = trial_rng(5, 0, 0);
    let (m, mp) = random_hyp1_pair(&mut rng, 4, 2);
    let r = verify_proposition_with(&PairContext::new(&m, &mp).unwrap(), &OracleConfig::default()).unwrap();
    assert!(r.ok && r.q_factor_matches_raw);
}
