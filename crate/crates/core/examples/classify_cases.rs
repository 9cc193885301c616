//! Which of the known cases covers a given L(m, Π × Π').

use periodkit::automorphic::classify_known_case;
use periodkit::lfactor::pair_critical_points;
use periodkit::{HalfInt, InfinityTypeData};

fn rep(label: &str, twice: &[i64]) -> InfinityTypeData {
    let a = twice.iter().map(|&t| HalfInt::from_twice(t)).collect();
    InfinityTypeData::new(label, 0, a).expect("valid infinity type")
}

fn show(pi: &InfinityTypeData, pip: &InfinityTypeData, m: HalfInt) {
    let r = classify_known_case(pi, pip, m);
    println!("{} × {} at m = {m}: {:?}", pi.label(), pip.label(), r.case);
    for c in &r.failed_conditions {
        println!("    {c}");
    }
}

fn main() {
    let pi = rep("Pi", &[12, 0, -12]).conjugate_self_dual(true);
    let chi = rep("chi", &[2]);
    show(&pi, &chi, pair_critical_points(&pi, &chi).unwrap().lo);

    let pip = rep("Pi'", &[5, -5]).conjugate_self_dual(true).discrete_series_split_place(true);
    let pi3 = rep("Pi", &[6, 0, -6]).conjugate_self_dual(true);
    show(&pi3, &pip, pair_critical_points(&pi3, &pip).unwrap().lo);

    let a = rep("A", &[7, -7]).conjugate_self_dual(true).discrete_series_split_place(true);
    let b = rep("B", &[3, -3]).conjugate_self_dual(true).discrete_series_split_place(true);
    show(&a, &b, HalfInt::from_int(1));

    let tight = rep("C", &[1, -1]);
    show(&a, &tight, HalfInt::from_int(1));
}
