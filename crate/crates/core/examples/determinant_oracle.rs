//! The coefficient-matrix check on a 3 × 3 pair.

use periodkit::deligne::PairContext;
use periodkit::oracle::{build_mat1, verify_proposition_with, OracleConfig};
use periodkit::RegularMotiveData;

fn main() -> periodkit::Result<()> {
    let m = RegularMotiveData::new("M", 1, vec![1, 0])?;
    let mp = RegularMotiveData::new("M'", 0, vec![1])?;
    let small = PairContext::new(&m, &mp)?;
    let mx = build_mat1(&small);
    let vars = mx.layout.table();
    println!("Mat1 columns {:?}", mx.columns);
    for row in &mx.entries {
        let cells: Vec<String> = row.iter().map(|e| e.display(&vars).to_string()).collect();
        println!("  [{}]", cells.join(", "));
    }
    let r = verify_proposition_with(&small, &OracleConfig::default())?;
    println!("lhs = {}", r.lhs.display(&vars));
    println!("rhs = {}", r.rhs.display(&vars));
    println!("ok = {}, sign = {}\n", r.ok, r.sign);

    let m = RegularMotiveData::new("M", 3, vec![4, 1, -2])?;
    let mp = RegularMotiveData::new("M'", 1, vec![3, 0, -1])?;
    let ctx = PairContext::new(&m, &mp)?;
    let r = verify_proposition_with(&ctx, &OracleConfig::from_env())?;
    println!("3 × 3 pair: A = {:?}", ctx.a.members);
    println!("  {} terms on each side, ok = {}, sign = {}", r.lhs_terms, r.ok, r.sign);
    println!("  Q factor {} matches the raw period: {}", r.q_factor, r.q_factor_matches_raw);
    Ok(())
}
