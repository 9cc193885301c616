//! From infinity types to Hodge types, and the automorphic right-hand side.

use periodkit::automorphic::{conjecture_rhs_automorphic, crosscheck_conjectures, dict_to_motive, split_indices_auto};
use periodkit::lfactor::pair_critical_points;
use periodkit::period::automorphic_to_motivic;
use periodkit::{HalfInt, InfinityTypeData};

fn main() -> periodkit::Result<()> {
    let pi = InfinityTypeData::new("Pi", 0, vec![HalfInt::from_twice(1), HalfInt::from_twice(-1)])?;
    let pip = InfinityTypeData::new("Pi'", 0, vec![HalfInt::from_int(-1)])?;

    for x in [&pi, &pip] {
        let m = dict_to_motive(x)?;
        println!("{}: a = {:?} -> weight {}, p = {:?}", x.label(), x.a().iter().map(|v| v.to_string()).collect::<Vec<_>>(), m.weight(), m.hodge_p());
    }
    println!("sp(·, Π; Π') = {:?}", split_indices_auto(&pi, &pip)?.values());

    let legal = pair_critical_points(&pi, &pip)?;
    println!("critical m: {legal}");
    for x in legal.points() {
        let rhs = conjecture_rhs_automorphic(&pi, &pip, x)?;
        println!("  m = {x}: {rhs}");
        println!("         P -> Q: {}", automorphic_to_motivic(&rhs));
        println!("         matches motivic side: {}", crosscheck_conjectures(&pi, &pip, x)?);
    }
    Ok(())
}
