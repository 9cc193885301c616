//! Critical points of R(M) and R(M ⊗ M'), by closed form and by pole scan.

use periodkit::hodge::{restriction, restriction_tensor};
use periodkit::lfactor::{critical_interval, critical_interval_via_poles, gamma_factor};
use periodkit::{HodgeMultiset, RegularMotiveData};

fn report(name: &str, h: &HodgeMultiset) -> periodkit::Result<()> {
    let closed = critical_interval(h)?;
    let scan = critical_interval_via_poles(h)?;
    let shifts: Vec<_> = gamma_factor(h)?.shifts().collect();
    println!("{name}: weight {}, Γ_C shifts {shifts:?}", h.weight());
    println!("  closed form {closed}, pole scan {scan}, points {:?}", closed.points());
    Ok(())
}

fn main() -> periodkit::Result<()> {
    let e = RegularMotiveData::new("E", 1, vec![1])?;
    report("R(E)", &restriction(&e))?;

    let m = RegularMotiveData::new("M", 1, vec![1, 0])?;
    let mp = RegularMotiveData::new("M'", 0, vec![1])?;
    report("R(M ⊗ M')", &restriction_tensor(&m, &mp))?;

    let wide = HodgeMultiset::from_pairs(1, [(3, -2, 1), (-2, 3, 1)])?;
    report("{(3,-2), (-2,3)}", &wide)?;

    let z = RegularMotiveData::new("Z", 0, vec![0])?;
    match critical_interval(&restriction_tensor(&z, &z)) {
        Err(e) => println!("R(Z ⊗ Z): {e}"),
        Ok(iv) => println!("R(Z ⊗ Z): unexpectedly critical {iv}"),
    }
    Ok(())
}
