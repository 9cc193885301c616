//! Index sets A and T, split indices, and the row-count identity.

use periodkit::combinatorics::{set_a, set_t, split_indices, verify_cardinality_lemma};
use periodkit::RegularMotiveData;

fn main() -> periodkit::Result<()> {
    let m = RegularMotiveData::new("M", 3, vec![4, 1, -2])?;
    let mp = RegularMotiveData::new("M'", 1, vec![3, 0, -1])?;

    let a = set_a(&m, &mp)?;
    let t = set_t(&m, &mp)?;
    println!("A = {:?}", a.members);
    println!("T = {:?}", t.members);
    println!("A is a tableau: {}", a.is_tableau());

    let sp = split_indices(&m, &mp)?;
    let sp_sym = split_indices(&mp, &m)?;
    println!("sp(·, M; M') = {:?}", sp.values());
    println!("sp(·, M'; M) = {:?}", sp_sym.values());
    for row in 1..=m.rank() {
        println!("  row {row}: #A = {}, tail sum = {}", a.row_count(row), sp.tail_sum(row));
    }
    println!("cardinality identity holds: {}", verify_cardinality_lemma(&m, &mp));

    let conj = split_indices(&m.conjugate(), &mp.conjugate())?;
    println!("sp(·, M^c; M'^c) = {:?} (reversed of sp)", conj.values());
    Ok(())
}
