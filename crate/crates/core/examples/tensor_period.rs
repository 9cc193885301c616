//! Deligne period of R(M ⊗ M') in raw, simplified and expanded form.

use periodkit::deligne::{conjecture_rhs_motivic, deligne_period_raw, deligne_period_simplified, PairContext};
use periodkit::period::expand;
use periodkit::RegularMotiveData;

fn main() -> periodkit::Result<()> {
    let m = RegularMotiveData::new("M", 1, vec![1, 0])?;
    let mp = RegularMotiveData::new("M'", 0, vec![1])?;
    let ctx = PairContext::new(&m, &mp)?;

    let raw = deligne_period_raw(&ctx);
    let simplified = deligne_period_simplified(&ctx);
    println!("raw        {raw}");
    println!("simplified {simplified}");
    println!("expanded   {}", expand(&simplified)?);
    println!("expansions agree: {}", expand(&raw)? == expand(&simplified)?);

    for x in ctx.legal_m().points() {
        let rhs = conjecture_rhs_motivic(&ctx, x)?;
        println!("L({x}) ~ {rhs}   [{}]", rhs.field_label());
    }
    println!("{}", serde_json::to_string_pretty(&simplified).expect("monomials serialize"));
    Ok(())
}
