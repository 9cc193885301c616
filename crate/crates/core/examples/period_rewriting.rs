//! Rewriting period symbols with the relations R1 to R8.

use periodkit::period::{
    apply_rule, csd_tag, derive_comparison_prop, derive_delta_conjugate_identity, PeriodMonomial, PeriodSymbol,
    RuleId,
};
use periodkit::Tag;

fn main() -> periodkit::Result<()> {
    let z1 = PeriodMonomial::symbol(PeriodSymbol::delta(&Tag::unit().twist(1)));
    println!("{z1}  ->  {}", apply_rule(&z1, RuleId::R3)?);

    let twisted = PeriodMonomial::symbol(PeriodSymbol::delta(&Tag::new("M", 3).twist(2)));
    println!("{twisted}  ->  {}", apply_rule(&twisted, RuleId::R3)?);

    let q = PeriodMonomial::symbol(PeriodSymbol::q(&Tag::new("M", 3).conj(), 1));
    println!("{q}  ->  {}", apply_rule(&q, RuleId::R1)?);

    let d = derive_delta_conjugate_identity(3)?;
    println!("\nδ(M^c) two ways, n = 3:");
    for s in &d.steps {
        println!("  {:<24} {}", s.description, s.value);
    }
    println!("  ok: {}", d.ok);

    let c = derive_comparison_prop(3, 1)?;
    println!("\nQ^(1) for conjugate self-dual {}:", csd_tag(3));
    for s in &c.steps {
        println!("  {:<24} {}", s.description, s.value);
    }
    println!("  ok: {}", c.ok);
    Ok(())
}
