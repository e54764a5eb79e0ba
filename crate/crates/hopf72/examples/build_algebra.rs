//! Builds the structure table for a parameter and checks it.
//!
//! `cargo run --example build_algebra -- 1,2,-3`

use hopf72::presentation::{StructureTable, Variant};
use hopf72::ParamVector;

fn main() -> Result<(), hopf72::Error> {
    let arg = std::env::args().nth(1).unwrap_or_else(|| "1,2,-3".into());
    let a = ParamVector::parse(&arg, 3)?;
    let t = StructureTable::build(&a, Variant::A, 6)?;
    println!("a = {a}, dim = {}", t.dim());
    for r in t.system.render_rules() {
        println!("  {r}");
    }
    let start = std::time::Instant::now();
    let n = t.verify_associativity()?;
    println!("associative: {n} nonzero triples in {:.2?}", start.elapsed());
    println!("relators vanish: {}", t.verify_relators()?);
    Ok(())
}
