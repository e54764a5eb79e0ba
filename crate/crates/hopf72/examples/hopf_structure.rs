//! Coproduct, antipode, group-likes, skew-primitives and integrals.
//!
//! `cargo run --example hopf_structure -- 1,2,-3`

use hopf72::hopf::Coalgebra;
use hopf72::presentation::{StructureTable, Variant};
use hopf72::ParamVector;
use std::time::Instant;

fn main() -> Result<(), hopf72::Error> {
    let arg = std::env::args().nth(1).unwrap_or_else(|| "1,2,-3".into());
    let a = ParamVector::parse(&arg, 3)?;
    let t = StructureTable::build(&a, Variant::A, 6)?;
    let clock = Instant::now();
    let co = Coalgebra::build(&t)?;
    println!("coalgebra built in {:.2?}", clock.elapsed());
    let clock = Instant::now();
    co.verify_all()?;
    println!("Hopf axioms, S^2 = chi.chi, S^4 = id verified in {:.2?}", clock.elapsed());
    let g = co.grouplikes()?;
    println!("group-likes: {}", g.iter().map(|x| t.render(x)).collect::<Vec<_>>().join(" ; "));
    println!("dim P(1,chi) = {}", co.skew_primitives(&t.chi()).len());
    let sw = co.sweedler_report();
    println!("y^2 = {}; Sweedler: {}", sw.y_squared, sw.isomorphic_to_sweedler);
    for h in co.hopf_subalgebra_census() {
        println!("  {:<10} dim {:>2} hopf {}", h.name, h.dimension, h.hopf);
    }
    let clock = Instant::now();
    let ints = co.integrals()?;
    println!("integrals ({:.2?}): left {:?}", clock.elapsed(), ints.left);
    println!(
        "unimodular {} / dual unimodular {} / distinguished group-like {}",
        ints.unimodular, ints.dual_unimodular, ints.distinguished_grouplike
    );
    Ok(())
}
