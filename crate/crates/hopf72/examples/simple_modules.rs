//! Simple modules and the Wedderburn count in each regime.
//!
//! `cargo run --example simple_modules`

use hopf72::presentation::{StructureTable, Variant};
use hopf72::repcore::simples::classify_simples;
use hopf72::ParamVector;

fn main() -> Result<(), hopf72::Error> {
    for p in ["1,2,-3", "2,-1,-1", "0,0,0"] {
        let a = ParamVector::parse(p, 3)?;
        let t = StructureTable::build(&a, Variant::A, 6)?;
        let s = classify_simples(&t)?.summary(&t);
        println!("a = ({p})  regime {:?}  dim J = {}", s.regime, s.radical_dimension);
        for e in &s.simples {
            println!("  {:<8} dim {}  weights {}", e.name, e.dimension, e.weights.join(" "));
        }
        println!("  wedderburn {}  tops covered {}", s.wedderburn_ok, s.tops_covered);
    }
    Ok(())
}
