//! Ext¹ matrices, separated quivers, representation-type verdicts and the extension catalog.

use hopf72::extquiver::{ext_matrix, extension_catalog, verdict, SeparatedQuiver};
use hopf72::presentation::{StructureTable, Variant};
use hopf72::repcore::simples::classify_simples;
use hopf72::ParamVector;

fn main() -> Result<(), hopf72::Error> {
    for a in [[1, 2, -3], [2, -1, -1], [0, 0, 0]] {
        let a = ParamVector::from_ints(3, &a)?;
        let table = StructureTable::build(&a, Variant::A, 6)?;
        let cls = classify_simples(&table)?;
        let ext = ext_matrix(&table, &cls)?;
        println!("a = {a}  regime {}", ext.regime);
        println!("  simples {:?}", ext.simples);
        for (s, row) in ext.simples.iter().zip(&ext.entries) {
            println!("  Ext¹({s}, -) = {row:?}");
        }
        let v = verdict(&ext);
        for c in &v.components {
            println!("  component {:?}: {}", c.vertices, c.class);
        }
        println!("  verdict: {}", v.verdict);
        let cat = extension_catalog(&table, &cls, 1)?;
        for e in cat.entries.iter().filter(|e| e.ext_dim > 0) {
            let gens: Vec<String> = e.realizations.iter().map(|r| format!("{} ⊂ {}", r.generators.join(" = "), r.verma)).collect();
            println!("  socle {} top {}: dim {} {}", e.socle, e.top, e.ext_dim, gens.join("; "));
            if let Some(f) = &e.family {
                println!("    {f}");
            }
        }
        println!("  catalog verified: {}", cat.all_verified());
        if ext.regime == hopf72::RegimeTag::Generic {
            print!("{}", SeparatedQuiver::new(&ext).to_dot("generic"));
        }
    }
    Ok(())
}
