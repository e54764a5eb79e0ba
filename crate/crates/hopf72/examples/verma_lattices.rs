//! Submodule lattice of a Verma module, with its DOT rendering.
//!
//! `cargo run --release --example verma_lattices -- 2,-1,-1 "(12)"`

use hopf72::presentation::{StructureTable, Variant};
use hopf72::repcore::lattice::SubmoduleLattice;
use hopf72::repcore::simples::classify_simples;
use hopf72::repcore::verma;
use hopf72::{ParamVector, Perm, SymGroup};

fn main() -> Result<(), hopf72::Error> {
    let mut args = std::env::args().skip(1);
    let a = ParamVector::parse(&args.next().unwrap_or_else(|| "2,-1,-1".into()), 3)?;
    let g = Perm::parse(&args.next().unwrap_or_else(|| "(12)".into()), 3)?;
    let grp = SymGroup::new(3);
    let t = StructureTable::build(&a, Variant::A, 6)?;
    let cls = classify_simples(&t)?;
    let m = verma(&t, grp.index_of(&g));
    let lat = SubmoduleLattice::compute(&m, &cls.simples, 7)?;
    println!("M_{} for a = {a}: {} nodes, {} edges", grp.name(grp.index_of(&g)), lat.node_count(), lat.edges.len());
    for e in &lat.edges {
        println!("  {} > {} : {}", e.upper, e.lower, e.label);
    }
    println!("families symbolic {}  sampled {}", lat.families_symbolic, lat.families_sampled);
    println!("{}", lat.to_dot());
    Ok(())
}
