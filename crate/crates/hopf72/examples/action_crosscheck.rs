//! Compares the printed action formulas on the Verma modules with the
//! action computed from the structure table.

use hopf72::presentation::crosscheck::regular_action_crosscheck;
use hopf72::presentation::{StructureTable, Variant};
use hopf72::ParamVector;

fn main() -> Result<(), hopf72::Error> {
    let params = [[1, 2, -3], [2, -1, -1], [0, 0, 0], [3, 5, -8]];
    let tables = params
        .iter()
        .map(|p| StructureTable::build(&ParamVector::from_ints(3, p)?, Variant::A, 6))
        .collect::<Result<Vec<_>, _>>()?;
    let refs: Vec<&StructureTable> = tables.iter().collect();
    let rep = regular_action_crosscheck(&refs)?;
    for f in &rep.formulas {
        let status = match (f.literal_matches, f.g_appended_matches) {
            (true, None) => "ok".to_string(),
            (lit, Some(app)) => format!("literal={lit} with-g={app}"),
            (false, None) => "MISMATCH".to_string(),
        };
        println!("{:<28} {status}", f.label);
        for m in f.literal_mismatches.iter().take(2) {
            println!("    a={:?} g={} printed {} derived {}", m.parameter, m.g, m.printed, m.derived);
        }
    }
    println!("delta action ok: {}, weight law ok: {}", rep.delta_action_ok, rep.weight_law_ok);
    println!("passes: {}", rep.passes());
    Ok(())
}
