//! The companion algebra with deformed squares, and its module on `k^{S_3}`.
//!
//! `cargo run --release --example deformation -- 1,2,-3`

use hopf72::hopf::deform::deform_report;
use hopf72::ParamVector;

fn main() -> Result<(), hopf72::Error> {
    let arg = std::env::args().nth(1).unwrap_or_else(|| "1,2,-3".into());
    let r = deform_report(&ParamVector::parse(&arg, 3)?, 6)?;
    println!("{}", serde_json::to_string_pretty(&r).expect("serializable"));
    println!("passes: {}", r.passes());
    Ok(())
}
