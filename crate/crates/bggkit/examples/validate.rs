//! Structural checks and fixtures for one catalog geometry.
//!
//! `cargo run --example validate -- path-ode`

use bggkit::catalog;

fn main() -> bggkit::Result<()> {
    let name = std::env::args().nth(1).unwrap_or_else(|| "projective-heis".into());
    let geo = catalog::load_example(&name)?;
    println!("{} ({})", geo.title, geo.name);
    let verdicts = geo.validate();
    for v in &verdicts {
        println!("{} {} {}", if v.passed { "PASS" } else { "FAIL" }, v.fixture, v.detail);
    }
    let failed = verdicts.iter().filter(|v| !v.passed).count();
    println!("{} of {} checks passed", verdicts.len() - failed, verdicts.len());
    Ok(())
}
