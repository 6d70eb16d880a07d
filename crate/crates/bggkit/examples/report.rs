//! JSON summary of a catalog geometry: structural checks, fixtures and
//! solution dimensions per representation.
//!
//! `cargo run --release --example report -- cprojective`

use bggkit::catalog;
use bggkit::connection::ConnectionKind;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let name = std::env::args().nth(1).unwrap_or_else(|| "path-ode".into());
    let geo = catalog::load_example(&name)?;
    let report = catalog::geometry_report(&geo, ConnectionKind::Prolongation, true)?;
    println!("{}", serde_json::to_string_pretty(&report)?);
    Ok(())
}
