//! Holonomy algebra of the tractor connection and its matrix support.
//!
//! `cargo run --example holonomy -- path-ode`

use bggkit::catalog;
use bggkit::connection::tractor_connection;
use bggkit::solutions::holonomy;

fn main() -> bggkit::Result<()> {
    let mut args = std::env::args().skip(1);
    let name = args.next().unwrap_or_else(|| "projective-heis".into());
    let rep_name = args.next().unwrap_or_else(|| "std".into());
    let geo = catalog::load_example(&name)?;
    let conn = tractor_connection(&geo.alpha, &geo.representation(&rep_name)?)?;
    let hol = holonomy(&conn, catalog::HOLONOMY_LIMIT)?;
    println!("dim {} (bracket closed: {})", hol.dim, hol.bracket_closed);
    let support: Vec<String> = hol.support().iter().map(|(r, c)| format!("({},{})", r + 1, c + 1)).collect();
    println!("support {}", support.join(" "));
    for (i, m) in hol.basis.iter().enumerate().take(4) {
        println!("basis element {}:\n{m}", i + 1);
    }
    Ok(())
}
