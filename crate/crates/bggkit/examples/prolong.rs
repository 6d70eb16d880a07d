//! Prolongation of the tractor connection on a representation, with the
//! divisors used at each homogeneity.
//!
//! `cargo run --example prolong -- path-ode sym2`

use bggkit::catalog;
use bggkit::connection::{prolong, prolongation_residual, tractor_connection, Schedule};

fn main() -> bggkit::Result<()> {
    let mut args = std::env::args().skip(1);
    let name = args.next().unwrap_or_else(|| "projective-heis".into());
    let rep_name = args.next().unwrap_or_else(|| "dual".into());
    let geo = catalog::load_example(&name)?;
    let rep = geo.representation(&rep_name)?;
    let t = tractor_connection(&geo.alpha, &rep)?;
    let p = prolong(&t, Schedule::Ascending)?;
    for step in &p.steps {
        let d: Vec<String> = step.divisors.iter().map(ToString::to_string).collect();
        println!("homogeneity {}: divisors [{}]", step.homogeneity, d.join(", "));
    }
    let names = &geo.bundle.k.algebra.names;
    for (j, psi) in p.psi().iter().enumerate() {
        if !psi.is_zero() {
            println!("Ψ({}) =\n{psi}", names[j]);
        }
    }
    let res = prolongation_residual(&p.connection)?;
    println!("∂*R vanishes: {}", res.iter().all(|m| m.is_zero()));
    Ok(())
}
