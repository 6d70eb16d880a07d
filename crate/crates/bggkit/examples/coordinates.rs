//! Parallel sections in exponential coordinates: numeric values and, when
//! the factors are nilpotent, exact polynomials.
//!
//! `cargo run --example coordinates -- path-ode dual`

use bggkit::catalog::{self, Session};
use bggkit::connection::ConnectionKind;
use bggkit::coords::{normal_coordinate_polynomial, SolutionExpression};

fn main() -> bggkit::Result<()> {
    let mut args = std::env::args().skip(1);
    let name = args.next().unwrap_or_else(|| "projective-heis".into());
    let rep = args.next().unwrap_or_else(|| "std".into());
    let geo = catalog::load_example(&name)?;
    let mut s = Session::new(&geo);
    let conn = s.connection(&rep, ConnectionKind::Tractor)?;
    let sol = s.solutions(&rep, ConnectionKind::Tractor)?;
    let e = SolutionExpression::new(&conn, &sol.space, &geo.factors)?;
    let point: Vec<f64> = (0..e.param_names.len()).map(|i| 0.25 * (i as f64 + 1.0)).collect();
    println!("parameters {:?} at {point:?}", e.param_names);
    for (i, v) in sol.space.basis.iter().enumerate() {
        let value = e.evaluate(v, &point)?;
        let shown: Vec<String> = value.iter().map(|z| format!("{:.6}", z.re)).collect();
        println!("section {}: [{}]", i + 1, shown.join(", "));
        if let Ok(p) = e.evaluate_symbolic(v) {
            let shown: Vec<String> = p.iter().map(|q| q.display(&e.param_names)).collect();
            println!("   exact: [{}]", shown.join(", "));
        }
    }
    let r = s.rep(&rep)?;
    let normal = s.normal(&rep)?;
    if let Some(nu) = normal.basis.first() {
        let p = normal_coordinate_polynomial(&geo.alpha, &r, nu)?;
        let shown: Vec<String> = p.iter().map(ToString::to_string).collect();
        println!("normal coordinates of the first normal solution: [{}]", shown.join(", "));
    }
    Ok(())
}
