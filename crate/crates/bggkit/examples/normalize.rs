//! Normalizes the graded extension of a catalog geometry and compares it with
//! the stored one.
//!
//! `cargo run --example normalize -- cprojective`

use bggkit::catalog;
use bggkit::extension::normalize;

fn main() -> bggkit::Result<()> {
    let name = std::env::args().nth(1).unwrap_or_else(|| "cr-tube".into());
    let geo = catalog::load_example(&name)?;
    for g in &geo.gauge_sources {
        println!("gauge  {g}");
    }
    let n = normalize(&geo.gr_alpha, &geo.gauges)?;
    for step in &n.steps {
        println!(
            "homogeneity {:>2}: {} unknowns, {} equations, solution dim {}",
            step.homogeneity,
            step.unknowns.len(),
            step.equations,
            step.solutions.dim()
        );
    }
    println!("family dimension {}", n.family_dim);
    println!("normal: {}", n.alpha.is_normal()?);
    let names = &geo.bundle.k.algebra.names;
    for (j, e) in names.iter().enumerate() {
        let corr = n.correction.col(j);
        if corr.iter().all(|x| x.is_zero()) {
            continue;
        }
        println!("correction of α({e}) in the defining representation:");
        println!("{}", geo.bundle.defining.act(&corr));
    }
    if n.family_dim == 0 {
        println!("matches stored α: {}", n.alpha.alpha == geo.alpha.alpha);
    }
    Ok(())
}
