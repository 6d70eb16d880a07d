//! Nonzero curvature components `κ(eᵢ, eⱼ)` as matrices in the defining
//! representation.
//!
//! `cargo run --example curvature -- g2-rolling`

use bggkit::catalog;

fn main() -> bggkit::Result<()> {
    let name = std::env::args().nth(1).unwrap_or_else(|| "projective-heis".into());
    let geo = catalog::load_example(&name)?;
    let kappa = geo.alpha.curvature();
    let names = &geo.bundle.k.algebra.names;
    let reg = geo.alpha.regularity_check()?;
    println!("regular: {} (minimal homogeneity {:?})", reg.passed, reg.min_homogeneity.map(|h| h.to_string()));
    for i in 0..names.len() {
        for j in i + 1..names.len() {
            let v = kappa.get(i, j);
            if v.iter().all(|x| x.is_zero()) {
                continue;
            }
            println!("κ({}, {}) =", names[i], names[j]);
            println!("{}", geo.bundle.defining.act(v));
        }
    }
    Ok(())
}
