//! Solution space `S^∞` and its normal part for each catalog representation.
//!
//! `cargo run --example solve -- lagrangian-contact prolongation`

use bggkit::catalog::{self, Session};
use bggkit::connection::ConnectionKind;

fn main() -> bggkit::Result<()> {
    let mut args = std::env::args().skip(1);
    let name = args.next().unwrap_or_else(|| "projective-heis".into());
    let kind = ConnectionKind::parse(&args.next().unwrap_or_else(|| "prolongation".into()))?;
    let geo = catalog::load_example(&name)?;
    let mut s = Session::new(&geo);
    for rep in geo.rep_names() {
        let dim = s.rep(rep)?.dim;
        if dim > 40 {
            println!("{rep:>14} (dim {dim}) skipped in this example");
            continue;
        }
        let sol = s.solutions(rep, kind)?;
        let normal = s.normal(rep)?;
        println!("{rep:>14} (dim {dim}): S^∞ dim {}, normal dim {}, chain {:?}", sol.dim(), normal.dim(), sol.chain);
        if sol.dim() <= 3 {
            for b in &sol.space.basis {
                let v: Vec<String> = b.iter().map(ToString::to_string).collect();
                println!("{:>16}[{}]", "", v.join(", "));
            }
        }
    }
    Ok(())
}
