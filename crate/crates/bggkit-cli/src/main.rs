use std::process::ExitCode;

use bggkit::catalog::{
    self, geometry_report, Geometry, RunConfig, Session, Verdict, HOLONOMY_LIMIT,
};
use bggkit::connection::{prolong, tractor_connection, ConnectionKind, Schedule};
use bggkit::coords::SolutionExpression;
use bggkit::extension::normalize;
use bggkit::linalg::Subspace;
use bggkit::solutions::holonomy;
use bggkit::{BggError, Matrix, Result, Scalar};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

#[derive(Parser)]
#[command(
    name = "bggkit",
    version,
    about = "First BGG solutions on homogeneous parabolic geometries"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Built-in geometry name.
    #[arg(long, global = true, default_value = "projective-heis")]
    geometry: String,
    /// Representation name from the catalog or an expression like sym2(dual(std)).
    #[arg(long, global = true, default_value = "std")]
    rep: String,
    #[arg(long, global = true, value_enum, default_value_t = Conn::Tractor)]
    connection: Conn,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Exact arithmetic in `evaluate`; refuses irrational spectra.
    #[arg(long, global = true)]
    exact: bool,
    /// Include elapsed time in reports.
    #[arg(long, global = true)]
    timing: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Structural checks and every fixture of the geometry.
    Validate,
    /// Normalizes the graded extension under the gauge constraints.
    Normalize,
    /// Curvature of the extension in the defining representation.
    Curvature,
    /// Prolongation of the tractor connection on --rep.
    Prolong,
    /// Parallel sections of --connection on --rep.
    Solve,
    /// Holonomy algebra of --connection on --rep.
    Holonomy,
    /// Solutions in exponential coordinates at a point.
    Evaluate {
        /// Comma separated parameter values, one per coordinate.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        at: Vec<String>,
    },
    /// Full report: structure, fixtures and a summary per representation.
    Report,
    /// Lists the built-in geometries.
    List,
}

#[derive(Clone, Copy, ValueEnum)]
enum Conn {
    Tractor,
    Prolongation,
    Automorphism,
}

impl From<Conn> for ConnectionKind {
    fn from(c: Conn) -> ConnectionKind {
        match c {
            Conn::Tractor => ConnectionKind::Tractor,
            Conn::Prolongation => ConnectionKind::Prolongation,
            Conn::Automorphism => ConnectionKind::Automorphism,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

struct Output {
    text: String,
    json: serde_json::Value,
    verdicts: Vec<Verdict>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            match cli.format {
                Format::Text => {
                    print!("{}", out.text);
                    for v in &out.verdicts {
                        println!(
                            "{} {} ({})",
                            if v.passed { "PASS" } else { "FAIL" },
                            v.fixture,
                            v.detail
                        );
                    }
                }
                Format::Json => {
                    let mut j = out.json;
                    if let serde_json::Value::Object(m) = &mut j {
                        m.insert(
                            "verdicts".into(),
                            serde_json::to_value(&out.verdicts).unwrap_or_default(),
                        );
                    }
                    println!("{}", serde_json::to_string_pretty(&j).unwrap_or_default());
                }
            }
            if out.verdicts.iter().all(|v| v.passed) {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn fixtures_for(
    geo: &Geometry,
    s: &mut Session,
    pick: impl Fn(&catalog::Check) -> bool,
) -> Vec<Verdict> {
    geo.fixtures
        .iter()
        .filter(|f| pick(&f.check))
        .map(|f| s.check(f))
        .collect()
}

fn run(cli: &Cli) -> Result<Output> {
    if let Command::List = cli.command {
        let names = catalog::names();
        let mut text = String::new();
        for n in &names {
            let g = catalog::load_example(n)?;
            text += &format!("{n}\t{}\n", g.title);
        }
        return Ok(Output {
            text,
            json: json!({ "geometries": names }),
            verdicts: vec![],
        });
    }
    let geo = catalog::load_example(&cli.geometry)?;
    let kind: ConnectionKind = cli.connection.into();
    let mut s = Session::new(&geo);
    let rep = cli.rep.as_str();
    match &cli.command {
        Command::List => unreachable!(),
        Command::Validate => {
            let verdicts = geo.validate();
            let text = format!("{}: {}\n", geo.name, geo.title);
            Ok(Output {
                text,
                json: json!({ "geometry": geo.name }),
                verdicts,
            })
        }
        Command::Normalize => {
            let n = normalize(&geo.gr_alpha, &geo.gauges)?;
            let names = &geo.bundle.k.algebra.names;
            let mut text = format!(
                "gauge: {}\nfamily dimension: {}\n",
                geo.gauge_sources.join("; "),
                n.family_dim
            );
            let mut corr = Vec::new();
            for (j, name) in names.iter().enumerate() {
                let m = geo.bundle.defining.act(&n.correction.col(j));
                if !m.is_zero() {
                    text += &format!("correction on {name}:\n{m}\n");
                }
                corr.push(matrix_strings(&m));
            }
            let verdicts = fixtures_for(&geo, &mut s, |c| {
                matches!(c, catalog::Check::Normalize { .. })
            });
            let json = json!({
                "geometry": geo.name,
                "family_dim": n.family_dim,
                "correction": corr,
                "reproduces_stored": n.alpha.alpha == geo.alpha.alpha,
            });
            Ok(Output {
                text,
                json,
                verdicts,
            })
        }
        Command::Curvature => {
            let kappa = geo.alpha.curvature();
            let names = &geo.bundle.k.algebra.names;
            let mut text = String::new();
            let mut entries = Vec::new();
            for i in 0..names.len() {
                for j in i + 1..names.len() {
                    let m = geo.bundle.defining.act(kappa.get(i, j));
                    if !m.is_zero() {
                        text += &format!("kappa({}, {}):\n{m}\n", names[i], names[j]);
                        entries.push(
                            json!({ "x": names[i], "y": names[j], "matrix": matrix_strings(&m) }),
                        );
                    }
                }
            }
            if entries.is_empty() {
                text += "flat\n";
            }
            let verdicts = fixtures_for(&geo, &mut s, |c| {
                matches!(c, catalog::Check::Curvature { .. })
            });
            Ok(Output {
                text,
                json: json!({ "geometry": geo.name, "curvature": entries }),
                verdicts,
            })
        }
        Command::Prolong => {
            let r = s.rep(rep)?;
            let t = tractor_connection(&geo.alpha, &r)?;
            let p = prolong(&t, Schedule::Ascending)?;
            let names = &geo.bundle.k.algebra.names;
            let mut text = format!("{} (dim {})\n", rep, r.dim);
            for st in &p.steps {
                let d: Vec<String> = st.divisors.iter().map(Scalar::to_string).collect();
                text += &format!(
                    "homogeneity {}: divisors [{}]\n",
                    st.homogeneity,
                    d.join(", ")
                );
            }
            let mut psi = Vec::new();
            for (j, m) in p.psi().iter().enumerate() {
                let e = nonzero_entries(m);
                if !e.is_empty() {
                    text += &format!("psi({}): {}\n", names[j], e.join(" "));
                }
                psi.push(matrix_strings(m));
            }
            let verdicts = fixtures_for(
                &geo,
                &mut s,
                |c| matches!(c, catalog::Check::Solve { rep: r, kind: ConnectionKind::Prolongation, .. } if r == rep),
            );
            let json = json!({ "geometry": geo.name, "rep": rep, "steps": p.steps, "psi": psi });
            Ok(Output {
                text,
                json,
                verdicts,
            })
        }
        Command::Solve => {
            let mut cfg = RunConfig::new(&cli.geometry, rep, kind);
            cfg.holonomy = false;
            cfg.timing = cli.timing;
            let report = catalog::run_pipeline(&cfg)?;
            let mut text = format!(
                "{} on {} (dim {}): chain {:?}\nS^inf dim {}, normal dim {}\n",
                kind.as_str(),
                rep,
                report.rep_dim,
                report.chain,
                report.solutions.dim(),
                report.normal.dim()
            );
            text += &subspace_text("S^inf", &report.solutions);
            text += &subspace_text("normal", &report.normal);
            let verdicts = report.verdicts.clone();
            Ok(Output {
                text,
                json: serde_json::to_value(&report).unwrap_or_default(),
                verdicts,
            })
        }
        Command::Holonomy => {
            let conn = s.connection(rep, kind)?;
            let h = holonomy(&conn, HOLONOMY_LIMIT)?;
            let support: Vec<(usize, usize)> = h
                .support()
                .into_iter()
                .map(|(r, c)| (r + 1, c + 1))
                .collect();
            let sup: Vec<String> = support.iter().map(|(r, c)| format!("{r}:{c}")).collect();
            let text = format!(
                "dim {}, bracket closed {}, support {}\n",
                h.dim,
                h.bracket_closed,
                sup.join(",")
            );
            let verdicts = fixtures_for(
                &geo,
                &mut s,
                |c| matches!(c, catalog::Check::Holonomy { rep: r, .. } if r == rep),
            );
            let json = json!({ "geometry": geo.name, "rep": rep, "dim": h.dim, "bracket_closed": h.bracket_closed, "support": support });
            Ok(Output {
                text,
                json,
                verdicts,
            })
        }
        Command::Evaluate { at } => evaluate(cli, &geo, &mut s, kind, at),
        Command::Report => {
            let r = geometry_report(&geo, kind, cli.timing)?;
            let mut text = format!("{}: {}\n", r.geometry, r.title);
            for v in &r.representations {
                text += &format!(
                    "  {:<14} dim {:>4}  {} S^inf {:>3}  normal {:>3}\n",
                    v.name,
                    v.dim,
                    v.connection.as_str(),
                    v.solutions,
                    v.normal
                );
            }
            if let Some(ms) = r.elapsed_ms {
                text += &format!("elapsed {ms} ms\n");
            }
            let verdicts: Vec<Verdict> = r.structural.iter().chain(&r.fixtures).cloned().collect();
            Ok(Output {
                text,
                json: serde_json::to_value(&r).unwrap_or_default(),
                verdicts,
            })
        }
    }
}

#[derive(Serialize)]
struct Evaluation {
    basis: usize,
    values: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    polynomials: Option<Vec<String>>,
}

fn evaluate(
    cli: &Cli,
    geo: &Geometry,
    s: &mut Session,
    kind: ConnectionKind,
    at: &[String],
) -> Result<Output> {
    let conn = s.connection(&cli.rep, kind)?;
    let sol = s.solutions(&cli.rep, kind)?;
    let expr = SolutionExpression::new(&conn, &sol.space, &geo.factors)?;
    let names = expr.param_names.clone();
    let values: Vec<String> = if at.is_empty() {
        vec!["1".to_string(); names.len()]
    } else {
        at.to_vec()
    };
    if values.len() != names.len() {
        return Err(BggError::Dimension(format!(
            "expected {} values for {}, got {}",
            names.len(),
            names.join(","),
            values.len()
        )));
    }
    let mut text = format!("coordinates {} = {}\n", names.join(","), values.join(","));
    let mut out = Vec::new();
    for (b, v) in sol.space.basis.iter().enumerate() {
        let (vals, polys) = if cli.exact {
            let p: Vec<Scalar> = values.iter().map(|x| x.parse()).collect::<Result<_>>()?;
            let vals = expr
                .evaluate_exact(v, &p)?
                .iter()
                .map(Scalar::to_string)
                .collect::<Vec<_>>();
            let polys = expr
                .evaluate_symbolic(v)?
                .iter()
                .map(|m| m.display(&names))
                .collect::<Vec<_>>();
            (vals, Some(polys))
        } else {
            let p: Vec<f64> = values
                .iter()
                .map(|x| {
                    x.parse::<f64>()
                        .map_err(|_| BggError::Parse(format!("not a number: {x:?}")))
                })
                .collect::<Result<_>>()?;
            let vals = expr
                .evaluate(v, &p)?
                .iter()
                .map(|c| format!("{:.12}{:+.12}i", c.re, c.im))
                .collect();
            (vals, None)
        };
        text += &format!("solution {}: [{}]\n", b + 1, vals.join(", "));
        if let Some(ps) = &polys {
            text += &format!("  as polynomials: [{}]\n", ps.join(", "));
        }
        out.push(Evaluation {
            basis: b + 1,
            values: vals,
            polynomials: polys,
        });
    }
    Ok(Output {
        text,
        json: json!({ "geometry": geo.name, "rep": cli.rep, "coordinates": names, "solutions": out }),
        verdicts: vec![],
    })
}

fn matrix_strings(m: &Matrix) -> Vec<Vec<String>> {
    (0..m.rows())
        .map(|r| (0..m.cols()).map(|c| m[(r, c)].to_string()).collect())
        .collect()
}

fn nonzero_entries(m: &Matrix) -> Vec<String> {
    let mut out = Vec::new();
    for r in 0..m.rows() {
        for c in 0..m.cols() {
            if !m[(r, c)].is_zero() {
                out.push(format!("({},{})={}", r + 1, c + 1, m[(r, c)]));
            }
        }
    }
    out
}

fn subspace_text(label: &str, s: &Subspace) -> String {
    let mut t = String::new();
    for (i, v) in s.basis.iter().enumerate() {
        let e: Vec<String> = v
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(j, x)| format!("w{}={}", j + 1, x))
            .collect();
        t += &format!("  {label} {}: {}\n", i + 1, e.join(" "));
    }
    t
}
