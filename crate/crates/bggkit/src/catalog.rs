//! Built-in example geometries, their fixture checks and pipeline reports.
//!
//! A geometry file is line based. Blank lines and `#` comments are ignored.
//! Sections are `[g]`, `[k]`, `[gr_alpha]`, `[alpha]`, `[gauge]`, `[reps]`,
//! `[factors]` and `[fixtures]`; `name` and `title` come before them.

use std::collections::HashMap;
use std::sync::Arc;
use std::time::Instant;

use serde::Serialize;

use crate::connection::{
    automorphism_connection, prolong, tractor_connection, ConnectionKind, ConnectionMap, Schedule,
};
use crate::error::{BggError, Result};
use crate::expr::{parse_linear, parse_scalar, LinForm};
use crate::extension::{normalize, ExtensionMap, GaugeConstraint, GradedAlgebraBundle};
use crate::lie::{GradedParabolic, LieAlgebra, Representation, SymmetryPair};
use crate::linalg::{self, solve_affine, SpanCoordinates, Subspace, Vector};
use crate::matrix::Matrix;
use crate::rational::Rational;
use crate::scalar::Scalar;
use crate::solutions::{holonomy, normal_solutions, solve, SolutionSpace};

/// Largest representation for which holonomy is computed.
pub const HOLONOMY_LIMIT: usize = 64;

const SOURCES: [(&str, &str); 6] = [
    (
        "projective-heis",
        include_str!("../data/projective-heis.geom"),
    ),
    ("cprojective", include_str!("../data/cprojective.geom")),
    ("g2-rolling", include_str!("../data/g2-rolling.geom")),
    ("cr-tube", include_str!("../data/cr-tube.geom")),
    (
        "lagrangian-contact",
        include_str!("../data/lagrangian-contact.geom"),
    ),
    ("path-ode", include_str!("../data/path-ode.geom")),
];

/// Names of the built-in geometries.
pub fn names() -> Vec<&'static str> {
    SOURCES.iter().map(|(n, _)| *n).collect()
}

/// Raw text of a built-in geometry file.
pub fn source(name: &str) -> Result<&'static str> {
    SOURCES
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, s)| *s)
        .ok_or_else(|| BggError::UnknownGeometry {
            name: name.to_string(),
            valid: names().join(", "),
        })
}

/// Parses a built-in geometry.
pub fn load_example(name: &str) -> Result<Geometry> {
    Geometry::parse(source(name)?)
}

/// Representation expressions: `std`, `adjoint`, a name from `[reps]`, or
/// `dual(·)`, `conj(·)`, `sym2(·)`, `alt2(·)`, `gl(·)`, `tensor(·, ·)`.
#[derive(Clone, Debug, PartialEq)]
pub enum RepExpr {
    Std,
    Adjoint,
    Named(String),
    Dual(Box<RepExpr>),
    Conj(Box<RepExpr>),
    Sym2(Box<RepExpr>),
    Alt2(Box<RepExpr>),
    Gl(Box<RepExpr>),
    Tensor(Box<RepExpr>, Box<RepExpr>),
}

impl RepExpr {
    pub fn parse(src: &str) -> Result<RepExpr> {
        let toks = rep_tokens(src);
        let mut pos = 0;
        let e = rep_expr(&toks, &mut pos, src)?;
        if pos != toks.len() {
            return Err(BggError::Parse(format!(
                "trailing input in representation {src:?}"
            )));
        }
        Ok(e)
    }
}

fn rep_tokens(src: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut cur = String::new();
    for ch in src.chars() {
        if ch.is_alphanumeric() || ch == '_' || ch == '-' {
            cur.push(ch);
        } else {
            if !cur.is_empty() {
                out.push(std::mem::take(&mut cur));
            }
            if !ch.is_whitespace() {
                out.push(ch.to_string());
            }
        }
    }
    if !cur.is_empty() {
        out.push(cur);
    }
    out
}

fn rep_expr(toks: &[String], pos: &mut usize, src: &str) -> Result<RepExpr> {
    let bad = || BggError::Parse(format!("malformed representation {src:?}"));
    let head = toks.get(*pos).ok_or_else(bad)?.clone();
    *pos += 1;
    if toks.get(*pos).map(String::as_str) != Some("(") {
        return Ok(match head.as_str() {
            "std" => RepExpr::Std,
            "adjoint" => RepExpr::Adjoint,
            "(" | ")" | "," => return Err(bad()),
            _ => RepExpr::Named(head),
        });
    }
    *pos += 1;
    let mut args = vec![rep_expr(toks, pos, src)?];
    while toks.get(*pos).map(String::as_str) == Some(",") {
        *pos += 1;
        args.push(rep_expr(toks, pos, src)?);
    }
    if toks.get(*pos).map(String::as_str) != Some(")") {
        return Err(bad());
    }
    *pos += 1;
    let mut it = args.into_iter();
    let one = |it: &mut std::vec::IntoIter<RepExpr>| -> Result<Box<RepExpr>> {
        let a = it.next().ok_or_else(bad)?;
        Ok(Box::new(a))
    };
    let e = match head.as_str() {
        "dual" => RepExpr::Dual(one(&mut it)?),
        "conj" => RepExpr::Conj(one(&mut it)?),
        "sym2" => RepExpr::Sym2(one(&mut it)?),
        "alt2" => RepExpr::Alt2(one(&mut it)?),
        "gl" => RepExpr::Gl(one(&mut it)?),
        "tensor" => {
            let a = one(&mut it)?;
            RepExpr::Tensor(a, one(&mut it)?)
        }
        _ => {
            return Err(BggError::Parse(format!(
                "unknown representation constructor {head:?}"
            )))
        }
    };
    if it.next().is_some() {
        return Err(bad());
    }
    Ok(e)
}

/// One check from the `[fixtures]` section.
#[derive(Clone, Debug, PartialEq)]
pub enum Check {
    /// With `up_to_gauge`, every free direction must come from an
    /// `h`-invariant element of `p₊` acting on the graded extension.
    Normalize {
        family: Option<usize>,
        matches: bool,
        up_to_gauge: bool,
    },
    /// `ρ(κ(x, y))` in the defining representation; unlisted entries vanish.
    Curvature {
        x: usize,
        y: usize,
        entries: Vec<(usize, usize, Scalar)>,
    },
    Solve {
        rep: String,
        kind: ConnectionKind,
        dim: usize,
        normal: Option<usize>,
        support: Option<Vec<usize>>,
        trace_free: Option<usize>,
        alpha_image: bool,
    },
    /// Some vector of the space has the listed entries; with `only`, all
    /// other entries vanish.
    Contains {
        rep: String,
        space: SpaceRef,
        entries: Vec<(usize, Scalar)>,
        only: bool,
    },
    /// Every vector of a nonzero space satisfies `form = 0`.
    Relation {
        rep: String,
        space: SpaceRef,
        form: LinForm,
    },
    Holonomy {
        rep: String,
        kind: ConnectionKind,
        dim: usize,
        closed: bool,
        support: Option<Vec<(usize, usize)>>,
    },
    Q {
        rep: String,
        coefficients: Vec<Scalar>,
    },
}

/// Either `S^∞` of a connection or the normal solutions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpaceRef {
    Solutions(ConnectionKind),
    Normal,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Fixture {
    pub source: String,
    pub check: Check,
}

impl Fixture {
    /// Parses one `[fixtures]` line; `k_names` resolves curvature arguments.
    pub fn parse(line: &str, k_names: &[String]) -> Result<Fixture> {
        parse_fixture(line, k_names)
    }

    /// Representation the fixture refers to, if any.
    pub fn rep(&self) -> Option<&str> {
        match &self.check {
            Check::Solve { rep, .. }
            | Check::Contains { rep, .. }
            | Check::Relation { rep, .. }
            | Check::Holonomy { rep, .. }
            | Check::Q { rep, .. } => Some(rep),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Verdict {
    pub fixture: String,
    pub passed: bool,
    pub detail: String,
}

impl Verdict {
    fn new(fixture: &str, passed: bool, detail: impl Into<String>) -> Verdict {
        Verdict {
            fixture: fixture.to_string(),
            passed,
            detail: detail.into(),
        }
    }
}

/// A parsed geometry: the graded bundle, both extensions and its fixtures.
#[derive(Clone, Debug)]
pub struct Geometry {
    pub name: String,
    pub title: String,
    pub bundle: Arc<GradedAlgebraBundle>,
    pub gr_alpha: ExtensionMap,
    pub alpha: ExtensionMap,
    pub gauges: Vec<GaugeConstraint>,
    pub gauge_sources: Vec<String>,
    pub reps: Vec<(String, RepExpr)>,
    pub factors: Vec<Vec<(String, Vector)>>,
    pub fixtures: Vec<Fixture>,
}

#[derive(Default)]
struct Sections {
    header: Vec<String>,
    map: HashMap<String, Vec<String>>,
}

fn split_sections(src: &str) -> Result<Sections> {
    let mut s = Sections::default();
    let mut current: Option<String> = None;
    for raw in src.lines() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if line.starts_with('[') && line.ends_with(']') && !line.contains(',') {
            let name = line[1..line.len() - 1].trim().to_string();
            if s.map.contains_key(&name) {
                return Err(BggError::Parse(format!("section [{name}] appears twice")));
            }
            s.map.insert(name.clone(), Vec::new());
            current = Some(name);
            continue;
        }
        match &current {
            Some(c) => s.map.get_mut(c).expect("section").push(line.to_string()),
            None => s.header.push(line.to_string()),
        }
    }
    Ok(s)
}

fn keyword<'a>(line: &'a str, key: &str) -> Option<&'a str> {
    let rest = line.strip_prefix(key)?;
    if rest.is_empty() || rest.starts_with(char::is_whitespace) {
        Some(rest.trim())
    } else {
        None
    }
}

fn parse_usize(s: &str, what: &str) -> Result<usize> {
    s.trim().parse().map_err(|_| {
        BggError::Parse(format!(
            "{what}: expected a non-negative integer, got {s:?}"
        ))
    })
}

struct GData {
    algebra: LieAlgebra,
    mats: Vec<Matrix>,
    grading: Vec<i64>,
    grading_element: Vector,
}

fn sl_matrices(n: usize) -> (Vec<String>, Vec<Matrix>) {
    let mut names = Vec::new();
    let mut mats = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i != j {
                names.push(format!("E{}_{}", i + 1, j + 1));
                mats.push(Matrix::unit(n, n, i, j));
            }
        }
    }
    for i in 0..n - 1 {
        let mut h = Matrix::unit(n, n, i, i);
        h[(i + 1, i + 1)] = Scalar::from_int(-1);
        names.push(format!("H{}", i + 1));
        mats.push(h);
    }
    (names, mats)
}

fn parse_row(line: &str) -> Vec<&str> {
    line.split(',').map(str::trim).collect()
}

fn parse_g(lines: &[String]) -> Result<GData> {
    let mut algebra: Option<(String, usize)> = None;
    let mut params: Vec<String> = Vec::new();
    let mut rows: Vec<Vec<LinForm>> = Vec::new();
    let mut blocks: Vec<usize> = Vec::new();
    for line in lines {
        if let Some(rest) = keyword(line, "algebra") {
            let mut it = rest.split_whitespace();
            let kind = it.next().unwrap_or("").to_string();
            let n = parse_usize(it.next().unwrap_or(""), "matrix size")?;
            algebra = Some((kind, n));
        } else if let Some(rest) = keyword(line, "params") {
            params = rest.split_whitespace().map(String::from).collect();
        } else if let Some(rest) = keyword(line, "blocks") {
            blocks = rest
                .split_whitespace()
                .map(|b| parse_usize(b, "block size"))
                .collect::<Result<_>>()?;
        } else {
            rows.push(
                parse_row(line)
                    .into_iter()
                    .map(parse_linear)
                    .collect::<Result<_>>()?,
            );
        }
    }
    let (kind, n) = algebra.ok_or_else(|| BggError::Parse("[g] needs an 'algebra' line".into()))?;
    let (names, mats) = match kind.as_str() {
        "sl" => {
            if n < 2 {
                return Err(BggError::Parse("sl needs size at least 2".into()));
            }
            sl_matrices(n)
        }
        "template" => {
            if rows.len() != n || rows.iter().any(|r| r.len() != n) {
                return Err(BggError::Parse(format!(
                    "template must have {n} rows of {n} entries"
                )));
            }
            for (r, row) in rows.iter().enumerate() {
                for (c, e) in row.iter().enumerate() {
                    if !e.constant.is_zero() {
                        return Err(BggError::Parse(format!(
                            "template entry ({}, {}) has a constant term",
                            r + 1,
                            c + 1
                        )));
                    }
                    if let Some(v) = e.terms.keys().find(|v| !params.contains(v)) {
                        return Err(BggError::Parse(format!(
                            "template uses undeclared parameter {v:?}"
                        )));
                    }
                }
            }
            let mats = params
                .iter()
                .map(|p| {
                    let mut m = Matrix::zeros(n, n);
                    for (r, row) in rows.iter().enumerate() {
                        for (c, e) in row.iter().enumerate() {
                            m[(r, c)] = e.coeff(p);
                        }
                    }
                    m
                })
                .collect();
            (params.clone(), mats)
        }
        other => return Err(BggError::Parse(format!("unknown algebra kind {other:?}"))),
    };
    if blocks.iter().sum::<usize>() != n || blocks.contains(&0) {
        return Err(BggError::Parse(format!(
            "blocks must be positive and sum to {n}"
        )));
    }
    let block_of: Vec<i64> = blocks
        .iter()
        .enumerate()
        .flat_map(|(b, &s)| std::iter::repeat_n(b as i64, s))
        .collect();
    let mut grading = Vec::new();
    for (name, m) in names.iter().zip(&mats) {
        let mut grade = None;
        for r in 0..n {
            for c in 0..n {
                if m[(r, c)].is_zero() {
                    continue;
                }
                let d = block_of[c] - block_of[r];
                if grade.is_some_and(|g| g != d) {
                    return Err(BggError::Parse(format!(
                        "basis element {name} is not homogeneous for the blocks"
                    )));
                }
                grade = Some(d);
            }
        }
        grading
            .push(grade.ok_or_else(|| BggError::Parse(format!("basis element {name} is zero")))?);
    }
    let algebra = LieAlgebra::from_matrices(names, &mats)?;
    let mean = Rational::new(-block_of.iter().sum::<i64>(), n as i64);
    let mut e = Matrix::zeros(n, n);
    for r in 0..n {
        e[(r, r)] = Scalar::from_rational(&Rational::from_int(-block_of[r]) - &mean);
    }
    let span = SpanCoordinates::new(n * n, &mats.iter().map(Matrix::to_vec).collect::<Vec<_>>())?;
    let grading_element = span
        .coordinates(&e.to_vec())
        .ok_or_else(|| BggError::InvalidAlgebra("the grading element is not in g".into()))?;
    Ok(GData {
        algebra,
        mats,
        grading,
        grading_element,
    })
}

fn parse_k(lines: &[String]) -> Result<SymmetryPair> {
    let mut names: Vec<String> = Vec::new();
    let mut degrees: Vec<i64> = Vec::new();
    let mut isotropy: Vec<String> = Vec::new();
    let mut brackets: Vec<(String, String, LinForm)> = Vec::new();
    for line in lines {
        if let Some(rest) = keyword(line, "basis") {
            names = rest.split_whitespace().map(String::from).collect();
        } else if let Some(rest) = keyword(line, "degrees") {
            degrees = rest
                .split_whitespace()
                .map(|d| {
                    d.parse()
                        .map_err(|_| BggError::Parse(format!("bad degree {d:?}")))
                })
                .collect::<Result<_>>()?;
        } else if let Some(rest) = keyword(line, "isotropy") {
            isotropy = rest.split_whitespace().map(String::from).collect();
        } else if let Some(rest) = line.strip_prefix('[') {
            let (pair, rhs) = rest
                .split_once(']')
                .and_then(|(p, r)| Some((p, r.trim().strip_prefix('=')?)))
                .ok_or_else(|| {
                    BggError::Parse(format!("bracket line {line:?} should read [a, b] = expr"))
                })?;
            let (a, b) = pair
                .split_once(',')
                .ok_or_else(|| BggError::Parse(format!("bracket {pair:?}")))?;
            brackets.push((
                a.trim().to_string(),
                b.trim().to_string(),
                parse_linear(rhs)?,
            ));
        } else {
            return Err(BggError::Parse(format!("unexpected line in [k]: {line:?}")));
        }
    }
    if degrees.len() != names.len() {
        return Err(BggError::Parse(
            "[k] needs one degree per basis element".into(),
        ));
    }
    let index = |n: &str| {
        names
            .iter()
            .position(|m| m == n)
            .ok_or_else(|| BggError::Parse(format!("unknown basis element {n:?} in [k]")))
    };
    let mut triples = Vec::new();
    for (a, b, rhs) in &brackets {
        if !rhs.constant.is_zero() {
            return Err(BggError::Parse(format!(
                "bracket [{a}, {b}] has a constant term"
            )));
        }
        let (i, j) = (index(a)?, index(b)?);
        for (v, c) in &rhs.terms {
            triples.push((i, j, index(v)?, c.clone()));
        }
    }
    let iso = isotropy
        .iter()
        .map(|n| index(n))
        .collect::<Result<Vec<_>>>()?;
    let alg = LieAlgebra::from_triples(names, &triples)?;
    SymmetryPair::new(alg, iso, degrees)
}

/// Reads a matrix of linear forms in `x1…xm` and converts each column of
/// coefficients to g-coordinates. `*` entries are fixed by membership in g.
fn parse_alpha(lines: &[String], g: &GData, dim_k: usize, allow_star: bool) -> Result<Matrix> {
    let n = g.mats[0].rows();
    if lines.len() != n {
        return Err(BggError::Parse(format!(
            "extension matrix must have {n} rows"
        )));
    }
    let mut cells: Vec<Vec<Option<LinForm>>> = Vec::new();
    for line in lines {
        let row = parse_row(line);
        if row.len() != n {
            return Err(BggError::Parse(format!(
                "extension row {line:?} must have {n} entries"
            )));
        }
        let mut out = Vec::new();
        for e in row {
            if e == "*" {
                if !allow_star {
                    return Err(BggError::Parse(
                        "'*' entries are only allowed in [alpha]".into(),
                    ));
                }
                out.push(None);
            } else {
                let f = parse_linear(e)?;
                if !f.constant.is_zero() {
                    return Err(BggError::Parse(format!(
                        "extension entry {e:?} has a constant term"
                    )));
                }
                if let Some(v) = f.terms.keys().find(|v| var_index(v, dim_k).is_none()) {
                    return Err(BggError::Parse(format!(
                        "extension uses unknown variable {v:?}"
                    )));
                }
                out.push(Some(f));
            }
        }
        cells.push(out);
    }
    let dim_g = g.mats.len();
    let mut alpha = Matrix::zeros(dim_g, dim_k);
    for j in 0..dim_k {
        let var = format!("x{}", j + 1);
        let known: Vec<(usize, usize, Scalar)> = (0..n)
            .flat_map(|r| (0..n).map(move |c| (r, c)))
            .filter_map(|(r, c)| cells[r][c].as_ref().map(|f| (r, c, f.coeff(&var))))
            .collect();
        let mut a = Matrix::zeros(known.len(), dim_g);
        let mut b = Vec::with_capacity(known.len());
        for (row, (r, c, v)) in known.iter().enumerate() {
            for (col, m) in g.mats.iter().enumerate() {
                a[(row, col)] = m[(*r, *c)].clone();
            }
            b.push(v.clone());
        }
        let mut sol = solve_affine(&a, &b)?;
        if sol.homogeneous.dim() != 0 {
            // Coordinates in a real basis are real: add the imaginary parts.
            let (a2, b2) = split_real_imaginary(&a, &b);
            sol = solve_affine(&a2, &b2)?;
        }
        let x = sol.particular.ok_or_else(|| {
            BggError::InvalidExtension(format!("column of {var} does not lie in g"))
        })?;
        if sol.homogeneous.dim() != 0 {
            return Err(BggError::InvalidExtension(format!(
                "'*' entries leave the column of {var} undetermined"
            )));
        }
        for (i, v) in x.into_iter().enumerate() {
            alpha[(i, j)] = v;
        }
    }
    Ok(alpha)
}

fn re_im(s: &Scalar) -> (Scalar, Scalar) {
    let c = s.conj_i();
    let two = Scalar::from_int(2);
    let re = &(s + &c) / &two;
    let im = &(s - &c) / &(&two * &Scalar::i());
    (re, im)
}

fn split_real_imaginary(a: &Matrix, b: &[Scalar]) -> (Matrix, Vec<Scalar>) {
    let n = a.rows();
    let mut a2 = Matrix::zeros(2 * n, a.cols());
    let mut b2 = Vec::with_capacity(2 * n);
    for r in 0..n {
        for c in 0..a.cols() {
            let (re, im) = re_im(&a[(r, c)]);
            a2[(r, c)] = re;
            a2[(n + r, c)] = im;
        }
    }
    let parts: Vec<(Scalar, Scalar)> = b.iter().map(re_im).collect();
    b2.extend(parts.iter().map(|p| p.0.clone()));
    b2.extend(parts.iter().map(|p| p.1.clone()));
    (a2, b2)
}

fn var_index(v: &str, dim_k: usize) -> Option<usize> {
    let j: usize = v.strip_prefix('x')?.parse().ok()?;
    (1..=dim_k).contains(&j).then_some(j - 1)
}

fn parse_entry_list(items: &[&str], what: &str) -> Result<Vec<(String, String)>> {
    items
        .iter()
        .map(|it| {
            it.split_once('=')
                .map(|(a, b)| (a.trim().to_string(), b.trim().to_string()))
                .ok_or_else(|| BggError::Parse(format!("{what}: expected key=value, got {it:?}")))
        })
        .collect()
}

fn one_based(s: &str, what: &str) -> Result<usize> {
    let i = parse_usize(s, what)?;
    if i == 0 {
        return Err(BggError::Parse(format!("{what}: indices are one-based")));
    }
    Ok(i - 1)
}

fn parse_pair(s: &str, sep: char, what: &str) -> Result<(usize, usize)> {
    let (a, b) = s
        .split_once(sep)
        .ok_or_else(|| BggError::Parse(format!("{what}: expected r{sep}c, got {s:?}")))?;
    Ok((one_based(a, what)?, one_based(b, what)?))
}

fn parse_fixture(line: &str, k_names: &[String]) -> Result<Fixture> {
    let words: Vec<&str> = line.split_whitespace().collect();
    let kind_at = |i: usize| -> Result<ConnectionKind> {
        ConnectionKind::parse(words.get(i).copied().unwrap_or(""))
    };
    let rep_at = |i: usize| -> Result<String> {
        words
            .get(i)
            .map(|s| s.to_string())
            .ok_or_else(|| BggError::Parse(format!("fixture {line:?} needs a representation")))
    };
    let k_index = |n: &str| {
        k_names
            .iter()
            .position(|m| m == n)
            .ok_or_else(|| BggError::Parse(format!("unknown basis element {n:?}")))
    };
    let check = match words.first().copied().unwrap_or("") {
        "normalize" => {
            let mut family = None;
            let mut matches = false;
            let mut up_to_gauge = false;
            for w in &words[1..] {
                if *w == "matches" {
                    matches = true;
                } else if *w == "up_to_gauge" {
                    up_to_gauge = true;
                } else if let Some(v) = w.strip_prefix("family=") {
                    family = Some(parse_usize(v, "family")?);
                } else {
                    return Err(BggError::Parse(format!("unknown normalize option {w:?}")));
                }
            }
            Check::Normalize {
                family,
                matches,
                up_to_gauge,
            }
        }
        "curvature" => {
            let x = k_index(words.get(1).copied().unwrap_or(""))?;
            let y = k_index(words.get(2).copied().unwrap_or(""))?;
            let entries = parse_entry_list(&words[3.min(words.len())..], "curvature")?
                .into_iter()
                .map(|(k, v)| {
                    let rc = k
                        .strip_prefix('m')
                        .ok_or_else(|| BggError::Parse(format!("curvature entry {k:?}")))?;
                    let (r, c) = parse_pair(rc, '_', "curvature")?;
                    Ok((r, c, parse_scalar(&v)?))
                })
                .collect::<Result<_>>()?;
            Check::Curvature { x, y, entries }
        }
        "solve" => {
            let rep = rep_at(1)?;
            let kind = kind_at(2)?;
            let mut dim = None;
            let (mut normal, mut support, mut trace_free, mut alpha_image) =
                (None, None, None, false);
            for w in &words[3.min(words.len())..] {
                if *w == "alpha_image" {
                    alpha_image = true;
                    continue;
                }
                let (k, v) = w
                    .split_once('=')
                    .ok_or_else(|| BggError::Parse(format!("solve option {w:?}")))?;
                match k {
                    "dim" => dim = Some(parse_usize(v, "dim")?),
                    "normal" => normal = Some(parse_usize(v, "normal")?),
                    "trace_free" => trace_free = Some(parse_usize(v, "trace_free")?),
                    "support" => {
                        support = Some(
                            v.split(',')
                                .map(|s| one_based(s, "support"))
                                .collect::<Result<_>>()?,
                        )
                    }
                    _ => return Err(BggError::Parse(format!("unknown solve option {k:?}"))),
                }
            }
            let dim = dim.ok_or_else(|| BggError::Parse(format!("fixture {line:?} needs dim=")))?;
            Check::Solve {
                rep,
                kind,
                dim,
                normal,
                support,
                trace_free,
                alpha_image,
            }
        }
        "contains" | "normal_contains" => {
            let rep = rep_at(1)?;
            let (space, start) = if words[0] == "contains" {
                (SpaceRef::Solutions(kind_at(2)?), 3)
            } else {
                (SpaceRef::Normal, 2)
            };
            let mut only = false;
            let mut items = Vec::new();
            for w in &words[start.min(words.len())..] {
                if *w == "only" {
                    only = true;
                } else {
                    items.push(*w);
                }
            }
            let entries = parse_entry_list(&items, "contains")?
                .into_iter()
                .map(|(k, v)| {
                    let i = k.strip_prefix('w').ok_or_else(|| {
                        BggError::Parse(format!("entry {k:?} should be w<index>"))
                    })?;
                    Ok((one_based(i, "contains")?, parse_scalar(&v)?))
                })
                .collect::<Result<_>>()?;
            Check::Contains {
                rep,
                space,
                entries,
                only,
            }
        }
        "relation" => {
            let rep = rep_at(1)?;
            let space = match words.get(2).copied() {
                Some("normal") => SpaceRef::Normal,
                _ => SpaceRef::Solutions(kind_at(2)?),
            };
            let form = parse_linear(&words[3.min(words.len())..].join(" "))?;
            Check::Relation { rep, space, form }
        }
        "holonomy" => {
            let rep = rep_at(1)?;
            let kind = kind_at(2)?;
            let (mut dim, mut closed, mut support) = (None, false, None);
            for w in &words[3.min(words.len())..] {
                if *w == "closed" {
                    closed = true;
                } else if let Some(v) = w.strip_prefix("dim=") {
                    dim = Some(parse_usize(v, "dim")?);
                } else if let Some(v) = w.strip_prefix("support=") {
                    support = Some(
                        v.split(',')
                            .map(|p| parse_pair(p, ':', "support"))
                            .collect::<Result<_>>()?,
                    );
                } else {
                    return Err(BggError::Parse(format!("unknown holonomy option {w:?}")));
                }
            }
            let dim = dim.ok_or_else(|| BggError::Parse(format!("fixture {line:?} needs dim=")))?;
            Check::Holonomy {
                rep,
                kind,
                dim,
                closed,
                support,
            }
        }
        "q" => {
            let rep = rep_at(1)?;
            let coefficients = words[2.min(words.len())..]
                .iter()
                .map(|w| parse_scalar(w))
                .collect::<Result<_>>()?;
            Check::Q { rep, coefficients }
        }
        other => return Err(BggError::Parse(format!("unknown fixture kind {other:?}"))),
    };
    Ok(Fixture {
        source: line.to_string(),
        check,
    })
}

impl Geometry {
    pub fn parse(src: &str) -> Result<Geometry> {
        let sections = split_sections(src)?;
        let mut name = None;
        let mut title = String::new();
        for line in &sections.header {
            if let Some(v) = keyword(line, "name") {
                name = Some(v.to_string());
            } else if let Some(v) = keyword(line, "title") {
                title = v.to_string();
            } else {
                return Err(BggError::Parse(format!("unexpected header line {line:?}")));
            }
        }
        let name =
            name.ok_or_else(|| BggError::Parse("geometry file needs a 'name' line".into()))?;
        let empty = Vec::new();
        let section = |s: &str| sections.map.get(s).unwrap_or(&empty);
        let g = parse_g(section("g")).map_err(|e| e.at("parse [g]"))?;
        let k = parse_k(section("k")).map_err(|e| e.at("parse [k]"))?;
        let dim_k = k.dim();
        let k_names = k.algebra.names.clone();
        let graded = GradedParabolic::new(
            g.algebra.clone(),
            g.grading.clone(),
            g.grading_element.clone(),
        )?;
        let defining = Representation::new("std", g.mats.clone())?;
        let bundle = Arc::new(GradedAlgebraBundle::new(graded, defining, k)?);
        let gr = parse_alpha(section("gr_alpha"), &g, dim_k, false)
            .map_err(|e| e.at("parse [gr_alpha]"))?;
        let gr_alpha = ExtensionMap::unchecked(bundle.clone(), gr)?;
        let al =
            parse_alpha(section("alpha"), &g, dim_k, true).map_err(|e| e.at("parse [alpha]"))?;
        let alpha = ExtensionMap::new(bundle.clone(), al).map_err(|e| e.at("parse [alpha]"))?;
        let gauge_sources: Vec<String> = section("gauge").clone();
        let gauges = gauge_sources
            .iter()
            .map(|s| GaugeConstraint::parse(s, &k_names))
            .collect::<Result<_>>()?;
        let mut reps = Vec::new();
        for line in section("reps") {
            let (n, e) = line
                .split_once('=')
                .ok_or_else(|| BggError::Parse(format!("rep line {line:?} needs '='")))?;
            reps.push((n.trim().to_string(), RepExpr::parse(e.trim())?));
        }
        let mut factors = Vec::new();
        for line in section("factors") {
            let mut f = Vec::new();
            for item in parse_row(line) {
                let (p, d) = item
                    .split_once(':')
                    .ok_or_else(|| BggError::Parse(format!("factor item {item:?}")))?;
                let form = parse_linear(d)?;
                let mut dir = linalg::zero_vec(dim_k);
                for (v, c) in &form.terms {
                    let i = k_names.iter().position(|m| m == v).ok_or_else(|| {
                        BggError::Parse(format!("unknown direction {v:?} in factor"))
                    })?;
                    dir[i] = c.clone();
                }
                f.push((p.trim().to_string(), dir));
            }
            factors.push(f);
        }
        let fixtures = section("fixtures")
            .iter()
            .map(|l| parse_fixture(l, &k_names))
            .collect::<Result<_>>()?;
        Ok(Geometry {
            name,
            title,
            bundle,
            gr_alpha,
            alpha,
            gauges,
            gauge_sources,
            reps,
            factors,
            fixtures,
        })
    }

    /// Names declared in `[reps]`.
    pub fn rep_names(&self) -> Vec<&str> {
        self.reps.iter().map(|(n, _)| n.as_str()).collect()
    }

    /// Builds a representation from a `[reps]` name or an expression.
    pub fn representation(&self, name: &str) -> Result<Representation> {
        let expr = match self.reps.iter().find(|(n, _)| n == name) {
            Some((_, e)) => e.clone(),
            None => RepExpr::parse(name)
                .map_err(|_| BggError::UnknownRepresentation(name.to_string()))?,
        };
        let mut r = self.build_rep(&expr, 0)?;
        r.name = name.to_string();
        Ok(r)
    }

    fn build_rep(&self, e: &RepExpr, depth: usize) -> Result<Representation> {
        if depth > 16 {
            return Err(BggError::InvalidRepresentation(
                "representation definitions are cyclic".into(),
            ));
        }
        Ok(match e {
            RepExpr::Std => self.bundle.defining.clone(),
            RepExpr::Adjoint => Representation::adjoint(&self.bundle.g.algebra),
            RepExpr::Named(n) => {
                let (_, e) = self
                    .reps
                    .iter()
                    .find(|(m, _)| m == n)
                    .ok_or_else(|| BggError::UnknownRepresentation(n.clone()))?;
                self.build_rep(e, depth + 1)?
            }
            RepExpr::Dual(a) => self.build_rep(a, depth + 1)?.dual(),
            RepExpr::Conj(a) => self.build_rep(a, depth + 1)?.conjugate(),
            RepExpr::Sym2(a) => self.build_rep(a, depth + 1)?.sym2(),
            RepExpr::Alt2(a) => self.build_rep(a, depth + 1)?.alt2(),
            RepExpr::Gl(a) => self.build_rep(a, depth + 1)?.adjoint_gl(),
            RepExpr::Tensor(a, b) => self
                .build_rep(a, depth + 1)?
                .tensor(&self.build_rep(b, depth + 1)?),
        })
    }

    pub fn connection(&self, rep: &Representation, kind: ConnectionKind) -> Result<ConnectionMap> {
        match kind {
            ConnectionKind::Tractor => {
                tractor_connection(&self.alpha, rep).map_err(|e| e.at("tractor connection"))
            }
            ConnectionKind::Automorphism => automorphism_connection(&self.alpha, rep)
                .map_err(|e| e.at("automorphism connection")),
            ConnectionKind::Prolongation => {
                let t =
                    tractor_connection(&self.alpha, rep).map_err(|e| e.at("tractor connection"))?;
                Ok(prolong(&t, Schedule::Ascending)
                    .map_err(|e| e.at("prolongation"))?
                    .connection)
            }
            ConnectionKind::Custom => Err(BggError::Unsupported(
                "custom connections are not built from the catalog".into(),
            )),
        }
    }

    /// Structural checks: algebras, extension law, regularity, normality and
    /// equivariance of the curvature.
    pub fn structural_verdicts(&self) -> Vec<Verdict> {
        let mut out = Vec::new();
        let g = self.bundle.g.algebra.validate();
        out.push(Verdict::new(
            "g is a Lie algebra",
            g.passed,
            format!("dim {}", self.bundle.dim_g()),
        ));
        let k = self.bundle.k.algebra.validate();
        out.push(Verdict::new(
            "k is a Lie algebra",
            k.passed,
            format!("dim {}", self.bundle.dim_k()),
        ));
        let law = self.alpha.extension_law_residual();
        out.push(Verdict::new(
            "alpha satisfies the extension law",
            law.is_empty(),
            format!("{} violations", law.len()),
        ));
        let eq = self.alpha.curvature_equivariance_residual();
        out.push(Verdict::new(
            "curvature is h-equivariant",
            eq.is_empty(),
            format!("{} violations", eq.len()),
        ));
        match self.alpha.regularity_check() {
            Ok(r) => {
                let detail = match &r.min_homogeneity {
                    Some(h) => format!("minimal homogeneity {h}"),
                    None => "flat".to_string(),
                };
                out.push(Verdict::new("alpha is regular", r.passed, detail));
            }
            Err(e) => out.push(Verdict::new("alpha is regular", false, e.to_string())),
        }
        match self.alpha.is_normal() {
            Ok(n) => out.push(Verdict::new("alpha is normal", n, "")),
            Err(e) => out.push(Verdict::new("alpha is normal", false, e.to_string())),
        }
        out
    }

    /// Runs every fixture.
    pub fn check_fixtures(&self) -> Vec<Verdict> {
        let mut s = Session::new(self);
        self.fixtures.iter().map(|f| s.check(f)).collect()
    }

    /// Structural checks followed by every fixture.
    pub fn validate(&self) -> Vec<Verdict> {
        let mut v = self.structural_verdicts();
        v.extend(self.check_fixtures());
        v
    }
}

/// Caches representations, connections and solution spaces across fixtures.
pub struct Session<'a> {
    geo: &'a Geometry,
    reps: HashMap<String, Representation>,
    conns: HashMap<(String, &'static str), ConnectionMap>,
    sols: HashMap<(String, &'static str), SolutionSpace>,
    normals: HashMap<String, Subspace>,
}

impl<'a> Session<'a> {
    pub fn new(geo: &'a Geometry) -> Session<'a> {
        Session {
            geo,
            reps: HashMap::new(),
            conns: HashMap::new(),
            sols: HashMap::new(),
            normals: HashMap::new(),
        }
    }

    pub fn rep(&mut self, name: &str) -> Result<Representation> {
        if let Some(r) = self.reps.get(name) {
            return Ok(r.clone());
        }
        let r = self.geo.representation(name)?;
        self.reps.insert(name.to_string(), r.clone());
        Ok(r)
    }

    pub fn connection(&mut self, rep: &str, kind: ConnectionKind) -> Result<ConnectionMap> {
        let key = (rep.to_string(), kind.as_str());
        if let Some(c) = self.conns.get(&key) {
            return Ok(c.clone());
        }
        let r = self.rep(rep)?;
        let c = self.geo.connection(&r, kind)?;
        self.conns.insert(key, c.clone());
        Ok(c)
    }

    pub fn solutions(&mut self, rep: &str, kind: ConnectionKind) -> Result<SolutionSpace> {
        let key = (rep.to_string(), kind.as_str());
        if let Some(s) = self.sols.get(&key) {
            return Ok(s.clone());
        }
        let c = self.connection(rep, kind)?;
        let s = solve(&c).map_err(|e| e.at("solve"))?;
        self.sols.insert(key, s.clone());
        Ok(s)
    }

    pub fn normal(&mut self, rep: &str) -> Result<Subspace> {
        if let Some(s) = self.normals.get(rep) {
            return Ok(s.clone());
        }
        let r = self.rep(rep)?;
        let s = normal_solutions(&self.geo.alpha, &r).map_err(|e| e.at("normal solutions"))?;
        self.normals.insert(rep.to_string(), s.clone());
        Ok(s)
    }

    fn space(&mut self, rep: &str, space: SpaceRef) -> Result<Subspace> {
        match space {
            SpaceRef::Solutions(k) => Ok(self.solutions(rep, k)?.space),
            SpaceRef::Normal => self.normal(rep),
        }
    }

    pub fn check(&mut self, f: &Fixture) -> Verdict {
        match self.try_check(&f.check) {
            Ok((passed, detail)) => Verdict::new(&f.source, passed, detail),
            Err(e) => Verdict::new(&f.source, false, format!("error: {e}")),
        }
    }

    fn try_check(&mut self, c: &Check) -> Result<(bool, String)> {
        let geo = self.geo;
        match c {
            Check::Normalize {
                family,
                matches,
                up_to_gauge,
            } => {
                let n = normalize(&geo.gr_alpha, &geo.gauges)?;
                let mut ok = family.is_none_or(|f| f == n.family_dim);
                let same = n.alpha.alpha == geo.alpha.alpha;
                if *matches {
                    ok &= same;
                }
                let mut detail = format!(
                    "family {}, stored alpha {}",
                    n.family_dim,
                    if same { "reproduced" } else { "differs" }
                );
                if *up_to_gauge {
                    let mut orbit = 0;
                    for st in &n.steps {
                        let dirs = gauge_directions(geo, st.homogeneity, &st.unknowns)?;
                        orbit += dirs.dim();
                        ok &= dirs.contains_subspace(&st.solutions.homogeneous);
                    }
                    detail += &format!(", gauge orbit {orbit}");
                }
                Ok((ok, detail))
            }
            Check::Curvature { x, y, entries } => {
                let kappa = geo.alpha.curvature();
                let m = geo.bundle.defining.act(kappa.get(*x, *y));
                let mut expected = Matrix::zeros(m.rows(), m.cols());
                for (r, c, v) in entries {
                    if *r >= m.rows() || *c >= m.cols() {
                        return Err(BggError::Dimension(format!(
                            "curvature entry ({}, {}) out of range",
                            r + 1,
                            c + 1
                        )));
                    }
                    expected[(*r, *c)] = v.clone();
                }
                Ok((
                    m == expected,
                    format!("nonzero entries {}", matrix_entries(&m)),
                ))
            }
            Check::Solve {
                rep,
                kind,
                dim,
                normal,
                support,
                trace_free,
                alpha_image,
            } => {
                let sol = self.solutions(rep, *kind)?;
                let mut ok = sol.dim() == *dim;
                let mut detail = format!("dim {}", sol.dim());
                if let Some(nd) = normal {
                    let ns = self.normal(rep)?;
                    ok &= ns.dim() == *nd;
                    detail += &format!(", normal {}", ns.dim());
                }
                if let Some(sup) = support {
                    let s = sol.space.support();
                    ok &= &s == sup;
                    detail += &format!(", support {}", one_based_list(&s));
                }
                if let Some(tf) = trace_free {
                    let r = self.rep(rep)?;
                    let t = r.trace_direction.clone().ok_or_else(|| {
                        BggError::InvalidRepresentation(format!("{rep} has no trace direction"))
                    })?;
                    let line = Subspace::from_vectors(r.dim, &[t]);
                    let d = sol.space.sum(&line)?.dim() - 1;
                    ok &= d == *tf;
                    detail += &format!(", trace-free part {d}");
                }
                if *alpha_image {
                    let r = self.rep(rep)?;
                    let img = alpha_image_in(geo, &r)?;
                    let same = img == sol.space;
                    ok &= same;
                    detail += if same {
                        ", equals alpha(k)"
                    } else {
                        ", differs from alpha(k)"
                    };
                }
                Ok((ok, detail))
            }
            Check::Contains {
                rep,
                space,
                entries,
                only,
            } => {
                let s = self.space(rep, *space)?;
                if let Some((i, _)) = entries.iter().find(|(i, _)| *i >= s.ambient_dim) {
                    return Err(BggError::Dimension(format!(
                        "w{} exceeds dim {}",
                        i + 1,
                        s.ambient_dim
                    )));
                }
                let rows: Vec<usize> = if *only {
                    (0..s.ambient_dim).collect()
                } else {
                    entries.iter().map(|(i, _)| *i).collect()
                };
                let mut a = Matrix::zeros(rows.len(), s.dim());
                let mut b = vec![Scalar::zero(); rows.len()];
                for (r, &i) in rows.iter().enumerate() {
                    for (c, v) in s.basis.iter().enumerate() {
                        a[(r, c)] = v[i].clone();
                    }
                    if let Some((_, val)) = entries.iter().find(|(j, _)| *j == i) {
                        b[r] = val.clone();
                    }
                }
                let sol = solve_affine(&a, &b)?;
                Ok((!sol.is_empty(), format!("space of dim {}", s.dim())))
            }
            Check::Relation { rep, space, form } => {
                let s = self.space(rep, *space)?;
                let mut ok = s.dim() > 0;
                for v in &s.basis {
                    let mut acc = form.constant.clone();
                    for (var, c) in &form.terms {
                        let i = var
                            .strip_prefix('w')
                            .and_then(|i| i.parse::<usize>().ok())
                            .filter(|i| (1..=v.len()).contains(i))
                            .ok_or_else(|| BggError::Parse(format!("relation variable {var:?}")))?;
                        acc += &(c * &v[i - 1]);
                    }
                    ok &= acc.is_zero();
                }
                Ok((ok, format!("space of dim {}", s.dim())))
            }
            Check::Holonomy {
                rep,
                kind,
                dim,
                closed,
                support,
            } => {
                let conn = self.connection(rep, *kind)?;
                let h = holonomy(&conn, HOLONOMY_LIMIT)?;
                let mut ok = h.dim == *dim && (!closed || h.bracket_closed);
                let sup = h.support();
                if let Some(s) = support {
                    ok &= &sup == s;
                }
                let sup_s: Vec<String> = sup
                    .iter()
                    .map(|(r, c)| format!("{}:{}", r + 1, c + 1))
                    .collect();
                Ok((
                    ok,
                    format!(
                        "dim {}, closed {}, support {}",
                        h.dim,
                        h.bracket_closed,
                        sup_s.join(",")
                    ),
                ))
            }
            Check::Q { rep, coefficients } => {
                let r = self.rep(rep)?;
                let q = geo.bundle.kostant(&r)?.q_polynomial()?;
                let got: Vec<String> = q.coefficients.iter().map(Scalar::to_string).collect();
                Ok((
                    &q.coefficients == coefficients,
                    format!("coefficients [{}]", got.join(", ")),
                ))
            }
        }
    }
}

/// Leading-order action of the `h`-invariant part of `g_s` on the unknowns
/// of one normalization step: `(c, j) ↦ [Z, grα(eⱼ)]_c`.
pub fn gauge_directions(geo: &Geometry, s: i64, unknowns: &[(usize, usize)]) -> Result<Subspace> {
    let g = &geo.bundle.g;
    let n = g.dim();
    let grade_s = g.indices_of_grade(s);
    let iso = &geo.bundle.k.isotropy_indices;
    let mut cond = Matrix::zeros(iso.len() * n, grade_s.len());
    for (col, &z) in grade_s.iter().enumerate() {
        let zv = linalg::unit_vec(n, z);
        for (r, &h) in iso.iter().enumerate() {
            let b = g.algebra.bracket(&geo.gr_alpha.image(h), &zv);
            for (i, x) in b.into_iter().enumerate() {
                cond[(r * n + i, col)] = x;
            }
        }
    }
    let invariant = linalg::nullspace(&cond);
    let dirs: Vec<Vector> = invariant
        .basis
        .iter()
        .map(|t| {
            let mut zv = linalg::zero_vec(n);
            for (x, &z) in t.iter().zip(&grade_s) {
                zv[z] = x.clone();
            }
            unknowns
                .iter()
                .map(|&(c, j)| g.algebra.bracket(&zv, &geo.gr_alpha.image(j))[c].clone())
                .collect()
        })
        .collect();
    Ok(Subspace::from_vectors(unknowns.len(), &dirs))
}

/// Image of `α(k)` in a representation that is the adjoint of g or `gl(std)`.
pub fn alpha_image_in(geo: &Geometry, rep: &Representation) -> Result<Subspace> {
    let dim_k = geo.bundle.dim_k();
    let vecs: Vec<Vector> = if rep.dim == geo.bundle.dim_g() && rep.trace_direction.is_none() {
        (0..dim_k).map(|j| geo.alpha.image(j)).collect()
    } else if rep.trace_direction.is_some() {
        let n = geo.bundle.defining.dim;
        (0..dim_k)
            .map(|j| {
                let m = geo.alpha.matrix(j);
                let mut v = linalg::zero_vec(rep.dim);
                for r in 0..n {
                    for c in 0..n {
                        v[Representation::gl_index(n, r, c)] = m[(r, c)].clone();
                    }
                }
                v
            })
            .collect()
    } else {
        return Err(BggError::InvalidRepresentation(format!(
            "{} is not an adjoint representation",
            rep.name
        )));
    };
    Ok(Subspace::from_vectors(rep.dim, &vecs))
}

fn one_based_list(v: &[usize]) -> String {
    v.iter()
        .map(|i| (i + 1).to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn matrix_entries(m: &Matrix) -> String {
    let mut parts = Vec::new();
    for r in 0..m.rows() {
        for c in 0..m.cols() {
            if !m[(r, c)].is_zero() {
                parts.push(format!("m{}_{}={}", r + 1, c + 1, m[(r, c)]));
            }
        }
    }
    if parts.is_empty() {
        "none".into()
    } else {
        parts.join(" ")
    }
}

/// What [`run_pipeline`] computes.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub geometry: String,
    pub rep: String,
    pub connection: ConnectionKind,
    pub holonomy: bool,
    pub q: bool,
    pub timing: bool,
}

impl RunConfig {
    pub fn new(geometry: &str, rep: &str, connection: ConnectionKind) -> RunConfig {
        RunConfig {
            geometry: geometry.into(),
            rep: rep.into(),
            connection,
            holonomy: true,
            q: false,
            timing: false,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct HolonomySummary {
    pub dim: usize,
    pub bracket_closed: bool,
    /// One-based `(row, col)` entries.
    pub support: Vec<(usize, usize)>,
}

#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub geometry: String,
    pub representation: String,
    pub rep_dim: usize,
    pub connection: ConnectionKind,
    pub chain: Vec<usize>,
    pub solutions: Subspace,
    pub normal: Subspace,
    pub invariant: Subspace,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub holonomy: Option<HolonomySummary>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub q: Option<Vec<Scalar>>,
    pub verdicts: Vec<Verdict>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u128>,
}

impl RunReport {
    pub fn passed(&self) -> bool {
        self.verdicts.iter().all(|v| v.passed)
    }
}

/// Solves one representation and connection of a built-in geometry and runs
/// the fixtures that mention the representation.
pub fn run_pipeline(cfg: &RunConfig) -> Result<RunReport> {
    let start = Instant::now();
    let geo = load_example(&cfg.geometry)?;
    let mut s = Session::new(&geo);
    let rep = s.rep(&cfg.rep)?;
    let sol = s.solutions(&cfg.rep, cfg.connection)?;
    let normal = s.normal(&cfg.rep)?;
    let holonomy = if cfg.holonomy && rep.dim <= HOLONOMY_LIMIT {
        let conn = s.connection(&cfg.rep, cfg.connection)?;
        let h = holonomy(&conn, HOLONOMY_LIMIT).map_err(|e| e.at("holonomy"))?;
        let support = h
            .support()
            .into_iter()
            .map(|(r, c)| (r + 1, c + 1))
            .collect();
        Some(HolonomySummary {
            dim: h.dim,
            bracket_closed: h.bracket_closed,
            support,
        })
    } else {
        None
    };
    let q = if cfg.q {
        Some(
            geo.bundle
                .kostant(&rep)?
                .q_polynomial()
                .map_err(|e| e.at("q polynomial"))?
                .coefficients,
        )
    } else {
        None
    };
    let verdicts = geo
        .fixtures
        .iter()
        .filter(|f| f.rep() == Some(cfg.rep.as_str()))
        .map(|f| s.check(f))
        .collect();
    Ok(RunReport {
        geometry: geo.name.clone(),
        representation: cfg.rep.clone(),
        rep_dim: rep.dim,
        connection: cfg.connection,
        chain: sol.chain,
        solutions: sol.space,
        normal,
        invariant: sol.invariant,
        holonomy,
        q,
        verdicts,
        elapsed_ms: cfg.timing.then(|| start.elapsed().as_millis()),
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct RepSummary {
    pub name: String,
    pub dim: usize,
    pub connection: ConnectionKind,
    pub solutions: usize,
    pub normal: usize,
}

/// Structural checks, every fixture and a solution count per representation.
#[derive(Clone, Debug, Serialize)]
pub struct GeometryReport {
    pub geometry: String,
    pub title: String,
    pub structural: Vec<Verdict>,
    pub fixtures: Vec<Verdict>,
    pub representations: Vec<RepSummary>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u128>,
}

impl GeometryReport {
    pub fn passed(&self) -> bool {
        self.structural
            .iter()
            .chain(&self.fixtures)
            .all(|v| v.passed)
    }
}

/// Builds a [`GeometryReport`], summarizing each `[reps]` entry under `kind`.
pub fn geometry_report(
    geo: &Geometry,
    kind: ConnectionKind,
    timing: bool,
) -> Result<GeometryReport> {
    let start = Instant::now();
    let structural = geo.structural_verdicts();
    let mut s = Session::new(geo);
    let fixtures = geo.fixtures.iter().map(|f| s.check(f)).collect();
    let mut representations = Vec::new();
    for name in geo.rep_names() {
        let rep = s.rep(name)?;
        let sol = s.solutions(name, kind)?;
        let normal = s.normal(name)?.dim();
        representations.push(RepSummary {
            name: name.to_string(),
            dim: rep.dim,
            connection: kind,
            solutions: sol.dim(),
            normal,
        });
    }
    Ok(GeometryReport {
        geometry: geo.name.clone(),
        title: geo.title.clone(),
        structural,
        fixtures,
        representations,
        elapsed_ms: timing.then(|| start.elapsed().as_millis()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rep_expressions_parse() {
        assert_eq!(RepExpr::parse("std").unwrap(), RepExpr::Std);
        assert_eq!(
            RepExpr::parse("tensor(alt2(std), dual(x))").unwrap(),
            RepExpr::Tensor(
                Box::new(RepExpr::Alt2(Box::new(RepExpr::Std))),
                Box::new(RepExpr::Dual(Box::new(RepExpr::Named("x".into()))))
            )
        );
        assert!(RepExpr::parse("sym2(std").is_err());
        assert!(RepExpr::parse("frob(std)").is_err());
    }

    #[test]
    fn unknown_geometry_lists_names() {
        let e = load_example("nope").unwrap_err();
        let msg = e.to_string();
        assert!(
            msg.contains("projective-heis") && msg.contains("path-ode"),
            "{msg}"
        );
    }

    #[test]
    fn all_examples_parse() {
        for n in names() {
            let g = load_example(n).unwrap_or_else(|e| panic!("{n}: {e}"));
            assert_eq!(g.name, n);
            assert!(!g.fixtures.is_empty());
        }
    }

    #[test]
    fn grading_element_is_automatic() {
        let g = load_example("g2-rolling").unwrap();
        assert_eq!(g.bundle.dim_g(), 14);
        assert_eq!(g.bundle.g.depth, 3);
        let g = load_example("cr-tube").unwrap();
        assert_eq!(g.bundle.dim_g(), 15);
        assert_eq!(g.bundle.g.depth, 2);
    }

    #[test]
    fn stars_are_solved_from_membership() {
        let g = load_example("cr-tube").unwrap();
        let m = g.alpha.matrix(1);
        // (2,4) entry is −conj of (1,2) = 5/24.
        assert_eq!(m[(1, 3)], Scalar::frac(-5, 24));
    }

    #[test]
    fn matches_projective_test_fixture() {
        let g = load_example("projective-heis").unwrap();
        let fixed = crate::testutil::projective_fixed();
        for j in 0..3 {
            assert_eq!(g.alpha.matrix(j), fixed.matrix(j));
        }
    }

    #[test]
    fn structural_checks_pass() {
        for n in names() {
            let g = load_example(n).unwrap();
            for v in g.structural_verdicts() {
                assert!(v.passed, "{n}: {} ({})", v.fixture, v.detail);
            }
        }
    }
}
