//! Invariant sweeps shared by the acceptance and property tests.
#![allow(dead_code)]

use bggkit::catalog::{self, Geometry, Session};
use bggkit::connection::{
    prolong, prolongation_residual, tractor_connection, ConnectionKind, Schedule,
};
use bggkit::coords::{max_abs_diff, numeric_derivative, to_complex_matrix, ExpAction};
use bggkit::lie::Representation;
use bggkit::linalg::is_zero_vec;
use bggkit::rational::Rational;
use bggkit::solutions::{couple, holonomy, normal_solutions, stability};
use bggkit::{Matrix, Result, Scalar};
use nalgebra::DMatrix;

/// Outcome of one sweep: failures are listed, an empty list passes.
#[derive(Default)]
pub struct Sweep {
    pub checked: usize,
    pub failures: Vec<String>,
}

impl Sweep {
    pub fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    pub fn error(&mut self, what: String, e: bggkit::BggError) {
        self.checked += 1;
        self.failures.push(format!("{what}: {e}"));
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn summary(&self) -> String {
        if self.failures.is_empty() {
            format!("{} checks", self.checked)
        } else {
            format!(
                "{} of {} checks failed: {}",
                self.failures.len(),
                self.checked,
                self.failures.join("; ")
            )
        }
    }
}

pub fn geometries() -> Vec<Geometry> {
    catalog::names()
        .into_iter()
        .map(|n| catalog::load_example(n).expect("catalog geometry"))
        .collect()
}

pub fn reps(geo: &Geometry) -> Vec<Representation> {
    geo.rep_names()
        .into_iter()
        .map(|n| geo.representation(n).expect("catalog rep"))
        .collect()
}

/// ∂*∘∂* = 0 and ∂∘∂ = 0 in every degree, and `Q(□)·□ = id` on `Im ∂*` in
/// degree 0.
pub fn kostant_identities(geo: &Geometry, rep: &Representation, sweep: &mut Sweep) {
    let tag = format!("{}/{}", geo.name, rep.name);
    let kc = match geo.bundle.kostant(rep) {
        Ok(k) => k,
        Err(e) => return sweep.error(tag, e),
    };
    for k in 2..=kc.m {
        match (kc.codifferential(k), kc.codifferential(k - 1)) {
            (Ok(a), Ok(b)) => sweep.record(b.matmul(&a).is_zero(), || {
                format!("{tag}: ∂*∂* ≠ 0 in degree {k}")
            }),
            (Err(e), _) | (_, Err(e)) => sweep.error(tag.clone(), e),
        }
    }
    for k in 0..kc.m.saturating_sub(1) {
        let d = kc.differential(k + 1).matmul(&kc.differential(k));
        sweep.record(d.is_zero(), || format!("{tag}: ∂∂ ≠ 0 in degree {k}"));
    }
    match kc.q_polynomial().and_then(|q| kc.verify_q(0, &q)) {
        Ok(ok) => sweep.record(ok, || format!("{tag}: Q(□)□ ≠ id")),
        Err(e) => sweep.error(tag, e),
    }
}

/// Normality, regularity and equivariance of the stored extension.
pub fn extension_properties(geo: &Geometry, sweep: &mut Sweep) {
    let a = &geo.alpha;
    let tag = geo.name.clone();
    match a.normality_residual() {
        Ok(r) => sweep.record(r.iter().all(|v| is_zero_vec(v)), || {
            format!("{tag}: normality residual")
        }),
        Err(e) => sweep.error(tag.clone(), e),
    }
    match a.regularity_check() {
        Ok(r) => sweep.record(r.passed, || format!("{tag}: not regular")),
        Err(e) => sweep.error(tag.clone(), e),
    }
    sweep.record(a.curvature_equivariance_residual().is_empty(), || {
        format!("{tag}: curvature not h-equivariant")
    });
    sweep.record(a.extension_law_residual().is_empty(), || {
        format!("{tag}: extension law")
    });
}

/// `R^{ρ∘α} = ρ∘κ` and the algebraic Bianchi identity.
pub fn curvature_properties(geo: &Geometry, rep: &Representation, sweep: &mut Sweep) {
    let tag = format!("{}/{}", geo.name, rep.name);
    let conn = match tractor_connection(&geo.alpha, rep) {
        Ok(c) => c,
        Err(e) => return sweep.error(tag, e),
    };
    let r = conn.curvature();
    let kappa = geo.alpha.curvature();
    let n = geo.bundle.dim_k();
    let mut same = true;
    for i in 0..n {
        for j in 0..n {
            same &= r.get(i, j) == &rep.act(kappa.get(i, j));
        }
    }
    sweep.record(same, || format!("{tag}: R ≠ ρ∘κ"));
    sweep.record(conn.bianchi_residual(&r).is_empty(), || {
        format!("{tag}: Bianchi sum")
    });
}

/// Prolongation post-condition, homogeneity of Ψ and schedule independence.
/// The ascending schedule comes from the session cache.
pub fn prolongation_properties(
    geo: &Geometry,
    session: &mut Session,
    rep: &str,
    sweep: &mut Sweep,
) {
    let tag = format!("{}/{}", geo.name, rep);
    let mut run = || -> Result<(bool, bool, bool)> {
        let up = session.connection(rep, ConnectionKind::Prolongation)?;
        let t = session.connection(rep, ConnectionKind::Tractor)?;
        let down = prolong(&t, Schedule::Descending)?;
        let res = prolongation_residual(&up)?;
        let post = res.iter().all(Matrix::is_zero);
        let hom = up
            .psi_min_homogeneity()
            .is_none_or(|h| h >= Rational::from_int(1));
        Ok((post, hom, up.psi == down.connection.psi))
    };
    match run() {
        Ok((post, hom, same)) => {
            sweep.record(post, || format!("{tag}: ∂*R ≠ 0 after prolongation"));
            sweep.record(hom, || format!("{tag}: Ψ has homogeneity < 1"));
            sweep.record(same, || format!("{tag}: Ψ depends on the schedule"));
        }
        Err(e) => sweep.error(tag, e),
    }
}

/// Largest representation whose holonomy closure the stability sweep computes.
pub const SWEEP_HOLONOMY_DIM: usize = 16;

/// Φ-invariance, curvature and holonomy annihilation of `S^∞`.
pub fn stability_properties(
    geo: &Geometry,
    session: &mut Session,
    rep: &str,
    kind: ConnectionKind,
    sweep: &mut Sweep,
) {
    let tag = format!("{}/{}/{}", geo.name, rep, kind.as_str());
    let run = |s: &mut Session| -> Result<_> {
        let conn = s.connection(rep, kind)?;
        let sol = s.solutions(rep, kind)?;
        let hol = if conn.dim_v() <= SWEEP_HOLONOMY_DIM {
            Some(holonomy(&conn, catalog::HOLONOMY_LIMIT)?)
        } else {
            None
        };
        Ok(stability(&conn, &sol.space, hol.as_ref()))
    };
    match run(session) {
        Ok(st) => sweep.record(
            st.phi_invariant && st.curvature_annihilates && st.holonomy_annihilates != Some(false),
            || format!("{tag}: {st:?}"),
        ),
        Err(e) => sweep.error(tag, e),
    }
}

/// α(k) ⊆ S^∞ of the automorphism connection on the adjoint representation.
pub fn automorphisms_contain_alpha(geo: &Geometry, sweep: &mut Sweep) {
    let tag = format!("{}/adjoint", geo.name);
    let run = || -> Result<bool> {
        let mut s = Session::new(geo);
        let sol = s.solutions("adjoint", ConnectionKind::Automorphism)?;
        let rep = s.rep("adjoint")?;
        Ok(sol
            .space
            .contains_subspace(&catalog::alpha_image_in(geo, &rep)?))
    };
    match run() {
        Ok(ok) => sweep.record(ok, || format!("{tag}: α(k) ⊄ S^∞")),
        Err(e) => sweep.error(tag, e),
    }
}

/// Tensor products of normal solutions lie in `S^∞` of the tensor product.
/// Pairs whose tensor product exceeds the holonomy limit are skipped.
pub fn coupling_closure(geo: &Geometry, sweep: &mut Sweep) {
    let mut normal = Vec::new();
    for r in reps(geo)
        .into_iter()
        .filter(|r| r.dim * r.dim <= catalog::HOLONOMY_LIMIT * 2)
    {
        match normal_solutions(&geo.alpha, &r) {
            Ok(n) if n.dim() > 0 => normal.push((r, n)),
            Ok(_) => {}
            Err(e) => sweep.error(format!("{}/{}", geo.name, r.name), e),
        }
    }
    for (v, nv) in &normal {
        for (w, nw) in &normal {
            if v.dim * w.dim > catalog::HOLONOMY_LIMIT {
                continue;
            }
            let tag = format!("{}/{}⊗{}", geo.name, v.name, w.name);
            let run = || -> Result<bool> {
                let sv = couple(
                    &geo.alpha,
                    v,
                    w,
                    &nv.basis[0],
                    nw.basis.last().expect("nonzero"),
                )?;
                let space =
                    bggkit::solutions::solve(&tractor_connection(&geo.alpha, &v.tensor(w))?)?.space;
                Ok(space.contains(&sv))
            };
            match run() {
                Ok(ok) => sweep.record(ok, || format!("{tag}: coupled solution not parallel")),
                Err(e) => sweep.error(tag, e),
            }
        }
    }
}

/// `exp(−tA)` restricted to `S^∞`: derivative at 0 and the group law.
pub fn exp_identities(conn_phi: &Matrix, sweep: &mut Sweep, tag: &str) {
    let check = || -> Result<(bool, bool, bool)> {
        let e = ExpAction::new(conn_phi, false)?;
        let n = conn_phi.rows();
        let id_ok = max_abs_diff(&e.eval(0.0), &DMatrix::identity(n, n)) < 1e-12;
        let d_ok = match e.derivative_at_zero() {
            Some(d) => d == -conn_phi,
            None => {
                max_abs_diff(&numeric_derivative(&e, 1e-6), &-to_complex_matrix(conn_phi)) < 1e-8
            }
        };
        let mut g_ok = true;
        for (t, u) in [(0.3, 0.9), (-1.2, 0.5), (0.8, -0.25)] {
            let (et, eu) = (e.eval(t), e.eval(u));
            let scale = 1.0 + et.norm() * eu.norm();
            g_ok &= max_abs_diff(&(&et * &eu), &e.eval(t + u)) < 1e-8 * scale;
        }
        Ok((id_ok, d_ok, g_ok))
    };
    match check() {
        Ok((a, b, c)) => {
            sweep.record(a, || format!("{tag}: exp(0) ≠ id"));
            sweep.record(b, || format!("{tag}: derivative at 0"));
            sweep.record(c, || format!("{tag}: group law"));
        }
        Err(e) => sweep.error(tag.to_string(), e),
    }
}

pub fn scalar_vec(v: &[i64]) -> Vec<Scalar> {
    v.iter().map(|&x| Scalar::from_int(x)).collect()
}
