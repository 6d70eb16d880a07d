//! One verdict per acceptance criterion, printed by `acceptance_summary`.

mod common;

use std::sync::{Mutex, OnceLock};
use std::time::{Duration, Instant};

use bggkit::catalog::{load_example, Fixture, Geometry, Session};
use bggkit::connection::ConnectionKind;
use bggkit::coords::{exp_action, normal_coordinate_polynomial, MPoly, SolutionExpression};
use bggkit::extension::{normalize, GaugeConstraint};
use bggkit::linalg::unit_vec;
use bggkit::solutions::normal_solutions;
use bggkit::{Rational, Scalar};
use common::Sweep;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

struct Outcome {
    id: &'static str,
    passed: bool,
    detail: String,
}

fn outcome(id: &'static str, checks: Vec<(String, bool)>) -> Outcome {
    let failed: Vec<String> = checks
        .iter()
        .filter(|c| !c.1)
        .map(|c| c.0.clone())
        .collect();
    let detail = if failed.is_empty() {
        format!("{} checks", checks.len())
    } else {
        format!("failed: {}", failed.join("; "))
    };
    Outcome {
        id,
        passed: failed.is_empty(),
        detail,
    }
}

fn sweep_outcome(id: &'static str, s: Sweep) -> Outcome {
    Outcome {
        id,
        passed: s.passed(),
        detail: s.summary(),
    }
}

/// Runs fixture lines against a geometry, one check per line.
fn fixtures(geo: &Geometry, session: &mut Session, lines: &[&str]) -> Vec<(String, bool)> {
    lines
        .iter()
        .map(|line| {
            let label = format!("{}: {line}", geo.name);
            match Fixture::parse(line, &geo.bundle.k.algebra.names) {
                Ok(f) => {
                    let v = session.check(&f);
                    (
                        if v.passed {
                            label
                        } else {
                            format!("{label} ({})", v.detail)
                        },
                        v.passed,
                    )
                }
                Err(e) => (format!("{label} ({e})"), false),
            }
        })
        .collect()
}

fn geometry(name: &str) -> Geometry {
    load_example(name).expect("catalog geometry")
}

type Shared = Vec<(&'static Geometry, Mutex<Session<'static>>)>;

/// One session per catalog geometry, so expensive connections are built once.
fn shared() -> &'static Shared {
    static SHARED: OnceLock<Shared> = OnceLock::new();
    SHARED.get_or_init(|| {
        common::geometries()
            .into_iter()
            .map(|g| {
                let g: &'static Geometry = Box::leak(Box::new(g));
                (g, Mutex::new(Session::new(g)))
            })
            .collect()
    })
}

fn with_session<R>(name: &str, f: impl FnOnce(&Geometry, &mut Session<'static>) -> R) -> R {
    let (g, m) = shared()
        .iter()
        .find(|(g, _)| g.name == name)
        .expect("catalog geometry");
    let mut s = m.lock().unwrap_or_else(|e| e.into_inner());
    f(g, &mut s)
}

fn each_session(mut f: impl FnMut(&Geometry, &mut Session<'static>)) {
    for (g, m) in shared() {
        let mut s = m.lock().unwrap_or_else(|e| e.into_inner());
        f(g, &mut s);
    }
}

fn criterion_1() -> Outcome {
    with_session("projective-heis", |geo, s| {
        outcome(
            "1",
            fixtures(
                geo,
                s,
                &[
                    "solve std tractor dim=2 normal=2 support=3,4",
                    "holonomy std tractor dim=2 closed support=4:1,4:2",
                ],
            ),
        )
    })
}

fn criterion_2() -> Outcome {
    with_session("projective-heis", |geo, s| {
        outcome(
            "2",
            fixtures(
                geo,
                s,
                &[
                    "solve dual(std) prolongation dim=3 normal=3",
                    "solve sym2(std) prolongation dim=3",
                    "solve sym2(dual(std)) prolongation dim=6",
                    "solve alt2(std) prolongation dim=5 normal=3",
                ],
            ),
        )
    })
}

fn criterion_3() -> Outcome {
    with_session("projective-heis", |geo, s| {
        outcome(
            "3",
            fixtures(geo, s, &["solve gl(std) automorphism dim=8 trace_free=7"]),
        )
    })
}

fn criterion_4() -> Outcome {
    with_session("projective-heis", |geo, s| {
        outcome(
            "4",
            fixtures(
                geo,
                s,
                &[
                    "q std 1/3",
                    "q dual(std) -1",
                    "q alt2(std) 1/2",
                    "q gl(std) 3/2 -9/16 1/16",
                ],
            ),
        )
    })
}

/// `Ρ^k_j` of the normalized projective extension, as closed forms in the
/// free `g₀` entries `a₁…a₁₅`.
fn rho_oracle(a: &[Rational; 16]) -> [[Rational; 3]; 3] {
    let h = Rational::new(1, 2);
    let two = Rational::from_int(2);
    let p11 = &a[13] * &a[3]
        + &a[7] * &a[2]
        + &a[14] * &a[9]
        + &a[1] * &a[1]
        + &a[1] * &a[8]
        + &a[8] * &a[8];
    let p21 = &h
        * &(&a[13] * &a[5]
            + &a[7] * &a[4]
            + &a[14] * &a[11]
            + &a[14] * &a[3]
            + &a[15] * &a[9]
            + &a[1] * &a[2]
            + &a[1] * &a[10]
            + &two * &(&a[8] * &a[10])
            - a[3].clone());
    let p31 = &h
        * &(&a[13] * &a[6] + &a[7] * &a[5] + &a[2] * &a[9] + &a[14] * &a[12] - &a[1] * &a[11]
            + &a[1] * &a[3]
            - &two * &(&a[8] * &a[11])
            + &a[9] * &a[10]);
    let p22 = -(&a[4] * &a[1]) - &a[4] * &a[8]
        + &a[14] * &a[5]
        + &a[15] * &a[11]
        + &a[2] * &a[2]
        + &a[2] * &a[10]
        + &a[10] * &a[10]
        - a[5].clone();
    let p32 = &h
        * &(&a[4] * &a[9] + &a[14] * &a[6] + &a[15] * &a[12] - &a[1] * &a[5] - &a[2] * &a[11]
            + &a[2] * &a[3]
            - &a[11] * &a[10]
            - &a[10] * &a[3]
            - a[6].clone());
    let p33 = &a[8] * &a[6]
        + &a[9] * &a[5]
        + &a[11] * &a[11]
        + &a[11] * &a[3]
        + &a[12] * &a[10]
        + &a[3] * &a[3];
    [
        [p11.clone(), p21.clone(), p31.clone()],
        [p21, p22, p32.clone()],
        [p31, p32, p33],
    ]
}

/// `g₀` block of `α(e_k)` as `[k][row][col]`.
fn a_pattern(a: &[Rational; 16]) -> [[[Rational; 3]; 3]; 3] {
    let mut t: [[[Rational; 3]; 3]; 3] = Default::default();
    let mut set = |r: usize, c: usize, coeffs: [Rational; 3]| {
        for (k, x) in coeffs.into_iter().enumerate() {
            t[k][r][c] = x;
        }
    };
    let n = |x: &Rational| -x.clone();
    set(0, 0, [a[1].clone(), a[2].clone(), a[3].clone()]);
    set(0, 1, [a[2].clone(), a[4].clone(), a[5].clone()]);
    set(0, 2, [a[3].clone(), a[5].clone(), a[6].clone()]);
    set(1, 0, [a[7].clone(), n(&(&a[1] + &a[8])), a[9].clone()]);
    set(
        1,
        1,
        [n(&(&a[1] + &a[8])), n(&(&a[2] + &a[10])), a[11].clone()],
    );
    set(1, 2, [a[9].clone(), a[11].clone(), a[12].clone()]);
    set(2, 0, [a[13].clone(), a[14].clone(), a[8].clone()]);
    set(
        2,
        1,
        [
            &a[14] - &Rational::from_int(1),
            a[15].clone(),
            a[10].clone(),
        ],
    );
    set(2, 2, [a[8].clone(), a[10].clone(), n(&(&a[3] + &a[11]))]);
    t
}

fn criterion_5() -> Outcome {
    let mut checks = Vec::new();

    let geo = geometry("projective-heis");
    let names = &geo.bundle.k.algebra.names;
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for tuple in 0..5 {
        let mut a: [Rational; 16] = Default::default();
        for x in a.iter_mut().skip(1) {
            *x = Rational::new(rng.gen_range(-4..=4), rng.gen_range(1..=3));
        }
        let mut gauges = vec![GaugeConstraint::parse("all: m11 = 0", names).expect("gauge")];
        for (k, block) in a_pattern(&a).iter().enumerate() {
            for (r, row) in block.iter().enumerate() {
                for (c, x) in row.iter().enumerate() {
                    gauges.push(GaugeConstraint {
                        target: Some(k),
                        terms: vec![(r + 1, c + 1, Scalar::one())],
                        value: Scalar::from(x.clone()),
                    });
                }
            }
        }
        let ok = match normalize(&geo.gr_alpha, &gauges) {
            Ok(n) => {
                let rho = rho_oracle(&a);
                n.family_dim == 0
                    && rho.iter().enumerate().all(|(k, row)| {
                        let m = n.alpha.matrix(k);
                        row.iter()
                            .enumerate()
                            .all(|(j, p)| m[(0, j + 1)] == Scalar::from(p.clone()))
                    })
            }
            Err(_) => false,
        };
        checks.push((format!("projective Ρ tuple {}", tuple + 1), ok));
    }

    let cp = geometry("cprojective");
    let family = normalize(&cp.gr_alpha, &cp.gauges).map(|n| n.family_dim);
    checks.push((
        format!("c-projective family dimension {family:?}, expected 1"),
        matches!(family, Ok(1)),
    ));

    let cr = geometry("cr-tube");
    let ok = match normalize(&cr.gr_alpha, &cr.gauges) {
        Ok(n) => {
            let entry = |k: usize, r: usize, c: usize| {
                let col: Vec<Scalar> = (0..n.correction.rows())
                    .map(|i| n.correction[(i, k)].clone())
                    .collect();
                cr.bundle.defining.act(&col)[(r, c)].clone()
            };
            let i = Scalar::i();
            let expected = [
                (0, 0, 0, &Scalar::frac(1, 24) * &i),
                (0, 0, 3, &Scalar::frac(13, 576) * &i),
                (1, 0, 1, Scalar::frac(5, 24)),
                (0, 1, 1, &Scalar::frac(-1, 6) * &i),
                (0, 2, 2, &Scalar::frac(1, 12) * &i),
            ];
            expected.iter().all(|(k, r, c, v)| &entry(*k, *r, *c) == v)
        }
        Err(_) => false,
    };
    checks.push((
        "CR correction entries 1/24, 5/24, 13/576, −1/6, 1/12".into(),
        ok,
    ));
    outcome("5", checks)
}

fn criterion_6() -> Outcome {
    with_session("g2-rolling", |geo, s| criterion_6_in(geo, s))
}

fn criterion_6_in(geo: &Geometry, s: &mut Session) -> Outcome {
    let start = Instant::now();
    let mut checks = fixtures(geo, s, &["solve sym2_adjoint prolongation dim=22 normal=2"]);
    let elapsed = start.elapsed();
    checks.push((
        format!("S²(ad) in {:.1} s, limit 120 s", elapsed.as_secs_f64()),
        elapsed < Duration::from_secs(120),
    ));
    checks.extend(fixtures(
        geo,
        s,
        &[
            "curvature e1 e4 m2_3=8/9 m3_2=-8/9 m5_6=-8/9 m6_5=8/9",
            "curvature e4 e2 m2_2=8/9 m3_3=-8/9 m5_5=8/9 m6_6=-8/9",
            "solve std tractor dim=1 normal=1",
            "contains std tractor w1=4/9 w7=1",
            "holonomy std tractor dim=8 closed",
            "solve sym2(std) prolongation dim=2",
            "solve alt2(std) prolongation dim=7 normal=1",
            "relation alt2(std) normal w3 + r2*w4",
        ],
    ));
    outcome("6", checks)
}

fn criterion_7() -> Outcome {
    let mut checks = Vec::new();
    checks.extend(with_session("cr-tube", |cr, s| {
        fixtures(
            cr,
            s,
            &[
                "solve std prolongation dim=0",
                "solve dual(std) prolongation dim=0",
                "solve conj(std) prolongation dim=0",
                "holonomy std tractor dim=15 closed",
                "solve sym2(std) prolongation dim=4 normal=0",
                "contains sym2(std) prolongation w1=1 w7=24/11 w10=-576/11",
                "solve adjoint automorphism dim=7 alpha_image",
                "solve adjoint prolongation dim=7 alpha_image",
                "solve alt2_tensor prolongation dim=9 normal=1",
                "normal_contains alt2_tensor only w6=1 w11=-1 w16=1 w21=1 w26=-1 w31=1",
            ],
        )
    }));
    checks.extend(with_session("lagrangian-contact", |lc, s| {
        fixtures(
            lc,
            s,
            &[
                "solve std prolongation dim=0",
                "solve dual(std) prolongation dim=0",
                "holonomy std tractor dim=15 closed",
                "solve sym2(std) prolongation dim=4 normal=0",
                "contains sym2(std) prolongation w1=1 w7=-12/11 w10=-144/11",
                "solve adjoint automorphism dim=7 alpha_image",
                "solve adjoint prolongation dim=7 alpha_image",
                "solve alt2_tensor prolongation dim=9 normal=1",
                "normal_contains alt2_tensor only w5=1 w12=1 w15=1 w22=1 w25=1 w34=1",
            ],
        )
    }));
    outcome("7", checks)
}

fn criterion_8() -> Outcome {
    with_session("path-ode", |geo, s| {
        outcome(
            "8",
            fixtures(
                geo,
                s,
                &[
                    "solve std tractor dim=1 normal=1",
                    "solve dual(std) tractor dim=3 normal=3",
                    "holonomy std tractor dim=3 closed support=4:1,4:2,4:3",
                    "solve sym2(std) prolongation dim=1",
                    "solve alt2(std) prolongation dim=3",
                    "solve sym2(dual(std)) prolongation dim=8 normal=6",
                    "solve alt2(dual(std)) prolongation dim=3 normal=3",
                    "solve gl(std) prolongation dim=10 normal=4",
                ],
            ),
        )
    })
}

fn close(a: Complex64, b: f64) -> bool {
    (a - b).norm() < 1e-10 * (1.0 + b.abs())
}

fn criterion_9() -> Outcome {
    let mut checks = Vec::new();
    let geo = geometry("projective-heis");
    let mut s = Session::new(&geo);
    let mut rng = ChaCha8Rng::seed_from_u64(11);

    let std_ok = (|| -> bggkit::Result<bool> {
        let conn = s.connection("std", ConnectionKind::Tractor)?;
        let sol = s.solutions("std", ConnectionKind::Tractor)?;
        let e = SolutionExpression::new(&conn, &sol.space, &geo.factors)?;
        let mut ok = e.dim() == 2;
        for _ in 0..10 {
            let x: Vec<f64> = (0..3).map(|_| rng.gen_range(-2.0..2.0)).collect();
            let w3 = e.evaluate(&unit_vec(4, 2), &x)?;
            let w4 = e.evaluate(&unit_vec(4, 3), &x)?;
            let expect3 = [0.0, 0.0, x[0].exp(), x[0].sinh()];
            let expect4 = [0.0, 0.0, 0.0, (-x[0]).exp()];
            ok &= (0..4).all(|i| close(w3[i], expect3[i]) && close(w4[i], expect4[i]));
        }
        Ok(ok)
    })();
    checks.push((
        "projective standard closed form".into(),
        matches!(std_ok, Ok(true)),
    ));

    let dual_ok = (|| -> bggkit::Result<bool> {
        let conn = s.connection("dual", ConnectionKind::Tractor)?;
        let sol = s.solutions("dual", ConnectionKind::Tractor)?;
        let e = SolutionExpression::new(&conn, &sol.space, &geo.factors)?;
        let mut ok = true;
        for _ in 0..10 {
            let x: Vec<f64> = (0..3).map(|_| rng.gen_range(-2.0..2.0)).collect();
            let v: Vec<Scalar> = (0..3)
                .map(|_| Scalar::frac(rng.gen_range(-3000..=3000), 1000))
                .chain([Scalar::zero()])
                .collect();
            let w: Vec<f64> = v.iter().map(|t| t.to_complex().re).collect();
            let got = e.evaluate(&v, &x)?;
            let (c, sh, m) = (x[0].cosh(), x[0].sinh(), x[1] * (-x[0]).exp());
            let expect = [
                w[0] * c + w[1] * sh + w[2] * m,
                w[0] * sh + w[1] * c - w[2] * m,
                w[2] * (-x[0]).exp(),
                0.0,
            ];
            ok &= (0..4).all(|i| close(got[i], expect[i]));
        }
        Ok(ok)
    })();
    checks.push((
        "projective dual closed form".into(),
        matches!(dual_ok, Ok(true)),
    ));

    let path = geometry("path-ode");
    let mut ps = Session::new(&path);
    let path_ok = (|| -> bggkit::Result<bool> {
        let conn = ps.connection("dual", ConnectionKind::Tractor)?;
        let sol = ps.solutions("dual", ConnectionKind::Tractor)?;
        let e = SolutionExpression::new(&conn, &sol.space, &path.factors)?;
        let nv = e.param_names.len();
        let x = |i: usize| MPoly::var(nv, i);
        // c₁ + x₃c₂ + (½x₃x₄ + x₁)c₃ in the first slot
        let expected = [
            MPoly::constant(nv, Scalar::one()),
            x(2),
            x(0).add(&x(2).mul(&x(3)).scale(&Scalar::frac(1, 2))),
        ];
        let mut ok = true;
        for (j, want) in expected.iter().enumerate() {
            ok &= &e.evaluate_symbolic(&unit_vec(4, j))?[0] == want;
        }
        Ok(ok)
    })();
    checks.push(("path dual polynomial".into(), matches!(path_ok, Ok(true))));

    let ncp = (|| -> bggkit::Result<bool> {
        let std = s.rep("std")?;
        let normal = normal_solutions(&geo.alpha, &std)?;
        let nu = normal.combine(&[Scalar::from_int(2), Scalar::from_int(-3)]);
        let p = normal_coordinate_polynomial(&geo.alpha, &std, &nu)?;
        let mut ok =
            p.iter().all(|q| q.degree().unwrap_or(0) == 0) && p[0].is_zero() && p[1].is_zero();
        ok &= !p[2].is_zero() && !p[3].is_zero();
        let dual = s.rep("dual")?;
        let c = [
            Scalar::from_int(5),
            Scalar::from_int(7),
            Scalar::from_int(-2),
            Scalar::zero(),
        ];
        let p = normal_coordinate_polynomial(&geo.alpha, &dual, &c)?;
        ok &= p.iter().all(|q| q.degree().unwrap_or(0) <= 1);
        ok &= (
            p[0].coeff(&[0, 0, 0]),
            p[0].coeff(&[1, 0, 0]),
            p[0].coeff(&[0, 1, 0]),
            p[0].coeff(&[0, 0, 1]),
        ) == (
            Scalar::from_int(5),
            Scalar::from_int(7),
            Scalar::from_int(-2),
            Scalar::zero(),
        );
        Ok(ok)
    })();
    checks.push((
        "normal-coordinate polynomial patterns".into(),
        matches!(ncp, Ok(true)),
    ));
    outcome("9", checks)
}

fn criterion_a() -> Outcome {
    let mut sw = Sweep::default();
    for geo in common::geometries() {
        for rep in common::reps(&geo) {
            common::kostant_identities(&geo, &rep, &mut sw);
        }
    }
    sweep_outcome("A", sw)
}

fn criterion_b() -> Outcome {
    let mut sw = Sweep::default();
    for geo in common::geometries() {
        common::extension_properties(&geo, &mut sw);
        if let Ok(n) = normalize(&geo.gr_alpha, &geo.gauges) {
            sw.record(n.alpha.is_normal().unwrap_or(false), || {
                format!("{}: normalized extension not normal", geo.name)
            });
            sw.record(
                n.alpha
                    .regularity_check()
                    .map(|r| r.passed)
                    .unwrap_or(false),
                || format!("{}: normalized extension not regular", geo.name),
            );
            sw.record(n.alpha.curvature_equivariance_residual().is_empty(), || {
                format!("{}: normalized curvature not h-equivariant", geo.name)
            });
        } else {
            sw.record(false, || format!("{}: normalization failed", geo.name));
        }
    }
    sweep_outcome("B", sw)
}

fn criterion_c() -> Outcome {
    let mut sw = Sweep::default();
    for geo in common::geometries() {
        for rep in common::reps(&geo) {
            common::curvature_properties(&geo, &rep, &mut sw);
        }
    }
    sweep_outcome("C", sw)
}

fn criterion_d() -> Outcome {
    let mut sw = Sweep::default();
    each_session(|geo, s| {
        for rep in geo.rep_names() {
            common::prolongation_properties(geo, s, rep, &mut sw);
        }
    });
    sweep_outcome("D", sw)
}

fn criterion_e() -> Outcome {
    let mut sw = Sweep::default();
    each_session(|geo, s| {
        for rep in geo.rep_names() {
            common::stability_properties(geo, s, rep, ConnectionKind::Prolongation, &mut sw);
        }
        common::stability_properties(geo, s, "adjoint", ConnectionKind::Automorphism, &mut sw);
        common::automorphisms_contain_alpha(geo, &mut sw);
    });
    sweep_outcome("E", sw)
}

fn criterion_f() -> Outcome {
    let mut sw = Sweep::default();
    for geo in common::geometries() {
        common::coupling_closure(&geo, &mut sw);
    }
    sweep_outcome("F", sw)
}

fn criterion_g() -> Outcome {
    let mut sw = Sweep::default();
    each_session(|geo, s| {
        let n = geo.bundle.dim_k();
        let mut directions: Vec<Vec<Scalar>> = (0..n).map(|j| unit_vec(n, j)).collect();
        directions.push((0..n).map(|j| Scalar::frac(j as i64 % 3 - 1, 2)).collect());
        for rep in geo.rep_names() {
            let Ok(conn) = s.connection(rep, ConnectionKind::Prolongation) else {
                continue;
            };
            let Ok(sol) = s.solutions(rep, ConnectionKind::Prolongation) else {
                continue;
            };
            if sol.space.dim() == 0 {
                continue;
            }
            for (d, x) in directions.iter().enumerate() {
                let tag = format!("{}/{rep}/direction {}", geo.name, d + 1);
                match exp_action(&conn, &sol.space, x, false) {
                    Ok(_) => {
                        let a = sol.space.restrict(&conn.phi_of(x)).expect("invariant");
                        common::exp_identities(&a, &mut sw, &tag);
                    }
                    Err(e) => sw.error(tag, e),
                }
            }
        }
    });
    sweep_outcome("G", sw)
}

fn results() -> &'static [Outcome] {
    static RESULTS: OnceLock<Vec<Outcome>> = OnceLock::new();
    RESULTS.get_or_init(|| {
        // criterion 6 first, so its timing is measured on a cold cache
        let jobs: [fn() -> Outcome; 16] = [
            criterion_6,
            criterion_1,
            criterion_2,
            criterion_3,
            criterion_4,
            criterion_5,
            criterion_7,
            criterion_8,
            criterion_9,
            criterion_a,
            criterion_b,
            criterion_c,
            criterion_d,
            criterion_e,
            criterion_f,
            criterion_g,
        ];
        let mut out = jobs
            .iter()
            .map(|f| {
                let start = Instant::now();
                let o = f();
                eprintln!(
                    "criterion {} finished in {:.1} s",
                    o.id,
                    start.elapsed().as_secs_f64()
                );
                o
            })
            .collect::<Vec<_>>();
        out.sort_by_key(|o| "123456789ABCDEFG".find(o.id));
        out
    })
}

fn verdict(id: &str) -> &'static Outcome {
    results()
        .iter()
        .find(|o| o.id == id)
        .expect("known criterion")
}

fn assert_criterion(id: &str) {
    let o = verdict(id);
    assert!(o.passed, "criterion {id}: {}", o.detail);
}

#[test]
fn acceptance_summary() {
    for o in results() {
        println!(
            "{} criterion {}: {}",
            if o.passed { "PASS" } else { "FAIL" },
            o.id,
            o.detail
        );
    }
    let failed: Vec<&str> = results()
        .iter()
        .filter(|o| !o.passed)
        .map(|o| o.id)
        .collect();
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}

#[test]
fn criterion_1_projective_standard() {
    assert_criterion("1");
}

#[test]
fn criterion_2_projective_tensor_reps() {
    assert_criterion("2");
}

#[test]
fn criterion_3_projective_automorphisms() {
    assert_criterion("3");
}

#[test]
fn criterion_4_splitting_coefficients() {
    assert_criterion("4");
}

#[test]
fn criterion_5_normalization() {
    assert_criterion("5");
}

#[test]
fn criterion_6_g2() {
    assert_criterion("6");
}

#[test]
fn criterion_7_cr_and_lagrangian_contact() {
    assert_criterion("7");
}

#[test]
fn criterion_8_path_geometry() {
    assert_criterion("8");
}

#[test]
fn criterion_9_coordinates() {
    assert_criterion("9");
}

#[test]
fn property_a_kostant_identities() {
    assert_criterion("A");
}

#[test]
fn property_b_normalized_extensions() {
    assert_criterion("B");
}

#[test]
fn property_c_tractor_curvature() {
    assert_criterion("C");
}

#[test]
fn property_d_prolongation() {
    assert_criterion("D");
}

#[test]
fn property_e_stability() {
    assert_criterion("E");
}

#[test]
fn property_f_coupling() {
    assert_criterion("F");
}

#[test]
fn property_g_exp_action() {
    assert_criterion("G");
}
