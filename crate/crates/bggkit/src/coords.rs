//! Coordinate expressions of solutions: `exp(−Φ(X))` on the span of parallel
//! values, exact when the action is nilpotent or diagonalizable over the
//! scalar field, and polynomial normal-coordinate forms of normal solutions.

use std::collections::BTreeMap;
use std::fmt;

use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::Serialize;

use crate::connection::ConnectionMap;
use crate::error::{BggError, Result};
use crate::extension::ExtensionMap;
use crate::lie::Representation;
use crate::linalg::{Echelon, Subspace, Vector};
use crate::matrix::Matrix;
use crate::poly::minimal_polynomial;
use crate::scalar::Scalar;
use crate::solutions::normal_solutions;

/// Polynomial in `nvars` commuting variables with coefficients in the scalar field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, Scalar>,
}

impl MPoly {
    pub fn zero(nvars: usize) -> MPoly {
        MPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Scalar) -> MPoly {
        let mut p = MPoly::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(vec![0; nvars], c);
        }
        p
    }

    pub fn var(nvars: usize, i: usize) -> MPoly {
        let mut e = vec![0; nvars];
        e[i] = 1;
        MPoly {
            nvars,
            terms: BTreeMap::from([(e, Scalar::one())]),
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// Coefficient of the monomial with the given exponents.
    pub fn coeff(&self, exps: &[u32]) -> Scalar {
        self.terms.get(exps).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Scalar)> {
        self.terms.iter()
    }

    fn add_term(&mut self, e: Vec<u32>, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e).or_default();
        *slot += &c;
        if slot.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn add(&self, o: &MPoly) -> MPoly {
        let mut r = self.clone();
        for (e, c) in &o.terms {
            r.add_term(e.clone(), c.clone());
        }
        r
    }

    pub fn mul(&self, o: &MPoly) -> MPoly {
        let mut r = MPoly::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                r.add_term(e, c1 * c2);
            }
        }
        r
    }

    pub fn scale(&self, s: &Scalar) -> MPoly {
        let mut r = MPoly::zero(self.nvars);
        for (e, c) in &self.terms {
            r.add_term(e.clone(), c * s);
        }
        r
    }

    pub fn eval(&self, x: &[Scalar]) -> Scalar {
        let mut s = Scalar::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (xi, &k) in x.iter().zip(e) {
                t = &t * &xi.pow(k);
            }
            s += &t;
        }
        s
    }

    pub fn eval_complex(&self, x: &[Complex64]) -> Complex64 {
        self.terms
            .iter()
            .map(|(e, c)| {
                x.iter()
                    .zip(e)
                    .fold(c.to_complex(), |acc, (xi, &k)| acc * xi.powu(k))
            })
            .sum()
    }

    /// Renders with the given variable names.
    pub fn display(&self, names: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut parts = Vec::new();
        for (e, c) in self.terms.iter().rev() {
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(i, &k)| {
                    if k == 1 {
                        names[i].clone()
                    } else {
                        format!("{}^{k}", names[i])
                    }
                })
                .collect();
            let cs = c.to_string();
            let cs = if cs.contains(' ') {
                format!("({cs})")
            } else {
                cs
            };
            parts.push(match (mono.is_empty(), c.is_one()) {
                (true, _) => cs,
                (false, true) => mono.join("*"),
                (false, false) if cs == "-1" => format!("-{}", mono.join("*")),
                (false, false) => format!("{cs}*{}", mono.join("*")),
            });
        }
        parts.join(" + ").replace("+ -", "- ")
    }
}

/// Matrix with polynomial entries.
#[derive(Clone, Debug, PartialEq)]
pub struct PolyMatrix {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<MPoly>,
}

impl PolyMatrix {
    pub fn zeros(rows: usize, cols: usize, nvars: usize) -> PolyMatrix {
        PolyMatrix {
            rows,
            cols,
            entries: vec![MPoly::zero(nvars); rows * cols],
        }
    }

    pub fn identity(n: usize, nvars: usize) -> PolyMatrix {
        let mut m = PolyMatrix::zeros(n, n, nvars);
        for i in 0..n {
            m.entries[i * n + i] = MPoly::constant(nvars, Scalar::one());
        }
        m
    }

    /// `Σ xᵢ Mᵢ` with one variable per matrix.
    pub fn linear(mats: &[Matrix], nvars: usize, vars: &[usize]) -> PolyMatrix {
        let (r, c) = (mats[0].rows(), mats[0].cols());
        let mut out = PolyMatrix::zeros(r, c, nvars);
        for (m, &v) in mats.iter().zip(vars) {
            let x = MPoly::var(nvars, v);
            for i in 0..r {
                for j in 0..c {
                    if !m[(i, j)].is_zero() {
                        out.entries[i * c + j] = out.entries[i * c + j].add(&x.scale(&m[(i, j)]));
                    }
                }
            }
        }
        out
    }

    pub fn get(&self, i: usize, j: usize) -> &MPoly {
        &self.entries[i * self.cols + j]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(MPoly::is_zero)
    }

    pub fn matmul(&self, o: &PolyMatrix) -> PolyMatrix {
        let nv = self.entries.first().map_or(0, MPoly::nvars);
        let mut out = PolyMatrix::zeros(self.rows, o.cols, nv);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = o.get(k, j);
                    if !b.is_zero() {
                        out.entries[i * o.cols + j] = out.entries[i * o.cols + j].add(&a.mul(b));
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, o: &PolyMatrix) -> PolyMatrix {
        let entries = self
            .entries
            .iter()
            .zip(&o.entries)
            .map(|(a, b)| a.add(b))
            .collect();
        PolyMatrix {
            rows: self.rows,
            cols: self.cols,
            entries,
        }
    }

    pub fn scale(&self, s: &Scalar) -> PolyMatrix {
        PolyMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|p| p.scale(s)).collect(),
        }
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<MPoly> {
        (0..self.rows)
            .map(|i| {
                let mut acc = MPoly::zero(self.entries.first().map_or(0, MPoly::nvars));
                for (j, x) in v.iter().enumerate() {
                    acc = acc.add(&self.get(i, j).scale(x));
                }
                acc
            })
            .collect()
    }

    pub fn eval(&self, x: &[Scalar]) -> Matrix {
        let data = self.entries.iter().map(|p| p.eval(x)).collect();
        Matrix::from_vec(self.rows, self.cols, data).expect("shape")
    }

    pub fn eval_complex(&self, x: &[Complex64]) -> DMatrix<Complex64> {
        DMatrix::from_fn(self.rows, self.cols, |i, j| self.get(i, j).eval_complex(x))
    }

    pub fn max_degree(&self) -> u32 {
        self.entries
            .iter()
            .filter_map(MPoly::degree)
            .max()
            .unwrap_or(0)
    }
}

/// `exp(A)` as a finite sum when `A` is nilpotent, else `None`.
pub fn exp_nilpotent(a: &PolyMatrix) -> Option<PolyMatrix> {
    let n = a.rows;
    let nv = a.entries.first().map_or(0, MPoly::nvars);
    let mut sum = PolyMatrix::identity(n, nv);
    let mut power = PolyMatrix::identity(n, nv);
    for j in 1..=n {
        power = power.matmul(a).scale(&Scalar::frac(1, j as i64));
        if power.is_zero() {
            return Some(sum);
        }
        sum = sum.add(&power);
    }
    None
}

pub fn to_complex_matrix(m: &Matrix) -> DMatrix<Complex64> {
    DMatrix::from_fn(m.rows(), m.cols(), |i, j| m[(i, j)].to_complex())
}

/// Smallest `Φ(k)`-invariant subspace containing `s`.
pub fn invariant_closure(conn: &ConnectionMap, s: &Subspace) -> Subspace {
    let phis: Vec<Matrix> = (0..conn.dim_k()).map(|j| conn.phi(j)).collect();
    let mut ech = Echelon::new(s.ambient_dim);
    let mut queue: Vec<Vector> = Vec::new();
    for v in &s.basis {
        if ech.insert(v) {
            queue.push(v.clone());
        }
    }
    while let Some(v) = queue.pop() {
        for p in &phis {
            let w = p.mul_vec(&v);
            if ech.insert(&w) {
                queue.push(w);
            }
        }
    }
    ech.into_subspace()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FactorKind {
    Nilpotent,
    Diagonalizable,
    Numeric,
}

/// `exp(−tA)` for a fixed matrix `A`.
#[derive(Clone, Debug)]
pub enum ExpAction {
    /// `Σⱼ tʲ Cⱼ`.
    Nilpotent(Vec<Matrix>),
    /// `Σ e^{−λt} P_λ` over spectral projectors.
    Spectral(Vec<(Scalar, Matrix)>),
    Numeric(DMatrix<Complex64>),
}

impl ExpAction {
    /// Classifies `A`; with `exact` set, refuses the numeric fallback.
    pub fn new(a: &Matrix, exact: bool) -> Result<ExpAction> {
        let n = a.rows();
        let neg = -a;
        let mut terms = vec![Matrix::identity(n)];
        let mut p = Matrix::identity(n);
        for j in 1..=n.max(1) {
            p = p.matmul(&neg).scale(&Scalar::frac(1, j as i64));
            if p.is_zero() {
                return Ok(ExpAction::Nilpotent(terms));
            }
            terms.push(p.clone());
        }
        let mp = minimal_polynomial(a);
        if let Ok(roots) = mp.split_roots() {
            let mut distinct = roots.clone();
            distinct.dedup();
            if distinct.len() == roots.len() {
                let mut out = Vec::new();
                for (i, l) in roots.iter().enumerate() {
                    let mut pr = Matrix::identity(n);
                    for (j, m) in roots.iter().enumerate() {
                        if i != j {
                            let mut f = a.clone();
                            for t in 0..n {
                                f[(t, t)] -= m;
                            }
                            pr = pr.matmul(&f).scale(&(l - m).inv());
                        }
                    }
                    out.push((l.clone(), pr));
                }
                return Ok(ExpAction::Spectral(out));
            }
        }
        if exact {
            return Err(BggError::Unsupported(
                "action is neither nilpotent nor diagonalizable over ℚ(i, √2); use numeric mode"
                    .into(),
            ));
        }
        Ok(ExpAction::Numeric(to_complex_matrix(a)))
    }

    pub fn kind(&self) -> FactorKind {
        match self {
            ExpAction::Nilpotent(_) => FactorKind::Nilpotent,
            ExpAction::Spectral(_) => FactorKind::Diagonalizable,
            ExpAction::Numeric(_) => FactorKind::Numeric,
        }
    }

    /// Exact value when the action is nilpotent.
    pub fn eval_exact(&self, t: &Scalar) -> Option<Matrix> {
        let ExpAction::Nilpotent(c) = self else {
            return None;
        };
        let mut out = Matrix::zeros(c[0].rows(), c[0].cols());
        for (j, m) in c.iter().enumerate() {
            out.axpy(&t.pow(j as u32), m);
        }
        Some(out)
    }

    pub fn eval(&self, t: f64) -> DMatrix<Complex64> {
        match self {
            ExpAction::Nilpotent(c) => c
                .iter()
                .enumerate()
                .fold(DMatrix::zeros(c[0].rows(), c[0].cols()), |acc, (j, m)| {
                    acc + to_complex_matrix(m) * Complex64::from(t.powi(j as i32))
                }),
            ExpAction::Spectral(terms) => {
                let n = terms[0].1.rows();
                terms.iter().fold(DMatrix::zeros(n, n), |acc, (l, p)| {
                    acc + to_complex_matrix(p) * (-l.to_complex() * t).exp()
                })
            }
            ExpAction::Numeric(a) => (a * Complex64::from(-t)).exp(),
        }
    }

    /// `d/dt exp(−tA)` at `t = 0`, exact for the symbolic kinds.
    pub fn derivative_at_zero(&self) -> Option<Matrix> {
        match self {
            ExpAction::Nilpotent(c) => Some(
                c.get(1)
                    .cloned()
                    .unwrap_or_else(|| Matrix::zeros(c[0].rows(), c[0].cols())),
            ),
            ExpAction::Spectral(terms) => {
                let n = terms[0].1.rows();
                let mut out = Matrix::zeros(n, n);
                for (l, p) in terms {
                    out.axpy(&-l.clone(), p);
                }
                Some(out)
            }
            ExpAction::Numeric(_) => None,
        }
    }
}

/// `exp(−tΦ(x))` restricted to `s` (which must be `Φ(x)`-invariant), in the basis of `s`.
pub fn exp_action(
    conn: &ConnectionMap,
    s: &Subspace,
    x: &[Scalar],
    exact: bool,
) -> Result<ExpAction> {
    let a = s
        .restrict(&conn.phi_of(x))
        .ok_or_else(|| BggError::InvalidRepresentation("subspace is not Φ-invariant".into()))?;
    ExpAction::new(&a, exact)
}

/// One factor `exp(−Φ(Σ pᵢ Xᵢ))` of a solution expression.
#[derive(Clone, Debug, Serialize)]
pub struct ExpFactor {
    /// Global indices of the parameters `pᵢ`.
    pub params: Vec<usize>,
    /// Elements `Xᵢ` of `k` in basis coordinates.
    pub directions: Vec<Vector>,
    pub kind: FactorKind,
    #[serde(skip)]
    symbolic: Option<PolyMatrix>,
    #[serde(skip)]
    single: Option<ExpAction>,
    #[serde(skip)]
    restricted: Vec<Matrix>,
}

impl ExpFactor {
    fn numeric_matrix(&self, p: &[f64]) -> DMatrix<Complex64> {
        if let Some(s) = &self.symbolic {
            let x: Vec<Complex64> = p.iter().map(|&v| Complex64::from(v)).collect();
            return s.eval_complex(&x);
        }
        if let Some(e) = &self.single {
            return e.eval(p[self.params[0]]);
        }
        let n = self.restricted[0].rows();
        let mut a = DMatrix::<Complex64>::zeros(n, n);
        for (m, &pi) in self.restricted.iter().zip(&self.params) {
            a += to_complex_matrix(m) * Complex64::from(-p[pi]);
        }
        a.exp()
    }
}

/// Value of a parallel section in exponential coordinates of the second kind,
/// `exp(−Φ(X₁))·exp(−Φ(X₂))⋯s(e)` with factors listed left to right.
#[derive(Clone, Debug, Serialize)]
pub struct SolutionExpression {
    pub space: Subspace,
    pub param_names: Vec<String>,
    pub factors: Vec<ExpFactor>,
}

impl SolutionExpression {
    /// `factors[f]` lists `(parameter name, direction in k)`; parameters are
    /// numbered in order of first appearance.
    pub fn new(
        conn: &ConnectionMap,
        s: &Subspace,
        factors: &[Vec<(String, Vector)>],
    ) -> Result<SolutionExpression> {
        let space = invariant_closure(conn, s);
        let mut names: Vec<String> = Vec::new();
        for f in factors {
            for (n, _) in f {
                if !names.contains(n) {
                    names.push(n.clone());
                }
            }
        }
        let nv = names.len();
        let mut out = Vec::new();
        for f in factors {
            let params: Vec<usize> = f
                .iter()
                .map(|(n, _)| names.iter().position(|m| m == n).expect("named"))
                .collect();
            let directions: Vec<Vector> = f.iter().map(|(_, d)| d.clone()).collect();
            let restricted = directions
                .iter()
                .map(|d| {
                    space.restrict(&conn.phi_of(d)).ok_or_else(|| {
                        BggError::InvalidRepresentation("closure is not invariant".into())
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            let neg: Vec<Matrix> = restricted.iter().map(|m| -m).collect();
            let symbolic = exp_nilpotent(&PolyMatrix::linear(&neg, nv, &params));
            let (kind, single) = match (&symbolic, restricted.len()) {
                (Some(_), _) => (FactorKind::Nilpotent, None),
                (None, 1) => {
                    let e = ExpAction::new(&restricted[0], false)?;
                    (e.kind(), Some(e))
                }
                _ => (FactorKind::Numeric, None),
            };
            out.push(ExpFactor {
                params,
                directions,
                kind,
                symbolic,
                single,
                restricted,
            });
        }
        Ok(SolutionExpression {
            space,
            param_names: names,
            factors: out,
        })
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    /// Product of the factor matrices in the basis of `space`.
    pub fn matrix(&self, params: &[f64]) -> DMatrix<Complex64> {
        let n = self.dim();
        self.factors.iter().fold(DMatrix::identity(n, n), |acc, f| {
            acc * f.numeric_matrix(params)
        })
    }

    /// Exact product when every factor is nilpotent.
    pub fn symbolic_matrix(&self) -> Option<PolyMatrix> {
        let n = self.dim();
        let mut acc = PolyMatrix::identity(n, self.param_names.len());
        for f in &self.factors {
            acc = acc.matmul(f.symbolic.as_ref()?);
        }
        Some(acc)
    }

    fn coords(&self, v: &[Scalar]) -> Result<Vector> {
        self.space.coordinates(v).ok_or_else(|| {
            BggError::InvalidRepresentation("basis point value outside the solution space".into())
        })
    }

    /// Value in `V` at the chart point.
    pub fn evaluate(&self, v: &[Scalar], params: &[f64]) -> Result<Vec<Complex64>> {
        if params.len() != self.param_names.len() {
            return Err(BggError::Dimension(format!(
                "expected {} parameters",
                self.param_names.len()
            )));
        }
        let c = self.coords(v)?;
        let cv = nalgebra::DVector::from_iterator(c.len(), c.iter().map(Scalar::to_complex));
        let y = self.matrix(params) * cv;
        let b = to_complex_matrix(&self.space.basis_matrix());
        Ok((b * y).iter().copied().collect())
    }

    /// Exact value in `V` when every factor is nilpotent.
    pub fn evaluate_exact(&self, v: &[Scalar], params: &[Scalar]) -> Result<Vector> {
        let sym = self.symbolic_matrix().ok_or_else(|| {
            BggError::Unsupported("exact evaluation needs nilpotent factors".into())
        })?;
        let c = self.coords(v)?;
        Ok(self.space.combine(&sym.eval(params).mul_vec(&c)))
    }

    /// Polynomial value in `V` when every factor is nilpotent.
    pub fn evaluate_symbolic(&self, v: &[Scalar]) -> Result<Vec<MPoly>> {
        let sym = self.symbolic_matrix().ok_or_else(|| {
            BggError::Unsupported("symbolic evaluation needs nilpotent factors".into())
        })?;
        let c = self.coords(v)?;
        let y = sym.mul_vec(&c);
        let nv = self.param_names.len();
        Ok((0..self.space.ambient_dim)
            .map(|i| {
                y.iter()
                    .zip(&self.space.basis)
                    .fold(MPoly::zero(nv), |acc, (p, b)| acc.add(&p.scale(&b[i])))
            })
            .collect())
    }
}

/// `exp(−ρ(X))ν` for `X = Σ nₐXₐ ∈ g₋`, polynomial in the `nₐ`.
pub fn normal_coordinate_polynomial(
    ext: &ExtensionMap,
    rep: &Representation,
    nu: &[Scalar],
) -> Result<Vec<MPoly>> {
    if !normal_solutions(ext, rep)?.contains(nu) {
        return Err(BggError::InvalidRepresentation(
            "value is not a normal solution".into(),
        ));
    }
    let b = ext.bundle();
    let neg: Vec<Matrix> = b
        .pairing
        .quotient_basis
        .iter()
        .map(|&a| -&rep.rho[a])
        .collect();
    let m = neg.len();
    let vars: Vec<usize> = (0..m).collect();
    let e = exp_nilpotent(&PolyMatrix::linear(&neg, m, &vars))
        .ok_or_else(|| BggError::InvalidRepresentation("g₋ does not act nilpotently".into()))?;
    Ok(e.mul_vec(nu))
}

/// Applies a scalar matrix to a polynomial vector.
pub fn apply_to_polys(m: &Matrix, v: &[MPoly]) -> Vec<MPoly> {
    let nv = v.first().map_or(0, MPoly::nvars);
    (0..m.rows())
        .map(|i| {
            v.iter().enumerate().fold(MPoly::zero(nv), |acc, (j, p)| {
                if m[(i, j)].is_zero() {
                    acc
                } else {
                    acc.add(&p.scale(&m[(i, j)]))
                }
            })
        })
        .collect()
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (1..=self.nvars).map(|i| format!("x{i}")).collect();
        f.write_str(&self.display(&names))
    }
}

/// Central-difference derivative of `t ↦ exp(−tA)` at 0, for checking the numeric kind.
pub fn numeric_derivative(e: &ExpAction, h: f64) -> DMatrix<Complex64> {
    (e.eval(h) - e.eval(-h)) / Complex64::from(2.0 * h)
}

pub fn max_abs_diff(a: &DMatrix<Complex64>, b: &DMatrix<Complex64>) -> f64 {
    (a - b).iter().map(|z| z.norm()).fold(0.0, f64::max)
}
