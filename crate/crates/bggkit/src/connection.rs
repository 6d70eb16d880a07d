//! Invariant connections `Φ = ρ∘α + ψ` on tractor bundles, their curvature,
//! the automorphism connection and the prolongation connection.

use serde::Serialize;

use crate::error::{BggError, Result};
use crate::extension::ExtensionMap;
use crate::kostant::KostantComplex;
use crate::lie::Representation;
use crate::linalg::{self, SpanCoordinates, Vector};
use crate::matrix::Matrix;
use crate::poly::UniPoly;
use crate::rational::Rational;
use crate::scalar::Scalar;
use crate::sparse::SparseMatrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ConnectionKind {
    Tractor,
    Automorphism,
    Prolongation,
    Custom,
}

impl ConnectionKind {
    pub fn parse(s: &str) -> Result<ConnectionKind> {
        match s {
            "tractor" => Ok(ConnectionKind::Tractor),
            "automorphism" => Ok(ConnectionKind::Automorphism),
            "prolongation" => Ok(ConnectionKind::Prolongation),
            "custom" => Ok(ConnectionKind::Custom),
            _ => Err(BggError::Parse(format!("unknown connection kind {s:?}"))),
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            ConnectionKind::Tractor => "tractor",
            ConnectionKind::Automorphism => "automorphism",
            ConnectionKind::Prolongation => "prolongation",
            ConnectionKind::Custom => "custom",
        }
    }
}

/// `Φ(eⱼ) = ρ(α(eⱼ)) + ψ(eⱼ)` over the basis of `k`; `ψ` is kept separately.
#[derive(Clone, Debug)]
pub struct ConnectionMap {
    pub kind: ConnectionKind,
    pub ext: ExtensionMap,
    pub rep: Representation,
    pub base: Vec<Matrix>,
    pub psi: Vec<Matrix>,
    /// `ρ(E)` weight of each basis vector of `V`.
    pub weights: Vec<Rational>,
}

/// Checks of the invariance conditions on a connection.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ConnectionCertificate {
    pub psi_vanishes_on_h: bool,
    pub h_equivariant: bool,
    /// Lowest homogeneity of a nonzero entry of `ψ`.
    pub psi_min_homogeneity: Option<Rational>,
}

impl ConnectionCertificate {
    pub fn passed(&self) -> bool {
        self.psi_vanishes_on_h && self.h_equivariant
    }
}

impl ConnectionMap {
    pub fn new(
        kind: ConnectionKind,
        ext: &ExtensionMap,
        rep: &Representation,
        psi: Vec<Matrix>,
    ) -> Result<ConnectionMap> {
        let b = ext.bundle();
        if rep.rho.len() != b.dim_g() {
            return Err(BggError::Dimension(format!(
                "{} is not a representation of g",
                rep.name
            )));
        }
        let nk = b.dim_k();
        if psi.len() != nk
            || psi
                .iter()
                .any(|m| m.rows() != rep.dim || m.cols() != rep.dim)
        {
            return Err(BggError::Dimension(
                "ψ needs one dim V × dim V matrix per basis vector of k".into(),
            ));
        }
        let weights = crate::lie::weight_decomposition(rep, &b.g)?
            .basis_weights
            .ok_or_else(|| {
                BggError::Unsupported(format!("ρ(E) is not diagonal on {}", rep.name))
            })?;
        let base = (0..nk).map(|j| rep.act(&ext.image(j))).collect();
        Ok(ConnectionMap {
            kind,
            ext: ext.clone(),
            rep: rep.clone(),
            base,
            psi,
            weights,
        })
    }

    pub fn dim_v(&self) -> usize {
        self.rep.dim
    }

    pub fn dim_k(&self) -> usize {
        self.base.len()
    }

    /// `Φ(eⱼ)`.
    pub fn phi(&self, j: usize) -> Matrix {
        &self.base[j] + &self.psi[j]
    }

    /// `Φ(x)` for a coordinate vector of `k`.
    pub fn phi_of(&self, x: &[Scalar]) -> Matrix {
        let mut m = Matrix::zeros(self.dim_v(), self.dim_v());
        for (j, c) in x.iter().enumerate() {
            if !c.is_zero() {
                m.axpy(c, &self.base[j]);
                m.axpy(c, &self.psi[j]);
            }
        }
        m
    }

    /// Homogeneity of the entry `(i, j)` of a value on `eₖ`.
    fn entry_homogeneity(&self, k: usize, i: usize, j: usize) -> Rational {
        &(&self.weights[i] - &self.weights[j]) - &Rational::from_int(self.ext.bundle().k.degrees[k])
    }

    pub fn validate(&self) -> ConnectionCertificate {
        let b = self.ext.bundle();
        let h = &b.k.isotropy_indices;
        let psi_vanishes_on_h = h.iter().all(|&y| self.psi[y].is_zero());
        let k = &b.k.algebra;
        let h_equivariant = h.iter().all(|&y| {
            let ay = &self.base[y];
            (0..self.dim_k())
                .all(|x| self.phi_of(k.bracket_basis(y, x)) == ay.commutator(&self.phi(x)))
        });
        ConnectionCertificate {
            psi_vanishes_on_h,
            h_equivariant,
            psi_min_homogeneity: self.psi_min_homogeneity(),
        }
    }

    pub fn psi_min_homogeneity(&self) -> Option<Rational> {
        let n = self.dim_v();
        let mut min: Option<Rational> = None;
        for (k, m) in self.psi.iter().enumerate() {
            for i in 0..n {
                for j in 0..n {
                    if !m[(i, j)].is_zero() {
                        let h = self.entry_homogeneity(k, i, j);
                        if min.as_ref().is_none_or(|x| &h < x) {
                            min = Some(h);
                        }
                    }
                }
            }
        }
        min
    }

    /// `R(eᵢ, eⱼ) = [Φ(eᵢ), Φ(eⱼ)] − Φ([eᵢ, eⱼ])`.
    pub fn curvature(&self) -> ConnectionCurvature {
        let n = self.dim_k();
        let k = &self.ext.bundle().k.algebra;
        let phis: Vec<SparseMatrix> = (0..n)
            .map(|j| SparseMatrix::from_dense(&self.phi(j)))
            .collect();
        let mut values = vec![Matrix::zeros(self.dim_v(), self.dim_v()); n * n];
        for i in 0..n {
            for j in (i + 1)..n {
                let mut r = sparse_commutator(&phis[i], &phis[j]).to_dense();
                r.axpy(&Scalar::from_int(-1), &self.phi_of(k.bracket_basis(i, j)));
                values[j * n + i] = -&r;
                values[i * n + j] = r;
            }
        }
        ConnectionCurvature { dim_k: n, values }
    }

    /// Nonzero cyclic sums `Σ_cyc ([Φ(X), R(Y,Z)] − R([X,Y], Z))` over basis triples.
    pub fn bianchi_residual(&self, r: &ConnectionCurvature) -> Vec<(usize, usize, usize)> {
        let n = self.dim_k();
        let k = &self.ext.bundle().k.algebra;
        let phis: Vec<Matrix> = (0..n).map(|j| self.phi(j)).collect();
        let mut out = Vec::new();
        for a in 0..n {
            for b in (a + 1)..n {
                for c in (b + 1)..n {
                    let mut s = Matrix::zeros(self.dim_v(), self.dim_v());
                    for (x, y, z) in [(a, b, c), (b, c, a), (c, a, b)] {
                        s = &s + &phis[x].commutator(r.get(y, z));
                        s = &s - &r.eval_left(k.bracket_basis(x, y), z);
                    }
                    if !s.is_zero() {
                        out.push((a, b, c));
                    }
                }
            }
        }
        out
    }

    /// True when every `Φ(eₖ)` raises or keeps the `ρ(E)` weight, so the
    /// filtration of `V` is preserved.
    pub fn filtration_preserving(&self) -> bool {
        let n = self.dim_v();
        (0..self.dim_k()).all(|k| {
            let m = self.phi(k);
            (0..n)
                .all(|i| (0..n).all(|j| m[(i, j)].is_zero() || self.weights[i] >= self.weights[j]))
        })
    }
}

/// Alternating table `R(eᵢ, eⱼ) ∈ gl(V)`.
#[derive(Clone, Debug, PartialEq)]
pub struct ConnectionCurvature {
    pub dim_k: usize,
    pub values: Vec<Matrix>,
}

impl ConnectionCurvature {
    pub fn get(&self, i: usize, j: usize) -> &Matrix {
        &self.values[i * self.dim_k + j]
    }

    /// `R(x, eⱼ)` for a coordinate vector `x`.
    pub fn eval_left(&self, x: &[Scalar], j: usize) -> Matrix {
        let d = self.values[0].rows();
        let mut m = Matrix::zeros(d, d);
        for (i, c) in x.iter().enumerate() {
            if !c.is_zero() {
                m.axpy(c, self.get(i, j));
            }
        }
        m
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Matrix::is_zero)
    }

    /// Distinct nonzero values.
    pub fn generators(&self) -> Vec<Matrix> {
        let mut out = Vec::new();
        for i in 0..self.dim_k {
            for j in (i + 1)..self.dim_k {
                let m = self.get(i, j);
                if !m.is_zero() {
                    out.push(m.clone());
                }
            }
        }
        out
    }
}

fn sparse_commutator(a: &SparseMatrix, b: &SparseMatrix) -> SparseMatrix {
    a.matmul(b).add(&b.matmul(a).scale(&Scalar::from_int(-1)))
}

/// `Φ = ρ∘α`.
pub fn tractor_connection(ext: &ExtensionMap, rep: &Representation) -> Result<ConnectionMap> {
    let psi = vec![Matrix::zeros(rep.dim, rep.dim); ext.bundle().dim_k()];
    ConnectionMap::new(ConnectionKind::Tractor, ext, rep, psi)
}

/// Linear maps between `V` and `g` for a representation carrying the adjoint
/// action: the adjoint itself, or `gl` of the defining representation.
#[derive(Clone, Debug)]
pub struct AdjointEmbedding {
    /// `dim g × dim V`; drops the trace part for `gl`.
    pub to_g: Matrix,
    /// `dim V × dim g`.
    pub from_g: Matrix,
}

impl AdjointEmbedding {
    pub fn new(ext: &ExtensionMap, rep: &Representation) -> Result<AdjointEmbedding> {
        let b = ext.bundle();
        let n = b.dim_g();
        if rep.trace_direction.is_none()
            && rep.dim == n
            && (0..n).all(|i| rep.rho[i] == b.g.algebra.ad_basis(i))
        {
            return Ok(AdjointEmbedding {
                to_g: Matrix::identity(n),
                from_g: Matrix::identity(n),
            });
        }
        let d = b.defining.dim;
        if rep.dim != d * d || rep.trace_direction.is_none() {
            return Err(BggError::InvalidRepresentation(format!(
                "{} is neither the adjoint nor gl of the defining representation",
                rep.name
            )));
        }
        let gl = |m: &Matrix| -> Vector {
            let mut v = linalg::zero_vec(d * d);
            for r in 0..d {
                for c in 0..d {
                    v[Representation::gl_index(d, r, c)] = m[(r, c)].clone();
                }
            }
            v
        };
        let cols: Vec<Vector> = b.defining.rho.iter().map(gl).collect();
        let from_g = Matrix::from_cols(d * d, &cols);
        let sc = SpanCoordinates::new(d * d, &cols)?;
        let inv_d = Scalar::frac(1, d as i64);
        let mut to_cols = Vec::with_capacity(d * d);
        for idx in 0..d * d {
            let (c, r) = (idx / d, idx % d);
            let mut m = Matrix::unit(d, d, r, c);
            if r == c {
                for t in 0..d {
                    m[(t, t)] -= &inv_d;
                }
            }
            let x = sc.coordinates(&gl(&m)).ok_or_else(|| {
                BggError::InvalidRepresentation("trace-free part of gl(V) is not in g".into())
            })?;
            to_cols.push(x);
        }
        Ok(AdjointEmbedding {
            to_g: Matrix::from_cols(n, &to_cols),
            from_g,
        })
    }
}

/// `ι_κ(eⱼ)(t) = κ(α(eⱼ), t)` on `V`, read through the adjoint embedding.
pub fn curvature_insertion(ext: &ExtensionMap, rep: &Representation) -> Result<Vec<Matrix>> {
    let emb = AdjointEmbedding::new(ext, rep)?;
    let q = ext.quotient_curvature()?;
    let n = ext.bundle().dim_g();
    (0..ext.bundle().dim_k())
        .map(|j| {
            let a = ext.image(j);
            let cols: Vec<Vector> = (0..n)
                .map(|c| q.eval(&a, &linalg::unit_vec(n, c)))
                .collect();
            let kg = Matrix::from_cols(n, &cols);
            Ok(emb.from_g.matmul(&kg).matmul(&emb.to_g))
        })
        .collect()
}

/// `Φ = ad∘α − ι_κ`.
pub fn automorphism_connection(ext: &ExtensionMap, rep: &Representation) -> Result<ConnectionMap> {
    let psi = curvature_insertion(ext, rep)?.iter().map(|m| -m).collect();
    ConnectionMap::new(ConnectionKind::Automorphism, ext, rep, psi)
}

/// Order in which the exact divisors of one homogeneity are applied.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Schedule {
    Ascending,
    Descending,
    /// One step with the inverse polynomial instead of single divisors.
    Inverse,
}

#[derive(Clone, Debug, Serialize)]
pub struct ProlongationStep {
    pub homogeneity: Rational,
    /// Divisors `a` used in `Ψ ← Ψ − (1/a)·∂*R`, in order of application.
    pub divisors: Vec<Scalar>,
}

#[derive(Clone, Debug)]
pub struct Prolongation {
    pub connection: ConnectionMap,
    pub steps: Vec<ProlongationStep>,
}

impl Prolongation {
    /// `Ψ`, the difference from the tractor connection.
    pub fn psi(&self) -> &[Matrix] {
        &self.connection.psi
    }
}

/// Frame data and the Kostant complex of `V` used by the prolongation.
struct ProlongationContext<'a> {
    conn: &'a ConnectionMap,
    kc: KostantComplex,
    frame: Vec<Vector>,
    /// `eⱼ = Σₐ qm[a][col] cₐ` for the complement element in column `col`.
    qm: Matrix,
    frame_base: Vec<SparseMatrix>,
    /// `[cₐ, c_b]` split into frame coordinates and the `h` part.
    brackets: Vec<Vec<(Vector, Vector)>>,
}

impl<'a> ProlongationContext<'a> {
    fn new(conn: &'a ConnectionMap) -> Result<ProlongationContext<'a>> {
        let ext = &conn.ext;
        let b = ext.bundle();
        let kc = b.kostant(&conn.rep)?;
        let frame = ext.frame()?;
        let qm = ext.quotient_matrix();
        let frame_base = frame
            .iter()
            .map(|c| SparseMatrix::from_dense(&conn.rep.act(&ext.apply(c))))
            .collect();
        let k = &b.k.algebra;
        let ctx_split = |y: &Vector| -> (Vector, Vector) {
            let mut fc = linalg::zero_vec(frame.len());
            for (col, &j) in b.k.complement_indices.iter().enumerate() {
                if y[j].is_zero() {
                    continue;
                }
                for (a, x) in fc.iter_mut().enumerate() {
                    *x += &(&qm[(a, col)] * &y[j]);
                }
            }
            let mut hy = linalg::zero_vec(y.len());
            for &h in &b.k.isotropy_indices {
                hy[h] = y[h].clone();
            }
            (fc, hy)
        };
        let brackets = frame
            .iter()
            .map(|ca| {
                frame
                    .iter()
                    .map(|cb| ctx_split(&k.bracket(ca, cb)))
                    .collect()
            })
            .collect();
        Ok(ProlongationContext {
            conn,
            kc,
            frame,
            qm,
            frame_base,
            brackets,
        })
    }

    fn m(&self) -> usize {
        self.frame.len()
    }

    /// `(∂*⊗id)(R^{ρ∘α+Ψ})` as one `dim V × dim V` block per `Zₐ`, for `Ψ` in the frame.
    fn residual(&self, psi: &[Matrix]) -> Result<Vec<Matrix>> {
        let m = self.m();
        let dv = self.conn.dim_v();
        let phi: Vec<SparseMatrix> = (0..m)
            .map(|a| self.frame_base[a].add(&SparseMatrix::from_dense(&psi[a])))
            .collect();
        let fb = self.kc.form_basis(2);
        let mut trip = Vec::new();
        for (mi, mono) in fb.monomials.iter().enumerate() {
            let (a, b) = (mono[0], mono[1]);
            let mut r = sparse_commutator(&phi[a], &phi[b]);
            let (fc, hy) = &self.brackets[a][b];
            let mut sub = self.conn.rep.act(&self.conn.ext.apply(hy));
            for (c, x) in fc.iter().enumerate() {
                if !x.is_zero() {
                    sub.axpy(x, &phi[c].to_dense());
                }
            }
            r = r.add(&SparseMatrix::from_dense(&sub).scale(&Scalar::from_int(-1)));
            for (i, j, x) in r.triplets() {
                trip.push((mi * dv + i, j, x.clone()));
            }
        }
        let s = SparseMatrix::from_triplets(fb.len() * dv, dv, trip);
        let t = self.kc.codifferential(2)?.matmul(&s);
        let mut out = vec![Matrix::zeros(dv, dv); m];
        for (row, col, x) in t.triplets() {
            out[row / dv][(row % dv, col)] = x.clone();
        }
        Ok(out)
    }

    fn homogeneity(&self, a: usize, i: usize, j: usize) -> Rational {
        &(&self.kc.v_weights[i] - &self.kc.v_weights[j]) + &Rational::from_int(self.kc.z_weights[a])
    }

    fn min_homogeneity(&self, blocks: &[Matrix]) -> Option<Rational> {
        let mut min: Option<Rational> = None;
        for (a, m) in blocks.iter().enumerate() {
            for (idx, x) in m.data().iter().enumerate() {
                if !x.is_zero() {
                    let h = self.homogeneity(a, idx / m.cols(), idx % m.cols());
                    if min.as_ref().is_none_or(|y| &h < y) {
                        min = Some(h);
                    }
                }
            }
        }
        min
    }

    fn project(&self, blocks: &[Matrix], s: &Rational) -> Vec<Matrix> {
        blocks
            .iter()
            .enumerate()
            .map(|(a, m)| {
                let mut p = Matrix::zeros(m.rows(), m.cols());
                for i in 0..m.rows() {
                    for j in 0..m.cols() {
                        if !m[(i, j)].is_zero() && &self.homogeneity(a, i, j) == s {
                            p[(i, j)] = m[(i, j)].clone();
                        }
                    }
                }
                p
            })
            .collect()
    }

    fn to_k_basis(&self, psi: &[Matrix]) -> Vec<Matrix> {
        let b = self.conn.ext.bundle();
        let dv = self.conn.dim_v();
        let mut out = vec![Matrix::zeros(dv, dv); b.dim_k()];
        for (col, &j) in b.k.complement_indices.iter().enumerate() {
            for (a, p) in psi.iter().enumerate() {
                out[j].axpy(&self.qm[(a, col)], p);
            }
        }
        out
    }

    fn from_k_basis(&self, psi: &[Matrix]) -> Vec<Matrix> {
        let dv = self.conn.dim_v();
        self.frame
            .iter()
            .map(|c| {
                let mut m = Matrix::zeros(dv, dv);
                for (j, x) in c.iter().enumerate() {
                    m.axpy(x, &psi[j]);
                }
                m
            })
            .collect()
    }
}

fn flatten(blocks: &[Matrix]) -> Vector {
    blocks
        .iter()
        .flat_map(|m| m.data().iter().cloned())
        .collect()
}

fn axpy_blocks(y: &mut [Matrix], s: &Scalar, x: &[Matrix]) {
    for (a, b) in y.iter_mut().zip(x) {
        a.axpy(s, b);
    }
}

/// `(∂*⊗id)∘R^Φ` for the connection, one block per `Zₐ`; zero exactly for
/// the prolongation connection.
pub fn prolongation_residual(conn: &ConnectionMap) -> Result<Vec<Matrix>> {
    let ctx = ProlongationContext::new(conn)?;
    ctx.residual(&ctx.from_k_basis(&conn.psi))
}

/// Iterates `Ψ ← Ψ − (1/a)·(∂*⊗id)∘R^{ρ∘α+Ψ}` starting from the `ψ` of
/// `conn`. In the lowest nonzero homogeneity `s`, the divisors are the exact
/// eigenvalues of the linearized map `δ ↦ (∂*⊗id)(R^{Φ+δ} − R^Φ)_s` on the
/// cyclic subspace of the current residual, so each pass kills one
/// eigencomponent and the homogeneity strictly increases. When that
/// polynomial does not split over `ℚ(i)`, the step uses its inverse instead.
pub fn prolong(conn: &ConnectionMap, schedule: Schedule) -> Result<Prolongation> {
    let ctx = ProlongationContext::new(conn)?;
    let mut psi = ctx.from_k_basis(&conn.psi);
    let mut steps = Vec::new();
    let max_w = ctx
        .kc
        .v_weights
        .iter()
        .max()
        .cloned()
        .unwrap_or_else(|| Rational::from_int(0));
    let min_w = ctx
        .kc
        .v_weights
        .iter()
        .min()
        .cloned()
        .unwrap_or_else(|| Rational::from_int(0));
    let max_z = ctx.kc.z_weights.iter().max().copied().unwrap_or(0);
    let bound = &(&max_w - &min_w) + &Rational::from_int(max_z);
    let mut last: Option<Rational> = None;
    loop {
        let f = ctx.residual(&psi)?;
        let Some(s) = ctx.min_homogeneity(&f) else {
            break;
        };
        if s < Rational::from_int(1) {
            return Err(BggError::Unsupported(format!(
                "(∂*⊗id)R has a component of homogeneity {s}"
            )));
        }
        if last.as_ref().is_some_and(|l| &s <= l) || s > bound {
            return Err(BggError::NonTermination(format!(
                "homogeneity {s} did not increase"
            )));
        }
        let d = ctx.project(&f, &s);
        let krylov = krylov_sequence(&ctx, &psi, &d, &s)?;
        let divisors = match schedule {
            Schedule::Inverse => {
                let delta = inverse_step(&krylov)?;
                axpy_blocks(&mut psi, &Scalar::one(), &delta);
                Vec::new()
            }
            Schedule::Ascending | Schedule::Descending => {
                // a cyclic subspace whose polynomial does not split takes the inverse step
                let Ok(mut roots) = krylov.poly.split_roots() else {
                    let delta = inverse_step(&krylov)?;
                    axpy_blocks(&mut psi, &Scalar::one(), &delta);
                    steps.push(ProlongationStep {
                        homogeneity: s.clone(),
                        divisors: Vec::new(),
                    });
                    last = Some(s);
                    continue;
                };
                roots.sort_by(|x, y| {
                    let (a, b) = (x.to_complex(), y.to_complex());
                    a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im))
                });
                if schedule == Schedule::Descending {
                    roots.reverse();
                }
                for a in &roots {
                    let r = ctx.residual(&psi)?;
                    let inv = a.checked_inv().map_err(|_| {
                        BggError::Unsupported(format!(
                            "linearized operator is singular at homogeneity {s}"
                        ))
                    })?;
                    axpy_blocks(&mut psi, &-inv, &r);
                }
                roots
            }
        };
        steps.push(ProlongationStep {
            homogeneity: s.clone(),
            divisors,
        });
        last = Some(s);
    }
    let mut out = conn.clone();
    out.kind = ConnectionKind::Prolongation;
    out.psi = ctx.to_k_basis(&psi);
    Ok(Prolongation {
        connection: out,
        steps,
    })
}

struct Krylov {
    vectors: Vec<Vec<Matrix>>,
    /// Monic annihilating polynomial of the linearized map on the cyclic subspace.
    poly: UniPoly,
}

fn krylov_sequence(
    ctx: &ProlongationContext<'_>,
    psi: &[Matrix],
    d: &[Matrix],
    s: &Rational,
) -> Result<Krylov> {
    let f0 = ctx.residual(psi)?;
    let base = ctx.project(&f0, s);
    let mut vectors = vec![d.to_vec()];
    let mut ech = linalg::Echelon::new(flatten(d).len());
    let mut flat = vec![flatten(d)];
    ech.insert(&flat[0]);
    loop {
        let last = vectors.last().expect("nonempty");
        let mut shifted = psi.to_vec();
        axpy_blocks(&mut shifted, &Scalar::one(), last);
        let f1 = ctx.project(&ctx.residual(&shifted)?, s);
        let next: Vec<Matrix> = f1.iter().zip(&base).map(|(a, b)| a - b).collect();
        let fv = flatten(&next);
        if !ech.insert(&fv) {
            // express L^t d in the previous vectors
            let cols: Vec<Vector> = flat.clone();
            let a = Matrix::from_cols(fv.len(), &cols);
            let sol = linalg::solve_affine(&a, &fv)?;
            let c = sol
                .particular
                .ok_or_else(|| BggError::Unsupported("Krylov relation not found".into()))?;
            let mut coeffs: Vec<Scalar> = c.iter().map(|x| -x.clone()).collect();
            coeffs.push(Scalar::one());
            return Ok(Krylov {
                vectors,
                poly: UniPoly::new(coeffs),
            });
        }
        if vectors.len() > fv.len() {
            return Err(BggError::NonTermination("Krylov sequence".into()));
        }
        flat.push(fv);
        vectors.push(next);
    }
}

/// `−L⁻¹d` from `p(L)d = 0` with `p = p₀ + t·r(t)`: `L⁻¹d = −r(L)d / p₀`.
fn inverse_step(k: &Krylov) -> Result<Vec<Matrix>> {
    let c = k.poly.coeffs();
    let p0 = c[0]
        .checked_inv()
        .map_err(|_| BggError::Unsupported("linearized operator is singular".into()))?;
    let mut out: Vec<Matrix> = k.vectors[0]
        .iter()
        .map(|m| Matrix::zeros(m.rows(), m.cols()))
        .collect();
    for (j, v) in k.vectors.iter().enumerate() {
        let coeff = &c[j + 1] * &p0;
        axpy_blocks(&mut out, &coeff, v);
    }
    Ok(out)
}

/// `Σᵢ ρ(κ(X, Xᵢ))ρ(Zᵢ) = 0` for every `X ∈ g/p`; together with `ψ = 0` this
/// forces the prolongation to agree with the tractor connection.
pub fn norm2_condition(ext: &ExtensionMap, rep: &Representation) -> Result<bool> {
    let q = ext.quotient_curvature()?;
    let b = ext.bundle();
    let m = b.codim();
    for a in 0..m {
        let mut s = Matrix::zeros(rep.dim, rep.dim);
        for (i, z) in b.pairing.dual_basis.iter().enumerate() {
            s = &s + &rep.act(q.get(a, i)).matmul(&rep.act(z));
        }
        if !s.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    use std::sync::Arc;

    use crate::extension::GradedAlgebraBundle;
    use crate::lie::{LieAlgebra, SymmetryPair};
    use crate::testutil::sln_p1;

    fn projective() -> ExtensionMap {
        let (g, std) = sln_p1(4);
        let k = LieAlgebra::from_triples(
            vec!["e1".into(), "e2".into(), "e3".into()],
            &[(0, 1, 2, Scalar::from_int(-1))],
        )
        .unwrap();
        let k = SymmetryPair::new(k, vec![], vec![-1, -1, -1]).unwrap();
        let b = Arc::new(GradedAlgebraBundle::new(g, std, k).unwrap());
        let mats = [
            Matrix::from_ints(4, 4, &[0, 1, 0, 0, 1, 0, 0, 0, 0, 0, -1, 0, 0, 0, -1, 1]),
            Matrix::from_ints(4, 4, &[0, 0, 0, 0, 0, 0, 0, 0, 1, -1, 0, 0, 0, 0, 0, 0]),
            Matrix::from_ints(4, 4, &[0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 0]),
        ];
        let basis: Vec<Vector> = b.defining.rho.iter().map(Matrix::to_vec).collect();
        let sc = SpanCoordinates::new(16, &basis).unwrap();
        let cols: Vec<Vector> = mats
            .iter()
            .map(|m| sc.coordinates(&m.to_vec()).unwrap())
            .collect();
        ExtensionMap::new(b.clone(), Matrix::from_cols(15, &cols)).unwrap()
    }

    #[test]
    fn tractor_curvature_is_rho_of_kappa() {
        let ext = projective();
        let std = ext.bundle().defining.clone();
        let conn = tractor_connection(&ext, &std).unwrap();
        let r = conn.curvature();
        let kappa = ext.curvature();
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(r.get(i, j), &std.act(kappa.get(i, j)));
            }
        }
        let mut e42 = Matrix::zeros(4, 4);
        e42[(3, 1)] = Scalar::from_int(2);
        assert_eq!(r.get(0, 1), &e42);
        assert!(conn.bianchi_residual(&r).is_empty());
        assert!(conn.validate().passed());
        assert!(!conn.filtration_preserving());
    }

    #[test]
    fn standard_prolongation_is_tractor() {
        let ext = projective();
        let std = ext.bundle().defining.clone();
        let conn = tractor_connection(&ext, &std).unwrap();
        let p = prolong(&conn, Schedule::Ascending).unwrap();
        assert!(p.psi().iter().all(Matrix::is_zero));
        assert!(norm2_condition(&ext, &std).unwrap());
    }

    #[test]
    fn sym2_prolongation_entry() {
        let ext = projective();
        let s2 = ext.bundle().defining.sym2();
        let conn = tractor_connection(&ext, &s2).unwrap();
        assert!(!norm2_condition(&ext, &s2).unwrap());
        let p = prolong(&conn, Schedule::Ascending).unwrap();
        let mut expected = vec![Matrix::zeros(10, 10); 3];
        expected[0][(6, 4)] = Scalar::frac(2, 3);
        expected[1][(6, 2)] = Scalar::frac(-2, 3);
        assert_eq!(p.psi(), &expected[..]);
        assert!(prolongation_residual(&p.connection)
            .unwrap()
            .iter()
            .all(Matrix::is_zero));
        for sch in [Schedule::Descending, Schedule::Inverse] {
            assert_eq!(prolong(&conn, sch).unwrap().psi(), p.psi());
        }
    }

    #[test]
    fn automorphism_insertion_entry() {
        let ext = projective();
        let gl = ext.bundle().defining.adjoint_gl();
        let iota = curvature_insertion(&ext, &gl).unwrap();
        // w2 = entry (2,1), w3 = entry (3,1); output at entry (4,2)
        let out = Representation::gl_index(4, 3, 1);
        let w2 = Representation::gl_index(4, 1, 0);
        let w3 = Representation::gl_index(4, 2, 0);
        assert_eq!(iota[0][(out, w3)], Scalar::from_int(2));
        assert_eq!(iota[1][(out, w2)], Scalar::from_int(-2));
        assert_eq!(iota.iter().map(Matrix::nnz).sum::<usize>(), 2);
        let aut = automorphism_connection(&ext, &gl).unwrap();
        assert!(aut.validate().passed());
    }
}
