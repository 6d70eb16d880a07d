//! Lie algebras by structure constants, gradings, dual bases, symmetry pairs
//! and representations.

use serde::Serialize;

use crate::error::{BggError, Result};
use crate::linalg::{
    self, axpy, is_zero_vec, unit_vec, zero_vec, SpanCoordinates, Subspace, Vector,
};
use crate::matrix::Matrix;
use crate::poly::minimal_polynomial;
use crate::rational::Rational;
use crate::scalar::Scalar;

/// Lie algebra given by `[eᵢ, eⱼ] = Σₖ c[i][j][k] eₖ`.
#[derive(Clone, Debug)]
pub struct LieAlgebra {
    pub names: Vec<String>,
    dim: usize,
    table: Vec<Vector>,
}

/// First failure found by [`LieAlgebra::validate`].
#[derive(Clone, Debug, PartialEq, Serialize)]
pub enum AlgebraViolation {
    Antisymmetry {
        i: usize,
        j: usize,
        residual: Vector,
    },
    Jacobi {
        i: usize,
        j: usize,
        k: usize,
        residual: Vector,
    },
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AlgebraCertificate {
    pub passed: bool,
    pub violation: Option<AlgebraViolation>,
}

impl LieAlgebra {
    /// Raw table, not antisymmetrized.
    pub fn from_table(names: Vec<String>, table: Vec<Vec<Vector>>) -> Result<LieAlgebra> {
        let dim = names.len();
        if table.len() != dim
            || table
                .iter()
                .any(|r| r.len() != dim || r.iter().any(|v| v.len() != dim))
        {
            return Err(BggError::Dimension("structure table shape".into()));
        }
        Ok(LieAlgebra {
            names,
            dim,
            table: table.into_iter().flatten().collect(),
        })
    }

    /// Builds the table from triples `(i, j, k, c)` meaning `[eᵢ, eⱼ] ∋ c·eₖ`;
    /// each triple also sets `[eⱼ, eᵢ] ∋ −c·eₖ`.
    pub fn from_triples(
        names: Vec<String>,
        triples: &[(usize, usize, usize, Scalar)],
    ) -> Result<LieAlgebra> {
        let dim = names.len();
        let mut table = vec![zero_vec(dim); dim * dim];
        for (i, j, k, c) in triples {
            if *i >= dim || *j >= dim || *k >= dim {
                return Err(BggError::Dimension(format!(
                    "bracket index ({i},{j},{k}) out of range"
                )));
            }
            table[i * dim + j][*k] += c;
            table[j * dim + i][*k] -= c;
        }
        Ok(LieAlgebra { names, dim, table })
    }

    /// The span of the given matrices, which must be closed under commutators.
    pub fn from_matrices(names: Vec<String>, mats: &[Matrix]) -> Result<LieAlgebra> {
        let dim = mats.len();
        if names.len() != dim {
            return Err(BggError::Dimension("one name per basis matrix".into()));
        }
        let flat: Vec<Vector> = mats.iter().map(Matrix::to_vec).collect();
        let n2 = flat.first().map_or(0, Vec::len);
        let coords = SpanCoordinates::new(n2, &flat).map_err(|_| {
            BggError::InvalidAlgebra("basis matrices are linearly dependent".into())
        })?;
        let mut table = vec![zero_vec(dim); dim * dim];
        for i in 0..dim {
            for j in (i + 1)..dim {
                let c = mats[i].commutator(&mats[j]).to_vec();
                let x = coords.coordinates(&c).ok_or_else(|| {
                    BggError::InvalidAlgebra(format!(
                        "[{}, {}] leaves the span",
                        names[i], names[j]
                    ))
                })?;
                table[j * dim + i] = x.iter().map(|s| -s).collect();
                table[i * dim + j] = x;
            }
        }
        Ok(LieAlgebra { names, dim, table })
    }

    /// The abelian algebra of the given dimension.
    pub fn abelian(dim: usize) -> LieAlgebra {
        LieAlgebra {
            names: (1..=dim).map(|i| format!("e{i}")).collect(),
            dim,
            table: vec![zero_vec(dim); dim * dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn bracket_basis(&self, i: usize, j: usize) -> &Vector {
        &self.table[i * self.dim + j]
    }

    pub fn bracket(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        let mut out = zero_vec(self.dim);
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let c = self.bracket_basis(i, j);
                if !is_zero_vec(c) {
                    axpy(&mut out, &(a * b), c);
                }
            }
        }
        out
    }

    /// Matrix of `ad(eᵢ)`.
    pub fn ad_basis(&self, i: usize) -> Matrix {
        let cols: Vec<Vector> = (0..self.dim)
            .map(|j| self.bracket_basis(i, j).clone())
            .collect();
        Matrix::from_cols(self.dim, &cols)
    }

    pub fn ad(&self, x: &[Scalar]) -> Matrix {
        let mut m = Matrix::zeros(self.dim, self.dim);
        for (i, a) in x.iter().enumerate() {
            if !a.is_zero() {
                m.axpy(a, &self.ad_basis(i));
            }
        }
        m
    }

    /// Checks antisymmetry and the Jacobi identity on all basis triples.
    pub fn validate(&self) -> AlgebraCertificate {
        let n = self.dim;
        for i in 0..n {
            for j in i..n {
                let r = linalg::add_vec(self.bracket_basis(i, j), self.bracket_basis(j, i));
                if !is_zero_vec(&r) {
                    return AlgebraCertificate {
                        passed: false,
                        violation: Some(AlgebraViolation::Antisymmetry { i, j, residual: r }),
                    };
                }
            }
        }
        for i in 0..n {
            for j in (i + 1)..n {
                for k in (j + 1)..n {
                    let e = |a| unit_vec(n, a);
                    let t1 = self.bracket(&e(i), self.bracket_basis(j, k));
                    let t2 = self.bracket(&e(j), self.bracket_basis(k, i));
                    let t3 = self.bracket(&e(k), self.bracket_basis(i, j));
                    let r = linalg::add_vec(&linalg::add_vec(&t1, &t2), &t3);
                    if !is_zero_vec(&r) {
                        return AlgebraCertificate {
                            passed: false,
                            violation: Some(AlgebraViolation::Jacobi {
                                i,
                                j,
                                k,
                                residual: r,
                            }),
                        };
                    }
                }
            }
        }
        AlgebraCertificate {
            passed: true,
            violation: None,
        }
    }

    /// Killing form as `tr(ad eᵢ ∘ ad eⱼ)`.
    pub fn killing_form(&self) -> Matrix {
        let ads: Vec<Matrix> = (0..self.dim).map(|i| self.ad_basis(i)).collect();
        let mut b = Matrix::zeros(self.dim, self.dim);
        for i in 0..self.dim {
            for j in i..self.dim {
                let t = ads[i].matmul(&ads[j]).trace();
                b[(j, i)] = t.clone();
                b[(i, j)] = t;
            }
        }
        b
    }

    /// Killing form from the table: `Σ_{k,l} c[i][k][l]·c[j][l][k]`.
    pub fn killing_form_from_table(&self) -> Matrix {
        let n = self.dim;
        let mut b = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                let mut s = Scalar::zero();
                for k in 0..n {
                    for l in 0..n {
                        let a = &self.bracket_basis(i, k)[l];
                        let c = &self.bracket_basis(j, l)[k];
                        if !a.is_zero() && !c.is_zero() {
                            s += &(a * c);
                        }
                    }
                }
                b[(i, j)] = s;
            }
        }
        b
    }

    /// True when the span of the given basis vectors is closed under bracket.
    pub fn is_subalgebra(&self, s: &Subspace) -> bool {
        s.basis
            .iter()
            .all(|x| s.basis.iter().all(|y| s.contains(&self.bracket(x, y))))
    }
}

/// A |k|-graded algebra with its parabolic subalgebra. Every basis vector is
/// homogeneous.
#[derive(Clone, Debug)]
pub struct GradedParabolic {
    pub algebra: LieAlgebra,
    pub grading: Vec<i64>,
    pub grading_element: Vector,
    pub depth: i64,
    pub parabolic: Subspace,
    pub nilradical: Subspace,
}

impl GradedParabolic {
    pub fn new(
        algebra: LieAlgebra,
        grading: Vec<i64>,
        grading_element: Vector,
    ) -> Result<GradedParabolic> {
        let n = algebra.dim();
        if grading.len() != n || grading_element.len() != n {
            return Err(BggError::Dimension("grading length".into()));
        }
        let depth = grading.iter().map(|g| g.abs()).max().unwrap_or(0);
        for i in 0..n {
            for j in 0..n {
                let c = algebra.bracket_basis(i, j);
                for (k, x) in c.iter().enumerate() {
                    if !x.is_zero() && grading[k] != grading[i] + grading[j] {
                        return Err(BggError::InvalidAlgebra(format!(
                            "[{}, {}] has a component in {} outside degree {}",
                            algebra.names[i],
                            algebra.names[j],
                            algebra.names[k],
                            grading[i] + grading[j]
                        )));
                    }
                }
            }
        }
        for j in 0..n {
            let image = algebra.bracket(&grading_element, &unit_vec(n, j));
            let expected = linalg::scale_vec(&unit_vec(n, j), &Scalar::from_int(grading[j]));
            if image != expected {
                return Err(BggError::InvalidAlgebra(format!(
                    "grading element does not act on {} by {}",
                    algebra.names[j], grading[j]
                )));
            }
        }
        let parabolic = Subspace::from_vectors(
            n,
            &(0..n)
                .filter(|&i| grading[i] >= 0)
                .map(|i| unit_vec(n, i))
                .collect::<Vec<_>>(),
        );
        let nilradical = Subspace::from_vectors(
            n,
            &(0..n)
                .filter(|&i| grading[i] > 0)
                .map(|i| unit_vec(n, i))
                .collect::<Vec<_>>(),
        );
        Ok(GradedParabolic {
            algebra,
            grading,
            grading_element,
            depth,
            parabolic,
            nilradical,
        })
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn negative_indices(&self) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.grading[i] < 0).collect()
    }

    pub fn positive_indices(&self) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.grading[i] > 0).collect()
    }

    pub fn indices_of_grade(&self, j: i64) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.grading[i] == j).collect()
    }

    /// Grade of a homogeneous vector, `None` for zero or mixed vectors.
    pub fn grade_of(&self, v: &[Scalar]) -> Option<i64> {
        let mut g = None;
        for (i, x) in v.iter().enumerate() {
            if !x.is_zero() {
                match g {
                    None => g = Some(self.grading[i]),
                    Some(h) if h != self.grading[i] => return None,
                    _ => {}
                }
            }
        }
        g
    }

    /// Component of `v` in `gⱼ`.
    pub fn component(&self, v: &[Scalar], j: i64) -> Vector {
        v.iter()
            .enumerate()
            .map(|(i, x)| {
                if self.grading[i] == j {
                    x.clone()
                } else {
                    Scalar::zero()
                }
            })
            .collect()
    }
}

/// Invariant form used to identify `p₊` with `(g/p)*`.
#[derive(Clone, Debug)]
pub enum PairingForm<'a> {
    Killing,
    /// `tr(ρ(x)ρ(y))` of a faithful representation.
    Trace(&'a Representation),
}

/// Dual bases `Xᵢ` of `g/p` and `Zᵢ` of `p₊` with `B(Zᵢ, Xⱼ) = δᵢⱼ`.
#[derive(Clone, Debug, Serialize)]
pub struct DualBasisPairing {
    /// Basis indices of `g₋`, used as representatives of `g/p`.
    pub quotient_basis: Vec<usize>,
    pub dual_basis: Vec<Vector>,
    pub pairing_matrix: Matrix,
}

impl DualBasisPairing {
    /// Coordinates of an element of `p₊` in the dual basis.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vector> {
        SpanCoordinates::new(v.len(), &self.dual_basis)
            .ok()?
            .coordinates(v)
    }
}

pub fn bilinear_form(g: &LieAlgebra, form: &PairingForm<'_>) -> Matrix {
    match form {
        PairingForm::Killing => g.killing_form(),
        PairingForm::Trace(rep) => {
            let n = g.dim();
            let mut b = Matrix::zeros(n, n);
            for i in 0..n {
                for j in 0..n {
                    b[(i, j)] = rep.rho[i].matmul(&rep.rho[j]).trace();
                }
            }
            b
        }
    }
}

pub fn dual_basis(g: &GradedParabolic, form: &PairingForm<'_>) -> Result<DualBasisPairing> {
    let neg = g.negative_indices();
    let pos = g.positive_indices();
    if neg.len() != pos.len() {
        return Err(BggError::DegeneratePairing(
            "dim g₋ differs from dim p₊".into(),
        ));
    }
    let b = bilinear_form(&g.algebra, form);
    let m = neg.len();
    let mut pm = Matrix::zeros(m, m);
    for (r, &p) in pos.iter().enumerate() {
        for (c, &q) in neg.iter().enumerate() {
            pm[(r, c)] = b[(p, q)].clone();
        }
    }
    let z = linalg::inverse(&pm)
        .map_err(|_| BggError::DegeneratePairing("form is degenerate on p₊ × g/p".into()))?;
    let n = g.dim();
    let dual: Vec<Vector> = (0..m)
        .map(|a| {
            let mut v = zero_vec(n);
            for (r, &p) in pos.iter().enumerate() {
                v[p] = z[(a, r)].clone();
            }
            v
        })
        .collect();
    let mut pairing = Matrix::zeros(m, m);
    for a in 0..m {
        let bz = Matrix::from_cols(n, &[dual[a].clone()])
            .transpose()
            .matmul(&b);
        for (c, &q) in neg.iter().enumerate() {
            pairing[(a, c)] = bz[(0, q)].clone();
        }
    }
    if pairing != Matrix::identity(m) {
        return Err(BggError::DegeneratePairing(
            "dual basis check failed".into(),
        ));
    }
    Ok(DualBasisPairing {
        quotient_basis: neg,
        dual_basis: dual,
        pairing_matrix: pairing,
    })
}

/// Symmetry algebra `k` with isotropy `h` spanned by basis vectors.
#[derive(Clone, Debug)]
pub struct SymmetryPair {
    pub algebra: LieAlgebra,
    pub isotropy: Subspace,
    pub complement: Subspace,
    pub isotropy_indices: Vec<usize>,
    pub complement_indices: Vec<usize>,
    /// Filtration degree of each basis vector of `k` (`h` in degree ≥ 0).
    pub degrees: Vec<i64>,
}

impl SymmetryPair {
    pub fn new(
        algebra: LieAlgebra,
        isotropy_indices: Vec<usize>,
        degrees: Vec<i64>,
    ) -> Result<SymmetryPair> {
        let n = algebra.dim();
        if degrees.len() != n {
            return Err(BggError::Dimension(
                "one degree per basis vector of k".into(),
            ));
        }
        let complement_indices: Vec<usize> =
            (0..n).filter(|i| !isotropy_indices.contains(i)).collect();
        let isotropy = Subspace::from_vectors(
            n,
            &isotropy_indices
                .iter()
                .map(|&i| unit_vec(n, i))
                .collect::<Vec<_>>(),
        );
        let complement = Subspace::from_vectors(
            n,
            &complement_indices
                .iter()
                .map(|&i| unit_vec(n, i))
                .collect::<Vec<_>>(),
        );
        if !algebra.is_subalgebra(&isotropy) {
            return Err(BggError::InvalidAlgebra(
                "isotropy is not a subalgebra".into(),
            ));
        }
        Ok(SymmetryPair {
            algebra,
            isotropy,
            complement,
            isotropy_indices,
            complement_indices,
            degrees,
        })
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn is_isotropy(&self, i: usize) -> bool {
        self.isotropy_indices.contains(&i)
    }
}

/// Representation of `g` by one matrix per basis vector.
#[derive(Clone, Debug, Serialize)]
pub struct Representation {
    pub name: String,
    pub dim: usize,
    pub rho: Vec<Matrix>,
    /// Trace direction of `V* ⊗ V`, kept when the adjoint sits inside `gl(V)`.
    pub trace_direction: Option<Vector>,
}

impl Representation {
    pub fn new(name: impl Into<String>, rho: Vec<Matrix>) -> Result<Representation> {
        let dim = rho.first().map_or(0, Matrix::rows);
        if rho.iter().any(|m| m.rows() != dim || m.cols() != dim) {
            return Err(BggError::Dimension(
                "representation matrices differ in size".into(),
            ));
        }
        Ok(Representation {
            name: name.into(),
            dim,
            rho,
            trace_direction: None,
        })
    }

    pub fn trivial(g: &LieAlgebra, dim: usize) -> Representation {
        Representation {
            name: "trivial".into(),
            dim,
            rho: vec![Matrix::zeros(dim, dim); g.dim()],
            trace_direction: None,
        }
    }

    /// `ρ(x)` for a coordinate vector `x`.
    pub fn act(&self, x: &[Scalar]) -> Matrix {
        let mut m = Matrix::zeros(self.dim, self.dim);
        for (a, r) in x.iter().zip(&self.rho) {
            if !a.is_zero() {
                m.axpy(a, r);
            }
        }
        m
    }

    /// First basis pair violating `ρ([x,y]) = [ρ(x), ρ(y)]`.
    pub fn homomorphism_violation(&self, g: &LieAlgebra) -> Option<(usize, usize)> {
        if self.rho.len() != g.dim() {
            return Some((0, 0));
        }
        for i in 0..g.dim() {
            for j in (i + 1)..g.dim() {
                if self.act(g.bracket_basis(i, j)) != self.rho[i].commutator(&self.rho[j]) {
                    return Some((i, j));
                }
            }
        }
        None
    }

    pub fn validate(&self, g: &LieAlgebra) -> Result<()> {
        match self.homomorphism_violation(g) {
            None => Ok(()),
            Some((i, j)) => Err(BggError::InvalidRepresentation(format!(
                "{}: ρ([{},{}]) ≠ [ρ({}),ρ({})]",
                self.name, g.names[i], g.names[j], g.names[i], g.names[j]
            ))),
        }
    }

    pub fn dual(&self) -> Representation {
        Representation {
            name: format!("dual({})", self.name),
            dim: self.dim,
            rho: self.rho.iter().map(|m| -&m.transpose()).collect(),
            trace_direction: None,
        }
    }

    pub fn conjugate(&self) -> Representation {
        Representation {
            name: format!("conj({})", self.name),
            dim: self.dim,
            rho: self.rho.iter().map(Matrix::conj_i).collect(),
            trace_direction: None,
        }
    }

    /// `ρ_A ⊗ 1 + 1 ⊗ ρ_B` with the Kronecker index `i·dim B + j`.
    pub fn tensor(&self, other: &Representation) -> Representation {
        let ia = Matrix::identity(self.dim);
        let ib = Matrix::identity(other.dim);
        let rho = self
            .rho
            .iter()
            .zip(&other.rho)
            .map(|(a, b)| &a.kron(&ib) + &ia.kron(b))
            .collect();
        Representation {
            name: format!("{}⊗{}", self.name, other.name),
            dim: self.dim * other.dim,
            rho,
            trace_direction: None,
        }
    }

    fn on_matrices(&self, name: String, pairs: Vec<(usize, usize)>, sym: bool) -> Representation {
        let n = self.dim;
        let d = pairs.len();
        let index = |k: usize, l: usize| pairs.iter().position(|&(a, b)| a == k && b == l);
        let sign = if sym {
            Scalar::one()
        } else {
            Scalar::from_int(-1)
        };
        let rho = self
            .rho
            .iter()
            .map(|x| {
                let mut m = Matrix::zeros(d, d);
                for (c, &(i, j)) in pairs.iter().enumerate() {
                    let mut w = Matrix::zeros(n, n);
                    w[(i, j)] = Scalar::one();
                    w[(j, i)] = if i == j { Scalar::one() } else { sign.clone() };
                    let img = &x.matmul(&w) + &w.matmul(&x.transpose());
                    for k in 0..n {
                        for l in k..n {
                            if let Some(r) = index(k, l) {
                                m[(r, c)] = img[(k, l)].clone();
                            }
                        }
                    }
                }
                m
            })
            .collect();
        Representation {
            name,
            dim: d,
            rho,
            trace_direction: None,
        }
    }

    /// Symmetric square, basis `eᵢeⱼ` (i ≤ j) ordered column by column.
    pub fn sym2(&self) -> Representation {
        let n = self.dim;
        let pairs = (0..n).flat_map(|j| (0..=j).map(move |i| (i, j))).collect();
        self.on_matrices(format!("S²({})", self.name), pairs, true)
    }

    /// Exterior square, basis `eᵢ∧eⱼ` (i < j) ordered column by column.
    pub fn alt2(&self) -> Representation {
        let n = self.dim;
        let pairs = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
        self.on_matrices(format!("Λ²({})", self.name), pairs, false)
    }

    pub fn adjoint(g: &LieAlgebra) -> Representation {
        Representation {
            name: "adjoint".into(),
            dim: g.dim(),
            rho: (0..g.dim()).map(|i| g.ad_basis(i)).collect(),
            trace_direction: None,
        }
    }

    /// `gl(V) = V* ⊗ V`; index `i·n + j` is the matrix unit `E_{ji}`, so
    /// matrix entries are numbered column by column. The identity is flagged.
    pub fn adjoint_gl(&self) -> Representation {
        let mut r = self.dual().tensor(self);
        let n = self.dim;
        let mut t = zero_vec(n * n);
        for i in 0..n {
            t[i * n + i] = Scalar::one();
        }
        r.name = format!("gl({})", self.name);
        r.trace_direction = Some(t);
        r
    }

    /// Index in `adjoint_gl` of the matrix entry `(row, col)`.
    pub fn gl_index(n: usize, row: usize, col: usize) -> usize {
        col * n + row
    }

    /// Subrepresentation on an invariant subspace, in its stored basis.
    pub fn restrict(&self, s: &Subspace) -> Result<Representation> {
        let rho = self
            .rho
            .iter()
            .map(|m| {
                s.restrict(m).ok_or_else(|| {
                    BggError::InvalidRepresentation("subspace is not invariant".into())
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Representation {
            name: format!("sub({})", self.name),
            dim: s.dim(),
            rho,
            trace_direction: None,
        })
    }
}

/// Eigenspace decomposition of `ρ(E)`.
#[derive(Clone, Debug, Serialize)]
pub struct WeightDecomposition {
    /// Descending.
    pub eigenvalues: Vec<Rational>,
    pub components: Vec<Subspace>,
    /// Weight of each basis vector when `ρ(E)` is diagonal.
    pub basis_weights: Option<Vec<Rational>>,
}

impl WeightDecomposition {
    pub fn dims(&self) -> Vec<usize> {
        self.components.iter().map(Subspace::dim).collect()
    }

    /// `V^ℓ = ⊕_{j ≥ ℓ} Vⱼ`.
    pub fn filtration(&self, l: &Rational) -> Subspace {
        let n = self.components.first().map_or(0, |c| c.ambient_dim);
        let mut s = Subspace::zero(n);
        for (e, c) in self.eigenvalues.iter().zip(&self.components) {
            if e >= l {
                s = s.sum(c).expect("equal ambient dimension");
            }
        }
        s
    }
}

pub fn weight_decomposition(
    rep: &Representation,
    g: &GradedParabolic,
) -> Result<WeightDecomposition> {
    let e = rep.act(&g.grading_element);
    let n = rep.dim;
    let diagonal = (0..n).all(|i| (0..n).all(|j| i == j || e[(i, j)].is_zero()));
    let mut eigenvalues: Vec<Rational> = if diagonal {
        (0..n)
            .map(|i| {
                e[(i, i)]
                    .as_rational()
                    .cloned()
                    .ok_or_else(|| BggError::Unsupported("non-rational weight".into()))
            })
            .collect::<Result<Vec<_>>>()?
    } else {
        minimal_polynomial(&e)
            .distinct_roots()?
            .into_iter()
            .map(|r| {
                r.as_rational()
                    .cloned()
                    .ok_or_else(|| BggError::Unsupported("non-rational weight".into()))
            })
            .collect::<Result<Vec<_>>>()?
    };
    let basis_weights = diagonal.then(|| eigenvalues.clone());
    eigenvalues.sort();
    eigenvalues.dedup();
    eigenvalues.reverse();
    let mut components = Vec::new();
    let mut total = 0;
    for l in &eigenvalues {
        let shifted = &e - &Matrix::identity(n).scale(&Scalar::from_rational(l.clone()));
        let c = linalg::nullspace(&shifted);
        total += c.dim();
        components.push(c);
    }
    if total != n {
        return Err(BggError::Unsupported(
            "grading element is not diagonalizable on this representation".into(),
        ));
    }
    Ok(WeightDecomposition {
        eigenvalues,
        components,
        basis_weights,
    })
}

/// Residuals `map∘a(Y) − b(Y)∘map` for each `Y` in `h`.
pub fn equivariance_residual(
    map: &Matrix,
    h: &[Vector],
    source_action: impl Fn(&Vector) -> Matrix,
    target_action: impl Fn(&Vector) -> Matrix,
) -> Vec<Matrix> {
    h.iter()
        .map(|y| &map.matmul(&source_action(y)) - &target_action(y).matmul(map))
        .collect()
}
