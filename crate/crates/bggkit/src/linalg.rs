//! Exact elimination: reduced echelon forms, kernels, affine solves and the
//! lattice of subspaces.
//!
//! Echelon forms use the leftmost pivot of each row, scaled to 1, with every
//! other entry of a pivot column cleared. Subspaces are stored in this form,
//! so two subspaces are equal exactly when their stored bases are equal.

use serde::Serialize;

use crate::error::{BggError, Result};
use crate::matrix::Matrix;
use crate::scalar::Scalar;

pub type Vector = Vec<Scalar>;

pub fn zero_vec(n: usize) -> Vector {
    vec![Scalar::zero(); n]
}

pub fn unit_vec(n: usize, i: usize) -> Vector {
    let mut v = zero_vec(n);
    v[i] = Scalar::one();
    v
}

pub fn is_zero_vec(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

pub fn dot(a: &[Scalar], b: &[Scalar]) -> Scalar {
    let mut s = Scalar::zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            s += &(x * y);
        }
    }
    s
}

/// `y += s·x`.
pub fn axpy(y: &mut [Scalar], s: &Scalar, x: &[Scalar]) {
    if s.is_zero() {
        return;
    }
    for (a, b) in y.iter_mut().zip(x) {
        if !b.is_zero() {
            *a += &(s * b);
        }
    }
}

pub fn scale_vec(v: &[Scalar], s: &Scalar) -> Vector {
    v.iter()
        .map(|x| if x.is_zero() { Scalar::zero() } else { x * s })
        .collect()
}

pub fn add_vec(a: &[Scalar], b: &[Scalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub_vec(a: &[Scalar], b: &[Scalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn leading(v: &[Scalar]) -> Option<usize> {
    v.iter().position(|x| !x.is_zero())
}

/// Incrementally maintained reduced row echelon form.
#[derive(Clone, Debug)]
pub struct Echelon {
    ncols: usize,
    rows: Vec<Vector>,
    pivots: Vec<usize>,
}

impl Echelon {
    pub fn new(ncols: usize) -> Echelon {
        Echelon {
            ncols,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn rows(&self) -> &[Vector] {
        &self.rows
    }

    /// Reduces `v` against the stored rows, returning the remainder.
    pub fn reduce(&self, v: &[Scalar]) -> Vector {
        let mut v = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if !v[p].is_zero() {
                let f = -v[p].clone();
                axpy(&mut v[p..], &f, &row[p..]);
            }
        }
        v
    }

    /// Adds a vector; returns true when it increased the rank.
    pub fn insert(&mut self, v: &[Scalar]) -> bool {
        assert_eq!(v.len(), self.ncols, "echelon width");
        let mut r = self.reduce(v);
        let Some(p) = leading(&r) else {
            return false;
        };
        let inv = r[p].inv();
        for x in r[p..].iter_mut() {
            if !x.is_zero() {
                *x = &*x * &inv;
            }
        }
        for row in self.rows.iter_mut() {
            if !row[p].is_zero() {
                let f = -row[p].clone();
                axpy(&mut row[p..], &f, &r[p..]);
            }
        }
        let pos = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(pos, p);
        self.rows.insert(pos, r);
        true
    }

    pub fn into_subspace(self) -> Subspace {
        Subspace {
            ambient_dim: self.ncols,
            basis: self.rows,
            pivots: self.pivots,
        }
    }
}

/// A subspace of `ambient_dim`-space in canonical reduced echelon form.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize)]
pub struct Subspace {
    pub ambient_dim: usize,
    pub basis: Vec<Vector>,
    #[serde(skip)]
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(n: usize) -> Subspace {
        Subspace {
            ambient_dim: n,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(n: usize) -> Subspace {
        Subspace {
            ambient_dim: n,
            basis: (0..n).map(|i| unit_vec(n, i)).collect(),
            pivots: (0..n).collect(),
        }
    }

    pub fn span<'a, I: IntoIterator<Item = &'a Vector>>(n: usize, vectors: I) -> Subspace {
        let mut e = Echelon::new(n);
        for v in vectors {
            e.insert(v);
        }
        e.into_subspace()
    }

    pub fn from_vectors(n: usize, vectors: &[Vector]) -> Subspace {
        Subspace::span(n, vectors.iter())
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    fn echelon(&self) -> Echelon {
        Echelon {
            ncols: self.ambient_dim,
            rows: self.basis.clone(),
            pivots: self.pivots.clone(),
        }
    }

    fn check(&self, other: &Subspace) -> Result<()> {
        if self.ambient_dim != other.ambient_dim {
            return Err(BggError::Dimension(format!(
                "subspaces of {}- and {}-dimensional spaces",
                self.ambient_dim, other.ambient_dim
            )));
        }
        Ok(())
    }

    /// Component of `v` outside the subspace along the pivot coordinates.
    pub fn residual(&self, v: &[Scalar]) -> Vector {
        let mut v = v.to_vec();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            if !v[p].is_zero() {
                let f = -v[p].clone();
                axpy(&mut v[p..], &f, &row[p..]);
            }
        }
        v
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        is_zero_vec(&self.residual(v))
    }

    /// Coordinates with respect to the stored basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vector> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check(other)?;
        let mut e = self.echelon();
        for v in &other.basis {
            e.insert(v);
        }
        Ok(e.into_subspace())
    }

    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check(other)?;
        if self.dim() == 0 || other.dim() == 0 {
            return Ok(Subspace::zero(self.ambient_dim));
        }
        // t ↦ Σ tᵢ uᵢ lands in `other` iff its residual modulo `other` vanishes.
        let cols: Vec<Vector> = self.basis.iter().map(|u| other.residual(u)).collect();
        let m = Matrix::from_cols(self.ambient_dim, &cols);
        let kernel = nullspace(&m);
        let vecs: Vec<Vector> = kernel.basis.iter().map(|t| self.combine(t)).collect();
        Ok(Subspace::from_vectors(self.ambient_dim, &vecs))
    }

    /// Basis vectors of `self` that complete a basis of `sub` to one of `self`.
    pub fn quotient_basis(&self, sub: &Subspace) -> Result<Vec<Vector>> {
        self.check(sub)?;
        let mut e = sub.echelon();
        let mut out = Vec::new();
        for v in &self.basis {
            if e.insert(v) {
                out.push(v.clone());
            }
        }
        Ok(out)
    }

    /// `Σ tᵢ bᵢ` for the stored basis.
    pub fn combine(&self, t: &[Scalar]) -> Vector {
        let mut v = zero_vec(self.ambient_dim);
        for (c, b) in t.iter().zip(&self.basis) {
            axpy(&mut v, c, b);
        }
        v
    }

    /// Matrix whose columns are the basis vectors.
    pub fn basis_matrix(&self) -> Matrix {
        Matrix::from_cols(self.ambient_dim, &self.basis)
    }

    /// Image of the subspace under `m`.
    pub fn image(&self, m: &Matrix) -> Subspace {
        let imgs: Vec<Vector> = self.basis.iter().map(|b| m.mul_vec(b)).collect();
        Subspace::from_vectors(m.rows(), &imgs)
    }

    /// Coordinates of the basis vectors that may carry nonzero entries.
    pub fn support(&self) -> Vec<usize> {
        (0..self.ambient_dim)
            .filter(|&j| self.basis.iter().any(|b| !b[j].is_zero()))
            .collect()
    }

    /// Matrix of the restriction of `m` to this subspace in the stored basis,
    /// or `None` when the subspace is not `m`-invariant.
    pub fn restrict(&self, m: &Matrix) -> Option<Matrix> {
        let d = self.dim();
        let mut r = Matrix::zeros(d, d);
        for (j, b) in self.basis.iter().enumerate() {
            let c = self.coordinates(&m.mul_vec(b))?;
            for (i, x) in c.into_iter().enumerate() {
                r[(i, j)] = x;
            }
        }
        Some(r)
    }
}

/// Exact kernel of `m`.
pub fn nullspace(m: &Matrix) -> Subspace {
    let mut e = Echelon::new(m.cols());
    for i in 0..m.rows() {
        if e.rank() == m.cols() {
            break;
        }
        let row = m.row(i);
        if !is_zero_vec(row) {
            e.insert(row);
        }
    }
    kernel_from_echelon(&e)
}

/// Kernel of the linear map whose rows are given by the echelon form.
pub fn kernel_from_echelon(e: &Echelon) -> Subspace {
    let n = e.ncols;
    let is_pivot = {
        let mut v = vec![false; n];
        for &p in &e.pivots {
            v[p] = true;
        }
        v
    };
    let mut vecs = Vec::new();
    for f in (0..n).filter(|&j| !is_pivot[j]) {
        let mut x = zero_vec(n);
        x[f] = Scalar::one();
        for (row, &p) in e.rows.iter().zip(&e.pivots) {
            if !row[f].is_zero() {
                x[p] = -row[f].clone();
            }
        }
        vecs.push(x);
    }
    Subspace::from_vectors(n, &vecs)
}

/// Solution set of a linear system `a·x = b`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AffineSolutionSet {
    pub particular: Option<Vector>,
    pub homogeneous: Subspace,
}

impl AffineSolutionSet {
    pub fn is_empty(&self) -> bool {
        self.particular.is_none()
    }

    pub fn dim(&self) -> usize {
        self.homogeneous.dim()
    }

    pub fn contains(&self, x: &[Scalar]) -> bool {
        match &self.particular {
            None => false,
            Some(p) => self.homogeneous.contains(&sub_vec(x, p)),
        }
    }
}

/// Solves `a·x = b`; an inconsistent system yields an empty set, not an error.
pub fn solve_affine(a: &Matrix, b: &[Scalar]) -> Result<AffineSolutionSet> {
    if a.rows() != b.len() {
        return Err(BggError::Dimension(format!(
            "{} rows but {} right-hand entries",
            a.rows(),
            b.len()
        )));
    }
    let n = a.cols();
    let mut e = Echelon::new(n + 1);
    for i in 0..a.rows() {
        let mut row = a.row(i).to_vec();
        row.push(b[i].clone());
        if !is_zero_vec(&row) {
            e.insert(&row);
        }
    }
    let homogeneous = {
        let mut h = Echelon::new(n);
        for (row, &p) in e.rows.iter().zip(&e.pivots) {
            if p < n {
                h.insert(&row[..n]);
            }
        }
        kernel_from_echelon(&h)
    };
    if e.pivots.last() == Some(&n) {
        return Ok(AffineSolutionSet {
            particular: None,
            homogeneous,
        });
    }
    let mut x = zero_vec(n);
    for (row, &p) in e.rows.iter().zip(&e.pivots) {
        x[p] = row[n].clone();
    }
    Ok(AffineSolutionSet {
        particular: Some(x),
        homogeneous,
    })
}

/// Rank of a matrix.
pub fn rank(m: &Matrix) -> usize {
    let mut e = Echelon::new(m.cols());
    for i in 0..m.rows() {
        e.insert(m.row(i));
    }
    e.rank()
}

/// Inverse of a square matrix.
pub fn inverse(m: &Matrix) -> Result<Matrix> {
    if !m.is_square() {
        return Err(BggError::Dimension("inverse of a non-square matrix".into()));
    }
    let n = m.rows();
    let mut e = Echelon::new(2 * n);
    for i in 0..n {
        let mut row = m.row(i).to_vec();
        row.extend(unit_vec(n, i));
        e.insert(&row);
    }
    if e.rank() < n || e.pivots[n - 1] >= n {
        return Err(BggError::DivisionByZero);
    }
    let rows: Vec<Vector> = e.rows.iter().map(|r| r[n..].to_vec()).collect();
    Matrix::from_rows(rows)
}

/// Solves `m·X = rhs` for square invertible `m`.
pub fn solve_square(m: &Matrix, rhs: &[Scalar]) -> Result<Vector> {
    let s = solve_affine(m, rhs)?;
    match s.particular {
        Some(p) if s.homogeneous.dim() == 0 => Ok(p),
        Some(_) => Err(BggError::Dimension("singular system".into())),
        None => Err(BggError::Dimension("inconsistent system".into())),
    }
}

/// Coordinates with respect to a fixed list of independent vectors, through
/// an invertible square selection of their rows.
#[derive(Clone, Debug)]
pub struct SpanCoordinates {
    rows: Vec<usize>,
    inv: Matrix,
    basis: Vec<Vector>,
}

impl SpanCoordinates {
    pub fn new(ambient_dim: usize, basis: &[Vector]) -> Result<SpanCoordinates> {
        let d = basis.len();
        let mut e = Echelon::new(ambient_dim);
        for b in basis {
            e.insert(b);
        }
        if e.rank() < d {
            return Err(BggError::Dimension("dependent spanning vectors".into()));
        }
        let rows = e.pivots.clone();
        let mut sel = Matrix::zeros(d, d);
        for (i, &r) in rows.iter().enumerate() {
            for (j, b) in basis.iter().enumerate() {
                sel[(i, j)] = b[r].clone();
            }
        }
        let inv = inverse(&sel)?;
        Ok(SpanCoordinates {
            rows,
            inv,
            basis: basis.to_vec(),
        })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Coordinates of `v`, or `None` if it is outside the span.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vector> {
        let picked: Vector = self.rows.iter().map(|&r| v[r].clone()).collect();
        let c = self.inv.mul_vec(&picked);
        let mut back = zero_vec(v.len());
        for (x, b) in c.iter().zip(&self.basis) {
            axpy(&mut back, x, b);
        }
        (back == v).then_some(c)
    }
}
