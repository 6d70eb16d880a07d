//! Forms `Λᵏp₊ ⊗ V`: the codifferential, the Lie algebra differentials, the
//! Kostant Laplacian, splitting polynomials and cohomology.
//!
//! A form is stored by its values on increasing tuples of the `g₋` basis:
//! the coefficient of `Z_I ⊗ v` is `φ(X_I)`. Layout is monomial-major,
//! index `monomial · dim V + j`.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex};

use serde::Serialize;

use crate::error::{BggError, Result};
use crate::lie::{
    weight_decomposition, DualBasisPairing, GradedParabolic, LieAlgebra, Representation,
};
use crate::linalg::{self, SpanCoordinates, Subspace, Vector};
use crate::matrix::Matrix;
use crate::poly::{minimal_polynomial, UniPoly};
use crate::rational::Rational;
use crate::scalar::Scalar;
use crate::sparse::SparseMatrix;

/// Increasing index tuples of length `degree` from `0..m`, in lexicographic order.
#[derive(Clone, Debug)]
pub struct FormBasis {
    pub m: usize,
    pub degree: usize,
    pub monomials: Vec<Vec<usize>>,
    index: HashMap<Vec<usize>, usize>,
}

impl FormBasis {
    pub fn new(m: usize, degree: usize) -> FormBasis {
        let mut monomials = Vec::new();
        let mut cur = Vec::new();
        fn rec(start: usize, m: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if cur.len() == k {
                out.push(cur.clone());
                return;
            }
            for a in start..m {
                cur.push(a);
                rec(a + 1, m, k, cur, out);
                cur.pop();
            }
        }
        if degree <= m {
            rec(0, m, degree, &mut cur, &mut monomials);
        }
        let index = monomials
            .iter()
            .enumerate()
            .map(|(i, v)| (v.clone(), i))
            .collect();
        FormBasis {
            m,
            degree,
            monomials,
            index,
        }
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn index_of(&self, mono: &[usize]) -> Option<usize> {
        self.index.get(mono).copied()
    }
}

/// Inserts `c` into the increasing tuple `rest`; returns the sorted tuple and
/// the sign of the permutation, or `None` if `c` is already present.
fn insert_sorted(c: usize, rest: &[usize]) -> Option<(Vec<usize>, bool)> {
    if rest.contains(&c) {
        return None;
    }
    let pos = rest.iter().filter(|&&x| x < c).count();
    let mut v = rest.to_vec();
    v.insert(pos, c);
    Some((v, pos % 2 == 0))
}

fn signed(x: &Scalar, positive: bool) -> Scalar {
    if positive {
        x.clone()
    } else {
        -x
    }
}

/// Chevalley–Eilenberg differential on `Λᵏ L* ⊗ V` for the representation
/// `sigma` of `L`, forms stored by values on increasing basis tuples.
pub fn chevalley_eilenberg(
    l: &LieAlgebra,
    sigma: &[SparseMatrix],
    dim_v: usize,
    k: usize,
) -> SparseMatrix {
    let m = l.dim();
    let src = FormBasis::new(m, k);
    let dst = FormBasis::new(m, k + 1);
    let mut trip = Vec::new();
    for (bi, b) in dst.monomials.iter().enumerate() {
        for i in 0..b.len() {
            let mut rest = b.clone();
            let bi_elem = rest.remove(i);
            let si = src.index_of(&rest).expect("sub-monomial");
            let sign = i % 2 == 0;
            for (r, row) in sigma[bi_elem].data_rows().enumerate() {
                for (c, x) in row {
                    trip.push((bi * dim_v + r, si * dim_v + c, signed(x, sign)));
                }
            }
        }
        for i in 0..b.len() {
            for j in (i + 1)..b.len() {
                let rest: Vec<usize> = b
                    .iter()
                    .enumerate()
                    .filter(|(p, _)| *p != i && *p != j)
                    .map(|(_, x)| *x)
                    .collect();
                let br = l.bracket_basis(b[i], b[j]);
                let sign_ij = (i + j) % 2 == 0;
                for (c, coeff) in br.iter().enumerate() {
                    if coeff.is_zero() {
                        continue;
                    }
                    if let Some((mono, s)) = insert_sorted(c, &rest) {
                        let si = src.index_of(&mono).expect("monomial");
                        let f = signed(coeff, s == sign_ij);
                        for v in 0..dim_v {
                            trip.push((bi * dim_v + v, si * dim_v + v, f.clone()));
                        }
                    }
                }
            }
        }
    }
    SparseMatrix::from_triplets(dst.len() * dim_v, src.len() * dim_v, trip)
}

/// Coefficients `q₁…q_d` of `Q = Σ qⱼ tʲ⁻¹`, with the annihilating polynomial.
#[derive(Clone, Debug, Serialize)]
pub struct QPolynomial {
    pub coefficients: Vec<Scalar>,
    #[serde(skip)]
    pub annihilator: UniPoly,
    /// Minimal polynomial of □ per homogeneity block, as `(homogeneity, roots)`.
    pub block_spectra: Vec<(Rational, Vec<Scalar>)>,
}

impl QPolynomial {
    pub fn eval_matrix(&self, m: &Matrix) -> Matrix {
        UniPoly::new(self.coefficients.clone()).eval_matrix(m)
    }

    /// Coefficients of `L₀ = id − Σ qⱼ Tʲ` in powers `T¹…T^d`.
    pub fn splitting_coefficients(&self) -> Vec<Scalar> {
        self.coefficients.iter().map(|q| -q).collect()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CohomologySpace {
    pub degree: usize,
    pub kernel: Subspace,
    pub image: Subspace,
    pub representatives: Subspace,
    /// Projection onto the harmonic representatives along `Im ∂* ⊕ Im ∂`.
    pub projection: Matrix,
}

impl CohomologySpace {
    pub fn dim(&self) -> usize {
        self.representatives.dim()
    }

    /// Coordinates of `π(v)` in the representative basis.
    pub fn class_of(&self, v: &[Scalar]) -> Vector {
        let p = self.projection.mul_vec(v);
        self.representatives
            .coordinates(&p)
            .expect("projection lands in representatives")
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
enum Op {
    Codiff,
    DiffNeg,
    Laplacian,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Subalgebra {
    Full,
    Negative,
}

/// The complex `Λ•p₊ ⊗ V` for a graded algebra, a pairing and a representation.
#[derive(Debug)]
pub struct KostantComplex {
    pub dim_v: usize,
    /// `dim g₋`.
    pub m: usize,
    rho_z: Vec<SparseMatrix>,
    rho_x: Vec<SparseMatrix>,
    rho_full: Vec<SparseMatrix>,
    z_bracket: Vec<Vec<Vector>>,
    neg_algebra: LieAlgebra,
    full_algebra: LieAlgebra,
    pub z_weights: Vec<i64>,
    pub v_weights: Vec<Rational>,
    cache: Mutex<HashMap<(Op, usize), Arc<SparseMatrix>>>,
}

impl KostantComplex {
    pub fn new(
        g: &GradedParabolic,
        pairing: &DualBasisPairing,
        rep: &Representation,
    ) -> Result<KostantComplex> {
        let wd = weight_decomposition(rep, g)?;
        let v_weights = wd.basis_weights.ok_or_else(|| {
            BggError::Unsupported(format!("ρ(E) is not diagonal in the basis of {}", rep.name))
        })?;
        let neg = &pairing.quotient_basis;
        let m = neg.len();
        let n = g.dim();
        let rho_z = pairing
            .dual_basis
            .iter()
            .map(|z| SparseMatrix::from_dense(&rep.act(z)))
            .collect();
        let rho_x = neg
            .iter()
            .map(|&a| SparseMatrix::from_dense(&rep.rho[a]))
            .collect();
        let rho_full = rep.rho.iter().map(SparseMatrix::from_dense).collect();
        let zc = SpanCoordinates::new(n, &pairing.dual_basis)?;
        let mut z_bracket = vec![vec![Vec::new(); m]; m];
        for a in 0..m {
            for b in 0..m {
                let br = g
                    .algebra
                    .bracket(&pairing.dual_basis[a], &pairing.dual_basis[b]);
                z_bracket[a][b] = zc.coordinates(&br).ok_or_else(|| {
                    BggError::InvalidAlgebra("p₊ is not closed under bracket".into())
                })?;
            }
        }
        let mut triples = Vec::new();
        for a in 0..m {
            for b in (a + 1)..m {
                let br = g.algebra.bracket_basis(neg[a], neg[b]);
                for (c, x) in br.iter().enumerate() {
                    if x.is_zero() {
                        continue;
                    }
                    let pos = neg.iter().position(|&q| q == c).ok_or_else(|| {
                        BggError::InvalidAlgebra("g₋ is not closed under bracket".into())
                    })?;
                    triples.push((a, b, pos, x.clone()));
                }
            }
        }
        let neg_algebra = LieAlgebra::from_triples(
            neg.iter().map(|&a| g.algebra.names[a].clone()).collect(),
            &triples,
        )?;
        let z_weights = neg.iter().map(|&a| -g.grading[a]).collect();
        Ok(KostantComplex {
            dim_v: rep.dim,
            m,
            rho_z,
            rho_x,
            rho_full,
            z_bracket,
            neg_algebra,
            full_algebra: g.algebra.clone(),
            z_weights,
            v_weights,
            cache: Mutex::new(HashMap::new()),
        })
    }

    pub fn form_basis(&self, k: usize) -> FormBasis {
        FormBasis::new(self.m, k)
    }

    pub fn dim(&self, k: usize) -> usize {
        self.form_basis(k).len() * self.dim_v
    }

    /// Total homogeneity of each basis element of `Λᵏp₊ ⊗ V`.
    pub fn homogeneity(&self, k: usize) -> Vec<Rational> {
        let fb = self.form_basis(k);
        let mut out = Vec::with_capacity(fb.len() * self.dim_v);
        for mono in &fb.monomials {
            let zw: i64 = mono.iter().map(|&a| self.z_weights[a]).sum();
            let zw = Rational::from_int(zw);
            for w in &self.v_weights {
                out.push(&zw + w);
            }
        }
        out
    }

    /// Basis indices grouped by homogeneity, ascending.
    pub fn homogeneity_blocks(&self, k: usize) -> Vec<(Rational, Vec<usize>)> {
        let mut map: BTreeMap<Rational, Vec<usize>> = BTreeMap::new();
        for (i, h) in self.homogeneity(k).into_iter().enumerate() {
            map.entry(h).or_default().push(i);
        }
        map.into_iter().collect()
    }

    fn cached(&self, op: Op, k: usize, build: impl FnOnce() -> SparseMatrix) -> Arc<SparseMatrix> {
        if let Some(m) = self.cache.lock().expect("cache lock").get(&(op, k)) {
            return m.clone();
        }
        let m = Arc::new(build());
        self.cache
            .lock()
            .expect("cache lock")
            .insert((op, k), m.clone());
        m
    }

    /// `∂* : Λᵏp₊⊗V → Λᵏ⁻¹p₊⊗V`.
    pub fn codifferential(&self, k: usize) -> Result<Arc<SparseMatrix>> {
        if k == 0 {
            return Err(BggError::Dimension(
                "codifferential of degree-0 forms".into(),
            ));
        }
        Ok(self.cached(Op::Codiff, k, || self.build_codiff(k)))
    }

    fn build_codiff(&self, k: usize) -> SparseMatrix {
        let src = self.form_basis(k);
        let dst = self.form_basis(k - 1);
        let dv = self.dim_v;
        let mut trip = Vec::new();
        for (si, mono) in src.monomials.iter().enumerate() {
            // Σ_p (−1)^p Z_{I∖aₚ} ⊗ ρ(Z_{aₚ})v, positions counted from 0.
            for p in 0..mono.len() {
                let mut rest = mono.clone();
                let a = rest.remove(p);
                let di = dst.index_of(&rest).expect("sub-monomial");
                let sign = p % 2 == 0;
                for (r, row) in self.rho_z[a].data_rows().enumerate() {
                    for (c, x) in row {
                        trip.push((di * dv + r, si * dv + c, signed(x, sign)));
                    }
                }
            }
            // Σ_{p<q} (−1)^{p+q+1} [Z_{aₚ}, Z_{a_q}] ∧ Z_{I∖{aₚ,a_q}} ⊗ v
            for p in 0..mono.len() {
                for q in (p + 1)..mono.len() {
                    let rest: Vec<usize> = mono
                        .iter()
                        .enumerate()
                        .filter(|(t, _)| *t != p && *t != q)
                        .map(|(_, x)| *x)
                        .collect();
                    let sign_pq = (p + q) % 2 == 1;
                    for (c, coeff) in self.z_bracket[mono[p]][mono[q]].iter().enumerate() {
                        if coeff.is_zero() {
                            continue;
                        }
                        if let Some((out, s)) = insert_sorted(c, &rest) {
                            let di = dst.index_of(&out).expect("monomial");
                            let f = signed(coeff, s == sign_pq);
                            for v in 0..dv {
                                trip.push((di * dv + v, si * dv + v, f.clone()));
                            }
                        }
                    }
                }
            }
        }
        SparseMatrix::from_triplets(dst.len() * dv, src.len() * dv, trip)
    }

    /// `∂_{g₋} : Λᵏ → Λᵏ⁺¹`.
    pub fn differential(&self, k: usize) -> Arc<SparseMatrix> {
        self.cached(Op::DiffNeg, k, || {
            chevalley_eilenberg(&self.neg_algebra, &self.rho_x, self.dim_v, k)
        })
    }

    /// Differential for the full algebra `g` or for `g₋`. For `g` the forms
    /// live on all of `g` rather than on `g₋`.
    pub fn lie_differential(&self, sub: Subalgebra, k: usize) -> Arc<SparseMatrix> {
        match sub {
            Subalgebra::Negative => self.differential(k),
            Subalgebra::Full => Arc::new(chevalley_eilenberg(
                &self.full_algebra,
                &self.rho_full,
                self.dim_v,
                k,
            )),
        }
    }

    /// `□ = ∂*∂_{g₋} + ∂_{g₋}∂*` on `Λᵏp₊⊗V`.
    pub fn laplacian(&self, k: usize) -> Arc<SparseMatrix> {
        self.cached(Op::Laplacian, k, || {
            let up = self
                .codifferential(k + 1)
                .map(|c| c.matmul(&self.differential(k)));
            let n = self.dim(k);
            let mut b = match up {
                Ok(m) if m.rows() == n => m,
                _ => SparseMatrix::zeros(n, n),
            };
            if k > 0 {
                let down = self
                    .differential(k - 1)
                    .matmul(&self.codifferential(k).expect("k ≥ 1"));
                b = b.add(&down);
            }
            b
        })
    }

    pub fn apply_codifferential(&self, k: usize, v: &[Scalar]) -> Result<Vector> {
        Ok(self.codifferential(k)?.mul_vec(v))
    }

    /// `Im ∂*_{k+1}` inside the homogeneity block with the given indices of
    /// `Λᵏ`, in block coordinates.
    pub fn image_in_block(&self, k: usize, h: &Rational, block: &[usize]) -> Result<Subspace> {
        let cd = self.codifferential(k + 1)?;
        let src_h = self.homogeneity(k + 1);
        let cols: Vec<usize> = (0..src_h.len()).filter(|&j| &src_h[j] == h).collect();
        let sub = cd.submatrix(block, &cols);
        Ok(Subspace::from_vectors(
            block.len(),
            &sub.transpose().row_vecs(),
        ))
    }

    /// `□` restricted to `Im ∂*_{k+1}` in one homogeneity block, in the
    /// subspace basis.
    pub fn laplacian_on_image_block(
        &self,
        k: usize,
        h: &Rational,
        block: &[usize],
    ) -> Result<(Subspace, Matrix)> {
        let im = self.image_in_block(k, h, block)?;
        let lap = self.laplacian(k).submatrix(block, block);
        let r = im
            .restrict(&lap)
            .ok_or_else(|| BggError::InvalidRepresentation("□ does not preserve Im ∂*".into()))?;
        Ok((im, r))
    }

    /// Splitting polynomial on `Im ∂*_{k+1} ⊆ Λᵏ`: the product over
    /// homogeneity blocks of the minimal polynomials of □ there. It inverts □
    /// and also the block-triangular `∂*∇`.
    pub fn q_polynomial_degree(&self, k: usize) -> Result<QPolynomial> {
        let mut ann = UniPoly::one();
        let mut spectra = Vec::new();
        for (h, block) in self.homogeneity_blocks(k) {
            let (im, r) = self.laplacian_on_image_block(k, &h, &block)?;
            if im.dim() == 0 {
                continue;
            }
            let mp = minimal_polynomial(&r);
            if mp.coeff(0).is_zero() {
                return Err(BggError::InvalidRepresentation(format!(
                    "□ is singular on Im ∂* at homogeneity {h}"
                )));
            }
            let roots = mp.distinct_roots().unwrap_or_default();
            spectra.push((h, roots));
            ann = ann.mul(&mp);
        }
        let d = ann.degree().unwrap_or(0);
        let c0 = ann.coeff(0);
        let coefficients = (1..=d).map(|j| -(&ann.coeff(j) / &c0)).collect();
        let q = QPolynomial {
            coefficients,
            annihilator: ann,
            block_spectra: spectra,
        };
        Ok(q)
    }

    pub fn q_polynomial(&self) -> Result<QPolynomial> {
        self.q_polynomial_degree(0)
    }

    /// Checks `Q(□)·□ = id` on `Im ∂*_{k+1}` block by block.
    pub fn verify_q(&self, k: usize, q: &QPolynomial) -> Result<bool> {
        for (h, block) in self.homogeneity_blocks(k) {
            let (im, r) = self.laplacian_on_image_block(k, &h, &block)?;
            if im.dim() == 0 {
                continue;
            }
            if q.eval_matrix(&r).matmul(&r) != Matrix::identity(im.dim()) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `H^k = Ker ∂* / Im ∂*` with harmonic representatives `Ker □`.
    pub fn cohomology(&self, k: usize) -> Result<CohomologySpace> {
        let n = self.dim(k);
        let kernel = if k == 0 {
            Subspace::full(n)
        } else {
            linalg::nullspace(&self.codifferential(k)?.to_dense())
        };
        let image = match self.codifferential(k + 1) {
            Ok(cd) if cd.cols() > 0 => {
                Subspace::from_vectors(n, &cd.to_dense().transpose().row_vecs())
            }
            _ => Subspace::zero(n),
        };
        let lap = self.laplacian(k);
        let mut reps = Vec::new();
        let mut projection = Matrix::zeros(n, n);
        for (_, block) in self.homogeneity_blocks(k) {
            let lb = lap.submatrix(&block, &block);
            let mp = minimal_polynomial(&lb);
            if !mp.coeff(0).is_zero() {
                continue;
            }
            if mp.coeff(1).is_zero() {
                return Err(BggError::Unsupported(
                    "□ is not semisimple on a homogeneity block".into(),
                ));
            }
            let (r, _) = mp.divrem(&UniPoly::new(vec![Scalar::zero(), Scalar::one()]));
            let p = r.eval_matrix(&lb).scale(&r.coeff(0).inv());
            for (bi, &i) in block.iter().enumerate() {
                for (bj, &j) in block.iter().enumerate() {
                    projection[(i, j)] = p[(bi, bj)].clone();
                }
            }
            for col in linalg::nullspace(&lb).basis {
                let mut v = linalg::zero_vec(n);
                for (bi, &i) in block.iter().enumerate() {
                    v[i] = col[bi].clone();
                }
                reps.push(v);
            }
        }
        let representatives = Subspace::from_vectors(n, &reps);
        if representatives.dim() + image.dim() != kernel.dim()
            || !kernel.contains_subspace(&representatives)
        {
            return Err(BggError::Unsupported(
                "harmonic forms do not represent Ker ∂*/Im ∂*".into(),
            ));
        }
        Ok(CohomologySpace {
            degree: k,
            kernel,
            image,
            representatives,
            projection,
        })
    }

    /// `dim Hᵏ` from the harmonic part of □.
    pub fn cohomology_dim(&self, k: usize) -> usize {
        let lap = self.laplacian(k);
        self.homogeneity_blocks(k)
            .into_iter()
            .map(|(_, b)| linalg::nullspace(&lap.submatrix(&b, &b)).dim())
            .sum()
    }

    /// `ρ(Zₐ)`.
    pub fn rho_z(&self, a: usize) -> &SparseMatrix {
        &self.rho_z[a]
    }

    /// `ρ(Xₐ)` for the `g₋` basis.
    pub fn rho_x(&self, a: usize) -> &SparseMatrix {
        &self.rho_x[a]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    use crate::lie::{dual_basis, PairingForm};
    use crate::testutil::{sln, sln_p1};

    #[test]
    fn borel_sl3_complexes() {
        let (g, std) = sln(&[
            Rational::from_int(1),
            Rational::ZERO,
            Rational::from_int(-1),
        ]);
        let pairing = dual_basis(&g, &PairingForm::Killing).unwrap();
        for rep in [
            std.clone(),
            std.dual(),
            std.sym2(),
            Representation::adjoint(&g.algebra),
        ] {
            let kc = KostantComplex::new(&g, &pairing, &rep).unwrap();
            for k in 1..=2 {
                assert!(kc
                    .codifferential(k)
                    .unwrap()
                    .matmul(&kc.codifferential(k + 1).unwrap())
                    .is_zero());
                assert!(kc.differential(k).matmul(&kc.differential(k - 1)).is_zero());
                let lap = kc.laplacian(k);
                assert_eq!(
                    lap.matmul(&kc.differential(k - 1)),
                    kc.differential(k - 1).matmul(&kc.laplacian(k - 1))
                );
            }
            let full1 = kc.lie_differential(Subalgebra::Full, 1);
            assert!(full1
                .matmul(&kc.lie_differential(Subalgebra::Full, 0))
                .is_zero());
        }
    }

    fn complex(rep: &Representation) -> KostantComplex {
        let (g, std) = sln_p1(4);
        let pairing = dual_basis(&g, &PairingForm::Trace(&std)).unwrap();
        KostantComplex::new(&g, &pairing, rep).unwrap()
    }

    #[test]
    fn projective_splitting_polynomials() {
        let (g, std) = sln_p1(4);
        let q = complex(&std).q_polynomial().unwrap();
        assert_eq!(q.coefficients, vec![Scalar::frac(1, 3)]);
        let q = complex(&std.alt2()).q_polynomial().unwrap();
        assert_eq!(q.coefficients, vec![Scalar::frac(1, 2)]);
        let adj = Representation::adjoint(&g.algebra);
        let kc = complex(&adj);
        let q = kc.q_polynomial().unwrap();
        assert_eq!(
            q.coefficients,
            vec![
                Scalar::frac(3, 2),
                Scalar::frac(-9, 16),
                Scalar::frac(1, 16)
            ]
        );
        assert!(kc.verify_q(0, &q).unwrap());
    }

    #[test]
    fn complexes_square_to_zero() {
        let (g, std) = sln_p1(4);
        for rep in [std.clone(), std.dual(), Representation::adjoint(&g.algebra)] {
            let kc = complex(&rep);
            for k in 1..=2 {
                assert!(kc
                    .codifferential(k)
                    .unwrap()
                    .matmul(&kc.codifferential(k + 1).unwrap())
                    .is_zero());
                assert!(kc.differential(k).matmul(&kc.differential(k - 1)).is_zero());
            }
        }
    }

    #[test]
    fn standard_h0_is_three_dimensional() {
        let (_, std) = sln_p1(4);
        let h = complex(&std).cohomology(0).unwrap();
        assert_eq!(h.dim(), 3);
        assert!(h.representatives.basis.iter().all(|v| v[0].is_zero()));
    }

    #[test]
    fn form_basis_order() {
        let b = FormBasis::new(4, 2);
        assert_eq!(b.monomials[0], vec![0, 1]);
        assert_eq!(b.monomials[3], vec![1, 2]);
        assert_eq!(b.len(), 6);
        assert_eq!(FormBasis::new(3, 0).len(), 1);
    }

    #[test]
    fn insertion_sign() {
        assert_eq!(insert_sorted(2, &[0, 3]), Some((vec![0, 2, 3], false)));
        assert_eq!(insert_sorted(0, &[1, 3]), Some((vec![0, 1, 3], true)));
        assert_eq!(insert_sorted(1, &[1]), None);
    }
}
