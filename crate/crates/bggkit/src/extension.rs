//! Infinitesimal extensions `α: k → g`: curvature, regularity, normality and
//! the homogeneity-stepped normalization solver.

use std::sync::Arc;

use serde::Serialize;

use crate::error::{BggError, Result};
use crate::expr::parse_linear;
use crate::kostant::KostantComplex;
use crate::lie::{
    dual_basis, weight_decomposition, DualBasisPairing, GradedParabolic, PairingForm,
    Representation, SymmetryPair,
};
use crate::linalg::{
    self, is_zero_vec, solve_affine, sub_vec, zero_vec, AffineSolutionSet, Vector,
};
use crate::matrix::Matrix;
use crate::rational::Rational;
use crate::scalar::Scalar;

/// The graded pair `(g, p)` in a defining matrix representation, its dual
/// bases, and the symmetry pair `(k, h)`.
#[derive(Debug)]
pub struct GradedAlgebraBundle {
    pub g: GradedParabolic,
    pub defining: Representation,
    /// `ρ(E)` eigenvalue of each basis vector of the defining representation.
    pub defining_weights: Vec<Rational>,
    pub pairing: DualBasisPairing,
    pub k: SymmetryPair,
    adjoint: KostantComplex,
}

impl GradedAlgebraBundle {
    /// The pairing `p₊ ≅ (g/p)*` is the trace form of the defining representation.
    pub fn new(
        g: GradedParabolic,
        defining: Representation,
        k: SymmetryPair,
    ) -> Result<GradedAlgebraBundle> {
        defining.validate(&g.algebra)?;
        let defining_weights = weight_decomposition(&defining, &g)?
            .basis_weights
            .ok_or_else(|| {
                BggError::Unsupported(
                    "grading element must be diagonal in the defining basis".into(),
                )
            })?;
        let pairing = dual_basis(&g, &PairingForm::Trace(&defining))?;
        if k.complement_indices.len() != pairing.quotient_basis.len() {
            return Err(BggError::Dimension(format!(
                "dim k − dim h = {} but dim g/p = {}",
                k.complement_indices.len(),
                pairing.quotient_basis.len()
            )));
        }
        let adjoint = KostantComplex::new(&g, &pairing, &Representation::adjoint(&g.algebra))?;
        Ok(GradedAlgebraBundle {
            g,
            defining,
            defining_weights,
            pairing,
            k,
            adjoint,
        })
    }

    pub fn dim_g(&self) -> usize {
        self.g.dim()
    }

    pub fn dim_k(&self) -> usize {
        self.k.dim()
    }

    /// `dim g/p`.
    pub fn codim(&self) -> usize {
        self.pairing.quotient_basis.len()
    }

    /// Kostant complex of a representation with this bundle's pairing.
    pub fn kostant(&self, rep: &Representation) -> Result<KostantComplex> {
        KostantComplex::new(&self.g, &self.pairing, rep)
    }

    pub fn adjoint_complex(&self) -> &KostantComplex {
        &self.adjoint
    }

    /// `g₋` coordinates of a vector of `g`.
    pub fn quotient_coordinates(&self, x: &[Scalar]) -> Vector {
        self.pairing
            .quotient_basis
            .iter()
            .map(|&a| x[a].clone())
            .collect()
    }
}

/// Alternating table `κ(eᵢ, eⱼ) ∈ g` over the basis of `k`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CurvatureTensor {
    pub dim_k: usize,
    pub values: Vec<Vector>,
}

impl CurvatureTensor {
    pub fn get(&self, i: usize, j: usize) -> &Vector {
        &self.values[i * self.dim_k + j]
    }

    /// `κ(x, y)` for coordinate vectors in `k`.
    pub fn eval(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        let n = self.values.first().map_or(0, Vec::len);
        let mut out = zero_vec(n);
        for i in 0..self.dim_k {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..self.dim_k {
                if y[j].is_zero() {
                    continue;
                }
                linalg::axpy(&mut out, &(&x[i] * &y[j]), self.get(i, j));
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|v| is_zero_vec(v))
    }

    pub fn is_alternating(&self) -> bool {
        (0..self.dim_k).all(|i| {
            is_zero_vec(self.get(i, i))
                && (0..self.dim_k)
                    .all(|j| is_zero_vec(&linalg::add_vec(self.get(i, j), self.get(j, i))))
        })
    }

    pub fn vanishes_on(&self, indices: &[usize]) -> bool {
        indices
            .iter()
            .all(|&i| (0..self.dim_k).all(|j| is_zero_vec(self.get(i, j))))
    }
}

/// Curvature on `g/p` in the frame `cₐ` with `α(cₐ) ≡ Xₐ mod p`, extended by
/// zero on `p`.
#[derive(Clone, Debug)]
pub struct QuotientCurvature {
    neg: Vec<usize>,
    values: Vec<Vec<Vector>>,
}

impl QuotientCurvature {
    /// `κ(Xₐ, X_b)`.
    pub fn get(&self, a: usize, b: usize) -> &Vector {
        &self.values[a][b]
    }

    /// `κ(x, y)` for `x, y ∈ g`, through their `g₋` components.
    pub fn eval(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        let n = x.len();
        let mut out = zero_vec(n);
        for (a, &p) in self.neg.iter().enumerate() {
            if x[p].is_zero() {
                continue;
            }
            for (b, &q) in self.neg.iter().enumerate() {
                if y[q].is_zero() {
                    continue;
                }
                linalg::axpy(&mut out, &(&x[p] * &y[q]), &self.values[a][b]);
            }
        }
        out
    }
}

/// Outcome of [`ExtensionMap::regularity_check`].
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RegularityCertificate {
    pub passed: bool,
    /// Lowest homogeneity of a nonzero curvature component.
    pub min_homogeneity: Option<Rational>,
}

/// Linear map `α: k → g` stored as a `dim g × dim k` matrix.
#[derive(Clone, Debug)]
pub struct ExtensionMap {
    bundle: Arc<GradedAlgebraBundle>,
    pub alpha: Matrix,
}

impl ExtensionMap {
    /// Checks the shape, that `c → g/p` is bijective and the extension law on `h`.
    pub fn new(bundle: Arc<GradedAlgebraBundle>, alpha: Matrix) -> Result<ExtensionMap> {
        let e = ExtensionMap::unchecked(bundle, alpha)?;
        linalg::inverse(&e.quotient_matrix())
            .map_err(|_| BggError::InvalidExtension("c → g/p is not an isomorphism".into()))?;
        if let Some((y, x, _)) = e.extension_law_residual().into_iter().next() {
            let names = &e.bundle.k.algebra.names;
            return Err(BggError::InvalidExtension(format!(
                "[α({}), α({})] ≠ α([{}, {}])",
                names[y], names[x], names[y], names[x]
            )));
        }
        Ok(e)
    }

    /// Only the shape is checked.
    pub fn unchecked(bundle: Arc<GradedAlgebraBundle>, alpha: Matrix) -> Result<ExtensionMap> {
        if alpha.rows() != bundle.dim_g() || alpha.cols() != bundle.dim_k() {
            return Err(BggError::Dimension(format!(
                "α must be {}×{}, got {}×{}",
                bundle.dim_g(),
                bundle.dim_k(),
                alpha.rows(),
                alpha.cols()
            )));
        }
        Ok(ExtensionMap { bundle, alpha })
    }

    pub fn bundle(&self) -> &Arc<GradedAlgebraBundle> {
        &self.bundle
    }

    /// `α(eⱼ)`.
    pub fn image(&self, j: usize) -> Vector {
        self.alpha.col(j)
    }

    pub fn apply(&self, x: &[Scalar]) -> Vector {
        self.alpha.mul_vec(x)
    }

    /// `α(eⱼ)` in the defining representation.
    pub fn matrix(&self, j: usize) -> Matrix {
        self.bundle.defining.act(&self.image(j))
    }

    /// `α(x)` in the defining representation.
    pub fn matrix_of(&self, x: &[Scalar]) -> Matrix {
        self.bundle.defining.act(&self.apply(x))
    }

    /// `g₋` coordinates of `α` on the complement, `dim g/p × dim c`.
    pub fn quotient_matrix(&self) -> Matrix {
        let b = &self.bundle;
        let neg = &b.pairing.quotient_basis;
        let c = &b.k.complement_indices;
        let mut m = Matrix::zeros(neg.len(), c.len());
        for (col, &j) in c.iter().enumerate() {
            for (row, &a) in neg.iter().enumerate() {
                m[(row, col)] = self.alpha[(a, j)].clone();
            }
        }
        m
    }

    /// Elements `cₐ` of the complement with `α(cₐ) ≡ Xₐ mod p`.
    pub fn frame(&self) -> Result<Vec<Vector>> {
        let inv = linalg::inverse(&self.quotient_matrix())
            .map_err(|_| BggError::InvalidExtension("c → g/p is not an isomorphism".into()))?;
        let nk = self.bundle.dim_k();
        let c = &self.bundle.k.complement_indices;
        Ok((0..inv.cols())
            .map(|a| {
                let mut v = zero_vec(nk);
                for (r, &j) in c.iter().enumerate() {
                    v[j] = inv[(r, a)].clone();
                }
                v
            })
            .collect())
    }

    /// Nonzero values of `[α(Y), α(X)] − α([Y, X])` for `Y ∈ h`, `X` in the basis of `k`.
    pub fn extension_law_residual(&self) -> Vec<(usize, usize, Vector)> {
        let b = &self.bundle;
        let mut out = Vec::new();
        for &y in &b.k.isotropy_indices {
            for x in 0..b.dim_k() {
                let r = self.curvature_value(y, x);
                if !is_zero_vec(&r) {
                    out.push((y, x, r));
                }
            }
        }
        out
    }

    /// `[α(eᵢ), α(eⱼ)] − α([eᵢ, eⱼ])`.
    fn curvature_value(&self, i: usize, j: usize) -> Vector {
        let g = &self.bundle.g.algebra;
        let k = &self.bundle.k.algebra;
        sub_vec(
            &g.bracket(&self.image(i), &self.image(j)),
            &self.apply(k.bracket_basis(i, j)),
        )
    }

    pub fn curvature(&self) -> CurvatureTensor {
        let n = self.bundle.dim_k();
        let mut values = vec![zero_vec(self.bundle.dim_g()); n * n];
        for i in 0..n {
            for j in (i + 1)..n {
                let v = self.curvature_value(i, j);
                values[j * n + i] = linalg::scale_vec(&v, &Scalar::from_int(-1));
                values[i * n + j] = v;
            }
        }
        CurvatureTensor { dim_k: n, values }
    }

    pub fn quotient_curvature(&self) -> Result<QuotientCurvature> {
        let frame = self.frame()?;
        let kappa = self.curvature();
        let values = frame
            .iter()
            .map(|ca| frame.iter().map(|cb| kappa.eval(ca, cb)).collect())
            .collect();
        Ok(QuotientCurvature {
            neg: self.bundle.pairing.quotient_basis.clone(),
            values,
        })
    }

    /// `κ` as an element of `Λ²p₊ ⊗ g`; the coefficient of `Zₐ∧Z_b ⊗ e_c` is `κ(Xₐ, X_b)_c`.
    pub fn curvature_form(&self) -> Result<Vector> {
        let q = self.quotient_curvature()?;
        let kc = &self.bundle.adjoint;
        let n = self.bundle.dim_g();
        let fb = kc.form_basis(2);
        let mut out = zero_vec(fb.len() * n);
        for (mi, mono) in fb.monomials.iter().enumerate() {
            let v = q.get(mono[0], mono[1]);
            out[mi * n..(mi + 1) * n].clone_from_slice(v);
        }
        Ok(out)
    }

    /// Passes when every nonzero component of `κ` has homogeneity at least 1.
    pub fn regularity_check(&self) -> Result<RegularityCertificate> {
        let form = self.curvature_form()?;
        let hom = self.bundle.adjoint.homogeneity(2);
        let min = form
            .iter()
            .zip(&hom)
            .filter(|(x, _)| !x.is_zero())
            .map(|(_, h)| h.clone())
            .min();
        let passed = min.as_ref().is_none_or(|h| h >= &Rational::from_int(1));
        Ok(RegularityCertificate {
            passed,
            min_homogeneity: min,
        })
    }

    /// `∂*κ ∈ p₊ ⊗ g`.
    pub fn codifferential_of_curvature(&self) -> Result<Vector> {
        self.bundle
            .adjoint
            .apply_codifferential(2, &self.curvature_form()?)
    }

    /// `2 Σᵢ [Zᵢ, κ(X, Xᵢ)] − Σᵢ κ([Zᵢ, X], Xᵢ)` for each basis vector `X` of `g`.
    /// With the codifferential convention of [`KostantComplex`] this equals
    /// `−2 (∂*κ)(X)` on `g₋` and vanishes on `p`.
    pub fn normality_residual(&self) -> Result<Vec<Vector>> {
        let q = self.quotient_curvature()?;
        let b = &self.bundle;
        let g = &b.g.algebra;
        let n = b.dim_g();
        let two = Scalar::from_int(2);
        let xs: Vec<Vector> = b
            .pairing
            .quotient_basis
            .iter()
            .map(|&a| linalg::unit_vec(n, a))
            .collect();
        Ok((0..n)
            .map(|c| {
                let x = linalg::unit_vec(n, c);
                let mut r = zero_vec(n);
                for (z, xi) in b.pairing.dual_basis.iter().zip(&xs) {
                    let first = g.bracket(z, &q.eval(&x, xi));
                    linalg::axpy(&mut r, &two, &first);
                    let second = q.eval(&g.bracket(z, &x), xi);
                    linalg::axpy(&mut r, &Scalar::from_int(-1), &second);
                }
                r
            })
            .collect())
    }

    pub fn is_normal(&self) -> Result<bool> {
        Ok(is_zero_vec(&self.codifferential_of_curvature()?))
    }

    /// Nonzero values of `κ([Y,X],X′) + κ(X,[Y,X′]) − [α(Y), κ(X,X′)]` for `Y ∈ h`.
    pub fn curvature_equivariance_residual(&self) -> Vec<(usize, usize, usize, Vector)> {
        let b = &self.bundle;
        let kappa = self.curvature();
        let k = &b.k.algebra;
        let g = &b.g.algebra;
        let n = b.dim_k();
        let mut out = Vec::new();
        for &y in &b.k.isotropy_indices {
            let ay = self.image(y);
            for x in 0..n {
                for x2 in (x + 1)..n {
                    let ex = linalg::unit_vec(n, x);
                    let ex2 = linalg::unit_vec(n, x2);
                    let lhs = linalg::add_vec(
                        &kappa.eval(k.bracket_basis(y, x), &ex2),
                        &kappa.eval(&ex, k.bracket_basis(y, x2)),
                    );
                    let r = sub_vec(&lhs, &g.bracket(&ay, kappa.get(x, x2)));
                    if !is_zero_vec(&r) {
                        out.push((y, x, x2, r));
                    }
                }
            }
        }
        out
    }
}

/// Affine condition `Σ c·α(e)_{rc} = value` on matrix entries of `α(e)` in
/// the defining representation, for one element `e` of the complement or all.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GaugeConstraint {
    pub target: Option<usize>,
    /// `(row, col, coefficient)`, zero-based.
    pub terms: Vec<(usize, usize, Scalar)>,
    pub value: Scalar,
}

impl GaugeConstraint {
    /// Parses `e1: m11 - m44 = 0` or `all: m11 = 0`. Entries are `m<row><col>`
    /// (one-based, single digits) or `m<row>_<col>`.
    pub fn parse(src: &str, k_names: &[String]) -> Result<GaugeConstraint> {
        let (target, eq) = src
            .split_once(':')
            .ok_or_else(|| BggError::Parse(format!("gauge {src:?} needs a target before ':'")))?;
        let target =
            match target.trim() {
                "all" => None,
                t => Some(k_names.iter().position(|n| n == t).ok_or_else(|| {
                    BggError::Parse(format!("unknown basis element {t:?} in gauge"))
                })?),
            };
        let (lhs, rhs) = eq
            .split_once('=')
            .ok_or_else(|| BggError::Parse(format!("gauge {src:?} needs '='")))?;
        let l = parse_linear(lhs)?;
        let r = parse_linear(rhs)?;
        if !r.is_constant() {
            return Err(BggError::Parse(format!(
                "gauge right-hand side must be constant in {src:?}"
            )));
        }
        let mut terms = Vec::new();
        for (var, c) in &l.terms {
            let (row, col) = parse_entry(var)?;
            terms.push((row, col, c.clone()));
        }
        Ok(GaugeConstraint {
            target,
            terms,
            value: &r.constant - &l.constant,
        })
    }

    fn targets(&self, b: &GradedAlgebraBundle) -> Vec<usize> {
        match self.target {
            Some(t) => vec![t],
            None => b.k.complement_indices.clone(),
        }
    }
}

fn parse_entry(var: &str) -> Result<(usize, usize)> {
    let bad = || BggError::Parse(format!("matrix entry {var:?} should look like m12 or m1_2"));
    let rest = var.strip_prefix('m').ok_or_else(bad)?;
    let (r, c) = match rest.split_once('_') {
        Some((r, c)) => (
            r.parse::<usize>().map_err(|_| bad())?,
            c.parse::<usize>().map_err(|_| bad())?,
        ),
        None if rest.len() == 2 && rest.chars().all(|ch| ch.is_ascii_digit()) => {
            let d: Vec<usize> = rest.chars().map(|ch| ch as usize - '0' as usize).collect();
            (d[0], d[1])
        }
        None => return Err(bad()),
    };
    if r == 0 || c == 0 {
        return Err(bad());
    }
    Ok((r - 1, c - 1))
}

/// Result of one homogeneity step of [`normalize`].
#[derive(Clone, Debug, Serialize)]
pub struct NormalizationStep {
    pub homogeneity: i64,
    /// `(g-basis index, k-basis index)` of each unknown entry of `α`.
    pub unknowns: Vec<(usize, usize)>,
    pub equations: usize,
    pub solutions: AffineSolutionSet,
}

#[derive(Clone, Debug)]
pub struct Normalization {
    pub alpha: ExtensionMap,
    pub correction: Matrix,
    pub steps: Vec<NormalizationStep>,
    /// Sum of the solution dimensions over all steps.
    pub family_dim: usize,
}

/// Residual components of the normalization problem with their homogeneity:
/// the extension law on `h`, `∂*κ`, and the gauge conditions.
pub fn normalization_residual(
    ext: &ExtensionMap,
    gauges: &[GaugeConstraint],
) -> Result<Vec<(i64, Scalar)>> {
    let b = ext.bundle();
    let mut out = Vec::new();
    let deg = &b.k.degrees;
    for &y in &b.k.isotropy_indices {
        for x in 0..b.dim_k() {
            let r = ext.curvature_value(y, x);
            for (c, v) in r.into_iter().enumerate() {
                out.push((b.g.grading[c] - deg[y] - deg[x], v));
            }
        }
    }
    let codiff = ext.codifferential_of_curvature()?;
    for (v, h) in codiff.into_iter().zip(b.adjoint.homogeneity(1)) {
        out.push((integral(&h)?, v));
    }
    for gc in gauges {
        for j in gc.targets(b) {
            let m = ext.matrix(j);
            let mut val = -gc.value.clone();
            let mut hom = None;
            for (r, c, coeff) in &gc.terms {
                if *r >= m.rows() || *c >= m.cols() {
                    return Err(BggError::Dimension(format!(
                        "gauge entry ({}, {}) outside the matrix",
                        r + 1,
                        c + 1
                    )));
                }
                val += &(coeff * &m[(*r, *c)]);
                let h = integral(&(&b.defining_weights[*r] - &b.defining_weights[*c]))? - deg[j];
                if hom.is_some_and(|x| x != h) {
                    return Err(BggError::InvalidExtension(
                        "gauge constraint mixes homogeneities".into(),
                    ));
                }
                hom = Some(h);
            }
            out.push((hom.unwrap_or(0), val));
        }
    }
    Ok(out)
}

fn integral(r: &Rational) -> Result<i64> {
    if !r.is_integer() {
        return Err(BggError::Unsupported(format!(
            "non-integral homogeneity {r}"
        )));
    }
    Ok(r.to_f64() as i64)
}

/// Adds a correction of positive homogeneity to `gr_alpha`, one homogeneity
/// at a time, so that the extension law, normality and the gauge hold.
/// At each step the residual in that homogeneity is affine in the unknowns.
pub fn normalize(gr_alpha: &ExtensionMap, gauges: &[GaugeConstraint]) -> Result<Normalization> {
    let b = gr_alpha.bundle().clone();
    let initial = normalization_residual(gr_alpha, gauges)?;
    if let Some((h, _)) = initial.iter().find(|(h, v)| *h <= 0 && !v.is_zero()) {
        return Err(BggError::InvalidExtension(format!(
            "graded extension law fails in homogeneity {h}"
        )));
    }
    let mut alpha = gr_alpha.alpha.clone();
    let mut steps = Vec::new();
    let mut family_dim = 0;
    for s in 1..=2 * b.g.depth {
        let mut unknowns: Vec<(usize, usize)> = Vec::new();
        for &j in &b.k.complement_indices {
            for c in 0..b.dim_g() {
                if b.g.grading[c] - b.k.degrees[j] == s {
                    unknowns.push((c, j));
                }
            }
        }
        let at_s = |a: &Matrix| -> Result<Vector> {
            let e = ExtensionMap::unchecked(b.clone(), a.clone())?;
            Ok(normalization_residual(&e, gauges)?
                .into_iter()
                .filter(|(h, _)| *h == s)
                .map(|(_, v)| v)
                .collect())
        };
        let r0 = at_s(&alpha)?;
        let mut cols = Vec::with_capacity(unknowns.len());
        for &(c, j) in &unknowns {
            let mut a = alpha.clone();
            a[(c, j)] += &Scalar::one();
            cols.push(sub_vec(&at_s(&a)?, &r0));
        }
        let a = Matrix::from_cols(r0.len(), &cols);
        let rhs: Vector = r0.iter().map(|x| -x.clone()).collect();
        let sol = solve_affine(&a, &rhs)?;
        let Some(p) = sol.particular.clone() else {
            return Err(BggError::NoNormalExtension(s));
        };
        for (&(c, j), x) in unknowns.iter().zip(&p) {
            alpha[(c, j)] += x;
        }
        family_dim += sol.dim();
        steps.push(NormalizationStep {
            homogeneity: s,
            unknowns,
            equations: r0.len(),
            solutions: sol,
        });
    }
    let ext = ExtensionMap::unchecked(b.clone(), alpha)?;
    if let Some((h, _)) = normalization_residual(&ext, gauges)?
        .into_iter()
        .find(|(_, v)| !v.is_zero())
    {
        return Err(BggError::NoNormalExtension(h));
    }
    let ext = ExtensionMap::new(b, ext.alpha)?;
    let correction = &ext.alpha - &gr_alpha.alpha;
    Ok(Normalization {
        alpha: ext,
        correction,
        steps,
        family_dim,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    use crate::lie::LieAlgebra;
    use crate::testutil::sln_p1;

    /// sl(4) with p₁ and the Heisenberg algebra `[e1,e2] = −e3`.
    pub(crate) fn projective() -> Arc<GradedAlgebraBundle> {
        let (g, std) = sln_p1(4);
        let k = LieAlgebra::from_triples(
            vec!["e1".into(), "e2".into(), "e3".into()],
            &[(0, 1, 2, Scalar::from_int(-1))],
        )
        .unwrap();
        let k = SymmetryPair::new(k, vec![], vec![-1, -1, -1]).unwrap();
        Arc::new(GradedAlgebraBundle::new(g, std, k).unwrap())
    }

    /// Writes a 4×4 matrix per k-basis vector into g-coordinates.
    fn alpha_from(b: &GradedAlgebraBundle, mats: &[Matrix]) -> Matrix {
        let basis: Vec<Vector> = b.defining.rho.iter().map(Matrix::to_vec).collect();
        let sc = linalg::SpanCoordinates::new(16, &basis).unwrap();
        let cols: Vec<Vector> = mats
            .iter()
            .map(|m| sc.coordinates(&m.to_vec()).unwrap())
            .collect();
        Matrix::from_cols(b.dim_g(), &cols)
    }

    fn fixed_example(b: &GradedAlgebraBundle) -> Matrix {
        // rows of α(x1,x2,x3) = [[0,x1,0,0],[x1,0,0,0],[x2,−x2,−x1,0],[x3,x3,−x1,x1]]
        let e1 = Matrix::from_ints(4, 4, &[0, 1, 0, 0, 1, 0, 0, 0, 0, 0, -1, 0, 0, 0, -1, 1]);
        let e2 = Matrix::from_ints(4, 4, &[0, 0, 0, 0, 0, 0, 0, 0, 1, -1, 0, 0, 0, 0, 0, 0]);
        let e3 = Matrix::from_ints(4, 4, &[0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 0]);
        alpha_from(b, &[e1, e2, e3])
    }

    #[test]
    fn projective_fixed_example_curvature() {
        let b = projective();
        let ext = ExtensionMap::new(b.clone(), fixed_example(&b)).unwrap();
        let kappa = ext.curvature();
        assert!(kappa.is_alternating());
        let k12 = b.defining.act(kappa.get(0, 1));
        let mut expected = Matrix::zeros(4, 4);
        expected[(3, 1)] = Scalar::from_int(2);
        assert_eq!(k12, expected);
        assert!(kappa.get(0, 2).iter().all(Scalar::is_zero));
        assert!(kappa.get(1, 2).iter().all(Scalar::is_zero));
        assert!(ext.regularity_check().unwrap().passed);
        assert!(ext.is_normal().unwrap());
        assert!(ext
            .normality_residual()
            .unwrap()
            .iter()
            .all(|r| is_zero_vec(r)));
    }

    #[test]
    fn normality_residual_is_minus_twice_codifferential() {
        let b = projective();
        // a non-normal extension: only the g₋ part plus one g₀ entry
        let mut m1 = Matrix::zeros(4, 4);
        m1[(1, 0)] = Scalar::one();
        m1[(1, 1)] = Scalar::one();
        m1[(0, 0)] = Scalar::from_int(-1);
        let mut m2 = Matrix::zeros(4, 4);
        m2[(2, 0)] = Scalar::one();
        m2[(0, 2)] = Scalar::frac(1, 3);
        let mut m3 = Matrix::zeros(4, 4);
        m3[(3, 0)] = Scalar::one();
        m3[(2, 3)] = Scalar::from_int(2);
        let ext = ExtensionMap::new(b.clone(), alpha_from(&b, &[m1, m2, m3])).unwrap();
        let cd = ext.codifferential_of_curvature().unwrap();
        assert!(!is_zero_vec(&cd));
        let res = ext.normality_residual().unwrap();
        let n = b.dim_g();
        for (a, &x) in b.pairing.quotient_basis.iter().enumerate() {
            let expected: Vector = cd[a * n..(a + 1) * n]
                .iter()
                .map(|v| v * &Scalar::from_int(-2))
                .collect();
            assert_eq!(res[x], expected);
        }
        for x in b.g.parabolic.pivots() {
            assert!(is_zero_vec(&res[*x]));
        }
    }

    #[test]
    fn graded_projective_normalizes_to_flat() {
        let b = projective();
        let mut mats = Vec::new();
        for i in 0..3 {
            let mut m = Matrix::zeros(4, 4);
            m[(i + 1, 0)] = Scalar::one();
            mats.push(m);
        }
        let gr = ExtensionMap::unchecked(b.clone(), alpha_from(&b, &mats)).unwrap();
        let gauge = GaugeConstraint::parse("all: m11 = 0", &b.k.algebra.names).unwrap();
        let n = normalize(&gr, &[gauge]).unwrap();
        assert!(n.alpha.is_normal().unwrap());
        assert!(n.alpha.regularity_check().unwrap().passed);
        assert!(n.alpha.curvature_equivariance_residual().is_empty());
    }

    #[test]
    fn gauge_parsing() {
        let names: Vec<String> = vec!["e1".into(), "e2".into()];
        let g = GaugeConstraint::parse("e2: m11 - m4_4 = 1/2", &names).unwrap();
        assert_eq!(g.target, Some(1));
        assert_eq!(g.value, Scalar::frac(1, 2));
        assert_eq!(g.terms.len(), 2);
        assert!(GaugeConstraint::parse("e3: m11 = 0", &names).is_err());
        assert!(GaugeConstraint::parse("all: m11 + x = 0", &names).is_err());
    }

    /// Independent closed forms for the `g₁` block of the normal extension
    /// with prescribed torsion-free `g₀` block; indices follow `a[1..=15]`.
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
        // [k][j] = Ρ^k_j
        [
            [p11.clone(), p21.clone(), p31.clone()],
            [p21, p22, p32.clone()],
            [p31, p32, p33],
        ]
    }

    /// `g₀` block of `α(e_k)`: `[k][row][col]` over the lower-right 3×3 block.
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

    #[test]
    fn projective_rho_matches_closed_forms() {
        use rand::{Rng, SeedableRng};
        let b = projective();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let mut mats = Vec::new();
        for i in 0..3 {
            let mut m = Matrix::zeros(4, 4);
            m[(i + 1, 0)] = Scalar::one();
            mats.push(m);
        }
        let gr = ExtensionMap::unchecked(b.clone(), alpha_from(&b, &mats)).unwrap();
        for _ in 0..5 {
            let mut a: [Rational; 16] = Default::default();
            for x in a.iter_mut().skip(1) {
                *x = Rational::new(rng.gen_range(-4..=4), rng.gen_range(1..=3));
            }
            let pattern = a_pattern(&a);
            let mut gauges =
                vec![GaugeConstraint::parse("all: m11 = 0", &b.k.algebra.names).unwrap()];
            for (k, block) in pattern.iter().enumerate() {
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
            let n = normalize(&gr, &gauges).unwrap();
            assert_eq!(n.family_dim, 0);
            let rho = rho_oracle(&a);
            for (k, row) in rho.iter().enumerate() {
                let m = n.alpha.matrix(k);
                for (j, p) in row.iter().enumerate() {
                    assert_eq!(
                        m[(0, j + 1)],
                        Scalar::from(p.clone()),
                        "Ρ^{}_{}",
                        k + 1,
                        j + 1
                    );
                }
            }
        }
    }
}
