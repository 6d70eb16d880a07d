//! Univariate polynomials over ℚ(i, √2) and minimal polynomials of matrices.

use std::fmt;

use num_complex::Complex64;

use crate::error::{BggError, Result};
use crate::linalg::{Echelon, Vector};
use crate::matrix::Matrix;
use crate::rational::Rational;
use crate::scalar::Scalar;

/// Coefficients in ascending degree; no trailing zeros.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct UniPoly {
    coeffs: Vec<Scalar>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Scalar>) -> UniPoly {
        while coeffs.last().is_some_and(Scalar::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn one() -> UniPoly {
        UniPoly::new(vec![Scalar::one()])
    }

    /// `t − λ`.
    pub fn linear_root(lambda: &Scalar) -> UniPoly {
        UniPoly::new(vec![-lambda.clone(), Scalar::one()])
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, i: usize) -> Scalar {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn leading(&self) -> Scalar {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn monic(&self) -> UniPoly {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.leading().inv();
        UniPoly::new(self.coeffs.iter().map(|c| c * &inv).collect())
    }

    pub fn mul(&self, o: &UniPoly) -> UniPoly {
        if self.is_zero() || o.is_zero() {
            return UniPoly::default();
        }
        let mut c = vec![Scalar::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                c[i + j] += &(a * b);
            }
        }
        UniPoly::new(c)
    }

    pub fn sub(&self, o: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        UniPoly::new((0..n).map(|i| &self.coeff(i) - &o.coeff(i)).collect())
    }

    /// Euclidean division.
    pub fn divrem(&self, d: &UniPoly) -> (UniPoly, UniPoly) {
        assert!(!d.is_zero(), "polynomial division by zero");
        let mut r = self.coeffs.clone();
        let dd = d.coeffs.len() - 1;
        if r.len() <= dd {
            return (UniPoly::default(), self.clone());
        }
        let inv = d.leading().inv();
        let mut q = vec![Scalar::zero(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let f = &r[k + dd] * &inv;
            if f.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                r[k + j] -= &(&f * dc);
            }
            q[k] = f;
        }
        r.truncate(dd);
        (UniPoly::new(q), UniPoly::new(r))
    }

    pub fn gcd(&self, o: &UniPoly) -> UniPoly {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let (_, r) = a.divrem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn lcm(&self, o: &UniPoly) -> UniPoly {
        if self.is_zero() || o.is_zero() {
            return UniPoly::default();
        }
        let g = self.gcd(o);
        let (q, _) = self.mul(o).divrem(&g);
        q.monic()
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        let mut acc = Scalar::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    pub fn eval_matrix(&self, m: &Matrix) -> Matrix {
        let n = m.rows();
        let mut acc = Matrix::zeros(n, n);
        for c in self.coeffs.iter().rev() {
            acc = acc.matmul(m);
            acc.axpy(c, &Matrix::identity(n));
        }
        acc
    }

    /// True when every coefficient is rational.
    pub fn is_rational(&self) -> bool {
        self.coeffs.iter().all(Scalar::is_rational)
    }

    /// Roots in ℚ(i) found numerically and confirmed exactly, with multiplicity.
    /// Fails when the polynomial does not split into such linear factors.
    pub fn split_roots(&self) -> Result<Vec<Scalar>> {
        let mut p = self.monic();
        let mut roots = Vec::new();
        while p.degree().unwrap_or(0) > 0 {
            let approx = numeric_roots(&p);
            let mut found = None;
            'cand: for z in approx {
                for den in [
                    1i64, 2, 3, 4, 6, 8, 9, 12, 16, 18, 24, 27, 32, 36, 48, 64, 72, 96, 100, 144,
                ] {
                    let re = Rational::approximate(z.re * den as f64, 1);
                    let im = Rational::approximate(z.im * den as f64, 1);
                    let d = Rational::from_int(den);
                    let cand = Scalar::new(&re / &d, &im / &d, Rational::ZERO, Rational::ZERO);
                    if p.eval(&cand).is_zero() {
                        found = Some(cand);
                        break 'cand;
                    }
                }
                let re = Rational::approximate(z.re, 100_000);
                let im = Rational::approximate(z.im, 100_000);
                let cand = Scalar::new(re, im, Rational::ZERO, Rational::ZERO);
                if p.eval(&cand).is_zero() {
                    found = Some(cand);
                    break;
                }
            }
            let Some(r) = found else {
                return Err(BggError::Unsupported(format!(
                    "polynomial {p} has roots outside ℚ(i)"
                )));
            };
            let (q, rem) = p.divrem(&UniPoly::linear_root(&r));
            debug_assert!(rem.is_zero());
            p = q;
            roots.push(r);
        }
        Ok(roots)
    }

    /// Distinct roots, in ascending order of real then imaginary part.
    pub fn distinct_roots(&self) -> Result<Vec<Scalar>> {
        let mut r = self.split_roots()?;
        r.sort_by(|x, y| x.a.cmp(&y.a).then(x.b.cmp(&y.b)));
        r.dedup();
        Ok(r)
    }
}

/// Durand–Kerner iteration on the complex images of the coefficients.
fn numeric_roots(p: &UniPoly) -> Vec<Complex64> {
    let n = p.degree().unwrap_or(0);
    if n == 0 {
        return Vec::new();
    }
    let c: Vec<Complex64> = p.coeffs.iter().map(Scalar::to_complex).collect();
    let lead = c[n];
    let c: Vec<Complex64> = c.iter().map(|x| x / lead).collect();
    let radius = 1.0 + c[..n].iter().map(|x| x.norm()).fold(0.0, f64::max);
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| {
            Complex64::from_polar(
                radius * 0.9,
                0.4 + 2.0 * std::f64::consts::PI * k as f64 / n as f64,
            )
        })
        .collect();
    let eval = |x: Complex64| {
        c.iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, &a| acc * x + a)
    };
    for _ in 0..2000 {
        let mut delta: f64 = 0.0;
        for i in 0..n {
            let mut den = Complex64::new(1.0, 0.0);
            for j in 0..n {
                if i != j {
                    den *= z[i] - z[j];
                }
            }
            if den.norm() == 0.0 {
                den = Complex64::new(1e-12, 0.0);
            }
            let step = eval(z[i]) / den;
            z[i] -= step;
            delta = delta.max(step.norm());
        }
        if delta < 1e-14 {
            break;
        }
    }
    z
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})*t")?,
                _ => write!(f, "({c})*t^{i}")?,
            }
        }
        Ok(())
    }
}

/// Minimal polynomial of the vector `v` under `m`.
fn vector_minpoly(m: &Matrix, v: &[Scalar]) -> UniPoly {
    let n = m.rows();
    // Track each Krylov vector together with the coefficients that produce it.
    let mut e = Echelon::new(2 * n + 1);
    let mut cur: Vector = v.to_vec();
    for k in 0..=n {
        let mut row = cur.clone();
        let mut tag = vec![Scalar::zero(); n + 1];
        tag[k] = Scalar::one();
        row.extend(tag);
        let reduced = e.reduce(&row);
        if reduced[..n].iter().all(Scalar::is_zero) {
            // reduced[n..] encodes a relation Σ cⱼ mʲ v = 0
            return UniPoly::new(reduced[n..].to_vec()).monic();
        }
        e.insert(&row);
        cur = m.mul_vec(&cur);
    }
    unreachable!("Krylov sequence longer than the dimension")
}

/// Minimal polynomial of a square matrix, as the lcm of vector minimal
/// polynomials over the standard basis.
pub fn minimal_polynomial(m: &Matrix) -> UniPoly {
    assert!(m.is_square(), "minimal polynomial of non-square matrix");
    let n = m.rows();
    let mut acc = UniPoly::one();
    for j in 0..n {
        let mut e = vec![Scalar::zero(); n];
        e[j] = Scalar::one();
        if acc.eval_on_vector(m, &e).iter().all(Scalar::is_zero) {
            continue;
        }
        acc = acc.lcm(&vector_minpoly(m, &e));
    }
    acc
}

impl UniPoly {
    /// `p(m)·v` by Horner's rule on vectors.
    pub fn eval_on_vector(&self, m: &Matrix, v: &[Scalar]) -> Vector {
        let mut acc = vec![Scalar::zero(); v.len()];
        for c in self.coeffs.iter().rev() {
            acc = m.mul_vec(&acc);
            crate::linalg::axpy(&mut acc, c, v);
        }
        acc
    }
}
