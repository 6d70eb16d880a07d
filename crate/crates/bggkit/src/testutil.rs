//! Small algebras shared by unit tests.

use crate::lie::{GradedParabolic, LieAlgebra, Representation};
use crate::linalg;
use crate::matrix::Matrix;
use crate::rational::Rational;
use crate::scalar::Scalar;

/// sl(n) graded by the eigenvalues of a diagonal grading element.
pub fn sln(e: &[Rational]) -> (GradedParabolic, Representation) {
    let n = e.len();
    let mut mats = Vec::new();
    let mut names = Vec::new();
    let mut grading = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i != j {
                mats.push(Matrix::unit(n, n, i, j));
                names.push(format!("E{}{}", i + 1, j + 1));
                let d = &e[i] - &e[j];
                assert!(d.is_integer());
                grading.push(d.to_f64() as i64);
            }
        }
    }
    let mut ev = linalg::zero_vec(n * (n - 1) + n - 1);
    let mut cum = Rational::ZERO;
    for i in 0..n - 1 {
        let mut h = Matrix::unit(n, n, i, i);
        h[(i + 1, i + 1)] = Scalar::from_int(-1);
        mats.push(h);
        names.push(format!("H{}", i + 1));
        grading.push(0);
        cum = &cum + &e[i];
        ev[n * (n - 1) + i] = Scalar::from_rational(cum.clone());
    }
    let alg = LieAlgebra::from_matrices(names, &mats).unwrap();
    let g = GradedParabolic::new(alg, grading, ev).unwrap();
    let std = Representation::new("std", mats).unwrap();
    (g, std)
}

pub fn sln_p1(n: usize) -> (GradedParabolic, Representation) {
    let nn = n as i64;
    let e: Vec<Rational> = (0..n)
        .map(|i| {
            if i == 0 {
                Rational::new(nn - 1, nn)
            } else {
                Rational::new(-1, nn)
            }
        })
        .collect();
    sln(&e)
}

/// sl(4) with p₁, `[e1,e2] = −e3`, and the fixed non-flat extension
/// `α(x1,x2,x3) = [[0,x1,0,0],[x1,0,0,0],[x2,−x2,−x1,0],[x3,x3,−x1,x1]]`.
pub fn projective_fixed() -> crate::extension::ExtensionMap {
    use crate::extension::{ExtensionMap, GradedAlgebraBundle};
    use crate::lie::SymmetryPair;
    use crate::linalg::{SpanCoordinates, Vector};
    use std::sync::Arc;
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
    ExtensionMap::new(b, Matrix::from_cols(15, &cols)).unwrap()
}
