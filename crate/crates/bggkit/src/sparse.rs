//! Row-compressed sparse matrices for the large form spaces.

use std::collections::BTreeMap;

use crate::linalg::Vector;
use crate::matrix::Matrix;
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq)]
pub struct SparseMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Vec<(usize, Scalar)>>,
}

impl SparseMatrix {
    pub fn zeros(rows: usize, cols: usize) -> SparseMatrix {
        SparseMatrix {
            rows,
            cols,
            data: vec![Vec::new(); rows],
        }
    }

    pub fn identity(n: usize) -> SparseMatrix {
        SparseMatrix {
            rows: n,
            cols: n,
            data: (0..n).map(|i| vec![(i, Scalar::one())]).collect(),
        }
    }

    /// Sums duplicate entries and drops zeros.
    pub fn from_triplets(
        rows: usize,
        cols: usize,
        triplets: impl IntoIterator<Item = (usize, usize, Scalar)>,
    ) -> SparseMatrix {
        let mut acc: Vec<BTreeMap<usize, Scalar>> = vec![BTreeMap::new(); rows];
        for (i, j, x) in triplets {
            if x.is_zero() {
                continue;
            }
            debug_assert!(i < rows && j < cols);
            *acc[i].entry(j).or_default() += &x;
        }
        let data = acc
            .into_iter()
            .map(|r| r.into_iter().filter(|(_, x)| !x.is_zero()).collect())
            .collect();
        SparseMatrix { rows, cols, data }
    }

    pub fn from_dense(m: &Matrix) -> SparseMatrix {
        let data = (0..m.rows())
            .map(|i| {
                m.row(i)
                    .iter()
                    .enumerate()
                    .filter(|(_, x)| !x.is_zero())
                    .map(|(j, x)| (j, x.clone()))
                    .collect()
            })
            .collect();
        SparseMatrix {
            rows: m.rows(),
            cols: m.cols(),
            data,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[(usize, Scalar)] {
        &self.data[i]
    }

    pub fn data_rows(&self) -> impl Iterator<Item = &[(usize, Scalar)]> {
        self.data.iter().map(Vec::as_slice)
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.nnz() == 0
    }

    pub fn triplets(&self) -> impl Iterator<Item = (usize, usize, &Scalar)> {
        self.data
            .iter()
            .enumerate()
            .flat_map(|(i, r)| r.iter().map(move |(j, x)| (i, *j, x)))
    }

    pub fn to_dense(&self) -> Matrix {
        let mut m = Matrix::zeros(self.rows, self.cols);
        for (i, j, x) in self.triplets() {
            m[(i, j)] = x.clone();
        }
        m
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vector {
        assert_eq!(v.len(), self.cols, "sparse matrix-vector shape");
        self.data
            .iter()
            .map(|r| {
                let mut s = Scalar::zero();
                for (j, x) in r {
                    let y = &v[*j];
                    if !y.is_zero() {
                        s += &(x * y);
                    }
                }
                s
            })
            .collect()
    }

    pub fn transpose(&self) -> SparseMatrix {
        let mut data = vec![Vec::new(); self.cols];
        for (i, j, x) in self.triplets() {
            data[j].push((i, x.clone()));
        }
        SparseMatrix {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    pub fn matmul(&self, o: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.cols, o.rows, "sparse matmul shape");
        let data = self
            .data
            .iter()
            .map(|r| {
                let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
                for (k, a) in r {
                    for (j, b) in &o.data[*k] {
                        *acc.entry(*j).or_default() += &(a * b);
                    }
                }
                acc.into_iter().filter(|(_, x)| !x.is_zero()).collect()
            })
            .collect();
        SparseMatrix {
            rows: self.rows,
            cols: o.cols,
            data,
        }
    }

    pub fn add(&self, o: &SparseMatrix) -> SparseMatrix {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols), "sparse add shape");
        SparseMatrix::from_triplets(
            self.rows,
            self.cols,
            self.triplets()
                .chain(o.triplets())
                .map(|(i, j, x)| (i, j, x.clone())),
        )
    }

    pub fn scale(&self, s: &Scalar) -> SparseMatrix {
        SparseMatrix::from_triplets(
            self.rows,
            self.cols,
            self.triplets().map(|(i, j, x)| (i, j, x * s)),
        )
    }

    /// Dense submatrix on the given row and column index lists.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Matrix {
        let mut pos = vec![usize::MAX; self.cols];
        for (c, &j) in cols.iter().enumerate() {
            pos[j] = c;
        }
        let mut m = Matrix::zeros(rows.len(), cols.len());
        for (r, &i) in rows.iter().enumerate() {
            for (j, x) in &self.data[i] {
                if pos[*j] != usize::MAX {
                    m[(r, pos[*j])] = x.clone();
                }
            }
        }
        m
    }
}
