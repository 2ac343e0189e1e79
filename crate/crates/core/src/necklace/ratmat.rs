//! Small dense rational matrices for hand-built exact projection
//! examples.

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Dense square matrix over the rationals.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RatMatrix {
    n: usize,
    rows: Vec<Vec<BigRational>>,
}

impl RatMatrix {
    pub fn new(rows: Vec<Vec<BigRational>>) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidParameter("matrix must be square".into()));
        }
        Ok(RatMatrix { n, rows })
    }

    pub fn from_i64(rows: &[&[i64]]) -> Result<Self> {
        Self::new(
            rows.iter()
                .map(|r| r.iter().map(|&v| BigRational::from_integer(v.into())).collect())
                .collect(),
        )
    }

    pub fn identity(n: usize) -> Self {
        let mut rows = vec![vec![BigRational::zero(); n]; n];
        for (i, row) in rows.iter_mut().enumerate() {
            row[i] = BigRational::one();
        }
        RatMatrix { n, rows }
    }

    pub fn zeros(n: usize) -> Self {
        RatMatrix {
            n,
            rows: vec![vec![BigRational::zero(); n]; n],
        }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn entry(&self, i: usize, j: usize) -> &BigRational {
        &self.rows[i][j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigRational) {
        self.rows[i][j] = v;
    }

    pub fn trace(&self) -> BigRational {
        (0..self.n).map(|i| self.rows[i][i].clone()).sum()
    }

    pub fn mul(&self, rhs: &RatMatrix) -> RatMatrix {
        assert_eq!(self.n, rhs.n);
        let mut out = RatMatrix::zeros(self.n);
        for i in 0..self.n {
            for l in 0..self.n {
                if self.rows[i][l].is_zero() {
                    continue;
                }
                for j in 0..self.n {
                    if !rhs.rows[l][j].is_zero() {
                        let add = &self.rows[i][l] * &rhs.rows[l][j];
                        out.rows[i][j] += add;
                    }
                }
            }
        }
        out
    }

    pub fn sub(&self, rhs: &RatMatrix) -> RatMatrix {
        assert_eq!(self.n, rhs.n);
        RatMatrix {
            n: self.n,
            rows: self
                .rows
                .iter()
                .zip(&rhs.rows)
                .map(|(a, b)| a.iter().zip(b).map(|(x, y)| x - y).collect())
                .collect(),
        }
    }

    pub fn scale(&self, c: &BigRational) -> RatMatrix {
        RatMatrix {
            n: self.n,
            rows: self
                .rows
                .iter()
                .map(|r| r.iter().map(|x| x * c).collect())
                .collect(),
        }
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|i| (0..i).all(|j| self.rows[i][j] == self.rows[j][i]))
    }

    pub fn is_idempotent(&self) -> bool {
        self.mul(self) == *self
    }

    /// Projection onto the span of a single rational vector:
    /// `v v^T / (v^T v)`.
    pub fn projection_onto(v: &[BigRational]) -> Result<Self> {
        let norm2: BigRational = v.iter().map(|x| x * x).sum();
        if norm2.is_zero() {
            return Err(Error::InvalidParameter(
                "cannot project onto the zero vector".into(),
            ));
        }
        let n = v.len();
        let mut rows = vec![vec![BigRational::zero(); n]; n];
        for i in 0..n {
            for j in 0..n {
                rows[i][j] = &v[i] * &v[j] / &norm2;
            }
        }
        Ok(RatMatrix { n, rows })
    }
}
