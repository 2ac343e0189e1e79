//! Dense complex matrices for the random-model half of the library,
//! backed by nalgebra.

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{Error, Result};

/// Raw dense complex matrix.
pub type CMatrix = DMatrix<Complex64>;

/// A dense complex matrix with its Hermitian claim carried alongside.
/// Claimed-Hermitian matrices are validated to `‖M - M*‖_max <= 1e-12`
/// at construction.
#[derive(Clone, Debug)]
pub struct ComplexMatrix {
    pub data: CMatrix,
    pub hermitian: bool,
}

impl ComplexMatrix {
    pub fn hermitian(data: CMatrix) -> Result<Self> {
        let defect = hermitian_defect(&data);
        if defect > 1e-12 {
            return Err(Error::MatrixPrecondition(format!(
                "matrix is not Hermitian: max |M - M*| = {defect:.3e}"
            )));
        }
        Ok(ComplexMatrix {
            data,
            hermitian: true,
        })
    }

    pub fn general(data: CMatrix) -> Self {
        ComplexMatrix {
            data,
            hermitian: false,
        }
    }

    pub fn dim(&self) -> usize {
        self.data.nrows()
    }

    pub fn trace_re(&self) -> f64 {
        self.data.diagonal().iter().map(|z| z.re).sum()
    }

    /// `‖M^2 - M‖_F`, the idempotence defect.
    pub fn idempotence_defect(&self) -> f64 {
        let sq = &self.data * &self.data;
        (sq - &self.data).norm()
    }

    /// Validate that the matrix is an orthogonal projection within the
    /// stated Frobenius tolerance `1e-8 * N`.
    pub fn require_projection(&self, name: &str) -> Result<()> {
        if self.data.nrows() != self.data.ncols() {
            return Err(Error::MatrixPrecondition(format!("{name} is not square")));
        }
        let h = hermitian_defect(&self.data);
        if h > 1e-10 {
            return Err(Error::MatrixPrecondition(format!(
                "{name} is not Hermitian: max |M - M*| = {h:.3e}"
            )));
        }
        let defect = self.idempotence_defect();
        let tol = 1e-8 * self.dim() as f64;
        if defect > tol {
            return Err(Error::MatrixPrecondition(format!(
                "{name} is not idempotent: ‖M^2 - M‖_F = {defect:.3e} > {tol:.3e}"
            )));
        }
        Ok(())
    }
}

/// `max_ij |M_ij - conj(M_ji)|`.
pub fn hermitian_defect(m: &CMatrix) -> f64 {
    let n = m.nrows();
    let mut worst = 0.0f64;
    for i in 0..n {
        for j in i..n {
            let d = (m[(i, j)] - m[(j, i)].conj()).norm();
            worst = worst.max(d);
        }
    }
    worst
}

/// `(M + M*) / 2`, forcing exact Hermitian symmetry onto roundoff noise.
pub fn hermitize(m: &CMatrix) -> CMatrix {
    (m + m.adjoint()) * Complex64::new(0.5, 0.0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hermitian_validation() {
        let good = CMatrix::from_row_slice(
            2,
            2,
            &[
                Complex64::new(1.0, 0.0),
                Complex64::new(0.0, 1.0),
                Complex64::new(0.0, -1.0),
                Complex64::new(2.0, 0.0),
            ],
        );
        assert!(ComplexMatrix::hermitian(good).is_ok());
        let bad = CMatrix::from_row_slice(
            2,
            2,
            &[
                Complex64::new(1.0, 0.0),
                Complex64::new(0.5, 0.0),
                Complex64::new(0.0, 0.0),
                Complex64::new(2.0, 0.0),
            ],
        );
        assert!(ComplexMatrix::hermitian(bad).is_err());
    }

    #[test]
    fn projection_check() {
        let p = ComplexMatrix::hermitian(CMatrix::from_diagonal(
            &nalgebra::DVector::from_vec(vec![
                Complex64::new(1.0, 0.0),
                Complex64::new(0.0, 0.0),
            ]),
        ))
        .unwrap();
        assert!(p.require_projection("P").is_ok());
        let half = ComplexMatrix::hermitian(
            CMatrix::identity(2, 2) * Complex64::new(0.5, 0.0),
        )
        .unwrap();
        assert!(half.require_projection("H").is_err());
    }
}
