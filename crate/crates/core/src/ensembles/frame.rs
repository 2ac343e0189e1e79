//! Tight frames and random subframes of the discrete Fourier transform
//! matrix.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;

use crate::error::{Error, Result};

use super::matrix::{hermitize, CMatrix, ComplexMatrix};

/// A frame: `N` vectors in `C^M`, stored as the columns of an `M x N`
/// matrix.
#[derive(Clone, Debug)]
pub struct Frame {
    columns: CMatrix,
}

impl Frame {
    pub fn new(columns: CMatrix) -> Self {
        Frame { columns }
    }

    /// Ambient dimension `M`.
    pub fn ambient_dim(&self) -> usize {
        self.columns.nrows()
    }

    /// Number of frame vectors `N`.
    pub fn len(&self) -> usize {
        self.columns.ncols()
    }

    pub fn is_empty(&self) -> bool {
        self.columns.ncols() == 0
    }

    pub fn matrix(&self) -> &CMatrix {
        &self.columns
    }

    /// `‖V V* - I_M‖_F`; zero for an exactly tight frame.
    pub fn tightness_defect(&self) -> f64 {
        let m = self.ambient_dim();
        (&self.columns * self.columns.adjoint() - CMatrix::identity(m, m)).norm()
    }

    /// Largest off-diagonal Gram magnitude `max_{i != j} |<v_i, v_j>|`.
    pub fn coherence(&self) -> f64 {
        let gram = self.columns.adjoint() * &self.columns;
        let n = self.len();
        let mut worst = 0.0f64;
        for i in 0..n {
            for j in 0..i {
                worst = worst.max(gram[(i, j)].norm());
            }
        }
        worst
    }

    /// The Welch lower bound `sqrt((N - M) / (M (N - 1)))` on the
    /// coherence of `N` unit-norm vectors in `C^M`. Frames stored here
    /// have squared norms `M/N` rather than 1, so compare against
    /// `coherence() * N / M`.
    pub fn welch_bound(&self) -> f64 {
        let m = self.ambient_dim() as f64;
        let n = self.len() as f64;
        ((n - m) / (m * (n - 1.0))).max(0.0).sqrt()
    }

    /// The `N x N` Gram projection `V* V`; exactly idempotent in exact
    /// arithmetic when the frame is tight, Hermitized here to clear
    /// roundoff.
    pub fn gram_projection(&self) -> ComplexMatrix {
        let g = self.columns.adjoint() * &self.columns;
        ComplexMatrix {
            data: hermitize(&g),
            hermitian: true,
        }
    }
}

/// Random row-subframe of the `N x N` unitary DFT matrix
/// `F_jk = exp(2 pi i j k / N) / sqrt(N)`: each row is kept independently
/// with probability `beta`. The surviving rows are orthonormal, so the
/// frame is exactly tight with no rescaling; degenerate selections (no
/// rows, all rows) are redrawn from the same seed stream.
pub fn dft_subframe(n: usize, beta: f64, seed: u64) -> Result<Frame> {
    if n < 2 {
        return Err(Error::InvalidParameter(
            "DFT subframe needs dimension at least 2".into(),
    ));
    }
    if !(0.0..=1.0).contains(&beta) || beta == 0.0 || beta == 1.0 {
        return Err(Error::InvalidParameter(format!(
            "selection probability must lie in (0,1), got {beta}"
        )));
    }
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    let selected = loop {
        let rows: Vec<usize> = (0..n).filter(|_| rng.gen::<f64>() < beta).collect();
        if !rows.is_empty() && rows.len() < n {
            break rows;
        }
    };
    let m = selected.len();
    let scale = 1.0 / (n as f64).sqrt();
    let columns = CMatrix::from_fn(m, n, |i, k| {
        let j = selected[i];
        let angle = 2.0 * std::f64::consts::PI * (j as f64) * (k as f64) / (n as f64);
        Complex64::from_polar(scale, angle)
    });
    Ok(Frame::new(columns))
}
