//! Random matrix and frame samplers, spectral measurement of products of
//! projections, and the Monte Carlo experiments comparing them against
//! the limiting law.

mod frame;
mod matrix;
mod sampler;
mod spectral;

pub use frame::{dft_subframe, Frame};
pub use matrix::{hermitian_defect, hermitize, CMatrix, ComplexMatrix};
pub use sampler::{
    bernoulli_diagonal, bernoulli_projection, child_seed, haar_unitary, invariant_projection,
};
pub use spectral::{
    binned_law_mass, compare_moments, edge_experiment, esd_report, esd_trials,
    freeness_diagnostic, histogram_tv_distance, sample_projection_pair, EdgeConfig, EdgeRun,
    EdgeSummary, EnsembleKind, FreenessReport, Histogram, MomentComparison, SpectralReport,
};
