//! The two-parameter spectral law: density, atoms, support edges, exact
//! moments by recursion, an independent quadrature oracle, parameter
//! conversions, the folding identity, and a seeded sampler.

mod convert;
mod folding;
mod law;
mod moments;
pub mod quadrature;
mod sample;

pub use convert::{convert_params, de_support_endpoints, ParamTarget};
pub use folding::{folding_check, FoldingReport};
pub use law::{edge, ManovaLaw, ManovaParams};
pub use moments::{moment_discrepancy, moments_exact, moments_quadrature, MomentVector};
pub use sample::{sample, ManovaSampler};
