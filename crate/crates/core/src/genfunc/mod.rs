//! The specific generating functions behind the trace recursions: cyclic
//! runs, the `q`-polynomial function, the `s_k` family, Chebyshev
//! polynomials, the orthogonal polynomials of the positive part of the
//! law, and the series identity tying the last two together.

pub mod chebyshev;
mod closed_forms;
mod orthopoly;
mod qgf;
mod runs;

pub use chebyshev::chebyshev_u;
pub use closed_forms::{coupling_table, q_gf_num_den, runs_gf_num_den};
pub use orthopoly::{
    de_gf_series, de_orth_polys, s_poly, s_polys, s_series_closed, s_series_from_polys,
    verify_orth_identity, DEPolySequence, OrthIdentityReport,
};
pub use qgf::{q_gf_coefficient_matches, q_gf_expand};
pub use runs::{runs_enumeration_gf, RunsStatistic};
