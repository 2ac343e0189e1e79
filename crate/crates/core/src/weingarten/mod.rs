//! Exact unitary Weingarten calculus at small order: the table by Gram
//! inversion, joint moments of Haar-unitary entries, the Catalan-product
//! bound, compatible-tuple expectation sums, and the cycle-sum estimate.

mod bounds;
mod moments;
mod table;

pub use bounds::{
    bound_check, bound_precondition_holds, cycle_sum_check, f_alpha, f_alpha_envelope_ratio,
    f_alpha_scaled, BoundLine, BoundReport, CycleSumCheck,
};
pub use moments::{
    hat_trace_expectation, hat_trace_mc, joint_moment, joint_moment_mc, HatTraceExpectation,
    IndexPattern, JointMoment,
};
pub use table::{weingarten_table, WeingartenTable};
