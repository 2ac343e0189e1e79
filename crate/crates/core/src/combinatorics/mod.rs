//! Set partitions, permutations, the `q_{k,j,a}` polynomial family, the
//! modified Lucas triangle, Stirling numbers, and Riordan arrays.

mod partition;
mod permutation;
mod qpoly;
mod riordan;
mod stirling;

pub use partition::{
    all_set_partitions, induced_partition, partitions_coarser_than_cycles, subsets_of_size,
    SetPartition,
};
pub use permutation::{
    all_full_cycles, all_permutations, cayley_weight, class_representative, class_size,
    integer_partitions, Permutation,
};
pub use qpoly::{lucas_t, q_poly, q_sum_direct, q_sum_km, q_sum_km_closed_form};
pub use riordan::{
    km_triangle_pair, lucas_array_even, lucas_array_odd, mat_identity, mat_mul,
    riordan_from_params, riordan_multiply, signed_binomial_array_even,
    signed_binomial_array_odd, RiordanArray,
};
pub use stirling::{
    partition_power_sum, permutation_cycle_sum, stirling, stirling_enumerated, stirling_table,
    StirlingKind,
};
