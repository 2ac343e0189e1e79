//! Ordinary and associated Stirling numbers, with the partition and
//! permutation power sums they generate.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

use super::partition::all_set_partitions;
use super::permutation::all_permutations;

/// Which Stirling family to evaluate.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum StirlingKind {
    /// Counts permutations of `[n]` by number of cycles.
    First,
    /// Counts set partitions of `[n]` by number of blocks.
    Second,
}

/// `s(n,k)`, `s_1(n,k)`, `S(n,k)`, or `S_1(n,k)`: permutations or
/// partitions of `[n]` with exactly `k` cycles/blocks, all of size at
/// least `associated_r + 1`. Computed by the standard recurrences
///
/// * `s(n,k)   = s(n-1,k-1) + (n-1) s(n-1,k)`
/// * `s_1(n,k) = (n-1) s_1(n-1,k) + (n-1) s_1(n-2,k-1)`
/// * `S(n,k)   = S(n-1,k-1) + k S(n-1,k)`
/// * `S_1(n,k) = k S_1(n-1,k) + (n-1) S_1(n-2,k-1)`
pub fn stirling(kind: StirlingKind, associated_r: u8, n: usize, k: usize) -> Result<BigInt> {
    if associated_r > 1 {
        return Err(Error::InvalidParameter(
            "only r = 0 (ordinary) and r = 1 (associated) are supported".into(),
        ));
    }
    let table = stirling_table(kind, associated_r, n);
    Ok(table[n].get(k).cloned().unwrap_or_else(BigInt::zero))
}

/// Full triangle `rows[m][k]` for `m <= n`.
pub fn stirling_table(kind: StirlingKind, associated_r: u8, n: usize) -> Vec<Vec<BigInt>> {
    let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(n + 1);
    rows.push(vec![BigInt::one()]); // row 0: the empty object
    for m in 1..=n {
        let mut row = vec![BigInt::zero(); m + 1];
        match (kind, associated_r) {
            (StirlingKind::First, 0) => {
                for k in 1..=m {
                    let insert = rows[m - 1].get(k).cloned().unwrap_or_else(BigInt::zero)
                        * BigInt::from(m as u64 - 1);
                    let new_cycle = rows[m - 1].get(k - 1).cloned().unwrap_or_else(BigInt::zero);
                    row[k] = insert + new_cycle;
                }
            }
            (StirlingKind::Second, 0) => {
                for k in 1..=m {
                    let insert = rows[m - 1].get(k).cloned().unwrap_or_else(BigInt::zero)
                        * BigInt::from(k as u64);
                    let new_block = rows[m - 1].get(k - 1).cloned().unwrap_or_else(BigInt::zero);
                    row[k] = insert + new_block;
                }
            }
            (StirlingKind::First, _) => {
                for k in 1..=m {
                    let mut v = rows[m - 1].get(k).cloned().unwrap_or_else(BigInt::zero)
                        * BigInt::from(m as u64 - 1);
                    if m >= 2 {
                        v += rows[m - 2].get(k - 1).cloned().unwrap_or_else(BigInt::zero)
                            * BigInt::from(m as u64 - 1);
                    }
                    row[k] = v;
                }
            }
            (StirlingKind::Second, _) => {
                for k in 1..=m {
                    let mut v = rows[m - 1].get(k).cloned().unwrap_or_else(BigInt::zero)
                        * BigInt::from(k as u64);
                    if m >= 2 {
                        v += rows[m - 2].get(k - 1).cloned().unwrap_or_else(BigInt::zero)
                            * BigInt::from(m as u64 - 1);
                    }
                    row[k] = v;
                }
            }
        }
        rows.push(row);
    }
    rows
}

/// Brute-force count over all permutations or partitions of `[n]`; the
/// independent oracle for `stirling`, capped at small `n`.
pub fn stirling_enumerated(
    kind: StirlingKind,
    associated_r: u8,
    n: usize,
    k: usize,
) -> Result<BigInt> {
    let min_size = associated_r as usize + 1;
    let count = match kind {
        StirlingKind::First => {
            if n > 8 {
                return Err(Error::InvalidParameter(
                    "permutation enumeration capped at n = 8".into(),
                ));
            }
            all_permutations(n)
                .into_iter()
                .filter(|p| p.cycle_count() == k && p.min_cycle_len_at_least(min_size))
                .count()
        }
        StirlingKind::Second => {
            if n > 10 {
                return Err(Error::InvalidParameter(
                    "partition enumeration capped at n = 10".into(),
                ));
            }
            all_set_partitions(n)
                .into_iter()
                .filter(|p| p.len() == k && (p.is_empty() || p.min_block_size() >= min_size))
                .count()
        }
    };
    Ok(BigInt::from(count))
}

/// `sum over partitions of [n] with all blocks of size >= min_block of
/// x^{#blocks}`, evaluated exactly as `sum_k S_r(n,k) x^k`.
pub fn partition_power_sum(n: usize, x: &BigRational, min_block: u8) -> Result<BigRational> {
    if !(1..=2).contains(&min_block) {
        return Err(Error::InvalidParameter("min_block must be 1 or 2".into()));
    }
    power_sum(StirlingKind::Second, min_block - 1, n, x)
}

/// `sum over permutations of [n] with all cycles of length >= min_cycle
/// of x^{#cycles}`, evaluated exactly as `sum_k s_r(n,k) x^k`.
pub fn permutation_cycle_sum(n: usize, x: &BigRational, min_cycle: u8) -> Result<BigRational> {
    if !(1..=2).contains(&min_cycle) {
        return Err(Error::InvalidParameter("min_cycle must be 1 or 2".into()));
    }
    power_sum(StirlingKind::First, min_cycle - 1, n, x)
}

fn power_sum(kind: StirlingKind, r: u8, n: usize, x: &BigRational) -> Result<BigRational> {
    let table = stirling_table(kind, r, n);
    let mut total = BigRational::zero();
    let mut x_pow = BigRational::one();
    for k in 0..=n {
        let c = table[n].get(k).cloned().unwrap_or_else(BigInt::zero);
        if k == 0 {
            // k = 0 only contributes for n = 0 (the empty object), x^0 = 1
            total += BigRational::from(c);
        } else {
            x_pow *= x;
            total += BigRational::from(c) * &x_pow;
        }
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rat, rat_int};

    #[test]
    fn ordinary_values() {
        assert_eq!(stirling(StirlingKind::Second, 0, 3, 2).unwrap(), BigInt::from(3));
        assert_eq!(stirling(StirlingKind::First, 0, 3, 1).unwrap(), BigInt::from(2));
        assert_eq!(stirling(StirlingKind::First, 0, 3, 2).unwrap(), BigInt::from(3));
        assert_eq!(stirling(StirlingKind::First, 0, 0, 0).unwrap(), BigInt::from(1));
        assert_eq!(stirling(StirlingKind::First, 0, 2, 0).unwrap(), BigInt::from(0));
    }

    #[test]
    fn associated_values() {
        // permutations of S_4 with all cycles >= 2
        assert_eq!(stirling(StirlingKind::First, 1, 4, 1).unwrap(), BigInt::from(6));
        assert_eq!(stirling(StirlingKind::First, 1, 4, 2).unwrap(), BigInt::from(3));
        // partitions of [4] with all blocks >= 2
        assert_eq!(stirling(StirlingKind::Second, 1, 4, 2).unwrap(), BigInt::from(3));
        assert_eq!(stirling(StirlingKind::Second, 1, 5, 2).unwrap(), BigInt::from(10));
    }

    #[test]
    fn recurrence_matches_enumeration() {
        for n in 0..=7 {
            for k in 0..=n {
                for kind in [StirlingKind::First, StirlingKind::Second] {
                    for r in 0..=1u8 {
                        assert_eq!(
                            stirling(kind, r, n, k).unwrap(),
                            stirling_enumerated(kind, r, n, k).unwrap(),
                            "mismatch at kind={kind:?} r={r} n={n} k={k}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn power_sum_examples() {
        assert_eq!(partition_power_sum(2, &rat_int(5), 1).unwrap(), rat_int(30));
        assert_eq!(partition_power_sum(2, &rat_int(5), 2).unwrap(), rat_int(5));
        assert_eq!(partition_power_sum(0, &rat(7, 3), 1).unwrap(), rat_int(1));
        assert_eq!(permutation_cycle_sum(2, &rat_int(3), 2).unwrap(), rat_int(3));
        assert_eq!(permutation_cycle_sum(3, &rat_int(2), 2).unwrap(), rat_int(4));
        assert_eq!(permutation_cycle_sum(3, &rat_int(2), 1).unwrap(), rat_int(24));
    }

    #[test]
    fn power_sums_match_enumeration() {
        let x = rat(7, 2);
        for n in 0..=6 {
            for min in 1..=2u8 {
                let direct: BigRational = all_set_partitions(n)
                    .into_iter()
                    .filter(|p| p.is_empty() || p.min_block_size() >= min as usize)
                    .map(|p| {
                        let mut v = BigRational::one();
                        for _ in 0..p.len() {
                            v *= &x;
                        }
                        v
                    })
                    .sum();
                assert_eq!(partition_power_sum(n, &x, min).unwrap(), direct);
            }
        }
    }
}
