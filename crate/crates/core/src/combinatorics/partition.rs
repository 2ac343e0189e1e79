//! Set partitions of `{1..n}`, the coarser-than order, and the ordered
//! partition of a cycle induced by a subset of its edges.

use crate::error::{Error, Result};

use super::Permutation;

/// A partition of `{1..n}` into disjoint non-empty blocks. Blocks are
/// stored sorted internally, ordered by smallest element, so equality is
/// structural.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SetPartition {
    n: usize,
    blocks: Vec<Vec<usize>>, // 1-based, each sorted, ordered by min element
}

impl SetPartition {
    pub fn new(n: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = vec![false; n];
        let mut canonical: Vec<Vec<usize>> = Vec::with_capacity(blocks.len());
        for block in blocks {
            if block.is_empty() {
                return Err(Error::InvalidParameter("empty block".into()));
            }
            let mut b = block;
            b.sort_unstable();
            for &x in &b {
                if x < 1 || x > n || seen[x - 1] {
                    return Err(Error::InvalidParameter(format!(
                        "blocks do not partition 1..{n}"
                    )));
                }
                seen[x - 1] = true;
            }
            canonical.push(b);
        }
        if !seen.iter().all(|&s| s) {
            return Err(Error::InvalidParameter(format!(
                "blocks do not cover 1..{n}"
            )));
        }
        canonical.sort_by_key(|b| b[0]);
        Ok(SetPartition {
            n,
            blocks: canonical,
        })
    }

    /// The partition of `{1..n}` given by the cycles of a permutation.
    pub fn from_cycles(sigma: &Permutation) -> Self {
        SetPartition::new(sigma.len(), sigma.cycles()).expect("cycles partition the ground set")
    }

    pub fn ground_size(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn min_block_size(&self) -> usize {
        self.blocks.iter().map(|b| b.len()).min().unwrap_or(0)
    }

    /// Index of the block containing each point (0-based block ids).
    fn block_ids(&self) -> Vec<usize> {
        let mut ids = vec![0; self.n];
        for (bi, block) in self.blocks.iter().enumerate() {
            for &x in block {
                ids[x - 1] = bi;
            }
        }
        ids
    }

    /// Whether `self` is coarser than (or equal to) `finer`: every block
    /// of `finer` is contained in a block of `self`.
    pub fn is_coarser_than(&self, finer: &SetPartition) -> bool {
        assert_eq!(self.n, finer.n);
        let ids = self.block_ids();
        finer
            .blocks
            .iter()
            .all(|b| b.iter().all(|&x| ids[x - 1] == ids[b[0] - 1]))
    }
}

/// All set partitions of `{1..n}` via restricted growth strings. `n = 0`
/// yields the single empty partition.
pub fn all_set_partitions(n: usize) -> Vec<SetPartition> {
    assert!(n <= 12, "set partition enumeration capped at n = 12");
    if n == 0 {
        return vec![SetPartition {
            n: 0,
            blocks: Vec::new(),
        }];
    }
    let mut out = Vec::new();
    // rgs[i] = block id of point i+1; rgs[i] <= 1 + max(rgs[..i])
    let mut rgs = vec![0usize; n];
    loop {
        let nblocks = rgs.iter().copied().max().unwrap() + 1;
        let mut blocks = vec![Vec::new(); nblocks];
        for (i, &b) in rgs.iter().enumerate() {
            blocks[b].push(i + 1);
        }
        out.push(SetPartition { n, blocks });
        // advance the restricted growth string
        let mut i = n;
        loop {
            if i == 1 {
                return out;
            }
            i -= 1;
            let max_prefix = rgs[..i].iter().copied().max().unwrap();
            if rgs[i] <= max_prefix {
                rgs[i] += 1;
                for r in rgs.iter_mut().skip(i + 1) {
                    *r = 0;
                }
                break;
            }
        }
    }
}

/// Partitions of `{1..n}` coarser than the cycle partition of `sigma`,
/// expressed as partitions of the cycle index set merged back to points.
pub fn partitions_coarser_than_cycles(sigma: &Permutation) -> Vec<SetPartition> {
    let cycles = sigma.cycles();
    let m = cycles.len();
    all_set_partitions(m)
        .into_iter()
        .map(|p| {
            let blocks: Vec<Vec<usize>> = p
                .blocks()
                .iter()
                .map(|b| {
                    b.iter()
                        .flat_map(|&ci| cycles[ci - 1].iter().copied())
                        .collect()
                })
                .collect();
            SetPartition::new(sigma.len(), blocks).unwrap()
        })
        .collect()
}

/// The ordered partition of `k` induced by a non-empty subset `S` of
/// `{1..k}` viewed as edges of the `k`-cycle: with `S = {s_1 < ... < s_j}`
/// the parts are the gaps `s_2 - s_1, ..., s_j - s_{j-1}, k + s_1 - s_j`.
pub fn induced_partition(s: &[usize], k: usize) -> Result<Vec<usize>> {
    if s.is_empty() {
        return Err(Error::InvalidParameter(
            "induced partition undefined for empty set".into(),
        ));
    }
    let mut sorted = s.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != s.len() || sorted[0] < 1 || *sorted.last().unwrap() > k {
        return Err(Error::InvalidParameter(format!(
            "{s:?} is not a subset of 1..{k}"
        )));
    }
    let j = sorted.len();
    let mut parts = Vec::with_capacity(j);
    for i in 0..j - 1 {
        parts.push(sorted[i + 1] - sorted[i]);
    }
    parts.push(k + sorted[0] - sorted[j - 1]);
    debug_assert_eq!(parts.iter().sum::<usize>(), k);
    Ok(parts)
}

/// All subsets of `{1..k}` of size `j`, as sorted vectors.
pub fn subsets_of_size(k: usize, j: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(j);
    fn rec(start: usize, k: usize, j: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == j {
            out.push(current.clone());
            return;
        }
        let remaining = j - current.len();
        for x in start..=k.saturating_sub(remaining - 1) {
            current.push(x);
            rec(x + 1, k, j, current, out);
            current.pop();
        }
    }
    if j <= k {
        rec(1, k, j, &mut current, &mut out);
    }
    out
}
