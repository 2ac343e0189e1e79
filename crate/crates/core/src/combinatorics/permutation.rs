//! Permutations of `{1..n}` with cycle structure queries and exhaustive
//! enumeration for brute-force oracles.

use crate::error::{Error, Result};

/// A permutation of `{1..n}`, stored as the image list (0-based
/// internally, 1-based at the API boundary).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Permutation {
    images: Vec<usize>, // images[i] = sigma(i+1) - 1
}

impl Permutation {
    /// Build from 1-based images; rejects anything that is not a
    /// bijection on `{1..n}`.
    pub fn from_images(images_one_based: &[usize]) -> Result<Self> {
        let n = images_one_based.len();
        let mut seen = vec![false; n];
        for &v in images_one_based {
            if v < 1 || v > n || seen[v - 1] {
                return Err(Error::InvalidParameter(format!(
                    "images {images_one_based:?} are not a permutation of 1..{n}"
                )));
            }
            seen[v - 1] = true;
        }
        Ok(Permutation {
            images: images_one_based.iter().map(|&v| v - 1).collect(),
        })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// The cycle `(1 2 ... n)` mapping `i` to `i + 1` and `n` to `1`.
    pub fn full_cycle(n: usize) -> Self {
        Permutation {
            images: (0..n).map(|i| (i + 1) % n).collect(),
        }
    }

    /// Transposition `(a b)` with 1-based points.
    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        let mut images: Vec<usize> = (0..n).collect();
        images.swap(a - 1, b - 1);
        Permutation { images }
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    /// 1-based application.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1] + 1
    }

    /// Composition `self . rhs` (apply `rhs` first).
    pub fn compose(&self, rhs: &Permutation) -> Permutation {
        assert_eq!(self.len(), rhs.len());
        Permutation {
            images: rhs.images.iter().map(|&i| self.images[i]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.len()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v] = i;
        }
        Permutation { images }
    }

    /// Cycles as sorted 1-based point sets.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.len();
        let mut seen = vec![false; n];
        let mut cycles = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cycle.push(i + 1);
                i = self.images[i];
            }
            cycle.sort_unstable();
            cycles.push(cycle);
        }
        cycles
    }

    pub fn cycle_count(&self) -> usize {
        self.cycles().len()
    }

    /// Cycle type as a partition of `n`, sorted descending.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut lengths: Vec<usize> = self.cycles().iter().map(|c| c.len()).collect();
        lengths.sort_unstable_by(|a, b| b.cmp(a));
        lengths
    }

    /// Number of cycles of length exactly `a`.
    pub fn cycles_of_len(&self, a: usize) -> usize {
        self.cycles().iter().filter(|c| c.len() == a).count()
    }

    /// Minimum number of transpositions composing to this permutation,
    /// equal to `n` minus the number of cycles.
    pub fn cayley_weight(&self) -> usize {
        self.len() - self.cycle_count()
    }

    /// Whether every cycle has length at least `min_len`.
    pub fn min_cycle_len_at_least(&self, min_len: usize) -> bool {
        self.cycles().iter().all(|c| c.len() >= min_len)
    }
}

/// Cayley weight of a permutation (free function mirroring the method).
pub fn cayley_weight(sigma: &Permutation) -> usize {
    sigma.cayley_weight()
}

/// All permutations of `{1..n}` in lexicographic order of image lists.
/// Capped at n = 8 to keep brute-force oracles honest about their cost.
pub fn all_permutations(n: usize) -> Vec<Permutation> {
    assert!(n <= 8, "exhaustive permutation enumeration capped at n = 8");
    let mut out = Vec::new();
    let mut images: Vec<usize> = (0..n).collect();
    loop {
        out.push(Permutation {
            images: images.clone(),
        });
        // next lexicographic permutation
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| images[i] < images[i + 1])
        else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| images[j] > images[i]).unwrap();
        images.swap(i, j);
        images[i + 1..].reverse();
    }
    out
}

/// All `n`-cycles in `S_n`.
pub fn all_full_cycles(n: usize) -> Vec<Permutation> {
    all_permutations(n)
        .into_iter()
        .filter(|p| p.cycle_count() == 1 && !p.is_empty())
        .collect()
}

/// All integer partitions of `n`, each sorted descending; these index the
/// conjugacy classes of `S_n`.
pub fn integer_partitions(n: usize) -> Vec<Vec<usize>> {
    fn rec(remaining: usize, max_part: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if remaining == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in (1..=remaining.min(max_part)).rev() {
            prefix.push(part);
            rec(remaining - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// A canonical representative of the conjugacy class with the given cycle
/// type: consecutive blocks of each cycle length.
pub fn class_representative(cycle_type: &[usize]) -> Permutation {
    let n: usize = cycle_type.iter().sum();
    let mut images: Vec<usize> = (0..n).collect();
    let mut start = 0;
    for &len in cycle_type {
        for i in 0..len {
            images[start + i] = start + (i + 1) % len;
        }
        start += len;
    }
    Permutation { images }
}

/// Size of the conjugacy class in `S_n` with the given cycle type:
/// `n! / prod(len * multiplicity!)`.
pub fn class_size(cycle_type: &[usize]) -> u64 {
    let n: usize = cycle_type.iter().sum();
    let mut size: u64 = 1;
    for i in 2..=n {
        size *= i as u64;
    }
    let mut mult_count = std::collections::HashMap::new();
    for &len in cycle_type {
        size /= len as u64;
        *mult_count.entry(len).or_insert(0u64) += 1;
    }
    for (_, m) in mult_count {
        for i in 2..=m {
            size /= i;
        }
    }
    size
}
