//! Integer partitions: enumeration, counting and Frobenius coordinates.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use crate::error::{Error, Result};

/// A non-increasing list of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn empty() -> Self {
        Self { parts: Vec::new() }
    }

    /// Builds a partition, rejecting zero parts and increasing sequences.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::Invalid("partition parts must be positive".into()));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Invalid("partition parts must be non-increasing".into()));
        }
        Ok(Self { parts })
    }

    /// Sorts the parts and drops zeros.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self { parts }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> u64 {
        self.parts.iter().map(|&p| p as u64).sum()
    }

    pub fn conjugate(&self) -> Self {
        let first = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=first)
            .map(|j| self.parts.iter().filter(|&&p| p >= j).count() as u32)
            .collect();
        Self { parts }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let inner = t
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .ok_or_else(|| Error::Syntax {
                pos: 0,
                msg: format!("expected a parenthesised partition, got {s:?}"),
            })?;
        if inner.trim().is_empty() {
            return Ok(Self::empty());
        }
        let parts = inner
            .split(',')
            .map(|p| {
                p.trim().parse::<u32>().map_err(|e| Error::Syntax {
                    pos: 0,
                    msg: format!("bad part {p:?}: {e}"),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(parts)
    }
}

/// Arm and leg lengths of the diagonal cells, both strictly decreasing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrobeniusCoords {
    pub arms: Vec<u32>,
    pub legs: Vec<u32>,
}

/// All partitions of `n` in lexicographically decreasing order.
pub fn enumerate_partitions(n: u32) -> Vec<Partition> {
    enumerate_min_part(n, 1)
}

/// All partitions of `n` whose parts are all `>= min_part`, lexicographically
/// decreasing.
pub fn enumerate_min_part(n: u32, min_part: u32) -> Vec<Partition> {
    let min_part = min_part.max(1);
    let mut out = Vec::new();
    let mut stack = Vec::new();
    fill(n, n, min_part, &mut stack, &mut out);
    out
}

fn fill(rest: u32, max: u32, min: u32, stack: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if rest == 0 {
        out.push(Partition { parts: stack.clone() });
        return;
    }
    let mut p = max.min(rest);
    while p >= min {
        stack.push(p);
        fill(rest - p, p, min, stack, out);
        stack.pop();
        p -= 1;
    }
}

const COUNT_TABLE_LEN: usize = 512;

fn count_table() -> &'static [u128] {
    static TABLE: OnceLock<Vec<u128>> = OnceLock::new();
    TABLE.get_or_init(|| {
        // p(n) < 2^127 well beyond n = 511
        let mut p = vec![0u128; COUNT_TABLE_LEN];
        p[0] = 1;
        for part in 1..COUNT_TABLE_LEN {
            for n in part..COUNT_TABLE_LEN {
                p[n] += p[n - part];
            }
        }
        p
    })
}

/// The number of partitions of `n`; zero for negative `n`.
///
/// Panics for `n >= 512`, where the precomputed table ends.
pub fn count_partitions(n: i64) -> u128 {
    if n < 0 {
        return 0;
    }
    let table = count_table();
    assert!((n as usize) < table.len(), "count_partitions: n = {n} out of range");
    table[n as usize]
}

pub fn frobenius(lambda: &Partition) -> FrobeniusCoords {
    let conj = lambda.conjugate();
    let mut arms = Vec::new();
    let mut legs = Vec::new();
    for (i, &p) in lambda.parts.iter().enumerate() {
        let i = i as u32;
        if p <= i {
            break;
        }
        arms.push(p - i - 1);
        legs.push(conj.parts[i as usize] - i - 1);
    }
    FrobeniusCoords { arms, legs }
}

/// The set `C_λ` as doubled values `2c`: `-(2b_i + 1)` for each leg, then
/// `2a_i + 1` for each arm in increasing order.
pub fn c_set(lambda: &Partition) -> Vec<i64> {
    let fr = frobenius(lambda);
    let neg = fr.legs.iter().map(|&b| -(2 * b as i64 + 1));
    let pos = fr.arms.iter().rev().map(|&a| 2 * a as i64 + 1);
    neg.chain(pos).collect()
}
