//! Integer partitions, jump sequences and constrained enumeration.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PartitionError {
    #[error("parts are not weakly decreasing: {0:?}")]
    NotDecreasing(Vec<u32>),
    #[error("partition {lambda} is not admissible for n={n}, m={m}")]
    Inadmissible { lambda: Partition, n: u32, m: u32 },
    #[error("sequence {0:?} is not a valid jump sequence")]
    BadJumps(Vec<u32>),
    #[error("cannot parse partition '{0}'")]
    Parse(String),
}

/// Weakly decreasing sequence of positive integers. Trailing zeros are
/// dropped on construction, so `[2,1,0]` and `[2,1]` are the same value.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Result<Self, PartitionError> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(PartitionError::NotDecreasing(parts));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition(parts))
    }

    /// Panics if `parts` is not weakly decreasing.
    pub fn from_slice(parts: &[u32]) -> Self {
        Self::new(parts.to_vec()).expect("parts must be weakly decreasing")
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// `(1,1,...,1)` with `k` ones.
    pub fn column(k: u32) -> Self {
        Partition(vec![1; k as usize])
    }

    /// The one-row partition `(k)`, or `()` for `k = 0`.
    pub fn row(k: u32) -> Self {
        Self::new(vec![k]).unwrap()
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn first(&self) -> u32 {
        self.part(0)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.first() as usize;
        Partition(
            (0..width)
                .map(|j| self.0.iter().filter(|&&p| p as usize > j).count() as u32)
                .collect(),
        )
    }

    /// True if `other` fits inside `self` (`other_i <= self_i` for all `i`).
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    /// Fits in the `(m+1) x (n-m)` rectangle.
    pub fn is_admissible(&self, n: u32, m: u32) -> bool {
        assert!(m <= n, "m must not exceed n");
        self.len() <= m as usize + 1 && self.first() <= n - m
    }

    /// Parts padded with zeros to length `len`.
    pub fn padded(&self, len: usize) -> Vec<u32> {
        (0..len.max(self.len())).map(|i| self.part(i)).collect()
    }
}

pub fn conjugate(lambda: &Partition) -> Partition {
    lambda.conjugate()
}

pub fn contains(mu: &Partition, lambda: &Partition) -> bool {
    mu.contains(lambda)
}

pub fn is_admissible(lambda: &Partition, n: u32, m: u32) -> bool {
    lambda.is_admissible(n, m)
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

impl FromStr for Partition {
    type Err = PartitionError;

    /// Accepts `[3,1]`, `[]`, and also the bare forms `3,1` and `3 1`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || PartitionError::Parse(s.to_string());
        let inner = s.trim();
        let inner = match inner.strip_prefix('[') {
            Some(rest) => rest.strip_suffix(']').ok_or_else(bad)?,
            None => inner,
        };
        let parts: Vec<u32> = inner
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| t.parse().map_err(|_| bad()))
            .collect::<Result<_, _>>()?;
        Partition::new(parts).map_err(|_| bad())
    }
}

/// Strictly increasing `0 <= sigma_0 < ... < sigma_m <= n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct JumpSequence {
    sigma: Vec<u32>,
    n: u32,
}

impl JumpSequence {
    pub fn new(sigma: Vec<u32>, n: u32) -> Result<Self, PartitionError> {
        let increasing = sigma.windows(2).all(|w| w[0] < w[1]);
        if sigma.is_empty() || !increasing || *sigma.last().unwrap() > n {
            return Err(PartitionError::BadJumps(sigma));
        }
        Ok(JumpSequence { sigma, n })
    }

    pub fn sigma(&self) -> &[u32] {
        &self.sigma
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn m(&self) -> u32 {
        self.sigma.len() as u32 - 1
    }

    /// Recovers `lambda_{i+1} = n - m + i - sigma_i`.
    pub fn to_partition(&self) -> Partition {
        let (n, m) = (self.n, self.m());
        let parts = self
            .sigma
            .iter()
            .enumerate()
            .map(|(i, &s)| n - m + i as u32 - s)
            .collect();
        Partition::new(parts).expect("jump sequence yields decreasing parts")
    }
}

/// `sigma_i = n - m + i - lambda_{i+1}` for `0 <= i <= m`.
pub fn jumps(lambda: &Partition, n: u32, m: u32) -> Result<JumpSequence, PartitionError> {
    if m > n || !lambda.is_admissible(n, m) {
        return Err(PartitionError::Inadmissible {
            lambda: lambda.clone(),
            n,
            m,
        });
    }
    let sigma = (0..=m)
        .map(|i| n - m + i - lambda.part(i as usize))
        .collect();
    JumpSequence::new(sigma, n)
}

/// All partitions of `size` with parts at most `max_part` and at most
/// `max_len` parts, optionally containing `containing`, listed in
/// lexicographically descending order.
pub fn enumerate(
    size: u32,
    max_part: u32,
    max_len: u32,
    containing: Option<&Partition>,
) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    let floor = containing.cloned().unwrap_or_default();
    fill(size, max_part, max_len as usize, &floor, &mut current, &mut out);
    out
}

fn fill(
    remaining: u32,
    cap: u32,
    slots: usize,
    floor: &Partition,
    current: &mut Vec<u32>,
    out: &mut Vec<Partition>,
) {
    let i = current.len();
    if remaining == 0 {
        if floor.len() <= i {
            out.push(Partition(current.clone()));
        }
        return;
    }
    if slots == 0 {
        return;
    }
    let lower = floor.part(i).max(1);
    let upper = cap.min(remaining);
    for p in (lower..=upper).rev() {
        current.push(p);
        fill(remaining - p, p, slots - 1, floor, current, out);
        current.pop();
    }
}

/// All partitions contained in the `rows x cols` rectangle, by increasing size.
pub fn in_rectangle(rows: u32, cols: u32) -> Vec<Partition> {
    (0..=rows * cols)
        .flat_map(|k| enumerate(k, cols, rows, None))
        .collect()
}

/// All partitions `mu` with `mu ⊆ lambda`, by increasing size.
pub fn subpartitions(lambda: &Partition) -> Vec<Partition> {
    in_rectangle(lambda.len() as u32, lambda.first())
        .into_iter()
        .filter(|mu| lambda.contains(mu))
        .collect()
}
