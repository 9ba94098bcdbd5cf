//! Integer-vector labels, partitions and strict partitions.

use std::fmt;
use std::str::FromStr;

use crate::error::Error;

/// Finite tuple of integers labelling a character function. Parts may be
/// negative, zero or out of order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct IntVector(pub Vec<i64>);

impl IntVector {
    pub fn new(parts: Vec<i64>) -> Self {
        IntVector(parts)
    }

    pub fn empty() -> Self {
        IntVector(Vec::new())
    }

    pub fn parts(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> i64 {
        self.0.iter().sum()
    }

    /// `self - m * e_i` (0-based `i`).
    pub fn shifted(&self, i: usize, by: i64) -> IntVector {
        let mut v = self.0.clone();
        v[i] += by;
        IntVector(v)
    }

    /// Append parts at the end.
    pub fn extended(&self, tail: &[i64]) -> IntVector {
        let mut v = self.0.clone();
        v.extend_from_slice(tail);
        IntVector(v)
    }

    /// Remove the components at the given 0-based positions.
    pub fn without(&self, positions: &[usize]) -> IntVector {
        IntVector(
            self.0
                .iter()
                .enumerate()
                .filter(|(i, _)| !positions.contains(i))
                .map(|(_, &x)| x)
                .collect(),
        )
    }

    /// Component-wise multiple, e.g. `2 * mu`.
    pub fn scaled(&self, c: i64) -> IntVector {
        IntVector(self.0.iter().map(|&x| c * x).collect())
    }

    /// Weakly positive: all parts non-negative, at most one zero.
    pub fn is_weakly_positive(&self) -> bool {
        self.0.iter().all(|&x| x >= 0) && self.0.iter().filter(|&&x| x == 0).count() <= 1
    }

    pub fn as_partition(&self) -> Option<Partition> {
        Partition::new(self.0.clone()).ok()
    }

    pub fn as_strict(&self) -> Option<StrictPartition> {
        StrictPartition::new(self.0.clone()).ok()
    }
}

impl From<Vec<i64>> for IntVector {
    fn from(v: Vec<i64>) -> Self {
        IntVector(v)
    }
}

impl From<&[i64]> for IntVector {
    fn from(v: &[i64]) -> Self {
        IntVector(v.to_vec())
    }
}

impl fmt::Debug for IntVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl fmt::Display for IntVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

/// Comma-separated integers; the empty string is the empty vector.
impl FromStr for IntVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let s = s
            .strip_prefix('(')
            .and_then(|x| x.strip_suffix(')'))
            .unwrap_or(s);
        if s.trim().is_empty() {
            return Ok(IntVector::empty());
        }
        s.split(',')
            .map(|p| {
                p.trim()
                    .parse::<i64>()
                    .map_err(|_| Error::Parse(format!("bad integer {p:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>, _>>()
            .map(IntVector)
    }
}

/// Weakly decreasing tuple of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition(Vec<i64>);

impl Partition {
    /// Accepts trailing zeros and drops them; rejects anything else that is
    /// not a partition.
    pub fn new(mut parts: Vec<i64>) -> Result<Self, Error> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.iter().any(|&x| x <= 0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidArgument(format!(
                "{parts:?} is not a partition"
            )));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_strict(&self) -> bool {
        self.0.windows(2).all(|w| w[0] > w[1])
    }

    pub fn to_vector(&self) -> IntVector {
        IntVector(self.0.clone())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// Strictly decreasing tuple of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct StrictPartition(Vec<i64>);

impl StrictPartition {
    pub fn new(mut parts: Vec<i64>) -> Result<Self, Error> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.iter().any(|&x| x <= 0) || parts.windows(2).any(|w| w[0] <= w[1]) {
            return Err(Error::InvalidArgument(format!(
                "{parts:?} is not a strict partition"
            )));
        }
        Ok(StrictPartition(parts))
    }

    pub fn empty() -> Self {
        StrictPartition(Vec::new())
    }

    pub fn parts(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn to_vector(&self) -> IntVector {
        IntVector(self.0.clone())
    }

    pub fn to_partition(&self) -> Partition {
        Partition(self.0.clone())
    }

    /// The doubled partition `2 lambda`.
    pub fn doubled(&self) -> StrictPartition {
        StrictPartition(self.0.iter().map(|x| 2 * x).collect())
    }
}

impl fmt::Debug for StrictPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// All partitions of `n`, in reverse lexicographic order.
pub fn partitions_of(n: i64) -> Vec<Partition> {
    fn go(rest: i64, max: i64, cur: &mut Vec<i64>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            go(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n >= 0 {
        go(n, n, &mut Vec::new(), &mut out);
    }
    out
}

/// All strict partitions of `n`, in reverse lexicographic order.
pub fn strict_partitions_of(n: i64) -> Vec<StrictPartition> {
    fn go(rest: i64, max: i64, cur: &mut Vec<i64>, out: &mut Vec<StrictPartition>) {
        if rest == 0 {
            out.push(StrictPartition(cur.clone()));
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            go(rest - p, p - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n >= 0 {
        go(n, n, &mut Vec::new(), &mut out);
    }
    out
}

/// Strict partitions of every weight `0..=max_weight`.
pub fn strict_partitions_up_to(max_weight: i64) -> Vec<StrictPartition> {
    (0..=max_weight).flat_map(strict_partitions_of).collect()
}

/// Partitions of every weight `0..=max_weight`.
pub fn partitions_up_to(max_weight: i64) -> Vec<Partition> {
    (0..=max_weight).flat_map(partitions_of).collect()
}

/// Every integer vector of length `0..=max_len` with entries in `lo..=hi`.
pub fn int_vectors(max_len: usize, lo: i64, hi: i64) -> Vec<IntVector> {
    let mut out = vec![IntVector::empty()];
    let mut layer = vec![Vec::<i64>::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for v in &layer {
            for x in lo..=hi {
                let mut w = v.clone();
                w.push(x);
                next.push(w);
            }
        }
        out.extend(next.iter().cloned().map(IntVector));
        layer = next;
    }
    out
}
