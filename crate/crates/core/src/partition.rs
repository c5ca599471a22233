//! Partitions into distinct parts, their missing parts, and the unrefinability
//! predicate.
//!
//! A partition is stored as a strictly increasing list of positive parts. The
//! missing parts of `λ` are the values in `1..=λ_t` that are not parts, and
//! `λ` is unrefinable when no part is the sum of two distinct missing parts.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::bitset::BitSet;
use crate::error::{Error, Result};

/// Strictly increasing list of positive integers.
///
/// Singletons are allowed; [`DistinctPartition::has_two_parts_or_more`] marks
/// the partitions with at least two parts.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<u64>")]
pub struct DistinctPartition {
    parts: Vec<u64>,
}

/// The missing parts of a partition together with its minimal excludant.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MissingAnalysis {
    pub missing: Vec<u64>,
    /// Least missing part, `0` when nothing is missing.
    pub mex: u64,
}

impl MissingAnalysis {
    pub fn m(&self) -> usize {
        self.missing.len()
    }
}

/// Two distinct missing parts whose sum is a part.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RefinementWitness {
    pub smaller: u64,
    pub larger: u64,
    pub part: u64,
}

/// Position of `N` between consecutive triangular numbers: `T_{n-1} < N <= T_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TriangularContext {
    pub n: u64,
    pub triangular: u64,
    /// `T_n - N`; zero exactly when `N` is triangular.
    pub deficit: u64,
}

impl TriangularContext {
    pub fn is_triangular(&self) -> bool {
        self.deficit == 0
    }
}

/// Validates a list of integers as a partition into distinct parts.
///
/// The input may come in any order; the result is sorted ascending.
pub fn make_partition(values: &[i64]) -> Result<DistinctPartition> {
    if values.is_empty() {
        return Err(Error::EmptyPartition);
    }
    if let Some(&v) = values.iter().find(|&&v| v <= 0) {
        return Err(Error::NonPositivePart(v));
    }
    DistinctPartition::new(values.iter().map(|&v| v as u64).collect())
}

impl DistinctPartition {
    /// Sorts `parts` and rejects duplicates, zeros and empty input.
    pub fn new(mut parts: Vec<u64>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::EmptyPartition);
        }
        parts.sort_unstable();
        if parts[0] == 0 {
            return Err(Error::NonPositivePart(0));
        }
        if let Some(w) = parts.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicatePart(w[0]));
        }
        Ok(DistinctPartition { parts })
    }

    /// Caller guarantees `parts` is non-empty, positive and strictly increasing.
    pub(crate) fn from_sorted_unchecked(parts: Vec<u64>) -> Self {
        debug_assert!(!parts.is_empty() && parts[0] > 0);
        debug_assert!(parts.windows(2).all(|w| w[0] < w[1]));
        DistinctPartition { parts }
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    pub fn into_parts(self) -> Vec<u64> {
        self.parts
    }

    /// Number of parts `t`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Largest part `λ_t`.
    pub fn largest(&self) -> u64 {
        *self.parts.last().expect("non-empty")
    }

    pub fn smallest(&self) -> u64 {
        self.parts[0]
    }

    pub fn sum(&self) -> u64 {
        self.parts.iter().sum()
    }

    pub fn contains(&self, v: u64) -> bool {
        self.parts.binary_search(&v).is_ok()
    }

    /// At least two parts.
    pub fn has_two_parts_or_more(&self) -> bool {
        self.parts.len() >= 2
    }

    pub fn analyze_missing(&self) -> MissingAnalysis {
        let mut missing = Vec::with_capacity((self.largest() as usize).saturating_sub(self.len()));
        let mut expected = 1;
        for &p in &self.parts {
            missing.extend(expected..p);
            expected = p + 1;
        }
        let mex = missing.first().copied().unwrap_or(0);
        MissingAnalysis { missing, mex }
    }

    pub fn mex(&self) -> u64 {
        (1..)
            .zip(&self.parts)
            .find(|&(expected, &p)| p != expected)
            .map_or(0, |(expected, _)| expected)
    }

    /// Lexicographically least `(μ_i, μ_j, λ_ℓ)` with `μ_i < μ_j` missing and
    /// `μ_i + μ_j = λ_ℓ`, or `None` when the partition is unrefinable.
    pub fn refinability_witness(&self) -> Option<RefinementWitness> {
        let top = self.largest();
        let mut placed = BitSet::with_max(top);
        for &p in &self.parts {
            placed.insert(p);
        }
        let missing = placed.complement_below(top);
        // μ_i < μ_j and μ_i + μ_j <= top force 2·μ_i < top.
        for small in (1..).take_while(|s| 2 * s < top) {
            if !missing.contains(small) {
                continue;
            }
            if let Some(part) = missing.first_shifted_hit(small, &placed, 2 * small) {
                return Some(RefinementWitness {
                    smaller: small,
                    larger: part - small,
                    part,
                });
            }
        }
        None
    }

    pub fn is_unrefinable(&self) -> bool {
        self.refinability_witness().is_none()
    }

    /// `m <= ⌊λ_t / 2⌋`, the bound every unrefinable partition satisfies.
    pub fn missing_bound_holds(&self) -> bool {
        let m = self.largest() as usize - self.len();
        m as u64 <= self.largest() / 2
    }
}

pub fn missing_bound_holds(lambda: &DistinctPartition) -> bool {
    lambda.missing_bound_holds()
}

impl TryFrom<Vec<i64>> for DistinctPartition {
    type Error = Error;

    fn try_from(values: Vec<i64>) -> Result<Self> {
        make_partition(&values)
    }
}

impl From<DistinctPartition> for Vec<u64> {
    fn from(p: DistinctPartition) -> Self {
        p.parts
    }
}

impl fmt::Display for DistinctPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for DistinctPartition {
    type Err = Error;

    /// Parses the comma-separated text form, e.g. `1,2,4,5,8,11,14`.
    fn from_str(s: &str) -> Result<Self> {
        let values = s
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<i64>()
                    .map_err(|_| Error::Domain(format!("not an integer: {:?}", tok.trim())))
            })
            .collect::<Result<Vec<_>>>()?;
        make_partition(&values)
    }
}

/// `T_n = n(n+1)/2`.
pub const fn triangular(n: u64) -> u64 {
    n * (n + 1) / 2
}

/// Least `n` with `T_n >= N`, and the deficit `T_n - N`.
pub fn triangular_context(total: u64) -> TriangularContext {
    // Float estimate, then exact correction.
    let mut n = (((8.0 * total as f64 + 1.0).sqrt() - 1.0) / 2.0) as u64;
    while triangular(n) < total {
        n += 1;
    }
    while n > 0 && triangular(n - 1) >= total {
        n -= 1;
    }
    TriangularContext {
        n,
        triangular: triangular(n),
        deficit: triangular(n) - total,
    }
}

/// `π_n = (1, 2, …, n)`.
pub fn complete_partition(n: u64) -> Result<DistinctPartition> {
    if n == 0 {
        return Err(Error::Domain("complete partition needs n >= 1".into()));
    }
    Ok(DistinctPartition::from_sorted_unchecked((1..=n).collect()))
}

/// `π_{n,d}`: the complete partition with the part `d` removed.
pub fn near_complete(n: u64, d: u64) -> Result<DistinctPartition> {
    if d == 0 || d >= n {
        return Err(Error::Domain(format!(
            "near-complete partition needs 1 <= d <= n-1, got n={n}, d={d}"
        )));
    }
    Ok(DistinctPartition::from_sorted_unchecked(
        (1..=n).filter(|&v| v != d).collect(),
    ))
}

/// `π̃_n = (1, 2, …, n-3, n+1, 2n-4)`, a partition of `T_n` defined for `n >= 6`.
pub fn pi_tilde(n: u64) -> Result<DistinctPartition> {
    if n < 6 {
        return Err(Error::Domain(format!("pi_tilde needs n >= 6, got {n}")));
    }
    let mut parts: Vec<u64> = (1..=n - 3).collect();
    parts.push(n + 1);
    parts.push(2 * n - 4);
    Ok(DistinctPartition::from_sorted_unchecked(parts))
}

/// Extremes of `λ_t` over the unrefinable partitions of `N` for `N < 21`,
/// found by exhaustive search.
const SMALL_BOUNDS: [(u64, u64); 20] = [
    (1, 1),
    (2, 2),
    (2, 2),
    (3, 3),
    (3, 4),
    (3, 3),
    (4, 4),
    (4, 5),
    (4, 6),
    (4, 4),
    (5, 6),
    (5, 6),
    (5, 7),
    (5, 8),
    (5, 5),
    (6, 8),
    (6, 7),
    (6, 8),
    (6, 9),
    (6, 10),
];

/// Interval containing the largest part of every unrefinable partition of `N`.
///
/// For `N >= 21` this is `[n, 2n-4]` when `N = T_n` and `[n, 2n-2]` otherwise;
/// smaller `N` use exact extremes.
pub fn max_part_bounds(total: u64) -> (u64, u64) {
    assert!(total >= 1, "max_part_bounds needs N >= 1");
    if total < triangular(6) {
        return SMALL_BOUNDS[total as usize - 1];
    }
    let ctx = triangular_context(total);
    if ctx.is_triangular() {
        (ctx.n, 2 * ctx.n - 4)
    } else {
        (ctx.n, 2 * ctx.n - 2)
    }
}
