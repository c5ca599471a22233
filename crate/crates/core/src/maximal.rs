//! Maximal unrefinable partitions of triangular numbers.
//!
//! For `n >= 6` an unrefinable partition of `T_n` is maximal exactly when its
//! largest part is `2n - 4`. Such a partition is `π_n` with the parts
//! `a_1 < … < a_h` removed and `α_1 < … < α_j` added. Apart from `π̃_n`, and
//! only for odd `n`, every one of them has `j = h - 2`, replaces each of
//! `a_1, …, a_{h-3}` by `2n - 4 - a_i`, and removes one of four triples from
//! `{n-4, …, n}`. The triple names the family (A, B, C, D) and `h` the class.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::partition::{
    complete_partition, pi_tilde, triangular, triangular_context, DistinctPartition,
};

/// Which triple `(a_{h-2}, a_{h-1}, a_h)` was removed from `{n-4, …, n}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ClassFamily {
    /// `(n-4, n-3, n-2)`
    A,
    /// `(n-4, n-2, n-1)`
    B,
    /// `(n-3, n-2, n)`
    C,
    /// `(n-2, n-1, n)`
    D,
}

impl ClassFamily {
    pub const ALL: [ClassFamily; 4] = [
        ClassFamily::A,
        ClassFamily::B,
        ClassFamily::C,
        ClassFamily::D,
    ];

    pub fn triple(self, n: u64) -> [u64; 3] {
        match self {
            ClassFamily::A => [n - 4, n - 3, n - 2],
            ClassFamily::B => [n - 4, n - 2, n - 1],
            ClassFamily::C => [n - 3, n - 2, n],
            ClassFamily::D => [n - 2, n - 1, n],
        }
    }

    fn from_triple(n: u64, triple: [u64; 3]) -> Option<Self> {
        Self::ALL.into_iter().find(|f| f.triple(n) == triple)
    }

    /// The constant `c` in `h_max = ⌊(1 + √(c + 4n)) / 2⌋`.
    fn radicand_offset(self) -> u64 {
        match self {
            ClassFamily::A => 5,
            ClassFamily::B => 13,
            ClassFamily::C => 21,
            ClassFamily::D => 29,
        }
    }

    /// Least odd `n` with a class of size `h = 5`.
    fn h5_base(self) -> u64 {
        match self {
            ClassFamily::A => 19,
            ClassFamily::B => 17,
            ClassFamily::C => 15,
            ClassFamily::D => 17,
        }
    }

    /// Least odd `n` with a class of size `h = 4`; none for `D`.
    fn h4_threshold(self) -> Option<u64> {
        match self {
            ClassFamily::A | ClassFamily::B => Some(11),
            ClassFamily::C => Some(9),
            ClassFamily::D => None,
        }
    }

    /// The constant `c` in the non-emptiness threshold `n >= h² - h - c` for `h >= 6`.
    fn h6_offset(self) -> i64 {
        match self {
            ClassFamily::A => 1,
            ClassFamily::B => 3,
            ClassFamily::C => 5,
            ClassFamily::D => 7,
        }
    }

    fn letter(self) -> char {
        match self {
            ClassFamily::A => 'A',
            ClassFamily::B => 'B',
            ClassFamily::C => 'C',
            ClassFamily::D => 'D',
        }
    }
}

/// Classification of a maximal unrefinable partition of `T_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum MaximalClass {
    /// `π_n`, the only unrefinable partition of `T_n` for `n <= 5`.
    Complete,
    /// `π̃_n`.
    PiTilde,
    /// A member of the class with the given family and number of removed parts.
    Family { family: ClassFamily, h: usize },
}

impl fmt::Display for MaximalClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MaximalClass::Complete => f.write_str("complete"),
            MaximalClass::PiTilde => f.write_str("pi_tilde"),
            MaximalClass::Family { family, h } => write!(f, "{}{}", family.letter(), h),
        }
    }
}

impl FromStr for MaximalClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "complete" => return Ok(MaximalClass::Complete),
            "pi_tilde" => return Ok(MaximalClass::PiTilde),
            _ => {}
        }
        let bad = || Error::Domain(format!("unknown class tag {s:?}"));
        let mut chars = s.chars();
        let family = match chars.next() {
            Some('A') => ClassFamily::A,
            Some('B') => ClassFamily::B,
            Some('C') => ClassFamily::C,
            Some('D') => ClassFamily::D,
            _ => return Err(bad()),
        };
        let h = chars.as_str().parse::<usize>().map_err(|_| bad())?;
        Ok(MaximalClass::Family { family, h })
    }
}

impl Serialize for MaximalClass {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// A partition of `T_n` described as `π_n` minus `removed` plus `replacements`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RemovalSignature {
    pub n: u64,
    /// `a_1 < … < a_h`, all at most `n`.
    pub removed: Vec<u64>,
    /// `α_1 < … < α_j`, all above `n`.
    pub replacements: Vec<u64>,
}

impl RemovalSignature {
    pub fn h(&self) -> usize {
        self.removed.len()
    }

    pub fn j(&self) -> usize {
        self.replacements.len()
    }
}

/// Splits an unrefinable partition of `T_n` into removed parts and replacements.
pub fn removal_signature(lambda: &DistinctPartition, n: u64) -> Result<RemovalSignature> {
    let total = lambda.sum();
    if total != triangular(n) {
        return Err(Error::NotTriangularSum(total));
    }
    if lambda.largest() == n {
        return Err(Error::IsComplete);
    }
    if let Some(w) = lambda.refinability_witness() {
        return Err(Error::NotUnrefinable(w.smaller, w.larger, w.part));
    }
    Ok(split_against_complete(lambda, n))
}

/// Removal signature of a partition of `T_n`, with no checks.
fn split_against_complete(lambda: &DistinctPartition, n: u64) -> RemovalSignature {
    let parts = lambda.parts();
    let below = parts.partition_point(|&p| p <= n);
    let mut removed = Vec::with_capacity(n as usize - below);
    let mut expected = 1;
    for &p in &parts[..below] {
        removed.extend(expected..p);
        expected = p + 1;
    }
    removed.extend(expected..=n);
    let replacements = parts[below..].to_vec();
    debug_assert_eq!(
        removed.iter().sum::<u64>(),
        replacements.iter().sum::<u64>()
    );
    RemovalSignature {
        n,
        removed,
        replacements,
    }
}

/// Assigns the class of a maximal unrefinable partition of a triangular number.
pub fn classify_maximal(lambda: &DistinctPartition) -> Result<MaximalClass> {
    let ctx = triangular_context(lambda.sum());
    if !ctx.is_triangular() {
        return Err(Error::NotTriangularSum(lambda.sum()));
    }
    if let Some(w) = lambda.refinability_witness() {
        return Err(Error::NotUnrefinable(w.smaller, w.larger, w.part));
    }
    let n = ctx.n;
    if n <= 5 {
        // π_n is the only unrefinable partition of T_n here
        return if lambda.largest() == n {
            Ok(MaximalClass::Complete)
        } else {
            Err(Error::NotMaximal(format!(
                "largest part {} for n = {n}",
                lambda.largest()
            )))
        };
    }
    if lambda.largest() != 2 * n - 4 {
        return Err(Error::NotMaximal(format!(
            "largest part {} differs from 2n-4 = {}",
            lambda.largest(),
            2 * n - 4
        )));
    }
    let sig = split_against_complete(lambda, n);
    let h = sig.h();
    if h == 3 && *lambda == pi_tilde(n)? {
        return Ok(MaximalClass::PiTilde);
    }
    let family = (h >= 4)
        .then(|| {
            ClassFamily::from_triple(
                n,
                [sig.removed[h - 3], sig.removed[h - 2], sig.removed[h - 1]],
            )
        })
        .flatten()
        .filter(|_| sig.j() + 2 == h)
        .ok_or_else(|| {
            Error::NotMaximal(format!("removed parts {:?} match no class", sig.removed))
        })?;
    Ok(MaximalClass::Family { family, h })
}

fn require_odd(n: u64) -> Result<()> {
    if n < 7 || n.is_multiple_of(2) {
        Err(Error::Domain(format!("needs odd n >= 7, got {n}")))
    } else {
        Ok(())
    }
}

/// Range of `h` in which the family can be populated for odd `n >= 7`.
/// The range is empty when `h_max < h_min`.
pub fn h_range(n: u64, family: ClassFamily) -> (usize, usize) {
    let h_min = if family == ClassFamily::D { 5 } else { 4 };
    let h_max = (family.radicand_offset() + 4 * n).isqrt().div_ceil(2);
    (h_min, h_max as usize)
}

/// Required value of `a_1 + … + a_{h-3}`; `None` when it is not an integer.
pub fn small_removed_sum(n: u64, family: ClassFamily, h: usize) -> Option<u64> {
    let [x, y, z] = family.triple(n);
    let twice = (h as u64 - 2) * (2 * n - 4);
    let rest = twice.checked_sub(x + y + z)?;
    (rest % 2 == 0).then_some(rest / 2)
}

/// `a_1` of the class member built by making `a_2, …, a_{h-3}` as large as possible.
pub fn least_first_removed(n: u64, family: ClassFamily, h: usize) -> u64 {
    let n = n as i64;
    let h = h as i64;
    let twice = match (h, family) {
        (4, ClassFamily::C) => n - 3,
        (4, ClassFamily::B) => n - 1,
        (4, ClassFamily::A) => n + 1,
        (5, ClassFamily::D) | (5, ClassFamily::C) => n + 3,
        (5, ClassFamily::B) => n + 5,
        (5, ClassFamily::A) => n + 7,
        (_, ClassFamily::D) => n + h * h - 3 * h - 9,
        (_, ClassFamily::C) => n + h * h - 3 * h - 7,
        (_, ClassFamily::B) => n + h * h - 3 * h - 5,
        (_, ClassFamily::A) => n + h * h - 3 * h - 3,
    };
    (twice / 2) as u64
}

/// A candidate class member: family, `h` and the removed parts below `n - 4`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MaximalShape {
    pub n: u64,
    pub family: ClassFamily,
    pub small: Vec<u64>,
}

impl MaximalShape {
    pub fn h(&self) -> usize {
        self.small.len() + 3
    }

    pub fn class(&self) -> MaximalClass {
        MaximalClass::Family {
            family: self.family,
            h: self.h(),
        }
    }

    /// `π_n` without the small removed parts and the triple, plus `2n-4-a` for
    /// every small removed part `a`, plus `2n-4`.
    pub fn assemble(&self) -> DistinctPartition {
        let n = self.n;
        let top = 2 * n - 4;
        let triple = self.family.triple(n);
        let mut parts = Vec::with_capacity(n as usize);
        let mut small = self.small.iter().peekable();
        for v in 1..=n {
            if small.peek() == Some(&&v) {
                small.next();
                continue;
            }
            if triple.contains(&v) {
                continue;
            }
            parts.push(v);
        }
        parts.extend(self.small.iter().rev().map(|a| top - a));
        parts.push(top);
        DistinctPartition::from_sorted_unchecked(parts)
    }
}

/// Calls `f` on every strictly increasing tuple of `len` values in `lo..=hi`
/// summing to `sum`, in lexicographic order.
pub fn for_each_fixed_sum_tuple(len: usize, lo: u64, hi: u64, sum: u64, mut f: impl FnMut(&[u64])) {
    fn rec(buf: &mut Vec<u64>, left: usize, lo: u64, hi: u64, sum: u64, f: &mut dyn FnMut(&[u64])) {
        if left == 0 {
            if sum == 0 {
                f(buf);
            }
            return;
        }
        let r = left as u64;
        let tri = r * (r - 1) / 2;
        if hi < lo || hi - lo + 1 < r || r * lo + tri > sum || sum > r * hi - tri {
            return;
        }
        // the other r-1 values sum to at most (r-1)·hi - (r-1)(r-2)/2
        let rest_max = (r - 1) * hi - (r - 1) * (r.saturating_sub(2)) / 2;
        let first_lo = lo.max(sum.saturating_sub(rest_max));
        for x in first_lo..=hi {
            if r * x + tri > sum {
                break;
            }
            buf.push(x);
            rec(buf, left - 1, x + 1, hi, sum - x, f);
            buf.pop();
        }
    }
    let mut buf = Vec::with_capacity(len);
    rec(&mut buf, len, lo, hi, sum, &mut f);
}

/// Lowest value tried for the small removed parts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TupleFloor {
    /// `⌈(n-3)/2⌉`, the minimal excludant bound.
    MexBound,
    /// 1, for checking that the bound loses nothing.
    One,
}

/// Which values of `h` are tried for each family.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HPolicy {
    /// [`h_range`].
    Corollary,
    /// Every `h >= 4` with a feasible tuple sum.
    Exhaustive,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GeneratorOptions {
    pub floor: TupleFloor,
    pub h_policy: HPolicy,
}

impl Default for GeneratorOptions {
    fn default() -> Self {
        GeneratorOptions {
            floor: TupleFloor::MexBound,
            h_policy: HPolicy::Corollary,
        }
    }
}

/// Shapes rejected by the unrefinability filter during one generation run.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct GenerationReport {
    pub members: Vec<(DistinctPartition, MaximalClass)>,
    pub rejections: Vec<MaximalShape>,
}

fn h_values(n: u64, family: ClassFamily, opts: GeneratorOptions, floor: u64) -> Vec<usize> {
    match opts.h_policy {
        HPolicy::Corollary => {
            let (lo, hi) = h_range(n, family);
            (lo..=hi).collect()
        }
        HPolicy::Exhaustive => {
            let mut hs = Vec::new();
            for h in 4.. {
                let len = (h - 3) as u64;
                if n < 5 + floor || len > n - 4 - floor {
                    break;
                }
                let max_sum = len * (n - 5) - len * (len - 1) / 2;
                match small_removed_sum(n, family, h) {
                    // the required sum outgrows the largest tuple sum for good
                    Some(s) if s > max_sum => break,
                    _ => hs.push(h),
                }
            }
            hs
        }
    }
}

/// Calls `visit` on every shape of every class for odd `n >= 7`, with the
/// filter verdict.
fn for_each_shape(
    n: u64,
    opts: GeneratorOptions,
    mut visit: impl FnMut(MaximalShape, DistinctPartition, bool),
) {
    let floor = match opts.floor {
        TupleFloor::MexBound => (n - 2) / 2,
        TupleFloor::One => 1,
    };
    for family in ClassFamily::ALL {
        for h in h_values(n, family, opts, floor) {
            let Some(sum) = small_removed_sum(n, family, h) else {
                continue;
            };
            if n < 5 + floor {
                continue;
            }
            for_each_fixed_sum_tuple(h - 3, floor, n - 5, sum, |small| {
                let shape = MaximalShape {
                    n,
                    family,
                    small: small.to_vec(),
                };
                let lambda = shape.assemble();
                let ok = lambda.is_unrefinable();
                visit(shape, lambda, ok);
            });
        }
    }
}

/// Calls `f` on every maximal unrefinable partition of `T_n` with its class,
/// in generation order.
pub fn for_each_maximal(
    n: u64,
    opts: GeneratorOptions,
    mut f: impl FnMut(DistinctPartition, MaximalClass),
) {
    assert!(n >= 1, "n must be positive");
    if n <= 5 {
        f(
            complete_partition(n).expect("n >= 1"),
            MaximalClass::Complete,
        );
        return;
    }
    f(pi_tilde(n).expect("n >= 6"), MaximalClass::PiTilde);
    if n.is_multiple_of(2) {
        return;
    }
    for_each_shape(n, opts, |shape, lambda, ok| {
        if ok {
            f(lambda, shape.class());
        }
    });
}

/// `MUP(T_n)` with classes and the shapes the filter rejected, members sorted.
pub fn generate_maximal_report(n: u64, opts: GeneratorOptions) -> GenerationReport {
    let mut report = GenerationReport::default();
    if n >= 7 && n % 2 == 1 {
        report
            .members
            .push((pi_tilde(n).expect("n >= 6"), MaximalClass::PiTilde));
        for_each_shape(n, opts, |shape, lambda, ok| {
            if ok {
                report.members.push((lambda, shape.class()));
            } else {
                report.rejections.push(shape);
            }
        });
    } else {
        for_each_maximal(n, opts, |l, c| report.members.push((l, c)));
    }
    report.members.sort_unstable();
    report
}

/// `MUP(T_n)` with the class of each member, sorted by partition.
pub fn generate_maximal_classified(n: u64) -> Vec<(DistinctPartition, MaximalClass)> {
    generate_maximal_report(n, GeneratorOptions::default()).members
}

/// `MUP(T_n)`, built directly from the classification and sorted lexicographically.
pub fn generate_maximal(n: u64) -> Vec<DistinctPartition> {
    generate_maximal_classified(n)
        .into_iter()
        .map(|(l, _)| l)
        .collect()
}

/// Least `n` for which the class with `h >= 6` is non-empty: `h² - h - c`.
pub fn class_threshold(family: ClassFamily, h: usize) -> i64 {
    let h = h as i64;
    h * h - h - family.h6_offset()
}

/// Number of maximal unrefinable partitions of `T_n` in the class `family_h`.
///
/// Closed forms for `h = 4` and `h = 5`; for `h >= 6` zero below the
/// threshold and otherwise an exact count of the filtered shapes.
pub fn class_count(n: u64, family: ClassFamily, h: usize) -> Result<u64> {
    require_odd(n)?;
    match h {
        0..=3 => Err(Error::Domain(format!("classes start at h = 4, got {h}"))),
        4 => Ok(match family.h4_threshold() {
            Some(t) if n >= t => 1,
            _ => 0,
        }),
        5 => {
            let base = family.h5_base();
            Ok(if n < base { 0 } else { (n - base) / 4 + 1 })
        }
        _ => {
            if (n as i64) < class_threshold(family, h) {
                return Ok(0);
            }
            let Some(sum) = small_removed_sum(n, family, h) else {
                return Ok(0);
            };
            let floor = (n - 2) / 2;
            let mut count = 0;
            for_each_fixed_sum_tuple(h - 3, floor, n - 5, sum, |small| {
                let shape = MaximalShape {
                    n,
                    family,
                    small: small.to_vec(),
                };
                if shape.assemble().is_unrefinable() {
                    count += 1;
                }
            });
            Ok(count)
        }
    }
}

/// Least minimal excludant over `MUP(T_n)` for odd `n >= 7`.
pub fn min_mex_maximal(n: u64) -> Result<u64> {
    require_odd(n)?;
    let mut best = u64::MAX;
    for_each_maximal(n, GeneratorOptions::default(), |lambda, _| {
        best = best.min(lambda.mex());
    });
    Ok(best)
}

/// Distinct-part partitions of `total` into exactly `parts` values, each at
/// most `max_part`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BoundedCountSpec {
    pub total: i64,
    pub parts: usize,
    pub max_part: i64,
}

/// `f(n, h)`, `h - 3` and `g(n, h)` for the class `family_h` of `MUP(T_n)`.
pub fn fg_spec(n: u64, h: usize, family: ClassFamily) -> Result<BoundedCountSpec> {
    require_odd(n)?;
    if h < 4 {
        return Err(Error::Domain(format!("classes start at h = 4, got {h}")));
    }
    let (n, hh) = (n as i64, h as i64);
    let cubic = -hh * hh * hh + 6 * hh * hh;
    let (f2, g2) = match family {
        ClassFamily::A => (cubic + (n - 8) * hh - 4 * n + 2, n - hh * hh + 3 * hh - 5),
        ClassFamily::B => (cubic + (n - 6) * hh - 4 * n - 6, n - hh * hh + 3 * hh - 3),
        ClassFamily::C => (cubic + (n - 4) * hh - 4 * n - 14, n - hh * hh + 3 * hh - 1),
        ClassFamily::D => (cubic + (n - 2) * hh - 4 * n - 22, n - hh * hh + 3 * hh + 1),
    };
    debug_assert!(f2 % 2 == 0 && g2 % 2 == 0);
    Ok(BoundedCountSpec {
        total: f2 / 2,
        parts: h - 3,
        max_part: g2 / 2,
    })
}

/// Number of sets of `spec.parts` distinct values in `1..=spec.max_part`
/// summing to `spec.total`; zero for a negative total or bound.
pub fn bounded_partition_count(spec: &BoundedCountSpec) -> u128 {
    if spec.total < 0 || spec.max_part < 0 {
        return 0;
    }
    let total = spec.total as usize;
    let k = spec.parts;
    // ways[j][s]: sets of j values seen so far summing to s
    let mut ways = vec![vec![0u128; total + 1]; k + 1];
    ways[0][0] = 1;
    for v in 1..=(spec.max_part as usize).min(total) {
        for j in (1..=k).rev() {
            for s in (v..=total).rev() {
                let add = ways[j - 1][s - v];
                ways[j][s] += add;
            }
        }
    }
    ways[k][total]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumeration::maximal_unrefinable_bruteforce;

    fn p(v: &[u64]) -> DistinctPartition {
        DistinctPartition::new(v.to_vec()).unwrap()
    }

    fn fam(family: ClassFamily, h: usize) -> MaximalClass {
        MaximalClass::Family { family, h }
    }

    #[test]
    fn signature_examples() {
        let sig = removal_signature(&p(&[1, 2, 4, 5, 8, 11, 14]), 9).unwrap();
        assert_eq!((sig.h(), sig.j()), (4, 2));
        assert_eq!(sig.removed, vec![3, 6, 7, 9]);
        assert_eq!(sig.replacements, vec![11, 14]);

        let sig = removal_signature(&pi_tilde(9).unwrap(), 9).unwrap();
        assert_eq!(sig.removed, vec![7, 8, 9]);
        assert_eq!(sig.replacements, vec![10, 14]);

        assert_eq!(
            removal_signature(&complete_partition(9).unwrap(), 9),
            Err(Error::IsComplete)
        );
        assert_eq!(
            removal_signature(&p(&[1, 2, 3]), 9),
            Err(Error::NotTriangularSum(6))
        );
    }

    #[test]
    fn classify_examples() {
        assert_eq!(
            classify_maximal(&p(&[1, 2, 4, 5, 8, 11, 14])),
            Ok(fam(ClassFamily::C, 4))
        );
        assert_eq!(
            classify_maximal(&p(&[1, 2, 3, 4, 5, 6, 8, 12, 13, 15, 22])),
            Ok(fam(ClassFamily::A, 4))
        );
        assert_eq!(
            classify_maximal(&pi_tilde(27).unwrap()),
            Ok(MaximalClass::PiTilde)
        );
        assert_eq!(
            classify_maximal(&complete_partition(4).unwrap()),
            Ok(MaximalClass::Complete)
        );
        // unrefinable partition of 45 whose largest part is below 14
        assert!(matches!(
            classify_maximal(&p(&[1, 2, 3, 4, 5, 6, 11, 13])),
            Err(Error::NotMaximal(_))
        ));
        assert!(matches!(
            classify_maximal(&p(&[1, 2, 3, 39])),
            Err(Error::NotUnrefinable(..))
        ));
        assert!(matches!(
            classify_maximal(&p(&[1, 3])),
            Err(Error::NotTriangularSum(4))
        ));
    }

    #[test]
    fn class_tags_round_trip() {
        for tag in ["complete", "pi_tilde", "A4", "B5", "D6", "C11"] {
            assert_eq!(tag.parse::<MaximalClass>().unwrap().to_string(), tag);
        }
        assert!("E4".parse::<MaximalClass>().is_err());
        assert!("A".parse::<MaximalClass>().is_err());
        assert_eq!(
            serde_json::to_string(&fam(ClassFamily::D, 6)).unwrap(),
            "\"D6\""
        );
    }

    #[test]
    fn generate_small_cases() {
        assert_eq!(generate_maximal(8), vec![p(&[1, 2, 3, 4, 5, 9, 12])]);
        assert_eq!(
            generate_maximal(9),
            vec![pi_tilde(9).unwrap(), p(&[1, 2, 4, 5, 8, 11, 14])]
        );
        for n in 1..=5 {
            assert_eq!(generate_maximal(n), vec![complete_partition(n).unwrap()]);
        }
        let thirteen = generate_maximal(13);
        assert_eq!(thirteen.len(), 4);
        assert!(thirteen.contains(&pi_tilde(13).unwrap()));
        assert!(thirteen.contains(&p(&[1, 2, 3, 4, 5, 6, 8, 12, 13, 15, 22])));
        assert!(thirteen.contains(&p(&[1, 2, 3, 4, 5, 7, 8, 10, 13, 16, 22])));
        assert!(thirteen.contains(&p(&[1, 2, 3, 4, 6, 7, 8, 9, 12, 17, 22])));
    }

    #[test]
    fn generator_matches_bruteforce() {
        for n in 1..=19 {
            assert_eq!(
                generate_maximal(n),
                maximal_unrefinable_bruteforce(triangular(n)),
                "n={n}"
            );
        }
    }

    #[test]
    fn floor_and_h_range_lose_nothing() {
        let loose = GeneratorOptions {
            floor: TupleFloor::One,
            h_policy: HPolicy::Exhaustive,
        };
        for n in (7..=41).step_by(2) {
            let a = generate_maximal_report(n, GeneratorOptions::default()).members;
            let b = generate_maximal_report(n, loose).members;
            assert_eq!(a, b, "n={n}");
        }
    }

    #[test]
    fn h_range_examples() {
        assert_eq!(h_range(27, ClassFamily::D), (5, 6));
        assert_eq!(h_range(27, ClassFamily::A), (4, 5));
        assert_eq!(h_range(49, ClassFamily::D), (5, 8));
    }

    #[test]
    fn class_count_examples() {
        assert_eq!(class_count(27, ClassFamily::C, 5), Ok(4));
        assert_eq!(class_count(21, ClassFamily::D, 4), Ok(0));
        assert!(class_count(23, ClassFamily::D, 6).unwrap() >= 1);
        assert_eq!(class_count(21, ClassFamily::D, 6), Ok(0));
        assert!(matches!(
            class_count(20, ClassFamily::A, 4),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            class_count(21, ClassFamily::A, 3),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn min_mex_examples() {
        assert_eq!(min_mex_maximal(13), Ok(5));
        assert_eq!(min_mex_maximal(27), Ok(12));
        assert_eq!(min_mex_maximal(9), Ok(3));
        assert!(min_mex_maximal(8).is_err());
    }

    #[test]
    fn fg_examples() {
        let spec = fg_spec(49, 7, ClassFamily::D).unwrap();
        assert_eq!(
            spec,
            BoundedCountSpec {
                total: 31,
                parts: 4,
                max_part: 11
            }
        );
        assert_eq!(bounded_partition_count(&spec), 11);
        let spec = fg_spec(27, 6, ClassFamily::D).unwrap();
        assert_eq!(
            spec,
            BoundedCountSpec {
                total: 10,
                parts: 3,
                max_part: 5
            }
        );
        assert_eq!(bounded_partition_count(&spec), 2);
        assert_eq!(
            bounded_partition_count(&BoundedCountSpec {
                total: 6,
                parts: 3,
                max_part: 3
            }),
            1
        );
        assert_eq!(
            bounded_partition_count(&BoundedCountSpec {
                total: -2,
                parts: 3,
                max_part: 3
            }),
            0
        );
        assert_eq!(
            bounded_partition_count(&BoundedCountSpec {
                total: 0,
                parts: 0,
                max_part: 0
            }),
            1
        );
    }

    #[test]
    fn n49_d7_removed_tuples() {
        // the removed parts (a_1..a_4) of MUP(T_49) ∩ D_7
        let mut got = Vec::new();
        for_each_maximal(49, GeneratorOptions::default(), |lambda, class| {
            if class == fam(ClassFamily::D, 7) {
                let sig = removal_signature(&lambda, 49).unwrap();
                got.push(sig.removed[..4].to_vec());
            }
        });
        got.sort();
        let mut want = vec![
            vec![34, 42, 43, 44],
            vec![35, 41, 43, 44],
            vec![36, 40, 43, 44],
            vec![37, 39, 43, 44],
            vec![36, 41, 42, 44],
            vec![37, 40, 42, 44],
            vec![38, 39, 42, 44],
            vec![38, 40, 41, 44],
            vec![37, 41, 42, 43],
            vec![38, 40, 42, 43],
            vec![39, 40, 41, 43],
        ];
        want.sort();
        assert_eq!(got, want);
    }

    #[test]
    fn fixed_sum_tuples_match_brute_force() {
        for len in 1..=4usize {
            for sum in 0..=40u64 {
                let mut got = Vec::new();
                for_each_fixed_sum_tuple(len, 3, 14, sum, |t| got.push(t.to_vec()));
                let mut want = Vec::new();
                let mut idx: Vec<u64> = (3..3 + len as u64).collect();
                // brute force over all increasing tuples in 3..=14
                fn rec(
                    out: &mut Vec<Vec<u64>>,
                    cur: &mut Vec<u64>,
                    start: u64,
                    len: usize,
                    sum: u64,
                ) {
                    if cur.len() == len {
                        if cur.iter().sum::<u64>() == sum {
                            out.push(cur.clone());
                        }
                        return;
                    }
                    for x in start..=14 {
                        cur.push(x);
                        rec(out, cur, x + 1, len, sum);
                        cur.pop();
                    }
                }
                idx.clear();
                rec(&mut want, &mut idx, 3, len, sum);
                assert_eq!(got, want, "len={len} sum={sum}");
            }
        }
    }
}
