//! The map σ from `MUP(T_{2k-1})` onto the partitions of `k` into at least
//! two distinct parts, its inverse, and a per-`k` verification report.
//!
//! σ reads off the missing parts `a_1 < … < a_u` of λ that are at most
//! `n - 3` and returns `(n-2-a_u, …, n-2-a_1)`; `π̃_n` goes to `(3, k-3)`.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::enumeration::{enumerate_distinct, EnumerationConstraints};
use crate::error::{Error, Result};
use crate::maximal::{
    classify_maximal, generate_maximal_classified, ClassFamily, MaximalClass, MaximalShape,
};
use crate::partition::{pi_tilde, triangular, DistinctPartition};

/// Missing parts of a maximal partition that are at most `n - 3`, ascending.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct SmallMissingList {
    a: Vec<u64>,
}

impl SmallMissingList {
    pub fn new(mut a: Vec<u64>) -> Result<Self> {
        a.sort_unstable();
        if a.first() == Some(&0) {
            return Err(Error::InvalidMissingSet("entries must be positive".into()));
        }
        if a.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidMissingSet(format!("repeated entry in {a:?}")));
        }
        Ok(SmallMissingList { a })
    }

    /// Missing parts of `lambda` up to `n - 3`.
    pub fn of(lambda: &DistinctPartition, n: u64) -> Self {
        let a = (1..=n.saturating_sub(3))
            .filter(|&v| !lambda.contains(v))
            .collect();
        SmallMissingList { a }
    }

    pub fn values(&self) -> &[u64] {
        &self.a
    }

    pub fn u(&self) -> usize {
        self.a.len()
    }
}

/// The four kinds of partition into at least two distinct parts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DistinctClass {
    /// Smallest parts 1 and 2, at least three parts.
    ABar,
    /// Smallest part 2.
    BBar,
    /// Smallest part 1, second part above 2.
    CBar,
    /// Smallest part at least 3.
    DBar,
}

impl fmt::Display for DistinctClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DistinctClass::ABar => "Abar",
            DistinctClass::BBar => "Bbar",
            DistinctClass::CBar => "Cbar",
            DistinctClass::DBar => "Dbar",
        })
    }
}

impl Serialize for DistinctClass {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Tags a partition with at least two parts. `(1, 2)` fits no class.
pub fn classify_distinct(lambda: &DistinctPartition) -> Result<DistinctClass> {
    let p = lambda.parts();
    if p.len() < 2 {
        return Err(Error::Domain(format!(
            "needs at least two parts, got {lambda}"
        )));
    }
    match (p[0], p[1]) {
        (1, 2) if p.len() >= 3 => Ok(DistinctClass::ABar),
        (1, 2) => Err(Error::Domain("(1,2) belongs to no class".into())),
        (1, _) => Ok(DistinctClass::CBar),
        (2, _) => Ok(DistinctClass::BBar),
        _ => Ok(DistinctClass::DBar),
    }
}

/// Whether single-part partitions are counted.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DistinctConvention {
    /// Every partition into distinct parts.
    AnyLength,
    /// At least two parts.
    AtLeastTwo,
}

/// Number of partitions of `k` into distinct parts under the convention.
pub fn count_distinct(k: u64, convention: DistinctConvention) -> u128 {
    let k = k as usize;
    let mut q = vec![0u128; k + 1];
    q[0] = 1;
    for part in 1..=k {
        for s in (part..=k).rev() {
            q[s] += q[s - part];
        }
    }
    match convention {
        DistinctConvention::AnyLength => q[k],
        DistinctConvention::AtLeastTwo if k >= 1 => q[k] - 1,
        DistinctConvention::AtLeastTwo => 0,
    }
}

/// The unique `n` whose maximal partitions can have `s` as small missing list:
/// `(2Σa + 1 + 4u) / (2u - 1)`, required to be odd, at least 7 and consistent
/// with one of the class patterns.
pub fn recover_n(s: &SmallMissingList) -> Result<u64> {
    let u = s.u() as u64;
    if u < 2 {
        return Err(Error::InvalidMissingSet(format!(
            "needs at least two entries, got {:?}",
            s.a
        )));
    }
    let num = 2 * s.a.iter().sum::<u64>() + 1 + 4 * u;
    let den = 2 * u - 1;
    if !num.is_multiple_of(den) {
        return Err(Error::InvalidMissingSet(format!(
            "{num}/{den} is not an integer"
        )));
    }
    let n = num / den;
    if n.is_multiple_of(2) || n < 7 {
        return Err(Error::InvalidMissingSet(format!(
            "recovered n = {n} is not odd and at least 7"
        )));
    }
    recognize_class(s, n)?;
    Ok(n)
}

/// Reads the class off the largest one or two entries of `s`.
pub fn recognize_class(s: &SmallMissingList, n: u64) -> Result<MaximalClass> {
    let u = s.u();
    if u < 2 || n < 7 {
        return Err(Error::InvalidMissingSet(format!(
            "no class for {:?} with n = {n}",
            s.a
        )));
    }
    let (last, prev) = (s.a[u - 1], s.a[u - 2]);
    let class = |family, h| Ok(MaximalClass::Family { family, h });
    if last > n - 3 {
        Err(Error::InvalidMissingSet(format!(
            "{last} exceeds n-3 = {}",
            n - 3
        )))
    } else if last < n - 4 {
        class(ClassFamily::D, u + 3)
    } else if last == n - 4 {
        class(ClassFamily::B, u + 2)
    } else if prev == n - 4 {
        class(ClassFamily::A, u + 1)
    } else {
        class(ClassFamily::C, u + 2)
    }
}

fn require_sigma_domain(n: u64) -> Result<u64> {
    if n.is_multiple_of(2) || n < 13 {
        return Err(Error::Domain(format!("σ needs odd n >= 13, got {n}")));
    }
    Ok(n.div_ceil(2))
}

/// σ: a maximal unrefinable partition of `T_n` to a partition of `(n+1)/2`.
pub fn sigma(lambda: &DistinctPartition, n: u64) -> Result<DistinctPartition> {
    let k = require_sigma_domain(n)?;
    if lambda.sum() != triangular(n) {
        return Err(Error::NotMaximal(format!(
            "sum {} differs from T_{n}",
            lambda.sum()
        )));
    }
    match classify_maximal(lambda)? {
        MaximalClass::PiTilde => Ok(DistinctPartition::from_sorted_unchecked(vec![3, k - 3])),
        MaximalClass::Complete => Err(Error::NotMaximal("complete partition".into())),
        MaximalClass::Family { .. } => {
            let s = SmallMissingList::of(lambda, n);
            let image = s.a.iter().rev().map(|a| n - 2 - a).collect();
            Ok(DistinctPartition::from_sorted_unchecked(image))
        }
    }
}

/// The maximal unrefinable partition of `T_{2k-1}` that σ sends to `image`.
pub fn sigma_inverse(image: &DistinctPartition, k: u64) -> Result<DistinctPartition> {
    if k < 7 {
        return Err(Error::NotInDomain(format!(
            "σ is undefined for k = {k} < 7"
        )));
    }
    if image.sum() != k || image.len() < 2 {
        return Err(Error::NotInDomain(format!(
            "{image} is not a partition of {k} into at least two parts"
        )));
    }
    let n = 2 * k - 1;
    if image.parts() == [3, k - 3] {
        return pi_tilde(n);
    }
    let s = SmallMissingList::new(image.parts().iter().rev().map(|p| n - 2 - p).collect())?;
    let class = recognize_class(&s, n)?;
    let MaximalClass::Family { family, .. } = class else {
        unreachable!("recognize_class only returns class families")
    };
    let small = s.a.iter().copied().filter(|&a| a <= n - 5).collect();
    let lambda = MaximalShape { n, family, small }.assemble();
    let fail = |why: String| {
        Err(Error::ReconstructionFailure(format!(
            "{image} -> {lambda}: {why}"
        )))
    };
    if lambda.sum() != triangular(n) {
        return fail(format!("sum {} differs from T_{n}", lambda.sum()));
    }
    if let Some(w) = lambda.refinability_witness() {
        return fail(format!("{}+{}={}", w.smaller, w.larger, w.part));
    }
    if recover_n(&s) != Ok(n) {
        return fail("n is not recovered from the missing parts".into());
    }
    match classify_maximal(&lambda) {
        Ok(c) if c == class => Ok(lambda),
        other => fail(format!("classified as {other:?}, expected {class}")),
    }
}

/// Class and length of σ(λ) predicted from the class of λ.
pub fn image_class(class: MaximalClass) -> Option<(DistinctClass, usize)> {
    match class {
        MaximalClass::PiTilde => Some((DistinctClass::DBar, 2)),
        MaximalClass::Complete => None,
        MaximalClass::Family { family, h } => Some(match family {
            ClassFamily::A => (DistinctClass::ABar, h - 1),
            ClassFamily::B => (DistinctClass::BBar, h - 2),
            ClassFamily::C => (DistinctClass::CBar, h - 2),
            ClassFamily::D => (DistinctClass::DBar, h - 3),
        }),
    }
}

/// `(k, #MUP(T_{2k-1}), #partitions of k into at least two distinct parts)`
/// for `k < 7`, where σ is undefined. Computed by exhaustive search.
pub const SMALL_K_COUNTS: [(u64, u64, u128); 6] = [
    (1, 1, 0),
    (2, 1, 0),
    (3, 1, 1),
    (4, 1, 1),
    (5, 2, 2),
    (6, 4, 3),
];

/// Outcome of checking σ for one `k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BijectionReport {
    pub k: u64,
    pub maximal_count: u64,
    pub distinct_count: u128,
    /// False only where the counts are known to differ (`k` = 1, 2, 6).
    pub counts_expected_equal: bool,
    pub counts_ok: bool,
    pub forward_round_trip_ok: bool,
    pub backward_round_trip_ok: bool,
    pub class_correspondence_ok: bool,
    /// First partition that broke a check, with the reason.
    pub counterexample: Option<String>,
}

impl BijectionReport {
    pub fn passed(&self) -> bool {
        self.counts_ok
            && self.forward_round_trip_ok
            && self.backward_round_trip_ok
            && self.class_correspondence_ok
    }
}

/// Checks counts, both round trips and the class-wise correspondence for `k`.
/// Below `k = 7` only the counts are compared, against [`SMALL_K_COUNTS`].
pub fn verify_bijection(k: u64) -> BijectionReport {
    assert!(k >= 1, "k must be positive");
    let n = 2 * k - 1;
    let maximal = generate_maximal_classified(n);
    let distinct_count = count_distinct(k, DistinctConvention::AtLeastTwo);
    let mut report = BijectionReport {
        k,
        maximal_count: maximal.len() as u64,
        distinct_count,
        counts_expected_equal: true,
        counts_ok: false,
        forward_round_trip_ok: true,
        backward_round_trip_ok: true,
        class_correspondence_ok: true,
        counterexample: None,
    };
    let note = |report: &mut BijectionReport, why: String| {
        report.counterexample.get_or_insert(why);
    };

    if k < 7 {
        let (_, mup, dist) = SMALL_K_COUNTS[(k - 1) as usize];
        report.counts_expected_equal = mup as u128 == dist;
        report.counts_ok = report.maximal_count == mup && distinct_count == dist;
        if !report.counts_ok {
            note(
                &mut report,
                format!(
                    "counts {} / {distinct_count}, table says {mup} / {dist}",
                    maximal.len()
                ),
            );
        }
        return report;
    }

    report.counts_ok = maximal.len() as u128 == distinct_count;
    if !report.counts_ok {
        note(
            &mut report,
            format!("#MUP = {} but #D_k = {distinct_count}", maximal.len()),
        );
    }

    let mut predicted: BTreeMap<(DistinctClass, usize), u64> = BTreeMap::new();
    for (lambda, class) in &maximal {
        let image = match sigma(lambda, n) {
            Ok(img) => img,
            Err(e) => {
                report.forward_round_trip_ok = false;
                note(&mut report, format!("σ({lambda}) failed: {e}"));
                continue;
            }
        };
        if image.sum() != k || image.len() < 2 {
            report.forward_round_trip_ok = false;
            note(
                &mut report,
                format!("σ({lambda}) = {image} is not in D_{k}"),
            );
        }
        if sigma_inverse(&image, k).as_ref() != Ok(lambda) {
            report.forward_round_trip_ok = false;
            note(&mut report, format!("σ⁻¹(σ({lambda})) differs"));
        }
        let expected = image_class(*class);
        let got = classify_distinct(&image).ok().map(|c| (c, image.len()));
        if expected != got {
            report.class_correspondence_ok = false;
            note(
                &mut report,
                format!("{lambda} of class {class} maps to {image} of kind {got:?}"),
            );
        }
        if let Some(key) = expected {
            *predicted.entry(key).or_default() += 1;
        }
    }

    let mut observed: BTreeMap<(DistinctClass, usize), u64> = BTreeMap::new();
    for image in enumerate_distinct(&EnumerationConstraints::new(k).at_least_two_parts()) {
        match classify_distinct(&image) {
            Ok(c) => *observed.entry((c, image.len())).or_default() += 1,
            Err(e) => {
                report.class_correspondence_ok = false;
                note(&mut report, format!("{image}: {e}"));
            }
        }
        let back = sigma_inverse(&image, k).and_then(|l| sigma(&l, n));
        if back.as_ref() != Ok(&image) {
            report.backward_round_trip_ok = false;
            note(&mut report, format!("σ(σ⁻¹({image})) = {back:?}"));
        }
    }
    if predicted != observed {
        report.class_correspondence_ok = false;
        note(
            &mut report,
            format!("class tallies differ: {predicted:?} vs {observed:?}"),
        );
    }
    report
}
