//! Exhaustive generation of partitions into distinct parts.
//!
//! [`enumerate_distinct`] walks all distinct-part partitions in lexicographic
//! order and is the naive reference. [`unrefinable_iter`] is the pruned search
//! used for unrefinable partitions: parts are chosen from the largest value
//! downwards, and every skipped value is tested against the values skipped
//! before it. Any refinement `μ_i + μ_j = λ_ℓ` has `λ_ℓ` above both missing
//! parts, so it is detected exactly when the smaller missing part is skipped
//! and no refinable prefix survives.

use rayon::prelude::*;

use crate::bitset::BitSet;
use crate::partition::{max_part_bounds, DistinctPartition};

/// Restrictions on the partitions produced by the generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumerationConstraints {
    pub target_sum: u64,
    pub max_part: Option<u64>,
    pub min_part: Option<u64>,
    pub max_len: Option<usize>,
    pub unrefinable_only: bool,
    /// Drop singletons, keeping only partitions with at least two parts.
    pub min_two_parts: bool,
}

impl EnumerationConstraints {
    pub fn new(target_sum: u64) -> Self {
        EnumerationConstraints {
            target_sum,
            max_part: None,
            min_part: None,
            max_len: None,
            unrefinable_only: false,
            min_two_parts: false,
        }
    }

    pub fn max_part(mut self, v: u64) -> Self {
        self.max_part = Some(v);
        self
    }

    pub fn min_part(mut self, v: u64) -> Self {
        self.min_part = Some(v);
        self
    }

    pub fn max_len(mut self, v: usize) -> Self {
        self.max_len = Some(v);
        self
    }

    pub fn unrefinable(mut self) -> Self {
        self.unrefinable_only = true;
        self
    }

    pub fn at_least_two_parts(mut self) -> Self {
        self.min_two_parts = true;
        self
    }

    fn lo(&self) -> u64 {
        self.min_part.unwrap_or(1).max(1)
    }

    fn hi(&self) -> u64 {
        self.max_part
            .unwrap_or(self.target_sum)
            .min(self.target_sum)
    }

    fn slots(&self) -> usize {
        self.max_len.unwrap_or(usize::MAX)
    }

    fn accepts(&self, parts: &[u64]) -> bool {
        !(self.min_two_parts && parts.len() < 2)
    }
}

/// Sum of the integers in `lo..=hi`, zero for an empty range.
fn range_sum(lo: u64, hi: u64) -> u64 {
    if hi < lo {
        0
    } else {
        (lo + hi) * (hi - lo + 1) / 2
    }
}

/// Whether `s` is a sum of at most `slots` distinct values in `lo..=hi`.
fn completable(s: u64, lo: u64, hi: u64, slots: usize) -> bool {
    if s == 0 {
        return true;
    }
    if hi < lo {
        return false;
    }
    // With k values the reachable sums form the interval
    // [k·lo + k(k-1)/2, k·hi - k(k-1)/2].
    let avail = (hi - lo + 1).min(slots as u64);
    for k in 1..=avail {
        let tri = k * (k - 1) / 2;
        let min = k * lo + tri;
        if min > s {
            return false;
        }
        if s <= k * hi - tri {
            return true;
        }
    }
    false
}

/// Lexicographically ordered stream of distinct-part partitions.
pub struct DistinctIter {
    c: EnumerationConstraints,
    parts: Vec<u64>,
    sum: u64,
    started: bool,
    finished: bool,
}

/// All partitions of `c.target_sum` into distinct parts meeting `c`, in
/// ascending lexicographic order. With `unrefinable_only` set this is the
/// naive filter over every distinct partition.
pub fn enumerate_distinct(c: &EnumerationConstraints) -> DistinctIter {
    DistinctIter {
        c: c.clone(),
        parts: Vec::new(),
        sum: 0,
        started: false,
        finished: c.target_sum == 0,
    }
}

impl DistinctIter {
    /// Smallest `v >= lo` that can be appended with a feasible completion.
    fn smallest_step(&self, lo: u64) -> Option<u64> {
        let rem = self.c.target_sum - self.sum;
        let slots = self.c.slots().checked_sub(self.parts.len() + 1)?;
        let hi = self.c.hi().min(rem);
        (lo..=hi).find(|&v| completable(rem - v, v + 1, self.c.hi(), slots))
    }

    /// Extends the current prefix with its lexicographically least completion.
    fn complete_from(&mut self, mut lo: u64) -> bool {
        while self.sum < self.c.target_sum {
            match self.smallest_step(lo) {
                Some(v) => {
                    self.parts.push(v);
                    self.sum += v;
                    lo = v + 1;
                }
                None => return false,
            }
        }
        true
    }

    fn advance(&mut self) -> bool {
        if !self.started {
            self.started = true;
            return self.complete_from(self.c.lo());
        }
        while let Some(last) = self.parts.pop() {
            self.sum -= last;
            if let Some(v) = self.smallest_step(last + 1) {
                self.parts.push(v);
                self.sum += v;
                let ok = self.complete_from(v + 1);
                debug_assert!(ok, "feasibility check guarantees a completion");
                return ok;
            }
        }
        false
    }
}

impl Iterator for DistinctIter {
    type Item = DistinctPartition;

    fn next(&mut self) -> Option<DistinctPartition> {
        while !self.finished {
            if !self.advance() {
                self.finished = true;
                break;
            }
            if !self.c.accepts(&self.parts) {
                continue;
            }
            let lambda = DistinctPartition::from_sorted_unchecked(self.parts.clone());
            if self.c.unrefinable_only && !lambda.is_unrefinable() {
                continue;
            }
            return Some(lambda);
        }
        None
    }
}

/// Range of largest parts explored by the unrefinable search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchWindow {
    /// Only largest parts inside [`max_part_bounds`].
    Bounds,
    /// Every largest part from 1 to `N`.
    Full,
}

/// Independent piece of the search forest: fixed largest and second-largest part.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Shard {
    pub largest: u64,
    pub second: Option<u64>,
}

fn window(c: &EnumerationConstraints, w: SearchWindow) -> (u64, u64) {
    let (lo, hi) = match w {
        SearchWindow::Bounds => max_part_bounds(c.target_sum),
        SearchWindow::Full => (1, c.target_sum),
    };
    (lo.max(c.lo()), hi.min(c.hi()))
}

fn shards_for_largest(
    c: &EnumerationConstraints,
    largest: u64,
) -> impl Iterator<Item = Shard> + '_ {
    let n = c.target_sum;
    let single = (largest == n && !c.min_two_parts).then_some(Shard {
        largest,
        second: None,
    });
    let top_second = (largest - 1).min(n - largest);
    let (first, last) = if largest < n && c.slots() >= 2 {
        (c.lo(), top_second)
    } else {
        (1, 0)
    };
    let seconds = first..=last;
    single.into_iter().chain(seconds.rev().map(move |s| Shard {
        largest,
        second: Some(s),
    }))
}

/// Shards covering the search for `c` inside `w`, largest part descending.
pub fn shards(c: &EnumerationConstraints, w: SearchWindow) -> Vec<Shard> {
    let (lo, hi) = window(c, w);
    (lo..=hi)
        .rev()
        .flat_map(|largest| shards_for_largest(c, largest).collect::<Vec<_>>())
        .collect()
}

#[derive(Debug, Clone, Copy)]
enum Step {
    Fresh,
    Placed(bool),
    Skipped(bool),
}

#[derive(Debug, Clone, Copy)]
struct Frame {
    value: u64,
    step: Step,
}

/// Depth-first search over one shard with incremental unrefinability checks.
struct ShardSearch {
    lo: u64,
    slots: usize,
    placed: BitSet,
    missing: BitSet,
    descending: Vec<u64>,
    remaining: u64,
    /// `forced[f]` counts pairs `(p, μ)`, `p` placed and `μ` missing, with `p - μ = f`
    /// still undecided; such an `f` must become a part.
    forced: Vec<u32>,
    /// Sum of the distinct undecided forced values.
    pending: u64,
    stack: Vec<Frame>,
}

impl ShardSearch {
    fn new(c: &EnumerationConstraints, shard: Shard) -> Self {
        let top = shard.largest;
        let mut s = ShardSearch {
            lo: c.lo(),
            slots: c.slots(),
            placed: BitSet::with_max(top),
            missing: BitSet::with_max(top),
            descending: Vec::new(),
            remaining: c.target_sum,
            forced: vec![0; top as usize + 1],
            pending: 0,
            stack: Vec::new(),
        };
        s.place(top);
        let frontier = match shard.second {
            None => top - 1,
            Some(second) => {
                for v in (second + 1..top).rev() {
                    if !s.skip_allowed(v) {
                        return s;
                    }
                    s.mark_missing(v);
                }
                s.place(second);
                second - 1
            }
        };
        if s.remaining <= range_sum(s.lo, frontier) && s.pending <= s.remaining {
            s.stack.push(Frame {
                value: frontier,
                step: Step::Fresh,
            });
        }
        s
    }

    fn place(&mut self, v: u64) {
        self.placed.insert(v);
        self.descending.push(v);
        self.remaining -= v;
        if self.forced[v as usize] > 0 {
            self.pending -= v;
        }
    }

    fn unplace(&mut self, v: u64) {
        self.placed.remove(v);
        self.descending.pop();
        self.remaining += v;
        if self.forced[v as usize] > 0 {
            self.pending += v;
        }
    }

    /// Adjusts `forced` for the placed parts `p` in `(v, 2v)`, each of which
    /// forces `p - v` once `v` is missing. Placed parts are stored descending.
    fn update_forced(&mut self, v: u64, add: bool) {
        for &p in self.descending.iter().rev() {
            if p >= 2 * v {
                break;
            }
            if p <= v {
                continue;
            }
            let f = (p - v) as usize;
            if add {
                self.forced[f] += 1;
                if self.forced[f] == 1 {
                    self.pending += f as u64;
                }
            } else {
                self.forced[f] -= 1;
                if self.forced[f] == 0 {
                    self.pending -= f as u64;
                }
            }
        }
    }

    fn mark_missing(&mut self, v: u64) {
        self.missing.insert(v);
        self.update_forced(v, true);
    }

    fn unmark_missing(&mut self, v: u64) {
        self.missing.remove(v);
        self.update_forced(v, false);
    }

    /// Skipping `v` is safe when no larger missing value pairs with it onto a part.
    fn skip_allowed(&self, v: u64) -> bool {
        self.forced[v as usize] == 0
            && self
                .missing
                .first_shifted_hit(v, &self.placed, 2 * v)
                .is_none()
    }

    fn place_allowed(&self, v: u64) -> bool {
        v >= self.lo
            && v <= self.remaining
            && self.descending.len() < self.slots
            && self.remaining - v <= range_sum(self.lo, v - 1)
    }

    fn next_solution(&mut self) -> Option<Vec<u64>> {
        while let Some(top) = self.stack.last().copied() {
            let v = top.value;
            if v == 0 {
                self.stack.pop();
                if self.remaining == 0 {
                    return Some(self.descending.iter().rev().copied().collect());
                }
                continue;
            }
            let idx = self.stack.len() - 1;
            match top.step {
                Step::Fresh => {
                    let ok = self.place_allowed(v);
                    self.stack[idx].step = Step::Placed(ok);
                    if ok {
                        self.place(v);
                        if self.pending <= self.remaining {
                            self.stack.push(Frame {
                                value: v - 1,
                                step: Step::Fresh,
                            });
                        }
                    }
                }
                Step::Placed(applied) => {
                    if applied {
                        self.unplace(v);
                    }
                    let ok = self.remaining <= range_sum(self.lo, v - 1) && self.skip_allowed(v);
                    self.stack[idx].step = Step::Skipped(ok);
                    if ok {
                        self.mark_missing(v);
                        if self.pending <= self.remaining {
                            self.stack.push(Frame {
                                value: v - 1,
                                step: Step::Fresh,
                            });
                        }
                    }
                }
                Step::Skipped(applied) => {
                    if applied {
                        self.unmark_missing(v);
                    }
                    self.stack.pop();
                }
            }
        }
        None
    }
}

impl Iterator for ShardSearch {
    type Item = Vec<u64>;

    fn next(&mut self) -> Option<Vec<u64>> {
        self.next_solution()
    }
}

/// Lazy stream of the unrefinable partitions meeting `c`, shard by shard.
///
/// Items arrive in search order (largest part descending, then by the search
/// tree), not lexicographically; [`enumerate_unrefinable`] sorts.
pub struct UnrefinableIter {
    c: EnumerationConstraints,
    shards: std::vec::IntoIter<Shard>,
    current: Option<ShardSearch>,
}

pub fn unrefinable_iter(c: &EnumerationConstraints, w: SearchWindow) -> UnrefinableIter {
    UnrefinableIter {
        c: c.clone(),
        shards: shards(c, w).into_iter(),
        current: None,
    }
}

impl Iterator for UnrefinableIter {
    type Item = DistinctPartition;

    fn next(&mut self) -> Option<DistinctPartition> {
        loop {
            if let Some(search) = self.current.as_mut() {
                if let Some(parts) = search.next_solution() {
                    return Some(DistinctPartition::from_sorted_unchecked(parts));
                }
            }
            let shard = self.shards.next()?;
            self.current = Some(ShardSearch::new(&self.c, shard));
        }
    }
}

fn search_shards(c: &EnumerationConstraints, shards: &[Shard]) -> Vec<DistinctPartition> {
    let mut out: Vec<DistinctPartition> = shards
        .par_iter()
        .flat_map_iter(|&s| ShardSearch::new(c, s).map(DistinctPartition::from_sorted_unchecked))
        .collect();
    out.sort_unstable();
    out
}

/// Unrefinable partitions meeting `c`, sorted lexicographically.
pub fn enumerate_unrefinable_with(
    c: &EnumerationConstraints,
    w: SearchWindow,
) -> Vec<DistinctPartition> {
    let c = EnumerationConstraints {
        unrefinable_only: true,
        ..c.clone()
    };
    search_shards(&c, &shards(&c, w))
}

/// The set `U_N` of unrefinable partitions of `N`, sorted lexicographically.
pub fn enumerate_unrefinable(total: u64) -> Vec<DistinctPartition> {
    enumerate_unrefinable_with(&EnumerationConstraints::new(total), SearchWindow::Bounds)
}

/// `|U_N|`, counted without materializing the partitions.
pub fn count_unrefinable(total: u64) -> u64 {
    let c = EnumerationConstraints::new(total).unrefinable();
    unrefinable_iter(&c, SearchWindow::Bounds).count() as u64
}

/// Same value as [`count_unrefinable`], with shards spread over the rayon pool.
pub fn count_unrefinable_parallel(total: u64) -> u64 {
    let c = EnumerationConstraints::new(total).unrefinable();
    shards(&c, SearchWindow::Bounds)
        .par_iter()
        .map(|&s| ShardSearch::new(&c, s).count() as u64)
        .sum()
}

/// The unrefinable partitions of `N` whose largest part is as large as possible.
///
/// Largest parts are scanned downward from `N` itself, so the result does not
/// depend on any a-priori bound.
pub fn maximal_unrefinable_bruteforce(total: u64) -> Vec<DistinctPartition> {
    let c = EnumerationConstraints::new(total).unrefinable();
    for largest in (1..=total).rev() {
        let shards: Vec<Shard> = shards_for_largest(&c, largest).collect();
        let found = search_shards(&c, &shards);
        if !found.is_empty() {
            return found;
        }
    }
    Vec::new()
}
