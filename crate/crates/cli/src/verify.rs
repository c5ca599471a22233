//! Self-checks run by the `verify` subcommand. Each suite yields one result
//! per item (an `N`, `n` or `k`), carrying a counterexample on failure.

use std::collections::BTreeMap;
use std::result::Result;

use clap::ValueEnum;
use rayon::prelude::*;
use unrefinable::maximal::least_first_removed;
use unrefinable::*;

use crate::range::Span;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    All,
    /// Largest part and missing-part bounds over every unrefinable partition of N.
    Bounds,
    /// Direct construction against exhaustive search for MUP(T_n).
    Oracle,
    /// σ counts, round trips and class correspondence for k.
    Bijection,
    /// Class sizes against the classifier and the closed forms.
    Classes,
    /// Least minimal excludant over MUP(T_n).
    Mex,
    /// Class sizes against bounded distinct-part counts for h >= 6.
    Fg,
    /// Anti-symmetry of maximal partitions about n - 2.
    Antisymmetry,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::All => "all",
            Suite::Bounds => "bounds",
            Suite::Oracle => "oracle",
            Suite::Bijection => "bijection",
            Suite::Classes => "classes",
            Suite::Mex => "mex",
            Suite::Fg => "fg",
            Suite::Antisymmetry => "antisymmetry",
        }
    }

    pub const EACH: [Suite; 7] = [
        Suite::Bounds,
        Suite::Oracle,
        Suite::Bijection,
        Suite::Classes,
        Suite::Mex,
        Suite::Fg,
        Suite::Antisymmetry,
    ];

    pub fn default_span(self) -> Span {
        let (lo, hi) = match self {
            Suite::All => (1, 1),
            Suite::Bounds => (1, 200),
            Suite::Oracle => (1, 25),
            Suite::Bijection => (7, 40),
            Suite::Classes | Suite::Mex | Suite::Antisymmetry => (7, 101),
            Suite::Fg => (13, 101),
        };
        Span { lo, hi }
    }

    /// Which range flag the suite reads.
    pub fn axis(self) -> &'static str {
        match self {
            Suite::Bounds => "N",
            Suite::Bijection => "k",
            _ => "n",
        }
    }
}

pub struct Check {
    pub suite: &'static str,
    pub item: String,
    pub ok: bool,
    pub detail: String,
}

fn check(suite: Suite, item: u64, failure: Option<String>, ok_detail: String) -> Check {
    Check {
        suite: suite.name(),
        item: format!("{}={item}", suite.axis()),
        ok: failure.is_none(),
        detail: failure.unwrap_or(ok_detail),
    }
}

fn odd_from_7(span: Span) -> Vec<u64> {
    span.iter().filter(|n| n % 2 == 1 && *n >= 7).collect()
}

fn bounds(total: u64) -> Check {
    let ctx = triangular_context(total);
    let n = ctx.n;
    let upper = if ctx.is_triangular() {
        (2 * n).saturating_sub(4)
    } else {
        2 * n - 2
    };
    let mut seen = 0u64;
    let mut failure = None;
    for lambda in unrefinable_iter(&EnumerationConstraints::new(total), SearchWindow::Full) {
        seen += 1;
        let top = lambda.largest();
        let complete = ctx.is_triangular() && top == n;
        if top < n || (top > upper && !complete) || !lambda.missing_bound_holds() {
            failure = Some(format!("{lambda} breaks n={n}, upper={upper}"));
            break;
        }
    }
    check(Suite::Bounds, total, failure, format!("{seen} partitions"))
}

fn oracle(n: u64) -> Check {
    let built = generate_maximal(n);
    let brute = maximal_unrefinable_bruteforce(triangular(n));
    let failure = (built != brute).then(|| {
        let extra = built.iter().find(|l| !brute.contains(l));
        let lost = brute.iter().find(|l| !built.contains(l));
        format!("constructed but not found: {extra:?}; found but not constructed: {lost:?}")
    });
    check(
        Suite::Oracle,
        n,
        failure,
        format!("{} partitions", built.len()),
    )
}

fn bijection(k: u64) -> Check {
    let r = verify_bijection(k);
    let detail = format!("#MUP={} #D={}", r.maximal_count, r.distinct_count);
    let failure = (!r.passed()).then(|| r.counterexample.clone().unwrap_or_else(|| detail.clone()));
    let note = if r.counts_expected_equal {
        ""
    } else {
        " (known exception)"
    };
    check(Suite::Bijection, k, failure, format!("{detail}{note}"))
}

fn tally(n: u64) -> Result<BTreeMap<MaximalClass, u64>, String> {
    let mut tally = BTreeMap::new();
    let mut failure = None;
    for_each_maximal(
        n,
        GeneratorOptions::default(),
        |lambda, class| match classify_maximal(&lambda) {
            Ok(c) if c == class => *tally.entry(c).or_default() += 1,
            other => {
                failure.get_or_insert_with(|| {
                    format!("{lambda}: generated as {class}, classified as {other:?}")
                });
            }
        },
    );
    failure.map_or(Ok(tally), Err)
}

fn closed_form_holds(n: u64, family: ClassFamily, h: usize, observed: u64) -> bool {
    match h {
        4 => {
            let threshold = match family {
                ClassFamily::C => Some(9),
                ClassFamily::A | ClassFamily::B => Some(11),
                ClassFamily::D => None,
            };
            observed == u64::from(threshold.is_some_and(|t| n >= t))
        }
        5 => {
            let base = match family {
                ClassFamily::A => 19,
                ClassFamily::B | ClassFamily::D => 17,
                ClassFamily::C => 15,
            };
            observed == if n < base { 0 } else { (n - base) / 4 + 1 }
        }
        _ => (observed > 0) == (n as i64 >= maximal::class_threshold(family, h)),
    }
}

fn classes(n: u64) -> Check {
    let failure = match tally(n) {
        Err(e) => Some(e),
        Ok(mut t) => {
            t.remove(&MaximalClass::PiTilde);
            let mut failure = None;
            'outer: for family in ClassFamily::ALL {
                let (_, h_max) = h_range(n, family);
                for h in 4..=h_max + 1 {
                    let class = MaximalClass::Family { family, h };
                    let observed = t.remove(&class).unwrap_or(0);
                    let counted = class_count(n, family, h).unwrap_or(u64::MAX);
                    if counted != observed || !closed_form_holds(n, family, h, observed) {
                        failure = Some(format!(
                            "{class}: generated {observed}, class_count {counted}"
                        ));
                        break 'outer;
                    }
                }
            }
            failure
                .or_else(|| (!t.is_empty()).then(|| format!("classes outside the h range: {t:?}")))
        }
    };
    check(Suite::Classes, n, failure, "class sizes agree".into())
}

fn mex(n: u64) -> Check {
    let bound = (n - 3) / 2;
    let mut least = u64::MAX;
    let mut failure = None;
    for_each_maximal(n, GeneratorOptions::default(), |lambda, class| {
        let m = lambda.mex();
        least = least.min(m);
        if let MaximalClass::Family { family, h } = class {
            if m < least_first_removed(n, family, h) {
                failure.get_or_insert_with(|| {
                    format!("{lambda} ({class}) has a_1 = {m} below the least a_1")
                });
            }
        }
    });
    let failure = failure.or_else(|| {
        let ok = if n >= 9 {
            least == bound
        } else {
            least >= bound
        };
        (!ok).then(|| format!("least mex {least}, expected (n-3)/2 = {bound}"))
    });
    check(Suite::Mex, n, failure, format!("least mex {least}"))
}

fn fg(n: u64) -> Check {
    let mut failure = None;
    let mut checked = 0;
    for family in ClassFamily::ALL {
        let (_, h_max) = h_range(n, family);
        for h in 6..=h_max {
            checked += 1;
            let formula = fg_spec(n, h, family).map(|s| bounded_partition_count(&s));
            let counted = class_count(n, family, h).map(u128::from);
            if formula != counted {
                failure.get_or_insert_with(|| {
                    format!("{family:?}{h}: formula {formula:?}, generated {counted:?}")
                });
            }
        }
    }
    check(Suite::Fg, n, failure, format!("{checked} classes"))
}

fn antisymmetry(n: u64) -> Check {
    let top = 2 * n - 4;
    let mut failure = None;
    for_each_maximal(n, GeneratorOptions::default(), |lambda, class| {
        if class == MaximalClass::PiTilde || failure.is_some() {
            return;
        }
        let broken = lambda.contains(n - 2)
            || (1..top).any(|a| a != n - 2 && lambda.contains(a) == lambda.contains(top - a));
        if broken {
            failure = Some(format!("{lambda} is not anti-symmetric about {}", n - 2));
        }
    });
    check(Suite::Antisymmetry, n, failure, "anti-symmetric".into())
}

/// Runs one suite over `span` (its default when `None`); results follow the
/// order of the items whatever the thread count.
pub fn run(suite: Suite, span: Option<Span>) -> Vec<Check> {
    if suite == Suite::All {
        return Suite::EACH.into_iter().flat_map(|s| run(s, None)).collect();
    }
    let span = span.unwrap_or(suite.default_span());
    let items: Vec<u64> = match suite {
        Suite::Bounds | Suite::Oracle => span.iter().filter(|&v| v >= 1).collect(),
        Suite::Bijection => span.iter().filter(|&v| v >= 1).collect(),
        Suite::Fg => span.iter().filter(|n| n % 2 == 1 && *n >= 13).collect(),
        _ => odd_from_7(span),
    };
    let f: fn(u64) -> Check = match suite {
        Suite::Bounds => bounds,
        Suite::Oracle => oracle,
        Suite::Bijection => bijection,
        Suite::Classes => classes,
        Suite::Mex => mex,
        Suite::Fg => fg,
        Suite::Antisymmetry => antisymmetry,
        Suite::All => unreachable!(),
    };
    items.into_par_iter().map(f).collect()
}
