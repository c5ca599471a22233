mod common;

use std::collections::BTreeMap;

use unrefinable::maximal::{generate_maximal_report, least_first_removed, HPolicy, TupleFloor};
use unrefinable::*;

fn part(v: &[u64]) -> DistinctPartition {
    DistinctPartition::new(v.to_vec()).unwrap()
}

#[test]
fn t27_table_with_classes() {
    let got = generate_maximal_classified(27);
    let mut want: Vec<(DistinctPartition, MaximalClass)> = common::T27_TABLE
        .iter()
        .map(|(tag, p)| (part(p), tag.parse().unwrap()))
        .collect();
    want.sort();
    assert_eq!(got, want);
    for (lambda, class) in &got {
        assert_eq!(classify_maximal(lambda).as_ref(), Ok(class));
    }
}

#[test]
fn t13_rows() {
    for (tag, p, _) in common::T13_ROWS {
        assert_eq!(classify_maximal(&part(p)).unwrap().to_string(), tag);
    }
    assert_eq!(generate_maximal(13).len(), 4);
}

#[test]
fn n49_d7_members() {
    let mut got: Vec<[u64; 4]> = generate_maximal_classified(49)
        .into_iter()
        .filter(|(_, c)| {
            *c == MaximalClass::Family {
                family: ClassFamily::D,
                h: 7,
            }
        })
        .map(|(l, _)| {
            let r = removal_signature(&l, 49).unwrap().removed;
            [r[0], r[1], r[2], r[3]]
        })
        .collect();
    got.sort();
    let mut want = common::N49_D7.to_vec();
    want.sort();
    assert_eq!(got, want);
    assert_eq!(class_count(49, ClassFamily::D, 7), Ok(11));
}

#[test]
fn even_and_small_n_match_bruteforce() {
    for n in (2..=24).step_by(2) {
        assert_eq!(
            generate_maximal(n),
            maximal_unrefinable_bruteforce(triangular(n)),
            "n={n}"
        );
    }
    for n in (6..=60).step_by(2) {
        assert_eq!(generate_maximal(n), vec![pi_tilde(n).unwrap()], "n={n}");
    }
}

#[test]
fn anti_symmetry_about_n_minus_2() {
    for n in (7..=61u64).step_by(2) {
        let top = 2 * n - 4;
        for (lambda, class) in generate_maximal_classified(n) {
            if class == MaximalClass::PiTilde {
                continue;
            }
            assert!(!lambda.contains(n - 2), "n={n} {lambda}");
            for a in (1..top).filter(|&a| a != n - 2) {
                assert_ne!(
                    lambda.contains(a),
                    lambda.contains(top - a),
                    "n={n} a={a} {lambda}"
                );
            }
        }
    }
}

#[test]
fn mex_bound_and_least_first_removed() {
    for n in (7..=101u64).step_by(2) {
        let mut least: BTreeMap<MaximalClass, u64> = BTreeMap::new();
        for_each_maximal(n, GeneratorOptions::default(), |lambda, class| {
            let mex = lambda.mex();
            assert!(2 * mex >= n - 3, "n={n} {lambda}");
            let slot = least.entry(class).or_insert(u64::MAX);
            *slot = (*slot).min(mex);
        });
        for (class, a1) in least {
            if let MaximalClass::Family { family, h } = class {
                assert_eq!(a1, least_first_removed(n, family, h), "n={n} {class}");
            }
        }
    }
}

#[test]
fn class_counts_agree_with_classifier() {
    for n in (7..=61u64).step_by(2) {
        let mut tally: BTreeMap<MaximalClass, u64> = BTreeMap::new();
        for lambda in generate_maximal(n) {
            *tally.entry(classify_maximal(&lambda).unwrap()).or_default() += 1;
        }
        assert_eq!(tally.remove(&MaximalClass::PiTilde), Some(1));
        for family in ClassFamily::ALL {
            let (_, h_max) = h_range(n, family);
            for h in 4..=h_max + 2 {
                let class = MaximalClass::Family { family, h };
                let observed = tally.remove(&class).unwrap_or(0);
                assert_eq!(class_count(n, family, h), Ok(observed), "n={n} {class}");
            }
        }
        assert!(
            tally.is_empty(),
            "n={n}: classes outside the h range {tally:?}"
        );
    }
}

#[test]
fn fg_identity_for_h_at_least_6() {
    for n in (13..=61u64).step_by(2) {
        for family in ClassFamily::ALL {
            let (_, h_max) = h_range(n, family);
            for h in 6..=h_max {
                let spec = fg_spec(n, h, family).unwrap();
                assert_eq!(
                    bounded_partition_count(&spec),
                    class_count(n, family, h).unwrap() as u128,
                    "n={n} {family:?}{h}"
                );
            }
        }
    }
}

#[test]
fn filter_never_rejects_for_h_at_least_6() {
    for n in (7..=61u64).step_by(2) {
        let report = generate_maximal_report(n, GeneratorOptions::default());
        for shape in &report.rejections {
            assert!(shape.h() <= 5, "n={n} rejected {shape:?}");
        }
    }
    // D5 with a_2 = n-5 is refinable: a_1 + a_2 equals a replacement
    let rejected = generate_maximal_report(27, GeneratorOptions::default()).rejections;
    assert!(rejected
        .iter()
        .any(|s| s.family == ClassFamily::D && s.small == vec![14, 22]));
}

#[test]
fn loose_generator_agrees_with_default() {
    let loose = GeneratorOptions {
        floor: TupleFloor::One,
        h_policy: HPolicy::Exhaustive,
    };
    for n in [43, 45, 51] {
        assert_eq!(
            generate_maximal_report(n, loose).members,
            generate_maximal_report(n, GeneratorOptions::default()).members,
            "n={n}"
        );
    }
}
