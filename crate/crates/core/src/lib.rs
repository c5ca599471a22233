//! Unrefinable partitions into distinct parts.
//!
//! A partition into distinct parts is *refinable* when one of its parts is the
//! sum of two distinct integers that are not parts, and *unrefinable*
//! otherwise. The crate provides:
//!
//! - [`partition`]: the partition type, missing parts, minimal excludant,
//!   the unrefinability predicate and the canonical partitions `π_n`,
//!   `π_{n,d}` and `π̃_n`;
//! - [`enumeration`]: exhaustive generators used as the reference for every
//!   closed form;
//! - [`maximal`]: classification and direct construction of the unrefinable
//!   partitions of `T_n` with the largest possible maximal part;
//! - [`bijection`]: the map between those partitions (for odd `n`) and the
//!   partitions of `(n+1)/2` into distinct parts.

pub mod bijection;
mod bitset;
pub mod enumeration;
pub mod error;
pub mod maximal;
pub mod partition;

pub use bijection::{
    classify_distinct, count_distinct, recognize_class, recover_n, sigma, sigma_inverse,
    verify_bijection, BijectionReport, DistinctClass, DistinctConvention, SmallMissingList,
};
pub use enumeration::{
    count_unrefinable, count_unrefinable_parallel, enumerate_distinct, enumerate_unrefinable,
    enumerate_unrefinable_with, maximal_unrefinable_bruteforce, unrefinable_iter,
    EnumerationConstraints, SearchWindow,
};
pub use error::{Error, Result};
pub use maximal::{
    bounded_partition_count, class_count, classify_maximal, fg_spec, for_each_maximal,
    generate_maximal, generate_maximal_classified, h_range, min_mex_maximal, removal_signature,
    BoundedCountSpec, ClassFamily, GeneratorOptions, MaximalClass, RemovalSignature,
};
pub use partition::{
    complete_partition, make_partition, max_part_bounds, missing_bound_holds, near_complete,
    pi_tilde, triangular, triangular_context, DistinctPartition, MissingAnalysis,
    RefinementWitness, TriangularContext,
};
