//! Additive representation functions and sets whose representation
//! functions coincide.
//!
//! For a set `A ⊆ ℕ`, `R_A(n)` counts the pairs `a < a'` in `A` with
//! `a + a' = n`. Two distinct sets `C`, `D` *coincide* when `R_C = R_D`. The
//! even and odd parts of a half non-degenerate Hilbert cube always do; this
//! crate computes the objects involved, checks the known structure results
//! exactly, and searches small ranges exhaustively for every coinciding pair.
//!
//! ```
//! use coinciding::{cube_parts, criterion_eq1, first_mismatch, CubeGenerators};
//!
//! let g = CubeGenerators::new(vec![1, 2, 4]).unwrap();
//! let (even, odd) = cube_parts(&g, None).unwrap();
//! assert_eq!(even.as_slice(), &[0, 3, 5, 6]);
//! assert_eq!(odd.as_slice(), &[1, 2, 4, 7]);
//! assert!(criterion_eq1(&even, &odd));
//! assert_eq!(first_mismatch(&even, &odd, 14), None);
//! ```
//!
//! The `book/` directory at the repository root walks through the theory
//! chapter by chapter; its code listings are compiled as doctests of this
//! crate.

pub mod cube;
pub mod error;
pub mod genfun;
pub mod kernel;
pub mod partition;
pub mod poly;
pub mod rep;
pub mod search;
pub mod sets;
pub mod structure;

pub use cube::{
    cube_parts, half_degeneracy_witness, is_half_nondegenerate, product_identities,
    theorem3_verify, truncate_rule, CubeGenerators, GeneratorRule,
};
pub use error::{Error, Result};
pub use genfun::{
    criterion_eq1, divisibility_check, from_set, nathanson_build, unit_root_multiplicity,
    MultiplicityCertificate, NathansonSpec,
};
pub use partition::{
    chenlev_generators, chenlev_sets, conjecture34_scan, verify_partition, PartitionReport,
    PartitionSpec,
};
pub use poly::IntPolynomial;
pub use rep::{
    eventual_coincidence_scan, first_mismatch, rep_function, rep_sumset, RepProfile, RepVariant,
};
pub use search::{
    conjecture2_audit, enumerate_coinciding_pairs, profile_kernel, AuditVerdict, SearchConfig,
    SearchReport,
};
pub use sets::{dilate_naturals, sumset, translate, IntegerSet};
pub use structure::{
    check_conditions, classify_pair, decompose, frontier_diagnostics, solve_coinciding,
    Classification, SolverDiagnostics,
};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/representation-functions.md")]
    mod representation_functions {}
    #[doc = include_str!("../../../book/src/generating-functions.md")]
    mod generating_functions {}
    #[doc = include_str!("../../../book/src/hilbert-cubes.md")]
    mod hilbert_cubes {}
    #[doc = include_str!("../../../book/src/recovering-pairs.md")]
    mod recovering_pairs {}
    #[doc = include_str!("../../../book/src/partitions.md")]
    mod partitions {}
    #[doc = include_str!("../../../book/src/exhaustive-search.md")]
    mod exhaustive_search {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
