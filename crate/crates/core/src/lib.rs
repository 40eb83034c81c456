//! Generalized symmetric signatures of two-dimensional cyclic quotient
//! singularities.
//!
//! The pipeline runs from the singularity type `1/n(1, a)` to its invariant
//! monomial staircase, the characters of the syzygy representation, the
//! kernel lattice of the weight map and finally the exact character
//! multiplicities in symmetric powers. The signature itself is `1 / [Z^nu : L]`;
//! the ratio series of partial sums is available to watch it converge.
//!
//! ```
//! use symsig_core::{exact_signature, minimal_generators, syzygy_weights, CyclicType};
//!
//! let t = CyclicType::validate(5, 2).unwrap();
//! assert_eq!(minimal_generators(t).as_pairs(), vec![(5, 0), (3, 1), (1, 2), (0, 5)]);
//! assert_eq!(syzygy_weights(t).weights(), &[2, 2, 1]);
//! assert_eq!(exact_signature(t, 3).unwrap().to_string(), "1/5");
//! ```

pub mod abelian_rep;
pub mod cyclic_singularity;
pub mod error;
pub mod exact_arith;
pub mod lattice_counting;
pub mod oracle;
pub mod signature;
pub mod syzygy_rep;
pub mod verify;

pub use abelian_rep::{
    multiplicity, multiplicity_oracle, subgroup_order, sym_dim, AbelianGroup, Character, DiagonalRepresentation,
    MultiplicityTable,
};
pub use cyclic_singularity::{minimal_generators, CyclicType, MonomialExponent, Staircase};
pub use error::{Error, Result};
pub use exact_arith::{abs_det_of_full_rank_kernel, binomial, snf, IntegerMatrix, SnfDecomposition};
pub use lattice_counting::{
    coset_representative, count_coset_points, count_coset_points_geometric, index_of_lattice, is_faithful,
    kernel_lattice, CosetPoint, WeightLattice,
};
pub use signature::{
    convergence_report, default_grid, exact_signature, gap_tolerance, general_signature, ratio_series,
    ConvergenceReport, RatioSeries, SeriesEntry,
};
pub use syzygy_rep::{syzygy_weights, weights_are_faithful, SyzygyRepresentation};
pub use verify::{run_verification, CheckOutcome, VerificationReport};
