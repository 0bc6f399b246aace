//! Exact symbolic computation of the Chow-ring class of lines on a
//! degree-d hypersurface in projective n-space, the splitting of that
//! class when the hypersurface degenerates into a union of two
//! components, and machine verification of the Chern-class identities
//! and linear-algebra conditions behind the splitting.
//!
//! All arithmetic is exact: arbitrary-precision integer polynomials in
//! the two Chern roots, and exact rationals in the witness checks.
//! With the default `parallel` feature the identity sweeps fan out over
//! rayon; without it they run sequentially with identical results.

pub mod chern;
pub mod chow;
pub mod degeneration;
pub mod output;
pub mod poly;
pub mod sweep;
pub mod witness;

pub use chern::{chern_sym_power, difference_class, segre_f, ChernSeries, DifferenceSeries};
pub use chow::{evaluate_via_pieri, integrate, pieri_multiply, project, ChowElement,
    GrassmannianContext, SpecialClass};
pub use degeneration::{normal_bundle_types, report, sigma_class, total_class,
    DegenerationReport, SplittingType};
pub use poly::{BiPoly, Partition2, SchurExpansion};
pub use witness::{check_phi, check_restriction, witness_report, WitnessProblem, WitnessReport};
