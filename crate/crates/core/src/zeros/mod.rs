//! Exact real-root counts, numeric roots, zero classification and the
//! asymptotic harnesses.

mod asymptotics;
mod bessel;
mod classify;
mod conjecture;
mod complex;
mod exact;
mod roots;

pub use asymptotics::{
    arcsine_distance, arcsine_distance_of, arcsine_record, attraction_record, electrostatic_residual,
    mehler_heine_record, omega_zeros, AttractionReport, AttractionSeries, ConvergenceRecord, Edge,
    ElectrostaticForm, ElectrostaticReport, FunctionalSample, MehlerHeineReport, OmegaZero, Skipped,
};
pub use bessel::{bessel_j, bessel_zero};
pub use classify::{classify_polynomial, classify_zeros, HypothesisChecks, ZeroClassification};
pub use conjecture::{
    anchor_families, conjecture_scan, is_triangular, scan_case, Anchor, ConjectureGrid, ConjectureReport,
    FactorRecord, Hypotheses, ScanCase,
};
pub use complex::{horner_with_derivative, Complex};
pub use exact::{
    count_real_roots, is_square_free, poly_gcd, square_free, sturm_chain, SquareFree,
    STURM_MAX_DEGREE,
};
pub use roots::{
    certified_interval_count, decimal_digits, find_roots, find_roots_adaptive, find_roots_guided,
    fmt_float, Root, RootSet, MAX_PRECISION_BITS,
};
