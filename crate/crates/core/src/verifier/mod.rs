//! Mechanical checks of the closure formulas on concrete instances. The
//! left-hand sides are always computed by exhaustive closure search; the
//! right-hand sides are assembled from the formulas.

mod report;
mod suite;
mod theorems;

pub use report::{Instance, Quantities, TheoremId, TheoremReport, Verdict};
pub use suite::{
    default_grid, run_suite, scan_orbit_equivalent_overgroups, ExploreHit, GridSpec, SuiteSummary,
};
pub use theorems::{
    orbit_equivalence_check, subset_orbits, theorem1_rhs, verify_direct_product, verify_theorem1,
    verify_theorem2, verify_theorem3, Theorem1Rhs,
};
