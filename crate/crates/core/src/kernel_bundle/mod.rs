//! Bundles on projective space presented by sums of line bundles: Chern
//! classes, slope stability, the restriction degree bound for curves, a
//! symbolic vanishing calculus for tensor powers, and the pipeline that
//! turns these into conclusions about the monodromy group.

mod analyze;
mod chern;
mod stability;
mod vanishing;

pub use analyze::{analyze_bundle, BundleReport, Conclusion};
pub use chern::{discriminant, numeric_invariants, total_chern, ChowClass, Form, KernelBundleSpec, NumericInvariants};
pub use stability::{
    bs_stability, langer_bound, langer_restriction_degree, LangerReport, StabilityOutcome, StabilityReport,
};
pub use vanishing::{cohomology_vanishing, Justification, VanishingEntry, VanishingReport};
