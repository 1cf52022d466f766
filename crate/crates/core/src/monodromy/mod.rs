//! p-adic valuations, Newton polygons, and the decision procedures that
//! constrain monodromy groups: congruence certificates for connectedness,
//! the moment classifier, an almost-simplicity test, and growth rates of
//! finite quotients.

mod certificate;
mod classify;
mod matrix;
mod newton;
mod valuation;

pub use certificate::{
    certificate_threshold, clears_threshold, connectedness_certificate, CertificateResult,
    GeneratorEvidence,
};
pub use classify::{
    almost_simplicity_test, analytic_dimension_estimate, larsen_classify, GrowthEstimate,
    LarsenClass, SimplicityVerdict,
};
pub use matrix::{eigenvalue_deviation_bound, parse_rational, RationalMatrix};
pub use newton::{
    cyclotomic_unit_valuation, newton_polygon_slopes, shifted_cyclotomic, CyclotomicValuation,
};
pub use valuation::{is_prime, is_prime_power, vp, PadicValue};

pub(crate) use certificate::rational_string;
