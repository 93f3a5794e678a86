//! Exact computation with polynomial assignments of torus actions.
//!
//! Starting from combinatorial fixed-point data (isotropy weights plus the
//! one-skeleton grouping), the crate computes the graded ring of polynomial
//! assignments, localization sums over stratum closures, and the criteria
//! that certify which assignments come from equivariant cohomology classes:
//! Goldin-Holm integrality on small components, Tolman canonical classes and
//! moment conditions in the minimal Hamiltonian case, and defect-module
//! diagnostics. All arithmetic is exact over the rationals.

pub mod assignment;
pub mod error;
pub mod fraction;
pub mod functorial;
pub mod io;
pub mod linalg;
pub mod linform;
pub mod localize;
pub mod poly;
pub mod space;
pub mod subtorus;

#[cfg(test)]
pub(crate) mod fixtures;

pub use assignment::{
    assignment_basis, chern_class, collinear_counterexample, delta_class, thom_class, Assignment,
};
pub use error::{CongruenceViolation, Error, Result};
pub use fraction::LinFraction;
pub use functorial::{pullback, EquivariantMap};
pub use linform::LinForm;
pub use localize::{
    canonical_pairing_check, canonical_vanishing_check, chern_integral_check, chern_moment_check,
    component_chern1, decide_cohomological, defect_dimension, eta_library, goldin_holm_check,
    localization_sum, tolman_canonical_classes, tolman_hypothesis, torsion_exponent,
    vanishing_passing_dimension, CanonicalFamily, DecisionReport, EtaSelection, LocalizationReport,
    Verdict,
};
pub use poly::{parse_polynomial, Monomial, Polynomial, Rational};
pub use space::{betti_data, morse_data, BettiData, MorseData, Region, TSpace};
pub use subtorus::Subtorus;

#[cfg(test)]
mod concurrency {
    // every value type is immutable after construction and freely shareable
    fn assert_send_sync<T: Send + Sync>() {}

    #[test]
    fn core_types_are_send_and_sync() {
        assert_send_sync::<crate::Polynomial>();
        assert_send_sync::<crate::LinForm>();
        assert_send_sync::<crate::LinFraction>();
        assert_send_sync::<crate::Subtorus>();
        assert_send_sync::<crate::TSpace>();
        assert_send_sync::<crate::Assignment>();
        assert_send_sync::<crate::MorseData>();
        assert_send_sync::<crate::localize::CanonicalFamily>();
        assert_send_sync::<crate::localize::DecisionReport>();
    }
}
