//! Exact computer algebra for the Hopf algebra of symmetric functions in
//! the Schur basis, its deformed character products indexed by a partition,
//! the braid operators built from the generalised Cauchy kernel, and the
//! resulting writhe-counting knot and link invariants.
//!
//! Everything is integer-exact on degree-truncated spaces; every retained
//! grade of a truncated result is exact.

pub mod braid;
pub mod error;
pub mod knot;
pub mod monomial;
pub mod parse;
pub mod partition;
pub mod pideform;
pub mod plethysm;
pub mod report;
pub mod schur;
pub mod series;
pub mod tensor;

pub use braid::{link_stats, BraidWord, LinkStats};
pub use error::{Error, Result};
pub use knot::{
    cap_b, cap_bbar, crossing_action, cup_d, cup_dbar, invariant_closed_form, invariant_direct,
    twist, Chirality, CrossingKind,
};
pub use monomial::{monomial_oracle, plethysm_oracle, MonomialPoly};
pub use partition::{partitions_of, partitions_up_to, Partition};
pub use pideform::{
    braid as braid_operator, check_cocycle, check_yang_baxter, deformed_coproduct, pi_product,
    r_matrix, PiContext,
};
pub use report::CheckReport;
pub use plethysm::{from_powersum, mn_character, plethysm, to_powersum, z_mu, PowerSumFunc};
pub use schur::{
    antipode, cauchy_binet_kernel, cauchy_kernel, check_hopf, coproduct, counit, cut_coproduct,
    cut_pairs, lr_coefficient, outer_product, schur_hall, skew, Coeff, SymFunc,
};
pub use series::{branch_to_group, branch_to_subgroup, series, SeriesKind, TruncatedSeries};
pub use tensor::{Orientation, TensorSF};
