//! S-unit groups, local power-residue images and the Frobenius filtration.

mod csp;
mod filtration;
mod hnf;
mod residue;
mod sunit;

pub use csp::{
    csp_witness_search, local_unit_image, local_unit_image_of, verify_injective, CertificateStep, CspCertificate,
    LocalQuotientImage, QUOTIENT_BOUND,
};
pub use filtration::{frobenius_filtration, FiltrationLevel, FiltrationReport};
pub use residue::{is_mth_power_residue, unit_order, ResidueField, DLOG_BOUND};
pub use sunit::{s_unit_decompose, SUnitGroup, SUnitVector};
