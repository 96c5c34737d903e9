//! Hurwitz characters of branched covers and the `d_3` certificate.

mod certificate;
mod existence;
mod ramification;

pub use certificate::{
    certify, certify_signature, certify_structure, class_assignments, Component, VanishingCertificate, Verdict,
};
pub use existence::{
    existence_check, frobenius_count, search_generating_tuple, ExistenceReport, Generation, SEARCH_NODE_CAP,
};
pub use ramification::{
    check_degree, euler_characteristic_term, genus_from_signature, hurwitz_character, integer_values, RamificationType,
};
