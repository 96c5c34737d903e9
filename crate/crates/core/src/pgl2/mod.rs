//! Character theory of `PGL_2(F_q)`: the explicit table, the transfer to
//! the torus normalizers, and the trilinear-form identity.

mod dihedral;
mod identity;
mod table;
mod trilinear;

pub use dihedral::{transfer, DihedralClass, DihedralGroup, Normalizers, TorusNormalizer, TransferredRep};
pub use identity::{cleared_identity, identity_lhs, verify_identity_polynomial, Poly4};
pub use table::{pgl2_character_value, pgl2_table, GenericKind, GenericRepLabel, Pgl2Irrep, Pgl2Table};
pub use trilinear::{
    corollary_report, is_cubic_cuspidal, is_cubic_principal_series, trilinear_report, verify_trilinear, CorollaryReport, Subgroup,
    TrilinearContext, TrilinearReport, TripleResult,
};
