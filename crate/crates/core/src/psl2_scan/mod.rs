//! Hurwitz curves with automorphism group `PSL_2(F_q)`.

mod bound;
mod closed_form;
mod scan;

pub use bound::{bound_chain, BoundCheck};
pub use closed_form::{
    closed_form_hurwitz_character, closed_form_with_check, macbeath_admissible, standard_ramification,
};
pub use scan::{
    bound_check, hurwitz_cube_sum, scan_row, scan_theorem, scan_values, verify_scan, ScanRow, BRUTE_FORCE_LIMIT,
    HURWITZ_SIGNATURE, SCAN_CEILING,
};

use core::fmt::Display;

// Big numbers go out as decimal strings.
fn display<T: Display, S: serde::Serializer>(v: &T, s: S) -> core::result::Result<S::Ok, S::Error> {
    s.collect_str(v)
}

fn display_opt<T: Display, S: serde::Serializer>(v: &Option<T>, s: S) -> core::result::Result<S::Ok, S::Error> {
    match v {
        Some(v) => s.collect_str(v),
        None => s.serialize_none(),
    }
}
