//! Concrete finite groups: elements, enumeration, conjugacy classes,
//! construction recipes and the torus description of `PGL_2`/`PSL_2`.

mod classes;
mod element;
mod fingerprint;
mod finite;
mod linear;
mod spec;

pub use classes::{ClassInfo, ClassStructure};
pub use element::{cyclic_subgroup, element_order, GroupElement, Matrix2, Permutation, Ring};
pub use fingerprint::Fingerprint;
pub use finite::{ConjugacyClass, FiniteGroup, ORDER_CAP};
pub use linear::{LinearClasses, LinearFamily, LinearModel, TorusClass};
pub use spec::GroupSpec;
pub(crate) use classes::sort_and_label;
