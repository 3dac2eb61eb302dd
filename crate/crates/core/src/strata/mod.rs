//! Generic pencils `K_a`, orbit-closure inclusion, and membership in the
//! irreducible components `C_a^r` of the set of pencils with normal rank at
//! most r.

mod component;
mod dimension;
mod fmap;
mod hasse;
mod inclusion;

pub use component::{generic_form, generic_pencil, ComponentId};
pub use dimension::{dimension, dimension_report, verify_dimension, DimensionReport};
pub use fmap::ComponentParams;
pub use hasse::hasse_export;
pub use inclusion::{
    closure_includes, closure_includes_structures, component_member, component_member_structure, components_of,
    Condition, InclusionVerdict, Violation,
};
