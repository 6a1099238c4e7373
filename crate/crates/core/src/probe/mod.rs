//! Finite-dimensional algebras with identity given by structure constants,
//! their hyperplanes, unit groups and radicals, and verdicts on how
//! hyperplanes can sit against the unit group.
//!
//! A typical run builds a [`Survey`] once per algebra and feeds it to the
//! `check_*` functions, or calls [`run_all`].

mod algebra;
mod catalog;
mod checks;
mod hyperplane;

pub use algebra::{
    is_nilpotent_elem, is_unit_elem, jacobson_radical, make_direct_sum, make_field_algebra,
    make_group_algebra_struct, make_matrix_algebra, make_triangular, nilpotent_set, power,
    unit_set, Metadata, StructureAlgebra, Vector, MAX_DIMENSION, RADICAL_BRUTE_FORCE_CAP,
};
pub use catalog::{
    default_catalog, field_of_order, parse_catalog, parse_group, Catalog, CatalogEntry,
    DEFAULT_CATALOG,
};
pub use checks::{
    check_augmentation_ideal_unique, check_declared_structure, check_group_algebra_hyperplanes,
    check_nilpotents_inside, check_simple_unit_avoidance, check_simple_unit_containment,
    check_unit_avoidance, check_unit_containment, cycle_matrix, cycle_matrix_inverse, run_all,
    verify_cycle_inverse, Claim, ExpectedFlags, Status, Verdict, Witness,
};
pub use hyperplane::{
    hyperplane_count, hyperplanes, ideal_violation, is_two_sided_ideal, survey, Hyperplane,
    HyperplaneRecord, Pattern, PatternTally, Survey,
};
