//! Exact computational algebra over small finite fields.
//!
//! The crate builds Galois towers `K ⊆ L` of finite fields, enumerates
//! normal-basis generators and the multiplicative group that preserves them,
//! works with group algebras `FG`, and probes finite-dimensional algebras
//! given by structure constants for hyperplanes that avoid (or swallow) the
//! unit group. Everything is exhaustive and exact; sizes are capped so that
//! every scan stays at desk scale.
//!
//! Module map:
//!
//! * [`ffield`]: prime and extension fields, polynomials, integer factoring.
//! * [`linalg`]: dense matrices and Gaussian elimination over any [`Field`].
//! * [`tower`]: the extension `K ⊆ L`, its Frobenius generator, trace and
//!   trace kernel.
//! * [`normal_lab`]: normal elements, primitive elements, the group of
//!   normal-set multipliers and its character map.
//! * [`group_algebra`]: group tables, group algebras, and the bridge maps
//!   between `KG` and `L`.
//! * [`probe`]: structure-constant algebras, hyperplanes, radicals and the
//!   hyperplane/unit-group verdicts.

pub mod error;
pub mod ffield;
pub mod group_algebra;
pub mod linalg;
pub mod normal_lab;
pub mod probe;
pub mod tower;

pub use error::{Error, Result};
pub use ffield::{
    elem_arith, factor_integer, factor_poly, least_irreducible, ArithOp, Field, FieldElement,
    Polynomial,
};
pub use group_algebra::{GroupAlgebra, GroupAlgebraElement, GroupTable, NormalBridge};
pub use linalg::Matrix;
pub use normal_lab::{CharacterTable, GammaGroup, HomIsoReport, NormalSet, MultiplierConditions};
pub use probe::{Claim, Hyperplane, Status, StructureAlgebra, Verdict, Witness};
pub use tower::{GaloisGroup, TraceData, Tower};

/// Caps for exhaustive scans.
///
/// `max_card` bounds the number of elements any single scan may visit
/// (field elements of `L`, elements of a structure algebra). The hyperplane
/// cap bounds `(|F|^d - 1) / (|F| - 1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub max_card: u64,
    pub max_hyperplanes: u64,
}

impl Limits {
    pub const DEFAULT_MAX_CARD: u64 = 1 << 16;
    pub const DEFAULT_MAX_HYPERPLANES: u64 = 1 << 12;

    pub fn new(max_card: u64, max_hyperplanes: u64) -> Self {
        Self {
            max_card,
            max_hyperplanes,
        }
    }

    pub(crate) fn check_card(&self, what: &str, size: u64) -> Result<()> {
        if size > self.max_card {
            return Err(Error::CapExceeded {
                what: what.to_string(),
                size,
                cap: self.max_card,
            });
        }
        Ok(())
    }
}

impl Default for Limits {
    fn default() -> Self {
        Self::new(Self::DEFAULT_MAX_CARD, Self::DEFAULT_MAX_HYPERPLANES)
    }
}
