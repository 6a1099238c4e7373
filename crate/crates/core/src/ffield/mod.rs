//! Prime fields, extension fields, polynomials over them, and the integer
//! factoring used for multiplicative orders.
//!
//! Elements carry a reference to their parent field. Coefficients are stored
//! least-degree-first over the prime subfield; the canonical integer encoding
//! of an element is the mixed-radix value `Σ c_i · p^i`.

mod field;
mod integer;
mod poly;

pub use field::{elem_arith, prime_field, ArithOp, Field, FieldElement};
pub use integer::{
    euler_phi, factor_integer, factor_integer_capped, gcd, is_prime, DEFAULT_FACTOR_CAP,
};
pub use poly::{factor_poly, least_irreducible, Polynomial};

/// `base^exp`, or `None` on overflow.
pub(crate) fn checked_pow(base: u64, exp: u64) -> Option<u64> {
    let mut acc: u64 = 1;
    for _ in 0..exp {
        acc = acc.checked_mul(base)?;
    }
    Some(acc)
}
