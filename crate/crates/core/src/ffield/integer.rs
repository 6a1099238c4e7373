use crate::error::{Error, Result};

pub const DEFAULT_FACTOR_CAP: u64 = 1 << 40;

/// Trial-division factorization under [`DEFAULT_FACTOR_CAP`].
pub fn factor_integer(n: u64) -> Result<Vec<(u64, u32)>> {
    factor_integer_capped(n, DEFAULT_FACTOR_CAP)
}

/// Prime factorization of `n` as ascending `(prime, multiplicity)` pairs.
/// `1` factors as the empty product.
pub fn factor_integer_capped(n: u64, cap: u64) -> Result<Vec<(u64, u32)>> {
    if n == 0 {
        return Err(Error::InvalidArgument("cannot factor 0".into()));
    }
    if n > cap {
        return Err(Error::TooLarge { n, cap });
    }
    let mut rest = n;
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= rest {
        if rest % d == 0 {
            let mut e = 0;
            while rest % d == 0 {
                rest /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if rest > 1 {
        out.push((rest, 1));
    }
    Ok(out)
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn euler_phi(n: u64) -> Result<u64> {
    let mut phi = n;
    for (p, _) in factor_integer(n)? {
        phi = phi / p * (p - 1);
    }
    Ok(phi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn small_factorizations() {
        assert_eq!(factor_integer(15).unwrap(), vec![(3, 1), (5, 1)]);
        assert_eq!(factor_integer(1023).unwrap(), vec![(3, 1), (11, 1), (31, 1)]);
        assert_eq!(factor_integer(1).unwrap(), vec![]);
        assert_eq!(factor_integer(1024).unwrap(), vec![(2, 10)]);
    }

    #[test]
    fn cap_is_an_error() {
        assert_eq!(
            factor_integer_capped(1000, 999),
            Err(Error::TooLarge { n: 1000, cap: 999 })
        );
        assert!(factor_integer((1 << 40) + 1).is_err());
        assert!(factor_integer(0).is_err());
    }

    #[test]
    fn totient() {
        assert_eq!(euler_phi(15).unwrap(), 8);
        assert_eq!(euler_phi(1).unwrap(), 1);
        assert_eq!(euler_phi(1023).unwrap(), 2 * 10 * 30);
    }

    proptest! {
        #[test]
        fn factorization_reconstructs(n in 1u64..2_000_000) {
            let f = factor_integer(n).unwrap();
            let back: u64 = f.iter().map(|&(p, e)| p.pow(e)).product();
            prop_assert_eq!(back, n);
            for (p, _) in f {
                prop_assert!(is_prime(p));
            }
        }
    }
}
