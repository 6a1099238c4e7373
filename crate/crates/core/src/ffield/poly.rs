use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Sub};

use super::field::{Field, FieldElement};
use crate::error::{Error, Result};

/// Dense univariate polynomial over a finite field, lowest degree first.
/// The zero polynomial has no coefficients; otherwise the last coefficient
/// is nonzero.
#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    base: Field,
    coeffs: Vec<FieldElement>,
}

impl Polynomial {
    pub fn from_elements(base: &Field, coeffs: Vec<FieldElement>) -> Result<Self> {
        if coeffs.iter().any(|c| c.field() != base) {
            return Err(Error::FieldMismatch);
        }
        let mut p = Self {
            base: base.clone(),
            coeffs,
        };
        p.normalize();
        Ok(p)
    }

    /// Coefficients given as canonical encodings in `base`.
    pub fn from_u64s(base: &Field, coeffs: &[u64]) -> Result<Self> {
        let coeffs = coeffs
            .iter()
            .map(|&c| base.from_encoding(c))
            .collect::<Result<Vec<_>>>()?;
        Self::from_elements(base, coeffs)
    }

    pub fn zero(base: &Field) -> Self {
        Self {
            base: base.clone(),
            coeffs: Vec::new(),
        }
    }

    pub fn one(base: &Field) -> Self {
        Self::monomial(base.one(), 0)
    }

    pub fn monomial(c: FieldElement, degree: usize) -> Self {
        let base = c.field().clone();
        let mut coeffs = vec![base.zero(); degree];
        coeffs.push(c);
        let mut p = Self { base, coeffs };
        p.normalize();
        p
    }

    /// The monic polynomial of degree `d` whose lower coefficients are the
    /// base-`|F|` digits of `index`.
    pub fn monic_with_index(base: &Field, d: usize, mut index: u64) -> Self {
        let q = base.order();
        let mut coeffs = Vec::with_capacity(d + 1);
        for _ in 0..d {
            coeffs.push(base.decode(index % q));
            index /= q;
        }
        coeffs.push(base.one());
        Self {
            base: base.clone(),
            coeffs,
        }
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn base(&self) -> &Field {
        &self.base
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&FieldElement> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| c.is_one())
    }

    /// Mixed-radix value of the coefficients below the leading one; for
    /// monic polynomials of a fixed degree this is the canonical order.
    pub fn canonical_index(&self) -> u64 {
        let q = self.base.order();
        let n = self.coeffs.len().saturating_sub(1);
        self.coeffs[..n]
            .iter()
            .rev()
            .fold(0u64, |acc, c| acc * q + c.encode())
    }

    pub fn eval(&self, x: &FieldElement) -> FieldElement {
        self.coeffs
            .iter()
            .rev()
            .fold(self.base.zero(), |acc, c| &(&acc * x) + c)
    }

    fn check_base(&self, rhs: &Self) -> Result<()> {
        if self.base == rhs.base {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn try_add(&self, rhs: &Self) -> Result<Self> {
        self.check_base(rhs)?;
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let zero = self.base.zero();
        let coeffs = (0..n)
            .map(|i| {
                self.coeffs.get(i).unwrap_or(&zero) + rhs.coeffs.get(i).unwrap_or(&zero)
            })
            .collect();
        Self::from_elements(&self.base, coeffs)
    }

    pub fn try_sub(&self, rhs: &Self) -> Result<Self> {
        self.check_base(rhs)?;
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let zero = self.base.zero();
        let coeffs = (0..n)
            .map(|i| {
                self.coeffs.get(i).unwrap_or(&zero) - rhs.coeffs.get(i).unwrap_or(&zero)
            })
            .collect();
        Self::from_elements(&self.base, coeffs)
    }

    pub fn try_mul(&self, rhs: &Self) -> Result<Self> {
        self.check_base(rhs)?;
        if self.is_zero() || rhs.is_zero() {
            return Ok(Self::zero(&self.base));
        }
        let mut coeffs = vec![self.base.zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        Self::from_elements(&self.base, coeffs)
    }

    /// Quotient and remainder of Euclidean division.
    pub fn divrem(&self, divisor: &Self) -> Result<(Self, Self)> {
        self.check_base(divisor)?;
        let dd = divisor.degree().ok_or(Error::ZeroPolynomial)?;
        let lead_inv = divisor.coeffs[dd].inv()?;
        let mut rem = self.coeffs.clone();
        let Some(n) = self.degree().filter(|&n| n >= dd) else {
            return Ok((Self::zero(&self.base), self.clone()));
        };
        let mut quot = vec![self.base.zero(); n - dd + 1];
        for i in (dd..=n).rev() {
            if rem[i].is_zero() {
                continue;
            }
            let c = &rem[i] * &lead_inv;
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[i - dd + j] = &rem[i - dd + j] - &(&c * d);
            }
            quot[i - dd] = c;
        }
        rem.truncate(dd);
        Ok((
            Self::from_elements(&self.base, quot)?,
            Self::from_elements(&self.base, rem)?,
        ))
    }

    pub fn rem(&self, divisor: &Self) -> Result<Self> {
        Ok(self.divrem(divisor)?.1)
    }

    /// Irreducibility by trial division against every monic polynomial of
    /// degree at most half of `self`'s. Constants are not irreducible.
    pub fn is_irreducible(&self) -> bool {
        let Some(n) = self.degree() else {
            return false;
        };
        if n == 0 {
            return false;
        }
        for d in 1..=n / 2 {
            let count = super::checked_pow(self.base.order(), d as u64).unwrap_or(u64::MAX);
            for idx in 0..count {
                let g = Self::monic_with_index(&self.base, d, idx);
                if self.rem(&g).expect("nonzero divisor").is_zero() {
                    return false;
                }
            }
        }
        true
    }

    /// Text form `c_0 + c_1*var + c_2*var^2 …` with zero terms omitted and
    /// unit coefficients elided; coefficients are canonical encodings.
    pub fn to_text(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut terms = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mono = match i {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{i}"),
            };
            terms.push(match (i, c.is_one()) {
                (0, _) => c.encode().to_string(),
                (_, true) => mono,
                (_, false) => format!("{}*{mono}", c.encode()),
            });
        }
        terms.join(" + ")
    }
}

impl Hash for Polynomial {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.coeffs.hash(state);
    }
}

impl PartialOrd for Polynomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Degree first, then coefficients from the top down.
impl Ord for Polynomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.iter().rev().cmp(other.coeffs.iter().rev()))
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text("t"))
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self}) over {}", self.base)
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.try_add(rhs).expect("field mismatch")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.try_sub(rhs).expect("field mismatch")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.try_mul(rhs).expect("field mismatch")
    }
}

/// The least monic irreducible polynomial of degree `d` over `base`, in the
/// order of [`Polynomial::canonical_index`].
pub fn least_irreducible(base: &Field, d: usize) -> Result<Polynomial> {
    if d == 0 {
        return Err(Error::InvalidArgument("degree must be at least 1".into()));
    }
    let count = super::checked_pow(base.order(), d as u64).ok_or_else(|| Error::CapExceeded {
        what: "irreducible search".into(),
        size: u64::MAX,
        cap: u64::MAX,
    })?;
    (0..count)
        .map(|idx| Polynomial::monic_with_index(base, d, idx))
        .find(Polynomial::is_irreducible)
        .ok_or_else(|| Error::NotFound(format!("irreducible of degree {d} over {base}")))
}

/// Factors a monic polynomial into monic irreducibles by ascending trial
/// division. Output is sorted by degree, then canonically; the constant
/// polynomial 1 has the empty factorization.
pub fn factor_poly(f: &Polynomial) -> Result<Vec<(Polynomial, usize)>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !f.is_monic() {
        return Err(Error::InvalidArgument("factor_poly expects a monic polynomial".into()));
    }
    let base = f.base();
    let mut rest = f.clone();
    let mut out = Vec::new();
    let mut d = 1;
    while 2 * d <= rest.degree().unwrap() {
        let count = super::checked_pow(base.order(), d as u64).unwrap_or(u64::MAX);
        for idx in 0..count {
            let g = Polynomial::monic_with_index(base, d, idx);
            let mut mult = 0;
            loop {
                let (q, r) = rest.divrem(&g)?;
                if !r.is_zero() {
                    break;
                }
                rest = q;
                mult += 1;
            }
            if mult > 0 {
                out.push((g, mult));
            }
            if 2 * d > rest.degree().unwrap() {
                break;
            }
        }
        d += 1;
    }
    if rest.degree().unwrap() > 0 {
        match out.iter_mut().find(|(g, _)| *g == rest) {
            Some((_, e)) => *e += 1,
            None => out.push((rest, 1)),
        }
    }
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn f(p: u64) -> Field {
        Field::prime(p).unwrap()
    }

    fn poly(p: u64, c: &[u64]) -> Polynomial {
        Polynomial::from_u64s(&f(p), c).unwrap()
    }

    /// x^n - 1 over `base`.
    fn x_n_minus_one(base: &Field, n: usize) -> Polynomial {
        let mut c = vec![base.zero(); n + 1];
        c[0] = -base.one();
        c[n] = base.one();
        Polynomial::from_elements(base, c).unwrap()
    }

    /// Independent irreducibility oracle: no root-free factorization search,
    /// just "no product of two lower-degree monic polynomials equals f".
    fn irreducible_by_products(target: &Polynomial) -> bool {
        let base = target.base();
        let n = target.degree().unwrap();
        for d in 1..n {
            let e = n - d;
            for i in 0..base.order().pow(d as u32) {
                for j in 0..base.order().pow(e as u32) {
                    let a = Polynomial::monic_with_index(base, d, i);
                    let b = Polynomial::monic_with_index(base, e, j);
                    if &a * &b == *target {
                        return false;
                    }
                }
            }
        }
        true
    }

    #[test]
    fn least_irreducible_values() {
        assert_eq!(least_irreducible(&f(2), 2).unwrap(), poly(2, &[1, 1, 1]));
        assert_eq!(least_irreducible(&f(2), 3).unwrap(), poly(2, &[1, 1, 0, 1]));
        assert_eq!(least_irreducible(&f(3), 2).unwrap(), poly(3, &[1, 0, 1]));
        assert!(least_irreducible(&f(2), 0).is_err());
    }

    #[test]
    fn least_irreducible_matches_product_oracle() {
        for (p, d) in [(2u64, 2usize), (2, 3), (2, 4), (3, 2), (3, 3), (5, 2)] {
            let base = f(p);
            let got = least_irreducible(&base, d).unwrap();
            let oracle = (0..p.pow(d as u32))
                .map(|i| Polynomial::monic_with_index(&base, d, i))
                .find(irreducible_by_products)
                .unwrap();
            assert_eq!(got, oracle, "p={p} d={d}");
            assert_eq!(got, least_irreducible(&base, d).unwrap());
        }
    }

    #[test]
    fn factor_examples() {
        let f2 = f(2);
        let got = factor_poly(&x_n_minus_one(&f2, 3)).unwrap();
        assert_eq!(got, vec![(poly(2, &[1, 1]), 1), (poly(2, &[1, 1, 1]), 1)]);
        let product = got.iter().fold(Polynomial::one(&f2), |acc, (g, e)| {
            (0..*e).fold(acc, |a, _| &a * g)
        });
        assert_eq!(product, x_n_minus_one(&f2, 3));

        let f3 = f(3);
        assert_eq!(
            factor_poly(&x_n_minus_one(&f3, 2)).unwrap(),
            vec![(poly(3, &[1, 1]), 1), (poly(3, &[2, 1]), 1)]
        );
        assert_eq!(factor_poly(&x_n_minus_one(&f2, 4)).unwrap(), vec![(poly(2, &[1, 1]), 4)]);
        assert_eq!(factor_poly(&Polynomial::one(&f2)).unwrap(), vec![]);
        assert_eq!(factor_poly(&Polynomial::zero(&f2)).unwrap_err(), Error::ZeroPolynomial);
    }

    #[test]
    fn factors_over_extension_base() {
        let f2 = f(2);
        let f4 = Field::extension(&f2, &least_irreducible(&f2, 2).unwrap()).unwrap();
        // x^3 - 1 splits into linear factors over F_4.
        let got = factor_poly(&x_n_minus_one(&f4, 3)).unwrap();
        assert_eq!(got.len(), 3);
        assert!(got.iter().all(|(g, e)| g.degree() == Some(1) && *e == 1));
    }

    #[test]
    fn text_form() {
        assert_eq!(poly(2, &[1, 1, 0, 1]).to_string(), "1 + t + t^3");
        assert_eq!(poly(3, &[0, 2, 1]).to_text("x"), "2*x + x^2");
        assert_eq!(Polynomial::zero(&f(5)).to_string(), "0");
    }

    proptest! {
        #[test]
        fn factorization_multiplies_back(p in prop::sample::select(vec![2u64, 3, 5]),
                                          tail in prop::collection::vec(0u64..5, 1..8)) {
            let base = f(p);
            let mut c: Vec<u64> = tail.iter().map(|v| v % p).collect();
            c.push(1);
            let target = Polynomial::from_u64s(&base, &c).unwrap();
            let factors = factor_poly(&target).unwrap();
            let mut product = Polynomial::one(&base);
            for (g, e) in &factors {
                prop_assert!(g.is_monic());
                prop_assert!(g.is_irreducible());
                for _ in 0..*e {
                    product = &product * g;
                }
            }
            prop_assert_eq!(product, target);
        }

        #[test]
        fn divrem_identity(a in prop::collection::vec(0u64..3, 0..7),
                           b in prop::collection::vec(0u64..3, 1..5)) {
            let base = f(3);
            let a = Polynomial::from_u64s(&base, &a).unwrap();
            let b = Polynomial::from_u64s(&base, &b).unwrap();
            prop_assume!(!b.is_zero());
            let (q, r) = a.divrem(&b).unwrap();
            prop_assert_eq!(&(&q * &b) + &r, a);
            prop_assert!(r.degree().map_or(true, |d| d < b.degree().unwrap()));
        }
    }
}
