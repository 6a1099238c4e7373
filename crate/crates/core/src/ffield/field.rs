use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use smallvec::{smallvec, SmallVec};

use super::integer::is_prime;
use super::poly::Polynomial;
use crate::error::{Error, Result};

pub(crate) type Coeffs = SmallVec<[u32; 8]>;

/// A finite field: either `F_p`, or `base[x]/(modulus)` for a monic
/// irreducible `modulus` over another finite field.
///
/// Extension fields may sit over an extension (a two-level tower). Elements
/// are always stored flat over the prime subfield: for `L = K[x]/(f)` with
/// `[K : F_p] = k`, coefficient `i·k + j` holds the `t^j` part of the
/// `K`-coordinate of `x^i`. The mixed-radix encoding over `p` therefore
/// agrees with the mixed-radix encoding over `|K|` of the `K`-coordinates.
#[derive(Clone)]
pub struct Field(Arc<Inner>);

struct Inner {
    p: u32,
    base: Option<Field>,
    /// Monic modulus over `base`, flattened: `degree + 1` chunks.
    modulus: Vec<u32>,
    degree: usize,
    prime_degree: usize,
    order: u64,
}

/// `F_p`.
pub fn prime_field(p: u64) -> Result<Field> {
    Field::prime(p)
}

impl Field {
    pub fn prime(p: u64) -> Result<Field> {
        if !is_prime(p) || p > u64::from(u32::MAX) {
            return Err(Error::NotPrime(p));
        }
        Ok(Field(Arc::new(Inner {
            p: p as u32,
            base: None,
            modulus: Vec::new(),
            degree: 1,
            prime_degree: 1,
            order: p,
        })))
    }

    /// `base[x]/(modulus)`. The modulus must be monic and irreducible over
    /// `base`; a degree-one modulus yields a copy of `base` in the extension
    /// representation.
    pub fn extension(base: &Field, modulus: &Polynomial) -> Result<Field> {
        if modulus.base() != base {
            return Err(Error::FieldMismatch);
        }
        let degree = match modulus.degree() {
            Some(d) if d >= 1 => d,
            _ => {
                return Err(Error::InvalidArgument(
                    "extension modulus must have positive degree".into(),
                ))
            }
        };
        if !modulus.is_monic() {
            return Err(Error::InvalidArgument("extension modulus must be monic".into()));
        }
        let order = super::checked_pow(base.order(), degree as u64).ok_or_else(|| {
            Error::CapExceeded {
                what: "field order".into(),
                size: u64::MAX,
                cap: u64::MAX,
            }
        })?;
        if !modulus.is_irreducible() {
            return Err(Error::Reducible(modulus.to_string()));
        }
        let flat = modulus
            .coeffs()
            .iter()
            .flat_map(|c| c.coeffs().iter().copied())
            .collect();
        Ok(Field(Arc::new(Inner {
            p: base.0.p,
            base: Some(base.clone()),
            modulus: flat,
            degree,
            prime_degree: degree * base.degree(),
            order,
        })))
    }

    pub fn characteristic(&self) -> u64 {
        u64::from(self.0.p)
    }

    /// Degree over the prime subfield.
    pub fn degree(&self) -> usize {
        self.0.prime_degree
    }

    /// Degree over the immediate base field (1 for a prime field).
    pub fn degree_over_base(&self) -> usize {
        self.0.degree
    }

    pub fn base(&self) -> Option<&Field> {
        self.0.base.as_ref()
    }

    pub fn order(&self) -> u64 {
        self.0.order
    }

    pub fn is_prime_field(&self) -> bool {
        self.0.base.is_none()
    }

    /// The modulus over the immediate base, `None` for prime fields.
    pub fn modulus(&self) -> Option<Polynomial> {
        let base = self.0.base.as_ref()?;
        let k = base.degree();
        let coeffs = self
            .0
            .modulus
            .chunks(k)
            .map(|c| FieldElement::from_raw(base, c.iter().copied().collect()))
            .collect();
        Some(Polynomial::from_elements(base, coeffs).expect("modulus coefficients lie in base"))
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement::from_raw(self, smallvec![0; self.degree()])
    }

    pub fn one(&self) -> FieldElement {
        let mut c: Coeffs = smallvec![0; self.degree()];
        c[0] = 1;
        FieldElement::from_raw(self, c)
    }

    /// Image of an integer under `Z → F`.
    pub fn from_int(&self, n: i64) -> FieldElement {
        let mut c: Coeffs = smallvec![0; self.degree()];
        c[0] = n.rem_euclid(i64::from(self.0.p)) as u32;
        FieldElement::from_raw(self, c)
    }

    /// Element from prime-subfield coefficients, least-degree-first. Shorter
    /// inputs are zero-padded.
    pub fn element(&self, coeffs: &[u64]) -> Result<FieldElement> {
        if coeffs.len() > self.degree() {
            return Err(Error::InvalidArgument(format!(
                "{} coefficients for a field of degree {}",
                coeffs.len(),
                self.degree()
            )));
        }
        let mut c: Coeffs = smallvec![0; self.degree()];
        for (slot, &v) in c.iter_mut().zip(coeffs) {
            if v >= self.characteristic() {
                return Err(Error::InvalidArgument(format!(
                    "coefficient {v} outside [0, {})",
                    self.characteristic()
                )));
            }
            *slot = v as u32;
        }
        Ok(FieldElement::from_raw(self, c))
    }

    /// Inverse of [`FieldElement::encode`].
    pub fn from_encoding(&self, n: u64) -> Result<FieldElement> {
        if n >= self.order() {
            return Err(Error::InvalidArgument(format!(
                "encoding {n} outside a field of order {}",
                self.order()
            )));
        }
        Ok(self.decode(n))
    }

    pub(crate) fn decode(&self, mut n: u64) -> FieldElement {
        let p = self.characteristic();
        let mut c: Coeffs = smallvec![0; self.degree()];
        for slot in c.iter_mut() {
            *slot = (n % p) as u32;
            n /= p;
        }
        FieldElement::from_raw(self, c)
    }

    /// All elements in ascending canonical encoding.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.order()).map(move |n| self.decode(n))
    }

    /// Nonzero elements in ascending canonical encoding.
    pub fn units(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (1..self.order()).map(move |n| self.decode(n))
    }

    /// Embeds an element of the immediate base field as a constant.
    pub fn lift(&self, x: &FieldElement) -> Result<FieldElement> {
        let base = self.base().ok_or(Error::FieldMismatch)?;
        if x.field() != base {
            return Err(Error::FieldMismatch);
        }
        let mut c: Coeffs = smallvec![0; self.degree()];
        c[..base.degree()].copy_from_slice(x.coeffs());
        Ok(FieldElement::from_raw(self, c))
    }

    /// Coordinates over the immediate base field.
    pub fn base_coords(&self, x: &FieldElement) -> Result<Vec<FieldElement>> {
        let base = self.base().ok_or(Error::FieldMismatch)?;
        if x.field() != self {
            return Err(Error::FieldMismatch);
        }
        Ok(x.coeffs()
            .chunks(base.degree())
            .map(|c| FieldElement::from_raw(base, c.iter().copied().collect()))
            .collect())
    }

    /// Inverse of [`Field::base_coords`].
    pub fn from_base_coords(&self, coords: &[FieldElement]) -> Result<FieldElement> {
        let base = self.base().ok_or(Error::FieldMismatch)?;
        if coords.len() != self.degree_over_base() {
            return Err(Error::InvalidArgument(format!(
                "{} coordinates for degree {}",
                coords.len(),
                self.degree_over_base()
            )));
        }
        let mut c = Coeffs::with_capacity(self.degree());
        for x in coords {
            if x.field() != base {
                return Err(Error::FieldMismatch);
            }
            c.extend_from_slice(x.coeffs());
        }
        Ok(FieldElement::from_raw(self, c))
    }

    fn add_raw(&self, a: &[u32], b: &[u32]) -> Coeffs {
        let p = self.0.p;
        a.iter()
            .zip(b)
            .map(|(&x, &y)| ((u64::from(x) + u64::from(y)) % u64::from(p)) as u32)
            .collect()
    }

    fn sub_raw(&self, a: &[u32], b: &[u32]) -> Coeffs {
        let p = u64::from(self.0.p);
        a.iter()
            .zip(b)
            .map(|(&x, &y)| ((u64::from(x) + p - u64::from(y)) % p) as u32)
            .collect()
    }

    fn neg_raw(&self, a: &[u32]) -> Coeffs {
        let p = self.0.p;
        a.iter().map(|&x| if x == 0 { 0 } else { p - x }).collect()
    }

    fn mul_raw(&self, a: &[u32], b: &[u32]) -> Coeffs {
        match &self.0.base {
            None => smallvec![((u64::from(a[0]) * u64::from(b[0])) % u64::from(self.0.p)) as u32],
            Some(base) if base.is_prime_field() => self.mul_over_prime(a, b),
            Some(base) => self.mul_over_extension(base, a, b),
        }
    }

    fn mul_over_prime(&self, a: &[u32], b: &[u32]) -> Coeffs {
        let m = self.0.degree;
        let p = u64::from(self.0.p);
        let modulus = &self.0.modulus;
        let mut prod: SmallVec<[u64; 16]> = smallvec![0; 2 * m - 1];
        for (i, &ai) in a.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            for (j, &bj) in b.iter().enumerate() {
                prod[i + j] = (prod[i + j] + u64::from(ai) * u64::from(bj)) % p;
            }
        }
        for i in (m..2 * m - 1).rev() {
            let c = prod[i];
            if c == 0 {
                continue;
            }
            let neg = p - c;
            for j in 0..m {
                prod[i - m + j] = (prod[i - m + j] + neg * u64::from(modulus[j])) % p;
            }
        }
        prod[..m].iter().map(|&v| v as u32).collect()
    }

    fn mul_over_extension(&self, base: &Field, a: &[u32], b: &[u32]) -> Coeffs {
        let m = self.0.degree;
        let k = base.degree();
        let mut prod = vec![0u32; (2 * m - 1) * k];
        let nonzero = |c: &[u32]| c.iter().any(|&v| v != 0);
        for (i, ai) in a.chunks(k).enumerate() {
            if !nonzero(ai) {
                continue;
            }
            for (j, bj) in b.chunks(k).enumerate() {
                if !nonzero(bj) {
                    continue;
                }
                let t = base.mul_raw(ai, bj);
                let slot = &mut prod[(i + j) * k..(i + j + 1) * k];
                let sum = base.add_raw(slot, &t);
                slot.copy_from_slice(&sum);
            }
        }
        for i in (m..2 * m - 1).rev() {
            let c: Coeffs = prod[i * k..(i + 1) * k].iter().copied().collect();
            if !nonzero(&c) {
                continue;
            }
            for j in 0..m {
                let t = base.mul_raw(&c, &self.0.modulus[j * k..(j + 1) * k]);
                let slot = &mut prod[(i - m + j) * k..(i - m + j + 1) * k];
                let diff = base.sub_raw(slot, &t);
                slot.copy_from_slice(&diff);
            }
        }
        prod.truncate(m * k);
        prod.into_iter().collect()
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.p == other.0.p
                && self.0.degree == other.0.degree
                && self.0.modulus == other.0.modulus
                && self.0.base == other.0.base)
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.modulus() {
            None => write!(f, "F_{}", self.order()),
            Some(m) => write!(f, "F_{} = {:?}[x]/({m})", self.order(), self.base().unwrap()),
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.order())
    }
}

/// An element of a [`Field`].
#[derive(Clone)]
pub struct FieldElement {
    field: Field,
    coeffs: Coeffs,
}

impl FieldElement {
    pub(crate) fn from_raw(field: &Field, coeffs: Coeffs) -> Self {
        debug_assert_eq!(coeffs.len(), field.degree());
        Self {
            field: field.clone(),
            coeffs,
        }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    /// Prime-subfield coefficients, least-degree-first.
    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0] == 1 && self.coeffs[1..].iter().all(|&c| c == 0)
    }

    /// Canonical mixed-radix encoding `Σ c_i · p^i`.
    pub fn encode(&self) -> u64 {
        let p = self.field.characteristic();
        self.coeffs
            .iter()
            .rev()
            .fold(0u64, |acc, &c| acc * p + u64::from(c))
    }

    pub fn pow(&self, mut n: u64) -> FieldElement {
        let mut acc = self.field.one();
        let mut sq = self.clone();
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &sq;
            }
            n >>= 1;
            if n > 0 {
                sq = &sq * &sq;
            }
        }
        acc
    }

    pub fn inv(&self) -> Result<FieldElement> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.pow(self.field.order() - 2))
    }

    fn same_field(&self, rhs: &Self) -> Result<()> {
        if self.field == rhs.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn try_add(&self, rhs: &Self) -> Result<Self> {
        self.same_field(rhs)?;
        Ok(Self::from_raw(&self.field, self.field.add_raw(&self.coeffs, &rhs.coeffs)))
    }

    pub fn try_sub(&self, rhs: &Self) -> Result<Self> {
        self.same_field(rhs)?;
        Ok(Self::from_raw(&self.field, self.field.sub_raw(&self.coeffs, &rhs.coeffs)))
    }

    pub fn try_mul(&self, rhs: &Self) -> Result<Self> {
        self.same_field(rhs)?;
        Ok(Self::from_raw(&self.field, self.field.mul_raw(&self.coeffs, &rhs.coeffs)))
    }

    pub fn try_div(&self, rhs: &Self) -> Result<Self> {
        self.same_field(rhs)?;
        self.try_mul(&rhs.inv()?)
    }
}

/// Binary field operations for [`elem_arith`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

pub fn elem_arith(a: &FieldElement, b: &FieldElement, op: ArithOp) -> Result<FieldElement> {
    match op {
        ArithOp::Add => a.try_add(b),
        ArithOp::Sub => a.try_sub(b),
        ArithOp::Mul => a.try_mul(b),
        ArithOp::Div => a.try_div(b),
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl $tr<&FieldElement> for &FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: &FieldElement) -> FieldElement {
                self.$checked(rhs).expect("field mismatch")
            }
        }
        impl $tr<FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: FieldElement) -> FieldElement {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: &FieldElement) -> FieldElement {
                (&self).$method(rhs)
            }
        }
    };
}

binop!(Add, add, try_add);
binop!(Sub, sub, try_sub);
binop!(Mul, mul, try_mul);

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        FieldElement::from_raw(&self.field, self.field.neg_raw(&self.coeffs))
    }
}

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        -&self
    }
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs && self.field == other.field
    }
}

impl Eq for FieldElement {}

impl Hash for FieldElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.coeffs.hash(state);
    }
}

impl PartialOrd for FieldElement {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Ascending canonical encoding. Elements of different fields are ordered
/// by coefficient sequence only.
impl Ord for FieldElement {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.iter().rev().cmp(other.coeffs.iter().rev()))
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}@{}", self.encode(), self.field)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.encode())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ffield::least_irreducible;

    fn ext(p: u64, d: usize) -> Field {
        let base = Field::prime(p).unwrap();
        let f = least_irreducible(&base, d).unwrap();
        Field::extension(&base, &f).unwrap()
    }

    #[test]
    fn prime_field_construction() {
        let f2 = Field::prime(2).unwrap();
        assert_eq!(f2.order(), 2);
        assert_eq!(f2.elements().map(|e| e.encode()).collect::<Vec<_>>(), vec![0, 1]);
        assert_eq!(Field::prime(4).unwrap_err(), Error::NotPrime(4));
        assert_eq!(Field::prime(1).unwrap_err(), Error::NotPrime(1));
        assert_eq!(Field::prime(0).unwrap_err(), Error::NotPrime(0));
        let f7 = Field::prime(7).unwrap();
        assert!((f7.from_int(3) * f7.from_int(5)).is_one());
    }

    #[test]
    fn f4_relations() {
        let f4 = ext(2, 2);
        assert_eq!(f4.order(), 4);
        let w = f4.element(&[0, 1]).unwrap();
        let w2 = w.pow(2);
        assert!((&w * &w2).is_one());
        assert_eq!(w2, &w + &f4.one());
    }

    #[test]
    fn extension_rejects_reducible() {
        let f2 = Field::prime(2).unwrap();
        let t2_plus_1 = Polynomial::from_u64s(&f2, &[1, 0, 1]).unwrap();
        assert!(matches!(Field::extension(&f2, &t2_plus_1), Err(Error::Reducible(_))));
        let f3 = Field::prime(3).unwrap();
        let t2_plus_1 = Polynomial::from_u64s(&f3, &[1, 0, 1]).unwrap();
        assert_eq!(Field::extension(&f3, &t2_plus_1).unwrap().order(), 9);
    }

    #[test]
    fn inverse_errors() {
        let f4 = ext(2, 2);
        assert_eq!(f4.zero().inv().unwrap_err(), Error::DivisionByZero);
        assert_eq!(
            elem_arith(&f4.one(), &f4.zero(), ArithOp::Div).unwrap_err(),
            Error::DivisionByZero
        );
        let f3 = Field::prime(3).unwrap();
        assert_eq!(f4.one().try_add(&f3.one()).unwrap_err(), Error::FieldMismatch);
    }

    #[test]
    fn encoding_roundtrip_and_order() {
        let f9 = ext(3, 2);
        let all: Vec<_> = f9.elements().collect();
        for (n, e) in all.iter().enumerate() {
            assert_eq!(e.encode(), n as u64);
            assert_eq!(&f9.from_encoding(n as u64).unwrap(), e);
        }
        let mut sorted = all.clone();
        sorted.reverse();
        sorted.sort();
        assert_eq!(sorted, all);
        assert!(f9.from_encoding(9).is_err());
    }

    /// Field axioms, exhaustively, for every field of order at most 64
    /// reachable as a one- or two-level extension.
    #[test]
    fn axioms_exhaustive_small_fields() {
        let mut fields = Vec::new();
        for p in [2u64, 3, 5, 7] {
            for d in 1..=6 {
                if p.pow(d as u32) <= 64 {
                    fields.push(if d == 1 { Field::prime(p).unwrap() } else { ext(p, d) });
                }
            }
        }
        // Two-level: F_4 ⊆ F_16, F_4 ⊆ F_64, F_8 ⊆ F_64.
        for (d1, d2) in [(2usize, 2usize), (2, 3), (3, 2)] {
            let k = ext(2, d1);
            let f = least_irreducible(&k, d2).unwrap();
            fields.push(Field::extension(&k, &f).unwrap());
        }
        for f in &fields {
            let els: Vec<_> = f.elements().collect();
            let p = f.characteristic();
            for a in &els {
                if !a.is_zero() {
                    assert!((a * &a.inv().unwrap()).is_one(), "{f:?} {a:?}");
                    assert!(a.pow(f.order() - 1).is_one());
                }
                for b in &els {
                    assert_eq!(a + b, b + a);
                    assert_eq!(a * b, b * a);
                    assert_eq!((a + b).pow(p), a.pow(p) + b.pow(p));
                    assert_eq!(&(a + b) - b, *a);
                    for c in els.iter().step_by(if els.len() > 16 { 7 } else { 1 }) {
                        assert_eq!((a * b) * c, a * &(b * c));
                        assert_eq!((a + b) + c, a + &(b + c));
                        assert_eq!(a * &(b + c), a * b + a * c);
                    }
                }
            }
        }
    }

    #[test]
    fn base_coords_roundtrip() {
        let k = ext(2, 2);
        let f = least_irreducible(&k, 3).unwrap();
        let l = Field::extension(&k, &f).unwrap();
        assert_eq!(l.order(), 64);
        for x in l.elements() {
            let coords = l.base_coords(&x).unwrap();
            assert_eq!(coords.len(), 3);
            assert_eq!(l.from_base_coords(&coords).unwrap(), x);
            let enc = coords.iter().rev().fold(0, |acc, c| acc * 4 + c.encode());
            assert_eq!(enc, x.encode());
        }
        let c = k.element(&[1, 1]).unwrap();
        assert_eq!(l.base_coords(&l.lift(&c).unwrap()).unwrap()[0], c);
    }
}
