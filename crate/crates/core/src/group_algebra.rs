//! Group algebras `FG` of finite groups over finite fields, and the bridge
//! between `KG` (with `G = Gal(L/K)`) and `L` given by a normal element.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::ffield::{checked_pow, Field, FieldElement};
use crate::linalg::Matrix;
use crate::normal_lab::{conjugates, is_normal};
use crate::tower::Tower;

/// Multiplication table of a finite group on `0..order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupTable {
    name: String,
    order: usize,
    table: Vec<usize>,
    identity: usize,
    inverses: Vec<usize>,
}

impl GroupTable {
    /// Validates the group axioms: closure, identity, inverses and
    /// associativity on all triples.
    pub fn new(name: impl Into<String>, order: usize, table: Vec<usize>) -> Result<Self> {
        let bad = |msg: String| Err(Error::BadTable(msg));
        if order == 0 {
            return bad("empty group".into());
        }
        if table.len() != order * order {
            return bad(format!("table has {} entries, expected {}", table.len(), order * order));
        }
        if table.iter().any(|&v| v >= order) {
            return bad("entry out of range".into());
        }
        let at = |a: usize, b: usize| table[a * order + b];
        let Some(identity) =
            (0..order).find(|&e| (0..order).all(|g| at(e, g) == g && at(g, e) == g))
        else {
            return bad("no identity".into());
        };
        let mut inverses = Vec::with_capacity(order);
        for g in 0..order {
            match (0..order).find(|&h| at(g, h) == identity && at(h, g) == identity) {
                Some(h) => inverses.push(h),
                None => return bad(format!("element {g} has no inverse")),
            }
        }
        for a in 0..order {
            for b in 0..order {
                for c in 0..order {
                    if at(at(a, b), c) != at(a, at(b, c)) {
                        return bad(format!("({a}*{b})*{c} != {a}*({b}*{c})"));
                    }
                }
            }
        }
        Ok(Self {
            name: name.into(),
            order,
            table,
            identity,
            inverses,
        })
    }

    /// `C_n` with element `i` standing for `g^i`.
    pub fn cyclic(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::BadTable("C_0 is not a group".into()));
        }
        let table = (0..n * n).map(|ij| (ij / n + ij % n) % n).collect();
        Self::new(format!("C{n}"), n, table)
    }

    /// `A × B` with `(i, j)` at index `i·|B| + j`.
    pub fn direct_product(a: &GroupTable, b: &GroupTable) -> Result<Self> {
        let n = a.order * b.order;
        let mut table = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                let (xa, xb) = (x / b.order, x % b.order);
                let (ya, yb) = (y / b.order, y % b.order);
                table.push(a.mul(xa, ya) * b.order + b.mul(xb, yb));
            }
        }
        Self::new(format!("{}x{}", a.name, b.name), n, table)
    }

    /// `S_n` on permutations in lexicographic order, composing right to
    /// left: `(στ)(i) = σ(τ(i))`.
    pub fn symmetric(n: usize) -> Result<Self> {
        if n == 0 || n > 5 {
            return Err(Error::BadTable(format!("S_{n} is outside the supported range 1..=5")));
        }
        let mut perms: Vec<Vec<usize>> = vec![Vec::new()];
        for _ in 0..n {
            perms = perms
                .into_iter()
                .flat_map(|p| {
                    let free: Vec<usize> = (0..n).filter(|v| !p.contains(v)).collect();
                    free.into_iter().map(move |v| {
                        let mut q = p.clone();
                        q.push(v);
                        q
                    })
                })
                .collect();
        }
        let index = |p: &[usize]| perms.iter().position(|q| q == p).unwrap();
        let mut table = Vec::with_capacity(perms.len() * perms.len());
        for s in &perms {
            for t in &perms {
                let st: Vec<usize> = (0..n).map(|i| s[t[i]]).collect();
                table.push(index(&st));
            }
        }
        Self::new(format!("S{n}"), perms.len(), table)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inverses[a]
    }
}

pub fn cyclic_group(m: usize) -> Result<GroupTable> {
    GroupTable::cyclic(m)
}

/// The group algebra `FG`.
#[derive(Clone)]
pub struct GroupAlgebra(Arc<GaInner>);

struct GaInner {
    field: Field,
    table: GroupTable,
}

pub fn group_ring(field: &Field, table: &GroupTable) -> GroupAlgebra {
    GroupAlgebra::new(field, table)
}

impl GroupAlgebra {
    pub fn new(field: &Field, table: &GroupTable) -> Self {
        GroupAlgebra(Arc::new(GaInner {
            field: field.clone(),
            table: table.clone(),
        }))
    }

    pub fn field(&self) -> &Field {
        &self.0.field
    }

    pub fn table(&self) -> &GroupTable {
        &self.0.table
    }

    pub fn dimension(&self) -> usize {
        self.0.table.order
    }

    /// `|FG|`, or `None` if it overflows.
    pub fn cardinality(&self) -> Option<u64> {
        checked_pow(self.0.field.order(), self.dimension() as u64)
    }

    pub fn zero(&self) -> GroupAlgebraElement {
        GroupAlgebraElement {
            parent: self.clone(),
            coeffs: vec![self.0.field.zero(); self.dimension()],
        }
    }

    pub fn one(&self) -> GroupAlgebraElement {
        self.group_element(self.0.table.identity)
    }

    pub fn group_element(&self, g: usize) -> GroupAlgebraElement {
        let mut x = self.zero();
        x.coeffs[g] = self.0.field.one();
        x
    }

    pub fn from_coeffs(&self, coeffs: Vec<FieldElement>) -> Result<GroupAlgebraElement> {
        if coeffs.len() != self.dimension() {
            return Err(Error::InvalidArgument(format!(
                "{} coefficients for a group of order {}",
                coeffs.len(),
                self.dimension()
            )));
        }
        if coeffs.iter().any(|c| c.field() != &self.0.field) {
            return Err(Error::FieldMismatch);
        }
        Ok(GroupAlgebraElement {
            parent: self.clone(),
            coeffs,
        })
    }

    /// Element whose coefficient vector has mixed-radix value `n` in base `|F|`.
    pub fn from_encoding(&self, mut n: u64) -> GroupAlgebraElement {
        let q = self.0.field.order();
        let coeffs = (0..self.dimension())
            .map(|_| {
                let c = self.0.field.decode(n % q);
                n /= q;
                c
            })
            .collect();
        GroupAlgebraElement {
            parent: self.clone(),
            coeffs,
        }
    }

    /// All elements in ascending encoding.
    pub fn elements(&self) -> impl Iterator<Item = GroupAlgebraElement> + '_ {
        let n = self.cardinality().expect("cardinality fits in u64");
        (0..n).map(move |i| self.from_encoding(i))
    }

    /// `{g - 1 : g ≠ 1}`, a basis of the augmentation ideal.
    pub fn aug_ideal_basis(&self) -> Vec<GroupAlgebraElement> {
        let one = self.one();
        (0..self.dimension())
            .filter(|&g| g != self.0.table.identity)
            .map(|g| &self.group_element(g) - &one)
            .collect()
    }
}

impl PartialEq for GroupAlgebra {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.field == other.0.field && self.0.table == other.0.table)
    }
}

impl Eq for GroupAlgebra {}

impl fmt::Debug for GroupAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.0.field, self.0.table.name)
    }
}

pub fn aug_ideal_basis(parent: &GroupAlgebra) -> Vec<GroupAlgebraElement> {
    parent.aug_ideal_basis()
}

/// `Σ_g α_g g`, coefficients indexed by group element.
#[derive(Clone, PartialEq, Eq)]
pub struct GroupAlgebraElement {
    parent: GroupAlgebra,
    coeffs: Vec<FieldElement>,
}

impl GroupAlgebraElement {
    pub fn parent(&self) -> &GroupAlgebra {
        &self.parent
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(FieldElement::is_zero)
    }

    pub fn encode(&self) -> u64 {
        let q = self.parent.field().order();
        self.coeffs.iter().rev().fold(0, |acc, c| acc * q + c.encode())
    }

    /// `ε(Σ α_g g) = Σ α_g`.
    pub fn augmentation(&self) -> FieldElement {
        self.coeffs
            .iter()
            .fold(self.parent.field().zero(), |acc, c| &acc + c)
    }

    pub fn scale(&self, c: &FieldElement) -> GroupAlgebraElement {
        GroupAlgebraElement {
            parent: self.parent.clone(),
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    fn check_parent(&self, rhs: &Self) -> Result<()> {
        if self.parent == rhs.parent {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn try_add(&self, rhs: &Self) -> Result<Self> {
        self.check_parent(rhs)?;
        Ok(Self {
            parent: self.parent.clone(),
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn try_sub(&self, rhs: &Self) -> Result<Self> {
        self.check_parent(rhs)?;
        Ok(Self {
            parent: self.parent.clone(),
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect(),
        })
    }

    /// Convolution through the group table.
    pub fn try_mul(&self, rhs: &Self) -> Result<Self> {
        self.check_parent(rhs)?;
        let table = self.parent.table();
        let mut out = self.parent.zero();
        for (g, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (h, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let gh = table.mul(g, h);
                out.coeffs[gh] = &out.coeffs[gh] + &(a * b);
            }
        }
        Ok(out)
    }

    /// Matrix of `y ↦ x·y` on coordinate columns.
    pub fn left_mult_matrix(&self) -> Matrix {
        let n = self.parent.dimension();
        let field = self.parent.field();
        let mut m = Matrix::zero(field, n, n);
        let table = self.parent.table();
        for (g, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for h in 0..n {
                let gh = table.mul(g, h);
                m.set(gh, h, m.get(gh, h) + a);
            }
        }
        m
    }

    pub fn is_unit(&self) -> bool {
        self.left_mult_matrix().is_invertible()
    }

    /// Nilpotent iff the left-multiplication matrix vanishes at the
    /// dimension-th power.
    pub fn is_nilpotent(&self) -> bool {
        let n = self.parent.dimension() as u64;
        self.left_mult_matrix().pow(n).expect("square").is_zero()
    }
}

pub fn augmentation(x: &GroupAlgebraElement) -> FieldElement {
    x.augmentation()
}

pub fn is_unit_ga(x: &GroupAlgebraElement) -> bool {
    x.is_unit()
}

pub fn is_nilpotent_ga(x: &GroupAlgebraElement) -> bool {
    x.is_nilpotent()
}

impl fmt::Debug for GroupAlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c: Vec<u64> = self.coeffs.iter().map(FieldElement::encode).collect();
        write!(f, "{c:?}@{:?}", self.parent)
    }
}

macro_rules! ga_binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl $tr<&GroupAlgebraElement> for &GroupAlgebraElement {
            type Output = GroupAlgebraElement;
            fn $method(self, rhs: &GroupAlgebraElement) -> GroupAlgebraElement {
                self.$checked(rhs).expect("group algebra mismatch")
            }
        }
    };
}

ga_binop!(Add, add, try_add);
ga_binop!(Sub, sub, try_sub);
ga_binop!(Mul, mul, try_mul);

impl Neg for &GroupAlgebraElement {
    type Output = GroupAlgebraElement;
    fn neg(self) -> GroupAlgebraElement {
        GroupAlgebraElement {
            parent: self.parent.clone(),
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

/// The `KG`-module isomorphism `ã : KG → L`, `Σ α_i σ^i ↦ Σ α_i σ^i(a)`,
/// for a fixed normal element `a`, with its inverse precomputed.
#[derive(Clone, Debug)]
pub struct NormalBridge {
    tower: Tower,
    a: FieldElement,
    conj: Vec<FieldElement>,
    /// Inverse of the matrix whose rows are the coordinates of `σ^i(a)`.
    inverse: Matrix,
    kg: GroupAlgebra,
}

impl NormalBridge {
    pub fn new(tower: &Tower, a: &FieldElement) -> Result<Self> {
        if !is_normal(tower, a)? {
            return Err(Error::NotNormal);
        }
        let conj = conjugates(tower, a)?;
        let rows = conj.iter().map(|c| tower.coords(c)).collect::<Result<Vec<_>>>()?;
        let inverse = Matrix::from_rows(tower.base_field(), rows)?
            .inverse()
            .expect("normal element has independent conjugates");
        Ok(Self {
            tower: tower.clone(),
            a: a.clone(),
            conj,
            inverse,
            kg: GroupAlgebra::new(tower.base_field(), &GroupTable::cyclic(tower.m())?),
        })
    }

    pub fn normal_element(&self) -> &FieldElement {
        &self.a
    }

    /// `KG` with group element `i` standing for `σ^i`.
    pub fn group_algebra(&self) -> &GroupAlgebra {
        &self.kg
    }

    fn check(&self, r: &GroupAlgebraElement) -> Result<()> {
        if r.parent() == &self.kg {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn apply(&self, r: &GroupAlgebraElement) -> Result<FieldElement> {
        self.check(r)?;
        let mut acc = self.tower.top_field().zero();
        for (c, s) in r.coeffs().iter().zip(&self.conj) {
            if !c.is_zero() {
                acc = &acc + &(&self.tower.embed(c)? * s);
            }
        }
        Ok(acc)
    }

    /// `ã⁻¹(l)`.
    pub fn preimage(&self, l: &FieldElement) -> Result<GroupAlgebraElement> {
        let coords = self.tower.coords(l)?;
        self.kg.from_coeffs(self.inverse.left_apply(&coords))
    }

    /// `Γ(r) = ã⁻¹(γ · ã(r))`.
    pub fn gamma_transport(
        &self,
        gamma: &FieldElement,
        r: &GroupAlgebraElement,
    ) -> Result<GroupAlgebraElement> {
        if gamma.field() != self.tower.top_field() {
            return Err(Error::FieldMismatch);
        }
        if gamma.is_zero() {
            return Err(Error::ZeroElement);
        }
        let target = gamma * &self.apply(r)?;
        let out = self.preimage(&target)?;
        if self.apply(&out)? != target {
            return Err(Error::Falsified {
                claim: "transport diagram commutes".into(),
                witness: format!("gamma={} r={:?}", gamma.encode(), r),
            });
        }
        Ok(out)
    }
}

pub fn a_tilde(tower: &Tower, a: &FieldElement, r: &GroupAlgebraElement) -> Result<FieldElement> {
    NormalBridge::new(tower, a)?.apply(r)
}

pub fn gamma_transport(
    tower: &Tower,
    a: &FieldElement,
    gamma: &FieldElement,
    r: &GroupAlgebraElement,
) -> Result<GroupAlgebraElement> {
    NormalBridge::new(tower, a)?.gamma_transport(gamma, r)
}
