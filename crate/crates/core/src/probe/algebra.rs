use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::ffield::{checked_pow, least_irreducible, Field, FieldElement};
use crate::group_algebra::GroupTable;
use crate::linalg::{span_basis, Matrix};
use crate::Limits;

/// Largest dimension accepted by the constructors.
pub const MAX_DIMENSION: usize = 64;

/// Brute-force radical computations stop above this many elements.
pub const RADICAL_BRUTE_FORCE_CAP: u64 = 4096;

pub type Vector = Vec<FieldElement>;

/// Construction data attached to an algebra.
///
/// `f_components` counts the simple components of `A/J(A)` that are `F`
/// itself. It is known from the constructor and is checked against the
/// number of codimension-one two-sided ideals by the catalog verdicts.
#[derive(Clone, Debug)]
pub struct Metadata {
    pub name: String,
    pub f_components: usize,
    pub simple: bool,
    pub radical: Option<Vec<Vector>>,
    pub group: Option<GroupTable>,
}

/// A finite-dimensional associative algebra with identity over `F`, given by
/// structure constants `e_i e_j = Σ_k c[i][j][k] e_k`.
#[derive(Clone)]
pub struct StructureAlgebra(Arc<Inner>);

struct Inner {
    field: Field,
    dim: usize,
    constants: Vec<FieldElement>,
    identity: Vector,
    meta: Metadata,
}

impl StructureAlgebra {
    /// Validates associativity on all basis triples and the identity.
    pub fn new(
        field: &Field,
        dim: usize,
        constants: Vec<FieldElement>,
        identity: Vector,
        meta: Metadata,
    ) -> Result<Self> {
        if dim == 0 || dim > MAX_DIMENSION {
            return Err(Error::BadAlgebra(format!(
                "dimension {dim} outside 1..={MAX_DIMENSION}"
            )));
        }
        if constants.len() != dim * dim * dim || identity.len() != dim {
            return Err(Error::BadAlgebra("wrong number of structure constants".into()));
        }
        if constants.iter().chain(&identity).any(|c| c.field() != field) {
            return Err(Error::FieldMismatch);
        }
        if identity.iter().all(FieldElement::is_zero) {
            return Err(Error::BadAlgebra("0 = 1".into()));
        }
        let a = StructureAlgebra(Arc::new(Inner {
            field: field.clone(),
            dim,
            constants,
            identity,
            meta,
        }));
        a.validate()?;
        Ok(a)
    }

    fn validate(&self) -> Result<()> {
        let d = self.dim();
        let basis: Vec<Vector> = (0..d).map(|i| self.basis_vector(i)).collect();
        let products: Vec<Vector> = (0..d * d)
            .map(|ij| self.constants_row(ij / d, ij % d).to_vec())
            .collect();
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    let left = self.mul(&products[i * d + j], &basis[k]);
                    let right = self.mul(&basis[i], &products[j * d + k]);
                    if left != right {
                        return Err(Error::BadAlgebra(format!(
                            "{}: (e{i} e{j}) e{k} != e{i} (e{j} e{k})",
                            self.name()
                        )));
                    }
                }
            }
        }
        for (i, e) in basis.iter().enumerate() {
            if &self.mul(&self.0.identity, e) != e || &self.mul(e, &self.0.identity) != e {
                return Err(Error::BadAlgebra(format!(
                    "{}: identity fails on e{i}",
                    self.name()
                )));
            }
        }
        if let Some(r) = &self.0.meta.radical {
            if r.iter().any(|v| v.len() != d || v.iter().any(|c| c.field() != self.field())) {
                return Err(Error::BadAlgebra("malformed declared radical".into()));
            }
        }
        Ok(())
    }

    pub fn field(&self) -> &Field {
        &self.0.field
    }

    pub fn dim(&self) -> usize {
        self.0.dim
    }

    pub fn name(&self) -> &str {
        &self.0.meta.name
    }

    pub fn metadata(&self) -> &Metadata {
        &self.0.meta
    }

    /// A copy with a different name and otherwise identical data.
    pub fn renamed(&self, name: &str) -> Self {
        let mut meta = self.0.meta.clone();
        meta.name = name.to_string();
        StructureAlgebra(Arc::new(Inner {
            field: self.0.field.clone(),
            dim: self.0.dim,
            constants: self.0.constants.clone(),
            identity: self.0.identity.clone(),
            meta,
        }))
    }

    fn two_field(&self) -> bool {
        self.field().order() == 2
    }

    /// `|F| = 2` and `A/J` has at least three `F_2` components.
    pub fn has_f2_cube_factor(&self) -> bool {
        self.two_field() && self.0.meta.f_components >= 3
    }

    /// `|F| = 2` and `A/J` has at least two `F_2` components.
    pub fn has_f2_square_factor(&self) -> bool {
        self.two_field() && self.0.meta.f_components >= 2
    }

    pub fn is_simple(&self) -> bool {
        self.0.meta.simple
    }

    pub fn group(&self) -> Option<&GroupTable> {
        self.0.meta.group.as_ref()
    }

    /// `c[i][j][·]`.
    pub fn constants_row(&self, i: usize, j: usize) -> &[FieldElement] {
        let d = self.dim();
        &self.0.constants[(i * d + j) * d..(i * d + j + 1) * d]
    }

    pub fn cardinality(&self) -> Option<u64> {
        checked_pow(self.field().order(), self.dim() as u64)
    }

    pub fn zero(&self) -> Vector {
        vec![self.field().zero(); self.dim()]
    }

    pub fn one(&self) -> &[FieldElement] {
        &self.0.identity
    }

    pub fn basis_vector(&self, i: usize) -> Vector {
        let mut v = self.zero();
        v[i] = self.field().one();
        v
    }

    pub fn add(&self, x: &[FieldElement], y: &[FieldElement]) -> Vector {
        x.iter().zip(y).map(|(a, b)| a + b).collect()
    }

    pub fn sub(&self, x: &[FieldElement], y: &[FieldElement]) -> Vector {
        x.iter().zip(y).map(|(a, b)| a - b).collect()
    }

    pub fn mul(&self, x: &[FieldElement], y: &[FieldElement]) -> Vector {
        let d = self.dim();
        let mut out = self.zero();
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = a * b;
                for (k, c) in self.constants_row(i, j).iter().enumerate().take(d) {
                    if !c.is_zero() {
                        out[k] = &out[k] + &(&ab * c);
                    }
                }
            }
        }
        out
    }

    /// Coordinates as a mixed-radix number, coordinate 0 least significant.
    pub fn encode(&self, x: &[FieldElement]) -> u64 {
        let q = self.field().order();
        x.iter().rev().fold(0, |acc, c| acc * q + c.encode())
    }

    pub fn decode(&self, mut n: u64) -> Vector {
        let q = self.field().order();
        (0..self.dim())
            .map(|_| {
                let c = self.field().decode(n % q);
                n /= q;
                c
            })
            .collect()
    }

    /// Every element in ascending encoding, after a cap check.
    pub fn elements(&self, limits: &Limits) -> Result<impl Iterator<Item = Vector> + '_> {
        let n = self.card_within(limits.max_card)?;
        Ok((0..n).map(move |i| self.decode(i)))
    }

    fn card_within(&self, cap: u64) -> Result<u64> {
        match self.cardinality() {
            Some(n) if n <= cap => Ok(n),
            n => Err(Error::CapExceeded {
                what: format!("elements of {}", self.name()),
                size: n.unwrap_or(u64::MAX),
                cap,
            }),
        }
    }

    /// Matrix of `y ↦ x y` acting on coordinate columns.
    pub fn left_mult_matrix(&self, x: &[FieldElement]) -> Matrix {
        let d = self.dim();
        let mut m = Matrix::zero(self.field(), d, d);
        for j in 0..d {
            let col = self.mul(x, &self.basis_vector(j));
            for (k, v) in col.into_iter().enumerate() {
                m.set(k, j, v);
            }
        }
        m
    }
}

impl fmt::Debug for StructureAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (dim {} over {})", self.name(), self.dim(), self.field())
    }
}

/// With an identity, one-sided invertibility of left multiplication already
/// gives a two-sided inverse in finite dimension.
pub fn is_unit_elem(a: &StructureAlgebra, x: &[FieldElement]) -> bool {
    a.left_mult_matrix(x).is_invertible()
}

pub fn is_nilpotent_elem(a: &StructureAlgebra, x: &[FieldElement]) -> bool {
    a.left_mult_matrix(x)
        .pow(a.dim() as u64)
        .expect("square")
        .is_zero()
}

/// Encodings of all units, ascending.
pub fn unit_set(a: &StructureAlgebra, limits: &Limits) -> Result<Vec<u64>> {
    Ok(a.elements(limits)?
        .filter(|x| is_unit_elem(a, x))
        .map(|x| a.encode(&x))
        .collect())
}

/// Encodings of all nilpotent elements, ascending.
pub fn nilpotent_set(a: &StructureAlgebra, limits: &Limits) -> Result<Vec<u64>> {
    Ok(a.elements(limits)?
        .filter(|x| is_nilpotent_elem(a, x))
        .map(|x| a.encode(&x))
        .collect())
}

fn meta(name: String, f_components: usize, simple: bool, radical: Option<Vec<Vector>>) -> Metadata {
    Metadata {
        name,
        f_components,
        simple,
        radical,
        group: None,
    }
}

fn constants_from(field: &Field, d: usize, rule: impl Fn(usize, usize) -> Option<(usize, FieldElement)>) -> Vec<FieldElement> {
    let mut c = vec![field.zero(); d * d * d];
    for i in 0..d {
        for j in 0..d {
            if let Some((k, v)) = rule(i, j) {
                c[(i * d + j) * d + k] = v;
            }
        }
    }
    c
}

fn check_dim(n: usize, d: Option<usize>) -> Result<usize> {
    match d {
        Some(d) if d <= MAX_DIMENSION => Ok(d),
        _ => Err(Error::CapExceeded {
            what: format!("algebra dimension for parameter {n}"),
            size: d.unwrap_or(usize::MAX) as u64,
            cap: MAX_DIMENSION as u64,
        }),
    }
}

/// `M_n(F)` with `E_{i,j}` at index `i·n + j`.
pub fn make_matrix_algebra(field: &Field, n: usize) -> Result<StructureAlgebra> {
    if n == 0 {
        return Err(Error::InvalidArgument("matrix size must be positive".into()));
    }
    let d = check_dim(n, n.checked_mul(n))?;
    let c = constants_from(field, d, |a, b| {
        let (i, j) = (a / n, a % n);
        let (k, l) = (b / n, b % n);
        (j == k).then(|| (i * n + l, field.one()))
    });
    let mut one = vec![field.zero(); d];
    for i in 0..n {
        one[i * n + i] = field.one();
    }
    let fc = usize::from(n == 1);
    StructureAlgebra::new(
        field,
        d,
        c,
        one,
        meta(format!("M{n}({field})"), fc, true, Some(Vec::new())),
    )
}

/// `F_{q^d}` as an algebra over `F_q`, on the power basis of the least
/// irreducible modulus.
pub fn make_field_algebra(base: &Field, d: usize) -> Result<StructureAlgebra> {
    let d = check_dim(d, Some(d))?;
    if d == 0 {
        return Err(Error::InvalidArgument("extension degree must be positive".into()));
    }
    let (ext, name) = if d == 1 {
        (None, format!("{base}"))
    } else {
        let ext = Field::extension(base, &least_irreducible(base, d)?)?;
        let name = format!("{ext}/{base}");
        (Some(ext), name)
    };
    let c = match &ext {
        None => vec![base.one()],
        Some(ext) => {
            let x = ext.from_base_coords(&[base.zero(), base.one()])?;
            let mut c = Vec::with_capacity(d * d * d);
            for i in 0..d {
                for j in 0..d {
                    c.extend(ext.base_coords(&x.pow((i + j) as u64))?);
                }
            }
            c
        }
    };
    let mut one = vec![base.zero(); d];
    one[0] = base.one();
    StructureAlgebra::new(
        base,
        d,
        c,
        one,
        meta(name, usize::from(d == 1), true, Some(Vec::new())),
    )
}

/// `F^j` with componentwise product.
pub fn power(field: &Field, j: usize) -> Result<StructureAlgebra> {
    let d = check_dim(j, Some(j))?;
    if d == 0 {
        return Err(Error::InvalidArgument("power must be positive".into()));
    }
    let c = constants_from(field, d, |a, b| (a == b).then(|| (a, field.one())));
    StructureAlgebra::new(
        field,
        d,
        c,
        vec![field.one(); d],
        meta(format!("{field}^{j}"), j, j == 1, Some(Vec::new())),
    )
}

/// Upper triangular `n×n` matrices, basis `E_{i,j}` (`i ≤ j`) in row order.
pub fn make_triangular(field: &Field, n: usize) -> Result<StructureAlgebra> {
    if n == 0 {
        return Err(Error::InvalidArgument("matrix size must be positive".into()));
    }
    let units: Vec<(usize, usize)> = (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect();
    let d = check_dim(n, Some(units.len()))?;
    let index = |i: usize, j: usize| units.iter().position(|&u| u == (i, j)).unwrap();
    let c = constants_from(field, d, |a, b| {
        let ((i, j), (k, l)) = (units[a], units[b]);
        (j == k).then(|| (index(i, l), field.one()))
    });
    let mut one = vec![field.zero(); d];
    for i in 0..n {
        one[index(i, i)] = field.one();
    }
    let radical = units
        .iter()
        .enumerate()
        .filter(|(_, &(i, j))| i < j)
        .map(|(a, _)| {
            let mut v = vec![field.zero(); d];
            v[a] = field.one();
            v
        })
        .collect();
    StructureAlgebra::new(
        field,
        d,
        c,
        one,
        meta(format!("T{n}({field})"), n, n == 1, Some(radical)),
    )
}

/// `A_1 ⊕ … ⊕ A_r`, blocks in order.
pub fn make_direct_sum(parts: &[StructureAlgebra]) -> Result<StructureAlgebra> {
    let first = parts
        .first()
        .ok_or_else(|| Error::InvalidArgument("empty direct sum".into()))?;
    let field = first.field().clone();
    if parts.iter().any(|p| p.field() != &field) {
        return Err(Error::MixedFields);
    }
    let d = check_dim(parts.len(), Some(parts.iter().map(StructureAlgebra::dim).sum()))?;
    let mut c = vec![field.zero(); d * d * d];
    let mut one = Vec::with_capacity(d);
    let mut radical = Some(Vec::new());
    let mut offset = 0;
    for p in parts {
        let e = p.dim();
        for i in 0..e {
            for j in 0..e {
                for (k, v) in p.constants_row(i, j).iter().enumerate() {
                    c[((offset + i) * d + offset + j) * d + offset + k] = v.clone();
                }
            }
        }
        one.extend_from_slice(p.one());
        radical = match (radical, &p.metadata().radical) {
            (Some(mut acc), Some(r)) => {
                for v in r {
                    let mut w = vec![field.zero(); d];
                    w[offset..offset + e].clone_from_slice(v);
                    acc.push(w);
                }
                Some(acc)
            }
            _ => None,
        };
        offset += e;
    }
    let name = parts
        .iter()
        .map(|p| p.name().to_string())
        .collect::<Vec<_>>()
        .join("+");
    let simple = parts.len() == 1 && first.is_simple();
    let fc = parts.iter().map(|p| p.metadata().f_components).sum();
    StructureAlgebra::new(&field, d, c, one, meta(name, fc, simple, radical))
}

/// `FG` with basis the group elements.
///
/// The count of `F` components of `FG/J` is `|Hom(G, F*)|`, counted by
/// extending assignments along the group table. The radical is declared zero
/// exactly when the characteristic does not divide `|G|`.
pub fn make_group_algebra_struct(field: &Field, table: &GroupTable) -> Result<StructureAlgebra> {
    let d = check_dim(table.order(), Some(table.order()))?;
    let c = constants_from(field, d, |g, h| Some((table.mul(g, h), field.one())));
    let mut one = vec![field.zero(); d];
    one[table.identity()] = field.one();
    let radical = (d as u64 % field.characteristic() != 0).then(Vec::new);
    let mut m = meta(
        format!("{field}{}", table.name()),
        count_characters(field, table),
        d == 1,
        radical,
    );
    m.group = Some(table.clone());
    StructureAlgebra::new(field, d, c, one, m)
}

/// `|Hom(G, F*)|` by depth-first assignment with consistency checks.
fn count_characters(field: &Field, table: &GroupTable) -> usize {
    let units: Vec<FieldElement> = field.units().collect();
    let n = table.order();
    let mut assign: Vec<Option<FieldElement>> = vec![None; n];
    assign[table.identity()] = Some(field.one());
    fn extend(
        table: &GroupTable,
        units: &[FieldElement],
        assign: &[Option<FieldElement>],
    ) -> usize {
        // Close the current assignment under products.
        let mut snapshot = assign.to_vec();
        loop {
            let mut changed = false;
            for a in 0..table.order() {
                for b in 0..table.order() {
                    if let (Some(x), Some(y)) = (&snapshot[a], &snapshot[b]) {
                        let v = x * y;
                        let ab = table.mul(a, b);
                        match &snapshot[ab] {
                            Some(z) if z != &v => return 0,
                            Some(_) => {}
                            None => {
                                snapshot[ab] = Some(v);
                                changed = true;
                            }
                        }
                    }
                }
            }
            if !changed {
                break;
            }
        }
        let Some(free) = snapshot.iter().position(Option::is_none) else {
            return 1;
        };
        units
            .iter()
            .map(|u| {
                let mut next = snapshot.clone();
                next[free] = Some(u.clone());
                extend(table, units, &next)
            })
            .sum()
    }
    extend(table, &units, &assign)
}

fn reduced(field: &Field, vectors: &[Vector], dim: usize) -> Vec<Vector> {
    span_basis(field, vectors, dim)
}

/// `J(A)` as a row-reduced basis.
///
/// Brute force: `t ∈ J` iff `1 - a t` is a unit for every `a`. Candidates are
/// pre-filtered to nilpotents. The result is checked to be a subspace and a
/// two-sided ideal, and compared with the declared radical when present.
/// Above [`RADICAL_BRUTE_FORCE_CAP`] the declared radical is returned as is.
pub fn jacobson_radical(a: &StructureAlgebra) -> Result<Vec<Vector>> {
    let d = a.dim();
    let field = a.field();
    let declared = a
        .metadata()
        .radical
        .as_ref()
        .map(|r| reduced(field, r, d));
    let card = a.cardinality().filter(|&n| n <= RADICAL_BRUTE_FORCE_CAP);
    let Some(card) = card else {
        return declared.ok_or(Error::CapExceeded {
            what: format!("radical of {}", a.name()),
            size: a.cardinality().unwrap_or(u64::MAX),
            cap: RADICAL_BRUTE_FORCE_CAP,
        });
    };
    let all: Vec<Vector> = (0..card).map(|i| a.decode(i)).collect();
    let units: HashSet<u64> = all
        .iter()
        .filter(|x| is_unit_elem(a, x))
        .map(|x| a.encode(x))
        .collect();
    let one = a.one();
    let members: Vec<&Vector> = all
        .iter()
        .filter(|t| is_nilpotent_elem(a, t))
        .filter(|t| {
            all.iter()
                .all(|x| units.contains(&a.encode(&a.sub(one, &a.mul(x, t)))))
        })
        .collect();
    let basis = if members.len() <= 1 {
        Vec::new()
    } else {
        let rows: Vec<Vector> = members.iter().map(|v| (*v).clone()).collect();
        reduced(field, &rows, d)
    };
    let span_size = checked_pow(field.order(), basis.len() as u64);
    if span_size != Some(members.len() as u64) {
        return Err(Error::Falsified {
            claim: format!("radical of {} is a subspace", a.name()),
            witness: format!("{} members, span basis of {}", members.len(), basis.len()),
        });
    }
    for b in &basis {
        for j in 0..d {
            let e = a.basis_vector(j);
            for prod in [a.mul(&e, b), a.mul(b, &e)] {
                if !in_span(field, &basis, &prod, d) {
                    return Err(Error::Falsified {
                        claim: format!("radical of {} is a two-sided ideal", a.name()),
                        witness: format!("{}", a.encode(&prod)),
                    });
                }
            }
        }
    }
    if let Some(decl) = declared {
        if decl != basis {
            return Err(Error::Falsified {
                claim: format!("declared radical of {}", a.name()),
                witness: format!(
                    "declared dimension {}, computed dimension {}",
                    decl.len(),
                    basis.len()
                ),
            });
        }
    }
    Ok(basis)
}

pub(crate) fn in_span(field: &Field, basis: &[Vector], v: &[FieldElement], dim: usize) -> bool {
    if v.iter().all(FieldElement::is_zero) {
        return true;
    }
    let mut rows = basis.to_vec();
    rows.push(v.to_vec());
    reduced(field, &rows, dim).len() == basis.len()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(p: u64) -> Field {
        Field::prime(p).unwrap()
    }

    fn lim() -> Limits {
        Limits::default()
    }

    fn mat_elem(n: usize, field: &Field, entries: &[(usize, usize, i64)]) -> Vector {
        let mut v = vec![field.zero(); n * n];
        for &(i, j, c) in entries {
            v[i * n + j] = &v[i * n + j] + &field.from_int(c);
        }
        v
    }

    #[test]
    fn matrix_units() {
        let f2 = f(2);
        let a = make_matrix_algebra(&f2, 2).unwrap();
        assert_eq!(a.dim(), 4);
        let e12 = a.basis_vector(1);
        let e21 = a.basis_vector(2);
        assert_eq!(a.mul(&e12, &e21), a.basis_vector(0));
        assert_eq!(a.mul(&e12, &e12), a.zero());
        assert_eq!(unit_set(&a, &lim()).unwrap().len(), 6);
        let one = make_matrix_algebra(&f2, 1).unwrap();
        assert_eq!(one.dim(), 1);
        assert_eq!(one.metadata().f_components, 1);
        assert!(make_matrix_algebra(&f2, 9).is_err());
    }

    #[test]
    fn matrix_units_match_gl_count() {
        // |GL_2(F_3)| = (9-1)(9-3) = 48
        let a = make_matrix_algebra(&f(3), 2).unwrap();
        assert_eq!(unit_set(&a, &lim()).unwrap().len(), 48);
    }

    #[test]
    fn cyclic_permutation_is_unit_and_swap_nilpotent() {
        for p in [2, 3] {
            let field = f(p);
            for n in 2..=4 {
                let a = make_matrix_algebra(&field, n).unwrap();
                let mut entries = vec![(n - 1, 0, 1)];
                entries.extend((0..n - 1).map(|i| (i, i + 1, 1)));
                assert!(is_unit_elem(&a, &mat_elem(n, &field, &entries)));
                for i in 0..n {
                    for j in 0..n {
                        if i != j {
                            let x = mat_elem(n, &field, &[(i, i, 1), (i, j, 1), (j, i, -1), (j, j, -1)]);
                            assert!(is_nilpotent_elem(&a, &x));
                            assert!(a.mul(&x, &x).iter().all(FieldElement::is_zero));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn small_constructions() {
        let f2 = f(2);
        let s = power(&f2, 2).unwrap();
        assert_eq!(unit_set(&s, &lim()).unwrap(), vec![3]);
        assert!(s.has_f2_square_factor() && !s.has_f2_cube_factor());
        assert!(power(&f2, 3).unwrap().has_f2_cube_factor());
        let t = make_triangular(&f2, 2).unwrap();
        assert_eq!(t.dim(), 3);
        assert_eq!(unit_set(&t, &lim()).unwrap().len(), 2);
        let f4 = make_field_algebra(&f2, 2).unwrap();
        assert_eq!(unit_set(&f4, &lim()).unwrap().len(), 3);
        let sum = make_direct_sum(&[f4, power(&f2, 1).unwrap()]).unwrap();
        assert_eq!(sum.dim(), 3);
        assert_eq!(sum.metadata().f_components, 1);
        assert_eq!(unit_set(&sum, &lim()).unwrap().len(), 3);
        assert_eq!(
            make_direct_sum(&[power(&f2, 1).unwrap(), power(&f(3), 1).unwrap()]).unwrap_err(),
            Error::MixedFields
        );
    }

    #[test]
    fn rejects_non_associative_and_bad_identity() {
        let f2 = f(2);
        let m = |name: &str| meta(name.into(), 0, false, None);
        // e0 e0 = e1, everything else zero: no identity.
        let mut c = vec![f2.zero(); 8];
        c[1] = f2.one();
        assert!(StructureAlgebra::new(&f2, 2, c, vec![f2.one(), f2.zero()], m("x")).is_err());
        assert!(StructureAlgebra::new(&f2, 1, vec![f2.one()], vec![f2.zero()], m("zero")).is_err());
        // e1 e1 = e0 with e0 the identity: associative (F_2[x]/(x^2 - 1)).
        let mut c = vec![f2.zero(); 8];
        c[0] = f2.one(); // e0 e0 = e0
        c[3] = f2.one(); // e0 e1 = e1
        c[5] = f2.one(); // e1 e0 = e1
        c[6] = f2.one(); // e1 e1 = e0
        assert!(StructureAlgebra::new(&f2, 2, c, vec![f2.one(), f2.zero()], m("ok")).is_ok());
        // Same but e1 e1 = e1 + e0 and e1 e0 = 0: breaks identity.
        let mut c = vec![f2.zero(); 8];
        c[0] = f2.one();
        c[3] = f2.one();
        c[6] = f2.one();
        c[7] = f2.one();
        assert!(StructureAlgebra::new(&f2, 2, c, vec![f2.one(), f2.zero()], m("bad")).is_err());
    }

    #[test]
    fn units_and_nilpotents_disjoint() {
        let f2 = f(2);
        for a in [
            make_matrix_algebra(&f2, 2).unwrap(),
            make_triangular(&f2, 3).unwrap(),
            make_group_algebra_struct(&f2, &GroupTable::symmetric(3).unwrap()).unwrap(),
        ] {
            let u: HashSet<u64> = unit_set(&a, &lim()).unwrap().into_iter().collect();
            let n = nilpotent_set(&a, &lim()).unwrap();
            assert!(n.iter().all(|x| !u.contains(x)));
            assert!(u.contains(&a.encode(a.one())));
            assert!(n.contains(&0));
        }
    }

    #[test]
    fn unit_count_invariant_under_basis_order() {
        // T_2(F_3) with the basis listed in reverse order.
        let f3 = f(3);
        let t = make_triangular(&f3, 2).unwrap();
        let d = t.dim();
        let rev = |i: usize| d - 1 - i;
        let mut c = vec![f3.zero(); d * d * d];
        for i in 0..d {
            for j in 0..d {
                for (k, v) in t.constants_row(i, j).iter().enumerate() {
                    c[(rev(i) * d + rev(j)) * d + rev(k)] = v.clone();
                }
            }
        }
        let one: Vector = (0..d).map(|i| t.one()[rev(i)].clone()).collect();
        let r = StructureAlgebra::new(&f3, d, c, one, meta("rev".into(), 2, false, None)).unwrap();
        assert_eq!(unit_set(&r, &lim()).unwrap().len(), unit_set(&t, &lim()).unwrap().len());
        assert_eq!(unit_set(&t, &lim()).unwrap().len(), 2 * 2 * 3);
    }

    #[test]
    fn group_algebra_character_counts() {
        let f3 = f(3);
        let f2 = f(2);
        let f5 = f(5);
        let c = |n| GroupTable::cyclic(n).unwrap();
        let ga = |field: &Field, t: &GroupTable| {
            make_group_algebra_struct(field, t).unwrap().metadata().f_components
        };
        assert_eq!(ga(&f3, &c(4)), 2);
        assert_eq!(ga(&f3, &c(3)), 1);
        assert_eq!(ga(&f5, &c(4)), 4);
        assert_eq!(ga(&f2, &c(6)), 1);
        assert_eq!(ga(&f3, &GroupTable::symmetric(3).unwrap()), 2);
        let k4 = GroupTable::direct_product(&c(2), &c(2)).unwrap();
        assert_eq!(ga(&f3, &k4), 4);
    }

    #[test]
    fn radicals() {
        let f2 = f(2);
        assert!(jacobson_radical(&make_matrix_algebra(&f2, 2).unwrap()).unwrap().is_empty());
        let t = make_triangular(&f2, 2).unwrap();
        let j = jacobson_radical(&t).unwrap();
        assert_eq!(j, vec![t.basis_vector(1)]);
        let ga = make_group_algebra_struct(&f2, &GroupTable::cyclic(2).unwrap()).unwrap();
        assert_eq!(jacobson_radical(&ga).unwrap(), vec![vec![f2.one(), f2.one()]]);
        // F_2 C_3 = F_2 x F_4 is semisimple.
        let ga3 = make_group_algebra_struct(&f2, &GroupTable::cyclic(3).unwrap()).unwrap();
        assert!(jacobson_radical(&ga3).unwrap().is_empty());
        // F_2 C_4: radical is the augmentation ideal (local ring).
        let ga4 = make_group_algebra_struct(&f2, &GroupTable::cyclic(4).unwrap()).unwrap();
        assert_eq!(jacobson_radical(&ga4).unwrap().len(), 3);
        // F_2 S_3 = F_2 S_3 / J has dimension 6 - 1.
        let s3 = make_group_algebra_struct(&f2, &GroupTable::symmetric(3).unwrap()).unwrap();
        assert_eq!(jacobson_radical(&s3).unwrap().len(), 1);
        // T_3(F_2) with its declared strictly upper radical.
        assert_eq!(jacobson_radical(&make_triangular(&f2, 3).unwrap()).unwrap().len(), 3);
    }

    #[test]
    fn wrong_declared_radical_is_caught() {
        let f2 = f(2);
        let t = make_triangular(&f2, 2).unwrap();
        let mut m = t.metadata().clone();
        m.radical = Some(Vec::new());
        let d = t.dim();
        let c: Vec<FieldElement> = (0..d * d).flat_map(|ij| t.constants_row(ij / d, ij % d).to_vec()).collect();
        let lie = StructureAlgebra::new(&f2, d, c, t.one().to_vec(), m).unwrap();
        assert!(matches!(jacobson_radical(&lie), Err(Error::Falsified { .. })));
    }

    #[test]
    fn field_algebra_over_extension_base() {
        let f2 = f(2);
        let f4 = Field::extension(&f2, &least_irreducible(&f2, 2).unwrap()).unwrap();
        let a = make_matrix_algebra(&f4, 2).unwrap();
        // |GL_2(F_4)| = 15 * 12
        assert_eq!(unit_set(&a, &lim()).unwrap().len(), 180);
        let f16 = make_field_algebra(&f4, 2).unwrap();
        assert_eq!(unit_set(&f16, &lim()).unwrap().len(), 15);
    }
}
