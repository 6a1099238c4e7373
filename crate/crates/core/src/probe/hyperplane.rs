use crate::error::{Error, Result};
use crate::ffield::{checked_pow, FieldElement};
use crate::linalg::Matrix;
use crate::Limits;

use super::algebra::{is_nilpotent_elem, is_unit_elem, StructureAlgebra, Vector};

/// `H = Ker(f)` for a nonzero functional `f` whose first nonzero
/// coordinate is 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hyperplane {
    functional: Vector,
    basis: Vec<Vector>,
}

impl Hyperplane {
    pub fn from_functional(functional: Vector) -> Result<Self> {
        let Some(lead) = functional.iter().find(|c| !c.is_zero()) else {
            return Err(Error::InvalidArgument("zero functional".into()));
        };
        let field = lead.field().clone();
        let inv = lead.inv()?;
        let functional: Vector = functional.iter().map(|c| c * &inv).collect();
        let basis = Matrix::from_rows(&field, vec![functional.clone()])?.nullspace();
        Ok(Self { functional, basis })
    }

    pub fn functional(&self) -> &[FieldElement] {
        &self.functional
    }

    /// Functional coordinates as encodings, the form used in reports.
    pub fn functional_codes(&self) -> Vec<u64> {
        self.functional.iter().map(FieldElement::encode).collect()
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn eval(&self, x: &[FieldElement]) -> FieldElement {
        let zero = self.functional[0].field().zero();
        self.functional
            .iter()
            .zip(x)
            .fold(zero, |acc, (a, b)| &acc + &(a * b))
    }

    pub fn contains(&self, x: &[FieldElement]) -> bool {
        self.eval(x).is_zero()
    }
}

/// `(|F|^d - 1)/(|F| - 1)`, or `None` on overflow.
pub fn hyperplane_count(a: &StructureAlgebra) -> Option<u64> {
    let q = a.field().order();
    checked_pow(q, a.dim() as u64).map(|n| (n - 1) / (q - 1))
}

/// All hyperplanes, ascending by the coordinate tuple of the canonical
/// functional.
pub fn hyperplanes(a: &StructureAlgebra, limits: &Limits) -> Result<Vec<Hyperplane>> {
    let count = hyperplane_count(a);
    match count {
        Some(n) if n <= limits.max_hyperplanes => {}
        n => {
            return Err(Error::CapExceeded {
                what: format!("hyperplanes of {}", a.name()),
                size: n.unwrap_or(u64::MAX),
                cap: limits.max_hyperplanes,
            })
        }
    }
    let d = a.dim();
    let field = a.field();
    let q = field.order();
    let mut out = Vec::new();
    // More leading zeros sort first.
    for lead in (0..d).rev() {
        let tail = d - lead - 1;
        let n = q.pow(tail as u32);
        for t in 0..n {
            let mut f = vec![field.zero(); d];
            f[lead] = field.one();
            // Big-endian digits so that the tuple order is ascending.
            let mut rest = t;
            for slot in f[lead + 1..].iter_mut().rev() {
                *slot = field.from_encoding(rest % q)?;
                rest /= q;
            }
            out.push(Hyperplane::from_functional(f)?);
        }
    }
    debug_assert_eq!(Some(out.len() as u64), count);
    Ok(out)
}

/// An element `e_j b` or `b e_j` outside `H` with `b` in the basis of `H`,
/// if there is one.
pub fn ideal_violation(a: &StructureAlgebra, h: &Hyperplane) -> Option<Vector> {
    for b in h.basis() {
        for j in 0..a.dim() {
            let e = a.basis_vector(j);
            for prod in [a.mul(&e, b), a.mul(b, &e)] {
                if !h.contains(&prod) {
                    return Some(prod);
                }
            }
        }
    }
    None
}

pub fn is_two_sided_ideal(a: &StructureAlgebra, h: &Hyperplane) -> bool {
    ideal_violation(a, h).is_none()
}

/// The four mutually exclusive ways a hyperplane can sit against `U(A)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Pattern {
    /// Two-sided ideal (a proper ideal never meets `U(A)`).
    Ideal,
    /// Meets `U(A)` and omits some unit.
    Mixed,
    /// Not an ideal and disjoint from `U(A)`.
    AvoidsUnits,
    /// Not an ideal and contains all of `U(A)`.
    ContainsUnits,
}

impl Pattern {
    pub fn label(self) -> &'static str {
        match self {
            Pattern::Ideal => "ideal",
            Pattern::Mixed => "mixed",
            Pattern::AvoidsUnits => "avoids-units",
            Pattern::ContainsUnits => "contains-units",
        }
    }
}

#[derive(Clone, Debug)]
pub struct HyperplaneRecord {
    pub hyperplane: Hyperplane,
    pub pattern: Pattern,
    pub units_inside: usize,
    /// Product witnessing that `H` is not an ideal.
    pub ideal_violation: Option<u64>,
    /// A nilpotent element outside `H`.
    pub nilpotent_outside: Option<u64>,
}

impl HyperplaneRecord {
    pub fn is_ideal(&self) -> bool {
        self.pattern == Pattern::Ideal
    }

    pub fn meets_units(&self) -> bool {
        self.units_inside > 0
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct PatternTally {
    pub ideal: usize,
    pub mixed: usize,
    pub avoids_units: usize,
    pub contains_units: usize,
}

/// Everything the hyperplane verdicts need for one algebra: the unit and
/// nilpotent sets and one record per hyperplane, in canonical order.
#[derive(Clone, Debug)]
pub struct Survey {
    pub algebra: StructureAlgebra,
    pub units: Vec<u64>,
    pub nilpotents: Vec<u64>,
    pub records: Vec<HyperplaneRecord>,
}

impl Survey {
    pub fn tally(&self) -> PatternTally {
        let mut t = PatternTally::default();
        for r in &self.records {
            match r.pattern {
                Pattern::Ideal => t.ideal += 1,
                Pattern::Mixed => t.mixed += 1,
                Pattern::AvoidsUnits => t.avoids_units += 1,
                Pattern::ContainsUnits => t.contains_units += 1,
            }
        }
        t
    }

    pub fn ideals(&self) -> impl Iterator<Item = &HyperplaneRecord> {
        self.records.iter().filter(|r| r.is_ideal())
    }
}

pub fn survey(a: &StructureAlgebra, limits: &Limits) -> Result<Survey> {
    let hs = hyperplanes(a, limits)?;
    let mut units = Vec::new();
    let mut nilpotents = Vec::new();
    for x in a.elements(limits)? {
        if is_unit_elem(a, &x) {
            units.push(x);
        } else if is_nilpotent_elem(a, &x) {
            nilpotents.push(x);
        }
    }
    let records = hs
        .into_iter()
        .map(|h| {
            let units_inside = units.iter().filter(|u| h.contains(u)).count();
            let violation = ideal_violation(a, &h);
            let pattern = match (&violation, units_inside) {
                (None, _) => Pattern::Ideal,
                (Some(_), 0) => Pattern::AvoidsUnits,
                (Some(_), n) if n == units.len() => Pattern::ContainsUnits,
                _ => Pattern::Mixed,
            };
            let nilpotent_outside = nilpotents.iter().find(|x| !h.contains(x)).map(|x| a.encode(x));
            HyperplaneRecord {
                hyperplane: h,
                pattern,
                units_inside,
                ideal_violation: violation.map(|v| a.encode(&v)),
                nilpotent_outside,
            }
        })
        .collect();
    Ok(Survey {
        algebra: a.clone(),
        units: units.iter().map(|x| a.encode(x)).collect(),
        nilpotents: nilpotents.iter().map(|x| a.encode(x)).collect(),
        records,
    })
}
