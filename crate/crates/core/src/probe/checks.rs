use std::fmt;

use crate::error::{Error, Result};
use crate::ffield::{Field, FieldElement};
use crate::linalg::Matrix;
use crate::Limits;

use super::algebra::StructureAlgebra;
use super::hyperplane::{survey, HyperplaneRecord, Pattern, Survey};

/// The claims checked against every hyperplane of an algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Claim {
    /// A unit-free hyperplane is an ideal, or `|F| = 2` and `A` maps onto `F_2^3`.
    UnitAvoidance,
    /// No hyperplane holds every unit, unless `|F| = 2` and `A` maps onto `F_2^2`.
    UnitContainment,
    /// In a group algebra every non-ideal hyperplane meets `U` and omits a unit.
    GroupAlgebraHyperplanes,
    /// `F_2 G` has exactly one codimension-one ideal, the augmentation ideal.
    AugmentationIdealUnique,
    /// A hyperplane containing or avoiding `U` contains every nilpotent.
    NilpotentsInside,
    /// In a simple algebra only `F` itself has a unit-free hyperplane.
    SimpleUnitAvoidance,
    /// In a simple algebra no hyperplane contains `U`.
    SimpleUnitContainment,
    /// The constructor's declared flags match the computed structure.
    DeclaredStructure,
}

impl Claim {
    pub const ALL: [Claim; 8] = [
        Claim::UnitAvoidance,
        Claim::UnitContainment,
        Claim::GroupAlgebraHyperplanes,
        Claim::AugmentationIdealUnique,
        Claim::NilpotentsInside,
        Claim::SimpleUnitAvoidance,
        Claim::SimpleUnitContainment,
        Claim::DeclaredStructure,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Claim::UnitAvoidance => "unit-avoidance",
            Claim::UnitContainment => "unit-containment",
            Claim::GroupAlgebraHyperplanes => "group-algebra-hyperplanes",
            Claim::AugmentationIdealUnique => "augmentation-ideal-unique",
            Claim::NilpotentsInside => "nilpotents-inside",
            Claim::SimpleUnitAvoidance => "simple-unit-avoidance",
            Claim::SimpleUnitContainment => "simple-unit-containment",
            Claim::DeclaredStructure => "declared-structure",
        }
    }
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Status {
    Consistent,
    ExceptionWitnessed,
    Falsified,
}

impl Status {
    pub fn label(self) -> &'static str {
        match self {
            Status::Consistent => "consistent",
            Status::ExceptionWitnessed => "exception-witnessed",
            Status::Falsified => "FALSIFIED",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// A hyperplane (canonical functional, as encodings) and optionally an
/// element (algebra encoding) that together make a verdict checkable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub functional: Option<Vec<u64>>,
    pub element: Option<u64>,
    pub note: String,
}

impl Witness {
    fn at(r: &HyperplaneRecord, element: Option<u64>, note: &str) -> Self {
        Self {
            functional: Some(r.hyperplane.functional_codes()),
            element,
            note: note.to_string(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub claim: Claim,
    pub algebra: String,
    pub status: Status,
    pub witnesses: Vec<Witness>,
    /// Free-form remark carried into reports.
    pub remark: Option<String>,
}

impl Verdict {
    fn new(claim: Claim, a: &StructureAlgebra) -> Self {
        Self {
            claim,
            algebra: a.name().to_string(),
            status: Status::Consistent,
            witnesses: Vec::new(),
            remark: None,
        }
    }

    fn except(&mut self, w: Witness) {
        if self.status == Status::Consistent {
            self.status = Status::ExceptionWitnessed;
        }
        self.witnesses.push(w);
    }

    fn falsify(&mut self, w: Witness) {
        self.status = Status::Falsified;
        self.witnesses.push(w);
    }

    fn finish(mut self) -> Self {
        // A falsified verdict keeps only its counterexamples.
        if self.status == Status::Falsified {
            self.witnesses.retain(|w| w.note.starts_with("counterexample"));
        }
        self
    }
}

const OMITS_READING: &str = "omitting a unit is read as U(A) not contained in H";

/// Unit-avoiding hyperplanes must be ideals unless the cube flag is set.
pub fn check_unit_avoidance(s: &Survey) -> Verdict {
    let a = &s.algebra;
    let mut v = Verdict::new(Claim::UnitAvoidance, a);
    for r in s.records.iter().filter(|r| r.pattern == Pattern::AvoidsUnits) {
        if a.has_f2_cube_factor() {
            v.except(Witness::at(r, r.ideal_violation, "exception: unit-free non-ideal"));
        } else {
            v.falsify(Witness::at(r, r.ideal_violation, "counterexample: unit-free non-ideal"));
        }
    }
    v.finish()
}

/// No hyperplane may contain `U(A)` unless the square flag is set.
pub fn check_unit_containment(s: &Survey) -> Verdict {
    let a = &s.algebra;
    let mut v = Verdict::new(Claim::UnitContainment, a);
    v.remark = Some(OMITS_READING.into());
    let one = a.encode(a.one());
    for r in s.records.iter().filter(|r| r.pattern == Pattern::ContainsUnits) {
        if a.has_f2_square_factor() {
            v.except(Witness::at(r, Some(one), "exception: contains every unit"));
        } else {
            v.falsify(Witness::at(r, Some(one), "counterexample: contains every unit"));
        }
    }
    v.finish()
}

pub fn check_group_algebra_hyperplanes(s: &Survey) -> Result<Verdict> {
    let a = &s.algebra;
    if a.group().is_none() {
        return Err(Error::NotGroupAlgebra(a.name().to_string()));
    }
    let mut v = Verdict::new(Claim::GroupAlgebraHyperplanes, a);
    v.remark = Some(OMITS_READING.into());
    let one = a.encode(a.one());
    for r in &s.records {
        match r.pattern {
            Pattern::Ideal | Pattern::Mixed => {}
            Pattern::AvoidsUnits => v.falsify(Witness::at(
                r,
                r.ideal_violation,
                "counterexample: non-ideal misses every unit",
            )),
            Pattern::ContainsUnits => {
                v.falsify(Witness::at(r, Some(one), "counterexample: non-ideal holds every unit"))
            }
        }
    }
    Ok(v.finish())
}

pub fn check_augmentation_ideal_unique(s: &Survey) -> Result<Verdict> {
    let a = &s.algebra;
    if a.group().is_none() {
        return Err(Error::NotGroupAlgebra(a.name().to_string()));
    }
    if a.field().order() != 2 {
        return Err(Error::NotGroupAlgebra(format!("{} is not over F_2", a.name())));
    }
    let mut v = Verdict::new(Claim::AugmentationIdealUnique, a);
    let ideals: Vec<&HyperplaneRecord> = s.ideals().collect();
    let omega = vec![1u64; a.dim()];
    if ideals.len() != 1 {
        for r in &ideals {
            v.falsify(Witness::at(r, None, "counterexample: one of several ideals"));
        }
        if ideals.is_empty() {
            v.falsify(Witness {
                functional: Some(omega),
                element: None,
                note: "counterexample: augmentation kernel is not an ideal".into(),
            });
        }
    } else if ideals[0].hyperplane.functional_codes() != omega {
        v.falsify(Witness::at(ideals[0], None, "counterexample: unique ideal is not the augmentation ideal"));
    }
    Ok(v.finish())
}

pub fn check_nilpotents_inside(s: &Survey) -> Verdict {
    let mut v = Verdict::new(Claim::NilpotentsInside, &s.algebra);
    for r in &s.records {
        let qualifies = !r.meets_units() || r.units_inside == s.units.len();
        if qualifies {
            if let Some(x) = r.nilpotent_outside {
                v.falsify(Witness::at(r, Some(x), "counterexample: nilpotent outside"));
            }
        }
    }
    v.finish()
}

fn require_simple(a: &StructureAlgebra) -> Result<()> {
    if a.is_simple() {
        Ok(())
    } else {
        Err(Error::NotSimple(a.name().to_string()))
    }
}

pub fn check_simple_unit_avoidance(s: &Survey) -> Result<Verdict> {
    let a = &s.algebra;
    require_simple(a)?;
    let mut v = Verdict::new(Claim::SimpleUnitAvoidance, a);
    for r in s.records.iter().filter(|r| !r.meets_units()) {
        if a.dim() != 1 {
            v.falsify(Witness::at(r, None, "counterexample: unit-free hyperplane in dimension above one"));
        }
    }
    Ok(v.finish())
}

pub fn check_simple_unit_containment(s: &Survey) -> Result<Verdict> {
    let a = &s.algebra;
    require_simple(a)?;
    let mut v = Verdict::new(Claim::SimpleUnitContainment, a);
    let one = a.encode(a.one());
    for r in s.records.iter().filter(|r| r.units_inside == s.units.len()) {
        v.falsify(Witness::at(r, Some(one), "counterexample: contains every unit"));
    }
    Ok(v.finish())
}

/// Codimension-one ideals correspond to algebra maps `A → F`, so their
/// number must equal the declared count of `F` components. Expected flags,
/// when given, must match the constructor's.
pub fn check_declared_structure(s: &Survey, expected: Option<&ExpectedFlags>) -> Verdict {
    let a = &s.algebra;
    let mut v = Verdict::new(Claim::DeclaredStructure, a);
    let ideals = s.ideals().count();
    let declared = a.metadata().f_components;
    if ideals != declared {
        v.falsify(Witness {
            functional: None,
            element: None,
            note: format!(
                "counterexample: {ideals} codimension-one ideals, {declared} declared F components"
            ),
        });
    }
    if let Some(e) = expected {
        let actual = ExpectedFlags::of(a);
        if &actual != e {
            v.falsify(Witness {
                functional: None,
                element: None,
                note: format!("counterexample: expected flags {e}, constructed {actual}"),
            });
        }
    }
    v.finish()
}

/// Flags a catalog entry expects its constructor to produce.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ExpectedFlags {
    pub cube: bool,
    pub square: bool,
    pub simple: bool,
}

impl ExpectedFlags {
    pub fn of(a: &StructureAlgebra) -> Self {
        Self {
            cube: a.has_f2_cube_factor(),
            square: a.has_f2_square_factor(),
            simple: a.is_simple(),
        }
    }
}

impl fmt::Display for ExpectedFlags {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if self.cube {
            parts.push("cube");
        }
        if self.square {
            parts.push("square");
        }
        if self.simple {
            parts.push("simple");
        }
        if parts.is_empty() {
            parts.push("none");
        }
        f.write_str(&parts.join(","))
    }
}

/// Every verdict that applies to `a`, in [`Claim::ALL`] order.
pub fn run_all(a: &StructureAlgebra, expected: Option<&ExpectedFlags>, limits: &Limits) -> Result<(Survey, Vec<Verdict>)> {
    let s = survey(a, limits)?;
    let mut out = vec![check_unit_avoidance(&s), check_unit_containment(&s)];
    if a.group().is_some() {
        out.push(check_group_algebra_hyperplanes(&s)?);
        if a.field().order() == 2 {
            out.push(check_augmentation_ideal_unique(&s)?);
        }
    }
    out.push(check_nilpotents_inside(&s));
    if a.is_simple() {
        out.push(check_simple_unit_avoidance(&s)?);
        out.push(check_simple_unit_containment(&s)?);
    }
    out.push(check_declared_structure(&s, expected));
    Ok((s, out))
}

/// `Q = d E_{1,1} + E_{n,1} + E_{1,2} + … + E_{n-1,n}`.
pub fn cycle_matrix(field: &Field, n: usize, d: &FieldElement) -> Matrix {
    let mut q = Matrix::zero(field, n, n);
    q.set(0, 0, d.clone());
    q.set(n - 1, 0, q.get(n - 1, 0) + &field.one());
    for i in 0..n - 1 {
        q.set(i, i + 1, field.one());
    }
    q
}

/// `E_{1,n} - d E_{2,n} + E_{2,1} + E_{3,2} + … + E_{n,n-1}`.
pub fn cycle_matrix_inverse(field: &Field, n: usize, d: &FieldElement) -> Matrix {
    let mut m = Matrix::zero(field, n, n);
    m.set(0, n - 1, field.one());
    m.set(1, n - 1, m.get(1, n - 1) - d);
    for i in 1..n {
        m.set(i, i - 1, m.get(i, i - 1) + &field.one());
    }
    m
}

/// True iff [`cycle_matrix_inverse`] is a two-sided inverse of
/// [`cycle_matrix`] and the trace of the latter is `d`.
pub fn verify_cycle_inverse(field: &Field, n: usize, d: &FieldElement) -> Result<bool> {
    if n < 2 {
        return Err(Error::InvalidArgument("matrix size must be at least 2".into()));
    }
    if d.field() != field {
        return Err(Error::FieldMismatch);
    }
    let q = cycle_matrix(field, n, d);
    let qi = cycle_matrix_inverse(field, n, d);
    let id = Matrix::identity(field, n);
    Ok(q.mul(&qi)? == id && qi.mul(&q)? == id && &q.trace() == d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group_algebra::GroupTable;
    use crate::probe::algebra::{
        make_direct_sum, make_field_algebra, make_group_algebra_struct, make_matrix_algebra,
        make_triangular, power,
    };

    fn f(p: u64) -> Field {
        Field::prime(p).unwrap()
    }

    fn sv(a: &StructureAlgebra) -> Survey {
        survey(a, &Limits::default()).unwrap()
    }

    fn ga(p: u64, t: GroupTable) -> StructureAlgebra {
        make_group_algebra_struct(&f(p), &t).unwrap()
    }

    #[test]
    fn avoidance_examples() {
        let cube = sv(&power(&f(2), 3).unwrap());
        let v = check_unit_avoidance(&cube);
        assert_eq!(v.status, Status::ExceptionWitnessed);
        assert!(v.witnesses.iter().any(|w| w.functional == Some(vec![1, 1, 1])));
        let m2 = sv(&make_matrix_algebra(&f(2), 2).unwrap());
        assert_eq!(check_unit_avoidance(&m2).status, Status::Consistent);
        assert!(m2.records.iter().all(|r| r.meets_units()));
        let f3cube = sv(&power(&f(3), 3).unwrap());
        assert_eq!(f3cube.records.len(), 13);
        assert_eq!(check_unit_avoidance(&f3cube).status, Status::Consistent);
    }

    #[test]
    fn containment_examples() {
        let sq = sv(&power(&f(2), 2).unwrap());
        let v = check_unit_containment(&sq);
        assert_eq!(v.status, Status::ExceptionWitnessed);
        assert_eq!(v.witnesses[0].functional, Some(vec![1, 1]));
        assert_eq!(check_unit_containment(&sv(&power(&f(3), 1).unwrap())).status, Status::Consistent);
        assert_eq!(
            check_unit_containment(&sv(&make_matrix_algebra(&f(2), 2).unwrap())).status,
            Status::Consistent
        );
    }

    #[test]
    fn unflagged_exception_is_falsified() {
        // Strip the flags from F_2^3 by hand: same constants, no F components.
        let cube = power(&f(2), 3).unwrap();
        let mut meta = cube.metadata().clone();
        meta.f_components = 0;
        let d = cube.dim();
        let c = (0..d * d).flat_map(|ij| cube.constants_row(ij / d, ij % d).to_vec()).collect();
        let bare = StructureAlgebra::new(cube.field(), d, c, cube.one().to_vec(), meta).unwrap();
        let s = sv(&bare);
        let v = check_unit_avoidance(&s);
        assert_eq!(v.status, Status::Falsified);
        assert!(v.witnesses.iter().all(|w| w.functional.is_some() && w.element.is_some()));
        assert_eq!(check_declared_structure(&s, None).status, Status::Falsified);
    }

    #[test]
    fn group_algebra_examples() {
        let c2 = sv(&ga(2, GroupTable::cyclic(2).unwrap()));
        assert_eq!(c2.records.len(), 3);
        assert_eq!(check_group_algebra_hyperplanes(&c2).unwrap().status, Status::Consistent);
        let c3 = sv(&ga(2, GroupTable::cyclic(3).unwrap()));
        assert_eq!(c3.tally().ideal, 1);
        assert_eq!(check_group_algebra_hyperplanes(&c3).unwrap().status, Status::Consistent);
        let s3 = sv(&ga(2, GroupTable::symmetric(3).unwrap()));
        assert_eq!(s3.records.len(), 63);
        assert_eq!(check_group_algebra_hyperplanes(&s3).unwrap().status, Status::Consistent);
        assert!(matches!(
            check_group_algebra_hyperplanes(&sv(&power(&f(2), 2).unwrap())),
            Err(Error::NotGroupAlgebra(_))
        ));
    }

    #[test]
    fn augmentation_ideal_unique() {
        let c2 = GroupTable::cyclic(2).unwrap();
        let mut groups: Vec<GroupTable> = (2..=6).map(|n| GroupTable::cyclic(n).unwrap()).collect();
        groups.push(GroupTable::direct_product(&c2, &c2).unwrap());
        groups.push(GroupTable::symmetric(3).unwrap());
        for g in groups {
            let s = sv(&ga(2, g));
            assert_eq!(check_augmentation_ideal_unique(&s).unwrap().status, Status::Consistent);
        }
        let f3 = sv(&ga(3, GroupTable::cyclic(2).unwrap()));
        assert!(check_augmentation_ideal_unique(&f3).is_err());
    }

    #[test]
    fn nilpotents_inside() {
        let c2 = sv(&ga(2, GroupTable::cyclic(2).unwrap()));
        assert_eq!(check_nilpotents_inside(&c2).status, Status::Consistent);
        let m2 = sv(&make_matrix_algebra(&f(2), 2).unwrap());
        assert!(m2.records.iter().all(|r| r.meets_units() && r.units_inside < m2.units.len()));
        assert_eq!(check_nilpotents_inside(&m2).status, Status::Consistent);
        let t3 = sv(&make_triangular(&f(2), 3).unwrap());
        assert_eq!(check_nilpotents_inside(&t3).status, Status::Consistent);
    }

    #[test]
    fn simple_checks() {
        let one = sv(&make_matrix_algebra(&f(3), 1).unwrap());
        assert_eq!(one.records.len(), 1);
        assert!(!one.records[0].meets_units());
        assert_eq!(check_simple_unit_avoidance(&one).unwrap().status, Status::Consistent);
        let m2 = sv(&make_matrix_algebra(&f(2), 2).unwrap());
        assert_eq!(check_simple_unit_avoidance(&m2).unwrap().status, Status::Consistent);
        let m3 = sv(&make_matrix_algebra(&f(3), 2).unwrap());
        assert_eq!(m3.records.len(), 40);
        assert_eq!(check_simple_unit_containment(&m3).unwrap().status, Status::Consistent);
        let t = sv(&make_triangular(&f(2), 2).unwrap());
        assert!(matches!(check_simple_unit_avoidance(&t), Err(Error::NotSimple(_))));
        // Every nonzero element of F_4 is a unit, so no hyperplane avoids U.
        let f4 = sv(&make_field_algebra(&f(2), 2).unwrap());
        assert_eq!(check_simple_unit_avoidance(&f4).unwrap().status, Status::Consistent);
    }

    #[test]
    fn declared_structure_holds_on_constructions() {
        let f2 = f(2);
        let algebras = vec![
            power(&f2, 4).unwrap(),
            make_triangular(&f2, 3).unwrap(),
            make_direct_sum(&[make_field_algebra(&f2, 2).unwrap(), power(&f2, 1).unwrap()]).unwrap(),
            ga(3, GroupTable::cyclic(4).unwrap()),
            ga(3, GroupTable::symmetric(3).unwrap()),
            make_matrix_algebra(&f(3), 2).unwrap(),
        ];
        for a in algebras {
            let v = check_declared_structure(&sv(&a), Some(&ExpectedFlags::of(&a)));
            assert_eq!(v.status, Status::Consistent, "{a:?} {v:?}");
        }
    }

    #[test]
    fn cycle_inverse_displayed_form() {
        for p in [2, 3, 5] {
            let field = f(p);
            for n in 2..=5 {
                for d in field.elements() {
                    assert!(verify_cycle_inverse(&field, n, &d).unwrap());
                }
            }
        }
        let f5 = f(5);
        let q = cycle_matrix(&f5, 3, &f5.from_int(2));
        assert_eq!(q.trace(), f5.from_int(2));
        // d = 0 gives the cyclic permutation matrix.
        let m = cycle_matrix(&f5, 4, &f5.zero());
        assert_eq!(m.pow(4).unwrap(), Matrix::identity(&f5, 4));
    }

    #[test]
    fn cycle_inverse_textual_form_fails_beyond_two() {
        // E_{1,2} - d E_{2,n} + subdiagonal: agrees with the displayed form
        // only when n = 2.
        for p in [2, 3, 5] {
            let field = f(p);
            for n in 2..=5 {
                for d in field.elements() {
                    let mut t = Matrix::zero(&field, n, n);
                    t.set(0, 1, field.one());
                    t.set(1, n - 1, t.get(1, n - 1) - &d);
                    for i in 1..n {
                        t.set(i, i - 1, t.get(i, i - 1) + &field.one());
                    }
                    let q = cycle_matrix(&field, n, &d);
                    let ok = q.mul(&t).unwrap() == Matrix::identity(&field, n);
                    assert_eq!(ok, n == 2, "p={p} n={n} d={d:?}");
                }
            }
        }
    }
}
