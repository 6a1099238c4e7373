//! Fixtures shared by the criterion benchmarks under `benches/`.

use normbasis::probe::{make_group_algebra_struct, make_matrix_algebra, StructureAlgebra};
use normbasis::{Field, GroupTable, Tower};

/// Towers of increasing size, small enough for exhaustive scans.
pub fn towers() -> Vec<Tower> {
    [(2, 1, 6), (3, 1, 4), (2, 2, 4), (2, 1, 10)]
        .into_iter()
        .map(|(p, k, m)| Tower::build(p, k, m).expect("valid tower"))
        .collect()
}

pub fn algebras() -> Vec<StructureAlgebra> {
    let f2 = Field::prime(2).unwrap();
    let f3 = Field::prime(3).unwrap();
    vec![
        make_matrix_algebra(&f2, 2).unwrap(),
        make_matrix_algebra(&f3, 2).unwrap(),
        make_group_algebra_struct(&f2, &GroupTable::symmetric(3).unwrap()).unwrap(),
    ]
}
