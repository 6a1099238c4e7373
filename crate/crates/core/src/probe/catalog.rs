//! Line-oriented algebra catalogs.
//!
//! ```text
//! # comment
//! [part] NAME CTOR key=value ... [expect=FLAGS]
//! ```
//!
//! | CTOR         | keys                     | algebra                          |
//! |--------------|--------------------------|----------------------------------|
//! | `matrix`     | `field=q n=N`            | `M_N(F_q)`                       |
//! | `field`      | `base=q d=D`             | `F_{q^D}` as an `F_q`-algebra    |
//! | `power`      | `field=q j=J`            | `F_q^J`                          |
//! | `triangular` | `field=q n=N`            | upper triangular `N×N` over `F_q` |
//! | `group`      | `field=q group=G`        | `F_q G`, `G` like `C4`, `S3`, `C2xC2` |
//! | `sum`        | `of=NAME,NAME,...`       | direct sum of earlier records    |
//!
//! `q` is a prime power; `F_q` is built on the least irreducible modulus.
//! `FLAGS` is a comma list of `cube`, `square`, `simple`, or `none`.
//! `part` records are only building blocks and are not checked.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::ffield::{factor_integer, least_irreducible, Field};
use crate::group_algebra::GroupTable;

use super::algebra::{
    make_direct_sum, make_field_algebra, make_group_algebra_struct, make_matrix_algebra,
    make_triangular, power, StructureAlgebra,
};
use super::checks::ExpectedFlags;

pub const DEFAULT_CATALOG: &str = include_str!("../../data/default.catalog");

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub line: usize,
    pub algebra: StructureAlgebra,
    pub expected: Option<ExpectedFlags>,
}

#[derive(Clone, Debug, Default)]
pub struct Catalog {
    pub entries: Vec<CatalogEntry>,
}

impl Catalog {
    pub fn get(&self, name: &str) -> Option<&CatalogEntry> {
        self.entries.iter().find(|e| e.algebra.name() == name)
    }
}

pub fn default_catalog() -> Result<Catalog> {
    parse_catalog(DEFAULT_CATALOG)
}

/// `F_q` for a prime power `q`.
pub fn field_of_order(q: u64) -> Result<Field> {
    let f = factor_integer(q)?;
    match f.as_slice() {
        [(p, 1)] => Field::prime(*p),
        [(p, k)] => {
            let base = Field::prime(*p)?;
            Field::extension(&base, &least_irreducible(&base, *k as usize)?)
        }
        _ => Err(Error::InvalidArgument(format!("{q} is not a prime power"))),
    }
}

/// `C<n>` and `S<n>`, joined by `x` for direct products.
pub fn parse_group(spec: &str) -> Result<GroupTable> {
    let mut acc: Option<GroupTable> = None;
    for part in spec.split('x') {
        let bad = || Error::InvalidArgument(format!("unknown group {part:?}"));
        let (kind, n) = part.split_at(part.len().min(1));
        let n: usize = n.parse().map_err(|_| bad())?;
        let g = match kind {
            "C" => GroupTable::cyclic(n)?,
            "S" => GroupTable::symmetric(n)?,
            _ => return Err(bad()),
        };
        acc = Some(match acc {
            None => g,
            Some(a) => GroupTable::direct_product(&a, &g)?,
        });
    }
    acc.ok_or_else(|| Error::InvalidArgument("empty group".into()))
}

fn parse_flags(s: &str) -> Result<ExpectedFlags> {
    let mut f = ExpectedFlags::default();
    if s == "none" {
        return Ok(f);
    }
    for flag in s.split(',') {
        match flag {
            "cube" => f.cube = true,
            "square" => f.square = true,
            "simple" => f.simple = true,
            _ => return Err(Error::InvalidArgument(format!("unknown flag {flag:?}"))),
        }
    }
    Ok(f)
}

pub fn parse_catalog(text: &str) -> Result<Catalog> {
    let mut defined: BTreeMap<String, StructureAlgebra> = BTreeMap::new();
    let mut catalog = Catalog::default();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let err = |msg: String| Error::Catalog { line, msg };
        let mut words = content.split_whitespace().peekable();
        let part = words.next_if_eq(&"part").is_some();
        let name = words.next().ok_or_else(|| err("missing name".into()))?;
        let ctor = words.next().ok_or_else(|| err("missing constructor".into()))?;
        let mut keys: BTreeMap<&str, &str> = BTreeMap::new();
        for w in words {
            let (k, v) = w
                .split_once('=')
                .ok_or_else(|| err(format!("expected key=value, got {w:?}")))?;
            if keys.insert(k, v).is_some() {
                return Err(err(format!("duplicate key {k}")));
            }
        }
        if defined.contains_key(name) {
            return Err(err(format!("duplicate name {name}")));
        }
        let expected = keys
            .remove("expect")
            .map(parse_flags)
            .transpose()
            .map_err(|e| err(e.to_string()))?;
        let algebra = build(ctor, &mut keys, &defined)
            .map_err(|e| err(e.to_string()))?
            .renamed(name);
        if let Some(k) = keys.keys().next() {
            return Err(err(format!("unused key {k}")));
        }
        defined.insert(name.to_string(), algebra.clone());
        if !part {
            catalog.entries.push(CatalogEntry {
                line,
                algebra,
                expected,
            });
        }
    }
    Ok(catalog)
}

fn build(
    ctor: &str,
    keys: &mut BTreeMap<&str, &str>,
    defined: &BTreeMap<String, StructureAlgebra>,
) -> Result<StructureAlgebra> {
    let mut take = |k: &str| {
        keys.remove(k)
            .ok_or_else(|| Error::InvalidArgument(format!("{ctor} needs {k}=")))
    };
    let num = |s: &str| {
        s.parse::<u64>()
            .map_err(|_| Error::InvalidArgument(format!("not a number: {s:?}")))
    };
    match ctor {
        "matrix" => {
            let f = field_of_order(num(take("field")?)?)?;
            make_matrix_algebra(&f, num(take("n")?)? as usize)
        }
        "field" => {
            let f = field_of_order(num(take("base")?)?)?;
            make_field_algebra(&f, num(take("d")?)? as usize)
        }
        "power" => {
            let f = field_of_order(num(take("field")?)?)?;
            power(&f, num(take("j")?)? as usize)
        }
        "triangular" => {
            let f = field_of_order(num(take("field")?)?)?;
            make_triangular(&f, num(take("n")?)? as usize)
        }
        "group" => {
            let f = field_of_order(num(take("field")?)?)?;
            make_group_algebra_struct(&f, &parse_group(take("group")?)?)
        }
        "sum" => {
            let parts = take("of")?
                .split(',')
                .map(|n| {
                    defined
                        .get(n)
                        .cloned()
                        .ok_or_else(|| Error::InvalidArgument(format!("undefined part {n}")))
                })
                .collect::<Result<Vec<_>>>()?;
            make_direct_sum(&parts)
        }
        _ => Err(Error::InvalidArgument(format!("unknown constructor {ctor}"))),
    }
}
