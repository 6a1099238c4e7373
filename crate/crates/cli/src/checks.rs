//! Report records for towers and algebras.

use std::collections::BTreeSet;

use normbasis::ffield::gcd;
use normbasis::group_algebra::{GroupAlgebra, GroupTable, NormalBridge};
use normbasis::normal_lab::{
    compute_c, enumerate_b, find_primitive_normal, mult_order, multiplier_sweep,
    normal_count_closed_form, verify_hom_iso, w_count, NormalSet,
};
use normbasis::probe::{
    jacobson_radical, run_all, verify_cycle_inverse, CatalogEntry, Survey, Verdict,
};
use normbasis::{Error, Field, FieldElement, Limits, Result, Status, Tower};
use serde_json::Value;

use crate::report::{Record, WitnessRecord};

/// Bridge checks transport every `r ∈ KG` under every `γ ∈ L*`; above this
/// many elements they are skipped.
pub const BRIDGE_CAP: u64 = 256;

/// Normal elements used per tower by the bridge check.
pub const BRIDGE_ELEMENTS: usize = 3;

/// Towers `(p, k, m)` covered by `suite`.
pub const SUITE_TOWERS: &[(u64, usize, usize)] = &[
    (2, 1, 2), (2, 1, 3), (2, 1, 4), (2, 1, 5), (2, 1, 6), (2, 1, 7), (2, 1, 8), (2, 1, 9), (2, 1, 10),
    (3, 1, 2), (3, 1, 3), (3, 1, 4), (3, 1, 5), (3, 1, 6),
    (5, 1, 2), (5, 1, 3), (5, 1, 4),
    (7, 1, 2), (7, 1, 3),
    (2, 2, 2), (2, 2, 3), (2, 2, 4),
    (2, 3, 2), (3, 2, 2),
];

fn encodings(xs: &[FieldElement]) -> Vec<u64> {
    xs.iter().map(FieldElement::encode).collect()
}

/// Frobenius order, trace kernel dimension, and the moduli.
pub fn tower_info(t: &Tower) -> Result<Record> {
    let mut r = Record::new("tower", &t.id());
    let kernel = t.trace_kernel();
    let gen = if t.m() == 1 {
        t.top_field().one()
    } else {
        let mut coords = vec![t.base_field().zero(); t.m()];
        coords[1] = t.base_field().one();
        t.from_coords(&coords)?
    };
    let mut exact_order = t.apply_tau(t.m() as i64, &gen)? == gen;
    for i in 1..t.m() {
        if t.apply_tau(i as i64, &gen)? == gen {
            exact_order = false;
        }
    }
    r.fact("p", t.p())
        .fact("k", t.k() as u64)
        .fact("m", t.m() as u64)
        .fact("q", t.q())
        .fact("order", t.order())
        .fact("trace_kernel_dimension", kernel.dimension() as u64)
        .fact("trace_kernel_basis", encodings(kernel.basis()));
    r.require(
        exact_order,
        WitnessRecord::element("Frobenius order differs from m on the generator", gen.encode()),
    );
    r.require(
        kernel.dimension() + 1 == t.m(),
        WitnessRecord::note(format!("trace kernel has dimension {}", kernel.dimension())),
    );
    Ok(r)
}

/// `|B|` three ways: rank tests, units of `F_q C_m`, and the closed form.
pub fn normal_count(t: &Tower, b: &NormalSet, limits: &Limits) -> Result<Record> {
    let mut r = Record::new("normal-count", &t.id());
    let closed = normal_count_closed_form(t)?;
    let kg = GroupAlgebra::new(t.base_field(), &GroupTable::cyclic(t.m())?);
    let card = kg.cardinality().unwrap_or(u64::MAX);
    if card > limits.max_card {
        return Err(Error::CapExceeded {
            what: "group algebra units".into(),
            size: card,
            cap: limits.max_card,
        });
    }
    let units = kg.elements().filter(|x| x.is_unit()).count() as u64;
    let n = b.len() as u64;
    r.fact("normal_elements", n)
        .fact("group_algebra_units", units)
        .fact("closed_form", closed)
        .fact("least_normal", b.members()[0].encode());
    r.require(
        n == units && n == closed,
        WitnessRecord::note(format!("rank count {n}, unit count {units}, closed form {closed}")),
    );
    Ok(r)
}

pub fn primitive_normal(t: &Tower, limits: &Limits) -> Result<Record> {
    let mut r = Record::new("primitive-normal", &t.id());
    match find_primitive_normal(t, limits) {
        Ok(a) => {
            let order = mult_order(t, &a)?;
            r.fact("witness", a.encode()).fact("multiplicative_order", order);
            r.witnesses.push(WitnessRecord::element("least primitive normal element", a.encode()));
            r.require(
                order == t.order() - 1,
                WitnessRecord::element("witness is not primitive", a.encode()),
            );
        }
        Err(Error::NotFound(_)) => {
            r.require(
                false,
                WitnessRecord::note(format!("searched all {} units", t.order() - 1)),
            );
        }
        Err(e) => return Err(e),
    }
    Ok(r)
}

/// The four multiplier conditions agree on every `γ ∈ L*`.
pub fn multiplier_conditions(t: &Tower, b: &NormalSet, limits: &Limits) -> Result<Record> {
    let mut r = Record::new("multiplier-conditions", &t.id());
    let sweep = multiplier_sweep(t, b, limits)?;
    let mut members = 0u64;
    for (g, c) in &sweep {
        if c.c1 && c.agree() {
            members += 1;
        }
        r.require(
            c.agree(),
            WitnessRecord::element(format!("conditions disagree: {:?}", c.as_array()), g.encode()),
        );
    }
    r.fact("checked", sweep.len() as u64).fact("all_true", members);
    Ok(r)
}

/// `|C| = w (q - 1)`, `w = gcd(m, q - 1)`, and `C/K* ≅ Hom(G, K*)`.
pub fn multiplier_group(t: &Tower, limits: &Limits) -> Result<Record> {
    let mut r = Record::new("multiplier-group", &t.id());
    let c = compute_c(t, limits)?;
    let w = w_count(t);
    let g = gcd(t.m() as u64, t.q() - 1);
    let iso = verify_hom_iso(t, limits)?;
    r.fact("c_order", c.len() as u64)
        .fact("w", w)
        .fact("gcd_m_q_minus_1", g)
        .fact("quotient_order", iso.quotient_order)
        .fact("hom_count", iso.hom_count)
        .fact("cocycle_homomorphism", iso.homomorphism)
        .fact("cocycle_injective", iso.injective)
        .fact("cocycle_surjective", iso.surjective);
    r.require(
        c.len() as u64 == w * (t.q() - 1),
        WitnessRecord::note(format!("|C| = {} but w(q-1) = {}", c.len(), w * (t.q() - 1))),
    );
    r.require(w == g, WitnessRecord::note(format!("w = {w} but gcd = {g}")));
    r.require(
        iso.quotient_order == w && iso.hom_count == w,
        WitnessRecord::note(format!(
            "|C/K*| = {}, |Hom| = {}, w = {w}",
            iso.quotient_order, iso.hom_count
        )),
    );
    if !iso.holds() {
        let (note, elems) = iso
            .witness
            .clone()
            .unwrap_or_else(|| ("cocycle map check failed".into(), Vec::new()));
        r.require(
            false,
            WitnessRecord {
                note,
                hyperplane: None,
                elements: elems,
            },
        );
    }
    Ok(r)
}

/// `ã(U(KG)) = B`, `ã(ωKG) = N`, the transport diagram commutes for every
/// `γ ∈ L*`, and `Γ(ωKG)` has no units for `γ ∈ C`.
pub fn normal_bridge(t: &Tower, b: &NormalSet, limits: &Limits) -> Result<Record> {
    let mut r = Record::new("normal-bridge", &t.id());
    let c = compute_c(t, limits)?;
    let b_set: BTreeSet<u64> = encodings(b.members()).into_iter().collect();
    let n_set: BTreeSet<u64> = encodings(&t.trace_kernel().elements()).into_iter().collect();
    let mut used = Vec::new();
    for a in b.members().iter().take(BRIDGE_ELEMENTS) {
        used.push(a.encode());
        let bridge = NormalBridge::new(t, a)?;
        let kg = bridge.group_algebra().clone();
        let all: Vec<_> = kg.elements().collect();
        let mut unit_images = BTreeSet::new();
        let mut aug_images = BTreeSet::new();
        for x in &all {
            let img = bridge.apply(x)?.encode();
            if x.is_unit() {
                unit_images.insert(img);
            }
            if x.augmentation().is_zero() {
                aug_images.insert(img);
            }
        }
        r.require(
            unit_images == b_set,
            WitnessRecord::element("unit images differ from the normal set", a.encode()),
        );
        r.require(
            aug_images == n_set,
            WitnessRecord::element("augmentation images differ from the trace kernel", a.encode()),
        );
        for g in t.top_field().units() {
            for x in &all {
                if let Err(e) = bridge.gamma_transport(&g, x) {
                    r.require(
                        false,
                        WitnessRecord {
                            note: format!("transport failed: {e}"),
                            hyperplane: None,
                            elements: vec![a.encode(), g.encode(), x.encode()],
                        },
                    );
                }
            }
        }
        for g in c.members() {
            for x in all.iter().filter(|x| x.augmentation().is_zero()) {
                let y = bridge.gamma_transport(g, x)?;
                r.require(
                    !y.is_unit(),
                    WitnessRecord {
                        note: "transported augmentation element is a unit".into(),
                        hyperplane: None,
                        elements: vec![a.encode(), g.encode(), x.encode()],
                    },
                );
            }
        }
    }
    r.fact("normal_elements_used", used)
        .fact("c_order", c.len() as u64);
    Ok(r)
}

/// Every record for one tower, in fixed order.
pub fn tower_records(t: &Tower, sections: &[&str], limits: &Limits, timing: bool) -> Result<Vec<Record>> {
    let mut out = Vec::new();
    let needs_b = sections.iter().any(|s| matches!(*s, "normal" | "gamma"));
    let b = if needs_b {
        Some(enumerate_b(t, limits)?)
    } else {
        None
    };
    for s in sections {
        match *s {
            "tower" => out.push(timed(timing, || tower_info(t))?),
            "normal" => out.push(timed(timing, || normal_count(t, b.as_ref().unwrap(), limits))?),
            "pnb" => out.push(timed(timing, || primitive_normal(t, limits))?),
            "gamma" => {
                let b = b.as_ref().unwrap();
                out.push(timed(timing, || multiplier_conditions(t, b, limits))?);
                out.push(timed(timing, || multiplier_group(t, limits))?);
                if t.order() <= BRIDGE_CAP.min(limits.max_card) {
                    out.push(timed(timing, || normal_bridge(t, b, limits))?);
                }
            }
            other => unreachable!("unknown section {other}"),
        }
    }
    Ok(out)
}

fn verdict_record(v: &Verdict) -> Record {
    let mut r = Record::new(v.claim.id(), &v.algebra);
    r.status = v.status;
    r.witnesses = v
        .witnesses
        .iter()
        .map(|w| WitnessRecord {
            note: w.note.clone(),
            hyperplane: w.functional.clone(),
            elements: w.element.into_iter().collect(),
        })
        .collect();
    if let Some(remark) = &v.remark {
        r.fact("reading", remark.as_str());
    }
    r
}

fn structure_record(s: &Survey) -> Record {
    let a = &s.algebra;
    let mut r = Record::new("structure", a.name());
    let t = s.tally();
    r.fact("field_order", a.field().order())
        .fact("dimension", a.dim() as u64)
        .fact("units", s.units.len() as u64)
        .fact("nilpotents", s.nilpotents.len() as u64)
        .fact("hyperplanes", s.records.len() as u64)
        .fact("ideal", t.ideal as u64)
        .fact("mixed", t.mixed as u64)
        .fact("avoids_units", t.avoids_units as u64)
        .fact("contains_units", t.contains_units as u64)
        .fact("f_components", a.metadata().f_components as u64);
    match jacobson_radical(a) {
        Ok(j) => {
            r.fact("radical_dimension", j.len() as u64);
        }
        Err(Error::Falsified { claim, witness }) => {
            r.require(false, WitnessRecord::note(format!("{claim}: {witness}")));
        }
        Err(Error::CapExceeded { .. }) => {
            r.fact("radical_dimension", Value::Null);
        }
        Err(e) => {
            r.require(false, WitnessRecord::note(e.to_string()));
        }
    }
    r
}

/// Whether the algebra fits the scan caps.
pub fn fits(entry: &CatalogEntry, limits: &Limits) -> std::result::Result<(), String> {
    let a = &entry.algebra;
    let card = a.cardinality().unwrap_or(u64::MAX);
    if card > limits.max_card {
        return Err(format!("{} elements exceed max-card {}", card, limits.max_card));
    }
    let h = normbasis::probe::hyperplane_count(a).unwrap_or(u64::MAX);
    if h > limits.max_hyperplanes {
        return Err(format!("{h} hyperplanes exceed max-hyperplanes {}", limits.max_hyperplanes));
    }
    Ok(())
}

/// The structure record followed by every applicable verdict.
pub fn algebra_records(entry: &CatalogEntry, limits: &Limits, timing: bool) -> Result<Vec<Record>> {
    let start = std::time::Instant::now();
    let (survey, verdicts) = run_all(&entry.algebra, entry.expected.as_ref(), limits)?;
    let mut out = vec![structure_record(&survey)];
    out.extend(verdicts.iter().map(verdict_record));
    if timing {
        out[0].timing_ms = Some(elapsed_ms(start));
    }
    Ok(out)
}

/// The cyclic matrix and its displayed inverse, for every `d ∈ F`.
pub fn cycle_inverse_records(timing: bool) -> Result<Vec<Record>> {
    let mut out = Vec::new();
    for p in [2u64, 3, 5] {
        let field = Field::prime(p)?;
        for n in 2..=5usize {
            out.push(timed(timing, || {
                let mut r = Record::new("cycle-inverse", &format!("{field} n={n}"));
                let mut checked = 0u64;
                for d in field.elements() {
                    checked += 1;
                    r.require(
                        verify_cycle_inverse(&field, n, &d)?,
                        WitnessRecord::element("inverse or trace fails", d.encode()),
                    );
                }
                r.fact("values_checked", checked);
                Ok(r)
            })?);
        }
    }
    Ok(out)
}

fn elapsed_ms(start: std::time::Instant) -> f64 {
    (start.elapsed().as_secs_f64() * 1e6).round() / 1e3
}

fn timed(timing: bool, f: impl FnOnce() -> Result<Record>) -> Result<Record> {
    let start = std::time::Instant::now();
    let mut r = f()?;
    if timing {
        r.timing_ms = Some(elapsed_ms(start));
    }
    Ok(r)
}

pub fn is_falsified(r: &Record) -> bool {
    r.status == Status::Falsified
}
