//! Normal elements of `L/K`, primitive elements, and the group `C` of
//! multipliers that preserve the normal set.
//!
//! `B` is the set of `α ∈ L` whose conjugates `σ^0(α), …, σ^{m-1}(α)` form a
//! `K`-basis. For `γ ∈ L*` four conditions are tested independently:
//!
//! 1. `γB ⊆ B`,
//! 2. `γB = B`,
//! 3. `σ^i(γ)/γ ∈ K*` for every `i`,
//! 4. `γ^w ∈ K*`, where `w` counts the `m`-th roots of unity in `K*`.
//!
//! `C` is defined here through (4) and then cross-checked against the other
//! three. The map `γ ↦ (σ^i ↦ σ^i(γ)/γ)` sends `C/K*` to `Hom(G, K*)`;
//! [`verify_hom_iso`] checks that it is a well-defined bijective homomorphism.

use std::collections::{BTreeSet, HashMap, HashSet};

use crate::error::{Error, Result};
use crate::ffield::{factor_integer, factor_poly, FieldElement, Polynomial};
use crate::linalg::Matrix;
use crate::tower::{TraceData, Tower};
use crate::Limits;

fn check_top(tower: &Tower, alpha: &FieldElement) -> Result<()> {
    if alpha.field() == tower.top_field() {
        Ok(())
    } else {
        Err(Error::FieldMismatch)
    }
}

/// Conjugates `σ^0(α), …, σ^{m-1}(α)`.
pub fn conjugates(tower: &Tower, alpha: &FieldElement) -> Result<Vec<FieldElement>> {
    let mut out = Vec::with_capacity(tower.m());
    let mut c = alpha.clone();
    for _ in 0..tower.m() {
        let next = tower.sigma(&c)?;
        out.push(c);
        c = next;
    }
    Ok(out)
}

/// Rank test on the `K`-coordinates of the conjugates of `alpha`.
pub fn is_normal(tower: &Tower, alpha: &FieldElement) -> Result<bool> {
    check_top(tower, alpha)?;
    if alpha.is_zero() {
        return Ok(false);
    }
    let rows = conjugates(tower, alpha)?
        .iter()
        .map(|c| tower.coords(c))
        .collect::<Result<Vec<_>>>()?;
    Ok(Matrix::from_rows(tower.base_field(), rows)?.rank() == tower.m())
}

/// The set `B` of normal elements, sorted by canonical encoding.
#[derive(Clone, Debug)]
pub struct NormalSet {
    tower: Tower,
    members: Vec<FieldElement>,
    lookup: HashSet<u64>,
}

impl NormalSet {
    pub fn tower(&self) -> &Tower {
        &self.tower
    }

    pub fn members(&self) -> &[FieldElement] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, alpha: &FieldElement) -> bool {
        alpha.field() == self.tower.top_field() && self.lookup.contains(&alpha.encode())
    }

    pub(crate) fn encodings(&self) -> &HashSet<u64> {
        &self.lookup
    }
}

pub fn enumerate_b(tower: &Tower, limits: &Limits) -> Result<NormalSet> {
    limits.check_card("normal-set scan", tower.order())?;
    let mut members = Vec::new();
    for alpha in tower.top_field().elements() {
        if is_normal(tower, &alpha)? {
            members.push(alpha);
        }
    }
    if members.is_empty() {
        return Err(Error::Falsified {
            claim: "L/K has a normal element".into(),
            witness: tower.id(),
        });
    }
    let lookup = members.iter().map(FieldElement::encode).collect();
    Ok(NormalSet {
        tower: tower.clone(),
        members,
        lookup,
    })
}

/// Multiplicative orders in `L*`, with `|L*|` factored once.
struct OrderOracle {
    group_order: u64,
    primes: Vec<u64>,
}

impl OrderOracle {
    fn new(tower: &Tower) -> Result<Self> {
        let group_order = tower.order() - 1;
        let primes = factor_integer(group_order)?.into_iter().map(|(p, _)| p).collect();
        Ok(Self {
            group_order,
            primes,
        })
    }

    fn order(&self, alpha: &FieldElement) -> u64 {
        let mut order = self.group_order;
        for &p in &self.primes {
            while order % p == 0 && alpha.pow(order / p).is_one() {
                order /= p;
            }
        }
        order
    }
}

pub fn mult_order(tower: &Tower, alpha: &FieldElement) -> Result<u64> {
    check_top(tower, alpha)?;
    if alpha.is_zero() {
        return Err(Error::ZeroElement);
    }
    Ok(OrderOracle::new(tower)?.order(alpha))
}

pub fn is_primitive(tower: &Tower, alpha: &FieldElement) -> Result<bool> {
    Ok(mult_order(tower, alpha)? == tower.order() - 1)
}

/// The least (canonical encoding) element of `L` that is both primitive and
/// normal.
pub fn find_primitive_normal(tower: &Tower, limits: &Limits) -> Result<FieldElement> {
    limits.check_card("primitive-normal scan", tower.order())?;
    let oracle = OrderOracle::new(tower)?;
    for alpha in tower.top_field().units() {
        if oracle.order(&alpha) == oracle.group_order && is_normal(tower, &alpha)? {
            return Ok(alpha);
        }
    }
    Err(Error::NotFound(format!("primitive normal element of {}", tower.id())))
}

/// `w = |{μ ∈ K* : μ^m = 1}|`, counted over `K*`.
pub fn w_count(tower: &Tower) -> u64 {
    roots_of_unity(tower).len() as u64
}

/// `S = {μ ∈ K* : μ^m = 1}` in ascending encoding.
pub fn roots_of_unity(tower: &Tower) -> Vec<FieldElement> {
    let m = tower.m() as u64;
    tower
        .base_field()
        .units()
        .filter(|mu| mu.pow(m).is_one())
        .collect()
}

/// Closed form for `|B|`: with `x^m - 1 = Π f_i^{e_i}` over `K` and
/// `d_i = deg f_i`, `|B| = Π q^{d_i (e_i - 1)} (q^{d_i} - 1)`.
pub fn normal_count_closed_form(tower: &Tower) -> Result<u64> {
    let base = tower.base_field();
    let m = tower.m();
    let mut c = vec![base.zero(); m + 1];
    c[0] = -base.one();
    c[m] = base.one();
    let poly = Polynomial::from_elements(base, c)?;
    let q = tower.q();
    Ok(factor_poly(&poly)?
        .iter()
        .map(|(f, e)| {
            let d = f.degree().unwrap() as u32;
            q.pow(d * (*e as u32 - 1)) * (q.pow(d) - 1)
        })
        .product())
}

/// A homomorphism `G → K*`, stored as the image of `σ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Character {
    value: FieldElement,
}

impl Character {
    pub fn at_sigma(&self) -> &FieldElement {
        &self.value
    }

    /// Image of `σ^i`.
    pub fn eval(&self, i: usize) -> FieldElement {
        self.value.pow(i as u64)
    }

    pub fn is_trivial(&self) -> bool {
        self.value.is_one()
    }

    pub fn mul(&self, other: &Character) -> Character {
        Character {
            value: &self.value * &other.value,
        }
    }
}

/// `Hom(G, K*)`, one character per `m`-th root of unity in `K*`.
#[derive(Clone, Debug)]
pub struct CharacterTable {
    homs: Vec<Character>,
}

impl CharacterTable {
    pub fn new(tower: &Tower) -> Self {
        Self {
            homs: roots_of_unity(tower)
                .into_iter()
                .map(|value| Character { value })
                .collect(),
        }
    }

    pub fn homs(&self) -> &[Character] {
        &self.homs
    }

    pub fn len(&self) -> usize {
        self.homs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.homs.is_empty()
    }

    pub fn contains(&self, chi: &Character) -> bool {
        self.homs.contains(chi)
    }
}

/// Four characterizations of `γ` preserving the normal set: `γB ⊆ B`,
/// `γB = B`, `σ^i(γ)/γ ∈ K` for all `i`, and `γ^w ∈ K`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MultiplierConditions {
    pub c1: bool,
    pub c2: bool,
    pub c3: bool,
    pub c4: bool,
}

impl MultiplierConditions {
    pub fn agree(&self) -> bool {
        self.c1 == self.c2 && self.c2 == self.c3 && self.c3 == self.c4
    }

    pub fn as_array(&self) -> [bool; 4] {
        [self.c1, self.c2, self.c3, self.c4]
    }
}

pub fn multiplier_conditions(
    tower: &Tower,
    gamma: &FieldElement,
    b: &NormalSet,
) -> Result<MultiplierConditions> {
    conditions_with_w(tower, gamma, b, w_count(tower))
}

fn conditions_with_w(
    tower: &Tower,
    gamma: &FieldElement,
    b: &NormalSet,
    w: u64,
) -> Result<MultiplierConditions> {
    check_top(tower, gamma)?;
    if gamma.is_zero() {
        return Err(Error::ZeroElement);
    }
    let image: Vec<u64> = b.members().iter().map(|beta| (gamma * beta).encode()).collect();
    let c1 = image.iter().all(|e| b.encodings().contains(e));
    let image_set: HashSet<u64> = image.into_iter().collect();
    let c2 = &image_set == b.encodings();
    let inv = gamma.inv()?;
    let mut c3 = true;
    for i in 0..tower.m() {
        let ratio = &tower.apply_tau(i as i64, gamma)? * &inv;
        if !tower.in_base(&ratio) {
            c3 = false;
            break;
        }
    }
    let c4 = tower.in_base(&gamma.pow(w));
    Ok(MultiplierConditions { c1, c2, c3, c4 })
}

/// Conditions for every `γ ∈ L*`, in ascending encoding.
pub fn multiplier_sweep(
    tower: &Tower,
    b: &NormalSet,
    limits: &Limits,
) -> Result<Vec<(FieldElement, MultiplierConditions)>> {
    limits.check_card("condition sweep", tower.order())?;
    let w = w_count(tower);
    tower
        .top_field()
        .units()
        .map(|g| {
            let c = conditions_with_w(tower, &g, b, w)?;
            Ok((g, c))
        })
        .collect()
}

/// The group `C = {γ ∈ L* : γ^w ∈ K*}`.
#[derive(Clone, Debug)]
pub struct GammaGroup {
    tower: Tower,
    members: Vec<FieldElement>,
    w: u64,
}

impl GammaGroup {
    pub fn members(&self) -> &[FieldElement] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn w(&self) -> u64 {
        self.w
    }

    pub fn contains(&self, gamma: &FieldElement) -> bool {
        self.members.binary_search(gamma).is_ok()
    }

    /// `|C/K*|`.
    pub fn quotient_order(&self) -> u64 {
        self.members.len() as u64 / (self.tower.q() - 1)
    }
}

pub fn compute_c(tower: &Tower, limits: &Limits) -> Result<GammaGroup> {
    limits.check_card("C scan", tower.order())?;
    let w = w_count(tower);
    let members: Vec<FieldElement> = tower
        .top_field()
        .units()
        .filter(|g| tower.in_base(&g.pow(w)))
        .collect();
    let set: HashSet<u64> = members.iter().map(FieldElement::encode).collect();
    let falsified = |claim: &str, witness: String| Error::Falsified {
        claim: claim.to_string(),
        witness,
    };
    for c in tower.base_field().units() {
        let e = tower.embed(&c)?;
        if !set.contains(&e.encode()) {
            return Err(falsified("K* ⊆ C", e.encode().to_string()));
        }
    }
    for a in &members {
        let inv = a.inv()?;
        if !set.contains(&inv.encode()) {
            return Err(falsified("C closed under inverses", a.encode().to_string()));
        }
        for b in &members {
            if !set.contains(&(a * b).encode()) {
                return Err(falsified(
                    "C closed under products",
                    format!("{},{}", a.encode(), b.encode()),
                ));
            }
        }
    }
    Ok(GammaGroup {
        tower: tower.clone(),
        members,
        w,
    })
}

/// `[σ^i(γ)/γ for i in 0..m]` as elements of `K`; the set of values is
/// `S_γ`. Fails with [`Error::NotInC`] when some ratio leaves `K`.
pub fn cocycle_values(tower: &Tower, gamma: &FieldElement) -> Result<Vec<FieldElement>> {
    check_top(tower, gamma)?;
    let inv = gamma.inv().map_err(|_| Error::ZeroElement)?;
    (0..tower.m())
        .map(|i| {
            let ratio = &tower.apply_tau(i as i64, gamma)? * &inv;
            tower.as_base(&ratio).ok_or(Error::NotInC)
        })
        .collect()
}

/// The character `σ^i ↦ σ^i(γ)/γ`.
pub fn cocycle(tower: &Tower, gamma: &FieldElement) -> Result<Character> {
    let mut values = cocycle_values(tower, gamma)?;
    let idx = 1 % tower.m();
    Ok(Character {
        value: values.swap_remove(idx),
    })
}

/// Outcome of checking that the cocycle map induces `C/K* ≅ Hom(G, K*)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomIsoReport {
    pub c_order: u64,
    pub quotient_order: u64,
    pub hom_count: u64,
    pub w: u64,
    /// Constant on `K*`-cosets.
    pub coset_constant: bool,
    /// `γ_{i+j} = γ_i · γ_j` for every `γ ∈ C`.
    pub cocycle_identity: bool,
    /// `χ(γ₁γ₂) = χ(γ₁)χ(γ₂)`.
    pub homomorphism: bool,
    /// Trivial character exactly on `K*`.
    pub injective: bool,
    /// Image is all of `Hom(G, K*)`.
    pub surjective: bool,
    /// First failing claim and the encodings that witness it.
    pub witness: Option<(String, Vec<u64>)>,
}

impl HomIsoReport {
    pub fn holds(&self) -> bool {
        self.coset_constant
            && self.cocycle_identity
            && self.homomorphism
            && self.injective
            && self.surjective
    }
}

pub fn verify_hom_iso(tower: &Tower, limits: &Limits) -> Result<HomIsoReport> {
    let c = compute_c(tower, limits)?;
    let table = CharacterTable::new(tower);
    let m = tower.m();
    let mut witness: Option<(String, Vec<u64>)> = None;
    let mut note = |claim: &str, w: Vec<u64>| {
        if witness.is_none() {
            witness = Some((claim.to_string(), w));
        }
    };

    let mut values: HashMap<u64, Vec<FieldElement>> = HashMap::new();
    for g in c.members() {
        values.insert(g.encode(), cocycle_values(tower, g)?);
    }
    let chi = |g: &FieldElement| values[&g.encode()][1 % m].clone();

    let mut cocycle_identity = true;
    for g in c.members() {
        let v = &values[&g.encode()];
        for i in 0..m {
            for j in 0..m {
                if v[(i + j) % m] != &v[i] * &v[j] {
                    cocycle_identity = false;
                    note("cocycle identity", vec![g.encode(), i as u64, j as u64]);
                }
            }
        }
    }

    let mut coset_constant = true;
    for g in c.members() {
        for k in tower.base_field().units() {
            let gk = g * &tower.embed(&k)?;
            if values.get(&gk.encode()) != Some(&values[&g.encode()]) {
                coset_constant = false;
                note("constant on cosets", vec![g.encode(), k.encode()]);
            }
        }
    }

    let mut homomorphism = true;
    for a in c.members() {
        for b in c.members() {
            let ab = a * b;
            let Some(vab) = values.get(&ab.encode()) else {
                homomorphism = false;
                note("product stays in C", vec![a.encode(), b.encode()]);
                continue;
            };
            if vab[1 % m] != &chi(a) * &chi(b) {
                homomorphism = false;
                note("homomorphism", vec![a.encode(), b.encode()]);
            }
        }
    }

    let mut injective = true;
    for g in c.members() {
        if chi(g).is_one() != tower.in_base(g) {
            injective = false;
            note("kernel equals K*", vec![g.encode()]);
        }
    }

    let image: BTreeSet<Character> = c
        .members()
        .iter()
        .map(|g| Character { value: chi(g) })
        .collect();
    let all: BTreeSet<Character> = table.homs().iter().cloned().collect();
    let surjective = image == all;
    if !surjective {
        let missing = all.difference(&image).map(|h| h.value.encode()).collect();
        note("image is Hom(G, K*)", missing);
    }

    Ok(HomIsoReport {
        c_order: c.len() as u64,
        quotient_order: c.quotient_order(),
        hom_count: table.len() as u64,
        w: c.w(),
        coset_constant,
        cocycle_identity,
        homomorphism,
        injective,
        surjective,
        witness,
    })
}

/// Whether `σ(γN) = γN` for the trace kernel `N`.
pub fn scaled_kernel_is_stable(
    tower: &Tower,
    kernel: &TraceData,
    gamma: &FieldElement,
) -> Result<bool> {
    check_top(tower, gamma)?;
    let scaled: HashSet<u64> = kernel
        .elements()
        .iter()
        .map(|n| (gamma * n).encode())
        .collect();
    for n in kernel.elements() {
        if !scaled.contains(&tower.sigma(&(gamma * &n))?.encode()) {
            return Ok(false);
        }
    }
    Ok(true)
}
