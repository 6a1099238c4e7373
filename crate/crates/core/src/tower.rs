//! The Galois extension `K ⊆ L` of finite fields.
//!
//! `K = F_{p^k}` is built over `F_p` and `L = F_{q^m}` is built over `K`
//! (a two-level tower), both with the least irreducible modulus, so every
//! `K`-coordinate of an element of `L` is a direct slice of its coefficients.
//! The Galois group is cyclic of order `m`, generated by the relative
//! Frobenius `σ(α) = α^q`.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::ffield::{checked_pow, least_irreducible, Field, FieldElement};
use crate::linalg::Matrix;

pub const DEFAULT_TOWER_CAP: u64 = 1 << 20;

/// Towers at least this large apply `σ^i` through cached images of the
/// `K`-basis instead of repeated squaring.
pub const FROBENIUS_CACHE_THRESHOLD: u64 = 1 << 12;

#[derive(Clone)]
pub struct Tower(Arc<Inner>);

struct Inner {
    p: u64,
    k: usize,
    m: usize,
    q: u64,
    base: Field,
    top: Field,
    /// `images[i][j] = σ^i(x^j)`.
    images: Vec<Vec<FieldElement>>,
}

pub fn build_tower(p: u64, k: usize, m: usize) -> Result<Tower> {
    Tower::build(p, k, m)
}

impl Tower {
    pub fn build(p: u64, k: usize, m: usize) -> Result<Tower> {
        Self::build_capped(p, k, m, DEFAULT_TOWER_CAP)
    }

    pub fn build_capped(p: u64, k: usize, m: usize, cap: u64) -> Result<Tower> {
        let prime = Field::prime(p)?;
        if k == 0 || m == 0 {
            return Err(Error::InvalidArgument("k and m must be at least 1".into()));
        }
        let size = checked_pow(p, (k * m) as u64).unwrap_or(u64::MAX);
        if size > cap {
            return Err(Error::CapExceeded {
                what: format!("tower {p}^{k}:{m}"),
                size,
                cap,
            });
        }
        let base = if k == 1 {
            prime.clone()
        } else {
            Field::extension(&prime, &least_irreducible(&prime, k)?)?
        };
        let top = Field::extension(&base, &least_irreducible(&base, m)?)?;
        let q = base.order();
        // The class of x; with m = 1 only x^0 is a basis vector, so any
        // placeholder works.
        let x = if m > 1 {
            let mut c = vec![base.zero(); m];
            c[1] = base.one();
            top.from_base_coords(&c)?
        } else {
            top.one()
        };
        let mut images = Vec::with_capacity(m);
        let mut sx = x;
        for _ in 0..m {
            let mut row = Vec::with_capacity(m);
            let mut acc = top.one();
            for _ in 0..m {
                row.push(acc.clone());
                acc = &acc * &sx;
            }
            images.push(row);
            sx = sx.pow(q);
        }
        Ok(Tower(Arc::new(Inner {
            p,
            k,
            m,
            q,
            base,
            top,
            images,
        })))
    }

    pub fn p(&self) -> u64 {
        self.0.p
    }

    pub fn k(&self) -> usize {
        self.0.k
    }

    pub fn m(&self) -> usize {
        self.0.m
    }

    /// `|K|`.
    pub fn q(&self) -> u64 {
        self.0.q
    }

    /// `|L|`.
    pub fn order(&self) -> u64 {
        self.0.top.order()
    }

    /// `K`.
    pub fn base_field(&self) -> &Field {
        &self.0.base
    }

    /// `L`.
    pub fn top_field(&self) -> &Field {
        &self.0.top
    }

    /// `p^k:m:<modulus of K over F_p>:<modulus of L over K>`; a prime `K`
    /// has no modulus and prints `-`.
    pub fn id(&self) -> String {
        let kmod = self
            .0
            .base
            .modulus()
            .map_or_else(|| "-".to_string(), |f| f.to_text("t"));
        let lmod = self.0.top.modulus().expect("L is an extension").to_text("x");
        format!("{}^{}:{}:{kmod}:{lmod}", self.0.p, self.0.k, self.0.m)
    }

    pub fn galois_group(&self) -> GaloisGroup {
        GaloisGroup {
            tower: self.clone(),
        }
    }

    fn check_top(&self, alpha: &FieldElement) -> Result<()> {
        if alpha.field() == &self.0.top {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn embed(&self, c: &FieldElement) -> Result<FieldElement> {
        self.0.top.lift(c)
    }

    /// `K`-coordinates of `alpha` in the basis `1, x, …, x^{m-1}`.
    pub fn coords(&self, alpha: &FieldElement) -> Result<Vec<FieldElement>> {
        self.0.top.base_coords(alpha)
    }

    pub fn from_coords(&self, coords: &[FieldElement]) -> Result<FieldElement> {
        self.0.top.from_base_coords(coords)
    }

    /// `Some(c)` when `alpha` lies in `K`, read off by coefficient inspection.
    pub fn as_base(&self, alpha: &FieldElement) -> Option<FieldElement> {
        if alpha.field() != &self.0.top {
            return None;
        }
        let k = self.0.base.degree();
        if alpha.coeffs()[k..].iter().any(|&c| c != 0) {
            return None;
        }
        Some(self.coords(alpha).ok()?.swap_remove(0))
    }

    pub fn in_base(&self, alpha: &FieldElement) -> bool {
        self.as_base(alpha).is_some()
    }

    /// `σ^i(alpha)` with `i` reduced modulo `m`.
    pub fn apply_tau(&self, i: i64, alpha: &FieldElement) -> Result<FieldElement> {
        self.check_top(alpha)?;
        let i = i.rem_euclid(self.0.m as i64) as usize;
        if self.order() >= FROBENIUS_CACHE_THRESHOLD {
            self.tau_by_images(i, alpha)
        } else {
            Ok(self.tau_by_power(i, alpha))
        }
    }

    pub fn sigma(&self, alpha: &FieldElement) -> Result<FieldElement> {
        self.apply_tau(1, alpha)
    }

    fn tau_by_power(&self, i: usize, alpha: &FieldElement) -> FieldElement {
        alpha.pow(self.0.q.pow(i as u32))
    }

    fn tau_by_images(&self, i: usize, alpha: &FieldElement) -> Result<FieldElement> {
        let coords = self.coords(alpha)?;
        let mut acc = self.0.top.zero();
        for (a, img) in coords.iter().zip(&self.0.images[i]) {
            if !a.is_zero() {
                acc = &acc + &(&self.embed(a)? * img);
            }
        }
        Ok(acc)
    }

    /// Matrix of `σ^i` on `K`-coordinates, acting on row vectors.
    pub fn tau_matrix(&self, i: i64) -> Matrix {
        let i = i.rem_euclid(self.0.m as i64) as usize;
        let rows = self.0.images[i]
            .iter()
            .map(|img| self.coords(img).expect("image lies in L"))
            .collect();
        Matrix::from_rows(&self.0.base, rows).expect("square coordinate matrix")
    }

    /// `Tr(alpha) = Σ σ^i(alpha)`, returned as an element of `K`.
    pub fn trace(&self, alpha: &FieldElement) -> Result<FieldElement> {
        self.check_top(alpha)?;
        let mut acc = self.0.top.zero();
        let mut conj = alpha.clone();
        for _ in 0..self.0.m {
            acc = &acc + &conj;
            conj = self.sigma(&conj)?;
        }
        let value = self.as_base(&acc);
        assert!(value.is_some(), "trace left K for {alpha:?} in {}", self.id());
        Ok(value.unwrap())
    }

    /// A `K`-basis of `N = Ker(Tr)` from the null space of the trace row.
    pub fn trace_kernel(&self) -> TraceData {
        let m = self.0.m;
        let row: Vec<FieldElement> = (0..m)
            .map(|j| {
                let mut e = vec![self.0.base.zero(); m];
                e[j] = self.0.base.one();
                self.trace(&self.from_coords(&e).unwrap()).unwrap()
            })
            .collect();
        let functional = Matrix::from_rows(&self.0.base, vec![row]).unwrap();
        let basis = functional
            .nullspace()
            .into_iter()
            .map(|v| self.from_coords(&v).unwrap())
            .collect();
        TraceData {
            tower: self.clone(),
            basis,
        }
    }
}

impl std::fmt::Debug for Tower {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Tower({})", self.id())
    }
}

pub fn apply_tau(tower: &Tower, i: i64, alpha: &FieldElement) -> Result<FieldElement> {
    tower.apply_tau(i, alpha)
}

pub fn trace(tower: &Tower, alpha: &FieldElement) -> Result<FieldElement> {
    tower.trace(alpha)
}

pub fn trace_kernel(tower: &Tower) -> TraceData {
    tower.trace_kernel()
}

/// `Gal(L/K) = ⟨σ⟩`, elements indexed by exponent.
#[derive(Clone, Debug)]
pub struct GaloisGroup {
    tower: Tower,
}

impl GaloisGroup {
    pub fn order(&self) -> usize {
        self.tower.m()
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order()
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn compose(&self, i: usize, j: usize) -> usize {
        (i + j) % self.order()
    }

    pub fn inverse(&self, i: usize) -> usize {
        (self.order() - i % self.order()) % self.order()
    }

    pub fn apply(&self, i: usize, alpha: &FieldElement) -> Result<FieldElement> {
        self.tower.apply_tau(i as i64, alpha)
    }
}

#[derive(Clone, Debug)]
pub struct TraceData {
    tower: Tower,
    basis: Vec<FieldElement>,
}

impl TraceData {
    pub fn basis(&self) -> &[FieldElement] {
        &self.basis
    }

    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn contains(&self, alpha: &FieldElement) -> Result<bool> {
        Ok(self.tower.trace(alpha)?.is_zero())
    }

    /// Every element of `N`, sorted by canonical encoding.
    pub fn elements(&self) -> Vec<FieldElement> {
        let base = self.tower.base_field();
        let top = self.tower.top_field();
        let q = base.order();
        let count = q.pow(self.basis.len() as u32);
        let mut out: Vec<FieldElement> = (0..count)
            .map(|mut idx| {
                let mut acc = top.zero();
                for b in &self.basis {
                    let c = base.decode(idx % q);
                    idx /= q;
                    acc = &acc + &(&top.lift(&c).unwrap() * b);
                }
                acc
            })
            .collect();
        out.sort();
        out
    }
}
