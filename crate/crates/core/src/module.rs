//! Finite left modules over a [`FiniteRing`].

use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::ring::{Coords, FiniteRing};

/// Largest module whose elements are ever materialized.
pub const ELEMENT_CAP: u128 = 1 << 20;

/// A finite left module: additive group `Z/e_1 x ... x Z/e_m` with generators
/// `m_1..m_m`, and `action[i][u]` the coordinates of `b_i * m_u`.
///
/// Cheap to clone; element tables are built on first use and shared.
#[derive(Clone)]
pub struct FinModule(Arc<Inner>);

struct Inner {
    ring: Arc<FiniteRing>,
    orders: Vec<u64>,
    action: Vec<Vec<Coords>>,
    tables: OnceLock<Tables>,
}

struct Tables {
    /// `basis_act[i][x]` = index of `b_i * x`
    basis_act: Vec<Vec<u32>>,
    /// `ring_act[r * |M| + x]` = index of `r * x`, `r` indexing ring elements
    ring_act: OnceLock<Vec<u32>>,
}

impl std::fmt::Debug for FinModule {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("FinModule")
            .field("ring", &self.0.ring.name())
            .field("orders", &self.0.orders)
            .field("action", &self.0.action)
            .finish()
    }
}

impl FinModule {
    /// Validates and builds a module. Coordinates are reduced first.
    pub fn new(ring: Arc<FiniteRing>, orders: Vec<u64>, action: Vec<Vec<Coords>>) -> Result<FinModule> {
        let k = ring.dim();
        let m = orders.len();
        if orders.contains(&0) {
            return Err(Error::InvalidModule("additive orders must be positive".into()));
        }
        if action.len() != k || action.iter().any(|row| row.len() != m || row.iter().any(|v| v.len() != m)) {
            return Err(Error::InvalidModule(format!("expected a {k}x{m} action table of {m}-vectors")));
        }
        let action = action
            .iter()
            .map(|row| row.iter().map(|v| v.iter().zip(&orders).map(|(&x, &e)| x % e).collect()).collect())
            .collect();
        let module = FinModule(Arc::new(Inner { ring, orders, action, tables: OnceLock::new() }));
        module.validate()?;
        Ok(module)
    }

    fn validate(&self) -> Result<()> {
        let ring = self.ring();
        let (k, m) = (ring.dim(), self.dim());
        for u in 0..m {
            let g = self.generator(u);
            for i in 0..k {
                let bi = &self.0.action[i][u];
                if !self.is_zero(&self.scale(bi, self.0.orders[u])) {
                    return Err(Error::InvalidModule(format!("order of generator {u} does not kill b_{i} * m_{u}")));
                }
                if !self.is_zero(&self.scale(bi, ring.orders()[i])) {
                    return Err(Error::InvalidModule(format!("order of b_{i} does not kill b_{i} * m_{u}")));
                }
            }
            if self.ring_act(&ring.one(), &g) != g {
                return Err(Error::InvalidModule(format!("unit does not fix generator {u}")));
            }
            for i in 0..k {
                for j in 0..k {
                    let left = self.ring_act(&ring.mult_table()[i][j], &g);
                    let right = self.basis_act(i, &self.basis_act(j, &g));
                    if left != right {
                        return Err(Error::InvalidModule(format!("(b_{i} b_{j}) m_{u} != b_{i} (b_{j} m_{u})")));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn ring(&self) -> &FiniteRing {
        &self.0.ring
    }

    pub fn ring_arc(&self) -> &Arc<FiniteRing> {
        &self.0.ring
    }

    pub fn orders(&self) -> &[u64] {
        &self.0.orders
    }

    pub fn action(&self) -> &[Vec<Coords>] {
        &self.0.action
    }

    pub fn dim(&self) -> usize {
        self.0.orders.len()
    }

    pub fn size(&self) -> u128 {
        self.0.orders.iter().map(|&e| e as u128).product()
    }

    /// Same base ring, structurally.
    pub fn same_ring(&self, other: &FinModule) -> bool {
        Arc::ptr_eq(&self.0.ring, &other.0.ring) || *self.0.ring == *other.0.ring
    }

    pub fn check_same_ring(&self, other: &FinModule) -> Result<()> {
        if self.same_ring(other) {
            Ok(())
        } else {
            Err(Error::DifferentBaseRings)
        }
    }

    pub fn zero(&self) -> Coords {
        vec![0; self.dim()]
    }

    pub fn generator(&self, u: usize) -> Coords {
        let mut v = self.zero();
        v[u] = 1 % self.0.orders[u];
        v
    }

    pub fn is_zero(&self, x: &[u64]) -> bool {
        x.iter().all(|&c| c == 0)
    }

    pub fn add(&self, x: &[u64], y: &[u64]) -> Coords {
        x.iter().zip(y).zip(&self.0.orders).map(|((&a, &b), &e)| (a + b) % e).collect()
    }

    pub fn neg(&self, x: &[u64]) -> Coords {
        x.iter().zip(&self.0.orders).map(|(&a, &e)| (e - a) % e).collect()
    }

    pub fn sub(&self, x: &[u64], y: &[u64]) -> Coords {
        self.add(x, &self.neg(y))
    }

    pub fn scale(&self, x: &[u64], n: u64) -> Coords {
        x.iter().zip(&self.0.orders).map(|(&a, &e)| ((a as u128 * n as u128) % e as u128) as u64).collect()
    }

    /// Reduces an integer vector into canonical coordinates.
    pub fn reduce(&self, x: &[i128]) -> Coords {
        x.iter().zip(&self.0.orders).map(|(&a, &e)| a.rem_euclid(e as i128) as u64).collect()
    }

    /// `b_i * x`.
    pub fn basis_act(&self, i: usize, x: &[u64]) -> Coords {
        let mut acc = vec![0u128; self.dim()];
        for (u, &c) in x.iter().enumerate() {
            if c == 0 {
                continue;
            }
            for (a, &v) in acc.iter_mut().zip(&self.0.action[i][u]) {
                *a += c as u128 * v as u128;
            }
        }
        acc.iter().zip(&self.0.orders).map(|(&a, &e)| (a % e as u128) as u64).collect()
    }

    /// `r * x` for a ring element given by coordinates.
    pub fn ring_act(&self, r: &[u64], x: &[u64]) -> Coords {
        let mut acc = self.zero();
        for (i, &c) in r.iter().enumerate() {
            if c != 0 {
                acc = self.add(&acc, &self.scale(&self.basis_act(i, x), c));
            }
        }
        acc
    }

    // ----- element indexing -----

    /// Fails when the module is too large to enumerate.
    pub fn check_enumerable(&self) -> Result<()> {
        if self.size() > ELEMENT_CAP {
            Err(Error::SizeCutoffExceeded(self.size(), ELEMENT_CAP))
        } else {
            Ok(())
        }
    }

    /// Number of elements as a `usize`; only meaningful for enumerable modules.
    pub fn len(&self) -> usize {
        self.size() as usize
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Mixed-radix index, last coordinate fastest.
    pub fn index_of(&self, x: &[u64]) -> usize {
        let mut idx = 0usize;
        for (&c, &e) in x.iter().zip(&self.0.orders) {
            idx = idx * e as usize + c as usize;
        }
        idx
    }

    pub fn coords_of(&self, mut idx: usize) -> Coords {
        let mut out = self.zero();
        for u in (0..self.dim()).rev() {
            let e = self.0.orders[u] as usize;
            out[u] = (idx % e) as u64;
            idx /= e;
        }
        out
    }

    pub fn add_idx(&self, a: usize, b: usize) -> usize {
        self.index_of(&self.add(&self.coords_of(a), &self.coords_of(b)))
    }

    pub fn neg_idx(&self, a: usize) -> usize {
        self.index_of(&self.neg(&self.coords_of(a)))
    }

    fn tables(&self) -> &Tables {
        self.0.tables.get_or_init(|| {
            assert!(self.size() <= ELEMENT_CAP, "module too large to tabulate");
            let n = self.len();
            let basis_act = (0..self.ring().dim())
                .map(|i| (0..n).map(|x| self.index_of(&self.basis_act(i, &self.coords_of(x))) as u32).collect())
                .collect();
            Tables { basis_act, ring_act: OnceLock::new() }
        })
    }

    /// Index of `b_i * x` for an element index `x`.
    pub fn basis_act_idx(&self, i: usize, x: usize) -> usize {
        self.tables().basis_act[i][x] as usize
    }

    /// Table of `r * x` for every ring element index `r` and element index `x`.
    pub fn ring_act_table(&self) -> &[u32] {
        let t = self.tables();
        t.ring_act.get_or_init(|| {
            let n = self.len();
            let relems = self.ring().elements();
            let mut out = vec![0u32; relems.len() * n];
            for (ri, r) in relems.iter().enumerate() {
                for x in 0..n {
                    out[ri * n + x] = self.index_of(&self.ring_act(r, &self.coords_of(x))) as u32;
                }
            }
            out
        })
    }

    pub fn ring_act_idx(&self, r: usize, x: usize) -> usize {
        self.ring_act_table()[r * self.len() + x] as usize
    }

    /// Additive order of an element.
    pub fn element_order(&self, x: &[u64]) -> u64 {
        x.iter()
            .zip(&self.0.orders)
            .map(|(&c, &e)| e / crate::modsnf::gcd(c, e))
            .fold(1, crate::modsnf::lcm)
    }
}

/// The left regular module `_R R`.
pub fn regular_module(ring: &Arc<FiniteRing>) -> FinModule {
    let k = ring.dim();
    let action = (0..k).map(|i| (0..k).map(|u| ring.mult_table()[i][u].clone()).collect()).collect();
    FinModule::new(ring.clone(), ring.orders().to_vec(), action).expect("regular module is valid")
}

/// The zero module.
pub fn zero_module(ring: &Arc<FiniteRing>) -> FinModule {
    FinModule::new(ring.clone(), vec![], vec![vec![]; ring.dim()]).expect("zero module is valid")
}
