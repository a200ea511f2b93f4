//! Finite unital rings given by structure constants over a product of
//! cyclic groups.

use std::sync::{Arc, OnceLock};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Coordinates of a ring or module element, each reduced into `[0, order)`.
pub type Coords = Vec<u64>;

/// A finite associative ring with unit.
///
/// The additive group is `Z/d_1 x ... x Z/d_k` with basis `b_1..b_k`;
/// `mult[i][j]` holds the coordinates of `b_i * b_j`.
#[derive(Clone, Debug)]
pub struct FiniteRing {
    name: String,
    orders: Vec<u64>,
    mult: Vec<Vec<Coords>>,
    unit: Coords,
    elements: OnceLock<Arc<Vec<Coords>>>,
    jacobson: OnceLock<Arc<Vec<Coords>>>,
}

impl PartialEq for FiniteRing {
    fn eq(&self, other: &Self) -> bool {
        self.orders == other.orders && self.mult == other.mult && self.unit == other.unit
    }
}

impl Eq for FiniteRing {}

/// Plain serializable form of a ring (the raw-ring file format).
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct RawRing {
    pub name: String,
    pub orders: Vec<u64>,
    pub unit: Vec<i64>,
    pub mult: Vec<Vec<Vec<i64>>>,
}

fn reduce_into(v: &[i64], orders: &[u64]) -> Coords {
    v.iter().zip(orders).map(|(&x, &d)| x.rem_euclid(d as i64) as u64).collect()
}

/// Validates structure constants and returns the ring.
pub fn make_ring(orders: Vec<u64>, mult: Vec<Vec<Coords>>, unit: Coords, name: impl Into<String>) -> Result<FiniteRing> {
    let k = orders.len();
    if orders.contains(&0) {
        return Err(Error::MalformedTable("additive orders must be positive".into()));
    }
    if unit.len() != k || mult.len() != k || mult.iter().any(|row| row.len() != k || row.iter().any(|v| v.len() != k)) {
        return Err(Error::MalformedTable(format!("expected {k}x{k}x{k} table and unit of length {k}")));
    }
    let reduce = |v: &Coords| -> Coords { v.iter().zip(&orders).map(|(&x, &d)| x % d).collect() };
    let mult: Vec<Vec<Coords>> = mult.iter().map(|row| row.iter().map(reduce).collect()).collect();
    let unit = reduce(&unit);
    let ring = FiniteRing { name: name.into(), orders, mult, unit, elements: OnceLock::new(), jacobson: OnceLock::new() };
    ring.validate()?;
    Ok(ring)
}

impl FiniteRing {
    pub fn from_raw(raw: &RawRing) -> Result<FiniteRing> {
        let k = raw.orders.len();
        if raw.unit.len() != k || raw.mult.len() != k || raw.mult.iter().any(|r| r.len() != k || r.iter().any(|v| v.len() != k)) {
            return Err(Error::MalformedTable(format!("expected {k}x{k}x{k} table and unit of length {k}")));
        }
        if raw.orders.contains(&0) {
            return Err(Error::MalformedTable("additive orders must be positive".into()));
        }
        let mult = raw.mult.iter().map(|row| row.iter().map(|v| reduce_into(v, &raw.orders)).collect()).collect();
        make_ring(raw.orders.clone(), mult, reduce_into(&raw.unit, &raw.orders), raw.name.clone())
    }

    pub fn to_raw(&self) -> RawRing {
        RawRing {
            name: self.name.clone(),
            orders: self.orders.clone(),
            unit: self.unit.iter().map(|&x| x as i64).collect(),
            mult: self.mult.iter().map(|r| r.iter().map(|v| v.iter().map(|&x| x as i64).collect()).collect()).collect(),
        }
    }

    fn validate(&self) -> Result<()> {
        let k = self.dim();
        for i in 0..k {
            for j in 0..k {
                let c = &self.mult[i][j];
                let di = self.scale(c, self.orders[i]);
                let dj = self.scale(c, self.orders[j]);
                if !self.is_zero(&di) || !self.is_zero(&dj) {
                    return Err(Error::OrderIncompatibility(i, j));
                }
            }
        }
        for i in 0..k {
            let b = self.basis(i);
            if self.mul(&self.unit, &b) != b || self.mul(&b, &self.unit) != b {
                return Err(Error::UnitViolation(i));
            }
        }
        for i in 0..k {
            for j in 0..k {
                let bij = &self.mult[i][j];
                for l in 0..k {
                    let left = self.mul(bij, &self.basis(l));
                    let right = self.mul(&self.basis(i), &self.mult[j][l]);
                    if left != right {
                        return Err(Error::AssociativityViolation(i, j, l));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn dim(&self) -> usize {
        self.orders.len()
    }

    pub fn orders(&self) -> &[u64] {
        &self.orders
    }

    pub fn mult_table(&self) -> &[Vec<Coords>] {
        &self.mult
    }

    pub fn size(&self) -> usize {
        self.orders.iter().product::<u64>() as usize
    }

    pub fn one(&self) -> Coords {
        self.unit.clone()
    }

    pub fn zero(&self) -> Coords {
        vec![0; self.dim()]
    }

    pub fn basis(&self, i: usize) -> Coords {
        let mut v = self.zero();
        v[i] = 1 % self.orders[i];
        v
    }

    pub fn is_zero(&self, x: &[u64]) -> bool {
        x.iter().all(|&c| c == 0)
    }

    pub fn add(&self, x: &[u64], y: &[u64]) -> Coords {
        x.iter().zip(y).zip(&self.orders).map(|((&a, &b), &d)| (a + b) % d).collect()
    }

    pub fn neg(&self, x: &[u64]) -> Coords {
        x.iter().zip(&self.orders).map(|(&a, &d)| (d - a) % d).collect()
    }

    pub fn sub(&self, x: &[u64], y: &[u64]) -> Coords {
        self.add(x, &self.neg(y))
    }

    pub fn scale(&self, x: &[u64], n: u64) -> Coords {
        x.iter().zip(&self.orders).map(|(&a, &d)| ((a as u128 * n as u128) % d as u128) as u64).collect()
    }

    pub fn mul(&self, x: &[u64], y: &[u64]) -> Coords {
        let k = self.dim();
        let mut acc = vec![0u128; k];
        for i in 0..k {
            if x[i] == 0 {
                continue;
            }
            for j in 0..k {
                if y[j] == 0 {
                    continue;
                }
                let c = x[i] as u128 * y[j] as u128;
                for (l, &v) in self.mult[i][j].iter().enumerate() {
                    acc[l] += c * v as u128;
                }
            }
        }
        acc.iter().zip(&self.orders).map(|(&a, &d)| (a % d as u128) as u64).collect()
    }

    pub fn is_commutative(&self) -> bool {
        let k = self.dim();
        (0..k).all(|i| (0..k).all(|j| self.mult[i][j] == self.mult[j][i]))
    }

    /// All elements in lexicographic coordinate order.
    pub fn elements(&self) -> Arc<Vec<Coords>> {
        self.elements
            .get_or_init(|| {
                let mut out = Vec::with_capacity(self.size());
                let mut cur = self.zero();
                loop {
                    out.push(cur.clone());
                    let mut pos = self.dim();
                    loop {
                        if pos == 0 {
                            return Arc::new(out);
                        }
                        pos -= 1;
                        cur[pos] += 1;
                        if cur[pos] < self.orders[pos] {
                            break;
                        }
                        cur[pos] = 0;
                    }
                }
            })
            .clone()
    }

    /// Position of `x` in [`FiniteRing::elements`].
    pub fn index_of(&self, x: &[u64]) -> usize {
        let mut idx = 0usize;
        for (c, d) in x.iter().zip(&self.orders) {
            idx = idx * (*d as usize) + *c as usize;
        }
        idx
    }

    /// The opposite ring: same additive group, `a * b := b a`.
    pub fn opposite(&self) -> FiniteRing {
        let k = self.dim();
        let mult = (0..k).map(|i| (0..k).map(|j| self.mult[j][i].clone()).collect()).collect();
        FiniteRing {
            name: opposite_name(&self.name),
            orders: self.orders.clone(),
            mult,
            unit: self.unit.clone(),
            elements: OnceLock::new(),
            jacobson: OnceLock::new(),
        }
    }

    /// Additive generators of the Jacobson radical, the intersection of the
    /// maximal left ideals.
    pub fn jacobson_generators(&self) -> Arc<Vec<Coords>> {
        self.jacobson
            .get_or_init(|| {
                let r = Arc::new(self.clone());
                let m = crate::module::regular_module(&r);
                let lat = crate::submodule::submodule_lattice(&m, u128::MAX).expect("no cutoff");
                let rad = lat
                    .maximal()
                    .iter()
                    .fold(crate::submodule::Submodule::full(&m), |acc, &i| acc.meet(lat.get(i)));
                let gens = crate::submodule::additive_generators(&m, &rad);
                Arc::new(gens.iter().map(|&x| m.coords_of(x)).collect())
            })
            .clone()
    }

    /// Idempotents `e` that commute with every element.
    pub fn central_idempotents(&self) -> Vec<Coords> {
        let k = self.dim();
        self.elements()
            .iter()
            .filter(|e| self.mul(e, e) == **e)
            .filter(|e| (0..k).all(|i| self.mul(e, &self.basis(i)) == self.mul(&self.basis(i), e)))
            .cloned()
            .collect()
    }
}

fn opposite_name(name: &str) -> String {
    if let Some(inner) = name.strip_prefix("op(").and_then(|s| s.strip_suffix(')')) {
        if crate::spec::balanced(inner) {
            return inner.to_string();
        }
    }
    format!("op({name})")
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Upper-triangular 2x2 matrices over F_2 on the basis e11, e12, e22.
    pub(crate) fn tri2_table() -> (Vec<u64>, Vec<Vec<Coords>>, Coords) {
        let e = |a: u64, b: u64, c: u64| vec![a, b, c];
        let z = e(0, 0, 0);
        let mult = vec![
            vec![e(1, 0, 0), e(0, 1, 0), z.clone()],
            vec![z.clone(), z.clone(), e(0, 1, 0)],
            vec![z.clone(), z.clone(), e(0, 0, 1)],
        ];
        (vec![2, 2, 2], mult, e(1, 0, 1))
    }

    /// Independent oracle: 2x2 matrix multiplication over F_2.
    fn matmul2(a: [[u64; 2]; 2], b: [[u64; 2]; 2]) -> [[u64; 2]; 2] {
        let mut c = [[0; 2]; 2];
        for i in 0..2 {
            for j in 0..2 {
                c[i][j] = (a[i][0] * b[0][j] + a[i][1] * b[1][j]) % 2;
            }
        }
        c
    }

    #[test]
    fn cyclic_ring() {
        let r = make_ring(vec![4], vec![vec![vec![1]]], vec![1], "Z/4").unwrap();
        assert_eq!(r.size(), 4);
        assert_eq!(r.mul(&[2], &[3]), vec![2]);
    }

    #[test]
    fn zero_multiplication_has_no_unit() {
        let err = make_ring(vec![2], vec![vec![vec![0]]], vec![1], "bad").unwrap_err();
        assert_eq!(err, Error::UnitViolation(0));
    }

    #[test]
    fn order_incompatibility_detected() {
        // b0 of order 2 times b0 landing on an order-4 generator with coefficient 1
        let err = make_ring(vec![2, 4], vec![vec![vec![1, 1], vec![0, 0]], vec![vec![0, 0], vec![0, 1]]], vec![1, 1], "bad")
            .unwrap_err();
        assert_eq!(err, Error::OrderIncompatibility(0, 0));
    }

    #[test]
    fn associativity_violation_detected() {
        let (orders, mut mult, unit) = tri2_table();
        // break e12 * e22 = e12
        mult[1][2] = vec![0, 0, 0];
        let err = make_ring(orders, mult, unit, "bad").unwrap_err();
        assert!(matches!(err, Error::AssociativityViolation(..) | Error::UnitViolation(_)));
    }

    #[test]
    fn upper_triangular_matches_matrix_oracle() {
        let (orders, mult, unit) = tri2_table();
        let r = make_ring(orders, mult, unit, "Tri(2,GF(2))").unwrap();
        assert_eq!(r.size(), 8);
        let to_mat = |c: &[u64]| [[c[0], c[1]], [0, c[2]]];
        for x in r.elements().iter() {
            for y in r.elements().iter() {
                let z = r.mul(x, y);
                assert_eq!(to_mat(&z), matmul2(to_mat(x), to_mat(y)));
            }
        }
    }

    #[test]
    fn raw_round_trip() {
        let (orders, mult, unit) = tri2_table();
        let r = make_ring(orders, mult, unit, "T").unwrap();
        let raw = r.to_raw();
        let json = serde_json::to_string(&raw).unwrap();
        let back: RawRing = serde_json::from_str(&json).unwrap();
        assert_eq!(FiniteRing::from_raw(&back).unwrap(), r);
    }

    #[test]
    fn opposite_involution() {
        let (orders, mult, unit) = tri2_table();
        let r = make_ring(orders, mult, unit, "T").unwrap();
        assert_eq!(r.opposite().opposite(), r);
        assert_eq!(r.opposite().opposite().name(), "T");
        assert!(!r.is_commutative());
    }
}
