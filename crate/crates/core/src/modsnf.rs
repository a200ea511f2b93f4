//! Smith reduction over the local rings `Z/p^a`.
//!
//! Every nonzero entry is `unit * p^v`, so a pivot of minimal valuation
//! divides everything else in its row and column and elimination never grows
//! the entries beyond the modulus.

/// A finite abelian p-group element given as a vector over `Z/p^a`,
/// paired with its additive order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicGen {
    pub vector: Vec<u64>,
    pub order: u64,
}

#[derive(Clone, Copy, Debug)]
pub struct PrimePower {
    pub p: u64,
    pub a: u32,
    pub modulus: u64,
}

impl PrimePower {
    pub fn new(p: u64, a: u32) -> Self {
        PrimePower { p, a, modulus: p.pow(a) }
    }

    pub fn valuation(&self, x: u64) -> u32 {
        if x.is_multiple_of(self.modulus) {
            return self.a;
        }
        let mut v = 0;
        let mut x = x;
        while x.is_multiple_of(self.p) {
            x /= self.p;
            v += 1;
        }
        v
    }

    fn mul(&self, x: u64, y: u64) -> u64 {
        ((x as u128 * y as u128) % self.modulus as u128) as u64
    }

    fn sub(&self, x: u64, y: u64) -> u64 {
        (x + self.modulus - y % self.modulus) % self.modulus
    }

    fn add(&self, x: u64, y: u64) -> u64 {
        (x + y) % self.modulus
    }

    /// Inverse of a unit modulo `p^a`.
    fn inverse(&self, x: u64) -> u64 {
        let (mut r0, mut r1) = (self.modulus as i128, (x % self.modulus) as i128);
        let (mut t0, mut t1) = (0i128, 1i128);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        debug_assert_eq!(r0, 1, "not a unit");
        t0.rem_euclid(self.modulus as i128) as u64
    }
}

struct Work {
    rows: usize,
    cols: usize,
    m: Vec<u64>,
}

impl Work {
    fn at(&self, i: usize, j: usize) -> u64 {
        self.m[i * self.cols + j]
    }
}

/// Result of reducing an `rows x cols` matrix: pivots `d_t = p^{v_t}` for
/// `t < pivots.len()`, all other entries zero.
struct Reduced {
    valuations: Vec<u32>,
    /// column transform `Q` (cols x cols), tracked on demand
    q: Option<Vec<u64>>,
    /// inverse row transform `P^{-1}` (rows x rows), tracked on demand
    p_inv: Option<Vec<u64>>,
}

fn reduce(pp: &PrimePower, rows: usize, cols: usize, data: Vec<u64>, track_q: bool, track_pinv: bool) -> Reduced {
    let mut w = Work { rows, cols, m: data };
    let ident = |n: usize| {
        let mut v = vec![0u64; n * n];
        for i in 0..n {
            v[i * n + i] = 1 % pp.modulus;
        }
        v
    };
    let mut q = track_q.then(|| ident(cols));
    let mut p_inv = track_pinv.then(|| ident(rows));
    let mut valuations = Vec::new();

    for t in 0..rows.min(cols) {
        let mut best: Option<(usize, usize, u32)> = None;
        'scan: for i in t..rows {
            for j in t..cols {
                let x = w.at(i, j);
                if x != 0 {
                    let v = pp.valuation(x);
                    if best.is_none_or(|b| v < b.2) {
                        best = Some((i, j, v));
                        if v == 0 {
                            break 'scan;
                        }
                    }
                }
            }
        }
        let Some((bi, bj, v)) = best else { break };
        // row swap t <-> bi
        if bi != t {
            for j in 0..cols {
                w.m.swap(t * cols + j, bi * cols + j);
            }
            if let Some(pi) = p_inv.as_mut() {
                for i in 0..rows {
                    pi.swap(i * rows + t, i * rows + bi);
                }
            }
        }
        if bj != t {
            for i in 0..rows {
                w.m.swap(i * cols + t, i * cols + bj);
            }
            if let Some(qm) = q.as_mut() {
                for i in 0..cols {
                    qm.swap(i * cols + t, i * cols + bj);
                }
            }
        }
        // normalize pivot to p^v by scaling row t with a unit
        let piv = w.at(t, t);
        let unit = piv / pp.p.pow(v);
        if unit != 1 {
            let inv = pp.inverse(unit);
            for j in 0..cols {
                w.m[t * cols + j] = pp.mul(w.m[t * cols + j], inv);
            }
            if let Some(pi) = p_inv.as_mut() {
                // P <- diag(inv) P  =>  P^{-1} <- P^{-1} diag(unit)
                for i in 0..rows {
                    pi[i * rows + t] = pp.mul(pi[i * rows + t], unit);
                }
            }
        }
        let pv = pp.p.pow(v);
        // clear column t
        for i in t + 1..rows {
            let x = w.at(i, t);
            if x != 0 {
                let k = x / pv;
                for j in t..cols {
                    let s = pp.mul(k, w.at(t, j));
                    w.m[i * cols + j] = pp.sub(w.m[i * cols + j], s);
                }
                if let Some(pi) = p_inv.as_mut() {
                    // row_i -= k row_t  =>  col_t(P^{-1}) += k col_i(P^{-1})
                    for r in 0..rows {
                        let s = pp.mul(k, pi[r * rows + i]);
                        pi[r * rows + t] = pp.add(pi[r * rows + t], s);
                    }
                }
            }
        }
        // clear row t
        for j in t + 1..cols {
            let x = w.at(t, j);
            if x != 0 {
                let k = x / pv;
                w.m[t * cols + j] = 0;
                if let Some(qm) = q.as_mut() {
                    for r in 0..cols {
                        let s = pp.mul(k, qm[r * cols + t]);
                        qm[r * cols + j] = pp.sub(qm[r * cols + j], s);
                    }
                }
            }
        }
        valuations.push(v);
    }
    let _ = w.rows;
    Reduced { valuations, q, p_inv }
}

/// Basis of `{x in (Z/p^a)^cols : A x = 0}` as independent cyclic generators.
pub fn kernel_basis(pp: &PrimePower, rows: usize, cols: usize, data: Vec<u64>) -> Vec<CyclicGen> {
    let red = reduce(pp, rows, cols, data, true, false);
    let q = red.q.expect("tracked");
    let mut out = Vec::new();
    for t in 0..cols {
        let v = red.valuations.get(t).copied().unwrap_or(pp.a);
        if v == 0 {
            continue;
        }
        let scale = pp.p.pow(pp.a - v) % pp.modulus;
        let vector: Vec<u64> = (0..cols).map(|r| pp.mul(q[r * cols + t], scale)).collect();
        out.push(CyclicGen { vector, order: pp.p.pow(v) });
    }
    out
}

/// Basis of the subgroup of `(Z/p^a)^rows` spanned by the given column vectors.
pub fn span_basis(pp: &PrimePower, rows: usize, columns: &[Vec<u64>]) -> Vec<CyclicGen> {
    let cols = columns.len();
    if rows == 0 || cols == 0 {
        return Vec::new();
    }
    let mut data = vec![0u64; rows * cols];
    for (j, c) in columns.iter().enumerate() {
        for i in 0..rows {
            data[i * cols + j] = c[i] % pp.modulus;
        }
    }
    let red = reduce(pp, rows, cols, data, false, true);
    let pi = red.p_inv.expect("tracked");
    red.valuations
        .iter()
        .enumerate()
        .map(|(t, &v)| {
            let d = pp.p.pow(v);
            CyclicGen {
                vector: (0..rows).map(|r| pp.mul(pi[r * rows + t], d)).collect(),
                order: pp.p.pow(pp.a - v),
            }
        })
        .collect()
}

/// Prime factorization `n = prod p^e` in increasing prime order.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        0
    } else {
        a / gcd(a, b) * b
    }
}

/// Inverse of `x` modulo `m` when `gcd(x, m) = 1`.
pub fn inverse_mod(x: u64, m: u64) -> Option<u64> {
    if m == 1 {
        return Some(0);
    }
    let (mut r0, mut r1) = (m as i128, (x % m) as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    (r0 == 1).then(|| t0.rem_euclid(m as i128) as u64)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_kernel(pp: &PrimePower, rows: usize, cols: usize, data: &[u64]) -> usize {
        let n = pp.modulus as usize;
        let total = n.pow(cols as u32);
        (0..total)
            .filter(|&mut_idx| {
                let mut idx = mut_idx;
                let x: Vec<u64> = (0..cols)
                    .map(|_| {
                        let d = (idx % n) as u64;
                        idx /= n;
                        d
                    })
                    .collect();
                (0..rows).all(|i| (0..cols).map(|j| data[i * cols + j] * x[j]).sum::<u64>() % pp.modulus == 0)
            })
            .count()
    }

    #[test]
    fn kernel_size_matches_brute_force() {
        let pp = PrimePower::new(2, 3);
        let cases: Vec<(usize, usize, Vec<u64>)> = vec![
            (2, 3, vec![2, 4, 6, 4, 0, 2]),
            (1, 2, vec![4, 6]),
            (3, 2, vec![1, 3, 2, 6, 0, 4]),
            (2, 2, vec![0, 0, 0, 0]),
        ];
        for (r, c, d) in cases {
            let basis = kernel_basis(&pp, r, c, d.clone());
            let size: u64 = basis.iter().map(|g| g.order).product();
            assert_eq!(size as usize, brute_kernel(&pp, r, c, &d));
            for g in &basis {
                for i in 0..r {
                    let s: u64 = (0..c).map(|j| d[i * c + j] * g.vector[j]).sum();
                    assert_eq!(s % pp.modulus, 0);
                }
            }
        }
    }

    #[test]
    fn span_size() {
        let pp = PrimePower::new(3, 2);
        let basis = span_basis(&pp, 2, &[vec![3, 0], vec![0, 3], vec![3, 3]]);
        let size: u64 = basis.iter().map(|g| g.order).product();
        assert_eq!(size, 9);
    }

    #[test]
    fn factor() {
        assert_eq!(factorize(36), vec![(2, 2), (3, 2)]);
        assert_eq!(factorize(1), vec![]);
        assert_eq!(inverse_mod(3, 8), Some(3));
        assert_eq!(inverse_mod(2, 8), None);
    }
}
