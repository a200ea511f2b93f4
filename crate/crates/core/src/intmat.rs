//! Dense integer matrices and diagonal (Smith-type) reduction over `Z`.
//!
//! Used on the small coordinate lattices that describe submodules and
//! quotients; the matrices have at most a few dozen rows so `i128` entries
//! are ample.

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMat {
    pub rows: usize,
    pub cols: usize,
    data: Vec<i128>,
}

impl IntMat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMat { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMat::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = 1;
        }
        m
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_columns(rows: usize, cols: &[Vec<i128>]) -> Self {
        let mut m = IntMat::zeros(rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            assert_eq!(c.len(), rows);
            for (i, &v) in c.iter().enumerate() {
                m[(i, j)] = v;
            }
        }
        m
    }

    pub fn column(&self, j: usize) -> Vec<i128> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    pub fn mul_vec(&self, v: &[i128]) -> Vec<i128> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self[(i, j)] * v[j]).sum())
            .collect()
    }

    pub fn mul(&self, other: &IntMat) -> IntMat {
        assert_eq!(self.cols, other.rows);
        let mut out = IntMat::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] += a * other[(k, j)];
                }
            }
        }
        out
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.data.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }

    /// row[dst] += q * row[src]
    fn add_row(&mut self, dst: usize, src: usize, q: i128) {
        for j in 0..self.cols {
            let v = self[(src, j)];
            self[(dst, j)] += q * v;
        }
    }

    /// col[dst] += q * col[src]
    fn add_col(&mut self, dst: usize, src: usize, q: i128) {
        for i in 0..self.rows {
            let v = self[(i, src)];
            self[(i, dst)] += q * v;
        }
    }
}

impl std::ops::Index<(usize, usize)> for IntMat {
    type Output = i128;
    fn index(&self, (i, j): (usize, usize)) -> &i128 {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut i128 {
        &mut self.data[i * self.cols + j]
    }
}

/// `P * A * Q = diag(d)` with `P` unimodular; `Q` is not tracked.
#[derive(Clone, Debug)]
pub struct Diagonal {
    /// Nonnegative diagonal entries, length `min(rows, cols)`.
    pub diag: Vec<i128>,
    pub p: IntMat,
    pub p_inv: IntMat,
}

/// Diagonalizes `a` by unimodular row and column operations.
///
/// The diagonal need not satisfy the divisibility chain; any diagonal form
/// already exhibits `Z^rows / col-span(a)` as a direct sum of cyclic groups.
pub fn diagonalize(a: &IntMat) -> Diagonal {
    let mut m = a.clone();
    let n = m.rows;
    let mut p = IntMat::identity(n);
    let mut p_inv = IntMat::identity(n);
    let steps = m.rows.min(m.cols);

    for t in 0..steps {
        // smallest nonzero pivot in the trailing block
        let mut best: Option<(usize, usize)> = None;
        for i in t..m.rows {
            for j in t..m.cols {
                let v = m[(i, j)].abs();
                if v != 0 && best.is_none_or(|(bi, bj)| v < m[(bi, bj)].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((bi, bj)) = best else { break };
        m.swap_rows(t, bi);
        p.swap_rows(t, bi);
        p_inv.swap_cols(t, bi);
        m.swap_cols(t, bj);

        loop {
            let mut dirty = false;
            for i in t + 1..m.rows {
                if m[(i, t)] != 0 {
                    let q = m[(i, t)].div_euclid(m[(t, t)]);
                    m.add_row(i, t, -q);
                    p.add_row(i, t, -q);
                    p_inv.add_col(t, i, q);
                    if m[(i, t)] != 0 {
                        m.swap_rows(t, i);
                        p.swap_rows(t, i);
                        p_inv.swap_cols(t, i);
                        dirty = true;
                    }
                }
            }
            for j in t + 1..m.cols {
                if m[(t, j)] != 0 {
                    let q = m[(t, j)].div_euclid(m[(t, t)]);
                    m.add_col(j, t, -q);
                    if m[(t, j)] != 0 {
                        m.swap_cols(t, j);
                        dirty = true;
                    }
                }
            }
            if !dirty {
                break;
            }
        }
        if m[(t, t)] < 0 {
            for j in 0..m.cols {
                m[(t, j)] = -m[(t, j)];
            }
            for j in 0..n {
                p[(t, j)] = -p[(t, j)];
            }
            for i in 0..n {
                p_inv[(i, t)] = -p_inv[(i, t)];
            }
        }
    }
    let diag = (0..steps).map(|t| m[(t, t)]).collect();
    Diagonal { diag, p, p_inv }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn diagonal_form_is_consistent() {
        let a = IntMat::from_columns(3, &[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]);
        let d = diagonalize(&a);
        assert_eq!(d.p.mul(&d.p_inv), IntMat::identity(3));
        // product of diagonal = |det| = 144
        let prod: i128 = d.diag.iter().product();
        assert_eq!(prod, 144);
        // P*A has columns in the lattice spanned by diag(d) e_i
        let pa = d.p.mul(&a);
        for j in 0..3 {
            for i in 0..3 {
                assert_eq!(pa[(i, j)] % d.diag[i], 0);
            }
        }
    }

    #[test]
    fn rank_deficient() {
        let a = IntMat::from_columns(2, &[vec![1, 2], vec![2, 4]]);
        let d = diagonalize(&a);
        assert_eq!(d.diag, vec![1, 0]);
    }
}
