//! Cyclic decompositions of subquotients `V/U` of a coordinate group
//! `Z/e_1 x ... x Z/e_m`.
//!
//! `V` and `U` are described by generating sets; their full preimages in
//! `Z^m` are lattices `L_U <= L_V` of full rank, and `V/U = L_V / L_U`.

use crate::intmat::{diagonalize, IntMat};
use crate::ring::Coords;

/// A subquotient written as `Z/f_1 x ... x Z/f_r` (all `f_i > 1`).
#[derive(Clone, Debug)]
pub struct AbelianSubquotient {
    ambient: Vec<u64>,
    /// orders of the new generators
    pub orders: Vec<u64>,
    /// ambient coordinates of a representative of each new generator
    pub lifts: Vec<Coords>,
    // coords(x) = (P2 * diag(1/d) * P * x)_i mod f_i, restricted to `keep`
    p: IntMat,
    d: Vec<i128>,
    p2: IntMat,
    keep: Vec<usize>,
}

impl AbelianSubquotient {
    /// `v_gens = None` means `V` is the whole ambient group.
    pub fn new(ambient: &[u64], v_gens: Option<&[Coords]>, u_gens: &[Coords]) -> Self {
        let m = ambient.len();
        let torsion: Vec<Vec<i128>> = (0..m)
            .map(|u| {
                let mut c = vec![0i128; m];
                c[u] = ambient[u] as i128;
                c
            })
            .collect();
        let to_i = |c: &Coords| c.iter().map(|&x| x as i128).collect::<Vec<i128>>();

        let (p, p_inv, d) = match v_gens {
            None => (IntMat::identity(m), IntMat::identity(m), vec![1i128; m]),
            Some(gens) => {
                let mut cols: Vec<Vec<i128>> = gens.iter().map(to_i).collect();
                cols.extend(torsion.iter().cloned());
                let dg = diagonalize(&IntMat::from_columns(m, &cols));
                (dg.p, dg.p_inv, dg.diag)
            }
        };
        debug_assert!(d.iter().all(|&x| x != 0));

        // L_U expressed in the basis P^{-1} diag(d) of L_V
        let mut ucols: Vec<Vec<i128>> = u_gens.iter().map(to_i).collect();
        ucols.extend(torsion.iter().cloned());
        let c_cols: Vec<Vec<i128>> = ucols
            .iter()
            .map(|c| {
                let y = p.mul_vec(c);
                y.iter()
                    .zip(&d)
                    .map(|(&a, &di)| {
                        debug_assert_eq!(a % di, 0, "U is not inside V");
                        a / di
                    })
                    .collect()
            })
            .collect();
        let dg2 = diagonalize(&IntMat::from_columns(m, &c_cols));
        let f = dg2.diag.clone();

        let keep: Vec<usize> = (0..m).filter(|&i| f[i] != 1).collect();
        let orders: Vec<u64> = keep.iter().map(|&i| f[i] as u64).collect();

        // lift_i = P^{-1} diag(d) P2^{-1} e_i
        let lifts = keep
            .iter()
            .map(|&i| {
                let col = dg2.p_inv.column(i);
                let scaled: Vec<i128> = col.iter().zip(&d).map(|(&a, &di)| a * di).collect();
                let x = p_inv.mul_vec(&scaled);
                x.iter().zip(ambient).map(|(&a, &e)| a.rem_euclid(e as i128) as u64).collect()
            })
            .collect();

        AbelianSubquotient { ambient: ambient.to_vec(), orders, lifts, p, d, p2: dg2.p, keep }
    }

    /// New coordinates of an ambient element lying in `V`.
    pub fn coords(&self, x: &[u64]) -> Coords {
        let xi: Vec<i128> = x.iter().map(|&a| a as i128).collect();
        let y = self.p.mul_vec(&xi);
        let y: Vec<i128> = y
            .iter()
            .zip(&self.d)
            .map(|(&a, &di)| {
                debug_assert_eq!(a % di, 0, "element not in V");
                a / di
            })
            .collect();
        let z = self.p2.mul_vec(&y);
        self.keep
            .iter()
            .zip(&self.orders)
            .map(|(&i, &f)| z[i].rem_euclid(f as i128) as u64)
            .collect()
    }

    pub fn ambient(&self) -> &[u64] {
        &self.ambient
    }

    /// Ambient representative of the element with the given new coordinates.
    pub fn lift(&self, c: &[u64]) -> Coords {
        let mut out = vec![0u64; self.ambient.len()];
        for (g, &k) in self.lifts.iter().zip(c) {
            for ((o, &gv), &e) in out.iter_mut().zip(g).zip(&self.ambient) {
                *o = ((*o as u128 + k as u128 * gv as u128) % e as u128) as u64;
            }
        }
        out
    }

    pub fn size(&self) -> u128 {
        self.orders.iter().map(|&x| x as u128).product()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quotient_of_z4_by_two() {
        let q = AbelianSubquotient::new(&[4], None, &[vec![2]]);
        assert_eq!(q.orders, vec![2]);
        assert_eq!(q.coords(&[1]), vec![1]);
        assert_eq!(q.coords(&[2]), vec![0]);
    }

    #[test]
    fn submodule_of_z4_z2() {
        // V = <(2,1)> inside Z/4 x Z/2 has order 2
        let s = AbelianSubquotient::new(&[4, 2], Some(&[vec![2, 1]]), &[]);
        assert_eq!(s.size(), 2);
        assert_eq!(s.lifts.len(), 1);
        assert_eq!(s.lifts[0], vec![2, 1]);
        assert_eq!(s.coords(&[2, 1]), vec![1]);
    }

    #[test]
    fn z6_splits() {
        let q = AbelianSubquotient::new(&[6], None, &[]);
        assert_eq!(q.size(), 6);
        for x in 0..6u64 {
            assert_eq!(q.lift(&q.coords(&[x])), vec![x]);
        }
    }
}
