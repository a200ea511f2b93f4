//! Standard ring constructions on top of [`make_ring`].

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::modsnf::{factorize, lcm};
use crate::presentation::AbelianSubquotient;
use crate::ring::{make_ring, Coords, FiniteRing};

/// `Z/n`.
pub fn zmod(n: u64) -> Result<FiniteRing> {
    if n < 1 {
        return Err(Error::Parse("Z/n needs n >= 1".into()));
    }
    make_ring(vec![n], vec![vec![vec![1 % n]]], vec![1 % n], format!("Z/{n}"))
}

/// Polynomials over `F_p` are coefficient vectors, lowest degree first.
fn poly_trim(mut f: Vec<u64>) -> Vec<u64> {
    while f.len() > 1 && *f.last().unwrap() == 0 {
        f.pop();
    }
    f
}

fn poly_rem(f: &[u64], g: &[u64], p: u64) -> Vec<u64> {
    let g = poly_trim(g.to_vec());
    let mut r = poly_trim(f.to_vec());
    let dg = g.len() - 1;
    let lead_inv = crate::modsnf::inverse_mod(g[dg], p).expect("nonzero leading coefficient");
    while r.len() > dg && !(r.len() == 1 && r[0] == 0) {
        let dr = r.len() - 1;
        let c = r[dr] * lead_inv % p;
        for i in 0..=dg {
            let idx = dr - dg + i;
            r[idx] = (r[idx] + p * p - c * g[i] % p) % p;
        }
        r = poly_trim(r);
        if dr == 0 {
            break;
        }
    }
    r
}

/// Irreducibility over `F_p` by trial division with every monic polynomial
/// of degree at most half.
pub fn is_irreducible(f: &[u64], p: u64) -> bool {
    let f = poly_trim(f.iter().map(|&c| c % p).collect());
    let d = f.len() - 1;
    if d == 0 {
        return false;
    }
    for dg in 1..=d / 2 {
        let count = p.pow(dg as u32);
        for idx in 0..count {
            let mut g = vec![0u64; dg + 1];
            let mut t = idx;
            for c in g.iter_mut().take(dg) {
                *c = t % p;
                t /= p;
            }
            g[dg] = 1;
            let r = poly_rem(&f, &g, p);
            if r.iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

pub(crate) fn render_poly(coeffs: &[i64]) -> String {
    let mut terms = Vec::new();
    for (deg, &c) in coeffs.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        let mon = match deg {
            0 => String::new(),
            1 => "x".to_string(),
            _ => format!("x^{deg}"),
        };
        let mag = c.unsigned_abs();
        let body = if deg == 0 {
            mag.to_string()
        } else if mag == 1 {
            mon
        } else {
            format!("{mag}{mon}")
        };
        let sign = if c < 0 { "-" } else { "+" };
        if terms.is_empty() {
            terms.push(if c < 0 { format!("-{body}") } else { body });
        } else {
            terms.push(format!("{sign}{body}"));
        }
    }
    if terms.is_empty() {
        "0".into()
    } else {
        terms.concat()
    }
}

/// `GF(q)` for a prime power `q`, realized as `F_p[x]/(f)` with `f` the
/// lexicographically first monic irreducible of the right degree.
pub fn galois_field(q: u64) -> Result<FiniteRing> {
    let f = factorize(q);
    if f.len() != 1 {
        return Err(Error::Parse(format!("GF({q}): {q} is not a prime power")));
    }
    let (p, k) = f[0];
    if k == 1 {
        return Ok(zmod(p)?.with_name(format!("GF({p})")));
    }
    let k = k as usize;
    for idx in 0..p.pow(k as u32) {
        let mut poly = vec![0u64; k + 1];
        let mut t = idx;
        for c in poly.iter_mut().take(k) {
            *c = t % p;
            t /= p;
        }
        poly[k] = 1;
        if is_irreducible(&poly, p) {
            let coeffs: Vec<i64> = poly.iter().map(|&c| c as i64).collect();
            return Ok(poly_quotient(&zmod(p)?, &coeffs)?.with_name(format!("GF({q})")));
        }
    }
    Err(Error::Internal(format!("no irreducible polynomial of degree {k} over F_{p}")))
}

/// `F_p[x]/(f)` with an explicitly supplied `f`, which must be irreducible.
pub fn galois_field_with(p: u64, poly: &[i64]) -> Result<FiniteRing> {
    if factorize(p).len() != 1 || factorize(p)[0].1 != 1 {
        return Err(Error::Parse(format!("{p} is not prime")));
    }
    let reduced: Vec<u64> = poly.iter().map(|&c| c.rem_euclid(p as i64) as u64).collect();
    if !is_irreducible(&reduced, p) {
        return Err(Error::NotIrreducible(render_poly(poly)));
    }
    let d = poly.len() as u32 - 1;
    Ok(poly_quotient(&zmod(p)?, poly)?.with_name(format!("GF({})", p.pow(d))))
}

/// `R[x]/(f)` for commutative `R` and monic integer polynomial `f`
/// (coefficients lowest degree first).
pub fn poly_quotient(r: &FiniteRing, coeffs: &[i64]) -> Result<FiniteRing> {
    if !r.is_commutative() {
        return Err(Error::NotCommutative(r.name().to_string()));
    }
    let coeffs: Vec<i64> = {
        let mut c = coeffs.to_vec();
        while c.len() > 1 && *c.last().unwrap() == 0 {
            c.pop();
        }
        c
    };
    let d = coeffs.len() - 1;
    if d == 0 || coeffs[d] != 1 {
        return Err(Error::Parse(format!("polynomial {} must be monic of positive degree", render_poly(&coeffs))));
    }
    let k = r.dim();
    let exp = r.orders().iter().fold(1, |a, &b| lcm(a, b)) as i64;
    // x^n reduced to degree < d, integer coefficients mod exponent
    let mut powers: Vec<Vec<i64>> = Vec::new();
    for n in 0..(2 * d).max(1) {
        if n < d {
            let mut v = vec![0i64; d];
            v[n] = 1;
            powers.push(v);
        } else {
            let prev = &powers[n - 1];
            let mut v = vec![0i64; d];
            let top = prev[d - 1];
            for s in (1..d).rev() {
                v[s] = prev[s - 1];
            }
            for s in 0..d {
                v[s] = (v[s] - top * coeffs[s]).rem_euclid(exp);
            }
            powers.push(v);
        }
    }
    let dim = d * k;
    let mut orders = vec![0u64; dim];
    for s in 0..d {
        for l in 0..k {
            orders[s * k + l] = r.orders()[l];
        }
    }
    let mut mult = vec![vec![vec![0u64; dim]; dim]; dim];
    for s in 0..d {
        for l in 0..k {
            for t in 0..d {
                for m in 0..k {
                    let prod = &r.mult_table()[l][m];
                    let xp = &powers[s + t];
                    let out = &mut mult[s * k + l][t * k + m];
                    for (s2, &c) in xp.iter().enumerate() {
                        for (l2, &v) in prod.iter().enumerate() {
                            let ord = r.orders()[l2] as i64;
                            let idx = s2 * k + l2;
                            out[idx] = ((out[idx] as i64 + c * v as i64).rem_euclid(ord)) as u64;
                        }
                    }
                }
            }
        }
    }
    let mut unit = vec![0u64; dim];
    unit[..k].copy_from_slice(&r.one());
    let base = if r.name().contains(" x ") { format!("({})", r.name()) } else { r.name().to_string() };
    make_ring(orders, mult, unit, format!("{base}[x]/({})", render_poly(&coeffs)))
}

/// `n x n` matrices over `R`.
pub fn matrix_ring(n: usize, r: &FiniteRing) -> Result<FiniteRing> {
    let cells: Vec<(usize, usize)> = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).collect();
    cell_ring(&cells, r, format!("Mat({n},{})", r.name()))
}

/// Upper triangular `n x n` matrices over `R`.
pub fn triangular_ring(n: usize, r: &FiniteRing) -> Result<FiniteRing> {
    let cells: Vec<(usize, usize)> = (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect();
    cell_ring(&cells, r, format!("Tri({n},{})", r.name()))
}

fn cell_ring(cells: &[(usize, usize)], r: &FiniteRing, name: String) -> Result<FiniteRing> {
    if cells.is_empty() {
        return Err(Error::Parse("matrix size must be positive".into()));
    }
    let k = r.dim();
    let dim = cells.len() * k;
    let pos = |cell: (usize, usize)| cells.iter().position(|&c| c == cell);
    let mut orders = Vec::with_capacity(dim);
    for _ in cells {
        orders.extend_from_slice(r.orders());
    }
    let mut mult = vec![vec![vec![0u64; dim]; dim]; dim];
    for (a, &(i, j)) in cells.iter().enumerate() {
        for (b, &(i2, j2)) in cells.iter().enumerate() {
            if j != i2 {
                continue;
            }
            let c = pos((i, j2)).expect("product of cells stays in the shape");
            for l in 0..k {
                for m in 0..k {
                    let prod = &r.mult_table()[l][m];
                    mult[a * k + l][b * k + m][c * k..(c + 1) * k].copy_from_slice(prod);
                }
            }
        }
    }
    let mut unit = vec![0u64; dim];
    for (a, &(i, j)) in cells.iter().enumerate() {
        if i == j {
            unit[a * k..(a + 1) * k].copy_from_slice(&r.one());
        }
    }
    make_ring(orders, mult, unit, name)
}

/// `R1 x R2` with componentwise operations; basis of `R1` first.
pub fn product(r1: &FiniteRing, r2: &FiniteRing) -> Result<FiniteRing> {
    let (k1, k2) = (r1.dim(), r2.dim());
    let dim = k1 + k2;
    let mut orders = r1.orders().to_vec();
    orders.extend_from_slice(r2.orders());
    let mut mult = vec![vec![vec![0u64; dim]; dim]; dim];
    for i in 0..k1 {
        for j in 0..k1 {
            mult[i][j][..k1].copy_from_slice(&r1.mult_table()[i][j]);
        }
    }
    for i in 0..k2 {
        for j in 0..k2 {
            mult[k1 + i][k1 + j][k1..].copy_from_slice(&r2.mult_table()[i][j]);
        }
    }
    let mut unit = r1.one();
    unit.extend(r2.one());
    let right = if r2.name().contains(" x ") { format!("({})", r2.name()) } else { r2.name().to_string() };
    make_ring(orders, mult, unit, format!("{} x {right}", r1.name()))
}

/// Additive subgroup of `R` generated by `gens`, as a set of coordinate vectors.
pub(crate) fn additive_span(r: &FiniteRing, gens: &[Coords]) -> Vec<Coords> {
    let mut seen: HashSet<Coords> = HashSet::new();
    let mut out = vec![r.zero()];
    seen.insert(r.zero());
    for g in gens {
        if seen.contains(g) {
            continue;
        }
        let base = out.clone();
        let mut t = g.clone();
        while !base.contains(&t) {
            for h in &base {
                let s = r.add(h, &t);
                if seen.insert(s.clone()) {
                    out.push(s);
                }
            }
            t = r.add(&t, g);
        }
    }
    out.sort();
    out
}

/// `R / I` where `I` is the additive span of `gens`; that span must already
/// be a two-sided ideal.
pub fn quotient_ring(r: &FiniteRing, gens: &[Coords]) -> Result<FiniteRing> {
    let span = additive_span(r, gens);
    let set: HashSet<&Coords> = span.iter().collect();
    for g in gens {
        for i in 0..r.dim() {
            let b = r.basis(i);
            if !set.contains(&r.mul(&b, g)) || !set.contains(&r.mul(g, &b)) {
                return Err(Error::NotTwoSidedIdeal(format!("{g:?} times basis element {i} leaves the span")));
            }
        }
    }
    let pres = AbelianSubquotient::new(r.orders(), None, gens);
    let dim = pres.orders.len();
    let mult = (0..dim)
        .map(|i| (0..dim).map(|j| pres.coords(&r.mul(&pres.lifts[i], &pres.lifts[j]))).collect())
        .collect();
    let unit = pres.coords(&r.one());
    make_ring(pres.orders.clone(), mult, unit, format!("{}/I", r.name()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gf4_is_a_field() {
        let f = galois_field(4).unwrap();
        assert_eq!(f.size(), 4);
        let zero = f.zero();
        for x in f.elements().iter().filter(|x| **x != zero) {
            assert!(f.elements().iter().any(|y| f.mul(x, y) == f.one()));
        }
    }

    #[test]
    fn gf_rejects_non_prime_powers() {
        assert!(matches!(galois_field(6), Err(Error::Parse(_))));
    }

    #[test]
    fn reducible_polynomial_rejected() {
        // x^2 + 1 = (x+1)^2 over F_2
        assert!(matches!(galois_field_with(2, &[1, 0, 1]), Err(Error::NotIrreducible(_))));
        assert_eq!(galois_field_with(2, &[1, 1, 1]).unwrap().size(), 4);
    }

    #[test]
    fn irreducibility_oracle() {
        assert!(is_irreducible(&[1, 1, 0, 1], 2)); // x^3+x+1
        assert!(!is_irreducible(&[0, 1, 1], 2)); // x^2+x
        assert!(is_irreducible(&[1, 0, 1], 3)); // x^2+1 over F_3
    }

    #[test]
    fn matrix_ring_sizes() {
        let f2 = zmod(2).unwrap();
        assert_eq!(matrix_ring(2, &f2).unwrap().size(), 16);
        assert_eq!(triangular_ring(2, &f2).unwrap().size(), 8);
        assert!(!matrix_ring(2, &f2).unwrap().is_commutative());
    }

    #[test]
    fn quotient_ring_by_ideal() {
        let z4 = zmod(4).unwrap();
        let q = quotient_ring(&z4, &[vec![2]]).unwrap();
        assert_eq!(q.size(), 2);
        let t = triangular_ring(2, &zmod(2).unwrap()).unwrap();
        // the span of e11 alone is not a two-sided ideal
        assert!(matches!(quotient_ring(&t, &[vec![1, 0, 0]]), Err(Error::NotTwoSidedIdeal(_))));
        // the radical e12 is
        assert_eq!(quotient_ring(&t, &[vec![0, 1, 0]]).unwrap().size(), 4);
    }

    #[test]
    fn dual_numbers() {
        let f2 = zmod(2).unwrap();
        let r = poly_quotient(&f2, &[0, 0, 1]).unwrap();
        assert_eq!(r.name(), "Z/2[x]/(x^2)");
        let x = vec![0, 1];
        assert_eq!(r.mul(&x, &x), vec![0, 0]);
    }

    #[test]
    fn render() {
        assert_eq!(render_poly(&[1, 1, 1]), "x^2+x+1");
        assert_eq!(render_poly(&[-1, 0, 1]), "x^2-1");
    }
}
