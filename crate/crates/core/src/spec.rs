//! Text descriptions of rings.
//!
//! ```text
//! spec  := term (" x " term)*
//! term  := atom ("[x]/(" poly ")")*
//! atom  := "Z/" n | "GF(" q ")" | "Mat(" n "," spec ")" | "Tri(" n "," spec ")"
//!        | "op(" spec ")" | "(" spec ")"
//! ```

use crate::constructors::{galois_field, matrix_ring, poly_quotient, product, triangular_ring, zmod};
use crate::error::{Error, Result};
use crate::ring::FiniteRing;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RingExpr {
    Zn(u64),
    Gf(u64),
    Mat(usize, Box<RingExpr>),
    Tri(usize, Box<RingExpr>),
    Product(Box<RingExpr>, Box<RingExpr>),
    Op(Box<RingExpr>),
    /// base ring and polynomial coefficients, lowest degree first
    Poly(Box<RingExpr>, Vec<i64>),
}

impl RingExpr {
    pub fn build(&self) -> Result<FiniteRing> {
        match self {
            RingExpr::Zn(n) => zmod(*n),
            RingExpr::Gf(q) => galois_field(*q),
            RingExpr::Mat(n, r) => matrix_ring(*n, &r.build()?),
            RingExpr::Tri(n, r) => triangular_ring(*n, &r.build()?),
            RingExpr::Product(a, b) => product(&a.build()?, &b.build()?),
            RingExpr::Op(r) => Ok(r.build()?.opposite()),
            RingExpr::Poly(r, f) => poly_quotient(&r.build()?, f),
        }
    }

    /// The two factors when this is a product.
    pub fn factors(&self) -> Option<(&RingExpr, &RingExpr)> {
        match self {
            RingExpr::Product(a, b) => Some((a, b)),
            _ => None,
        }
    }
}

/// Parses and builds a ring; the ring is named by its canonical spec.
pub fn build_ring(spec: &str) -> Result<FiniteRing> {
    let expr = parse(spec)?;
    Ok(expr.build()?.with_name(expr_name(&expr)))
}

/// Canonical name of a parsed ring spec.
pub fn expr_name(e: &RingExpr) -> String {
    match e {
        RingExpr::Zn(n) => format!("Z/{n}"),
        RingExpr::Gf(q) => format!("GF({q})"),
        RingExpr::Mat(n, r) => format!("Mat({n},{})", expr_name(r)),
        RingExpr::Tri(n, r) => format!("Tri({n},{})", expr_name(r)),
        RingExpr::Product(a, b) => {
            let right = expr_name(b);
            if matches!(**b, RingExpr::Product(..)) {
                format!("{} x ({right})", expr_name(a))
            } else {
                format!("{} x {right}", expr_name(a))
            }
        }
        RingExpr::Op(r) => format!("op({})", expr_name(r)),
        RingExpr::Poly(r, f) => {
            let base = expr_name(r);
            let base = if matches!(**r, RingExpr::Product(..)) { format!("({base})") } else { base };
            format!("{base}[x]/({})", crate::constructors::render_poly(f))
        }
    }
}

/// True when every parenthesis in `s` is matched, reading left to right.
pub(crate) fn balanced(s: &str) -> bool {
    let mut depth = 0i64;
    for c in s.chars() {
        match c {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth < 0 {
                    return false;
                }
            }
            _ => {}
        }
    }
    depth == 0
}

pub fn parse(spec: &str) -> Result<RingExpr> {
    let chars: Vec<char> = spec.chars().collect();
    let mut p = Parser { s: chars, i: 0 };
    let e = p.spec()?;
    p.ws();
    if p.i != p.s.len() {
        return Err(p.err("trailing input"));
    }
    Ok(e)
}

struct Parser {
    s: Vec<char>,
    i: usize,
}

impl Parser {
    fn err(&self, msg: &str) -> Error {
        let s: String = self.s.iter().collect();
        Error::Parse(format!("{msg} at position {} in {s:?}", self.i))
    }

    fn ws(&mut self) {
        while self.i < self.s.len() && self.s[self.i].is_whitespace() {
            self.i += 1;
        }
    }

    fn peek(&self) -> Option<char> {
        self.s.get(self.i).copied()
    }

    fn eat(&mut self, lit: &str) -> bool {
        let save = self.i;
        self.ws();
        let l: Vec<char> = lit.chars().collect();
        if self.s[self.i..].starts_with(&l) {
            self.i += l.len();
            true
        } else {
            self.i = save;
            false
        }
    }

    fn expect(&mut self, lit: &str) -> Result<()> {
        if self.eat(lit) {
            Ok(())
        } else {
            Err(self.err(&format!("expected {lit:?}")))
        }
    }

    fn number(&mut self) -> Result<u64> {
        self.ws();
        let start = self.i;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.i += 1;
        }
        if start == self.i {
            return Err(self.err("expected a number"));
        }
        let t: String = self.s[start..self.i].iter().collect();
        t.parse().map_err(|_| self.err("number out of range"))
    }

    fn spec(&mut self) -> Result<RingExpr> {
        let mut left = self.term()?;
        loop {
            let save = self.i;
            self.ws();
            if self.peek() == Some('x') && self.i > save {
                self.i += 1;
                let right = self.term()?;
                left = RingExpr::Product(Box::new(left), Box::new(right));
            } else {
                self.i = save;
                return Ok(left);
            }
        }
    }

    fn term(&mut self) -> Result<RingExpr> {
        let mut base = self.atom()?;
        while self.eat("[x]/(") {
            let f = self.poly()?;
            self.expect(")")?;
            base = RingExpr::Poly(Box::new(base), f);
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<RingExpr> {
        if self.eat("Z/") {
            let n = self.number()?;
            if n == 0 {
                return Err(self.err("Z/0 is infinite"));
            }
            return Ok(RingExpr::Zn(n));
        }
        if self.eat("GF(") {
            let q = self.number()?;
            self.expect(")")?;
            return Ok(RingExpr::Gf(q));
        }
        for (kw, tri) in [("Mat(", false), ("Tri(", true)] {
            if self.eat(kw) {
                let n = self.number()? as usize;
                if n == 0 {
                    return Err(self.err("matrix size must be positive"));
                }
                self.expect(",")?;
                let r = self.spec()?;
                self.expect(")")?;
                let r = Box::new(r);
                return Ok(if tri { RingExpr::Tri(n, r) } else { RingExpr::Mat(n, r) });
            }
        }
        if self.eat("op(") {
            let r = self.spec()?;
            self.expect(")")?;
            return Ok(RingExpr::Op(Box::new(r)));
        }
        if self.eat("(") {
            let r = self.spec()?;
            self.expect(")")?;
            return Ok(r);
        }
        Err(self.err("expected a ring"))
    }

    /// Integer polynomial in `x`, e.g. `x^2+x+1` or `x^3 - 2*x + 1`.
    fn poly(&mut self) -> Result<Vec<i64>> {
        let mut coeffs: Vec<i64> = Vec::new();
        let mut first = true;
        loop {
            self.ws();
            let mut sign = 1i64;
            if self.eat("+") {
            } else if self.eat("-") {
                sign = -1;
            } else if !first {
                break;
            }
            first = false;
            self.ws();
            let mut c = 1i64;
            let mut had_num = false;
            if self.peek().is_some_and(|c| c.is_ascii_digit()) {
                c = self.number()? as i64;
                had_num = true;
                self.eat("*");
            }
            self.ws();
            let mut deg = 0usize;
            if self.peek() == Some('x') {
                self.i += 1;
                deg = 1;
                if self.eat("^") {
                    deg = self.number()? as usize;
                }
            } else if !had_num {
                return Err(self.err("expected a polynomial term"));
            }
            if coeffs.len() <= deg {
                coeffs.resize(deg + 1, 0);
            }
            coeffs[deg] += sign * c;
        }
        if coeffs.is_empty() {
            return Err(self.err("empty polynomial"));
        }
        Ok(coeffs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_name() {
        for (input, name) in [
            ("Z/6", "Z/6"),
            ("Tri(2, GF(2))", "Tri(2,GF(2))"),
            ("op(Tri(2,GF(2)))", "op(Tri(2,GF(2)))"),
            ("GF(2) x Z/4", "GF(2) x Z/4"),
            ("Tri(2,GF(2)) x GF(2)", "Tri(2,GF(2)) x GF(2)"),
            ("GF(2)[x]/(x^2)", "GF(2)[x]/(x^2)"),
            ("GF(3)[x]/(x^2)", "GF(3)[x]/(x^2)"),
            ("Mat(2, GF(2))", "Mat(2,GF(2))"),
        ] {
            let e = parse(input).unwrap();
            assert_eq!(expr_name(&e), name);
            assert_eq!(build_ring(input).unwrap().name(), name);
        }
    }

    #[test]
    fn product_is_left_associative() {
        let e = parse("Z/2 x Z/3 x Z/5").unwrap();
        let (a, b) = e.factors().unwrap();
        assert_eq!(b, &RingExpr::Zn(5));
        assert!(a.factors().is_some());
        assert_eq!(build_ring("Z/2 x Z/3 x Z/5").unwrap().size(), 30);
    }

    #[test]
    fn polynomial_forms() {
        let e = parse("Z/2[x]/(x^3 + x + 1)").unwrap();
        assert_eq!(e, RingExpr::Poly(Box::new(RingExpr::Zn(2)), vec![1, 1, 0, 1]));
        let e = parse("Z/4[x]/(x^2 - 2)").unwrap();
        assert_eq!(e, RingExpr::Poly(Box::new(RingExpr::Zn(4)), vec![-2, 0, 1]));
    }

    #[test]
    fn errors() {
        assert!(matches!(build_ring("Q"), Err(Error::Parse(_))));
        assert!(matches!(build_ring("Z/4 x"), Err(Error::Parse(_))));
        assert!(matches!(build_ring("GF(6)"), Err(Error::Parse(_))));
        assert!(matches!(build_ring("Mat(2,GF(2))[x]/(x^2)"), Err(Error::NotCommutative(_))));
        assert!(matches!(build_ring("Z/0"), Err(Error::Parse(_))));
    }

    #[test]
    fn opposite_names_collapse() {
        let t = build_ring("Tri(2,GF(2))").unwrap();
        assert_eq!(t.opposite().name(), "op(Tri(2,GF(2)))");
        assert_eq!(t.opposite().opposite().name(), "Tri(2,GF(2))");
        assert_eq!(t.opposite().opposite(), t);
    }

    #[test]
    fn balance() {
        assert!(balanced("a(b)c"));
        assert!(!balanced("a)(b"));
    }
}
