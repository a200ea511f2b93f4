//! Module specs: `R`, `R/rad`, `R/soc`, `simple:<i>`, `hull(<spec>)`,
//! `cover(<spec>)`, unnamed corpus modules `sq:<k>` and direct sums
//! `<spec>+<spec>`.

use std::fmt;

use ringlab_core::corpus::corpus_modules;
use ringlab_core::hom::are_isomorphic;
use ringlab_core::homological::{injective_hull, projective_cover};
use ringlab_core::morphism::direct_sum;
use ringlab_core::submodule::{j_radical, j_socle, quotient_module};
use ringlab_core::{FinModule, RingContext};

use crate::error::CliError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ModExpr {
    Regular,
    RadQuotient,
    SocQuotient,
    Simple(usize),
    /// unnamed module `sq:<k>` of the ring's module corpus
    Corpus(usize),
    Hull(Box<ModExpr>),
    Cover(Box<ModExpr>),
    Sum(Box<ModExpr>, Box<ModExpr>),
}

impl fmt::Display for ModExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModExpr::Regular => write!(f, "R"),
            ModExpr::RadQuotient => write!(f, "R/rad"),
            ModExpr::SocQuotient => write!(f, "R/soc"),
            ModExpr::Simple(i) => write!(f, "simple:{i}"),
            ModExpr::Corpus(i) => write!(f, "sq:{i}"),
            ModExpr::Hull(m) => write!(f, "hull({m})"),
            ModExpr::Cover(m) => write!(f, "cover({m})"),
            ModExpr::Sum(a, b) => write!(f, "{a}+{b}"),
        }
    }
}

struct Parser<'a> {
    s: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.s[self.pos..].starts_with(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn eat(&mut self, tok: &str) -> bool {
        self.skip_ws();
        if self.s[self.pos..].starts_with(tok) {
            self.pos += tok.len();
            true
        } else {
            false
        }
    }

    fn err(&self, what: &str) -> CliError {
        CliError::Input(format!("module spec {:?}: {what} at offset {}", self.s, self.pos))
    }

    fn sum(&mut self) -> Result<ModExpr, CliError> {
        let mut e = self.atom()?;
        while self.eat("+") {
            e = ModExpr::Sum(Box::new(e), Box::new(self.atom()?));
        }
        Ok(e)
    }

    fn wrapped(&mut self) -> Result<ModExpr, CliError> {
        let e = self.sum()?;
        if !self.eat(")") {
            return Err(self.err("expected ')'"));
        }
        Ok(e)
    }

    fn index(&mut self) -> Result<usize, CliError> {
        let start = self.pos;
        while self.s[self.pos..].starts_with(|c: char| c.is_ascii_digit()) {
            self.pos += 1;
        }
        self.s[start..self.pos].parse().map_err(|_| self.err("expected an index"))
    }

    fn atom(&mut self) -> Result<ModExpr, CliError> {
        if self.eat("hull(") {
            return Ok(ModExpr::Hull(Box::new(self.wrapped()?)));
        }
        if self.eat("cover(") {
            return Ok(ModExpr::Cover(Box::new(self.wrapped()?)));
        }
        if self.eat("(") {
            return self.wrapped();
        }
        if self.eat("simple:") {
            return self.index().map(ModExpr::Simple);
        }
        if self.eat("sq:") {
            return self.index().map(ModExpr::Corpus);
        }
        if self.eat("R/rad") {
            return Ok(ModExpr::RadQuotient);
        }
        if self.eat("R/soc") {
            return Ok(ModExpr::SocQuotient);
        }
        if self.eat("R") {
            return Ok(ModExpr::Regular);
        }
        Err(self.err("expected a module"))
    }
}

pub fn parse_module_spec(s: &str) -> Result<ModExpr, CliError> {
    let mut p = Parser { s, pos: 0 };
    let e = p.sum()?;
    p.skip_ws();
    if p.pos != s.len() {
        return Err(p.err("trailing input"));
    }
    Ok(e)
}

pub fn build_module(ctx: &RingContext, e: &ModExpr) -> Result<FinModule, CliError> {
    let reg = ctx.regular();
    Ok(match e {
        ModExpr::Regular => reg.clone(),
        ModExpr::RadQuotient => quotient_module(reg, &j_radical(reg))?.0,
        ModExpr::SocQuotient => quotient_module(reg, &j_socle(reg))?.0,
        ModExpr::Simple(i) => {
            let simples = ctx.simples()?;
            simples
                .get(*i)
                .ok_or_else(|| CliError::Input(format!("simple:{i} out of range; the ring has {} simples", simples.len())))?
                .module
                .clone()
        }
        ModExpr::Corpus(_) => {
            let label = e.to_string();
            corpus_modules(ctx)?
                .into_iter()
                .find(|c| c.label == label)
                .ok_or_else(|| CliError::Input(format!("the module corpus has no {label}")))?
                .module
        }
        ModExpr::Hull(m) => injective_hull(ctx, &build_module(ctx, m)?)?.hull,
        ModExpr::Cover(m) => projective_cover(ctx, &build_module(ctx, m)?)?.cover,
        ModExpr::Sum(a, b) => direct_sum(&build_module(ctx, a)?, &build_module(ctx, b)?)?.module,
    })
}

/// A short spec for a module, if it is isomorphic to one of the basic ones.
pub fn identify(ctx: &RingContext, m: &FinModule) -> Result<Option<String>, CliError> {
    let mut candidates = vec![ModExpr::Regular, ModExpr::RadQuotient, ModExpr::SocQuotient];
    candidates.extend((0..ctx.simples()?.len()).map(ModExpr::Simple));
    for c in candidates {
        let n = build_module(ctx, &c)?;
        if n.size() == m.size() && are_isomorphic(&n, m)? {
            return Ok(Some(c.to_string()));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use ringlab_core::{build_ring, Limits};

    #[test]
    fn round_trip() {
        for s in ["R", "R/rad", "R/soc", "simple:1", "hull(simple:0)", "R+hull(R/soc)", "cover(simple:0)+R", "sq:3+R"] {
            assert_eq!(parse_module_spec(s).unwrap().to_string(), s);
        }
        assert_eq!(parse_module_spec(" hull( R ) ").unwrap(), ModExpr::Hull(Box::new(ModExpr::Regular)));
    }

    #[test]
    fn rejects_garbage() {
        for s in ["", "S", "hull(R", "simple:", "R+", "R R"] {
            assert!(parse_module_spec(s).is_err(), "{s}");
        }
    }

    #[test]
    fn builds_over_z4() {
        let ctx = RingContext::new(build_ring("Z/4").unwrap(), Limits::default());
        let m = build_module(&ctx, &parse_module_spec("R+hull(R/rad)").unwrap()).unwrap();
        assert_eq!(m.size(), 16);
        assert!(build_module(&ctx, &ModExpr::Simple(3)).is_err());
        let s = build_module(&ctx, &ModExpr::SocQuotient).unwrap();
        assert_eq!(identify(&ctx, &s).unwrap().as_deref(), Some("R/rad"));
    }

    #[test]
    fn corpus_labels_resolve() {
        let ctx = RingContext::new(build_ring("Tri(2,GF(2))").unwrap(), Limits::default());
        for cm in corpus_modules(&ctx).unwrap() {
            let m = build_module(&ctx, &parse_module_spec(&cm.label).unwrap()).unwrap();
            assert!(are_isomorphic(&m, &cm.module).unwrap(), "{}", cm.label);
        }
        assert!(build_module(&ctx, &ModExpr::Corpus(999)).is_err());
    }
}
