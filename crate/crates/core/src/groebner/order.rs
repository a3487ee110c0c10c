use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use super::Monomial;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OrderKind {
    Lex,
    Grlex,
    Grevlex,
}

impl OrderKind {
    pub const ALL: [OrderKind; 3] = [OrderKind::Lex, OrderKind::Grlex, OrderKind::Grevlex];

    pub fn name(self) -> &'static str {
        match self {
            OrderKind::Lex => "lex",
            OrderKind::Grlex => "grlex",
            OrderKind::Grevlex => "grevlex",
        }
    }
}

impl fmt::Display for OrderKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for OrderKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "lex" => Ok(OrderKind::Lex),
            "grlex" => Ok(OrderKind::Grlex),
            "grevlex" => Ok(OrderKind::Grevlex),
            other => Err(Error::InvalidArgument(format!(
                "unknown monomial order '{other}' (expected lex, grlex or grevlex)"
            ))),
        }
    }
}

impl Serialize for OrderKind {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

/// A monomial order together with a variable precedence.
///
/// `precedence[0]` is the largest variable. Without an explicit precedence
/// the order is `t0 > t1 > ... > t{n-1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialOrder {
    kind: OrderKind,
    precedence: Option<Vec<usize>>,
}

impl MonomialOrder {
    pub fn new(kind: OrderKind) -> Self {
        Self {
            kind,
            precedence: None,
        }
    }

    pub fn lex() -> Self {
        Self::new(OrderKind::Lex)
    }

    pub fn grlex() -> Self {
        Self::new(OrderKind::Grlex)
    }

    pub fn grevlex() -> Self {
        Self::new(OrderKind::Grevlex)
    }

    pub fn with_precedence(kind: OrderKind, precedence: Vec<usize>) -> Result<Self> {
        if !crate::perm::is_permutation(&precedence) {
            return Err(Error::NotAPermutation {
                n: precedence.len(),
                images: precedence,
            });
        }
        Ok(Self {
            kind,
            precedence: Some(precedence),
        })
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    fn var_at(&self, rank: usize) -> usize {
        match &self.precedence {
            Some(p) => p[rank],
            None => rank,
        }
    }

    fn lex_cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        for rank in 0..a.nvars() {
            let v = self.var_at(rank);
            match a.exponent(v).cmp(&b.exponent(v)) {
                Ordering::Equal => continue,
                other => return other,
            }
        }
        Ordering::Equal
    }

    /// Compares two monomials over the same variables.
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(a.nvars(), b.nvars());
        match self.kind {
            OrderKind::Lex => self.lex_cmp(a, b),
            OrderKind::Grlex => a
                .degree()
                .cmp(&b.degree())
                .then_with(|| self.lex_cmp(a, b)),
            OrderKind::Grevlex => a.degree().cmp(&b.degree()).then_with(|| {
                for rank in (0..a.nvars()).rev() {
                    let v = self.var_at(rank);
                    match a.exponent(v).cmp(&b.exponent(v)) {
                        Ordering::Equal => continue,
                        other => return other.reverse(),
                    }
                }
                Ordering::Equal
            }),
        }
    }
}

impl Default for MonomialOrder {
    fn default() -> Self {
        Self::grevlex()
    }
}
