//! The integral quandle ring `Z[Q]`.
//!
//! Elements are dense coefficient vectors indexed by quandle elements. The
//! product is the bilinear extension of the quandle operation, so the ring
//! is in general neither associative nor unital, and nothing here assumes
//! either.
//!
//! Augmentation: the coefficient sum `eps(a) = sum a_i` is multiplicative,
//! `eps(ab) = eps(a) eps(b)`, because every product `x_i x_j` is a single
//! basis element. For an idempotent `e` this gives `eps(e)^2 = eps(e)`, so
//! `eps(e)` is 0 or 1. Nonzero idempotents of `Z[Q_n]` are the ones picked
//! out by adding the constraint `sum t_i = 1` to the coefficient equations.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::quandle::Quandle;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RingElement {
    coeffs: Vec<BigInt>,
}

impl RingElement {
    pub fn new(coeffs: Vec<BigInt>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::ZeroOrder);
        }
        Ok(Self { coeffs })
    }

    pub fn from_i64s(coeffs: &[i64]) -> Result<Self> {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero(n: usize) -> Self {
        Self {
            coeffs: vec![BigInt::zero(); n],
        }
    }

    /// The basis element `x_i`.
    pub fn basis(n: usize, i: usize) -> Self {
        let mut out = Self::zero(n);
        out.coeffs[i] = BigInt::one();
        out
    }

    pub fn quandle_order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    pub fn augmentation(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// Number of nonzero coefficients.
    pub fn length(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_basis_element(&self) -> bool {
        self.length() == 1 && self.coeffs.iter().any(One::is_one)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        check_orders(self.quandle_order(), other.quandle_order())?;
        Ok(Self {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn neg(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }
}

fn check_orders(left: usize, right: usize) -> Result<()> {
    if left != right {
        return Err(Error::OrderMismatch { left, right });
    }
    Ok(())
}

pub fn add(a: &RingElement, b: &RingElement) -> Result<RingElement> {
    a.add(b)
}

/// Bilinear product: the coefficient of `x_k` is the sum of `a_i b_j` over
/// all `(i, j)` with `i * j = k`.
pub fn multiply(q: &Quandle, a: &RingElement, b: &RingElement) -> Result<RingElement> {
    let n = q.order();
    check_orders(n, a.quandle_order())?;
    check_orders(n, b.quandle_order())?;
    let mut out = RingElement::zero(n);
    for (i, ai) in a.coeffs.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.coeffs.iter().enumerate() {
            if bj.is_zero() {
                continue;
            }
            out.coeffs[q.op(i, j)] += ai * bj;
        }
    }
    Ok(out)
}

/// `a * a == a`. The zero element passes.
pub fn is_idempotent(q: &Quandle, a: &RingElement) -> Result<bool> {
    Ok(multiply(q, a, a)? == *a)
}

pub fn length(a: &RingElement) -> usize {
    a.length()
}

/// The basis elements `x_0, .., x_{n-1}`.
pub fn trivial_idempotents(n: usize) -> Result<Vec<RingElement>> {
    if n == 0 {
        return Err(Error::ZeroOrder);
    }
    Ok((0..n).map(|i| RingElement::basis(n, i)).collect())
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let negative = c < &BigInt::zero();
            let abs = if negative { -c } else { c.clone() };
            match (wrote, negative) {
                (false, true) => f.write_str("-")?,
                (true, true) => f.write_str(" - ")?,
                (true, false) => f.write_str(" + ")?,
                (false, false) => {}
            }
            if !abs.is_one() {
                write!(f, "{abs}*")?;
            }
            write!(f, "x{i}")?;
            wrote = true;
        }
        if !wrote {
            f.write_str("0")?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct RingElementJson {
    n: usize,
    coeffs: Vec<String>,
}

impl Serialize for RingElement {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        RingElementJson {
            n: self.quandle_order(),
            coeffs: self.coeffs.iter().map(BigInt::to_string).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for RingElement {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = RingElementJson::deserialize(deserializer)?;
        if raw.coeffs.len() != raw.n {
            return Err(D::Error::custom(format!(
                "expected {} coefficients, found {}",
                raw.n,
                raw.coeffs.len()
            )));
        }
        let coeffs = raw
            .coeffs
            .iter()
            .map(|s| s.parse::<BigInt>().map_err(D::Error::custom))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        RingElement::new(coeffs).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quandle::make_dihedral;

    fn el(c: &[i64]) -> RingElement {
        RingElement::from_i64s(c).unwrap()
    }

    #[test]
    fn addition() {
        assert_eq!(
            el(&[1, 0, 0, 0, 0]).add(&el(&[0, 1, 0, 0, 0])).unwrap(),
            el(&[1, 1, 0, 0, 0])
        );
        let a = el(&[3, -2, 7]);
        assert_eq!(a.add(&RingElement::zero(3)).unwrap(), a);
        assert_eq!(el(&[2, -1]).add(&el(&[-2, 1])).unwrap(), el(&[0, 0]));
        assert_eq!(
            el(&[1, 2]).add(&el(&[1, 2, 3])),
            Err(Error::OrderMismatch { left: 2, right: 3 })
        );
    }

    #[test]
    fn products_in_q5() {
        let q = make_dihedral(5).unwrap();
        let x = |i| RingElement::basis(5, i);
        assert_eq!(multiply(&q, &x(1), &x(2)).unwrap(), x(3));
        for i in 0..5 {
            assert_eq!(multiply(&q, &x(i), &x(i)).unwrap(), x(i));
        }
        let sum = x(0).add(&x(1)).unwrap();
        assert_eq!(
            multiply(&q, &sum, &x(0)).unwrap(),
            x(0).add(&x(4)).unwrap()
        );
        assert!(multiply(&q, &el(&[1, 0]), &x(0)).is_err());
    }

    #[test]
    fn idempotency() {
        let q = make_dihedral(5).unwrap();
        assert!(is_idempotent(&q, &RingElement::basis(5, 3)).unwrap());
        assert!(!is_idempotent(&q, &el(&[1, 1, 0, 0, 0])).unwrap());
        assert!(is_idempotent(&q, &RingElement::zero(5)).unwrap());
    }

    #[test]
    fn lengths() {
        assert_eq!(length(&el(&[1, 0, 0, 0, 0])), 1);
        assert_eq!(length(&el(&[0, 0, 0, 0, 0])), 0);
        assert_eq!(length(&el(&[2, -1, 0, 3, 0])), 3);
    }

    #[test]
    fn trivial_ones() {
        let five = trivial_idempotents(5).unwrap();
        assert_eq!(five.len(), 5);
        let q = make_dihedral(5).unwrap();
        for (i, e) in five.iter().enumerate() {
            assert_eq!(e.coeffs()[i], BigInt::one());
            assert_eq!(e.length(), 1);
            assert!(is_idempotent(&q, e).unwrap());
        }
        assert_eq!(trivial_idempotents(1).unwrap(), vec![el(&[1])]);
        assert!(trivial_idempotents(0).is_err());
    }

    #[test]
    fn json_uses_decimal_strings() {
        let a = el(&[2, -1, 0]);
        let json = serde_json::to_string(&a).unwrap();
        assert_eq!(json, r#"{"n":3,"coeffs":["2","-1","0"]}"#);
        let back: RingElement = serde_json::from_str(&json).unwrap();
        assert_eq!(back, a);
        assert!(serde_json::from_str::<RingElement>(r#"{"n":2,"coeffs":["1"]}"#).is_err());
    }

    #[test]
    fn display() {
        assert_eq!(el(&[2, -1, 0, 1]).to_string(), "2*x0 - x1 + x3");
        assert_eq!(el(&[0, 0]).to_string(), "0");
    }
}
