use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{Monomial, MonomialOrder, Rational};

/// Sparse polynomial in `t0..t{nvars-1}` with exact rational coefficients.
/// Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Self {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(Monomial::one(nvars), c);
        p
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rational::one())
    }

    /// The variable `t_var`.
    pub fn var(nvars: usize, var: usize) -> Self {
        Self::term(Monomial::var_power(nvars, var, 1), Rational::one())
    }

    pub fn term(m: Monomial, c: Rational) -> Self {
        let mut p = Self::zero(m.nvars());
        p.add_term(m, c);
        p
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut p = Self::zero(nvars);
        for (m, c) in terms {
            assert_eq!(m.nvars(), nvars, "monomial has the wrong number of variables");
            p.add_term(m, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Nonzero constant.
    pub fn is_nonzero_constant(&self) -> bool {
        self.terms.len() == 1 && self.terms.keys().next().is_some_and(Monomial::is_one)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// Terms sorted from largest to smallest under `ord`.
    pub fn sorted_terms(&self, ord: &MonomialOrder) -> Vec<(&Monomial, &Rational)> {
        let mut out: Vec<_> = self.terms.iter().collect();
        out.sort_by(|a, b| ord.cmp(b.0, a.0));
        out
    }

    pub fn leading_term(&self, ord: &MonomialOrder) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().max_by(|a, b| ord.cmp(a.0, b.0))
    }

    pub fn leading_monomial(&self, ord: &MonomialOrder) -> Option<&Monomial> {
        self.leading_term(ord).map(|(m, _)| m)
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// `self -= c * m * g`, in place.
    pub fn sub_scaled(&mut self, c: &Rational, m: &Monomial, g: &Polynomial) {
        for (gm, gc) in &g.terms {
            self.add_term(gm.mul(m), -(c * gc));
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }

    pub fn neg(&self) -> Self {
        self.scale(&-Rational::one())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        Self {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn mul_term(&self, m: &Monomial, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        Self {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(k, v)| (k.mul(m), v * c)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars);
        let mut out = Self::zero(self.nvars);
        for (m, c) in &other.terms {
            for (k, v) in &self.terms {
                out.add_term(k.mul(m), v * c);
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = Self::one(self.nvars);
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// Divides by the leading coefficient. Zero stays zero.
    pub fn monic(&self, ord: &MonomialOrder) -> Self {
        match self.leading_term(ord) {
            Some((_, c)) => {
                let inv = c.recip();
                self.scale(&inv)
            }
            None => self.clone(),
        }
    }

    /// Pads or keeps the variable count. Panics if a used variable would be
    /// dropped.
    pub fn with_nvars(&self, nvars: usize) -> Self {
        assert!(
            self.terms.keys().all(|m| m.support().all(|v| v < nvars)),
            "cannot drop a variable that is in use"
        );
        Self {
            nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.with_nvars(nvars), c.clone()))
                .collect(),
        }
    }

    /// Variables that occur in some term.
    pub fn variables(&self) -> Vec<usize> {
        let mut used = vec![false; self.nvars];
        for m in self.terms.keys() {
            for v in m.support() {
                used[v] = true;
            }
        }
        (0..self.nvars).filter(|&v| used[v]).collect()
    }

    /// If every term involves at most `var`, returns that variable.
    /// Constants return `None`.
    pub fn univariate_var(&self) -> Option<usize> {
        match self.variables().as_slice() {
            [v] => Some(*v),
            _ => None,
        }
    }

    /// Coefficients of a polynomial in a single variable, indexed by
    /// exponent. Returns `None` if another variable occurs.
    pub fn univariate_coeffs(&self, var: usize) -> Option<Vec<Rational>> {
        let mut out: Vec<Rational> = Vec::new();
        for (m, c) in &self.terms {
            if m.support().any(|v| v != var) {
                return None;
            }
            let e = m.exponent(var) as usize;
            if out.len() <= e {
                out.resize(e + 1, Rational::zero());
            }
            out[e] += c;
        }
        Some(out)
    }

    pub fn evaluate(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.nvars);
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for v in m.support() {
                t *= num_traits::pow(point[v].clone(), m.exponent(v) as usize);
            }
            total += t;
        }
        total
    }

    pub fn evaluate_integers(&self, point: &[BigInt]) -> Rational {
        let point: Vec<Rational> = point.iter().cloned().map(Rational::from_integer).collect();
        self.evaluate(&point)
    }

    /// Substitutes `t_var = value`.
    pub fn substitute(&self, var: usize, value: &Rational) -> Self {
        let mut out = Self::zero(self.nvars);
        for (m, c) in &self.terms {
            let e = m.exponent(var) as usize;
            out.add_term(
                m.with_var_removed(var),
                c * num_traits::pow(value.clone(), e),
            );
        }
        out
    }

    /// Substitutes `t_var = replacement`.
    pub fn compose_var(&self, var: usize, replacement: &Polynomial) -> Self {
        assert_eq!(self.nvars, replacement.nvars);
        let mut out = Self::zero(self.nvars);
        for (m, c) in &self.terms {
            let e = m.exponent(var);
            let rest = Polynomial::term(m.with_var_removed(var), c.clone());
            out = out.add(&rest.mul(&replacement.pow(e)));
        }
        out
    }

    /// True if every coefficient is an integer.
    pub fn has_integer_coefficients(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    /// Scales by the least common denominator so that all coefficients are
    /// integers.
    pub fn clear_denominators(&self) -> Self {
        let lcm = self
            .terms
            .values()
            .fold(BigInt::one(), |acc, c| num_integer::Integer::lcm(&acc, c.denom()));
        self.scale(&Rational::from_integer(lcm))
    }

    /// Text form under `ord`, largest term first. Coefficients `1` and
    /// `-1` are elided except on the constant term.
    pub fn to_string_with(&self, ord: &MonomialOrder) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (idx, (m, c)) in self.sorted_terms(ord).into_iter().enumerate() {
            let negative = c.is_negative();
            let abs = c.abs();
            if idx == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            if m.is_one() {
                out.push_str(&abs.to_string());
            } else {
                if !abs.is_one() {
                    out.push_str(&abs.to_string());
                    out.push('*');
                }
                out.push_str(&m.to_string());
            }
        }
        out
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_with(&MonomialOrder::default()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    fn t(nvars: usize, i: usize) -> Polynomial {
        Polynomial::var(nvars, i)
    }

    #[test]
    fn arithmetic_and_printing() {
        let x = t(2, 0);
        let y = t(2, 1);
        let p = x.mul(&x).sub(&x);
        assert_eq!(p.to_string(), "t0^2 - t0");
        let q = x.mul(&y).scale(&r(2)).sub(&Polynomial::one(2));
        assert_eq!(q.to_string(), "2*t0*t1 - 1");
        assert_eq!(p.sub(&p), Polynomial::zero(2));
        assert_eq!(Polynomial::zero(2).to_string(), "0");
        let half = Polynomial::term(Monomial::var_power(2, 1, 1), Rational::new((-3).into(), 2.into()));
        assert_eq!(half.to_string(), "-3/2*t1");
    }

    #[test]
    fn substitution_and_composition() {
        let x = t(2, 0);
        let y = t(2, 1);
        // t0^2 + t0*t1 at t0 = 2 gives 4 + 2*t1
        let p = x.mul(&x).add(&x.mul(&y));
        let s = p.substitute(0, &r(2));
        assert_eq!(s.to_string(), "2*t1 + 4");
        // t1 := 1 - t0 in t0*t1 gives -t0^2 + t0
        let one_minus = Polynomial::one(2).sub(&x);
        assert_eq!(x.mul(&y).compose_var(1, &one_minus).to_string(), "-t0^2 + t0");
        assert_eq!(p.evaluate_integers(&[2.into(), 3.into()]), r(10));
    }

    #[test]
    fn univariate_detection() {
        let x = t(3, 2);
        let p = x.mul(&x).scale(&r(5)).sub(&x);
        assert_eq!(p.univariate_var(), Some(2));
        assert_eq!(p.univariate_coeffs(2), Some(vec![r(0), r(-1), r(5)]));
        assert_eq!(Polynomial::one(3).univariate_var(), None);
        assert_eq!(x.add(&t(3, 0)).univariate_var(), None);
    }

    #[test]
    fn clearing_denominators() {
        let p = Polynomial::from_terms(
            1,
            [
                (Monomial::new(vec![1]), Rational::new(1.into(), 2.into())),
                (Monomial::new(vec![0]), Rational::new(1.into(), 3.into())),
            ],
        );
        let q = p.clear_denominators();
        assert!(q.has_integer_coefficients());
        assert_eq!(q.to_string(), "3*t0 + 2");
    }
}
