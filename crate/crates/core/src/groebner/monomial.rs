use std::fmt;

/// Exponent vector over the variables `t0..t{n-1}`.
///
/// The derived `Ord` is plain lexicographic comparison of exponent vectors
/// and is only used for map keys; use a [`super::MonomialOrder`] for any
/// algebraic comparison.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Self(vec![0; nvars])
    }

    pub fn new(exponents: Vec<u32>) -> Self {
        Self(exponents)
    }

    /// `t_var^exp`.
    pub fn var_power(nvars: usize, var: usize, exp: u32) -> Self {
        let mut m = Self::one(nvars);
        m.0[var] = exp;
        m
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn exponent(&self, var: usize) -> u32 {
        self.0[var]
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Self) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self`, if `self` divides `other`.
    pub fn quotient_of(&self, other: &Self) -> Option<Self> {
        self.divides(other)
            .then(|| Self(other.0.iter().zip(&self.0).map(|(a, b)| a - b).collect()))
    }

    pub fn lcm(&self, other: &Self) -> Self {
        Self(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn is_coprime(&self, other: &Self) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    pub fn with_var_removed(&self, var: usize) -> Self {
        let mut m = self.clone();
        m.0[var] = 0;
        m
    }

    pub fn with_nvars(&self, nvars: usize) -> Self {
        let mut m = self.0.clone();
        m.resize(nvars, 0);
        Self(m)
    }

    /// Variables with a positive exponent.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            write!(f, "t{i}")?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_ops() {
        let a = Monomial::new(vec![2, 0, 1]);
        let b = Monomial::new(vec![1, 1, 0]);
        assert_eq!(a.lcm(&b), Monomial::new(vec![2, 1, 1]));
        assert_eq!(a.mul(&b), Monomial::new(vec![3, 1, 1]));
        assert!(!a.divides(&b));
        assert_eq!(
            b.quotient_of(&Monomial::new(vec![1, 2, 3])),
            Some(Monomial::new(vec![0, 1, 3]))
        );
        assert!(Monomial::new(vec![2, 0]).is_coprime(&Monomial::new(vec![0, 3])));
        assert_eq!(a.to_string(), "t0^2*t2");
        assert_eq!(Monomial::one(3).to_string(), "1");
    }
}
