use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::Rational;

/// Integer roots of a univariate polynomial given by its coefficients
/// (`coeffs[e]` multiplies `t^e`). Returns `None` when the polynomial is
/// identically zero. The result is sorted ascending.
///
/// After clearing denominators and factoring out `t^k`, every nonzero
/// integer root divides the trailing coefficient; 0 is a root iff `k > 0`.
/// Candidates are also capped by the Cauchy bound, and the search runs up to
/// whichever of the two limits is smaller.
pub fn integer_roots(coeffs: &[Rational]) -> Option<Vec<BigInt>> {
    let lcm = coeffs
        .iter()
        .filter(|c| !c.is_zero())
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = coeffs
        .iter()
        .map(|c| (c * Rational::from_integer(lcm.clone())).to_integer())
        .collect();
    let k = ints.iter().position(|c| !c.is_zero())?;
    let deg = ints.iter().rposition(|c| !c.is_zero()).expect("nonzero");
    let reduced = &ints[k..=deg];
    let mut roots = Vec::new();
    if k > 0 {
        roots.push(BigInt::zero());
    }
    if reduced.len() == 1 {
        return Some(roots);
    }
    let trailing = reduced[0].abs();
    let lead = reduced[reduced.len() - 1].abs();
    let max_ratio = reduced[..reduced.len() - 1]
        .iter()
        .map(|c| c.abs())
        .max()
        .expect("degree at least one");
    // Cauchy: |r| <= 1 + max|a_i| / |a_deg|
    let cauchy = BigInt::one() + max_ratio.div_ceil(&lead);

    let is_root = |r: &BigInt| {
        let mut acc = BigInt::zero();
        for c in reduced.iter().rev() {
            acc = acc * r + c;
        }
        acc.is_zero()
    };
    let push_candidate = |d: BigInt, roots: &mut Vec<BigInt>| {
        if d > cauchy {
            return;
        }
        for r in [d.clone(), -d] {
            if is_root(&r) && !roots.contains(&r) {
                roots.push(r);
            }
        }
    };

    let mut d = BigInt::one();
    if cauchy.clone() * cauchy.clone() <= trailing {
        while d <= cauchy {
            if trailing.is_multiple_of(&d) {
                push_candidate(d.clone(), &mut roots);
            }
            d += 1;
        }
    } else {
        while d.clone() * d.clone() <= trailing {
            if trailing.is_multiple_of(&d) {
                push_candidate(d.clone(), &mut roots);
                push_candidate(&trailing / &d, &mut roots);
            }
            d += 1;
        }
    }
    roots.sort();
    Some(roots)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| Rational::from_integer(x.into())).collect()
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| x.into()).collect()
    }

    #[test]
    fn idempotent_style_polynomials() {
        // t^2 - t
        assert_eq!(integer_roots(&c(&[0, -1, 1])), Some(ints(&[0, 1])));
        // 5t^3 - 6t^2 + t = t(5t - 1)(t - 1)
        assert_eq!(integer_roots(&c(&[0, 1, -6, 5])), Some(ints(&[0, 1])));
        // t - 1
        assert_eq!(integer_roots(&c(&[-1, 1])), Some(ints(&[1])));
    }

    #[test]
    fn edge_cases() {
        assert_eq!(integer_roots(&c(&[0, 0])), None);
        assert_eq!(integer_roots(&[]), None);
        assert_eq!(integer_roots(&c(&[7])), Some(vec![]));
        assert_eq!(integer_roots(&c(&[0, 0, 3])), Some(ints(&[0])));
        // (t - 6)(t + 4)(t - 1) = t^3 - 3t^2 - 22t + 24
        assert_eq!(integer_roots(&c(&[24, -22, -3, 1])), Some(ints(&[-4, 1, 6])));
        // t^2 + 1 has no real roots
        assert_eq!(integer_roots(&c(&[1, 0, 1])), Some(vec![]));
        // 1/2 t - 3 has root 6
        let half = vec![
            Rational::from_integer((-3).into()),
            Rational::new(1.into(), 2.into()),
        ];
        assert_eq!(integer_roots(&half), Some(ints(&[6])));
    }

    #[test]
    fn large_trailing_coefficient_uses_cauchy_bound() {
        // t^2 - (10^12 + 1) t + 10^12 = (t - 1)(t - 10^12)
        let big = 1_000_000_000_000i64;
        assert_eq!(
            integer_roots(&c(&[big, -(big + 1), 1])),
            Some(ints(&[1, big]))
        );
        // 1000 t - 10^12: root 10^9, trailing 10^12
        assert_eq!(integer_roots(&c(&[-big, 1000])), Some(ints(&[1_000_000_000])));
    }

    #[test]
    fn agrees_with_brute_force_on_small_polynomials() {
        for a in -3i64..=3 {
            for b in -3i64..=3 {
                for cc in -3i64..=3 {
                    let coeffs = c(&[cc, b, a, 1]);
                    let expected: Vec<BigInt> = (-10i64..=10)
                        .filter(|&r| r * r * r + a * r * r + b * r + cc == 0)
                        .map(BigInt::from)
                        .collect();
                    assert_eq!(integer_roots(&coeffs), Some(expected));
                }
            }
        }
    }
}
