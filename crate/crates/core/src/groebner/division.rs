use super::{MonomialOrder, Polynomial, Rational};

/// Result of multivariate division: `f = sum quotients[i] * divisors[i] + remainder`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Division {
    pub quotients: Vec<Polynomial>,
    pub remainder: Polynomial,
}

/// Multivariate division of `f` by `divisors`.
///
/// At each step the leading term of the running polynomial is cancelled by
/// the first divisor (in list order) whose leading monomial divides it;
/// if none does, the term moves to the remainder. No term of the
/// remainder is divisible by any divisor's leading monomial.
pub fn divide(f: &Polynomial, divisors: &[Polynomial], ord: &MonomialOrder) -> Division {
    let nvars = f.nvars();
    let leads: Vec<Option<(super::Monomial, Rational)>> = divisors
        .iter()
        .map(|g| {
            assert_eq!(g.nvars(), nvars, "divisor has the wrong number of variables");
            g.leading_term(ord).map(|(m, c)| (m.clone(), c.clone()))
        })
        .collect();
    let mut quotients = vec![Polynomial::zero(nvars); divisors.len()];
    let mut remainder = Polynomial::zero(nvars);
    let mut p = f.clone();
    while let Some((m, c)) = p.leading_term(ord).map(|(m, c)| (m.clone(), c.clone())) {
        let hit = leads.iter().enumerate().find_map(|(i, lead)| {
            let (lm, lc) = lead.as_ref()?;
            lm.quotient_of(&m).map(|shift| (i, shift, &c / lc))
        });
        match hit {
            Some((i, shift, factor)) => {
                p.sub_scaled(&factor, &shift, &divisors[i]);
                quotients[i].add_term(shift, factor);
            }
            None => {
                p.add_term(m.clone(), -c.clone());
                remainder.add_term(m, c);
            }
        }
    }
    Division {
        quotients,
        remainder,
    }
}

/// Remainder of [`divide`].
pub fn normal_form(f: &Polynomial, divisors: &[Polynomial], ord: &MonomialOrder) -> Polynomial {
    divide(f, divisors, ord).remainder
}

/// `S(f, g) = (L / LT(f)) f - (L / LT(g)) g` with `L` the lcm of the
/// leading monomials. Leading coefficients are divided out, so the leading
/// terms cancel exactly.
pub fn s_polynomial(f: &Polynomial, g: &Polynomial, ord: &MonomialOrder) -> Polynomial {
    let (fm, fc) = f.leading_term(ord).expect("s_polynomial of zero");
    let (gm, gc) = g.leading_term(ord).expect("s_polynomial of zero");
    let lcm = fm.lcm(gm);
    let left = f.mul_term(
        &fm.quotient_of(&lcm).expect("lcm is a multiple"),
        &fc.recip(),
    );
    let right = g.mul_term(
        &gm.quotient_of(&lcm).expect("lcm is a multiple"),
        &gc.recip(),
    );
    left.sub(&right)
}
