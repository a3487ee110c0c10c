//! Checks a proposed 11-element list of polynomials against the ideal of
//! the `Q_5` idempotent system.
//!
//! Both inclusions are tested over the rationals: each listed polynomial
//! against a reduced basis of the system, and each system generator against
//! a basis computed from the list. As independent evidence the report also
//! evaluates every listed polynomial at the uniform point
//! `t_i = 1/n`, which is a common zero of every idempotent system (each
//! `x_k` has exactly `n` preimage pairs, so the coefficient equations read
//! `n / n^2 = 1 / n`). A listed polynomial that is nonzero there cannot lie
//! in the ideal.

use num_traits::Zero;
use serde::Serialize;

use super::{
    buchberger, parse_polynomial, reduces_to_zero, MonomialOrder, OrderKind, Polynomial, Rational,
};
use crate::error::Result;
use crate::quandle::make_dihedral;
use crate::system::build_system;

/// The listed basis, in the order it is displayed.
pub const LISTED_Q5_BASIS: [&str; 11] = [
    "t4^3 - t4^2",
    "t1^2 - t1",
    "t1*t2 + 3*t4^2 - 3*t4",
    "t2^2 - 3*t4^2 - t2 + 3*t4",
    "t1*t3 - t1^2 + t1",
    "t2*t3",
    "t3^2 - 4*t2^2 - t3 + 4*t2",
    "t1*t4 + t4^2 - t4",
    "t2*t4",
    "t3*t4",
    "5*t4^2 - 5*t4",
];

pub fn listed_q5_basis() -> Vec<Polynomial> {
    LISTED_Q5_BASIS
        .iter()
        .map(|s| parse_polynomial(s, Some(5)).expect("listed polynomial parses"))
        .collect()
}

/// `t_i = 1/n` for every `i`.
pub fn uniform_point(n: usize) -> Vec<Rational> {
    vec![Rational::new(1.into(), n.into()); n]
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ListedCheck {
    pub polynomial: String,
    pub in_system_ideal: bool,
    pub value_at_uniform_point: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GeneratorCheck {
    pub polynomial: String,
    pub in_listed_ideal: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CriterionCheck {
    pub order: OrderKind,
    pub listed_is_groebner_basis: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ListedBasisReport {
    pub listed: Vec<ListedCheck>,
    pub membership_passed: usize,
    pub membership_total: usize,
    pub generators: Vec<GeneratorCheck>,
    pub generators_in_listed_ideal: usize,
    pub ideals_equal: bool,
    pub criterion: Vec<CriterionCheck>,
    pub uniform_point_solves_system: bool,
    /// Reduced grevlex basis of the system.
    pub system_basis: Vec<String>,
}

impl ListedBasisReport {
    pub fn all_listed_in_ideal(&self) -> bool {
        self.membership_passed == self.membership_total
    }

    pub fn all_generators_in_listed_ideal(&self) -> bool {
        self.generators_in_listed_ideal == self.generators.len()
    }
}

pub fn verify_listed_basis_q5() -> Result<ListedBasisReport> {
    let ord = MonomialOrder::grevlex();
    let system = build_system(&make_dihedral(5)?).polynomials();
    let listed = listed_q5_basis();
    let system_basis = buchberger(&system, &ord)?;
    let listed_basis = buchberger(&listed, &ord)?;
    let point = uniform_point(5);

    let listed_checks: Vec<ListedCheck> = listed
        .iter()
        .map(|p| ListedCheck {
            polynomial: p.to_string(),
            in_system_ideal: reduces_to_zero(p, &system_basis, &ord),
            value_at_uniform_point: p.evaluate(&point).to_string(),
        })
        .collect();
    let generators: Vec<GeneratorCheck> = system
        .iter()
        .map(|g| GeneratorCheck {
            polynomial: g.to_string(),
            in_listed_ideal: reduces_to_zero(g, &listed_basis, &ord),
        })
        .collect();
    let membership_passed = listed_checks.iter().filter(|c| c.in_system_ideal).count();
    let generators_in_listed_ideal = generators.iter().filter(|c| c.in_listed_ideal).count();
    let criterion = OrderKind::ALL
        .iter()
        .map(|&kind| CriterionCheck {
            order: kind,
            listed_is_groebner_basis: super::is_groebner_basis(&listed, &MonomialOrder::new(kind)),
        })
        .collect();
    Ok(ListedBasisReport {
        membership_total: listed_checks.len(),
        membership_passed,
        ideals_equal: membership_passed == listed_checks.len()
            && generators_in_listed_ideal == generators.len(),
        generators_in_listed_ideal,
        listed: listed_checks,
        generators,
        criterion,
        uniform_point_solves_system: system.iter().all(|p| p.evaluate(&point).is_zero()),
        system_basis: system_basis.iter().map(|p| p.to_string_with(&ord)).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::ideal_membership;

    #[test]
    fn listed_polynomials_parse() {
        let l = listed_q5_basis();
        assert_eq!(l.len(), 11);
        assert_eq!(l[0].to_string(), "t4^3 - t4^2");
        assert_eq!(l[10].to_string(), "5*t4^2 - 5*t4");
    }

    #[test]
    fn uniform_point_is_a_zero_of_every_dihedral_system() {
        for n in 1..=9 {
            let sys = build_system(&make_dihedral(n).unwrap());
            let pt = uniform_point(n);
            assert!(sys.polynomials().iter().all(|p| p.evaluate(&pt).is_zero()));
        }
    }

    #[test]
    fn membership_verdict_matches_uniform_point_evidence() {
        let report = verify_listed_basis_q5().unwrap();
        assert!(report.uniform_point_solves_system);
        for c in &report.listed {
            // a polynomial that is nonzero at a common zero is not in the ideal
            if c.value_at_uniform_point != "0" {
                assert!(!c.in_system_ideal, "{}", c.polynomial);
            }
        }
    }

    #[test]
    fn membership_is_order_independent_on_q3() {
        let system = build_system(&make_dihedral(3).unwrap()).polynomials();
        let candidates = [
            "t0^2 - t0",
            "t0 + t1 + t2 - 1",
            "t2^3 - t2",
            "3*t2^2 - 4*t2 + 1",
            "t0*t1",
        ];
        for text in candidates {
            let p = crate::groebner::parse_polynomial(text, Some(3)).unwrap();
            let lex = ideal_membership(&p, &system, &MonomialOrder::lex()).unwrap();
            let grevlex = ideal_membership(&p, &system, &MonomialOrder::grevlex()).unwrap();
            assert_eq!(lex, grevlex, "{p}");
        }
    }
}
