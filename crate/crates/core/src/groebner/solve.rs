//! Integer points of a polynomial system by case splitting on univariate
//! consequences.
//!
//! Each branch computes a grevlex Groebner basis. When the ideal is
//! zero-dimensional in the free variables, the minimal polynomial of every
//! free variable over the quotient ring is found by linear algebra on
//! normal forms of its powers; this is the generator of the elimination
//! ideal `I ∩ Q[t_v]`. The integer roots of the lowest-degree one are
//! substituted and the smaller system is solved recursively. A branch of
//! positive dimension uses a univariate basis element if there is one and
//! otherwise tries every value in a box for one free variable, which
//! downgrades the claim to [`Completeness::BoundedOnly`].

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::buchberger::buchberger_with_budget;
use super::division::normal_form;
use super::roots::integer_roots;
use super::{Monomial, MonomialOrder, Polynomial, Rational};
use crate::solutions::{Completeness, SolutionReport};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveBudget {
    /// Maximum number of branches visited.
    pub branches: usize,
    /// Pair budget for each Groebner basis computation.
    pub pairs: usize,
    /// Box radius used when a branch has no univariate consequence.
    pub fallback_bound: u64,
}

impl Default for SolveBudget {
    fn default() -> Self {
        Self {
            branches: 10_000,
            pairs: super::buchberger::DEFAULT_PAIR_BUDGET,
            fallback_bound: 3,
        }
    }
}

struct Branch {
    assignment: Vec<Option<BigInt>>,
    polys: Vec<Polynomial>,
}

pub fn solve_integer_points(system: &[Polynomial], budget: &SolveBudget) -> SolutionReport {
    let nvars = system.iter().map(Polynomial::nvars).max().unwrap_or(0);
    let system: Vec<Polynomial> = system.iter().map(|p| p.with_nvars(nvars)).collect();
    let ord = MonomialOrder::grevlex();

    let mut found: BTreeSet<Vec<BigInt>> = BTreeSet::new();
    let mut boxed = false;
    let mut exhausted = false;
    let mut visited = 0usize;
    let mut stack = vec![Branch {
        assignment: vec![None; nvars],
        polys: system.clone(),
    }];

    while let Some(branch) = stack.pop() {
        visited += 1;
        if visited > budget.branches {
            exhausted = true;
            break;
        }
        let polys: Vec<Polynomial> = branch.polys.into_iter().filter(|p| !p.is_zero()).collect();
        if polys.iter().any(Polynomial::is_nonzero_constant) {
            continue;
        }
        let free: Vec<usize> = (0..nvars)
            .filter(|&v| branch.assignment[v].is_none())
            .collect();
        if free.is_empty() {
            // every variable is fixed, so the remaining polynomials are
            // constants and all of them are zero
            let point = branch
                .assignment
                .into_iter()
                .map(|v| v.expect("assigned"))
                .collect();
            found.insert(point);
            continue;
        }

        let basis = match buchberger_with_budget(&polys, &ord, budget.pairs) {
            Ok(b) => Some(b),
            Err(_) => {
                exhausted = true;
                None
            }
        };
        if let Some(b) = &basis {
            if b.iter().any(Polynomial::is_nonzero_constant) {
                continue;
            }
        }
        let univariate = basis.as_ref().and_then(|b| {
            let candidates: Vec<(usize, Vec<Rational>)> = if is_zero_dimensional(b, &free, &ord) {
                free.iter()
                    .map(|&v| (v, minimal_polynomial(b, v, &ord)))
                    .collect()
            } else {
                b.iter()
                    .filter_map(|p| {
                        let v = p.univariate_var()?;
                        Some((v, p.univariate_coeffs(v)?))
                    })
                    .collect()
            };
            candidates.into_iter().min_by_key(|(v, c)| (c.len(), *v))
        });
        let reduced = basis.clone().unwrap_or(polys);

        let (var, values): (usize, Vec<BigInt>) = match univariate {
            Some((var, coeffs)) => {
                let roots = integer_roots(&coeffs).expect("basis elements are nonzero");
                (var, roots)
            }
            None => {
                boxed = true;
                let b = budget.fallback_bound as i64;
                (free[0], (-b..=b).map(BigInt::from).collect())
            }
        };
        // pushed in reverse so that smaller values are explored first
        for value in values.into_iter().rev() {
            let r = Rational::from_integer(value.clone());
            let mut assignment = branch.assignment.clone();
            assignment[var] = Some(value);
            stack.push(Branch {
                assignment,
                polys: reduced.iter().map(|p| p.substitute(var, &r)).collect(),
            });
        }
    }

    let solutions: Vec<Vec<BigInt>> = found
        .into_iter()
        .filter(|point| system.iter().all(|p| p.evaluate_integers(point).is_zero()))
        .collect();
    let complete = !boxed && !exhausted;
    SolutionReport {
        solutions,
        completeness: if complete {
            Completeness::Complete
        } else {
            Completeness::BoundedOnly
        },
        bound: boxed.then_some(budget.fallback_bound),
        budget_exhausted: exhausted,
    }
}

/// Every free variable has a pure power among the leading monomials, so
/// the quotient by the ideal is finite-dimensional in those variables.
fn is_zero_dimensional(basis: &[Polynomial], free: &[usize], ord: &MonomialOrder) -> bool {
    free.iter().all(|&v| {
        basis.iter().any(|g| {
            g.leading_monomial(ord)
                .is_some_and(|m| m.support().eq(std::iter::once(v)))
        })
    })
}

/// Monic minimal polynomial of `t_var` modulo a zero-dimensional Groebner
/// basis, as coefficients by ascending degree.
///
/// The normal forms of `1, t, t^2, ..` are reduced against each other
/// until one becomes a combination of the earlier ones.
pub fn minimal_polynomial(basis: &[Polynomial], var: usize, ord: &MonomialOrder) -> Vec<Rational> {
    let nvars = basis[0].nvars();
    let t = Monomial::var_power(nvars, var, 1);
    // echelon rows in insertion order; a row holds no pivot of an earlier
    // row, so one pass over them clears every pivot
    let mut rows: Vec<(Monomial, Polynomial, Vec<Rational>)> = Vec::new();
    let mut power = normal_form(&Polynomial::one(nvars), basis, ord);
    for k in 0.. {
        let mut vec = power.clone();
        let mut combo = vec![Rational::zero(); k + 1];
        combo[k] = Rational::one();
        for (pivot, row, row_combo) in &rows {
            let c = vec.coefficient(pivot);
            if c.is_zero() {
                continue;
            }
            let factor = c / row.coefficient(pivot);
            vec.sub_scaled(&factor, &Monomial::one(nvars), row);
            for (i, rc) in row_combo.iter().enumerate() {
                combo[i] -= &factor * rc;
            }
        }
        let pivot = vec.terms().next().map(|(m, _)| m.clone());
        match pivot {
            None => {
                let lead = combo[k].clone();
                return combo.into_iter().map(|c| c / &lead).collect();
            }
            Some(pivot) => {
                rows.push((pivot, vec, combo));
            }
        }
        power = normal_form(&power.mul_term(&t, &Rational::one()), basis, ord);
    }
    unreachable!("the quotient is finite-dimensional")
}
