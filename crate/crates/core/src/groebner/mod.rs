//! Exact multivariate polynomial arithmetic over the rationals, Buchberger's
//! algorithm, ideal membership and an integer-point solver.

mod buchberger;
mod division;
mod monomial;
mod order;
pub mod listed_basis;
pub mod parse;
mod polynomial;
mod roots;
mod solve;

pub use buchberger::{
    buchberger, buchberger_with_budget, ideal_membership, is_groebner_basis, reduces_to_zero,
    sort_by_leading, DEFAULT_PAIR_BUDGET,
};
pub use division::{divide, normal_form, s_polynomial, Division};
pub use monomial::Monomial;
pub use order::{MonomialOrder, OrderKind};
pub use parse::{format_system, parse_polynomial, parse_system};
pub use polynomial::Polynomial;
pub use roots::integer_roots;
pub use solve::{solve_integer_points, SolveBudget};

/// Exact rational coefficients. Always normalized: positive denominator,
/// numerator and denominator coprime.
pub type Rational = num_rational::BigRational;
