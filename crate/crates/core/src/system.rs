//! The polynomial system whose integer solutions are the idempotents of
//! `Z[Q]` with augmentation 1, plus the bounded brute-force search and the
//! length-two analysis built on it.
//!
//! Comparing coefficients of `x_k` in `(sum t_i x_i)^2 = sum t_i x_i` gives
//! `sum_{i*j=k} t_i t_j - t_k = 0`. Equations are stored in that sign (the
//! quadratic part first) with symmetric cross terms collected, so
//! `t_a t_b` and `t_b t_a` hitting the same `x_k` become `2*t_a*t_b`.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::groebner::{format_system, integer_roots, Monomial, MonomialOrder, Polynomial, Rational};
use crate::quandle::{make_dihedral, Quandle};
use crate::ring::{is_idempotent, RingElement};
use crate::solutions::{Completeness, SolutionReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum EquationOrigin {
    /// Coefficient of `x_k`.
    Coefficient(usize),
    /// `sum t_i - 1`.
    Augmentation,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Equation {
    pub origin: EquationOrigin,
    pub poly: Polynomial,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdempotentSystem {
    n: usize,
    equations: Vec<Equation>,
    /// `None` for the full system.
    support: Option<BTreeSet<usize>>,
}

/// `n` coefficient equations followed by the augmentation equation.
pub fn build_system(q: &Quandle) -> IdempotentSystem {
    let n = q.order();
    let mut equations: Vec<Equation> = (0..n)
        .map(|k| Equation {
            origin: EquationOrigin::Coefficient(k),
            poly: Polynomial::var(n, k).neg(),
        })
        .collect();
    for i in 0..n {
        for j in 0..n {
            let mut exps = vec![0u32; n];
            exps[i] += 1;
            exps[j] += 1;
            equations[q.op(i, j)]
                .poly
                .add_term(Monomial::new(exps), Rational::one());
        }
    }
    let mut aug = Polynomial::constant(n, -Rational::one());
    for i in 0..n {
        aug.add_term(Monomial::var_power(n, i, 1), Rational::one());
    }
    equations.push(Equation {
        origin: EquationOrigin::Augmentation,
        poly: aug,
    });
    IdempotentSystem {
        n,
        equations,
        support: None,
    }
}

/// The system in matrix form `B T - T` with `b_kj = t_{a_kj}`. It agrees
/// with [`build_system`] whenever every right translation is an involution,
/// as in every dihedral quandle.
pub fn matrix_form(q: &Quandle) -> Vec<Polynomial> {
    let n = q.order();
    (0..n)
        .map(|k| {
            let mut p = Polynomial::var(n, k).neg();
            for j in 0..n {
                let mut exps = vec![0u32; n];
                exps[q.op(k, j)] += 1;
                exps[j] += 1;
                p.add_term(Monomial::new(exps), Rational::one());
            }
            p
        })
        .collect()
}

impl IdempotentSystem {
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn equations(&self) -> &[Equation] {
        &self.equations
    }

    pub fn polynomials(&self) -> Vec<Polynomial> {
        self.equations.iter().map(|e| e.poly.clone()).collect()
    }

    pub fn support(&self) -> Option<&BTreeSet<usize>> {
        self.support.as_ref()
    }

    /// Variables that may be nonzero.
    pub fn active_variables(&self) -> Vec<usize> {
        match &self.support {
            Some(s) => s.iter().copied().collect(),
            None => (0..self.n).collect(),
        }
    }

    pub fn equation(&self, origin: EquationOrigin) -> Option<&Equation> {
        self.equations.iter().find(|e| e.origin == origin)
    }

    pub fn is_satisfied_by(&self, point: &[BigInt]) -> bool {
        point.len() == self.n
            && self
                .equations
                .iter()
                .all(|e| e.poly.evaluate_integers(point).is_zero())
    }

    /// Sets `t_m = 0` for every `m` outside `support` and drops equations
    /// that become identically zero.
    pub fn restrict_to_support(&self, support: &[usize]) -> Result<IdempotentSystem> {
        if support.is_empty() {
            return Err(Error::InvalidArgument("support must be nonempty".into()));
        }
        if let Some(&bad) = support.iter().find(|&&i| i >= self.n) {
            return Err(Error::InvalidArgument(format!(
                "support index {bad} out of range for order {}",
                self.n
            )));
        }
        let mut keep: BTreeSet<usize> = support.iter().copied().collect();
        if let Some(current) = &self.support {
            keep = keep.intersection(current).copied().collect();
        }
        let zero = Rational::zero();
        let equations = self
            .equations
            .iter()
            .filter_map(|e| {
                let mut poly = e.poly.clone();
                for m in (0..self.n).filter(|m| !keep.contains(m)) {
                    poly = poly.substitute(m, &zero);
                }
                (!poly.is_zero()).then_some(Equation {
                    origin: e.origin,
                    poly,
                })
            })
            .collect();
        let support = (keep.len() < self.n).then_some(keep);
        Ok(IdempotentSystem {
            n: self.n,
            equations,
            support,
        })
    }

    /// Retained coefficient equations whose row index lies outside the
    /// support. For a two-element support these are the vanishing-product
    /// equations.
    pub fn outside_support_equations(&self) -> Vec<&Equation> {
        let Some(support) = &self.support else {
            return Vec::new();
        };
        self.equations
            .iter()
            .filter(|e| matches!(e.origin, EquationOrigin::Coefficient(k) if !support.contains(&k)))
            .collect()
    }

    /// One polynomial per line in the shared text format.
    pub fn to_text(&self) -> String {
        format_system(&self.polynomials(), &MonomialOrder::grevlex())
    }
}

impl fmt::Display for IdempotentSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BruteForceConfig {
    /// Box radius: every coordinate satisfies `|t_i| <= bound`.
    pub bound: u64,
    /// Maximum of `n * (2 * bound + 1)^n` accepted before searching.
    pub work_limit: u128,
    /// Number of worker threads.
    pub jobs: usize,
}

pub const DEFAULT_BOUND: u64 = 3;
pub const MAX_BOUND: u64 = 1_000_000;

impl Default for BruteForceConfig {
    fn default() -> Self {
        Self {
            bound: DEFAULT_BOUND,
            work_limit: 1_000_000_000,
            jobs: 1,
        }
    }
}

/// Integer-coefficient form of one equation for fast evaluation.
struct CompiledEquation {
    terms: Vec<(i128, Vec<(usize, u32)>)>,
}

impl CompiledEquation {
    fn new(p: &Polynomial) -> Result<Self> {
        let p = p.clear_denominators();
        let terms = p
            .terms()
            .map(|(m, c)| {
                let c = c.to_integer().to_i128().ok_or_else(|| {
                    Error::InvalidArgument("coefficient too large for brute force".into())
                })?;
                Ok((c, m.support().map(|v| (v, m.exponent(v))).collect()))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { terms })
    }

    fn vanishes_at(&self, point: &[i64]) -> bool {
        let mut total: i128 = 0;
        for (c, factors) in &self.terms {
            let mut t = *c;
            for &(v, e) in factors {
                t *= (point[v] as i128).pow(e);
            }
            total += t;
        }
        total == 0
    }
}

/// All integer solutions inside the box `|t_i| <= bound`.
///
/// The last active coordinate is forced by `sum t_i = 1`, so only
/// `(2 bound + 1)^(active - 1)` candidates are tested against the quadratic
/// equations. The result is identical for every `jobs` value.
pub fn brute_force_search(sys: &IdempotentSystem, config: &BruteForceConfig) -> Result<SolutionReport> {
    if config.bound == 0 || config.bound > MAX_BOUND {
        return Err(Error::InvalidArgument(format!(
            "bound must lie in 1..={MAX_BOUND}, got {}",
            config.bound
        )));
    }
    if sys.equation(EquationOrigin::Augmentation).is_none() {
        return Err(Error::InvalidArgument(
            "brute force requires the augmentation equation".into(),
        ));
    }
    let n = sys.order();
    let active = sys.active_variables();
    let side = 2 * config.bound as u128 + 1;
    let needed = side
        .checked_pow(active.len() as u32)
        .and_then(|v| v.checked_mul(n as u128))
        .unwrap_or(u128::MAX);
    if needed > config.work_limit {
        return Err(Error::WorkLimit {
            needed,
            limit: config.work_limit,
        });
    }

    let compiled = sys
        .equations()
        .iter()
        .map(|e| CompiledEquation::new(&e.poly))
        .collect::<Result<Vec<_>>>()?;
    let bound = config.bound as i64;
    let (free, forced) = active.split_at(active.len() - 1);
    let forced = forced[0];

    let search = |first_values: Vec<i64>| -> BTreeSet<Vec<i64>> {
        let mut hits = BTreeSet::new();
        let mut point = vec![0i64; n];
        let check = |point: &mut Vec<i64>, hits: &mut BTreeSet<Vec<i64>>| {
            let sum: i64 = free.iter().map(|&v| point[v]).sum();
            let last = 1 - sum;
            if last.abs() > bound {
                return;
            }
            point[forced] = last;
            if compiled.iter().all(|e| e.vanishes_at(point)) {
                hits.insert(point.clone());
            }
        };
        if free.is_empty() {
            check(&mut point, &mut hits);
            return hits;
        }
        for first in first_values {
            point[free[0]] = first;
            for &v in &free[1..] {
                point[v] = -bound;
            }
            loop {
                check(&mut point, &mut hits);
                // odometer over free[1..]
                let mut idx = 1;
                loop {
                    if idx == free.len() {
                        break;
                    }
                    let v = free[idx];
                    if point[v] < bound {
                        point[v] += 1;
                        break;
                    }
                    point[v] = -bound;
                    idx += 1;
                }
                if idx == free.len() {
                    break;
                }
            }
        }
        hits
    };

    let all_first: Vec<i64> = (-bound..=bound).collect();
    let jobs = config.jobs.max(1);
    let found: BTreeSet<Vec<i64>> = if jobs == 1 || free.is_empty() {
        search(all_first)
    } else {
        let chunks: Vec<Vec<i64>> = (0..jobs)
            .map(|w| all_first.iter().copied().skip(w).step_by(jobs).collect())
            .collect();
        std::thread::scope(|scope| {
            let handles: Vec<_> = chunks
                .into_iter()
                .map(|chunk| scope.spawn(|| search(chunk)))
                .collect();
            handles
                .into_iter()
                .flat_map(|h| h.join().expect("search worker panicked"))
                .collect()
        })
    };

    let solutions: Vec<Vec<BigInt>> = found
        .into_iter()
        .map(|p| p.into_iter().map(BigInt::from).collect())
        .collect();
    Ok(SolutionReport {
        solutions,
        completeness: Completeness::BoundedOnly,
        bound: Some(config.bound),
        budget_exhausted: false,
    })
}

/// Integer solutions `(t_i, t_j)` of a system restricted to `{i, j}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PairSolutions {
    Finite(Vec<(BigInt, BigInt)>),
    /// Every `t_i` with `t_j = 1 - t_i` is a solution.
    Infinite,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairAnalysis {
    pub i: usize,
    pub j: usize,
    pub solutions: PairSolutions,
    /// Rows `k` outside `{i, j}` whose restricted equation is
    /// `c * t_i * t_j` with `c` in `{1, 2}`.
    pub vanishing_product_rows: Vec<usize>,
}

impl PairAnalysis {
    /// No solution has both coordinates nonzero.
    pub fn excludes_length_two(&self) -> bool {
        match &self.solutions {
            PairSolutions::Finite(s) => s.iter().all(|(a, b)| a.is_zero() || b.is_zero()),
            PairSolutions::Infinite => false,
        }
    }
}

fn solve_pair(sys: &IdempotentSystem, i: usize, j: usize) -> Result<PairAnalysis> {
    let n = sys.order();
    let restricted = sys.restrict_to_support(&[i, j])?;
    let one_minus = Polynomial::one(n).sub(&Polynomial::var(n, i));
    let univariate: Vec<Polynomial> = restricted
        .equations()
        .iter()
        .map(|e| e.poly.compose_var(j, &one_minus))
        .filter(|p| !p.is_zero())
        .collect();
    let solutions = match univariate.first() {
        None => PairSolutions::Infinite,
        Some(first) => {
            let coeffs = first
                .univariate_coeffs(i)
                .expect("only t_i remains after substitution");
            let roots = integer_roots(&coeffs).expect("nonzero polynomial");
            PairSolutions::Finite(
                roots
                    .into_iter()
                    .filter(|r| {
                        let point = Rational::from_integer(r.clone());
                        univariate
                            .iter()
                            .all(|p| p.substitute(i, &point).is_zero())
                    })
                    .map(|r| {
                        let other = BigInt::one() - &r;
                        (r, other)
                    })
                    .collect(),
            )
        }
    };
    let mut product = vec![0u32; n];
    product[i] += 1;
    product[j] += 1;
    let product = Monomial::new(product);
    let vanishing_product_rows = restricted
        .outside_support_equations()
        .into_iter()
        .filter(|e| {
            e.poly.num_terms() == 1 && {
                let c = e.poly.coefficient(&product);
                c.is_integer() && c.is_positive() && c.to_integer() <= BigInt::from(2)
            }
        })
        .filter_map(|e| match e.origin {
            EquationOrigin::Coefficient(k) => Some(k),
            EquationOrigin::Augmentation => None,
        })
        .collect();
    Ok(PairAnalysis {
        i,
        j,
        solutions,
        vanishing_product_rows,
    })
}

/// Solves the restricted system of `Q_n` on every support `{i, j}`, `i < j`.
/// Odd `n` is the case with a known answer; even `n >= 2` is accepted as an
/// exploratory computation.
pub fn length2_analysis(n: usize) -> Result<Vec<PairAnalysis>> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!(
            "length-two analysis needs n >= 2, got {n}"
        )));
    }
    let sys = build_system(&make_dihedral(n)?);
    let mut out = Vec::with_capacity(n * (n - 1) / 2);
    for i in 0..n {
        for j in i + 1..n {
            out.push(solve_pair(&sys, i, j)?);
        }
    }
    Ok(out)
}

/// True iff `Z[Q_n]` has no idempotent of length two with augmentation 1.
pub fn verify_no_length2(n: usize) -> Result<bool> {
    Ok(length2_analysis(n)?
        .iter()
        .all(PairAnalysis::excludes_length_two))
}

/// Sample points where membership in the solution set of
/// [`build_system`] disagrees with "idempotent with augmentation 1".
pub fn characterization_mismatches(q: &Quandle, samples: &[Vec<BigInt>]) -> Result<Vec<Vec<BigInt>>> {
    let sys = build_system(q);
    let mut out = Vec::new();
    for v in samples {
        let element = RingElement::new(v.clone())?;
        let by_ring = is_idempotent(q, &element)? && element.augmentation().is_one();
        if sys.is_satisfied_by(v) != by_ring {
            out.push(v.clone());
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::parse_polynomial;
    use crate::solutions::unit_vectors;

    fn poly(s: &str, n: usize) -> Polynomial {
        parse_polynomial(s, Some(n)).unwrap()
    }

    #[test]
    fn q5_first_equation() {
        let sys = build_system(&make_dihedral(5).unwrap());
        assert_eq!(sys.equations().len(), 6);
        // t0 = t0*t0 + t2*t1 + t4*t2 + t1*t3 + t3*t4
        let expected = poly("t0^2 + t1*t2 + t2*t4 + t1*t3 + t3*t4 - t0", 5);
        assert_eq!(sys.equations()[0].poly, expected);
        assert_eq!(
            sys.equations()[5].poly,
            poly("t0 + t1 + t2 + t3 + t4 - 1", 5)
        );
    }

    #[test]
    fn q1_and_q3_systems() {
        let q1 = build_system(&make_dihedral(1).unwrap());
        assert_eq!(q1.to_text(), "t0^2 - t0\nt0 - 1\n");
        let q3 = build_system(&make_dihedral(3).unwrap());
        // sum_i t_{2i mod 3} t_i = t0^2 + t2*t1 + t1*t2
        assert_eq!(q3.equations()[0].poly, poly("t0^2 + 2*t1*t2 - t0", 3));
    }

    #[test]
    fn matrix_form_agrees_for_dihedral() {
        for n in 1..=12 {
            let q = make_dihedral(n).unwrap();
            let sys = build_system(&q);
            let coefficient_eqs: Vec<Polynomial> =
                sys.polynomials().into_iter().take(n).collect();
            assert_eq!(coefficient_eqs, matrix_form(&q), "n = {n}");
        }
    }

    #[test]
    fn unit_vectors_solve_any_quandle_system() {
        let quandles = [
            make_dihedral(6).unwrap(),
            Quandle::trivial(4).unwrap(),
            Quandle::from_table(&[vec![0, 0], vec![1, 1]]).unwrap(),
        ];
        for q in &quandles {
            let sys = build_system(q);
            for u in unit_vectors(q.order()) {
                assert!(sys.is_satisfied_by(&u));
            }
        }
    }

    #[test]
    fn characterization_on_exhaustive_small_box() {
        for n in [2, 3, 4] {
            let q = make_dihedral(n).unwrap();
            let mut samples = Vec::new();
            let mut v = vec![-2i64; n];
            loop {
                samples.push(v.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>());
                let mut idx = 0;
                while idx < n && v[idx] == 2 {
                    v[idx] = -2;
                    idx += 1;
                }
                if idx == n {
                    break;
                }
                v[idx] += 1;
            }
            assert!(characterization_mismatches(&q, &samples).unwrap().is_empty());
        }
    }

    #[test]
    fn brute_force_small_orders() {
        let q1 = build_system(&make_dihedral(1).unwrap());
        let r = brute_force_search(&q1, &BruteForceConfig { bound: 1, ..Default::default() }).unwrap();
        assert_eq!(r.solutions, vec![vec![BigInt::one()]]);
        assert_eq!(r.completeness, Completeness::BoundedOnly);

        let q3 = build_system(&make_dihedral(3).unwrap());
        let r = brute_force_search(&q3, &BruteForceConfig { bound: 2, ..Default::default() }).unwrap();
        assert!(r.is_unit_vectors(3));
        assert_eq!(r.bound, Some(2));
    }

    #[test]
    fn brute_force_finds_nontrivial_solutions_of_q2() {
        // Q_2 is the trivial quandle on two points: a*x0 + (1 - a)*x1 is
        // idempotent for every integer a.
        let sys = build_system(&make_dihedral(2).unwrap());
        let r = brute_force_search(&sys, &BruteForceConfig { bound: 2, ..Default::default() }).unwrap();
        assert_eq!(r.solutions.len(), 4);
        let q = make_dihedral(2).unwrap();
        for s in &r.solutions {
            assert!(is_idempotent(&q, &RingElement::new(s.clone()).unwrap()).unwrap());
        }
    }

    #[test]
    fn brute_force_limits() {
        let sys = build_system(&make_dihedral(5).unwrap());
        let tight = BruteForceConfig {
            bound: 3,
            work_limit: 100,
            jobs: 1,
        };
        assert!(matches!(
            brute_force_search(&sys, &tight),
            Err(Error::WorkLimit { limit: 100, .. })
        ));
        let zero = BruteForceConfig { bound: 0, ..Default::default() };
        assert!(matches!(brute_force_search(&sys, &zero), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn parallel_partitioning_is_invisible() {
        let sys = build_system(&make_dihedral(4).unwrap());
        let serial = brute_force_search(&sys, &BruteForceConfig::default()).unwrap();
        for jobs in [2, 3, 7, 16] {
            let par = brute_force_search(&sys, &BruteForceConfig { jobs, ..Default::default() }).unwrap();
            assert_eq!(par, serial, "jobs = {jobs}");
        }
    }

    #[test]
    fn restriction() {
        let sys = build_system(&make_dihedral(5).unwrap());
        let full = sys.restrict_to_support(&[0, 1, 2, 3, 4]).unwrap();
        assert_eq!(full, sys);

        let single = sys.restrict_to_support(&[2]).unwrap();
        let polys = single.polynomials();
        assert_eq!(polys, vec![poly("t2^2 - t2", 5), poly("t2 - 1", 5)]);

        let pair = sys.restrict_to_support(&[0, 1]).unwrap();
        let outside = pair.outside_support_equations();
        assert!(!outside.is_empty());
        let product = poly("t0*t1", 5);
        assert!(outside.iter().any(|e| {
            e.poly == product || e.poly == product.scale(&Rational::from_integer(2.into()))
        }));

        assert!(sys.restrict_to_support(&[]).is_err());
        assert!(sys.restrict_to_support(&[5]).is_err());
    }

    #[test]
    fn restricted_solutions_lift() {
        let sys = build_system(&make_dihedral(5).unwrap());
        let restricted = sys.restrict_to_support(&[1, 3]).unwrap();
        let r = brute_force_search(&restricted, &BruteForceConfig::default()).unwrap();
        assert!(!r.solutions.is_empty());
        for s in &r.solutions {
            assert!(restricted.is_satisfied_by(s));
            assert!(sys.is_satisfied_by(s));
            assert!(s[0].is_zero() && s[2].is_zero() && s[4].is_zero());
        }
    }

    #[test]
    fn no_length_two_for_small_odd_orders() {
        assert!(verify_no_length2(3).unwrap());
        assert!(verify_no_length2(5).unwrap());
        for pair in length2_analysis(5).unwrap() {
            assert!(
                !pair.vanishing_product_rows.is_empty(),
                "pair ({}, {}) has no vanishing-product row",
                pair.i,
                pair.j
            );
        }
        assert_eq!(length2_analysis(15).unwrap().len(), 105);
        assert!(verify_no_length2(15).unwrap());
    }

    #[test]
    fn even_orders_are_exploratory() {
        // Q_2 has the length-two idempotent 2*x0 - x1
        assert!(!verify_no_length2(2).unwrap());
        assert!(length2_analysis(1).is_err());
        let q2 = length2_analysis(2).unwrap();
        assert_eq!(q2[0].solutions, PairSolutions::Infinite);
    }
}
