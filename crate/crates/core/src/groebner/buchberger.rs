use std::cmp::Ordering;

use super::division::{normal_form, s_polynomial};
use super::{MonomialOrder, Polynomial};
use crate::error::{Error, Result};

pub const DEFAULT_PAIR_BUDGET: usize = 10_000;

fn align(polys: &[Polynomial]) -> Vec<Polynomial> {
    let nvars = polys.iter().map(Polynomial::nvars).max().unwrap_or(0);
    polys.iter().map(|p| p.with_nvars(nvars)).collect()
}

/// Reduced Groebner basis of the ideal generated by `generators`, using the
/// default pair budget.
pub fn buchberger(generators: &[Polynomial], ord: &MonomialOrder) -> Result<Vec<Polynomial>> {
    buchberger_with_budget(generators, ord, DEFAULT_PAIR_BUDGET)
}

/// Buchberger's algorithm with the normal selection strategy (smallest lcm
/// of leading monomials first) and the coprime criterion. The result is
/// monic, inter-reduced and sorted by decreasing leading monomial. The zero
/// ideal yields an empty basis; the unit ideal yields `[1]`.
///
/// Fails with [`Error::PairBudget`] once more than `pair_budget` critical
/// pairs have been taken from the queue.
pub fn buchberger_with_budget(
    generators: &[Polynomial],
    ord: &MonomialOrder,
    pair_budget: usize,
) -> Result<Vec<Polynomial>> {
    let mut basis: Vec<Polynomial> = align(generators)
        .into_iter()
        .filter(|p| !p.is_zero())
        .map(|p| p.monic(ord))
        .collect();
    if let Some(unit) = basis.iter().find(|p| p.is_nonzero_constant()) {
        return Ok(vec![unit.monic(ord)]);
    }

    let mut pairs: Vec<(usize, usize)> = (0..basis.len())
        .flat_map(|j| (0..j).map(move |i| (i, j)))
        .collect();
    let mut taken = 0usize;
    while !pairs.is_empty() {
        let pick = {
            let lcm_of = |&(i, j): &(usize, usize)| {
                let a = basis[i].leading_monomial(ord).expect("nonzero");
                let b = basis[j].leading_monomial(ord).expect("nonzero");
                a.lcm(b)
            };
            let mut best = 0;
            let mut best_lcm = lcm_of(&pairs[0]);
            for (idx, pair) in pairs.iter().enumerate().skip(1) {
                let l = lcm_of(pair);
                if ord.cmp(&l, &best_lcm) == Ordering::Less {
                    best = idx;
                    best_lcm = l;
                }
            }
            best
        };
        let (i, j) = pairs.remove(pick);
        taken += 1;
        if taken > pair_budget {
            return Err(Error::PairBudget {
                budget: pair_budget,
            });
        }
        let li = basis[i].leading_monomial(ord).expect("nonzero");
        let lj = basis[j].leading_monomial(ord).expect("nonzero");
        if li.is_coprime(lj) {
            continue;
        }
        let s = s_polynomial(&basis[i], &basis[j], ord);
        let r = normal_form(&s, &basis, ord);
        if r.is_zero() {
            continue;
        }
        if r.is_nonzero_constant() {
            return Ok(vec![Polynomial::one(r.nvars())]);
        }
        let k = basis.len();
        basis.push(r.monic(ord));
        pairs.extend((0..k).map(|i| (i, k)));
    }
    Ok(reduce_basis(basis, ord))
}

/// Turns a Groebner basis into the reduced one.
fn reduce_basis(basis: Vec<Polynomial>, ord: &MonomialOrder) -> Vec<Polynomial> {
    // minimal basis: drop elements whose leading monomial is a multiple of
    // another's (the earlier one wins on ties)
    let mut minimal: Vec<Polynomial> = Vec::new();
    for (i, g) in basis.iter().enumerate() {
        let lm = g.leading_monomial(ord).expect("nonzero");
        let redundant = basis.iter().enumerate().any(|(j, h)| {
            if i == j {
                return false;
            }
            let hm = h.leading_monomial(ord).expect("nonzero");
            hm.divides(lm) && (hm != lm || j < i)
        });
        if !redundant {
            minimal.push(g.monic(ord));
        }
    }
    for i in 0..minimal.len() {
        let others: Vec<Polynomial> = minimal
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, p)| p.clone())
            .collect();
        minimal[i] = normal_form(&minimal[i], &others, ord).monic(ord);
    }
    sort_by_leading(&mut minimal, ord);
    minimal
}

/// Sorts by decreasing leading monomial.
pub fn sort_by_leading(polys: &mut [Polynomial], ord: &MonomialOrder) {
    polys.sort_by(|a, b| match (a.leading_monomial(ord), b.leading_monomial(ord)) {
        (Some(x), Some(y)) => ord.cmp(y, x),
        (None, None) => Ordering::Equal,
        (None, Some(_)) => Ordering::Greater,
        (Some(_), None) => Ordering::Less,
    });
}

/// Buchberger's criterion: every S-polynomial of a pair reduces to zero.
pub fn is_groebner_basis(basis: &[Polynomial], ord: &MonomialOrder) -> bool {
    let basis: Vec<Polynomial> = align(basis).into_iter().filter(|p| !p.is_zero()).collect();
    for j in 0..basis.len() {
        for i in 0..j {
            let s = s_polynomial(&basis[i], &basis[j], ord);
            if !normal_form(&s, &basis, ord).is_zero() {
                return false;
            }
        }
    }
    true
}

/// True iff `f` lies in the ideal generated by `generators`.
pub fn ideal_membership(
    f: &Polynomial,
    generators: &[Polynomial],
    ord: &MonomialOrder,
) -> Result<bool> {
    let basis = buchberger(generators, ord)?;
    Ok(reduces_to_zero(f, &basis, ord))
}

/// Normal form of `f` modulo an already computed basis is zero.
pub fn reduces_to_zero(f: &Polynomial, basis: &[Polynomial], ord: &MonomialOrder) -> bool {
    if basis.is_empty() {
        return f.is_zero();
    }
    let nvars = basis[0].nvars().max(f.nvars());
    let basis: Vec<Polynomial> = basis.iter().map(|p| p.with_nvars(nvars)).collect();
    normal_form(&f.with_nvars(nvars), &basis, ord).is_zero()
}
