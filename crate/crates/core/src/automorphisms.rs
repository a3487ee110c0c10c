//! Ring automorphisms of `Z[Q]` that permute the basis `x_0, .., x_{n-1}`.
//!
//! The additive extension of `x_i -> x_{p(i)}` is multiplicative iff it is
//! multiplicative on basis pairs, by bilinearity, which is exactly the
//! condition `p(i * j) = p(i) * p(j)` defining a quandle automorphism. The
//! enumeration here therefore reproduces the quandle automorphism group;
//! it does not cover automorphisms that move basis elements elsewhere.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::perm::{self, LexPermutations};
use crate::quandle::{quandle_automorphisms, AutomorphismSearch, Quandle, ENUMERATION_LIMIT};
use crate::ring::RingElement;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BasisPermutation {
    images: Vec<usize>,
}

impl BasisPermutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        if images.is_empty() {
            return Err(Error::ZeroOrder);
        }
        if !perm::is_permutation(&images) {
            return Err(Error::NotAPermutation {
                n: images.len(),
                images,
            });
        }
        Ok(Self { images })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            images: (0..n).collect(),
        }
    }

    pub fn order(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &Self) -> Self {
        Self {
            images: perm::compose(&self.images, &inner.images),
        }
    }

    pub fn inverse(&self) -> Self {
        Self {
            images: perm::inverse(&self.images),
        }
    }

    /// The additive extension: `sum a_i x_i -> sum a_i x_{p(i)}`.
    pub fn apply(&self, a: &RingElement) -> Result<RingElement> {
        if a.quandle_order() != self.order() {
            return Err(Error::OrderMismatch {
                left: self.order(),
                right: a.quandle_order(),
            });
        }
        let mut coeffs = vec![num_bigint::BigInt::default(); self.order()];
        for (i, c) in a.coeffs().iter().enumerate() {
            coeffs[self.images[i]] = c.clone();
        }
        RingElement::new(coeffs)
    }
}

impl Serialize for BasisPermutation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.images.serialize(s)
    }
}

/// Checks `p(i) * p(j) = p(i * j)` on all basis pairs.
pub fn extends_to_ring_automorphism(q: &Quandle, p: &BasisPermutation) -> Result<bool> {
    let n = q.order();
    if p.order() != n {
        return Err(Error::OrderMismatch {
            left: n,
            right: p.order(),
        });
    }
    let img = p.images();
    Ok((0..n).all(|i| (0..n).all(|j| q.op(img[i], img[j]) == img[q.op(i, j)])))
}

/// All basis permutations that extend to ring automorphisms, in
/// lexicographic order of their image sequences.
pub fn enumerate_ring_automorphisms(q: &Quandle) -> Result<Vec<BasisPermutation>> {
    let n = q.order();
    if n > ENUMERATION_LIMIT {
        return Err(Error::EnumerationGuard {
            n,
            limit: ENUMERATION_LIMIT,
        });
    }
    let mut out = Vec::new();
    for images in LexPermutations::new(n) {
        let p = BasisPermutation { images };
        if extends_to_ring_automorphism(q, &p)? {
            out.push(p);
        }
    }
    Ok(out)
}

/// Closed under composition and inverse, and contains the identity.
pub fn is_group(perms: &[BasisPermutation]) -> bool {
    let Some(first) = perms.first() else {
        return false;
    };
    let set: BTreeSet<&BasisPermutation> = perms.iter().collect();
    set.contains(&BasisPermutation::identity(first.order()))
        && perms.iter().all(|p| set.contains(&p.inverse()))
        && perms
            .iter()
            .all(|a| perms.iter().all(|b| set.contains(&a.compose(b))))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AutomorphismSummary {
    pub count: usize,
    pub closed_under_composition: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AutomorphismComparison {
    pub n: usize,
    /// `n!`, every permutation of the basis.
    pub unconstrained_permutations: u128,
    pub ring_automorphisms: Vec<BasisPermutation>,
    pub quandle_automorphisms: Vec<BasisPermutation>,
    pub ring_summary: AutomorphismSummary,
    pub quandle_summary: AutomorphismSummary,
    pub equal: bool,
    /// In the ring set only.
    pub only_ring: Vec<BasisPermutation>,
    /// In the quandle set only.
    pub only_quandle: Vec<BasisPermutation>,
}

pub fn compare_with_quandle_automorphisms(q: &Quandle) -> Result<AutomorphismComparison> {
    let ring = enumerate_ring_automorphisms(q)?;
    let quandle: Vec<BasisPermutation> = quandle_automorphisms(q, AutomorphismSearch::Enumerate)?
        .into_iter()
        .map(|images| BasisPermutation { images })
        .collect();
    let ring_set: BTreeSet<&BasisPermutation> = ring.iter().collect();
    let quandle_set: BTreeSet<&BasisPermutation> = quandle.iter().collect();
    let only_ring: Vec<BasisPermutation> = ring_set
        .difference(&quandle_set)
        .map(|p| (*p).clone())
        .collect();
    let only_quandle: Vec<BasisPermutation> = quandle_set
        .difference(&ring_set)
        .map(|p| (*p).clone())
        .collect();
    Ok(AutomorphismComparison {
        n: q.order(),
        unconstrained_permutations: perm::factorial(q.order()),
        ring_summary: AutomorphismSummary {
            count: ring.len(),
            closed_under_composition: is_group(&ring),
        },
        quandle_summary: AutomorphismSummary {
            count: quandle.len(),
            closed_under_composition: is_group(&quandle),
        },
        equal: only_ring.is_empty() && only_quandle.is_empty(),
        only_ring,
        only_quandle,
        ring_automorphisms: ring,
        quandle_automorphisms: quandle,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quandle::make_dihedral;
    use crate::ring::multiply;

    #[test]
    fn identity_and_shift() {
        let q = make_dihedral(5).unwrap();
        assert!(extends_to_ring_automorphism(&q, &BasisPermutation::identity(5)).unwrap());
        let shift = BasisPermutation::new((0..5).map(|i| (i + 1) % 5).collect()).unwrap();
        assert!(extends_to_ring_automorphism(&q, &shift).unwrap());
    }

    #[test]
    fn transposition_in_q5() {
        // swapping x0 and x1: 0*1 = 2 should map to 1*0 = 4, but p(2) = 2
        let q = make_dihedral(5).unwrap();
        let swap = BasisPermutation::new(vec![1, 0, 2, 3, 4]).unwrap();
        assert!(!extends_to_ring_automorphism(&q, &swap).unwrap());
        let x = |i| RingElement::basis(5, i);
        let lhs = swap.apply(&multiply(&q, &x(0), &x(1)).unwrap()).unwrap();
        let rhs = multiply(&q, &swap.apply(&x(0)).unwrap(), &swap.apply(&x(1)).unwrap()).unwrap();
        assert_ne!(lhs, rhs);
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(
            enumerate_ring_automorphisms(&make_dihedral(1).unwrap()).unwrap(),
            vec![BasisPermutation::identity(1)]
        );
        assert_eq!(enumerate_ring_automorphisms(&make_dihedral(3).unwrap()).unwrap().len(), 6);
        let q5 = enumerate_ring_automorphisms(&make_dihedral(5).unwrap()).unwrap();
        assert_eq!(q5.len(), 20);
        assert!(q5.windows(2).all(|w| w[0] < w[1]));
        assert!(is_group(&q5));
        assert!(matches!(
            enumerate_ring_automorphisms(&make_dihedral(9).unwrap()),
            Err(Error::EnumerationGuard { .. })
        ));
    }

    #[test]
    fn comparison_reports_both_counts() {
        let c = compare_with_quandle_automorphisms(&make_dihedral(5).unwrap()).unwrap();
        assert!(c.equal);
        assert_eq!(c.unconstrained_permutations, 120);
        assert_eq!(c.ring_summary.count, 20);
        let json = serde_json::to_value(&c.ring_summary).unwrap();
        assert_eq!(json, serde_json::json!({"count": 20, "closed_under_composition": true}));
        let c1 = compare_with_quandle_automorphisms(&make_dihedral(1).unwrap()).unwrap();
        assert!(c1.equal);
        assert_eq!(c1.ring_automorphisms, vec![BasisPermutation::identity(1)]);
    }

    #[test]
    fn rejects_non_permutations() {
        assert!(BasisPermutation::new(vec![0, 0]).is_err());
        assert!(BasisPermutation::new(vec![]).is_err());
        let q = make_dihedral(3).unwrap();
        assert!(extends_to_ring_automorphism(&q, &BasisPermutation::identity(4)).is_err());
    }
}
