use std::fmt;

use num_bigint::BigInt;
use serde::{Serialize, Serializer};

/// How much a [`SolutionReport`] claims.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Completeness {
    /// Every integer solution is listed.
    Complete,
    /// Only solutions inside the box `|t_i| <= bound` are guaranteed.
    BoundedOnly,
}

impl fmt::Display for Completeness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Completeness::Complete => "complete",
            Completeness::BoundedOnly => "bounded_only",
        })
    }
}

/// Integer solutions of a polynomial system, in lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SolutionReport {
    #[serde(serialize_with = "serialize_vectors")]
    pub solutions: Vec<Vec<BigInt>>,
    pub completeness: Completeness,
    /// Search box radius when the report is not complete.
    pub bound: Option<u64>,
    /// A work budget ran out; some branches were not explored.
    pub budget_exhausted: bool,
}

impl SolutionReport {
    pub fn is_complete(&self) -> bool {
        self.completeness == Completeness::Complete
    }

    /// Solutions with every coordinate inside `[-bound, bound]`.
    pub fn within_box(&self, bound: u64) -> Vec<Vec<BigInt>> {
        let b = BigInt::from(bound);
        self.solutions
            .iter()
            .filter(|v| v.iter().all(|x| x.magnitude() <= b.magnitude()))
            .cloned()
            .collect()
    }

    /// True iff the solutions are exactly the unit vectors of length `n`.
    pub fn is_unit_vectors(&self, n: usize) -> bool {
        self.solutions == unit_vectors(n)
    }
}

/// The `n` standard basis vectors in lexicographic order
/// (`e_{n-1} < ... < e_0`).
pub fn unit_vectors(n: usize) -> Vec<Vec<BigInt>> {
    let mut out: Vec<Vec<BigInt>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| BigInt::from(u8::from(i == j)))
                .collect()
        })
        .collect();
    out.sort();
    out
}

fn serialize_vectors<S: Serializer>(v: &[Vec<BigInt>], s: S) -> Result<S::Ok, S::Error> {
    let strings: Vec<Vec<String>> = v
        .iter()
        .map(|row| row.iter().map(BigInt::to_string).collect())
        .collect();
    strings.serialize(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unit_vectors_sorted() {
        let u = unit_vectors(3);
        assert_eq!(u[0], vec![0.into(), 0.into(), 1.into()]);
        assert_eq!(u[2], vec![1.into(), 0.into(), 0.into()]);
    }

    #[test]
    fn json_shape() {
        let r = SolutionReport {
            solutions: unit_vectors(2),
            completeness: Completeness::BoundedOnly,
            bound: Some(3),
            budget_exhausted: false,
        };
        assert_eq!(
            serde_json::to_string(&r).unwrap(),
            r#"{"solutions":[["0","1"],["1","0"]],"completeness":"bounded_only","bound":3,"budget_exhausted":false}"#
        );
    }
}
