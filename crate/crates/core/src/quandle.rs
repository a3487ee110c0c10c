//! Finite quandles given by operation tables, with the dihedral family as
//! the main constructor.
//!
//! Elements are the indices `0..n`; `op(i, j)` is `x_i * x_j`. The right
//! translation `S_j` is the column map `i -> op(i, j)`.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::perm::{is_permutation, LexPermutations};

/// Largest order for which automorphisms are found by trying every permutation.
pub const ENUMERATION_LIMIT: usize = 8;

/// A finite magma on `0..n` stored as a dense operation table.
///
/// Construction only checks shape and range. Use [`validate_axioms`] to
/// confirm the quandle axioms.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Quandle {
    n: usize,
    table: Vec<usize>,
}

impl Quandle {
    pub fn from_table(rows: &[Vec<usize>]) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::ZeroOrder);
        }
        let mut table = Vec::with_capacity(n * n);
        for (row, entries) in rows.iter().enumerate() {
            if entries.len() != n {
                return Err(Error::RaggedTable {
                    row,
                    len: entries.len(),
                    n,
                });
            }
            for (col, &value) in entries.iter().enumerate() {
                if value >= n {
                    return Err(Error::EntryOutOfRange { row, col, value, n });
                }
                table.push(value);
            }
        }
        Ok(Self { n, table })
    }

    /// The trivial quandle `x_i * x_j = x_i`.
    pub fn trivial(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroOrder);
        }
        let table = (0..n).flat_map(|i| std::iter::repeat_n(i, n)).collect();
        Ok(Self { n, table })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn op(&self, i: usize, j: usize) -> usize {
        self.table[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[usize] {
        &self.table[i * self.n..(i + 1) * self.n]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[usize]> {
        self.table.chunks(self.n)
    }

    pub fn to_rows(&self) -> Vec<Vec<usize>> {
        self.rows().map(<[usize]>::to_vec).collect()
    }

    /// The right translation `S_j` as an image sequence.
    pub fn column(&self, j: usize) -> Vec<usize> {
        (0..self.n).map(|i| self.op(i, j)).collect()
    }

    pub fn is_dihedral(&self) -> bool {
        let n = self.n;
        (0..n).all(|i| (0..n).all(|j| self.op(i, j) == (2 * j + n - i) % n))
    }

    pub fn adjacency_matrix(&self) -> AdjacencyMatrix<'_> {
        AdjacencyMatrix { quandle: self }
    }
}

/// The dihedral quandle `Q_n`: `i * j = 2j - i mod n`.
pub fn make_dihedral(n: usize) -> Result<Quandle> {
    if n == 0 {
        return Err(Error::ZeroOrder);
    }
    let table = (0..n)
        .flat_map(|i| (0..n).map(move |j| (2 * j + n - i) % n))
        .collect();
    Ok(Quandle { n, table })
}

/// One failed quandle axiom instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "axiom", rename_all = "snake_case")]
pub enum Violation {
    /// `S_column` is not a bijection.
    NotBijective { column: usize },
    /// `(i*k)*j != (i*j)*(k*j)`.
    NotAutomorphism { column: usize, i: usize, k: usize },
    /// `i*i != i`.
    NotIdempotent { i: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::NotBijective { column } => {
                write!(f, "S_{column} is not a bijection")
            }
            Violation::NotAutomorphism { column, i, k } => {
                write!(f, "S_{column} does not preserve the product of {i} and {k}")
            }
            Violation::NotIdempotent { i } => write!(f, "{i} * {i} != {i}"),
        }
    }
}

/// Checks bijectivity, the automorphism property and idempotency of every
/// right translation. An empty result means `q` is a quandle.
pub fn validate_axioms(q: &Quandle) -> Vec<Violation> {
    let n = q.order();
    let mut out = Vec::new();
    for j in 0..n {
        if !is_permutation(&q.column(j)) {
            out.push(Violation::NotBijective { column: j });
        }
    }
    for j in 0..n {
        for i in 0..n {
            for k in 0..n {
                if q.op(q.op(i, j), q.op(k, j)) != q.op(q.op(i, k), j) {
                    out.push(Violation::NotAutomorphism { column: j, i, k });
                }
            }
        }
    }
    for i in 0..n {
        if q.op(i, i) != i {
            out.push(Violation::NotIdempotent { i });
        }
    }
    out
}

/// True iff the group generated by the right translations acts
/// transitively. Computed as the orbit of 0 under the generators.
pub fn is_connected(q: &Quandle) -> bool {
    let n = q.order();
    let mut seen = vec![false; n];
    let mut queue = VecDeque::from([0]);
    seen[0] = true;
    let mut reached = 1;
    while let Some(i) = queue.pop_front() {
        for j in 0..n {
            let next = q.op(i, j);
            if !seen[next] {
                seen[next] = true;
                reached += 1;
                queue.push_back(next);
            }
        }
    }
    reached == n
}

/// Read-only view of a quandle's operation table as its adjacency matrix,
/// `entries[i][j] = x_i * x_j`.
#[derive(Debug, Clone, Copy)]
pub struct AdjacencyMatrix<'a> {
    quandle: &'a Quandle,
}

#[derive(Serialize)]
struct AdjacencyJson {
    n: usize,
    entries: Vec<Vec<usize>>,
}

impl AdjacencyMatrix<'_> {
    pub fn n(&self) -> usize {
        self.quandle.order()
    }

    pub fn entry(&self, i: usize, j: usize) -> usize {
        self.quandle.op(i, j)
    }

    pub fn entries(&self) -> Vec<Vec<usize>> {
        self.quandle.to_rows()
    }

    pub fn first_row(&self) -> Vec<usize> {
        self.quandle.row(0).to_vec()
    }

    pub fn first_column(&self) -> Vec<usize> {
        self.quandle.column(0)
    }

    /// Rows separated by newlines, entries by commas, no header. Newline
    /// terminated.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for row in self.quandle.rows() {
            let line: Vec<String> = row.iter().map(usize::to_string).collect();
            out.push_str(&line.join(","));
            out.push('\n');
        }
        out
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::to_value(AdjacencyJson {
            n: self.n(),
            entries: self.entries(),
        })
        .expect("adjacency matrix serializes")
    }
}

/// How the first row of the dihedral adjacency matrix is generated.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RowStructure {
    /// Odd order: the first row is `rho[j] = 2j mod n`.
    Odd { rho: Vec<usize> },
    /// Even order: rows with even index take the values `rho1`
    /// (`0, 2, .., n-2`), rows with odd index take `rho2` (`1, 3, .., n-1`).
    Even { rho1: Vec<usize>, rho2: Vec<usize> },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RowColumnStructure {
    pub n: usize,
    pub rows: RowStructure,
    /// First column, `sigma[i] = -i mod n`.
    pub sigma: Vec<usize>,
}

pub fn row_column_structure(n: usize) -> Result<RowColumnStructure> {
    if n == 0 {
        return Err(Error::ZeroOrder);
    }
    let rows = if n % 2 == 1 {
        RowStructure::Odd {
            rho: (0..n).map(|j| 2 * j % n).collect(),
        }
    } else {
        RowStructure::Even {
            rho1: (0..n).step_by(2).collect(),
            rho2: (1..n).step_by(2).collect(),
        }
    };
    let sigma = (0..n).map(|i| (n - i) % n).collect();
    Ok(RowColumnStructure { n, rows, sigma })
}

/// Checks `entries[i][j] = entries[0][j] - i mod n` for every cell: every
/// row is the first row shifted down by its index.
pub fn verify_shift_structure(q: &Quandle) -> bool {
    let n = q.order();
    (0..n).all(|i| (0..n).all(|j| q.op(i, j) == (q.op(0, j) + n - i) % n))
}

/// Compares the first row and first column of `q` against
/// [`row_column_structure`]. For even order the first row must be `rho1`
/// repeated twice, and every row must take exactly the values of `rho1` or
/// `rho2` according to the parity of its index.
pub fn verify_row_column_structure(q: &Quandle) -> bool {
    let n = q.order();
    let structure = match row_column_structure(n) {
        Ok(s) => s,
        Err(_) => return false,
    };
    let adj = q.adjacency_matrix();
    if adj.first_column() != structure.sigma {
        return false;
    }
    match &structure.rows {
        RowStructure::Odd { rho } => adj.first_row() == *rho,
        RowStructure::Even { rho1, rho2 } => {
            let doubled: Vec<usize> = rho1.iter().chain(rho1.iter()).copied().collect();
            if adj.first_row() != doubled {
                return false;
            }
            let even: BTreeSet<usize> = rho1.iter().copied().collect();
            let odd: BTreeSet<usize> = rho2.iter().copied().collect();
            q.rows().enumerate().all(|(i, row)| {
                let values: BTreeSet<usize> = row.iter().copied().collect();
                values == if i % 2 == 0 { even.clone() } else { odd.clone() }
            })
        }
    }
}

/// Strategy for [`quandle_automorphisms`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AutomorphismSearch {
    /// Test all `n!` permutations. Guarded by [`ENUMERATION_LIMIT`].
    Enumerate,
    /// Dihedral quandles only: test the affine maps `i -> a*i + b`.
    DihedralAffine,
}

pub fn is_quandle_automorphism(q: &Quandle, images: &[usize]) -> bool {
    let n = q.order();
    images.len() == n
        && is_permutation(images)
        && (0..n).all(|i| (0..n).all(|j| images[q.op(i, j)] == q.op(images[i], images[j])))
}

/// All permutations `p` with `p(i*j) = p(i)*p(j)`, in lexicographic order
/// of their image sequences.
pub fn quandle_automorphisms(q: &Quandle, search: AutomorphismSearch) -> Result<Vec<Vec<usize>>> {
    let n = q.order();
    match search {
        AutomorphismSearch::Enumerate => {
            if n > ENUMERATION_LIMIT {
                return Err(Error::EnumerationGuard {
                    n,
                    limit: ENUMERATION_LIMIT,
                });
            }
            Ok(LexPermutations::new(n)
                .filter(|p| is_quandle_automorphism(q, p))
                .collect())
        }
        AutomorphismSearch::DihedralAffine => {
            if !q.is_dihedral() {
                return Err(Error::NotDihedral);
            }
            let mut found: BTreeSet<Vec<usize>> = BTreeSet::new();
            for a in 0..n {
                for b in 0..n {
                    let images: Vec<usize> = (0..n).map(|i| (a * i + b) % n).collect();
                    if is_quandle_automorphism(q, &images) {
                        found.insert(images);
                    }
                }
            }
            Ok(found.into_iter().collect())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q5: [[usize; 5]; 5] = [
        [0, 2, 4, 1, 3],
        [4, 1, 3, 0, 2],
        [3, 0, 2, 4, 1],
        [2, 4, 1, 3, 0],
        [1, 3, 0, 2, 4],
    ];

    #[test]
    fn dihedral_five_matches_published_table() {
        let q = make_dihedral(5).unwrap();
        assert_eq!(q.op(1, 2), 3);
        let expected: Vec<Vec<usize>> = Q5.iter().map(|r| r.to_vec()).collect();
        assert_eq!(q.adjacency_matrix().entries(), expected);
    }

    #[test]
    fn dihedral_edge_orders() {
        assert_eq!(make_dihedral(1).unwrap().to_rows(), vec![vec![0]]);
        assert_eq!(make_dihedral(0), Err(Error::ZeroOrder));
        assert_eq!(
            make_dihedral(3).unwrap().adjacency_matrix().entries(),
            vec![vec![0, 2, 1], vec![2, 1, 0], vec![1, 0, 2]]
        );
    }

    #[test]
    fn from_table_rejects_bad_shapes() {
        assert_eq!(Quandle::from_table(&[]), Err(Error::ZeroOrder));
        assert!(matches!(
            Quandle::from_table(&[vec![0, 1], vec![0]]),
            Err(Error::RaggedTable { row: 1, .. })
        ));
        assert!(matches!(
            Quandle::from_table(&[vec![0, 2], vec![0, 1]]),
            Err(Error::EntryOutOfRange { value: 2, .. })
        ));
    }

    #[test]
    fn axioms_on_small_tables() {
        assert!(validate_axioms(&make_dihedral(7).unwrap()).is_empty());
        let two = Quandle::from_table(&[vec![0, 0], vec![1, 1]]).unwrap();
        assert!(validate_axioms(&two).is_empty());
        let bad = Quandle::from_table(&[vec![1, 0], vec![1, 0]]).unwrap();
        let report = validate_axioms(&bad);
        assert!(report.contains(&Violation::NotIdempotent { i: 0 }));
        assert!(report.contains(&Violation::NotBijective { column: 0 }));
    }

    #[test]
    fn automorphism_violation_is_detected() {
        // Columns are bijections and idempotency holds, but S_0 does not
        // preserve the operation.
        let t = Quandle::from_table(&[
            vec![0, 2, 0],
            vec![2, 1, 1],
            vec![1, 0, 2],
        ])
        .unwrap();
        let report = validate_axioms(&t);
        assert!(report
            .iter()
            .any(|v| matches!(v, Violation::NotAutomorphism { .. })));
    }

    #[test]
    fn connectivity() {
        assert!(is_connected(&make_dihedral(5).unwrap()));
        assert!(!is_connected(&make_dihedral(4).unwrap()));
        assert!(is_connected(&make_dihedral(1).unwrap()));
        assert!(!is_connected(&Quandle::trivial(3).unwrap()));
    }

    #[test]
    fn structure_of_five_and_six() {
        let s5 = row_column_structure(5).unwrap();
        assert_eq!(
            s5.rows,
            RowStructure::Odd {
                rho: vec![0, 2, 4, 1, 3]
            }
        );
        assert_eq!(s5.sigma, vec![0, 4, 3, 2, 1]);
        let s6 = row_column_structure(6).unwrap();
        assert_eq!(
            s6.rows,
            RowStructure::Even {
                rho1: vec![0, 2, 4],
                rho2: vec![1, 3, 5]
            }
        );
        assert!(verify_row_column_structure(&make_dihedral(6).unwrap()));
    }

    #[test]
    fn shift_structure() {
        assert!(verify_shift_structure(&make_dihedral(5).unwrap()));
        // direct check of all 64 cells
        let q8 = make_dihedral(8).unwrap();
        for i in 0..8 {
            for j in 0..8 {
                assert_eq!(q8.op(i, j), (q8.op(0, j) + 8 - i) % 8);
            }
        }
        assert!(verify_shift_structure(&q8));
        let trivial = Quandle::trivial(3).unwrap();
        assert!(validate_axioms(&trivial).is_empty());
        assert!(!verify_shift_structure(&trivial));
    }

    #[test]
    fn automorphisms_small() {
        let q3 = make_dihedral(3).unwrap();
        assert_eq!(
            quandle_automorphisms(&q3, AutomorphismSearch::Enumerate)
                .unwrap()
                .len(),
            6
        );
        let q5 = make_dihedral(5).unwrap();
        let auts = quandle_automorphisms(&q5, AutomorphismSearch::Enumerate).unwrap();
        let mut affine: Vec<Vec<usize>> = (1..5)
            .flat_map(|a| (0..5).map(move |b| (0..5).map(|i| (a * i + b) % 5).collect()))
            .collect();
        affine.sort();
        assert_eq!(auts, affine);
        assert_eq!(
            quandle_automorphisms(&make_dihedral(1).unwrap(), AutomorphismSearch::Enumerate)
                .unwrap(),
            vec![vec![0]]
        );
    }

    #[test]
    fn automorphism_guards() {
        let q9 = make_dihedral(9).unwrap();
        assert_eq!(
            quandle_automorphisms(&q9, AutomorphismSearch::Enumerate),
            Err(Error::EnumerationGuard { n: 9, limit: 8 })
        );
        assert_eq!(
            quandle_automorphisms(&q9, AutomorphismSearch::DihedralAffine)
                .unwrap()
                .len(),
            54
        );
        assert_eq!(
            quandle_automorphisms(&Quandle::trivial(3).unwrap(), AutomorphismSearch::DihedralAffine),
            Err(Error::NotDihedral)
        );
    }
}
