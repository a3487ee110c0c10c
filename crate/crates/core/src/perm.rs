//! Small permutation helpers shared by the automorphism searches.

/// Iterates over all permutations of `0..n` in lexicographic order of their
/// image sequences, starting from the identity.
#[derive(Debug, Clone)]
pub struct LexPermutations {
    current: Option<Vec<usize>>,
}

impl LexPermutations {
    pub fn new(n: usize) -> Self {
        Self {
            current: Some((0..n).collect()),
        }
    }
}

impl Iterator for LexPermutations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.current.take()?;
        let mut next = out.clone();
        if next_permutation(&mut next) {
            self.current = Some(next);
        }
        Some(out)
    }
}

/// Advances `p` to its lexicographic successor. Returns false (leaving `p`
/// untouched) when `p` is already the last permutation.
pub fn next_permutation(p: &mut [usize]) -> bool {
    if p.len() < 2 {
        return false;
    }
    let mut i = p.len() - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = p.len() - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

pub fn is_permutation(images: &[usize]) -> bool {
    let n = images.len();
    let mut seen = vec![false; n];
    for &x in images {
        if x >= n || seen[x] {
            return false;
        }
        seen[x] = true;
    }
    true
}

/// `(outer ∘ inner)(i) = outer[inner[i]]`.
pub fn compose(outer: &[usize], inner: &[usize]) -> Vec<usize> {
    inner.iter().map(|&i| outer[i]).collect()
}

pub fn inverse(p: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; p.len()];
    for (i, &x) in p.iter().enumerate() {
        inv[x] = i;
    }
    inv
}

pub fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}
