//! Specialization preorders and the Alexandrov topology they determine.
//!
//! For a finite space, `y ≼ x` iff `y ∈ cl({x})`. The map from topologies
//! to preorders is a bijection; its inverse takes the up-closed sets of the
//! preorder as the opens.

use std::fmt;

use crate::topology::{FiniteSpace, PointSet, MAX_POINTS};

/// Reflexive, transitive relation on `0..n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Preorder {
    n: usize,
    // up[i] has bit j set iff i ≼ j
    up: [u16; MAX_POINTS],
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PreorderError {
    NotReflexive(usize),
    NotTransitive(usize, usize, usize),
}

impl fmt::Display for PreorderError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PreorderError::NotReflexive(i) => write!(f, "{i} ≼ {i} missing"),
            PreorderError::NotTransitive(i, j, k) => {
                write!(f, "{i} ≼ {j} and {j} ≼ {k} but not {i} ≼ {k}")
            }
        }
    }
}

impl std::error::Error for PreorderError {}

impl Preorder {
    /// Build from `le[i][j] == (i ≼ j)`.
    pub fn from_matrix(le: &[Vec<bool>]) -> Result<Self, PreorderError> {
        let n = le.len();
        assert!(
            (1..=MAX_POINTS).contains(&n),
            "carrier size {n} outside 1..=16"
        );
        let mut up = [0u16; MAX_POINTS];
        for (i, row) in le.iter().enumerate() {
            assert_eq!(row.len(), n, "relation matrix must be square");
            for (j, &b) in row.iter().enumerate() {
                if b {
                    up[i] |= 1 << j;
                }
            }
        }
        Self::from_up_sets(n, up)
    }

    pub(crate) fn from_up_sets(n: usize, up: [u16; MAX_POINTS]) -> Result<Self, PreorderError> {
        for (i, row) in up.iter().enumerate().take(n) {
            if row & (1 << i) == 0 {
                return Err(PreorderError::NotReflexive(i));
            }
        }
        if let Some((i, j, k)) = first_transitivity_gap(n, &up) {
            return Err(PreorderError::NotTransitive(i, j, k));
        }
        Ok(Self { n, up })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `i ≼ j`
    pub fn le(&self, i: usize, j: usize) -> bool {
        self.up[i] & (1 << j) != 0
    }

    /// `{ j : i ≼ j }`, the minimal open neighbourhood of `i`.
    pub fn up_set(&self, i: usize) -> PointSet {
        PointSet::from_raw(self.n, self.up[i])
    }

    /// `{ j : j ≼ i }`, which is `cl({i})` in the associated topology.
    pub fn down_set(&self, i: usize) -> PointSet {
        let bits = (0..self.n)
            .filter(|&j| self.le(j, i))
            .fold(0u16, |acc, j| acc | (1 << j));
        PointSet::from_raw(self.n, bits)
    }

    pub fn is_antisymmetric(&self) -> bool {
        (0..self.n).all(|i| (i + 1..self.n).all(|j| !(self.le(i, j) && self.le(j, i))))
    }

    /// Alexandrov topology: every union of minimal neighbourhoods.
    pub fn to_space(&self) -> FiniteSpace {
        let n = self.n;
        let mut seen = vec![0u64; (1usize << n).div_ceil(64)];
        let mut opens: Vec<u16> = vec![0];
        seen[0] |= 1;
        for i in 0..n {
            let nbhd = self.up[i];
            let existing = opens.len();
            for idx in 0..existing {
                let u = opens[idx] | nbhd;
                let (w, b) = (u as usize / 64, u as usize % 64);
                if seen[w] & (1 << b) == 0 {
                    seen[w] |= 1 << b;
                    opens.push(u);
                }
            }
        }
        opens.sort_unstable();
        FiniteSpace::from_sorted_unchecked(n, opens)
    }

    /// Row-major relation matrix, `true` where `i ≼ j`.
    pub fn matrix(&self) -> Vec<Vec<bool>> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.le(i, j)).collect())
            .collect()
    }
}

pub(crate) fn first_transitivity_gap(
    n: usize,
    up: &[u16; MAX_POINTS],
) -> Option<(usize, usize, usize)> {
    for (i, &row) in up.iter().enumerate().take(n) {
        for (j, &next) in up.iter().enumerate().take(n) {
            if row & (1 << j) != 0 && next & !row != 0 {
                let k = (next & !row).trailing_zeros() as usize;
                return Some((i, j, k));
            }
        }
    }
    None
}

impl FiniteSpace {
    /// `y ≼ x` iff `y ∈ cl({x})`.
    pub fn specialization_preorder(&self) -> Preorder {
        let n = self.n();
        let mut up = [0u16; MAX_POINTS];
        for x in 0..n {
            for y in self.point_closure(x).points() {
                up[y] |= 1 << x;
            }
        }
        Preorder::from_up_sets(n, up).expect("specialization relation is a preorder")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sierpinski_preorder() {
        let p = FiniteSpace::sierpinski().specialization_preorder();
        assert!(p.le(1, 0));
        assert!(!p.le(0, 1));
        assert!(p.le(0, 0) && p.le(1, 1));
        assert_eq!(p.to_space(), FiniteSpace::sierpinski());
    }

    #[test]
    fn discrete_is_identity() {
        let p = FiniteSpace::discrete(3).specialization_preorder();
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(p.le(i, j), i == j);
            }
        }
    }

    #[test]
    fn indiscrete_is_complete() {
        let p = FiniteSpace::indiscrete(2).specialization_preorder();
        assert!(p.matrix().iter().flatten().all(|&b| b));
        assert!(!p.is_antisymmetric());
    }

    #[test]
    fn down_set_is_point_closure() {
        let s = FiniteSpace::validate(4, &[0, 0b0011, 0b1100, 0b1111]).unwrap();
        let p = s.specialization_preorder();
        for x in 0..4 {
            assert_eq!(p.down_set(x), s.point_closure(x));
        }
    }

    #[test]
    fn rejects_non_preorders() {
        let not_reflexive = vec![vec![true, false], vec![false, false]];
        assert_eq!(
            Preorder::from_matrix(&not_reflexive),
            Err(PreorderError::NotReflexive(1))
        );
        let not_transitive = vec![
            vec![true, true, false],
            vec![false, true, true],
            vec![false, false, true],
        ];
        assert_eq!(
            Preorder::from_matrix(&not_transitive),
            Err(PreorderError::NotTransitive(0, 1, 2))
        );
    }
}
