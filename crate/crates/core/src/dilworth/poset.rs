use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Finite strict partial order; `(i, j)` in `gt` means `p_i ≻ p_j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Poset {
    size: usize,
    gt: Vec<(usize, usize)>,
}

impl Poset {
    /// Validates irreflexivity and transitivity; `gt` is stored sorted.
    pub fn new(size: usize, gt: Vec<(usize, usize)>) -> Result<Self> {
        let mut gt = gt;
        gt.sort_unstable();
        gt.dedup();
        if let Some(&(i, j)) = gt.iter().find(|&&(i, j)| i >= size || j >= size) {
            return Err(Error::InvalidPoset(format!("pair ({i}, {j}) out of range for size {size}")));
        }
        if let Some(&(i, _)) = gt.iter().find(|&&(i, j)| i == j) {
            return Err(Error::InvalidPoset(format!("p{i} ≻ p{i} violates irreflexivity")));
        }
        let closed = transitive_closure(size, &gt);
        if closed != gt {
            let missing = closed.iter().find(|p| gt.binary_search(p).is_err()).expect("closure grew");
            return Err(Error::InvalidPoset(format!(
                "not transitive: ({}, {}) is implied but absent",
                missing.0, missing.1
            )));
        }
        Ok(Poset { size, gt })
    }

    /// Transitive closure of `edges`, which must be acyclic.
    pub fn from_cover_edges(size: usize, edges: &[(usize, usize)]) -> Result<Self> {
        Self::new(size, transitive_closure(size, edges))
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn gt(&self) -> &[(usize, usize)] {
        &self.gt
    }

    pub fn greater(&self, i: usize, j: usize) -> bool {
        self.gt.binary_search(&(i, j)).is_ok()
    }

    pub fn comparable(&self, i: usize, j: usize) -> bool {
        self.greater(i, j) || self.greater(j, i)
    }
}

/// Sorted closure of a relation on `0..size` (Warshall).
pub fn transitive_closure(size: usize, edges: &[(usize, usize)]) -> Vec<(usize, usize)> {
    let mut reach = vec![vec![false; size]; size];
    for &(i, j) in edges {
        if i < size && j < size {
            reach[i][j] = true;
        }
    }
    for k in 0..size {
        let via = reach[k].clone();
        for row in reach.iter_mut().filter(|row| row[k]) {
            for (cell, &step) in row.iter_mut().zip(&via) {
                *cell |= step;
            }
        }
    }
    (0..size)
        .flat_map(|i| (0..size).map(move |j| (i, j)))
        .filter(|&(i, j)| reach[i][j])
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        assert!(Poset::new(3, vec![(0, 1), (1, 2), (0, 2)]).is_ok());
        assert!(Poset::new(3, vec![(0, 1), (1, 2)]).is_err());
        assert!(Poset::new(2, vec![(1, 1)]).is_err());
        assert!(Poset::new(2, vec![(0, 1), (1, 0)]).is_err());
        assert!(Poset::new(2, vec![(0, 2)]).is_err());
        let p = Poset::from_cover_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(p.gt(), &[(0, 1), (0, 2), (1, 2)]);
    }
}
