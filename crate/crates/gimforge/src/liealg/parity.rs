//! The root lattice modulo twice itself, and the coset obstruction.

use crate::error::{Error, Result};
use crate::gim::Gim;

/// `Γ / 2Γ` for `Γ = Z^n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ParityLattice {
    pub n: usize,
}

impl ParityLattice {
    pub fn new(n: usize) -> Self {
        ParityLattice { n }
    }

    pub fn coset(&self, x: &[i64]) -> Vec<u8> {
        assert_eq!(x.len(), self.n, "vector length");
        x.iter().map(|v| v.rem_euclid(2) as u8).collect()
    }

    pub fn add(&self, a: &[u8], b: &[u8]) -> Vec<u8> {
        a.iter().zip(b).map(|(x, y)| x ^ y).collect()
    }

    /// Coset of `α_i + α_j`.
    pub fn pair_coset(&self, i: usize, j: usize) -> Vec<u8> {
        let mut out = vec![0; self.n];
        out[i] ^= 1;
        out[j] ^= 1;
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetVerdict {
    /// No pair sum `α_i + α_j` shares the coset of the target.
    pub obstructed: bool,
    pub target_coset: Vec<u8>,
    /// A pair `(i, j)`, `i <= j`, whose sum shares the target coset.
    pub matching_pair: Option<(usize, usize)>,
}

/// When every off-diagonal entry of `m` is even, braid moves keep each basis
/// root in the coset of the simple root it started from, so a bracket of two
/// basis root vectors has degree in some `α_i + α_j + 2Γ`.
pub fn coset_obstruction(m: &Gim, target: &[i64]) -> Result<CosetVerdict> {
    let n = m.n();
    if target.len() != n {
        return Err(Error::InvalidArgument(format!("target has {} coordinates, expected {n}", target.len())));
    }
    for i in 0..n {
        for j in 0..n {
            if i != j && m.entry(i, j) % 2 != 0 {
                return Err(Error::InvariantNotApplicable(i + 1, j + 1));
            }
        }
    }
    let lat = ParityLattice::new(n);
    let target_coset = lat.coset(target);
    let matching_pair = (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).find(|&(i, j)| lat.pair_coset(i, j) == target_coset);
    Ok(CosetVerdict { obstructed: matching_pair.is_none(), target_coset, matching_pair })
}
