#![allow(dead_code)]

use std::collections::HashSet;

use gimforge::classify::{template, Family, ModifiedDynkinType};
use gimforge::gim::{validate_gim, Gim};
use rand::seq::SliceRandom;
use rand::Rng;

pub fn gim(rows: &[&[i64]]) -> Gim {
    validate_gim(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
}

/// A finite root system as integer coordinates over its simple roots,
/// with the integer Gram matrix of the simple roots.
pub struct RootSystem {
    pub family: Family,
    pub rank: usize,
    pub gram: Vec<Vec<i64>>,
    pub roots: Vec<Vec<i64>>,
}

pub fn pair(g: &[Vec<i64>], a: &[i64], b: &[i64]) -> i64 {
    (0..a.len()).map(|i| (0..b.len()).map(|j| a[i] * g[i][j] * b[j]).sum::<i64>()).sum()
}

fn reflect(g: &[Vec<i64>], a: &[i64], x: &[i64]) -> Vec<i64> {
    let c = 2 * pair(g, x, a) / pair(g, a, a);
    x.iter().zip(a).map(|(u, v)| u - c * v).collect()
}

/// Reflection closure of a set of integer vectors.
pub fn closure(g: &[Vec<i64>], gens: &[Vec<i64>]) -> HashSet<Vec<i64>> {
    let mut seen: HashSet<Vec<i64>> = gens.iter().cloned().collect();
    let mut frontier: Vec<Vec<i64>> = gens.to_vec();
    while let Some(x) = frontier.pop() {
        for a in seen.clone().iter() {
            for y in [reflect(g, a, &x), reflect(g, &x, a)] {
                if seen.insert(y.clone()) {
                    frontier.push(y);
                }
            }
        }
    }
    seen
}

impl RootSystem {
    /// Plain root system of a reduced family, or BC / rank-one non-reduced.
    pub fn new(family: Family, rank: usize) -> RootSystem {
        let base = match family {
            Family::BC => ModifiedDynkinType::new(Family::B, rank, 1, Some(1), None).unwrap(),
            Family::A1 => ModifiedDynkinType::a(1, 1),
            Family::A | Family::D | Family::E6 | Family::E7 | Family::E8 => ModifiedDynkinType::new(family, rank, 1, None, None).unwrap(),
            _ => ModifiedDynkinType::new(family, rank, 1, Some(1), None).unwrap(),
        };
        let (_, g) = template(&base).unwrap();
        let gram: Vec<Vec<i64>> = (0..rank).map(|i| (0..rank).map(|j| g.g[(i, j)].to_integer().try_into().unwrap()).collect()).collect();
        let units: Vec<Vec<i64>> = (0..rank).map(|i| (0..rank).map(|j| i64::from(i == j)).collect()).collect();
        let mut roots: Vec<Vec<i64>> = closure(&gram, &units).into_iter().collect();
        if matches!(family, Family::BC | Family::A1) {
            let short = roots.iter().map(|r| pair(&gram, r, r)).min().unwrap();
            let doubled: Vec<Vec<i64>> = roots.iter().filter(|r| pair(&gram, r, r) == short).map(|r| r.iter().map(|x| 2 * x).collect()).collect();
            roots.extend(doubled);
        }
        roots.sort();
        RootSystem { family, rank, gram, roots }
    }

    pub fn len_of(&self, x: &[i64]) -> i64 {
        pair(&self.gram, x, x)
    }

    /// GIM of an ordered list of roots.
    pub fn gim_of(&self, xs: &[Vec<i64>]) -> Gim {
        let m = xs.iter().map(|a| xs.iter().map(|b| 2 * pair(&self.gram, a, b) / self.len_of(a)).collect()).collect();
        validate_gim(m).unwrap()
    }

    /// Label predicted from the number of chosen roots of each length.
    pub fn expected_label(&self, xs: &[Vec<i64>]) -> Option<ModifiedDynkinType> {
        let mut lengths: Vec<i64> = self.roots.iter().map(|r| self.len_of(r)).collect();
        lengths.sort();
        lengths.dedup();
        let count = |k: usize| xs.iter().filter(|x| self.len_of(x) == lengths[k]).count();
        let n = xs.len();
        let l = self.rank;
        let sub = |a: usize, b: usize| a.checked_sub(b);
        let label = match self.family {
            Family::A | Family::D | Family::E6 | Family::E7 | Family::E8 => ModifiedDynkinType::new(self.family, l, n + 1 - l, None, None),
            Family::B => ModifiedDynkinType::new(Family::B, l, sub(count(1), l - 2)?, Some(count(0)), None),
            Family::C => ModifiedDynkinType::new(Family::C, l, count(1), Some(sub(count(0), l - 2)?), None),
            Family::F4 => ModifiedDynkinType::new(Family::F4, l, sub(count(1), 1)?, Some(sub(count(0), 1)?), None),
            Family::G2 => ModifiedDynkinType::new(Family::G2, l, count(1), Some(count(0)), None),
            Family::A1 => ModifiedDynkinType::new(Family::A1, 1, count(1), Some(count(0)), None),
            Family::BC => ModifiedDynkinType::new(Family::BC, l, count(2), Some(sub(count(1), l - 2)?), Some(count(0))),
        };
        label.ok()
    }

    fn connected(&self, xs: &[Vec<i64>]) -> bool {
        let mut seen = vec![false; xs.len()];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(a) = stack.pop() {
            for b in 0..xs.len() {
                if !seen[b] && pair(&self.gram, &xs[a], &xs[b]) != 0 {
                    seen[b] = true;
                    stack.push(b);
                }
            }
        }
        seen.into_iter().all(|x| x)
    }

    fn rank_of(&self, xs: &[Vec<i64>]) -> usize {
        let rows: Vec<Vec<gimforge::arith::Q>> = xs.iter().map(|x| x.iter().map(|&v| gimforge::arith::q(v)).collect()).collect();
        gimforge::linalg::QMatrix::from_rows(rows).rank()
    }

    /// `n` random roots, connected, spanning, and generating the whole system.
    pub fn random_generating_set(&self, n: usize, rng: &mut impl Rng) -> Vec<Vec<i64>> {
        loop {
            let xs: Vec<Vec<i64>> = (0..n).map(|_| self.roots.choose(rng).unwrap().clone()).collect();
            if self.rank_of(&xs) == self.rank && self.connected(&xs) && closure(&self.gram, &xs).len() == self.roots.len() {
                return xs;
            }
        }
    }
}
