//! Anti-dominantization, reduction of positive definite matrices and the
//! simple-system bookkeeping shared with classification.

use std::collections::{HashSet, VecDeque};
use std::sync::Arc;

use num_traits::{Signed, Zero};

use crate::arith::{q, Q};
use crate::braid::{braid_move, gim_of, MoveSequence, PrimeBasis};
use crate::error::{Error, Result};
use crate::gim::{gram, realize_gram, symmetrizer, Definiteness, Gim, RootSpace};
use crate::linalg::QMatrix;

fn step_cap(rank: usize) -> usize {
    10 * (2 * rank * rank).max(240)
}

/// Applies reflections through `sub` to `x` until `(x, β) <= 0` for every
/// `β` in `sub`, always using the first offending `β`. Returns the result
/// and the indices (into `sub`) of the reflections applied.
pub fn antidominantize(space: &RootSpace, sub: &[Vec<Q>], x: &[Q]) -> Result<(Vec<Q>, Vec<usize>)> {
    let cap = step_cap(sub.len());
    let mut x = x.to_vec();
    let mut word = Vec::new();
    while let Some(k) = sub.iter().position(|b| space.pair(&x, b).is_positive()) {
        if word.len() == cap {
            return Err(Error::NonTerminating(cap));
        }
        x = crate::braid::reflect_root(space, &sub[k], &x)?;
        word.push(k);
    }
    Ok((x, word))
}

/// A prime basis together with the moves that produced it.
#[derive(Debug, Clone)]
pub(crate) struct Work {
    pub basis: PrimeBasis,
    pub moves: MoveSequence,
}

impl Work {
    pub fn new(basis: PrimeBasis) -> Self {
        Work { basis, moves: MoveSequence::default() }
    }

    pub fn apply(&mut self, i: usize, j: usize) -> Result<()> {
        self.basis = braid_move(&self.basis, i, j)?;
        self.moves.push(i, j);
        Ok(())
    }

    /// Anti-dominantizes slot `y` against the slots `sub` by braid moves.
    pub fn antidominantize_slot(&mut self, sub: &[usize], y: usize) -> Result<()> {
        let cap = step_cap(sub.len());
        let mut steps = 0;
        while let Some(&k) = sub.iter().find(|&&k| self.basis.pair(y, k).is_positive()) {
            if steps == cap {
                return Err(Error::NonTerminating(cap));
            }
            self.apply(k, y)?;
            steps += 1;
        }
        Ok(())
    }

    /// Nonsingular Gram matrix on `idx`, i.e. independent modulo the radical.
    pub fn independent(&self, idx: &[usize]) -> bool {
        !self.basis.gram_on(idx).det().is_zero()
    }

    pub fn connected(&self, idx: &[usize]) -> bool {
        let mut seen = vec![false; idx.len()];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(a) = stack.pop() {
            for b in 0..idx.len() {
                if !seen[b] && !self.basis.pair(idx[a], idx[b]).is_zero() {
                    seen[b] = true;
                    stack.push(b);
                }
            }
        }
        seen.into_iter().all(|x| x)
    }

    /// Grows a connected simple system slot by slot: the next slot is the
    /// first one that is independent of the current system and pairs with
    /// it; it is anti-dominantized before being appended.
    pub fn grow_simple_system(&mut self) -> Result<Vec<usize>> {
        let n = self.basis.len();
        let mut t: Vec<usize> = Vec::new();
        loop {
            let next = (0..n).filter(|y| !t.contains(y)).find(|&y| {
                let pairs = t.is_empty() || t.iter().any(|&k| !self.basis.pair(y, k).is_zero());
                let mut with = t.clone();
                with.push(y);
                pairs && self.independent(&with)
            });
            let Some(y) = next else { break };
            self.antidominantize_slot(&t, y)?;
            t.push(y);
        }
        Ok(t)
    }
}

/// Coordinates of images modulo the radical with respect to a fixed
/// system of independent roots.
#[derive(Debug, Clone)]
pub(crate) struct Frame {
    space: Arc<RootSpace>,
    roots: Vec<Vec<Q>>,
    gram: QMatrix,
    inverse: QMatrix,
}

impl Frame {
    pub fn new(basis: &PrimeBasis, idx: &[usize]) -> Self {
        let gram = basis.gram_on(idx);
        let inverse = gram.inverse().expect("frame roots are independent");
        Frame { space: basis.space().clone(), roots: idx.iter().map(|&i| basis.root(i).to_vec()).collect(), gram, inverse }
    }

    pub fn coords(&self, v: &[Q]) -> Vec<Q> {
        let p: Vec<Q> = self.roots.iter().map(|r| self.space.pair(r, v)).collect();
        self.inverse.mul_vec(&p)
    }

    pub fn slot(&self, basis: &PrimeBasis, i: usize) -> Vec<Q> {
        self.coords(basis.root(i))
    }

    pub fn pair(&self, a: &[Q], b: &[Q]) -> Q {
        self.gram.form(a, b)
    }

    pub fn reflect(&self, a: &[Q], c: &[Q]) -> Vec<Q> {
        let k = q(2) * self.pair(c, a) / self.pair(a, a);
        c.iter().zip(a).map(|(x, y)| x - &k * y).collect()
    }

    /// The orbit of `gens` under the reflections they generate.
    pub fn orbit(&self, gens: &[Vec<Q>]) -> HashSet<Vec<Q>> {
        let mut seen: HashSet<Vec<Q>> = gens.iter().cloned().collect();
        let mut queue: VecDeque<Vec<Q>> = gens.iter().cloned().collect();
        while let Some(c) = queue.pop_front() {
            for a in gens {
                let r = self.reflect(a, &c);
                if seen.insert(r.clone()) {
                    queue.push_back(r);
                }
            }
        }
        seen
    }

    /// Same rule as [`Work::antidominantize_slot`], on coordinates.
    pub fn antidominant(&self, gens: &[Vec<Q>], c: &[Q]) -> (Vec<Q>, Vec<usize>) {
        let mut c = c.to_vec();
        let mut word = Vec::new();
        while let Some(k) = gens.iter().position(|a| self.pair(&c, a).is_positive()) {
            c = self.reflect(&gens[k], &c);
            word.push(k);
        }
        (c, word)
    }
}

pub(crate) fn scale(c: &[Q], k: &Q) -> Vec<Q> {
    c.iter().map(|x| x * k).collect()
}

/// Proportional to a root of `phi` by a factor in {1, 2, 1/2}.
pub(crate) fn covered(phi: &HashSet<Vec<Q>>, c: &[Q]) -> bool {
    phi.contains(c) || phi.contains(&scale(c, &q(2))) || phi.contains(&scale(c, &Q::new(1.into(), 2.into())))
}

/// Moves slot `y` onto the image `target` using reflections through the
/// simple system `t`.
pub(crate) fn move_to(work: &mut Work, frame: &Frame, t: &[usize], y: usize, target: &[Q]) -> Result<()> {
    work.antidominantize_slot(t, y)?;
    let gens: Vec<Vec<Q>> = t.iter().map(|&k| frame.slot(&work.basis, k)).collect();
    let (low, word) = frame.antidominant(&gens, target);
    if frame.slot(&work.basis, y) != low {
        return Err(Error::NoTemplateMatch(format!("slot {} is not conjugate to its template node", y + 1)));
    }
    for &k in word.iter().rev() {
        work.apply(t[k], y)?;
    }
    Ok(())
}

/// Brings a positive definite indecomposable GIM to a generalized Cartan
/// matrix by braid moves.
pub fn reduce_positive(m: &Gim) -> Result<(Gim, MoveSequence)> {
    let s = symmetrizer(m)?;
    if !m.is_indecomposable() {
        return Err(Error::Decomposable(m.blocks()));
    }
    let g = gram(m, &s);
    if g.definiteness != Definiteness::PositiveDefinite {
        return Err(Error::NotPositiveDefinite);
    }
    let mut work = Work::new(PrimeBasis::standard(Arc::new(realize_gram(&g.g))));
    let t = work.grow_simple_system()?;
    debug_assert_eq!(t.len(), m.n());
    Ok((gim_of(&work.basis)?, work.moves))
}
