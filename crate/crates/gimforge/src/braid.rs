//! Partial reflections of prime bases and braid-equivalence.
//!
//! A braid move `(i, j)` replaces root `j` of a basis by its reflection
//! through root `i`; `i == j` flips the sign of root `j`.

use std::collections::{HashSet, VecDeque};
use std::sync::Arc;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::arith::{fmt_q, parse_q, to_i64, Q};
use crate::error::{Error, Result};
use crate::gim::{validate_gim, Gim, RootSpace};
use crate::linalg::QMatrix;

/// Ordered prime root system inside a fixed root space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeBasis {
    space: Arc<RootSpace>,
    roots: Vec<Vec<Q>>,
    gram: Vec<Vec<Q>>,
}

fn gram_of(space: &RootSpace, roots: &[Vec<Q>]) -> Vec<Vec<Q>> {
    roots.iter().map(|a| roots.iter().map(|b| space.pair(a, b)).collect()).collect()
}

impl PrimeBasis {
    /// The prime roots `v_1..v_n` of the realization.
    pub fn standard(space: Arc<RootSpace>) -> Self {
        let roots: Vec<Vec<Q>> = (0..space.n).map(|i| space.prime_root(i)).collect();
        let gram = gram_of(&space, &roots);
        PrimeBasis { space, roots, gram }
    }

    /// Builds a basis and checks all invariants.
    pub fn new(space: Arc<RootSpace>, roots: Vec<Vec<Q>>) -> Result<Self> {
        if roots.iter().any(|r| r.len() != space.dim()) {
            return Err(Error::InvalidArgument("root has wrong dimension".into()));
        }
        let b = PrimeBasis::unchecked(space, roots);
        if (0..b.len()).any(|i| b.gram[i][i].is_zero()) {
            return Err(Error::IsotropicReflector);
        }
        if QMatrix::from_rows(b.roots.clone()).rank() != b.roots.len() {
            return Err(Error::DependentRoots);
        }
        gim_of(&b)?;
        Ok(b)
    }

    /// Builds a basis without checking integrality of pairing ratios.
    pub(crate) fn unchecked(space: Arc<RootSpace>, roots: Vec<Vec<Q>>) -> Self {
        let gram = gram_of(&space, &roots);
        PrimeBasis { space, roots, gram }
    }

    pub fn space(&self) -> &Arc<RootSpace> {
        &self.space
    }

    pub fn roots(&self) -> &[Vec<Q>] {
        &self.roots
    }

    pub fn root(&self, i: usize) -> &[Q] {
        &self.roots[i]
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn pair(&self, i: usize, j: usize) -> Q {
        self.gram[i][j].clone()
    }

    /// Gram matrix of the roots under the root-space form.
    pub fn gram(&self) -> QMatrix {
        let n = self.len();
        let mut g = QMatrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                g[(i, j)] = self.pair(i, j);
            }
        }
        g
    }

    /// Gram matrix of the roots at the given positions.
    pub fn gram_on(&self, idx: &[usize]) -> QMatrix {
        QMatrix::from_rows(idx.iter().map(|&i| idx.iter().map(|&j| self.gram[i][j].clone()).collect()).collect())
    }

    /// Pairing ratio `2(v_i, v_j) / (v_i, v_i)` as an exact rational.
    pub fn ratio(&self, i: usize, j: usize) -> Q {
        Q::from_integer(2.into()) * &self.gram[i][j] / &self.gram[i][i]
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.roots
                .iter()
                .map(|r| serde_json::Value::Array(r.iter().map(|x| fmt_q(x).into()).collect()))
                .collect(),
        )
    }

    pub fn from_json(space: Arc<RootSpace>, v: &serde_json::Value) -> Result<Self> {
        let rows = v.as_array().ok_or_else(|| Error::Parse("basis must be an array".into()))?;
        let roots = rows
            .iter()
            .map(|r| {
                r.as_array()
                    .ok_or_else(|| Error::Parse("root must be an array".into()))?
                    .iter()
                    .map(|x| x.as_str().ok_or_else(|| Error::Parse("coordinate must be a string".into())).and_then(parse_q))
                    .collect::<Result<Vec<Q>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        PrimeBasis::new(space, roots)
    }
}

/// `ρ_a(b) = b − (2(b,a)/(a,a))·a`.
pub fn reflect_root(space: &RootSpace, a: &[Q], b: &[Q]) -> Result<Vec<Q>> {
    let aa = space.pair(a, a);
    if aa.is_zero() {
        return Err(Error::IsotropicReflector);
    }
    let c = Q::from_integer(2.into()) * space.pair(b, a) / aa;
    Ok(b.iter().zip(a).map(|(x, y)| x - &c * y).collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Move {
    /// Reflecting root.
    pub i: usize,
    /// Reflected root (replaced in place).
    pub j: usize,
}

/// Replayable chain of braid moves.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct MoveSequence {
    pub moves: Vec<Move>,
}

impl MoveSequence {
    pub fn push(&mut self, i: usize, j: usize) {
        self.moves.push(Move { i, j });
    }

    pub fn len(&self) -> usize {
        self.moves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.moves.is_empty()
    }

    pub fn extend(&mut self, other: &MoveSequence) {
        self.moves.extend_from_slice(&other.moves);
    }

    /// Applies every move in order with full integrality checks.
    pub fn replay(&self, start: &PrimeBasis) -> Result<PrimeBasis> {
        let mut b = start.clone();
        for m in &self.moves {
            b = braid_move(&b, m.i, m.j)?;
        }
        Ok(b)
    }

    /// Text form: one `k i j` line per move, 1-based.
    pub fn to_text(&self) -> String {
        self.moves
            .iter()
            .enumerate()
            .map(|(k, m)| format!("{} {} {}\n", k + 1, m.i + 1, m.j + 1))
            .collect()
    }

    pub fn from_text(src: &str) -> Result<Self> {
        let mut seq = MoveSequence::default();
        for (line_no, line) in src.lines().map(str::trim).filter(|l| !l.is_empty()).enumerate() {
            let nums = line
                .split_whitespace()
                .map(|t| t.parse::<usize>().map_err(|_| Error::Parse(format!("bad move token {t:?}"))))
                .collect::<Result<Vec<_>>>()?;
            match nums.as_slice() {
                &[k, i, j] if k == line_no + 1 && i >= 1 && j >= 1 => seq.push(i - 1, j - 1),
                _ => return Err(Error::Parse(format!("bad move line {line:?}"))),
            }
        }
        Ok(seq)
    }
}

/// Replaces root `j` by `ρ_{root i}(root j)`. Rejected when the result has a
/// non-integer pairing ratio.
pub fn braid_move(basis: &PrimeBasis, i: usize, j: usize) -> Result<PrimeBasis> {
    let out = braid_move_unchecked(basis, i, j)?;
    let n = out.len();
    for k in 0..n {
        if !out.ratio(j, k).is_integer() || !out.ratio(k, j).is_integer() {
            return Err(Error::NonIntegerPairing { i, j });
        }
    }
    Ok(out)
}

pub(crate) fn braid_move_unchecked(basis: &PrimeBasis, i: usize, j: usize) -> Result<PrimeBasis> {
    let n = basis.len();
    if i >= n {
        return Err(Error::IndexOutOfRange(i));
    }
    if j >= n {
        return Err(Error::IndexOutOfRange(j));
    }
    let aa = &basis.gram[i][i];
    if aa.is_zero() {
        return Err(Error::IsotropicReflector);
    }
    let c = Q::from_integer(2.into()) * &basis.gram[j][i] / aa;
    let mut out = basis.clone();
    for (x, y) in out.roots[j].iter_mut().zip(&basis.roots[i]) {
        *x -= &c * y;
    }
    // (v_j, v_j) is unchanged.
    for k in 0..n {
        if k != j {
            let p = &basis.gram[j][k] - &c * &basis.gram[i][k];
            out.gram[j][k] = p.clone();
            out.gram[k][j] = p;
        }
    }
    Ok(out)
}

/// Intersection matrix `2(v_i, v_j) / (v_i, v_i)` of a basis.
pub fn gim_of(basis: &PrimeBasis) -> Result<Gim> {
    let n = basis.len();
    let mut m = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in 0..n {
            m[i][j] = to_i64(&basis.ratio(i, j)).ok_or(Error::NonIntegerPairing { i, j })?;
        }
    }
    validate_gim(m)
}

/// Order-independent key: coordinate vectors sorted lexicographically.
pub fn canonical_form(basis: &PrimeBasis) -> Vec<u8> {
    let mut roots: Vec<&Vec<Q>> = basis.roots.iter().collect();
    roots.sort();
    let mut out = Vec::new();
    for r in roots {
        for x in r {
            out.extend_from_slice(fmt_q(x).as_bytes());
            out.push(b',');
        }
        out.push(b';');
    }
    out
}

#[derive(Debug, Clone)]
pub struct Enumeration {
    /// Reached bases with the move sequence that reaches each from the start.
    pub bases: Vec<(PrimeBasis, MoveSequence)>,
    /// True when the breadth-first closure was exhausted within the bounds.
    pub complete: bool,
}

pub const DEFAULT_MAX_DEPTH: usize = 8;
pub const DEFAULT_MAX_NODES: usize = 100_000;

/// Breadth-first closure under braid moves, deduplicated by
/// [`canonical_form`], moves tried in ascending `(i, j)` order.
pub fn enumerate_equivalents(basis: &PrimeBasis, max_depth: usize, max_nodes: usize) -> Result<Enumeration> {
    if max_depth == 0 || max_nodes == 0 {
        return Err(Error::InvalidArgument("enumeration bounds must be positive".into()));
    }
    let n = basis.len();
    let mut seen: HashSet<Vec<u8>> = HashSet::new();
    seen.insert(canonical_form(basis));
    let mut bases = vec![(basis.clone(), MoveSequence::default())];
    let mut queue: VecDeque<(usize, usize)> = VecDeque::from([(0, 0)]);
    let mut complete = true;
    while let Some((idx, depth)) = queue.pop_front() {
        let (current, path) = bases[idx].clone();
        for i in 0..n {
            for j in 0..n {
                let Ok(next) = braid_move(&current, i, j) else { continue };
                let key = canonical_form(&next);
                if seen.contains(&key) {
                    continue;
                }
                if depth == max_depth || bases.len() == max_nodes {
                    complete = false;
                    continue;
                }
                seen.insert(key);
                let mut p = path.clone();
                p.push(i, j);
                queue.push_back((bases.len(), depth + 1));
                bases.push((next, p));
            }
        }
        if !complete && bases.len() == max_nodes {
            break;
        }
    }
    Ok(Enumeration { bases, complete })
}

/// Keeps one representative per intersection matrix up to simultaneous
/// permutation (brute force, intended for `n <= 10`).
pub fn dedup_by_gim(bases: &[(PrimeBasis, MoveSequence)]) -> Vec<usize> {
    let mut reps: Vec<(usize, Gim)> = Vec::new();
    for (k, (b, _)) in bases.iter().enumerate() {
        let Ok(g) = gim_of(b) else { continue };
        if !reps.iter().any(|(_, r)| r.isomorphism_to(&g).is_some()) {
            reps.push((k, g));
        }
    }
    reps.into_iter().map(|(k, _)| k).collect()
}
