//! Generalized intersection matrices: validation, symmetrization, the
//! symmetrized Gram matrix, the nondegenerate root-space realization and the
//! Cartan datum.

use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{q, sign, Q};
use crate::error::{Error, GimViolation, Result};
use crate::linalg::QMatrix;

/// A validated generalized intersection matrix.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<i64>>", into = "Vec<Vec<i64>>")]
pub struct Gim {
    m: Vec<Vec<i64>>,
}

impl TryFrom<Vec<Vec<i64>>> for Gim {
    type Error = Error;
    fn try_from(m: Vec<Vec<i64>>) -> Result<Self> {
        validate_gim(m)
    }
}

impl From<Gim> for Vec<Vec<i64>> {
    fn from(g: Gim) -> Self {
        g.m
    }
}

/// Checks every Def.-style axiom and reports all violated cells at once.
pub fn validate_gim(matrix: Vec<Vec<i64>>) -> Result<Gim> {
    let n = matrix.len();
    if n == 0 {
        return Err(Error::Empty);
    }
    for (row, r) in matrix.iter().enumerate() {
        if r.len() != n {
            return Err(Error::NotSquare { row, len: r.len(), n });
        }
    }
    let mut bad = Vec::new();
    for i in 0..n {
        if matrix[i][i] != 2 {
            bad.push(GimViolation::DiagonalNotTwo(i));
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            if matrix[i][j].signum() != matrix[j][i].signum() {
                bad.push(GimViolation::SignMismatch(i, j));
            }
        }
    }
    if bad.is_empty() {
        Ok(Gim { m: matrix })
    } else {
        Err(Error::InvalidGim(bad))
    }
}

impl Gim {
    pub fn n(&self) -> usize {
        self.m.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.m[i][j]
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.m
    }

    pub fn to_qmatrix(&self) -> QMatrix {
        QMatrix::from_i64(&self.m)
    }

    /// Simultaneous row/column permutation: `out[i][j] = m[perm[i]][perm[j]]`.
    pub fn permuted(&self, perm: &[usize]) -> Gim {
        let m = perm.iter().map(|&i| perm.iter().map(|&j| self.m[i][j]).collect()).collect();
        Gim { m }
    }

    /// Connected components of the graph with an edge wherever `m_ij != 0`.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let mut comp = vec![s];
            seen[s] = true;
            let mut k = 0;
            while k < comp.len() {
                let i = comp[k];
                for j in 0..n {
                    if !seen[j] && self.m[i][j] != 0 {
                        seen[j] = true;
                        comp.push(j);
                    }
                }
                k += 1;
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_indecomposable(&self) -> bool {
        self.blocks().len() == 1
    }

    /// True when all off-diagonal entries are non-positive.
    pub fn is_cartan(&self) -> bool {
        let n = self.n();
        (0..n).all(|i| (0..n).all(|j| i == j || self.m[i][j] <= 0))
    }

    /// Brute-force search for a simultaneous permutation `p` with
    /// `self.permuted(p) == other`.
    pub fn isomorphism_to(&self, other: &Gim) -> Option<Vec<usize>> {
        let n = self.n();
        if n != other.n() {
            return None;
        }
        let mut perm = Vec::with_capacity(n);
        let mut used = vec![false; n];
        fn rec(a: &Gim, b: &Gim, perm: &mut Vec<usize>, used: &mut [bool]) -> bool {
            let k = perm.len();
            if k == a.n() {
                return true;
            }
            for c in 0..a.n() {
                if used[c] {
                    continue;
                }
                let ok = (0..k).all(|t| a.m[perm[t]][c] == b.m[t][k] && a.m[c][perm[t]] == b.m[k][t]);
                if ok {
                    used[c] = true;
                    perm.push(c);
                    if rec(a, b, perm, used) {
                        return true;
                    }
                    perm.pop();
                    used[c] = false;
                }
            }
            false
        }
        rec(self, other, &mut perm, &mut used).then_some(perm)
    }
}

impl std::fmt::Display for Gim {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let rows: Vec<String> = self
            .m
            .iter()
            .map(|r| format!("[{}]", r.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")))
            .collect();
        write!(f, "[{}]", rows.join(","))
    }
}

/// Positive diagonal `S` with `SM` symmetric, stored as coprime integers per
/// connected block.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Symmetrizer {
    pub s: Vec<i64>,
}

/// Propagates `s_j / s_i = m_ij / m_ji` along the nonzero graph and checks
/// every edge for consistency.
pub fn symmetrizer(m: &Gim) -> Result<Symmetrizer> {
    let n = m.n();
    let mut s: Vec<Option<Q>> = vec![None; n];
    for block in m.blocks() {
        let root = block[0];
        s[root] = Some(Q::one());
        let mut queue = vec![root];
        while let Some(i) = queue.pop() {
            let si = s[i].clone().expect("assigned");
            for j in 0..n {
                if i == j || m.entry(i, j) == 0 {
                    continue;
                }
                let want = &si * q(m.entry(i, j)) / q(m.entry(j, i));
                match &s[j] {
                    None => {
                        s[j] = Some(want);
                        queue.push(j);
                    }
                    Some(sj) if *sj != want => return Err(Error::NotSymmetrizable(i, j)),
                    Some(_) => {}
                }
            }
        }
    }
    let mut out = vec![0i64; n];
    for block in m.blocks() {
        let lcm = block.iter().fold(num_bigint::BigInt::one(), |acc, &i| {
            acc.lcm(s[i].as_ref().unwrap().denom())
        });
        let ints: Vec<num_bigint::BigInt> =
            block.iter().map(|&i| (s[i].as_ref().unwrap() * Q::from_integer(lcm.clone())).to_integer()).collect();
        let g = ints.iter().fold(num_bigint::BigInt::zero(), |acc, x| acc.gcd(x));
        for (&i, v) in block.iter().zip(&ints) {
            let v = (v / &g).abs();
            out[i] = i64::try_from(&v).map_err(|_| Error::InvalidArgument("symmetrizer overflow".into()))?;
        }
    }
    Ok(Symmetrizer { s: out })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Definiteness {
    PositiveDefinite,
    PositiveSemidefinite,
    Indefinite,
}

impl std::fmt::Display for Definiteness {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Definiteness::PositiveDefinite => "positive definite",
            Definiteness::PositiveSemidefinite => "positive semidefinite",
            Definiteness::Indefinite => "indefinite",
        };
        f.write_str(s)
    }
}

/// The symmetrized form `g_ij = s_i m_ij` with its exact definiteness and corank.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GramMatrix {
    pub g: QMatrix,
    pub definiteness: Definiteness,
    pub corank: usize,
}

pub fn gram(m: &Gim, s: &Symmetrizer) -> GramMatrix {
    let n = m.n();
    let mut g = QMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            g[(i, j)] = q(s.s[i] * m.entry(i, j));
        }
    }
    debug_assert!(g.is_symmetric());
    gram_from_form(g)
}

/// Classifies an arbitrary symmetric rational matrix.
pub fn gram_from_form(g: QMatrix) -> GramMatrix {
    let n = g.rows();
    let corank = n - g.rank();
    let definiteness = definiteness_of(&g);
    GramMatrix { g, definiteness, corank }
}

pub fn definiteness_of(g: &QMatrix) -> Definiteness {
    if g.leading_minors().iter().all(|d| d.is_positive()) {
        return Definiteness::PositiveDefinite;
    }
    // A real-rooted polynomial has no negative root iff its coefficients
    // alternate weakly in sign.
    let c = g.charpoly();
    let n = g.rows();
    let nonneg = (0..=n).all(|k| {
        let s = sign(&c[k]);
        s == 0 || (n - k).is_multiple_of(2) == (s > 0)
    });
    if nonneg {
        Definiteness::PositiveSemidefinite
    } else {
        Definiteness::Indefinite
    }
}

/// Nondegenerate extension of the Gram form: `[[g, Wᵀ], [W, 0]]` where the
/// rows of `W` are the reduced echelon basis of `ker g`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootSpace {
    pub n: usize,
    pub corank: usize,
    pub gram: QMatrix,
    pub radical: QMatrix,
    pub form: QMatrix,
}

pub fn realize(m: &Gim) -> Result<RootSpace> {
    let s = symmetrizer(m)?;
    Ok(realize_gram(&gram(m, &s).g))
}

pub fn realize_gram(g: &QMatrix) -> RootSpace {
    let n = g.rows();
    let w = g.kernel();
    let k = w.rows();
    let mut form = QMatrix::zeros(n + k, n + k);
    for i in 0..n {
        for j in 0..n {
            form[(i, j)] = g[(i, j)].clone();
        }
    }
    for r in 0..k {
        for c in 0..n {
            form[(n + r, c)] = w[(r, c)].clone();
            form[(c, n + r)] = w[(r, c)].clone();
        }
    }
    RootSpace { n, corank: k, gram: g.clone(), radical: w, form }
}

impl RootSpace {
    pub fn dim(&self) -> usize {
        self.n + self.corank
    }

    pub fn pair(&self, a: &[Q], b: &[Q]) -> Q {
        self.form.form(a, b)
    }

    /// Coordinates of the prime root `v_i`.
    pub fn prime_root(&self, i: usize) -> Vec<Q> {
        let mut v = vec![Q::zero(); self.dim()];
        v[i] = Q::one();
        v
    }

    /// Image of a vector in the quotient by the radical of the Gram form,
    /// encoded by its pairings with the prime roots (injective on the span of
    /// the prime roots).
    pub fn image_key(&self, v: &[Q]) -> Vec<Q> {
        (0..self.n).map(|i| self.form.form(&self.prime_root(i), v)).collect()
    }
}

/// Simple functionals `α_i` as rows of `[Mᵀ | E]` over the coroot lattice
/// generated by `h_1..h_n, d_1..d_K`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CartanDatum {
    pub n: usize,
    pub corank: usize,
    pub alpha: Vec<Vec<i64>>,
}

pub fn cartan_datum(m: &Gim) -> Result<CartanDatum> {
    let s = symmetrizer(m)?;
    let k = gram(m, &s).corank;
    let n = m.n();
    let mut alpha: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| m.entry(j, i)).collect()).collect();
    let rank_of = |a: &Vec<Vec<i64>>| QMatrix::from_i64(a).rank();
    let base = rank_of(&alpha);
    for step in 0..k {
        let mut chosen = None;
        for r in 0..n {
            let mut trial = alpha.clone();
            for (i, row) in trial.iter_mut().enumerate() {
                row.push(i64::from(i == r));
            }
            if rank_of(&trial) > base + step {
                chosen = Some(trial);
                break;
            }
        }
        alpha = chosen.expect("a unit column always repairs a rank deficiency");
    }
    Ok(CartanDatum { n, corank: k, alpha })
}
