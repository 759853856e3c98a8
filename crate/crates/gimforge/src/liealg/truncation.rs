//! Degree-truncated quotients of free Lie algebras, built height by height.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use rayon::prelude::*;

use super::free::{multidegrees, FreeComponent, Poly};
use super::presentation::{Constraint, Expr, GradedPresentation};
use crate::arith::Q;
use crate::error::{Error, Result};

/// Which letter multidegrees are computed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DegreeFilter {
    All,
    /// Only raising generators.
    PositiveOnly,
    /// Componentwise at most the given letter counts.
    Below(Vec<u32>),
}

impl DegreeFilter {
    fn admits(&self, p: &GradedPresentation, letters: &[u32]) -> bool {
        match self {
            DegreeFilter::All => true,
            DegreeFilter::PositiveOnly => letters.iter().zip(&p.generators).all(|(&c, g)| c == 0 || g.sign > 0),
            DegreeFilter::Below(mu) => letters.iter().zip(mu).all(|(a, b)| a <= b),
        }
    }
}

/// Integer row echelon form with primitive rows keyed by pivot column.
#[derive(Debug, Clone, Default)]
pub struct Echelon {
    rows: BTreeMap<usize, Vec<BigInt>>,
}

impl Echelon {
    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> impl Iterator<Item = &Vec<BigInt>> {
        self.rows.values()
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.keys().copied()
    }

    /// Adds `v` to the span; returns whether the rank grew.
    pub fn insert(&mut self, mut v: Vec<BigInt>) -> bool {
        for (&p, row) in &self.rows {
            if v[p].is_zero() {
                continue;
            }
            let g = row[p].gcd(&v[p]);
            let a = &row[p] / &g;
            let b = &v[p] / &g;
            for (x, r) in v.iter_mut().zip(row) {
                *x = &*x * &a - r * &b;
            }
        }
        let Some(p) = v.iter().position(|x| !x.is_zero()) else { return false };
        let content = v.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
        let sign = if v[p].is_negative() { -BigInt::from(1) } else { BigInt::from(1) };
        let d = content * sign;
        for x in v.iter_mut() {
            *x = &*x / &d;
        }
        self.rows.insert(p, v);
        true
    }

    /// Remainder of `v` after clearing every pivot column, over the rationals.
    pub fn remainder(&self, v: &[BigInt]) -> Vec<Q> {
        let mut v: Vec<Q> = v.iter().map(|x| Q::from_integer(x.clone())).collect();
        for (&p, row) in &self.rows {
            if v[p].is_zero() {
                continue;
            }
            let c = &v[p] / Q::from_integer(row[p].clone());
            for (x, r) in v.iter_mut().zip(row) {
                *x -= &c * Q::from_integer(r.clone());
            }
        }
        v
    }
}

/// One letter multidegree of the quotient.
#[derive(Debug, Clone)]
pub struct Component {
    pub letters: Vec<u32>,
    pub degree: Vec<i64>,
    pub killed: bool,
    free: FreeComponent,
    ideal: Echelon,
    /// Lyndon positions whose bracketings form the quotient basis.
    basis: Vec<usize>,
}

impl Component {
    pub fn height(&self) -> u32 {
        self.letters.iter().sum()
    }

    pub fn free_dim(&self) -> usize {
        self.free.dim()
    }

    pub fn relation_rank(&self) -> usize {
        self.ideal.rank()
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Lyndon words whose bracketings span the quotient.
    pub fn basis_words(&self) -> Vec<&[u8]> {
        self.basis.iter().map(|&k| self.free.lyndon[k].as_slice()).collect()
    }

    /// Coordinates of a Lie polynomial of this multidegree in the quotient basis.
    pub fn coordinates(&self, p: &Poly) -> Vec<Q> {
        let rest = self.ideal.remainder(&self.free.to_lyndon(p));
        self.basis.iter().map(|&k| rest[k].clone()).collect()
    }

    /// Polynomial representatives of the quotient basis.
    pub fn basis_polys(&self) -> impl Iterator<Item = &Poly> {
        self.basis.iter().map(|&k| &self.free.expansions[k])
    }

    /// A quotient vector as a Lie polynomial.
    pub fn section(&self, coords: &[Q]) -> Vec<(Q, &Poly)> {
        coords.iter().cloned().zip(self.basis_polys()).collect()
    }
}

#[derive(Debug, Clone)]
pub struct GradedAlgebraTruncation {
    pub presentation: GradedPresentation,
    pub cap: u32,
    pub filter: DegreeFilter,
    pub components: BTreeMap<Vec<u32>, Component>,
    /// Generators forced to vanish by the relations.
    pub inconsistent: Vec<usize>,
    /// False when the relation family was itself truncated.
    pub complete: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Evaluation {
    pub letters: Vec<u32>,
    pub degree: Vec<i64>,
    pub coords: Vec<Q>,
    pub is_zero: bool,
}

/// Builds the quotient of the free Lie algebra on the generators of `p` by
/// the ideal of its relations, for every admitted multidegree of height at
/// most `cap`.
pub fn present(p: &GradedPresentation, cap: u32, filter: DegreeFilter) -> Result<GradedAlgebraTruncation> {
    p.check()?;
    if cap == 0 {
        return Err(Error::InvalidArgument("degree cap must be at least 1".into()));
    }
    let letters = p.generators.len();
    let mut statics: HashMap<Vec<u32>, Vec<Poly>> = HashMap::new();
    for rel in &p.relations {
        let e = rel.expr();
        statics.entry(e.letters(letters)).or_default().push(e.eval());
    }
    let mut components: BTreeMap<Vec<u32>, Component> = BTreeMap::new();
    for h in 1..=cap {
        let degrees: Vec<Vec<u32>> = multidegrees(letters, h).into_iter().filter(|d| filter.admits(p, d)).collect();
        let mut dynamic = match &p.pra {
            Some(pra) => pra_instances(p, &components, &pra.constraints, h, &filter),
            None => HashMap::new(),
        };
        let built: Vec<Component> = degrees
            .par_iter()
            .map(|d| {
                let extra = dynamic.get(d).map(Vec::as_slice).unwrap_or(&[]);
                build_component(p, &components, d, statics.get(d).map(Vec::as_slice).unwrap_or(&[]), extra)
            })
            .collect();
        dynamic.clear();
        for c in built {
            components.insert(c.letters.clone(), c);
        }
    }
    let inconsistent = (0..letters)
        .filter(|&g| {
            let mut d = vec![0; letters];
            d[g] = 1;
            components.get(&d).is_some_and(|c| c.dim() == 0)
        })
        .collect();
    let complete = p.pra.as_ref().is_none_or(|x| x.complete);
    Ok(GradedAlgebraTruncation { presentation: p.clone(), cap, filter, components, inconsistent, complete })
}

fn build_component(p: &GradedPresentation, lower: &BTreeMap<Vec<u32>, Component>, d: &[u32], statics: &[Poly], dynamic: &[Poly]) -> Component {
    let mut memo = HashMap::new();
    let free = FreeComponent::new(d, &mut memo);
    let degree = p.degree_of(d);
    let height: u32 = d.iter().sum();
    let mut ideal = Echelon::default();
    let killed = p.kill.as_ref().is_some_and(|k| {
        let g: Vec<Q> = degree.iter().map(|&x| Q::from_integer(x.into())).collect();
        height >= k.min_height && k.form.form(&g, &g) > Q::from_integer(2.into())
    });
    if killed {
        for k in 0..free.dim() {
            let mut v = vec![BigInt::zero(); free.dim()];
            v[k] = 1.into();
            ideal.insert(v);
        }
    } else {
        for r in statics.iter().chain(dynamic) {
            if ideal.rank() == free.dim() {
                break;
            }
            ideal.insert(free.to_lyndon(r));
        }
        for g in 0..d.len() {
            if d[g] == 0 || ideal.rank() == free.dim() {
                continue;
            }
            let mut sub = d.to_vec();
            sub[g] -= 1;
            let Some(c) = lower.get(&sub) else { continue };
            let x = Poly::letter(g as u8);
            for row in c.ideal.rows() {
                ideal.insert(free.to_lyndon(&x.bracket(&c.free.to_poly(row))));
            }
        }
    }
    let pivots: Vec<usize> = ideal.pivots().collect();
    let basis = (0..free.dim()).filter(|k| !pivots.contains(k)).collect();
    Component { letters: d.to_vec(), degree, killed, free, ideal, basis }
}

/// Instances of the constraints whose result has height `h`, polarized over
/// the quotient bases of the lower components, grouped by multidegree.
fn pra_instances(
    p: &GradedPresentation,
    comps: &BTreeMap<Vec<u32>, Component>,
    constraints: &[Constraint],
    h: u32,
    filter: &DegreeFilter,
) -> HashMap<Vec<u32>, Vec<Poly>> {
    let mut by_degree: HashMap<&[i64], Vec<(&Vec<u32>, &Poly)>> = HashMap::new();
    for (d, c) in comps {
        for poly in c.basis_polys() {
            by_degree.entry(c.degree.as_slice()).or_default().push((d, poly));
        }
    }
    let found: Vec<(Vec<u32>, Poly)> = constraints
        .par_iter()
        .flat_map_iter(|con| {
            let mut out = Vec::new();
            let (Some(xs), Some(ys)) = (by_degree.get(con.acting.as_slice()), by_degree.get(con.target.as_slice())) else {
                return out;
            };
            for &(dy, y) in ys {
                let hy: u32 = dy.iter().sum();
                if hy >= h {
                    continue;
                }
                for_each_multiset(xs.len(), con.power as usize, &mut |pick: &[usize]| {
                    let hx: u32 = pick.iter().map(|&i| xs[i].0.iter().sum::<u32>()).sum();
                    if hx + hy != h {
                        return;
                    }
                    let mut letters = dy.clone();
                    for &i in pick {
                        for (a, b) in letters.iter_mut().zip(xs[i].0) {
                            *a += b;
                        }
                    }
                    if !filter.admits(p, &letters) {
                        return;
                    }
                    let poly = polarized(pick.iter().map(|&i| xs[i].1).collect(), y);
                    if !poly.is_zero() {
                        out.push((letters, poly));
                    }
                });
            }
            out
        })
        .collect();
    let mut grouped: HashMap<Vec<u32>, Vec<Poly>> = HashMap::new();
    for (d, poly) in found {
        grouped.entry(d).or_default().push(poly);
    }
    grouped
}

fn for_each_multiset(n: usize, k: usize, f: &mut dyn FnMut(&[usize])) {
    fn go(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
        if cur.len() == k {
            f(cur);
            return;
        }
        for i in start..n {
            cur.push(i);
            go(n, k, i, cur, f);
            cur.pop();
        }
    }
    go(n, k, 0, &mut Vec::new(), f);
}

/// Sum over distinct orderings of `ad x_1 ... ad x_k y`.
fn polarized(xs: Vec<&Poly>, y: &Poly) -> Poly {
    let mut idx: Vec<usize> = (0..xs.len()).collect();
    let mut out = Poly::default();
    let mut seen = std::collections::HashSet::new();
    permute(&mut idx, 0, &mut |perm| {
        let key: Vec<*const Poly> = perm.iter().map(|&i| xs[i] as *const Poly).collect();
        if seen.insert(key) {
            let term = perm.iter().rev().fold(y.clone(), |acc, &i| xs[i].bracket(&acc));
            out.add_scaled(&term, &1.into());
        }
    });
    out
}

fn permute(v: &mut Vec<usize>, k: usize, f: &mut dyn FnMut(&[usize])) {
    if k == v.len() {
        f(v);
        return;
    }
    for i in k..v.len() {
        v.swap(k, i);
        permute(v, k + 1, f);
        v.swap(k, i);
    }
}

impl GradedAlgebraTruncation {
    pub fn component(&self, letters: &[u32]) -> Option<&Component> {
        self.components.get(letters)
    }

    /// Coordinates of a bracket monomial in its quotient component.
    pub fn bracket_eval(&self, e: &Expr) -> Result<Evaluation> {
        let n = self.presentation.generators.len();
        if e.max_generator() >= n {
            return Err(Error::InvalidArgument("expression uses an unknown generator".into()));
        }
        let height = e.height();
        if height > self.cap as usize {
            return Err(Error::HeightExceeded { height, cap: self.cap as usize });
        }
        let letters = e.letters(n);
        let c = self.components.get(&letters).ok_or_else(|| Error::OutsideTruncation(letters.clone()))?;
        let coords = c.coordinates(&e.eval());
        let is_zero = coords.iter().all(Zero::is_zero);
        Ok(Evaluation { degree: c.degree.clone(), letters, coords, is_zero })
    }

    /// Dimension per lattice degree, summed over letter multidegrees. With
    /// [`DegreeFilter::All`] the zero degree is the presentation's Cartan
    /// dimension when it has one.
    pub fn graded_dims(&self) -> BTreeMap<Vec<i64>, usize> {
        let mut out = BTreeMap::new();
        for c in self.components.values() {
            *out.entry(c.degree.clone()).or_insert(0) += c.dim();
        }
        if let (DegreeFilter::All, Some(h)) = (&self.filter, self.presentation.cartan) {
            out.insert(vec![0; self.presentation.rank()], h);
        }
        out
    }

    pub fn letter_dims(&self) -> BTreeMap<Vec<u32>, usize> {
        self.components.iter().map(|(d, c)| (d.clone(), c.dim())).collect()
    }

    /// Total dimension at each height `1..=cap`.
    pub fn height_dims(&self) -> Vec<usize> {
        let mut out = vec![0; self.cap as usize];
        for c in self.components.values() {
            out[c.height() as usize - 1] += c.dim();
        }
        out
    }

    pub fn total_dim(&self) -> usize {
        self.graded_dims().values().sum()
    }

    pub fn dims_json(&self) -> serde_json::Value {
        let dims: serde_json::Map<String, serde_json::Value> = self
            .graded_dims()
            .into_iter()
            .filter(|(_, d)| *d > 0)
            .map(|(k, d)| (k.iter().map(i64::to_string).collect::<Vec<_>>().join(","), d.into()))
            .collect();
        serde_json::json!({ "dims": dims, "heights": self.height_dims(), "complete": self.complete })
    }
}

/// Dimension per lattice degree.
pub fn graded_dims(t: &GradedAlgebraTruncation) -> BTreeMap<Vec<i64>, usize> {
    t.graded_dims()
}
