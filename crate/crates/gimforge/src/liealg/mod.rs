//! Truncated computations in the Lie algebras presented by a GIM.
//!
//! Generators `e_i` are letters `0..n`, `f_i` are letters `n..2n`. The
//! Cartan part is carried by the lattice grading and `[e_i, f_i]` is set to
//! zero, so mixed components are those of the associated graded algebra.

mod free;
mod parity;
mod presentation;
mod truncation;

use std::collections::BTreeSet;
use std::sync::Arc;

pub use free::{free_basis, is_lyndon, lyndon_words, multidegrees, standard_factorization, FreeComponent, Poly, Word};
pub use parity::{coset_obstruction, CosetVerdict, ParityLattice};
pub use presentation::{Constraint, Expr, Generator, GradedPresentation, KillRule, PraConstraints, Relation};
pub use truncation::{graded_dims, present, Component, DegreeFilter, Echelon, Evaluation, GradedAlgebraTruncation};

use crate::arith::{to_i64, Q};
use crate::braid::{enumerate_equivalents, PrimeBasis};
use crate::error::{Error, Result};
use crate::gim::{gram, realize, symmetrizer, Gim};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RelationKind {
    Gim,
    Im,
    Pra,
}

impl std::str::FromStr for RelationKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "gim" => Ok(RelationKind::Gim),
            "im" => Ok(RelationKind::Im),
            "pra" => Ok(RelationKind::Pra),
            _ => Err(Error::InvalidArgument(format!("unknown relation family {s:?} (gim, im, pra)"))),
        }
    }
}

/// Bounds for the basis enumeration behind the Pra relations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumBounds {
    pub depth: usize,
    pub nodes: usize,
}

impl Default for EnumBounds {
    fn default() -> Self {
        EnumBounds { depth: crate::braid::DEFAULT_MAX_DEPTH, nodes: crate::braid::DEFAULT_MAX_NODES }
    }
}

pub fn e(i: usize) -> usize {
    i
}

pub fn f(n: usize, i: usize) -> usize {
    n + i
}

/// `e_1..e_n, f_1..f_n` with degrees `±α_i`.
pub fn chevalley_generators(n: usize) -> Vec<Generator> {
    let unit = |i: usize, s: i64| (0..n).map(|k| if k == i { s } else { 0 }).collect::<Vec<i64>>();
    (0..n)
        .map(|i| Generator::new(format!("e{}", i + 1), unit(i, 1)))
        .chain((0..n).map(|i| Generator::new(format!("f{}", i + 1), unit(i, -1))))
        .collect()
}

fn model_relations(n: usize) -> Vec<Relation> {
    (0..n).map(|i| Relation::Zero(Expr::bracket(Expr::Gen(e(i)), Expr::Gen(f(n, i))))).collect()
}

/// The GIM relations over the Chevalley letters.
pub fn relations_gim(m: &Gim) -> Vec<Relation> {
    let n = m.n();
    let mut out = model_relations(n);
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            let a = m.entry(i, j);
            let (ei, ej, fi, fj) = (e(i), e(j), f(n, i), f(n, j));
            if a <= 0 {
                out.push(Relation::Zero(Expr::bracket(Expr::Gen(ei), Expr::Gen(fj))));
                out.push(Relation::AdPower { x: ei, power: (1 - a) as u32, y: ej });
                out.push(Relation::AdPower { x: fi, power: (1 - a) as u32, y: fj });
            } else {
                if i < j {
                    out.push(Relation::Zero(Expr::bracket(Expr::Gen(ei), Expr::Gen(ej))));
                    out.push(Relation::Zero(Expr::bracket(Expr::Gen(fi), Expr::Gen(fj))));
                }
                out.push(Relation::AdPower { x: ei, power: (1 + a) as u32, y: fj });
                out.push(Relation::AdPower { x: fi, power: (1 + a) as u32, y: ej });
            }
        }
    }
    out
}

/// Symmetrized form scaled so the smallest self-pairing is 2.
pub fn normalized_form(m: &Gim) -> Result<crate::linalg::QMatrix> {
    let s = symmetrizer(m)?;
    let min = *s.s.iter().min().expect("nonempty");
    let mut g = gram(m, &s).g;
    let k = Q::new(1.into(), min.into());
    for i in 0..m.n() {
        for j in 0..m.n() {
            g[(i, j)] = &g[(i, j)] * &k;
        }
    }
    Ok(g)
}

/// GIM relations plus the rule killing components of long degree.
pub fn relations_im(m: &Gim) -> Result<(Vec<Relation>, KillRule)> {
    Ok((relations_gim(m), KillRule { form: normalized_form(m)?, min_height: 2 }))
}

/// Constraints of every ordered pair of roots in every basis reached from
/// the simple roots within `bounds`.
pub fn relations_pra(m: &Gim, bounds: EnumBounds) -> Result<PraConstraints> {
    let n = m.n();
    let start = PrimeBasis::standard(Arc::new(realize(m)?));
    let en = enumerate_equivalents(&start, bounds.depth, bounds.nodes)?;
    let mut set: BTreeSet<Constraint> = BTreeSet::new();
    for (b, _) in &en.bases {
        let degree = |k: usize| -> Vec<i64> { b.root(k)[..n].iter().map(|x| to_i64(x).expect("integral root")).collect() };
        for i in 0..n {
            let alpha = degree(i);
            let minus: Vec<i64> = alpha.iter().map(|x| -x).collect();
            for j in 0..n {
                if i == j {
                    continue;
                }
                let beta = degree(j);
                let c = to_i64(&b.ratio(i, j)).ok_or_else(|| Error::NonIntegerPairing { i: i + 1, j: j + 1 })?;
                let mut push = |acting: &Vec<i64>, power: i64| {
                    set.insert(Constraint { acting: acting.clone(), target: beta.clone(), power: power as u32 });
                };
                match c.signum() {
                    -1 => {
                        push(&alpha, 1 - c);
                        push(&minus, 1);
                    }
                    1 => {
                        push(&minus, 1 + c);
                        push(&alpha, 1);
                    }
                    _ => {
                        push(&alpha, 1);
                        push(&minus, 1);
                    }
                }
            }
        }
    }
    Ok(PraConstraints { constraints: set.into_iter().collect(), bases: en.bases.len(), complete: en.complete })
}

/// Presentation of `gim(M)`, `im(M)` or `Pra(M)` on the Chevalley letters.
pub fn presentation(m: &Gim, kind: RelationKind, bounds: EnumBounds) -> Result<GradedPresentation> {
    let gens = chevalley_generators(m.n());
    let mut p = match kind {
        RelationKind::Gim => GradedPresentation::new(gens, relations_gim(m))?,
        RelationKind::Im => {
            let (rels, kill) = relations_im(m)?;
            let mut p = GradedPresentation::new(gens, rels)?;
            p.kill = Some(kill);
            p
        }
        RelationKind::Pra => {
            let mut p = GradedPresentation::new(gens, model_relations(m.n()))?;
            p.pra = Some(relations_pra(m, bounds)?);
            p
        }
    };
    p.cartan = Some(realize(m)?.dim());
    Ok(p)
}

/// Positive part of the Kac-Moody algebra of a generalized Cartan matrix:
/// generators `x_i` with the Serre relations.
pub fn serre_presentation(a: &Gim) -> Result<GradedPresentation> {
    if !a.is_cartan() {
        return Err(Error::InvalidArgument("Serre presentation needs a generalized Cartan matrix".into()));
    }
    let n = a.n();
    let gens = (0..n).map(|i| Generator::new(format!("x{}", i + 1), (0..n).map(|k| i64::from(k == i)).collect())).collect();
    let rels = (0..n)
        .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| Relation::AdPower { x: i, power: (1 - a.entry(i, j)) as u32, y: j }))
        .collect();
    GradedPresentation::new(gens, rels)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gim::validate_gim;

    fn gim(rows: &[&[i64]]) -> Gim {
        validate_gim(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn gim_relations_mixed_sign() {
        let m = gim(&[&[2, -1, 1], &[-1, 2, -1], &[1, -1, 2]]);
        let rels = relations_gim(&m);
        assert!(rels.contains(&Relation::Zero(Expr::bracket(Expr::Gen(0), Expr::Gen(2)))));
        assert!(rels.contains(&Relation::AdPower { x: 0, power: 2, y: f(3, 2) }));
        assert!(rels.contains(&Relation::AdPower { x: 0, power: 2, y: 1 }));
        assert!(rels.contains(&Relation::Zero(Expr::bracket(Expr::Gen(0), Expr::Gen(f(3, 1))))));
    }

    #[test]
    fn gim_relations_a2_are_serre() {
        let rels = relations_gim(&gim(&[&[2, -1], &[-1, 2]]));
        let ad: Vec<_> = rels.iter().filter(|r| matches!(r, Relation::AdPower { .. })).collect();
        assert_eq!(ad.len(), 4);
        assert!(ad.iter().all(|r| matches!(r, Relation::AdPower { power: 2, .. })));
    }

    #[test]
    fn im_form_is_normalized() {
        let (_, kill) = relations_im(&gim(&[&[2, -1], &[-2, 2]])).unwrap();
        assert_eq!(kill.form.row(0)[0], Q::from_integer(4.into()));
        assert_eq!(kill.form.row(1)[1], Q::from_integer(2.into()));
    }

    #[test]
    fn pra_rank_one_is_kac_moody() {
        let p = relations_pra(&gim(&[&[2]]), EnumBounds::default()).unwrap();
        assert!(p.constraints.is_empty());
        assert!(p.complete);
    }

    #[test]
    fn pra_a2_constraints_include_serre() {
        let p = relations_pra(&gim(&[&[2, -1], &[-1, 2]]), EnumBounds::default()).unwrap();
        assert!(p.complete);
        assert!(p.constraints.contains(&Constraint { acting: vec![1, 0], target: vec![0, 1], power: 2 }));
        assert!(p.constraints.contains(&Constraint { acting: vec![-1, 0], target: vec![0, 1], power: 1 }));
    }
}
