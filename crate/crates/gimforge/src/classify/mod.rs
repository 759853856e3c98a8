//! Reduction of positive definite GIMs and classification of semi-positive
//! ones into modified Dynkin types.

mod dynkin;
mod reduce;
mod report;

use std::sync::Arc;

use num_traits::Zero;

pub use dynkin::{all_labels, template, to_dot, Family, ModifiedDynkinType, NodeDiagram};
pub use reduce::{antidominantize, reduce_positive};

use crate::arith::{q, Q};
use crate::braid::{gim_of, MoveSequence, PrimeBasis};
use crate::error::{Error, Result};
use crate::gim::{gram, realize_gram, symmetrizer, Definiteness, Gim};
use reduce::{covered, move_to, scale, Frame, Work};

#[derive(Debug, Clone)]
pub struct ClassificationReport {
    pub input: Gim,
    pub definiteness: Definiteness,
    pub corank: usize,
    pub label: ModifiedDynkinType,
    /// Affine type for corank-one labels.
    pub affine: Option<String>,
    /// Simple system plus every other root anti-dominantized against it.
    pub reduced: PrimeBasis,
    pub certificate: MoveSequence,
    /// Basis whose matrix is the template of `label` up to simultaneous permutation.
    pub normal_form: PrimeBasis,
    /// Moves from the start basis to `normal_form`.
    pub normal_certificate: MoveSequence,
    /// Node (0-based, figure numbering) of every slot of `normal_form`.
    pub nodes: Vec<usize>,
    /// Both certificates replay and the normal form matches the template.
    pub complete: bool,
}

impl ClassificationReport {
    pub fn reduced_gim(&self) -> Gim {
        gim_of(&self.reduced).expect("reduced basis is integral")
    }

    pub fn normal_gim(&self) -> Gim {
        gim_of(&self.normal_form).expect("normal form is integral")
    }
}

struct Shape {
    label: ModifiedDynkinType,
    /// Image of every figure node in frame coordinates.
    node_images: Vec<Vec<Q>>,
    /// Node of every simple-system position.
    system_node: Vec<usize>,
    /// Target node of every extra slot.
    targets: Vec<(usize, usize)>,
}

/// Classifies an indecomposable symmetrizable semi-positive GIM.
pub fn classify(m: &Gim) -> Result<ClassificationReport> {
    let s = symmetrizer(m)?;
    if !m.is_indecomposable() {
        return Err(Error::Decomposable(m.blocks()));
    }
    let g = gram(m, &s);
    if g.definiteness == Definiteness::Indefinite {
        return Err(Error::Indefinite);
    }
    let start = PrimeBasis::standard(Arc::new(realize_gram(&g.g)));
    let mut work = Work::new(start.clone());
    let mut t = work.grow_simple_system()?;
    let frame = Frame::new(&work.basis, &t);
    let mut extras: Vec<usize> = (0..m.n()).filter(|i| !t.contains(i)).collect();

    cover_extras(&mut work, &frame, &mut t, &mut extras)?;
    reshape_non_reduced(&mut work, &frame, &mut t, &mut extras)?;
    for &y in &extras {
        work.antidominantize_slot(&t, y)?;
    }
    let reduced = work.basis.clone();
    let certificate = work.moves.clone();

    let shape = identify_shape(&work, &frame, &t, &extras)?;
    let mut nodes = vec![0; m.n()];
    for (p, &slot) in t.iter().enumerate() {
        nodes[slot] = shape.system_node[p];
    }
    for &(y, node) in &shape.targets {
        move_to(&mut work, &frame, &t, y, &shape.node_images[node])?;
        nodes[y] = node;
    }
    let normal_form = work.basis.clone();
    let normal_certificate = work.moves;

    let (tmpl, _) = template(&shape.label)?;
    let normal_gim = gim_of(&normal_form)?;
    if normal_gim.isomorphism_to(&tmpl).is_none() {
        return Err(Error::NoTemplateMatch(format!("normal form of {} does not match its template:\n{normal_gim}", shape.label)));
    }
    let complete = certificate.replay(&start)? == reduced && normal_certificate.replay(&start)? == normal_form;
    Ok(ClassificationReport {
        input: m.clone(),
        definiteness: g.definiteness,
        corank: g.corank,
        label: shape.label,
        affine: if g.corank == 1 { shape.label.affine_name() } else { None },
        reduced,
        certificate,
        normal_form,
        normal_certificate,
        nodes,
        complete,
    })
}

/// Swaps roots into the simple system until every other root is
/// proportional to a root it generates.
fn cover_extras(work: &mut Work, frame: &Frame, t: &mut [usize], extras: &mut [usize]) -> Result<()> {
    let cap = 4 * work.basis.len() * work.basis.len() + 16;
    for _ in 0..cap {
        let gens: Vec<Vec<Q>> = t.iter().map(|&k| frame.slot(&work.basis, k)).collect();
        let phi = frame.orbit(&gens);
        let Some(pos) = extras.iter().position(|&y| !covered(&phi, &frame.slot(&work.basis, y))) else {
            return Ok(());
        };
        let y = extras[pos];
        work.antidominantize_slot(t, y)?;
        let mut best: Option<(usize, usize)> = None;
        for k in 0..t.len() {
            let mut trial = t.to_vec();
            trial[k] = y;
            if !work.independent(&trial) || !work.connected(&trial) {
                continue;
            }
            let gens: Vec<Vec<Q>> = trial.iter().map(|&i| frame.slot(&work.basis, i)).collect();
            let phi = frame.orbit(&gens);
            if covered(&phi, &frame.slot(&work.basis, t[k])) && best.is_none_or(|(size, _)| phi.len() > size) {
                best = Some((phi.len(), k));
            }
        }
        let (_, k) = best.ok_or_else(|| Error::NoTemplateMatch(format!("no exchange covers slot {}", y + 1)))?;
        extras[pos] = t[k];
        t[k] = y;
    }
    Err(Error::NonTerminating(cap))
}

/// When some root is half of a long root of the system, trades that long
/// simple root for the half so the system carries the short roots.
fn reshape_non_reduced(work: &mut Work, frame: &Frame, t: &mut [usize], extras: &mut [usize]) -> Result<()> {
    let gens: Vec<Vec<Q>> = t.iter().map(|&k| frame.slot(&work.basis, k)).collect();
    let phi = frame.orbit(&gens);
    let half = extras.iter().position(|&y| {
        let c = frame.slot(&work.basis, y);
        !phi.contains(&c) && phi.contains(&scale(&c, &q(2)))
    });
    let Some(pos) = half else { return Ok(()) };
    let longest = (0..t.len()).map(|k| work.basis.pair(t[k], t[k])).max().expect("nonempty");
    let k = (0..t.len()).find(|&k| work.basis.pair(t[k], t[k]) == longest).expect("present");
    let target = scale(&gens[k], &Q::new(1.into(), 2.into()));
    let y = extras[pos];
    move_to(work, frame, t, y, &target)?;
    extras[pos] = t[k];
    t[k] = y;
    Ok(())
}

fn identify_shape(work: &Work, frame: &Frame, t: &[usize], extras: &[usize]) -> Result<Shape> {
    let basis = &work.basis;
    let gens: Vec<Vec<Q>> = t.iter().map(|&k| frame.slot(basis, k)).collect();
    let phi = frame.orbit(&gens);
    let half = Q::new(1.into(), 2.into());
    let doubled = |y: usize| {
        let c = frame.slot(basis, y);
        !phi.contains(&c) && phi.contains(&scale(&c, &half))
    };
    let l = t.len();
    let lengths: Vec<Q> = t.iter().map(|&k| basis.pair(k, k)).collect();
    let long = lengths.iter().max().expect("nonempty").clone();
    let cartan: Vec<Vec<i64>> = t
        .iter()
        .map(|&a| t.iter().map(|&b| crate::arith::to_i64(&basis.ratio(a, b)).expect("integral")).collect())
        .collect();
    let non_reduced = extras.iter().any(|&y| doubled(y));

    let (family, order) = if non_reduced && l == 1 {
        (Family::A1, vec![0])
    } else {
        let (f, order) = dynkin::identify(&cartan, &lengths)?;
        if non_reduced {
            if f != Family::B {
                return Err(Error::NoTemplateMatch(format!("non-reduced system over {f:?}")));
            }
            (Family::BC, order)
        } else {
            (f, order)
        }
    };

    // Figure-node images and the node carrying each system root.
    let mut node_images: Vec<Vec<Q>> = Vec::new();
    let mut system_node = vec![0; l];
    match family {
        Family::A1 => {
            node_images.push(scale(&gens[0], &q(-2)));
            node_images.push(gens[0].clone());
            system_node[0] = 1;
        }
        Family::BC => {
            let sum = gens.iter().fold(vec![Q::zero(); l], |acc, g| acc.iter().zip(g).map(|(a, b)| a + b).collect());
            node_images.push(scale(&sum, &q(-2)));
            for (k, &p) in order.iter().enumerate() {
                node_images.push(gens[p].clone());
                system_node[p] = k + 1;
            }
        }
        _ => {
            for (k, &p) in order.iter().enumerate() {
                node_images.push(gens[p].clone());
                system_node[p] = k;
            }
        }
    }
    let short_node = match family {
        Family::B | Family::C => l - 1,
        Family::F4 => 3,
        Family::G2 | Family::A1 => 1,
        Family::BC => l,
        _ => 0,
    };
    let mut counts = vec![1usize; node_images.len()];
    if matches!(family, Family::A1 | Family::BC) {
        counts[0] = 0;
    }
    let mut targets = Vec::new();
    for &y in extras {
        let is_long = basis.pair(y, y) == long;
        let node = match family {
            _ if doubled(y) => 0,
            Family::A1 => 1,
            Family::BC if is_long => 1,
            _ if is_long => 0,
            _ => short_node,
        };
        counts[node] += 1;
        targets.push((y, node));
    }
    let d_mult = |k: usize| counts[k];
    let label = match family {
        Family::A | Family::D | Family::E6 | Family::E7 | Family::E8 => ModifiedDynkinType::new(family, l, d_mult(0), None, None),
        Family::A1 => ModifiedDynkinType::new(family, 1, d_mult(0), Some(d_mult(1)), None),
        Family::BC => ModifiedDynkinType::new(family, l, d_mult(0), Some(d_mult(1)), Some(d_mult(l))),
        _ => ModifiedDynkinType::new(family, l, d_mult(0), Some(d_mult(short_node)), None),
    }?;
    let stray = counts.iter().enumerate().any(|(k, &c)| c != label.diagram().multiplicity(k));
    if stray {
        return Err(Error::NoTemplateMatch(format!("multiplicities {counts:?} do not fit {label}")));
    }
    Ok(Shape { label, node_images, system_node, targets })
}

/// The GIM of the toroidal construction: node 1 of `c` repeated `nu` extra
/// times in front.
pub fn gim_from_toroidal(c: &Gim, nu: usize) -> Result<Gim> {
    if nu == 0 {
        return Err(Error::InvalidArgument("nullity must be at least 1".into()));
    }
    if !c.is_cartan() {
        return Err(Error::NotFiniteType);
    }
    let s = symmetrizer(c).map_err(|_| Error::NotFiniteType)?;
    if gram(c, &s).definiteness != Definiteness::PositiveDefinite {
        return Err(Error::NotFiniteType);
    }
    let block = c.blocks().into_iter().find(|b| b.contains(&0)).expect("node 1 has a block");
    if block.iter().any(|&j| s.s[j] > s.s[0]) {
        return Err(Error::FirstRootNotLong);
    }
    let b = |i: usize| i.saturating_sub(nu);
    let n = c.n() + nu;
    crate::gim::validate_gim((0..n).map(|i| (0..n).map(|j| c.entry(b(i), b(j))).collect()).collect())
}
