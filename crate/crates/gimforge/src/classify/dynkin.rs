//! Modified Dynkin labels, their node diagrams and template matrices.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::arith::Q;
use crate::error::{Error, Result};
use crate::gim::{gram_from_form, validate_gim, Gim, GramMatrix};
use crate::linalg::QMatrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E6,
    E7,
    E8,
    F4,
    G2,
    /// Rank one with two root lengths, `A_1(r,s)`.
    A1,
    BC,
}

/// A label from the list of modified Dynkin diagrams, e.g. `B_3(2,1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ModifiedDynkinType {
    pub family: Family,
    pub rank: usize,
    pub r: usize,
    pub s: Option<usize>,
    pub t: Option<usize>,
}

/// Nodes and bonds of a diagram, with Gram values scaled so the shortest
/// root has self-pairing 2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NodeDiagram {
    pub self_pairing: Vec<i64>,
    pub bonds: Vec<(usize, usize, i64)>,
    /// `(node, multiplicity)` for the nodes that may carry copies.
    pub multiplicities: Vec<(usize, usize)>,
}

impl NodeDiagram {
    pub fn len(&self) -> usize {
        self.self_pairing.len()
    }

    pub fn is_empty(&self) -> bool {
        self.self_pairing.is_empty()
    }

    pub fn multiplicity(&self, node: usize) -> usize {
        self.multiplicities.iter().find(|(k, _)| *k == node).map_or(1, |&(_, m)| m)
    }

    pub fn pairing(&self, a: usize, b: usize) -> i64 {
        if a == b {
            return self.self_pairing[a];
        }
        self.bonds
            .iter()
            .find(|&&(x, y, _)| (x, y) == (a, b) || (x, y) == (b, a))
            .map_or(0, |&(_, _, v)| v)
    }
}

fn path_bonds(nodes: std::ops::Range<usize>, value: impl Fn(usize) -> i64) -> Vec<(usize, usize, i64)> {
    nodes.map(|k| (k, k + 1, value(k))).collect()
}

impl ModifiedDynkinType {
    pub fn new(family: Family, rank: usize, r: usize, s: Option<usize>, t: Option<usize>) -> Result<Self> {
        let label = ModifiedDynkinType { family, rank, r, s, t };
        label.check()?;
        Ok(label)
    }

    pub fn a(rank: usize, r: usize) -> Self {
        ModifiedDynkinType { family: Family::A, rank, r, s: None, t: None }
    }

    fn check(&self) -> Result<()> {
        use Family::*;
        let l = self.rank;
        let rank_ok = match self.family {
            A => l >= 1,
            B => l >= 2,
            C => l >= 3,
            D => l >= 4,
            E6 => l == 6,
            E7 => l == 7,
            E8 => l == 8,
            F4 => l == 4,
            G2 => l == 2,
            A1 => l == 1,
            BC => l >= 2,
        };
        let shape_ok = match self.family {
            A | D | E6 | E7 | E8 => self.s.is_none() && self.t.is_none(),
            B | C | F4 | G2 | A1 => self.s.is_some() && self.t.is_none(),
            BC => self.s.is_some() && self.t.is_some(),
        };
        let positive = self.r >= 1 && self.s.is_none_or(|s| s >= 1) && self.t.is_none_or(|t| t >= 1);
        if rank_ok && shape_ok && positive {
            Ok(())
        } else {
            Err(Error::IllegalLabel(self.to_string()))
        }
    }

    /// Node diagram in the numbering of the modified Dynkin list.
    pub fn diagram(&self) -> NodeDiagram {
        use Family::*;
        let l = self.rank;
        let (r, s, t) = (self.r, self.s.unwrap_or(1), self.t.unwrap_or(1));
        match self.family {
            A => NodeDiagram {
                self_pairing: vec![2; l],
                bonds: path_bonds(0..l - 1, |_| -1),
                multiplicities: vec![(0, r)],
            },
            B => {
                let mut sp = vec![4; l];
                sp[l - 1] = 2;
                NodeDiagram { self_pairing: sp, bonds: path_bonds(0..l - 1, |_| -2), multiplicities: vec![(0, r), (l - 1, s)] }
            }
            C => {
                let mut sp = vec![2; l];
                sp[0] = 4;
                NodeDiagram {
                    self_pairing: sp,
                    bonds: path_bonds(0..l - 1, |k| if k == 0 { -2 } else { -1 }),
                    multiplicities: vec![(0, r), (l - 1, s)],
                }
            }
            D => {
                let mut bonds = path_bonds(0..l - 2, |_| -1);
                bonds.push((l - 3, l - 1, -1));
                NodeDiagram { self_pairing: vec![2; l], bonds, multiplicities: vec![(0, r)] }
            }
            E6 | E7 | E8 => {
                let mut bonds = vec![(0, 2, -1), (2, 3, -1), (3, 1, -1)];
                bonds.extend(path_bonds(3..l - 1, |_| -1));
                NodeDiagram { self_pairing: vec![2; l], bonds, multiplicities: vec![(0, r)] }
            }
            F4 => NodeDiagram {
                self_pairing: vec![4, 4, 2, 2],
                bonds: vec![(0, 1, -2), (1, 2, -2), (2, 3, -1)],
                multiplicities: vec![(0, r), (3, s)],
            },
            G2 => NodeDiagram { self_pairing: vec![6, 2], bonds: vec![(0, 1, -3)], multiplicities: vec![(0, r), (1, s)] },
            A1 => NodeDiagram { self_pairing: vec![8, 2], bonds: vec![(0, 1, -4)], multiplicities: vec![(0, r), (1, s)] },
            BC => {
                let mut sp = vec![4; l + 1];
                sp[0] = 8;
                sp[l] = 2;
                let mut bonds = vec![(0, 1, -4)];
                bonds.extend(path_bonds(1..l, |_| -2));
                NodeDiagram { self_pairing: sp, bonds, multiplicities: vec![(0, r), (1, s), (l, t)] }
            }
        }
    }

    /// Total size of the template matrix.
    pub fn size(&self) -> usize {
        let d = self.diagram();
        (0..d.len()).map(|k| d.multiplicity(k)).sum()
    }

    /// Figure node of every template slot, copies kept adjacent.
    pub fn layout(&self) -> Vec<usize> {
        let d = self.diagram();
        (0..d.len()).flat_map(|k| std::iter::repeat_n(k, d.multiplicity(k))).collect()
    }

    /// Name of the affine algebra whose diagram matches a corank-one label.
    pub fn affine_name(&self) -> Option<String> {
        use Family::*;
        let l = self.rank;
        let name = match (self.family, self.r, self.s, self.t) {
            (A, 2, None, None) => format!("A_{l}^(1)"),
            (D, 2, None, None) => format!("D_{l}^(1)"),
            (E6, 2, None, None) => "E_6^(1)".into(),
            (E7, 2, None, None) => "E_7^(1)".into(),
            (E8, 2, None, None) => "E_8^(1)".into(),
            (B, 2, Some(1), None) => format!("B_{l}^(1)"),
            (B, 1, Some(2), None) => format!("D_{}^(2)", l + 1),
            (C, 2, Some(1), None) => format!("C_{l}^(1)"),
            (C, 1, Some(2), None) => format!("A_{}^(2)", 2 * l - 1),
            (F4, 2, Some(1), None) => "F_4^(1)".into(),
            (F4, 1, Some(2), None) => "E_6^(2)".into(),
            (G2, 2, Some(1), None) => "G_2^(1)".into(),
            (G2, 1, Some(2), None) => "D_4^(3)".into(),
            (A1, 1, Some(1), None) => "A_2^(2)".into(),
            (BC, 1, Some(1), Some(1)) => format!("A_{}^(2)", 2 * l),
            _ => return None,
        };
        Some(name)
    }
}

impl fmt::Display for ModifiedDynkinType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let head = match self.family {
            Family::A | Family::A1 => format!("A_{}", self.rank),
            Family::B => format!("B_{}", self.rank),
            Family::C => format!("C_{}", self.rank),
            Family::D => format!("D_{}", self.rank),
            Family::E6 => "E_6".into(),
            Family::E7 => "E_7".into(),
            Family::E8 => "E_8".into(),
            Family::F4 => "F_4".into(),
            Family::G2 => "G_2".into(),
            Family::BC => format!("BC_{}", self.rank),
        };
        write!(f, "{head}({}", self.r)?;
        for m in [self.s, self.t].into_iter().flatten() {
            write!(f, ",{m}")?;
        }
        write!(f, ")")
    }
}

impl FromStr for ModifiedDynkinType {
    type Err = Error;

    fn from_str(src: &str) -> Result<Self> {
        let bad = || Error::IllegalLabel(src.to_string());
        let (head, rest) = src.trim().split_once('(').ok_or_else(bad)?;
        let args = rest.strip_suffix(')').ok_or_else(bad)?;
        let mults = args
            .split(',')
            .map(|x| x.trim().parse::<usize>().map_err(|_| bad()))
            .collect::<Result<Vec<_>>>()?;
        let (letters, rank) = head.split_once('_').ok_or_else(bad)?;
        let rank: usize = rank.parse().map_err(|_| bad())?;
        let family = match (letters, rank, mults.len()) {
            ("A", 1, 2) => Family::A1,
            ("A", _, _) => Family::A,
            ("B", 2, _) => Family::B,
            ("B", _, _) => Family::B,
            ("C", 2, _) => Family::B,
            ("C", _, _) => Family::C,
            ("D", _, _) => Family::D,
            ("E", 6, _) => Family::E6,
            ("E", 7, _) => Family::E7,
            ("E", 8, _) => Family::E8,
            ("F", _, _) => Family::F4,
            ("G", _, _) => Family::G2,
            ("BC", _, _) => Family::BC,
            _ => return Err(bad()),
        };
        let label = ModifiedDynkinType {
            family,
            rank,
            r: mults[0],
            s: mults.get(1).copied(),
            t: mults.get(2).copied(),
        };
        label.check()?;
        Ok(label)
    }
}

/// Template GIM and Gram matrix of a label, slots ordered by [`ModifiedDynkinType::layout`].
pub fn template(label: &ModifiedDynkinType) -> Result<(Gim, GramMatrix)> {
    label.check()?;
    let d = label.diagram();
    let layout = label.layout();
    let n = layout.len();
    let g: Vec<Vec<i64>> = layout.iter().map(|&a| layout.iter().map(|&b| d.pairing(a, b)).collect()).collect();
    let m = (0..n).map(|i| (0..n).map(|j| 2 * g[i][j] / g[i][i]).collect()).collect();
    Ok((validate_gim(m)?, gram_from_form(QMatrix::from_i64(&g))))
}

/// Every legal label with rank at most `max_rank` and multiplicities at most `max_mult`.
pub fn all_labels(max_rank: usize, max_mult: usize) -> Vec<ModifiedDynkinType> {
    use Family::*;
    let mut out = Vec::new();
    let ms = 1..=max_mult;
    for family in [A, B, C, D, E6, E7, E8, F4, G2, A1, BC] {
        for rank in 1..=max_rank {
            for r in ms.clone() {
                for s in ms.clone() {
                    for t in ms.clone() {
                        let (s, t) = match family {
                            A | D | E6 | E7 | E8 => (None, None),
                            BC => (Some(s), Some(t)),
                            _ => (Some(s), None),
                        };
                        if let Ok(label) = ModifiedDynkinType::new(family, rank, r, s, t) {
                            if !out.contains(&label) {
                                out.push(label);
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

/// Identifies a connected simple system from its Cartan matrix and root
/// lengths. Returns the family and, for every figure node, the position of
/// the system root sitting there.
pub(crate) fn identify(cartan: &[Vec<i64>], lengths: &[Q]) -> Result<(Family, Vec<usize>)> {
    let l = cartan.len();
    let adj: Vec<Vec<usize>> = (0..l).map(|i| (0..l).filter(|&j| j != i && cartan[i][j] != 0).collect()).collect();
    let edges: usize = adj.iter().map(Vec::len).sum::<usize>() / 2;
    let fail = |why: &str| Error::NoTemplateMatch(format!("simple system {cartan:?}: {why}"));
    if edges + 1 != l {
        return Err(fail("not a tree"));
    }
    if l == 1 {
        return Ok((Family::A, vec![0]));
    }
    let walk = |start: usize| -> Vec<usize> {
        let mut order = vec![start];
        let mut prev = usize::MAX;
        let mut cur = start;
        while let Some(&next) = adj[cur].iter().find(|&&x| x != prev && !order.contains(&x)) {
            order.push(next);
            prev = cur;
            cur = next;
        }
        order
    };
    let ends: Vec<usize> = (0..l).filter(|&i| adj[i].len() == 1).collect();
    let long = lengths.iter().max().expect("nonempty").clone();
    let is_long = |i: usize| lengths[i] == long;
    let n_long = (0..l).filter(|&i| is_long(i)).count();

    if n_long == l {
        let branches: Vec<usize> = (0..l).filter(|&i| adj[i].len() >= 3).collect();
        match branches.as_slice() {
            [] => return Ok((Family::A, walk(ends[0]))),
            [b] if adj[*b].len() == 3 => {
                let b = *b;
                let mut arms: Vec<Vec<usize>> = adj[b]
                    .iter()
                    .map(|&first| {
                        let mut arm = vec![first];
                        let mut prev = b;
                        let mut cur = first;
                        while let Some(&next) = adj[cur].iter().find(|&&x| x != prev) {
                            arm.push(next);
                            prev = cur;
                            cur = next;
                        }
                        arm
                    })
                    .collect();
                arms.sort_by_key(|a| (a.len(), a[a.len() - 1]));
                let lens: Vec<usize> = arms.iter().map(Vec::len).collect();
                match lens.as_slice() {
                    [1, 1, _] => {
                        let mut order: Vec<usize> = arms[2].iter().rev().copied().collect();
                        order.push(b);
                        order.push(arms[0][0]);
                        order.push(arms[1][0]);
                        return Ok((Family::D, order));
                    }
                    [1, 2, k @ 2..=4] => {
                        let family = [Family::E6, Family::E7, Family::E8][k - 2];
                        let mut order = vec![arms[1][1], arms[0][0], arms[1][0], b];
                        order.extend(&arms[2]);
                        return Ok((family, order));
                    }
                    _ => return Err(fail("unknown branch shape")),
                }
            }
            _ => return Err(fail("more than one branch node")),
        }
    }

    if ends.len() != 2 {
        return Err(fail("two root lengths on a branched diagram"));
    }
    let short = lengths.iter().min().expect("nonempty").clone();
    let ratio = &long / &short;
    if l == 2 {
        let order = if is_long(0) { vec![0, 1] } else { vec![1, 0] };
        return match ratio.to_integer().try_into() {
            Ok(2i64) => Ok((Family::B, order)),
            Ok(3i64) => Ok((Family::G2, order)),
            _ => Err(fail("unsupported length ratio")),
        };
    }
    if ratio != Q::from_integer(2.into()) {
        return Err(fail("unsupported length ratio"));
    }
    let n_short = l - n_long;
    let long_end = ends.iter().copied().find(|&e| is_long(e));
    match (n_long, n_short, long_end) {
        (_, 1, Some(e)) => Ok((Family::B, walk(e))),
        (1, _, Some(e)) => Ok((Family::C, walk(e))),
        (2, 2, Some(e)) if l == 4 => Ok((Family::F4, walk(e))),
        _ => Err(fail("unknown two-length diagram")),
    }
}

/// Graphviz rendering: copies shown as `×r`, multiple bonds as parallel
/// strokes pointing from the longer to the shorter root.
pub fn to_dot(label: &ModifiedDynkinType) -> String {
    let d = label.diagram();
    let mut out = format!("digraph \"{label}\" {{\n  rankdir=LR;\n  node [shape=circle];\n");
    for k in 0..d.len() {
        let m = d.multiplicity(k);
        let text = if m > 1 { format!("α{}\\n×{m}", k + 1) } else { format!("α{}", k + 1) };
        out.push_str(&format!("  n{} [label=\"{text}\"];\n", k + 1));
    }
    for &(a, b, _) in &d.bonds {
        let (la, lb) = (d.self_pairing[a], d.self_pairing[b]);
        let strokes = (la.max(lb) / la.min(lb)) as usize;
        let (from, to) = if la >= lb { (a, b) } else { (b, a) };
        let color = vec!["black"; strokes].join(":invis:");
        let dir = if la == lb { "none" } else { "forward" };
        out.push_str(&format!("  n{} -> n{} [dir={dir}, color=\"{color}\"];\n", from + 1, to + 1));
    }
    out.push_str("}\n");
    out
}
