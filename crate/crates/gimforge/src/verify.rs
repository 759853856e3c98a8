//! End-to-end checks of the worked examples against a golden table.

use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::braid::{braid_move, gim_of, PrimeBasis};
use crate::classify::{all_labels, classify, template, ModifiedDynkinType};
use crate::gim::{realize, validate_gim, Gim};
use crate::liealg::{coset_obstruction, present, presentation, serre_presentation, DegreeFilter, EnumBounds, Expr, RelationKind};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GoldenTemplate {
    pub label: &'static str,
    pub matrix: Vec<Vec<i64>>,
}

pub fn golden_templates() -> Vec<GoldenTemplate> {
    vec![
        GoldenTemplate { label: "A_3(1)", matrix: vec![vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 2]] },
        GoldenTemplate { label: "D_4(1)", matrix: vec![vec![2, -1, 0, 0], vec![-1, 2, -1, -1], vec![0, -1, 2, 0], vec![0, -1, 0, 2]] },
        GoldenTemplate { label: "G_2(1,1)", matrix: vec![vec![2, -1], vec![-3, 2]] },
        GoldenTemplate {
            label: "B_3(2,1)",
            matrix: vec![vec![2, 2, -1, 0], vec![2, 2, -1, 0], vec![-1, -1, 2, -1], vec![0, 0, -2, 2]],
        },
        GoldenTemplate { label: "A_1(1,2)", matrix: vec![vec![2, -1, -1], vec![-4, 2, 2], vec![-4, 2, 2]] },
        GoldenTemplate { label: "BC_2(1,1,1)", matrix: vec![vec![2, -1, 0], vec![-2, 2, -1], vec![0, -2, 2]] },
    ]
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl CheckResult {
    fn new(name: &str, passed: bool, detail: impl Into<String>) -> Self {
        CheckResult { name: name.into(), passed, detail: detail.into() }
    }
}

impl std::fmt::Display for CheckResult {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} {}", if self.passed { "PASS" } else { "FAIL" }, self.name)?;
        if !self.detail.is_empty() {
            write!(f, ": {}", self.detail)?;
        }
        Ok(())
    }
}

fn gim(rows: &[&[i64]]) -> Gim {
    validate_gim(rows.iter().map(|r| r.to_vec()).collect()).expect("built-in matrix")
}

fn check(name: &str, f: impl FnOnce() -> crate::Result<(bool, String)>) -> CheckResult {
    match f() {
        Ok((ok, detail)) => CheckResult::new(name, ok, detail),
        Err(e) => CheckResult::new(name, false, format!("error: {e}")),
    }
}

fn mixed_sign() -> CheckResult {
    check("mixed-sign rank 3 reduces to type A_3", || {
        let r = classify(&gim(&[&[2, -1, 1], &[-1, 2, -1], &[1, -1, 2]]))?;
        let n = gim(&[&[2, -1, -1], &[-1, 2, 0], &[-1, 0, 2]]);
        let ok = r.label.to_string() == "A_3(1)" && r.reduced_gim().isomorphism_to(&n).is_some() && r.complete;
        Ok((ok, format!("label {}, reduced {}", r.label, r.reduced_gim())))
    })
}

fn semidefinite() -> CheckResult {
    check("corank-1 matrix reduces to affine A_2", || {
        let r = classify(&gim(&[&[2, -1, 2], &[-1, 2, -1], &[2, -1, 2]]))?;
        let want = gim(&[&[2, -1, -1], &[-1, 2, -1], &[-1, -1, 2]]);
        let ok = r.corank == 1 && r.reduced_gim() == want && r.affine.as_deref() == Some("A_2^(1)");
        Ok((ok, format!("corank {}, reduced {}, label {}", r.corank, r.reduced_gim(), r.label)))
    })
}

fn all_twos() -> Vec<CheckResult> {
    let m = validate_gim(vec![vec![2; 4]; 4]).expect("all-2s matrix");
    let target = Expr::right_normed(&[0, 1, 2, 7]);
    let below = DegreeFilter::Below(vec![1, 1, 1, 0, 0, 0, 0, 1]);
    let bracket = |kind: RelationKind| -> crate::Result<bool> {
        let t = present(&presentation(&m, kind, EnumBounds::default())?, 4, below.clone())?;
        Ok(t.bracket_eval(&target)?.is_zero)
    };
    vec![
        check("rank-8 Serre algebra: [x1,[x2,[x3,x8]]] nonzero", || {
            let mut a = vec![vec![0i64; 8]; 8];
            for i in 0..8 {
                a[i][i] = 2;
            }
            for i in 0..4 {
                for j in 4..8 {
                    if j - 4 != i {
                        a[i][j] = -2;
                        a[j][i] = -2;
                    }
                }
            }
            let p = serre_presentation(&validate_gim(a)?)?;
            let t = present(&p, 4, DegreeFilter::Below(vec![1, 1, 1, 0, 0, 0, 0, 1]))?;
            let zero = t.bracket_eval(&target)?.is_zero;
            Ok((!zero, String::new()))
        }),
        check("all-2s: [e1,[e2,[e3,f4]]] nonzero in gim", || Ok((!bracket(RelationKind::Gim)?, String::new()))),
        check("all-2s: [e1,[e2,[e3,f4]]] zero in im", || Ok((bracket(RelationKind::Im)?, String::new()))),
        check("all-2s: coset obstruction for a1+a2+a3-a4", || {
            let v = coset_obstruction(&m, &[1, 1, 1, -1])?;
            Ok((v.obstructed, format!("coset {:?}", v.target_coset)))
        }),
    ]
}

fn templates(table: &[GoldenTemplate]) -> Vec<CheckResult> {
    table
        .iter()
        .map(|g| {
            check(&format!("template {}", g.label), || {
                let label: ModifiedDynkinType = g.label.parse()?;
                let (t, _) = template(&label)?;
                if t.rows() != g.matrix.as_slice() {
                    let want = validate_gim(g.matrix.clone()).map(|x| x.to_string()).unwrap_or_else(|e| e.to_string());
                    return Ok((false, format!("expected {want}, got {t}")));
                }
                let r = classify(&t)?;
                Ok((r.label == label, format!("classified as {}", r.label)))
            })
        })
        .collect()
}

/// Random braid moves on random templates must keep the label.
fn random_moves(seed: u64, trials: usize) -> CheckResult {
    check(&format!("random braid moves keep the label ({trials} trials, seed {seed})"), || {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let labels = all_labels(4, 2);
        for _ in 0..trials {
            let label = *labels.choose(&mut rng).expect("labels");
            let (t, _) = template(&label)?;
            let mut basis = PrimeBasis::standard(Arc::new(realize(&t)?));
            for _ in 0..rng.gen_range(0..=6) {
                let (i, j) = (rng.gen_range(0..t.n()), rng.gen_range(0..t.n()));
                if let Ok(b) = braid_move(&basis, i, j) {
                    basis = b;
                }
            }
            let mut perm: Vec<usize> = (0..t.n()).collect();
            perm.shuffle(&mut rng);
            let moved = gim_of(&basis)?.permuted(&perm);
            let got = classify(&moved)?.label;
            if got != label {
                return Ok((false, format!("{label} came back as {got} from {moved}")));
            }
        }
        Ok((true, String::new()))
    })
}

/// Runs every check against the given golden table.
pub fn verify_examples(table: &[GoldenTemplate], seed: u64) -> Vec<CheckResult> {
    let mut out = vec![mixed_sign(), semidefinite()];
    out.extend(all_twos());
    out.extend(templates(table));
    out.push(random_moves(seed, 20));
    out
}
