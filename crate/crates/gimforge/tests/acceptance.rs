use std::collections::{BTreeMap, HashSet};
use std::io::Write;
use std::sync::Arc;
use std::time::{Duration, Instant};

use gimforge::arith::to_i64;
use gimforge::braid::{braid_move, canonical_form, enumerate_equivalents, gim_of, PrimeBasis};
use gimforge::classify::{all_labels, classify, gim_from_toroidal, reduce_positive, template, Family};
use gimforge::gim::{gram, realize, symmetrizer, validate_gim, Definiteness, Gim};
use gimforge::liealg::{coset_obstruction, present, presentation, serre_presentation, DegreeFilter, EnumBounds, Expr, RelationKind};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (u32, Duration, fn() -> Outcome);

fn gim(rows: &[&[i64]]) -> Gim {
    validate_gim(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err(e: gimforge::Error) -> String {
    e.to_string()
}

/// Random valid braid moves followed by a random relabelling.
fn scramble(m: &Gim, moves: usize, rng: &mut ChaCha8Rng) -> Gim {
    let mut basis = PrimeBasis::standard(Arc::new(realize(m).unwrap()));
    let n = m.n();
    let mut done = 0;
    let mut tries = 0;
    while done < moves && tries < 50 {
        tries += 1;
        let (i, j) = (rng.gen_range(0..n), rng.gen_range(0..n));
        if let Ok(b) = braid_move(&basis, i, j) {
            basis = b;
            done += 1;
        }
    }
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    gim_of(&basis).unwrap().permuted(&perm)
}

fn finite_cartans(max_rank: usize) -> Vec<Gim> {
    all_labels(max_rank, 1)
        .into_iter()
        .filter_map(|l| template(&l).ok())
        .filter(|(_, g)| g.definiteness == Definiteness::PositiveDefinite)
        .map(|(m, _)| m)
        .collect()
}

fn criterion_1() -> Outcome {
    let r = classify(&gim(&[&[2, -1, 1], &[-1, 2, -1], &[1, -1, 2]])).map_err(err)?;
    let n = gim(&[&[2, -1, -1], &[-1, 2, 0], &[-1, 0, 2]]);
    ensure(r.label.family == Family::A && r.label.rank == 3 && r.label.r == 1, || format!("label {}", r.label))?;
    ensure(r.reduced_gim().isomorphism_to(&n).is_some(), || format!("reduced {}", r.reduced_gim()))?;
    let start = PrimeBasis::standard(Arc::new(realize(&r.input).map_err(err)?));
    ensure(r.certificate.replay(&start).map_err(err)? == r.reduced, || "certificate does not replay".into())?;
    Ok(format!("{} via {} move(s)", r.label, r.certificate.len()))
}

fn criterion_2() -> Outcome {
    let r = classify(&gim(&[&[2, -1, 2], &[-1, 2, -1], &[2, -1, 2]])).map_err(err)?;
    let want = gim(&[&[2, -1, -1], &[-1, 2, -1], &[-1, -1, 2]]);
    ensure(r.corank == 1, || format!("corank {}", r.corank))?;
    ensure(r.reduced_gim() == want, || format!("reduced {}", r.reduced_gim()))?;
    Ok(format!("corank 1, reduced {}", r.reduced_gim()))
}

fn criterion_3() -> Outcome {
    let mu = vec![1, 1, 1, 0, 0, 0, 0, 1];
    let target = Expr::right_normed(&[0, 1, 2, 7]);
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
    let p = serre_presentation(&validate_gim(a).map_err(err)?).map_err(err)?;
    let t = present(&p, 4, DegreeFilter::Below(mu.clone())).map_err(err)?;
    ensure(!t.bracket_eval(&target).map_err(err)?.is_zero, || "(a) [x1,[x2,[x3,x8]]] vanished".into())?;
    let m = validate_gim(vec![vec![2; 4]; 4]).map_err(err)?;
    let zero_in = |kind| -> Result<bool, String> {
        let p = presentation(&m, kind, EnumBounds::default()).map_err(err)?;
        let t = present(&p, 4, DegreeFilter::Below(mu.clone())).map_err(err)?;
        Ok(t.bracket_eval(&target).map_err(err)?.is_zero)
    };
    ensure(!zero_in(RelationKind::Gim)?, || "(b) bracket vanished in gim".into())?;
    ensure(zero_in(RelationKind::Im)?, || "(c) bracket survived in im".into())?;
    ensure(coset_obstruction(&m, &[1, 1, 1, -1]).map_err(err)?.obstructed, || "(d) no obstruction".into())?;
    Ok("(a) nonzero, (b) nonzero, (c) zero, (d) obstructed".into())
}

fn positive_roots(m: &Gim) -> BTreeMap<Vec<i64>, usize> {
    let s = symmetrizer(m).unwrap();
    let g = gram(m, &s).g;
    let n = m.n();
    let pair = |a: &[i64], b: &[i64]| -> i64 {
        (0..n).map(|i| (0..n).map(|j| a[i] * b[j] * to_i64(&g[(i, j)]).unwrap()).sum::<i64>()).sum()
    };
    let units: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect();
    let mut seen: HashSet<Vec<i64>> = units.iter().cloned().collect();
    let mut stack = units.clone();
    while let Some(x) = stack.pop() {
        for a in &units {
            let c = 2 * pair(&x, a) / pair(a, a);
            let y: Vec<i64> = x.iter().zip(a).map(|(u, v)| u - c * v).collect();
            if seen.insert(y.clone()) {
                stack.push(y);
            }
        }
    }
    seen.into_iter().filter(|r| r.iter().all(|&c| c >= 0)).map(|r| (r, 1)).collect()
}

fn criterion_4() -> Outcome {
    let cases = [
        ("A2", gim(&[&[2, -1], &[-1, 2]]), 3),
        ("A3", gim(&[&[2, -1, 0], &[-1, 2, -1], &[0, -1, 2]]), 6),
        ("B2", gim(&[&[2, -2], &[-1, 2]]), 4),
        ("G2", gim(&[&[2, -1], &[-3, 2]]), 6),
    ];
    let mut totals = Vec::new();
    for (name, m, total) in cases {
        let want = positive_roots(&m);
        let cap = want.keys().map(|r| r.iter().sum::<i64>()).max().unwrap() as u32;
        for kind in [RelationKind::Gim, RelationKind::Pra] {
            let p = presentation(&m, kind, EnumBounds::default()).map_err(err)?;
            let t = present(&p, cap, DegreeFilter::PositiveOnly).map_err(err)?;
            let got: BTreeMap<Vec<i64>, usize> = t.graded_dims().into_iter().filter(|(_, d)| *d > 0).collect();
            ensure(t.complete, || format!("{name} {kind:?}: enumeration incomplete"))?;
            ensure(got == want, || format!("{name} {kind:?}: {got:?}"))?;
            ensure(t.total_dim() == total, || format!("{name} {kind:?}: total {}", t.total_dim()))?;
        }
        totals.push(format!("{name} {total}"));
    }
    Ok(format!("gim and pra agree: {}", totals.join(", ")))
}

fn criterion_5() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let labels = all_labels(5, 3);
    for trial in 0..200 {
        let label = *labels.choose(&mut rng).unwrap();
        let (t, _) = template(&label).map_err(err)?;
        let k = rng.gen_range(0..=6);
        let m = scramble(&t, k, &mut rng);
        let got = classify(&m).map_err(|e| format!("trial {trial} ({label}): {e}"))?.label;
        ensure(got == label, || format!("trial {trial}: {label} classified as {got} from {m}"))?;
    }
    Ok(format!("200/200 over {} labels", labels.len()))
}

fn criterion_6() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let cartans = finite_cartans(6);
    let mut enumerated = 0;
    for trial in 0..100 {
        let c = cartans.choose(&mut rng).unwrap();
        let m = scramble(c, rng.gen_range(1..=6), &mut rng);
        let (red, cert) = reduce_positive(&m).map_err(|e| format!("trial {trial}: {e}"))?;
        ensure(red.is_cartan(), || format!("trial {trial}: {red} is not a Cartan matrix"))?;
        let det = |x: &Gim| gram(x, &symmetrizer(x).unwrap()).g.det();
        ensure(det(&red) == det(&m), || format!("trial {trial}: determinant changed"))?;
        let start = PrimeBasis::standard(Arc::new(realize(&m).map_err(err)?));
        let end = cert.replay(&start).map_err(err)?;
        ensure(gim_of(&end).map_err(err)? == red, || format!("trial {trial}: replay mismatch"))?;
        if m.n() <= 4 && cert.len() <= 3 {
            let en = enumerate_equivalents(&start, cert.len().max(1), 200_000).map_err(err)?;
            let key = canonical_form(&end);
            ensure(en.bases.iter().any(|(b, _)| canonical_form(b) == key), || format!("trial {trial}: not enumerated"))?;
            enumerated += 1;
        }
    }
    Ok(format!("100/100 reduced, {enumerated} also found by enumeration"))
}

fn criterion_7() -> Outcome {
    let labels = all_labels(6, 3);
    for label in &labels {
        let (t, _) = template(label).map_err(err)?;
        let got = classify(&t).map_err(|e| format!("{label}: {e}"))?.label;
        ensure(got == *label, || format!("{label} classified as {got}"))?;
    }
    Ok(format!("{} labels", labels.len()))
}

fn criterion_8() -> Outcome {
    let mut count = 0;
    for c in finite_cartans(8) {
        let s = symmetrizer(&c).unwrap();
        let long = *s.s.iter().max().unwrap();
        for first in (0..c.n()).filter(|&i| s.s[i] == long) {
            let mut perm: Vec<usize> = (0..c.n()).collect();
            perm.swap(0, first);
            let c = c.permuted(&perm);
            let t = gim_from_toroidal(&c, 1).map_err(|e| format!("{c}: {e}"))?;
            let g = gram(&t, &symmetrizer(&t).map_err(err)?);
            ensure(g.corank == 1, || format!("{t}: corank {}", g.corank))?;
            let r = classify(&t).map_err(|e| format!("{t}: {e}"))?;
            ensure(r.affine.is_some(), || format!("{t}: {} is not reported affine", r.label))?;
            count += 1;
        }
    }
    Ok(format!("{count} toroidal matrices, all affine"))
}

#[test]
fn acceptance_criteria() {
    let criteria: [Criterion; 8] = [
        (1, Duration::from_secs(1), criterion_1),
        (2, Duration::from_secs(1), criterion_2),
        (3, Duration::from_secs(120), criterion_3),
        (4, Duration::from_secs(60), criterion_4),
        (5, Duration::from_secs(300), criterion_5),
        (6, Duration::from_secs(300), criterion_6),
        (7, Duration::from_secs(60), criterion_7),
        (8, Duration::from_secs(30), criterion_8),
    ];
    let mut failed = Vec::new();
    let mut stderr = std::io::stderr();
    for (k, limit, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let took = start.elapsed();
        let (ok, detail) = match outcome {
            Ok(d) if took <= limit => (true, d),
            Ok(d) => (false, format!("{d}; took {took:.2?}, limit {limit:?}")),
            Err(e) => (false, e),
        };
        writeln!(stderr, "criterion {k}: {} ({took:.2?}) {detail}", if ok { "PASS" } else { "FAIL" }).unwrap();
        if !ok {
            failed.push(k);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
