//! Graded dimensions of gim(M), im(M) and Pra(M) up to a height.
//!
//! cargo run --example lie_truncation

use gimforge::gim::validate_gim;
use gimforge::liealg::{present, presentation, DegreeFilter, EnumBounds, Expr, RelationKind};

fn main() -> gimforge::Result<()> {
    let g2 = validate_gim(vec![vec![2, -1], vec![-3, 2]])?;
    for kind in [RelationKind::Gim, RelationKind::Im, RelationKind::Pra] {
        let t = present(&presentation(&g2, kind, EnumBounds::default())?, 5, DegreeFilter::PositiveOnly)?;
        let roots: Vec<_> = t.graded_dims().into_iter().filter(|(_, d)| *d > 0).collect();
        println!("G2 {kind:?}: total {} {:?}", t.total_dim(), roots);
    }

    let m = validate_gim(vec![vec![2, -1, 1], vec![-1, 2, -1], vec![1, -1, 2]])?;
    let x = Expr::bracket(Expr::Gen(0), Expr::bracket(Expr::Gen(1), Expr::Gen(2)));
    for kind in [RelationKind::Gim, RelationKind::Pra] {
        let t = present(&presentation(&m, kind, EnumBounds::default())?, 3, DegreeFilter::PositiveOnly)?;
        let v = t.bracket_eval(&x)?;
        println!("{kind:?}: [e1,[e2,e3]] zero={} coords={:?}", v.is_zero, v.coords);
    }
    Ok(())
}
