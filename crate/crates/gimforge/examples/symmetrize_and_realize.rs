//! Symmetrizer, Gram form, definiteness and the nondegenerate realization.
//!
//! cargo run --example symmetrize_and_realize

use gimforge::gim::{cartan_datum, gram, realize, symmetrizer, validate_gim};

fn main() -> gimforge::Result<()> {
    let matrices = [
        vec![vec![2, -1], vec![-3, 2]],
        vec![vec![2, -1, 2], vec![-1, 2, -1], vec![2, -1, 2]],
        vec![vec![2, -3], vec![-3, 2]],
    ];
    for rows in matrices {
        let m = validate_gim(rows)?;
        let s = symmetrizer(&m)?;
        let g = gram(&m, &s);
        let space = realize(&m)?;
        println!("M = {m}");
        println!("  symmetrizer {:?}", s.s);
        println!("  gram form {}, corank {}", g.definiteness, g.corank);
        println!("  realized in dimension {}, form det {}", space.dim(), space.form.det());
        println!("  simple functionals {:?}", cartan_datum(&m)?.alpha);
    }
    Ok(())
}
