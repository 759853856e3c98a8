//! GIMs of toroidal type from finite Cartan matrices.
//!
//! cargo run --example toroidal

use gimforge::classify::{classify, gim_from_toroidal};
use gimforge::gim::validate_gim;

fn main() -> gimforge::Result<()> {
    let cartans = [
        ("A2", vec![vec![2, -1], vec![-1, 2]]),
        ("B2", vec![vec![2, -1], vec![-2, 2]]),
        ("G2", vec![vec![2, -1], vec![-3, 2]]),
    ];
    for (name, rows) in cartans {
        let c = validate_gim(rows)?;
        for nu in 1..=2 {
            let m = gim_from_toroidal(&c, nu)?;
            let r = classify(&m)?;
            println!("{name} nu={nu}: {m} -> {} corank {}", r.label, r.corank);
        }
    }
    Ok(())
}
