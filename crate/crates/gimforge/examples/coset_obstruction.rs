//! Parity test for degrees reachable as brackets of two basis roots.
//!
//! cargo run --example coset_obstruction

use gimforge::gim::validate_gim;
use gimforge::liealg::coset_obstruction;

fn main() -> gimforge::Result<()> {
    let m = validate_gim(vec![vec![2; 4]; 4])?;
    for target in [[1, 1, 1, -1], [1, 1, 0, 0], [2, 0, 0, 0], [1, 0, 1, 2]] {
        let v = coset_obstruction(&m, &target)?;
        println!("{target:?}: coset {:?} obstructed={} pair={:?}", v.target_coset, v.obstructed, v.matching_pair);
    }
    let odd = validate_gim(vec![vec![2, -1], vec![-1, 2]])?;
    println!("odd entries: {}", coset_obstruction(&odd, &[1, 1]).unwrap_err());
    Ok(())
}
