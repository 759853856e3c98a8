//! Breadth-first closure of a basis under braid moves.
//!
//! cargo run --example enumerate_bases

use std::sync::Arc;

use gimforge::braid::{dedup_by_gim, enumerate_equivalents, gim_of, PrimeBasis};
use gimforge::gim::{realize, validate_gim};

fn main() -> gimforge::Result<()> {
    let m = validate_gim(vec![vec![2, -1], vec![-1, 2]])?;
    let start = PrimeBasis::standard(Arc::new(realize(&m)?));
    let en = enumerate_equivalents(&start, 6, 1000)?;
    println!("{} bases, complete={}", en.bases.len(), en.complete);
    for idx in dedup_by_gim(&en.bases) {
        let (b, seq) = &en.bases[idx];
        println!("  {}  via {} move(s)", gim_of(b)?, seq.len());
    }
    let affine = validate_gim(vec![vec![2, -2], vec![-2, 2]])?;
    let en = enumerate_equivalents(&PrimeBasis::standard(Arc::new(realize(&affine)?)), 4, 200)?;
    println!("affine A1: {} bases within depth 4, complete={}", en.bases.len(), en.complete);
    Ok(())
}
