//! Apply braid moves to a prime basis and replay the move sequence.
//!
//! cargo run --example braid_moves

use std::sync::Arc;

use gimforge::braid::{braid_move, gim_of, MoveSequence, PrimeBasis};
use gimforge::gim::{realize, validate_gim};

fn main() -> gimforge::Result<()> {
    let m = validate_gim(vec![vec![2, -1, 1], vec![-1, 2, -1], vec![1, -1, 2]])?;
    let start = PrimeBasis::standard(Arc::new(realize(&m)?));
    let mut basis = start.clone();
    let mut seq = MoveSequence::default();
    for (i, j) in [(0, 2), (1, 0), (0, 1)] {
        basis = braid_move(&basis, i, j)?;
        seq.push(i, j);
        println!("move ({i},{j}) -> {}", gim_of(&basis)?);
    }
    println!("gram determinant kept: {}", basis.gram().det() == start.gram().det());
    let text = seq.to_text();
    println!("sequence: {}", text.trim());
    let replayed = MoveSequence::from_text(&text)?.replay(&start)?;
    println!("replay matches: {}", replayed == basis);
    Ok(())
}
