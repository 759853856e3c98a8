//! Classify semi-positive GIMs and print the reports.
//!
//! cargo run --example classify_semipositive

use gimforge::classify::classify;
use gimforge::gim::validate_gim;
use gimforge::Error;

fn main() -> gimforge::Result<()> {
    let matrices = [
        vec![vec![2, -1, 1], vec![-1, 2, -1], vec![1, -1, 2]],
        vec![vec![2, -1, 2], vec![-1, 2, -1], vec![2, -1, 2]],
        vec![vec![2; 4]; 4],
        vec![vec![2, -3], vec![-3, 2]],
        vec![vec![2, 0], vec![0, 2]],
    ];
    for rows in matrices {
        let m = validate_gim(rows)?;
        match classify(&m) {
            Ok(r) => {
                print!("{}", r.to_text());
                println!("certificate: {} move(s)\n", r.certificate.len());
            }
            Err(e @ (Error::Indefinite | Error::Decomposable(_))) => println!("{m}: {e}\n"),
            Err(e) => return Err(e),
        }
    }
    Ok(())
}
