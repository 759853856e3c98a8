//! Parse and validate generalized intersection matrices.
//!
//! cargo run --example validate_matrix

use gimforge::gim::validate_gim;
use gimforge::io::parse_matrix;

fn main() -> gimforge::Result<()> {
    let inputs = [
        r#"{"matrix": [[2,-1,1],[-1,2,-1],[1,-1,2]]}"#,
        "# G2\n2\n2 -1\n-3 2",
        r#"{"matrix": [[2,1],[-1,2]]}"#,
        r#"{"matrix": [[2,0],[1,2]]}"#,
        "2\n1 0\n0 2",
    ];
    for src in inputs {
        let rows = parse_matrix(src)?;
        match validate_gim(rows) {
            Ok(m) => println!("ok       {m}  indecomposable={} cartan={}", m.is_indecomposable(), m.is_cartan()),
            Err(e) => println!("rejected {:?}: {e}", src.replace('\n', "; ")),
        }
    }
    Ok(())
}
