//! Run the built-in checks against the golden template table.
//!
//! cargo run --example verify_examples

use gimforge::verify::{golden_templates, verify_examples};

fn main() {
    let results = verify_examples(&golden_templates(), 0);
    for r in &results {
        println!("{r}");
    }
    let failed = results.iter().filter(|r| !r.passed).count();
    println!("{} checks, {failed} failed", results.len());
}
