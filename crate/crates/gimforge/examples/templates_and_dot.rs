//! Template matrices for labels and their Graphviz diagrams.
//!
//! cargo run --example templates_and_dot

use gimforge::classify::{all_labels, template, to_dot, ModifiedDynkinType};

fn main() -> gimforge::Result<()> {
    for name in ["A_3(1)", "G_2(1,1)", "B_3(2,1)", "BC_2(1,1,1)"] {
        let label: ModifiedDynkinType = name.parse()?;
        let (m, g) = template(&label)?;
        println!("{label}: {m}  {} corank {}", g.definiteness, g.corank);
    }
    println!("{} labels up to rank 3 with multiplicities up to 2", all_labels(3, 2).len());
    println!("{}", to_dot(&"BC_2(1,1,1)".parse()?));
    Ok(())
}
