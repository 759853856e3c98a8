//! A graded presentation read from JSON.
//!
//! cargo run --example custom_presentation

use gimforge::liealg::{present, DegreeFilter, GradedPresentation};
use serde_json::json;

fn main() -> gimforge::Result<()> {
    // Positive part of affine A1: two generators, cubic Serre relations.
    let src = json!({
        "generators": [{"name": "x", "degree": [1, 0]}, {"name": "y", "degree": [0, 1]}],
        "relations": [{"ad": ["x", 3, "y"]}, {"ad": ["y", 3, "x"]}],
        "degree": 6
    });
    let p = GradedPresentation::from_json(&src)?;
    let t = present(&p, p.cap.unwrap_or(6), DegreeFilter::All)?;
    println!("heights {:?}", t.height_dims());
    for (deg, dim) in t.graded_dims() {
        if dim > 0 {
            println!("  {deg:?}: {dim}");
        }
    }
    println!("{}", t.dims_json());
    Ok(())
}
