//! Text and JSON renderings of a classification report.

use serde_json::{json, Value};

use super::ClassificationReport;
use crate::braid::MoveSequence;

fn moves_json(seq: &MoveSequence) -> Value {
    Value::Array(seq.moves.iter().enumerate().map(|(k, m)| json!([k + 1, m.i + 1, m.j + 1])).collect())
}

impl ClassificationReport {
    pub fn to_json(&self) -> Value {
        json!({
            "input": self.input.rows(),
            "definiteness": self.definiteness.to_string(),
            "corank": self.corank,
            "label": self.label.to_string(),
            "affine": self.affine,
            "reduced_gim": self.reduced_gim().rows(),
            "reduced_basis": self.reduced.to_json(),
            "certificate": moves_json(&self.certificate),
            "normal_form_gim": self.normal_gim().rows(),
            "normal_form_basis": self.normal_form.to_json(),
            "normal_form_certificate": moves_json(&self.normal_certificate),
            "nodes": self.nodes.iter().map(|k| k + 1).collect::<Vec<_>>(),
            "complete": self.complete,
        })
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("type: {}\n", self.label);
        if let Some(a) = &self.affine {
            out.push_str(&format!("affine: {a}\n"));
        }
        out.push_str(&format!("definiteness: {}\ncorank: {}\n", self.definiteness, self.corank));
        out.push_str(&format!("reduced matrix:\n{}", grid(&self.reduced_gim())));
        out.push_str(&format!("certificate ({} moves):\n{}", self.certificate.len(), self.certificate.to_text()));
        out.push_str(&format!("normal form matrix:\n{}", grid(&self.normal_gim())));
        let nodes: Vec<String> = self.nodes.iter().map(|k| format!("α{}", k + 1)).collect();
        out.push_str(&format!("nodes: {}\ncomplete: {}\n", nodes.join(" "), self.complete));
        out
    }
}

fn grid(m: &crate::gim::Gim) -> String {
    let cells: Vec<Vec<String>> = m.rows().iter().map(|r| r.iter().map(i64::to_string).collect()).collect();
    let w = cells.iter().flatten().map(String::len).max().unwrap_or(1);
    cells.iter().map(|r| r.iter().map(|c| format!("{c:>w$}")).collect::<Vec<_>>().join(" ") + "\n").collect()
}
