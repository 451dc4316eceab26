//! Browser bindings. Every export takes plain strings and returns a JSON
//! string, so the page needs no generated type glue beyond the functions
//! themselves.

use std::str::FromStr;

use cubic_brauer::classifier::{classify, Ambient, CubeClassVector, SurfaceInput};
use cubic_brauer::geometry::{pic_dictionary, IncidenceGraph, LineLabel};
use cubic_brauer::suite::{run_check, SuiteInput, CHECK_NAMES};
use num_rational::BigRational;
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

fn error(message: impl ToString) -> Value {
    json!({ "error": message.to_string() })
}

fn parse_rational(name: &str, text: &str) -> Result<BigRational, Value> {
    BigRational::from_str(text.trim()).map_err(|_| error(format!("{name}: `{text}` is not a rational number")))
}

fn parse_class(name: &str, text: &str, ambient: Ambient) -> Result<CubeClassVector, Value> {
    let coords = text
        .split(',')
        .filter(|p| !p.trim().is_empty())
        .map(|p| p.trim().parse::<u8>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|_| error(format!("{name}: expected comma-separated digits 0, 1, 2")))?;
    CubeClassVector::new(coords, ambient).map_err(|e| error(format!("{name}: {e}")))
}

fn finish(input: Result<SurfaceInput, Value>) -> Value {
    match input.and_then(|i| classify(&i).map_err(error)) {
        Ok(c) => c.to_json(),
        Err(e) => e,
    }
}

pub fn classify_coefficients_json(a: &str, b: &str, c: &str, d: &str) -> Value {
    let input = (|| {
        let [a, b, c, d] = [("a", a), ("b", b), ("c", c), ("d", d)].map(|(n, v)| parse_rational(n, v));
        SurfaceInput::rational(a?, b?, c?, d?).map_err(error)
    })();
    finish(input)
}

pub fn classify_classes_json(lambda: &str, mu: &str, nu: &str, dim: Option<usize>) -> Value {
    let ambient = dim.map_or(Ambient::Unbounded, Ambient::Finite);
    let input = (|| {
        Ok(SurfaceInput::classes(
            parse_class("λ", lambda, ambient)?,
            parse_class("μ", mu, ambient)?,
            parse_class("ν", nu, ambient)?,
        ))
    })();
    finish(input)
}

/// Nodes (with family and index for layout), edges and Picard classes.
pub fn incidence_graph_json() -> Value {
    let graph = IncidenceGraph::get();
    let labels = LineLabel::all();
    let nodes: Vec<Value> = labels
        .iter()
        .map(|l| json!({ "key": l.key(), "label": l.to_string(), "family": format!("{:?}", l.family), "index": l.index }))
        .collect();
    let mut edges = Vec::new();
    for (i, &a) in labels.iter().enumerate() {
        for &b in &labels[i + 1..] {
            if graph.adjacent(a, b) {
                edges.push(json!([a.key(), b.key()]));
            }
        }
    }
    let classes = pic_dictionary().map(|d| json!(d)).unwrap_or_else(error);
    json!({ "nodes": nodes, "edges": edges, "pic_classes": classes })
}

pub fn verify_json(name: &str) -> Value {
    match run_check(name, &SuiteInput::default()) {
        Some(report) => serde_json::to_value(report).expect("plain data"),
        None => error(format!("unknown check `{name}`")),
    }
}

#[wasm_bindgen]
pub fn classify_coefficients(a: &str, b: &str, c: &str, d: &str) -> String {
    classify_coefficients_json(a, b, c, d).to_string()
}

/// `dim` of 0 means the ambient dimension is unbounded.
#[wasm_bindgen]
pub fn classify_classes(lambda: &str, mu: &str, nu: &str, dim: u32) -> String {
    classify_classes_json(lambda, mu, nu, (dim > 0).then_some(dim as usize)).to_string()
}

#[wasm_bindgen]
pub fn incidence_graph() -> String {
    incidence_graph_json().to_string()
}

#[wasm_bindgen]
pub fn check_names() -> String {
    json!(CHECK_NAMES).to_string()
}

/// Runs one check of the battery; the page calls this once per check so it can
/// redraw between them.
#[wasm_bindgen]
pub fn verify(name: &str) -> String {
    verify_json(name).to_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classify_reports_the_generator() {
        let v = classify_coefficients_json("1", "1", "2", "3");
        assert_eq!(v["structure"], "Z3");
        assert_eq!(v["generator"], "{3/2, (x+ζy)/(x+y)}_3");
    }

    #[test]
    fn bad_input_becomes_an_error_object() {
        assert!(classify_coefficients_json("0", "1", "1", "1")["error"].is_string());
        assert!(classify_coefficients_json("x", "1", "1", "1")["error"].is_string());
        assert!(classify_classes_json("5", "0", "0", None)["error"].is_string());
    }

    #[test]
    fn abstract_classes() {
        let v = classify_classes_json("1,0", "0,1", "1,1", Some(2));
        assert_eq!(v["structure"], "Z3");
    }

    #[test]
    fn graph_has_27_nodes_and_135_edges() {
        let g = incidence_graph_json();
        assert_eq!(g["nodes"].as_array().unwrap().len(), 27);
        assert_eq!(g["edges"].as_array().unwrap().len(), 135);
        assert_eq!(g["pic_classes"].as_object().unwrap().len(), 27);
    }

    #[test]
    fn verify_runs_a_named_check() {
        assert_eq!(verify_json("geometry")["status"], "pass");
        assert!(verify_json("nope")["error"].is_string());
    }
}
