//! Built-in example algebras.
//!
//! * `nakayama-nesbitt` — the 4-dimensional subalgebra of 4×4 matrices
//!   spanned by `E`, `E13 + u·E24`, `E12 + v·E34`, `E14`; symmetric iff `u = v`.
//! * `quiver-e42` — a 14-dimensional non-symmetric Frobenius algebra given by
//!   a quiver with one central vertex and three 2-cycles. Its displayed
//!   basis is not cellular for any order; it ships with the order the
//!   products force.
//! * `local-e43` — a 6-dimensional local algebra with a parameter `lambda`
//!   whose Nakayama automorphism has infinite order for generic `lambda`.
//! * `matrix-2x2`, `group-c2` — small symmetric sanity checks.

use serde_json::json;

use crate::spec_file::{AnySpec, Loaded};

pub const FIXTURE_NAMES: &[&str] = &[
    "nakayama-nesbitt",
    "quiver-e42",
    "local-e43",
    "matrix-2x2",
    "group-c2",
];

pub fn fixture(name: &str) -> Option<AnySpec> {
    let v = match name {
        "nakayama-nesbitt" => nakayama_nesbitt(),
        "quiver-e42" => quiver_e42(),
        "local-e43" => local_e43(),
        "matrix-2x2" => matrix_2x2(),
        "group-c2" => group_c2(),
        _ => return None,
    };
    Some(AnySpec::from_json(&v.to_string()).expect("built-in fixtures are well-formed"))
}

fn nakayama_nesbitt() -> serde_json::Value {
    // C1 = E14, C2 = E13 + u E24, C3 = E12 + v E34, C4 = identity
    json!({
        "field": "q",
        "params": {"u": "1", "v": "2"},
        "constraints": {"u": ["0"], "v": ["0"]},
        "dim": 4,
        "basis": ["C1", "C2", "C3", "C4"],
        "unit": {"C4": "1"},
        "table": [
            ["C2", "C3", [["C1", "v"]]],
            ["C3", "C2", [["C1", "u"]]],
            ["C4", "C1", [["C1", "1"]]],
            ["C4", "C2", [["C2", "1"]]],
            ["C4", "C3", [["C3", "1"]]],
            ["C4", "C4", [["C4", "1"]]],
            ["C1", "C4", [["C1", "1"]]],
            ["C2", "C4", [["C2", "1"]]],
            ["C3", "C4", [["C3", "1"]]]
        ],
        "trace": {"C1": "1"},
        "cells": {
            "poset": {
                "elements": ["1", "2", "3", "4"],
                "covers": [["1", "2"], ["1", "3"], ["2", "4"], ["3", "4"]]
            },
            "parts": [
                {"label": "1", "m": ["1"], "grid": [["C1"]]},
                {"label": "2", "m": ["1"], "grid": [["C2"]]},
                {"label": "3", "m": ["1"], "grid": [["C3"]]},
                {"label": "4", "m": ["1"], "grid": [["C4"]]}
            ],
            "involution": "grid_transpose"
        }
    })
}

fn quiver_e42() -> serde_json::Value {
    // a_i: e_i -> e0, b_i: e0 -> e_i; paths read left to right
    json!({
        "field": "q",
        "vertices": ["e0", "e1", "e2", "e3"],
        "arrows": [
            {"name": "a1", "src": "e1", "dst": "e0"},
            {"name": "a2", "src": "e2", "dst": "e0"},
            {"name": "a3", "src": "e3", "dst": "e0"},
            {"name": "b1", "src": "e0", "dst": "e1"},
            {"name": "b2", "src": "e0", "dst": "e2"},
            {"name": "b3", "src": "e0", "dst": "e3"}
        ],
        "relations": [
            [[["a1", "b1"], "1"]],
            [[["a1", "b2"], "1"]],
            [[["a2", "b1"], "1"]],
            [[["a2", "b3"], "1"]],
            [[["a3", "b2"], "1"]],
            [[["a3", "b3"], "1"]],
            [[["b1", "a1"], "1"], [["b2", "a2"], "-1"]],
            [[["b2", "a2"], "1"], [["b3", "a3"], "-1"]]
        ],
        "composition": "left-to-right",
        "trace": {"a1b3": "1", "a3b1": "1", "a2b2": "1", "b1a1": "1"},
        "cells": {
            "poset": {
                "elements": ["3", "2", "1"],
                "covers": [["3", "2"], ["2", "1"]]
            },
            "parts": [
                {"label": "1", "m": ["1", "2"], "grid": [["e3", "a3"], ["b3", "e0"]]},
                {"label": "2", "m": ["1", "2", "3"], "grid": [
                    ["e1", "a1", "a1b3"],
                    ["b1", "b1a1", "b2"],
                    ["a3b1", "a2", "e2"]
                ]},
                {"label": "3", "m": ["1"], "grid": [["a2b2"]]}
            ],
            "involution": "grid_transpose"
        }
    })
}

fn local_e43() -> serde_json::Value {
    // arrow order makes bc the normal form of cb, ad and da
    let zero = |p: &[&str]| json!([[p, "1"]]);
    json!({
        "field": "q",
        "params": {"lambda": "2"},
        "constraints": {"lambda": ["0", "1"]},
        "vertices": ["1"],
        "arrows": [
            {"name": "b", "src": "1", "dst": "1"},
            {"name": "c", "src": "1", "dst": "1"},
            {"name": "a", "src": "1", "dst": "1"},
            {"name": "d", "src": "1", "dst": "1"}
        ],
        "relations": [
            zero(&["a", "a"]), zero(&["b", "b"]), zero(&["c", "c"]), zero(&["d", "d"]),
            zero(&["a", "b"]), zero(&["a", "c"]), zero(&["b", "a"]), zero(&["b", "d"]),
            zero(&["c", "a"]), zero(&["c", "d"]), zero(&["d", "b"]), zero(&["d", "c"]),
            [[["c", "b"], "1"], [["b", "c"], "-lambda"]],
            [[["a", "d"], "1"], [["b", "c"], "-1"]],
            [[["d", "a"], "1"], [["b", "c"], "-1"]]
        ],
        "trace": {"bc": "1"},
        "cells": {
            "poset": {"elements": ["1", "2", "3"], "covers": [["1", "2"], ["2", "3"]]},
            "parts": [
                {"label": "1", "m": ["1"], "grid": [["bc"]]},
                {"label": "2", "m": ["1", "2"], "grid": [["a", "b"], ["c", "d"]]},
                {"label": "3", "m": ["1"], "grid": [["1"]]}
            ],
            "involution": "grid_transpose"
        }
    })
}

fn matrix_2x2() -> serde_json::Value {
    let basis = ["E11", "E12", "E21", "E22"];
    let mut table = Vec::new();
    for (x, l) in basis.iter().enumerate() {
        for (y, r) in basis.iter().enumerate() {
            let (i, j, k, m) = (x / 2, x % 2, y / 2, y % 2);
            if j == k {
                table.push(json!([l, r, [[basis[2 * i + m], "1"]]]));
            }
        }
    }
    json!({
        "field": "q",
        "dim": 4,
        "basis": basis,
        "unit": {"E11": "1", "E22": "1"},
        "table": table,
        "trace": {"E11": "1", "E22": "1"},
        "cells": {
            "poset": {"elements": ["M"], "covers": []},
            "parts": [{"label": "M", "m": ["1", "2"], "grid": [["E11", "E12"], ["E21", "E22"]]}],
            "involution": "grid_transpose"
        }
    })
}

fn group_c2() -> serde_json::Value {
    // basis s = 1 + g, 1; τ is the coefficient of the group identity
    json!({
        "field": "q",
        "dim": 2,
        "basis": ["s", "1"],
        "unit": {"1": "1"},
        "table": [
            ["s", "s", [["s", "2"]]],
            ["s", "1", [["s", "1"]]],
            ["1", "s", [["s", "1"]]],
            ["1", "1", [["1", "1"]]]
        ],
        "trace": {"s": "1", "1": "1"},
        "cells": {
            "poset": {"elements": ["s", "1"], "covers": [["s", "1"]]},
            "parts": [
                {"label": "s", "m": ["*"], "grid": [["s"]]},
                {"label": "1", "m": ["*"], "grid": [["1"]]}
            ],
            "involution": "grid_transpose"
        }
    })
}

/// Plain-text account of where each part of a generated fixture comes from.
pub fn provenance(name: &str, spec: &AnySpec, loaded: &Loaded) -> String {
    let mut out = format!("fixture: {name}\nfield: {}\n", loaded.algebra.field());
    for b in loaded.bindings.bindings() {
        out.push_str(&format!("parameter {} = {}\n", b.name, b.value));
    }
    match spec {
        AnySpec::Quiver(q) => {
            out.push_str(&format!(
                "structure constants: computed by the presentation builder from {} vertices, {} arrows and {} relations ({} composition)\n",
                q.vertices.len(),
                q.arrows.len(),
                q.relations.len(),
                q.composition.as_deref().unwrap_or("left-to-right"),
            ));
            out.push_str(
                "basis: normal-form paths ordered by length, then by arrow declaration order\n",
            );
        }
        AnySpec::Algebra(_) => {
            out.push_str(
                "structure constants: hand-entered table in the built-in fixture definition\n",
            );
        }
    }
    out.push_str("trace form: hand-entered values in the built-in fixture definition\n");
    out.push_str("cell datum: hand-entered grids and order in the built-in fixture definition\n");
    out.push_str(&format!(
        "dimension: {}\nbasis: {}\n",
        loaded.algebra.dim(),
        loaded.algebra.labels().join(", ")
    ));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spec_file::LoadOptions;

    #[test]
    fn all_fixtures_load() {
        for name in FIXTURE_NAMES {
            let l = fixture(name)
                .unwrap()
                .load(&LoadOptions::default())
                .unwrap();
            assert!(l.algebra.verify().is_empty(), "{name}");
            assert!(l.trace.is_some() && l.cells.is_some(), "{name}");
        }
    }

    #[test]
    fn quiver_dimensions_and_bases() {
        let l = fixture("quiver-e42")
            .unwrap()
            .load(&LoadOptions::default())
            .unwrap();
        assert_eq!(l.algebra.dim(), 14);
        for w in ["a1b3", "a2b2", "a3b1", "b1a1"] {
            assert!(l.algebra.index_of(w).is_some(), "{w}");
        }
        let l = fixture("local-e43")
            .unwrap()
            .load(&LoadOptions::default())
            .unwrap();
        assert_eq!(l.algebra.labels(), ["1", "b", "c", "a", "d", "bc"]);
    }

    #[test]
    fn forbidden_parameter() {
        let opts = LoadOptions {
            params: vec![("lambda".into(), "1".into())],
            ..Default::default()
        };
        assert!(fixture("local-e43").unwrap().load(&opts).is_err());
    }
}
