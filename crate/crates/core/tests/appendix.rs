//! Golden data: four closed 3-braids with their HOMFLY polynomials and
//! linking matrices, and a 10-crossing two-component diagram.

use std::collections::HashMap;

use linkbound::diagram::{linking_matrix_of_closure, PDDiagram};
use linkbound::homfly::{homfly_braid, homfly_pd};
use linkbound::notation::{parse_braid, parse_matrix, parse_pd, parse_poly, split_assignment};

/// The tabulated matrices list the closure components in the order
/// (K1, K3, K2), with Ki starting at braid position i.
const TABLE_ORDER: [usize; 3] = [0, 2, 1];

fn fixture(name: &str) -> String {
    let path = format!("{}/../../fixtures/{name}", env!("CARGO_MANIFEST_DIR"));
    std::fs::read_to_string(path).unwrap()
}

fn assignments() -> HashMap<String, String> {
    fixture("appendix.m")
        .split(';')
        .filter_map(|chunk| {
            let (name, body) = split_assignment(chunk);
            Some((name?.trim().to_string(), body.trim().to_string()))
        })
        .collect()
}

const CASES: [(&str, &str, &str); 4] =
    [("L6n100", "P00", "lk00"), ("L6n110", "P10", "lk10"), ("L6n101", "P01", "lk01"), ("L6n111", "P11", "lk11")];

#[test]
fn homfly_matches() {
    let data = assignments();
    for (b, p, _) in CASES {
        let braid = parse_braid(&data[b]).unwrap();
        let want = parse_poly(&data[p]).unwrap();
        assert_eq!(homfly_braid(&braid).unwrap(), want, "{b}");
    }
}

#[test]
fn linking_matrices_match() {
    let data = assignments();
    for (b, _, lk) in CASES {
        let braid = parse_braid(&data[b]).unwrap();
        let want = parse_matrix(&data[lk]).unwrap();
        let got = linking_matrix_of_closure(&braid).permuted(&TABLE_ORDER);
        assert_eq!(got, want, "{b}");
        let pd = PDDiagram::from_braid_closure(&braid).linking_matrix().permuted(&TABLE_ORDER);
        assert_eq!(pd, want, "{b} via diagram");
    }
}

#[test]
fn name_bits_reverse_the_last_two_components() {
    let data = assignments();
    let base = PDDiagram::from_braid_closure(&parse_braid(&data["L6n100"]).unwrap());
    for (bits, lk) in [((false, false), "lk00"), ((true, false), "lk10"), ((false, true), "lk01"), ((true, true), "lk11")] {
        let mut d = base.clone();
        // table components 2 and 3 are closure components 2 and 1
        if bits.0 {
            d = d.reverse_component(TABLE_ORDER[1]).unwrap();
        }
        if bits.1 {
            d = d.reverse_component(TABLE_ORDER[2]).unwrap();
        }
        let want = parse_matrix(&data[lk]).unwrap();
        assert_eq!(d.linking_matrix().permuted(&TABLE_ORDER), want, "{lk}");
    }
}

#[test]
fn ten_crossing_diagram() {
    let d = parse_pd(&fixture("two_component_10.pd")).unwrap();
    assert_eq!(d.crossings().len(), 10);
    assert_eq!(d.component_count(), 2);
    assert_eq!(d.linking_matrix().get(0, 1), 0);
    let p = homfly_pd(&d).unwrap();
    assert_eq!(p, p.mirror());
    assert_eq!(homfly_pd(&d.mirror()).unwrap(), p);
}
