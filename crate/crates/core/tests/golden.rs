mod common;

use repvar::cli::run;
use repvar::report::{defect_table, tminusdim_table, Table, TableJson};

fn cli_text(args: &[&str]) -> String {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(
        std::iter::once("repvar").chain(args.iter().copied()),
        &mut out,
        &mut err,
    );
    assert_eq!(code, 0);
    String::from_utf8(out).unwrap()
}

fn load(name: &str) -> Table {
    let json: TableJson = serde_json::from_str(&common::fixture(name)).unwrap();
    Table::from_json(&json).unwrap()
}

#[test]
fn defect_values() {
    let expected = load("defect.json");
    let computed = defect_table();
    assert_eq!(computed.rows, expected.rows);
    assert_eq!(computed.cols, expected.cols);
    assert_eq!(computed.cells, expected.cells);
}

#[test]
fn tminusdim_values() {
    let expected = load("tminusdim.json");
    let computed = tminusdim_table();
    assert_eq!(computed.rows, expected.rows);
    assert_eq!(computed.cols, expected.cols);
    assert_eq!(computed.cells, expected.cells);
}

#[test]
fn text_rendering() {
    assert_eq!(
        cli_text(&["tables", "defect"]),
        common::fixture("defect.txt")
    );
    assert_eq!(
        cli_text(&["tables", "tminusdim"]),
        common::fixture("tminusdim.txt")
    );
}

#[test]
fn appendix_entries_round_trip_through_text() {
    for e in repvar::permgrp::appendix_entries() {
        let back: repvar::AppendixEntry = e.to_string().parse().unwrap();
        assert_eq!(back.generators, e.generators);
        assert_eq!(back.periods, e.periods);
    }
}
