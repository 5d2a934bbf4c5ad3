#![allow(dead_code)]

use forge_core::io::{parse_ideal, parse_matrix};
use forge_core::{GradedMatrix, Ideal};
use std::path::PathBuf;

pub mod properties;

pub fn fixture_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

pub fn ideal(name: &str) -> Ideal {
    let text = std::fs::read_to_string(fixture_path(name)).unwrap();
    parse_ideal(&text).unwrap_or_else(|e| panic!("{name}: {e}"))
}

pub fn matrix(name: &str) -> GradedMatrix {
    let text = std::fs::read_to_string(fixture_path(name)).unwrap();
    parse_matrix(&text).unwrap_or_else(|e| panic!("{name}: {e}"))
}
