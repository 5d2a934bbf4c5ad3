//! Text formats for ideals and matrices.
//!
//! Ideal file:
//! ```text
//! ring 32003 3
//! # comment
//! z0^2 - z1*z2
//! z3^3
//! ```
//! The header gives the characteristic and the projective dimension `n`
//! (variables `z0..zn`); each further non-empty line is one generator.
//!
//! Matrix file:
//! ```text
//! ring 32003 3
//! rows 1 cols 4
//! row_twists 0
//! col_twists 1 1 1 1
//! z0, z1, z2, z3
//! ```
//! Entries of a row are separated by commas. The twist lines are optional;
//! when missing, twists are inferred from the entry degrees.

use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::matrix::GradedMatrix;
use crate::poly::Ring;

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty())
}

fn parse_header(line: Option<(usize, &str)>) -> Result<Ring> {
    let (no, line) = line.ok_or_else(|| Error::Parse("missing `ring p n` header".into()))?;
    let parts: Vec<&str> = line.split_whitespace().collect();
    if parts.len() != 3 || parts[0] != "ring" {
        return Err(Error::Parse(format!("line {no}: expected `ring p n`, got `{line}`")));
    }
    let p: u64 = parts[1]
        .parse()
        .map_err(|_| Error::Parse(format!("line {no}: bad characteristic `{}`", parts[1])))?;
    let n: usize = parts[2]
        .parse()
        .map_err(|_| Error::Parse(format!("line {no}: bad dimension `{}`", parts[2])))?;
    Ring::new(p, n)
}

pub fn parse_ideal(text: &str) -> Result<Ideal> {
    let mut lines = content_lines(text);
    let ring = parse_header(lines.next())?;
    let mut gens = Vec::new();
    for (no, l) in lines {
        gens.push(ring.parse(l).map_err(|e| Error::Parse(format!("line {no}: {e}")))?);
    }
    Ideal::new(ring, gens)
}

pub fn write_ideal(ideal: &Ideal) -> String {
    let r = ideal.ring();
    let mut s = format!("ring {} {}\n", r.characteristic(), r.n());
    for g in ideal.generators() {
        s.push_str(&format!("{g}\n"));
    }
    s
}

fn parse_twists(line: &str, key: &str, count: usize, no: usize) -> Result<Vec<i32>> {
    let rest = line.strip_prefix(key).unwrap_or("");
    let v = rest
        .split_whitespace()
        .map(|x| x.parse::<i32>())
        .collect::<std::result::Result<Vec<_>, _>>()
        .map_err(|_| Error::Parse(format!("line {no}: bad twist list")))?;
    if v.len() != count {
        return Err(Error::Parse(format!("line {no}: expected {count} twists, got {}", v.len())));
    }
    Ok(v)
}

pub fn parse_matrix(text: &str) -> Result<GradedMatrix> {
    let mut lines = content_lines(text).peekable();
    let ring = parse_header(lines.next())?;
    let (no, shape) = lines.next().ok_or_else(|| Error::Parse("missing `rows R cols C` line".into()))?;
    let parts: Vec<&str> = shape.split_whitespace().collect();
    let dims = match parts.as_slice() {
        ["rows", r, "cols", c] => r.parse::<usize>().ok().zip(c.parse::<usize>().ok()),
        _ => None,
    };
    let (rows, cols) = dims.ok_or_else(|| Error::Parse(format!("line {no}: expected `rows R cols C`")))?;
    let mut row_twists = None;
    let mut col_twists = None;
    while let Some(&(no, l)) = lines.peek() {
        if l.starts_with("row_twists") {
            row_twists = Some(parse_twists(l, "row_twists", rows, no)?);
        } else if l.starts_with("col_twists") {
            col_twists = Some(parse_twists(l, "col_twists", cols, no)?);
        } else {
            break;
        }
        lines.next();
    }
    let mut entries = Vec::with_capacity(rows);
    for (no, l) in lines {
        let row = l
            .split(',')
            .map(|e| ring.parse(e))
            .collect::<Result<Vec<_>>>()
            .map_err(|e| Error::Parse(format!("line {no}: {e}")))?;
        if row.len() != cols {
            return Err(Error::Shape(format!("line {no}: expected {cols} entries, got {}", row.len())));
        }
        entries.push(row);
    }
    if entries.len() != rows {
        return Err(Error::Shape(format!("expected {rows} rows, got {}", entries.len())));
    }
    match (row_twists, col_twists) {
        (Some(r), Some(c)) => GradedMatrix::new(ring, entries, r, c),
        (None, None) => GradedMatrix::with_inferred_twists(ring, entries),
        _ => Err(Error::Parse("give both twist lines or neither".into())),
    }
}

/// Twist lines and rows, without the ring header.
pub fn write_matrix_body(m: &GradedMatrix) -> String {
    let join = |v: &[i32]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ");
    let mut s = format!("row_twists {}\ncol_twists {}\n", join(m.row_twists()), join(m.col_twists()));
    for i in 0..m.rows() {
        let row: Vec<String> = m.row(i).iter().map(|p| p.to_string()).collect();
        s.push_str(&row.join(", "));
        s.push('\n');
    }
    s
}

pub fn write_matrix(m: &GradedMatrix) -> String {
    let r = m.ring();
    format!(
        "ring {} {}\nrows {} cols {}\n{}",
        r.characteristic(),
        r.n(),
        m.rows(),
        m.cols(),
        write_matrix_body(m)
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ideal_round_trip() {
        let text = "ring 32003 3\n# twisted cubic\nz0*z2 - z1^2\nz0*z3-z1*z2\n\nz1*z3 - z2^2\n";
        let i = parse_ideal(text).unwrap();
        assert_eq!(i.generators().len(), 3);
        let again = parse_ideal(&write_ideal(&i)).unwrap();
        assert_eq!(again.generators(), i.generators());
    }

    #[test]
    fn matrix_round_trip_and_inference() {
        let text = "ring 32003 3\nrows 2 cols 2\nz0, z1^2\nz1, z2^2\n";
        let m = parse_matrix(text).unwrap();
        assert_eq!(m.row_twists(), &[0, 0]);
        assert_eq!(m.col_twists(), &[1, 2]);
        let again = parse_matrix(&write_matrix(&m)).unwrap();
        assert_eq!(again, m);
    }

    #[test]
    fn malformed_files() {
        assert!(parse_ideal("z0\n").is_err());
        assert!(parse_ideal("ring 9 3\nz0\n").is_err());
        assert!(parse_matrix("ring 32003 1\nrows 1 cols 2\nz0\n").is_err());
        assert!(parse_matrix("ring 32003 1\nrows 1 cols 2\nz0, z1^2\n").is_ok());
        assert!(parse_matrix("ring 32003 1\nrows 1 cols 2\nrow_twists 0\ncol_twists 1 1\nz0, z1^2\n").is_err());
    }
}
