//! Plain-text lattice files and DOT output.
//!
//! The first significant line holds the element count `n`; every further
//! significant line is a pair `i j` with `i < j` (0-indexed). Lines that are
//! blank or start with `#` are ignored. Pairs need not be covers; the cover
//! relation is recomputed.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::lattice::Lattice;

pub fn parse_lattice_file(text: &str) -> Result<Lattice> {
    let mut n = None;
    let mut pairs = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim_end_matches('\r').trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let number = |s: &str| {
            s.parse::<usize>().map_err(|_| Error::Parse {
                line: line_no,
                message: format!("expected a non-negative integer, found {s:?}"),
            })
        };
        match (n, fields.as_slice()) {
            (None, [count]) => n = Some(number(count)?),
            (None, _) => {
                return Err(Error::Parse {
                    line: line_no,
                    message: "first line must hold the element count".into(),
                })
            }
            (Some(_), [a, b]) => pairs.push((number(a)?, number(b)?)),
            (Some(_), _) => {
                return Err(Error::Parse {
                    line: line_no,
                    message: format!("expected two indices, found {} fields", fields.len()),
                })
            }
        }
    }
    let n = n.ok_or(Error::Parse {
        line: 1,
        message: "missing element count".into(),
    })?;
    Lattice::from_covers(n, &pairs)
}

/// The cover list in file format, LF line endings.
pub fn serialize_lattice(l: &Lattice) -> String {
    let mut out = format!("{}\n", l.len());
    for (a, b) in l.cover_pairs() {
        writeln!(out, "{a} {b}").unwrap();
    }
    out
}

/// A DOT digraph with upward cover edges and one rank per height.
pub fn emit_dot(l: &Lattice) -> String {
    let heights = l.poset().heights();
    let mut out = String::from("digraph lattice {\n  rankdir=BT;\n  node [shape=circle];\n");
    let levels = heights.iter().max().map_or(0, |h| h + 1);
    for h in 0..levels {
        let members: Vec<String> = (0..l.len())
            .filter(|&x| heights[x] == h)
            .map(|x| x.to_string())
            .collect();
        writeln!(out, "  {{ rank=same; {}; }}", members.join("; ")).unwrap();
    }
    for (a, b) in l.cover_pairs() {
        writeln!(out, "  {a} -> {b};").unwrap();
    }
    out.push_str("}\n");
    out
}
