//! The facet-list text format.
//!
//! ```text
//! # two disjoint edges
//! n=4
//! 1 2
//! 3 4
//! ```
//!
//! One facet per line, labels separated by whitespace. `{}` stands for the
//! empty facet, so the complex `{∅}` can be written down. Without an `n=`
//! header the ambient size is the largest label.

use std::fmt::Write as _;

use crate::complex::{Face, SimplicialComplex};
use crate::error::{Error, Result};
use crate::linalg::PrimeField;

pub fn parse_complex(text: &str) -> Result<SimplicialComplex> {
    let mut header: Option<(usize, usize)> = None;
    let mut facets = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |message: String| Error::Parse { line: line_no, message };
        if let Some(rest) = line.strip_prefix("n=") {
            if header.is_some() {
                return Err(err("duplicate n= header".into()));
            }
            let n = rest.trim().parse().map_err(|_| err(format!("bad vertex count {rest:?}")))?;
            header = Some((n, line_no));
            continue;
        }
        if line == "{}" {
            facets.push(Face::EMPTY);
            continue;
        }
        let mut labels = Vec::new();
        for tok in line.split_whitespace() {
            let v: u32 = tok.parse().map_err(|_| err(format!("bad vertex label {tok:?}")))?;
            if v == 0 {
                return Err(err("vertex labels start at 1".into()));
            }
            labels.push(v);
        }
        let face = Face::new(labels).map_err(|e| err(e.to_string()))?;
        facets.push(face);
    }
    let max = facets.iter().filter_map(|&f| f.max()).max().unwrap_or(0) as usize;
    let n = match header {
        Some((n, line)) if n < max => {
            return Err(Error::Parse { line, message: format!("n={n} but label {max} is used") });
        }
        Some((n, _)) => n,
        None => max,
    };
    SimplicialComplex::from_facets(n, facets)
}

/// Inverse of [`parse_complex`]: header, then the facets in (size, lex) order.
pub fn print_complex(k: &SimplicialComplex) -> String {
    let mut out = format!("n={}\n", k.n());
    for facet in k.facets() {
        if facet.is_empty() {
            out.push_str("{}\n");
            continue;
        }
        let labels: Vec<String> = facet.vertices().map(|v| v.to_string()).collect();
        writeln!(out, "{}", labels.join(" ")).unwrap();
    }
    out
}

/// Square matrix of integers, one row per line; negative entries are taken
/// modulo the prime.
pub fn parse_matrix(text: &str, field: PrimeField) -> Result<Vec<Vec<u64>>> {
    let mut rows = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let row = line
            .split_whitespace()
            .map(|tok| {
                tok.parse::<i64>().map(|v| field.from_i64(v).value()).map_err(|_| Error::Parse {
                    line: idx + 1,
                    message: format!("bad matrix entry {tok:?}"),
                })
            })
            .collect::<Result<Vec<u64>>>()?;
        rows.push(row);
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_with_comments_and_header() {
        let k = parse_complex("# two edges\nn=5\n1 2\n\n3 4\n").unwrap();
        assert_eq!(k.n(), 5);
        assert_eq!(k.facets().len(), 2);
        let k = parse_complex("1 2\n3 4").unwrap();
        assert_eq!(k.n(), 4);
        assert_eq!(k, SimplicialComplex::from_lists(4, &[&[1, 2], &[3, 4]]));
    }

    #[test]
    fn empty_and_void() {
        assert!(parse_complex("# nothing\n").unwrap().is_empty());
        let void = parse_complex("{}\n").unwrap();
        assert_eq!(void, SimplicialComplex::void(0));
        assert_eq!(parse_complex(&print_complex(&void)).unwrap(), void);
    }

    #[test]
    fn round_trip() {
        let k = SimplicialComplex::from_lists(7, &[&[1, 2, 3], &[3, 5], &[6]]);
        let back = parse_complex(&print_complex(&k)).unwrap();
        assert_eq!(back, k);
        assert_eq!(back.n(), 7);
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        assert_eq!(
            parse_complex("1 2\n1 x\n"),
            Err(Error::Parse { line: 2, message: "bad vertex label \"x\"".into() })
        );
        assert!(matches!(parse_complex("0 1\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_complex("n=2\n1 3\n"), Err(Error::Parse { line: 1, .. })));
    }

    #[test]
    fn matrix_entries() {
        let f = PrimeField::new(7).unwrap();
        assert_eq!(parse_matrix("1 0\n-1 3\n", f).unwrap(), vec![vec![1, 0], vec![6, 3]]);
    }
}
