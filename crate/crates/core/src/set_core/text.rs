//! The plain-text family format.
//!
//! ```text
//! 5 2
//! 1 2
//! 1 3
//! 2 3
//! ```
//!
//! The first line is `n k`; every following line lists one member's elements
//! in increasing order, separated by single spaces. Lines are written in colex
//! order and the file ends with a newline. A member of the `k = 0` family is the
//! empty line.
//!
//! The reader accepts members in any order and canonicalizes them.

use std::fmt::Write;

use crate::error::{Error, Result};

use super::family::{make_family, UniformFamily};
use super::subset::Subset;

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn parse_number(token: &str, line: usize) -> Result<usize> {
    token
        .parse::<usize>()
        .map_err(|_| parse_err(line, format!("not a non-negative integer: {token:?}")))
}

pub fn parse_family(text: &str) -> Result<UniformFamily> {
    let body = text
        .strip_suffix('\n')
        .ok_or_else(|| parse_err(text.lines().count().max(1), "missing final newline"))?;
    let mut lines = body.split('\n');
    let header = lines.next().unwrap_or_default();
    let fields: Vec<&str> = header.split_whitespace().collect();
    let [n, k] = fields.as_slice() else {
        return Err(parse_err(1, "header must be \"n k\""));
    };
    let (n, k) = (parse_number(n, 1)?, parse_number(k, 1)?);

    let raw = lines
        .enumerate()
        .map(|(i, line)| {
            line.split_whitespace()
                .map(|tok| parse_number(tok, i + 2))
                .collect::<Result<Vec<usize>>>()
        })
        .collect::<Result<Vec<_>>>()?;

    make_family(n, k, &raw).map_err(|e| match e {
        // point at the offending line where there is one
        Error::Cardinality { ref set, .. } | Error::Duplicate(ref set) => {
            let line = raw.iter().rposition(|r| r == set).map_or(1, |i| i + 2);
            parse_err(line, e.to_string())
        }
        other => parse_err(1, other.to_string()),
    })
}

fn push_set(out: &mut String, s: &Subset) {
    for (i, e) in s.elements().enumerate() {
        if i > 0 {
            out.push(' ');
        }
        write!(out, "{e}").unwrap();
    }
    out.push('\n');
}

pub fn format_family(family: &UniformFamily) -> String {
    let mut out = format!("{} {}\n", family.ground_n(), family.k());
    for s in family {
        push_set(&mut out, s);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::set_core::all_k_subsets;

    #[test]
    fn writes_canonical_text() {
        let f = make_family(3, 2, &[vec![2, 3], vec![1, 2]]).unwrap();
        assert_eq!(format_family(&f), "3 2\n1 2\n2 3\n");
    }

    #[test]
    fn reads_back_what_it_writes() {
        for (n, k) in [(4, 2), (5, 0), (5, 5), (6, 3)] {
            let f = all_k_subsets(n, k).unwrap();
            let text = format_family(&f);
            assert_eq!(parse_family(&text).unwrap(), f);
        }
        let empty = UniformFamily::empty(7, 3).unwrap();
        assert_eq!(format_family(&empty), "7 3\n");
        assert_eq!(parse_family("7 3\n").unwrap(), empty);
    }

    #[test]
    fn zero_uniform_member_is_an_empty_line() {
        let f = parse_family("4 0\n\n").unwrap();
        assert_eq!(f.len(), 1);
        assert_eq!(format_family(&f), "4 0\n\n");
    }

    #[test]
    fn parse_errors_name_a_line() {
        assert!(matches!(parse_family("3 2\n1 2"), Err(Error::Parse { .. })));
        assert!(matches!(parse_family("3\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_family("3 2\n1 x\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(
            parse_family("4 2\n1 2\n1 2 3\n"),
            Err(Error::Parse { line: 3, .. })
        ));
        assert!(matches!(
            parse_family("4 2\n1 2\n2 1\n"),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(parse_family("3 2\n1 4\n"), Err(Error::Parse { .. })));
    }
}
