//! Plain-text system files.
//!
//! ```text
//! rotsys 1
//! # comment
//! 1: 2 3 4
//! 2: 1 3 4
//! 3: 1 2 4
//! 4: 1 2 3
//! ```
//!
//! The header comes first. Each further line gives one element's rotation in
//! any linearization; rendering writes canonical linearizations in ascending
//! label order. Blank lines and lines starting with `#` are ignored.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::system::{Label, RotationSystem};

pub const HEADER: &str = "rotsys 1";

pub fn render(pi: &RotationSystem) -> String {
    let mut out = String::from(HEADER);
    out.push('\n');
    for (label, rotation) in pi.iter() {
        write!(out, "{label}:").unwrap();
        for l in rotation.entries() {
            write!(out, " {l}").unwrap();
        }
        out.push('\n');
    }
    out
}

fn parse_label(token: &str, line: usize) -> Result<Label> {
    if token.is_empty() || !token.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::Parse {
            line,
            message: format!("`{token}` is not a decimal label"),
        });
    }
    let value: Label = token.parse().map_err(|_| Error::Parse {
        line,
        message: format!("label `{token}` is too large"),
    })?;
    if value == 0 {
        return Err(Error::Parse {
            line,
            message: "labels must be positive".into(),
        });
    }
    Ok(value)
}

pub fn parse(text: &str) -> Result<RotationSystem> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    match lines.next() {
        Some((_, h)) if h.split_whitespace().eq(HEADER.split_whitespace()) => {}
        Some((line, other)) => {
            return Err(Error::Parse {
                line,
                message: format!("expected header `{HEADER}`, found `{other}`"),
            })
        }
        None => {
            return Err(Error::Parse {
                line: 1,
                message: format!("missing header `{HEADER}`"),
            })
        }
    }

    let mut raw = Vec::new();
    for (line, content) in lines {
        let (head, tail) = content.split_once(':').ok_or_else(|| Error::Parse {
            line,
            message: "expected `<label>: <labels>`".into(),
        })?;
        let element = parse_label(head.trim(), line)?;
        let rotation = tail
            .split_whitespace()
            .map(|t| parse_label(t, line))
            .collect::<Result<Vec<_>>>()?;
        raw.push((element, rotation));
    }
    RotationSystem::validate(raw)
}
