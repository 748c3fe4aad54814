//! The line-oriented `.kg` skeleton format.
//!
//! ```text
//! # comments run to end of line
//! kgraph rank=2
//! vertex v
//! edge e : v <- v color 1
//! edge f : v <- v color 2
//! square e.f ~ f.e
//! ```
//!
//! `square A.B ~ C.D` says the path `A` then `B` equals `C` then `D`, the
//! left edge of each word being the one nearest the range.

use std::fmt::Write;

use super::{EdgeDecl, Presentation, SquareDecl};
use crate::error::{Error, Result};

fn err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

fn check_name(line: usize, name: &str) -> Result<String> {
    let bad = name.is_empty()
        || name.chars().any(|c| c.is_whitespace() || matches!(c, '.' | '~' | '#' | ','));
    if bad {
        return Err(err(line, format!("invalid name `{name}`")));
    }
    Ok(name.to_string())
}

fn parse_word(line: usize, word: &str) -> Result<(String, String)> {
    match word.split('.').collect::<Vec<_>>().as_slice() {
        [a, b] => Ok((check_name(line, a)?, check_name(line, b)?)),
        _ => Err(err(line, format!("expected a two-edge word `A.B`, got `{word}`"))),
    }
}

pub fn parse_kg(text: &str) -> Result<Presentation> {
    let mut rank = None;
    let mut p = Presentation::default();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = content.split_whitespace().collect();
        match tokens[0] {
            "kgraph" => {
                if rank.is_some() {
                    return Err(err(line, "duplicate `kgraph` header"));
                }
                let k = match tokens.as_slice() {
                    [_, spec] => spec
                        .strip_prefix("rank=")
                        .and_then(|k| k.parse::<usize>().ok())
                        .ok_or_else(|| err(line, format!("expected `rank=K`, got `{spec}`")))?,
                    _ => return Err(err(line, "expected `kgraph rank=K`")),
                };
                if k == 0 {
                    return Err(err(line, "rank must be at least 1"));
                }
                rank = Some(k);
            }
            "vertex" => {
                if rank.is_none() {
                    return Err(err(line, "`kgraph rank=K` header must come first"));
                }
                match tokens.as_slice() {
                    [_, name] => p.vertices.push(check_name(line, name)?),
                    _ => return Err(err(line, "expected `vertex NAME`")),
                }
            }
            "edge" => {
                let k = rank.ok_or_else(|| err(line, "`kgraph rank=K` header must come first"))?;
                match tokens.as_slice() {
                    [_, name, ":", range, "<-", source, "color", c] => {
                        let color = c
                            .parse::<usize>()
                            .map_err(|_| err(line, format!("bad color `{c}`")))?;
                        if color == 0 || color > k {
                            return Err(err(line, format!("color {color} outside 1..={k}")));
                        }
                        p.edges.push(EdgeDecl {
                            name: check_name(line, name)?,
                            range: check_name(line, range)?,
                            source: check_name(line, source)?,
                            color,
                        });
                    }
                    _ => return Err(err(line, "expected `edge NAME : RANGE <- SOURCE color I`")),
                }
            }
            "square" => {
                if rank.is_none() {
                    return Err(err(line, "`kgraph rank=K` header must come first"));
                }
                match tokens.as_slice() {
                    [_, left, "~", right] => p.squares.push(SquareDecl {
                        left: parse_word(line, left)?,
                        right: parse_word(line, right)?,
                    }),
                    _ => return Err(err(line, "expected `square A.B ~ C.D`")),
                }
            }
            other => return Err(err(line, format!("unknown directive `{other}`"))),
        }
    }
    p.rank = rank.ok_or_else(|| err(text.lines().count().max(1), "missing `kgraph rank=K` header"))?;
    Ok(p)
}

pub fn print_kg(p: &Presentation) -> String {
    let mut out = String::new();
    writeln!(out, "kgraph rank={}", p.rank).unwrap();
    for v in &p.vertices {
        writeln!(out, "vertex {v}").unwrap();
    }
    for e in &p.edges {
        writeln!(out, "edge {} : {} <- {} color {}", e.name, e.range, e.source, e.color).unwrap();
    }
    for s in &p.squares {
        writeln!(out, "square {}.{} ~ {}.{}", s.left.0, s.left.1, s.right.0, s.right.1).unwrap();
    }
    out
}
