//! Reading graph6 from arguments or standard input.

use std::io::{self, BufRead};

use hcontract::{parse_graph6, Graph, Graph6Error};

#[derive(Debug)]
pub enum InputError {
    Graph6 {
        source: String,
        line: usize,
        err: Graph6Error,
    },
    Io(io::Error),
}

impl std::fmt::Display for InputError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            InputError::Graph6 { source, line, err } => write!(f, "{source} line {line}: {err}"),
            InputError::Io(e) => write!(f, "reading input: {e}"),
        }
    }
}

/// Parses the given strings, or every non-blank, non-comment line of
/// standard input when none are given.
pub fn graphs(args: &[String]) -> Result<Vec<Graph>, InputError> {
    if !args.is_empty() {
        return args
            .iter()
            .enumerate()
            .map(|(i, a)| {
                parse_graph6(a.trim()).map_err(|err| InputError::Graph6 {
                    source: "argument".into(),
                    line: i + 1,
                    err,
                })
            })
            .collect();
    }
    let stdin = io::stdin();
    let mut out = Vec::new();
    for (i, line) in stdin.lock().lines().enumerate() {
        let line = line.map_err(InputError::Io)?;
        let t = line.trim();
        if t.is_empty() || t.starts_with('#') {
            continue;
        }
        out.push(parse_graph6(t).map_err(|err| InputError::Graph6 {
            source: "stdin".into(),
            line: i + 1,
            err,
        })?);
    }
    Ok(out)
}

pub fn one(arg: &str) -> Result<Graph, InputError> {
    parse_graph6(arg.trim()).map_err(|err| InputError::Graph6 {
        source: "argument".into(),
        line: 1,
        err,
    })
}
