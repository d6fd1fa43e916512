//! Graph lists on disk: one graph6 string per line, `#` comment lines.
//!
//! A line `# family: <name>` names the list. Any other comment directly
//! above a graph becomes that graph's label, which is where generated
//! lists record member names and class sizes.

use std::fmt::Write as _;
use std::path::Path;

use crate::error::{CorpusError, FamilyError};
use crate::families::figures::{figure_graphs, Figure};
use crate::graph::Graph;
use crate::graph6::{parse_graph6, write_graph6};
use crate::hfree::Family;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorpusEntry {
    pub label: Option<String>,
    pub graph: Graph,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Corpus {
    pub name: Option<String>,
    pub entries: Vec<CorpusEntry>,
}

impl Corpus {
    pub fn graphs(&self) -> impl Iterator<Item = &Graph> + '_ {
        self.entries.iter().map(|e| &e.graph)
    }

    pub fn family(&self) -> Family {
        self.graphs().copied().collect()
    }

    pub fn to_text(&self, header: &[&str]) -> String {
        let mut out = String::new();
        if let Some(name) = &self.name {
            let _ = writeln!(out, "# family: {name}");
        }
        for line in header {
            let _ = writeln!(out, "# {line}");
        }
        for e in &self.entries {
            if let Some(label) = &e.label {
                let _ = writeln!(out, "# {label}");
            }
            // corpus graphs never exceed MAXN, well inside the writer's range
            let _ = writeln!(out, "{}", write_graph6(&e.graph).expect("n <= 62"));
        }
        out
    }
}

pub fn parse_corpus(text: &str) -> Result<Corpus, CorpusError> {
    let mut corpus = Corpus::default();
    let mut pending: Option<String> = None;
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim_end();
        if line.trim().is_empty() {
            pending = None;
            continue;
        }
        if let Some(comment) = line.strip_prefix('#') {
            let comment = comment.trim();
            match comment.strip_prefix("family:") {
                Some(name) if corpus.name.is_none() => corpus.name = Some(name.trim().to_string()),
                _ => pending = Some(comment.to_string()),
            }
            continue;
        }
        let graph = parse_graph6(line).map_err(|source| CorpusError::Parse {
            line: i + 1,
            source,
        })?;
        corpus.entries.push(CorpusEntry {
            label: pending.take(),
            graph,
        });
    }
    Ok(corpus)
}

pub fn read_corpus(path: &Path) -> Result<Corpus, CorpusError> {
    parse_corpus(&std::fs::read_to_string(path)?)
}

/// The generated list for `fig` on at most `max_vertices` vertices.
pub fn figure_corpus(fig: Figure, max_vertices: usize) -> Result<Corpus, FamilyError> {
    let entries = figure_graphs(fig, max_vertices)?
        .into_iter()
        .map(|inst| CorpusEntry {
            label: Some(inst.describe()),
            graph: inst.graph,
        })
        .collect();
    Ok(Corpus {
        name: Some(fig.id().to_string()),
        entries,
    })
}

/// File text for [`figure_corpus`], with a caption and bound in the header.
pub fn figure_corpus_text(fig: Figure, max_vertices: usize) -> Result<String, FamilyError> {
    let caption = format!("{}, at most {max_vertices} vertices", fig.caption());
    Ok(figure_corpus(fig, max_vertices)?.to_text(&[&caption]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Graph6Error;

    #[test]
    fn round_trip() {
        let c = figure_corpus(Figure::CriticalClaw, 9).unwrap();
        let text = c.to_text(&["six graphs"]);
        assert!(text.starts_with("# family: critical_claw\n# six graphs\n# H1\n"));
        assert_eq!(parse_corpus(&text).unwrap(), c);
    }

    #[test]
    fn parse_error_reports_line() {
        let err = parse_corpus("# family: x\nC~\n\nC~~\n").unwrap_err();
        match err {
            CorpusError::Parse { line, source } => {
                assert_eq!(line, 4);
                assert_eq!(
                    source,
                    Graph6Error::BadLength {
                        expected: 1,
                        found: 2
                    }
                );
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn blank_line_drops_label() {
        let c = parse_corpus("# stray\n\nC~\n").unwrap();
        assert_eq!(c.entries[0].label, None);
    }
}
