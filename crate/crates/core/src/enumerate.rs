//! Exhaustive generation of graphs up to isomorphism.
//!
//! Order `k` is built from order `k - 1` by adding a vertex with every
//! possible neighbour set; children are deduplicated by canonical form.
//! Levels are cached process-wide since every scan reuses them.

use std::collections::BTreeMap;
use std::sync::Mutex;

use rayon::prelude::*;

use crate::canon::{canonical_labeling, CanonicalForm};
use crate::error::EnumerateError;
use crate::graph::{Graph, VertexSet, MAXN};

/// Largest order the generator accepts. Order 10 alone has twelve million classes.
pub const ENUMERATION_LIMIT: usize = 9;

/// One representative per isomorphism class on at most `n_max` vertices.
#[derive(Clone, Debug)]
pub struct GraphSpace {
    pub n_max: usize,
    pub exclude_isolated: bool,
    /// Canonically labelled representatives, by order and then by certificate.
    pub graphs: Vec<Graph>,
}

impl GraphSpace {
    pub fn len(&self) -> usize {
        self.graphs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.graphs.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Graph> {
        self.graphs.iter()
    }

    /// Number of representatives on exactly `n` vertices, for `n = 0..=n_max`.
    pub fn counts_by_order(&self) -> Vec<usize> {
        let mut counts = vec![0; self.n_max + 1];
        for g in &self.graphs {
            counts[g.n()] += 1;
        }
        counts
    }
}

impl<'a> IntoIterator for &'a GraphSpace {
    type Item = &'a Graph;
    type IntoIter = std::slice::Iter<'a, Graph>;

    fn into_iter(self) -> Self::IntoIter {
        self.graphs.iter()
    }
}

static LEVELS: Mutex<Vec<Vec<Graph>>> = Mutex::new(Vec::new());

fn next_level(prev: &[Graph]) -> Vec<Graph> {
    let k = prev.first().map_or(0, |g| g.n());
    let children: Vec<(CanonicalForm, Graph)> = prev
        .par_iter()
        .flat_map_iter(|g| {
            (0..1u32 << k).map(move |bits| {
                let child = g
                    .add_vertex(VertexSet::from_bits(bits as u16))
                    .expect("order below MAXN");
                let lab = canonical_labeling(&child);
                (lab.form, child.permute(&lab.perm))
            })
        })
        .collect();
    let unique: BTreeMap<CanonicalForm, Graph> = children.into_iter().collect();
    unique.into_values().collect()
}

/// All graphs on exactly `n` vertices, one per class, in certificate order.
pub fn graphs_of_order(n: usize) -> Result<Vec<Graph>, EnumerateError> {
    if n > ENUMERATION_LIMIT || n > MAXN {
        return Err(EnumerateError::BoundExceeded(n));
    }
    let mut levels = LEVELS.lock().unwrap_or_else(|e| e.into_inner());
    if levels.is_empty() {
        levels.push(vec![Graph::empty(0).expect("order 0")]);
    }
    while levels.len() <= n {
        let next = next_level(levels.last().expect("seeded"));
        log::debug!("order {}: {} classes", levels.len(), next.len());
        levels.push(next);
    }
    Ok(levels[n].clone())
}

pub fn enumerate_graphs(
    n_max: usize,
    exclude_isolated: bool,
) -> Result<GraphSpace, EnumerateError> {
    let mut graphs = Vec::new();
    // the null graph has no isolated vertex, but it is not a graph in the
    // restricted space either
    let start = usize::from(exclude_isolated);
    for n in start..=n_max {
        graphs.extend(
            graphs_of_order(n)?
                .into_iter()
                .filter(|g| !exclude_isolated || !g.has_isolated_vertex()),
        );
    }
    Ok(GraphSpace {
        n_max,
        exclude_isolated,
        graphs,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        let space = enumerate_graphs(5, false).unwrap();
        assert_eq!(space.counts_by_order(), vec![1, 1, 2, 4, 11, 34]);
    }

    #[test]
    fn isolated_exclusion() {
        assert!(enumerate_graphs(1, true).unwrap().is_empty());
        // K2 on two vertices, P3 and K3 on three
        assert_eq!(
            enumerate_graphs(3, true).unwrap().counts_by_order(),
            vec![0, 0, 1, 2]
        );
    }

    #[test]
    fn bound() {
        assert!(matches!(
            enumerate_graphs(10, false),
            Err(EnumerateError::BoundExceeded(10))
        ));
    }
}
