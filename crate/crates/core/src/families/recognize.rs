//! Split, pseudo-split and threshold recognition.
//!
//! The `is_*` predicates decide by forbidden induced subgraphs. The two
//! `*_by_*` functions are independent recognisers used to cross-check them.

use super::named::{cycle, path, two_k2};
use crate::graph::{Graph, VertexSet};
use crate::hfree::{is_h_free, Family};

/// `{2K2, C4, C5}`.
pub fn split_family() -> Family {
    Family::new([two_k2(), cycle(4).expect("C4"), cycle(5).expect("C5")])
}

/// `{2K2, C4}`.
pub fn pseudo_split_family() -> Family {
    Family::new([two_k2(), cycle(4).expect("C4")])
}

/// `{2K2, P4, C4}`.
pub fn threshold_family() -> Family {
    Family::new([two_k2(), path(4).expect("P4"), cycle(4).expect("C4")])
}

pub fn is_split(g: &Graph) -> bool {
    is_h_free(g, &split_family())
}

pub fn is_pseudo_split(g: &Graph) -> bool {
    is_h_free(g, &pseudo_split_family())
}

pub fn is_threshold(g: &Graph) -> bool {
    is_h_free(g, &threshold_family())
}

/// Degree-sequence test: with degrees `d1 >= .. >= dn` and
/// `m = max { i : d_i >= i - 1 }`, the graph is split iff
/// `d1 + .. + dm = m(m-1) + d(m+1) + .. + dn`.
pub fn split_by_degree_sequence(g: &Graph) -> bool {
    let d = g.degree_sequence();
    let m = d
        .iter()
        .enumerate()
        .filter(|&(i, &di)| di >= i)
        .map(|(i, _)| i + 1)
        .max()
        .unwrap_or(0);
    let head: usize = d[..m].iter().sum();
    let tail: usize = d[m..].iter().sum();
    head == m * m.saturating_sub(1) + tail
}

/// Strips isolated or dominating vertices one at a time; threshold iff
/// nothing is left.
pub fn threshold_by_creation_sequence(g: &Graph) -> bool {
    let mut alive = g.vertices();
    while !alive.is_empty() {
        let next = alive.iter().find(|&v| {
            let nbrs = VertexSet::from_bits(g.row(v)).intersection(alive);
            nbrs.is_empty() || nbrs == alive.without(v)
        });
        match next {
            Some(v) => alive.remove(v),
            None => return false,
        }
    }
    true
}
