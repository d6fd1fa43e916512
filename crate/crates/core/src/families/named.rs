//! Standard small graphs.

use crate::error::FamilyError;
use crate::graph::{Graph, MAXN};

/// A graph together with the token it was built from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NamedGraph {
    pub name: String,
    pub graph: Graph,
}

/// `K1,3`: vertex 0 is the centre.
pub fn claw() -> Graph {
    Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).expect("fixed graph")
}

/// Triangle 0-1-2 with pendant 3 on 1 and pendant 4 on 2.
pub fn bull() -> Graph {
    Graph::from_edges(5, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 4)]).expect("fixed graph")
}

/// Two disjoint edges 0-1 and 2-3.
pub fn two_k2() -> Graph {
    Graph::from_edges(4, [(0, 1), (2, 3)]).expect("fixed graph")
}

/// `P4` 0-1-2-3 plus vertex 4 adjacent to all of it.
pub fn gem() -> Graph {
    Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (4, 0), (4, 1), (4, 2), (4, 3)])
        .expect("fixed graph")
}

/// Two triangles sharing vertex 0.
pub fn butterfly() -> Graph {
    Graph::from_edges(5, [(1, 2), (3, 4), (0, 1), (0, 2), (0, 3), (0, 4)]).expect("fixed graph")
}

fn check_size(name: &str, n: usize, min: usize) -> Result<(), FamilyError> {
    if n < min {
        return Err(FamilyError::InvalidParameter {
            name: name.into(),
            reason: format!("needs at least {min} vertices"),
        });
    }
    if n > MAXN {
        return Err(FamilyError::InvalidParameter {
            name: name.into(),
            reason: format!("{n} vertices exceeds {MAXN}"),
        });
    }
    Ok(())
}

/// Path on `n` vertices, `n >= 1`.
pub fn path(n: usize) -> Result<Graph, FamilyError> {
    check_size("P", n, 1)?;
    Ok(Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))?)
}

/// Cycle on `n` vertices, `n >= 3`.
pub fn cycle(n: usize) -> Result<Graph, FamilyError> {
    check_size("C", n, 3)?;
    Ok(Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))?)
}

pub fn complete(n: usize) -> Result<Graph, FamilyError> {
    check_size("K", n, 1)?;
    Ok(Graph::empty(n)?.complement())
}

/// `K_{m,k}`: sides `0..m` and `m..m+k`.
pub fn complete_bipartite(m: usize, k: usize) -> Result<Graph, FamilyError> {
    if m == 0 || k == 0 {
        return Err(FamilyError::InvalidParameter {
            name: "K".into(),
            reason: "both sides must be non-empty".into(),
        });
    }
    check_size("K", m + k, 2)?;
    Ok(Graph::from_edges(
        m + k,
        (0..m).flat_map(|a| (m..m + k).map(move |b| (a, b))),
    )?)
}

/// Builds a graph from a lowercase token: `claw`, `bull`, `gem`,
/// `butterfly`, `2k2`, `pN`, `cN`, `kN`, `kM,N` (or `kM_N`).
pub fn named(token: &str) -> Result<NamedGraph, FamilyError> {
    let t = token.trim().to_ascii_lowercase();
    let unknown = || FamilyError::UnknownName(token.to_string());
    let num = |s: &str| s.parse::<usize>().map_err(|_| unknown());
    let (graph, degrees, edges): (Graph, Vec<usize>, usize) = match t.as_str() {
        "claw" => (claw(), vec![3, 1, 1, 1], 3),
        "bull" => (bull(), vec![3, 3, 2, 1, 1], 5),
        "gem" => (gem(), vec![4, 3, 3, 2, 2], 7),
        "butterfly" => (butterfly(), vec![4, 2, 2, 2, 2], 6),
        "2k2" => (two_k2(), vec![1; 4], 2),
        _ => {
            let (kind, rest) = t.split_at(1);
            if rest.is_empty() {
                return Err(unknown());
            }
            match kind {
                "p" => {
                    let n = num(rest)?;
                    let g = path(n)?;
                    let mut d = vec![0; n];
                    if n >= 2 {
                        d = std::iter::repeat_n(2, n - 2).chain([1, 1]).collect();
                    }
                    (g, d, n.saturating_sub(1))
                }
                "c" => {
                    let n = num(rest)?;
                    (cycle(n)?, vec![2; n], n)
                }
                "k" => match rest.split_once([',', '_']) {
                    Some((a, b)) => {
                        let (m, k) = (num(a)?, num(b)?);
                        let mut d: Vec<usize> = std::iter::repeat_n(k, m)
                            .chain(std::iter::repeat_n(m, k))
                            .collect();
                        d.sort_unstable_by(|x, y| y.cmp(x));
                        (complete_bipartite(m, k)?, d, m * k)
                    }
                    None => {
                        let n = num(rest)?;
                        (complete(n)?, vec![n - 1; n], n * (n - 1) / 2)
                    }
                },
                _ => return Err(unknown()),
            }
        }
    };
    debug_assert_eq!(graph.degree_sequence(), degrees, "{token}");
    debug_assert_eq!(graph.edge_count(), edges, "{token}");
    if graph.degree_sequence() != degrees || graph.edge_count() != edges {
        return Err(FamilyError::InvalidParameter {
            name: token.into(),
            reason: "construction mismatch".into(),
        });
    }
    Ok(NamedGraph { name: t, graph })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_examples() {
        assert_eq!(
            named("claw").unwrap().graph.degree_sequence(),
            vec![3, 1, 1, 1]
        );
        let b = named("bull").unwrap().graph;
        assert_eq!((b.n(), b.edge_count()), (5, 5));
        assert_eq!(b.degree_sequence(), vec![3, 3, 2, 1, 1]);
        let t = named("2K2").unwrap().graph;
        assert_eq!((t.n(), t.edge_count(), t.max_degree()), (4, 2, 1));
        assert_eq!(named("k2,3").unwrap().graph.edge_count(), 6);
        assert_eq!(
            named("k3_3").unwrap().graph,
            complete_bipartite(3, 3).unwrap()
        );
        assert_eq!(named("p1").unwrap().graph.n(), 1);
    }

    #[test]
    fn invalid_parameters() {
        assert!(matches!(
            named("c2"),
            Err(FamilyError::InvalidParameter { .. })
        ));
        assert!(matches!(
            named("c13"),
            Err(FamilyError::InvalidParameter { .. })
        ));
        assert!(matches!(
            named("p0"),
            Err(FamilyError::InvalidParameter { .. })
        ));
        assert!(matches!(
            named("k0,2"),
            Err(FamilyError::InvalidParameter { .. })
        ));
        assert_eq!(
            named("house"),
            Err(FamilyError::UnknownName("house".into()))
        );
        assert_eq!(named("c"), Err(FamilyError::UnknownName("c".into())));
        assert_eq!(named("cx"), Err(FamilyError::UnknownName("cx".into())));
    }
}
