//! Vertex splitting, the inverse of edge contraction.

use log::debug;

use super::{is_h_free, Family};
use crate::canon::automorphism_orbits;
use crate::error::{GraphError, HFreeError};
use crate::graph::{Graph, VertexSet, MAXN};

/// Replace `v` in `host` by adjacent vertices `u`, `w` with `N(u) = U + w`
/// and `N(w) = W + u`, where `U ∪ W = N(v)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SplitSpec {
    pub host: Graph,
    pub v: usize,
    pub u_side: VertexSet,
    pub w_side: VertexSet,
}

/// Performs one split. The new `u` keeps index `v`; `w` is appended as the
/// last vertex, so contracting `{v, n}` in the result gives back `host`
/// with identical labels.
pub fn splitting_one(spec: &SplitSpec) -> Result<Graph, HFreeError> {
    let h = &spec.host;
    let n = h.n();
    if spec.v >= n {
        return Err(GraphError::VertexOutOfRange { vertex: spec.v, n }.into());
    }
    if spec.u_side.union(spec.w_side) != h.neighborhood(spec.v, false) {
        return Err(HFreeError::SplitCover);
    }
    if n + 1 > MAXN {
        return Err(GraphError::TooManyVertices(n + 1).into());
    }
    let mut rows = [0u16; MAXN];
    for (x, row) in rows.iter_mut().enumerate().take(n) {
        *row = h.row(x) & !(1 << spec.v);
    }
    let (u, w) = (spec.v, n);
    rows[u] = spec.u_side.bits() | (1 << w);
    rows[w] = spec.w_side.bits() | (1 << u);
    for x in spec.u_side {
        rows[x] |= 1 << u;
    }
    for x in spec.w_side {
        rows[x] |= 1 << w;
    }
    Ok(Graph::from_rows(&rows[..n + 1])?)
}

/// Every split of `v`, deduplicated. Each neighbour goes to `U` only, `W`
/// only, or both, so `3^deg(v)` ordered pairs are generated.
pub fn splitting_vertex(h: &Graph, v: usize) -> Result<Family, HFreeError> {
    let nbrs: Vec<usize> = h.neighborhood(v, false).iter().collect();
    if nbrs.is_empty() {
        return Err(HFreeError::IsolatedSplitVertex(v));
    }
    let mut out = Family::default();
    let total = 3usize.pow(nbrs.len() as u32);
    for mut code in 0..total {
        let (mut u_side, mut w_side) = (VertexSet::EMPTY, VertexSet::EMPTY);
        for &x in &nbrs {
            match code % 3 {
                0 => u_side.insert(x),
                1 => w_side.insert(x),
                _ => {
                    u_side.insert(x);
                    w_side.insert(x);
                }
            }
            code /= 3;
        }
        out.insert(splitting_one(&SplitSpec {
            host: *h,
            v,
            u_side,
            w_side,
        })?);
    }
    Ok(out)
}

/// Union of the splits of one vertex per automorphism orbit.
/// Isolated vertices are skipped.
pub fn splitting_graph(h: &Graph) -> Result<Family, HFreeError> {
    let mut out = Family::default();
    for orbit in automorphism_orbits(h) {
        let v = orbit.first().expect("orbits are non-empty");
        if h.degree(v) == 0 {
            debug!("skipping isolated vertex {v} when splitting");
            continue;
        }
        for g in splitting_vertex(h, v)?.members() {
            out.insert(*g);
        }
    }
    Ok(out)
}

pub fn splitting_family(fam: &Family) -> Result<Family, HFreeError> {
    let mut out = Family::default();
    for h in fam.members() {
        for g in splitting_graph(h)?.members() {
            out.insert(*g);
        }
    }
    Ok(out)
}

/// The free-split graphs of `fam`: splits of members that are themselves `fam`-free.
pub fn fs(fam: &Family) -> Result<Family, HFreeError> {
    Ok(splitting_family(fam)?
        .members()
        .filter(|g| is_h_free(g, fam))
        .copied()
        .collect())
}

/// Some single-edge contraction of `g` is isomorphic to a member.
pub fn is_h_split(g: &Graph, fam: &Family) -> bool {
    g.contractions().any(|(_, c)| fam.contains_isomorph(&c))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::is_isomorphic;
    use crate::families::named::{bull, claw, complete, cycle, path, two_k2};
    use crate::graph::Edge;

    fn spec(host: Graph, v: usize, u: &[usize], w: &[usize]) -> SplitSpec {
        SplitSpec {
            host,
            v,
            u_side: u.iter().copied().collect(),
            w_side: w.iter().copied().collect(),
        }
    }

    #[test]
    fn split_triangle_gives_c4() {
        let g = splitting_one(&spec(cycle(3).unwrap(), 0, &[1], &[2])).unwrap();
        assert!(is_isomorphic(&g, &cycle(4).unwrap()));
    }

    #[test]
    fn split_then_contract_is_identity() {
        let h = bull();
        let g = splitting_one(&spec(h, 1, &[0, 2], &[2, 3])).unwrap();
        let back = g.contract(Edge::new(1, 5).unwrap()).unwrap();
        assert_eq!(back.graph, h);
    }

    #[test]
    fn degree_one_split_has_no_free_member() {
        let k2 = complete(2).unwrap();
        let all = splitting_vertex(&k2, 0).unwrap();
        // U = W = {1} gives K3; one side empty gives P3
        assert_eq!(all, Family::new([complete(3).unwrap(), path(3).unwrap()]));
        assert!(all.members().all(|g| !is_h_free(g, &Family::single(k2))));
    }

    #[test]
    fn full_side_split_is_not_free() {
        let c5 = cycle(5).unwrap();
        let g = splitting_one(&spec(c5, 0, &[1, 4], &[])).unwrap();
        assert_eq!(g.degree(5), 1);
        assert!(!is_h_free(&g, &Family::single(c5)));
    }

    #[test]
    fn cover_and_isolated_errors() {
        assert_eq!(
            splitting_one(&spec(cycle(4).unwrap(), 0, &[1], &[])),
            Err(HFreeError::SplitCover)
        );
        assert_eq!(
            splitting_one(&spec(cycle(4).unwrap(), 0, &[1, 2], &[3])),
            Err(HFreeError::SplitCover)
        );
        let g = Graph::from_edges(3, [(0, 1)]).unwrap();
        assert_eq!(
            splitting_vertex(&g, 2),
            Err(HFreeError::IsolatedSplitVertex(2))
        );
        assert_eq!(
            splitting_graph(&g).unwrap(),
            splitting_vertex(&g, 0).unwrap()
        );
    }

    #[test]
    fn splitting_2k2() {
        let s = splitting_graph(&two_k2()).unwrap();
        let expected = Family::new([
            complete(2)
                .unwrap()
                .disjoint_union(&cycle(3).unwrap())
                .unwrap(),
            complete(2)
                .unwrap()
                .disjoint_union(&path(3).unwrap())
                .unwrap(),
        ]);
        assert_eq!(s, expected);
    }

    #[test]
    fn claw_free_split_is_bull() {
        assert_eq!(fs(&Family::single(claw())).unwrap(), Family::single(bull()));
        assert!(is_h_split(&bull(), &Family::single(claw())));
        assert!(!is_h_split(&cycle(5).unwrap(), &Family::single(claw())));
    }
}
