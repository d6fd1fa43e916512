//! Strongly free and critically exist graphs, and critical edges.

use super::{fs, is_h_free, Family, Pattern};
use crate::canon::is_isomorphic;
use crate::error::{GraphError, HFreeError};
use crate::graph::{Edge, Graph, VertexSet};

/// Every single-edge contraction of the `fam`-free graph `g` is `fam`-free.
pub fn is_strongly_h_free(g: &Graph, fam: &Family) -> Result<bool, HFreeError> {
    if !is_h_free(g, fam) {
        return Err(HFreeError::NotFree);
    }
    Ok(g.contractions().all(|(_, c)| is_h_free(&c, fam)))
}

/// Same predicate decided by freeness from the free-split graphs of `fam`.
pub fn is_strongly_h_free_via_fs(
    g: &Graph,
    fam: &Family,
    fs_fam: &Family,
) -> Result<bool, HFreeError> {
    if !is_h_free(g, fam) {
        return Err(HFreeError::NotFree);
    }
    Ok(is_h_free(g, fs_fam))
}

/// `g` contains a member but no single-edge contraction does.
/// Graphs with isolated vertices are rejected.
pub fn is_critically_h_exist(g: &Graph, fam: &Family) -> Result<bool, HFreeError> {
    if g.has_isolated_vertex() {
        return Err(HFreeError::IsolatedVertex);
    }
    Ok(!is_h_free(g, fam) && g.contractions().all(|(_, c)| is_h_free(&c, fam)))
}

/// Image of `s` in `g / e`: `s` relabelled, with either endpoint replaced by
/// the merged vertex.
pub fn f_map(g: &Graph, e: Edge, s: VertexSet) -> Result<VertexSet, GraphError> {
    Ok(g.contract(e)?.map_set(s))
}

/// An edge `e` of `g` and a vertex set `s`; the reference graph is `g[s]`.
#[derive(Clone, Copy, Debug)]
pub struct CriticalEdgeQuery {
    pub g: Graph,
    pub s: VertexSet,
    pub e: Edge,
}

impl CriticalEdgeQuery {
    pub fn new(g: Graph, s: VertexSet, e: Edge) -> Result<Self, HFreeError> {
        if !s.is_subset(g.vertices()) {
            return Err(HFreeError::NotInduced);
        }
        if !g.has_edge(e.u(), e.v()) {
            return Err(GraphError::NotAnEdge(e.u(), e.v()).into());
        }
        Ok(CriticalEdgeQuery { g, s, e })
    }
}

/// Contracting `e` destroys the copy of `g[s]` carried by `s`.
pub fn is_h_critical_for(q: &CriticalEdgeQuery) -> bool {
    let reference = q.g.induced(q.s);
    let contracted =
        q.g.contract(q.e)
            .expect("query edge checked on construction");
    let image = contracted.graph.induced(contracted.map_set(q.s));
    !is_isomorphic(&image, &reference)
}

/// Local form of the same test: both endpoints lie in `s`, or exactly one
/// does and the outside endpoint is not corner-dominated by the inside one
/// within `g[s + outside]`.
pub fn is_h_critical_for_syntactic(q: &CriticalEdgeQuery) -> bool {
    let (a, b) = (q.e.u(), q.e.v());
    match (q.s.contains(a), q.s.contains(b)) {
        (true, true) => true,
        (false, false) => false,
        (a_in, _) => {
            let (outside, inside) = if a_in { (b, a) } else { (a, b) };
            let local = q.s.with(outside);
            let n_out = q.g.neighborhood(outside, true).intersection(local);
            let n_in = q.g.neighborhood(inside, true).intersection(local);
            !n_out.is_subset(n_in)
        }
    }
}

/// `e` is critical for every vertex set of `g` inducing `h`; vacuously true
/// when there is none.
pub fn is_h_critical_in(g: &Graph, h: &Graph, e: Edge) -> Result<bool, HFreeError> {
    if !g.has_edge(e.u(), e.v()) {
        return Err(GraphError::NotAnEdge(e.u(), e.v()).into());
    }
    Ok(Pattern::new(*h)
        .all_in(g)
        .into_iter()
        .all(|s| is_h_critical_for(&CriticalEdgeQuery { g: *g, s, e })))
}

/// The vertices outside `N[{u, v}]` form an independent set.
pub fn is_almost_dominating(g: &Graph, e: Edge) -> Result<bool, GraphError> {
    if !g.has_edge(e.u(), e.v()) {
        return Err(GraphError::NotAnEdge(e.u(), e.v()));
    }
    let rest = g
        .vertices()
        .difference(g.closed_set_neighborhood(e.endpoints()));
    Ok(g.is_independent(rest))
}

/// For a graph with exactly one vertex set inducing `h`, whether every edge
/// is critical for that set. `None` when the set is missing or not unique.
pub fn unique_criticality_check(g: &Graph, h: &Graph) -> Option<bool> {
    let sets = Pattern::new(*h).all_in(g);
    let [s] = sets.as_slice() else { return None };
    Some(
        g.edges()
            .all(|e| is_h_critical_for(&CriticalEdgeQuery { g: *g, s: *s, e })),
    )
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CharacterizationOutcome {
    /// `g` is free of the free-split graphs and not critically exist.
    pub applies: bool,
    /// `fam`-free iff every contraction is `fam`-free (only meaningful when `applies`).
    pub holds: bool,
}

/// Caches the free-split family so that many graphs can be checked.
#[derive(Clone, Debug)]
pub struct Characterizer {
    fam: Family,
    fs_fam: Family,
}

impl Characterizer {
    pub fn new(fam: Family) -> Result<Self, HFreeError> {
        let fs_fam = fs(&fam)?;
        Ok(Characterizer { fam, fs_fam })
    }

    pub fn free_split(&self) -> &Family {
        &self.fs_fam
    }

    pub fn check(&self, g: &Graph) -> CharacterizationOutcome {
        let free = is_h_free(g, &self.fam);
        let contractions_free = g.contractions().all(|(_, c)| is_h_free(&c, &self.fam));
        let critical = !free && contractions_free;
        let applies = is_h_free(g, &self.fs_fam) && !critical;
        CharacterizationOutcome {
            applies,
            holds: free == contractions_free,
        }
    }
}

pub fn characterization_check(
    g: &Graph,
    fam: &Family,
) -> Result<CharacterizationOutcome, HFreeError> {
    Ok(Characterizer::new(fam.clone())?.check(g))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::named::{bull, claw, complete, cycle, path, two_k2};

    fn e(a: usize, b: usize) -> Edge {
        Edge::new(a, b).unwrap()
    }

    #[test]
    fn strongly_free_examples() {
        let claws = Family::single(claw());
        assert!(is_strongly_h_free(&cycle(6).unwrap(), &claws).unwrap());
        assert!(!is_strongly_h_free(&bull(), &claws).unwrap());
        let c4 = Family::single(cycle(4).unwrap());
        assert!(!is_strongly_h_free(&cycle(5).unwrap(), &c4).unwrap());
        assert_eq!(
            is_strongly_h_free(&claw(), &claws),
            Err(HFreeError::NotFree)
        );
        let fs_claw = fs(&claws).unwrap();
        assert!(!is_strongly_h_free_via_fs(&bull(), &claws, &fs_claw).unwrap());
    }

    #[test]
    fn critically_exist_examples() {
        let c3 = cycle(3).unwrap();
        assert!(is_critically_h_exist(&c3, &Family::single(c3)).unwrap());
        assert!(is_critically_h_exist(&claw(), &Family::single(claw())).unwrap());
        assert!(is_critically_h_exist(&cycle(6).unwrap(), &Family::single(two_k2())).unwrap());
        assert!(!is_critically_h_exist(&cycle(7).unwrap(), &Family::single(two_k2())).unwrap());
        let iso = Graph::from_edges(4, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(
            is_critically_h_exist(&iso, &Family::single(path(3).unwrap())),
            Err(HFreeError::IsolatedVertex)
        );
    }

    #[test]
    fn f_map_cases() {
        let g = path(5).unwrap();
        let s = VertexSet::from_iter([0, 3, 4]);
        // endpoints outside s: plain relabel
        assert_eq!(
            f_map(&g, e(1, 2), s).unwrap(),
            VertexSet::from_iter([0, 2, 3])
        );
        // both endpoints inside: size drops by one
        assert_eq!(f_map(&g, e(3, 4), s).unwrap().len(), 2);
        // one endpoint inside: merged vertex present, size kept
        let img = f_map(&g, e(2, 3), s).unwrap();
        assert!(img.contains(2));
        assert_eq!(img.len(), 3);
        assert!(f_map(&g, e(0, 2), s).is_err());
    }

    #[test]
    fn critical_for_examples() {
        let g = two_k2();
        for edge in g.edges() {
            let q = CriticalEdgeQuery::new(g, g.vertices(), edge).unwrap();
            assert!(is_h_critical_for(&q));
            assert!(is_h_critical_for_syntactic(&q));
        }
        let p3 = path(3).unwrap();
        let q = CriticalEdgeQuery::new(p3, VertexSet::from_iter([0, 1]), e(1, 2)).unwrap();
        assert!(!is_h_critical_for(&q));
        assert!(!is_h_critical_for_syntactic(&q));
    }

    #[test]
    fn critical_in_examples() {
        let c5 = cycle(5).unwrap();
        assert!(is_h_critical_in(&c5, &two_k2(), e(0, 1)).unwrap());
        let c6 = cycle(6).unwrap();
        for edge in c6.edges() {
            assert!(is_h_critical_in(&c6, &two_k2(), edge).unwrap());
        }
    }

    #[test]
    fn unique_copy_check() {
        assert_eq!(unique_criticality_check(&two_k2(), &two_k2()), Some(true));
        // C6 has three copies of 2K2
        assert_eq!(
            unique_criticality_check(&cycle(6).unwrap(), &two_k2()),
            None
        );
        assert_eq!(
            unique_criticality_check(&cycle(5).unwrap(), &two_k2()),
            None
        );
        // P5 has the single copy {0,1,3,4}, broken by every contraction
        assert_eq!(
            unique_criticality_check(&path(5).unwrap(), &two_k2()),
            Some(true)
        );
    }

    #[test]
    fn almost_dominating_examples() {
        let k4 = complete(4).unwrap();
        assert!(k4.edges().all(|x| is_almost_dominating(&k4, x).unwrap()));
        assert!(!is_almost_dominating(&two_k2(), e(0, 1)).unwrap());
        let c5 = cycle(5).unwrap();
        assert!(c5.edges().all(|x| is_almost_dominating(&c5, x).unwrap()));
    }

    #[test]
    fn characterization_examples() {
        let claws = Family::single(claw());
        assert!(!characterization_check(&bull(), &claws).unwrap().applies);
        let r = characterization_check(&cycle(6).unwrap(), &claws).unwrap();
        assert!(r.applies && r.holds);
        let r = characterization_check(&cycle(6).unwrap(), &Family::single(two_k2())).unwrap();
        assert!(!r.applies);
    }
}
