//! Forbidden-subgraph families and their behaviour under edge contraction.

mod critical;
mod search;
mod splitting;

pub use critical::{
    characterization_check, f_map, is_almost_dominating, is_critically_h_exist, is_h_critical_for,
    is_h_critical_for_syntactic, is_h_critical_in, is_strongly_h_free, is_strongly_h_free_via_fs,
    unique_criticality_check, CharacterizationOutcome, Characterizer, CriticalEdgeQuery,
};
pub(crate) use search::permutations;
pub use search::Pattern;
pub use splitting::{
    fs, is_h_split, splitting_family, splitting_graph, splitting_one, splitting_vertex, SplitSpec,
};

use std::collections::HashSet;
use std::fmt;

use crate::canon::CanonicalForm;
use crate::graph::{Graph, VertexSet};

/// A set of pairwise non-isomorphic graphs, kept in insertion order.
#[derive(Clone, Default)]
pub struct Family {
    patterns: Vec<Pattern>,
}

impl Family {
    /// Collects graphs, dropping any isomorphic to an earlier one.
    pub fn new<I: IntoIterator<Item = Graph>>(graphs: I) -> Self {
        let mut f = Family::default();
        for g in graphs {
            f.insert(g);
        }
        f
    }

    pub fn single(g: Graph) -> Self {
        Family::new([g])
    }

    /// Adds `g` unless an isomorphic member exists. Returns whether it was added.
    pub fn insert(&mut self, g: Graph) -> bool {
        let p = Pattern::new(g);
        if self.patterns.iter().any(|q| q.form() == p.form()) {
            return false;
        }
        self.patterns.push(p);
        true
    }

    pub fn len(&self) -> usize {
        self.patterns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.patterns.is_empty()
    }

    pub fn members(&self) -> impl Iterator<Item = &Graph> + '_ {
        self.patterns.iter().map(|p| p.graph())
    }

    pub fn patterns(&self) -> &[Pattern] {
        &self.patterns
    }

    pub fn contains_isomorph(&self, g: &Graph) -> bool {
        let form = crate::canon::canonical_form(g);
        self.patterns.iter().any(|p| p.form() == form)
    }

    /// Canonical forms of the members, sorted.
    pub fn forms(&self) -> Vec<CanonicalForm> {
        let mut v: Vec<CanonicalForm> = self.patterns.iter().map(|p| p.form()).collect();
        v.sort();
        v
    }

    pub fn union(&self, other: &Family) -> Family {
        Family::new(self.members().chain(other.members()).copied())
    }
}

/// Order-insensitive: equal iff the members agree up to isomorphism.
impl PartialEq for Family {
    fn eq(&self, other: &Self) -> bool {
        self.forms() == other.forms()
    }
}

impl Eq for Family {}

impl fmt::Debug for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.members()).finish()
    }
}

impl FromIterator<Graph> for Family {
    fn from_iter<I: IntoIterator<Item = Graph>>(iter: I) -> Self {
        Family::new(iter)
    }
}

/// A subset of the host inducing a family member.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Witness {
    pub vertices: VertexSet,
    /// index of the induced member within the family
    pub member: usize,
}

pub fn is_h_free(g: &Graph, fam: &Family) -> bool {
    !fam.patterns.iter().any(|p| p.occurs_in(g))
}

/// The lexicographically least vertex subset (ascending index lists
/// compared element-wise) that induces any member.
pub fn find_induced(g: &Graph, fam: &Family) -> Option<Witness> {
    fam.patterns
        .iter()
        .enumerate()
        .filter_map(|(member, p)| p.find_in(g).map(|vertices| Witness { vertices, member }))
        .min_by(|a, b| a.vertices.iter().cmp(b.vertices.iter()))
}

/// Members that contain no other member as an induced subgraph.
pub fn elm(fam: &Family) -> Family {
    let kept = fam.patterns.iter().enumerate().filter(|(i, p)| {
        !fam.patterns
            .iter()
            .enumerate()
            .any(|(j, q)| j != *i && q.graph().n() <= p.graph().n() && q.occurs_in(p.graph()))
    });
    Family {
        patterns: kept.map(|(_, p)| p.clone()).collect(),
    }
}

/// Canonical forms of every graph in the family, for set comparisons.
pub fn form_set(fam: &Family) -> HashSet<CanonicalForm> {
    fam.patterns.iter().map(|p| p.form()).collect()
}
