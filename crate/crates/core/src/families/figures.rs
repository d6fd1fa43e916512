//! Transcribed graph lists: the split graphs of claw, C4 and C5, and the
//! critically exist graphs of each forbidden family.
//!
//! A member is a fixed base graph plus zero or more blow-up classes. Every
//! vertex of a class has exactly the class's neighbourhood in the base and no
//! other neighbours, so classes are independent sets. Each class may be
//! empty; see the decisions recorded alongside the corpus for why.

use std::fmt;

use super::named::{claw, cycle, path, two_k2};
use super::recognize::{pseudo_split_family, split_family, threshold_family};
use crate::canon::canonical_form;
use crate::error::FamilyError;
use crate::graph::{Graph, VertexSet, MAXN};
use crate::hfree::Family;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Figure {
    ClawSplit,
    CriticalClaw,
    Critical2K2,
    C4Split,
    CriticalP4,
    CriticalC4,
    C5Split,
    CriticalC5,
    CriticalNonSplit,
    CriticalNonPseudoSplit,
    /// The source caption misspells this as "non-thershold".
    CriticalNonThreshold,
}

impl Figure {
    pub const ALL: [Figure; 11] = [
        Figure::ClawSplit,
        Figure::CriticalClaw,
        Figure::Critical2K2,
        Figure::C4Split,
        Figure::CriticalP4,
        Figure::CriticalC4,
        Figure::C5Split,
        Figure::CriticalC5,
        Figure::CriticalNonSplit,
        Figure::CriticalNonPseudoSplit,
        Figure::CriticalNonThreshold,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Figure::ClawSplit => "claw_split",
            Figure::CriticalClaw => "critical_claw",
            Figure::Critical2K2 => "critical_2k2",
            Figure::C4Split => "c4_split",
            Figure::CriticalP4 => "critical_p4",
            Figure::CriticalC4 => "critical_c4",
            Figure::C5Split => "c5_split",
            Figure::CriticalC5 => "critical_c5",
            Figure::CriticalNonSplit => "critical_non_split",
            Figure::CriticalNonPseudoSplit => "critical_non_pseudo_split",
            Figure::CriticalNonThreshold => "critical_non_threshold",
        }
    }

    pub fn from_id(id: &str) -> Result<Figure, FamilyError> {
        Figure::ALL
            .into_iter()
            .find(|f| f.id() == id)
            .ok_or_else(|| FamilyError::UnknownFigure(id.to_string()))
    }

    pub fn caption(self) -> &'static str {
        match self {
            Figure::ClawSplit => "claw-split graphs",
            Figure::CriticalClaw => "critically claw-exist graphs",
            Figure::Critical2K2 => "critically 2K2-exist graphs",
            Figure::C4Split => "C4-split graphs",
            Figure::CriticalP4 => "critically P4-exist graphs",
            Figure::CriticalC4 => "critically C4-exist graphs",
            Figure::C5Split => "C5-split graphs",
            Figure::CriticalC5 => "critically C5-exist graphs",
            Figure::CriticalNonSplit => "critically non-split graphs",
            Figure::CriticalNonPseudoSplit => "critically non-pseudo-split graphs",
            Figure::CriticalNonThreshold => "critically non-threshold graphs",
        }
    }

    /// For split lists, the graph whose splittings are listed.
    pub fn split_host(self) -> Option<Graph> {
        match self {
            Figure::ClawSplit => Some(claw()),
            Figure::C4Split => cycle(4).ok(),
            Figure::C5Split => cycle(5).ok(),
            _ => None,
        }
    }

    /// For critically-exist lists, the forbidden family.
    pub fn forbidden(self) -> Option<Family> {
        match self {
            Figure::CriticalClaw => Some(Family::single(claw())),
            Figure::Critical2K2 => Some(Family::single(two_k2())),
            Figure::CriticalP4 => path(4).ok().map(Family::single),
            Figure::CriticalC4 => cycle(4).ok().map(Family::single),
            Figure::CriticalC5 => cycle(5).ok().map(Family::single),
            Figure::CriticalNonSplit => Some(split_family()),
            Figure::CriticalNonPseudoSplit => Some(pseudo_split_family()),
            Figure::CriticalNonThreshold => Some(threshold_family()),
            _ => None,
        }
    }

    pub fn members(self) -> &'static [Member] {
        match self {
            Figure::ClawSplit => CLAW_SPLIT,
            Figure::CriticalClaw => CRITICAL_CLAW,
            Figure::Critical2K2 => CRITICAL_2K2,
            Figure::C4Split => C4_SPLIT,
            Figure::CriticalP4 => CRITICAL_P4,
            Figure::CriticalC4 => CRITICAL_C4,
            Figure::C5Split => C5_SPLIT,
            Figure::CriticalC5 => CRITICAL_C5,
            Figure::CriticalNonSplit => NON_SPLIT,
            Figure::CriticalNonPseudoSplit => NON_PSEUDO_SPLIT,
            Figure::CriticalNonThreshold => NON_THRESHOLD,
        }
    }
}

impl fmt::Display for Figure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

/// A blow-up class: any number of independent vertices adjacent to exactly `nbrs`.
#[derive(Clone, Copy, Debug)]
pub struct Class {
    pub name: char,
    pub nbrs: &'static [usize],
    pub min: usize,
}

#[derive(Clone, Copy, Debug)]
pub struct Member {
    pub label: &'static str,
    pub n: usize,
    pub edges: &'static [(usize, usize)],
    pub classes: &'static [Class],
}

impl Member {
    /// The member with class `i` holding `counts[i]` vertices.
    pub fn instantiate(&self, counts: &[usize]) -> Result<Graph, FamilyError> {
        assert_eq!(counts.len(), self.classes.len(), "one count per class");
        let total = self.n + counts.iter().sum::<usize>();
        if total > MAXN {
            return Err(FamilyError::BoundTooLarge(total));
        }
        let mut g = Graph::from_edges(self.n, self.edges.iter().copied())?;
        for (class, &count) in self.classes.iter().zip(counts) {
            let nbrs: VertexSet = class.nbrs.iter().copied().collect();
            for _ in 0..count {
                g = g.add_vertex(nbrs)?;
            }
        }
        Ok(g)
    }

    /// Count vectors with every class at or above its minimum and at most
    /// `max_vertices` vertices in total, in lexicographic order.
    pub fn parameter_vectors(&self, max_vertices: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mins: usize = self.classes.iter().map(|c| c.min).sum();
        if self.n + mins > max_vertices {
            return out;
        }
        let mut cur: Vec<usize> = self.classes.iter().map(|c| c.min).collect();
        fn rec(
            m: &Member,
            i: usize,
            budget: usize,
            cur: &mut Vec<usize>,
            out: &mut Vec<Vec<usize>>,
        ) {
            if i == m.classes.len() {
                out.push(cur.clone());
                return;
            }
            let min = m.classes[i].min;
            for extra in 0..=budget {
                cur[i] = min + extra;
                rec(m, i + 1, budget - extra, cur, out);
            }
            cur[i] = min;
        }
        rec(self, 0, max_vertices - self.n - mins, &mut cur, &mut out);
        out
    }
}

/// One generated graph with the member and class sizes that produced it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FigureInstance {
    pub member: &'static str,
    pub params: Vec<(char, usize)>,
    pub graph: Graph,
}

impl FigureInstance {
    /// `H5 W=1 X=0 Y=2`, or just the label for fixed members.
    pub fn describe(&self) -> String {
        let mut s = self.member.to_string();
        for (name, count) in &self.params {
            s.push_str(&format!(" {name}={count}"));
        }
        s
    }
}

/// All instances on at most `max_vertices` vertices, one per isomorphism
/// class (the first generated is kept), in member then parameter order.
pub fn figure_graphs(fig: Figure, max_vertices: usize) -> Result<Vec<FigureInstance>, FamilyError> {
    if max_vertices > MAXN {
        return Err(FamilyError::BoundTooLarge(max_vertices));
    }
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::new();
    for m in fig.members() {
        for counts in m.parameter_vectors(max_vertices) {
            let graph = m.instantiate(&counts)?;
            debug_assert!(!graph.has_isolated_vertex(), "{} {:?}", m.label, counts);
            if seen.insert(canonical_form(&graph)) {
                let params = m.classes.iter().map(|c| c.name).zip(counts).collect();
                out.push(FigureInstance {
                    member: m.label,
                    params,
                    graph,
                });
            }
        }
    }
    Ok(out)
}

pub fn figure_family(fig: Figure, max_vertices: usize) -> Result<Family, FamilyError> {
    Ok(figure_graphs(fig, max_vertices)?
        .into_iter()
        .map(|i| i.graph)
        .collect())
}

const fn class(name: char, nbrs: &'static [usize]) -> Class {
    Class { name, nbrs, min: 0 }
}

const fn fixed(label: &'static str, n: usize, edges: &'static [(usize, usize)]) -> Member {
    Member {
        label,
        n,
        edges,
        classes: &[],
    }
}

const C4: &[(usize, usize)] = &[(0, 1), (1, 2), (2, 3), (3, 0)];
const C5: &[(usize, usize)] = &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)];
const C6: &[(usize, usize)] = &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)];
const TWO_K2: &[(usize, usize)] = &[(0, 1), (2, 3)];
const P4: &[(usize, usize)] = &[(0, 1), (1, 2), (2, 3)];

// C4 with any number of extra vertices on one diagonal pair: K2,m for m >= 2.
const C4_DIAGONAL: Member = Member {
    label: "H1",
    n: 4,
    edges: C4,
    classes: &[class('A', &[1, 3])],
};
const WHEEL4: &[(usize, usize)] = &[
    (0, 1),
    (1, 2),
    (2, 3),
    (3, 0),
    (4, 0),
    (4, 1),
    (4, 2),
    (4, 3),
];
// C6 plus six chords: K2,2,2
const OCTAHEDRON: &[(usize, usize)] = &[
    (0, 1),
    (1, 2),
    (2, 3),
    (3, 4),
    (4, 5),
    (5, 0),
    (2, 0),
    (4, 0),
    (1, 3),
    (5, 3),
    (1, 5),
    (2, 4),
];
const P5: &[(usize, usize)] = &[(0, 1), (1, 4), (4, 2), (2, 3)];
// triangle 2-3-4 with the path 4-1-0 hanging off it
const TRIANGLE_TAIL: &[(usize, usize)] = &[(0, 1), (1, 4), (4, 2), (2, 3), (3, 4)];
const BUTTERFLY: &[(usize, usize)] = &[(0, 1), (1, 4), (4, 2), (2, 3), (3, 4), (4, 0)];

static CLAW_SPLIT: &[Member] = &[
    fixed("H1", 5, &[(2, 0), (0, 1), (1, 2), (2, 3), (3, 0), (0, 4)]),
    fixed("H2", 5, &[(0, 2), (2, 1), (1, 0), (0, 3), (4, 0)]),
    fixed("H3", 5, &[(2, 0), (0, 1), (3, 0), (0, 4)]),
    fixed("H4", 5, &[(2, 1), (1, 0), (0, 3), (4, 0)]),
    fixed("H5", 5, &[(0, 1), (1, 3), (3, 0), (2, 1), (3, 4)]),
    fixed(
        "H6",
        5,
        &[(0, 1), (1, 3), (3, 0), (3, 2), (2, 1), (3, 4), (4, 1)],
    ),
];

// claw centre 0, leaves 1, 2, 3
static CRITICAL_CLAW: &[Member] = &[
    fixed("H1", 4, &[(0, 1), (0, 2), (0, 3)]),
    fixed("H2", 5, &[(0, 1), (0, 2), (0, 3), (4, 1), (4, 2), (4, 3)]),
    fixed(
        "H3",
        6,
        &[
            (0, 1),
            (0, 2),
            (0, 3),
            (4, 1),
            (4, 2),
            (4, 3),
            (5, 1),
            (5, 2),
            (5, 3),
        ],
    ),
    fixed("H4", 5, &[(0, 1), (0, 2), (0, 3), (4, 2), (4, 3)]),
    fixed(
        "H5",
        6,
        &[(0, 1), (0, 2), (0, 3), (4, 2), (4, 3), (5, 1), (5, 2)],
    ),
    fixed(
        "H6",
        6,
        &[
            (0, 1),
            (0, 2),
            (0, 3),
            (4, 1),
            (4, 2),
            (4, 3),
            (5, 2),
            (5, 3),
        ],
    ),
];

// 2K2 on r=0, s=1, t=2, u=3 with edges rs, tu
static CRITICAL_2K2: &[Member] = &[
    fixed("H1", 6, C6),
    fixed(
        "H2",
        6,
        &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 2)],
    ),
    fixed(
        "H3",
        6,
        &[
            (0, 1),
            (1, 2),
            (2, 3),
            (3, 4),
            (4, 5),
            (5, 0),
            (0, 2),
            (5, 3),
        ],
    ),
    fixed(
        "H4",
        7,
        &[
            (0, 1),
            (1, 2),
            (2, 3),
            (3, 4),
            (4, 0),
            (0, 5),
            (5, 6),
            (3, 6),
            (6, 2),
        ],
    ),
    Member {
        label: "H5",
        n: 4,
        edges: TWO_K2,
        classes: &[
            class('W', &[1, 2, 3]),
            class('X', &[0, 2, 3]),
            class('Y', &[0, 1, 2, 3]),
        ],
    },
    Member {
        label: "H6",
        n: 4,
        edges: TWO_K2,
        classes: &[
            class('W', &[1, 2]),
            class('X', &[0, 2]),
            class('Y', &[0, 1, 2]),
            class('Z', &[0, 1, 2, 3]),
        ],
    },
];

static C4_SPLIT: &[Member] = &[
    fixed("H1", 5, C5),
    fixed(
        "H2",
        5,
        &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2), (1, 3)],
    ),
    fixed("H3", 5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)]),
    fixed("H4", 5, &[(1, 2), (2, 3), (3, 4), (4, 0), (0, 2)]),
];

static C5_SPLIT: &[Member] = &[
    fixed("H1", 6, C6),
    fixed(
        "H2",
        6,
        &[
            (0, 1),
            (1, 2),
            (2, 3),
            (3, 4),
            (4, 5),
            (5, 0),
            (0, 2),
            (1, 3),
        ],
    ),
    fixed(
        "H3",
        6,
        &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 2)],
    ),
    fixed("H4", 6, &[(1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 2)]),
];

// P4 r=0, s=1, t=2, u=3
static CRITICAL_P4: &[Member] = &[
    fixed("H1", 5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]),
    fixed("H2", 5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (4, 1)]),
    fixed(
        "H3",
        6,
        &[
            (0, 1),
            (1, 2),
            (2, 3),
            (3, 4),
            (4, 0),
            (4, 1),
            (0, 5),
            (5, 2),
            (5, 3),
        ],
    ),
    Member {
        label: "H4",
        n: 4,
        edges: P4,
        classes: &[class('A', &[0, 2])],
    },
    Member {
        label: "H5",
        n: 4,
        edges: P4,
        classes: &[class('A', &[0, 1, 2, 3])],
    },
];

static CRITICAL_C4: &[Member] = &[
    C4_DIAGONAL,
    fixed("H2", 5, WHEEL4),
    fixed("H3", 6, OCTAHEDRON),
];

// C5 r=0, s=1, t=2, u=3, v=4
static CRITICAL_C5: &[Member] = &[
    fixed(
        "H1",
        7,
        &[
            (0, 1),
            (1, 2),
            (2, 3),
            (3, 4),
            (4, 0),
            (5, 0),
            (5, 2),
            (5, 3),
            (6, 1),
            (6, 2),
            (6, 3),
            (6, 4),
        ],
    ),
    Member {
        label: "H2",
        n: 7,
        edges: &[
            (0, 1),
            (1, 2),
            (2, 3),
            (3, 4),
            (4, 0),
            (5, 4),
            (5, 2),
            (5, 1),
            (6, 3),
            (6, 1),
            (6, 0),
        ],
        classes: &[class('Y', &[1, 4, 3])],
    },
    Member {
        label: "H3",
        n: 7,
        edges: &[
            (0, 1),
            (1, 2),
            (2, 3),
            (3, 4),
            (4, 0),
            (5, 1),
            (5, 0),
            (5, 3),
            (5, 4),
            (6, 0),
            (6, 3),
            (6, 4),
            (6, 2),
        ],
        classes: &[class('Y', &[4, 2, 1])],
    },
    Member {
        label: "H4",
        n: 5,
        edges: C5,
        classes: &[
            class('W', &[4, 2]),
            class('X', &[2, 0]),
            class('Y', &[2, 0, 4]),
        ],
    },
    Member {
        label: "H5",
        n: 5,
        edges: C5,
        classes: &[
            class('W', &[4, 2]),
            class('Z', &[2, 1, 0, 4]),
            class('X', &[4, 2, 1]),
            class('Y', &[2, 0, 4]),
        ],
    },
    Member {
        label: "H6",
        n: 5,
        edges: C5,
        classes: &[
            class('A', &[0, 1, 2, 3, 4]),
            class('Y', &[4, 3, 2, 1]),
            class('Z', &[2, 1, 0, 4]),
            class('W', &[4, 2, 1]),
            class('X', &[2, 0, 4]),
        ],
    },
];

static NON_SPLIT: &[Member] = &[
    C4_DIAGONAL,
    fixed("H2", 5, WHEEL4),
    fixed("H3", 6, OCTAHEDRON),
    fixed("H4", 4, TWO_K2),
    fixed("H5", 5, P5),
    fixed("H6", 5, TRIANGLE_TAIL),
    fixed("H7", 5, BUTTERFLY),
];

static NON_PSEUDO_SPLIT: &[Member] = &[
    C4_DIAGONAL,
    fixed("H2", 5, WHEEL4),
    fixed("H3", 6, OCTAHEDRON),
    fixed("H4", 6, C6),
    fixed("H5", 4, TWO_K2),
    fixed("H6", 5, P5),
    fixed("H7", 5, TRIANGLE_TAIL),
    fixed("H8", 5, BUTTERFLY),
];

static NON_THRESHOLD: &[Member] = &[
    C4_DIAGONAL,
    fixed("H2", 5, WHEEL4),
    fixed("H3", 6, OCTAHEDRON),
    fixed("H4", 4, TWO_K2),
    fixed("H5", 4, P4),
    fixed(
        "H6",
        5,
        &[(1, 4), (4, 0), (0, 1), (1, 2), (2, 3), (3, 4), (4, 2)],
    ),
    fixed("H7", 5, BUTTERFLY),
];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_round_trip() {
        for f in Figure::ALL {
            assert_eq!(Figure::from_id(f.id()).unwrap(), f);
        }
        assert!(Figure::from_id("fig3").is_err());
    }

    #[test]
    fn critical_claw_has_six_fixed_graphs() {
        let g = figure_graphs(Figure::CriticalClaw, 9).unwrap();
        assert_eq!(g.len(), 6);
        assert_eq!(g[1].graph.edge_count(), 6);
    }

    #[test]
    fn parameter_vectors_respect_bound() {
        let m = &CRITICAL_2K2[4];
        let v = m.parameter_vectors(6);
        // counts summing to at most 2 over three classes
        assert_eq!(v.len(), 10);
        assert_eq!(v[0], vec![0, 0, 0]);
        assert!(m.parameter_vectors(3).is_empty());
    }

    #[test]
    fn p4_diagonal_family_grows_by_one() {
        let inst: Vec<_> = figure_graphs(Figure::CriticalP4, 9)
            .unwrap()
            .into_iter()
            .filter(|i| i.member == "H4")
            .collect();
        let sizes: Vec<usize> = inst.iter().map(|i| i.graph.n()).collect();
        assert_eq!(sizes, vec![4, 5, 6, 7, 8, 9]);
    }

    #[test]
    fn bound_errors() {
        assert_eq!(
            figure_graphs(Figure::CriticalC5, 13),
            Err(FamilyError::BoundTooLarge(13))
        );
        assert_eq!(
            CRITICAL_C5[5].instantiate(&[2, 2, 2, 0, 0]).unwrap().n(),
            11
        );
        assert_eq!(
            CRITICAL_C5[5].instantiate(&[3, 2, 2, 1, 0]),
            Err(FamilyError::BoundTooLarge(13))
        );
    }

    #[test]
    fn instances_have_no_isolated_vertices() {
        for f in Figure::ALL {
            for i in figure_graphs(f, 9).unwrap() {
                assert!(!i.graph.has_isolated_vertex(), "{f} {}", i.describe());
            }
        }
    }
}
