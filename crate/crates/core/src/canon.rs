//! Canonical labelling, isomorphism and automorphism orbits for small graphs.
//!
//! The certificate of a graph is the lexicographically least upper-triangle
//! adjacency string (column-major, the order graph6 uses) over all vertex
//! orderings that list the cells of the stable colour-refinement partition in
//! a fixed order. Two search reductions keep this cheap at `n <= 12`: a prefix
//! that already exceeds the best string is abandoned, and of two unplaced
//! twins in the same cell only one is tried (swapping them is an automorphism
//! fixing everything placed so far).

use std::cmp::Ordering;

use crate::graph::{Graph, VertexSet, MAXN};

/// Isomorphism-class certificate. Equal iff the graphs are isomorphic.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct CanonicalForm {
    n: u8,
    code: u128,
}

impl CanonicalForm {
    pub fn n(&self) -> usize {
        self.n as usize
    }

    /// Fixed-length serialization: vertex count followed by 9 bytes of
    /// adjacency bits (66 used at `n = 12`), most significant first.
    pub fn to_bytes(&self) -> [u8; 10] {
        let mut out = [0u8; 10];
        out[0] = self.n;
        let nbits = self.n() * self.n().saturating_sub(1) / 2;
        // left-align so that byte order matches the string order
        let aligned = if nbits == 0 {
            0
        } else {
            self.code << (72 - nbits)
        };
        for (i, b) in out[1..].iter_mut().enumerate() {
            *b = (aligned >> (64 - 8 * i)) as u8;
        }
        out
    }
}

/// Certificate plus the relabelling that realises it.
#[derive(Clone, Debug)]
pub struct Labeling {
    pub form: CanonicalForm,
    /// `perm[v]` is the canonical position of vertex `v`.
    pub perm: Vec<usize>,
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    canonical_labeling(g).form
}

pub fn canonical_labeling(g: &Graph) -> Labeling {
    search(g, &vec![0; g.n()])
}

/// The graph relabelled into canonical order. Isomorphic inputs give equal outputs.
pub fn canonical_graph(g: &Graph) -> Graph {
    let lab = canonical_labeling(g);
    g.permute(&lab.perm)
}

pub fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.n() != h.n()
        || g.edge_count() != h.edge_count()
        || g.degree_sequence() != h.degree_sequence()
    {
        return false;
    }
    canonical_form(g) == canonical_form(h)
}

/// Orbits of the automorphism group, each listed once, ordered by least member.
pub fn automorphism_orbits(g: &Graph) -> Vec<VertexSet> {
    let n = g.n();
    let base = refine(g, &vec![0; n]);
    let mut orbits: Vec<VertexSet> = Vec::new();
    let mut seen = VertexSet::EMPTY;
    for u in 0..n {
        if seen.contains(u) {
            continue;
        }
        let cert_u = individualized_form(g, u);
        let mut orbit = VertexSet::singleton(u);
        for v in (u + 1)..n {
            if seen.contains(v) || base[v] != base[u] {
                continue;
            }
            if are_twins(g, u, v) || individualized_form(g, v) == cert_u {
                orbit.insert(v);
            }
        }
        seen = seen.union(orbit);
        orbits.push(orbit);
    }
    orbits
}

fn individualized_form(g: &Graph, v: usize) -> CanonicalForm {
    let mut colors = vec![0; g.n()];
    colors[v] = 1;
    search(g, &colors).form
}

/// `N(u) - {v} == N(v) - {u}`.
fn are_twins(g: &Graph, u: usize, v: usize) -> bool {
    g.row(u) & !(1 << v) == g.row(v) & !(1 << u)
}

/// Stable colour refinement. Colours are ranks of sorted signatures, so they
/// depend only on the isomorphism type of the coloured graph.
fn refine(g: &Graph, initial: &[u32]) -> Vec<u32> {
    let n = g.n();
    let mut colors = rank(initial.iter().map(|&c| vec![c]).collect());
    let mut classes = count_classes(&colors);
    loop {
        let sigs: Vec<Vec<u32>> = (0..n)
            .map(|v| {
                let mut s: Vec<u32> = VertexSet::from_bits(g.row(v))
                    .iter()
                    .map(|w| colors[w])
                    .collect();
                s.sort_unstable();
                s.insert(0, colors[v]);
                s
            })
            .collect();
        let next = rank(sigs);
        let next_classes = count_classes(&next);
        colors = next;
        if next_classes == classes {
            return colors;
        }
        classes = next_classes;
    }
}

fn rank(sigs: Vec<Vec<u32>>) -> Vec<u32> {
    let mut sorted = sigs.clone();
    sorted.sort();
    sorted.dedup();
    sigs.iter()
        .map(|s| sorted.binary_search(s).expect("present") as u32)
        .collect()
}

fn count_classes(colors: &[u32]) -> usize {
    let mut c = colors.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}

struct Search<'a> {
    g: &'a Graph,
    /// refined colour of each position, ascending
    slot_color: Vec<u32>,
    colors: Vec<u32>,
    placed: Vec<usize>,
    used: u16,
    cur: [u16; MAXN],
    best: Option<([u16; MAXN], Vec<usize>)>,
}

fn search(g: &Graph, initial: &[u32]) -> Labeling {
    let n = g.n();
    let colors = refine(g, initial);
    let mut slot_color = colors.clone();
    slot_color.sort_unstable();
    let mut s = Search {
        g,
        slot_color,
        colors,
        placed: Vec::with_capacity(n),
        used: 0,
        cur: [0; MAXN],
        best: None,
    };
    s.descend();
    let (cols, order) = s.best.unwrap_or(([0; MAXN], Vec::new()));
    let mut code: u128 = 0;
    for (pos, &col) in cols.iter().enumerate().take(n) {
        code = (code << pos) | col as u128;
    }
    let mut perm = vec![0; n];
    for (pos, &v) in order.iter().enumerate() {
        perm[v] = pos;
    }
    Labeling {
        form: CanonicalForm { n: n as u8, code },
        perm,
    }
}

impl Search<'_> {
    fn descend(&mut self) {
        let pos = self.placed.len();
        let n = self.g.n();
        if pos == n {
            let better = match &self.best {
                None => true,
                Some((b, _)) => self.cur[..n] < b[..n],
            };
            if better {
                self.best = Some((self.cur, self.placed.clone()));
            }
            return;
        }
        let want = self.slot_color[pos];
        let mut tried: u16 = 0;
        for x in 0..n {
            if self.used & (1 << x) != 0 || self.colors[x] != want {
                continue;
            }
            if VertexSet::from_bits(tried)
                .iter()
                .any(|y| are_twins(self.g, x, y))
            {
                continue;
            }
            tried |= 1 << x;
            let mut col = 0u16;
            for &p in &self.placed {
                col = (col << 1) | self.g.has_edge(p, x) as u16;
            }
            self.cur[pos] = col;
            if let Some((b, _)) = &self.best {
                if self.cur[..=pos].cmp(&b[..=pos]) == Ordering::Greater {
                    continue;
                }
            }
            self.placed.push(x);
            self.used |= 1 << x;
            self.descend();
            self.used &= !(1 << x);
            self.placed.pop();
        }
    }
}
