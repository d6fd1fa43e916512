mod common;

use common::*;
use hcontract::canon::{automorphism_orbits, canonical_form, is_isomorphic};
use hcontract::enumerate::enumerate_graphs;
use hcontract::families::{bull, claw, complete, cycle, path, two_k2};
use hcontract::hfree::{
    is_h_critical_for, is_h_critical_in, is_h_free, CriticalEdgeQuery, Family, Pattern,
};
use hcontract::{parse_graph6, write_graph6, Edge, Graph};
use std::collections::HashSet;

#[test]
fn graph6_hand_decoded() {
    // 'C' is 67 - 63 = 4 vertices; '~' is 126 - 63 = 63 = 0b111111, all six pairs
    let k4 = parse_graph6("C~").unwrap();
    assert_eq!(k4, complete(4).unwrap());
    // n = 1: only the size byte, 63 + 1 = '@'
    assert_eq!(write_graph6(&complete(1).unwrap()).unwrap(), "@");
    assert_eq!(write_graph6(&Graph::empty(0).unwrap()).unwrap(), "?");
    // "D?{": n = 5, pairs in column order
    // (0,1)(0,2)(1,2)(0,3)(1,3)(2,3)(0,4)(1,4)(2,4)(3,4)
    let g = parse_graph6("D?{").unwrap();
    let expected = Graph::from_edges(5, [(0, 4), (1, 4), (2, 4), (3, 4)]).unwrap();
    // '?' = 0 covers the first six pairs, '{' = 60 = 111100 sets pairs 6..9
    assert_eq!(g, expected);
}

#[test]
fn eleven_classes_on_four_vertices() {
    let all = labelled(4);
    assert_eq!(all.len(), 64);
    let reps = classes_brute(&all);
    assert_eq!(reps.len(), 11);
    let forms: HashSet<_> = all.iter().map(canonical_form).collect();
    assert_eq!(forms.len(), 11);
    for (i, a) in reps.iter().enumerate() {
        for (j, b) in reps.iter().enumerate() {
            assert_eq!(is_isomorphic(a, b), i == j);
        }
    }
}

#[test]
fn class_counts_match_brute_force_quotient() {
    let space = enumerate_graphs(5, false).unwrap();
    let counts = space.counts_by_order();
    for (n, &count) in counts.iter().enumerate() {
        assert_eq!(count, classes_brute(&labelled(n)).len(), "n = {n}");
    }
    assert_eq!(counts, vec![1, 1, 2, 4, 11, 34]);
}

#[test]
fn orbits_match_brute_force_up_to_six() {
    for g in enumerate_graphs(6, false).unwrap().iter() {
        let ours: Vec<Vec<usize>> = automorphism_orbits(g)
            .into_iter()
            .map(|s| s.iter().collect())
            .collect();
        assert_eq!(ours, orbits_brute(g), "{g:?}");
    }
}

#[test]
fn bull_orbits() {
    let o = orbits_brute(&bull());
    assert_eq!(o.len(), 3);
    assert_eq!(automorphism_orbits(&bull()).len(), 3);
}

#[test]
fn canonical_forms_separate_classes_up_to_six() {
    // every pair at n = 5 checked against the permutation oracle
    let five: Vec<Graph> = enumerate_graphs(5, false)
        .unwrap()
        .iter()
        .filter(|g| g.n() == 5)
        .copied()
        .collect();
    for (i, a) in five.iter().enumerate() {
        for b in &five[i + 1..] {
            assert!(!iso_brute(a, b));
        }
    }
    let six = labelled(6);
    let forms: HashSet<_> = six.iter().map(canonical_form).collect();
    assert_eq!(forms.len(), 156);
}

#[test]
fn contraction_matches_recipe() {
    for g in enumerate_graphs(6, false).unwrap().iter() {
        let m = matrix(g);
        for e in g.edges() {
            let ours = g.contract(e).unwrap();
            let theirs = from_matrix(&contract_brute(&m, e.u(), e.v()));
            assert!(iso_brute(&ours.graph, &theirs), "{g:?} / {e}");
            // the documented labelling: merged at u, later vertices shift past v
            for x in (0..g.n()).filter(|&x| x != e.u() && x != e.v()) {
                let new = ours.relabel(x).unwrap();
                assert_eq!(new, if x < e.v() { x } else { x - 1 });
                assert_eq!(
                    ours.graph.has_edge(new, ours.merged),
                    m[x][e.u()] || m[x][e.v()]
                );
            }
        }
    }
}

#[test]
fn claw_contraction_is_p3() {
    let r = claw().contract(Edge::new(0, 1).unwrap()).unwrap();
    assert!(iso_brute(&r.graph, &path(3).unwrap()));
}

#[test]
fn complement_of_p4() {
    let p4 = path(4).unwrap();
    let m = matrix(&p4);
    let flipped: Matrix = (0..4)
        .map(|i| (0..4).map(|j| i != j && !m[i][j]).collect())
        .collect();
    assert_eq!(p4.complement(), from_matrix(&flipped));
    assert!(iso_brute(&p4.complement(), &p4));
}

#[test]
fn corner_domination_matches_set_inclusion() {
    for g in [
        cycle(4).unwrap(),
        complete(3).unwrap(),
        path(3).unwrap(),
        bull(),
    ] {
        let m = matrix(&g);
        for u in 0..g.n() {
            for v in (0..g.n()).filter(|&v| v != u) {
                let closed = |x: usize| -> Vec<usize> {
                    (0..g.n()).filter(|&y| y == x || m[x][y]).collect()
                };
                let incl = closed(u).iter().all(|y| closed(v).contains(y));
                assert_eq!(g.corner_dominated(u, v), incl);
            }
        }
    }
    let c4 = cycle(4).unwrap();
    assert!((0..4).all(|u| (0..4).all(|v| u == v || !c4.corner_dominated(u, v))));
}

#[test]
fn induced_search_matches_subset_enumeration() {
    let patterns = [
        claw(),
        two_k2(),
        path(4).unwrap(),
        cycle(4).unwrap(),
        bull(),
    ];
    for g in enumerate_graphs(6, true).unwrap().iter() {
        for h in &patterns {
            let brute = copies_brute(g, h);
            let ours: Vec<Vec<usize>> = Pattern::new(*h)
                .all_in(g)
                .into_iter()
                .map(|s| s.iter().collect())
                .collect();
            assert_eq!(ours, brute, "{g:?} {h:?}");
            // the reported witness is the lexicographically least copy
            let first: Option<Vec<usize>> = Pattern::new(*h).find_in(g).map(|s| s.iter().collect());
            assert_eq!(first.as_ref(), brute.first());
            assert_eq!(is_h_free(g, &Family::single(*h)), brute.is_empty());
        }
    }
}

#[test]
fn c6_every_edge_critical_for_every_2k2() {
    let c6 = cycle(6).unwrap();
    let copies = copies_brute(&c6, &two_k2());
    assert_eq!(copies.len(), 3);
    for e in c6.edges() {
        for s in &copies {
            let q = CriticalEdgeQuery::new(c6, s.iter().copied().collect(), e).unwrap();
            assert!(is_h_critical_for(&q));
        }
        assert!(is_h_critical_in(&c6, &two_k2(), e).unwrap());
    }
}

#[test]
fn p5_critical_edges_for_p4() {
    // copies of P4 in the path 0-1-2-3-4 are {0,1,2,3} and {1,2,3,4}
    let p5 = path(5).unwrap();
    let p4 = path(4).unwrap();
    let copies = copies_brute(&p5, &p4);
    assert_eq!(copies, vec![vec![0, 1, 2, 3], vec![1, 2, 3, 4]]);
    let m = matrix(&p5);
    for e in p5.edges() {
        // critical for S when the contracted image of S no longer induces P4
        let expected = copies.iter().all(|s| {
            let c = contract_brute(&m, e.u(), e.v());
            let k = c.len() - 1;
            let image: Vec<usize> = {
                let keep: Vec<usize> = (0..5).filter(|&x| x != e.u() && x != e.v()).collect();
                let mut v: Vec<usize> = s
                    .iter()
                    .filter_map(|x| keep.iter().position(|y| y == x))
                    .collect();
                if s.contains(&e.u()) || s.contains(&e.v()) {
                    v.push(k);
                }
                v.sort_unstable();
                v
            };
            !iso_brute(&induced_brute(&c, &image), &p4)
        });
        assert_eq!(is_h_critical_in(&p5, &p4, e).unwrap(), expected, "{e}");
    }
    // the end edges keep the other copy intact; the middle ones break both
    assert!(!is_h_critical_in(&p5, &p4, Edge::new(0, 1).unwrap()).unwrap());
    assert!(is_h_critical_in(&p5, &p4, Edge::new(1, 2).unwrap()).unwrap());
}

#[test]
fn vacuous_critical_in() {
    let k4 = complete(4).unwrap();
    for e in k4.edges() {
        assert!(is_h_critical_in(&k4, &two_k2(), e).unwrap());
    }
}
