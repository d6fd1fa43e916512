//! Brute-force oracles that share no code with the library's search.

#![allow(dead_code)]

use hcontract::Graph;

pub type Matrix = Vec<Vec<bool>>;

pub fn matrix(g: &Graph) -> Matrix {
    (0..g.n())
        .map(|i| (0..g.n()).map(|j| g.has_edge(i, j)).collect())
        .collect()
}

pub fn from_matrix(m: &Matrix) -> Graph {
    let n = m.len();
    let edges = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .filter(|&(i, j)| m[i][j]);
    Graph::from_edges(n, edges).unwrap()
}

/// Every ordering of `0..n`, by recursion.
pub fn all_perms(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in all_perms(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// `perm` maps vertices of `a` to vertices of `b`.
pub fn preserves(a: &Matrix, b: &Matrix, perm: &[usize]) -> bool {
    let n = a.len();
    (0..n).all(|i| (0..n).all(|j| a[i][j] == b[perm[i]][perm[j]]))
}

pub fn iso_brute(a: &Graph, b: &Graph) -> bool {
    if a.n() != b.n() || a.edge_count() != b.edge_count() {
        return false;
    }
    let (ma, mb) = (matrix(a), matrix(b));
    all_perms(a.n()).iter().any(|p| preserves(&ma, &mb, p))
}

/// Orbits as sorted vertex lists, ordered by least member.
pub fn orbits_brute(g: &Graph) -> Vec<Vec<usize>> {
    let m = matrix(g);
    let autos: Vec<Vec<usize>> = all_perms(g.n())
        .into_iter()
        .filter(|p| preserves(&m, &m, p))
        .collect();
    let mut seen = vec![false; g.n()];
    let mut out = Vec::new();
    for v in 0..g.n() {
        if seen[v] {
            continue;
        }
        let mut orbit: Vec<usize> = autos.iter().map(|p| p[v]).collect();
        orbit.sort_unstable();
        orbit.dedup();
        for &x in &orbit {
            seen[x] = true;
        }
        out.push(orbit);
    }
    out
}

/// Every labelled graph on `n` vertices.
pub fn labelled(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    (0u32..1 << pairs.len())
        .map(|bits| {
            Graph::from_edges(
                n,
                pairs
                    .iter()
                    .enumerate()
                    .filter(|(k, _)| bits >> k & 1 == 1)
                    .map(|(_, &p)| p),
            )
            .unwrap()
        })
        .collect()
}

/// Partition into isomorphism classes by pairwise brute force; one representative each.
pub fn classes_brute(graphs: &[Graph]) -> Vec<Graph> {
    let mut reps: Vec<Graph> = Vec::new();
    for g in graphs {
        if !reps.iter().any(|r| iso_brute(r, g)) {
            reps.push(*g);
        }
    }
    reps
}

/// Contraction by the textbook recipe: drop u and v, append w adjacent to
/// the union of their neighbourhoods.
pub fn contract_brute(m: &Matrix, u: usize, v: usize) -> Matrix {
    let keep: Vec<usize> = (0..m.len()).filter(|&x| x != u && x != v).collect();
    let k = keep.len();
    let mut out = vec![vec![false; k + 1]; k + 1];
    for (i, &a) in keep.iter().enumerate() {
        for (j, &b) in keep.iter().enumerate() {
            out[i][j] = m[a][b];
        }
        let joined = m[a][u] || m[a][v];
        out[i][k] = joined;
        out[k][i] = joined;
    }
    out
}

pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0u32..1 << n)
        .filter(|b| b.count_ones() as usize == k)
        .map(|b| (0..n).filter(|i| b >> i & 1 == 1).collect())
        .collect()
}

pub fn induced_brute(m: &Matrix, s: &[usize]) -> Graph {
    let sub: Matrix = s
        .iter()
        .map(|&a| s.iter().map(|&b| m[a][b]).collect())
        .collect();
    from_matrix(&sub)
}

/// Vertex sets of `g` inducing a copy of `h`, in lexicographic order.
pub fn copies_brute(g: &Graph, h: &Graph) -> Vec<Vec<usize>> {
    let m = matrix(g);
    let mut out: Vec<Vec<usize>> = subsets(g.n(), h.n())
        .into_iter()
        .filter(|s| iso_brute(&induced_brute(&m, s), h))
        .collect();
    out.sort();
    out
}
