//! Recognition of Dynkin and affine (extended Dynkin) diagrams among connected multigraphs.

use serde::Serialize;
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "name")]
pub enum GraphClass {
    Dynkin(DiagramName),
    Affine(DiagramName),
    Neither,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum DiagramName {
    A(usize),
    D(usize),
    E(usize),
}

impl fmt::Display for DiagramName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DiagramName::A(n) => write!(f, "A{n}"),
            DiagramName::D(n) => write!(f, "D{n}"),
            DiagramName::E(n) => write!(f, "E{n}"),
        }
    }
}

impl fmt::Display for GraphClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphClass::Dynkin(d) => write!(f, "Dynkin {d}"),
            GraphClass::Affine(d) => write!(f, "affine ~{d}"),
            GraphClass::Neither => f.write_str("neither Dynkin nor affine"),
        }
    }
}

/// Undirected multigraph on `0..n`; `mult[i][j]` edges between `i` and `j`, loops on the diagonal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiGraph {
    pub mult: Vec<Vec<usize>>,
}

impl MultiGraph {
    pub fn new(n: usize) -> Self {
        MultiGraph { mult: vec![vec![0; n]; n] }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Self::new(n);
        for &(a, b) in edges {
            g.add_edge(a, b);
        }
        g
    }

    pub fn add_edge(&mut self, a: usize, b: usize) {
        self.mult[a][b] += 1;
        if a != b {
            self.mult[b][a] += 1;
        }
    }

    pub fn n(&self) -> usize {
        self.mult.len()
    }

    fn neighbours(&self, v: usize) -> Vec<usize> {
        (0..self.n()).filter(|&w| w != v && self.mult[v][w] > 0).collect()
    }

    pub fn edge_count(&self) -> usize {
        let n = self.n();
        (0..n).map(|i| self.mult[i][i] + (i + 1..n).map(|j| self.mult[i][j]).sum::<usize>()).sum()
    }

    /// Vertex sets of the connected components, each sorted, in order of least vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                for w in self.neighbours(v) {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        stack.push(w);
                    }
                }
            }
            comp.sort();
            out.push(comp);
        }
        out
    }

    pub fn induced(&self, vs: &[usize]) -> MultiGraph {
        MultiGraph { mult: vs.iter().map(|&i| vs.iter().map(|&j| self.mult[i][j]).collect()).collect() }
    }

    /// Same graph with vertices renamed by `perm` (`new index = perm[old]`).
    pub fn relabel(&self, perm: &[usize]) -> MultiGraph {
        let n = self.n();
        let mut g = Self::new(n);
        for i in 0..n {
            for j in 0..n {
                g.mult[perm[i]][perm[j]] = self.mult[i][j];
            }
        }
        g
    }
}

/// Classifies a connected multigraph.
pub fn classify_connected(g: &MultiGraph) -> GraphClass {
    let n = g.n();
    if n == 0 {
        return GraphClass::Neither;
    }
    if (0..n).any(|i| g.mult[i][i] > 0) {
        // a loop is the one-vertex affine diagram ~A0
        return if n == 1 && g.mult[0][0] == 1 { GraphClass::Affine(DiagramName::A(0)) } else { GraphClass::Neither };
    }
    let max_mult = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).map(|(i, j)| g.mult[i][j]).max().unwrap_or(0);
    if max_mult >= 2 {
        return if n == 2 && max_mult == 2 { GraphClass::Affine(DiagramName::A(1)) } else { GraphClass::Neither };
    }
    let deg: Vec<usize> = (0..n).map(|v| g.neighbours(v).len()).collect();
    let edges = g.edge_count();
    if edges == n {
        // unicyclic: affine ~A_{n-1} exactly when it is a cycle
        return if deg.iter().all(|&d| d == 2) { GraphClass::Affine(DiagramName::A(n - 1)) } else { GraphClass::Neither };
    }
    if edges != n - 1 {
        return GraphClass::Neither;
    }
    let branch: Vec<usize> = (0..n).filter(|&v| deg[v] >= 3).collect();
    match branch.len() {
        0 => GraphClass::Dynkin(DiagramName::A(n)),
        1 => {
            let c = branch[0];
            if deg[c] == 4 {
                return if n == 5 { GraphClass::Affine(DiagramName::D(4)) } else { GraphClass::Neither };
            }
            if deg[c] > 4 {
                return GraphClass::Neither;
            }
            let mut legs: Vec<usize> = g.neighbours(c).into_iter().map(|w| arm_length(g, c, w)).collect();
            legs.sort();
            let (p, q, r) = (legs[0], legs[1], legs[2]);
            match (p, q, r) {
                (1, 1, r) => GraphClass::Dynkin(DiagramName::D(r + 3)),
                (1, 2, 2) => GraphClass::Dynkin(DiagramName::E(6)),
                (1, 2, 3) => GraphClass::Dynkin(DiagramName::E(7)),
                (1, 2, 4) => GraphClass::Dynkin(DiagramName::E(8)),
                (2, 2, 2) => GraphClass::Affine(DiagramName::E(6)),
                (1, 3, 3) => GraphClass::Affine(DiagramName::E(7)),
                (1, 2, 5) => GraphClass::Affine(DiagramName::E(8)),
                _ => GraphClass::Neither,
            }
        }
        2 => {
            let ok = branch.iter().all(|&c| {
                deg[c] == 3 && g.neighbours(c).iter().filter(|&&w| deg[w] == 1).count() >= 2
            });
            if ok {
                GraphClass::Affine(DiagramName::D(n - 1))
            } else {
                GraphClass::Neither
            }
        }
        _ => GraphClass::Neither,
    }
}

/// Vertices on the arm leaving `centre` through `first`, for arms that are paths.
fn arm_length(g: &MultiGraph, centre: usize, first: usize) -> usize {
    let (mut prev, mut cur, mut len) = (centre, first, 1);
    loop {
        let next: Vec<usize> = g.neighbours(cur).into_iter().filter(|&w| w != prev).collect();
        if next.len() != 1 {
            return len;
        }
        prev = cur;
        cur = next[0];
        len += 1;
    }
}

/// Every Dynkin and affine diagram with at most `max_vertices` vertices, with its class.
pub fn known_diagrams(max_vertices: usize) -> Vec<(MultiGraph, GraphClass)> {
    let mut out = Vec::new();
    let path = |n: usize| MultiGraph::from_edges(n, &(1..n).map(|i| (i - 1, i)).collect::<Vec<_>>());
    // branch vertex 0 with legs of the given lengths
    let star = |legs: &[usize]| {
        let n = 1 + legs.iter().sum::<usize>();
        let mut g = MultiGraph::new(n);
        let mut next = 1;
        for &l in legs {
            let mut prev = 0;
            for _ in 0..l {
                g.add_edge(prev, next);
                prev = next;
                next += 1;
            }
        }
        g
    };
    for n in 1..=max_vertices {
        out.push((path(n), GraphClass::Dynkin(DiagramName::A(n))));
    }
    for n in 4..=max_vertices {
        out.push((star(&[1, 1, n - 3]), GraphClass::Dynkin(DiagramName::D(n))));
    }
    for (legs, k) in [([1, 2, 2], 6), ([1, 2, 3], 7), ([1, 2, 4], 8)] {
        if 1 + legs.iter().sum::<usize>() <= max_vertices {
            out.push((star(&legs), GraphClass::Dynkin(DiagramName::E(k))));
        }
    }
    if max_vertices >= 2 {
        out.push((MultiGraph::from_edges(2, &[(0, 1), (0, 1)]), GraphClass::Affine(DiagramName::A(1))));
    }
    for n in 3..=max_vertices {
        let mut e: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
        e.push((n - 1, 0));
        out.push((MultiGraph::from_edges(n, &e), GraphClass::Affine(DiagramName::A(n - 1))));
    }
    if max_vertices >= 5 {
        out.push((star(&[1, 1, 1, 1]), GraphClass::Affine(DiagramName::D(4))));
    }
    for n in 6..=max_vertices {
        // path 2..n-2 with two leaves at each end
        let mut e = vec![(0, 2), (1, 2), (n - 3, n - 2), (n - 3, n - 1)];
        e.extend((3..n - 2).map(|i| (i - 1, i)));
        out.push((MultiGraph::from_edges(n, &e), GraphClass::Affine(DiagramName::D(n - 1))));
    }
    for (legs, k) in [([2, 2, 2], 6), ([1, 3, 3], 7), ([1, 2, 5], 8)] {
        if 1 + legs.iter().sum::<usize>() <= max_vertices {
            out.push((star(&legs), GraphClass::Affine(DiagramName::E(k))));
        }
    }
    out
}

pub fn complete_bipartite(p: usize, q: usize) -> MultiGraph {
    let mut g = MultiGraph::new(p + q);
    for i in 0..p {
        for j in 0..q {
            g.add_edge(i, p + j);
        }
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_is_recognized() {
        for (g, c) in known_diagrams(10) {
            assert_eq!(classify_connected(&g), c, "{g:?}");
        }
    }

    #[test]
    fn wild_shapes() {
        assert_eq!(classify_connected(&complete_bipartite(3, 3)), GraphClass::Neither);
        assert_eq!(classify_connected(&MultiGraph::from_edges(2, &[(0, 1), (0, 1), (0, 1)])), GraphClass::Neither);
        assert_eq!(
            classify_connected(&MultiGraph::from_edges(3, &[(0, 1), (0, 1), (1, 2)])),
            GraphClass::Neither
        );
    }
}
