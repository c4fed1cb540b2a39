//! The bipartite graph on maximal edge intervals, its cycles and chords,
//! and the translation between graph cycles and lattice cycles.

use std::collections::HashSet;

use crate::algebra::{Binomial, Monomial, TermOrder, VariableId};
use crate::error::{Error, Result};
use crate::grid::{CellCollection, EdgeInterval, Orientation, Point};

/// Bipartite graph: one node per maximal vertical interval, one per
/// maximal horizontal interval, an edge whenever the two intervals cross
/// at a vertex of the collection (edges carry that witness point).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartiteIntervalGraph {
    pub v_nodes: Vec<EdgeInterval>,
    pub h_nodes: Vec<EdgeInterval>,
    pub edges: Vec<(usize, usize, Point)>,
    adjacency: HashSet<(usize, usize)>,
}

impl BipartiteIntervalGraph {
    pub fn node_count(&self) -> usize {
        self.v_nodes.len() + self.h_nodes.len()
    }

    pub fn has_edge(&self, v: usize, h: usize) -> bool {
        self.adjacency.contains(&(v, h))
    }

    pub fn witness(&self, v: usize, h: usize) -> Option<Point> {
        self.v_nodes[v].crossing(self.h_nodes[h])
    }

    /// Global node ids: vertical nodes first, then horizontal.
    fn neighbors(&self) -> Vec<Vec<usize>> {
        let nv = self.v_nodes.len();
        let mut adj = vec![Vec::new(); self.node_count()];
        for &(v, h, _) in &self.edges {
            adj[v].push(nv + h);
            adj[nv + h].push(v);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        adj
    }
}

/// Build the graph of a collection. Every lattice point of an edge
/// interval is a vertex of the collection, so the witness rule reduces to
/// a geometric crossing test.
pub fn build_graph(p: &CellCollection) -> BipartiteIntervalGraph {
    let v_nodes = p.maximal_edge_intervals(Orientation::Vertical);
    let h_nodes = p.maximal_edge_intervals(Orientation::Horizontal);
    let mut edges = Vec::new();
    let mut adjacency = HashSet::new();
    for (i, v) in v_nodes.iter().enumerate() {
        for (j, h) in h_nodes.iter().enumerate() {
            if let Some(w) = v.crossing(*h) {
                debug_assert!(p.contains_vertex(w));
                edges.push((i, j, w));
                adjacency.insert((i, j));
            }
        }
    }
    BipartiteIntervalGraph {
        v_nodes,
        h_nodes,
        edges,
        adjacency,
    }
}

/// An alternating cycle `v[0], h[0], v[1], h[1], ...` of length `2r`;
/// `(v[k], h[k])` and `(v[k+1], h[k])` are edges, indices wrapping.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GraphCycle {
    pub vs: Vec<usize>,
    pub hs: Vec<usize>,
}

impl GraphCycle {
    pub fn len(&self) -> usize {
        self.vs.len() + self.hs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vs.is_empty()
    }

    /// Canonical form: among all rotations and the two directions, the
    /// lexicographically least flattened sequence that starts at the
    /// smallest vertical node.
    pub fn canonical(&self) -> GraphCycle {
        let r = self.vs.len();
        let mut best: Option<Vec<usize>> = None;
        let flatten = |vs: &[usize], hs: &[usize]| -> Vec<usize> {
            let mut seq = Vec::with_capacity(2 * r);
            for k in 0..r {
                seq.push(vs[k]);
                seq.push(hs[k]);
            }
            seq
        };
        for rot in 0..r {
            let vs: Vec<usize> = (0..r).map(|k| self.vs[(rot + k) % r]).collect();
            let hs: Vec<usize> = (0..r).map(|k| self.hs[(rot + k) % r]).collect();
            let fwd = flatten(&vs, &hs);
            // Reversal: v[0], h[r-1], v[r-1], h[r-2], ..., v[1], h[0].
            let rvs: Vec<usize> = std::iter::once(vs[0])
                .chain(vs[1..].iter().rev().copied())
                .collect();
            let rhs: Vec<usize> = hs.iter().rev().copied().collect();
            let bwd = flatten(&rvs, &rhs);
            for cand in [fwd, bwd] {
                if best.as_ref().is_none_or(|b| cand < *b) {
                    best = Some(cand);
                }
            }
        }
        let seq = best.expect("cycle is non-empty");
        GraphCycle {
            vs: seq.iter().step_by(2).copied().collect(),
            hs: seq.iter().skip(1).step_by(2).copied().collect(),
        }
    }

    fn from_global_path(path: &[usize], nv: usize) -> GraphCycle {
        // The path alternates between sides; normalize to start at a
        // vertical node.
        let start = path.iter().position(|&n| n < nv).expect("cycle has a vertical node");
        let rotated: Vec<usize> = (0..path.len())
            .map(|k| path[(start + k) % path.len()])
            .collect();
        let vs: Vec<usize> = rotated.iter().step_by(2).copied().collect();
        let hs: Vec<usize> = rotated.iter().skip(1).step_by(2).map(|&n| n - nv).collect();
        GraphCycle { vs, hs }.canonical()
    }
}

/// All simple cycles of length `4..=max_len`, each reported once in
/// canonical form.
pub fn enumerate_cycles(g: &BipartiteIntervalGraph, max_len: usize) -> Vec<GraphCycle> {
    let adj = g.neighbors();
    let nv = g.v_nodes.len();
    let n = g.node_count();
    let mut out = HashSet::new();
    let mut path: Vec<usize> = Vec::new();
    let mut on_path = vec![false; n];

    fn dfs(
        adj: &[Vec<usize>],
        nv: usize,
        root: usize,
        max_len: usize,
        path: &mut Vec<usize>,
        on_path: &mut [bool],
        out: &mut HashSet<GraphCycle>,
    ) {
        let last = *path.last().unwrap();
        for &w in &adj[last] {
            if w == root && path.len() >= 4 {
                // Direction dedup: each cycle appears with both neighbors
                // of the root as second node; keep one.
                if path[1] < *path.last().unwrap() {
                    out.insert(GraphCycle::from_global_path(path, nv));
                }
                continue;
            }
            if w <= root || on_path[w] || path.len() == max_len {
                continue;
            }
            path.push(w);
            on_path[w] = true;
            dfs(adj, nv, root, max_len, path, on_path, out);
            on_path[w] = false;
            path.pop();
        }
    }

    for root in 0..n {
        path.clear();
        path.push(root);
        on_path[root] = true;
        dfs(&adj, nv, root, max_len, &mut path, &mut on_path, &mut out);
        on_path[root] = false;
    }
    let mut cycles: Vec<GraphCycle> = out.into_iter().collect();
    cycles.sort();
    cycles
}

/// Visit chordless (induced) cycles of length `>= min_len`. The visitor
/// returns `true` to keep searching, `false` to stop early.
fn visit_chordless_cycles(
    g: &BipartiteIntervalGraph,
    min_len: usize,
    visit: &mut impl FnMut(GraphCycle) -> bool,
) {
    let adj = g.neighbors();
    let nv = g.v_nodes.len();
    let n = g.node_count();
    let adjacent = |a: usize, b: usize| adj[a].binary_search(&b).is_ok();

    fn dfs(
        adj: &[Vec<usize>],
        adjacent: &impl Fn(usize, usize) -> bool,
        nv: usize,
        root: usize,
        min_len: usize,
        path: &mut Vec<usize>,
        on_path: &mut [bool],
        visit: &mut impl FnMut(GraphCycle) -> bool,
    ) -> bool {
        let last = *path.last().unwrap();
        for &w in &adj[last] {
            if w <= root || on_path[w] {
                continue;
            }
            // Induced extension: w may touch the path only at its end,
            // except for the root, where it closes a cycle.
            let mut touches_interior = false;
            for &q in path[1..path.len() - 1].iter() {
                if adjacent(w, q) {
                    touches_interior = true;
                    break;
                }
            }
            if touches_interior {
                continue;
            }
            if adjacent(w, root) {
                if path.len() + 1 >= min_len && path[1] < w {
                    let mut cycle = path.clone();
                    cycle.push(w);
                    if !visit(GraphCycle::from_global_path(&cycle, nv)) {
                        return false;
                    }
                }
                // Any longer cycle through w would have the chord (w, root).
                continue;
            }
            path.push(w);
            on_path[w] = true;
            let keep_going = dfs(adj, adjacent, nv, root, min_len, path, on_path, visit);
            on_path[w] = false;
            path.pop();
            if !keep_going {
                return false;
            }
        }
        true
    }

    let mut path: Vec<usize> = Vec::new();
    let mut on_path = vec![false; n];
    for root in 0..n {
        path.clear();
        path.push(root);
        on_path[root] = true;
        let keep_going = dfs(
            &adj, &adjacent, nv, root, min_len, &mut path, &mut on_path, visit,
        );
        on_path[root] = false;
        if !keep_going {
            return;
        }
    }
}

/// All chordless cycles of length `>= min_len`, canonical and sorted.
/// `min_len` must be even and at least 4.
pub fn enumerate_chordless_cycles(
    g: &BipartiteIntervalGraph,
    min_len: usize,
) -> Vec<GraphCycle> {
    assert!(min_len >= 4 && min_len % 2 == 0, "min_len must be even and >= 4");
    let mut out = Vec::new();
    visit_chordless_cycles(g, min_len, &mut |c| {
        out.push(c);
        true
    });
    out.sort();
    out.dedup();
    out
}

/// Weak chordality: every cycle of length greater than 4 has a chord. In a
/// bipartite graph that is exactly the absence of chordless cycles of
/// length 6 or more.
pub fn is_weakly_chordal(g: &BipartiteIntervalGraph) -> bool {
    let mut found = false;
    visit_chordless_cycles(g, 6, &mut |_| {
        found = true;
        false
    });
    !found
}

/// A lattice cycle: a vertex sequence with `a_1 = a_m`, distinct interior
/// vertices, consecutive pairs spanning alternating horizontal/vertical
/// edge intervals of the collection.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LatticeCycle {
    pub vertices: Vec<Point>,
}

impl LatticeCycle {
    /// Construct without validation; used for hand-built tests.
    pub fn from_vertices(vertices: Vec<Point>) -> LatticeCycle {
        LatticeCycle { vertices }
    }

    /// The distinct cycle vertices (the closing duplicate dropped).
    pub fn cycle_vertices(&self) -> &[Point] {
        &self.vertices[..self.vertices.len() - 1]
    }

    pub fn segments(&self) -> impl Iterator<Item = (Point, Point)> + '_ {
        self.vertices.windows(2).map(|w| (w[0], w[1]))
    }

    /// Check the cycle conditions against a collection.
    pub fn is_valid(&self, p: &CellCollection) -> bool {
        let m = self.vertices.len();
        if m < 5 || m % 2 == 0 {
            return false;
        }
        if self.vertices[0] != self.vertices[m - 1] {
            return false;
        }
        let interior = self.cycle_vertices();
        let distinct: HashSet<Point> = interior.iter().copied().collect();
        if distinct.len() != interior.len() {
            return false;
        }
        let mut orientations = Vec::new();
        for (a, b) in self.segments() {
            match segment_orientation(a, b) {
                Some(o) if segment_in_edges(p, a, b) => orientations.push(o),
                _ => return false,
            }
        }
        // Alternation, wrapping around through a_{m+1} = a_2.
        for i in 0..orientations.len() {
            let next = orientations[(i + 1) % orientations.len()];
            if orientations[i] == next {
                return false;
            }
        }
        true
    }
}

fn segment_orientation(a: Point, b: Point) -> Option<Orientation> {
    if a.y == b.y && a.x != b.x {
        Some(Orientation::Horizontal)
    } else if a.x == b.x && a.y != b.y {
        Some(Orientation::Vertical)
    } else {
        None
    }
}

/// All unit edges between the two collinear points belong to `E(P)`.
fn segment_in_edges(p: &CellCollection, a: Point, b: Point) -> bool {
    match segment_orientation(a, b) {
        Some(Orientation::Horizontal) => {
            let y = a.y;
            let (x0, x1) = (a.x.min(b.x), a.x.max(b.x));
            (x0..x1).all(|x| {
                p.contains(crate::grid::Cell::new(x, y))
                    || p.contains(crate::grid::Cell::new(x, y - 1))
            })
        }
        Some(Orientation::Vertical) => {
            let x = a.x;
            let (y0, y1) = (a.y.min(b.y), a.y.max(b.y));
            (y0..y1).all(|y| {
                p.contains(crate::grid::Cell::new(x, y))
                    || p.contains(crate::grid::Cell::new(x - 1, y))
            })
        }
        None => false,
    }
}

/// Lift a graph cycle to the primitive lattice cycle it defines:
/// `V1^H1, V2^H1, V2^H2, ..., Vr^Hr, V1^Hr, V1^H1`.
pub fn cycle_to_primitive_cycle(
    g: &BipartiteIntervalGraph,
    c: &GraphCycle,
) -> Result<LatticeCycle> {
    let r = c.vs.len();
    let mut vertices = Vec::with_capacity(2 * r + 1);
    for k in 0..r {
        let diag = g
            .witness(c.vs[k], c.hs[k])
            .ok_or_else(|| missing_crossing(g, c.vs[k], c.hs[k]))?;
        vertices.push(diag);
        let step = g
            .witness(c.vs[(k + 1) % r], c.hs[k])
            .ok_or_else(|| missing_crossing(g, c.vs[(k + 1) % r], c.hs[k]))?;
        vertices.push(step);
    }
    vertices.push(vertices[0]);
    Ok(LatticeCycle { vertices })
}

fn missing_crossing(g: &BipartiteIntervalGraph, v: usize, h: usize) -> Error {
    let p = Point::new(g.v_nodes[v].line, g.h_nodes[h].line);
    Error::NotLiftable(p)
}

/// Read a lattice cycle back as a graph cycle over maximal intervals.
pub fn induced_graph_cycle(
    p: &CellCollection,
    g: &BipartiteIntervalGraph,
    c: &LatticeCycle,
) -> Result<GraphCycle> {
    let mut nodes = Vec::new();
    let nv = g.v_nodes.len();
    for (a, b) in c.segments() {
        match segment_orientation(a, b) {
            Some(Orientation::Vertical) => {
                let idx = g
                    .v_nodes
                    .iter()
                    .position(|e| e.contains_point(a) && e.contains_point(b))
                    .ok_or(Error::NotLiftable(a))?;
                nodes.push(idx);
            }
            Some(Orientation::Horizontal) => {
                let idx = g
                    .h_nodes
                    .iter()
                    .position(|e| e.contains_point(a) && e.contains_point(b))
                    .ok_or(Error::NotLiftable(a))?;
                nodes.push(nv + idx);
            }
            None => return Err(Error::NotACycle),
        }
    }
    let _ = p;
    Ok(GraphCycle::from_global_path(&nodes, nv))
}

/// Primitivity: each maximal edge interval contains at most two vertices
/// of the cycle.
pub fn is_primitive_cycle(p: &CellCollection, c: &LatticeCycle) -> bool {
    let distinct: HashSet<Point> = c.cycle_vertices().iter().copied().collect();
    for e in p.all_maximal_edge_intervals() {
        let count = distinct.iter().filter(|&&v| e.contains_point(v)).count();
        if count > 2 {
            return false;
        }
    }
    true
}

/// The binomial attached to a cycle: the product of odd-position vertices
/// minus the product of even-position vertices.
pub fn cycle_binomial(c: &LatticeCycle) -> Result<Binomial> {
    let m = c.vertices.len();
    if m < 5 || m % 2 == 0 || c.vertices[0] != c.vertices[m - 1] {
        return Err(Error::NotACycle);
    }
    let ord = TermOrder::degrevlex();
    let mut plus = Monomial::one();
    let mut minus = Monomial::one();
    for (idx, &v) in c.cycle_vertices().iter().enumerate() {
        let factor = Monomial::var(VariableId::Vertex(v));
        if idx % 2 == 0 {
            plus = plus.mul(&factor);
        } else {
            minus = minus.mul(&factor);
        }
    }
    Binomial::new(plus, minus, &ord).ok_or(Error::NotACycle)
}

/// Self-crossing: a vertical and a horizontal cycle segment lie on
/// crossing maximal intervals with all four endpoints distinct.
pub fn has_self_crossing(p: &CellCollection, c: &LatticeCycle) -> bool {
    let v_max = p.maximal_edge_intervals(Orientation::Vertical);
    let h_max = p.maximal_edge_intervals(Orientation::Horizontal);
    let segs: Vec<(Point, Point)> = c.segments().collect();
    for &(a1, a2) in &segs {
        if segment_orientation(a1, a2) != Some(Orientation::Vertical) {
            continue;
        }
        let Some(vk) = v_max
            .iter()
            .find(|e| e.contains_point(a1) && e.contains_point(a2))
        else {
            continue;
        };
        for &(b1, b2) in &segs {
            if segment_orientation(b1, b2) != Some(Orientation::Horizontal) {
                continue;
            }
            let endpoints = [a1, a2, b1, b2];
            let distinct: HashSet<Point> = endpoints.iter().copied().collect();
            if distinct.len() != 4 {
                continue;
            }
            let Some(hl) = h_max
                .iter()
                .find(|e| e.contains_point(b1) && e.contains_point(b2))
            else {
                continue;
            };
            if vk.crossing(*hl).is_some() {
                return true;
            }
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::grid::pt;

    #[test]
    fn single_cell_graph_is_complete_2_by_2() {
        let g = build_graph(&fixtures::f1());
        assert_eq!(g.v_nodes.len(), 2);
        assert_eq!(g.h_nodes.len(), 2);
        assert_eq!(g.edges.len(), 4);
    }

    #[test]
    fn square_graph_is_complete_3_by_3() {
        let g = build_graph(&fixtures::f2());
        assert_eq!(g.v_nodes.len(), 3);
        assert_eq!(g.h_nodes.len(), 3);
        assert_eq!(g.edges.len(), 9);
    }

    #[test]
    fn diagonal_pair_graph_merges_middle_intervals() {
        // The middle vertical and horizontal gridlines each carry one
        // merged maximal interval, so the graph has 3+3 nodes and 7 edges
        // and the shared corner witnesses exactly one node pair.
        let g = build_graph(&fixtures::f5());
        assert_eq!(g.v_nodes.len(), 3);
        assert_eq!(g.h_nodes.len(), 3);
        assert_eq!(g.edges.len(), 7);
        let shared: Vec<&(usize, usize, Point)> =
            g.edges.iter().filter(|&&(_, _, w)| w == pt(1, 1)).collect();
        assert_eq!(shared.len(), 1);
    }

    #[test]
    fn chordless_cycle_examples() {
        let g = build_graph(&fixtures::f1());
        assert!(enumerate_chordless_cycles(&g, 6).is_empty());
        assert_eq!(enumerate_chordless_cycles(&g, 4).len(), 1);
        let ring = build_graph(&fixtures::f4());
        assert!(enumerate_chordless_cycles(&ring, 6).is_empty());
    }

    #[test]
    fn six_cycle_graph_has_its_chordless_six_cycle() {
        // Hand-built bipartite 6-cycle: three vertical and three
        // horizontal nodes wired in a ring.
        let mk = |o, line| EdgeInterval {
            orientation: o,
            line,
            span: (0, 1),
            maximal: true,
        };
        let v_nodes = vec![
            mk(Orientation::Vertical, 0),
            mk(Orientation::Vertical, 1),
            mk(Orientation::Vertical, 2),
        ];
        let h_nodes = vec![
            mk(Orientation::Horizontal, 0),
            mk(Orientation::Horizontal, 1),
            mk(Orientation::Horizontal, 2),
        ];
        let pairs = [(0, 0), (1, 0), (1, 1), (2, 1), (2, 2), (0, 2)];
        let edges: Vec<(usize, usize, Point)> =
            pairs.iter().map(|&(v, h)| (v, h, pt(0, 0))).collect();
        let adjacency = pairs.iter().copied().collect();
        let g = BipartiteIntervalGraph {
            v_nodes,
            h_nodes,
            edges,
            adjacency,
        };
        let cycles = enumerate_chordless_cycles(&g, 6);
        assert_eq!(cycles.len(), 1);
        assert_eq!(cycles[0].len(), 6);
        assert!(!is_weakly_chordal(&g));
    }

    #[test]
    fn fixture_graphs_are_weakly_chordal() {
        for (name, p) in fixtures::all() {
            let g = build_graph(&p);
            assert!(is_weakly_chordal(&g), "fixture {name}");
        }
    }

    #[test]
    fn lift_of_unit_square_cycle() {
        let p = fixtures::f1();
        let g = build_graph(&p);
        let cycles = enumerate_cycles(&g, 4);
        assert_eq!(cycles.len(), 1);
        let lifted = cycle_to_primitive_cycle(&g, &cycles[0]).unwrap();
        assert_eq!(lifted.vertices.len(), 5);
        assert!(lifted.is_valid(&p));
        assert!(is_primitive_cycle(&p, &lifted));
    }

    #[test]
    fn lift_round_trips_through_projection() {
        for p in [fixtures::f1(), fixtures::f2(), fixtures::f3()] {
            let g = build_graph(&p);
            for c in enumerate_cycles(&g, 8) {
                let lifted = cycle_to_primitive_cycle(&g, &c).unwrap();
                assert!(lifted.is_valid(&p));
                assert!(is_primitive_cycle(&p, &lifted));
                let back = induced_graph_cycle(&p, &g, &lifted).unwrap();
                assert_eq!(back, c.canonical());
            }
        }
    }

    #[test]
    fn perimeter_cycle_of_square() {
        let p = fixtures::f2();
        let perimeter = LatticeCycle::from_vertices(vec![
            pt(0, 0),
            pt(2, 0),
            pt(2, 2),
            pt(0, 2),
            pt(0, 0),
        ]);
        assert!(perimeter.is_valid(&p));
        assert!(is_primitive_cycle(&p, &perimeter));
        assert!(!has_self_crossing(&p, &perimeter));
        let b = cycle_binomial(&perimeter).unwrap();
        let ord = TermOrder::degrevlex();
        let expected = Binomial::new(
            Monomial::var(VariableId::Vertex(pt(0, 0)))
                .mul(&Monomial::var(VariableId::Vertex(pt(2, 2)))),
            Monomial::var(VariableId::Vertex(pt(2, 0)))
                .mul(&Monomial::var(VariableId::Vertex(pt(0, 2)))),
            &ord,
        )
        .unwrap();
        assert_eq!(b, expected);
    }

    #[test]
    fn non_primitive_vertex_layout_is_detected() {
        // Hand-built layout with three vertices on the middle vertical
        // gridline; primitivity counting rejects it.
        let p = fixtures::f2();
        let c = LatticeCycle::from_vertices(vec![
            pt(0, 0),
            pt(1, 0),
            pt(1, 1),
            pt(1, 2),
            pt(2, 2),
            pt(2, 0),
            pt(0, 0),
        ]);
        assert!(!is_primitive_cycle(&p, &c));
    }

    #[test]
    fn cycle_binomial_rejects_even_sequences() {
        let c = LatticeCycle::from_vertices(vec![pt(0, 0), pt(1, 0), pt(1, 1), pt(0, 0)]);
        assert_eq!(cycle_binomial(&c), Err(Error::NotACycle));
    }

    #[test]
    fn crossing_cycle_on_diagonal_pair() {
        // The primitive 6-vertex cycle through both cells of the diagonal
        // pair crosses itself on the merged middle intervals.
        let p = fixtures::f5();
        let c = LatticeCycle::from_vertices(vec![
            pt(0, 0),
            pt(1, 0),
            pt(1, 2),
            pt(2, 2),
            pt(2, 1),
            pt(0, 1),
            pt(0, 0),
        ]);
        assert!(c.is_valid(&p));
        assert!(is_primitive_cycle(&p, &c));
        assert!(has_self_crossing(&p, &c));

        // The corresponding graph cycle picks up the chord at the shared
        // corner.
        let g = build_graph(&p);
        let back = induced_graph_cycle(&p, &g, &c).unwrap();
        assert_eq!(back.len(), 6);
        let mut has_chord = false;
        let r = back.vs.len();
        for k in 0..r {
            for l in 0..r {
                let consecutive = l == k || (l + 1) % r == k;
                if !consecutive && g.has_edge(back.vs[k], back.hs[l]) {
                    has_chord = true;
                }
            }
        }
        assert!(has_chord);
    }

    #[test]
    fn unit_square_cycle_has_no_self_crossing() {
        let p = fixtures::f1();
        let c = LatticeCycle::from_vertices(vec![
            pt(0, 0),
            pt(1, 0),
            pt(1, 1),
            pt(0, 1),
            pt(0, 0),
        ]);
        assert!(c.is_valid(&p));
        assert!(!has_self_crossing(&p, &c));
    }

    #[test]
    fn four_cycle_binomial_matches_inner_minor_when_rectangle_is_inner() {
        let p = fixtures::f2();
        let g = build_graph(&p);
        let minors = crate::algebra::inner_2_minors(&p);
        for c in enumerate_cycles(&g, 4) {
            let lifted = cycle_to_primitive_cycle(&g, &c).unwrap();
            let b = cycle_binomial(&lifted).unwrap();
            let rect = crate::grid::LatticeInterval::hull(
                lifted.vertices[0],
                lifted.vertices[2],
            );
            if p.interval_is_inner(rect) {
                assert!(minors.contains(&b), "{b}");
            }
        }
    }
}
