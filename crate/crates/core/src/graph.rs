//! Small undirected multigraphs with loops, and the metrics the classifier needs.

use std::collections::VecDeque;

use serde::Serialize;

/// Undirected multigraph on vertices `0..order`.
///
/// Edges are kept as a sorted list of `(u, v, multiplicity)` with `u <= v`; loops are
/// edges with `u == v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Multigraph {
    order: usize,
    edges: Vec<(usize, usize, u32)>,
    /// Neighbour lists of all vertices, concatenated; vertex `v` owns `adj[offsets[v]..offsets[v + 1]]`.
    offsets: Vec<usize>,
    adj: Vec<(usize, u32)>,
}

impl Multigraph {
    /// Builds a graph from endpoint pairs; repeated pairs become parallel edges.
    pub fn from_edges(order: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Multigraph {
        let mut list: Vec<(usize, usize)> = pairs
            .into_iter()
            .map(|(u, v)| {
                assert!(u < order && v < order, "edge ({u}, {v}) out of range for order {order}");
                (u.min(v), u.max(v))
            })
            .collect();
        list.sort_unstable();
        let mut edges: Vec<(usize, usize, u32)> = Vec::with_capacity(list.len());
        for (u, v) in list {
            match edges.last_mut() {
                Some(last) if last.0 == u && last.1 == v => last.2 += 1,
                _ => edges.push((u, v, 1)),
            }
        }
        Multigraph::from_multiplicities(order, edges)
    }

    /// Builds a graph from a sorted, deduplicated `(u, v, multiplicity)` list with `u <= v`.
    pub(crate) fn from_multiplicities(order: usize, edges: Vec<(usize, usize, u32)>) -> Multigraph {
        let mut offsets = vec![0usize; order + 1];
        for &(u, v, _) in &edges {
            offsets[u + 1] += 1;
            if u != v {
                offsets[v + 1] += 1;
            }
        }
        for i in 0..order {
            offsets[i + 1] += offsets[i];
        }
        // Sorted edges fill every list in increasing neighbour order.
        let mut next = offsets.clone();
        let mut adj = vec![(0usize, 0u32); offsets[order]];
        for &(u, v, m) in &edges {
            adj[next[u]] = (v, m);
            next[u] += 1;
            if u != v {
                adj[next[v]] = (u, m);
                next[v] += 1;
            }
        }
        Multigraph { order, edges, offsets, adj }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Sorted `(u, v, multiplicity)` triples with `u <= v`.
    pub fn edges(&self) -> &[(usize, usize, u32)] {
        &self.edges
    }

    /// Number of edges counted with multiplicity.
    pub fn edge_count(&self) -> usize {
        self.edges.iter().map(|e| e.2 as usize).sum()
    }

    pub fn multiplicity(&self, u: usize, v: usize) -> u32 {
        match self.neighbours(u).binary_search_by_key(&v, |&(w, _)| w) {
            Ok(i) => self.neighbours(u)[i].1,
            Err(_) => 0,
        }
    }

    /// Distinct neighbours with the number of edges to each.
    pub fn neighbours(&self, v: usize) -> &[(usize, u32)] {
        &self.adj[self.offsets[v]..self.offsets[v + 1]]
    }

    /// Number of edge ends at `v`; a loop contributes two.
    pub fn degree(&self, v: usize) -> u32 {
        self.neighbours(v).iter().map(|&(w, m)| if w == v { 2 * m } else { m }).sum()
    }

    pub fn has_loop(&self) -> bool {
        self.edges.iter().any(|e| e.0 == e.1)
    }

    pub fn has_parallel_edges(&self) -> bool {
        self.edges.iter().any(|e| e.2 > 1)
    }

    pub fn min_degree(&self) -> u32 {
        (0..self.order).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> u32 {
        (0..self.order).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn regular_degree(&self) -> Option<u32> {
        let d = self.min_degree();
        (self.order > 0 && d == self.max_degree()).then_some(d)
    }

    /// Component index of every vertex and the number of components, via union-find.
    ///
    /// Components are numbered in order of their smallest vertex.
    pub fn component_ids(&self) -> (Vec<usize>, usize) {
        let mut parent: Vec<usize> = (0..self.order).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for &(u, v, _) in &self.edges {
            let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
            if ru != rv {
                parent[ru.max(rv)] = ru.min(rv);
            }
        }
        let mut ids = vec![usize::MAX; self.order];
        let mut root_id = vec![usize::MAX; self.order];
        let mut count = 0;
        for v in 0..self.order {
            let r = find(&mut parent, v);
            if root_id[r] == usize::MAX {
                root_id[r] = count;
                count += 1;
            }
            ids[v] = root_id[r];
        }
        (ids, count)
    }

    /// Vertex sets of the components, each sorted, in order of smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let (ids, count) = self.component_ids();
        let mut comps = vec![Vec::new(); count];
        for (v, &c) in ids.iter().enumerate() {
            comps[c].push(v);
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.component_ids().1 <= 1
    }

    /// Breadth-first distances from `source`; `u32::MAX` marks unreachable vertices.
    pub fn distances_from(&self, source: usize) -> Vec<u32> {
        let mut dist = vec![u32::MAX; self.order];
        let mut queue = VecDeque::new();
        dist[source] = 0;
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            for &(w, _) in self.neighbours(u) {
                if dist[w] == u32::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Greatest distance between two vertices; `None` when the graph is disconnected.
    pub fn diameter(&self) -> Option<u32> {
        let mut best = 0;
        for s in 0..self.order {
            for d in self.distances_from(s) {
                if d == u32::MAX {
                    return None;
                }
                best = best.max(d);
            }
        }
        Some(best)
    }

    /// Length of a shortest reduced closed path; `None` when there is none.
    ///
    /// A loop gives girth 1 and a pair of parallel edges girth 2; otherwise the shortest
    /// cycle is found by a breadth-first search from every vertex.
    pub fn girth(&self) -> Option<u32> {
        if self.has_loop() {
            return Some(1);
        }
        if self.has_parallel_edges() {
            return Some(2);
        }
        let mut best = u32::MAX;
        let mut dist = vec![u32::MAX; self.order];
        let mut parent = vec![usize::MAX; self.order];
        let mut queue = VecDeque::new();
        for s in 0..self.order {
            dist.iter_mut().for_each(|d| *d = u32::MAX);
            queue.clear();
            dist[s] = 0;
            parent[s] = usize::MAX;
            queue.push_back(s);
            'bfs: while let Some(u) = queue.pop_front() {
                if 2 * dist[u] + 1 >= best {
                    break;
                }
                for &(w, _) in self.neighbours(u) {
                    if dist[w] == u32::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w {
                        best = best.min(dist[u] + dist[w] + 1);
                        if best <= 3 {
                            break 'bfs;
                        }
                    }
                }
            }
            if best == 3 {
                break;
            }
        }
        (best != u32::MAX).then_some(best)
    }

    /// Shortest reduced closed path of length at least `min_len`.
    ///
    /// Works on edge instances, so parallel edges and loops are handled exactly: a path is
    /// reduced when no two consecutive steps use the same edge.
    pub fn shortest_reduced_closed_path(&self, min_len: u32) -> Option<u32> {
        // Each parallel copy gets its own id; arcs are (edge id, head).
        let mut incident: Vec<Vec<(usize, usize)>> = vec![Vec::new(); self.order];
        let mut next_id = 0;
        for &(u, v, m) in &self.edges {
            for _ in 0..m {
                incident[u].push((next_id, v));
                if u != v {
                    incident[v].push((next_id, u));
                }
                next_id += 1;
            }
        }
        let cap = min_len as usize;
        let mut best: Option<u32> = None;
        for s in 0..self.order {
            // State: (vertex, last edge, length capped at min_len).
            let mut seen = std::collections::HashSet::new();
            let mut frontier: Vec<(usize, usize)> = vec![(s, usize::MAX)];
            let mut len = 0usize;
            while !frontier.is_empty() {
                if let Some(b) = best {
                    if len as u32 >= b {
                        break;
                    }
                }
                len += 1;
                let mut next = Vec::new();
                for &(u, last) in &frontier {
                    for &(e, w) in &incident[u] {
                        if e == last {
                            continue;
                        }
                        if w == s && len >= cap {
                            best = Some(best.map_or(len as u32, |b| b.min(len as u32)));
                        }
                        if seen.insert((w, e, len.min(cap))) {
                            next.push((w, e));
                        }
                    }
                }
                frontier = next;
            }
        }
        best
    }

    /// Two-colouring with each component's smallest vertex coloured 0, or `None` when the
    /// graph has an odd cycle or a loop.
    pub fn bipartition(&self) -> Option<Vec<u8>> {
        let mut colour = vec![u8::MAX; self.order];
        let mut queue = VecDeque::new();
        for s in 0..self.order {
            if colour[s] != u8::MAX {
                continue;
            }
            colour[s] = 0;
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                for &(w, _) in self.neighbours(u) {
                    if colour[w] == u8::MAX {
                        colour[w] = 1 - colour[u];
                        queue.push_back(w);
                    } else if colour[w] == colour[u] {
                        return None;
                    }
                }
            }
        }
        Some(colour)
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// Subgraph induced on `vertices`, renumbered in the order given.
    pub fn induced(&self, vertices: &[usize]) -> Multigraph {
        let mut index = vec![usize::MAX; self.order];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let edges: Vec<(usize, usize, u32)> = {
            let mut list: Vec<(usize, usize, u32)> = self
                .edges
                .iter()
                .filter(|&&(u, v, _)| index[u] != usize::MAX && index[v] != usize::MAX)
                .map(|&(u, v, m)| {
                    let (a, b) = (index[u], index[v]);
                    (a.min(b), a.max(b), m)
                })
                .collect();
            list.sort_unstable();
            list
        };
        Multigraph::from_multiplicities(vertices.len(), edges)
    }

    /// Cycle graph `C_len`.
    pub fn cycle(len: usize) -> Multigraph {
        Multigraph::from_edges(len, (0..len).map(|i| (i, (i + 1) % len)))
    }

    /// Complete bipartite graph with parts `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Multigraph {
        Multigraph::from_edges(a + b, (0..a).flat_map(|i| (a..a + b).map(move |j| (i, j))))
    }

    /// Disjoint union, with `other`'s vertices numbered after `self`'s.
    pub fn disjoint_union(&self, other: &Multigraph) -> Multigraph {
        let shift = self.order;
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|&(u, v, m)| (u + shift, v + shift, m)));
        Multigraph::from_multiplicities(self.order + other.order, edges)
    }
}

/// Infinite-or-finite non-negative quantity (girth, diameter, small-cancellation bounds).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Bound {
    Finite(u32),
    Infinite,
}

impl Bound {
    pub fn from_option(v: Option<u32>) -> Bound {
        v.map_or(Bound::Infinite, Bound::Finite)
    }

    pub fn finite(self) -> Option<u32> {
        match self {
            Bound::Finite(v) => Some(v),
            Bound::Infinite => None,
        }
    }
}

impl std::fmt::Display for Bound {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Bound::Finite(v) => write!(f, "{v}"),
            Bound::Infinite => f.write_str("inf"),
        }
    }
}

/// Serialized as an integer, or `null` for infinity.
impl Serialize for Bound {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Bound::Finite(v) => s.serialize_u32(*v),
            Bound::Infinite => s.serialize_none(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Heawood graph as the incidence graph of the lines `{i, i+1, i+3}` mod 7.
    pub(crate) fn heawood() -> Multigraph {
        Multigraph::from_edges(
            14,
            (0..7).flat_map(|i| [0, 1, 3].into_iter().map(move |d| (i, 7 + (i + d) % 7))),
        )
    }

    #[test]
    fn heawood_metrics() {
        let g = heawood();
        assert_eq!(g.edge_count(), 21);
        assert_eq!(g.regular_degree(), Some(3));
        assert_eq!(g.girth(), Some(6));
        assert_eq!(g.diameter(), Some(3));
        assert!(g.is_bipartite());
        assert!(g.is_connected());
    }

    #[test]
    fn loops_and_parallel_edges() {
        let g = Multigraph::from_edges(3, [(0, 0), (0, 1), (1, 2)]);
        assert_eq!(g.girth(), Some(1));
        assert_eq!(g.degree(0), 3);
        assert!(!g.is_bipartite());

        let g = Multigraph::from_edges(2, [(0, 1), (1, 0)]);
        assert_eq!(g.girth(), Some(2));
        assert_eq!(g.multiplicity(1, 0), 2);
        assert_eq!(g.edge_count(), 2);
    }

    #[test]
    fn forest_has_infinite_girth() {
        let g = Multigraph::from_edges(4, [(0, 1), (1, 2), (1, 3)]);
        assert_eq!(g.girth(), None);
        assert_eq!(g.shortest_reduced_closed_path(3), None);
        assert_eq!(g.diameter(), Some(2));
    }

    #[test]
    fn disconnected_diameter_and_components() {
        let g = Multigraph::cycle(3).disjoint_union(&Multigraph::cycle(4));
        assert_eq!(g.diameter(), None);
        assert_eq!(g.components(), vec![vec![0, 1, 2], vec![3, 4, 5, 6]]);
        assert_eq!(g.girth(), Some(3));
        assert!(!g.is_bipartite());
    }

    #[test]
    fn reduced_closed_paths_through_parallel_edges() {
        // Two parallel edges: the shortest reduced closed path of length >= 3 goes round twice.
        let g = Multigraph::from_edges(2, [(0, 1), (0, 1)]);
        assert_eq!(g.shortest_reduced_closed_path(1), Some(2));
        assert_eq!(g.shortest_reduced_closed_path(3), Some(4));
        assert_eq!(Multigraph::cycle(8).shortest_reduced_closed_path(3), Some(8));
    }

    #[test]
    fn induced_subgraph_renumbers() {
        let g = heawood();
        let h = g.induced(&[0, 7, 8, 1]);
        assert_eq!(h.order(), 4);
        assert_eq!(h.edges(), &[(0, 1, 1), (0, 2, 1), (2, 3, 1)]);
    }
}
