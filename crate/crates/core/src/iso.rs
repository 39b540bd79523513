//! Isomorphism test for small multigraphs by refined backtracking.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::Multigraph;

/// Per-vertex invariant: degree, loop count and the number of vertices at each distance.
fn signatures(g: &Multigraph) -> Vec<Vec<u32>> {
    (0..g.order())
        .map(|v| {
            let mut sig = vec![g.degree(v), g.multiplicity(v, v)];
            let mut histogram: Vec<u32> = Vec::new();
            for d in g.distances_from(v) {
                let slot = if d == u32::MAX { 0 } else { d as usize + 1 };
                if histogram.len() <= slot {
                    histogram.resize(slot + 1, 0);
                }
                histogram[slot] += 1;
            }
            sig.extend(histogram);
            sig
        })
        .collect()
}

/// Decides whether `g` and `h` are isomorphic.
///
/// Graphs with more than `limit` vertices that pass the invariant filters give
/// [`Error::Undecided`].
pub fn isomorphic(g: &Multigraph, h: &Multigraph, limit: usize) -> Result<bool> {
    if g.order() != h.order() || g.edges().len() != h.edges().len() || g.edge_count() != h.edge_count() {
        return Ok(false);
    }
    let sg = signatures(g);
    let sh = signatures(h);
    let (mut a, mut b) = (sg.clone(), sh.clone());
    a.sort();
    b.sort();
    if a != b {
        return Ok(false);
    }
    if g.order() == 0 {
        return Ok(true);
    }
    if g.order() > limit {
        return Err(Error::Undecided(g.order()));
    }

    // Visit g in breadth-first order.
    let order = g.order();
    let mut sequence = Vec::with_capacity(order);
    let mut anchor = vec![usize::MAX; order];
    let mut seen = vec![false; order];
    for root in 0..order {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            sequence.push(u);
            for &(w, _) in g.neighbours(u) {
                if !seen[w] {
                    seen[w] = true;
                    anchor[w] = u;
                    queue.push_back(w);
                }
            }
        }
    }

    let mut map = vec![usize::MAX; order];
    let mut used = vec![false; order];
    Ok(extend(g, h, &sg, &sh, &sequence, &anchor, 0, &mut map, &mut used))
}

#[allow(clippy::too_many_arguments)]
fn extend(
    g: &Multigraph,
    h: &Multigraph,
    sg: &[Vec<u32>],
    sh: &[Vec<u32>],
    sequence: &[usize],
    anchor: &[usize],
    depth: usize,
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    if depth == sequence.len() {
        return true;
    }
    let v = sequence[depth];
    let candidates: Vec<usize> = if anchor[v] == usize::MAX {
        (0..h.order()).collect()
    } else {
        h.neighbours(map[anchor[v]]).iter().map(|&(w, _)| w).collect()
    };
    for c in candidates {
        if used[c] || sh[c] != sg[v] {
            continue;
        }
        let consistent = sequence[..depth].iter().all(|&u| g.multiplicity(u, v) == h.multiplicity(map[u], c))
            && g.multiplicity(v, v) == h.multiplicity(c, c);
        if !consistent {
            continue;
        }
        map[v] = c;
        used[c] = true;
        if extend(g, h, sg, sh, sequence, anchor, depth + 1, map, used) {
            return true;
        }
        used[c] = false;
        map[v] = usize::MAX;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relabelled_cycle_is_isomorphic() {
        let g = Multigraph::cycle(6);
        let h = Multigraph::from_edges(6, [(0, 3), (3, 1), (1, 4), (4, 2), (2, 5), (5, 0)]);
        assert!(isomorphic(&g, &h, 64).unwrap());
    }

    #[test]
    fn same_degrees_different_graphs() {
        // Two triangles versus a hexagon: both 2-regular on six vertices.
        let g = Multigraph::cycle(3).disjoint_union(&Multigraph::cycle(3));
        let h = Multigraph::cycle(6);
        assert!(!isomorphic(&g, &h, 64).unwrap());
    }

    #[test]
    fn multiplicities_matter() {
        let g = Multigraph::from_edges(3, [(0, 1), (0, 1), (1, 2)]);
        let h = Multigraph::from_edges(3, [(0, 1), (1, 2), (1, 2)]);
        let k = Multigraph::from_edges(3, [(0, 1), (1, 2), (0, 2)]);
        assert!(isomorphic(&g, &h, 64).unwrap());
        assert!(!isomorphic(&g, &k, 64).unwrap());
    }

    #[test]
    fn large_graphs_are_undecided() {
        let g = Multigraph::cycle(70);
        assert_eq!(isomorphic(&g, &g.clone(), 64), Err(Error::Undecided(70)));
    }
}
