//! Recognition of incidence graphs of generalized polygons.

use serde::Serialize;

use crate::graph::{Bound, Multigraph};

/// Values of `m` allowed for generalized `m`-gons with every vertex of degree at least 3.
pub const FEIT_HIGMAN: [u32; 5] = [2, 3, 4, 6, 8];

/// First failed test, in the order connected, bipartite, minimum degree, girth, diameter.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "failed", rename_all = "snake_case")]
pub enum NotPolygonReason {
    Disconnected,
    NotBipartite,
    MinDegree {
        min_degree: u32,
    },
    /// Girth infinite, odd, or below 4.
    Girth {
        girth: Bound,
    },
    Diameter {
        diameter: u32,
        half_girth: u32,
    },
    /// `m` outside the Feit–Higman list.
    FeitHigman {
        m: u32,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Refinement {
    ProjectivePlane { order: u32 },
    CompleteBipartite { a: usize, b: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum PolygonVerdict {
    GeneralizedPolygon { m: u32, refinement: Option<Refinement>, part_sizes: (usize, usize) },
    NotPolygon { reason: NotPolygonReason, part_sizes: Option<(usize, usize)> },
}

impl PolygonVerdict {
    pub fn m(&self) -> Option<u32> {
        match self {
            PolygonVerdict::GeneralizedPolygon { m, .. } => Some(*m),
            PolygonVerdict::NotPolygon { .. } => None,
        }
    }

    pub fn projective_plane_order(&self) -> Option<u32> {
        match self {
            PolygonVerdict::GeneralizedPolygon {
                refinement: Some(Refinement::ProjectivePlane { order }),
                ..
            } => Some(*order),
            _ => None,
        }
    }
}

/// Sizes of the colour classes, the class of vertex 0 first.
fn part_sizes(colour: &[u8]) -> (usize, usize) {
    let first = colour.first().copied().unwrap_or(0);
    let same = colour.iter().filter(|&&c| c == first).count();
    (same, colour.len() - same)
}

/// Decides whether `g` is the incidence graph of a generalized `m`-gon: connected, bipartite,
/// minimum degree at least 3, girth `2m` and diameter `m`.
pub fn recognize_generalized_polygon(g: &Multigraph) -> PolygonVerdict {
    let not = |reason, parts| PolygonVerdict::NotPolygon { reason, part_sizes: parts };
    if g.order() == 0 || !g.is_connected() {
        return not(NotPolygonReason::Disconnected, None);
    }
    let Some(colour) = g.bipartition() else {
        return not(NotPolygonReason::NotBipartite, None);
    };
    let parts = part_sizes(&colour);
    let min_degree = g.min_degree();
    if min_degree < 3 {
        return not(NotPolygonReason::MinDegree { min_degree }, Some(parts));
    }
    let girth = Bound::from_option(g.girth());
    let m = match girth {
        Bound::Finite(t) if t >= 4 && t % 2 == 0 => t / 2,
        _ => return not(NotPolygonReason::Girth { girth }, Some(parts)),
    };
    let diameter = g.diameter().expect("connected");
    if diameter != m {
        return not(NotPolygonReason::Diameter { diameter, half_girth: m }, Some(parts));
    }
    if !FEIT_HIGMAN.contains(&m) {
        return not(NotPolygonReason::FeitHigman { m }, Some(parts));
    }
    let refinement = match m {
        2 => is_complete_bipartite(g).map(|(a, b)| Refinement::CompleteBipartite { a, b }),
        3 => projective_plane_order(g).map(|order| Refinement::ProjectivePlane { order }),
        _ => None,
    };
    PolygonVerdict::GeneralizedPolygon { m, refinement, part_sizes: parts }
}

/// `q - 1` when `g` is connected, simple, bipartite and `q`-regular with `q >= 3`, both parts
/// have `q^2 - q + 1` vertices, and any two vertices in the same part have exactly one common
/// neighbour.
pub fn projective_plane_order(g: &Multigraph) -> Option<u32> {
    if g.order() == 0 || !g.is_connected() || g.has_loop() || g.has_parallel_edges() {
        return None;
    }
    let colour = g.bipartition()?;
    let q = g.regular_degree()?;
    if q < 3 {
        return None;
    }
    let points = (q * q - q + 1) as usize;
    if part_sizes(&colour) != (points, points) {
        return None;
    }
    let order = g.order();
    let mut mark = vec![usize::MAX; order];
    for u in 0..order {
        for &(x, _) in g.neighbours(u) {
            mark[x] = u;
        }
        for v in (u + 1)..order {
            if colour[v] != colour[u] {
                continue;
            }
            let common = g.neighbours(v).iter().filter(|&&(x, _)| mark[x] == u).count();
            if common != 1 {
                return None;
            }
        }
    }
    Some(q - 1)
}

/// Part sizes `(a, b)`, the part of vertex 0 first, when `g` is the complete bipartite graph
/// `K_{a,b}` with every cross pair joined by exactly one edge.
pub fn is_complete_bipartite(g: &Multigraph) -> Option<(usize, usize)> {
    if g.order() == 0 || !g.is_connected() || g.has_parallel_edges() {
        return None;
    }
    let colour = g.bipartition()?;
    let (a, b) = part_sizes(&colour);
    (g.edge_count() == a * b).then_some((a, b))
}
