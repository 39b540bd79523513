//! Star graphs of presentations: the generic construction from the symmetrized closure, the
//! closed-form prediction for cyclic presentations, metrics and DOT export.

use std::fmt::Write as _;

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Bound, Multigraph};
use crate::iso;
use crate::word::{normalize, sign_class, CyclicPresentation, Letter, Sign, SignClass, Word};

/// How a star graph was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Provenance {
    Generic,
    Predicted,
}

/// Star graph of a rank-`n` presentation on the `2n` vertices `x_i` and `x_i^-1`.
///
/// Vertex `i` is `x_i` and vertex `n + i` is `x_i^-1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StarGraph {
    n: u32,
    graph: Multigraph,
    provenance: Provenance,
}

impl StarGraph {
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn graph(&self) -> &Multigraph {
        &self.graph
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    pub fn vertex(&self, letter: Letter) -> usize {
        vertex_of(self.n, letter)
    }

    pub fn label(&self, v: usize) -> Letter {
        let n = self.n as usize;
        if v < n {
            Letter::pos(v as u32)
        } else {
            Letter::neg((v - n) as u32)
        }
    }

    /// `x<i>` or `x<i>_inv`.
    pub fn vertex_name(&self, v: usize) -> String {
        let l = self.label(v);
        match l.sign {
            Sign::Pos => format!("x{}", l.index),
            Sign::Neg => format!("x{}_inv", l.index),
        }
    }

    /// Whether `x_i -> x_{i+1}`, `x_i^-1 -> x_{i+1}^-1` maps the edge multiset onto itself.
    pub fn shift_is_automorphism(&self) -> bool {
        let n = self.n as usize;
        let shift = |v: usize| if v < n { (v + 1) % n } else { n + (v - n + 1) % n };
        self.graph.edges().iter().all(|&(u, v, m)| self.graph.multiplicity(shift(u), shift(v)) == m)
    }
}

fn vertex_of(n: u32, l: Letter) -> usize {
    match l.sign {
        Sign::Pos => l.index as usize,
        Sign::Neg => (n + l.index) as usize,
    }
}

/// Builds the star graph of `⟨x0..x(n-1) | relators⟩` from its symmetrized closure.
///
/// Relators are replaced by their roots and repeated relators collapse in the closure, so
/// freely redundant relators do not contribute. Every distinct word `l0 l1 ... ` in the closure
/// gives an edge `l0 -- l1^-1`; the words `x y^-1 u` and `y x^-1 u^-1` give the same edge and
/// are counted once.
pub fn build_star_graph(n: u32, relators: &[Word]) -> Result<StarGraph> {
    if n == 0 {
        return Err(Error::ZeroRank);
    }
    let mut roots: Vec<Vec<Letter>> = Vec::with_capacity(relators.len());
    for r in relators {
        if r.is_empty() {
            return Err(Error::EmptyWord);
        }
        if r.rank() != n {
            return Err(Error::RankMismatch { expected: n, found: r.rank() });
        }
        if !r.is_cyclically_reduced() {
            return Err(Error::NotCyclicallyReduced(r.to_string()));
        }
        roots.push(normalize(r)?.root.letters().to_vec());
    }
    Ok(StarGraph {
        n,
        graph: Multigraph::from_multiplicities(2 * n as usize, closure_edges(n, &roots)),
        provenance: Provenance::Generic,
    })
}

/// Generic star graph of the cyclic presentation `P_n(w)`.
pub fn cyclic_star_graph(p: &CyclicPresentation) -> StarGraph {
    let n = p.n();
    let root = p.root();
    let roots: Vec<Vec<Letter>> =
        (0..n).map(|i| root.letters().iter().map(|l| l.shifted(i64::from(i), n)).collect()).collect();
    StarGraph {
        n,
        graph: Multigraph::from_multiplicities(2 * n as usize, closure_edges(n, &roots)),
        provenance: Provenance::Generic,
    }
}

/// Sorted edge list of the star graph whose relators are the cyclically reduced `roots`.
pub(crate) fn closure_edges(n: u32, roots: &[Vec<Letter>]) -> Vec<(usize, usize, u32)> {
    let bits = 32 - (2 * n - 1).leading_zeros().min(31);
    let max_len = roots.iter().map(Vec::len).max().unwrap_or(0);
    let same_len = roots.iter().all(|r| r.len() == max_len);
    if same_len && (max_len as u32 + 2) * bits <= 128 {
        packed_closure_edges(n, roots, bits)
    } else {
        closure_edge_list(n, roots, |letters: &[Letter]| {
            letters.iter().map(|l| l.code()).collect::<Vec<u32>>()
        })
    }
}

/// [`closure_edge_list`] with each edge and word packed into one integer, edge first.
fn packed_closure_edges(n: u32, roots: &[Vec<Letter>], bits: u32) -> Vec<(usize, usize, u32)> {
    let word_bits = roots.first().map_or(0, |r| r.len() as u32) * bits;
    let mask = (1u128 << bits) - 1;
    let mut keys: Vec<u128> = Vec::with_capacity(2 * roots.iter().map(Vec::len).sum::<usize>());
    let mut doubled: Vec<Letter> = Vec::new();
    for r in roots {
        let k = r.len();
        for inverted in [false, true] {
            doubled.clear();
            if inverted {
                doubled.extend(r.iter().rev().map(|l| l.inverse()));
            } else {
                doubled.extend_from_slice(r);
            }
            doubled.extend_from_within(..);
            for s in 0..k {
                let a = vertex_of(n, doubled[s]) as u128;
                let b = vertex_of(n, doubled[s + 1].inverse()) as u128;
                let word =
                    doubled[s..s + k].iter().fold(0u128, |acc, l| (acc << bits) | u128::from(l.code()));
                keys.push((((a.min(b) << bits) | a.max(b)) << word_bits) | word);
            }
        }
    }
    keys.sort_unstable();
    keys.dedup();
    let mut edges: Vec<(usize, usize, u32)> = Vec::with_capacity(keys.len() / 2);
    for key in keys {
        let edge = key >> word_bits;
        let (u, v) = ((edge >> bits) as usize, (edge & mask) as usize);
        match edges.last_mut() {
            Some(last) if last.0 == u && last.1 == v => last.2 += 1,
            _ => edges.push((u, v, 1)),
        }
    }
    for e in &mut edges {
        e.2 /= 2;
    }
    edges
}

/// Counts the distinct closure words on each edge. A word and its partner are distinct and give
/// the same edge, so each count is twice the multiplicity.
fn closure_edge_list<K: Ord>(
    n: u32,
    roots: &[Vec<Letter>],
    encode: impl Fn(&[Letter]) -> K,
) -> Vec<(usize, usize, u32)> {
    let mut words: Vec<((usize, usize), K)> =
        Vec::with_capacity(2 * roots.iter().map(Vec::len).sum::<usize>());
    let mut doubled: Vec<Letter> = Vec::new();
    for r in roots {
        let k = r.len();
        for inverted in [false, true] {
            doubled.clear();
            if inverted {
                doubled.extend(r.iter().rev().map(|l| l.inverse()));
            } else {
                doubled.extend_from_slice(r);
            }
            doubled.extend_from_within(..);
            for s in 0..k {
                let a = vertex_of(n, doubled[s]);
                let b = vertex_of(n, doubled[s + 1].inverse());
                words.push(((a.min(b), a.max(b)), encode(&doubled[s..s + k])));
            }
        }
    }
    words.sort_unstable();
    words.dedup();
    let mut edges: Vec<(usize, usize, u32)> = Vec::with_capacity(words.len() / 2);
    for ((u, v), _) in words {
        match edges.last_mut() {
            Some(last) if last.0 == u && last.1 == v => last.2 += 1,
            _ => edges.push((u, v, 1)),
        }
    }
    for e in &mut edges {
        e.2 /= 2;
    }
    edges
}

/// Predicted component structure of a star graph of a cyclic presentation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComponentPrediction {
    pub count: usize,
    /// Positive and negative subscripts of each component.
    pub vertex_sets: Vec<(Vec<u32>, Vec<u32>)>,
    pub isomorphism_type: IsomorphismType,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum IsomorphismType {
    /// All components are images of one another under powers of the shift.
    ShiftImages { vertices_per_component: usize },
    /// Components of `circ_{order}(generators)` on the positive and on the negative vertices.
    Circulants {
        positive_order: u32,
        positive_generators: Vec<u32>,
        negative_order: u32,
        negative_generators: Vec<u32>,
    },
}

/// Star graph predicted from the subscript multisets, with the predicted components.
///
/// Requires a non-redundant presentation whose relator is not a proper power.
pub fn predicted_star_graph(p: &CyclicPresentation) -> Result<(StarGraph, ComponentPrediction)> {
    if p.redundant() {
        return Err(Error::Hypotheses("the presentation is redundant".into()));
    }
    if p.proper_power() {
        return Err(Error::Hypotheses("the relator is a proper power".into()));
    }
    let n = p.n();
    let ms = p.multisets();
    let graph = Multigraph::from_multiplicities(2 * n as usize, predicted_edges(n, &ms.a, &ms.b, &ms.q));
    let star = StarGraph { n, graph, provenance: Provenance::Predicted };

    let prediction = if sign_class(p.word()) == SignClass::Alternating {
        let (da, db) = (ms.d_a, ms.d_b);
        let mut vertex_sets = Vec::new();
        for j in 0..da {
            vertex_sets.push(((0..n / da).map(|t| j + t * da).collect(), Vec::new()));
        }
        for j in 0..db {
            vertex_sets.push((Vec::new(), (0..n / db).map(|t| j + t * db).collect()));
        }
        let scaled = |set: &[u32], d: u32| {
            let mut v: Vec<u32> = set.iter().map(|&x| x / d).collect();
            v.sort_unstable();
            v.dedup();
            v
        };
        ComponentPrediction {
            count: (da + db) as usize,
            vertex_sets,
            isomorphism_type: IsomorphismType::Circulants {
                positive_order: n / da,
                positive_generators: scaled(&ms.a, da),
                negative_order: n / db,
                negative_generators: scaled(&ms.b, db),
            },
        }
    } else {
        let d = ms.d.expect("non-alternating words have a nonempty Q");
        let q0 = ms.q0.expect("non-alternating words have a nonempty Q");
        let vertex_sets = (0..d)
            .map(|j| {
                let mut pos: Vec<u32> = (0..n / d).map(|t| (j + t * d) % n).collect();
                let mut neg: Vec<u32> = (0..n / d).map(|t| (j + q0 + t * d) % n).collect();
                pos.sort_unstable();
                neg.sort_unstable();
                (pos, neg)
            })
            .collect();
        ComponentPrediction {
            count: d as usize,
            vertex_sets,
            isomorphism_type: IsomorphismType::ShiftImages { vertices_per_component: 2 * (n / d) as usize },
        }
    };
    Ok((star, prediction))
}

/// Edges `x_i -- x_{i+a}`, `x_i^-1 -- x_{i+b}^-1` and `x_i -- x_{i+q}^-1` for all `i`.
pub(crate) fn predicted_edges(n: u32, a: &[u32], b: &[u32], q: &[u32]) -> Vec<(usize, usize, u32)> {
    let nn = u64::from(n);
    let pack = |u: u64, v: u64| (u.min(v) << 32) | u.max(v);
    let mut pairs: Vec<u64> = Vec::with_capacity(n as usize * (a.len() + b.len() + q.len()));
    for i in 0..nn {
        for &x in a {
            pairs.push(pack(i, (i + u64::from(x)) % nn));
        }
        for &x in b {
            pairs.push(pack(nn + i, nn + (i + u64::from(x)) % nn));
        }
        for &x in q {
            pairs.push(pack(i, nn + (i + u64::from(x)) % nn));
        }
    }
    pairs.sort_unstable();
    let mut edges: Vec<(usize, usize, u32)> = Vec::with_capacity(pairs.len());
    for p in pairs {
        let (u, v) = ((p >> 32) as usize, (p & 0xffff_ffff) as usize);
        match edges.last_mut() {
            Some(last) if last.0 == u && last.1 == v => last.2 += 1,
            _ => edges.push((u, v, 1)),
        }
    }
    edges
}

/// Circulant graph `circ_n(set)`: vertices `0..n`, edges `i -- i+a` for every `a` and `i`.
pub fn circulant(n: u32, set: &[u32]) -> Multigraph {
    let nn = n as usize;
    Multigraph::from_edges(nn, (0..nn).flat_map(|i| set.iter().map(move |&a| (i, (i + a as usize) % nn))))
}

/// Metrics of a star graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GraphProfile {
    pub vertices: usize,
    pub edges: usize,
    pub girth: Bound,
    pub diameter: Bound,
    pub component_count: usize,
    pub regular_degree: Option<u32>,
    pub bipartite: bool,
    pub min_degree: u32,
    pub max_degree: u32,
    pub components: Vec<Vec<usize>>,
    pub component_diameters: Vec<u32>,
    pub component_girths: Vec<Bound>,
}

pub fn graph_profile(g: &Multigraph) -> GraphProfile {
    let components = g.components();
    let (component_diameters, component_girths) = components
        .iter()
        .map(|c| {
            let sub = g.induced(c);
            (sub.diameter().expect("components are connected"), Bound::from_option(sub.girth()))
        })
        .unzip();
    GraphProfile {
        vertices: g.order(),
        edges: g.edge_count(),
        girth: Bound::from_option(g.girth()),
        diameter: Bound::from_option(g.diameter()),
        component_count: components.len(),
        regular_degree: g.regular_degree(),
        bipartite: g.is_bipartite(),
        min_degree: g.min_degree(),
        max_degree: g.max_degree(),
        components,
        component_diameters,
        component_girths,
    }
}

/// Components larger than this are not searched for isomorphisms by backtracking.
pub const ISOMORPHISM_SEARCH_LIMIT: usize = 64;

/// Whether all components of a star graph are pairwise isomorphic.
///
/// When the shift is an automorphism every component is the image of the component of `x0`
/// or of `x0^-1`, so at most one comparison is needed; otherwise every component is compared
/// with the first by backtracking search.
pub fn components_isomorphic(star: &StarGraph) -> Result<bool> {
    let g = star.graph();
    let components = g.components();
    if components.len() <= 1 {
        return Ok(true);
    }
    let size = components[0].len();
    if components.iter().any(|c| c.len() != size) {
        return Ok(false);
    }
    let subgraphs: Vec<Multigraph> = components.iter().map(|c| g.induced(c)).collect();
    let edge_count = subgraphs[0].edge_count();
    if subgraphs.iter().any(|s| s.edge_count() != edge_count) {
        return Ok(false);
    }
    let n = star.n() as usize;
    if star.shift_is_automorphism() {
        let (ids, _) = g.component_ids();
        let negative_only = components.iter().any(|c| c.iter().all(|&v| v >= n));
        if !negative_only {
            return Ok(true);
        }
        let (a, b) = (ids[0], ids[n]);
        if a == b {
            return Ok(true);
        }
        return iso::isomorphic(&subgraphs[a], &subgraphs[b], ISOMORPHISM_SEARCH_LIMIT);
    }
    for other in &subgraphs[1..] {
        if !iso::isomorphic(&subgraphs[0], other, ISOMORPHISM_SEARCH_LIMIT)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// DOT rendering with vertices `x<i>` / `x<i>_inv` annotated by component, and one line per
/// edge copy in sorted order.
pub fn to_dot(star: &StarGraph) -> String {
    let g = star.graph();
    let (ids, count) = g.component_ids();
    let mut out = String::new();
    let _ = writeln!(out, "graph star {{");
    let _ = writeln!(out, "  // n = {}, components = {}", star.n(), count);
    for v in 0..g.order() {
        let _ = writeln!(out, "  {} [component={}];", star.vertex_name(v), ids[v]);
    }
    for &(u, v, m) in g.edges() {
        for _ in 0..m {
            let _ = writeln!(out, "  {} -- {};", star.vertex_name(u), star.vertex_name(v));
        }
    }
    out.push_str("}\n");
    out
}

/// `gcd(n, set)`, the number of components of `circ_n(set)`.
pub fn circulant_component_count(n: u32, set: &[u32]) -> u32 {
    set.iter().fold(n, |g, &a| g.gcd(&a))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::{parse_word, presentation_flags};

    fn pres(n: u32, text: &str) -> CyclicPresentation {
        presentation_flags(n, &parse_word(text, n).unwrap()).unwrap()
    }

    #[test]
    fn heawood_from_generic_construction() {
        let g = cyclic_star_graph(&pres(7, "x0 x1 x3"));
        let p = graph_profile(g.graph());
        assert_eq!((p.vertices, p.edges), (14, 21));
        assert_eq!(p.regular_degree, Some(3));
        assert_eq!((p.girth, p.diameter), (Bound::Finite(6), Bound::Finite(3)));
        assert!(p.bipartite);
    }

    #[test]
    fn build_from_relator_list_matches_cyclic_builder() {
        let p = pres(7, "x0 x1 x3");
        let from_list = build_star_graph(7, &p.relators()).unwrap();
        assert_eq!(from_list, cyclic_star_graph(&p));
    }

    #[test]
    fn redundant_presentation_gives_twelve_cycle() {
        let g = cyclic_star_graph(&pres(6, "x0 x1 x3 x4"));
        let p = graph_profile(g.graph());
        assert_eq!(p.edges, 12);
        assert_eq!(p.regular_degree, Some(2));
        assert_eq!(p.girth, Bound::Finite(12));
        assert_eq!(p.component_count, 1);
    }

    #[test]
    fn cube_relator_gives_matching() {
        let g = cyclic_star_graph(&pres(5, "x0^3"));
        assert_eq!(g.graph().edges(), &[(0, 5, 1), (1, 6, 1), (2, 7, 1), (3, 8, 1), (4, 9, 1)]);
    }

    #[test]
    fn rejects_bad_relators() {
        let w = parse_word("x0 x1 x1^-1", 3).unwrap();
        assert!(matches!(build_star_graph(3, &[w]), Err(Error::NotCyclicallyReduced(_))));
        let w = parse_word("x0 x1", 4).unwrap();
        assert!(matches!(build_star_graph(3, &[w]), Err(Error::RankMismatch { .. })));
    }

    #[test]
    fn long_relators_take_the_unpacked_path() {
        // 21 letters over 14 codes do not fit in 128 bits.
        let p = pres(7, "x0^2 x1 x4^2 x5 x1^2 x2 x5^2 x6 x2^2 x3 x6^2 x0 x3^2 x4");
        let g = cyclic_star_graph(&p);
        assert_eq!(g.graph().order(), 14);
        assert!(g.shift_is_automorphism());
    }

    #[test]
    fn prediction_for_three_heawoods() {
        let p = pres(21, "x0 x1 x5");
        let (pred_graph, pred) = predicted_star_graph(&p).unwrap();
        assert_eq!(pred.count, 3);
        for (j, (pos, neg)) in pred.vertex_sets.iter().enumerate() {
            assert!(pos.iter().all(|&i| i % 3 == j as u32));
            assert_eq!(neg.len(), 7);
        }
        assert_eq!(pred_graph.graph().edges(), cyclic_star_graph(&p).graph().edges());
        assert!(components_isomorphic(&cyclic_star_graph(&p)).unwrap());
    }

    #[test]
    fn prediction_for_alternating_word() {
        let p = pres(8, "x0 x1^-1 x4 x7^-1");
        let (pred_graph, pred) = predicted_star_graph(&p).unwrap();
        let generic = cyclic_star_graph(&p);
        assert_eq!(pred_graph.graph().edges(), generic.graph().edges());
        assert_eq!(pred.count, generic.graph().components().len());
    }

    #[test]
    fn prediction_requires_hypotheses() {
        assert!(matches!(predicted_star_graph(&pres(6, "x0 x1 x3 x4")), Err(Error::Hypotheses(_))));
        assert!(matches!(predicted_star_graph(&pres(5, "x0 x1 x0 x1")), Err(Error::Hypotheses(_))));
    }

    #[test]
    fn circulants() {
        let g = circulant(6, &[2]);
        assert_eq!(g.components().len(), 2);
        assert_eq!(g.girth(), Some(3));
        let g = circulant(5, &[1]);
        assert_eq!(g, Multigraph::cycle(5));
        assert_eq!(circulant_component_count(6, &[2]), 2);
    }

    #[test]
    fn non_isomorphic_components_detected() {
        let g = Multigraph::complete_bipartite(4, 4).disjoint_union(&Multigraph::cycle(6));
        // Not a star graph of a cyclic presentation, so embed on 2n = 14 vertices.
        let star = StarGraph { n: 7, graph: g, provenance: Provenance::Generic };
        assert!(!components_isomorphic(&star).unwrap());
    }

    #[test]
    fn dot_export_is_sorted_and_annotated() {
        let dot = to_dot(&cyclic_star_graph(&pres(7, "x0 x1 x3")));
        assert!(dot.starts_with("graph star {"));
        assert!(dot.contains("x0 [component=0];"));
        assert!(dot.contains("x6_inv [component=0];"));
        let edges: Vec<&str> = dot.lines().filter(|l| l.contains("--")).collect();
        assert_eq!(edges.len(), 21);
        assert_eq!(edges[0].trim(), "x0 -- x1_inv;");
    }
}
