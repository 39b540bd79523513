//! Pieces and the small cancellation parameters `C(p)` and `T(q)`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Bound;
use crate::star::StarGraph;
use crate::word::{CyclicPresentation, Letter, SignClass, Word};

/// Small cancellation data of a presentation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PieceReport {
    #[serde(rename = "max_piece")]
    pub max_piece_length: usize,
    pub min_relator_length: usize,
    /// Largest `p` with `max_piece_length * (p - 1) < min_relator_length`.
    #[serde(rename = "C")]
    pub c_parameter: Bound,
    /// Length of a shortest reduced closed path of length at least 3 in the star graph.
    #[serde(rename = "T")]
    pub t_parameter: Bound,
    /// Set when `C(3)` fails, so `t_parameter` is not backed by the star-graph criterion.
    pub t_advisory: bool,
}

/// Longest piece and shortest relator over the symmetrized closure of `relators`.
///
/// Relators that are cyclic permutations of an earlier relator or of its inverse are
/// dropped. A piece is a common prefix of two closure elements at different positions; when
/// two positions carry the same word (as for a proper power) the common prefix is taken to be
/// one letter short of the whole word.
pub fn compute_pieces(relators: &[Word]) -> Result<(usize, usize)> {
    let mut kept: Vec<&Word> = Vec::new();
    for r in relators {
        if r.is_empty() {
            return Err(Error::EmptyWord);
        }
        if !r.is_cyclically_reduced() {
            return Err(Error::NotCyclicallyReduced(r.to_string()));
        }
        let inv = r.inverse();
        if !kept.iter().any(|k| r.is_rotation_of(k) || inv.is_rotation_of(k)) {
            kept.push(r);
        }
    }
    let mut closure: Vec<Vec<Letter>> = Vec::new();
    for r in &kept {
        for w in [(*r).clone(), r.inverse()] {
            for s in 0..w.len() {
                closure.push(w.rotate(s as i64).letters().to_vec());
            }
        }
    }
    closure.sort_unstable();
    let mut max_piece = 0;
    for pair in closure.windows(2) {
        let (x, y) = (&pair[0], &pair[1]);
        let common = x.iter().zip(y).take_while(|(a, b)| a == b).count();
        let piece = if x == y { x.len() - 1 } else { common };
        max_piece = max_piece.max(piece);
    }
    let min_len = kept.iter().map(|r| r.len()).min().unwrap_or(0);
    Ok((max_piece, min_len))
}

/// Largest `p` such that no relator is a product of fewer than `p` pieces, using
/// `max_piece * (p - 1) < min_len`.
pub fn c_parameter(max_piece: usize, min_len: usize) -> Bound {
    if max_piece == 0 {
        Bound::Infinite
    } else {
        Bound::Finite(min_len.div_ceil(max_piece) as u32)
    }
}

/// Largest `q` such that the star graph has no reduced closed path of length `l` with
/// `3 <= l < q`, and whether the value is only advisory because `C(3)` fails.
pub fn t_parameter(c: Bound, star: &StarGraph) -> (Bound, bool) {
    let g = star.graph();
    let value = match g.girth() {
        Some(girth) if girth >= 3 => Bound::Finite(girth),
        None => Bound::Infinite,
        Some(_) => Bound::from_option(g.shortest_reduced_closed_path(3)),
    };
    (value, c < Bound::Finite(3))
}

/// Full report for a cyclic presentation and its star graph.
pub fn small_cancellation(p: &CyclicPresentation, star: &StarGraph) -> Result<PieceReport> {
    let (max_piece_length, min_relator_length) = compute_pieces(&p.relators())?;
    let c = c_parameter(max_piece_length, min_relator_length);
    let (t, advisory) = t_parameter(c, star);
    Ok(PieceReport {
        max_piece_length,
        min_relator_length,
        c_parameter: c,
        t_parameter: t,
        t_advisory: advisory,
    })
}

/// For a non-redundant presentation with a non-negative relator of length at least 3 that is
/// not a proper power, `T(q)` with `q >= 7` forces length 3, `q <= 8` and a non-positive
/// relator. Returns a description of the violation, if any.
pub fn large_t_lint(p: &CyclicPresentation, report: &PieceReport) -> Option<String> {
    let class = p.sign_class();
    let applies = !p.redundant()
        && !p.proper_power()
        && class != SignClass::Negative
        && p.word().len() >= 3
        && report.t_parameter >= Bound::Finite(7);
    if !applies {
        return None;
    }
    let ok = p.word().len() == 3 && report.t_parameter <= Bound::Finite(8) && class != SignClass::Positive;
    (!ok).then(|| {
        format!(
            "T({}) reported for `{}` over rank {} ({} word of length {})",
            report.t_parameter,
            p.word(),
            p.n(),
            class,
            p.word().len()
        )
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::star::cyclic_star_graph;
    use crate::word::{parse_word, presentation_flags};

    fn report(n: u32, text: &str) -> PieceReport {
        let p = presentation_flags(n, &parse_word(text, n).unwrap()).unwrap();
        small_cancellation(&p, &cyclic_star_graph(&p)).unwrap()
    }

    #[test]
    fn fano_presentation() {
        let r = report(7, "x0 x1 x3");
        assert_eq!(r.max_piece_length, 1);
        assert_eq!(r.c_parameter, Bound::Finite(3));
        assert_eq!(r.t_parameter, Bound::Finite(6));
        assert!(!r.t_advisory);
    }

    #[test]
    fn redundant_twelve_cycle() {
        let r = report(6, "x0 x1 x3 x4");
        assert_eq!(r.t_parameter, Bound::Finite(12));
    }

    #[test]
    fn proper_powers() {
        let r = report(5, "x0^3");
        assert_eq!(r.max_piece_length, 2);
        // Single-generator presentation <a | a^4>.
        let r = report(1, "x0^4");
        assert_eq!(r.max_piece_length, 3);
        assert_eq!(r.c_parameter, Bound::Finite(2));
    }

    #[test]
    fn girth_two_needs_a_longer_path() {
        // x0 x1 x3 x4 over rank 9 has a repeated difference, so its star graph has girth 2.
        let r = report(9, "x0 x1 x3 x4");
        assert!(r.t_advisory);
        assert!(r.t_parameter >= Bound::Finite(3));
    }

    #[test]
    fn c_parameter_formula() {
        assert_eq!(c_parameter(0, 3), Bound::Infinite);
        assert_eq!(c_parameter(1, 4), Bound::Finite(4));
        assert_eq!(c_parameter(2, 5), Bound::Finite(3));
        assert_eq!(c_parameter(2, 4), Bound::Finite(2));
    }
}
