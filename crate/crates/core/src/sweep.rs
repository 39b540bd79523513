//! Exhaustive cross-checks over all words of a given length and rank.
//!
//! Words are grouped into classes closed under rotation, inversion and shifting subscripts.
//! Every member of a class has the same star graph, so the graph and the direct verdict are
//! computed once per class. The subscript multisets of a member equal those of the class
//! representative or of its inverse, so criteria verdicts and predicted graphs are computed for
//! those two words and apply to every member.

use serde::Serialize;

use crate::classify::{criteria_verdict, direct_verdict, girth_bound_audit_with};
use crate::enumerate::{self, Codes};
use crate::error::Result;
use crate::graph::Bound;
use crate::par::{self, Execution};
use crate::star::{cyclic_star_graph, predicted_edges};
use crate::word::{presentation_flags, CyclicPresentation};

/// Examples kept per sweep when something disagrees.
const EXAMPLES: usize = 10;

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct OracleSweep {
    /// Cyclically reduced words with first letter `x0^±1`.
    pub words: u64,
    pub classes: u64,
    /// Words meeting the hypotheses of the closed-form criteria.
    pub criteria_words: u64,
    /// Of those, words the definition finds special.
    pub special_words: u64,
    pub verdict_disagreements: u64,
    /// Non-redundant words that are not proper powers.
    pub structural_words: u64,
    pub structural_mismatches: u64,
    pub examples: Vec<String>,
}

impl OracleSweep {
    fn merge(&mut self, other: OracleSweep) {
        self.words += other.words;
        self.classes += other.classes;
        self.criteria_words += other.criteria_words;
        self.special_words += other.special_words;
        self.verdict_disagreements += other.verdict_disagreements;
        self.structural_words += other.structural_words;
        self.structural_mismatches += other.structural_mismatches;
        for e in other.examples {
            if self.examples.len() < EXAMPLES {
                self.examples.push(e);
            }
        }
    }

    fn example(&mut self, text: String) {
        if self.examples.len() < EXAMPLES {
            self.examples.push(text);
        }
    }
}

/// Class representatives of length `k` over rank `n` starting with `prefix`, with the number
/// of words in each class.
fn class_representatives(n: u32, k: usize, prefix: &[u32]) -> (u64, Vec<(Codes, u64)>) {
    let mut words = 0u64;
    let mut reps = Vec::new();
    enumerate::for_each_word(n, k, prefix, &mut |codes| {
        words += 1;
        if enumerate::is_class_minimum(n, codes) {
            let members = enumerate::class_members(n, codes).len() as u64;
            reps.push((Codes::from_slice(codes), members));
        }
    });
    (words, reps)
}

/// The class representative and its inverse, as presentations.
fn representative_pair(n: u32, codes: &[u32]) -> Result<[CyclicPresentation; 2]> {
    let p = presentation_flags(n, &enumerate::to_word(n, codes))?;
    let inv = p.inverted();
    Ok([p, inv])
}

/// Compares criteria verdicts with the definition and predicted star graphs with the generic
/// construction, for every cyclically reduced word of length `k` over rank `n`.
pub fn oracle_sweep(n: u32, k: usize, exec: Execution) -> Result<OracleSweep> {
    let prefixes = enumerate::prefixes(n, k);
    let parts = par::map_ordered(&prefixes, exec, |prefix| -> Result<OracleSweep> {
        let (words, reps) = class_representatives(n, k, prefix);
        let mut out = OracleSweep { words, classes: reps.len() as u64, ..OracleSweep::default() };
        for (codes, members) in reps {
            let pair = representative_pair(n, &codes)?;
            let p = &pair[0];
            let structural = !p.redundant() && !p.proper_power();
            if !structural {
                continue;
            }
            let star = cyclic_star_graph(p);
            let generic = star.graph().edges();
            out.structural_words += members;
            for q in &pair {
                let ms = q.multisets();
                if predicted_edges(n, &ms.a, &ms.b, &ms.q) != generic {
                    out.structural_mismatches += members;
                    out.example(format!("predicted graph differs for `{}` over rank {n}", q.word()));
                    break;
                }
            }
            if criteria_verdict(p).is_none() {
                continue;
            }
            out.criteria_words += members;
            let direct = match direct_verdict(&star, k) {
                Ok((v, _)) => v,
                Err(e) => {
                    out.verdict_disagreements += members;
                    out.example(format!("`{}` over rank {n}: {e}", p.word()));
                    continue;
                }
            };
            if direct.is_special() {
                out.special_words += members;
            }
            for q in &pair {
                let (verdict, _) = criteria_verdict(q).expect("hypotheses hold for the whole class");
                if !verdict.same_outcome(&direct) {
                    out.verdict_disagreements += members;
                    out.example(format!("`{}` over rank {n}: criteria {verdict}, direct {direct}", q.word()));
                    break;
                }
            }
        }
        Ok(out)
    });
    let mut total = OracleSweep::default();
    for part in parts {
        total.merge(part?);
    }
    Ok(total)
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct GirthSweep {
    pub words: u64,
    /// Non-redundant words that are not proper powers.
    pub audited_words: u64,
    pub max_girth: u32,
    /// Words with girth above 6.
    pub long_girth_words: u64,
    pub violations: u64,
    pub examples: Vec<String>,
}

/// Runs the girth-bound audit on every cyclically reduced word of length `k` over rank `n`.
pub fn girth_sweep(n: u32, k: usize, exec: Execution) -> Result<GirthSweep> {
    let prefixes = enumerate::prefixes(n, k);
    let parts = par::map_ordered(&prefixes, exec, |prefix| -> Result<GirthSweep> {
        let (words, reps) = class_representatives(n, k, prefix);
        let mut out = GirthSweep { words, ..GirthSweep::default() };
        for (codes, members) in reps {
            let pair = representative_pair(n, &codes)?;
            let p = &pair[0];
            if p.redundant() || p.proper_power() {
                continue;
            }
            out.audited_words += members;
            let girth = Bound::from_option(cyclic_star_graph(p).graph().girth());
            match girth {
                Bound::Finite(g) => out.max_girth = out.max_girth.max(g),
                Bound::Infinite => out.max_girth = u32::MAX,
            }
            if girth > Bound::Finite(6) {
                out.long_girth_words += members;
            }
            for q in &pair {
                let audit = girth_bound_audit_with(q, girth);
                if !audit.violations.is_empty() {
                    out.violations += members;
                    if out.examples.len() < EXAMPLES {
                        out.examples.extend(audit.violations);
                    }
                    break;
                }
            }
        }
        Ok(out)
    });
    let mut total = GirthSweep::default();
    for part in parts {
        let part = part?;
        total.words += part.words;
        total.audited_words += part.audited_words;
        total.max_girth = total.max_girth.max(part.max_girth);
        total.long_girth_words += part.long_girth_words;
        total.violations += part.violations;
        for e in part.examples {
            if total.examples.len() < EXAMPLES {
                total.examples.push(e);
            }
        }
    }
    Ok(total)
}
