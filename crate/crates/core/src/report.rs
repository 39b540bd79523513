//! The analysis report for a single presentation, as JSON or a plain-text table.

use std::fmt::{Display, Write as _};

use serde::{Serialize, Serializer};

use crate::classify::{classify, largeness_flags, LargenessFlags, SpecialityReport, Verdict};
use crate::error::Result;
use crate::graph::Bound;
use crate::polygon::PolygonVerdict;
use crate::smallcancel::{small_cancellation, PieceReport};
use crate::star::{cyclic_star_graph, graph_profile, StarGraph};
use crate::word::{parse_word, presentation_flags, Multiset, SignClass};

pub(crate) fn serialize_display<T: Display, S: Serializer>(value: &T, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(value)
}

#[derive(Clone, Debug, Serialize)]
pub struct Flags {
    pub irreducible: bool,
    pub redundant: bool,
    pub proper_power: bool,
    pub sign_class: SignClass,
}

#[derive(Clone, Debug, Serialize)]
pub struct MultisetSummary {
    #[serde(rename = "A")]
    pub a: Multiset,
    #[serde(rename = "B")]
    pub b: Multiset,
    #[serde(rename = "Q")]
    pub q: Multiset,
    #[serde(rename = "Qplus")]
    pub q_plus: Multiset,
    #[serde(rename = "Qminus")]
    pub q_minus: Multiset,
    pub d: Option<u32>,
    #[serde(rename = "dA")]
    pub d_a: u32,
    #[serde(rename = "dB")]
    pub d_b: u32,
    pub sigma: i64,
}

#[derive(Clone, Debug, Serialize)]
pub struct GraphSummary {
    pub vertices: usize,
    pub edges: usize,
    pub girth: Bound,
    pub diameter: Bound,
    pub regular_degree: Option<u32>,
    /// Vertex names of each component.
    pub components: Vec<Vec<String>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SpecialitySummary {
    pub verdict: String,
    pub m: Option<u32>,
    pub k: usize,
    pub nu: Option<usize>,
    pub method: String,
    pub reason: Option<String>,
    pub notes: Vec<String>,
}

/// Everything `analyze` reports about `P_n(w)`.
#[derive(Clone, Debug, Serialize)]
pub struct AnalysisReport {
    pub n: u32,
    pub word: String,
    pub flags: Flags,
    pub multisets: MultisetSummary,
    pub graph: GraphSummary,
    pub component_verdicts: Vec<PolygonVerdict>,
    pub small_cancellation: PieceReport,
    pub speciality: SpecialitySummary,
    /// Absent for redundant presentations.
    pub largeness: Option<LargenessFlags>,
    #[serde(skip)]
    pub star: StarGraph,
}

/// Parses `text` over rank `n` and analyzes the resulting cyclic presentation.
pub fn analyze(n: u32, text: &str) -> Result<AnalysisReport> {
    let w = parse_word(text, n)?;
    let p = presentation_flags(n, &w)?;
    let star = cyclic_star_graph(&p);
    let profile = graph_profile(star.graph());
    let ms = p.multisets();
    let speciality: SpecialityReport = classify(&p)?;
    let (m, nu, reason) = match &speciality.verdict {
        Verdict::Special { m, nu, .. } => (Some(*m), Some(*nu), None),
        Verdict::NotSpecial { reason } => (None, None, Some(reason.to_string())),
    };
    Ok(AnalysisReport {
        n,
        word: p.word().to_string(),
        flags: Flags {
            irreducible: p.irreducible(),
            redundant: p.redundant(),
            proper_power: p.proper_power(),
            sign_class: p.sign_class(),
        },
        multisets: MultisetSummary {
            a: ms.a.clone(),
            b: ms.b.clone(),
            q: ms.q.clone(),
            q_plus: ms.q_plus.clone(),
            q_minus: ms.q_minus.clone(),
            d: if p.sign_class() == SignClass::Alternating { None } else { ms.d },
            d_a: ms.d_a,
            d_b: ms.d_b,
            sigma: ms.sigma,
        },
        graph: GraphSummary {
            vertices: profile.vertices,
            edges: profile.edges,
            girth: profile.girth,
            diameter: profile.diameter,
            regular_degree: profile.regular_degree,
            components: profile
                .components
                .iter()
                .map(|c| c.iter().map(|&v| star.vertex_name(v)).collect())
                .collect(),
        },
        component_verdicts: speciality.component_verdicts.clone(),
        small_cancellation: small_cancellation(&p, &star)?,
        speciality: SpecialitySummary {
            verdict: speciality.verdict.to_string(),
            m,
            k: p.word().len(),
            nu,
            method: speciality.method.to_string(),
            reason,
            notes: speciality.notes.clone(),
        },
        largeness: largeness_flags(&p).ok(),
        star,
    })
}

impl AnalysisReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let list = |m: &Multiset| {
            let items: Vec<String> = m.iter().map(u32::to_string).collect();
            format!("{{{}}}", items.join(", "))
        };
        let opt = |v: Option<u32>| v.map_or("-".to_string(), |x| x.to_string());
        let mut row = |key: &str, value: String| {
            let _ = writeln!(out, "{key:<22}{value}");
        };
        row("presentation", format!("P_{}({})", self.n, self.word));
        row("sign class", self.flags.sign_class.to_string());
        row("irreducible", self.flags.irreducible.to_string());
        row("redundant", self.flags.redundant.to_string());
        row("proper power", self.flags.proper_power.to_string());
        row("A", list(&self.multisets.a));
        row("B", list(&self.multisets.b));
        row("Q+", list(&self.multisets.q_plus));
        row("Q-", list(&self.multisets.q_minus));
        row(
            "d / dA / dB",
            format!("{} / {} / {}", opt(self.multisets.d), self.multisets.d_a, self.multisets.d_b),
        );
        row("sigma", self.multisets.sigma.to_string());
        row("vertices", self.graph.vertices.to_string());
        row("edges", self.graph.edges.to_string());
        row("components", self.graph.components.len().to_string());
        row("regular degree", opt(self.graph.regular_degree));
        row("girth", self.graph.girth.to_string());
        row("diameter", self.graph.diameter.to_string());
        for (i, v) in self.component_verdicts.iter().enumerate() {
            let text = match v {
                PolygonVerdict::GeneralizedPolygon { m, refinement, part_sizes } => {
                    let extra = match refinement {
                        Some(crate::polygon::Refinement::ProjectivePlane { order }) => {
                            format!(", projective plane of order {order}")
                        }
                        Some(crate::polygon::Refinement::CompleteBipartite { a, b }) => {
                            format!(", K_{{{a},{b}}}")
                        }
                        None => String::new(),
                    };
                    format!("generalized {m}-gon, parts {}+{}{extra}", part_sizes.0, part_sizes.1)
                }
                PolygonVerdict::NotPolygon { reason, .. } => format!("not a polygon: {reason:?}"),
            };
            row(&format!("component {i}"), text);
        }
        let sc = &self.small_cancellation;
        row("max piece", sc.max_piece_length.to_string());
        row(
            "C / T",
            format!(
                "C({}) / T({}){}",
                sc.c_parameter,
                sc.t_parameter,
                if sc.t_advisory { " advisory" } else { "" }
            ),
        );
        row("speciality", format!("{} [{}]", self.speciality.verdict, self.speciality.method));
        if let Some(reason) = &self.speciality.reason {
            row("reason", reason.clone());
        }
        for note in &self.speciality.notes {
            row("note", note.clone());
        }
        match &self.largeness {
            Some(l) => row(
                "large (arithmetic)",
                format!("{} (delta {}, sigma {})", l.large_by_cor35, l.delta, l.sigma),
            ),
            None => row("large (arithmetic)", "- (redundant)".to_string()),
        }
        out
    }
}
