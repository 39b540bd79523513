//! Speciality of cyclic presentations: the direct check from the definition, the closed-form
//! criteria for each sign class, the girth-bound audit, largeness flags and the search.

use std::fmt;

use num_integer::Integer;
use serde::Serialize;

use crate::diffset;
use crate::enumerate::{self, Codes};
use crate::error::{Error, Result};
use crate::graph::Bound;
use crate::par::{self, Execution};
use crate::polygon::{recognize_generalized_polygon, NotPolygonReason, PolygonVerdict};
use crate::star::{self, cyclic_star_graph, StarGraph};
use crate::word::{presentation_flags, sign_class, CyclicPresentation, SignClass, SubscriptMultisets, Word};

/// Why a presentation is not special.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Rejection {
    TooFewGenerators {
        n: u32,
    },
    RelatorTooShort {
        k: usize,
    },
    Component {
        index: usize,
        reason: NotPolygonReason,
    },
    UnequalPolygonOrders,
    ComponentsNotIsomorphic,
    /// `m = 2` needs relators of length at least 4.
    ShortDigonRelators {
        k: usize,
    },
    /// A closed-form condition failed.
    Criteria {
        failed: String,
    },
}

impl fmt::Display for Rejection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rejection::TooFewGenerators { n } => write!(f, "fewer than 3 generators (n = {n})"),
            Rejection::RelatorTooShort { k } => write!(f, "relator length {k} < 3"),
            Rejection::Component { index, reason } => {
                write!(f, "component {index} is not a generalized polygon: {reason:?}")
            }
            Rejection::UnequalPolygonOrders => f.write_str("components are polygons of different orders"),
            Rejection::ComponentsNotIsomorphic => f.write_str("components are not isomorphic"),
            Rejection::ShortDigonRelators { k } => write!(f, "m = 2 with relator length {k} < 4"),
            Rejection::Criteria { failed } => f.write_str(failed),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Verdict {
    Special { m: u32, k: usize, nu: usize },
    NotSpecial { reason: Rejection },
}

impl Verdict {
    pub fn is_special(&self) -> bool {
        matches!(self, Verdict::Special { .. })
    }

    /// `(m, k, nu)` for special presentations.
    pub fn parameters(&self) -> Option<(u32, usize, usize)> {
        match self {
            Verdict::Special { m, k, nu } => Some((*m, *k, *nu)),
            Verdict::NotSpecial { .. } => None,
        }
    }

    /// Equality of the outcome, ignoring rejection reasons.
    pub fn same_outcome(&self, other: &Verdict) -> bool {
        self.parameters() == other.parameters()
    }

    fn not(failed: impl Into<String>) -> Verdict {
        Verdict::NotSpecial { reason: Rejection::Criteria { failed: failed.into() } }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Special { m, k, nu } => write!(f, "SPECIAL({m},{k},{nu})"),
            Verdict::NotSpecial { .. } => f.write_str("NOT_SPECIAL"),
        }
    }
}

/// Which closed-form criteria produced a verdict.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Criteria {
    /// Projective planes and digons for positive (or, after inversion, negative) relators.
    Positive,
    Alternating,
    Mixed,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "method", content = "criteria", rename_all = "snake_case")]
pub enum Method {
    Direct,
    Criteria(Criteria),
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Method::Direct => f.write_str("direct"),
            Method::Criteria(Criteria::Positive) => f.write_str("criteria:positive"),
            Method::Criteria(Criteria::Alternating) => f.write_str("criteria:alternating"),
            Method::Criteria(Criteria::Mixed) => f.write_str("criteria:mixed"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Hypotheses {
    pub irreducible: bool,
    pub non_redundant: bool,
    pub proper_power: bool,
    pub sign_class: SignClass,
}

impl Hypotheses {
    pub fn of(p: &CyclicPresentation) -> Hypotheses {
        Hypotheses {
            irreducible: p.irreducible(),
            non_redundant: !p.redundant(),
            proper_power: p.proper_power(),
            sign_class: p.sign_class(),
        }
    }

    /// Irreducible, non-redundant and not a proper power.
    pub fn standing(&self) -> bool {
        self.irreducible && self.non_redundant && !self.proper_power
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpecialityReport {
    pub verdict: Verdict,
    pub component_verdicts: Vec<PolygonVerdict>,
    pub method: Method,
    pub hypotheses: Hypotheses,
    pub notes: Vec<String>,
}

/// Verdict from the definition on a prebuilt star graph, with one polygon verdict per component.
pub fn direct_verdict(star: &StarGraph, k: usize) -> Result<(Verdict, Vec<PolygonVerdict>)> {
    let n = star.n();
    if n < 3 {
        return Ok((Verdict::NotSpecial { reason: Rejection::TooFewGenerators { n } }, Vec::new()));
    }
    if k < 3 {
        return Ok((Verdict::NotSpecial { reason: Rejection::RelatorTooShort { k } }, Vec::new()));
    }
    let g = star.graph();
    let components = g.components();
    let verdicts: Vec<PolygonVerdict> = if components.len() == 1 {
        vec![recognize_generalized_polygon(g)]
    } else {
        components.iter().map(|c| recognize_generalized_polygon(&g.induced(c))).collect()
    };
    let reject = |reason| Ok((Verdict::NotSpecial { reason }, verdicts.clone()));
    if let Some((index, PolygonVerdict::NotPolygon { reason, .. })) =
        verdicts.iter().enumerate().find(|(_, v)| v.m().is_none())
    {
        return reject(Rejection::Component { index, reason: reason.clone() });
    }
    let m = verdicts[0].m().expect("all components are polygons");
    if verdicts.iter().any(|v| v.m() != Some(m)) {
        return reject(Rejection::UnequalPolygonOrders);
    }
    if !star::components_isomorphic(star)? {
        return reject(Rejection::ComponentsNotIsomorphic);
    }
    if m == 2 && k < 4 {
        return reject(Rejection::ShortDigonRelators { k });
    }
    Ok((Verdict::Special { m, k, nu: components.len() }, verdicts))
}

/// Decides speciality from the definition by building and inspecting the star graph.
pub fn check_special_direct(p: &CyclicPresentation) -> Result<SpecialityReport> {
    let star = cyclic_star_graph(p);
    let (verdict, component_verdicts) = direct_verdict(&star, p.word().len())?;
    Ok(SpecialityReport {
        verdict,
        component_verdicts,
        method: Method::Direct,
        hypotheses: Hypotheses::of(p),
        notes: Vec::new(),
    })
}

fn require(p: &CyclicPresentation, classes: &[SignClass], min_len: usize) -> Result<()> {
    let h = Hypotheses::of(p);
    let mut missing = Vec::new();
    if !classes.contains(&h.sign_class) {
        missing.push(format!("relator is {}", h.sign_class));
    }
    if p.word().len() < min_len {
        missing.push(format!("relator length {} < {min_len}", p.word().len()));
    }
    if h.proper_power {
        missing.push("relator is a proper power".to_string());
    }
    if !h.irreducible {
        missing.push("presentation is reducible".to_string());
    }
    if !h.non_redundant {
        missing.push("presentation is redundant".to_string());
    }
    if missing.is_empty() {
        Ok(())
    } else {
        Err(Error::Hypotheses(missing.join("; ")))
    }
}

fn criteria_report(p: &CyclicPresentation, verdict: Verdict, criteria: Criteria) -> SpecialityReport {
    SpecialityReport {
        verdict,
        component_verdicts: Vec::new(),
        method: Method::Criteria(criteria),
        hypotheses: Hypotheses::of(p),
        notes: Vec::new(),
    }
}

/// Projective-plane criterion for a positive relator of length `k`: `n = nu (k^2 - k + 1)`,
/// `Q` is a perfect difference set, all `q` are congruent modulo `nu`, and `nu | k`.
pub fn projective_positive_verdict(n: u32, ms: &SubscriptMultisets) -> Verdict {
    let k = ms.q.len();
    let big_n = diffset::modulus(k) as u32;
    if !n.is_multiple_of(big_n) {
        return Verdict::not(format!("n = {n} is not a multiple of {big_n}"));
    }
    let nu = n / big_n;
    let reduced: Vec<i64> = ms.q.iter().map(|&q| i64::from(q % big_n)).collect();
    if !diffset::is_perfect_difference_set(&reduced, k).unwrap_or(false) {
        return Verdict::not("Q is not a perfect difference set");
    }
    if ms.q.iter().any(|&q| q % nu != ms.q[0] % nu) {
        return Verdict::not(format!("elements of Q are not congruent modulo {nu}"));
    }
    if !(k as u32).is_multiple_of(nu) {
        return Verdict::not(format!("{nu} does not divide k = {k}"));
    }
    Verdict::Special { m: 3, k, nu: nu as usize }
}

/// Complete-bipartite criterion for a positive relator: `k >= 5` odd with `n = k` and
/// `Q = {0, ..., n-1}`, or `k >= 4` even with `n = 2k` and `Q = {1, 3, ..., n-1}`.
pub fn bipartite_positive_verdict(n: u32, ms: &SubscriptMultisets) -> Verdict {
    let k = ms.q.len();
    let q: Vec<u32> = ms.q.to_vec();
    if k % 2 == 1 {
        if k < 5 {
            return Verdict::not(format!("odd k = {k} < 5"));
        }
        if n as usize != k {
            return Verdict::not(format!("odd k = {k} needs n = k"));
        }
        if q != (0..n).collect::<Vec<_>>() {
            return Verdict::not("Q is not {0, ..., n-1}");
        }
        Verdict::Special { m: 2, k, nu: 1 }
    } else {
        if k < 4 {
            return Verdict::not(format!("even k = {k} < 4"));
        }
        if n as usize != 2 * k {
            return Verdict::not(format!("even k = {k} needs n = 2k"));
        }
        if q != (0..n).filter(|x| x % 2 == 1).collect::<Vec<_>>() {
            return Verdict::not("Q is not {1, 3, ..., n-1}");
        }
        Verdict::Special { m: 2, k, nu: 2 }
    }
}

/// `set` has distinct elements and never contains both `x` and `n - x`.
fn distinct_without_negatives(set: &[u32], n: u32) -> bool {
    set.windows(2).all(|w| w[0] != w[1]) && set.iter().all(|&x| !set.contains(&((n - x) % n)))
}

/// Criterion for an alternating relator of length `k >= 4`: `n = 2k` and `A`, `B` each consist
/// of `k/2` distinct odd residues with no two summing to `n`.
pub fn bipartite_alternating_verdict(n: u32, ms: &SubscriptMultisets) -> Verdict {
    let k = ms.a.len() + ms.b.len();
    if n as usize != 2 * k {
        return Verdict::not(format!("n = {n} is not 2k = {}", 2 * k));
    }
    for (name, set) in [("A", &ms.a), ("B", &ms.b)] {
        if set.len() != k / 2 || set.iter().any(|x| x % 2 == 0) {
            return Verdict::not(format!("{name} does not consist of k/2 odd residues"));
        }
        if !distinct_without_negatives(set, n) {
            return Verdict::not(format!("{name} has a repeated element up to sign"));
        }
    }
    Verdict::Special { m: 2, k, nu: 2 }
}

/// Criterion for a mixed relator: `n = nu k` with `4 | k`; `A`, `B` are sets of `k/4` odd
/// multiples of `nu` below `n` with no two summing to `n`; `Q+` and `Q-` are disjoint and `Q`
/// is `{s + nu, s + 3nu, ..., s + (k-1)nu}` for some `s` with `gcd(s, nu) = 1`.
pub fn bipartite_mixed_verdict(n: u32, ms: &SubscriptMultisets) -> Verdict {
    let k = ms.len();
    if !k.is_multiple_of(4) {
        return Verdict::not(format!("k = {k} is not divisible by 4"));
    }
    if !(n as usize).is_multiple_of(k) {
        return Verdict::not(format!("k = {k} does not divide n = {n}"));
    }
    let nu = n / k as u32;
    for (name, set) in [("A", &ms.a), ("B", &ms.b)] {
        if set.len() != k / 4 {
            return Verdict::not(format!("|{name}| is not k/4"));
        }
        if set.iter().any(|&x| x % nu != 0 || (x / nu).is_multiple_of(2)) {
            return Verdict::not(format!("{name} is not inside {{nu, 3nu, ..., (k-1)nu}}"));
        }
        if !distinct_without_negatives(set, n) {
            return Verdict::not(format!("{name} has a repeated element up to sign"));
        }
    }
    if ms.q_plus.iter().any(|q| ms.q_minus.contains(q)) {
        return Verdict::not("Q+ and Q- intersect");
    }
    let found = ms.q.iter().any(|&q| {
        let s = (q + n - nu) % n;
        if s.gcd(&nu) != 1 {
            return false;
        }
        let mut expected: Vec<u32> = (0..k as u32 / 2).map(|t| (s + (2 * t + 1) * nu) % n).collect();
        expected.sort_unstable();
        expected.as_slice() == ms.q.as_slice()
    });
    if !found {
        return Verdict::not("Q is not an odd progression {s + nu, s + 3nu, ...} with gcd(s, nu) = 1");
    }
    Verdict::Special { m: 2, k, nu: nu as usize }
}

/// Projective-plane criteria for positive relators.
pub fn check_projective_positive(p: &CyclicPresentation) -> Result<SpecialityReport> {
    require(p, &[SignClass::Positive], 3)?;
    let verdict = projective_positive_verdict(p.n(), &p.multisets());
    Ok(criteria_report(p, verdict, Criteria::Positive))
}

/// Complete-bipartite criteria for positive relators.
pub fn check_bipartite_positive(p: &CyclicPresentation) -> Result<SpecialityReport> {
    require(p, &[SignClass::Positive], 3)?;
    let verdict = bipartite_positive_verdict(p.n(), &p.multisets());
    Ok(criteria_report(p, verdict, Criteria::Positive))
}

pub fn check_bipartite_alternating(p: &CyclicPresentation) -> Result<SpecialityReport> {
    require(p, &[SignClass::Alternating], 4)?;
    let verdict = bipartite_alternating_verdict(p.n(), &p.multisets());
    Ok(criteria_report(p, verdict, Criteria::Alternating))
}

pub fn check_bipartite_mixed(p: &CyclicPresentation) -> Result<SpecialityReport> {
    require(p, &[SignClass::Mixed], 3)?;
    let verdict = bipartite_mixed_verdict(p.n(), &p.multisets());
    Ok(criteria_report(p, verdict, Criteria::Mixed))
}

/// Verdict of the closed-form criteria, or `None` when their hypotheses do not hold.
///
/// Negative relators are inverted first; inverting every relator leaves the star graph alone.
pub fn criteria_verdict(p: &CyclicPresentation) -> Option<(Verdict, Criteria)> {
    let h = Hypotheses::of(p);
    if !h.standing() || p.word().len() < 3 {
        return None;
    }
    let n = p.n();
    match h.sign_class {
        SignClass::Positive | SignClass::Negative => {
            let ms =
                if h.sign_class == SignClass::Positive { p.multisets() } else { p.inverted().multisets() };
            let projective = projective_positive_verdict(n, &ms);
            if projective.is_special() {
                return Some((projective, Criteria::Positive));
            }
            let bipartite = bipartite_positive_verdict(n, &ms);
            if bipartite.is_special() {
                return Some((bipartite, Criteria::Positive));
            }
            let reasons = [projective, bipartite]
                .iter()
                .map(|v| match v {
                    Verdict::NotSpecial { reason } => reason.to_string(),
                    Verdict::Special { .. } => unreachable!(),
                })
                .collect::<Vec<_>>()
                .join("; ");
            Some((Verdict::not(reasons), Criteria::Positive))
        }
        SignClass::Alternating => (p.word().len() >= 4)
            .then(|| (bipartite_alternating_verdict(n, &p.multisets()), Criteria::Alternating)),
        SignClass::Mixed => Some((bipartite_mixed_verdict(n, &p.multisets()), Criteria::Mixed)),
    }
}

/// Classifies by the closed-form criteria when their hypotheses hold and by the definition
/// otherwise. Criteria verdicts are checked against the direct computation.
pub fn classify(p: &CyclicPresentation) -> Result<SpecialityReport> {
    let mut direct = check_special_direct(p)?;
    let Some((verdict, criteria)) = criteria_verdict(p) else {
        let h = direct.hypotheses;
        if !h.standing() {
            let mut missing = Vec::new();
            if !h.irreducible {
                missing.push("reducible");
            }
            if !h.non_redundant {
                missing.push("redundant");
            }
            if h.proper_power {
                missing.push("proper power");
            }
            direct.notes.push(format!(
                "criteria not applicable ({}); decided from the definition",
                missing.join(", ")
            ));
        }
        return Ok(direct);
    };
    if !verdict.same_outcome(&direct.verdict) {
        return Err(Error::CrossValidation {
            word: p.word().to_string(),
            criteria: verdict.to_string(),
            direct: direct.verdict.to_string(),
        });
    }
    let mut notes = Vec::new();
    if let Some(nu) = verdict.parameters().map(|v| v.2) {
        let ms = p.multisets();
        let predicted = if p.sign_class() == SignClass::Alternating {
            (ms.d_a + ms.d_b) as usize
        } else {
            ms.d.unwrap_or(0) as usize
        };
        if predicted != nu {
            notes.push(format!("predicted component count {predicted} differs from nu = {nu}"));
        }
    }
    Ok(SpecialityReport {
        verdict,
        component_verdicts: direct.component_verdicts,
        method: Method::Criteria(criteria),
        hypotheses: direct.hypotheses,
        notes,
    })
}

/// A relator pattern with a known upper bound on the girth of the star graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum GirthPattern {
    /// Two length-2 cyclic subwords with the same subscript difference up to inversion.
    RepeatedDifference,
    PositiveLengthThree,
    /// Cyclic subword `x x x^-1 x^-1`.
    TwoUpTwoDown,
    /// Positive cyclic subword of length 4.
    FourUp,
    /// Cyclic subword `x x x x^-1`.
    ThreeUpOneDown,
    /// Two cyclic subwords of the form `x_j x_{j+p}^-1`.
    TwoDescents,
}

impl GirthPattern {
    pub fn bound(self) -> u32 {
        match self {
            GirthPattern::RepeatedDifference => 2,
            GirthPattern::TwoDescents => 4,
            _ => 6,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GirthAudit {
    pub girth: Bound,
    pub sign_class: SignClass,
    pub length: usize,
    /// Patterns found in the relator or its inverse.
    pub patterns: Vec<GirthPattern>,
    pub violations: Vec<String>,
}

fn sign_patterns(w: &Word, out: &mut Vec<GirthPattern>) {
    let signs: Vec<bool> = w.letters().iter().map(|l| l.is_positive()).collect();
    let k = signs.len();
    if k < 4 {
        return;
    }
    let has = |pattern: [bool; 4]| (0..k).any(|i| (0..4).all(|j| signs[(i + j) % k] == pattern[j]));
    for (pattern, kind) in [
        ([true, true, false, false], GirthPattern::TwoUpTwoDown),
        ([true, true, true, true], GirthPattern::FourUp),
        ([true, true, true, false], GirthPattern::ThreeUpOneDown),
    ] {
        if has(pattern) && !out.contains(&kind) {
            out.push(kind);
        }
    }
}

fn has_repeat_up_to_sign(set: &[u32], n: u32) -> bool {
    (0..set.len())
        .any(|i| (i + 1..set.len()).any(|j| set[i] == set[j] || (set[i] + set[j]).is_multiple_of(n)))
}

/// Relator patterns present in `p` and the girth bounds they imply.
pub fn girth_patterns(p: &CyclicPresentation) -> Vec<GirthPattern> {
    let w = p.word();
    let ms = p.multisets();
    let n = p.n();
    let mut out = Vec::new();
    let q_repeat = ms.q.windows(2).any(|x| x[0] == x[1]);
    if q_repeat || has_repeat_up_to_sign(&ms.a, n) || has_repeat_up_to_sign(&ms.b, n) {
        out.push(GirthPattern::RepeatedDifference);
    }
    let class = p.sign_class();
    if w.len() == 3 && matches!(class, SignClass::Positive | SignClass::Negative) {
        out.push(GirthPattern::PositiveLengthThree);
    }
    sign_patterns(w, &mut out);
    sign_patterns(&w.inverse(), &mut out);
    if ms.a.len() >= 2 {
        out.push(GirthPattern::TwoDescents);
    }
    out
}

/// Audit with a precomputed girth.
pub fn girth_bound_audit_with(p: &CyclicPresentation, girth: Bound) -> GirthAudit {
    let patterns = girth_patterns(p);
    let class = p.sign_class();
    let len = p.word().len();
    let mut violations = Vec::new();
    let context = || format!("`{}` over rank {}", p.word(), p.n());
    if girth > Bound::Finite(8) {
        violations.push(format!("girth {girth} > 8 for {}", context()));
    }
    if girth > Bound::Finite(6) && !(class == SignClass::Mixed && len == 3) {
        violations.push(format!("girth {girth} > 6 for {} ({class} of length {len})", context()));
    }
    for pattern in &patterns {
        if girth > Bound::Finite(pattern.bound()) {
            violations.push(format!(
                "girth {girth} exceeds {} for pattern {pattern:?} in {}",
                pattern.bound(),
                context()
            ));
        }
    }
    GirthAudit { girth, sign_class: class, length: len, patterns, violations }
}

/// Checks the girth bounds for a non-redundant presentation whose relator has length at least
/// 3 and is not a proper power. Violations are recorded, not raised.
pub fn girth_bound_audit(p: &CyclicPresentation) -> Result<GirthAudit> {
    if p.redundant() || p.proper_power() || p.word().len() < 3 {
        return Err(Error::Hypotheses(
            "girth audit needs a non-redundant presentation with a relator of length >= 3 that is not a proper power".into(),
        ));
    }
    let girth = Bound::from_option(cyclic_star_graph(p).graph().girth());
    Ok(girth_bound_audit_with(p, girth))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct LargenessFlags {
    pub delta: usize,
    pub sigma: i64,
    pub alternating: bool,
    pub large_by_cor35: bool,
}

/// Arithmetic sufficient condition for largeness from the number `delta` of star-graph
/// components and the exponent sum `sigma`.
pub fn largeness_flags(p: &CyclicPresentation) -> Result<LargenessFlags> {
    if p.redundant() {
        return Err(Error::Hypotheses("largeness flags need a non-redundant presentation".into()));
    }
    let delta = cyclic_star_graph(p).graph().component_ids().1;
    let sigma = p.word().exponent_sum();
    let alternating = p.sign_class() == SignClass::Alternating;
    let large = if alternating { delta > 2 } else { delta > 1 && (delta, sigma.unsigned_abs()) != (2, 2) };
    Ok(LargenessFlags { delta, sigma, alternating, large_by_cor35: large })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SignFilter {
    Positive,
    Negative,
    Alternating,
    Mixed,
    Any,
}

impl SignFilter {
    pub fn accepts(self, class: SignClass) -> bool {
        match self {
            SignFilter::Any => true,
            SignFilter::Positive => class == SignClass::Positive,
            SignFilter::Negative => class == SignClass::Negative,
            SignFilter::Alternating => class == SignClass::Alternating,
            SignFilter::Mixed => class == SignClass::Mixed,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchBounds {
    pub max_n: u32,
    pub max_k: usize,
}

impl Default for SearchBounds {
    fn default() -> Self {
        SearchBounds { max_n: 32, max_k: 6 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SearchHit {
    #[serde(serialize_with = "crate::report::serialize_display")]
    pub word: Word,
    pub report: SpecialityReport,
}

/// All special presentations `P_n(w)` with `w` of length `k` in the given sign class, up to
/// shifting subscripts (the first letter is `x0` or `x0^-1`).
///
/// Words that are reducible, redundant or proper powers are skipped. Every hit found by the
/// criteria is confirmed from the definition. Hits are returned in lexicographic order.
pub fn enumerate_special(
    n: u32,
    k: usize,
    sign: SignFilter,
    bounds: SearchBounds,
    exec: Execution,
) -> Result<Vec<SearchHit>> {
    if n == 0 || n > bounds.max_n {
        return Err(Error::OutOfBounds {
            what: "n",
            value: u64::from(n),
            lo: 1,
            hi: u64::from(bounds.max_n),
        });
    }
    if k == 0 || k > bounds.max_k {
        return Err(Error::OutOfBounds { what: "k", value: k as u64, lo: 1, hi: bounds.max_k as u64 });
    }
    let prefixes = enumerate::prefixes(n, k);
    let batches = par::map_ordered(&prefixes, exec, |prefix| -> Result<Vec<SearchHit>> {
        let mut words: Vec<Codes> = Vec::new();
        enumerate::for_each_word(n, k, prefix, &mut |c| words.push(Codes::from_slice(c)));
        let mut hits = Vec::new();
        for codes in words {
            let w = enumerate::to_word(n, &codes);
            if !sign.accepts(sign_class(&w)) {
                continue;
            }
            let p = presentation_flags(n, &w)?;
            let Some((verdict, criteria)) = criteria_verdict(&p) else {
                continue;
            };
            if !verdict.is_special() {
                continue;
            }
            let direct = check_special_direct(&p)?;
            if !direct.verdict.same_outcome(&verdict) {
                return Err(Error::CrossValidation {
                    word: w.to_string(),
                    criteria: verdict.to_string(),
                    direct: direct.verdict.to_string(),
                });
            }
            hits.push(SearchHit {
                word: w,
                report: SpecialityReport {
                    verdict,
                    component_verdicts: direct.component_verdicts,
                    method: Method::Criteria(criteria),
                    hypotheses: direct.hypotheses,
                    notes: Vec::new(),
                },
            });
        }
        Ok(hits)
    });
    let mut all = Vec::new();
    for batch in batches {
        all.extend(batch?);
    }
    Ok(all)
}
