//! End-to-end acceptance checks, one line of output per check.
//!
//! Run with `cargo test -p starpoly --test acceptance -- --nocapture` to see the report.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::seq::index::sample;
use rand::SeedableRng;

use starpoly::classify::{enumerate_special, largeness_flags, SearchBounds, SearchHit, SignFilter};
use starpoly::diffset::{
    enumerate_perfect_difference_sets, incidence_graph, is_perfect_difference_set, modulus,
};
use starpoly::graph::{Bound, Multigraph};
use starpoly::iso::isomorphic;
use starpoly::par::Execution;
use starpoly::polygon::{projective_plane_order, recognize_generalized_polygon};
use starpoly::report::analyze;
use starpoly::smallcancel::small_cancellation;
use starpoly::star::{components_isomorphic, cyclic_star_graph};
use starpoly::sweep::{girth_sweep, oracle_sweep, OracleSweep};
use starpoly::word::{Letter, Sign};
use starpoly::{parse_word, presentation_flags, CyclicPresentation, Word};

type Check = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn pres(n: u32, w: &str) -> CyclicPresentation {
    presentation_flags(n, &parse_word(w, n).unwrap()).unwrap()
}

fn heawood_report() -> Check {
    let r = analyze(7, "x0 x1 x3").map_err(|e| e.to_string())?;
    let g = &r.graph;
    let got = (g.vertices, g.regular_degree, g.girth, g.diameter, g.components.len());
    ensure(got == (14, Some(3), Bound::Finite(6), Bound::Finite(3), 1), || format!("graph {got:?}"))?;
    ensure(r.speciality.verdict == "SPECIAL(3,3,1)", || r.speciality.verdict.clone())?;
    let order = r.component_verdicts[0].projective_plane_order();
    ensure(order == Some(2), || format!("plane order {order:?}"))?;
    Ok("14 vertices, 3-regular, girth 6, diameter 3, SPECIAL(3,3,1), plane of order 2".into())
}

fn heawood() -> Multigraph {
    let p = pres(7, "x0 x1 x3");
    cyclic_star_graph(&p).graph().clone()
}

fn three_heawood_components() -> Check {
    let star = cyclic_star_graph(&pres(21, "x0 x1 x5"));
    let g = star.graph();
    let comps = g.components();
    ensure(comps.len() == 3, || format!("{} components", comps.len()))?;
    ensure(components_isomorphic(&star).map_err(|e| e.to_string())?, || "components differ".into())?;
    let reference = heawood();
    for (i, c) in comps.iter().enumerate() {
        ensure(c.len() == 14, || format!("component {i} has {} vertices", c.len()))?;
        let sub = g.induced(c);
        let v = recognize_generalized_polygon(&sub);
        ensure(v.m() == Some(3) && v.projective_plane_order() == Some(2), || {
            format!("component {i}: {v:?}")
        })?;
        ensure(isomorphic(&sub, &reference, 64).map_err(|e| e.to_string())?, || {
            format!("component {i} is not the Heawood graph")
        })?;
        let residues: BTreeSet<u32> = c.iter().filter(|&&v| v < 21).map(|&v| v as u32 % 3).collect();
        ensure(residues.len() == 1, || format!("component {i} mixes residues {residues:?}"))?;
    }
    let mut firsts: Vec<u32> = comps.iter().map(|c| c[0] as u32 % 3).collect();
    firsts.sort_unstable();
    ensure(firsts == [0, 1, 2], || format!("residue classes {firsts:?}"))?;
    Ok("3 components of 14 vertices, each Heawood, positive subscripts split by residue mod 3".into())
}

fn order_three_plane() -> Check {
    let r = analyze(13, "x0 x0 x1 x4").map_err(|e| e.to_string())?;
    let g = &r.graph;
    let got = (g.vertices, g.regular_degree, g.girth, g.diameter, g.components.len());
    ensure(got == (26, Some(4), Bound::Finite(6), Bound::Finite(3), 1), || format!("graph {got:?}"))?;
    let order = projective_plane_order(r.star.graph());
    ensure(order == Some(3), || format!("plane order {order:?}"))?;
    ensure(r.speciality.verdict == "SPECIAL(3,4,1)", || r.speciality.verdict.clone())?;
    Ok("26 vertices, 4-regular, girth 6, diameter 3, plane of order 3, SPECIAL(3,4,1)".into())
}

fn distinct_q(n: u32, w: &Word) -> Vec<u32> {
    let mut q = presentation_flags(n, w).unwrap().multisets().q.to_vec();
    q.sort_unstable();
    q.dedup();
    q
}

fn search(n: u32, k: usize, sign: SignFilter) -> Result<Vec<SearchHit>, String> {
    enumerate_special(n, k, sign, SearchBounds::default(), Execution::default()).map_err(|e| e.to_string())
}

fn positive_triangle_census() -> Check {
    let expected = |n: u32| -> BTreeSet<Vec<u32>> {
        match n {
            7 => [vec![1, 2, 4], vec![3, 5, 6]].into(),
            21 => [vec![1, 4, 16], vec![2, 8, 11], vec![5, 17, 20], vec![10, 13, 19]].into(),
            _ => BTreeSet::new(),
        }
    };
    let mut total = 0;
    for n in 3..=28 {
        let hits = search(n, 3, SignFilter::Positive)?;
        total += hits.len();
        let found: BTreeSet<Vec<u32>> = hits.iter().map(|h| distinct_q(n, &h.word)).collect();
        ensure(found == expected(n), || format!("n = {n}: Q-sets {found:?}"))?;
    }
    Ok(format!("Q-sets match at n = 7 and n = 21, none elsewhere for n <= 28 ({total} hit words)"))
}

fn signs(w: &Word) -> Vec<Sign> {
    w.letters().iter().map(|l| l.sign).collect()
}

fn subscripts(w: &Word) -> Vec<u32> {
    w.letters().iter().map(|l| l.index).collect()
}

/// The word moved to start with `x0` by rotation, inversion and shift, in every possible way.
fn x0_forms(n: u32, w: &Word) -> Vec<Word> {
    let mut out = Vec::new();
    for v in [w.clone(), w.inverse()] {
        for r in 0..v.len() {
            let rot = v.rotate(r as i64);
            let first: Letter = rot.letters()[0];
            if first.sign == Sign::Pos {
                out.push(rot.shift(i64::from(n - first.index) % i64::from(n)));
            }
        }
    }
    out
}

/// Hits of the given sign pattern, mapped to their parameters, after checking that every hit is
/// equivalent to one of them.
fn shaped_parameters(
    hits: &[SearchHit],
    shape: &[Sign],
    nu: usize,
    params: impl Fn(&[u32]) -> (u32, u32, u32),
) -> Result<(BTreeSet<(u32, u32, u32)>, BTreeSet<String>), String> {
    let mut shaped = BTreeSet::new();
    let mut words = BTreeSet::new();
    for h in hits {
        let got_nu = h.report.verdict.parameters().map(|(_, _, nu)| nu);
        ensure(got_nu == Some(nu), || format!("{}: {}", h.word, h.report.verdict))?;
        let w = &h.word;
        if w.letters()[0] == Letter::pos(0) && signs(w) == shape {
            shaped.insert(params(&subscripts(w)));
            words.insert(w.to_string());
        }
    }
    Ok((shaped, words))
}

fn check_family(
    label: &str,
    n: u32,
    hits: &[SearchHit],
    shape: &[Sign],
    nu: usize,
    params: impl Fn(&[u32]) -> (u32, u32, u32),
    expected: &BTreeSet<(u32, u32, u32)>,
) -> Result<BTreeSet<String>, String> {
    let (found, words) = shaped_parameters(hits, shape, nu, params)?;
    ensure(&found == expected, || {
        let missing: Vec<_> = expected.difference(&found).collect();
        let extra: Vec<_> = found.difference(expected).collect();
        format!("{label} at n = {n}: missing {missing:?}, unexpected {extra:?}")
    })?;
    Ok(words)
}

/// Every hit must reach a shaped hit by rotation, inversion and shift.
fn covered(n: u32, hits: &[SearchHit], shaped: &BTreeSet<String>) -> Result<(), String> {
    for h in hits {
        let ok = x0_forms(n, &h.word).iter().any(|f| shaped.contains(&f.to_string()));
        ensure(ok, || format!("{} is outside every listed family", h.word))?;
    }
    Ok(())
}

fn euclidean_square_census() -> Check {
    use Sign::{Neg, Pos};
    let m8 = |x: u32| x % 8;
    let units = [1u32, 3, 5, 7];

    // Positive, n = 8: x0 x_{q1} x_{q1+q2} x_{q1+q2+q3}.
    let hits = search(8, 4, SignFilter::Positive)?;
    let mut expected = BTreeSet::new();
    for q1 in units {
        for (c2, c3) in [(3, 5), (7, 5), (5, 3), (7, 3), (3, 7), (5, 7)] {
            expected.insert((q1, m8(c2 * q1), m8(c3 * q1)));
        }
    }
    let diff = |s: &[u32]| (s[1], (s[2] + 8 - s[1]) % 8, (s[3] + 8 - s[2]) % 8);
    let shaped = check_family("positive", 8, &hits, &[Pos; 4], 2, diff, &expected)?;
    covered(8, &hits, &shaped)?;
    let positive = hits.len();

    // Alternating, n = 8: x0 x_{a1}^-1 x_{a1+b1} x_{a1+b1+a2}^-1, parameters (a1, b1, a2).
    let hits = search(8, 4, SignFilter::Alternating)?;
    let mut expected = BTreeSet::new();
    for a1 in units {
        for (c2, c1) in [(5, 3), (5, 7), (3, 5), (3, 7), (3, 1), (3, 3)] {
            expected.insert((a1, m8(c1 * a1), m8(c2 * a1)));
        }
    }
    let shaped = check_family("alternating", 8, &hits, &[Pos, Neg, Pos, Neg], 2, diff, &expected)?;
    covered(8, &hits, &shaped)?;
    let alternating = hits.len();

    // Mixed: x0 x_p^-1 x_q^-1 x_r at n = 4nu and x0 x_p^-1 x_q x_r at n = 4.
    let triple = |s: &[u32]| (s[1], s[2], s[3]);
    let shape_a = [Pos, Neg, Neg, Pos];
    let shape_b = [Pos, Neg, Pos, Pos];
    let mut mixed = 0;
    for (n, nu) in [(8u32, 2u32), (4, 1)] {
        let hits = search(n, 4, SignFilter::Mixed)?;
        let mut family_a = BTreeSet::new();
        for s in 0..n {
            if num_gcd(s, nu) == 1 {
                for p in [nu, 3 * nu] {
                    family_a.insert((p, (n - s) % n, (p + n - s) % n));
                }
            }
        }
        let family_b: BTreeSet<(u32, u32, u32)> = if n == 4 {
            [(1, 0, 1), (3, 0, 3), (1, 0, 3), (3, 0, 1), (1, 2, 0), (3, 2, 0), (1, 2, 2), (3, 2, 2)].into()
        } else {
            BTreeSet::new()
        };
        let mut shaped = check_family("mixed (a)", n, &hits, &shape_a, nu as usize, triple, &family_a)?;
        shaped.extend(check_family("mixed (b)", n, &hits, &shape_b, nu as usize, triple, &family_b)?);
        covered(n, &hits, &shaped)?;
        mixed += hits.len();
    }

    // No positive or alternating special words of length 4 at n = 4.
    for sign in [SignFilter::Positive, SignFilter::Alternating] {
        let hits = search(4, 4, sign)?;
        ensure(hits.is_empty(), || format!("{sign:?} at n = 4: {} hits", hits.len()))?;
    }
    Ok(format!(
        "families reproduced exactly ({positive} positive, {alternating} alternating, {mixed} mixed hit words)"
    ))
}

fn num_gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        num_gcd(b, a % b)
    }
}

fn oracle_ranges() -> Vec<(u32, usize)> {
    let mut out = Vec::new();
    for k in 3..=4 {
        out.extend((1..=24).map(|n| (n, k)));
    }
    for k in 5..=6 {
        out.extend((1..=16).map(|n| (n, k)));
    }
    out
}

fn full_oracle_sweep() -> Result<OracleSweep, String> {
    let mut total = OracleSweep::default();
    for (n, k) in oracle_ranges() {
        let s = oracle_sweep(n, k, Execution::default()).map_err(|e| format!("n = {n}, k = {k}: {e}"))?;
        total.words += s.words;
        total.classes += s.classes;
        total.criteria_words += s.criteria_words;
        total.special_words += s.special_words;
        total.verdict_disagreements += s.verdict_disagreements;
        total.structural_words += s.structural_words;
        total.structural_mismatches += s.structural_mismatches;
        total.examples.extend(s.examples);
    }
    Ok(total)
}

fn oracle_equivalence(sweep: &Result<OracleSweep, String>) -> Check {
    let s = sweep.as_ref().map_err(Clone::clone)?;
    ensure(s.verdict_disagreements == 0, || {
        format!("{} disagreements, e.g. {:?}", s.verdict_disagreements, s.examples)
    })?;
    ensure(s.criteria_words > 0 && s.special_words > 0, || "sweep found nothing to compare".into())?;
    Ok(format!(
        "{} words meet the hypotheses, {} special, 0 disagreements ({} words swept)",
        s.criteria_words, s.special_words, s.words
    ))
}

fn structural_agreement(sweep: &Result<OracleSweep, String>) -> Check {
    let s = sweep.as_ref().map_err(Clone::clone)?;
    ensure(s.structural_mismatches == 0, || {
        format!("{} mismatches, e.g. {:?}", s.structural_mismatches, s.examples)
    })?;
    Ok(format!("{} non-redundant words, predicted edges equal generic edges", s.structural_words))
}

fn girth_bounds() -> Check {
    let mut audited = 0;
    let mut max_girth = 0;
    for k in 3..=5 {
        for n in 1..=18 {
            let s = girth_sweep(n, k, Execution::default()).map_err(|e| e.to_string())?;
            ensure(s.violations == 0, || format!("n = {n}, k = {k}: {:?}", s.examples))?;
            ensure(s.max_girth <= 8, || format!("n = {n}, k = {k}: girth {}", s.max_girth))?;
            ensure(k == 3 || s.long_girth_words == 0, || format!("n = {n}, k = {k}: girth above 6"))?;
            audited += s.audited_words;
            max_girth = max_girth.max(s.max_girth);
        }
    }
    let p = pres(18, "x0 x8 x1^-1");
    let g = cyclic_star_graph(&p).graph().girth();
    ensure(g == Some(8), || format!("P18(x0 x8 x1^-1) girth {g:?}"))?;
    let p = pres(6, "x0 x1 x3 x4");
    let star = cyclic_star_graph(&p);
    let c = star.graph().components();
    let cycle = c.iter().any(|c| {
        let sub = star.graph().induced(c);
        c.len() == 12 && isomorphic(&sub, &Multigraph::cycle(12), 64).unwrap_or(false)
    });
    ensure(cycle, || "P6(x0 x1 x3 x4) has no 12-cycle component".into())?;
    let t = small_cancellation(&p, &star).map_err(|e| e.to_string())?.t_parameter;
    ensure(t == Bound::Finite(12), || format!("T({t})"))?;
    Ok(format!(
        "{audited} words audited, max girth {max_girth}, P18(x0 x8 x1^-1) girth 8, P6(x0 x1 x3 x4) is T(12)"
    ))
}

/// Differences of distinct elements cover every nonzero residue exactly once.
fn pds_by_definition(set: &[i64], k: usize) -> bool {
    let n = modulus(k) as i64;
    let mut seen = vec![0u32; n as usize];
    for &a in set {
        for &b in set {
            if a != b {
                seen[(a - b).rem_euclid(n) as usize] += 1;
            }
        }
    }
    set.len() == k && seen[1..].iter().all(|&c| c == 1)
}

fn difference_sets() -> Check {
    ensure(is_perfect_difference_set(&[1, 2, 4], 3).map_err(|e| e.to_string())?, || {
        "{1,2,4} rejected".into()
    })?;
    ensure(is_perfect_difference_set(&[0, 1, 3, 9], 4).map_err(|e| e.to_string())?, || {
        "{0,1,3,9} rejected".into()
    })?;
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let mut rejected = 0;
    while rejected < 1000 {
        let k = 3 + rejected % 4;
        let n = modulus(k);
        let set: Vec<i64> = sample(&mut rng, n, k).into_iter().map(|x| x as i64).collect();
        if pds_by_definition(&set, k) {
            continue;
        }
        let verdict = is_perfect_difference_set(&set, k).map_err(|e| e.to_string())?;
        ensure(!verdict, || format!("{set:?} accepted for k = {k}"))?;
        rejected += 1;
    }
    let mut planes = 0;
    for k in 3..=5 {
        for set in enumerate_perfect_difference_sets(k).map_err(|e| e.to_string())? {
            let g = incidence_graph(&set, k);
            let order = projective_plane_order(&g);
            ensure(g.is_bipartite() && order == Some(k as u32 - 1), || format!("{set:?}: order {order:?}"))?;
            planes += 1;
        }
    }
    Ok(format!("1000 random non-difference sets rejected, {planes} enumerated sets give planes of order k-1"))
}

fn largeness() -> Check {
    let flag = |n: u32, w: &str| -> Result<bool, String> {
        largeness_flags(&pres(n, w)).map(|f| f.large_by_cor35).map_err(|e| format!("P{n}({w}): {e}"))
    };
    ensure(flag(21, "x0 x1 x5")?, || "P21(x0 x1 x5) not flagged large".into())?;
    ensure(!flag(7, "x0 x1 x3")?, || "P7(x0 x1 x3) flagged large".into())?;
    for n in [4, 6, 8, 10, 12, 20, 32] {
        let f = largeness_flags(&pres(n, "x0 x1")).map_err(|e| e.to_string())?;
        ensure((f.delta, f.sigma) == (2, 2), || {
            format!("P{n}(x0 x1): delta {}, sigma {}", f.delta, f.sigma)
        })?;
        ensure(!f.large_by_cor35, || format!("P{n}(x0 x1) flagged large"))?;
    }
    // P2(x0 x1) is redundant, outside the domain of the flags.
    ensure(largeness_flags(&pres(2, "x0 x1")).is_err(), || "P2(x0 x1) accepted".into())?;
    Ok("large for P21(x0 x1 x5), not for P7(x0 x1 x3) or x0 x1 at even n >= 4".into())
}

type Row = (u32, &'static str, Check, Duration);

/// Runs `check`, failing it when it takes longer than `budget`. `extra` is time already spent on
/// shared work.
fn record(
    rows: &mut Vec<Row>,
    id: u32,
    name: &'static str,
    check: impl FnOnce() -> Check,
    budget: Option<Duration>,
    extra: Duration,
) {
    let start = Instant::now();
    let result = check();
    let elapsed = start.elapsed() + extra;
    let result = match (result, budget) {
        (Ok(msg), Some(b)) if elapsed > b => Err(format!("{msg}; took {elapsed:.1?}, budget {b:?}")),
        (r, _) => r,
    };
    rows.push((id, name, result, elapsed));
}

fn main() {
    let secs = |s| Some(Duration::from_secs(s));
    let zero = Duration::ZERO;
    let mut rows: Vec<Row> = Vec::new();
    record(&mut rows, 1, "heawood", heawood_report, secs(1), zero);
    record(&mut rows, 2, "three heawood components", three_heawood_components, secs(1), zero);
    record(&mut rows, 3, "order-3 plane", order_three_plane, secs(1), zero);
    record(&mut rows, 4, "positive length-3 census", positive_triangle_census, secs(60), zero);
    record(&mut rows, 5, "length-4 census at n = 8 and 4", euclidean_square_census, secs(60), zero);
    let start = Instant::now();
    let sweep = full_oracle_sweep();
    let sweep_time = start.elapsed();
    record(&mut rows, 6, "criteria vs definition", || oracle_equivalence(&sweep), secs(600), sweep_time);
    record(&mut rows, 7, "girth bounds", girth_bounds, secs(300), zero);
    record(&mut rows, 8, "predicted vs generic graphs", || structural_agreement(&sweep), None, sweep_time);
    record(&mut rows, 9, "difference sets", difference_sets, secs(60), zero);
    record(&mut rows, 10, "largeness flags", largeness, None, zero);

    let mut failed = Vec::new();
    for (id, name, result, time) in &rows {
        match result {
            Ok(msg) => println!("[PASS] {id:>2} {name} ({time:.2?}): {msg}"),
            Err(msg) => {
                println!("[FAIL] {id:>2} {name} ({time:.2?}): {msg}");
                failed.push(*id);
            }
        }
    }
    if !failed.is_empty() {
        eprintln!("failed: {failed:?}");
        std::process::exit(1);
    }
}
