//! Perfect difference sets: `k` residues modulo `k^2 - k + 1` whose differences cover every
//! nonzero residue exactly once.

use crate::error::{Error, Result};
use crate::graph::Multigraph;

pub const MIN_ORDER: usize = 2;
pub const MAX_ORDER: usize = 6;

/// `k^2 - k + 1`.
pub fn modulus(k: usize) -> usize {
    k * k - k + 1
}

/// Checks `set` against the definition. Elements are reduced modulo `k^2 - k + 1` first.
pub fn is_perfect_difference_set(set: &[i64], k: usize) -> Result<bool> {
    if set.len() != k {
        return Err(Error::SetSize { found: set.len(), k });
    }
    if k < MIN_ORDER {
        return Ok(false);
    }
    let n = modulus(k) as i64;
    let residues: Vec<i64> = set.iter().map(|d| d.rem_euclid(n)).collect();
    let mut hits = vec![0u32; n as usize];
    for (i, &x) in residues.iter().enumerate() {
        for (j, &y) in residues.iter().enumerate() {
            if i != j {
                hits[(x - y).rem_euclid(n) as usize] += 1;
            }
        }
    }
    Ok(hits[0] == 0 && hits[1..].iter().all(|&h| h == 1))
}

/// All perfect difference sets of order `k`, as sorted residue lists in lexicographic order.
pub fn enumerate_perfect_difference_sets(k: usize) -> Result<Vec<Vec<u32>>> {
    if !(MIN_ORDER..=MAX_ORDER).contains(&k) {
        return Err(Error::OutOfBounds {
            what: "k",
            value: k as u64,
            lo: MIN_ORDER as u64,
            hi: MAX_ORDER as u64,
        });
    }
    let n = modulus(k);
    let mut found = Vec::new();
    let mut chosen = Vec::with_capacity(k);
    let mut used = vec![false; n];
    search(n, k, 0, &mut chosen, &mut used, &mut found);
    Ok(found)
}

fn search(
    n: usize,
    k: usize,
    start: usize,
    chosen: &mut Vec<u32>,
    used: &mut [bool],
    found: &mut Vec<Vec<u32>>,
) {
    if chosen.len() == k {
        found.push(chosen.clone());
        return;
    }
    for x in start..n {
        if n - x < k - chosen.len() {
            break;
        }
        let new: Vec<usize> = chosen
            .iter()
            .flat_map(|&y| {
                let d = (x + n - y as usize) % n;
                [d, n - d]
            })
            .collect();
        let mut ok = true;
        for (i, &d) in new.iter().enumerate() {
            if used[d] || new[..i].contains(&d) {
                ok = false;
                break;
            }
        }
        if !ok {
            continue;
        }
        for &d in &new {
            used[d] = true;
        }
        chosen.push(x as u32);
        search(n, k, x + 1, chosen, used, found);
        chosen.pop();
        for &d in &new {
            used[d] = false;
        }
    }
}

/// Bipartite graph on points `0..N` and lines `N..2N` with point `i` on line `(i + d)'` for
/// every `d` in `set`.
pub fn incidence_graph(set: &[u32], k: usize) -> Multigraph {
    let n = modulus(k);
    Multigraph::from_edges(
        2 * n,
        (0..n).flat_map(|i| set.iter().map(move |&d| (i, n + (i + d as usize) % n))),
    )
}
