//! Exhaustive generation of cyclically reduced words whose first letter is `x0` or `x0^-1`.
//!
//! Words are handled as slices of letter codes (`2 * index + negative`), which order the same
//! way as [`Letter`]s.

use smallvec::SmallVec;

use crate::word::{Letter, Word};

pub type Codes = SmallVec<[u32; 8]>;

/// Prefixes of length `min(k, 2)` partitioning the words of length `k`, in lexicographic order.
pub fn prefixes(n: u32, k: usize) -> Vec<Codes> {
    let mut out = Vec::new();
    for first in [0u32, 1] {
        if k == 1 {
            out.push(Codes::from_slice(&[first]));
            continue;
        }
        for second in 0..2 * n {
            if second != first ^ 1 {
                out.push(Codes::from_slice(&[first, second]));
            }
        }
    }
    out
}

/// Calls `f` on every cyclically reduced word of length `k` over rank `n` starting with
/// `prefix`, in lexicographic order.
pub fn for_each_word(n: u32, k: usize, prefix: &[u32], f: &mut dyn FnMut(&[u32])) {
    let mut buf: Codes = Codes::from_slice(prefix);
    if buf.len() > k {
        return;
    }
    if buf.len() == k {
        if is_cyclically_reduced(&buf) {
            f(&buf);
        }
        return;
    }
    extend(n, k, &mut buf, f);
}

fn extend(n: u32, k: usize, buf: &mut Codes, f: &mut dyn FnMut(&[u32])) {
    let last = *buf.last().expect("nonempty prefix");
    let remaining = k - buf.len();
    for c in 0..2 * n {
        if c == last ^ 1 || (remaining == 1 && k > 1 && c == buf[0] ^ 1) {
            continue;
        }
        buf.push(c);
        if remaining == 1 {
            f(buf);
        } else {
            extend(n, k, buf, f);
        }
        buf.pop();
    }
}

pub fn is_cyclically_reduced(codes: &[u32]) -> bool {
    let k = codes.len();
    (0..k).all(|i| k == 1 || codes[(i + 1) % k] != codes[i] ^ 1)
}

pub fn to_word(n: u32, codes: &[u32]) -> Word {
    Word::from_letters_unchecked(n, codes.iter().map(|&c| Letter::from_code(c)).collect())
}

/// Writes the rotation of `codes` (or of its inverse) starting at `start`, shifted so that
/// the first subscript is 0.
fn canonical_rotation(n: u32, codes: &[u32], inverse: bool, start: usize, out: &mut Codes) {
    let k = codes.len();
    out.clear();
    let letter = |j: usize| {
        if inverse {
            codes[k - 1 - (j % k)] ^ 1
        } else {
            codes[j % k]
        }
    };
    let t = letter(start) >> 1;
    for j in 0..k {
        let c = letter(start + j);
        let index = ((c >> 1) + n - t) % n;
        out.push((index << 1) | (c & 1));
    }
}

/// Whether `codes` is the smallest word among the shift-normalized rotations of itself and
/// its inverse; every such class has exactly one smallest member.
pub fn is_class_minimum(n: u32, codes: &[u32]) -> bool {
    let k = codes.len();
    for inverse in [false, true] {
        let letter = |j: usize| {
            if inverse {
                codes[k - 1 - (j % k)] ^ 1
            } else {
                codes[j % k]
            }
        };
        for start in 0..k {
            if !inverse && start == 0 {
                continue;
            }
            let t = letter(start) >> 1;
            for j in 0..k {
                let c = letter(start + j);
                let candidate = ((((c >> 1) + n - t) % n) << 1) | (c & 1);
                if candidate != codes[j] {
                    if candidate < codes[j] {
                        return false;
                    }
                    break;
                }
            }
        }
    }
    true
}

/// Distinct shift-normalized rotations of `codes` and of its inverse.
pub fn class_members(n: u32, codes: &[u32]) -> Vec<Codes> {
    let k = codes.len();
    let mut members = Vec::with_capacity(2 * k);
    for inverse in [false, true] {
        for start in 0..k {
            let mut c = Codes::new();
            canonical_rotation(n, codes, inverse, start, &mut c);
            members.push(c);
        }
    }
    members.sort_unstable();
    members.dedup();
    members
}
