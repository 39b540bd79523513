//! Words in the free group on `x0, ..., x(n-1)` and cyclic presentations built from them.
//!
//! Everything here is a pure function of immutable values. Subscripts are always stored
//! reduced modulo the rank.

use std::fmt;

use num_integer::Integer;
use serde::Serialize;
use smallvec::SmallVec;

use crate::error::{Error, Result};

/// Exponent of a letter.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Sign {
    Pos,
    Neg,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }

    pub fn exponent(self) -> i64 {
        match self {
            Sign::Pos => 1,
            Sign::Neg => -1,
        }
    }
}

/// A generator `x_index` or its inverse.
///
/// Letters order by subscript first and put `x_i` before `x_i^-1`; words are ordered
/// lexicographically on that order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub index: u32,
    pub sign: Sign,
}

impl Letter {
    /// Builds a letter, reducing `index` modulo `n`.
    pub fn new(index: i64, sign: Sign, n: u32) -> Letter {
        Letter { index: index.rem_euclid(i64::from(n)) as u32, sign }
    }

    pub fn pos(index: u32) -> Letter {
        Letter { index, sign: Sign::Pos }
    }

    pub fn neg(index: u32) -> Letter {
        Letter { index, sign: Sign::Neg }
    }

    pub fn inverse(self) -> Letter {
        Letter { index: self.index, sign: self.sign.flip() }
    }

    pub fn is_positive(self) -> bool {
        self.sign == Sign::Pos
    }

    pub fn shifted(self, by: i64, n: u32) -> Letter {
        Letter::new(i64::from(self.index) + by, self.sign, n)
    }

    /// Dense code `2 * index + (sign is negative)`, monotone in the letter order.
    pub(crate) fn code(self) -> u32 {
        2 * self.index + u32::from(self.sign == Sign::Neg)
    }

    pub(crate) fn from_code(code: u32) -> Letter {
        Letter { index: code / 2, sign: if code.is_multiple_of(2) { Sign::Pos } else { Sign::Neg } }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.sign {
            Sign::Pos => write!(f, "x{}", self.index),
            Sign::Neg => write!(f, "x{}^-1", self.index),
        }
    }
}

/// A word over `x0, ..., x(rank-1)` and their inverses, stored as written.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    rank: u32,
    letters: Vec<Letter>,
}

impl Word {
    /// Builds a word, reducing every subscript modulo `rank`.
    pub fn new(rank: u32, letters: impl IntoIterator<Item = Letter>) -> Result<Word> {
        if rank == 0 {
            return Err(Error::ZeroRank);
        }
        let letters = letters.into_iter().map(|l| Letter { index: l.index % rank, sign: l.sign }).collect();
        Ok(Word { rank, letters })
    }

    /// Positive word `x_{i1} x_{i2} ...`.
    pub fn positive(rank: u32, subscripts: &[i64]) -> Result<Word> {
        if rank == 0 {
            return Err(Error::ZeroRank);
        }
        Ok(Word { rank, letters: subscripts.iter().map(|&i| Letter::new(i, Sign::Pos, rank)).collect() })
    }

    pub(crate) fn from_letters_unchecked(rank: u32, letters: Vec<Letter>) -> Word {
        Word { rank, letters }
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn with_rank(&self, rank: u32) -> Result<Word> {
        Word::new(rank, self.letters.iter().copied())
    }

    pub fn is_freely_reduced(&self) -> bool {
        self.letters.windows(2).all(|p| p[1] != p[0].inverse())
    }

    pub fn is_cyclically_reduced(&self) -> bool {
        self.is_freely_reduced()
            && match (self.letters.first(), self.letters.last()) {
                (Some(&first), Some(&last)) => self.len() == 1 || first != last.inverse(),
                _ => true,
            }
    }

    pub fn inverse(&self) -> Word {
        Word { rank: self.rank, letters: self.letters.iter().rev().map(|l| l.inverse()).collect() }
    }

    /// Cyclic permutation starting at letter `by` (taken modulo the length).
    pub fn rotate(&self, by: i64) -> Word {
        if self.letters.is_empty() {
            return self.clone();
        }
        let start = by.rem_euclid(self.len() as i64) as usize;
        let mut letters = Vec::with_capacity(self.len());
        letters.extend_from_slice(&self.letters[start..]);
        letters.extend_from_slice(&self.letters[..start]);
        Word { rank: self.rank, letters }
    }

    /// Image under the `by`-th power of the shift automorphism.
    pub fn shift(&self, by: i64) -> Word {
        Word { rank: self.rank, letters: self.letters.iter().map(|l| l.shifted(by, self.rank)).collect() }
    }

    pub fn multiply_subscripts(&self, unit: i64) -> Result<Word> {
        let n = i64::from(self.rank);
        if unit.gcd(&n) != 1 {
            return Err(Error::NotAUnit { u: unit, n: self.rank });
        }
        Ok(Word {
            rank: self.rank,
            letters: self
                .letters
                .iter()
                .map(|l| Letter::new(i64::from(l.index) * unit, l.sign, self.rank))
                .collect(),
        })
    }

    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|l| l.sign.exponent()).sum()
    }

    pub fn contains_x0(&self) -> bool {
        self.letters.iter().any(|l| l.index == 0)
    }

    /// `gcd(n, subscripts of w)`.
    pub fn subscript_gcd(&self) -> u32 {
        self.letters.iter().fold(self.rank, |g, l| g.gcd(&l.index))
    }

    /// `w^t`.
    pub fn pow(&self, t: usize) -> Word {
        Word { rank: self.rank, letters: self.letters.repeat(t) }
    }

    /// True when `other` is a cyclic permutation of `self`.
    pub fn is_rotation_of(&self, other: &Word) -> bool {
        self.len() == other.len()
            && (self.is_empty()
                || (0..self.len())
                    .any(|r| (0..self.len()).all(|i| self.letters[(r + i) % self.len()] == other.letters[i])))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// Parses `term (('*'|' ')+ term)*` with `term := 'x' int ('^' int)?`.
///
/// Exponents expand into repeated letters (`x1^-2` is `x1^-1 x1^-1`); no reduction is
/// applied. Subscripts may be any integer and are reduced modulo `n`.
pub fn parse_word(text: &str, n: u32) -> Result<Word> {
    if n == 0 {
        return Err(Error::ZeroRank);
    }
    let bytes = text.as_bytes();
    let offset = text.len() - text.trim_start().len();
    let end = text.trim_end().len();
    let mut pos = offset;
    let mut letters = Vec::new();
    let mut terms = 0usize;

    while pos < end {
        if terms > 0 {
            let sep_start = pos;
            while pos < end && (bytes[pos] == b' ' || bytes[pos] == b'*') {
                pos += 1;
            }
            if pos == sep_start {
                return Err(Error::Syntax { pos, msg: "expected ' ' or '*' between terms".into() });
            }
            if pos == end {
                return Err(Error::Syntax { pos, msg: "trailing separator".into() });
            }
        }
        if bytes[pos] != b'x' {
            return Err(Error::Syntax { pos, msg: format!("expected 'x', found {:?}", char_at(text, pos)) });
        }
        pos += 1;
        let (subscript, next) =
            read_int(text, pos, end).map_err(|token| Error::BadSubscript { pos, token })?;
        pos = next;
        let mut exponent = 1i64;
        if pos < end && bytes[pos] == b'^' {
            pos += 1;
            let (e, next) = read_int(text, pos, end).map_err(|token| Error::Syntax {
                pos,
                msg: format!("exponent is not an integer: {token:?}"),
            })?;
            exponent = e;
            pos = next;
        }
        let sign = if exponent < 0 { Sign::Neg } else { Sign::Pos };
        let letter = Letter::new(subscript, sign, n);
        letters.extend(std::iter::repeat_n(letter, exponent.unsigned_abs() as usize));
        terms += 1;
    }
    if letters.is_empty() {
        return Err(Error::EmptyWord);
    }
    Ok(Word { rank: n, letters })
}

fn char_at(text: &str, pos: usize) -> char {
    text[pos..].chars().next().unwrap_or('\0')
}

/// Reads an optionally negative decimal integer; on failure returns the offending token.
fn read_int(text: &str, start: usize, end: usize) -> std::result::Result<(i64, usize), String> {
    let bytes = text.as_bytes();
    let mut pos = start;
    if pos < end && (bytes[pos] == b'-' || bytes[pos] == b'+') {
        pos += 1;
    }
    let digits_start = pos;
    while pos < end && bytes[pos].is_ascii_digit() {
        pos += 1;
    }
    if pos == digits_start {
        let mut stop = start;
        while stop < end && !matches!(bytes[stop], b' ' | b'*' | b'^') {
            stop += 1;
        }
        return Err(text[start..stop.max(start)].to_string());
    }
    text[start..pos].parse::<i64>().map(|v| (v, pos)).map_err(|_| text[start..pos].to_string())
}

/// Cyclic reduction of a word together with its root and the exponent of that root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Normalized {
    pub word: Word,
    pub root: Word,
    pub power: usize,
}

/// Freely and cyclically reduces `w`, then splits off the maximal root.
pub fn normalize(w: &Word) -> Result<Normalized> {
    let mut stack: Vec<Letter> = Vec::with_capacity(w.len());
    for &l in &w.letters {
        if stack.last() == Some(&l.inverse()) {
            stack.pop();
        } else {
            stack.push(l);
        }
    }
    let mut lo = 0;
    let mut hi = stack.len();
    while hi - lo >= 2 && stack[lo] == stack[hi - 1].inverse() {
        lo += 1;
        hi -= 1;
    }
    if lo == hi {
        return Err(Error::FreelyTrivial);
    }
    let word = Word { rank: w.rank, letters: stack[lo..hi].to_vec() };
    let period = smallest_period(&word.letters);
    let root = Word { rank: w.rank, letters: word.letters[..period].to_vec() };
    let power = word.len() / period;
    Ok(Normalized { word, root, power })
}

/// Smallest `p` dividing `len` with `letters = letters[..p]^(len/p)`.
fn smallest_period(letters: &[Letter]) -> usize {
    let len = letters.len();
    (1..=len)
        .filter(|p| len.is_multiple_of(*p))
        .find(|&p| (p..len).all(|i| letters[i] == letters[i - p]))
        .unwrap_or(len)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SignClass {
    Positive,
    Negative,
    Alternating,
    /// Non-positive, non-negative and non-alternating.
    Mixed,
}

impl SignClass {
    pub fn name(self) -> &'static str {
        match self {
            SignClass::Positive => "positive",
            SignClass::Negative => "negative",
            SignClass::Alternating => "alternating",
            SignClass::Mixed => "mixed",
        }
    }
}

impl fmt::Display for SignClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Classifies a cyclically reduced word by the signs of its letters.
pub fn sign_class(w: &Word) -> SignClass {
    let letters = w.letters();
    if letters.iter().all(|l| l.is_positive()) {
        SignClass::Positive
    } else if letters.iter().all(|l| !l.is_positive()) {
        SignClass::Negative
    } else if (0..letters.len()).all(|i| letters[i].sign != letters[(i + 1) % letters.len()].sign) {
        SignClass::Alternating
    } else {
        SignClass::Mixed
    }
}

pub type Multiset = SmallVec<[u32; 8]>;

/// Subscript differences of the length-2 cyclic subwords of a word.
///
/// For a cyclic subword `u v` with subscripts `i` and `j`:
/// `x_i x_j^-1` contributes `j - i` to `a`, `x_i^-1 x_j` contributes `j - i` to `b`,
/// `x_i x_j` contributes `j - i` to `q_plus` and `x_i^-1 x_j^-1` contributes `i - j` to
/// `q_minus`. All values are residues modulo the rank and every multiset is sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct SubscriptMultisets {
    pub rank: u32,
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
    /// `gcd(n, A)`.
    #[serde(rename = "dA")]
    pub d_a: u32,
    /// `gcd(n, B)`.
    #[serde(rename = "dB")]
    pub d_b: u32,
    /// Smallest element of `Q`, when `Q` is nonempty.
    pub q0: Option<u32>,
    /// `gcd(n, A, B, q - q0)`; present only for non-alternating words.
    pub d: Option<u32>,
    pub sigma: i64,
}

pub fn subscript_multisets(w: &Word) -> SubscriptMultisets {
    let n = w.rank;
    let letters = w.letters();
    let len = letters.len();
    let mut ms = SubscriptMultisets {
        rank: n,
        a: Multiset::new(),
        b: Multiset::new(),
        q: Multiset::new(),
        q_plus: Multiset::new(),
        q_minus: Multiset::new(),
        d_a: n,
        d_b: n,
        q0: None,
        d: None,
        sigma: w.exponent_sum(),
    };
    let diff = |to: u32, from: u32| (to + n - from) % n;
    for i in 0..len {
        let u = letters[i];
        let v = letters[(i + 1) % len];
        match (u.sign, v.sign) {
            (Sign::Pos, Sign::Neg) => ms.a.push(diff(v.index, u.index)),
            (Sign::Neg, Sign::Pos) => ms.b.push(diff(v.index, u.index)),
            (Sign::Pos, Sign::Pos) => ms.q_plus.push(diff(v.index, u.index)),
            (Sign::Neg, Sign::Neg) => ms.q_minus.push(diff(u.index, v.index)),
        }
    }
    ms.a.sort_unstable();
    ms.b.sort_unstable();
    ms.q_plus.sort_unstable();
    ms.q_minus.sort_unstable();
    ms.q.extend(ms.q_plus.iter().copied());
    ms.q.extend(ms.q_minus.iter().copied());
    ms.q.sort_unstable();

    ms.d_a = ms.a.iter().fold(n, |g, &a| g.gcd(&a));
    ms.d_b = ms.b.iter().fold(n, |g, &b| g.gcd(&b));
    ms.q0 = ms.q.first().copied();
    if let Some(q0) = ms.q0 {
        let d = ms.q.iter().fold(ms.d_a.gcd(&ms.d_b), |g, &q| g.gcd(&diff(q, q0)));
        ms.d = Some(d);
    }
    ms
}

impl SubscriptMultisets {
    /// `sum A + sum B + sum Q+ - sum Q-` reduced modulo the rank; zero for every word.
    pub fn signed_sum(&self) -> u32 {
        let n = u64::from(self.rank);
        let total = self.a.iter().chain(&self.b).chain(&self.q_plus).map(|&x| u64::from(x)).sum::<u64>()
            + self.q_minus.iter().map(|&x| n - u64::from(x)).sum::<u64>();
        (total % n) as u32
    }

    pub fn len(&self) -> usize {
        self.a.len() + self.b.len() + self.q.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// A cyclic presentation `P_n(w)` with its derived flags.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicPresentation {
    n: u32,
    word: Word,
    root: Word,
    power: usize,
    irreducible: bool,
    redundant: bool,
}

impl CyclicPresentation {
    pub fn n(&self) -> u32 {
        self.n
    }

    /// The cyclically reduced relator.
    pub fn word(&self) -> &Word {
        &self.word
    }

    pub fn root(&self) -> &Word {
        &self.root
    }

    pub fn power(&self) -> usize {
        self.power
    }

    pub fn irreducible(&self) -> bool {
        self.irreducible
    }

    pub fn redundant(&self) -> bool {
        self.redundant
    }

    pub fn proper_power(&self) -> bool {
        self.power > 1
    }

    /// `gcd(n, subscripts of w)`.
    pub fn reduction_gcd(&self) -> u32 {
        self.word.subscript_gcd()
    }

    /// `w, θ(w), ..., θ^(n-1)(w)`.
    pub fn relators(&self) -> Vec<Word> {
        (0..self.n).map(|i| self.word.shift(i64::from(i))).collect()
    }

    pub fn sign_class(&self) -> SignClass {
        sign_class(&self.word)
    }

    pub fn multisets(&self) -> SubscriptMultisets {
        subscript_multisets(&self.word)
    }

    /// The same presentation with the relator inverted; it has the same star graph.
    pub fn inverted(&self) -> CyclicPresentation {
        CyclicPresentation {
            n: self.n,
            word: self.word.inverse(),
            root: self.root.inverse(),
            power: self.power,
            irreducible: self.irreducible,
            redundant: self.redundant,
        }
    }

    /// For `δ = gcd(n, subscripts) > 1`, the rank-`n/δ` presentation whose `δ` disjoint copies
    /// make up this one.
    pub fn contracted(&self) -> Option<CyclicPresentation> {
        let delta = self.reduction_gcd();
        if delta == 1 {
            return None;
        }
        let m = self.n / delta;
        let letters =
            self.word.letters().iter().map(|l| Letter { index: l.index / delta, sign: l.sign }).collect();
        presentation_flags(m, &Word::from_letters_unchecked(m, letters)).ok()
    }
}

/// Builds `P_n(w)` after cyclically reducing `w`.
pub fn presentation_flags(n: u32, w: &Word) -> Result<CyclicPresentation> {
    if n == 0 {
        return Err(Error::ZeroRank);
    }
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    let w = if w.rank() == n { w.clone() } else { w.with_rank(n)? };
    let Normalized { word, root, power } = normalize(&w)?;
    if !word.contains_x0() {
        return Err(Error::MissingX0(word.to_string()));
    }
    let irreducible = word.subscript_gcd() == 1;
    let redundant = is_redundant(&word);
    Ok(CyclicPresentation { n, word, root, power, irreducible, redundant })
}

/// Whether some `θ^i(w)` is a cyclic permutation of `θ^j(w)^(±1)` with `i ≠ j`.
///
/// Reduces to a single shift `t = i - j`: `θ^t(w)` conjugate to `w` with `t ≠ 0`, or to
/// `w^-1` for any `t`. `w` must be cyclically reduced.
pub fn is_redundant(w: &Word) -> bool {
    shift_rotation_match(w.letters(), w.letters(), w.rank(), false)
        || shift_rotation_match(w.letters(), w.inverse().letters(), w.rank(), true)
}

/// Is there a shift `t` (nonzero unless `allow_zero`) with `θ^t(w)` a rotation of `target`?
fn shift_rotation_match(w: &[Letter], target: &[Letter], n: u32, allow_zero: bool) -> bool {
    let len = w.len();
    if len == 0 || len != target.len() {
        return false;
    }
    (0..len).any(|r| {
        if target[r].sign != w[0].sign {
            return false;
        }
        let t = (target[r].index + n - w[0].index) % n;
        if t == 0 && !allow_zero {
            return false;
        }
        (0..len).all(|i| {
            let expect = target[(r + i) % len];
            expect.sign == w[i].sign && expect.index == (w[i].index + t) % n
        })
    })
}

/// Elementary word transformations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Transform {
    /// Add `j` to every subscript.
    Shift(i64),
    /// Free-group inverse.
    Invert,
    /// Cyclic permutation starting at letter `j`.
    Rotate(i64),
    /// Subscript map `i -> u*i`; `u` must be a unit modulo the rank.
    MultiplySubscripts(i64),
}

pub fn transform(w: &Word, op: Transform) -> Result<Word> {
    match op {
        Transform::Shift(j) => Ok(w.shift(j)),
        Transform::Invert => Ok(w.inverse()),
        Transform::Rotate(j) => Ok(w.rotate(j)),
        Transform::MultiplySubscripts(u) => w.multiply_subscripts(u),
    }
}
