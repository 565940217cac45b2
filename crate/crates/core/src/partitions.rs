//! Integer partitions and weak compositions.
//!
//! Both types store their parts without trailing zeros, so derived equality,
//! ordering and hashing all work modulo trailing zeros. Indexing past the
//! stored length reads as `0`.

use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Reverse;
use core::fmt;
use core::ops::Deref;
use core::str::FromStr;

use crate::{Error, Result};

/// Drops the trailing zeros of a sequence.
pub fn canonicalize(parts: &[usize]) -> &[usize] {
    let len = parts.iter().rposition(|&x| x != 0).map_or(0, |i| i + 1);
    &parts[..len]
}

/// A finite sequence of nonnegative integers, stored in canonical form.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeakComposition(Vec<usize>);

impl WeakComposition {
    pub fn new(mut parts: Vec<usize>) -> Self {
        let len = canonicalize(&parts).len();
        parts.truncate(len);
        WeakComposition(parts)
    }

    /// Entry `i` (0-based); zero past the end.
    pub fn get(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// Position of the last nonzero entry (1-based), `0` when empty.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn into_parts(self) -> Vec<usize> {
        self.0
    }

    /// `Some` when the entries happen to be nonincreasing.
    pub fn to_partition(&self) -> Option<Partition> {
        Partition::new(self.0.clone()).ok()
    }
}

impl Deref for WeakComposition {
    type Target = [usize];
    fn deref(&self) -> &[usize] {
        &self.0
    }
}

impl AsRef<[usize]> for WeakComposition {
    fn as_ref(&self) -> &[usize] {
        &self.0
    }
}

impl From<Partition> for WeakComposition {
    fn from(p: Partition) -> Self {
        WeakComposition(p.0)
    }
}

/// A partition: a nonincreasing sequence of positive integers.
///
/// The empty partition is the unique partition of `0`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Validates `parts` (trailing zeros are dropped first).
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        let len = canonicalize(&parts).len();
        parts.truncate(len);
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotAPartition(join(&parts)));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The one-row partition `(n)`; empty for `n = 0`.
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Partition::empty()
        } else {
            Partition(vec![n])
        }
    }

    /// The one-column partition `(1ⁿ)`.
    pub fn column(n: usize) -> Self {
        Partition(vec![1; n])
    }

    /// The hook `(n−1, 1)` labelling the nontrivial part of the defining
    /// representation. Requires `n ≥ 2`.
    pub fn hook(n: usize) -> Self {
        assert!(n >= 2, "(n-1,1) needs n >= 2");
        Partition(vec![n - 1, 1])
    }

    pub fn get(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The integer being partitioned.
    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn to_composition(&self) -> WeakComposition {
        WeakComposition(self.0.clone())
    }
}

impl Deref for Partition {
    type Target = [usize];
    fn deref(&self) -> &[usize] {
        &self.0
    }
}

impl AsRef<[usize]> for Partition {
    fn as_ref(&self) -> &[usize] {
        &self.0
    }
}

impl TryFrom<WeakComposition> for Partition {
    type Error = Error;
    fn try_from(w: WeakComposition) -> Result<Self> {
        Partition::new(w.0)
    }
}

/// `α′_s = |{ j : α_j ≥ s }|`.
pub fn conjugate(p: &Partition) -> Partition {
    let width = p.get(0);
    Partition((1..=width).map(|s| p.iter().take_while(|&&x| x >= s).count()).collect())
}

/// Dominance `a ⊴ b`: every prefix sum of `b` is at least the matching prefix
/// sum of `a`. Defined for arbitrary weak compositions; sizes are not
/// compared.
pub fn dominance_leq(a: &[usize], b: &[usize]) -> bool {
    let len = a.len().max(b.len());
    let (mut sa, mut sb) = (0usize, 0usize);
    for i in 0..len {
        sa += a.get(i).copied().unwrap_or(0);
        sb += b.get(i).copied().unwrap_or(0);
        if sa > sb {
            return false;
        }
    }
    true
}

/// `a_i ≤ b_i` for every `i`, missing entries reading as zero.
pub fn componentwise_leq(a: &[usize], b: &[usize]) -> bool {
    a.iter().enumerate().all(|(i, &x)| x <= b.get(i).copied().unwrap_or(0))
}

/// `a − b`, requiring `b ≤ a` componentwise.
pub fn subtract(a: &[usize], b: &[usize]) -> Result<WeakComposition> {
    if !componentwise_leq(b, a) {
        return Err(Error::NotContained { inner: join(b), outer: join(a) });
    }
    Ok(WeakComposition::new(
        a.iter().enumerate().map(|(i, &x)| x - b.get(i).copied().unwrap_or(0)).collect(),
    ))
}

/// Nonzero entries sorted into nonincreasing order.
pub fn sort_to_partition(w: &[usize]) -> Partition {
    let mut parts: Vec<usize> = w.iter().copied().filter(|&x| x != 0).collect();
    parts.sort_unstable_by_key(|&x| Reverse(x));
    Partition(parts)
}

/// `q_w = ½ Σ w_i (w_i − (2i − 1))` with 1-based `i`.
///
/// For a partition `α ⊢ n` this is `n(n−1)/(2 f_α) · χ^α(transposition)`,
/// the eigenvalue of the sum of all transpositions on `[α]`. The formula is
/// applied verbatim to weak compositions as well.
pub fn q_value(w: &[usize]) -> Result<i64> {
    const WHAT: &str = "q";
    let mut twice: i64 = 0;
    for (i, &x) in w.iter().enumerate() {
        let x = i64::try_from(x).map_err(|_| Error::Overflow(WHAT))?;
        let offset = i64::try_from(i)
            .ok()
            .and_then(|i| i.checked_mul(2))
            .and_then(|v| v.checked_add(1))
            .ok_or(Error::Overflow(WHAT))?;
        let term = x
            .checked_sub(offset)
            .and_then(|d| d.checked_mul(x))
            .ok_or(Error::Overflow(WHAT))?;
        twice = twice.checked_add(term).ok_or(Error::Overflow(WHAT))?;
    }
    // x(x − (2i−1)) is a product of two integers of opposite parity.
    debug_assert!(twice % 2 == 0);
    Ok(twice / 2)
}

/// Hook length of box `(row, col)` (0-based) of `p`.
pub fn hook_length(p: &Partition, conj: &Partition, row: usize, col: usize) -> usize {
    (p.get(row) - col) + (conj.get(col) - row) - 1
}

/// Dimension `f_p` of the irreducible representation `[p]`, by the hook
/// length formula `n! / Π hooks`.
///
/// The quotient is evaluated as a product of prime powers, so no
/// intermediate value exceeds the result.
pub fn dimension(p: &Partition) -> Result<u128> {
    let n = p.size();
    let conj = conjugate(p);
    let mut exponents = vec![0i64; n + 1];
    let mut add = |mut m: usize, sign: i64| {
        let mut d = 2;
        while d * d <= m {
            while m.is_multiple_of(d) {
                exponents[d] += sign;
                m /= d;
            }
            d += 1;
        }
        if m > 1 {
            exponents[m] += sign;
        }
    };
    for k in 2..=n {
        add(k, 1);
    }
    for (row, &len) in p.iter().enumerate() {
        for col in 0..len {
            add(hook_length(p, &conj, row, col), -1);
        }
    }
    let mut f: u128 = 1;
    for (prime, &e) in exponents.iter().enumerate() {
        debug_assert!(e >= 0, "hook product does not divide n!");
        for _ in 0..e {
            f = f.checked_mul(prime as u128).ok_or(Error::Overflow("dimension"))?;
        }
    }
    Ok(f)
}

/// All partitions of `n` in reverse lexicographic order: `(n)` first,
/// `(1ⁿ)` last. `n = 0` yields the single empty partition.
pub fn enumerate_partitions(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill_partitions(n, n, &mut current, &mut out);
    out
}

fn fill_partitions(rest: usize, max: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if rest == 0 {
        out.push(Partition(current.clone()));
        return;
    }
    for part in (1..=max.min(rest)).rev() {
        current.push(part);
        fill_partitions(rest - part, part, current, out);
        current.pop();
    }
}

/// Partitions of `n` contained componentwise in `outer`, reverse lexicographic.
pub fn partitions_inside(n: usize, outer: &[usize]) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill_inside(n, outer, &mut current, &mut out);
    out
}

fn fill_inside(rest: usize, outer: &[usize], current: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if rest == 0 {
        out.push(Partition(current.clone()));
        return;
    }
    let row = current.len();
    let bound = outer.get(row).copied().unwrap_or(0);
    let max = current.last().copied().unwrap_or(usize::MAX).min(bound).min(rest);
    for part in (1..=max).rev() {
        current.push(part);
        fill_inside(rest - part, outer, current, out);
        current.pop();
    }
}

fn join(parts: &[usize]) -> String {
    let mut s = String::new();
    for (i, x) in parts.iter().enumerate() {
        if i > 0 {
            s.push(',');
        }
        s.push_str(&x.to_string());
    }
    s
}

fn fmt_parts(parts: &[usize], f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if parts.is_empty() {
        return f.write_str("()");
    }
    f.write_str(&join(parts))
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_parts(&self.0, f)
    }
}

impl fmt::Display for WeakComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_parts(&self.0, f)
    }
}

/// Parses `4,2,1`, with `k^m` expanding to `m` copies of `k` (`5^2,4,2^3`).
/// Whitespace and optional surrounding parentheses are ignored; `()` and the
/// empty string give the empty sequence.
pub fn parse_parts(text: &str) -> Result<Vec<usize>> {
    let trimmed = text.trim();
    let inner = trimmed
        .strip_prefix('(')
        .and_then(|t| t.strip_suffix(')'))
        .unwrap_or(trimmed)
        .trim();
    let mut parts = Vec::new();
    if inner.is_empty() {
        return Ok(parts);
    }
    for token in inner.split(',') {
        let token = token.trim();
        let (base, reps) = match token.split_once('^') {
            Some((b, e)) => (b.trim(), parse_number(e.trim(), text)?),
            None => (token, 1),
        };
        let base = parse_number(base, text)?;
        parts.extend(core::iter::repeat_n(base, reps));
    }
    Ok(parts)
}

fn parse_number(token: &str, text: &str) -> Result<usize> {
    token
        .parse::<usize>()
        .map_err(|_| Error::Parse(alloc::format!("'{token}' in '{text}' is not a nonnegative integer")))
}

impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let parts = parse_parts(s)?;
        if let Some(pos) = parts.iter().position(|&x| x == 0) {
            if parts[pos..].iter().any(|&x| x != 0) {
                return Err(Error::Parse(alloc::format!("'{s}': partition parts must be positive")));
            }
        }
        Partition::new(parts)
    }
}

impl FromStr for WeakComposition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(WeakComposition::new(parse_parts(s)?))
    }
}
