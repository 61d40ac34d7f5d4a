//! Integer partitions and their canonical text form.
//!
//! The text form lists parts separated by `.`, with `k^m` standing for `m`
//! consecutive parts equal to `k`: `2^2.1^2` is `(2, 2, 1, 1)`. The empty
//! partition is written `-`; `""` and `∅` are accepted on input.

use std::fmt;
use std::str::FromStr;

use crate::error::{invalid, parse_error, Error, Result};

/// Text used for the empty partition in canonical encodings.
pub const EMPTY_CANONICAL: &str = "-";
/// Text used for the empty partition in human-facing output.
pub const EMPTY_DISPLAY: &str = "∅";

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Builds a partition from its parts. Trailing zeros are dropped; any
    /// other zero or an increase is rejected.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.contains(&0) {
            return Err(invalid(format!("zero part in {parts:?}")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(invalid(format!("parts {parts:?} are not weakly decreasing")));
        }
        Ok(Self { parts })
    }

    /// Sorts the given values decreasingly and drops zeros.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Total number of boxes.
    pub fn rank(&self) -> usize {
        self.parts.iter().sum()
    }

    /// The `i`-th part, counting from 0; rows past the end read as 0.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// The staircase `(t, t-1, ..., 1)`.
    pub fn staircase(t: usize) -> Self {
        Self {
            parts: (1..=t).rev().collect(),
        }
    }

    /// Canonical text, e.g. `4.2^2.1` or `-`.
    pub fn canonical(&self) -> String {
        self.render(EMPTY_CANONICAL)
    }

    /// Like [`Partition::canonical`] but writes the empty partition as `∅`.
    pub fn display_text(&self) -> String {
        self.render(EMPTY_DISPLAY)
    }

    fn render(&self, empty: &str) -> String {
        if self.parts.is_empty() {
            return empty.to_string();
        }
        let mut out = Vec::new();
        let mut i = 0;
        while i < self.parts.len() {
            let k = self.parts[i];
            let run = self.parts[i..].iter().take_while(|&&p| p == k).count();
            if run == 1 {
                out.push(k.to_string());
            } else {
                out.push(format!("{k}^{run}"));
            }
            i += run;
        }
        out.join(".")
    }

    /// Adds a box at the end of row `row` (0-based), if the result is
    /// still a partition.
    pub fn add_box(&self, row: usize) -> Option<Partition> {
        let addable = row <= self.parts.len() && (row == 0 || self.parts[row - 1] > self.part(row));
        if !addable {
            return None;
        }
        let mut parts = self.parts.clone();
        if row == parts.len() {
            parts.push(1);
        } else {
            parts[row] += 1;
        }
        Some(Self { parts })
    }

    pub fn remove_box(&self, row: usize) -> Option<Partition> {
        let removable = row < self.parts.len() && self.parts[row] > self.part(row + 1);
        if !removable {
            return None;
        }
        let mut parts = self.parts.clone();
        parts[row] -= 1;
        if parts[row] == 0 {
            parts.pop();
        }
        Some(Self { parts })
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_text())
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim();
        let body = body
            .strip_prefix('(')
            .and_then(|b| b.strip_suffix(')'))
            .unwrap_or(body)
            .trim();
        if body.is_empty() || body == EMPTY_CANONICAL || body == EMPTY_DISPLAY {
            return Ok(Self::empty());
        }
        let mut parts = Vec::new();
        for item in body.split('.') {
            let (value, count) = match item.split_once('^') {
                Some((v, c)) => (v, c),
                None => (item, "1"),
            };
            let value: usize = value
                .trim()
                .parse()
                .map_err(|_| parse_error(s, format!("bad part {item:?}")))?;
            let count: usize = count
                .trim()
                .parse()
                .map_err(|_| parse_error(s, format!("bad exponent in {item:?}")))?;
            if value == 0 || count == 0 {
                return Err(parse_error(s, format!("part {item:?} must be positive")));
            }
            parts.extend(std::iter::repeat_n(value, count));
        }
        Self::new(parts).map_err(|e| parse_error(s, e.to_string()))
    }
}

/// `n(λ) = Σ_{i≥1} (i−1)·λ_i`.
pub fn n_function(p: &Partition) -> usize {
    p.parts.iter().enumerate().map(|(i, &part)| i * part).sum()
}

/// Strict dominance `p ◁ q`: `p ≠ q` and every partial sum of `p` is at most
/// the matching partial sum of `q`.
pub fn dominance_less(p: &Partition, q: &Partition) -> Result<bool> {
    if p.rank() != q.rank() {
        return Err(invalid(format!(
            "dominance needs equal ranks, got |{}| = {} and |{}| = {}",
            p.canonical(),
            p.rank(),
            q.canonical(),
            q.rank()
        )));
    }
    if p == q {
        return Ok(false);
    }
    let len = p.len().max(q.len());
    let (mut sp, mut sq) = (0, 0);
    for i in 0..len {
        sp += p.part(i);
        sq += q.part(i);
        if sp > sq {
            return Ok(false);
        }
    }
    Ok(true)
}

/// All partitions of `n`, in reverse lexicographic order (`(n)` first).
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn go(remaining: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition { parts: prefix.clone() });
            return;
        }
        for k in (1..=remaining.min(max)).rev() {
            prefix.push(k);
            go(remaining - k, k, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}
