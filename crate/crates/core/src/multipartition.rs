use std::fmt;
use std::str::FromStr;

use crate::error::{invalid, parse_error, Error, Result};
use crate::partition::{partitions_of, Partition};

/// An ordered `d`-tuple of partitions. Text form joins the component
/// encodings with `|`, e.g. `2.1|1^2` or `-|-`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Multipartition {
    components: Vec<Partition>,
}

impl Multipartition {
    pub fn new(components: Vec<Partition>) -> Result<Self> {
        if components.is_empty() {
            return Err(invalid("a multipartition needs at least one component"));
        }
        Ok(Self { components })
    }

    /// The empty multipartition of level `d`.
    pub fn empty(d: usize) -> Self {
        assert!(d >= 1, "level must be positive");
        Self {
            components: vec![Partition::empty(); d],
        }
    }

    pub fn level(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[Partition] {
        &self.components
    }

    /// Component `c`, 1-based.
    pub fn component(&self, c: usize) -> &Partition {
        &self.components[c - 1]
    }

    pub fn rank(&self) -> usize {
        self.components.iter().map(Partition::rank).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.components.iter().all(Partition::is_empty)
    }

    pub(crate) fn with_component(&self, c: usize, p: Partition) -> Self {
        let mut components = self.components.clone();
        components[c - 1] = p;
        Self { components }
    }

    pub fn canonical(&self) -> String {
        self.components
            .iter()
            .map(Partition::canonical)
            .collect::<Vec<_>>()
            .join("|")
    }

    pub fn display_text(&self) -> String {
        self.components
            .iter()
            .map(Partition::display_text)
            .collect::<Vec<_>>()
            .join("|")
    }
}

impl fmt::Display for Multipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_text())
    }
}

impl FromStr for Multipartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim();
        let body = body.strip_prefix('(').and_then(|b| b.strip_suffix(')')).unwrap_or(body);
        let components = body
            .split('|')
            .map(str::parse)
            .collect::<Result<Vec<Partition>>>()
            .map_err(|e| match e {
                Error::Parse { reason, .. } => parse_error(s, reason),
                other => other,
            })?;
        Self::new(components)
    }
}

/// All multipartitions of level `d` and rank `n`, in a fixed order.
pub fn multipartitions_of(n: usize, d: usize) -> Vec<Multipartition> {
    fn go(n: usize, d: usize, prefix: &mut Vec<Partition>, out: &mut Vec<Multipartition>) {
        if d == 1 {
            for p in partitions_of(n) {
                let mut components = prefix.clone();
                components.push(p);
                out.push(Multipartition { components });
            }
            return;
        }
        for k in 0..=n {
            for p in partitions_of(k) {
                prefix.push(p);
                go(n - k, d - 1, prefix, out);
                prefix.pop();
            }
        }
    }
    assert!(d >= 1, "level must be positive");
    let mut out = Vec::new();
    go(n, d, &mut Vec::new(), &mut out);
    out
}

/// A pair of partitions.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Bipartition {
    pub first: Partition,
    pub second: Partition,
}

impl Bipartition {
    pub fn new(first: Partition, second: Partition) -> Self {
        Self { first, second }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.first.rank() + self.second.rank()
    }

    pub fn canonical(&self) -> String {
        format!("{}|{}", self.first.canonical(), self.second.canonical())
    }

    pub fn display_text(&self) -> String {
        format!("{}|{}", self.first.display_text(), self.second.display_text())
    }

    pub fn to_multipartition(&self) -> Multipartition {
        Multipartition {
            components: vec![self.first.clone(), self.second.clone()],
        }
    }
}

impl fmt::Display for Bipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_text())
    }
}

impl FromStr for Bipartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let m: Multipartition = s.parse()?;
        Self::try_from(&m).map_err(|_| parse_error(s, "expected exactly two components"))
    }
}

impl TryFrom<&Multipartition> for Bipartition {
    type Error = Error;

    fn try_from(m: &Multipartition) -> Result<Self> {
        match m.components() {
            [first, second] => Ok(Self::new(first.clone(), second.clone())),
            other => Err(invalid(format!(
                "expected a bipartition, got {} components",
                other.len()
            ))),
        }
    }
}

impl From<Bipartition> for Multipartition {
    fn from(b: Bipartition) -> Self {
        Multipartition {
            components: vec![b.first, b.second],
        }
    }
}

/// All bipartitions of rank `n`.
pub fn bipartitions_of(n: usize) -> Vec<Bipartition> {
    multipartitions_of(n, 2)
        .iter()
        .map(|m| Bipartition::try_from(m).expect("level 2"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_round_trip() {
        let m: Multipartition = "2.1|1^2".parse().unwrap();
        assert_eq!(m.level(), 2);
        assert_eq!(m.rank(), 5);
        assert_eq!(m.canonical(), "2.1|1^2");
        assert_eq!("-|-".parse::<Multipartition>().unwrap(), Multipartition::empty(2));
        assert_eq!("∅|∅".parse::<Multipartition>().unwrap(), Multipartition::empty(2));
        assert_eq!(Multipartition::empty(3).canonical(), "-|-|-");
        assert_eq!(Multipartition::empty(2).to_string(), "∅|∅");
        let b: Bipartition = "(2|1)".parse().unwrap();
        assert_eq!(b.canonical(), "2|1");
        assert!("1|1|1".parse::<Bipartition>().is_err());
        assert!("1|x".parse::<Multipartition>().is_err());
    }

    #[test]
    fn bipartition_counts() {
        // Σ_k p(k) p(n-k)
        let counts: Vec<usize> = (0..=6).map(|n| bipartitions_of(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 5, 10, 20, 36, 65]);
        assert_eq!(multipartitions_of(2, 3).len(), 9);
    }
}
