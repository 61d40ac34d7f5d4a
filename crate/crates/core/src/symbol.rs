//! Symbols of bipartitions for the charge `(t, 0)`, the `a`-function and
//! the inverse `Φ_t` of the twisted 2-quotient.
//!
//! The symbol of `(λ¹, λ²)` with width `w` has a first row
//! `λ¹_i − i + w + t + ½` for `i = 1..w+t` and a second row `λ²_i − i + w`
//! for `i = 1..w`, merged into one decreasing sequence `κ`. `κ⁰` is the
//! symbol of the empty bipartition at the same width. Up to a common shift,
//! `2κ` is the β-set of `Φ_t(λ¹, λ²)` and `2κ⁰` that of `Δ_t`, so
//! `2(κ_j − κ⁰_j) = Φ_t(λ)_j − (Δ_t)_j`.

use std::fmt;
use std::ops::{Add, Sub};

use crate::abacus::{twisted_two_quotient, two_core};
use crate::error::{invalid, Error, Result};
use crate::multipartition::Bipartition;
use crate::partition::Partition;

/// An exact half-integer, stored doubled.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HalfInt(i64);

impl HalfInt {
    pub fn from_doubled(doubled: i64) -> Self {
        Self(doubled)
    }

    pub fn from_int(n: i64) -> Self {
        Self(2 * n)
    }

    pub fn doubled(self) -> i64 {
        self.0
    }

    pub fn is_integer(self) -> bool {
        self.0 % 2 == 0
    }
}

impl Add for HalfInt {
    type Output = HalfInt;
    fn add(self, rhs: Self) -> Self {
        Self(self.0 + rhs.0)
    }
}

impl Sub for HalfInt {
    type Output = HalfInt;
    fn sub(self, rhs: Self) -> Self {
        Self(self.0 - rhs.0)
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Symbol {
    kappa: Vec<HalfInt>,
    kappa0: Vec<HalfInt>,
    t: usize,
    width: usize,
}

impl Symbol {
    /// Decreasing merged entries `κ_j`.
    pub fn kappa(&self) -> &[HalfInt] {
        &self.kappa
    }

    /// Entries `κ⁰_j` of the empty bipartition's symbol.
    pub fn kappa0(&self) -> &[HalfInt] {
        &self.kappa0
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn width(&self) -> usize {
        self.width
    }

    /// `κ_j − κ⁰_j`, entrywise.
    pub fn differences(&self) -> impl Iterator<Item = HalfInt> + '_ {
        self.kappa.iter().zip(&self.kappa0).map(|(&k, &k0)| k - k0)
    }
}

fn rows(b: &Bipartition, t: usize, width: usize) -> Vec<HalfInt> {
    let first = (1..=width + t).map(|i| {
        let v = b.first.part(i - 1) as i64 - i as i64 + (width + t) as i64;
        HalfInt::from_doubled(2 * v + 1)
    });
    let second = (1..=width).map(|i| {
        let v = b.second.part(i - 1) as i64 - i as i64 + width as i64;
        HalfInt::from_int(v)
    });
    let mut merged: Vec<HalfInt> = first.chain(second).collect();
    merged.sort_unstable_by(|a, b| b.cmp(a));
    merged
}

pub fn symbol(b: &Bipartition, t: usize, width: usize) -> Result<Symbol> {
    let needed = minimal_width(b);
    if width < needed {
        return Err(invalid(format!(
            "width {width} is below the {needed} rows of {}",
            b.canonical()
        )));
    }
    Ok(Symbol {
        kappa: rows(b, t, width),
        kappa0: rows(&Bipartition::empty(), t, width),
        t,
        width,
    })
}

pub fn minimal_width(b: &Bipartition) -> usize {
    b.first.len().max(b.second.len()).max(1)
}

/// `n̄ = Σ_{j≥1} (j − 1)(κ_j − κ⁰_j)`.
pub fn n_bar(sym: &Symbol) -> HalfInt {
    sym.differences().enumerate().fold(HalfInt::default(), |acc, (j, d)| {
        acc + HalfInt::from_doubled(j as i64 * d.doubled())
    })
}

/// `a(b) = 2·n̄` for the type-`B` parameters `q²`, `q^{2t+1}`.
pub fn a_function(b: &Bipartition, t: usize) -> usize {
    let sym = symbol(b, t, minimal_width(b)).expect("minimal width is valid");
    let a = n_bar(&sym).doubled();
    debug_assert!(a >= 0);
    a as usize
}

/// The partition with 2-core `Δ_t` whose twisted 2-quotient is `b`.
pub fn phi_t(b: &Bipartition, t: usize) -> Result<Partition> {
    let sym = symbol(b, t, minimal_width(b))?;
    let core = Partition::staircase(t);
    let parts: Vec<usize> = sym
        .differences()
        .enumerate()
        .map(|(j, d)| {
            let v = d.doubled() + core.part(j) as i64;
            usize::try_from(v)
                .map_err(|_| Error::ConstructionInconsistency(format!("negative part {v} at row {}", j + 1)))
        })
        .collect::<Result<_>>()?;
    let lambda = Partition::new(parts).map_err(|e| Error::ConstructionInconsistency(e.to_string()))?;

    let check = |ok: bool, what: &str| {
        if ok {
            Ok(())
        } else {
            Err(Error::ConstructionInconsistency(format!(
                "Φ_{t}({}) = {}: {what}",
                b.canonical(),
                lambda.canonical()
            )))
        }
    };
    check(two_core(&lambda).t() == t, "wrong 2-core")?;
    check(&twisted_two_quotient(&lambda) == b, "wrong twisted 2-quotient")?;
    check(lambda.rank() == 2 * b.rank() + t * (t + 1) / 2, "wrong size")?;
    Ok(lambda)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(s: &str) -> Bipartition {
        s.parse().unwrap()
    }

    fn halves(v: &[i64]) -> Vec<HalfInt> {
        v.iter().map(|&x| HalfInt::from_doubled(x)).collect()
    }

    #[test]
    fn symbol_examples() {
        let s = symbol(&b("-|1"), 0, 2).unwrap();
        assert_eq!(s.kappa(), halves(&[4, 3, 1, 0]));
        assert_eq!(s.kappa0(), halves(&[3, 2, 1, 0]));

        for t in 0..4 {
            let s = symbol(&b("-|-"), t, 3).unwrap();
            assert_eq!(s.kappa(), s.kappa0());
        }

        let s = symbol(&b("1|1^2"), 0, 2).unwrap();
        let d: Vec<HalfInt> = s.differences().collect();
        assert_eq!(d, halves(&[2, 2, 1, 1]));

        assert!(symbol(&b("1^3|-"), 0, 2).is_err());
    }

    #[test]
    fn n_bar_examples() {
        assert_eq!(n_bar(&symbol(&b("-|-"), 2, 2).unwrap()), HalfInt::from_int(0));
        assert_eq!(n_bar(&symbol(&b("-|1"), 0, 2).unwrap()), HalfInt::from_doubled(1));
        assert_eq!(n_bar(&symbol(&b("1|1^2"), 0, 2).unwrap()), HalfInt::from_doubled(7));
        assert_eq!(HalfInt::from_doubled(7).to_string(), "7/2");
    }

    #[test]
    fn a_function_examples() {
        assert_eq!(a_function(&b("1|-"), 0), 0);
        assert_eq!(a_function(&b("-|1"), 0), 1);
        assert_eq!(a_function(&b("1|1^2"), 0), 7);
        for t in 0..4 {
            assert_eq!(a_function(&b("-|-"), t), 0);
        }
    }

    #[test]
    fn phi_examples() {
        let p = |s: &str| s.parse::<Partition>().unwrap();
        assert_eq!(phi_t(&b("1|-"), 0).unwrap(), p("2"));
        assert_eq!(phi_t(&b("-|3"), 0).unwrap(), p("5.1"));
        assert_eq!(phi_t(&b("-|-"), 2).unwrap(), p("2.1"));
        assert_eq!(phi_t(&b("1|1^2"), 0).unwrap(), p("2^2.1^2"));
        assert_eq!(phi_t(&b("1|-"), 1).unwrap(), p("3"));
    }

    #[test]
    fn width_stability() {
        for bp in ["-|-", "1|1^2", "3.1|2", "-|1^4"] {
            let bp = b(bp);
            for t in 0..4 {
                let w0 = minimal_width(&bp);
                let base = n_bar(&symbol(&bp, t, w0).unwrap());
                for w in w0..w0 + 4 {
                    assert_eq!(n_bar(&symbol(&bp, t, w).unwrap()), base);
                }
            }
        }
    }
}
