//! Kashiwara operators on the level-`d` Fock space.
//!
//! The `i`-signature of a multipartition lists its addable and removable
//! nodes of residue `i`, sorted increasingly for the node order of the
//! chosen realization. Adjacent pairs "removable, then addable" cancel
//! until the word reads `A…A R…R`. `f̃_i` adds the last surviving addable
//! node, `ẽ_i` removes the first surviving removable node.

use std::cmp::{Ordering, Reverse};
use std::fmt;
use std::str::FromStr;

use crate::error::{invalid, parse_error, Error, Result};
use crate::multipartition::Multipartition;

/// A box of a multipartition: row `a`, column `b`, component `c`, all
/// 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Node {
    pub a: usize,
    pub b: usize,
    pub c: usize,
}

impl Node {
    pub fn new(a: usize, b: usize, c: usize) -> Self {
        Self { a, b, c }
    }
}

impl fmt::Display for Node {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.a, self.b, self.c)
    }
}

/// Integer `d`-tuple `s = (s_1, …, s_d)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Charge(Vec<i64>);

impl Charge {
    pub fn new(values: Vec<i64>) -> Result<Self> {
        if values.is_empty() {
            return Err(invalid("charge must have at least one entry"));
        }
        Ok(Self(values))
    }

    pub fn values(&self) -> &[i64] {
        &self.0
    }

    pub fn level(&self) -> usize {
        self.0.len()
    }

    /// Entry for component `c`, 1-based.
    pub fn get(&self, c: usize) -> i64 {
        self.0[c - 1]
    }

    /// The same charge with `s_c` replaced by `s_c + shift`.
    pub fn shifted(&self, c: usize, shift: i64) -> Self {
        let mut v = self.0.clone();
        v[c - 1] += shift;
        Self(v)
    }
}

impl fmt::Display for Charge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.0.iter().map(i64::to_string).collect();
        write!(f, "({})", items.join(","))
    }
}

impl FromStr for Charge {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim();
        let body = body.strip_prefix('(').and_then(|b| b.strip_suffix(')')).unwrap_or(body);
        let values = body
            .split(',')
            .map(|x| {
                x.trim()
                    .parse::<i64>()
                    .map_err(|_| parse_error(s, format!("bad charge entry {x:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(values)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Realization {
    Uglov,
    Kleshchev,
}

impl Realization {
    pub fn name(self) -> &'static str {
        match self {
            Realization::Uglov => "uglov",
            Realization::Kleshchev => "kleshchev",
        }
    }
}

impl fmt::Display for Realization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Realization {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "uglov" => Ok(Realization::Uglov),
            "kleshchev" => Ok(Realization::Kleshchev),
            _ => Err(parse_error(s, "expected \"uglov\" or \"kleshchev\"")),
        }
    }
}

/// Level, `e`, charge and realization of a Fock space.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FockContext {
    e: usize,
    charge: Charge,
    realization: Realization,
}

impl FockContext {
    pub fn new(e: usize, charge: Charge, realization: Realization) -> Result<Self> {
        if e < 2 {
            return Err(invalid(format!("e must be at least 2, got {e}")));
        }
        Ok(Self { e, charge, realization })
    }

    pub fn uglov(e: usize, charge: Charge) -> Result<Self> {
        Self::new(e, charge, Realization::Uglov)
    }

    pub fn kleshchev(e: usize, charge: Charge) -> Result<Self> {
        Self::new(e, charge, Realization::Kleshchev)
    }

    pub fn level(&self) -> usize {
        self.charge.level()
    }

    pub fn e(&self) -> usize {
        self.e
    }

    pub fn charge(&self) -> &Charge {
        &self.charge
    }

    pub fn realization(&self) -> Realization {
        self.realization
    }

    pub fn with_realization(&self, realization: Realization) -> Self {
        Self {
            realization,
            ..self.clone()
        }
    }

    /// `b − a + s_c`.
    pub fn charged_content(&self, n: Node) -> i64 {
        n.b as i64 - n.a as i64 + self.charge.get(n.c)
    }

    pub fn residue(&self, n: Node) -> usize {
        self.charged_content(n).rem_euclid(self.e as i64) as usize
    }

    /// Order on nodes of equal residue.
    pub fn node_cmp(&self, n1: Node, n2: Node) -> Ordering {
        match self.realization {
            Realization::Uglov => {
                (self.charged_content(n1), Reverse(n1.c)).cmp(&(self.charged_content(n2), Reverse(n2.c)))
            }
            Realization::Kleshchev => (Reverse(n1.c), Reverse(n1.a)).cmp(&(Reverse(n2.c), Reverse(n2.a))),
        }
    }

    /// Strict `n1 ≺ n2`.
    pub fn node_less(&self, n1: Node, n2: Node) -> bool {
        self.node_cmp(n1, n2) == Ordering::Less
    }

    fn check_level(&self, m: &Multipartition) {
        assert_eq!(
            m.level(),
            self.level(),
            "multipartition {} does not match level {}",
            m.canonical(),
            self.level()
        );
    }

    /// Addable and removable `i`-nodes of `m`, sorted by the node order.
    pub fn signature(&self, m: &Multipartition, i: usize) -> Signature {
        self.check_level(m);
        let mut letters = Vec::new();
        for (idx, lambda) in m.components().iter().enumerate() {
            let c = idx + 1;
            for row in 0..=lambda.len() {
                let a = row + 1;
                let len = lambda.part(row);
                if lambda.add_box(row).is_some() {
                    let n = Node::new(a, len + 1, c);
                    if self.residue(n) == i {
                        letters.push(Letter::Addable(n));
                    }
                }
                if lambda.remove_box(row).is_some() {
                    let n = Node::new(a, len, c);
                    if self.residue(n) == i {
                        letters.push(Letter::Removable(n));
                    }
                }
            }
        }
        letters.sort_by(|x, y| self.node_cmp(x.node(), y.node()));
        Signature { residue: i, letters }
    }

    /// `f̃_i(m)`, or `None` when it vanishes.
    pub fn f_tilde(&self, m: &Multipartition, i: usize) -> Option<Multipartition> {
        let n = self.signature(m, i).reduce().good_addable()?;
        let lambda = m.component(n.c).add_box(n.a - 1)?;
        Some(m.with_component(n.c, lambda))
    }

    /// `ẽ_i(m)`, or `None` when it vanishes.
    pub fn e_tilde(&self, m: &Multipartition, i: usize) -> Option<Multipartition> {
        let n = self.signature(m, i).reduce().good_removable()?;
        let lambda = m.component(n.c).remove_box(n.a - 1)?;
        Some(m.with_component(n.c, lambda))
    }

    /// Colors `i_1, …, i_n` with `m = f̃_{i_n} ⋯ f̃_{i_1} ∅`, found by
    /// stripping good removable nodes; `None` if `m` is not in the
    /// component of the empty multipartition.
    pub fn path_from_empty(&self, m: &Multipartition) -> Option<Vec<usize>> {
        self.check_level(m);
        let mut word = Vec::with_capacity(m.rank());
        let mut cur = m.clone();
        while !cur.is_empty() {
            let (i, prev) = (0..self.e).find_map(|i| self.e_tilde(&cur, i).map(|p| (i, p)))?;
            word.push(i);
            cur = prev;
        }
        word.reverse();
        Some(word)
    }

    /// Applies `f̃_{i_1}`, then `f̃_{i_2}`, … to the empty multipartition.
    pub fn apply_word(&self, word: &[usize]) -> Option<Multipartition> {
        word.iter()
            .try_fold(Multipartition::empty(self.level()), |m, &i| self.f_tilde(&m, i))
    }

    /// Whether `m` is a vertex of the component of the empty
    /// multipartition.
    pub fn contains(&self, m: &Multipartition) -> bool {
        self.path_from_empty(m).is_some()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Letter {
    Addable(Node),
    Removable(Node),
}

impl Letter {
    pub fn node(self) -> Node {
        match self {
            Letter::Addable(n) | Letter::Removable(n) => n,
        }
    }

    pub fn is_addable(self) -> bool {
        matches!(self, Letter::Addable(_))
    }
}

/// Ordered word of addable/removable nodes of one residue.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Signature {
    residue: usize,
    letters: Vec<Letter>,
}

impl Signature {
    pub fn new(residue: usize, letters: Vec<Letter>) -> Self {
        Self { residue, letters }
    }

    pub fn residue(&self) -> usize {
        self.residue
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    /// Cancels every "removable, addable" adjacent pair, recursively. The
    /// result has the shape `A^α R^β`.
    pub fn reduce(&self) -> Signature {
        let mut stack: Vec<Letter> = Vec::with_capacity(self.letters.len());
        for &letter in &self.letters {
            if letter.is_addable() && matches!(stack.last(), Some(Letter::Removable(_))) {
                stack.pop();
            } else {
                stack.push(letter);
            }
        }
        Signature {
            residue: self.residue,
            letters: stack,
        }
    }

    /// Last addable letter of a reduced word.
    pub fn good_addable(&self) -> Option<Node> {
        self.letters.iter().rev().find(|l| l.is_addable()).map(|l| l.node())
    }

    /// First removable letter of a reduced word.
    pub fn good_removable(&self) -> Option<Node> {
        self.letters.iter().find(|l| !l.is_addable()).map(|l| l.node())
    }
}

/// Largest `n` such that `s_i − s_j ≥ n − e + 1` for all `i < j`, i.e.
/// `min_{i<j}(s_i − s_j) + e − 1`. Up to this rank both node orders agree.
pub fn orders_coincide_bound(s: &Charge, e: usize) -> Result<i64> {
    let v = s.values();
    if v.len() < 2 {
        return Err(invalid("the bound needs a charge of level at least 2"));
    }
    let m = (0..v.len())
        .flat_map(|i| (i + 1..v.len()).map(move |j| v[i] - v[j]))
        .min()
        .expect("level ≥ 2");
    Ok(m + e as i64 - 1)
}
