//! Permutations, signed permutations, and their descent statistics.
//!
//! A [`Permutation`] is stored by its window `(π_1, …, π_n)`, a bijection of
//! `{1..n}`. A [`SignedPermutation`] window consists of nonzero integers
//! whose absolute values form such a bijection; it extends implicitly to
//! `±{1..n}` by `π(−i) = −π(i)`.
//!
//! The product convention is fixed crate-wide as `(σ∘τ)(i) = σ(τ(i))`: the
//! right factor acts first. For signed permutations this reads
//! `(σ∘τ)(i) = sign(τ(i)) · σ(|τ(i)|)`. The convention was pinned by
//! checking the bipartite expansion identity at degree 3 under both
//! candidate orders; only this one makes it hold.
//!
//! Three descent statistics live here:
//! * [`Permutation::descent_composition`] — increasing-run lengths;
//! * [`SignedPermutation::descent_pseudo`] — run lengths with a leading 0
//!   part when the window starts negative;
//! * [`SignedPermutation::signed_descent_composition`] — signed lengths of
//!   maximal increasing runs of constant sign.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::combinatorics::{Composition, PseudoComposition, SignedComposition};

/// Errors from constructing or combining group elements.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("window is empty")]
    Empty,
    #[error("window entry {entry} at position {position} is out of range for degree {degree}")]
    EntryOutOfRange { position: usize, entry: i64, degree: u32 },
    #[error("window repeats the value {value}")]
    RepeatedValue { value: u32 },
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: u32, right: u32 },
    #[error("cannot parse {input:?} as a window")]
    Parse { input: String },
}

/// Group elements that descent classes are built from: composition,
/// inversion, identity, and full enumeration at each degree.
pub trait GroupElement: Clone + Ord + fmt::Debug + fmt::Display + Sized + Send + Sync {
    fn degree(&self) -> u32;

    fn identity(n: u32) -> Self;

    /// The pinned product: `self` acts second, `other` first.
    fn compose(&self, other: &Self) -> Result<Self, GroupError>;

    fn inverse(&self) -> Self;

    /// All elements of degree `n` in ascending window-lexicographic order.
    fn enumerate(n: u32) -> Vec<Self>;

    /// Group order at degree `n` (`n!` or `2^n·n!`).
    fn group_order(n: u32) -> u64;
}

// ---------------------------------------------------------------------------
// Permutation
// ---------------------------------------------------------------------------

/// An element of the symmetric group, stored as its window.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    window: Vec<u32>,
}

impl Permutation {
    /// Validates that the window is a bijection of `{1..n}`.
    pub fn new(window: Vec<u32>) -> Result<Self, GroupError> {
        if window.is_empty() {
            return Err(GroupError::Empty);
        }
        let n = window.len() as u32;
        let mut seen = vec![false; window.len()];
        for (position, &entry) in window.iter().enumerate() {
            if entry < 1 || entry > n {
                return Err(GroupError::EntryOutOfRange {
                    position,
                    entry: i64::from(entry),
                    degree: n,
                });
            }
            if seen[(entry - 1) as usize] {
                return Err(GroupError::RepeatedValue { value: entry });
            }
            seen[(entry - 1) as usize] = true;
        }
        Ok(Permutation { window })
    }

    pub fn window(&self) -> &[u32] {
        &self.window
    }

    /// Positions `i` with `π_i > π_{i+1}`, as a subset of `{1..n-1}`.
    pub fn descent_set(&self) -> BTreeSet<u32> {
        self.window
            .windows(2)
            .enumerate()
            .filter(|(_, w)| w[0] > w[1])
            .map(|(i, _)| (i + 1) as u32)
            .collect()
    }

    /// Lengths of the maximal increasing runs, left to right. Partial sums
    /// of the result reproduce [`Permutation::descent_set`].
    pub fn descent_composition(&self) -> Composition {
        let mut parts = Vec::new();
        let mut run = 1;
        for w in self.window.windows(2) {
            if w[0] > w[1] {
                parts.push(run);
                run = 1;
            } else {
                run += 1;
            }
        }
        parts.push(run);
        Composition::new(parts).expect("run lengths are positive")
    }
}

impl GroupElement for Permutation {
    fn degree(&self) -> u32 {
        self.window.len() as u32
    }

    fn identity(n: u32) -> Self {
        Permutation { window: (1..=n).collect() }
    }

    fn compose(&self, other: &Self) -> Result<Self, GroupError> {
        if self.degree() != other.degree() {
            return Err(GroupError::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        let window = other.window.iter().map(|&v| self.window[(v - 1) as usize]).collect();
        Ok(Permutation { window })
    }

    fn inverse(&self) -> Self {
        let mut window = vec![0; self.window.len()];
        for (i, &v) in self.window.iter().enumerate() {
            window[(v - 1) as usize] = (i + 1) as u32;
        }
        Permutation { window }
    }

    fn enumerate(n: u32) -> Vec<Self> {
        let mut out = Vec::new();
        let mut used = vec![false; n as usize];
        let mut prefix = Vec::with_capacity(n as usize);
        enumerate_windows(n, &mut used, &mut prefix, &mut out);
        out
    }

    fn group_order(n: u32) -> u64 {
        (1..=u64::from(n)).product()
    }
}

fn enumerate_windows(
    n: u32,
    used: &mut Vec<bool>,
    prefix: &mut Vec<u32>,
    out: &mut Vec<Permutation>,
) {
    if prefix.len() == n as usize {
        out.push(Permutation { window: prefix.clone() });
        return;
    }
    for v in 1..=n {
        if !used[(v - 1) as usize] {
            used[(v - 1) as usize] = true;
            prefix.push(v);
            enumerate_windows(n, used, prefix, out);
            prefix.pop();
            used[(v - 1) as usize] = false;
        }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_window(f, self.window.iter().map(|&v| i64::from(v)))
    }
}

impl FromStr for Permutation {
    type Err = GroupError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let entries = parse_window(s)?;
        let window = entries
            .iter()
            .enumerate()
            .map(|(position, &entry)| {
                u32::try_from(entry).map_err(|_| GroupError::EntryOutOfRange {
                    position,
                    entry,
                    degree: entries.len() as u32,
                })
            })
            .collect::<Result<_, _>>()?;
        Permutation::new(window)
    }
}

// ---------------------------------------------------------------------------
// SignedPermutation
// ---------------------------------------------------------------------------

/// An element of the hyperoctahedral group, stored as its window of signed
/// values; the negative half of the domain is implicit via `π(−i) = −π(i)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignedPermutation {
    window: Vec<i32>,
}

impl SignedPermutation {
    /// Validates that the absolute values form a bijection of `{1..n}`.
    pub fn new(window: Vec<i32>) -> Result<Self, GroupError> {
        if window.is_empty() {
            return Err(GroupError::Empty);
        }
        let n = window.len() as u32;
        let mut seen = vec![false; window.len()];
        for (position, &entry) in window.iter().enumerate() {
            let a = entry.unsigned_abs();
            if a < 1 || a > n {
                return Err(GroupError::EntryOutOfRange {
                    position,
                    entry: i64::from(entry),
                    degree: n,
                });
            }
            if seen[(a - 1) as usize] {
                return Err(GroupError::RepeatedValue { value: a });
            }
            seen[(a - 1) as usize] = true;
        }
        Ok(SignedPermutation { window })
    }

    pub fn window(&self) -> &[i32] {
        &self.window
    }

    /// Image of `v` under the element, for any nonzero `v` in `±{1..n}`.
    pub fn apply(&self, v: i32) -> i32 {
        let image = self.window[(v.unsigned_abs() - 1) as usize];
        if v > 0 {
            image
        } else {
            -image
        }
    }

    /// Type B descent set: window descents in `{1..n-1}` plus position 0
    /// exactly when `π_1 < 0`.
    pub fn descent_set_b(&self) -> BTreeSet<u32> {
        let mut out: BTreeSet<u32> = self
            .window
            .windows(2)
            .enumerate()
            .filter(|(_, w)| w[0] > w[1])
            .map(|(i, _)| (i + 1) as u32)
            .collect();
        if self.window[0] < 0 {
            out.insert(0);
        }
        out
    }

    /// Increasing-run lengths of the window (over the integer order), with
    /// a leading 0 part exactly when the window starts negative. Partial
    /// sums reproduce [`SignedPermutation::descent_set_b`].
    pub fn descent_pseudo(&self) -> PseudoComposition {
        let mut parts = Vec::new();
        if self.window[0] < 0 {
            parts.push(0);
        }
        let mut run = 1;
        for w in self.window.windows(2) {
            if w[0] > w[1] {
                parts.push(run);
                run = 1;
            } else {
                run += 1;
            }
        }
        parts.push(run);
        PseudoComposition::new(parts).expect("run lengths are positive after the leading 0")
    }

    /// Signed lengths of the maximal increasing runs of constant sign, left
    /// to right; each part carries its run's common sign.
    pub fn signed_descent_composition(&self) -> SignedComposition {
        let mut parts = Vec::new();
        let mut run = 1i32;
        for w in self.window.windows(2) {
            let same_sign = (w[0] > 0) == (w[1] > 0);
            if w[0] < w[1] && same_sign {
                run += 1;
            } else {
                parts.push(if w[0] > 0 { run } else { -run });
                run = 1;
            }
        }
        let last = *self.window.last().expect("window is nonempty");
        parts.push(if last > 0 { run } else { -run });
        SignedComposition::new(parts).expect("run lengths are nonzero")
    }
}

impl GroupElement for SignedPermutation {
    fn degree(&self) -> u32 {
        self.window.len() as u32
    }

    fn identity(n: u32) -> Self {
        SignedPermutation { window: (1..=n as i32).collect() }
    }

    fn compose(&self, other: &Self) -> Result<Self, GroupError> {
        if self.degree() != other.degree() {
            return Err(GroupError::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        let window = other.window.iter().map(|&v| self.apply(v)).collect();
        Ok(SignedPermutation { window })
    }

    fn inverse(&self) -> Self {
        let mut window = vec![0; self.window.len()];
        for (i, &v) in self.window.iter().enumerate() {
            let pos = (i + 1) as i32;
            window[(v.unsigned_abs() - 1) as usize] = if v > 0 { pos } else { -pos };
        }
        SignedPermutation { window }
    }

    fn enumerate(n: u32) -> Vec<Self> {
        let mut out: Vec<SignedPermutation> = Permutation::enumerate(n)
            .into_iter()
            .flat_map(|p| {
                let base: Vec<i32> = p.window().iter().map(|&v| v as i32).collect();
                (0u32..(1 << n)).map(move |mask| {
                    let window = base
                        .iter()
                        .enumerate()
                        .map(|(i, &v)| if mask & (1 << i) != 0 { -v } else { v })
                        .collect();
                    SignedPermutation { window }
                })
            })
            .collect();
        out.sort();
        out
    }

    fn group_order(n: u32) -> u64 {
        (1..=u64::from(n)).product::<u64>() << n
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_window(f, self.window.iter().map(|&v| i64::from(v)))
    }
}

impl FromStr for SignedPermutation {
    type Err = GroupError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let entries = parse_window(s)?;
        let window = entries
            .iter()
            .enumerate()
            .map(|(position, &entry)| {
                i32::try_from(entry).map_err(|_| GroupError::EntryOutOfRange {
                    position,
                    entry,
                    degree: entries.len() as u32,
                })
            })
            .collect::<Result<_, _>>()?;
        SignedPermutation::new(window)
    }
}

// ---------------------------------------------------------------------------
// shared parsing / printing helpers
// ---------------------------------------------------------------------------

fn write_window(f: &mut fmt::Formatter<'_>, entries: impl Iterator<Item = i64>) -> fmt::Result {
    for (i, v) in entries.enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{v}")?;
    }
    Ok(())
}

fn parse_window(s: &str) -> Result<Vec<i64>, GroupError> {
    let err = || GroupError::Parse { input: s.to_owned() };
    let trimmed = s.trim();
    if trimmed.is_empty() {
        return Err(err());
    }
    trimmed
        .split(',')
        .map(|tok| tok.trim().parse::<i64>().map_err(|_| err()))
        .collect()
}
