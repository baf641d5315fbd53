//! Compositions, pseudo-compositions, and signed compositions.
//!
//! These are the index families for descent classes and quasisymmetric
//! bases. A composition of `n` is a nonempty tuple of positive integers
//! summing to `n`; a pseudo-composition additionally allows a leading 0
//! (recording a descent in position 0); a signed composition has nonzero
//! parts whose absolute values sum to `n`, the sign of each part recording
//! the common sign of the run it describes.
//!
//! Every family carries a descent-set view, a refinement order (finer means
//! more parts; `beta.refines(&alpha)` asks whether `beta` splits `alpha`),
//! and a canonical enumeration in descending lexicographic order on part
//! tuples, so the degree-1 families list as `[(1)]`, `[(1), (0,1)]`, and
//! `[(1), (-1)]`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// Errors from constructing, converting, or comparing index objects.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CombinatoricsError {
    #[error("parts list must be nonempty")]
    Empty,
    #[error("invalid part {part} at position {position}")]
    InvalidPart { position: usize, part: i64 },
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: u32, right: u32 },
    #[error("descent position {position} out of range for degree {degree}")]
    PositionOutOfRange { position: u32, degree: u32 },
    #[error("descent data has the wrong flavor for this conversion")]
    FlavorMismatch,
    #[error("degree must be at least 1")]
    ZeroDegree,
    #[error("cannot parse {input:?} as a part list")]
    Parse { input: String },
}

/// The three quasisymmetric flavors. `A` is indexed by [`Composition`],
/// `B` by [`PseudoComposition`], and `S` by [`SignedComposition`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Flavor {
    A,
    B,
    S,
}

impl Flavor {
    /// One-letter tag used in exports and CLI flags.
    pub fn letter(self) -> &'static str {
        match self {
            Flavor::A => "A",
            Flavor::B => "B",
            Flavor::S => "S",
        }
    }
}

impl fmt::Display for Flavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.letter())
    }
}

impl FromStr for Flavor {
    type Err = CombinatoricsError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "A" | "a" => Ok(Flavor::A),
            "B" | "b" => Ok(Flavor::B),
            "S" | "s" => Ok(Flavor::S),
            _ => Err(CombinatoricsError::Parse { input: s.to_owned() }),
        }
    }
}

/// Shared surface of the three index families: degree, part count, parsing,
/// printing, and canonical enumeration. Implementations are value types
/// ordered by their part tuples.
pub trait IndexFamily:
    Clone + Ord + fmt::Debug + fmt::Display + FromStr<Err = CombinatoricsError> + Send + Sync
{
    /// Which flavor this family indexes.
    const FLAVOR: Flavor;

    /// The degree `n` the parts sum to (absolute values for signed parts).
    fn degree(&self) -> u32;

    /// Number of parts, counting a leading zero part.
    fn part_count(&self) -> usize;

    /// All indices of the given degree, in descending lexicographic order
    /// on part tuples. Rejects degree 0.
    fn enumerate(n: u32) -> Result<Vec<Self>, CombinatoricsError>;
}

/// Sign of one position of a signed composition's sign word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

/// Which descent-position range a [`DescentData`] lives in.
///
/// Type A descents sit in `{1..n-1}`; type B adds position 0 (a window
/// starting with a negative value descends "into" the run).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DescentFlavor {
    A,
    B,
}

/// A degree together with a set of descent positions in the flavor's range.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DescentData {
    degree: u32,
    flavor: DescentFlavor,
    positions: BTreeSet<u32>,
}

impl DescentData {
    /// Validates that all positions lie in the flavor's range:
    /// `1..=n-1` for type A, `0..=n-1` for type B.
    pub fn new(
        degree: u32,
        flavor: DescentFlavor,
        positions: BTreeSet<u32>,
    ) -> Result<Self, CombinatoricsError> {
        if degree == 0 {
            return Err(CombinatoricsError::ZeroDegree);
        }
        let lo = match flavor {
            DescentFlavor::A => 1,
            DescentFlavor::B => 0,
        };
        for &p in &positions {
            if p < lo || p >= degree {
                return Err(CombinatoricsError::PositionOutOfRange { position: p, degree });
            }
        }
        Ok(DescentData { degree, flavor, positions })
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn flavor(&self) -> DescentFlavor {
        self.flavor
    }

    pub fn positions(&self) -> &BTreeSet<u32> {
        &self.positions
    }
}

// ---------------------------------------------------------------------------
// Composition (flavor A)
// ---------------------------------------------------------------------------

/// A composition of `n`: a nonempty tuple of positive parts summing to `n`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Composition {
    parts: Vec<u32>,
}

impl Composition {
    /// Validates: nonempty, every part at least 1.
    pub fn new(parts: Vec<u32>) -> Result<Self, CombinatoricsError> {
        if parts.is_empty() {
            return Err(CombinatoricsError::Empty);
        }
        for (i, &p) in parts.iter().enumerate() {
            if p == 0 {
                return Err(CombinatoricsError::InvalidPart { position: i, part: 0 });
            }
        }
        Ok(Composition { parts })
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Partial sums of the parts, excluding the final sum `n`.
    pub fn to_descents(&self) -> DescentData {
        let mut positions = BTreeSet::new();
        let mut acc = 0;
        for &p in &self.parts[..self.parts.len() - 1] {
            acc += p;
            positions.insert(acc);
        }
        DescentData { degree: self.degree(), flavor: DescentFlavor::A, positions }
    }

    /// Inverse of [`Composition::to_descents`]: consecutive gaps between
    /// descent positions (requires type A descent data).
    pub fn from_descents(d: &DescentData) -> Result<Self, CombinatoricsError> {
        if d.flavor != DescentFlavor::A {
            return Err(CombinatoricsError::FlavorMismatch);
        }
        let mut parts = Vec::with_capacity(d.positions.len() + 1);
        let mut prev = 0;
        for &p in &d.positions {
            parts.push(p - prev);
            prev = p;
        }
        parts.push(d.degree - prev);
        Composition::new(parts)
    }

    /// Whether `self` refines `coarser`: same degree and every descent of
    /// `coarser` is a descent of `self` (so `self` splits `coarser`'s parts).
    pub fn refines(&self, coarser: &Composition) -> Result<bool, CombinatoricsError> {
        if self.degree() != coarser.degree() {
            return Err(CombinatoricsError::DegreeMismatch {
                left: self.degree(),
                right: coarser.degree(),
            });
        }
        Ok(coarser.to_descents().positions.is_subset(&self.to_descents().positions))
    }

    /// All compositions refining `self` (including `self`), i.e. all descent
    /// supersets, in descending lexicographic order.
    pub fn refinements(&self) -> Vec<Composition> {
        let n = self.degree();
        let base = self.to_descents().positions;
        let free: Vec<u32> = (1..n).filter(|p| !base.contains(p)).collect();
        let mut out = Vec::with_capacity(1 << free.len());
        for mask in 0u32..(1 << free.len()) {
            let mut positions = base.clone();
            for (bit, &p) in free.iter().enumerate() {
                if mask & (1 << bit) != 0 {
                    positions.insert(p);
                }
            }
            let d = DescentData { degree: n, flavor: DescentFlavor::A, positions };
            out.push(Composition::from_descents(&d).expect("valid descent data"));
        }
        out.sort_by(|a, b| b.cmp(a));
        out
    }
}

impl IndexFamily for Composition {
    const FLAVOR: Flavor = Flavor::A;

    fn degree(&self) -> u32 {
        self.parts.iter().sum()
    }

    fn part_count(&self) -> usize {
        self.parts.len()
    }

    fn enumerate(n: u32) -> Result<Vec<Self>, CombinatoricsError> {
        if n == 0 {
            return Err(CombinatoricsError::ZeroDegree);
        }
        // First parts descending, then the tail recursively: this yields
        // descending lexicographic order directly.
        fn rec(n: u32, prefix: &mut Vec<u32>, out: &mut Vec<Composition>) {
            if n == 0 {
                out.push(Composition { parts: prefix.clone() });
                return;
            }
            for first in (1..=n).rev() {
                prefix.push(first);
                rec(n - first, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, &mut Vec::new(), &mut out);
        Ok(out)
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, self.parts.iter().map(|&p| i64::from(p)))
    }
}

impl FromStr for Composition {
    type Err = CombinatoricsError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Composition::new(parse_parts_as(s)?)
    }
}

// ---------------------------------------------------------------------------
// PseudoComposition (flavor B)
// ---------------------------------------------------------------------------

/// A pseudo-composition of `n`: like a composition, but the first part may
/// be 0. The leading zero encodes a descent in position 0.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PseudoComposition {
    parts: Vec<u32>,
}

impl PseudoComposition {
    /// Validates: nonempty, first part ≥ 0, later parts ≥ 1, degree ≥ 1.
    pub fn new(parts: Vec<u32>) -> Result<Self, CombinatoricsError> {
        if parts.is_empty() {
            return Err(CombinatoricsError::Empty);
        }
        for (i, &p) in parts.iter().enumerate().skip(1) {
            if p == 0 {
                return Err(CombinatoricsError::InvalidPart { position: i, part: 0 });
            }
        }
        if parts.iter().sum::<u32>() == 0 {
            return Err(CombinatoricsError::ZeroDegree);
        }
        Ok(PseudoComposition { parts })
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Partial sums excluding `n`; a leading zero part contributes
    /// position 0.
    pub fn to_descents(&self) -> DescentData {
        let mut positions = BTreeSet::new();
        let mut acc = 0;
        for &p in &self.parts[..self.parts.len() - 1] {
            acc += p;
            positions.insert(acc);
        }
        // A leading 0 part produces the partial sum 0 explicitly; nonzero
        // first parts never do, so `acc` values are correct as inserted.
        if self.parts[0] == 0 {
            positions.insert(0);
        }
        DescentData { degree: self.degree(), flavor: DescentFlavor::B, positions }
    }

    /// Inverse of [`PseudoComposition::to_descents`] (requires type B
    /// descent data): gaps between positions, with a leading 0 part exactly
    /// when position 0 is present.
    pub fn from_descents(d: &DescentData) -> Result<Self, CombinatoricsError> {
        if d.flavor != DescentFlavor::B {
            return Err(CombinatoricsError::FlavorMismatch);
        }
        let mut parts = Vec::with_capacity(d.positions.len() + 1);
        let mut prev = 0;
        for &p in &d.positions {
            parts.push(p - prev);
            prev = p;
        }
        parts.push(d.degree - prev);
        PseudoComposition::new(parts)
    }

    /// Same-degree descent-superset test, as for compositions but over
    /// positions `{0..n-1}`; splitting a leading part `p` into `(0, p)`
    /// counts as a refinement.
    pub fn refines(&self, coarser: &PseudoComposition) -> Result<bool, CombinatoricsError> {
        if self.degree() != coarser.degree() {
            return Err(CombinatoricsError::DegreeMismatch {
                left: self.degree(),
                right: coarser.degree(),
            });
        }
        Ok(coarser.to_descents().positions.is_subset(&self.to_descents().positions))
    }

    /// All pseudo-compositions refining `self`, in descending lexicographic
    /// order.
    pub fn refinements(&self) -> Vec<PseudoComposition> {
        let n = self.degree();
        let base = self.to_descents().positions;
        let free: Vec<u32> = (0..n).filter(|p| !base.contains(p)).collect();
        let mut out = Vec::with_capacity(1 << free.len());
        for mask in 0u32..(1 << free.len()) {
            let mut positions = base.clone();
            for (bit, &p) in free.iter().enumerate() {
                if mask & (1 << bit) != 0 {
                    positions.insert(p);
                }
            }
            let d = DescentData { degree: n, flavor: DescentFlavor::B, positions };
            out.push(PseudoComposition::from_descents(&d).expect("valid descent data"));
        }
        out.sort_by(|a, b| b.cmp(a));
        out
    }
}

impl IndexFamily for PseudoComposition {
    const FLAVOR: Flavor = Flavor::B;

    fn degree(&self) -> u32 {
        self.parts.iter().sum()
    }

    fn part_count(&self) -> usize {
        self.parts.len()
    }

    fn enumerate(n: u32) -> Result<Vec<Self>, CombinatoricsError> {
        // Descending lexicographic order puts every positive-first tuple
        // before every 0-first tuple.
        let comps = Composition::enumerate(n)?;
        let mut out: Vec<PseudoComposition> = comps
            .iter()
            .map(|c| PseudoComposition { parts: c.parts().to_vec() })
            .collect();
        out.extend(comps.iter().map(|c| {
            let mut parts = Vec::with_capacity(c.part_count() + 1);
            parts.push(0);
            parts.extend_from_slice(c.parts());
            PseudoComposition { parts }
        }));
        Ok(out)
    }
}

impl fmt::Display for PseudoComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, self.parts.iter().map(|&p| i64::from(p)))
    }
}

impl FromStr for PseudoComposition {
    type Err = CombinatoricsError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        PseudoComposition::new(parse_parts_as(s)?)
    }
}

// ---------------------------------------------------------------------------
// SignedComposition (flavor S)
// ---------------------------------------------------------------------------

/// A signed composition of `n`: nonzero parts whose absolute values sum to
/// `n`. Part signs record run signs; part sizes record run lengths.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignedComposition {
    parts: Vec<i32>,
}

impl SignedComposition {
    /// Validates: nonempty, every part nonzero.
    pub fn new(parts: Vec<i32>) -> Result<Self, CombinatoricsError> {
        if parts.is_empty() {
            return Err(CombinatoricsError::Empty);
        }
        for (i, &p) in parts.iter().enumerate() {
            if p == 0 {
                return Err(CombinatoricsError::InvalidPart { position: i, part: 0 });
            }
        }
        Ok(SignedComposition { parts })
    }

    pub fn parts(&self) -> &[i32] {
        &self.parts
    }

    /// The sign word: position `i` of the word (1-based, length `n`) gets
    /// the sign of the part whose block covers it.
    pub fn sign_word(&self) -> Vec<Sign> {
        let mut word = Vec::with_capacity(self.degree() as usize);
        for &p in &self.parts {
            let s = if p > 0 { Sign::Plus } else { Sign::Minus };
            for _ in 0..p.unsigned_abs() {
                word.push(s);
            }
        }
        word
    }

    /// Descent positions shared by every group element with this signed
    /// descent index: 0 when the first sign is negative, plus every block
    /// boundary except those where a negative block is followed by a
    /// positive one (the only boundary kind that can be an ascent).
    ///
    /// Equivalently, this is the intersection of the type B descent sets
    /// over the whole descent class.
    pub fn guaranteed_descents(&self) -> DescentData {
        let mut positions = BTreeSet::new();
        if self.parts[0] < 0 {
            positions.insert(0);
        }
        let mut acc = 0;
        for w in self.parts.windows(2) {
            acc += w[0].unsigned_abs();
            let neg_to_pos = w[0] < 0 && w[1] > 0;
            if !neg_to_pos {
                positions.insert(acc);
            }
        }
        DescentData { degree: self.degree(), flavor: DescentFlavor::B, positions }
    }

    /// Whether `self` refines `coarser`: both induce the same sign word and
    /// every part of `coarser` is the sum of a consecutive block of
    /// equal-sign parts of `self`.
    pub fn refines(&self, coarser: &SignedComposition) -> Result<bool, CombinatoricsError> {
        if self.degree() != coarser.degree() {
            return Err(CombinatoricsError::DegreeMismatch {
                left: self.degree(),
                right: coarser.degree(),
            });
        }
        let mut fine = self.parts.iter();
        for &a in &coarser.parts {
            let target = a.unsigned_abs();
            let mut acc = 0;
            while acc < target {
                match fine.next() {
                    Some(&b) if b.signum() == a.signum() => acc += b.unsigned_abs(),
                    _ => return Ok(false),
                }
            }
            if acc != target {
                return Ok(false);
            }
        }
        Ok(fine.next().is_none())
    }

    /// All signed compositions refining `self`: each part splits into an
    /// ordered tuple of same-sign parts. Descending lexicographic order.
    pub fn refinements(&self) -> Vec<SignedComposition> {
        let mut out = vec![Vec::new()];
        for &p in &self.parts {
            let splits = Composition::enumerate(p.unsigned_abs()).expect("part is nonzero");
            let mut next = Vec::with_capacity(out.len() * splits.len());
            for prefix in &out {
                for split in &splits {
                    let mut parts = prefix.clone();
                    parts.extend(split.parts().iter().map(|&q| p.signum() * q as i32));
                    next.push(parts);
                }
            }
            out = next;
        }
        let mut out: Vec<SignedComposition> =
            out.into_iter().map(|parts| SignedComposition { parts }).collect();
        out.sort_by(|a, b| b.cmp(a));
        out
    }
}

impl IndexFamily for SignedComposition {
    const FLAVOR: Flavor = Flavor::S;

    fn degree(&self) -> u32 {
        self.parts.iter().map(|p| p.unsigned_abs()).sum()
    }

    fn part_count(&self) -> usize {
        self.parts.len()
    }

    fn enumerate(n: u32) -> Result<Vec<Self>, CombinatoricsError> {
        if n == 0 {
            return Err(CombinatoricsError::ZeroDegree);
        }
        // First parts in descending integer order (n, …, 1, −1, …, −n),
        // then tails recursively: descending lexicographic overall.
        fn rec(n: u32, prefix: &mut Vec<i32>, out: &mut Vec<SignedComposition>) {
            if n == 0 {
                out.push(SignedComposition { parts: prefix.clone() });
                return;
            }
            for size in (1..=n).rev() {
                prefix.push(size as i32);
                rec(n - size, prefix, out);
                prefix.pop();
            }
            for size in 1..=n {
                prefix.push(-(size as i32));
                rec(n - size, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, &mut Vec::new(), &mut out);
        Ok(out)
    }
}

impl fmt::Display for SignedComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, self.parts.iter().map(|&p| i64::from(p)))
    }
}

impl FromStr for SignedComposition {
    type Err = CombinatoricsError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        SignedComposition::new(parse_parts_as(s)?)
    }
}

// ---------------------------------------------------------------------------
// shared parsing / printing helpers
// ---------------------------------------------------------------------------

fn write_parts(f: &mut fmt::Formatter<'_>, parts: impl Iterator<Item = i64>) -> fmt::Result {
    for (i, p) in parts.enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{p}")?;
    }
    Ok(())
}

fn parse_parts(s: &str) -> Result<Vec<i64>, CombinatoricsError> {
    let err = || CombinatoricsError::Parse { input: s.to_owned() };
    let trimmed = s.trim();
    if trimmed.is_empty() {
        return Err(err());
    }
    trimmed
        .split(',')
        .map(|tok| tok.trim().parse::<i64>().map_err(|_| err()))
        .collect()
}

fn parse_parts_as<T: TryFrom<i64>>(s: &str) -> Result<Vec<T>, CombinatoricsError> {
    parse_parts(s)?
        .into_iter()
        .enumerate()
        .map(|(position, part)| {
            T::try_from(part).map_err(|_| CombinatoricsError::InvalidPart { position, part })
        })
        .collect()
}
