//! Quasisymmetric functions in three flavors, as explicit truncated series.
//!
//! Each index family ([`Composition`], [`PseudoComposition`],
//! [`SignedComposition`]) carries a monomial basis element `M_α` realized by
//! [`QSymIndex::expand_monomial`], and a fundamental basis element `F_α`
//! equal to the sum of `M_β` over all refinements `β` of `α`
//! ([`QSymIndex::expand_fundamental`]). The three expansion rules:
//!
//! * flavor A — `M_α = Σ x_{i_1}^{α_1} ⋯ x_{i_k}^{α_k}` over
//!   `1 ≤ i_1 < ⋯ < i_k ≤ N`;
//! * flavor B — the first part always sits on `x_0` (an exponent of 0
//!   vanishes), the remaining parts on `0 < i_2 < ⋯ < i_k ≤ N`;
//! * flavor S — parts map to colored letters in the order
//!   `v_0 ≺ u_1 ≺ v_1 ≺ u_2 ≺ ⋯`: a negative part takes some `u_i`
//!   (exponent `|α_j|`), a positive part some `v_i`, and the chosen letters
//!   must be strictly increasing in that order.
//!
//! [`QSymVector`] is a finite integer combination of indices in one basis of
//! one degree, with exact change of basis in both directions.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::combinatorics::{
    CombinatoricsError, Composition, IndexFamily, PseudoComposition, SignedComposition,
};
use crate::series::{Alphabet, Monomial, Series, SeriesError, Variable};

/// Errors from expansions and basis changes.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum QSymError {
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error(transparent)]
    Combinatorics(#[from] CombinatoricsError),
    #[error("vector has degree {expected} but index {index} has degree {found}")]
    DegreeMismatch { expected: u32, found: u32, index: String },
    #[error("operands disagree in degree or basis")]
    ShapeMismatch,
    #[error("coefficient arithmetic overflowed")]
    Overflow,
}

/// The two bases a [`QSymVector`] can be written in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BasisKind {
    Monomial,
    Fundamental,
}

impl BasisKind {
    /// Single-letter prefix used when printing terms.
    pub fn letter(self) -> &'static str {
        match self {
            BasisKind::Monomial => "M",
            BasisKind::Fundamental => "F",
        }
    }

    /// Long name used in JSON output.
    pub fn name(self) -> &'static str {
        match self {
            BasisKind::Monomial => "monomial",
            BasisKind::Fundamental => "fundamental",
        }
    }
}

impl fmt::Display for BasisKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Index families that generate quasisymmetric series.
pub trait QSymIndex: IndexFamily {
    /// All indices refining `self`, `self` included.
    fn refinements(&self) -> Vec<Self>;

    /// Whether `self` refines `coarser` (degrees must match).
    fn refines(&self, coarser: &Self) -> Result<bool, CombinatoricsError>;

    /// The bounds every expansion of this flavor carries at a given
    /// truncation (the empty series over the right alphabets).
    fn expansion_bounds(truncation: u32) -> Vec<(Alphabet, u32)>;

    /// The monomial basis element `M_α` as an explicit series with all
    /// variable indices at most `truncation`.
    fn expand_monomial(&self, truncation: u32) -> Result<Series, QSymError>;

    /// The fundamental basis element `F_α`: the sum of `M_β` over all
    /// refinements `β` of `α`.
    fn expand_fundamental(&self, truncation: u32) -> Result<Series, QSymError> {
        let mut acc = Series::zero(Self::expansion_bounds(truncation));
        for beta in self.refinements() {
            acc = acc.plus(&beta.expand_monomial(truncation)?)?;
        }
        Ok(acc)
    }
}

impl QSymIndex for Composition {
    fn refinements(&self) -> Vec<Self> {
        Composition::refinements(self)
    }

    fn refines(&self, coarser: &Self) -> Result<bool, CombinatoricsError> {
        Composition::refines(self, coarser)
    }

    fn expansion_bounds(truncation: u32) -> Vec<(Alphabet, u32)> {
        vec![(Alphabet::X, truncation)]
    }

    fn expand_monomial(&self, truncation: u32) -> Result<Series, QSymError> {
        let mut series = Series::zero(Self::expansion_bounds(truncation));
        let exponents: Vec<u32> = self.parts().to_vec();
        add_increasing_terms(&mut series, &exponents, 1, truncation, Monomial::one())?;
        Ok(series)
    }
}

impl QSymIndex for PseudoComposition {
    fn refinements(&self) -> Vec<Self> {
        PseudoComposition::refinements(self)
    }

    fn refines(&self, coarser: &Self) -> Result<bool, CombinatoricsError> {
        PseudoComposition::refines(self, coarser)
    }

    fn expansion_bounds(truncation: u32) -> Vec<(Alphabet, u32)> {
        vec![(Alphabet::X, truncation)]
    }

    fn expand_monomial(&self, truncation: u32) -> Result<Series, QSymError> {
        let mut series = Series::zero(Self::expansion_bounds(truncation));
        let mut base = Monomial::one();
        base.multiply_by(Variable::new(Alphabet::X, 0)?, self.parts()[0])?;
        let exponents: Vec<u32> = self.parts()[1..].to_vec();
        add_increasing_terms(&mut series, &exponents, 1, truncation, base)?;
        Ok(series)
    }
}

impl QSymIndex for SignedComposition {
    fn refinements(&self) -> Vec<Self> {
        SignedComposition::refinements(self)
    }

    fn refines(&self, coarser: &Self) -> Result<bool, CombinatoricsError> {
        SignedComposition::refines(self, coarser)
    }

    fn expansion_bounds(truncation: u32) -> Vec<(Alphabet, u32)> {
        vec![(Alphabet::U, truncation), (Alphabet::V, truncation)]
    }

    fn expand_monomial(&self, truncation: u32) -> Result<Series, QSymError> {
        let mut series = Series::zero(Self::expansion_bounds(truncation));
        add_colored_terms(&mut series, self.parts(), 0, truncation, Monomial::one())?;
        Ok(series)
    }
}

/// Adds one term per strictly increasing index tuple
/// `min ≤ i_1 < … < i_k ≤ max`, the `j`-th index carrying `exponents[j]`,
/// all on top of the fixed prefix monomial.
fn add_increasing_terms(
    series: &mut Series,
    exponents: &[u32],
    min: u32,
    max: u32,
    prefix: Monomial,
) -> Result<(), QSymError> {
    match exponents.split_first() {
        None => {
            series.add_term(prefix, 1)?;
            Ok(())
        }
        Some((&exp, rest)) => {
            for i in min..=max.saturating_sub(rest.len() as u32) {
                let mut m = prefix.clone();
                m.multiply_by(Variable::new(Alphabet::X, i)?, exp)?;
                add_increasing_terms(series, rest, i + 1, max, m)?;
            }
            Ok(())
        }
    }
}

/// Adds one term per admissible colored-letter assignment for a signed
/// part list. Letters are keyed into the single colored order by
/// `v_i ↦ 2i`, `u_i ↦ 2i−1`; a choice is admissible when the keys are
/// strictly increasing, a negative part always takes a `u` and a positive
/// part a `v`. `next_key` is the smallest key still available.
fn add_colored_terms(
    series: &mut Series,
    parts: &[i32],
    next_key: u32,
    truncation: u32,
    prefix: Monomial,
) -> Result<(), QSymError> {
    match parts.split_first() {
        None => {
            series.add_term(prefix, 1)?;
            Ok(())
        }
        Some((&part, rest)) => {
            let negative = part < 0;
            // Smallest admissible key with the right parity (odd ⇔ `u`).
            let mut key = next_key.max(u32::from(negative));
            if (key % 2 == 1) != negative {
                key += 1;
            }
            let max_key = if negative {
                // u-indices run 1..=truncation: keys 1, 3, …, 2·truncation−1.
                match truncation {
                    0 => return Ok(()),
                    t => 2 * t - 1,
                }
            } else {
                // v-indices run 0..=truncation: keys 0, 2, …, 2·truncation.
                2 * truncation
            };
            while key <= max_key {
                let variable = if negative {
                    Variable::new(Alphabet::U, (key + 1) / 2)?
                } else {
                    Variable::new(Alphabet::V, key / 2)?
                };
                let mut m = prefix.clone();
                m.multiply_by(variable, part.unsigned_abs())?;
                add_colored_terms(series, rest, key + 1, truncation, m)?;
                key += 2;
            }
            Ok(())
        }
    }
}

/// The pseudo-composition a signed index collapses to when the two colored
/// letters are identified: the one cut at the signed index's guaranteed
/// descent positions.
pub fn collapse_to_type_b(alpha: &SignedComposition) -> PseudoComposition {
    PseudoComposition::from_descents(&alpha.guaranteed_descents())
        .expect("guaranteed descents are valid flavor B descent data")
}

/// The monomial basis element `M_α` rewritten in the fundamental basis by
/// inclusion–exclusion over refinements: the coefficient of `F_β` is
/// `(−1)^{part_count(β) − part_count(α)}` for each refinement `β` of `α`.
pub fn monomial_in_fundamental<I: QSymIndex>(alpha: &I) -> Result<QSymVector<I>, QSymError> {
    let mut out = QSymVector::zero(alpha.degree(), BasisKind::Fundamental)?;
    let base = alpha.part_count();
    for beta in alpha.refinements() {
        let sign = if (beta.part_count() - base) % 2 == 0 { 1 } else { -1 };
        out.add_term(beta, sign)?;
    }
    Ok(out)
}

/// A finite integer combination of same-degree indices in one basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QSymVector<I: QSymIndex> {
    degree: u32,
    basis: BasisKind,
    coeffs: BTreeMap<I, i64>,
}

impl<I: QSymIndex> QSymVector<I> {
    /// The zero vector of the given degree and basis.
    pub fn zero(degree: u32, basis: BasisKind) -> Result<Self, QSymError> {
        if degree == 0 {
            return Err(CombinatoricsError::ZeroDegree.into());
        }
        Ok(QSymVector { degree, basis, coeffs: BTreeMap::new() })
    }

    /// The single basis element `M_index` or `F_index` with coefficient 1.
    pub fn unit(index: I, basis: BasisKind) -> Result<Self, QSymError> {
        let mut v = QSymVector::zero(index.degree(), basis)?;
        v.add_term(index, 1)?;
        Ok(v)
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn basis(&self) -> BasisKind {
        self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, index: &I) -> i64 {
        self.coeffs.get(index).copied().unwrap_or(0)
    }

    /// Terms in descending index order (the enumeration order).
    pub fn terms(&self) -> impl Iterator<Item = (&I, i64)> {
        self.coeffs.iter().rev().map(|(i, &c)| (i, c))
    }

    pub fn term_count(&self) -> usize {
        self.coeffs.len()
    }

    /// Adds `coeff · index`, checking the degree and pruning cancellations.
    pub fn add_term(&mut self, index: I, coeff: i64) -> Result<(), QSymError> {
        if index.degree() != self.degree {
            return Err(QSymError::DegreeMismatch {
                expected: self.degree,
                found: index.degree(),
                index: index.to_string(),
            });
        }
        if coeff == 0 {
            return Ok(());
        }
        let slot = self.coeffs.entry(index.clone()).or_insert(0);
        *slot = slot.checked_add(coeff).ok_or(QSymError::Overflow)?;
        if *slot == 0 {
            self.coeffs.remove(&index);
        }
        Ok(())
    }

    /// Sum of two vectors of identical degree and basis.
    pub fn plus(&self, other: &Self) -> Result<Self, QSymError> {
        if self.degree != other.degree || self.basis != other.basis {
            return Err(QSymError::ShapeMismatch);
        }
        let mut out = self.clone();
        for (index, &coeff) in &other.coeffs {
            out.add_term(index.clone(), coeff)?;
        }
        Ok(out)
    }

    /// The vector scaled by an integer.
    pub fn scaled(&self, k: i64) -> Result<Self, QSymError> {
        let mut out = QSymVector::zero(self.degree, self.basis)?;
        for (index, &coeff) in &self.coeffs {
            out.add_term(index.clone(), coeff.checked_mul(k).ok_or(QSymError::Overflow)?)?;
        }
        Ok(out)
    }

    /// The vector as an explicit series at the given truncation.
    pub fn expand(&self, truncation: u32) -> Result<Series, QSymError> {
        let mut acc = Series::zero(I::expansion_bounds(truncation));
        for (index, &coeff) in &self.coeffs {
            let basis_series = match self.basis {
                BasisKind::Monomial => index.expand_monomial(truncation)?,
                BasisKind::Fundamental => index.expand_fundamental(truncation)?,
            };
            acc = acc.plus(&basis_series.scaled(coeff)?)?;
        }
        Ok(acc)
    }

    /// Rewrites the vector in the target basis, exactly.
    ///
    /// Fundamental → monomial expands each `F_α` over the refinements of
    /// `α`. Monomial → fundamental solves the unitriangular system by
    /// processing indices coarsest-first: the fundamental coefficient of
    /// `α` is the monomial coefficient of `α` minus the contributions of
    /// every strictly coarser index already determined.
    pub fn change_basis(&self, target: BasisKind) -> Result<Self, QSymError> {
        if target == self.basis {
            return Ok(self.clone());
        }
        let mut out = QSymVector::zero(self.degree, target)?;
        match (self.basis, target) {
            (BasisKind::Fundamental, BasisKind::Monomial) => {
                for (alpha, &coeff) in &self.coeffs {
                    for beta in QSymIndex::refinements(alpha) {
                        out.add_term(beta, coeff)?;
                    }
                }
            }
            (BasisKind::Monomial, BasisKind::Fundamental) => {
                let mut order = I::enumerate(self.degree)?;
                order.sort_by_key(|a| a.part_count());
                let mut solved: Vec<(I, i64)> = Vec::new();
                for alpha in order {
                    let mut value = self.coeff(&alpha);
                    for (coarser, d) in &solved {
                        if QSymIndex::refines(&alpha, coarser)? {
                            value = value.checked_sub(*d).ok_or(QSymError::Overflow)?;
                        }
                    }
                    if value != 0 {
                        solved.push((alpha, value));
                    }
                }
                for (index, coeff) in solved {
                    out.add_term(index, coeff)?;
                }
            }
            _ => unreachable!("bases differ"),
        }
        Ok(out)
    }

    /// JSON form:
    /// `{"flavor": "A", "degree": 3, "basis": "fundamental",
    ///   "terms": [{"index": "2,1", "coeff": 1}, …]}`
    /// with terms in descending index order.
    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<serde_json::Value> = self
            .terms()
            .map(|(index, coeff)| {
                serde_json::json!({ "index": index.to_string(), "coeff": coeff })
            })
            .collect();
        serde_json::json!({
            "flavor": I::FLAVOR.letter(),
            "degree": self.degree,
            "basis": self.basis.name(),
            "terms": terms,
        })
    }
}

impl<I: QSymIndex> fmt::Display for QSymVector<I> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        for (i, (index, coeff)) in self.terms().enumerate() {
            let magnitude = coeff.unsigned_abs();
            if i == 0 {
                if coeff < 0 {
                    f.write_str("-")?;
                }
            } else if coeff < 0 {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            if magnitude != 1 {
                write!(f, "{magnitude}*")?;
            }
            write!(f, "{}({})", self.basis.letter(), index)?;
        }
        Ok(())
    }
}
