//! Exact truncated power series in bounded families of commuting variables.
//!
//! Every value of quasisymmetric type in this crate is materialized as a
//! [`Series`]: an integer-coefficient polynomial over explicitly bounded
//! alphabets. Six alphabets exist:
//!
//! * `X`, `Y` — ordinary variables `x_i`, `y_i` with indices from 0
//!   (index 0 is only ever emitted by the hyperoctahedral expansions);
//! * `U`, `V` — the two colored letters of signed expansions, ordered
//!   `v_0 ≺ u_1 ≺ v_1 ≺ u_2 ≺ v_2 ≺ …` (so `u` indices start at 1);
//! * `Uy`, `Vy` — a second, independent copy of the colored pair used for
//!   the `Y` tensor factor in bipartite signed expansions.
//!
//! A series owns a bounds map `alphabet → max index`; inserting a term
//! whose variables fall outside the bounds is an error rather than a silent
//! truncation, which keeps every comparison in the test suites honest. All
//! coefficient arithmetic is checked `i64`; overflow is a hard error.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

/// Errors from building or combining series.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SeriesError {
    #[error("coefficient arithmetic overflowed")]
    Overflow,
    #[error("variable {variable} has index below the alphabet minimum {minimum}")]
    IndexBelowMinimum { variable: String, minimum: u32 },
    #[error("variable {variable} exceeds the bound {bound} for its alphabet")]
    OutOfBounds { variable: String, bound: u32 },
    #[error("variable {variable} belongs to an alphabet absent from the bounds")]
    UnknownAlphabet { variable: String },
    #[error("bounds disagree on alphabet {alphabet}: {left} vs {right}")]
    BoundsMismatch { alphabet: &'static str, left: u32, right: u32 },
    #[error("rename target alphabet {alphabet} is already in use")]
    RenameCollision { alphabet: &'static str },
    #[error("substitution requires a series over the colored letters only, found {alphabet}")]
    NotColored { alphabet: &'static str },
}

/// The six variable families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Alphabet {
    X,
    Y,
    U,
    V,
    Uy,
    Vy,
}

impl Alphabet {
    pub fn name(self) -> &'static str {
        match self {
            Alphabet::X => "x",
            Alphabet::Y => "y",
            Alphabet::U => "u",
            Alphabet::V => "v",
            Alphabet::Uy => "uy",
            Alphabet::Vy => "vy",
        }
    }

    /// Smallest legal index: the colored letter `u` starts at 1 (there is
    /// no `u_0` in the colored order), everything else at 0.
    pub fn min_index(self) -> u32 {
        match self {
            Alphabet::U | Alphabet::Uy => 1,
            _ => 0,
        }
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A single indexed variable such as `x3` or `uy2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Variable {
    pub alphabet: Alphabet,
    pub index: u32,
}

impl Variable {
    pub fn new(alphabet: Alphabet, index: u32) -> Result<Self, SeriesError> {
        if index < alphabet.min_index() {
            return Err(SeriesError::IndexBelowMinimum {
                variable: format!("{}{}", alphabet.name(), index),
                minimum: alphabet.min_index(),
            });
        }
        Ok(Variable { alphabet, index })
    }
}

impl fmt::Display for Variable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.alphabet.name(), self.index)
    }
}

/// A commutative product of variables with positive exponents. The derived
/// ordering (map entries compared variable-first) is the canonical term
/// order used for display and JSON output.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial {
    exponents: BTreeMap<Variable, u32>,
}

impl Monomial {
    /// The empty product.
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (Variable, u32)>) -> Result<Self, SeriesError> {
        let mut m = Monomial::one();
        for (var, exp) in pairs {
            m.multiply_by(var, exp)?;
        }
        Ok(m)
    }

    /// Multiplies in `var^exp` with checked exponent arithmetic.
    pub fn multiply_by(&mut self, var: Variable, exp: u32) -> Result<(), SeriesError> {
        if exp == 0 {
            return Ok(());
        }
        let slot = self.exponents.entry(var).or_insert(0);
        *slot = slot.checked_add(exp).ok_or(SeriesError::Overflow)?;
        Ok(())
    }

    /// The product of two monomials.
    pub fn times(&self, other: &Monomial) -> Result<Monomial, SeriesError> {
        let mut out = self.clone();
        for (&var, &exp) in &other.exponents {
            out.multiply_by(var, exp)?;
        }
        Ok(out)
    }

    pub fn exponents(&self) -> &BTreeMap<Variable, u32> {
        &self.exponents
    }

    pub fn total_degree(&self) -> u64 {
        self.exponents.values().map(|&e| u64::from(e)).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exponents.is_empty()
    }

    /// Applies `f` to every variable, merging exponents if images collide.
    fn map_variables(
        &self,
        mut f: impl FnMut(Variable) -> Result<Variable, SeriesError>,
    ) -> Result<Monomial, SeriesError> {
        let mut out = Monomial::one();
        for (&var, &exp) in &self.exponents {
            out.multiply_by(f(var)?, exp)?;
        }
        Ok(out)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exponents.is_empty() {
            return f.write_str("1");
        }
        for (i, (var, exp)) in self.exponents.iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            if *exp == 1 {
                write!(f, "{var}")?;
            } else {
                write!(f, "{var}^{exp}")?;
            }
        }
        Ok(())
    }
}

/// An integer-coefficient polynomial over explicitly bounded alphabets.
///
/// Two series are equal only when both the bounds and the terms agree;
/// comparing values computed at different truncations is a bug upstream,
/// and the strict equality surfaces it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Series {
    bounds: BTreeMap<Alphabet, u32>,
    terms: BTreeMap<Monomial, i64>,
}

impl Series {
    /// The zero series over the given bounds.
    pub fn zero(bounds: impl IntoIterator<Item = (Alphabet, u32)>) -> Self {
        Series { bounds: bounds.into_iter().collect(), terms: BTreeMap::new() }
    }

    pub fn bounds(&self) -> &BTreeMap<Alphabet, u32> {
        &self.bounds
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, i64> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, monomial: &Monomial) -> i64 {
        self.terms.get(monomial).copied().unwrap_or(0)
    }

    fn validate(&self, monomial: &Monomial) -> Result<(), SeriesError> {
        for var in monomial.exponents().keys() {
            match self.bounds.get(&var.alphabet) {
                None => {
                    return Err(SeriesError::UnknownAlphabet { variable: var.to_string() });
                }
                Some(&bound) if var.index > bound => {
                    return Err(SeriesError::OutOfBounds { variable: var.to_string(), bound });
                }
                Some(_) => {}
            }
        }
        Ok(())
    }

    /// Adds `coeff · monomial`, validating the variables against the bounds
    /// and dropping the entry if the total cancels to zero.
    pub fn add_term(&mut self, monomial: Monomial, coeff: i64) -> Result<(), SeriesError> {
        if coeff == 0 {
            return Ok(());
        }
        self.validate(&monomial)?;
        let slot = self.terms.entry(monomial.clone()).or_insert(0);
        *slot = slot.checked_add(coeff).ok_or(SeriesError::Overflow)?;
        if *slot == 0 {
            self.terms.remove(&monomial);
        }
        Ok(())
    }

    fn merged_bounds(&self, other: &Series) -> Result<BTreeMap<Alphabet, u32>, SeriesError> {
        let mut bounds = self.bounds.clone();
        for (&alphabet, &bound) in &other.bounds {
            match bounds.insert(alphabet, bound) {
                Some(previous) if previous != bound => {
                    return Err(SeriesError::BoundsMismatch {
                        alphabet: alphabet.name(),
                        left: previous,
                        right: bound,
                    });
                }
                _ => {}
            }
        }
        Ok(bounds)
    }

    /// Sum over the union of the bounds; shared alphabets must agree.
    pub fn plus(&self, other: &Series) -> Result<Series, SeriesError> {
        let mut out = Series { bounds: self.merged_bounds(other)?, terms: self.terms.clone() };
        for (monomial, &coeff) in &other.terms {
            out.add_term(monomial.clone(), coeff)?;
        }
        Ok(out)
    }

    /// Difference over the union of the bounds.
    pub fn minus(&self, other: &Series) -> Result<Series, SeriesError> {
        self.plus(&other.scaled(-1)?)
    }

    /// Product over the union of the bounds; shared alphabets must agree.
    pub fn times(&self, other: &Series) -> Result<Series, SeriesError> {
        let mut out = Series { bounds: self.merged_bounds(other)?, terms: BTreeMap::new() };
        for (m1, &c1) in &self.terms {
            for (m2, &c2) in &other.terms {
                let coeff = c1.checked_mul(c2).ok_or(SeriesError::Overflow)?;
                out.add_term(m1.times(m2)?, coeff)?;
            }
        }
        Ok(out)
    }

    /// The series multiplied by an integer scalar.
    pub fn scaled(&self, k: i64) -> Result<Series, SeriesError> {
        let mut out = Series { bounds: self.bounds.clone(), terms: BTreeMap::new() };
        for (monomial, &coeff) in &self.terms {
            let scaled = coeff.checked_mul(k).ok_or(SeriesError::Overflow)?;
            out.add_term(monomial.clone(), scaled)?;
        }
        Ok(out)
    }

    /// Moves every variable of alphabet `from` to alphabet `to`, index
    /// unchanged. The target must not already be in use, and every index
    /// must be legal for the target.
    pub fn rename_alphabet(&self, from: Alphabet, to: Alphabet) -> Result<Series, SeriesError> {
        if from == to {
            return Ok(self.clone());
        }
        if self.bounds.contains_key(&to) {
            return Err(SeriesError::RenameCollision { alphabet: to.name() });
        }
        let mut bounds = self.bounds.clone();
        if let Some(bound) = bounds.remove(&from) {
            bounds.insert(to, bound);
        }
        let mut out = Series { bounds, terms: BTreeMap::new() };
        for (monomial, &coeff) in &self.terms {
            let renamed = monomial.map_variables(|var| {
                if var.alphabet == from {
                    Variable::new(to, var.index)
                } else {
                    Ok(var)
                }
            })?;
            out.add_term(renamed, coeff)?;
        }
        Ok(out)
    }

    /// Identifies the colored letters: sends `u_i ↦ v_i`, merging terms.
    /// Defined only for series whose alphabets lie in `{u, v}`; the result
    /// is a series over `v` alone.
    pub fn substitute_u_equals_v(&self) -> Result<Series, SeriesError> {
        let mut v_bound = 0u32;
        for (&alphabet, &bound) in &self.bounds {
            match alphabet {
                Alphabet::U | Alphabet::V => v_bound = v_bound.max(bound),
                other => return Err(SeriesError::NotColored { alphabet: other.name() }),
            }
        }
        let mut out = Series { bounds: BTreeMap::from([(Alphabet::V, v_bound)]), terms: BTreeMap::new() };
        for (monomial, &coeff) in &self.terms {
            let merged = monomial.map_variables(|var| match var.alphabet {
                Alphabet::U => Variable::new(Alphabet::V, var.index),
                _ => Ok(var),
            })?;
            out.add_term(merged, coeff)?;
        }
        Ok(out)
    }

    /// JSON form: an array of `{"monomial": {"x1": 2, …}, "coeff": c}`
    /// objects in canonical term order.
    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<serde_json::Value> = self
            .terms
            .iter()
            .map(|(monomial, &coeff)| {
                let vars: serde_json::Map<String, serde_json::Value> = monomial
                    .exponents()
                    .iter()
                    .map(|(var, &exp)| (var.to_string(), serde_json::Value::from(exp)))
                    .collect();
                serde_json::json!({ "monomial": vars, "coeff": coeff })
            })
            .collect();
        serde_json::Value::Array(terms)
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (monomial, &coeff)) in self.terms.iter().enumerate() {
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
            if magnitude != 1 || monomial.is_one() {
                write!(f, "{magnitude}")?;
                if !monomial.is_one() {
                    f.write_str("*")?;
                }
            }
            if !monomial.is_one() {
                write!(f, "{monomial}")?;
            }
        }
        Ok(())
    }
}
