//! Descent classes, their sums in the group algebra, brute-force structure
//! constants, and verification that the span of class sums closes under
//! multiplication.
//!
//! For a descent index `γ` with canonical class representative `π` (the
//! window-lexicographically smallest member), the structure constant
//! `table(α, β, γ)` counts the pairs `(σ, τ)` with descent indices
//! `(α, β)` and `σ∘τ = π`; it is computed by iterating `σ` over the group
//! and setting `τ = σ⁻¹∘π`. Closure means
//! `u_α ⋆ u_β = Σ_γ table(α, β, γ) · u_γ` exactly, where `u_α` is the sum
//! of the class of `α` and `⋆` the convolution product under the crate's
//! composition convention. Representative-independence of the counts is
//! verified separately, not assumed.
//!
//! The same table drives the dual operations on quasisymmetric functions:
//! [`StructureConstantTable::inner_product`] and
//! [`StructureConstantTable::inner_coproduct`].

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::combinatorics::{
    CombinatoricsError, Composition, Flavor, PseudoComposition, SignedComposition,
};
use crate::groups::{GroupElement, GroupError, Permutation, SignedPermutation};
use crate::qsym::{BasisKind, QSymError, QSymIndex, QSymVector};

/// Errors from descent-algebra computations.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DescentAlgebraError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Combinatorics(#[from] CombinatoricsError),
    #[error(transparent)]
    QSym(#[from] QSymError),
    #[error("degree {degree} exceeds the flavor {flavor} cap of {cap}; raise it with --cap-override")]
    CapExceeded { flavor: Flavor, degree: u32, cap: u32 },
    #[error("coefficient arithmetic overflowed")]
    Overflow,
    #[error("operands have different degrees: {left} vs {right}")]
    DegreeMismatch { left: u32, right: u32 },
    #[error("table import failed: {detail}")]
    Import { detail: String },
}

/// Brute-force degree caps per flavor. The defaults keep the full
/// verification suite fast; raise them explicitly to go further.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DegreeCaps {
    pub a: u32,
    pub b: u32,
    pub s: u32,
}

impl Default for DegreeCaps {
    fn default() -> Self {
        DegreeCaps { a: 6, b: 4, s: 4 }
    }
}

impl DegreeCaps {
    /// The same cap for every flavor (the `--cap-override` behavior).
    pub fn uniform(cap: u32) -> Self {
        DegreeCaps { a: cap, b: cap, s: cap }
    }

    pub fn cap(&self, flavor: Flavor) -> u32 {
        match flavor {
            Flavor::A => self.a,
            Flavor::B => self.b,
            Flavor::S => self.s,
        }
    }

    pub fn check(&self, flavor: Flavor, degree: u32) -> Result<(), DescentAlgebraError> {
        let cap = self.cap(flavor);
        if degree > cap {
            return Err(DescentAlgebraError::CapExceeded { flavor, degree, cap });
        }
        Ok(())
    }
}

/// Index families that classify group elements by descent data.
pub trait ClassIndex: QSymIndex {
    type Elem: GroupElement;

    /// The descent index of a group element (its class label).
    fn descent_index_of(elem: &Self::Elem) -> Self;
}

impl ClassIndex for Composition {
    type Elem = Permutation;

    fn descent_index_of(elem: &Permutation) -> Self {
        elem.descent_composition()
    }
}

impl ClassIndex for PseudoComposition {
    type Elem = SignedPermutation;

    fn descent_index_of(elem: &SignedPermutation) -> Self {
        elem.descent_pseudo()
    }
}

impl ClassIndex for SignedComposition {
    type Elem = SignedPermutation;

    fn descent_index_of(elem: &SignedPermutation) -> Self {
        elem.signed_descent_composition()
    }
}

/// A finite integer combination of same-degree group elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupAlgebraElement<G: GroupElement> {
    degree: u32,
    coeffs: BTreeMap<G, i64>,
}

impl<G: GroupElement> GroupAlgebraElement<G> {
    pub fn zero(degree: u32) -> Self {
        GroupAlgebraElement { degree, coeffs: BTreeMap::new() }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, g: &G) -> i64 {
        self.coeffs.get(g).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&G, i64)> {
        self.coeffs.iter().map(|(g, &c)| (g, c))
    }

    pub fn term_count(&self) -> usize {
        self.coeffs.len()
    }

    /// Sum of all coefficients (the augmentation map).
    pub fn coefficient_sum(&self) -> Result<i64, DescentAlgebraError> {
        let mut total = 0i64;
        for &c in self.coeffs.values() {
            total = total.checked_add(c).ok_or(DescentAlgebraError::Overflow)?;
        }
        Ok(total)
    }

    pub fn add_term(&mut self, g: G, coeff: i64) -> Result<(), DescentAlgebraError> {
        if g.degree() != self.degree {
            return Err(DescentAlgebraError::DegreeMismatch {
                left: self.degree,
                right: g.degree(),
            });
        }
        if coeff == 0 {
            return Ok(());
        }
        let slot = self.coeffs.entry(g.clone()).or_insert(0);
        *slot = slot.checked_add(coeff).ok_or(DescentAlgebraError::Overflow)?;
        if *slot == 0 {
            self.coeffs.remove(&g);
        }
        Ok(())
    }

    pub fn plus(&self, other: &Self) -> Result<Self, DescentAlgebraError> {
        if self.degree != other.degree {
            return Err(DescentAlgebraError::DegreeMismatch {
                left: self.degree,
                right: other.degree,
            });
        }
        let mut out = self.clone();
        for (g, &c) in &other.coeffs {
            out.add_term(g.clone(), c)?;
        }
        Ok(out)
    }

    pub fn scaled(&self, k: i64) -> Result<Self, DescentAlgebraError> {
        let mut out = GroupAlgebraElement::zero(self.degree);
        for (g, &c) in &self.coeffs {
            out.add_term(g.clone(), c.checked_mul(k).ok_or(DescentAlgebraError::Overflow)?)?;
        }
        Ok(out)
    }

    /// Convolution product: `Σ a_σ b_τ (σ∘τ)` under the crate's pinned
    /// composition convention (`self` factors act second).
    pub fn multiply(&self, other: &Self) -> Result<Self, DescentAlgebraError> {
        if self.degree != other.degree {
            return Err(DescentAlgebraError::DegreeMismatch {
                left: self.degree,
                right: other.degree,
            });
        }
        let mut out = GroupAlgebraElement::zero(self.degree);
        for (g, &cg) in &self.coeffs {
            for (h, &ch) in &other.coeffs {
                let coeff = cg.checked_mul(ch).ok_or(DescentAlgebraError::Overflow)?;
                out.add_term(g.compose(h)?, coeff)?;
            }
        }
        Ok(out)
    }
}

impl<G: GroupElement> fmt::Display for GroupAlgebraElement<G> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        for (i, (g, coeff)) in self.terms().enumerate() {
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
            write!(f, "({g})")?;
        }
        Ok(())
    }
}

/// The sum, with coefficient 1, of every group element whose descent index
/// is `alpha`.
pub fn class_sum<C: ClassIndex>(
    alpha: &C,
    caps: &DegreeCaps,
) -> Result<GroupAlgebraElement<C::Elem>, DescentAlgebraError> {
    caps.check(C::FLAVOR, alpha.degree())?;
    let mut out = GroupAlgebraElement::zero(alpha.degree());
    for g in C::Elem::enumerate(alpha.degree()) {
        if C::descent_index_of(&g) == *alpha {
            out.add_term(g, 1)?;
        }
    }
    Ok(out)
}

/// The full table of pair counts at one degree, plus the class sizes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureConstantTable<C: ClassIndex> {
    degree: u32,
    entries: BTreeMap<(C, C, C), i64>,
    class_sizes: BTreeMap<C, i64>,
}

/// Counts pairs `(σ, τ)` with `σ∘τ = π` for every descent class's
/// canonical representative `π`, by iterating `σ` and solving for `τ`.
pub fn compute_structure_constants<C: ClassIndex>(
    degree: u32,
    caps: &DegreeCaps,
) -> Result<StructureConstantTable<C>, DescentAlgebraError> {
    caps.check(C::FLAVOR, degree)?;
    let group = C::Elem::enumerate(degree);
    // Enumeration is ascending window order, so the first member seen in
    // each class is its canonical (lexicographically smallest) representative.
    let mut classes: BTreeMap<C, Vec<C::Elem>> = BTreeMap::new();
    for g in &group {
        classes.entry(C::descent_index_of(g)).or_default().push(g.clone());
    }
    let mut entries: BTreeMap<(C, C, C), i64> = BTreeMap::new();
    for (gamma, members) in &classes {
        let pi = &members[0];
        for sigma in &group {
            let tau = sigma.inverse().compose(pi)?;
            let alpha = C::descent_index_of(sigma);
            let beta = C::descent_index_of(&tau);
            let slot = entries.entry((alpha, beta, gamma.clone())).or_insert(0);
            *slot = slot.checked_add(1).ok_or(DescentAlgebraError::Overflow)?;
        }
    }
    let class_sizes = classes.into_iter().map(|(c, members)| (c, members.len() as i64)).collect();
    Ok(StructureConstantTable { degree, entries, class_sizes })
}

impl<C: ClassIndex> StructureConstantTable<C> {
    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn flavor(&self) -> Flavor {
        C::FLAVOR
    }

    /// The pair count `table(α, β, γ)`.
    pub fn entry(&self, alpha: &C, beta: &C, gamma: &C) -> i64 {
        self.entries
            .get(&(alpha.clone(), beta.clone(), gamma.clone()))
            .copied()
            .unwrap_or(0)
    }

    /// All nonzero entries.
    pub fn entries(&self) -> impl Iterator<Item = (&(C, C, C), i64)> {
        self.entries.iter().map(|(k, &v)| (k, v))
    }

    pub fn nonzero_count(&self) -> usize {
        self.entries.len()
    }

    pub fn class_size(&self, index: &C) -> i64 {
        self.class_sizes.get(index).copied().unwrap_or(0)
    }

    /// The classes present at this degree (every index of the degree, since
    /// descent classes partition the group), in enumeration order.
    pub fn classes(&self) -> Result<Vec<C>, DescentAlgebraError> {
        Ok(C::enumerate(self.degree)?)
    }

    /// The decomposition of `u_α ⋆ u_β`: nonzero `(γ, count)` pairs in
    /// enumeration order.
    pub fn row(&self, alpha: &C, beta: &C) -> Result<Vec<(C, i64)>, DescentAlgebraError> {
        let mut out = Vec::new();
        for gamma in C::enumerate(self.degree)? {
            let count = self.entry(alpha, beta, &gamma);
            if count != 0 {
                out.push((gamma, count));
            }
        }
        Ok(out)
    }

    /// Product of two class-sum combinations through the table alone
    /// (no group elements touched).
    pub fn multiply_classes(
        &self,
        a: &BTreeMap<C, i64>,
        b: &BTreeMap<C, i64>,
    ) -> Result<BTreeMap<C, i64>, DescentAlgebraError> {
        let mut out: BTreeMap<C, i64> = BTreeMap::new();
        for ((alpha, beta, gamma), &count) in &self.entries {
            let (Some(&ca), Some(&cb)) = (a.get(alpha), b.get(beta)) else {
                continue;
            };
            let product = ca
                .checked_mul(cb)
                .and_then(|x| x.checked_mul(count))
                .ok_or(DescentAlgebraError::Overflow)?;
            let slot = out.entry(gamma.clone()).or_insert(0);
            *slot = slot.checked_add(product).ok_or(DescentAlgebraError::Overflow)?;
            if *slot == 0 {
                out.remove(gamma);
            }
        }
        Ok(out)
    }

    /// `F_β ∗ F_α = Σ_γ table(α, β, γ) F_γ`: the product dual to the
    /// coproduct below, with coefficients straight from the table.
    pub fn inner_product(&self, beta: &C, alpha: &C) -> Result<QSymVector<C>, DescentAlgebraError> {
        let mut out = QSymVector::zero(self.degree, BasisKind::Fundamental)?;
        for gamma in C::enumerate(self.degree)? {
            out.add_term(gamma.clone(), self.entry(alpha, beta, &gamma))?;
        }
        Ok(out)
    }

    /// `F_γ ↦ Σ table(α, β, γ) F_β ⊗ F_α`: all nonzero `(β, α, count)`
    /// triples, in enumeration order of `(β, α)`.
    pub fn inner_coproduct(&self, gamma: &C) -> Result<Vec<(C, C, i64)>, DescentAlgebraError> {
        let order = C::enumerate(self.degree)?;
        let mut out = Vec::new();
        for beta in &order {
            for alpha in &order {
                let count = self.entry(alpha, beta, gamma);
                if count != 0 {
                    out.push((beta.clone(), alpha.clone(), count));
                }
            }
        }
        Ok(out)
    }

    /// CSV document with columns `flavor,n,alpha,beta,gamma,count`: one row
    /// per nonzero entry, `(α, β, γ)` in enumeration order.
    pub fn to_csv(&self) -> Result<String, DescentAlgebraError> {
        let mut writer = csv::Writer::from_writer(Vec::new());
        writer
            .write_record(["flavor", "n", "alpha", "beta", "gamma", "count"])
            .map_err(|e| DescentAlgebraError::Import { detail: e.to_string() })?;
        for (alpha, beta, gamma, count) in self.rows_in_enumeration_order()? {
            writer
                .write_record([
                    C::FLAVOR.letter().to_owned(),
                    self.degree.to_string(),
                    alpha.to_string(),
                    beta.to_string(),
                    gamma.to_string(),
                    count.to_string(),
                ])
                .map_err(|e| DescentAlgebraError::Import { detail: e.to_string() })?;
        }
        let bytes = writer
            .into_inner()
            .map_err(|e| DescentAlgebraError::Import { detail: e.to_string() })?;
        String::from_utf8(bytes).map_err(|e| DescentAlgebraError::Import { detail: e.to_string() })
    }

    /// JSON document mirroring the CSV records.
    pub fn to_json(&self) -> Result<serde_json::Value, DescentAlgebraError> {
        let rows: Vec<serde_json::Value> = self
            .rows_in_enumeration_order()?
            .into_iter()
            .map(|(alpha, beta, gamma, count)| {
                serde_json::json!({
                    "flavor": C::FLAVOR.letter(),
                    "n": self.degree,
                    "alpha": alpha.to_string(),
                    "beta": beta.to_string(),
                    "gamma": gamma.to_string(),
                    "count": count,
                })
            })
            .collect();
        Ok(serde_json::Value::Array(rows))
    }

    fn rows_in_enumeration_order(&self) -> Result<Vec<(C, C, C, i64)>, DescentAlgebraError> {
        let order = C::enumerate(self.degree)?;
        let mut out = Vec::new();
        for alpha in &order {
            for beta in &order {
                for gamma in &order {
                    let count = self.entry(alpha, beta, gamma);
                    if count != 0 {
                        out.push((alpha.clone(), beta.clone(), gamma.clone(), count));
                    }
                }
            }
        }
        Ok(out)
    }

    /// Rebuilds a table from its CSV form (class sizes are recomputed from
    /// the group). The inverse of [`StructureConstantTable::to_csv`].
    pub fn from_csv(text: &str) -> Result<Self, DescentAlgebraError> {
        let import = |detail: String| DescentAlgebraError::Import { detail };
        let mut reader = csv::Reader::from_reader(text.as_bytes());
        let mut degree: Option<u32> = None;
        let mut entries: BTreeMap<(C, C, C), i64> = BTreeMap::new();
        for record in reader.records() {
            let record = record.map_err(|e| import(e.to_string()))?;
            if record.len() != 6 {
                return Err(import(format!("expected 6 columns, found {}", record.len())));
            }
            if record[0].trim() != C::FLAVOR.letter() {
                return Err(import(format!(
                    "flavor column {:?} does not match {}",
                    &record[0],
                    C::FLAVOR.letter()
                )));
            }
            let n: u32 = record[1].trim().parse().map_err(|_| {
                import(format!("bad degree column {:?}", &record[1]))
            })?;
            match degree {
                None => degree = Some(n),
                Some(existing) if existing != n => {
                    return Err(import(format!("mixed degrees {existing} and {n}")));
                }
                Some(_) => {}
            }
            let parse_index = |field: &str| {
                field
                    .trim()
                    .parse::<C>()
                    .map_err(|_| import(format!("bad index column {field:?}")))
            };
            let alpha = parse_index(&record[2])?;
            let beta = parse_index(&record[3])?;
            let gamma = parse_index(&record[4])?;
            let count: i64 = record[5].trim().parse().map_err(|_| {
                import(format!("bad count column {:?}", &record[5]))
            })?;
            if count < 0 {
                return Err(import(format!("negative count {count}")));
            }
            if count != 0 && entries.insert((alpha, beta, gamma), count).is_some() {
                return Err(import("duplicate (alpha, beta, gamma) row".to_owned()));
            }
        }
        let degree = degree.ok_or_else(|| import("no data rows".to_owned()))?;
        let mut class_sizes: BTreeMap<C, i64> = BTreeMap::new();
        for g in C::Elem::enumerate(degree) {
            *class_sizes.entry(C::descent_index_of(&g)).or_insert(0) += 1;
        }
        Ok(StructureConstantTable { degree, entries, class_sizes })
    }
}

/// Result of the closure verification at one degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosureReport<C: ClassIndex> {
    pub flavor: Flavor,
    pub degree: u32,
    /// Number of descent classes (the algebra's dimension).
    pub dimension: usize,
    pub pairs_checked: usize,
    /// Pairs `(α, β)` whose product left a nonzero residue. Must be empty.
    pub failures: Vec<(C, C)>,
}

impl<C: ClassIndex> ClosureReport<C> {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Multiplies every pair of class sums in the group algebra and checks that
/// the result is exactly `Σ_γ table(α, β, γ) · u_γ` — zero residue.
pub fn verify_closure<C: ClassIndex>(
    degree: u32,
    caps: &DegreeCaps,
) -> Result<ClosureReport<C>, DescentAlgebraError> {
    let table = compute_structure_constants::<C>(degree, caps)?;
    let classes = C::enumerate(degree)?;
    let sums: BTreeMap<C, GroupAlgebraElement<C::Elem>> = classes
        .iter()
        .map(|c| Ok((c.clone(), class_sum(c, caps)?)))
        .collect::<Result<_, DescentAlgebraError>>()?;
    let mut failures = Vec::new();
    let mut pairs_checked = 0;
    for alpha in &classes {
        for beta in &classes {
            pairs_checked += 1;
            let mut residue = sums[alpha].multiply(&sums[beta])?;
            for (gamma, count) in table.row(alpha, beta)? {
                residue = residue.plus(&sums[&gamma].scaled(-count)?)?;
            }
            if !residue.is_zero() {
                failures.push((alpha.clone(), beta.clone()));
            }
        }
    }
    Ok(ClosureReport {
        flavor: C::FLAVOR,
        degree,
        dimension: classes.len(),
        pairs_checked,
        failures,
    })
}

/// Exhaustively recomputes the pair counts from **every** representative of
/// every class and reports the classes where some representative disagrees
/// with the canonical one. An empty result is the representative-independence
/// property.
pub fn representative_dependence<C: ClassIndex>(
    degree: u32,
    caps: &DegreeCaps,
) -> Result<Vec<C>, DescentAlgebraError> {
    caps.check(C::FLAVOR, degree)?;
    let group = C::Elem::enumerate(degree);
    let mut classes: BTreeMap<C, Vec<C::Elem>> = BTreeMap::new();
    for g in &group {
        classes.entry(C::descent_index_of(g)).or_default().push(g.clone());
    }
    let mut dependent = Vec::new();
    for (gamma, members) in &classes {
        let mut baseline: Option<BTreeMap<(C, C), i64>> = None;
        for pi in members {
            let mut counts: BTreeMap<(C, C), i64> = BTreeMap::new();
            for sigma in &group {
                let tau = sigma.inverse().compose(pi)?;
                *counts
                    .entry((C::descent_index_of(sigma), C::descent_index_of(&tau)))
                    .or_insert(0) += 1;
            }
            match &baseline {
                None => baseline = Some(counts),
                Some(expected) if *expected != counts => {
                    dependent.push(gamma.clone());
                    break;
                }
                Some(_) => {}
            }
        }
    }
    Ok(dependent)
}
