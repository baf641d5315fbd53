//! Labeled posets, their (type B) P-partitions, and the generating
//! functions Γ attached to permutations, signed permutations, and posets —
//! including the bipartite versions over a lexicographic product chain.
//!
//! A P-partition of a [`LabeledPoset`] is a map `f` from the labels into a
//! finite chain `1..=N` with `f(i) ≤ f(j)` whenever `i <_P j`, strict when
//! additionally `i > j` as integers. The type B analogue maps the labels
//! `±{1..n} ∪ {0}` into `±{0..N}` with `f(−i) = −f(i)`, `f(0) = 0`, and the
//! same order/strictness conditions.
//!
//! For a permutation seen as the total order `π_1 <_P π_2 <_P …` these maps
//! are exactly descent-constrained chains, which is how the fast
//! permutation-level gammas below are computed; the poset-level enumeration
//! is the independent slow route, and the two are compared in tests.
//!
//! Bipartite expansions map into the product alphabet `(±S)×(±T)` under the
//! lexicographic order with componentwise negation; its nonnegative part is
//! `W₊ = {(a,b) : a > 0, or a = 0 and b ≥ 0}`.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::groups::{GroupElement, Permutation, SignedPermutation};
use crate::qsym::{QSymError, QSymIndex};
use crate::series::{Alphabet, Monomial, Series, SeriesError, Variable};

/// Errors from poset construction and parsing.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PosetError {
    #[error("poset must have at least one element")]
    ZeroSize,
    #[error("label {label} is out of range for {n} elements")]
    LabelOutOfRange { label: i64, n: u32 },
    #[error("label {label} related to itself")]
    SelfRelation { label: i64 },
    #[error("relations contain a cycle")]
    Cycle,
    #[error("relation {smaller} < {larger} has no mirror: type B posets need -j < -i whenever i < j")]
    NotNegationClosed { smaller: i32, larger: i32 },
    #[error("line {line}: cannot parse {content:?}")]
    Parse { line: usize, content: String },
}

/// A finite totally ordered image set for P-partition values.
///
/// Flavor A maps into `1..=N`; the type B chain has a minimal element below
/// the positive values, realized here as `0..=N`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Chain {
    min: u32,
    max: u32,
}

impl Chain {
    /// The chain `1..=n` used by flavor A.
    pub fn positive(n: u32) -> Chain {
        Chain { min: 1, max: n }
    }

    /// The chain `0..=n` used by flavors B and S (0 is the minimal element).
    pub fn nonnegative(n: u32) -> Chain {
        Chain { min: 0, max: n }
    }

    pub fn values(&self) -> std::ops::RangeInclusive<u32> {
        self.min..=self.max
    }
}

// ---------------------------------------------------------------------------
// LabeledPoset (flavor A)
// ---------------------------------------------------------------------------

/// A strict partial order on the labels `1..=n`, stored transitively
/// closed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledPoset {
    n: u32,
    relations: BTreeSet<(u32, u32)>,
}

impl LabeledPoset {
    /// Builds the poset from cover relations `(i, j)` meaning `i <_P j`,
    /// closing transitively and rejecting cycles.
    pub fn from_covers(n: u32, covers: &[(u32, u32)]) -> Result<Self, PosetError> {
        if n == 0 {
            return Err(PosetError::ZeroSize);
        }
        for &(i, j) in covers {
            for label in [i, j] {
                if label < 1 || label > n {
                    return Err(PosetError::LabelOutOfRange { label: i64::from(label), n });
                }
            }
            if i == j {
                return Err(PosetError::SelfRelation { label: i64::from(i) });
            }
        }
        let relations = transitive_closure(covers.iter().copied(), |&(i, j)| {
            if i == j {
                Err(PosetError::Cycle)
            } else {
                Ok((i, j))
            }
        })?;
        Ok(LabeledPoset { n, relations })
    }

    /// The poset with no relations.
    pub fn antichain(n: u32) -> Result<Self, PosetError> {
        LabeledPoset::from_covers(n, &[])
    }

    /// The total order `π_1 <_P π_2 <_P … <_P π_n`.
    pub fn from_total_order(pi: &Permutation) -> Self {
        let w = pi.window();
        let mut relations = BTreeSet::new();
        for a in 0..w.len() {
            for b in a + 1..w.len() {
                relations.insert((w[a], w[b]));
            }
        }
        LabeledPoset { n: pi.degree(), relations }
    }

    pub fn element_count(&self) -> u32 {
        self.n
    }

    pub fn relations(&self) -> &BTreeSet<(u32, u32)> {
        &self.relations
    }

    pub fn less(&self, i: u32, j: u32) -> bool {
        self.relations.contains(&(i, j))
    }

    /// All permutations `π` whose total order extends the poset, i.e.
    /// `i <_P j` implies `i` appears before `j` in the window. Lexicographic
    /// window order.
    pub fn linear_extensions(&self) -> Vec<Permutation> {
        let n = self.n as usize;
        let mut out = Vec::new();
        let mut placed = vec![false; n + 1];
        let mut window: Vec<u32> = Vec::with_capacity(n);
        self.extend_linear(&mut placed, &mut window, &mut out);
        out
    }

    fn extend_linear(&self, placed: &mut Vec<bool>, window: &mut Vec<u32>, out: &mut Vec<Permutation>) {
        if window.len() == self.n as usize {
            out.push(Permutation::new(window.clone()).expect("window is a bijection"));
            return;
        }
        'candidates: for label in 1..=self.n {
            if placed[label as usize] {
                continue;
            }
            // `label` may come next only if everything below it is placed.
            for lower in 1..=self.n {
                if !placed[lower as usize] && self.less(lower, label) {
                    continue 'candidates;
                }
            }
            placed[label as usize] = true;
            window.push(label);
            self.extend_linear(placed, window, out);
            window.pop();
            placed[label as usize] = false;
        }
    }

    /// Parses the poset text format: first line `n`, then one `i < j`
    /// relation per line. Blank lines are skipped.
    pub fn parse_text(text: &str) -> Result<Self, PosetError> {
        let (n, covers) = parse_poset_lines(text)?;
        let covers: Vec<(u32, u32)> = covers
            .into_iter()
            .map(|(i, j)| {
                let cast = |v: i64| {
                    u32::try_from(v).map_err(|_| PosetError::LabelOutOfRange { label: v, n })
                };
                Ok((cast(i)?, cast(j)?))
            })
            .collect::<Result<_, PosetError>>()?;
        LabeledPoset::from_covers(n, &covers)
    }
}

// ---------------------------------------------------------------------------
// TypeBPoset (flavors B and S)
// ---------------------------------------------------------------------------

/// A strict partial order on the labels `{−n..n}` (0 included), stored
/// transitively closed and required to be closed under negation-reversal:
/// `i <_P j` implies `−j <_P −i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TypeBPoset {
    n: u32,
    relations: BTreeSet<(i32, i32)>,
}

impl TypeBPoset {
    /// Builds from cover relations, closing transitively; the closure must
    /// already be negation-closed (mirrors are validated, never inferred).
    pub fn from_covers(n: u32, covers: &[(i32, i32)]) -> Result<Self, PosetError> {
        if n == 0 {
            return Err(PosetError::ZeroSize);
        }
        let bound = n as i32;
        for &(i, j) in covers {
            for label in [i, j] {
                if label < -bound || label > bound {
                    return Err(PosetError::LabelOutOfRange { label: i64::from(label), n });
                }
            }
            if i == j {
                return Err(PosetError::SelfRelation { label: i64::from(i) });
            }
        }
        let relations = transitive_closure(covers.iter().copied(), |&(i, j)| {
            if i == j {
                Err(PosetError::Cycle)
            } else {
                Ok((i, j))
            }
        })?;
        for &(i, j) in &relations {
            if !relations.contains(&(-j, -i)) {
                return Err(PosetError::NotNegationClosed { smaller: i, larger: j });
            }
        }
        Ok(TypeBPoset { n, relations })
    }

    /// The total order `−π_n <_P … <_P −π_1 <_P 0 <_P π_1 <_P … <_P π_n`.
    pub fn from_signed_total_order(pi: &SignedPermutation) -> Self {
        let w = pi.window();
        let mut seq: Vec<i32> = w.iter().rev().map(|&v| -v).collect();
        seq.push(0);
        seq.extend_from_slice(w);
        let mut relations = BTreeSet::new();
        for a in 0..seq.len() {
            for b in a + 1..seq.len() {
                relations.insert((seq[a], seq[b]));
            }
        }
        TypeBPoset { n: pi.degree(), relations }
    }

    pub fn element_count(&self) -> u32 {
        self.n
    }

    pub fn relations(&self) -> &BTreeSet<(i32, i32)> {
        &self.relations
    }

    pub fn less(&self, i: i32, j: i32) -> bool {
        self.relations.contains(&(i, j))
    }

    /// All signed permutations whose total order extends the poset.
    pub fn signed_linear_extensions(&self) -> Vec<SignedPermutation> {
        SignedPermutation::enumerate(self.n)
            .into_iter()
            .filter(|w| {
                let total = TypeBPoset::from_signed_total_order(w);
                self.relations.is_subset(&total.relations)
            })
            .collect()
    }

    /// Parses the type B poset text format: first line `n`, then `i < j`
    /// relations with signed labels; label 0 needs no declaration but may
    /// appear in relations.
    pub fn parse_text(text: &str) -> Result<Self, PosetError> {
        let (n, covers) = parse_poset_lines(text)?;
        let covers: Vec<(i32, i32)> = covers
            .into_iter()
            .map(|(i, j)| {
                let cast = |v: i64| {
                    i32::try_from(v).map_err(|_| PosetError::LabelOutOfRange { label: v, n })
                };
                Ok((cast(i)?, cast(j)?))
            })
            .collect::<Result<_, PosetError>>()?;
        TypeBPoset::from_covers(n, &covers)
    }
}

/// Shared poset text parsing: returns `n` and the `(i, j)` cover pairs.
fn parse_poset_lines(text: &str) -> Result<(u32, Vec<(i64, i64)>), PosetError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(no, l)| (no + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (first_no, first) = lines
        .next()
        .ok_or(PosetError::Parse { line: 1, content: String::new() })?;
    let n: u32 = first
        .parse()
        .map_err(|_| PosetError::Parse { line: first_no, content: first.to_owned() })?;
    let mut covers = Vec::new();
    for (no, line) in lines {
        let err = || PosetError::Parse { line: no, content: line.to_owned() };
        let (lhs, rhs) = line.split_once('<').ok_or_else(err)?;
        let i: i64 = lhs.trim().parse().map_err(|_| err())?;
        let j: i64 = rhs.trim().parse().map_err(|_| err())?;
        covers.push((i, j));
    }
    Ok((n, covers))
}

/// Transitive closure with cycle detection: `check` can reject a derived
/// pair (used to catch `i <_P i`).
fn transitive_closure<T: Copy + Ord>(
    pairs: impl Iterator<Item = (T, T)>,
    check: impl Fn(&(T, T)) -> Result<(T, T), PosetError>,
) -> Result<BTreeSet<(T, T)>, PosetError> {
    let mut relations: BTreeSet<(T, T)> = BTreeSet::new();
    for p in pairs {
        relations.insert(check(&p)?);
    }
    loop {
        let mut additions = Vec::new();
        for &(a, b) in &relations {
            for &(c, d) in &relations {
                if b == c {
                    let derived = check(&(a, d))?;
                    if !relations.contains(&derived) {
                        additions.push(derived);
                    }
                }
            }
        }
        if additions.is_empty() {
            return Ok(relations);
        }
        relations.extend(additions);
    }
}

// ---------------------------------------------------------------------------
// P-partition maps and enumeration
// ---------------------------------------------------------------------------

/// A map from the labels `1..=n` into a positive chain.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct PPartitionMap {
    values: Vec<u32>,
}

impl PPartitionMap {
    /// The value at a 1-based label.
    pub fn value(&self, label: u32) -> u32 {
        self.values[(label - 1) as usize]
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }
}

/// A type B map, determined by its values on the positive labels; the
/// extension is `f(−i) = −f(i)` and `f(0) = 0`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct SignedPPartitionMap {
    values: Vec<i32>,
}

impl SignedPPartitionMap {
    /// The value at any label in `−n..=n`.
    pub fn value(&self, label: i32) -> i32 {
        match label {
            0 => 0,
            l if l > 0 => self.values[(l - 1) as usize],
            l => -self.values[(-l - 1) as usize],
        }
    }

    pub fn values(&self) -> &[i32] {
        &self.values
    }
}

/// All maps `f: {1..n} → {1..N}` with `f(i) ≤ f(j)` for `i <_P j`, strict
/// when `i > j`. Ascending value-tuple order.
pub fn enumerate_ppartitions(poset: &LabeledPoset, truncation: u32) -> Vec<PPartitionMap> {
    let n = poset.element_count() as usize;
    // Relations checkable once labels ≤ k are assigned, keyed by k.
    let mut by_stage: Vec<Vec<(u32, u32)>> = vec![Vec::new(); n + 1];
    for &(i, j) in poset.relations() {
        by_stage[i.max(j) as usize].push((i, j));
    }
    let chain = Chain::positive(truncation);
    let mut out = Vec::new();
    let mut values: Vec<u32> = Vec::with_capacity(n);
    fn rec(
        n: usize,
        chain: Chain,
        by_stage: &[Vec<(u32, u32)>],
        values: &mut Vec<u32>,
        out: &mut Vec<PPartitionMap>,
    ) {
        if values.len() == n {
            out.push(PPartitionMap { values: values.clone() });
            return;
        }
        'next: for v in chain.values() {
            values.push(v);
            for &(i, j) in &by_stage[values.len()] {
                let (fi, fj) = (values[(i - 1) as usize], values[(j - 1) as usize]);
                let ok = if i > j { fi < fj } else { fi <= fj };
                if !ok {
                    values.pop();
                    continue 'next;
                }
            }
            rec(n, chain, by_stage, values, out);
            values.pop();
        }
    }
    rec(n, chain, &by_stage, &mut values, &mut out);
    out
}

/// All type B maps into `±{0..N}`: values on positive labels determine the
/// rest; every poset relation `a <_P b` (labels possibly negative or 0)
/// must satisfy `f(a) ≤ f(b)`, strict when `a > b`.
pub fn enumerate_b_ppartitions(poset: &TypeBPoset, truncation: u32) -> Vec<SignedPPartitionMap> {
    let n = poset.element_count() as usize;
    let mut by_stage: Vec<Vec<(i32, i32)>> = vec![Vec::new(); n + 1];
    for &(a, b) in poset.relations() {
        let stage = a.unsigned_abs().max(b.unsigned_abs()) as usize;
        by_stage[stage].push((a, b));
    }
    let nn = truncation as i32;
    let mut out = Vec::new();
    let mut values: Vec<i32> = Vec::with_capacity(n);
    fn value(values: &[i32], label: i32) -> i32 {
        match label {
            0 => 0,
            l if l > 0 => values[(l - 1) as usize],
            l => -values[(-l - 1) as usize],
        }
    }
    fn rec(
        n: usize,
        nn: i32,
        by_stage: &[Vec<(i32, i32)>],
        values: &mut Vec<i32>,
        out: &mut Vec<SignedPPartitionMap>,
    ) {
        if values.len() == n {
            out.push(SignedPPartitionMap { values: values.clone() });
            return;
        }
        'next: for v in -nn..=nn {
            values.push(v);
            for &(a, b) in &by_stage[values.len()] {
                let (fa, fb) = (value(values, a), value(values, b));
                let ok = if a > b { fa < fb } else { fa <= fb };
                if !ok {
                    values.pop();
                    continue 'next;
                }
            }
            rec(n, nn, by_stage, values, out);
            values.pop();
        }
    }
    // Stage-0 relations (all labels 0) cannot exist: 0 <_P 0 is rejected.
    rec(n, nn, &by_stage, &mut values, &mut out);
    out
}

// ---------------------------------------------------------------------------
// Generating functions: poset level
// ---------------------------------------------------------------------------

/// `Σ_f x_{f(1)} ⋯ x_{f(n)}` over all P-partitions into `1..=N`.
pub fn gamma(poset: &LabeledPoset, truncation: u32) -> Result<Series, SeriesError> {
    let mut series = Series::zero([(Alphabet::X, truncation)]);
    for map in enumerate_ppartitions(poset, truncation) {
        let mut m = Monomial::one();
        for &v in map.values() {
            m.multiply_by(Variable::new(Alphabet::X, v)?, 1)?;
        }
        series.add_term(m, 1)?;
    }
    Ok(series)
}

/// `Σ_f x_{|f(1)|} ⋯ x_{|f(n)|}` over all type B P-partitions.
pub fn gamma_b(poset: &TypeBPoset, truncation: u32) -> Result<Series, SeriesError> {
    let mut series = Series::zero([(Alphabet::X, truncation)]);
    for map in enumerate_b_ppartitions(poset, truncation) {
        let mut m = Monomial::one();
        for &v in map.values() {
            m.multiply_by(Variable::new(Alphabet::X, v.unsigned_abs())?, 1)?;
        }
        series.add_term(m, 1)?;
    }
    Ok(series)
}

/// Like [`gamma_b`] but keeping signs as letters: position `j` contributes
/// `u_{|f(j)|}` when `f(j) < 0` and `v_{f(j)}` when `f(j) ≥ 0`.
pub fn gamma_signed_poset(poset: &TypeBPoset, truncation: u32) -> Result<Series, SeriesError> {
    let mut series = Series::zero([(Alphabet::U, truncation), (Alphabet::V, truncation)]);
    for map in enumerate_b_ppartitions(poset, truncation) {
        let mut m = Monomial::one();
        for &v in map.values() {
            m.multiply_by(colored_letter(v)?, 1)?;
        }
        series.add_term(m, 1)?;
    }
    Ok(series)
}

fn colored_letter(value: i32) -> Result<Variable, SeriesError> {
    if value < 0 {
        Variable::new(Alphabet::U, value.unsigned_abs())
    } else {
        Variable::new(Alphabet::V, value as u32)
    }
}

// ---------------------------------------------------------------------------
// Generating functions: permutation level (descent-constrained chains)
// ---------------------------------------------------------------------------

/// Weakly increasing value tuples `g_1 ≤ … ≤ g_n` in `min..=max`, strict at
/// the given 1-based positions (`p` strict means `g_p < g_{p+1}`); when
/// `strict_start`, additionally `g_1 > min − 1` is replaced by `g_1 ≥ min + 1`.
fn descent_chains(
    n: usize,
    min: u32,
    max: u32,
    strict: &BTreeSet<u32>,
    strict_start: bool,
) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut acc = Vec::with_capacity(n);
    fn rec(
        n: usize,
        max: u32,
        strict: &BTreeSet<u32>,
        acc: &mut Vec<u32>,
        lo: u32,
        out: &mut Vec<Vec<u32>>,
    ) {
        if acc.len() == n {
            out.push(acc.clone());
            return;
        }
        for v in lo..=max {
            acc.push(v);
            let next_lo = if strict.contains(&(acc.len() as u32)) { v + 1 } else { v };
            rec(n, max, strict, acc, next_lo, out);
            acc.pop();
        }
    }
    let start = if strict_start { min + 1 } else { min };
    rec(n, max, strict, &mut acc, start, &mut out);
    out
}

/// `Γ(π)`: the generating function of the total order of `π`, computed
/// directly as descent-constrained chains `1 ≤ g_1 ≤ … ≤ g_n ≤ N` (strict
/// at descents of `π`), emitting `x_{g_1} ⋯ x_{g_n}`.
pub fn gamma_permutation(pi: &Permutation, truncation: u32) -> Result<Series, SeriesError> {
    let mut series = Series::zero([(Alphabet::X, truncation)]);
    for chain in descent_chains(pi.degree() as usize, 1, truncation, &pi.descent_set(), false) {
        let mut m = Monomial::one();
        for v in chain {
            m.multiply_by(Variable::new(Alphabet::X, v)?, 1)?;
        }
        series.add_term(m, 1)?;
    }
    Ok(series)
}

/// `Γ_B(π)`: chains `0 ≤ g_1 ≤ … ≤ g_n ≤ N`, strict at type B descents
/// (`g_1 ≥ 1` when 0 is a descent), emitting `x_{g_1} ⋯ x_{g_n}`.
pub fn gamma_b_permutation(pi: &SignedPermutation, truncation: u32) -> Result<Series, SeriesError> {
    let descents = pi.descent_set_b();
    let mut series = Series::zero([(Alphabet::X, truncation)]);
    for chain in
        descent_chains(pi.degree() as usize, 0, truncation, &descents, descents.contains(&0))
    {
        let mut m = Monomial::one();
        for v in chain {
            m.multiply_by(Variable::new(Alphabet::X, v)?, 1)?;
        }
        series.add_term(m, 1)?;
    }
    Ok(series)
}

/// `Γ̄(π)`: the same chains as [`gamma_b_permutation`], but position `s`
/// emits the colored letter `u_{g_s}` when `π_s < 0` and `v_{g_s}` when
/// `π_s > 0` (the sign of the mapped value at `|π_s|`).
pub fn gamma_signed(pi: &SignedPermutation, truncation: u32) -> Result<Series, SeriesError> {
    let descents = pi.descent_set_b();
    let window = pi.window();
    let mut series = Series::zero([(Alphabet::U, truncation), (Alphabet::V, truncation)]);
    for chain in
        descent_chains(pi.degree() as usize, 0, truncation, &descents, descents.contains(&0))
    {
        let mut m = Monomial::one();
        for (s, v) in chain.into_iter().enumerate() {
            let signed_value = if window[s] < 0 { -(v as i32) } else { v as i32 };
            m.multiply_by(colored_letter(signed_value)?, 1)?;
        }
        series.add_term(m, 1)?;
    }
    Ok(series)
}

// ---------------------------------------------------------------------------
// Bipartite generating functions
// ---------------------------------------------------------------------------

/// Weakly increasing tuples of pairs under lexicographic order, strict at
/// the given positions; `floor` (when set) constrains the first pair to be
/// strictly greater than it.
fn pair_chains(
    n: usize,
    values: &[(i32, i32)],
    strict: &BTreeSet<u32>,
    floor: Option<(i32, i32)>,
) -> Vec<Vec<(i32, i32)>> {
    let mut out = Vec::new();
    let mut acc: Vec<(i32, i32)> = Vec::with_capacity(n);
    fn rec(
        n: usize,
        values: &[(i32, i32)],
        strict: &BTreeSet<u32>,
        acc: &mut Vec<(i32, i32)>,
        lower: Option<(i32, i32)>,
        lower_strict: bool,
        out: &mut Vec<Vec<(i32, i32)>>,
    ) {
        if acc.len() == n {
            out.push(acc.clone());
            return;
        }
        for &w in values {
            if let Some(prev) = lower {
                let ok = if lower_strict { w > prev } else { w >= prev };
                if !ok {
                    continue;
                }
            }
            acc.push(w);
            let strict_next = strict.contains(&(acc.len() as u32));
            rec(n, values, strict, acc, Some(w), strict_next, out);
            acc.pop();
        }
    }
    rec(n, values, strict, &mut acc, floor, floor.is_some(), &mut out);
    out
}

/// `Γ(π; XY)`: chains of pairs `(i, j) ∈ {1..N_x}×{1..N_y}` under
/// lexicographic order, strict at descents of `π`, each pair emitting
/// `x_i y_j`.
pub fn bipartite_gamma(
    pi: &Permutation,
    truncation_x: u32,
    truncation_y: u32,
) -> Result<Series, SeriesError> {
    let values: Vec<(i32, i32)> = (1..=truncation_x as i32)
        .flat_map(|i| (1..=truncation_y as i32).map(move |j| (i, j)))
        .collect();
    let mut series = Series::zero([(Alphabet::X, truncation_x), (Alphabet::Y, truncation_y)]);
    for chain in pair_chains(pi.degree() as usize, &values, &pi.descent_set(), None) {
        let mut m = Monomial::one();
        for (i, j) in chain {
            m.multiply_by(Variable::new(Alphabet::X, i as u32)?, 1)?;
            m.multiply_by(Variable::new(Alphabet::Y, j as u32)?, 1)?;
        }
        series.add_term(m, 1)?;
    }
    Ok(series)
}

/// The nonnegative part of the product chain `(±S)×(±T)` with
/// `S = {0..N_x}`, `T = {0..N_y}`: pairs with `a > 0`, or `a = 0, b ≥ 0`,
/// in lexicographic order. Negation acts componentwise, and these are
/// exactly the pairs `≥ (0,0)`.
fn nonnegative_pairs(truncation_x: u32, truncation_y: u32) -> Vec<(i32, i32)> {
    let (nx, ny) = (truncation_x as i32, truncation_y as i32);
    let mut out = Vec::new();
    for a in 0..=nx {
        for b in -ny..=ny {
            if a > 0 || b >= 0 {
                out.push((a, b));
            }
        }
    }
    out.sort();
    out
}

/// `Γ_B(π; XY)`: chains in the nonnegative product pairs, strict at type B
/// descents (position 0 strict against `(0,0)`), each pair `(a, b)`
/// emitting `x_a y_{|b|}`.
pub fn bipartite_gamma_b(
    pi: &SignedPermutation,
    truncation_x: u32,
    truncation_y: u32,
) -> Result<Series, SeriesError> {
    let values = nonnegative_pairs(truncation_x, truncation_y);
    let descents = pi.descent_set_b();
    let floor = descents.contains(&0).then_some((0, 0));
    let mut series = Series::zero([(Alphabet::X, truncation_x), (Alphabet::Y, truncation_y)]);
    for chain in pair_chains(pi.degree() as usize, &values, &descents, floor) {
        let mut m = Monomial::one();
        for (a, b) in chain {
            m.multiply_by(Variable::new(Alphabet::X, a as u32)?, 1)?;
            m.multiply_by(Variable::new(Alphabet::Y, b.unsigned_abs())?, 1)?;
        }
        series.add_term(m, 1)?;
    }
    Ok(series)
}

/// `Γ̄(π; XY)`: the same chains as [`bipartite_gamma_b`]; at position `s`
/// with sign `ε = sgn(π_s)` and mapped pair `(ξ, υ) = ε·(a, b)`, the
/// emitted letters are chosen by `G = ξ·sgn⁺(υ)` and `H = υ` (where
/// `sgn⁺(0) = +1`): the x-factor is `u_{|G|}` when `G < 0` else `v_{|G|}`,
/// and the y-factor is `uy_{|H|}` when `H < 0` else `vy_{|H|}`.
pub fn bipartite_gamma_signed(
    pi: &SignedPermutation,
    truncation_x: u32,
    truncation_y: u32,
) -> Result<Series, SeriesError> {
    let values = nonnegative_pairs(truncation_x, truncation_y);
    let descents = pi.descent_set_b();
    let floor = descents.contains(&0).then_some((0, 0));
    let window = pi.window();
    let mut series = Series::zero([
        (Alphabet::U, truncation_x),
        (Alphabet::V, truncation_x),
        (Alphabet::Uy, truncation_y),
        (Alphabet::Vy, truncation_y),
    ]);
    for chain in pair_chains(pi.degree() as usize, &values, &descents, floor) {
        let mut m = Monomial::one();
        for (s, (a, b)) in chain.into_iter().enumerate() {
            let eps: i32 = if window[s] < 0 { -1 } else { 1 };
            let (xi, upsilon) = (eps * a, eps * b);
            let sgn_plus = if upsilon >= 0 { 1 } else { -1 };
            let g = xi * sgn_plus;
            let h = upsilon;
            let x_letter = if g < 0 {
                Variable::new(Alphabet::U, g.unsigned_abs())?
            } else {
                Variable::new(Alphabet::V, g as u32)?
            };
            let y_letter = if h < 0 {
                Variable::new(Alphabet::Uy, h.unsigned_abs())?
            } else {
                Variable::new(Alphabet::Vy, h as u32)?
            };
            m.multiply_by(x_letter, 1)?;
            m.multiply_by(y_letter, 1)?;
        }
        series.add_term(m, 1)?;
    }
    Ok(series)
}

// ---------------------------------------------------------------------------
// Cross-module identity checks
// ---------------------------------------------------------------------------

/// Whether `Γ(π) = F_{C(π)}` holds exactly at the given truncation.
pub fn gamma_matches_fundamental(pi: &Permutation, truncation: u32) -> Result<bool, QSymError> {
    let lhs = gamma_permutation(pi, truncation)?;
    let rhs = pi.descent_composition().expand_fundamental(truncation)?;
    Ok(lhs == rhs)
}

/// Whether `Γ_B(π) = F_{B,C(π)}` holds exactly at the given truncation.
pub fn gamma_b_matches_fundamental(
    pi: &SignedPermutation,
    truncation: u32,
) -> Result<bool, QSymError> {
    let lhs = gamma_b_permutation(pi, truncation)?;
    let rhs = pi.descent_pseudo().expand_fundamental(truncation)?;
    Ok(lhs == rhs)
}

/// Whether `Γ̄(π) = F̄_{sC(π)}` holds exactly at the given truncation.
pub fn gamma_signed_matches_fundamental(
    pi: &SignedPermutation,
    truncation: u32,
) -> Result<bool, QSymError> {
    let lhs = gamma_signed(pi, truncation)?;
    let rhs = pi.signed_descent_composition().expand_fundamental(truncation)?;
    Ok(lhs == rhs)
}
