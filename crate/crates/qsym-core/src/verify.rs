//! The verification suite: each check exercises one of the library's
//! headline identities at fixed desk-scale sizes, exactly (integer/series
//! equality, no tolerance).
//!
//! [`default_suite`] runs everything that finishes in seconds;
//! [`slow_suite`] holds the larger optional tier. Both are used by the CLI
//! `verify` verb and by the acceptance tests.

use thiserror::Error;

use crate::combinatorics::{
    CombinatoricsError, Composition, IndexFamily, PseudoComposition, SignedComposition,
};
use crate::descent_algebra::{
    class_sum, compute_structure_constants, representative_dependence, verify_closure, ClassIndex,
    DegreeCaps, DescentAlgebraError,
};
use crate::groups::{GroupElement, GroupError, Permutation, SignedPermutation};
use crate::ppartition::{
    bipartite_gamma, bipartite_gamma_b, bipartite_gamma_signed, gamma_b_matches_fundamental,
    gamma_b_permutation, gamma_matches_fundamental, gamma_permutation, gamma_signed,
    gamma_signed_matches_fundamental, PosetError,
};
use crate::qsym::{collapse_to_type_b, BasisKind, QSymError, QSymIndex, QSymVector};
use crate::series::{Alphabet, Monomial, Series, SeriesError, Variable};

/// Any error surfaced while running a verification check (these indicate a
/// broken setup, not a failed identity — failed identities set
/// `Check::passed = false`).
#[derive(Debug, Error)]
pub enum VerifyError {
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error(transparent)]
    Combinatorics(#[from] CombinatoricsError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    QSym(#[from] QSymError),
    #[error(transparent)]
    Algebra(#[from] DescentAlgebraError),
    #[error(transparent)]
    Poset(#[from] PosetError),
}

/// Outcome of one named identity check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn pass(name: &'static str, detail: String) -> Check {
        Check { name, passed: true, detail }
    }

    fn fail(name: &'static str, detail: String) -> Check {
        Check { name, passed: false, detail }
    }
}

/// `Γ(π) = F_{C(π)}` for every `π ∈ S_n`, `n ≤ 5`, at truncation 6.
pub fn check_gamma_fundamental_a() -> Result<Check, VerifyError> {
    const NAME: &str = "gamma-fundamental-A";
    let truncation = 6;
    let mut checked = 0usize;
    for n in 1..=5 {
        for pi in Permutation::enumerate(n) {
            if !gamma_matches_fundamental(&pi, truncation)? {
                return Ok(Check::fail(NAME, format!("mismatch at pi = {pi}, N = {truncation}")));
            }
            checked += 1;
        }
    }
    Ok(Check::pass(NAME, format!("{checked} permutations, degrees 1..=5, N = {truncation}")))
}

/// `Γ_B(π) = F_{B,C(π)}` and `Γ̄(π) = F̄_{sC(π)}` for every `π ∈ B_n`,
/// `n ≤ 3`, truncation 4 — plus the two worked examples at `π = (−3,2,−1)`
/// rebuilt term-for-term from their closed forms.
pub fn check_gamma_fundamental_b_s() -> Result<Check, VerifyError> {
    const NAME: &str = "gamma-fundamental-B-S";
    let truncation = 4;
    let mut checked = 0usize;
    for n in 1..=3 {
        for pi in SignedPermutation::enumerate(n) {
            if !gamma_b_matches_fundamental(&pi, truncation)? {
                return Ok(Check::fail(NAME, format!("flavor B mismatch at pi = {pi}")));
            }
            if !gamma_signed_matches_fundamental(&pi, truncation)? {
                return Ok(Check::fail(NAME, format!("flavor S mismatch at pi = {pi}")));
            }
            checked += 1;
        }
    }

    // Worked example: Γ_B((−3,2,−1)) = Σ_{0<i≤j<k≤4} x_i x_j x_k.
    let pi: SignedPermutation = "-3,2,-1".parse()?;
    let mut expected_b = Series::zero([(Alphabet::X, truncation)]);
    for i in 1..=truncation {
        for j in i..=truncation {
            for k in j + 1..=truncation {
                let m = Monomial::from_pairs([
                    (Variable::new(Alphabet::X, i)?, 1),
                    (Variable::new(Alphabet::X, j)?, 1),
                    (Variable::new(Alphabet::X, k)?, 1),
                ])?;
                expected_b.add_term(m, 1)?;
            }
        }
    }
    if gamma_b_permutation(&pi, truncation)? != expected_b {
        return Ok(Check::fail(NAME, "worked flavor B example mismatch".to_owned()));
    }

    // Worked example: Γ̄((−3,2,−1)) = Σ_{0<i≤j<k≤4} u_i v_j u_k.
    let mut expected_s =
        Series::zero([(Alphabet::U, truncation), (Alphabet::V, truncation)]);
    for i in 1..=truncation {
        for j in i..=truncation {
            for k in j + 1..=truncation {
                let m = Monomial::from_pairs([
                    (Variable::new(Alphabet::U, i)?, 1),
                    (Variable::new(Alphabet::V, j)?, 1),
                    (Variable::new(Alphabet::U, k)?, 1),
                ])?;
                expected_s.add_term(m, 1)?;
            }
        }
    }
    if gamma_signed(&pi, truncation)? != expected_s {
        return Ok(Check::fail(NAME, "worked flavor S example mismatch".to_owned()));
    }

    Ok(Check::pass(
        NAME,
        format!("{checked} signed permutations, degrees 1..=3, N = {truncation}, plus 2 worked examples"),
    ))
}

/// The bipartite factorization for flavor A:
/// `Γ(π; XY) = Σ_{σ∘τ=π} Γ(τ; X)·Γ(σ; Y)` for all `π ∈ S_n`, `n ≤ 4`,
/// at `N_x = N_y = 3`.
pub fn check_bipartite_a() -> Result<Check, VerifyError> {
    const NAME: &str = "bipartite-factorization-A";
    let (nx, ny) = (3, 3);
    let mut checked = 0usize;
    for n in 1..=4 {
        let group = Permutation::enumerate(n);
        for pi in &group {
            let lhs = bipartite_gamma(pi, nx, ny)?;
            let mut rhs = Series::zero([(Alphabet::X, nx), (Alphabet::Y, ny)]);
            for sigma in &group {
                let tau = sigma.inverse().compose(pi)?;
                let x_part = gamma_permutation(&tau, nx)?;
                let y_part = gamma_permutation(sigma, ny)?.rename_alphabet(Alphabet::X, Alphabet::Y)?;
                rhs = rhs.plus(&x_part.times(&y_part)?)?;
            }
            if lhs != rhs {
                return Ok(Check::fail(NAME, format!("mismatch at pi = {pi}, degree {n}")));
            }
            checked += 1;
        }
    }
    Ok(Check::pass(NAME, format!("{checked} permutations, degrees 1..=4, Nx = Ny = 3")))
}

fn bipartite_b_s_at_degree(n: u32, nx: u32, ny: u32) -> Result<Option<String>, VerifyError> {
    let group = SignedPermutation::enumerate(n);
    for pi in &group {
        let lhs_b = bipartite_gamma_b(pi, nx, ny)?;
        let lhs_s = bipartite_gamma_signed(pi, nx, ny)?;
        let mut rhs_b = Series::zero([(Alphabet::X, nx), (Alphabet::Y, ny)]);
        let mut rhs_s = Series::zero([
            (Alphabet::U, nx),
            (Alphabet::V, nx),
            (Alphabet::Uy, ny),
            (Alphabet::Vy, ny),
        ]);
        for sigma in &group {
            let tau = sigma.inverse().compose(pi)?;
            let xb = gamma_b_permutation(&tau, nx)?;
            let yb = gamma_b_permutation(sigma, ny)?.rename_alphabet(Alphabet::X, Alphabet::Y)?;
            rhs_b = rhs_b.plus(&xb.times(&yb)?)?;
            let xs = gamma_signed(&tau, nx)?;
            let ys = gamma_signed(sigma, ny)?
                .rename_alphabet(Alphabet::U, Alphabet::Uy)?
                .rename_alphabet(Alphabet::V, Alphabet::Vy)?;
            rhs_s = rhs_s.plus(&xs.times(&ys)?)?;
        }
        if lhs_b != rhs_b {
            return Ok(Some(format!("flavor B mismatch at pi = {pi}, degree {n}")));
        }
        if lhs_s != rhs_s {
            return Ok(Some(format!("flavor S mismatch at pi = {pi}, degree {n}")));
        }
    }
    Ok(None)
}

/// The bipartite factorization for flavors B and S at `n ≤ 2`,
/// `N_x = N_y = 2`.
pub fn check_bipartite_b_s() -> Result<Check, VerifyError> {
    const NAME: &str = "bipartite-factorization-B-S";
    let mut checked = 0usize;
    for n in 1..=2 {
        if let Some(detail) = bipartite_b_s_at_degree(n, 2, 2)? {
            return Ok(Check::fail(NAME, detail));
        }
        checked += SignedPermutation::enumerate(n).len();
    }
    Ok(Check::pass(NAME, format!("{checked} signed permutations, degrees 1..=2, Nx = Ny = 2")))
}

/// The slow tier of the bipartite factorization: degree 3, both flavors.
pub fn check_bipartite_b_s_degree3() -> Result<Check, VerifyError> {
    const NAME: &str = "bipartite-factorization-B-S-degree-3";
    if let Some(detail) = bipartite_b_s_at_degree(3, 2, 2)? {
        return Ok(Check::fail(NAME, detail));
    }
    Ok(Check::pass(NAME, "48 signed permutations, degree 3, Nx = Ny = 2".to_owned()))
}

/// Closure of all three descent algebras with the expected dimensions:
/// flavor A at `n ≤ 5` (dimension `2^{n−1}`), B at `n ≤ 4` (`2^n`), and S
/// at `n ≤ 4` (`2·3^{n−1}`), each with zero residue on every pair.
pub fn check_closure_dimensions() -> Result<Check, VerifyError> {
    const NAME: &str = "closure-dimensions";
    let caps = DegreeCaps::default();
    let mut pairs = 0usize;
    for n in 1..=5u32 {
        let report = verify_closure::<Composition>(n, &caps)?;
        if !report.passed() || report.dimension != 1usize << (n - 1) {
            return Ok(Check::fail(NAME, format!("flavor A failed at degree {n}")));
        }
        pairs += report.pairs_checked;
    }
    for n in 1..=4u32 {
        let report = verify_closure::<PseudoComposition>(n, &caps)?;
        if !report.passed() || report.dimension != 1usize << n {
            return Ok(Check::fail(NAME, format!("flavor B failed at degree {n}")));
        }
        pairs += report.pairs_checked;
        let report = verify_closure::<SignedComposition>(n, &caps)?;
        if !report.passed() || report.dimension != 2 * 3usize.pow(n - 1) {
            return Ok(Check::fail(NAME, format!("flavor S failed at degree {n}")));
        }
        pairs += report.pairs_checked;
    }
    Ok(Check::pass(NAME, format!("{pairs} class-sum products decomposed with zero residue")))
}

/// Structure-constant counts recomputed from every representative of every
/// class: flavor A exhaustively for `n ≤ 4`, flavors B and S for `n ≤ 3`.
pub fn check_representative_independence() -> Result<Check, VerifyError> {
    const NAME: &str = "representative-independence";
    let caps = DegreeCaps::default();
    for n in 1..=4u32 {
        if !representative_dependence::<Composition>(n, &caps)?.is_empty() {
            return Ok(Check::fail(NAME, format!("flavor A dependence at degree {n}")));
        }
    }
    for n in 1..=3u32 {
        if !representative_dependence::<PseudoComposition>(n, &caps)?.is_empty() {
            return Ok(Check::fail(NAME, format!("flavor B dependence at degree {n}")));
        }
        if !representative_dependence::<SignedComposition>(n, &caps)?.is_empty() {
            return Ok(Check::fail(NAME, format!("flavor S dependence at degree {n}")));
        }
    }
    Ok(Check::pass(NAME, "A degrees 1..=4; B and S degrees 1..=3, all representatives".to_owned()))
}

fn round_trip_flavor<I: QSymIndex>(max_degree: u32) -> Result<Option<String>, VerifyError> {
    for n in 1..=max_degree {
        for index in I::enumerate(n)? {
            for basis in [BasisKind::Monomial, BasisKind::Fundamental] {
                let unit = QSymVector::unit(index.clone(), basis)?;
                let other = match basis {
                    BasisKind::Monomial => BasisKind::Fundamental,
                    BasisKind::Fundamental => BasisKind::Monomial,
                };
                let round = unit.change_basis(other)?.change_basis(basis)?;
                if round != unit {
                    return Ok(Some(format!(
                        "round trip failed for {} index {index} at degree {n}",
                        basis.name()
                    )));
                }
            }
        }
    }
    Ok(None)
}

/// Basis-change round trips `F→M→F` and `M→F→M` on every basis vector of
/// every flavor up to degree 6, plus the explicit expansion
/// `F_{(2,1)} = M_{(2,1)} + M_{(1,1,1)}`.
pub fn check_basis_round_trip() -> Result<Check, VerifyError> {
    const NAME: &str = "basis-round-trip";
    if let Some(detail) = round_trip_flavor::<Composition>(6)? {
        return Ok(Check::fail(NAME, format!("flavor A: {detail}")));
    }
    if let Some(detail) = round_trip_flavor::<PseudoComposition>(6)? {
        return Ok(Check::fail(NAME, format!("flavor B: {detail}")));
    }
    if let Some(detail) = round_trip_flavor::<SignedComposition>(6)? {
        return Ok(Check::fail(NAME, format!("flavor S: {detail}")));
    }

    let f21 = QSymVector::unit("2,1".parse::<Composition>()?, BasisKind::Fundamental)?;
    let in_monomial = f21.change_basis(BasisKind::Monomial)?;
    let mut expected = QSymVector::zero(3, BasisKind::Monomial)?;
    expected.add_term("2,1".parse()?, 1)?;
    expected.add_term("1,1,1".parse()?, 1)?;
    if in_monomial != expected {
        return Ok(Check::fail(NAME, "F(2,1) did not expand to M(2,1) + M(1,1,1)".to_owned()));
    }
    Ok(Check::pass(NAME, "all basis vectors, all flavors, degrees 1..=6".to_owned()))
}

/// Index counts (`2^{n−1}`, `2^n`, `2·3^{n−1}`) up to degree 10, and the
/// partition of each group into descent classes (sizes sum to the group
/// order, every class nonempty) at the default caps.
pub fn check_enumeration_counts() -> Result<Check, VerifyError> {
    const NAME: &str = "enumeration-counts";
    for n in 1..=10u32 {
        if Composition::enumerate(n)?.len() != 1usize << (n - 1) {
            return Ok(Check::fail(NAME, format!("flavor A count wrong at degree {n}")));
        }
        if PseudoComposition::enumerate(n)?.len() != 1usize << n {
            return Ok(Check::fail(NAME, format!("flavor B count wrong at degree {n}")));
        }
        if SignedComposition::enumerate(n)?.len() != 2 * 3usize.pow(n - 1) {
            return Ok(Check::fail(NAME, format!("flavor S count wrong at degree {n}")));
        }
    }

    fn classes_partition<C: ClassIndex>(n: u32) -> Result<Option<String>, VerifyError> {
        let caps = DegreeCaps { a: n, b: n, s: n };
        let mut total = 0u64;
        for index in C::enumerate(n)? {
            let size = class_sum(&index, &caps)?.term_count() as u64;
            if size == 0 {
                return Ok(Some(format!("empty class {index} at degree {n}")));
            }
            total += size;
        }
        if total != C::Elem::group_order(n) {
            return Ok(Some(format!(
                "class sizes sum to {total}, group order is {} at degree {n}",
                C::Elem::group_order(n)
            )));
        }
        Ok(None)
    }
    for n in 1..=5u32 {
        if let Some(detail) = classes_partition::<Composition>(n)? {
            return Ok(Check::fail(NAME, format!("flavor A: {detail}")));
        }
    }
    for n in 1..=4u32 {
        if let Some(detail) = classes_partition::<PseudoComposition>(n)? {
            return Ok(Check::fail(NAME, format!("flavor B: {detail}")));
        }
        if let Some(detail) = classes_partition::<SignedComposition>(n)? {
            return Ok(Check::fail(NAME, format!("flavor S: {detail}")));
        }
    }
    Ok(Check::pass(
        NAME,
        "index counts to degree 10; class partitions A to 5, B and S to 4".to_owned(),
    ))
}

fn duality_flavor<C: ClassIndex>(max_degree: u32) -> Result<Option<String>, VerifyError> {
    let caps = DegreeCaps::default();
    for n in 1..=max_degree {
        let table = compute_structure_constants::<C>(n, &caps)?;
        let order = C::enumerate(n)?;
        let group_order = C::Elem::group_order(n) as i64;
        for alpha in &order {
            for beta in &order {
                let product = table.inner_product(beta, alpha)?;
                let mut conservation = 0i64;
                for gamma in &order {
                    if product.coeff(gamma) != table.entry(alpha, beta, gamma) {
                        return Ok(Some(format!(
                            "coefficient mismatch at ({alpha}; {beta}; {gamma}), degree {n}"
                        )));
                    }
                    conservation += table.entry(alpha, beta, gamma) * table.class_size(gamma);
                }
                if conservation != table.class_size(alpha) * table.class_size(beta) {
                    return Ok(Some(format!(
                        "pair-count conservation failed at ({alpha}; {beta}), degree {n}"
                    )));
                }
            }
        }
        for gamma in &order {
            let total: i64 = table.inner_coproduct(gamma)?.iter().map(|(_, _, c)| c).sum();
            if total != group_order {
                return Ok(Some(format!(
                    "coproduct coefficients of {gamma} sum to {total}, not {group_order}, degree {n}"
                )));
            }
        }
    }
    Ok(None)
}

/// Product and coproduct coefficients against the brute-force table:
/// entry-for-entry equality, pair-count conservation
/// `Σ_γ table(α,β,γ)·|class γ| = |class α|·|class β|`, and coproduct rows
/// summing to the group order — all flavors at the default caps.
pub fn check_duality() -> Result<Check, VerifyError> {
    const NAME: &str = "duality";
    let caps = DegreeCaps::default();
    if let Some(detail) = duality_flavor::<Composition>(caps.a)? {
        return Ok(Check::fail(NAME, format!("flavor A: {detail}")));
    }
    if let Some(detail) = duality_flavor::<PseudoComposition>(caps.b)? {
        return Ok(Check::fail(NAME, format!("flavor B: {detail}")));
    }
    if let Some(detail) = duality_flavor::<SignedComposition>(caps.s)? {
        return Ok(Check::fail(NAME, format!("flavor S: {detail}")));
    }
    Ok(Check::pass(NAME, "A degrees 1..=6; B and S degrees 1..=4".to_owned()))
}

/// Setting `u = v` in each signed fundamental expansion yields the type B
/// fundamental expansion of the collapsed pseudo-composition (the one cut
/// at the guaranteed descents), all signed compositions `n ≤ 4` at
/// truncation 4.
pub fn check_specialization() -> Result<Check, VerifyError> {
    const NAME: &str = "specialization-u-equals-v";
    let truncation = 4;
    let mut checked = 0usize;
    for n in 1..=4u32 {
        for alpha in SignedComposition::enumerate(n)? {
            let specialized = alpha
                .expand_fundamental(truncation)?
                .substitute_u_equals_v()?
                .rename_alphabet(Alphabet::V, Alphabet::X)?;
            let collapsed = collapse_to_type_b(&alpha).expand_fundamental(truncation)?;
            if specialized != collapsed {
                return Ok(Check::fail(NAME, format!("mismatch at alpha = {alpha}, degree {n}")));
            }
            checked += 1;
        }
    }
    Ok(Check::pass(NAME, format!("{checked} signed compositions, degrees 1..=4, N = {truncation}")))
}

/// Every fast check, in acceptance order.
pub fn default_suite() -> Result<Vec<Check>, VerifyError> {
    Ok(vec![
        check_gamma_fundamental_a()?,
        check_gamma_fundamental_b_s()?,
        check_bipartite_a()?,
        check_bipartite_b_s()?,
        check_closure_dimensions()?,
        check_representative_independence()?,
        check_basis_round_trip()?,
        check_enumeration_counts()?,
        check_duality()?,
        check_specialization()?,
    ])
}

/// The optional larger tier.
pub fn slow_suite() -> Result<Vec<Check>, VerifyError> {
    Ok(vec![check_bipartite_b_s_degree3()?])
}
