//! Exact computer algebra for quasisymmetric functions and descent algebras.
//!
//! The crate implements three parallel "flavors" of the same story:
//!
//! * **A** — ordinary quasisymmetric functions indexed by compositions,
//!   with descent classes of the symmetric group;
//! * **B** — the type B variant indexed by pseudo-compositions (first part
//!   may be zero), with descent classes of signed permutations that may
//!   descend in position 0;
//! * **S** — the signed variant indexed by signed compositions, whose
//!   expansions use a two-letter alphabet (`u` for negative values, `v`
//!   for nonnegative ones).
//!
//! For each flavor there are monomial and fundamental basis expansions into
//! exact integer polynomials ([`series`]), generating functions of labeled
//! posets computed by direct enumeration ([`ppartition`]), and descent-class
//! sums in the group algebra together with their brute-force structure
//! constants ([`descent_algebra`]). The [`verify`] module cross-checks the
//! two computation routes against each other; nothing in this crate is
//! floating point and every identity is tested for exact equality.
//!
//! Fixed conventions, used everywhere:
//!
//! * Group elements compose as `(σ∘τ)(i) = σ(τ(i))`: the right factor acts
//!   first. Structure constants `table(α, β, γ)` count pairs `(σ, τ)` with
//!   descent indices `(α, β)` and `σ∘τ` equal to the class representative
//!   of `γ`, so class sums satisfy `u_α ⋆ u_β = Σ_γ table(α, β, γ) u_γ`.
//! * Index families enumerate in descending lexicographic order on part
//!   tuples.
//! * Truncations are explicit: a series knows the bound `N` of every
//!   alphabet it uses, and mixing bounds is an error, not a coercion.

pub mod combinatorics;
pub mod descent_algebra;
pub mod groups;
pub mod ppartition;
pub mod qsym;
pub mod series;
pub mod verify;
