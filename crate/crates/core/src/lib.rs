//! Exact combinatorics of the components of the Shi variety in affine type A.
//!
//! The affine Weyl group of type Ã_n acts on the space of alcoves; sending an
//! element `w` to the vector of integers `k(w, α) = ⌊⟨w·p, α∨⟩⌋` over the
//! positive roots `α` (with `p` the barycenter of the fundamental alcove)
//! embeds the group into an integral variety. The irreducible components of
//! that variety are indexed by *admitted vectors*: integer vectors, zero on
//! the simple roots, whose coordinates satisfy a triangle-by-triangle pair of
//! inequalities. Everything here is integer arithmetic — no floats anywhere.
//!
//! What the crate provides, module by module:
//!
//! - [`perm`], [`root`], [`rootvec`], [`affine`]: permutations in one-line
//!   form, positive roots in a fixed lexicographic order, integer vectors
//!   indexed by those roots, and the affine Weyl group as pairs (translation,
//!   permutation).
//! - [`shi`]: the coefficient vector `k(w)` of an affine element and the
//!   *admitted part* that names the component an alcove lives on.
//! - [`components`]: admitted vectors, the classification of integral points
//!   onto components, and the backtracking enumeration of all `n!` components
//!   at rank `n`.
//! - [`phi`]: the representation of the affine group on coefficient vectors
//!   by affine integer maps with signed-permutation linear part, so that
//!   `F(w)` applied to `k(u)` is `k(wu)`.
//! - [`wedge`]: the same representation transported to formal wedge sums,
//!   where each simple reflection acts by relabeling minus one basis wedge.
//! - [`diamond`]: the induced action of the finite symmetric group on the
//!   set of components — a transposition acts by a window-counting closed
//!   form, a general permutation by factoring into transpositions, and both
//!   agree with transporting a canonical point through [`phi`].
//! - [`bijection`]: the equivariant bijection between components and the
//!   circular permutations of `n+1` points.
//! - [`poset`]: the cover order on components, its transport to the circular
//!   side, and deterministic DOT/JSON export.
//! - [`checks`]: a named battery of the defining properties, runnable at any
//!   rank with seeded randomness.

pub mod affine;
pub mod bijection;
pub mod checks;
pub mod components;
pub mod diamond;
pub mod error;
pub mod perm;
pub mod phi;
pub mod poset;
pub mod root;
pub mod rootvec;
pub mod shi;
pub mod wedge;

pub use affine::{affine_generators, generated_ball, AffineElement};
pub use bijection::{
    check_bijectivity, check_equivariance, check_equivariance_random, from_component,
    to_component, BijectionTable,
};
pub use checks::{run_all, run_single, CheckReport, CHECK_NAMES};
pub use components::{
    admitted_to_json, canonical_point, component_of, enumerate_admitted, is_admitted,
    AdmittedVector, IntegralPoint,
};
pub use diamond::{
    diamond_affine, diamond_closed_form, diamond_general, diamond_matrix, diamond_orbit,
    diamond_stabilizer, gamma_sum, simple_inversions_count, ReflectionWindow,
};
pub use error::{Error, Result};
pub use perm::{all_permutations, circular_permutations, Permutation};
pub use phi::{f_affine, f_permutation, f_reflection, f_word, AffineIntegerMap};
pub use poset::{
    build_component_poset, build_cycle_poset, check_poset_isomorphism, export_dot,
    ComponentPoset, CyclePoset,
};
pub use root::{num_positive_roots, positive_roots, root_index, PositiveRoot, RootLatticeVector};
pub use rootvec::RootVector;
pub use shi::{admitted_part, fundamental_barycenter, k_vector, AlcovePoint};
pub use wedge::{
    odot_closed_form, odot_generator, odot_permutation, odot_word, theta, theta_inv, WedgeElement,
};
