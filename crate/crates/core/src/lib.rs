//! Automorphisms of tiled orders over a discrete valuation ring, computed
//! from exponent matrices.
//!
//! A tiled order `Λ = (P^{α_ij})` is handled entirely through its exponent
//! matrix `α`. From it the crate builds the link graph `Q(Λ)` and the valued
//! quiver, enumerates `Aut(Q(Λ))`, decides which automorphisms lift to
//! `Λ` and with which monomial matrix, assembles the group `O_Λ` of lifts
//! (so that `Aut_R(Λ) = Inn(Λ) ⋊ O_Λ`), and tests tiled orders for
//! isomorphism by monomial conjugation.
//!
//! Permutations compose left to right throughout; see [`perm`].
//!
//! With the default `parallel` feature, automorphism enumeration, lifting and
//! the isomorphism search fan out over rayon. Outputs are identical with the
//! feature disabled and for any thread count.

pub mod error;
pub mod exponent;
pub mod lifting;
mod par;
pub mod perm;
pub mod quiver;
pub mod random;
pub mod report;

pub use error::{Error, Result};
pub use exponent::{hereditary_order, ExponentMatrix, LatticeMatrix};
pub use lifting::{
    compose_lifts, is_liftable, lift_matrix, liftable_subgroup, orders_isomorphic,
    preserves_valuation, solve_lift_system, LiftSolution, LiftVector, LiftableGroup, MonomialLift,
    MonomialMatrix, PiStyle,
};
pub use par::current_num_threads;
pub use perm::{quiver_automorphisms, Perm, DEFAULT_MAX_N};
pub use quiver::{link_graph, link_graph_via_radical, valued_quiver, Quiver, ValuedQuiver};
pub use report::{aut_structure_report, StructureReport};
