//! Exact-arithmetic analysis of equilibrium components in two-player
//! extensive-form games.
//!
//! The crate enumerates Nash equilibrium components of finite two-player
//! games with perfect recall, computes their fixed-point indices, builds
//! the excluded/included games and supporting polytopes associated with an
//! equilibrium outcome, and decides hyperstability through the index
//! factorization. Every number in the pipeline is a [`Rational`]; there is
//! no floating point anywhere.
//!
//! Module map:
//! - [`exactcore`]: rationals, exact simplex LP, convex-hull membership,
//!   polytope dimension.
//! - [`gametree`]: extensive forms, outcomes, normal forms, Kuhn transport
//!   between mixed and behavior strategies.
//! - [`normalform`]: bimatrix games, equivalence, reduction, duplicates,
//!   payoff perturbations.
//! - [`equilibria`]: extreme equilibrium enumeration, maximal Nash subsets,
//!   connected components.
//! - [`index`]: Shapley's formula and component/region index computation.
//! - [`excluded`]: on/off-path analysis, excluded games, supporting
//!   polytopes, genericity checks, the hyperstability factorization.
//! - [`perturblab`]: the Nature-embedding construction and equilibrium-free
//!   certification around a target component.
//! - [`cli`]: game file format, analysis pipeline, reports, bundled corpus.
//!
//! [`Rational`]: exactcore::Rational

pub mod cli;
pub mod equilibria;
pub mod exactcore;
pub mod excluded;
pub mod gametree;
pub mod index;
pub mod normalform;
pub mod perturblab;

pub use exactcore::Rational;
