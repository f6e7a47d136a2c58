//! Associahedra three ways, and the tilings they glue into.
//!
//! This crate builds the face poset of the associahedron from bracketings of
//! a path, rebuilds it by truncating simplices and triple products of
//! simplices, and verifies the routes agree. On top of that it glues labeled
//! associahedral tiles by twist moves into two cell complexes, the blown-up
//! real projective sphere and the compactified real moduli space of punctured
//! spheres, and checks at desk scale that the two complexes carry the same
//! cellulation (Kapranov's theorem), including Euler characteristics, surface
//! classification and right-angledness of the glued complexes.
//!
//! Modules:
//! - [`bracketings`]: bracketings of a path, the associahedron face poset.
//! - [`polytopes`]: simple polytopes as vertex-facet incidence; truncations.
//! - [`circle`]: bracketings of a circle with three fixed nodes; the cut
//!   bijection onto path bracketings.
//! - [`tiling`]: labeled diagrams, twist moves, glued cell complexes, the
//!   cellulation comparison.
//! - [`chambers`]: the numeric braid-arrangement chamber map.
//! - [`poset`]: graded posets and isomorphism search.
//!
//! Each major capability has a runnable example under `examples/`; a thin
//! command-line binary exposes the same pipelines as subcommands.

pub mod bracketings;
pub mod chambers;
pub mod circle;
pub mod config;
mod laminar;
pub mod polytopes;
pub mod poset;
pub mod tiling;
