//! Exhaustive reference computations and seeded fixture generators.
//!
//! Everything here is exponential in the graph size and exists to check the
//! dynamic programs on small instances.

mod brute;
mod fixtures;

pub use brute::{brute_params, BRUTE_FORCE_LIMIT};
pub use fixtures::{gen_fixture, gen_join_normal_cw, Fixture, FixtureKind, FixtureSpec, FIXTURE_MAX_K};
