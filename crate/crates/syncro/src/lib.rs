//! Synchronization analysis for deterministic complete semi-automata.
//!
//! A word `w` synchronizes an automaton when it sends every state to one and
//! the same state. This crate answers, exactly or by certificate, the
//! questions that come up around that notion:
//!
//! * shortest reset words and the subset graph they live in ([`power`]);
//! * the state complexity of the language of all synchronizing words, with
//!   `2^n - n` as the ceiling for an `n`-state automaton ([`power`]);
//! * complete reachability, i.e. whether every nonempty subset of states is
//!   an image of the full set ([`power`], with a certificate route in
//!   [`structure`] that needs no subset graph);
//! * structural criteria that prove the ceiling is attained without ever
//!   building the exponential subset graph ([`criteria`]);
//! * named example families sitting at the extremes ([`families`]);
//! * brute-force reference implementations to cross-check all of the above
//!   ([`oracle`]).
//!
//! ```
//! use syncro::families::{build, Family};
//! use syncro::power::{shortest_reset, syn_state_complexity, DEFAULT_CAP};
//!
//! let a = build(Family::Cerny, 4)?;
//! let reset = shortest_reset(&a, DEFAULT_CAP)?.expect("synchronizing");
//! assert_eq!(reset.len(), 9);
//! assert_eq!(syn_state_complexity(&a, DEFAULT_CAP)?, 2usize.pow(4) - 4);
//! # Ok::<(), syncro::Error>(())
//! ```

pub mod automaton;
pub mod criteria;
pub mod error;
pub mod families;
pub mod oracle;
pub mod power;
pub mod state_set;
pub mod structure;
pub mod transform;
mod util;

pub use automaton::{SemiAutomaton, Word};
pub use error::Error;
pub use state_set::StateSet;
pub use transform::{Transformation, TransformationProps};
