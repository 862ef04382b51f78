//! Steiner–Wiener indices of small graphs: exact computation, nested-star
//! constructions that hit prescribed values, exhaustive scans for values no
//! graph attains, and exact counters for the binomial-sum equations behind
//! the construction.

pub mod arith;
pub mod binomial_rep;
pub mod canon;
pub mod error;
pub mod graph;
pub mod index;
pub mod inverse;
pub mod nested_star;
pub mod scanner;
pub mod steiner;

pub use binomial_rep::{
    count_local, count_representations, represent, BoundRule, CountSpec, LocalCountSpec, Representation,
};
pub use error::{Error, Result};
pub use graph::Graph;
pub use index::{nested_star_closed_form, star_closed_form, steiner_wiener, steiner_wiener_fast, SwValue};
pub use inverse::{feasible_interval, invert, verify, InverseCertificate};
pub use nested_star::NestedStarSpec;
pub use scanner::{scan, Corpus, ScanReport};
pub use steiner::{steiner_distance, steiner_distance_oracle, TerminalSet};
