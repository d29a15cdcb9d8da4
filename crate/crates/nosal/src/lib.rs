//! Spectral analysis toolkit for graphs whose spectral radius exceeds the
//! square root of their edge count.
//!
//! An m-edge graph with `lambda(G) > sqrt(m)` is called *Nosal* here. Such
//! graphs are forced to contain large books, quadratically many 4-cycles, and
//! a host of related structures. This crate provides:
//!
//! * [`graph`] — bitset-row graphs, elementary queries, edge-list text I/O;
//! * [`codec`] — a bit-exact graph6 encoder/decoder;
//! * [`spectral`] — spectral radius with Perron vector and an exact rational
//!   lower-bound witness, rigorous Nosal certification, dense spectra, exact
//!   walk traces, and the signless Laplacian radius;
//! * [`counting`] — exact counts of books, joints, cliques, 4-cycles, kites,
//!   triangular edges, chordal lower bounds and more, with independent
//!   cross-checking methods;
//! * [`constructions`] — deterministic generators for the extremal families,
//!   each shipping its predicted statistics for self-checking;
//! * [`weights`] — Perron-derived vertex/edge weightings, weighted witness
//!   edges, and the seeded random blowup sampler;
//! * [`dichotomy`] — the constructive bipartite-or-small-degree structure
//!   decomposition, degree and degree-power margin checks, the
//!   universal-vertex shift, and a quadratic-form matrix check;
//! * [`search`] — simulated annealing over fixed-edge-budget graph space with
//!   warm-started spectral constraint checks;
//! * [`harness`] — claim-by-claim verification suites, summary tables, and
//!   the report formats used by the CLI.
//!
//! The `examples/` directory of this crate demonstrates each capability as a
//! runnable program; the thin `nosal` binary exposes the same entry points as
//! subcommands.

pub mod codec;
pub mod constructions;
pub mod counting;
pub mod dichotomy;
pub mod graph;
pub mod harness;
pub mod search;
pub mod spectral;
pub mod weights;

pub use graph::{from_edge_list, Bipartiteness, EdgeListGraph, Graph};
pub use spectral::{NosalVerdict, SpectralCertificate};
