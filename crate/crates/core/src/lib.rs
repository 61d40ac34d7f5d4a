//! Crystal graphs of level-`d` Fock spaces in Uglov's and Kleshchev's
//! realizations, the isomorphism between them, the 2-core/2-quotient
//! calculus with symbols and the `a`-function, and the predicted
//! Harish-Chandra branching graphs of unitary groups built from them.
//!
//! ```
//! use fock_crystal::{generate_component, FockContext, Realization};
//!
//! let ctx = FockContext::new(3, "-1,0".parse().unwrap(), Realization::Uglov).unwrap();
//! let g = generate_component(&ctx, 3);
//! assert_eq!(g.rank_counts(), vec![1, 2, 4, 6]);
//! ```

pub mod abacus;
pub mod cli;
pub mod crystal;
pub mod error;
pub mod fixtures;
pub mod flotw;
pub mod graph;
pub mod hc;
pub mod io;
pub mod isomorphism;
pub mod multipartition;
pub mod partition;
pub mod symbol;

pub use abacus::{beta_set, core, is_e_core, twisted_two_quotient, two_core, two_quotient, BetaSet, TriangularCore};
pub use crystal::{orders_coincide_bound, Charge, FockContext, Letter, Node, Realization, Signature};
pub use error::{Error, Result};
pub use flotw::is_flotw;
pub use graph::{diff_graphs, generate_component, CrystalGraph, Edge, GraphDiff, VertexLabel};
pub use hc::{build_hc_graph, charge_from_series, hecke_parameters, HcVertex, HeckeParameters, SeriesParams};
pub use isomorphism::{crystal_isomorphism_phi, phi_table};
pub use multipartition::{bipartitions_of, multipartitions_of, Bipartition, Multipartition};
pub use partition::{dominance_less, n_function, partitions_of, Partition};
pub use symbol::{a_function, n_bar, phi_t, symbol, HalfInt, Symbol};
