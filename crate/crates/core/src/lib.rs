//! Parking-function-type monomial ideals of rooted multigraphs.
//!
//! A rooted multigraph `G` on `{0, 1, ..., n}` gives the G-parking function
//! ideal `M_G` and its k-skeleton subideals `M_G^(k)` in
//! `K[x_1, ..., x_n]`. This crate builds those ideals, counts their standard
//! monomials exactly (two independent ways), computes exact determinants of
//! the truncated Laplacian `L~_G` and signless Laplacian `Q~_G`, enumerates
//! spanning TU-subgraphs, and checks when `dim_K(R / M_G^(1)) = det Q~_G`.
//!
//! ```
//! use gparking::{Multigraph, verify::check_equality};
//!
//! let k4 = Multigraph::complete(3, 1, 1).unwrap();
//! let v = check_equality(&k4).unwrap();
//! assert!(v.equal);
//! assert_eq!(v.det_q, 20.into());
//! ```

pub mod cli;
pub mod enumeration;
pub mod error;
pub mod graph_file;
pub mod ideal;
pub mod matrix;
pub mod multigraph;
pub mod random;
pub mod skeleton;
pub mod verify;

pub use enumeration::{EdgeList, TuReport};
pub use error::{Error, Result};
pub use ideal::{Monomial, MonomialIdeal};
pub use matrix::{GnMatrix, JoinBlock, SymMatrix};
pub use multigraph::{Component, Multigraph};
