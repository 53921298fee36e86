//! Minimum `(2,k)`-connectivity augmentation of capacitated graphs.
//!
//! A graph is `(2,k)`-connected when it has at least three vertices, is
//! `2k`-edge-connected, and stays `k`-edge-connected after deleting any one
//! vertex. [`augment`] adds the least total capacity that achieves this. It
//! attaches an external vertex `s` with a minimal even extension, splits off
//! all `s`-edges in admissible pairs, and deletes `s`.
//!
//! ```
//! use conn2k::{augment, Algo, AssertLevel, CapGraph};
//!
//! let path = CapGraph::from_edges(3, [(0, 1, 1), (1, 2, 1)]).unwrap();
//! let (augmented, result) = augment(&path, 2, Algo::Fast, AssertLevel::Off).unwrap();
//! assert_eq!(result.total, 4);
//! assert_eq!(augmented.total_capacity(), 6);
//! ```

pub mod augment;
pub mod bench;
pub mod biset;
pub mod check;
pub mod conncheck;
pub mod error;
pub mod extension;
pub mod gen;
pub mod graph;
pub mod io;
pub mod mincut;
pub mod oracle;
pub mod set;
pub mod splitoff;

pub use augment::{augment, fast_complete_split, naive_complete_split, Algo, AugmentationResult, SplitStats};
pub use biset::{blocks, f_value, is_horrifying, Biset};
pub use check::AssertLevel;
pub use conncheck::{is_2k_conn_in_v, is_kec_in_v, is_pair_admissible, u_set, ConnVerdict, Witness};
pub use error::{Error, Result};
pub use extension::{minimal_even_extension, minimal_even_extension_checked, Extension};
pub use graph::{CapGraph, Capacity, StarGraph, VertexId};
pub use io::{parse_instance, write_instance};
pub use mincut::{global_min_cut, restricted_min_cut, CutResult};
pub use set::VertexSet;
pub use splitoff::{max_reduce_2k, max_reduce_kec, max_split_2k, max_split_kec, SplitOutcome};
