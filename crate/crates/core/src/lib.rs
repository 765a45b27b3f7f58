//! Multiple entropy measures (MEMS) for multipartite quantum states.
//!
//! For an `N`-site pure state the MEMS vector is `[S_1, ..., S_m]`,
//! `m = floor(N/2)`, where `S_i` is the geometric mean of the von Neumann
//! entropies (in bits) of every `i`-site reduced density matrix. The crate
//! covers:
//!
//! - [`state`]: pure states over mixed-dimension sites, ensembles
//! - [`subsets`]: lexicographic subset enumeration
//! - [`eigen`], [`entropy`]: reduced density matrices and their entropies
//! - [`mems`]: the MEMS vector, entropy product, closed forms, the LOCC
//!   comparator and ensemble averages
//! - [`figures`]: family sweeps and their CSV form
//! - [`library`]: GHZ, W, cluster, Bell products, M4 and random states
//! - [`io`]: JSON state and ensemble files
//! - [`search`]: hill-climbing search for states maximizing one component

pub mod eigen;
pub mod entropy;
pub mod error;
pub mod figures;
pub mod io;
pub mod library;
pub mod mems;
pub mod search;
pub mod state;
pub mod subsets;

pub use entropy::{reduced_density_matrix, subset_entropy, von_neumann_entropy, DensityMatrix};
pub use error::{MemsError, Result};
pub use mems::{
    cluster_s2_closed_form, ensemble_mems, entropy_product, mems_vector, mems_vector_detailed,
    s_component, transform_forbidden, w_state_closed_form, ComparisonVerdict, MemsVector,
};
pub use state::{Ensemble, PureState};
pub use subsets::{subsets_of_size, SiteSubset};

pub use num_complex::Complex64;
