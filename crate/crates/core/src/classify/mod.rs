//! Closed-form predictions of `d_1`-choosability for joins, the Gallai-tree
//! description of `d_0`-choosability, and sweeps that check both against the
//! exhaustive search.

mod blocks;
mod joins;
mod sweep;

pub use blocks::{
    block_decomposition, find_even_cycle_with_at_most_one_chord, has_even_cycle_with_at_most_one_chord,
    is_gallai_tree, BlockDecomposition, CYCLE_SEARCH_LIMIT,
};
pub use joins::{
    is_almost_complete, predict_e2_join, predict_k3_join, predict_kt_join, ClassificationVerdict, Provenance,
};
pub use sweep::{sweep, JoinFamily, SweepRow};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error("graph is not connected")]
    Disconnected,
    #[error("the K_t prediction needs t >= 4, got {0}")]
    CliqueTooSmall(usize),
    #[error("B must have at least {0} vertices")]
    TooFewVertices(usize),
}
