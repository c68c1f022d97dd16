//! Enumeration kernelizations: each submodule shrinks the input graph
//! under one structural parameterization and lifts kernel solutions back
//! to solutions of the original graph so that the per-solution classes
//! partition the original solution set.

use thiserror::Error;

use crate::graph::GraphError;
use crate::oracle::OracleError;
use crate::params::ParamError;

pub mod nd;
pub mod pc;
pub mod vc_all;
pub mod vc_max;
pub mod vc_min;

#[derive(Debug, Error)]
pub enum KernelError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Param(#[from] ParamError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error("edge set is not a d-cut of the kernel graph")]
    NotAKernelCut,
    #[error("kernel solution touches a pendant clique: edge ({u}, {v})")]
    PendantCliqueTouched { u: usize, v: usize },
    #[error("internal invariant violated: {0}")]
    InternalInvariant(String),
}

pub(crate) fn require_d(d: usize) {
    assert!(d >= 1, "d must be at least 1");
}
