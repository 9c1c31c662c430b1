//! Heisenberg operators on Hilbert-scheme Fock spaces and their traces.

mod algebra;
mod bruteforce;
mod chern;
mod engine;
mod op;
mod partition;
mod surface;
mod vertex;

pub use algebra::{ScalarFock, TraceAlgebra};
pub use bruteforce::{
    apply, apply_word, fock_trace_bruteforce, gamma_commutation_check, gamma_trace_bruteforce, FockVector,
};
pub use chern::{balanced_partitions, chern_op, equiv_chern_coefficient, equiv_chern_op};
pub use engine::{trace_product, TraceEngine};
pub use op::{commutator, normal_order, DecoratedOp, OpSum};
pub use partition::{partitions_bounded, GenPartition};
pub use surface::{CohClass, SurfaceModel};
pub use vertex::{gamma_trace, vertex_trace, vertex_trace_sums};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FockError {
    #[error("a_0 is not an operator")]
    ZeroPart,
    #[error("z-exponent {0} does not cancel")]
    ZExponent(i64),
    #[error("Chern operator G_{0} is only available for k = 0, 1")]
    ChernDegree(u32),
}
