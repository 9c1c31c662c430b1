pub mod cli;
pub mod fock;
pub mod pipeline;
pub mod qmforms;
pub mod qzeta;
pub mod ring;
