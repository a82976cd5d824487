pub mod cli;
pub mod connectivity;
pub mod crd;
pub mod crtree;
pub mod elimination;
pub mod error;
pub mod fixtures;
pub mod graph;
pub mod poly;
pub mod sparsity;
