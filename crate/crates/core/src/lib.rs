pub mod bench;
pub mod classify;
pub mod cli;
pub mod distance;
pub mod ditree;
pub mod generate;
pub mod graph;
pub mod modwidth;
pub mod oracle;
pub mod reduction;
pub mod resolve;
pub mod scc;
pub mod suite;
pub mod unicyclic;
