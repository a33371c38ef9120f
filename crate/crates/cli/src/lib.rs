//! Library side of the `affchar` command: canonical JSON documents, the
//! result cache, and the subcommand implementations.

pub mod cache;
pub mod commands;
pub mod json;
