//! Library surface of the `corelab` binary: report envelope, ring-spec
//! and corpus parsers, and the JSON schema validator, all reusable from
//! integration tests.

pub mod commands;
pub mod corpus;
pub mod error;
pub mod report;
pub mod ringspec;
pub mod schema;
