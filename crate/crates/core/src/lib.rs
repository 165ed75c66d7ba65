#![allow(clippy::needless_range_loop, clippy::type_complexity)]

pub mod cli;
pub mod coherence;
pub mod corpus;
pub mod fincard;
pub mod kleisli;
pub mod matchings;
pub mod polycat;
pub mod report;
pub mod symcat;
