//! Standard-library companion to `fuscat-core`: JSON file formats, builtin
//! object names, report rendering, and the `fuscat` command-line interface.
//!
//! The split keeps all mathematics in the `no_std` core crate; everything
//! here is plumbing — parsing input specifications ([`inputs`]), reading and
//! writing the documented JSON schemas ([`formats`]), and assembling
//! deterministic table/CSV/JSON reports ([`report`], [`cli`]).

pub mod cli;
pub mod formats;
pub mod inputs;
pub mod report;
