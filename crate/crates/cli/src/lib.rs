//! Command-line front end and JSON play service for m-Modular Wythoff.

pub mod output;
pub mod play;
pub mod service;
pub mod session;
