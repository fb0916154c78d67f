use std::fmt;

use thiserror::Error;

/// A failed exact identity: which identity, where, and both sides rendered.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{identity} failed at {at}: left = {left}, right = {right}")]
pub struct Mismatch {
    pub identity: &'static str,
    pub at: String,
    pub left: String,
    pub right: String,
}

impl Mismatch {
    pub fn new(
        identity: &'static str,
        at: impl Into<String>,
        left: impl fmt::Display,
        right: impl fmt::Display,
    ) -> Self {
        Self {
            identity,
            at: at.into(),
            left: left.to_string(),
            right: right.to_string(),
        }
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("argument out of domain: {0}")]
    Domain(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Mismatch(#[from] Mismatch),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
