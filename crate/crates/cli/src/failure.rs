// Copyright 2026 the eqvol Authors
// SPDX-License-Identifier: Apache-2.0

use std::fmt;

use eqvol::Error;

/// A command failure and the exit code it maps to: 1 for bad input or
/// usage, 2 for numeric degeneracy.
#[derive(Debug)]
pub enum Failure {
    Input(String),
    Numeric(String),
}

impl Failure {
    pub fn input(msg: impl Into<String>) -> Self {
        Failure::Input(msg.into())
    }

    pub fn code(&self) -> i32 {
        match self {
            Failure::Input(_) => 1,
            Failure::Numeric(_) => 2,
        }
    }

    /// Prefixes the message with the operation that failed.
    pub fn during(self, op: &str) -> Self {
        match self {
            Failure::Input(m) => Failure::Input(format!("{op}: {m}")),
            Failure::Numeric(m) => Failure::Numeric(format!("{op}: {m}")),
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Input(m) | Failure::Numeric(m) => f.write_str(m),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let msg = e.to_string();
        match e {
            Error::TooShort { .. }
            | Error::NonFinite { .. }
            | Error::RepeatedVertex { .. }
            | Error::WrongGrid { .. }
            | Error::LengthMismatch { .. }
            | Error::ZeroDirection { .. }
            | Error::AnchorOutOfRange { .. }
            | Error::InvalidArgument(_) => Failure::Input(msg),
            _ => Failure::Numeric(msg),
        }
    }
}

/// Attaches the operation name to library errors.
pub trait Context<T> {
    fn during(self, op: &str) -> Result<T, Failure>;
}

impl<T, E: Into<Failure>> Context<T> for Result<T, E> {
    fn during(self, op: &str) -> Result<T, Failure> {
        self.map_err(|e| e.into().during(op))
    }
}
