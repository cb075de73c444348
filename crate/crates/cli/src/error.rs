use std::io;
use std::path::PathBuf;

use thiserror::Error;
use wlpairs_core::dataset::{DatasetError, ReduceError};
use wlpairs_core::distinguisher::DistinguishError;
use wlpairs_core::generators::assemble::AssembleError;
use wlpairs_core::generators::cfi::CfiError;
use wlpairs_core::generators::csl::CslError;
use wlpairs_core::graph::{EnumerateError, Graph6Error};
use wlpairs_core::rpc::RpcError;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Read { path: PathBuf, source: io::Error },
    #[error("cannot write {path}: {source}")]
    Write { path: PathBuf, source: io::Error },
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Resource(String),
    #[error("{0}")]
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Read { .. } | CliError::Input(_) => 2,
            CliError::Resource(_) => 3,
            CliError::Write { .. } | CliError::Internal(_) => 1,
        }
    }
}

macro_rules! input_error {
    ($($t:ty),*) => {$(
        impl From<$t> for CliError {
            fn from(e: $t) -> Self {
                CliError::Input(e.to_string())
            }
        }
    )*};
}

input_error!(DatasetError, ReduceError, RpcError, CfiError, CslError, Graph6Error, EnumerateError);

impl From<DistinguishError> for CliError {
    fn from(e: DistinguishError) -> Self {
        if e.is_resource_limit() {
            CliError::Resource(e.to_string())
        } else {
            CliError::Input(e.to_string())
        }
    }
}

impl From<AssembleError> for CliError {
    fn from(e: AssembleError) -> Self {
        match e {
            AssembleError::Shortfall(_) => CliError::Resource(format!("{e}; rerun with --allow-shortfall to keep what is available")),
            AssembleError::Distinguish(d) => d.into(),
            AssembleError::AuditFailed(_) => CliError::Internal(e.to_string()),
            AssembleError::UnknownCategory(_) | AssembleError::Enumerate(_) => CliError::Input(e.to_string()),
        }
    }
}
