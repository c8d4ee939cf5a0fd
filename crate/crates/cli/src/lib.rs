//! Text and JSON formats, the block sweep, the divisibility oracle and the
//! command-line front end for `blockwitness-core`.

pub mod formats;
pub mod oracle;
pub mod sweep;
pub mod tables;

use blockwitness_core::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_OUT_OF_RANGE: i32 = 3;
pub const EXIT_INVALID_CERTIFICATE: i32 = 4;
pub const EXIT_ORACLE_MISMATCH: i32 = 5;

/// Exit status for a library error surfacing at the command line.
pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::OutOfTheoremRange(_) | Error::ExhaustedSearch { .. } => EXIT_OUT_OF_RANGE,
        Error::CertificateInvalid(_) | Error::ClaimViolated(_) => EXIT_INVALID_CERTIFICATE,
        _ => EXIT_PARSE,
    }
}
