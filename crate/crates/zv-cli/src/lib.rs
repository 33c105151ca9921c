//! Sweep configuration, prime sieving, parallel verification, and report
//! serialization for the `zv` command-line tool.

pub mod config;
pub mod primes;
pub mod report;
pub mod sweep;

pub use config::{parse_kinds, parse_prime_range, SweepConfig};
pub use primes::primes_in_range;
pub use report::{emit_report, OutputFormat, Record, VerificationReport};
pub use sweep::run_verify;
