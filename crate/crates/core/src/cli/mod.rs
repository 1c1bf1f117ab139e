//! File formats, JSON reports and the `soapy` command-line driver.

mod app;
pub mod format;
pub mod report;

pub use app::{bench, run, EXIT_OK, EXIT_REJECTED, EXIT_USAGE};
pub use format::{
    parse_certificate, parse_graph, parse_instance, render_certificate, render_graph, render_instance,
    CertificateFile,
};
pub use report::{DecodeReport, ReduceReport, RunReport, VerifyReport};
