//! The gint script language: parsing, pretty printing, evaluation, reports
//! and the bundled example corpus.

pub mod ast;
pub mod corpus;
pub mod interp;
pub mod report;
pub mod syntax;

pub use interp::RunOptions;
pub use report::{run_text, AggregateReport, RunReport, Status};
pub use syntax::{parse_expr, parse_script, ParseError};
