//! User-facing surface: expression parsing, canonical printing, and the
//! JSON output documents the command-line tool emits.

pub mod doc;
pub mod parse;
pub mod print;

pub use doc::{OutputDocument, SCHEMA};
pub use parse::{parse, parse_many};
pub use print::{print, print_element, print_intpoly, print_poly};
