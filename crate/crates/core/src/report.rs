//! Flat key/value record output shared by every command: diff-friendly,
//! deterministically ordered, one `key = value` line per datum.

use std::fmt::Write;

/// Bumped whenever a record key or meaning changes.
pub const SCHEMA_VERSION: u32 = 1;

/// Accumulates `key = value` lines in insertion order.
#[derive(Debug, Default)]
pub struct RecordWriter {
    buf: String,
}

impl RecordWriter {
    pub fn new(command: &str) -> Self {
        let mut w = RecordWriter::default();
        w.push_u64("schema_version", SCHEMA_VERSION as u64);
        w.push_str("command", command);
        w
    }

    pub fn push_str(&mut self, key: &str, value: &str) {
        let _ = writeln!(self.buf, "{key} = {value}");
    }

    pub fn push_f64(&mut self, key: &str, value: f64) {
        let _ = writeln!(self.buf, "{key} = {value:e}");
    }

    pub fn push_u64(&mut self, key: &str, value: u64) {
        let _ = writeln!(self.buf, "{key} = {value}");
    }

    pub fn finish(self) -> String {
        self.buf
    }
}
