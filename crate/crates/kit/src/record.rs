//! One JSON object per line: `{graph, property, value, witness?, seconds}`.

use std::collections::BTreeSet;
use std::fs::{File, OpenOptions};
use std::io::{self, BufRead, BufReader, Write};
use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Record {
    /// graph6 of the graph in its input labelling.
    pub graph: String,
    pub property: String,
    pub value: Value,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
    pub seconds: f64,
}

impl Record {
    pub fn to_line(&self) -> String {
        serde_json::to_string(self).expect("records serialise")
    }

    pub fn key(&self) -> (String, String) {
        (self.graph.clone(), self.property.clone())
    }
}

/// Rounds to milliseconds so lines stay short.
pub fn seconds(d: std::time::Duration) -> f64 {
    (d.as_secs_f64() * 1000.0).round() / 1000.0
}

/// Append-only record sink. Opening an existing file loads the keys it
/// already holds, so a rerun skips finished work and a completed scope adds
/// nothing.
pub struct RecordLog {
    out: Box<dyn Write>,
    done: BTreeSet<(String, String)>,
    previous: Vec<Record>,
}

impl RecordLog {
    pub fn stdout() -> RecordLog {
        RecordLog { out: Box::new(io::stdout()), done: BTreeSet::new(), previous: Vec::new() }
    }

    pub fn append(path: &Path) -> io::Result<RecordLog> {
        let mut previous = Vec::new();
        if path.exists() {
            for (i, line) in BufReader::new(File::open(path)?).lines().enumerate() {
                let line = line?;
                if line.trim().is_empty() {
                    continue;
                }
                let r: Record = serde_json::from_str(&line).map_err(|e| {
                    io::Error::new(io::ErrorKind::InvalidData, format!("{}:{}: {e}", path.display(), i + 1))
                })?;
                previous.push(r);
            }
        }
        let done = previous.iter().map(Record::key).collect();
        let out = OpenOptions::new().create(true).append(true).open(path)?;
        Ok(RecordLog { out: Box::new(out), done, previous })
    }

    pub fn is_done(&self, graph: &str, property: &str) -> bool {
        self.done.contains(&(graph.to_string(), property.to_string()))
    }

    /// Records loaded from an existing log.
    pub fn previous(&self) -> &[Record] {
        &self.previous
    }

    pub fn write(&mut self, r: &Record) -> io::Result<()> {
        writeln!(self.out, "{}", r.to_line())?;
        self.out.flush()?;
        self.done.insert(r.key());
        Ok(())
    }
}
