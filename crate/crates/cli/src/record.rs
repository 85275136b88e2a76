use std::io::{self, Write};

use serde::ser::{Serialize, SerializeMap, Serializer};

/// One line of command output. Field order is insertion order in both the
/// table and the JSON rendering; every value is a string so big integers
/// survive any JSON consumer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OutputRecord {
    pub command: &'static str,
    pub input: String,
    pub fields: Vec<(String, String)>,
    pub timing_ms: Option<u128>,
}

impl OutputRecord {
    pub fn new(command: &'static str, input: impl Into<String>) -> Self {
        OutputRecord {
            command,
            input: input.into(),
            fields: Vec::new(),
            timing_ms: None,
        }
    }

    pub fn field(mut self, key: &str, value: impl ToString) -> Self {
        self.fields.push((key.to_string(), value.to_string()));
        self
    }

    pub fn push(&mut self, key: &str, value: impl ToString) {
        self.fields.push((key.to_string(), value.to_string()));
    }

    pub fn table_line(&self) -> String {
        let mut line = format!("{}\t{}", self.command, self.input);
        for (k, v) in &self.fields {
            line.push('\t');
            line.push_str(k);
            line.push('=');
            line.push_str(v);
        }
        if let Some(ms) = self.timing_ms {
            line.push_str(&format!("\ttiming_ms={ms}"));
        }
        line
    }
}

impl Serialize for OutputRecord {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(
            2 + self.fields.len() + self.timing_ms.is_some() as usize,
        ))?;
        map.serialize_entry("command", self.command)?;
        map.serialize_entry("input", &self.input)?;
        for (k, v) in &self.fields {
            map.serialize_entry(k, v)?;
        }
        if let Some(ms) = self.timing_ms {
            map.serialize_entry("timing_ms", &ms.to_string())?;
        }
        map.end()
    }
}

#[derive(Clone, Copy, Debug)]
pub struct Sink {
    pub json: bool,
}

impl Sink {
    pub fn emit(&self, out: &mut impl Write, record: &OutputRecord) -> io::Result<()> {
        if self.json {
            writeln!(
                out,
                "{}",
                serde_json::to_string(record).expect("record serializes")
            )
        } else {
            writeln!(out, "{}", record.table_line())
        }
    }
}
