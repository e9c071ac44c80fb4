use std::io::Write;

use clap::ValueEnum;
use serde::Serialize;
use serde_json::Value;

use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Human,
    Json,
    Csv,
}

#[derive(Debug, Clone, Serialize)]
pub struct Metadata {
    pub budget_used: Option<u64>,
    pub convention_notes: Vec<String>,
}

/// Everything a subcommand produces, ready to render in any format.
#[derive(Debug, Clone)]
pub struct Report {
    pub command: &'static str,
    pub inputs: Value,
    pub result: Value,
    pub budget_used: Option<u64>,
    pub notes: Vec<String>,
    pub human: String,
    pub headers: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
}

#[derive(Serialize)]
struct JsonOutput<'a> {
    command: &'a str,
    inputs: &'a Value,
    result: &'a Value,
    metadata: Metadata,
}

impl Report {
    pub fn new(command: &'static str, inputs: Value, result: Value) -> Self {
        Report {
            command,
            inputs,
            result,
            budget_used: None,
            notes: Vec::new(),
            human: String::new(),
            headers: Vec::new(),
            rows: Vec::new(),
        }
    }

    pub fn human(mut self, text: impl Into<String>) -> Self {
        self.human = text.into();
        self
    }

    pub fn table(mut self, headers: Vec<&'static str>, rows: Vec<Vec<String>>) -> Self {
        self.headers = headers;
        self.rows = rows;
        self
    }

    pub fn budget(mut self, used: u64) -> Self {
        self.budget_used = Some(used);
        self
    }

    pub fn note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }

    pub fn render(&self, format: Format, out: &mut dyn Write) -> Result<(), CliError> {
        match format {
            Format::Human => {
                let mut text = self.human.clone();
                if !text.ends_with('\n') {
                    text.push('\n');
                }
                out.write_all(text.as_bytes())?;
            }
            Format::Json => {
                let doc = JsonOutput {
                    command: self.command,
                    inputs: &self.inputs,
                    result: &self.result,
                    metadata: Metadata {
                        budget_used: self.budget_used,
                        convention_notes: self.notes.clone(),
                    },
                };
                serde_json::to_writer_pretty(&mut *out, &doc)?;
                out.write_all(b"\n")?;
            }
            Format::Csv => {
                let mut w = csv::Writer::from_writer(out);
                w.write_record(&self.headers)?;
                for row in &self.rows {
                    w.write_record(row)?;
                }
                w.flush()?;
            }
        }
        Ok(())
    }
}
