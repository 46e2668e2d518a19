use serde::Serialize;
use serde_json::{json, Value};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Ok,
    Error,
}

/// Header and rows, for commands whose result is a table.
#[derive(Clone, Debug, Default)]
pub struct Table {
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(header: Vec<&'static str>) -> Table {
        Table { header, rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<String>) {
        self.rows.push(row);
    }

    pub fn to_csv(&self) -> Result<String, csv::Error> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(&self.header)?;
        for r in &self.rows {
            w.write_record(r)?;
        }
        let bytes = w.into_inner().map_err(|e| e.into_error())?;
        Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
    }
}

pub struct Output {
    pub status: Status,
    pub payload: Value,
    /// The τ the command ran at, as a string, if any.
    pub tau: Option<String>,
    pub table: Option<Table>,
}

impl Output {
    pub fn ok(payload: impl Serialize) -> Output {
        Output {
            status: Status::Ok,
            payload: to_value(payload),
            tau: None,
            table: None,
        }
    }

    /// `Ok` when `passed`, otherwise an error carrying the same payload.
    pub fn verdict(passed: bool, payload: impl Serialize) -> Output {
        let mut out = Output::ok(payload);
        if !passed {
            out.status = Status::Error;
        }
        out
    }

    pub fn with_tau(mut self, tau: impl ToString) -> Output {
        self.tau = Some(tau.to_string());
        self
    }

    pub fn with_table(mut self, table: Table) -> Output {
        self.table = Some(table);
        self
    }

    pub fn envelope(&self, seed: u64) -> Value {
        json!({
            "status": self.status,
            "payload": self.payload,
            "meta": {
                "seed": seed,
                "tau": self.tau,
                "version": env!("CARGO_PKG_VERSION"),
            }
        })
    }
}

pub fn to_value(payload: impl Serialize) -> Value {
    serde_json::to_value(payload).expect("payload types serialize to JSON")
}
