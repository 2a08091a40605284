use serde::Serialize;

use super::config::Format;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// Trend data only; never fails a run.
    Exploratory,
}

impl Status {
    pub fn as_str(&self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Exploratory => "exploratory",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckRow {
    pub name: String,
    pub params: String,
    pub residual: f64,
    pub tolerance: f64,
    pub status: Status,
}

impl CheckRow {
    /// Pass when residual ≤ tolerance; NaN fails.
    pub fn check(name: impl Into<String>, params: impl Into<String>, residual: f64, tolerance: f64) -> Self {
        let status = if residual <= tolerance { Status::Pass } else { Status::Fail };
        CheckRow { name: name.into(), params: params.into(), residual, tolerance, status }
    }

    pub fn exploratory(name: impl Into<String>, params: impl Into<String>, value: f64) -> Self {
        CheckRow { name: name.into(), params: params.into(), residual: value, tolerance: f64::NAN, status: Status::Exploratory }
    }

    /// A check that could not be evaluated.
    pub fn error(name: impl Into<String>, params: impl Into<String>, err: &Error) -> Self {
        CheckRow {
            name: name.into(),
            params: format!("{}; error: {err}", params.into()),
            residual: f64::NAN,
            tolerance: f64::NAN,
            status: Status::Fail,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub suite: String,
    pub rows: Vec<CheckRow>,
}

impl Report {
    /// Rows are sorted by (name, params) so the output does not depend on
    /// scheduling.
    pub fn new(suite: impl Into<String>, mut rows: Vec<CheckRow>) -> Self {
        rows.sort_by(|a, b| a.name.cmp(&b.name).then_with(|| a.params.cmp(&b.params)));
        Report { suite: suite.into(), rows }
    }

    pub fn failures(&self) -> usize {
        self.rows.iter().filter(|r| r.status == Status::Fail).count()
    }

    pub fn exit_code(&self) -> i32 {
        if self.failures() == 0 {
            0
        } else {
            1
        }
    }

    pub fn render(&self, format: Format) -> Result<String> {
        match format {
            Format::Json => serde_json::to_string_pretty(self).map_err(|e| Error::Io(e.to_string())),
            Format::Csv => {
                let mut w = csv::Writer::from_writer(Vec::new());
                w.write_record(["name", "params", "residual", "tolerance", "status"])
                    .map_err(|e| Error::Io(e.to_string()))?;
                for r in &self.rows {
                    w.write_record([
                        r.name.as_str(),
                        r.params.as_str(),
                        &format!("{:e}", r.residual),
                        &format!("{:e}", r.tolerance),
                        r.status.as_str(),
                    ])
                    .map_err(|e| Error::Io(e.to_string()))?;
                }
                let bytes = w.into_inner().map_err(|e| Error::Io(e.to_string()))?;
                String::from_utf8(bytes).map_err(|e| Error::Io(e.to_string()))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sorting_and_exit_codes() {
        let r = Report::new(
            "x",
            vec![
                CheckRow::check("b", "", 1e-3, 1e-6),
                CheckRow::check("a", "", 1e-9, 1e-6),
                CheckRow::exploratory("c", "", 5.0),
            ],
        );
        assert_eq!(r.rows[0].name, "a");
        assert_eq!(r.failures(), 1);
        assert_eq!(r.exit_code(), 1);
        assert!(r.render(Format::Csv).unwrap().starts_with("name,params,residual,tolerance,status\n"));
        let v: serde_json::Value = serde_json::from_str(&r.render(Format::Json).unwrap()).unwrap();
        assert_eq!(v["rows"][2]["status"], "exploratory");
        assert_eq!(CheckRow::check("n", "", f64::NAN, 1.0).status, Status::Fail);
    }
}
