use std::process::ExitCode;

use serde_json::{json, Value};
use socle_core::report::{Conclusion, CriterionReport};

/// How a successful run ends: exit 0, or exit 2 when a criterion's
/// hypotheses did not hold.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Done,
    NotApplicable,
    Disagreement,
}

impl Status {
    pub fn exit_code(self) -> ExitCode {
        match self {
            Status::Done => ExitCode::SUCCESS,
            Status::NotApplicable => ExitCode::from(2),
            Status::Disagreement => ExitCode::from(1),
        }
    }
}

pub struct Outcome {
    pub text: String,
    pub json: Value,
    pub status: Status,
}

impl Outcome {
    pub fn new(text: impl Into<String>, json: Value) -> Self {
        Outcome {
            text: text.into(),
            json,
            status: Status::Done,
        }
    }

    pub fn from_report(report: &CriterionReport) -> Self {
        let status = if !report.passes() {
            Status::Disagreement
        } else if report.conclusion == Conclusion::NotApplicable {
            Status::NotApplicable
        } else {
            Status::Done
        };
        Outcome {
            text: report.transcript().trim_end().to_string(),
            json: report.to_json(),
            status,
        }
    }

    pub fn emit(&self, as_json: bool) {
        if as_json {
            println!(
                "{}",
                serde_json::to_string_pretty(&self.json).expect("json values serialize")
            );
        } else {
            println!("{}", self.text);
        }
    }
}

pub fn error_json(message: &str) -> Value {
    json!({ "error": message })
}
