//! Per-run record of configuration, timing and check outcomes.

use std::time::Instant;

use serde::Serialize;
use serde_json::Value;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub pass: bool,
    /// Only asserted checks decide the exit code; the rest are logged.
    pub asserted: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunManifest {
    pub toolkit_version: &'static str,
    pub command: String,
    pub config: Value,
    pub wall_time_s: f64,
    pub checks: Vec<CheckResult>,
}

impl RunManifest {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass || !c.asserted)
    }

    /// 0 when every check passed, 2 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.passed() {
            0
        } else {
            2
        }
    }
}

/// Collects checks while a subcommand runs.
pub struct Recorder {
    command: String,
    config: Value,
    started: Instant,
    checks: Vec<CheckResult>,
}

impl Recorder {
    pub fn new(command: &str, config: Value) -> Self {
        Recorder {
            command: command.to_string(),
            config,
            started: Instant::now(),
            checks: Vec::new(),
        }
    }

    /// Records an asserted check; names must be unique within a run.
    pub fn check(&mut self, name: &str, pass: bool, detail: impl Into<String>) {
        self.push(name, pass, true, detail.into());
    }

    /// Records an outcome that is logged but never fails the run.
    pub fn report(&mut self, name: &str, holds: bool, detail: impl Into<String>) {
        self.push(name, holds, false, detail.into());
    }

    fn push(&mut self, name: &str, pass: bool, asserted: bool, detail: String) {
        debug_assert!(self.checks.iter().all(|c| c.name != name), "{name}");
        self.checks.push(CheckResult {
            name: name.to_string(),
            pass,
            asserted,
            detail,
        });
    }

    pub fn finish(self) -> RunManifest {
        RunManifest {
            toolkit_version: env!("CARGO_PKG_VERSION"),
            command: self.command,
            config: self.config,
            wall_time_s: self.started.elapsed().as_secs_f64(),
            checks: self.checks,
        }
    }
}
