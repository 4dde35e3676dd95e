//! Machine-readable run reports and their two renderings: a JSON
//! document and a line-oriented plain form, both byte-deterministic for
//! identical inputs. Wall time is deliberately excluded here — it goes on
//! the human (stderr) report only, so machine output stays reproducible.

use serde::Serialize;

use euob_core::GenericityCertificate;

pub const REPORT_VERSION: u32 = 1;

#[derive(Debug, Serialize)]
pub struct RunReport {
    pub format_version: u32,
    pub command: String,
    pub file: String,
    pub mode: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub prime: Option<u64>,
    pub seed: u64,
    pub trials: usize,
    pub dimension: usize,
    pub alphas: Vec<u64>,
    pub degree: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub eu: Option<i64>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub checks: Vec<CheckVerdict>,
    pub certificate: GenericityCertificate,
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckVerdict {
    pub name: &'static str,
    pub status: CheckStatus,
    pub detail: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckStatus {
    Pass,
    Fail,
    Skipped,
    Info,
}

impl CheckStatus {
    pub fn label(self) -> &'static str {
        match self {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail => "fail",
            CheckStatus::Skipped => "skipped",
            CheckStatus::Info => "info",
        }
    }
}

impl RunReport {
    pub fn any_check_failed(&self) -> bool {
        self.checks.iter().any(|c| c.status == CheckStatus::Fail)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    /// Line-oriented rendering: one `key value` pair per line, checks as
    /// `check <name> <status> <detail>`.
    pub fn to_plain(&self) -> String {
        let mut out = String::new();
        let mut line = |s: String| {
            out.push_str(&s);
            out.push('\n');
        };
        line(format!("format-version {}", self.format_version));
        line(format!("command {}", self.command));
        line(format!("file {}", self.file));
        line(format!("mode {}", self.mode));
        if let Some(p) = self.prime {
            line(format!("prime {p}"));
        }
        line(format!("seed {}", self.seed));
        line(format!("trials {}", self.trials));
        line(format!("dimension {}", self.dimension));
        let alphas: Vec<String> = self.alphas.iter().map(|a| a.to_string()).collect();
        line(format!("alphas {}", alphas.join(" ")));
        line(format!("degree {}", self.degree));
        if let Some(eu) = self.eu {
            line(format!("eu {eu}"));
        }
        for c in &self.checks {
            line(format!("check {} {} {}", c.name, c.status.label(), c.detail));
        }
        out
    }

    /// Human-facing summary for standard error; the only place wall time
    /// appears.
    pub fn to_human(&self, wall_ms: f64) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "euob {} {} ({}, seed {}, {} trials)\n",
            self.command, self.file, self.certificate.field, self.seed, self.trials
        ));
        let alphas: Vec<String> = self.alphas.iter().map(|a| a.to_string()).collect();
        out.push_str(&format!(
            "  dimension {}, profile [{}], degree {}\n",
            self.dimension,
            alphas.join(", "),
            self.degree
        ));
        if let Some(eu) = self.eu {
            out.push_str(&format!("  euler obstruction {eu}\n"));
        }
        for c in &self.checks {
            out.push_str(&format!(
                "  check {:<22} {:<7} {}\n",
                c.name,
                c.status.label(),
                c.detail
            ));
        }
        for level in &self.certificate.levels {
            let accepted = match level.accepted_seed() {
                Some(s) => format!("accepted seed {s}"),
                None => "no accepted trial".to_string(),
            };
            let count = match level.count {
                Some(c) => format!(", count {c}"),
                None => String::new(),
            };
            out.push_str(&format!(
                "  stage {:<17} level {} trials {:<2} {accepted}{count}\n",
                level.stage,
                level.level,
                level.trials.len()
            ));
        }
        out.push_str(&format!("  wall {wall_ms:.1} ms\n"));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn report() -> RunReport {
        RunReport {
            format_version: REPORT_VERSION,
            command: "eu".to_string(),
            file: "catalog/cusp.toml".to_string(),
            mode: "modular".to_string(),
            prime: Some(2147483647),
            seed: 0,
            trials: 8,
            dimension: 1,
            alphas: vec![1, 3],
            degree: 3,
            eu: Some(2),
            checks: vec![CheckVerdict {
                name: "expected-eu",
                status: CheckStatus::Pass,
                detail: "2 == 2".to_string(),
            }],
            certificate: GenericityCertificate::new("GF(2147483647)".to_string(), 0, 8),
        }
    }

    #[test]
    fn plain_rendering_is_stable() {
        let expected = "format-version 1\ncommand eu\nfile catalog/cusp.toml\nmode modular\n\
                        prime 2147483647\nseed 0\ntrials 8\ndimension 1\nalphas 1 3\ndegree 3\n\
                        eu 2\ncheck expected-eu pass 2 == 2\n";
        assert_eq!(report().to_plain(), expected);
    }

    #[test]
    fn json_rendering_round_trips_the_key_fields() {
        let json = report().to_json();
        let v: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(v["eu"], 2);
        assert_eq!(v["alphas"][1], 3);
        assert_eq!(v["degree"], 3);
        assert_eq!(v["checks"][0]["status"], "pass");
        assert_eq!(v["certificate"]["master_seed"], 0);
        // wall time must never leak into machine output
        assert!(json.find("wall").is_none());
    }

    #[test]
    fn failure_detection_sees_only_failures() {
        let mut r = report();
        assert!(!r.any_check_failed());
        r.checks.push(CheckVerdict {
            name: "slice-identity",
            status: CheckStatus::Skipped,
            detail: String::new(),
        });
        assert!(!r.any_check_failed());
        r.checks.push(CheckVerdict {
            name: "weighted-sum",
            status: CheckStatus::Fail,
            detail: "1 != 2".to_string(),
        });
        assert!(r.any_check_failed());
    }
}
