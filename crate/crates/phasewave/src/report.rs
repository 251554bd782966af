use serde::{Deserialize, Serialize};

/// Where a check's target value comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Source {
    /// A closed-form value.
    Analytic,
    /// An independent numerical computation of the same quantity.
    Oracle,
    /// A structural property (symmetry, convergence rate, exactness).
    Invariant,
    /// The check passes when a known-bad input is rejected.
    ExpectedFailure,
}

/// How `computed` is compared against `target`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Relation {
    /// `|computed − target| ≤ tol`
    Within,
    /// `computed ≥ target`
    AtLeast,
    /// `computed ≤ target`
    AtMost,
    /// `computed > target`
    Above,
    /// `computed < target`
    Below,
}

impl Relation {
    pub fn holds(self, computed: f64, target: f64, tol: f64) -> bool {
        match self {
            Relation::Within => (computed - target).abs() <= tol,
            Relation::AtLeast => computed >= target,
            Relation::AtMost => computed <= target,
            Relation::Above => computed > target,
            Relation::Below => computed < target,
        }
    }
}

fn nan_from_null<'de, D: serde::Deserializer<'de>>(d: D) -> Result<f64, D::Error> {
    Ok(Option::<f64>::deserialize(d)?.unwrap_or(f64::NAN))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub target: f64,
    pub source: Source,
    pub relation: Relation,
    /// `null` in JSON when the check could not be evaluated.
    #[serde(deserialize_with = "nan_from_null")]
    pub computed: f64,
    pub tol: f64,
    pub pass: bool,
    pub runtime_ms: f64,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

impl CheckResult {
    pub fn line(&self) -> String {
        let rel = match self.relation {
            Relation::Within => format!("|{:.6e} - {:.6e}| <= {:.1e}", self.computed, self.target, self.tol),
            Relation::AtLeast => format!("{:.6e} >= {:.6e}", self.computed, self.target),
            Relation::AtMost => format!("{:.6e} <= {:.6e}", self.computed, self.target),
            Relation::Above => format!("{:.6e} > {:.6e}", self.computed, self.target),
            Relation::Below => format!("{:.6e} < {:.6e}", self.computed, self.target),
        };
        format!(
            "{} {:<34} {} ({:.0} ms)",
            if self.pass { "PASS" } else { "FAIL" },
            self.name,
            rel,
            self.runtime_ms
        )
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub suite: String,
    pub passed: bool,
    pub checks: Vec<CheckResult>,
    #[serde(default)]
    pub notes: Vec<String>,
}

impl VerificationReport {
    pub fn new(suite: impl Into<String>, checks: Vec<CheckResult>, notes: Vec<String>) -> Self {
        let passed = checks.iter().all(|c| c.pass);
        Self {
            suite: suite.into(),
            passed,
            checks,
            notes,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn summary(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            out.push_str(&c.line());
            out.push('\n');
        }
        for n in &self.notes {
            out.push_str("note: ");
            out.push_str(n);
            out.push('\n');
        }
        let failed = self.checks.iter().filter(|c| !c.pass).count();
        out.push_str(&format!(
            "{}: {} checks, {} failed\n",
            self.suite,
            self.checks.len(),
            failed
        ));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relations() {
        assert!(Relation::Within.holds(1.0 + 1e-9, 1.0, 1e-8));
        assert!(!Relation::Within.holds(1.1, 1.0, 1e-8));
        assert!(Relation::AtLeast.holds(3.5, 3.5, 0.0));
        assert!(!Relation::Above.holds(3.5, 3.5, 0.0));
        assert!(Relation::Below.holds(-1e-3, 0.0, 0.0));
        assert!(Relation::AtMost.holds(0.0, 0.0, 0.0));
    }

    #[test]
    fn report_passes_only_if_every_check_does() {
        let ok = CheckResult {
            name: "a".into(),
            target: 1.0,
            source: Source::Analytic,
            relation: Relation::Within,
            computed: 1.0,
            tol: 1e-8,
            pass: true,
            runtime_ms: 0.1,
            detail: String::new(),
        };
        let bad = CheckResult {
            pass: false,
            ..ok.clone()
        };
        assert!(VerificationReport::new("s", vec![ok.clone()], vec![]).passed);
        let r = VerificationReport::new("s", vec![ok, bad], vec![]);
        assert!(!r.passed);
        let back: VerificationReport = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(back, r);
        let mut broken = r.clone();
        broken.checks[1].computed = f64::NAN;
        let back: VerificationReport = serde_json::from_str(&broken.to_json()).unwrap();
        assert!(back.checks[1].computed.is_nan());
        assert!(r.summary().contains("1 failed"));
    }
}
