//! Structured verification reports.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

/// Where an expected value comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Provenance {
    /// A value stated in the source being checked.
    Paper,
    /// Holds by definition or a one-line argument.
    Trivial,
    /// Obtained independently (hand computation or another algorithm).
    Derived,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Provenance::Paper => "PAPER",
            Provenance::Trivial => "TRIVIAL",
            Provenance::Derived => "DERIVED",
        })
    }
}

/// One checked statement.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Claim {
    pub id: String,
    pub anchor: String,
    pub computed: String,
    pub expected: String,
    pub provenance: Provenance,
    pub pass: bool,
}

impl Claim {
    /// A claim that passes when the rendered values agree.
    pub fn compare(
        id: impl Into<String>,
        anchor: impl Into<String>,
        computed: impl fmt::Display,
        expected: impl fmt::Display,
        provenance: Provenance,
    ) -> Claim {
        let computed = computed.to_string();
        let expected = expected.to_string();
        let pass = computed == expected;
        Claim { id: id.into(), anchor: anchor.into(), computed, expected, provenance, pass }
    }

    /// A claim whose pass/fail is decided by the caller.
    pub fn judged(
        id: impl Into<String>,
        anchor: impl Into<String>,
        computed: impl fmt::Display,
        expected: impl fmt::Display,
        provenance: Provenance,
        pass: bool,
    ) -> Claim {
        Claim {
            id: id.into(),
            anchor: anchor.into(),
            computed: computed.to_string(),
            expected: expected.to_string(),
            provenance,
            pass,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub command: String,
    pub ring: String,
    pub field: String,
    pub order: String,
    pub parameters: BTreeMap<String, String>,
    /// Computed values that are not checked against anything.
    pub results: BTreeMap<String, String>,
    pub claims: Vec<Claim>,
    pub notes: Vec<String>,
    pub timings_ms: BTreeMap<String, u64>,
    pub status: Status,
}

impl VerificationReport {
    pub fn new(command: impl Into<String>, ring: impl Into<String>, field: impl Into<String>, order: impl Into<String>) -> Self {
        VerificationReport {
            command: command.into(),
            ring: ring.into(),
            field: field.into(),
            order: order.into(),
            parameters: BTreeMap::new(),
            results: BTreeMap::new(),
            claims: Vec::new(),
            notes: Vec::new(),
            timings_ms: BTreeMap::new(),
            status: Status::Pass,
        }
    }

    pub fn param(&mut self, key: &str, value: impl fmt::Display) {
        self.parameters.insert(key.to_string(), value.to_string());
    }

    pub fn result(&mut self, key: &str, value: impl fmt::Display) {
        self.results.insert(key.to_string(), value.to_string());
    }

    pub fn push(&mut self, claim: Claim) {
        if !claim.pass {
            self.status = Status::Fail;
        }
        self.claims.push(claim);
    }

    pub fn extend(&mut self, claims: impl IntoIterator<Item = Claim>) {
        for c in claims {
            self.push(c);
        }
    }

    pub fn note(&mut self, text: impl Into<String>) {
        self.notes.push(text.into());
    }

    /// Order claims by id so concurrent assembly stays deterministic.
    pub fn sort_claims(&mut self) {
        self.claims.sort_by(|a, b| a.id.cmp(&b.id));
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn clear_timings(&mut self) {
        self.timings_ms.clear();
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}  [{} over {}, order {}]", self.command, self.ring, self.field, self.order)?;
        for (k, v) in &self.parameters {
            writeln!(f, "  {k} = {v}")?;
        }
        for (k, v) in &self.results {
            if v.contains('\n') {
                writeln!(f, "{k}:")?;
                for line in v.lines() {
                    writeln!(f, "  {line}")?;
                }
            } else {
                writeln!(f, "{k}: {v}")?;
            }
        }
        for c in &self.claims {
            let mark = if c.pass { "ok  " } else { "FAIL" };
            writeln!(f, "{mark} {:<28} {}", c.id, c.anchor)?;
            writeln!(f, "       computed: {}", c.computed)?;
            writeln!(f, "       expected: {} ({})", c.expected, c.provenance)?;
        }
        for n in &self.notes {
            writeln!(f, "note: {n}")?;
        }
        for (k, v) in &self.timings_ms {
            writeln!(f, "time {k}: {v} ms")?;
        }
        let passed = self.claims.iter().filter(|c| c.pass).count();
        write!(f, "status: {} ({passed}/{} claims)", if self.passed() { "pass" } else { "FAIL" }, self.claims.len())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn status_tracks_failures() {
        let mut r = VerificationReport::new("test", "x0..x1", "QQ", "grevlex");
        r.push(Claim::compare("a", "one", 1, 1, Provenance::Trivial));
        assert!(r.passed());
        r.push(Claim::compare("b", "two", 2, 3, Provenance::Derived));
        assert!(!r.passed());
        assert!(r.to_string().contains("FAIL b"));
    }
}
