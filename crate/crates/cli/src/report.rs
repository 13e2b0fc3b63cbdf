use serde_json::{json, Map, Value};

#[derive(Debug)]
pub struct Claim {
    pub name: String,
    pub expected: Value,
    pub actual: Value,
}

impl Claim {
    pub fn pass(&self) -> bool {
        self.expected == self.actual
    }
}

/// JSON report of one scenario: its claims plus free-form result fields.
#[derive(Debug)]
pub struct Report {
    command: String,
    config: Value,
    claims: Vec<Claim>,
    result: Map<String, Value>,
    status: Option<String>,
}

impl Report {
    pub fn new(command: &str, config: Value) -> Self {
        Self {
            command: command.to_string(),
            config,
            claims: Vec::new(),
            result: Map::new(),
            status: None,
        }
    }

    pub fn claim(
        &mut self,
        name: impl Into<String>,
        expected: impl Into<Value>,
        actual: impl Into<Value>,
    ) {
        self.claims.push(Claim {
            name: name.into(),
            expected: expected.into(),
            actual: actual.into(),
        });
    }

    pub fn set(&mut self, key: &str, value: impl Into<Value>) {
        self.result.insert(key.to_string(), value.into());
    }

    pub fn set_status(&mut self, status: &str) {
        self.status = Some(status.to_string());
    }

    pub fn all_pass(&self) -> bool {
        self.claims.iter().all(Claim::pass)
    }

    pub fn to_json(&self) -> Value {
        let status = self.status.clone().unwrap_or_else(|| {
            if self.all_pass() {
                "ok".into()
            } else {
                "mismatch".into()
            }
        });
        json!({
            "command": self.command,
            "config": self.config,
            "status": status,
            "claims": self.claims.iter().map(|c| json!({
                "name": c.name,
                "expected": c.expected,
                "actual": c.actual,
                "pass": c.pass(),
            })).collect::<Vec<_>>(),
            "result": self.result,
        })
    }
}
