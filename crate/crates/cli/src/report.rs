use serde::Serialize;
use serde_json::Value;

/// The result of one command: what was asked, what was computed, and how the
/// process should exit.
#[derive(Debug, Clone, Serialize)]
pub struct RunReport {
    pub command: String,
    pub inputs: Value,
    pub outputs: Value,
    pub exit_code: i32,
    #[serde(skip)]
    pub text: Vec<String>,
}

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

impl RunReport {
    pub fn new(command: &str, inputs: Value) -> Self {
        Self {
            command: command.to_owned(),
            inputs,
            outputs: Value::Object(Default::default()),
            exit_code: EXIT_OK,
            text: Vec::new(),
        }
    }

    pub fn set(&mut self, key: &str, value: impl Serialize) {
        let value = serde_json::to_value(value).expect("output is serializable");
        if let Value::Object(map) = &mut self.outputs {
            map.insert(key.to_owned(), value);
        }
    }

    pub fn line(&mut self, s: impl Into<String>) {
        self.text.push(s.into());
    }

    pub fn failed(command: &str, inputs: Value, message: String) -> Self {
        let mut r = Self::new(command, inputs);
        r.set("error", &message);
        r.line(format!("error: {message}"));
        r.exit_code = EXIT_ERROR;
        r
    }

    pub fn render(&self, json: bool) -> String {
        if json {
            let mut s = serde_json::to_string_pretty(self).expect("report is serializable");
            s.push('\n');
            s
        } else {
            let mut s = self.text.join("\n");
            s.push('\n');
            s
        }
    }
}
