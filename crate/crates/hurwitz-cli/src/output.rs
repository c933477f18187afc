//! Output envelope and formatting helpers.
//!
//! JSON results are wrapped in a fixed envelope; exact payloads carry
//! every ring value as a string, never as a JSON number. CSV output is
//! the one deliberately inexact surface and says so in its first line.

use serde::Serialize;
use serde_json::Value;

/// Wrapper around every JSON result: the command name, a canonicalized
/// echo of the parsed inputs, the payload, and the exactness flag.
#[derive(Serialize)]
pub struct Envelope {
    pub command: &'static str,
    #[serde(rename = "inputs-echo")]
    pub inputs_echo: Value,
    pub result: Value,
    pub exact: bool,
}

impl Envelope {
    pub fn exact(command: &'static str, inputs_echo: Value, result: Value) -> Self {
        Envelope {
            command,
            inputs_echo,
            result,
            exact: true,
        }
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("envelope serialization cannot fail")
    }
}

pub const CSV_HEADER_COMMENT: &str = "# inexact: 64-bit float approximations of exact values";

/// Formatted output plus the process exit code to use after printing.
pub struct CommandOutput {
    pub text: String,
    pub exit_code: i32,
}

impl CommandOutput {
    pub fn ok(text: String) -> Self {
        CommandOutput { text, exit_code: 0 }
    }
}
