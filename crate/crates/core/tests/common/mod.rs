#![allow(dead_code)]

pub mod oracle;

use serde_json::Value;

pub struct Run {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Run {
    pub fn json(&self) -> Value {
        serde_json::from_str(&self.stdout).unwrap_or_else(|e| panic!("report is not JSON ({e}): {}", self.stdout))
    }
}

pub fn ngr(args: &[&str]) -> Run {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("ngr").chain(args.iter().copied());
    let code = ngr_workbench::cli::run(argv, &mut out, &mut err);
    Run {
        code,
        stdout: String::from_utf8(out).unwrap(),
        stderr: String::from_utf8(err).unwrap(),
    }
}

pub fn schema() -> Value {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/schema/report.schema.json");
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

pub fn assert_schema_valid(report: &Value) {
    let schema = schema();
    let compiled = jsonschema::JSONSchema::compile(&schema).expect("schema compiles");
    let msgs: Vec<String> = match compiled.validate(report) {
        Ok(()) => return,
        Err(errors) => errors.map(|e| format!("{} at {}", e, e.instance_path)).collect(),
    };
    panic!("report violates schema: {msgs:?}");
}

pub fn claim<'a>(report: &'a Value, id: &str) -> &'a Value {
    report["verified_claims"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["claim_id"] == id)
        .unwrap_or_else(|| panic!("no claim {id} in {report}"))
}
