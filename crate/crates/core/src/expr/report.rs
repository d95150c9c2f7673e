//! The JSON result object.

use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[allow(non_snake_case)]
pub struct RiccatiJson {
    pub A: String,
    pub B: String,
    pub C: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReportJson {
    pub status: String,
    pub genus: Option<i64>,
    pub riccati: Option<RiccatiJson>,
    pub normal_r: Option<String>,
    pub solution: Option<String>,
    pub verified: bool,
    pub reason: String,
}

impl ReportJson {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }
}
