//! Serializable report types shared by the command-line interface.

use serde::{Deserialize, Serialize};

use crate::graph::Graph;
use crate::ordering::Ordering;

/// FNV-1a digest of input bytes, hex encoded; identifies inputs in reports.
pub fn digest(bytes: &[u8]) -> String {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for &b in bytes {
        h ^= b as u64;
        h = h.wrapping_mul(0x100_0000_01b3);
    }
    format!("{h:016x}")
}

/// Top-level JSON envelope emitted by every command.
#[derive(Debug, Serialize, Deserialize)]
pub struct RunReport<T> {
    pub command: String,
    pub inputs: Vec<InputDigest>,
    pub pass: bool,
    pub wall_time_ms: f64,
    pub report: T,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct InputDigest {
    pub name: String,
    pub digest: String,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct SweepReport {
    pub search: String,
    pub vertex_count: usize,
    pub edge_count: usize,
    pub orderings: Vec<Vec<String>>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct CycleJson {
    pub search: String,
    pub tail: usize,
    pub cycle_length: usize,
    pub total_sweeps: usize,
    pub cycle: Vec<Vec<String>>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct LexCycleJson {
    pub value: usize,
    pub exact: bool,
    pub seeds_tried: usize,
    pub witness_seed: Vec<String>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct CheckJson {
    pub property: String,
    pub ok: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<String>>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct OrientJson {
    pub stop_index: usize,
    pub ordering: Vec<String>,
    pub valid_cocomparability_order: bool,
    pub trace: Vec<Vec<String>>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct MatrixJson {
    pub steps: usize,
    pub rows: usize,
    pub cols: usize,
    pub matrix: Vec<String>,
    pub potential_trace_len: usize,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct ReproJson {
    pub target: String,
    pub pass: bool,
    pub checks: Vec<ReproCheckJson>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct ReproCheckJson {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

pub fn ordering_names(g: &Graph, o: &Ordering) -> Vec<String> {
    o.names(g).into_iter().map(|s| s.to_string()).collect()
}
