//! Report documents, rendered either as JSON (schema version 1) or as a plain
//! text table.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;
use serde_json::Value;

use crate::complex::SimplicialComplex;
use crate::homology::{betti_direct_in, betti_from_shifted};
use crate::linalg::PrimeField;
use crate::shift::Validation;

pub const SCHEMA: u32 = 1;

/// A complex together with its invariants and provenance.
#[derive(Clone, Debug, Serialize)]
pub struct ComplexReport {
    pub schema: u32,
    pub command: String,
    pub seed: Option<u64>,
    pub prime: u64,
    pub n: usize,
    /// `faces[k]` lists the faces with `k` vertices, in lex order.
    pub faces: Vec<Vec<Vec<u32>>>,
    pub f_vector: Vec<usize>,
    pub betti: Option<Vec<usize>>,
    pub validated: Option<Validation>,
    pub retries: usize,
    pub timing_ms: f64,
    #[serde(flatten)]
    pub extra: BTreeMap<String, Value>,
}

impl ComplexReport {
    pub fn new(command: &str, k: &SimplicialComplex, field: PrimeField) -> Self {
        let betti = if k.is_empty() {
            None
        } else if k.is_shifted() {
            betti_from_shifted(k).ok()
        } else {
            betti_direct_in(field, k).ok()
        };
        ComplexReport {
            schema: SCHEMA,
            command: command.to_string(),
            seed: None,
            prime: field.modulus(),
            n: k.n(),
            faces: (0..k.max_face_size() + usize::from(!k.is_empty()))
                .map(|size| k.faces_of_size(size).iter().map(|f| f.to_vec()).collect())
                .collect(),
            f_vector: k.f_vector().0,
            betti: betti.map(|b| b.0),
            validated: None,
            retries: 0,
            timing_ms: 0.0,
            extra: BTreeMap::new(),
        }
    }

    pub fn with_extra(mut self, key: &str, value: Value) -> Self {
        self.extra.insert(key.to_string(), value);
        self
    }

    pub fn to_table(&self) -> String {
        let mut out = String::new();
        let row = |out: &mut String, key: &str, value: String| writeln!(out, "{key:<10} {value}").unwrap();
        row(&mut out, "command", self.command.clone());
        if let Some(seed) = self.seed {
            row(&mut out, "seed", seed.to_string());
        }
        row(&mut out, "prime", self.prime.to_string());
        row(&mut out, "n", self.n.to_string());
        if let Some(v) = self.validated {
            row(
                &mut out,
                "validated",
                format!("shifted={} f-vector={} retries={}", yes(v.is_shifted), yes(v.f_vector_preserved), self.retries),
            );
        }
        row(&mut out, "f-vector", tuple(&self.f_vector));
        if let Some(b) = &self.betti {
            row(&mut out, "betti", tuple(b));
        }
        for (key, value) in &self.extra {
            row(&mut out, key, value.to_string());
        }
        for (size, level) in self.faces.iter().enumerate().skip(1) {
            let faces: Vec<String> = level.iter().map(|f| brace(f)).collect();
            row(&mut out, &format!("dim {}", size as isize - 1), faces.join(" "));
        }
        writeln!(out, "{:<10} {:.1} ms", "time", self.timing_ms).unwrap();
        out
    }
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "NO"
    }
}

fn tuple(v: &[usize]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(", "))
}

pub(crate) fn brace(f: &[u32]) -> String {
    let parts: Vec<String> = f.iter().map(|x| x.to_string()).collect();
    format!("{{{}}}", parts.join(","))
}

/// One checked instance of a verification suite.
#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct InstanceReport {
    pub index: usize,
    pub seed: u64,
    pub n: usize,
    pub description: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub schema: u32,
    pub command: String,
    pub suite: String,
    pub seed: u64,
    pub prime: u64,
    pub trials: usize,
    pub max_n: usize,
    pub instances: Vec<InstanceReport>,
    pub failures: usize,
    pub passed: bool,
    pub timing_ms: f64,
}

impl SuiteReport {
    pub fn to_table(&self) -> String {
        let mut out = String::new();
        writeln!(out, "suite {} (seed {}, prime {}, max n {})", self.suite, self.seed, self.prime, self.max_n).unwrap();
        for inst in &self.instances {
            let mark = if inst.passed { "ok  " } else { "FAIL" };
            writeln!(out, "{mark} #{:<4} n={:<3} {}  {}", inst.index, inst.n, inst.description, inst.detail).unwrap();
        }
        writeln!(
            out,
            "{} instances, {} failures, {:.1} ms",
            self.instances.len(),
            self.failures,
            self.timing_ms
        )
        .unwrap();
        out
    }
}
