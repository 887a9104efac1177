//! Random search for complexes with `Δ(Σ K) ≰_L Δ(Σ Δ(K))`.

use std::time::Instant;

use rand::Rng;
use serde::Serialize;

use super::random::{instance_rng, instance_seed, random_complex};
use super::report::SCHEMA;
use super::suites::{compare_suspensions, SuspensionComparison};
use crate::complex::SimplicialComplex;
use crate::error::Result;
use crate::linalg::PrimeField;
use crate::operators::LexOrder;
use crate::par::ExecMode;
use crate::shift::{ShiftOptions, Shifter};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Outcome {
    #[serde(rename = "equal")]
    Equal,
    #[serde(rename = "strictly-less")]
    StrictlyLess,
    #[serde(rename = "VIOLATION")]
    Violation,
}

impl Outcome {
    pub fn of(cmp: &SuspensionComparison) -> Self {
        match cmp.order {
            LexOrder::Equal => Outcome::Equal,
            LexOrder::Less => Outcome::StrictlyLess,
            LexOrder::Greater | LexOrder::Incomparable => Outcome::Violation,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Outcome::Equal => "equal",
            Outcome::StrictlyLess => "strictly-less",
            Outcome::Violation => "VIOLATION",
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ExploreInstance {
    pub index: usize,
    pub seed: u64,
    pub n: usize,
    pub facets: Vec<Vec<u32>>,
    pub outcome: Outcome,
}

#[derive(Clone, Debug, Serialize)]
pub struct ExploreReport {
    pub schema: u32,
    pub command: String,
    pub seed: u64,
    pub prime: u64,
    pub trials: usize,
    pub max_n: usize,
    /// The two-disjoint-edges instance, always run first.
    pub reference: ExploreInstance,
    pub instances: Vec<ExploreInstance>,
    pub equal: usize,
    pub strictly_less: usize,
    pub violations: usize,
    pub timing_ms: f64,
}

fn instance(shifter: &Shifter, index: usize, seed: u64, k: &SimplicialComplex) -> Result<ExploreInstance> {
    let cmp = compare_suspensions(shifter, k)?;
    Ok(ExploreInstance {
        index,
        seed,
        n: k.n(),
        facets: k.facets().iter().map(|f| f.to_vec()).collect(),
        outcome: Outcome::of(&cmp),
    })
}

pub fn explore(trials: usize, max_n: usize, seed: u64, field: PrimeField, exec: ExecMode) -> Result<ExploreReport> {
    let start = Instant::now();
    let inner = if exec.is_parallel() { ExecMode::Sequential } else { exec };
    let options = ShiftOptions { field, exec: inner, ..ShiftOptions::default() };
    let b = SimplicialComplex::from_lists(4, &[&[1, 2], &[3, 4]]);
    let reference = instance(&Shifter { seed, options }, 0, seed, &b)?;
    let instances = exec
        .map_range(trials, |index| {
            let s = instance_seed(seed, index);
            let mut rng = instance_rng(seed, index);
            let n = rng.gen_range(1..=max_n.max(1));
            let k = random_complex(&mut rng, n, 3);
            instance(&Shifter { seed: s, options }, index, s, &k)
        })
        .into_iter()
        .collect::<Result<Vec<_>>>()?;
    let count = |o: Outcome| instances.iter().filter(|i| i.outcome == o).count();
    Ok(ExploreReport {
        schema: SCHEMA,
        command: "explore".into(),
        seed,
        prime: field.modulus(),
        trials,
        max_n,
        equal: count(Outcome::Equal),
        strictly_less: count(Outcome::StrictlyLess),
        violations: count(Outcome::Violation),
        reference,
        instances,
        timing_ms: start.elapsed().as_secs_f64() * 1e3,
    })
}

impl ExploreReport {
    pub fn to_table(&self) -> String {
        let mut out = format!("reference two disjoint edges: {}\n", self.reference.outcome.label());
        for inst in &self.instances {
            let facets: Vec<String> = inst.facets.iter().map(|f| super::report::brace(f)).collect();
            out.push_str(&format!("#{:<4} n={:<3} {:<14} [{}]\n", inst.index, inst.n, inst.outcome.label(), facets.join(" ")));
        }
        out.push_str(&format!(
            "{} equal, {} strictly-less, {} VIOLATION, {:.1} ms\n",
            self.equal, self.strictly_less, self.violations, self.timing_ms
        ));
        if self.violations > 0 {
            out.push_str("!!! VIOLATION found: the suspension inequality fails on the instances above\n");
        }
        out
    }
}
