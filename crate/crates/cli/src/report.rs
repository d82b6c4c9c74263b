//! Benchmark result tables.
//!
//! CSV columns of a sweep report, in order:
//!
//! | column     | meaning                                                    |
//! |------------|------------------------------------------------------------|
//! | engine     | `hipermotif`, `vf2ps` or `oracle`                          |
//! | graph      | target descriptor (file name or generator parameters)      |
//! | pattern    | pattern descriptor                                         |
//! | semantics  | `mono` or `iso`                                            |
//! | workers    | worker count passed to the engine                          |
//! | reps       | timed repetitions                                          |
//! | mean_s     | mean wall time of the match call, seconds                  |
//! | ci95_s     | 95% confidence half-width (Student-t), 0 for a single rep  |
//! | matches    | embeddings returned                                        |
//! | speedup    | mean time at 1 worker divided by `mean_s`, same engine     |
//! | load_s     | time to load or generate the target                        |
//! | reorder_s  | time to reorder the pattern, 0 when reordering is off      |
//!
//! Reorder ablation reports have one row per instance:
//! `instance, graph, pattern_vertices, pattern_edges, engine, reps,
//! reordered_s, original_s, ratio, matches`, where `ratio` is
//! `original_s / reordered_s`.

use serde::Serialize;
use statrs::distribution::{ContinuousCDF, StudentsT};

/// Mean and 95% confidence half-width of `samples`.
pub fn mean_ci95(samples: &[f64]) -> (f64, f64) {
    let n = samples.len();
    if n == 0 {
        return (0.0, 0.0);
    }
    let mean = samples.iter().sum::<f64>() / n as f64;
    if n < 2 {
        return (mean, 0.0);
    }
    let var = samples.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / (n - 1) as f64;
    let t = StudentsT::new(0.0, 1.0, (n - 1) as f64)
        .expect("positive degrees of freedom")
        .inverse_cdf(0.975);
    (mean, t * (var / n as f64).sqrt())
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BenchRow {
    pub engine: String,
    pub graph: String,
    pub pattern: String,
    pub semantics: String,
    pub workers: usize,
    pub reps: usize,
    pub mean_s: f64,
    pub ci95_s: f64,
    pub matches: usize,
    pub speedup: f64,
    pub load_s: f64,
    pub reorder_s: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AblationRow {
    pub instance: usize,
    pub graph: String,
    pub pattern_vertices: usize,
    pub pattern_edges: usize,
    pub engine: String,
    pub reps: usize,
    pub reordered_s: f64,
    pub original_s: f64,
    pub ratio: f64,
    pub matches: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(untagged)]
pub enum BenchReport {
    Sweep(Vec<BenchRow>),
    Ablation(Vec<AblationRow>),
}

impl BenchReport {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("rows serialize");
        s.push('\n');
        s
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        match self {
            BenchReport::Sweep(rows) => {
                out.push_str("engine,graph,pattern,semantics,workers,reps,mean_s,ci95_s,matches,speedup,load_s,reorder_s\n");
                for r in rows {
                    out.push_str(&format!(
                        "{},{},{},{},{},{},{:.9},{:.9},{},{:.6},{:.9},{:.9}\n",
                        r.engine,
                        csv_field(&r.graph),
                        csv_field(&r.pattern),
                        r.semantics,
                        r.workers,
                        r.reps,
                        r.mean_s,
                        r.ci95_s,
                        r.matches,
                        r.speedup,
                        r.load_s,
                        r.reorder_s
                    ));
                }
            }
            BenchReport::Ablation(rows) => {
                out.push_str(
                    "instance,graph,pattern_vertices,pattern_edges,engine,reps,reordered_s,original_s,ratio,matches\n",
                );
                for r in rows {
                    out.push_str(&format!(
                        "{},{},{},{},{},{},{:.9},{:.9},{:.6},{}\n",
                        r.instance,
                        csv_field(&r.graph),
                        r.pattern_vertices,
                        r.pattern_edges,
                        r.engine,
                        r.reps,
                        r.reordered_s,
                        r.original_s,
                        r.ratio,
                        r.matches
                    ));
                }
            }
        }
        out
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}
