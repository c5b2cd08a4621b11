//! Finite-instance verification of the identities connecting codes, graphs
//! and boolean functions.
//!
//! Every check computes two sides by independent routes and compares them in
//! exact arithmetic — the tolerance is identically zero. A report with no
//! failures means every sampled instance satisfied the identity.

mod checks;

pub use checks::{
    check_apc_equals_d, check_epc_equals_db, check_eq322, check_eq44, check_graph_state,
    check_lattice_gap, check_par_alpha, check_par_bound, check_wk,
};

use crate::boolean::TruthTable;
use crate::graph::Graph;
use crate::rng::SplitMix64;
use std::fmt;
use std::time::Duration;

/// Outcome of one identity check over a set of instances.
#[derive(Debug, Clone)]
pub struct CheckReport {
    pub name: String,
    pub instances: u64,
    pub failures: Vec<Failure>,
    pub notes: Vec<String>,
    pub elapsed: Duration,
}

/// One failed instance: what was fed in and the two unequal sides.
#[derive(Debug, Clone)]
pub struct Failure {
    pub input: String,
    pub lhs: String,
    pub rhs: String,
}

impl CheckReport {
    pub fn new(name: impl Into<String>) -> Self {
        CheckReport {
            name: name.into(),
            instances: 0,
            failures: Vec::new(),
            notes: Vec::new(),
            elapsed: Duration::ZERO,
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn fail(
        &mut self,
        input: impl Into<String>,
        lhs: impl fmt::Display,
        rhs: impl fmt::Display,
    ) {
        self.failures.push(Failure {
            input: input.into(),
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
        });
    }

    /// Folds several reports into one.
    pub fn merge(name: impl Into<String>, reports: impl IntoIterator<Item = CheckReport>) -> Self {
        let mut merged = CheckReport::new(name);
        for report in reports {
            merged.instances += report.instances;
            merged.failures.extend(report.failures);
            merged.notes.extend(report.notes);
            merged.elapsed += report.elapsed;
        }
        merged
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: {} over {} instances ({} ms)",
            self.name,
            if self.passed() { "ok" } else { "FAILED" },
            self.instances,
            self.elapsed.as_millis()
        )?;
        for failure in &self.failures {
            write!(
                f,
                "\n  {} : lhs={} rhs={}",
                failure.input, failure.lhs, failure.rhs
            )?;
        }
        Ok(())
    }
}

/// Seeded Erdős–Rényi graph with edge probability 1/2.
pub fn random_graph(rng: &mut SplitMix64, n: usize) -> Graph {
    let mut edges = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            if rng.next_u64() & 1 == 1 {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(n, &edges).expect("generated edges are valid")
}

/// Seeded uniformly random truth table.
pub fn random_table(rng: &mut SplitMix64, n: usize) -> TruthTable {
    TruthTable::from_fn(n, |_| rng.next_u64() & 1 == 1).expect("n within table range")
}

/// Seeded random quadratic function (the table of a random graph).
pub fn random_quadratic(rng: &mut SplitMix64, n: usize) -> TruthTable {
    TruthTable::from_graph(&random_graph(rng, n)).expect("n within table range")
}

/// Compact digest of a graph for failure records.
pub fn graph_digest(g: &Graph) -> String {
    let rows: Vec<String> = (0..g.n())
        .map(|i| {
            (0..g.n())
                .map(|j| if g.has_edge(i, j) { '1' } else { '0' })
                .collect()
        })
        .collect();
    format!("graph n={} rows={}", g.n(), rows.join(","))
}

/// Compact digest of a truth table for failure records.
pub fn table_digest(t: &TruthTable) -> String {
    let signs: String = (0..t.len() as u32)
        .map(|x| if t.bit(x) { '-' } else { '+' })
        .collect();
    format!("table n={} signs={}", t.n(), signs)
}

/// Named verification suites runnable from the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Wk,
    Eq322,
    Eq44,
    ApcD,
    EpcDb,
    ParBound,
    ParAlpha,
    GraphState,
    LatticeGap,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::Wk,
        Suite::Eq322,
        Suite::Eq44,
        Suite::ApcD,
        Suite::EpcDb,
        Suite::ParBound,
        Suite::ParAlpha,
        Suite::GraphState,
        Suite::LatticeGap,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Suite::Wk => "wk",
            Suite::Eq322 => "eq322",
            Suite::Eq44 => "eq44",
            Suite::ApcD => "apc-d",
            Suite::EpcDb => "epc-db",
            Suite::ParBound => "par-bound",
            Suite::ParAlpha => "par-alpha",
            Suite::GraphState => "graph-state",
            Suite::LatticeGap => "lattice-gap",
        }
    }

    pub fn parse(name: &str) -> Option<Suite> {
        Suite::ALL.iter().copied().find(|s| s.name() == name)
    }

    /// Largest instance size the suite accepts.
    pub fn max_n(&self) -> usize {
        match self {
            Suite::Wk => 10,
            Suite::Eq322 => 6,
            Suite::Eq44 => 8,
            Suite::ApcD | Suite::EpcDb => 12,
            Suite::ParBound => 8,
            Suite::ParAlpha => 14,
            Suite::GraphState => 12,
            Suite::LatticeGap => 6,
        }
    }

    /// Runs the suite over `samples` seeded random instances with sizes
    /// drawn uniformly from `1..=n_max`.
    ///
    /// Instances are drawn up front from the seed, then checked on worker
    /// threads (capped by `QNL_THREADS`) and merged in draw order, so the
    /// merged report never depends on scheduling.
    pub fn run(&self, n_max: usize, samples: u32, seed: u64) -> CheckReport {
        let n_max = n_max.min(self.max_n());
        let mut rng = SplitMix64::new(seed);
        let instances: Vec<Instance> = (0..samples)
            .map(|index| self.draw(&mut rng, n_max, index))
            .collect();
        let threads = crate::stabilizer::thread_count(0).min(instances.len().max(1));
        let mut slots: Vec<Option<CheckReport>> = vec![None; instances.len()];
        if threads <= 1 {
            for (slot, instance) in slots.iter_mut().zip(&instances) {
                *slot = Some(run_instance(instance));
            }
        } else {
            let next = std::sync::atomic::AtomicUsize::new(0);
            let results: Vec<std::sync::Mutex<Option<CheckReport>>> = (0..instances.len())
                .map(|_| std::sync::Mutex::new(None))
                .collect();
            std::thread::scope(|scope| {
                for _ in 0..threads {
                    scope.spawn(|| loop {
                        let index = next.fetch_add(1, std::sync::atomic::Ordering::Relaxed);
                        if index >= instances.len() {
                            break;
                        }
                        *results[index].lock().unwrap() = Some(run_instance(&instances[index]));
                    });
                }
            });
            for (slot, result) in slots.iter_mut().zip(results) {
                *slot = result.into_inner().unwrap();
            }
        }
        CheckReport::merge(self.name(), slots.into_iter().flatten())
    }

    fn draw(&self, rng: &mut SplitMix64, n_max: usize, index: u32) -> Instance {
        let n = 1 + rng.next_below(n_max as u64) as usize;
        match self {
            Suite::Wk => Instance::Wk(random_table(rng, n)),
            Suite::Eq322 => {
                let t = random_quadratic(rng, n);
                let draw_seed = rng.next_u64();
                Instance::Eq322(t, draw_seed)
            }
            // Alternate quadratics and raw random tables.
            Suite::Eq44 if index % 2 == 0 => Instance::Eq44(random_quadratic(rng, n)),
            Suite::Eq44 => Instance::Eq44(random_table(rng, n)),
            Suite::ApcD => Instance::ApcD(random_graph(rng, n)),
            Suite::EpcDb => Instance::EpcDb(random_graph(rng, n)),
            Suite::ParBound => Instance::ParBound(random_quadratic(rng, n)),
            Suite::ParAlpha => Instance::ParAlpha(random_graph(rng, n)),
            Suite::GraphState => Instance::GraphState(random_graph(rng, n)),
            Suite::LatticeGap => Instance::LatticeGap(random_graph(rng, n)),
        }
    }
}

/// A drawn check input, ready to run on any thread.
enum Instance {
    Wk(TruthTable),
    Eq322(TruthTable, u64),
    Eq44(TruthTable),
    ApcD(Graph),
    EpcDb(Graph),
    ParBound(TruthTable),
    ParAlpha(Graph),
    GraphState(Graph),
    LatticeGap(Graph),
}

fn run_instance(instance: &Instance) -> CheckReport {
    match instance {
        Instance::Wk(t) => check_wk(t),
        Instance::Eq322(t, seed) => check_eq322(t, *seed, 16),
        Instance::Eq44(t) => check_eq44(t),
        Instance::ApcD(g) => check_apc_equals_d(g),
        Instance::EpcDb(g) => check_epc_equals_db(g),
        Instance::ParBound(t) => check_par_bound(t),
        Instance::ParAlpha(g) => check_par_alpha(g),
        Instance::GraphState(g) => check_graph_state(g),
        Instance::LatticeGap(g) => check_lattice_gap(g),
    }
}
