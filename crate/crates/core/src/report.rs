//! Batch verification sweeps and report emission.
//!
//! Every sweep first enumerates its checks in canonical key order, then
//! evaluates them on a worker pool, then writes the buffered records in
//! that same order. Output therefore does not depend on the worker count.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::derivation::derivation_verify;
use crate::kernels::{cv_verify, kernel_verify, WeightKind};
use crate::record::{Status, VerificationRecord};
use crate::sampling::{Bounds, ParamSampler};
use crate::theorems::{family_lhs, relation_check, theorem_rhs, theorem_verify, Relation, TheoremId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Command {
    VerifyTheorems,
    VerifyKernels,
    VerifyRelations,
    VerifyDerivations,
    VerifyCv,
    Eval { theorem: TheoremId, n: u64 },
    Bench,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub command: Command,
    pub n_max: u64,
    pub ids: Vec<TheoremId>,
    pub samples: u64,
    pub seed: u64,
    pub bounds: Bounds,
    pub format: Format,
    pub out: Option<PathBuf>,
    pub parallel: usize,
    /// Write measured per-check microseconds instead of 0.
    pub timings: bool,
}

impl RunConfig {
    pub fn new(command: Command) -> Self {
        RunConfig {
            command,
            n_max: 100,
            ids: TheoremId::all().collect(),
            samples: 500,
            seed: crate::sampling::DEFAULT_SEED,
            bounds: Bounds::default(),
            format: Format::Text,
            out: None,
            parallel: 1,
            timings: false,
        }
    }

    fn validate(&self) -> Result<(), String> {
        if self.samples < 1 {
            return Err("--samples must be at least 1".into());
        }
        if self.bounds.denominator < 1 {
            return Err("--den-bound must be at least 1".into());
        }
        if self.bounds.numerator < 0 {
            return Err("--num-bound must be nonnegative".into());
        }
        if self.parallel < 1 {
            return Err("--parallel must be at least 1".into());
        }
        if self.ids.is_empty() {
            return Err("--ids selects no theorems".into());
        }
        Ok(())
    }
}

/// Counts printed in the closing summary line.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Summary {
    pub ok: usize,
    pub failed: usize,
    pub pole_skipped: usize,
    pub errors: usize,
}

impl Summary {
    pub fn tally<'a>(records: impl IntoIterator<Item = &'a VerificationRecord>) -> Self {
        let mut s = Summary::default();
        for r in records {
            match r.status {
                Status::Ok if r.equal => s.ok += 1,
                Status::Ok => s.failed += 1,
                Status::PoleSkipped => s.pole_skipped += 1,
                Status::Error => s.errors += 1,
            }
        }
        s
    }

    /// 1 on any failed equality, else 2 on any internal error, else 0.
    pub fn exit_code(&self) -> i32 {
        if self.failed > 0 {
            1
        } else if self.errors > 0 {
            2
        } else {
            0
        }
    }
}

/// One unit of work in a sweep.
enum Task {
    Theorem(TheoremId, u64),
    Kernel(WeightKind, crate::kernels::KernelParams<crate::rational::Rational>),
    Relation(Relation, u64, u64),
    Derivation(TheoremId, u64),
    Cv(crate::rational::Rational, crate::rational::Rational, u64),
}

impl Task {
    fn run(&self) -> VerificationRecord {
        match self {
            Task::Theorem(id, n) => theorem_verify(*id, *n),
            Task::Kernel(kind, p) => kernel_verify(*kind, p),
            Task::Relation(rel, k, n) => relation_check(*rel, *k, *n).expect("k <= n by construction"),
            Task::Derivation(id, n) => derivation_verify(*id, *n),
            Task::Cv(x, y, n) => cv_verify(x, y, *n),
        }
    }
}

fn plan(config: &RunConfig) -> Vec<Task> {
    let n_max = config.n_max;
    match &config.command {
        Command::VerifyTheorems => config
            .ids
            .iter()
            .flat_map(|&id| (0..=n_max).map(move |n| Task::Theorem(id, n)))
            .collect(),
        Command::VerifyDerivations => config
            .ids
            .iter()
            .flat_map(|&id| (0..=n_max).map(move |n| Task::Derivation(id, n)))
            .collect(),
        Command::VerifyKernels => {
            let mut sampler = ParamSampler::new(config.seed, config.bounds);
            let mut tasks = Vec::new();
            for kind in WeightKind::ALL {
                for _ in 0..config.samples {
                    tasks.push(Task::Kernel(kind, sampler.kernel_params(n_max)));
                }
            }
            tasks
        }
        Command::VerifyCv => {
            let mut sampler = ParamSampler::new(config.seed, config.bounds);
            (0..config.samples)
                .map(|_| {
                    let x = sampler.rational();
                    let y = sampler.rational();
                    Task::Cv(x, y, sampler.size(n_max))
                })
                .collect()
        }
        Command::VerifyRelations => {
            let mut tasks = Vec::new();
            for rel in Relation::ALL {
                if rel.uses_n() {
                    for n in 0..=n_max {
                        for k in 0..=n {
                            tasks.push(Task::Relation(rel, k, n));
                        }
                    }
                } else {
                    for k in 0..=n_max {
                        tasks.push(Task::Relation(rel, k, k));
                    }
                }
            }
            tasks
        }
        Command::Eval { theorem, n } => vec![Task::Theorem(*theorem, *n)],
        Command::Bench => Vec::new(),
    }
}

fn pool(workers: usize) -> io::Result<rayon::ThreadPool> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(io::Error::other)
}

/// Evaluates every check of the configured sweep, in canonical order.
pub fn collect_records(config: &RunConfig) -> io::Result<Vec<VerificationRecord>> {
    let tasks = plan(config);
    let mut records: Vec<VerificationRecord> = if config.parallel > 1 {
        pool(config.parallel)?.install(|| tasks.par_iter().map(Task::run).collect())
    } else {
        tasks.iter().map(Task::run).collect()
    };
    if !config.timings {
        for r in &mut records {
            r.micros = 0;
        }
    }
    Ok(records)
}

const COLUMNS: [&str; 8] = ["check", "id", "n", "lhs", "rhs", "equal", "status", "micros"];

pub fn write_records<W: Write>(
    records: &[VerificationRecord],
    format: Format,
    out: &mut W,
) -> io::Result<()> {
    match format {
        Format::Text => {
            for r in records {
                writeln!(
                    out,
                    "{} {} n={} lhs={} rhs={} equal={} status={} micros={}",
                    r.check.as_str(),
                    r.id,
                    r.n,
                    r.lhs,
                    r.rhs,
                    r.equal,
                    r.status.as_str(),
                    r.micros
                )?;
            }
        }
        Format::Json => {
            for r in records {
                serde_json::to_writer(&mut *out, r)?;
                out.write_all(b"\n")?;
            }
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record(COLUMNS)?;
            for r in records {
                w.write_record([
                    r.check.as_str().to_string(),
                    r.id.clone(),
                    r.n.to_string(),
                    r.lhs.to_string(),
                    r.rhs.to_string(),
                    r.equal.to_string(),
                    r.status.as_str().to_string(),
                    r.micros.to_string(),
                ])?;
            }
            w.flush()?;
        }
    }
    Ok(())
}

/// Timing and size statistics for one theorem across `0..=n_max`.
#[derive(Debug, Clone, Serialize)]
pub struct BenchRow {
    pub id: String,
    pub n_max: u64,
    pub lhs_micros: u64,
    pub rhs_micros: u64,
    /// Largest number of summands in a brute-force sum.
    pub peak_terms: u64,
    /// Largest bit height of the exact value.
    pub peak_bits: u64,
}

pub fn bench_rows(config: &RunConfig) -> Vec<BenchRow> {
    let run_one = |id: TheoremId| {
        let mut row = BenchRow {
            id: id.to_string(),
            n_max: config.n_max,
            lhs_micros: 0,
            rhs_micros: 0,
            peak_terms: 0,
            peak_bits: 0,
        };
        for n in 0..=config.n_max {
            let t = Instant::now();
            let lhs = family_lhs(id.family(), id.t(), n).expect("valid id");
            row.lhs_micros += crate::record::elapsed_micros(t);
            let t = Instant::now();
            let rhs = theorem_rhs(id, n);
            row.rhs_micros += crate::record::elapsed_micros(t);
            row.peak_terms = row.peak_terms.max(n + 1);
            row.peak_bits = row.peak_bits.max(lhs.height_bits()).max(rhs.height_bits());
        }
        row
    };
    // sequential so per-theorem timings are not skewed by contention
    config.ids.iter().copied().map(run_one).collect()
}

fn write_bench<W: Write>(rows: &[BenchRow], format: Format, out: &mut W) -> io::Result<()> {
    match format {
        Format::Text => {
            for r in rows {
                writeln!(
                    out,
                    "bench {} n_max={} lhs_micros={} rhs_micros={} peak_terms={} peak_bits={}",
                    r.id, r.n_max, r.lhs_micros, r.rhs_micros, r.peak_terms, r.peak_bits
                )?;
            }
        }
        Format::Json => {
            for r in rows {
                serde_json::to_writer(&mut *out, r)?;
                out.write_all(b"\n")?;
            }
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            for r in rows {
                w.serialize(r)?;
            }
            w.flush()?;
        }
    }
    Ok(())
}

fn open_sink(config: &RunConfig) -> io::Result<Box<dyn Write>> {
    Ok(match &config.out {
        Some(path) => Box::new(BufWriter::new(File::create(path)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

/// Runs one configured command and returns the process exit code.
///
/// Records go to `--out` or stdout; the summary line goes to stderr.
pub fn run(config: &RunConfig) -> i32 {
    if let Err(msg) = config.validate() {
        eprintln!("error: {msg}");
        return 2;
    }
    let started = Instant::now();
    // open the sink first so an unwritable path fails before any work
    let mut sink = match open_sink(config) {
        Ok(s) => s,
        Err(e) => {
            let path = config.out.as_ref().map(|p| p.display().to_string()).unwrap_or_default();
            eprintln!("error: cannot open output {path}: {e}");
            return 2;
        }
    };

    if config.command == Command::Bench {
        let rows = bench_rows(config);
        if let Err(e) = write_bench(&rows, config.format, &mut sink).and_then(|_| sink.flush()) {
            eprintln!("error: writing report: {e}");
            return 2;
        }
        eprintln!(
            "summary: theorems={} elapsed_ms={}",
            rows.len(),
            started.elapsed().as_millis()
        );
        return 0;
    }

    let records = match collect_records(config) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return 2;
        }
    };
    if let Err(e) = write_records(&records, config.format, &mut sink).and_then(|_| sink.flush()) {
        eprintln!("error: writing report: {e}");
        return 2;
    }
    let summary = Summary::tally(&records);
    eprintln!(
        "summary: checks={} ok={} fail={} pole-skipped={} error={} elapsed_ms={}",
        records.len(),
        summary.ok,
        summary.failed,
        summary.pole_skipped,
        summary.errors,
        started.elapsed().as_millis()
    );
    for r in records.iter().filter(|r| r.is_failure() || r.status == Status::Error) {
        eprintln!(
            "  {} {} {} n={}: {}",
            if r.is_failure() { "FAIL" } else { "ERROR" },
            r.check.as_str(),
            r.id,
            r.n,
            r.note.as_deref().unwrap_or("sides differ")
        );
    }
    summary.exit_code()
}
