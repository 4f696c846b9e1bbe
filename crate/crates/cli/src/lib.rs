//! Benchmark rows, CSV output and the sweep runner behind the `sssp` binary.

use std::fmt::Write as _;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use sssp_core::{run, AlgoId, GenError, GenSpec, Graph, RunOptions, RunReport};

pub const CSV_HEADER: &str =
    "family,params,seed,algo,n,m,aux_checks,main_checks,aux_per_arc,main_per_arc,scans,time_ns,outcome";

/// `num / den` rounded half-to-even at `decimals` places.
pub fn fmt_ratio(num: u128, den: u128, decimals: u32) -> String {
    assert!(den > 0);
    let scale = 10u128.pow(decimals);
    let scaled = num * scale;
    let (mut q, r) = (scaled / den, scaled % den);
    if 2 * r > den || (2 * r == den && q % 2 == 1) {
        q += 1;
    }
    if decimals == 0 {
        return q.to_string();
    }
    format!("{}.{:0width$}", q / scale, q % scale, width = decimals as usize)
}

/// Quantities that are either a single measurement or a mean over seeds.
/// Kept as an exact fraction so averaged rows round the same way.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Mean {
    pub sum: u128,
    pub count: u128,
}

impl Mean {
    pub fn one(v: u64) -> Self {
        Self {
            sum: v as u128,
            count: 1,
        }
    }

    fn add(self, o: Mean) -> Self {
        Self {
            sum: self.sum + o.sum,
            count: self.count + o.count,
        }
    }

    fn fmt(self) -> String {
        if self.count == 1 {
            self.sum.to_string()
        } else {
            fmt_ratio(self.sum, self.count, 3)
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BenchRow {
    pub family: String,
    pub params: String,
    /// Seed, or `avgN` for a mean over N seeds.
    pub seed: String,
    pub algo: AlgoId,
    pub n: Mean,
    pub m: Mean,
    pub aux: Mean,
    pub main: Mean,
    pub scans: Mean,
    pub time_ns: Mean,
    pub outcome: String,
}

impl BenchRow {
    pub fn from_report(family: &str, params: &str, seed: &str, g: &Graph, r: &RunReport) -> Self {
        Self {
            family: family.to_string(),
            params: params.to_string(),
            seed: seed.to_string(),
            algo: r.algo,
            n: Mean::one(g.n() as u64),
            m: Mean::one(g.m() as u64),
            aux: Mean::one(r.counters.aux),
            main: Mean::one(r.counters.main),
            scans: Mean::one(r.scans),
            time_ns: Mean::one(r.elapsed_ns),
            outcome: r.outcome.label().to_string(),
        }
    }

    /// Per-arc figure; the seed count cancels, so means use the summed
    /// checks over the summed arc counts.
    fn per_arc(&self, checks: Mean) -> String {
        if self.m.sum == 0 {
            return fmt_ratio(0, 1, 3);
        }
        fmt_ratio(checks.sum, self.m.sum, 3)
    }

    pub fn aux_per_arc(&self) -> String {
        self.per_arc(self.aux)
    }

    pub fn main_per_arc(&self) -> String {
        self.per_arc(self.main)
    }

    pub fn to_csv(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{},{},{},{},{},{}",
            self.family,
            self.params,
            self.seed,
            self.algo,
            self.n.fmt(),
            self.m.fmt(),
            self.aux.fmt(),
            self.main.fmt(),
            self.aux_per_arc(),
            self.main_per_arc(),
            self.scans.fmt(),
            fmt_ratio(self.time_ns.sum, self.time_ns.count, 0),
            self.outcome
        )
    }
}

/// Mean row over `rows` (same family, params and algorithm).
pub fn average(rows: &[BenchRow]) -> BenchRow {
    let first = &rows[0];
    let fold = |f: fn(&BenchRow) -> Mean| rows.iter().map(f).reduce(Mean::add).unwrap();
    let outcome = if rows.iter().all(|r| r.outcome == first.outcome) {
        first.outcome.clone()
    } else {
        "mixed".to_string()
    };
    BenchRow {
        family: first.family.clone(),
        params: first.params.clone(),
        seed: format!("avg{}", rows.len()),
        algo: first.algo,
        n: fold(|r| r.n),
        m: fold(|r| r.m),
        aux: fold(|r| r.aux),
        main: fold(|r| r.main),
        scans: fold(|r| r.scans),
        time_ns: fold(|r| r.time_ns),
        outcome,
    }
}

pub struct BenchConfig {
    pub specs: Vec<GenSpec>,
    pub seeds: u64,
    pub algos: Vec<AlgoId>,
    pub timeout: Option<Duration>,
    pub jobs: usize,
}

/// Runs every (instance, seed, algorithm) triple and returns per-seed rows
/// followed by the mean row, grouped in input order.
pub fn bench(cfg: &BenchConfig) -> Result<Vec<BenchRow>, GenError> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.jobs.max(1))
        .build()
        .expect("thread pool");
    let mut out = Vec::new();
    for spec in &cfg.specs {
        let graphs = pool.install(|| {
            (0..cfg.seeds)
                .into_par_iter()
                .map(|i| {
                    let s = GenSpec::new(spec.family, spec.params.clone(), spec.seed + i);
                    s.generate().map(|g| (s.seed, g))
                })
                .collect::<Result<Vec<_>, _>>()
        })?;
        let params = spec.params.to_string_with(";");
        let family = spec.family.as_str();
        let jobs: Vec<(usize, usize)> = (0..cfg.algos.len())
            .flat_map(|a| (0..graphs.len()).map(move |g| (a, g)))
            .collect();
        let rows: Vec<BenchRow> = pool.install(|| {
            jobs.par_iter()
                .map(|&(a, gi)| {
                    let (seed, g) = &graphs[gi];
                    let opts = RunOptions {
                        deadline: cfg.timeout.map(|t| Instant::now() + t),
                        ..Default::default()
                    };
                    let r = run(g, cfg.algos[a], &opts);
                    BenchRow::from_report(family, &params, &seed.to_string(), g, &r)
                })
                .collect()
        });
        for chunk in rows.chunks(graphs.len()) {
            out.extend_from_slice(chunk);
            if chunk.len() > 1 {
                out.push(average(chunk));
            }
        }
    }
    Ok(out)
}

pub fn to_csv(rows: &[BenchRow]) -> String {
    let mut s = String::from(CSV_HEADER);
    s.push('\n');
    for r in rows {
        s.push_str(&r.to_csv());
        s.push('\n');
    }
    s
}

/// One line per parameter set, an aux and a main
/// column per algorithm, taken from the mean (or only) row.
pub fn pivot_table(rows: &[BenchRow]) -> String {
    let mut keys: Vec<(String, String)> = Vec::new();
    let mut algos: Vec<AlgoId> = Vec::new();
    for r in rows {
        let k = (r.family.clone(), r.params.clone());
        if !keys.contains(&k) {
            keys.push(k);
        }
        if !algos.contains(&r.algo) {
            algos.push(r.algo);
        }
    }
    let pick = |k: &(String, String), a: AlgoId| {
        let group: Vec<&BenchRow> = rows
            .iter()
            .filter(|r| r.family == k.0 && r.params == k.1 && r.algo == a)
            .collect();
        group
            .iter()
            .find(|r| r.seed.starts_with("avg"))
            .or(group.first())
            .copied()
    };
    let width = keys.iter().map(|k| k.1.len()).max().unwrap_or(0).max(6);
    let mut s = String::new();
    let _ = write!(s, "{:<width$}", "params");
    for a in &algos {
        let _ = write!(s, " | {:>10} {:>10}", format!("{a} aux"), "main");
    }
    s.push('\n');
    for k in &keys {
        let _ = write!(s, "{:<width$}", k.1);
        for &a in &algos {
            match pick(k, a) {
                Some(r) if r.outcome == "tree" || r.outcome == "negcycle" => {
                    let _ = write!(s, " | {:>10} {:>10}", r.aux_per_arc(), r.main_per_arc());
                }
                Some(r) => {
                    let _ = write!(s, " | {:>21}", r.outcome);
                }
                None => {
                    let _ = write!(s, " | {:>21}", "-");
                }
            }
        }
        s.push('\n');
    }
    s
}
