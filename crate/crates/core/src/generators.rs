//! Benchmark-family generators. A [`GenSpec`] (family, parameters, seed)
//! determines the produced graph exactly; every family documents the order
//! in which it draws from the random stream.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::graph::{Arc, Graph, GraphError, Length};
use crate::prng::SplitMix64;

/// Length of the arcs from an artificial source to ordinary vertices.
pub const ARTIFICIAL_LEN: Length = 100_000_000;
pub const GRID_MAX_LEN: Length = 10_000;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GenError {
    #[error("unknown family `{0}`")]
    UnknownFamily(String),
    #[error("missing parameter `{0}`")]
    MissingParam(&'static str),
    #[error("invalid parameters: {0}")]
    Invalid(String),
    #[error("malformed parameter list: {0}")]
    Syntax(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn invalid(msg: impl Into<String>) -> GenError {
    GenError::Invalid(msg.into())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Star,
    BadGor,
    /// Simple grid with explicit `x` and `y`.
    Grid,
    SGrid,
    WGrid,
    LGrid,
    PhGrid,
    NhGrid,
    /// Random graph with every option exposed.
    Rand,
    SRand,
    DRand,
    PRand,
    Pd2sRand,
    PsRand,
    PcRand,
    FpAcyc,
    FnAcyc,
    P2nAcyc,
    Rand05,
    Sqnc,
}

impl Family {
    pub const ALL: [Family; 20] = [
        Family::Star,
        Family::BadGor,
        Family::Grid,
        Family::SGrid,
        Family::WGrid,
        Family::LGrid,
        Family::PhGrid,
        Family::NhGrid,
        Family::Rand,
        Family::SRand,
        Family::DRand,
        Family::PRand,
        Family::Pd2sRand,
        Family::PsRand,
        Family::PcRand,
        Family::FpAcyc,
        Family::FnAcyc,
        Family::P2nAcyc,
        Family::Rand05,
        Family::Sqnc,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Family::Star => "star",
            Family::BadGor => "bad-gor",
            Family::Grid => "grid",
            Family::SGrid => "s-grid",
            Family::WGrid => "w-grid",
            Family::LGrid => "l-grid",
            Family::PhGrid => "ph-grid",
            Family::NhGrid => "nh-grid",
            Family::Rand => "rand",
            Family::SRand => "s-rand",
            Family::DRand => "d-rand",
            Family::PRand => "p-rand",
            Family::Pd2sRand => "pd2s-rand",
            Family::PsRand => "ps-rand",
            Family::PcRand => "pc-rand",
            Family::FpAcyc => "fp-acyc",
            Family::FnAcyc => "fn-acyc",
            Family::P2nAcyc => "p2n-acyc",
            Family::Rand05 => "rand05",
            Family::Sqnc => "sqnc",
        }
    }

    /// Parameters the family reads; anything else is rejected.
    fn accepted(self) -> &'static [&'static str] {
        match self {
            Family::Star | Family::BadGor => &["k"],
            Family::Grid => &["x", "y"],
            Family::SGrid | Family::Sqnc => &["x", "y"],
            Family::WGrid => &["x", "y"],
            Family::LGrid => &["x", "y"],
            Family::PhGrid | Family::NhGrid => &["x", "y"],
            Family::Rand => &["n", "m", "l", "u", "p"],
            Family::SRand | Family::DRand => &["n", "m"],
            Family::PRand | Family::Pd2sRand | Family::PsRand | Family::PcRand => &["n", "m", "p"],
            Family::FpAcyc | Family::FnAcyc => &["n", "m"],
            Family::P2nAcyc => &["n", "m", "f"],
            Family::Rand05 => &["n", "m", "l", "u"],
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Family {
    type Err = GenError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let key: String = s
            .trim()
            .to_ascii_lowercase()
            .chars()
            .filter(|c| !matches!(c, '-' | '_'))
            .collect();
        Family::ALL
            .into_iter()
            .find(|f| f.as_str().replace('-', "") == key)
            .or(match key.as_str() {
                "badgor" => Some(Family::BadGor),
                "sqnc05" => Some(Family::Sqnc),
                "spgrid" => Some(Family::Grid),
                "sprand" => Some(Family::Rand),
                _ => None,
            })
            .ok_or_else(|| GenError::UnknownFamily(s.to_string()))
    }
}

/// Numeric parameter value: integers for sizes and ranges, `f` may be
/// fractional.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Value {
    Int(i64),
    Float(f64),
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Int(v) => write!(f, "{v}"),
            Value::Float(v) => write!(f, "{v}"),
        }
    }
}

/// Parameter list with lower-case keys, kept sorted for stable printing.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Params(BTreeMap<String, Value>);

impl Params {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, key: &str, value: i64) -> Self {
        self.0.insert(key.to_ascii_lowercase(), Value::Int(value));
        self
    }

    pub fn with_float(mut self, key: &str, value: f64) -> Self {
        self.0.insert(key.to_ascii_lowercase(), Value::Float(value));
        self
    }

    pub fn get(&self, key: &str) -> Option<Value> {
        self.0.get(key).copied()
    }

    pub fn keys(&self) -> impl Iterator<Item = &str> {
        self.0.keys().map(String::as_str)
    }

    fn int(&self, key: &'static str) -> Result<Option<i64>, GenError> {
        match self.0.get(key) {
            None => Ok(None),
            Some(Value::Int(v)) => Ok(Some(*v)),
            Some(Value::Float(_)) => Err(invalid(format!("`{key}` must be an integer"))),
        }
    }

    fn req(&self, key: &'static str) -> Result<i64, GenError> {
        self.int(key)?.ok_or(GenError::MissingParam(key))
    }

    fn float(&self, key: &'static str) -> Option<f64> {
        self.0.get(key).map(|v| match v {
            Value::Int(i) => *i as f64,
            Value::Float(f) => *f,
        })
    }

    /// Joins entries with `sep`, e.g. `k=10000` or `x=16;y=64`.
    pub fn to_string_with(&self, sep: &str) -> String {
        self.0
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(sep)
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_with(","))
    }
}

/// Parses `key=value` pairs separated by `,` or `;`. Values accept an
/// exponent shorthand such as `1e4` or `2^13`.
impl FromStr for Params {
    type Err = GenError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut out = Params::new();
        for item in s.split([',', ';']).map(str::trim).filter(|t| !t.is_empty()) {
            let (k, v) = item
                .split_once('=')
                .ok_or_else(|| GenError::Syntax(format!("`{item}` is not key=value")))?;
            let key = k.trim().to_ascii_lowercase();
            let value = parse_value(v.trim())
                .ok_or_else(|| GenError::Syntax(format!("bad value in `{item}`")))?;
            out.0.insert(key, value);
        }
        Ok(out)
    }
}

fn parse_value(v: &str) -> Option<Value> {
    if let Ok(i) = v.parse::<i64>() {
        return Some(Value::Int(i));
    }
    if let Some((b, e)) = v.split_once('^') {
        let b: i64 = b.parse().ok()?;
        let e: u32 = e.parse().ok()?;
        return b.checked_pow(e).map(Value::Int);
    }
    let f: f64 = v.parse().ok()?;
    if f.fract() == 0.0 && f.abs() < 9.0e15 && (v.contains('e') || v.contains('E')) {
        Some(Value::Int(f as i64))
    } else {
        Some(Value::Float(f))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct GenSpec {
    pub family: Family,
    pub params: Params,
    pub seed: u64,
}

impl GenSpec {
    pub fn new(family: Family, params: Params, seed: u64) -> Self {
        Self {
            family,
            params,
            seed,
        }
    }

    pub fn generate(&self) -> Result<Graph, GenError> {
        generate(self)
    }
}

/// Options of the random-graph generator.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RandOpts {
    pub lo: Length,
    pub hi: Length,
    pub potential: i64,
    pub artificial_source: bool,
    pub unit_cycle: bool,
}

impl Default for RandOpts {
    fn default() -> Self {
        Self {
            lo: 0,
            hi: GRID_MAX_LEN,
            potential: 0,
            artificial_source: false,
            unit_cycle: false,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PathMode {
    Fixed(Length),
    Random,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sign {
    Positive,
    Negative,
}

pub fn generate(spec: &GenSpec) -> Result<Graph, GenError> {
    let p = &spec.params;
    if let Some(bad) = p.keys().find(|k| !spec.family.accepted().contains(k)) {
        return Err(invalid(format!("family {} does not take `{bad}`", spec.family)));
    }
    let seed = spec.seed;
    let size = |key: &'static str| -> Result<usize, GenError> {
        let v = p.req(key)?;
        usize::try_from(v).map_err(|_| invalid(format!("`{key}` must be non-negative")))
    };
    let size_or = |key: &'static str, default: usize| -> Result<usize, GenError> {
        match p.int(key)? {
            None => Ok(default),
            Some(v) => usize::try_from(v).map_err(|_| invalid(format!("`{key}` must be non-negative"))),
        }
    };
    match spec.family {
        Family::Star => gen_star(size("k")?),
        Family::BadGor => gen_bad_gor(size("k")?),
        Family::Grid => gen_spgrid(size("x")?, size("y")?, seed),
        Family::SGrid => {
            let x = size("x")?;
            gen_spgrid(x, size_or("y", x)?, seed)
        }
        Family::WGrid => gen_spgrid(size_or("x", 16)?, size("y")?, seed),
        Family::LGrid => gen_spgrid(size("x")?, size_or("y", 16)?, seed),
        Family::PhGrid => gen_hard_grid(size("x")?, size_or("y", 32)?, seed, Sign::Positive),
        Family::NhGrid => gen_hard_grid(size("x")?, size_or("y", 32)?, seed, Sign::Negative),
        Family::Rand => {
            let n = size("n")?;
            let opts = RandOpts {
                lo: p.int("l")?.unwrap_or(0),
                hi: p.int("u")?.unwrap_or(GRID_MAX_LEN),
                potential: p.int("p")?.unwrap_or(0),
                ..RandOpts::default()
            };
            gen_sprand(n, size_or("m", 4 * n)?, seed, opts)
        }
        Family::SRand => {
            let n = size("n")?;
            gen_sprand(n, size_or("m", 4 * n)?, seed, RandOpts::default())
        }
        Family::DRand => {
            let n = size("n")?;
            gen_sprand(n, size_or("m", n * n / 4)?, seed, RandOpts::default())
        }
        Family::PRand | Family::Pd2sRand | Family::PsRand | Family::PcRand => {
            let n = size("n")?;
            let default_m = if spec.family == Family::PRand { 4 * n } else { 10_000_000 };
            let default_p = if spec.family == Family::PRand { 0 } else { 1_000_000 };
            let opts = RandOpts {
                potential: p.int("p")?.unwrap_or(default_p),
                artificial_source: spec.family == Family::PsRand,
                unit_cycle: spec.family == Family::PcRand,
                ..RandOpts::default()
            };
            gen_sprand(n, size_or("m", default_m)?, seed, opts)
        }
        Family::FpAcyc => {
            let n = size("n")?;
            gen_spacyc(n, size_or("m", 4 * n)?, 0, GRID_MAX_LEN, seed, PathMode::Fixed(1))
        }
        Family::FnAcyc => {
            let n = size("n")?;
            gen_spacyc(n, size_or("m", 4 * n)?, -GRID_MAX_LEN, 0, seed, PathMode::Fixed(-1))
        }
        Family::P2nAcyc => {
            let n = size_or("n", 16_384)?;
            let f = p.float("f").ok_or(GenError::MissingParam("f"))?;
            if !(0.0..=1.0).contains(&f) {
                return Err(invalid("`f` must lie in [0, 1]"));
            }
            let shift = (GRID_MAX_LEN as f64 * f).floor() as i64;
            gen_spacyc(n, size_or("m", 262_144)?, -shift, GRID_MAX_LEN - shift, seed, PathMode::Random)
        }
        Family::Rand05 => {
            let n = size("n")?;
            let lo = p.int("l")?.unwrap_or(0);
            let hi = p.int("u")?.unwrap_or(32_000);
            gen_rand05(n, size_or("m", 5 * n)?, lo, hi, seed)
        }
        Family::Sqnc => {
            let x = size("x")?;
            gen_sqnc(x, size_or("y", x)?, seed)
        }
    }
}

/// Chain `1 -> ... -> k`, every chain vertex feeding the center `k + 1`,
/// which feeds `k + 2 ..= 2k + 1`. All lengths are -1.
pub fn gen_star(k: usize) -> Result<Graph, GenError> {
    if k < 1 {
        return Err(invalid("star needs k >= 1"));
    }
    let c = k + 1;
    let mut arcs = Vec::with_capacity(3 * k - 1);
    arcs.extend((1..k).map(|i| (i, i + 1, -1)));
    arcs.extend((1..=k).map(|i| (i, c, -1)));
    arcs.extend((k + 2..=2 * k + 1).map(|i| (c, i, -1)));
    Ok(Graph::from_one_based(2 * k + 1, &arcs, 1)?)
}

/// Same shape as the star; the chain and the arcs into the center are
/// weighted so that the center improves once per chain vertex.
pub fn gen_bad_gor(k: usize) -> Result<Graph, GenError> {
    if k < 2 {
        return Err(invalid("bad-gor needs k >= 2"));
    }
    let kk = k as i64;
    let c = k + 1;
    let mut arcs = Vec::with_capacity(3 * k - 1);
    arcs.extend((1..k).map(|i| (i, i + 1, if i == 1 { -3 * kk } else { 1 })));
    arcs.extend((1..=k).map(|i| (i, c, if i == 1 { -1 } else { 2 * (kk - i as i64) })));
    arcs.extend((k + 2..=2 * k + 1).map(|i| (c, i, -1)));
    Ok(Graph::from_one_based(2 * k + 1, &arcs, 1)?)
}

fn grid_dims(x: usize, y: usize) -> Result<usize, GenError> {
    if x == 0 || y == 0 {
        return Err(invalid("grid dimensions must be positive"));
    }
    x.checked_mul(y)
        .filter(|&g| g < (u32::MAX as usize) - 2)
        .ok_or_else(|| invalid("grid too large"))
}

/// 1-based id of grid point `[x, y]`.
#[inline]
fn gid(x: usize, y: usize, ny: usize) -> usize {
    (x - 1) * ny + y
}

/// Appends the plain source (arcs to the first layer, drawn from
/// `[lo, hi]`) and the artificial source. Returns the artificial source.
fn add_sources(
    arcs: &mut Vec<(usize, usize, Length)>,
    rng: &mut SplitMix64,
    ny: usize,
    n_grid: usize,
    (lo, hi): (Length, Length),
) -> usize {
    let plain = n_grid + 1;
    for y in 1..=ny {
        arcs.push((plain, gid(1, y, ny), rng.draw(lo, hi)));
    }
    add_artificial(arcs, plain, n_grid + 2, 1..=n_grid)
}

fn add_artificial(
    arcs: &mut Vec<(usize, usize, Length)>,
    plain: usize,
    artificial: usize,
    others: std::ops::RangeInclusive<usize>,
) -> usize {
    // Zero arc first, then the long arcs from the highest id down.
    arcs.push((artificial, plain, 0));
    arcs.extend(others.rev().map(|v| (artificial, v, ARTIFICIAL_LEN)));
    artificial
}

/// Forward, up and down arcs of a layered grid, each group drawn in
/// row-major order from `layer` (up/down) and `forward` ranges.
fn grid_arcs(
    rng: &mut SplitMix64,
    nx: usize,
    ny: usize,
    forward: (Length, Length),
    layer: (Length, Length),
) -> Vec<(usize, usize, Length)> {
    let mut arcs = Vec::new();
    for x in 1..nx {
        for y in 1..=ny {
            arcs.push((gid(x, y, ny), gid(x + 1, y, ny), rng.draw(forward.0, forward.1)));
        }
    }
    if ny > 1 {
        for x in 1..=nx {
            for y in 1..=ny {
                arcs.push((gid(x, y, ny), gid(x, y % ny + 1, ny), rng.draw(layer.0, layer.1)));
            }
        }
        for x in 1..=nx {
            for y in 1..=ny {
                let down = if y == 1 { ny } else { y - 1 };
                arcs.push((gid(x, y, ny), gid(x, down, ny), rng.draw(layer.0, layer.1)));
            }
        }
    }
    arcs
}

/// Simple layered grid with a plain source feeding layer 1 and an
/// artificial source reaching everything.
pub fn gen_spgrid(nx: usize, ny: usize, seed: u64) -> Result<Graph, GenError> {
    let n_grid = grid_dims(nx, ny)?;
    let mut rng = SplitMix64::new(seed);
    let range = (0, GRID_MAX_LEN);
    let mut arcs = grid_arcs(&mut rng, nx, ny, range, range);
    let s = add_sources(&mut arcs, &mut rng, ny, n_grid, range);
    Ok(Graph::from_one_based(n_grid + 2, &arcs, s)?)
}

/// Layers are cycles with random chords and short lengths; every vertex
/// gets one arc to a random higher layer, scaled by the squared layer gap.
pub fn gen_hard_grid(nx: usize, ny: usize, seed: u64, sign: Sign) -> Result<Graph, GenError> {
    if nx < 2 || ny < 3 {
        return Err(invalid("hard grids need x >= 2 and y >= 3"));
    }
    let n_grid = grid_dims(nx, ny)?;
    let mut rng = SplitMix64::new(seed);
    let mut arcs = Vec::new();
    for x in 1..=nx {
        for y in 1..=ny {
            arcs.push((gid(x, y, ny), gid(x, y % ny + 1, ny), rng.draw(1, 100)));
        }
        for _ in 0..ny {
            let a = 1 + rng.index(ny);
            let mut b = 1 + rng.index(ny);
            while b == a {
                b = 1 + rng.index(ny);
            }
            arcs.push((gid(x, a, ny), gid(x, b, ny), rng.draw(1, 100)));
        }
    }
    for x1 in 1..nx {
        for y in 1..=ny {
            let x2 = x1 + 1 + rng.index(nx - x1);
            let y2 = 1 + rng.index(ny);
            let gap = (x2 - x1) as i64;
            let len = rng.draw(0, GRID_MAX_LEN) * gap * gap;
            let len = match sign {
                Sign::Positive => len,
                Sign::Negative => -len,
            };
            arcs.push((gid(x1, y, ny), gid(x2, y2, ny), len));
        }
    }
    let s = add_sources(&mut arcs, &mut rng, ny, n_grid, (0, GRID_MAX_LEN));
    Ok(Graph::from_one_based(n_grid + 2, &arcs, s)?)
}

fn check_range(lo: Length, hi: Length) -> Result<(), GenError> {
    if lo > hi || (hi as i128 - lo as i128) >= (1i128 << 32) {
        return Err(invalid(format!("length range [{lo}, {hi}] is empty or too wide")));
    }
    Ok(())
}

/// Hamiltonian cycle `1 -> 2 -> ... -> n -> 1` plus `m - n` arcs between
/// random distinct vertices. Potentials, when requested, are drawn after
/// all arcs.
pub fn gen_sprand(n: usize, m: usize, seed: u64, opts: RandOpts) -> Result<Graph, GenError> {
    if n < 2 || m < n {
        return Err(invalid("random graphs need n >= 2 and m >= n"));
    }
    check_range(opts.lo, opts.hi)?;
    if opts.potential < 0 {
        return Err(invalid("potential bound must be non-negative"));
    }
    let mut rng = SplitMix64::new(seed);
    let mut arcs = Vec::with_capacity(m + if opts.artificial_source { n } else { 0 });
    for i in 0..n {
        let len = if opts.unit_cycle { 1 } else { rng.draw(opts.lo, opts.hi) };
        arcs.push(Arc::new(i, (i + 1) % n, len));
    }
    for _ in n..m {
        let u = rng.index(n);
        let mut v = rng.index(n);
        while v == u {
            v = rng.index(n);
        }
        arcs.push(Arc::new(u, v, rng.draw(opts.lo, opts.hi)));
    }
    if opts.potential > 0 {
        let pot: Vec<i64> = (0..n).map(|_| rng.draw(0, opts.potential)).collect();
        for a in &mut arcs {
            a.len += pot[a.tail] - pot[a.head];
        }
    }
    let mut source = 0;
    let mut total = n;
    if opts.artificial_source {
        let art = n;
        arcs.push(Arc::new(art, 0, 0));
        arcs.extend((1..n).rev().map(|v| Arc::new(art, v, ARTIFICIAL_LEN)));
        source = art;
        total = n + 1;
    }
    Ok(Graph::new(total, arcs, source)?)
}

/// Path `1 -> 2 -> ... -> n` plus `m - (n - 1)` arcs between random
/// distinct vertices, oriented from lower to higher id.
pub fn gen_spacyc(
    n: usize,
    m: usize,
    lo: Length,
    hi: Length,
    seed: u64,
    path: PathMode,
) -> Result<Graph, GenError> {
    if n < 2 || m + 1 < n {
        return Err(invalid("acyclic graphs need n >= 2 and m >= n - 1"));
    }
    check_range(lo, hi)?;
    let mut rng = SplitMix64::new(seed);
    let mut arcs = Vec::with_capacity(m);
    for i in 0..n - 1 {
        let len = match path {
            PathMode::Fixed(c) => c,
            PathMode::Random => rng.draw(lo, hi),
        };
        arcs.push(Arc::new(i, i + 1, len));
    }
    for _ in n - 1..m {
        let a = rng.index(n);
        let mut b = rng.index(n);
        while b == a {
            b = rng.index(n);
        }
        arcs.push(Arc::new(a.min(b), a.max(b), rng.draw(lo, hi)));
    }
    Ok(Graph::new(n, arcs, 0)?)
}

/// Random graph on `[lo, hi]` without potentials.
pub fn gen_rand05(n: usize, m: usize, lo: Length, hi: Length, seed: u64) -> Result<Graph, GenError> {
    gen_sprand(
        n,
        m,
        seed,
        RandOpts {
            lo,
            hi,
            ..RandOpts::default()
        },
    )
}

/// Layered square grid with a boustrophedon Hamiltonian cycle of total
/// length -1 laid over it.
pub fn gen_sqnc(nx: usize, ny: usize, seed: u64) -> Result<Graph, GenError> {
    if nx != ny || nx < 2 {
        return Err(invalid("sqnc needs x = y >= 2"));
    }
    let n_grid = grid_dims(nx, ny)?;
    let mut rng = SplitMix64::new(seed);
    let mut arcs = grid_arcs(&mut rng, nx, ny, (1, 100), (1000, GRID_MAX_LEN));
    let order: Vec<usize> = (1..=nx)
        .flat_map(|x| {
            let ys: Vec<usize> = if x % 2 == 1 {
                (1..=ny).collect()
            } else {
                (1..=ny).rev().collect()
            };
            ys.into_iter().map(move |y| gid(x, y, ny))
        })
        .collect();
    for w in order.windows(2) {
        arcs.push((w[0], w[1], 1));
    }
    arcs.push((order[n_grid - 1], order[0], -(n_grid as i64)));
    let s = add_sources(&mut arcs, &mut rng, ny, n_grid, (1, 100));
    Ok(Graph::from_one_based(n_grid + 2, &arcs, s)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verifier::oracle_bellman_ford;

    fn triples(g: &Graph) -> Vec<(usize, usize, i64)> {
        g.arcs().iter().map(|a| (a.tail + 1, a.head + 1, a.len)).collect()
    }

    fn dist(g: &Graph) -> Vec<i64> {
        oracle_bellman_ford(g).tree().unwrap().dist.clone()
    }

    #[test]
    fn star_shapes() {
        let g = gen_star(1).unwrap();
        assert_eq!((g.n(), g.m()), (3, 2));
        assert_eq!(triples(&g), vec![(1, 2, -1), (2, 3, -1)]);
        let g = gen_star(2).unwrap();
        assert_eq!(
            triples(&g),
            vec![(1, 2, -1), (1, 3, -1), (2, 3, -1), (3, 4, -1), (3, 5, -1)]
        );
        assert_eq!(dist(&g), vec![0, -1, -2, -3, -3]);
        assert_eq!(gen_star(10_000).unwrap().m(), 29_999);
        assert!(gen_star(0).is_err());
    }

    #[test]
    fn bad_gor_shapes() {
        let g = gen_bad_gor(7).unwrap();
        assert_eq!((g.n(), g.m()), (15, 20));
        let g = gen_bad_gor(2).unwrap();
        assert_eq!(
            triples(&g),
            vec![(1, 2, -6), (1, 3, -1), (2, 3, 0), (3, 4, -1), (3, 5, -1)]
        );
        assert_eq!(dist(&g), vec![0, -6, -6, -7, -7]);
        assert_eq!(gen_bad_gor(10_000).unwrap().arcs()[0].len, -30_000);
        assert!(gen_bad_gor(1).is_err());
    }

    #[test]
    fn spgrid_counts() {
        let g = gen_spgrid(2, 2, 1).unwrap();
        assert_eq!((g.n(), g.m()), (6, 17));
        assert_eq!(g.source(), 5);
        let g = gen_spgrid(1, 1, 1).unwrap();
        assert_eq!((g.n(), g.m()), (3, 3));
        let g = gen_spgrid(5, 7, 3).unwrap();
        let n_grid = 35;
        for a in g.arcs() {
            if a.tail < n_grid {
                assert!((0..=GRID_MAX_LEN).contains(&a.len));
            }
            assert_ne!(a.tail, a.head);
        }
    }

    #[test]
    fn hard_grid_counts() {
        let g = gen_hard_grid(2, 3, 9, Sign::Positive).unwrap();
        // 12 layer arcs, 3 inter-layer, 3 source arcs, 1 + 6 artificial.
        assert_eq!(g.m(), 12 + 3 + 3 + 7);
        let g = gen_hard_grid(6, 5, 4, Sign::Negative).unwrap();
        let inter = &g.arcs()[6 * 10..6 * 10 + 25];
        assert!(inter.iter().all(|a| a.len <= 0));
        assert!(inter.iter().all(|a| a.head / 5 > a.tail / 5));
        let g = gen_hard_grid(6, 5, 4, Sign::Positive).unwrap();
        assert!(g.arcs()[60..85].iter().all(|a| a.len >= 0));
    }

    #[test]
    fn sprand_degenerate_and_telescoping() {
        let opts = RandOpts {
            lo: 7,
            hi: 7,
            ..RandOpts::default()
        };
        let g = gen_sprand(2, 2, 5, opts).unwrap();
        assert_eq!(triples(&g), vec![(1, 2, 7), (2, 1, 7)]);

        let plain = gen_sprand(40, 160, 11, RandOpts::default()).unwrap();
        let shifted = gen_sprand(
            40,
            160,
            11,
            RandOpts {
                potential: 1_000_000,
                ..RandOpts::default()
            },
        )
        .unwrap();
        assert!(shifted.arcs().iter().any(|a| a.len < 0));
        assert!(oracle_bellman_ford(&shifted).tree().is_some());
        // Same arcs, and cycle sums telescope.
        for (a, b) in plain.arcs().iter().zip(shifted.arcs()) {
            assert_eq!((a.tail, a.head), (b.tail, b.head));
        }
        let s1: i64 = plain.arcs()[..40].iter().map(|a| a.len).sum();
        let s2: i64 = shifted.arcs()[..40].iter().map(|a| a.len).sum();
        assert_eq!(s1, s2);
    }

    #[test]
    fn sprand_variants() {
        let opts = RandOpts {
            artificial_source: true,
            unit_cycle: true,
            ..RandOpts::default()
        };
        let g = gen_sprand(10, 30, 2, opts).unwrap();
        assert_eq!((g.n(), g.m(), g.source()), (11, 40, 10));
        assert!(g.arcs()[..10].iter().all(|a| a.len == 1));
        assert!(gen_sprand(10, 9, 2, RandOpts::default()).is_err());
    }

    #[test]
    fn spacyc_paths() {
        let g = gen_spacyc(4, 3, 0, GRID_MAX_LEN, 1, PathMode::Fixed(1)).unwrap();
        assert_eq!(dist(&g), vec![0, 1, 2, 3]);
        let g = gen_spacyc(4, 3, -GRID_MAX_LEN, 0, 1, PathMode::Fixed(-1)).unwrap();
        assert_eq!(dist(&g), vec![0, -1, -2, -3]);
        let g = gen_spacyc(50, 400, -5000, 5000, 3, PathMode::Random).unwrap();
        assert!(g.arcs().iter().all(|a| a.tail < a.head));
    }

    #[test]
    fn sqnc_cycle_weight() {
        let g = gen_sqnc(4, 4, 1).unwrap();
        let ham: Vec<_> = g.arcs().iter().filter(|a| a.len == 1 || a.len == -16).collect();
        assert!(ham.len() >= 16);
        let closer = g.arcs().iter().find(|a| a.len == -16).unwrap();
        // Layer 4 runs downwards, so the tour ends at [4, 1].
        assert_eq!((closer.tail + 1, closer.head + 1), (13, 1));
        for a in &g.arcs()[..12] {
            assert!((1..=100).contains(&a.len));
        }
        for a in &g.arcs()[12..12 + 32] {
            assert!((1000..=GRID_MAX_LEN).contains(&a.len));
        }
        assert!(gen_sqnc(3, 4, 1).is_err());
    }

    #[test]
    fn params_parsing() {
        let p: Params = "k=1e4".parse().unwrap();
        assert_eq!(p.get("k"), Some(Value::Int(10_000)));
        let p: Params = "X=16, Y=2^6".parse().unwrap();
        assert_eq!(p.get("x"), Some(Value::Int(16)));
        assert_eq!(p.get("y"), Some(Value::Int(64)));
        assert_eq!(p.to_string_with(";"), "x=16;y=64");
        let p: Params = "n=8,f=0.25".parse().unwrap();
        assert_eq!(p.get("f"), Some(Value::Float(0.25)));
        assert!("k".parse::<Params>().is_err());
        assert!("k=abc".parse::<Params>().is_err());
    }

    #[test]
    fn family_names() {
        for f in Family::ALL {
            assert_eq!(f.as_str().parse::<Family>().unwrap(), f);
        }
        assert_eq!("BadGoR".parse::<Family>().unwrap(), Family::BadGor);
        assert_eq!("SQNC05".parse::<Family>().unwrap(), Family::Sqnc);
        assert!("nope".parse::<Family>().is_err());
    }

    #[test]
    fn spec_dispatch() {
        let spec = GenSpec::new(Family::P2nAcyc, "n=100,m=400,f=0.5".parse().unwrap(), 1);
        let g = spec.generate().unwrap();
        assert!(g.arcs().iter().all(|a| (-5000..=5000).contains(&a.len)));
        let spec = GenSpec::new(Family::Star, "k=3,x=2".parse().unwrap(), 1);
        assert!(matches!(spec.generate(), Err(GenError::Invalid(_))));
        let spec = GenSpec::new(Family::SRand, Params::new(), 1);
        assert_eq!(spec.generate().unwrap_err(), GenError::MissingParam("n"));
    }
}
