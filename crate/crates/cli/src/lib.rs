//! Command-line front end: flag and config-file parsing, dispatch to the core
//! library, and JSON or aligned-table reports.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};

use sgsmooth_core::arith::{
    chevalley_steinberg_order, default_sweep_types, finite_group_name, implication_sweep, is_banal,
    is_considerate, QContext,
};
use sgsmooth_core::classifier::{classify_component, classify_product};
use sgsmooth_core::field::PrimeField;
use sgsmooth_core::orbits::{
    classical_orbits, classical_types_up_to, criterion_equivalence_sweep, distinguished_table,
    exposed_root_sweep, f4_levi_table, grading_dims, is_distinguished, is_regular, is_very_even,
    smooth_bound_r, weighted_dynkin, OrbitLabel,
};
use sgsmooth_core::rootsys::{build_root_system, DynkinType, Family, RootSystem};
use sgsmooth_core::variety::points::{sqrt_mod, ENUMERATION_MAX_P};
use sgsmooth_core::variety::{
    bundle_count_check, enumerate_sg, epsilon_certificate, exp_bridge_check,
    nilpotency_redundancy_check, stratum_sample, summarize_enumeration, tangent_dim, GroupKind,
    GroupSpec, SGPoint,
};
use sgsmooth_core::Error as CoreError;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] CoreError),
    #[error("{path}: {message}")]
    Io { path: String, message: String },
}

impl CliError {
    /// `2` for a failed check, `1` for anything the caller got wrong.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(CoreError::CertificateInvalid(_)) => 2,
            _ => 1,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Usage(_) => "usage",
            CliError::Core(CoreError::CertificateInvalid(_)) => "check_failed",
            CliError::Core(CoreError::Inconsiderate { .. }) => "inconsiderate",
            CliError::Core(CoreError::MalformedOrbit(_) | CoreError::InvalidOrbit { .. }) => {
                "orbit"
            }
            CliError::Core(
                CoreError::UnknownGroup(_)
                | CoreError::InadmissibleType { .. }
                | CoreError::UnsupportedType(_),
            ) => "group",
            CliError::Core(_) => "precondition",
            CliError::Io { .. } => "io",
        }
    }

    /// One line of JSON for stderr.
    pub fn to_json_line(&self) -> String {
        json!({"code": self.exit_code(), "error": self.kind(), "message": self.to_string()})
            .to_string()
    }
}

type CliResult<T> = Result<T, CliError>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Json,
    Table,
}

#[derive(Debug, Parser)]
#[command(name = "sgsmooth", version, about = "Smoothness of components of S_G, with exact checks over F_p")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub flags: Flags,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Smooth/singular verdict for X_C (products as `A1*A2` with orbits `2;3`).
    Classify,
    /// Orbits of a classical type, or the stored orbits of E6/E7.
    Orbits,
    /// Weighted Dynkin diagram of an orbit, a distinguished table, or `--sweep`.
    Wdd,
    #[command(subcommand)]
    Arith(ArithOp),
    #[command(subcommand)]
    Verify(VerifyOp),
    /// Singularity certificate at (Φ₀, 0) for a non-distinguished orbit.
    Certify,
}

#[derive(Debug, Clone, Copy, Subcommand)]
pub enum ArithOp {
    Considerate,
    Banal,
    Order,
    Sweep,
}

#[derive(Debug, Clone, Copy, Subcommand)]
pub enum VerifyOp {
    Enumerate,
    Tangent,
    Nilpotency,
    Expbridge,
    Bundle,
}

impl Command {
    pub fn name(&self) -> String {
        match self {
            Command::Classify => "classify".into(),
            Command::Orbits => "orbits".into(),
            Command::Wdd => "wdd".into(),
            Command::Arith(op) => format!("arith {}", format!("{op:?}").to_lowercase()),
            Command::Verify(op) => format!("verify {}", format!("{op:?}").to_lowercase()),
            Command::Certify => "certify".into(),
        }
    }
}

#[derive(Debug, Clone, Default, Args)]
pub struct Flags {
    #[arg(long, global = true)]
    pub group: Option<String>,
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub orbit: Option<String>,
    #[arg(long, global = true)]
    pub p: Option<u64>,
    #[arg(long, global = true)]
    pub s: Option<u64>,
    #[arg(long, global = true)]
    pub q: Option<u64>,
    #[arg(long, global = true)]
    pub l: Option<u64>,
    /// Simple root α for `certify`, 1-based.
    #[arg(long, global = true)]
    pub alpha: Option<usize>,
    #[arg(long, global = true)]
    pub samples: Option<usize>,
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    #[arg(long = "rank-bound", global = true)]
    pub rank_bound: Option<usize>,
    #[arg(long = "l-bound", global = true)]
    pub l_bound: Option<u64>,
    #[arg(long = "q-bound", global = true)]
    pub q_bound: Option<u64>,
    /// Run the exhaustive diagram sweeps (`wdd`).
    #[arg(long, global = true)]
    pub sweep: bool,
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Flat `key = value` file; flags given on the command line win.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
}

/// Parameters after merging the config file under the command-line flags.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RunConfig {
    pub group: Option<String>,
    pub orbit: Option<String>,
    pub p: Option<u64>,
    pub s: Option<u64>,
    pub q: Option<u64>,
    pub l: Option<u64>,
    pub alpha: Option<usize>,
    pub samples: Option<usize>,
    pub seed: Option<u64>,
    pub rank_bound: Option<usize>,
    pub l_bound: Option<u64>,
    pub q_bound: Option<u64>,
    pub sweep: bool,
    pub out: Option<PathBuf>,
    pub format: Format,
}

const CONFIG_KEYS: &[&str] = &[
    "group", "orbit", "p", "s", "q", "l", "alpha", "samples", "seed", "rank-bound", "l-bound",
    "q-bound", "sweep", "out", "format",
];

/// Parse `key = value` lines. `#` starts a comment; keys may use `-` or `_`.
pub fn parse_config(text: &str) -> CliResult<BTreeMap<String, String>> {
    let mut out = BTreeMap::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (k, v) = line
            .split_once('=')
            .ok_or_else(|| CliError::Usage(format!("config line {}: expected key = value", i + 1)))?;
        let key = k.trim().trim_start_matches("--").replace('_', "-");
        if !CONFIG_KEYS.contains(&key.as_str()) {
            return Err(CliError::Usage(format!("config line {}: unknown key {key:?}", i + 1)));
        }
        out.insert(key, v.trim().to_string());
    }
    Ok(out)
}

fn parse_value<T: std::str::FromStr>(key: &str, v: &str) -> CliResult<T> {
    v.parse()
        .map_err(|_| CliError::Usage(format!("config value for {key}: cannot parse {v:?}")))
}

impl RunConfig {
    pub fn from_flags(flags: &Flags) -> CliResult<Self> {
        let file = match &flags.config {
            Some(path) => {
                let text = std::fs::read_to_string(path).map_err(|e| CliError::Io {
                    path: path.display().to_string(),
                    message: e.to_string(),
                })?;
                parse_config(&text)?
            }
            None => BTreeMap::new(),
        };
        Self::merge(flags, &file)
    }

    pub fn merge(flags: &Flags, file: &BTreeMap<String, String>) -> CliResult<Self> {
        fn pick<T: std::str::FromStr + Clone>(
            flag: &Option<T>,
            file: &BTreeMap<String, String>,
            key: &str,
        ) -> CliResult<Option<T>> {
            match (flag, file.get(key)) {
                (Some(v), _) => Ok(Some(v.clone())),
                (None, Some(v)) => parse_value(key, v).map(Some),
                (None, None) => Ok(None),
            }
        }
        let format = match (flags.format, file.get("format")) {
            (Some(f), _) => f,
            (None, Some(v)) => Format::from_str(v, true)
                .map_err(|_| CliError::Usage(format!("config value for format: {v:?}")))?,
            (None, None) => Format::Json,
        };
        let sweep = flags.sweep
            || match file.get("sweep") {
                Some(v) => parse_value::<bool>("sweep", v)?,
                None => false,
            };
        Ok(RunConfig {
            group: pick(&flags.group, file, "group")?,
            orbit: pick(&flags.orbit, file, "orbit")?,
            p: pick(&flags.p, file, "p")?,
            s: pick(&flags.s, file, "s")?,
            q: pick(&flags.q, file, "q")?,
            l: pick(&flags.l, file, "l")?,
            alpha: pick(&flags.alpha, file, "alpha")?,
            samples: pick(&flags.samples, file, "samples")?,
            seed: pick(&flags.seed, file, "seed")?,
            rank_bound: pick(&flags.rank_bound, file, "rank-bound")?,
            l_bound: pick(&flags.l_bound, file, "l-bound")?,
            q_bound: pick(&flags.q_bound, file, "q-bound")?,
            sweep,
            out: pick(&flags.out, file, "out")?,
            format,
        })
    }

    /// Echo of the parameters that influence results (not `out`/`format`).
    pub fn inputs(&self) -> Map<String, Value> {
        let mut m = Map::new();
        let mut put = |k: &str, v: Option<Value>| {
            if let Some(v) = v {
                m.insert(k.to_string(), v);
            }
        };
        put("group", self.group.clone().map(Value::from));
        put("orbit", self.orbit.clone().map(Value::from));
        put("p", self.p.map(Value::from));
        put("s", self.s.map(Value::from));
        put("q", self.q.map(Value::from));
        put("l", self.l.map(Value::from));
        put("alpha", self.alpha.map(Value::from));
        put("samples", self.samples.map(Value::from));
        put("seed", self.seed.map(Value::from));
        put("rank_bound", self.rank_bound.map(Value::from));
        put("l_bound", self.l_bound.map(Value::from));
        put("q_bound", self.q_bound.map(Value::from));
        if self.sweep {
            put("sweep", Some(Value::from(true)));
        }
        m
    }

    fn need<T: Copy>(&self, v: Option<T>, flag: &str) -> CliResult<T> {
        v.ok_or_else(|| CliError::Usage(format!("missing --{flag}")))
    }

    fn group(&self) -> CliResult<&str> {
        self.group
            .as_deref()
            .ok_or_else(|| CliError::Usage("missing --group".into()))
    }

    fn orbit(&self) -> CliResult<&str> {
        self.orbit
            .as_deref()
            .ok_or_else(|| CliError::Usage("missing --orbit".into()))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub schema_version: u32,
    pub command: String,
    pub inputs: Map<String, Value>,
    pub results: Value,
    /// Sources of stored table rows used in the results.
    pub provenance: Vec<String>,
    /// Whether the checks run by the command held.
    pub passed: bool,
}

impl Report {
    /// Pretty JSON with keys in sorted order.
    pub fn to_json(&self) -> String {
        let v = serde_json::to_value(self).expect("report serializes");
        let mut s = serde_json::to_string_pretty(&v).expect("value serializes");
        s.push('\n');
        s
    }

    /// Two aligned columns of `path value`.
    pub fn to_table(&self) -> String {
        let v = serde_json::to_value(self).expect("report serializes");
        let mut rows = Vec::new();
        flatten("", &v, &mut rows);
        let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
        let mut out = String::new();
        for (k, v) in rows {
            let _ = writeln!(out, "{k:<width$}  {v}");
        }
        out
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => self.to_json(),
            Format::Table => self.to_table(),
        }
    }
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("-".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        _ => None,
    }
}

fn flatten(prefix: &str, v: &Value, rows: &mut Vec<(String, String)>) {
    let join = |k: &str| {
        if prefix.is_empty() {
            k.to_string()
        } else {
            format!("{prefix}.{k}")
        }
    };
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                flatten(&join(k), x, rows);
            }
        }
        Value::Array(xs) if xs.iter().all(|x| scalar(x).is_some()) => {
            let parts: Vec<String> = xs.iter().filter_map(scalar).collect();
            rows.push((prefix.to_string(), format!("[{}]", parts.join(","))));
        }
        Value::Array(xs) => {
            for (i, x) in xs.iter().enumerate() {
                flatten(&join(&i.to_string()), x, rows);
            }
        }
        _ => rows.push((prefix.to_string(), scalar(v).unwrap_or_default())),
    }
}

struct Outcome {
    results: Value,
    provenance: Vec<String>,
    passed: bool,
}

impl Outcome {
    fn ok(results: Value) -> Self {
        Self {
            results,
            provenance: Vec::new(),
            passed: true,
        }
    }
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("report types serialize")
}

fn root_system(name: &str) -> CliResult<RootSystem> {
    Ok(build_root_system(name.parse::<DynkinType>()?)?)
}

fn q_context(cfg: &RunConfig) -> CliResult<QContext> {
    let q = cfg.need(cfg.q, "q")?;
    Ok(QContext::new(q, cfg.l.unwrap_or(0))?)
}

fn partition(s: &str) -> CliResult<Vec<u32>> {
    let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
    let parts: Vec<u32> = inner
        .split(',')
        .map(|x| x.trim().parse::<u32>())
        .collect::<Result<_, _>>()
        .map_err(|_| CoreError::MalformedOrbit(s.to_string()))?;
    if parts.iter().any(|&x| x == 0) || parts.windows(2).any(|w| w[0] < w[1]) {
        return Err(CoreError::MalformedOrbit(s.to_string()).into());
    }
    Ok(parts)
}

fn matrix_group(cfg: &RunConfig) -> CliResult<Arc<GroupSpec>> {
    let p = cfg.need(cfg.p, "p")?;
    let field = PrimeField::new(p)?;
    let t: DynkinType = cfg.group()?.parse()?;
    let spec = match t.variant {
        sgsmooth_core::rootsys::Variant::GeneralLinear => GroupSpec::gl(t.rank + 1, field)?,
        sgsmooth_core::rootsys::Variant::GeneralSymplectic => GroupSpec::gsp4(field)?,
        _ => {
            return Err(CliError::Usage(format!(
                "{t}: matrix checks take GL2, GL3, GL4 or GSp4"
            )))
        }
    };
    Ok(Arc::new(spec))
}

fn cmd_classify(cfg: &RunConfig) -> CliResult<Outcome> {
    let ctx = q_context(cfg)?;
    let groups: Vec<&str> = cfg.group()?.split('*').collect();
    let orbits: Vec<&str> = cfg.orbit()?.split(';').collect();
    if groups.len() != orbits.len() {
        return Err(CliError::Usage(format!(
            "{} group factors but {} orbits",
            groups.len(),
            orbits.len()
        )));
    }
    let mut components = Vec::new();
    for (g, o) in groups.iter().zip(&orbits) {
        let rs = root_system(g)?;
        let label = OrbitLabel::parse(&rs, o)?;
        components.push((rs, label));
    }
    let results = if components.len() == 1 {
        let (rs, o) = &components[0];
        to_value(&classify_component(rs, o, &ctx)?)
    } else {
        to_value(&classify_product(&components, &ctx)?)
    };
    let mut provenance: Vec<String> = components
        .iter()
        .filter_map(|(rs, o)| match o {
            OrbitLabel::Named { diagram, .. } => distinguished_table(rs.dynkin_type)
                .ok()?
                .into_iter()
                .find(|r| &r.diagram == diagram)?
                .provenance,
            OrbitLabel::Partition(_) => None,
        })
        .collect();
    provenance.sort();
    provenance.dedup();
    Ok(Outcome {
        results,
        provenance,
        passed: true,
    })
}

fn orbit_row(rs: &RootSystem, o: &OrbitLabel) -> CliResult<Value> {
    let w = weighted_dynkin(rs, o)?;
    Ok(json!({
        "orbit": o.to_string(),
        "diagram": w.to_string(),
        "distinguished": is_distinguished(rs, o),
        "regular": is_regular(rs, o),
        "very_even": is_very_even(rs, o),
    }))
}

fn cmd_orbits(cfg: &RunConfig) -> CliResult<Outcome> {
    let rs = root_system(cfg.group()?)?;
    let mut provenance = Vec::new();
    let rows: Vec<Value> = if rs.dynkin_type.family.is_classical() {
        classical_orbits(&rs)?
            .iter()
            .map(|o| orbit_row(&rs, o))
            .collect::<CliResult<_>>()?
    } else {
        let table = distinguished_table(rs.dynkin_type)?;
        provenance.extend(table.iter().filter_map(|r| r.provenance.clone()));
        table
            .iter()
            .map(|r| {
                json!({
                    "orbit": r.orbit.to_string(),
                    "diagram": r.diagram.to_string(),
                    "distinguished": true,
                    "regular": r.diagram.labels.iter().all(|&l| l == 2),
                    "provenance": r.provenance,
                })
            })
            .collect()
    };
    provenance.dedup();
    let distinguished = rows.iter().filter(|r| r["distinguished"] == true).count();
    Ok(Outcome {
        results: json!({
            "group": rs.dynkin_type.to_string(),
            "count": rows.len(),
            "distinguished_count": distinguished,
            "orbits": rows,
        }),
        provenance,
        passed: true,
    })
}

/// `D_n` drawn as the chain `α_1..α_{n−1}` with `α_n` forking off `α_{n−2}`.
fn d_layout(labels: &[u8]) -> Value {
    let n = labels.len();
    let chain: Vec<String> = labels[..n - 1].iter().map(u8::to_string).collect();
    json!({"chain": chain.join(","), "fork": labels[n - 1].to_string()})
}

fn cmd_wdd(cfg: &RunConfig) -> CliResult<Outcome> {
    if cfg.sweep {
        return wdd_sweep(cfg);
    }
    let rs = root_system(cfg.group()?)?;
    let t = rs.dynkin_type;
    if let Some(o) = &cfg.orbit {
        let o = OrbitLabel::parse(&rs, o)?;
        let w = weighted_dynkin(&rs, &o)?;
        let dims = grading_dims(&rs, &w)?;
        let mut results = json!({
            "group": t.to_string(),
            "orbit": o.to_string(),
            "labels": w.labels,
            "diagram": w.to_string(),
            "even": w.is_even(),
            "distinguished": is_distinguished(&rs, &o),
            "grading": dims.dims.iter().map(|(k, v)| (k.to_string(), Value::from(*v))).collect::<Map<_, _>>(),
            "smooth_bound_r": smooth_bound_r(&dims),
        });
        if t.family == Family::D {
            results["layout"] = d_layout(&w.labels);
        }
        let provenance = distinguished_table(t)
            .ok()
            .and_then(|rows| rows.into_iter().find(|r| r.diagram == w))
            .and_then(|r| r.provenance)
            .into_iter()
            .collect();
        return Ok(Outcome {
            results,
            provenance,
            passed: true,
        });
    }
    if t.family == Family::F {
        let rows = f4_levi_table();
        let provenance = rows.first().map(|r| r.provenance.clone()).into_iter().collect();
        return Ok(Outcome {
            results: json!({"group": t.to_string(), "levi_rows": to_value(&rows)}),
            provenance,
            passed: true,
        });
    }
    let rows = distinguished_table(t)?;
    let mut provenance: Vec<String> = rows.iter().filter_map(|r| r.provenance.clone()).collect();
    provenance.dedup();
    let rows: Vec<Value> = rows
        .iter()
        .map(|r| {
            let mut v = json!({
                "orbit": r.orbit.to_string(),
                "labels": r.diagram.labels,
                "diagram": r.diagram.to_string(),
                "provenance": r.provenance,
            });
            if t.family == Family::D {
                v["layout"] = d_layout(&r.diagram.labels);
            }
            v
        })
        .collect();
    Ok(Outcome {
        results: json!({"group": t.to_string(), "count": rows.len(), "distinguished": rows}),
        provenance,
        passed: true,
    })
}

fn wdd_sweep(cfg: &RunConfig) -> CliResult<Outcome> {
    let rank = cfg.rank_bound.unwrap_or(7);
    let classical = classical_types_up_to(rank);
    let mut ambients = classical.clone();
    for name in ["E6", "E7", "F4", "G2"] {
        let t: DynkinType = name.parse()?;
        if t.rank <= rank {
            ambients.push(t);
        }
    }
    let exposed = exposed_root_sweep(&ambients)?;
    let criterion = criterion_equivalence_sweep(&classical)?;
    Ok(Outcome {
        passed: exposed.passed() && criterion.passed(),
        results: json!({"exposed_roots": to_value(&exposed), "criterion": to_value(&criterion)}),
        provenance: Vec::new(),
    })
}

fn cmd_arith(cfg: &RunConfig, op: ArithOp) -> CliResult<Outcome> {
    match op {
        ArithOp::Considerate => {
            let rs = root_system(cfg.group()?)?;
            let ctx = q_context(cfg)?;
            let h = rs.coxeter_number;
            Ok(Outcome::ok(json!({
                "group": rs.dynkin_type.to_string(),
                "h": h,
                "order_of_q": ctx.order(),
                "failing_power": ctx.failing_power(h),
                "considerate": is_considerate(&ctx, h),
            })))
        }
        ArithOp::Banal => {
            let rs = root_system(cfg.group()?)?;
            let q = cfg.need(cfg.q, "q")?;
            let l = cfg.need(cfg.l, "l")?;
            let ctx = QContext::new(q, l)?;
            Ok(Outcome::ok(json!({
                "group": rs.dynkin_type.to_string(),
                "finite_group": finite_group_name(rs.dynkin_type),
                "banal": is_banal(l, &rs, q)?,
                "considerate": is_considerate(&ctx, rs.coxeter_number),
                "order_of_q": ctx.order(),
                "h": rs.coxeter_number,
            })))
        }
        ArithOp::Order => {
            let rs = root_system(cfg.group()?)?;
            let q = cfg.need(cfg.q, "q")?;
            if q < 2 {
                return Err(CoreError::InvalidContext(format!("q must be at least 2, got {q}")).into());
            }
            Ok(Outcome::ok(json!({
                "group": rs.dynkin_type.to_string(),
                "finite_group": finite_group_name(rs.dynkin_type),
                "order": chevalley_steinberg_order(&rs, q).to_string(),
                "positive_roots": rs.num_positive_roots(),
                "degrees": rs.fundamental_degrees,
            })))
        }
        ArithOp::Sweep => {
            let types = match &cfg.group {
                Some(list) => list
                    .split(',')
                    .map(|g| g.parse::<DynkinType>())
                    .collect::<Result<Vec<_>, _>>()?,
                None => default_sweep_types(),
            };
            let report = implication_sweep(
                &types,
                cfg.rank_bound.unwrap_or(3),
                cfg.l_bound.unwrap_or(50),
                cfg.q_bound.unwrap_or(20),
            )?;
            Ok(Outcome {
                passed: report.passed(),
                results: to_value(&report),
                provenance: Vec::new(),
            })
        }
    }
}

fn histogram(values: impl IntoIterator<Item = usize>) -> Map<String, Value> {
    let mut h: BTreeMap<usize, u64> = BTreeMap::new();
    for v in values {
        *h.entry(v).or_default() += 1;
    }
    h.into_iter().map(|(k, v)| (k.to_string(), Value::from(v))).collect()
}

fn considerate_for(spec: &GroupSpec, q: u64) -> bool {
    QContext::new(q, spec.field().modulus()).is_ok_and(|c| is_considerate(&c, spec.coxeter_number()))
}

fn cmd_verify(cfg: &RunConfig, op: VerifyOp) -> CliResult<Outcome> {
    let spec = matrix_group(cfg)?;
    let q = cfg.need(cfg.q, "q")?;
    let seed = cfg.seed.unwrap_or(0);
    let dim_g = spec.dim_g();
    match op {
        VerifyOp::Enumerate => {
            let points = enumerate_sg(&spec, q)?;
            let summary = summarize_enumeration(&spec, q, &points);
            let mut regular_ok = true;
            let mut zero_ok = true;
            let mut regular_dims = Vec::new();
            for pt in &points {
                let t = tangent_dim(pt).tangent_dim;
                if pt.n_mat.is_zero() {
                    zero_ok &= t == dim_g + spec.eigenspace_dim(&pt.phi, pt.q)?;
                } else {
                    regular_dims.push(t);
                    regular_ok &= t == dim_g;
                }
            }
            // With inconsiderate q the open-stratum claim is not asserted.
            let passed = zero_ok && (!summary.considerate || regular_ok);
            Ok(Outcome {
                passed,
                results: json!({
                    "summary": to_value(&summary),
                    "regular_tangent_histogram": histogram(regular_dims),
                    "regular_tangent_equals_dim_g": regular_ok,
                    "zero_stratum_matches_decoupled_formula": zero_ok,
                    "dim_g": dim_g,
                }),
                provenance: Vec::new(),
            })
        }
        VerifyOp::Tangent => {
            let parts = partition(cfg.orbit()?)?;
            let count = cfg.samples.unwrap_or(50);
            let points = stratum_sample(&spec, q, &parts, count, seed)?;
            let dims: Vec<usize> = points.iter().map(|pt| tangent_dim(pt).tangent_dim).collect();
            let regular = spec.orbit_model(&parts)?.levi.len() == spec.rank();
            let considerate = considerate_for(&spec, q);
            let at_least = dims.iter().all(|&d| d >= dim_g);
            let exact = dims.iter().all(|&d| d == dim_g);
            let expect_exact = regular && considerate;
            Ok(Outcome {
                passed: !points.is_empty() && at_least && (!expect_exact || exact),
                results: json!({
                    "group": spec.name(),
                    "orbit": parts,
                    "points": points.len(),
                    "dim_g": dim_g,
                    "considerate": considerate,
                    "distinguished": regular,
                    "tangent_histogram": histogram(dims),
                    "all_at_least_dim_g": at_least,
                    "all_equal_dim_g": exact,
                }),
                provenance: Vec::new(),
            })
        }
        VerifyOp::Nilpotency => {
            let report = nilpotency_redundancy_check(&spec, q, cfg.samples.unwrap_or(200), seed)?;
            Ok(Outcome {
                passed: report.passed(),
                results: to_value(&report),
                provenance: Vec::new(),
            })
        }
        VerifyOp::Expbridge => {
            let exhaustive = spec.kind() == GroupKind::GL(2) && spec.field().modulus() <= ENUMERATION_MAX_P;
            let points: Vec<SGPoint> = if exhaustive {
                enumerate_sg(&spec, q)?
            } else {
                let count = cfg.samples.unwrap_or(20);
                let mut pts = Vec::new();
                for o in strata(&spec) {
                    pts.extend(stratum_sample(&spec, q, &o, count, seed)?);
                }
                pts
            };
            let mut holds = 0u64;
            for pt in &points {
                holds += u64::from(exp_bridge_check(pt)?);
            }
            Ok(Outcome {
                passed: holds == points.len() as u64 && !points.is_empty(),
                results: json!({
                    "group": spec.name(),
                    "exhaustive": exhaustive,
                    "points": points.len(),
                    "holds": holds,
                }),
                provenance: Vec::new(),
            })
        }
        VerifyOp::Bundle => {
            let report = bundle_count_check(&spec, q, cfg.samples.unwrap_or(20), seed)?;
            Ok(Outcome {
                passed: report.passed(),
                results: to_value(&report),
                provenance: Vec::new(),
            })
        }
    }
}

/// Jordan types of the matrix group's nilpotent orbits.
fn strata(spec: &GroupSpec) -> Vec<Vec<u32>> {
    match spec.kind() {
        GroupKind::GL(n) => sgsmooth_core::orbits::partitions(n as u32),
        GroupKind::GSp4 => vec![vec![4], vec![2, 2], vec![2, 1, 1], vec![1, 1, 1, 1]],
    }
}

fn cmd_certify(cfg: &RunConfig) -> CliResult<Outcome> {
    let spec = matrix_group(cfg)?;
    let parts = partition(cfg.orbit()?)?;
    let s = match (cfg.s, cfg.q) {
        (Some(s), _) => s,
        (None, Some(q)) => sqrt_mod(spec.field(), q).ok_or_else(|| {
            CliError::Usage(format!("q = {q} is not a square mod {}; pass --s", spec.field().modulus()))
        })?,
        (None, None) => return Err(CliError::Usage("missing --s".into())),
    };
    let alpha = match cfg.alpha {
        Some(0) => return Err(CliError::Usage("--alpha is 1-based".into())),
        a => a.map(|a| a - 1),
    };
    let cert = epsilon_certificate(&spec, &parts, s, alpha)?;
    Ok(Outcome {
        passed: cert.is_valid(),
        results: json!({
            "certificate": to_value(&cert),
            "valid": cert.is_valid(),
            "tangent_interval": [cert.lower_bound, cert.ambient_tangent_dim],
        }),
        provenance: Vec::new(),
    })
}

/// Run a command against a resolved configuration.
pub fn execute(command: &Command, cfg: &RunConfig) -> CliResult<Report> {
    let outcome = match command {
        Command::Classify => cmd_classify(cfg),
        Command::Orbits => cmd_orbits(cfg),
        Command::Wdd => cmd_wdd(cfg),
        Command::Arith(op) => cmd_arith(cfg, *op),
        Command::Verify(op) => cmd_verify(cfg, *op),
        Command::Certify => cmd_certify(cfg),
    }?;
    Ok(Report {
        schema_version: SCHEMA_VERSION,
        command: command.name(),
        inputs: cfg.inputs(),
        results: outcome.results,
        provenance: outcome.provenance,
        passed: outcome.passed,
    })
}

fn write_out(path: &Path, text: &str) -> CliResult<()> {
    std::fs::write(path, text).map_err(|e| CliError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })
}

/// Parse arguments, run, print; returns the process exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn std::io::Write, stderr: &mut dyn std::io::Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(stdout, "{e}");
                return 0;
            }
            let msg = e.to_string();
            let first = msg.lines().next().unwrap_or("").trim_start_matches("error: ");
            let _ = writeln!(stderr, "{}", CliError::Usage(first.to_string()).to_json_line());
            return 1;
        }
    };
    let result = RunConfig::from_flags(&cli.flags).and_then(|cfg| {
        let report = execute(&cli.command, &cfg)?;
        let text = report.render(cfg.format);
        match &cfg.out {
            Some(path) => write_out(path, &text)?,
            None => {
                let _ = stdout.write_all(text.as_bytes());
            }
        }
        Ok(report.passed)
    });
    match result {
        Ok(true) => 0,
        Ok(false) => {
            let err = json!({"code": 2, "error": "check_failed", "message": "a verified property did not hold; see report"});
            let _ = writeln!(stderr, "{err}");
            2
        }
        Err(e) => {
            let _ = writeln!(stderr, "{}", e.to_json_line());
            e.exit_code()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(
            std::iter::once("sgsmooth").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn config_file_is_overridden_by_flags() {
        let file = parse_config("group = GL3\nq = 5 # comment\n\nl=11\n").unwrap();
        let flags = Flags {
            q: Some(4),
            ..Flags::default()
        };
        let cfg = RunConfig::merge(&flags, &file).unwrap();
        assert_eq!(cfg.group.as_deref(), Some("GL3"));
        assert_eq!((cfg.q, cfg.l), (Some(4), Some(11)));
        assert!(parse_config("bogus = 1").is_err());
        assert!(parse_config("no equals sign").is_err());
    }

    #[test]
    fn report_round_trips() {
        let (code, out, _) = run_args(&["classify", "--group", "GL3", "--orbit", "2,1", "--q", "4", "--l", "11"]);
        assert_eq!(code, 0);
        let r: Report = serde_json::from_str(&out).unwrap();
        assert_eq!(r.results["status"], "Singular");
        assert_eq!(r.to_json(), out);
    }

    #[test]
    fn exit_codes() {
        let (code, _, err) = run_args(&["classify", "--group", "GL3", "--orbit", "2,2", "--q", "4"]);
        assert_eq!(code, 1);
        assert_eq!(err.lines().count(), 1);
        let v: Value = serde_json::from_str(err.trim()).unwrap();
        assert_eq!(v["code"], 1);
        let (code, _, _) = run_args(&["frobnicate"]);
        assert_eq!(code, 1);
        let (code, _, _) = run_args(&["certify", "--group", "GL3", "--p", "11", "--s", "10", "--orbit", "2,1"]);
        assert_eq!(code, 1);
    }

    #[test]
    fn table_format() {
        let (code, out, _) = run_args(&["arith", "order", "--group", "C3", "--q", "3", "--format", "table"]);
        assert_eq!(code, 0);
        assert!(out.lines().any(|l| l.starts_with("results.order") && l.ends_with("9170703360")));
    }

    #[test]
    fn d4_layout() {
        let (_, out, _) = run_args(&["wdd", "--group", "D4", "--orbit", "5,3"]);
        let r: Report = serde_json::from_str(&out).unwrap();
        assert_eq!(r.results["layout"]["chain"], "2,0,2");
        assert_eq!(r.results["layout"]["fork"], "2");
        assert_eq!(r.provenance.len(), 1);
    }
}
