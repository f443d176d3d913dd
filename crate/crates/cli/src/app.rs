//! Command definitions and dispatch for the `spreadlab` binary.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use spreadlab::bounds::{
    self, cartesian_dynamo_witness, cartesian_dynamo_witness_reduced, cartesian_k_witness,
    tensor_dynamo_witness, tensor_general, tensor_k_witness, BoundReport, Construction,
};
use spreadlab::edgelist;
use spreadlab::engine::{self, Rule};
use spreadlab::family::generate;
use spreadlab::graph::Graph;
use spreadlab::solver::{self, SolveOutcome, SolverOptions};
use spreadlab::vset::VertexSet;

use crate::parse;
use crate::report::{
    BoundInput, BoundItem, Envelope, ErrorBody, ErrorReport, GenResult, GraphInput, SimulateInput,
    SimulateResult, SolveInput, SolveReport, Timing,
};
use crate::verify::{self, Scope, Summary, VerifyParams};

pub const SOLVER_LIMIT_ENV: &str = "SPREADLAB_SOLVER_LIMIT";

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "spreadlab",
    version,
    about = "Irreversible k-threshold and majority conversion processes on graphs"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

/// Exactly one graph source: a family spec or an edge-list file.
#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct GraphSource {
    /// Graph family, e.g. "cycle:4", "multipartite:3,2,1", "gnp:8,1/2,7".
    #[arg(long)]
    pub family: Option<String>,
    /// Edge-list file ("n m" header, then "u v" lines; "#" comments).
    #[arg(long)]
    pub graph: Option<PathBuf>,
}

/// Which product to construct.
#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct ProductKind {
    /// Cartesian product: edges move along one coordinate.
    #[arg(long)]
    pub cartesian: bool,
    /// Tensor product: edges move along both coordinates.
    #[arg(long)]
    pub tensor: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate a named graph and print it as an edge list.
    Gen {
        /// Graph family, e.g. "cycle:4" or "gnp:8,1/2,7".
        #[arg(long)]
        family: String,
    },
    /// Run a conversion process from a seed set and report the trace.
    Simulate {
        #[command(flatten)]
        source: GraphSource,
        /// Conversion rule: "majority" or "k:<K>".
        #[arg(long)]
        rule: String,
        /// Seed vertex ids, e.g. "0,2,5-7". Empty means no seeds.
        #[arg(long, default_value = "")]
        seed: String,
    },
    /// Compute an exact minimum conversion set or dynamo.
    Solve {
        #[command(flatten)]
        source: GraphSource,
        /// Conversion rule: "majority" or "k:<K>".
        #[arg(long)]
        rule: String,
        /// Stop after this cardinality and report if nothing converts.
        #[arg(long)]
        budget: Option<usize>,
        /// Override the solver vertex-count cap (default 24).
        #[arg(long)]
        solver_limit: Option<usize>,
    },
    /// Build and verify a product bound witness.
    Bound {
        #[command(flatten)]
        product: ProductKind,
        /// Left factor: family spec or "file:<path>".
        #[arg(long)]
        left: String,
        /// Right factor: family spec or "file:<path>".
        #[arg(long)]
        right: String,
        /// Conversion rule: "majority" or "k:<K>".
        #[arg(long)]
        rule: String,
        /// Construction id (3-5 Cartesian, 6-7 tensor). Defaults to every
        /// construction applicable to the product and rule.
        #[arg(long)]
        theorem: Option<u8>,
        /// Explicit left factor seed set (default: exact minimum).
        #[arg(long)]
        left_seed: Option<String>,
        /// Explicit right factor seed set (default: exact minimum).
        #[arg(long)]
        right_seed: Option<String>,
        /// Override the solver vertex-count cap (default 24).
        #[arg(long)]
        solver_limit: Option<usize>,
    },
    /// Sweep the closed forms, bounds, and engine invariants.
    Verify {
        /// One of: multipartite, cartesian, tensor, lemmas, all.
        #[arg(long, default_value = "all")]
        scope: String,
        /// Size cap for enumerated specs and random graphs.
        #[arg(long, default_value_t = 8)]
        max_n: usize,
        /// Vertex-count cap for product pairs.
        #[arg(long, default_value_t = 36)]
        max_product: usize,
        /// Random trials for the lemma sweep.
        #[arg(long, default_value_t = 200)]
        trials: usize,
        /// Seed for all randomized sweeps.
        #[arg(long, default_value_t = 1)]
        rng_seed: u64,
        /// Worker threads for sweep cases.
        #[arg(long, default_value_t = 1)]
        workers: usize,
        /// Override the solver vertex-count cap (default 24).
        #[arg(long)]
        solver_limit: Option<usize>,
    },
}

/// A rejected command: machine-readable code plus a human message.
#[derive(Debug)]
pub struct CliError {
    pub code: &'static str,
    pub message: String,
}

impl CliError {
    fn new(code: &'static str, message: impl Into<String>) -> CliError {
        CliError { code, message: message.into() }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}: {}", self.code, self.message)
    }
}

impl From<spreadlab::graph::GraphError> for CliError {
    fn from(e: spreadlab::graph::GraphError) -> Self {
        use spreadlab::graph::GraphError::*;
        let code = match e {
            VertexOutOfRange { .. } => "vertex_out_of_range",
            SelfLoop { .. } => "self_loop",
            InvalidFamily { .. } => "invalid_family",
        };
        CliError::new(code, e.to_string())
    }
}

impl From<edgelist::EdgeListError> for CliError {
    fn from(e: edgelist::EdgeListError) -> Self {
        use edgelist::EdgeListError::*;
        let code = match e {
            MissingHeader | BadHeader { .. } => "bad_header",
            BadEdge { .. } => "bad_edge",
            SelfLoop { .. } => "self_loop",
            OutOfRange { .. } => "vertex_out_of_range",
            DuplicateEdge { .. } => "duplicate_edge",
            WrongEdgeCount { .. } => "wrong_edge_count",
        };
        CliError::new(code, e.to_string())
    }
}

impl From<engine::EngineError> for CliError {
    fn from(e: engine::EngineError) -> Self {
        let code = match e {
            engine::EngineError::ZeroThreshold => "zero_threshold",
            engine::EngineError::NotConversionSet => "not_conversion_set",
        };
        CliError::new(code, e.to_string())
    }
}

impl From<solver::SolveError> for CliError {
    fn from(e: solver::SolveError) -> Self {
        let code = match e {
            solver::SolveError::SizeLimitExceeded { .. } => "size_limit_exceeded",
            solver::SolveError::LimitTooLarge { .. } => "limit_too_large",
            solver::SolveError::NotConversionSet => "not_conversion_set",
        };
        CliError::new(code, e.to_string())
    }
}

impl From<bounds::BoundError> for CliError {
    fn from(e: bounds::BoundError) -> Self {
        use bounds::BoundError::*;
        match e {
            Rule(inner) => inner.into(),
            FactorSolve(inner) => inner.into(),
            FactorNotConverting { .. } => CliError::new("factor_not_converting", e.to_string()),
            FactorNotMinimal { .. } => CliError::new("factor_not_minimal", e.to_string()),
            IsolatedVertices { .. } => CliError::new("isolated_vertices", e.to_string()),
            VerificationFailed { .. } => CliError::new("verification_failed", e.to_string()),
        }
    }
}

impl From<parse::ParseError> for CliError {
    fn from(e: parse::ParseError) -> Self {
        let code = match e {
            parse::ParseError::Family { .. } => "invalid_family",
            parse::ParseError::Rule { .. } => "invalid_rule",
            parse::ParseError::IdSet { .. } => "invalid_seed_set",
        };
        CliError::new(code, e.to_string())
    }
}

/// Loads a graph from a family spec or a `file:<path>` reference,
/// returning the echoable source label alongside it.
fn load_spec(spec: &str) -> Result<(String, Graph), CliError> {
    if let Some(path) = spec.strip_prefix("file:") {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::new("io_error", format!("reading {path}: {e}")))?;
        let g = edgelist::parse_edge_list(&text)?;
        return Ok((format!("file:{path}"), g));
    }
    let family = parse::parse_family(spec)?;
    let g = generate(&family)?;
    Ok((parse::family_label(&family), g))
}

fn load_source(source: &GraphSource) -> Result<(String, Graph), CliError> {
    match (&source.family, &source.graph) {
        (Some(f), None) => load_spec(f),
        (None, Some(path)) => load_spec(&format!("file:{}", path.display())),
        _ => unreachable!("clap enforces exactly one source"),
    }
}

/// Solver cap: explicit flag beats the environment variable beats the
/// built-in default.
fn resolve_limit(flag: Option<usize>) -> Result<usize, CliError> {
    if let Some(limit) = flag {
        return Ok(limit);
    }
    match std::env::var(SOLVER_LIMIT_ENV) {
        Ok(value) => value.trim().parse().map_err(|_| {
            CliError::new(
                "invalid_config",
                format!("{SOLVER_LIMIT_ENV}=\"{value}\" is not a vertex count"),
            )
        }),
        Err(_) => Ok(solver::DEFAULT_SOLVER_LIMIT),
    }
}

fn command_name(command: &Command) -> &'static str {
    match command {
        Command::Gen { .. } => "gen",
        Command::Simulate { .. } => "simulate",
        Command::Solve { .. } => "solve",
        Command::Bound { .. } => "bound",
        Command::Verify { .. } => "verify",
    }
}

/// Runs a parsed command; returns the stdout payload and the exit code.
/// Errors are rendered by [`execute`].
fn run_command(cli: &Cli) -> Result<(String, u8), CliError> {
    match &cli.command {
        Command::Gen { family } => {
            let (label, g) = load_spec(family)?;
            let out = match cli.format {
                Format::Text => edgelist::write_edge_list(&g),
                Format::Json => crate::report::to_json(&Envelope {
                    command: "gen",
                    input: GraphInput::new(label, &g),
                    result: GenResult::new(&g),
                    timing: Timing::default(),
                }),
            };
            Ok((out, 0))
        }
        Command::Simulate { source, rule, seed } => {
            let (label, g) = load_source(source)?;
            let rule = parse::parse_rule(rule)?;
            let seed = parse::parse_id_set(seed, g.vertex_count())?;
            let trace = engine::run(&g, rule, &seed);
            let times = engine::conversion_times(&g, rule, &seed);
            let out = match cli.format {
                Format::Text => {
                    let mut s = String::new();
                    writeln!(s, "graph: {label} (n={}, m={})", g.vertex_count(), g.edge_count())
                        .unwrap();
                    writeln!(s, "rule: {rule}").unwrap();
                    writeln!(s, "seed: {}", seed).unwrap();
                    for (i, wave) in trace.waves.iter().enumerate() {
                        writeln!(s, "wave {}: {}", i + 1, wave).unwrap();
                    }
                    writeln!(s, "converted: {}", trace.converted).unwrap();
                    writeln!(s, "steps: {}", trace.steps).unwrap();
                    s
                }
                Format::Json => crate::report::to_json(&Envelope {
                    command: "simulate",
                    input: SimulateInput {
                        graph: GraphInput::new(label, &g),
                        rule: rule.to_string(),
                        seed: seed.to_vec(),
                    },
                    result: SimulateResult::new(&trace, &times),
                    timing: Timing { steps: Some(trace.steps), ..Timing::default() },
                }),
            };
            Ok((out, 0))
        }
        Command::Solve { source, rule, budget, solver_limit } => {
            let (label, g) = load_source(source)?;
            let rule = parse::parse_rule(rule)?;
            let limit = resolve_limit(*solver_limit)?;
            let outcome =
                solver::min_conversion(&g, rule, *budget, &SolverOptions { max_vertices: limit })?;
            let report = match &outcome {
                SolveOutcome::Found(res) => SolveReport {
                    found: true,
                    size: Some(res.size),
                    witness: Some(res.witness.to_vec()),
                    budget: *budget,
                    explored: res.explored,
                },
                SolveOutcome::BudgetExhausted { budget, explored } => SolveReport {
                    found: false,
                    size: None,
                    witness: None,
                    budget: Some(*budget),
                    explored: *explored,
                },
            };
            let out = match cli.format {
                Format::Text => {
                    let mut s = String::new();
                    writeln!(s, "graph: {label} (n={}, m={})", g.vertex_count(), g.edge_count())
                        .unwrap();
                    writeln!(s, "rule: {rule}").unwrap();
                    match &outcome {
                        SolveOutcome::Found(res) => {
                            writeln!(s, "minimum size: {}", res.size).unwrap();
                            writeln!(s, "witness: {}", res.witness).unwrap();
                            writeln!(s, "explored: {}", res.explored).unwrap();
                        }
                        SolveOutcome::BudgetExhausted { budget, explored } => {
                            writeln!(
                                s,
                                "no conversion set within budget {budget} (explored {explored} candidates)"
                            )
                            .unwrap();
                        }
                    }
                    s
                }
                Format::Json => crate::report::to_json(&Envelope {
                    command: "solve",
                    input: SolveInput {
                        graph: GraphInput::new(label, &g),
                        rule: rule.to_string(),
                        budget: *budget,
                        solver_limit: limit,
                    },
                    result: report,
                    timing: Timing {
                        explored: Some(match &outcome {
                            SolveOutcome::Found(res) => res.explored,
                            SolveOutcome::BudgetExhausted { explored, .. } => *explored,
                        }),
                        ..Timing::default()
                    },
                }),
            };
            Ok((out, 0))
        }
        Command::Bound {
            product,
            left,
            right,
            rule,
            theorem,
            left_seed,
            right_seed,
            solver_limit,
        } => run_bound(
            cli.format,
            product,
            left,
            right,
            rule,
            *theorem,
            left_seed.as_deref(),
            right_seed.as_deref(),
            *solver_limit,
        ),
        Command::Verify { scope, max_n, max_product, trials, rng_seed, workers, solver_limit } => {
            let scope_enum = Scope::parse(scope).ok_or_else(|| {
                CliError::new(
                    "invalid_config",
                    format!(
                        "unknown scope \"{scope}\": expected multipartite, cartesian, tensor, lemmas, or all"
                    ),
                )
            })?;
            let params = VerifyParams {
                scope: scope_enum,
                max_n: *max_n,
                max_product: *max_product,
                trials: *trials,
                rng_seed: *rng_seed,
                workers: *workers,
                solver_limit: resolve_limit(*solver_limit)?,
            };
            let summaries = verify::run_scope(&params);
            Ok(render_verify(cli.format, scope, &params, &summaries))
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn run_bound(
    format: Format,
    product: &ProductKind,
    left: &str,
    right: &str,
    rule_str: &str,
    theorem: Option<u8>,
    left_seed: Option<&str>,
    right_seed: Option<&str>,
    solver_limit: Option<usize>,
) -> Result<(String, u8), CliError> {
    let (left_label, g) = load_spec(left)?;
    let (right_label, h) = load_spec(right)?;
    let rule = parse::parse_rule(rule_str)?;
    let limit = resolve_limit(solver_limit)?;
    let opts = SolverOptions { max_vertices: limit };
    let is_cartesian = product.cartesian;

    let theorems: Vec<Construction> = match theorem {
        Some(id) => {
            let c = Construction::from_id(id).ok_or_else(|| {
                CliError::new("invalid_config", format!("unknown theorem {id}: expected 3..=7"))
            })?;
            if c.is_cartesian() != is_cartesian {
                let kind = if is_cartesian { "cartesian" } else { "tensor" };
                return Err(CliError::new(
                    "invalid_config",
                    format!("theorem {id} ({c}) does not apply to a {kind} product"),
                ));
            }
            let wants_k = matches!(c, Construction::CartesianThreshold | Construction::TensorThreshold);
            if wants_k != rule.fixed_threshold().is_some() {
                return Err(CliError::new(
                    "invalid_config",
                    format!("theorem {id} ({c}) does not apply under rule {rule}"),
                ));
            }
            vec![c]
        }
        None => match (is_cartesian, rule.fixed_threshold()) {
            (true, Some(_)) => vec![Construction::CartesianThreshold],
            (true, None) => {
                let isolated = !g.isolated_vertices().is_empty() || !h.isolated_vertices().is_empty();
                if isolated {
                    vec![Construction::CartesianDynamo]
                } else {
                    vec![Construction::CartesianDynamo, Construction::CartesianDynamoReduced]
                }
            }
            (false, Some(_)) => vec![Construction::TensorThreshold],
            (false, None) => vec![Construction::TensorDynamo],
        },
    };

    let parse_seed = |text: Option<&str>, n: usize| -> Result<Option<VertexSet>, CliError> {
        Ok(match text {
            Some(t) => Some(parse::parse_id_set(t, n)?),
            None => None,
        })
    };
    let explicit_left = parse_seed(left_seed, g.vertex_count())?;
    let explicit_right = parse_seed(right_seed, h.vertex_count())?;

    let solve_factor = |graph: &Graph, rule: Rule| -> Result<VertexSet, CliError> {
        Ok(solver::min_conversion(graph, rule, None, &opts)?
            .found()
            .expect("unbudgeted search always finds a set")
            .witness)
    };
    let factor_set = |explicit: &Option<VertexSet>, graph: &Graph| -> Result<VertexSet, CliError> {
        match explicit {
            Some(s) => Ok(s.clone()),
            None => solve_factor(graph, rule),
        }
    };

    let mut reports: Vec<BoundReport> = Vec::new();
    for &construction in &theorems {
        let report = match construction {
            Construction::CartesianThreshold => {
                let k = rule.fixed_threshold().expect("checked above");
                let sg = factor_set(&explicit_left, &g)?;
                let sh = factor_set(&explicit_right, &h)?;
                cartesian_k_witness(&g, &sg, &h, &sh, k)?
            }
            Construction::CartesianDynamo => {
                let dg = factor_set(&explicit_left, &g)?;
                let dh = factor_set(&explicit_right, &h)?;
                cartesian_dynamo_witness(&g, &dg, &h, &dh)?
            }
            Construction::CartesianDynamoReduced => {
                let dg = factor_set(&explicit_left, &g)?;
                let dh = factor_set(&explicit_right, &h)?;
                cartesian_dynamo_witness_reduced(&g, &dg, &h, &dh)?
            }
            Construction::TensorThreshold | Construction::TensorDynamo => {
                let isolated =
                    !g.isolated_vertices().is_empty() || !h.isolated_vertices().is_empty();
                if isolated && (explicit_left.is_some() || explicit_right.is_some()) {
                    return Err(CliError::new(
                        "invalid_config",
                        "explicit factor seeds require isolated-free factors; drop the seeds or the isolated vertices",
                    ));
                }
                if explicit_left.is_some() || explicit_right.is_some() {
                    let sg = factor_set(&explicit_left, &g)?;
                    let sh = factor_set(&explicit_right, &h)?;
                    match rule.fixed_threshold() {
                        Some(k) => tensor_k_witness(&g, &sg, &h, &sh, k)?,
                        None => tensor_dynamo_witness(&g, &sg, &h, &sh)?,
                    }
                } else {
                    let mut provider = |core: &Graph, r: Rule| {
                        solver::min_conversion(core, r, None, &opts)
                            .map(|o| o.found().expect("unbudgeted search").witness)
                    };
                    tensor_general(&g, &h, rule, &mut provider)?
                }
            }
        };
        reports.push(report);
    }

    let product_name = if is_cartesian { "cartesian" } else { "tensor" };
    let out = match format {
        Format::Text => {
            let mut s = String::new();
            writeln!(
                s,
                "product: {product_name} of {left_label} (n={}) and {right_label} (n={})",
                g.vertex_count(),
                h.vertex_count()
            )
            .unwrap();
            writeln!(s, "rule: {rule}").unwrap();
            for rep in &reports {
                writeln!(
                    s,
                    "theorem {} ({}): bound={}, witness={}, verified={}, steps={}",
                    rep.construction.id(),
                    rep.construction.name(),
                    rep.bound,
                    rep.witness,
                    rep.verified,
                    rep.steps
                )
                .unwrap();
            }
            s
        }
        Format::Json => crate::report::to_json(&Envelope {
            command: "bound",
            input: BoundInput {
                product: product_name,
                left: GraphInput::new(left_label, &g),
                right: GraphInput::new(right_label, &h),
                rule: rule.to_string(),
                theorems: theorems.iter().map(|c| c.id()).collect(),
                left_seed: explicit_left.as_ref().map(VertexSet::to_vec),
                right_seed: explicit_right.as_ref().map(VertexSet::to_vec),
            },
            result: reports
                .iter()
                .map(|r| BoundItem::new(r, h.vertex_count()))
                .collect::<Vec<_>>(),
            timing: Timing { simulations: Some(reports.len()), ..Timing::default() },
        }),
    };
    Ok((out, 0))
}

// The worker count is deliberately absent: it is a scheduling knob
// that must not change the report, so reports stay byte-comparable
// across worker counts.
#[derive(serde::Serialize)]
struct VerifyInput {
    scope: String,
    max_n: usize,
    max_product: usize,
    trials: usize,
    rng_seed: u64,
    solver_limit: usize,
}

#[derive(serde::Serialize)]
struct VerifyResult {
    scopes: Vec<Summary>,
    total: usize,
    passed: usize,
    failed: usize,
}

fn render_verify(
    format: Format,
    scope: &str,
    params: &VerifyParams,
    summaries: &[Summary],
) -> (String, u8) {
    let total: usize = summaries.iter().map(|s| s.total).sum();
    let passed: usize = summaries.iter().map(|s| s.passed).sum();
    let failed: usize = summaries.iter().map(|s| s.failed).sum();
    let code = u8::from(failed > 0);
    let out = match format {
        Format::Text => {
            let mut s = String::new();
            for summary in summaries {
                writeln!(
                    s,
                    "{}: {} cases, {} passed, {} failed",
                    summary.scope, summary.total, summary.passed, summary.failed
                )
                .unwrap();
                if let Some(f) = &summary.first_failure {
                    writeln!(s, "  first failure [{}]: {}", f.case, f.detail).unwrap();
                }
            }
            writeln!(s, "total: {total} cases, {passed} passed, {failed} failed").unwrap();
            s
        }
        Format::Json => crate::report::to_json(&Envelope {
            command: "verify",
            input: VerifyInput {
                scope: scope.to_string(),
                max_n: params.max_n,
                max_product: params.max_product,
                trials: params.trials,
                rng_seed: params.rng_seed,
                solver_limit: params.solver_limit,
            },
            result: VerifyResult { scopes: summaries.to_vec(), total, passed, failed },
            timing: Timing { cases: Some(total), ..Timing::default() },
        }),
    };
    (out, code)
}

/// Executes a parsed command line: returns (stdout, stderr, exit code).
pub fn execute(cli: &Cli) -> (String, String, u8) {
    match run_command(cli) {
        Ok((out, code)) => (out, String::new(), code),
        Err(err) => match cli.format {
            Format::Text => (String::new(), format!("error[{}]: {}\n", err.code, err.message), 1),
            Format::Json => (
                crate::report::to_json(&ErrorReport {
                    command: command_name(&cli.command),
                    error: ErrorBody { code: err.code, message: err.message },
                }),
                String::new(),
                1,
            ),
        },
    }
}
