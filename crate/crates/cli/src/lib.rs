//! Command-line front end: parse an input file, run one query, report.

pub mod cache;
pub mod parse;
pub mod report;

use std::path::PathBuf;
use std::sync::Arc;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;
use weyl_lc::bfunction::delta;
use weyl_lc::cohomology::{
    cohomological_dimension, iterated_local_cohomology, local_cohomology, relative_cd, socle_count, CohomologyResult,
};
use weyl_lc::localize::{localize, localize_iterated, Context};
use weyl_lc::{Error, Operator, OrderKind};

use crate::cache::DiskCache;
use crate::parse::{parse_input, ParseError, ProblemInput};
use crate::report::{render_vector, NodeReport, Report};

#[derive(Parser, Debug)]
#[command(name = "weyl-lc", version, about = "Local cohomology over the Weyl algebra")]
pub struct Cli {
    #[command(flatten)]
    pub opts: GlobalOpts,
    #[command(subcommand)]
    pub cmd: Command,
}

#[derive(Args, Debug, Clone)]
pub struct GlobalOpts {
    /// Monomial order for presentations: `degrevlex` or `weighted:w1,...`
    /// with one weight per x and per derivative.
    #[arg(long, global = true, default_value = "degrevlex")]
    pub order: String,
    /// Localize at each product in one step instead of factor by factor.
    #[arg(long, global = true)]
    pub single_shot_localization: bool,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Cache directory for annihilators (default: $WEYL_LC_CACHE).
    #[arg(long, global = true)]
    pub cache: Option<PathBuf>,
    /// Worker threads for independent localizations.
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// Annihilator of f^s, f the product of the generators.
    Ann {
        #[arg(long = "f")]
        file: PathBuf,
    },
    /// Bernstein-Sato polynomial of the product of the generators.
    Bpoly {
        #[arg(long = "f")]
        file: PathBuf,
    },
    /// Localization of R at the product of the generators.
    Localize {
        #[arg(long = "f")]
        file: PathBuf,
        /// Localize at the generators one after another.
        #[arg(long)]
        factors: bool,
    },
    /// H^k_I(R).
    Lc {
        #[arg(long, allow_negative_numbers = true)]
        k: i64,
        file: PathBuf,
    },
    /// H^i_m(H^j_I(R)).
    Lclc {
        #[arg(long, allow_negative_numbers = true)]
        i: i64,
        #[arg(long, allow_negative_numbers = true)]
        j: i64,
        file: PathBuf,
    },
    /// Lyubeznik number lambda_{i,n-j}, the socle dimension of H^i_m(H^j_I(R)).
    Lambda {
        #[arg(long, allow_negative_numbers = true)]
        i: i64,
        #[arg(long, allow_negative_numbers = true)]
        j: i64,
        file: PathBuf,
    },
    /// Cohomological dimension cd(R, I).
    Cd { file: PathBuf },
    /// cd(R, I) - c for a smooth subvariety of height c containing V(I).
    Cdrel {
        #[arg(long)]
        height: usize,
        file: PathBuf,
    },
}

/// Failures, each with its exit code.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{path}: parse error at {source}")]
    Parse { path: String, source: ParseError },
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Compute(#[from] Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Compute(Error::Invariant(_)) | CliError::Compute(Error::Cancelled) => 3,
            _ => 2,
        }
    }
}

pub fn parse_order(s: &str, n: usize) -> Result<OrderKind, CliError> {
    if s == "degrevlex" {
        return Ok(OrderKind::DegRevLex);
    }
    if let Some(ws) = s.strip_prefix("weighted:") {
        let w = ws
            .split(',')
            .map(|x| x.trim().parse::<u32>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| CliError::Usage(format!("bad weight list `{ws}`")))?;
        if w.len() != 2 * n {
            return Err(CliError::Usage(format!("weighted order needs {} weights, got {}", 2 * n, w.len())));
        }
        return Ok(OrderKind::Weighted(w));
    }
    Err(CliError::Usage(format!("unknown order `{s}` (use degrevlex or weighted:w1,...)")))
}

/// The computation settings for the parsed options.
pub fn context(opts: &GlobalOpts, n: usize) -> Result<Context, CliError> {
    let order = parse_order(&opts.order, n)?;
    let mut ctx = Context::default();
    ctx.order = order.clone();
    ctx.single_shot = opts.single_shot_localization;
    ctx.jobs = opts.jobs;
    let dir = opts.cache.clone().or_else(|| std::env::var_os("WEYL_LC_CACHE").map(PathBuf::from));
    if let Some(dir) = dir {
        let c = DiskCache::new(&dir, format!("{order:?}")).map_err(|e| CliError::Io { path: dir.display().to_string(), source: e })?;
        ctx.cache = Some(Arc::new(c));
    }
    Ok(ctx)
}

fn read_input(path: &PathBuf) -> Result<ProblemInput, CliError> {
    let p = path.display().to_string();
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io { path: p.clone(), source: e })?;
    parse_input(&text).map_err(|e| CliError::Parse { path: p, source: e })
}

fn product(gens: &[Operator]) -> Result<Operator, Error> {
    let mut p = Operator::one(gens[0].ring());
    for g in gens {
        p = p.multiply(g)?;
    }
    Ok(p)
}

fn cohomology_report(rep: &mut Report, res: &CohomologyResult, input: &ProblemInput) {
    let ring = input.ring();
    let rank = res.ambient_nodes.len() as u32;
    rep.exponent_a = (!res.nodes.is_empty()).then_some(res.a);
    rep.nodes = res.nodes.iter().map(NodeReport::from_node).collect();
    rep.generators = res.generators.iter().map(|g| render_vector(g, rank, ring, &input.vars)).collect();
    let prank = res.presentation.rank();
    rep.relations = res
        .presentation
        .gb()
        .elements()
        .iter()
        .map(|v| render_vector(v, prank, ring, &input.vars))
        .collect();
    rep.is_zero = Some(res.is_zero());
}

/// Run one query.
pub fn execute(cli: &Cli) -> Result<Report, CliError> {
    let start = Instant::now();
    let (file, query) = match &cli.cmd {
        Command::Ann { file } => (file, "ann".to_string()),
        Command::Bpoly { file } => (file, "bpoly".to_string()),
        Command::Localize { file, factors } => (file, if *factors { "localize --factors".into() } else { "localize".into() }),
        Command::Lc { k, file } => (file, format!("lc --k {k}")),
        Command::Lclc { i, j, file } => (file, format!("lclc --i {i} --j {j}")),
        Command::Lambda { i, j, file } => (file, format!("lambda --i {i} --j {j}")),
        Command::Cd { file } => (file, "cd".to_string()),
        Command::Cdrel { height, file } => (file, format!("cdrel --height {height}")),
    };
    let input = read_input(file)?;
    let n = input.n();
    let ctx = context(&cli.opts, n)?;
    let mut rep = Report::new(query, &input.vars);
    let parsed = start.elapsed().as_secs_f64();
    let all: Vec<usize> = (1..=input.gens.len()).collect();
    match &cli.cmd {
        Command::Ann { .. } | Command::Bpoly { .. } => {
            let f = product(&input.gens)?;
            let (ann, b) = ctx.bernstein_data(&f, &delta(n))?;
            rep.nodes.push(NodeReport { theta: all, xtheta: Vec::new(), bpoly: Some(b.render()), min_root: b.min_int_root });
            if matches!(cli.cmd, Command::Ann { .. }) {
                rep.relations = ann.gens.iter().map(|g| g.render(&input.vars)).collect();
            } else {
                rep.value = json!({
                    "b": b.render(),
                    "min_integer_root": b.min_int_root,
                    "integer_roots": b.int_roots,
                });
            }
        }
        Command::Localize { factors, .. } => {
            let res = if *factors {
                localize_iterated(&input.gens, &delta(n), &ctx)?
            } else {
                localize(&product(&input.gens)?, &delta(n), &ctx)?
            };
            rep.exponent_a = Some(res.a);
            if *factors {
                rep.nodes = res
                    .bernstein
                    .iter()
                    .enumerate()
                    .map(|(i, b)| NodeReport { theta: vec![i + 1], xtheta: Vec::new(), bpoly: Some(b.render()), min_root: b.min_int_root })
                    .collect();
            } else {
                let b = &res.bernstein[0];
                rep.nodes.push(NodeReport { theta: all, xtheta: Vec::new(), bpoly: Some(b.render()), min_root: b.min_int_root });
            }
            let gen: Vec<String> = res
                .chain
                .iter()
                .map(|(f, a)| format!("({})^{a}", f.render(&input.vars)))
                .collect();
            rep.generators = vec![gen.join("*")];
            rep.relations = res.j.iter().map(|g| g.render(&input.vars)).collect();
            rep.value = json!({ "exponents": res.chain.iter().map(|c| c.1).collect::<Vec<_>>() });
        }
        Command::Lc { k, .. } => {
            let res = local_cohomology(&input.gens, *k, &ctx)?;
            cohomology_report(&mut rep, &res, &input);
        }
        Command::Lclc { i, j, .. } => {
            let res = iterated_local_cohomology(&input.gens, *i, *j, &ctx)?;
            cohomology_report(&mut rep, &res, &input);
        }
        Command::Lambda { i, j, .. } => {
            let res = iterated_local_cohomology(&input.gens, *i, *j, &ctx)?;
            cohomology_report(&mut rep, &res, &input);
            let l = socle_count(&res.presentation, &ctx)?;
            rep.value = json!({
                "lambda": l,
                "label": format!("lambda_{{{},{}}}", i, n as i64 - j),
                "module": format!("H^{i}_m(H^{j}_I(R))"),
            });
        }
        Command::Cd { .. } => {
            let cd = cohomological_dimension(&input.gens, &ctx)?;
            rep.value = json!({ "cd": cd });
        }
        Command::Cdrel { height, .. } => {
            let r = relative_cd(&input.gens, *height, &ctx)?;
            rep.value = json!({
                "cd": r.cd,
                "relative_cd": r.relative,
                "shifted_nonvanishing": r.shifted_nonvanishing,
            });
            rep.warnings.extend(r.warning);
        }
    }
    rep.timings.insert("parse".into(), parsed);
    rep.timings.insert("total".into(), start.elapsed().as_secs_f64());
    Ok(rep)
}

/// Render a report in the requested format.
pub fn render(rep: &Report, format: Format) -> String {
    match format {
        Format::Text => rep.to_text(),
        Format::Json => rep.to_json() + "\n",
    }
}
