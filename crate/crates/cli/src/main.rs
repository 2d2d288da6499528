mod cache;
mod config;
mod selftest;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use klr_core::chevalley::{cross_route, fold, fold_check, folded_algebra};
use klr_core::klr::{coinduce, induce, word_to_string, Expr, FiniteModule, KlrAlgebra};
use klr_core::pbw::CuspidalTable;
use klr_core::rootsys::{height, hmm_order, is_convex, kostant_partition, word_string, KpVector, Root};
use klr_core::shuffle::{expand_in_dual_pbw, shuffle_product, GramCache, ShuffleElement};
use serde_json::{json, Value};

use config::{ConfigFile, Overrides, RunConfig, UsageError};

#[derive(Parser)]
#[command(name = "klr", version, about = "Convex orders, cuspidal characters and KLR modules in finite type")]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// TOML run configuration
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// named Cartan type, e.g. B3
    #[arg(long = "type", global = true)]
    type_name: Option<String>,
    /// reduced word for w0 (`0102` or `0,1,0,2`) or `hmm`
    #[arg(long, global = true)]
    word: Option<String>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// also write the JSON result here
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    /// directory for cached cuspidal tables
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,
    #[arg(long, global = true, env = "KLR_MAX_DIM")]
    max_dim: Option<usize>,
    #[arg(long, global = true, env = "KLR_MAX_HEIGHT")]
    max_height: Option<i64>,
    /// characteristic of the ground field for module checks (0 = rationals)
    #[arg(long, global = true)]
    characteristic: Option<u64>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Positive roots by height
    Roots,
    /// The convex order of a reduced word
    ConvexOrder,
    /// Kostant partition count of a weight
    Kp {
        #[arg(long)]
        nu: String,
    },
    /// Minimal pairs of every non-simple root
    MinimalPairs,
    /// Cuspidal characters of every root
    Cuspidal,
    /// Standard (or costandard) character of a root partition
    Standard {
        /// multiplicities along the order, e.g. 1,0,1
        #[arg(long)]
        m: String,
        #[arg(long)]
        costandard: bool,
    },
    /// Shuffle product of two characters
    Shuffle { a: PathBuf, b: PathBuf },
    /// Restriction of a character to weights lambda + mu
    Restrict {
        file: PathBuf,
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        mu: String,
    },
    /// Gram matrix of the transported form on characters
    Gram { files: Vec<PathBuf> },
    /// Expansion of a character in dual PBW monomials
    Expand { file: PathBuf },
    /// Check the defining relations on a module
    VerifyModule { file: PathBuf },
    /// Induction of two modules
    Induce {
        a: PathBuf,
        b: PathBuf,
        #[arg(long)]
        coinduce: bool,
    },
    /// Normal form of a generator expression
    Nf {
        expr: String,
        #[arg(long)]
        nu: Option<String>,
    },
    /// Compare the q = 1 pairing with cuspidal characters
    ChevalleyCheck,
    /// Run the consistency checks for one type
    Selftest {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// number of sampled reduced words
        #[arg(long, default_value_t = 8)]
        samples: usize,
    },
}

/// Exit status for a check that ran and failed.
#[derive(Debug)]
struct CheckFailed;

impl std::fmt::Display for CheckFailed {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str("check failed")
    }
}

impl std::error::Error for CheckFailed {}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            let code = exit_code(&e);
            if !e.is::<CheckFailed>() {
                eprintln!("error: {e:#}");
            }
            ExitCode::from(code)
        }
    }
}

fn exit_code(e: &anyhow::Error) -> u8 {
    use klr_core::Error as E;
    if e.is::<CheckFailed>() {
        return 1;
    }
    if e.is::<UsageError>() {
        return 2;
    }
    for cause in e.chain() {
        match cause.downcast_ref::<E>() {
            Some(E::Budget(_)) => return 3,
            Some(E::Parse(_) | E::Cartan(_) | E::NotReduced(_) | E::Weight(_)) => return 2,
            _ => {}
        }
    }
    if e.chain().any(|c| c.is::<std::io::Error>() || c.is::<toml::de::Error>()) {
        return 2;
    }
    1
}

fn run(cli: Cli) -> Result<()> {
    let c = &cli.common;
    let file = match &c.config {
        Some(p) => ConfigFile::load(p).map_err(|e| UsageError(format!("{e:#}")))?,
        None => ConfigFile::default(),
    };
    let cfg = RunConfig::resolve(
        file,
        Overrides {
            type_name: c.type_name.as_deref(),
            word: c.word.as_deref(),
            max_dim: c.max_dim,
            max_height: c.max_height,
            output: c.output.as_deref(),
            cache_dir: c.cache_dir.as_deref(),
            characteristic: c.characteristic,
        },
    )?;
    let out = Out { format: c.format, path: cfg.output.clone() };
    match &cli.command {
        Command::Roots => roots(&cfg, &out),
        Command::ConvexOrder => convex_order(&cfg, &out),
        Command::Kp { nu } => {
            let nu = parse_weight(nu, cfg.rs.rank())?;
            let n = kostant_partition(&cfg.rs, &nu);
            out.emit(&json!({ "nu": nu, "count": n }), &n.to_string())
        }
        Command::MinimalPairs => minimal_pairs(&cfg, &out),
        Command::Cuspidal => cuspidal(&cfg, &out),
        Command::Standard { m, costandard } => standard(&cfg, &out, m, *costandard),
        Command::Shuffle { a, b } => {
            let (a, b) = (read_character(&cfg, a)?, read_character(&cfg, b)?);
            emit_character(&out, &shuffle_product(cfg.rs.cartan(), &a, &b))
        }
        Command::Restrict { file, lambda, mu } => restrict(&cfg, &out, file, lambda, mu),
        Command::Gram { files } => gram(&cfg, &out, files),
        Command::Expand { file } => expand(&cfg, &out, file),
        Command::VerifyModule { file } => verify_module(&cfg, &out, file),
        Command::Induce { a, b, coinduce: co } => {
            let alg = KlrAlgebra::new(cfg.rs.cartan().clone());
            let (a, b) = (read_module(&cfg, a)?, read_module(&cfg, b)?);
            let m = if *co { coinduce(&alg, &a, &b, cfg.max_dim)? } else { induce(&alg, &a, &b, cfg.max_dim)? };
            let text = format!("dim {}\ncharacter {}", m.dim(), m.character());
            out.emit(&m.to_json(), &text)
        }
        Command::Nf { expr, nu } => nf(&cfg, &out, expr, nu.as_deref()),
        Command::ChevalleyCheck => chevalley_check(&cfg, &out),
        Command::Selftest { seed, samples } => {
            eprintln!("selftest {} seed {seed}", cfg.type_label());
            let results = selftest::run(&cfg, *seed, *samples)?;
            let passed = results.iter().all(|r| r.verdict.passed);
            let text: Vec<String> = results
                .iter()
                .flat_map(|r| {
                    let status = if r.verdict.passed { "pass" } else { "FAIL" };
                    std::iter::once(format!("{status} {} ({} checked)", r.name, r.verdict.checked))
                        .chain(r.verdict.failures.iter().map(|f| format!("    {f}")))
                })
                .collect();
            out.emit(
                &json!({ "type": cfg.type_label(), "seed": seed, "passed": passed, "checks": results }),
                &text.join("\n"),
            )?;
            if passed {
                Ok(())
            } else {
                Err(CheckFailed.into())
            }
        }
    }
}

struct Out {
    format: Format,
    path: Option<PathBuf>,
}

impl Out {
    fn emit(&self, value: &Value, text: &str) -> Result<()> {
        let pretty = serde_json::to_string_pretty(value)?;
        if let Some(p) = &self.path {
            std::fs::write(p, format!("{pretty}\n")).with_context(|| format!("writing {}", p.display()))?;
        }
        match self.format {
            Format::Json => println!("{pretty}"),
            Format::Text => println!("{text}"),
        }
        Ok(())
    }
}

fn parse_ints(s: &str) -> Result<Vec<i64>> {
    s.split(',')
        .map(|p| p.trim().parse::<i64>().map_err(|_| UsageError(format!("cannot parse `{s}` as integers")).into()))
        .collect()
}

fn parse_weight(s: &str, rank: usize) -> Result<Vec<i64>> {
    let v = parse_ints(s)?;
    if v.len() != rank || v.iter().any(|&x| x < 0) {
        bail!(UsageError(format!("`{s}` is not a weight of rank {rank}")));
    }
    Ok(v)
}

fn root_label(words: Option<&std::collections::HashMap<Root, Vec<usize>>>, r: &Root) -> String {
    match words {
        Some(w) => word_string(&w[r]),
        None => format!("{r:?}"),
    }
}

fn good_words(cfg: &RunConfig) -> Result<Option<std::collections::HashMap<Root, Vec<usize>>>> {
    Ok(if cfg.is_hmm() { Some(hmm_order(&cfg.rs)?.words) } else { None })
}

fn roots(cfg: &RunConfig, out: &Out) -> Result<()> {
    let mut rs: Vec<&Root> = cfg.rs.positive_roots().iter().collect();
    rs.sort_by_key(|r| (height(r), std::cmp::Reverse((*r).clone())));
    let rows: Vec<Value> = rs.iter().map(|r| json!({ "root": r, "height": height(r) })).collect();
    let text: Vec<String> = rs.iter().map(|r| format!("{} {r:?}", height(r))).collect();
    out.emit(&json!(rows), &text.join("\n"))
}

fn convex_order(cfg: &RunConfig, out: &Out) -> Result<()> {
    let order = cfg.order()?;
    let words = good_words(cfg)?;
    let convex = is_convex(&cfg.rs, order.roots())?;
    let word = cfg.reduced_word()?;
    let text: Vec<String> = order
        .roots()
        .iter()
        .enumerate()
        .map(|(k, r)| match &words {
            Some(w) => format!("{k} {r:?} {}", word_string(&w[r])),
            None => format!("{k} {r:?}"),
        })
        .collect();
    out.emit(
        &json!({ "type": cfg.type_label(), "reduced_word": word, "order": order.roots(), "convex": convex }),
        &format!("{}\nconvex: {convex}", text.join("\n")),
    )
}

fn minimal_pairs(cfg: &RunConfig, out: &Out) -> Result<()> {
    let order = cfg.order()?;
    let words = good_words(cfg)?;
    let mut rows = Vec::new();
    let mut text = Vec::new();
    for alpha in order.roots() {
        if cfg.rs.is_simple(alpha) {
            continue;
        }
        let pairs = order.minimal_pairs(&cfg.rs, alpha)?;
        let label = |r: &Root| root_label(words.as_ref(), r);
        for (b, g) in &pairs {
            text.push(format!("{} | {} | {}", label(alpha), label(g), label(b)));
        }
        rows.push(json!({
            "root": alpha,
            "word": words.as_ref().map(|w| word_string(&w[alpha])),
            "pairs": pairs.iter().map(|(b, g)| json!({ "beta": b, "gamma": g })).collect::<Vec<_>>(),
        }));
    }
    out.emit(&json!(rows), &text.join("\n"))
}

fn cuspidal_json(cfg: &RunConfig) -> Result<Value> {
    let word = cfg.reduced_word()?;
    let key = cache::key(cfg.rs.cartan().pairing(), &word);
    if let Some(dir) = &cfg.cache_dir {
        if let Some(s) = cache::load(dir, "cuspidal", &key) {
            if let Ok(v) = serde_json::from_str(&s) {
                return Ok(v);
            }
        }
    }
    let order = cfg.order()?;
    let table = CuspidalTable::build(&cfg.rs, &order)?;
    let words = good_words(cfg)?;
    let entries: Vec<Value> = table
        .entries()
        .map(|(r, x)| json!({ "root": r, "word": words.as_ref().map(|w| word_string(&w[r])), "character": x }))
        .collect();
    let v = json!({ "type": cfg.type_label(), "reduced_word": word, "entries": entries });
    if let Some(dir) = &cfg.cache_dir {
        cache::store(dir, "cuspidal", &key, &serde_json::to_string(&v)?)?;
    }
    Ok(v)
}

fn cuspidal(cfg: &RunConfig, out: &Out) -> Result<()> {
    let v = cuspidal_json(cfg)?;
    let mut text = Vec::new();
    for e in v["entries"].as_array().into_iter().flatten() {
        let x: ShuffleElement = serde_json::from_value(e["character"].clone())?;
        let head = match e["word"].as_str() {
            Some(w) => w.to_string(),
            None => e["root"].to_string(),
        };
        text.push(format!("{head}: {x}"));
    }
    out.emit(&v, &text.join("\n"))
}

fn standard(cfg: &RunConfig, out: &Out, m: &str, costandard: bool) -> Result<()> {
    let order = cfg.order()?;
    let m: Vec<u32> = parse_ints(m)?
        .into_iter()
        .map(|x| u32::try_from(x))
        .collect::<Result<_, _>>()
        .map_err(|_| UsageError("multiplicities must be nonnegative".into()))?;
    if m.len() != order.len() {
        bail!(UsageError(format!("expected {} multiplicities", order.len())));
    }
    let table = CuspidalTable::build(&cfg.rs, &order)?;
    let m = KpVector(m);
    let x = if costandard { table.costandard_character(&cfg.rs, &m) } else { table.standard_character(&cfg.rs, &m) };
    emit_character(out, &x)
}

fn emit_character(out: &Out, x: &ShuffleElement) -> Result<()> {
    out.emit(&serde_json::to_value(x)?, &x.to_string())
}

fn read_json(path: &Path) -> Result<Value> {
    let s = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    serde_json::from_str(&s).map_err(|e| UsageError(format!("{}: {e}", path.display())).into())
}

fn read_character(cfg: &RunConfig, path: &Path) -> Result<ShuffleElement> {
    let x: ShuffleElement =
        serde_json::from_value(read_json(path)?).map_err(|e| UsageError(format!("{}: {e}", path.display())))?;
    if x.rank() != cfg.rs.rank() {
        bail!(UsageError(format!(
            "{}: character of rank {}, type has rank {}",
            path.display(),
            x.rank(),
            cfg.rs.rank()
        )));
    }
    Ok(x)
}

fn read_module(cfg: &RunConfig, path: &Path) -> Result<FiniteModule> {
    let m = FiniteModule::from_json(&read_json(path)?)?;
    m.check_shape(cfg.rs.cartan())?;
    Ok(m)
}

fn restrict(cfg: &RunConfig, out: &Out, file: &Path, lambda: &str, mu: &str) -> Result<()> {
    let x = read_character(cfg, file)?;
    let (l, m) = (parse_weight(lambda, cfg.rs.rank())?, parse_weight(mu, cfg.rs.rank())?);
    let res = x.restrict(&l, &m)?;
    let rows: Vec<Value> = res
        .iter()
        .map(|((u, w), c)| json!({ "left": word_string(u), "right": word_string(w), "coefficient": c }))
        .collect();
    let text: Vec<String> =
        res.iter().map(|((u, w), c)| format!("({c}) {} (x) {}", word_string(u), word_string(w))).collect();
    out.emit(&json!(rows), &text.join("\n"))
}

fn gram(cfg: &RunConfig, out: &Out, files: &[PathBuf]) -> Result<()> {
    let xs: Vec<ShuffleElement> = files.iter().map(|f| read_character(cfg, f)).collect::<Result<_>>()?;
    let g = GramCache::new(cfg.rs.cartan()).transported_gram(&xs, &xs)?;
    let cells: Vec<Vec<String>> = g.iter().map(|row| row.iter().map(ToString::to_string).collect()).collect();
    let text: Vec<String> = cells.iter().map(|r| r.join(" | ")).collect();
    out.emit(&json!(cells), &text.join("\n"))
}

fn expand(cfg: &RunConfig, out: &Out, file: &Path) -> Result<()> {
    let x = read_character(cfg, file)?;
    let table = CuspidalTable::build(&cfg.rs, &cfg.order()?)?;
    let e = expand_in_dual_pbw(&cfg.rs, &x, &table)?;
    let rows: Vec<Value> = e.iter().map(|(m, c)| json!({ "m": m.0, "coefficient": c })).collect();
    let text: Vec<String> = e.iter().map(|(m, c)| format!("({c}) [{}]", m.label())).collect();
    out.emit(&json!(rows), &text.join("\n"))
}

fn verify_module(cfg: &RunConfig, out: &Out, file: &Path) -> Result<()> {
    let m = read_module(cfg, file)?;
    let alg = KlrAlgebra::new(cfg.rs.cartan().clone());
    let violations = m.verify(&alg, cfg.field)?;
    let text = if violations.is_empty() {
        format!("ok: dim {}, character {}", m.dim(), m.character())
    } else {
        violations.iter().map(ToString::to_string).collect::<Vec<_>>().join("\n")
    };
    out.emit(&json!({ "passed": violations.is_empty(), "dim": m.dim(), "violations": violations }), &text)?;
    if violations.is_empty() {
        Ok(())
    } else {
        Err(CheckFailed.into())
    }
}

fn nf(cfg: &RunConfig, out: &Out, expr: &str, nu: Option<&str>) -> Result<()> {
    let e: Expr = expr.parse()?;
    let nu = nu.map(|s| parse_weight(s, cfg.rs.rank())).transpose()?;
    let alg = KlrAlgebra::new(cfg.rs.cartan().clone());
    let x = alg.normal_form(&e, nu.as_deref())?;
    let terms: Vec<Value> = x
        .terms
        .iter()
        .map(|(t, c)| {
            json!({ "coefficient": c, "term": t.to_string(), "idempotent": word_to_string(&t.ii), "degree": alg.degree(t) })
        })
        .collect();
    out.emit(&json!({ "normal_form": x.to_string(), "terms": terms }), &x.to_string())
}

fn chevalley_check(cfg: &RunConfig, out: &Out) -> Result<()> {
    let order = cfg.order()?;
    let table = CuspidalTable::build(&cfg.rs, &order)?;
    let cr = cross_route(&cfg.rs, &order, &table, cfg.max_height)?;
    let mut text: Vec<String> = vec!["root | word | character at q=1 | pairing | match".into()];
    for r in &cr.rows {
        text.push(format!(
            "{:?} | {} | {} | {} | {}",
            r.root,
            r.word,
            r.character_q1,
            r.z,
            if r.matches { "yes" } else { "no" }
        ));
    }
    text.push(format!(
        "signs: {}",
        cr.signs.iter().map(|(r, s)| format!("{r:?} {s:+}")).collect::<Vec<_>>().join(", ")
    ));
    let mut passed = cr.passed;
    let mut folding = Value::Null;
    if !cfg.rs.cartan().is_simply_laced() {
        let fa = folded_algebra(fold(cfg.rs.cartan())?)?;
        let checks = fold_check(&fa, &order.reduced_word(&cfg.rs)?, cfg.max_height)?;
        let ok = checks.iter().all(|c| c.sum_matches && c.nonnegative);
        passed &= ok;
        text.push(format!(
            "folding from {}: {} pairings, {}",
            fa.datum.ambient.name().map(str::to_string).unwrap_or_else(|| format!("{:?}", fa.datum.ambient.pairing())),
            checks.len(),
            if ok { "all sums of nonnegative terms" } else { "FAILED" }
        ));
        folding = json!({ "ambient": fa.datum.ambient.name(), "passed": ok, "pairings": checks });
    }
    out.emit(&json!({ "cross_route": cr, "folding": folding, "passed": passed }), &text.join("\n"))?;
    if passed {
        Ok(())
    } else {
        Err(CheckFailed.into())
    }
}
