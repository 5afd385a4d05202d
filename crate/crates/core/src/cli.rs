//! Command-line front end: argument parsing, configuration, and output routing.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::enumeration::{enumerate_with_counts, CornerSet};
use crate::error::{Error, Result};
use crate::hilbert::{chart_counts, HilbertPolynomial};
use crate::notation::VariableNames;
use crate::orders::{MonomialOrder, OrderKind, WeightVector};
use crate::report::decompose;
use crate::stratum::{analyze, Verdict};
use crate::verify::verify_strata;

pub use crate::notation::parse_monomial_ideal;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(
    name = "hilb-strata",
    version,
    about = "Groebner strata decomposition of Hilbert schemes of projective space"
)]
pub struct Cli {
    /// Monomial order: lex or degrevlex
    #[arg(long, global = true, default_value = "degrevlex")]
    pub order: String,

    /// Variable precedence, e.g. `x0>x1>x2>x3` or `x>y>z>w` (default: x_0 > x_1 > ... > x_n)
    #[arg(long, global = true)]
    pub precedence: Option<String>,

    /// Output format
    #[arg(long, global = true, value_enum, default_value = "text")]
    pub format: Format,

    /// Write output to this file instead of stdout
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    /// Seed for point sampling in `verify` and `decompose --verify`
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    /// Worker threads (0 = all cores)
    #[arg(long, global = true, env = "HILB_STRATA_JOBS", default_value_t = 0)]
    pub jobs: usize,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the Gotzmann number and Macaulay decomposition of P
    Gotzmann {
        /// Hilbert polynomial in t, e.g. "2t+2"
        p: String,
    },
    /// List the monomial ideals M_{P,n}
    Enumerate { p: String, n: usize },
    /// Classify every stratum and print the Betti table and singular points
    Decompose {
        p: String,
        n: usize,
        /// Also cross-check smooth strata with the Groebner oracle
        #[arg(long)]
        verify: bool,
    },
    /// Show the coordinates, equations, and verdict of one stratum
    Stratum {
        p: String,
        n: usize,
        /// Generators of the monomial ideal, e.g. "w^3, zw^2, yw^2, ..."
        #[arg(long)]
        ideal: String,
    },
    /// Sample points on every smooth stratum and compare with the oracle
    Verify {
        p: String,
        n: usize,
        /// Points per stratum
        #[arg(long, default_value_t = 3)]
        samples: usize,
    },
}

/// Everything a run needs, resolved from the command line.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub p: String,
    pub n: usize,
    pub order: OrderKind,
    pub precedence: Option<String>,
    pub format: Format,
    pub out: Option<PathBuf>,
    pub seed: u64,
    pub jobs: usize,
    pub verify: bool,
}

impl RunConfig {
    pub fn monomial_order(&self, names: &VariableNames) -> Result<MonomialOrder> {
        match &self.precedence {
            None => Ok(MonomialOrder::standard(self.order, self.n + 1)),
            Some(text) => MonomialOrder::new(self.order, parse_precedence(text, names)?),
        }
    }
}

/// Parses `x0>x1>...` (or the variable names) into a precedence permutation.
pub fn parse_precedence(text: &str, names: &VariableNames) -> Result<Vec<usize>> {
    let prec: Vec<usize> = text
        .split('>')
        .map(|tok| names.lookup(tok.trim()).ok_or_else(|| Error::UnknownVariable(tok.trim().to_string())))
        .collect::<Result<_>>()?;
    if prec.len() != names.len() {
        return Err(Error::InvalidPrecedence(text.to_string()));
    }
    Ok(prec)
}

/// Parses arguments and runs; returns the process exit status.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let result = match &cli.out {
        Some(path) => File::create(path).map_err(Error::from).and_then(|f| {
            let mut w = BufWriter::new(f);
            run(&cli, &mut w)?;
            w.flush().map_err(Error::from)
        }),
        None => {
            let stdout = std::io::stdout();
            let mut lock = stdout.lock();
            run(&cli, &mut lock)
        }
    };
    match result {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            1
        }
    }
}

pub fn run(cli: &Cli, out: &mut dyn Write) -> Result<()> {
    let order: OrderKind = cli.order.parse()?;
    let pool = rayon::ThreadPoolBuilder::new().num_threads(cli.jobs).build().map_err(|e| Error::Io(e.to_string()))?;
    let config = |p: &str, n: usize, verify: bool| RunConfig {
        p: p.to_string(),
        n,
        order,
        precedence: cli.precedence.clone(),
        format: cli.format,
        out: cli.out.clone(),
        seed: cli.seed,
        jobs: cli.jobs,
        verify,
    };
    let mut buf = Vec::new();
    let status = pool.install(|| {
        let out = &mut buf;
        match &cli.command {
            Command::Gotzmann { p } => gotzmann(p, cli.format, out),
            Command::Enumerate { p, n } => enumerate(&config(p, *n, false), out),
            Command::Decompose { p, n, verify } => run_decompose(&config(p, *n, *verify), out),
            Command::Stratum { p, n, ideal } => stratum(&config(p, *n, false), ideal, out),
            Command::Verify { p, n, samples } => run_verify(&config(p, *n, true), *samples, out),
        }
    });
    out.write_all(&buf)?;
    status
}

fn check_n(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InadmissibleInAmbient { n, reason: "n must be at least 1".into() });
    }
    Ok(())
}

fn gotzmann(p: &str, format: Format, out: &mut dyn Write) -> Result<()> {
    let hp = HilbertPolynomial::parse(p)?;
    match format {
        Format::Json => {
            writeln!(out, "{}", json!({"P": hp.to_string(), "r": hp.gotzmann(), "macaulay": hp.macaulay()}))?
        }
        Format::Csv => {
            writeln!(out, "P,r,macaulay")?;
            let a: Vec<String> = hp.macaulay().iter().map(ToString::to_string).collect();
            writeln!(out, "{},{},{}", hp, hp.gotzmann(), a.join(" "))?;
        }
        Format::Text => {
            let a: Vec<String> = hp.macaulay().iter().map(ToString::to_string).collect();
            writeln!(out, "P = {hp}")?;
            writeln!(out, "r = {}", hp.gotzmann())?;
            writeln!(out, "a = ({})", a.join(", "))?;
        }
    }
    Ok(())
}

fn enumerate(cfg: &RunConfig, out: &mut dyn Write) -> Result<()> {
    check_n(cfg.n)?;
    let hp = HilbertPolynomial::parse(&cfg.p)?;
    let names = VariableNames::default_for(cfg.n);
    let order = cfg.monomial_order(&names)?;
    let counts = chart_counts(&hp, cfg.n)?;
    let mut keys: Vec<(String, Vec<String>)> = enumerate_with_counts(&counts)
        .iter()
        .map(|cs| {
            let gens = cs.sorted_generators(&order).iter().map(|e| names.render(e)).collect();
            (cs.key(&order, &names).to_string(), gens)
        })
        .collect();
    keys.sort();
    match cfg.format {
        Format::Json => {
            let ideals: Vec<_> = keys.iter().map(|(k, g)| json!({"key": k, "generators": g})).collect();
            writeln!(
                out,
                "{}",
                json!({"P": hp.to_string(), "n": cfg.n, "r": counts.r, "order": order.name(), "count": keys.len(), "ideals": ideals})
            )?;
        }
        Format::Csv => {
            writeln!(out, "key")?;
            for (k, _) in &keys {
                writeln!(out, "\"{k}\"")?;
            }
        }
        Format::Text => {
            writeln!(out, "#M = {} (P = {}, n = {}, r = {})", keys.len(), hp, cfg.n, counts.r)?;
            for (k, _) in &keys {
                writeln!(out, "<{k}>")?;
            }
        }
    }
    Ok(())
}

fn run_decompose(cfg: &RunConfig, out: &mut dyn Write) -> Result<()> {
    check_n(cfg.n)?;
    let hp = HilbertPolynomial::parse(&cfg.p)?;
    let names = VariableNames::default_for(cfg.n);
    let order = cfg.monomial_order(&names)?;
    let report = decompose(&hp, cfg.n, &order, &names)?;
    let verification = if cfg.verify { Some(verify_strata(&hp, cfg.n, &order, &names, cfg.seed, 3)?) } else { None };
    match cfg.format {
        Format::Json => {
            let mut value = report.to_json();
            if let Some(v) = &verification {
                value["verification"] = serde_json::to_value(v).expect("serializable");
            }
            writeln!(out, "{value}")?;
        }
        Format::Csv => write!(out, "{}", report.to_csv())?,
        Format::Text => {
            write!(out, "{}", report.to_text())?;
            if let Some(v) = &verification {
                writeln!(
                    out,
                    "oracle: {}/{} smooth strata agree (seed {}, cap {})",
                    v.checked.iter().filter(|c| c.passed()).count(),
                    v.checked.len(),
                    v.seed,
                    v.degree_cap
                )?;
            }
        }
    }
    Ok(())
}

fn stratum(cfg: &RunConfig, ideal: &str, out: &mut dyn Write) -> Result<()> {
    check_n(cfg.n)?;
    let hp = HilbertPolynomial::parse(&cfg.p)?;
    let names = VariableNames::default_for(cfg.n);
    let order = cfg.monomial_order(&names)?;
    let counts = chart_counts(&hp, cfg.n)?;
    let gens = parse_monomial_ideal(ideal, cfg.n, &names)?;
    let cs = CornerSet::new(cfg.n, counts.r, gens)?;
    cs.validate(&counts)?;
    let omega = WeightVector::realize(&order, cfg.n, counts.r)?;
    let a = analyze(&cs, &order, &omega);
    let labels: Vec<String> = a.family.variables().iter().map(|v| v.label(&names)).collect();
    let (verdict, cell_dim) = match a.classification.verdict {
        Verdict::AffineCell(m) => ("cell", Some(m)),
        Verdict::SingularAtOrigin(_) => ("singular", None),
    };
    match cfg.format {
        Format::Json => {
            let vars: Vec<_> = labels
                .iter()
                .zip(a.family.weights())
                .enumerate()
                .map(|(i, (l, w))| json!({"name": format!("T{i}"), "coordinate": l, "weight": w}))
                .collect();
            let eqs: Vec<String> = a.presentation.equations.iter().map(ToString::to_string).collect();
            let residual: Vec<String> = a.elimination.residual.iter().map(ToString::to_string).collect();
            writeln!(
                out,
                "{}",
                json!({
                    "P": hp.to_string(), "n": cfg.n, "order": order.name(), "omega": omega.as_slice(),
                    "key": cs.key(&order, &names).to_string(), "variables": vars, "equations": eqs,
                    "tangent_dim": a.classification.tangent_dim, "verdict": verdict, "cell_dim": cell_dim,
                    "residual": residual,
                })
            )?;
        }
        Format::Csv => {
            writeln!(out, "variable,coordinate,weight")?;
            for (i, (l, w)) in labels.iter().zip(a.family.weights()).enumerate() {
                writeln!(out, "T{i},\"{l}\",{w}")?;
            }
        }
        Format::Text => {
            writeln!(out, "ideal <{}>", cs.key(&order, &names))?;
            writeln!(out, "order {}, weights {:?}", order.name(), omega.as_slice())?;
            writeln!(out, "{} coordinates:", labels.len())?;
            for (i, (l, w)) in labels.iter().zip(a.family.weights()).enumerate() {
                writeln!(out, "  T{i} = {l}  (weight {w})")?;
            }
            writeln!(out, "{} equations:", a.presentation.equations.len())?;
            for eq in &a.presentation.equations {
                writeln!(out, "  {eq}")?;
            }
            writeln!(out, "tangent dimension {}", a.classification.tangent_dim)?;
            match a.classification.verdict {
                Verdict::AffineCell(m) => writeln!(out, "verdict: affine cell A^{m}")?,
                Verdict::SingularAtOrigin(p) => {
                    writeln!(out, "verdict: singular at the monomial point (tangent dim {p})")?;
                    writeln!(out, "residual equations after elimination:")?;
                    for eq in &a.elimination.residual {
                        writeln!(out, "  {eq}")?;
                    }
                }
            }
        }
    }
    Ok(())
}

fn run_verify(cfg: &RunConfig, samples: usize, out: &mut dyn Write) -> Result<()> {
    check_n(cfg.n)?;
    let hp = HilbertPolynomial::parse(&cfg.p)?;
    let names = VariableNames::default_for(cfg.n);
    let order = cfg.monomial_order(&names)?;
    let report = verify_strata(&hp, cfg.n, &order, &names, cfg.seed, samples)?;
    match cfg.format {
        Format::Json => writeln!(out, "{}", serde_json::to_value(&report).expect("serializable"))?,
        Format::Csv => {
            writeln!(out, "key,samples,on_stratum,agreed")?;
            for c in &report.checked {
                writeln!(out, "\"{}\",{},{},{}", c.key, c.samples, c.on_stratum, c.agreed)?;
            }
        }
        Format::Text => {
            for c in &report.checked {
                let status = if c.passed() { "ok" } else { "MISMATCH" };
                writeln!(out, "{status:>8}  <{}>  {}/{} samples", c.key, c.agreed, c.samples)?;
            }
            writeln!(
                out,
                "{} smooth strata checked, {} singular skipped, seed {}, cap {}: {}",
                report.checked.len(),
                report.skipped_singular,
                report.seed,
                report.degree_cap,
                if report.all_agree { "all agree" } else { "DISAGREEMENT" }
            )?;
        }
    }
    if report.all_agree {
        Ok(())
    } else {
        Err(Error::InvalidIdeal("oracle disagreement on some stratum".into()))
    }
}
