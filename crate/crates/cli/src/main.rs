mod input;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use pei_core::groebner::{buchberger_with, Strategy};
use pei_core::hilbert::hilbert;
use pei_core::ideal::{eliminate, saturate};
use pei_core::pei::{is_isomorphic_projection, pei_chain, pei_relative_chain};
use pei_core::poly::parse_polynomials;
use pei_core::radical::radical;
use pei_core::secant::{
    clever_decomposition_check, double_projection_fibre_length, fibre_length, relative_fibre_length, secant_locus,
};
use pei_core::{Error, Ideal};

use input::{parse_problem, Problem};
use report::{point_text, Report};

#[derive(Parser)]
#[command(name = "pei", version, about = "Partial elimination ideals, secant cones and projection fibres")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// PEI chain of the ideal at the centre and k0.
    Pei {
        file: PathBuf,
        #[arg(long)]
        p: Option<String>,
        /// Also report k0 at this graded ideal of the target ring.
        #[arg(long)]
        at: Option<String>,
        /// Chain of K0 relative to the image of a second point.
        #[arg(long)]
        second: Option<String>,
    },
    /// Cone of k-secant lines through the centre.
    SecantCone {
        file: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        p: Option<String>,
    },
    /// The scheme intersected with its k-secant cone.
    SecantLocus {
        file: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        saturate: bool,
        #[arg(long)]
        p: Option<String>,
    },
    /// Length of the fibre of the projection from the centre through q.
    FibreLength {
        file: PathBuf,
        #[arg(long)]
        q: String,
        #[arg(long)]
        p: Option<String>,
    },
    Radical {
        file: PathBuf,
    },
    /// Saturation by the irrelevant ideal, with the saturation index.
    Saturate {
        file: PathBuf,
    },
    /// Krull dimension and multiplicity of the quotient.
    Hilbert {
        file: PathBuf,
    },
    Eliminate {
        file: PathBuf,
        /// Comma separated variable names.
        #[arg(long)]
        drop: String,
    },
    /// Test whether the sum of the K0 ideals at p and p2 cuts out the scheme.
    CleverDecomp {
        file: PathBuf,
        #[arg(long)]
        p2: String,
        #[arg(long)]
        p: Option<String>,
    },
    /// Fibre length of the projection from the line through p and p2.
    DoubleFibre {
        file: PathBuf,
        #[arg(long)]
        p2: String,
        #[arg(long)]
        q: String,
        #[arg(long)]
        p: Option<String>,
        /// Use the relative chain; needs the projection from p2 to be an isomorphism.
        #[arg(long)]
        relative: bool,
    },
    /// Gröbner basis statistics under the ring order.
    BenchGb {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = StrategyArg::Normal)]
        strategy: StrategyArg,
        /// Include wall-clock time (makes the output nondeterministic).
        #[arg(long)]
        timings: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum StrategyArg {
    Normal,
    Sugar,
}

enum Failure {
    Parse(String),
    Precondition(String),
    Inconsistent(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Parse(_) => 1,
            Failure::Precondition(_) => 2,
            Failure::Inconsistent(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Parse(m) | Failure::Precondition(m) | Failure::Inconsistent(m) => m,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Syntax { .. }
            | Error::UnknownVariable(_)
            | Error::CoefficientNotInField(_)
            | Error::InvalidField(_)
            | Error::InvalidRing(_) => Failure::Parse(e.to_string()),
            Error::Inconsistent(_) => Failure::Inconsistent(e.to_string()),
            _ => Failure::Precondition(e.to_string()),
        }
    }
}

type Outcome = Result<Report, Failure>;

fn load(file: &PathBuf) -> Result<Problem, Failure> {
    let text = std::fs::read_to_string(file).map_err(|e| Failure::Parse(format!("{}: {e}", file.display())))?;
    parse_problem(&text).map_err(|e| Failure::Parse(format!("{}: {e}", file.display())))
}

fn centre(prob: &Problem, p: &Option<String>) -> Result<pei_core::ClosedPoint, Failure> {
    match p {
        Some(spec) => prob.point(spec),
        None => prob.centre(),
    }
    .map_err(Failure::Parse)
}

fn point(prob: &Problem, spec: &str) -> Result<pei_core::ClosedPoint, Failure> {
    prob.point(spec).map_err(Failure::Parse)
}

fn var_list(prob: &Problem, text: &str) -> Result<Vec<usize>, Failure> {
    let mut out = Vec::new();
    for v in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        out.push(prob.ring.var_index(v).ok_or_else(|| Failure::Parse(format!("unknown variable `{v}`")))?);
    }
    Ok(out)
}

fn dim_text(d: Option<usize>) -> String {
    d.map(|d| d.to_string()).unwrap_or_else(|| "empty".into())
}

fn run(cmd: Command) -> Outcome {
    let mut rep = Report::default();
    match cmd {
        Command::Pei { file, p, at, second } => {
            let prob = load(&file)?;
            let p = centre(&prob, &p)?;
            let chain = pei_chain(&prob.ideal, &p)?;
            rep.text("point", point_text(&p));
            rep.bool("on scheme", chain.point_on_scheme());
            if !chain.point_on_scheme() {
                rep.bool("isomorphic projection", is_isomorphic_projection(&prob.ideal, &p)?);
            }
            rep.int("k0", chain.k0());
            if let Some(text) = at {
                let sub = chain.embedding().sub().clone();
                let q = Ideal::new(&sub, parse_polynomials(&text, &sub)?)?;
                match chain.k0_at(&q)? {
                    Some(k) => rep.int("k0 at", k),
                    None => rep.text("k0 at", "none"),
                };
            }
            for (k, ideal) in chain.ideals().iter().enumerate() {
                rep.ideal(&format!("K{k}"), ideal);
            }
            if let Some(spec) = second {
                let rel = pei_relative_chain(&prob.ideal, &p, &point(&prob, &spec)?)?;
                rep.text("second", point_text(&point(&prob, &spec)?));
                rep.int("relative k0", rel.k0());
                for (k, ideal) in rel.ideals().iter().enumerate() {
                    rep.ideal(&format!("relative K{k}"), ideal);
                }
            }
        }
        Command::SecantCone { file, k, p } => {
            let prob = load(&file)?;
            let res = secant_locus(&prob.ideal, &centre(&prob, &p)?, k, false)?;
            rep.int("k", res.k).int("k0", res.k0);
            rep.bool("cone empty", res.cone_empty).text("cone dim", dim_text(res.cone_dim));
            rep.ideal("cone", &res.cone);
        }
        Command::SecantLocus { file, k, saturate, p } => {
            let prob = load(&file)?;
            let res = secant_locus(&prob.ideal, &centre(&prob, &p)?, k, saturate)?;
            rep.int("k", res.k).int("k0", res.k0);
            rep.bool("cone empty", res.cone_empty).text("cone dim", dim_text(res.cone_dim));
            rep.ideal("cone", &res.cone);
            rep.bool("locus empty", res.locus_empty);
            rep.ideal("locus", res.saturated_locus.as_ref().unwrap_or(&res.locus));
        }
        Command::FibreLength { file, q, p } => {
            let prob = load(&file)?;
            let q = point(&prob, &q)?;
            rep.text("q", point_text(&q));
            rep.int("length", fibre_length(&prob.ideal, &centre(&prob, &p)?, &q)?);
        }
        Command::Radical { file } => {
            let prob = load(&file)?;
            rep.ideal("radical", &radical(&prob.ideal)?);
        }
        Command::Saturate { file } => {
            let prob = load(&file)?;
            let sat = saturate(&prob.ideal, &Ideal::irrelevant(&prob.ring))?;
            rep.int("index", sat.index);
            rep.ideal("saturation", &sat.ideal);
        }
        Command::Hilbert { file } => {
            let prob = load(&file)?;
            let h = hilbert(&prob.ideal)?;
            let dim = h.krull_dim.map(|d| d as i64).unwrap_or(-1);
            rep.headline(format!("dim {dim}, e0 {}", h.e0));
            rep.json_int("dim", dim).json_int("e0", h.e0);
            let num: Vec<String> = h.numerator.iter().map(|c| c.to_string()).collect();
            rep.text("numerator", num.join(" "));
        }
        Command::Eliminate { file, drop } => {
            let prob = load(&file)?;
            let drop = var_list(&prob, &drop)?;
            rep.ideal("elimination", &eliminate(&prob.ideal, &drop)?);
        }
        Command::CleverDecomp { file, p2, p } => {
            let prob = load(&file)?;
            let check = clever_decomposition_check(&prob.ideal, &centre(&prob, &p)?, &point(&prob, &p2)?)?;
            rep.bool("clever", check.is_clever);
            if let Some(w) = &check.witness {
                rep.text("witness", w.to_string());
            }
            rep.ideal("saturated sum", &check.saturated_sum);
        }
        Command::DoubleFibre { file, p2, q, p, relative } => {
            let prob = load(&file)?;
            let (p, p2, q) = (centre(&prob, &p)?, point(&prob, &p2)?, point(&prob, &q)?);
            let length = if relative {
                relative_fibre_length(&prob.ideal, &p2, &p, &q)?
            } else {
                double_projection_fibre_length(&prob.ideal, &p, &p2, &q)?
            };
            rep.text("q", point_text(&q));
            rep.int("length", length);
        }
        Command::BenchGb { file, strategy, timings } => {
            let prob = load(&file)?;
            let strategy = match strategy {
                StrategyArg::Normal => Strategy::Normal,
                StrategyArg::Sugar => Strategy::Sugar,
            };
            let start = Instant::now();
            let gb = buchberger_with(&prob.ring, prob.ideal.gens(), prob.ring.order(), strategy)?;
            let elapsed = start.elapsed();
            let s = gb.stats();
            rep.text("order", prob.ring.order().name(prob.ring.names()));
            rep.int("basis length", gb.len());
            rep.int("pairs created", s.pairs_created).int("pairs pruned", s.pairs_pruned);
            rep.int("pairs reduced", s.pairs_reduced).int("zero reductions", s.zero_reductions);
            rep.int("max basis length", s.max_basis_len);
            rep.bool("verified", gb.verify());
            if timings {
                rep.text("seconds", format!("{:.6}", elapsed.as_secs_f64()));
            }
        }
    }
    Ok(rep)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(rep) => {
            match cli.format {
                Format::Text => print!("{}", rep.to_text()),
                Format::Json => print!("{}", rep.to_json()),
            }
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}
