use std::path::PathBuf;
use std::process::ExitCode;

use bbq_core::bilinear::{brute_force_search, build_bilinear, search, BilinearSpec, SearchOptions};
use bbq_core::biquandle::{
    alexander_biquandle, block_matrix_decode, block_matrix_encode, check_axioms, satisfies_axioms,
    trivial_biquandle, FiniteBiquandle,
};
use bbq_core::invariant::{counting_invariant, enumerate_colorings, phi_bb};
use bbq_core::link::{builtin_link, parse_gauss, LinkDiagram};
use bbq_core::modular::CarrierBound;
use bbq_core::Error;
use clap::{Args, Parser, Subcommand};

/// Finite bilinear biquandles and their link invariants.
#[derive(Parser)]
#[command(name = "bbq", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List every bilinear biquandle structure on (Z_n)^m.
    Search {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        m: usize,
        /// Keep alpha = beta = 1 with antisymmetric A.
        #[arg(long)]
        include_symplectic: bool,
        /// List every form instead of one per isomorphism class.
        #[arg(long)]
        all_forms: bool,
        /// Skip the entry pruning and try every form.
        #[arg(long)]
        brute_force: bool,
    },
    /// Check the four biquandle axioms.
    Verify(Source),
    /// Print the block matrix of a biquandle.
    Matrix {
        #[command(flatten)]
        source: Source,
        /// Alexander biquandle `n,s,t`.
        #[arg(long, value_parser = parse_triple, group = "source")]
        alexander: Option<(u32, u32, u32)>,
        /// Trivial biquandle on N elements.
        #[arg(long, group = "source")]
        trivial: Option<usize>,
    },
    /// Compute phi_BB and the counting invariant of a link.
    Invariant {
        #[command(flatten)]
        link: LinkArg,
        #[arg(long)]
        spec: BilinearSpec,
    },
    /// Tabulate non-symplectic bilinear biquandles of small cardinality.
    Table {
        #[arg(long, default_value_t = 27)]
        max_cardinality: usize,
    },
    /// List the colorings of a link.
    Color {
        #[command(flatten)]
        link: LinkArg,
        #[arg(long)]
        spec: BilinearSpec,
        #[arg(long)]
        limit: Option<usize>,
    },
}

#[derive(Args)]
#[group(id = "source", required = true, multiple = false)]
struct Source {
    /// Bilinear spec `n,m,alpha,beta,[[..],..]`.
    #[arg(long)]
    spec: Option<BilinearSpec>,
    /// File holding a block matrix.
    #[arg(long)]
    matrix_file: Option<PathBuf>,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct LinkArg {
    /// Built-in diagram name.
    #[arg(long)]
    link: Option<String>,
    /// Signed Gauss code.
    #[arg(long)]
    gauss: Option<String>,
}

fn parse_triple(s: &str) -> Result<(u32, u32, u32), String> {
    let parts = s
        .split(',')
        .map(|p| p.trim().parse::<u32>().map_err(|e| format!("`{p}`: {e}")))
        .collect::<Result<Vec<_>, _>>()?;
    match parts[..] {
        [n, s, t] => Ok((n, s, t)),
        _ => Err("expected n,s,t".into()),
    }
}

enum Failure {
    Verification,
    Core(Error),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl Source {
    fn load(&self) -> Result<FiniteBiquandle, Failure> {
        if let Some(spec) = &self.spec {
            // no validation: a failing spec should reach the axiom report
            return Ok(spec.materialize(CarrierBound::default())?);
        }
        let path = self.matrix_file.as_ref().expect("clap enforces one source");
        let text = std::fs::read_to_string(path)
            .map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
        Ok(block_matrix_decode(&text)?)
    }
}

impl LinkArg {
    fn diagram(&self) -> Result<LinkDiagram, Error> {
        match (&self.link, &self.gauss) {
            (Some(name), _) => builtin_link(name),
            (_, Some(code)) => parse_gauss(code),
            _ => unreachable!("clap enforces one link source"),
        }
    }
}

fn colorable(spec: &BilinearSpec) -> Result<FiniteBiquandle, Error> {
    let q = build_bilinear(spec)?;
    if !satisfies_axioms(&q) {
        return Err(Error::InvariantViolation(format!(
            "{spec} is not a biquandle"
        )));
    }
    Ok(q)
}

fn run(cli: Cli) -> Result<String, Failure> {
    let mut out = String::new();
    match cli.command {
        Command::Search {
            n,
            m,
            include_symplectic,
            all_forms,
            brute_force,
        } => {
            let opts = SearchOptions {
                exclude_symplectic: !include_symplectic,
                up_to_isomorphism: !all_forms,
                bound: CarrierBound::default(),
            };
            let found = if brute_force {
                brute_force_search(n, m, &opts)?
            } else {
                search(n, m, &opts)?
            };
            for spec in &found {
                out += &format!("{spec}\n");
            }
            out += &format!("found {}\n", found.len());
        }
        Command::Verify(source) => {
            let report = check_axioms(&source.load()?);
            for k in 1..=4 {
                match report.witness(k) {
                    None => out += &format!("axiom{k}: pass\n"),
                    Some(w) => out += &format!("axiom{k}: fail ({w})\n"),
                }
            }
            if !report.all_pass() {
                print!("{out}");
                return Err(Failure::Verification);
            }
        }
        Command::Matrix {
            source,
            alexander,
            trivial,
        } => {
            let q = match (alexander, trivial) {
                (Some((n, s, t)), _) => alexander_biquandle(n, s, t)?,
                (_, Some(size)) => {
                    if size == 0 {
                        return Err(Error::ShapeError(
                            "trivial biquandle needs at least 1 element".into(),
                        )
                        .into());
                    }
                    CarrierBound::default().check(u32::try_from(size).unwrap_or(u32::MAX), 1)?;
                    trivial_biquandle(size)
                }
                _ => source.load()?,
            };
            out += &block_matrix_encode(&q);
            out.push('\n');
        }
        Command::Invariant { link, spec } => {
            let d = link.diagram()?;
            let phi = phi_bb(&d, &spec)?;
            let hom = counting_invariant(&d, &build_bilinear(&spec)?);
            out += &format!("phi = {phi}\nhom = {hom}\n");
        }
        Command::Table { max_cardinality } => {
            CarrierBound::default().check(u32::try_from(max_cardinality).unwrap_or(u32::MAX), 1)?;
            let opts = SearchOptions::default();
            let mut shapes = Vec::new();
            for m in 2.. {
                if 2usize.pow(m as u32) > max_cardinality {
                    break;
                }
                for n in 2u32.. {
                    let size = (n as usize).pow(m as u32);
                    if size > max_cardinality {
                        break;
                    }
                    shapes.push((size, n, m));
                }
            }
            shapes.sort_unstable();
            let mut total = 0;
            for (_, n, m) in shapes {
                for spec in search(n, m, &opts)? {
                    let quandle = spec.materialize(opts.bound)?.is_quandle();
                    out += &format!("{spec} is_quandle={quandle}\n");
                    total += 1;
                }
            }
            out += &format!("total {total}\n");
        }
        Command::Color { link, spec, limit } => {
            let d = link.diagram()?;
            let q = colorable(&spec)?;
            let colorings = enumerate_colorings(&d, &q);
            let shown = limit.unwrap_or(colorings.len()).min(colorings.len());
            for c in &colorings[..shown] {
                let row: Vec<String> = c
                    .vectors(&q)
                    .expect("bilinear carrier")
                    .iter()
                    .map(ToString::to_string)
                    .collect();
                out += &row.join(" ");
                out.push('\n');
            }
            if shown < colorings.len() {
                out += &format!("... {} more\n", colorings.len() - shown);
            }
        }
    }
    Ok(out)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Core(e)) => {
            eprintln!("error: {e}");
            match e {
                Error::CapacityExceeded { .. } => ExitCode::from(3),
                _ => ExitCode::from(2),
            }
        }
        Err(Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
