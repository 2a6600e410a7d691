use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use hwmod_core::algebra::Algebra;
use hwmod_core::classify;
use hwmod_core::dirac;
use hwmod_core::error::Error;
use hwmod_core::infchar::{self, DominantParam, Parity};
use hwmod_core::prv;
use hwmod_core::rat;
use hwmod_core::schmid;
use hwmod_core::weights::Weight;

const EXIT_NON_UNITARY: u8 = 10;
const EXIT_NOT_CONSTRUCTIBLE: u8 = 11;
const EXIT_INVALID: u8 = 2;

/// Unitarity of highest weight modules for sp(2n,R), su(p,q) and so*(2n):
/// exact classification, certificate scans, product constructions and
/// infinitesimal-character enumeration.
#[derive(Parser)]
#[command(name = "hwmod", version, max_term_width = 100)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
    Dot,
}

#[derive(Clone, Copy, ValueEnum)]
enum ParityArg {
    Int,
    Half,
}

#[derive(Subcommand)]
enum Command {
    /// Classify the irreducible module with the given highest weight.
    Classify(WeightCmd),
    /// Scan the Schmid lattice and report a unitarity certificate.
    Scan(ScanCmd),
    /// Construct a discrete unitary point as a product of basic modules.
    Recipe(WeightCmd),
    /// List the Schmid modules up to a level bound.
    Schmid(SchmidCmd),
    /// Enumerate parameters with a fixed infinitesimal character (sp only).
    Infchar(InfcharCmd),
}

#[derive(Args)]
struct WeightCmd {
    /// Algebra: sp:N, su:P,Q or so*:N.
    algebra: String,
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Weight coordinates, comma separated, after `--` (su may use `|`
    /// between blocks).
    #[arg(last = true, required = true)]
    weight: String,
}

#[derive(Args)]
struct ScanCmd {
    /// Algebra: sp:N, su:P,Q or so*:N.
    algebra: String,
    /// Level bound for the scan; defaults to m*(m+1) basic levels.
    #[arg(long)]
    level: Option<usize>,
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Weight coordinates, comma separated, after `--`.
    #[arg(last = true, required = true)]
    weight: String,
}

#[derive(Args)]
struct SchmidCmd {
    /// Algebra: sp:N, su:P,Q or so*:N.
    algebra: String,
    /// Level bound for the enumeration.
    #[arg(long)]
    level: usize,
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
}

#[derive(Args)]
struct InfcharCmd {
    /// Dominant character: a nonincreasing rational list like
    /// `7,5,4,4,3,2,2,1,1,0`, or `rho:N` for `(N,...,1)`.
    dominant: String,
    /// List every parameter of the character.
    #[arg(long, conflicts_with_all = ["unitary", "hasse", "cones"])]
    all: bool,
    /// List only the unitary parameters (constructive enumeration).
    #[arg(long, conflicts_with_all = ["hasse", "cones"])]
    unitary: bool,
    /// Hasse diagram of the character of the half-sum (rho:N only).
    #[arg(long, conflicts_with = "cones")]
    hasse: bool,
    /// Translation cones of unitary parameters with regular character.
    #[arg(long)]
    cones: bool,
    /// Coordinate parity for --cones; defaults to the character's parity.
    #[arg(long, value_enum)]
    parity: Option<ParityArg>,
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
}

pub fn run(cli: Cli) -> ExitCode {
    let result = match cli.command {
        Command::Classify(cmd) => cmd_classify(&cmd),
        Command::Scan(cmd) => cmd_scan(&cmd),
        Command::Recipe(cmd) => cmd_recipe(&cmd),
        Command::Schmid(cmd) => cmd_schmid(&cmd),
        Command::Infchar(cmd) => cmd_infchar(&cmd),
    };
    match result {
        Ok((text, code)) => {
            emit(&text);
            ExitCode::from(code)
        }
        Err(err) => {
            eprintln!("error: {err}");
            let code = match err {
                Error::NotConstructible(_) => EXIT_NOT_CONSTRUCTIBLE,
                _ => EXIT_INVALID,
            };
            ExitCode::from(code)
        }
    }
}

/// Append one output line to the buffer.
fn wline(buf: &mut String, args: std::fmt::Arguments<'_>) {
    use std::fmt::Write;
    writeln!(buf, "{args}").expect("writing to a String cannot fail");
}

/// Write to stdout; when a downstream consumer closes the pipe early,
/// leave quietly instead of panicking.
fn emit(text: &str) {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    if out.write_all(text.as_bytes()).is_err() || out.flush().is_err() {
        std::process::exit(0);
    }
}

fn parse_weight(spec: &str, coords: &str) -> Result<(Algebra, Weight), Error> {
    let algebra = Algebra::from_str(spec)?;
    let weight = Weight::parse(algebra, coords)?;
    Ok((algebra, weight))
}

fn reject_dot(format: Format) -> Result<(), Error> {
    if format == Format::Dot {
        Err(Error::Parse(
            "dot output is only available for `infchar --hasse`".into(),
        ))
    } else {
        Ok(())
    }
}

fn max_rank() -> Result<usize, Error> {
    match std::env::var("HWMOD_MAX_RANK") {
        Err(_) => Ok(10),
        Ok(v) => v
            .parse()
            .map_err(|_| Error::Parse(format!("invalid HWMOD_MAX_RANK value `{v}`"))),
    }
}

fn cmd_classify(cmd: &WeightCmd) -> Result<(String, u8), Error> {
    reject_dot(cmd.format)?;
    let (algebra, weight) = parse_weight(&cmd.algebra, &cmd.weight)?;
    let verdict = classify::classify(&weight)?;
    let mut out = String::new();
    match cmd.format {
        Format::Json => wline(&mut out, format_args!("{}", verdict.to_json())),
        _ => {
            wline(&mut out, format_args!("algebra: {algebra}"));
            wline(&mut out, format_args!("weight: {weight}"));
            wline(&mut out, format_args!("outcome: {}", verdict.describe(algebra)));
            wline(&mut out, format_args!("shape: {}", verdict.shape));
            let crits = verdict
                .critical_values
                .iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>()
                .join(", ");
            wline(&mut out, format_args!("critical values: {crits}"));
            wline(
                &mut out,
                format_args!("line: z={} a={}", verdict.line.z, verdict.line.a),
            );
        }
    }
    let code = if verdict.outcome.is_unitary() {
        0
    } else {
        EXIT_NON_UNITARY
    };
    Ok((out, code))
}

fn cmd_scan(cmd: &ScanCmd) -> Result<(String, u8), Error> {
    reject_dot(cmd.format)?;
    let (algebra, weight) = parse_weight(&cmd.algebra, &cmd.weight)?;
    let bound = cmd.level.unwrap_or_else(|| dirac::default_scan_bound(algebra));
    let cert = dirac::scan(&weight, bound)?;
    let mut out = String::new();
    match cmd.format {
        Format::Json => wline(&mut out, format_args!("{}", cert.to_json())),
        _ => {
            wline(&mut out, format_args!("algebra: {algebra}"));
            wline(&mut out, format_args!("weight: {weight}"));
            match &cert {
                dirac::DiracCertificate::AllStrictUpTo { bound } => {
                    wline(&mut out, format_args!("certificate: AllStrictUpTo({bound})"));
                }
                dirac::DiracCertificate::FirstStrictFailure { module, bound } => {
                    wline(
                        &mut out,
                        format_args!("certificate: FirstStrictFailure at {module} (bound {bound})"),
                    );
                }
                dirac::DiracCertificate::EqualityAt { module, bound } => {
                    wline(
                        &mut out,
                        format_args!("certificate: EqualityAt {module} (bound {bound})"),
                    );
                }
            }
        }
    }
    let code = match cert {
        dirac::DiracCertificate::FirstStrictFailure { .. } => EXIT_NON_UNITARY,
        _ => 0,
    };
    Ok((out, code))
}

fn cmd_recipe(cmd: &WeightCmd) -> Result<(String, u8), Error> {
    reject_dot(cmd.format)?;
    let (algebra, weight) = parse_weight(&cmd.algebra, &cmd.weight)?;
    let recipe = prv::discrete_recipe(&weight)?;
    let mut out = String::new();
    match cmd.format {
        Format::Json => wline(&mut out, format_args!("{}", recipe.to_json())),
        _ => {
            wline(&mut out, format_args!("algebra: {algebra}"));
            wline(&mut out, format_args!("target: {weight}"));
            wline(&mut out, format_args!("recipe: {recipe}"));
            wline(
                &mut out,
                format_args!("continuous_region: {}", recipe.continuous_region()),
            );
        }
    }
    Ok((out, 0))
}

fn cmd_schmid(cmd: &SchmidCmd) -> Result<(String, u8), Error> {
    reject_dot(cmd.format)?;
    let algebra = Algebra::from_str(&cmd.algebra)?;
    let modules = schmid::enumerate_up_to_level(algebra, cmd.level);
    let mut out = String::new();
    match cmd.format {
        Format::Json => {
            let list: Vec<_> = modules
                .iter()
                .map(|m| {
                    json!({
                        "level": m.level(),
                        "coeffs": m.coeffs(),
                        "s": m.weight().coords().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                    })
                })
                .collect();
            wline(&mut out, format_args!("{}", json!(list)));
        }
        _ => {
            for m in &modules {
                wline(&mut out, format_args!("{m}"));
            }
        }
    }
    Ok((out, 0))
}

fn parse_dominant(s: &str) -> Result<DominantParam, Error> {
    if let Some(n) = s.strip_prefix("rho:") {
        let n: usize = n
            .parse()
            .map_err(|_| Error::Parse(format!("invalid rank in `{s}`")))?;
        if n < 1 {
            return Err(Error::Parse("rank must be at least 1".into()));
        }
        return Ok(DominantParam::rho(n));
    }
    DominantParam::new(rat::parse_rat_list(s)?)
}

fn cmd_infchar(cmd: &InfcharCmd) -> Result<(String, u8), Error> {
    let dom = parse_dominant(&cmd.dominant)?;
    let cap = max_rank()?;
    if dom.rank() > cap {
        return Err(Error::RankTooLarge {
            got: dom.rank(),
            max: cap,
        });
    }

    if cmd.hasse {
        if !dom.is_rho() {
            return Err(Error::NotRhoCharacter);
        }
        let h = infchar::hasse_rho(dom.rank())?;
        let mut out = String::new();
        match cmd.format {
            Format::Dot => out.push_str(&h.to_dot()),
            Format::Json => wline(&mut out, format_args!("{}", h.to_json())),
            Format::Table => {
                wline(&mut out, format_args!("nodes ({}):", h.nodes.len()));
                for (p, y) in h.nodes.iter().zip(&h.youngs) {
                    wline(&mut out, format_args!("  ({p})  Y={y}"));
                }
                wline(&mut out, format_args!("edges ({}):", h.edges.len()));
                for &(src, dst) in &h.edges {
                    wline(
                        &mut out,
                        format_args!("  ({}) -> ({})", h.nodes[src], h.nodes[dst]),
                    );
                }
            }
        }
        return Ok((out, 0));
    }

    if cmd.cones {
        let parity = match cmd.parity {
            Some(ParityArg::Int) => Parity::Integer,
            Some(ParityArg::Half) => Parity::HalfInteger,
            None => dom.parity(),
        };
        let cones = infchar::unitary_cones(dom.rank(), parity);
        let mut out = String::new();
        match cmd.format {
            Format::Json => {
                let list: Vec<_> = cones.iter().map(|c| c.to_json()).collect();
                wline(&mut out, format_args!("{}", json!(list)));
            }
            _ => {
                for c in &cones {
                    wline(
                        &mut out,
                        format_args!(
                            "vertex=({}) dim={} kind={}",
                            c.vertex,
                            c.dimension,
                            c.kind.name()
                        ),
                    );
                }
            }
        }
        return Ok((out, 0));
    }

    let params = if cmd.unitary {
        infchar::enumerate_unitary(&dom)
    } else {
        infchar::enumerate_parameters(&dom)
    };
    let mut out = String::new();
    match cmd.format {
        Format::Json => {
            let list: Vec<Vec<String>> = params
                .iter()
                .map(|p| p.coords().iter().map(|c| c.to_string()).collect())
                .collect();
            let doc = json!({
                "dominant": dom.coords().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                "parameters": list,
            });
            wline(&mut out, format_args!("{doc}"));
        }
        _ => {
            for p in &params {
                wline(&mut out, format_args!("{p}"));
            }
        }
    }
    Ok((out, 0))
}
