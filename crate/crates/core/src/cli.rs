//! Command-line front end. [`dispatch`] never touches the process: it
//! returns the exit code and both output streams, so it can be tested
//! directly.

use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::biplanarize::biplanarize_low_crossing;
use crate::bounds::{
    approx_factor_table, best_lower_bound, bipartite_chain, complete_chain, cstar_lower,
    format_rational, verify_certificate, BoundCertificate, ChainMode, Family, Instance,
};
use crate::bounds::{chain_certificate, rational};
use crate::drawing::{
    count_crossings, cylindrical_drawing, guy_number, load_drawing_json, zarankiewicz_drawing,
    zarankiewicz_number,
};
use crate::error::{Error, Result};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CommandOutcome {
    pub exit_code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl CommandOutcome {
    fn ok(stdout: String) -> Self {
        CommandOutcome {
            exit_code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn failure(stderr: String) -> Self {
        CommandOutcome {
            exit_code: EXIT_FAILURE,
            stdout: String::new(),
            stderr,
        }
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "crossplane",
    version,
    about = "Crossing-number lower bounds, drawings, and biplanar decompositions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Best certified lower bound on cr_k of K_n or K_{p,q}
    Bound(BoundArgs),
    /// Counting-method chain from a seed size to a target size
    Chain(ChainArgs),
    /// Write a drawing with a known crossing count
    #[command(subcommand)]
    Draw(DrawCommand),
    /// Split a drawn graph into two planar parts
    Decompose {
        #[arg(long)]
        drawing: PathBuf,
    },
    /// Replay a bound certificate
    Verify {
        #[arg(long)]
        certificate: PathBuf,
    },
    /// Summary tables
    #[command(subcommand)]
    Table(TableCommand),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    Complete,
    Bipartite,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Family {
        match f {
            FamilyArg::Complete => Family::Complete,
            FamilyArg::Bipartite => Family::Bipartite,
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    PerStep,
    Nested,
}

#[derive(Args, Debug)]
struct BoundArgs {
    #[arg(long, value_enum)]
    family: FamilyArg,
    #[arg(long, default_value_t = 2)]
    k: u64,
    #[arg(short = 'n', long)]
    n: Option<u64>,
    #[arg(short = 'p')]
    p: Option<u64>,
    #[arg(short = 'q')]
    q: Option<u64>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args, Debug)]
struct ChainArgs {
    #[arg(long, value_enum)]
    family: FamilyArg,
    #[arg(long)]
    start: u64,
    #[arg(long)]
    end: u64,
    #[arg(long, value_enum, default_value_t = ModeArg::PerStep)]
    mode: ModeArg,
    /// Bound at the start size; defaults to the best density bound there
    #[arg(long)]
    seed: Option<u128>,
    #[arg(long, default_value_t = 2)]
    k: u64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Subcommand, Debug)]
enum DrawCommand {
    /// Straight-line drawing of K_{p,q} with Z(p,q) crossings
    Zarankiewicz {
        #[arg(short = 'p')]
        p: usize,
        #[arg(short = 'q')]
        q: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Cylindrical drawing of K_n with Z(n) crossings
    Cylindrical {
        #[arg(short = 'n')]
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
enum TableCommand {
    /// Prior and new approximation factors
    ApproxFactors {
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Known range of the constant c*
    Cstar,
}

/// Parses `argv` (program name first) and runs the command.
pub fn dispatch<I, S>(argv: I) -> CommandOutcome
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    CommandOutcome::ok(text)
                }
                _ => CommandOutcome {
                    exit_code: EXIT_USAGE,
                    stdout: String::new(),
                    stderr: text,
                },
            };
        }
    };
    let result = match cli.command {
        Command::Bound(a) => bound(a),
        Command::Chain(a) => chain(a),
        Command::Draw(d) => draw(d),
        Command::Decompose { drawing } => decompose(&drawing),
        Command::Verify { certificate } => verify(&certificate),
        Command::Table(TableCommand::ApproxFactors { format }) => factors(format),
        Command::Table(TableCommand::Cstar) => Ok(CommandOutcome::ok(cstar())),
    };
    result.unwrap_or_else(|e| CommandOutcome::failure(format!("error: {e}\n")))
}

fn usage(msg: &str) -> CommandOutcome {
    CommandOutcome {
        exit_code: EXIT_USAGE,
        stdout: String::new(),
        stderr: format!("error: {msg}\n"),
    }
}

fn csv_text(header: &[&str], rows: &[Vec<String>]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| Error::Io(std::io::Error::other(e));
    w.write_record(header).map_err(io)?;
    for r in rows {
        w.write_record(r).map_err(io)?;
    }
    let bytes = w
        .into_inner()
        .map_err(|e| Error::Io(std::io::Error::other(e.to_string())))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

fn cr_label(k: u64) -> String {
    if k == 1 {
        "cr".into()
    } else {
        format!("cr_{k}")
    }
}

fn bound(a: BoundArgs) -> Result<CommandOutcome> {
    let instance = match (a.family, a.n, a.p, a.q) {
        (FamilyArg::Complete, Some(n), None, None) => Instance::Complete(n),
        (FamilyArg::Bipartite, None, Some(p), Some(q)) => Instance::Bipartite(p, q),
        (FamilyArg::Complete, ..) => return Ok(usage("complete family takes --n only")),
        (FamilyArg::Bipartite, ..) => return Ok(usage("bipartite family takes -p and -q only")),
    };
    let cert = best_lower_bound(instance, a.k)?;
    let out = match a.format {
        Format::Json => cert.to_json()? + "\n",
        Format::Csv => {
            let rows: Vec<Vec<String>> = cert
                .steps
                .iter()
                .enumerate()
                .map(|(i, s)| {
                    let v = serde_json::to_value(s).expect("steps serialize");
                    vec![
                        i.to_string(),
                        v["op"].as_str().unwrap_or_default().to_string(),
                        v["args"].to_string(),
                        s.result.clone(),
                    ]
                })
                .collect();
            csv_text(&["step", "op", "args", "result"], &rows)?
        }
        Format::Text => bound_text(&cert, instance),
    };
    Ok(CommandOutcome::ok(out))
}

fn bound_text(cert: &BoundCertificate, instance: Instance) -> String {
    let mut s = format!("{}({instance}) >= {}\n", cr_label(cert.k), cert.value);
    for (i, step) in cert.steps.iter().enumerate() {
        let v = serde_json::to_value(step).expect("steps serialize");
        let op = v["op"].as_str().unwrap_or_default();
        let _ = writeln!(
            s,
            "  {i:>3}  {op:<22} {:<48} {}",
            v["args"].to_string(),
            step.result
        );
    }
    s
}

fn chain(a: ChainArgs) -> Result<CommandOutcome> {
    let mode = match a.mode {
        ModeArg::PerStep => ChainMode::PerStep,
        ModeArg::Nested => ChainMode::Nested,
    };
    let (seed_instance, target) = match a.family {
        FamilyArg::Complete => (Instance::Complete(a.start), Instance::Complete(a.end)),
        FamilyArg::Bipartite => (
            Instance::Bipartite(a.start, a.start),
            Instance::Bipartite(a.end, a.end),
        ),
    };
    let seed = match a.seed {
        Some(s) => s,
        None => chain_certificate(seed_instance, seed_instance, a.k, mode)?.value,
    };
    let rows: Vec<(u64, u128)> = (a.start..=a.end)
        .map(|n| {
            let v = match a.family {
                FamilyArg::Complete => complete_chain(a.start, n, seed)?,
                FamilyArg::Bipartite => bipartite_chain(a.start, n, seed, mode)?,
            };
            Ok((n, v))
        })
        .collect::<Result<_>>()?;
    let label = |n: u64| match target {
        Instance::Complete(_) => Instance::Complete(n).to_string(),
        Instance::Bipartite(..) => Instance::Bipartite(n, n).to_string(),
    };
    let out = match a.format {
        Format::Text => {
            let mut s = format!(
                "{} chain, {mode}, seed {seed} at {seed_instance}\n",
                a.family_name()
            );
            for (n, v) in &rows {
                let _ = writeln!(s, "  {:<10} {v}", label(*n));
            }
            s
        }
        Format::Csv => csv_text(
            &["n", "value"],
            &rows
                .iter()
                .map(|(n, v)| vec![n.to_string(), v.to_string()])
                .collect::<Vec<_>>(),
        )?,
        Format::Json => {
            let v = serde_json::json!({
                "family": Family::from(a.family),
                "mode": mode,
                "k": a.k,
                "seed": seed.to_string(),
                "rows": rows.iter().map(|(n, v)| serde_json::json!({"n": n, "value": v.to_string()})).collect::<Vec<_>>(),
            });
            serde_json::to_string_pretty(&v)? + "\n"
        }
    };
    Ok(CommandOutcome::ok(out))
}

impl ChainArgs {
    fn family_name(&self) -> &'static str {
        match self.family {
            FamilyArg::Complete => "complete",
            FamilyArg::Bipartite => "bipartite",
        }
    }
}

fn emit(json: String, out: Option<PathBuf>, summary: String) -> Result<CommandOutcome> {
    match out {
        Some(path) => {
            fs::write(&path, json + "\n")?;
            Ok(CommandOutcome::ok(format!(
                "{summary}\nwrote {}\n",
                path.display()
            )))
        }
        None => Ok(CommandOutcome {
            exit_code: EXIT_OK,
            stdout: json + "\n",
            stderr: summary + "\n",
        }),
    }
}

fn draw(d: DrawCommand) -> Result<CommandOutcome> {
    match d {
        DrawCommand::Zarankiewicz { p, q, out } => {
            let drawing = zarankiewicz_drawing(p, q)?;
            let (count, _) = count_crossings(&drawing)?;
            let z = zarankiewicz_number(p as u64, q as u64);
            emit(
                drawing.to_json()?,
                out,
                format!("K_{{{p},{q}}}: {count} crossings, Z = {z}"),
            )
        }
        DrawCommand::Cylindrical { n, out } => {
            let drawing = cylindrical_drawing(n)?;
            let z = guy_number(n as u64);
            emit(
                drawing.to_json()?,
                out,
                format!("K_{n}: {} crossings, Z = {z}", drawing.crossing_count()),
            )
        }
    }
}

fn decompose(path: &PathBuf) -> Result<CommandOutcome> {
    let drawing = load_drawing_json(&fs::read_to_string(path)?)?;
    match biplanarize_low_crossing(&drawing) {
        Ok(dec) => Ok(CommandOutcome::ok(dec.to_json()? + "\n")),
        Err(f) => Ok(CommandOutcome::failure(format!(
            "decomposition failed: {f}\n"
        ))),
    }
}

fn verify(path: &PathBuf) -> Result<CommandOutcome> {
    let cert = BoundCertificate::from_json(&fs::read_to_string(path)?)?;
    let verdict = verify_certificate(&cert);
    if verdict.is_valid() {
        let instance = cert.instance()?;
        Ok(CommandOutcome::ok(format!(
            "valid: {}({instance}) >= {}\n",
            cr_label(cert.k),
            cert.value
        )))
    } else {
        Ok(CommandOutcome::failure(format!("{verdict}\n")))
    }
}

fn factors(format: Format) -> Result<CommandOutcome> {
    let rows = approx_factor_table();
    let out = match format {
        Format::Text => {
            let mut s = format!("{:<16} {:>8} {:>8}\n", "quantity", "prior", "new");
            for r in &rows {
                let _ = writeln!(
                    s,
                    "{:<16} {:>8} {:>8}",
                    r.quantity,
                    r.prior_display(),
                    r.new_display()
                );
            }
            s
        }
        Format::Csv => csv_text(
            &["quantity", "prior", "new", "prior_exact", "new_exact"],
            &rows
                .iter()
                .map(|r| {
                    vec![
                        r.quantity.to_string(),
                        r.prior_display(),
                        r.new_display(),
                        format_rational(&r.prior),
                        format_rational(&r.new),
                    ]
                })
                .collect::<Vec<_>>(),
        )?,
        Format::Json => serde_json::to_string_pretty(&rows)? + "\n",
    };
    Ok(CommandOutcome::ok(out))
}

fn cstar() -> String {
    let c = cstar_lower();
    format!(
        "c* >= {} (64/694 ~ {:.4}); prior lower bound 0.067; upper bound {}\n",
        format_rational(&c),
        64.0 / 694.0,
        format_rational(&rational(3, 8))
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(args: &[&str]) -> CommandOutcome {
        dispatch(std::iter::once("crossplane").chain(args.iter().copied()))
    }

    #[test]
    fn bound_text_and_formats() {
        let o = run(&[
            "bound",
            "--family",
            "bipartite",
            "--k",
            "2",
            "-p",
            "21",
            "-q",
            "21",
        ]);
        assert_eq!(o.exit_code, 0, "{}", o.stderr);
        assert!(
            o.stdout.starts_with("cr_2(K_{21,21}) >= 825\n"),
            "{}",
            o.stdout
        );

        let o = run(&[
            "bound", "--family", "complete", "--n", "25", "--format", "json",
        ]);
        let cert = BoundCertificate::from_json(&o.stdout).unwrap();
        assert_eq!(cert.value, 435);

        let o = run(&[
            "bound", "--family", "complete", "--n", "25", "--format", "csv",
        ]);
        assert!(o.stdout.starts_with("step,op,args,result\n"));
        assert_eq!(o.stdout.lines().count(), 4);
    }

    #[test]
    fn usage_errors_exit_2() {
        assert_eq!(
            run(&["bound", "--family", "complete", "-p", "3", "-q", "3"]).exit_code,
            2
        );
        assert_eq!(
            run(&["bound", "--family", "triangle", "--n", "3"]).exit_code,
            2
        );
        assert_eq!(run(&["frobnicate"]).exit_code, 2);
        assert_eq!(run(&["table", "approx-factors", "--bogus"]).exit_code, 2);
        assert_eq!(run(&["--help"]).exit_code, 0);
    }

    #[test]
    fn domain_errors_exit_1() {
        let o = run(&["bound", "--family", "complete", "--n", "9", "--k", "0"]);
        assert_eq!(o.exit_code, 1);
        assert!(o.stderr.contains("k must be"));
        assert_eq!(run(&["draw", "cylindrical", "-n", "13"]).exit_code, 1);
        assert_eq!(
            run(&[
                "chain",
                "--family",
                "bipartite",
                "--start",
                "3",
                "--end",
                "5",
                "--seed",
                "1"
            ])
            .exit_code,
            1
        );
    }

    #[test]
    fn chain_tables() {
        let o = run(&[
            "chain",
            "--family",
            "bipartite",
            "--start",
            "15",
            "--end",
            "21",
        ]);
        assert_eq!(o.exit_code, 0, "{}", o.stderr);
        assert!(o.stdout.contains("seed 203"));
        assert!(o.stdout.trim_end().ends_with("817"));
        let o = run(&[
            "chain",
            "--family",
            "bipartite",
            "--start",
            "15",
            "--end",
            "21",
            "--mode",
            "nested",
            "--format",
            "csv",
        ]);
        assert!(o.stdout.trim_end().ends_with("21,824"));
        let o = run(&[
            "chain", "--family", "complete", "--start", "25", "--end", "57", "--format", "json",
        ]);
        let v: serde_json::Value = serde_json::from_str(&o.stdout).unwrap();
        assert_eq!(
            v["rows"].as_array().unwrap().last().unwrap()["value"],
            "13667"
        );
    }

    #[test]
    fn tables() {
        let o = run(&["table", "approx-factors"]);
        let rows: Vec<Vec<&str>> = o
            .stdout
            .lines()
            .skip(1)
            .map(|l| l.split_whitespace().collect())
            .collect();
        let news: Vec<&str> = rows.iter().map(|r| r[2]).collect();
        assert_eq!(news, ["3", "3.17", "9.15", "7.25"]);
        let o = run(&["table", "approx-factors", "--format", "json"]);
        let v: serde_json::Value = serde_json::from_str(&o.stdout).unwrap();
        assert_eq!(v[1]["new"], "2429/768");
        assert!(run(&["table", "cstar"]).stdout.contains("32/347"));
    }

    #[test]
    fn identical_inputs_give_identical_outputs() {
        let args = [
            "bound",
            "--family",
            "bipartite",
            "-p",
            "9",
            "-q",
            "30",
            "--format",
            "json",
        ];
        assert_eq!(run(&args), run(&args));
    }
}
