//! `hopseq`: generate, verify, count, decode and render adjacency-hopping
//! de Bruijn sequences.
//!
//! Exit codes: 0 success, 1 verification failure or method disagreement,
//! 2 usage error, 3 infeasible parameters (k = 1 with n > 1).

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use hopseq::types::parse_codes;
use hopseq::{
    build_graph, count_all_methods, count_closed_form, generate, render, standard_rgb_alphabet,
    truncate, validate, Alphabet, CyclicSequence, Error, FringeSpec, LookupTable, Parameters,
};

const SCHEMA_VERSION: u32 = 1;

#[derive(Parser)]
#[command(name = "hopseq", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Params {
    /// Code-set size k
    #[arg(long = "codes", short = 'k')]
    codes: usize,
    /// Sequence order n
    #[arg(long = "order", short = 'n')]
    order: usize,
}

impl Params {
    fn get(&self) -> Result<Parameters, CliError> {
        if self.codes == 0 || self.order == 0 {
            return Err(CliError::Usage("k and n must be positive".into()));
        }
        Ok(Parameters::new(self.codes, self.order))
    }
}

#[derive(Copy, Clone, ValueEnum)]
enum CountMethod {
    ClosedForm,
    Best,
    BruteForce,
    All,
}

#[derive(Subcommand)]
enum Command {
    /// Generate an adjacency-hopping de Bruijn sequence H(k, n)
    Generate {
        #[command(flatten)]
        params: Params,
        /// Seed for reproducible randomized tours
        #[arg(long)]
        seed: Option<u64>,
        /// Print codes as comma-separated integers instead of characters
        #[arg(long)]
        numeric: bool,
        /// Truncate to the first L codes (linear sequence)
        #[arg(long, value_name = "L")]
        truncate: Option<usize>,
    },
    /// Check a sequence against the H(k, n) definition
    Verify {
        #[command(flatten)]
        params: Params,
        /// Sequence text: character labels or comma-separated integers
        sequence: String,
        #[arg(long)]
        json: bool,
    },
    /// Count H(k, n) sequences exactly
    Count {
        #[command(flatten)]
        params: Params,
        #[arg(long, value_enum, default_value = "closed-form")]
        method: CountMethod,
        /// Edge-count cap for brute-force enumeration
        #[arg(long, value_name = "EDGES")]
        brute_cap: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Decode length-n windows to their positions in a sequence
    Decode {
        #[command(flatten)]
        params: Params,
        /// The host sequence
        #[arg(long)]
        sequence: String,
        /// Query windows, one position (or MISS) printed per window
        #[arg(required = true)]
        windows: Vec<String>,
    },
    /// Structural report on the corresponding graph G_k^n
    GraphInfo {
        #[command(flatten)]
        params: Params,
        #[arg(long)]
        json: bool,
    },
    /// Render a sequence as a color fringe pattern (binary PPM)
    Pattern {
        #[command(flatten)]
        params: Params,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, value_name = "L")]
        truncate: Option<usize>,
        #[arg(long, default_value = "4")]
        fringe_width: usize,
        #[arg(long, default_value = "64")]
        height: usize,
        /// Output file; "-" writes the PPM to standard output
        #[arg(long, default_value = "-")]
        out: String,
    },
}

enum CliError {
    Usage(String),
    Infeasible(String),
    Failed(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::NonexistentSequence { .. } => CliError::Infeasible(e.to_string()),
            Error::InvalidLength { .. } | Error::CodeOutOfRange { .. } => {
                CliError::Usage(e.to_string())
            }
            _ => CliError::Failed(e.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Infeasible(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
        Err(CliError::Failed(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn default_alphabet(k: usize) -> Option<Alphabet> {
    (k <= 62).then(|| Alphabet::chars(k))
}

fn run(command: Command) -> Result<ExitCode, CliError> {
    match command {
        Command::Generate {
            params,
            seed,
            numeric,
            truncate: cut,
        } => {
            let p = params.get()?;
            let s = generate(p, seed)?;
            let codes: Vec<u32> = match cut {
                Some(len) => truncate(&s, len, p)?.codes().to_vec(),
                None => s.codes().to_vec(),
            };
            let alphabet = if numeric { None } else { default_alphabet(p.k) };
            match alphabet {
                Some(a) => {
                    let text: String = codes
                        .iter()
                        .map(|&c| match a.label(c) {
                            Some(hopseq::Label::Char(ch)) => ch,
                            _ => unreachable!(),
                        })
                        .collect();
                    println!("{text}");
                }
                None => println!(
                    "{}",
                    codes
                        .iter()
                        .map(|c| c.to_string())
                        .collect::<Vec<_>>()
                        .join(",")
                ),
            }
            Ok(ExitCode::SUCCESS)
        }

        Command::Verify {
            params,
            sequence,
            json,
        } => {
            let p = params.get()?;
            let alphabet = default_alphabet(p.k)
                .ok_or_else(|| CliError::Usage("k > 62 requires numeric sequences".into()))?;
            let codes = parse_codes(&sequence, &alphabet, p.k)
                .map_err(|e| CliError::Usage(e.to_string()))?;
            if codes.is_empty() {
                return Err(CliError::Usage("empty sequence".into()));
            }
            let report = validate(&CyclicSequence::new(codes), p)?;
            if json {
                let mut v = serde_json::to_value(&report).unwrap();
                v["schema_version"] = json!(SCHEMA_VERSION);
                println!("{}", serde_json::to_string_pretty(&v).unwrap());
            } else {
                println!("adjacency_hopping: {}", report.is_adjacency_hopping);
                println!("windows_covered: {}/{}", report.covered, report.expected);
                println!("duplicates: {}", report.duplicates.len());
                println!("missing: {}", report.missing.len());
                println!("length_ok: {}", report.length_ok);
                println!("verdict: {}", report.verdict);
            }
            Ok(if report.verdict {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }

        Command::Count {
            params,
            method,
            brute_cap,
            json,
        } => {
            let p = params.get()?;
            let report = match method {
                CountMethod::ClosedForm => {
                    let value = count_closed_form(p)?;
                    if json {
                        println!(
                            "{}",
                            serde_json::to_string_pretty(&json!({
                                "schema_version": SCHEMA_VERSION,
                                "k": p.k, "n": p.n,
                                "closed_form": value.to_string(),
                            }))
                            .unwrap()
                        );
                    } else {
                        println!("{value}");
                    }
                    return Ok(ExitCode::SUCCESS);
                }
                CountMethod::Best => {
                    if p.k < 2 || p.n < 2 {
                        return Err(CliError::Usage(
                            "--method best requires k >= 2 and n >= 2".into(),
                        ));
                    }
                    let g = build_graph(p)?;
                    let value = hopseq::count_best_theorem(&g)?;
                    if json {
                        println!(
                            "{}",
                            serde_json::to_string_pretty(&json!({
                                "schema_version": SCHEMA_VERSION,
                                "k": p.k, "n": p.n,
                                "best_theorem": value.to_string(),
                            }))
                            .unwrap()
                        );
                    } else {
                        println!("{value}");
                    }
                    return Ok(ExitCode::SUCCESS);
                }
                CountMethod::BruteForce => {
                    if p.k < 2 || p.n < 2 {
                        return Err(CliError::Usage(
                            "--method brute-force requires k >= 2 and n >= 2".into(),
                        ));
                    }
                    let g = build_graph(p)?;
                    let value = hopseq::enumerate_tours(&g, 0, brute_cap)?;
                    if json {
                        println!(
                            "{}",
                            serde_json::to_string_pretty(&json!({
                                "schema_version": SCHEMA_VERSION,
                                "k": p.k, "n": p.n,
                                "brute_force": value.to_string(),
                            }))
                            .unwrap()
                        );
                    } else {
                        println!("{value}");
                    }
                    return Ok(ExitCode::SUCCESS);
                }
                CountMethod::All => count_all_methods(p, true, brute_cap)?,
            };
            if json {
                let mut v = serde_json::to_value(&report).unwrap();
                v["schema_version"] = json!(SCHEMA_VERSION);
                println!("{}", serde_json::to_string_pretty(&v).unwrap());
            } else {
                println!("closed_form: {}", report.closed_form);
                match &report.best_theorem {
                    Some(v) => println!("best_theorem: {v}"),
                    None => println!("best_theorem: (not computed)"),
                }
                match &report.brute_force {
                    Some(v) => println!("brute_force: {v}"),
                    None => println!("brute_force: (not computed)"),
                }
                println!("methods_agree: {}", report.methods_agree);
            }
            Ok(if report.methods_agree {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }

        Command::Decode {
            params,
            sequence,
            windows,
        } => {
            let p = params.get()?;
            let alphabet = default_alphabet(p.k)
                .ok_or_else(|| CliError::Usage("k > 62 requires numeric sequences".into()))?;
            let codes = parse_codes(&sequence, &alphabet, p.k)
                .map_err(|e| CliError::Usage(e.to_string()))?;
            let table = LookupTable::for_cyclic(&CyclicSequence::new(codes), p)?;
            for w in &windows {
                let query = parse_codes(w, &alphabet, p.k)
                    .map_err(|e| CliError::Usage(e.to_string()))?;
                match table.decode(&query) {
                    Ok(pos) => println!("{pos}"),
                    Err(Error::WindowNotFound { .. }) => println!("MISS"),
                    Err(e) => return Err(e.into()),
                }
            }
            Ok(ExitCode::SUCCESS)
        }

        Command::GraphInfo { params, json } => {
            let p = params.get()?;
            let g = build_graph(p)?;
            let report = g.report()?;
            if json {
                let mut v = serde_json::to_value(&report).unwrap();
                v["schema_version"] = json!(SCHEMA_VERSION);
                println!("{}", serde_json::to_string_pretty(&v).unwrap());
            } else {
                println!("graph: G_{}^{}", report.k, report.n);
                println!("vertices: {}", report.vertices);
                println!("edges: {}", report.edges);
                println!(
                    "indegree: {}..{}",
                    report.min_indegree, report.max_indegree
                );
                println!(
                    "outdegree: {}..{}",
                    report.min_outdegree, report.max_outdegree
                );
                println!("loops: {}", report.loops);
                println!("strongly_connected: {}", report.strongly_connected);
                println!("power_identity: {}", report.power_identity);
            }
            Ok(ExitCode::SUCCESS)
        }

        Command::Pattern {
            params,
            seed,
            truncate: cut,
            fringe_width,
            height,
            out,
        } => {
            let p = params.get()?;
            if fringe_width == 0 || height == 0 {
                return Err(CliError::Usage(
                    "fringe width and height must be positive".into(),
                ));
            }
            let alphabet = standard_rgb_alphabet();
            if p.k > alphabet.size() {
                return Err(CliError::Usage(format!(
                    "the RGB fringe alphabet supports at most {} codes",
                    alphabet.size()
                )));
            }
            let s = generate(p, seed)?;
            let codes: Vec<u32> = match cut {
                Some(len) => truncate(&s, len, p)?.codes().to_vec(),
                None => s.codes().to_vec(),
            };
            let spec = FringeSpec {
                fringe_width,
                height,
                alphabet,
            };
            let img = render(&codes, &spec)?;
            let bytes = img.to_ppm();
            if out == "-" {
                std::io::stdout()
                    .write_all(&bytes)
                    .map_err(|e| CliError::Failed(e.to_string()))?;
            } else {
                std::fs::write(&out, &bytes).map_err(|e| CliError::Failed(e.to_string()))?;
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}
