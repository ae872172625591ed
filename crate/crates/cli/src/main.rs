use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use serde_json::json;

use shifted_antimagic::constructors::{construct_family, p3_threshold};
use shifted_antimagic::families::{self, Family};
use shifted_antimagic::spectrum::{
    decide_with_budget, finite_window_with_budget, spectrum_with, Decision, SpectrumOptions,
};
use shifted_antimagic::{vertex_sums, Certificate, EdgeLabeling, Graph, Verdict, DEFAULT_BUDGET};

/// Build, check and search shifted-antimagic edge labelings.
#[derive(Parser, Debug)]
#[command(name = "antimagic", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a k-shifted-antimagic labeling and write it as a certificate.
    Construct {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long, allow_hyphen_values = true)]
        k: i64,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: usize,
        /// Certificate path; standard output if omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Re-check a certificate file.
    Verify { certificate: PathBuf },
    /// Decide a single shift by exhaustive search.
    Decide {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long, allow_hyphen_values = true)]
        k: i64,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Report every infeasible shift.
    Spectrum {
        #[command(flatten)]
        input: GraphInput,
        /// Extra shifts to decide, as `lo:hi`.
        #[arg(long, allow_hyphen_values = true, value_parser = parse_window)]
        window: Option<(i64, i64)>,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Number of P3 copies after which G + cP3 is not antimagic.
    ThresholdP3 {
        #[command(flatten)]
        input: GraphInput,
    },
}

#[derive(Args, Debug)]
struct GraphInput {
    /// Edge-list file: a header `n m`, then one `u v` per line.
    #[arg(long, conflicts_with = "family")]
    graph: Option<PathBuf>,
    /// path, star, double-star, cp3, 2p4, 2s3, p5prime, complete,
    /// complete-bipartite, cube, petersen, cycle; `p5`, `s4`, `k4`, `c6`
    /// are short for path, star, complete and cycle.
    #[arg(long)]
    family: Option<String>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    a: Option<usize>,
    #[arg(long)]
    b: Option<usize>,
    #[arg(long)]
    c: Option<usize>,
}

fn parse_window(s: &str) -> Result<(i64, i64), String> {
    let (lo, hi) = s.split_once(':').ok_or("expected lo:hi")?;
    let lo: i64 = lo.trim().parse().map_err(|e| format!("bad lower bound: {e}"))?;
    let hi: i64 = hi.trim().parse().map_err(|e| format!("bad upper bound: {e}"))?;
    if lo > hi {
        return Err(format!("empty window {lo}:{hi}"));
    }
    Ok((lo, hi))
}

/// A loaded graph and, for the named families, its closed-form identity.
struct Loaded {
    graph: Graph,
    family: Option<Family>,
}

impl GraphInput {
    fn load(&self) -> Result<Loaded> {
        if let Some(path) = &self.graph {
            let text = fs::read_to_string(path)
                .with_context(|| format!("cannot read {}", path.display()))?;
            let graph = Graph::parse_edge_list(&text)
                .with_context(|| format!("cannot parse {}", path.display()))?;
            return Ok(Loaded { graph, family: None });
        }
        let name = self
            .family
            .as_deref()
            .ok_or_else(|| anyhow!("give either --graph FILE or --family NAME"))?
            .to_ascii_lowercase();
        let need = |v: Option<usize>, flag: &str| {
            v.ok_or_else(|| anyhow!("--family {name} needs --{flag}"))
        };
        let named = |family: Family| Ok(Loaded { graph: family.graph(), family: Some(family) });
        let plain = |graph: Graph| Ok(Loaded { graph, family: None });

        if let Some((prefix, digits)) = name.split_at_checked(1) {
            if let Ok(n) = digits.parse::<usize>() {
                return match prefix {
                    "p" => named(Family::Path { n }),
                    "s" => named(Family::Star { n }),
                    "k" => plain(families::complete(n)),
                    "c" => plain(families::cycle(n)),
                    _ => bail!("unknown family {name}"),
                };
            }
        }
        match name.as_str() {
            "path" => named(Family::Path { n: need(self.n, "n")? }),
            "star" => named(Family::Star { n: need(self.n, "n")? }),
            "double-star" => named(Family::DoubleStar {
                a: need(self.a, "a")?,
                b: need(self.b, "b")?,
            }),
            "cp3" => named(Family::Cp3 { c: need(self.c, "c")? }),
            "2p4" | "two-p4" => named(Family::TwoP4),
            "2s3" | "two-s3" => named(Family::TwoS3),
            "p5prime" | "p5'" => named(Family::P5Prime),
            "complete" => plain(families::complete(need(self.n, "n")?)),
            "complete-bipartite" => plain(families::complete_bipartite(
                need(self.a, "a")?,
                need(self.b, "b")?,
            )),
            "cube" => plain(families::hypercube(need(self.n, "n")? as u32)),
            "petersen" => plain(families::petersen()),
            "cycle" => plain(families::cycle(need(self.n, "n")?)),
            _ => bail!("unknown family {name}"),
        }
    }
}

fn emit(out: &Option<PathBuf>, text: &str) -> Result<()> {
    match out {
        Some(path) => fs::write(path, format!("{text}\n"))
            .with_context(|| format!("cannot write {}", path.display())),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

fn build(loaded: &Loaded, k: i64, budget: usize) -> Result<Option<EdgeLabeling>> {
    if let Some(family) = loaded.family {
        return Ok(construct_family(family, k)?.into_labeling());
    }
    let g = &loaded.graph;
    if let Ok(window) = finite_window_with_budget(g, budget) {
        if let Some(f) = window.certificate(k) {
            return Ok(Some(f));
        }
    }
    Ok(match decide_with_budget(g, k, budget)? {
        Decision::Feasible(f) => Some(f),
        Decision::Infeasible => None,
    })
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Construct { input, k, budget, out } => {
            let loaded = input.load()?;
            let Some(f) = build(&loaded, k, budget)? else {
                eprintln!("no {k}-shifted-antimagic labeling exists");
                return Ok(ExitCode::from(2));
            };
            let cert = Certificate::new(&loaded.graph, &f, k)?;
            emit(&out, &cert.to_json())?;
            eprintln!("vertex sums: {:?}", vertex_sums(&loaded.graph, &f)?.0);
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { certificate } => {
            let text = fs::read_to_string(&certificate)
                .with_context(|| format!("cannot read {}", certificate.display()))?;
            let check = Certificate::from_json(&text)?.check()?;
            let witness = check.verdict.rejection().map(|r| r.to_string());
            println!(
                "{}",
                json!({
                    "accept": check.verdict.is_accept(),
                    "witness": witness,
                    "vertex_sums": check.vertex_sums,
                    "stored_fields_agree": check.stored_fields_agree,
                })
            );
            eprintln!("{}", check.verdict);
            if !check.stored_fields_agree {
                eprintln!("note: stored vertex_sums/valid fields disagree with the recomputation");
            }
            Ok(match check.verdict {
                Verdict::Accept => ExitCode::SUCCESS,
                Verdict::Reject(_) => ExitCode::from(2),
            })
        }
        Command::Decide { input, k, budget, out } => {
            let g = input.load()?.graph;
            let decision = decide_with_budget(&g, k, budget)?;
            let (status, labels) = match &decision {
                Decision::Feasible(f) => ("feasible", Some(f.labels().to_vec())),
                Decision::Infeasible => ("infeasible", None),
            };
            let report = json!({ "graph": g, "k": k, "status": status, "certificate": labels });
            emit(&out, &serde_json::to_string_pretty(&report)?)?;
            eprintln!("k = {k}: {status}");
            Ok(if decision.is_feasible() { ExitCode::SUCCESS } else { ExitCode::from(2) })
        }
        Command::Spectrum { input, window, budget, out } => {
            let g = input.load()?.graph;
            let report = spectrum_with(&g, &SpectrumOptions { budget, range: window })?;
            emit(&out, &report.to_json())?;
            match &report.window {
                Some(w) => eprintln!("window [{}, {}], excluded {:?}", w.lo, w.hi, report.excluded),
                None => eprintln!(
                    "no finite window; excluded within the searched range {:?}",
                    report.excluded
                ),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::ThresholdP3 { input } => {
            let g = input.load()?.graph;
            println!("{}", p3_threshold(&g));
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(1);
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
