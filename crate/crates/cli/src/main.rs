//! Command-line frontend: parse hypergraph/digraph/weight files, run
//! the per-degree analyses, and emit machine-readable reports. Exits
//! nonzero when any requested check fails.

use std::fmt::Display;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use hodgehyper::hypergraph::{digraph_to_hypergraph, format_hypergraph, parse_digraph, parse_hypergraph};
use hodgehyper::report::CSV_HEADER;
use hodgehyper::spectra::{carrier_operators, spectrum, verify_spectral_suite};
use hodgehyper::{
    analyze_degree, embedded_homology, random_hypergraph, Carrier, GeneratorParams, Hypergraph,
    Rat, Weight, WeightedComplex,
};

#[derive(Parser)]
#[command(name = "hodgehyper", version, about = "Embedded homology, Hodge decompositions and Laplacian spectra of weighted hypergraphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Backend {
    Exact,
    Float,
    Both,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Output {
    Json,
    Csv,
    Text,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SuiteKind {
    Diagram,
    Spectral,
    All,
}

#[derive(Parser)]
struct AnalysisArgs {
    /// Hypergraph file: one hyperedge per line, whitespace-separated
    /// vertex labels, `#` comments.
    #[arg(long)]
    input: PathBuf,
    /// Weight JSON file; omitted means the trivial weight.
    #[arg(long)]
    weight: Option<PathBuf>,
    /// Degrees to analyze: `all`, a single degree `n`, or a range `a..b`
    /// (inclusive).
    #[arg(long, default_value = "all")]
    degrees: String,
    #[arg(long, value_enum, default_value_t = Backend::Exact)]
    backend: Backend,
    #[arg(long, value_enum, default_value_t = Output::Text)]
    output: Output,
}

#[derive(Subcommand)]
enum Command {
    /// Embedded and simplicial Betti numbers per degree, with the
    /// kernel/quotient agreement certificate.
    Betti(AnalysisArgs),
    /// Hodge decomposition summands and identity checks per degree.
    Hodge(AnalysisArgs),
    /// Laplacian spectra per carrier and the spectral relation suite.
    Spectra(AnalysisArgs),
    /// Check the weight compatibility condition; prints the first
    /// violated (simplex, i, j) triple on failure.
    ValidateWeight {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        weight: PathBuf,
    },
    /// Convert an acyclic digraph to its elementary-path hypergraph.
    FromDigraph {
        #[arg(long)]
        input: PathBuf,
        /// Maximum number of edges per path; defaults to the number of
        /// digraph vertices.
        #[arg(long)]
        max_length: Option<usize>,
        /// Output file; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Randomized property suite over seeded hypergraphs.
    Suite {
        #[arg(long, value_enum, default_value_t = SuiteKind::All)]
        suite: SuiteKind,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Number of random hypergraphs.
        #[arg(long, default_value_t = 100)]
        count: u64,
        #[arg(long, value_enum, default_value_t = Output::Text)]
        output: Output,
    },
}

fn fail(msg: impl Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::FAILURE
}

fn read_to_string(path: &PathBuf) -> Result<String, String> {
    fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn load_inputs(args: &AnalysisArgs) -> Result<(Hypergraph, Weight), String> {
    let h = parse_hypergraph(&read_to_string(&args.input)?).map_err(|e| e.to_string())?;
    let weight = match &args.weight {
        None => Weight::Trivial,
        Some(path) => {
            let v: Value =
                serde_json::from_str(&read_to_string(path)?).map_err(|e| e.to_string())?;
            Weight::from_json(&v).map_err(|e| e.to_string())?
        }
    };
    Ok((h, weight))
}

/// Degrees requested by `--degrees`, clamped to the closure's top
/// dimension.
fn parse_degrees(spec: &str, top: Option<usize>) -> Result<Vec<usize>, String> {
    let top = match top {
        Some(t) => t,
        None => return Ok(Vec::new()),
    };
    if spec == "all" {
        return Ok((0..=top).collect());
    }
    let (lo, hi) = match spec.split_once("..") {
        Some((a, b)) => (
            a.parse().map_err(|_| format!("bad degree range `{spec}`"))?,
            b.parse().map_err(|_| format!("bad degree range `{spec}`"))?,
        ),
        None => {
            let n: usize = spec.parse().map_err(|_| format!("bad degree `{spec}`"))?;
            (n, n)
        }
    };
    if lo > hi || hi > top {
        return Err(format!(
            "degrees `{spec}` outside [0, {top}] (top dimension of the closure)"
        ));
    }
    Ok((lo..=hi).collect())
}

fn print_report(output: Output, records: &[Value], csv_rows: Option<(&str, Vec<String>)>, text: &str) {
    match output {
        Output::Json => println!(
            "{}",
            serde_json::to_string_pretty(&Value::Array(records.to_vec())).unwrap()
        ),
        Output::Csv => {
            if let Some((header, rows)) = csv_rows {
                println!("{header}");
                for row in rows {
                    println!("{row}");
                }
            } else {
                eprintln!("csv output is not available for this command; use json or text");
            }
        }
        Output::Text => print!("{text}"),
    }
}

/// (degree, betti_embedded, betti_complex, ker_inf_dim, ker_sup_dim, triple_agreement)
type BettiRow = (usize, usize, usize, usize, usize, bool);

fn cmd_betti(args: &AnalysisArgs) -> Result<bool, String> {
    let (h, weight) = load_inputs(args)?;
    let degrees = parse_degrees(&args.degrees, h.closure().top_dimension())?;
    let run = |float: bool| -> Result<Vec<BettiRow>, String> {
        let mut rows = Vec::new();
        for &n in &degrees {
            let (be, bc, ki, ks) = if float {
                let c = WeightedComplex::<f64>::new(&h, &weight).map_err(|e| e.to_string())?;
                let r = embedded_homology(&c, n).map_err(|e| e.to_string())?;
                (r.betti_embedded, r.betti_complex, r.ker_inf_dim, r.ker_sup_dim)
            } else {
                let c = WeightedComplex::<Rat>::new(&h, &weight).map_err(|e| e.to_string())?;
                let r = embedded_homology(&c, n).map_err(|e| e.to_string())?;
                (r.betti_embedded, r.betti_complex, r.ker_inf_dim, r.ker_sup_dim)
            };
            let agree = ki == be && ks == be;
            rows.push((n, be, bc, ki, ks, agree));
        }
        Ok(rows)
    };
    let rows = match args.backend {
        Backend::Exact => run(false)?,
        Backend::Float => run(true)?,
        Backend::Both => {
            let exact = run(false)?;
            let float = run(true)?;
            if exact != float {
                return Err("exact and float backends disagree".into());
            }
            exact
        }
    };
    let all_pass = rows.iter().all(|r| r.5);
    let records: Vec<Value> = rows
        .iter()
        .map(|&(n, be, bc, ki, ks, agree)| {
            json!({
                "n": n,
                "betti_embedded": be,
                "betti_complex": bc,
                "ker_inf_dim": ki,
                "ker_sup_dim": ks,
                "triple_agreement": agree,
            })
        })
        .collect();
    let csv: Vec<String> = rows
        .iter()
        .map(|&(n, be, bc, ..)| format!("{n},{be},{bc}"))
        .collect();
    let mut text = String::new();
    for &(n, be, bc, _, _, agree) in &rows {
        text.push_str(&format!(
            "degree {n}: betti_embedded = {be}, betti_complex = {bc}, triple agreement = {}\n",
            if agree { "yes" } else { "NO" }
        ));
    }
    print_report(
        args.output,
        &records,
        Some(("n,betti_embedded,betti_complex", csv)),
        &text,
    );
    Ok(all_pass)
}

fn cmd_hodge(args: &AnalysisArgs) -> Result<bool, String> {
    let (h, weight) = load_inputs(args)?;
    let degrees = parse_degrees(&args.degrees, h.closure().top_dimension())?;
    let analyze = |float: bool| -> Result<Vec<hodgehyper::DegreeSummary>, String> {
        degrees
            .iter()
            .map(|&n| {
                if float {
                    let c = WeightedComplex::<f64>::new(&h, &weight).map_err(|e| e.to_string())?;
                    analyze_degree(&c, n).map_err(|e| e.to_string())
                } else {
                    let c = WeightedComplex::<Rat>::new(&h, &weight).map_err(|e| e.to_string())?;
                    analyze_degree(&c, n).map_err(|e| e.to_string())
                }
            })
            .collect()
    };
    let summaries = match args.backend {
        Backend::Exact => analyze(false)?,
        Backend::Float => analyze(true)?,
        Backend::Both => {
            let exact = analyze(false)?;
            let float = analyze(true)?;
            for (e, f) in exact.iter().zip(&float) {
                if e.to_json() != f.to_json() {
                    return Err(format!("exact and float backends disagree at degree {}", e.n));
                }
            }
            exact
        }
    };
    let all_pass = summaries.iter().all(|s| s.all_pass());
    let records: Vec<Value> = summaries.iter().map(|s| s.to_json()).collect();
    let csv: Vec<String> = summaries.iter().map(|s| s.csv_row()).collect();
    let mut text = String::new();
    for s in &summaries {
        text.push_str(&format!(
            "degree {}: betti_embedded = {}, betti_complex = {}, common = {}, ker s* = {}, coker s* = {}\n",
            s.n, s.betti_embedded, s.betti_complex, s.dim_common, s.dim_ker_s_star, s.dim_coker_s_star
        ));
        for (name, pass) in &s.checks {
            text.push_str(&format!(
                "  {name}: {}\n",
                if *pass { "pass" } else { "FAIL" }
            ));
        }
    }
    print_report(args.output, &records, Some((CSV_HEADER, csv)), &text);
    Ok(all_pass)
}

fn cmd_spectra(args: &AnalysisArgs) -> Result<bool, String> {
    let (h, weight) = load_inputs(args)?;
    let degrees = parse_degrees(&args.degrees, h.closure().top_dimension())?;
    let c = WeightedComplex::<f64>::new(&h, &weight).map_err(|e| e.to_string())?;
    let mut all_pass = true;
    let mut records = Vec::new();
    let mut text = String::new();
    for &n in &degrees {
        let mut carrier_json = Vec::new();
        text.push_str(&format!("degree {n}:\n"));
        for carrier in [Carrier::Inf, Carrier::Sup, Carrier::Ambient] {
            let ops = carrier_operators(&c, n, carrier);
            let s = spectrum(&ops.full).map_err(|e| e.to_string())?;
            text.push_str(&format!(
                "  {} spectrum: {:?}\n",
                carrier.name(),
                s.entries()
            ));
            carrier_json.push(json!({"carrier": carrier.name(), "spectrum": s.to_json()}));
        }
        let report = verify_spectral_suite(&c, n).map_err(|e| e.to_string())?;
        all_pass &= report.all_pass();
        for r in &report.relations {
            text.push_str(&format!("  {}: {}\n", r.name, r.status.as_str()));
        }
        records.push(json!({
            "n": n,
            "carriers": carrier_json,
            "relations": report.relations.iter().map(|r| r.to_json()).collect::<Vec<_>>(),
        }));
    }
    print_report(args.output, &records, None, &text);
    Ok(all_pass)
}

fn cmd_validate_weight(input: &PathBuf, weight: &PathBuf) -> Result<bool, String> {
    let h = parse_hypergraph(&read_to_string(input)?).map_err(|e| e.to_string())?;
    let v: Value = serde_json::from_str(&read_to_string(weight)?).map_err(|e| e.to_string())?;
    let phi = Weight::from_json(&v).map_err(|e| e.to_string())?;
    match phi.first_violation(&h.closure()).map_err(|e| e.to_string())? {
        None => {
            println!("pass");
            Ok(true)
        }
        Some(violation) => {
            println!(
                "fail: simplex `{}` violates compatibility at (i, j) = ({}, {})",
                violation.simplex, violation.i, violation.j
            );
            Ok(false)
        }
    }
}

fn cmd_from_digraph(
    input: &PathBuf,
    max_length: Option<usize>,
    out: Option<&PathBuf>,
) -> Result<bool, String> {
    let g = parse_digraph(&read_to_string(input)?).map_err(|e| e.to_string())?;
    let max_len = max_length.unwrap_or_else(|| g.vertices().len());
    let h = digraph_to_hypergraph(&g, max_len).map_err(|e| e.to_string())?;
    let formatted = format_hypergraph(&h);
    match out {
        Some(path) => fs::write(path, formatted).map_err(|e| e.to_string())?,
        None => print!("{formatted}"),
    }
    Ok(true)
}

fn cmd_suite(kind: SuiteKind, seed: u64, count: u64, output: Output) -> Result<bool, String> {
    let mut all_pass = true;
    let mut records = Vec::new();
    let mut text = String::new();
    for i in 0..count {
        let params = GeneratorParams {
            vertices: 5,
            max_dimension: 3,
            edge_probability: 0.2,
            seed: seed + i,
        };
        let h = random_hypergraph(&params);
        let weight = Weight::Trivial;
        let top = h.closure().top_dimension().unwrap_or(0);
        let mut case_pass = true;
        let mut details = Vec::new();
        if matches!(kind, SuiteKind::Diagram | SuiteKind::All) {
            let c = WeightedComplex::<Rat>::new(&h, &weight).map_err(|e| e.to_string())?;
            for n in 0..=top {
                let s = analyze_degree(&c, n).map_err(|e| e.to_string())?;
                case_pass &= s.all_pass();
                details.push(s.to_json());
            }
        }
        if matches!(kind, SuiteKind::Spectral | SuiteKind::All) {
            let c = WeightedComplex::<f64>::new(&h, &weight).map_err(|e| e.to_string())?;
            for n in 0..=top {
                let r = verify_spectral_suite(&c, n).map_err(|e| e.to_string())?;
                case_pass &= r.all_pass();
                details.push(r.to_json());
            }
        }
        all_pass &= case_pass;
        text.push_str(&format!(
            "seed {}: {}\n",
            params.seed,
            if case_pass { "pass" } else { "FAIL" }
        ));
        records.push(json!({
            "params": params.to_json(),
            "pass": case_pass,
            "reports": details,
        }));
    }
    text.push_str(&format!(
        "suite: {}\n",
        if all_pass { "pass" } else { "FAIL" }
    ));
    print_report(output, &records, None, &text);
    Ok(all_pass)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Betti(args) => cmd_betti(args),
        Command::Hodge(args) => cmd_hodge(args),
        Command::Spectra(args) => cmd_spectra(args),
        Command::ValidateWeight { input, weight } => cmd_validate_weight(input, weight),
        Command::FromDigraph {
            input,
            max_length,
            out,
        } => cmd_from_digraph(input, *max_length, out.as_ref()),
        Command::Suite {
            suite,
            seed,
            count,
            output,
        } => cmd_suite(*suite, *seed, *count, *output),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(msg) => fail(msg),
    }
}
