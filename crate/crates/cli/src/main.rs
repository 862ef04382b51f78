//! `sw-forge`: Steiner–Wiener index computations from the command line.

use std::fs::File;
use std::io::{self, BufRead, BufReader, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Number, Value};
use sw_forge::arith::ceil_root;
use sw_forge::binomial_rep::{asymptotic_probe, MAX_DISTINCT_VARIABLES};
use sw_forge::{
    count_local, count_representations, invert, represent, scan, steiner_distance, steiner_wiener,
    steiner_wiener_fast, BoundRule, CountSpec, Corpus, Error, Graph, InverseCertificate, LocalCountSpec,
    NestedStarSpec, TerminalSet,
};

#[derive(Parser)]
#[command(name = "sw-forge", version, about = "Steiner–Wiener index toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// SW_k of a graph (one result per graph).
    Compute {
        #[command(flatten)]
        source: GraphSource,
        #[arg(long)]
        k: usize,
        /// Use closed forms when the graph is a nested star.
        #[arg(long)]
        fast: bool,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Steiner distance of a terminal set.
    Steiner {
        #[command(flatten)]
        source: GraphSource,
        /// Comma-separated terminal vertices.
        #[arg(long, value_delimiter = ',', required = true)]
        terminals: Vec<usize>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Build a nested star and report its predicted and recomputed SW_k.
    Construct {
        #[arg(long)]
        n: usize,
        /// Comma-separated ascending hub list (may be empty).
        #[arg(long, default_value = "")]
        hubs: String,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Write m as a sum of distinct binomials C(x, d) with x < max-x.
    Represent {
        #[arg(long)]
        m: u128,
        #[arg(long)]
        d: u32,
        /// Exclusive bound on terms [default: 2 ceil(m^(1/d)) + d].
        #[arg(long)]
        max_x: Option<u64>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Find a nested star with a prescribed SW_k.
    Invert {
        #[arg(long)]
        k: usize,
        #[arg(long, required_unless_present = "batch")]
        target: Option<u128>,
        #[arg(long, default_value_t = 40)]
        n_max: usize,
        /// File of targets, one per line, each `target` or `k target`.
        #[arg(long, conflicts_with = "target")]
        batch: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Exhaustive scan of attainable SW_k values up to a limit.
    Scan {
        #[arg(long, required_unless_present = "batch")]
        k: Option<usize>,
        #[arg(long, required_unless_present = "batch")]
        limit: Option<u128>,
        /// graph6 corpus for vertex counts beyond the built-in enumeration.
        #[arg(long)]
        graph6: Option<PathBuf>,
        /// Write `value,graph6` witness pairs here.
        #[arg(long)]
        csv: Option<PathBuf>,
        /// File of requests, one `k limit` pair per line.
        #[arg(long, conflicts_with_all = ["k", "limit", "csv"])]
        batch: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Count s-tuples with sum_i lambda_i C(x_i, d) = m and x_i <= B.
    Count {
        #[arg(long)]
        d: u32,
        #[arg(long, required_unless_present = "probe")]
        m: Option<u64>,
        #[command(flatten)]
        coeffs: Coefficients,
        /// Variable bound: an integer, `default` (ceil(m^(1/d)/100)) or `floor` (floor(m^(1/d))).
        #[arg(long = "B", value_parser = parse_bound, default_value = "default")]
        bound: BoundRule,
        /// Only count tuples with pairwise distinct coordinates.
        #[arg(long)]
        distinct: bool,
        /// Let variables range over 0..=B.
        #[arg(long)]
        include_zero: bool,
        /// Comma-separated m values; prints N, N* and derived columns for each.
        #[arg(long, value_delimiter = ',', conflicts_with_all = ["m", "distinct", "include_zero"])]
        probe: Option<Vec<u64>>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Count residue solutions modulo p^k-exp (every residue m when --m is absent).
    Local {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        k_exp: u32,
        #[arg(long)]
        d: u32,
        #[arg(long)]
        m: Option<u64>,
        #[command(flatten)]
        coeffs: Coefficients,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct GraphSource {
    /// Edge-list file (`-` for stdin).
    #[arg(long)]
    input: Option<PathBuf>,
    /// graph6 file, one graph per line (`-` for stdin).
    #[arg(long)]
    graph6: Option<PathBuf>,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Coefficients {
    /// Number of variables, all coefficients 1.
    #[arg(long)]
    s: Option<usize>,
    /// Comma-separated coefficients.
    #[arg(long, value_delimiter = ',')]
    lambdas: Option<Vec<u64>>,
}

impl Coefficients {
    fn lambdas(&self) -> Vec<u64> {
        match (&self.lambdas, self.s) {
            (Some(l), _) => l.clone(),
            (None, Some(s)) => vec![1; s],
            (None, None) => unreachable!("clap enforces the group"),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
    Dot,
}

fn parse_bound(s: &str) -> Result<BoundRule, String> {
    match s {
        "default" => Ok(BoundRule::Default),
        "floor" => Ok(BoundRule::FloorRoot),
        _ => s
            .parse::<u64>()
            .ok()
            .filter(|&b| b >= 1)
            .map(BoundRule::Explicit)
            .ok_or_else(|| format!("expected a positive integer, `default` or `floor`, got `{s}`")),
    }
}

fn open(path: &Path) -> io::Result<Box<dyn BufRead>> {
    if path == Path::new("-") {
        Ok(Box::new(BufReader::new(io::stdin())))
    } else {
        Ok(Box::new(BufReader::new(File::open(path)?)))
    }
}

fn load_graphs(source: &GraphSource) -> Result<Vec<Graph>, Error> {
    if let Some(path) = &source.input {
        let mut text = String::new();
        open(path)?.read_to_string(&mut text)?;
        return Ok(vec![Graph::parse_edge_list(&text)?]);
    }
    let path = source.graph6.as_ref().expect("clap enforces the group");
    let mut graphs = Vec::new();
    for line in open(path)?.lines() {
        let line = line?;
        let line = line.trim().trim_start_matches(">>graph6<<");
        if !line.is_empty() {
            graphs.push(Graph::parse_graph6(line)?);
        }
    }
    Ok(graphs)
}

/// Arbitrary-size integer as a JSON number.
fn big(v: impl ToString) -> Value {
    Value::Number(v.to_string().parse::<Number>().expect("decimal integer"))
}

fn emit(out: &mut impl Write, v: &Value) -> io::Result<()> {
    writeln!(out, "{}", serde_json::to_string(v).expect("serializable"))
}

fn check_format(format: Format, allowed: &[Format]) -> Result<(), Error> {
    if allowed.contains(&format) {
        Ok(())
    } else {
        Err(Error::BadSpec("--format dot only applies to graph outputs".into()))
    }
}

fn certificate_json(c: &InverseCertificate) -> Value {
    let g = c.graph();
    json!({
        "status": "certified",
        "k": c.k,
        "target": c.target,
        "n": c.n,
        "hubs": c.spec.hubs(),
        "predicted": c.predicted.value,
        "sw": c.verified.value,
        "verified": c.verified.value == c.target,
        "graph6": g.to_graph6(),
        "edges": g.edges().map(|(u, v)| [u, v]).collect::<Vec<_>>(),
    })
}

fn unresolved_json(k: usize, target: u128, n_max: usize) -> Value {
    json!({
        "status": "unresolved",
        "k": k,
        "target": target,
        "n_max": n_max,
        "note": "no nested star up to n_max; this does not prove the value unattainable",
    })
}

fn run(cmd: Command, out: &mut impl Write) -> Result<(), Error> {
    match cmd {
        Command::Compute { source, k, fast, format } => {
            check_format(format, &[Format::Json, Format::Text])?;
            let graphs = load_graphs(&source)?;
            let values = graphs
                .par_iter()
                .map(|g| if fast { steiner_wiener_fast(g, k) } else { steiner_wiener(g, k) })
                .collect::<Result<Vec<_>, _>>()?;
            for (g, v) in graphs.iter().zip(values) {
                match format {
                    Format::Text => writeln!(out, "{}", v.value)?,
                    _ => emit(out, &json!({"k": k, "n": g.n(), "sw": v.value}))?,
                }
            }
        }
        Command::Steiner { source, terminals, format } => {
            check_format(format, &[Format::Json, Format::Text])?;
            for g in load_graphs(&source)? {
                let t = TerminalSet::new(&g, terminals.iter().copied())?;
                let dist = steiner_distance(&g, t)?;
                match format {
                    Format::Text => writeln!(out, "{dist}")?,
                    _ => emit(out, &json!({"terminals": t.vertices().collect::<Vec<_>>(), "distance": dist}))?,
                }
            }
        }
        Command::Construct { n, hubs, k, format } => {
            let spec = NestedStarSpec::parse(n, &hubs)?;
            let g = spec.build();
            let predicted = sw_forge::nested_star_closed_form(&spec, k)?.value;
            let verified = steiner_wiener(&g, k)?.value;
            let values = json!({"predicted": predicted, "verified": verified});
            match format {
                Format::Dot => {
                    write!(out, "{}", g.to_dot())?;
                    emit(out, &values)?;
                }
                Format::Text => {
                    write!(out, "{}", g.to_edge_list())?;
                    emit(out, &values)?;
                }
                Format::Json => emit(
                    out,
                    &json!({
                        "n": n,
                        "hubs": spec.hubs(),
                        "k": k,
                        "predicted": predicted,
                        "verified": verified,
                        "graph6": g.to_graph6(),
                        "edges": g.edges().map(|(u, v)| [u, v]).collect::<Vec<_>>(),
                    }),
                )?,
            }
        }
        Command::Represent { m, d, max_x, format } => {
            check_format(format, &[Format::Json, Format::Text])?;
            if d == 0 {
                return Err(Error::BadSpec("d must be at least 1".into()));
            }
            let max_x = max_x.unwrap_or_else(|| (2 * ceil_root(m, d) as u64).saturating_add(u64::from(d)));
            let rep = represent(m, d, max_x);
            match (format, rep) {
                (Format::Text, Some(r)) => {
                    let terms: Vec<String> = r.terms.iter().map(|x| format!("C({x},{d})")).collect();
                    writeln!(out, "{m} = {}", if terms.is_empty() { "0".into() } else { terms.join(" + ") })?;
                }
                (Format::Text, None) => writeln!(out, "not found (max_x = {max_x})")?,
                (_, Some(r)) => emit(out, &json!({"status": "found", "m": m, "d": d, "max_x": max_x, "terms": r.terms}))?,
                (_, None) => emit(out, &json!({"status": "not_found", "m": m, "d": d, "max_x": max_x}))?,
            }
        }
        Command::Invert { k, target, n_max, batch, format } => {
            let requests: Vec<(usize, u128)> = match (batch, target) {
                (Some(path), _) => read_requests(&path, |f| match f {
                    [t] => Some((k, t.parse().ok()?)),
                    [kk, t] => Some((kk.parse().ok()?, t.parse().ok()?)),
                    _ => None,
                })?,
                (None, Some(t)) => vec![(k, t)],
                (None, None) => unreachable!("clap enforces the target"),
            };
            let results = requests
                .par_iter()
                .map(|&(k, t)| invert(k, t, n_max))
                .collect::<Result<Vec<_>, _>>()?;
            for (&(k, t), cert) in requests.iter().zip(&results) {
                match (format, cert) {
                    (Format::Dot, Some(c)) => {
                        write!(out, "{}", c.graph().to_dot())?;
                        emit(out, &json!({"predicted": c.predicted.value, "verified": c.verified.value}))?;
                    }
                    (Format::Text, Some(c)) => {
                        writeln!(out, "SW_{k} = {t}: n = {}, hubs {:?}", c.n, c.spec.hubs())?;
                        write!(out, "{}", c.graph().to_edge_list())?;
                    }
                    (Format::Text, None) => writeln!(out, "SW_{k} = {t}: unresolved up to n = {n_max}")?,
                    (_, Some(c)) => emit(out, &certificate_json(c))?,
                    (_, None) => emit(out, &unresolved_json(k, t, n_max))?,
                }
            }
        }
        Command::Scan { k, limit, graph6, csv, batch, format } => {
            check_format(format, &[Format::Json, Format::Text])?;
            let corpus = match &graph6 {
                Some(path) => Some(Corpus::from_reader(open(path)?)?),
                None => None,
            };
            let requests = match batch {
                Some(path) => read_requests(&path, |f| match f {
                    [k, v] => Some((k.parse().ok()?, v.parse().ok()?)),
                    _ => None,
                })?,
                None => vec![(k.expect("clap"), limit.expect("clap"))],
            };
            for (k, limit) in requests {
                let report = scan(k, limit, corpus.as_ref())?;
                if let Some(path) = &csv {
                    std::fs::write(path, report.witness_csv())?;
                }
                if format == Format::Text {
                    let status = if report.is_complete() { "complete" } else { "partial" };
                    let exceptions: Vec<String> = report.exceptions.iter().map(u128::to_string).collect();
                    writeln!(out, "k = {k}, V = {limit}: {status}, coverage n <= {}", report.n_max_covered)?;
                    writeln!(out, "exceptions ({}): {}", exceptions.len(), exceptions.join(" "))?;
                    if !report.missing.is_empty() {
                        writeln!(out, "missing vertex counts: {:?}", report.missing)?;
                    }
                    continue;
                }
                let mut v = serde_json::to_value(&report).expect("serializable");
                let obj = v.as_object_mut().expect("object");
                obj.insert("status".into(), json!(if report.is_complete() { "complete" } else { "partial" }));
                obj.insert("exception_count".into(), json!(report.exceptions.len()));
                emit(out, &v)?;
            }
        }
        Command::Count { d, m, coeffs, bound, distinct, include_zero, probe, format } => {
            check_format(format, &[Format::Json, Format::Text])?;
            let lambdas = coeffs.lambdas();
            if let Some(ms) = probe {
                for row in asymptotic_probe(d, &lambdas, &ms, bound)? {
                    match format {
                        Format::Text => writeln!(
                            out,
                            "m = {}, B = {}: N = {}, N* = {}, (N - N*)/N = {:.6}, N m^(1-s/d) = {:.6}",
                            row.m, row.bound, row.n, row.n_star, row.collision_ratio, row.scaled
                        )?,
                        _ => emit(out, &serde_json::to_value(&row).expect("serializable"))?,
                    }
                }
                return Ok(());
            }
            let spec = CountSpec { d, lambdas, m: m.expect("clap"), bound, distinct, include_zero };
            let b = spec.effective_bound();
            let mut obj = json!({"d": d, "m": spec.m, "lambdas": spec.lambdas, "B": b});
            if !distinct {
                obj["N"] = json!(count_representations(&spec)?);
            }
            if distinct || spec.s() <= MAX_DISTINCT_VARIABLES {
                obj["Nstar"] = json!(count_representations(&CountSpec { distinct: true, ..spec })?);
            }
            match format {
                Format::Text => {
                    for (key, label) in [("N", "N"), ("Nstar", "N*")] {
                        if let Some(v) = obj.get(key) {
                            writeln!(out, "{label} = {v}")?;
                        }
                    }
                    writeln!(out, "B = {b}")?;
                }
                _ => emit(out, &obj)?,
            }
        }
        Command::Local { p, k_exp, d, m, coeffs, format } => {
            check_format(format, &[Format::Json, Format::Text])?;
            let mut spec = LocalCountSpec { p, k_exp, d, lambdas: coeffs.lambdas(), m: m.unwrap_or(0) };
            let residues: Vec<u64> = match m {
                Some(m) => vec![m],
                None => (0..spec.target_modulus().ok_or(Error::TooLargeModulus(p))?).collect(),
            };
            for r in residues {
                spec.m = r;
                let count = count_local(&spec)?;
                match format {
                    Format::Text => writeln!(out, "M_{r}({p}^{k_exp}) = {count}")?,
                    _ => emit(
                        out,
                        &json!({
                            "p": p, "k_exp": k_exp, "t": spec.t(), "d": d, "m": r,
                            "lambdas": spec.lambdas, "M": big(&count),
                        }),
                    )?,
                }
            }
        }
    }
    Ok(())
}

/// Non-empty, non-comment lines split on whitespace or commas.
fn read_requests<T>(path: &Path, parse: impl Fn(&[&str]) -> Option<T>) -> Result<Vec<T>, Error> {
    let mut out = Vec::new();
    for (i, line) in open(path)?.lines().enumerate() {
        let line = line?;
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split(|c: char| c.is_whitespace() || c == ',').filter(|f| !f.is_empty()).collect();
        let req = parse(&fields).ok_or_else(|| Error::BadSpec(format!("batch line {}: cannot parse `{line}`", i + 1)))?;
        out.push(req);
    }
    Ok(out)
}

fn configure_threads() -> Result<(), Error> {
    let Ok(v) = std::env::var("SW_FORGE_THREADS") else {
        return Ok(());
    };
    let n: usize = v
        .parse()
        .ok()
        .filter(|&n| n >= 1)
        .ok_or_else(|| Error::BadSpec(format!("SW_FORGE_THREADS must be a positive integer, got `{v}`")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| Error::BadSpec(e.to_string()))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let result = configure_threads().and_then(|()| run(cli.command, &mut out));
    let flushed = out.flush();
    match result {
        Ok(()) => match flushed {
            Ok(()) => ExitCode::SUCCESS,
            Err(e) => {
                eprintln!("error: {e}");
                ExitCode::from(1)
            }
        },
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
