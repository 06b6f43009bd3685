//! `fracsq`: command-line front end for the fractal-square analyzer.

use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use fracsq::census::{expected_rows, run_census, CensusConfig};
use fracsq::classify::recheck_ok;
use fracsq::digitop::{digit_operator, intercept_orbit};
use fracsq::hata::{hata_graph, Connectivity};
use fracsq::lines::{all_profiles, omega1, Slope};
use fracsq::presets::{preset, PRESETS};
use fracsq::render::{expected_foreground, raster_approx, render_hata, render_omega, RasterSpec};
use fracsq::topology::{beta0_search, beta0_sequence, pi1_certificate, Pi1Certificate};
use fracsq::{classify, explain, Budget, DigitSet, Error, Limits, Line};

const EXIT_USAGE: u8 = 2;
const EXIT_BUDGET: u8 = 3;
const EXIT_INVARIANT: u8 = 4;

#[derive(Parser)]
#[command(name = "fracsq", version, about = "Exact analysis of fractal squares K(N, D)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Input {
    /// Order N, used with --digits when the list lacks an `N=` prefix.
    #[arg(long)]
    n: Option<u32>,
    /// Digit list such as "N=3; D=(0,0),(1,1)" or "(0,0),(1,1)" with --n.
    #[arg(long)]
    digits: Option<String>,
    /// Grid rows, top row first, separated by '/' or newlines, e.g. "111/101/111".
    #[arg(long)]
    grid: Option<String>,
    /// Named input; see `fracsq presets`.
    #[arg(long)]
    preset: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Render the n-th approximation as a PNG.
    Approx {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 2)]
        depth: u32,
        /// Pixels per unit; defaults to the smallest multiple of N^n that is at least 243.
        #[arg(long)]
        px: Option<u32>,
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// β₀ of successive approximations and stabilization.
    Components {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 4)]
        depth: u32,
        #[arg(long)]
        json: bool,
    },
    /// Hata graph and connectivity.
    Hata {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 1)]
        depth: u32,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Simple-connectivity certificate.
    Pi1 {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        json: bool,
    },
    /// Intercept profiles for every admissible slope.
    Omega {
        #[command(flatten)]
        input: Input,
        /// Restrict to one slope, written r/s.
        #[arg(long)]
        slope: Option<String>,
        /// SVG diagram of the selected (or first line-bearing) slope.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Cells met by the orbits of rational lines, e.g. "1/2@0" or "v@1/3".
    Digitop {
        #[arg(long)]
        n: u32,
        #[arg(required = true)]
        lines: Vec<String>,
        #[arg(long)]
        json: bool,
    },
    /// Certified lambda-range verdict.
    Classify {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        depth: Option<u32>,
        #[arg(long)]
        probe_depth: Option<u32>,
        /// Print the certificate as text instead of JSON.
        #[arg(long)]
        explain: bool,
        #[arg(long)]
        json: bool,
    },
    /// Classify every digit set with at least two digits for one order.
    Census {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        depth: Option<u32>,
        #[arg(long)]
        probe_depth: Option<u32>,
        #[arg(long)]
        jobs: Option<usize>,
        /// CSV file with one row per digit set.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Required for N = 4.
        #[arg(long)]
        large: bool,
        #[arg(long)]
        json: bool,
    },
    /// List named inputs.
    Presets {
        #[arg(long)]
        json: bool,
    },
}

/// A failure with its exit code and optional partial output.
struct Failure {
    code: u8,
    message: String,
    partial: Option<Value>,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::BudgetExceeded { .. } => EXIT_BUDGET,
            _ => EXIT_USAGE,
        };
        Failure { code, message: e.to_string(), partial: None }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: EXIT_USAGE, message: message.into(), partial: None }
}

type Outcome = std::result::Result<(), Failure>;

fn read_input(input: &Input) -> Result<DigitSet, Failure> {
    let given = [input.digits.is_some(), input.grid.is_some(), input.preset.is_some()];
    if given.iter().filter(|&&g| g).count() != 1 {
        return Err(usage("give exactly one of --digits, --grid, --preset"));
    }
    if let Some(name) = &input.preset {
        return preset(name).ok_or_else(|| usage(format!("unknown preset `{name}`")));
    }
    if let Some(grid) = &input.grid {
        return Ok(grid.parse::<DigitSet>()?);
    }
    let text = input.digits.as_deref().unwrap_or_default();
    let full = match (text.contains("N="), input.n) {
        (true, _) => text.to_string(),
        (false, Some(n)) => format!("N={n}; D={text}"),
        (false, None) => return Err(usage("--digits without `N=` needs --n")),
    };
    Ok(full.parse::<DigitSet>()?)
}

fn print_json(value: &Value) {
    let text = serde_json::to_string_pretty(value).expect("json values serialize");
    let _ = writeln!(std::io::stdout().lock(), "{text}");
}

fn write_file(path: &PathBuf, bytes: &[u8]) -> Outcome {
    std::fs::write(path, bytes).map_err(|e| usage(format!("cannot write {}: {e}", path.display())))
}

fn approx(input: &Input, depth: u32, px: Option<u32>, out: &PathBuf, json: bool, budget: &Budget) -> Outcome {
    let digits = read_input(input)?;
    let side = budget.grid_side(digits.order(), depth)?;
    let px = match px {
        Some(p) => p,
        None => (243u64.div_ceil(side) * side) as u32,
    };
    let raster = raster_approx(&digits, depth, &RasterSpec::new(px), budget)?;
    write_file(out, &raster.to_png())?;
    let foreground = raster.count(0);
    let expected = expected_foreground(&digits, depth, px);
    let report = json!({ "n": depth, "px": px, "foreground": foreground, "expected": expected, "out": out.display().to_string() });
    if json {
        print_json(&report);
    } else {
        println!("wrote {} ({px} px per unit, {foreground} foreground pixels)", out.display());
    }
    if foreground != expected {
        return Err(Failure {
            code: EXIT_INVARIANT,
            message: "pixel count identity failed".into(),
            partial: Some(report),
        });
    }
    Ok(())
}

fn components(input: &Input, depth: u32, json: bool, budget: &Budget) -> Outcome {
    let digits = read_input(input)?;
    let (sequence, stable, budget_error) = if depth >= 3 {
        let s = beta0_search(&digits, depth, budget)?;
        (s.sequence, s.found, s.budget_error)
    } else {
        (beta0_sequence(&digits, depth, budget)?, None, None)
    };
    let report = json!({
        "beta0": sequence,
        "stabilization": stable.as_ref().map(|s| json!({ "n0": s.n0, "beta0": s.beta0 })),
    });
    if let Some(e) = budget_error {
        return Err(Failure { code: EXIT_BUDGET, message: e.to_string(), partial: Some(report) });
    }
    if json {
        print_json(&report);
    } else {
        let seq: Vec<String> = sequence.iter().map(u64::to_string).collect();
        println!("beta0: [{}]", seq.join(", "));
        match stable {
            Some(s) => println!("stabilizes at n0 = {} with beta0 = {}", s.n0, s.beta0),
            None => println!("no stabilization up to level {depth}"),
        }
    }
    Ok(())
}

fn hata(input: &Input, depth: u32, out: Option<&PathBuf>, json: bool, budget: &Budget) -> Outcome {
    let digits = read_input(input)?;
    let graph = hata_graph(&digits, depth, budget)?;
    let first = if depth == 1 { graph.clone() } else { hata_graph(&digits, 1, budget)? };
    let connectivity = if first.is_connected() { Connectivity::Connected } else { Connectivity::Disconnected };
    if let Some(path) = out {
        write_file(path, render_hata(&graph).as_bytes())?;
    }
    if json {
        let mut value = graph.to_json();
        value["connected"] = json!(connectivity == Connectivity::Connected);
        print_json(&value);
    } else {
        print!("{}", render_hata(&graph));
        eprintln!("K is {}", if connectivity == Connectivity::Connected { "connected" } else { "disconnected" });
    }
    Ok(())
}

fn pi1(input: &Input, json: bool, budget: &Budget) -> Outcome {
    let digits = read_input(input)?;
    let label = match pi1_certificate(&digits, budget)? {
        Pi1Certificate::TrivialCertified => "TRIVIAL_CERTIFIED",
        Pi1Certificate::NoCertificate => "NO_CERTIFICATE",
    };
    if json {
        print_json(&json!({ "pi1": label }));
    } else {
        println!("{label}");
    }
    Ok(())
}

fn parse_slope(text: &str) -> Result<Slope, Failure> {
    let (r, s) = text.split_once('/').unwrap_or((text, "1"));
    let r = r.trim().parse::<i64>().map_err(|_| usage(format!("bad slope `{text}`")))?;
    let s = s.trim().parse::<i64>().map_err(|_| usage(format!("bad slope `{text}`")))?;
    Ok(Slope::new(r, s)?)
}

fn omega(input: &Input, slope: Option<&str>, out: Option<&PathBuf>, json: bool) -> Outcome {
    let digits = read_input(input)?;
    let profiles = match slope {
        Some(text) => vec![omega1(&digits, parse_slope(text)?)],
        None => all_profiles(&digits),
    };
    if let Some(path) = out {
        let chosen = profiles.iter().find(|p| p.line_bearing).unwrap_or(&profiles[0]);
        write_file(path, render_omega(chosen).as_bytes())?;
    }
    if json {
        print_json(&json!(profiles.iter().map(|p| p.to_json()).collect::<Vec<_>>()));
    } else {
        for p in &profiles {
            println!(
                "slope {}: m = {}, q = {}, cells {:?}, isolated {:?}, certified {:?}{}",
                p.slope,
                p.m,
                p.q,
                p.cells,
                p.isolated,
                p.certified_isolated,
                if p.line_bearing { ", line-bearing" } else { "" }
            );
        }
    }
    Ok(())
}

fn digitop(order: u32, texts: &[String], json: bool) -> Outcome {
    let lines = texts.iter().map(|t| t.parse::<Line>()).collect::<Result<Vec<_>, _>>()?;
    let digits = digit_operator(&lines, order)?;
    if json {
        let orbits: Vec<Value> = lines.iter().map(|l| intercept_orbit(l, order).to_json()).collect();
        print_json(&json!({ "digit_set": digits.to_json(), "orbits": orbits }));
    } else {
        println!("{}", digits.to_list_string());
        print!("{}", digits.to_grid_string());
    }
    Ok(())
}

fn limits_for(depth: Option<u32>, probe: Option<u32>, base: Limits) -> Limits {
    Limits { beta_depth: depth.unwrap_or(base.beta_depth), probe_depth: probe.unwrap_or(base.probe_depth) }
}

fn classify_cmd(input: &Input, depth: Option<u32>, probe: Option<u32>, text: bool, budget: &Budget) -> Outcome {
    let digits = read_input(input)?;
    let limits = limits_for(depth, probe, Limits::for_order(digits.order(), budget));
    let verdict = classify(&digits, limits, budget)?;
    if text {
        print!("{}", explain(&verdict));
    } else {
        print_json(&verdict.to_json());
    }
    if !recheck_ok(&digits, &verdict, budget)? {
        return Err(Failure { code: EXIT_INVARIANT, message: "certificate failed to re-check".into(), partial: None });
    }
    Ok(())
}

fn census(
    order: u32,
    depth: Option<u32>,
    probe: Option<u32>,
    jobs: Option<usize>,
    out: Option<&PathBuf>,
    large: bool,
    budget: &Budget,
) -> Outcome {
    if order < 2 {
        return Err(Error::OrderTooSmall(order).into());
    }
    if order > 4 || (order == 4 && !large) {
        return Err(usage(format!("census for N = {order} needs --large (N = 4 only)")));
    }
    let base = CensusConfig::default_for(order, budget);
    let config = CensusConfig { limits: limits_for(depth, probe, base.limits), jobs, ..base };
    let total = expected_rows(order) as u64;
    let progress = |done: u64| {
        if done.is_multiple_of(4096) || done == total {
            eprintln!("census: {done}/{total}");
        }
    };
    let result = run_census(config, budget, if order >= 4 { Some(&progress) } else { None })?;
    if let Some(path) = out {
        write_file(path, result.to_csv().as_bytes())?;
    }
    let summary = result.summary();
    print_json(&summary);
    if result.recheck_failures() > 0 {
        return Err(Failure { code: EXIT_INVARIANT, message: "certificate re-check failures".into(), partial: None });
    }
    Ok(())
}

fn presets(json: bool) -> Outcome {
    if json {
        let list: Vec<Value> = PRESETS
            .iter()
            .map(|p| json!({ "name": p.name, "description": p.description, "digit_set": preset(p.name).map(|d| d.to_json()) }))
            .collect();
        print_json(&json!(list));
    } else {
        for p in PRESETS {
            let d = preset(p.name).expect("listed presets exist");
            println!("{:<10} {}  [{}]", p.name, p.description, d.to_list_string());
        }
    }
    Ok(())
}

fn run(cli: Cli) -> Outcome {
    let budget = Budget::from_env()?;
    match &cli.command {
        Command::Approx { input, depth, px, out, json } => approx(input, *depth, *px, out, *json, &budget),
        Command::Components { input, depth, json } => components(input, *depth, *json, &budget),
        Command::Hata { input, depth, out, json } => hata(input, *depth, out.as_ref(), *json, &budget),
        Command::Pi1 { input, json } => pi1(input, *json, &budget),
        Command::Omega { input, slope, out, json } => omega(input, slope.as_deref(), out.as_ref(), *json),
        Command::Digitop { n, lines, json } => digitop(*n, lines, *json),
        Command::Classify { input, depth, probe_depth, explain, json: _ } => {
            classify_cmd(input, *depth, *probe_depth, *explain, &budget)
        }
        Command::Census { n, depth, probe_depth, jobs, out, large, json: _ } => {
            census(*n, *depth, *probe_depth, *jobs, out.as_ref(), *large, &budget)
        }
        Command::Presets { json } => presets(*json),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            if let Some(partial) = &f.partial {
                print_json(&json!({ "partial": partial, "error": f.message }));
            }
            let _ = std::io::stdout().flush();
            eprintln!("fracsq: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
