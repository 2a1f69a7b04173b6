mod render;

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num::bigint::BigInt;
use serde_json::json;

use extremal_animals::degseq::degree_sequence;
use extremal_animals::enumerate::{
    enumerate_animals, extremal_search, read_reference_counts, EnumOpts, SearchOpts,
};
use extremal_animals::layers::{e2_ratio_conjectured_limit, growth_ratio_limit, LayerTable};
use extremal_animals::spiral::{e2_ratio_estimate, SpiralCtx};
use extremal_animals::verify::run_all;
use extremal_animals::{
    build_layered, build_seq, build_spiral, validate_pair, SchlafliPair, SeqKind,
    DEFAULT_ORACLE_CAP,
};

use render::{render_svg, Highlight, Projection, RenderConfig};

/// Animals on regular tessellations {p,q}: parameter tables, degree words,
/// minimum perimeters, verification suites, enumeration and SVG rendering.
#[derive(Parser)]
#[command(name = "extremal-animals", version, about)]
struct Cli {
    /// Emit JSON on stdout and machine-readable error JSON on stderr.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct PairArgs {
    /// Sides per tile (p >= 3).
    p: u32,
    /// Tiles per vertex (q >= 3); (p-2)(q-2) >= 4.
    q: u32,
}

impl PairArgs {
    fn validated(&self) -> extremal_animals::Result<SchlafliPair> {
        validate_pair(self.p, self.q)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Graph parameters of layered animals or the n-tile spiral.
    Params {
        #[command(flatten)]
        pair: PairArgs,
        /// Print layers 1..=K.
        #[arg(long, value_name = "K")]
        layers: Option<u32>,
        /// Print the spiral at exactly this many tiles.
        #[arg(long, value_name = "N", conflicts_with = "layers")]
        tiles: Option<BigInt>,
    },
    /// Perimeter degree word of the k-layered animal.
    Degseq {
        #[command(flatten)]
        pair: PairArgs,
        k: u32,
        /// Print one degree per element instead of run-length form.
        #[arg(long, conflicts_with = "runs")]
        raw: bool,
        /// Print compressed runs (default).
        #[arg(long)]
        runs: bool,
    },
    /// Minimum perimeter P(n) for n = 1..=N.
    Perimeter {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long, value_name = "N")]
        upto: u64,
    },
    /// Run the formula/oracle verification suites.
    Verify {
        #[command(flatten)]
        pair: PairArgs,
        /// Spiral sizes to check against the oracle.
        #[arg(long, default_value_t = 300)]
        upto: usize,
        /// Tile cap for explicitly built animals.
        #[arg(long, default_value_t = DEFAULT_ORACLE_CAP)]
        oracle_cap: usize,
    },
    /// Enumerate isometry classes with n tiles (and count extremal ones).
    Enumerate {
        #[command(flatten)]
        pair: PairArgs,
        n: usize,
        /// Only search and report minimum-perimeter classes.
        #[arg(long)]
        extremal_only: bool,
        /// CSV of reference counts (p,q,n,count) to cross-check.
        #[arg(long, value_name = "FILE")]
        refs: Option<std::path::PathBuf>,
        /// Raise the exhaustive-size cap.
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Render an animal to SVG.
    Render {
        #[command(flatten)]
        pair: PairArgs,
        /// Complete k-layered animal.
        #[arg(long, value_name = "K")]
        layered: Option<u32>,
        /// Spiral with N tiles.
        #[arg(long, value_name = "N", conflicts_with = "layered")]
        spiral: Option<usize>,
        /// Seeded sequence member: B, C or D plus k, e.g. --seq B 3.
        #[arg(long, num_args = 2, value_names = ["KIND", "K"], conflicts_with_all = ["layered", "spiral"])]
        seq: Option<Vec<String>>,
        #[arg(long, value_name = "FILE")]
        out: std::path::PathBuf,
        /// plane or poincare-disk; must match the pair's geometry.
        #[arg(long)]
        projection: Option<ProjectionArg>,
        #[arg(long, default_value_t = 1.0)]
        stroke: f64,
        #[arg(long, default_value_t = 400.0)]
        scale: f64,
        #[arg(long)]
        highlight: Option<HighlightArg>,
        #[arg(long, default_value_t = DEFAULT_ORACLE_CAP)]
        oracle_cap: usize,
    },
    /// Interior-edge density e2(n)/n against the conjectured limit.
    Ratio {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long, value_name = "N")]
        upto: BigInt,
        /// Number of sampled sizes.
        #[arg(long, default_value_t = 20)]
        samples: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ProjectionArg {
    Plane,
    PoincareDisk,
}

#[derive(Clone, Copy, ValueEnum)]
enum HighlightArg {
    Order,
    Saturated,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(err) => {
            if cli.json {
                let payload = json!({ "error": err.to_string() });
                eprintln!("{payload}");
            } else {
                eprintln!("error: {err}");
            }
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> extremal_animals::Result<ExitCode> {
    match &cli.command {
        Command::Params { pair, layers, tiles } => {
            let pair = pair.validated()?;
            match (layers, tiles) {
                (Some(k_max), None) => {
                    let mut table = LayerTable::new(pair);
                    let mut rows = Vec::new();
                    for k in 1..=*k_max {
                        let l = table.params(k);
                        rows.push(json!({
                            "k": k, "n": l.n.to_string(), "v": l.v.to_string(),
                            "e": l.e.to_string(), "e1": l.e1.to_string(),
                            "e2": l.e2.to_string(), "v_int": l.v_int.to_string(),
                        }));
                    }
                    if cli.json {
                        println!("{}", json!({ "schema": "layer-params/1", "rows": rows }));
                    } else {
                        println!("k,n,v,e,e1,e2,v_int");
                        for r in rows {
                            println!(
                                "{},{},{},{},{},{},{}",
                                r["k"],
                                r["n"].as_str().unwrap(),
                                r["v"].as_str().unwrap(),
                                r["e"].as_str().unwrap(),
                                r["e1"].as_str().unwrap(),
                                r["e2"].as_str().unwrap(),
                                r["v_int"].as_str().unwrap()
                            );
                        }
                    }
                }
                (None, Some(n)) => {
                    let mut ctx = SpiralCtx::new(pair);
                    let s = ctx.spiral_params(n)?;
                    let row = json!({
                        "n": s.n.to_string(), "k": s.k, "m": s.m.to_string(),
                        "v": s.v.to_string(), "e": s.e.to_string(),
                        "e1": s.e1.to_string(), "e2": s.e2.to_string(),
                        "v_int": s.v_int.to_string(),
                    });
                    if cli.json {
                        println!("{}", json!({ "schema": "spiral-params/1", "row": row }));
                    } else {
                        println!("n,k,m,v,e,e1,e2,v_int");
                        println!(
                            "{},{},{},{},{},{},{},{}",
                            row["n"].as_str().unwrap(),
                            row["k"],
                            row["m"].as_str().unwrap(),
                            row["v"].as_str().unwrap(),
                            row["e"].as_str().unwrap(),
                            row["e1"].as_str().unwrap(),
                            row["e2"].as_str().unwrap(),
                            row["v_int"].as_str().unwrap()
                        );
                    }
                }
                _ => {
                    return Err(extremal_animals::Error::OutOfValidRange(
                        "pass exactly one of --layers K or --tiles N".into(),
                    ))
                }
            }
        }
        Command::Degseq { pair, k, raw, runs: _ } => {
            let pair = pair.validated()?;
            let seq = degree_sequence(pair, *k);
            if cli.json {
                let runs: Vec<_> = seq.runs().iter().map(|(d, c)| json!([d, c])).collect();
                println!(
                    "{}",
                    json!({
                        "schema": "degseq/1", "k": k, "len": seq.len(),
                        "runs": runs,
                    })
                );
            } else if *raw {
                let elements: Vec<String> =
                    seq.elements().iter().map(|d| d.to_string()).collect();
                println!("{}", elements.join(","));
            } else {
                for (d, c) in seq.runs() {
                    println!("{d}x{c}");
                }
            }
        }
        Command::Perimeter { pair, upto } => {
            let pair = pair.validated()?;
            let mut ctx = SpiralCtx::new(pair);
            if cli.json {
                let mut rows = Vec::new();
                for n in 1..=*upto {
                    let p = ctx.min_perimeter(&BigInt::from(n))?;
                    rows.push(json!([n, p.to_string()]));
                }
                println!("{}", json!({ "schema": "perimeter/1", "rows": rows }));
            } else {
                println!("n,P");
                for n in 1..=*upto {
                    println!("{n},{}", ctx.min_perimeter(&BigInt::from(n))?);
                }
            }
        }
        Command::Verify { pair, upto, oracle_cap } => {
            let pair = pair.validated()?;
            let results = run_all(pair, *upto, *oracle_cap)?;
            let all_passed = results.iter().all(|r| r.passed);
            if cli.json {
                let rows: Vec<_> = results
                    .iter()
                    .map(|r| json!({ "name": r.name, "passed": r.passed, "detail": r.detail }))
                    .collect();
                println!(
                    "{}",
                    json!({ "schema": "verify/1", "passed": all_passed, "checks": rows })
                );
            } else {
                for r in &results {
                    let tag = if r.passed { "[ok]  " } else { "[FAIL]" };
                    println!("{tag} {} — {}", r.name, r.detail);
                }
            }
            if !all_passed {
                return Ok(ExitCode::FAILURE);
            }
        }
        Command::Enumerate { pair, n, extremal_only, refs, cap } => {
            let pair = pair.validated()?;
            let mut failed = false;
            if *extremal_only {
                let report = extremal_search(
                    pair,
                    *n,
                    SearchOpts { cap: *cap, ..SearchOpts::default() },
                )?;
                if cli.json {
                    println!(
                        "{}",
                        json!({
                            "schema": "extremal/1", "n": n,
                            "min_e1": report.min_e1_found,
                            "count": report.count_extremal,
                            "matches_formula": report.matches_formula,
                            "witnesses": report.witnesses.iter().map(|w| w.hex()).collect::<Vec<_>>(),
                        })
                    );
                } else {
                    println!(
                        "n={n}: min e1 = {} ({}), extremal classes: {}",
                        report.min_e1_found,
                        if report.matches_formula { "= P(n)" } else { "!= P(n)" },
                        report.count_extremal
                    );
                }
                failed = !report.matches_formula;
            } else {
                let enumeration =
                    enumerate_animals(pair, *n, EnumOpts { cap: *cap, ..EnumOpts::default() })?;
                let with_holes = enumeration.counts(true);
                let without = enumeration.counts(false);
                if cli.json {
                    println!(
                        "{}",
                        json!({
                            "schema": "enumerate/1",
                            "free_classes": with_holes,
                            "hole_free_classes": without,
                        })
                    );
                } else {
                    println!("n,free_classes,hole_free_classes");
                    for i in 0..with_holes.len() {
                        println!("{},{},{}", i + 1, with_holes[i], without[i]);
                    }
                }
                if let Some(path) = refs {
                    let file = std::fs::File::open(path).map_err(|e| {
                        extremal_animals::Error::MalformedReference(format!(
                            "{}: {e}",
                            path.display()
                        ))
                    })?;
                    let mut checked = 0;
                    for row in read_reference_counts(file)? {
                        if row.p != pair.p() || row.q != pair.q() {
                            continue;
                        }
                        let idx = row.n as usize;
                        if idx == 0 || idx > with_holes.len() {
                            continue;
                        }
                        checked += 1;
                        if with_holes[idx - 1] != row.count {
                            eprintln!(
                                "reference mismatch at n={}: enumerated {}, reference {}",
                                row.n,
                                with_holes[idx - 1],
                                row.count
                            );
                            failed = true;
                        }
                    }
                    println!("# cross-checked {checked} reference rows");
                }
            }
            if failed {
                return Ok(ExitCode::FAILURE);
            }
        }
        Command::Render {
            pair,
            layered,
            spiral,
            seq,
            out,
            projection,
            stroke,
            scale,
            highlight,
            oracle_cap,
        } => {
            let pair = pair.validated()?;
            let map = match (layered, spiral, seq) {
                (Some(k), None, None) => build_layered(pair, *k, *oracle_cap)?,
                (None, Some(n), None) => build_spiral(pair, *n, *oracle_cap)?,
                (None, None, Some(args)) => {
                    let kind: SeqKind = args[0].parse()?;
                    let k: u32 = args[1].parse().map_err(|_| {
                        extremal_animals::Error::OutOfValidRange(format!(
                            "bad layer count {:?}",
                            args[1]
                        ))
                    })?;
                    build_seq(pair, kind, k, *oracle_cap)?
                }
                _ => {
                    return Err(extremal_animals::Error::OutOfValidRange(
                        "pass exactly one of --layered K, --spiral N, --seq KIND K".into(),
                    ))
                }
            };
            let mut config = RenderConfig::new(pair);
            if let Some(p) = projection {
                let requested = match p {
                    ProjectionArg::Plane => Projection::Plane,
                    ProjectionArg::PoincareDisk => Projection::PoincareDisk,
                };
                if requested != config.projection {
                    return Err(extremal_animals::Error::OutOfValidRange(format!(
                        "projection does not match the geometry of {pair}"
                    )));
                }
            }
            config.stroke_width = *stroke;
            config.scale = *scale;
            config.highlight = match highlight {
                None => Highlight::None,
                Some(HighlightArg::Order) => Highlight::GrowthOrder,
                Some(HighlightArg::Saturated) => Highlight::SaturatedVertices,
            };
            let svg = render_svg(&map, &config);
            let mut file = std::fs::File::create(out).map_err(|e| {
                extremal_animals::Error::OutOfValidRange(format!("{}: {e}", out.display()))
            })?;
            file.write_all(svg.as_bytes()).map_err(|e| {
                extremal_animals::Error::OutOfValidRange(format!("{}: {e}", out.display()))
            })?;
            if !cli.json {
                println!("wrote {} ({} tiles)", out.display(), map.tile_count());
            }
        }
        Command::Ratio { pair, upto, samples } => {
            let pair = pair.validated()?;
            let seq = e2_ratio_estimate(pair, upto, *samples)?;
            let limit = e2_ratio_conjectured_limit(pair)?;
            let alpha = growth_ratio_limit(pair)?;
            if cli.json {
                let rows: Vec<_> = seq
                    .iter()
                    .map(|(n, r)| json!([n.to_string(), ratio_decimal(r)]))
                    .collect();
                println!(
                    "{}",
                    json!({
                        "schema": "ratio/1", "rows": rows,
                        "conjectured_limit": limit.to_f64(),
                        "alpha": alpha.to_f64(),
                    })
                );
            } else {
                println!("n,e2_over_n");
                for (n, r) in &seq {
                    println!("{n},{}", ratio_decimal(r));
                }
                println!("# growth constant alpha: {:.10} ({alpha})", alpha.to_f64());
                println!("# conjectured limit: {:.10}", limit.to_f64());
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn ratio_decimal(r: &num::rational::BigRational) -> String {
    // 12 decimal digits, exact rational arithmetic, truncated.
    let scaled = r * num::rational::BigRational::from_integer(BigInt::from(10u64.pow(12)));
    let int = scaled.to_integer();
    let whole = &int / BigInt::from(10u64.pow(12));
    let frac = (&int % BigInt::from(10u64.pow(12))).to_string();
    format!("{whole}.{frac:0>12}")
}
