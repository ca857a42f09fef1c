use std::fs;
use std::ops::ControlFlow;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Parser, Subcommand};
use ocm_cli::bench::bench_directory;
use ocm_cli::format::{format_cycle_line, parse_edge_list, serialize_edge_list};
use ocm_cli::harness::{analyze, AnalyzeOptions, Report, ReportMeta};
use ocm_cli::report::{emit_report, ReportFormat};
use ocm_cli::weightgen::{assign_weights, WeightDistribution, WeightSpec};
use ocm_core::{decompose_sccs, enumerate_simple_cycles, Cycle};

/// Cycle mean analysis for weighted directed graphs.
#[derive(Parser)]
#[command(name = "ocm", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Full pipeline: cycle means, critical sets, bounds, estimates, and
    /// optionally enumerated ground truth with error metrics.
    Analyze {
        graph: PathBuf,
        /// Enumerate all simple cycles to compare bounds against true values.
        #[arg(long)]
        ground_truth: bool,
        /// Per-component enumeration cap.
        #[arg(long, default_value_t = 1_000_000)]
        max_cycles: u64,
        /// Wall-clock budget for enumeration, in seconds.
        #[arg(long)]
        timeout: Option<f64>,
        #[arg(long, value_enum, default_value = "md")]
        format: ReportFormat,
        /// Include per-stage timings (reports stop being byte-reproducible).
        #[arg(long)]
        timings: bool,
        /// Write the report here instead of stdout.
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Bounds and estimates only; no enumeration anywhere.
    Bounds {
        graph: PathBuf,
        #[arg(long, value_enum, default_value = "md")]
        format: ReportFormat,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Count (and optionally dump) all simple cycles.
    Enumerate {
        graph: PathBuf,
        #[arg(long, default_value_t = 1_000_000)]
        max_cycles: u64,
        /// Write one `c <w> <len> <v1> ... <v1>` line per cycle.
        #[arg(long)]
        dump: Option<PathBuf>,
    },
    /// Assign seeded random weights to a topology file.
    GenWeights {
        #[arg(long, value_enum)]
        dist: WeightDistribution,
        #[arg(long, default_value_t = 1)]
        min: i64,
        #[arg(long, default_value_t = 3000)]
        max: i64,
        #[arg(long)]
        seed: u64,
        input: PathBuf,
        output: PathBuf,
    },
    /// Weight every topology in a directory and run the full pipeline.
    Bench {
        dir: PathBuf,
        #[arg(long, value_enum)]
        dist: WeightDistribution,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        min: i64,
        #[arg(long, default_value_t = 3000)]
        max: i64,
        #[arg(long, default_value_t = 1_000_000)]
        max_cycles: u64,
        /// Wall-clock budget per graph, in seconds.
        #[arg(long)]
        timeout: Option<f64>,
        #[arg(long, value_enum, default_value = "csv")]
        format: ReportFormat,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::FAILURE
        }
    }
}

fn run(cli: Cli) -> Result<(), Box<dyn std::error::Error>> {
    match cli.command {
        Command::Analyze {
            graph,
            ground_truth,
            max_cycles,
            timeout,
            format,
            timings,
            out,
        } => {
            let opts = AnalyzeOptions {
                ground_truth,
                max_cycles,
                timeout: timeout.map(Duration::from_secs_f64),
                include_timings: timings,
            };
            let report = analyze_file(&graph, &opts)?;
            write_out(out, emit_report(&report, format))
        }
        Command::Bounds { graph, format, out } => {
            let report = analyze_file(&graph, &AnalyzeOptions::default())?;
            write_out(out, emit_report(&report, format))
        }
        Command::Enumerate {
            graph,
            max_cycles,
            dump,
        } => {
            let g = parse_edge_list(&fs::read_to_string(&graph)?)?;
            let decomposition = decompose_sccs(&g);
            let mut per_component = vec![0u64; decomposition.components.len()];
            let mut dump_lines: Vec<String> = Vec::new();
            let want_dump = dump.is_some();
            let outcome = enumerate_simple_cycles(&g, max_cycles, |visit| {
                let first_node = g.arc(visit.arc_ids[0]).tail;
                per_component[decomposition.component_of[first_node as usize] as usize] += 1;
                if want_dump {
                    let cycle = Cycle::new(&g, visit.arc_ids.to_vec()).expect("valid cycle");
                    dump_lines.push(format_cycle_line(&g, &cycle));
                }
                ControlFlow::Continue(())
            });
            for (idx, component) in decomposition.non_trivial() {
                println!(
                    "component {}: n={} cycles={}",
                    idx + 1,
                    component.nodes.len(),
                    per_component[idx]
                );
            }
            println!(
                "total: {} cycles, {}",
                outcome.count,
                if outcome.complete {
                    "complete"
                } else {
                    "cap reached"
                }
            );
            if let Some(path) = dump {
                fs::write(path, dump_lines.join("\n") + "\n")?;
            }
            Ok(())
        }
        Command::GenWeights {
            dist,
            min,
            max,
            seed,
            input,
            output,
        } => {
            let topology = parse_edge_list(&fs::read_to_string(&input)?)?;
            let spec = WeightSpec {
                distribution: dist,
                w_lo: min,
                w_hi: max,
                seed,
            };
            let weighted = assign_weights(&topology, &spec)?;
            fs::write(output, serialize_edge_list(&weighted))?;
            Ok(())
        }
        Command::Bench {
            dir,
            dist,
            seed,
            min,
            max,
            max_cycles,
            timeout,
            format,
            out,
        } => {
            let opts = AnalyzeOptions {
                ground_truth: true,
                max_cycles,
                timeout: timeout.map(Duration::from_secs_f64),
                include_timings: false,
            };
            let report = bench_directory(&dir, dist, min, max, seed, &opts)?;
            write_out(out, emit_report(&report, format))
        }
    }
}

fn analyze_file(path: &PathBuf, opts: &AnalyzeOptions) -> Result<Report, Box<dyn std::error::Error>> {
    let text = fs::read_to_string(path)?;
    let g = parse_edge_list(&text)?;
    let name = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "graph".to_string());
    Ok(Report {
        meta: ReportMeta {
            options: opts.clone(),
            weightgen: None,
        },
        graphs: vec![analyze(&g, &name, opts)],
    })
}

fn write_out(out: Option<PathBuf>, text: String) -> Result<(), Box<dyn std::error::Error>> {
    match out {
        Some(path) => fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}
