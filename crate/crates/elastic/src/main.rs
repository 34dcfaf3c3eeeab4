use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use elastic::api::{self, ApiError, ScurveRequest, SplineRequest, DEFAULT_SAMPLES};
use elastic::json;
use elastic::render::{parse_curve, render_svg, RenderStyle};
use elastic::server::{self, DEFAULT_PORT};
use elastic::table::{gamma_table, write_csv};
use elastic_core::spline::fit;

/// Minimal bending energy s-curves and elastic splines.
#[derive(Debug, Parser)]
#[command(name = "elastic", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Input {
    /// JSON input file, or `-` for standard input.
    #[arg(long, short, default_value = "-")]
    input: String,
}

impl Input {
    fn read(&self) -> Result<Vec<u8>, ApiError> {
        let mut buf = Vec::new();
        let res = if self.input == "-" {
            io::stdin().read_to_end(&mut buf).map(|_| ())
        } else {
            fs::read(&self.input).map(|b| buf = b)
        };
        res.map_err(|e| ApiError::bad_request(format!("cannot read {}: {e}", self.input)))?;
        Ok(buf)
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Optimal s-curve between the tangents `u` and `v`.
    Scurve {
        #[command(flatten)]
        input: Input,
        /// Include a sampled polyline with this many points.
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long)]
        pretty: bool,
    },
    /// Fit an elastic spline through a list of points.
    Spline {
        #[command(flatten)]
        input: Input,
        /// Seed for the perturbed restarts; overrides `opts.seed`.
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        tol: Option<f64>,
        #[arg(long)]
        max_iters: Option<usize>,
        #[arg(long)]
        restarts: Option<usize>,
        /// Print the energy after every sweep to standard error.
        #[arg(long, short)]
        verbose: bool,
        #[arg(long)]
        pretty: bool,
    },
    /// CSV of `G`, `σ` and `λ` sampled over the admissible `γ` range.
    Table {
        #[arg(long, allow_hyphen_values = true)]
        alpha: f64,
        #[arg(long, allow_hyphen_values = true)]
        beta: f64,
        #[arg(short, long, default_value_t = 64)]
        n: usize,
    },
    /// SVG drawing of a curve, or of the `curve` field of solver or fit output.
    Render {
        #[command(flatten)]
        input: Input,
        /// Write the SVG here instead of standard output.
        #[arg(long, short)]
        output: Option<PathBuf>,
        #[arg(long, default_value_t = 1.5)]
        stroke_width: f64,
        /// Points per elastica segment.
        #[arg(long, default_value_t = DEFAULT_SAMPLES)]
        samples: usize,
        #[arg(long)]
        tangents: bool,
        #[arg(long)]
        inflections: bool,
        #[arg(long, default_value_t = 0.05)]
        padding: f64,
    },
    /// Run the HTTP service on 127.0.0.1.
    Serve {
        #[arg(long, env = "ELASTIC_PORT", default_value_t = DEFAULT_PORT)]
        port: u16,
    },
}

fn emit_json<T: serde::Serialize>(value: &T, pretty: bool) -> Result<(), ApiError> {
    let mut text = if pretty {
        json::to_string_pretty(value)?
    } else {
        String::from_utf8(json::to_vec(value)?).expect("serde_json writes UTF-8")
    };
    text.push('\n');
    io::stdout().write_all(text.as_bytes()).map_err(|e| ApiError::internal(e.to_string()))
}

fn run(cmd: Command) -> Result<(), ApiError> {
    match cmd {
        Command::Scurve { input, samples, pretty } => {
            let req: ScurveRequest = api::parse(&input.read()?)?;
            match samples {
                Some(n) => emit_json(&api::run_scurve(&req, n)?, pretty),
                None => emit_json(&elastic_core::solve(&req.u, &req.v)?, pretty),
            }
        }
        Command::Spline { input, seed, tol, max_iters, restarts, verbose, pretty } => {
            let mut req: SplineRequest = api::parse(&input.read()?)?;
            let o = &mut req.opts;
            o.seed = seed.unwrap_or(o.seed);
            o.tol = tol.unwrap_or(o.tol);
            o.max_iters = max_iters.unwrap_or(o.max_iters);
            o.restarts = restarts.unwrap_or(o.restarts);
            let res = fit(&req.problem, &req.opts)?;
            if verbose {
                for (k, e) in res.trace.iter().enumerate() {
                    eprintln!("sweep {k}: energy {}", json::format_f64(*e).unwrap_or_default());
                }
                eprintln!("converged: {} after {} sweeps", res.converged, res.iterations);
            }
            emit_json(&res, pretty)
        }
        Command::Table { alpha, beta, n } => {
            let rows = gamma_table(alpha, beta, n)?;
            write_csv(&rows, io::stdout().lock()).map_err(|e| ApiError::internal(e.to_string()))
        }
        Command::Render { input, output, stroke_width, samples, tangents, inflections, padding } => {
            let curve = parse_curve(&input.read()?)?;
            let style = RenderStyle {
                stroke_width,
                samples,
                show_tangents: tangents,
                show_inflection: inflections,
                padding,
            };
            let svg = render_svg(&curve, &style)?;
            match output {
                Some(path) => fs::write(&path, svg),
                None => io::stdout().write_all(svg.as_bytes()),
            }
            .map_err(|e| ApiError::internal(e.to_string()))
        }
        Command::Serve { port } => tokio::runtime::Runtime::new()
            .and_then(|rt| rt.block_on(server::serve(port)))
            .map_err(|e| ApiError::internal(e.to_string())),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            if let Some(d) = &e.details {
                if let Ok(s) = json::to_vec(d) {
                    eprintln!("details: {}", String::from_utf8_lossy(&s));
                }
            }
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
