//! irrwalk: exact analysis of continuous-time quantum walks on graphs.
//!
//! Reports are JSON on stdout (deterministic bytes for fixed inputs and
//! flags); point clouds are CSV or SVG. Exit codes: 0 success, 2 usage or
//! input error, 3 resource-guard refusal.

mod graphio;
mod reports;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use irrwalk_core::geometry::{self, SvgLayer};
use irrwalk_core::spectra::{self, Graph};
use irrwalk_core::walk::{self, MomentConfig, WalkError};

#[derive(Parser)]
#[command(
    name = "irrwalk",
    about = "Exact spectral analysis of continuous-time quantum walks",
    version
)]
struct Cli {
    /// Path to the graph file.
    #[arg(long, global = true)]
    graph: Option<PathBuf>,

    /// Inline graph text (alternative to --graph).
    #[arg(long, global = true, conflicts_with = "graph")]
    inline: Option<String>,

    /// Input format of the graph.
    #[arg(long, global = true, value_enum, default_value_t = GraphFormat::Edgelist)]
    graph_format: GraphFormat,

    /// Write output to a file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Output format for point clouds.
    #[arg(long, global = true, value_enum, default_value_t = CloudFormat::Csv)]
    format: CloudFormat,

    /// Add decimal approximation fields to exact reports.
    #[arg(long, global = true)]
    approx: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFormat {
    Edgelist,
    Graph6,
}

#[derive(Clone, Copy, ValueEnum)]
enum CloudFormat {
    Csv,
    Svg,
}

#[derive(Subcommand)]
enum Command {
    /// Eigenvalues, multiplicities, and the splitting field.
    Spectra,
    /// Exact average mixing matrix.
    Amm,
    /// Strong-cospectrality analysis of a vertex pair.
    Cospectral { a: usize, b: usize },
    /// Decide pretty good state transfer between two vertices.
    Pgst { a: usize, b: usize },
    /// Frequency basis of the whole spectrum, or of one entry's support.
    Basis {
        a: Option<usize>,
        b: Option<usize>,
    },
    /// Rotational symmetry order of the closure of one entry.
    Symmetry { a: usize, b: usize },
    /// Classify an entry: Periodic, AxisConfined, or Generic.
    Classify { a: usize, b: usize },
    /// Sample the curve U(t)_ab in the complex plane.
    Curve {
        a: usize,
        b: usize,
        #[arg(long, default_value_t = 314.159_265_358_979_3)]
        t_max: f64,
        #[arg(long, default_value_t = 0.01)]
        dt: f64,
    },
    /// Image of the uniform torus grid under the frequency map.
    Torus {
        a: usize,
        b: usize,
        #[arg(long, default_value_t = 256)]
        grid: u32,
    },
    /// Caustics of the torus map (2-dimensional tori only).
    Caustics {
        a: usize,
        b: usize,
        #[arg(long, default_value_t = 512)]
        resolution: u32,
    },
    /// Exact even moments of |U(t)_ab| for ℓ = 1..=L.
    Moments {
        a: usize,
        b: usize,
        #[arg(long)]
        ell: u32,
    },
    /// Certified lower bounds for sup |U(t)_ab|.
    Sup {
        a: usize,
        b: usize,
        #[arg(long)]
        max_ell: u32,
    },
}

enum CliError {
    Usage(String),
    Resource(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Resource(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Resource(m) => m,
        }
    }
}

fn usage<E: std::fmt::Display>(e: E) -> CliError {
    CliError::Usage(e.to_string())
}

fn from_walk(e: WalkError) -> CliError {
    match e {
        WalkError::ResourceExceeded { .. } => CliError::Resource(e.to_string()),
        other => CliError::Usage(other.to_string()),
    }
}

fn from_geometry(e: geometry::GeometryError) -> CliError {
    match e {
        geometry::GeometryError::ResourceExceeded { .. } => CliError::Resource(e.to_string()),
        geometry::GeometryError::Walk(w) => from_walk(w),
        other => CliError::Usage(other.to_string()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.code())
        }
    }
}

fn load_graph(cli: &Cli) -> Result<Graph, CliError> {
    let text = match (&cli.graph, &cli.inline) {
        (Some(path), None) => std::fs::read_to_string(path)
            .map_err(|e| usage(format!("cannot read {}: {}", path.display(), e)))?,
        (None, Some(text)) => text.clone(),
        (None, None) => {
            return Err(CliError::Usage(
                "a graph is required: pass --graph PATH or --inline TEXT".into(),
            ))
        }
        (Some(_), Some(_)) => unreachable!("clap conflicts_with"),
    };
    let g = match cli.graph_format {
        GraphFormat::Edgelist => graphio::parse_edge_list(&text).map_err(usage)?,
        GraphFormat::Graph6 => graphio::parse_graph6(&text).map_err(usage)?,
    };
    if g.n() == 0 {
        return Err(CliError::Usage("graph has no vertices".into()));
    }
    Ok(g)
}

fn check_pair(g: &Graph, a: usize, b: usize, distinct: bool) -> Result<(), CliError> {
    for v in [a, b] {
        g.check_vertex(v).map_err(usage)?;
    }
    if distinct && a == b {
        return Err(CliError::Usage(
            "this analysis requires two distinct vertices".into(),
        ));
    }
    Ok(())
}

fn moment_config() -> MomentConfig {
    let mut cfg = MomentConfig::default();
    if let Ok(v) = std::env::var("IRRWALK_WORK_CEILING") {
        if let Ok(parsed) = v.parse::<u64>() {
            cfg.work_ceiling = parsed;
        }
    }
    cfg
}

fn emit_text(cli: &Cli, text: &str) -> Result<(), CliError> {
    match &cli.out {
        None => {
            std::io::stdout()
                .write_all(text.as_bytes())
                .map_err(|e| usage(format!("write failed: {}", e)))?;
            Ok(())
        }
        Some(path) => std::fs::write(path, text)
            .map_err(|e| usage(format!("cannot write {}: {}", path.display(), e))),
    }
}

fn emit_json(cli: &Cli, value: serde_json::Value) -> Result<(), CliError> {
    let mut text = serde_json::to_string_pretty(&value)
        .map_err(|e| usage(format!("serialization failed: {}", e)))?;
    text.push('\n');
    emit_text(cli, &text)
}

fn emit_cloud(cli: &Cli, cloud: &geometry::PointCloud) -> Result<(), CliError> {
    let text = match cli.format {
        CloudFormat::Csv => geometry::to_csv(cloud),
        CloudFormat::Svg => geometry::to_svg(&[SvgLayer::Dots(cloud)]),
    };
    emit_text(cli, &text)
}

fn run(cli: &Cli) -> Result<(), CliError> {
    let g = load_graph(cli)?;
    match &cli.command {
        Command::Spectra => {
            let sd = spectra::spectral_decomposition(&g).map_err(usage)?;
            emit_json(cli, reports::spectra_report(&sd, cli.approx))
        }
        Command::Amm => {
            let amm = walk::average_mixing_matrix(&g).map_err(from_walk)?;
            emit_json(cli, reports::amm_report(&g, &amm, cli.approx))
        }
        Command::Cospectral { a, b } => {
            check_pair(&g, *a, *b, true)?;
            let pd = spectra::strong_cospectrality(&g, *a, *b).map_err(usage)?;
            emit_json(cli, reports::cospectral_report(&g, &pd))
        }
        Command::Pgst { a, b } => {
            check_pair(&g, *a, *b, true)?;
            let v = walk::decide_pgst(&g, *a, *b).map_err(from_walk)?;
            emit_json(cli, reports::pgst_report(&g, &v))
        }
        Command::Basis { a, b } => {
            let sd = spectra::spectral_decomposition(&g).map_err(usage)?;
            let fb = match (a, b) {
                (Some(a), Some(b)) => {
                    check_pair(&g, *a, *b, false)?;
                    walk::frequency_basis_for_pair(&sd, *a, *b).map_err(from_walk)?
                }
                (None, None) => {
                    let thetas: Vec<_> =
                        (0..sd.num_eigenvalues()).map(|r| sd.eigenvalue(r)).collect();
                    walk::frequency_basis(&thetas).map_err(from_walk)?
                }
                _ => {
                    return Err(CliError::Usage(
                        "basis takes either no vertices or both".into(),
                    ))
                }
            };
            emit_json(cli, reports::basis_report(&g, &fb, cli.approx))
        }
        Command::Symmetry { a, b } => {
            check_pair(&g, *a, *b, false)?;
            let sd = spectra::spectral_decomposition(&g).map_err(usage)?;
            let fb = walk::frequency_basis_for_pair(&sd, *a, *b).map_err(from_walk)?;
            let order = walk::rotation_symmetry_order(&fb);
            emit_json(cli, reports::symmetry_report(&g, *a, *b, &order))
        }
        Command::Classify { a, b } => {
            check_pair(&g, *a, *b, false)?;
            let sd = spectra::spectral_decomposition(&g).map_err(usage)?;
            let c = walk::classify_entry(&sd, *a, *b).map_err(from_walk)?;
            emit_json(cli, reports::classify_report(&g, *a, *b, &c))
        }
        Command::Curve { a, b, t_max, dt } => {
            check_pair(&g, *a, *b, false)?;
            let sd = spectra::spectral_decomposition(&g).map_err(usage)?;
            let cloud =
                geometry::sample_curve(&sd, *a, *b, *t_max, *dt).map_err(from_geometry)?;
            emit_cloud(cli, &cloud)
        }
        Command::Torus { a, b, grid } => {
            check_pair(&g, *a, *b, false)?;
            let sd = spectra::spectral_decomposition(&g).map_err(usage)?;
            let tm = geometry::torus_map(&sd, *a, *b).map_err(from_geometry)?;
            let cloud = geometry::torus_image(&tm, *grid).map_err(from_geometry)?;
            emit_cloud(cli, &cloud)
        }
        Command::Caustics { a, b, resolution } => {
            check_pair(&g, *a, *b, false)?;
            let sd = spectra::spectral_decomposition(&g).map_err(usage)?;
            let tm = geometry::torus_map(&sd, *a, *b).map_err(from_geometry)?;
            let curves = geometry::trace_caustics(&tm, *resolution).map_err(from_geometry)?;
            match cli.format {
                CloudFormat::Svg => {
                    let polylines: Vec<&[(f64, f64)]> =
                        curves.iter().map(|c| c.image.points.as_slice()).collect();
                    let layers: Vec<SvgLayer> = polylines
                        .iter()
                        .map(|p| SvgLayer::Polyline(p))
                        .collect();
                    emit_text(cli, &geometry::to_svg(&layers))
                }
                CloudFormat::Csv => {
                    // one CSV; curves separated by blank lines
                    let mut text = String::from("re,im\n");
                    for c in &curves {
                        for (re, im) in &c.image.points {
                            text.push_str(&format!(
                                "{},{}\n",
                                geometry::fmt_f64(*re),
                                geometry::fmt_f64(*im)
                            ));
                        }
                        text.push('\n');
                    }
                    emit_text(cli, &text)
                }
            }
        }
        Command::Moments { a, b, ell } => {
            check_pair(&g, *a, *b, false)?;
            if *ell < 1 {
                return Err(CliError::Usage("--ell must be at least 1".into()));
            }
            let sd = spectra::spectral_decomposition(&g).map_err(usage)?;
            let cfg = moment_config();
            let mut moments = Vec::with_capacity(*ell as usize);
            for l in 1..=*ell {
                moments.push(walk::even_moment(&sd, *a, *b, l, &cfg).map_err(from_walk)?);
            }
            emit_json(cli, reports::moments_report(&g, *a, *b, &moments, cli.approx))
        }
        Command::Sup { a, b, max_ell } => {
            check_pair(&g, *a, *b, false)?;
            if *max_ell < 1 {
                return Err(CliError::Usage("--max-ell must be at least 1".into()));
            }
            let sd = spectra::spectral_decomposition(&g).map_err(usage)?;
            let cfg = moment_config();
            let bounds =
                walk::supremum_estimate(&sd, *a, *b, *max_ell, &cfg).map_err(from_walk)?;
            emit_json(cli, reports::sup_report(&g, *a, *b, &bounds, cli.approx))
        }
    }
}
