use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use penrose_core::format::{parse_bits, parse_tiling, serialize_bits, serialize_tiling};
use penrose_core::generator::default_seed;
use penrose_core::render::{
    appendix_figure_svg, project_csv, render_obj, render_svg, ObjMode, ProjectMode, RenderMode,
};
use penrose_core::{
    classify_contact, decode_bits, encode_bits, generate_greedy, validate_tiling, TileKind, TilingDocument,
};

/// Exact lattice tools for Penrose rhombus tilings.
#[derive(Parser)]
#[command(name = "penrose", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Grow a tiling greedily from a seed tile at the origin.
    Generate {
        #[arg(long)]
        count: usize,
        #[arg(long, value_enum, default_value = "W")]
        seed_kind: SeedKind,
        #[arg(long)]
        out: PathBuf,
    },
    /// Check a tiling; exits 0 iff it is valid.
    Verify {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Write projected vertices as CSV, or the 3D model as OBJ.
    Project {
        #[arg(long)]
        mode: ProjectMode,
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
    /// Tiling to flat-lattice bit grid.
    Encode {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Bit grid back to a tiling.
    Decode {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Print the contact class of two tiles (0-based indices).
    Contact {
        #[arg(long)]
        doc: PathBuf,
        #[arg(long)]
        a: usize,
        #[arg(long)]
        b: usize,
    },
    /// Draw a tiling as SVG.
    Render {
        #[arg(long)]
        mode: RenderMode,
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Draw the contact class of every small displacement as SVG.
    AppendixFigure {
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum SeedKind {
    #[value(name = "N")]
    Narrow,
    #[value(name = "W")]
    Wide,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Obj,
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn write(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}

fn read_tiling(path: &Path) -> Result<TilingDocument> {
    parse_tiling(&read(path)?).with_context(|| format!("parsing {}", path.display()))
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Generate {
            count,
            seed_kind,
            out,
        } => {
            let kind = match seed_kind {
                SeedKind::Narrow => TileKind::Narrow,
                SeedKind::Wide => TileKind::Wide,
            };
            let doc = generate_greedy(count, default_seed(kind))?;
            write(&out, &serialize_tiling(&doc.canonical()))?;
        }
        Command::Verify { input } => {
            let report = validate_tiling(&read_tiling(&input)?);
            println!("{report}");
            if !report.is_valid() {
                return Ok(ExitCode::FAILURE);
            }
        }
        Command::Project {
            mode,
            input,
            out,
            format,
        } => {
            let doc = read_tiling(&input)?;
            let text = match (format, mode) {
                (Format::Csv, _) => project_csv(&doc, mode),
                (Format::Obj, ProjectMode::OneTwo) => render_obj(&doc, ObjMode::OneTwo),
                (Format::Obj, ProjectMode::Mu) => render_obj(&doc, ObjMode::Mu),
                (Format::Obj, ProjectMode::Flat) => bail!("the flat projection is 2D; use --format csv"),
            };
            write(&out, &text)?;
        }
        Command::Encode { input, out } => {
            let grid = encode_bits(&read_tiling(&input)?)?;
            write(&out, &serialize_bits(&grid))?;
        }
        Command::Decode { input, out } => {
            let text = read(&input)?;
            let grid = parse_bits(&text).with_context(|| format!("parsing {}", input.display()))?;
            write(&out, &serialize_tiling(&decode_bits(&grid)?))?;
        }
        Command::Contact { doc, a, b } => {
            let doc = read_tiling(&doc)?;
            let tile = |i: usize| {
                doc.tiles
                    .get(i)
                    .with_context(|| format!("tile index {i} out of range ({} tiles)", doc.len()))
            };
            println!("{}", classify_contact(tile(a)?, tile(b)?)?);
        }
        Command::Render { mode, input, out } => {
            write(&out, &render_svg(&read_tiling(&input)?, mode))?;
        }
        Command::AppendixFigure { out } => {
            let (svg, counts) = appendix_figure_svg();
            write(&out, &svg)?;
            for (class, n) in counts {
                println!("{class}: {n}");
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("penrose: {e:#}");
            ExitCode::from(2)
        }
    }
}
