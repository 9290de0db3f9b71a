//! Command-line front end: census tables, classification, decomposition
//! diagnostics, listings, and ASCII rendering of hexagonal-lattice
//! polyominoes.
//!
//! Exit codes: 0 success, 1 malformed input or bad flags, 2 semantically
//! invalid input (empty or disconnected cell set), 3 size bound exceeded.

use clap::error::ErrorKind;
use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use polyhex::census::{census, enumerate_fixed, CensusConfig, CensusError, ClassSelection};
use polyhex::oracle;
use polyhex::recognize::{canonical_decomposition, classify, verify_conditions, ConditionReport};
use polyhex::textio::{listing_line, parse_cell_list};
use polyhex::{ClassLabel, Polyomino};
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "polyhex", version, about = "Hexagonal-lattice polyomino toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count polyominoes of each size, split by class.
    Census {
        /// Largest size to count (starting from 1).
        #[arg(long = "max-size", value_parser = clap::value_parser!(u32).range(1..))]
        max_size: u32,
        /// Worker threads; the output does not depend on this.
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..=1024))]
        workers: u32,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Classify one polyomino read from a cell-list file or stdin.
    Classify {
        /// File with one "x y" cell per line; stdin when omitted.
        #[arg(long)]
        file: Option<PathBuf>,
    },
    /// Print the canonical decomposition into directed components.
    Decompose {
        #[arg(long)]
        file: Option<PathBuf>,
        /// Also report each class-defining condition.
        #[arg(long)]
        explain: bool,
    },
    /// Count or list all polyominoes of one size, optionally one class only.
    #[command(group = ArgGroup::new("output").required(true).args(["count", "list"]))]
    Enumerate {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        size: u32,
        #[arg(long, value_enum, default_value_t = ClassFilter::All)]
        class: ClassFilter,
        /// Print only the count.
        #[arg(long)]
        count: bool,
        /// Print one "x y;x y;..." line per polyomino.
        #[arg(long)]
        list: bool,
        /// Use the brute-force reference implementations instead.
        #[arg(long, hide = true)]
        oracle: bool,
    },
    /// Draw a polyomino as ASCII, one token per cell.
    Render {
        #[arg(long)]
        file: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ClassFilter {
    All,
    Directed,
    Stacked,
    Multi,
    ColumnConvex,
}

impl ClassFilter {
    fn accepts(self, label: &ClassLabel) -> bool {
        match self {
            ClassFilter::All => true,
            ClassFilter::Directed => label.is_directed,
            ClassFilter::Stacked => label.is_stacked,
            ClassFilter::Multi => label.is_multi,
            ClassFilter::ColumnConvex => label.is_column_convex,
        }
    }
}

struct CmdError {
    code: u8,
    message: String,
}

impl CmdError {
    fn malformed(message: impl Into<String>) -> Self {
        CmdError { code: 1, message: message.into() }
    }

    fn invalid(message: impl Into<String>) -> Self {
        CmdError { code: 2, message: message.into() }
    }

    fn bound(message: impl Into<String>) -> Self {
        CmdError { code: 3, message: message.into() }
    }
}

impl From<CensusError> for CmdError {
    fn from(err: CensusError) -> Self {
        CmdError::bound(err.to_string())
    }
}

impl From<oracle::SizeOverflow> for CmdError {
    fn from(err: oracle::SizeOverflow) -> Self {
        CmdError::bound(err.to_string())
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = err.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {}", err.message);
            ExitCode::from(err.code)
        }
    }
}

fn run(command: Command) -> Result<(), CmdError> {
    match command {
        Command::Census { max_size, workers, format } => cmd_census(max_size, workers, format),
        Command::Classify { file } => cmd_classify(load_polyomino(&file)?),
        Command::Decompose { file, explain } => cmd_decompose(load_polyomino(&file)?, explain),
        Command::Enumerate { size, class, count, list, oracle } => {
            cmd_enumerate(size as usize, class, count, list, oracle)
        }
        Command::Render { file } => cmd_render(load_polyomino(&file)?),
    }
}

fn load_polyomino(file: &Option<PathBuf>) -> Result<Polyomino, CmdError> {
    let text = match file {
        Some(path) => std::fs::read_to_string(path)
            .map_err(|e| CmdError::malformed(format!("{}: {e}", path.display())))?,
        None => {
            let mut buffer = String::new();
            std::io::stdin()
                .read_to_string(&mut buffer)
                .map_err(|e| CmdError::malformed(format!("stdin: {e}")))?;
            buffer
        }
    };
    let cells = parse_cell_list(&text).map_err(|e| CmdError::malformed(e.to_string()))?;
    Polyomino::new(cells).map_err(|e| CmdError::invalid(e.to_string()))
}

fn cmd_census(max_size: u32, workers: u32, format: Format) -> Result<(), CmdError> {
    let mut config = CensusConfig::new(max_size as usize).with_workers(workers as usize);
    config.classes = ClassSelection::ALL;
    let rows = census(&config)?;
    match format {
        Format::Json => {
            for row in &rows {
                println!(
                    "{{\"size\":{},\"total\":{},\"directed\":{},\"stacked_directed\":{},\"multi_directed\":{},\"column_convex\":{}}}",
                    row.n,
                    row.total,
                    row.directed.expect("full selection"),
                    row.stacked.expect("full selection"),
                    row.multi.expect("full selection"),
                    row.column_convex.expect("full selection"),
                );
            }
        }
        Format::Table => {
            let headers =
                ["size", "total", "directed", "stacked_directed", "multi_directed", "column_convex"];
            let mut table: Vec<[String; 6]> = vec![headers.map(String::from)];
            for row in &rows {
                table.push([
                    row.n.to_string(),
                    row.total.to_string(),
                    row.directed.expect("full selection").to_string(),
                    row.stacked.expect("full selection").to_string(),
                    row.multi.expect("full selection").to_string(),
                    row.column_convex.expect("full selection").to_string(),
                ]);
            }
            let widths: Vec<usize> = (0..6)
                .map(|col| table.iter().map(|r| r[col].len()).max().unwrap())
                .collect();
            for row in &table {
                let line: Vec<String> = row
                    .iter()
                    .zip(&widths)
                    .map(|(cell, w)| format!("{cell:>w$}"))
                    .collect();
                println!("{}", line.join("  "));
            }
        }
    }
    Ok(())
}

fn cmd_classify(p: Polyomino) -> Result<(), CmdError> {
    let label = classify(&p);
    println!("polyomino: {}", label.is_polyomino);
    println!("column-convex: {}", label.is_column_convex);
    println!("directed: {}", label.is_directed);
    println!("stacked: {}", label.is_stacked);
    println!("multi-directed: {}", label.is_multi);
    Ok(())
}

fn cmd_decompose(p: Polyomino, explain: bool) -> Result<(), CmdError> {
    let decomposition = canonical_decomposition(&p);
    println!("parts: {}", decomposition.parts.len());
    for (i, part) in decomposition.parts.iter().enumerate() {
        println!("part {}: source {}; body {}", i + 1, part.source, listing_line(&part.body));
    }
    if decomposition.leftover.is_empty() {
        println!("leftover: none");
    } else {
        println!("leftover: {}", listing_line(&decomposition.leftover));
    }
    if explain {
        let report = verify_conditions(&p, &decomposition)
            .expect("decomposition was just computed from p");
        print_conditions(&report);
    }
    Ok(())
}

fn print_conditions(report: &ConditionReport) {
    let outcome = |ok: bool| if ok { "pass" } else { "fail" };
    println!("covers: {}", outcome(report.covers));
    for part in &report.per_part {
        let j = part.part_index;
        println!("part {j} projection lies to the left: {}", outcome(part.proj_left));
        println!("part {j} union dominates: {}", outcome(part.union_dominates));
        println!("part {j} shares an edge: {}", outcome(part.edge_shared));
        println!("part {j} predecessor dominates: {}", outcome(part.pred_dominates));
    }
    println!("multi-directed: {}", report.multi_directed());
    println!("stacked: {}", report.stacked_directed());
}

fn cmd_enumerate(
    size: usize,
    class: ClassFilter,
    count: bool,
    list: bool,
    use_oracle: bool,
) -> Result<(), CmdError> {
    debug_assert!(count != list);
    if count && !use_oracle {
        // counting needs no materialized listing; reuse the census walk
        let mut config = CensusConfig::new(size);
        config.workers = std::thread::available_parallelism().map_or(1, |n| n.get());
        config.classes = match class {
            ClassFilter::All => ClassSelection::NONE,
            ClassFilter::Directed => ClassSelection { directed: true, ..ClassSelection::NONE },
            ClassFilter::Stacked => ClassSelection { stacked: true, ..ClassSelection::NONE },
            ClassFilter::Multi => ClassSelection { multi: true, ..ClassSelection::NONE },
            ClassFilter::ColumnConvex => {
                ClassSelection { column_convex: true, ..ClassSelection::NONE }
            }
        };
        let row = census(&config)?.pop().expect("n_max >= 1");
        let total = match class {
            ClassFilter::All => row.total,
            ClassFilter::Directed => row.directed.expect("selected"),
            ClassFilter::Stacked => row.stacked.expect("selected"),
            ClassFilter::Multi => row.multi.expect("selected"),
            ClassFilter::ColumnConvex => row.column_convex.expect("selected"),
        };
        println!("{total}");
        return Ok(());
    }
    let all: Vec<Polyomino> = if use_oracle {
        oracle_listing(size, class)?
    } else {
        enumerate_fixed(size)?
    };
    let skip_classify = class == ClassFilter::All || use_oracle;
    let matching = all
        .into_iter()
        .filter(|p| skip_classify || class.accepts(&classify(p)));
    if count {
        println!("{}", matching.count());
    } else {
        for p in matching {
            println!("{p}");
        }
    }
    Ok(())
}

fn oracle_listing(size: usize, class: ClassFilter) -> Result<Vec<Polyomino>, CmdError> {
    match class {
        ClassFilter::All => Ok(oracle::naive_enumerate(size)?.into_iter().collect()),
        ClassFilter::Directed => Ok(oracle::directed_by_recursion(size)?.into_iter().collect()),
        ClassFilter::Multi => {
            let mut found = Vec::new();
            for p in oracle::naive_enumerate(size)? {
                if oracle::witness_search(&p, size)?.found {
                    found.push(p);
                }
            }
            Ok(found)
        }
        ClassFilter::Stacked | ClassFilter::ColumnConvex => Err(CmdError::malformed(
            "no reference implementation for this class; drop --oracle",
        )),
    }
}

fn cmd_render(p: Polyomino) -> Result<(), CmdError> {
    print!("{}", render(&p));
    Ok(())
}

/// Cell `(x, y)` paints a two-character token at text column `3 * x` (the
/// canonical form has min x = 0) and text row `2 * (h_max - h)` counted from
/// the top, where `h = y + x/2`; doubling the row index keeps half-unit
/// height differences representable.
fn render(p: &Polyomino) -> String {
    const TOKEN: &[u8; 2] = b"##";
    let doubled: Vec<i64> = p.cells().iter().map(|c| c.doubled_height()).collect();
    let top = doubled.iter().copied().max().unwrap();
    let bottom = doubled.iter().copied().min().unwrap();
    let height = (top - bottom) as usize + 1;
    let width = p.cells().iter().map(|c| c.x).max().unwrap() as usize * 3 + TOKEN.len();
    let mut canvas = vec![vec![b' '; width]; height];
    for (cell, h) in p.cells().iter().zip(&doubled) {
        let row = (top - h) as usize;
        let col = cell.x as usize * 3;
        canvas[row][col..col + TOKEN.len()].copy_from_slice(TOKEN);
    }
    let mut out = String::new();
    for row in canvas {
        let line = String::from_utf8(row).unwrap();
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}
