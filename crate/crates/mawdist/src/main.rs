//! Command line front end: distance matrices, word dumps, q-gram bounds,
//! family generation, and matrix validation.

use clap::{Args, Parser, Subcommand};
use mawdist::{
    binary_extremal, circular_maws, compute_maws, compute_q, distance_matrix, infer_alphabet,
    multiletter_extremal, parse_multifasta, read_multifasta, read_phylip, unique_factor_catalog,
    write_multifasta, write_phylip, Alphabet, MatrixConfig, Mode, Result, Sequence,
};
use std::fs::File;
use std::io::{BufReader, BufWriter, Write};
use std::path::PathBuf;

#[derive(Parser)]
#[command(
    name = "mawdist",
    version,
    about = "Alignment-free sequence comparison through minimal absent words"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute a pairwise distance matrix in PHYLIP format
    Dist(DistArgs),
    /// List the minimal absent words of every input record
    Maws(MawsArgs),
    /// Report the largest q with every q-gram covered by an absent word
    Qgram(QgramArgs),
    /// Generate words with extremally many minimal absent words
    Gen(GenArgs),
    /// Validate a PHYLIP distance matrix
    Check(CheckArgs),
}

#[derive(Args)]
struct InputArgs {
    /// MultiFASTA input, '-' or absent for stdin
    #[arg(short = 'i', long = "input")]
    input: Option<PathBuf>,
    /// Uppercase sequences before processing
    #[arg(long)]
    uppercase: bool,
}

#[derive(Args)]
struct OutputArg {
    /// Output file, '-' or absent for stdout
    #[arg(short = 'o', long = "output")]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct DistArgs {
    #[command(flatten)]
    input: InputArgs,
    #[command(flatten)]
    output: OutputArg,
    /// Treat every sequence as circular
    #[arg(long)]
    circular: bool,
    /// Ignore absent words longer than this length
    #[arg(long, value_name = "LEN", value_parser = clap::value_parser!(u64).range(1..))]
    max_maw_len: Option<u64>,
    /// Worker threads, 0 for automatic
    #[arg(long, default_value_t = 0)]
    threads: usize,
    /// Decimals per matrix cell
    #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(u8).range(1..=17))]
    precision: u8,
    /// Write full labels separated by two spaces instead of 10-column names
    #[arg(long)]
    relaxed_phylip: bool,
    /// Compare every pair over the alphabet of the whole input
    #[arg(long)]
    global_alphabet: bool,
}

#[derive(Args)]
struct MawsArgs {
    #[command(flatten)]
    input: InputArgs,
    #[command(flatten)]
    output: OutputArg,
    /// List circular minimal absent words instead of linear ones
    #[arg(long)]
    circular: bool,
    /// Drop words longer than this length
    #[arg(long, value_name = "LEN", value_parser = clap::value_parser!(u64).range(1..))]
    max_maw_len: Option<u64>,
    /// Use the alphabet of the whole input for every record
    #[arg(long)]
    global_alphabet: bool,
}

#[derive(Args)]
struct QgramArgs {
    #[command(flatten)]
    input: InputArgs,
    #[command(flatten)]
    output: OutputArg,
}

#[derive(Args)]
struct GenArgs {
    #[command(flatten)]
    output: OutputArg,
    /// Comma separated word lengths
    #[arg(long, value_delimiter = ',', required = true, value_name = "N")]
    sizes: Vec<u64>,
    /// Alphabet size: 2 for the binary family, 3 to 52 for the multiletter one
    #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u64).range(2..=52))]
    sigma: u64,
}

#[derive(Args)]
struct CheckArgs {
    /// PHYLIP matrix to validate, '-' or absent for stdin
    #[arg(short = 'i', long = "input")]
    input: Option<PathBuf>,
}

fn main() {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Dist(args) => cmd_dist(args),
        Command::Maws(args) => cmd_maws(args),
        Command::Qgram(args) => cmd_qgram(args),
        Command::Gen(args) => cmd_gen(args),
        Command::Check(args) => cmd_check(args),
    };
    if let Err(e) = outcome {
        eprintln!("mawdist: {e}");
        std::process::exit(1);
    }
}

fn is_stdio(path: &Option<PathBuf>) -> bool {
    match path {
        None => true,
        Some(p) => p.as_os_str() == "-",
    }
}

fn read_input(args: &InputArgs) -> Result<Vec<Sequence>> {
    let mut seqs = if is_stdio(&args.input) {
        parse_multifasta(std::io::stdin().lock(), "<stdin>")?
    } else {
        read_multifasta(args.input.as_ref().expect("checked by is_stdio"))?
    };
    if args.uppercase {
        for s in &mut seqs {
            s.data.make_ascii_uppercase();
        }
    }
    Ok(seqs)
}

fn open_output(arg: &OutputArg) -> Result<Box<dyn Write>> {
    if is_stdio(&arg.output) {
        Ok(Box::new(BufWriter::new(std::io::stdout().lock())))
    } else {
        let path = arg.output.as_ref().expect("checked by is_stdio");
        let file = File::create(path).map_err(|source| mawdist::Error::File {
            path: path.display().to_string(),
            source,
        })?;
        Ok(Box::new(BufWriter::new(file)))
    }
}

fn cmd_dist(args: DistArgs) -> Result<()> {
    let seqs = read_input(&args.input)?;
    let config = MatrixConfig {
        mode: if args.circular {
            Mode::Circular
        } else {
            Mode::Linear
        },
        max_len: args.max_maw_len.map(|v| v as usize),
        threads: args.threads,
        global_alphabet: args.global_alphabet,
    };
    let matrix = distance_matrix(&seqs, &config)?;
    let mut out = open_output(&args.output)?;
    write_phylip(&matrix, &mut out, args.precision as usize, args.relaxed_phylip)?;
    out.flush()?;
    Ok(())
}

fn cmd_maws(args: MawsArgs) -> Result<()> {
    let seqs = read_input(&args.input)?;
    let global = if args.global_alphabet {
        Some(infer_alphabet(&seqs)?)
    } else {
        None
    };
    let cap = args.max_maw_len.map(|v| v as usize).unwrap_or(usize::MAX);
    let mut out = open_output(&args.output)?;
    for s in &seqs {
        let own;
        let alphabet = match &global {
            Some(a) => a,
            None => {
                own = Alphabet::union_of(&[&s.data])?;
                &own
            }
        };
        let words = if args.circular {
            circular_maws(&s.data, alphabet)?.decode()
        } else {
            compute_maws(&s.data, alphabet)?.decode(&s.data)
        };
        writeln!(out, ">{}", s.label)?;
        for w in words {
            if w.len() > cap {
                continue;
            }
            out.write_all(&w)?;
            writeln!(out)?;
        }
    }
    out.flush()?;
    Ok(())
}

fn cmd_qgram(args: QgramArgs) -> Result<()> {
    let seqs = read_input(&args.input)?;
    let mut out = open_output(&args.output)?;
    writeln!(out, "#label\tq\tshortest_unique\tshortest_unique_infix")?;
    for s in &seqs {
        let q = compute_q(&s.data)?;
        let catalog = unique_factor_catalog(&s.data)?;
        let infix = catalog
            .shortest_unique_infix
            .map(|t| t.to_string())
            .unwrap_or_else(|| "-".to_string());
        writeln!(
            out,
            "{}\t{}\t{}\t{}",
            s.label, q, catalog.shortest_unique, infix
        )?;
    }
    out.flush()?;
    Ok(())
}

fn cmd_gen(args: GenArgs) -> Result<()> {
    let mut seqs = Vec::with_capacity(args.sizes.len());
    for &n in &args.sizes {
        let n = n as usize;
        let (label, data) = if args.sigma == 2 {
            (format!("binary_n{n}"), binary_extremal(n)?)
        } else {
            (
                format!("sigma{}_n{n}", args.sigma),
                multiletter_extremal(n, args.sigma as usize)?,
            )
        };
        seqs.push(Sequence::new(label, data));
    }
    let mut out = open_output(&args.output)?;
    write_multifasta(&mut out, &seqs, 70)?;
    out.flush()?;
    Ok(())
}

fn cmd_check(args: CheckArgs) -> Result<()> {
    let (matrix, shown_path) = if is_stdio(&args.input) {
        (read_phylip(std::io::stdin().lock(), "<stdin>")?, "<stdin>".to_string())
    } else {
        let path = args.input.as_ref().expect("checked by is_stdio");
        let shown = path.display().to_string();
        let file = File::open(path).map_err(|source| mawdist::Error::File {
            path: shown.clone(),
            source,
        })?;
        (read_phylip(BufReader::new(file), &shown)?, shown)
    };
    let mut problems = Vec::new();
    if !matrix.is_symmetric() {
        problems.push("matrix is not symmetric");
    }
    if !matrix.diagonal_is_zero() {
        problems.push("diagonal is not zero");
    }
    if !matrix.is_non_negative() {
        problems.push("matrix has negative or non-numeric cells");
    }
    if problems.is_empty() {
        println!(
            "ok: {} taxa, symmetric, zero diagonal, non-negative",
            matrix.len()
        );
        Ok(())
    } else {
        Err(mawdist::Error::Phylip {
            path: shown_path,
            msg: problems.join("; "),
        })
    }
}
