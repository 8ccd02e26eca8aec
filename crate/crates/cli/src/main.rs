use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::Context;
use clap::{Parser, Subcommand};
use feitlab_core::harness::{
    emit_report, find_entry, parse_corpus, verify_corpus, CheckSelection, Format, GroupContext,
    PrimeSelection, RunOptions,
};
use feitlab_core::permgroup::DEFAULT_ORDER_CAP;

#[derive(Parser)]
#[command(
    name = "feitlab",
    version,
    about = "Character tables, Feit numbers and Sylow normalizer checks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the character table of one corpus group.
    Table {
        corpus: PathBuf,
        #[arg(long)]
        group: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Degrees, Feit numbers, determinantal orders and p-special flags.
    Profile {
        corpus: PathBuf,
        #[arg(long)]
        group: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Run verification suites over the whole corpus.
    Verify {
        corpus: PathBuf,
        #[arg(long, default_value = "all")]
        check: CheckSelection,
        #[arg(long = "p", default_value = "all")]
        p: PrimeSelection,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_ORDER_CAP)]
        max_order: usize,
        /// Write the JSON report here (`-` for stdout).
        #[arg(long)]
        json: Option<PathBuf>,
    },
}

fn read_corpus(path: &Path) -> anyhow::Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn context(
    corpus: &Path,
    group: &str,
    seed: u64,
    lemma_data: bool,
) -> anyhow::Result<GroupContext> {
    let entries = parse_corpus(&read_corpus(corpus)?)?;
    let entry = find_entry(&entries, group)?;
    Ok(GroupContext::build(
        entry,
        seed,
        DEFAULT_ORDER_CAP,
        lemma_data,
    )?)
}

fn table(corpus: &Path, group: &str, seed: u64) -> anyhow::Result<ExitCode> {
    let ctx = context(corpus, group, seed, false)?;
    let cd = &ctx.classes;
    let join = |v: Vec<String>| v.join("\t");
    println!(
        "# {}  order {}  classes {}  prime {}",
        ctx.name,
        ctx.group.order(),
        cd.len(),
        ctx.table.prime()
    );
    println!(
        "order\t{}",
        join((0..cd.len()).map(|c| cd.rep_order(c).to_string()).collect())
    );
    println!(
        "size\t{}",
        join(cd.sizes().iter().map(ToString::to_string).collect())
    );
    for (i, line) in ctx.table.render_text().lines().enumerate() {
        println!("X.{i}\t{line}");
    }
    Ok(ExitCode::SUCCESS)
}

fn profile(corpus: &Path, group: &str, seed: u64) -> anyhow::Result<ExitCode> {
    let ctx = context(corpus, group, seed, true)?;
    println!(
        "# {}  order {}  solvable {}",
        ctx.name,
        ctx.group.order(),
        ctx.solvable
    );
    println!("char\tdegree\tfeit\tdet_order\tfield_degree\tp_special");
    for (i, p) in ctx.profiles.iter().enumerate() {
        let special = if !ctx.solvable {
            "n/a".to_string()
        } else if p.p_special_for.is_empty() {
            "-".to_string()
        } else {
            p.p_special_for
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(",")
        };
        println!(
            "X.{i}\t{}\t{}\t{}\t{}\t{special}",
            p.degree, p.feit, p.det_order, p.field_degree
        );
    }
    Ok(ExitCode::SUCCESS)
}

fn verify(corpus: &Path, opts: RunOptions, json: Option<&Path>) -> anyhow::Result<ExitCode> {
    let text = read_corpus(corpus)?;
    let (report, skipped) = verify_corpus(&text, &opts)?;
    for name in &skipped {
        eprintln!("skipped {name}: order exceeds {}", opts.max_order);
    }
    match json {
        Some(path) if path == Path::new("-") => {
            print!("{}", String::from_utf8(emit_report(&report, Format::Json))?);
        }
        Some(path) => {
            fs::write(path, emit_report(&report, Format::Json))
                .with_context(|| format!("writing {}", path.display()))?;
            print!("{}", String::from_utf8(emit_report(&report, Format::Text))?);
        }
        None => print!("{}", String::from_utf8(emit_report(&report, Format::Text))?),
    }
    Ok(if report.summary.fail == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Table {
            corpus,
            group,
            seed,
        } => table(&corpus, &group, seed),
        Command::Profile {
            corpus,
            group,
            seed,
        } => profile(&corpus, &group, seed),
        Command::Verify {
            corpus,
            check,
            p,
            seed,
            max_order,
            json,
        } => verify(
            &corpus,
            RunOptions {
                checks: check,
                primes: p,
                seed,
                max_order,
            },
            json.as_deref(),
        ),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
