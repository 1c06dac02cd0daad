//! `upbe`: check, solve, reduce, fold, generate and draw upward book
//! embeddings from the command line.
//!
//! Exit status is 0 for a valid or feasible answer, 1 for an invalid or
//! infeasible one and 2 for usage, format or budget errors.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use upbe::gen::{random_cycle, random_dag, random_matching_dag, random_path};
use upbe::io::{
    emit_instance, emit_labels, emit_ordering, parse_betweenness, parse_instance, parse_names, parse_ordering,
};
use upbe::reductions::{
    assemble_umpbe4, assemble_upbe3, witness_umpbe4, witness_upbe3, ElementOrdering, ReductionError,
};
use upbe::svg::{render_svg, RenderStyle};
use upbe::{
    fold_cycle, fold_path, is_matching_partition, solve_exact, solve_umpbe2, validate_ordering, CreasePattern,
    Instance, Ordering, SearchConfig, Verdict,
};

#[derive(Parser)]
#[command(name = "upbe", version, about = "Upward book embeddings with prescribed pages")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check an ordering against an instance.
    Validate { instance: PathBuf, ordering: PathBuf },
    /// Decide whether an instance has a valid ordering.
    Solve {
        instance: PathBuf,
        #[arg(long, value_enum, default_value_t = Algorithm::Auto)]
        algorithm: Algorithm,
        /// Write the ordering found here instead of printing it.
        #[arg(long)]
        witness: Option<PathBuf>,
        #[arg(long)]
        node_budget: Option<u64>,
        /// Seconds.
        #[arg(long)]
        time_budget: Option<f64>,
    },
    /// Build the instance for a Betweenness instance.
    Reduce {
        #[arg(value_enum)]
        target: Target,
        betweenness: PathBuf,
        output: PathBuf,
        /// Also write one line per vertex describing its role.
        #[arg(long)]
        labels: Option<PathBuf>,
    },
    /// Turn a satisfying element order into a valid ordering of the reduction.
    Witness {
        #[arg(value_enum)]
        target: Target,
        betweenness: PathBuf,
        /// Element names one per line.
        phi: PathBuf,
        output: PathBuf,
    },
    /// Fold a strip, or a single vertex with `--cycle`, given as M/V letters.
    Fold {
        creases: String,
        #[arg(long)]
        cycle: bool,
        /// Write the faces bottom to top, one per line.
        #[arg(long)]
        layers: Option<PathBuf>,
    },
    /// Print a random instance.
    Gen {
        #[arg(value_enum)]
        shape: Shape,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Edge count for `random`; defaults to n.
        #[arg(long)]
        edges: Option<usize>,
        /// Keep every page of a `random` instance a matching.
        #[arg(long)]
        matching: bool,
    },
    /// Draw an instance as an arc diagram.
    Render {
        instance: PathBuf,
        #[arg(long)]
        order: Option<PathBuf>,
        #[arg(short, long)]
        output: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Algorithm {
    /// The two-page solver when it applies, exact search otherwise.
    Auto,
    Exact,
    Umpbe2,
}

#[derive(Clone, Copy, ValueEnum)]
enum Target {
    Upbe3,
    Umpbe4,
}

#[derive(Clone, Copy, ValueEnum)]
enum Shape {
    Path,
    Cycle,
    Random,
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn write(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).with_context(|| format!("cannot write {}", path.display()))
}

fn load_instance(path: &Path) -> Result<Instance> {
    parse_instance(&read(path)?).with_context(|| format!("in {}", path.display()))
}

/// Outcome of a subcommand: `true` for success, `false` for a negative
/// verdict.
type Verdicted = Result<bool>;

fn validate(instance: &Path, ordering: &Path) -> Verdicted {
    let inst = load_instance(instance)?;
    let ord = parse_ordering(&inst, &read(ordering)?).with_context(|| format!("in {}", ordering.display()))?;
    let report = validate_ordering(&inst, &ord);
    if report.is_valid() {
        println!("VALID");
    } else {
        println!("INVALID");
        for v in &report.violations {
            println!("  {}", v.describe(&inst));
        }
    }
    Ok(report.is_valid())
}

fn solve(
    instance: &Path,
    algorithm: Algorithm,
    witness: Option<&Path>,
    node_budget: Option<u64>,
    time_budget: Option<f64>,
) -> Verdicted {
    let inst = load_instance(instance)?;
    let two_page = inst.pages() == 2 && is_matching_partition(&inst);
    let found = match algorithm {
        Algorithm::Umpbe2 => solve_umpbe2(&inst)?,
        Algorithm::Auto if two_page => solve_umpbe2(&inst)?,
        Algorithm::Auto | Algorithm::Exact => {
            let mut cfg = SearchConfig::default();
            if let Some(n) = node_budget {
                cfg = cfg.with_node_budget(n);
            }
            if let Some(s) = time_budget {
                let t =
                    Duration::try_from_secs_f64(s).context("time budget must be a non-negative number of seconds")?;
                cfg = cfg.with_time_budget(t);
            }
            match solve_exact(&inst, &cfg).verdict {
                Verdict::Feasible(ord) => Some(ord),
                Verdict::Infeasible => None,
                Verdict::BudgetExhausted => bail!("BUDGET EXHAUSTED: no verdict"),
            }
        }
    };
    let Some(ord) = found else {
        println!("INFEASIBLE");
        return Ok(false);
    };
    println!("FEASIBLE");
    let text = emit_ordering(&inst, &ord);
    match witness {
        Some(path) => write(path, &text)?,
        None => print!("{text}"),
    }
    Ok(true)
}

fn reduce(target: Target, betweenness: &Path, output: &Path, labels: Option<&Path>) -> Verdicted {
    let bw = parse_betweenness(&read(betweenness)?).with_context(|| format!("in {}", betweenness.display()))?;
    let lab = match target {
        Target::Upbe3 => assemble_upbe3(&bw)?,
        Target::Umpbe4 => assemble_umpbe4(&bw)?,
    };
    write(output, &emit_instance(&lab.instance))?;
    if let Some(path) = labels {
        write(path, &emit_labels(&lab))?;
    }
    println!(
        "wrote {} vertices, {} edges on {} pages",
        lab.instance.vertex_count(),
        lab.instance.edge_count(),
        lab.instance.pages()
    );
    Ok(true)
}

fn witness(target: Target, betweenness: &Path, phi: &Path, output: &Path) -> Verdicted {
    let bw = parse_betweenness(&read(betweenness)?).with_context(|| format!("in {}", betweenness.display()))?;
    let names = parse_names(&read(phi)?).with_context(|| format!("in {}", phi.display()))?;
    let phi = ElementOrdering::from_names(&bw, &names).context("the element order must list every element once")?;
    let (lab, ord) = match target {
        Target::Upbe3 => (assemble_upbe3(&bw)?, witness_upbe3(&bw, &phi)),
        Target::Umpbe4 => (assemble_umpbe4(&bw)?, witness_umpbe4(&bw, &phi)),
    };
    match ord {
        Ok(ord) => {
            write(output, &emit_ordering(&lab.instance, &ord))?;
            println!("WITNESS");
            Ok(true)
        }
        Err(e @ ReductionError::WitnessPreconditionViolated { .. }) => {
            println!("INVALID: {e}");
            Ok(false)
        }
        Err(e) => Err(e.into()),
    }
}

fn fold(creases: &str, cycle: bool, layers: Option<&Path>) -> Verdicted {
    let pattern = CreasePattern::parse(creases, cycle)?;
    let folded = if cycle {
        fold_cycle(&pattern)
    } else {
        Some(fold_path(&pattern))
    };
    let Some(order) = folded else {
        println!("INFEASIBLE");
        return Ok(false);
    };
    let faces: Vec<String> = order.faces().iter().map(|f| format!("f{}", f + 1)).collect();
    println!("FEASIBLE");
    println!("{}", faces.join(" "));
    if let Some(path) = layers {
        write(path, &(faces.join("\n") + "\n"))?;
    }
    Ok(true)
}

fn gen(shape: Shape, n: usize, k: u32, seed: u64, edges: Option<usize>, matching: bool) -> Verdicted {
    if k == 0 {
        bail!("--k must be at least 1");
    }
    let inst = match shape {
        Shape::Path => random_path(n, k, seed),
        Shape::Cycle => {
            if n < 3 {
                bail!("a cycle needs at least 3 vertices");
            }
            random_cycle(n, k, seed)
        }
        Shape::Random if matching => random_matching_dag(n, edges.unwrap_or(n), k, seed),
        Shape::Random => random_dag(n, edges.unwrap_or(n), k, seed),
    };
    print!("{}", emit_instance(&inst));
    Ok(true)
}

fn render(instance: &Path, order: Option<&Path>, output: &Path) -> Verdicted {
    let inst = load_instance(instance)?;
    let ord: Option<Ordering> = match order {
        Some(p) => Some(parse_ordering(&inst, &read(p)?).with_context(|| format!("in {}", p.display()))?),
        None => None,
    };
    write(output, &render_svg(&inst, ord.as_ref(), &RenderStyle::default())?)?;
    Ok(true)
}

fn run(cli: Cli) -> Verdicted {
    match cli.command {
        Command::Validate { instance, ordering } => validate(&instance, &ordering),
        Command::Solve {
            instance,
            algorithm,
            witness,
            node_budget,
            time_budget,
        } => solve(&instance, algorithm, witness.as_deref(), node_budget, time_budget),
        Command::Reduce {
            target,
            betweenness,
            output,
            labels,
        } => reduce(target, &betweenness, &output, labels.as_deref()),
        Command::Witness {
            target,
            betweenness,
            phi,
            output,
        } => witness(target, &betweenness, &phi, &output),
        Command::Fold { creases, cycle, layers } => fold(&creases, cycle, layers.as_deref()),
        Command::Gen {
            shape,
            n,
            k,
            seed,
            edges,
            matching,
        } => gen(shape, n, k, seed, edges, matching),
        Command::Render {
            instance,
            order,
            output,
        } => render(&instance, order.as_deref(), &output),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
