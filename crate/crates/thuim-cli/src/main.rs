//! Command-line frontend for targeted high-utility itemset mining.
//!
//! Exit codes: 0 success, 1 verification mismatch, 2 unreadable input or
//! malformed arguments.

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use thuim::data::{ItemId, QuantitativeDatabase};
use thuim::datagen::{generate, GenParams};
use thuim::index::ProcessingOrder;
use thuim::miner::{mine_with_order, MiningOutcome};
use thuim::oracle::{brute_force_thuis, mine_then_filter_with_order, BRUTE_FORCE_ITEM_LIMIT};
use thuim::report::{canonical_results, render_lines};
use thuim::Currency;

#[derive(Parser)]
#[command(
    name = "thuim",
    version,
    about = "Mine high-utility itemsets containing a target pattern from quantitative transaction data",
    long_about = "Mines every itemset whose utility reaches a threshold and which contains all \
                  items of a target pattern. Input is one transaction per line,\n\n    \
                  <items> : <transaction utility> : <item utilities>\n\ne.g. `2 4 5:14:6 3 5`. \
                  Results go to stdout (or --output), one `<items> #UTIL: <utility>` line each, \
                  in a canonical order independent of --order. Run statistics go to stderr."
)]
struct Cli {
    #[command(subcommand)]
    command: Option<Command>,

    #[command(flatten)]
    mine: MineArgs,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a synthetic database (Zipf item popularity, Poisson lengths)
    Generate(GenerateArgs),
}

#[derive(Args)]
struct MineArgs {
    /// Database file to mine
    #[arg(long, value_name = "FILE")]
    input: Option<PathBuf>,

    /// Minimum utility threshold, in utility units
    #[arg(long, value_name = "N", conflicts_with = "min_util_percent")]
    min_util: Option<u64>,

    /// Minimum utility as a percentage (0-100) of the database's total utility
    #[arg(long, value_name = "PCT")]
    min_util_percent: Option<f64>,

    /// Target items, comma-separated (e.g. "5,6"); empty means no target,
    /// i.e. mine all high-utility itemsets
    #[arg(long, value_name = "ITEMS", default_value = "")]
    target: String,

    /// Processing order for items during the search; results never depend
    /// on it, work and memory do
    #[arg(long, value_enum, default_value_t = OrderArg::TwuAsc)]
    order: OrderArg,

    /// What to run
    #[arg(long, value_enum, default_value_t = ModeArg::Mine)]
    mode: ModeArg,

    /// Write results here instead of stdout
    #[arg(long, value_name = "FILE")]
    output: Option<PathBuf>,

    /// Statistics format (always printed to stderr)
    #[arg(long, value_enum, default_value_t = StatsArg::Human)]
    stats: StatsArg,
}

#[derive(Clone, Copy, ValueEnum)]
enum OrderArg {
    /// Ascending transaction-weighted utility (default)
    TwuAsc,
    /// Ascending item id
    Lexi,
    /// Descending transaction-weighted utility
    TwuDesc,
}

impl From<OrderArg> for ProcessingOrder {
    fn from(arg: OrderArg) -> Self {
        match arg {
            OrderArg::TwuAsc => ProcessingOrder::TwuAscending,
            OrderArg::Lexi => ProcessingOrder::Lexicographic,
            OrderArg::TwuDesc => ProcessingOrder::TwuDescending,
        }
    }
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum ModeArg {
    /// Targeted mining (the real algorithm)
    Mine,
    /// Mine everything, then filter for the target: same answers, baseline costs
    FilterBaseline,
    /// Exhaustive enumeration; refuses databases with more than 20 distinct items
    BruteForce,
    /// Run mine, filter-baseline, and (if feasible) brute-force; fail if they disagree
    Verify,
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum StatsArg {
    Human,
    Json,
}

#[derive(Args)]
struct GenerateArgs {
    /// Item universe size (ids 1..=N)
    #[arg(long, value_name = "N", default_value_t = 870)]
    items: u32,

    /// Number of transactions
    #[arg(long, value_name = "N", default_value_t = 100_000)]
    transactions: u32,

    /// Mean transaction length (Poisson, clamped to [1, max-len])
    #[arg(long, value_name = "MEAN", default_value_t = 10.0)]
    avg_len: f64,

    /// Maximum transaction length
    #[arg(long, value_name = "N", default_value_t = 29)]
    max_len: u32,

    /// Quantities are drawn uniformly from 1..=N
    #[arg(long, value_name = "N", default_value_t = 5)]
    max_quantity: u32,

    /// Per-item unit profits are drawn uniformly from 1..=N
    #[arg(long, value_name = "N", default_value_t = 10)]
    max_profit: u32,

    /// RNG seed; same seed, same database
    #[arg(long, value_name = "SEED", default_value_t = 1)]
    seed: u64,

    /// Write the database here instead of stdout
    #[arg(long, value_name = "FILE")]
    output: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.command {
        Some(Command::Generate(args)) => run_generate(&args),
        None => run_mine(&cli.mine),
    };
    ExitCode::from(code)
}

fn run_mine(args: &MineArgs) -> u8 {
    let Some(input) = &args.input else {
        eprintln!("error: --input <FILE> is required (or use the `generate` subcommand)");
        return 2;
    };
    let text = match fs::read_to_string(input) {
        Ok(text) => text,
        Err(err) => {
            eprintln!("error: cannot read {}: {err}", input.display());
            return 2;
        }
    };
    let db = match QuantitativeDatabase::parse_database(&text) {
        Ok(db) => db,
        Err(err) => {
            eprintln!("error: {}: {err}", input.display());
            return 2;
        }
    };

    let min_util = match (args.min_util, args.min_util_percent) {
        (Some(value), None) => value,
        (None, Some(pct)) => {
            if !pct.is_finite() || !(0.0..=100.0).contains(&pct) {
                eprintln!("error: --min-util-percent must lie in [0, 100], got {pct}");
                return 2;
            }
            (db.total_utility() as f64 * pct / 100.0).round() as Currency
        }
        (None, None) => {
            eprintln!("error: one of --min-util or --min-util-percent is required");
            return 2;
        }
        (Some(_), Some(_)) => unreachable!("clap rejects the combination"),
    };

    let target = match parse_target(&args.target) {
        Ok(target) => target,
        Err(message) => {
            eprintln!("error: --target: {message}");
            return 2;
        }
    };
    let order = ProcessingOrder::from(args.order);

    match args.mode {
        ModeArg::Mine => {
            let outcome = mine_with_order(&db, min_util, &target, order);
            emit_outcome(args, &outcome, min_util, order, &target)
        }
        ModeArg::FilterBaseline => {
            let outcome = mine_then_filter_with_order(&db, min_util, &target, order);
            emit_outcome(args, &outcome, min_util, order, &target)
        }
        ModeArg::BruteForce => match brute_force_thuis(&db, min_util, &target) {
            Ok(results) => {
                let canonical = canonical_results(&results);
                if write_results(args.output.as_deref(), &render_lines(&canonical)).is_err() {
                    return 2;
                }
                eprintln!(
                    "brute force: {} itemset(s) at min-util {min_util}",
                    canonical.len()
                );
                0
            }
            Err(err) => {
                eprintln!("error: {err}");
                2
            }
        },
        ModeArg::Verify => run_verify(args, &db, min_util, order, &target),
    }
}

fn emit_outcome(
    args: &MineArgs,
    outcome: &MiningOutcome,
    min_util: Currency,
    order: ProcessingOrder,
    target: &[ItemId],
) -> u8 {
    let canonical = canonical_results(&outcome.results);
    if write_results(args.output.as_deref(), &render_lines(&canonical)).is_err() {
        return 2;
    }
    print_stats(args.stats, outcome, min_util, order, target);
    0
}

fn print_stats(
    format: StatsArg,
    outcome: &MiningOutcome,
    min_util: Currency,
    order: ProcessingOrder,
    target: &[ItemId],
) {
    let target_ids: Vec<u32> = target.iter().map(|t| t.get()).collect();
    match format {
        StatsArg::Human => {
            let target_text = if target_ids.is_empty() {
                "none".to_string()
            } else {
                target_ids
                    .iter()
                    .map(|id| id.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            };
            eprintln!(
                "{} itemset(s) in {} ms (min-util {min_util}, target {target_text}, order {})",
                outcome.results.len(),
                outcome.elapsed.as_millis(),
                order.label()
            );
            eprintln!(
                "{} candidate utility-list(s), peak {} element(s) in memory",
                outcome.candidates, outcome.peak_elements
            );
        }
        StatsArg::Json => {
            let stats = serde_json::json!({
                "runtime_ms": outcome.elapsed.as_millis() as u64,
                "candidates": outcome.candidates,
                "thuis": outcome.results.len(),
                "peak_elements": outcome.peak_elements,
                "order": order.label(),
                "min_util": min_util,
                "target": target_ids,
            });
            eprintln!("{stats}");
        }
    }
}

fn run_verify(
    args: &MineArgs,
    db: &QuantitativeDatabase,
    min_util: Currency,
    order: ProcessingOrder,
    target: &[ItemId],
) -> u8 {
    let targeted = mine_with_order(db, min_util, target, order);
    let baseline = mine_then_filter_with_order(db, min_util, target, order);
    let mined = canonical_results(&targeted.results);
    let filtered = canonical_results(&baseline.results);

    let mut engines = vec!["mine", "filter-baseline"];
    let mut ok = true;
    if mined != filtered {
        ok = false;
        report_diff("mine", &mined, "filter-baseline", &filtered);
    }
    if db.item_count() <= BRUTE_FORCE_ITEM_LIMIT {
        engines.push("brute-force");
        let brute = canonical_results(
            &brute_force_thuis(db, min_util, target).expect("item count is within the limit"),
        );
        if mined != brute {
            ok = false;
            report_diff("mine", &mined, "brute-force", &brute);
        }
    }

    if !ok {
        eprintln!("verify: MISMATCH");
        return 1;
    }
    if write_results(args.output.as_deref(), &render_lines(&mined)).is_err() {
        return 2;
    }
    eprintln!(
        "verify: ok — {} agree on {} itemset(s)",
        engines.join(", "),
        mined.len()
    );
    print_stats(args.stats, &targeted, min_util, order, target);
    0
}

/// Prints the first few result lines present in one engine's output but not
/// the other's, both directions.
fn report_diff(
    left_name: &str,
    left: &[(Vec<ItemId>, Currency)],
    right_name: &str,
    right: &[(Vec<ItemId>, Currency)],
) {
    eprintln!(
        "verify: {left_name} found {} itemset(s), {right_name} found {}",
        left.len(),
        right.len()
    );
    for (name, own, other) in [
        (left_name, left, right),
        (right_name, right, left),
    ] {
        let missing: Vec<String> = own
            .iter()
            .filter(|entry| !other.contains(entry))
            .take(5)
            .map(|(itemset, utility)| {
                let ids: Vec<String> = itemset.iter().map(|i| i.get().to_string()).collect();
                format!("{} #UTIL: {utility}", ids.join(" "))
            })
            .collect();
        if !missing.is_empty() {
            eprintln!("verify: only in {name}: {}", missing.join(" | "));
        }
    }
}

fn parse_target(raw: &str) -> Result<Vec<ItemId>, String> {
    let trimmed = raw.trim();
    if trimmed.is_empty() {
        return Ok(Vec::new());
    }
    trimmed
        .split(',')
        .map(|token| {
            let token = token.trim();
            token
                .parse::<u32>()
                .map(ItemId::new)
                .map_err(|_| format!("cannot parse {token:?} as an item id"))
        })
        .collect()
}

fn write_results(output: Option<&std::path::Path>, text: &str) -> Result<(), ()> {
    match output {
        Some(path) => fs::write(path, text).map_err(|err| {
            eprintln!("error: cannot write {}: {err}", path.display());
        }),
        None => {
            print!("{text}");
            std::io::stdout().flush().map_err(|err| {
                eprintln!("error: cannot write to stdout: {err}");
            })
        }
    }
}

fn run_generate(args: &GenerateArgs) -> u8 {
    let params = GenParams {
        n_items: args.items,
        n_transactions: args.transactions,
        avg_len: args.avg_len,
        max_len: args.max_len,
        max_quantity: args.max_quantity,
        max_profit: args.max_profit,
        seed: args.seed,
    };
    let db = match generate(&params) {
        Ok(db) => db,
        Err(err) => {
            eprintln!("error: {err}");
            return 2;
        }
    };
    if write_results(args.output.as_deref(), &db.to_format_string()).is_err() {
        return 2;
    }
    eprintln!(
        "generated {} transaction(s) over {} item(s), total utility {} (seed {})",
        db.transactions().len(),
        db.item_count(),
        db.total_utility(),
        args.seed
    );
    0
}
