use std::collections::BTreeMap;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand};
use serde_json::json;

use repfact_core::claims::{claim_info, enumerate_claims, run_claim, ClaimReport, Params};
use repfact_core::factorize::shortest_widths_from;
use repfact_core::synthesis::{
    capped_prefix_oracle, default_suffix_depth, factor_width_oracle, guess_dfao, guess_dfao_auto,
    prefix_width_oracle, rep_at_most_oracle, verify_against_oracle,
};
use repfact_core::{
    paperfolding_word, sequence_prefix, Dfao, OracleSpec, RepetitionTable, SequenceId,
    UnfoldingInstructions,
};

#[derive(Parser)]
#[command(name = "repfact", version)]
#[command(about = "Repetition factorizations of automatic sequences")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List or run the registered checks
    Claims {
        #[command(subcommand)]
        action: ClaimsAction,
    },
    /// Shortest widths of all factors of a sequence prefix
    Widths {
        /// fibonacci | thue_morse | regular_paperfolding | rudin_shapiro (or fib, tm, rp, rs)
        #[arg(long)]
        seq: SequenceId,
        #[arg(long)]
        prefix: usize,
        #[arg(long)]
        max_len: usize,
        /// Print one `i n sw` line per factorizable factor
        #[arg(long)]
        rows: bool,
    },
    /// Guess a DFAO from an oracle and write it in the text format
    Synth {
        /// <seq>-width, <seq>-prefix-width, <seq>-rep<t> or <seq>-prefix-cap<L>
        #[arg(long)]
        oracle: String,
        /// Training box: every argument at most this value
        #[arg(long)]
        bound: u64,
        #[arg(long)]
        out: PathBuf,
        /// Default 12 digits for base 2, 16 for Zeckendorf, raised on conflicts
        #[arg(long)]
        suffix_depth: Option<usize>,
        /// Also compare with the oracle on this larger box
        #[arg(long)]
        verify: Option<u64>,
    },
    /// Widths of the factors of a finite paperfolding word
    Pf {
        /// Unfolding instructions, e.g. `-+++` or `-1,1,1,1`
        #[arg(long, allow_hyphen_values = true)]
        instructions: String,
        /// Print the width summary of every factor
        #[arg(long)]
        profile: bool,
    },
    /// Evaluate a machine file on naturals
    Eval { machine: PathBuf, args: Vec<u64> },
}

#[derive(Subcommand)]
enum ClaimsAction {
    List,
    /// Run one claim, or `all`
    Run {
        id: String,
        /// Overrides the claim's main bound
        #[arg(long)]
        bound: Option<u64>,
        /// Overrides any parameter, `name=value`
        #[arg(long = "set", value_name = "NAME=VALUE")]
        set: Vec<String>,
        /// Write the JSON report here
        #[arg(long)]
        report: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(e) = configure_threads() {
        eprintln!("error: {e:#}");
        return ExitCode::from(2);
    }
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn configure_threads() -> Result<()> {
    if let Ok(v) = std::env::var("REPFACT_THREADS") {
        let n: usize = v.parse().with_context(|| format!("REPFACT_THREADS={v}"))?;
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()?;
    }
    Ok(())
}

/// `Ok(false)` when a check ran and failed.
fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Claims { action } => claims(action),
        Command::Widths {
            seq,
            prefix,
            max_len,
            rows,
        } => widths(seq, prefix, max_len, rows),
        Command::Synth {
            oracle,
            bound,
            out,
            suffix_depth,
            verify,
        } => synth(&oracle, bound, &out, suffix_depth, verify),
        Command::Pf {
            instructions,
            profile,
        } => pf(&instructions, profile),
        Command::Eval { machine, args } => {
            let text = fs::read_to_string(&machine)
                .with_context(|| format!("reading {}", machine.display()))?;
            let m: Dfao = text.parse()?;
            println!("{}", m.evaluate_nat(&args)?);
            Ok(true)
        }
    }
}

fn claims(action: ClaimsAction) -> Result<bool> {
    match action {
        ClaimsAction::List => {
            for c in enumerate_claims() {
                let params: Vec<String> =
                    c.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
                println!("{:<22} {}  [{}]", c.id, c.description, params.join(" "));
            }
            Ok(true)
        }
        ClaimsAction::Run {
            id,
            bound,
            set,
            report,
        } => {
            let ids: Vec<&str> = if id == "all" {
                enumerate_claims().iter().map(|c| c.id).collect()
            } else {
                vec![id.as_str()]
            };
            let mut extra = Params::new();
            for kv in &set {
                let (k, v) = kv
                    .split_once('=')
                    .ok_or_else(|| anyhow!("`--set {kv}`: expected NAME=VALUE"))?;
                extra.insert(
                    k.to_string(),
                    v.parse().with_context(|| format!("`--set {kv}`"))?,
                );
            }
            if ids.len() > 1 && (bound.is_some() || !extra.is_empty()) {
                bail!("--bound and --set apply to a single claim");
            }
            let mut reports: Vec<ClaimReport> = Vec::new();
            for id in ids {
                let mut params = extra.clone();
                if let Some(b) = bound {
                    params.insert(claim_info(id)?.primary_param().to_string(), b);
                }
                let r = run_claim(id, &params)?;
                println!("{}", r.summary());
                reports.push(r);
            }
            let ok = reports.iter().all(ClaimReport::passed);
            if let Some(path) = report {
                let text = if reports.len() == 1 {
                    serde_json::to_string_pretty(&reports[0])?
                } else {
                    serde_json::to_string_pretty(&reports)?
                };
                fs::write(&path, text + "\n")
                    .with_context(|| format!("writing {}", path.display()))?;
            }
            Ok(ok)
        }
    }
}

fn widths(seq: SequenceId, prefix: usize, max_len: usize, rows: bool) -> Result<bool> {
    if prefix == 0 || max_len == 0 {
        bail!("--prefix and --max-len must be positive");
    }
    let w = sequence_prefix(seq, prefix);
    let table = RepetitionTable::with_max_len(&w, max_len);
    let mut hist: BTreeMap<u32, (usize, usize, usize)> = BTreeMap::new();
    for i in 0..w.len() {
        let row = shortest_widths_from(&table, i, max_len, None);
        for (n, &sw) in row.iter().enumerate().skip(1) {
            if sw == 0 {
                continue;
            }
            if rows {
                println!("{i} {n} {sw}");
            }
            hist.entry(sw).or_insert((0, i, n)).0 += 1;
        }
    }
    if !rows {
        println!("{seq}: factors of x[0..{prefix}) of length at most {max_len}");
        for (sw, (count, i, n)) in &hist {
            println!("width {sw}: {count} factors, first at i={i} n={n}");
        }
        println!(
            "max shortest width {}",
            hist.keys().last().copied().unwrap_or(0)
        );
    }
    Ok(true)
}

fn oracle_by_name(name: &str, bound: u64) -> Result<OracleSpec> {
    let unknown = || {
        anyhow!("unknown oracle `{name}`; use <seq>-width, <seq>-prefix-width, <seq>-rep<t> or <seq>-prefix-cap<L>")
    };
    let (seq, kind) = SequenceId::ALL
        .iter()
        .flat_map(|&s| [(s, s.name().to_string()), (s, short_name(s).to_string())])
        .filter_map(|(s, n)| {
            name.strip_prefix(&format!("{n}-"))
                .map(|rest| (s, rest.to_string()))
        })
        .next()
        .ok_or_else(unknown)?;
    if kind == "width" {
        Ok(factor_width_oracle(seq, bound))
    } else if kind == "prefix-width" {
        Ok(prefix_width_oracle(seq, bound))
    } else if let Some(t) = kind.strip_prefix("rep") {
        Ok(rep_at_most_oracle(
            seq,
            t.parse().map_err(|_| unknown())?,
            bound,
        ))
    } else if let Some(cap) = kind.strip_prefix("prefix-cap") {
        Ok(capped_prefix_oracle(
            seq,
            cap.parse().map_err(|_| unknown())?,
            bound,
        ))
    } else {
        Err(unknown())
    }
}

fn short_name(s: SequenceId) -> &'static str {
    match s {
        SequenceId::Fibonacci => "fib",
        SequenceId::ThueMorse => "tm",
        SequenceId::RegularPaperfolding => "rp",
        SequenceId::RudinShapiro => "rs",
    }
}

fn synth(
    oracle: &str,
    bound: u64,
    out: &PathBuf,
    suffix_depth: Option<usize>,
    verify: Option<u64>,
) -> Result<bool> {
    let o = oracle_by_name(oracle, bound)?;
    let (m, depth) = match suffix_depth {
        Some(d) => (guess_dfao(&o, d)?, d),
        None => guess_dfao_auto(&o)?,
    };
    let mut comments = vec![
        format!("oracle {} arity {}", o.name, o.arity),
        format!(
            "training bound {bound}, suffix depth {depth} (default {})",
            default_suffix_depth(o.numeration)
        ),
        format!(
            "{} states, {}",
            m.num_states(),
            m.dead_state()
                .map_or("no dead state".to_string(), |d| format!("dead state {d}"))
        ),
    ];
    let mut ok = true;
    if let Some(v) = verify {
        let r = verify_against_oracle(&m, &o, v)?;
        match &r.counterexample {
            None => comments.push(format!("verified on [0, {v}]^{}", o.arity)),
            Some((args, expected, got)) => {
                ok = false;
                comments.push(format!(
                    "counterexample {args:?}: oracle {expected}, machine {got}"
                ));
            }
        }
    }
    fs::write(out, m.to_text_with_comments(&comments, false))
        .with_context(|| format!("writing {}", out.display()))?;
    for c in &comments {
        println!("{c}");
    }
    Ok(ok)
}

fn pf(instructions: &str, profile: bool) -> Result<bool> {
    let u: UnfoldingInstructions = instructions.parse()?;
    if u.is_empty() || u.len() > 20 {
        bail!("between 1 and 20 instructions are supported");
    }
    let w = paperfolding_word(&u);
    let table = RepetitionTable::new(&w);
    let mut hist: BTreeMap<u32, usize> = BTreeMap::new();
    let (mut longest, mut longest_at) = (0, 0);
    for i in 0..w.len() {
        let row = shortest_widths_from(&table, i, w.len(), None);
        for (n, &sw) in row.iter().enumerate().skip(1) {
            if sw > 0 {
                *hist.entry(sw).or_insert(0) += 1;
                if n > longest {
                    (longest, longest_at) = (n, i);
                }
            }
        }
    }
    let max = hist.keys().last().copied().unwrap_or(0);
    if profile {
        let summary = json!({
            "instructions": u.to_string(),
            "length": w.len(),
            "max_shortest_width": max,
            "longest_factorizable": { "i": longest_at, "n": longest },
            "factors_by_width": hist,
        });
        println!("{}", serde_json::to_string_pretty(&summary)?);
    } else {
        println!("{w}");
        println!(
            "max shortest width {max}, longest factorizable factor i={longest_at} n={longest}"
        );
    }
    Ok(true)
}
