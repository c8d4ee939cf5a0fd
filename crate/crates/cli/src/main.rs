use std::io::Write;
use std::process::ExitCode;

use blockwitness::formats::{
    big, certificate_text, parse_beta_set, parse_block_label, parse_cycle_type, parse_list,
    parse_partition, parse_range, split_values_text, BlockLabelJson, CertificateJson,
    RationalityJson, SplitValuesJson, SCHEMA,
};
use blockwitness::oracle::{run_oracle, DEFAULT_N_MAX_BUDGET};
use blockwitness::sweep::{run_sweep, GroupChoice, SweepParams};
use blockwitness::tables::character_table;
use blockwitness::{exit_code, EXIT_OK, EXIT_ORACLE_MISMATCH, EXIT_OUT_OF_RANGE, EXIT_PARSE};
use blockwitness_core::alternating::{blocks_of_alt, rationality, split_class_values};
use blockwitness_core::blocks::{block_of, macdonald_p_divisible};
use blockwitness_core::character::{degree, degree_valuation, is_prime, mn_value};
use blockwitness_core::witness::construct_witness;
use blockwitness_core::{BetaSet, Error, Partition, Sign};
use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

#[derive(Parser)]
#[command(name = "blockwitness", version, about = "p-divisible characters in 2-blocks of symmetric and alternating groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// e-core and e-weight of a partition
    Core {
        partition: String,
        #[arg(long)]
        e: usize,
        /// also draw the abacus before and after pushing beads up
        #[arg(long)]
        abacus: bool,
        #[arg(long)]
        json: bool,
    },
    /// Draw the e-abacus of a beta-set `{9,7,4,3,1}` or of a partition
    Abacus {
        input: String,
        #[arg(long)]
        e: usize,
        /// number of beads when the input is a partition
        #[arg(long)]
        beads: Option<usize>,
        /// slide every bead to the top of its runner first
        #[arg(long)]
        push: bool,
        #[arg(long)]
        rows: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// The 2-block of a partition, or a block label such as `S_75:B_5`
    Block {
        input: String,
        #[arg(long)]
        json: bool,
    },
    /// Construct and check a p-divisible witness in the block B_c of S_n
    Witness {
        n: usize,
        p: u64,
        c: usize,
        #[arg(long)]
        json: bool,
    },
    /// Find a p-divisible character in every 2-block over a range of n
    Scan {
        /// inclusive range such as `74..90`
        #[arg(long = "n")]
        n_range: String,
        /// comma-separated primes
        #[arg(long = "p")]
        primes: String,
        #[arg(long, value_enum, default_value = "sym")]
        group: GroupChoice,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long)]
        json: bool,
        /// leave out the timestamp and elapsed time
        #[arg(long)]
        stable: bool,
    },
    /// Compare the core criterion with the degree valuation on all partitions
    Oracle {
        #[arg(long)]
        n_max: usize,
        #[arg(long = "p", default_value = "3,5,7,11,13")]
        primes: String,
        /// largest n-max accepted
        #[arg(long, default_value_t = DEFAULT_N_MAX_BUDGET)]
        budget: usize,
        /// accept p = 2
        #[arg(long)]
        allow_even: bool,
        #[arg(long)]
        json: bool,
    },
    /// The 2-blocks of A_n, with split-class values of the split blocks
    AnBlocks {
        n: usize,
        #[arg(long)]
        json: bool,
    },
    /// Whether an A_n block holds a rational-valued p-divisible character
    Rational {
        label: String,
        #[arg(long)]
        p: u64,
        #[arg(long)]
        json: bool,
    },
    /// Degree of a character, optionally with its p-adic valuation
    Degree {
        partition: String,
        #[arg(long)]
        p: Option<u64>,
        #[arg(long)]
        json: bool,
    },
    /// Murnaghan-Nakayama value χ^λ(ρ), or a full table with `--table n`
    Mn {
        partition: Option<String>,
        cycle_type: Option<String>,
        #[arg(long)]
        table: Option<usize>,
        #[arg(long)]
        json: bool,
    },
}

struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure { code: exit_code(&e), message: e.to_string() }
    }
}

impl From<blockwitness::formats::ParseError> for Failure {
    fn from(e: blockwitness::formats::ParseError) -> Self {
        Failure { code: EXIT_PARSE, message: e.0 }
    }
}

fn parse_failure(message: impl Into<String>) -> Failure {
    Failure { code: EXIT_PARSE, message: message.into() }
}

type Outcome = Result<i32, Failure>;

/// Writes to stdout; a closed pipe (`| head`) is not an error.
fn emit(json: bool, value: &impl Serialize, text: impl FnOnce() -> String) {
    let body = if json {
        let mut s = serde_json::to_string_pretty(value).expect("serializable");
        s.push('\n');
        s
    } else {
        text()
    };
    let _ = std::io::stdout().lock().write_all(body.as_bytes());
}

fn cmd_core(partition: &str, e: usize, abacus: bool, json: bool) -> Outcome {
    if e == 0 {
        return Err(parse_failure("e must be positive"));
    }
    let lambda = parse_partition(partition)?;
    let (core, weight) = lambda.core_with_weight(e);
    let beta = BetaSet::minimal(&lambda);
    let before = beta.abacus(e);
    let after = before.top_justified();
    let rows = before.default_rows();
    let value = json!({
        "schema": SCHEMA,
        "partition": lambda.parts(),
        "e": e,
        "core": core.parts(),
        "weight": weight,
        "abacus": abacus.then(|| json!({
            "beta_set": beta.elements(),
            "before": before.render_rows(rows),
            "after": after.render_rows(rows),
        })),
    });
    emit(json, &value, || {
        let mut out = format!("core: {core}\nweight: {weight}\n");
        if abacus {
            out.push_str(&format!("beta-set: {beta}\n{}\npushed:\n{}", before.render_rows(rows), after.render_rows(rows)));
        }
        out
    });
    Ok(EXIT_OK)
}

fn cmd_abacus(input: &str, e: usize, beads: Option<usize>, push: bool, rows: Option<usize>, json: bool) -> Outcome {
    if e == 0 {
        return Err(parse_failure("e must be positive"));
    }
    let beta = if input.trim_start().starts_with('{') {
        parse_beta_set(input)?
    } else {
        let lambda = parse_partition(input)?;
        match beads {
            Some(t) => BetaSet::of_partition(&lambda, t)?,
            None => BetaSet::minimal(&lambda),
        }
    };
    let mut config = beta.abacus(e);
    if push {
        config = config.top_justified();
    }
    let rows = rows.unwrap_or_else(|| beta.abacus(e).default_rows());
    let picture = config.render_rows(rows);
    let shown = config.to_beta_set();
    let value = json!({
        "schema": SCHEMA,
        "e": e,
        "beta_set": shown.elements(),
        "partition": shown.partition().parts(),
        "runners": config.runners(),
        "render": picture,
    });
    emit(json, &value, || format!("beta-set: {shown}\npartition: {}\n{picture}", shown.partition()));
    Ok(EXIT_OK)
}

fn cmd_block(input: &str, json: bool) -> Outcome {
    let (label, partition) = if input.contains(':') {
        (parse_block_label(input)?, None)
    } else {
        let lambda = parse_partition(input)?;
        if lambda.is_empty() {
            return Err(parse_failure("the empty partition lies in no block"));
        }
        (block_of(&lambda), Some(lambda))
    };
    let weight = label.weight()?;
    let core = label.core();
    let alt: Vec<BlockLabelJson> = match &partition {
        Some(_) => blocks_of_alt(label.n).iter().filter(|b| b.c == label.c).map(Into::into).collect(),
        None => Vec::new(),
    };
    let value = json!({
        "schema": SCHEMA,
        "block": BlockLabelJson::from(&label),
        "core": core.parts(),
        "weight": weight,
        "partition": partition.as_ref().map(|l| l.parts()),
        "alternating_blocks": alt,
    });
    emit(json, &value, || {
        let mut out = format!("block: {label}\ncore: {core}\nweight: {weight}\n");
        if !alt.is_empty() {
            let names: Vec<&str> = alt.iter().map(|b| b.text.as_str()).collect();
            out.push_str(&format!("restriction lies in: {}\n", names.join(", ")));
        }
        out
    });
    Ok(EXIT_OK)
}

fn cmd_witness(n: usize, p: u64, c: usize, json: bool) -> Outcome {
    if !is_prime(p) {
        return Err(Error::NotPrime(p).into());
    }
    let cert = match construct_witness(n, p, c) {
        Err(Error::OutOfTheoremRange(why)) => {
            return Err(Failure { code: EXIT_OUT_OF_RANGE, message: format!("out of theorem range: {why}") })
        }
        other => other?,
    };
    emit(json, &CertificateJson::from(&cert), || certificate_text(&cert));
    Ok(EXIT_OK)
}

fn cmd_scan(n_range: &str, primes: &str, group: GroupChoice, jobs: usize, json: bool, stable: bool) -> Outcome {
    let n_range = parse_range(n_range)?;
    let primes = parse_list(primes)?;
    if let Some(&q) = primes.iter().find(|&&q| !is_prime(q)) {
        return Err(Error::NotPrime(q).into());
    }
    let mut report = run_sweep(&SweepParams { n_range, primes, group }, jobs);
    if stable {
        report.timing = None;
    }
    if let Some(t) = &report.timing {
        log::info!("scan finished in {} ms", t.elapsed_ms);
    }
    emit(json, &report, || report.text());
    Ok(report.exit_code())
}

fn cmd_oracle(n_max: usize, primes: &str, budget: usize, allow_even: bool, json: bool) -> Outcome {
    if n_max > budget {
        return Err(parse_failure(format!("n-max {n_max} exceeds the budget {budget}; raise it with --budget")));
    }
    let primes = parse_list(primes)?;
    if primes.contains(&2) && !allow_even {
        return Err(parse_failure("p = 2 is outside the odd-prime scope; pass --allow-even to run it anyway"));
    }
    let report = run_oracle(n_max, &primes)?;
    emit(json, &report, || {
        format!(
            "checked: {}\ndivisible: {}\nmismatches: {}\n{}\n",
            report.checked,
            report.divisible,
            report.mismatches.len(),
            if report.passed() { "pass" } else { "FAIL" }
        )
    });
    Ok(if report.passed() { EXIT_OK } else { EXIT_ORACLE_MISMATCH })
}

fn cmd_an_blocks(n: usize, json: bool) -> Outcome {
    if n == 0 {
        return Err(parse_failure("n must be positive"));
    }
    let mut entries = Vec::new();
    let mut text = String::new();
    for label in blocks_of_alt(n) {
        let weight = label.weight()?;
        let values = match label.sign {
            Some(_) => Some(split_class_values(label.c)?),
            None => None,
        };
        text.push_str(&format!("{label}  weight {weight}\n"));
        if let (Some(v), Some(Sign::Plus)) = (&values, label.sign) {
            for line in split_values_text(v).lines() {
                text.push_str(&format!("    {line}\n"));
            }
        }
        entries.push(json!({
            "block": BlockLabelJson::from(&label),
            "weight": weight,
            "split_values": values.as_ref().map(SplitValuesJson::from),
        }));
    }
    emit(json, &json!({"schema": SCHEMA, "n": n, "blocks": entries}), || text);
    Ok(EXIT_OK)
}

fn cmd_rational(label: &str, p: u64, json: bool) -> Outcome {
    let label = parse_block_label(label)?;
    let verdict = match rationality(&label, p) {
        Err(Error::OutOfTheoremRange(why)) => {
            return Err(Failure { code: EXIT_OUT_OF_RANGE, message: format!("out of proven range: {why}") })
        }
        other => other?,
    };
    emit(json, &RationalityJson::from(&verdict), || {
        let mut out = format!("block: {label}\np: {p}\nrational p-divisible: {}\n", verdict.answer);
        if let (Some(cert), Some(zeta)) = (&verdict.witness, &verdict.restricted) {
            out.push_str(&format!("witness: zeta of {} (degree {})\n", cert.partition, zeta.degree));
        }
        if let Some(v) = &verdict.split_values {
            out.push_str(&split_values_text(v));
        }
        out
    });
    Ok(EXIT_OK)
}

fn cmd_degree(partition: &str, p: Option<u64>, json: bool) -> Outcome {
    let lambda = parse_partition(partition)?;
    let deg = degree(&lambda);
    let divisibility = match p {
        Some(p) => Some((p, degree_valuation(&lambda, p)?, macdonald_p_divisible(&lambda, p)?)),
        None => None,
    };
    let value = json!({
        "schema": SCHEMA,
        "partition": lambda.parts(),
        "degree": big(&deg),
        "p": divisibility.map(|d| d.0),
        "valuation": divisibility.map(|d| d.1),
        "p_divisible_by_cores": divisibility.map(|d| d.2),
    });
    emit(json, &value, || {
        let mut out = format!("degree: {deg}\n");
        if let Some((p, v, by_cores)) = divisibility {
            out.push_str(&format!("v_{p}: {v}\np-divisible by cores: {by_cores}\n"));
        }
        out
    });
    Ok(EXIT_OK)
}

fn cmd_mn(partition: Option<String>, cycle_type: Option<String>, table: Option<usize>, json: bool) -> Outcome {
    if let Some(n) = table {
        let t = character_table(n)?;
        emit(json, &t, || t.text());
        return Ok(EXIT_OK);
    }
    let (Some(lambda), Some(rho)) = (partition, cycle_type) else {
        return Err(parse_failure("give a partition and a cycle type, or --table n"));
    };
    let lambda: Partition = parse_partition(&lambda)?;
    let rho = parse_cycle_type(&rho)?;
    let value = mn_value(&lambda, &rho)?;
    emit(
        json,
        &json!({"schema": SCHEMA, "partition": lambda.parts(), "cycle_type": rho.cycles().parts(), "value": big(&value)}),
        || format!("{value}\n"),
    );
    Ok(EXIT_OK)
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Core { partition, e, abacus, json } => cmd_core(&partition, e, abacus, json),
        Command::Abacus { input, e, beads, push, rows, json } => cmd_abacus(&input, e, beads, push, rows, json),
        Command::Block { input, json } => cmd_block(&input, json),
        Command::Witness { n, p, c, json } => cmd_witness(n, p, c, json),
        Command::Scan { n_range, primes, group, jobs, json, stable } => {
            cmd_scan(&n_range, &primes, group, jobs, json, stable)
        }
        Command::Oracle { n_max, primes, budget, allow_even, json } => {
            cmd_oracle(n_max, &primes, budget, allow_even, json)
        }
        Command::AnBlocks { n, json } => cmd_an_blocks(n, json),
        Command::Rational { label, p, json } => cmd_rational(&label, p, json),
        Command::Degree { partition, p, json } => cmd_degree(&partition, p, json),
        Command::Mn { partition, cycle_type, table, json } => cmd_mn(partition, cycle_type, table, json),
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::new().filter_or("BLOCKWITNESS_LOG", "warn")).init();
    let code = match run(Cli::parse()) {
        Ok(code) => code,
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            failure.code
        }
    };
    ExitCode::from(code as u8)
}
