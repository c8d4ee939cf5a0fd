//! Block-by-block verification over ranges of `n` and lists of primes.

use std::collections::BTreeMap;
use std::time::{Instant, SystemTime, UNIX_EPOCH};

use blockwitness_core::alternating::{blocks_of_alt, restrict, split_class_values};
use blockwitness_core::blocks::blocks_of_sym;
use blockwitness_core::witness::{theorem_range, witness_for_block};
use blockwitness_core::{BlockLabel, Error, Group, Sign, WitnessCertificate};
use num_bigint::BigUint;
use rayon::prelude::*;
use serde::Serialize;

use crate::formats::{big, BlockLabelJson, CertificateJson, SCHEMA};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum GroupChoice {
    Sym,
    Alt,
    Both,
}

impl GroupChoice {
    fn includes(self, group: Group) -> bool {
        matches!(
            (self, group),
            (GroupChoice::Both, _) | (GroupChoice::Sym, Group::Sym) | (GroupChoice::Alt, Group::Alt)
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepParams {
    pub n_range: (usize, usize),
    pub primes: Vec<u64>,
    pub group: GroupChoice,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Witnessed,
    Failed,
}

/// The p-divisible character found in a block of `A_n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AltCharacterJson {
    pub source: Vec<usize>,
    pub half: Option<char>,
    pub degree: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlockOutcome {
    pub block: BlockLabelJson,
    pub p: u64,
    pub weight: usize,
    pub in_theorem_range: bool,
    pub status: Status,
    /// The `S_n` witness; for `A_n` blocks, the witness of the covering block.
    pub certificate: Option<CertificateJson>,
    pub alt_character: Option<AltCharacterJson>,
    /// `A_n` only: whether the block holds a rational-valued p-divisible
    /// character, when that is known.
    pub rational_p_divisible: Option<bool>,
    pub note: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Counters {
    pub total: usize,
    pub witnessed: usize,
    pub failed_in_range: usize,
    pub failed_out_of_range: usize,
    pub by_case: BTreeMap<String, usize>,
    pub rational_yes: usize,
    pub rational_no: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Timing {
    pub generated_at_unix: u64,
    pub elapsed_ms: u128,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub schema: &'static str,
    pub parameters: SweepParams,
    pub outcomes: Vec<BlockOutcome>,
    pub counters: Counters,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing: Option<Timing>,
}

impl SweepReport {
    pub fn all_witnessed(&self) -> bool {
        self.counters.witnessed == self.counters.total
    }

    /// 0 when every block is witnessed, 4 when a block inside the proven
    /// range fails, 3 when failures are confined to blocks outside it.
    pub fn exit_code(&self) -> i32 {
        if self.counters.failed_in_range > 0 {
            4
        } else if self.counters.failed_out_of_range > 0 {
            3
        } else {
            0
        }
    }

    pub fn failures(&self) -> impl Iterator<Item = &BlockOutcome> {
        self.outcomes.iter().filter(|o| o.status == Status::Failed)
    }

    pub fn text(&self) -> String {
        let mut out = String::new();
        for o in &self.outcomes {
            let found = match (&o.alt_character, &o.certificate) {
                (Some(z), _) => {
                    let half = z.half.map(|s| format!(" half {s}")).unwrap_or_default();
                    format!("zeta of {}{half}", partition_text(&z.source))
                }
                (None, Some(cert)) => format!("chi of {} [{}]", partition_text(&cert.partition), cert.case_tag),
                (None, None) => String::new(),
            };
            let status = match o.status {
                Status::Witnessed => "witnessed",
                Status::Failed => "FAILED",
            };
            out.push_str(&format!("{:<14} p={:<3} {status:<9} {found}", o.block.text, o.p));
            if let Some(note) = &o.note {
                out.push_str(&format!("  ({note})"));
            }
            out.push('\n');
        }
        let c = &self.counters;
        out.push_str(&format!(
            "blocks: {}  witnessed: {}  failed in range: {}  failed out of range: {}\n",
            c.total, c.witnessed, c.failed_in_range, c.failed_out_of_range
        ));
        out
    }
}

fn partition_text(parts: &[usize]) -> String {
    let inner: Vec<String> = parts.iter().map(usize::to_string).collect();
    format!("({})", inner.join(","))
}

struct Computed {
    n: usize,
    p: u64,
    c: usize,
    in_range: bool,
    result: Result<WitnessCertificate, Error>,
}

fn compute(n: usize, p: u64, c: usize) -> Computed {
    let in_range = theorem_range(n, p, c).is_ok();
    let result = witness_for_block(n, p, c);
    match &result {
        Ok(cert) => log::debug!("S_{n}:B_{c} p={p}: {} [{}]", cert.partition, cert.case_tag),
        Err(e) => log::info!("S_{n}:B_{c} p={p}: {e}"),
    }
    Computed { n, p, c, in_range, result }
}

fn sym_outcome(comp: &Computed) -> BlockOutcome {
    let label = BlockLabel { group: Group::Sym, n: comp.n, c: comp.c, sign: None };
    let (status, certificate, note) = match &comp.result {
        Ok(cert) => (Status::Witnessed, Some(cert.into()), None),
        Err(e) => (Status::Failed, None, Some(e.to_string())),
    };
    BlockOutcome {
        block: (&label).into(),
        p: comp.p,
        weight: label.weight().expect("listed blocks are valid"),
        in_theorem_range: comp.in_range,
        status,
        certificate,
        alt_character: None,
        rational_p_divisible: None,
        note,
    }
}

fn alt_outcome(comp: &Computed, label: BlockLabel) -> BlockOutcome {
    let weight = label.weight().expect("listed blocks are valid");
    let mut outcome = BlockOutcome {
        block: (&label).into(),
        p: comp.p,
        weight,
        in_theorem_range: comp.in_range,
        status: Status::Failed,
        certificate: None,
        alt_character: None,
        rational_p_divisible: None,
        note: None,
    };
    let split_block = label.sign.is_some();
    if split_block {
        // the block's only character is a half of χ^{γ_c}, never rational
        let irrational = split_class_values(comp.c).map(|v| v.all_irrational()).unwrap_or(false);
        if irrational {
            outcome.rational_p_divisible = Some(false);
            outcome.note = Some("no rational p-divisible (weight 0)".into());
        }
    }
    let cert = match &comp.result {
        Ok(cert) => cert,
        Err(e) => {
            let why = e.to_string();
            outcome.note = Some(match outcome.note.take() {
                Some(n) => format!("{n}; {why}"),
                None => why,
            });
            return outcome;
        }
    };
    let zetas = restrict(&cert.partition);
    let zeta = match label.sign {
        Some(Sign::Minus) => zetas.last(),
        _ => zetas.first(),
    }
    .expect("restriction is non-empty");
    let divisible = (&zeta.degree % BigUint::from(comp.p)) == BigUint::ZERO;
    outcome.certificate = Some(cert.into());
    outcome.alt_character = Some(AltCharacterJson {
        source: zeta.source.parts().to_vec(),
        half: zeta.half.map(Sign::as_char),
        degree: big(&zeta.degree),
    });
    if divisible {
        outcome.status = Status::Witnessed;
        if !zeta.split {
            // restriction of a rational character stays rational
            outcome.rational_p_divisible = Some(true);
        }
    } else {
        outcome.note = Some(format!("restricted degree {} is not divisible by {}", zeta.degree, comp.p));
    }
    outcome
}

/// Runs the sweep on a pool of `jobs` workers. Outcomes come back in
/// `(n, p, group, c, sign)` order whatever the pool size.
pub fn run_sweep(params: &SweepParams, jobs: usize) -> SweepReport {
    let started = Instant::now();
    let (lo, hi) = params.n_range;
    let tuples: Vec<(usize, u64, usize)> = (lo..=hi)
        .flat_map(|n| params.primes.iter().flat_map(move |&p| blocks_of_sym(n).into_iter().map(move |b| (n, p, b.c))))
        .collect();
    log::info!("sweeping {} (n, p, c) tuples on {jobs} workers", tuples.len());
    let pool = rayon::ThreadPoolBuilder::new().num_threads(jobs.max(1)).build().expect("thread pool");
    let computed: Vec<Computed> = pool.install(|| tuples.par_iter().map(|&(n, p, c)| compute(n, p, c)).collect());

    let mut outcomes = Vec::new();
    let mut i = 0;
    while i < computed.len() {
        let (n, p) = (computed[i].n, computed[i].p);
        let j = i + computed[i..].iter().take_while(|x| x.n == n && x.p == p).count();
        let group = &computed[i..j];
        if params.group.includes(Group::Sym) {
            outcomes.extend(group.iter().map(sym_outcome));
        }
        if params.group.includes(Group::Alt) {
            for label in blocks_of_alt(n) {
                let comp = group.iter().find(|x| x.c == label.c).expect("every A_n block is covered");
                outcomes.push(alt_outcome(comp, label));
            }
        }
        i = j;
    }

    let mut counters = Counters { total: outcomes.len(), ..Counters::default() };
    for o in &outcomes {
        match (&o.status, o.in_theorem_range) {
            (Status::Witnessed, _) => counters.witnessed += 1,
            (Status::Failed, true) => counters.failed_in_range += 1,
            (Status::Failed, false) => counters.failed_out_of_range += 1,
        }
        if let (Status::Witnessed, Some(cert)) = (&o.status, &o.certificate) {
            *counters.by_case.entry(cert.case_tag.to_string()).or_default() += 1;
        }
        match o.rational_p_divisible {
            Some(true) => counters.rational_yes += 1,
            Some(false) => counters.rational_no += 1,
            None => {}
        }
    }
    let generated_at_unix = SystemTime::now().duration_since(UNIX_EPOCH).map(|d| d.as_secs()).unwrap_or(0);
    SweepReport {
        schema: SCHEMA,
        parameters: params.clone(),
        outcomes,
        counters,
        timing: Some(Timing { generated_at_unix, elapsed_ms: started.elapsed().as_millis() }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(lo: usize, hi: usize, primes: &[u64], group: GroupChoice) -> SweepParams {
        SweepParams { n_range: (lo, hi), primes: primes.to_vec(), group }
    }

    #[test]
    fn counters_add_up() {
        let report = run_sweep(&params(10, 20, &[3, 5], GroupChoice::Both), 2);
        let c = &report.counters;
        assert_eq!(c.witnessed + c.failed_in_range + c.failed_out_of_range, c.total);
        assert_eq!(c.total, report.outcomes.len());
        assert_eq!(c.by_case.values().sum::<usize>(), c.witnessed);
    }

    #[test]
    fn job_count_does_not_change_content() {
        let p = params(60, 75, &[3, 11], GroupChoice::Both);
        let mut one = run_sweep(&p, 1);
        let mut four = run_sweep(&p, 4);
        one.timing = None;
        four.timing = None;
        assert_eq!(one, four);
    }

    #[test]
    fn split_blocks_are_flagged() {
        let report = run_sweep(&params(15, 15, &[3], GroupChoice::Alt), 1);
        let split: Vec<_> = report.outcomes.iter().filter(|o| o.block.sign.is_some()).collect();
        assert_eq!(split.len(), 2);
        for o in split {
            assert_eq!(o.rational_p_divisible, Some(false));
            assert!(o.note.as_deref().unwrap().contains("no rational p-divisible (weight 0)"));
            // deg γ_5 = 2^11·11·13 has no factor 3
            assert_eq!(o.status, Status::Failed);
            assert!(!o.in_theorem_range);
        }
        assert_eq!(report.exit_code(), 3);
    }

    #[test]
    fn example_block() {
        let report = run_sweep(&params(75, 75, &[11], GroupChoice::Both), 1);
        let o = report.outcomes.iter().find(|o| o.block.text == "A_75:b_5").unwrap();
        assert_eq!(o.status, Status::Witnessed);
        assert_eq!(o.alt_character.as_ref().unwrap().source, vec![61, 6, 5, 2, 1]);
        assert_eq!(o.rational_p_divisible, Some(true));
    }
}
