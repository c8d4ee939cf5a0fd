//! Text parsing and JSON shapes for partitions, beta-sets, block labels,
//! certificates and quadratic values.
//!
//! Big integers are written to JSON as decimal strings so that no value is
//! ever rounded by a consumer.

use std::fmt;

use blockwitness_core::alternating::{RationalityVerdict, SplitClassValues};
use blockwitness_core::{
    BetaSet, BlockLabel, CertificateFacts, CycleType, Group, Partition, QuadraticValue, Sign,
    WitnessCertificate,
};
use serde::Serialize;

pub const SCHEMA: &str = "v1";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError(pub String);

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for ParseError {}

fn fail<T>(what: &str, input: &str, why: impl fmt::Display) -> Result<T, ParseError> {
    Err(ParseError(format!("cannot parse {what} {input:?}: {why}")))
}

fn strip_delims(s: &str, open: char, close: char) -> &str {
    let s = s.trim();
    match s.strip_prefix(open).and_then(|t| t.strip_suffix(close)) {
        Some(inner) => inner.trim(),
        None => s,
    }
}

fn parse_usize(what: &str, input: &str, tok: &str) -> Result<usize, ParseError> {
    match tok.trim().parse() {
        Ok(v) => Ok(v),
        Err(e) => fail(what, input, format_args!("{tok:?}: {e}")),
    }
}

/// `(5,4,2,2,1)`, `5,4,2,2,1`, `(2^2,1)` or `()`. Parts must be weakly
/// decreasing; zero parts are dropped.
pub fn parse_partition(input: &str) -> Result<Partition, ParseError> {
    let inner = strip_delims(input, '(', ')');
    let mut parts = Vec::new();
    if !inner.is_empty() {
        for tok in inner.split(',') {
            match tok.split_once('^') {
                Some((part, times)) => {
                    let part = parse_usize("partition", input, part)?;
                    let times = parse_usize("partition", input, times)?;
                    parts.extend(std::iter::repeat_n(part, times));
                }
                None => parts.push(parse_usize("partition", input, tok)?),
            }
        }
    }
    Partition::new(parts).or_else(|e| fail("partition", input, e))
}

pub fn parse_cycle_type(input: &str) -> Result<CycleType, ParseError> {
    parse_partition(input).map(CycleType::new)
}

/// `{9,7,4,3,1}` in any order; elements must be distinct.
pub fn parse_beta_set(input: &str) -> Result<BetaSet, ParseError> {
    let inner = strip_delims(input, '{', '}');
    let elements = if inner.is_empty() {
        Vec::new()
    } else {
        inner.split(',').map(|t| parse_usize("beta-set", input, t)).collect::<Result<_, _>>()?
    };
    BetaSet::new(elements).or_else(|e| fail("beta-set", input, e))
}

/// `S_75:B_5`, `A_75:b_5`, `A_15:b_5^+`.
pub fn parse_block_label(input: &str) -> Result<BlockLabel, ParseError> {
    let s = input.trim();
    let (group, letter, rest) = if let Some(rest) = s.strip_prefix("S_") {
        (Group::Sym, "B_", rest)
    } else if let Some(rest) = s.strip_prefix("A_") {
        (Group::Alt, "b_", rest)
    } else {
        return fail("block label", input, "expected S_n:B_c or A_n:b_c");
    };
    let Some((n, block)) = rest.split_once(':') else {
        return fail("block label", input, "missing ':'");
    };
    let n = parse_usize("block label", input, n)?;
    let Some(block) = block.strip_prefix(letter) else {
        return fail("block label", input, format_args!("expected {letter}c after the colon"));
    };
    let (c, sign) = match block.split_once('^') {
        Some((c, "+")) => (c, Some(Sign::Plus)),
        Some((c, "-")) => (c, Some(Sign::Minus)),
        Some(_) => return fail("block label", input, "sign must be + or -"),
        None => (block, None),
    };
    let c = parse_usize("block label", input, c)?;
    let label = BlockLabel { group, n, c, sign };
    label.validate().or_else(|e| fail("block label", input, e))?;
    Ok(label)
}

/// `74..90` (inclusive) or a single `75`.
pub fn parse_range(input: &str) -> Result<(usize, usize), ParseError> {
    let (lo, hi) = match input.split_once("..") {
        Some((lo, hi)) => (lo, hi.strip_prefix('=').unwrap_or(hi)),
        None => (input, input),
    };
    let lo = parse_usize("range", input, lo)?;
    let hi = parse_usize("range", input, hi)?;
    if lo > hi {
        return fail("range", input, "empty range");
    }
    Ok((lo, hi))
}

/// `3,5,7`
pub fn parse_list(input: &str) -> Result<Vec<u64>, ParseError> {
    let list: Vec<u64> = input
        .split(',')
        .map(|t| t.trim().parse::<u64>().or_else(|e| fail("list", input, e)))
        .collect::<Result<_, _>>()?;
    if list.is_empty() {
        return fail("list", input, "empty list");
    }
    Ok(list)
}

pub fn big(v: impl ToString) -> String {
    v.to_string()
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct RationalJson {
    pub numerator: String,
    pub denominator: String,
}

impl RationalJson {
    pub fn new(q: &num_rational::BigRational) -> Self {
        RationalJson { numerator: big(q.numer()), denominator: big(q.denom()) }
    }
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct QuadraticJson {
    pub rational_part: RationalJson,
    pub surd_coefficient: RationalJson,
    pub radicand: String,
    pub text: String,
    pub rational: bool,
}

impl From<&QuadraticValue> for QuadraticJson {
    fn from(v: &QuadraticValue) -> Self {
        QuadraticJson {
            rational_part: RationalJson::new(&v.rational_part),
            surd_coefficient: RationalJson::new(&v.surd_coefficient),
            radicand: big(&v.radicand),
            text: v.to_string(),
            rational: v.is_rational(),
        }
    }
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq, PartialOrd, Ord)]
pub struct BlockLabelJson {
    pub group: &'static str,
    pub n: usize,
    pub c: usize,
    pub sign: Option<char>,
    pub text: String,
}

impl From<&BlockLabel> for BlockLabelJson {
    fn from(b: &BlockLabel) -> Self {
        BlockLabelJson {
            group: match b.group {
                Group::Sym => "sym",
                Group::Alt => "alt",
            },
            n: b.n,
            c: b.c,
            sign: b.sign.map(Sign::as_char),
            text: b.to_string(),
        }
    }
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct DecompositionJson {
    pub a: u64,
    pub k: u32,
    pub p_power: u64,
    pub r: u64,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct FactsJson {
    pub size_ok: bool,
    pub core_ok: bool,
    pub pk_core_exceeds_r: bool,
    pub p_divisible_by_valuation: bool,
    pub self_conjugate: bool,
}

impl From<&CertificateFacts> for FactsJson {
    fn from(f: &CertificateFacts) -> Self {
        FactsJson {
            size_ok: f.size_ok,
            core_ok: f.core_ok,
            pk_core_exceeds_r: f.pk_core_exceeds_r,
            p_divisible_by_valuation: f.p_divisible_by_valuation,
            self_conjugate: f.self_conjugate,
        }
    }
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct CertificateJson {
    pub schema: &'static str,
    pub n: usize,
    pub p: u64,
    pub c: usize,
    pub decomposition: DecompositionJson,
    /// Condition (a)..(h) met by `(n, p, c)`, null outside the proven range.
    pub condition: Option<&'static str>,
    /// `a`..`h` for a construction, `search` for a searched witness.
    pub case_tag: &'static str,
    pub beta_set: Vec<usize>,
    pub partition: Vec<usize>,
    pub facts: FactsJson,
    pub valid: bool,
}

impl From<&WitnessCertificate> for CertificateJson {
    fn from(cert: &WitnessCertificate) -> Self {
        let d = &cert.decomposition;
        CertificateJson {
            schema: SCHEMA,
            n: cert.n,
            p: cert.p,
            c: cert.c,
            decomposition: DecompositionJson { a: d.a, k: d.k, p_power: d.p_power(), r: d.r },
            condition: cert.condition.map(|t| t.as_str()),
            case_tag: cert.case_tag.as_str(),
            beta_set: cert.beta_set.elements().to_vec(),
            partition: cert.partition.parts().to_vec(),
            facts: FactsJson::from(&cert.facts),
            valid: cert.is_valid(),
        }
    }
}

pub fn certificate_text(cert: &WitnessCertificate) -> String {
    let d = &cert.decomposition;
    let f = &cert.facts;
    let condition = cert.condition.map_or("none", |t| t.as_str());
    format!(
        "block: S_{}:B_{}\n\
         p: {}\n\
         decomposition: {} = {}*{}^{} + {}\n\
         condition: {}\n\
         case: {}\n\
         beta-set: {}\n\
         partition: {}\n\
         size_ok: {}\n\
         core_ok: {}\n\
         pk_core_exceeds_r: {}\n\
         p_divisible_by_valuation: {}\n\
         self_conjugate: {}\n\
         valid: {}\n",
        cert.n,
        cert.c,
        cert.p,
        d.n,
        d.a,
        d.p,
        d.k,
        d.r,
        condition,
        cert.case_tag,
        cert.beta_set,
        cert.partition,
        f.size_ok,
        f.core_ok,
        f.pk_core_exceeds_r,
        f.p_divisible_by_valuation,
        f.self_conjugate,
        cert.is_valid()
    )
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct SplitValuesJson {
    pub c: usize,
    pub cycle_type: Vec<usize>,
    pub epsilon: String,
    pub hook_product: String,
    pub radicand: String,
    pub plus_on_plus: QuadraticJson,
    pub minus_on_plus: QuadraticJson,
    pub plus_on_minus: QuadraticJson,
    pub minus_on_minus: QuadraticJson,
    pub irrational: bool,
}

impl From<&SplitClassValues> for SplitValuesJson {
    fn from(v: &SplitClassValues) -> Self {
        SplitValuesJson {
            c: v.c,
            cycle_type: v.cycle_type.cycles().parts().to_vec(),
            epsilon: big(&v.epsilon),
            hook_product: big(&v.hook_product),
            radicand: big(&v.radicand),
            plus_on_plus: (&v.plus_on_plus).into(),
            minus_on_plus: (&v.minus_on_plus).into(),
            plus_on_minus: (&v.plus_on_minus).into(),
            minus_on_minus: (&v.minus_on_minus).into(),
            irrational: v.all_irrational(),
        }
    }
}

pub fn split_values_text(v: &SplitClassValues) -> String {
    format!(
        "cycle type: {}\n\
         epsilon: {}\n\
         radicand: {}\n\
         zeta+ on alpha+: {}\n\
         zeta- on alpha+: {}\n\
         zeta+ on alpha-: {}\n\
         zeta- on alpha-: {}\n",
        v.cycle_type.cycles(),
        v.epsilon,
        v.radicand,
        v.plus_on_plus,
        v.minus_on_plus,
        v.plus_on_minus,
        v.minus_on_minus
    )
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct RationalityJson {
    pub schema: &'static str,
    pub block: BlockLabelJson,
    pub p: u64,
    pub rational_p_divisible: bool,
    pub witness: Option<CertificateJson>,
    pub restricted_degree: Option<String>,
    pub split_values: Option<SplitValuesJson>,
}

impl From<&RationalityVerdict> for RationalityJson {
    fn from(v: &RationalityVerdict) -> Self {
        RationalityJson {
            schema: SCHEMA,
            block: (&v.block).into(),
            p: v.p,
            rational_p_divisible: v.answer,
            witness: v.witness.as_ref().map(Into::into),
            restricted_degree: v.restricted.as_ref().map(|z| big(&z.degree)),
            split_values: v.split_values.as_ref().map(Into::into),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partitions() {
        let want = Partition::new(vec![5, 4, 2, 2, 1]).unwrap();
        assert_eq!(parse_partition("(5,4,2,2,1)"), Ok(want.clone()));
        assert_eq!(parse_partition(" 5, 4, 2,2,1 "), Ok(want.clone()));
        assert_eq!(parse_partition("(5,4,2^2,1)"), Ok(want));
        assert_eq!(parse_partition("()"), Ok(Partition::empty()));
        assert_eq!(parse_partition("(1^0)"), Ok(Partition::empty()));
        assert!(parse_partition("(2,3)").is_err());
        assert!(parse_partition("(a)").is_err());
        assert!(parse_partition("(2,,1)").is_err());
    }

    #[test]
    fn beta_sets() {
        let b = parse_beta_set("{1,3,4,7,9}").unwrap();
        assert_eq!(b.elements(), &[9, 7, 4, 3, 1]);
        assert_eq!(b.to_string(), "{9,7,4,3,1}");
        assert!(parse_beta_set("{1,1}").is_err());
        assert!(parse_beta_set("{}").is_err());
    }

    #[test]
    fn labels() {
        for text in ["S_75:B_5", "A_75:b_5", "A_15:b_5^+", "A_15:b_5^-", "A_1:b_1"] {
            assert_eq!(parse_block_label(text).unwrap().to_string(), text);
        }
        for bad in ["S_75:b_5", "A_15:b_5", "S_75:B_4", "X_3:B_1", "S75:B_5", "A_75:b_5^+", "S_0:B_0"] {
            assert!(parse_block_label(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn ranges_and_lists() {
        assert_eq!(parse_range("74..90"), Ok((74, 90)));
        assert_eq!(parse_range("74..=90"), Ok((74, 90)));
        assert_eq!(parse_range("15"), Ok((15, 15)));
        assert!(parse_range("9..3").is_err());
        assert_eq!(parse_list("3, 5,7"), Ok(vec![3, 5, 7]));
        assert!(parse_list("3,x").is_err());
    }

    #[test]
    fn label_json() {
        let label = parse_block_label("A_15:b_5^+").unwrap();
        let json = serde_json::to_value(BlockLabelJson::from(&label)).unwrap();
        assert_eq!(json, serde_json::json!({"group": "alt", "n": 15, "c": 5, "sign": "+", "text": "A_15:b_5^+"}));
    }
}
