//! Restriction to `A_n`, the 2-blocks of `A_n`, and the values of the split
//! characters of weight-zero blocks on the split classes.

use core::fmt;

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint, Sign as BigSign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::blocks::{blocks_of_sym, gamma, staircase_size, BlockLabel, Group, Sign};
use crate::character::{degree, is_p_divisible, is_perfect_square, mn_value, CycleType};
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::witness::{construct_witness, theorem_range, WitnessCertificate};

/// An irreducible constituent of `χ^λ↓A_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AltCharacter {
    pub source: Partition,
    pub split: bool,
    pub half: Option<Sign>,
    pub degree: BigUint,
}

/// `χ^λ↓A_n`: irreducible unless `λ = λ'`, in which case it is the sum of
/// two conjugate halves of equal degree.
pub fn restrict(lambda: &Partition) -> Vec<AltCharacter> {
    let full = degree(lambda);
    if lambda.size() >= 2 && lambda.is_self_conjugate() {
        let (half, rem) = full.div_rem(&BigUint::from(2u32));
        assert!(rem.is_zero(), "self-conjugate degree is even");
        [Sign::Plus, Sign::Minus]
            .into_iter()
            .map(|s| AltCharacter { source: lambda.clone(), split: true, half: Some(s), degree: half.clone() })
            .collect()
    } else {
        vec![AltCharacter { source: lambda.clone(), split: false, half: None, degree: full }]
    }
}

/// `b_c` for positive-weight `B_c`, `b_c^+` and `b_c^-` for weight zero.
pub fn blocks_of_alt(n: usize) -> Vec<BlockLabel> {
    let mut out = Vec::new();
    for block in blocks_of_sym(n) {
        if staircase_size(block.c) == n && n >= 2 {
            for sign in [Sign::Plus, Sign::Minus] {
                out.push(BlockLabel { group: Group::Alt, n, c: block.c, sign: Some(sign) });
            }
        } else {
            out.push(BlockLabel { group: Group::Alt, n, c: block.c, sign: None });
        }
    }
    out
}

/// The unique block of `S_n` covering an `A_n` block: same `n`, same `c`.
pub fn covering_block(b: &BlockLabel) -> Result<BlockLabel> {
    if b.group != Group::Alt {
        return Err(Error::InvalidLabel(format!("{b} is not a block of A_n")));
    }
    b.validate()?;
    BlockLabel::sym(b.n, b.c)
}

/// `q + s·√d` with rational `q`, `s` and integer `d`.
///
/// The radicand is kept as given; equality folds perfect-square radicands
/// into the rational part and otherwise compares `s²d` exactly.
#[derive(Clone, Debug)]
pub struct QuadraticValue {
    pub rational_part: BigRational,
    pub surd_coefficient: BigRational,
    pub radicand: BigInt,
}

impl QuadraticValue {
    pub fn new(rational_part: BigRational, surd_coefficient: BigRational, radicand: BigInt) -> Self {
        QuadraticValue { rational_part, surd_coefficient, radicand }
    }

    pub fn rational(q: BigRational) -> Self {
        QuadraticValue::new(q, BigRational::zero(), BigInt::zero())
    }

    fn square_root_of_radicand(&self) -> Option<BigInt> {
        if self.radicand.is_negative() {
            return None;
        }
        let mag = self.radicand.magnitude();
        is_perfect_square(mag).then(|| BigInt::from(mag.sqrt()))
    }

    pub fn is_rational(&self) -> bool {
        self.surd_coefficient.is_zero() || self.radicand.is_zero() || self.square_root_of_radicand().is_some()
    }

    /// Rational value, when there is one.
    pub fn to_rational(&self) -> Option<BigRational> {
        if self.surd_coefficient.is_zero() || self.radicand.is_zero() {
            return Some(self.rational_part.clone());
        }
        let root = self.square_root_of_radicand()?;
        Some(&self.rational_part + &self.surd_coefficient * BigRational::from_integer(root))
    }

    /// `s²·d`, which together with the sign of `s` determines the surd term.
    fn surd_square(&self) -> BigRational {
        &self.surd_coefficient * &self.surd_coefficient * BigRational::from_integer(self.radicand.clone())
    }
}

impl PartialEq for QuadraticValue {
    fn eq(&self, other: &Self) -> bool {
        match (self.to_rational(), other.to_rational()) {
            (Some(a), Some(b)) => a == b,
            (None, None) => {
                self.rational_part == other.rational_part
                    && self.surd_coefficient.signum() == other.surd_coefficient.signum()
                    && self.surd_square() == other.surd_square()
            }
            _ => false,
        }
    }
}

impl Eq for QuadraticValue {}

/// `(1 + sqrt(45))/2`; denominators are brought to a common value.
impl fmt::Display for QuadraticValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.surd_coefficient.is_zero() || self.radicand.is_zero() {
            return write!(f, "{}", self.rational_part);
        }
        let den = self.rational_part.denom().lcm(self.surd_coefficient.denom());
        let q = (&self.rational_part * BigRational::from_integer(den.clone())).to_integer();
        let s = (&self.surd_coefficient * BigRational::from_integer(den.clone())).to_integer();
        let surd = if s.abs().is_one() {
            format!("sqrt({})", self.radicand)
        } else {
            format!("{}*sqrt({})", s.abs(), self.radicand)
        };
        let body = match (q.is_zero(), s.sign() == BigSign::Minus) {
            (true, false) => surd,
            (true, true) => format!("-{surd}"),
            (false, false) => format!("{q} + {surd}"),
            (false, true) => format!("{q} - {surd}"),
        };
        if den.is_one() {
            f.write_str(&body)
        } else {
            write!(f, "({body})/{den}")
        }
    }
}

/// Values of `ζ^±_{γ_c}` on the two `A_n`-classes `α^±` into which the class
/// of cycle type `h(γ_c)` splits.
///
/// `α^+` is the class of `(1 2 … h_1)(h_1+1 … h_1+h_2)…`, the representative
/// with the lexicographically smaller cycle notation; `α^-` is its conjugate
/// under `(1 2)`. Swapping the convention swaps `ζ^+` and `ζ^-`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitClassValues {
    pub c: usize,
    pub cycle_type: CycleType,
    /// `χ^{γ_c}(σ)` for `σ ∈ α^±`.
    pub epsilon: BigInt,
    /// `Π h(γ_c)_i`
    pub hook_product: BigUint,
    /// `ε·Π h(γ_c)_i`
    pub radicand: BigInt,
    pub plus_on_plus: QuadraticValue,
    pub minus_on_plus: QuadraticValue,
    pub plus_on_minus: QuadraticValue,
    pub minus_on_minus: QuadraticValue,
}

impl SplitClassValues {
    pub fn values(&self) -> [&QuadraticValue; 4] {
        [&self.plus_on_plus, &self.minus_on_plus, &self.plus_on_minus, &self.minus_on_minus]
    }

    pub fn all_irrational(&self) -> bool {
        self.values().iter().all(|v| !v.is_rational())
    }
}

/// `ζ^±(σ) = (ε ± √(ε·Π h_i))/2` and `ζ^±(τ) = (ε ∓ √(ε·Π h_i))/2`, where
/// `h = h(γ_c)` and `ε = χ^{γ_c}(σ)` is computed by Murnaghan-Nakayama.
pub fn split_class_values(c: usize) -> Result<SplitClassValues> {
    if c < 2 {
        return Err(Error::DegenerateCore(c));
    }
    let core = gamma(c);
    let hooks = core.diagonal_hooks();
    let cycle_type = CycleType::new(hooks.clone());
    let epsilon = mn_value(&core, &cycle_type)?;
    if epsilon.abs() != BigInt::one() {
        return Err(Error::ClaimViolated(format!(
            "χ^γ_{c} takes value {epsilon} on cycle type {hooks}, expected ±1"
        )));
    }
    let hook_product: BigUint = hooks.parts().iter().map(|&h| BigUint::from(h)).product();
    let radicand = &epsilon * BigInt::from(hook_product.clone());
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    let center = BigRational::from_integer(epsilon.clone()) * &half;
    let value = |sign: i32| {
        QuadraticValue::new(center.clone(), &half * BigRational::from_integer(BigInt::from(sign)), radicand.clone())
    };
    Ok(SplitClassValues {
        c,
        cycle_type,
        epsilon,
        hook_product,
        radicand: radicand.clone(),
        plus_on_plus: value(1),
        minus_on_plus: value(-1),
        plus_on_minus: value(-1),
        minus_on_minus: value(1),
    })
}

/// Outcome of the rationality question for one `A_n` block.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalityVerdict {
    pub block: BlockLabel,
    pub p: u64,
    /// Whether the block holds a rational-valued p-divisible character.
    pub answer: bool,
    /// Positive weight: the `S_n` witness whose restriction answers yes.
    pub witness: Option<WitnessCertificate>,
    pub restricted: Option<AltCharacter>,
    /// Weight zero: the irrational split-class values.
    pub split_values: Option<SplitClassValues>,
}

/// Decides, inside the theorem's range, whether an `A_n` block contains a
/// rational-valued p-divisible character, and backs the answer with either a
/// restricted witness or the irrational split-class values.
pub fn rationality(b: &BlockLabel, p: u64) -> Result<RationalityVerdict> {
    let cover = covering_block(b)?;
    theorem_range(cover.n, p, cover.c)?;
    let mut verdict =
        RationalityVerdict { block: *b, p, answer: false, witness: None, restricted: None, split_values: None };
    if cover.weight()? > 0 {
        let cert = construct_witness(cover.n, p, cover.c)?;
        if cert.facts.self_conjugate {
            return Err(Error::ClaimViolated(format!(
                "witness {} for positive-weight {cover} is self-conjugate",
                cert.partition
            )));
        }
        let mut parts = restrict(&cert.partition);
        let zeta = parts.pop().expect("restriction is non-empty");
        if zeta.split || !is_p_divisible(&zeta.source, p)? {
            return Err(Error::ClaimViolated(format!("restriction of {} is not a p-divisible ζ_λ", cert.partition)));
        }
        verdict.answer = true;
        verdict.witness = Some(cert);
        verdict.restricted = Some(zeta);
    } else {
        let values = split_class_values(cover.c)?;
        if !values.all_irrational() {
            return Err(Error::ClaimViolated(format!("split values of γ_{} are rational", cover.c)));
        }
        verdict.split_values = Some(values);
    }
    Ok(verdict)
}

pub fn has_rational_p_divisible(b: &BlockLabel, p: u64) -> Result<bool> {
    rationality(b, p).map(|v| v.answer)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::character::progression_product;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn restrictions() {
        let one = restrict(&p(&[61, 6, 5, 2, 1]));
        assert_eq!(one.len(), 1);
        assert_eq!(one[0].degree, degree(&p(&[61, 6, 5, 2, 1])));
        let halves = restrict(&p(&[3, 2, 1]));
        assert_eq!(halves.len(), 2);
        assert!(halves.iter().all(|z| z.degree == BigUint::from(8u32) && z.split));
        let linear = restrict(&p(&[2, 1]));
        assert_eq!(linear.len(), 2);
        assert!(linear.iter().all(|z| z.degree.is_one()));
        assert_eq!(restrict(&p(&[1])).len(), 1);
    }

    #[test]
    fn restricted_degrees_add_up() {
        for n in 1..=14 {
            for lambda in Partition::all(n) {
                let total: BigUint = restrict(&lambda).into_iter().map(|z| z.degree).sum();
                assert_eq!(total, degree(&lambda));
            }
        }
    }

    #[test]
    fn alt_block_lists() {
        let b75 = blocks_of_alt(75);
        assert_eq!(b75.iter().map(|b| b.c).collect::<Vec<_>>(), vec![1, 2, 5, 6, 9, 10]);
        assert!(b75.iter().all(|b| b.sign.is_none()));
        let b15 = blocks_of_alt(15);
        assert!(b15.contains(&BlockLabel::alt(15, 5, Some(Sign::Plus)).unwrap()));
        assert!(b15.contains(&BlockLabel::alt(15, 5, Some(Sign::Minus)).unwrap()));
        assert_eq!(blocks_of_alt(1), vec![BlockLabel::alt(1, 1, None).unwrap()]);
        for b in blocks_of_alt(40) {
            assert!(b.is_valid());
        }
    }

    #[test]
    fn block_census() {
        for n in 2..=60 {
            let sym = blocks_of_sym(n);
            let zero = sym.iter().filter(|b| b.weight().unwrap() == 0).count();
            assert_eq!(blocks_of_alt(n).len(), (sym.len() - zero) + 2 * zero, "n={n}");
        }
    }

    #[test]
    fn covering() {
        let b = BlockLabel::alt(75, 5, None).unwrap();
        assert_eq!(covering_block(&b), BlockLabel::sym(75, 5));
        let b = BlockLabel::alt(15, 5, Some(Sign::Plus)).unwrap();
        assert_eq!(covering_block(&b), BlockLabel::sym(15, 5));
        let b = BlockLabel::alt(14, 3, None).unwrap();
        assert_eq!(covering_block(&b), BlockLabel::sym(14, 3));
        assert!(covering_block(&BlockLabel::sym(14, 3).unwrap()).is_err());
    }

    #[test]
    fn quadratic_values() {
        let v = QuadraticValue::new(rat(1, 2), rat(1, 2), BigInt::from(45));
        assert_eq!(format!("{v}"), "(1 + sqrt(45))/2");
        assert!(!v.is_rational());
        let w = QuadraticValue::new(rat(1, 2), rat(3, 2), BigInt::from(5));
        assert_eq!(v, w);
        let n = QuadraticValue::new(rat(-1, 2), rat(-1, 2), BigInt::from(-3));
        assert_eq!(format!("{n}"), "(-1 - sqrt(-3))/2");
        let r = QuadraticValue::new(rat(1, 1), rat(1, 2), BigInt::from(4));
        assert!(r.is_rational());
        assert_eq!(r, QuadraticValue::rational(rat(2, 1)));
        assert_ne!(v, QuadraticValue::new(rat(1, 2), rat(-1, 2), BigInt::from(45)));
        assert_eq!(format!("{}", QuadraticValue::rational(rat(3, 1))), "3");
    }

    #[test]
    fn split_values_examples() {
        let five = split_class_values(5).unwrap();
        assert_eq!(five.cycle_type.cycles(), &p(&[9, 5, 1]));
        assert_eq!(five.hook_product, BigUint::from(45u32));
        assert!(five.epsilon.abs().is_one());
        assert!(five.all_irrational());
        let two = split_class_values(2).unwrap();
        assert_eq!(two.cycle_type.cycles(), &p(&[3]));
        // A_3: the nontrivial linear characters take (-1 ± sqrt(-3))/2 on 3-cycles
        assert_eq!(two.epsilon, BigInt::from(-1));
        assert_eq!(format!("{}", two.plus_on_plus), "(-1 + sqrt(-3))/2");
        assert_eq!(split_class_values(1), Err(Error::DegenerateCore(1)));
        // swapping classes swaps the halves
        assert_eq!(two.plus_on_plus, two.minus_on_minus);
        assert_eq!(two.minus_on_plus, two.plus_on_minus);
    }

    #[test]
    fn split_values_are_irrational() {
        for c in 2..=20 {
            let vals = split_class_values(c).unwrap();
            assert!(vals.all_irrational(), "c={c}");
            let len = vals.cycle_type.cycles().len();
            assert_eq!(len, c.div_ceil(2));
            let residue = if c % 2 == 0 { 3 } else { 1 };
            for (i, &h) in vals.cycle_type.cycles().parts().iter().enumerate() {
                assert_eq!(h, 4 * (len - (i + 1)) + residue);
            }
            let r = if c % 2 == 0 { -1 } else { 1 };
            // Π (4(ℓ-i)+3) = Π_{j=1}^{ℓ-1}(4j+3)·3, i.e. Π_{j=1}^{ℓ}(4j-1)
            let product = if c % 2 == 0 {
                progression_product(len, r).unwrap()
            } else if len == 1 {
                BigUint::one()
            } else {
                progression_product(len - 1, r).unwrap()
            };
            assert_eq!(vals.hook_product, product, "c={c}");
        }
    }

    #[test]
    fn rationality_examples() {
        let b = BlockLabel::alt(75, 5, None).unwrap();
        let verdict = rationality(&b, 11).unwrap();
        assert!(verdict.answer);
        assert_eq!(verdict.witness.unwrap().partition, p(&[61, 6, 5, 2, 1]));
        assert!(matches!(
            has_rational_p_divisible(&BlockLabel::alt(15, 5, Some(Sign::Plus)).unwrap(), 3),
            Err(Error::OutOfTheoremRange(_))
        ));
        // 78 = 12·13/2: weight zero, c = 12 >= 11 and p^k = 27 >= 23
        let zero = BlockLabel::alt(78, 12, Some(Sign::Minus)).unwrap();
        let verdict = rationality(&zero, 3).unwrap();
        assert!(!verdict.answer);
        assert!(verdict.split_values.unwrap().all_irrational());
    }
}
