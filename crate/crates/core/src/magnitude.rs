//! Sound arithmetic for astronomically large nonnegative integers.
//!
//! Quantities like `2^(5·10^13)` cannot be materialized, but the counting
//! arguments only ever need to *compare* them. A [`Magnitude`] is either an
//! exact big integer (kept exact up to a configurable bit cap) or a pair of
//! directed log2 bounds in 64-fractional-bit fixed point. Comparisons return
//! a three-valued [`Verdict`]; `True` and `False` are sound — they are only
//! produced when the directed bounds force them — and `Indeterminate` is the
//! honest answer otherwise. Nothing here rounds in a direction it does not
//! record.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Default cap on the size of exactly materialized integers: ~10^7 bits
/// (about 1.2 MB per number). Above the cap, operations degrade to directed
/// log2 bounds instead of exhausting memory.
pub const DEFAULT_EXACT_BIT_CAP: u64 = 10_000_000;

/// Fractional bits of the public fixed-point log2 representation.
pub const LOG2_FRAC_BITS: u32 = 64;

/// Guard band (in units of 2^-frac_bits) added around digit-recurrence
/// results. The truncation error of the recurrence is provably below ~8
/// units; 32 leaves a comfortable margin and is still 2^-59.
const GUARD_UNITS: i64 = 32;

/// Three-valued comparison verdict. `True`/`False` are sound under the
/// rounding directions of the operands; `Indeterminate` means the recorded
/// bounds cannot separate the values.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    True,
    False,
    Indeterminate,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::True => "TRUE",
            Verdict::False => "FALSE",
            Verdict::Indeterminate => "INDETERMINATE",
        }
    }
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Rounding direction of an approximate value: the stored number is a bound
/// on the true value from the stated side.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Rounding {
    LowerBound,
    UpperBound,
}

// ---------------------------------------------------------------------------
// fixed-point log2
// ---------------------------------------------------------------------------

/// A log2 value in units of 2^-64, stored as an arbitrary-precision integer
/// so that exponents like C(10^7, 2) (≈5·10^13) multiply without overflow.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Log2 {
    units: BigInt,
}

impl Log2 {
    /// log2 = `e` exactly (an integer exponent).
    pub fn from_exponent(e: impl Into<BigInt>) -> Log2 {
        Log2 { units: e.into() << LOG2_FRAC_BITS }
    }

    pub fn from_units(units: BigInt) -> Log2 {
        Log2 { units }
    }

    pub fn units(&self) -> &BigInt {
        &self.units
    }

    pub fn add(&self, other: &Log2) -> Log2 {
        Log2 { units: &self.units + &other.units }
    }

    pub fn sub(&self, other: &Log2) -> Log2 {
        Log2 { units: &self.units - &other.units }
    }

    /// Multiplies by an exact integer (exact operation in fixed point).
    pub fn scale(&self, factor: &BigInt) -> Log2 {
        Log2 { units: &self.units * factor }
    }

    pub fn to_f64(&self) -> f64 {
        // good to f64 precision for any magnitude that fits; saturates otherwise
        self.units.to_f64().map(|u| u / 2f64.powi(LOG2_FRAC_BITS as i32)).unwrap_or(f64::INFINITY)
    }

    /// Decimal rendering with directed rounding in the last printed digit, so
    /// a printed lower bound is still a lower bound.
    pub fn to_decimal(&self, frac_digits: u32, dir: Rounding) -> String {
        let scale = BigInt::from(10u32).pow(frac_digits);
        let scaled = &self.units * &scale;
        let denom = BigInt::one() << LOG2_FRAC_BITS;
        let q = match dir {
            Rounding::LowerBound => scaled.div_floor(&denom),
            Rounding::UpperBound => scaled.div_ceil(&denom),
        };
        let neg = q.is_negative();
        let abs = q.abs();
        let (int, frac) = abs.div_rem(&scale);
        let sign = if neg { "-" } else { "" };
        if frac_digits == 0 {
            format!("{sign}{int}")
        } else {
            format!("{sign}{int}.{frac:0>width$}", width = frac_digits as usize)
        }
    }
}

/// Directed log2 bounds of a positive integer, at `frac_bits` fractional
/// bits: returns `(lo, hi)` unit counts with
/// `lo / 2^frac_bits <= log2(x) <= hi / 2^frac_bits`.
///
/// Uses the classic squaring digit recurrence at `frac_bits + 64` working
/// bits, then widens by a guard band dominating the accumulated truncation
/// error. Powers of two are returned exactly with `lo == hi`.
pub fn log2_units_bounds(x: &BigUint, frac_bits: u32) -> (BigInt, BigInt) {
    assert!(!x.is_zero(), "log2 of zero");
    let ipart = x.bits() - 1; // floor(log2 x)
    if x.count_ones() == 1 {
        let exact = BigInt::from(ipart) << frac_bits;
        return (exact.clone(), exact);
    }

    // Working fraction W: y represents y / 2^W, kept in [1, 4). Each of the
    // frac_bits squarings truncates at most one unit (2^-W relative), and
    // squaring doubles accumulated relative error, so the final log2 error is
    // below 2^(2·frac_bits + 2 - W) output units; W = 2·frac_bits + 8 keeps
    // that under a single unit, far inside the guard band.
    let w = 2 * frac_bits + 8;
    let mut y: BigUint = (x << w) >> ipart; // truncation: y/2^W <= x/2^ipart < 2
    let mut frac = BigUint::zero();
    for _ in 0..frac_bits {
        y = (&y * &y) >> w; // truncation again; error analysis in module docs
        frac <<= 1;
        if y.bits() > (w + 1) as u64 {
            frac |= BigUint::one();
            y >>= 1;
        }
    }
    let center = (BigInt::from(ipart) << frac_bits) + BigInt::from(frac);
    let guard = BigInt::from(GUARD_UNITS);
    (&center - &guard, center + guard)
}

/// Directed log2 bounds at the standard 64 fractional bits.
pub fn log2_bounds(x: &BigUint) -> (Log2, Log2) {
    let (lo, hi) = log2_units_bounds(x, LOG2_FRAC_BITS);
    (Log2::from_units(lo), Log2::from_units(hi))
}

// ---------------------------------------------------------------------------
// Magnitude
// ---------------------------------------------------------------------------

#[derive(Debug, Clone)]
enum Repr {
    Exact(BigUint),
    /// Directed log2 bounds of a positive value; a missing side means the
    /// value is only known from the other side (single rounding direction).
    Approx { lo: Option<Log2>, hi: Option<Log2> },
}

/// An astronomically large nonnegative quantity: exact big integer, or
/// directed log2 bound(s) of a positive value.
#[derive(Debug, Clone)]
pub struct Magnitude {
    repr: Repr,
}

impl Magnitude {
    pub fn exact(x: impl Into<BigUint>) -> Magnitude {
        Magnitude { repr: Repr::Exact(x.into()) }
    }

    pub fn from_u64(x: u64) -> Magnitude {
        Magnitude::exact(BigUint::from(x))
    }

    /// A value known only from below: true value >= 2^log2.
    pub fn log2_lower(log2: Log2) -> Magnitude {
        Magnitude { repr: Repr::Approx { lo: Some(log2), hi: None } }
    }

    /// A value known only from above: true value <= 2^log2.
    pub fn log2_upper(log2: Log2) -> Magnitude {
        Magnitude { repr: Repr::Approx { lo: None, hi: Some(log2) } }
    }

    /// A value bracketed from both sides.
    pub fn log2_interval(lo: Log2, hi: Log2) -> Magnitude {
        debug_assert!(lo <= hi);
        Magnitude { repr: Repr::Approx { lo: Some(lo), hi: Some(hi) } }
    }

    /// 2^e, exact while `e <= cap_bits`, an exact-log2 approximation above
    /// (both roundings coincide: log2(2^e) = e has no rounding error).
    pub fn pow2(e: &BigUint, cap_bits: u64) -> Magnitude {
        if let Some(small) = e.to_u64().filter(|&v| v <= cap_bits) {
            Magnitude::exact(BigUint::one() << small)
        } else {
            let l = Log2::from_exponent(BigInt::from(e.clone()));
            Magnitude::log2_interval(l.clone(), l)
        }
    }

    /// base^e, exact while the result stays at or below `cap_bits` bits.
    pub fn pow(base: &BigUint, e: &BigUint, cap_bits: u64) -> Magnitude {
        if base.is_zero() {
            return if e.is_zero() { Magnitude::from_u64(1) } else { Magnitude::from_u64(0) };
        }
        if base.is_one() || e.is_zero() {
            return Magnitude::from_u64(1);
        }
        let result_bits = BigUint::from(base.bits()) * e;
        if result_bits <= BigUint::from(cap_bits) {
            // e < cap_bits here because base has >= 2 bits
            let exp = e.to_u32().expect("exponent fits u32 under the bit cap");
            return Magnitude::exact(base.pow(exp));
        }
        let (lo, hi) = log2_bounds(base);
        let factor = BigInt::from(e.clone());
        Magnitude::log2_interval(lo.scale(&factor), hi.scale(&factor))
    }

    /// Product, exact while both factors are exact and the result stays at or
    /// below `cap_bits` bits; otherwise directed log2 bounds are added
    /// side-by-side (a missing side stays missing).
    pub fn mul(&self, other: &Magnitude, cap_bits: u64) -> Magnitude {
        if let (Repr::Exact(a), Repr::Exact(b)) = (&self.repr, &other.repr) {
            if a.is_zero() || b.is_zero() {
                return Magnitude::from_u64(0);
            }
            if a.bits() + b.bits() <= cap_bits + 1 {
                return Magnitude::exact(a * b);
            }
        }
        if self.is_zero() || other.is_zero() {
            return Magnitude::from_u64(0);
        }
        let (alo, ahi) = self.log2_sides();
        let (blo, bhi) = other.log2_sides();
        Magnitude {
            repr: Repr::Approx {
                lo: alo.zip(blo).map(|(a, b)| a.add(&b)),
                hi: ahi.zip(bhi).map(|(a, b)| a.add(&b)),
            },
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(&self.repr, Repr::Exact(x) if x.is_zero())
    }

    pub fn as_exact(&self) -> Option<&BigUint> {
        match &self.repr {
            Repr::Exact(x) => Some(x),
            Repr::Approx { .. } => None,
        }
    }

    /// Lower/upper log2 bounds as far as they are known. Exact nonzero values
    /// yield both sides; exact zero yields neither (log2(0) = -inf is treated
    /// specially by comparisons).
    pub fn log2_sides(&self) -> (Option<Log2>, Option<Log2>) {
        match &self.repr {
            Repr::Exact(x) => {
                if x.is_zero() {
                    (None, None)
                } else {
                    let (lo, hi) = log2_bounds(x);
                    (Some(lo), Some(hi))
                }
            }
            Repr::Approx { lo, hi } => (lo.clone(), hi.clone()),
        }
    }

    /// How this value is known, for reports: "exact", "lower-bound",
    /// "upper-bound", or "interval".
    pub fn knowledge(&self) -> &'static str {
        match &self.repr {
            Repr::Exact(_) => "exact",
            Repr::Approx { lo: Some(_), hi: None } => "lower-bound",
            Repr::Approx { lo: None, hi: Some(_) } => "upper-bound",
            Repr::Approx { lo: Some(_), hi: Some(_) } => "interval",
            Repr::Approx { lo: None, hi: None } => unreachable!("vacuous magnitude"),
        }
    }

    /// Sound strict comparison `self < other`.
    pub fn less_than(&self, other: &Magnitude) -> Verdict {
        match (&self.repr, &other.repr) {
            (Repr::Exact(a), Repr::Exact(b)) => {
                if a < b {
                    Verdict::True
                } else {
                    Verdict::False
                }
            }
            _ => {
                // approx values are logs of positive reals, hence > 0
                if self.is_zero() {
                    return Verdict::True;
                }
                if other.is_zero() {
                    return Verdict::False;
                }
                let (self_lo, self_hi) = self.log2_sides();
                let (other_lo, other_hi) = other.log2_sides();
                if let (Some(a_hi), Some(b_lo)) = (&self_hi, &other_lo) {
                    if a_hi < b_lo {
                        return Verdict::True;
                    }
                }
                if let (Some(a_lo), Some(b_hi)) = (&self_lo, &other_hi) {
                    if a_lo >= b_hi {
                        return Verdict::False;
                    }
                }
                Verdict::Indeterminate
            }
        }
    }

    /// Number of decimal digits, available only for exact values.
    pub fn decimal_digits(&self) -> Option<usize> {
        self.as_exact().map(|x| if x.is_zero() { 1 } else { x.to_string().len() })
    }
}

impl std::fmt::Display for Magnitude {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match &self.repr {
            Repr::Exact(x) => {
                let s = x.to_string();
                if s.len() <= 40 {
                    f.write_str(&s)
                } else {
                    let (lo, hi) = log2_bounds(x);
                    write!(
                        f,
                        "{}-digit integer in 2^[{}, {}]",
                        s.len(),
                        lo.to_decimal(6, Rounding::LowerBound),
                        hi.to_decimal(6, Rounding::UpperBound)
                    )
                }
            }
            Repr::Approx { lo: Some(lo), hi: Some(hi) } => {
                if lo == hi {
                    write!(f, "2^{}", lo.to_decimal(6, Rounding::LowerBound))
                } else {
                    write!(
                        f,
                        "2^[{}, {}]",
                        lo.to_decimal(6, Rounding::LowerBound),
                        hi.to_decimal(6, Rounding::UpperBound)
                    )
                }
            }
            Repr::Approx { lo: Some(lo), hi: None } => {
                write!(f, ">= 2^{}", lo.to_decimal(6, Rounding::LowerBound))
            }
            Repr::Approx { lo: None, hi: Some(hi) } => {
                write!(f, "<= 2^{}", hi.to_decimal(6, Rounding::UpperBound))
            }
            Repr::Approx { lo: None, hi: None } => unreachable!(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::FromPrimitive;

    fn big(x: u64) -> BigUint {
        BigUint::from(x)
    }

    #[test]
    fn log2_of_powers_of_two_is_exact() {
        for k in [0u64, 1, 5, 63, 64, 100, 1000] {
            let x = BigUint::one() << k;
            let (lo, hi) = log2_bounds(&x);
            assert_eq!(lo, hi, "k = {k}");
            assert_eq!(*lo.units(), BigInt::from(k) << LOG2_FRAC_BITS);
        }
    }

    #[test]
    fn log2_bounds_straddle_and_stay_tight() {
        for x in [3u64, 5, 7, 10, 600, 123_456_789, u64::MAX] {
            let (lo, hi) = log2_bounds(&big(x));
            assert!(lo < hi);
            let width = hi.units() - lo.units();
            assert!(width <= BigInt::from(2 * GUARD_UNITS), "width {width} for x = {x}");
            // straddle the f64 estimate
            let est = (x as f64).log2();
            assert!(lo.to_f64() <= est + 1e-9, "x = {x}");
            assert!(hi.to_f64() >= est - 1e-9, "x = {x}");
        }
    }

    #[test]
    fn log2_bounds_are_sound_against_exact_powers() {
        // if lo <= log2(m) <= hi, then for m^e the exact bit length must sit
        // inside [e*lo, e*hi] widened to whole bits
        for (m, e) in [(3u64, 100u32), (10, 200), (600, 57), (999_983, 41)] {
            let (lo, hi) = log2_bounds(&big(m));
            let power = big(m).pow(e);
            let floor_log2 = BigInt::from(power.bits() - 1) << LOG2_FRAC_BITS;
            let ceil_log2 = BigInt::from(power.bits()) << LOG2_FRAC_BITS;
            let e_big = BigInt::from(e);
            assert!(lo.scale(&e_big).units() <= &ceil_log2, "m={m} e={e}");
            assert!(hi.scale(&e_big).units() >= &floor_log2, "m={m} e={e}");
        }
    }

    #[test]
    fn log2_decimal_rendering_rounds_directionally() {
        // log2(10) = 3.321928094887362...
        let (lo, hi) = log2_bounds(&big(10));
        assert_eq!(lo.to_decimal(6, Rounding::LowerBound), "3.321928");
        assert_eq!(hi.to_decimal(6, Rounding::UpperBound), "3.321929");
        // negative value: -1.5 renders with correct floor/ceil behavior
        let neg = Log2::from_units(BigInt::from(-3) << (LOG2_FRAC_BITS - 1));
        assert_eq!(neg.to_decimal(1, Rounding::LowerBound), "-1.5");
        assert_eq!(neg.to_decimal(0, Rounding::LowerBound), "-2");
        assert_eq!(neg.to_decimal(0, Rounding::UpperBound), "-1");
    }

    #[test]
    fn exact_comparisons_are_never_indeterminate() {
        let a = Magnitude::from_u64(5);
        let b = Magnitude::from_u64(5);
        assert_eq!(a.less_than(&b), Verdict::False);
        assert_eq!(Magnitude::from_u64(4).less_than(&b), Verdict::True);
        assert_eq!(Magnitude::from_u64(0).less_than(&Magnitude::from_u64(0)), Verdict::False);
    }

    #[test]
    fn zero_against_approx_values() {
        let zero = Magnitude::from_u64(0);
        let approx = Magnitude::pow2(&BigUint::from_u64(1 << 40).unwrap(), 100); // not materialized
        assert_eq!(zero.less_than(&approx), Verdict::True);
        assert_eq!(approx.less_than(&zero), Verdict::False);
    }

    #[test]
    fn pow2_respects_the_cap() {
        let e = big(100);
        assert_eq!(Magnitude::pow2(&e, 1000).as_exact(), Some(&(BigUint::one() << 100u32)));
        let approx = Magnitude::pow2(&e, 10);
        assert!(approx.as_exact().is_none());
        assert_eq!(approx.knowledge(), "interval");
        // exact-log2 approx still compares decisively against exact values
        assert_eq!(Magnitude::from_u64(u64::MAX).less_than(&approx), Verdict::True);
    }

    #[test]
    fn pow_small_cases() {
        assert_eq!(Magnitude::pow(&big(3), &big(5), 1 << 20).as_exact(), Some(&big(243)));
        assert_eq!(Magnitude::pow(&big(0), &big(0), 64).as_exact(), Some(&big(1)));
        assert_eq!(Magnitude::pow(&big(0), &big(7), 64).as_exact(), Some(&big(0)));
        assert_eq!(Magnitude::pow(&big(1), &(big(1) << 60), 64).as_exact(), Some(&big(1)));
    }

    #[test]
    fn pow_degrades_to_sound_interval_above_cap() {
        // 600^2000 needs ~18458 bits; cap it below that
        let m = Magnitude::pow(&big(600), &big(2000), 10_000);
        assert!(m.as_exact().is_none());
        let exact = Magnitude::exact(big(600).pow(2000));
        // interval must contain the true value: not provably < or > itself
        assert_eq!(m.less_than(&exact), Verdict::Indeterminate);
        // and must still separate from values a factor 2 away
        let double = Magnitude::exact(big(600).pow(2000) << 1);
        assert_eq!(m.less_than(&double), Verdict::True);
    }

    #[test]
    fn mul_stays_exact_under_cap_and_degrades_above() {
        let a = Magnitude::from_u64(1 << 30);
        let b = Magnitude::from_u64(1 << 20);
        assert_eq!(a.mul(&b, 64).as_exact(), Some(&(BigUint::one() << 50u32)));
        let degraded = a.mul(&b, 40);
        assert!(degraded.as_exact().is_none());
        assert_eq!(degraded.less_than(&Magnitude::exact(BigUint::one() << 51u32)), Verdict::True);
        assert_eq!(Magnitude::from_u64(0).mul(&a, 64).as_exact(), Some(&BigUint::zero()));
    }

    #[test]
    fn one_sided_knowledge_stays_indeterminate_where_it_must() {
        // a is only known to be >= 2^10; nothing proves it below 2^20
        let a = Magnitude::log2_lower(Log2::from_exponent(10));
        let b = Magnitude::exact(BigUint::one() << 20u32);
        assert_eq!(a.less_than(&b), Verdict::Indeterminate);
        // but it is provably not below 2^5
        let c = Magnitude::exact(BigUint::one() << 5u32);
        assert_eq!(a.less_than(&c), Verdict::False);
        assert_eq!(a.knowledge(), "lower-bound");

        let u = Magnitude::log2_upper(Log2::from_exponent(10));
        assert_eq!(u.less_than(&b), Verdict::True);
        assert_eq!(u.knowledge(), "upper-bound");
    }

    #[test]
    fn display_forms() {
        assert_eq!(Magnitude::from_u64(16).to_string(), "16");
        let p = Magnitude::pow2(&big(1_000_000_000), 64);
        assert_eq!(p.to_string(), "2^1000000000.000000");
    }
}
