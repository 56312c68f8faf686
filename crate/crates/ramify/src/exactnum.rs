//! Exact rational arithmetic with p-adic valuations.
//!
//! Everything downstream (polynomials, classifiers, the oracle) works on
//! `Rat` values kept fully reduced, so valuations, unit parts and modular
//! reductions are exact. There is no floating point anywhere.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::fmt;

use crate::error::{Error, Result};

pub type Int = BigInt;
/// Reduced rational with positive denominator (enforced by `num_rational`).
pub type Rat = BigRational;

pub fn int(n: i64) -> Int {
    Int::from(n)
}

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(Int::from(n))
}

pub fn rat_frac(n: i64, d: i64) -> Rat {
    Rat::new(Int::from(n), Int::from(d))
}

/// A p-adic valuation: an integer, or +infinity for the zero element.
///
/// Ordering and addition follow the usual min/+ conventions, with
/// `Infinity` absorbing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Valuation {
    Finite(i64),
    Infinity,
}

impl Valuation {
    pub fn is_finite(self) -> bool {
        matches!(self, Valuation::Finite(_))
    }

    /// Panics when called on `Infinity`; callers check `is_finite` first
    /// or know the element is nonzero.
    pub fn finite(self) -> i64 {
        match self {
            Valuation::Finite(v) => v,
            Valuation::Infinity => panic!("finite() called on an infinite valuation"),
        }
    }

    pub fn min(self, other: Valuation) -> Valuation {
        std::cmp::min(self, other)
    }
}

impl std::ops::Add for Valuation {
    type Output = Valuation;
    fn add(self, other: Valuation) -> Valuation {
        match (self, other) {
            (Valuation::Finite(a), Valuation::Finite(b)) => Valuation::Finite(a + b),
            _ => Valuation::Infinity,
        }
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(v) => write!(f, "{v}"),
            Valuation::Infinity => write!(f, "inf"),
        }
    }
}

/// Unit-part decomposition x = p^valuation * unit with v_p(unit) = 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnitDecomposition {
    pub valuation: i64,
    pub unit: Rat,
}

/// Deterministic Miller-Rabin for u64 inputs.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == q {
            return true;
        }
        if n.is_multiple_of(q) {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    let mul = |a: u64, b: u64| ((a as u128 * b as u128) % n as u128) as u64;
    let pow = |mut b: u64, mut e: u64| {
        let mut acc = 1u64;
        b %= n;
        while e > 0 {
            if e & 1 == 1 {
                acc = mul(acc, b);
            }
            b = mul(b, b);
            e >>= 1;
        }
        acc
    };
    // This witness set is deterministic for all n < 2^64.
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul(x, x);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn check_prime(p: u64) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!("{p} is not prime")))
    }
}

/// v_p of an integer; Infinity for zero.
pub fn val_int(n: &Int, p: u64) -> Valuation {
    if n.is_zero() {
        return Valuation::Infinity;
    }
    let p = Int::from(p);
    let mut v = 0i64;
    let mut cur = n.clone();
    loop {
        let (q, r) = cur.div_rem(&p);
        if r.is_zero() {
            v += 1;
            cur = q;
        } else {
            return Valuation::Finite(v);
        }
    }
}

/// v_p(x), with v_p(0) = +infinity and v_p(a/b) = v_p(a) - v_p(b).
pub fn val_p(x: &Rat, p: u64) -> Result<Valuation> {
    check_prime(p)?;
    Ok(val_p_unchecked(x, p))
}

pub(crate) fn val_p_unchecked(x: &Rat, p: u64) -> Valuation {
    match (val_int(x.numer(), p), val_int(x.denom(), p)) {
        (Valuation::Infinity, _) => Valuation::Infinity,
        (Valuation::Finite(a), Valuation::Finite(b)) => Valuation::Finite(a - b),
        _ => unreachable!("denominator is nonzero"),
    }
}

/// Splits nonzero x as p^v * u with v_p(u) = 0, exactly.
pub fn unit_part(x: &Rat, p: u64) -> Result<UnitDecomposition> {
    check_prime(p)?;
    if x.is_zero() {
        return Err(Error::Domain("unit part of zero is undefined".into()));
    }
    let v = val_p_unchecked(x, p).finite();
    let unit = x * pow_rat(p, -v);
    debug_assert_eq!(val_p_unchecked(&unit, p), Valuation::Finite(0));
    Ok(UnitDecomposition { valuation: v, unit })
}

/// p^e as an exact rational, for e of either sign.
pub fn pow_rat(p: u64, e: i64) -> Rat {
    let pk = Int::from(p).pow(e.unsigned_abs() as u32);
    if e >= 0 {
        Rat::from_integer(pk)
    } else {
        Rat::new(Int::one(), pk)
    }
}

/// Extended-Euclid inverse of a modulo n, in [1, n-1].
pub fn inverse_mod(a: &Int, n: &Int) -> Result<Int> {
    if n <= &Int::one() {
        return Err(Error::InvalidArgument(format!("modulus {n} must exceed 1")));
    }
    let a_red = a.mod_floor(n);
    let ext = a_red.extended_gcd(n);
    if !ext.gcd.is_one() {
        return Err(Error::NoInverse {
            a: a.to_string(),
            n: n.to_string(),
        });
    }
    Ok(ext.x.mod_floor(n))
}

/// Reduces a rational modulo n by inverting its denominator mod n.
/// Requires the denominator coprime to n.
pub fn mod_reduce(x: &Rat, n: &Int) -> Result<Int> {
    let d_inv = inverse_mod(x.denom(), n)?;
    Ok((x.numer() * d_inv).mod_floor(n))
}

/// Whether a 3-adic unit is a square in Z_3^x, decided by u = 1 mod 3.
pub fn is_square_unit_q3(u: &Rat) -> Result<bool> {
    require_unit(u, 3)?;
    Ok(mod_reduce(u, &int(3))? == Int::one())
}

/// Whether a 3-adic unit is a cube in Z_3^x, decided by u = +-1 mod 9.
pub fn is_cube_unit_q3(u: &Rat) -> Result<bool> {
    require_unit(u, 3)?;
    let r = mod_reduce(u, &int(9))?;
    Ok(r == int(1) || r == int(8))
}

pub(crate) fn require_unit(u: &Rat, p: u64) -> Result<()> {
    if val_p_unchecked(u, p) != Valuation::Finite(0) {
        return Err(Error::Domain(format!("expected a {p}-adic unit, got {u}")));
    }
    Ok(())
}
