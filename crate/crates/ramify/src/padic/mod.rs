//! Truncated p-adic arithmetic, Hensel/Newton lifting, and the unramified
//! tower W = Q_p(y)/(modulus) with its Teichmueller representatives.
//!
//! Two element models live here:
//!
//! * [`PadicApprox`] — an element of Q_p known modulo p^N, possibly scaled
//!   by a bounded power of p in the denominator. This is the oracle's
//!   working currency.
//! * [`UnramElem`] — an element of an unramified extension, stored as a
//!   coefficient vector modulo (p^N, modulus). Valuations here are just
//!   coordinate-wise minima, which is what makes root searches in the
//!   unramified tower cheap.
//!
//! Root finding over Z_p ([`zp_roots`]) is digit-by-digit isolation: branch
//! on the next base-p digit, prune boxes that provably contain no root
//! (exact Taylor-coefficient valuations), and switch to Newton iteration as
//! soon as the convergence criterion v(f(a)) > 2 v(f'(a)) holds.

pub mod residue;

use num_integer::Integer as _;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exactnum::{int, mod_reduce, pow_rat, val_int, val_p_unchecked, Int, Rat, Valuation};
use residue::{GfElem, ResidueField};

pub fn int_pow(p: u64, e: u32) -> Int {
    Int::from(p).pow(e)
}

/// An element of Q_p known modulo p^(prec - scale): the value is
/// `mantissa * p^(-scale)` with `0 <= mantissa < p^prec`.
#[derive(Debug, Clone)]
pub struct PadicApprox {
    pub p: u64,
    pub prec: u32,
    pub scale: u32,
    pub mantissa: Int,
}

impl PadicApprox {
    pub fn from_int(p: u64, prec: u32, x: &Int) -> PadicApprox {
        PadicApprox {
            p,
            prec,
            scale: 0,
            mantissa: x.mod_floor(&int_pow(p, prec)),
        }
    }

    /// Encodes an exact rational whose denominator is a p-unit times a
    /// power of p. Fails only if the scale would exceed the precision.
    pub fn from_rat(p: u64, prec: u32, x: &Rat) -> Result<PadicApprox> {
        let v = val_p_unchecked(x, p);
        let scale = match v {
            Valuation::Infinity => 0,
            Valuation::Finite(v) if v >= 0 => 0,
            Valuation::Finite(v) => (-v) as u32,
        };
        if scale > prec {
            return Err(Error::InvalidArgument(format!(
                "denominator exponent {scale} exceeds precision {prec}"
            )));
        }
        let scaled = x * pow_rat(p, scale as i64);
        let mantissa = mod_reduce(&scaled, &int_pow(p, prec))?;
        Ok(PadicApprox {
            p,
            prec,
            scale,
            mantissa,
        })
    }

    /// Absolute precision: the value is known modulo p^(this).
    pub fn abs_prec(&self) -> i64 {
        self.prec as i64 - self.scale as i64
    }

    /// Known lower bound on the valuation (exact when below the precision).
    pub fn valuation(&self) -> Valuation {
        match val_int(&self.mantissa, self.p) {
            Valuation::Infinity => Valuation::Infinity,
            Valuation::Finite(v) => Valuation::Finite(v - self.scale as i64),
        }
    }

    /// Cancels shared powers of p between mantissa and scale.
    pub fn reduced(&self) -> PadicApprox {
        if self.scale == 0 || self.mantissa.is_zero() {
            return self.clone();
        }
        let v = val_int(&self.mantissa, self.p)
            .finite()
            .min(self.scale as i64) as u32;
        if v == 0 {
            return self.clone();
        }
        PadicApprox {
            p: self.p,
            prec: self.prec - v,
            scale: self.scale - v,
            mantissa: &self.mantissa / int_pow(self.p, v),
        }
    }

    pub fn add(&self, other: &PadicApprox) -> PadicApprox {
        assert_eq!(self.p, other.p);
        let scale = self.scale.max(other.scale);
        let abs = self.abs_prec().min(other.abs_prec()).max(0) as u32;
        let prec = abs + scale;
        let pm = int_pow(self.p, prec);
        let a = &self.mantissa * int_pow(self.p, scale - self.scale);
        let b = &other.mantissa * int_pow(self.p, scale - other.scale);
        PadicApprox {
            p: self.p,
            prec,
            scale,
            mantissa: (a + b).mod_floor(&pm),
        }
    }

    pub fn neg(&self) -> PadicApprox {
        let pm = int_pow(self.p, self.prec);
        PadicApprox {
            p: self.p,
            prec: self.prec,
            scale: self.scale,
            mantissa: (-&self.mantissa).mod_floor(&pm),
        }
    }

    pub fn sub(&self, other: &PadicApprox) -> PadicApprox {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &PadicApprox) -> PadicApprox {
        assert_eq!(self.p, other.p);
        let scale = self.scale + other.scale;
        let abs = (self.abs_prec() - other.scale as i64)
            .min(other.abs_prec() - self.scale as i64)
            .max(0) as u32;
        let prec = abs + scale;
        let pm = int_pow(self.p, prec);
        PadicApprox {
            p: self.p,
            prec,
            scale,
            mantissa: (&self.mantissa * &other.mantissa).mod_floor(&pm),
        }
    }

    pub fn mul_int(&self, c: &Int) -> PadicApprox {
        let pm = int_pow(self.p, self.prec);
        PadicApprox {
            p: self.p,
            prec: self.prec,
            scale: self.scale,
            mantissa: (&self.mantissa * c).mod_floor(&pm),
        }
    }

    /// Congruence at the overlap of the two precisions. This is the
    /// equality notion for approximations (not transitive across precision
    /// drops, which is why `Eq` is not implemented).
    pub fn agrees_with(&self, other: &PadicApprox) -> bool {
        if self.p != other.p {
            return false;
        }
        let scale = self.scale.max(other.scale);
        let abs = self.abs_prec().min(other.abs_prec());
        if abs <= 0 {
            return true;
        }
        let modulus = int_pow(self.p, abs as u32 + scale);
        let a = &self.mantissa * int_pow(self.p, scale - self.scale);
        let b = &other.mantissa * int_pow(self.p, scale - other.scale);
        (a - b).mod_floor(&modulus).is_zero()
    }
}

impl PartialEq for PadicApprox {
    fn eq(&self, other: &Self) -> bool {
        self.agrees_with(other)
    }
}

impl std::fmt::Display for PadicApprox {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.scale == 0 {
            write!(f, "{} + O({}^{})", self.mantissa, self.p, self.prec)
        } else {
            write!(
                f,
                "{}/{}^{} + O({}^{})",
                self.mantissa,
                self.p,
                self.scale,
                self.p,
                self.abs_prec()
            )
        }
    }
}

/// The unramified extension of Q_p of degree m, held at working precision
/// p^prec, presented as `Z_p[y]/(modulus)`.
#[derive(Debug, Clone)]
pub struct UnramifiedField {
    pub p: u64,
    pub m: usize,
    pub modulus: Vec<Int>,
    pub prec: u32,
    pmod: Int,
    residue: ResidueField,
}

/// Coefficient vector of length m with entries reduced mod p^prec.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnramElem {
    pub coeffs: Vec<Int>,
}

impl UnramifiedField {
    /// Builds the field, verifying that the modulus reduces to an
    /// irreducible polynomial over F_p.
    pub fn new(p: u64, m: usize, modulus: Vec<Int>, prec: u32) -> Result<UnramifiedField> {
        if modulus.len() != m + 1 || !modulus[m].is_one() {
            return Err(Error::InvalidArgument(
                "modulus must be monic of degree m".into(),
            ));
        }
        let red: Vec<u64> = modulus
            .iter()
            .map(|c| c.mod_floor(&Int::from(p)).to_u64().unwrap())
            .collect();
        let residue = ResidueField::new(p, m, red)?;
        Ok(UnramifiedField {
            p,
            m,
            modulus,
            prec,
            pmod: int_pow(p, prec),
            residue,
        })
    }

    /// The canonical field for (p, m): smallest modulus in the base-p
    /// encoding order, lifted with coefficients in [0, p).
    pub fn canonical(p: u64, m: usize, prec: u32) -> UnramifiedField {
        let modulus = residue::canonical_modulus(p, m)
            .into_iter()
            .map(Int::from)
            .collect();
        UnramifiedField::new(p, m, modulus, prec).expect("canonical modulus is irreducible")
    }

    pub fn residue_field(&self) -> &ResidueField {
        &self.residue
    }

    pub fn zero(&self) -> UnramElem {
        UnramElem {
            coeffs: vec![Int::zero(); self.m],
        }
    }

    pub fn one(&self) -> UnramElem {
        self.from_int(&Int::one())
    }

    pub fn from_int(&self, c: &Int) -> UnramElem {
        let mut coeffs = vec![Int::zero(); self.m];
        coeffs[0] = c.mod_floor(&self.pmod);
        UnramElem { coeffs }
    }

    pub fn from_coeffs(&self, coeffs: Vec<Int>) -> UnramElem {
        assert_eq!(coeffs.len(), self.m);
        UnramElem {
            coeffs: coeffs
                .into_iter()
                .map(|c| c.mod_floor(&self.pmod))
                .collect(),
        }
    }

    pub fn from_residue(&self, e: &GfElem) -> UnramElem {
        UnramElem {
            coeffs: e.iter().map(|&c| Int::from(c)).collect(),
        }
    }

    pub fn residue_of(&self, a: &UnramElem) -> GfElem {
        a.coeffs
            .iter()
            .map(|c| c.mod_floor(&Int::from(self.p)).to_u64().unwrap())
            .collect()
    }

    pub fn is_zero(&self, a: &UnramElem) -> bool {
        a.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, a: &UnramElem, b: &UnramElem) -> UnramElem {
        UnramElem {
            coeffs: a
                .coeffs
                .iter()
                .zip(&b.coeffs)
                .map(|(x, y)| (x + y).mod_floor(&self.pmod))
                .collect(),
        }
    }

    pub fn sub(&self, a: &UnramElem, b: &UnramElem) -> UnramElem {
        UnramElem {
            coeffs: a
                .coeffs
                .iter()
                .zip(&b.coeffs)
                .map(|(x, y)| (x - y).mod_floor(&self.pmod))
                .collect(),
        }
    }

    pub fn mul_int(&self, c: &Int, a: &UnramElem) -> UnramElem {
        UnramElem {
            coeffs: a
                .coeffs
                .iter()
                .map(|x| (x * c).mod_floor(&self.pmod))
                .collect(),
        }
    }

    pub fn mul(&self, a: &UnramElem, b: &UnramElem) -> UnramElem {
        // schoolbook product then reduction by the monic modulus
        let mut prod = vec![Int::zero(); 2 * self.m - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                prod[i + j] += x * y;
            }
        }
        for k in (self.m..prod.len()).rev() {
            let lead = std::mem::replace(&mut prod[k], Int::zero());
            if lead.is_zero() {
                continue;
            }
            for i in 0..self.m {
                let t = &lead * &self.modulus[i];
                prod[k - self.m + i] -= t;
            }
        }
        prod.truncate(self.m);
        UnramElem {
            coeffs: prod.into_iter().map(|c| c.mod_floor(&self.pmod)).collect(),
        }
    }

    pub fn pow(&self, a: &UnramElem, mut e: u64) -> UnramElem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// Valuation at working precision: the coordinate-wise minimum, exact
    /// for unramified extensions. All-zero coordinates report Infinity,
    /// meaning only "at least prec".
    pub fn valuation(&self, a: &UnramElem) -> Valuation {
        a.coeffs
            .iter()
            .map(|c| val_int(c, self.p))
            .fold(Valuation::Infinity, Valuation::min)
    }

    /// Exact division by p^k; the argument must be divisible.
    pub fn div_pow_p(&self, a: &UnramElem, k: u32) -> UnramElem {
        let pk = int_pow(self.p, k);
        UnramElem {
            coeffs: a
                .coeffs
                .iter()
                .map(|c| {
                    let (q, r) = c.div_rem(&pk);
                    assert!(r.is_zero(), "division by p^{k} must be exact");
                    q
                })
                .collect(),
        }
    }

    /// Inverse of a unit, by lifting the residue-field inverse with Newton
    /// iteration w <- w(2 - aw).
    pub fn inv_unit(&self, a: &UnramElem) -> Result<UnramElem> {
        let res_inv = self.residue.inv(&self.residue_of(a))?;
        let mut w = self.from_residue(&res_inv);
        let two = self.from_int(&int(2));
        let mut known = 1u32;
        while known < self.prec {
            let t = self.sub(&two, &self.mul(a, &w));
            w = self.mul(&w, &t);
            known *= 2;
        }
        Ok(w)
    }

    /// Evaluates a polynomial with integer coefficients at an element.
    pub fn eval_int_poly(&self, f: &[Int], x: &UnramElem) -> UnramElem {
        let mut acc = self.zero();
        for c in f.iter().rev() {
            acc = self.mul(&acc, x);
            acc = self.add(&acc, &self.from_int(c));
        }
        acc
    }
}

/// A lifted primitive (p^m - 1)-th root of unity together with its field.
#[derive(Debug, Clone)]
pub struct TeichmullerGen {
    pub element: UnramElem,
    pub residue_index: u64,
}

/// The canonical Teichmueller generator: among the residues of maximal
/// multiplicative order p^m - 1, the one with the smallest coefficient
/// vector in the base-p encoding order, lifted so that its (p^m - 1)-th
/// power is 1 at working precision.
pub fn teichmuller_generator(field: &UnramifiedField) -> TeichmullerGen {
    let k = field.residue_field();
    let q1 = k.order() - 1;
    let mut gen_idx = None;
    for idx in 1..k.order() {
        let e = k.from_index(idx);
        if k.mult_order(&e) == q1 {
            gen_idx = Some(idx);
            break;
        }
    }
    let idx = gen_idx.expect("GF(p^m)^x is cyclic, so a generator exists");
    let mut z = field.from_residue(&k.from_index(idx));
    // Frobenius iteration: z -> z^(p^m) converges to the Teichmueller lift,
    // gaining at least one digit per step.
    for _ in 0..field.prec {
        let next = field.pow(&z, field.p.pow(field.m as u32));
        if next == z {
            break;
        }
        z = next;
    }
    debug_assert!(q1 == 0 || field.is_zero(&field.sub(&field.pow(&z, q1), &field.one())));
    TeichmullerGen {
        element: z,
        residue_index: idx,
    }
}

/// q-th power residue test for a unit of the unramified field.
pub fn qth_power_residue(field: &UnramifiedField, u: &UnramElem, q: u64) -> Result<bool> {
    let r = field.residue_of(u);
    field.residue_field().is_qth_power(&r, q)
}

/// Hensel/Newton lift of an approximate root of f over Q_p.
///
/// Requires the Newton criterion v(f(a0)) > 2 v(f'(a0)); returns the root
/// at absolute precision `n_target`, agreeing with the seed.
pub fn hensel_lift_root_qp(f: &[Rat], p: u64, a0: &Rat, n_target: u32) -> Result<PadicApprox> {
    let eval = |x: &Rat| -> Rat {
        let mut acc = Rat::zero();
        for c in f.iter().rev() {
            acc = acc * x + c;
        }
        acc
    };
    let deriv: Vec<Rat> = f
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * Rat::from_integer(Int::from(i)))
        .collect();
    let eval_d = |x: &Rat| -> Rat {
        let mut acc = Rat::zero();
        for c in deriv.iter().rev() {
            acc = acc * x + c;
        }
        acc
    };

    let f0 = eval(a0);
    let d0 = eval_d(a0);
    let vf = val_p_unchecked(&f0, p);
    let vd = val_p_unchecked(&d0, p);
    if f0.is_zero() {
        return PadicApprox::from_rat(p, n_target, a0);
    }
    let delta = match vd {
        Valuation::Infinity => return Err(Error::NoLift),
        Valuation::Finite(d) => d,
    };
    if vf <= Valuation::Finite(2 * delta) {
        return Err(Error::NoLift);
    }

    // working precision with slack for the divisions by f'(x)
    let work = n_target as i64 + 3 * delta.abs() + 8;
    let work_mod = int_pow(p, work.max(1) as u32);
    let mut x = a0.clone();
    for _ in 0..(64 + 2 * work) {
        let fx = eval(&x);
        if fx.is_zero() {
            return PadicApprox::from_rat(p, n_target, &x);
        }
        let dx = eval_d(&x);
        let vd = val_p_unchecked(&dx, p);
        // v(f(x)) >= N + v(f'(x)) pins the root itself mod p^N
        if val_p_unchecked(&fx, p) >= Valuation::Finite(n_target as i64) + vd {
            return PadicApprox::from_rat(p, n_target, &x);
        }
        x = &x - fx / dx;
        // truncate to keep the numbers small; Newton self-corrects
        x = truncate_rat(&x, p, &work_mod);
    }
    Err(Error::Inconclusive(n_target))
}

/// Reduces a rational to `p^(-s) * (mantissa mod pmod)` form, preserving
/// congruence at the working precision.
pub(crate) fn truncate_rat(x: &Rat, p: u64, pmod: &Int) -> Rat {
    if x.is_zero() {
        return x.clone();
    }
    let v = val_p_unchecked(x, p).finite();
    let s = if v < 0 { -v } else { 0 };
    let scaled = x * pow_rat(p, s);
    match mod_reduce(&scaled, pmod) {
        Ok(m) => Rat::from_integer(m) * pow_rat(p, -s),
        Err(_) => x.clone(),
    }
}

/// Hensel lift inside an unramified field, for integer-coefficient f.
pub fn hensel_lift_root_unram(
    field: &UnramifiedField,
    f: &[Int],
    a0: &UnramElem,
) -> Result<UnramElem> {
    let deriv: Vec<Int> = f
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * Int::from(i))
        .collect();
    let fx0 = field.eval_int_poly(f, a0);
    let dx0 = field.eval_int_poly(&deriv, a0);
    if field.is_zero(&fx0) {
        return Ok(a0.clone());
    }
    let delta = match field.valuation(&dx0) {
        Valuation::Infinity => return Err(Error::NoLift),
        Valuation::Finite(d) => d,
    };
    if field.valuation(&fx0) <= Valuation::Finite(2 * delta) {
        return Err(Error::NoLift);
    }
    let mut x = a0.clone();
    for _ in 0..(2 * field.prec + 8) {
        let fx = field.eval_int_poly(f, &x);
        if field.is_zero(&fx) {
            return Ok(x);
        }
        let dx = field.eval_int_poly(&deriv, &x);
        let vd = field.valuation(&dx).finite() as u32;
        // fx / dx = (fx / p^vd) * inv(unit part of dx)
        let vf = match field.valuation(&fx) {
            Valuation::Infinity => return Ok(x),
            Valuation::Finite(v) => v as u32,
        };
        if vf < vd {
            return Err(Error::Inconclusive(field.prec));
        }
        let fx_red = field.div_pow_p(&fx, vd);
        let dx_unit = field.div_pow_p(&dx, vd);
        let step = field.mul(&fx_red, &field.inv_unit(&dx_unit)?);
        x = field.sub(&x, &step);
    }
    Ok(x)
}

/// A root of a monic integral polynomial in Z_p, reported modulo p^prec.
#[derive(Debug, Clone)]
pub struct ZpRoot {
    pub approx: Int,
    pub prec: u32,
}

/// All roots in Z_p of a monic, squarefree, integral polynomial, by
/// digit-by-digit isolation. `target_prec` controls the precision of the
/// reported approximations; `depth_cap` bounds the branching depth before
/// the search gives up with `Inconclusive`.
pub fn zp_roots(f: &[Int], p: u64, target_prec: u32, depth_cap: u32) -> Result<Vec<ZpRoot>> {
    let n = f.len() - 1;
    assert!(
        n >= 1 && val_int(&f[n], p) == Valuation::Finite(0),
        "zp_roots needs a p-unit leading coefficient"
    );
    let mut found: Vec<ZpRoot> = vec![];
    // stack of (polynomial, center, level): the box is center + p^level Z_p.
    // The polynomial changes only by deflation after an exact root.
    let mut stack: Vec<(Vec<Int>, Int, u32)> = vec![(f.to_vec(), Int::zero(), 0)];
    while let Some((g, a, j)) = stack.pop() {
        let deg = g.len() - 1;
        if deg == 0 {
            continue;
        }
        // Taylor coefficients of g at a: g(a + h) = sum T_k h^k, all integral
        let taylor = int_taylor(&g, &a);
        let v0 = val_int(&taylor[0], p);
        if !v0.is_finite() {
            found.push(ZpRoot {
                approx: a.mod_floor(&int_pow(p, target_prec)),
                prec: target_prec,
            });
            // deflate by (x - a) and rescan the box for further roots
            let mut q = vec![Int::zero(); deg];
            let mut carry = g[deg].clone();
            for k in (1..deg + 1).rev() {
                q[k - 1] = carry.clone();
                carry = &g[k - 1] + &a * &carry;
            }
            debug_assert!(carry.is_zero());
            stack.push((q, a, j));
            continue;
        }
        let v1 = val_int(&taylor[1], p);
        if let Valuation::Finite(d) = v1 {
            if v0 > Valuation::Finite(2 * d) {
                // Newton converges: exactly one root lives in this box
                let fr: Vec<Rat> = g.iter().map(|c| Rat::from_integer(c.clone())).collect();
                let seed = Rat::from_integer(a.clone());
                let lifted = hensel_lift_root_qp(&fr, p, &seed, target_prec)?;
                found.push(ZpRoot {
                    approx: lifted.mantissa.mod_floor(&int_pow(p, target_prec)),
                    prec: target_prec,
                });
                continue;
            }
        }
        if j >= depth_cap {
            return Err(Error::Inconclusive(depth_cap));
        }
        let pj = int_pow(p, j);
        for d in 0..p {
            let a2 = &a + &pj * Int::from(d);
            let t2 = int_taylor(&g, &a2);
            let v0c = val_int(&t2[0], p);
            let bound = (1..=deg)
                .map(|k| val_int(&t2[k], p) + Valuation::Finite((k as i64) * (j as i64 + 1)))
                .fold(Valuation::Infinity, Valuation::min);
            if v0c >= bound {
                stack.push((g.clone(), a2, j + 1));
            }
        }
    }
    found.sort_by(|x, y| x.approx.cmp(&y.approx));
    found.dedup_by(|x, y| x.approx == y.approx);
    Ok(found)
}

/// Integer Taylor coefficients f^(k)(a)/k! via binomial expansion.
fn int_taylor(f: &[Int], a: &Int) -> Vec<Int> {
    let n = f.len() - 1;
    // powers of a
    let mut apow = vec![Int::one()];
    for i in 1..=n {
        apow.push(&apow[i - 1] * a);
    }
    let mut out = vec![Int::zero(); n + 1];
    for (i, c) in f.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let mut binom = Int::one();
        for (k, item) in out.iter_mut().enumerate().take(i + 1) {
            *item += c * &binom * &apow[i - k];
            // binom C(i, k+1) = C(i, k) * (i - k) / (k + 1)
            binom = binom * Int::from((i - k) as u64) / Int::from(k as u64 + 1);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;

    #[test]
    fn hensel_sqrt7_over_q3() {
        // independent oracle: exhaust squares mod 3^5
        let expected: Vec<u64> = (0..243u64).filter(|a| a * a % 243 == 7).collect();
        assert_eq!(expected, vec![68, 175]);
        let f = [rat(-7), rat(0), rat(1)];
        let root = hensel_lift_root_qp(&f, 3, &rat(1), 5).unwrap();
        // the lift stays on the seed's branch: 175 = 1 mod 3
        assert_eq!(root.mantissa, int(175));
        assert_eq!(root.scale, 0);
    }

    #[test]
    fn hensel_exact_root_is_fixed() {
        let f = [rat(-1), rat(0), rat(0), rat(1)];
        let root = hensel_lift_root_qp(&f, 5, &rat(1), 8).unwrap();
        assert_eq!(root.mantissa, int(1));
    }

    #[test]
    fn hensel_rejects_nonsquare() {
        let f = [rat(1), rat(0), rat(1)];
        match hensel_lift_root_qp(&f, 3, &rat(1), 5) {
            Err(Error::NoLift) => {}
            other => panic!("expected NoLift, got {other:?}"),
        }
    }

    #[test]
    fn teichmuller_canonical_residues() {
        for (p, expect) in [(3u64, 2u64), (5, 2), (7, 3), (13, 2)] {
            let k = UnramifiedField::canonical(p, 1, 12);
            let t = teichmuller_generator(&k);
            assert_eq!(t.residue_index, expect, "p={p}");
            // full multiplicative order at the residue level
            let rf = k.residue_field();
            assert_eq!(rf.mult_order(&k.residue_of(&t.element)), p - 1);
            // lifted root of unity at working precision
            let pow = k.pow(&t.element, p - 1);
            assert_eq!(pow, k.one());
        }
    }

    #[test]
    fn teichmuller_order_in_extension() {
        let k = UnramifiedField::canonical(3, 3, 8);
        let t = teichmuller_generator(&k);
        let rf = k.residue_field();
        let r = k.residue_of(&t.element);
        assert_eq!(rf.mult_order(&r), 26);
        // no proper divisor of 26 kills it
        for d in [1u64, 2, 13] {
            assert_ne!(rf.pow(&r, d), rf.one());
        }
        assert_eq!(k.pow(&t.element, 26), k.one());
    }

    #[test]
    fn qth_power_residue_examples() {
        let k = UnramifiedField::canonical(7, 1, 8);
        let one = k.one();
        assert!(qth_power_residue(&k, &one, 3).unwrap());
        let two = k.from_int(&int(2));
        assert!(!qth_power_residue(&k, &two, 3).unwrap());
        let six = k.from_int(&int(6));
        assert!(qth_power_residue(&k, &six, 3).unwrap());
    }

    #[test]
    fn zp_roots_finds_rational_roots() {
        // (x - 1)(x - 4)(x + 2) = x^3 - 3x^2 - 6x + 8
        let f = [int(8), int(-6), int(-3), int(1)];
        let mut roots = zp_roots(&f, 3, 6, 30).unwrap();
        roots.sort_by_key(|r| r.approx.clone());
        let vals: Vec<Int> = roots.iter().map(|r| r.approx.clone()).collect();
        let pm = int_pow(3, 6);
        assert_eq!(
            vals,
            vec![int(1), int(4), (int(-2)).mod_floor(&pm)]
                .into_iter()
                .map(|v| v.mod_floor(&pm))
                .collect::<Vec<_>>()
        );
    }

    #[test]
    fn zp_roots_none_for_irreducible() {
        let f = [int(3), int(3), int(0), int(1)]; // x^3 + 3x + 3, Eisenstein
        assert!(zp_roots(&f, 3, 6, 30).unwrap().is_empty());
        let g = [int(1), int(2), int(0), int(1)]; // x^3 + 2x + 1, irreducible mod 3
        assert!(zp_roots(&g, 3, 6, 30).unwrap().is_empty());
    }

    #[test]
    fn zp_roots_inseparable_reduction() {
        // (x-1)^3 - 9(x-1) + 27 = x^3 - 3x^2 - 6x + 35 is the minimal
        // polynomial of 3w + 1 with w a root of x^3 - x + 1, so it generates
        // the unramified cubic and has no roots in Z_3. Its reduction mod 3
        // is (x-1)^3, which defeats naive mod-p filtering.
        let f = [int(35), int(-6), int(-3), int(1)];
        assert!(zp_roots(&f, 3, 8, 40).unwrap().is_empty());
    }

    #[test]
    fn lifted_root_resubstitutes_to_zero() {
        let f = [rat(-7), rat(0), rat(1)];
        let root = hensel_lift_root_qp(&f, 3, &rat(1), 9).unwrap();
        let x = &root.mantissa;
        let val = x * x - int(7);
        assert!(val.mod_floor(&int_pow(3, 9)).is_zero());
    }

    #[test]
    fn precision_monotonicity() {
        let f = [rat(-7), rat(0), rat(1)];
        let lo = hensel_lift_root_qp(&f, 3, &rat(1), 4).unwrap();
        let hi = hensel_lift_root_qp(&f, 3, &rat(1), 9).unwrap();
        assert!(lo.agrees_with(&hi));
    }

    #[test]
    fn padic_approx_arithmetic() {
        let a = PadicApprox::from_rat(3, 6, &crate::exactnum::rat_frac(1, 2)).unwrap();
        let b = PadicApprox::from_int(3, 6, &int(2));
        let prod = a.mul(&b);
        assert!(prod.agrees_with(&PadicApprox::from_int(3, 6, &int(1))));
        let half_plus_half = a.add(&a);
        assert!(half_plus_half.agrees_with(&PadicApprox::from_int(3, 6, &int(1))));
        // scaled value: 1/3 has valuation -1
        let third = PadicApprox::from_rat(3, 6, &crate::exactnum::rat_frac(1, 3)).unwrap();
        assert_eq!(third.valuation(), Valuation::Finite(-1));
    }
}
