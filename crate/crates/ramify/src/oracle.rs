//! Independent brute-force verification of classification verdicts.
//!
//! The central question: do two irreducible polynomials of the same prime
//! degree generate isomorphic extensions of Q_p? For prime degree this is
//! equivalent to one having a root in the quotient ring of the other, so
//! the oracle searches for such a root directly, never consulting the
//! closed-form classifiers.
//!
//! The search is digit-by-digit isolation in the coordinate lattice
//! `Z_p[theta]` of `K[x]/(f)`: branch on the next base-p digit of every
//! coordinate, prune boxes that provably contain no root (valuations of the
//! exact Taylor coefficients, measured through the characteristic
//! polynomial norm), and hand over to Newton iteration once
//! v(g(x)) > 2 v(g'(x)) holds. Roots of the maximal order that fall
//! outside the coordinate lattice are caught by rescaling: the search is
//! repeated for g(x / p^s) with the denominator exponent s bounded by
//! half the discriminant valuation of f.
//!
//! A "no root" answer is only reported when every branch died before the
//! depth cap; branches still alive at the cap surface as `Inconclusive`,
//! never as a silent "false".

use num_integer::Integer as _;
use num_traits::{One, ToPrimitive, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::exactnum::{pow_rat, rat, val_int, val_p_unchecked, Int, Rat, Valuation};
use crate::padic::residue::{fp_eval, fp_rem};
use crate::padic::{
    hensel_lift_root_unram, int_pow, truncate_rat, PadicApprox, UnramElem, UnramifiedField,
};
use crate::polyring::{bareiss_det, certify_irreducible, discriminant, CertifyOutcome, Poly};

/// An element of `K[x]/(f)`, as a coefficient vector in the power basis of
/// the (rescaled, integral) modulus.
#[derive(Debug, Clone)]
pub struct QuotientElem {
    pub coeffs: Vec<PadicApprox>,
}

impl QuotientElem {
    /// Exact rational representatives of the coordinates.
    pub fn rat_coords(&self) -> Vec<Rat> {
        self.coeffs
            .iter()
            .map(|c| Rat::from_integer(c.mantissa.clone()) * pow_rat(c.p, -(c.scale as i64)))
            .collect()
    }
}

/// Deterministic corpus generation parameters.
#[derive(Debug, Clone)]
pub struct CorpusSpec {
    pub p: u64,
    pub degree: usize,
    /// max |numerator| of a coefficient
    pub height: u64,
    /// max power-of-p denominator exponent
    pub den_exp_bound: u32,
    pub count: usize,
    pub seed: u64,
}

#[derive(Debug, Clone)]
pub struct Corpus {
    pub polys: Vec<Poly>,
    /// candidates dropped because no irreducibility certificate applied
    pub discarded: usize,
}

/// Deterministic pseudorandom monic polynomials of the given degree and
/// height, filtered to those with a valid irreducibility certificate.
pub fn generate_corpus(spec: &CorpusSpec) -> Result<Corpus> {
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let mut polys = Vec::with_capacity(spec.count);
    let mut discarded = 0usize;
    let h = spec.height as i64;
    let max_attempts = 400 * spec.count + 2000;
    let mut attempts = 0;
    while polys.len() < spec.count && attempts < max_attempts {
        attempts += 1;
        let mut coeffs: Vec<Rat> = Vec::with_capacity(spec.degree + 1);
        for _ in 0..spec.degree {
            let num = rng.gen_range(-h..=h);
            let e = if spec.den_exp_bound > 0 && rng.gen_bool(0.25) {
                rng.gen_range(1..=spec.den_exp_bound)
            } else {
                0
            };
            coeffs.push(rat(num) * pow_rat(spec.p, -(e as i64)));
        }
        coeffs.push(rat(1));
        let f = Poly::new(coeffs);
        if f.degree() != Some(spec.degree) || f.coeff(0).is_zero() {
            discarded += 1;
            continue;
        }
        match certify_irreducible(&f, spec.p)? {
            CertifyOutcome::Certified(_) => polys.push(f),
            _ => discarded += 1,
        }
    }
    if polys.len() < spec.count {
        return Err(Error::Inconclusive(spec.count as u32));
    }
    Ok(Corpus { polys, discarded })
}

// ---------------------------------------------------------------------------
// exact arithmetic in the quotient lattice Z[x]/(f), f monic integral
// ---------------------------------------------------------------------------

struct QuotientCtx {
    p: u64,
    n: usize,
    modulus: Vec<Int>, // monic, length n + 1
    modp: Vec<u64>,    // reduction mod p, still monic of degree n
    /// distinct irreducible factors of the reduced modulus, as
    /// (root, None) for linear factors and (0, Some(poly)) otherwise:
    /// a residue is a zero divisor iff one of these divides it
    factor_tests: Vec<(u64, Option<Vec<u64>>)>,
}

type Lat = Vec<Int>; // coordinate vector of length n

impl QuotientCtx {
    fn new(p: u64, modulus: Vec<Int>) -> QuotientCtx {
        let n = modulus.len() - 1;
        let pint = Int::from(p);
        let modp: Vec<u64> = modulus
            .iter()
            .map(|c| c.mod_floor(&pint).to_u64().unwrap())
            .collect();
        let factor_tests = crate::padic::residue::fp_distinct_irreducible_factors(&modp, p)
            .into_iter()
            .map(|g| {
                if g.len() == 2 {
                    ((p - g[0] % p) % p, None)
                } else {
                    (0, Some(g))
                }
            })
            .collect();
        QuotientCtx {
            p,
            n,
            modulus,
            modp,
            factor_tests,
        }
    }

    /// Whether a residue vector is zero or a zero divisor in
    /// F_p[x]/(modp): some irreducible factor of the modulus divides it.
    /// Equivalent to the multiplication-matrix determinant vanishing.
    fn residue_is_zero_divisor(&self, zp: &[u64]) -> bool {
        for (root, poly) in &self.factor_tests {
            let hit = match poly {
                None => fp_eval(zp, *root, self.p) == 0,
                Some(g) => fp_rem(zp, g, self.p).is_empty(),
            };
            if hit {
                return true;
            }
        }
        false
    }

    fn zero(&self) -> Lat {
        vec![Int::zero(); self.n]
    }

    fn mul(&self, a: &Lat, b: &Lat) -> Lat {
        let mut prod = vec![Int::zero(); 2 * self.n - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                prod[i + j] += x * y;
            }
        }
        for k in (self.n..prod.len()).rev() {
            let lead = std::mem::replace(&mut prod[k], Int::zero());
            if lead.is_zero() {
                continue;
            }
            for i in 0..self.n {
                let t = &lead * &self.modulus[i];
                prod[k - self.n + i] -= t;
            }
        }
        prod.truncate(self.n);
        prod
    }

    /// Taylor coefficients of g around center a, in the lattice:
    /// g(a + Y) = sum_k T_k Y^k with integral T_k.
    fn taylor(&self, g: &[Int], a: &Lat) -> Vec<Lat> {
        let deg = g.len() - 1;
        let mut apow: Vec<Lat> = vec![self.zero(); deg + 1];
        apow[0] = {
            let mut e = self.zero();
            e[0] = Int::one();
            e
        };
        for i in 1..=deg {
            apow[i] = self.mul(&apow[i - 1], a);
        }
        let mut out = vec![self.zero(); deg + 1];
        for (i, c) in g.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mut binom = Int::one();
            for k in 0..=i {
                for (o, ap) in out[k].iter_mut().zip(apow[i - k].iter()) {
                    *o += c * &binom * ap;
                }
                binom = &binom * Int::from((i - k) as u64) / Int::from(k as u64 + 1);
            }
        }
        out
    }

    /// n * v_p(z) via the characteristic-polynomial norm: v_p of the
    /// determinant of the multiplication-by-z matrix. Exact because the
    /// modulus is irreducible over Q.
    fn vn(&self, z: &Lat) -> Valuation {
        if z.iter().all(|c| c.is_zero()) {
            return Valuation::Infinity;
        }
        let mut mat = vec![vec![Int::zero(); self.n]; self.n];
        let mut col = z.clone();
        for j in 0..self.n {
            for (i, row) in mat.iter_mut().enumerate() {
                row[j] = col[i].clone();
            }
            if j + 1 < self.n {
                // multiply by x
                let mut next = vec![Int::zero(); self.n + 1];
                next[1..=self.n].clone_from_slice(&col);
                let lead = std::mem::replace(&mut next[self.n], Int::zero());
                if !lead.is_zero() {
                    for (ni, mi) in next.iter_mut().zip(&self.modulus) {
                        *ni -= &lead * mi;
                    }
                }
                next.truncate(self.n);
                col = next;
            }
        }
        val_int(&bareiss_det(mat), self.p)
    }

    /// Quotient product with coefficients reduced mod pm throughout, so
    /// windowed (small-integer) arithmetic never touches the full-size
    /// modulus coefficients.
    fn mul_mod(&self, a: &Lat, b: &Lat, pm: &Int) -> Lat {
        let mut prod = vec![Int::zero(); 2 * self.n - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                prod[i + j] = (&prod[i + j] + x * y).mod_floor(pm);
            }
        }
        for k in (self.n..prod.len()).rev() {
            let lead = std::mem::replace(&mut prod[k], Int::zero());
            if lead.is_zero() {
                continue;
            }
            for i in 0..self.n {
                let m = self.modulus[i].mod_floor(pm);
                prod[k - self.n + i] = (&prod[k - self.n + i] - lead.clone() * m).mod_floor(pm);
            }
        }
        prod.truncate(self.n);
        prod
    }

    /// Whether n * v_p(z) >= need, decided on coordinates reduced mod
    /// p^need: the multiplication-matrix determinant is an integer
    /// polynomial in the entries, so its value mod p^need only depends on
    /// the reduced entries.
    fn vn_at_least(&self, z: &Lat, _need: u32, pneed: &Int) -> bool {
        let mut mat = vec![vec![Int::zero(); self.n]; self.n];
        let mut col: Lat = z.iter().map(|c| c.mod_floor(pneed)).collect();
        for j in 0..self.n {
            for (i, row) in mat.iter_mut().enumerate() {
                row[j] = col[i].clone();
            }
            if j + 1 < self.n {
                let mut next = vec![Int::zero(); self.n + 1];
                next[1..=self.n].clone_from_slice(&col);
                let lead = std::mem::replace(&mut next[self.n], Int::zero());
                if !lead.is_zero() {
                    for (ni, mi) in next.iter_mut().zip(&self.modulus) {
                        *ni = (&*ni - &lead * mi.mod_floor(pneed)).mod_floor(pneed);
                    }
                }
                next.truncate(self.n);
                col = next;
            }
        }
        bareiss_det(mat).mod_floor(pneed).is_zero()
    }

    /// Residue vector of z after exact division by p^c.
    fn residue_after_shift(&self, z: &Lat, c: u32) -> Vec<u64> {
        let pc = int_pow(self.p, c);
        let pint = Int::from(self.p);
        z.iter()
            .map(|x| {
                let (q, r) = x.div_rem(&pc);
                debug_assert!(r.is_zero());
                q.mod_floor(&pint).to_u64().unwrap()
            })
            .collect()
    }

    fn mulp(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        let prod = crate::padic::residue::fp_mul(a, b, self.p);
        let mut red = fp_rem(&prod, &self.modp, self.p);
        red.resize(self.n, 0);
        red
    }
}


// ---------------------------------------------------------------------------
// rational-coordinate arithmetic for the Newton phase
// ---------------------------------------------------------------------------

fn qmul_rat(modulus: &[Int], a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let n = modulus.len() - 1;
    let mut prod = vec![Rat::zero(); 2 * n - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            prod[i + j] = &prod[i + j] + x * y;
        }
    }
    for k in (n..prod.len()).rev() {
        let lead = std::mem::replace(&mut prod[k], Rat::zero());
        if lead.is_zero() {
            continue;
        }
        for i in 0..n {
            prod[k - n + i] = &prod[k - n + i] - &lead * Rat::from_integer(modulus[i].clone());
        }
    }
    prod.truncate(n);
    prod
}

fn qeval_rat(modulus: &[Int], g: &[Int], x: &[Rat]) -> Vec<Rat> {
    let n = modulus.len() - 1;
    let mut acc = vec![Rat::zero(); n];
    for c in g.iter().rev() {
        acc = qmul_rat(modulus, &acc, x);
        acc[0] = &acc[0] + Rat::from_integer(c.clone());
    }
    acc
}

/// Exact evaluation of a rational polynomial at a rational-coordinate
/// element of `Q[x]/(f)`. Public so tests can re-substitute oracle roots.
pub fn quotient_eval(g: &Poly, f: &Poly, x: &[Rat]) -> Vec<Rat> {
    let fi = f
        .as_int_coeffs()
        .expect("quotient modulus must be integral");
    let n = fi.len() - 1;
    let mut acc = vec![Rat::zero(); n];
    for c in g.coeffs().iter().rev() {
        acc = qmul_rat(&fi, &acc, x);
        acc[0] = &acc[0] + c;
    }
    acc
}

/// n * v_p of an element of `Q[x]/(f)` with rational coordinates, via the
/// characteristic-polynomial norm.
pub fn quotient_vn(f: &Poly, z: &[Rat], p: u64) -> Valuation {
    if z.iter().all(|c| c.is_zero()) {
        return Valuation::Infinity;
    }
    let fi = f
        .as_int_coeffs()
        .expect("quotient modulus must be integral");
    let n = fi.len() - 1;
    // clear denominators: vn(c z) = vn(z) + n v(c)
    let mut den = Int::one();
    for c in z {
        den = den.lcm(c.denom());
    }
    let zi: Lat = z.iter().map(|c| c.numer() * (&den / c.denom())).collect();
    let ctx = QuotientCtx::new(p, fi);
    match ctx.vn(&zi) {
        Valuation::Infinity => Valuation::Infinity,
        Valuation::Finite(v) => Valuation::Finite(v - n as i64 * val_int(&den, p).finite()),
    }
}

// ---------------------------------------------------------------------------
// the root search
// ---------------------------------------------------------------------------

struct SearchOutcome {
    root: Option<Vec<Rat>>,
    hit_cap: bool,
}

/// Digit-by-digit search for a root of g (monic integral) in the lattice
/// `Z_p[theta]` of `Q_p[x]/(modulus)`. Returns rational coordinates of a root
/// verified to absolute precision `target`, or reports that every branch
/// died (`root: None, hit_cap: false`).
fn lattice_root_search(
    ctx: &QuotientCtx,
    g: &[Int],
    target: i64,
    depth_cap: u32,
) -> Result<SearchOutcome> {
    let n = ctx.n;
    let deg = g.len() - 1;
    let mut hit_cap = false;
    // (center, level)
    let mut stack: Vec<(Lat, u32)> = vec![(ctx.zero(), 0)];
    let digits = (ctx.p as usize).pow(n as u32);

    while let Some((a, j)) = stack.pop() {
        let taylor = ctx.taylor(g, &a);
        let vn0 = ctx.vn(&taylor[0]);
        if !vn0.is_finite() {
            // exact root of g in the lattice
            let coords: Vec<Rat> = a.iter().map(|c| Rat::from_integer(c.clone())).collect();
            return Ok(SearchOutcome {
                root: Some(coords),
                hit_cap,
            });
        }
        let vn1 = ctx.vn(&taylor[1]);
        if let Valuation::Finite(d1) = vn1 {
            if vn0.finite() > 2 * d1 {
                let root = newton_lift_quotient(ctx, g, &a, target)?;
                return Ok(SearchOutcome {
                    root: Some(root),
                    hit_cap,
                });
            }
        }
        if j >= depth_cap {
            hit_cap = true;
            continue;
        }
        let pj = int_pow(ctx.p, j);
        // Scale the Taylor coefficients: W_k = T_k p^(jk), so that
        // g(a + p^j d) = sum W_k d^k. Every W_k coordinate is divisible by
        // p^c_min; a child box can stay alive only if the norm of its value
        // exceeds n(c_min + 1), so children whose shifted residue has a
        // nonzero norm mod p are dead. That filter is all-u64.
        let scaled: Vec<Lat> = taylor
            .iter()
            .enumerate()
            .map(|(k, t)| {
                let pk = int_pow(ctx.p, (k as u32) * j);
                t.iter().map(|c| c * &pk).collect()
            })
            .collect();
        let mut c_min: Option<i64> = None;
        for t in &scaled {
            for c in t {
                if let Valuation::Finite(v) = val_int(c, ctx.p) {
                    c_min = Some(c_min.map_or(v, |m: i64| m.min(v)));
                }
            }
        }
        let c_min = c_min.unwrap_or(0).max(0) as u32;
        let scaled_red: Vec<Vec<u64>> = scaled
            .iter()
            .map(|t| ctx.residue_after_shift(t, c_min))
            .collect();
        let top = scaled_red
            .iter()
            .rposition(|t| t.iter().any(|&c| c != 0))
            .unwrap_or(0);

        // Alive bound: a child box can contain a root only if
        // vn(g(child)) >= mu + n, with mu = min_k vn(T_k p^(jk)). The test
        // runs on coordinates reduced mod p^need, need = mu + n - n c_min,
        // so the per-child arithmetic stays on small integers no matter
        // how deep the search is.
        let mut mu = Valuation::Infinity;
        for t in &scaled {
            mu = mu.min(ctx.vn(t));
        }
        let mu = match mu {
            Valuation::Finite(v) => v,
            Valuation::Infinity => unreachable!("the leading Taylor coefficient is a unit"),
        };
        let need = (mu + n as i64 - (n as i64) * c_min as i64).max(1) as u32;
        let pneed = int_pow(ctx.p, need);
        let wred: Vec<Lat> = scaled
            .iter()
            .map(|t| {
                let pc = int_pow(ctx.p, c_min);
                t.iter()
                    .map(|c| (c / &pc).mod_floor(&pneed))
                    .collect()
            })
            .collect();

        for digit_idx in 0..digits {
            // digit vector in base p, u64 and lattice forms
            let mut dres = vec![0u64; n];
            let mut k = digit_idx;
            for item in dres.iter_mut() {
                *item = (k % ctx.p as usize) as u64;
                k /= ctx.p as usize;
            }
            // w_bar = sum (W_k / p^c_min) d^k over F_p[x]/(modp), by
            // Horner from the top nonzero coefficient
            let mut wbar = scaled_red[top].clone();
            for t in scaled_red[..top].iter().rev() {
                wbar = ctx.mulp(&wbar, &dres);
                for (wi, ti) in wbar.iter_mut().zip(t.iter()) {
                    *wi = (*wi + ti) % ctx.p;
                }
            }
            if !ctx.residue_is_zero_divisor(&wbar) {
                continue;
            }
            // small-integer alive test: det of the multiplication matrix
            // of w/p^c_min must vanish mod p^need. Unlike the mod-p
            // filter, every Taylor term participates here: terms that die
            // mod p can still matter mod p^need.
            let dlat: Lat = dres.iter().map(|&y| Int::from(y)).collect();
            let mut w = wred[wred.len() - 1].clone();
            for t in wred[..wred.len() - 1].iter().rev() {
                w = ctx.mul_mod(&w, &dlat, &pneed);
                for (wi, ti) in w.iter_mut().zip(t.iter()) {
                    *wi = (&*wi + ti).mod_floor(&pneed);
                }
            }
            if !ctx.vn_at_least(&w, need, &pneed) {
                continue;
            }
            let a2: Lat = a
                .iter()
                .zip(dres.iter())
                .map(|(x, &y)| x + Int::from(y) * &pj)
                .collect();
            stack.push((a2, j + 1));
        }
    }
    Ok(SearchOutcome {
        root: None,
        hit_cap,
    })
}

/// Newton iteration from a seed satisfying the convergence criterion,
/// with exact rational coordinates truncated at a generous working
/// precision. Returns coordinates with v(g(x)) >= target.
fn newton_lift_quotient(ctx: &QuotientCtx, g: &[Int], seed: &Lat, target: i64) -> Result<Vec<Rat>> {
    let n = ctx.n;
    let modulus = &ctx.modulus;
    let deriv: Vec<Int> = g
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * Int::from(i as u64))
        .collect();
    let mut x: Vec<Rat> = seed.iter().map(|c| Rat::from_integer(c.clone())).collect();
    let d_seed = qeval_rat(modulus, &deriv, &x);
    let delta = match quotient_vn_rat(ctx, &d_seed) {
        Valuation::Finite(v) => v, // this is n * v(g'(seed))
        Valuation::Infinity => return Err(Error::NoLift),
    };
    let work = (target + 2 * (delta / n as i64 + 1) + 8).max(8) as u32;
    let pmod = int_pow(ctx.p, work + 16);
    for _ in 0..(4 * work as usize + 32) {
        let fx = qeval_rat(modulus, g, &x);
        let dx = qeval_rat(modulus, &deriv, &x);
        match (quotient_vn_rat(ctx, &fx), quotient_vn_rat(ctx, &dx)) {
            (Valuation::Infinity, _) => return Ok(x),
            (Valuation::Finite(v), Valuation::Finite(vd)) => {
                // vn(g(x)) >= n*target + vn(g'(x)) pins the root mod p^target
                if v >= n as i64 * target + vd {
                    return Ok(x);
                }
            }
            (_, Valuation::Infinity) => return Err(Error::NoLift),
        }
        let step = solve_mul_system(modulus, &dx, &fx)?;
        for (xi, si) in x.iter_mut().zip(step.iter()) {
            *xi = &*xi - si;
        }
        for xi in x.iter_mut() {
            *xi = truncate_rat(xi, ctx.p, &pmod);
        }
    }
    Err(Error::Inconclusive(work))
}

fn quotient_vn_rat(ctx: &QuotientCtx, z: &[Rat]) -> Valuation {
    if z.iter().all(|c| c.is_zero()) {
        return Valuation::Infinity;
    }
    let mut den = Int::one();
    for c in z {
        den = den.lcm(c.denom());
    }
    let zi: Lat = z.iter().map(|c| c.numer() * (&den / c.denom())).collect();
    match ctx.vn(&zi) {
        Valuation::Infinity => Valuation::Infinity,
        Valuation::Finite(v) => Valuation::Finite(v - ctx.n as i64 * val_int(&den, ctx.p).finite()),
    }
}

/// Solves (mult-by-b) w = rhs in Q[x]/(modulus): w = rhs / b.
fn solve_mul_system(modulus: &[Int], b: &[Rat], rhs: &[Rat]) -> Result<Vec<Rat>> {
    let n = modulus.len() - 1;
    // columns: b * x^j
    let mut cols: Vec<Vec<Rat>> = Vec::with_capacity(n);
    let mut col = b.to_vec();
    for j in 0..n {
        cols.push(col.clone());
        if j + 1 < n {
            // multiply by x mod modulus
            let mut next = vec![Rat::zero(); n + 1];
            for (i, c) in col.iter().enumerate() {
                next[i + 1] = c.clone();
            }
            let lead = std::mem::replace(&mut next[n], Rat::zero());
            if !lead.is_zero() {
                for i in 0..n {
                    next[i] = &next[i] - &lead * Rat::from_integer(modulus[i].clone());
                }
            }
            next.truncate(n);
            col = next;
        }
    }
    // Gaussian elimination on [cols | rhs]
    let mut m: Vec<Vec<Rat>> = (0..n)
        .map(|i| {
            let mut row: Vec<Rat> = (0..n).map(|j| cols[j][i].clone()).collect();
            row.push(rhs[i].clone());
            row
        })
        .collect();
    for k in 0..n {
        let pivot = (k..n).find(|&i| !m[i][k].is_zero());
        let pivot = pivot.ok_or(Error::NoLift)?;
        m.swap(k, pivot);
        let pv = m[k][k].clone();
        for x in m[k].iter_mut().skip(k) {
            *x = &*x / &pv;
        }
        let pivot_row = m[k].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == k || row[k].is_zero() {
                continue;
            }
            let factor = row[k].clone();
            for (x, pvj) in row.iter_mut().zip(&pivot_row).skip(k) {
                *x = &*x - &factor * pvj;
            }
        }
    }
    Ok(m.into_iter().map(|row| row[n].clone()).collect())
}

/// Searches for a root of g inside `Q_p[x]/(f)` at absolute precision
/// `precision`. Both polynomials must be monic and integral (the caller
/// rescales first); they need not have the same degree for the search
/// itself, though the isomorphism reading requires it.
pub fn find_root_in_quotient(
    g: &Poly,
    f: &Poly,
    p: u64,
    precision: u32,
) -> Result<Option<QuotientElem>> {
    let fi = f.as_int_coeffs().ok_or_else(|| {
        Error::InvalidArgument("quotient modulus must be integral; rescale first".into())
    })?;
    let gi = g.as_int_coeffs().ok_or_else(|| {
        Error::InvalidArgument("search polynomial must be integral; rescale first".into())
    })?;
    if !f.is_monic() || !g.is_monic() {
        return Err(Error::InvalidArgument(
            "find_root_in_quotient needs monic polynomials".into(),
        ));
    }
    let n = fi.len() - 1;
    let deg = gi.len() - 1;
    if n < 2 || deg < 1 {
        return Err(Error::InvalidArgument("degrees too small".into()));
    }
    let delta_f = discriminant(f)?;
    let vf = match val_p_unchecked(&delta_f, p) {
        Valuation::Finite(v) => v.max(0),
        Valuation::Infinity => {
            return Err(Error::Rejected("quotient modulus is not separable".into()))
        }
    };
    let delta_g = discriminant(g).unwrap_or_else(|_| Rat::one());
    let vg = match val_p_unchecked(&delta_g, p) {
        Valuation::Finite(v) => v.max(0),
        Valuation::Infinity => {
            return Err(Error::Rejected("search polynomial is not separable".into()))
        }
    };

    let s_max = (vf / 2 + 1) as u32;
    let ctx = QuotientCtx::new(p, fi);
    let mut any_cap = false;
    for s in 0..=s_max {
        // G_s(y) = p^(s deg) g(y / p^s), monic integral
        let gs: Vec<Int> = gi
            .iter()
            .enumerate()
            .map(|(i, c)| c * int_pow(p, s * (deg - i) as u32))
            .collect();
        let cap = (vg + (s as i64) * (deg as i64) * (deg as i64 - 1) + 2 * deg as i64 + 10)
            .max(precision as i64 + 4) as u32;
        let out = lattice_root_search(&ctx, &gs, precision as i64 + s as i64 * deg as i64, cap)?;
        if let Some(y) = out.root {
            // x = y / p^s
            let scale = pow_rat(p, -(s as i64));
            let coords: Vec<Rat> = y.iter().map(|c| c * &scale).collect();
            let elem = QuotientElem {
                coeffs: coords
                    .iter()
                    .map(|c| PadicApprox::from_rat(p, precision + s * deg as u32 + 4, c))
                    .collect::<Result<Vec<_>>>()?,
            };
            return Ok(Some(elem));
        }
        any_cap = any_cap || out.hit_cap;
    }
    if any_cap {
        return Err(Error::Inconclusive(s_max));
    }
    Ok(None)
}

/// Symmetric isomorphism verdict for two irreducible polynomials of equal
/// prime degree over Q_p: runs the root search in both directions and
/// requires agreement.
pub fn oracle_isomorphic(f: &Poly, g: &Poly, p: u64) -> Result<bool> {
    let (df, dg) = match (f.degree(), g.degree()) {
        (Some(a), Some(b)) => (a, b),
        _ => return Err(Error::InvalidArgument("zero polynomial".into())),
    };
    if df != dg {
        return Ok(false);
    }
    if !crate::exactnum::is_prime(df as u64) {
        return Err(Error::Unsupported(
            "oracle isomorphism testing needs prime degree".into(),
        ));
    }
    let fs = f.integral_model(p);
    let gs = g.integral_model(p);

    let dir = |a: &Poly, b: &Poly| -> Result<bool> {
        // root of a in Q_p[x]/(b)
        let prec = default_precision(b, p, df as u32);
        match find_root_in_quotient(a, b, p, prec) {
            Ok(found) => Ok(found.is_some()),
            Err(Error::Inconclusive(_)) => {
                // one retry at doubled precision before giving up
                let found = find_root_in_quotient(a, b, p, prec * 2 + 8)?;
                Ok(found.is_some())
            }
            Err(e) => Err(e),
        }
    };

    let fwd = dir(&gs, &fs)?;
    let bwd = dir(&fs, &gs)?;
    if fwd != bwd {
        return Err(Error::Inconsistency(format!(
            "asymmetric oracle verdict: {fwd} vs {bwd} for {f} / {g}"
        )));
    }
    Ok(fwd)
}

/// Default oracle working precision for a quotient modulus f:
/// v_p(disc f) + 2q + 4.
pub fn default_precision(f: &Poly, p: u64, q: u32) -> u32 {
    let v = discriminant(f)
        .ok()
        .map(|d| match val_p_unchecked(&d, p) {
            Valuation::Finite(v) => v.max(0) as u32,
            Valuation::Infinity => 0,
        })
        .unwrap_or(0);
    v + 2 * q + 4
}

/// Root search in an unramified extension, digit by digit over the
/// residue field. Used for the "is this extension unramified?" oracle:
/// an irreducible g of degree q has a root in the unramified degree-q
/// field iff it generates that field.
pub fn find_root_in_unramified(g: &Poly, field: &UnramifiedField) -> Result<Option<UnramElem>> {
    let gs = g.integral_model(field.p);
    let gi = gs
        .as_int_coeffs()
        .ok_or_else(|| Error::InvalidArgument("expected integral coefficients".into()))?;
    let deg = gi.len() - 1;
    let k = field.residue_field();

    let mut hit_cap = false;
    let cap = field.prec.saturating_sub(2 * deg as u32 + 2);
    let mut stack: Vec<(UnramElem, u32)> = vec![(field.zero(), 0)];
    while let Some((a, j)) = stack.pop() {
        // Taylor coefficients of g at a, in the field. Field arithmetic
        // wraps at p^prec, so an all-zero value only means v >= prec; a
        // root is certified through the Newton criterion, never by the
        // wrapped zero alone.
        let taylor = unram_taylor(field, &gi, &a);
        let v0 = field.valuation(&taylor[0]);
        if let Valuation::Finite(d1) = field.valuation(&taylor[1]) {
            let criterion = match v0 {
                Valuation::Infinity => 2 * d1 < field.prec as i64,
                Valuation::Finite(v) => v > 2 * d1,
            };
            if criterion {
                let root = hensel_lift_root_unram(field, &gi, &a)?;
                return Ok(Some(root));
            }
        } else if !v0.is_finite() {
            // both g(a) and g'(a) vanish at working precision: undecidable
            hit_cap = true;
            continue;
        }
        if j >= cap {
            hit_cap = true;
            continue;
        }
        // level polynomial H(Y) = sum (T_k p^(jk - mu)) Y^k; its residue
        // roots are the only digits whose boxes can stay alive
        let mut scaled: Vec<UnramElem> = Vec::with_capacity(deg + 1);
        let mut mu = i64::MAX;
        for (idx, t) in taylor.iter().enumerate() {
            let shifted = field.mul_int(&int_pow(field.p, idx as u32 * j), t);
            if let Valuation::Finite(v) = field.valuation(&shifted) {
                mu = mu.min(v);
            }
            scaled.push(shifted);
        }
        if mu == i64::MAX {
            // g vanishes identically at this precision; cannot resolve
            hit_cap = true;
            continue;
        }
        let h_res: Vec<Vec<u64>> = scaled
            .iter()
            .map(|t| {
                let div = field.div_pow_p(t, mu as u32);
                field.residue_of(&div)
            })
            .collect();
        let digit_roots = k.poly_roots(&h_res);
        let pj = int_pow(field.p, j);
        for d in digit_roots {
            let lift = field.from_residue(&d);
            let a2 = field.add(&a, &field.mul_int(&pj, &lift));
            let t2 = unram_taylor(field, &gi, &a2);
            let vw = field.valuation(&t2[0]);
            let mut bound = Valuation::Infinity;
            for (kk, tk) in t2.iter().enumerate().skip(1) {
                let b = field.valuation(tk) + Valuation::Finite(kk as i64 * (j as i64 + 1));
                bound = bound.min(b);
            }
            if vw >= bound {
                stack.push((a2, j + 1));
            }
        }
    }
    if hit_cap {
        return Err(Error::Inconclusive(cap));
    }
    Ok(None)
}

fn unram_taylor(field: &UnramifiedField, g: &[Int], a: &UnramElem) -> Vec<UnramElem> {
    let deg = g.len() - 1;
    let mut apow = vec![field.one()];
    for i in 1..=deg {
        apow.push(field.mul(&apow[i - 1], a));
    }
    let mut out = vec![field.zero(); deg + 1];
    for (i, c) in g.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let mut binom = Int::one();
        for kk in 0..=i {
            let term = field.mul_int(&(c * &binom), &apow[i - kk]);
            out[kk] = field.add(&out[kk], &term);
            binom = &binom * Int::from((i - kk) as u64) / Int::from(kk as u64 + 1);
        }
    }
    out
}
