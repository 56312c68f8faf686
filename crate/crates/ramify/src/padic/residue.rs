//! Residue-field arithmetic: F_p and its small extensions GF(p^m).
//!
//! Elements of GF(p^m) are coefficient vectors over F_p modulo a monic
//! irreducible polynomial. Sizes here are desk scale (p^m a few thousand),
//! so everything is u64 arithmetic and exhaustive searches are cheap.

use crate::error::{Error, Result};

pub fn mod_inv_u64(a: u64, p: u64) -> u64 {
    // p prime, a nonzero mod p
    mod_pow_u64(a % p, p - 2, p)
}

pub fn mod_pow_u64(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = (acc as u128 * b as u128 % p as u128) as u64;
        }
        b = (b as u128 * b as u128 % p as u128) as u64;
        e >>= 1;
    }
    acc
}

// --- dense polynomials over F_p, lowest coefficient first ---

pub fn fp_trim(mut f: Vec<u64>) -> Vec<u64> {
    while f.last() == Some(&0) {
        f.pop();
    }
    f
}

pub fn fp_deg(f: &[u64]) -> Option<usize> {
    if f.is_empty() {
        None
    } else {
        Some(f.len() - 1)
    }
}

pub fn fp_eval(f: &[u64], x: u64, p: u64) -> u64 {
    let mut acc = 0u64;
    for c in f.iter().rev() {
        acc = ((acc as u128 * x as u128 + *c as u128) % p as u128) as u64;
    }
    acc
}

pub fn fp_mul(f: &[u64], g: &[u64], p: u64) -> Vec<u64> {
    if f.is_empty() || g.is_empty() {
        return vec![];
    }
    let mut out = vec![0u64; f.len() + g.len() - 1];
    for (i, a) in f.iter().enumerate() {
        for (j, b) in g.iter().enumerate() {
            out[i + j] = ((out[i + j] as u128 + *a as u128 * *b as u128) % p as u128) as u64;
        }
    }
    fp_trim(out)
}

pub fn fp_rem(f: &[u64], g: &[u64], p: u64) -> Vec<u64> {
    let g = fp_trim(g.to_vec());
    let dg = fp_deg(&g).expect("division by zero polynomial");
    let mut r = fp_trim(f.to_vec());
    let lead_inv = mod_inv_u64(g[dg], p);
    while let Some(dr) = fp_deg(&r) {
        if dr < dg {
            break;
        }
        let q = (r[dr] as u128 * lead_inv as u128 % p as u128) as u64;
        let shift = dr - dg;
        for (i, c) in g.iter().enumerate() {
            let sub = (q as u128 * *c as u128 % p as u128) as u64;
            r[i + shift] = (r[i + shift] + p - sub) % p;
        }
        r = fp_trim(r);
    }
    r
}

/// Quotient and remainder of f by monic-normalizable g over F_p.
pub fn fp_divmod(f: &[u64], g: &[u64], p: u64) -> (Vec<u64>, Vec<u64>) {
    let g = fp_trim(g.to_vec());
    let dg = fp_deg(&g).expect("division by zero polynomial");
    let mut r = fp_trim(f.to_vec());
    let dr0 = match fp_deg(&r) {
        Some(d) if d >= dg => d,
        _ => return (vec![], r),
    };
    let mut quot = vec![0u64; dr0 - dg + 1];
    let lead_inv = mod_inv_u64(g[dg], p);
    while let Some(dr) = fp_deg(&r) {
        if dr < dg {
            break;
        }
        let q = (r[dr] as u128 * lead_inv as u128 % p as u128) as u64;
        let shift = dr - dg;
        quot[shift] = q;
        for (i, c) in g.iter().enumerate() {
            let sub = (q as u128 * *c as u128 % p as u128) as u64;
            r[i + shift] = (r[i + shift] + p - sub) % p;
        }
        r = fp_trim(r);
    }
    (quot, r)
}

/// Distinct monic irreducible factors of f over F_p (multiplicities
/// dropped), by trial division. Desk-scale only.
pub fn fp_distinct_irreducible_factors(f: &[u64], p: u64) -> Vec<Vec<u64>> {
    let mut rem = fp_trim(f.to_vec());
    let mut out: Vec<Vec<u64>> = vec![];
    if fp_deg(&rem).is_none() {
        return out;
    }
    let mut d = 1usize;
    while fp_deg(&rem).map(|dr| dr >= d).unwrap_or(false) {
        let count = (p as usize).pow(d as u32);
        for idx in 0..count {
            let mut g = Vec::with_capacity(d + 1);
            let mut k = idx;
            for _ in 0..d {
                g.push((k % p as usize) as u64);
                k /= p as usize;
            }
            g.push(1);
            // trial division keeps only irreducible g: composites of
            // degree d have all their factors removed already
            let mut divided = false;
            loop {
                let (q, r) = fp_divmod(&rem, &g, p);
                if !r.is_empty() || q.is_empty() {
                    break;
                }
                rem = q;
                divided = true;
            }
            if divided {
                out.push(g);
            }
            if fp_deg(&rem).map(|dr| dr < d).unwrap_or(true) {
                break;
            }
        }
        d += 1;
    }
    if fp_deg(&rem).map(|dr| dr >= 1).unwrap_or(false) {
        // monic-normalize the leftover irreducible factor
        let dr = fp_deg(&rem).unwrap();
        let inv = mod_inv_u64(rem[dr], p);
        for c in rem.iter_mut() {
            *c = (*c as u128 * inv as u128 % p as u128) as u64;
        }
        out.push(rem);
    }
    out
}

pub fn fp_gcd(f: &[u64], g: &[u64], p: u64) -> Vec<u64> {
    let mut a = fp_trim(f.to_vec());
    let mut b = fp_trim(g.to_vec());
    while !b.is_empty() {
        let r = fp_rem(&a, &b, p);
        a = b;
        b = r;
    }
    if let Some(d) = fp_deg(&a) {
        // normalize monic
        let inv = mod_inv_u64(a[d], p);
        for c in a.iter_mut() {
            *c = (*c as u128 * inv as u128 % p as u128) as u64;
        }
    }
    a
}

pub fn fp_derivative(f: &[u64], p: u64) -> Vec<u64> {
    if f.len() <= 1 {
        return vec![];
    }
    fp_trim(
        f.iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| (i as u64 % p) as u128 as u64 * c % p)
            .collect(),
    )
}

pub fn fp_is_separable(f: &[u64], p: u64) -> bool {
    let d = fp_derivative(f, p);
    if d.is_empty() {
        return false;
    }
    fp_gcd(f, &d, p).len() == 1
}

/// Irreducibility over F_p by exhaustive trial division: sufficient for the
/// desk-scale degrees (<= 6) this library handles.
pub fn fp_is_irreducible(f: &[u64], p: u64) -> bool {
    let f = fp_trim(f.to_vec());
    let n = match fp_deg(&f) {
        Some(n) if n >= 1 => n,
        _ => return false,
    };
    if n == 1 {
        return true;
    }
    // trial-divide by every monic polynomial of degree 1..=n/2
    for d in 1..=n / 2 {
        let count = (p as usize).pow(d as u32);
        for idx in 0..count {
            let mut g = Vec::with_capacity(d + 1);
            let mut k = idx;
            for _ in 0..d {
                g.push((k % p as usize) as u64);
                k /= p as usize;
            }
            g.push(1);
            if fp_rem(&f, &g, p).is_empty() {
                return false;
            }
        }
    }
    true
}

/// All roots of f in F_p, by scanning.
pub fn fp_roots(f: &[u64], p: u64) -> Vec<u64> {
    (0..p).filter(|&x| fp_eval(f, x, p) == 0).collect()
}

/// The canonical degree-m modulus for GF(p^m): the first irreducible monic
/// polynomial x^m + c_{m-1} x^{m-1} + ... + c_0 in the base-p encoding order
/// of (c_0, ..., c_{m-1}). Deterministic across runs.
pub fn canonical_modulus(p: u64, m: usize) -> Vec<u64> {
    assert!(m >= 1, "degree must be positive");
    if m == 1 {
        return vec![0, 1];
    }
    let count = (p as usize).pow(m as u32);
    for idx in 0..count {
        let mut f = Vec::with_capacity(m + 1);
        let mut k = idx;
        for _ in 0..m {
            f.push((k % p as usize) as u64);
            k /= p as usize;
        }
        f.push(1);
        if fp_is_irreducible(&f, p) {
            return f;
        }
    }
    unreachable!("an irreducible polynomial of every degree exists over F_p")
}

/// GF(p^m) presented as `F_p[y]/(modulus)`. Elements are coefficient vectors
/// of length m.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResidueField {
    pub p: u64,
    pub m: usize,
    pub modulus: Vec<u64>,
}

pub type GfElem = Vec<u64>;

impl ResidueField {
    pub fn new(p: u64, m: usize, modulus: Vec<u64>) -> Result<ResidueField> {
        if modulus.len() != m + 1 || modulus[m] != 1 {
            return Err(Error::InvalidArgument(
                "modulus must be monic of the stated degree".into(),
            ));
        }
        if !fp_is_irreducible(&modulus, p) {
            return Err(Error::InvalidArgument(format!(
                "modulus is reducible over F_{p}"
            )));
        }
        Ok(ResidueField { p, m, modulus })
    }

    pub fn canonical(p: u64, m: usize) -> ResidueField {
        ResidueField::new(p, m, canonical_modulus(p, m)).expect("canonical modulus is irreducible")
    }

    pub fn order(&self) -> u64 {
        self.p.pow(self.m as u32)
    }

    pub fn zero(&self) -> GfElem {
        vec![0; self.m]
    }

    pub fn one(&self) -> GfElem {
        self.from_u64(1)
    }

    pub fn from_u64(&self, c: u64) -> GfElem {
        let mut e = vec![0; self.m];
        e[0] = c % self.p;
        e
    }

    /// The element whose coefficient vector encodes `idx` base p.
    pub fn from_index(&self, mut idx: u64) -> GfElem {
        let mut e = vec![0; self.m];
        for c in e.iter_mut() {
            *c = idx % self.p;
            idx /= self.p;
        }
        e
    }

    pub fn index_of(&self, e: &GfElem) -> u64 {
        e.iter().rev().fold(0, |acc, &c| acc * self.p + c)
    }

    pub fn is_zero(&self, e: &GfElem) -> bool {
        e.iter().all(|&c| c == 0)
    }

    pub fn add(&self, a: &GfElem, b: &GfElem) -> GfElem {
        a.iter().zip(b).map(|(x, y)| (x + y) % self.p).collect()
    }

    pub fn sub(&self, a: &GfElem, b: &GfElem) -> GfElem {
        a.iter()
            .zip(b)
            .map(|(x, y)| (x + self.p - y) % self.p)
            .collect()
    }

    pub fn scalar_mul(&self, c: u64, a: &GfElem) -> GfElem {
        a.iter()
            .map(|x| (c as u128 * *x as u128 % self.p as u128) as u64)
            .collect()
    }

    pub fn mul(&self, a: &GfElem, b: &GfElem) -> GfElem {
        let prod = fp_mul(a, b, self.p);
        let mut red = fp_rem(&prod, &self.modulus, self.p);
        red.resize(self.m, 0);
        red
    }

    pub fn pow(&self, a: &GfElem, mut e: u64) -> GfElem {
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

    pub fn inv(&self, a: &GfElem) -> Result<GfElem> {
        if self.is_zero(a) {
            return Err(Error::Domain("inverse of zero in the residue field".into()));
        }
        Ok(self.pow(a, self.order() - 2))
    }

    /// Multiplicative order of a nonzero element.
    pub fn mult_order(&self, a: &GfElem) -> u64 {
        let q1 = self.order() - 1;
        let mut ord = q1;
        for f in factorize_u64(q1) {
            while ord.is_multiple_of(f)
                && self.is_zero(&self.sub(&self.pow(a, ord / f), &self.one()))
            {
                ord /= f;
            }
        }
        ord
    }

    /// Whether u is a q-th power in GF(p^m)^x: u^((p^m - 1)/gcd(q, p^m - 1)) = 1.
    pub fn is_qth_power(&self, u: &GfElem, q: u64) -> Result<bool> {
        if self.is_zero(u) {
            return Err(Error::Domain("q-th power test needs a unit".into()));
        }
        let q1 = self.order() - 1;
        let d = gcd_u64(q, q1);
        let test = self.pow(u, q1 / d);
        Ok(test == self.one())
    }

    /// Roots in GF(p^m) of a polynomial with GfElem coefficients, by scanning
    /// the whole field.
    pub fn poly_roots(&self, f: &[GfElem]) -> Vec<GfElem> {
        let mut out = vec![];
        for idx in 0..self.order() {
            let x = self.from_index(idx);
            let mut acc = self.zero();
            for c in f.iter().rev() {
                acc = self.add(&self.mul(&acc, &x), c);
            }
            if self.is_zero(&acc) {
                out.push(x);
            }
        }
        out
    }
}

pub fn gcd_u64(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd_u64(b, a % b)
    }
}

pub fn factorize_u64(mut n: u64) -> Vec<u64> {
    let mut out = vec![];
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}
