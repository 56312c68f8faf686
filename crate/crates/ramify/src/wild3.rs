//! Full classification of cubic extensions of Q_3 — the wildly ramified
//! case the tame machinery cannot touch.
//!
//! There are exactly ten isomorphism classes: the unramified cubic and
//! nine totally ramified ones. The decision procedure:
//!
//! 1. unramified test (residue irreducibility, falling back to a root
//!    search in the unramified cubic tower when the reduction is unusable);
//! 2. branch on the parity of v_3(disc) and the discriminant unit mod 3,
//!    which pins the quadratic subextension of the Galois closure;
//! 3. in the Galois branch, a unit t computed from the depressed
//!    coefficients picks tau in {1, 4, 7} via t = +-tau mod 9;
//! 4. in the sqrt(-3) branch, a case split on v_3(beta) mod 3 and
//!    v_3(alpha) - 2 floor(v_3(beta)/3) either lands on x^3 + 3x + 3 or
//!    picks tau the same way from a unit ratio mod 9.
//!
//! The norm-group utilities at the bottom (cube tests in Q_3(sqrt(-3)),
//! canonical norm-group representatives) are what the property suite uses
//! to check the classification against first principles.

use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exactnum::{int, mod_reduce, pow_rat, rat, unit_part, val_p_unchecked, Rat, Valuation};
use crate::oracle::find_root_in_unramified;
use crate::padic::residue::{fp_is_irreducible, fp_is_separable};
use crate::padic::UnramifiedField;
use crate::polyring::{
    certify_irreducible, depressed_transform, discriminant, residue_reduction, CertifyOutcome, Poly,
};

/// The tau parameter of the ramified canonical families, always one of
/// 1, 4, 7.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Tau {
    T1,
    T4,
    T7,
}

impl Tau {
    pub fn value(self) -> i64 {
        match self {
            Tau::T1 => 1,
            Tau::T4 => 4,
            Tau::T7 => 7,
        }
    }

    /// The unique tau with x = +-tau mod 9, for a unit residue x mod 9.
    /// The map {1,8} -> 1, {4,5} -> 4, {2,7} -> 7 is total on units.
    pub fn from_unit_mod9(x: u64) -> Result<Tau> {
        match x {
            1 | 8 => Ok(Tau::T1),
            4 | 5 => Ok(Tau::T4),
            2 | 7 => Ok(Tau::T7),
            _ => Err(Error::Inconsistency(format!(
                "residue {x} mod 9 is not a unit"
            ))),
        }
    }
}

fn tau_of_rat_mod9(x: &Rat) -> Result<Tau> {
    let r = mod_reduce(x, &int(9))?
        .to_u64()
        .expect("residue mod 9 fits");
    Tau::from_unit_mod9(r)
}

/// The ten isomorphism classes of cubic extensions of Q_3.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Cubic3Class {
    Unramified,
    /// ramified non-Galois with quadratic subextension Q_3(sqrt(-1))
    NonGaloisSqrtMinus1,
    /// ramified non-Galois with quadratic subextension Q_3(sqrt(3))
    NonGaloisSqrt3,
    /// ramified Galois, canonical x^3 - 3x^2 + 3 tau
    GaloisTau(Tau),
    /// sqrt(-3) branch, canonical x^3 + 3x + 3
    SqrtMinus3Wild,
    /// sqrt(-3) branch, canonical x^3 + 3 tau
    SqrtMinus3Tau(Tau),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cubic3Invariants {
    pub e: u64,
    pub f: u64,
    pub galois_group: &'static str,
    pub inertia_group: &'static str,
    /// discriminant exponent of the field (not of the input polynomial)
    pub disc_valuation: u32,
    pub quadratic_subextension: Option<&'static str>,
}

impl Cubic3Class {
    pub fn all() -> [Cubic3Class; 10] {
        use Cubic3Class::*;
        [
            Unramified,
            NonGaloisSqrtMinus1,
            NonGaloisSqrt3,
            GaloisTau(Tau::T1),
            GaloisTau(Tau::T4),
            GaloisTau(Tau::T7),
            SqrtMinus3Wild,
            SqrtMinus3Tau(Tau::T1),
            SqrtMinus3Tau(Tau::T4),
            SqrtMinus3Tau(Tau::T7),
        ]
    }

    pub fn canonical_poly(&self) -> Poly {
        match self {
            Cubic3Class::Unramified => Poly::from_ints(&[1, -1, 0, 1]),
            Cubic3Class::NonGaloisSqrtMinus1 => Poly::from_ints(&[3, 0, 3, 1]),
            Cubic3Class::NonGaloisSqrt3 => Poly::from_ints(&[3, 6, 0, 1]),
            Cubic3Class::GaloisTau(t) => Poly::from_ints(&[3 * t.value(), 0, -3, 1]),
            Cubic3Class::SqrtMinus3Wild => Poly::from_ints(&[3, 3, 0, 1]),
            Cubic3Class::SqrtMinus3Tau(t) => Poly::from_ints(&[3 * t.value(), 0, 0, 1]),
        }
    }

    pub fn class_id(&self) -> String {
        match self {
            Cubic3Class::Unramified => "unramified".into(),
            Cubic3Class::NonGaloisSqrtMinus1 => "nongalois-sqrtm1".into(),
            Cubic3Class::NonGaloisSqrt3 => "nongalois-sqrt3".into(),
            Cubic3Class::GaloisTau(t) => format!("galois-tau-{}", t.value()),
            Cubic3Class::SqrtMinus3Wild => "sqrtm3-wild".into(),
            Cubic3Class::SqrtMinus3Tau(t) => format!("sqrtm3-tau-{}", t.value()),
        }
    }

    pub fn from_class_id(id: &str) -> Option<Cubic3Class> {
        Cubic3Class::all().into_iter().find(|c| c.class_id() == id)
    }

    pub fn invariants(&self) -> Cubic3Invariants {
        match self {
            Cubic3Class::Unramified => Cubic3Invariants {
                e: 1,
                f: 3,
                galois_group: "C3",
                inertia_group: "C1",
                disc_valuation: 0,
                quadratic_subextension: None,
            },
            Cubic3Class::GaloisTau(_) => Cubic3Invariants {
                e: 3,
                f: 1,
                galois_group: "C3",
                inertia_group: "C3",
                disc_valuation: 4,
                quadratic_subextension: None,
            },
            Cubic3Class::NonGaloisSqrtMinus1 => Cubic3Invariants {
                e: 3,
                f: 1,
                galois_group: "S3",
                inertia_group: "C3",
                disc_valuation: 4,
                quadratic_subextension: Some("Q3(sqrt(-1))"),
            },
            Cubic3Class::NonGaloisSqrt3 => Cubic3Invariants {
                e: 3,
                f: 1,
                galois_group: "S3",
                inertia_group: "S3",
                disc_valuation: 3,
                quadratic_subextension: Some("Q3(sqrt(3))"),
            },
            Cubic3Class::SqrtMinus3Wild => Cubic3Invariants {
                e: 3,
                f: 1,
                galois_group: "S3",
                inertia_group: "S3",
                disc_valuation: 3,
                quadratic_subextension: Some("Q3(sqrt(-3))"),
            },
            Cubic3Class::SqrtMinus3Tau(_) => Cubic3Invariants {
                e: 3,
                f: 1,
                galois_group: "S3",
                inertia_group: "S3",
                disc_valuation: 5,
                quadratic_subextension: Some("Q3(sqrt(-3))"),
            },
        }
    }
}

/// Branch-by-branch record of a classification run.
#[derive(Debug, Clone)]
pub struct Cubic3Certificate {
    /// Some(verdict) when the F_3 residue-irreducibility shortcut applied
    pub residue_shortcut: Option<bool>,
    /// whether the unramified tower root search was needed instead
    pub tower_search_used: bool,
    pub v_disc: i64,
    pub disc_unit: Rat,
    pub disc_unit_mod3: u8,
    /// depressing shift: roots of the depressed form are roots of f + t
    pub shift_t: Rat,
    /// (alpha, beta) straight from the depression
    pub depressed: (Rat, Rat),
    /// normalization x -> 3^s x applied to reach v_3(beta) in {0, 1, 2};
    /// equals floor(v_3(beta)/3) of the depressed form
    pub normalization_s: i64,
    /// normalized depressed pair the case formulas run on
    pub alpha: Rat,
    pub beta: Rat,
    /// v_3(alpha) after normalization; None encodes alpha = 0
    pub r: Option<i64>,
    pub beta_unit: Rat,
    pub alpha_unit: Option<Rat>,
    pub branch: BranchData,
}

#[derive(Debug, Clone, PartialEq)]
pub enum BranchData {
    Unramified,
    SqrtMinus1,
    Sqrt3,
    Galois {
        t: Rat,
        t_mod9: u8,
        tau: Tau,
    },
    SqrtMinus3 {
        case: u8,
        ratio_mod9: Option<u8>,
        tau: Option<Tau>,
    },
}

/// The unit t of the Galois branch, from the (normalized) depressed pair.
/// Cases on v_3(beta) mod 3: t = w + (1 -+ u)/3 when 0 (requiring
/// u = +-1 mod 9), t = u when 1, t = u^2 when 2.
pub fn galois_t(alpha: &Rat, beta: &Rat) -> Result<Rat> {
    if beta.is_zero() {
        return Err(Error::InvalidArgument("beta must be nonzero".into()));
    }
    let b = val_p_unchecked(beta, 3).finite();
    let u = unit_part(beta, 3)?.unit;
    let t = match b.rem_euclid(3) {
        0 => {
            if alpha.is_zero() {
                return Err(Error::Inconsistency(
                    "3 | v_3(beta) forces alpha != 0 in the Galois branch".into(),
                ));
            }
            let w = unit_part(alpha, 3)?.unit;
            let u9 = mod_reduce(&u, &int(9))?.to_u64().unwrap();
            match u9 {
                1 => w + (Rat::one() - &u) / rat(3),
                8 => w + (Rat::one() + &u) / rat(3),
                _ => {
                    return Err(Error::Inconsistency(format!(
                        "unit part {u9} mod 9 is not +-1: not a Galois wildly ramified input"
                    )))
                }
            }
        }
        1 => u,
        _ => &u * &u,
    };
    if val_p_unchecked(&t, 3) != Valuation::Finite(0) {
        return Err(Error::Inconsistency(format!(
            "t = {t} is not a 3-adic unit"
        )));
    }
    Ok(t)
}

/// Outcome of the sqrt(-3)-branch case split.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NonGaloisOutcome {
    /// lands on x^3 + 3x + 3
    Wild { case: u8 },
    /// lands on x^3 + 3 tau
    Tau { case: u8, tau: Tau, ratio_mod9: u8 },
}

/// Case split of the sqrt(-3) branch on the (normalized) depressed pair.
/// Cases (with m = floor(v_3(beta)/3), r = v_3(alpha)):
/// 1: v_3(beta) = 0 mod 3 -> wild; 2: v_3(beta) = 2 mod 3 -> tau from
/// (1 + w(-3)^(r-2m-1))/u; 3: v_3(beta) = 1 mod 3, r > 2m+1 -> tau from
/// u/(1 - 3^(r-2m-1) w); 4: v_3(beta) = 1 mod 3, r = 2m+1 -> wild.
pub fn nongalois_tau(alpha: &Rat, beta: &Rat) -> Result<NonGaloisOutcome> {
    if beta.is_zero() {
        return Err(Error::InvalidArgument("beta must be nonzero".into()));
    }
    let b = val_p_unchecked(beta, 3).finite();
    // single-segment Newton polygon: v_3(alpha) - (2/3) v_3(beta) > 0
    let r = match val_p_unchecked(alpha, 3) {
        Valuation::Infinity => None,
        Valuation::Finite(r) => {
            if 3 * r <= 2 * b {
                return Err(Error::Rejected(format!(
                    "v_3(alpha) = {r} <= (2/3) v_3(beta) = {b}*2/3: not totally ramified"
                )));
            }
            Some(r)
        }
    };
    let m = b.div_euclid(3);
    let ell = b.rem_euclid(3);
    let u = unit_part(beta, 3)?.unit;
    if ell == 0 {
        return Ok(NonGaloisOutcome::Wild { case: 1 });
    }
    // exponent e = r - 2m - 1 >= 0; only e = 1 survives mod 9, e >= 2 dies
    let exponent = r.map(|r| r - 2 * m - 1);
    if ell == 1 {
        if exponent == Some(0) {
            return Ok(NonGaloisOutcome::Wild { case: 4 });
        }
        // case 3: ratio u / (1 - 3^(r-2m-1) w) mod 9
        let denom = match exponent {
            Some(1) => {
                let w = unit_part(alpha, 3)?.unit;
                Rat::one() - rat(3) * w
            }
            _ => Rat::one(),
        };
        let ratio = &u / denom;
        let tau = tau_of_rat_mod9(&ratio)?;
        let r9 = mod_reduce(&ratio, &int(9))?.to_u64().unwrap();
        return Ok(NonGaloisOutcome::Tau {
            case: 3,
            tau,
            ratio_mod9: r9 as u8,
        });
    }
    // ell == 2, case 2: ratio (1 + w(-3)^(r-2m-1)) / u mod 9
    let numer = match exponent {
        Some(1) => {
            let w = unit_part(alpha, 3)?.unit;
            Rat::one() - rat(3) * w
        }
        Some(0) | Some(-1) => {
            return Err(Error::Inconsistency(
                "v_3(beta) = 2 mod 3 forces v_3(alpha) >= 2m + 2".into(),
            ))
        }
        _ => Rat::one(),
    };
    let ratio = numer / &u;
    let tau = tau_of_rat_mod9(&ratio)?;
    let r9 = mod_reduce(&ratio, &int(9))?.to_u64().unwrap();
    Ok(NonGaloisOutcome::Tau {
        case: 2,
        tau,
        ratio_mod9: r9 as u8,
    })
}

/// Classifies an irreducible cubic over Q_3 up to isomorphism of the
/// extension it generates.
pub fn classify_cubic_q3(f: &Poly) -> Result<(Cubic3Class, Cubic3Certificate)> {
    if f.degree() != Some(3) {
        return Err(Error::InvalidArgument(format!(
            "expected a cubic, got degree {:?}",
            f.degree()
        )));
    }
    let fm = f.monic();
    match certify_irreducible(&fm, 3)? {
        CertifyOutcome::Certified(_) => {}
        CertifyOutcome::ReducibleRoot(root) => {
            return Err(Error::Rejected(format!("reducible: root near {root}")));
        }
        CertifyOutcome::Unverified => {
            return Err(Error::Rejected(
                "irreducibility could not be certified".into(),
            ));
        }
    }

    // unramified test: residue shortcut when the reduction is usable,
    // root search in the unramified cubic tower otherwise
    let mut residue_shortcut = None;
    let mut tower_search_used = false;
    let unramified = match residue_reduction(&fm, 3) {
        Some(red) if red.len() == 4 && fp_is_separable(&red, 3) => {
            let verdict = fp_is_irreducible(&red, 3);
            residue_shortcut = Some(verdict);
            verdict
        }
        _ => {
            tower_search_used = true;
            let (f_int, _) = fm.integral_rescale(3);
            let v_disc = match val_p_unchecked(&discriminant(&f_int)?, 3) {
                Valuation::Finite(v) => v.max(0) as u32,
                Valuation::Infinity => 0,
            };
            let tower =
                UnramifiedField::new(3, 3, vec![int(1), int(-1), int(0), int(1)], v_disc + 24)?;
            find_root_in_unramified(&fm, &tower)?.is_some()
        }
    };

    let delta = discriminant(&fm)?;
    let v_disc = val_p_unchecked(&delta, 3).finite();
    let du = unit_part(&delta, 3)?;
    let u3 = mod_reduce(&du.unit, &int(3))?.to_u64().unwrap() as u8;

    let (g, t) = depressed_transform(&fm)?;
    let alpha_dep = g.coeff(1);
    let beta_dep = g.coeff(0);
    let b_dep = val_p_unchecked(&beta_dep, 3).finite();
    let s = b_dep.div_euclid(3);
    let alpha = &alpha_dep * pow_rat(3, -2 * s);
    let beta = &beta_dep * pow_rat(3, -3 * s);
    let r = match val_p_unchecked(&alpha, 3) {
        Valuation::Infinity => None,
        Valuation::Finite(v) => Some(v),
    };
    let beta_unit = unit_part(&beta, 3)?.unit;
    let alpha_unit = if alpha.is_zero() {
        None
    } else {
        Some(unit_part(&alpha, 3)?.unit)
    };

    let mut cert = Cubic3Certificate {
        residue_shortcut,
        tower_search_used,
        v_disc,
        disc_unit: du.unit.clone(),
        disc_unit_mod3: u3,
        shift_t: t,
        depressed: (alpha_dep, beta_dep),
        normalization_s: s,
        alpha: alpha.clone(),
        beta: beta.clone(),
        r,
        beta_unit,
        alpha_unit,
        branch: BranchData::Unramified,
    };

    if unramified {
        cert.branch = BranchData::Unramified;
        return Ok((Cubic3Class::Unramified, cert));
    }

    let even = v_disc.rem_euclid(2) == 0;
    let class = match (even, u3) {
        (true, 1) => {
            let t_val = galois_t(&alpha, &beta)?;
            let t9 = mod_reduce(&t_val, &int(9))?.to_u64().unwrap() as u8;
            let tau = Tau::from_unit_mod9(t9 as u64)?;
            cert.branch = BranchData::Galois {
                t: t_val,
                t_mod9: t9,
                tau,
            };
            Cubic3Class::GaloisTau(tau)
        }
        (true, 2) => {
            cert.branch = BranchData::SqrtMinus1;
            Cubic3Class::NonGaloisSqrtMinus1
        }
        (false, 1) => {
            cert.branch = BranchData::Sqrt3;
            Cubic3Class::NonGaloisSqrt3
        }
        (false, 2) => match nongalois_tau(&alpha, &beta)? {
            NonGaloisOutcome::Wild { case } => {
                cert.branch = BranchData::SqrtMinus3 {
                    case,
                    ratio_mod9: None,
                    tau: None,
                };
                Cubic3Class::SqrtMinus3Wild
            }
            NonGaloisOutcome::Tau {
                case,
                tau,
                ratio_mod9,
            } => {
                cert.branch = BranchData::SqrtMinus3 {
                    case,
                    ratio_mod9: Some(ratio_mod9),
                    tau: Some(tau),
                };
                Cubic3Class::SqrtMinus3Tau(tau)
            }
        },
        _ => {
            return Err(Error::Inconsistency(format!(
                "discriminant unit {u3} mod 3 is not a unit residue"
            )))
        }
    };
    Ok((class, cert))
}

// ---------------------------------------------------------------------------
// Q_3(sqrt(-3)) utilities
// ---------------------------------------------------------------------------

/// a + b sqrt(-3) with exact rational coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadElem {
    pub a: Rat,
    pub b: Rat,
}

impl QuadElem {
    pub fn new(a: Rat, b: Rat) -> QuadElem {
        QuadElem { a, b }
    }

    pub fn from_int(a: i64, b: i64) -> QuadElem {
        QuadElem::new(rat(a), rat(b))
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn add(&self, other: &QuadElem) -> QuadElem {
        QuadElem::new(&self.a + &other.a, &self.b + &other.b)
    }

    pub fn mul(&self, other: &QuadElem) -> QuadElem {
        QuadElem::new(
            &self.a * &other.a - rat(3) * &self.b * &other.b,
            &self.a * &other.b + &self.b * &other.a,
        )
    }

    pub fn neg(&self) -> QuadElem {
        QuadElem::new(-&self.a, -&self.b)
    }

    pub fn scale(&self, c: &Rat) -> QuadElem {
        QuadElem::new(&self.a * c, &self.b * c)
    }

    /// Valuation in sqrt(-3)-units: min(2 v_3(a), 2 v_3(b) + 1); Infinity
    /// for zero.
    pub fn val_sqrt_m3(&self) -> Valuation {
        let va = match val_p_unchecked(&self.a, 3) {
            Valuation::Infinity => Valuation::Infinity,
            Valuation::Finite(v) => Valuation::Finite(2 * v),
        };
        let vb = match val_p_unchecked(&self.b, 3) {
            Valuation::Infinity => Valuation::Infinity,
            Valuation::Finite(v) => Valuation::Finite(2 * v + 1),
        };
        va.min(vb)
    }

    /// Exact division by sqrt(-3): (a + b sqrt(-3)) / sqrt(-3)
    /// = b - (a/3) sqrt(-3).
    pub fn div_sqrt_m3(&self) -> QuadElem {
        QuadElem::new(self.b.clone(), -&self.a / rat(3))
    }

    /// x = sqrt(-3)^v * unit; returns (v, unit).
    pub fn unit_part_sqrt_m3(&self) -> Result<(i64, QuadElem)> {
        let v = match self.val_sqrt_m3() {
            Valuation::Infinity => {
                return Err(Error::Domain("unit part of zero".into()));
            }
            Valuation::Finite(v) => v,
        };
        // divide by (-3)^(v div 2), then once more by sqrt(-3) if v is odd
        let half = v.div_euclid(2);
        let mut u = self.scale(&pow_rat(3, -half));
        if half % 2 != 0 {
            u = u.neg(); // (-3)^half = (-1)^half 3^half
        }
        if v.rem_euclid(2) == 1 {
            u = u.div_sqrt_m3();
        }
        debug_assert_eq!(u.val_sqrt_m3(), Valuation::Finite(0));
        Ok((v, u))
    }

    /// Coordinates reduced mod 9 (denominators inverted mod 9); requires a
    /// unit (both coordinates 3-integral then).
    pub fn coords_mod9(&self) -> Result<(u64, u64)> {
        let a9 = mod_reduce(&self.a, &int(9))?.to_u64().unwrap();
        let b9 = mod_reduce(&self.b, &int(9))?.to_u64().unwrap();
        Ok((a9, b9))
    }
}

impl std::fmt::Display for QuadElem {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        use num_traits::Signed;
        if self.b.is_zero() {
            return write!(f, "{}", self.a);
        }
        let b_abs = self.b.abs();
        let b_part = if b_abs.is_one() {
            "sqrt(-3)".to_string()
        } else {
            format!("{b_abs}*sqrt(-3)")
        };
        if self.a.is_zero() {
            let sign = if self.b.is_negative() { "-" } else { "" };
            write!(f, "{sign}{b_part}")
        } else {
            let sign = if self.b.is_negative() { "-" } else { "+" };
            write!(f, "{} {sign} {b_part}", self.a)
        }
    }
}

/// Cube test in Q_3(sqrt(-3)): x is a cube iff v(x) = 0 mod 3 and the
/// sqrt(-3)-unit part is +-1 mod 9.
pub fn is_cube_quad(x: &QuadElem) -> Result<bool> {
    if x.is_zero() {
        return Err(Error::Domain("cube test of zero".into()));
    }
    let (v, u) = x.unit_part_sqrt_m3()?;
    if v.rem_euclid(3) != 0 {
        return Ok(false);
    }
    let (a9, b9) = u.coords_mod9()?;
    Ok(b9 == 0 && (a9 == 1 || a9 == 8))
}

/// Whether a unit of Q_3(sqrt(-3)) lies in Q_3^x (Q_3(sqrt(-3))^x)^3:
/// equivalent mod 9 to an invertible integer.
pub fn reduced_class_rep_trivial(x: &QuadElem) -> Result<bool> {
    if x.val_sqrt_m3() != Valuation::Finite(0) {
        return Err(Error::Domain(
            "triviality test needs a sqrt(-3)-unit".into(),
        ));
    }
    let (a9, b9) = x.coords_mod9()?;
    Ok(b9 == 0 && [1, 2, 4, 5, 7, 8].contains(&a9))
}

/// N(theta + lambda) = -beta + lambda^3 + lambda alpha for a depressed
/// cubic, evaluated over Q_3(sqrt(-3)).
pub fn norm_linear_shift_quad(alpha: &Rat, beta: &Rat, lambda: &QuadElem) -> QuadElem {
    let l3 = lambda.mul(lambda).mul(lambda);
    let la = lambda.scale(alpha);
    QuadElem::new(-beta + &l3.a + &la.a, &l3.b + &la.b)
}

/// Norm-group representatives of a canonical ramified class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NormGroupReps {
    /// representatives of the cubic norm group in Q_3^x/(Q_3^x)^3
    Cubic(Vec<Rat>),
    /// representatives of the reduced cubic norm group in
    /// Q_3(sqrt(-3))^x / Q_3^x (Q_3(sqrt(-3))^x)^3
    ReducedCubic(Vec<QuadElem>),
}

/// The explicit representative sets: {1, 3 tau, 9 tau^2} for the Galois
/// classes, {1, tau + sqrt(-3), tau^2 - 3 + 2 tau sqrt(-3)} for the
/// sqrt(-3) tau classes, and {1, 1 + (sqrt(-3))^3, 1 + 2 (sqrt(-3))^3}
/// for x^3 + 3x + 3.
pub fn canonical_norm_group_reps(class: &Cubic3Class) -> Result<NormGroupReps> {
    match class {
        Cubic3Class::GaloisTau(t) => {
            let tau = t.value();
            Ok(NormGroupReps::Cubic(vec![
                rat(1),
                rat(3 * tau),
                rat(9 * tau * tau),
            ]))
        }
        Cubic3Class::SqrtMinus3Tau(t) => {
            let tau = t.value();
            Ok(NormGroupReps::ReducedCubic(vec![
                QuadElem::from_int(1, 0),
                QuadElem::from_int(tau, 1),
                QuadElem::from_int(tau * tau - 3, 2 * tau),
            ]))
        }
        Cubic3Class::SqrtMinus3Wild => Ok(NormGroupReps::ReducedCubic(vec![
            QuadElem::from_int(1, 0),
            QuadElem::from_int(1, -3),
            QuadElem::from_int(1, -6),
        ])),
        _ => Err(Error::Domain(format!(
            "no canonical norm-group representatives for {}",
            class.class_id()
        ))),
    }
}
