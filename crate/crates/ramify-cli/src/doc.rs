//! Result documents: classification output as JSON (all numbers as
//! decimal strings) and as human-readable text.

use ramify::exactnum::Rat;
use ramify::oracle::{find_root_in_unramified, oracle_isomorphic};
use ramify::padic::UnramifiedField;
use ramify::polyring::{depressed_transform, Poly};
use ramify::tame::{classify_tame_prime, TameBase, TameCertificate, TameClassLabel, TameKind};
use ramify::wild3::{classify_cubic_q3, BranchData, Cubic3Certificate, Cubic3Class};
use ramify::{Error, Result};
use serde_json::{json, Value};

fn rat_str(x: &Rat) -> String {
    x.to_string()
}

#[derive(Debug, Clone, Copy)]
pub struct ClassifyOptions {
    pub certificate: bool,
    pub oracle_check: bool,
    pub precision: Option<u32>,
}

pub struct ResultDocument {
    pub json: Value,
    pub human: String,
}

/// Classifies one polynomial, dispatching on (p, degree): the wild cubic
/// classifier for p = 3, degree 3; the tame classifier for prime degree
/// q != p; unsupported otherwise.
pub fn classify_document(
    input: &str,
    f: &Poly,
    p: u64,
    m: usize,
    opts: &ClassifyOptions,
) -> Result<ResultDocument> {
    let degree = f
        .degree()
        .ok_or_else(|| Error::InvalidArgument("zero polynomial".into()))?;
    if p == 3 && degree == 3 && m == 1 {
        classify_wild_document(input, f, opts)
    } else if degree as u64 != p && ramify::exactnum::is_prime(degree as u64) && degree >= 2 {
        let base = TameBase::new(p, m)?;
        classify_tame_document(input, f, &base, degree as u64, opts)
    } else {
        Err(Error::Unsupported(format!(
            "no classifier for degree {degree} over Q_{p} (supported: p = 3 cubics, prime degree q != p)"
        )))
    }
}

fn depressed_str(f: &Poly) -> String {
    depressed_transform(&f.monic())
        .map(|(g, _)| g.to_string())
        .unwrap_or_else(|_| f.to_string())
}

fn classify_wild_document(input: &str, f: &Poly, opts: &ClassifyOptions) -> Result<ResultDocument> {
    let (class, cert) = classify_cubic_q3(f)?;
    let inv = class.invariants();
    let oracle_verdict = if opts.oracle_check {
        Some(wild_oracle_check(f, &class, opts.precision)?)
    } else {
        None
    };

    let mut doc = json!({
        "input": input,
        "p": "3",
        "m": "1",
        "degree": "3",
        "depressed": depressed_str(f),
        "class_id": class.class_id(),
        "canonical": class.canonical_poly().to_string(),
        "invariants": {
            "e": inv.e.to_string(),
            "f": inv.f.to_string(),
            "galois_group": inv.galois_group,
            "inertia_group": inv.inertia_group,
            "disc_valuation": inv.disc_valuation.to_string(),
            "quadratic_subextension": inv.quadratic_subextension,
        },
        "certificate": Value::Null,
        "oracle_checked": opts.oracle_check,
    });
    if let Some(v) = oracle_verdict {
        doc["oracle_verdict"] = json!(v);
    }
    if opts.certificate {
        doc["certificate"] = wild_certificate_json(&cert);
    }

    let mut human = String::new();
    human.push_str(&format!("input:      {input}\n"));
    human.push_str("p:          3\n");
    human.push_str(&format!("class:      {}\n", class.class_id()));
    human.push_str(&format!("canonical:  {}\n", class.canonical_poly()));
    human.push_str(&format!(
        "e, f:       {}, {}   galois: {}   inertia: {}\n",
        inv.e, inv.f, inv.galois_group, inv.inertia_group
    ));
    human.push_str(&format!(
        "field disc valuation: {}   (input polynomial: {})\n",
        inv.disc_valuation, cert.v_disc
    ));
    if let Some(q) = inv.quadratic_subextension {
        human.push_str(&format!("quadratic subextension: {q}\n"));
    }
    if let Some(v) = oracle_verdict {
        human.push_str(&format!(
            "oracle:     {}\n",
            if v {
                "confirmed by root search"
            } else {
                "CONTRADICTED"
            }
        ));
        if !v {
            return Err(Error::Inconsistency(format!(
                "oracle contradicts the closed-form label {} for {input}",
                class.class_id()
            )));
        }
    }
    Ok(ResultDocument { json: doc, human })
}

fn wild_oracle_check(f: &Poly, class: &Cubic3Class, precision: Option<u32>) -> Result<bool> {
    match class {
        Cubic3Class::Unramified => {
            let prec = precision.unwrap_or(48);
            let tower =
                UnramifiedField::new(3, 3, vec![1.into(), (-1).into(), 0.into(), 1.into()], prec)?;
            Ok(find_root_in_unramified(f, &tower)?.is_some())
        }
        _ => oracle_isomorphic(f, &class.canonical_poly(), 3),
    }
}

fn valuation_str(v: &Option<i64>) -> Value {
    match v {
        Some(x) => json!(x.to_string()),
        None => json!("inf"),
    }
}

fn wild_certificate_json(cert: &Cubic3Certificate) -> Value {
    let branch = match &cert.branch {
        BranchData::Unramified => json!({ "kind": "unramified" }),
        BranchData::SqrtMinus1 => json!({ "kind": "nongalois-sqrtm1" }),
        BranchData::Sqrt3 => json!({ "kind": "nongalois-sqrt3" }),
        BranchData::Galois { t, t_mod9, tau } => json!({
            "kind": "galois",
            "t": rat_str(t),
            "t_mod9": t_mod9.to_string(),
            "tau": tau.value().to_string(),
        }),
        BranchData::SqrtMinus3 {
            case,
            ratio_mod9,
            tau,
        } => json!({
            "kind": "sqrtm3",
            "case": case.to_string(),
            "ratio_mod9": ratio_mod9.map(|r| r.to_string()),
            "tau": tau.map(|t| t.value().to_string()),
        }),
    };
    json!({
        "residue_shortcut": cert.residue_shortcut,
        "tower_search_used": cert.tower_search_used,
        "v_disc": cert.v_disc.to_string(),
        "disc_unit": rat_str(&cert.disc_unit),
        "disc_unit_mod3": cert.disc_unit_mod3.to_string(),
        "shift_t": rat_str(&cert.shift_t),
        "depressed_alpha": rat_str(&cert.depressed.0),
        "depressed_beta": rat_str(&cert.depressed.1),
        "normalization_s": cert.normalization_s.to_string(),
        "alpha": rat_str(&cert.alpha),
        "beta": rat_str(&cert.beta),
        "r": valuation_str(&cert.r),
        "beta_unit": rat_str(&cert.beta_unit),
        "alpha_unit": cert.alpha_unit.as_ref().map(rat_str),
        "branch": branch,
    })
}

fn classify_tame_document(
    input: &str,
    f: &Poly,
    base: &TameBase,
    q: u64,
    opts: &ClassifyOptions,
) -> Result<ResultDocument> {
    let (label, cert) = classify_tame_prime(f, base, q)?;
    let inv = label.invariants();
    let oracle_verdict = if opts.oracle_check {
        Some(tame_oracle_check(f, &label, base, q, opts.precision)?)
    } else {
        None
    };

    let subext = tame_quadratic_subextension(f, base, q, &label)?;
    let mut doc = json!({
        "input": input,
        "p": base.p.to_string(),
        "m": base.m.to_string(),
        "degree": q.to_string(),
        "depressed": depressed_str(f),
        "class_id": label.class_id(),
        "canonical": label.canonical_desc,
        "invariants": {
            "e": inv.e.to_string(),
            "f": inv.f.to_string(),
            "galois_group": inv.galois_group,
            "inertia_group": inv.inertia_group,
            "disc_valuation": inv.disc_valuation.to_string(),
            "quadratic_subextension": subext,
        },
        "certificate": Value::Null,
        "oracle_checked": opts.oracle_check,
        "zeta_residue_index": label.zeta_residue_index.to_string(),
    });
    if let Some(v) = oracle_verdict {
        doc["oracle_verdict"] = json!(v);
    }
    if opts.certificate {
        doc["certificate"] = tame_certificate_json(&cert);
    }

    let mut human = String::new();
    human.push_str(&format!("input:      {input}\n"));
    human.push_str(&format!("p, m:       {}, {}\n", base.p, base.m));
    human.push_str(&format!("class:      {}\n", label.class_id()));
    human.push_str(&format!(
        "canonical:  {}\n",
        doc["canonical"].as_str().unwrap()
    ));
    if let TameKind::Ramified { r } = label.kind {
        human.push_str(&format!(
            "r label:    {r} (mod {}, relative to zeta = residue index {})\n",
            label.d, label.zeta_residue_index
        ));
    }
    human.push_str(&format!(
        "e, f:       {}, {}   galois: {}   inertia: {}\n",
        inv.e, inv.f, inv.galois_group, inv.inertia_group
    ));
    human.push_str(&format!(
        "field disc valuation: {}   (input polynomial: {})\n",
        inv.disc_valuation, cert.v_delta
    ));
    if let Some(v) = oracle_verdict {
        human.push_str(&format!(
            "oracle:     {}\n",
            if v {
                "confirmed by root search"
            } else {
                "CONTRADICTED"
            }
        ));
        if !v {
            return Err(Error::Inconsistency(format!(
                "oracle contradicts the closed-form label {} for {input}",
                label.class_id()
            )));
        }
    }
    Ok(ResultDocument { json: doc, human })
}

fn tame_oracle_check(
    f: &Poly,
    label: &TameClassLabel,
    base: &TameBase,
    q: u64,
    precision: Option<u32>,
) -> Result<bool> {
    match &label.kind {
        TameKind::Unramified => {
            if base.m != 1 {
                return Err(Error::Unsupported(
                    "oracle checks over proper unramified base fields are not available".into(),
                ));
            }
            let prec = precision.unwrap_or(40);
            let tower = UnramifiedField::canonical(base.p, q as usize, prec);
            Ok(find_root_in_unramified(f, &tower)?.is_some())
        }
        TameKind::Ramified { .. } => {
            if base.m != 1 {
                return Err(Error::Unsupported(
                    "oracle checks over proper unramified base fields are not available".into(),
                ));
            }
            let canonical = label.canonical.clone().ok_or_else(|| {
                Error::Unsupported("no rational canonical polynomial for this label".into())
            })?;
            oracle_isomorphic(f, &canonical, base.p)
        }
    }
}

/// Quadratic subextension of the Galois closure, for cubic inputs over a
/// prime base: read off sqrt(disc). None for Galois or non-cubic cases.
fn tame_quadratic_subextension(
    f: &Poly,
    base: &TameBase,
    q: u64,
    label: &TameClassLabel,
) -> Result<Value> {
    if q != 3 || base.m != 1 {
        return Ok(Value::Null);
    }
    let inv = label.invariants();
    if inv.galois_group == "C3" {
        return Ok(Value::Null);
    }
    let delta = ramify::polyring::discriminant(&f.monic())?;
    let du = ramify::exactnum::unit_part(&delta, base.p)?;
    let v_odd = du.valuation.rem_euclid(2) == 1;
    // smallest positive integer representative of the unit class
    let u_mod = ramify::exactnum::mod_reduce(&du.unit, &ramify::exactnum::int(base.p as i64))?;
    let u_rep: i64 = u_mod.to_string().parse().unwrap();
    let d = if v_odd { u_rep * base.p as i64 } else { u_rep };
    Ok(json!(format!("Q{}(sqrt({d}))", base.p)))
}

fn tame_certificate_json(cert: &TameCertificate) -> Value {
    json!({
        "v_disc": cert.v_delta.to_string(),
        "disc_unit": rat_str(&cert.unit),
        "ell": cert.ell.map(|e| e.to_string()),
        "d": cert.d.to_string(),
        "transcript": cert.transcript.iter().map(|t| json!({
            "r": t.r.to_string(),
            "value_index": t.value_index.to_string(),
            "is_qth_power": t.is_power,
        })).collect::<Vec<_>>(),
    })
}

/// Exit code mapping shared by all commands: 2 rejected-input,
/// 3 unsupported, 4 internal-inconsistency, 5 oracle-inconclusive.
pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Rejected(_) | Error::InvalidArgument(_) | Error::Domain(_) => 2,
        Error::Unsupported(_) => 3,
        Error::Inconsistency(_) | Error::NoInverse { .. } | Error::NoLift => 4,
        Error::Inconclusive(_) => 5,
    }
}
