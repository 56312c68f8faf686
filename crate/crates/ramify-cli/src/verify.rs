//! The `verify` and `gen-corpus` commands: deterministic corpus
//! generation, full classification, and oracle cross-checks with a class
//! histogram.

use std::collections::BTreeMap;

use ramify::exactnum::int;
use ramify::oracle::{find_root_in_unramified, generate_corpus, oracle_isomorphic, CorpusSpec};
use ramify::padic::UnramifiedField;
use ramify::tame::{classify_tame_prime, TameBase, TameKind};
use ramify::wild3::{classify_cubic_q3, Cubic3Class};
use ramify::Error;
use serde_json::json;

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn build_spec(
    p: u64,
    degree: usize,
    count: usize,
    seed: u64,
    height: Option<u64>,
    den_exp: u32,
) -> CorpusSpec {
    let height = height.unwrap_or(if p == 3 { 729 } else { 4 * p * p });
    CorpusSpec {
        p,
        degree,
        height,
        den_exp_bound: den_exp,
        count,
        seed,
    }
}

fn validate_params(p: u64, degree: u64, need_classifier: bool) -> Option<i32> {
    if !ramify::exactnum::is_prime(p) {
        eprintln!("error: p = {p} is not prime");
        return Some(2);
    }
    if need_classifier {
        let wild = p == 3 && degree == 3;
        if !wild && (!ramify::exactnum::is_prime(degree) || degree == p) {
            eprintln!(
                "error: no classifier for degree {degree} over Q_{p} \
                 (supported: p = 3 cubics, prime degree q != p)"
            );
            return Some(3);
        }
    }
    None
}

pub fn cmd_gen_corpus(
    p: u64,
    degree: usize,
    count: usize,
    seed: u64,
    height: Option<u64>,
    den_exp: u32,
    out: Option<&str>,
) -> i32 {
    if let Some(code) = validate_params(p, degree as u64, false) {
        return code;
    }
    let spec = build_spec(p, degree, count, seed, height, den_exp);
    let corpus = match generate_corpus(&spec) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            return super::doc::exit_code(&e);
        }
    };
    let mut text = format!(
        "# ramify corpus: p={} degree={} height={} den_exp={} seed={} count={} (discarded {})\n",
        spec.p,
        spec.degree,
        spec.height,
        spec.den_exp_bound,
        spec.seed,
        spec.count,
        corpus.discarded
    );
    for f in &corpus.polys {
        text.push_str(&format!("{f}\n"));
    }
    match out {
        None => print!("{text}"),
        Some(path) => {
            if let Err(e) = std::fs::write(path, text) {
                eprintln!("error: writing {path}: {e}");
                return 1;
            }
        }
    }
    0
}

pub fn cmd_verify(
    p: u64,
    q: u64,
    count: usize,
    seed: u64,
    height: Option<u64>,
    den_exp: u32,
    json_out: bool,
) -> i32 {
    if let Some(code) = validate_params(p, q, true) {
        return code;
    }
    let wild = p == 3 && q == 3;
    let expected_classes = if wild { 10 } else { gcd(q, p - 1) + 1 } as usize;
    let spec = build_spec(p, q as usize, count, seed, height, den_exp);
    let corpus = match generate_corpus(&spec) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: corpus generation: {e}");
            return super::doc::exit_code(&e);
        }
    };

    let mut histogram: BTreeMap<String, usize> = BTreeMap::new();
    let mut agree = 0usize;
    let mut disagreements: Vec<String> = vec![];
    let mut inconclusive: Vec<String> = vec![];

    let result: Result<(), Error> = (|| {
        let tower = if wild {
            UnramifiedField::new(3, 3, vec![int(1), int(-1), int(0), int(1)], 64)?
        } else {
            UnramifiedField::canonical(p, q as usize, 48)
        };
        for f in &corpus.polys {
            let (class_id, oracle) = if wild {
                let (class, _) = classify_cubic_q3(f)?;
                let verdict = match class {
                    Cubic3Class::Unramified => {
                        oracle_outcome(find_root_in_unramified(f, &tower).map(|r| r.is_some()))
                    }
                    _ => oracle_outcome(oracle_isomorphic(f, &class.canonical_poly(), 3)),
                };
                (class.class_id(), verdict)
            } else {
                let base = TameBase::new(p, 1)?;
                let (label, _) = classify_tame_prime(f, &base, q)?;
                let verdict = match &label.kind {
                    TameKind::Unramified => {
                        oracle_outcome(find_root_in_unramified(f, &tower).map(|r| r.is_some()))
                    }
                    TameKind::Ramified { .. } => match &label.canonical {
                        Some(canonical) => oracle_outcome(oracle_isomorphic(f, canonical, p)),
                        None => OracleOutcome::Inconclusive("no rational canonical".into()),
                    },
                };
                (label.class_id(), verdict)
            };
            *histogram.entry(class_id.clone()).or_default() += 1;
            match oracle {
                OracleOutcome::Agree => agree += 1,
                OracleOutcome::Disagree => disagreements.push(format!("{f} ({class_id})")),
                OracleOutcome::Inconclusive(why) => {
                    inconclusive.push(format!("{f} ({class_id}): {why}"))
                }
            }
        }
        Ok(())
    })();
    if let Err(e) = result {
        eprintln!("error: {e}");
        return super::doc::exit_code(&e);
    }

    let ok = agree == corpus.polys.len()
        && histogram.len() == expected_classes
        && inconclusive.is_empty();
    if json_out {
        let doc = json!({
            "p": p.to_string(),
            "q": q.to_string(),
            "count": corpus.polys.len().to_string(),
            "seed": spec.seed.to_string(),
            "height": spec.height.to_string(),
            "discarded": corpus.discarded.to_string(),
            "agreement": agree.to_string(),
            "classes_observed": histogram.len().to_string(),
            "classes_expected": expected_classes.to_string(),
            "histogram": histogram.iter().map(|(k, v)| (k.clone(), json!(v.to_string()))).collect::<serde_json::Map<_, _>>(),
            "disagreements": disagreements,
            "inconclusive": inconclusive,
            "ok": ok,
        });
        println!("{}", serde_json::to_string_pretty(&doc).unwrap());
    } else {
        println!(
            "verify p={p} q={q}: {agree}/{} oracle agreement, {} classes observed (expected {expected_classes})",
            corpus.polys.len(),
            histogram.len()
        );
        for (class, n) in &histogram {
            println!("  {class:<18} {n}");
        }
        for d in &disagreements {
            println!("  DISAGREEMENT: {d}");
        }
        for i in &inconclusive {
            println!("  INCONCLUSIVE: {i}");
        }
    }
    if !inconclusive.is_empty() {
        5
    } else if !ok {
        4
    } else {
        0
    }
}

enum OracleOutcome {
    Agree,
    Disagree,
    Inconclusive(String),
}

fn oracle_outcome(res: Result<bool, Error>) -> OracleOutcome {
    match res {
        Ok(true) => OracleOutcome::Agree,
        Ok(false) => OracleOutcome::Disagree,
        Err(Error::Inconclusive(n)) => OracleOutcome::Inconclusive(format!("depth {n}")),
        Err(e) => OracleOutcome::Inconclusive(e.to_string()),
    }
}
