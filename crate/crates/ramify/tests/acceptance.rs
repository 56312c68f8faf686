//! Acceptance suite: one test per criterion, each printing a PASS/FAIL
//! line (run with --nocapture to see them). Counts, seeds and tolerances
//! are pinned here; every check is exact.

use std::time::Instant;

use num_traits::Zero;
use ramify::exactnum::{
    int, is_cube_unit_q3, mod_reduce, pow_rat, rat, unit_part, val_p, Int, Rat, Valuation,
};
use ramify::oracle::{find_root_in_unramified, generate_corpus, oracle_isomorphic, CorpusSpec};
use ramify::padic::{teichmuller_generator, UnramifiedField};
use ramify::polyring::{
    discriminant, eisenstein_shift, is_k_eisenstein, norm_of_linear_shift, Poly,
};
use ramify::tame::{classify_tame_prime, TameBase, TameKind};
use ramify::wild3::{
    classify_cubic_q3, norm_linear_shift_quad, reduced_class_rep_trivial, Cubic3Class, QuadElem,
};

fn criterion<F: FnOnce() -> Result<(), String>>(name: &str, run: F) {
    match run() {
        Ok(()) => println!("{name}: PASS"),
        Err(e) => {
            println!("{name}: FAIL - {e}");
            panic!("{name} failed: {e}");
        }
    }
}

fn unramified_cubic_tower(prec: u32) -> UnramifiedField {
    UnramifiedField::new(3, 3, vec![int(1), int(-1), int(0), int(1)], prec)
        .expect("x^3 - x + 1 is irreducible mod 3")
}

/// Criterion 1: classifying the nine canonical ramified cubics over Q_3
/// reproduces the table exactly (distinct labels, self-classification,
/// matching field invariants), plus the unramified row; under one second.
#[test]
fn ac1_table_reproduction() {
    criterion("AC1 table reproduction", || {
        let start = Instant::now();
        // (class, polynomial, ramification exponent, galois group, inertia
        // group, quadratic subextension)
        #[allow(clippy::type_complexity)]
        let expected: [(&str, [i64; 4], u32, &str, &str, Option<&str>); 9] = [
            (
                "sqrtm3-wild",
                [3, 3, 0, 1],
                3,
                "S3",
                "S3",
                Some("Q3(sqrt(-3))"),
            ),
            (
                "nongalois-sqrt3",
                [3, 6, 0, 1],
                3,
                "S3",
                "S3",
                Some("Q3(sqrt(3))"),
            ),
            (
                "nongalois-sqrtm1",
                [3, 0, 3, 1],
                4,
                "S3",
                "C3",
                Some("Q3(sqrt(-1))"),
            ),
            ("galois-tau-1", [3, 0, -3, 1], 4, "C3", "C3", None),
            ("galois-tau-4", [12, 0, -3, 1], 4, "C3", "C3", None),
            ("galois-tau-7", [21, 0, -3, 1], 4, "C3", "C3", None),
            (
                "sqrtm3-tau-1",
                [3, 0, 0, 1],
                5,
                "S3",
                "S3",
                Some("Q3(sqrt(-3))"),
            ),
            (
                "sqrtm3-tau-4",
                [12, 0, 0, 1],
                5,
                "S3",
                "S3",
                Some("Q3(sqrt(-3))"),
            ),
            (
                "sqrtm3-tau-7",
                [21, 0, 0, 1],
                5,
                "S3",
                "S3",
                Some("Q3(sqrt(-3))"),
            ),
        ];
        let mut seen = std::collections::BTreeSet::new();
        for (id, coeffs, exponent, group, inertia, subext) in expected {
            let f = Poly::from_ints(&coeffs);
            let (class, _) = classify_cubic_q3(&f).map_err(|e| format!("{f}: {e}"))?;
            if class.class_id() != id {
                return Err(format!("{f} classified as {} not {id}", class.class_id()));
            }
            if class.canonical_poly() != f {
                return Err(format!("{f} did not map to itself"));
            }
            let inv = class.invariants();
            if (inv.e, inv.f) != (3, 1)
                || inv.disc_valuation != exponent
                || inv.galois_group != group
                || inv.inertia_group != inertia
                || inv.quadratic_subextension != subext
            {
                return Err(format!("{f}: invariants {inv:?} disagree with the table"));
            }
            seen.insert(id);
        }
        if seen.len() != 9 {
            return Err(format!("expected 9 distinct labels, saw {}", seen.len()));
        }
        let (class, _) =
            classify_cubic_q3(&Poly::from_ints(&[1, -1, 0, 1])).map_err(|e| e.to_string())?;
        if class != Cubic3Class::Unramified {
            return Err("x^3 - x + 1 must classify as unramified".into());
        }
        let elapsed = start.elapsed();
        if elapsed.as_secs_f64() >= 1.0 {
            return Err(format!("took {elapsed:?}, budget is 1 s"));
        }
        Ok(())
    });
}

/// Criterion 2: 1000 seeded certified-irreducible cubics over Q_3 with
/// height <= 3^6: the closed-form label agrees with the root-finding
/// oracle against the canonical polynomial in every case, no inconclusive
/// results, within the 10-minute single-threaded budget.
#[test]
fn ac2_oracle_agreement_wild() {
    criterion("AC2 oracle agreement (wild, 1000 cubics over Q_3)", || {
        let start = Instant::now();
        let spec = CorpusSpec {
            p: 3,
            degree: 3,
            height: 729,
            den_exp_bound: 2,
            count: 1000,
            seed: 42,
        };
        let corpus = generate_corpus(&spec).map_err(|e| e.to_string())?;
        let tower = unramified_cubic_tower(64);
        let mut labels = std::collections::BTreeSet::new();
        let mut agree = 0usize;
        for f in &corpus.polys {
            let (class, _) = classify_cubic_q3(f).map_err(|e| format!("{f}: {e}"))?;
            labels.insert(class.class_id());
            let ok = match class {
                Cubic3Class::Unramified => find_root_in_unramified(f, &tower)
                    .map_err(|e| format!("{f}: inconclusive tower search: {e}"))?
                    .is_some(),
                _ => oracle_isomorphic(f, &class.canonical_poly(), 3)
                    .map_err(|e| format!("{f}: oracle error: {e}"))?,
            };
            if !ok {
                return Err(format!(
                    "oracle contradicts label {} for {f}",
                    class.class_id()
                ));
            }
            agree += 1;
        }
        if agree != 1000 {
            return Err(format!("agreement {agree}/1000"));
        }
        if labels.len() != 10 {
            return Err(format!(
                "expected all 10 classes in the corpus, saw {}: {labels:?}",
                labels.len()
            ));
        }
        let elapsed = start.elapsed();
        println!(
            "  (AC2 corpus: discarded {}, elapsed {elapsed:?})",
            corpus.discarded
        );
        if elapsed.as_secs() > 600 {
            return Err(format!("took {elapsed:?}, budget is 10 min"));
        }
        Ok(())
    });
}

const TAME_CASES: [(u64, u64); 5] = [(5, 3), (7, 3), (13, 3), (7, 2), (2, 3)];

fn tame_corpus(p: u64, q: u64) -> Vec<Poly> {
    let spec = CorpusSpec {
        p,
        degree: q as usize,
        height: 4 * p * p,
        den_exp_bound: 1,
        count: 500,
        seed: 1000 + 10 * p + q,
    };
    generate_corpus(&spec).expect("corpus generation").polys
}

/// Criterion 3: for five (p, q) pairs, 500 corpus elements each: the
/// classifier verdict agrees with the oracle in every case, and the
/// observed class count is exactly gcd(q, p-1) + 1.
#[test]
fn ac3_oracle_agreement_tame() {
    criterion("AC3 oracle agreement (tame, 5 x 500)", || {
        for (p, q) in TAME_CASES {
            let base = TameBase::new(p, 1).map_err(|e| e.to_string())?;
            let corpus = tame_corpus(p, q);
            if corpus.len() != 500 {
                return Err(format!("({p},{q}): corpus size {}", corpus.len()));
            }
            let tower = UnramifiedField::canonical(p, q as usize, 40);
            let mut classes = std::collections::BTreeSet::new();
            for f in &corpus {
                let (label, _) =
                    classify_tame_prime(f, &base, q).map_err(|e| format!("({p},{q}) {f}: {e}"))?;
                classes.insert(label.class_id());
                let ok = match label.kind {
                    TameKind::Unramified => find_root_in_unramified(f, &tower)
                        .map_err(|e| format!("({p},{q}) {f}: tower: {e}"))?
                        .is_some(),
                    TameKind::Ramified { .. } => {
                        let canonical = label
                            .canonical
                            .clone()
                            .ok_or_else(|| format!("({p},{q}) {f}: no canonical polynomial"))?;
                        oracle_isomorphic(f, &canonical, p)
                            .map_err(|e| format!("({p},{q}) {f}: oracle: {e}"))?
                    }
                };
                if !ok {
                    return Err(format!("({p},{q}): oracle contradicts label for {f}"));
                }
            }
            let expected = gcd(q, p - 1) + 1;
            if classes.len() as u64 != expected {
                return Err(format!(
                    "({p},{q}): {} classes observed, expected {expected}: {classes:?}",
                    classes.len()
                ));
            }
        }
        Ok(())
    });
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Criterion 4: canonical self-classification: x^q - zeta^r p classifies
/// as (ramified, r) for every r in [0, d), under the canonical zeta.
#[test]
fn ac4_canonical_tame_self_classification() {
    criterion("AC4 canonical tame self-classification", || {
        for (p, q) in [(5u64, 2u64), (5, 3), (7, 2), (7, 3), (2, 3), (13, 3)] {
            let base = TameBase::new(p, 1).map_err(|e| e.to_string())?;
            let d = gcd(q, p - 1);
            let field = UnramifiedField::canonical(p, 1, 8);
            let zeta = teichmuller_generator(&field);
            let kres = field.residue_field();
            for r in 0..d {
                let z = kres.pow(&kres.from_index(zeta.residue_index), r)[0] as i64;
                let mut coeffs = vec![rat(0); q as usize + 1];
                coeffs[0] = rat(-z * p as i64);
                coeffs[q as usize] = rat(1);
                let f = Poly::new(coeffs);
                let (label, _) = classify_tame_prime(&f, &base, q)
                    .map_err(|e| format!("({p},{q}) r={r}: {e}"))?;
                if label.kind != (TameKind::Ramified { r: r as u32 }) {
                    return Err(format!(
                        "({p},{q}): x^{q} - {z}*{p} classified as {:?}, expected r = {r}",
                        label.kind
                    ));
                }
            }
        }
        Ok(())
    });
}

/// Criterion 5: 500 random monic k-Eisenstein polynomials (n <= 6,
/// gcd(k, n) = 1, p in {5, 7}, p not dividing n) satisfy
/// v(disc) = k(n-1) exactly and the unit congruence
/// u = (-1)^(n(n-1)/2) n^n w^(n-1) mod p.
#[test]
fn ac5_eisenstein_discriminant_law() {
    criterion("AC5 Eisenstein discriminant law (500 samples)", || {
        use rand::Rng;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let mut checked = 0usize;
        while checked < 500 {
            let p: u64 = if rng.gen_bool(0.5) { 5 } else { 7 };
            let n: usize = rng.gen_range(2..=6);
            if (n as u64).is_multiple_of(p) {
                continue;
            }
            let ks: Vec<i64> = (1..n as i64)
                .filter(|k| gcd(*k as u64, n as u64) == 1)
                .collect();
            let k = ks[rng.gen_range(0..ks.len())];
            // coefficients: v(a_i) >= ceil(k(n-i)/n), exact at i = 0
            let mut coeffs = vec![rat(0); n + 1];
            let unit_choices = [1i64, 2, 3, 4, 6, -1, -2, -3];
            loop {
                let w = unit_choices[rng.gen_range(0..unit_choices.len())];
                if !w.unsigned_abs().is_multiple_of(p) {
                    coeffs[0] = rat(w) * pow_rat(p, k);
                    break;
                }
            }
            for (i, c) in coeffs.iter_mut().enumerate().take(n).skip(1) {
                if rng.gen_bool(0.4) {
                    continue; // leave the coefficient zero
                }
                let min_v = (k * (n - i) as i64 + n as i64 - 1) / n as i64;
                let e = min_v + rng.gen_range(0..2);
                *c = rat(rng.gen_range(-6..=6)) * pow_rat(p, e);
            }
            coeffs[n] = rat(1);
            let f = Poly::new(coeffs);
            if is_k_eisenstein(&f, p) != Some(k as u32) {
                return Err(format!(
                    "generator produced a non-{k}-Eisenstein sample {f}"
                ));
            }
            let delta = discriminant(&f).map_err(|e| e.to_string())?;
            let v = match val_p(&delta, p).map_err(|e| e.to_string())? {
                Valuation::Finite(v) => v,
                Valuation::Infinity => return Err(format!("disc({f}) = 0")),
            };
            if v != k * (n as i64 - 1) {
                return Err(format!(
                    "{f}: v(disc) = {v}, expected {}",
                    k * (n as i64 - 1)
                ));
            }
            let u = unit_part(&delta, p).map_err(|e| e.to_string())?.unit;
            let w = unit_part(&f.coeff(0), p).map_err(|e| e.to_string())?.unit;
            let sign = if (n * (n - 1) / 2).is_multiple_of(2) {
                1
            } else {
                -1
            };
            let rhs = rat(sign)
                * Rat::from_integer(Int::from(n as u64).pow(n as u32))
                * pow_of(&w, n - 1);
            let diff = &u - &rhs;
            let ok = diff.is_zero()
                || mod_reduce(&diff, &int(p as i64)).map_err(|e| e.to_string())? == int(0);
            if !ok {
                return Err(format!("{f}: unit congruence fails: u = {u}, rhs = {rhs}"));
            }
            checked += 1;
        }
        Ok(())
    });
}

fn pow_of(x: &Rat, e: usize) -> Rat {
    let mut acc = rat(1);
    for _ in 0..e {
        acc *= x;
    }
    acc
}

/// Criterion 6: on every tame corpus element, q(q-1) | v(disc) holds iff
/// the oracle finds a root in the unramified degree-q tower.
#[test]
fn ac6_unramified_criterion_equivalence() {
    criterion(
        "AC6 unramified criterion equivalence (tame corpora)",
        || {
            for (p, q) in TAME_CASES {
                let corpus = tame_corpus(p, q);
                let tower = UnramifiedField::canonical(p, q as usize, 40);
                for f in &corpus {
                    let delta = discriminant(&f.monic()).map_err(|e| e.to_string())?;
                    let v = val_p(&delta, p).map_err(|e| e.to_string())?.finite();
                    let criterion_says = v.rem_euclid((q * (q - 1)) as i64) == 0;
                    let oracle_says = find_root_in_unramified(f, &tower)
                        .map_err(|e| format!("({p},{q}) {f}: tower: {e}"))?
                        .is_some();
                    if criterion_says != oracle_says {
                        return Err(format!(
                            "({p},{q}) {f}: criterion {criterion_says} vs oracle {oracle_says}"
                        ));
                    }
                }
            }
            Ok(())
        },
    );
}

/// Criterion 7: the label of f equals the label of the monic rescaling of
/// f(cx + d) for 200 random (f, c, d) over Q_3, with c a unit times a
/// power of 3.
#[test]
fn ac7_transformation_invariance() {
    criterion("AC7 transformation invariance (200 samples)", || {
        use rand::Rng;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        let spec = CorpusSpec {
            p: 3,
            degree: 3,
            height: 243,
            den_exp_bound: 1,
            count: 200,
            seed: 77,
        };
        let corpus = generate_corpus(&spec).map_err(|e| e.to_string())?;
        for f in &corpus.polys {
            let unit = [1i64, 2, 4, -1, -2, 5][rng.gen_range(0..6)];
            let kpow: i64 = rng.gen_range(-1..=2);
            let c = rat(unit) * pow_rat(3, kpow);
            let d = rat(rng.gen_range(-9..=9)) * pow_rat(3, rng.gen_range(-1..=1));
            let g = f.compose_affine(&c, &d).monic();
            let (cf, _) = classify_cubic_q3(f).map_err(|e| format!("{f}: {e}"))?;
            let (cg, _) = classify_cubic_q3(&g).map_err(|e| format!("{g}: {e}"))?;
            if cf != cg {
                return Err(format!(
                    "{f} -> {} but transform {g} -> {}",
                    cf.class_id(),
                    cg.class_id()
                ));
            }
        }
        Ok(())
    });
}

/// Criterion 8: norm-group witnesses. For each Galois tau the norm of the
/// canonical generator is exactly -3 tau; for each sqrt(-3) tau class the
/// sqrt(-3)-unit part of N(theta + sqrt(-3)) is exactly tau + sqrt(-3)
/// and is a nontrivial reduced class.
#[test]
fn ac8_norm_group_witnesses() {
    criterion("AC8 norm-group witnesses", || {
        use ramify::wild3::Tau;
        for tau in [Tau::T1, Tau::T4, Tau::T7] {
            let f = Cubic3Class::GaloisTau(tau).canonical_poly();
            let n = norm_of_linear_shift(&f, &rat(0)).map_err(|e| e.to_string())?;
            if n != rat(-3 * tau.value()) {
                return Err(format!("N(theta) = {n}, expected {}", -3 * tau.value()));
            }
            // -3 tau / (3 tau) = -1 is a cube, so 3 tau generates the same
            // class as N(theta); 3 tau itself has valuation 1, not a cube
            let ratio = &n / rat(3 * tau.value());
            if !is_cube_unit_q3(&ratio).map_err(|e| e.to_string())? {
                return Err(format!("N(theta)/(3 tau) = {ratio} should be a cube"));
            }

            let g = Cubic3Class::SqrtMinus3Tau(tau).canonical_poly();
            let beta = g.coeff(0);
            let norm = norm_linear_shift_quad(&rat(0), &beta, &QuadElem::from_int(0, 1));
            let (_, u) = norm.unit_part_sqrt_m3().map_err(|e| e.to_string())?;
            if u != QuadElem::from_int(tau.value(), 1) {
                return Err(format!(
                    "unit part {u}, expected {} + sqrt(-3)",
                    tau.value()
                ));
            }
            if reduced_class_rep_trivial(&u).map_err(|e| e.to_string())? {
                return Err(format!("{u} must be a nontrivial reduced class"));
            }
        }
        Ok(())
    });
}

/// Criterion 9: the Eisenstein shift of x^2 + 5x + 5 at p = 5 has
/// t = 5/2 and shifted polynomial x^2 - 5/4 (1-Eisenstein). The expansion
/// (x - 5/2)^2 + 5(x - 5/2) + 5 = x^2 - 5/4 rules out the sometimes-quoted
/// x^2 + 45/4, whose constant term would need the cross term to vanish.
#[test]
fn ac9_eisenstein_shift_regression() {
    criterion("AC9 depressed-shift regression (x^2 + 5x + 5)", || {
        let f = Poly::from_ints(&[5, 5, 1]);
        let data = eisenstein_shift(&f, 5).map_err(|e| e.to_string())?;
        if data.t != Rat::new(int(5), int(2)) {
            return Err(format!("t = {}, expected 5/2", data.t));
        }
        if data.k != 1 || data.r != 0 {
            return Err(format!("(k, r) = ({}, {})", data.k, data.r));
        }
        let expected = Poly::new(vec![Rat::new(int(-5), int(4)), rat(0), rat(1)]);
        if data.shifted != expected {
            return Err(format!("shifted = {}, expected x^2 - 5/4", data.shifted));
        }
        let wrong = Poly::new(vec![Rat::new(int(45), int(4)), rat(0), rat(1)]);
        if data.shifted == wrong {
            return Err("shifted must not be x^2 + 45/4".into());
        }
        // direct expansion cross-check
        let direct = f.shift(&Rat::new(int(-5), int(2)));
        if direct != expected {
            return Err(format!("direct expansion gave {direct}"));
        }
        if is_k_eisenstein(&data.shifted, 5) != Some(1) {
            return Err("shifted polynomial must be 1-Eisenstein".into());
        }
        Ok(())
    });
}
