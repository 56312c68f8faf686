//! Oracle-side partition checks: over a corpus extended with the
//! canonical generators, every element matches exactly one canonical
//! class under the root-finding oracle, the matched class agrees with
//! the closed-form label, and the number of classes is exactly the
//! predicted one (10 over Q_3, gcd(3, p-1) + 1 for tame cubics).

use ramify::oracle::{find_root_in_unramified, generate_corpus, oracle_isomorphic, CorpusSpec};
use ramify::padic::UnramifiedField;
use ramify::polyring::Poly;
use ramify::tame::{classify_tame_prime, TameBase, TameKind};
use ramify::wild3::{classify_cubic_q3, Cubic3Class};

fn oracle_class_of(
    f: &Poly,
    p: u64,
    canonicals: &[(String, Poly, bool)],
    tower: &UnramifiedField,
) -> Vec<String> {
    let mut matched = vec![];
    for (id, g, unram) in canonicals {
        let hit = if *unram {
            find_root_in_unramified(f, tower).unwrap().is_some()
        } else {
            oracle_isomorphic(f, g, p).unwrap()
        };
        if hit {
            matched.push(id.clone());
        }
    }
    matched
}

#[test]
fn q3_cubic_classes_number_ten() {
    let canonicals: Vec<(String, Poly, bool)> = Cubic3Class::all()
        .into_iter()
        .map(|c| {
            (
                c.class_id(),
                c.canonical_poly(),
                c == Cubic3Class::Unramified,
            )
        })
        .collect();
    let tower =
        UnramifiedField::new(3, 3, vec![1.into(), (-1).into(), 0.into(), 1.into()], 48).unwrap();
    let corpus = generate_corpus(&CorpusSpec {
        p: 3,
        degree: 3,
        height: 243,
        den_exp_bound: 1,
        count: 12,
        seed: 5,
    })
    .unwrap();
    let mut everything: Vec<Poly> = canonicals.iter().map(|(_, g, _)| g.clone()).collect();
    everything.extend(corpus.polys);

    let mut observed = std::collections::BTreeSet::new();
    for f in &everything {
        let matched = oracle_class_of(f, 3, &canonicals, &tower);
        assert_eq!(
            matched.len(),
            1,
            "{f} matched {matched:?}, expected exactly one class"
        );
        let (label, _) = classify_cubic_q3(f).unwrap();
        assert_eq!(matched[0], label.class_id(), "{f}");
        observed.insert(matched[0].clone());
    }
    assert_eq!(observed.len(), 10);
}

#[test]
fn q7_and_q5_cubic_class_counts() {
    use ramify::exactnum::rat;
    use ramify::padic::teichmuller_generator;

    for (p, expected) in [(7u64, 4usize), (5, 2)] {
        let base = TameBase::new(p, 1).unwrap();
        let tower = UnramifiedField::canonical(p, 3, 40);
        let field = UnramifiedField::canonical(p, 1, 8);
        let kres = field.residue_field();
        let zeta = teichmuller_generator(&field).residue_index;

        let mut canonicals: Vec<(String, Poly, bool)> = vec![(
            "unramified".to_string(),
            ramify::tame::unramified_canonical(&base, 3).unwrap(),
            true,
        )];
        let d = if (p - 1) % 3 == 0 { 3u64 } else { 1 };
        for r in 0..d {
            let z = kres.pow(&kres.from_index(zeta), r)[0] as i64;
            let f = Poly::new(vec![rat(-z * p as i64), rat(0), rat(0), rat(1)]);
            canonicals.push((format!("ramified-r{r}"), f, false));
        }

        let probe = generate_corpus(&CorpusSpec {
            p,
            degree: 3,
            height: 3 * p,
            den_exp_bound: 0,
            count: 10,
            seed: 23,
        })
        .unwrap();
        let mut everything: Vec<Poly> = canonicals.iter().map(|(_, g, _)| g.clone()).collect();
        everything.extend(probe.polys);

        let mut observed = std::collections::BTreeSet::new();
        for f in &everything {
            let matched = oracle_class_of(f, p, &canonicals, &tower);
            assert_eq!(matched.len(), 1, "p={p} {f} matched {matched:?}");
            let (label, _) = classify_tame_prime(f, &base, 3).unwrap();
            assert_eq!(matched[0], label.class_id(), "p={p} {f}");
            observed.insert(matched[0].clone());
        }
        assert_eq!(observed.len(), expected, "p={p}");
    }
}

#[test]
fn pairwise_tame_criterion_matches_labels_and_oracle() {
    // same_tame_extension must agree with label equality on all sampled
    // pairs, and with the oracle on a spot-checked subset
    let p = 7u64;
    let base = TameBase::new(p, 1).unwrap();
    let corpus = generate_corpus(&CorpusSpec {
        p,
        degree: 3,
        height: 6 * p * p,
        den_exp_bound: 1,
        count: 120,
        seed: 31,
    })
    .unwrap();
    let mut ramified: Vec<(Poly, u32)> = vec![];
    for f in &corpus.polys {
        let (label, _) = classify_tame_prime(f, &base, 3).unwrap();
        if let TameKind::Ramified { r } = label.kind {
            ramified.push((f.clone(), r));
        }
    }
    assert!(
        ramified.len() >= 8,
        "need ramified samples, got {}",
        ramified.len()
    );
    ramified.truncate(14);
    for (i, (f, rf)) in ramified.iter().enumerate() {
        for (g, rg) in ramified.iter().skip(i) {
            let same = ramify::tame::same_tame_extension(f, g, &base, 3).unwrap();
            assert_eq!(same, rf == rg, "{f} vs {g}");
        }
    }
    // oracle agreement on the first few pairs
    for (f, rf) in ramified.iter().take(3) {
        for (g, rg) in ramified.iter().take(3) {
            assert_eq!(
                oracle_isomorphic(f, g, p).unwrap(),
                rf == rg,
                "oracle vs labels: {f} / {g}"
            );
        }
    }
}
