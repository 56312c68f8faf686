use std::time::Instant;
use ramify::oracle::{find_root_in_unramified, generate_corpus, oracle_isomorphic, CorpusSpec};
use ramify::padic::UnramifiedField;
use ramify::tame::{classify_tame_prime, TameBase, TameKind};

fn main() {
    for (p, q) in [(5u64, 3u64), (7, 3), (13, 3), (7, 2), (2, 3)] {
        let t0 = Instant::now();
        let spec = CorpusSpec { p, degree: q as usize, height: 4 * p * p, den_exp_bound: 1, count: 500, seed: 1000 + 10 * p + q };
        let corpus = generate_corpus(&spec).unwrap();
        let t_gen = t0.elapsed();
        let base = TameBase::new(p, 1).unwrap();
        let tower = UnramifiedField::canonical(p, q as usize, 40);
        let t1 = Instant::now();
        let mut unram_time = std::time::Duration::ZERO;
        let mut ram_time = std::time::Duration::ZERO;
        let mut nram = 0;
        for f in &corpus.polys {
            let (label, _) = classify_tame_prime(f, &base, q).unwrap();
            match label.kind {
                TameKind::Unramified => {
                    let t = Instant::now();
                    assert!(find_root_in_unramified(f, &tower).unwrap().is_some());
                    unram_time += t.elapsed();
                }
                TameKind::Ramified { .. } => {
                    nram += 1;
                    let t = Instant::now();
                    assert!(oracle_isomorphic(f, &label.canonical.clone().unwrap(), p).unwrap());
                    ram_time += t.elapsed();
                }
            }
        }
        println!("({p},{q}): gen {:?}, classify+oracle {:?} (unram searches {:?}, {} ramified oracle calls {:?})",
            t_gen, t1.elapsed(), unram_time, nram, ram_time);
    }
}
