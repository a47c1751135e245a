//! Acceptance suite: one test per numbered criterion, each printing a
//! pass line with its runtime. All symbolic checks are exact; all counting
//! claims are pinned to explicit prime lists with a holdout prime.
//!
//! Run with `cargo test --test acceptance -- --nocapture` to see the lines.

use std::time::Instant;

use ehall::counting::{
    check_fiber_estimate, count_comm, count_comm4_components, count_locus_m, count_quot,
    count_quot_flag, fit_polynomial, locus_l_table, PolyFit,
};
use ehall::words::{e_word, Word};
use ehall::{
    cartan, enk_tuple, gary_check, relation_r1, verify_empty_triangle, verify_quadratic_with,
    verify_serre, Coeff, LatticeVec, Verdict, Window, WordSum, ZeroOracle,
};

fn pass(name: &str, t: Instant) {
    println!("criterion {name}: PASS ({:.2?})", t.elapsed());
}

fn fit(counts: impl Fn(u64) -> u128, qs: &[u64], holdout: u64) -> PolyFit {
    let samples: Vec<(u64, u128)> = qs.iter().map(|&q| (q, counts(q))).collect();
    let fit = fit_polynomial(&samples, (holdout, counts(holdout))).expect("fit");
    assert!(fit.holdout_ok, "holdout at q={holdout} failed");
    fit
}

#[test]
fn criterion_01_enk_dictionary() {
    let t = Instant::now();
    let cases: [(i64, i64, &[i64]); 3] = [
        (2, 1, &[0, 1]),
        (3, 1, &[0, 0, 1]),
        (5, 2, &[0, 0, 1, 0, 1]),
    ];
    for (n, k, tuple) in cases {
        let (word, prefactor) = enk_tuple(n, k).unwrap();
        assert_eq!(word, Word(tuple.to_vec()), "E_-{n},{k}");
        assert!(prefactor.is_one());
    }
    assert!(t.elapsed().as_secs() < 1);
    pass("1 (dictionary words)", t);
}

#[test]
fn criterion_02_double_bracket_chain() {
    let t = Instant::now();
    // term-for-term intermediates
    assert_eq!(
        e_word(&[0, 0, 1]).bracket_ek(1),
        e_word(&[0, 1, 0, 1]).add(&e_word(&[0, 0, 1, 1]))
    );
    assert_eq!(e_word(&[0, 0, 1]).bracket_ek(0), e_word(&[0, 0, 0, 1]).neg());
    assert!(gary_check());
    assert!(t.elapsed().as_secs() < 1);
    pass("2 (double-bracket chain)", t);
}

#[test]
fn criterion_03_serre() {
    let t = Instant::now();
    for k in -5..=5 {
        assert!(verify_serre(k), "k={k}");
    }
    assert!(t.elapsed().as_secs() < 1);
    pass("3 (cubic relation)", t);
}

#[test]
fn criterion_04_quadratic_relation() {
    let t = Instant::now();
    let oracle = ZeroOracle::new(Window::new(3, -6, 6));
    for m in -3..=3 {
        for n in -3..=3 {
            assert!(
                verify_quadratic_with(m, n, &oracle).unwrap(),
                "instance ({m},{n})"
            );
        }
    }
    assert!(t.elapsed().as_secs() < 120, "took {:?}", t.elapsed());
    pass("4 (quadratic relation, 49 instances)", t);
}

#[test]
fn criterion_05_empty_triangles() {
    let t = Instant::now();
    let mut instances = 0;
    for n in -4..=-1i64 {
        for k in -4..=4i64 {
            if (n, k) == (0, 0) {
                continue;
            }
            let Ok(u) = LatticeVec::new(n, k) else { continue };
            for j in -4..=4i64 {
                let v = LatticeVec::new(-1, j).unwrap();
                if !ehall::triangle_is_empty(u, v) {
                    continue;
                }
                let verdict = verify_empty_triangle(u, j, None).unwrap();
                assert_eq!(verdict, Verdict::ProvenZero, "u={u} j={j}");
                instances += 1;
            }
        }
    }
    assert!(instances >= 15, "only {instances} instances");
    assert!(t.elapsed().as_secs() < 300, "took {:?}", t.elapsed());
    pass(&format!("5 (empty triangles, {instances} instances)"), t);
}

#[test]
fn criterion_06_cartan_identities() {
    let t = Instant::now();
    // H from zero input is 1
    let h = cartan::h_from_e0(cartan::Sign::Plus, 0);
    assert_eq!(h, vec![cartan::CartanPoly::one()]);
    // H+_1 against an independent series division round trip
    let (series, num, den) = cartan::h_series(cartan::Sign::Plus, 3);
    assert_eq!(series.mul(&den), num);
    let expect = cartan::CartanPoly::symbol(cartan::Symbol::E0(1))
        .scale(&Coeff::one().sub(&Coeff::q_pow(-1)));
    assert_eq!(series.coeff(1), expect);
    // exact P <-> E round trip to order 6
    let ray = LatticeVec::new(1, 1).unwrap();
    let p = cartan::p_from_e(ray, 6).unwrap();
    let e = cartan::e_from_p(ray, 6).unwrap();
    let map: std::collections::BTreeMap<cartan::Symbol, cartan::CartanPoly> = (1..=6)
        .map(|s| (cartan::Symbol::P(s, s), p[(s - 1) as usize].clone()))
        .collect();
    for s in 1..=6i64 {
        assert_eq!(
            e[(s - 1) as usize].subst(&map),
            cartan::CartanPoly::symbol(cartan::Symbol::E(s, s)),
            "round trip order {s}"
        );
    }
    // deformed Heisenberg value at level one
    let u = LatticeVec::new(1, 1).unwrap();
    let v = LatticeVec::new(-1, -1).unwrap();
    assert_eq!(
        cartan::heisenberg_bracket(u, v, Some(1)).unwrap(),
        cartan::CartanPoly::constant(Coeff::commutator_factor().neg())
    );
    assert!(t.elapsed().as_secs() < 1);
    pass("6 (diagonal-sector identities)", t);
}

#[test]
fn criterion_07_comm_counts_and_fits() {
    let t = Instant::now();
    assert_eq!(count_comm(3, 2).unwrap(), 40);
    assert_eq!(count_comm(3, 3).unwrap(), 297);

    let fit2 = fit(|q| count_comm(2, q).unwrap(), &[2, 3, 5, 7, 11, 13], 17);
    assert_eq!((fit2.degree, fit2.leading_as_integer().unwrap().to_string().as_str()), (2, "1"));

    let fit3 = fit(|q| count_comm(3, q).unwrap(), &[2, 3, 5, 7, 11, 13], 17);
    assert_eq!((fit3.degree, fit3.leading_as_integer().unwrap().to_string().as_str()), (5, "1"));

    let eleven = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31];
    let fit4 = fit(|q| count_comm(4, q).unwrap(), &eleven, 37);
    assert_eq!((fit4.degree, fit4.leading_as_integer().unwrap().to_string().as_str()), (9, "2"));

    // component split: both fitted dimensions are 9
    let fit_z1 = fit(|q| count_comm4_components(q).unwrap().0, &eleven, 37);
    assert_eq!(fit_z1.degree, 9);
    let fit_z2 = fit(|q| count_comm4_components(q).unwrap().1, &eleven, 37);
    assert_eq!(fit_z2.degree, 9);
    for q in [2, 3, 5, 7] {
        let (z1, z2) = count_comm4_components(q).unwrap();
        assert_eq!(z1 + z2, count_comm(4, q).unwrap());
    }
    assert!(t.elapsed().as_secs() < 600, "took {:?}", t.elapsed());
    pass("7 (triangular pair counts and dimensions)", t);
}

#[test]
fn criterion_08_quot_dimensions() {
    let t = Instant::now();
    let qs = [2, 3, 5, 7, 11];
    for (d, r) in [(1u32, 1u32), (1, 2), (2, 1), (2, 2)] {
        let f = fit(|q| count_quot(d, r, q).unwrap().count, &qs, 13);
        assert_eq!(f.degree as i64, (r * d) as i64 - 1, "d={d} r={r}");
        // divisibility in every record is enforced by construction; check anyway
        for q in qs.iter().chain([&13]) {
            let rec = count_quot(d, r, *q).unwrap();
            assert_eq!(rec.raw % rec.group_order.unwrap(), 0);
        }
    }
    for q in qs.iter().chain([&13]) {
        assert_eq!(count_quot(2, 1, *q).unwrap().count, (*q + 1) as u128);
        assert_eq!(count_quot(1, 2, *q).unwrap().count, (*q + 1) as u128);
    }
    assert!(t.elapsed().as_secs() < 300, "took {:?}", t.elapsed());
    pass("8 (punctual Quot dimensions)", t);
}

#[test]
fn criterion_09_flag_dimensions_and_fiber_bounds() {
    let t = Instant::now();
    // defect-free flagged counts have dimension rn - 1
    for n in 1..=3u32 {
        for r in 1..=2u32 {
            let f = fit(
                |q| count_quot_flag(0, n, r, q).unwrap().count,
                &[2, 3, 5, 7, 11, 13],
                17,
            );
            assert_eq!(f.degree as i64, (r * n) as i64 - 1, "n={n} r={r}");
        }
    }
    // both dimension bounds, all supported parameters
    for d in 0..=1u32 {
        for n in 1..=3u32 {
            for r in 1..=2u32 {
                let report = if d == 0 {
                    check_fiber_estimate(d, n, r, &[2, 3, 5, 7, 11, 13], 17).unwrap()
                } else {
                    check_fiber_estimate(d, n, r, &[2, 3, 5, 7, 11, 13, 17, 19, 23], 29).unwrap()
                };
                assert!(report.passed(), "{report}");
            }
        }
    }
    assert!(t.elapsed().as_secs() < 600, "took {:?}", t.elapsed());
    pass("9 (flagged Quot dimensions and fiber bounds)", t);
}

#[test]
fn criterion_10_locus_tables() {
    let t = Instant::now();
    // codimension tables for the triangular-pair strata, as equalities
    let expected: [(u32, &[u64], u64, &[usize]); 3] = [
        (2, &[2, 3, 5, 7, 11], 13, &[2, 0]),
        (3, &[2, 3, 5, 7, 11, 13], 17, &[5, 1, 0]),
        (4, &[2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31], 37, &[9, 3, 1, 0]),
    ];
    for (n, qs, holdout, codims) in expected {
        let comm_fit = fit(|q| count_comm(n, q).unwrap(), qs, holdout);
        let dim_comm = comm_fit.degree;
        // one table computation per prime, shared across the strata
        let tables: std::collections::HashMap<u64, Vec<u128>> = qs
            .iter()
            .chain([&holdout])
            .map(|&q| (q, locus_l_table(n, q).unwrap()))
            .collect();
        for (lambda, &codim) in codims.iter().enumerate() {
            let f = fit(|q| tables[&q][lambda], qs, holdout);
            assert_eq!(
                dim_comm - f.degree,
                codim,
                "codim of stratum lambda={lambda}, n={n}"
            );
        }
        // partition: strata add up to the whole variety
        for &q in qs.iter().chain([&holdout]) {
            let total: u128 = tables[&q].iter().sum();
            assert_eq!(total, count_comm(n, q).unwrap(), "partition at q={q}");
        }
    }

    // Quot-side strata: emptiness range, codimension lower bounds, partition
    let qs = [2u64, 3, 5, 7, 11, 13];
    let holdout = 17;
    let lower_bounds: [&[usize]; 3] = [&[0], &[3, 0], &[8, 2, 0]];
    for d in 1..=3u32 {
        for r in 1..=2u32 {
            let quot_fit = fit(|q| count_quot(d, r, q).unwrap().count, &qs, holdout);
            for mu in -1..=d as i64 {
                let in_range = mu >= (d as i64 - r as i64).max(0) && mu < d as i64;
                let all_qs: Vec<u64> = qs.iter().chain([&holdout]).copied().collect();
                if !in_range {
                    for &q in &all_qs {
                        assert_eq!(
                            count_locus_m(d, mu, r, q).unwrap().raw,
                            0,
                            "emptiness d={d} r={r} mu={mu} q={q}"
                        );
                    }
                    continue;
                }
                let f = fit(
                    |q| count_locus_m(d, mu, r, q).unwrap().count,
                    &qs,
                    holdout,
                );
                let codim = quot_fit.degree - f.degree;
                let bound = lower_bounds[(d - 1) as usize][mu as usize];
                assert!(
                    codim >= bound,
                    "codim {codim} < {bound} for d={d} r={r} mu={mu}"
                );
            }
            // partition of the raw counts
            for &q in qs.iter().chain([&holdout]) {
                let total = count_quot(d, r, q).unwrap().raw;
                let sum: u128 = (0..d as i64)
                    .map(|mu| count_locus_m(d, mu, r, q).unwrap().raw)
                    .sum();
                assert_eq!(sum, total, "raw partition d={d} r={r} q={q}");
            }
        }
    }
    assert!(t.elapsed().as_secs() < 600, "took {:?}", t.elapsed());
    pass("10 (stratum codimension tables)", t);
}

// small deterministic generator for the randomized exact checks
struct Lcg(u64);

impl Lcg {
    fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        self.0 >> 11
    }

    fn int(&mut self, lo: i64, hi: i64) -> i64 {
        lo + (self.next_u64() % (hi - lo + 1) as u64) as i64
    }
}

#[test]
fn criterion_11_property_suites() {
    let t = Instant::now();
    let mut rng = Lcg(0x5eed);

    // field axioms on random elements, exact equality
    let mut random_coeff = |rng: &mut Lcg| -> Coeff {
        let mut poly = |rng: &mut Lcg| {
            let mut p = ehall::LaurentPoly::zero();
            for _ in 0..rng.int(1, 3) {
                p = p.add(&ehall::LaurentPoly::monomial(
                    rng.int(-2, 2),
                    rng.int(-2, 2),
                    num_bigint::BigInt::from(rng.int(-5, 5)),
                ));
            }
            p
        };
        let num = poly(rng);
        let mut den = poly(rng);
        if den.is_zero() {
            den = ehall::LaurentPoly::one();
        }
        Coeff::new(num, den).unwrap()
    };
    for _ in 0..1000 {
        let a = random_coeff(&mut rng);
        let b = random_coeff(&mut rng);
        let c = random_coeff(&mut rng);
        assert_eq!(a.add(&b), b.add(&a));
        assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        assert_eq!(a.mul(&b), b.mul(&a));
        assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        assert_eq!(a.sub(&a), Coeff::zero());
        if !a.is_zero() {
            assert!(a.div(&a).unwrap().is_one());
            assert_eq!(a.mul(&a.inv().unwrap()), Coeff::one());
        }
    }

    // word-algebra properties on random words
    let mut random_word = |rng: &mut Lcg, maxlen: i64| -> Word {
        let len = rng.int(0, maxlen);
        Word((0..len).map(|_| rng.int(-3, 3)).collect())
    };
    for _ in 0..300 {
        let a = random_word(&mut rng, 3);
        let b = random_word(&mut rng, 3);
        let c = random_word(&mut rng, 2);
        let (ea, eb, ec) = (
            WordSum::from_word(a.clone()),
            WordSum::from_word(b.clone()),
            WordSum::from_word(c.clone()),
        );
        // associativity, exact
        assert_eq!(ea.mul(&eb).mul(&ec), ea.mul(&eb.mul(&ec)));
        // grading additivity and entry-sum conservation
        let product = ea.mul(&eb);
        for (w, _) in product.terms() {
            assert_eq!(w.len(), a.len() + b.len());
            assert_eq!(w.entry_sum(), a.entry_sum() + b.entry_sum());
        }
        let k = rng.int(-3, 3);
        for (w, _) in ea.bracket_ek(k).terms() {
            assert_eq!(w.len(), a.len() + 1);
            assert_eq!(w.entry_sum(), a.entry_sum() + k);
        }
        // commutator antisymmetry
        assert_eq!(ea.commutator(&eb), eb.commutator(&ea).neg());
    }

    // 100 random windowed relation instances land in the proven span
    let window = Window::new(3, -2, 2);
    let oracle = ZeroOracle::new(window);
    let mut proven = 0;
    while proven < 100 {
        let len = rng.int(1, 2);
        let word = Word((0..len).map(|_| rng.int(-2, 2)).collect());
        let k = rng.int(-2, 2);
        let rel = relation_r1(&word, k);
        if rel.is_zero() {
            continue;
        }
        assert_eq!(
            oracle.prove_zero(&rel).unwrap(),
            Verdict::ProvenZero,
            "relation ({word:?}, {k})"
        );
        proven += 1;
    }
    assert!(t.elapsed().as_secs() < 120, "took {:?}", t.elapsed());
    pass("11 (property suites)", t);
}
