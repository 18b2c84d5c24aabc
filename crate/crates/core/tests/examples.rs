//! Worked examples, each checked against an oracle computed here rather
//! than by the routine under test.

mod common;

use common::*;
use ktorsion::*;
use rand::Rng;

fn e(r: &str, s: &str) -> RingElem {
    RingElem::parse(&ring(r), s).unwrap()
}

fn tp(r: &str, t: usize, s: &str) -> TruncatedPoly {
    TruncatedPoly::parse(&ring(r), t, s).unwrap()
}

fn su(r: &str, t: usize, s: &str) -> SeriesUnit {
    SeriesUnit::parse(&ring(r), t, s).unwrap()
}

fn pm(r: &str, s: &str) -> PolyMatrix {
    PolyMatrix::parse(&ring(r), s).unwrap()
}

#[test]
fn scalar_arithmetic() {
    assert_eq!(
        ring_arith(RingOp::Mul, &e("Z/8", "3"), &e("Z/8", "3")).unwrap(),
        e("Z/8", "1")
    );
    assert_eq!(
        ring_arith(RingOp::Mul, &e("Q", "2/3"), &e("Q", "3/4")).unwrap(),
        e("Q", "1/2")
    );
    assert_eq!(e("Z/8", "3").inv().unwrap(), e("Z/8", "3"));
    assert_eq!(e("Q", "2/5").inv().unwrap(), e("Q", "5/2"));
    // 2 has no inverse mod 8: no residue r has 2r ≡ 1
    assert!((0..8).all(|r| !e("Z/8", &format!("2*{r}")).is_one()));
    assert_eq!(e("Z/8", "2").inv().unwrap_err().name(), "NotAUnit");
    let mut rng = rng(20);
    let q = ring("Q");
    for _ in 0..50 {
        let a = elem(&mut rng, &q);
        assert_eq!(ring_arith(RingOp::Add, &a, &RingElem::zero(&q)).unwrap(), a);
    }
}

#[test]
fn truncated_inverse_and_scaling() {
    let inv = tp("Z", 2, "1 + X").trunc_inv().unwrap();
    assert_eq!(inv, tp("Z", 2, "1 - X + X^2"));
    assert!(naive_mul(&inv.coeffs(), &tp("Z", 2, "1 + X").coeffs(), 2) == tp("Z", 2, "1").coeffs());
    let inv = tp("Q", 1, "2 + X").trunc_inv().unwrap();
    assert_eq!(inv, tp("Q", 1, "1/2 - X/4"));
    assert_eq!(tp("Z", 3, "X").trunc_inv().unwrap_err().name(), "NotAUnit");

    let f = tp("Z", 2, "1 + X + X^2");
    assert_eq!(f.scale_x(&e("Z", "2")).unwrap(), tp("Z", 2, "1 + 2X + 4X^2"));
    assert_eq!(f.scale_x(&e("Z", "1")).unwrap(), f);
    assert_eq!(
        tp("Z/8", 3, "1 + X").scale_x(&e("Z/8", "3")).unwrap(),
        tp("Z/8", 3, "1 + 3X")
    );
}

#[test]
fn witt_examples() {
    let z = ring("Z");
    for t in 1..=6 {
        let one = WittVector::one(&z, t);
        assert!(witt_series(&one).poly().coeffs().iter().all(RingElem::is_one));
        assert!(witt_coords(&SeriesUnit::one(&z, t))
            .coords()
            .iter()
            .all(RingElem::is_zero));
    }
    // 1 + X = (1 − X)^{-1} (1 − (−1) X^2)^{-1} mod X^3
    let w = witt_coords(&su("Z", 2, "1 + X"));
    assert_eq!(w.coords(), vec![e("Z", "1"), e("Z", "-1")]);
    let back = naive_mul(&tp("Z", 2, "1 + X + X^2").coeffs(), &tp("Z", 2, "1 - X^2").coeffs(), 2);
    assert_eq!(back, tp("Z", 2, "1 + X").coeffs());

    // level one generators add coordinatewise at the first place
    let (a, b) = (e("Z/12", "5"), e("Z/12", "7"));
    let (ga, gb) = (WittVector::generator(&a, 1, 4), WittVector::generator(&b, 1, 4));
    let sum = witt_add(&ga, &gb).unwrap();
    assert_eq!(sum.coords()[0], &a + &b);
    let geo = |c: &RingElem| -> Vec<RingElem> { (0..=4).map(|i| c.pow(i)).collect() };
    assert_eq!(witt_series(&sum).poly().coeffs(), naive_mul(&geo(&a), &geo(&b), 4));

    let zero = WittVector::zero(&ring("Z/12"), 4);
    assert_eq!(witt_neg(&zero), zero);
    assert_eq!(
        witt_series(&witt_neg(&ga)),
        SeriesUnit::parse(&ring("Z/12"), 4, "1 - 5X").unwrap()
    );

    // generator products: levels (1, 1) and (2, 3)
    assert_eq!(witt_mul(&ga, &gb).unwrap(), WittVector::generator(&(&a * &b), 1, 4));
    let (a, b) = (e("Z", "2"), e("Z", "3"));
    let p = witt_mul(&WittVector::generator(&a, 2, 8), &WittVector::generator(&b, 3, 8)).unwrap();
    let c = &a.pow(3) * &b.pow(2);
    let expect: Vec<RingElem> = (0..=8)
        .map(|i| {
            if i % 6 == 0 {
                c.pow(i as u64 / 6)
            } else {
                RingElem::zero(&ring("Z"))
            }
        })
        .collect();
    assert_eq!(witt_series(&p).poly().coeffs(), expect);

    // (1 − aX)^{-1} has coordinates (a, 0, 0, ...) and ghost (a, a^2, a^3, ...)
    let a = e("Z", "3");
    let f = witt_series(&WittVector::generator(&a, 1, 5));
    assert_eq!(ghost(&f), (1..=5).map(|n| a.pow(n)).collect::<Vec<_>>());
    assert!(ghost(&witt_series(&WittVector::one(&ring("Z"), 5)))
        .iter()
        .all(RingElem::is_one));
}

#[test]
fn canonical_products() {
    assert!(canonical_product(&su("Z", 4, "1")).iter().all(RingElem::is_zero));
    assert_eq!(
        canonical_product(&su("Z", 2, "1 + X + X^2")),
        vec![e("Z", "1"), e("Z", "1")]
    );
    assert_eq!(
        naive_mul(&tp("Z", 2, "1 + X").coeffs(), &tp("Z", 2, "1 + X^2").coeffs(), 2),
        tp("Z", 2, "1 + X + X^2").coeffs()
    );
    // over Z/2 the 8 coefficient choices (1 + a X)(1 + b X^2)(1 + c X^3) are distinct
    let z2 = ring("Z/2");
    let mut seen = std::collections::BTreeSet::new();
    for i in 0..8 {
        let mut acc = tp("Z/2", 3, "1").coeffs();
        for (lvl, bit) in [(1, i & 1), (2, i >> 1 & 1), (3, i >> 2 & 1)] {
            let mut factor = vec![RingElem::zero(&z2); 4];
            factor[0] = RingElem::one(&z2);
            factor[lvl] = RingElem::from_int(&z2, bit);
            acc = naive_mul(&acc, &factor, 3);
        }
        seen.insert(format!("{acc:?}"));
    }
    assert_eq!(seen.len(), 8);
}

#[test]
fn factor_examples() {
    let (p0, q) = lemma3_factor(&tp("Z", 2, "1 + X + X^2"), 1).unwrap();
    assert_eq!((p0, q), (e("Z", "1"), tp("Z", 2, "1")));
    let (p0, q) = lemma3_factor(&tp("Z", 5, "1 + 4X^2"), 2).unwrap();
    assert_eq!((p0, q.degree()), (e("Z", "4"), None));
    let (p0, q) = lemma3_factor(&tp("Z", 3, "1 + 6X^2 + 7X^3"), 2).unwrap();
    assert_eq!((p0, q), (e("Z", "6"), tp("Z", 3, "7")));
    assert_eq!(
        naive_mul(&tp("Z", 3, "1 + 6X^2").coeffs(), &tp("Z", 3, "1 + 7X^3").coeffs(), 3),
        tp("Z", 3, "1 + 6X^2 + 7X^3").coeffs()
    );
}

#[test]
fn single_round_examples() {
    let trivial = HypothesisToken::new("H", Subgroup::Trivial);
    let (q, log) = lemma4_step(&tp("Z/5", 3, "1"), 1, 2, &trivial).unwrap();
    assert_eq!(q, tp("Z/5", 3, "0"));
    verify_derivation_log(&log).unwrap();
    assert_eq!(log.conclusion, "1 ≡ 1 (mod T)");

    let opaque = HypothesisToken::new("H", Subgroup::Opaque);
    let (_, log) = lemma4_step(&tp("Z/8", 3, "1 + 4X"), 1, 3, &opaque).unwrap();
    verify_derivation_log(&log).unwrap();
    assert!(log.exact_count() > 0);
    assert_eq!(
        lemma4_step(&tp("Z/8", 3, "1 + 4X"), 1, 2, &opaque).unwrap_err().name(),
        "NotAUnit"
    );
}

#[test]
fn trivialize_examples() {
    let log = trivialize_k_torsion(&su("Z/5", 3, "1"), 2).unwrap();
    verify_derivation_log(&log).unwrap();
    assert_eq!(log.conclusion, "1 = 1");
    // (1 + 4X)^2 = 1 + 8X + 16X^2 ≡ 1 over Z/8
    let f = su("Z/8", 3, "1 + 4X");
    assert_eq!(naive_pow(&f.poly().coeffs(), 2, 3), tp("Z/8", 3, "1").coeffs());
    assert_eq!(trivialize_k_torsion(&f, 2).unwrap_err().name(), "NotAUnit");
}

#[test]
fn words() {
    let base = ring("Z/7");
    let lam = e("Z/7[X]", "3X");
    let w = ElemWord::new(
        &base,
        2,
        vec![Transvection {
            i: 0,
            j: 1,
            lambda: lam,
        }],
    )
    .unwrap();
    assert_eq!(w.product(), pm("Z/7", "[[1, 3X], [0, 1]]"));
    let mut rng = rng(21);
    for _ in 0..100 {
        let a = matrix(&mut rng, &base, 3, 2);
        let letters = (0..4)
            .map(|_| {
                let (i, j) = (rng.gen_range(0..3), rng.gen_range(0..3));
                Transvection {
                    i,
                    j: if i == j { (j + 1) % 3 } else { j },
                    lambda: RingElem::parse(&poly_ring(&base).unwrap(), &poly(&mut rng, &base, 2, false)).unwrap(),
                }
            })
            .collect();
        let w = ElemWord::new(&base, 3, letters).unwrap();
        assert_eq!(elem_apply(&w.inverse(), &elem_apply(&w, &a).unwrap()).unwrap(), a);
        assert_eq!(elem_apply(&w, &a).unwrap(), w.product().mul(&a).unwrap());
        assert_eq!(
            apply_right(&a, &w).unwrap(),
            a.mul(&naive_product(&base, 3, w.letters())).unwrap()
        );
        assert!(w.product().det().is_one());
    }
    assert_eq!(
        elem_apply(&ElemWord::empty(&base, 2), &pm("Z/7", "[[X, 1], [2, 3]]")).unwrap(),
        pm("Z/7", "[[X, 1], [2, 3]]")
    );
}

#[test]
fn whitehead_examples() {
    let w = whitehead_word(&pm("Z/5", "[[2]]"), &pm("Z/5", "[[3]]")).unwrap();
    assert!(word_is(&w, &pm("Z/5", "[[2, 0], [0, 3]]")));
    let id = pm("Z", "[[1, 0], [0, 1]]");
    let w = whitehead_word(&id, &id).unwrap();
    assert!(word_is(&w, &PolyMatrix::identity(&ring("Z"), 4).unwrap()));
    assert_eq!(
        whitehead_word(&pm("Z/5", "[[2]]"), &pm("Z/5", "[[2]]"))
            .unwrap_err()
            .name(),
        "NotInverse"
    );
}

#[test]
fn higman_examples() {
    let (a1, cert) = higman_reduce_step(&pm("Z", "[[1 + X^2]]")).unwrap();
    assert_eq!(a1, pm("Z", "[[1, -X], [X, 1]]"));
    assert!(cert.replay());
    let three = pm("Z", "[[1, -X], [0, 1]]")
        .mul(&pm("Z", "[[1 + X^2, 0], [0, 1]]"))
        .unwrap()
        .mul(&pm("Z", "[[1, 0], [X, 1]]"))
        .unwrap();
    assert_eq!(three, a1);
    assert_eq!(
        higman_reduce_step(&pm("Z", "[[1 + X]]")).unwrap_err().name(),
        "AlreadyLinear"
    );

    let mut rng = rng(22);
    let a = matrix(&mut rng, &ring("Z/6"), 2, 3);
    let (a1, cert) = higman_reduce_step(&a).unwrap();
    assert_eq!((a1.size(), a1.degree()), (4, 2));
    assert!(cert.replay());

    let (b, cert) = higman_linearize(&pm("Z", "[[1 + X^3]]")).unwrap();
    assert_eq!((b.size(), b.degree()), (4, 1));
    assert!(cert.replay());
    let lin = pm("Z", "[[1 + X, 2], [X, 1]]");
    let (b, cert) = higman_linearize(&lin).unwrap();
    assert_eq!(b, lin);
    assert!(cert.left().is_empty() && cert.right().is_empty());

    let (b, cert) = higman_linearize(&pm("Z", "[[1, X^2], [0, 1]]")).unwrap();
    assert_eq!(b.size(), 4);
    assert!(b.coefficient(0).is_identity() && cert.replay());
}

#[test]
fn unipotent_examples() {
    let u = unipotent_normalize(&pm("Z", "[[1, X], [0, 1]]"), None, None).unwrap();
    assert_eq!(u.n, pm("Z", "[[0, 1], [0, 0]]"));
    assert!(u.cert.left().is_empty());
    let u = unipotent_normalize(
        &pm("Z", "[[1, X^2], [0, 1]]"),
        Some(&pm("Z", "[[1, -X^2], [0, 1]]")),
        None,
    )
    .unwrap();
    assert_eq!(u.n.size(), 4);
    assert!(u.n.pow(u.nilindex as u64).is_zero() && u.cert.replay());
    assert_eq!(
        unipotent_normalize(&pm("Z", "[[1 + X, 0], [0, 1]]"), None, None)
            .unwrap_err()
            .name(),
        "NotNilpotent"
    );
    assert_eq!(nilpotency_index(&pm("Z", "[[0, 1], [0, 0]]"), None).unwrap(), 2);
    assert_eq!(nilpotency_index(&pm("Z", "[[0, 0], [0, 0]]"), None).unwrap(), 1);
    assert_eq!(nilpotency_index(&pm("Z/8", "[[2]]"), None).unwrap(), 3);
}

#[test]
fn unipotent_derivation_examples() {
    let n = pm("Z/5", "[[0, 1], [0, 0]]");
    let i = PolyMatrix::identity(&ring("Z/5"), 2).unwrap();
    let m = n.shift(1);
    // N^2 = 0, so (I + NX)^3 = I + 3NX
    assert_eq!(
        i.add(&m).unwrap().pow(3),
        i.add(&m.add(&m).unwrap().add(&m).unwrap()).unwrap()
    );
    verify_derivation_log(&theorem1_derivation(&n, 3).unwrap()).unwrap();

    // shift over Z/9: (I + NX)^2 = (I + 2NX)(I + N^2 X^2) since N^3 = 0
    let n = pm("Z/9", "[[0, 1, 0], [0, 0, 1], [0, 0, 0]]");
    let i = PolyMatrix::identity(&ring("Z/9"), 3).unwrap();
    let m = n.shift(1);
    let lhs = i.add(&m).unwrap().pow(2);
    let rhs = i
        .add(&m.add(&m).unwrap())
        .unwrap()
        .mul(&i.add(&m.pow(2)).unwrap())
        .unwrap();
    assert_eq!(lhs, rhs);
    let log = theorem1_derivation(&n, 2).unwrap();
    verify_derivation_log(&log).unwrap();
    assert_eq!(log.hypothesis_count(), 1);

    assert_eq!(
        theorem1_derivation(&pm("Z/8", "[[0, 1], [0, 0]]"), 2)
            .unwrap_err()
            .name(),
        "NotAUnit"
    );
}

#[test]
fn determinants_and_fixture() {
    let mut rng = rng(23);
    for _ in 0..20 {
        let (a, _) = unipotent_pair(&mut rng, &ring("Z"), 3, 4);
        assert!(sk1_det_check(&a).1);
    }
    let (d, ok) = sk1_det_check(&pm("Z", "[[2, 0], [0, 1]]"));
    assert_eq!((d, ok), (e("Z[X]", "2"), false));
    // over Z/2: (1 − XY)(1 + XY) + X^2 Y^2 = 1
    let a = mennicke_fixture(&ring("Z/2")).unwrap();
    let r = a.ring().clone();
    let ent = |i, j| a.entry(i, j);
    assert_eq!(
        &(&ent(0, 0) * &ent(1, 1)) - &(&ent(0, 1) * &ent(1, 0)),
        RingElem::one(&r)
    );
    assert!(has_even_total_degree(&a));
    let z = mennicke_fixture(&ring("Z")).unwrap();
    assert!(z.mul(&mennicke_inverse(&ring("Z")).unwrap()).unwrap().is_identity());
}

#[test]
fn theta_examples() {
    let r = ring("Z/7[Y]");
    let a = GradedElem::from_elem(&RingElem::parse(&r, "4").unwrap()).unwrap();
    let th = swan_weibel_theta(&a).unwrap();
    assert_eq!(th, RingElem::parse(th.ring(), "4").unwrap());
    let a = GradedElem::from_elem(&RingElem::parse(&r, "1 + 2Y^2").unwrap()).unwrap();
    let th = swan_weibel_theta(&a).unwrap();
    assert_eq!(th, RingElem::parse(th.ring(), "1 + 2Y^2*X^2").unwrap());
    assert_eq!(evaluate_at_one(&th).unwrap(), a.to_elem());
}

#[test]
fn verifier_rejections() {
    let opaque = HypothesisToken::new("H", Subgroup::Opaque);
    let (_, log) = lemma4_step(&tp("Z/8", 3, "1 + 4X"), 1, 3, &opaque).unwrap();

    let mut bad = log.clone();
    let i = bad.steps.iter().position(|s| s.kind() == "EXACT").unwrap();
    if let Step::Exact { rhs, .. } = &mut bad.steps[i] {
        *rhs = format!("({rhs}) + X^3");
    }
    let rej = verify_derivation_log(&bad).unwrap_err();
    assert_eq!(
        (rej.step, rej.reason.to_string()),
        (Some(i), "identity fails".to_string())
    );

    let mut bad = log.clone();
    let i = bad.steps.iter().position(|s| !s.cites().is_empty()).unwrap();
    if let Step::Cong { cites, .. } | Step::Axiom { cites, .. } = &mut bad.steps[i] {
        cites[0] = i + 1;
    }
    let rej = verify_derivation_log(&bad).unwrap_err();
    assert_eq!(
        (rej.step, rej.reason.to_string()),
        (Some(i), "bad citation".to_string())
    );
}
