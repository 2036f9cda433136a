use proptest::prelude::*;
use reflect_core::exactalg::parse_poly;
use reflect_core::filtration::canonical_content;
use reflect_core::partitions::{dominance_leq, enumerate_partitions, in_pnmu, phi_mu, specialization_succ, strata_graph};
use reflect_core::residues::{classify_etale_trivial, extract_log_part_univariate, iso_class_equal, LogForm};
use reflect_core::{CycNum, GroupSpec, Partition, Poly, Rat, UPoly};
use std::collections::BTreeSet;

fn rat() -> impl Strategy<Value = Rat> {
    (-20i64..20, 1i64..12).prop_map(|(a, b)| Rat::new(a, b))
}

fn cyc() -> impl Strategy<Value = CycNum> {
    prop_oneof![Just(1u32), Just(3), Just(4), Just(5), Just(6), Just(8), Just(12)].prop_flat_map(|m| {
        prop::collection::vec(rat(), m as usize).prop_map(move |c| {
            (0..m as i64).zip(c).fold(CycNum::zero(), |acc, (k, r)| acc.add(&CycNum::zeta_pow(m, k).scale(&r)))
        })
    })
}

fn partition(max_n: u32) -> impl Strategy<Value = Partition> {
    (1..=max_n).prop_flat_map(|n| {
        let all = enumerate_partitions(n);
        (0..all.len()).prop_map(move |i| all[i].clone())
    })
}

fn pair(max_n: u32) -> impl Strategy<Value = (Partition, Partition)> {
    (1..=max_n).prop_flat_map(|n| {
        let all = enumerate_partitions(n);
        let k = all.len();
        (0..k, 0..k).prop_map(move |(i, j)| (all[i].clone(), all[j].clone()))
    })
}

fn close(a: (f64, f64), b: (f64, f64)) -> bool {
    (a.0 - b.0).abs() < 1e-6 && (a.1 - b.1).abs() < 1e-6
}

proptest! {
    #[test]
    fn rat_field_axioms(a in rat(), b in rat(), c in rat()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        if !a.is_zero() {
            prop_assert!((&a * &a.recip()).is_one());
        }
    }

    #[test]
    fn cyclotomic_field_axioms(a in cyc(), b in cyc(), c in cyc()) {
        prop_assert_eq!(a.add(&b).mul(&c), a.mul(&c).add(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert!(a.sub(&a).is_zero());
        if !a.is_zero() {
            prop_assert!(a.mul(&a.inv().unwrap()).is_one());
        }
        prop_assert_eq!(a.conj().conj(), a.clone());
    }

    #[test]
    fn cyclotomic_matches_complex(a in cyc(), b in cyc()) {
        let (x, y) = (a.to_complex(), b.to_complex());
        prop_assert!(close(a.add(&b).to_complex(), (x.0 + y.0, x.1 + y.1)));
        prop_assert!(close(a.mul(&b).to_complex(), (x.0 * y.0 - x.1 * y.1, x.0 * y.1 + x.1 * y.0)));
        prop_assert!(close(a.conj().to_complex(), (x.0, -x.1)));
    }

    #[test]
    fn action_is_homomorphism(
        (d, e, n) in prop_oneof![Just((1u32, 1u32, 3u32)), Just((2, 1, 2)), Just((1, 3, 2)), Just((2, 2, 3))],
        i in any::<prop::sample::Index>(),
        j in any::<prop::sample::Index>(),
        src in prop_oneof![Just("x1^2*x2 - 3*x3"), Just("x1*x2*x3 + x2^3"), Just("x1 - x2 + 2")],
    ) {
        let spec = GroupSpec::new(d, e, n).unwrap();
        let els = spec.enumerate().unwrap();
        let (g, h) = (i.get(&els), j.get(&els));
        let names: Vec<String> = (1..=n).map(|k| format!("x{}", k)).collect();
        let src = if n == 2 { src.replace("x3", "x1") } else { src.to_string() };
        let p = parse_poly(&src, &names).unwrap();
        prop_assert_eq!(g.mul(h).act(&p), g.act(&h.act(&p)));
        prop_assert_eq!(spec.identity().act(&p), p.clone());
        prop_assert_eq!(g.inv().act(&g.act(&p)), p);
    }

    #[test]
    fn conjugation_is_involution(p in partition(10)) {
        prop_assert_eq!(p.conjugate().conjugate(), p.clone());
        prop_assert_eq!(p.conjugate().n(), p.n());
        prop_assert_eq!(p.conjugate().hook_count(), p.hook_count());
    }

    #[test]
    fn pnmu_is_complement_of_dominance((l, m) in pair(8)) {
        prop_assert_eq!(in_pnmu(&l, &m).unwrap(), !dominance_leq(&m, &l).unwrap());
    }

    #[test]
    fn dominance_reverses_under_conjugation((l, m) in pair(8)) {
        prop_assert_eq!(dominance_leq(&l, &m).unwrap(), dominance_leq(&m.conjugate(), &l.conjugate()).unwrap());
    }

    #[test]
    fn content_grows_along_specialization((l, m) in pair(8)) {
        if specialization_succ(&l, &m).unwrap() {
            let (a, b) = (canonical_content(&l).content, canonical_content(&m).content);
            prop_assert!(a.is_subset(&b), "{} -> {}", l, m);
            prop_assert!(dominance_leq(&l, &m).unwrap());
        }
    }

    #[test]
    fn polynomial_parse_round_trip(c in prop::collection::vec(-6i64..6, 1..12)) {
        let names = vec!["x1".to_string(), "x2".to_string()];
        let mut p = Poly::zero(2);
        for (k, &v) in c.iter().enumerate() {
            let t = parse_poly(&format!("x1^{}*x2^{}", k % 4, k / 4), &names).unwrap();
            p.add_scaled(&t, &CycNum::int(v));
        }
        prop_assert_eq!(parse_poly(&p.to_string(), &names).unwrap(), p);
    }

    #[test]
    fn factorization_reconstructs(roots in prop::collection::vec(-5i64..5, 0..4), quad in prop::bool::ANY, lead in 1i64..5) {
        let mut f = UPoly::constant(Rat::int(lead));
        for r in &roots {
            f = f.mul(&UPoly::from_ints(&[-r, 1]));
        }
        if quad {
            f = f.mul(&UPoly::from_ints(&[2, 0, 1]));
        }
        let (c, fs) = f.factor().unwrap();
        let back = fs.iter().fold(UPoly::constant(c), |acc, (q, e)| acc.mul(&q.pow(*e)));
        prop_assert_eq!(back, f);
        for (q, _) in &fs {
            prop_assert!(q.is_irreducible().unwrap());
        }
    }

    #[test]
    fn iso_class_is_equivalence(
        cs in prop::collection::vec((-6i64..6, 1i64..5), 1..4),
        shifts in prop::collection::vec(-3i64..3, 3),
        k in -4i64..4,
        exp in prop::bool::ANY,
    ) {
        let primes = [UPoly::from_ints(&[0, 1]), UPoly::from_ints(&[-1, 1]), UPoly::from_ints(&[1, 0, 1])];
        let psi = if exp { Some((UPoly::from_ints(&[0, 1]), UPoly::one())) } else { None };
        let terms: Vec<(Rat, UPoly)> = cs.iter().enumerate().map(|(i, &(a, b))| (Rat::new(a, b), primes[i].clone())).collect();
        let shifted: Vec<(Rat, UPoly)> = terms.iter().zip(&shifts).map(|((r, p), &s)| (r + &Rat::int(s), p.clone())).collect();
        let psi2 = psi.clone().map(|(n, d)| (n.add(&d.scale(&Rat::int(k))), d));
        let a = LogForm::dlog_combination("x", &terms, psi).unwrap();
        let b = LogForm::dlog_combination("x", &shifted, psi2).unwrap();
        prop_assert!(iso_class_equal(&a, &a));
        prop_assert!(iso_class_equal(&a, &b));
        prop_assert!(iso_class_equal(&b, &a));
        let (va, vb) = (classify_etale_trivial(&a).unwrap(), classify_etale_trivial(&b).unwrap());
        prop_assert_eq!(va.is_etale_trivial(), vb.is_etale_trivial());
        prop_assert_eq!(va.is_etale_trivial(), !exp);
    }

    #[test]
    fn extraction_recovers_residues(
        roots in prop::collection::btree_set(-6i64..6, 1..4),
        cs in prop::collection::vec((-5i64..5, 1i64..4), 4),
        poly_part in prop::collection::vec(-3i64..3, 0..3),
    ) {
        let roots: Vec<i64> = roots.into_iter().collect();
        let linear: Vec<UPoly> = roots.iter().map(|r| UPoly::from_ints(&[-r, 1])).collect();
        let den = linear.iter().fold(UPoly::one(), |acc, q| acc.mul(q));
        let mut num = UPoly::from_ints(&poly_part).mul(&den);
        let mut want = BTreeSet::new();
        for (i, q) in linear.iter().enumerate() {
            let c = Rat::new(cs[i].0, cs[i].1);
            num = num.add(&den.div_exact(q).unwrap().scale(&c));
            if !c.is_zero() {
                want.insert((roots[i], c));
            }
        }
        let ex = extract_log_part_univariate("x", &num, &den).unwrap();
        prop_assert!(ex.nonconstant.is_empty());
        let got: BTreeSet<(i64, Rat)> = ex
            .form
            .log_part()
            .iter()
            .map(|(c, p)| (-p.to_upoly(0).unwrap().coeff(0).to_i64().unwrap(), c.to_rat().unwrap()))
            .collect();
        prop_assert_eq!(got, want);
        prop_assert_eq!(ex.form.psi_is_constant(), poly_part.iter().all(|&v| v == 0));
    }
}

#[test]
fn phi_is_disjoint_along_maximal_chains() {
    for n in 2..=6 {
        let top = canonical_content(&Partition::row(n)).content;
        for chain in strata_graph(n).maximal_chains() {
            let mut seen: BTreeSet<Partition> = BTreeSet::new();
            for mu in &chain {
                let phi: BTreeSet<Partition> = phi_mu(mu).into_iter().map(|l| l.conjugate()).collect();
                assert!(seen.is_disjoint(&phi), "overlap along {:?} at {}", chain, mu);
                assert!(phi.is_subset(&canonical_content(mu).content));
                seen.extend(phi);
            }
            assert!(seen.is_subset(&top));
        }
    }
}
