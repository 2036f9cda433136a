//! The acceptance suite as library functions, shared by the `verify` command
//! and the integration tests. Each criterion reports a verdict, a one-line
//! detail and its runtime against a budget.

use crate::error::Result;
use crate::exactalg::{delta_n, f_alpha, parse_poly_n, specht, CycNum, Rat, UPoly};
use crate::filtration::{
    canonical_content, canonical_content_oracle, intersection_criterion, trace_vanishing_oracle,
    DEFAULT_SYMBOLIC_BOUND,
};
use crate::groups::{young_subgroup, GroupSpec, Subgroup};
use crate::linalg::Mat;
use crate::partitions::{
    enumerate_partitions, enumerate_set_partitions, phi_mu, pnmu, strata_graph, Partition, SetPartition,
};
use crate::repr::{
    all_irreps, character_table, clifford_check, cyclic_span_dim, invariant_dim,
    mackey_check, orbit_span, projector_chi, projector_unit, reynolds, symmetric_irreps, Character,
    Module,
};
use crate::residues::{certificate_holds, classify_etale_trivial, iso_class_equal, residue_divisor, LogForm};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use std::collections::BTreeSet;
use std::sync::Arc;
use std::time::{Duration, Instant};

pub const CRITERIA: u32 = 13;

/// The expected specialization diagram for `n = 6`.
pub const REFERENCE_N6_EDGES: [(&str, &str); 17] = [
    ("1,1,1,1,1,1", "2,1,1,1,1"),
    ("2,1,1,1,1", "3,1,1,1"),
    ("2,1,1,1,1", "2,2,1,1"),
    ("3,1,1,1", "4,1,1"),
    ("3,1,1,1", "3,2,1"),
    ("2,2,1,1", "3,2,1"),
    ("2,2,1,1", "2,2,2"),
    ("4,1,1", "5,1"),
    ("4,1,1", "4,2"),
    ("3,2,1", "5,1"),
    ("3,2,1", "4,2"),
    ("3,2,1", "3,3"),
    ("2,2,2", "4,2"),
    ("2,2,2", "3,3"),
    ("5,1", "6"),
    ("4,2", "6"),
    ("3,3", "6"),
];

/// The groups of the census criterion, as `(d, e, n)`.
pub const CENSUS_GROUPS: [(u32, u32, u32); 9] =
    [(1, 1, 3), (1, 1, 4), (2, 1, 2), (2, 1, 3), (1, 2, 2), (1, 2, 4), (3, 1, 2), (1, 3, 3), (2, 2, 4)];

#[derive(Clone, Debug, Serialize)]
pub struct CriterionResult {
    pub id: u32,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed_ms: u128,
    pub budget_ms: u128,
}

impl CriterionResult {
    pub fn line(&self) -> String {
        format!(
            "{} criterion {:>2} {:<28} {:>8} ms  {}",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.name,
            self.elapsed_ms,
            self.detail
        )
    }
}

fn part(s: &str) -> Partition {
    s.parse().expect("literal partition")
}

fn parts(v: &[&str]) -> BTreeSet<Partition> {
    v.iter().map(|s| part(s)).collect()
}

fn show(s: &BTreeSet<Partition>) -> String {
    let v: Vec<String> = s.iter().map(|p| p.to_string()).collect();
    format!("{{{}}}", v.join(","))
}

fn sym(n: u32) -> Result<Arc<Subgroup>> {
    Ok(Arc::new(GroupSpec::symmetric(n).whole()?))
}

pub fn name(id: u32) -> &'static str {
    match id {
        1 => "n=4 canonical contents",
        2 => "n=5 raw P_(3,2)",
        3 => "n=6 phi and strata graph",
        4 => "oracle equivalence",
        5 => "trace criterion",
        6 => "imprimitive census",
        7 => "Weyl D4 anchor",
        8 => "projector suite",
        9 => "branching and delta_n",
        10 => "Mackey and Clifford",
        11 => "Specht dimensions",
        12 => "residues",
        13 => "normal-basis shadow",
        _ => "unknown",
    }
}

fn budget(id: u32) -> Duration {
    let s = match id {
        1..=3 => 1,
        4 => 300,
        5 | 6 => 600,
        8 | 9 | 12 => 60,
        10 => 120,
        _ => 60,
    };
    Duration::from_secs(s)
}

/// Runs one criterion; errors inside the check count as failures.
pub fn run(id: u32) -> CriterionResult {
    let t = Instant::now();
    let out = match id {
        1 => c1(),
        2 => c2(),
        3 => c3(),
        4 => c4(),
        5 => c5(),
        6 => c6(),
        7 => c7(),
        8 => c8(),
        9 => c9(),
        10 => c10(),
        11 => c11(),
        12 => c12(),
        13 => c13(),
        _ => Ok((false, "no such criterion".into())),
    };
    let elapsed = t.elapsed();
    let (ok, detail) = out.unwrap_or_else(|e| (false, format!("error: {}", e)));
    let b = budget(id);
    let detail = if ok && elapsed > b { format!("{} (over the {} s budget)", detail, b.as_secs()) } else { detail };
    CriterionResult {
        id,
        name: name(id),
        passed: ok && elapsed <= b,
        detail,
        elapsed_ms: elapsed.as_millis(),
        budget_ms: b.as_millis(),
    }
}

pub fn run_all() -> Vec<CriterionResult> {
    (1..=CRITERIA).map(run).collect()
}

fn c1() -> Result<(bool, String)> {
    let a = canonical_content(&part("3,1")).content;
    let b = canonical_content(&part("2,2")).content;
    let ea = parts(&["2,2", "3,1", "4"]);
    let eb = parts(&["2,1,1", "3,1", "4"]);
    Ok((a == ea && b == eb, format!("N_(3,1) = {} (expected {}), N_(2,2) = {} (expected {})", show(&a), show(&ea), show(&b), show(&eb))))
}

fn c2() -> Result<(bool, String)> {
    let got: BTreeSet<Partition> = pnmu(&part("3,2")).into_iter().collect();
    let want = parts(&["1,1,1,1,1", "2,1,1,1", "3,1,1", "2,2,1"]);
    Ok((got == want, format!("P_(3,2) = {}", show(&got))))
}

fn c3() -> Result<(bool, String)> {
    let phi = phi_mu(&part("2,2,2"));
    let phi_ok = phi == parts(&["2,2,1,1", "3,1,1,1"]);
    let g = strata_graph(6);
    let got: BTreeSet<(Partition, Partition)> = g.edges.iter().cloned().collect();
    let want: BTreeSet<(Partition, Partition)> = REFERENCE_N6_EDGES.iter().map(|(a, b)| (part(a), part(b))).collect();
    let extra: Vec<String> = got.difference(&want).map(|(a, b)| format!("{}->{}", a, b)).collect();
    let missing: Vec<String> = want.difference(&got).map(|(a, b)| format!("{}->{}", a, b)).collect();
    Ok((
        phi_ok && extra.is_empty() && missing.is_empty(),
        format!(
            "phi_(2,2,2) = {}; {} edges, extra [{}], missing [{}]",
            show(&phi),
            got.len(),
            extra.join(" "),
            missing.join(" ")
        ),
    ))
}

fn c4() -> Result<(bool, String)> {
    let mut bad = Vec::new();
    let mut count = 0;
    for n in 3..=5 {
        for mu in enumerate_partitions(n) {
            count += 1;
            if canonical_content_oracle(&mu, DEFAULT_SYMBOLIC_BOUND)? != canonical_content(&mu).content {
                bad.push(mu.to_string());
            }
        }
    }
    Ok((bad.is_empty(), format!("{} strata compared, mismatches [{}]", count, bad.join(" "))))
}

fn c5() -> Result<(bool, String)> {
    let mut pairs = 0;
    let mut bad = 0;
    for n in 1..=5 {
        let all = enumerate_set_partitions(n);
        for p in &all {
            for q in &all {
                pairs += 1;
                if trace_vanishing_oracle(p, q, DEFAULT_SYMBOLIC_BOUND)? != intersection_criterion(p, q)? {
                    bad += 1;
                }
            }
        }
    }
    let all6 = enumerate_set_partitions(6);
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for _ in 0..500 {
        let p = all6.choose(&mut rng).unwrap();
        let q = all6.choose(&mut rng).unwrap();
        pairs += 1;
        if trace_vanishing_oracle(p, q, DEFAULT_SYMBOLIC_BOUND)? != intersection_criterion(p, q)? {
            bad += 1;
        }
    }
    Ok((bad == 0, format!("{} pairs (exhaustive n <= 5, 500 random at n = 6), {} disagreements", pairs, bad)))
}

fn c6() -> Result<(bool, String)> {
    let mut ok = true;
    let mut notes = Vec::new();
    for (d, e, n) in CENSUS_GROUPS {
        let spec = GroupSpec::new(d, e, n)?;
        let c = all_irreps(&spec)?;
        let good = c.is_complete();
        ok &= good;
        notes.push(format!("{}:{}/{}{}", spec, c.irreps.len(), c.class_count, if good { "" } else { "!" }));
    }
    Ok((ok, notes.join(" ")))
}

fn c7() -> Result<(bool, String)> {
    let spec = GroupSpec::new(1, 2, 4)?;
    let a = [1, 1, 0, 0];
    let f0 = f_alpha(&spec, &a, 0)?;
    let f1 = f_alpha(&spec, &a, 1)?;
    let ok = f0 == parse_poly_n("x1*x2 + x3*x4", 4)? && f1 == parse_poly_n("x1*x2 - x3*x4", 4)?;
    Ok((ok, format!("f0 = {}, f1 = {}", f0.to_text(), f1.to_text())))
}

/// Projector identities on the regular module of one group.
pub fn projector_suite(spec: &GroupSpec) -> Result<(bool, String)> {
    let census = all_irreps(spec)?;
    let g = census.group.clone();
    let reg = Module::regular(g.clone());
    let k = g.order();
    let id = Mat::identity(k);
    let mut total = Mat::zeros(k, k);
    let mut projs = Vec::new();
    let mut ok = true;
    for ir in &census.irreps {
        let p = projector_chi(&ir.character, &reg)?;
        ok &= p.mul(&p) == p;
        total = total.add(&p);
        let model = Module::from_representation(&ir.rep);
        let d = model.dim();
        let units: Vec<Vec<Mat>> = (0..d)
            .map(|a| (0..d).map(|b| projector_unit(&model, &reg, a, b)).collect::<Result<_>>())
            .collect::<Result<_>>()?;
        let mut diag = Mat::zeros(k, k);
        for a in 0..d {
            diag = diag.add(&units[a][a]);
            ok &= units[a][a].rank() == d;
            for b in 0..d {
                for c in 0..d {
                    for e in 0..d {
                        let prod = units[a][b].mul(&units[c][e]);
                        ok &= if b == c { prod == units[a][e] } else { prod.is_zero() };
                    }
                }
            }
        }
        ok &= diag == p;
        projs.push(p);
    }
    ok &= total == id;
    for (i, p) in projs.iter().enumerate() {
        for (j, q) in projs.iter().enumerate() {
            if i != j {
                ok &= p.mul(q).is_zero();
            }
        }
    }
    Ok((ok, format!("{}: {} isotypic projectors", spec, projs.len())))
}

fn c8() -> Result<(bool, String)> {
    let mut ok = true;
    let mut notes = Vec::new();
    for spec in [GroupSpec::symmetric(3), GroupSpec::symmetric(4), GroupSpec::new(2, 1, 2)?] {
        let (good, note) = projector_suite(&spec)?;
        ok &= good;
        notes.push(note);
    }
    Ok((ok, notes.join("; ")))
}

fn c9() -> Result<(bool, String)> {
    let mut ok = true;
    let mut notes = Vec::new();
    for n in 3..=6u32 {
        let g = sym(n)?;
        let h = young_subgroup(GroupSpec::symmetric(n), &SetPartition::new(n, vec![(1..n).collect(), vec![n]])?)?;
        let triv = Character::trivial(g.clone());
        let mut hits = Vec::new();
        for (l, ir) in symmetric_irreps(&g)? {
            if ir.character == triv {
                continue;
            }
            let v = invariant_dim(&ir.character, &h)?;
            if v != 0 {
                hits.push((l, v));
            }
        }
        let d = delta_n(n as usize)?;
        let span = orbit_span(&g, &d)?;
        let good = hits.len() == 1
            && hits[0].1 == 1
            && reynolds(&g, &d).is_zero()
            && span.dim() == n as usize - 1
            && span.character().is_irreducible();
        ok &= good;
        notes.push(format!("n={}: {}", n, hits.iter().map(|(l, v)| format!("{}->{}", l, v)).collect::<Vec<_>>().join(",")));
    }
    Ok((ok, notes.join("; ")))
}

fn c10() -> Result<(bool, String)> {
    // Mackey over all pairs of Young subgroups of S_4, every irreducible of H_2
    let s4 = sym(4)?;
    let youngs: Vec<Arc<Subgroup>> = enumerate_set_partitions(4)
        .iter()
        .map(|p| young_subgroup(GroupSpec::symmetric(4), p).map(Arc::new))
        .collect::<Result<_>>()?;
    let mut checks = 0;
    let mut bad = 0;
    for h2 in &youngs {
        let irr = character_table(h2)?;
        for h1 in &youngs {
            for psi in &irr {
                checks += 1;
                if !mackey_check(&s4, h1, psi)?.ok {
                    bad += 1;
                }
            }
        }
    }
    let s5 = sym(5)?;
    let sp5 = enumerate_set_partitions(5);
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..5 {
        let h1 = Arc::new(young_subgroup(GroupSpec::symmetric(5), sp5.choose(&mut rng).unwrap())?);
        let h2 = Arc::new(young_subgroup(GroupSpec::symmetric(5), sp5.choose(&mut rng).unwrap())?);
        let irr = character_table(&h2)?;
        let psi = &irr[rng.gen_range(0..irr.len())];
        checks += 1;
        if !mackey_check(&s5, &h1, psi)?.ok {
            bad += 1;
        }
    }
    // Clifford over A_4 and V_4 in S_4 and the diagonal subgroup of G(2,1,2)
    let a4 = Arc::new(s4.filter(|g| g.sign() == 1)?);
    let v4 = Arc::new(s4.filter(|g| g.sign() == 1 && g.order() <= 2)?);
    let b2 = GroupSpec::new(2, 1, 2)?;
    let c_b2 = all_irreps(&b2)?;
    let diag = Arc::new(c_b2.group.filter(|g| g.is_diagonal())?);
    let c_s4 = all_irreps(&GroupSpec::symmetric(4))?;
    let mut cliff = 0;
    let mut cliff_bad = 0;
    for (census, h) in [(&c_s4, &a4), (&c_s4, &v4), (&c_b2, &diag)] {
        for ir in &census.irreps {
            cliff += 1;
            if !clifford_check(&census.group, h, &ir.character)?.ok {
                cliff_bad += 1;
            }
        }
    }
    Ok((
        bad == 0 && cliff_bad == 0,
        format!("{} Mackey checks ({} failed), {} Clifford checks ({} failed)", checks, bad, cliff, cliff_bad),
    ))
}

fn c11() -> Result<(bool, String)> {
    let mut checked = 0;
    let mut bad = Vec::new();
    for n in 1..=5 {
        let g = sym(n)?;
        for q in enumerate_set_partitions(n) {
            checked += 1;
            let dim = orbit_span(&g, &specht(&q))?.dim() as u128;
            if dim != q.shape().conjugate().hook_count() {
                bad.push(q.to_string());
            }
        }
    }
    Ok((bad.is_empty(), format!("{} Specht indexers, mismatches [{}]", checked, bad.join(" "))))
}

fn random_prime(rng: &mut ChaCha8Rng) -> UPoly {
    if rng.gen_bool(0.6) {
        UPoly::from_ints(&[rng.gen_range(-20..=20), 1])
    } else {
        UPoly::from_ints(&[rng.gen_range(1..=20), rng.gen_range(-3..=3) * 2, 1])
    }
}

fn distinct_primes(rng: &mut ChaCha8Rng, k: usize) -> Vec<UPoly> {
    let mut out: Vec<UPoly> = Vec::new();
    while out.len() < k {
        let p = random_prime(rng);
        if p.is_irreducible().unwrap_or(false) && !out.contains(&p) {
            out.push(p);
        }
    }
    out
}

fn c12() -> Result<(bool, String)> {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let mut bad_sum = 0;
    for _ in 0..100 {
        let k = rng.gen_range(1..=4);
        let terms: Vec<(Rat, UPoly)> = (0..k)
            .map(|_| {
                let deg = rng.gen_range(1..=3);
                let mut c: Vec<i64> = (0..deg).map(|_| rng.gen_range(-9..=9)).collect();
                c.push(rng.gen_range(1..=3));
                (Rat::int(rng.gen_range(-4..=4)), UPoly::from_ints(&c))
            })
            .collect();
        let form = LogForm::dlog_combination("x", &terms, None)?;
        if !residue_divisor(&form).degree_weighted_sum().is_zero() {
            bad_sum += 1;
        }
    }
    let mut bad_trip = 0;
    for _ in 0..200 {
        let l = rng.gen_range(1..=12i64);
        let k = rng.gen_range(1..=4);
        let primes = distinct_primes(&mut rng, k);
        let terms: Vec<(Rat, UPoly)> = primes
            .into_iter()
            .map(|p| {
                let mut e = rng.gen_range(1..=5i64);
                if rng.gen_bool(0.3) {
                    e = -e;
                }
                (Rat::new(e, l), p)
            })
            .collect();
        let form = LogForm::dlog_combination("x", &terms, None)?;
        let good = match classify_etale_trivial(&form)? {
            crate::residues::Verdict::EtaleTrivial(cert) => {
                let num = cert.phi_num.to_upoly(0).expect("rational");
                let den = cert.phi_den.to_upoly(0).expect("rational");
                let lr = Rat::new(1, cert.l as i64);
                let back = LogForm::dlog_combination("x", &[(lr.clone(), num), (-lr, den)], None)?;
                certificate_holds(&form, &cert) && iso_class_equal(&form, &back)
            }
            _ => false,
        };
        if !good {
            bad_trip += 1;
        }
    }
    Ok((
        bad_sum == 0 && bad_trip == 0,
        format!("100 divisors ({} nonzero sums), 200 round trips ({} failed)", bad_sum, bad_trip),
    ))
}

fn c13() -> Result<(bool, String)> {
    const PRIMES: [i64; 24] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89];
    let mut ok = true;
    let mut notes = Vec::new();
    for n in [3, 4] {
        let g = sym(n)?;
        let k = g.order();
        let generic: Vec<CycNum> = PRIMES[..k].iter().map(|&p| CycNum::int(p)).collect();
        let ones = vec![CycNum::one(); k];
        let a = cyclic_span_dim(&g, &generic)?;
        let b = cyclic_span_dim(&g, &ones)?;
        ok &= a == k && b == 1;
        notes.push(format!("S{}: generic {} / {}, sum {}", n, a, k, b));
    }
    Ok((ok, notes.join("; ")))
}
