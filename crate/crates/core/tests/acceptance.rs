//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
//! failure. Runs without the libtest harness so the report stays readable.

mod common;

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use panelweb::families::{self, monotonicity, sweep, Family};
use panelweb::handlebody::{chain_ranks, IntersectionForm};
use panelweb::intlinalg::{smith_normal_form, AbelianInvariants, IntMatrix};
use panelweb::kleinian::dimension::{box_counting_dimension, ScaleLadder};
use panelweb::kleinian::limit_set::{forward_invariance_violation, limit_set_sample};
use panelweb::kleinian::{complex_twist, panelled, scalar_sign, GroupSpec, Sign};
use panelweb::moebius::MoebiusTransform;

type Outcome = Result<String, String>;
type Criterion = (&'static str, u64, fn() -> Outcome);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn ab(free: usize, torsion: &[u64]) -> AbelianInvariants {
    AbelianInvariants { free_rank: free, torsion: torsion.iter().map(|&t| BigInt::from(t)).collect() }
}

fn c1_exact_invariants() -> Outcome {
    let m1 = families::m1().report().map_err(|e| e.to_string())?;
    ensure(m1.chi == -4, || format!("M1 chi {}", m1.chi))?;
    ensure(m1.h1 == ab(4, &[]), || format!("M1 H1 {}", m1.h1))?;
    ensure(m1.betti[2] == 2 && m1.h2 == ab(2, &[]), || format!("M1 H2 {}", m1.h2))?;
    ensure(m1.h3_rank == 4, || format!("M1 H3 rank {}", m1.h3_rank))?;
    ensure(m1.signature == 0 && m1.intersection_form == IntersectionForm::H, || "M1 form".into())?;

    let m2 = families::m2().report().map_err(|e| e.to_string())?;
    ensure(m2.h1 == ab(3, &[6]), || format!("M2 H1 {}", m2.h1))?;
    ensure(m2.betti[2] == 0 && m2.h2 == ab(0, &[6]), || format!("M2 H2 {}", m2.h2))?;
    ensure(m2.h3_rank == 3, || format!("M2 H3 rank {}", m2.h3_rank))?;
    ensure(m2.intersection_form == IntersectionForm::Zero, || "M2 form".into())?;

    let m3 = families::m3().report().map_err(|e| e.to_string())?;
    ensure(m3.chi == -2 && m3.h1 == ab(3, &[]) && m3.betti[2] == 2, || format!("M3 {m3:?}"))?;
    Ok("M1, M2, M3 match".into())
}

fn c2_chain_ranks() -> Outcome {
    let m1 = chain_ranks(&families::m1().decomposition).map_err(|e| e.to_string())?;
    ensure(m1.0 == [1, 6, 6, 6, 1], || format!("M1 {m1}"))?;
    for g in 0..=10u32 {
        for n in 1..=10u32 {
            let hd = families::m3_gn(g, n).map_err(|e| e.to_string())?.decomposition;
            let got = chain_ranks(&hd).map_err(|e| e.to_string())?.0;
            let want = common::m3_chain_ranks(g as usize, n as usize);
            ensure(got == want, || format!("M3_(g={g},n={n}): {got:?} != {want:?}"))?;
        }
    }
    Ok("M1 and 110 M3_(g,n) complexes".into())
}

fn c3_family_sweeps() -> Outcome {
    let range: Vec<u32> = (1..=10).collect();
    let mut points = 0;
    for (fam, name) in [(Family::M1g, "m1g"), (Family::M1gn, "m1gn"), (Family::M3gn, "m3gn"), (Family::M4n, "m4n")] {
        // Collapsed parameters are repeated so each family contributes 100 points.
        let rows = sweep(fam, &range, &range).map_err(|e| e.to_string())?;
        let reps = 100 / rows.len();
        for r in &rows {
            let (b1, b2, chi) = common::closed_forms(name, r.g.unwrap_or(0) as i64, r.n.unwrap_or(0) as i64);
            ensure((r.b1 as i64, r.b2 as i64, r.chi) == (b1, b2, chi), || {
                format!("{name} g={:?} n={:?}: got ({}, {}, {}), want ({b1}, {b2}, {chi})", r.g, r.n, r.b1, r.b2, r.chi)
            })?;
            points += reps;
        }
    }
    ensure(points == 400, || format!("{points} parameter points"))?;
    Ok("400 parameter points".into())
}

fn c4_snf_properties() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for trial in 0..1000 {
        let (m, n) = (rng.gen_range(1..=5), rng.gen_range(1..=5));
        let rows: Vec<Vec<i64>> = (0..m).map(|_| (0..n).map(|_| rng.gen_range(-20..=20)).collect()).collect();
        let a = IntMatrix::from_rows(&rows).map_err(|e| e.to_string())?;
        let s = smith_normal_form(&a);
        let ctx = || format!("trial {trial}, A = {rows:?}");
        ensure(s.u.mul(&a).mul(&s.v) == s.d, || format!("U A V != D; {}", ctx()))?;
        ensure(s.u.determinant().abs().is_one() && s.v.determinant().abs().is_one(), || format!("U or V not unimodular; {}", ctx()))?;
        for i in 0..m {
            for j in 0..n {
                ensure(i == j || s.d.get(i, j).is_zero(), || format!("D not diagonal; {}", ctx()))?;
            }
        }
        let f = s.invariant_factors();
        for w in f.windows(2) {
            ensure(!w[0].is_zero() && (&w[1] % &w[0]).is_zero(), || format!("divisibility fails {f:?}; {}", ctx()))?;
        }
        let oracle = common::invariant_factors_by_minors(&rows);
        ensure(f == oracle, || format!("factors {f:?} vs minors {oracle:?}; {}", ctx()))?;
    }
    Ok("1000 random matrices".into())
}

fn c5_dimension_oracle() -> Outcome {
    let ladder = ScaleLadder::default();
    let cantor = box_counting_dimension(&common::cantor_points(12), &ladder).map_err(|e| e.to_string())?;
    ensure((0.53..=0.73).contains(&cantor.d), || format!("Cantor d = {}", cantor.d))?;
    let seg = box_counting_dimension(&common::segment_points(10_000), &ladder).map_err(|e| e.to_string())?;
    ensure((0.9..=1.1).contains(&seg.d), || format!("segment d = {}", seg.d))?;
    let sample = limit_set_sample(&common::classical_schottky(), 8, None);
    let schottky = box_counting_dimension(&sample.points, &ladder).map_err(|e| e.to_string())?;
    ensure(schottky.d > 0.0 && schottky.d < 1.0, || format!("Schottky d = {}", schottky.d))?;
    let sign = scalar_sign(schottky.d, 4).map_err(|e| e.to_string())?;
    ensure(sign.sign == Sign::Positive, || format!("Schottky sign {}", sign.sign))?;
    Ok(format!("Cantor {:.3}, segment {:.3}, Schottky {:.3} ({} points)", cantor.d, seg.d, schottky.d, schottky.point_count))
}

fn c6_group_identities() -> Outcome {
    let lambda = 4.0;
    let a = "a".parse().unwrap();
    // a in a non-trivial frame so the twist has to conjugate.
    let frame = MoebiusTransform::from_real(2.0, 1.0, 1.0, 1.0).map_err(|e| e.to_string())?;
    let base = MoebiusTransform::scaling(lambda).map_err(|e| e.to_string())?.conjugate_by(&frame);
    let g = GroupSpec::cyclic(a, base).map_err(|e| e.to_string())?;
    for (p, q) in [(1, 3), (2, 3), (1, 5)] {
        let t = complex_twist(&g, &"a".parse().unwrap(), p, q, lambda, None).map_err(|e| e.to_string())?;
        let a0 = t.transform(&"b".parse().unwrap()).map_err(|e| e.to_string())?;
        ensure(a0.pow(q).approx_eq(&base, 1e-9), || format!("a0^{q} != a for p/q = {p}/{q}"))?;
    }
    let pg = panelled::panelled_group(3).map_err(|e| e.to_string())?;
    let (s6, s7) = (limit_set_sample(&pg, 6, None), limit_set_sample(&pg, 7, None));
    if let Some((p, q)) = forward_invariance_violation(&pg, &s6, &s7, s6.tau_dedup * 10.0) {
        return Err(format!("forward invariance: {p} -> {q} not near the depth-7 sample"));
    }
    for d in [0.0, 0.5, 1.0, 1.2, 2.0] {
        let s = scalar_sign(d, 4).map_err(|e| e.to_string())?;
        ensure(s.sign.to_string() == common::expected_sign(d), || format!("sign at d = {d}: {}", s.sign))?;
    }
    Ok(format!("twists, forward invariance on {} -> {} points, sign grid", s6.points.len(), s7.points.len()))
}

fn c7_growth() -> Outcome {
    let range: Vec<u32> = (1..=10).collect();
    for fam in [Family::M1g, Family::M1gn, Family::M3gn, Family::M4n] {
        let rows = sweep(fam, &range, &range).map_err(|e| e.to_string())?;
        let m = monotonicity(&rows);
        ensure(m.all(), || format!("{fam}: {m:?}"))?;
        for r in &rows {
            ensure(!(r.chi < 0) || r.einstein_obstructed, || format!("{fam} g={:?} n={:?} chi={} not flagged", r.g, r.n, r.chi))?;
        }
    }
    Ok("chi decreasing, b1 increasing, Einstein flag set for chi < 0".into())
}

fn main() {
    let criteria: [Criterion; 7] = [
        ("exact invariants of M1, M2, M3", 1, c1_exact_invariants),
        ("chain ranks of M1 and M3_(g,n)", 1, c2_chain_ranks),
        ("family sweeps against closed forms", 10, c3_family_sweeps),
        ("Smith normal form properties", 30, c4_snf_properties),
        ("dimension estimator oracles", 60, c5_dimension_oracle),
        ("group-engine identities", 30, c6_group_identities),
        ("growth along families", 5, c7_growth),
    ];
    let mut failed = 0;
    for (i, (name, limit, f)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let r = f();
        let el = t.elapsed();
        let r = match r {
            Ok(msg) if el > Duration::from_secs(*limit) => Err(format!("{msg}, but took {el:.2?} (limit {limit} s)")),
            other => other,
        };
        match r {
            Ok(msg) => println!("PASS  {}  {name}: {msg} [{el:.2?}]", i + 1),
            Err(msg) => {
                failed += 1;
                println!("FAIL  {}  {name}: {msg} [{el:.2?}]", i + 1);
            }
        }
    }
    if failed > 0 {
        println!("{failed} of {} criteria failed", criteria.len());
        std::process::exit(1);
    }
    println!("all {} criteria passed", criteria.len());
}
