//! Acceptance suite: one line per criterion, nonzero exit if any fails or
//! runs past its time limit.

use std::sync::Arc;
use std::time::{Duration, Instant};

use antiinv::chords::{ank, telephone, touchard, touchard_formula_rhs, touchard_riordan_rhs, AnkMethod};
use antiinv::counting::{
    at_q, closed_form_alpha, count_anti_invariant_brute, invariant_counts, matrix_construct, sigma_closed,
    sigma_profile_brute, AlphaFormula, MatrixKind, Profile, SigmaFormula,
};
use antiinv::exactalg::{choose2, QPoly};
use antiinv::gflinalg::{enumerate_subspaces, MatGF, DEFAULT_GUARD as G};
use antiinv::gfq::FieldCtx;
use antiinv::qseries::qbinom;
use antiinv::universal::{
    closed_form_p, detx_degree_check, recurrence_p, s_sum, solve_system, zero_sum_value, SumMethod, YPart,
};
use num_bigint::BigInt;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check, Option<u64>);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn field(q: u32) -> Arc<FieldCtx> {
    Arc::new(FieldCtx::with_order(q).unwrap())
}

fn q_minus_1() -> QPoly {
    QPoly::from_i64s(&[-1, 1])
}

/// Brute-force anti-invariant count against the general formula fed with
/// brute-force invariant counts.
fn main_formula_case(t: &MatGF, l: usize) -> Result<(), String> {
    let x = invariant_counts(t, G).map_err(|e| e.to_string())?;
    let brute = count_anti_invariant_brute(t, l, G).map_err(|e| e.to_string())?;
    let formula = at_q(
        &closed_form_alpha(t.rows(), l, AlphaFormula::Main(&x)).unwrap(),
        t.ctx(),
    );
    ensure(brute == formula, || {
        format!("{t:?} l={l}: brute {brute}, formula {formula}")
    })
}

fn c1_exhaustive_m3_gf2() -> Check {
    let ctx = field(2);
    for code in 0u32..512 {
        let entries = (0..9).map(|i| ctx.element(code >> i & 1).unwrap()).collect();
        let t = MatGF::new(ctx.clone(), 3, 3, entries).unwrap();
        for l in 0..=1 {
            main_formula_case(&t, l)?;
        }
    }
    Ok("512 operators x l in {0,1}".into())
}

fn c2_sampled_n4() -> Check {
    let n = 4;
    let mut cases = 0;
    for q in [2, 3] {
        let ctx = field(q);
        let mut ops = vec![
            matrix_construct(&ctx, &MatrixKind::NilpotentJordan { n }).unwrap(),
            matrix_construct(&ctx, &MatrixKind::Irreducible { n }).unwrap(),
        ];
        for l in 1..=2 {
            ops.extend((1..=l).map(|i| matrix_construct(&ctx, &MatrixKind::BlockTi { n, l, i }).unwrap()));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(2024 + u64::from(q));
        ops.extend((0..200).map(|_| MatGF::random(ctx.clone(), n, n, &mut rng)));
        for t in &ops {
            for l in 1..=2 {
                main_formula_case(t, l)?;
                cases += 1;
            }
        }
    }
    Ok(format!("{cases} cases"))
}

fn c3_touchard_riordan() -> Check {
    ensure(touchard(2) == QPoly::from_i64s(&[2, 1]), || {
        format!("T_2 = {}", touchard(2))
    })?;
    ensure(touchard_riordan_rhs(2) == QPoly::from_i64s(&[2, -3, 0, 1]), || {
        format!("rhs(2) = {}", touchard_riordan_rhs(2))
    })?;
    for m in 0..=8 {
        let lhs = q_minus_1().pow(m as u32) * touchard(m);
        ensure(lhs == touchard_riordan_rhs(m), || {
            format!("m={m}: {lhs} vs {}", touchard_riordan_rhs(m))
        })?;
    }
    Ok("m = 0..=8".into())
}

fn c4_touchard_formula() -> Check {
    let mut cases = 0;
    for n in 0..=10 {
        for l in 0..=n / 2 {
            let lhs = q_minus_1().pow(l as u32) * ank(n, n - 2 * l, AnkMethod::Enumerate);
            ensure(lhs == touchard_formula_rhs(n, l), || format!("n={n} l={l}"))?;
            cases += 1;
        }
    }
    Ok(format!("{cases} (n,l) pairs"))
}

fn c5_catalan_recurrence() -> Check {
    for n in 0..=10 {
        let mut total = BigInt::from(0);
        for k in 0..=n {
            let e = ank(n, k, AnkMethod::Enumerate);
            ensure(e == ank(n, k, AnkMethod::Recurrence), || format!("n={n} k={k}"))?;
            total += e.eval_i64(1);
        }
        ensure(total == BigInt::from(telephone(n)), || {
            format!("n={n}: {total} involutions")
        })?;
    }
    Ok("n = 0..=10".into())
}

fn c6_universal_triple() -> Check {
    for n in 0..=10 {
        for l in 0..=n / 2 {
            let closed = closed_form_p(n, l).unwrap();
            ensure(recurrence_p(n, l).unwrap() == closed, || {
                format!("recurrence n={n} l={l}")
            })?;
            if n <= 8 && l >= 1 {
                ensure(solve_system(n, l).unwrap() == closed, || format!("system n={n} l={l}"))?;
            }
        }
    }
    Ok("three routes n <= 8, recurrence to n = 10".into())
}

fn nli(max_n: usize) -> impl Iterator<Item = (usize, usize, usize)> {
    (2..=max_n).flat_map(|n| (1..=n / 2).flat_map(move |l| (1..=l).map(move |i| (n, l, i))))
}

fn c7_zero_sum() -> Check {
    let mut cases = 0;
    for (n, l, i) in nli(12) {
        let v = zero_sum_value(n, l, i).unwrap();
        ensure(v.is_zero(), || format!("(n,l,i)=({n},{l},{i}): {v}"))?;
        cases += 1;
    }
    Ok(format!("{cases} triples"))
}

fn c8_s_sums() -> Check {
    let mut cases = 0;
    for (n, l, i) in nli(10) {
        let mut s = Vec::new();
        for part in YPart::ALL {
            let b = s_sum(n, l, i, part, SumMethod::Binomial).unwrap();
            let h = s_sum(n, l, i, part, SumMethod::Hypergeometric).unwrap();
            ensure(b == h, || format!("({n},{l},{i}) {part:?}: {b} vs {h}"))?;
            s.push(b);
        }
        ensure(s[0] == s[3], || format!("S1 != S4 at ({n},{l},{i})"))?;
        ensure(s[1] == s[2], || format!("S2 != S3 at ({n},{l},{i})"))?;
        let total = &(&(&s[0] + &s[1]) - &s[2]) - &s[3];
        ensure(total.is_zero(), || format!("S1+S2-S3-S4 at ({n},{l},{i})"))?;
        cases += 1;
    }
    Ok(format!("{cases} triples"))
}

fn c9_diagonal_crossings() -> Check {
    let ctx = field(5);
    let n = 4;
    let t = matrix_construct(&ctx, &MatrixKind::DiagDistinct { n }).unwrap();
    let mut values = Vec::new();
    for l in 1..=2usize {
        let brute = count_anti_invariant_brute(&t, l, G).unwrap();
        let rhs =
            (q_minus_1().pow(l as u32) * ank(n, n - 2 * l, AnkMethod::Enumerate)).shift(choose2(l as i64) as usize);
        let rhs = at_q(&rhs, &ctx);
        ensure(brute == rhs, || format!("l={l}: brute {brute}, rhs {rhs}"))?;
        values.push(brute.to_string());
    }
    Ok(format!("alpha = {}", values.join(", ")))
}

fn c10_profiles() -> Check {
    let mu = Profile::new(vec![2, 2]).unwrap();
    let mut notes = Vec::new();
    for q in [2, 3] {
        let ctx = field(q);
        let irr = matrix_construct(&ctx, &MatrixKind::Irreducible { n: 4 }).unwrap();
        let nil = matrix_construct(&ctx, &MatrixKind::NilpotentJordan { n: 4 }).unwrap();
        let s_irr = sigma_profile_brute(&irr, &mu, G).unwrap();
        let s_nil = sigma_profile_brute(&nil, &mu, G).unwrap();
        let f_irr = at_q(&sigma_closed(&SigmaFormula::Irreducible(mu.clone())).unwrap(), &ctx);
        let f_nil = at_q(&sigma_closed(&SigmaFormula::Nilpotent(mu.clone())).unwrap(), &ctx);
        let f_gr = at_q(&sigma_closed(&SigmaFormula::GhorpadeRam { m: 2, d: 2 }).unwrap(), &ctx);
        let qb = BigInt::from(q);
        ensure(s_irr == f_irr, || format!("q={q} irreducible: {s_irr} vs {f_irr}"))?;
        ensure(s_nil == f_nil, || format!("q={q} nilpotent: {s_nil} vs {f_nil}"))?;
        ensure(s_irr == f_gr, || format!("q={q} splitting: {s_irr} vs {f_gr}"))?;
        ensure(f_nil == qb.pow(4), || format!("q={q}: q^(m^2(d-1)) mismatch"))?;
        ensure(f_gr == qb.pow(2) * (qb.pow(2) + 1), || {
            format!("q={q}: q^2(q^2+1) mismatch")
        })?;
        if q == 2 {
            ensure(s_irr == BigInt::from(20) && s_nil == BigInt::from(16), || {
                "q=2 values".into()
            })?;
        }
        notes.push(format!("q={q}: {s_irr}/{s_nil}"));
    }
    Ok(notes.join(", "))
}

fn c11_duality() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut cases = 0;
    for k in 0..100 {
        let q = if k % 2 == 0 { 2 } else { 3 };
        let n = 2 + k % 3;
        let t = MatGF::random(field(q), n, n, &mut rng);
        for l in 1..=n / 2 {
            let a = count_anti_invariant_brute(&t, l, G).unwrap();
            let at = count_anti_invariant_brute(&t.transpose(), l, G).unwrap();
            let s = sigma_profile_brute(&t, &Profile::new(vec![n - l, l]).unwrap(), G).unwrap();
            ensure(a == at && a == s, || format!("{t:?} l={l}: {a} {at} {s}"))?;
            cases += 1;
        }
    }
    Ok(format!("100 operators, {cases} cases"))
}

fn c12_det_degree() -> Check {
    let mut cases = 0;
    for n in 2..=8 {
        for l in 1..=n / 2 {
            let r = detx_degree_check(n, l).unwrap();
            ensure(r.pass && !r.determinant.is_zero(), || {
                format!(
                    "n={n} l={l}: degree {:?}, expected {}",
                    r.determinant.degree(),
                    r.expected_degree
                )
            })?;
            cases += 1;
        }
    }
    Ok(format!("{cases} (n,l) pairs"))
}

fn c13_subspace_counts() -> Check {
    for q in [2, 3, 4, 5] {
        let ctx = field(q);
        for n in 0..=5 {
            for k in 0..=n {
                let count = enumerate_subspaces(&ctx, n, k, G).unwrap().count();
                let expected = qbinom(n as i64, k as i64).eval(&BigInt::from(q));
                ensure(BigInt::from(count) == expected, || {
                    format!("q={q} n={n} k={k}: {count}")
                })?;
            }
        }
    }
    let planes = enumerate_subspaces(&field(2), 4, 2, G).unwrap().count();
    ensure(planes == 35, || format!("{planes} planes in GF(2)^4"))?;
    Ok("q in {2,3,4,5}, n <= 5".into())
}

fn main() {
    let criteria: [Criterion; 13] = [
        ("main formula, all of M3(GF(2))", c1_exhaustive_m3_gf2, Some(60)),
        ("main formula, sampled n=4, q=2,3", c2_sampled_n4, Some(300)),
        ("Touchard-Riordan, m <= 8", c3_touchard_riordan, Some(120)),
        ("Touchard's formula, n <= 10", c4_touchard_formula, Some(60)),
        (
            "Catalan recurrence vs enumeration, n <= 10",
            c5_catalan_recurrence,
            None,
        ),
        ("universal coefficients, three routes", c6_universal_triple, Some(120)),
        ("zero-sum identity, n <= 12", c7_zero_sum, Some(30)),
        ("partial sums as 2phi1 series, n <= 10", c8_s_sums, None),
        (
            "diagonal operators vs crossing polynomials, q=5",
            c9_diagonal_crossings,
            Some(120),
        ),
        ("profile closed forms", c10_profiles, None),
        ("transpose and profile duality", c11_duality, None),
        ("determinant degree, n <= 8", c12_det_degree, None),
        ("subspace enumeration vs Gaussian binomials", c13_subspace_counts, None),
    ];
    let mut failed = 0;
    for (idx, (name, check, limit)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = check();
        let elapsed = start.elapsed();
        let over = limit.is_some_and(|s| elapsed > Duration::from_secs(s));
        let limit_note = limit.map_or(String::new(), |s| format!(" / limit {s}s"));
        let (status, detail) = match (&result, over) {
            (Ok(d), false) => ("PASS", d.clone()),
            (Ok(d), true) => ("FAIL", format!("{d}; too slow")),
            (Err(e), _) => ("FAIL", e.clone()),
        };
        if status == "FAIL" {
            failed += 1;
        }
        println!(
            "{status} {:>2}. {name}: {detail} ({:.2}s{limit_note})",
            idx + 1,
            elapsed.as_secs_f64()
        );
    }
    println!("{}/{} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
