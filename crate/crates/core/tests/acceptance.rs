//! One line per acceptance criterion. Generators and expected values are typed
//! in here directly rather than taken from the library or the CLI catalog.
//!
//! Runs without the libtest harness so every line is printed even on success.
//! Exit status is non-zero if any criterion fails.

use std::sync::Arc;
use std::time::Instant;

use blowup_core::blowup::{
    analytic_spread, fiber_cone, is_d_sequence, is_saturated_power, minimal_generator_count, mu_power, rees_ideal,
    reduction_number,
};
use blowup_core::hilbert::{hilbert_function, length_of_quotient, upoly_mul, upoly_pow};
use blowup_core::{
    buchberger, curve_ideal, parse_polynomial, CurveSpec, Field, HilbertSeries, Ideal, Length, MonomialIdeal,
    MonomialOrder, Polynomial, ReductionOutcome, Ring,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = Result<(), String>;
type Criterion = (&'static str, fn() -> Check);

fn ring5() -> Arc<Ring> {
    Ring::standard(5, Field::Rationals)
}

fn p(ring: &Arc<Ring>, s: &str) -> Polynomial {
    parse_polynomial(s, ring).unwrap_or_else(|e| panic!("bad polynomial {s}: {e}"))
}

fn ideal(ring: &Arc<Ring>, gens: &[String]) -> Ideal {
    let v: Vec<&str> = gens.iter().map(String::as_str).collect();
    Ideal::parse(ring, &v).expect("ideal")
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Check {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn c(n: i64, k: i64) -> i64 {
    if n < k || k < 0 {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn gens_331(a: u32) -> Vec<String> {
    vec![
        "x2^2 - x1*x3".into(),
        "x1*x2 - x0*x3".into(),
        format!("x3^{a} - x0^{}*x4", a - 1),
        "x1^2 - x0*x2".into(),
    ]
}

fn gens_332(a: u32) -> Vec<String> {
    vec![
        "x2^2 - x1*x3".into(),
        "x1*x2 - x0*x3".into(),
        "x1^2 - x0*x2".into(),
        format!("x3^{} - x0^{}*x2*x4", a + 1, a - 1),
        format!("x2*x3^{a} - x0^{}*x1*x4", a - 1),
        format!("x1*x3^{a} - x0^{a}*x4"),
    ]
}

fn gens_333(a: u32) -> Vec<String> {
    vec![
        format!("x2*x3^{a} - x0^{a}*x4 + x2^2 - x1*x3"),
        "x1*x2 - x0*x3".into(),
        "x1^2 - x0*x2".into(),
        format!("x3^{} - x0^{}*x1*x4", a + 1, a - 1),
        format!("x2*x3^{a} - x0^{a}*x4"),
    ]
}

fn criterion_1() -> Check {
    let ring = ring5();
    let cases: Vec<(Vec<u32>, Vec<String>)> = [3, 4, 5]
        .iter()
        .map(|&a| (vec![1, 2, 3, 3 * a], gens_331(a)))
        .chain([3, 4].iter().map(|&a| (vec![1, 2, 3, 3 * a + 1], gens_332(a))))
        .chain([3, 4].iter().map(|&a| (vec![1, 2, 3, 3 * a + 2], gens_333(a))))
        .collect();
    for (deg, gens) in cases {
        let spec = CurveSpec::new(deg.clone()).map_err(|e| e.to_string())?;
        let curve = curve_ideal(&spec, Field::Rationals).map_err(|e| e.to_string())?;
        let same = curve.equals(&ideal(&ring, &gens)).map_err(|e| e.to_string())?;
        ensure(same, || format!("curve ideal of {deg:?} differs from the listed generators"))?;
    }
    Ok(())
}

fn criterion_2() -> Check {
    let ring = ring5();
    for a in [3, 4] {
        let i = ideal(&ring, &gens_331(a));
        let d = is_d_sequence(i.gens()).map_err(|e| e.to_string())?;
        ensure(d.holds, || format!("a={a}: not a d-sequence, witness {:?}", d.witness))?;
        let rees = rees_ideal(i.gens()).map_err(|e| e.to_string())?;
        let profile = rees.u_degree_profile();
        ensure(profile.iter().all(|&(deg, _)| deg == 1), || format!("a={a}: u-degree profile {profile:?}"))?;
    }
    Ok(())
}

fn criterion_3() -> Check {
    let ring = ring5();
    let cases: [(Vec<String>, u32, i64, i64); 3] =
        [(gens_331(3), 4, 0, 0), (gens_332(3), 3, 2, 1), (gens_333(3), 3, 1, 1)];
    for (gens, tmax, b, cc) in cases {
        let i = ideal(&ring, &gens);
        for t in 1..=tmax {
            let t = t as i64;
            let expected = c(t + 3, 3) + b * c(t + 2, 3) + cc * c(t + 1, 3);
            let got = mu_power(&i, t as u32).map_err(|e| e.to_string())? as i64;
            ensure(got == expected, || format!("{} generators, t={t}: mu {got}, expected {expected}", gens.len()))?;
        }
    }
    let i2 = mu_power(&ideal(&ring, &gens_332(3)), 2).map_err(|e| e.to_string())?;
    ensure(i2 == 19, || format!("mu(I^2) = {i2}, expected 19"))
}

fn reduction_two(j: &Ideal, i: &Ideal, label: &str) -> Check {
    match reduction_number(j, i, 10).map_err(|e| e.to_string())? {
        ReductionOutcome::Found(cert) => {
            ensure(cert.reduction_number == 2, || format!("{label}: reduction number {}", cert.reduction_number))?;
            let strict = cert.checks.iter().any(|&(n, ok)| n == 1 && !ok) && cert.strict_failure_witness.is_some();
            ensure(strict, || format!("{label}: no certified failure of J I = I^2"))
        }
        ReductionOutcome::Inconclusive { cap } => Err(format!("{label}: inconclusive up to {cap}")),
    }
}

fn criterion_4() -> Check {
    let ring = ring5();
    let g = gens_332(3);
    let j: Vec<String> = vec![g[0].clone(), g[1].clone(), format!("{} + {}", g[2], g[3]), g[5].clone()];
    reduction_two(&ideal(&ring, &j), &ideal(&ring, &g), "C(1,2,3,10)")?;
    let g = gens_333(3);
    reduction_two(&ideal(&ring, &g[..4]), &ideal(&ring, &g), "C(1,2,3,11)")
}

fn criterion_5() -> Check {
    let ring = ring5();
    let g = gens_333(3);
    let f = fiber_cone(ideal(&ring, &g).gens()).map_err(|e| e.to_string())?;
    let ok = f.relations_equal(&["u5^3 - u1*u5^2 + u2*u4*u5 - u3*u4^2"]).map_err(|e| e.to_string())?;
    ensure(ok, || format!("C(1,2,3,11): K = {}", f.relations))?;
    ensure(f.series == HilbertSeries::new(vec![1, 1, 1], 4), || format!("C(1,2,3,11): series {}", f.series))?;
    ensure(f.analytic_spread == 4, || format!("C(1,2,3,11): spread {}", f.analytic_spread))?;

    let fp = Ring::standard(5, Field::Prime(32003));
    let g = gens_332(3);
    let order: Vec<String> =
        vec![g[0].clone(), g[1].clone(), format!("{} + {}", g[2], g[3]), g[5].clone(), g[2].clone(), g[4].clone()];
    let f = fiber_cone(ideal(&fp, &order).gens()).map_err(|e| e.to_string())?;
    let two: Vec<u32> = f.relations.gens().iter().filter_map(Polynomial::degree).collect();
    ensure(two == [2, 2], || format!("C(1,2,3,10): relation degrees {two:?}"))?;
    let first = p(&f.ring, "u5^2 - u1*u4 + u2*u6 - u3*u5");
    ensure(f.relations.contains(&first).map_err(|e| e.to_string())?, || "C(1,2,3,10): first quadric not in K".into())?;
    ensure(f.series == HilbertSeries::new(vec![1, 2, 1], 4), || format!("C(1,2,3,10): series {}", f.series))?;
    ensure(f.analytic_spread == 4, || format!("C(1,2,3,10): spread {}", f.analytic_spread))?;
    // The stated pair is exactly K once the fifth fiber variable maps to g4.
    let mut swapped = order.clone();
    swapped[4] = g[3].clone();
    let f = fiber_cone(ideal(&fp, &swapped).gens()).map_err(|e| e.to_string())?;
    let stated = ["u5^2 - u1*u4 + u2*u6 - u3*u5", "u6^2 - u5*u4"];
    ensure(f.relations_equal(&stated).map_err(|e| e.to_string())?, || format!("C(1,2,3,10): K = {}", f.relations))?;

    let g = gens_331(3);
    let f = fiber_cone(ideal(&ring, &g).gens()).map_err(|e| e.to_string())?;
    ensure(f.relations.is_zero(), || format!("C(1,2,3,9): K = {}", f.relations))?;
    let s = analytic_spread(&ideal(&ring, &g)).map_err(|e| e.to_string())?;
    ensure(s == 4 && f.analytic_spread == 4, || format!("C(1,2,3,9): spread {s}"))
}

fn criterion_6() -> Check {
    let ring = ring5();
    let a = 3;
    let g = gens_332(a);
    let q: Vec<String> = vec![g[0].clone(), g[1].clone(), format!("{} + {}", g[2], g[3]), g[5].clone()];
    let qp = ideal(&ring, &q).product(&ideal(&ring, &g)).map_err(|e| e.to_string())?;
    let listed = [
        "x2^4", "x1*x2^3", "x0*x2^3", "x1^2*x2^2", "x1^3*x2", "x1^4", "x2^2*x3^4", "x1*x2*x3^4", "x1^2*x3^4",
        "x2^3*x3^3", "x1*x2^2*x3^3", "x1^2*x2*x3^3", "x1^3*x3^3", "x0^2*x2^2*x3^3", "x3^8", "x2*x3^7", "x1*x3^7",
        "x0*x3^7", "x0*x2*x3^6",
    ];
    let expected = MonomialIdeal::new(5, listed.iter().map(|s| p(&ring, s).leading_monomial().unwrap().clone()));
    let lead = qp.initial_ideal(&MonomialOrder::Grevlex).map_err(|e| e.to_string())?;
    ensure(lead == expected, || format!("initial ideal {}", lead.display(ring.vars())))?;
    let gs: Vec<Polynomial> = g.iter().map(|s| p(&ring, s)).collect();
    let diff = &(&gs[1] * &gs[5]) - &(&gs[2] * &gs[4]);
    ensure(!qp.contains(&diff).map_err(|e| e.to_string())?, || "g2 g6 - g3 g5 lies in the product".into())
}

fn criterion_7() -> Check {
    let ring = ring5();
    for a in [3u32, 4, 5] {
        let quotients = [
            (format!("x0, x4, x1^2, x1*x2, x2^2, x3^{a}"), 3 * a),
            (format!("x0, x4, x1^2, x1*x2, x2^2, x3^{}, x1*x3^{a}, x2*x3^{a}", a + 1), 3 * a + 1),
            (format!("x0, x4, x1^2, x1*x2, x2^2, x3^{}, x2*x3^{a}", a + 1), 3 * a + 2),
        ];
        for (gens, expected) in quotients {
            let list: Vec<String> = gens.split(", ").map(String::from).collect();
            let len = length_of_quotient(&ideal(&ring, &list)).map_err(|e| e.to_string())?;
            ensure(len == Length::Finite(expected as u64), || format!("a={a}: length {len}, expected {expected}"))?;
        }
    }
    Ok(())
}

fn criterion_8() -> Check {
    for deg in [[1, 2, 3], [1, 3, 4], [2, 3, 5], [1, 2, 5]] {
        let spec = CurveSpec::new(deg.to_vec()).map_err(|e| e.to_string())?;
        let i = curve_ideal(&spec, Field::Rationals).map_err(|e| e.to_string())?;
        let mu = minimal_generator_count(&i).map_err(|e| e.to_string())? as i64;
        let f = fiber_cone(i.gens()).map_err(|e| e.to_string())?;
        for t in 1..=3u32 {
            let sat = is_saturated_power(&i, t, 50).map_err(|e| e.to_string())?;
            ensure(sat, || format!("{deg:?}: I^{t} not saturated"))?;
            let ti = t as i64;
            let expected = (mu - 2) * c(ti + 2, 2) - (mu - 3) * (ti + 1);
            let got = mu_power(&i, t).map_err(|e| e.to_string())?;
            ensure(got as i64 == expected, || format!("{deg:?}: mu(I^{t}) = {got}, expected {expected}"))?;
            ensure(f.series.coefficient(t) == got, || {
                format!("{deg:?}: fiber coefficient {} vs mu(I^{t}) = {got}", f.series.coefficient(t))
            })?;
        }
    }
    Ok(())
}

fn criterion_9() -> Check {
    for a in [3u32, 4] {
        let ring = ring5();
        let m = |s: String| p(&ring, &s);
        let g: Vec<Polynomial> = gens_332(a).iter().map(|s| p(&ring, s)).collect();
        let (g1, g2, g3, g4, g5, g6) = (&g[0], &g[1], &g[2], &g[3], &g[4], &g[5]);
        let g34 = g3 + g4;
        let rhs4 = &(&(g1 * g6) - &(g2 * g5)) + &(g3 * &g34);
        ensure(g3.pow(2) == rhs4, || format!("a={a}: g3^2 identity fails"))?;
        let u = m(format!("x0^{}*x3^{}*x4", a - 2, a - 1));
        let v = m(format!("x3^{}", a - 1));
        let w = m(format!("x0^{}*x4", a - 2));
        let one = Polynomial::one(&ring);
        let parts = [
            -&(&(&u * g1) * &(g4 + g3)),
            &(&(&u + &v) * g1) * g4,
            &u * &g2.pow(2),
            -&(&(&w * &g34) * g6),
            &(&(&w + &one) * g4) * g6,
        ];
        let rhs5 = parts.iter().fold(Polynomial::zero(&ring), |acc, t| &acc + t);
        ensure(g5.pow(2) == rhs5, || format!("a={a}: g5^2 identity fails, difference {}", &g5.pow(2) - &rhs5))?;

        let h: Vec<Polynomial> = gens_333(a).iter().map(|s| p(&ring, s)).collect();
        let (h1, h2, h3, h4, h5) = (&h[0], &h[1], &h[2], &h[3], &h[4]);
        let parts = [
            &m(format!("x0^{}*x3^{}*x4", a - 2, a - 1)) * &h2.pow(3),
            -&(&m(format!("x0^{}*x1*x3^{}*x4", a - 3, a - 1)) * &(&h2.pow(2) * h3)),
            &m(format!("x0^{}*x2*x3^{}*x4", a - 3, a - 1)) * &(h2 * &h3.pow(2)),
            &v * &(&h1.pow(2) * h4),
            -&(&w * &(&h3.pow(2) * h5)),
            -&(&(&v * &Polynomial::from_i64(&ring, 2)) * &(&(h1 * h4) * h5)),
            &v * &(h4 * &h5.pow(2)),
            -&(h3 * &h4.pow(2)),
            &(h2 * h4) * h5,
            -&(h1 * &h5.pow(2)),
            h5.pow(3),
        ];
        let total = parts.iter().fold(Polynomial::zero(&ring), |acc, t| &acc + t);
        ensure(total.is_zero(), || format!("a={a}: cubic identity leaves {total}"))?;
    }
    Ok(())
}

fn criterion_10() -> Check {
    for k in 1..=6u32 {
        let full = upoly_mul(&[1, 2, 1], &upoly_pow(&vec![1; k as usize], 4));
        let coeff = full.get((4 * k - 2) as usize).copied().unwrap_or(0);
        ensure(coeff == 1, || format!("k={k}: coefficient {coeff}"))?;
    }
    Ok(())
}

const PRIME: u64 = 32003;

/// A random homogeneous ideal as raw data: per generator, a degree and a list
/// of `(coefficient, exponents)`.
type RawIdeal = Vec<(u32, Vec<(u64, Vec<u32>)>)>;

fn monomials(n: usize, d: u32) -> Vec<Vec<u32>> {
    if n == 1 {
        return vec![vec![d]];
    }
    (0..=d)
        .rev()
        .flat_map(|e| {
            monomials(n - 1, d - e).into_iter().map(move |mut rest| {
                rest.insert(0, e);
                rest
            })
        })
        .collect()
}

fn random_ideal(rng: &mut ChaCha8Rng) -> (usize, RawIdeal) {
    let n = rng.gen_range(2..=4);
    let count = rng.gen_range(1..=3);
    let raw = (0..count)
        .map(|_| {
            let d = rng.gen_range(1..=3);
            let all = monomials(n, d);
            let terms = (0..rng.gen_range(1..=3))
                .map(|_| (rng.gen_range(1..PRIME), all[rng.gen_range(0..all.len())].clone()))
                .collect();
            (d, terms)
        })
        .collect();
    (n, raw)
}

fn to_string(raw_terms: &[(u64, Vec<u32>)]) -> String {
    raw_terms
        .iter()
        .map(|(c, e)| {
            let mono: Vec<String> = e.iter().enumerate().map(|(i, x)| format!("x{i}^{x}")).collect();
            format!("{c}*{}", mono.join("*"))
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

fn pow_mod(mut b: u64, mut e: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % PRIME;
        }
        b = b * b % PRIME;
        e >>= 1;
    }
    r
}

fn rank_mod_p(mut rows: Vec<Vec<u64>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else { continue };
        rows.swap(rank, pivot);
        let inv = pow_mod(rows[rank][col], PRIME - 2);
        for x in rows[rank].iter_mut() {
            *x = *x * inv % PRIME;
        }
        for r in 0..rows.len() {
            if r != rank && rows[r][col] != 0 {
                let f = rows[r][col];
                let pivot = rows[rank].clone();
                for (x, p) in rows[r].iter_mut().zip(&pivot) {
                    *x = (*x + PRIME - f * p % PRIME) % PRIME;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// `dim (R/I)_d` by spanning `I_d` with monomial multiples of the generators.
fn brute_force_hf(n: usize, raw: &RawIdeal, d: u32) -> u64 {
    let basis = monomials(n, d);
    let index = |e: &[u32]| basis.iter().position(|b| b == e).expect("monomial of degree d");
    let mut rows = Vec::new();
    for (gd, terms) in raw {
        if *gd > d {
            continue;
        }
        for m in monomials(n, d - gd) {
            let mut row = vec![0u64; basis.len()];
            for (c, e) in terms {
                let prod: Vec<u32> = e.iter().zip(&m).map(|(x, y)| x + y).collect();
                let k = index(&prod);
                row[k] = (row[k] + c) % PRIME;
            }
            rows.push(row);
        }
    }
    (basis.len() - rank_mod_p(rows)) as u64
}

fn criterion_11() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let field = Field::Prime(PRIME as u32);
    for case in 0..50 {
        let (n, raw) = random_ideal(&mut rng);
        let ring = Ring::standard(n, field);
        let gens: Vec<Polynomial> = raw.iter().map(|(_, t)| p(&ring, &to_string(t))).collect();
        let nonzero: Vec<Polynomial> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
        let i = Ideal::new(&ring, nonzero.clone()).map_err(|e| e.to_string())?;
        for d in 0..=6 {
            let engine = hilbert_function(&i, d).map_err(|e| e.to_string())?;
            let oracle = brute_force_hf(n, &raw, d);
            ensure(engine == oracle, || format!("case {case}: HF({d}) = {engine}, rank oracle {oracle}"))?;
        }

        let gb = buchberger(&ring, &nonzero).map_err(|e| e.to_string())?;
        ensure(gb.verify_s_pairs() && gb.is_reduced(), || format!("case {case}: basis fails its certificate"))?;
        let again = buchberger(&ring, gb.polys()).map_err(|e| e.to_string())?;
        ensure(again.polys() == gb.polys(), || format!("case {case}: basis is not idempotent"))?;

        let (_, other) = random_ideal(&mut rng);
        let other: Vec<Polynomial> = other
            .iter()
            .map(|(_, t)| {
                let t: Vec<(u64, Vec<u32>)> =
                    t.iter().map(|(c, e)| (*c, e.iter().copied().chain(std::iter::repeat(0)).take(n).collect())).collect();
                p(&ring, &to_string(&t))
            })
            .filter(|g| !g.is_zero())
            .collect();
        let j = Ideal::new(&ring, other).map_err(|e| e.to_string())?;
        let err = |e: blowup_core::Error| e.to_string();
        let meet = i.intersection(&j).map_err(err)?;
        let prod = i.product(&j).map_err(err)?;
        ensure(
            i.contains_ideal(&meet).map_err(err)? && j.contains_ideal(&meet).map_err(err)? && meet.contains_ideal(&prod).map_err(err)?,
            || format!("case {case}: I J ⊆ I ∩ J ⊆ I, J fails"),
        )?;
        let colon = i.colon(&j).map_err(err)?;
        ensure(
            colon.contains_ideal(&i).map_err(err)? && i.contains_ideal(&colon.product(&j).map_err(err)?).map_err(err)?,
            || format!("case {case}: I ⊆ I:J and (I:J) J ⊆ I fails"),
        )?;
        let sat = i.saturation(&j, 50).map_err(err)?;
        let sat_again = sat.saturation(&j, 50).map_err(err)?;
        ensure(
            sat.contains_ideal(&colon).map_err(err)? && sat_again.equals(&sat).map_err(err)?,
            || format!("case {case}: saturation is not idempotent or misses I:J"),
        )?;
    }
    Ok(())
}

fn main() {
    let criteria: [Criterion; 11] = [
        ("curve ideals equal the listed generators", criterion_1),
        ("d-sequence and linear type", criterion_2),
        ("mu of powers", criterion_3),
        ("reduction numbers with strict failure at n = 1", criterion_4),
        ("fiber cones, series and analytic spread", criterion_5),
        ("initial ideal of the product and non-membership", criterion_6),
        ("lengths 3a, 3a+1, 3a+2", criterion_7),
        ("curves in P^3: saturation and mu of powers", criterion_8),
        ("polynomial identities among generators", criterion_9),
        ("series coefficient identity", criterion_10),
        ("property suites on 50 random ideals", criterion_11),
    ];
    let outcomes: Vec<(usize, &str, Check, u128)> = std::thread::scope(|s| {
        let handles: Vec<_> = criteria
            .iter()
            .enumerate()
            .map(|(k, (name, f))| {
                s.spawn(move || {
                    let start = Instant::now();
                    let out = f();
                    (k + 1, *name, out, start.elapsed().as_millis())
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("criterion panicked")).collect()
    });
    let mut failed = 0;
    for (k, name, out, ms) in outcomes {
        match out {
            Ok(()) => println!("criterion {k:2}: PASS  {name}  [exact, {ms} ms]"),
            Err(why) => {
                failed += 1;
                println!("criterion {k:2}: FAIL  {name}  [exact, {ms} ms]: {why}");
            }
        }
    }
    println!("acceptance: {} of 11 criteria pass", 11 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
