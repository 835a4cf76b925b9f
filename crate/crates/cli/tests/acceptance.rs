//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any
//! failure. Criteria 1-4 and 8 drive the `autfield` binary; 5-7 call the
//! library directly. Oracles are computed here, independently of the
//! routes under test.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::Command;
use std::time::{Duration, Instant};

use autfield::certificate::{validate, DistinctnessRecord, PairDistinctnessRecord, RealizationCertificate, S3Record};
use autfield::exact::{parse_qpoly, qpoly, rat, render_qpoly, Field, Poly, PolyRing, QPoly, Rational, RationalField};
use autfield::factor::factor_over_q;
use autfield::family::{build_member, certify_distinct, certify_s3, FamilyError};
use autfield::groupspec::parse_permutation;
use autfield::numfield::{automorphisms, expand, factor_over_nf, fixed_field, NfElem, NumberField};
use autfield::perm::{aut_group_via_normalizer, closure, PermGroup, Permutation};
use autfield::pipeline::realize_sn;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn realize(args: &[&str], out: &Path, limit: Duration) -> Result<(RealizationCertificate, Duration), String> {
    let start = Instant::now();
    let run = Command::new(env!("CARGO_BIN_EXE_autfield"))
        .arg("realize")
        .args(args)
        .arg("--out")
        .arg(out)
        .output()
        .map_err(|e| format!("spawn: {e}"))?;
    let elapsed = start.elapsed();
    ensure(run.status.success(), || {
        format!("realize {args:?} exited with {}: {}", run.status, String::from_utf8_lossy(&run.stderr).trim())
    })?;
    ensure(elapsed < limit, || format!("took {elapsed:?}, limit {limit:?}"))?;
    let text = fs::read_to_string(out).map_err(|e| e.to_string())?;
    let cert = RealizationCertificate::from_json(&text).map_err(|e| e.to_string())?;
    Ok((cert, elapsed))
}

fn validator_passes(cert: &RealizationCertificate, deep: bool) -> Result<(), String> {
    let rep = validate(cert, deep).map_err(|e| e.to_string())?;
    let first = rep.failures().next().map(|c| format!("validator: {} failed: {}", c.name, c.detail));
    first.map_or(Ok(()), Err)
}

/// Re-checks every witness against compositions of the listed permutations.
fn witness_oracle(cert: &RealizationCertificate) -> Result<(), String> {
    let n = cert.group.spec.n;
    let elems: Vec<Permutation> =
        cert.group.elements.iter().map(|s| parse_permutation(n, s)).collect::<Result<_, _>>().map_err(|e| e.to_string())?;
    let index = |p: &Permutation| elems.iter().position(|e| e == p);
    for f in &cert.fields {
        let w = &f.witness;
        let mut seen = w.clone();
        seen.sort_unstable();
        ensure(seen == (0..elems.len()).collect::<Vec<_>>(), || format!("t0 = {}: witness not a bijection", f.t0))?;
        for (a, pa) in elems.iter().enumerate() {
            for (b, pb) in elems.iter().enumerate() {
                let ab = index(&pa.compose(pb)).ok_or("group not closed")?;
                ensure(f.table[w[a]][w[b]] == w[ab], || format!("t0 = {}: witness fails at ({pa}, {pb})", f.t0))?;
            }
        }
    }
    Ok(())
}

fn is_rational_square(q: &Rational) -> bool {
    if *q < rat(0) {
        return false;
    }
    let (n, d) = (q.numer(), q.denom());
    let (sn, sd) = (n.sqrt(), d.sqrt());
    &(&sn * &sn) == n && &(&sd * &sd) == d
}

/// Integers `t`, in enumeration order, with `X³ + tX + t` squarefree and
/// irreducible: discriminant `−4t³ − 27t²` nonzero and no integer root.
fn good_integers(h: i64) -> Vec<i64> {
    let mut ts = vec![0];
    for i in 1..=h {
        ts.extend([i, -i]);
    }
    ts.into_iter()
        .filter(|&t| -4 * t * t * t - 27 * t * t != 0)
        .filter(|&t| (-t.abs()..=t.abs()).all(|r| r * r * r + t * r + t != 0))
        .collect()
}

fn criterion_1(dir: &Path) -> Outcome {
    let (cert, dt) = realize(&["--n", "1", "--gens", "()", "--count", "3", "--t-max", "10"], &dir.join("c1.json"), Duration::from_secs(10))?;
    let expected: Vec<String> = good_integers(10).iter().take(3).map(|t| t.to_string()).collect();
    ensure(cert.accepted_t0() == expected, || format!("accepted {:?}, oracle {expected:?}", cert.accepted_t0()))?;
    for f in &cert.fields {
        let t = f.t0.clone();
        let cubic = vec![t.clone(), t, "0".into(), "1".into()];
        ensure(f.defining_polynomial == cubic, || format!("t0 = {}: {:?}", f.t0, f.defining_polynomial))?;
        ensure(f.automorphisms.len() == 1 && f.table == vec![vec![0]], || format!("t0 = {}: |Aut| ≠ 1", f.t0))?;
    }
    let t0 = &cert.search.transcript[0];
    ensure(t0.t0 == "0" && t0.reason.as_deref().is_some_and(|r| r.starts_with("bad set")), || "t0 = 0 not rejected as bad".into())?;
    ensure(cert.bad_set.rational == ["-27/4", "0"], || format!("bad set {:?}", cert.bad_set.rational))?;
    ensure(cert.pairs.len() == 3, || format!("{} pairs", cert.pairs.len()))?;
    for p in &cert.pairs {
        let exact = matches!(p.distinctness, PairDistinctnessRecord::Exact { forward_roots: 0, backward_roots: 0 });
        ensure(exact, || format!("pair ({}, {}) not exact", p.i, p.j))?;
    }
    witness_oracle(&cert)?;
    validator_passes(&cert, true)?;
    Ok(format!("t0 = {}, {dt:.2?}", expected.join(", ")))
}

fn criterion_2(dir: &Path) -> Outcome {
    let (cert, dt) = realize(&["--n", "2", "--gens", "(1 2)", "--count", "2"], &dir.join("c2.json"), Duration::from_secs(120))?;
    ensure(cert.fields.len() == 2, || format!("{} fields", cert.fields.len()))?;
    for f in &cert.fields {
        ensure(f.degree == 6 && f.automorphisms.len() == 2, || format!("t0 = {}: degree {}, |Aut| {}", f.t0, f.degree, f.automorphisms.len()))?;
        // second route: all roots of the defining polynomial in its own field
        let k = NumberField::new(parse_qpoly(&f.defining_polynomial).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
        let direct = automorphisms(&k).map_err(|e| e.to_string())?;
        ensure(direct.order() == 2, || format!("t0 = {}: direct count {}", f.t0, direct.order()))?;
    }
    ensure(
        matches!(cert.pairs[..], [ref p] if matches!(p.distinctness, PairDistinctnessRecord::Exact { forward_roots: 0, backward_roots: 0 })),
        || "distinctness not exact".into(),
    )?;
    witness_oracle(&cert)?;
    validator_passes(&cert, false)?;
    Ok(format!("t0 = {}, {dt:.2?}", cert.accepted_t0().join(", ")))
}

fn criterion_3(dir: &Path) -> Outcome {
    let (cert, dt) = realize(&["--n", "3", "--gens", "(1 2 3)", "--count", "1"], &dir.join("c3.json"), Duration::from_secs(600))?;
    let m = parse_qpoly(&cert.parameter.minpoly).map_err(|e| e.to_string())?;
    ensure(m.deg0() == 2, || format!("y has degree {}", m.deg0()))?;
    let c = m.coeffs();
    let disc = &c[1] * &c[1] - rat(4) * &c[0] * &c[2];
    ensure(is_rational_square(&(disc.clone() / rat(-23))), || format!("discriminant {disc} not in −23·squares"))?;
    let f = &cert.fields[0];
    ensure(f.degree == 18 && f.automorphisms.len() == 3, || format!("degree {}, |Aut| {}", f.degree, f.automorphisms.len()))?;
    let lifted: usize = f.lifts.iter().map(|l| l.roots).sum();
    ensure(f.lifts.len() == 6 && lifted == 3, || "tower counts off".into())?;
    witness_oracle(&cert)?;
    validator_passes(&cert, false)?;
    Ok(format!("t0 = {}, disc(y) = {disc}, {dt:.2?}", f.t0))
}

fn criterion_4(dir: &Path) -> Outcome {
    let (cert, dt) = realize(&["--named", "S3", "--count", "1"], &dir.join("c4.json"), Duration::from_secs(600))?;
    let f = &cert.fields[0];
    ensure(f.degree == 18 && f.automorphisms.len() == 6, || format!("degree {}, |Aut| {}", f.degree, f.automorphisms.len()))?;
    // the only nonabelian group of order 6
    let t = &f.table;
    ensure((0..6).any(|a| (0..6).any(|b| t[a][b] != t[b][a])), || "table is abelian".into())?;
    witness_oracle(&cert)?;
    validator_passes(&cert, false)?;
    Ok(format!("t0 = {}, {dt:.2?}", f.t0))
}

fn criterion_5() -> Outcome {
    let start = Instant::now();
    let l = realize_sn(3, 24).map_err(|e| e.to_string())?;
    let s3 = PermGroup::symmetric(3).map_err(|e| e.to_string())?;
    let p = |c: &[usize]| Permutation::from_cycles(3, &[c.to_vec()]).unwrap();
    let classes = [
        ("1", PermGroup::trivial(3), 6),
        ("<(1 2)>", closure(3, &[p(&[1, 2])]).unwrap(), 1),
        ("A3", closure(3, &[p(&[1, 2, 3])]).unwrap(), 2),
        ("S3", s3.clone(), 1),
    ];
    let mut got = Vec::new();
    for (name, h, expected) in classes {
        let quotient = aut_group_via_normalizer(&s3, &h).map_err(|e| e.to_string())?.order();
        let ff = fixed_field(&l, &h).map_err(|e| e.to_string())?;
        let field_side = if ff.minpoly.deg0() == 1 {
            1
        } else {
            let k = NumberField::new(ff.minpoly.clone()).map_err(|e| e.to_string())?;
            automorphisms(&k).map_err(|e| e.to_string())?.order()
        };
        ensure(quotient == expected && field_side == expected, || {
            format!("{name}: field {field_side}, quotient {quotient}, expected {expected}")
        })?;
        got.push(format!("{name} → {field_side}"));
    }
    Ok(format!("{}, {:.2?}", got.join(", "), start.elapsed()))
}

fn random_elem(rng: &mut ChaCha8Rng, k: &NumberField) -> NfElem {
    let coords = (0..k.degree()).map(|_| Rational::new(rng.gen_range(-6i64..=6).into(), rng.gen_range(1i64..=3).into())).collect();
    k.elem(Poly::new(coords))
}

fn test_fields() -> Result<Vec<NumberField>, String> {
    let mut out = vec![NumberField::rationals()];
    for m in [qpoly(&[23, 0, 1]), qpoly(&[-5, 0, 1]), qpoly(&[-2, 0, 0, 1]), qpoly(&[-1, -1, 0, 1])] {
        out.push(NumberField::new(m).map_err(|e| e.to_string())?);
    }
    Ok(out)
}

fn criterion_6() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let fields = test_fields()?;
    for i in 0..20 {
        let k = &fields[i % fields.len()];
        let y = random_elem(&mut rng, k);
        let cert = certify_s3(&build_member(k, &y)).map_err(|e| format!("s3 #{i}: {e}"))?;
        ensure(cert.class_degree() % 2 == 1, || format!("s3 #{i}: even square class"))?;
        let rec = S3Record::from_json(&S3Record::new(k, &cert).to_json()).map_err(|e| e.to_string())?;
        rec.replay().map_err(|e| format!("s3 #{i} replay: {e}"))?;
    }
    for i in 0..10 {
        let k = &fields[i % fields.len()];
        let y1 = random_elem(&mut rng, k);
        let mut y2 = random_elem(&mut rng, k);
        while y2 == y1 {
            y2 = random_elem(&mut rng, k);
        }
        let cert = certify_distinct(k, &y1, &y2).map_err(|e| format!("pair #{i}: {e}"))?;
        ensure(cert.is_distinct(), || format!("pair #{i}: not distinct"))?;
        let rec = DistinctnessRecord::from_json(&DistinctnessRecord::new(k, &cert).to_json()).map_err(|e| e.to_string())?;
        rec.replay().map_err(|e| format!("pair #{i} replay: {e}"))?;
        ensure(matches!(certify_distinct(k, &y1, &y1), Err(FamilyError::EqualParameters)), || {
            format!("pair #{i}: y₁ = y₂ accepted")
        })?;
    }
    let dt = start.elapsed();
    ensure(dt < Duration::from_secs(60), || format!("took {dt:?}"))?;
    Ok(format!("20 S3 + 10 distinctness certificates replayed, {dt:.2?}"))
}

/// Monic irreducible over ℚ by construction: linear, quadratics with
/// nonsquare discriminant, Eisenstein at 2.
fn random_irreducible(rng: &mut ChaCha8Rng) -> QPoly {
    match rng.gen_range(0..3) {
        0 => Poly::new(vec![Rational::new(rng.gen_range(-9i64..=9).into(), rng.gen_range(1i64..=4).into()), rat(1)]),
        1 => loop {
            let (b, c) = (rng.gen_range(-7i64..=7), rng.gen_range(-7i64..=7));
            let d = b * b - 4 * c;
            let s = (d.max(0) as f64).sqrt().round() as i64;
            if d < 0 || s * s != d {
                break qpoly(&[c, b, 1]);
            }
        },
        _ => {
            let deg = rng.gen_range(3..=5);
            let mut c: Vec<i64> = (0..deg).map(|_| 2 * rng.gen_range(-3i64..=3)).collect();
            c[0] = 2 * (2 * rng.gen_range(-2i64..=2) + 1);
            c.push(1);
            qpoly(&c)
        }
    }
}

fn criterion_7() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let r = PolyRing::new(RationalField);
    for i in 0..200 {
        let unit = Rational::new(rng.gen_range(1i64..=9).into(), rng.gen_range(1i64..=5).into());
        let mut f = Poly::constant(unit.clone());
        let mut expected: BTreeMap<Vec<String>, usize> = BTreeMap::new();
        for _ in 0..rng.gen_range(1..=4) {
            let g = random_irreducible(&mut rng);
            let e = rng.gen_range(1..=2);
            f = r.mul(&f, &r.pow(&g, e as u32));
            *expected.entry(render_qpoly(&g)).or_default() += e;
        }
        let fac = factor_over_q(&f).map_err(|e| format!("round trip #{i}: {e}"))?;
        let got: BTreeMap<Vec<String>, usize> = fac.factors.iter().map(|(g, e)| (render_qpoly(g), *e)).collect();
        ensure(got == expected && fac.unit == unit, || format!("round trip #{i}: {got:?} vs {expected:?}"))?;
        ensure(fac.expand() == f, || format!("round trip #{i}: product differs"))?;
    }
    let mut fields = test_fields()?;
    fields.push(NumberField::new(qpoly(&[-2, 0, 0, 0, 1])).map_err(|e| e.to_string())?);
    fields.push(realize_sn(3, 24).map_err(|e| e.to_string())?.field);
    for i in 0..20 {
        let k = &fields[i % fields.len()];
        let ring = k.ring();
        let roots: Vec<NfElem> = (0..rng.gen_range(1..=2)).map(|_| random_elem(&mut rng, k)).collect();
        let mut f = Poly::new(vec![k.from_int(rng.gen_range(1..=5)), k.zero(), k.one()]);
        for a in &roots {
            f = ring.mul(&f, &Poly::new(vec![k.neg(a), k.one()]));
        }
        let fac = factor_over_nf(k, &f).map_err(|e| format!("trager #{i}: {e}"))?;
        ensure(expand(k, &fac) == f, || format!("trager #{i}: product differs"))?;
        for a in &roots {
            let lin = Poly::new(vec![k.neg(a), k.one()]);
            ensure(fac.factors.iter().any(|(g, _)| *g == lin), || format!("trager #{i}: planted root missing"))?;
        }
    }
    let dt = start.elapsed();
    ensure(dt < Duration::from_secs(120), || format!("took {dt:?}"))?;
    Ok(format!("200 ℚ round trips, 20 number-field factorizations, {dt:.2?}"))
}

const RUN_FILES: [&str; 4] = ["c1.json", "c2.json", "c3.json", "c4.json"];

fn criterion_8(first: &Path, second: &Path) -> Outcome {
    for (args, name) in [
        (&["--n", "1", "--gens", "()", "--count", "3", "--t-max", "10"][..], RUN_FILES[0]),
        (&["--n", "2", "--gens", "(1 2)", "--count", "2"][..], RUN_FILES[1]),
        (&["--n", "3", "--gens", "(1 2 3)", "--count", "1"][..], RUN_FILES[2]),
        (&["--named", "S3", "--count", "1"][..], RUN_FILES[3]),
    ] {
        realize(args, &second.join(name), Duration::from_secs(600))?;
    }
    let mut bytes = 0;
    for name in RUN_FILES {
        let a = fs::read(first.join(name)).map_err(|e| format!("{name}: {e}"))?;
        let b = fs::read(second.join(name)).map_err(|e| format!("{name}: {e}"))?;
        ensure(a == b, || format!("{name} differs between runs"))?;
        bytes += a.len();
    }
    Ok(format!("4 certificates, {bytes} bytes identical"))
}

fn main() {
    let tmp = tempfile::tempdir().expect("temp dir");
    let first: PathBuf = tmp.path().join("first");
    let second: PathBuf = tmp.path().join("second");
    fs::create_dir_all(&first).unwrap();
    fs::create_dir_all(&second).unwrap();

    let criteria: Vec<(&str, Box<dyn Fn() -> Outcome>)> = vec![
        ("1 trivial group, n = 1", Box::new(|| criterion_1(&first))),
        ("2 C2 as S2", Box::new(|| criterion_2(&first))),
        ("3 C3 in S3", Box::new(|| criterion_3(&first))),
        ("4 S3", Box::new(|| criterion_4(&first))),
        ("5 Aut of fixed fields vs N(H)/H", Box::new(criterion_5)),
        ("6 cubic family certificates", Box::new(criterion_6)),
        ("7 factorization oracles", Box::new(criterion_7)),
        ("8 determinism", Box::new(|| criterion_8(&first, &second))),
    ];
    let mut failed = 0;
    for (name, f) in &criteria {
        match f() {
            Ok(detail) => println!("PASS  criterion {name}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL  criterion {name}: {why}");
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
