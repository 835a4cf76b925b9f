use std::collections::HashSet;
use std::fmt;
use std::path::Path;

use super::family::Decoder;
use super::{
    mode_name, read_certificate, CertificateError, FieldRecord, PairDistinctnessRecord, RealizationCertificate,
    FORMAT, GUARANTEED_CITE,
};
use crate::exact::{
    parse_qbipoly, parse_rational, rat, BiPoly, BiRing, Field, FieldElem, Poly, PolyRing, QPoly, Rational,
    RationalField,
};
use crate::factor;
use crate::groupspec::parse_permutation;
use crate::numfield::{AutomorphismTable, NfElem, NumberField};
use crate::perm::{AbstractGroup, PermGroup, Permutation};
use crate::pipeline::{candidates, run, DistinctMode, RunOptions, AUTO_EXACT_DEGREE};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub checks: Vec<Check>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    fn record(&mut self, name: impl Into<String>, result: Result<(), String>) {
        let (passed, detail) = match result {
            Ok(()) => (true, String::new()),
            Err(e) => (false, e),
        };
        self.checks.push(Check { name: name.into(), passed, detail });
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            if c.passed {
                writeln!(f, "PASS  {}", c.name)?;
            } else {
                writeln!(f, "FAIL  {}: {}", c.name, c.detail)?;
            }
        }
        Ok(())
    }
}

pub fn validate_certificate(path: &Path, deep: bool) -> Result<ValidationReport, CertificateError> {
    validate(&read_certificate(path)?, deep)
}

/// Typed view of a certificate.
struct Decoded {
    group: PermGroup,
    l: NumberField,
    source: QPoly,
    roots: Vec<NfElem>,
    galois: Vec<(Permutation, NfElem)>,
    preimage: Vec<Permutation>,
    y: NfElem,
    y_minpoly: QPoly,
    q: BiPoly<Rational>,
    irreducible_at: Rational,
    discriminant: QPoly,
    bad_factors: Vec<(QPoly, usize)>,
    bad_rational: Vec<Rational>,
    transcript: Vec<Rational>,
    mode: DistinctMode,
    fields: Vec<DecodedField>,
}

struct DecodedField {
    t0: Rational,
    f: QPoly,
    e: NumberField,
    theta: NfElem,
    x: NfElem,
    maps: Vec<NfElem>,
    sigmas: Vec<Permutation>,
}

fn perm(d: &mut Decoder, n: usize, what: &str, s: &str) -> Permutation {
    parse_permutation(n, s).unwrap_or_else(|e| {
        d.errors.push(format!("{what}: {e}"));
        Permutation::identity(n)
    })
}

fn rational(d: &mut Decoder, what: &str, s: &str) -> Rational {
    parse_rational(s).unwrap_or_else(|e| {
        d.errors.push(format!("{what}: {e}"));
        rat(0)
    })
}

/// A field from a defining polynomial; irreducibility is a separate check.
fn field(d: &mut Decoder, what: &str, f: &QPoly) -> NumberField {
    if f.deg0() == 0 || f.lc() != Some(&rat(1)) {
        d.errors.push(format!("{what}: not a monic polynomial of positive degree"));
        return NumberField::rationals();
    }
    NumberField::trusted(f.clone())
}

fn decode(c: &RealizationCertificate) -> Result<Decoded, CertificateError> {
    let mut d = Decoder::new();
    let group = c.group.spec.group().map_err(|e| CertificateError::Schema(vec![format!("group.spec: {e}")]))?;
    let n = c.group.spec.n;
    let sf = &c.splitting_field;
    let source = d.q("splitting_field.polynomial", &sf.polynomial);
    let modulus = d.q("splitting_field.modulus", &sf.modulus);
    let l = field(&mut d, "splitting_field.modulus", &modulus);
    let roots = sf.roots.iter().map(|r| d.elem(&l, "splitting_field.roots", r)).collect();
    let galois = sf
        .galois
        .iter()
        .map(|g| (perm(&mut d, n, "splitting_field.galois", &g.sigma), d.elem(&l, "splitting_field.galois", &g.image)))
        .collect();
    let p = &c.parameter;
    let preimage = p.preimage.iter().map(|s| perm(&mut d, n, "parameter.preimage", s)).collect();
    let y = d.elem(&l, "parameter.y", &p.y);
    let y_minpoly = d.q("parameter.minpoly", &p.minpoly);
    let q = parse_qbipoly(&c.primitive_element.q).unwrap_or_else(|e| {
        d.errors.push(format!("primitive_element.q: {e}"));
        BiPoly::from_rows(Vec::new())
    });
    let irreducible_at = rational(&mut d, "primitive_element.irreducible_at", &c.primitive_element.irreducible_at);
    let b = &c.bad_set;
    let discriminant = d.q("bad_set.discriminant", &b.discriminant);
    let bad_factors = b.factors.iter().map(|f| (d.q("bad_set.factors", &f.poly), f.multiplicity)).collect();
    let bad_rational = b.rational.iter().map(|s| rational(&mut d, "bad_set.rational", s)).collect();
    let transcript = c.search.transcript.iter().map(|t| rational(&mut d, "search.transcript", &t.t0)).collect();
    let mode = match c.search.distinct_mode.as_str() {
        "exact" => DistinctMode::Exact,
        "auto" => DistinctMode::Auto,
        "assumed" => DistinctMode::Assumed,
        other => {
            d.errors.push(format!("search.distinct_mode: unknown mode {other:?}"));
            DistinctMode::Auto
        }
    };
    let mut fields = Vec::new();
    for (k, fr) in c.fields.iter().enumerate() {
        let what = format!("fields[{k}]");
        let t0 = rational(&mut d, &what, &fr.t0);
        let f = d.q(&what, &fr.defining_polynomial);
        let e = field(&mut d, &what, &f);
        let theta = d.elem(&e, &what, &fr.theta);
        let x = d.elem(&e, &what, &fr.x);
        let maps = fr.automorphisms.iter().map(|m| d.elem(&e, &what, m)).collect();
        let sigmas = fr.lifts.iter().map(|l| perm(&mut d, n, &what, &l.sigma)).collect();
        fields.push(DecodedField { t0, f, e, theta, x, maps, sigmas });
    }
    if c.fields.is_empty() {
        d.errors.push("fields: at least one accepted field is required".into());
    }
    d.finish()?;
    Ok(Decoded {
        group,
        l,
        source,
        roots,
        galois,
        preimage,
        y,
        y_minpoly,
        q,
        irreducible_at,
        discriminant,
        bad_factors,
        bad_rational,
        transcript,
        mode,
        fields,
    })
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn irreducible(f: &QPoly) -> Result<(), String> {
    match factor::is_irreducible_q(f) {
        Ok(true) => Ok(()),
        Ok(false) => Err("reducible over ℚ".into()),
        Err(e) => Err(e.to_string()),
    }
}

/// Runs the cheap checks, and with `deep` re-runs the pipeline and compares.
pub fn validate(c: &RealizationCertificate, deep: bool) -> Result<ValidationReport, CertificateError> {
    let dc = decode(c)?;
    let mut rep = ValidationReport::default();
    let n = c.group.spec.n;
    let order = dc.group.order();
    let n_fact: usize = (1..=n).product();

    rep.record("format", ensure(c.format == FORMAT, || format!("unknown format {:?}", c.format)));
    rep.record("group", check_group(c, &dc.group));
    rep.record("splitting field", check_splitting(c, &dc, n, n_fact));
    rep.record("parameter", check_parameter(c, &dc, n_fact));
    rep.record("primitive element", check_primitive(c, &dc));
    rep.record("bad set", check_bad_set(c, &dc));
    rep.record("s3", check_s3(c, &dc));
    rep.record("transcript", check_transcript(c, &dc));
    rep.record("distinctness", check_pairs(c, &dc));

    let g_abs = dc.group.to_abstract();
    for (k, (fr, df)) in c.fields.iter().zip(&dc.fields).enumerate() {
        let tag = format!("field {} (t0 = {})", k + 1, fr.t0);
        rep.record(format!("{tag}: defining polynomial"), check_defining(c, &dc, df));
        rep.record(format!("{tag}: irreducibility"), irreducible(&df.f));
        rep.record(format!("{tag}: embedding"), check_embedding(c, &dc, df));
        rep.record(format!("{tag}: automorphisms"), check_maps(df, order));
        rep.record(format!("{tag}: table matches maps"), check_table(fr, df));
        rep.record(
            format!("{tag}: group laws"),
            AbstractGroup::from_table(fr.table.clone(), vec![String::new(); fr.table.len()])
                .map(|_| ())
                .map_err(|e| e.to_string()),
        );
        rep.record(format!("{tag}: witness homomorphism"), check_witness(fr, &g_abs, &c.group.elements));
        rep.record(format!("{tag}: lifts"), check_lifts(fr, df, &dc, order));
    }

    if deep {
        deep_checks(c, &dc.group, &mut rep);
    }
    Ok(rep)
}

fn check_group(c: &RealizationCertificate, g: &PermGroup) -> Result<(), String> {
    let listed: Vec<String> = g.elements().iter().map(|p| p.to_string()).collect();
    ensure(c.group.order == g.order(), || format!("order {} recorded, {} generated", c.group.order, g.order()))?;
    ensure(listed == c.group.elements, || "element list differs from the generated group".into())
}

fn check_splitting(c: &RealizationCertificate, dc: &Decoded, n: usize, n_fact: usize) -> Result<(), String> {
    let sf = &c.splitting_field;
    let expected = if n == 1 {
        Poly::new(vec![rat(0), rat(1)])
    } else {
        let mut v = vec![rat(0); n + 1];
        v[0] = rat(-1);
        v[1] = rat(-1);
        v[n] = rat(1);
        Poly::new(v)
    };
    ensure(dc.source == expected, || "polynomial is not Xⁿ − X − 1".into())?;
    let l = &dc.l;
    ensure(sf.degree == l.degree() && l.degree() == n_fact, || format!("degree {} but n! = {n_fact}", l.degree()))?;
    if l.degree() > 1 {
        irreducible(l.modulus()).map_err(|e| format!("modulus: {e}"))?;
    }
    ensure(dc.roots.len() == n, || format!("{} roots listed", dc.roots.len()))?;
    let distinct: HashSet<&NfElem> = dc.roots.iter().collect();
    ensure(distinct.len() == n, || "roots repeat".into())?;
    for (i, r) in dc.roots.iter().enumerate() {
        ensure(l.eval_q(&dc.source, r).is_zero(), || format!("root {} is not a root", i + 1))?;
    }
    ensure(dc.galois.len() == n_fact, || format!("{} automorphisms, expected {n_fact}", dc.galois.len()))?;
    let perms: HashSet<&Permutation> = dc.galois.iter().map(|(p, _)| p).collect();
    let images: HashSet<&NfElem> = dc.galois.iter().map(|(_, i)| i).collect();
    ensure(perms.len() == n_fact && images.len() == n_fact, || "automorphisms repeat".into())?;
    for (p, img) in &dc.galois {
        ensure(l.eval_q(l.modulus(), img).is_zero(), || format!("{p}: image is not a conjugate"))?;
        let moved = l.substitute_all(&dc.roots, img);
        for (i, m) in moved.iter().enumerate() {
            ensure(*m == dc.roots[p.apply(i + 1) - 1], || format!("{p} does not act on root {} as recorded", i + 1))?;
        }
    }
    Ok(())
}

fn aut_image<'a>(dc: &'a Decoded, p: &Permutation) -> Option<&'a NfElem> {
    dc.galois.iter().find(|(s, _)| s == p).map(|(_, img)| img)
}

fn check_parameter(c: &RealizationCertificate, dc: &Decoded, n_fact: usize) -> Result<(), String> {
    let p = &c.parameter;
    ensure(dc.preimage == dc.group.elements(), || "preimage differs from the group".into())?;
    let l = &dc.l;
    for s in &dc.preimage {
        let img = aut_image(dc, s).ok_or_else(|| format!("{s} is not in the Galois group"))?;
        ensure(l.substitute(&dc.y, img) == dc.y, || format!("{s} moves y"))?;
    }
    let deg = dc.y_minpoly.deg0();
    ensure(deg * dc.group.order() == n_fact, || format!("minpoly degree {deg}, expected n!/|G|"))?;
    ensure(dc.y_minpoly.lc() == Some(&rat(1)), || "minpoly not monic".into())?;
    ensure(l.eval_q(&dc.y_minpoly, &dc.y).is_zero(), || "y is not a root of its minpoly".into())?;
    if deg > 1 {
        irreducible(&dc.y_minpoly).map_err(|e| format!("minpoly: {e}"))?;
    }
    match p.choice.as_str() {
        "canonical" => ensure(dc.y.is_zero() && deg == 1, || "canonical choice requires y = 0".into()),
        "orbit_sum" => ensure(p.orbit_power.is_some() && p.orbit_family.is_some(), || "orbit data missing".into()),
        other => Err(format!("unknown choice {other:?}")),
    }
}

fn check_primitive(c: &RealizationCertificate, dc: &Decoded) -> Result<(), String> {
    let pe = &c.primitive_element;
    let dx = dc.q.deg_x().unwrap_or(0);
    ensure(dx == 3 * dc.l.degree() && pe.degree_x == dx, || format!("deg_X q = {dx}, expected {}", 3 * dc.l.degree()))?;
    let bi = BiRing::new(RationalField);
    ensure(bi.x_coeff(&dc.q, dx) == Poly::constant(rat(1)), || "q is not monic in X".into())?;
    let s = bi.specialize_t(&dc.q, &dc.irreducible_at);
    ensure(factor::is_squarefree_q(&s), || "specialization is not squarefree".into())?;
    irreducible(&s).map_err(|e| format!("q({}, X): {e}", pe.irreducible_at))
}

fn check_bad_set(c: &RealizationCertificate, dc: &Decoded) -> Result<(), String> {
    let ring = PolyRing::new(RationalField);
    let disc = &dc.discriminant;
    ensure(!disc.is_zero(), || "discriminant is zero".into())?;
    for t in &dc.bad_rational {
        ensure(ring.eval(disc, t).is_zero(), || format!("{t} is not a root of the discriminant"))?;
    }
    let mut prod = ring.one();
    for (f, m) in &dc.bad_factors {
        ensure(ring.rem(disc, f).map(|r| r.is_zero()).unwrap_or(false), || "factor does not divide".into())?;
        prod = ring.mul(&prod, &ring.pow(f, *m as u32));
    }
    if c.bad_set.complete {
        ensure(ring.monic(&prod) == ring.monic(disc), || "factors do not multiply to the discriminant".into())?;
        let mut roots: Vec<Rational> = dc
            .bad_factors
            .iter()
            .filter(|(f, _)| f.deg0() == 1)
            .map(|(f, _)| -&f.coeffs()[0] / &f.coeffs()[1])
            .collect();
        roots.sort();
        ensure(roots == dc.bad_rational, || "rational points differ from the linear factors".into())?;
    }
    for df in &dc.fields {
        ensure(!ring.eval(disc, &df.t0).is_zero(), || format!("accepted t0 = {} is a bad point", df.t0))?;
    }
    Ok(())
}

fn check_s3(c: &RealizationCertificate, dc: &Decoded) -> Result<(), String> {
    let (k, cert) = c.s3.decode().map_err(|e| e.to_string())?;
    let expected_modulus =
        if dc.y_minpoly.deg0() == 1 { NumberField::rationals().modulus().clone() } else { dc.y_minpoly.clone() };
    ensure(*k.modulus() == expected_modulus, || "base field is not ℚ(y)".into())?;
    ensure(cert.y == k.generator(), || "certificate is not for y".into())?;
    c.s3.replay()
}

fn check_transcript(c: &RealizationCertificate, dc: &Decoded) -> Result<(), String> {
    let s = &c.search;
    let expected: Vec<Rational> = candidates(s.t_max).take(dc.transcript.len()).collect();
    ensure(expected == dc.transcript, || "candidates out of enumeration order".into())?;
    let accepted: Vec<&str> = s.transcript.iter().filter(|t| t.accepted).map(|t| t.t0.as_str()).collect();
    ensure(accepted == c.accepted_t0(), || "accepted candidates differ from the field list".into())?;
    ensure(accepted.len() == s.count, || format!("{} fields, {} requested", accepted.len(), s.count))?;
    ensure(s.transcript.last().is_some_and(|t| t.accepted), || "search continued past the last acceptance".into())?;
    for (t, r) in s.transcript.iter().zip(&dc.transcript) {
        ensure(t.accepted == t.reason.is_none(), || format!("t0 = {}: status and reason disagree", t.t0))?;
        let bad = dc.bad_rational.contains(r);
        let says_bad = t.reason.as_deref().is_some_and(|x| x.starts_with("bad set"));
        ensure(bad == says_bad, || format!("t0 = {}: bad-set membership misreported", t.t0))?;
    }
    Ok(())
}

fn check_pairs(c: &RealizationCertificate, dc: &Decoded) -> Result<(), String> {
    let exact = match dc.mode {
        DistinctMode::Exact => true,
        DistinctMode::Assumed => false,
        DistinctMode::Auto => dc.fields.first().map_or(0, |f| f.e.degree()) <= AUTO_EXACT_DEGREE,
    };
    ensure(exact == c.search.exact_distinctness, || {
        format!("mode {} implies exact = {exact}", mode_name(dc.mode))
    })?;
    let m = c.fields.len();
    let expected: Vec<(usize, usize)> = (0..m).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    let listed: Vec<(usize, usize)> = c.pairs.iter().map(|p| (p.i, p.j)).collect();
    ensure(expected == listed, || "pairs do not cover every two fields in order".into())?;
    for p in &c.pairs {
        let ok = match &p.distinctness {
            PairDistinctnessRecord::Exact { forward_roots, backward_roots } => {
                exact && *forward_roots == 0 && *backward_roots == 0
            }
            PairDistinctnessRecord::Guaranteed { cite } => !exact && cite == GUARANTEED_CITE,
        };
        ensure(ok, || format!("pair ({}, {}): evidence inconsistent", p.i, p.j))?;
    }
    Ok(())
}

fn check_defining(c: &RealizationCertificate, dc: &Decoded, df: &DecodedField) -> Result<(), String> {
    let s = BiRing::new(RationalField).specialize_t(&dc.q, &df.t0);
    ensure(s == df.f, || "not q(t0, X)".into())?;
    let fr = c.fields.iter().find(|f| f.t0 == crate::exact::render_rational(&df.t0)).expect("present");
    ensure(fr.degree == df.e.degree(), || "degree field disagrees".into())
}

fn check_embedding(c: &RealizationCertificate, dc: &Decoded, df: &DecodedField) -> Result<(), String> {
    let e = &df.e;
    ensure(e.eval_q(dc.l.modulus(), &df.theta).is_zero(), || "theta is not a root of the modulus of L".into())?;
    let shift = c.primitive_element.shift;
    let z = e.add(&df.x, &e.mul(&e.from_int(shift), &df.theta));
    ensure(z == e.generator(), || "x + c·theta is not the generator".into())?;
    let a = e.sub(&e.from_rational(&df.t0), &e.eval_q(dc.y.coords(), &df.theta));
    let x = &df.x;
    let v = e.add(&e.add(&e.mul(&e.mul(x, x), x), &e.mul(&a, x)), &a);
    ensure(v.is_zero(), || "x is not a root of the cubic".into())
}

fn check_maps(df: &DecodedField, order: usize) -> Result<(), String> {
    let e = &df.e;
    ensure(df.maps.len() == order, || format!("{} automorphisms, expected {order}", df.maps.len()))?;
    ensure(df.maps.first() == Some(&e.generator()), || "first automorphism is not the identity".into())?;
    let distinct: HashSet<&NfElem> = df.maps.iter().collect();
    ensure(distinct.len() == df.maps.len(), || "automorphisms repeat".into())?;
    for (i, m) in df.maps.iter().enumerate() {
        ensure(e.eval_q(&df.f, m).is_zero(), || format!("image {i} is not a root of the defining polynomial"))?;
    }
    Ok(())
}

fn check_table(fr: &FieldRecord, df: &DecodedField) -> Result<(), String> {
    let t = AutomorphismTable::from_maps(&df.e, df.maps.clone()).map_err(|e| e.to_string())?;
    ensure(t.maps() == df.maps.as_slice(), || "automorphisms not in canonical order".into())?;
    for (i, (a, b)) in t.table().iter().zip(&fr.table).enumerate() {
        if let Some(j) = (0..a.len()).find(|&j| b.get(j) != Some(&a[j])) {
            return Err(format!("entry ({i}, {j}) is {:?}, composition gives {}", b.get(j), a[j]));
        }
    }
    ensure(t.table().len() == fr.table.len(), || "table has the wrong size".into())
}

fn check_witness(fr: &FieldRecord, g: &AbstractGroup, names: &[String]) -> Result<(), String> {
    let m = g.order();
    let w = &fr.witness;
    let t = &fr.table;
    ensure(w.len() == m, || format!("witness has {} entries, group order {m}", w.len()))?;
    ensure(t.len() == m && t.iter().all(|r| r.len() == m && r.iter().all(|&v| v < m)), || {
        "table shape does not match the group".into()
    })?;
    let hit: HashSet<usize> = w.iter().copied().filter(|&v| v < m).collect();
    ensure(hit.len() == m, || "witness is not a bijection".into())?;
    for a in 0..m {
        for b in 0..m {
            if w[g.mul(a, b)] != t[w[a]][w[b]] {
                return Err(format!("fails at the pair ({}, {})", names[a], names[b]));
            }
        }
    }
    Ok(())
}

fn check_lifts(fr: &FieldRecord, df: &DecodedField, dc: &Decoded, order: usize) -> Result<(), String> {
    let sigmas: Vec<&Permutation> = dc.galois.iter().map(|(p, _)| p).collect();
    ensure(df.sigmas.iter().collect::<Vec<_>>() == sigmas, || "lifts do not follow the Galois group".into())?;
    let mut total = 0;
    for (l, s) in fr.lifts.iter().zip(&df.sigmas) {
        let inside = dc.preimage.contains(s);
        ensure(l.in_preimage == inside, || format!("{s}: preimage membership misreported"))?;
        ensure(l.roots == usize::from(inside), || format!("{s}: {} roots, tower predicts {}", l.roots, u8::from(inside)))?;
        total += l.roots;
    }
    ensure(total == order, || format!("{total} lifts, expected {order}"))
}

/// Re-runs the pipeline with the recorded options and compares section by
/// section.
fn deep_checks(c: &RealizationCertificate, group: &PermGroup, rep: &mut ValidationReport) {
    let s = &c.search;
    let distinct = match s.distinct_mode.as_str() {
        "exact" => DistinctMode::Exact,
        "assumed" => DistinctMode::Assumed,
        _ => DistinctMode::Auto,
    };
    let opts = RunOptions { count: s.count, t_max: s.t_max, distinct, max_splitting_degree: s.max_splitting_degree };
    let fresh = match run(group, &opts) {
        Ok(r) => RealizationCertificate::from_realization(&c.group.spec, &r, &opts),
        Err(e) => {
            rep.record("deep: pipeline", Err(e.to_string()));
            return;
        }
    };
    let same = |ok: bool, what: &str| ensure(ok, || format!("{what} differs from the recomputation"));
    rep.record(
        "deep: state",
        same(
            fresh.splitting_field == c.splitting_field
                && fresh.parameter == c.parameter
                && fresh.primitive_element == c.primitive_element
                && fresh.bad_set == c.bad_set,
            "state",
        ),
    );
    rep.record("deep: s3", same(fresh.s3 == c.s3, "S3 certificate"));
    rep.record("deep: transcript", same(fresh.search == c.search, "search transcript"));
    for (k, fr) in c.fields.iter().enumerate() {
        let ok = fresh.fields.get(k) == Some(fr);
        rep.record(format!("deep: field {} (t0 = {})", k + 1, fr.t0), same(ok, "field"));
    }
    rep.record("deep: distinctness", same(fresh.pairs == c.pairs, "pair evidence"));
    rep.record("deep: metadata", same(fresh.determinism == c.determinism && fresh.version == c.version, "metadata"));
    rep.record("deep: group", same(fresh.group == c.group, "group"));
    rep.record("deep: whole certificate", same(fresh == *c, "certificate"));
}

#[cfg(test)]
mod tests {
    use super::super::tests::trivial_certificate;
    use super::*;

    #[test]
    fn trivial_certificate_validates() {
        let cert = trivial_certificate();
        let rep = validate(&cert, true).unwrap();
        assert!(rep.passed(), "{rep}");
        assert!(rep.checks.iter().any(|c| c.name.starts_with("deep:")));
    }

    #[test]
    fn tampered_s2_table() {
        let spec = crate::groupspec::named_group("S2").unwrap();
        let opts = RunOptions { count: 1, ..RunOptions::default() };
        let r = run(&spec.group().unwrap(), &opts).unwrap();
        let mut cert = RealizationCertificate::from_realization(&spec, &r, &opts);
        assert!(validate(&cert, false).unwrap().passed());
        cert.fields[0].table[1][1] = 1;
        let rep = validate(&cert, false).unwrap();
        let hom = rep.checks.iter().find(|c| c.name.ends_with("witness homomorphism")).unwrap();
        assert!(!hom.passed);
        assert!(hom.detail.contains("((1 2), (1 2))"), "{}", hom.detail);
    }

    #[test]
    fn tampered_polynomial_and_schema() {
        let mut cert = trivial_certificate();
        cert.fields[1].defining_polynomial[0] = "3".into();
        let rep = validate(&cert, false).unwrap();
        assert!(rep.failures().any(|c| c.name.contains("defining polynomial")));
        cert.fields[1].defining_polynomial[0] = "x".into();
        cert.parameter.y = vec!["1/0".into()];
        match validate(&cert, false) {
            Err(CertificateError::Schema(v)) => {
                assert!(v.iter().any(|e| e.starts_with("fields[1]")));
                assert!(v.iter().any(|e| e.starts_with("parameter.y")));
            }
            other => panic!("{other:?}"),
        }
    }
}
